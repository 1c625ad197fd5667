//! Projective variety models: named coordinates, a homogeneous ideal, and
//! the group actions carried along the pipeline.

use num_rational::BigRational;

use crate::equivariant::action::ActionGen;
use crate::error::AlgError;
use crate::exactalg::field::FieldTag;
use crate::exactalg::poly::MultiPoly;

/// A projective model: coordinates, homogeneous ideal generators, and the
/// actions declared on the ambient space.
#[derive(Clone, Debug)]
pub struct VarietyModel {
    pub name: String,
    /// Coordinate names; ambient dimension is `coordinates.len() - 1`.
    pub coordinates: Vec<String>,
    pub ideal: Vec<MultiPoly>,
    pub tag: FieldTag,
    /// Named actions (e.g. `("g3", ...)`) on the coordinates.
    pub actions: Vec<(String, ActionGen)>,
    /// Expected projective dimension, when known (used by the sampler
    /// and the smoothness report).
    pub dimension: Option<usize>,
    /// Degree of the embedding line bundle, when known.
    pub line_bundle_degree: Option<i64>,
    /// Expected Hilbert polynomial, ascending coefficients, when known.
    pub expected_hilbert: Option<Vec<BigRational>>,
}

impl VarietyModel {
    pub fn new(
        name: impl Into<String>,
        coordinates: Vec<String>,
        ideal: Vec<MultiPoly>,
        tag: FieldTag,
    ) -> Result<Self, AlgError> {
        for f in &ideal {
            if f.vars != coordinates {
                return Err(AlgError::VariableMismatch(format!(
                    "ideal generator over [{}] does not match model coordinates",
                    f.vars.join(", ")
                )));
            }
            if f.tag != tag {
                return Err(AlgError::TagMismatch { left: tag, right: f.tag });
            }
            if !f.is_homogeneous() {
                return Err(AlgError::NotHomogeneous);
            }
        }
        Ok(VarietyModel {
            name: name.into(),
            coordinates,
            ideal,
            tag,
            actions: Vec::new(),
            dimension: None,
            line_bundle_degree: None,
            expected_hilbert: None,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.coordinates.len() - 1
    }

    pub fn with_action(mut self, name: impl Into<String>, gen: ActionGen) -> Self {
        self.actions.push((name.into(), gen));
        self
    }

    pub fn action(&self, name: &str) -> Option<&ActionGen> {
        self.actions
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, g)| g)
    }

    /// Check that every declared action maps each ideal generator to a
    /// polynomial that is a linear combination of the generators' span in
    /// the same degree. This is verified exactly by membership of the
    /// image in the linear span of the generators of that degree.
    pub fn check_action_stability(&self) -> Result<(), AlgError> {
        for (name, gen) in &self.actions {
            for f in &self.ideal {
                let image = gen.act_on_form(f)?;
                if !in_linear_span(&image, &self.ideal)? {
                    return Err(AlgError::Pipeline(format!(
                        "action {name} does not preserve the ideal of {}",
                        self.name
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Whether `f` is a linear combination of the elements of `space` having
/// the same total degree as `f`.
pub fn in_linear_span(f: &MultiPoly, space: &[MultiPoly]) -> Result<bool, AlgError> {
    if f.is_zero() {
        return Ok(true);
    }
    let deg = f.total_degree();
    // Rows kept in echelon form: each has a pivot monomial not occurring
    // as a pivot of any earlier row.
    let mut rows: Vec<MultiPoly> = Vec::new();
    let reduce = |mut g: MultiPoly, rows: &[MultiPoly]| -> Result<MultiPoly, AlgError> {
        for row in rows {
            let (pe, pc) = row.terms().next().expect("echelon rows are nonzero");
            let (pe, pc) = (pe.clone(), pc.clone());
            let gc = g.coeff(&pe);
            if !gc.is_zero() {
                g = g.sub(&row.scale(&gc.div(&pc)?)?)?;
            }
        }
        Ok(g)
    };
    for g in space {
        if g.is_zero() || g.total_degree() != deg {
            continue;
        }
        let r = reduce(g.clone(), &rows)?;
        if !r.is_zero() {
            // Keep rows sorted by pivot monomial so a single reduction
            // pass suffices: subtracting a row only introduces monomials
            // larger than its pivot.
            let pivot = r.terms().next().unwrap().0.clone();
            let pos = rows
                .iter()
                .position(|row| row.terms().next().unwrap().0 > &pivot)
                .unwrap_or(rows.len());
            rows.insert(pos, r);
        }
    }
    Ok(reduce(f.clone(), &rows)?.is_zero())
}
