//! Point sampling on projective models over GF(q).
//!
//! The default strategy slices the model by `dim` random hyperplanes and
//! enumerates the remaining linear subspace, keeping the points that lie
//! on the model. Points may also be supplied directly (e.g. loaded from a
//! file or produced by a parametrization).

use std::collections::HashSet;

use crate::error::AlgError;
use crate::exactalg::field::{FieldElement, FieldTag};
use crate::exactalg::matrix::Matrix;
use crate::pipeline::model::VarietyModel;
use crate::util::XorShift64;

#[derive(Clone, Debug)]
pub enum SampleStrategy {
    /// Use the given points verbatim (verified against the ideal).
    Provided(Vec<Vec<FieldElement>>),
    /// Random linear slicing to dimension zero plus enumeration of the
    /// sliced subspace.
    Slicing,
}

impl SampleStrategy {
    fn tag(&self) -> &'static str {
        match self {
            SampleStrategy::Provided(_) => "provided",
            SampleStrategy::Slicing => "slicing",
        }
    }
}

#[derive(Clone, Debug)]
pub struct PointSample {
    pub tag: FieldTag,
    pub points: Vec<Vec<FieldElement>>,
    pub seed: u64,
    pub strategy: String,
}

impl PointSample {
    /// Split off the last `n` points into a separate sample (for fresh
    /// re-verification of interpolated forms).
    pub fn split_off(&mut self, n: usize) -> PointSample {
        let at = self.points.len().saturating_sub(n);
        PointSample {
            tag: self.tag,
            points: self.points.split_off(at),
            seed: self.seed,
            strategy: self.strategy.clone(),
        }
    }
}

/// Scale a projective point so its first nonzero coordinate is 1.
fn normalize_point(point: &[FieldElement]) -> Result<Vec<FieldElement>, AlgError> {
    let pivot = point
        .iter()
        .find(|c| !c.is_zero())
        .ok_or_else(|| AlgError::Pipeline("zero vector is not a projective point".into()))?;
    let inv = pivot.inv()?;
    point.iter().map(|c| c.mul(&inv)).collect()
}

fn on_model(model: &VarietyModel, point: &[FieldElement]) -> Result<bool, AlgError> {
    for f in &model.ideal {
        if !f.eval(point)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sample `count` distinct projective points on `model`.
pub fn sample_points(
    model: &VarietyModel,
    count: usize,
    strategy: SampleStrategy,
    seed: u64,
) -> Result<PointSample, AlgError> {
    let strategy_tag = strategy.tag().to_string();
    let mut found: Vec<Vec<FieldElement>> = Vec::new();
    let mut seen: HashSet<Vec<FieldElement>> = HashSet::new();

    match strategy {
        SampleStrategy::Provided(points) => {
            for p in points {
                let p = normalize_point(&p)?;
                if !on_model(model, &p)? {
                    return Err(AlgError::Pipeline(format!(
                        "provided point does not lie on {}",
                        model.name
                    )));
                }
                if seen.insert(p.clone()) {
                    found.push(p);
                }
                if found.len() == count {
                    break;
                }
            }
        }
        SampleStrategy::Slicing => {
            let q = match model.tag {
                FieldTag::Prime(q) => q,
                _ => {
                    return Err(AlgError::Pipeline(
                        "slicing sampler requires a GF(q) model".into(),
                    ))
                }
            };
            let dim = model.dimension.ok_or_else(|| {
                AlgError::Pipeline(format!(
                    "model {} has no expected dimension for slicing",
                    model.name
                ))
            })?;
            let n = model.coordinates.len();
            if dim + 1 > n {
                return Err(AlgError::DimensionMismatch {
                    expected: n,
                    got: dim + 1,
                });
            }
            // Enumeration budget per slice: points of P^{n-dim-1}(GF(q)).
            let slice_points = projective_count(q, n - dim);
            const BUDGET: u64 = 4_000_000;
            if slice_points > BUDGET {
                return Err(AlgError::Overflow {
                    limit: BUDGET as usize,
                });
            }
            let mut rng = XorShift64::new(seed);
            let max_slices = 50 + 4 * count;
            for _ in 0..max_slices {
                if found.len() >= count {
                    break;
                }
                // dim random hyperplanes
                let rows: Vec<Vec<FieldElement>> = (0..dim)
                    .map(|_| {
                        (0..n)
                            .map(|_| FieldElement::from_integer(rng.below(q) as i64, model.tag))
                            .collect()
                    })
                    .collect();
                let h = Matrix::from_rows(rows, model.tag)?;
                let basis = h.kernel()?;
                if basis.len() != n - dim {
                    continue; // degenerate slice
                }
                for coeffs in projective_reps(q, basis.len(), model.tag) {
                    let mut x = vec![FieldElement::zero(model.tag); n];
                    for (c, b) in coeffs.iter().zip(&basis) {
                        if c.is_zero() {
                            continue;
                        }
                        for (xi, bi) in x.iter_mut().zip(b) {
                            *xi = xi.add(&c.mul(bi)?)?;
                        }
                    }
                    if x.iter().all(|c| c.is_zero()) {
                        continue;
                    }
                    if on_model(model, &x)? {
                        let p = normalize_point(&x)?;
                        if seen.insert(p.clone()) {
                            found.push(p);
                            if found.len() >= count {
                                break;
                            }
                        }
                    }
                }
            }
        }
    }

    if found.len() < count {
        return Err(AlgError::Pipeline(format!(
            "sampling budget exhausted: found {} of {count} points on {}",
            found.len(),
            model.name
        )));
    }
    Ok(PointSample {
        tag: model.tag,
        points: found,
        seed,
        strategy: strategy_tag,
    })
}

fn projective_count(q: u64, dim_plus_one: usize) -> u64 {
    // (q^k - 1)/(q - 1) for k coordinates, saturating
    let mut total: u64 = 0;
    let mut power: u64 = 1;
    for _ in 0..dim_plus_one {
        total = total.saturating_add(power);
        power = power.saturating_mul(q);
    }
    total
}

/// Canonical representatives of P^{k-1}(GF(q)): first nonzero entry 1.
fn projective_reps(q: u64, k: usize, tag: FieldTag) -> Vec<Vec<FieldElement>> {
    let mut out = Vec::new();
    for lead in 0..k {
        // entries before `lead` are zero, entry at `lead` is one, the rest
        // range over the whole field
        let free = k - lead - 1;
        let total = (q as u128).pow(free as u32);
        for mut idx in 0..total {
            let mut v = vec![FieldElement::zero(tag); k];
            v[lead] = FieldElement::one(tag);
            for slot in v.iter_mut().skip(lead + 1) {
                *slot = FieldElement::from_integer((idx % q as u128) as i64, tag);
                idx /= q as u128;
            }
            out.push(v);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse::{parse_poly, parse_var_list};

    fn conic_model() -> VarietyModel {
        let vars = parse_var_list("x y z").unwrap();
        let tag = FieldTag::Prime(7);
        let f = parse_poly("x^2 + y*z", &vars, tag).unwrap();
        let mut m = VarietyModel::new("conic", vars, vec![f], tag).unwrap();
        m.dimension = Some(1);
        m
    }

    #[test]
    fn conic_has_exactly_eight_points() {
        // x^2 + yz over GF(7): a smooth conic has q + 1 = 8 points.
        let m = conic_model();
        let s = sample_points(&m, 8, SampleStrategy::Slicing, 5).unwrap();
        assert_eq!(s.points.len(), 8);
        for p in &s.points {
            assert!(m.ideal[0].eval(p).unwrap().is_zero());
        }
        // all distinct after normalization
        let set: HashSet<_> = s.points.iter().cloned().collect();
        assert_eq!(set.len(), 8);
        // a ninth point cannot exist
        assert!(sample_points(&m, 9, SampleStrategy::Slicing, 5).is_err());
    }

    #[test]
    fn twisted_cubic_sampling() {
        let vars = parse_var_list("x y z u").unwrap();
        let tag = FieldTag::Prime(43);
        let ideal = ["x*z - y^2", "x*u - y*z", "y*u - z^2"]
            .iter()
            .map(|t| parse_poly(t, &vars, tag).unwrap())
            .collect();
        let mut m = VarietyModel::new("tc", vars, ideal, tag).unwrap();
        m.dimension = Some(1);
        // the twisted cubic over GF(43) has 44 points
        let s = sample_points(&m, 40, SampleStrategy::Slicing, 11).unwrap();
        assert_eq!(s.points.len(), 40);
        for p in &s.points {
            for f in &m.ideal {
                assert!(f.eval(p).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn provided_points_are_verified() {
        let m = conic_model();
        let tag = m.tag;
        let good = vec![
            FieldElement::from_integer(0, tag),
            FieldElement::from_integer(1, tag),
            FieldElement::from_integer(0, tag),
        ];
        let bad = vec![
            FieldElement::from_integer(1, tag),
            FieldElement::from_integer(1, tag),
            FieldElement::from_integer(1, tag),
        ];
        let s = sample_points(&m, 1, SampleStrategy::Provided(vec![good]), 0).unwrap();
        assert_eq!(s.points.len(), 1);
        assert!(sample_points(&m, 1, SampleStrategy::Provided(vec![bad]), 0).is_err());
    }

    #[test]
    fn deterministic_given_seed() {
        let m = conic_model();
        let a = sample_points(&m, 5, SampleStrategy::Slicing, 3).unwrap();
        let b = sample_points(&m, 5, SampleStrategy::Slicing, 3).unwrap();
        assert_eq!(a.points, b.points);
    }
}
