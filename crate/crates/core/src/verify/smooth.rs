//! Jacobian smoothness checks over GF(p).
//!
//! The singular locus of a model of expected dimension `d` in projective
//! ambient dimension `n` is cut out by the model's ideal together with the
//! `c x c` minors of the Jacobian matrix, `c = n - d`. The model is smooth
//! iff that locus is projectively empty, which is read off the Hilbert
//! polynomial of the singular-locus ideal (dimension -1).

use crate::error::AlgError;
use crate::exactalg::field::{FieldElement, FieldTag};
use crate::exactalg::poly::MultiPoly;
use crate::pipeline::model::VarietyModel;
use crate::util::XorShift64;

use super::groebner::groebner_basis;
use super::hilbert::hilbert_polynomial;
use super::order::MonomialOrder;

#[derive(Clone, Debug)]
pub struct SmoothnessReport {
    pub smooth: bool,
    /// Projective dimension of the singular locus; -1 when empty.
    pub singular_locus_dimension: i64,
    pub prime: u64,
    /// Set when the generator set was too large for exhaustive minors and
    /// random linear combinations of generators were used instead.
    pub probabilistic: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct SmoothnessOptions {
    /// Maximum number of minors to expand exhaustively.
    pub minor_budget: usize,
    /// Seed for the random generator combinations beyond the budget.
    pub seed: u64,
}

impl Default for SmoothnessOptions {
    fn default() -> Self {
        SmoothnessOptions {
            minor_budget: 20_000,
            seed: 1,
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        // rightmost position that can still advance
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Determinant of a square matrix of polynomials by Laplace expansion
/// along the first row.
fn poly_det(m: &[Vec<MultiPoly>]) -> Result<MultiPoly, AlgError> {
    let n = m.len();
    if n == 1 {
        return Ok(m[0][0].clone());
    }
    let vars = m[0][0].vars.clone();
    let tag = m[0][0].tag;
    let mut acc = MultiPoly::zero(vars, tag);
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<MultiPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter_map(|(c, x)| (c != j).then(|| x.clone()))
                    .collect()
            })
            .collect();
        let cof = entry.mul(&poly_det(&minor)?)?;
        acc = if j % 2 == 0 {
            acc.add(&cof)?
        } else {
            acc.sub(&cof)?
        };
    }
    Ok(acc)
}

/// Jacobian smoothness check of `model` over GF(p), against the stated
/// expected projective dimension.
pub fn smoothness_check_mod_p(
    model: &VarietyModel,
    expected_dim: usize,
    options: SmoothnessOptions,
) -> Result<SmoothnessReport, AlgError> {
    let p = match model.tag {
        FieldTag::Prime(p) => p,
        _ => {
            return Err(AlgError::Pipeline(
                "smoothness check requires a GF(p) model".into(),
            ))
        }
    };
    let nvars = model.coordinates.len();
    let ambient = model.ambient_dim();
    if expected_dim >= ambient {
        return Err(AlgError::Pipeline(format!(
            "expected dimension {expected_dim} is not below ambient {ambient}"
        )));
    }
    let codim = ambient - expected_dim;
    let gens: Vec<&MultiPoly> = model.ideal.iter().filter(|f| !f.is_zero()).collect();
    if gens.len() < codim {
        return Err(AlgError::Pipeline(format!(
            "ideal has {} generators, fewer than codimension {codim}",
            gens.len()
        )));
    }

    // Rows of the Jacobian: gradients of either all generators or (beyond
    // the budget) codim random combinations of them.
    let exhaustive =
        binomial(gens.len(), codim).saturating_mul(binomial(nvars, codim)) <= options.minor_budget;
    let row_polys: Vec<MultiPoly> = if exhaustive {
        gens.iter().map(|f| (*f).clone()).collect()
    } else {
        let mut rng = XorShift64::new(options.seed);
        (0..codim)
            .map(|_| {
                let mut acc = MultiPoly::zero(model.coordinates.clone(), model.tag);
                for f in &gens {
                    let c = FieldElement::from_integer(rng.below(p) as i64, model.tag);
                    acc = acc.add(&f.scale(&c)?)?;
                }
                Ok(acc)
            })
            .collect::<Result<_, AlgError>>()?
    };
    let jac: Vec<Vec<MultiPoly>> = row_polys
        .iter()
        .map(|f| f.gradient())
        .collect::<Result<_, AlgError>>()?;

    let mut singular: Vec<MultiPoly> = model.ideal.clone();
    for rows in combinations(jac.len(), codim) {
        for cols in combinations(nvars, codim) {
            let sub: Vec<Vec<MultiPoly>> = rows
                .iter()
                .map(|&r| cols.iter().map(|&c| jac[r][c].clone()).collect())
                .collect();
            let d = poly_det(&sub)?;
            if !d.is_zero() {
                singular.push(d);
            }
        }
    }

    let gb = groebner_basis(&singular, MonomialOrder::Degrevlex)?;
    let data = hilbert_polynomial(&gb, 2)?;
    Ok(SmoothnessReport {
        smooth: data.dimension < 0,
        singular_locus_dimension: data.dimension,
        prime: p,
        probabilistic: !exhaustive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse::{parse_poly, parse_var_list};

    fn model_of(texts: &[&str], vars: &str, p: u64) -> VarietyModel {
        let vars = parse_var_list(vars).unwrap();
        let tag = FieldTag::Prime(p);
        let ideal = texts
            .iter()
            .map(|t| parse_poly(t, &vars, tag).unwrap())
            .collect();
        VarietyModel::new("test", vars, ideal, tag).unwrap()
    }

    #[test]
    fn smooth_conic() {
        let m = model_of(&["x^2 + y^2 + z^2"], "x y z", 7);
        let r = smoothness_check_mod_p(&m, 1, SmoothnessOptions::default()).unwrap();
        assert!(r.smooth);
        assert_eq!(r.singular_locus_dimension, -1);
        assert_eq!(r.prime, 7);
        assert!(!r.probabilistic);
    }

    #[test]
    fn nodal_cubic_is_singular_at_point() {
        let m = model_of(&["y^2*z - x^3 - x^2*z"], "x y z", 101);
        let r = smoothness_check_mod_p(&m, 1, SmoothnessOptions::default()).unwrap();
        assert!(!r.smooth);
        // one singular point, [0:0:1]
        assert_eq!(r.singular_locus_dimension, 0);
        // the node satisfies all three partials
        let f = &m.ideal[0];
        let point: Vec<FieldElement> = [0, 0, 1]
            .iter()
            .map(|&v| FieldElement::from_integer(v, m.tag))
            .collect();
        for d in f.gradient().unwrap() {
            assert!(d.eval(&point).unwrap().is_zero());
        }
    }

    #[test]
    fn twisted_cubic_is_smooth() {
        let m = model_of(
            &["x*z - y^2", "x*u - y*z", "y*u - z^2"],
            "x y z u",
            31,
        );
        let r = smoothness_check_mod_p(&m, 1, SmoothnessOptions::default()).unwrap();
        assert!(r.smooth);
    }

    #[test]
    fn two_lines_cross_at_a_point() {
        let m = model_of(&["x*y"], "x y z", 7);
        let r = smoothness_check_mod_p(&m, 1, SmoothnessOptions::default()).unwrap();
        assert!(!r.smooth);
        assert_eq!(r.singular_locus_dimension, 0);
    }

    #[test]
    fn probabilistic_path_agrees_on_smooth_quadric() {
        let m = model_of(&["x*u - y*z"], "x y z u", 43);
        let tight = SmoothnessOptions {
            minor_budget: 0,
            seed: 7,
        };
        let r = smoothness_check_mod_p(&m, 2, tight).unwrap();
        assert!(r.probabilistic);
        assert!(r.smooth);
    }

    #[test]
    fn wrong_field_rejected() {
        let vars = parse_var_list("x y z").unwrap();
        let tag = FieldTag::Rational;
        let f = parse_poly("x^2 + y^2 + z^2", &vars, tag).unwrap();
        let m = VarietyModel::new("q", vars, vec![f], tag).unwrap();
        assert!(smoothness_check_mod_p(&m, 1, SmoothnessOptions::default()).is_err());
    }
}
