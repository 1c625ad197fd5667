//! Interpolation of vanishing forms from point samples: the kernel of the
//! evaluation matrix over a (possibly equivariance-filtered) monomial
//! basis, re-verified on a disjoint fresh sample.

use crate::error::AlgError;
use crate::exactalg::matrix::Matrix;
use crate::exactalg::poly::{monomials_of_degree, Exponents, MultiPoly};
use crate::pipeline::sample::PointSample;

/// Forms of the given degree in `vars` vanishing on every training point,
/// re-verified against the disjoint `check` sample. `filter` restricts the
/// monomial basis (e.g. to a weight or parity eigenspace).
pub fn interpolate_vanishing_forms(
    train: &PointSample,
    check: &PointSample,
    degree: u16,
    vars: &[String],
    filter: Option<&dyn Fn(&Exponents) -> bool>,
) -> Result<Vec<MultiPoly>, AlgError> {
    let nvars = vars.len();
    let basis: Vec<Exponents> = monomials_of_degree(nvars, degree)
        .into_iter()
        .filter(|e| filter.map_or(true, |f| f(e)))
        .collect();
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    // Safety margin: a quarter more points than unknowns.
    let needed = basis.len() + basis.len().div_ceil(4);
    if train.points.len() < needed {
        return Err(AlgError::Pipeline(format!(
            "interpolation needs at least {needed} points for {} monomials, got {}",
            basis.len(),
            train.points.len()
        )));
    }

    let mut rows = Vec::with_capacity(train.points.len());
    for p in &train.points {
        if p.len() != nvars {
            return Err(AlgError::DimensionMismatch {
                expected: nvars,
                got: p.len(),
            });
        }
        let mut row = Vec::with_capacity(basis.len());
        for exp in &basis {
            let mut v = crate::exactalg::field::FieldElement::one(train.tag);
            for (c, &e) in p.iter().zip(exp.iter()) {
                for _ in 0..e {
                    v = v.mul(c)?;
                }
            }
            row.push(v);
        }
        rows.push(row);
    }
    let eval = Matrix::from_rows(rows, train.tag)?;
    let kernel = eval.kernel()?;

    let mut forms = Vec::with_capacity(kernel.len());
    for coeffs in kernel {
        let mut f = MultiPoly::zero(vars.to_vec(), train.tag);
        for (exp, c) in basis.iter().zip(coeffs) {
            if !c.is_zero() {
                f.add_term(exp.clone(), c)?;
            }
        }
        forms.push(f.normalized()?);
    }

    // Fresh-sample re-verification.
    for p in &check.points {
        for f in &forms {
            if !f.eval(p)?.is_zero() {
                return Err(AlgError::Pipeline(
                    "interpolated form fails on the fresh verification sample".into(),
                ));
            }
        }
    }
    Ok(forms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::field::{FieldElement, FieldTag};
    use crate::exactalg::parse::{parse_poly, parse_var_list};
    use crate::pipeline::model::{in_linear_span, VarietyModel};
    use crate::pipeline::sample::{sample_points, SampleStrategy};

    fn span_equal(a: &[MultiPoly], b: &[MultiPoly]) -> bool {
        a.len() == b.len()
            && a.iter().all(|f| in_linear_span(f, b).unwrap())
            && b.iter().all(|f| in_linear_span(f, a).unwrap())
    }

    #[test]
    fn twisted_cubic_quadrics_recovered() {
        let vars = parse_var_list("x y z u").unwrap();
        let tag = FieldTag::Prime(43);
        let expected: Vec<MultiPoly> = ["x*z - y^2", "x*u - y*z", "y*u - z^2"]
            .iter()
            .map(|t| parse_poly(t, &vars, tag).unwrap())
            .collect();
        let mut m =
            VarietyModel::new("tc", vars.clone(), expected.clone(), tag).unwrap();
        m.dimension = Some(1);
        let mut sample = sample_points(&m, 20, SampleStrategy::Slicing, 17).unwrap();
        let check = sample.split_off(5);
        let forms = interpolate_vanishing_forms(&sample, &check, 2, &vars, None).unwrap();
        assert_eq!(forms.len(), 3);
        assert!(span_equal(&forms, &expected));
    }

    #[test]
    fn veronese_quadrics_recovered() {
        // Veronese surface in P^5: images of (a:b:c) under degree-2
        // monomials a^2, ab, ac, b^2, bc, c^2.
        let tag = FieldTag::Prime(43);
        let vars = parse_var_list("x0 x1 x2 x3 x4 x5").unwrap();
        let mut points = Vec::new();
        for a in 0..43i64 {
            for b in 0..43i64 {
                for c in [0i64, 1] {
                    if a == 0 && b == 0 && c == 0 {
                        continue;
                    }
                    // projective reps: c = 1 or (c = 0, b = 1) or (b=c=0, a=1)
                    if c == 0 && b != 1 && !(b == 0 && a == 1) {
                        continue;
                    }
                    let v: Vec<FieldElement> = [a * a, a * b, a * c, b * b, b * c, c * c]
                        .iter()
                        .map(|&n| FieldElement::from_integer(n, tag))
                        .collect();
                    points.push(v);
                }
            }
        }
        // deterministic shuffle via modular stride
        let stride = 389; // coprime to the point count
        let reordered: Vec<Vec<FieldElement>> = (0..points.len())
            .map(|i| points[(i * stride) % points.len()].clone())
            .collect();
        let train = PointSample {
            tag,
            points: reordered[..40].to_vec(),
            seed: 0,
            strategy: "provided".into(),
        };
        let check = PointSample {
            tag,
            points: reordered[40..80].to_vec(),
            seed: 0,
            strategy: "provided".into(),
        };
        let forms = interpolate_vanishing_forms(&train, &check, 2, &vars, None).unwrap();
        assert_eq!(forms.len(), 6);
        // brute-force oracle: the classical 2x2 minors of the symmetric
        // matrix [[x0,x1,x2],[x1,x3,x4],[x2,x4,x5]]
        let expected: Vec<MultiPoly> = [
            "x0*x3 - x1^2",
            "x0*x4 - x1*x2",
            "x1*x4 - x2*x3",
            "x0*x5 - x2^2",
            "x1*x5 - x2*x4",
            "x3*x5 - x4^2",
        ]
        .iter()
        .map(|t| parse_poly(t, &vars, tag).unwrap())
        .collect();
        assert!(span_equal(&forms, &expected));
    }

    #[test]
    fn too_few_points_rejected() {
        let tag = FieldTag::Prime(7);
        let vars = parse_var_list("x y").unwrap();
        let sample = PointSample {
            tag,
            points: vec![vec![
                FieldElement::one(tag),
                FieldElement::from_integer(2, tag),
            ]],
            seed: 0,
            strategy: "provided".into(),
        };
        let empty = PointSample {
            tag,
            points: vec![],
            seed: 0,
            strategy: "provided".into(),
        };
        assert!(interpolate_vanishing_forms(&sample, &empty, 2, &vars, None).is_err());
    }

    #[test]
    fn monomial_filter_restricts_basis() {
        // On the conic x^2 + yz, restrict to monomials with even power of
        // x: the only degree-2 relation is still found.
        let vars = parse_var_list("x y z").unwrap();
        let tag = FieldTag::Prime(43);
        let f = parse_poly("x^2 + y*z", &vars, tag).unwrap();
        let mut m = VarietyModel::new("conic", vars.clone(), vec![f.clone()], tag).unwrap();
        m.dimension = Some(1);
        let mut sample = sample_points(&m, 30, SampleStrategy::Slicing, 23).unwrap();
        let check = sample.split_off(10);
        let filter = |e: &Exponents| e[0] % 2 == 0;
        let forms =
            interpolate_vanishing_forms(&sample, &check, 2, &vars, Some(&filter)).unwrap();
        assert_eq!(forms.len(), 1);
        assert!(span_equal(&forms, &[f]));
    }
}
