//! The double cover W -> Y, weight decomposition of sections, and the
//! relations of the emitted cyclic-cover model.

use crate::equivariant::action::ActionGen;
use crate::error::AlgError;
use crate::exactalg::field::{sqrt_mod, FieldElement, FieldTag, PrimeElem};
use crate::exactalg::matrix::Matrix;
use crate::exactalg::poly::{monomials_of_degree, Exponents, MultiPoly};
use crate::pipeline::interpolate::interpolate_vanishing_forms;
use crate::pipeline::model::{in_linear_span, VarietyModel};
use crate::pipeline::multable::MulTable;
use crate::pipeline::sample::{sample_points, PointSample, SampleStrategy};

/// Build the double cover of `y` branched along the degree-2 form
/// `branch`: sample points of `y`, keep those where the branch value is a
/// square, lift each with both square roots as the value of `new_coord`,
/// and interpolate the relations of the lifted point set.
///
/// The returned model carries the covering involution (negation of the
/// new coordinate) as action "iota", and every relation generator is
/// parity-pure for it. The defining relation new^2 - branch is checked to
/// lie in the interpolated span.
pub fn build_double_cover(
    y: &VarietyModel,
    new_coord: &str,
    branch: &MultiPoly,
    relation_degree: u16,
    sample_count: usize,
    seed: u64,
) -> Result<VarietyModel, AlgError> {
    let q = match y.tag {
        FieldTag::Prime(q) => q,
        tag => {
            return Err(AlgError::TagMismatch {
                left: tag,
                right: FieldTag::Prime(0),
            })
        }
    };
    if branch.vars != y.coordinates || branch.tag != y.tag {
        return Err(AlgError::Pipeline("branch form is not a form on Y".into()));
    }
    if branch.total_degree() != Some(2) || !branch.is_homogeneous() {
        return Err(AlgError::Pipeline("branch form must be a quadric".into()));
    }

    let base = sample_points(y, sample_count, SampleStrategy::Slicing, seed)?;
    let mut lifted: Vec<Vec<FieldElement>> = Vec::new();
    for p in &base.points {
        let b = match branch.eval(p)? {
            FieldElement::Prime(PrimeElem { value, .. }) => value,
            _ => unreachable!("tag checked above"),
        };
        if let Some(r) = sqrt_mod(b, q) {
            let mut up = p.clone();
            up.push(FieldElement::from_integer(r as i64, y.tag));
            lifted.push(up.clone());
            if r != 0 {
                *up.last_mut().unwrap() = FieldElement::from_integer(r as i64, y.tag).neg();
                lifted.push(up);
            }
        }
    }

    let mut vars = y.coordinates.clone();
    vars.push(new_coord.to_string());
    let mut train = PointSample {
        tag: y.tag,
        points: lifted,
        seed,
        strategy: "double-cover lift".into(),
    };
    let check = train.split_off(train.points.len() / 5);
    let relations = interpolate_vanishing_forms(&train, &check, relation_degree, &vars, None)?;

    // split every relation into its parity-pure parts; the lifted point
    // set is involution-stable, so both parts vanish on it
    let last = vars.len() - 1;
    let mut pure: Vec<MultiPoly> = Vec::new();
    for f in &relations {
        for want_odd in [false, true] {
            let mut part = MultiPoly::zero(vars.clone(), y.tag);
            for (e, c) in f.terms() {
                if (e[last] % 2 == 1) == want_odd {
                    part.add_term(e.clone(), c.clone())?;
                }
            }
            if !part.is_zero() && !in_linear_span(&part, &pure)? {
                pure.push(part.normalized()?);
            }
        }
    }

    // the defining relation of the cover must have been recovered
    let mut defining = MultiPoly::zero(vars.clone(), y.tag);
    let mut sq = vec![0u16; vars.len()];
    sq[last] = 2;
    defining.add_term(sq, FieldElement::one(y.tag))?;
    for (e, c) in branch.terms() {
        let mut ext = e.clone();
        ext.push(0);
        defining.add_term(ext, c.neg())?;
    }
    if !in_linear_span(&defining, &pure)? {
        return Err(AlgError::Pipeline(
            "interpolated cover relations do not contain the defining equation".into(),
        ));
    }

    let mut scalars = vec![FieldElement::one(y.tag); vars.len()];
    scalars[last] = FieldElement::one(y.tag).neg();
    let iota = ActionGen::from_scalars("iota", scalars)?;
    let mut w = VarietyModel::new(&format!("{}_double_cover", y.name), vars, pure, y.tag)?;
    w.dimension = y.dimension;
    w = w.with_action("iota", iota);
    w.check_action_stability()?;
    Ok(w)
}

/// A basis of the `eigenvalue`-eigenspace of the degree-`degree` part of
/// the coordinate ring of `model` under its diagonal action
/// `action_name`, represented by standard monomials.
pub fn find_weighted_sections(
    model: &VarietyModel,
    action_name: &str,
    eigenvalue: &FieldElement,
    degree: u16,
) -> Result<Vec<MultiPoly>, AlgError> {
    let action = model
        .action(action_name)
        .ok_or_else(|| AlgError::Pipeline(format!("model has no action {action_name}")))?
        .clone();
    let n = model.coordinates.len();
    let scalars: Vec<FieldElement> = (0..n)
        .map(|i| {
            let (j, c) = action.image(i);
            if *j != i {
                Err(AlgError::Pipeline(format!(
                    "action {action_name} is not diagonal"
                )))
            } else {
                Ok(c.clone())
            }
        })
        .collect::<Result<_, _>>()?;

    let weight = |e: &Exponents| -> Result<FieldElement, AlgError> {
        let mut w = FieldElement::one(model.tag);
        for (s, &k) in scalars.iter().zip(e.iter()) {
            w = w.mul(&s.pow(k as i64)?)?;
        }
        Ok(w)
    };

    let mut eigen_basis: Vec<Exponents> = Vec::new();
    for e in monomials_of_degree(n, degree) {
        if &weight(&e)? == eigenvalue {
            eigen_basis.push(e);
        }
    }
    if eigen_basis.is_empty() {
        return Ok(vec![]);
    }
    eigen_basis.sort();

    // the degree-d component of the ideal, restricted to this eigenspace
    let mut rows: Vec<Vec<FieldElement>> = Vec::new();
    for g in &model.ideal {
        let dg = g
            .total_degree()
            .ok_or_else(|| AlgError::Pipeline("zero ideal generator".into()))?;
        if dg as u16 > degree {
            continue;
        }
        for m in monomials_of_degree(n, degree - dg as u16) {
            let prod = g.mul(&MultiPoly::monomial(
                model.coordinates.clone(),
                m,
                FieldElement::one(model.tag),
            ))?;
            // keep only products lying in this eigenspace; the split is
            // exact because generators are eigenvectors
            if prod
                .terms()
                .all(|(e, _)| eigen_basis.binary_search(e).is_ok())
            {
                rows.push(
                    eigen_basis
                        .iter()
                        .map(|e| prod.coeff(e))
                        .collect(),
                );
            }
        }
    }

    let standard: Vec<usize> = if rows.is_empty() {
        (0..eigen_basis.len()).collect()
    } else {
        let mut m = Matrix::from_rows(rows, model.tag)?;
        let pivots = m.row_reduce()?;
        (0..eigen_basis.len())
            .filter(|c| !pivots.contains(c))
            .collect()
    };
    standard
        .into_iter()
        .map(|c| {
            Ok(MultiPoly::monomial(
                model.coordinates.clone(),
                eigen_basis[c].clone(),
                FieldElement::one(model.tag),
            ))
        })
        .collect()
}

/// The bigraded relations of the cyclic-cover model determined by a
/// fixed multiplication table: in variables (base coordinates, z0..z6),
/// one relation den_ij * z_i * z_j - num_ij * z_{(i+j) % 7} * z0 per
/// entry. Each relation is homogeneous of degree 2 in the z-variables.
pub fn cover_relations(table: &MulTable) -> Result<Vec<MultiPoly>, AlgError> {
    if !table.fixed {
        return Err(AlgError::Pipeline(
            "cover relations require a fixed multiplication table".into(),
        ));
    }
    let nbase = table.vars.len();
    let mut vars = table.vars.clone();
    for k in 0..7 {
        vars.push(format!("z{k}"));
    }
    // a base form times a product of z-variables, in the extended ring
    let embed = |f: &MultiPoly, zs: &[usize]| -> Result<MultiPoly, AlgError> {
        let mut out = MultiPoly::zero(vars.clone(), table.tag);
        for (e, c) in f.terms() {
            let mut ext = e.clone();
            ext.resize(nbase + 7, 0);
            for &z in zs {
                ext[nbase + z] += 1;
            }
            out.add_term(ext, c.clone())?;
        }
        Ok(out)
    };
    let mut relations = Vec::new();
    for (&(i, j), entry) in &table.entries {
        let lhs = embed(&entry.den, &[i, j])?;
        let rhs = embed(&entry.num, &[(i + j) % 7, 0])?;
        relations.push(lhs.sub(&rhs)?);
    }
    Ok(relations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse::{parse_poly, parse_var_list};
    use crate::pipeline::multable::{fix_scalings_by_associativity, synthetic_mu7_table};

    #[test]
    fn double_cover_of_the_line_is_a_conic() {
        let tag = FieldTag::Prime(43);
        let vars = parse_var_list("x y").unwrap();
        let mut line = VarietyModel::new("P1", vars.clone(), vec![], tag).unwrap();
        line.dimension = Some(1);
        let branch = parse_poly("x^2 - 2*y^2", &vars, tag).unwrap();
        let w = build_double_cover(&line, "p", &branch, 2, 30, 5).unwrap();
        assert_eq!(w.coordinates, parse_var_list("x y p").unwrap());
        assert_eq!(w.ideal.len(), 1);
        let defining = parse_poly("p^2 - x^2 + 2*y^2", &w.coordinates, tag).unwrap();
        assert!(in_linear_span(&defining, &w.ideal).unwrap());
    }

    #[test]
    fn double_cover_of_the_twisted_cubic() {
        let tag = FieldTag::Prime(43);
        let vars = parse_var_list("x y z u").unwrap();
        let ideal = ["x*z - y^2", "x*u - y*z", "y*u - z^2"]
            .iter()
            .map(|s| parse_poly(s, &vars, tag).unwrap())
            .collect();
        let mut curve = VarietyModel::new("C", vars.clone(), ideal, tag).unwrap();
        curve.dimension = Some(1);
        let branch = parse_poly("x*u", &vars, tag).unwrap();
        let w = build_double_cover(&curve, "p", &branch, 2, 24, 11).unwrap();
        // three even relations from the curve plus the even defining
        // quadric; no odd quadrics since no linear form vanishes on C
        assert_eq!(w.ideal.len(), 4);
        let last = w.coordinates.len() - 1;
        for f in &w.ideal {
            let parities: std::collections::BTreeSet<u16> =
                f.terms().map(|(e, _)| e[last] % 2).collect();
            assert_eq!(parities.len(), 1);
        }
        let defining = parse_poly("p^2 - x*u", &w.coordinates, tag).unwrap();
        assert!(in_linear_span(&defining, &w.ideal).unwrap());
    }

    #[test]
    fn weighted_sections_on_the_line() {
        let tag = FieldTag::Prime(43);
        let vars = parse_var_list("x y").unwrap();
        let mut m = VarietyModel::new("P1", vars.clone(), vec![], tag).unwrap();
        m.dimension = Some(1);
        let zeta7 = FieldElement::zeta7(tag).unwrap();
        let scalars = vec![zeta7.clone(), FieldElement::one(tag)];
        m = m.with_action("mu7", ActionGen::from_scalars("mu7", scalars).unwrap());
        // degree-7 forms of weight 3: x^3 y^4 only
        let w3 = find_weighted_sections(&m, "mu7", &zeta7.pow(3).unwrap(), 7).unwrap();
        assert_eq!(w3.len(), 1);
        assert_eq!(
            w3[0],
            parse_poly("x^3*y^4", &vars, tag).unwrap()
        );
        // weight 0: x^0 y^7 and x^7 y^0
        let w0 = find_weighted_sections(&m, "mu7", &FieldElement::one(tag), 7).unwrap();
        assert_eq!(w0.len(), 2);
    }

    #[test]
    fn weighted_sections_respect_the_ideal() {
        let tag = FieldTag::Prime(43);
        let vars = parse_var_list("x y").unwrap();
        let ideal = vec![parse_poly("x*y", &vars, tag).unwrap()];
        let mut m = VarietyModel::new("pair", vars.clone(), ideal, tag).unwrap();
        m.dimension = Some(0);
        let zeta7 = FieldElement::zeta7(tag).unwrap();
        let scalars = vec![zeta7.clone(), FieldElement::one(tag)];
        m = m.with_action("mu7", ActionGen::from_scalars("mu7", scalars).unwrap());
        // x^3 y^4 lies in the ideal, so the weight-3 part of the quotient
        // vanishes; weight 0 keeps the two pure powers
        assert!(find_weighted_sections(&m, "mu7", &zeta7.pow(3).unwrap(), 7)
            .unwrap()
            .is_empty());
        assert_eq!(
            find_weighted_sections(&m, "mu7", &FieldElement::one(tag), 7)
                .unwrap()
                .len(),
            2
        );
    }

    #[test]
    fn cover_relations_vanish_on_the_sections() {
        // substitute z_k = u^k * ell^(3 - a_k) and reduce by u^7 = ell^7;
        // every relation of the synthetic table must vanish identically
        let table = fix_scalings_by_associativity(&synthetic_mu7_table(43).unwrap()).unwrap();
        let relations = cover_relations(&table).unwrap();
        let a = [0u16, 0, 1, 0, 3, 2, 3];
        // ring (t0, t1, u); relation vars are (t0, t1, z0..z6)
        let reduce = |f: &MultiPoly| -> MultiPoly {
            // map each term to exponents (t0, t1, u) with u^7 -> t1^7
            let mut out = MultiPoly::zero(parse_var_list("t0 t1 u").unwrap(), f.tag);
            for (e, c) in f.terms() {
                let mut t1 = e[1];
                let mut u = 0u16;
                for k in 0..7u16 {
                    let zk = e[2 + k as usize];
                    u += k * zk;
                    t1 += (3 - a[k as usize]) * zk;
                }
                t1 += 7 * (u / 7);
                u %= 7;
                out.add_term(vec![e[0], t1, u], c.clone()).unwrap();
            }
            out
        };
        assert_eq!(relations.len(), 21);
        for f in &relations {
            assert!(reduce(f).is_zero(), "relation does not vanish: {f:?}");
        }
    }

    #[test]
    fn cover_relations_require_a_fixed_table() {
        let raw = synthetic_mu7_table(43).unwrap();
        assert!(cover_relations(&raw).is_err());
    }
}
