//! Buchberger's algorithm over GF(p), with the product and chain criteria
//! and sugar-degree pair selection, producing reduced Gröbner bases.

use crate::error::AlgError;
use crate::exactalg::field::{FieldElement, FieldTag};
use crate::exactalg::poly::{Exponents, MultiPoly};
use crate::verify::order::{
    exp_coprime, exp_degree, exp_divides, exp_lcm, exp_sub, MonomialOrder,
};

#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub generators: Vec<MultiPoly>,
    pub vars: Vec<String>,
    pub order: MonomialOrder,
    pub tag: FieldTag,
    /// Whether every input polynomial was homogeneous.
    pub homogeneous_input: bool,
}

impl GroebnerBasis {
    pub fn leading_exponents(&self) -> Vec<Exponents> {
        self.generators
            .iter()
            .filter_map(|g| leading_term(g, self.order).map(|(e, _)| e))
            .collect()
    }

    /// Normal form of `f` modulo the basis.
    pub fn reduce(&self, f: &MultiPoly) -> Result<MultiPoly, AlgError> {
        reduce_full(f, &self.generators, self.order)
    }

    /// Ideal membership test.
    pub fn contains(&self, f: &MultiPoly) -> Result<bool, AlgError> {
        Ok(self.reduce(f)?.is_zero())
    }
}

/// Rescale so the leading coefficient under `order` is 1.
fn make_monic(f: &MultiPoly, order: MonomialOrder) -> Result<MultiPoly, AlgError> {
    let (_, c) = leading_term(f, order).ok_or(AlgError::DivisionByZero)?;
    f.scale(&c.inv()?)
}

pub fn leading_term(f: &MultiPoly, order: MonomialOrder) -> Option<(Exponents, FieldElement)> {
    let lead = order.leading(f.terms().map(|(e, _)| e))?.clone();
    let c = f.coeff(&lead);
    Some((lead, c))
}

/// One-step-at-a-time full reduction: every term of the result is reduced
/// against every divisor in `basis`.
fn reduce_full(
    f: &MultiPoly,
    basis: &[MultiPoly],
    order: MonomialOrder,
) -> Result<MultiPoly, AlgError> {
    let leads: Vec<(Exponents, FieldElement)> = basis
        .iter()
        .map(|g| leading_term(g, order).ok_or(AlgError::DivisionByZero))
        .collect::<Result<_, _>>()?;
    let mut rem = MultiPoly::zero(f.vars.clone(), f.tag);
    let mut work = f.clone();
    'outer: while !work.is_zero() {
        let (lead, c) = leading_term(&work, order).unwrap();
        for (g, (ge, gc)) in basis.iter().zip(leads.iter()) {
            if exp_divides(ge, &lead) {
                let shift = exp_sub(&lead, ge);
                let factor = c.div(gc)?;
                let mono = MultiPoly::monomial(f.vars.clone(), shift, factor);
                work = work.sub(&g.mul(&mono)?)?;
                continue 'outer;
            }
        }
        // leading term irreducible: move it to the remainder
        rem.add_term(lead.clone(), c.clone())?;
        work.add_term(lead, c.neg())?;
    }
    Ok(rem)
}

fn s_polynomial(
    f: &MultiPoly,
    g: &MultiPoly,
    order: MonomialOrder,
) -> Result<MultiPoly, AlgError> {
    let (fe, fc) = leading_term(f, order).ok_or(AlgError::DivisionByZero)?;
    let (ge, gc) = leading_term(g, order).ok_or(AlgError::DivisionByZero)?;
    let l = exp_lcm(&fe, &ge);
    let mf = MultiPoly::monomial(f.vars.clone(), exp_sub(&l, &fe), fc.inv()?);
    let mg = MultiPoly::monomial(g.vars.clone(), exp_sub(&l, &ge), gc.inv()?);
    f.mul(&mf)?.sub(&g.mul(&mg)?)
}

/// Compute the reduced Gröbner basis of the ideal generated by `ideal`.
pub fn groebner_basis(
    ideal: &[MultiPoly],
    order: MonomialOrder,
) -> Result<GroebnerBasis, AlgError> {
    // the ambient ring is read off any input element, zero or not
    let (vars, tag) = match ideal.first() {
        Some(f) => (f.vars.clone(), f.tag),
        None => (Vec::new(), FieldTag::Rational),
    };
    let nonzero: Vec<&MultiPoly> = ideal.iter().filter(|f| !f.is_zero()).collect();
    if nonzero.is_empty() {
        return Ok(GroebnerBasis {
            generators: Vec::new(),
            vars,
            order,
            tag,
            homogeneous_input: true,
        });
    }
    let homogeneous_input = nonzero.iter().all(|f| f.is_homogeneous());

    let mut basis: Vec<MultiPoly> = Vec::new();
    for f in nonzero {
        let r = reduce_full(f, &basis, order)?;
        if !r.is_zero() {
            basis.push(make_monic(&r, order)?);
        }
    }

    // pair queue with sugar degrees
    let sugar = |i: usize, j: usize, basis: &[MultiPoly]| -> u32 {
        let (ei, _) = leading_term(&basis[i], order).unwrap();
        let (ej, _) = leading_term(&basis[j], order).unwrap();
        let l = exp_lcm(&ei, &ej);
        let di = basis[i].total_degree().unwrap_or(0) + exp_degree(&exp_sub(&l, &ei));
        let dj = basis[j].total_degree().unwrap_or(0) + exp_degree(&exp_sub(&l, &ej));
        di.max(dj)
    };
    let mut pairs: Vec<(u32, usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            pairs.push((sugar(i, j, &basis), i, j));
        }
    }

    while !pairs.is_empty() {
        // lowest sugar first
        let idx = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, (s, _, _))| *s)
            .map(|(k, _)| k)
            .unwrap();
        let (_, i, j) = pairs.swap_remove(idx);
        let (ei, _) = leading_term(&basis[i], order).unwrap();
        let (ej, _) = leading_term(&basis[j], order).unwrap();
        // product criterion
        if exp_coprime(&ei, &ej) {
            continue;
        }
        // chain criterion: some k with LT(k) | lcm(i,j) and both other
        // pairs already handled (not in the queue)
        let l = exp_lcm(&ei, &ej);
        let chain = (0..basis.len()).any(|k| {
            if k == i || k == j {
                return false;
            }
            let (ek, _) = leading_term(&basis[k], order).unwrap();
            exp_divides(&ek, &l)
                && !pairs.iter().any(|&(_, a, b)| {
                    (a, b) == (i.min(k), i.max(k)) || (a, b) == (j.min(k), j.max(k))
                })
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order)?;
        let r = reduce_full(&s, &basis, order)?;
        if !r.is_zero() {
            let t = basis.len();
            basis.push(make_monic(&r, order)?);
            for k in 0..t {
                pairs.push((sugar(k, t, &basis), k, t));
            }
        }
    }

    // interreduce to the unique reduced basis
    let mut reduced: Vec<MultiPoly> = Vec::new();
    // drop generators whose leading term is divisible by another's
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        let (ei, _) = leading_term(&basis[i], order).unwrap();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let (ej, _) = leading_term(&basis[j], order).unwrap();
            if exp_divides(&ej, &ei) && (ej != ei || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let survivors: Vec<MultiPoly> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();
    for i in 0..survivors.len() {
        let others: Vec<MultiPoly> = survivors
            .iter()
            .enumerate()
            .filter_map(|(j, g)| (j != i).then(|| g.clone()))
            .collect();
        let r = reduce_full(&survivors[i], &others, order)?;
        if !r.is_zero() {
            reduced.push(make_monic(&r, order)?);
        }
    }
    reduced.sort_by(|a, b| {
        let ea = leading_term(a, order).unwrap().0;
        let eb = leading_term(b, order).unwrap().0;
        order.compare(&ea, &eb)
    });
    Ok(GroebnerBasis {
        generators: reduced,
        vars,
        order,
        tag,
        homogeneous_input,
    })
}
