//! Weight decomposition of spaces of forms under a pair of commuting
//! order-7 scaling actions, and C₃ orbits of forms.

use std::collections::BTreeMap;

use crate::equivariant::action::ActionGen;
use crate::equivariant::symbols::WeightPair;
use crate::error::AlgError;
use crate::exactalg::field::FieldElement;
use crate::exactalg::poly::MultiPoly;

/// The eigenvalue exponent of `f` under `g`: the k with g·f = ζ₇^k f.
/// Errors with `UnstableSpace` if `f` is not an eigenvector.
pub fn weight_of_form(f: &MultiPoly, g: &ActionGen) -> Result<u8, AlgError> {
    if f.is_zero() {
        return Ok(0);
    }
    let gf = g.act_on_form(f)?;
    let zeta = FieldElement::zeta7(f.tag)?;
    for k in 0u8..7 {
        if gf == f.scale(&zeta.pow(k as i64)?)? {
            return Ok(k);
        }
    }
    Err(AlgError::UnstableSpace(g.name.clone()))
}

/// The weight pair of `f` under two order-7 scaling actions.
pub fn weight_pair_of_form(
    f: &MultiPoly,
    torus: (&ActionGen, &ActionGen),
) -> Result<WeightPair, AlgError> {
    Ok((weight_of_form(f, torus.0)?, weight_of_form(f, torus.1)?))
}

/// Decompose a basis of forms by simultaneous weight under two commuting
/// order-7 actions. Returns, per weight pair, the indices of the basis
/// elements carrying that weight. Every basis element must be a
/// simultaneous eigenvector; the component dimensions therefore sum to the
/// input dimension by construction.
pub fn weight_decompose(
    space: &[MultiPoly],
    torus: (&ActionGen, &ActionGen),
) -> Result<BTreeMap<WeightPair, Vec<usize>>, AlgError> {
    let (t, u) = torus;
    if t.order(7)? != 7 {
        return Err(AlgError::WrongActionOrder(t.name.clone()));
    }
    if u.order(7)? != 7 {
        return Err(AlgError::WrongActionOrder(u.name.clone()));
    }
    if !t.then(u)?.same_matrix(&u.then(t)?) {
        return Err(AlgError::NonCommutingActions);
    }
    let mut out: BTreeMap<WeightPair, Vec<usize>> = BTreeMap::new();
    for (idx, f) in space.iter().enumerate() {
        let w = weight_pair_of_form(f, torus)?;
        out.entry(w).or_default().push(idx);
    }
    Ok(out)
}

/// The C₃ orbit [f, g₃·f, g₃²·f] of a form. Errors if g₃ does not have
/// order 3.
pub fn c3_orbit(f: &MultiPoly, g3: &ActionGen) -> Result<[MultiPoly; 3], AlgError> {
    if g3.order(3)? != 3 {
        return Err(AlgError::WrongActionOrder(g3.name.clone()));
    }
    let f1 = g3.act_on_form(f)?;
    let f2 = g3.act_on_form(&f1)?;
    // orbit closes: applying once more returns f
    if g3.act_on_form(&f2)? != *f {
        return Err(AlgError::UnstableSpace(g3.name.clone()));
    }
    Ok([f.clone(), f1, f2])
}
