//! The 13-symbol canonical section space and the order-294 group's action
//! on it, parameterized by the residue `a`.

use crate::equivariant::action::{evaluate_action_word, ActionGen};
use crate::error::AlgError;
use crate::exactalg::field::{FieldElement, FieldTag};

/// A residue pair (i, j) mod 7: the weights of a symbol under the two
/// order-7 scaling actions.
pub type WeightPair = (u8, u8);

fn m7(x: i64) -> u8 {
    x.rem_euclid(7) as u8
}

/// The weights of the 13 canonical symbols, in basis order
/// (r_{0,0}, r_{1,1}, r_{-1,1}, r_{4,2}, r_{-4,2}, r_{2,4}, r_{-2,4},
///  r_{1,a}, r_{-1,a}, r_{4,2a}, r_{-4,2a}, r_{2,4a}, r_{-2,4a}).
pub fn symbol_weights(a: u8) -> Vec<WeightPair> {
    let a = i64::from(a);
    let mut weights = vec![(0u8, 0u8)];
    for &(i, j) in &[(1, 1), (4, 2), (2, 4), (1, a), (4, 2 * a), (2, 4 * a)] {
        weights.push((m7(i), m7(j)));
        weights.push((m7(-i), m7(j)));
    }
    weights
}

/// Display names for the symbols, usable as polynomial variables.
pub fn symbol_names(a: u8) -> Vec<String> {
    symbol_weights(a)
        .iter()
        .map(|&(i, j)| format!("r{}_{}", i, j))
        .collect()
}

/// The four distinguished generators acting on the 13 symbols:
/// - `t1` (the order-2 reflection): negates r_{0,0} and swaps r_{i,j} with
///   r_{-i,j};
/// - `t2` (first order-7 scaling): r_{i,j} ↦ ζ₇^i r_{i,j};
/// - `t3` (second order-7 scaling): r_{i,j} ↦ ζ₇^j r_{i,j};
/// - `t4` (the order-3 relabeling): positionally sends the slot of
///   r_{i,j} to the slot of r_{4i,2j}.
///
/// Requires a field containing ζ₇ (the cyclotomic field or GF(p) with
/// p ≡ 1 mod 7).
pub fn symbol_actions(a: u8, tag: FieldTag) -> Result<Vec<(String, ActionGen)>, AlgError> {
    let weights = symbol_weights(a);
    let n = weights.len();
    let zeta = FieldElement::zeta7(tag)?;
    let one = FieldElement::one(tag);

    let slot = |w: WeightPair| -> Result<usize, AlgError> {
        weights
            .iter()
            .position(|&x| x == w)
            .ok_or_else(|| AlgError::UnknownSymbol(format!("r{}_{}", w.0, w.1)))
    };

    // t1: r_{0,0} -> -r_{0,0}, r_{i,j} <-> r_{-i,j}
    let mut t1_images = Vec::with_capacity(n);
    for &(i, j) in &weights {
        if (i, j) == (0, 0) {
            t1_images.push((0, one.neg()));
        } else {
            t1_images.push((slot((m7(-(i as i64)), j))?, one.clone()));
        }
    }
    let t1 = ActionGen::new("t1", tag, t1_images)?;

    // t2, t3: diagonal scalings by the first and second weight
    let t2 = ActionGen::from_scalars(
        "t2",
        weights
            .iter()
            .map(|&(i, _)| zeta.pow(i as i64))
            .collect::<Result<Vec<_>, _>>()?,
    )?;
    let t3 = ActionGen::from_scalars(
        "t3",
        weights
            .iter()
            .map(|&(_, j)| zeta.pow(j as i64))
            .collect::<Result<Vec<_>, _>>()?,
    )?;

    // t4: the slot of r_{i,j} maps to the slot of r_{4i,2j}
    let mut t4_images = Vec::with_capacity(n);
    for &(i, j) in &weights {
        let target = slot((m7(4 * i as i64), m7(2 * j as i64)))?;
        t4_images.push((target, one.clone()));
    }
    let t4 = ActionGen::new("t4", tag, t4_images)?;

    Ok(vec![
        ("t1".to_string(), t1),
        ("t2".to_string(), t2),
        ("t3".to_string(), t3),
        ("t4".to_string(), t4),
    ])
}

/// Check that a set of named actions satisfies every relator of a
/// presentation as a matrix identity. Returns the first failing relator,
/// if any.
pub fn check_action_relations(
    pres: &crate::fpgroup::FpPresentation,
    actions: &[(String, ActionGen)],
) -> Result<Option<String>, AlgError> {
    for r in &pres.relators {
        let m = evaluate_action_word(r, actions)?;
        if !m.is_identity() {
            return Ok(Some(r.to_string()));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data;
    use crate::fpgroup::parse_presentation_file;

    #[test]
    fn thirteen_distinct_weights() {
        for a in [3u8, 5, 6] {
            let w = symbol_weights(a);
            assert_eq!(w.len(), 13);
            let mut sorted = w.clone();
            sorted.sort_unstable();
            sorted.dedup();
            assert_eq!(sorted.len(), 13, "weights must be pairwise distinct");
        }
    }

    #[test]
    fn generator_orders() {
        let actions = symbol_actions(3, FieldTag::Cyclotomic).unwrap();
        let orders = [2u64, 7, 7, 3];
        for ((name, g), want) in actions.iter().zip(orders) {
            assert_eq!(g.order(10).unwrap(), want, "order of {}", name);
        }
    }

    #[test]
    fn relations_hold_for_admissible_a() {
        let pres = parse_presentation_file(data::QUOTIENT_294_PRESENTATION)
            .unwrap()
            .presentation;
        for a in [3u8, 5, 6] {
            let actions = symbol_actions(a, FieldTag::Cyclotomic).unwrap();
            assert_eq!(
                check_action_relations(&pres, &actions).unwrap(),
                None,
                "a = {}",
                a
            );
        }
    }

    #[test]
    fn relations_hold_mod_p() {
        // GF(43) has zeta_7 (43 = 1 mod 7)
        let pres = parse_presentation_file(data::QUOTIENT_294_PRESENTATION)
            .unwrap()
            .presentation;
        let actions = symbol_actions(3, FieldTag::Prime(43)).unwrap();
        assert_eq!(check_action_relations(&pres, &actions).unwrap(), None);
    }

    #[test]
    fn conjugation_relation_explicitly() {
        let actions = symbol_actions(3, FieldTag::Cyclotomic).unwrap();
        let t2 = &actions[1].1;
        let t4 = &actions[3].1;
        // t4 t2 t4^{-1} = t2^4 as matrices
        let lhs = t4.then(t2).unwrap().then(&t4.inverse().unwrap()).unwrap();
        let rhs = t2.pow(4).unwrap();
        assert!(lhs.same_matrix(&rhs));
    }
}
