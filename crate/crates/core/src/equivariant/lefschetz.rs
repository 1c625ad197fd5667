//! Representation bookkeeping: which residues `a` make the canonical
//! section space plus a trivial summand into a regular representation of
//! both order-14 subgroups.

use crate::error::AlgError;
use crate::exactalg::field::{FieldElement, FieldTag};

/// Kind of an irreducible constituent of the order-14 dihedral factor:
/// the two characters of its C₂ quotient, or one of the three
/// two-dimensional representations indexed by 1, 2, 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepKind {
    Plus,
    Minus,
    Two(u8),
}

/// An irreducible of (dihedral of order 14) x C₇: a kind tensored with the
/// C₇ character of exponent `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RepLabel {
    pub kind: RepKind,
    pub y: u8,
}

impl RepLabel {
    pub fn dim(&self) -> usize {
        match self.kind {
            RepKind::Plus | RepKind::Minus => 1,
            RepKind::Two(_) => 2,
        }
    }

    /// Character value on the element s^e r^k of the cyclic order-14
    /// subgroup generated by the reflection s and the *second* C₇ factor's
    /// generator r (which acts by the scalar ζ₇^y).
    fn char_c14(&self, e: u8, k: u8, zeta: &FieldElement) -> Result<FieldElement, AlgError> {
        let scalar = zeta.pow((self.y as i64) * (k as i64))?;
        let factor = match self.kind {
            RepKind::Plus => FieldElement::from_integer(1, zeta.tag()),
            RepKind::Minus => FieldElement::from_integer(if e == 0 { 1 } else { -1 }, zeta.tag()),
            // on a 2-dim representation the reflection permutes the
            // eigenbasis, so its trace against any scalar is 0
            RepKind::Two(_) => {
                FieldElement::from_integer(if e == 0 { 2 } else { 0 }, zeta.tag())
            }
        };
        scalar.mul(&factor)
    }

    /// Character value on the element s^e c^k of the dihedral order-14
    /// subgroup, where c is the rotation (the *first* C₇, on which the
    /// label `y` is trivial).
    fn char_d14(&self, e: u8, k: u8, zeta: &FieldElement) -> Result<FieldElement, AlgError> {
        match self.kind {
            RepKind::Plus => Ok(FieldElement::from_integer(1, zeta.tag())),
            RepKind::Minus => {
                Ok(FieldElement::from_integer(if e == 0 { 1 } else { -1 }, zeta.tag()))
            }
            RepKind::Two(i) => {
                if e != 0 {
                    return Ok(FieldElement::zero(zeta.tag()));
                }
                let a = zeta.pow((i as i64) * (k as i64))?;
                let b = zeta.pow(-(i as i64) * (k as i64))?;
                a.add(&b)
            }
        }
    }
}

/// Whether the given constituents, plus one trivial one-dimensional
/// summand, restrict to the regular representation of both the cyclic and
/// the dihedral order-14 subgroup: character 14 at the identity and 0 on
/// every other element.
pub fn regular_rep_check(labels: &[RepLabel]) -> Result<bool, AlgError> {
    let total: usize = labels.iter().map(|l| l.dim()).sum::<usize>() + 1;
    if total != 14 {
        return Err(AlgError::DimensionMismatch {
            expected: 14,
            got: total,
        });
    }
    let tag = FieldTag::Cyclotomic;
    let zeta = FieldElement::zeta7(tag)?;
    let one = FieldElement::one(tag);
    for e in 0u8..2 {
        for k in 0u8..7 {
            let mut c14_sum = one.clone(); // the trivial summand
            let mut d14_sum = one.clone();
            for l in labels {
                c14_sum = c14_sum.add(&l.char_c14(e, k, &zeta)?)?;
                d14_sum = d14_sum.add(&l.char_d14(e, k, &zeta)?)?;
            }
            let expected = if e == 0 && k == 0 {
                FieldElement::from_integer(14, tag)
            } else {
                FieldElement::zero(tag)
            };
            if c14_sum != expected || d14_sum != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The candidate decomposition for a residue `a`: V₋,₀ plus the two C₃
/// orbits of two-dimensional constituents starting at second subscripts 1
/// and `a`.
pub fn candidate_labels(a: u8) -> Vec<RepLabel> {
    let m7 = |x: u32| (x % 7) as u8;
    let mut labels = vec![RepLabel {
        kind: RepKind::Minus,
        y: 0,
    }];
    for &(i, j) in &[(1u32, 1u32), (4, 2), (2, 4)] {
        labels.push(RepLabel {
            kind: RepKind::Two(m7(i)),
            y: m7(j),
        });
    }
    for &(i, j) in &[(1u32, 1u32), (4, 2), (2, 4)] {
        labels.push(RepLabel {
            kind: RepKind::Two(m7(i)),
            y: m7(j * a as u32),
        });
    }
    labels
}

/// Search over residues mod 7 for the values of `a` whose candidate
/// decomposition passes the regular-representation test. The first block is
/// already normalized to second subscript 1, so the search is over the
/// second block's parameter only.
pub fn lefschetz_admissible_a() -> Vec<u8> {
    (0u8..7)
        .filter(|&a| {
            regular_rep_check(&candidate_labels(a)).unwrap_or(false)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissible_set_is_3_5_6() {
        assert_eq!(lefschetz_admissible_a(), vec![3, 5, 6]);
    }

    #[test]
    fn a_2_and_4_fail_regularity() {
        // second subscripts collide with the first orbit's
        assert!(!regular_rep_check(&candidate_labels(2)).unwrap());
        assert!(!regular_rep_check(&candidate_labels(4)).unwrap());
    }

    #[test]
    fn a_0_and_1_fail_distinctness() {
        assert!(!regular_rep_check(&candidate_labels(0)).unwrap());
        assert!(!regular_rep_check(&candidate_labels(1)).unwrap());
    }

    #[test]
    fn plus_for_minus_breaks_regularity() {
        // replacing the sign character by the trivial one gives two trivial
        // C2-summands, which is not regular
        let mut labels = candidate_labels(3);
        labels[0] = RepLabel {
            kind: RepKind::Plus,
            y: 0,
        };
        assert!(!regular_rep_check(&labels).unwrap());
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let labels = vec![RepLabel {
            kind: RepKind::Minus,
            y: 0,
        }];
        assert!(matches!(
            regular_rep_check(&labels),
            Err(AlgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn second_subscripts_permute_for_admissible_a() {
        for a in [3u8, 5, 6] {
            let mut seconds: Vec<u8> = candidate_labels(a)
                .iter()
                .filter_map(|l| match l.kind {
                    RepKind::Two(_) => Some(l.y),
                    _ => None,
                })
                .collect();
            seconds.sort_unstable();
            assert_eq!(seconds, vec![1, 2, 3, 4, 5, 6]);
        }
    }
}
