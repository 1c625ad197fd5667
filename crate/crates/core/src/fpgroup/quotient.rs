//! Finite permutation quotients obtained from coset tables.

use std::collections::{HashSet, VecDeque};

use crate::error::AlgError;
use crate::fpgroup::coset::CosetTable;
use crate::fpgroup::presentation::FpPresentation;
use crate::fpgroup::word::Word;

/// A permutation on `0..degree`, stored as an image table.
pub type Perm = Vec<u32>;

pub fn perm_identity(degree: usize) -> Perm {
    (0..degree as u32).collect()
}

/// `compose(p, q)` applies `p` first, then `q`.
pub fn perm_compose(p: &Perm, q: &Perm) -> Perm {
    p.iter().map(|&x| q[x as usize]).collect()
}

pub fn perm_inverse(p: &Perm) -> Perm {
    let mut inv = vec![0u32; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x as usize] = i as u32;
    }
    inv
}

pub fn perm_order(p: &Perm) -> u64 {
    let id = perm_identity(p.len());
    let mut cur = p.clone();
    let mut n = 1u64;
    while cur != id {
        cur = perm_compose(&cur, p);
        n += 1;
    }
    n
}

/// The image of a finitely generated group in a symmetric group, given by
/// generator images.
#[derive(Clone, Debug)]
pub struct FiniteQuotient {
    pub gen_names: Vec<String>,
    pub gen_images: Vec<Perm>,
    pub degree: usize,
}

impl FiniteQuotient {
    /// The action of the full group on the cosets of a subgroup. For a
    /// normal subgroup this is the quotient group itself.
    pub fn from_coset_table(table: &CosetTable) -> Result<Self, AlgError> {
        let gen_names: Vec<String> = table.generators().to_vec();
        let gen_images = gen_names
            .iter()
            .map(|g| table.generator_permutation(g))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FiniteQuotient {
            gen_names,
            gen_images,
            degree: table.index(),
        })
    }

    pub fn word_permutation(&self, word: &Word) -> Result<Perm, AlgError> {
        let mut p = perm_identity(self.degree);
        for (name, positive) in word.single_letters() {
            let g = self
                .gen_names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| AlgError::UnknownSymbol(name.to_string()))?;
            let img = if positive {
                self.gen_images[g].clone()
            } else {
                perm_inverse(&self.gen_images[g])
            };
            p = perm_compose(&p, &img);
        }
        Ok(p)
    }

    /// Closure of the generator images under composition, BFS over elements.
    pub fn elements(&self, cap: usize) -> Result<HashSet<Perm>, AlgError> {
        closure(&self.gen_images, self.degree, cap)
    }

    pub fn order(&self, cap: usize) -> Result<u64, AlgError> {
        Ok(self.elements(cap)?.len() as u64)
    }
}

/// BFS closure of a generating set of permutations.
pub fn closure(gens: &[Perm], degree: usize, cap: usize) -> Result<HashSet<Perm>, AlgError> {
    let mut seen: HashSet<Perm> = HashSet::new();
    let mut queue: VecDeque<Perm> = VecDeque::new();
    let id = perm_identity(degree);
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = perm_compose(&p, g);
            if !seen.contains(&q) {
                if seen.len() >= cap {
                    return Err(AlgError::Overflow { limit: cap });
                }
                seen.insert(q.clone());
                queue.push_back(q);
            }
        }
    }
    Ok(seen)
}

pub fn is_abelian(gens: &[Perm]) -> bool {
    for (i, p) in gens.iter().enumerate() {
        for q in &gens[i + 1..] {
            if perm_compose(p, q) != perm_compose(q, p) {
                return false;
            }
        }
    }
    true
}

/// Whether the subgroup generated by `sub_gens` is normal in the group
/// generated by `group_gens` (all acting on the same degree).
pub fn is_normal(
    group_gens: &[Perm],
    sub_gens: &[Perm],
    degree: usize,
    cap: usize,
) -> Result<bool, AlgError> {
    let sub = closure(sub_gens, degree, cap)?;
    for g in group_gens {
        let ginv = perm_inverse(g);
        for s in sub_gens {
            let conj = perm_compose(&perm_compose(&ginv, s), g);
            if !sub.contains(&conj) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Check that mapping the generators of `target` to the given permutations
/// defines an isomorphism onto the group generated by `quotient`'s images:
/// (i) every relator of `target` maps to the identity, (ii) the images
/// generate the whole quotient group, (iii) the orders agree.
pub fn verify_quotient_presentation(
    quotient: &FiniteQuotient,
    target: &FpPresentation,
    target_gen_images: &[Perm],
    target_order: u64,
    cap: usize,
) -> Result<bool, AlgError> {
    if target_gen_images.len() != target.generators.len() {
        return Err(AlgError::DimensionMismatch {
            expected: target.generators.len(),
            got: target_gen_images.len(),
        });
    }
    let image_quotient = FiniteQuotient {
        gen_names: target.generators.clone(),
        gen_images: target_gen_images.to_vec(),
        degree: quotient.degree,
    };
    let id = perm_identity(quotient.degree);
    for r in &target.relators {
        if image_quotient.word_permutation(r)? != id {
            return Ok(false);
        }
    }
    let image_order = image_quotient.order(cap)?;
    let full_order = quotient.order(cap)?;
    Ok(image_order == full_order && full_order == target_order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroup::coset::{enumerate_cosets, EnumeratorOptions};
    use crate::fpgroup::presentation::{parse_presentation_file, SubgroupSpec};

    fn s3_quotient() -> FiniteQuotient {
        let file = parse_presentation_file(
            "gens: a b\nrel: a^2\nrel: b^3\nrel: (ab)^2\n",
        )
        .unwrap();
        let table = enumerate_cosets(
            &file.presentation,
            &SubgroupSpec::trivial(),
            &EnumeratorOptions::default(),
        )
        .unwrap();
        FiniteQuotient::from_coset_table(&table).unwrap()
    }

    #[test]
    fn s3_order_six() {
        let q = s3_quotient();
        assert_eq!(q.order(1000).unwrap(), 6);
        assert!(!is_abelian(&q.gen_images));
    }

    #[test]
    fn a3_normal_in_s3() {
        let q = s3_quotient();
        let b = q.gen_images[1].clone();
        assert!(is_normal(&q.gen_images, &[b.clone()], q.degree, 1000).unwrap());
        assert_eq!(perm_order(&b), 3);
        // the order-2 subgroup generated by a is not normal
        let a = q.gen_images[0].clone();
        assert!(!is_normal(&q.gen_images, &[a], q.degree, 1000).unwrap());
    }

    #[test]
    fn presentation_verification() {
        let q = s3_quotient();
        let target = parse_presentation_file(
            "gens: s t\nrel: s^2\nrel: t^3\nrel: (st)^2\n",
        )
        .unwrap()
        .presentation;
        let images = vec![q.gen_images[0].clone(), q.gen_images[1].clone()];
        assert!(verify_quotient_presentation(&q, &target, &images, 6, 1000).unwrap());
        // wrong order claim fails
        assert!(!verify_quotient_presentation(&q, &target, &images, 12, 1000).unwrap());
    }

    #[test]
    fn word_tracing_matches_composition() {
        let q = s3_quotient();
        let file = parse_presentation_file("gens: a b\n").unwrap();
        let w = file.presentation.parse_word("ab^-1a").unwrap();
        let manual = perm_compose(
            &perm_compose(&q.gen_images[0], &perm_inverse(&q.gen_images[1])),
            &q.gen_images[0],
        );
        assert_eq!(q.word_permutation(&w).unwrap(), manual);
    }
}
