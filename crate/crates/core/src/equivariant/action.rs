//! Generalized permutation actions on coordinates and forms.

use crate::error::AlgError;
use crate::exactalg::field::{FieldElement, FieldTag};
use crate::exactalg::poly::MultiPoly;

/// An invertible coordinate action: variable `i` maps to
/// `scalar[i] * X[target[i]]`, i.e. a generalized permutation matrix with
/// one nonzero entry per row. Acting on a form substitutes each variable by
/// its image.
#[derive(Clone, Debug, PartialEq)]
pub struct ActionGen {
    pub name: String,
    tag: FieldTag,
    /// images[i] = (target index, scalar)
    images: Vec<(usize, FieldElement)>,
}

impl ActionGen {
    pub fn new(
        name: &str,
        tag: FieldTag,
        images: Vec<(usize, FieldElement)>,
    ) -> Result<Self, AlgError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (t, c) in &images {
            if *t >= n || seen[*t] {
                return Err(AlgError::Parse(format!(
                    "action '{}' is not a generalized permutation",
                    name
                )));
            }
            if c.is_zero() || c.tag() != tag {
                return Err(AlgError::TagMismatch {
                    left: tag,
                    right: c.tag(),
                });
            }
            seen[*t] = true;
        }
        Ok(ActionGen {
            name: name.to_string(),
            tag,
            images,
        })
    }

    pub fn identity(n: usize, tag: FieldTag) -> Self {
        ActionGen {
            name: "1".to_string(),
            tag,
            images: (0..n).map(|i| (i, FieldElement::one(tag))).collect(),
        }
    }

    /// Pure permutation action: variable `i` maps to `X[perm[i]]`.
    pub fn from_permutation(name: &str, perm: &[usize], tag: FieldTag) -> Result<Self, AlgError> {
        let images = perm
            .iter()
            .map(|&t| (t, FieldElement::one(tag)))
            .collect();
        ActionGen::new(name, tag, images)
    }

    /// Diagonal scaling action.
    pub fn from_scalars(name: &str, scalars: Vec<FieldElement>) -> Result<Self, AlgError> {
        let tag = scalars
            .first()
            .map(|c| c.tag())
            .ok_or_else(|| AlgError::Parse("empty scaling action".into()))?;
        let images = scalars.into_iter().enumerate().collect();
        ActionGen::new(name, tag, images)
    }

    pub fn dim(&self) -> usize {
        self.images.len()
    }

    pub fn tag(&self) -> FieldTag {
        self.tag
    }

    pub fn image(&self, i: usize) -> &(usize, FieldElement) {
        &self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, (t, c))| *t == i && c.is_one())
    }

    /// The action applying `self` first and then `other` (composition of the
    /// induced substitutions on forms).
    pub fn then(&self, other: &ActionGen) -> Result<ActionGen, AlgError> {
        if self.dim() != other.dim() {
            return Err(AlgError::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        let images = self
            .images
            .iter()
            .map(|(t, c)| {
                let (u, d) = &other.images[*t];
                Ok((*u, c.mul(d)?))
            })
            .collect::<Result<Vec<_>, AlgError>>()?;
        ActionGen::new(&format!("{}{}", self.name, other.name), self.tag, images)
    }

    pub fn inverse(&self) -> Result<ActionGen, AlgError> {
        let n = self.dim();
        let mut images = vec![(0usize, FieldElement::one(self.tag)); n];
        for (i, (t, c)) in self.images.iter().enumerate() {
            images[*t] = (i, c.inv()?);
        }
        ActionGen::new(&format!("{}^-1", self.name), self.tag, images)
    }

    pub fn pow(&self, e: i64) -> Result<ActionGen, AlgError> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = ActionGen::identity(self.dim(), self.tag);
        for _ in 0..e.unsigned_abs() {
            acc = acc.then(&base)?;
        }
        Ok(acc)
    }

    /// Multiplicative order, verified up to the given cap.
    pub fn order(&self, cap: u64) -> Result<u64, AlgError> {
        let mut acc = self.clone();
        let mut n = 1;
        while !acc.is_identity() {
            acc = acc.then(self)?;
            n += 1;
            if n > cap {
                return Err(AlgError::Overflow { limit: cap as usize });
            }
        }
        Ok(n)
    }

    /// Whether two actions agree entrywise (names ignored).
    pub fn same_matrix(&self, other: &ActionGen) -> bool {
        self.images == other.images
    }

    /// Apply the action to a form by substituting each variable with its
    /// image.
    pub fn act_on_form(&self, f: &MultiPoly) -> Result<MultiPoly, AlgError> {
        if f.vars.len() != self.dim() {
            return Err(AlgError::VariableMismatch(format!(
                "action on {} coordinates applied to form in {} variables",
                self.dim(),
                f.vars.len()
            )));
        }
        let n = self.dim();
        let mut subst = vec![vec![FieldElement::zero(self.tag); n]; n];
        for (i, (t, c)) in self.images.iter().enumerate() {
            subst[i][*t] = c.clone();
        }
        f.linear_substitute(&subst)
    }
}

/// Evaluate a word in named actions, left to right: `t4t2` applies `t4`
/// first, then `t2`.
pub fn evaluate_action_word(
    word: &crate::fpgroup::Word,
    gens: &[(String, ActionGen)],
) -> Result<ActionGen, AlgError> {
    let (n, tag) = gens
        .first()
        .map(|(_, a)| (a.dim(), a.tag()))
        .ok_or_else(|| AlgError::Parse("no action generators".into()))?;
    let mut acc = ActionGen::identity(n, tag);
    for (name, positive) in word.single_letters() {
        let g = gens
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, a)| a)
            .ok_or_else(|| AlgError::UnknownSymbol(name.to_string()))?;
        let step = if positive { g.clone() } else { g.inverse()? };
        acc = acc.then(&step)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse::{parse_poly, parse_var_list};

    fn qq_vars(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("x{}", i)).collect()
    }

    #[test]
    fn permutation_action_on_form() {
        let vars = qq_vars(3);
        let g = ActionGen::from_permutation("g", &[1, 2, 0], FieldTag::Rational).unwrap();
        let f = parse_poly("x0^2 + x1*x2", &vars, FieldTag::Rational).unwrap();
        let gf = g.act_on_form(&f).unwrap();
        let expected = parse_poly("x1^2 + x2*x0", &vars, FieldTag::Rational).unwrap();
        assert_eq!(gf, expected);
        assert_eq!(g.order(10).unwrap(), 3);
    }

    #[test]
    fn inverse_and_identity() {
        let g = ActionGen::from_permutation("g", &[2, 0, 1], FieldTag::Rational).unwrap();
        assert!(g.then(&g.inverse().unwrap()).unwrap().is_identity());
    }

    #[test]
    fn scaling_action() {
        let tag = FieldTag::Prime(29);
        let two = FieldElement::from_integer(2, tag);
        let g = ActionGen::from_scalars("s", vec![two.clone(), two.inv().unwrap()]).unwrap();
        // order of 2 mod 29 is 28
        assert_eq!(g.order(100).unwrap(), 28);
        let vars = parse_var_list("x0 x1").unwrap();
        let f = parse_poly("x0*x1", &vars, tag).unwrap();
        assert_eq!(g.act_on_form(&f).unwrap(), f);
    }

    #[test]
    fn non_permutation_rejected() {
        let one = FieldElement::one(FieldTag::Rational);
        assert!(ActionGen::new("bad", FieldTag::Rational, vec![(0, one.clone()), (0, one)]).is_err());
    }

    #[test]
    fn word_evaluation() {
        let tag = FieldTag::Rational;
        let g = ActionGen::from_permutation("g", &[1, 0], tag).unwrap();
        let gens = vec![("g".to_string(), g.clone())];
        let w = crate::fpgroup::parse_word("g^2", &["g".to_string()]).unwrap();
        assert!(evaluate_action_word(&w, &gens).unwrap().is_identity());
    }
}
