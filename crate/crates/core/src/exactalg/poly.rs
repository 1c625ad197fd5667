//! Multivariate polynomials with exact coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::AlgError;
use crate::exactalg::field::{FieldElement, FieldTag, PrimeElem, QuadElem};

/// Exponent vector; index i is the exponent of the i-th declared variable.
pub type Exponents = Vec<u16>;

/// A polynomial over a declared, ordered variable list. Zero coefficients
/// are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiPoly {
    pub vars: Vec<String>,
    pub tag: FieldTag,
    terms: BTreeMap<Exponents, FieldElement>,
}

impl MultiPoly {
    pub fn zero(vars: Vec<String>, tag: FieldTag) -> Self {
        MultiPoly {
            vars,
            tag,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(
        vars: Vec<String>,
        tag: FieldTag,
        terms: impl IntoIterator<Item = (Exponents, FieldElement)>,
    ) -> Result<Self, AlgError> {
        let mut poly = Self::zero(vars, tag);
        for (exp, coeff) in terms {
            poly.add_term(exp, coeff)?;
        }
        Ok(poly)
    }

    /// Single monomial c * x^exp.
    pub fn monomial(vars: Vec<String>, exp: Exponents, coeff: FieldElement) -> Self {
        let tag = coeff.tag();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        MultiPoly { vars, tag, terms }
    }

    pub fn variable(vars: Vec<String>, index: usize, tag: FieldTag) -> Self {
        let mut exp = vec![0u16; vars.len()];
        exp[index] = 1;
        Self::monomial(vars, exp, FieldElement::one(tag))
    }

    pub fn constant(vars: Vec<String>, value: FieldElement) -> Self {
        let n = vars.len();
        Self::monomial(vars, vec![0u16; n], value)
    }

    pub fn add_term(&mut self, exp: Exponents, coeff: FieldElement) -> Result<(), AlgError> {
        if coeff.tag() != self.tag {
            return Err(AlgError::TagMismatch {
                left: self.tag,
                right: coeff.tag(),
            });
        }
        if coeff.is_zero() {
            return Ok(());
        }
        match self.terms.remove(&exp) {
            None => {
                self.terms.insert(exp, coeff);
            }
            Some(old) => {
                let sum = old.add(&coeff)?;
                if !sum.is_zero() {
                    self.terms.insert(exp, sum);
                }
            }
        }
        Ok(())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &FieldElement)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &Exponents) -> FieldElement {
        self.terms
            .get(exp)
            .cloned()
            .unwrap_or_else(|| FieldElement::zero(self.tag))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u32).sum())
            .max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self
            .terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u32).sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, AlgError> {
        self.check_compatible(rhs)?;
        let mut out = self.clone();
        for (exp, coeff) in rhs.terms.iter() {
            out.add_term(exp.clone(), coeff.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, AlgError> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for coeff in out.terms.values_mut() {
            *coeff = coeff.neg();
        }
        out
    }

    pub fn scale(&self, c: &FieldElement) -> Result<Self, AlgError> {
        if c.is_zero() {
            return Ok(Self::zero(self.vars.clone(), self.tag));
        }
        let mut out = Self::zero(self.vars.clone(), self.tag);
        for (exp, coeff) in self.terms.iter() {
            out.add_term(exp.clone(), coeff.mul(c)?)?;
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, AlgError> {
        self.check_compatible(rhs)?;
        let mut out = Self::zero(self.vars.clone(), self.tag);
        for (ea, ca) in self.terms.iter() {
            for (eb, cb) in rhs.terms.iter() {
                let exp: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(exp, ca.mul(cb)?)?;
            }
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[FieldElement]) -> Result<FieldElement, AlgError> {
        if point.len() != self.vars.len() {
            return Err(AlgError::DimensionMismatch {
                expected: self.vars.len(),
                got: point.len(),
            });
        }
        let mut acc = FieldElement::zero(self.tag);
        for (exp, coeff) in self.terms.iter() {
            let mut term = coeff.clone();
            for (i, &e) in exp.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&point[i].pow(e as i64)?)?;
                }
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Formal partial derivatives, one per declared variable.
    pub fn gradient(&self) -> Result<Vec<MultiPoly>, AlgError> {
        let n = self.vars.len();
        let mut out = vec![Self::zero(self.vars.clone(), self.tag); n];
        for (exp, coeff) in self.terms.iter() {
            for i in 0..n {
                if exp[i] == 0 {
                    continue;
                }
                let mut e = exp.clone();
                e[i] -= 1;
                let c = coeff.mul(&FieldElement::from_integer(exp[i] as i64, self.tag))?;
                out[i].add_term(e, c)?;
            }
        }
        Ok(out)
    }

    /// Substitute each variable by a linear form in the same variables:
    /// x_i -> sum_j subst[i][j] * x_j.
    pub fn linear_substitute(&self, subst: &[Vec<FieldElement>]) -> Result<Self, AlgError> {
        let n = self.vars.len();
        if subst.len() != n {
            return Err(AlgError::DimensionMismatch {
                expected: n,
                got: subst.len(),
            });
        }
        let images: Vec<MultiPoly> = subst
            .iter()
            .map(|row| {
                let mut f = Self::zero(self.vars.clone(), self.tag);
                for (j, c) in row.iter().enumerate() {
                    let mut e = vec![0u16; n];
                    e[j] = 1;
                    f.add_term(e, c.clone())?;
                }
                Ok(f)
            })
            .collect::<Result<_, AlgError>>()?;
        let mut out = Self::zero(self.vars.clone(), self.tag);
        for (exp, coeff) in self.terms.iter() {
            let mut term = Self::constant(self.vars.clone(), coeff.clone());
            for (i, &e) in exp.iter().enumerate() {
                for _ in 0..e {
                    term = term.mul(&images[i])?;
                }
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Apply a map to every coefficient (field embedding or reduction).
    pub fn map_coeffs<F>(&self, new_tag: FieldTag, f: F) -> Result<Self, AlgError>
    where
        F: Fn(&FieldElement) -> Result<FieldElement, AlgError>,
    {
        let mut out = Self::zero(self.vars.clone(), new_tag);
        for (exp, coeff) in self.terms.iter() {
            out.add_term(exp.clone(), f(coeff)?)?;
        }
        Ok(out)
    }

    /// Leading coefficient under plain lexicographic exponent order; used for
    /// normalizing solved sections to a designated coefficient of 1.
    pub fn first_nonzero_coeff(&self) -> Option<(&Exponents, &FieldElement)> {
        self.terms.iter().next()
    }

    pub fn normalized(&self) -> Result<Self, AlgError> {
        match self.first_nonzero_coeff() {
            None => Ok(self.clone()),
            Some((_, c)) => self.scale(&c.inv()?),
        }
    }

    fn check_compatible(&self, rhs: &Self) -> Result<(), AlgError> {
        if self.tag != rhs.tag {
            return Err(AlgError::TagMismatch {
                left: self.tag,
                right: rhs.tag,
            });
        }
        if self.vars != rhs.vars {
            return Err(AlgError::VariableMismatch(format!(
                "{:?} vs {:?}",
                self.vars, rhs.vars
            )));
        }
        Ok(())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, coeff) in self.terms.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let is_const = exp.iter().all(|&e| e == 0);
            if is_const || !coeff.is_one() {
                write!(f, "{}", coeff)?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            let mut need_star = false;
            for (i, &e) in exp.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if need_star {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.vars[i])?;
                if e > 1 {
                    write!(f, "^{}", e)?;
                }
                need_star = true;
            }
        }
        Ok(())
    }
}

/// Reduce a polynomial over QQ or QQ(w) modulo p, mapping w to `root`.
pub fn reduce_mod_p(f: &MultiPoly, p: u64, root: u64) -> Result<MultiPoly, AlgError> {
    use crate::exactalg::field::{mod_inverse, mod_mul};
    if mod_mul(root, root, p) != (p - 7 % p) % p {
        return Err(AlgError::BadRootChoice { root, p });
    }
    let reduce_rat = |r: &num_rational::BigRational| -> Result<u64, AlgError> {
        let num = big_mod(r.numer(), p);
        let den = big_mod(r.denom(), p);
        let inv = mod_inverse(den, p).ok_or(AlgError::BadDenominator { p })?;
        Ok(mod_mul(num, inv, p))
    };
    f.map_coeffs(FieldTag::Prime(p), |c| {
        let value = match c {
            FieldElement::Rational(r) => reduce_rat(r)?,
            FieldElement::Quad(QuadElem { a, b }) => {
                (reduce_rat(a)? + mod_mul(reduce_rat(b)?, root, p)) % p
            }
            _ => {
                return Err(AlgError::TagMismatch {
                    left: FieldTag::Quad,
                    right: c.tag(),
                })
            }
        };
        Ok(FieldElement::Prime(PrimeElem { value, p }))
    })
}

fn big_mod(n: &num_bigint::BigInt, p: u64) -> u64 {
    use num_integer::Integer as _;
    let m = n.mod_floor(&num_bigint::BigInt::from(p));
    if m.is_zero() {
        0
    } else {
        m.to_u64_digits().1[0]
    }
}

/// All exponent vectors of total degree d in n variables, in lexicographic order.
pub fn monomials_of_degree(nvars: usize, degree: u16) -> Vec<Exponents> {
    let mut out = Vec::new();
    let mut current = vec![0u16; nvars];
    fill(&mut out, &mut current, 0, degree);
    out
}

fn fill(out: &mut Vec<Exponents>, current: &mut Exponents, pos: usize, remaining: u16) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        out.push(current.clone());
        current[pos] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        fill(out, current, pos + 1, remaining - e);
        current[pos] = 0;
    }
}
