//! Exact field arithmetic: rationals, the quadratic field Q(w) with w^2 = -7,
//! the cyclotomic field Q(zeta_7), and prime fields GF(p).
//!
//! Elements are tagged; cross-tag operations are rejected and only the
//! explicit embeddings below move values between fields.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

use crate::error::AlgError;

/// Which field an element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FieldTag {
    Rational,
    /// Q(w), w^2 = -7 (w plays the role of i*sqrt(7)).
    Quad,
    /// Q(zeta_7), in the basis zeta, zeta^2, ..., zeta^6.
    Cyclotomic,
    /// GF(p) for an odd prime p.
    Prime(u64),
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Rational => write!(f, "QQ"),
            FieldTag::Quad => write!(f, "QQ(w)"),
            FieldTag::Cyclotomic => write!(f, "QQ(zeta7)"),
            FieldTag::Prime(p) => write!(f, "GF({})", p),
        }
    }
}

/// a + b*w with w^2 = -7.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadElem {
    pub a: BigRational,
    pub b: BigRational,
}

/// Element of Q(zeta_7) written as sum of c[i] * zeta^(i+1), i = 0..5.
///
/// The power basis 1, zeta, ..., zeta^5 would do equally well; this basis
/// makes the Galois action (zeta -> zeta^k) a signed permutation-like map
/// and gives a unique canonical form via 1 = -(zeta + ... + zeta^6).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycElem {
    pub coeffs: Vec<BigRational>, // always length 6
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeElem {
    pub value: u64,
    pub p: u64,
}

/// A value in one of the supported exact fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    Quad(QuadElem),
    Cyclotomic(CycElem),
    Prime(PrimeElem),
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl FieldElement {
    pub fn tag(&self) -> FieldTag {
        match self {
            FieldElement::Rational(_) => FieldTag::Rational,
            FieldElement::Quad(_) => FieldTag::Quad,
            FieldElement::Cyclotomic(_) => FieldTag::Cyclotomic,
            FieldElement::Prime(x) => FieldTag::Prime(x.p),
        }
    }

    pub fn zero(tag: FieldTag) -> Self {
        match tag {
            FieldTag::Rational => FieldElement::Rational(BigRational::zero()),
            FieldTag::Quad => FieldElement::Quad(QuadElem {
                a: BigRational::zero(),
                b: BigRational::zero(),
            }),
            FieldTag::Cyclotomic => FieldElement::Cyclotomic(CycElem {
                coeffs: vec![BigRational::zero(); 6],
            }),
            FieldTag::Prime(p) => FieldElement::Prime(PrimeElem { value: 0, p }),
        }
    }

    pub fn one(tag: FieldTag) -> Self {
        match tag {
            FieldTag::Rational => FieldElement::Rational(BigRational::one()),
            FieldTag::Quad => FieldElement::Quad(QuadElem {
                a: BigRational::one(),
                b: BigRational::zero(),
            }),
            // 1 = -(zeta + zeta^2 + ... + zeta^6)
            FieldTag::Cyclotomic => FieldElement::Cyclotomic(CycElem {
                coeffs: vec![-BigRational::one(); 6],
            }),
            FieldTag::Prime(p) => FieldElement::Prime(PrimeElem { value: 1 % p, p }),
        }
    }

    pub fn from_integer(n: i64, tag: FieldTag) -> Self {
        Self::from_rational(rat(n, 1), tag)
    }

    /// Embed a rational number into the given field (reduction mod p for GF(p)).
    pub fn from_rational(r: BigRational, tag: FieldTag) -> Self {
        match tag {
            FieldTag::Rational => FieldElement::Rational(r),
            FieldTag::Quad => FieldElement::Quad(QuadElem {
                a: r,
                b: BigRational::zero(),
            }),
            FieldTag::Cyclotomic => {
                let mut coeffs = vec![BigRational::zero(); 6];
                for c in coeffs.iter_mut() {
                    *c = -r.clone();
                }
                FieldElement::Cyclotomic(CycElem { coeffs })
            }
            FieldTag::Prime(p) => {
                let num = reduce_int_mod(r.numer(), p);
                let den = reduce_int_mod(r.denom(), p);
                // caller is responsible for p not dividing the denominator;
                // surface it as 0/0 -> panic would be unfriendly, use inverse
                let den_inv = mod_inverse(den, p).unwrap_or(0);
                FieldElement::Prime(PrimeElem {
                    value: mod_mul(num, den_inv, p),
                    p,
                })
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_zero(),
            FieldElement::Quad(q) => q.a.is_zero() && q.b.is_zero(),
            FieldElement::Cyclotomic(c) => c.coeffs.iter().all(|x| x.is_zero()),
            FieldElement::Prime(x) => x.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        self == &FieldElement::one(self.tag())
    }

    pub fn neg(&self) -> Self {
        match self {
            FieldElement::Rational(r) => FieldElement::Rational(-r.clone()),
            FieldElement::Quad(q) => FieldElement::Quad(QuadElem {
                a: -q.a.clone(),
                b: -q.b.clone(),
            }),
            FieldElement::Cyclotomic(c) => FieldElement::Cyclotomic(CycElem {
                coeffs: c.coeffs.iter().map(|x| -x.clone()).collect(),
            }),
            FieldElement::Prime(x) => FieldElement::Prime(PrimeElem {
                value: if x.value == 0 { 0 } else { x.p - x.value },
                p: x.p,
            }),
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, AlgError> {
        match (self, rhs) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => {
                Ok(FieldElement::Rational(a + b))
            }
            (FieldElement::Quad(a), FieldElement::Quad(b)) => Ok(FieldElement::Quad(QuadElem {
                a: &a.a + &b.a,
                b: &a.b + &b.b,
            })),
            (FieldElement::Cyclotomic(a), FieldElement::Cyclotomic(b)) => {
                Ok(FieldElement::Cyclotomic(CycElem {
                    coeffs: a
                        .coeffs
                        .iter()
                        .zip(&b.coeffs)
                        .map(|(x, y)| x + y)
                        .collect(),
                }))
            }
            (FieldElement::Prime(a), FieldElement::Prime(b)) if a.p == b.p => {
                Ok(FieldElement::Prime(PrimeElem {
                    value: (a.value + b.value) % a.p,
                    p: a.p,
                }))
            }
            _ => Err(AlgError::TagMismatch {
                left: self.tag(),
                right: rhs.tag(),
            }),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, AlgError> {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, AlgError> {
        match (self, rhs) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => {
                Ok(FieldElement::Rational(a * b))
            }
            (FieldElement::Quad(a), FieldElement::Quad(b)) => {
                // (a1 + b1 w)(a2 + b2 w) = a1 a2 - 7 b1 b2 + (a1 b2 + a2 b1) w
                let seven = rat(7, 1);
                Ok(FieldElement::Quad(QuadElem {
                    a: &a.a * &b.a - seven * (&a.b * &b.b),
                    b: &a.a * &b.b + &a.b * &b.a,
                }))
            }
            (FieldElement::Cyclotomic(a), FieldElement::Cyclotomic(b)) => {
                Ok(FieldElement::Cyclotomic(cyc_mul(a, b)))
            }
            (FieldElement::Prime(a), FieldElement::Prime(b)) if a.p == b.p => {
                Ok(FieldElement::Prime(PrimeElem {
                    value: mod_mul(a.value, b.value, a.p),
                    p: a.p,
                }))
            }
            _ => Err(AlgError::TagMismatch {
                left: self.tag(),
                right: rhs.tag(),
            }),
        }
    }

    pub fn inv(&self) -> Result<Self, AlgError> {
        if self.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        match self {
            FieldElement::Rational(r) => Ok(FieldElement::Rational(r.recip())),
            FieldElement::Quad(q) => {
                // 1/(a+bw) = (a-bw)/(a^2+7b^2)
                let norm = &q.a * &q.a + rat(7, 1) * (&q.b * &q.b);
                Ok(FieldElement::Quad(QuadElem {
                    a: &q.a / &norm,
                    b: -(&q.b / &norm),
                }))
            }
            FieldElement::Cyclotomic(c) => cyc_inv(c).map(FieldElement::Cyclotomic),
            FieldElement::Prime(x) => {
                let v = mod_inverse(x.value, x.p).ok_or(AlgError::DivisionByZero)?;
                Ok(FieldElement::Prime(PrimeElem { value: v, p: x.p }))
            }
        }
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, AlgError> {
        self.mul(&rhs.inv()?)
    }

    pub fn pow(&self, mut e: i64) -> Result<Self, AlgError> {
        let mut base = if e < 0 {
            e = -e;
            self.inv()?
        } else {
            self.clone()
        };
        let mut acc = FieldElement::one(self.tag());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            base = base.mul(&base)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// zeta_7 in the given field, if it exists there.
    pub fn zeta7(tag: FieldTag) -> Result<Self, AlgError> {
        match tag {
            FieldTag::Cyclotomic => {
                let mut coeffs = vec![BigRational::zero(); 6];
                coeffs[0] = BigRational::one();
                Ok(FieldElement::Cyclotomic(CycElem { coeffs }))
            }
            FieldTag::Prime(p) => {
                let z = root_of_unity(p, 7).ok_or(AlgError::MissingRoot {
                    what: "zeta_7".into(),
                    tag,
                })?;
                Ok(FieldElement::Prime(PrimeElem { value: z, p }))
            }
            _ => Err(AlgError::MissingRoot {
                what: "zeta_7".into(),
                tag,
            }),
        }
    }

    /// Primitive cube root of unity, only available in GF(p), p = 1 mod 3.
    pub fn zeta3(tag: FieldTag) -> Result<Self, AlgError> {
        match tag {
            FieldTag::Prime(p) => {
                let z = root_of_unity(p, 3).ok_or(AlgError::MissingRoot {
                    what: "zeta_3".into(),
                    tag,
                })?;
                Ok(FieldElement::Prime(PrimeElem { value: z, p }))
            }
            _ => Err(AlgError::MissingRoot {
                what: "zeta_3".into(),
                tag,
            }),
        }
    }

    /// A square root of -7 in the given field: w itself in Q(w), the Gauss sum
    /// zeta+zeta^2+zeta^4-zeta^3-zeta^5-zeta^6 in Q(zeta_7), a chosen residue in GF(p).
    pub fn sqrt_minus7(tag: FieldTag) -> Result<Self, AlgError> {
        match tag {
            FieldTag::Quad => Ok(FieldElement::Quad(QuadElem {
                a: BigRational::zero(),
                b: BigRational::one(),
            })),
            FieldTag::Cyclotomic => {
                let one = BigRational::one();
                // quadratic residues mod 7 are 1, 2, 4
                let coeffs = vec![
                    one.clone(),
                    one.clone(),
                    -one.clone(),
                    one.clone(),
                    -one.clone(),
                    -one,
                ];
                Ok(FieldElement::Cyclotomic(CycElem { coeffs }))
            }
            FieldTag::Prime(p) => {
                let r = sqrt_mod(p - 7 % p, p).ok_or(AlgError::MissingRoot {
                    what: "sqrt(-7)".into(),
                    tag,
                })?;
                Ok(FieldElement::Prime(PrimeElem { value: r, p }))
            }
            _ => Err(AlgError::MissingRoot {
                what: "sqrt(-7)".into(),
                tag,
            }),
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(r) => write!(f, "{}", r),
            FieldElement::Quad(q) => {
                if q.b.is_zero() {
                    write!(f, "{}", q.a)
                } else if q.a.is_zero() {
                    write!(f, "{}*w", q.b)
                } else {
                    write!(f, "({} + {}*w)", q.a, q.b)
                }
            }
            FieldElement::Cyclotomic(c) => {
                let mut first = true;
                for (i, x) in c.coeffs.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    if !first {
                        write!(f, " + ")?;
                    }
                    write!(f, "{}*zeta^{}", x, i + 1)?;
                    first = false;
                }
                if first {
                    write!(f, "0")?;
                }
                Ok(())
            }
            FieldElement::Prime(x) => write!(f, "{}", x.value),
        }
    }
}

/// Multiply in Q(zeta_7) using the power representation and renormalizing
/// via 1 + zeta + ... + zeta^6 = 0.
fn cyc_mul(a: &CycElem, b: &CycElem) -> CycElem {
    // powers 1..6 times powers 1..6 -> powers 2..12, fold mod 7
    let mut acc = vec![BigRational::zero(); 7]; // powers 0..6
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let k = (i + 1 + j + 1) % 7;
            acc[k] = &acc[k] + x * y;
        }
    }
    normalize_powers(acc)
}

/// Canonicalize a power-0..6 vector into the zeta..zeta^6 basis.
fn normalize_powers(acc: Vec<BigRational>) -> CycElem {
    let c0 = acc[0].clone();
    let coeffs = acc[1..].iter().map(|x| x - &c0).collect();
    CycElem { coeffs }
}

/// Invert in Q(zeta_7) by solving the 6x6 multiplication system over Q.
fn cyc_inv(a: &CycElem) -> Result<CycElem, AlgError> {
    // columns: a * zeta^(j+1) expressed in the basis, j = 0..5
    let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(6);
    for j in 0..6 {
        let mut basis_vec = vec![BigRational::zero(); 6];
        basis_vec[j] = BigRational::one();
        let prod = cyc_mul(a, &CycElem { coeffs: basis_vec });
        cols.push(prod.coeffs);
    }
    // target: 1 = -(zeta + ... + zeta^6)
    let mut rhs = vec![-BigRational::one(); 6];
    // Gaussian elimination on the 6x7 augmented system
    let mut m: Vec<Vec<BigRational>> = (0..6)
        .map(|r| (0..6).map(|c| cols[c][r].clone()).collect())
        .collect();
    for col in 0..6 {
        let piv = (col..6)
            .find(|&r| !m[r][col].is_zero())
            .ok_or(AlgError::DivisionByZero)?;
        m.swap(col, piv);
        rhs.swap(col, piv);
        let pv = m[col][col].clone();
        for r in 0..6 {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pv;
            for c in col..6 {
                m[r][c] = &m[r][c] - &factor * &m[col][c];
            }
            rhs[r] = &rhs[r] - &factor * &rhs[col];
        }
    }
    let coeffs = (0..6).map(|r| &rhs[r] / &m[r][r]).collect();
    Ok(CycElem { coeffs })
}

fn reduce_int_mod(n: &BigInt, p: u64) -> u64 {
    use num_integer::Integer as _;
    let m = n.mod_floor(&BigInt::from(p));
    let digits = m.to_u64_digits();
    if digits.1.is_empty() {
        0
    } else {
        digits.1[0]
    }
}

pub fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn mod_pow(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mod_mul(acc, base, p);
        }
        base = mod_mul(base, base, p);
        e >>= 1;
    }
    acc
}

pub fn mod_inverse(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        return None;
    }
    Some(mod_pow(a, p - 2, p))
}

/// An element of multiplicative order exactly n in GF(p)*, if n | p-1.
pub fn root_of_unity(p: u64, n: u64) -> Option<u64> {
    if (p - 1) % n != 0 {
        return None;
    }
    for g in 2..p {
        let candidate = mod_pow(g, (p - 1) / n, p);
        if candidate != 1 {
            // check order is exactly n (n is prime in all our uses)
            let mut ok = true;
            for q in 2..n {
                if n % q == 0 && mod_pow(candidate, n / q, p) == 1 {
                    ok = false;
                    break;
                }
            }
            if ok {
                return Some(candidate);
            }
        }
    }
    None
}

/// A generator of GF(p)*, by scan; sampling primes are small.
pub fn primitive_root(p: u64) -> Option<u64> {
    'outer: for g in 2..p {
        // g generates iff g^((p-1)/q) != 1 for every prime q | p-1
        let mut n = p - 1;
        let mut q = 2;
        while q * q <= n {
            if n % q == 0 {
                if mod_pow(g, (p - 1) / q, p) == 1 {
                    continue 'outer;
                }
                while n % q == 0 {
                    n /= q;
                }
            }
            q += 1;
        }
        if n > 1 && mod_pow(g, (p - 1) / n, p) == 1 {
            continue;
        }
        return Some(g);
    }
    None
}

/// Exponent e with g^e = a (mod p), by scan.
pub fn discrete_log(g: u64, a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return None;
    }
    let mut pow = 1u64;
    for e in 0..p - 1 {
        if pow == a {
            return Some(e);
        }
        pow = mod_mul(pow, g, p);
    }
    None
}

/// Square root mod p by scan; fields in this crate are small sampling primes.
pub fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    (0..p).find(|&x| mod_mul(x, x, p) == a)
}

/// Smallest prime q >= start with q = 1 (mod m).
pub fn next_prime_congruent(start: u64, m: u64, residue: u64) -> u64 {
    let mut q = start.max(2);
    loop {
        if q % m == residue && is_prime(q) {
            return q;
        }
        q += 1;
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, c: i64, d: i64) -> FieldElement {
        FieldElement::Quad(QuadElem {
            a: rat(a, b),
            b: rat(c, d),
        })
    }

    #[test]
    fn quad_norm_product() {
        // (1+w)(1-w) = 1 + 7 = 8
        let x = q(1, 1, 1, 1);
        let y = q(1, 1, -1, 1);
        assert_eq!(x.mul(&y).unwrap(), q(8, 1, 0, 1));
    }

    #[test]
    fn zeta_times_zeta6_is_one() {
        let z = FieldElement::zeta7(FieldTag::Cyclotomic).unwrap();
        let z6 = z.pow(6).unwrap();
        assert_eq!(z.mul(&z6).unwrap(), FieldElement::one(FieldTag::Cyclotomic));
    }

    #[test]
    fn u10_constant_times_conjugate() {
        // ((49+13w)/56) * ((49-13w)/56) = (49^2 + 7*13^2)/56^2 = 8/7
        let x = FieldElement::Quad(QuadElem {
            a: rat(49, 56),
            b: rat(13, 56),
        });
        let y = FieldElement::Quad(QuadElem {
            a: rat(49, 56),
            b: rat(-13, 56),
        });
        assert_eq!(x.mul(&y).unwrap(), q(8, 7, 0, 1));
    }

    #[test]
    fn gauss_sum_squares_to_minus7() {
        let s = FieldElement::sqrt_minus7(FieldTag::Cyclotomic).unwrap();
        let s2 = s.mul(&s).unwrap();
        assert_eq!(s2, FieldElement::from_integer(-7, FieldTag::Cyclotomic));
    }

    #[test]
    fn cyclotomic_inverse_roundtrip() {
        let z = FieldElement::zeta7(FieldTag::Cyclotomic).unwrap();
        let x = z
            .add(&FieldElement::from_integer(3, FieldTag::Cyclotomic))
            .unwrap();
        let inv = x.inv().unwrap();
        assert_eq!(x.mul(&inv).unwrap(), FieldElement::one(FieldTag::Cyclotomic));
    }

    #[test]
    fn gf37_has_sqrt_minus7_and_zeta3() {
        let r = FieldElement::sqrt_minus7(FieldTag::Prime(37)).unwrap();
        let r2 = r.mul(&r).unwrap();
        assert_eq!(r2, FieldElement::from_integer(-7, FieldTag::Prime(37)));
        let z3 = FieldElement::zeta3(FieldTag::Prime(37)).unwrap();
        assert!(!z3.is_one());
        assert!(z3.pow(3).unwrap().is_one());
    }

    #[test]
    fn smallest_prime_with_all_roots_is_43() {
        // needs zeta_7, zeta_3 and sqrt(-7): p = 1 mod 21 suffices
        assert_eq!(next_prime_congruent(2, 21, 1), 43);
        assert!(FieldElement::zeta7(FieldTag::Prime(43)).is_ok());
        assert!(FieldElement::zeta3(FieldTag::Prime(43)).is_ok());
        assert!(FieldElement::sqrt_minus7(FieldTag::Prime(43)).is_ok());
    }

    #[test]
    fn reduction_is_multiplicative_at_37() {
        // (1+w)(1-w) = 8 must survive reduction with either root choice
        let root = FieldElement::sqrt_minus7(FieldTag::Prime(37)).unwrap();
        if let FieldElement::Prime(r) = root {
            let one = 1u64;
            let lhs = mod_mul((one + r.value) % 37, (37 + one - r.value) % 37, 37);
            assert_eq!(lhs, 8 % 37);
        } else {
            unreachable!()
        }
    }
}
