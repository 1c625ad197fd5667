//! Hilbert series, Hilbert functions, and Hilbert polynomials of
//! homogeneous ideals, computed from the leading-term monomial ideal of a
//! Groebner basis.
//!
//! The Hilbert series of `k[x_1..x_n]/I` is `N(t) / (1-t)^n` where the
//! numerator `N` is computed by the standard colon-ideal recursion on the
//! monomial generators of `LT(I)`:
//!
//! ```text
//! N(J + <m>) = N(J) - t^deg(m) * N(J : m)
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::AlgError;

use super::groebner::GroebnerBasis;
use super::order::{exp_degree, exp_divides};
use crate::exactalg::poly::Exponents;

/// Hilbert data for a homogeneous ideal in `n` variables.
#[derive(Clone, Debug)]
pub struct HilbertData {
    /// Values `h(0), h(1), ..., h(cutoff)` of the Hilbert function.
    pub values: Vec<BigInt>,
    /// Coefficients of the Hilbert polynomial in ascending powers of `m`.
    /// Empty when the quotient is eventually zero (empty projective set).
    pub polynomial: Vec<BigRational>,
    /// Dimension of the projective zero set: degree of the Hilbert
    /// polynomial, or -1 when it is identically zero.
    pub dimension: i64,
    /// Degree of the projective scheme: `d! *` leading coefficient of the
    /// Hilbert polynomial (1 by convention for the empty set).
    pub degree: BigInt,
    /// Smallest `m0` such that `h(m) = HP(m)` is guaranteed for `m >= m0`.
    pub regularity: usize,
}

fn minimalize(mut gens: Vec<Exponents>) -> Vec<Exponents> {
    gens.sort_by_key(|g| exp_degree(g));
    gens.dedup();
    let mut keep: Vec<Exponents> = Vec::new();
    for g in gens {
        if !keep.iter().any(|h| exp_divides(h, &g)) {
            keep.push(g);
        }
    }
    keep
}

/// Coefficients of `1 - t^d`.
fn one_minus_power(d: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); d + 1];
    c[0] = BigInt::one();
    c[d] -= BigInt::one();
    c
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// `a -= t^shift * b`.
fn poly_sub_shifted(a: &mut Vec<BigInt>, b: &[BigInt], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, BigInt::zero());
    }
    for (j, bj) in b.iter().enumerate() {
        a[j + shift] -= bj;
    }
}

/// Numerator of the Hilbert series of the monomial ideal generated by
/// `gens` (a minimal generating set is computed internally).
fn series_numerator(gens: Vec<Exponents>) -> Vec<BigInt> {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    if gens.iter().any(|g| exp_degree(g) == 0) {
        // The ideal is the whole ring.
        return vec![BigInt::zero()];
    }
    // Base case: pairwise coprime generators multiply out directly.
    let coprime = gens.iter().enumerate().all(|(i, g)| {
        gens[i + 1..]
            .iter()
            .all(|h| g.iter().zip(h).all(|(&a, &b)| a == 0 || b == 0))
    });
    if coprime {
        let mut num = vec![BigInt::one()];
        for g in &gens {
            num = poly_mul(&num, &one_minus_power(exp_degree(g) as usize));
        }
        return num;
    }
    // Split off the generator of largest degree: N(J + <m>) uses the
    // smaller ideal J twice (once as a colon ideal).
    let (m, rest) = gens.split_last().unwrap();
    let colon: Vec<Exponents> = rest
        .iter()
        .map(|h| {
            h.iter()
                .zip(m)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect()
        })
        .collect();
    let mut num = series_numerator(rest.to_vec());
    let colon_num = series_numerator(colon);
    poly_sub_shifted(&mut num, &colon_num, exp_degree(m) as usize);
    num
}

fn binom(top: i64, k: usize) -> BigInt {
    if top < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(top - i as i64);
    }
    for i in 1..=k {
        acc /= BigInt::from(i as i64);
    }
    acc
}

/// Polynomial `(x+1)(x+2)...(x+d) / d!` in ascending coefficients; this is
/// the number of monomials of degree `x` in `d+1` variables, as a
/// polynomial identity valid for integer `x >= -d`.
fn monomial_count_poly(d: usize) -> Vec<BigRational> {
    let mut coeffs = vec![BigRational::one()];
    for s in 1..=d as i64 {
        let mut next = vec![BigRational::zero(); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i] += c * BigRational::from(BigInt::from(s));
            next[i + 1] += c;
        }
        coeffs = next;
    }
    let mut fact = BigInt::one();
    for i in 2..=d {
        fact *= BigInt::from(i as u64);
    }
    let fact = BigRational::from(fact);
    coeffs.into_iter().map(|c| c / fact.clone()).collect()
}

/// Substitute `m - k` into a polynomial in `m`, returning coefficients in
/// ascending powers of `m`.
fn shift_poly(coeffs: &[BigRational], k: i64) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); coeffs.len()];
    // (m - k)^i expanded by iterated multiplication.
    let mut power = vec![BigRational::one()];
    for (i, c) in coeffs.iter().enumerate() {
        for (j, p) in power.iter().enumerate() {
            out[j] += c * p;
        }
        if i + 1 < coeffs.len() {
            let mut next = vec![BigRational::zero(); power.len() + 1];
            for (j, p) in power.iter().enumerate() {
                next[j] += p * BigRational::from(BigInt::from(-k));
                next[j + 1] += p;
            }
            power = next;
        }
    }
    out
}

/// Hilbert function values and Hilbert polynomial of the quotient by a
/// homogeneous ideal, read off a Groebner basis. `values` covers degrees
/// `0..=cutoff`.
pub fn hilbert_polynomial(gb: &GroebnerBasis, cutoff: usize) -> Result<HilbertData, AlgError> {
    if !gb.homogeneous_input {
        return Err(AlgError::NotHomogeneous);
    }
    let n = gb.vars.len();
    if n == 0 {
        return Err(AlgError::Pipeline(
            "hilbert_polynomial: empty variable list".into(),
        ));
    }
    let numer = series_numerator(gb.leading_exponents());

    // Hilbert function: h(m) = sum_k N_k * C(m - k + n - 1, n - 1).
    let values: Vec<BigInt> = (0..=cutoff as i64)
        .map(|m| {
            numer
                .iter()
                .enumerate()
                .map(|(k, c)| c * binom(m - k as i64 + n as i64 - 1, n - 1))
                .sum()
        })
        .collect();

    // Hilbert polynomial: same sum with the binomial as a polynomial in m.
    let base = monomial_count_poly(n - 1);
    let mut polynomial = vec![BigRational::zero(); n];
    for (k, c) in numer.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let shifted = shift_poly(&base, k as i64);
        let c = BigRational::from(c.clone());
        for (j, s) in shifted.iter().enumerate() {
            polynomial[j] += s * c.clone();
        }
    }
    while polynomial.last().is_some_and(|c| c.is_zero()) {
        polynomial.pop();
    }

    let dimension = polynomial.len() as i64 - 1;
    let degree = if let Some(lc) = polynomial.last() {
        let d = polynomial.len() - 1;
        let mut fact = BigInt::one();
        for i in 2..=d {
            fact *= BigInt::from(i as u64);
        }
        let scaled = lc * BigRational::from(fact);
        debug_assert!(scaled.is_integer());
        scaled.to_integer()
    } else {
        BigInt::one()
    };
    debug_assert!(degree.is_positive() || polynomial.is_empty());

    let max_k = numer
        .iter()
        .enumerate()
        .rev()
        .find(|(_, c)| !c.is_zero())
        .map(|(k, _)| k)
        .unwrap_or(0);
    let regularity = max_k.saturating_sub(n - 1);

    Ok(HilbertData {
        values,
        polynomial,
        dimension,
        degree,
        regularity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::field::FieldTag;
    use crate::exactalg::parse::{parse_poly, parse_var_list};
    use crate::exactalg::poly::MultiPoly;
    use crate::verify::groebner::groebner_basis;
    use crate::verify::order::MonomialOrder;

    fn gb_of(texts: &[&str], vars: &str, p: u64) -> GroebnerBasis {
        let vars = parse_var_list(vars).unwrap();
        let tag = FieldTag::Prime(p);
        let ideal: Vec<MultiPoly> = texts
            .iter()
            .map(|t| parse_poly(t, &vars, tag).unwrap())
            .collect();
        groebner_basis(&ideal, MonomialOrder::Degrevlex).unwrap()
    }

    fn poly_i64(coeffs: &[i64]) -> Vec<BigRational> {
        coeffs
            .iter()
            .map(|&c| BigRational::from(BigInt::from(c)))
            .collect()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn projective_plane_zero_ideal() {
        // Zero ideal in three variables: h(m) = (m+1)(m+2)/2.
        let vars = parse_var_list("x y z").unwrap();
        let zero = MultiPoly::zero(vars, FieldTag::Prime(7));
        let gb = groebner_basis(&[zero], MonomialOrder::Degrevlex).unwrap();
        let data = hilbert_polynomial(&gb, 6).unwrap();
        let expect: Vec<BigInt> = (0..=6)
            .map(|m: i64| BigInt::from((m + 1) * (m + 2) / 2))
            .collect();
        assert_eq!(data.values, expect);
        assert_eq!(data.polynomial, vec![rat(1, 1), rat(3, 2), rat(1, 2)]);
        assert_eq!(data.dimension, 2);
        assert_eq!(data.degree, BigInt::from(1));
    }

    #[test]
    fn twisted_cubic_hilbert() {
        let gb = gb_of(
            &["x*z - y^2", "x*u - y*z", "y*u - z^2"],
            "x y z u",
            31,
        );
        let data = hilbert_polynomial(&gb, 8).unwrap();
        // h(m) = 3m + 1 for all m >= 0 (and h(0) = 1 matches).
        assert_eq!(data.polynomial, poly_i64(&[1, 3]));
        assert_eq!(data.dimension, 1);
        assert_eq!(data.degree, BigInt::from(3));
        for (m, v) in data.values.iter().enumerate() {
            assert_eq!(*v, BigInt::from(3 * m as i64 + 1));
        }
        assert!(data.regularity <= 1);
    }

    #[test]
    fn hypersurface_degree_matches() {
        // A smooth quartic surface in P^3.
        let gb = gb_of(&["x^4 + y^4 + z^4 + u^4"], "x y z u", 13);
        let data = hilbert_polynomial(&gb, 8).unwrap();
        assert_eq!(data.dimension, 2);
        assert_eq!(data.degree, BigInt::from(4));
        // h(m) = C(m+3,3) - C(m-1,3).
        for (m, v) in data.values.iter().enumerate() {
            let m = m as i64;
            let expect = binom(m + 3, 3) - binom(m - 1, 3);
            assert_eq!(*v, expect);
        }
    }

    #[test]
    fn whole_ring_ideal_is_empty_set() {
        let gb = gb_of(&["x", "y"], "x y", 7);
        let data = hilbert_polynomial(&gb, 5).unwrap();
        assert!(data.polynomial.is_empty());
        assert_eq!(data.dimension, -1);
        assert_eq!(data.values[0], BigInt::from(1));
        assert!(data.values[1..].iter().all(|v| v.is_zero()));
    }

    #[test]
    fn points_in_projective_plane() {
        // Three non-collinear points: HP = 3 (dimension 0, degree 3).
        // Points [1:0:0], [0:1:0], [0:0:1] give the ideal (xy, xz, yz).
        let gb = gb_of(&["x*y", "x*z", "y*z"], "x y z", 11);
        let data = hilbert_polynomial(&gb, 6).unwrap();
        assert_eq!(data.polynomial, poly_i64(&[3]));
        assert_eq!(data.dimension, 0);
        assert_eq!(data.degree, BigInt::from(3));
    }

    #[test]
    fn inhomogeneous_input_rejected() {
        let gb = gb_of(&["x^2 + y - 1"], "x y", 7);
        assert!(matches!(
            hilbert_polynomial(&gb, 4),
            Err(AlgError::NotHomogeneous)
        ));
    }
}
