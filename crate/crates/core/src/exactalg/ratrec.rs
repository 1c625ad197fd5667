//! Chinese remaindering and rational reconstruction: recover a rational
//! number from its images modulo one or several primes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Combine residue/modulus pairs with pairwise coprime moduli into a
/// single residue modulo their product.
pub fn crt(parts: &[(BigInt, BigInt)]) -> Option<(BigInt, BigInt)> {
    let mut acc = (BigInt::zero(), BigInt::one());
    for (r, m) in parts {
        let (a, n) = acc;
        let e = n.extended_gcd(m);
        if !e.gcd.is_one() {
            return None;
        }
        let prod = &n * m;
        // x = a (mod n), x = r (mod m): x = a + n * (inv(n) * (r - a) mod m)
        let t = (&e.x * (r - &a)).mod_floor(m);
        acc = ((a + n * t).mod_floor(&prod), prod);
    }
    Some(acc)
}

/// Recover the unique rational p/q with |p|, q <= sqrt(m/2) whose image
/// modulo m is a, if one exists (standard half-extended Euclid).
pub fn rational_reconstruct(a: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        (r0, r1) = (r1.clone(), r0 - &q * r1);
        (t0, t1) = (t1.clone(), t0 - &q * t1);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    if t1.is_negative() {
        r1 = -r1;
        t1 = -t1;
    }
    Some(BigRational::new(r1, t1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn image(r: &BigRational, p: i64) -> BigInt {
        let m = BigInt::from(p);
        let d = r.denom().mod_floor(&m);
        let e = d.extended_gcd(&m);
        (r.numer() * e.x).mod_floor(&m)
    }

    #[test]
    fn reconstructs_small_rationals() {
        let m = BigInt::from(101 * 103 * 107i64);
        for r in [rat(22, 7), rat(-3, 5), rat(0, 1), rat(355, 113)] {
            let parts: Vec<(BigInt, BigInt)> = [101, 103, 107]
                .iter()
                .map(|&p| (image(&r, p), BigInt::from(p)))
                .collect();
            let (a, m2) = crt(&parts).unwrap();
            assert_eq!(m2, m);
            assert_eq!(rational_reconstruct(&a, &m).unwrap(), r);
        }
    }

    #[test]
    fn crt_agrees_componentwise() {
        let parts = vec![
            (BigInt::from(2), BigInt::from(5)),
            (BigInt::from(3), BigInt::from(7)),
            (BigInt::from(4), BigInt::from(11)),
        ];
        let (a, m) = crt(&parts).unwrap();
        assert_eq!(m, BigInt::from(385));
        for (r, p) in &parts {
            assert_eq!(&a.mod_floor(p), r);
        }
        let x = a.to_i64().unwrap();
        assert!((0..385).contains(&x));
    }

    #[test]
    fn crt_rejects_shared_factors() {
        let parts = vec![
            (BigInt::from(1), BigInt::from(6)),
            (BigInt::from(2), BigInt::from(9)),
        ];
        assert!(crt(&parts).is_none());
    }

    #[test]
    fn reconstruction_fails_outside_the_bound() {
        // the image of 1234/4567 modulo a single small prime cannot
        // reconstruct correctly: the bound sqrt(m/2) is too small
        let small = BigInt::from(101);
        let r = rat(1234, 4567);
        let a = image(&r, 101);
        assert_ne!(rational_reconstruct(&a, &small), Some(r));
    }
}
