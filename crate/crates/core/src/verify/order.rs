//! Monomial orders for Gröbner computations.

use std::cmp::Ordering;

use crate::exactalg::poly::Exponents;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Degree-reverse-lexicographic (the default).
    Degrevlex,
    /// Lexicographic, first variable most significant.
    Lex,
}

impl MonomialOrder {
    pub fn compare(&self, a: &Exponents, b: &Exponents) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Degrevlex => {
                let da: u32 = a.iter().map(|&x| x as u32).sum();
                let db: u32 = b.iter().map(|&x| x as u32).sum();
                match da.cmp(&db) {
                    Ordering::Equal => {
                        // reverse lex: larger means smaller exponent in the
                        // last variable where they differ
                        for (x, y) in a.iter().zip(b.iter()).rev() {
                            match x.cmp(y) {
                                Ordering::Equal => continue,
                                Ordering::Less => return Ordering::Greater,
                                Ordering::Greater => return Ordering::Less,
                            }
                        }
                        Ordering::Equal
                    }
                    other => other,
                }
            }
        }
    }

    /// The largest exponent vector of a nonzero polynomial's support.
    pub fn leading<'a, I>(&self, exps: I) -> Option<&'a Exponents>
    where
        I: Iterator<Item = &'a Exponents>,
    {
        exps.max_by(|a, b| self.compare(a, b))
    }
}

pub fn exp_divides(a: &Exponents, b: &Exponents) -> bool {
    a.iter().zip(b.iter()).all(|(x, y)| x <= y)
}

pub fn exp_lcm(a: &Exponents, b: &Exponents) -> Exponents {
    a.iter().zip(b.iter()).map(|(x, y)| *x.max(y)).collect()
}

pub fn exp_sub(a: &Exponents, b: &Exponents) -> Exponents {
    a.iter().zip(b.iter()).map(|(x, y)| x - y).collect()
}

pub fn exp_add(a: &Exponents, b: &Exponents) -> Exponents {
    a.iter().zip(b.iter()).map(|(x, y)| x + y).collect()
}

pub fn exp_coprime(a: &Exponents, b: &Exponents) -> bool {
    a.iter().zip(b.iter()).all(|(x, y)| *x == 0 || *y == 0)
}

pub fn exp_degree(a: &Exponents) -> u32 {
    a.iter().map(|&x| x as u32).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrevlex_ordering() {
        let o = MonomialOrder::Degrevlex;
        // x^2 > xy > y^2 > xz > yz > z^2 in degrevlex with x > y > z
        let x2 = vec![2, 0, 0];
        let xy = vec![1, 1, 0];
        let y2 = vec![0, 2, 0];
        let xz = vec![1, 0, 1];
        let yz = vec![0, 1, 1];
        let z2 = vec![0, 0, 2];
        let seq = [&x2, &xy, &y2, &xz, &yz, &z2];
        for w in seq.windows(2) {
            assert_eq!(o.compare(w[0], w[1]), Ordering::Greater);
        }
        // degree dominates
        assert_eq!(o.compare(&vec![0, 0, 3], &x2), Ordering::Greater);
    }

    #[test]
    fn lex_ordering() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.compare(&vec![1, 0], &vec![0, 5]), Ordering::Greater);
    }

    #[test]
    fn exponent_helpers() {
        assert!(exp_divides(&vec![1, 0], &vec![2, 3]));
        assert!(!exp_divides(&vec![1, 4], &vec![2, 3]));
        assert_eq!(exp_lcm(&vec![1, 4], &vec![2, 3]), vec![2, 4]);
        assert!(exp_coprime(&vec![1, 0], &vec![0, 3]));
    }
}
