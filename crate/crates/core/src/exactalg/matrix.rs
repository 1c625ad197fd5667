//! Dense exact matrices over a single field and their elimination routines.

use crate::error::AlgError;
use crate::exactalg::field::{FieldElement, FieldTag};

/// Rectangular matrix with entries all carrying the same field tag.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub tag: FieldTag,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize, tag: FieldTag) -> Self {
        Matrix {
            rows,
            cols,
            tag,
            data: vec![FieldElement::zero(tag); rows * cols],
        }
    }

    pub fn identity(n: usize, tag: FieldTag) -> Self {
        let mut m = Self::zero(n, n, tag);
        for i in 0..n {
            *m.at_mut(i, i) = FieldElement::one(tag);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<FieldElement>>, tag: FieldTag) -> Result<Self, AlgError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(AlgError::DimensionMismatch {
                    expected: ncols,
                    got: row.len(),
                });
            }
            for x in row {
                if x.tag() != tag {
                    return Err(AlgError::TagMismatch {
                        left: tag,
                        right: x.tag(),
                    });
                }
                data.push(x);
            }
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            tag,
            data,
        })
    }

    pub fn at(&self, r: usize, c: usize) -> &FieldElement {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut FieldElement {
        &mut self.data[r * self.cols + c]
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Result<Vec<FieldElement>, AlgError> {
        if v.len() != self.cols {
            return Err(AlgError::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        let mut out = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut acc = FieldElement::zero(self.tag);
            for c in 0..self.cols {
                if self.at(r, c).is_zero() || v[c].is_zero() {
                    continue;
                }
                acc = acc.add(&self.at(r, c).mul(&v[c])?)?;
            }
            out.push(acc);
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, AlgError> {
        if self.cols != rhs.rows {
            return Err(AlgError::DimensionMismatch {
                expected: self.cols,
                got: rhs.rows,
            });
        }
        let mut out = Matrix::zero(self.rows, rhs.cols, self.tag);
        for r in 0..self.rows {
            for k in 0..self.cols {
                if self.at(r, k).is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    if rhs.at(k, c).is_zero() {
                        continue;
                    }
                    let term = self.at(r, k).mul(rhs.at(k, c))?;
                    *out.at_mut(r, c) = out.at(r, c).add(&term)?;
                }
            }
        }
        Ok(out)
    }

    /// Row-reduce in place; returns the pivot column of each pivot row.
    pub fn row_reduce(&mut self) -> Result<Vec<usize>, AlgError> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let Some(pr) = (row..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, pr);
            let inv = self.at(row, col).inv()?;
            for c in col..self.cols {
                *self.at_mut(row, c) = self.at(row, c).mul(&inv)?;
            }
            for r in 0..self.rows {
                if r == row || self.at(r, col).is_zero() {
                    continue;
                }
                let factor = self.at(r, col).clone();
                for c in col..self.cols {
                    let t = factor.mul(self.at(row, c))?;
                    *self.at_mut(r, c) = self.at(r, c).sub(&t)?;
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        Ok(pivots)
    }

    /// Inverse of a square matrix, or `None` if singular.
    pub fn inverse(&self) -> Result<Option<Matrix>, AlgError> {
        if self.rows != self.cols {
            return Err(AlgError::DimensionMismatch {
                expected: self.rows,
                got: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n, self.tag);
        for r in 0..n {
            for c in 0..n {
                *aug.at_mut(r, c) = self.at(r, c).clone();
            }
            *aug.at_mut(r, n + r) = FieldElement::one(self.tag);
        }
        let pivots = aug.row_reduce()?;
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Ok(None);
        }
        let mut inv = Matrix::zero(n, n, self.tag);
        for r in 0..n {
            for c in 0..n {
                *inv.at_mut(r, c) = aug.at(r, n + c).clone();
            }
        }
        Ok(Some(inv))
    }

    pub fn rank(&self) -> Result<usize, AlgError> {
        let mut m = self.clone();
        Ok(m.row_reduce()?.len())
    }

    /// Exact basis of the right null space. rank + returned dimension = cols.
    pub fn kernel(&self) -> Result<Vec<Vec<FieldElement>>, AlgError> {
        let mut m = self.clone();
        let pivots = m.row_reduce()?;
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![FieldElement::zero(self.tag); self.cols];
            v[fc] = FieldElement::one(self.tag);
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = m.at(prow, fc).neg();
            }
            basis.push(v);
        }
        Ok(basis)
    }

    /// Solve self * x = b; returns one solution if the system is consistent.
    pub fn solve(&self, b: &[FieldElement]) -> Result<Option<Vec<FieldElement>>, AlgError> {
        if b.len() != self.rows {
            return Err(AlgError::DimensionMismatch {
                expected: self.rows,
                got: b.len(),
            });
        }
        let mut aug = Matrix::zero(self.rows, self.cols + 1, self.tag);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *aug.at_mut(r, c) = self.at(r, c).clone();
            }
            *aug.at_mut(r, self.cols) = b[r].clone();
        }
        let pivots = aug.row_reduce()?;
        if pivots.contains(&self.cols) {
            return Ok(None); // inconsistent
        }
        let mut x = vec![FieldElement::zero(self.tag); self.cols];
        for (prow, &pcol) in pivots.iter().enumerate() {
            x[pcol] = aug.at(prow, self.cols).clone();
        }
        Ok(Some(x))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::field::{mod_mul, FieldElement as FE};
    use rand::{Rng, SeedableRng};

    #[test]
    fn identity_kernel_is_empty() {
        let m = Matrix::identity(3, FieldTag::Rational);
        assert!(m.kernel().unwrap().is_empty());
    }

    #[test]
    fn row_of_ones_over_gf7() {
        let tag = FieldTag::Prime(7);
        let row = vec![FE::one(tag), FE::one(tag), FE::one(tag)];
        let m = Matrix::from_rows(vec![row], tag).unwrap();
        let k = m.kernel().unwrap();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).unwrap().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn random_rank45_kernel_over_gf43() {
        // 50x55 of rank 45: product of random 50x45 and 45x55 full-rank factors
        let p = 43u64;
        let tag = FieldTag::Prime(p);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let a: Vec<Vec<u64>> = (0..50)
            .map(|_| (0..45).map(|_| rng.gen_range(0..p)).collect())
            .collect();
        let b: Vec<Vec<u64>> = (0..45)
            .map(|_| (0..55).map(|_| rng.gen_range(0..p)).collect())
            .collect();
        let rows: Vec<Vec<FE>> = (0..50)
            .map(|r| {
                (0..55)
                    .map(|c| {
                        let mut acc = 0u64;
                        for k in 0..45 {
                            acc = (acc + mod_mul(a[r][k], b[k][c], p)) % p;
                        }
                        FE::Prime(crate::exactalg::field::PrimeElem { value: acc, p })
                    })
                    .collect()
            })
            .collect();
        let m = Matrix::from_rows(rows, tag).unwrap();
        assert_eq!(m.rank().unwrap(), 45);
        let k = m.kernel().unwrap();
        assert_eq!(k.len(), 10);
        for v in &k {
            assert!(m.mul_vec(v).unwrap().iter().all(|x| x.is_zero()));
        }
    }
}
