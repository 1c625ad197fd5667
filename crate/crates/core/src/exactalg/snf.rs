//! Smith normal form of integer matrices, with unimodular transforms,
//! plus a transform-free fast path for large relator matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug)]
pub struct SnfResult {
    /// Nonzero invariant factors d_1 | d_2 | ... (positive, canonical).
    pub diagonal: Vec<BigInt>,
    /// left * A * right has the diagonal on its main diagonal.
    pub left: Vec<Vec<BigInt>>,
    pub right: Vec<Vec<BigInt>>,
}

fn mat_identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

/// Smith normal form with transforms. Suitable for modest sizes; the
/// abelianization path uses [`snf_diagonal`] instead.
pub fn smith_normal_form(a: &[Vec<BigInt>]) -> SnfResult {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<BigInt>> = a.to_vec();
    let mut left = mat_identity(rows);
    let mut right = mat_identity(cols);

    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = min_abs_pivot(&m, t) else {
            break;
        };
        swap_rows(&mut m, &mut left, t, pi);
        swap_cols(&mut m, &mut right, t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = div_nearest(&m[i][t], &m[t][t]);
                row_op(&mut m, &mut left, i, t, &q);
                if !m[i][t].is_zero() {
                    // remainder smaller than pivot: swap up and restart
                    swap_rows(&mut m, &mut left, t, i);
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = div_nearest(&m[t][j], &m[t][t]);
                col_op(&mut m, &mut right, j, t, &q);
                if !m[t][j].is_zero() {
                    swap_cols(&mut m, &mut right, t, j);
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        // pivot must divide everything below-right; if not, fold a bad row in
        let piv = m[t][t].clone();
        let mut fixed = true;
        'scan: for i in t + 1..rows {
            for j in t + 1..cols {
                if !(&m[i][j] % &piv).is_zero() {
                    // add row i to row t and redo this step
                    let minus_one = -BigInt::one();
                    row_op(&mut m, &mut left, t, i, &minus_one);
                    fixed = false;
                    break 'scan;
                }
            }
        }
        if fixed {
            if m[t][t].is_negative() {
                negate_row(&mut m, &mut left, t);
            }
            t += 1;
        }
    }
    let diagonal = (0..rows.min(cols))
        .map(|i| m[i][i].clone())
        .filter(|d| !d.is_zero())
        .collect();
    SnfResult {
        diagonal,
        left,
        right,
    }
}

/// Invariant factors only, without carrying transform matrices. Rows may be
/// consumed destructively; used for large Reidemeister-Schreier matrices.
pub fn snf_diagonal(mut m: Vec<Vec<BigInt>>, cols: usize) -> Vec<BigInt> {
    m.retain(|r| r.iter().any(|x| !x.is_zero()));
    let mut diag: Vec<BigInt> = Vec::new();
    let mut col_start = 0;
    while !m.is_empty() && col_start < cols {
        // min-abs pivot over the live block
        let mut best: Option<(usize, usize)> = None;
        'outer: for (i, row) in m.iter().enumerate() {
            for j in col_start..cols {
                if row[j].is_zero() {
                    continue;
                }
                match &best {
                    Some((bi, bj)) if m[*bi][*bj].abs() <= row[j].abs() => {}
                    _ => best = Some((i, j)),
                }
                if m[best.unwrap().0][best.unwrap().1].abs().is_one() {
                    break 'outer;
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        m.swap(0, bi);
        for row in m.iter_mut() {
            row.swap(col_start, bj);
        }
        loop {
            if m[0][col_start].is_negative() {
                for x in m[0].iter_mut() {
                    *x = -std::mem::take(x);
                }
            }
            let piv = m[0][col_start].clone();
            let mut dirty = false;
            for i in 1..m.len() {
                if m[i][col_start].is_zero() {
                    continue;
                }
                let q = div_nearest(&m[i][col_start], &piv);
                if !q.is_zero() {
                    for j in col_start..cols {
                        let sub = &q * &m[0][j];
                        m[i][j] -= sub;
                    }
                }
                if !m[i][col_start].is_zero() {
                    m.swap(0, i);
                    dirty = true;
                    break;
                }
            }
            if dirty {
                continue;
            }
            for j in col_start + 1..cols {
                if m[0][j].is_zero() {
                    continue;
                }
                let q = div_nearest(&m[0][j], &piv);
                if !q.is_zero() {
                    for row in m.iter_mut() {
                        let sub = &q * &row[col_start];
                        row[j] -= sub;
                    }
                }
                if !m[0][j].is_zero() {
                    for row in m.iter_mut() {
                        row.swap(col_start, j);
                    }
                    dirty = true;
                    break;
                }
            }
            if !dirty {
                break;
            }
        }
        diag.push(m[0][col_start].clone());
        m.remove(0);
        col_start += 1;
        m.retain(|r| r[col_start..].iter().any(|x| !x.is_zero()));
    }
    canonical_divisor_chain(diag)
}

/// Smith normal form diagonal tuned for large sparse relation matrices
/// with small entries (abelianized Reidemeister-Schreier rewriting).
///
/// Phase 1 repeatedly pivots on a +-1 entry chosen by the Markowitz
/// criterion (least fill-in). Such a pivot contributes an invariant factor
/// of 1 and its row and column can be discarded after clearing the column
/// with row operations alone. Phase 2 hands the small remaining block to
/// [`snf_diagonal`]. Falls back entirely to [`snf_diagonal`] if any
/// intermediate value overflows `i128`.
pub fn snf_diagonal_sparse(rows: Vec<Vec<i64>>, cols: usize) -> Vec<BigInt> {
    let to_big = |m: &[Vec<i64>]| -> Vec<Vec<BigInt>> {
        m.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    };
    let original = rows.clone();
    let mut m: Vec<Vec<i128>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(|x| x as i128).collect())
        .collect();
    m.retain(|r| r.iter().any(|&x| x != 0));
    let mut col_active = vec![true; cols];
    let mut unit_pivots = 0usize;
    let mut bailed = false;

    'phase1: loop {
        // column nonzero counts over active columns
        let mut col_nnz = vec![0usize; cols];
        for r in &m {
            for (j, active) in col_active.iter().enumerate() {
                if *active && r[j] != 0 {
                    col_nnz[j] += 1;
                }
            }
        }
        // best +-1 pivot by Markowitz cost
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, r) in m.iter().enumerate() {
            let row_nnz = col_active
                .iter()
                .enumerate()
                .filter(|&(j, a)| *a && r[j] != 0)
                .count();
            for (j, active) in col_active.iter().enumerate() {
                if *active && (r[j] == 1 || r[j] == -1) {
                    let cost = (row_nnz - 1) * (col_nnz[j] - 1);
                    if best.map_or(true, |(_, _, c)| cost < c) {
                        best = Some((i, j, cost));
                    }
                }
            }
        }
        let Some((pi, pj, _)) = best else { break };
        let mut pivot_row = m.swap_remove(pi);
        if pivot_row[pj] == -1 {
            for x in pivot_row.iter_mut() {
                *x = -*x;
            }
        }
        for r in m.iter_mut() {
            let factor = r[pj];
            if factor == 0 {
                continue;
            }
            for (j, active) in col_active.iter().enumerate() {
                if !*active || pivot_row[j] == 0 {
                    continue;
                }
                let Some(sub) = factor.checked_mul(pivot_row[j]) else {
                    // overflow: restart from scratch in arbitrary precision
                    bailed = true;
                    break 'phase1;
                };
                let Some(v) = r[j].checked_sub(sub) else {
                    bailed = true;
                    break 'phase1;
                };
                r[j] = v;
            }
        }
        col_active[pj] = false;
        unit_pivots += 1;
        m.retain(|r| {
            col_active
                .iter()
                .enumerate()
                .any(|(j, a)| *a && r[j] != 0)
        });
        if m.is_empty() {
            break;
        }
    }

    if bailed {
        return snf_diagonal(to_big(&original), cols);
    }

    // compact the remaining block to active columns
    let live_cols: Vec<usize> = (0..cols).filter(|&j| col_active[j]).collect();
    let block: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| live_cols.iter().map(|&j| BigInt::from(r[j])).collect())
        .collect();
    let mut diag = vec![BigInt::one(); unit_pivots];
    diag.extend(snf_diagonal(block, live_cols.len()));
    canonical_divisor_chain(diag)
}

/// Rearrange diagonal entries into the unique chain d1 | d2 | ...
pub fn canonical_divisor_chain(diag: Vec<BigInt>) -> Vec<BigInt> {
    let mut d: Vec<BigInt> = diag.into_iter().map(|x| x.abs()).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..d.len() {
            for j in i + 1..d.len() {
                if d[i].is_zero() || d[j].is_zero() {
                    continue;
                }
                if !(&d[j] % &d[i]).is_zero() {
                    let g = d[i].gcd(&d[j]);
                    let l = (&d[i] * &d[j]) / &g;
                    d[i] = g;
                    d[j] = l;
                    changed = true;
                }
            }
        }
    }
    d
}

fn min_abs_pivot(m: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..m.len() {
        for j in t..m[i].len() {
            if m[i][j].is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if m[bi][bj].abs() <= m[i][j].abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Quotient rounding to nearest, so remainders have at most half the pivot.
fn div_nearest(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if r.abs() * 2 > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

fn swap_rows(m: &mut [Vec<BigInt>], left: &mut [Vec<BigInt>], a: usize, b: usize) {
    if a != b {
        m.swap(a, b);
        left.swap(a, b);
    }
}

fn swap_cols(m: &mut [Vec<BigInt>], right: &mut [Vec<BigInt>], a: usize, b: usize) {
    if a == b {
        return;
    }
    for row in m.iter_mut() {
        row.swap(a, b);
    }
    for row in right.iter_mut() {
        row.swap(a, b);
    }
}

/// row[i] -= q * row[t]
fn row_op(m: &mut [Vec<BigInt>], left: &mut [Vec<BigInt>], i: usize, t: usize, q: &BigInt) {
    for j in 0..m[i].len() {
        let sub = q * &m[t][j];
        m[i][j] -= sub;
    }
    for j in 0..left[i].len() {
        let sub = q * &left[t][j];
        left[i][j] -= sub;
    }
}

/// col[j] -= q * col[t]
fn col_op(m: &mut [Vec<BigInt>], right: &mut [Vec<BigInt>], j: usize, t: usize, q: &BigInt) {
    for row in m.iter_mut() {
        let sub = q * &row[t];
        row[j] -= sub;
    }
    for row in right.iter_mut() {
        let sub = q * &row[t];
        row[j] -= sub;
    }
}

fn negate_row(m: &mut [Vec<BigInt>], left: &mut [Vec<BigInt>], t: usize) {
    for x in m[t].iter_mut() {
        *x = -std::mem::take(x);
    }
    for x in left[t].iter_mut() {
        *x = -std::mem::take(x);
    }
}

/// Determinant by fraction-free expansion, for unimodularity checks in tests.
pub fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Solve A x = b (mod m) using Smith normal form; returns one solution.
pub fn solve_mod(a: &[Vec<BigInt>], b: &[BigInt], modulus: &BigInt) -> Option<Vec<BigInt>> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let snf = smith_normal_form(a);
    // y = left * b
    let y: Vec<BigInt> = (0..rows)
        .map(|i| {
            (0..rows)
                .map(|j| &snf.left[i][j] * &b[j])
                .sum::<BigInt>()
                .mod_floor(modulus)
        })
        .collect();
    // D z = y (mod m) with D the full (possibly zero-padded) diagonal
    let mut z = vec![BigInt::zero(); cols];
    for (i, yi) in y.iter().enumerate() {
        let d = if i < snf.diagonal.len() {
            snf.diagonal[i].clone()
        } else {
            BigInt::zero()
        };
        if d.is_zero() {
            if !yi.is_zero() {
                return None;
            }
            continue;
        }
        let g = d.gcd(modulus);
        if !(yi % &g).is_zero() {
            return None;
        }
        let m_red = modulus / &g;
        let d_red = (&d / &g).mod_floor(&m_red);
        let y_red = (yi / &g).mod_floor(&m_red);
        let inv = mod_inverse_big(&d_red, &m_red)?;
        if i < cols {
            z[i] = (y_red * inv).mod_floor(&m_red);
        } else if !yi.is_zero() {
            return None;
        }
    }
    // x = right * z
    let x: Vec<BigInt> = (0..cols)
        .map(|i| {
            (0..cols)
                .map(|j| &snf.right[i][j] * &z[j])
                .sum::<BigInt>()
                .mod_floor(modulus)
        })
        .collect();
    Some(x)
}

fn mod_inverse_big(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    if m.is_one() {
        return Some(BigInt::zero());
    }
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}
