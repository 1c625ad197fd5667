//! Multiplication tables for degree-7 cyclic covers.
//!
//! The sections of the cover are grouped into seven weight classes
//! r_0 = 1, r_1, ..., r_6; products satisfy r_i * r_j = F_ij * r_{(i+j) % 7}
//! for structure "constants" F_ij that are ratios of forms on the base.
//! Entries computed independently are each correct only up to a scalar.
//! [`fix_scalings_by_associativity`] recovers the unique consistent table
//! from associativity, equivariance under the order-3 symmetry i -> 2i,
//! and two designated normalizations (one per orbit of the symmetry on
//! the nonzero weights).

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::equivariant::action::ActionGen;
use crate::error::AlgError;
use crate::exactalg::field::{discrete_log, primitive_root, FieldElement, FieldTag, PrimeElem};
use crate::exactalg::poly::MultiPoly;
use crate::exactalg::snf::solve_mod;

/// One table entry: the ratio num/den of forms on the base.
#[derive(Clone, Debug, PartialEq)]
pub struct MulEntry {
    pub num: MultiPoly,
    pub den: MultiPoly,
}

impl MulEntry {
    /// Scale num and den together so den has first coefficient 1; the
    /// entry's scalar ambiguity is then carried entirely by num.
    pub fn canonical(&self) -> Result<MulEntry, AlgError> {
        let c = self
            .den
            .first_nonzero_coeff()
            .ok_or_else(|| AlgError::Pipeline("zero denominator in table entry".into()))?
            .1
            .inv()?;
        Ok(MulEntry {
            num: self.num.scale(&c)?,
            den: self.den.scale(&c)?,
        })
    }

    /// First coefficient of the canonical numerator.
    fn scalar(&self) -> Result<FieldElement, AlgError> {
        let c = self.canonical()?;
        Ok(c.num
            .first_nonzero_coeff()
            .ok_or_else(|| AlgError::Pipeline("zero numerator in table entry".into()))?
            .1
            .clone())
    }

    fn mul(&self, rhs: &MulEntry) -> Result<MulEntry, AlgError> {
        Ok(MulEntry {
            num: self.num.mul(&rhs.num)?,
            den: self.den.mul(&rhs.den)?,
        })
    }

    fn one(vars: &[String], tag: FieldTag) -> MulEntry {
        let one = MultiPoly::constant(vars.to_vec(), FieldElement::one(tag));
        MulEntry {
            num: one.clone(),
            den: one,
        }
    }
}

/// The 21 entries F_ij for 1 <= i <= j <= 6, plus the base action.
#[derive(Clone, Debug)]
pub struct MulTable {
    pub vars: Vec<String>,
    pub tag: FieldTag,
    /// Order-3 action on the base coordinates implementing i -> 2i.
    pub sigma: ActionGen,
    pub entries: BTreeMap<(usize, usize), MulEntry>,
    /// Whether scalings have been fixed by [`fix_scalings_by_associativity`].
    pub fixed: bool,
}

fn sorted(i: usize, j: usize) -> (usize, usize) {
    if i <= j {
        (i, j)
    } else {
        (j, i)
    }
}

impl MulTable {
    pub fn new(
        vars: Vec<String>,
        tag: FieldTag,
        sigma: ActionGen,
        entries: BTreeMap<(usize, usize), MulEntry>,
    ) -> Result<Self, AlgError> {
        if sigma.dim() != vars.len() || sigma.tag() != tag {
            return Err(AlgError::Pipeline(
                "table action does not match base coordinates".into(),
            ));
        }
        if sigma.order(3)? != 3 {
            return Err(AlgError::WrongActionOrder(
                "table action must have order 3".into(),
            ));
        }
        for i in 1..=6usize {
            for j in i..=6 {
                let e = entries
                    .get(&(i, j))
                    .ok_or_else(|| AlgError::Pipeline(format!("missing table entry ({i},{j})")))?;
                for f in [&e.num, &e.den] {
                    if f.vars != vars || f.tag != tag {
                        return Err(AlgError::Pipeline(format!(
                            "entry ({i},{j}) not over the base ring"
                        )));
                    }
                    if f.is_zero() {
                        return Err(AlgError::Pipeline(format!("entry ({i},{j}) has a zero part")));
                    }
                    if !f.is_homogeneous() {
                        return Err(AlgError::Pipeline(format!(
                            "entry ({i},{j}) is not homogeneous"
                        )));
                    }
                }
            }
        }
        Ok(MulTable {
            vars,
            tag,
            sigma,
            entries,
            fixed: false,
        })
    }

    /// Entry for the unordered pair {i, j}; weight 0 contributes 1.
    pub fn entry(&self, i: usize, j: usize) -> MulEntry {
        if i % 7 == 0 || j % 7 == 0 {
            return MulEntry::one(&self.vars, self.tag);
        }
        self.entries[&sorted(i % 7, j % 7)].clone()
    }
}

fn prime_value(c: &FieldElement) -> Result<u64, AlgError> {
    match c {
        FieldElement::Prime(PrimeElem { value, .. }) => Ok(*value),
        other => Err(AlgError::TagMismatch {
            left: other.tag(),
            right: FieldTag::Prime(0),
        }),
    }
}

/// The scalar s with a = s * b, or an error if a and b are not
/// proportional (including s = 0 when only a is zero).
pub fn scalar_ratio(a: &MultiPoly, b: &MultiPoly) -> Result<FieldElement, AlgError> {
    let (e0, c0) = b
        .first_nonzero_coeff()
        .ok_or_else(|| AlgError::Pipeline("ratio against the zero polynomial".into()))?;
    let s = a.coeff(e0).div(c0)?;
    if a != &b.scale(&s)? {
        return Err(AlgError::Pipeline(
            "polynomials are not proportional".into(),
        ));
    }
    Ok(s)
}

/// Cross-multiplied scalar ratio of two entry products: the s with
/// a.num * b.den = s * (b.num * a.den).
fn entry_ratio(a: &MulEntry, b: &MulEntry) -> Result<FieldElement, AlgError> {
    scalar_ratio(&a.num.mul(&b.den)?, &b.num.mul(&a.den)?)
}

/// All unordered index pairs carrying an unknown scaling.
fn pair_index() -> BTreeMap<(usize, usize), usize> {
    let mut m = BTreeMap::new();
    for i in 1..=6usize {
        for j in i..=6 {
            let k = m.len();
            m.insert((i, j), k);
        }
    }
    m
}

/// Recover the unique consistent scaling of a raw table.
///
/// Unknown corrections delta_ij are solved for in discrete-log form over
/// Z/(q-1): associativity of (r_i r_j) r_k, equivariance
/// F_{2i,2j} = sigma(F_ij), and the normalizations that the corrected
/// entries (1,1) and (3,3) have first coefficient 1. The solution is
/// unique, so any per-entry scalar corruption of a consistent table fixes
/// to the same result.
pub fn fix_scalings_by_associativity(table: &MulTable) -> Result<MulTable, AlgError> {
    let q = match table.tag {
        FieldTag::Prime(q) => q,
        tag => {
            return Err(AlgError::TagMismatch {
                left: tag,
                right: FieldTag::Prime(0),
            })
        }
    };
    let n = q - 1;
    let g = primitive_root(q)
        .ok_or_else(|| AlgError::Pipeline(format!("no primitive root mod {q}")))?;
    let dlog = |c: &FieldElement| -> Result<u64, AlgError> {
        discrete_log(g, prime_value(c)?, q)
            .ok_or_else(|| AlgError::Pipeline("discrete log of zero".into()))
    };

    let idx = pair_index();
    let nvars = idx.len();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    let mut rhs: Vec<BigInt> = Vec::new();
    let push = |coeffs: Vec<(usize, i64)>, b: i64, rows: &mut Vec<Vec<BigInt>>, rhs: &mut Vec<BigInt>| {
        let mut row = vec![BigInt::from(0); nvars];
        for (k, c) in coeffs {
            row[k] += BigInt::from(c);
        }
        rows.push(row);
        rhs.push(BigInt::from(b));
    };
    // unknown index for the pair {i, j}, if any (weight-0 factors have none)
    let unknown = |i: usize, j: usize| -> Option<usize> {
        if i % 7 == 0 || j % 7 == 0 {
            None
        } else {
            Some(idx[&sorted(i % 7, j % 7)])
        }
    };

    // associativity: delta_ij * delta_{i+j,k} * rho = delta_jk * delta_{i,j+k}
    for i in 1..=6usize {
        for j in 1..=6 {
            for k in 1..=6 {
                let left = table.entry(i, j).mul(&table.entry((i + j) % 7, k))?;
                let right = table.entry(j, k).mul(&table.entry(i, (j + k) % 7))?;
                let rho = dlog(&entry_ratio(&left, &right)?)? as i64;
                let mut coeffs = Vec::new();
                for (pair, sign) in [
                    ((i, j), 1),
                    (((i + j) % 7, k), 1),
                    ((j, k), -1),
                    ((i, (j + k) % 7), -1),
                ] {
                    if let Some(v) = unknown(pair.0, pair.1) {
                        coeffs.push((v, sign));
                    }
                }
                push(coeffs, -rho, &mut rows, &mut rhs);
            }
        }
    }

    // equivariance: delta_{2i,2j} * lambda = delta_ij
    for (&(i, j), &v) in &idx {
        let image = table.entry(2 * i, 2 * j);
        let src = table.entry(i, j);
        let transported = MulEntry {
            num: table.sigma.act_on_form(&src.num)?,
            den: table.sigma.act_on_form(&src.den)?,
        };
        let lambda = dlog(&entry_ratio(&image, &transported)?)? as i64;
        let w = unknown(2 * i, 2 * j).expect("doubled pair has nonzero weights");
        push(vec![(w, 1), (v, -1)], -lambda, &mut rows, &mut rhs);
    }

    // designated normalizations, one per orbit of i -> 2i on {1..6}
    for (i, j) in [(1, 1), (3, 3)] {
        let s = dlog(&table.entry(i, j).scalar()?)? as i64;
        push(vec![(idx[&(i, j)], 1)], -s, &mut rows, &mut rhs);
    }

    let x = solve_mod(&rows, &rhs, &BigInt::from(n)).ok_or_else(|| {
        AlgError::Pipeline("table scalings are inconsistent: no associative fixing exists".into())
    })?;

    let mut entries = BTreeMap::new();
    for (&(i, j), &v) in &idx {
        let e: u64 = (&x[v] % BigInt::from(n))
            .try_into()
            .map_err(|_| AlgError::Pipeline("negative exponent after reduction".into()))?;
        let delta = FieldElement::from_integer(
            crate::exactalg::field::mod_pow(g, e, q) as i64,
            table.tag,
        );
        let canon = table.entries[&(i, j)].canonical()?;
        entries.insert(
            (i, j),
            MulEntry {
                num: canon.num.scale(&delta)?,
                den: canon.den,
            },
        );
    }
    let fixed = MulTable {
        vars: table.vars.clone(),
        tag: table.tag,
        sigma: table.sigma.clone(),
        entries,
        fixed: true,
    };
    verify_multable(&fixed)?;
    Ok(fixed)
}

/// Check a fixed table exactly: associativity of every triple,
/// equivariance under sigma, and the designated normalizations.
pub fn verify_multable(table: &MulTable) -> Result<(), AlgError> {
    for i in 1..=6usize {
        for j in 1..=6 {
            for k in 1..=6 {
                let left = table.entry(i, j).mul(&table.entry((i + j) % 7, k))?;
                let right = table.entry(j, k).mul(&table.entry(i, (j + k) % 7))?;
                if left.num.mul(&right.den)? != right.num.mul(&left.den)? {
                    return Err(AlgError::Pipeline(format!(
                        "associativity fails for (r{i} r{j}) r{k}"
                    )));
                }
            }
        }
    }
    for i in 1..=6usize {
        for j in i..=6 {
            let image = table.entry(2 * i, 2 * j);
            let src = table.entry(i, j);
            let tn = table.sigma.act_on_form(&src.num)?;
            let td = table.sigma.act_on_form(&src.den)?;
            if image.num.mul(&td)? != tn.mul(&image.den)? {
                return Err(AlgError::Pipeline(format!(
                    "equivariance fails for entry ({i},{j})"
                )));
            }
        }
    }
    for (i, j) in [(1, 1), (3, 3)] {
        if !table.entry(i, j).scalar()?.is_one() {
            return Err(AlgError::Pipeline(format!(
                "entry ({i},{j}) is not normalized"
            )));
        }
    }
    Ok(())
}

/// The synthetic degree-7 cover table over GF(q) used as the pipeline
/// fixture: base P^1 with coordinates t0, t1, cover u^7 = t1^7, and the
/// balanced sections r_i = u^i / t1^{a_i} with a = (0, 1, 0, 3, 2, 3).
/// Every entry is then a power of ell = t1, and the table is exactly
/// equivariant under sigma = diag(zeta3, 1).
pub fn synthetic_mu7_table(q: u64) -> Result<MulTable, AlgError> {
    let tag = FieldTag::Prime(q);
    let vars = vec!["t0".to_string(), "t1".to_string()];
    let sigma = ActionGen::from_scalars(
        "sigma",
        vec![FieldElement::zeta3(tag)?, FieldElement::one(tag)],
    )?;
    let a = [0i64, 0, 1, 0, 3, 2, 3];
    let ell_pow = |e: u16| MultiPoly::monomial(vars.clone(), vec![0, e], FieldElement::one(tag));
    let mut entries = BTreeMap::new();
    for i in 1..=6usize {
        for j in i..=6 {
            let wrap = if i + j >= 7 { 7 } else { 0 };
            let e = a[(i + j) % 7] + wrap - a[i] - a[j];
            let entry = if e >= 0 {
                MulEntry {
                    num: ell_pow(e as u16),
                    den: ell_pow(0),
                }
            } else {
                MulEntry {
                    num: ell_pow(0),
                    den: ell_pow((-e) as u16),
                }
            };
            entries.insert((i, j), entry);
        }
    }
    MulTable::new(vars, tag, sigma, entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::XorShift64;

    fn rand_unit(rng: &mut XorShift64, q: u64, tag: FieldTag) -> FieldElement {
        FieldElement::from_integer((1 + rng.below(q - 1)) as i64, tag)
    }

    fn tables_equal(a: &MulTable, b: &MulTable) -> bool {
        a.entries.iter().all(|(k, e)| {
            let ea = e.canonical().unwrap();
            let eb = b.entries[k].canonical().unwrap();
            ea == eb
        })
    }

    #[test]
    fn synthetic_table_is_consistent_and_fixes_to_itself() {
        let t = synthetic_mu7_table(43).unwrap();
        verify_multable(&t).unwrap();
        let fixed = fix_scalings_by_associativity(&t).unwrap();
        assert!(fixed.fixed);
        assert!(tables_equal(&fixed, &t));
    }

    #[test]
    fn fixing_recovers_from_arbitrary_entry_rescaling() {
        let truth = synthetic_mu7_table(43).unwrap();
        let mut corrupted = truth.clone();
        let mut rng = XorShift64::new(99);
        for e in corrupted.entries.values_mut() {
            let s = rand_unit(&mut rng, 43, truth.tag);
            e.num = e.num.scale(&s).unwrap();
        }
        assert!(verify_multable(&corrupted).is_err());
        let fixed = fix_scalings_by_associativity(&corrupted).unwrap();
        verify_multable(&fixed).unwrap();
        assert!(tables_equal(&fixed, &truth));
    }

    #[test]
    fn gauge_invariance_under_symbol_rescaling() {
        // rescaling the symbols r_i -> c_i r_i corrupts every entry by the
        // coboundary c_i c_j / c_{i+j}; the fixed table must be identical.
        let truth = synthetic_mu7_table(43).unwrap();
        let baseline = fix_scalings_by_associativity(&truth).unwrap();
        let mut rng = XorShift64::new(7);
        for _ in 0..5 {
            let mut c = vec![FieldElement::one(truth.tag)];
            for _ in 1..7 {
                c.push(rand_unit(&mut rng, 43, truth.tag));
            }
            let mut corrupted = truth.clone();
            for (&(i, j), e) in corrupted.entries.iter_mut() {
                let s = c[i]
                    .mul(&c[j])
                    .unwrap()
                    .div(&c[(i + j) % 7])
                    .unwrap();
                e.num = e.num.scale(&s).unwrap();
            }
            let fixed = fix_scalings_by_associativity(&corrupted).unwrap();
            assert!(tables_equal(&fixed, &baseline));
        }
    }

    #[test]
    fn corrupted_fixed_table_fails_verification() {
        let mut t = fix_scalings_by_associativity(&synthetic_mu7_table(43).unwrap()).unwrap();
        let five = FieldElement::from_integer(5, t.tag);
        let e = t.entries.get_mut(&(2, 3)).unwrap();
        e.num = e.num.scale(&five).unwrap();
        assert!(verify_multable(&t).is_err());
    }

    #[test]
    fn structurally_corrupted_table_cannot_be_fixed() {
        // replacing an entry by a wrong power of ell is not a scalar
        // error, so cross-multiplied products are not proportional
        let mut t = synthetic_mu7_table(43).unwrap();
        let e = t.entries.get_mut(&(1, 2)).unwrap();
        let extra = MultiPoly::monomial(t.vars.clone(), vec![1, 1], FieldElement::one(t.tag));
        e.num = e.num.mul(&extra).unwrap();
        let err = fix_scalings_by_associativity(&t).unwrap_err();
        assert!(matches!(err, AlgError::Pipeline(_)));
    }
}
