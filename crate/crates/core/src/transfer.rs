//! Exact counting with the tridiagonal transfer matrix `M`, where
//! `M[i][j] = 1` iff `|i - j| <= 1`.
//!
//! Walks of length `n - 1` in `M` are smooth words of length `n`, closed walks
//! of length `n` are smooth cyclic words, and necklaces follow from the
//! cyclic counts by averaging over rotations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::chebyshev::theta_sequence;
use crate::genfunc::RationalSeries;
use crate::poly::IntPolynomial;
use crate::BigCount;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransferError {
    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("index {index} is outside 1..={k}")]
    IndexOutOfRange { index: usize, k: usize },
    #[error("word length {n} is below the minimum {min}")]
    LengthTooSmall { n: usize, min: usize },
}

/// Square matrix of big counts, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountMatrix {
    dim: usize,
    entries: Vec<BigCount>,
}

impl CountMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![BigCount::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = BigCount::one();
        }
        Self { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Zero-based entry access.
    pub fn get(&self, row: usize, col: usize) -> &BigCount {
        &self.entries[row * self.dim + col]
    }

    pub fn trace(&self) -> BigCount {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let d = self.dim;
        assert_eq!(d, rhs.dim);
        let mut entries = vec![BigCount::zero(); d * d];
        for i in 0..d {
            for m in 0..d {
                let a = self.get(i, m);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = rhs.get(m, j);
                    if !b.is_zero() {
                        entries[i * d + j] += a * b;
                    }
                }
            }
        }
        Self { dim: d, entries }
    }

    /// Exponentiation by squaring.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.dim);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// The smooth-word transfer matrix on `[k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferMatrix {
    k: usize,
    matrix: CountMatrix,
}

impl TransferMatrix {
    pub fn new(k: usize) -> Self {
        assert!(k >= 1, "alphabet must be nonempty");
        let mut entries = vec![BigCount::zero(); k * k];
        for i in 0..k {
            for j in i.saturating_sub(1)..(i + 2).min(k) {
                entries[i * k + j] = BigCount::one();
            }
        }
        Self {
            k,
            matrix: CountMatrix { dim: k, entries },
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn matrix(&self) -> &CountMatrix {
        &self.matrix
    }

    /// `M · v`, using the band structure.
    pub fn apply(&self, v: &[BigCount]) -> Vec<BigCount> {
        let k = self.k;
        (0..k)
            .map(|i| {
                let mut s = v[i].clone();
                if i > 0 {
                    s += &v[i - 1];
                }
                if i + 1 < k {
                    s += &v[i + 1];
                }
                s
            })
            .collect()
    }

    pub fn pow(&self, e: u64) -> CountMatrix {
        self.matrix.pow(e)
    }
}

/// `M^n · v` by repeated banded products.
pub fn matrix_power_apply(
    k: usize,
    n: usize,
    v: &[BigCount],
) -> Result<Vec<BigCount>, TransferError> {
    if v.len() != k {
        return Err(TransferError::DimensionMismatch {
            expected: k,
            got: v.len(),
        });
    }
    let m = TransferMatrix::new(k);
    let mut cur = v.to_vec();
    for _ in 0..n {
        cur = m.apply(&cur);
    }
    Ok(cur)
}

fn ones(k: usize) -> Vec<BigCount> {
    vec![BigCount::one(); k]
}

/// Number of smooth words of length `n` over `[k]`: `1ᵀ M^{n-1} 1`.
pub fn sw_exact(n: usize, k: usize) -> BigCount {
    if n == 0 {
        return BigCount::one();
    }
    matrix_power_apply(k, n - 1, &ones(k))
        .expect("dimension matches")
        .into_iter()
        .sum()
}

/// Number of smooth cyclic words of length `n` over `[k]`: `trace(M^n)`.
pub fn scw_exact(n: usize, k: usize) -> BigCount {
    if n == 0 {
        return BigCount::one();
    }
    TransferMatrix::new(k).pow(n as u64).trace()
}

fn check_index(index: usize, k: usize) -> Result<usize, TransferError> {
    if index == 0 || index > k {
        Err(TransferError::IndexOutOfRange { index, k })
    } else {
        Ok(index - 1)
    }
}

/// Smooth words of length `n` starting with `letter`: `(M^{n-1} 1)_letter`.
pub fn sw_prefix_exact(letter: usize, n: usize, k: usize) -> Result<BigCount, TransferError> {
    let i = check_index(letter, k)?;
    if n == 0 {
        return Err(TransferError::LengthTooSmall { n, min: 1 });
    }
    let v = matrix_power_apply(k, n - 1, &ones(k))?;
    Ok(v[i].clone())
}

/// Smooth cyclic words of length `n` with first letter `first` and last
/// letter `last`: `(M^{n-1})_{first,last}` when the wrap is smooth, else 0.
pub fn scw_pair_exact(
    first: usize,
    last: usize,
    n: usize,
    k: usize,
) -> Result<BigCount, TransferError> {
    let i = check_index(first, k)?;
    let j = check_index(last, k)?;
    if n < 2 {
        return Err(TransferError::LengthTooSmall { n, min: 2 });
    }
    if i.abs_diff(j) > 1 {
        return Ok(BigCount::zero());
    }
    let mut e = vec![BigCount::zero(); k];
    e[j] = BigCount::one();
    // M is symmetric, so column j of M^{n-1} is M^{n-1} e_j
    let col = matrix_power_apply(k, n - 1, &e)?;
    Ok(col[i].clone())
}

/// Euler's totient by trial division.
pub fn totient(m: u64) -> u64 {
    assert!(m >= 1, "totient is defined for m >= 1");
    let mut rest = m;
    let mut phi = m;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if rest > 1 {
        phi -= phi / rest;
    }
    phi
}

/// Positive divisors of `m` in increasing order.
pub fn divisors(m: u64) -> Vec<u64> {
    assert!(m >= 1, "divisors are defined for m >= 1");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m.is_multiple_of(d) {
            small.push(d);
            if d * d != m {
                large.push(m / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `Σ_{d | n} φ(d) · cyclic(n / d)`; divisible by `n` whenever `cyclic`
/// counts smooth cyclic words.
pub fn burnside_sum(n: usize, cyclic: impl Fn(usize) -> BigCount) -> BigCount {
    divisors(n as u64)
        .into_iter()
        .map(|d| BigCount::from(totient(d)) * cyclic(n / d as usize))
        .sum()
}

/// Number of smooth necklaces of length `n` over `[k]`, by Burnside's lemma
/// over the cyclic group. `n = 0` gives 1.
pub fn necklace_exact(n: usize, k: usize) -> BigCount {
    necklace_from_cyclic(n, |d| scw_exact(d, k))
}

/// Burnside count with an arbitrary source of cyclic counts.
///
/// Panics if the orbit sum is not divisible by `n`.
pub fn necklace_from_cyclic(n: usize, cyclic: impl Fn(usize) -> BigCount) -> BigCount {
    if n == 0 {
        return BigCount::one();
    }
    let total = burnside_sum(n, cyclic);
    let (q, r) = total.div_rem(&BigCount::from(n));
    assert!(r.is_zero(), "Burnside sum {total} not divisible by n = {n}");
    q
}

/// Entry `(i, m)` of `A = I - xM` as a polynomial in `x`.
pub fn a_matrix_entry(i: usize, m: usize, k: usize) -> Result<IntPolynomial, TransferError> {
    let (i, m) = (check_index(i, k)?, check_index(m, k)?);
    Ok(match i.abs_diff(m) {
        0 => IntPolynomial::from_i64s(&[1, -1]),
        1 => IntPolynomial::monomial(-1, 1),
        _ => IntPolynomial::zero(),
    })
}

/// `(A^{-1})_{ij}` for `A = I - xM`: `x^{j-i} θ_{i-1} θ_{k-j} / θ_k` for
/// `i <= j`, symmetric otherwise.
pub fn usmani_inverse_entry(i: usize, j: usize, k: usize) -> Result<RationalSeries, TransferError> {
    check_index(i, k)?;
    check_index(j, k)?;
    let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
    let theta = theta_sequence(k);
    let num = (&theta[lo - 1] * &theta[k - hi]).shift(hi - lo);
    Ok(RationalSeries::new(num, theta[k].clone()).expect("θ_k(0) = 1"))
}

/// Signed view of a count, for mixing with series coefficients.
pub fn to_bigint(c: &BigCount) -> BigInt {
    BigInt::from(c.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wordcore::{count_cyclic_bf, count_necklaces_bf, count_smooth_bf};
    use num_rational::BigRational;

    fn c(v: u64) -> BigCount {
        BigCount::from(v)
    }

    fn cs(v: &[u64]) -> Vec<BigCount> {
        v.iter().map(|&x| c(x)).collect()
    }

    #[test]
    fn matrix_shape() {
        for k in 1..=8 {
            let t = TransferMatrix::new(k);
            let m = t.matrix();
            for i in 0..k {
                assert_eq!(m.get(i, i), &c(1));
                let row: BigCount = (0..k).map(|j| m.get(i, j)).sum();
                let expect = if k == 1 {
                    1
                } else if i == 0 || i == k - 1 {
                    2
                } else {
                    3
                };
                assert_eq!(row, c(expect));
                for j in 0..k {
                    assert_eq!(m.get(i, j), m.get(j, i));
                    assert_eq!(m.get(i, j).is_one(), i.abs_diff(j) <= 1);
                }
            }
        }
    }

    #[test]
    fn power_apply_examples() {
        let v = cs(&[1, 1, 1]);
        assert_eq!(matrix_power_apply(3, 0, &v).unwrap(), v);
        assert_eq!(matrix_power_apply(3, 1, &v).unwrap(), cs(&[2, 3, 2]));
        assert_eq!(matrix_power_apply(3, 2, &v).unwrap(), cs(&[5, 7, 5]));
        assert_eq!(
            matrix_power_apply(3, 1, &cs(&[1, 1])),
            Err(TransferError::DimensionMismatch {
                expected: 3,
                got: 2
            })
        );
    }

    #[test]
    fn banded_apply_matches_dense_power() {
        for k in 1..=6 {
            let v: Vec<BigCount> = (1..=k as u64).map(c).collect();
            for n in 0..8 {
                let dense = TransferMatrix::new(k).pow(n);
                let by_dense: Vec<BigCount> = (0..k)
                    .map(|i| (0..k).map(|j| dense.get(i, j) * &v[j]).sum())
                    .collect();
                assert_eq!(matrix_power_apply(k, n as usize, &v).unwrap(), by_dense);
            }
        }
    }

    #[test]
    fn exact_examples() {
        assert_eq!(sw_exact(11, 3), c(19601));
        assert_eq!(sw_exact(12, 3), c(47321));
        assert_eq!(sw_exact(12, 3), c(2 * 19601 + 8119));
        assert_eq!(sw_exact(0, 4), c(1));
        for k in 1..8 {
            assert_eq!(sw_exact(1, k), c(k as u64));
        }
        assert_eq!(scw_exact(11, 4), c(39802));
        assert_eq!(scw_exact(2, 3), c(7));
        assert_eq!(scw_exact(13, 3), count_cyclic_bf(13, 3).unwrap());
    }

    #[test]
    fn prefix_examples() {
        assert_eq!(sw_prefix_exact(1, 1, 4).unwrap(), c(1));
        assert_eq!(sw_prefix_exact(2, 2, 3).unwrap(), c(3));
        let total: BigCount = (1..=5).map(|i| sw_prefix_exact(i, 5, 5).unwrap()).sum();
        assert_eq!(total, c(259));
        assert!(sw_prefix_exact(0, 3, 3).is_err());
        assert!(sw_prefix_exact(4, 3, 3).is_err());
        assert!(sw_prefix_exact(1, 0, 3).is_err());
    }

    #[test]
    fn pair_examples() {
        for n in 2..10 {
            assert_eq!(scw_pair_exact(1, 3, n, 3).unwrap(), c(0));
        }
        assert_eq!(scw_pair_exact(1, 2, 2, 3).unwrap(), c(1));
        let mut total = c(0);
        for i in 1..=4 {
            for j in 1..=4 {
                total += scw_pair_exact(i, j, 4, 4).unwrap();
            }
        }
        assert_eq!(total, c(54));
        assert!(scw_pair_exact(5, 1, 3, 4).is_err());
        assert!(scw_pair_exact(1, 1, 1, 4).is_err());
    }

    #[test]
    fn pair_counts_sum_to_cyclic_counts() {
        for k in 1..=6 {
            for n in 2..=10 {
                let mut total = c(0);
                for i in 1..=k {
                    for j in 1..=k {
                        total += scw_pair_exact(i, j, n, k).unwrap();
                    }
                }
                assert_eq!(total, scw_exact(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn necklace_examples() {
        assert_eq!(necklace_exact(3, 2), c(4));
        assert_eq!(necklace_exact(11, 7), c(10611));
        assert_eq!(necklace_exact(6, 3), c(39));
        assert_eq!(necklace_exact(0, 3), c(1));
        for k in 1..6 {
            assert_eq!(necklace_exact(1, k), c(k as u64));
        }
    }

    #[test]
    fn number_theory() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(12), 4);
        assert_eq!(totient(13), 12);
        assert_eq!(totient(36), 12);
        assert_eq!(divisors(6), vec![1, 2, 3, 6]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(36), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
        for m in 1..200u64 {
            let brute = (1..=m).filter(|&a| a.gcd(&m) == 1).count() as u64;
            assert_eq!(totient(m), brute);
            let sum: u64 = divisors(m).iter().map(|&d| totient(d)).sum();
            assert_eq!(sum, m);
        }
    }

    #[test]
    fn oracle_equivalence() {
        for n in 0..=10 {
            for k in 1..=6 {
                assert_eq!(
                    sw_exact(n, k),
                    count_smooth_bf(n, k).unwrap(),
                    "sw n={n} k={k}"
                );
                assert_eq!(
                    scw_exact(n, k),
                    count_cyclic_bf(n, k).unwrap(),
                    "scw n={n} k={k}"
                );
                assert_eq!(
                    necklace_exact(n, k),
                    count_necklaces_bf(n, k).unwrap(),
                    "sn n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn prefix_recurrence_on_counts() {
        for k in 1..=7usize {
            for n in 2..=12 {
                for i in 1..=k {
                    let mut rhs = BigCount::zero();
                    for j in i.saturating_sub(1).max(1)..=(i + 1).min(k) {
                        rhs += sw_prefix_exact(j, n - 1, k).unwrap();
                    }
                    assert_eq!(sw_prefix_exact(i, n, k).unwrap(), rhs);
                }
            }
            for i in 1..=k {
                assert_eq!(sw_prefix_exact(i, 1, k).unwrap(), c(1));
            }
        }
    }

    /// Refining cyclic words by both endpoints: stripping the first letter
    /// leaves a walk of length n-2 from a neighbour of `i` to `j`.
    #[test]
    fn endpoint_recurrence_on_counts() {
        for k in 1..=6 {
            let m = TransferMatrix::new(k);
            for n in 3..=10 {
                let p = m.pow(n as u64 - 2);
                for i in 1..=k {
                    for j in 1..=k {
                        let expect = if i.abs_diff(j) > 1 {
                            BigCount::zero()
                        } else {
                            (1..=k)
                                .filter(|&ip| ip.abs_diff(i) <= 1)
                                .map(|ip| p.get(ip - 1, j - 1).clone())
                                .sum()
                        };
                        assert_eq!(scw_pair_exact(i, j, n, k).unwrap(), expect);
                    }
                }
            }
        }
    }

    #[test]
    fn burnside_divisibility() {
        for k in 1..=10 {
            for n in 1..=60 {
                let s = burnside_sum(n, |d| scw_exact(d, k));
                assert!((s % BigCount::from(n)).is_zero(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn counting_bound() {
        for k in 1..=8usize {
            for n in 1..=20 {
                let bound = BigCount::from(k) * BigCount::from(3u32).pow(n as u32 - 1);
                assert!(sw_exact(n, k) <= bound);
            }
        }
    }

    #[test]
    fn usmani_examples() {
        let one_over = |den: &[i64]| {
            RationalSeries::new(IntPolynomial::one(), IntPolynomial::from_i64s(den)).unwrap()
        };
        assert!(usmani_inverse_entry(1, 1, 1)
            .unwrap()
            .series_eq(&one_over(&[1, -1])));
        let x_over =
            RationalSeries::new(IntPolynomial::x(), IntPolynomial::from_i64s(&[1, -2])).unwrap();
        assert!(usmani_inverse_entry(1, 2, 2).unwrap().series_eq(&x_over));
        assert_eq!(
            usmani_inverse_entry(2, 1, 2).unwrap(),
            usmani_inverse_entry(1, 2, 2).unwrap()
        );
        assert!(usmani_inverse_entry(0, 1, 2).is_err());
        assert!(usmani_inverse_entry(1, 3, 2).is_err());
    }

    #[test]
    fn usmani_inverts_a_exactly() {
        let points = [(1, 2), (1, 3), (1, 5), (2, 7)];
        for k in 1..=6 {
            for &(p, q) in &points {
                let x = BigRational::new(p.into(), q.into());
                // A is singular where θ_k vanishes (x = 1/2 for k = 2, 5)
                if theta_sequence(k)[k].eval_rational(&x).is_zero() {
                    assert!(p == 1 && q == 2 && (k == 2 || k == 5));
                    continue;
                }
                for i in 1..=k {
                    for j in 1..=k {
                        let mut acc = BigRational::zero();
                        for m in 1..=k {
                            let a = a_matrix_entry(i, m, k).unwrap().eval_rational(&x);
                            let inv = usmani_inverse_entry(m, j, k).unwrap();
                            acc += a * inv.num().eval_rational(&x) / inv.den().eval_rational(&x);
                        }
                        let expect = if i == j {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        };
                        assert_eq!(acc, expect, "k={k} x={x} ({i},{j})");
                    }
                }
            }
        }
    }

    /// Row sums of A^{-1} times x give the prefix generating functions.
    #[test]
    fn usmani_rows_give_prefix_series() {
        for k in 1..=6 {
            for i in 1..=k {
                let row = (1..=k)
                    .map(|j| usmani_inverse_entry(i, j, k).unwrap())
                    .reduce(|a, b| a.add(&b))
                    .unwrap()
                    .mul_poly(&IntPolynomial::x());
                let coeffs = row.coeffs(9);
                for (n, got) in coeffs.iter().enumerate().skip(1) {
                    assert_eq!(got, &to_bigint(&sw_prefix_exact(i, n, k).unwrap()));
                }
            }
        }
    }
}
