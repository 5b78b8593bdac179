//! Trigonometric closed forms, partial-fraction residues and asymptotics.
//!
//! The transfer matrix on `[k]` has eigenvalues `λ_j = 1 + 2cos(jπ/(k+1))`,
//! `j = 1..=k`, so every count is a short sum of powers of these. Double
//! precision only recovers exact integers while `k · 3^n` stays well below
//! `2^52`; [`count_validated`] refuses to answer outside that window.

use std::f64::consts::PI;

use num_traits::FromPrimitive;
use thiserror::Error;

use crate::transfer::{divisors, totient};
use crate::{BigCount, Family};

/// Largest word length for which rounded spectral sums are trusted.
pub const WINDOW_MAX_N: usize = 25;
/// Largest alphabet for which rounded spectral sums are trusted.
pub const WINDOW_MAX_K: usize = 10;
/// Rounding budget used inside the window.
pub const ROUNDING_BUDGET: f64 = 0.25;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectralError {
    #[error("precision exhausted: {value} is not within {budget} of an integer")]
    PrecisionExhausted { value: f64, budget: f64 },
    #[error(
        "n={n}, k={k} is outside the validated window n <= {WINDOW_MAX_N}, k <= {WINDOW_MAX_K}"
    )]
    OutsideWindow { n: usize, k: usize },
}

/// Angles, eigenvalues and `cot²(θ_j/2)` weights of the transfer matrix on `[k]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    k: usize,
    angles: Vec<f64>,
    eigenvalues: Vec<f64>,
    cot2_weights: Vec<f64>,
}

impl Spectrum {
    pub fn new(k: usize) -> Self {
        assert!(k >= 1, "alphabet must be nonempty");
        let denom = (k + 1) as f64;
        let angles: Vec<f64> = (1..=k).map(|j| j as f64 * PI / denom).collect();
        let eigenvalues = angles.iter().map(|a| 1.0 + 2.0 * a.cos()).collect();
        let cot2_weights = angles.iter().map(|a| cot2(a / 2.0)).collect();
        Self {
            k,
            angles,
            eigenvalues,
            cot2_weights,
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `θ_j = jπ/(k+1)`, index `j - 1`.
    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    /// `λ_j = 1 + 2cos θ_j`, strictly decreasing.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// `cot²(θ_j / 2)`.
    pub fn cot2_weights(&self) -> &[f64] {
        &self.cot2_weights
    }

    /// `Σ_j λ_j^n`.
    pub fn power_sum(&self, n: usize) -> f64 {
        self.eigenvalues.iter().map(|l| powi(*l, n)).sum()
    }
}

fn cot2(a: f64) -> f64 {
    let c = a.cos() / a.sin();
    c * c
}

fn powi(x: f64, n: usize) -> f64 {
    x.powi(i32::try_from(n).expect("exponent fits in i32"))
}

/// Smooth words of length `n >= 1`, summing over odd `j` only:
/// `2/(k+1) Σ_{j odd} cot²(jπ/(2(k+1))) λ_j^{n-1}`.
pub fn sw_trig(n: usize, k: usize) -> f64 {
    assert!(n >= 1, "closed form needs n >= 1");
    let s = Spectrum::new(k);
    let sum: f64 = (0..k)
        .step_by(2)
        .map(|idx| s.cot2_weights[idx] * powi(s.eigenvalues[idx], n - 1))
        .sum();
    2.0 * sum / (k + 1) as f64
}

/// Smooth cyclic words of length `n >= 1`: `Σ_j λ_j^n`.
pub fn scw_trig(n: usize, k: usize) -> f64 {
    assert!(n >= 1, "closed form needs n >= 1");
    Spectrum::new(k).power_sum(n)
}

/// Smooth necklaces of length `n >= 1`:
/// `(1/n) Σ_j Σ_{d | n} φ(d) λ_j^{n/d}`.
pub fn sn_trig(n: usize, k: usize) -> f64 {
    assert!(n >= 1, "closed form needs n >= 1");
    let s = Spectrum::new(k);
    let total: f64 = divisors(n as u64)
        .into_iter()
        .map(|d| totient(d) as f64 * s.power_sum(n / d as usize))
        .sum();
    total / n as f64
}

/// Nearest nonnegative integer to `x`, provided it lies within `budget`.
pub fn round_validated(x: f64, budget: f64) -> Result<BigCount, SpectralError> {
    assert!(budget > 0.0, "budget must be positive");
    let r = x.round();
    if !x.is_finite() || (x - r).abs() > budget || r < 0.0 {
        return Err(SpectralError::PrecisionExhausted { value: x, budget });
    }
    BigCount::from_f64(r).ok_or(SpectralError::PrecisionExhausted { value: x, budget })
}

/// Whether `(n, k)` lies inside the validated precision window.
pub fn window_admits(n: usize, k: usize) -> bool {
    k >= 1 && n <= WINDOW_MAX_N && k <= WINDOW_MAX_K
}

/// Exact count recovered from the trigonometric form; `n = 0` gives 1.
pub fn count_validated(family: Family, n: usize, k: usize) -> Result<BigCount, SpectralError> {
    if !window_admits(n, k) {
        return Err(SpectralError::OutsideWindow { n, k });
    }
    if n == 0 {
        return Ok(1u32.into());
    }
    let x = match family {
        Family::Sw => sw_trig(n, k),
        Family::Scw => scw_trig(n, k),
        Family::Sn => sn_trig(n, k),
    };
    round_validated(x, ROUNDING_BUDGET)
}

/// Residues of `1/U_m` at its zeros: `(-1)^{j+1} sin²(jπ/(m+1)) / (m+1)`.
pub fn residues(m: usize) -> Vec<f64> {
    assert!(m >= 1, "U_0 has no zeros");
    let denom = (m + 1) as f64;
    (1..=m)
        .map(|j| {
            let s = (j as f64 * PI / denom).sin();
            let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
            sign * s * s / denom
        })
        .collect()
}

/// Residues of `(1 + U_{m-1}) / U_m`: `(1 + (-1)^{j+1}) sin²(jπ/(m+1)) / (m+1)`.
pub fn residues_shifted(m: usize) -> Vec<f64> {
    assert!(m >= 1, "U_0 has no zeros");
    let denom = (m + 1) as f64;
    (1..=m)
        .map(|j| {
            if j % 2 == 0 {
                return 0.0;
            }
            let s = (j as f64 * PI / denom).sin();
            2.0 * s * s / denom
        })
        .collect()
}

/// Leading term `2/(k+1) cot²(π/(2(k+1))) λ_1^{n-1}` of the smooth-word count.
pub fn sw_asymptotic(n: usize, k: usize) -> f64 {
    assert!(n >= 1, "estimate needs n >= 1");
    let s = Spectrum::new(k);
    2.0 / (k + 1) as f64 * s.cot2_weights[0] * powi(s.eigenvalues[0], n - 1)
}

/// Leading term `λ_1^n` of the smooth cyclic count.
pub fn scw_asymptotic(n: usize, k: usize) -> f64 {
    powi(Spectrum::new(k).eigenvalues[0], n)
}

/// `lim scw_{n,k} / sw_{n,k} = (k+1)(2cos(π/(k+1)) + 1) tan²(π/(2(k+1))) / 2`.
pub fn cyclic_proportion_limit(k: usize) -> f64 {
    assert!(k >= 1, "alphabet must be nonempty");
    let kp1 = (k + 1) as f64;
    let tan = (PI / (2.0 * kp1)).tan();
    0.5 * kp1 * (2.0 * (PI / kp1).cos() + 1.0) * tan * tan
}
