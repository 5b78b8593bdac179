//! Rational generating functions for smooth and smooth cyclic words.
//!
//! The closed forms are naturally written in `t = (1-x)/(2x)`. Substituting
//! `U_i(t) = θ_i(x) / x^i` turns every one of them into a ratio of integer
//! polynomials in `x`, which is what this module builds:
//!
//! ```text
//! sw_k(x)    = 1 + x(k-(3k+2)x)/(1-3x)² + 2x³(x^{k-1} + θ_{k-1}) / ((1-3x)² θ_k)
//! scw_k(x)   = 1 + kx(1+3x)/((1+x)(1-3x)) - 2(k+1)x² θ_{k-1} / ((1+x)(1-3x) θ_k)
//! sw_k(x|i)  = x(θ_k - x^i θ_{k-i} - x^{k-i+1} θ_{i-1}) / ((1-3x) θ_k)
//! ```
//!
//! Numerators and denominators are left unreduced.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::chebyshev::theta_sequence;
use crate::poly::IntPolynomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("denominator has zero constant term")]
    ZeroConstantTerm,
    #[error("denominator constant term {0} is not a unit; coefficients would not be integers")]
    NonUnitConstantTerm(BigInt),
    #[error("prefix letter {letter} is outside the alphabet 1..={k}")]
    LetterOutOfRange { letter: usize, k: usize },
}

/// A formal power series given as `num / den` with `den(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RationalSeries {
    /// Normalizes the sign so that the denominator's constant term is `+1`.
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self, SeriesError> {
        let c = den.constant_term();
        if c.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        if !c.abs().is_one() {
            return Err(SeriesError::NonUnitConstantTerm(c));
        }
        if c.is_negative() {
            Ok(Self {
                num: -num,
                den: -den,
            })
        } else {
            Ok(Self { num, den })
        }
    }

    pub fn num(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn den(&self) -> &IntPolynomial {
        &self.den
    }

    /// First `n + 1` coefficients, by the recurrence
    /// `a_m = num_m - Σ_{j≥1} den_j a_{m-j}`.
    pub fn coeffs(&self, n: usize) -> Vec<BigInt> {
        let den = self.den.coeffs();
        let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
        for m in 0..=n {
            let mut a = self.num.coeff(m);
            for (j, d) in den.iter().enumerate().take(m + 1).skip(1) {
                if !d.is_zero() {
                    a -= d * &out[m - j];
                }
            }
            out.push(a);
        }
        out
    }

    /// Equality as power series: `num_a den_b == num_b den_a`.
    pub fn series_eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            num: &(&self.num * &other.den) + &(&other.num * &self.den),
            den: &self.den * &other.den,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            num: &self.num * &other.num,
            den: &self.den * &other.den,
        }
    }

    /// Multiplication by a polynomial.
    pub fn mul_poly(&self, p: &IntPolynomial) -> Self {
        Self {
            num: &self.num * p,
            den: self.den.clone(),
        }
    }

    pub fn from_poly(p: IntPolynomial) -> Self {
        Self {
            num: p,
            den: IntPolynomial::one(),
        }
    }
}

/// Free-function form of [`RationalSeries::coeffs`].
pub fn series_coeffs(rs: &RationalSeries, n: usize) -> Vec<BigInt> {
    rs.coeffs(n)
}

/// Free-function form of [`RationalSeries::series_eq`].
pub fn series_equal(a: &RationalSeries, b: &RationalSeries) -> bool {
    a.series_eq(b)
}

/// Rendered as `(num)/(den)`, each an ascending coefficient list.
impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

fn one_minus_3x() -> IntPolynomial {
    IntPolynomial::from_i64s(&[1, -3])
}

fn int(c: usize) -> BigInt {
    BigInt::from(c)
}

/// Generating function of the number of smooth words over `[k]`.
pub fn sw_gf(k: usize) -> RationalSeries {
    assert!(k >= 1, "alphabet must be nonempty");
    let theta = theta_sequence(k);
    let (theta_k, theta_km1) = (&theta[k], &theta[k - 1]);
    let sq = one_minus_3x().pow(2);
    let den = &sq * theta_k;

    // x(k - (3k+2)x)
    let linear = IntPolynomial::from_coeffs(vec![BigInt::zero(), int(k), -int(3 * k + 2)]);
    // 2x³(x^{k-1} + θ_{k-1})
    let tail = (&IntPolynomial::monomial(1, k - 1) + theta_km1)
        .shift(3)
        .scale(&int(2));

    let num = &(&den + &(&linear * theta_k)) + &tail;
    RationalSeries::new(num, den).expect("θ_k(0) = 1")
}

/// Generating function of the number of smooth cyclic words over `[k]`.
pub fn scw_gf(k: usize) -> RationalSeries {
    assert!(k >= 1, "alphabet must be nonempty");
    let theta = theta_sequence(k);
    let (theta_k, theta_km1) = (&theta[k], &theta[k - 1]);
    let base = &IntPolynomial::from_i64s(&[1, 1]) * &one_minus_3x();
    let den = &base * theta_k;

    // kx(1+3x)
    let linear = IntPolynomial::from_coeffs(vec![BigInt::zero(), int(k), int(3 * k)]);
    let tail = theta_km1.shift(2).scale(&int(2 * (k + 1)));

    let num = &(&den + &(&linear * theta_k)) - &tail;
    RationalSeries::new(num, den).expect("θ_k(0) = 1")
}

/// Generating function of smooth words over `[k]` whose first letter is `letter`.
pub fn sw_prefix_gf(letter: usize, k: usize) -> Result<RationalSeries, SeriesError> {
    if letter == 0 || letter > k {
        return Err(SeriesError::LetterOutOfRange { letter, k });
    }
    let theta = theta_sequence(k);
    let inner =
        &(&theta[k] - &theta[k - letter].shift(letter)) - &theta[letter - 1].shift(k - letter + 1);
    let den = &one_minus_3x() * &theta[k];
    RationalSeries::new(inner.shift(1), den)
}
