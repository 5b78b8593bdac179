//! Chebyshev polynomials of both kinds, the θ polynomials of the tridiagonal
//! inverse, and floating-point helpers for the classical sum and product
//! identities.
//!
//! Negative indices follow the backward extension of the three-term
//! recurrence: `U_{-1} = 0`, `U_{-2} = -1`.

use std::f64::consts::PI;

use num_bigint::BigInt;

use crate::poly::IntPolynomial;

/// Coefficients of `U_r`, built from `U_r = 2x U_{r-1} - U_{r-2}`.
pub fn u_poly(r: usize) -> IntPolynomial {
    u_sequence(r).pop().expect("sequence is nonempty")
}

/// `U_0, ..., U_r` in one pass.
pub fn u_sequence(r: usize) -> Vec<IntPolynomial> {
    let two_x = IntPolynomial::monomial(2, 1);
    let mut out = Vec::with_capacity(r + 1);
    out.push(IntPolynomial::one());
    if r >= 1 {
        out.push(two_x.clone());
    }
    for i in 2..=r {
        let next = &(&two_x * &out[i - 1]) - &out[i - 2];
        out.push(next);
    }
    out
}

/// `U_r` for any `r >= -2`, using the backward-extended convention.
pub fn u_poly_signed(r: i64) -> IntPolynomial {
    match r {
        -1 => IntPolynomial::zero(),
        -2 => IntPolynomial::constant(-1),
        r if r >= 0 => u_poly(r as usize),
        _ => panic!("U_r is only defined here for r >= -2, got {r}"),
    }
}

/// `T_r = (U_r - U_{r-2}) / 2`; the difference always has even coefficients.
pub fn t_poly(r: usize) -> IntPolynomial {
    let diff = &u_poly(r) - &u_poly_signed(r as i64 - 2);
    let two = BigInt::from(2);
    IntPolynomial::from_coeffs(
        diff.coeffs()
            .iter()
            .map(|c| {
                debug_assert!((c % &two) == BigInt::from(0));
                c / &two
            })
            .collect(),
    )
}

/// θ_i from `θ_i = (1-x)θ_{i-1} - x²θ_{i-2}`, `θ_0 = 1`, `θ_1 = 1-x`.
///
/// Equal to `x^i U_i((1-x)/(2x))` as a polynomial in `x`.
pub fn theta_poly(i: usize) -> IntPolynomial {
    theta_sequence(i).pop().expect("sequence is nonempty")
}

/// `θ_0, ..., θ_i`.
pub fn theta_sequence(i: usize) -> Vec<IntPolynomial> {
    let one_minus_x = IntPolynomial::from_i64s(&[1, -1]);
    let x_sq = IntPolynomial::monomial(1, 2);
    let mut out = Vec::with_capacity(i + 1);
    out.push(IntPolynomial::one());
    if i >= 1 {
        out.push(one_minus_x.clone());
    }
    for m in 2..=i {
        let next = &(&one_minus_x * &out[m - 1]) - &(&x_sq * &out[m - 2]);
        out.push(next);
    }
    out
}

/// `θ_i` with `θ_{-1} = 0` (the image of `U_{-1} = 0`).
pub fn theta_poly_signed(i: i64) -> IntPolynomial {
    if i < 0 {
        assert_eq!(i, -1, "θ_i is only defined here for i >= -1");
        IntPolynomial::zero()
    } else {
        theta_poly(i as usize)
    }
}

pub fn eval_poly(p: &IntPolynomial, x: f64) -> f64 {
    p.eval_f64(x)
}

/// Zeros of `U_m`: `cos(jπ/(m+1))` for `j = 1..=m`, in decreasing order.
pub fn u_zeros(m: usize) -> Vec<f64> {
    assert!(m >= 1, "U_0 has no zeros");
    let denom = (m + 1) as f64;
    (1..=m).map(|j| (j as f64 * PI / denom).cos()).collect()
}

/// `U_r(x)` in floating point by the three-term recurrence, `r >= -2`.
pub fn u_value(r: i64, x: f64) -> f64 {
    match r {
        -2 => -1.0,
        -1 => 0.0,
        0 => 1.0,
        r if r > 0 => {
            let (mut prev, mut cur) = (1.0, 2.0 * x);
            for _ in 1..r {
                let next = 2.0 * x * cur - prev;
                prev = cur;
                cur = next;
            }
            cur
        }
        _ => panic!("U_r is only defined here for r >= -2, got {r}"),
    }
}

/// `U_0(t) + ... + U_p(t)` summed term by term.
pub fn u_partial_sum(p: usize, t: f64) -> f64 {
    (0..=p as i64).map(|j| u_value(j, t)).sum()
}

/// Closed form `(U_{p+1}(t) - U_p(t) - 1) / (2(t-1))` of [`u_partial_sum`], `t != 1`.
pub fn u_partial_sum_closed(p: usize, t: f64) -> f64 {
    let p = p as i64;
    (u_value(p + 1, t) - u_value(p, t) - 1.0) / (2.0 * (t - 1.0))
}

/// Linearized product
/// `(U_{i-j} - tU_{i-j-1} - U_{i+j+2} + tU_{i+j+1}) / (2(1-t²))` of `U_i(t)U_j(t)`,
/// valid for `i >= j` and `|t| != 1`.
pub fn u_product_linearized(i: usize, j: usize, t: f64) -> f64 {
    assert!(i >= j, "linearization needs i >= j");
    let (i, j) = (i as i64, j as i64);
    (u_value(i - j, t) - t * u_value(i - j - 1, t) - u_value(i + j + 2, t)
        + t * u_value(i + j + 1, t))
        / (2.0 * (1.0 - t * t))
}
