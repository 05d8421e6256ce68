//! Real gamma function via the Lanczos approximation (g = 7, n = 9).
//!
//! Relative error stays below 1e-13 on (0, 170] in `f64`; the recurrence
//! Γ(x+1) = xΓ(x) is used in the tests as the coefficient check.

use crate::error::{Error, Result};
use crate::scalar::Real;

const LANCZOS_G: f64 = 7.0;
const RECURRENCE_FROM: f64 = 20.0;

const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Γ(x) for real `x`.
///
/// Negative non-integer arguments go through the reflection formula.
/// Non-positive integers are poles; arguments whose gamma exceeds the
/// scalar range return [`Error::Overflow`].
pub fn gamma_real<T: Real>(x: T) -> Result<T> {
    if x.is_nan() {
        return Err(Error::Domain("gamma of NaN".into()));
    }
    if x <= T::zero() && x == x.floor() {
        return Err(Error::Pole(format!("gamma at non-positive integer {x}")));
    }
    let half = T::lit(0.5);
    let value = if x < half {
        // Γ(x)Γ(1−x) = π / sin(πx)
        let s = (T::PI() * x).sin();
        let g = gamma_lanczos(T::one() - x)?;
        T::PI() / (s * g)
    } else if x > T::lit(RECURRENCE_FROM) {
        // Upward recurrence from [10, 11) keeps the error growth linear in
        // the number of factors instead of amplifying it through t^(x−1/2).
        let steps = (x - T::lit(10.0)).floor();
        let mut y = x - steps;
        let mut acc = gamma_lanczos(y)?;
        while y < x {
            acc = acc * y;
            y = y + T::one();
        }
        acc
    } else {
        gamma_lanczos(x)?
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Overflow)
    }
}

/// Lanczos sum for x ≥ 1/2.
fn gamma_lanczos<T: Real>(x: T) -> Result<T> {
    let xm1 = x - T::one();
    let mut acc = T::lit(LANCZOS_COEFFS[0]);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc = acc + T::lit(c) / (xm1 + T::from_usize_lossy(i));
    }
    let t = xm1 + T::lit(LANCZOS_G) + T::lit(0.5);
    // Split t^(x−1/2) in halves so that large arguments do not overflow early.
    let half_pow = t.powf((xm1 + T::lit(0.5)) / T::lit(2.0));
    let value = (T::TAU()).sqrt() * half_pow * (half_pow * (-t).exp()) * acc;
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Overflow)
    }
}

/// ln Γ(x) for x > 0, usable where Γ itself would overflow.
pub fn ln_gamma<T: Real>(x: T) -> Result<T> {
    if x.is_nan() || x <= T::zero() {
        return Err(Error::Domain(format!("ln_gamma requires x > 0, got {x}")));
    }
    if x < T::lit(0.5) {
        let s = (T::PI() * x).sin();
        return Ok(T::PI().ln() - s.ln() - ln_gamma(T::one() - x)?);
    }
    let xm1 = x - T::one();
    let mut acc = T::lit(LANCZOS_COEFFS[0]);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc = acc + T::lit(c) / (xm1 + T::from_usize_lossy(i));
    }
    let t = xm1 + T::lit(LANCZOS_G) + T::lit(0.5);
    Ok(T::lit(0.5) * T::TAU().ln() + (xm1 + T::lit(0.5)) * t.ln() - t + acc.ln())
}
