//! One-dimensional search helpers: golden-section bracketing plus
//! derivative-based polishing with centered finite differences.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Shrinks `[lo, hi]` around the minimum of a unimodal `f` until the
/// bracket is narrower than `width`. Returns the final bracket.
pub fn golden_section<T, F>(mut f: F, mut lo: T, mut hi: T, width: T, max_iter: usize) -> Result<(T, T)>
where
    T: Real,
    F: FnMut(T) -> T,
{
    let inv_phi = (T::lit(5.0).sqrt() - T::one()) / T::lit(2.0);
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..max_iter {
        if hi - lo <= width {
            return Ok((lo, hi));
        }
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    Err(Error::NonConvergence { what: "golden-section search", estimate: (hi - lo).to_f64_lossy() })
}

/// Centered difference (f(x+h) − f(x−h)) / 2h.
pub fn central_derivative<T: Real, F: FnMut(T) -> T>(f: &mut F, x: T, h: T) -> T {
    (f(x + h) - f(x - h)) / (h + h)
}

/// Five-point centered difference, fourth order in `h`.
pub fn central_derivative4<T: Real, F: FnMut(T) -> T>(f: &mut F, x: T, h: T) -> T {
    let two = h + h;
    (f(x - two) - f(x + two) + T::lit(8.0) * (f(x + h) - f(x - h))) / (T::lit(6.0) * two)
}

/// Bisection on the sign of the finite-difference derivative inside a
/// bracket that contains a minimum. Stops when the bracket is below `width`.
pub fn bisect_derivative<T, F>(f: F, lo: T, hi: T, h: T, width: T) -> T
where
    T: Real,
    F: FnMut(T) -> T,
{
    bisect_sign(f, lo, hi, h, width, central_derivative)
}

/// As [`bisect_derivative`] with the fourth-order stencil, which allows a
/// larger `h` and so less rounding noise near the root.
pub fn bisect_derivative4<T, F>(f: F, lo: T, hi: T, h: T, width: T) -> T
where
    T: Real,
    F: FnMut(T) -> T,
{
    bisect_sign(f, lo, hi, h, width, central_derivative4)
}

fn bisect_sign<T, F>(mut f: F, mut lo: T, mut hi: T, h: T, width: T, d: fn(&mut F, T, T) -> T) -> T
where
    T: Real,
    F: FnMut(T) -> T,
{
    while hi - lo > width {
        let mid = (lo + hi) / T::lit(2.0);
        if mid <= lo || mid >= hi {
            break;
        }
        if d(&mut f, mid, h) > T::zero() {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo + hi) / T::lit(2.0)
}

/// Golden-section bracketing to `width`, then derivative bisection on a
/// slightly widened bracket down to `tol`.
pub fn minimize_polished<T, F>(mut f: F, lo: T, hi: T, width: T, h: T, tol: T) -> Result<T>
where
    T: Real,
    F: FnMut(T) -> T,
{
    let (blo, bhi) = golden_section(&mut f, lo, hi, width, 10_000)?;
    let pad = T::lit(100.0) * width;
    let mut a = (blo - pad).max(lo + h);
    let mut b = (bhi + pad).min(hi - h);
    // The widened bracket must still straddle the sign change of f′.
    if central_derivative(&mut f, a, h) > T::zero() {
        a = blo;
    }
    if central_derivative(&mut f, b, h) < T::zero() {
        b = bhi;
    }
    Ok(bisect_derivative(f, a, b, h, tol))
}

/// Newton iterations on f′ = 0 with f′ and f″ from centered differences.
pub fn newton_polish<T, F>(mut f: F, mut x: T, h: T, steps: usize) -> T
where
    T: Real,
    F: FnMut(T) -> T,
{
    for _ in 0..steps {
        let fp = f(x + h);
        let fm = f(x - h);
        let f0 = f(x);
        let d1 = (fp - fm) / (h + h);
        let d2 = (fp - f0 - f0 + fm) / (h * h);
        if d2 == T::zero() || !d2.is_finite() {
            break;
        }
        let step = d1 / d2;
        if !step.is_finite() {
            break;
        }
        x = x - step;
    }
    x
}
