//! Exponents and prevertices of exterior triangle maps.
//!
//! With exponents μₖ = 1 − (interior angle)/π the map has a simple pole at
//! the origin exactly when Σ μₖ/aₖ = 0. Fixing a₁ leaves two unit-circle
//! unknowns, solved here by damped Newton on their angles.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::geometry::{ApexAngle, Triangle};
use crate::scalar::Real;

/// μₖ = 1 − (interior angle at vertex k)/π. The three values sum to 2.
pub fn exponents_from_triangle<T: Real>(tri: &Triangle<T>) -> [T; 3] {
    tri.angles().map(|a| T::one() - a / T::PI())
}

/// Exponents of the isosceles triangle with apex θ, apex first.
pub fn isosceles_exponents<T: Real>(theta: ApexAngle<T>) -> [T; 3] {
    let (pi, th) = (T::PI(), theta.radians());
    let side = (pi + th) / (T::lit(2.0) * pi);
    [(pi - th) / pi, side, side]
}

/// (−1, a₂, a₃) with a₂,₃ = (π − θ ± 2i√(πθ)) / (π + θ).
pub fn isosceles_prevertices<T: Real>(theta: ApexAngle<T>) -> [Complex<T>; 3] {
    let (pi, th) = (T::PI(), theta.radians());
    let re = (pi - th) / (pi + th);
    let im = T::lit(2.0) * (pi * th).sqrt() / (pi + th);
    [Complex::new(-T::one(), T::zero()), Complex::new(re, im), Complex::new(re, -im)]
}

/// Σ μₖ / aₖ, which must vanish for a pole of order one at 0.
pub fn residue_constraint<T: Real>(mu: &[T; 3], a: &[Complex<T>; 3]) -> Complex<T> {
    mu.iter().zip(a).fold(Complex::new(T::zero(), T::zero()), |acc, (&m, &p)| acc + p.inv() * m)
}

/// Order in which a₁ → a₂ → a₃ run around the unit circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrevertexOrder {
    Counterclockwise,
    Clockwise,
}

impl PrevertexOrder {
    /// An exterior map reverses orientation: counterclockwise target
    /// vertices need clockwise prevertices.
    pub fn for_targets_counterclockwise(ccw: bool) -> Self {
        if ccw {
            PrevertexOrder::Clockwise
        } else {
            PrevertexOrder::Counterclockwise
        }
    }

    pub fn of<T: Real>(a: &[Complex<T>; 3]) -> Self {
        let tau = T::TAU();
        let rel = |p: Complex<T>| {
            let t = (p / a[0]).arg();
            if t < T::zero() {
                t + tau
            } else {
                t
            }
        };
        if rel(a[1]) < rel(a[2]) {
            PrevertexOrder::Counterclockwise
        } else {
            PrevertexOrder::Clockwise
        }
    }
}

const NEWTON_MAX_ITER: usize = 100;
const RESIDUAL_TOL: f64 = 1e-13;

/// Solves μ₁/a₁ + μ₂/a₂ + μ₃/a₃ = 0 for unit-modulus a₂, a₃ with a₁ fixed.
///
/// Newton starts from the isosceles closed form whose apex exponent equals
/// μ₁, rotated onto `fixed`. The constraint is symmetric under reflection in
/// the diameter through a₁, so there are two solutions; the one running in
/// `order` is returned.
pub fn solve_prevertices<T: Real>(mu: [T; 3], fixed: Complex<T>, order: PrevertexOrder) -> Result<[Complex<T>; 3]> {
    validate_exponents(&mu)?;
    if (fixed.norm() - T::one()).abs() > T::lit(1e-12) {
        return Err(Error::Domain(format!("fixed prevertex {fixed} is not on the unit circle")));
    }
    let pi = T::PI();
    let theta0 = pi * (T::one() - mu[0]);
    let iso = isosceles_prevertices(ApexAngle::new_unguarded(theta0)?);
    // The isosceles a₂ is the clockwise neighbour of a₁ = −1.
    let rot = -fixed;
    let (s2, s3) = match order {
        PrevertexOrder::Clockwise => (iso[1] * rot, iso[2] * rot),
        PrevertexOrder::Counterclockwise => (iso[2] * rot, iso[1] * rot),
    };
    let mut phi = [s2.arg(), s3.arg()];

    let residual = |phi: &[T; 2]| -> Complex<T> {
        fixed.inv() * mu[0]
            + Complex::from_polar(mu[1], -phi[0])
            + Complex::from_polar(mu[2], -phi[1])
    };
    let mut res = residual(&phi);
    let tol = T::lit(RESIDUAL_TOL);
    let mut iter = 0;
    while res.norm() > tol {
        iter += 1;
        if iter > NEWTON_MAX_ITER {
            return Err(Error::NonConvergence { what: "prevertex Newton solve", estimate: res.norm().to_f64_lossy() });
        }
        // ∂/∂φ (μ e^{−iφ}) = −iμ e^{−iφ}
        let d2 = Complex::from_polar(mu[1], -phi[0]) * Complex::new(T::zero(), -T::one());
        let d3 = Complex::from_polar(mu[2], -phi[1]) * Complex::new(T::zero(), -T::one());
        let det = d2.re * d3.im - d3.re * d2.im;
        if det.abs() < T::epsilon() {
            return Err(Error::NonConvergence { what: "prevertex Newton solve (singular Jacobian)", estimate: res.norm().to_f64_lossy() });
        }
        let step = [
            (res.re * d3.im - d3.re * res.im) / det,
            (d2.re * res.im - res.re * d2.im) / det,
        ];
        let mut damping = T::one();
        loop {
            let trial = [phi[0] - damping * step[0], phi[1] - damping * step[1]];
            let r = residual(&trial);
            if r.norm() < res.norm() || damping < T::lit(1e-6) {
                phi = trial;
                res = r;
                break;
            }
            damping = damping / T::lit(2.0);
        }
    }
    let mut a = [fixed, Complex::from_polar(T::one(), phi[0]), Complex::from_polar(T::one(), phi[1])];
    if (a[1] - a[2]).norm() < T::lit(1e-8) || (a[1] - a[0]).norm() < T::lit(1e-8) {
        return Err(Error::NonConvergence { what: "prevertex Newton solve (coalesced prevertices)", estimate: 0.0 });
    }
    if PrevertexOrder::of(&a) != order {
        // Mirror in the diameter through a₁.
        let f2 = fixed * fixed;
        a[1] = f2 * a[1].conj();
        a[2] = f2 * a[2].conj();
    }
    Ok(a)
}

pub(crate) fn validate_exponents<T: Real>(mu: &[T; 3]) -> Result<()> {
    if mu.iter().any(|&m| !(m > T::zero() && m < T::one())) {
        return Err(Error::Domain(format!("exponents must lie in (0, 1): {mu:?}")));
    }
    let sum = mu[0] + mu[1] + mu[2];
    if (sum - T::lit(2.0)).abs() > T::lit(1e-9) {
        return Err(Error::Domain(format!("exponents must sum to 2, got {sum}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn right_isosceles_closed_form() {
        let th = ApexAngle::new(PI / 2.0).unwrap();
        let a = isosceles_prevertices(th);
        assert!((a[1] - c(1.0 / 3.0, 2.0 * 2f64.sqrt() / 3.0)).norm() < 1e-15);
        assert!((a[1].norm() - 1.0).abs() < 1e-15);
        let mu = isosceles_exponents(th);
        assert!(residue_constraint(&mu, &a).norm() < 1e-14);
        let a = isosceles_prevertices(ApexAngle::new(PI / 3.0).unwrap());
        assert_eq!(a[2], a[1].conj());
    }

    #[test]
    fn thirty_sixty_ninety() {
        let mu = [0.5, 2.0 / 3.0, 5.0 / 6.0];
        let a = solve_prevertices(mu, c(1.0, 0.0), PrevertexOrder::Counterclockwise).unwrap();
        assert!((a[1] - c(0.0, 1.0)).norm() < 1e-12);
        assert!((a[2] - c(-0.6, -0.8)).norm() < 1e-12);
        let b = solve_prevertices(mu, c(1.0, 0.0), PrevertexOrder::Clockwise).unwrap();
        assert!((b[1] - c(0.0, -1.0)).norm() < 1e-12);
        assert!((b[2] - c(-0.6, 0.8)).norm() < 1e-12);
    }

    #[test]
    fn reproduces_isosceles_closed_form() {
        for &theta in &[0.3, PI / 3.0, PI / 2.0, 2.0, 2.8] {
            let th = ApexAngle::new(theta).unwrap();
            let want = isosceles_prevertices(th);
            let got = solve_prevertices(isosceles_exponents(th), c(-1.0, 0.0), PrevertexOrder::of(&want)).unwrap();
            for k in 0..3 {
                assert!((got[k] - want[k]).norm() < 1e-12, "θ = {theta}");
            }
        }
    }

    #[test]
    fn exponent_conventions() {
        let tri = Triangle::from_sides(1.0, 3f64.sqrt(), 2.0).unwrap();
        let mu = exponents_from_triangle(&tri);
        // angles opposite 1, √3, 2 are 30°, 60°, 90°
        assert!((mu[0] - 5.0 / 6.0).abs() < 1e-15);
        assert!((mu[1] - 2.0 / 3.0).abs() < 1e-15);
        assert!((mu[2] - 0.5).abs() < 1e-15);
        let th = ApexAngle::new(1.1_f64).unwrap();
        let mu = exponents_from_triangle(&Triangle::isosceles(1.1).unwrap());
        let iso = isosceles_exponents(th);
        for k in 0..3 {
            assert!((mu[k] - iso[k]).abs() < 1e-14);
        }
    }

    #[test]
    fn rejects_bad_exponents() {
        assert!(solve_prevertices([0.5, 0.5, 0.5], c(1.0, 0.0), PrevertexOrder::Clockwise).is_err());
        assert!(solve_prevertices([1.2, 0.5, 0.3], c(1.0, 0.0), PrevertexOrder::Clockwise).is_err());
        assert!(solve_prevertices([0.5, 0.7, 0.8], c(2.0, 0.0), PrevertexOrder::Clockwise).is_err());
    }
}
