//! Closed forms for isosceles exterior maps in terms of Appell's F₁.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::geometry::ApexAngle;
use crate::scalar::{cpow, Real};
use crate::specfun::{appell_f1, gamma_real, AppellArgs, EvalConfig};

/// f(z) for the isosceles map with apex θ, base point −1, via two F₁
/// values. Every power is principal.
///
/// Fails with a domain or branch error when an F₁ argument is outside both
/// evaluators' reach; the quadrature in [`super::f_numeric`] covers those.
pub fn f_closed_isosceles<T: Real>(z: Complex<T>, theta: ApexAngle<T>, cfg: &EvalConfig) -> Result<Complex<T>> {
    let (pi, th) = (T::PI(), theta.radians());
    let one = Complex::new(T::one(), T::zero());
    let two = T::lit(2.0);
    if !(z.norm() <= T::one() + T::lit(1e-12)) || z.norm() == T::zero() {
        return Err(Error::Domain(format!("z = {z} must lie in the closed unit disk minus 0")));
    }
    let zp = z + one;
    if zp.norm() == T::zero() {
        return Ok(Complex::new(T::zero(), T::zero()));
    }
    let zm = z - one;
    let (sp, st) = (pi.sqrt(), th.sqrt());
    let xi = Complex::new(sp, -st) * zp / (two * sp);
    let eta = Complex::new(sp, st) * zp / (two * sp);
    let quad = (zm * zm * pi + zp * zp * th) / (pi + th);
    let p = (pi - th) / (two * pi);
    let phi = cpow(quad, (pi + th) / (two * pi));
    let psi = cpow(quad, p);
    let i_st = Complex::new(T::zero(), st);
    let delta = cpow(-zm * sp - i_st * zp, p) * cpow(-zm * sp + i_st * zp, p);
    let k = two.powf(th / pi) * pi.powf((pi + th) / (two * pi)) / (two * pi * pi + pi * th - th * th);
    let r = th / pi;
    let f1a = appell_f1(&AppellArgs::new(T::one() - r, p, p, two - r, xi, eta), cfg)?.value;
    let f1b = appell_f1(&AppellArgs::new(two - r, p, p, T::lit(3.0) - r, eta, xi), cfg)?.value;
    let bracket = f1a * (-two * (two * pi - th)) + zp * f1b * (pi + th);
    let braces = -phi / z + delta / psi * bracket * k;
    Ok(cpow(zp, T::one() - r) * braces)
}

/// κ = 3^{3/4} Γ(1/4)² / (2^{7/2} π^{3/2}) for the right isosceles triangle
/// with unit legs.
pub fn right_isosceles_kappa<T: Real>() -> Result<T> {
    let g = gamma_real(T::lit(0.25))?;
    Ok(T::lit(3.0).powf(T::lit(0.75)) * g * g / (T::lit(2.0).powf(T::lit(3.5)) * T::PI().powf(T::lit(1.5))))
}

/// Outer conformal center of the right isosceles triangle with apex at 0
/// and base vertices e^{±iπ/4}, from its F₁ expression.
pub fn closed_form_lambda_right_isosceles<T: Real>(cfg: &EvalConfig) -> Result<Complex<T>> {
    let kappa = right_isosceles_kappa::<T>()?;
    let s2 = T::lit(2.0).sqrt();
    let quarter = T::lit(0.25);
    let u = Complex::new(T::lit(0.5), -s2 / T::lit(4.0));
    let v = u.conj();
    let a = appell_f1(&AppellArgs::new(T::lit(0.5), quarter, quarter, T::lit(1.5), u, v), cfg)?.value;
    let b = appell_f1(&AppellArgs::new(T::lit(1.5), quarter, quarter, T::lit(2.5), v, u), cfg)?.value;
    let pre = kappa * T::lit(2.0).powf(T::lit(1.25)) / T::lit(3.0).powf(T::lit(0.75));
    Ok((a * T::lit(2.0) - b) * pre)
}

/// Outer conformal center of {x > 0, y > 0, x + y < 1}: the right isosceles
/// center rotated by π/4.
pub fn outer_center_unit_legs_right_triangle<T: Real>(cfg: &EvalConfig) -> Result<Complex<T>> {
    let lambda = closed_form_lambda_right_isosceles::<T>(cfg)?;
    Ok(lambda * Complex::from_polar(T::one(), T::FRAC_PI_4()))
}
