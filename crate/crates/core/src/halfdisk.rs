//! The open upper half-disk Ω = {|z| < 1, Im z > 0}: Green's function,
//! inner conformal center, and the exterior map with its Laurent data.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::optimize::{bisect_derivative4, golden_section};
use crate::scalar::{cpow, Real};
use crate::sc_exterior::{circle_moments, MomentConfig, PathValue};

/// Location and size of the largest inner conformal radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InnerCenterResult<T: Real> {
    /// The center is i·y0.
    pub y0: T,
    pub max_inner_radius: T,
    pub h_at_y0: T,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OuterSummaryHalfDisk<T: Real> {
    pub outer_radius: T,
    pub outer_center: Complex<T>,
    /// Node count and error estimate of the contour average.
    pub node_count: usize,
    pub error: T,
}

fn check_inside<T: Real>(z: Complex<T>) -> Result<()> {
    if z.im > T::zero() && z.norm_sqr() < T::one() && z.re.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{z} is not in the open upper half-disk")))
    }
}

/// ((1 + z)/(1 − z))², which maps Ω onto the upper half plane.
fn e_of<T: Real>(z: Complex<T>) -> Complex<T> {
    let one = Complex::new(T::one(), T::zero());
    let q = (one + z) / (one - z);
    q * q
}

/// ℓ(z) = ln((1 + z)²/(1 − z)²), mapping Ω onto the strip 0 < Im < π.
pub fn ell<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    check_inside(z)?;
    Ok(e_of(z).ln())
}

/// f_w(z) = (e^{ℓ(z)} − e^{ℓ(w)}) / (e^{ℓ(z)} − e^{conj ℓ(w)}), a conformal
/// map of Ω onto the unit disk with f_w(w) = 0.
pub fn green_map<T: Real>(w: Complex<T>, z: Complex<T>) -> Result<Complex<T>> {
    check_inside(w)?;
    check_inside(z)?;
    let (ez, ew) = (e_of(z), e_of(w));
    Ok((ez - ew) / (ez - ew.conj()))
}

/// h(w) = |e^{ℓ} ℓ′ / (e^{ℓ} − e^{conj ℓ})| at w; 1/h is the conformal
/// radius of Ω at w.
pub fn h_general<T: Real>(w: Complex<T>) -> Result<T> {
    check_inside(w)?;
    let one = Complex::new(T::one(), T::zero());
    let e = e_of(w);
    let dl = Complex::new(T::lit(4.0), T::zero()) / (one - w * w);
    Ok(e.norm() * dl.norm() / (T::lit(2.0) * e.im.abs()))
}

/// h(iy) = (1 + y²) / (2y(1 − y²)).
pub fn h_axis<T: Real>(y: T) -> Result<T> {
    if !(y > T::zero() && y < T::one()) {
        return Err(Error::Domain(format!("y = {y} outside (0, 1)")));
    }
    Ok((T::one() + y * y) / (T::lit(2.0) * y * (T::one() - y * y)))
}

/// Minimizer of h on the imaginary axis: golden section to 1e-8, then
/// bisection on a finite-difference derivative to 1e-12.
pub fn inner_center<T: Real>() -> Result<InnerCenterResult<T>> {
    let f = |y: T| h_axis(y).unwrap_or(T::infinity());
    let eps = T::lit(1e-6);
    let (lo, hi) = golden_section(f, eps, T::one() - eps, T::lit(1e-8), 10_000)?;
    let pad = T::lit(1e-6);
    let y0 = bisect_derivative4(f, lo - pad, hi + pad, T::lit(2e-4), T::lit(1e-12).max(T::epsilon() * T::lit(4.0)));
    let h = h_axis(y0)?;
    Ok(InnerCenterResult { y0, max_inner_radius: T::one() / h, h_at_y0: h })
}

/// m(z) = (1 + z e^{iπ/6}) / (1 + z e^{5iπ/6}), the quotient
/// (√3/2 + i/2 + 1/z)/(−√3/2 + i/2 + 1/z) with the pole at 0 removed.
pub fn m_of_z<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    let (num, den) = m_parts(z)?;
    Ok(num / den)
}

fn m_parts<T: Real>(z: Complex<T>) -> Result<(Complex<T>, Complex<T>)> {
    let one = Complex::new(T::one(), T::zero());
    let num = one + z * Complex::from_polar(T::one(), T::PI() / T::lit(6.0));
    let den = one + z * Complex::from_polar(T::one(), T::lit(5.0) * T::PI() / T::lit(6.0));
    if den.norm() <= T::epsilon() * T::lit(4.0) {
        return Err(Error::Pole(format!("m has a pole at z = {z}")));
    }
    Ok((num, den))
}

/// g(z) = (1 + 2m^{3/2} + m³)/(m³ − 1), mapping the punctured unit disk onto
/// the exterior of the closed half-disk with g(0) = ∞.
///
/// m³ − 1 is formed as (m − 1)(m² + m + 1) with m − 1 = √3 z/(1 + z e^{5iπ/6})
/// exactly, so small |z| loses no digits.
pub fn exterior_map_halfdisk<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    if z.norm() == T::zero() {
        return Err(Error::Pole("g has its pole at z = 0".into()));
    }
    if !(z.norm() < T::one()) {
        return Err(Error::Domain(format!("z = {z} outside the open unit disk")));
    }
    let (num, den) = m_parts(z)?;
    let m = num / den;
    let m_minus_1 = z * T::lit(3.0).sqrt() / den;
    let one = Complex::new(T::one(), T::zero());
    let m3_minus_1 = m_minus_1 * (m * m + m + one);
    let m32 = cpow(m, T::lit(1.5));
    Ok((one + m32 * T::lit(2.0) + m * m * m) / m3_minus_1)
}

/// Outer radius 4/(3√3) and outer conformal center 2i/(3√3) as trapezoid
/// contour averages of the exterior map on |z| = r.
pub fn outer_summary_halfdisk<T: Real>(r: T, nodes: usize) -> Result<OuterSummaryHalfDisk<T>> {
    let sample = |n: usize| -> Result<Vec<PathValue<T>>> {
        (0..n)
            .map(|j| {
                let t = T::TAU() * T::from_usize_lossy(j) / T::from_usize_lossy(n);
                Ok(PathValue { value: exterior_map_halfdisk(Complex::from_polar(r, t))?, error: T::zero() })
            })
            .collect()
    };
    let s = circle_moments(sample, r, nodes, &MomentConfig::default())?;
    Ok(OuterSummaryHalfDisk { outer_radius: s.kappa, outer_center: s.center, node_count: s.node_count, error: s.error })
}
