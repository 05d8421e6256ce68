//! Scaled exterior maps g(z) = scale·f(z) + shift.

use num_complex::Complex;

use super::integral::{integrate_to, MapConfig, PathValue, ScIntegrand};
use super::prevertex::{
    exponents_from_triangle, isosceles_exponents, isosceles_prevertices, residue_constraint, solve_prevertices,
    validate_exponents, PrevertexOrder,
};
use crate::error::{Error, Result};
use crate::geometry::{ApexAngle, Triangle};
use crate::scalar::Real;

/// An exterior map of the disk onto the complement of a triangle, with the
/// disk's origin going to ∞.
#[derive(Debug, Clone, PartialEq)]
pub struct ExteriorMapSpec<T: Real> {
    integrand: ScIntegrand<T>,
    scale: Complex<T>,
    shift: Complex<T>,
    target_vertices: [Complex<T>; 3],
    config: MapConfig,
}

fn loose<T: Real>(tol: f64) -> T {
    T::lit(tol).max(T::epsilon() * T::lit(64.0))
}

impl<T: Real> ExteriorMapSpec<T> {
    /// Checks unit-modulus prevertices, exponents in (0, 1) summing to 2 and
    /// the pole constraint Σ μₖ/aₖ = 0.
    pub fn new(
        prevertices: [Complex<T>; 3],
        exponents: [T; 3],
        basepoint: usize,
        scale: Complex<T>,
        shift: Complex<T>,
        target_vertices: [Complex<T>; 3],
        config: MapConfig,
    ) -> Result<Self> {
        config.validate()?;
        if basepoint > 2 {
            return Err(Error::Config(format!("basepoint index {basepoint} out of range")));
        }
        for a in &prevertices {
            if (a.norm() - T::one()).abs() > loose(1e-12) {
                return Err(Error::Domain(format!("prevertex {a} is off the unit circle")));
            }
        }
        validate_exponents(&exponents)?;
        let sum = exponents[0] + exponents[1] + exponents[2];
        if (sum - T::lit(2.0)).abs() > loose(1e-12) {
            return Err(Error::Domain(format!("exponents sum to {sum}, not 2")));
        }
        let res = residue_constraint(&exponents, &prevertices).norm();
        if res > loose(1e-10) {
            return Err(Error::Domain(format!("pole constraint violated: |Σμ/a| = {res}")));
        }
        if !(scale.norm() > T::zero() && scale.norm().is_finite()) {
            return Err(Error::Degenerate(format!("scale {scale} must be finite and nonzero")));
        }
        Ok(ExteriorMapSpec {
            integrand: ScIntegrand { prevertices, exponents, base: basepoint },
            scale,
            shift,
            target_vertices,
            config,
        })
    }

    pub fn prevertices(&self) -> [Complex<T>; 3] {
        self.integrand.prevertices
    }

    pub fn exponents(&self) -> [T; 3] {
        self.integrand.exponents
    }

    pub fn basepoint(&self) -> Complex<T> {
        self.integrand.basepoint()
    }

    pub fn basepoint_index(&self) -> usize {
        self.integrand.base
    }

    pub fn scale(&self) -> Complex<T> {
        self.scale
    }

    pub fn shift(&self) -> Complex<T> {
        self.shift
    }

    pub fn target_vertices(&self) -> [Complex<T>; 3] {
        self.target_vertices
    }

    pub fn config(&self) -> &MapConfig {
        &self.config
    }

    pub fn integrand(&self) -> &ScIntegrand<T> {
        &self.integrand
    }

    /// Same map with a different numerical configuration.
    pub fn with_config(mut self, config: MapConfig) -> Result<Self> {
        config.validate()?;
        self.config = config;
        Ok(self)
    }

    /// The unscaled integral f(z).
    pub fn f(&self, z: Complex<T>) -> Result<Complex<T>> {
        Ok(integrate_to(&self.integrand, z, &self.config)?.value)
    }

    /// g(z) with the propagated quadrature error.
    pub fn g_with_error(&self, z: Complex<T>) -> Result<PathValue<T>> {
        let v = integrate_to(&self.integrand, z, &self.config)?;
        Ok(self.apply(v))
    }

    pub fn g(&self, z: Complex<T>) -> Result<Complex<T>> {
        Ok(self.g_with_error(z)?.value)
    }

    /// Takes a raw integral value to target coordinates.
    pub fn apply(&self, v: PathValue<T>) -> PathValue<T> {
        PathValue { value: self.scale * v.value + self.shift, error: self.scale.norm() * v.error }
    }

    /// g at (1 − δ)·aₖ for each prevertex.
    pub fn vertex_images(&self) -> Result<[Complex<T>; 3]> {
        let shrink = T::one() - T::lit(self.config.prevertex_offset);
        let a = self.prevertices();
        Ok([self.g(a[0] * shrink)?, self.g(a[1] * shrink)?, self.g(a[2] * shrink)?])
    }

    /// |g(aₖ) − vertexₖ| for each k.
    pub fn vertex_residuals(&self) -> Result<[T; 3]> {
        let img = self.vertex_images()?;
        let v = self.target_vertices;
        Ok([(img[0] - v[0]).norm(), (img[1] - v[1]).norm(), (img[2] - v[2]).norm()])
    }

    /// The map followed by w ↦ rotation·w + offset.
    pub fn transformed(&self, rotation: Complex<T>, offset: Complex<T>) -> Result<Self> {
        if !(rotation.norm() > T::zero()) {
            return Err(Error::Degenerate("similarity factor must be nonzero".into()));
        }
        Ok(ExteriorMapSpec {
            integrand: self.integrand,
            scale: self.scale * rotation,
            shift: self.shift * rotation + offset,
            target_vertices: self.target_vertices.map(|v| v * rotation + offset),
            config: self.config,
        })
    }
}

/// f_numeric: the integral from the base point to `z` under `cfg`.
pub fn f_numeric<T: Real>(z: Complex<T>, spec: &ExteriorMapSpec<T>, cfg: &MapConfig) -> Result<Complex<T>> {
    Ok(integrate_to(spec.integrand(), z, cfg)?.value)
}

/// Map onto the exterior of the isosceles triangle with apex θ at 0 and
/// base vertices e^{±iθ/2}.
///
/// g = −2 sin(θ/2) / (Im f(a₂) − Im f(a₃)) · f, base point a₁ = −1.
pub fn make_isosceles_map<T: Real>(theta: ApexAngle<T>, cfg: &MapConfig) -> Result<ExteriorMapSpec<T>> {
    let a = isosceles_prevertices(theta);
    let mu = isosceles_exponents(theta);
    let zero = Complex::new(T::zero(), T::zero());
    let one = Complex::new(T::one(), T::zero());
    let raw = ExteriorMapSpec::new(a, mu, 0, one, zero, [zero; 3], *cfg)?;
    let shrink = T::one() - T::lit(cfg.prevertex_offset);
    let f2 = raw.f(a[1] * shrink)?;
    let f3 = raw.f(a[2] * shrink)?;
    let half = theta.radians() / T::lit(2.0);
    let scale = -T::lit(2.0) * half.sin() / (f2.im - f3.im);
    // Which base vertex a₂ lands on follows from the sign of Im g(a₂).
    let up = Complex::from_polar(T::one(), half);
    let v2 = if (f2 * scale).im >= T::zero() { up } else { up.conj() };
    let spec = ExteriorMapSpec::new(a, mu, 0, Complex::new(scale, T::zero()), zero, [zero, v2, v2.conj()], *cfg)?;
    let tol = T::lit(cfg.vertex_tolerance);
    for (img, want) in [(f2 * scale, v2), (f3 * scale, v2.conj())] {
        let r = (img - want).norm();
        if !(r <= tol) {
            return Err(Error::VertexResidual { residual: r.to_f64_lossy(), tolerance: cfg.vertex_tolerance });
        }
    }
    Ok(spec)
}

/// Map onto the exterior of `tri`, using its vertices when given and the
/// standard placement (0, c, b·e^{iα}) otherwise.
///
/// Prevertices are solved with a₁ = 1 as base point; scale and shift send
/// a₁ and a₂ onto the first two vertices, and the image of a₃ is checked
/// against the third.
pub fn make_general_map<T: Real>(tri: &Triangle<T>, cfg: &MapConfig) -> Result<ExteriorMapSpec<T>> {
    let v = tri.vertices().unwrap_or_else(|| tri.placed_vertices());
    let mu = exponents_from_triangle(tri);
    let one = Complex::new(T::one(), T::zero());
    let zero = Complex::new(T::zero(), T::zero());
    let order = PrevertexOrder::for_targets_counterclockwise(Triangle::from_vertices(v)?.is_counterclockwise());
    let a = solve_prevertices(mu, one, order)?;
    let raw = ExteriorMapSpec::new(a, mu, 0, one, zero, v, *cfg)?;
    let shrink = T::one() - T::lit(cfg.prevertex_offset);
    let f2 = raw.f(a[1] * shrink)?;
    let f3 = raw.f(a[2] * shrink)?;
    let scale = (v[1] - v[0]) / f2;
    let spec = ExteriorMapSpec::new(a, mu, 0, scale, v[0], v, *cfg)?;
    let r = (scale * f3 + v[0] - v[2]).norm();
    if !(r <= T::lit(cfg.vertex_tolerance)) {
        return Err(Error::VertexResidual { residual: r.to_f64_lossy(), tolerance: cfg.vertex_tolerance });
    }
    Ok(spec)
}

/// The right isosceles triangle with unit legs on the positive axes: the
/// θ = π/2 map rotated by π/4.
pub fn make_unit_legs_right_map<T: Real>(cfg: &MapConfig) -> Result<ExteriorMapSpec<T>> {
    let iso = make_isosceles_map(ApexAngle::new(T::FRAC_PI_2())?, cfg)?;
    iso.transformed(Complex::from_polar(T::one(), T::FRAC_PI_4()), Complex::new(T::zero(), T::zero()))
}
