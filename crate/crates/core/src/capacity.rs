//! Logarithmic capacity (outer radius) of triangles in closed form, the
//! isosceles specialization, its maximizing apex angle, and a brute-force
//! transfinite-diameter estimator.

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
pub use crate::geometry::{triangle_geometry, TriangleGeometry};
use crate::geometry::Triangle;
use crate::optimize::{central_derivative, golden_section, newton_polish};
use crate::scalar::Real;
use crate::specfun::gamma_real;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapacityMethod {
    Haegi,
    IsoscelesFormula,
    ScLaurent,
}

impl CapacityMethod {
    pub fn tag(&self) -> &'static str {
        match self {
            CapacityMethod::Haegi => "haegi",
            CapacityMethod::IsoscelesFormula => "isosceles-formula",
            CapacityMethod::ScLaurent => "sc-laurent",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapacityResult<T: Real> {
    pub kappa: T,
    pub method: CapacityMethod,
}

/// q(x) = √(xˣ / (1−x)^{1−x}) / Γ(x) on (0, 1).
pub fn haegi_q<T: Real>(x: T) -> Result<T> {
    if !(x > T::zero() && x < T::one()) {
        return Err(Error::Domain(format!("q(x) requires 0 < x < 1, got {x}")));
    }
    let one = T::one();
    let log_ratio = x * x.ln() - (one - x) * (one - x).ln();
    Ok((log_ratio / T::lit(2.0)).exp() / gamma_real(x)?)
}

/// κ = A / (4π² q(α/π) q(β/π) q(γ/π) R).
pub fn haegi_capacity<T: Real>(tri: &Triangle<T>) -> Result<CapacityResult<T>> {
    let g = triangle_geometry(tri);
    let pi = T::PI();
    let denom = T::lit(4.0) * pi * pi
        * haegi_q(g.alpha / pi)?
        * haegi_q(g.beta / pi)?
        * haegi_q(g.gamma / pi)?
        * g.circumradius;
    let kappa = g.area / denom;
    if !(kappa.is_finite() && kappa > T::zero()) {
        return Err(Error::Degenerate("capacity is not a positive finite number".into()));
    }
    Ok(CapacityResult { kappa, method: CapacityMethod::Haegi })
}

/// Closed form κ(θ) for the isosceles triangle with unit legs and apex θ.
pub fn isosceles_capacity<T: Real>(theta: T) -> Result<CapacityResult<T>> {
    let pi = T::PI();
    if !(theta > T::zero() && theta < pi) {
        return Err(Error::Domain(format!("apex angle {theta} outside (0, π)")));
    }
    let two = T::lit(2.0);
    let sum = pi + theta;
    let kappa = sum.sqrt() / (T::lit(8.0) * pi.powf(T::lit(2.5)))
        * (sum / (T::lit(4.0) * theta)).powf(theta / (two * pi))
        * (theta.sin().powi(2) / (theta / two).sin())
        * gamma_real(theta / pi)?
        * gamma_real((pi - theta) / (two * pi))?.powi(2);
    Ok(CapacityResult { kappa, method: CapacityMethod::IsoscelesFormula })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsoscelesMaximum<T: Real> {
    pub theta: T,
    pub kappa: T,
}

/// Apex angle of the isosceles triangle (unit legs) with the largest
/// capacity: golden-section bracket to 1e-6, then five Newton steps on the
/// centered-difference derivative with step 1e-5.
pub fn maximize_isosceles_capacity<T: Real>() -> Result<IsoscelesMaximum<T>> {
    let neg = |t: T| isosceles_capacity(t).map(|r| -r.kappa).unwrap_or(T::infinity());
    let lo = T::lit(0.05);
    let hi = T::PI() - T::lit(0.05);
    let (a, b) = golden_section(neg, lo, hi, T::lit(1e-6), 10_000)?;
    let h = T::lit(1e-5);
    let theta = newton_polish(neg, (a + b) / T::lit(2.0), h, 5);
    // A maximum needs κ′ > 0 to the left and κ′ < 0 to the right.
    let mut kappa_of = |t: T| -neg(t);
    let off = T::lit(0.01);
    let left = central_derivative(&mut kappa_of, theta - off, h);
    let right = central_derivative(&mut kappa_of, theta + off, h);
    if !(left > T::zero() && right < T::zero()) {
        return Err(Error::NonConvergence { what: "isosceles capacity maximization", estimate: f64::NAN });
    }
    Ok(IsoscelesMaximum { theta, kappa: isosceles_capacity(theta)?.kappa })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremalMode {
    FixedArea,
    FixedPerimeter,
}

/// κ(tri) divided by κ of the equilateral triangle with the same area or
/// the same perimeter.
pub fn extremal_comparison<T: Real>(tri: &Triangle<T>, mode: ExtremalMode) -> Result<T> {
    let side = match mode {
        ExtremalMode::FixedArea => (T::lit(4.0) * tri.area() / T::lit(3.0).sqrt()).sqrt(),
        ExtremalMode::FixedPerimeter => tri.perimeter() / T::lit(3.0),
    };
    let equilateral = Triangle::from_sides(side, side, side)?;
    Ok(haegi_capacity(tri)?.kappa / haegi_capacity(&equilateral)?.kappa)
}

/// Random triangle with angles drawn uniformly from
/// {α, β > m, α + β < π − m} and the side opposite α equal to one.
pub fn sample_triangle<T: Real, R: Rng>(rng: &mut R, margin: T) -> Triangle<T> {
    let pi = T::PI();
    loop {
        let alpha = margin + T::lit(rng.gen::<f64>()) * (pi - T::lit(3.0) * margin);
        let beta = margin + T::lit(rng.gen::<f64>()) * (pi - T::lit(3.0) * margin);
        let gamma = pi - alpha - beta;
        if gamma <= margin {
            continue;
        }
        let scale = T::one() / alpha.sin();
        if let Ok(t) = Triangle::from_sides(alpha.sin() * scale, beta.sin() * scale, gamma.sin() * scale) {
            return t;
        }
    }
}

const FEKETE_SEED: u64 = 0x5eed_ca9a;

/// Best geometric mean of pairwise distances found for `n` points in the
/// closed triangle. A lower bound on the n-th diameter, which decreases to
/// the capacity as n grows.
pub fn transfinite_diameter_estimate<T: Real>(tri: &Triangle<T>, n: usize, restarts: usize) -> Result<T> {
    transfinite_diameter_estimate_seeded(tri, n, restarts, FEKETE_SEED)
}

pub fn transfinite_diameter_estimate_seeded<T: Real>(
    tri: &Triangle<T>,
    n: usize,
    restarts: usize,
    seed: u64,
) -> Result<T> {
    if n < 2 {
        return Err(Error::Domain("need at least two points".into()));
    }
    let v = tri.placed_vertices();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let diameter = tri.sides().iter().fold(T::zero(), |m, &s| m.max(s));
    let mut best = T::neg_infinity();
    for r in 0..restarts.max(1) {
        let mut pts: Vec<Complex<T>> = Vec::with_capacity(n);
        // Early restarts start from the vertices in every cyclic order.
        if r < 3 {
            for k in 0..n.min(3) {
                pts.push(v[(r + k) % 3]);
            }
        }
        while pts.len() < n {
            pts.push(random_point(&v, &mut rng));
        }
        let energy = ascend(&v, &mut pts, diameter);
        best = best.max(energy);
    }
    let pairs = T::from_usize_lossy(n * (n - 1) / 2);
    Ok((best / pairs).exp())
}

fn random_point<T: Real, R: Rng>(v: &[Complex<T>; 3], rng: &mut R) -> Complex<T> {
    let (mut u, mut w) = (rng.gen::<f64>(), rng.gen::<f64>());
    if u + w > 1.0 {
        u = 1.0 - u;
        w = 1.0 - w;
    }
    v[0] + (v[1] - v[0]) * T::lit(u) + (v[2] - v[0]) * T::lit(w)
}

fn log_energy<T: Real>(pts: &[Complex<T>]) -> T {
    let mut e = T::zero();
    for j in 0..pts.len() {
        for k in j + 1..pts.len() {
            e = e + (pts[j] - pts[k]).norm().ln();
        }
    }
    e
}

/// Projected coordinate ascent on Σ ln|zⱼ − zₖ|. Each point moves along its
/// own gradient direction; the step halves after a sweep with no accepted
/// move and the search stops below 1e-9.
fn ascend<T: Real>(v: &[Complex<T>; 3], pts: &mut [Complex<T>], diameter: T) -> T {
    let mut step = diameter / T::lit(4.0);
    let stop = T::lit(1e-9) * diameter;
    let n = pts.len();
    let mut sweeps = 0usize;
    while step > stop && sweeps < 200_000 {
        sweeps += 1;
        let mut moved = false;
        for j in 0..n {
            let mut grad = Complex::new(T::zero(), T::zero());
            for k in 0..n {
                if k != j {
                    let d = pts[j] - pts[k];
                    let r2 = d.norm_sqr();
                    if r2 > T::zero() {
                        grad = grad + d / r2;
                    }
                }
            }
            let g = grad.norm();
            if g == T::zero() || !g.is_finite() {
                continue;
            }
            let proposal = project_to_triangle(v, pts[j] + grad * (step / g));
            let mut delta = T::zero();
            for k in 0..n {
                if k != j {
                    delta = delta + (proposal - pts[k]).norm().ln() - (pts[j] - pts[k]).norm().ln();
                }
            }
            if delta > T::zero() && delta.is_finite() {
                pts[j] = proposal;
                moved = true;
            }
        }
        if !moved {
            step = step / T::lit(2.0);
        }
    }
    log_energy(pts)
}

fn project_to_triangle<T: Real>(v: &[Complex<T>; 3], p: Complex<T>) -> Complex<T> {
    let orient = {
        let e1 = v[1] - v[0];
        let e2 = v[2] - v[0];
        (e1.re * e2.im - e1.im * e2.re).signum()
    };
    let inside = (0..3).all(|k| {
        let (a, b) = (v[k], v[(k + 1) % 3]);
        let e = b - a;
        (e.re * (p.im - a.im) - e.im * (p.re - a.re)) * orient >= T::zero()
    });
    if inside {
        return p;
    }
    (0..3)
        .map(|k| {
            let (a, b) = (v[k], v[(k + 1) % 3]);
            let e = b - a;
            let t = (((p - a) * e.conj()).re / e.norm_sqr()).max(T::zero()).min(T::one());
            a + e * t
        })
        .fold(None, |best: Option<Complex<T>>, q| match best {
            Some(b) if (b - p).norm() <= (q - p).norm() => Some(b),
            _ => Some(q),
        })
        .expect("three edges")
}
