//! Laurent data at the pole from trapezoid sums over a circle.

use num_complex::Complex;

use super::integral::{circle_values, PathValue};
use super::map::ExteriorMapSpec;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// g(z) = c₋₁/z + c₀ + c₁z + … near 0, summarised.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentSummary<T: Real> {
    /// |c₋₁|, the outer radius.
    pub kappa: T,
    /// c₀, the outer conformal center.
    pub center: Complex<T>,
    /// c₁, …, c_m when requested.
    pub higher: Vec<Complex<T>>,
    pub radius_used: T,
    pub node_count: usize,
    /// Change between the last two node counts plus propagated quadrature error.
    pub error: T,
}

/// Doubling schedule for [`circle_moments`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentConfig {
    pub tol: f64,
    pub max_doublings: usize,
    pub higher: usize,
}

impl Default for MomentConfig {
    fn default() -> Self {
        MomentConfig { tol: 1e-10, max_doublings: 8, higher: 0 }
    }
}

fn moments<T: Real>(values: &[PathValue<T>], r: T, higher: usize) -> (Complex<T>, Complex<T>, Vec<Complex<T>>, T) {
    let n = values.len();
    let nn = T::from_usize_lossy(n);
    let mut c_minus = Complex::new(T::zero(), T::zero());
    let mut c0 = c_minus;
    let mut hi = vec![c_minus; higher];
    let mut err = T::zero();
    for (j, v) in values.iter().enumerate() {
        let t = T::TAU() * T::from_usize_lossy(j) / nn;
        let e = Complex::from_polar(T::one(), t);
        c0 = c0 + v.value;
        c_minus = c_minus + v.value * e * r;
        let mut w = e.conj() / r;
        for h in hi.iter_mut() {
            *h = *h + v.value * w;
            w = w * e.conj() / r;
        }
        err = err.max(v.error);
    }
    (c_minus / nn, c0 / nn, hi.into_iter().map(|h| h / nn).collect(), err)
}

/// Trapezoid moments of a function sampled on |z| = r at N nodes, with N
/// doubled until κ and the center change by less than `cfg.tol`.
///
/// `sample(N)` must return the values at r·e^{2πij/N}, j = 0..N−1.
pub fn circle_moments<T, F>(mut sample: F, r: T, n0: usize, cfg: &MomentConfig) -> Result<LaurentSummary<T>>
where
    T: Real,
    F: FnMut(usize) -> Result<Vec<PathValue<T>>>,
{
    if !(r > T::lit(0.05) && r < T::one()) {
        return Err(Error::Domain(format!("radius {r} outside (0.05, 1)")));
    }
    if n0 < 64 || !n0.is_power_of_two() {
        return Err(Error::Config(format!("node count {n0} must be a power of two ≥ 64")));
    }
    let mut n = n0;
    let vals = sample(n)?;
    let (mut cm, mut c0, _, _) = moments(&vals, r, cfg.higher);
    let tol = T::lit(cfg.tol);
    let mut change = T::infinity();
    for _ in 0..cfg.max_doublings {
        n *= 2;
        let vals = sample(n)?;
        let (cm2, c02, hi2, qerr2) = moments(&vals, r, cfg.higher);
        change = (cm2.norm() - cm.norm()).abs().max((c02 - c0).norm());
        (cm, c0) = (cm2, c02);
        if change <= tol {
            let kappa = cm.norm();
            if !(kappa > T::zero()) {
                return Err(Error::Degenerate("vanishing leading coefficient".into()));
            }
            return Ok(LaurentSummary { kappa, center: c0, higher: hi2, radius_used: r, node_count: n, error: change + qerr2 });
        }
    }
    Err(Error::NonConvergence { what: "circle moments", estimate: change.to_f64_lossy() })
}

/// κ and outer conformal center of an SC map from N-node trapezoid sums on
/// |z| = r, doubling N until successive values agree within 1e-10.
pub fn laurent_summary<T: Real>(spec: &ExteriorMapSpec<T>, r: T, n: usize) -> Result<LaurentSummary<T>> {
    laurent_summary_with(spec, r, n, &MomentConfig::default())
}

pub fn laurent_summary_with<T: Real>(
    spec: &ExteriorMapSpec<T>,
    r: T,
    n: usize,
    cfg: &MomentConfig,
) -> Result<LaurentSummary<T>> {
    let sample = |m: usize| -> Result<Vec<PathValue<T>>> {
        Ok(circle_values(spec.integrand(), r, m, spec.config())?.into_iter().map(|v| spec.apply(v)).collect())
    };
    circle_moments(sample, r, n, cfg)
}
