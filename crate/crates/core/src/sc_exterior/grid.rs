//! Images of concentric circles and radial rays under an exterior map.

use num_complex::Complex;

use super::integral::{arc_values, chain_values};
use super::map::ExteriorMapSpec;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Smallest circle radius used by [`map_grid`].
pub const MIN_GRID_RADIUS: f64 = 0.08;

/// Kind of a grid curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CurveKind {
    Circle,
    Ray,
}

impl CurveKind {
    pub fn tag(&self) -> &'static str {
        match self {
            CurveKind::Circle => "circle",
            CurveKind::Ray => "ray",
        }
    }
}

/// One image curve: the disk parameter (angle for circles, radius for
/// rays) and the image point at each sample.
#[derive(Debug, Clone, PartialEq)]
pub struct GridCurve<T: Real> {
    pub kind: CurveKind,
    pub index: usize,
    /// Radius of a circle or angle of a ray.
    pub level: T,
    pub params: Vec<T>,
    pub points: Vec<Complex<T>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MapGrid<T: Real> {
    pub circles: Vec<GridCurve<T>>,
    pub rays: Vec<GridCurve<T>>,
}

impl<T: Real> MapGrid<T> {
    pub fn curves(&self) -> impl Iterator<Item = &GridCurve<T>> {
        self.circles.iter().chain(self.rays.iter())
    }
}

/// Radii j/(circles+1) for j = 1..=circles, floored at 0.08.
pub fn grid_radii<T: Real>(circles: usize) -> Vec<T> {
    let m = T::from_usize_lossy(circles + 1);
    (1..=circles).map(|j| (T::from_usize_lossy(j) / m).max(T::lit(MIN_GRID_RADIUS))).collect()
}

/// Images of `circles` concentric circles (each with `samples` points,
/// t = 2πj/samples) and of `rays` rays at angles 2πk/rays running from the
/// innermost to the outermost circle radius with `samples` points.
pub fn map_grid<T: Real>(spec: &ExteriorMapSpec<T>, circles: usize, rays: usize, samples: usize) -> Result<MapGrid<T>> {
    if circles == 0 {
        return Err(Error::Config("at least one circle is required".into()));
    }
    if samples < 64 {
        return Err(Error::Config(format!("samples = {samples} must be at least 64")));
    }
    let radii = grid_radii::<T>(circles);
    let cfg = spec.config();
    let ns = T::from_usize_lossy(samples);
    let mut out_c = Vec::with_capacity(circles);
    for (index, &r) in radii.iter().enumerate() {
        let params: Vec<T> = (0..samples).map(|j| T::TAU() * T::from_usize_lossy(j) / ns).collect();
        let last = params[samples - 1];
        let vals = arc_values(spec.integrand(), r, T::zero(), last, samples, cfg)?;
        let points = vals.into_iter().map(|v| spec.apply(v).value).collect();
        out_c.push(GridCurve { kind: CurveKind::Circle, index, level: r, params, points });
    }
    let (r_lo, r_hi) = (radii[0], radii[radii.len() - 1]);
    let mut out_r = Vec::with_capacity(rays);
    let denom = T::from_usize_lossy(samples - 1);
    for index in 0..rays {
        let angle = T::TAU() * T::from_usize_lossy(index) / T::from_usize_lossy(rays);
        let params: Vec<T> = (0..samples).map(|j| r_lo + (r_hi - r_lo) * T::from_usize_lossy(j) / denom).collect();
        let e = Complex::from_polar(T::one(), angle);
        let pts: Vec<Complex<T>> = params.iter().map(|&r| e * r).collect();
        let vals = chain_values(spec.integrand(), &pts, cfg)?;
        let points = vals.into_iter().map(|v| spec.apply(v).value).collect();
        out_r.push(GridCurve { kind: CurveKind::Ray, index, level: angle, params, points });
    }
    Ok(MapGrid { circles: out_c, rays: out_r })
}
