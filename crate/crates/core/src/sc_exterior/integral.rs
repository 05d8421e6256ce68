//! The integral f(z) = ∫ Π(ζ − aₖ)^{μₖ} / ζ² dζ by chained contour
//! quadrature with continuous branch tracking.

use num_complex::Complex;

use super::path::{build_path, BranchTracker, PathConfig, Segment};
use crate::error::{Error, Result};
use crate::quad::{tanh_sinh, QuadConfig};
use crate::scalar::Real;

/// Numerical settings shared by every map evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MapConfig {
    pub quad: QuadConfig,
    pub path: PathConfig,
    /// Vertex images are taken at (1 − offset)·aₖ.
    pub prevertex_offset: f64,
    /// Allowed |g(aₖ) − vertexₖ| for constructed maps.
    pub vertex_tolerance: f64,
    /// Bisection depth limit when a piece turns some factor by π/2 or more.
    pub max_splits: usize,
}

impl Default for MapConfig {
    fn default() -> Self {
        MapConfig {
            quad: QuadConfig { abs_tol: 1e-12, rel_tol: 1e-14, max_levels: 10 },
            path: PathConfig::default(),
            prevertex_offset: 1e-6,
            vertex_tolerance: 1e-6,
            max_splits: 40,
        }
    }
}

impl MapConfig {
    pub fn validate(&self) -> Result<()> {
        let q = &self.quad;
        let ok = q.abs_tol > 0.0
            && q.rel_tol >= 0.0
            && self.prevertex_offset > 0.0
            && self.prevertex_offset < 0.5
            && self.vertex_tolerance > 0.0
            && self.path.min_clearance > 0.0
            && self.path.arc_radius_floor >= self.path.min_clearance
            && self.path.arc_radius_cap >= self.path.arc_radius_floor
            && self.path.arc_radius_cap < 1.0;
        if ok {
            Ok(())
        } else {
            Err(Error::Config(format!("inconsistent map configuration {self:?}")))
        }
    }
}

/// The integrand data: prevertices, exponents and which prevertex is the
/// base point of integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScIntegrand<T: Real> {
    pub prevertices: [Complex<T>; 3],
    pub exponents: [T; 3],
    pub base: usize,
}

impl<T: Real> ScIntegrand<T> {
    pub fn basepoint(&self) -> Complex<T> {
        self.prevertices[self.base]
    }

    /// Integrand on `seg` at parameter `s`, with the branch continued from
    /// the tracker's anchor.
    fn on_segment(&self, tracker: &BranchTracker<T>, seg: &Segment<T>, s: T, sc: T) -> Complex<T> {
        let zeta = seg.point(s, sc);
        let mut log = Complex::new(T::zero(), T::zero());
        for k in 0..3 {
            let d = seg.offset_from(self.prevertices[k], s, sc);
            log = log + Complex::new(d.norm().ln(), tracker.arg(k, d)) * self.exponents[k];
        }
        log.exp() / (zeta * zeta)
    }

    /// Integrand at ζ using the principal branch of the continuation from
    /// the base point. Valid for |ζ| < 1, where every Arg(1 − ζ/aₖ) stays
    /// in (−π/2, π/2).
    pub fn eval(&self, zeta: Complex<T>) -> Complex<T> {
        let one = Complex::new(T::one(), T::zero());
        let z0 = self.basepoint();
        let mut log = Complex::new(T::zero(), T::zero());
        for k in 0..3 {
            let a = self.prevertices[k];
            // arg(ζ − aₖ) = arg(−aₖ) + Arg(1 − ζ/aₖ), anchored at the base.
            let reference = if k == self.base { (-a).arg() } else { (z0 - a).arg() - (one - z0 / a).arg() };
            let d = zeta - a;
            log = log + Complex::new(d.norm().ln(), reference + (one - zeta / a).arg()) * self.exponents[k];
        }
        log.exp() / (zeta * zeta)
    }
}

/// Result of a contour evaluation with the summed quadrature error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathValue<T: Real> {
    pub value: Complex<T>,
    pub error: T,
}

/// Carries the running integral and branch state along consecutive
/// segments starting at the base point.
#[derive(Debug, Clone)]
pub struct PathWalker<'a, T: Real> {
    integrand: &'a ScIntegrand<T>,
    cfg: &'a MapConfig,
    tracker: Option<BranchTracker<T>>,
    position: Complex<T>,
    value: Complex<T>,
    error: T,
}

impl<'a, T: Real> PathWalker<'a, T> {
    pub fn new(integrand: &'a ScIntegrand<T>, cfg: &'a MapConfig) -> Self {
        PathWalker {
            integrand,
            cfg,
            tracker: None,
            position: integrand.basepoint(),
            value: Complex::new(T::zero(), T::zero()),
            error: T::zero(),
        }
    }

    pub fn position(&self) -> Complex<T> {
        self.position
    }

    pub fn current(&self) -> PathValue<T> {
        PathValue { value: self.value, error: self.error }
    }

    /// Integrates along `seg`, which must start at the current position.
    pub fn traverse(&mut self, seg: Segment<T>) -> Result<()> {
        let gap = (seg.start() - self.position).norm();
        if gap > T::lit(1e-12) {
            return Err(Error::Domain(format!("segment starts {gap} away from the walker")));
        }
        let clearance = T::lit(self.cfg.path.min_clearance);
        if self.tracker.is_none() {
            let departure = seg.velocity(T::zero(), T::one());
            self.tracker = Some(BranchTracker::new(self.integrand.prevertices, self.position, departure));
        }
        // Work list of parameter intervals, processed left to right.
        let mut stack = vec![(T::zero(), T::one(), 0usize)];
        while let Some((s0, s1, depth)) = stack.pop() {
            let piece = seg.piece(s0, s1);
            let tracker = self.tracker.as_mut().expect("tracker initialised above");
            let mid = piece.point(T::lit(0.5), T::lit(0.5));
            let end = piece.end();
            if mid.norm() < clearance || end.norm() < clearance {
                return Err(Error::Domain(format!("path comes within {clearance} of the pole at 0")));
            }
            let turn = tracker.max_increment(mid).max(tracker.max_increment(end));
            if turn >= T::FRAC_PI_2() || !turn.is_finite() {
                if depth >= self.cfg.max_splits {
                    return Err(Error::BranchCut(format!("argument step {turn} not reducible below π/2")));
                }
                let sm = (s0 + s1) * T::lit(0.5);
                stack.push((sm, s1, depth + 1));
                stack.push((s0, sm, depth + 1));
                continue;
            }
            let t = *tracker;
            let integrand = self.integrand;
            let est = tanh_sinh(
                |s, sc| Ok(integrand.on_segment(&t, &piece, s, sc) * piece.velocity(s, sc)),
                &self.cfg.quad,
            )?;
            self.value = self.value + est.value;
            self.error = self.error + est.error;
            tracker.advance(end)?;
            self.position = end;
        }
        self.position = seg.end();
        Ok(())
    }
}

/// f(z) for the integrand, integrated from its base point along
/// [`build_path`].
pub fn integrate_to<T: Real>(integrand: &ScIntegrand<T>, z: Complex<T>, cfg: &MapConfig) -> Result<PathValue<T>> {
    let path = build_path(z, integrand.basepoint(), &cfg.path)?;
    let mut walker = PathWalker::new(integrand, cfg);
    for seg in path.segments {
        walker.traverse(seg)?;
    }
    Ok(walker.current())
}

/// f at the N trapezoid nodes r·e^{2πij/N}, j = 0..N−1, by one walk: in
/// from the base point, around to angle 0, then node to node.
pub fn circle_values<T: Real>(integrand: &ScIntegrand<T>, r: T, n: usize, cfg: &MapConfig) -> Result<Vec<PathValue<T>>> {
    if !(r > T::lit(cfg.path.min_clearance) && r < T::one()) {
        return Err(Error::Domain(format!("circle radius {r} outside ({}, 1)", cfg.path.min_clearance)));
    }
    if n == 0 {
        return Err(Error::Config("circle needs at least one node".into()));
    }
    let z0 = integrand.basepoint();
    let mut walker = PathWalker::new(integrand, cfg);
    walker.traverse(Segment::Line { from: z0, to: z0 * r })?;
    let phi0 = z0.arg();
    if phi0 != T::zero() {
        walker.traverse(Segment::Arc { radius: r, from_angle: phi0, to_angle: T::zero() })?;
    }
    let step = T::TAU() / T::from_usize_lossy(n);
    let mut out = Vec::with_capacity(n);
    for j in 0..n {
        out.push(walker.current());
        if j + 1 < n {
            let t0 = step * T::from_usize_lossy(j);
            walker.traverse(Segment::Arc { radius: r, from_angle: t0, to_angle: t0 + step })?;
        }
    }
    Ok(out)
}

/// f along consecutive points, joined by straight segments after reaching
/// the first one via [`build_path`].
pub fn chain_values<T: Real>(integrand: &ScIntegrand<T>, points: &[Complex<T>], cfg: &MapConfig) -> Result<Vec<PathValue<T>>> {
    let mut out = Vec::with_capacity(points.len());
    let Some(&first) = points.first() else {
        return Ok(out);
    };
    let mut walker = PathWalker::new(integrand, cfg);
    for seg in build_path(first, integrand.basepoint(), &cfg.path)?.segments {
        walker.traverse(seg)?;
    }
    out.push(walker.current());
    for w in points.windows(2) {
        if w[1] != w[0] {
            walker.traverse(Segment::Line { from: walker.position(), to: w[1] })?;
        }
        out.push(walker.current());
    }
    Ok(out)
}

/// f along a circle of radius r from angle `from` to `to` at `count`
/// equally spaced points (inclusive).
pub fn arc_values<T: Real>(
    integrand: &ScIntegrand<T>,
    r: T,
    from: T,
    to: T,
    count: usize,
    cfg: &MapConfig,
) -> Result<Vec<PathValue<T>>> {
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return Ok(out);
    }
    let start = Complex::from_polar(r, from);
    let mut walker = PathWalker::new(integrand, cfg);
    for seg in build_path(start, integrand.basepoint(), &cfg.path)?.segments {
        walker.traverse(seg)?;
    }
    out.push(walker.current());
    let denom = T::from_usize_lossy(count.saturating_sub(1).max(1));
    for j in 1..count {
        let t0 = from + (to - from) * T::from_usize_lossy(j - 1) / denom;
        let t1 = from + (to - from) * T::from_usize_lossy(j) / denom;
        walker.traverse(Segment::Arc { radius: r, from_angle: t0, to_angle: t1 })?;
        out.push(walker.current());
    }
    Ok(out)
}
