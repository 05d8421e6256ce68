//! Integration paths inside the unit disk and continuous branch tracking
//! of the factors (ζ − aₖ)^{μₖ} along them.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// A straight segment or an arc of a circle centred at the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Segment<T: Real> {
    Line { from: Complex<T>, to: Complex<T> },
    Arc { radius: T, from_angle: T, to_angle: T },
}

impl<T: Real> Segment<T> {
    pub fn start(&self) -> Complex<T> {
        match *self {
            Segment::Line { from, .. } => from,
            Segment::Arc { radius, from_angle, .. } => Complex::from_polar(radius, from_angle),
        }
    }

    pub fn end(&self) -> Complex<T> {
        match *self {
            Segment::Line { to, .. } => to,
            Segment::Arc { radius, to_angle, .. } => Complex::from_polar(radius, to_angle),
        }
    }

    /// Point at parameter `s` (with `sc = 1 − s`).
    pub fn point(&self, s: T, sc: T) -> Complex<T> {
        match *self {
            Segment::Line { from, to } => {
                if s <= sc {
                    from + (to - from) * s
                } else {
                    to - (to - from) * sc
                }
            }
            Segment::Arc { radius, from_angle, to_angle } => {
                Complex::from_polar(radius, from_angle + (to_angle - from_angle) * s)
            }
        }
    }

    /// ζ − p at parameter `s`, computed from the nearer endpoint so that it
    /// keeps relative accuracy when that endpoint is `p` itself.
    pub fn offset_from(&self, p: Complex<T>, s: T, sc: T) -> Complex<T> {
        match *self {
            Segment::Line { from, to } => {
                if s <= sc {
                    (from - p) + (to - from) * s
                } else {
                    (to - p) - (to - from) * sc
                }
            }
            Segment::Arc { .. } => self.point(s, sc) - p,
        }
    }

    /// dζ/ds.
    pub fn velocity(&self, s: T, sc: T) -> Complex<T> {
        match *self {
            Segment::Line { from, to } => to - from,
            Segment::Arc { to_angle, from_angle, .. } => {
                self.point(s, sc) * Complex::new(T::zero(), to_angle - from_angle)
            }
        }
    }

    /// The piece between parameters `s0 < s1`.
    pub fn piece(&self, s0: T, s1: T) -> Segment<T> {
        let one = T::one();
        match *self {
            Segment::Line { from, to } => Segment::Line {
                from: if s0 == T::zero() { from } else { self.point(s0, one - s0) },
                to: if s1 == one { to } else { self.point(s1, one - s1) },
            },
            Segment::Arc { radius, from_angle, to_angle } => Segment::Arc {
                radius,
                from_angle: from_angle + (to_angle - from_angle) * s0,
                to_angle: from_angle + (to_angle - from_angle) * s1,
            },
        }
    }

    fn min_modulus(&self) -> T {
        match *self {
            Segment::Line { from, to } => {
                let d = to - from;
                let len2 = d.norm_sqr();
                if len2 == T::zero() {
                    return from.norm();
                }
                let t = (-(from * d.conj()).re / len2).max(T::zero()).min(T::one());
                (from + d * t).norm()
            }
            Segment::Arc { radius, .. } => radius,
        }
    }
}

/// Where [`build_path`] places its arc and how close paths may get to 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathConfig {
    pub min_clearance: f64,
    pub arc_radius_floor: f64,
    pub arc_radius_cap: f64,
}

impl Default for PathConfig {
    fn default() -> Self {
        PathConfig { min_clearance: 0.05, arc_radius_floor: 0.5, arc_radius_cap: 0.9 }
    }
}

/// Ordered segments joining `start` to `end`.
#[derive(Debug, Clone, PartialEq)]
pub struct PathSpec<T: Real> {
    pub segments: Vec<Segment<T>>,
    pub start: Complex<T>,
    pub end: Complex<T>,
}

impl<T: Real> PathSpec<T> {
    pub fn min_modulus(&self) -> T {
        self.segments.iter().map(Segment::min_modulus).fold(T::infinity(), T::min)
    }
}

/// Radial segment from `z0` inward to radius r* = clamp(|z|, 0.5, 0.9), arc
/// at r* to arg z, radial segment to `z`.
pub fn build_path<T: Real>(z: Complex<T>, z0: Complex<T>, cfg: &PathConfig) -> Result<PathSpec<T>> {
    let rz = z.norm();
    if !(rz.is_finite() && rz <= T::one() + T::lit(1e-14)) {
        return Err(Error::Domain(format!("path endpoint {z} outside the closed unit disk")));
    }
    if rz < T::lit(cfg.min_clearance) {
        return Err(Error::Domain(format!(
            "path endpoint {z} closer than {} to the pole at 0",
            cfg.min_clearance
        )));
    }
    if (z0.norm() - T::one()).abs() > T::lit(1e-12) {
        return Err(Error::Domain(format!("base point {z0} is not on the unit circle")));
    }
    let mut segments = Vec::new();
    if z != z0 {
        let r_star = rz.max(T::lit(cfg.arc_radius_floor)).min(T::lit(cfg.arc_radius_cap));
        let phi0 = z0.arg();
        let mut dphi = z.arg() - phi0;
        if dphi > T::PI() {
            dphi = dphi - T::TAU();
        } else if dphi <= -T::PI() {
            dphi = dphi + T::TAU();
        }
        let inner = z0 * r_star;
        segments.push(Segment::Line { from: z0, to: inner });
        if dphi != T::zero() {
            segments.push(Segment::Arc { radius: r_star, from_angle: phi0, to_angle: phi0 + dphi });
        }
        let corner = segments.last().map(Segment::end).unwrap_or(inner);
        if corner != z {
            segments.push(Segment::Line { from: corner, to: z });
        }
    }
    Ok(PathSpec { segments, start: z0, end: z })
}

/// Continuous arguments of ζ − aₖ for the three prevertices, carried along
/// a path from the base point.
///
/// Each argument is stored together with the vector ζ − aₖ at which it was
/// last fixed; the argument at a nearby point is that value plus the
/// principal argument of the ratio, valid while the change stays below π/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchTracker<T: Real> {
    prevertices: [Complex<T>; 3],
    args: [T; 3],
    anchors: [Complex<T>; 3],
}

impl<T: Real> BranchTracker<T> {
    /// References at the base point are principal arguments. A factor that
    /// vanishes there takes the argument of `departure`, the direction in
    /// which the path leaves the base point.
    pub fn new(prevertices: [Complex<T>; 3], base: Complex<T>, departure: Complex<T>) -> Self {
        let mut anchors = [Complex::new(T::zero(), T::zero()); 3];
        let mut args = [T::zero(); 3];
        for k in 0..3 {
            let v = base - prevertices[k];
            anchors[k] = if v.norm() > T::zero() { v } else { departure };
            args[k] = anchors[k].arg();
        }
        BranchTracker { prevertices, args, anchors }
    }

    pub fn prevertices(&self) -> &[Complex<T>; 3] {
        &self.prevertices
    }

    /// Argument change of factor k when moving from the anchor to a point
    /// whose offset from aₖ is `offset`.
    pub fn increment(&self, k: usize, offset: Complex<T>) -> T {
        (offset / self.anchors[k]).arg()
    }

    /// Continued argument of factor k at a point with offset `offset`.
    pub fn arg(&self, k: usize, offset: Complex<T>) -> T {
        self.args[k] + self.increment(k, offset)
    }

    pub fn args(&self) -> [T; 3] {
        self.args
    }

    /// Largest |Δ arg| over the factors between the anchor and `p`.
    pub fn max_increment(&self, p: Complex<T>) -> T {
        (0..3).map(|k| self.increment(k, p - self.prevertices[k]).abs()).fold(T::zero(), T::max)
    }

    /// Moves the anchor to `p`. `p` must not be a prevertex.
    pub fn advance(&mut self, p: Complex<T>) -> Result<()> {
        for k in 0..3 {
            let v = p - self.prevertices[k];
            if v.norm() == T::zero() {
                return Err(Error::BranchCut(format!("path runs through prevertex {}", self.prevertices[k])));
            }
            let inc = self.increment(k, v);
            if inc.abs() >= T::FRAC_PI_2() {
                return Err(Error::BranchCut(format!("argument step {inc} of factor {k} exceeds π/2")));
            }
            self.args[k] = self.args[k] + inc;
            self.anchors[k] = v;
        }
        Ok(())
    }
}
