//! Triangles: side lengths, optional vertex placement, angles, area and
//! circumradius.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// A triangle given by side lengths `a`, `b`, `c`, optionally with vertices.
///
/// Side `a` is opposite vertex 1, `b` opposite vertex 2, `c` opposite
/// vertex 3, so the interior angle at vertex k is the one opposite side k.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle<T: Real> {
    sides: [T; 3],
    vertices: Option<[Complex<T>; 3]>,
}

impl<T: Real> Triangle<T> {
    pub fn from_sides(a: T, b: T, c: T) -> Result<Self> {
        let sides = [a, b, c];
        if sides.iter().any(|s| !s.is_finite() || *s <= T::zero()) {
            return Err(Error::Degenerate(format!("side lengths must be positive and finite, got ({a}, {b}, {c})")));
        }
        if !(a < b + c && b < a + c && c < a + b) {
            return Err(Error::Degenerate(format!("sides ({a}, {b}, {c}) violate the strict triangle inequality")));
        }
        Ok(Triangle { sides, vertices: None })
    }

    pub fn from_vertices(v: [Complex<T>; 3]) -> Result<Self> {
        if v.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Degenerate("non-finite vertex".into()));
        }
        let a = (v[1] - v[2]).norm();
        let b = (v[0] - v[2]).norm();
        let c = (v[0] - v[1]).norm();
        let mut tri = Self::from_sides(a, b, c)?;
        let twice_area = signed_twice_area(&v).abs();
        let scale = a.max(b).max(c);
        if twice_area <= T::epsilon() * T::lit(16.0) * scale * scale {
            return Err(Error::Degenerate("collinear vertices".into()));
        }
        tri.vertices = Some(v);
        Ok(tri)
    }

    /// Isosceles triangle with two unit sides meeting at the origin with
    /// apex angle `theta`, opening along the positive real axis.
    pub fn isosceles(theta: T) -> Result<Self> {
        if !(theta > T::zero() && theta < T::PI()) {
            return Err(Error::Domain(format!("apex angle {theta} outside (0, π)")));
        }
        let half = theta / T::lit(2.0);
        let top = Complex::from_polar(T::one(), half);
        Self::from_vertices([Complex::new(T::zero(), T::zero()), top.conj(), top])
    }

    pub fn sides(&self) -> [T; 3] {
        self.sides
    }

    pub fn vertices(&self) -> Option<[Complex<T>; 3]> {
        self.vertices
    }

    /// The given vertices, or a counterclockwise placement with vertex 1 at
    /// the origin and vertex 2 on the positive real axis.
    pub fn placed_vertices(&self) -> [Complex<T>; 3] {
        if let Some(v) = self.vertices {
            return v;
        }
        let [_, b, c] = self.sides;
        let alpha = self.angles()[0];
        [Complex::new(T::zero(), T::zero()), Complex::new(c, T::zero()), Complex::from_polar(b, alpha)]
    }

    /// Interior angles at vertices 1, 2, 3 by the law of cosines.
    pub fn angles(&self) -> [T; 3] {
        let [a, b, c] = self.sides;
        let two = T::lit(2.0);
        let acos = |x: T| x.max(-T::one()).min(T::one()).acos();
        [
            acos((b * b + c * c - a * a) / (two * b * c)),
            acos((a * a + c * c - b * b) / (two * a * c)),
            acos((a * a + b * b - c * c) / (two * a * b)),
        ]
    }

    /// Heron's formula.
    pub fn area(&self) -> T {
        let [a, b, c] = self.sides;
        let q = T::lit(0.0625);
        (q * (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c)).sqrt()
    }

    pub fn circumradius(&self) -> T {
        let [a, b, c] = self.sides;
        a * b * c / ((a + b + c) * (b + c - a) * (c + a - b) * (a + b - c)).sqrt()
    }

    pub fn perimeter(&self) -> T {
        self.sides.iter().fold(T::zero(), |acc, &s| acc + s)
    }

    pub fn scaled(&self, s: T) -> Result<Self> {
        let [a, b, c] = self.sides;
        let mut t = Self::from_sides(s * a, s * b, s * c)?;
        t.vertices = self.vertices.map(|v| v.map(|z| z * s));
        Ok(t)
    }

    /// True when the vertices (given or placed) run counterclockwise.
    pub fn is_counterclockwise(&self) -> bool {
        signed_twice_area(&self.placed_vertices()) > T::zero()
    }

    /// Closed-triangle membership with a small absolute slack.
    pub fn contains(&self, p: Complex<T>, slack: T) -> bool {
        let v = self.placed_vertices();
        let orient = signed_twice_area(&v).signum();
        (0..3).all(|k| {
            let (p0, p1) = (v[k], v[(k + 1) % 3]);
            let edge = p1 - p0;
            let cross = edge.re * (p.im - p0.im) - edge.im * (p.re - p0.re);
            cross * orient >= -slack * edge.norm()
        })
    }
}

fn signed_twice_area<T: Real>(v: &[Complex<T>; 3]) -> T {
    let e1 = v[1] - v[0];
    let e2 = v[2] - v[0];
    e1.re * e2.im - e1.im * e2.re
}

/// An apex angle θ of an isosceles triangle with two unit sides.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApexAngle<T: Real>(T);

/// Default distance kept from 0 and π by the conformal-map routines.
pub const APEX_GUARD: f64 = 0.05;

impl<T: Real> ApexAngle<T> {
    /// θ restricted to (0.05, π − 0.05).
    pub fn new(theta: T) -> Result<Self> {
        let g = T::lit(APEX_GUARD);
        if !(theta > g && theta < T::PI() - g) {
            return Err(Error::Domain(format!(
                "apex angle {theta} outside the guarded range ({APEX_GUARD}, π − {APEX_GUARD})"
            )));
        }
        Ok(ApexAngle(theta))
    }

    /// θ anywhere in (0, π); accuracy near the ends is not guaranteed.
    pub fn new_unguarded(theta: T) -> Result<Self> {
        if !(theta > T::zero() && theta < T::PI()) {
            return Err(Error::Domain(format!("apex angle {theta} outside (0, π)")));
        }
        Ok(ApexAngle(theta))
    }

    pub fn radians(&self) -> T {
        self.0
    }
}

/// Angles, area and circumradius of a triangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleGeometry<T: Real> {
    pub alpha: T,
    pub beta: T,
    pub gamma: T,
    pub area: T,
    pub circumradius: T,
}

pub fn triangle_geometry<T: Real>(tri: &Triangle<T>) -> TriangleGeometry<T> {
    let [alpha, beta, gamma] = tri.angles();
    TriangleGeometry { alpha, beta, gamma, area: tri.area(), circumradius: tri.circumradius() }
}
