//! Strictly convex counterclockwise polygons and the hull that produces them.

use super::{cross, ensure_finite, segment_distance, Complex};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Relative collinearity tolerance on cross products.
const COLLINEAR_TOL: f64 = 1e-12;

/// A strictly convex polygon with vertices in counterclockwise order.
///
/// Degenerate instances are allowed and flagged rather than rejected: a
/// single vertex is a point, two vertices are a segment. The closed polygon
/// never contains the origin (certified regions live in C*).
/// Serializes as a bare `[[re, im], ...]` vertex list.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<[f64; 2]>", into = "Vec<[f64; 2]>")]
pub struct ConvexPolygon {
    vertices: Vec<Complex>,
}

impl TryFrom<Vec<[f64; 2]>> for ConvexPolygon {
    type Error = Error;

    fn try_from(pairs: Vec<[f64; 2]>) -> Result<Self> {
        ConvexPolygon::new(pairs.into_iter().map(crate::wire::from_pair).collect())
    }
}

impl From<ConvexPolygon> for Vec<[f64; 2]> {
    fn from(p: ConvexPolygon) -> Self {
        p.vertices.iter().map(|&v| crate::wire::to_pair(v)).collect()
    }
}

impl ConvexPolygon {
    /// Validates and wraps a counterclockwise vertex list.
    pub fn new(vertices: Vec<Complex>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyInput);
        }
        for &v in &vertices {
            ensure_finite(v)?;
        }
        match vertices.len() {
            1 => {
                if vertices[0] == Complex::new(0.0, 0.0) {
                    return Err(Error::ContainsOrigin);
                }
            }
            2 => {
                if vertices[0] == vertices[1] {
                    return Err(Error::InvalidPolygon("segment endpoints coincide"));
                }
                if segment_distance(Complex::new(0.0, 0.0), vertices[0], vertices[1]) == 0.0 {
                    return Err(Error::ContainsOrigin);
                }
            }
            n => {
                let mut turn_sum = 0.0;
                for i in 0..n {
                    let a = vertices[i];
                    let b = vertices[(i + 1) % n];
                    let c = vertices[(i + 2) % n];
                    let x = cross(a, b, c);
                    let scale = (b - a).norm() * (c - b).norm();
                    if x <= COLLINEAR_TOL * scale {
                        return Err(Error::InvalidPolygon(
                            "vertices must be strictly convex and counterclockwise",
                        ));
                    }
                    // left turns lie in (0, pi); fold the raw arg difference
                    let raw = (c - b).arg() - (b - a).arg();
                    turn_sum += raw.rem_euclid(std::f64::consts::TAU);
                }
                // All-left turns also hold for star polygons; a simple convex
                // boundary turns by exactly 2*pi.
                if (turn_sum - std::f64::consts::TAU).abs() > 1e-6 {
                    return Err(Error::InvalidPolygon("boundary winds more than once"));
                }
                let poly = ConvexPolygon { vertices };
                if poly.contains(Complex::new(0.0, 0.0), 0.0) {
                    return Err(Error::ContainsOrigin);
                }
                return Ok(poly);
            }
        }
        Ok(ConvexPolygon { vertices })
    }

    pub fn vertices(&self) -> &[Complex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction requires at least one vertex
    }

    /// True for point/segment degenerations (fewer than 3 vertices).
    pub fn is_degenerate(&self) -> bool {
        self.vertices.len() < 3
    }

    /// Number of pushable sides: n for a proper polygon, 2 for a segment
    /// (one per half-plane), 0 for a single point.
    pub fn side_count(&self) -> usize {
        match self.vertices.len() {
            1 => 0,
            2 => 2,
            n => n,
        }
    }

    /// Directed side `i` as `(start, end)`; for a segment, side 1 is the
    /// reversed direction so both outward normals are reachable.
    pub fn side(&self, i: usize) -> (Complex, Complex) {
        let n = self.vertices.len();
        (self.vertices[i % n], self.vertices[(i + 1) % n])
    }

    /// Unit outward normal of side `i` (the boundary runs counterclockwise,
    /// so outward is the right-hand rotation of the side direction).
    pub fn outward_normal(&self, i: usize) -> Complex {
        let (a, b) = self.side(i);
        let dir = (b - a) / (b - a).norm();
        dir * Complex::new(0.0, -1.0)
    }

    /// Signed-area containment test: `p` is inside or on the polygon up to a
    /// perpendicular slack of `tol * (1 + |p - vertex|)` per edge.
    pub fn contains(&self, p: Complex, tol: f64) -> bool {
        match self.vertices.len() {
            1 => (p - self.vertices[0]).norm() <= tol,
            2 => segment_distance(p, self.vertices[0], self.vertices[1]) <= tol,
            n => (0..n).all(|i| {
                let (a, b) = (self.vertices[i], self.vertices[(i + 1) % n]);
                let e = (b - a).norm();
                cross(a, b, p) >= -tol * e * (1.0 + (p - a).norm())
            }),
        }
    }

    /// Shoelace area; zero for degenerate polygons.
    pub fn area(&self) -> f64 {
        let n = self.vertices.len();
        if n < 3 {
            return 0.0;
        }
        let mut s = 0.0;
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            s += a.re * b.im - b.re * a.im;
        }
        s / 2.0
    }

    /// Largest pairwise vertex distance.
    pub fn diameter(&self) -> f64 {
        let mut d: f64 = 0.0;
        for (i, &a) in self.vertices.iter().enumerate() {
            for &b in &self.vertices[i + 1..] {
                d = d.max((a - b).norm());
            }
        }
        d
    }
}

/// Convex hull of a nonempty point set, as a counterclockwise polygon.
///
/// Duplicates and interior points are dropped. All-identical input yields a
/// single-vertex polygon; a collinear set degrades to a two-vertex segment.
/// The first vertex of the result is the lexicographically smallest point.
pub fn convex_hull(points: &[Complex]) -> Result<ConvexPolygon> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    for &p in points {
        ensure_finite(p)?;
    }
    let mut pts: Vec<Complex> = points.to_vec();
    pts.sort_by(|a, b| (a.re, a.im).partial_cmp(&(b.re, b.im)).unwrap());
    pts.dedup();

    if pts.len() == 1 {
        return ConvexPolygon::new(pts);
    }

    let keep = |o: Complex, a: Complex, b: Complex| {
        // strictly convex turn; collinear points get popped
        cross(o, a, b) > COLLINEAR_TOL * (a - o).norm() * (b - a).norm()
    };

    // Monotone chain. Lower hull then upper hull, both counterclockwise.
    let mut lower: Vec<Complex> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && !keep(lower[lower.len() - 2], lower[lower.len() - 1], p) {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Complex> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && !keep(upper[upper.len() - 2], upper[upper.len() - 1], p) {
            upper.pop();
        }
        upper.push(p);
    }

    if lower.len() == 2 && upper.len() == 2 {
        // collinear set: a segment between the extreme points
        return ConvexPolygon::new(lower);
    }

    lower.pop();
    upper.pop();
    lower.extend(upper);
    ConvexPolygon::new(lower)
}
