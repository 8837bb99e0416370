//! Region variants, their JSON encoding and boundary discretization.

use super::{cross, ensure_finite, ensure_in_cstar, segment_distance, Complex, ConvexPolygon};
use crate::error::{Error, Result};
use crate::wire;
use serde::{Deserialize, Serialize};

/// A certifiable subset of C*.
///
/// `Rectangle { m, l, n }` is `{ m <= x <= m+l, |y| <= n }`;
/// `Trapezoid { m, l, t }` is `{ m <= x <= l, |y| <= t*x }`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawRegion", into = "RawRegion")]
pub enum Region {
    Polygon(ConvexPolygon),
    Disk { center: Complex, radius: f64 },
    Cone { center: Complex, radius: f64, apex: Complex },
    Rectangle { m: f64, l: f64, n: f64 },
    Trapezoid { m: f64, l: f64, t: f64 },
    Interval { a: f64, b: f64 },
    Points(Vec<Complex>),
}

/// Wire form of [`Region`]; field names match the published JSON schema.
#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum RawRegion {
    Polygon { vertices: Vec<[f64; 2]> },
    Disk { center: [f64; 2], radius: f64 },
    Cone { center: [f64; 2], radius: f64, apex: [f64; 2] },
    Rectangle { #[serde(rename = "M")] m: f64, #[serde(rename = "L")] l: f64, #[serde(rename = "N")] n: f64 },
    Trapezoid { #[serde(rename = "M")] m: f64, #[serde(rename = "L")] l: f64, t: f64 },
    Interval { a: f64, b: f64 },
    Points { values: Vec<[f64; 2]> },
}

impl TryFrom<RawRegion> for Region {
    type Error = Error;

    fn try_from(raw: RawRegion) -> Result<Region> {
        match raw {
            RawRegion::Polygon { vertices } => {
                let vs = vertices.into_iter().map(wire::from_pair).collect();
                Ok(Region::Polygon(ConvexPolygon::new(vs)?))
            }
            RawRegion::Disk { center, radius } => Region::disk(wire::from_pair(center), radius),
            RawRegion::Cone { center, radius, apex } => {
                Region::cone(wire::from_pair(center), radius, wire::from_pair(apex))
            }
            RawRegion::Rectangle { m, l, n } => Region::rectangle(m, l, n),
            RawRegion::Trapezoid { m, l, t } => Region::trapezoid(m, l, t),
            RawRegion::Interval { a, b } => Region::interval(a, b),
            RawRegion::Points { values } => {
                Region::points(values.into_iter().map(wire::from_pair).collect())
            }
        }
    }
}

impl From<Region> for RawRegion {
    fn from(r: Region) -> RawRegion {
        match r {
            Region::Polygon(p) => RawRegion::Polygon {
                vertices: p.vertices().iter().map(|&v| wire::to_pair(v)).collect(),
            },
            Region::Disk { center, radius } => RawRegion::Disk { center: wire::to_pair(center), radius },
            Region::Cone { center, radius, apex } => RawRegion::Cone {
                center: wire::to_pair(center),
                radius,
                apex: wire::to_pair(apex),
            },
            Region::Rectangle { m, l, n } => RawRegion::Rectangle { m, l, n },
            Region::Trapezoid { m, l, t } => RawRegion::Trapezoid { m, l, t },
            Region::Interval { a, b } => RawRegion::Interval { a, b },
            Region::Points(values) => RawRegion::Points {
                values: values.iter().map(|&v| wire::to_pair(v)).collect(),
            },
        }
    }
}

impl Region {
    pub fn disk(center: Complex, radius: f64) -> Result<Region> {
        ensure_finite(center)?;
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::ParameterDomain("disk radius must be positive"));
        }
        if center.norm() <= radius {
            return Err(Error::ContainsOrigin);
        }
        Ok(Region::Disk { center, radius })
    }

    pub fn cone(center: Complex, radius: f64, apex: Complex) -> Result<Region> {
        Region::disk(center, radius)?;
        ensure_finite(apex)?;
        if (apex - center).norm() <= radius {
            return Err(Error::DegenerateRegion("cone apex lies inside its disk"));
        }
        let (t1, t2) = cone_tangent_points(center, radius, apex);
        if point_in_triangle(Complex::new(0.0, 0.0), apex, t1, t2) {
            return Err(Error::ContainsOrigin);
        }
        Ok(Region::Cone { center, radius, apex })
    }

    pub fn rectangle(m: f64, l: f64, n: f64) -> Result<Region> {
        if m > 0.0 && l > 0.0 && n > 0.0 && m.is_finite() && l.is_finite() && n.is_finite() {
            Ok(Region::Rectangle { m, l, n })
        } else {
            Err(Error::ParameterDomain("rectangle needs M, L, N > 0"))
        }
    }

    pub fn trapezoid(m: f64, l: f64, t: f64) -> Result<Region> {
        if m > 0.0 && l > m && t > 0.0 && l.is_finite() && t.is_finite() {
            Ok(Region::Trapezoid { m, l, t })
        } else {
            Err(Error::ParameterDomain("trapezoid needs 0 < M < L and t > 0"))
        }
    }

    pub fn interval(a: f64, b: f64) -> Result<Region> {
        if a > 0.0 && b >= a && b.is_finite() {
            Ok(Region::Interval { a, b })
        } else {
            Err(Error::ParameterDomain("interval needs 0 < a <= b"))
        }
    }

    pub fn points(values: Vec<Complex>) -> Result<Region> {
        if values.is_empty() {
            return Err(Error::EmptyInput);
        }
        for &v in &values {
            ensure_in_cstar(v)?;
        }
        Ok(Region::Points(values))
    }

    /// Corner polygon of the rectangle/trapezoid variants.
    fn corner_polygon(&self) -> Option<ConvexPolygon> {
        let corners = match *self {
            Region::Rectangle { m, l, n } => vec![
                Complex::new(m, -n),
                Complex::new(m + l, -n),
                Complex::new(m + l, n),
                Complex::new(m, n),
            ],
            Region::Trapezoid { m, l, t } => vec![
                Complex::new(m, -t * m),
                Complex::new(l, -t * l),
                Complex::new(l, t * l),
                Complex::new(m, t * m),
            ],
            _ => return None,
        };
        Some(ConvexPolygon::new(corners).expect("validated parameters give a convex polygon"))
    }

    /// Boundary landmarks: polygon vertices, disk axis extremes, cone apex
    /// and tangency points, rectangle/trapezoid corners, interval endpoints.
    pub fn distinguished_points(&self) -> Vec<Complex> {
        match self {
            Region::Polygon(p) => p.vertices().to_vec(),
            Region::Disk { center, radius } => disk_extremes(*center, *radius),
            Region::Cone { center, radius, apex } => {
                let mut pts = disk_extremes(*center, *radius);
                let (t1, t2) = cone_tangent_points(*center, *radius, *apex);
                pts.extend([t1, *apex, t2]);
                pts
            }
            Region::Rectangle { .. } | Region::Trapezoid { .. } => {
                self.corner_polygon().unwrap().vertices().to_vec()
            }
            Region::Interval { a, b } => vec![Complex::new(*a, 0.0), Complex::new(*b, 0.0)],
            Region::Points(values) => values.clone(),
        }
    }

    /// Convex polygon over-approximating nothing: the region itself for
    /// polygonal variants, an inscribed polygon (boundary sample hull) for
    /// smooth ones. Used by certification sweeps and maximality scans.
    pub fn to_polygon(&self, refinement: usize) -> Result<ConvexPolygon> {
        match self {
            Region::Polygon(p) => Ok(p.clone()),
            Region::Points(values) => super::convex_hull(values),
            _ => super::convex_hull(&boundary_discretize(self, refinement)?),
        }
    }
}

fn disk_extremes(center: Complex, radius: f64) -> Vec<Complex> {
    vec![
        center + Complex::new(radius, 0.0),
        center + Complex::new(0.0, radius),
        center - Complex::new(radius, 0.0),
        center - Complex::new(0.0, radius),
    ]
}

/// Tangency points of the two lines through `apex` touching the circle.
pub(crate) fn cone_tangent_points(center: Complex, radius: f64, apex: Complex) -> (Complex, Complex) {
    let d = (apex - center).norm();
    let beta = (apex - center).arg();
    let gamma = (radius / d).acos();
    (
        center + Complex::from_polar(radius, beta + gamma),
        center + Complex::from_polar(radius, beta - gamma),
    )
}

pub(crate) fn point_in_triangle(p: Complex, a: Complex, b: Complex, c: Complex) -> bool {
    let s1 = cross(a, b, p);
    let s2 = cross(b, c, p);
    let s3 = cross(c, a, p);
    (s1 >= 0.0 && s2 >= 0.0 && s3 >= 0.0) || (s1 <= 0.0 && s2 <= 0.0 && s3 <= 0.0)
}

/// Splits `extra` points among pieces proportionally to their lengths
/// (largest remainder, ties to the lowest index).
fn allocate(extra: usize, lengths: &[f64]) -> Vec<usize> {
    let total: f64 = lengths.iter().sum();
    if total <= 0.0 || extra == 0 {
        return vec![0; lengths.len()];
    }
    let quotas: Vec<f64> = lengths.iter().map(|&l| extra as f64 * l / total).collect();
    let mut counts: Vec<usize> = quotas.iter().map(|q| q.floor() as usize).collect();
    let mut assigned: usize = counts.iter().sum();
    let mut order: Vec<usize> = (0..lengths.len()).collect();
    order.sort_by(|&i, &j| {
        let fi = quotas[i] - quotas[i].floor();
        let fj = quotas[j] - quotas[j].floor();
        fj.partial_cmp(&fi).unwrap().then(i.cmp(&j))
    });
    for &i in order.iter().cycle() {
        if assigned == extra {
            break;
        }
        counts[i] += 1;
        assigned += 1;
    }
    counts
}

/// Walks a closed piecewise-linear boundary: every corner is emitted, plus
/// `extra` interior points distributed by arc length.
fn walk_corners(corners: &[Complex], extra: usize) -> Vec<Complex> {
    let nv = corners.len();
    let lengths: Vec<f64> = (0..nv).map(|i| (corners[(i + 1) % nv] - corners[i]).norm()).collect();
    let alloc = allocate(extra, &lengths);
    let mut out = Vec::with_capacity(nv + extra);
    for i in 0..nv {
        let a = corners[i];
        let b = corners[(i + 1) % nv];
        out.push(a);
        let k = alloc[i];
        for j in 1..=k {
            out.push(a + (b - a) * (j as f64 / (k + 1) as f64));
        }
    }
    out
}

/// `n` points on the region boundary, uniform by arc parameter per smooth
/// piece. Corners (polygon vertices, cone apex and tangency points) are
/// always included, so polygonal outputs may exceed `n` when `n` is smaller
/// than the corner count.
pub fn boundary_discretize(region: &Region, n: usize) -> Result<Vec<Complex>> {
    if n < 2 {
        return Err(Error::ParameterDomain("boundary discretization needs n >= 2"));
    }
    match region {
        Region::Disk { center, radius } => Ok((0..n)
            .map(|k| center + Complex::from_polar(*radius, std::f64::consts::TAU * k as f64 / n as f64))
            .collect()),
        Region::Polygon(p) => match p.len() {
            1 => Err(Error::DegenerateRegion("single point has no boundary to discretize")),
            2 => {
                let (a, b) = (p.vertices()[0], p.vertices()[1]);
                Ok((0..n).map(|k| a + (b - a) * (k as f64 / (n - 1) as f64)).collect())
            }
            nv => Ok(walk_corners(p.vertices(), n.saturating_sub(nv))),
        },
        Region::Rectangle { .. } | Region::Trapezoid { .. } => {
            let p = region.corner_polygon().unwrap();
            Ok(walk_corners(p.vertices(), n.saturating_sub(p.len())))
        }
        Region::Interval { a, b } => {
            if a == b {
                return Err(Error::DegenerateRegion("zero-length interval"));
            }
            Ok((0..n)
                .map(|k| Complex::new(a + (b - a) * (k as f64 / (n - 1) as f64), 0.0))
                .collect())
        }
        Region::Cone { center, radius, apex } => {
            let (t_plus, t_minus) = cone_tangent_points(*center, *radius, *apex);
            let d = (*apex - center).norm();
            let beta = (*apex - center).arg();
            let gamma = (radius / d).acos();
            let arc_span = std::f64::consts::TAU - 2.0 * gamma;
            let seg_len = (d * d - radius * radius).sqrt();
            let alloc = allocate(n.saturating_sub(3), &[radius * arc_span, seg_len, seg_len]);

            let mut out = Vec::with_capacity(n.max(3));
            // far arc, counterclockwise from the upper to the lower tangency
            let k = alloc[0];
            out.push(t_plus);
            for j in 1..=k {
                let ang = beta + gamma + arc_span * j as f64 / (k + 1) as f64;
                out.push(center + Complex::from_polar(*radius, ang));
            }
            // lower tangency -> apex -> upper tangency
            out.push(t_minus);
            let k = alloc[1];
            for j in 1..=k {
                out.push(t_minus + (*apex - t_minus) * (j as f64 / (k + 1) as f64));
            }
            out.push(*apex);
            let k = alloc[2];
            for j in 1..=k {
                out.push(*apex + (t_plus - *apex) * (j as f64 / (k + 1) as f64));
            }
            Ok(out)
        }
        Region::Points(values) => Ok(values.clone()),
    }
}

/// Distance from `p` to the region boundary (for validating discretizations).
pub fn boundary_residual(region: &Region, p: Complex) -> f64 {
    match region {
        Region::Disk { center, radius } => ((p - center).norm() - radius).abs(),
        Region::Polygon(poly) => match poly.len() {
            1 => (p - poly.vertices()[0]).norm(),
            2 => segment_distance(p, poly.vertices()[0], poly.vertices()[1]),
            nv => (0..nv)
                .map(|i| {
                    let (a, b) = poly.side(i);
                    segment_distance(p, a, b)
                })
                .fold(f64::INFINITY, f64::min),
        },
        Region::Rectangle { .. } | Region::Trapezoid { .. } => {
            boundary_residual(&Region::Polygon(region.corner_polygon().unwrap()), p)
        }
        Region::Interval { a, b } => segment_distance(p, Complex::new(*a, 0.0), Complex::new(*b, 0.0)),
        Region::Cone { center, radius, apex } => {
            let (t_plus, t_minus) = cone_tangent_points(*center, *radius, *apex);
            let mut best = segment_distance(p, t_minus, *apex).min(segment_distance(p, *apex, t_plus));
            let beta = (*apex - center).arg();
            let gamma = (radius / (*apex - center).norm()).acos();
            // angular offset from the apex direction, folded to [0, pi]
            let off = ((p - center).arg() - beta).rem_euclid(std::f64::consts::TAU);
            let off = off.min(std::f64::consts::TAU - off);
            if off >= gamma {
                best = best.min(((p - center).norm() - radius).abs());
            }
            best
        }
        Region::Points(values) => values.iter().map(|&v| (p - v).norm()).fold(f64::INFINITY, f64::min),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::convex_hull;
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn disk_quarter_points() {
        let disk = Region::disk(c(1.0, 0.0), 0.5).unwrap();
        let pts = boundary_discretize(&disk, 4).unwrap();
        let expect = [c(1.5, 0.0), c(1.0, 0.5), c(0.5, 0.0), c(1.0, -0.5)];
        for (p, e) in pts.iter().zip(expect) {
            assert_relative_eq!((p - e).norm(), 0.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn triangle_three_points_are_vertices() {
        let tri = convex_hull(&[c(1.0, 0.0), c(2.0, 0.0), c(1.0, 1.0)]).unwrap();
        let pts = boundary_discretize(&Region::Polygon(tri.clone()), 3).unwrap();
        assert_eq!(pts, tri.vertices());
    }

    #[test]
    fn interval_endpoints() {
        let iv = Region::interval(1.0, 2.0).unwrap();
        assert_eq!(boundary_discretize(&iv, 2).unwrap(), vec![c(1.0, 0.0), c(2.0, 0.0)]);
    }

    #[test]
    fn polygon_refinement_keeps_vertices() {
        let tri = convex_hull(&[c(1.0, 0.0), c(2.0, 0.0), c(1.0, 1.0)]).unwrap();
        let pts = boundary_discretize(&Region::Polygon(tri.clone()), 16).unwrap();
        assert_eq!(pts.len(), 16);
        for v in tri.vertices() {
            assert!(pts.iter().any(|p| (p - v).norm() < 1e-15));
        }
        for p in &pts {
            assert!(boundary_residual(&Region::Polygon(tri.clone()), *p) < 1e-10);
        }
    }

    #[test]
    fn cone_discretization_includes_landmarks() {
        let cone = Region::cone(c(1.0, 0.0), 0.5, c(2.5, 0.0)).unwrap();
        let pts = boundary_discretize(&cone, 64).unwrap();
        assert_eq!(pts.len(), 64);
        let (t1, t2) = cone_tangent_points(c(1.0, 0.0), 0.5, c(2.5, 0.0));
        for landmark in [t1, t2, c(2.5, 0.0)] {
            assert!(pts.iter().any(|p| (p - landmark).norm() < 1e-12));
        }
        for p in &pts {
            assert!(boundary_residual(&cone, *p) < 1e-10, "residual {} at {}", boundary_residual(&cone, *p), p);
        }
    }

    #[test]
    fn degenerate_regions_error() {
        let point = ConvexPolygon::new(vec![c(1.0, 0.0)]).unwrap();
        assert!(boundary_discretize(&Region::Polygon(point), 8).is_err());
        assert!(Region::interval(2.0, 1.0).is_err());
        assert!(Region::disk(c(0.1, 0.0), 0.5).is_err(), "disk over the origin");
        assert!(Region::cone(c(1.0, 0.0), 0.5, c(1.1, 0.0)).is_err(), "apex inside disk");
    }

    #[test]
    fn region_json_round_trip() {
        let reg = Region::disk(c(1.0, 0.0), 0.5).unwrap();
        let js = serde_json::to_string(&reg).unwrap();
        assert_eq!(js, r#"{"type":"disk","center":[1.0,0.0],"radius":0.5}"#);
        assert_eq!(serde_json::from_str::<Region>(&js).unwrap(), reg);

        let quad: Region = serde_json::from_str(
            r#"{"type":"polygon","vertices":[[0.5,0.0],[1.0,-0.5],[2.914213562373095,0.0],[1.0,0.5]]}"#,
        )
        .unwrap();
        assert!(matches!(quad, Region::Polygon(_)));

        let rect: Region = serde_json::from_str(r#"{"type":"rectangle","M":1.0,"L":2.0,"N":0.3}"#).unwrap();
        assert_eq!(rect, Region::rectangle(1.0, 2.0, 0.3).unwrap());

        // invalid polygons are rejected at parse time
        let bad = serde_json::from_str::<Region>(
            r#"{"type":"polygon","vertices":[[-1.0,-1.0],[1.0,-1.0],[1.0,1.0],[-1.0,1.0]]}"#,
        );
        assert!(bad.is_err());
    }
}
