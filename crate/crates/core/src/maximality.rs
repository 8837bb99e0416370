//! Boundary-maximality diagnostics and the push-out polygon grower.
//!
//! A certified convex region is maximal exactly where the slack
//! `mu(a) = max F(a, b, c, d)` over the region vanishes on the boundary;
//! where it is negative the boundary can be pushed outward. The grower
//! exploits that certification is a finite check on polygon vertices.

use crate::criteria::{certify_a2, f_criterion, g_criteria};
use crate::error::{Error, Result};
use crate::geom::{ensure_in_cstar, Complex, ConvexPolygon, Region};
use crate::regions::necessary_box;
use crate::wire;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Push distances below this are treated as exhausted sites by [`grow`].
pub const PUSH_EPS: f64 = 1e-6;

/// Worst quadruple slack at `a` against the polygon: the maximum of
/// `F(a, b, c, d)` over vertex triples. Equals the maximum over the whole
/// polygon because F is quadratic with nonnegative quadratic part in each
/// argument separately, so each inner maximum is attained at a vertex.
pub fn mu(polygon: &ConvexPolygon, a: Complex) -> Result<f64> {
    Ok(mu_with_witness(polygon, a)?.0)
}

/// [`mu`] with the attaining vertex triple `(b, c, d)`.
pub fn mu_with_witness(polygon: &ConvexPolygon, a: Complex) -> Result<(f64, [Complex; 3])> {
    ensure_in_cstar(a)?;
    let vs = polygon.vertices();
    let m = vs.len();
    let (worst, wit) = (0..m)
        .into_par_iter()
        .map(|j| {
            let mut worst = f64::NEG_INFINITY;
            let mut wit = [usize::MAX; 3];
            for k in 0..m {
                for l in 0..m {
                    let f = f_criterion(a, vs[j], vs[k], vs[l]);
                    if f > worst || (f == worst && [j, k, l] < wit) {
                        worst = f;
                        wit = [j, k, l];
                    }
                }
            }
            (worst, wit)
        })
        .reduce(
            || (f64::NEG_INFINITY, [usize::MAX; 3]),
            |a, b| {
                if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
                    b
                } else {
                    a
                }
            },
        );
    Ok((worst, [vs[wit[0]], vs[wit[1]], vs[wit[2]]]))
}

/// Pair-criterion slack at `a`: max over vertices of `max(G1, G2)`.
pub fn mu_g(polygon: &ConvexPolygon, a: Complex) -> Result<f64> {
    ensure_in_cstar(a)?;
    Ok(polygon
        .vertices()
        .iter()
        .map(|&b| {
            let (g1, g2) = g_criteria(a, b);
            g1.max(g2)
        })
        .fold(f64::NEG_INFINITY, f64::max))
}

/// One scanned boundary point with both slack flavors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MaximalityPoint {
    #[serde(with = "wire::complex_pair")]
    pub at: Complex,
    pub mu_f: f64,
    pub mu_g: f64,
    /// No outward push survives the quadruple criterion here.
    pub maximal_f: bool,
    /// No outward push survives the pair criterion here.
    pub maximal_g: bool,
}

/// Slack profile along a region boundary.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MaximalityProfile {
    pub points: Vec<MaximalityPoint>,
    pub tol: f64,
}

impl MaximalityProfile {
    /// Indices flagged maximal under the quadruple criterion.
    pub fn maximal_indices(&self) -> Vec<usize> {
        (0..self.points.len()).filter(|&i| self.points[i].maximal_f).collect()
    }
}

/// Evaluates both slacks at `n` boundary points of a certified region.
///
/// The region is discretized to a polygon with the same refinement for the
/// inner maximum (an inscribed approximation for smooth regions, so `mu_f`
/// is a one-sided underestimate there). Points with slack `>= -tol` are
/// flagged maximal, the rest pushable; any `mu_f > tol` means the region was
/// not certified and is an error.
pub fn boundary_scan(region: &Region, n: usize, tol: f64) -> Result<MaximalityProfile> {
    if n < 8 {
        return Err(Error::ParameterDomain("boundary scan needs n >= 8"));
    }
    let scan_points: Vec<Complex> = match region {
        Region::Points(values) => values.clone(),
        _ => crate::geom::boundary_discretize(region, n)?,
    };
    let inner = region.to_polygon(n)?;

    let evaluated: Vec<(f64, f64)> = scan_points
        .par_iter()
        .map(|&a| {
            let f = mu(&inner, a).expect("scan points are in C*");
            let g = mu_g(&inner, a).expect("scan points are in C*");
            (f, g)
        })
        .collect();

    let mut points = Vec::with_capacity(scan_points.len());
    for (&at, &(mu_f, mu_g)) in scan_points.iter().zip(&evaluated) {
        if mu_f > tol {
            return Err(Error::Uncertified { worst: mu_f });
        }
        points.push(MaximalityPoint {
            at,
            mu_f,
            mu_g,
            maximal_f: mu_f >= -tol,
            maximal_g: mu_g >= -tol,
        });
    }
    Ok(MaximalityProfile { points, tol })
}

/// Where a push starts: a side's midpoint or a vertex itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PushSite {
    Side(usize),
    Vertex(usize),
}

/// Max of F over quadruples of `vertices + {x}` that involve `x`, reduced by
/// the F symmetry (x fixed in canonical slots). Combined with a certified
/// base set this decides feasibility of the enlarged vertex set.
fn max_f_involving(vertices: &[Complex], x: Complex) -> f64 {
    let m = vertices.len();
    // exactly one x: the orbit of any such quadruple has x in slot 0 once
    let single = (0..m)
        .into_par_iter()
        .map(|j| {
            let b = vertices[j];
            let mut worst = f64::NEG_INFINITY;
            for &c in vertices {
                for &d in vertices {
                    worst = worst.max(f_criterion(x, b, c, d));
                }
            }
            worst
        })
        .reduce(|| f64::NEG_INFINITY, f64::max);

    let mut worst = single;
    // two x's: patterns (x,x,c,d) with c<=d, (x,b,x,d) with b<=d, (x,b,c,x)
    // with b<=c cover the orbits once
    for j in 0..m {
        for k in j..m {
            worst = worst.max(f_criterion(x, x, vertices[j], vertices[k]));
            worst = worst.max(f_criterion(x, vertices[j], x, vertices[k]));
            worst = worst.max(f_criterion(x, vertices[j], vertices[k], x));
        }
    }
    // three and four x's
    for &d in vertices {
        worst = worst.max(f_criterion(x, x, x, d));
    }
    worst.max(f_criterion(x, x, x, x))
}

/// Pushes a new vertex out of the polygon at `site` along `direction`,
/// as far as the quadruple certification allows.
///
/// The displacement is maximized by bisection on `[0, d_hi]` where `d_hi` is
/// the polygon diameter capped by the necessary ratio box of the vertex set;
/// feasibility of a candidate checks the quadruples involving it (the base
/// polygon is certified by precondition). Returns the re-hulled polygon and
/// the achieved distance; zero distance means the site is already maximal.
pub fn push_out_step(
    polygon: &ConvexPolygon,
    site: PushSite,
    direction: Complex,
    tol: f64,
) -> Result<(ConvexPolygon, f64)> {
    ensure_in_cstar(direction)?;
    let base = match site {
        PushSite::Side(i) => {
            if i >= polygon.side_count() {
                return Err(Error::SiteOutOfRange { site: i, sides: polygon.side_count() });
            }
            let (a, b) = polygon.side(i);
            (a + b) / 2.0
        }
        PushSite::Vertex(i) => {
            if i >= polygon.len() {
                return Err(Error::SiteOutOfRange { site: i, sides: polygon.len() });
            }
            polygon.vertices()[i]
        }
    };
    let u = direction / direction.norm();
    let diameter = polygon.diameter();
    let probe = base + u * (1e-9 * (1.0 + diameter));
    if polygon.contains(probe, 0.0) {
        return Err(Error::NotOutward);
    }

    let vertices = polygon.vertices();
    // the bracket starts at the diameter and may expand; the necessary ratio
    // box (when some vertex ratio is non-real) bounds it, with a hard cap
    // for sets on a line whose feasible ray is genuinely unbounded
    let limit = ratio_box_cap(vertices, base, u)
        .unwrap_or(diameter.max(1.0) * (1u64 << 30) as f64);

    let feasible = |d: f64| {
        let x = base + u * d;
        x != Complex::new(0.0, 0.0) && max_f_involving(vertices, x) <= tol
    };

    let mut lo = 0.0;
    let mut hi = diameter.max(f64::MIN_POSITIVE).min(limit);
    while feasible(hi) {
        lo = hi;
        if hi >= limit {
            break;
        }
        hi = (hi * 2.0).min(limit);
    }
    let d = if lo == hi {
        lo // feasible all the way to the cap
    } else {
        let resolution = 1e-9 * hi.max(1.0);
        while hi - lo > resolution {
            let mid = 0.5 * (lo + hi);
            if feasible(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    };

    let mut pts = vertices.to_vec();
    pts.push(base + u * d);
    Ok((crate::geom::convex_hull(&pts)?, d))
}

/// Upper bound on the push distance from the necessary ratio box: any new
/// vertex must keep `Re(x/v0) / Re(a/v0)` inside `[1/K, K]` for every
/// non-real vertex ratio `a/v0`.
fn ratio_box_cap(vertices: &[Complex], base: Complex, u: Complex) -> Option<f64> {
    let v0 = vertices
        .iter()
        .copied()
        .max_by(|a, b| a.norm().partial_cmp(&b.norm()).unwrap())?;
    let r0 = (base / v0).re;
    let ru = (u / v0).re;
    let mut cap: Option<f64> = None;
    for &a in vertices {
        let w = a / v0;
        if w.im.abs() <= 1e-12 * w.norm() {
            continue;
        }
        let Ok(bx) = necessary_box(w) else { continue };
        if bx.degenerate || w.re <= 0.0 {
            continue;
        }
        let candidates = [
            (ru > 1e-15).then(|| (bx.hi * w.re - r0) / ru),
            (ru < -1e-15).then(|| (r0 - bx.lo * w.re) / -ru),
        ];
        for d in candidates.into_iter().flatten() {
            let d = d.max(0.0);
            cap = Some(cap.map_or(d, |c: f64| c.min(d)));
        }
    }
    cap
}

/// Site selection order for [`grow`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Schedule {
    /// Cycle through side indices.
    RoundRobin,
    /// Push the side whose midpoint has the most negative slack
    /// (ties to the lowest index).
    MaxSlack,
}

impl std::str::FromStr for Schedule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "round-robin" => Ok(Schedule::RoundRobin),
            "max-slack" => Ok(Schedule::MaxSlack),
            _ => Err(Error::ParameterDomain("schedule must be round-robin or max-slack")),
        }
    }
}

/// One grower step: which side, how far it moved, and the certified worst F
/// of the resulting vertex set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StepRecord {
    pub site: usize,
    #[serde(rename = "d")]
    pub push_distance: f64,
    #[serde(rename = "worstF")]
    pub worst_f: f64,
}

/// Nested polygon sequence from the push-out grower.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrowthTrace {
    pub polygons: Vec<ConvexPolygon>,
    pub steps: Vec<StepRecord>,
}

impl GrowthTrace {
    pub fn last(&self) -> &ConvexPolygon {
        self.polygons.last().expect("trace always holds the seed")
    }
}

/// Grows a certified seed polygon by repeated side-midpoint push-outs.
///
/// Sides are chosen by `schedule`; each step re-certifies the new vertex set
/// and records the side, distance and worst F. Stops early once every push
/// in a full sweep of the current sides falls below [`PUSH_EPS`].
pub fn grow(seed: &ConvexPolygon, steps: usize, schedule: Schedule, tol: f64) -> Result<GrowthTrace> {
    let report = certify_a2(seed.vertices(), tol)?;
    if !report.is_certified() {
        return Err(Error::Uncertified { worst: report.worst_value });
    }

    let mut trace = GrowthTrace { polygons: vec![seed.clone()], steps: Vec::new() };
    let mut rr_next = 0usize;

    for _ in 0..steps {
        let current = trace.polygons.last().unwrap().clone();
        let sides = current.side_count();
        if sides == 0 {
            break;
        }
        let site = match schedule {
            Schedule::RoundRobin => {
                let s = rr_next % sides;
                rr_next += 1;
                s
            }
            Schedule::MaxSlack => {
                let slacks: Vec<f64> = (0..sides)
                    .map(|i| {
                        let (a, b) = current.side(i);
                        mu(&current, (a + b) / 2.0).expect("midpoints of a 0-free polygon are nonzero")
                    })
                    .collect();
                (0..sides)
                    .min_by(|&i, &j| slacks[i].partial_cmp(&slacks[j]).unwrap().then(i.cmp(&j)))
                    .unwrap()
            }
        };
        let direction = current.outward_normal(site);
        let (next, d) = push_out_step(&current, PushSite::Side(site), direction, tol)?;
        let rep = certify_a2(next.vertices(), tol)?;
        debug_assert!(rep.is_certified());
        trace.steps.push(StepRecord { site, push_distance: d, worst_f: rep.worst_value });
        trace.polygons.push(next);

        let sweep = trace.polygons.last().unwrap().side_count();
        if sweep > 0 && trace.steps.len() >= sweep {
            let tail = &trace.steps[trace.steps.len() - sweep..];
            if tail.iter().all(|s| s.push_distance < PUSH_EPS) {
                break;
            }
        }
    }
    Ok(trace)
}

/// The disk's boundary-pair slack in angular coordinates:
/// `H(u, v) = (sin u - sin v)^2 / 4 - (sqrt2 + cos u)(sqrt2 + cos v)`,
/// which equals `G1(1 + e^{i(u - pi/4)}/2, 1 + e^{i(v - pi/4)}/2)`.
pub fn disk_h(u: f64, v: f64) -> f64 {
    let s = u.sin() - v.sin();
    s * s / 4.0 - (std::f64::consts::SQRT_2 + u.cos()) * (std::f64::consts::SQRT_2 + v.cos())
}

/// The disk point at angular coordinate `u`: `1 + e^{i(u - pi/4)}/2`.
pub fn disk_point(u: f64) -> Complex {
    Complex::new(1.0, 0.0) + Complex::from_polar(0.5, u - std::f64::consts::FRAC_PI_4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{boundary_discretize, convex_hull};
    use approx::assert_relative_eq;
    use std::f64::consts::{PI, SQRT_2};

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn quad() -> ConvexPolygon {
        crate::regions::example_quadrilateral()
    }

    fn disk_sample(n: usize) -> ConvexPolygon {
        let region = Region::disk(c(1.0, 0.0), 0.5).unwrap();
        convex_hull(&boundary_discretize(&region, n).unwrap()).unwrap()
    }

    #[test]
    fn mu_single_point() {
        let point = ConvexPolygon::new(vec![c(1.0, 0.0)]).unwrap();
        assert_eq!(mu(&point, c(1.0, 0.0)).unwrap(), -4.0);
    }

    #[test]
    fn mu_disk_binding_point() {
        let poly = disk_sample(128);
        let (value, witness) = mu_with_witness(&poly, c(0.5, 0.0)).unwrap();
        assert!(value.abs() <= 1e-12, "mu = {value}");
        // the maximum is attained by the axis triple (in hull vertex order;
        // discretization carries ~1e-16 rounding)
        let expected = [c(1.0, 0.5), c(1.0, -0.5), c(0.5, 0.0)];
        for e in expected {
            assert!(
                witness.iter().any(|w| (w - e).norm() < 1e-12),
                "witness {witness:?} misses {e}"
            );
        }
    }

    #[test]
    fn mu_at_quadrilateral_apex() {
        // the apex binds the pair criterion, not the quadruple one: its
        // F slack is s(s-4)/4 with plenty of room
        let s = 1.5 + SQRT_2;
        let value = mu(&quad(), c(s, 0.0)).unwrap();
        assert_relative_eq!(value, s * (s - 4.0) / 4.0, max_relative = 1e-12);
        assert_relative_eq!(value, -0.7910533905932738, max_relative = 1e-12);
        let g = mu_g(&quad(), c(s, 0.0)).unwrap();
        assert!(g.abs() <= 1e-12, "mu_g = {g}");
    }

    #[test]
    fn scan_disk_flags_exactly_three_points() {
        let region = Region::disk(c(1.0, 0.0), 0.5).unwrap();
        let profile = boundary_scan(&region, 64, 1e-9).unwrap();
        let maximal = profile.maximal_indices();
        assert_eq!(maximal.len(), 3);
        let special = [c(0.5, 0.0), c(1.0, 0.5), c(1.0, -0.5)];
        for i in maximal {
            let at = profile.points[i].at;
            assert!(special.iter().any(|s| (s - at).norm() < 1e-12), "unexpected maximal point {at}");
            assert!(profile.points[i].maximal_g);
        }
    }

    #[test]
    fn scan_single_point_is_pushable_everywhere() {
        let region = Region::points(vec![c(1.0, 0.0)]).unwrap();
        let profile = boundary_scan(&region, 8, 1e-9).unwrap();
        assert_eq!(profile.points.len(), 1);
        assert_eq!(profile.points[0].mu_f, -4.0);
        assert!(!profile.points[0].maximal_f);
    }

    #[test]
    fn scan_quadrilateral_apex_is_g_maximal() {
        let region = Region::Polygon(quad());
        let profile = boundary_scan(&region, 8, 1e-9).unwrap();
        let s = 1.5 + SQRT_2;
        let apex = profile
            .points
            .iter()
            .find(|p| (p.at - c(s, 0.0)).norm() < 1e-12)
            .expect("apex is a scan point");
        assert!(apex.maximal_g, "mu_g = {}", apex.mu_g);
        assert!(!apex.maximal_f, "mu_f = {}", apex.mu_f);
    }

    #[test]
    fn scan_rejects_uncertified_region() {
        let bad = Region::points(vec![c(1.0, 0.0), c(0.0, 1.0)]).unwrap();
        assert!(matches!(boundary_scan(&bad, 8, 1e-9), Err(Error::Uncertified { .. })));
    }

    #[test]
    fn push_segment_midpoint_upward() {
        let seg = convex_hull(&[c(1.0, 0.0), c(2.0, 0.0)]).unwrap();
        let (next, d) = push_out_step(&seg, PushSite::Side(1), c(0.0, 1.0), 1e-9).unwrap();
        // feasibility boundary of {1, 2, 3/2 + i d} sits at d = sqrt(3)
        assert_relative_eq!(d, 3.0f64.sqrt(), epsilon = 1e-6);
        assert_eq!(next.len(), 3);
        assert!(certify_a2(next.vertices(), 1e-9).unwrap().is_certified());
        // one epsilon further refutes
        let probe = vec![c(1.0, 0.0), c(2.0, 0.0), c(1.5, d + 1e-3)];
        assert!(!certify_a2(&probe, 1e-9).unwrap().is_certified());
    }

    #[test]
    fn push_quadrilateral_apex_to_the_quadruple_frontier() {
        // under the quadruple (not pair) criterion the apex can travel to
        // Re = 4, where F(4, 1/2, 1/2, 1 +/- i/2) hits zero
        let s = 1.5 + SQRT_2;
        let (next, d) = push_out_step(&quad(), PushSite::Vertex(2), c(1.0, 0.0), 1e-9).unwrap();
        assert_relative_eq!(d, 4.0 - s, epsilon = 1e-6);
        assert!(certify_a2(next.vertices(), 1e-9).unwrap().is_certified());
    }

    #[test]
    fn push_inward_errors() {
        let (a, b) = quad().side(0);
        let inward = -quad().outward_normal(0);
        let err = push_out_step(&quad(), PushSite::Side(0), inward, 1e-9);
        assert!(matches!(err, Err(Error::NotOutward)), "{:?}", (a, b));
    }

    #[test]
    fn grow_zero_steps_returns_seed_only() {
        let seed = convex_hull(&[c(1.0, 0.0), c(1.0, 0.25), c(0.75, 0.0)]).unwrap();
        let trace = grow(&seed, 0, Schedule::RoundRobin, 1e-9).unwrap();
        assert_eq!(trace.polygons.len(), 1);
        assert!(trace.steps.is_empty());
    }

    #[test]
    fn grow_produces_nested_certified_trace() {
        let seed = convex_hull(&[c(1.0, 0.25), c(1.0, -0.25), c(0.75, 0.0)]).unwrap();
        let trace = grow(&seed, 12, Schedule::RoundRobin, 1e-9).unwrap();
        assert!(trace.polygons.len() > 1);
        for w in trace.polygons.windows(2) {
            assert!(w[1].area() >= w[0].area() - 1e-12);
            for v in w[0].vertices() {
                assert!(w[1].contains(*v, 1e-9));
            }
        }
        for p in &trace.polygons {
            assert!(certify_a2(p.vertices(), 1e-9).unwrap().is_certified());
        }
    }

    #[test]
    fn grow_max_slack_matches_schedule() {
        let seed = convex_hull(&[c(1.0, 0.25), c(1.0, -0.25), c(0.75, 0.0)]).unwrap();
        let trace = grow(&seed, 6, Schedule::MaxSlack, 1e-9).unwrap();
        assert_eq!(trace.steps.len(), 6);
        let again = grow(&seed, 6, Schedule::MaxSlack, 1e-9).unwrap();
        assert_eq!(trace, again, "max-slack schedule must be deterministic");
    }

    #[test]
    fn grow_rejects_uncertified_seed() {
        let seed = convex_hull(&[c(1.0, 0.0), c(0.0, 1.0), c(0.5, 0.5)]).unwrap();
        assert!(matches!(grow(&seed, 3, Schedule::RoundRobin, 1e-9), Err(Error::Uncertified { .. })));
    }

    #[test]
    fn disk_h_values() {
        assert!(disk_h(-3.0 * PI / 4.0, 3.0 * PI / 4.0).abs() < 1e-12);
        assert_relative_eq!(disk_h(0.0, 0.0), -(SQRT_2 + 1.0) * (SQRT_2 + 1.0), max_relative = 1e-14);
    }

    #[test]
    fn disk_h_equals_g1_of_disk_points() {
        for (u, v) in [(0.3, 1.2), (-2.0, 0.7), (3.0, -1.3)] {
            let (g1, _) = g_criteria(disk_point(u), disk_point(v));
            assert_relative_eq!(disk_h(u, v), g1, epsilon = 1e-12);
        }
        // angular coordinate pins the binding pair to the axis points
        assert_relative_eq!((disk_point(-3.0 * PI / 4.0) - c(0.5, 0.0)).norm(), 0.0, epsilon = 1e-15);
        assert_relative_eq!((disk_point(3.0 * PI / 4.0) - c(1.0, 0.5)).norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn trace_json_shape() {
        let seed = convex_hull(&[c(1.0, 0.25), c(1.0, -0.25), c(0.75, 0.0)]).unwrap();
        let trace = grow(&seed, 2, Schedule::RoundRobin, 1e-9).unwrap();
        let js = serde_json::to_value(&trace).unwrap();
        assert!(js["polygons"][0].is_array());
        assert!(js["steps"][0]["site"].is_u64());
        assert!(js["steps"][0]["d"].is_number());
        assert!(js["steps"][0]["worstF"].is_number());
        let back: GrowthTrace = serde_json::from_value(js).unwrap();
        assert_eq!(back, trace);
    }
}
