//! Parametric region families with closed-form membership tests and
//! extremal-parameter calculators, plus the builtin catalog used by the CLI.

use crate::error::{Error, Result};
use crate::geom::{Complex, ConvexPolygon, Region};
use crate::search::golden_min;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::f64::consts::{SQRT_2, TAU};

/// The ratio `b/a = x + i*y` of a two-point set `{a, b}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioPoint {
    pub x: f64,
    pub y: f64,
}

impl RatioPoint {
    pub fn new(x: f64, y: f64) -> Self {
        RatioPoint { x, y }
    }
}

/// A closed-form sufficient bound, tagged with the formula that produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundResult {
    pub value: f64,
    pub formula_id: String,
    pub inputs: BTreeMap<String, f64>,
}

impl BoundResult {
    fn new(value: f64, formula_id: &str, inputs: &[(&str, f64)]) -> Self {
        BoundResult {
            value,
            formula_id: formula_id.to_string(),
            inputs: inputs.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        }
    }
}

/// Exact membership region for the ratio of a two-point set at right angles:
/// `x >= 0`, `|y| <= 2*sqrt(x)`, and for `x < 1/4` additionally
/// `|y| <= 2*x^(3/2)/sqrt(1-4x)` (a parabola and its circle inversion, a
/// cissoid). This is also the exact condition for the segment `[a, b]`.
pub fn two_point_region_contains(p: RatioPoint) -> bool {
    let RatioPoint { x, y } = p;
    if !(x >= 0.0) {
        return false;
    }
    if y.abs() > 2.0 * x.sqrt() {
        return false;
    }
    if x < 0.25 && y.abs() > 2.0 * x.powf(1.5) / (1.0 - 4.0 * x).sqrt() {
        return false;
    }
    true
}

/// Largest ratio `b/a` for which a positive real interval `[a, b]` passes
/// the pair criterion: `3 + 2*sqrt(2)`.
pub fn interval_max_ratio() -> f64 {
    3.0 + 2.0 * SQRT_2
}

/// Pair-criterion membership of the interval `[a, b]`, `0 < a <= b`.
pub fn interval_in_b2(a: f64, b: f64) -> Result<bool> {
    if !(a > 0.0 && b >= a && b.is_finite()) {
        return Err(Error::ParameterDomain("interval needs 0 < a <= b"));
    }
    Ok(b / a <= interval_max_ratio())
}

/// Sufficient half-height `N = 2*M^(3/2) / sqrt(L + 24*M)` for the rectangle
/// `{M <= x <= M+L, |y| <= N}` to certify.
pub fn rectangle_max_halfheight(m: f64, l: f64) -> Result<BoundResult> {
    if !(m > 0.0 && l > 0.0 && m.is_finite() && l.is_finite()) {
        return Err(Error::ParameterDomain("rectangle bound needs M, L > 0"));
    }
    let n = 2.0 * m.powf(1.5) / (l + 24.0 * m).sqrt();
    Ok(BoundResult::new(n, "rectangle-max-halfheight", &[("M", m), ("L", l)]))
}

/// Sufficient long side `L = M*sqrt((T + sqrt(T^2 - 4))/2)` with
/// `T = t^2 + t^(-2) - 4` for the trapezoid `{M <= x <= L, |y| <= t*x}`;
/// requires `0 < t < sqrt(2) - 1` and behaves as `M/t` for small `t`.
pub fn trapezoid_max_long_side(m: f64, t: f64) -> Result<BoundResult> {
    if !(m > 0.0 && m.is_finite()) {
        return Err(Error::ParameterDomain("trapezoid bound needs M > 0"));
    }
    if !(t > 0.0 && t < SQRT_2 - 1.0) {
        return Err(Error::ParameterDomain("trapezoid slope must satisfy 0 < t < sqrt(2) - 1"));
    }
    let big_t = t * t + 1.0 / (t * t) - 4.0;
    let l = m * ((big_t + (big_t * big_t - 4.0).sqrt()) / 2.0).sqrt();
    Ok(BoundResult::new(l, "trapezoid-max-long-side", &[("M", m), ("t", t)]))
}

/// Largest apex offset `t` for which the pair criterion tolerates the point
/// `1 + t` against the disk point at boundary angle `phi`:
/// `2 + sqrt(2)*sin(phi) - (sqrt(2)/2)*cos(phi)
///  + sqrt(6*sqrt(2)*sin(phi) - 2*sqrt(2)*cos(phi) - sin(2phi) - cos(2phi) + 9)`.
pub fn icecream_t_of_phi(phi: f64) -> Result<f64> {
    if !(0.0..TAU).contains(&phi) {
        return Err(Error::ParameterDomain("phi must lie in [0, 2*pi)"));
    }
    let radicand =
        6.0 * SQRT_2 * phi.sin() - 2.0 * SQRT_2 * phi.cos() - (2.0 * phi).sin() - (2.0 * phi).cos() + 9.0;
    if radicand < 0.0 {
        return Err(Error::ParameterDomain("negative radicand in apex bound"));
    }
    Ok(2.0 + SQRT_2 * phi.sin() - SQRT_2 / 2.0 * phi.cos() + radicand.sqrt())
}

/// Global minimum of [`icecream_t_of_phi`] over one period: the largest apex
/// offset `t*` such that the disk `|z - 1| <= 1/2` together with the point
/// `1 + t*` (hence their convex hull, the ice-cream cone) certifies.
/// Coarse 1024-point grid, then golden-section refinement to `tol`.
pub fn icecream_tstar(tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(Error::ParameterDomain("tolerance must be positive"));
    }
    let n = 1024;
    let f = |phi: f64| icecream_t_of_phi(phi.rem_euclid(TAU)).expect("radicand stays positive");
    let mut best_k = 0;
    let mut best = f64::INFINITY;
    for k in 0..n {
        let v = f(TAU * k as f64 / n as f64);
        if v < best {
            best = v;
            best_k = k;
        }
    }
    let lo = TAU * (best_k as f64 - 1.0) / n as f64;
    let hi = TAU * (best_k as f64 + 1.0) / n as f64;
    let (_, t) = golden_min(f, lo, hi, tol);
    Ok(t)
}

/// Necessary bounds `K^{-1} <= Re(b)/Re(a) <= K` on any third point `b` with
/// `{1, a, b}` certified, `K = (|1+a| + 1 + Re a)^2 / (Im a)^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NecessaryBox {
    pub lo: f64,
    pub hi: f64,
    /// `Re(a) == 0`: the ratio bound degenerates (it forces `Re(b) = 0`).
    pub degenerate: bool,
}

/// Necessary ratio box from a non-real `a`; errors when `a` is real.
pub fn necessary_box(a: Complex) -> Result<NecessaryBox> {
    crate::geom::ensure_in_cstar(a)?;
    if a.im == 0.0 {
        return Err(Error::ParameterDomain("necessary box needs a non-real point"));
    }
    let k = ((1.0 + a).norm() + 1.0 + a.re).powi(2) / (a.im * a.im);
    Ok(NecessaryBox { lo: 1.0 / k, hi: k, degenerate: a.re == 0.0 })
}

fn param(params: &BTreeMap<String, f64>, key: &str) -> Option<f64> {
    params.get(key).copied()
}

/// The quadrilateral with vertices `1/2`, `1 -/+ i/2`, `3/2 + sqrt(2)`.
pub fn example_quadrilateral() -> ConvexPolygon {
    ConvexPolygon::new(vec![
        Complex::new(0.5, 0.0),
        Complex::new(1.0, -0.5),
        Complex::new(1.5 + SQRT_2, 0.0),
        Complex::new(1.0, 0.5),
    ])
    .expect("fixed vertices form a convex polygon")
}

/// Builds a named region from the catalog, with defaults taken from the
/// known extremal parameters. Recognized names: `barvinok-disk`,
/// `example-quadrilateral`, `icecream-cone`, `rectangle`, `trapezoid`,
/// `interval`, `two-point`.
pub fn builtin_region(name: &str, params: &BTreeMap<String, f64>) -> Result<Region> {
    match name {
        "barvinok-disk" => Region::disk(Complex::new(1.0, 0.0), 0.5),
        "example-quadrilateral" => Ok(Region::Polygon(example_quadrilateral())),
        "icecream-cone" => {
            let t = match param(params, "t") {
                Some(t) => t,
                None => icecream_tstar(1e-8)?,
            };
            Region::cone(Complex::new(1.0, 0.0), 0.5, Complex::new(1.0 + t, 0.0))
        }
        "rectangle" => {
            let m = param(params, "M").unwrap_or(1.0);
            let l = param(params, "L").unwrap_or(1.0);
            let n = match param(params, "N") {
                Some(n) => n,
                None => rectangle_max_halfheight(m, l)?.value,
            };
            Region::rectangle(m, l, n)
        }
        "trapezoid" => {
            let m = param(params, "M").unwrap_or(1.0);
            let t = param(params, "t").unwrap_or(0.2);
            let l = match param(params, "L") {
                Some(l) => l,
                None => trapezoid_max_long_side(m, t)?.value,
            };
            Region::trapezoid(m, l, t)
        }
        "interval" => {
            let a = param(params, "a").unwrap_or(1.0);
            let b = param(params, "b").unwrap_or(a * interval_max_ratio());
            Region::interval(a, b)
        }
        "two-point" => {
            let x = param(params, "x").unwrap_or(1.0);
            let y = param(params, "y").unwrap_or(0.0);
            Region::points(vec![Complex::new(1.0, 0.0), Complex::new(x, y)])
        }
        other => Err(Error::UnknownBuiltin(other.to_string())),
    }
}

/// Catalog names accepted by [`builtin_region`].
pub const BUILTIN_NAMES: [&str; 7] = [
    "barvinok-disk",
    "example-quadrilateral",
    "icecream-cone",
    "rectangle",
    "trapezoid",
    "interval",
    "two-point",
];

/// Largest `phi`-grid violation of `t* <= t(phi)`; exposed for tests.
pub fn icecream_profile_min(grid: usize) -> f64 {
    (0..grid)
        .map(|k| icecream_t_of_phi(TAU * k as f64 / grid as f64).unwrap())
        .fold(f64::INFINITY, f64::min)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criteria::{certify_b2, g_criteria};
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn two_point_region_examples() {
        assert!(two_point_region_contains(RatioPoint::new(1.0, 0.0)));
        assert!(two_point_region_contains(RatioPoint::new(1.0, 1.0)));
        assert!(!two_point_region_contains(RatioPoint::new(0.01, 0.01)));
        assert!(!two_point_region_contains(RatioPoint::new(-0.5, 0.0)));
    }

    #[test]
    fn interval_ratio_constant() {
        assert_relative_eq!(interval_max_ratio(), 5.82842712474619, max_relative = 1e-15);
        assert!(interval_in_b2(1.0, 5.8).unwrap());
        assert!(!interval_in_b2(1.0, 6.0).unwrap());
        assert!(interval_in_b2(0.0, 1.0).is_err());
    }

    #[test]
    fn rectangle_bound_values() {
        assert_relative_eq!(rectangle_max_halfheight(1.0, 1.0).unwrap().value, 0.4);
        // L -> 0 limit is 2/sqrt(24)
        assert_relative_eq!(
            rectangle_max_halfheight(1.0, 1e-12).unwrap().value,
            2.0 / 24.0f64.sqrt(),
            max_relative = 1e-9
        );
        // small-M asymptotics: N = 2*M^(3/2) * (1 + o(M)) at L = 1
        let m = 1e-4;
        let n = rectangle_max_halfheight(m, 1.0).unwrap().value;
        assert_relative_eq!(n, 2.0 * m.powf(1.5), max_relative = 2e-3);
        assert!(rectangle_max_halfheight(-1.0, 1.0).is_err());
    }

    #[test]
    fn trapezoid_bound_values() {
        let b = trapezoid_max_long_side(1.0, 0.2).unwrap();
        assert_relative_eq!(b.value, 4.581742422927142, max_relative = 1e-12);
        assert_relative_eq!(trapezoid_max_long_side(2.0, 0.2).unwrap().value, 2.0 * b.value);
        // asymptotically M/t
        assert_relative_eq!(trapezoid_max_long_side(1.0, 0.01).unwrap().value, 100.0, max_relative = 5e-2);
        assert!(trapezoid_max_long_side(1.0, SQRT_2 - 1.0).is_err());
        assert!(trapezoid_max_long_side(1.0, 0.5).is_err());
    }

    #[test]
    fn icecream_profile_values() {
        assert_relative_eq!(icecream_t_of_phi(PI / 2.0).unwrap(), 7.713664849949054, max_relative = 1e-12);
        assert_relative_eq!(icecream_t_of_phi(0.0).unwrap(), 3.5670024675642265, max_relative = 1e-12);
        assert!(icecream_t_of_phi(-0.1).is_err());
    }

    #[test]
    fn icecream_tstar_in_reported_interval() {
        let t = icecream_tstar(1e-8).unwrap();
        assert!(t > 1.63 && t < 1.65, "t* = {t}");
        assert_relative_eq!(t, 1.640715423478965, max_relative = 1e-7);
        // the profile never dips below the minimum
        assert!(icecream_profile_min(4096) >= t - 1e-9);
    }

    #[test]
    fn icecream_apex_binds_the_pair_criterion() {
        // at the optimal apex the worst G1 over the boundary circle is zero:
        // the profile minimum translates into a tight pair constraint
        let t = icecream_tstar(1e-10).unwrap();
        let apex = Complex::new(1.0 + t, 0.0);
        let worst = |f: &dyn Fn(f64) -> f64| {
            let n = 4096;
            (0..n).map(|k| f(TAU * k as f64 / n as f64)).fold(f64::NEG_INFINITY, f64::max)
        };
        let g1_at = |psi: f64| {
            let p = Complex::new(1.0, 0.0)
                + Complex::from_polar(0.5, psi - std::f64::consts::FRAC_PI_4);
            g_criteria(p, apex).0
        };
        let max_g1 = worst(&g1_at);
        assert!(max_g1 <= 1e-9 && max_g1 > -1e-6, "max G1 = {max_g1}");
    }

    #[test]
    fn necessary_box_values() {
        let b = necessary_box(Complex::new(1.0, 1.0)).unwrap();
        assert_relative_eq!(b.hi, 17.94427190999916, max_relative = 1e-12);
        assert_relative_eq!(b.lo, 1.0 / 17.94427190999916, max_relative = 1e-12);
        assert!(!b.degenerate);

        // invariant under conjugation
        let bc = necessary_box(Complex::new(1.0, -1.0)).unwrap();
        assert_eq!(b.hi, bc.hi);

        let d = necessary_box(Complex::new(0.0, 1.0)).unwrap();
        assert_relative_eq!(d.hi, 5.82842712474619, max_relative = 1e-12);
        assert!(d.degenerate);

        assert!(necessary_box(Complex::new(2.0, 0.0)).is_err());
    }

    #[test]
    fn builtin_catalog() {
        let no_params = BTreeMap::new();
        let disk = builtin_region("barvinok-disk", &no_params).unwrap();
        assert_eq!(disk, Region::disk(Complex::new(1.0, 0.0), 0.5).unwrap());

        let quad = builtin_region("example-quadrilateral", &no_params).unwrap();
        match quad {
            Region::Polygon(p) => assert_eq!(p.len(), 4),
            _ => panic!("expected polygon"),
        }

        let mut params = BTreeMap::new();
        params.insert("a".to_string(), 1.0);
        params.insert("b".to_string(), interval_max_ratio());
        let iv = builtin_region("interval", &params).unwrap();
        assert_eq!(iv, Region::interval(1.0, interval_max_ratio()).unwrap());

        assert!(builtin_region("no-such-region", &no_params).is_err());
    }

    #[test]
    fn icecream_cone_builtin_certifies() {
        let cone = builtin_region("icecream-cone", &BTreeMap::new()).unwrap();
        let pts = crate::geom::boundary_discretize(&cone, 96).unwrap();
        let rep = certify_b2(&pts, 1e-9).unwrap();
        assert!(rep.is_certified(), "worst = {}", rep.worst_value);
    }
}
