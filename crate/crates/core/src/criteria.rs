//! Membership criteria for angle-restricted sets and the certification
//! semantics that lifts vertex checks to whole convex regions.
//!
//! `certify_a2` / `certify_b2` evaluate the exact quadratic criteria for the
//! right-angle case; `two_point_theta` covers two-point sets at general
//! theta; `mobius_arg_sup` is the independent numeric oracle everything else
//! is tested against. Certifying the vertices of a convex polygon certifies
//! the whole polygon, which is then a zero-free region for the permanent.

use crate::error::{Error, Result};
use crate::geom::{angle_between, ensure_in_cstar, to_rotated, Complex};
use crate::search::golden_max;
use crate::wire;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

/// Angle pair (theta, phi); both restricted to the open interval (0, 2*pi/3).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleParams {
    pub theta: f64,
    pub phi: f64,
}

const ANGLE_MAX: f64 = 2.0 * std::f64::consts::FRAC_PI_3;

fn ensure_angle(x: f64) -> Result<()> {
    if x > 0.0 && x < ANGLE_MAX {
        Ok(())
    } else {
        Err(Error::AngleDomain)
    }
}

impl AngleParams {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        ensure_angle(theta)?;
        ensure_angle(phi)?;
        Ok(AngleParams { theta, phi })
    }

    /// The permanent case: theta = phi = pi/2.
    pub fn right_angles() -> Self {
        AngleParams { theta: FRAC_PI_2, phi: FRAC_PI_2 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Certified,
    Refuted,
}

/// Which test produced a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Criterion {
    #[serde(rename = "F")]
    FQuadruple,
    #[serde(rename = "G")]
    GPair,
    #[serde(rename = "two-point")]
    TwoPointTheta,
    #[serde(rename = "oracle")]
    Oracle,
}

/// Outcome of a certification sweep.
///
/// `verdict` is `Certified` iff `worst_value <= tolerance`, and `witness`
/// attains `worst_value`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificationReport {
    pub verdict: Verdict,
    pub criterion: Criterion,
    #[serde(rename = "worst")]
    pub worst_value: f64,
    #[serde(with = "wire::complex_pairs")]
    pub witness: Vec<Complex>,
    #[serde(rename = "tol")]
    pub tolerance: f64,
    #[serde(rename = "checked")]
    pub tuples_checked: u64,
}

impl CertificationReport {
    pub fn is_certified(&self) -> bool {
        self.verdict == Verdict::Certified
    }

    fn from_sweep(criterion: Criterion, worst: f64, witness: Vec<Complex>, tol: f64, checked: u64) -> Self {
        CertificationReport {
            verdict: if worst <= tol { Verdict::Certified } else { Verdict::Refuted },
            criterion,
            worst_value: worst,
            witness,
            tolerance: tol,
            tuples_checked: checked,
        }
    }
}

/// The quadruple criterion
/// `F(a,b,c,d) = Im(a*conj(d) - b*conj(c))^2 - 4*Re(a*conj(c))*Re(b*conj(d))`.
///
/// A set is right-angle restricted (n = 2) iff F <= 0 on all its quadruples.
/// F is invariant under the three index swaps (b,a,d,c), (c,d,a,b),
/// (d,c,b,a), and scales as |lambda|^4 under a common complex rescaling.
#[inline]
pub fn f_criterion(a: Complex, b: Complex, c: Complex, d: Complex) -> f64 {
    let im = (a * d.conj() - b * c.conj()).im;
    im * im - 4.0 * (a * c.conj()).re * (b * d.conj()).re
}

/// The pair criteria in pi/4-rotated coordinates:
/// `G1 = (a2-b2)^2 - 4*a1*b1`, `G2 = (a1-b1)^2 - 4*a2*b2`.
///
/// Together with `|arg| <= pi/4` these characterize the normalized-map
/// variant of the right-angle restriction; both covary as r^2 under
/// rescaling by a positive real r.
#[inline]
pub fn g_criteria(a: Complex, b: Complex) -> (f64, f64) {
    let ra = to_rotated(a);
    let rb = to_rotated(b);
    let g1 = (ra.c2 - rb.c2) * (ra.c2 - rb.c2) - 4.0 * ra.c1 * rb.c1;
    let g2 = (ra.c1 - rb.c1) * (ra.c1 - rb.c1) - 4.0 * ra.c2 * rb.c2;
    (g1, g2)
}

/// Necessary pair condition for membership at `angles`:
/// `alpha(a,b) < pi - theta` (strict) and `alpha(a,b) <= phi`.
///
/// Used to fail fast before quadruple sweeps.
pub fn pair_prefilter(a: Complex, b: Complex, angles: AngleParams) -> Result<bool> {
    let alpha = angle_between(a, b)?;
    Ok(alpha < std::f64::consts::PI - angles.theta && alpha <= angles.phi)
}

fn validate_points(points: &[Complex]) -> Result<()> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    for &p in points {
        ensure_in_cstar(p)?;
    }
    Ok(())
}

fn validate_tol(tol: f64) -> Result<()> {
    if tol >= 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::ParameterDomain("tolerance must be finite and >= 0"))
    }
}

/// True when `(i,j,k,l)` is the lexicographically smallest member of its
/// orbit under the F symmetry group, so each orbit is evaluated once.
#[inline]
fn canonical(i: usize, j: usize, k: usize, l: usize) -> bool {
    let t = (i, j, k, l);
    t <= (j, i, l, k) && t <= (k, l, i, j) && t <= (l, k, j, i)
}

/// Max of F over the quadruples of `points[set]` with every index quadruple
/// reduced by the 4-fold symmetry; returns (worst, witness, evaluations).
fn f_sweep(points: &[Complex]) -> (f64, [usize; 4], u64) {
    let m = points.len();
    (0..m)
        .into_par_iter()
        .map(|i| {
            let mut worst = f64::NEG_INFINITY;
            let mut wit = [usize::MAX; 4];
            let mut evals = 0u64;
            for j in 0..m {
                for k in 0..m {
                    for l in 0..m {
                        if !canonical(i, j, k, l) {
                            continue;
                        }
                        let f = f_criterion(points[i], points[j], points[k], points[l]);
                        evals += 1;
                        if f > worst || (f == worst && [i, j, k, l] < wit) {
                            worst = f;
                            wit = [i, j, k, l];
                        }
                    }
                }
            }
            (worst, wit, evals)
        })
        .reduce(
            || (f64::NEG_INFINITY, [usize::MAX; 4], 0),
            |a, b| {
                let evals = a.2 + b.2;
                if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
                    (b.0, b.1, evals)
                } else {
                    (a.0, a.1, evals)
                }
            },
        )
}

/// Certifies a point set for the right-angle quadruple criterion.
///
/// Certified iff `max F <= tol` over all quadruples (with repetition). When
/// the points are the vertices of a convex polygon this certifies the whole
/// polygon, hence a zero-free region for the permanent. A pair that already
/// fails the angle prefilter short-circuits the sweep: the report then
/// carries the worst F over that pair's own quadruples (always positive).
pub fn certify_a2(points: &[Complex], tol: f64) -> Result<CertificationReport> {
    validate_points(points)?;
    validate_tol(tol)?;

    let right = AngleParams::right_angles();
    for (i, &a) in points.iter().enumerate() {
        for &b in &points[i + 1..] {
            if !pair_prefilter(a, b, right)? {
                let pair = [a, b];
                let (worst, wit, evals) = f_sweep(&pair);
                let witness = wit.iter().map(|&x| pair[x]).collect();
                return Ok(CertificationReport::from_sweep(
                    Criterion::FQuadruple,
                    worst,
                    witness,
                    tol,
                    evals,
                ));
            }
        }
    }

    let (worst, wit, evals) = f_sweep(points);
    let witness = wit.iter().map(|&x| points[x]).collect();
    Ok(CertificationReport::from_sweep(Criterion::FQuadruple, worst, witness, tol, evals))
}

/// Certifies a point set for the pair criterion: every point within pi/4 of
/// the positive axis (worst value `|arg| - pi/4`) and G1, G2 <= tol on every
/// pair. Implies the quadruple certification at the same tolerance.
pub fn certify_b2(points: &[Complex], tol: f64) -> Result<CertificationReport> {
    validate_points(points)?;
    validate_tol(tol)?;

    let mut worst = f64::NEG_INFINITY;
    let mut witness: Vec<Complex> = Vec::new();
    let mut checked = 0u64;
    for &p in points {
        let excess = p.arg().abs() - FRAC_PI_4;
        checked += 1;
        if excess > worst {
            worst = excess;
            witness = vec![p];
        }
    }
    for (i, &a) in points.iter().enumerate() {
        for &b in &points[i..] {
            let (g1, g2) = g_criteria(a, b);
            checked += 1;
            let g = g1.max(g2);
            if g > worst {
                worst = g;
                witness = vec![a, b];
            }
        }
    }
    Ok(CertificationReport::from_sweep(Criterion::GPair, worst, witness, tol, checked))
}

/// Exact two-point membership test at angles `(theta, pi/2)`.
///
/// Writing `b/a = x + i*y`, the set `{a, b}` belongs iff `x >= 0`, the bound
/// `|y| <= (2*sqrt(x) + (x+1)*cos(theta)) / sin(theta)` holds for `b/a` and
/// for `a/b`, and — when `theta > pi/2` — additionally
/// `(x + 1/cos(theta))^2 + y^2 <= tan(theta)^2`.
pub fn two_point_theta(a: Complex, b: Complex, theta: f64) -> Result<bool> {
    ensure_in_cstar(a)?;
    ensure_in_cstar(b)?;
    ensure_angle(theta)?;

    // at exactly pi/2 use the exact (sin, cos) so the closed form matches
    // the two-point region test bit for bit
    let (sin_t, cos_t) = if theta == FRAC_PI_2 { (1.0, 0.0) } else { (theta.sin(), theta.cos()) };

    let w = b / a;
    let (x, y) = (w.re, w.im);
    if !(x >= 0.0) {
        return Ok(false);
    }
    let bound = |x: f64, y: f64| y.abs() <= (2.0 * x.sqrt() + (x + 1.0) * cos_t) / sin_t;

    let inv = 1.0 / w; // a/b, the swapped ratio
    let mut ok = bound(x, y) && bound(inv.re, inv.im);
    if theta > FRAC_PI_2 {
        let s = x + 1.0 / cos_t;
        let tan_t = sin_t / cos_t;
        ok = ok && s * s + y * y <= tan_t * tan_t;
    }
    Ok(ok)
}

/// Default logarithmic r-grid resolution for [`mobius_arg_sup`].
pub const DEFAULT_ORACLE_GRID: usize = 256;

const ORACLE_R_MIN: f64 = 1e-6;
const ORACLE_R_MAX: f64 = 1e6;
/// Relative zero/pole detection threshold on the boundary scan.
const POLE_TOL: f64 = 1e-12;

/// Numeric supremum of `|arg((a*z + b)/(c*z + d))|` over the closed angle
/// `|arg z| <= theta`, reduced to the boundary rays `z = r*exp(±i*theta)`
/// with the limits `r -> 0` (value `arg(b/d)`) and `r -> infinity`
/// (value `arg(a/c)`) included.
///
/// Returns `+inf` when a zero or pole of the map lies in the closed angle —
/// 0 and infinity are admitted only as the limit values. The scan is a
/// `grid`-point logarithmic sweep of `r` in `[1e-6, 1e6]` per ray followed by
/// golden-section refinement of every local-maximum bracket (to 1e-10
/// relative in r). This oracle is kept independent of the closed-form
/// criteria it validates.
pub fn mobius_arg_sup(a: Complex, b: Complex, c: Complex, d: Complex, theta: f64, grid: usize) -> Result<f64> {
    for z in [a, b, c, d] {
        ensure_in_cstar(z)?;
    }
    ensure_angle(theta)?;
    if grid < 16 {
        return Err(Error::ParameterDomain("oracle grid must be at least 16"));
    }

    // zero at -b/a, pole at -d/c; either inside the closed angle means the
    // image leaves every target angle
    if (-(b / a)).arg().abs() <= theta || (-(d / c)).arg().abs() <= theta {
        return Ok(f64::INFINITY);
    }

    let mut best = (b / d).arg().abs().max((a / c).arg().abs());
    let u_lo = ORACLE_R_MIN.ln();
    let u_hi = ORACLE_R_MAX.ln();
    let du = (u_hi - u_lo) / (grid - 1) as f64;

    for sign in [1.0, -1.0] {
        let dir = Complex::from_polar(1.0, sign * theta);
        let eval = |u: f64| -> f64 {
            let r = u.exp();
            let z = dir * r;
            let num = a * z + b;
            let den = c * z + d;
            if num.norm() < POLE_TOL * (a.norm() * r + b.norm())
                || den.norm() < POLE_TOL * (c.norm() * r + d.norm())
            {
                return f64::INFINITY;
            }
            (num / den).arg().abs()
        };

        let vals: Vec<f64> = (0..grid).map(|k| eval(u_lo + du * k as f64)).collect();
        for (k, &v) in vals.iter().enumerate() {
            if v.is_infinite() {
                return Ok(f64::INFINITY);
            }
            best = best.max(v);
            let left = if k > 0 { vals[k - 1] } else { f64::NEG_INFINITY };
            let right = if k + 1 < grid { vals[k + 1] } else { f64::NEG_INFINITY };
            // refine strict-ish local maxima; plateaus refine at their edges
            if (v > left && v >= right) || (v >= left && v > right) {
                let lo = u_lo + du * k.saturating_sub(1) as f64;
                let hi = u_lo + du * ((k + 1).min(grid - 1)) as f64;
                let (_, refined) = golden_max(eval, lo, hi, 1e-10);
                best = best.max(refined);
            }
        }
    }
    Ok(best)
}

/// The finite point set that stands in for a region in vertex-only
/// certifications: polygon vertices (checking them certifies the hull),
/// interval/rectangle/trapezoid corners, and for smooth regions a boundary
/// discretization of `samples` points plus the distinguished landmarks.
pub fn certification_points(region: &crate::geom::Region, samples: usize) -> Result<Vec<Complex>> {
    use crate::geom::{boundary_discretize, convex_hull, Region};
    match region {
        Region::Polygon(p) => Ok(p.vertices().to_vec()),
        Region::Points(values) => Ok(values.clone()),
        Region::Interval { a, b } => Ok(vec![Complex::new(*a, 0.0), Complex::new(*b, 0.0)]),
        Region::Rectangle { .. } | Region::Trapezoid { .. } => {
            Ok(region.to_polygon(4)?.vertices().to_vec())
        }
        Region::Disk { .. } | Region::Cone { .. } => {
            let mut pts = boundary_discretize(region, samples.max(8))?;
            pts.extend(region.distinguished_points());
            let hull = convex_hull(&pts)?;
            Ok(hull.vertices().to_vec())
        }
    }
}

/// Numeric certification of a finite set at general `(theta, phi)` via the
/// Möbius oracle: certified iff `sup - phi <= tol` over all quadruples
/// (orbit-reduced; the sup is invariant under the F symmetry group). This is
/// the only general-angle route the criteria expose.
pub fn oracle_certify(points: &[Complex], angles: AngleParams, grid: usize, tol: f64) -> Result<CertificationReport> {
    validate_points(points)?;
    validate_tol(tol)?;

    for (i, &a) in points.iter().enumerate() {
        for &b in &points[i + 1..] {
            if !pair_prefilter(a, b, angles)? {
                // necessary condition failed: the pair itself refutes
                let sup = mobius_arg_sup(a, b, a, a, angles.theta, grid)?;
                return Ok(CertificationReport::from_sweep(
                    Criterion::Oracle,
                    sup - angles.phi,
                    vec![a, b, a, a],
                    tol,
                    1,
                ));
            }
        }
    }

    let m = points.len();
    let quads: Vec<[usize; 4]> = (0..m)
        .flat_map(|i| (0..m).map(move |j| (i, j)))
        .flat_map(|(i, j)| (0..m).map(move |k| (i, j, k)))
        .flat_map(|(i, j, k)| (0..m).map(move |l| [i, j, k, l]))
        .filter(|&[i, j, k, l]| canonical(i, j, k, l))
        .collect();

    let results: Vec<f64> = quads
        .par_iter()
        .map(|&[i, j, k, l]| {
            mobius_arg_sup(points[i], points[j], points[k], points[l], angles.theta, grid)
                .expect("points validated")
        })
        .collect();

    let mut worst = f64::NEG_INFINITY;
    let mut wit = [0usize; 4];
    for (q, &sup) in quads.iter().zip(&results) {
        if sup > worst {
            worst = sup;
            wit = *q;
        }
    }
    let witness = wit.iter().map(|&x| points[x]).collect();
    Ok(CertificationReport::from_sweep(
        Criterion::Oracle,
        worst - angles.phi,
        witness,
        tol,
        quads.len() as u64,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::SQRT_2;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn quadrilateral() -> Vec<Complex> {
        vec![c(0.5, 0.0), c(1.0, -0.5), c(1.5 + SQRT_2, 0.0), c(1.0, 0.5)]
    }

    #[test]
    fn f_all_ones() {
        assert_eq!(f_criterion(c(1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)), -4.0);
    }

    #[test]
    fn f_imaginary_offset_is_t_squared() {
        // F(1, i*t, 1, 1) = t^2
        for t in [0.3, 1.0, 2.5] {
            assert_relative_eq!(f_criterion(c(1.0, 0.0), c(0.0, t), c(1.0, 0.0), c(1.0, 0.0)), t * t);
        }
    }

    #[test]
    fn f_boundary_quadruple_is_zero() {
        assert_eq!(f_criterion(c(0.5, 0.0), c(1.0, 0.5), c(1.0, -0.5), c(0.5, 0.0)), 0.0);
    }

    #[test]
    fn g_at_one_one() {
        let (g1, g2) = g_criteria(c(1.0, 0.0), c(1.0, 0.0));
        assert_relative_eq!(g1, -2.0, max_relative = 1e-14);
        assert_relative_eq!(g2, -2.0, max_relative = 1e-14);
    }

    #[test]
    fn g_interval_boundary_ratio() {
        // both G values vanish at the extreme interval ratio: for positive
        // real inputs the rotated coordinates coincide, so G1 == G2
        let (g1, g2) = g_criteria(c(1.0, 0.0), c(3.0 + 2.0 * SQRT_2, 0.0));
        assert!(g1.abs() < 1e-12, "G1 = {g1}");
        assert!(g2.abs() < 1e-12, "G2 = {g2}");
    }

    #[test]
    fn g_disk_boundary_pair() {
        let (g1, g2) = g_criteria(c(0.5, 0.0), c(1.0, 0.5));
        assert!(g1.abs() < 1e-12, "G1 = {g1}");
        assert_relative_eq!(g2, -1.5, max_relative = 1e-13);
    }

    #[test]
    fn prefilter_examples() {
        let right = AngleParams::right_angles();
        assert!(!pair_prefilter(c(1.0, 0.0), c(0.0, 1.0), right).unwrap());
        let e = Complex::from_polar(1.0, FRAC_PI_4);
        assert!(pair_prefilter(c(1.0, 0.0), e, right).unwrap());
        assert!(!pair_prefilter(c(1.0, 0.0), c(-1.0, 0.0), right).unwrap());
    }

    #[test]
    fn certify_a2_single_point() {
        let rep = certify_a2(&[c(1.0, 0.0)], 0.0).unwrap();
        assert!(rep.is_certified());
        assert_eq!(rep.worst_value, -4.0);
        assert_eq!(rep.tuples_checked, 1);
    }

    #[test]
    fn certify_a2_quadrilateral() {
        let rep = certify_a2(&quadrilateral(), 1e-12).unwrap();
        assert!(rep.is_certified());
        assert!(rep.worst_value.abs() <= 1e-12, "worst = {}", rep.worst_value);
    }

    #[test]
    fn certify_a2_refutes_orthogonal_pair() {
        let rep = certify_a2(&[c(1.0, 0.0), c(0.0, 1.0)], 1e-9).unwrap();
        assert_eq!(rep.verdict, Verdict::Refuted);
        assert_relative_eq!(rep.worst_value, 1.0);
        // the witness is an orbit representative of (1, i, 1, 1)
        assert_relative_eq!(
            f_criterion(rep.witness[0], rep.witness[1], rep.witness[2], rep.witness[3]),
            rep.worst_value
        );
        let ones = rep.witness.iter().filter(|w| **w == c(1.0, 0.0)).count();
        assert_eq!(ones, 3);
    }

    #[test]
    fn certify_b2_examples() {
        assert!(certify_b2(&[c(1.0, 0.0)], 0.0).unwrap().is_certified());
        let mut pts = quadrilateral();
        assert!(certify_b2(&pts, 1e-12).unwrap().is_certified());
        pts.push(c(1.0, 2.0));
        // arg(1 + 2i) > pi/4 refutes; the recorded worst is the larger
        // G violation against the same point
        let rep = certify_b2(&pts, 1e-9).unwrap();
        assert_eq!(rep.verdict, Verdict::Refuted);
        assert!(rep.worst_value > c(1.0, 2.0).arg() - FRAC_PI_4);
        assert!(c(1.0, 2.0).arg() > FRAC_PI_4);
    }

    #[test]
    fn b2_perturbed_apex_refuted_but_a2_still_certifies() {
        // the apex binds the pair criterion only: pushing it out by 1e-3
        // breaks G1(1/2, apex) while the F sweep's maximum stays at the
        // all-disk quadruple's exact zero
        let mut pts = quadrilateral();
        pts[2] += c(1e-3, 0.0);
        assert_eq!(certify_b2(&pts, 1e-9).unwrap().verdict, Verdict::Refuted);
        assert_eq!(certify_a2(&pts, 1e-9).unwrap().verdict, Verdict::Certified);
    }

    #[test]
    fn certify_rejects_bad_input() {
        assert!(matches!(certify_a2(&[], 0.0), Err(Error::EmptyInput)));
        assert!(matches!(certify_a2(&[c(0.0, 0.0)], 0.0), Err(Error::ZeroInput)));
        assert!(certify_a2(&[c(1.0, 0.0)], -1.0).is_err());
    }

    #[test]
    fn two_point_theta_examples() {
        for theta in [0.3, FRAC_PI_2, 1.9] {
            assert!(two_point_theta(c(1.0, 0.0), c(1.0, 0.0), theta).unwrap());
        }
        assert!(two_point_theta(c(1.0, 0.0), c(1.0, 1.0), FRAC_PI_2).unwrap());
        assert!(!two_point_theta(c(1.0, 0.0), c(0.0, 1.0), FRAC_PI_2).unwrap());
        assert!(two_point_theta(c(0.0, 0.0), c(1.0, 0.0), FRAC_PI_2).is_err());
        assert!(two_point_theta(c(1.0, 0.0), c(1.0, 0.0), ANGLE_MAX).is_err());
    }

    #[test]
    fn oracle_identity_map() {
        let one = c(1.0, 0.0);
        let sup = mobius_arg_sup(one, one, one, one, FRAC_PI_2, DEFAULT_ORACLE_GRID).unwrap();
        assert!(sup.abs() < 1e-12);
    }

    #[test]
    fn oracle_boundary_quadruple_attains_right_angle() {
        let sup = mobius_arg_sup(c(0.5, 0.0), c(1.0, 0.5), c(1.0, -0.5), c(0.5, 0.0), FRAC_PI_2, DEFAULT_ORACLE_GRID)
            .unwrap();
        assert_relative_eq!(sup, FRAC_PI_2, epsilon = 1e-6);
    }

    #[test]
    fn oracle_detects_violating_quadruple() {
        // F(1, i, 1, 1) = 1 > 0: the zero of z + i sits on the boundary ray
        let sup = mobius_arg_sup(c(1.0, 0.0), c(0.0, 1.0), c(1.0, 0.0), c(1.0, 0.0), FRAC_PI_2, DEFAULT_ORACLE_GRID)
            .unwrap();
        assert!(sup > FRAC_PI_2);
    }

    #[test]
    fn oracle_certify_matches_closed_form() {
        let report = oracle_certify(&quadrilateral(), AngleParams::right_angles(), 64, 1e-6).unwrap();
        assert!(report.is_certified(), "worst = {}", report.worst_value);

        let refuted = oracle_certify(&[c(1.0, 0.0), c(0.0, 1.0)], AngleParams::right_angles(), 64, 1e-6).unwrap();
        assert_eq!(refuted.verdict, Verdict::Refuted);
    }

    #[test]
    fn report_json_shape() {
        let rep = certify_a2(&[c(1.0, 0.0)], 1e-9).unwrap();
        let js = serde_json::to_value(&rep).unwrap();
        assert_eq!(js["verdict"], "certified");
        assert_eq!(js["criterion"], "F");
        assert_eq!(js["worst"], -4.0);
        assert_eq!(js["witness"][0], serde_json::json!([1.0, 0.0]));
        assert_eq!(js["tol"], 1e-9);
        assert_eq!(js["checked"], 1);
    }
}
