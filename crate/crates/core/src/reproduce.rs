//! End-to-end example pipelines with pass/fail reporting against the
//! reference constants. The CLI `reproduce` subcommand and the acceptance
//! suite both run these.

use crate::criteria::{certify_a2, certify_b2, oracle_certify, AngleParams, DEFAULT_ORACLE_GRID};
use crate::error::{Error, Result};
use crate::geom::{boundary_discretize, Complex, Region};
use crate::maximality::{disk_h, mu_with_witness};
use crate::regions::{example_quadrilateral, icecream_tstar, interval_max_ratio, two_point_region_contains, RatioPoint};
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::{PI, TAU};
use std::time::Instant;

/// Named example pipelines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExampleId {
    Quadrilateral,
    Icecream,
    Interval,
    TwoPointFigure,
    DiskMaximality,
}

impl ExampleId {
    pub const ALL: [ExampleId; 5] = [
        ExampleId::Quadrilateral,
        ExampleId::Icecream,
        ExampleId::Interval,
        ExampleId::TwoPointFigure,
        ExampleId::DiskMaximality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExampleId::Quadrilateral => "quadrilateral",
            ExampleId::Icecream => "icecream",
            ExampleId::Interval => "interval",
            ExampleId::TwoPointFigure => "two-point-figure",
            ExampleId::DiskMaximality => "disk-maximality",
        }
    }
}

impl std::str::FromStr for ExampleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ExampleId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownBuiltin(s.to_string()))
    }
}

/// One verified statement of a pipeline.
#[derive(Debug, Clone, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

/// Pipeline outcome; `passed` iff every check passed.
#[derive(Debug, Clone, Serialize)]
pub struct ReproduceReport {
    pub id: String,
    pub checks: Vec<CheckLine>,
    pub elapsed_ms: f64,
}

impl ReproduceReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn check(name: &str, passed: bool, details: String) -> CheckLine {
    CheckLine { name: name.to_string(), passed, details }
}

/// Runs the pipeline for `id` with the library defaults.
pub fn run_example(id: ExampleId) -> ReproduceReport {
    let start = Instant::now();
    let checks = match id {
        ExampleId::Quadrilateral => quadrilateral_checks(),
        ExampleId::Icecream => icecream_checks(),
        ExampleId::Interval => interval_checks(),
        ExampleId::TwoPointFigure => two_point_figure_checks(),
        ExampleId::DiskMaximality => disk_maximality_checks(),
    };
    ReproduceReport {
        id: id.name().to_string(),
        checks,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

fn quadrilateral_checks() -> Vec<CheckLine> {
    let tol = 1e-9;
    let quad = example_quadrilateral();
    let start = Instant::now();
    let a2 = certify_a2(quad.vertices(), tol).expect("vertices are in C*");
    let b2 = certify_b2(quad.vertices(), tol).expect("vertices are in C*");
    let mut perturbed = quad.vertices().to_vec();
    perturbed[2] += Complex::new(1e-3, 0.0);
    let refuted = certify_b2(&perturbed, tol).expect("vertices are in C*");
    let elapsed = start.elapsed().as_secs_f64();

    vec![
        check("a2-certified", a2.is_certified(), format!("worst F = {:.3e}", a2.worst_value)),
        check("b2-certified", b2.is_certified(), format!("worst G = {:.3e}", b2.worst_value)),
        check(
            "perturbed-apex-refuted",
            !refuted.is_certified(),
            format!("worst G = {:.3e} after apex + 1e-3", refuted.worst_value),
        ),
        check("runtime-under-100ms", elapsed < 0.1, format!("{:.1} ms", elapsed * 1e3)),
    ]
}

fn icecream_checks() -> Vec<CheckLine> {
    let tol = 1e-9;
    let start = Instant::now();
    let tstar = icecream_tstar(1e-8).expect("profile radicand is positive");
    let disk = Region::disk(Complex::new(1.0, 0.0), 0.5).expect("off-origin disk");
    let mut below = boundary_discretize(&disk, 128).expect("disk discretizes");
    let mut above = below.clone();
    below.push(Complex::new(1.0 + tstar - 1e-6, 0.0));
    above.push(Complex::new(1.0 + tstar + 1e-2, 0.0));
    let cert_below = certify_b2(&below, tol).expect("points in C*");
    let cert_above = certify_b2(&above, tol).expect("points in C*");
    let elapsed = start.elapsed().as_secs_f64();

    vec![
        check("tstar-in-interval", (1.63..=1.65).contains(&tstar), format!("t* = {tstar:.8}")),
        check(
            "below-optimum-certified",
            cert_below.is_certified(),
            format!("worst = {:.3e} at apex offset t* - 1e-6", cert_below.worst_value),
        ),
        check(
            "above-optimum-refuted",
            !cert_above.is_certified(),
            format!("worst = {:.3e} at apex offset t* + 1e-2", cert_above.worst_value),
        ),
        check("runtime-under-1s", elapsed < 1.0, format!("{:.1} ms", elapsed * 1e3)),
    ]
}

fn interval_checks() -> Vec<CheckLine> {
    let tol = 1e-9;
    let member = |r: f64| {
        certify_b2(&[Complex::new(1.0, 0.0), Complex::new(r, 0.0)], tol)
            .expect("positive reals are in C*")
            .is_certified()
    };
    let mut lo = 1.0;
    let mut hi = 10.0;
    while hi - lo > 1e-8 {
        let mid = 0.5 * (lo + hi);
        if member(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let expected = interval_max_ratio();
    vec![check(
        "bisection-converges",
        (lo - expected).abs() < 1e-6,
        format!("r = {lo:.9}, 3 + 2*sqrt(2) = {expected:.9}"),
    )]
}

fn two_point_figure_checks() -> Vec<CheckLine> {
    let start = Instant::now();
    let n = 200;
    let band = 1e-4;
    let angles = AngleParams::right_angles();

    let rows: Vec<(usize, usize, usize)> = (0..n)
        .into_par_iter()
        .map(|i| {
            let x = 3.0 * (i + 1) as f64 / n as f64;
            let mut agree = 0;
            let mut banded = 0;
            let mut disagree = 0;
            for j in 0..n {
                let y = -3.0 + 6.0 * j as f64 / (n - 1) as f64;
                let member = two_point_region_contains(RatioPoint::new(x, y));
                let stable = [(band, 0.0), (-band, 0.0), (0.0, band), (0.0, -band)]
                    .iter()
                    .all(|&(dx, dy)| two_point_region_contains(RatioPoint::new(x + dx, y + dy)) == member);
                if !stable {
                    banded += 1;
                    continue;
                }
                let pts = [Complex::new(1.0, 0.0), Complex::new(x, y)];
                let report = oracle_certify(&pts, angles, DEFAULT_ORACLE_GRID, 1e-6)
                    .expect("grid points are in C*");
                if report.is_certified() == member {
                    agree += 1;
                } else {
                    disagree += 1;
                }
            }
            (agree, banded, disagree)
        })
        .collect();

    let agree: usize = rows.iter().map(|r| r.0).sum();
    let banded: usize = rows.iter().map(|r| r.1).sum();
    let disagree: usize = rows.iter().map(|r| r.2).sum();
    let elapsed = start.elapsed().as_secs_f64();

    vec![
        check(
            "grid-agreement",
            disagree == 0,
            format!("{agree} agree, {banded} inside the 1e-4 band, {disagree} disagree of {}", n * n),
        ),
        check("runtime-under-30s", elapsed < 30.0, format!("{elapsed:.2} s")),
    ]
}

fn disk_maximality_checks() -> Vec<CheckLine> {
    let n = 512;
    let zeros = [(-3.0 * PI / 4.0, 3.0 * PI / 4.0), (3.0 * PI / 4.0, -3.0 * PI / 4.0)];
    let torus_dist = |a: f64, b: f64| {
        let d = (a - b).rem_euclid(TAU);
        d.min(TAU - d)
    };

    let mut max_h = f64::NEG_INFINITY;
    let mut stray = 0usize;
    for i in 0..n {
        let u = TAU * i as f64 / n as f64;
        for j in 0..n {
            let v = TAU * j as f64 / n as f64;
            let h = disk_h(u, v);
            max_h = max_h.max(h);
            if h >= -1e-9 {
                let near = zeros
                    .iter()
                    .any(|&(zu, zv)| torus_dist(u, zu).hypot(torus_dist(v, zv)) <= 1e-2);
                if !near {
                    stray += 1;
                }
            }
        }
    }

    let disk = Region::disk(Complex::new(1.0, 0.0), 0.5).expect("off-origin disk");
    let sample = disk.to_polygon(128).expect("disk polygonizes");
    let (mu_val, witness) = mu_with_witness(&sample, Complex::new(0.5, 0.0)).expect("1/2 is in C*");
    // the binding quadruple is (1/2; 1 + i/2, 1 - i/2, 1/2) up to the F
    // symmetry and discretization rounding
    let expected_witness =
        [Complex::new(1.0, 0.5), Complex::new(1.0, -0.5), Complex::new(0.5, 0.0)];
    let witness_ok = expected_witness
        .iter()
        .all(|e| witness.iter().any(|w| (w - e).norm() < 1e-9));

    vec![
        check("h-grid-max-zero", max_h.abs() <= 1e-9, format!("max H = {max_h:.3e} on {n}x{n}")),
        check("h-zeros-localized", stray == 0, format!("{stray} near-zero points away from the two optima")),
        check("mu-at-half", mu_val.abs() <= 1e-9, format!("mu = {mu_val:.3e}")),
        check(
            "mu-witness",
            witness_ok,
            format!("witness ({:.2}, {:.2}, {:.2}, {:.2})", 0.5, witness[0], witness[1], witness[2]),
        ),
    ]
}
