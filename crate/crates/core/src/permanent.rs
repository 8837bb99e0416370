//! Exact permanents and randomized verification that certified regions
//! really produce nonvanishing permanents.

use crate::error::{Error, Result};
use crate::geom::{ensure_finite, Complex, ConvexPolygon, Region};
use crate::wire;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Largest dimension the exact kernel accepts (2^n subsets).
pub const MAX_EXACT_N: usize = 14;

/// A dense square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SquareMatrix {
    n: usize,
    #[serde(with = "wire::complex_pairs")]
    entries: Vec<Complex>,
}

impl SquareMatrix {
    pub fn new(n: usize, entries: Vec<Complex>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ParameterDomain("matrix dimension must be at least 1"));
        }
        if entries.len() != n * n {
            return Err(Error::MatrixShape { n, got: entries.len() });
        }
        for &e in &entries {
            ensure_finite(e)?;
        }
        Ok(SquareMatrix { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Complex] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> Complex {
        self.entries[row * self.n + col]
    }

    pub fn max_entry_norm(&self) -> f64 {
        self.entries.iter().map(|e| e.norm()).fold(0.0, f64::max)
    }
}

/// Exact permanent by inclusion-exclusion over column subsets, walked in
/// Gray-code order so each step updates the row sums by a single column:
/// `per(A) = (-1)^n * sum_{S != {}} (-1)^|S| prod_i sum_{j in S} a_ij`.
/// O(n * 2^n); guarded at n <= 14.
pub fn permanent_exact(m: &SquareMatrix) -> Result<Complex> {
    let n = m.n;
    if n > MAX_EXACT_N {
        return Err(Error::MatrixTooLarge(n));
    }
    let mut row_sums = vec![Complex::new(0.0, 0.0); n];
    let mut total = Complex::new(0.0, 0.0);
    let mut prev: u32 = 0;
    for k in 1u32..(1 << n) {
        let gray = k ^ (k >> 1);
        let flipped = gray ^ prev;
        let j = flipped.trailing_zeros() as usize;
        if gray & flipped != 0 {
            for (i, rs) in row_sums.iter_mut().enumerate() {
                *rs += m.get(i, j);
            }
        } else {
            for (i, rs) in row_sums.iter_mut().enumerate() {
                *rs -= m.get(i, j);
            }
        }
        prev = gray;
        let prod: Complex = row_sums.iter().product();
        if (n as u32 - gray.count_ones()) % 2 == 0 {
            total += prod;
        } else {
            total -= prod;
        }
    }
    Ok(total)
}

/// Statistics of a randomized nonvanishing sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleStats {
    pub count: usize,
    pub n_range: (usize, usize),
    pub min_abs_perm: f64,
    pub argmin_matrix: SquareMatrix,
    pub zeros_found: usize,
    pub rng_seed: u64,
}

/// Uniform sampler over a region; rejection sampling in a bounding box for
/// the two-dimensional variants.
struct RegionSampler {
    region: Region,
    // precomputed helpers for the variants that need them
    polygon: Option<ConvexPolygon>,
    bbox: Option<(f64, f64, f64, f64)>, // (x0, x1, y0, y1)
    cone_parts: Option<(Complex, Complex, Complex)>, // apex, tangency points
}

impl RegionSampler {
    fn new(region: &Region) -> Result<Self> {
        let mut s = RegionSampler {
            region: region.clone(),
            polygon: None,
            bbox: None,
            cone_parts: None,
        };
        match region {
            Region::Polygon(p) => {
                if p.len() >= 3 {
                    s.bbox = Some(bbox_of(p.vertices()));
                }
                s.polygon = Some(p.clone());
            }
            Region::Disk { center, radius } => {
                s.bbox = Some((
                    center.re - radius,
                    center.re + radius,
                    center.im - radius,
                    center.im + radius,
                ));
            }
            Region::Cone { center, radius, apex } => {
                let (t1, t2) = crate::geom::cone_tangent_points(*center, *radius, *apex);
                let xs = [center.re - radius, center.re + radius, apex.re];
                let ys = [center.im - radius, center.im + radius, apex.im];
                s.bbox = Some((
                    xs.iter().cloned().fold(f64::INFINITY, f64::min),
                    xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max),
                    ys.iter().cloned().fold(f64::INFINITY, f64::min),
                    ys.iter().cloned().fold(f64::NEG_INFINITY, f64::max),
                ));
                s.cone_parts = Some((*apex, t1, t2));
            }
            Region::Trapezoid { m, l, t } => {
                s.bbox = Some((*m, *l, -t * l, t * l));
            }
            Region::Rectangle { .. } | Region::Interval { .. } | Region::Points(_) => {}
        }
        Ok(s)
    }

    fn contains(&self, p: Complex) -> bool {
        match &self.region {
            Region::Polygon(poly) => poly.contains(p, 0.0),
            Region::Disk { center, radius } => (p - center).norm() <= *radius,
            Region::Cone { center, radius, .. } => {
                if (p - center).norm() <= *radius {
                    return true;
                }
                let (apex, t1, t2) = self.cone_parts.unwrap();
                crate::geom::point_in_triangle(p, apex, t1, t2)
            }
            Region::Trapezoid { m, l, t } => {
                p.re >= *m && p.re <= *l && p.im.abs() <= t * p.re
            }
            _ => unreachable!("rejection sampling only runs for 2-d variants"),
        }
    }

    fn draw(&self, rng: &mut ChaCha8Rng) -> Complex {
        match &self.region {
            Region::Rectangle { m, l, n } => {
                let x = rng.gen_range(*m..=*m + *l);
                let y = rng.gen_range(-*n..=*n);
                Complex::new(x, y)
            }
            Region::Interval { a, b } => Complex::new(rng.gen_range(*a..=*b), 0.0),
            Region::Points(values) => values[rng.gen_range(0..values.len())],
            Region::Polygon(p) if p.len() == 1 => p.vertices()[0],
            Region::Polygon(p) if p.len() == 2 => {
                let (a, b) = (p.vertices()[0], p.vertices()[1]);
                a + (b - a) * rng.gen_range(0.0..=1.0)
            }
            _ => {
                let (x0, x1, y0, y1) = self.bbox.unwrap();
                loop {
                    let p = Complex::new(rng.gen_range(x0..=x1), rng.gen_range(y0..=y1));
                    if self.contains(p) {
                        return p;
                    }
                }
            }
        }
    }
}

fn bbox_of(pts: &[Complex]) -> (f64, f64, f64, f64) {
    let mut x0 = f64::INFINITY;
    let mut x1 = f64::NEG_INFINITY;
    let mut y0 = f64::INFINITY;
    let mut y1 = f64::NEG_INFINITY;
    for p in pts {
        x0 = x0.min(p.re);
        x1 = x1.max(p.re);
        y0 = y0.min(p.im);
        y1 = y1.max(p.im);
    }
    (x0, x1, y0, y1)
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Scale-aware zero test: `|per| <= 1e-12 * n! * max|entry|^n`.
pub fn is_zero_permanent(per: Complex, m: &SquareMatrix) -> bool {
    per.norm() <= 1e-12 * factorial(m.n()) * m.max_entry_norm().powi(m.n() as i32)
}

/// Draws `count` matrices with i.i.d. entries uniform over `region`
/// (dimension uniform in `n_range`), computes exact permanents and records
/// the minimum modulus and any zeros.
///
/// Matrix `i` uses ChaCha8 stream `i` seeded by `seed`, so results are
/// identical regardless of the parallel schedule.
pub fn sample_and_verify(
    region: &Region,
    n_range: (usize, usize),
    count: usize,
    seed: u64,
) -> Result<SampleStats> {
    let (n_min, n_max) = n_range;
    if n_min < 1 || n_min > n_max || n_max > MAX_EXACT_N {
        return Err(Error::ParameterDomain("matrix dimension range must satisfy 1 <= min <= max <= 14"));
    }
    if count < 1 {
        return Err(Error::ParameterDomain("sample count must be at least 1"));
    }
    let sampler = RegionSampler::new(region)?;

    let per_matrix = |index: usize| -> (usize, f64, SquareMatrix, bool) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index as u64);
        let n = rng.gen_range(n_min..=n_max);
        let entries: Vec<Complex> = (0..n * n).map(|_| sampler.draw(&mut rng)).collect();
        let matrix = SquareMatrix::new(n, entries).expect("sampled entries are finite");
        let per = permanent_exact(&matrix).expect("n guarded by range check");
        let zero = is_zero_permanent(per, &matrix);
        (index, per.norm(), matrix, zero)
    };

    let results: Vec<(usize, f64, SquareMatrix, bool)> =
        (0..count).into_par_iter().map(per_matrix).collect();

    let mut min_abs = f64::INFINITY;
    let mut argmin = None;
    let mut zeros = 0usize;
    for (_, abs, matrix, zero) in &results {
        if *zero {
            zeros += 1;
        }
        if *abs < min_abs {
            min_abs = *abs;
            argmin = Some(matrix.clone());
        }
    }
    Ok(SampleStats {
        count,
        n_range,
        min_abs_perm: min_abs,
        argmin_matrix: argmin.expect("count >= 1"),
        zeros_found: zeros,
        rng_seed: seed,
    })
}
