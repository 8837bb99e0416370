//! Complex-plane and convex-geometry primitives shared by all other modules.
//!
//! Points live in C* = C \ {0}; operations that need nonzero inputs reject
//! zero, and nothing here accepts NaN or infinite components.

mod polygon;
mod region;

pub use polygon::{convex_hull, ConvexPolygon};
pub use region::{boundary_discretize, boundary_residual, Region};
pub(crate) use region::{cone_tangent_points, point_in_triangle};

use crate::error::{Error, Result};
use num_complex::Complex64;

/// The scalar of every criterion: a point of the complex plane.
pub type Complex = Complex64;

/// Multiplication by this constant rotates a point by pi/4.
pub const ROT45: Complex = Complex::new(std::f64::consts::FRAC_1_SQRT_2, std::f64::consts::FRAC_1_SQRT_2);

/// Real and imaginary parts of `exp(i*pi/4) * z`.
///
/// The rotation is an isometry: `c1^2 + c2^2 == |z|^2` up to rounding.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotatedCoords {
    pub c1: f64,
    pub c2: f64,
}

pub(crate) fn ensure_finite(z: Complex) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite)
    }
}

/// Checks membership in C*: finite and nonzero.
pub(crate) fn ensure_in_cstar(z: Complex) -> Result<()> {
    ensure_finite(z)?;
    if z == Complex::new(0.0, 0.0) {
        Err(Error::ZeroInput)
    } else {
        Ok(())
    }
}

/// Angle between two nonzero complex numbers, in [0, pi].
///
/// Symmetric, and invariant under scaling either argument by a positive real.
/// The principal argument convention is arg in (-pi, pi].
pub fn angle_between(u: Complex, v: Complex) -> Result<f64> {
    ensure_in_cstar(u)?;
    ensure_in_cstar(v)?;
    // arg(u/v) computed via u * conj(v); avoids the division's rounding.
    Ok((u * v.conj()).arg().abs())
}

/// Components of `exp(i*pi/4) * z`.
pub fn to_rotated(z: Complex) -> RotatedCoords {
    let w = ROT45 * z;
    RotatedCoords { c1: w.re, c2: w.im }
}

/// Cross product of the vectors `b - a` and `c - a` (twice the signed area).
pub(crate) fn cross(a: Complex, b: Complex, c: Complex) -> f64 {
    let u = b - a;
    let v = c - a;
    u.re * v.im - u.im * v.re
}

/// Distance from `p` to the closed segment `[a, b]`.
pub(crate) fn segment_distance(p: Complex, a: Complex, b: Complex) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let t = ((p - a).re * ab.re + (p - a).im * ab.im) / len2;
    let t = t.clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}
