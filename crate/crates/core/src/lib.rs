//! Certified zero-free regions for the permanent.
//!
//! A subset of C* is a zero-free region for the permanent when every square
//! matrix with entries drawn from it has nonzero permanent. Membership in an
//! angle-restricted family reduces that statement to closed-form quadratic
//! inequalities on point quadruples, and for convex regions to a finite check
//! on polygon vertices. This crate provides:
//!
//! - [`geom`]: complex-plane and convex-polygon primitives, region variants
//!   and boundary discretization;
//! - [`criteria`]: the quadruple (F) and pair (G) certification criteria, the
//!   two-point general-angle test, and an independent Möbius-map oracle;
//! - [`regions`]: the catalog of known certified families with closed-form
//!   extremal parameters (interval ratio, rectangle/trapezoid bounds,
//!   ice-cream cone apex);
//! - [`maximality`]: boundary slack diagnostics and a push-out polygon grower
//!   that approximates maximal certified regions;
//! - [`permanent`]: an exact Ryser/Gray-code permanent kernel and seeded
//!   randomized verification sweeps;
//! - [`reproduce`]: end-to-end pipelines checking the reference constants.

pub mod criteria;
pub mod error;
pub mod geom;
pub mod maximality;
pub mod permanent;
pub mod regions;
pub mod reproduce;
pub mod search;
pub mod wire;

pub use error::{Error, Result};
pub use geom::Complex;

/// Default certification tolerance: the criteria are non-strict inequalities
/// and the known extremal regions sit exactly on the boundary, so the
/// comparisons are `<= tol` with this slack.
pub const DEFAULT_TOL: f64 = 1e-9;
