//! Numerical thresholds shared across the crate.

/// Deviation allowed for a normalized spinor's squared norm and for Hermiticity.
pub const NORM: f64 = 1e-12;

/// `zeta` is reported as infinity when `|c1| <= RAY_INFINITY * |c0|`.
pub const RAY_INFINITY: f64 = 1e-14;

/// Relative slack for the null-cone test `|T^2 - |r|^2| <= NULL * max(1, T^2)`.
pub const NULL: f64 = 1e-10;

/// Allowed deviation of `det A` from 1 and of `A^* A` from the identity.
pub const DETERMINANT: f64 = 1e-10;

/// Allowed deviation of a unit axis from length 1.
pub const AXIS: f64 = 1e-10;

/// Residual allowed in `L^T eta L = eta`.
pub const METRIC: f64 = 1e-9;
