//! Two-component Weyl spinors and the geometry they carry.
//!
//! A spinor `ψ = (c0, c1)` determines three related objects:
//!
//! * its ray coordinate `ζ = c0 / c1` on the extended complex plane,
//! * the point on the unit sphere reached from `ζ` by stereographic
//!   projection, and
//! * the future-pointing null 4-vector `(T, X, Y, Z)` with
//!   `T = |c0|² + |c1|²`, which is the Pauli decomposition of the Hermitian
//!   matrix `V = 2ψψ*`.
//!
//! Sign conventions: `X = c0c̄1 + c1c̄0`, `Y = i(c0c̄1 − c1c̄0)`,
//! `Z = |c0|² − |c1|²`. The basis state `(1, 0)` sits at `ζ = ∞`, the north
//! pole `(0, 0, 1)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{Mat2, ZERO};
use crate::tolerance;

/// A two-component complex spinor `(c0, c1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeylSpinor {
    pub c0: Complex64,
    pub c1: Complex64,
}

impl WeylSpinor {
    pub const fn new(c0: Complex64, c1: Complex64) -> Self {
        Self { c0, c1 }
    }

    /// Convenience constructor from real amplitudes.
    pub const fn real(c0: f64, c1: f64) -> Self {
        Self::new(Complex64::new(c0, 0.0), Complex64::new(c1, 0.0))
    }

    pub const fn zero() -> Self {
        Self::new(ZERO, ZERO)
    }

    pub const fn from_array(c: [Complex64; 2]) -> Self {
        Self::new(c[0], c[1])
    }

    pub const fn to_array(self) -> [Complex64; 2] {
        [self.c0, self.c1]
    }

    /// `|c0|² + |c1|²`
    pub fn norm_sqr(&self) -> f64 {
        self.c0.norm_sqr() + self.c1.norm_sqr()
    }

    pub fn norm(&self) -> f64 {
        self.c0.norm().hypot(self.c1.norm())
    }

    pub fn is_zero(&self) -> bool {
        self.c0 == ZERO && self.c1 == ZERO
    }

    /// `ψ*φ = c̄0 φ0 + c̄1 φ1`
    pub fn inner(&self, other: &Self) -> Complex64 {
        self.c0.conj() * other.c0 + self.c1.conj() * other.c1
    }

    /// `ψ* M ψ`
    pub fn expectation(&self, m: &Mat2) -> Complex64 {
        self.inner(&Self::from_array(m.apply(self.to_array())))
    }

    pub fn scale(&self, k: Complex64) -> Self {
        Self::new(k * self.c0, k * self.c1)
    }

    fn nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroState)
        } else {
            Ok(())
        }
    }

    /// Rescales by a positive real factor to unit norm.
    pub fn normalize(&self) -> Result<Self> {
        self.nonzero()?;
        let n = self.norm();
        Ok(Self::new(self.c0 / n, self.c1 / n))
    }

    /// The ray coordinate `ζ = c0 / c1`, infinite when `c1` vanishes.
    pub fn ray_coordinate(&self) -> Result<ExtendedComplex> {
        self.nonzero()?;
        if self.c1.norm() <= tolerance::RAY_INFINITY * self.c0.norm() {
            Ok(ExtendedComplex::Infinity)
        } else {
            Ok(ExtendedComplex::Finite(self.c0 / self.c1))
        }
    }

    /// The point `(x, y, z)` on the unit sphere corresponding to this ray.
    pub fn riemann_point(&self) -> Result<[f64; 3]> {
        self.nonzero()?;
        let v = self.bloch_extended();
        Ok([v.x / v.t, v.y / v.t, v.z / v.t])
    }

    /// The null 4-vector `(T, X, Y, Z)`; normalization is not required.
    pub fn bloch_extended(&self) -> FourVector {
        let cross = self.c0 * self.c1.conj();
        let p0 = self.c0.norm_sqr();
        let p1 = self.c1.norm_sqr();
        FourVector::new(p0 + p1, 2.0 * cross.re, -2.0 * cross.im, p0 - p1)
    }

    /// `V = 2ψψ*`, rank at most one.
    pub fn v_matrix(&self) -> HermitianMatrix2 {
        let [c0, c1] = self.to_array();
        let off = 2.0 * c0 * c1.conj();
        HermitianMatrix2(Mat2::new(
            Complex64::from(2.0 * c0.norm_sqr()),
            off,
            off.conj(),
            Complex64::from(2.0 * c1.norm_sqr()),
        ))
    }
}

/// A point of the extended complex plane `ℂ ∪ {∞}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtendedComplex {
    Finite(Complex64),
    Infinity,
}

impl ExtendedComplex {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Self::Infinity)
    }

    pub fn finite(&self) -> Option<Complex64> {
        match *self {
            Self::Finite(z) => Some(z),
            Self::Infinity => None,
        }
    }

    /// Inverse stereographic projection onto the unit sphere.
    pub fn to_sphere(&self) -> [f64; 3] {
        match *self {
            Self::Infinity => [0.0, 0.0, 1.0],
            Self::Finite(zeta) => {
                let m = zeta.norm_sqr();
                let d = m + 1.0;
                [2.0 * zeta.re / d, -2.0 * zeta.im / d, (m - 1.0) / d]
            }
        }
    }

    /// Stereographic projection `ζ = (x − iy) / (1 − z)` from the north pole.
    pub fn from_sphere(p: [f64; 3]) -> Self {
        let [x, y, z] = p;
        if z == 1.0 {
            Self::Infinity
        } else {
            Self::Finite(Complex64::new(x, -y) / (1.0 - z))
        }
    }
}

impl fmt::Display for ExtendedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Infinity => f.write_str("inf"),
            Self::Finite(z) => write!(f, "{z}"),
        }
    }
}

/// A real 4-vector `(T, X, Y, Z)` with signature `(+, −, −, −)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct FourVector {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl FourVector {
    pub const fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        Self { t, x, y, z }
    }

    pub const fn from_array(v: [f64; 4]) -> Self {
        Self::new(v[0], v[1], v[2], v[3])
    }

    pub const fn to_array(self) -> [f64; 4] {
        [self.t, self.x, self.y, self.z]
    }

    /// The unit vector along coordinate `mu`.
    pub fn basis(mu: usize) -> Self {
        let mut v = [0.0; 4];
        v[mu] = 1.0;
        Self::from_array(v)
    }

    /// `T² − X² − Y² − Z²`
    pub fn minkowski_norm(&self) -> f64 {
        self.t * self.t - self.x * self.x - self.y * self.y - self.z * self.z
    }

    pub fn minkowski_dot(&self, other: &Self) -> f64 {
        self.t * other.t - self.x * other.x - self.y * other.y - self.z * other.z
    }

    /// Euclidean length of the spatial part.
    pub fn spatial_radius(&self) -> f64 {
        self.x.hypot(self.y).hypot(self.z)
    }

    /// Lies on the light cone: `|T² − r²| ≤ 1e-10·max(1, T²)`.
    pub fn is_null(&self) -> bool {
        self.minkowski_norm().abs() <= tolerance::NULL * (self.t * self.t).max(1.0)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (*self - *other)
            .to_array()
            .iter()
            .fold(0.0, |m, c| m.max(c.abs()))
    }

    /// `V = T·1 + Xσx + Yσy + Zσz`
    pub fn pauli_compose(&self) -> HermitianMatrix2 {
        HermitianMatrix2(Mat2::new(
            Complex64::from(self.t + self.z),
            Complex64::new(self.x, -self.y),
            Complex64::new(self.x, self.y),
            Complex64::from(self.t - self.z),
        ))
    }
}

impl Add for FourVector {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.t + o.t, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for FourVector {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.t - o.t, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for FourVector {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.t, -self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for FourVector {
    type Output = Self;
    fn mul(self, k: f64) -> Self {
        Self::new(k * self.t, k * self.x, k * self.y, k * self.z)
    }
}

/// A 2×2 matrix equal to its own conjugate transpose within `1e-12`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermitianMatrix2(Mat2);

impl HermitianMatrix2 {
    pub fn new(m: Mat2) -> Result<Self> {
        let deviation = m.hermitian_deviation();
        if deviation > tolerance::NORM {
            return Err(Error::NotHermitian { deviation });
        }
        Ok(Self(m))
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.0
    }

    /// The coefficients `V_μ = ½ Tr(σ_μ V)` with `σ_0 = 1`.
    pub fn pauli_decompose(&self) -> FourVector {
        let half_trace = |s: Mat2| 0.5 * (s * self.0).trace().re;
        let [sx, sy, sz] = Mat2::pauli();
        FourVector::new(
            0.5 * self.0.trace().re,
            half_trace(sx),
            half_trace(sy),
            half_trace(sz),
        )
    }

    pub fn det(&self) -> f64 {
        self.0.det().re
    }

    pub fn trace(&self) -> f64 {
        self.0.trace().re
    }
}

/// Validates Hermiticity, then decomposes over `{1, σx, σy, σz}`.
pub fn pauli_decompose(m: &Mat2) -> Result<FourVector> {
    Ok(HermitianMatrix2::new(*m)?.pauli_decompose())
}

impl From<HermitianMatrix2> for Mat2 {
    fn from(h: HermitianMatrix2) -> Self {
        h.0
    }
}
