//! Dirac bispinors in the chiral (Weyl) layout.
//!
//! A bispinor stacks a right-handed and a left-handed Weyl spinor,
//! `ψ = (φ_R, φ_L)`, with flat components `(ψ0, ψ1, ψ2, ψ3) =
//! (φ_R0, φ_R1, φ_L0, φ_L1)`. The gamma matrices are written in 2×2 blocks:
//!
//! ```text
//! γ⁰ = [0 1]      γⁱ = [ 0  −σᵢ]
//!      [1 0]           [ σᵢ   0 ]
//! ```
//!
//! Under `A ∈ SL(2,ℂ)` the halves transform as `φ_R ↦ Aφ_R` and
//! `φ_L ↦ (A*)⁻¹φ_L`. The current `jᵘ = ψ*γ⁰γᵘψ` then transforms as a
//! 4-vector and `ψ*γ⁰ψ = φ_R*φ_L + φ_L*φ_R` is invariant.

use std::ops::{Add, Mul};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{Mat2, ONE, ZERO};
use crate::lorentz::SpinMatrix;
use crate::spinor::{FourVector, WeylSpinor};

/// A four-component spinor built from two Weyl spinors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bispinor {
    pub right: WeylSpinor,
    pub left: WeylSpinor,
}

impl Bispinor {
    pub const fn new(right: WeylSpinor, left: WeylSpinor) -> Self {
        Self { right, left }
    }

    /// From `(ψ0, ψ1, ψ2, ψ3) = (φ_R0, φ_R1, φ_L0, φ_L1)`.
    pub const fn from_components(c: [Complex64; 4]) -> Self {
        Self::new(WeylSpinor::new(c[0], c[1]), WeylSpinor::new(c[2], c[3]))
    }

    pub const fn components(&self) -> [Complex64; 4] {
        [self.right.c0, self.right.c1, self.left.c0, self.left.c1]
    }

    /// `Σ|ψᵢ|²`
    pub fn norm_sqr(&self) -> f64 {
        self.right.norm_sqr() + self.left.norm_sqr()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn normalize(&self) -> Result<Self> {
        let n = self.norm();
        if n == 0.0 {
            return Err(Error::ZeroState);
        }
        let k = Complex64::from(1.0 / n);
        Ok(Self::new(self.right.scale(k), self.left.scale(k)))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.components()
            .iter()
            .zip(other.components())
            .fold(0.0, |m, (a, b)| m.max((a - b).norm()))
    }
}

/// The amplitudes of a bispinor read as a two-qubit register `c_{s χ}`.
///
/// The first index is the spin component within a Weyl spinor, the second
/// selects chirality (0 = right, 1 = left).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Q2BitAmplitudes {
    pub c00: Complex64,
    pub c01: Complex64,
    pub c10: Complex64,
    pub c11: Complex64,
}

impl Q2BitAmplitudes {
    pub fn to_array(&self) -> [Complex64; 4] {
        [self.c00, self.c01, self.c10, self.c11]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.to_array().iter().map(|z| z.norm_sqr()).sum()
    }
}

pub fn to_q2bit(psi: &Bispinor) -> Q2BitAmplitudes {
    Q2BitAmplitudes {
        c00: psi.right.c0,
        c01: psi.left.c0,
        c10: psi.right.c1,
        c11: psi.left.c1,
    }
}

pub fn from_q2bit(q: &Q2BitAmplitudes) -> Bispinor {
    Bispinor::new(WeylSpinor::new(q.c00, q.c10), WeylSpinor::new(q.c01, q.c11))
}

/// A 4×4 complex matrix, used for the gamma matrices and their products.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaMatrix(pub [[Complex64; 4]; 4]);

impl GammaMatrix {
    pub fn identity() -> Self {
        let mut m = [[ZERO; 4]; 4];
        for (k, row) in m.iter_mut().enumerate() {
            row[k] = ONE;
        }
        Self(m)
    }

    pub fn zero() -> Self {
        Self([[ZERO; 4]; 4])
    }

    /// Assembles `[[a, b], [c, d]]` from 2×2 blocks.
    pub fn from_blocks(a: &Mat2, b: &Mat2, c: &Mat2, d: &Mat2) -> Self {
        let mut m = [[ZERO; 4]; 4];
        for (br, bc, blk) in [(0, 0, a), (0, 2, b), (2, 0, c), (2, 2, d)] {
            for r in 0..2 {
                for col in 0..2 {
                    m[br + r][bc + col] = blk.get(r, col);
                }
            }
        }
        Self(m)
    }

    pub fn scale(&self, k: Complex64) -> Self {
        let mut out = *self;
        out.0.iter_mut().flatten().for_each(|z| *z *= k);
        out
    }

    pub fn apply(&self, v: [Complex64; 4]) -> [Complex64; 4] {
        let mut out = [ZERO; 4];
        for (r, row) in self.0.iter().enumerate() {
            out[r] = row.iter().zip(v).map(|(m, x)| m * x).sum();
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (*self + other.scale(-ONE)).max_abs()
    }
}

impl Add for GammaMatrix {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut out = self;
        for (o, r) in out.0.iter_mut().flatten().zip(rhs.0.iter().flatten()) {
            *o += r;
        }
        out
    }
}

impl Mul for GammaMatrix {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut m = [[ZERO; 4]; 4];
        for (r, row) in m.iter_mut().enumerate() {
            for (c, z) in row.iter_mut().enumerate() {
                *z = (0..4).map(|k| self.0[r][k] * rhs.0[k][c]).sum();
            }
        }
        Self(m)
    }
}

/// `γ^μ` for `μ ∈ {0, 1, 2, 3}`.
pub fn gamma(mu: usize) -> Result<GammaMatrix> {
    let zero = Mat2::zero();
    match mu {
        0 => Ok(GammaMatrix::from_blocks(
            &zero,
            &Mat2::identity(),
            &Mat2::identity(),
            &zero,
        )),
        1..=3 => {
            let s = Mat2::pauli()[mu - 1];
            Ok(GammaMatrix::from_blocks(&zero, &-s, &s, &zero))
        }
        _ => Err(Error::GammaIndex(mu)),
    }
}

fn gammas() -> [GammaMatrix; 4] {
    std::array::from_fn(|mu| gamma(mu).expect("index in range"))
}

/// `ψ* M ψ`
fn sandwich(psi: &Bispinor, m: &GammaMatrix) -> Complex64 {
    let v = psi.components();
    v.iter().zip(m.apply(v)).map(|(a, b)| a.conj() * b).sum()
}

/// The current `jᵘ = ψ*γ⁰γᵘψ`.
pub fn current(psi: &Bispinor) -> FourVector {
    let g = gammas();
    let j: [f64; 4] = std::array::from_fn(|mu| sandwich(psi, &(g[0] * g[mu])).re);
    FourVector::from_array(j)
}

/// `ψ*γ⁰ψ = φ_R*φ_L + φ_L*φ_R`, invariant under every `SL(2,ℂ)` element.
pub fn invariant_scalar(psi: &Bispinor) -> f64 {
    2.0 * psi.right.inner(&psi.left).re
}

/// `2 Im(φ_R*φ_L)`: the invariant that flips sign under parity.
///
/// Together with the scalar it fixes the current's length:
/// `j·j = s² + p²`.
pub fn pseudoscalar(psi: &Bispinor) -> f64 {
    2.0 * psi.right.inner(&psi.left).im
}

/// `φ_R ↦ Aφ_R`, `φ_L ↦ (A*)⁻¹φ_L`.
pub fn transform_bispinor(a: &SpinMatrix, psi: &Bispinor) -> Bispinor {
    Bispinor::new(a.apply(&psi.right), a.adjoint_inverse().apply(&psi.left))
}

/// Spatial reflection: exchanges the two chiral halves.
pub fn parity(psi: &Bispinor) -> Bispinor {
    Bispinor::new(psi.left, psi.right)
}
