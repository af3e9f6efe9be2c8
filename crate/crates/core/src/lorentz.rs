//! `SL(2,ℂ)` acting on spinors and on 4-vectors.
//!
//! A unimodular 2×2 matrix `A` moves a spinor by `ψ ↦ Aψ` and the Hermitian
//! matrix of a 4-vector by `V ↦ AVA*`. The second action preserves
//! `det V = T² − X² − Y² − Z²`, so every `A` induces a Lorentz matrix, and `A`
//! and `−A` induce the same one. Only the unitary subgroup `SU(2)` also
//! preserves `Tr V`, i.e. the spinor norm.

use std::ops::{Mul, Neg};

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::linalg::{Mat2, I, ONE};
use crate::spinor::{FourVector, WeylSpinor};
use crate::tolerance;

/// A direction in space, validated to unit length within `1e-10`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitAxis([f64; 3]);

impl UnitAxis {
    pub const X: Self = Self([1.0, 0.0, 0.0]);
    pub const Y: Self = Self([0.0, 1.0, 0.0]);
    pub const Z: Self = Self([0.0, 0.0, 1.0]);

    pub fn new(v: [f64; 3]) -> Result<Self> {
        let norm = v[0].hypot(v[1]).hypot(v[2]);
        if (norm - 1.0).abs() > tolerance::AXIS || !norm.is_finite() {
            return Err(Error::NonUnitAxis { norm });
        }
        Ok(Self(v))
    }

    /// Scales a nonzero vector to unit length.
    pub fn normalized(v: [f64; 3]) -> Result<Self> {
        let norm = v[0].hypot(v[1]).hypot(v[2]);
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::NonUnitAxis { norm });
        }
        Self::new([v[0] / norm, v[1] / norm, v[2] / norm])
    }

    pub fn components(&self) -> [f64; 3] {
        self.0
    }

    /// `n̂·σ`
    fn dot_sigma(&self) -> Mat2 {
        let [nx, ny, nz] = self.0;
        Mat2::new(
            Complex64::from(nz),
            Complex64::new(nx, -ny),
            Complex64::new(nx, ny),
            Complex64::from(-nz),
        )
    }
}

/// An element of `SL(2,ℂ)`: a complex 2×2 matrix with unit determinant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinMatrix(Mat2);

impl SpinMatrix {
    /// Accepts `m` only if `|det m − 1| ≤ 1e-10`.
    pub fn new(m: Mat2) -> Result<Self> {
        let det = m.det();
        if (det - ONE).norm() > tolerance::DETERMINANT {
            return Err(Error::Determinant {
                re: det.re,
                im: det.im,
            });
        }
        Ok(Self(m))
    }

    /// Divides `m` by the principal square root of its determinant.
    pub fn normalized(m: Mat2) -> Result<Self> {
        let det = m.det();
        if det.norm() == 0.0 || !det.is_finite() {
            return Err(Error::Singular);
        }
        Self::new(m.scale(det.sqrt().inv()))
    }

    pub const fn identity() -> Self {
        Self(Mat2::identity())
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.0
    }

    pub fn det(&self) -> Complex64 {
        self.0.det()
    }

    /// Largest entrywise deviation of `A*A` from the identity.
    pub fn unitarity_residual(&self) -> f64 {
        (self.0.adjoint() * self.0).max_abs_diff(&Mat2::identity())
    }

    /// Whether `A* = A⁻¹` within `1e-10`; then `ā = d` and `c̄ = −b`.
    pub fn is_unitary(&self) -> bool {
        self.unitarity_residual() <= tolerance::DETERMINANT
    }

    /// `A⁻¹ = [[d, −b], [−c, a]]`, exact for unit determinant.
    pub fn inverse(&self) -> Self {
        let [[a, b], [c, d]] = self.0 .0;
        Self(Mat2::new(d, -b, -c, a))
    }

    /// Conjugate transpose, itself unimodular.
    pub fn adjoint(&self) -> Self {
        Self(self.0.adjoint())
    }

    /// `(A*)⁻¹`, the action on the second Weyl spinor of a bispinor.
    pub fn adjoint_inverse(&self) -> Self {
        self.adjoint().inverse()
    }

    /// The two singular values `σ_max ≥ σ_min`; their product is 1.
    pub fn singular_values(&self) -> (f64, f64) {
        let frob: f64 = self.0 .0.iter().flatten().map(|z| z.norm_sqr()).sum();
        // σ_max² + σ_min² = ‖A‖_F², σ_max σ_min = |det A| = 1
        let s = (frob + 2.0).sqrt();
        let d = (frob - 2.0).max(0.0).sqrt();
        let hi = 0.5 * (s + d);
        (hi, 1.0 / hi)
    }

    pub fn apply(&self, psi: &WeylSpinor) -> WeylSpinor {
        WeylSpinor::from_array(self.0.apply(psi.to_array()))
    }

    pub fn act_four_vector(&self, v: &FourVector) -> FourVector {
        let m = self.0 * Mat2::from(v.pauli_compose()) * self.0.adjoint();
        // Hermitian up to rounding; symmetrize before reading off components.
        let h = (m + m.adjoint()).scale(Complex64::from(0.5));
        crate::spinor::pauli_decompose(&h).expect("symmetrized matrix is Hermitian")
    }

    /// The Lorentz matrix whose columns are the images of the basis vectors.
    pub fn lorentz_matrix(&self) -> LorentzMatrix {
        let mut m = [[0.0; 4]; 4];
        for nu in 0..4 {
            let col = self.act_four_vector(&FourVector::basis(nu)).to_array();
            for mu in 0..4 {
                m[mu][nu] = col[mu];
            }
        }
        LorentzMatrix(m)
    }
}

impl Mul for SpinMatrix {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self(self.0 * rhs.0)
    }
}

impl Neg for SpinMatrix {
    type Output = Self;
    fn neg(self) -> Self {
        Self(-self.0)
    }
}

/// A real 4×4 matrix `Λ^μ_ν` acting on `(T, X, Y, Z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorentzMatrix(pub [[f64; 4]; 4]);

impl LorentzMatrix {
    pub fn identity() -> Self {
        let mut m = [[0.0; 4]; 4];
        for (k, row) in m.iter_mut().enumerate() {
            row[k] = 1.0;
        }
        Self(m)
    }

    pub fn apply(&self, v: &FourVector) -> FourVector {
        let v = v.to_array();
        let mut out = [0.0; 4];
        for (mu, row) in self.0.iter().enumerate() {
            out[mu] = row.iter().zip(v).map(|(l, x)| l * x).sum();
        }
        FourVector::from_array(out)
    }

    /// Largest entry of `|ΛᵀηΛ − η|`.
    pub fn metric_residual(&self) -> f64 {
        const ETA: [f64; 4] = [1.0, -1.0, -1.0, -1.0];
        let l = &self.0;
        let mut worst = 0.0_f64;
        for a in 0..4 {
            for b in 0..4 {
                let g: f64 = (0..4).map(|m| l[m][a] * ETA[m] * l[m][b]).sum();
                let target = if a == b { ETA[a] } else { 0.0 };
                worst = worst.max((g - target).abs());
            }
        }
        worst
    }

    pub fn preserves_metric(&self) -> bool {
        self.metric_residual() <= tolerance::METRIC
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .flatten()
            .zip(other.0.iter().flatten())
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }
}

impl Mul for LorentzMatrix {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut m = [[0.0; 4]; 4];
        for (r, row) in m.iter_mut().enumerate() {
            for (c, x) in row.iter_mut().enumerate() {
                *x = (0..4).map(|k| self.0[r][k] * rhs.0[k][c]).sum();
            }
        }
        Self(m)
    }
}

/// `cos(θ/2)·1 − i sin(θ/2)·(n̂·σ)`, turning `X` toward `Y` for `n̂ = ẑ`.
pub fn su2_rotation(axis: UnitAxis, angle: f64) -> SpinMatrix {
    let (s, c) = (0.5 * angle).sin_cos();
    SpinMatrix(Mat2::identity().scale(Complex64::from(c)) + axis.dot_sigma().scale(-I * s))
}

/// `cosh(η/2)·1 + sinh(η/2)·(n̂·σ)`: Hermitian, positive, unimodular.
pub fn sl2_boost(axis: UnitAxis, rapidity: f64) -> SpinMatrix {
    let h = 0.5 * rapidity;
    SpinMatrix(
        Mat2::identity().scale(Complex64::from(h.cosh()))
            + axis.dot_sigma().scale(Complex64::from(h.sinh())),
    )
}

pub fn act_spinor(a: &SpinMatrix, psi: &WeylSpinor) -> WeylSpinor {
    a.apply(psi)
}

/// `V′ = A V A*` read back as a 4-vector.
pub fn act_four_vector(a: &SpinMatrix, v: &FourVector) -> FourVector {
    a.act_four_vector(v)
}

pub fn lorentz_matrix_of(a: &SpinMatrix) -> LorentzMatrix {
    a.lorentz_matrix()
}

pub fn minkowski_norm(v: &FourVector) -> f64 {
    v.minkowski_norm()
}

/// Splits `v` into two null vectors with `n1 + n2 = v`.
///
/// With `r = |(X, Y, Z)| > 0`, `n1 = ((T + r)/2, (T + r)/(2r)·(X, Y, Z))`.
/// A purely temporal vector is split along `ẑ`.
pub fn null_decompose(v: &FourVector) -> (FourVector, FourVector) {
    let r = v.spatial_radius();
    let half = 0.5 * (v.t + r);
    let n1 = if r == 0.0 {
        FourVector::new(half, 0.0, 0.0, half)
    } else {
        let k = half / r;
        FourVector::new(half, k * v.x, k * v.y, k * v.z)
    };
    (n1, *v - n1)
}

/// A normalized spinor drawn uniformly from the state sphere.
pub fn random_state<R: rand::Rng + ?Sized>(rng: &mut R) -> WeylSpinor {
    loop {
        let mut g = || -> f64 { StandardNormal.sample(rng) };
        let psi = WeylSpinor::new(Complex64::new(g(), g()), Complex64::new(g(), g()));
        if let Ok(n) = psi.normalize() {
            return n;
        }
    }
}

/// Largest `|‖Aψ‖ − 1|` over `samples` seeded random normalized states.
///
/// Zero for unitary `A`. For a boost of rapidity `η` the supremum over the
/// sphere is `e^{|η|/2} − 1`, reached at the boost's eigenstates.
pub fn unitarity_defect(a: &SpinMatrix, samples: usize, seed: u64) -> Result<f64> {
    if samples == 0 {
        return Err(Error::NoSamples);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..samples)
        .map(|_| {
            let psi = random_state(&mut rng);
            (a.apply(&psi).norm() / psi.norm() - 1.0).abs()
        })
        .fold(0.0, f64::max))
}
