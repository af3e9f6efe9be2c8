//! Relativistic qubits: Weyl spinors, `SL(2,ℂ)`, Dirac bispinors and
//! finite ladder-operator algebras.
//!
//! * [`spinor`]: a qubit `(c0, c1)`, its ray `ζ = c0/c1`, its point on the
//!   Riemann sphere, and the null 4-vector `(T, X, Y, Z)` it defines.
//! * [`lorentz`]: rotations and boosts as unimodular 2×2 matrices acting on
//!   spinors and 4-vectors, and the induced Lorentz matrices.
//! * [`dirac`]: bispinors `(φ_R, φ_L)` read as two-qubit registers, the
//!   gamma matrices, the current and the invariant scalar.
//! * [`fock`]: exact fermionic mode operators and truncated bosons.
//!
//! Boosts change the spinor norm and no finite matrices satisfy the
//! bosonic commutation relation. The crate measures both effects:
//!
//! ```
//! use relqubit::lorentz::{sl2_boost, su2_rotation, unitarity_defect, UnitAxis};
//! use relqubit::fock::commutator_defect;
//!
//! let rotation = su2_rotation(UnitAxis::X, 0.4);
//! assert!(unitarity_defect(&rotation, 1000, 1).unwrap() < 1e-12);
//!
//! let boost = sl2_boost(UnitAxis::Z, 2.0);
//! assert!(unitarity_defect(&boost, 1000, 1).unwrap() > 1.0);
//!
//! assert_eq!(commutator_defect(8).unwrap(), 8.0);
//! ```

pub mod dirac;
mod error;
pub mod fock;
pub mod linalg;
pub mod lorentz;
pub mod spinor;
pub mod tolerance;

pub use dirac::Bispinor;
pub use error::{Error, Result};
pub use linalg::Mat2;
pub use lorentz::{LorentzMatrix, SpinMatrix, UnitAxis};
pub use spinor::{ExtendedComplex, FourVector, HermitianMatrix2, WeylSpinor};

pub use num_complex::Complex64;
