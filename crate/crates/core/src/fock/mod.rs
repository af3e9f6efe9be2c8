//! Creation and annihilation operators as finite matrices.
//!
//! Fermionic relations have exact finite realizations: the single mode uses
//! `a = [[0, 0], [1, 0]]`, and `n` modes are built with sign strings,
//! `a_k = S ⊗ … ⊗ S ⊗ a ⊗ 1 ⊗ … ⊗ 1` with `S = diag(1, −1)`. All entries are
//! integers, so every anticommutator is checked with zero error.
//!
//! The bosonic relation `[c, c*] = 1` has no finite realization: every
//! commutator of finite matrices is traceless while the identity is not. The
//! truncated ladder `c|n⟩ = √n|n−1⟩` on `d` levels gives
//! `cc* − c*c = diag(1, …, 1, −(d − 1))`, off from the identity by exactly
//! `d` in the corner. Those products are evaluated over [`Surd`] so that the
//! defect comes out as an exact integer.

mod operator;
mod surd;

pub use operator::{Operator, OperatorMatrix, Scalar};
pub use surd::Surd;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::spinor::FourVector;

/// Largest supported number of fermionic modes (dimension 1024).
pub const MAX_FERMI_MODES: usize = 10;

/// Largest supported bosonic truncation.
pub const MAX_BOSE_DIM: usize = 4096;

/// Slack for the traceless premise, scaled by `d · max|entry|`.
pub const TRACE_TOLERANCE: f64 = 1e-9;

/// The single-mode matrices `(a, a*, N = a*a)`.
pub fn fermi_single() -> (Operator<i64>, Operator<i64>, Operator<i64>) {
    let a = Operator::from_dense(&[vec![0, 0], vec![1, 0]]);
    let a_star = a.adjoint();
    let number = &a_star * &a;
    (a, a_star, number)
}

/// Annihilation and creation operators for `n` fermionic modes.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeSet {
    annihilators: Vec<Operator<i64>>,
    creators: Vec<Operator<i64>>,
}

/// Outcome of checking one family of algebraic relations.
#[derive(Debug, Clone, PartialEq)]
pub struct RelationCheck {
    pub relation: &'static str,
    /// Largest entry of `lhs − rhs` over the family.
    pub max_residual: f64,
    pub passed: bool,
}

impl ModeSet {
    pub fn modes(&self) -> usize {
        self.annihilators.len()
    }

    pub fn dim(&self) -> usize {
        1 << self.modes()
    }

    /// `a_k` for `k` in `0..modes`.
    pub fn annihilator(&self, k: usize) -> &Operator<i64> {
        &self.annihilators[k]
    }

    pub fn creator(&self, k: usize) -> &Operator<i64> {
        &self.creators[k]
    }

    /// `N_k = a_k* a_k`
    pub fn number(&self, k: usize) -> Operator<i64> {
        &self.creators[k] * &self.annihilators[k]
    }

    /// Checks `{a_k, a_k'} = 0`, `{a_k*, a_k'*} = 0`, `{a_k, a_k*} = 1` and
    /// `{a_k, a_k'*} = 0` for `k ≠ k'`, in integer arithmetic.
    pub fn check_relations(&self) -> [RelationCheck; 4] {
        let n = self.modes();
        let id = Operator::<i64>::identity(self.dim());
        let residual = |lhs: Operator<i64>, rhs: &Operator<i64>| -> i64 {
            (&lhs - rhs)
                .entries()
                .map(|(_, _, v)| v.abs())
                .max()
                .unwrap_or(0)
        };
        let zero = Operator::<i64>::zeros(self.dim());
        let mut worst = [0i64; 4];
        for k in 0..n {
            for l in 0..n {
                let (a, b) = (&self.annihilators[k], &self.annihilators[l]);
                let (ac, bc) = (&self.creators[k], &self.creators[l]);
                worst[0] = worst[0].max(residual(anti(a, b), &zero));
                worst[1] = worst[1].max(residual(anti(ac, bc), &zero));
                if k == l {
                    worst[2] = worst[2].max(residual(anti(a, bc), &id));
                } else {
                    worst[3] = worst[3].max(residual(anti(a, bc), &zero));
                }
            }
        }
        let names = [
            "{a_k, a_k'} = 0",
            "{a*_k, a*_k'} = 0",
            "{a_k, a*_k} = 1",
            "{a_k, a*_k'} = 0 (k != k')",
        ];
        std::array::from_fn(|i| RelationCheck {
            relation: names[i],
            max_residual: worst[i] as f64,
            passed: worst[i] == 0,
        })
    }
}

fn anti(a: &Operator<i64>, b: &Operator<i64>) -> Operator<i64> {
    a.anticommutator(b).expect("modes share one dimension")
}

/// Sign-string construction of `n` fermionic modes, `1 ≤ n ≤ 10`.
pub fn fermi_modes(n: usize) -> Result<ModeSet> {
    if !(1..=MAX_FERMI_MODES).contains(&n) {
        return Err(Error::OutOfRange {
            what: "fermion mode count",
            min: 1,
            max: MAX_FERMI_MODES,
            got: n,
        });
    }
    let (a, _, _) = fermi_single();
    let sign = Operator::from_dense(&[vec![1, 0], vec![0, -1]]);
    let id = Operator::<i64>::identity(2);
    let annihilators: Vec<_> = (0..n)
        .map(|k| {
            (0..n)
                .map(|j| match j.cmp(&k) {
                    std::cmp::Ordering::Less => &sign,
                    std::cmp::Ordering::Equal => &a,
                    std::cmp::Ordering::Greater => &id,
                })
                .fold(Operator::identity(1), |acc, f| acc.kron(f))
        })
        .collect();
    let creators = annihilators.iter().map(Operator::adjoint).collect();
    Ok(ModeSet {
        annihilators,
        creators,
    })
}

fn check_bose_dim(d: usize) -> Result<()> {
    if !(2..=MAX_BOSE_DIM).contains(&d) {
        return Err(Error::OutOfRange {
            what: "boson truncation",
            min: 2,
            max: MAX_BOSE_DIM,
            got: d,
        });
    }
    Ok(())
}

/// The truncated ladder `(c, c*)` with exact entries `c_{n−1,n} = √n`.
pub fn bose_truncated_exact(d: usize) -> Result<(Operator<Surd>, Operator<Surd>)> {
    check_bose_dim(d)?;
    let c = Operator::from_entries(d, (1..d).map(|n| (n - 1, n, Surd::sqrt(n as u64))));
    let c_star = c.adjoint();
    Ok((c, c_star))
}

/// The truncated ladder `(c, c*)` in floating point.
pub fn bose_truncated(d: usize) -> Result<(OperatorMatrix, OperatorMatrix)> {
    let (c, c_star) = bose_truncated_exact(d)?;
    Ok((c.to_complex(), c_star.to_complex()))
}

/// `max |(cc* − c*c) − 1|` on `d` levels, evaluated exactly; equals `d`.
pub fn commutator_defect(d: usize) -> Result<f64> {
    let (c, c_star) = bose_truncated_exact(d)?;
    let comm = c.commutator(&c_star)?;
    Ok(identity_distance(&comm))
}

/// Largest entry modulus of `m − 1`.
pub fn identity_distance<S: Scalar>(m: &Operator<S>) -> f64 {
    (m - &Operator::identity(m.dim())).max_abs()
}

/// Findings for a commutator `[A, B]₋` of two finite matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct CommutatorReport {
    pub dim: usize,
    pub trace: Complex64,
    /// `1e-9 · d · max|entry|` over `AB` and `BA`.
    pub trace_bound: f64,
    pub traceless: bool,
    /// Largest entry modulus of `[A, B]₋ − 1`.
    pub distance_from_identity: f64,
    /// `traceless ⇒ distance ≥ 1 − 1e-9`. A traceless matrix has
    /// `Tr([A,B] − 1) = −d`, so some diagonal entry of the difference has
    /// modulus at least 1.
    pub implication_holds: bool,
}

pub fn check_traceless_commutator<S: Scalar>(
    a: &Operator<S>,
    b: &Operator<S>,
) -> Result<CommutatorReport> {
    let ab = a.try_mul(b)?;
    let ba = b.try_mul(a)?;
    let comm = ab.try_sub(&ba)?;
    let d = a.dim();
    let trace = comm.trace().to_complex();
    let trace_bound = TRACE_TOLERANCE * d as f64 * ab.max_abs().max(ba.max_abs());
    let traceless = trace.norm() <= trace_bound;
    let distance = identity_distance(&comm);
    Ok(CommutatorReport {
        dim: d,
        trace,
        trace_bound,
        traceless,
        distance_from_identity: distance,
        implication_holds: !traceless || distance >= 1.0 - TRACE_TOLERANCE,
    })
}

/// The relations a truncated boson violates, checked in exact arithmetic.
///
/// Both orderings of the commutator are reported: `[c, c*] = 1` is the
/// standard relation for `c|n⟩ = √n|n−1⟩`, while `[c*, c] = 1` is the other
/// sign convention found in the literature.
pub fn check_bose_relations(d: usize) -> Result<[RelationCheck; 4]> {
    let (c, c_star) = bose_truncated_exact(d)?;
    let dist_zero = |m: Operator<Surd>| m.max_abs();
    let rel = |relation, max_residual: f64| RelationCheck {
        relation,
        max_residual,
        passed: max_residual == 0.0,
    };
    Ok([
        rel("[c, c] = 0", dist_zero(c.commutator(&c)?)),
        rel("[c*, c*] = 0", dist_zero(c_star.commutator(&c_star)?)),
        rel("[c, c*] = 1", identity_distance(&c.commutator(&c_star)?)),
        rel("[c*, c] = 1", identity_distance(&c_star.commutator(&c)?)),
    ])
}

/// `e^{−iφ}c + e^{iφ}c*` on the `d`-level truncation.
pub fn field_operator_at_phase(phase: f64, d: usize) -> Result<OperatorMatrix> {
    let (c, c_star) = bose_truncated(d)?;
    let e = Complex64::from_polar(1.0, -phase);
    Ok(&c.scale(&e) + &c_star.scale(&e.conj()))
}

/// The free field `c e^{−ip·x} + c* e^{ip·x}` with `p·x` in signature
/// `(+, −, −, −)`.
pub fn field_operator(p: &FourVector, x: &FourVector, d: usize) -> Result<OperatorMatrix> {
    field_operator_at_phase(p.minkowski_dot(x), d)
}

/// `c*c`
pub fn number_operator<S: Scalar>(c: &Operator<S>) -> Operator<S> {
    &c.adjoint() * c
}
