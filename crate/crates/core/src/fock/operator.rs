//! Sparse square matrices over a generic scalar ring.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::surd::Surd;
use crate::error::{Error, Result};

/// Entries an [`Operator`] can hold.
pub trait Scalar:
    Clone + PartialEq + Zero + One + Sub<Output = Self> + Neg<Output = Self> + Mul<Output = Self>
{
    fn conj(&self) -> Self;
    fn to_complex(&self) -> Complex64;
}

impl Scalar for i64 {
    fn conj(&self) -> Self {
        *self
    }
    fn to_complex(&self) -> Complex64 {
        Complex64::from(*self as f64)
    }
}

impl Scalar for Complex64 {
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn to_complex(&self) -> Complex64 {
        *self
    }
}

impl Scalar for Surd {
    fn conj(&self) -> Self {
        self.clone()
    }
    fn to_complex(&self) -> Complex64 {
        Complex64::from(self.to_f64())
    }
}

/// A `d×d` matrix stored as sorted `(column, value)` lists per row; explicit
/// zeros are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct Operator<S> {
    dim: usize,
    rows: Vec<Vec<(usize, S)>>,
}

/// Floating-point operator on a finite state space.
pub type OperatorMatrix = Operator<Complex64>;

impl<S: Scalar> Operator<S> {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            rows: vec![Vec::new(); dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_entries(dim, (0..dim).map(|k| (k, k, S::one())))
    }

    /// Builds from `(row, col, value)` triples; repeated positions are summed.
    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = (usize, usize, S)>) -> Self {
        let mut acc: Vec<BTreeMap<usize, S>> = vec![BTreeMap::new(); dim];
        for (r, c, v) in entries {
            assert!(r < dim && c < dim, "entry ({r}, {c}) outside {dim}×{dim}");
            let slot = acc[r].entry(c).or_insert_with(S::zero);
            *slot = slot.clone() + v;
        }
        Self::from_row_maps(dim, acc)
    }

    /// Builds from a row-major dense array.
    pub fn from_dense(rows: &[Vec<S>]) -> Self {
        let dim = rows.len();
        let entries = rows.iter().enumerate().flat_map(|(r, row)| {
            assert_eq!(row.len(), dim, "matrix must be square");
            row.iter().cloned().enumerate().map(move |(c, v)| (r, c, v))
        });
        Self::from_entries(dim, entries)
    }

    fn from_row_maps(dim: usize, maps: Vec<BTreeMap<usize, S>>) -> Self {
        let rows = maps
            .into_iter()
            .map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        Self { dim, rows }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> S {
        self.rows[row]
            .binary_search_by_key(&col, |(c, _)| *c)
            .map(|i| self.rows[row][i].1.clone())
            .unwrap_or_else(|_| S::zero())
    }

    /// Stored nonzero entries as `(row, col, value)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &S)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<S>> {
        let mut out = vec![vec![S::zero(); self.dim]; self.dim];
        for (r, c, v) in self.entries() {
            out[r][c] = v.clone();
        }
        out
    }

    pub fn trace(&self) -> S {
        (0..self.dim).fold(S::zero(), |acc, k| acc + self.get(k, k))
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_entries(self.dim, self.entries().map(|(r, c, v)| (c, r, v.conj())))
    }

    pub fn scale(&self, k: &S) -> Self {
        Self::from_entries(
            self.dim,
            self.entries()
                .map(|(r, c, v)| (r, c, k.clone() * v.clone())),
        )
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        let d = other.dim;
        let entries = self.entries().flat_map(|(r1, c1, v1)| {
            other
                .entries()
                .map(move |(r2, c2, v2)| (r1 * d + r2, c1 * d + c2, v1.clone() * v2.clone()))
        });
        Self::from_entries(self.dim * d, entries)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self::from_entries(
            self.dim,
            self.entries()
                .chain(other.entries())
                .map(|(r, c, v)| (r, c, v.clone())),
        ))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let neg = other.entries().map(|(r, c, v)| (r, c, -v.clone()));
        Ok(Self::from_entries(
            self.dim,
            self.entries().map(|(r, c, v)| (r, c, v.clone())).chain(neg),
        ))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let maps = self
            .rows
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, S> = BTreeMap::new();
                for (k, a) in row {
                    for (c, b) in &other.rows[*k] {
                        let slot = acc.entry(*c).or_insert_with(S::zero);
                        *slot = slot.clone() + a.clone() * b.clone();
                    }
                }
                acc
            })
            .collect();
        Ok(Self::from_row_maps(self.dim, maps))
    }

    /// `[A, B]₋ = AB − BA`
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    /// `{A, B}₊ = AB + BA`
    pub fn anticommutator(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)?.try_add(&other.try_mul(self)?)
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.entries()
            .map(|(_, _, v)| v.to_complex().norm())
            .fold(0.0, f64::max)
    }

    pub fn to_complex(&self) -> OperatorMatrix {
        Operator::from_entries(
            self.dim,
            self.entries().map(|(r, c, v)| (r, c, v.to_complex())),
        )
    }
}

impl OperatorMatrix {
    /// Largest entrywise deviation from the conjugate transpose.
    pub fn hermitian_deviation(&self) -> f64 {
        self.try_sub(&self.adjoint())
            .map(|d| d.max_abs())
            .unwrap_or(f64::INFINITY)
    }
}

impl<S: Scalar> Add for &Operator<S> {
    type Output = Operator<S>;
    fn add(self, rhs: Self) -> Operator<S> {
        self.try_add(rhs).expect("operator dimensions differ")
    }
}

impl<S: Scalar> Sub for &Operator<S> {
    type Output = Operator<S>;
    fn sub(self, rhs: Self) -> Operator<S> {
        self.try_sub(rhs).expect("operator dimensions differ")
    }
}

impl<S: Scalar> Mul for &Operator<S> {
    type Output = Operator<S>;
    fn mul(self, rhs: Self) -> Operator<S> {
        self.try_mul(rhs).expect("operator dimensions differ")
    }
}
