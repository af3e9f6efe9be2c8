//! Exact arithmetic in `ℤ[√2, √3, √5, …]`.
//!
//! A [`Surd`] is a finite sum `Σ kᵢ √mᵢ` with integer coefficients and
//! distinct square-free radicands. The set is closed under addition and
//! multiplication, which is all the truncated bosonic ladder needs:
//! `√n · √n` comes out as the integer `n` exactly.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Surd {
    // radicand (square-free, ≥ 1) → nonzero coefficient
    terms: BTreeMap<u64, i64>,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Surd {
    pub fn integer(k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if k != 0 {
            terms.insert(1, k);
        }
        Self { terms }
    }

    /// `√n`, reduced to `k√m` with `m` square-free.
    pub fn sqrt(n: u64) -> Self {
        if n == 0 {
            return Self::default();
        }
        let mut outside = 1u64;
        let mut inside = n;
        let mut p = 2u64;
        while p * p <= inside {
            while inside.is_multiple_of(p * p) {
                inside /= p * p;
                outside *= p;
            }
            p += 1;
        }
        let mut terms = BTreeMap::new();
        terms.insert(inside, outside as i64);
        Self { terms }
    }

    /// The value if it is a plain integer.
    pub fn as_integer(&self) -> Option<i64> {
        match self.terms.len() {
            0 => Some(0),
            1 => self.terms.get(&1).copied(),
            _ => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(&m, &k)| {
                if m == 1 {
                    k as f64
                } else {
                    k as f64 * (m as f64).sqrt()
                }
            })
            .sum()
    }

    fn accumulate(&mut self, radicand: u64, coeff: i64) {
        let slot = self.terms.entry(radicand).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&radicand);
        }
    }
}

impl Zero for Surd {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Surd {
    fn one() -> Self {
        Self::integer(1)
    }
}

impl Add for Surd {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (m, k) in rhs.terms {
            self.accumulate(m, k);
        }
        self
    }
}

impl Neg for Surd {
    type Output = Self;
    fn neg(mut self) -> Self {
        self.terms.values_mut().for_each(|k| *k = -*k);
        self
    }
}

impl Sub for Surd {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for Surd {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::default();
        for (&m1, &k1) in &self.terms {
            for (&m2, &k2) in &rhs.terms {
                // √m1·√m2 = g·√((m1/g)(m2/g)), square-free when m1, m2 are
                let g = gcd(m1, m2);
                out.accumulate((m1 / g) * (m2 / g), k1 * k2 * g as i64);
            }
        }
        out
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&m, &k)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(if k < 0 { " - " } else { " + " })?;
            } else if k < 0 {
                f.write_str("-")?;
            }
            match (k.unsigned_abs(), m) {
                (a, 1) => write!(f, "{a}")?,
                (1, m) => write!(f, "√{m}")?,
                (a, m) => write!(f, "{a}√{m}")?,
            }
        }
        Ok(())
    }
}
