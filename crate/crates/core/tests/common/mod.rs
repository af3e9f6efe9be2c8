#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use relqubit::lorentz::{sl2_boost, su2_rotation};
use relqubit::{Bispinor, Complex64, FourVector, Mat2, SpinMatrix, UnitAxis, WeylSpinor};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn complex(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

pub fn spinor(rng: &mut impl Rng) -> WeylSpinor {
    loop {
        let s = WeylSpinor::new(complex(rng), complex(rng));
        if s.norm() > 1e-3 {
            return s;
        }
    }
}

pub fn bispinor(rng: &mut impl Rng) -> Bispinor {
    Bispinor::new(spinor(rng), spinor(rng))
}

pub fn axis(rng: &mut impl Rng) -> UnitAxis {
    loop {
        let v = [
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
        ];
        if let Ok(a) = UnitAxis::normalized(v) {
            return a;
        }
    }
}

pub fn four_vector(rng: &mut impl Rng) -> FourVector {
    FourVector::new(
        rng.random_range(-2.0..2.0),
        rng.random_range(-2.0..2.0),
        rng.random_range(-2.0..2.0),
        rng.random_range(-2.0..2.0),
    )
}

/// A unimodular matrix from entries in the unit square, kept away from
/// singular draws so entries stay moderate after normalization.
pub fn det_one(rng: &mut impl Rng) -> SpinMatrix {
    loop {
        let m = Mat2::new(complex(rng), complex(rng), complex(rng), complex(rng));
        if m.det().norm() > 0.1 {
            return SpinMatrix::normalized(m).unwrap();
        }
    }
}

/// Cycles through rotations, boosts and generic unimodular matrices.
pub fn group_element(rng: &mut impl Rng, k: usize) -> SpinMatrix {
    match k % 3 {
        0 => su2_rotation(axis(rng), rng.random_range(-7.0..7.0)),
        1 => sl2_boost(axis(rng), rng.random_range(-2.0..2.0)),
        _ => det_one(rng),
    }
}
