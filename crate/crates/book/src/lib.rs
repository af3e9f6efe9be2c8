//! Runs the guide's code listings as doctests, one module per chapter.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/qubit_sphere.md")]
pub mod qubit_sphere {}

#[doc = include_str!("../../../book/src/lorentz.md")]
pub mod lorentz {}

#[doc = include_str!("../../../book/src/dirac.md")]
pub mod dirac {}

#[doc = include_str!("../../../book/src/ladder_operators.md")]
pub mod ladder_operators {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

#[doc = include_str!("../../../README.md")]
pub mod readme {}
