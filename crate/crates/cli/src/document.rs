//! JSON state and pipeline documents.
//!
//! A state document names its kind and lists complex amplitudes as
//! `[re, im]` pairs:
//!
//! ```json
//! {"kind": "weyl", "amplitudes": [[1, 0], [0, 0]]}
//! ```
//!
//! A pipeline is an ordered list of steps:
//!
//! ```json
//! [{"rotate": {"axis": [0, 0, 1], "angle": 3.141592653589793}},
//!  {"boost": {"axis": [0, 0, 1], "rapidity": 1.0}},
//!  {"parity": {}},
//!  {"matrix": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]}]
//! ```

use std::fmt;
use std::path::Path;

use num_complex::Complex64;
use relqubit::lorentz::{sl2_boost, su2_rotation};
use relqubit::{Bispinor, Mat2, SpinMatrix, UnitAxis, WeylSpinor};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

/// Allowed `|det − 1|` for explicit pipeline matrices.
pub const PIPELINE_DET_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Weyl,
    Bispinor,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateDocument {
    pub kind: Kind,
    pub amplitudes: Vec<[f64; 2]>,
}

/// A validated state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum State {
    Weyl(WeylSpinor),
    Bispinor(Bispinor),
}

impl State {
    pub fn kind(&self) -> Kind {
        match self {
            Self::Weyl(_) => Kind::Weyl,
            Self::Bispinor(_) => Kind::Bispinor,
        }
    }

    pub fn amplitudes(&self) -> Vec<Complex64> {
        match self {
            Self::Weyl(s) => s.to_array().to_vec(),
            Self::Bispinor(b) => b.components().to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.amplitudes().iter().all(|z| *z == Complex64::default())
    }
}

impl StateDocument {
    pub fn parse(text: &str) -> Result<State> {
        let doc: Self = serde_json::from_str(text)
            .map_err(|e| CliError::Input(format!("malformed state document: {e}")))?;
        doc.validate()
    }

    pub fn read(path: &Path) -> Result<State> {
        Self::parse(&read_text(path)?)
    }

    pub fn validate(&self) -> Result<State> {
        let expected = match self.kind {
            Kind::Weyl => 2,
            Kind::Bispinor => 4,
        };
        if self.amplitudes.len() != expected {
            return Err(CliError::Input(format!(
                "{:?} state needs {expected} amplitudes, got {}",
                self.kind,
                self.amplitudes.len()
            )));
        }
        if self.amplitudes.iter().flatten().any(|x| !x.is_finite()) {
            return Err(CliError::Input("amplitudes must be finite".into()));
        }
        let c: Vec<Complex64> = self
            .amplitudes
            .iter()
            .map(|[re, im]| Complex64::new(*re, *im))
            .collect();
        Ok(match self.kind {
            Kind::Weyl => State::Weyl(WeylSpinor::new(c[0], c[1])),
            Kind::Bispinor => State::Bispinor(Bispinor::from_components([c[0], c[1], c[2], c[3]])),
        })
    }

    pub fn from_state(state: &State) -> Self {
        Self {
            kind: state.kind(),
            amplitudes: state.amplitudes().iter().map(|z| [z.re, z.im]).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum Step {
    Rotate {
        axis: [f64; 3],
        angle: f64,
    },
    Boost {
        axis: [f64; 3],
        rapidity: f64,
    },
    Parity {},
    /// Row-major entries as `[re, im]` pairs.
    Matrix([[[f64; 2]; 2]; 2]),
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Rotate { .. } => "rotate",
            Self::Boost { .. } => "boost",
            Self::Parity {} => "parity",
            Self::Matrix(_) => "matrix",
        })
    }
}

/// What a step does once validated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Action {
    Group(SpinMatrix),
    Parity,
}

impl Step {
    pub fn action(&self) -> Result<Action> {
        let axis = |v: [f64; 3]| {
            UnitAxis::new(v).map_err(|e| CliError::Pipeline(format!("{self} step: {e}")))
        };
        match *self {
            Self::Rotate { axis: a, angle } => Ok(Action::Group(su2_rotation(axis(a)?, angle))),
            Self::Boost { axis: a, rapidity } => Ok(Action::Group(sl2_boost(axis(a)?, rapidity))),
            Self::Parity {} => Ok(Action::Parity),
            Self::Matrix(e) => {
                let z = |[re, im]: [f64; 2]| Complex64::new(re, im);
                let m = Mat2::new(z(e[0][0]), z(e[0][1]), z(e[1][0]), z(e[1][1]));
                let det = m.det();
                if !det.is_finite() || (det - 1.0).norm() > PIPELINE_DET_TOLERANCE {
                    return Err(CliError::Pipeline(format!(
                        "matrix step has determinant {}{:+}i, expected 1",
                        det.re, det.im
                    )));
                }
                // within the pipeline tolerance; rescale onto det = 1 exactly
                SpinMatrix::normalized(m)
                    .map(Action::Group)
                    .map_err(|e| CliError::Pipeline(e.to_string()))
            }
        }
    }
}

pub fn parse_pipeline(text: &str) -> Result<Vec<Step>> {
    serde_json::from_str(text)
        .map_err(|e| CliError::Input(format!("malformed pipeline document: {e}")))
}

pub fn read_pipeline(path: &Path) -> Result<Vec<Step>> {
    parse_pipeline(&read_text(path)?)
}

fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}
