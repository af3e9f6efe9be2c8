//! The subcommands, as functions from parsed inputs to report text.

use std::io::Write;

use relqubit::dirac::{current, invariant_scalar, parity, transform_bispinor};
use relqubit::fock::{self, Surd};
use relqubit::lorentz::{sl2_boost, su2_rotation, unitarity_defect};
use relqubit::{ExtendedComplex, FourVector, SpinMatrix, UnitAxis};

use crate::document::{Action, State, Step};
use crate::error::{CliError, Result};
use crate::format::{join, sig17};

/// `zeta`, sphere point, extended Bloch vector and null residual of a Weyl state.
pub fn bloch(state: &State) -> Result<String> {
    let State::Weyl(psi) = state else {
        return Err(CliError::Input("bloch needs a weyl state".into()));
    };
    let degenerate = |e: relqubit::Error| CliError::Degenerate(e.to_string());
    let zeta = match psi.ray_coordinate().map_err(degenerate)? {
        ExtendedComplex::Infinity => "inf".to_owned(),
        ExtendedComplex::Finite(z) => join(&[z.re, z.im]),
    };
    let point = psi.riemann_point().map_err(degenerate)?;
    let v = psi.bloch_extended();
    Ok(format!(
        "zeta: {zeta}\nriemann_point: {}\nbloch_vector: {}\nnull_residual: {}\n",
        join(&point),
        join(&v.to_array()),
        sig17(v.minkowski_norm()),
    ))
}

/// Per-step invariants recorded by [`run_pipeline`].
#[derive(Debug, Clone, PartialEq)]
pub struct StepRecord {
    pub operation: String,
    pub norm_before: f64,
    pub norm_after: f64,
    pub minkowski_before: f64,
    pub minkowski_after: f64,
    /// `ψ*γ⁰ψ` before and after, for bispinors.
    pub scalar: Option<(f64, f64)>,
}

fn norm(state: &State) -> f64 {
    match state {
        State::Weyl(s) => s.norm(),
        State::Bispinor(b) => b.norm(),
    }
}

/// The 4-vector attached to a state: the Bloch vector or the current.
pub fn associated_vector(state: &State) -> FourVector {
    match state {
        State::Weyl(s) => s.bloch_extended(),
        State::Bispinor(b) => current(b),
    }
}

fn apply(action: &Action, state: &State, step: &Step) -> Result<State> {
    Ok(match (action, state) {
        (Action::Group(a), State::Weyl(s)) => State::Weyl(a.apply(s)),
        (Action::Group(a), State::Bispinor(b)) => State::Bispinor(transform_bispinor(a, b)),
        (Action::Parity, State::Bispinor(b)) => State::Bispinor(parity(b)),
        (Action::Parity, State::Weyl(_)) => {
            return Err(CliError::Pipeline(format!(
                "{step} step needs a bispinor state"
            )));
        }
    })
}

/// Validates every step up front, then applies them in order.
pub fn run_pipeline(state: &State, steps: &[Step]) -> Result<(State, Vec<StepRecord>)> {
    let actions = steps.iter().map(Step::action).collect::<Result<Vec<_>>>()?;
    let mut current_state = *state;
    let mut records = Vec::with_capacity(steps.len());
    for (step, action) in steps.iter().zip(&actions) {
        let next = apply(action, &current_state, step)?;
        let scalar = match (&current_state, &next) {
            (State::Bispinor(a), State::Bispinor(b)) => {
                Some((invariant_scalar(a), invariant_scalar(b)))
            }
            _ => None,
        };
        records.push(StepRecord {
            operation: step.to_string(),
            norm_before: norm(&current_state),
            norm_after: norm(&next),
            minkowski_before: associated_vector(&current_state).minkowski_norm(),
            minkowski_after: associated_vector(&next).minkowski_norm(),
            scalar,
        });
        current_state = next;
    }
    Ok((current_state, records))
}

fn format_amplitudes(state: &State) -> String {
    state
        .amplitudes()
        .iter()
        .map(|z| format!("[{}]", join(&[z.re, z.im])))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn transform(state: &State, steps: &[Step]) -> Result<String> {
    let (last, records) = run_pipeline(state, steps)?;
    let bispinor = matches!(state, State::Bispinor(_));
    let mut out = format!(
        "kind: {}\nsteps: {}\ninitial_state: {}\nfinal_state: {}\n",
        if bispinor { "bispinor" } else { "weyl" },
        records.len(),
        format_amplitudes(state),
        format_amplitudes(&last),
    );
    out.push_str("step,operation,norm_before,norm_after,minkowski_before,minkowski_after");
    out.push_str(if bispinor {
        ",scalar_before,scalar_after\n"
    } else {
        "\n"
    });
    for (k, r) in records.iter().enumerate() {
        out.push_str(&format!(
            "{},{},{}",
            k + 1,
            r.operation,
            join(&[
                r.norm_before,
                r.norm_after,
                r.minkowski_before,
                r.minkowski_after
            ])
        ));
        if let Some((before, after)) = r.scalar {
            out.push_str(&format!(",{}", join(&[before, after])));
        }
        out.push('\n');
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Generator {
    Rotation,
    Boost,
}

/// One sample of an orbit: the parameter and the associated 4-vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitRow {
    pub param: f64,
    pub vector: FourVector,
}

pub const ORBIT_HEADER: &str = "param,T,X,Y,Z";

/// Samples the one-parameter subgroup at `steps` evenly spaced parameters
/// in `[0, max_param]` and records the state's 4-vector at each.
pub fn orbit(
    state: &State,
    generator: Generator,
    axis: UnitAxis,
    steps: usize,
    max_param: f64,
) -> Result<Vec<OrbitRow>> {
    if steps < 2 {
        return Err(CliError::Input(format!(
            "--steps must be at least 2, got {steps}"
        )));
    }
    if !max_param.is_finite() {
        return Err(CliError::Input("--max-param must be finite".into()));
    }
    let element = |t: f64| -> SpinMatrix {
        match generator {
            Generator::Rotation => su2_rotation(axis, t),
            Generator::Boost => sl2_boost(axis, t),
        }
    };
    Ok((0..steps)
        .map(|k| {
            let param = max_param * k as f64 / (steps - 1) as f64;
            let moved = match state {
                State::Weyl(s) => State::Weyl(element(param).apply(s)),
                State::Bispinor(b) => State::Bispinor(transform_bispinor(&element(param), b)),
            };
            OrbitRow {
                param,
                vector: associated_vector(&moved),
            }
        })
        .collect())
}

pub fn write_orbit_csv<W: Write>(rows: &[OrbitRow], mut out: W) -> std::io::Result<()> {
    writeln!(out, "{ORBIT_HEADER}")?;
    for r in rows {
        let v = r.vector.to_array();
        writeln!(out, "{},{}", sig17(r.param), join(&v))?;
    }
    out.flush()
}

/// Reads back a file written by [`write_orbit_csv`].
pub fn parse_orbit_csv(text: &str) -> Result<Vec<OrbitRow>> {
    let mut lines = text.lines();
    if lines.next() != Some(ORBIT_HEADER) {
        return Err(CliError::Input(format!(
            "orbit CSV must start with `{ORBIT_HEADER}`"
        )));
    }
    lines
        .map(|line| {
            let fields = line
                .split(',')
                .map(str::parse::<f64>)
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| CliError::Input(format!("bad orbit row `{line}`: {e}")))?;
            match fields[..] {
                [param, t, x, y, z] => Ok(OrbitRow {
                    param,
                    vector: FourVector::new(t, x, y, z),
                }),
                _ => Err(CliError::Input(format!(
                    "orbit row needs 5 fields: `{line}`"
                ))),
            }
        })
        .collect()
}

/// Both no-go witnesses: the norm defect of a boost and the truncated
/// bosonic commutator defect.
pub fn nogo(dim: usize, rapidity: f64, samples: usize, seed: u64) -> Result<String> {
    let input = |e: relqubit::Error| CliError::Input(e.to_string());
    if !rapidity.is_finite() {
        return Err(CliError::Input("--rapidity must be finite".into()));
    }
    let boost = sl2_boost(UnitAxis::Z, rapidity);
    let defect = unitarity_defect(&boost, samples, seed).map_err(input)?;
    let (hi, lo) = boost.singular_values();
    let supremum = (hi - 1.0).max(1.0 - lo);

    let (c, c_star) = fock::bose_truncated_exact(dim).map_err(input)?;
    let comm = c.commutator(&c_star).map_err(input)?;
    let trace = comm.trace();
    let comm_defect = fock::identity_distance(&comm);

    Ok(format!(
        "boost_axis: 0,0,1\nrapidity: {}\nsamples: {samples}\nseed: {seed}\n\
         unitarity_defect: {}\nunitarity_defect_supremum: {}\n\
         dim: {dim}\ncommutator_defect: {}\ncommutator_trace: {}\n",
        sig17(rapidity),
        sig17(defect),
        sig17(supremum),
        sig17(comm_defect),
        surd_text(&trace),
    ))
}

fn surd_text(s: &Surd) -> String {
    match s.as_integer() {
        Some(k) => k.to_string(),
        None => s.to_string(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FockTarget {
    Modes(usize),
    BoseDim(usize),
}

fn relation_lines(out: &mut String, checks: &[fock::RelationCheck]) {
    for c in checks {
        out.push_str(&format!(
            "[{}] {} (max residual {})\n",
            if c.passed { "PASS" } else { "FAIL" },
            c.relation,
            sig17(c.max_residual)
        ));
    }
}

fn integer_matrix(name: &str, m: &fock::Operator<i64>) -> String {
    let rows: Vec<String> = m
        .to_dense()
        .iter()
        .map(|r| {
            format!(
                "[{}]",
                r.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
            )
        })
        .collect();
    format!("{name} = [{}]\n", rows.join(","))
}

/// Relation checks for fermionic modes or a truncated boson. A failing
/// bosonic relation is reported, not raised.
pub fn fock_report(target: FockTarget) -> Result<String> {
    let input = |e: relqubit::Error| CliError::Input(e.to_string());
    let mut out = String::new();
    match target {
        FockTarget::Modes(n) => {
            let modes = fock::fermi_modes(n).map_err(input)?;
            out.push_str(&format!(
                "algebra: fermi\nmodes: {n}\ndim: {}\n",
                modes.dim()
            ));
            if n == 1 {
                let (a, a_star, number) = fock::fermi_single();
                out.push_str(&integer_matrix("a", &a));
                out.push_str(&integer_matrix("a*", &a_star));
                out.push_str(&integer_matrix("N = a* a", &number));
                let anti = a_star.anticommutator(&a).map_err(input)?;
                out.push_str(&integer_matrix("a* a + a a*", &anti));
            }
            relation_lines(&mut out, &modes.check_relations());
        }
        FockTarget::BoseDim(d) => {
            let checks = fock::check_bose_relations(d).map_err(input)?;
            let (c, c_star) = fock::bose_truncated_exact(d).map_err(input)?;
            let trace = c.commutator(&c_star).map_err(input)?.trace();
            out.push_str(&format!("algebra: bose\ndim: {d}\n"));
            relation_lines(&mut out, &checks);
            out.push_str(&format!("trace [c, c*] = {}\n", surd_text(&trace)));
            out.push_str("note: failing [c, c*] = 1 is expected; commutators of finite matrices are traceless\n");
        }
    }
    Ok(out)
}
