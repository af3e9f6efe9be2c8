//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fail.

use std::f64::consts::PI;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use relqubit::dirac::{current, gamma, invariant_scalar, transform_bispinor, GammaMatrix};
use relqubit::fock::{self, Surd};
use relqubit::lorentz::{
    lorentz_matrix_of, random_state, sl2_boost, su2_rotation, unitarity_defect,
};
use relqubit::{Bispinor, Complex64, FourVector, Mat2, SpinMatrix, UnitAxis, WeylSpinor};
use relqubit_cli::commands::parse_orbit_csv;

type Outcome = Result<String, String>;

struct Criterion {
    name: &'static str,
    run: fn() -> Outcome,
    budget: Duration,
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn complex(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

fn axis(rng: &mut impl Rng) -> UnitAxis {
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

fn group_element(rng: &mut impl Rng, k: usize) -> SpinMatrix {
    match k % 3 {
        0 => su2_rotation(axis(rng), rng.random_range(-7.0..7.0)),
        1 => sl2_boost(axis(rng), rng.random_range(-2.0..2.0)),
        _ => loop {
            let m = Mat2::new(complex(rng), complex(rng), complex(rng), complex(rng));
            if m.det().norm() > 0.1 {
                break SpinMatrix::normalized(m).unwrap();
            }
        },
    }
}

fn bispinor(rng: &mut impl Rng) -> Bispinor {
    Bispinor::new(random_state(rng), random_state(rng))
}

fn null_vectors() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst = 0.0_f64;
    for _ in 0..10_000 {
        let psi = WeylSpinor::new(complex(&mut rng), complex(&mut rng));
        let v = psi.bloch_extended();
        let ratio = v.minkowski_norm().abs() / (v.t * v.t);
        check(ratio <= 1e-10, || format!("|T²−X²−Y²−Z²|/T² = {ratio:e}"))?;
        worst = worst.max(ratio);
    }
    Ok(format!("10000 spinors, worst |norm|/T² = {worst:e}"))
}

fn commuting_square() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut worst = 0.0_f64;
    for k in 0..1000 {
        let a = group_element(&mut rng, k);
        let psi = WeylSpinor::new(complex(&mut rng), complex(&mut rng));
        let lhs = a.apply(&psi).bloch_extended();
        let rhs = lorentz_matrix_of(&a).apply(&psi.bloch_extended());
        let diff = lhs.max_abs_diff(&rhs);
        check(diff <= 1e-9, || format!("pair {k}: diff {diff:e}"))?;
        worst = worst.max(diff);
    }
    Ok(format!("1000 pairs, worst diff {worst:e}"))
}

fn norm_preservation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut worst_rotation = 0.0_f64;
    for k in 0..20 {
        let r = su2_rotation(axis(&mut rng), rng.random_range(-7.0..7.0));
        let d = unitarity_defect(&r, 1000, k).map_err(|e| e.to_string())?;
        worst_rotation = worst_rotation.max(d);
    }
    check(worst_rotation <= 1e-12, || {
        format!("rotation defect {worst_rotation:e}")
    })?;

    let boost = sl2_boost(UnitAxis::Z, 2.0);
    let target = 1.0_f64.exp() - 1.0;
    let sampled = unitarity_defect(&boost, 10_000, 2024).map_err(|e| e.to_string())?;
    check((sampled - target).abs() <= 0.05 * target, || {
        format!("sampled boost defect {sampled}")
    })?;
    // 100 × 100 grid over (θ, φ)
    let mut grid = 0.0_f64;
    for i in 0..100 {
        let theta = PI * i as f64 / 99.0;
        for j in 0..100 {
            let phi = 2.0 * PI * j as f64 / 100.0;
            let psi = WeylSpinor::new(
                Complex64::from((theta / 2.0).cos()),
                Complex64::from_polar((theta / 2.0).sin(), phi),
            );
            grid = grid.max((boost.apply(&psi).norm() - 1.0).abs());
        }
    }
    check((grid - target).abs() <= 0.05 * target, || {
        format!("grid boost defect {grid}")
    })?;
    Ok(format!(
        "rotation defect {worst_rotation:e}; boost(z,2) sampled {sampled:.6}, grid {grid:.6}, e-1 = {target:.6}"
    ))
}

fn double_cover() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let minus_one = -SpinMatrix::identity();
    let mut worst = 0.0_f64;
    for k in 0..100 {
        let n = axis(&mut rng);
        let a = group_element(&mut rng, k);
        let sign = lorentz_matrix_of(&-a).max_abs_diff(&lorentz_matrix_of(&a));
        let full_turn = su2_rotation(n, 2.0 * PI)
            .matrix()
            .max_abs_diff(minus_one.matrix());
        check(sign <= 1e-10 && full_turn <= 1e-10, || {
            format!("axis {k}: {sign:e}, {full_turn:e}")
        })?;
        worst = worst.max(sign).max(full_turn);
    }
    Ok(format!("100 axes, worst {worst:e}"))
}

fn dirac_suite() -> Outcome {
    const ETA: [f64; 4] = [1.0, -1.0, -1.0, -1.0];
    for mu in 0..4 {
        for nu in 0..4 {
            let (a, b) = (gamma(mu).unwrap(), gamma(nu).unwrap());
            let want = GammaMatrix::identity().scale(Complex64::from(if mu == nu {
                2.0 * ETA[mu]
            } else {
                0.0
            }));
            let diff = (a * b + b * a).max_abs_diff(&want);
            check(diff <= 1e-12, || format!("Clifford ({mu},{nu}): {diff:e}"))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for k in 0..1000 {
        let a = group_element(&mut rng, k);
        let psi = bispinor(&mut rng);
        let out = transform_bispinor(&a, &psi);
        let diff = current(&out).max_abs_diff(&lorentz_matrix_of(&a).apply(&current(&psi)));
        check(diff <= 1e-9, || format!("equivariance {k}: {diff:e}"))?;
        let ds = (invariant_scalar(&out) - invariant_scalar(&psi)).abs();
        check(ds <= 1e-10, || format!("scalar {k}: {ds:e}"))?;
        let density: f64 = psi.components().iter().map(|z| z.norm_sqr()).sum();
        let dj = (current(&psi).t - density).abs();
        check(dj <= 1e-12, || format!("density {k}: {dj:e}"))?;
    }
    let witness = Bispinor::new(WeylSpinor::real(1.0, 0.0), WeylSpinor::zero());
    let j0 = current(&witness).t;
    let j0_boosted = current(&transform_bispinor(&sl2_boost(UnitAxis::Z, 1.0), &witness)).t;
    let dw = (j0_boosted - 1.0_f64.exp() * j0).abs();
    check(dw <= 1e-12, || format!("chiral witness: {dw:e}"))?;
    Ok("16 Clifford pairs, 1000 transforms, chiral witness j0' = e j0".into())
}

fn fermions() -> Outcome {
    for n in 1..=6 {
        let modes = fock::fermi_modes(n).map_err(|e| e.to_string())?;
        for c in modes.check_relations() {
            check(c.passed && c.max_residual == 0.0, || {
                format!("n={n} {}: residual {}", c.relation, c.max_residual)
            })?;
        }
    }
    Ok("n = 1..6, every residual exactly 0".into())
}

fn bosons() -> Outcome {
    for d in 2..=64 {
        let defect = fock::commutator_defect(d).map_err(|e| e.to_string())?;
        check(defect == d as f64, || format!("d={d}: defect {defect}"))?;
        let (c, c_star) = fock::bose_truncated_exact(d).map_err(|e| e.to_string())?;
        let trace = c.commutator(&c_star).map_err(|e| e.to_string())?.trace();
        check(trace == Surd::integer(0), || {
            format!("d={d}: trace {trace}")
        })?;
    }
    Ok("d = 2..64, defect = d and trace = 0 exactly".into())
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn relqubit(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_relqubit"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    check(out.status.success(), || {
        format!(
            "relqubit {args:?} exited {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        )
    })?;
    Ok(out.stdout)
}

fn cli_golden() -> Outcome {
    let dir = golden_dir();
    let state = dir.join("plus.json");
    let state = state.to_str().unwrap();
    let orbit = || {
        relqubit(&[
            "orbit",
            state,
            "--generator",
            "rotation",
            "--axis",
            "0,0,1",
            "--steps",
            "5",
            "--max-param",
            "6.283185307179586",
        ])
    };
    let first = orbit()?;
    check(orbit()? == first, || {
        "orbit output differs between runs".into()
    })?;
    let golden = std::fs::read(dir.join("orbit_plus_rotation_z.csv")).map_err(|e| e.to_string())?;
    check(first == golden, || {
        "orbit output differs from golden file".into()
    })?;
    let rows = parse_orbit_csv(std::str::from_utf8(&first).unwrap()).map_err(|e| e.to_string())?;
    check(rows.len() == 5, || format!("{} rows", rows.len()))?;
    for (k, r) in rows.iter().enumerate() {
        let theta = k as f64 * PI / 2.0;
        let diff = r
            .vector
            .max_abs_diff(&FourVector::new(1.0, theta.cos(), theta.sin(), 0.0));
        check(diff <= 1e-15, || format!("row {k}: diff {diff:e}"))?;
    }
    for args in [
        &[
            "nogo",
            "--dim",
            "8",
            "--rapidity",
            "2",
            "--samples",
            "10000",
            "--seed",
            "7",
        ][..],
        &["fock", "--modes", "3"],
        &["fock", "--bose-dim", "16"],
    ] {
        check(relqubit(args)? == relqubit(args)?, || {
            format!("{args:?} differs between runs")
        })?;
    }
    Ok("orbit matches golden CSV; nogo and fock byte-identical across runs".into())
}

fn main() {
    let criteria = [
        Criterion {
            name: "1 null-vector correspondence",
            run: null_vectors,
            budget: Duration::from_secs(1),
        },
        Criterion {
            name: "2 commuting square",
            run: commuting_square,
            budget: Duration::from_secs(1),
        },
        Criterion {
            name: "3 unitary norm preservation and boost defect",
            run: norm_preservation,
            budget: Duration::from_secs(1),
        },
        Criterion {
            name: "4 double cover",
            run: double_cover,
            budget: Duration::from_millis(100),
        },
        Criterion {
            name: "5 Dirac suite",
            run: dirac_suite,
            budget: Duration::from_secs(1),
        },
        Criterion {
            name: "6 fermionic algebra exactness",
            run: fermions,
            budget: Duration::from_secs(5),
        },
        Criterion {
            name: "7 bosonic no-go",
            run: bosons,
            budget: Duration::from_secs(1),
        },
        Criterion {
            name: "8 CLI golden files",
            run: cli_golden,
            budget: Duration::from_secs(1),
        },
    ];
    let mut failures = 0;
    for Criterion { name, run, budget } in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|detail| {
            check(elapsed <= budget, || {
                format!("took {elapsed:.2?}, over budget {budget:?}")
            })
            .map(|()| detail)
        });
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail} ({elapsed:.2?}, budget {budget:?})"),
            Err(why) => {
                failures += 1;
                println!("FAIL  {name}: {why} ({elapsed:.2?})");
            }
        }
    }
    if failures > 0 {
        eprintln!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}
