mod common;

use rand::Rng;
use relqubit::lorentz::{
    act_four_vector, act_spinor, lorentz_matrix_of, minkowski_norm, null_decompose, sl2_boost,
    su2_rotation, unitarity_defect,
};
use relqubit::{Complex64, FourVector, SpinMatrix, UnitAxis, WeylSpinor};
use std::f64::consts::PI;

#[test]
fn determinant_one_preserves_minkowski_norm() {
    let mut rng = common::rng(21);
    for _ in 0..1000 {
        let a = common::det_one(&mut rng);
        let v = common::four_vector(&mut rng);
        let w = act_four_vector(&a, &v);
        assert!((minkowski_norm(&w) - minkowski_norm(&v)).abs() <= 1e-9);
        assert!(lorentz_matrix_of(&a).preserves_metric());
    }
}

#[test]
fn unitary_elements_preserve_time_component() {
    let mut rng = common::rng(22);
    for _ in 0..1000 {
        let a = su2_rotation(common::axis(&mut rng), rng.random_range(-7.0..7.0));
        assert!(a.is_unitary());
        let v = common::four_vector(&mut rng);
        assert!((act_four_vector(&a, &v).t - v.t).abs() <= 1e-10);
    }
}

#[test]
fn plus_and_minus_map_to_one_lorentz_matrix() {
    let mut rng = common::rng(23);
    for k in 0..300 {
        let a = common::group_element(&mut rng, k);
        assert!(lorentz_matrix_of(&a).max_abs_diff(&lorentz_matrix_of(&-a)) <= 1e-10);
    }
    for _ in 0..100 {
        let n = common::axis(&mut rng);
        let theta = rng.random_range(-PI..PI);
        let shifted = su2_rotation(n, theta + 2.0 * PI);
        assert!(
            shifted
                .matrix()
                .max_abs_diff((-su2_rotation(n, theta)).matrix())
                <= 1e-12
        );
    }
}

#[test]
fn lorentz_map_is_a_homomorphism() {
    let mut rng = common::rng(24);
    for k in 0..1000 {
        let a = common::group_element(&mut rng, k);
        let b = common::group_element(&mut rng, k + 1);
        let lhs = lorentz_matrix_of(&(a * b));
        let rhs = lorentz_matrix_of(&a) * lorentz_matrix_of(&b);
        assert!(lhs.max_abs_diff(&rhs) <= 1e-8);
    }
}

#[test]
fn four_vector_action_is_linear() {
    let mut rng = common::rng(25);
    for k in 0..1000 {
        let a = common::group_element(&mut rng, k);
        let (u, w) = (common::four_vector(&mut rng), common::four_vector(&mut rng));
        let lhs = act_four_vector(&a, &(u + w));
        let rhs = act_four_vector(&a, &u) + act_four_vector(&a, &w);
        assert!(lhs.max_abs_diff(&rhs) <= 1e-9);
    }
}

#[test]
fn spinor_and_vector_actions_commute_with_bloch_map() {
    let mut rng = common::rng(26);
    for k in 0..1000 {
        let a = common::group_element(&mut rng, k);
        let psi = common::spinor(&mut rng);
        let lhs = act_spinor(&a, &psi).bloch_extended();
        let rhs = act_four_vector(&a, &psi.bloch_extended());
        assert!(lhs.max_abs_diff(&rhs) <= 1e-9);
        assert!(lhs.max_abs_diff(&lorentz_matrix_of(&a).apply(&psi.bloch_extended())) <= 1e-9);
    }
}

#[test]
fn null_decomposition_sums_to_input() {
    let mut rng = common::rng(27);
    for _ in 0..1000 {
        let v = common::four_vector(&mut rng);
        let (n1, n2) = null_decompose(&v);
        assert!(n1.is_null() && n2.is_null());
        assert!((n1 + n2).max_abs_diff(&v) <= 1e-15);
    }
    let (n1, n2) = null_decompose(&FourVector::new(3.0, 0.0, 0.0, 0.0));
    assert_eq!(n1 + n2, FourVector::new(3.0, 0.0, 0.0, 0.0));
}

/// Oracle: the maximum of `|‖Aψ‖ − 1|` over a dense grid of the state sphere,
/// `ψ = (cos(θ/2), e^{iφ} sin(θ/2))`.
fn grid_defect(a: &SpinMatrix, n: usize) -> f64 {
    let mut worst = 0.0_f64;
    for i in 0..=n {
        let theta = PI * i as f64 / n as f64;
        for j in 0..n {
            let phi = 2.0 * PI * j as f64 / n as f64;
            let psi = WeylSpinor::new(
                Complex64::from((theta / 2.0).cos()),
                Complex64::from_polar((theta / 2.0).sin(), phi),
            );
            worst = worst.max((a.apply(&psi).norm() - 1.0).abs());
        }
    }
    worst
}

#[test]
fn boost_defect_matches_grid_oracle() {
    let b = sl2_boost(UnitAxis::Z, 2.0);
    let oracle = grid_defect(&b, 100);
    let analytic = 1.0_f64.exp() - 1.0;
    assert!((oracle - analytic).abs() <= 1e-12, "grid includes the pole");
    let sampled = unitarity_defect(&b, 10_000, 2024).unwrap();
    assert!(sampled <= analytic + 1e-12);
    assert!(
        (sampled - analytic).abs() <= 0.05 * analytic,
        "sampled {sampled}"
    );
}

#[test]
fn defect_supremum_follows_singular_values() {
    let mut rng = common::rng(28);
    for _ in 0..20 {
        let eta: f64 = rng.random_range(-3.0..3.0);
        let b = sl2_boost(common::axis(&mut rng), eta);
        let (hi, lo) = b.singular_values();
        assert!((hi - (eta.abs() / 2.0).exp()).abs() <= 1e-12);
        let sup = (hi - 1.0).max(1.0 - lo);
        let oracle = grid_defect(&b, 60);
        assert!(oracle <= sup + 1e-12);
        assert!(unitarity_defect(&b, 2000, 5).unwrap() <= sup + 1e-12);
    }
}

#[test]
fn rotations_have_zero_defect() {
    let mut rng = common::rng(29);
    for _ in 0..50 {
        let r = su2_rotation(common::axis(&mut rng), rng.random_range(-7.0..7.0));
        assert!(unitarity_defect(&r, 200, 9).unwrap() <= 1e-12);
    }
}
