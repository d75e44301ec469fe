use nalgebra::{DMatrix, SymmetricEigen};
use proptest::prelude::*;

use superosc_core::constructors::{build_periodic_translates, centered_epsilons};
use superosc_core::math::PI;
use superosc_core::quantum::{
    apply_hamiltonian, build_potential, critical_lift, potential_oscillation_report, richardson, second_derivative,
    solve_ground_state, LiftedWavefunction, PotentialStatus,
};
use superosc_core::HarmonicSum;

fn three_sines() -> HarmonicSum {
    build_periodic_translates(PI, 3, &[0.0, 0.1, 0.2]).unwrap().expand_to_harmonics().unwrap()
}

fn sine() -> HarmonicSum {
    HarmonicSum::from_triples(1.0, &[(1, 0.0, 1.0)]).unwrap()
}

fn harmonic_sum() -> impl Strategy<Value = HarmonicSum> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..=4).prop_map(|c| {
        let triples: Vec<(u32, f64, f64)> = c.iter().enumerate().map(|(k, (a, b))| (k as u32 + 1, *a, *b)).collect();
        HarmonicSum::from_triples(1.0, &triples).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn mirrored_lift_gives_identical_potential(psi in harmonic_sum(), c in 0.5f64..3.0) {
        let crit = critical_lift(&psi, 4096);
        let w = LiftedWavefunction::new(psi, crit.positive + c).unwrap();
        let a = build_potential(&w, 256).unwrap();
        let b = build_potential(&w.mirrored(), 256).unwrap();
        prop_assert_eq!(a.v, b.v);
    }

    #[test]
    fn sufficient_lifts_are_nodeless(psi in harmonic_sum(), sign in prop::sample::select(vec![1.0, -1.0])) {
        let w = LiftedWavefunction::sufficient(psi, sign, 4096).unwrap();
        let p = build_potential(&w, 256).unwrap();
        prop_assert!(p.is_regular());
        let r = solve_ground_state(&p).unwrap();
        prop_assert_eq!(r.node_count, 0);
        prop_assert!(r.overlap > 0.99);
    }

    #[test]
    fn flags_appear_exactly_below_the_critical_lift(psi in harmonic_sum()) {
        let c = critical_lift(&psi, 100_000);
        let margin = 1e-9;
        let at = |lift: f64| build_potential(&LiftedWavefunction::new(psi.clone(), lift).unwrap(), 512).unwrap().status;
        prop_assert_eq!(at(c.positive + margin), PotentialStatus::Regular);
        prop_assert_eq!(at(c.negative - margin), PotentialStatus::Regular);
        prop_assert_eq!(at(c.positive - margin), PotentialStatus::CrossingSingularities);
        prop_assert_eq!(at(c.negative + margin), PotentialStatus::CrossingSingularities);
    }
}

#[test]
fn second_derivative_matches_finite_differences() {
    let psi = three_sines();
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    use proptest::strategy::{Strategy, ValueTree};
    let h = 1e-4;
    for _ in 0..100 {
        let x = (0.0f64..6.0).new_tree(&mut runner).unwrap().current();
        let fd = (psi.eval(x + h) - 2.0 * psi.eval(x) + psi.eval(x - h)) / (h * h);
        let exact = second_derivative(&psi, x);
        let scale = exact.abs().max(1e-2);
        assert!((fd - exact).abs() <= 1e-6 * scale, "x={x}: {fd} vs {exact}");
    }
    let constant = HarmonicSum::from_triples(1.0, &[(0, 0.7, 0.0)]).unwrap();
    assert_eq!(second_derivative(&constant, 1.3), 0.0);
}

#[test]
fn hamiltonian_annihilates_the_lifted_function_to_second_order() {
    let w = LiftedWavefunction::sufficient(three_sines(), 1.0, 100_000).unwrap();
    let mut k = Vec::new();
    for n in [256, 512, 1024] {
        let p = build_potential(&w, n).unwrap();
        let u = &p.psi_lifted;
        let hu = apply_hamiltonian(&p.v, p.h(), u);
        let norm = |v: &[f64]| v.iter().map(|x| x * x).sum::<f64>().sqrt();
        k.push(norm(&hu) / (p.h() * p.h() * norm(u)));
    }
    let kmax = k.iter().cloned().fold(0.0, f64::max);
    assert!(k.iter().all(|c| *c <= kmax && *c >= 0.9 * kmax), "{k:?}");
}

#[test]
fn matches_dense_eigensolver() {
    for (psi, c) in [(sine(), 2.0), (three_sines(), 1.2)] {
        let p = build_potential(&LiftedWavefunction::new(psi, c).unwrap(), 256).unwrap();
        let h = p.h();
        let n = p.n;
        let m = DMatrix::from_fn(n, n, |i, j| {
            let d = (i as i64 - j as i64).rem_euclid(n as i64);
            if i == j {
                2.0 / (h * h) + p.v[i]
            } else if d == 1 || d == n as i64 - 1 {
                -1.0 / (h * h)
            } else {
                0.0
            }
        });
        let eig = SymmetricEigen::new(m);
        let (imin, emin) =
            eig.eigenvalues.iter().enumerate().fold(
                (0, f64::INFINITY),
                |acc, (i, e)| {
                    if *e < acc.1 {
                        (i, *e)
                    } else {
                        acc
                    }
                },
            );
        let r = solve_ground_state(&p).unwrap();
        assert!((r.e0 - emin).abs() < 1e-8 * (1.0 + emin.abs()), "{} vs {emin}", r.e0);
        let v = eig.eigenvectors.column(imin);
        let dot: f64 = v.iter().zip(&r.ground_vec).map(|(a, b)| a * b).sum();
        assert!((dot.abs() - 1.0).abs() < 1e-8);
    }
}

#[test]
fn lifted_sine_energy_vanishes_at_second_order() {
    let w = LiftedWavefunction::new(sine(), 2.0).unwrap();
    let mut e = Vec::new();
    let mut vmax = 0.0;
    for n in [256, 512, 1024] {
        let p = build_potential(&w, n).unwrap();
        vmax = p.sup_norm();
        let r = solve_ground_state(&p).unwrap();
        if n == 1024 {
            assert!(r.overlap >= 0.9999);
        }
        e.push(r.e0);
    }
    // halving h quarters the error
    assert!((e[0] / e[1] - 4.0).abs() < 0.05 && (e[1] / e[2] - 4.0).abs() < 0.05, "{e:?}");
    assert!(richardson(e[1], e[2]).abs() <= 1e-6 * vmax);
}

#[test]
fn oscillation_counts_are_stable_under_refinement() {
    let spec = build_periodic_translates(PI, 9, &centered_epsilons(9, 0.1)).unwrap();
    let region = superosc_core::analysis::default_region(&spec).unwrap();
    let w = LiftedWavefunction::sufficient(spec.expand_to_harmonics().unwrap(), 1.0, 100_000).unwrap();
    let a = potential_oscillation_report(&build_potential(&w, 4096).unwrap(), region).unwrap();
    let b = potential_oscillation_report(&build_potential(&w, 8192).unwrap(), region).unwrap();
    assert!(a.extrema_in.abs_diff(b.extrema_in) <= 1 && a.extrema_out.abs_diff(b.extrema_out) <= 1);
    assert!(a.ratio() > 1.0);
}
