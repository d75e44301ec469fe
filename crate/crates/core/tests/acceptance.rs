//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::TestRunner;

use superosc_core::additive::{min_energy_interpolant, Kernel};
use superosc_core::analysis::{
    bound_configuration, compare_methods, default_region, dynamic_range_on, find_zeros, local_frequencies,
    matched_constraints, sigma_bounds, verify_bandlimit, BoundFamily, SpectrumWindow, DEFAULT_RESOLUTION,
};
use superosc_core::constructors::{
    build_periodic_antisymmetric, build_periodic_antisymmetric_squared, build_periodic_translates,
    build_sinc_translates, centered_epsilons,
};
use superosc_core::math::PI;
use superosc_core::quantum::{
    build_potential, potential_oscillation_report, richardson, solve_ground_state, LiftedWavefunction, PotentialStatus,
};
use superosc_core::scalar::Precision;
use superosc_core::{FactorSpec, HarmonicSum, ProductSignalSpec};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const NS: [usize; 4] = [3, 5, 7, 9];
const EPSILONS: [f64; 3] = [0.05, 0.1, 0.2];

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let el = start.elapsed();
    if el > limit {
        Err(format!("took {el:?}, limit {limit:?}"))
    } else {
        Ok(())
    }
}

fn r_squared(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let slope = sxy / sxx;
    let ss_res: f64 = xs.iter().zip(ys).map(|(x, y)| (y - my - slope * (x - mx)).powi(2)).sum();
    let ss_tot: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    1.0 - ss_res / ss_tot
}

fn random_commensurate_spec() -> impl Strategy<Value = ProductSignalSpec> {
    let factor = (1u32..=5, -1.0f64..1.0, any::<bool>());
    (1u32..=4, prop::collection::vec(factor, 1..=6)).prop_map(|(m, fs)| {
        let w0 = PI / m as f64;
        let factors = fs
            .into_iter()
            .map(|(k, e, neg)| FactorSpec::sine(k as f64 * w0, e).unwrap().with_sign(if neg { -1 } else { 1 }).unwrap())
            .collect();
        ProductSignalSpec::new(factors).unwrap()
    })
}

fn c1_bandlimit_additivity() -> Outcome {
    let start = Instant::now();
    let mut runner = TestRunner::deterministic();
    let strategy = random_commensurate_spec();
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let spec = strategy.new_tree(&mut runner).map_err(|e| e.to_string())?.current();
        let r = verify_bandlimit(&spec, 1e-10, SpectrumWindow::auto(&spec)).map_err(|e| e.to_string())?;
        worst = worst.max(r.relative_out_of_band());
        if r.passed != Some(true) {
            return Err(format!("out-of-band fraction {:e} for {:?}", r.relative_out_of_band(), spec));
        }
    }
    within(Duration::from_secs(5), start)?;
    Ok(format!("20 specs, worst out-of-band fraction {worst:.2e}"))
}

fn c2_cluster_zero_spacing() -> Outcome {
    let start = Instant::now();
    let spec = build_sinc_translates(PI, 3, &centered_epsilons(3, 0.1)).map_err(|e| e.to_string())?;
    let z = find_zeros(&spec, 2.5, 3.5, 0.01, 1e-12).map_err(|e| e.to_string())?;
    if z.zeros.len() != 3 {
        return Err(format!("expected 3 zeros near t=3, got {:?}", z.zeros));
    }
    let lf = local_frequencies(&z).map_err(|e| e.to_string())?;
    for w in z.zeros.windows(2) {
        if (w[1] - w[0] - 0.1).abs() > 1e-9 {
            return Err(format!("spacing {} off 0.1", w[1] - w[0]));
        }
    }
    for &(_, w) in &lf {
        if (w - 10.0 * PI).abs() > 1e-6 {
            return Err(format!("local frequency {w} off 10π"));
        }
    }
    within(Duration::from_secs(1), start)?;
    Ok(format!(
        "zeros {:.12?}, local frequency {:.9} = {:.6} x bandlimit",
        z.zeros,
        lf[0].1,
        lf[0].1 / spec.bandlimit()
    ))
}

fn measured_sigma(family: BoundFamily, n: usize, eps: f64) -> Result<f64, String> {
    let cfg = bound_configuration(family, n, eps, PI).map_err(|e| e.to_string())?;
    let r = dynamic_range_on(&cfg.spec, cfg.domain, cfg.region, DEFAULT_RESOLUTION).map_err(|e| e.to_string())?;
    Ok(r.sigma)
}

fn c3_sandwich() -> Outcome {
    let start = Instant::now();
    let mut cells = 0;
    for family in [BoundFamily::SineTranslate, BoundFamily::SincTranslate] {
        for n in NS {
            for eps in EPSILONS {
                let b = sigma_bounds(family, n, eps, PI).map_err(|e| format!("{family:?} N={n} ε={eps}: {e}"))?;
                let s = measured_sigma(family, n, eps)?;
                if !(b.lower <= s && s <= b.upper) {
                    return Err(format!("{family:?} N={n} ε={eps}: σ={s:e} outside [{:e}, {:e}]", b.lower, b.upper));
                }
                cells += 1;
            }
        }
    }
    within(Duration::from_secs(30), start)?;
    Ok(format!("{cells} cells (sine and sinc families) inside their bounds"))
}

fn c4_scaling() -> Outcome {
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for n in NS {
        xs.push(n as f64);
        ys.push(measured_sigma(BoundFamily::SineTranslate, n, 0.1)?.ln());
    }
    let r_n = r_squared(&xs, &ys);
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for eps in EPSILONS {
        xs.push((1.0 / eps).ln());
        ys.push(measured_sigma(BoundFamily::SineTranslate, 5, eps)?.ln());
    }
    let r_e = r_squared(&xs, &ys);
    if r_n >= 0.99 && r_e >= 0.95 {
        Ok(format!("R² (log σ vs N) = {r_n:.6}, R² (log σ vs log 1/ε) = {r_e:.6}"))
    } else {
        Err(format!("R² vs N = {r_n}, R² vs log 1/ε = {r_e}"))
    }
}

fn c5_parity() -> Outcome {
    let bits = Precision::Bits(256);
    // five sine factors against Dirichlet kernels with the same harmonics
    let s1 = build_periodic_translates(PI, 5, &centered_epsilons(5, 0.1)).map_err(|e| e.to_string())?;
    let c1 = compare_methods(&s1, None, bits, DEFAULT_RESOLUTION).map_err(|e| e.to_string())?;
    // three sinc factors against sinc kernels
    let s2 = build_sinc_translates(PI, 3, &centered_epsilons(3, 0.1)).map_err(|e| e.to_string())?;
    let c2 = compare_methods(&s2, None, bits, DEFAULT_RESOLUTION).map_err(|e| e.to_string())?;

    let mut conds = Vec::new();
    for eps in [0.5, 0.2, 0.1, 0.05] {
        let s = build_sinc_translates(PI, 3, &centered_epsilons(3, eps)).map_err(|e| e.to_string())?;
        let c = matched_constraints(&s, 0.0).map_err(|e| e.to_string())?;
        let a = min_energy_interpolant(&c, Kernel::Sinc { omega: PI }, bits).map_err(|e| e.to_string())?;
        conds.push(a.condition_number);
    }
    let monotone = conds.windows(2).all(|w| w[1] > w[0]);
    let detail = format!(
        "five-sine σ mult/add = {:.4e}/{:.4e} = {:.3}, three-sinc σ mult/add = {:.4e}/{:.4e} = {:.3}, \
         256-bit condition numbers {}",
        c1.multiplicative.sigma,
        c1.additive.sigma,
        c1.ratio(),
        c2.multiplicative.sigma,
        c2.additive.sigma,
        c2.ratio(),
        conds.iter().map(|c| format!("{c:.3e}")).collect::<Vec<_>>().join(", ")
    );
    let ok = |r: f64| (0.1..=10.0).contains(&r);
    if ok(c1.ratio()) && ok(c2.ratio()) && monotone {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn sine_psi() -> HarmonicSum {
    HarmonicSum::from_triples(1.0, &[(1, 0.0, 1.0)]).unwrap()
}

fn c6_potential() -> Outcome {
    let n = 1024;
    let p2 = build_potential(&LiftedWavefunction::new(sine_psi(), 2.0).unwrap(), n).map_err(|e| e.to_string())?;
    let v = p2.v[n / 4];
    if !p2.is_regular() || (v + 1.0 / 3.0).abs() > 2.0 * f64::EPSILON {
        return Err(format!("C=2: V(π/2) = {v}"));
    }
    let p1 = build_potential(&LiftedWavefunction::new(sine_psi(), 1.0).unwrap(), n).map_err(|e| e.to_string())?;
    let s = &p1.singularities;
    if p1.status != PotentialStatus::Touching
        || s.len() != 1
        || (s[0].x - 1.5 * PI).abs() > 1e-12
        || s[0].sign_change
        || s[0].left.signum() != s[0].right.signum()
    {
        return Err(format!("C=1: {:?} {:?}", p1.status, s));
    }
    let p0 = build_potential(&LiftedWavefunction::new(sine_psi(), 0.0).unwrap(), n).map_err(|e| e.to_string())?;
    let xs: Vec<f64> = p0.singularities.iter().map(|s| s.x).collect();
    if p0.status != PotentialStatus::CrossingSingularities
        || xs.len() != 2
        || xs[0].abs() > 1e-12
        || (xs[1] - PI).abs() > 1e-12
        || !p0.singularities.iter().all(|s| s.sign_change)
    {
        return Err(format!("C=0: {:?} at {xs:?}", p0.status));
    }
    Ok(format!(
        "V(π/2) = {v:.17}; C=1 touch at x = {:.15} (one-sided V {:.3e}, {:.3e}); C=0 crossings at {xs:.3?}",
        s[0].x, s[0].left, s[0].right
    ))
}

fn three_sine_psi() -> HarmonicSum {
    build_periodic_translates(PI, 3, &[0.0, 0.1, 0.2]).unwrap().expand_to_harmonics().unwrap()
}

fn ground_state_case(sign: f64) -> Result<String, String> {
    let w = LiftedWavefunction::sufficient(three_sine_psi(), sign, 100_000).map_err(|e| e.to_string())?;
    let mut e = Vec::new();
    let mut last = None;
    let mut vmax = 0.0;
    for n in [512, 1024, 2048] {
        let p = build_potential(&w, n).map_err(|e| e.to_string())?;
        vmax = p.sup_norm();
        let r = solve_ground_state(&p).map_err(|e| e.to_string())?;
        e.push(r.e0);
        last = Some(r);
    }
    let r = last.unwrap();
    let extrap = richardson(e[1], e[2]);
    let detail = format!(
        "C={:.6}: nodes {}, overlap {:.8}, E0 {:.3e}/{:.3e}/{:.3e}, extrapolated {:.2e} (limit {:.2e})",
        w.lift,
        r.node_count,
        r.overlap,
        e[0],
        e[1],
        e[2],
        extrap,
        1e-6 * vmax
    );
    if r.node_count == 0 && r.overlap >= 0.999 && extrap.abs() <= 1e-6 * vmax {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn c7_ground_state() -> Outcome {
    let start = Instant::now();
    let pos = ground_state_case(1.0)?;
    let neg = ground_state_case(-1.0)?;
    within(Duration::from_secs(60), start)?;
    Ok(format!("{pos}; {neg}"))
}

fn c8_oscillatory_potential() -> Outcome {
    let spec = build_periodic_translates(PI, 9, &centered_epsilons(9, 0.1)).map_err(|e| e.to_string())?;
    let region = default_region(&spec).map_err(|e| e.to_string())?;
    let w = LiftedWavefunction::sufficient(spec.expand_to_harmonics().map_err(|e| e.to_string())?, 1.0, 100_000)
        .map_err(|e| e.to_string())?;
    let p = build_potential(&w, 4096).map_err(|e| e.to_string())?;
    let so = potential_oscillation_report(&p, region).map_err(|e| e.to_string())?;
    let control =
        build_potential(&LiftedWavefunction::new(sine_psi(), 2.0).unwrap(), 4096).map_err(|e| e.to_string())?;
    let co = potential_oscillation_report(&control, (0.0, PI)).map_err(|e| e.to_string())?;
    let detail = format!(
        "superoscillating ratio {:.2} ({} in / {} out), control ratio {:.3}",
        so.ratio(),
        so.extrema_in,
        so.extrema_out,
        co.ratio()
    );
    if so.ratio() > 1.0 && (co.ratio() - 1.0).abs() <= 0.1 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn periodic_builds() -> Vec<(String, ProductSignalSpec)> {
    let mut out = Vec::new();
    for n in NS {
        for eps in EPSILONS {
            out.push((
                format!("translates N={n} ε={eps}"),
                build_periodic_translates(PI, n, &centered_epsilons(n, eps)).unwrap(),
            ));
            let half: Vec<f64> = (1..=(n - 1) / 2).map(|k| k as f64 * eps).collect();
            out.push((
                format!("antisymmetric N={n} ε={eps}"),
                build_periodic_antisymmetric(PI, n, &half, None).unwrap(),
            ));
            out.push((format!("squared N={n} ε={eps}"), build_periodic_antisymmetric_squared(PI, n, &half).unwrap()));
        }
    }
    out.push(("three sines, shifts {0, 0.1, 0.2}".into(), build_periodic_translates(PI, 3, &[0.0, 0.1, 0.2]).unwrap()));
    out
}

fn c9_expansion() -> Outcome {
    let mut worst = 0.0f64;
    let builds = periodic_builds();
    for (name, spec) in &builds {
        let h = spec.expand_to_harmonics().map_err(|e| format!("{name}: {e}"))?;
        let t = h.period();
        for k in 0..10_000 {
            let x = -t / 2.0 + t * k as f64 / 10_000.0;
            let d = (h.eval(x) - spec.eval(x)).abs();
            worst = worst.max(d);
            if d > 1e-12 {
                return Err(format!("{name}: |Δ| = {d:e} at t = {x}"));
            }
        }
    }
    // the printed three-factor linear form with equal shifts a
    let a = 0.1;
    let s3 = build_periodic_translates(PI, 3, &[a; 3]).unwrap();
    let w = PI / 3.0;
    let printed = |t: f64| 0.25 * ((w * (t + 2.0 * a)).sin() + 2.0 * (w * t).sin() - (3.0 * w * t).sin());
    let derived = |t: f64| 0.25 * (3.0 * (w * (t - a)).sin() - (3.0 * w * (t - a)).sin());
    let (mut dp, mut dd) = (0.0f64, 0.0f64);
    for k in 0..10_000 {
        let t = -3.0 + 6.0 * k as f64 / 10_000.0;
        dp = dp.max((printed(t) - s3.eval(t)).abs());
        dd = dd.max((derived(t) - s3.eval(t)).abs());
    }
    println!(
        "    note: printed three-factor linear form differs from the product by up to {dp:.3e} (a = {a}); \
         ¼(3 sin u - sin 3u), u = Ω/3 (t - a), agrees to {dd:.1e}"
    );
    Ok(format!("{} periodic builds, worst |expansion - product| = {worst:.2e}", builds.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("bandlimit additivity", c1_bandlimit_additivity),
        ("cluster zero spacing and local frequency", c2_cluster_zero_spacing),
        ("dynamic-range sandwich", c3_sandwich),
        ("dynamic-range scaling law", c4_scaling),
        ("additive vs multiplicative parity", c5_parity),
        ("potential construction", c6_potential),
        ("ground-state property", c7_ground_state),
        ("oscillatory potential signature", c8_oscillatory_potential),
        ("harmonic expansion consistency", c9_expansion),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let el = start.elapsed().as_secs_f64();
        match outcome {
            Ok(d) => println!("criterion {} [{name}]: PASS ({el:.2}s) {d}", i + 1),
            Err(d) => {
                failed += 1;
                println!("criterion {} [{name}]: FAIL ({el:.2}s) {d}", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
