//! Acceptance criteria, run sequentially so that each timing is measured alone.
//! Prints one PASS/FAIL line per criterion and exits non-zero if any fails.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;
use std::time::{Duration, Instant};

use tfnorm_core::stft::TimeFrequencyArray;
use tfnorm_core::{
    adjoint_stft, convolve, fourier, stft, synthesize, validate_bupu, Bupu, FiniteTensor, GridSpec,
    SampledFunction, C64,
};
use tfnorm_harness::report::{Check, Report};
use tfnorm_harness::{run_verification, HarnessError, VerifyConfig};
use tfnorm_identify::golden::golden_json;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: String) -> Outcome {
    Outcome { ok, detail }
}

fn verify(id: &str) -> Report {
    run_verification(id, &VerifyConfig::default()).unwrap_or_else(|e| panic!("{id}: {e}"))
}

fn worst_spread(r: &Report) -> f64 {
    r.groups.iter().filter(|g| matches!(g.check, Check::Spread { .. })).map(|g| g.spread).fold(1.0, f64::max)
}

fn all_spreads_within(r: &Report, bound: f64) -> bool {
    r.groups
        .iter()
        .filter(|g| matches!(g.check, Check::Spread { .. }))
        .all(|g| g.spread.is_finite() && g.spread <= bound && g.min > 0.0)
}

fn rel(a: &[C64], b: &[C64]) -> f64 {
    let num: f64 = a.iter().zip(b).map(|(x, y)| (x - y).norm_sqr()).sum();
    let den: f64 = b.iter().map(|y| y.norm_sqr()).sum();
    (num / den).sqrt()
}

/// Random trigonometric polynomial under a Gaussian envelope.
fn random_smooth(grid: GridSpec, rng: &mut ChaCha8Rng) -> SampledFunction {
    let c0: f64 = rng.gen_range(-2.0..2.0);
    let width: f64 = rng.gen_range(0.7..2.0);
    let coeffs: Vec<(f64, C64)> = (0..5)
        .map(|_| (rng.gen_range(-2.0..2.0), C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))))
        .collect();
    SampledFunction::from_fn(grid, |x| {
        let t = x[0];
        let s: C64 = coeffs.iter().map(|(f, c)| c * C64::from_polar(1.0, 2.0 * PI * f * t)).sum();
        s * (-PI * ((t - c0) / width).powi(2)).exp()
    })
}

fn gauss(t: f64) -> f64 {
    2f64.powf(0.25) * (-PI * t * t).exp()
}

/// `(F⁻¹ψ)(x_j)` by direct summation over the frequency grid.
fn inverse_fourier_direct(psi: &SampledFunction, x_grid: GridSpec) -> Vec<C64> {
    let xi = psi.grid.axis_points();
    let h = psi.grid.h();
    x_grid
        .axis_points()
        .iter()
        .map(|&x| xi.iter().zip(&psi.values).map(|(&w, v)| v * C64::from_polar(h, 2.0 * PI * x * w)).sum())
        .collect()
}

/// `(φ * g)(x_j)` by direct summation with `g` evaluated in closed form.
fn convolve_direct(phi: &SampledFunction, g: impl Fn(f64) -> f64) -> Vec<C64> {
    let t = phi.grid.axis_points();
    let h = phi.grid.h();
    t.iter().map(|&x| t.iter().zip(&phi.values).map(|(&y, v)| v * (h * g(x - y))).sum()).collect()
}

fn criterion_1() -> Outcome {
    let r = verify("stft.inversion");
    let g = &r.groups[0];
    let n = r.rows.iter().filter(|row| row.group == g.group).count();
    let ok = g.pass && n == 24 && g.max <= 1e-6;
    outcome(ok, format!("max relative residual {:.2e} over {n} functions (N=1024)", g.max))
}

fn criterion_2() -> Outcome {
    let grid = GridSpec::standard();
    let g = SampledFunction::from_real_fn(grid, |x| gauss(x[0]));
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let (mut worst_adj, mut worst_syn) = (0.0f64, 0.0f64);
    for _ in 0..20 {
        let phi = random_smooth(grid, &mut rng);
        let psi = random_smooth(grid.dual(), &mut rng);
        let u = inverse_fourier_direct(&psi, grid);
        let c = convolve_direct(&phi, gauss);
        let oracle: Vec<C64> = u.iter().zip(&c).map(|(a, b)| a * b).collect();
        let adj = adjoint_stft(&TimeFrequencyArray::outer(&phi, &psi).unwrap(), &g).unwrap();
        let mut t = FiniteTensor::default();
        t.push(C64::new(1.0, 0.0), phi, psi).unwrap();
        let syn = synthesize(&t, &g).unwrap();
        worst_adj = worst_adj.max(rel(&adj.values, &oracle));
        worst_syn = worst_syn.max(rel(&syn.values, &adj.values));
    }
    let ok = worst_adj <= 1e-7 && worst_syn <= 1e-7;
    outcome(ok, format!("adjoint vs direct product {worst_adj:.2e}, adjoint vs synthesis {worst_syn:.2e} on 20 pairs"))
}

fn criterion_3() -> Outcome {
    let r = validate_bupu(&Bupu::new(GridSpec::standard()).unwrap());
    let ok = r.defect <= 1e-12 && r.overlap <= 2 && r.m.is_finite() && r.support_violations == 0;
    outcome(ok, format!("defect {:.1e}, overlap {}, M {:.4}, support violations {}", r.defect, r.overlap, r.m, r.support_violations))
}

fn spread_criterion(id: &str, expected_groups: usize, bound: f64) -> Outcome {
    let r = verify(id);
    let ok = r.pass && r.groups.len() == expected_groups && all_spreads_within(&r, bound);
    outcome(ok, format!("{} groups, worst spread {:.3} (bound {bound})", r.groups.len(), worst_spread(&r)))
}

fn criterion_4() -> Outcome {
    spread_criterion("lemma3.3", 4, 10.0)
}

fn criterion_5() -> Outcome {
    spread_criterion("lemma3.4", 8, 10.0)
}

fn criterion_6() -> Outcome {
    let r = verify("thm4.2");
    let sides_ok = r.groups.iter().filter(|g| g.group.starts_with("upper")).count() == 12
        && r.groups.iter().filter(|g| g.group.starts_with("lower")).count() == 12;
    let rejected = matches!(
        run_verification("thm4.2", &VerifyConfig { p1: Some(3.0), p2: Some(3.0), ..Default::default() }),
        Err(HarnessError::Hypothesis { ref hypothesis, .. }) if hypothesis == "p₁^{-1}+p₂^{-1}≥1"
    );
    let ok = r.pass && sides_ok && all_spreads_within(&r, 10.0) && rejected;
    outcome(ok, format!("{} groups, worst spread {:.3}, (3,3) rejected: {rejected}", r.groups.len(), worst_spread(&r)))
}

fn criterion_7() -> Outcome {
    let r = verify("thm5.1");
    let order_ok = r.rows.iter().filter(|row| row.group.starts_with("eps <= pi")).all(|row| row.lhs <= row.rhs * (1.0 + 1e-12));
    let ok = r.pass && order_ok && all_spreads_within(&r, 100.0);
    outcome(ok, format!("eps <= pi on every row: {order_ok}; worst lower-bound spread {:.3} (bound 100)", worst_spread(&r)))
}

fn criterion_8() -> Outcome {
    let r = verify("rem6.2");
    let a = run_verification("cor6.1a", &VerifyConfig { p1: Some(1.0), p2: Some(2.0), ..Default::default() }).unwrap();
    let ok = r.pass && r.groups.len() == 2 && all_spreads_within(&r, 10.0) && a.pass && all_spreads_within(&a, 10.0);
    outcome(ok, format!("W(FL^p, l1) vs M^(p,1) spread {:.3}; splitting bound spread {:.3}", worst_spread(&r), worst_spread(&a)))
}

fn criterion_9() -> Outcome {
    let r = verify("cor6.7");
    let moyal = r.groups.iter().find(|g| matches!(g.check, Check::AtMost { .. })).expect("s=0 group");
    let ok = r.pass && r.groups.len() == 4 && all_spreads_within(&r, 10.0) && moyal.max <= 1e-6;
    outcome(ok, format!("worst spread {:.3} for s in {{0,1,2}}; s=0 deviation {:.1e}", worst_spread(&r), moyal.max))
}

fn criterion_10() -> Outcome {
    let r = verify("lemma2.1");
    let bad: Vec<&str> = r.rows.iter().filter(|row| !row.ok).map(|row| row.function.as_str()).collect();
    outcome(r.pass && bad.is_empty() && r.rows.len() == 24, format!("{} functions, non-monotone: {bad:?}", r.rows.len()))
}

fn criterion_11() -> Outcome {
    let a = verify("identify.golden");
    let b = verify("identify.golden");
    let same = a.to_json() == b.to_json() && golden_json() == golden_json();
    let cases = a.rows.iter().filter(|row| row.group == "golden traces").count();
    outcome(a.pass && same && cases == 15, format!("{cases} golden cases, byte-identical: {same}"))
}

fn criterion_12() -> Outcome {
    // Fourier transform against the defining sum, in one and two dimensions.
    let mut worst = 0.0f64;
    for (dim, l, n) in [(1, 4.0, 128), (1, 3.0, 64), (2, 2.0, 16)] {
        let grid = GridSpec::new(dim, l, n).unwrap();
        let f = SampledFunction::from_fn(grid, |x| {
            let r2: f64 = x.iter().map(|v| v * v).sum();
            C64::from_polar((-PI * r2 / 1.5).exp(), 0.7 * x[0])
        });
        let dual = grid.dual();
        let direct: Vec<C64> = (0..dual.len())
            .map(|k| {
                let xi = dual.point(k);
                (0..grid.len())
                    .map(|j| {
                        let x = grid.point(j);
                        let phase: f64 = (0..dim).map(|a| x[a] * xi[a]).sum();
                        f.values[j] * C64::from_polar(grid.cell(), -2.0 * PI * phase)
                    })
                    .sum()
            })
            .collect();
        worst = worst.max(rel(&fourier(&f).values, &direct));
    }
    // Linear convolution against the direct sum over samples.
    let grid = GridSpec::new(1, 4.0, 128).unwrap();
    let a = SampledFunction::from_fn(grid, |x| C64::new((-PI * (x[0] - 0.5).powi(2)).exp(), x[0] * (-PI * x[0] * x[0]).exp()));
    let b = SampledFunction::from_real_fn(grid, |x| (-2.0 * PI * (x[0] + 0.25).powi(2)).exp());
    let h = grid.h();
    let o = grid.n as i64 / 2;
    let conv: Vec<C64> = (0..grid.n as i64)
        .map(|i| {
            (0..grid.n as i64)
                .filter_map(|j| {
                    let k = o + i - j;
                    (0..grid.n as i64).contains(&k).then(|| a.values[j as usize] * b.values[k as usize] * h)
                })
                .sum()
        })
        .collect();
    worst = worst.max(rel(&convolve(&a, &b).unwrap().values, &conv));
    // STFT against quadrature of f(t) conj(g(t - x)) e^{-2πitξ}.
    let f = SampledFunction::from_fn(grid, |x| C64::from_polar((-PI * x[0] * x[0] / 2.0).exp(), 1.3 * x[0]));
    let g = SampledFunction::from_real_fn(grid, |x| gauss(x[0]));
    let v = stft(&f, &g).unwrap();
    let (ts, xis) = (grid.axis_points(), grid.dual().axis_points());
    let mut direct = Vec::with_capacity(ts.len() * xis.len());
    for &x in &ts {
        for &xi in &xis {
            let s: C64 = ts
                .iter()
                .zip(&f.values)
                .map(|(&t, fv)| fv * C64::from_polar(h * gauss(t - x), -2.0 * PI * t * xi))
                .sum();
            direct.push(s);
        }
    }
    worst = worst.max(rel(&v.values, &direct));
    outcome(worst <= 1e-9, format!("worst relative deviation {worst:.2e} (fourier 1d/2d, convolve, stft; N <= 128)"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, u64); 12] = [
        ("1  STFT inversion", criterion_1, 10),
        ("2  synthesis identity", criterion_2, 30),
        ("3  BUPU axioms", criterion_3, 1),
        ("4  discrete vs continuous amalgam", criterion_4, 60),
        ("5  modulation norm via Fourier amalgam", criterion_5, 120),
        ("6  projective sandwich", criterion_6, 300),
        ("7  injective lower bounds", criterion_7, 300),
        ("8  W(FL^p, l1) vs M^(p,1)", criterion_8, 60),
        ("9  Shubin norm", criterion_9, 60),
        ("10 approximation schedule", criterion_10, 30),
        ("11 symbolic golden suite", criterion_11, 1),
        ("12 oracle equivalence", criterion_12, 60),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (name, run, limit) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let result = std::panic::catch_unwind(run);
        let took = start.elapsed();
        let in_time = took <= Duration::from_secs(limit);
        let (ok, detail) = match result {
            Ok(o) => (o.ok && in_time, o.detail),
            Err(_) => (false, "panicked".to_string()),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "{} criterion {name}: {detail}; {:.2} s (limit {limit} s)",
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64()
        );
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
