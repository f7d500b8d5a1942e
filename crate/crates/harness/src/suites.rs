//! Registered verification suites. Each compares two computable quantities over the test
//! family and judges the ratio statistics.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::time::Instant;

use tfnorm_core::norms::{amalgam_norm_continuous, amalgam_norm_discrete, lp_norm, mixed_norm, space_norm, SHIFTS_PER_UNIT};
use tfnorm_core::tensor::DualPair;
use tfnorm_core::windows::normalized_gaussian;
use tfnorm_core::{
    approximate_identity, check_inversion, decompose_mollified, decompose_splitting, eps_lower_bound, fourier,
    hermite_projector, inverse_fourier, make_dual_samples, pi_upper_bound, shubin_norm, stft, synthesize,
    validate_bupu, AmalgamSpec, Bupu, FiniteTensor, GlobalSpec, GridSpec, SampledFunction, SpaceSpec, Weight, C64,
};
use tfnorm_identify::golden::{golden_json, run_golden};
use tfnorm_identify::rules::{EPS_HYPOTHESIS, PI_HYPOTHESIS};

use crate::config::{LocalKind, VerifyConfig};
use crate::error::{HarnessError, Result};
use crate::family::{family, Member};
use crate::report::{Check, Report, Row};

pub const SUITE_IDS: &[&str] = &[
    "stft.inversion",
    "lemma2.1",
    "bupu",
    "lemma3.3",
    "lemma3.4",
    "thm4.2",
    "thm5.1",
    "cor6.1a",
    "cor6.1b",
    "rem6.2",
    "cor6.7",
    "identify.golden",
];

/// The result each suite checks, recorded in the report header.
pub fn location(id: &str) -> Option<&'static str> {
    Some(match id {
        "stft.inversion" => "STFT inversion formula V*_{g1} V_{g2} = (g1, g2) Id",
        "lemma2.1" => "Lemma 2.1",
        "bupu" => "BUPU axioms (i)-(iv)",
        "lemma3.3" => "Lemma 3.3",
        "lemma3.4" => "Lemma 3.4",
        "thm4.2" => "Theorem 4.2",
        "thm5.1" => "Theorem 5.1",
        "cor6.1a" => "Corollary 6.1(a)",
        "cor6.1b" => "Corollary 6.1(b)",
        "rem6.2" => "Remark 6.2",
        "cor6.7" => "Corollary 6.7",
        "identify.golden" => "identification rule table",
        _ => return None,
    })
}

/// Residual bound for inversion and Moyal checks.
pub const RESIDUAL_TOL: f64 = 1e-6;
/// Float slack on the exact `ε <= π` ordering.
pub const ORDER_SLACK: f64 = 1e-12;
/// Allowed relative growth of a spread between successive refinements; sup norms on a
/// coarse grid miss peak values by a few percent.
pub const CONVERGENCE_SLACK: f64 = 5e-2;
pub const CONVERGENCE_N: [usize; 3] = [256, 512, 1024];

pub fn run_verification(id: &str, cfg: &VerifyConfig) -> Result<Report> {
    let loc = location(id).ok_or_else(|| HarnessError::UnknownSuite(id.to_string()))?;
    validate(cfg)?;
    let start = Instant::now();
    let (checks, rows) = match id {
        "stft.inversion" => stft_inversion(cfg)?,
        "lemma2.1" => lemma21(cfg)?,
        "bupu" => bupu_axioms(cfg)?,
        "lemma3.3" => lemma33(cfg)?,
        "lemma3.4" => lemma34(cfg)?,
        "thm4.2" => thm42(cfg)?,
        "thm5.1" => thm51(cfg)?,
        "cor6.1a" => cor61a(cfg)?,
        "cor6.1b" => cor61b(cfg)?,
        "rem6.2" => rem62(cfg)?,
        "cor6.7" => cor67(cfg)?,
        "identify.golden" => golden(cfg)?,
        _ => unreachable!("location() covers every id"),
    };
    let mut r = Report::new(id, loc, cfg.clone(), &checks, rows);
    r.runtime_secs = start.elapsed().as_secs_f64();
    Ok(r)
}

fn validate(cfg: &VerifyConfig) -> Result<()> {
    for (name, p) in [("p1", cfg.p1), ("p2", cfg.p2)] {
        if let Some(p) = p {
            if !(p >= 1.0) {
                return Err(HarnessError::Config(format!("{name} = {p} must be at least 1")));
            }
        }
    }
    if cfg.dual_count == 0 {
        return Err(HarnessError::Config("dual sample count must be positive".into()));
    }
    if !(cfg.spread_bound >= 1.0 && cfg.eps_spread_bound >= 1.0) {
        return Err(HarnessError::Config("spread bounds must be at least 1".into()));
    }
    cfg.grid()?;
    Ok(())
}

type Checks = Vec<(String, Check)>;

fn ratio_row(group: &str, function: &str, lhs: f64, rhs: f64) -> Row {
    let ratio = lhs / rhs;
    Row {
        group: group.into(),
        function: function.into(),
        lhs,
        rhs,
        ratio,
        ok: ratio.is_finite() && ratio > 0.0,
        detail: String::new(),
    }
}

fn flag_row(group: &str, function: &str, value: f64, bound: f64, ok: bool, detail: String) -> Row {
    Row { group: group.into(), function: function.into(), lhs: value, rhs: bound, ratio: value, ok, detail }
}

/// Runs `f` on every item in parallel and concatenates the rows in item order.
fn collect<T: Sync>(items: &[T], f: impl Fn(&T) -> Result<Vec<Row>> + Sync) -> Result<Vec<Row>> {
    let parts: Vec<Vec<Row>> = items.par_iter().map(|x| f(x)).collect::<Result<_>>()?;
    Ok(parts.into_iter().flatten().collect())
}

fn recip(p: f64) -> f64 {
    if p.is_infinite() {
        0.0
    } else {
        1.0 / p
    }
}

fn fmt_p(p: f64) -> String {
    if p.is_infinite() {
        "inf".into()
    } else {
        format!("{p}")
    }
}

fn pairs_or(cfg: &VerifyConfig, default: &[(f64, f64)]) -> Vec<(f64, f64)> {
    match (cfg.p1, cfg.p2) {
        (None, None) => default.to_vec(),
        (p1, p2) => vec![(p1.unwrap_or(default[0].0), p2.unwrap_or(default[0].1))],
    }
}

fn weights_or(cfg: &VerifyConfig, default: &[(f64, f64)]) -> Vec<(f64, f64)> {
    match (cfg.s1, cfg.s2) {
        (None, None) => default.to_vec(),
        (s1, s2) => vec![(s1.unwrap_or(0.0), s2.unwrap_or(0.0))],
    }
}

fn setup(cfg: &VerifyConfig) -> Result<(GridSpec, Vec<Member>, Bupu)> {
    let grid = cfg.grid()?;
    Ok((grid, family(grid, cfg.seed)?, Bupu::new(grid)?))
}

fn amalgam(f: &SampledFunction, local: SpaceSpec, global: GlobalSpec, b: &Bupu) -> Result<f64> {
    Ok(amalgam_norm_discrete(f, &AmalgamSpec::new(local, global), b)?.value)
}

fn lp_global(p: f64, s: f64) -> GlobalSpec {
    if p.is_infinite() {
        GlobalSpec::Linf { w: Weight::Power(s) }
    } else {
        GlobalSpec::Lp { p, w: Weight::Power(s) }
    }
}

fn local_space(kind: LocalKind, p: f64) -> SpaceSpec {
    match kind {
        LocalKind::L => SpaceSpec::lp(p, Weight::unit()),
        LocalKind::FL => SpaceSpec::flp(p, Weight::unit()),
        LocalKind::C0 => SpaceSpec::c0(Weight::unit()),
    }
}

fn local_label(kind: LocalKind, p: f64) -> String {
    match kind {
        LocalKind::L => format!("L{}", fmt_p(p)),
        LocalKind::FL => format!("FL{}", fmt_p(p)),
        LocalKind::C0 => "C0".into(),
    }
}

fn stft_inversion(cfg: &VerifyConfig) -> Result<(Checks, Vec<Row>)> {
    let (grid, fam, _) = setup(cfg)?;
    let g = normalized_gaussian(grid);
    let wide = SampledFunction::from_real_fn(grid, |x| (-PI * x[0] * x[0] / 2.0).exp());
    let groups = ["g1 = g2 = gaussian", "g1 = gaussian, g2 = dilated gaussian"];
    let rows = collect(&fam, |m| {
        let a = check_inversion(&m.f, &g, &g)?;
        let b = check_inversion(&m.f, &g, &wide)?;
        Ok(vec![
            flag_row(groups[0], &m.name, a, RESIDUAL_TOL, a <= RESIDUAL_TOL, String::new()),
            flag_row(groups[1], &m.name, b, RESIDUAL_TOL, b <= RESIDUAL_TOL, String::new()),
        ])
    })?;
    let checks = groups.iter().map(|g| (g.to_string(), Check::AtMost { bound: RESIDUAL_TOL })).collect();
    Ok((checks, rows))
}

/// Diagonal schedule `(n, m)` for `S_{n,m} = P_n ∘ G_m`.
pub const LEMMA21_SCHEDULE: [(usize, f64); 3] = [(4, 1.0), (16, 2.0), (64, 4.0)];

fn lemma21(cfg: &VerifyConfig) -> Result<(Checks, Vec<Row>)> {
    let (_, fam, _) = setup(cfg)?;
    let group = "relative L2 error along the schedule";
    let rows = collect(&fam, |m| {
        let mut errs = Vec::new();
        for (n, k) in LEMMA21_SCHEDULE {
            let s = hermite_projector(&approximate_identity(&m.f, k)?, n)?;
            errs.push(s.rel_l2_dist(&m.f)?);
        }
        let ok = errs.windows(2).all(|w| w[1] <= w[0]);
        let detail = errs.iter().map(|e| format!("{e:.6e}")).collect::<Vec<_>>().join(" ");
        let mut row = flag_row(group, &m.name, errs[0], errs[2], ok, detail);
        row.ratio = errs[2] / errs[0];
        Ok(vec![row])
    })?;
    Ok((vec![(group.into(), Check::Rows)], rows))
}

fn bupu_axioms(cfg: &VerifyConfig) -> Result<(Checks, Vec<Row>)> {
    let grid = cfg.grid()?;
    let mut rows = Vec::new();
    let mut checks = Vec::new();
    for (label, g) in [("time grid", grid), ("frequency grid", grid.dual())] {
        let r = validate_bupu(&Bupu::new(g)?);
        rows.push(flag_row(label, "partition defect", r.defect, 1e-12, r.defect <= 1e-12, String::new()));
        rows.push(flag_row(label, "support violations", r.support_violations as f64, 0.0, r.support_violations == 0, String::new()));
        rows.push(flag_row(label, "overlap", r.overlap as f64, 2.0, r.overlap <= 2, String::new()));
        rows.push(flag_row(label, "M", r.m, f64::INFINITY, r.m.is_finite(), String::new()));
        let detail = if r.aliasing_warning { "aliasing warning".to_string() } else { String::new() };
        rows.push(flag_row(label, "aliasing tail", r.tail_fraction, 1.0, true, detail));
        checks.push((label.to_string(), Check::Rows));
    }
    Ok((checks, rows))
}

fn lemma33(cfg: &VerifyConfig) -> Result<(Checks, Vec<Row>)> {
    let (_, fam, b) = setup(cfg)?;
    let combos: Vec<(LocalKind, f64, GlobalSpec)> = if cfg.p1.is_none() && cfg.p2.is_none() && cfg.local.is_none() && cfg.s2.is_none() {
        vec![
            (LocalKind::L, 2.0, GlobalSpec::Lp { p: 1.0, w: Weight::unit() }),
            (LocalKind::L, 1.0, GlobalSpec::Lp { p: 2.0, w: Weight::Power(1.0) }),
            (LocalKind::FL, 2.0, GlobalSpec::Lp { p: 1.0, w: Weight::unit() }),
            (LocalKind::C0, f64::INFINITY, GlobalSpec::Linf0 { w: Weight::unit() }),
        ]
    } else {
        let p2 = cfg.p2.unwrap_or(1.0);
        let s = cfg.s2.unwrap_or(0.0);
        let global = if p2.is_infinite() { GlobalSpec::Linf0 { w: Weight::Power(s) } } else { lp_global(p2, s) };
        vec![(cfg.local.unwrap_or(LocalKind::L), cfg.p1.unwrap_or(2.0), global)]
    };
    let labels: Vec<String> = combos
        .iter()
        .map(|(k, p, g)| {
            let gl = match g {
                GlobalSpec::Lp { p, .. } => format!("l{}", fmt_p(*p)),
                GlobalSpec::Linf { .. } => "linf".into(),
                GlobalSpec::Linf0 { .. } => "linf0".into(),
            };
            format!("discrete/continuous W({}, {}[{}])", local_label(*k, *p), gl, g.weight())
        })
        .collect();
    let chi = b.base.clone();
    let rows = collect(&fam, |m| {
        let mut out = Vec::new();
        for ((k, p, global), label) in combos.iter().zip(&labels) {
            let spec = AmalgamSpec::new(local_space(*k, *p), global.clone());
            let d = amalgam_norm_discrete(&m.f, &spec, &b)?.value;
            let c = amalgam_norm_continuous(&m.f, &spec, &chi, SHIFTS_PER_UNIT)?.value;
            out.push(ratio_row(label, &m.name, d, c));
        }
        Ok(out)
    })?;
    let checks = labels.into_iter().map(|l| (l, Check::Spread { bound: cfg.spread_bound })).collect();
    Ok((checks, rows))
}

fn lemma34(cfg: &VerifyConfig) -> Result<(Checks, Vec<Row>)> {
    let (grid, fam, _) = setup(cfg)?;
    let pairs = pairs_or(cfg, &[(1.0, 1.0), (2.0, 1.0), (1.0, 2.0), (2.0, 2.0)]);
    let weights = weights_or(cfg, &[(0.0, 0.0), (1.0, 1.0)]);
    let configs: Vec<(f64, f64, f64, f64)> =
        pairs.iter().flat_map(|&(p1, p2)| weights.iter().map(move |&(s1, s2)| (p1, p2, s1, s2))).collect();
    let labels: Vec<String> = configs
        .iter()
        .map(|(p1, p2, s1, s2)| format!("direct/amalgam M{},{}[{s1},{s2}]", fmt_p(*p1), fmt_p(*p2)))
        .collect();
    let g = normalized_gaussian(grid);
    let dual_bupu = Bupu::new(grid.dual())?;
    let rows = collect(&fam, |m| {
        let v = stft(&m.f, &g)?;
        let ff = fourier(&m.f);
        let mut out = Vec::new();
        for (&(p1, p2, s1, s2), label) in configs.iter().zip(&labels) {
            let w = Weight::tensor(Weight::Power(s1), Weight::Power(s2));
            let direct = mixed_norm(&v, p1, p2, &w)?;
            let via = amalgam(&ff, SpaceSpec::flp(p1, Weight::Power(s1)), lp_global(p2, s2), &dual_bupu)?;
            out.push(ratio_row(label, &m.name, direct, via));
        }
        Ok(out)
    })?;
    let checks = labels.into_iter().map(|l| (l, Check::Spread { bound: cfg.spread_bound })).collect();
    Ok((checks, rows))
}

fn require(ok: bool, suite: &str, hypothesis: &str, detail: String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(HarnessError::Hypothesis { suite: suite.into(), hypothesis: hypothesis.into(), detail })
    }
}

/// Number of random tensors in the upper half of the projective sandwich.
pub const RANDOM_TENSORS: usize = 24;

/// Rank 1 to 3 tensor whose terms share one time-frequency centre.
fn random_tensor(grid: GridSpec, seed: u64, j: usize) -> Result<FiniteTensor> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9).wrapping_add(j as u64));
    let rank = rng.gen_range(1..=3);
    let x0: f64 = rng.gen_range(-4.0..4.0);
    let xi0: f64 = rng.gen_range(-2.0..2.0);
    let mut t = FiniteTensor::default();
    for _ in 0..rank {
        let a: f64 = rng.gen_range(0.5..1.5);
        let b: f64 = rng.gen_range(0.5..1.5);
        let lambda = C64::from_polar(rng.gen_range(0.5..1.0), rng.gen_range(0.0..2.0 * PI));
        let phi = SampledFunction::from_real_fn(grid, |x| (-PI * ((x[0] - x0) / a).powi(2)).exp());
        // Second factor is the Fourier image of an atom at (x0, ξ0), as in the decompositions.
        let atom = SampledFunction::from_fn(grid, |x| {
            C64::from_polar((-PI * ((x[0] - x0) / b).powi(2)).exp(), 2.0 * PI * xi0 * x[0])
        });
        let psi = fourier(&atom);
        t.push(lambda, phi, psi)?;
    }
    Ok(t)
}

fn thm42(cfg: &VerifyConfig) -> Result<(Checks, Vec<Row>)> {
    let pairs = pairs_or(cfg, &[(1.0, 1.0), (2.0, 2.0), (1.0, 3.0)]);
    for &(p1, p2) in &pairs {
        require(
            recip(p1) + recip(p2) >= 1.0,
            "thm4.2",
            PI_HYPOTHESIS,
            format!("p1 = {}, p2 = {}", fmt_p(p1), fmt_p(p2)),
        )?;
    }
    let (grid, fam, b) = setup(cfg)?;
    let locals = match cfg.local {
        Some(k) => vec![k],
        None => vec![LocalKind::L, LocalKind::FL],
    };
    let weights = weights_or(cfg, &[(0.0, 0.0), (1.0, 1.0)]);
    let mut configs = Vec::new();
    for &(p1, p2) in &pairs {
        for &e in &locals {
            for &(s1, s2) in &weights {
                configs.push((p1, p2, e, s1, s2));
            }
        }
    }
    let label = |kind: &str, c: &(f64, f64, LocalKind, f64, f64)| {
        format!("{kind} p1={} p2={} E={} s1={} s2={}", fmt_p(c.0), fmt_p(c.1), local_label(c.2, 2.0), c.3, c.4)
    };
    let norms = |c: &(f64, f64, LocalKind, f64, f64)| {
        let (p1, p2, e, s1, s2) = *c;
        let b = &b;
        let na = move |phi: &SampledFunction| {
            amalgam(phi, SpaceSpec::lp(p1, Weight::unit()), lp_global(p1, s1), b).unwrap_or(f64::NAN)
        };
        let nb = move |psi: &SampledFunction| {
            amalgam(&inverse_fourier(psi), local_space(e, 2.0), lp_global(p2, s2), b).unwrap_or(f64::NAN)
        };
        let target = move |f: &SampledFunction| amalgam(f, local_space(e, 2.0), lp_global(1.0, s1 + s2), b);
        (na, nb, target)
    };
    let g = normalized_gaussian(grid);
    let ids: Vec<usize> = (0..RANDOM_TENSORS).collect();
    let mut rows = collect(&ids, |&j| {
        let t = random_tensor(grid, cfg.seed, j)?;
        let f = synthesize(&t, &g)?;
        let mut out = Vec::new();
        for c in &configs {
            let (na, nb, target) = norms(c);
            out.push(ratio_row(&label("upper", c), &format!("random tensor {j}"), target(&f)?, pi_upper_bound(&t, &na, &nb)));
        }
        Ok(out)
    })?;
    rows.extend(collect(&fam, |m| {
        let t = decompose_mollified(&m.f, &b)?.tensor;
        let mut out = Vec::new();
        for c in &configs {
            let (na, nb, target) = norms(c);
            out.push(ratio_row(&label("lower", c), &m.name, pi_upper_bound(&t, &na, &nb), target(&m.f)?));
        }
        Ok(out)
    })?);
    let mut checks = Vec::new();
    for c in &configs {
        for kind in ["upper", "lower"] {
            checks.push((label(kind, c), Check::Spread { bound: cfg.spread_bound }));
        }
    }
    Ok((checks, rows))
}

fn order_row(group: &str, function: &str, eps: f64, pi: f64) -> Row {
    let ok = eps <= pi * (1.0 + ORDER_SLACK);
    flag_row(group, function, eps, pi, ok, String::new())
}

fn thm51(cfg: &VerifyConfig) -> Result<(Checks, Vec<Row>)> {
    let pairs = pairs_or(cfg, &[(2.0, 2.0), (3.0, 3.0), (4.0, 2.0)]);
    for &(p1, p2) in &pairs {
        let ok = p1 > 1.0 && p2 > 1.0 && p1.is_finite() && p2.is_finite() && recip(p1) + recip(p2) <= 1.0;
        require(ok, "thm5.1", EPS_HYPOTHESIS, format!("p1 = {}, p2 = {}", fmt_p(p1), fmt_p(p2)))?;
    }
    let (grid, fam, b) = setup(cfg)?;
    let weights = weights_or(cfg, &[(0.0, 0.0), (1.0, 1.0)]);
    let configs: Vec<(f64, f64, f64, f64)> =
        pairs.iter().flat_map(|&(p1, p2)| weights.iter().map(move |&(s1, s2)| (p1, p2, s1, s2))).collect();
    let label = |kind: &str, c: &(f64, f64, f64, f64)| format!("{kind} p1={} p2={} s1={} s2={}", c.0, c.1, c.2, c.3);
    let duals: Vec<Vec<DualPair>> = configs
        .iter()
        .map(|&(p1, p2, s1, s2)| {
            let a = SpaceSpec::lp(p1, Weight::Power(s1));
            let bb = SpaceSpec::flp(p2, Weight::Power(s2));
            make_dual_samples(cfg.dual_count, cfg.seed, (&a, &bb), grid)
        })
        .collect::<tfnorm_core::Result<_>>()?;
    let rows = collect(&fam, |m| {
        let t = decompose_mollified(&m.f, &b)?.tensor;
        let mut out = Vec::new();
        for (c, d) in configs.iter().zip(&duals) {
            let (p1, p2, s1, s2) = *c;
            let a = SpaceSpec::lp(p1, Weight::Power(s1));
            let bb = SpaceSpec::flp(p2, Weight::Power(s2));
            let pi = pi_upper_bound(
                &t,
                &|phi| space_norm(phi, &a).unwrap_or(f64::NAN),
                &|psi| space_norm(psi, &bb).unwrap_or(f64::NAN),
            );
            let eps = eps_lower_bound(&t, d)?;
            let target = amalgam(&m.f, SpaceSpec::lp(p2, Weight::unit()), GlobalSpec::Linf0 { w: Weight::Power(s1 + s2) }, &b)?;
            out.push(order_row(&label("eps <= pi", c), &m.name, eps, pi));
            out.push(ratio_row(&label("eps/sup", c), &m.name, eps, target));
        }
        Ok(out)
    })?;
    let mut checks = Vec::new();
    for c in &configs {
        checks.push((label("eps <= pi", c), Check::Rows));
        checks.push((label("eps/sup", c), Check::Spread { bound: cfg.eps_spread_bound }));
    }
    Ok((checks, rows))
}

fn cor61a(cfg: &VerifyConfig) -> Result<(Checks, Vec<Row>)> {
    let pairs = pairs_or(cfg, &[(1.0, 1.0), (1.0, 2.0), (2.0, 2.0)]);
    for &(p1, p2) in &pairs {
        require(1.0 <= p1 && p1 <= p2 && p2 <= 2.0, "cor6.1a", "1≤p₁≤p₂≤2", format!("p1 = {}, p2 = {}", fmt_p(p1), fmt_p(p2)))?;
    }
    let (_, fam, b) = setup(cfg)?;
    let labels: Vec<String> = pairs.iter().map(|(p1, p2)| format!("pi(L{p1} x L{p2})/W(FL{p2}, l1)")).collect();
    let rows = collect(&fam, |m| {
        let t = decompose_splitting(&m.f, &b)?.tensor;
        let mut out = Vec::new();
        for (&(p1, p2), label) in pairs.iter().zip(&labels) {
            let u = Weight::unit();
            let pi = pi_upper_bound(&t, &|phi| lp_norm(phi, p1, &u), &|psi| lp_norm(psi, p2, &u));
            let target = amalgam(&m.f, SpaceSpec::flp(p2, Weight::unit()), lp_global(1.0, 0.0), &b)?;
            out.push(ratio_row(label, &m.name, pi, target));
        }
        Ok(out)
    })?;
    let checks = labels.into_iter().map(|l| (l, Check::Spread { bound: cfg.spread_bound })).collect();
    Ok((checks, rows))
}

fn cor61b(cfg: &VerifyConfig) -> Result<(Checks, Vec<Row>)> {
    let pairs = pairs_or(cfg, &[(2.0, 2.0), (3.0, 2.0), (4.0, 3.0)]);
    for &(p1, p2) in &pairs {
        require(2.0 <= p2 && p2 <= p1 && p1.is_finite(), "cor6.1b", "2≤p₂≤p₁<∞", format!("p1 = {}, p2 = {}", fmt_p(p1), fmt_p(p2)))?;
    }
    let (grid, fam, b) = setup(cfg)?;
    let label = |kind: &str, p1: f64, p2: f64| format!("{kind} p1={p1} p2={p2}");
    let duals: Vec<Vec<DualPair>> = pairs
        .iter()
        .map(|&(p1, p2)| {
            let a = SpaceSpec::lp(p1, Weight::unit());
            let bb = SpaceSpec::lp(p2, Weight::unit());
            make_dual_samples(cfg.dual_count, cfg.seed, (&a, &bb), grid)
        })
        .collect::<tfnorm_core::Result<_>>()?;
    let rows = collect(&fam, |m| {
        let t = decompose_mollified(&m.f, &b)?.tensor;
        let mut out = Vec::new();
        for (&(p1, p2), d) in pairs.iter().zip(&duals) {
            let u = Weight::unit();
            let pi = pi_upper_bound(&t, &|phi| lp_norm(phi, p1, &u), &|psi| lp_norm(psi, p2, &u));
            let eps = eps_lower_bound(&t, d)?;
            let target = amalgam(&m.f, SpaceSpec::flp(p2, Weight::unit()), GlobalSpec::Linf0 { w: Weight::unit() }, &b)?;
            out.push(order_row(&label("eps <= pi", p1, p2), &m.name, eps, pi));
            out.push(ratio_row(&label("eps/W(FL, linf0)", p1, p2), &m.name, eps, target));
        }
        Ok(out)
    })?;
    let mut checks = Vec::new();
    for &(p1, p2) in &pairs {
        checks.push((label("eps <= pi", p1, p2), Check::Rows));
        checks.push((label("eps/W(FL, linf0)", p1, p2), Check::Spread { bound: cfg.eps_spread_bound }));
    }
    Ok((checks, rows))
}

fn rem62(cfg: &VerifyConfig) -> Result<(Checks, Vec<Row>)> {
    let (grid, fam, b) = setup(cfg)?;
    let ps: Vec<f64> = match cfg.p2.or(cfg.p1) {
        Some(p) => vec![p],
        None => vec![1.0, 2.0],
    };
    let (s1, s2) = (cfg.s1.unwrap_or(0.0), cfg.s2.unwrap_or(0.0));
    let labels: Vec<String> = ps.iter().map(|p| format!("W(FL{p}[{s1}], l1[{s2}])/M{p},1[{s1},{s2}] of Finv")).collect();
    let g = normalized_gaussian(grid.dual());
    let rows = collect(&fam, |m| {
        let v = stft(&inverse_fourier(&m.f), &g)?;
        let mut out = Vec::new();
        for (&p, label) in ps.iter().zip(&labels) {
            let lhs = amalgam(&m.f, SpaceSpec::flp(p, Weight::Power(s1)), lp_global(1.0, s2), &b)?;
            let rhs = mixed_norm(&v, p, 1.0, &Weight::tensor(Weight::Power(s1), Weight::Power(s2)))?;
            out.push(ratio_row(label, &m.name, lhs, rhs));
        }
        Ok(out)
    })?;
    let checks = labels.into_iter().map(|l| (l, Check::Spread { bound: cfg.spread_bound })).collect();
    Ok((checks, rows))
}

fn cor67(cfg: &VerifyConfig) -> Result<(Checks, Vec<Row>)> {
    let (_, fam, _) = setup(cfg)?;
    let ss: Vec<f64> = match cfg.s1 {
        Some(s) => vec![s],
        None => vec![0.0, 1.0, 2.0],
    };
    if let Some(s) = ss.iter().find(|s| **s < 0.0) {
        return Err(HarnessError::Hypothesis {
            suite: "cor6.7".into(),
            hypothesis: "s≥0".into(),
            detail: format!("s = {s}"),
        });
    }
    let labels: Vec<String> = ss.iter().map(|s| format!("Q{s}/(L2[{s}] + FL2 image[{s}])")).collect();
    let moyal = "s=0 shubin vs L2 norm";
    let rows = collect(&fam, |m| {
        let ff = fourier(&m.f);
        let mut out = Vec::new();
        let mut q0 = None;
        for (&s, label) in ss.iter().zip(&labels) {
            let q = shubin_norm(&m.f, s)?.value;
            if s == 0.0 {
                q0 = Some(q);
            }
            let w = Weight::Power(s);
            out.push(ratio_row(label, &m.name, q, lp_norm(&m.f, 2.0, &w) + lp_norm(&ff, 2.0, &w)));
        }
        let q0 = match q0 {
            Some(q) => q,
            None => shubin_norm(&m.f, 0.0)?.value,
        };
        let l2 = m.f.l2();
        let rel = (q0 - l2).abs() / l2;
        out.push(flag_row(moyal, &m.name, rel, RESIDUAL_TOL, rel <= RESIDUAL_TOL, String::new()));
        Ok(out)
    })?;
    let mut checks: Checks = labels.into_iter().map(|l| (l, Check::Spread { bound: cfg.spread_bound })).collect();
    checks.push((moyal.into(), Check::AtMost { bound: RESIDUAL_TOL }));
    Ok((checks, rows))
}

fn golden(_cfg: &VerifyConfig) -> Result<(Checks, Vec<Row>)> {
    let group = "golden traces";
    let mut rows: Vec<Row> = run_golden()
        .into_iter()
        .map(|o| {
            let rules: Vec<&str> = o.trace.iter().map(|s| s.rule_id.as_str()).collect();
            let detail = format!("{} via [{}]", o.normal_form, rules.join(" "));
            flag_row(group, &o.input, f64::from(u8::from(o.pass)), 1.0, o.pass, detail)
        })
        .collect();
    let stable = golden_json() == golden_json();
    rows.push(flag_row("determinism", "trace json reproduced", f64::from(u8::from(stable)), 1.0, stable, String::new()));
    Ok((vec![(group.into(), Check::Rows), ("determinism".into(), Check::Rows)], rows))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceGroup {
    pub group: String,
    #[serde(rename = "N")]
    pub n: Vec<usize>,
    pub spread: Vec<f64>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceReport {
    pub suite: String,
    pub location: String,
    pub groups: Vec<ConvergenceGroup>,
    /// Pass flags of the individual runs, coarse to fine.
    pub runs_pass: Vec<bool>,
    pub pass: bool,
}

/// Reruns a suite at each resolution in [`CONVERGENCE_N`] and checks that no spread
/// grows by more than [`CONVERGENCE_SLACK`] under refinement.
pub fn run_convergence(id: &str, cfg: &VerifyConfig) -> Result<ConvergenceReport> {
    let reports: Vec<Report> = CONVERGENCE_N.iter().map(|&n| run_verification(id, &cfg.with_n(n))).collect::<Result<_>>()?;
    let mut groups = Vec::new();
    for (i, g) in reports[0].groups.iter().enumerate() {
        if !matches!(g.check, Check::Spread { .. }) {
            continue;
        }
        let spread: Vec<f64> = reports.iter().map(|r| r.groups[i].spread).collect();
        let pass = spread.windows(2).all(|w| w[1] <= w[0] * (1.0 + CONVERGENCE_SLACK));
        groups.push(ConvergenceGroup { group: g.group.clone(), n: CONVERGENCE_N.to_vec(), spread, pass });
    }
    let pass = groups.iter().all(|g| g.pass);
    Ok(ConvergenceReport {
        suite: id.into(),
        location: reports[0].location.clone(),
        groups,
        runs_pass: reports.iter().map(|r| r.pass).collect(),
        pass,
    })
}
