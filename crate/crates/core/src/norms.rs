//! Weighted Lebesgue, mixed, amalgam and modulation norms on sampled data.

use crate::bupu::Bupu;
use crate::error::{Error, Result};
use crate::grid::{euclid, GridSpec, SampledFunction};
use crate::ops::shift_by_steps;
use crate::space::{check_exponent, SpaceSpec};
use crate::stft::{stft, TimeFrequencyArray};
use crate::transforms::{fourier, inverse_fourier};
use crate::weight::Weight;
use crate::windows::normalized_gaussian;
use std::fmt;

/// `(∫ |f w|^p)^{1/p}` by Riemann sum; `p = ∞` gives `max |f w|`.
pub fn lp_norm(f: &SampledFunction, p: f64, w: &Weight) -> f64 {
    let g = f.grid;
    let vals = (0..g.len()).map(|i| {
        let x = g.point(i);
        f.values[i].norm() * w.eval(&x[..g.dim])
    });
    if p.is_infinite() {
        vals.fold(0.0, f64::max)
    } else {
        (vals.map(|v| v.powf(p)).sum::<f64>() * g.cell()).powf(1.0 / p)
    }
}

/// Radii `r = jL/8`, `j = 0..8`, used by [`c0_tail_profile`].
pub fn tail_radii(grid: &GridSpec) -> Vec<f64> {
    (0..8).map(|j| j as f64 * grid.l / 8.0).collect()
}

/// `sup_{|x| >= r} |f(x)| w(x)` at the radii of [`tail_radii`].
pub fn c0_tail_profile(f: &SampledFunction, w: &Weight) -> Vec<f64> {
    let g = f.grid;
    let radii = tail_radii(&g);
    let mut prof = vec![0.0f64; radii.len()];
    for i in 0..g.len() {
        let x = g.point(i);
        let r = euclid(&x[..g.dim]);
        let v = f.values[i].norm() * w.eval(&x[..g.dim]);
        for (j, &rj) in radii.iter().enumerate() {
            if r >= rj {
                prof[j] = prof[j].max(v);
            }
        }
    }
    prof
}

/// The profile decays by three orders of magnitude across the grid.
pub fn tail_vanishes(profile: &[f64]) -> bool {
    match (profile.first(), profile.last()) {
        (Some(&a), Some(&b)) => b <= 1e-3 * a,
        _ => false,
    }
}

fn weight_table(w: &Weight, phi: &TimeFrequencyArray) -> Vec<f64> {
    let (xg, fg) = (phi.x_grid, phi.xi_grid);
    let d = xg.dim;
    let m = fg.len();
    let mut out = vec![0.0; phi.values.len()];
    if let Weight::Tensor(a, b) = w {
        let wa: Vec<f64> = (0..xg.len()).map(|i| a.eval(&xg.point(i)[..d])).collect();
        let wb: Vec<f64> = (0..m).map(|k| b.eval(&fg.point(k)[..d])).collect();
        for i in 0..xg.len() {
            for k in 0..m {
                out[i * m + k] = wa[i] * wb[k];
            }
        }
    } else {
        for i in 0..xg.len() {
            let x = xg.point(i);
            for k in 0..m {
                let xi = fg.point(k);
                let z = [x[0], x[1], xi[0], xi[1]];
                let z: &[f64] = if d == 1 { &[z[0], z[2]] } else { &z };
                out[i * m + k] = w.eval(z);
            }
        }
    }
    out
}

fn pnorm_accumulate(vals: impl Iterator<Item = f64>, p: f64, cell: f64) -> f64 {
    if p.is_infinite() {
        vals.fold(0.0, f64::max)
    } else {
        (vals.map(|v| v.powf(p)).sum::<f64>() * cell).powf(1.0 / p)
    }
}

fn mixed_with_mask(phi: &TimeFrequencyArray, p: f64, q: f64, wt: &[f64], mask: impl Fn(usize, usize) -> bool) -> f64 {
    let nx = phi.x_grid.len();
    let m = phi.xi_grid.len();
    let inner: Vec<f64> = (0..m)
        .map(|k| {
            pnorm_accumulate(
                (0..nx).filter(|&i| mask(i, k)).map(|i| phi.values[i * m + k].norm() * wt[i * m + k]),
                p,
                phi.x_grid.cell(),
            )
        })
        .collect();
    pnorm_accumulate(inner.into_iter(), q, phi.xi_grid.cell())
}

/// `‖Φ‖_{L^{p,q}_w}`: inner `L^p` over `x`, outer `L^q` over `ξ`.
pub fn mixed_norm(phi: &TimeFrequencyArray, p: f64, q: f64, w: &Weight) -> Result<f64> {
    check_exponent(p)?;
    check_exponent(q)?;
    let wt = weight_table(w, phi);
    Ok(mixed_with_mask(phi, p, q, &wt, |_, _| true))
}

/// Norm of `f` in a Lebesgue, Fourier–Lebesgue or `C0` space.
pub fn space_norm(f: &SampledFunction, spec: &SpaceSpec) -> Result<f64> {
    spec.validate()?;
    match spec {
        SpaceSpec::Lp { p, w } => Ok(lp_norm(f, *p, w)),
        SpaceSpec::FLp { p, w } => Ok(lp_norm(&inverse_fourier(f), *p, w)),
        SpaceSpec::C0 { w } => Ok(lp_norm(f, f64::INFINITY, w)),
        SpaceSpec::MixedLpq { .. } => {
            Err(Error::Unsupported("mixed space as a local component".into()))
        }
    }
}

/// `‖f · window‖` in the local space; the product stays on the full grid.
pub fn local_norm(f: &SampledFunction, window: &SampledFunction, spec: &SpaceSpec) -> Result<f64> {
    space_norm(&f.mul(window)?, spec)
}

#[derive(Debug, Clone, PartialEq)]
pub enum GlobalSpec {
    Lp { p: f64, w: Weight },
    Linf { w: Weight },
    /// Supremum with a vanishing-at-infinity diagnostic.
    Linf0 { w: Weight },
}

impl GlobalSpec {
    pub fn weight(&self) -> &Weight {
        match self {
            GlobalSpec::Lp { w, .. } | GlobalSpec::Linf { w } | GlobalSpec::Linf0 { w } => w,
        }
    }

    pub fn exponent(&self) -> f64 {
        match self {
            GlobalSpec::Lp { p, .. } => *p,
            _ => f64::INFINITY,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AmalgamSpec {
    pub local: SpaceSpec,
    pub global: GlobalSpec,
}

impl AmalgamSpec {
    pub fn new(local: SpaceSpec, global: GlobalSpec) -> Self {
        AmalgamSpec { local, global }
    }

    pub fn validate(&self) -> Result<()> {
        if matches!(self.local, SpaceSpec::MixedLpq { .. }) {
            return Err(Error::Unsupported("mixed space as a local component".into()));
        }
        self.local.validate()?;
        if let GlobalSpec::Lp { p, .. } = self.global {
            check_exponent(p)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Discrete,
    Continuous,
    Direct,
    ViaAmalgam,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Discrete => "discrete",
            Method::Continuous => "continuous",
            Method::Direct => "direct",
            Method::ViaAmalgam => "via_amalgam",
        })
    }
}

/// Decay profile of local coefficients, reported for vanishing-sup globals.
#[derive(Debug, Clone, PartialEq)]
pub struct TailDiagnostic {
    pub profile: Vec<f64>,
    pub vanishing: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NormResult {
    pub value: f64,
    /// Contribution of samples within the outer boundary strip.
    pub truncation_error_estimate: f64,
    pub method: Method,
    /// Present for `ℓ^∞_0` globals; the vanishing condition is only checked by proxy.
    pub tail: Option<TailDiagnostic>,
}

fn global_combine(coeffs: &[(f64, f64)], global: &GlobalSpec, cell: f64) -> f64 {
    let p = global.exponent();
    pnorm_accumulate(coeffs.iter().map(|(_, a)| *a), p, cell)
}

fn tail_of(coeffs: &[(f64, f64)], extent: f64) -> TailDiagnostic {
    let profile: Vec<f64> = (0..8)
        .map(|j| {
            let r = j as f64 * extent / 8.0;
            coeffs.iter().filter(|(rad, _)| *rad >= r).fold(0.0f64, |m, (_, a)| m.max(*a))
        })
        .collect();
    let vanishing = tail_vanishes(&profile);
    TailDiagnostic { profile, vanishing }
}

/// Combines `(position radius, weighted local norm)` pairs into a [`NormResult`].
fn finish(coeffs: Vec<(f64, f64)>, boundary: Vec<bool>, global: &GlobalSpec, cell: f64, extent: f64, method: Method) -> NormResult {
    let value = global_combine(&coeffs, global, cell);
    let edge: Vec<(f64, f64)> = coeffs.iter().zip(&boundary).filter(|(_, b)| **b).map(|(c, _)| *c).collect();
    let truncation_error_estimate = global_combine(&edge, global, cell);
    let tail = matches!(global, GlobalSpec::Linf0 { .. }).then(|| tail_of(&coeffs, extent));
    NormResult { value, truncation_error_estimate, method, tail }
}

/// `‖(‖f φ_k‖_E w(k))_k‖_{ℓ^p}` over the partition.
pub fn amalgam_norm_discrete(f: &SampledFunction, a: &AmalgamSpec, b: &Bupu) -> Result<NormResult> {
    a.validate()?;
    f.grid.require_same(&b.grid)?;
    let d = f.grid.dim;
    let w = a.global.weight();
    let mut coeffs = Vec::new();
    let mut boundary = Vec::new();
    for (k, phi) in b.members() {
        let kf = [k[0] as f64, k[1] as f64];
        let c = local_norm(f, &phi, &a.local)? * w.eval(&kf[..d]);
        coeffs.push((euclid(&kf[..d]), c));
        boundary.push(k[..d].iter().any(|v| v.abs() >= b.k_max - 2));
    }
    Ok(finish(coeffs, boundary, &a.global, 1.0, b.k_max as f64, Method::Discrete))
}

/// Default number of window positions per unit length for [`amalgam_norm_continuous`].
pub const SHIFTS_PER_UNIT: usize = 4;

/// `(∫ ‖f T_x χ‖_E^p w(x)^p dx)^{1/p}` with `x` on a sub-grid of `shifts_per_unit` points per unit.
pub fn amalgam_norm_continuous(
    f: &SampledFunction,
    a: &AmalgamSpec,
    chi: &SampledFunction,
    shifts_per_unit: usize,
) -> Result<NormResult> {
    a.validate()?;
    f.grid.require_same(&chi.grid)?;
    let g = f.grid;
    let d = g.dim;
    let per_unit = (1.0 / g.h()).round() as usize;
    if shifts_per_unit == 0 || per_unit % shifts_per_unit != 0 {
        return Err(Error::InvalidArgument(format!(
            "{shifts_per_unit} shifts per unit do not divide the {per_unit} samples per unit"
        )));
    }
    let stride = per_unit / shifts_per_unit;
    let w = a.global.weight();
    let o = g.origin_index() as i64;
    let axis: Vec<usize> = (0..g.n).step_by(stride).collect();
    let positions: Vec<[usize; 2]> = if d == 1 {
        axis.iter().map(|&i| [i, 0]).collect()
    } else {
        axis.iter().flat_map(|&i| axis.iter().map(move |&j| [i, j])).collect()
    };
    let mut coeffs = Vec::with_capacity(positions.len());
    let mut boundary = Vec::with_capacity(positions.len());
    for mi in positions {
        let x = g.point(g.flat_index(mi));
        let win = shift_by_steps(chi, [mi[0] as i64 - o, if d == 2 { mi[1] as i64 - o } else { 0 }]);
        coeffs.push((euclid(&x[..d]), local_norm(f, &win, &a.local)? * w.eval(&x[..d])));
        boundary.push(x[..d].iter().any(|c| c.abs() >= g.l - 2.0));
    }
    let cell = (1.0 / shifts_per_unit as f64).powi(d as i32);
    Ok(finish(coeffs, boundary, &a.global, cell, g.l, Method::Continuous))
}

fn tf_boundary_estimate(phi: &TimeFrequencyArray, p: f64, q: f64, w: &Weight) -> f64 {
    let wt = weight_table(w, phi);
    let (xg, fg) = (phi.x_grid, phi.xi_grid);
    let d = xg.dim;
    let near = |g: &GridSpec, i: usize| g.point(i)[..d].iter().any(|c| c.abs() > 15.0 * g.l / 16.0);
    mixed_with_mask(phi, p, q, &wt, |i, k| near(&xg, i) || near(&fg, k))
}

/// `‖V_g f‖_{L^{p,q}_w}`.
pub fn modulation_norm(f: &SampledFunction, g: &SampledFunction, p: f64, q: f64, w: &Weight) -> Result<NormResult> {
    let v = stft(f, g)?;
    let value = mixed_norm(&v, p, q, w)?;
    Ok(NormResult {
        value,
        truncation_error_estimate: tf_boundary_estimate(&v, p, q, w),
        method: Method::Direct,
        tail: None,
    })
}

/// `‖Ff‖_{W(FL^{p1}_{η1}, ℓ^{p2}_{η2})}`, equivalent to the `M^{p1,p2}_{η1⊗η2}` norm of `f`.
/// The partition must live on the dual grid of `f`.
pub fn modulation_norm_via_amalgam(
    f: &SampledFunction,
    p1: f64,
    p2: f64,
    eta1: &Weight,
    eta2: &Weight,
    b: &Bupu,
) -> Result<NormResult> {
    let spec = AmalgamSpec::new(
        SpaceSpec::flp(p1, eta1.clone()),
        GlobalSpec::Lp { p: p2, w: eta2.clone() },
    );
    let mut r = amalgam_norm_discrete(&fourier(f), &spec, b)?;
    r.method = Method::ViaAmalgam;
    Ok(r)
}

/// `M^{2,2}` norm with radial weight `(1 + |(x, ξ)|)^s` and the unit Gaussian window.
pub fn shubin_norm(f: &SampledFunction, s: f64) -> Result<NormResult> {
    let g = normalized_gaussian(f.grid);
    modulation_norm(f, &g, 2.0, 2.0, &Weight::Power(s))
}
