//! Finite tensors `Σ λ_j φ_j ⊗ ψ_j` with `φ_j` in time and `ψ_j` in frequency, their
//! synthesis through the adjoint STFT, projective/injective norm bounds and
//! constructive decompositions.

use crate::bupu::Bupu;
use crate::error::{Error, Result};
use crate::grid::{GridSpec, SampledFunction, C64};
use crate::norms::lp_norm;
use crate::ops::shift_by_steps;
use crate::space::{conjugate, SpaceSpec};
use crate::stft::TimeFrequencyArray;
use crate::transforms::{convolve, fourier, inverse_fourier};
use crate::windows::{bump, plateau, tensorized};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, PartialEq)]
pub struct TensorTerm {
    pub lambda: C64,
    /// Time factor, on the base grid.
    pub phi: SampledFunction,
    /// Frequency factor, on the dual grid.
    pub psi: SampledFunction,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct FiniteTensor {
    pub terms: Vec<TensorTerm>,
}

impl FiniteTensor {
    pub fn push(&mut self, lambda: C64, phi: SampledFunction, psi: SampledFunction) -> Result<()> {
        phi.grid.dual().require_same(&psi.grid)?;
        self.terms.push(TensorTerm { lambda, phi, psi });
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.terms.len()
    }

    /// `Σ λ φ(x) ψ(ξ)` as a time-frequency array.
    pub fn to_array(&self) -> Result<TimeFrequencyArray> {
        let first = self.terms.first().ok_or_else(|| Error::InvalidArgument("empty tensor".into()))?;
        let mut out = TimeFrequencyArray::zeros(first.phi.grid)?;
        for t in &self.terms {
            let r = TimeFrequencyArray::outer(&t.phi.scale(t.lambda), &t.psi)?;
            for (o, v) in out.values.iter_mut().zip(r.values) {
                *o += v;
            }
        }
        Ok(out)
    }
}

/// `Σ |λ| ‖φ‖_A ‖ψ‖_B`, an upper bound for the projective norm.
pub fn pi_upper_bound(
    t: &FiniteTensor,
    norm_a: &dyn Fn(&SampledFunction) -> f64,
    norm_b: &dyn Fn(&SampledFunction) -> f64,
) -> f64 {
    t.terms.iter().map(|s| s.lambda.norm() * norm_a(&s.phi) * norm_b(&s.psi)).sum()
}

/// A pair of unit-norm functionals, acting by `⟨f', φ⟩ = ∫ f' φ` (no conjugation).
#[derive(Debug, Clone, PartialEq)]
pub struct DualPair {
    pub f: SampledFunction,
    pub e: SampledFunction,
}

/// `max_{(f', e')} |Σ λ ⟨f', φ⟩ ⟨e', ψ⟩|`, a lower bound for the injective norm.
pub fn eps_lower_bound(t: &FiniteTensor, duals: &[DualPair]) -> Result<f64> {
    let mut best: f64 = 0.0;
    for d in duals {
        let mut s = C64::new(0.0, 0.0);
        for term in &t.terms {
            s += term.lambda * d.f.pair(&term.phi)? * d.e.pair(&term.psi)?;
        }
        best = best.max(s.norm());
    }
    Ok(best)
}

/// Norm of a functional with respect to the space it acts on, matching the pairing above.
pub fn dual_norm(kernel: &SampledFunction, on: &SpaceSpec) -> Result<f64> {
    on.validate()?;
    match on {
        SpaceSpec::Lp { p, w } => Ok(lp_norm(kernel, conjugate(*p), &w.reciprocal())),
        SpaceSpec::C0 { w } => Ok(lp_norm(kernel, 1.0, &w.reciprocal())),
        SpaceSpec::FLp { p, w } => Ok(lp_norm(&fourier(kernel), conjugate(*p), &w.reciprocal())),
        SpaceSpec::MixedLpq { .. } => Err(Error::Unsupported("dual of a mixed space".into())),
    }
}

/// Physical width of the frequency band carrying random coefficients in [`make_dual_samples`].
pub const DUAL_BANDWIDTH: f64 = 1.0;
/// Largest physical offset of the band centre.
pub const DUAL_REACH: f64 = 3.0;
pub const DEFAULT_DUAL_COUNT: usize = 256;
pub const DEFAULT_DUAL_SEED: u64 = 0x5eed;

fn random_kernel(grid: GridSpec, rng: &mut ChaCha8Rng) -> SampledFunction {
    let dual = grid.dual();
    // Band measured in physical units so the functionals do not change with resolution.
    let bins = (DUAL_BANDWIDTH / dual.h()).round().max(1.0) as usize;
    let band = (bins.min(grid.n / 2) / if grid.dim == 2 { 4 } else { 1 }).max(1);
    let o = grid.origin_index();
    let lo = o - band / 2;
    // Random centre within a fixed physical range, clamped to half of the representable range.
    let reach = ((DUAL_REACH / dual.h()).round() as i64).min((grid.n / 4) as i64);
    let mut centre = [0i64; 2];
    for c in centre.iter_mut().take(grid.dim) {
        *c = rng.gen_range(-reach..=reach);
    }
    let mut spec = SampledFunction::zeros(dual);
    for i in 0..dual.len() {
        let mi = dual.multi_index(i);
        let inside = (0..grid.dim).all(|k| {
            let s = mi[k] as i64 - centre[k];
            s >= lo as i64 && s < (lo + band) as i64
        });
        if inside {
            spec.values[i] = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        }
    }
    inverse_fourier(&spec)
}

/// Deterministic unit-norm functionals for the pair `(A, B)` of spaces: each factor has
/// random coefficients on a frequency band of width [`DUAL_BANDWIDTH`] around a random centre.
/// The first factor lives on `grid`, the second on its dual grid.
pub fn make_dual_samples(
    count: usize,
    seed: u64,
    model: (&SpaceSpec, &SpaceSpec),
    grid: GridSpec,
) -> Result<Vec<DualPair>> {
    if count == 0 {
        return Err(Error::InvalidArgument("dual sample count must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let f = random_kernel(grid, &mut rng);
        let e = random_kernel(grid.dual(), &mut rng);
        let (nf, ne) = (dual_norm(&f, model.0)?, dual_norm(&e, model.1)?);
        out.push(DualPair { f: f.scale_re(1.0 / nf), e: e.scale_re(1.0 / ne) });
    }
    Ok(out)
}

/// `V_g^*(Σ λ φ ⊗ ψ) = Σ λ (F⁻¹ψ)(φ * g)`.
pub fn synthesize(t: &FiniteTensor, g: &SampledFunction) -> Result<SampledFunction> {
    let mut out = SampledFunction::zeros(g.grid);
    for s in &t.terms {
        let prod = inverse_fourier(&s.psi).mul(&convolve(&s.phi, g)?)?;
        out = out.add(&prod.scale(s.lambda))?;
    }
    Ok(out)
}

fn lattice_shift(b: &Bupu, f: &SampledFunction, k: [i64; 2]) -> SampledFunction {
    let q = (1.0 / b.grid.h()).round() as i64;
    shift_by_steps(f, [k[0] * q, k[1] * q])
}

fn is_zero(f: &SampledFunction) -> bool {
    f.values.iter().all(|v| *v == C64::new(0.0, 0.0))
}

/// Result of a constructive decomposition: the tensor and the window that synthesizes `f`.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub tensor: FiniteTensor,
    pub window: SampledFunction,
}

/// Plateau window: 1 on `[-2, 2]^d`, 0 outside `(-3, 3)^d`.
pub fn plateau_window(grid: GridSpec) -> SampledFunction {
    tensorized(grid, |t| plateau(t, 2.0, 3.0))
}

fn on_unit_cube(grid: &GridSpec, i: usize) -> bool {
    grid.point(i)[..grid.dim].iter().all(|c| c.abs() <= 1.0)
}

/// Splitting `f = Σ_k V_g^*(T_k g ⊗ F(f φ_k T_k ψ))` with `g` a plateau window and
/// `ψ = 1/(g*g)` near `[-1, 1]^d`.
pub fn decompose_splitting(f: &SampledFunction, b: &Bupu) -> Result<Decomposition> {
    let grid = f.grid;
    grid.require_same(&b.grid)?;
    let g = plateau_window(grid);
    let gg = convolve(&g, &g)?;
    for i in 0..grid.len() {
        if on_unit_cube(&grid, i) && gg.values[i].re < 1.0 {
            return Err(Error::Construction(format!(
                "g*g = {} < 1 at {:?}",
                gg.values[i].re,
                grid.point(i)
            )));
        }
    }
    let cut = tensorized(grid, |t| plateau(t, 1.0, 1.5));
    let psi = SampledFunction::from_fn(grid, |_| C64::new(0.0, 0.0));
    let psi = SampledFunction {
        grid,
        values: psi
            .values
            .iter()
            .enumerate()
            .map(|(i, _)| if cut.values[i].re > 0.0 { cut.values[i] / gg.values[i].re } else { C64::new(0.0, 0.0) })
            .collect(),
    };
    let mut tensor = FiniteTensor::default();
    for (k, phik) in b.members() {
        let local = f.mul(&phik)?;
        if is_zero(&local) {
            continue;
        }
        let piece = local.mul(&lattice_shift(b, &psi, k))?;
        tensor.push(C64::new(1.0, 0.0), lattice_shift(b, &g, k), fourier(&piece))?;
    }
    Ok(Decomposition { tensor, window: g })
}

/// Mollified decomposition `f = Σ_k V_g^*(T_k φ ⊗ F(f φ_k))` with `φ >= 0` supported in
/// `(-1, 1)^d` of unit mass and `g` a plateau window, so that `φ * g = 1` on `[-1, 1]^d`.
pub fn decompose_mollified(f: &SampledFunction, b: &Bupu) -> Result<Decomposition> {
    let grid = f.grid;
    grid.require_same(&b.grid)?;
    let raw = tensorized(grid, bump);
    let mass: f64 = raw.values.iter().map(|v| v.re).sum::<f64>() * grid.cell();
    let moll = raw.scale_re(1.0 / mass);
    let g = plateau_window(grid);
    let chi = convolve(&moll, &g)?;
    for i in 0..grid.len() {
        if on_unit_cube(&grid, i) && (chi.values[i].re - 1.0).abs() > 1e-12 {
            return Err(Error::Construction(format!(
                "φ*g = {} differs from 1 at {:?}",
                chi.values[i].re,
                grid.point(i)
            )));
        }
    }
    let mut tensor = FiniteTensor::default();
    for (k, phik) in b.members() {
        let local = f.mul(&phik)?;
        if is_zero(&local) {
            continue;
        }
        tensor.push(C64::new(1.0, 0.0), lattice_shift(b, &moll, k), fourier(&local))?;
    }
    Ok(Decomposition { tensor, window: g })
}
