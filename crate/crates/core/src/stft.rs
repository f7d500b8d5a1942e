//! Short-time Fourier transform `V_g f(x, ξ) = ∫ e^{-2πi t·ξ} f(t) conj(g(t-x)) dt`,
//! its adjoint and related identities.

use crate::error::{Error, Result};
use crate::fft::centered;
use crate::grid::{GridSpec, SampledFunction, C64};
use crate::ops::shift_by_steps;
use crate::transforms::{fourier, inverse_fourier};
use std::f64::consts::PI;

/// Largest number of time-frequency samples an array may hold.
pub const MAX_TF_SAMPLES: usize = 1 << 21;

/// Samples of a function on `x_grid × xi_grid`, row-major with `x` as the slow index.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeFrequencyArray {
    pub x_grid: GridSpec,
    pub xi_grid: GridSpec,
    pub values: Vec<C64>,
}

impl TimeFrequencyArray {
    pub fn zeros(x_grid: GridSpec) -> Result<Self> {
        let n = x_grid.len() * x_grid.len();
        if n > MAX_TF_SAMPLES {
            return Err(Error::Unsupported(format!(
                "time-frequency array of {n} samples exceeds {MAX_TF_SAMPLES}"
            )));
        }
        Ok(TimeFrequencyArray {
            x_grid,
            xi_grid: x_grid.dual(),
            values: vec![C64::new(0.0, 0.0); n],
        })
    }

    pub fn row(&self, ix: usize) -> &[C64] {
        let m = self.xi_grid.len();
        &self.values[ix * m..(ix + 1) * m]
    }

    /// Rank-one array `φ(x) ψ(ξ)`.
    pub fn outer(phi: &SampledFunction, psi: &SampledFunction) -> Result<Self> {
        phi.grid.dual().require_same(&psi.grid)?;
        let mut out = Self::zeros(phi.grid)?;
        let m = psi.values.len();
        for (i, a) in phi.values.iter().enumerate() {
            for (j, b) in psi.values.iter().enumerate() {
                out.values[i * m + j] = a * b;
            }
        }
        Ok(out)
    }

    /// Cell area `h^d Δξ^d`.
    pub fn cell(&self) -> f64 {
        self.x_grid.cell() * self.xi_grid.cell()
    }

    pub fn l2(&self) -> f64 {
        (self.values.iter().map(|v| v.norm_sqr()).sum::<f64>() * self.cell()).sqrt()
    }

    pub fn rel_dist(&self, other: &Self) -> f64 {
        let num: f64 = self.values.iter().zip(&other.values).map(|(a, b)| (a - b).norm_sqr()).sum();
        let den: f64 = other.values.iter().map(|v| v.norm_sqr()).sum();
        (num / den).sqrt()
    }
}

fn steps_to(grid: &GridSpec, ix: usize) -> [i64; 2] {
    let mi = grid.multi_index(ix);
    let o = grid.origin_index() as i64;
    [mi[0] as i64 - o, mi[1] as i64 - o]
}

/// `V_g f` sampled on the grid times its dual grid.
pub fn stft(f: &SampledFunction, g: &SampledFunction) -> Result<TimeFrequencyArray> {
    f.grid.require_same(&g.grid)?;
    let grid = f.grid;
    let mut out = TimeFrequencyArray::zeros(grid)?;
    let m = grid.len();
    let gc = g.conj();
    for ix in 0..grid.len() {
        let win = shift_by_steps(&gc, steps_to(&grid, ix));
        let frame = f.mul(&win)?;
        let spec = centered(&frame, false);
        out.values[ix * m..(ix + 1) * m].copy_from_slice(&spec.values);
    }
    Ok(out)
}

/// `V_g^*Φ(t) = ∫∫ e^{2πi ξ·t} Φ(x, ξ) g(t-x) dx dξ`.
pub fn adjoint_stft(phi: &TimeFrequencyArray, g: &SampledFunction) -> Result<SampledFunction> {
    phi.x_grid.require_same(&g.grid)?;
    let grid = phi.x_grid;
    let mut out = SampledFunction::zeros(grid);
    let cell = grid.cell();
    for ix in 0..grid.len() {
        let row = SampledFunction { grid: phi.xi_grid, values: phi.row(ix).to_vec() };
        if row.values.iter().all(|v| *v == C64::new(0.0, 0.0)) {
            continue;
        }
        let a = centered(&row, true);
        let win = shift_by_steps(g, steps_to(&grid, ix));
        for ((o, av), wv) in out.values.iter_mut().zip(&a.values).zip(&win.values) {
            *o += av * wv * cell;
        }
    }
    Ok(out)
}

/// Relative residual `‖V*_{g1} V_{g2} f - (g1, g2) f‖ / (|(g1, g2)| ‖f‖)`.
/// Errors with `IllConditioned` when `|(g1, g2)| < 1e-10 ‖g1‖ ‖g2‖`.
pub fn check_inversion(
    f: &SampledFunction,
    g1: &SampledFunction,
    g2: &SampledFunction,
) -> Result<f64> {
    let c = g1.inner(g2)?;
    if c.norm() < 1e-10 * g1.l2() * g2.l2() {
        return Err(Error::IllConditioned(format!(
            "window pairing {:.3e} is numerically zero",
            c.norm()
        )));
    }
    let back = adjoint_stft(&stft(f, g2)?, g1)?;
    let resid = back.sub(&f.scale(c))?.l2();
    Ok(resid / (c.norm() * f.l2()))
}

/// Relative discrepancy between `V_g f` and `e^{-2πi x·ξ} F(Ff · conj(T_ξ φ))(-x)` with
/// `g = F⁻¹φ`. `φ` lives on the dual grid of `f`.
pub fn stft_factorization_residual(f: &SampledFunction, phi: &SampledFunction) -> Result<f64> {
    let grid = f.grid;
    grid.dual().require_same(&phi.grid)?;
    let g = inverse_fourier(phi);
    let direct = stft(f, &g)?;
    let ff = fourier(f);
    let dual = phi.grid;
    let phic = phi.conj();
    let n = grid.n;
    let mut alt = TimeFrequencyArray::zeros(grid)?;
    let m = dual.len();
    for k in 0..dual.len() {
        let win = shift_by_steps(&phic, steps_to(&dual, k));
        let w = fourier(&ff.mul(&win)?);
        let xi = dual.point(k);
        for ix in 0..grid.len() {
            let mi = grid.multi_index(ix);
            let neg = [(n - mi[0]) % n, (n - mi[1]) % n];
            let x = grid.point(ix);
            let dot: f64 = (0..grid.dim).map(|a| x[a] * xi[a]).sum();
            alt.values[ix * m + k] = C64::from_polar(1.0, -2.0 * PI * dot) * w.values[grid.flat_index(neg)];
        }
    }
    Ok(alt.rel_dist(&direct))
}
