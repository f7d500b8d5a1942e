//! Fourier transform, convolution, Fourier–Lebesgue norms, the smoothing operators
//! `G_n f = χ_n * (φ_n f)` and Hermite projections.

use crate::error::{Error, Result};
use crate::fft::{along_axes, centered, padded, plan};
use crate::grid::{GridSpec, SampledFunction, C64};
use crate::norms::lp_norm;
use crate::weight::Weight;
use crate::windows::{bump, tensorized};
use std::f64::consts::PI;

/// `Ff(ξ) = ∫ e^{-2πi x·ξ} f(x) dx` on the dual grid.
pub fn fourier(f: &SampledFunction) -> SampledFunction {
    centered(f, false)
}

/// `F⁻¹u(x) = ∫ e^{2πi x·ξ} u(ξ) dξ`; exact inverse of [`fourier`] on the grid.
pub fn inverse_fourier(u: &SampledFunction) -> SampledFunction {
    centered(u, true)
}

/// Linear convolution `(f*g)(x) = ∫ f(y) g(x-y) dy`, zero-padded and truncated to the grid.
pub fn convolve(f: &SampledFunction, g: &SampledFunction) -> Result<SampledFunction> {
    f.grid.require_same(&g.grid)?;
    let grid = f.grid;
    let (n, d) = (grid.n, grid.dim);
    let m = padded(n);
    let len = m.pow(d as u32);
    let embed = |s: &SampledFunction| {
        let mut buf = vec![C64::new(0.0, 0.0); len];
        for i in 0..grid.len() {
            let mi = grid.multi_index(i);
            let j = if d == 1 { mi[0] } else { mi[0] * m + mi[1] };
            buf[j] = s.values[i];
        }
        buf
    };
    let (mut a, mut b) = (embed(f), embed(g));
    let fwd = plan(m, false);
    let inv = plan(m, true);
    let mut scratch = vec![C64::new(0.0, 0.0); fwd.get_inplace_scratch_len().max(inv.get_inplace_scratch_len())];
    along_axes(&mut a, m, d, |l| fwd.process_with_scratch(l, &mut scratch));
    along_axes(&mut b, m, d, |l| fwd.process_with_scratch(l, &mut scratch));
    for (x, y) in a.iter_mut().zip(&b) {
        *x *= y;
    }
    along_axes(&mut a, m, d, |l| inv.process_with_scratch(l, &mut scratch));
    let scale = grid.cell() / len as f64;
    let off = n / 2;
    let mut out = SampledFunction::zeros(grid);
    for i in 0..grid.len() {
        let mi = grid.multi_index(i);
        let j = if d == 1 { mi[0] + off } else { (mi[0] + off) * m + mi[1] + off };
        out.values[i] = a[j] * scale;
    }
    Ok(out)
}

/// `‖u‖_{FL^p_w} = ‖F⁻¹u‖_{L^p_w}`.
pub fn flp_norm(u: &SampledFunction, p: f64, w: &Weight) -> f64 {
    lp_norm(&inverse_fourier(u), p, w)
}

/// Mollifier `χ(x) = c Π bump(2 x_k)` on `(-1/2, 1/2)^d` dilated to `n^d χ(n x)`,
/// normalized so that its Riemann sum is 1.
pub fn mollifier(grid: GridSpec, n: f64) -> Result<SampledFunction> {
    let raw = tensorized(grid, |t| bump(2.0 * n * t));
    let mass: f64 = raw.values.iter().map(|v| v.re).sum::<f64>() * grid.cell();
    if mass <= 0.0 {
        return Err(Error::Construction(format!(
            "mollifier of width 1/{n} is not resolved by spacing {}",
            grid.h()
        )));
    }
    let chi = raw.scale_re(1.0 / mass);
    let check: f64 = chi.values.iter().map(|v| v.re).sum::<f64>() * grid.cell();
    debug_assert!((check - 1.0).abs() < 1e-10);
    Ok(chi)
}

/// `G_n f = χ_n * (φ_n f)` with `φ_n(x) = e^{-π|x/n|^2}`.
pub fn approximate_identity(f: &SampledFunction, n: f64) -> Result<SampledFunction> {
    if !(n >= 1.0) {
        return Err(Error::InvalidArgument(format!("index {n} must be >= 1")));
    }
    let grid = f.grid;
    let phi = SampledFunction::from_real_fn(grid, |x| {
        (-PI * x.iter().map(|v| v * v).sum::<f64>() / (n * n)).exp()
    });
    convolve(&mollifier(grid, n)?, &f.mul(&phi)?)
}

/// First `n` Hermite functions `(2π)^{1/4} φ_k(√(2π) x)`, each renormalized on the grid.
/// These are eigenfunctions of [`fourier`] with eigenvalue `(-i)^k`.
pub fn hermite_functions(grid: GridSpec, n: usize) -> Result<Vec<SampledFunction>> {
    if grid.dim != 1 {
        return Err(Error::Unsupported("Hermite functions are one-dimensional".into()));
    }
    let c = (2.0 * PI).sqrt();
    let ys: Vec<f64> = grid.axis_points().iter().map(|x| c * x).collect();
    let mut out: Vec<Vec<f64>> = Vec::with_capacity(n);
    for k in 0..n {
        let v: Vec<f64> = match k {
            0 => ys.iter().map(|y| PI.powf(-0.25) * (-y * y / 2.0).exp()).collect(),
            1 => ys.iter().zip(&out[0]).map(|(y, h0)| 2f64.sqrt() * y * h0).collect(),
            _ => {
                let a = (2.0 / k as f64).sqrt();
                let b = ((k - 1) as f64 / k as f64).sqrt();
                ys.iter()
                    .enumerate()
                    .map(|(i, y)| a * y * out[k - 1][i] - b * out[k - 2][i])
                    .collect()
            }
        };
        out.push(v);
    }
    Ok(out
        .into_iter()
        .map(|v| {
            let f = SampledFunction {
                grid,
                values: v.into_iter().map(|x| C64::new(x, 0.0)).collect(),
            };
            let nrm = f.l2();
            f.scale_re(1.0 / nrm)
        })
        .collect())
}

/// Orthogonal projection onto the span of the first `n` Hermite functions.
pub fn hermite_projector(f: &SampledFunction, n: usize) -> Result<SampledFunction> {
    let hs = hermite_functions(f.grid, n)?;
    let mut out = SampledFunction::zeros(f.grid);
    for h in &hs {
        let c = f.inner(h)?;
        for (o, v) in out.values.iter_mut().zip(&h.values) {
            *o += c * v;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::{modulate, translate};
    use crate::windows::gaussian;
    use proptest::prelude::*;

    fn dilate(grid: GridSpec, a: f64) -> SampledFunction {
        SampledFunction::from_real_fn(grid, |x| (-PI * x[0] * x[0] / a).exp())
    }

    /// Direct Riemann sum, independent of the FFT path.
    fn direct_fourier(f: &SampledFunction) -> SampledFunction {
        let dual = f.grid.dual();
        let xs = f.grid.axis_points();
        SampledFunction::from_fn(dual, |xi| {
            xs.iter()
                .zip(&f.values)
                .map(|(x, v)| v * C64::from_polar(1.0, -2.0 * PI * x * xi[0]))
                .sum::<C64>()
                * f.grid.h()
        })
    }

    #[test]
    fn gaussian_is_self_dual() {
        let g = gaussian(GridSpec::standard());
        let fg = fourier(&g);
        assert_eq!(fg.grid, g.grid.dual());
        assert!(fg.sub(&g).unwrap().max_abs() <= 1e-8);
        let g2 = gaussian(GridSpec::new(2, 4.0, 64).unwrap());
        assert!(fourier(&g2).sub(&g2).unwrap().max_abs() <= 1e-8);
    }

    #[test]
    fn dilated_gaussian_transform() {
        let grid = GridSpec::standard();
        for a in [0.25, 2.0, 4.0] {
            let f = dilate(grid, a);
            let want = SampledFunction::from_real_fn(grid, |xi| a.sqrt() * (-PI * a * xi[0] * xi[0]).exp());
            assert!(fourier(&f).sub(&want).unwrap().max_abs() < 1e-10, "a={a}");
        }
    }

    #[test]
    fn matches_direct_sum() {
        let grid = GridSpec::new(1, 3.0, 64).unwrap();
        let f = SampledFunction::from_fn(grid, |x| {
            C64::new((-x[0] * x[0]).exp(), x[0] * (-x[0] * x[0]).exp())
        });
        let a = fourier(&f);
        let b = direct_fourier(&f);
        assert!(a.rel_l2_dist(&b).unwrap() < 1e-12);
    }

    #[test]
    fn plancherel_and_inverse() {
        let grid = GridSpec::new(1, 5.0, 128).unwrap();
        let f = SampledFunction::from_fn(grid, |x| C64::new(x[0].sin(), x[0].cos()) * (-x[0] * x[0]).exp());
        let ff = fourier(&f);
        assert!((ff.l2() - f.l2()).abs() < 1e-12);
        let back = inverse_fourier(&ff);
        assert_eq!(back.grid, grid);
        assert!(back.sub(&f).unwrap().max_abs() < 1e-13);
    }

    #[test]
    fn modulation_becomes_translation() {
        let f = gaussian(GridSpec::standard());
        let xi0 = 2.0;
        let lhs = fourier(&modulate(&f, &[xi0]).unwrap());
        let rhs = translate(&fourier(&f), &[xi0]).unwrap();
        assert!(lhs.sub(&rhs).unwrap().max_abs() < 1e-10);
        let a = 1.5;
        let lhs = fourier(&translate(&f, &[a]).unwrap());
        let rhs = modulate(&fourier(&f), &[-a]).unwrap();
        assert!(lhs.sub(&rhs).unwrap().max_abs() < 1e-10);
    }

    #[test]
    fn convolution_identities() {
        let grid = GridSpec::standard();
        let f = dilate(grid, 1.0);
        let mut spike = SampledFunction::zeros(grid);
        spike.values[grid.origin_index()] = C64::new(1.0 / grid.h(), 0.0);
        assert!(convolve(&f, &spike).unwrap().sub(&f).unwrap().max_abs() < 1e-12);
        let (a, b) = (1.0, 2.0);
        let c = convolve(&dilate(grid, a), &dilate(grid, b)).unwrap();
        let want = dilate(grid, a + b).scale_re((a * b / (a + b)).sqrt());
        assert!(c.sub(&want).unwrap().max_abs() < 1e-10);
    }

    #[test]
    fn convolution_matches_direct_sum() {
        let grid = GridSpec::new(1, 2.0, 32).unwrap();
        let f = SampledFunction::from_fn(grid, |x| C64::new(1.0 + x[0], 0.5 - x[0] * x[0]));
        let g = SampledFunction::from_fn(grid, |x| C64::new((-x[0] * x[0]).exp(), x[0]));
        let c = convolve(&f, &g).unwrap();
        let n = grid.n as i64;
        for i in 0..grid.n as i64 {
            let mut s = C64::new(0.0, 0.0);
            for j in 0..n {
                let k = i - j + n / 2;
                if (0..n).contains(&k) {
                    s += f.values[j as usize] * g.values[k as usize];
                }
            }
            s *= grid.h();
            assert!((c.values[i as usize] - s).norm() < 1e-12);
        }
    }

    #[test]
    fn two_dimensional_convolution() {
        let grid = GridSpec::new(2, 4.0, 64).unwrap();
        let g = gaussian(grid);
        let c = convolve(&g, &g).unwrap();
        let want = SampledFunction::from_real_fn(grid, |x| 0.5 * (-PI * (x[0] * x[0] + x[1] * x[1]) / 2.0).exp());
        assert!(c.sub(&want).unwrap().max_abs() < 1e-10);
    }

    #[test]
    fn flp_of_gaussian() {
        let g = gaussian(GridSpec::standard());
        assert!((flp_norm(&g, 1.0, &Weight::unit()) - 1.0).abs() < 1e-8);
    }

    #[test]
    fn smoothing_converges() {
        let f = gaussian(GridSpec::standard());
        let errs: Vec<f64> = [1.0, 2.0, 4.0, 8.0]
            .iter()
            .map(|&n| approximate_identity(&f, n).unwrap().sub(&f).unwrap().l2())
            .collect();
        for w in errs.windows(2) {
            assert!(w[1] < w[0], "{errs:?}");
        }
    }

    #[test]
    fn mollifier_has_unit_mass() {
        let grid = GridSpec::standard();
        for n in [1.0, 2.0, 4.0, 8.0] {
            let chi = mollifier(grid, n).unwrap();
            let m: f64 = chi.values.iter().map(|v| v.re).sum::<f64>() * grid.h();
            assert!((m - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn hermite_basis() {
        let grid = GridSpec::standard();
        let hs = hermite_functions(grid, 64).unwrap();
        for (i, a) in hs.iter().enumerate().step_by(7) {
            for (j, b) in hs.iter().enumerate().step_by(5) {
                let ip = a.inner(b).unwrap().norm();
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((ip - want).abs() < 1e-10, "({i},{j}) {ip}");
            }
        }
        let f = &hs[5];
        assert!(hermite_projector(f, 8).unwrap().sub(f).unwrap().l2() < 1e-12);
        assert!(hermite_projector(f, 5).unwrap().l2() < 1e-10);
        let rot = fourier(&hs[3]).sub(&hs[3].scale(C64::new(0.0, 1.0))).unwrap().max_abs();
        assert!(rot < 1e-8, "eigenvalue of h3: {rot}");
    }

    #[test]
    fn hermite_projection_converges() {
        let grid = GridSpec::standard();
        let f = SampledFunction::from_real_fn(grid, |x| {
            (-PI * (x[0] - 1.0).powi(2)).exp() + 0.5 * (-PI * (x[0] + 1.5).powi(2) / 2.0).exp()
        });
        let errs: Vec<f64> = [4, 16, 64]
            .iter()
            .map(|&n| hermite_projector(&f, n).unwrap().sub(&f).unwrap().l2())
            .collect();
        assert!(errs[0] > errs[1] && errs[1] > errs[2], "{errs:?}");
        assert!(hermite_projector(&gaussian(GridSpec::new(2, 4.0, 32).unwrap()), 4).is_err());
    }

    proptest! {
        #[test]
        fn convolution_commutes(a in 0.3f64..3.0, b in 0.3f64..3.0, s in -40i64..40) {
            let grid = GridSpec::new(1, 8.0, 256).unwrap();
            let f = translate(&dilate(grid, a), &[s as f64 * grid.h()]).unwrap();
            let g = dilate(grid, b);
            let fg = convolve(&f, &g).unwrap();
            let gf = convolve(&g, &f).unwrap();
            prop_assert!(fg.sub(&gf).unwrap().max_abs() < 1e-12);
        }

        #[test]
        fn fourier_round_trip(seed in 0u64..1000) {
            let grid = GridSpec::new(1, 4.0, 64).unwrap();
            let f = SampledFunction::from_fn(grid, |x| {
                let t = x[0] + seed as f64 * 1e-3;
                C64::new((3.0 * t).cos(), (seed as f64 * t).sin()) * (-t * t).exp()
            });
            let back = inverse_fourier(&fourier(&f));
            prop_assert!(back.sub(&f).unwrap().max_abs() < 1e-12);
            prop_assert!((fourier(&f).l2() - f.l2()).abs() < 1e-12);
        }
    }
}
