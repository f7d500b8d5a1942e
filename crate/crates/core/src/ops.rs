//! Translation and modulation on the grid.

use crate::error::{Error, Result};
use crate::grid::{aligned_steps, SampledFunction, C64};
use std::f64::consts::PI;

fn check_len(f: &SampledFunction, v: &[f64]) -> Result<()> {
    if v.len() != f.grid.dim {
        return Err(Error::InvalidArgument(format!(
            "expected a {}-dimensional vector, got {}",
            f.grid.dim,
            v.len()
        )));
    }
    Ok(())
}

/// `T_x f(t) = f(t - x)` with zero fill; `x` must be a multiple of the spacing.
pub fn translate(f: &SampledFunction, x0: &[f64]) -> Result<SampledFunction> {
    check_len(f, x0)?;
    let g = f.grid;
    let mut steps = [0i64; 2];
    for (k, &x) in x0.iter().enumerate() {
        steps[k] = g.steps(x)?;
    }
    Ok(shift_by_steps(f, steps))
}

pub(crate) fn shift_by_steps(f: &SampledFunction, steps: [i64; 2]) -> SampledFunction {
    let g = f.grid;
    let n = g.n as i64;
    let mut out = SampledFunction::zeros(g);
    for i in 0..g.len() {
        let mi = g.multi_index(i);
        let mut src = [0usize; 2];
        let mut inside = true;
        for k in 0..g.dim {
            let s = mi[k] as i64 - steps[k];
            if s < 0 || s >= n {
                inside = false;
                break;
            }
            src[k] = s as usize;
        }
        if inside {
            out.values[i] = f.values[g.flat_index(src)];
        }
    }
    out
}

/// Fraction of squared `L^2` mass pushed off the grid by `translate(f, x0)`.
pub fn translation_loss(f: &SampledFunction, x0: &[f64]) -> Result<f64> {
    let total: f64 = f.values.iter().map(|v| v.norm_sqr()).sum();
    if total == 0.0 {
        return Ok(0.0);
    }
    let kept: f64 = translate(f, x0)?.values.iter().map(|v| v.norm_sqr()).sum();
    Ok(((total - kept) / total).max(0.0))
}

/// `M_ξ f(t) = e^{2πi t·ξ} f(t)`; `ξ` must be a multiple of `1/(2L)` per axis.
pub fn modulate(f: &SampledFunction, xi0: &[f64]) -> Result<SampledFunction> {
    check_len(f, xi0)?;
    let g = f.grid;
    let dxi = 1.0 / (2.0 * g.l);
    for &xi in xi0 {
        aligned_steps(xi, dxi)?;
    }
    let mut out = f.clone();
    for (i, v) in out.values.iter_mut().enumerate() {
        let p = g.point(i);
        let phase: f64 = (0..g.dim).map(|k| p[k] * xi0[k]).sum();
        *v *= C64::from_polar(1.0, 2.0 * PI * phase);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::GridSpec;
    use proptest::prelude::*;

    fn gauss(g: GridSpec) -> SampledFunction {
        SampledFunction::from_real_fn(g, |x| (-PI * x.iter().map(|v| v * v).sum::<f64>()).exp())
    }

    #[test]
    fn translate_preserves_norm() {
        let f = gauss(GridSpec::standard());
        let t = translate(&f, &[1.0]).unwrap();
        assert!((t.l2() - f.l2()).abs() < 1e-8);
        assert!(translation_loss(&f, &[1.0]).unwrap() < 1e-15);
        let p = 1.0;
        let shifted = SampledFunction::from_real_fn(f.grid, |x| (-PI * (x[0] - p) * (x[0] - p)).exp());
        assert!(t.sub(&shifted).unwrap().max_abs() < 1e-14);
    }

    #[test]
    fn unaligned_rejected() {
        let f = gauss(GridSpec::standard());
        assert!(matches!(translate(&f, &[0.01]), Err(Error::UnalignedShift { .. })));
        assert!(matches!(modulate(&f, &[0.01]), Err(Error::UnalignedShift { .. })));
        assert!(translate(&f, &[1.0, 1.0]).is_err());
    }

    #[test]
    fn boundary_loss_reported() {
        let g = GridSpec::new(1, 4.0, 64).unwrap();
        let f = SampledFunction::from_real_fn(g, |_| 1.0);
        let loss = translation_loss(&f, &[1.0]).unwrap();
        assert!((loss - 1.0 / 8.0).abs() < 1e-12);
    }

    #[test]
    fn two_dimensional_shift() {
        let g = GridSpec::new(2, 4.0, 64).unwrap();
        let f = gauss(g);
        let t = translate(&f, &[1.0, -0.5]).unwrap();
        let want = SampledFunction::from_real_fn(g, |x| {
            (-PI * ((x[0] - 1.0).powi(2) + (x[1] + 0.5).powi(2))).exp()
        });
        assert!(t.sub(&want).unwrap().max_abs() < 1e-14);
    }

    proptest! {
        #[test]
        fn translations_compose(a in -64i64..64, b in -64i64..64) {
            let g = GridSpec::new(1, 8.0, 256).unwrap();
            let f = gauss(g);
            let h = g.h();
            let ab = translate(&translate(&f, &[a as f64 * h]).unwrap(), &[b as f64 * h]).unwrap();
            let direct = translate(&f, &[(a + b) as f64 * h]).unwrap();
            prop_assert!(ab.sub(&direct).unwrap().max_abs() < 1e-12);
        }

        #[test]
        fn modulation_is_isometric(k in -40i64..40) {
            let g = GridSpec::new(1, 8.0, 256).unwrap();
            let f = gauss(g);
            let m = modulate(&f, &[k as f64 / 16.0]).unwrap();
            prop_assert!((m.l2() - f.l2()).abs() < 1e-12);
        }
    }
}
