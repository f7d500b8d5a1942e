//! Smooth compactly supported profiles and Gaussians.

use crate::grid::{GridSpec, SampledFunction};
use std::f64::consts::PI;

/// `exp(-1/(1 - t^2))` on `(-1, 1)`, zero elsewhere.
pub fn bump(t: f64) -> f64 {
    if t.abs() < 1.0 {
        (-1.0 / (1.0 - t * t)).exp()
    } else {
        0.0
    }
}

/// Smooth monotone transition: 0 for `t <= 0`, 1 for `t >= 1`.
pub fn smooth_step(t: f64) -> f64 {
    if t <= 0.0 {
        0.0
    } else if t >= 1.0 {
        1.0
    } else {
        let a = (-1.0 / t).exp();
        let b = (-1.0 / (1.0 - t)).exp();
        a / (a + b)
    }
}

/// 1 on `|t| <= inner`, 0 on `|t| >= outer`, smooth in between.
pub fn plateau(t: f64, inner: f64, outer: f64) -> f64 {
    1.0 - smooth_step((t.abs() - inner) / (outer - inner))
}

pub fn gaussian(grid: GridSpec) -> SampledFunction {
    SampledFunction::from_real_fn(grid, |x| (-PI * x.iter().map(|v| v * v).sum::<f64>()).exp())
}

/// `2^{d/4} e^{-π|x|^2}`, unit `L^2` norm.
pub fn normalized_gaussian(grid: GridSpec) -> SampledFunction {
    let c = 2f64.powf(grid.dim as f64 / 4.0);
    gaussian(grid).scale_re(c)
}

/// Tensor product of a one-dimensional profile over all axes.
pub fn tensorized(grid: GridSpec, f: impl Fn(f64) -> f64) -> SampledFunction {
    SampledFunction::from_real_fn(grid, |x| x.iter().map(|&t| f(t)).product())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profiles() {
        assert_eq!(bump(1.0), 0.0);
        assert!((bump(0.0) - (-1f64).exp()).abs() < 1e-15);
        assert_eq!(plateau(2.0, 2.0, 3.0), 1.0);
        assert_eq!(plateau(-3.0, 2.0, 3.0), 0.0);
        assert!((plateau(2.5, 2.0, 3.0) - 0.5).abs() < 1e-12);
        let g = normalized_gaussian(GridSpec::standard());
        assert!((g.l2() - 1.0).abs() < 1e-12);
    }
}
