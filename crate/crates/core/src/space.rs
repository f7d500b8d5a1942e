//! Function-space descriptors and operator norms of translations and modulations.

use crate::error::{Error, Result};
use crate::grid::GridSpec;
use crate::weight::Weight;
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum SpaceSpec {
    /// Weighted Lebesgue space `L^p_w`; `p = ∞` allowed.
    Lp { p: f64, w: Weight },
    /// Fourier image `F L^p_w`, normed by `‖F⁻¹u‖_{L^p_w}`.
    FLp { p: f64, w: Weight },
    /// Continuous functions vanishing at infinity, sup-normed with weight.
    C0 { w: Weight },
    /// Mixed `L^{p,q}` on the time-frequency plane (inner `x`, outer `ξ`).
    MixedLpq { p: f64, q: f64, w: Weight },
}

pub fn check_exponent(p: f64) -> Result<()> {
    if p >= 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidExponent(p))
    }
}

/// Conjugate exponent `q` with `1/p + 1/q = 1`.
pub fn conjugate(p: f64) -> f64 {
    if p == 1.0 {
        f64::INFINITY
    } else if p.is_infinite() {
        1.0
    } else {
        p / (p - 1.0)
    }
}

impl SpaceSpec {
    pub fn lp(p: f64, w: Weight) -> Self {
        SpaceSpec::Lp { p, w }
    }

    pub fn flp(p: f64, w: Weight) -> Self {
        SpaceSpec::FLp { p, w }
    }

    pub fn c0(w: Weight) -> Self {
        SpaceSpec::C0 { w }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            SpaceSpec::Lp { p, .. } | SpaceSpec::FLp { p, .. } => check_exponent(*p),
            SpaceSpec::C0 { .. } => Ok(()),
            SpaceSpec::MixedLpq { p, q, .. } => {
                check_exponent(*p)?;
                check_exponent(*q)
            }
        }
    }

    pub fn weight(&self) -> &Weight {
        match self {
            SpaceSpec::Lp { w, .. }
            | SpaceSpec::FLp { w, .. }
            | SpaceSpec::C0 { w }
            | SpaceSpec::MixedLpq { w, .. } => w,
        }
    }
}

impl fmt::Display for SpaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceSpec::Lp { p, w } => write!(f, "L^{p}_{w}"),
            SpaceSpec::FLp { p, w } => write!(f, "FL^{p}_{w}"),
            SpaceSpec::C0 { w } => write!(f, "C0_{w}"),
            SpaceSpec::MixedLpq { p, q, w } => write!(f, "L^{{{p},{q}}}_{w}"),
        }
    }
}

/// `sup_t w(t + a) / w(t)` over grid points.
fn shift_ratio(w: &Weight, a: &[f64], grid: &GridSpec) -> f64 {
    let d = grid.dim;
    let mut best: f64 = 0.0;
    for i in 0..grid.len() {
        let t = grid.point(i);
        let mut s = [0.0; 2];
        for k in 0..d {
            s[k] = t[k] + a[k];
        }
        best = best.max(w.eval(&s[..d]) / w.eval(&t[..d]));
    }
    best
}

fn check_vec(grid: &GridSpec, v: &[f64]) -> Result<()> {
    if v.len() == grid.dim {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("expected {} coordinates", grid.dim)))
    }
}

/// `‖T_x‖` on the space. For weighted Lebesgue spaces this is `sup_t w(t+x)/w(t)`;
/// on a Fourier image it equals the modulation growth of the preimage, which is 1.
pub fn operator_norm_translation(spec: &SpaceSpec, x0: &[f64], grid: &GridSpec) -> Result<f64> {
    spec.validate()?;
    check_vec(grid, x0)?;
    match spec {
        SpaceSpec::Lp { w, .. } | SpaceSpec::C0 { w } => Ok(shift_ratio(w, x0, grid)),
        SpaceSpec::FLp { .. } => Ok(1.0),
        SpaceSpec::MixedLpq { .. } => {
            Err(Error::Unsupported("translation norm on a mixed space".into()))
        }
    }
}

/// `‖M_ξ‖` on the space: 1 on weighted Lebesgue spaces, `sup_t w(t-ξ)/w(t)` on Fourier images.
pub fn operator_norm_modulation(spec: &SpaceSpec, xi0: &[f64], grid: &GridSpec) -> Result<f64> {
    spec.validate()?;
    check_vec(grid, xi0)?;
    match spec {
        SpaceSpec::Lp { .. } | SpaceSpec::C0 { .. } => Ok(1.0),
        SpaceSpec::FLp { w, .. } => {
            let neg: Vec<f64> = xi0.iter().map(|v| -v).collect();
            Ok(shift_ratio(w, &neg, grid))
        }
        SpaceSpec::MixedLpq { .. } => {
            Err(Error::Unsupported("modulation norm on a mixed space".into()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::make_power_weight;

    #[test]
    fn translation_norms() {
        let g = GridSpec::standard();
        let a = operator_norm_translation(&SpaceSpec::lp(2.0, make_power_weight(1.0)), &[1.0], &g)
            .unwrap();
        assert!((a - 2.0).abs() < 1e-6);
        let b = operator_norm_translation(&SpaceSpec::lp(1.0, make_power_weight(-1.0)), &[1.0], &g)
            .unwrap();
        assert!((b - 2.0).abs() < 1e-6);
        let c = operator_norm_translation(&SpaceSpec::flp(2.0, make_power_weight(3.0)), &[5.0], &g)
            .unwrap();
        assert_eq!(c, 1.0);
        let u = operator_norm_translation(&SpaceSpec::lp(2.0, Weight::unit()), &[3.0], &g).unwrap();
        assert_eq!(u, 1.0);
    }

    #[test]
    fn modulation_norms() {
        let g = GridSpec::standard();
        let a = operator_norm_modulation(&SpaceSpec::flp(2.0, make_power_weight(1.0)), &[1.0], &g)
            .unwrap();
        assert!((a - 2.0).abs() < 1e-6);
        let b = operator_norm_modulation(&SpaceSpec::lp(2.0, make_power_weight(1.0)), &[1.0], &g)
            .unwrap();
        assert_eq!(b, 1.0);
    }

    #[test]
    fn exponent_validation() {
        assert!(SpaceSpec::lp(0.5, Weight::unit()).validate().is_err());
        assert_eq!(conjugate(2.0), 2.0);
        assert_eq!(conjugate(1.0), f64::INFINITY);
        assert_eq!(conjugate(f64::INFINITY), 1.0);
        assert!((conjugate(3.0) - 1.5).abs() < 1e-15);
    }
}
