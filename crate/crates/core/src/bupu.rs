//! Bounded uniform partition of unity on the integer lattice.

use crate::error::{Error, Result};
use crate::grid::{GridSpec, SampledFunction};
use crate::ops::shift_by_steps;
use crate::transforms::inverse_fourier;
use crate::weight::Weight;
use crate::windows::bump;

/// Normalized bump `φ = b / Σ_k T_k b` with `b(x) = exp(-1/(1-x^2))`, tensorized in
/// higher dimensions, together with its integer translates `φ_k = T_k φ`.
#[derive(Debug, Clone)]
pub struct Bupu {
    pub grid: GridSpec,
    pub base: SampledFunction,
    /// Lattice extent: `k ∈ {-K..K}^d`.
    pub k_max: i64,
    steps_per_unit: i64,
}

fn normalized_bump(t: f64) -> f64 {
    let s: f64 = (t.floor() as i64 - 1..=t.ceil() as i64 + 1).map(|k| bump(t - k as f64)).sum();
    bump(t) / s
}

impl Bupu {
    /// Requires `1/h` to be an integer so that lattice translates are grid shifts.
    pub fn new(grid: GridSpec) -> Result<Self> {
        let base = SampledFunction::from_real_fn(grid, |x| x.iter().map(|&t| normalized_bump(t)).product());
        Self::from_base(grid, base)
    }

    /// A family generated by an arbitrary base function; used to probe validation.
    pub fn from_base(grid: GridSpec, base: SampledFunction) -> Result<Self> {
        grid.require_same(&base.grid)?;
        let q = 1.0 / grid.h();
        if (q - q.round()).abs() > 1e-9 * q {
            return Err(Error::InvalidGrid(format!(
                "1/h = {q} is not an integer; lattice translates would leave the grid"
            )));
        }
        Ok(Bupu { grid, base, k_max: grid.l.ceil() as i64 + 1, steps_per_unit: q.round() as i64 })
    }

    /// All lattice points `k ∈ {-K..K}^d`, lexicographically ordered.
    pub fn lattice(&self) -> Vec<[i64; 2]> {
        let r = -self.k_max..=self.k_max;
        if self.grid.dim == 1 {
            r.map(|k| [k, 0]).collect()
        } else {
            r.clone().flat_map(|a| r.clone().map(move |b| [a, b])).collect()
        }
    }

    /// `φ_k = T_k φ`.
    pub fn member(&self, k: [i64; 2]) -> SampledFunction {
        shift_by_steps(&self.base, [k[0] * self.steps_per_unit, k[1] * self.steps_per_unit])
    }

    pub fn members(&self) -> Vec<([i64; 2], SampledFunction)> {
        self.lattice().into_iter().map(|k| (k, self.member(k))).collect()
    }
}

/// `‖F⁻¹φ‖_{L^1_ν}`.
pub fn fl1_nu_norm(phi: &SampledFunction, nu: &Weight) -> f64 {
    crate::norms::lp_norm(&inverse_fourier(phi), 1.0, nu)
}

/// Share of the `L^1_ν` mass of `F⁻¹φ` in the outer quarter of the frequency grid;
/// large values indicate that the grid does not resolve `φ`.
pub fn aliasing_tail(phi: &SampledFunction, nu: &Weight) -> f64 {
    let u = inverse_fourier(phi);
    let g = u.grid;
    let lim = 0.75 * g.l;
    let (mut tail, mut total) = (0.0, 0.0);
    for i in 0..g.len() {
        let p = g.point(i);
        let v = u.values[i].norm() * nu.eval(&p[..g.dim]);
        total += v;
        if p[..g.dim].iter().any(|c| c.abs() > lim) {
            tail += v;
        }
    }
    if total > 0.0 {
        tail / total
    } else {
        0.0
    }
}

/// Tail share above which [`BupuReport::aliasing_warning`] is set.
pub const ALIASING_THRESHOLD: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct BupuReport {
    /// `max |Σ_k φ_k(x) - 1|` over `|x|_∞ <= L - 2`.
    pub defect: f64,
    /// Grid points outside `(-1, 1)^d` where the base is nonzero.
    pub support_violations: usize,
    /// Largest number of members simultaneously nonzero at a grid point.
    pub overlap: usize,
    /// `M = ‖F⁻¹φ‖_{L^1}`.
    pub m: f64,
    pub tail_fraction: f64,
    pub aliasing_warning: bool,
    pub pass: bool,
}

pub fn validate_bupu(b: &Bupu) -> BupuReport {
    let grid = b.grid;
    let d = grid.dim;
    let mut sum = vec![0.0f64; grid.len()];
    let mut count = vec![0usize; grid.len()];
    for (_, m) in b.members() {
        for (i, v) in m.values.iter().enumerate() {
            sum[i] += v.re;
            if v.norm() != 0.0 {
                count[i] += 1;
            }
        }
    }
    let lim = grid.l - 2.0;
    let mut defect: f64 = 0.0;
    let mut support_violations = 0;
    for i in 0..grid.len() {
        let p = grid.point(i);
        if p[..d].iter().all(|c| c.abs() <= lim) {
            defect = defect.max((sum[i] - 1.0).abs());
        }
        if b.base.values[i].norm() != 0.0 && p[..d].iter().any(|c| c.abs() >= 1.0) {
            support_violations += 1;
        }
    }
    let unit = Weight::unit();
    let m = fl1_nu_norm(&b.base, &unit);
    let tail_fraction = aliasing_tail(&b.base, &unit);
    BupuReport {
        defect,
        support_violations,
        overlap: count.into_iter().max().unwrap_or(0),
        m,
        tail_fraction,
        aliasing_warning: tail_fraction > ALIASING_THRESHOLD,
        pass: defect <= 1e-10 && support_violations == 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::C64;

    #[test]
    fn canonical_partition() {
        let b = Bupu::new(GridSpec::standard()).unwrap();
        let r = validate_bupu(&b);
        assert!(r.defect <= 1e-12, "{}", r.defect);
        assert_eq!(r.support_violations, 0);
        assert!(r.overlap <= 2);
        assert!(r.m.is_finite() && r.m > 0.0);
        assert!(r.pass);
        assert_eq!(b.k_max, 17);
    }

    #[test]
    fn two_dimensional_partition() {
        let b = Bupu::new(GridSpec::new(2, 4.0, 64).unwrap()).unwrap();
        let r = validate_bupu(&b);
        assert!(r.defect <= 1e-12);
        assert!(r.overlap <= 4);
        assert!(r.pass);
    }

    #[test]
    fn broken_partitions_fail() {
        let grid = GridSpec::standard();
        let b = Bupu::new(grid).unwrap();
        let half = Bupu::from_base(grid, b.base.scale_re(0.5)).unwrap();
        let r = validate_bupu(&half);
        assert!((r.defect - 0.5).abs() < 1e-12);
        assert!(!r.pass);
        let wide = SampledFunction::from_real_fn(grid, |x| 0.5 * normalized_bump(x[0] / 2.0));
        let r = validate_bupu(&Bupu::from_base(grid, wide).unwrap());
        assert!(r.support_violations > 0);
        assert!(!r.pass);
    }

    #[test]
    fn non_integer_inverse_spacing_rejected() {
        let grid = GridSpec::new(1, 10.0, 64).unwrap();
        assert!(matches!(Bupu::new(grid), Err(Error::InvalidGrid(_))));
    }

    #[test]
    fn base_is_smooth() {
        let b = Bupu::new(GridSpec::standard()).unwrap();
        let u = inverse_fourier(&b.base);
        let g = u.grid;
        let max = (0..g.len())
            .map(|i| u.values[i].norm() * (1.0 + g.point(i)[0].abs()).powi(4))
            .fold(0.0f64, f64::max);
        assert!(max < 10.0, "{max}");
        assert_eq!(b.base.values[GridSpec::standard().origin_index()], C64::new(1.0, 0.0));
    }
}
