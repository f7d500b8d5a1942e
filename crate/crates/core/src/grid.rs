//! Uniform grids on `[-L, L)^d` and complex samples on them.

use crate::error::{Error, Result};
use num_complex::Complex64;

pub type C64 = Complex64;

/// Largest per-axis sample count accepted in two dimensions.
pub const MAX_N_2D: usize = 256;

#[derive(Debug, Clone, Copy)]
pub struct GridSpec {
    pub dim: usize,
    pub l: f64,
    pub n: usize,
}

impl PartialEq for GridSpec {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.n == other.n
            && (self.l - other.l).abs() <= 1e-12 * self.l.abs().max(other.l.abs())
    }
}

impl GridSpec {
    pub fn new(dim: usize, l: f64, n: usize) -> Result<Self> {
        if dim != 1 && dim != 2 {
            return Err(Error::InvalidGrid(format!("dimension {dim} not in {{1, 2}}")));
        }
        if !(l.is_finite() && l > 0.0) {
            return Err(Error::InvalidGrid(format!("half-width {l} must be positive")));
        }
        if n < 4 || n % 2 != 0 {
            return Err(Error::InvalidGrid(format!("sample count {n} must be even and >= 4")));
        }
        if dim == 2 && n > MAX_N_2D {
            return Err(Error::InvalidGrid(format!(
                "sample count {n} exceeds {MAX_N_2D} per axis in two dimensions"
            )));
        }
        Ok(GridSpec { dim, l, n })
    }

    /// The default grid: d = 1, L = 16, N = 1024.
    pub fn standard() -> Self {
        GridSpec { dim: 1, l: 16.0, n: 1024 }
    }

    pub fn h(&self) -> f64 {
        2.0 * self.l / self.n as f64
    }

    /// Quadrature weight `h^d`.
    pub fn cell(&self) -> f64 {
        self.h().powi(self.dim as i32)
    }

    pub fn len(&self) -> usize {
        self.n.pow(self.dim as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn axis(&self, j: usize) -> f64 {
        -self.l + j as f64 * self.h()
    }

    pub fn axis_points(&self) -> Vec<f64> {
        (0..self.n).map(|j| self.axis(j)).collect()
    }

    /// Frequency grid paired with this one: spacing `1/(2L)`, points `k/(2L)` for
    /// `k = -N/2 .. N/2-1`. It is again a grid of the same shape with half-width `N/(4L)`.
    pub fn dual(&self) -> GridSpec {
        GridSpec { dim: self.dim, l: self.n as f64 / (4.0 * self.l), n: self.n }
    }

    /// Per-axis indices of a flat (row-major) index.
    pub fn multi_index(&self, idx: usize) -> [usize; 2] {
        if self.dim == 1 {
            [idx, 0]
        } else {
            [idx / self.n, idx % self.n]
        }
    }

    pub fn flat_index(&self, mi: [usize; 2]) -> usize {
        if self.dim == 1 {
            mi[0]
        } else {
            mi[0] * self.n + mi[1]
        }
    }

    /// Coordinates of a flat index; only the first `dim` entries are meaningful.
    pub fn point(&self, idx: usize) -> [f64; 2] {
        let mi = self.multi_index(idx);
        [self.axis(mi[0]), if self.dim == 2 { self.axis(mi[1]) } else { 0.0 }]
    }

    /// Index of the sample at the origin along one axis.
    pub fn origin_index(&self) -> usize {
        self.n / 2
    }

    /// Converts an axis offset to an integer number of samples, rejecting off-grid offsets.
    pub fn steps(&self, offset: f64) -> Result<i64> {
        aligned_steps(offset, self.h())
    }

    pub fn require_same(&self, other: &GridSpec) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::GridMismatch(format!(
                "(d={}, L={}, N={}) vs (d={}, L={}, N={})",
                self.dim, self.l, self.n, other.dim, other.l, other.n
            )))
        }
    }
}

pub(crate) fn aligned_steps(offset: f64, spacing: f64) -> Result<i64> {
    let q = offset / spacing;
    let r = q.round();
    if !q.is_finite() || (q - r).abs() > 1e-9 * r.abs().max(1.0) {
        return Err(Error::UnalignedShift { shift: offset, spacing });
    }
    Ok(r as i64)
}

/// Euclidean norm of the first `dim` coordinates.
pub fn euclid(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    pub grid: GridSpec,
    pub values: Vec<C64>,
}

impl SampledFunction {
    pub fn new(grid: GridSpec, values: Vec<C64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::InvalidArgument(format!(
                "expected {} samples, got {}",
                grid.len(),
                values.len()
            )));
        }
        Ok(SampledFunction { grid, values })
    }

    pub fn zeros(grid: GridSpec) -> Self {
        SampledFunction { grid, values: vec![C64::new(0.0, 0.0); grid.len()] }
    }

    pub fn from_fn(grid: GridSpec, f: impl Fn(&[f64]) -> C64) -> Self {
        let values = (0..grid.len())
            .map(|i| {
                let p = grid.point(i);
                f(&p[..grid.dim])
            })
            .collect();
        SampledFunction { grid, values }
    }

    pub fn from_real_fn(grid: GridSpec, f: impl Fn(&[f64]) -> f64) -> Self {
        Self::from_fn(grid, |x| C64::new(f(x), 0.0))
    }

    pub fn map(&self, f: impl Fn(C64) -> C64) -> Self {
        SampledFunction { grid: self.grid, values: self.values.iter().map(|&v| f(v)).collect() }
    }

    pub fn conj(&self) -> Self {
        self.map(|v| v.conj())
    }

    pub fn scale(&self, c: C64) -> Self {
        self.map(|v| v * c)
    }

    pub fn scale_re(&self, c: f64) -> Self {
        self.map(|v| v * c)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.grid.require_same(&other.grid)?;
        Ok(self.zip(other, |a, b| a * b))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.grid.require_same(&other.grid)?;
        Ok(self.zip(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.grid.require_same(&other.grid)?;
        Ok(self.zip(other, |a, b| a - b))
    }

    fn zip(&self, other: &Self, f: impl Fn(C64, C64) -> C64) -> Self {
        let values = self.values.iter().zip(&other.values).map(|(&a, &b)| f(a, b)).collect();
        SampledFunction { grid: self.grid, values }
    }

    /// Unweighted `L^2` norm by Riemann sum.
    pub fn l2(&self) -> f64 {
        (self.values.iter().map(|v| v.norm_sqr()).sum::<f64>() * self.grid.cell()).sqrt()
    }

    /// `∫ f conj(g)`.
    pub fn inner(&self, other: &Self) -> Result<C64> {
        self.grid.require_same(&other.grid)?;
        let s: C64 = self.values.iter().zip(&other.values).map(|(a, b)| a * b.conj()).sum();
        Ok(s * self.grid.cell())
    }

    /// Bilinear pairing `∫ f g` (no conjugation).
    pub fn pair(&self, other: &Self) -> Result<C64> {
        self.grid.require_same(&other.grid)?;
        let s: C64 = self.values.iter().zip(&other.values).map(|(a, b)| a * b).sum();
        Ok(s * self.grid.cell())
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.norm()))
    }

    /// Relative `L^2` distance `‖self - other‖ / ‖other‖`.
    pub fn rel_l2_dist(&self, other: &Self) -> Result<f64> {
        let d = self.sub(other)?.l2();
        let r = other.l2();
        Ok(if r > 0.0 { d / r } else { d })
    }

    /// Fraction of squared `L^2` mass in the strip `|x|_∞ > L - width`.
    pub fn boundary_mass(&self, width: f64) -> f64 {
        let total: f64 = self.values.iter().map(|v| v.norm_sqr()).sum();
        if total == 0.0 {
            return 0.0;
        }
        let lim = self.grid.l - width;
        let outer: f64 = (0..self.grid.len())
            .filter(|&i| {
                let p = self.grid.point(i);
                p[..self.grid.dim].iter().any(|c| c.abs() > lim)
            })
            .map(|i| self.values[i].norm_sqr())
            .sum();
        outer / total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_validation() {
        assert!(GridSpec::new(3, 1.0, 8).is_err());
        assert!(GridSpec::new(1, 0.0, 8).is_err());
        assert!(GridSpec::new(1, 1.0, 7).is_err());
        assert!(GridSpec::new(2, 4.0, 512).is_err());
        assert!(GridSpec::new(2, 4.0, 256).is_ok());
    }

    #[test]
    fn standard_grid_is_self_dual() {
        let g = GridSpec::standard();
        assert_eq!(g.h(), 1.0 / 32.0);
        assert_eq!(g.dual(), g);
        let g2 = GridSpec::new(1, 4.0, 128).unwrap();
        assert_eq!(g2.dual().dual(), g2);
        assert_eq!(g2.dual().h(), 1.0 / 8.0);
    }

    #[test]
    fn origin_sample() {
        let g = GridSpec::new(2, 2.0, 16).unwrap();
        let o = g.origin_index();
        assert_eq!(g.point(g.flat_index([o, o])), [0.0, 0.0]);
        assert_eq!(g.multi_index(g.flat_index([3, 5])), [3, 5]);
    }

    #[test]
    fn alignment() {
        let g = GridSpec::standard();
        assert_eq!(g.steps(1.0).unwrap(), 32);
        assert_eq!(g.steps(-0.5).unwrap(), -16);
        assert!(g.steps(0.01).is_err());
    }
}
