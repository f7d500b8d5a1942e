//! Centered DFT on a symmetric grid, scaled to approximate the continuous transform.

use crate::grid::{SampledFunction, C64};
use rustfft::{Fft, FftPlanner};
use std::cell::RefCell;
use std::sync::Arc;

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

pub(crate) fn plan(n: usize, inverse: bool) -> Arc<dyn Fft<f64>> {
    PLANNER.with(|p| {
        let mut p = p.borrow_mut();
        if inverse {
            p.plan_fft_inverse(n)
        } else {
            p.plan_fft_forward(n)
        }
    })
}

/// Applies `f` to every axis-aligned line of a row-major `n^dim` array.
pub(crate) fn along_axes(data: &mut [C64], n: usize, dim: usize, mut f: impl FnMut(&mut [C64])) {
    if dim == 1 {
        f(data);
        return;
    }
    for row in data.chunks_mut(n) {
        f(row);
    }
    let mut col = vec![C64::new(0.0, 0.0); n];
    for c in 0..n {
        for r in 0..n {
            col[r] = data[r * n + c];
        }
        f(&mut col);
        for r in 0..n {
            data[r * n + c] = col[r];
        }
    }
}

fn sign(k: usize) -> f64 {
    if k % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `out(z_k) = Σ_j in(y_j) e^{∓2πi y_j z_k} h` per axis, with `y` the input grid and `z` its dual.
pub(crate) fn centered(f: &SampledFunction, inverse: bool) -> SampledFunction {
    let g = f.grid;
    let n = g.n;
    let h = g.h();
    let fft = plan(n, inverse);
    let mut scratch = vec![C64::new(0.0, 0.0); fft.get_inplace_scratch_len()];
    let mut data = f.values.clone();
    along_axes(&mut data, n, g.dim, |line| {
        for (j, v) in line.iter_mut().enumerate() {
            *v *= sign(j);
        }
        fft.process_with_scratch(line, &mut scratch);
        for (m, v) in line.iter_mut().enumerate() {
            *v *= sign(m + n / 2) * h;
        }
    });
    SampledFunction { grid: g.dual(), values: data }
}

/// Size of the zero-padded transform used for linear convolution.
pub(crate) fn padded(n: usize) -> usize {
    2 * n
}

