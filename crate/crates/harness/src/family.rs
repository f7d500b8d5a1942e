//! Deterministic test functions on one-dimensional grids.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;
use tfnorm_core::windows::bump;
use tfnorm_core::{hermite_functions, modulate, translate, GridSpec, Result, SampledFunction, C64};

#[derive(Debug, Clone)]
pub struct Member {
    pub name: String,
    pub f: SampledFunction,
}

fn member(name: impl Into<String>, f: SampledFunction) -> Member {
    Member { name: name.into(), f }
}

fn gaussian_dilate(grid: GridSpec, a: f64) -> SampledFunction {
    SampledFunction::from_real_fn(grid, |x| (-PI * x[0] * x[0] / a).exp())
}

/// Smooth random function: a trigonometric polynomial of frequencies `k/4`, `|k| <= 4`,
/// under the envelope `e^{-πt²/8}`.
fn random_smooth(grid: GridSpec, rng: &mut ChaCha8Rng) -> SampledFunction {
    let coeffs: Vec<C64> = (0..9).map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
    SampledFunction::from_fn(grid, |x| {
        let t = x[0];
        let s: C64 = coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| c * C64::from_polar(1.0, 2.0 * PI * (j as f64 - 4.0) * t / 4.0))
            .sum();
        s * (-PI * t * t / 8.0).exp()
    })
}

/// The standard family on a one-dimensional grid:
/// Gaussian dilates, translated and modulated Gaussians, bumps, Hermite functions,
/// windowed chirps and two seeded random smooth functions.
pub fn family(grid: GridSpec, seed: u64) -> Result<Vec<Member>> {
    let mut out = Vec::new();
    for (label, a) in [("1/4", 0.25), ("1/2", 0.5), ("1", 1.0), ("2", 2.0), ("4", 4.0)] {
        out.push(member(format!("gauss a={label}"), gaussian_dilate(grid, a)));
    }
    let g = gaussian_dilate(grid, 1.0);
    for (x, xi) in [(2.0, 0.0), (0.0, 2.0), (-1.0, 1.0), (1.0, -1.5)] {
        let f = modulate(&translate(&g, &[x])?, &[xi])?;
        out.push(member(format!("tf-shift x={x} xi={xi}"), f));
    }
    for w in [1.0, 2.0, 4.0] {
        out.push(member(format!("bump width={w}"), SampledFunction::from_real_fn(grid, |x| bump(2.0 * x[0] / w))));
    }
    for (k, h) in hermite_functions(grid, 8)?.into_iter().enumerate() {
        out.push(member(format!("hermite {k}"), h));
    }
    for c in [0.25, 0.5] {
        let f = SampledFunction::from_fn(grid, |x| {
            let t = x[0];
            C64::from_polar((-PI * t * t / 16.0).exp(), PI * c * t * t)
        });
        out.push(member(format!("chirp c={c}"), f));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for j in 0..2 {
        out.push(member(format!("random {j}"), random_smooth(grid, &mut rng)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn members_vanish_at_the_boundary() {
        for n in [256, 1024] {
            let grid = GridSpec::new(1, 16.0, n).unwrap();
            let fam = family(grid, 7).unwrap();
            assert_eq!(fam.len(), 24);
            for m in &fam {
                let rel = m.f.boundary_mass(1.0);
                assert!(rel < 1e-12, "{}: {rel:e}", m.name);
            }
        }
    }

    #[test]
    fn deterministic_for_a_seed() {
        let grid = GridSpec::standard();
        let a = family(grid, 3).unwrap();
        let b = family(grid, 3).unwrap();
        let c = family(grid, 4).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.f, y.f);
        }
        assert_ne!(a[22].f, c[22].f);
    }
}
