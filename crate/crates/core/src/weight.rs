//! Polynomial weights `v_s(x) = (1 + |x|)^s` and their products, with moderation witnesses.

use crate::grid::{euclid, GridSpec};
use std::fmt;

/// Constants `(C, τ)` in `η(x + y) <= C η(x) (1 + |y|)^τ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Witness {
    pub c: f64,
    pub tau: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Weight {
    /// `(1 + |x|)^s` with `|x|` the Euclidean norm of all coordinates.
    Power(f64),
    /// Pointwise product at the same argument.
    Product(Vec<Weight>),
    /// `η1(x) η2(ξ)` on `(x, ξ)`; the argument is split in half.
    Tensor(Box<Weight>, Box<Weight>),
}

pub fn make_power_weight(s: f64) -> Weight {
    Weight::Power(s)
}

impl Weight {
    pub fn unit() -> Self {
        Weight::Power(0.0)
    }

    pub fn tensor(a: Weight, b: Weight) -> Self {
        Weight::Tensor(Box::new(a), Box::new(b))
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        match self {
            Weight::Power(s) => {
                if *s == 0.0 {
                    1.0
                } else {
                    (1.0 + euclid(x)).powf(*s)
                }
            }
            Weight::Product(ws) => ws.iter().map(|w| w.eval(x)).product(),
            Weight::Tensor(a, b) => {
                let m = x.len() / 2;
                a.eval(&x[..m]) * b.eval(&x[m..])
            }
        }
    }

    pub fn witness(&self) -> Witness {
        match self {
            Weight::Power(s) => Witness { c: 1.0, tau: s.abs() },
            Weight::Product(ws) => ws.iter().fold(Witness { c: 1.0, tau: 0.0 }, |acc, w| {
                let v = w.witness();
                Witness { c: acc.c * v.c, tau: acc.tau + v.tau }
            }),
            Weight::Tensor(a, b) => {
                let (u, v) = (a.witness(), b.witness());
                Witness { c: u.c * v.c, tau: u.tau + v.tau }
            }
        }
    }

    /// `1/η`.
    pub fn reciprocal(&self) -> Weight {
        match self {
            Weight::Power(s) => Weight::Power(-s),
            Weight::Product(ws) => Weight::Product(ws.iter().map(Weight::reciprocal).collect()),
            Weight::Tensor(a, b) => Weight::tensor(a.reciprocal(), b.reciprocal()),
        }
    }

    pub fn is_unit(&self) -> bool {
        match self {
            Weight::Power(s) => *s == 0.0,
            Weight::Product(ws) => ws.iter().all(Weight::is_unit),
            Weight::Tensor(a, b) => a.is_unit() && b.is_unit(),
        }
    }

    /// Total exponent when the weight is a product of powers of one variable.
    pub fn power_exponent(&self) -> Option<f64> {
        match self {
            Weight::Power(s) => Some(*s),
            Weight::Product(ws) => ws.iter().map(Weight::power_exponent).sum(),
            Weight::Tensor(..) => None,
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Power(s) => write!(f, "v{s}"),
            Weight::Product(ws) => {
                let parts: Vec<String> = ws.iter().map(|w| w.to_string()).collect();
                write!(f, "{}", parts.join("*"))
            }
            Weight::Tensor(a, b) => write!(f, "{a}(x){b}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModerationReport {
    /// `max η(x+y) / (η(x) (1+|y|)^τ)` over the sampled pairs.
    pub c_emp: f64,
    pub tau: f64,
    pub pass: bool,
}

impl ModerationReport {
    pub fn within_witness(&self, w: &Witness) -> bool {
        self.c_emp <= w.c * (1.0 + 1e-9)
    }
}

/// Empirical moderation constant over pairs of grid points (subsampled to at most
/// 2048 points per factor). The grid dimension is the number of weight arguments.
pub fn moderation_check(eta: &Weight, grid: &GridSpec) -> ModerationReport {
    let tau = eta.witness().tau;
    let total = grid.len();
    let stride = total.div_ceil(2048).max(1);
    let pts: Vec<[f64; 2]> = (0..total).step_by(stride).map(|i| grid.point(i)).collect();
    let d = grid.dim;
    let mut c_emp: f64 = 0.0;
    for x in &pts {
        let ex = eta.eval(&x[..d]);
        for y in &pts {
            let mut s = [0.0; 2];
            for k in 0..d {
                s[k] = x[k] + y[k];
            }
            let r = eta.eval(&s[..d]) / (ex * (1.0 + euclid(&y[..d])).powf(tau));
            c_emp = c_emp.max(r);
        }
    }
    ModerationReport { c_emp, tau, pass: c_emp.is_finite() }
}
