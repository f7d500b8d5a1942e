//! Space expressions and their canonical printed form.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Exponent {
    Finite(f64),
    /// `∞`.
    Inf,
    /// `∞` with vanishing at infinity (`L^∞_0`, `ℓ^∞_0`).
    Inf0,
}

impl Exponent {
    /// `1/p`, zero for both infinite kinds.
    pub fn recip(&self) -> f64 {
        match self {
            Exponent::Finite(p) => 1.0 / p,
            _ => 0.0,
        }
    }

    pub fn finite(&self) -> Option<f64> {
        match self {
            Exponent::Finite(p) => Some(*p),
            _ => None,
        }
    }

    pub fn is(&self, p: f64) -> bool {
        self.finite() == Some(p)
    }
}

/// Power weight `(1 + |x|)^s`; products of such weights add exponents.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightExpr(pub f64);

impl WeightExpr {
    pub const UNIT: WeightExpr = WeightExpr(0.0);

    pub fn is_unit(&self) -> bool {
        self.0 == 0.0
    }

    pub fn times(self, other: WeightExpr) -> WeightExpr {
        WeightExpr(self.0 + other.0)
    }

    pub fn recip(self) -> WeightExpr {
        WeightExpr(-self.0)
    }

    /// `η̌(x) = η(-x)`; power weights are even.
    pub fn reflect(self) -> WeightExpr {
        self
    }
}

/// Weight on the time-frequency plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TfWeight {
    Tensor(WeightExpr, WeightExpr),
    /// `(1 + |(x, ξ)|)^s`.
    Radial(WeightExpr),
}

#[derive(Debug, Clone, PartialEq)]
pub enum SpaceExpr {
    Lp(Exponent, WeightExpr),
    C0(WeightExpr),
    /// Fourier image `F E`.
    FL(Box<SpaceExpr>),
    /// Inverse Fourier image `F⁻¹ E`.
    FLinv(Box<SpaceExpr>),
    /// `W(E, L^p_w)`.
    Amalgam(Box<SpaceExpr>, Exponent, WeightExpr),
    TensorPi(Box<SpaceExpr>, Box<SpaceExpr>),
    TensorEps(Box<SpaceExpr>, Box<SpaceExpr>),
    /// Modulation space of a space on the time-frequency plane.
    Mod(Box<SpaceExpr>),
    Dual(Box<SpaceExpr>),
    Mpq(Exponent, Exponent, TfWeight),
    /// Shubin space `Q_s`.
    Qs(f64),
}

pub use SpaceExpr::*;

pub fn lp(p: f64, s: f64) -> SpaceExpr {
    Lp(Exponent::Finite(p), WeightExpr(s))
}

pub fn fl(e: SpaceExpr) -> SpaceExpr {
    FL(Box::new(e))
}

pub fn amalgam(e: SpaceExpr, p: Exponent, s: f64) -> SpaceExpr {
    Amalgam(Box::new(e), p, WeightExpr(s))
}

impl SpaceExpr {
    pub fn children(&self) -> Vec<&SpaceExpr> {
        match self {
            Lp(..) | C0(_) | Mpq(..) | Qs(_) => vec![],
            FL(a) | FLinv(a) | Mod(a) | Dual(a) | Amalgam(a, ..) => vec![a],
            TensorPi(a, b) | TensorEps(a, b) => vec![a, b],
        }
    }

    /// Rebuilds the node with each child replaced by `f(child)`.
    pub fn map_children(&self, mut f: impl FnMut(&SpaceExpr) -> SpaceExpr) -> SpaceExpr {
        match self {
            Lp(..) | C0(_) | Mpq(..) | Qs(_) => self.clone(),
            FL(a) => FL(Box::new(f(a))),
            FLinv(a) => FLinv(Box::new(f(a))),
            Mod(a) => Mod(Box::new(f(a))),
            Dual(a) => Dual(Box::new(f(a))),
            Amalgam(a, p, w) => Amalgam(Box::new(f(a)), *p, *w),
            TensorPi(a, b) => {
                let a = f(a);
                TensorPi(Box::new(a), Box::new(f(b)))
            }
            TensorEps(a, b) => {
                let a = f(a);
                TensorEps(Box::new(a), Box::new(f(b)))
            }
        }
    }

    pub fn size(&self) -> usize {
        1 + self.children().iter().map(|c| c.size()).sum::<usize>()
    }

    /// Translations act with bounded norm uniformly (`ω ≡ 1`).
    pub fn is_omega_flat(&self) -> bool {
        match self {
            Lp(_, w) | C0(w) => w.is_unit(),
            FL(a) | FLinv(a) => a.is_nu_flat(),
            Amalgam(e, _, w) => e.is_omega_flat() && w.is_unit(),
            TensorPi(a, b) | TensorEps(a, b) => a.is_omega_flat() && b.is_omega_flat(),
            Mod(x) => match x.as_ref() {
                TensorPi(a, b) | TensorEps(a, b) => a.is_omega_flat() && b.is_nu_flat(),
                _ => false,
            },
            Dual(e) => e.is_omega_flat(),
            Mpq(_, _, TfWeight::Tensor(w1, _)) => w1.is_unit(),
            Mpq(_, _, TfWeight::Radial(w)) => w.is_unit(),
            Qs(s) => *s == 0.0,
        }
    }

    /// Modulations act with bounded norm uniformly (`ν ≡ 1`).
    pub fn is_nu_flat(&self) -> bool {
        match self {
            Lp(..) | C0(_) => true,
            FL(a) | FLinv(a) => a.is_omega_flat(),
            Amalgam(e, ..) => e.is_nu_flat(),
            TensorPi(a, b) | TensorEps(a, b) => a.is_nu_flat() && b.is_nu_flat(),
            Mod(x) => match x.as_ref() {
                TensorPi(_, b) | TensorEps(_, b) => b.is_omega_flat(),
                _ => false,
            },
            Dual(e) => e.is_nu_flat(),
            Mpq(_, _, TfWeight::Tensor(_, w2)) => w2.is_unit(),
            Mpq(_, _, TfWeight::Radial(w)) => w.is_unit(),
            Qs(s) => *s == 0.0,
        }
    }

    /// Relaxed flatness: `ω` bounded above. Polynomial weights only give bounded `ω`
    /// when they are constant, so this coincides with [`Self::is_omega_flat`].
    pub fn is_omega_bounded(&self) -> bool {
        self.is_omega_flat()
    }
}

pub(crate) fn num(x: f64) -> String {
    if x == 0.0 {
        "0".into()
    } else if x.fract() == 0.0 && x.abs() < 1e15 {
        format!("{}", x as i64)
    } else {
        format!("{x}")
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Finite(p) => f.write_str(&num(*p)),
            Exponent::Inf => f.write_str("inf"),
            Exponent::Inf0 => f.write_str("inf0"),
        }
    }
}

impl fmt::Display for SpaceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lp(p, w) => write!(f, "L{p}[{}]", num(w.0)),
            C0(w) => write!(f, "C0[{}]", num(w.0)),
            FL(a) => match a.as_ref() {
                Lp(p, w) => write!(f, "FL{p}[{}]", num(w.0)),
                _ => write!(f, "F({a})"),
            },
            FLinv(a) => write!(f, "Finv({a})"),
            Amalgam(e, p, w) => {
                let g = match p {
                    Exponent::Finite(_) => format!("l{p}"),
                    Exponent::Inf => "linf".into(),
                    Exponent::Inf0 => "linf0".into(),
                };
                write!(f, "W({e}, {g}[{}])", num(w.0))
            }
            TensorPi(a, b) => write!(f, "({a} opi {b})"),
            TensorEps(a, b) => write!(f, "({a} oeps {b})"),
            Mod(a) => write!(f, "Mod({a})"),
            Dual(a) => write!(f, "Dual({a})"),
            Mpq(p, q, TfWeight::Tensor(a, b)) => write!(f, "M{p},{q}[{},{}]", num(a.0), num(b.0)),
            Mpq(p, q, TfWeight::Radial(a)) => write!(f, "M{p},{q}[rad {}]", num(a.0)),
            Qs(s) => write!(f, "Q{}", num(*s)),
        }
    }
}
