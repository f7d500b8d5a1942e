//! Rewrite rules with side conditions, in priority order.

use crate::ast::*;
use Exponent::{Finite, Inf, Inf0};

pub enum Outcome {
    NoMatch,
    /// Pattern matched but the named hypothesis fails.
    Rejected(&'static str),
    Fired(SpaceExpr, String),
}

pub struct Rule {
    pub id: &'static str,
    pub location: &'static str,
    pub apply: fn(&SpaceExpr) -> Outcome,
}

use Outcome::*;

fn b(e: SpaceExpr) -> Box<SpaceExpr> {
    Box::new(e)
}

fn unit_lp(e: &SpaceExpr) -> Option<f64> {
    match e {
        Lp(Finite(p), w) if w.is_unit() => Some(*p),
        _ => None,
    }
}

fn is_unit_c0(e: &SpaceExpr) -> bool {
    matches!(e, C0(w) if w.is_unit())
}

fn mod_pi(e: &SpaceExpr) -> Option<(&SpaceExpr, &SpaceExpr)> {
    match e {
        Mod(x) => match x.as_ref() {
            TensorPi(a, c) => Some((a, c)),
            _ => None,
        },
        _ => None,
    }
}

fn mod_eps(e: &SpaceExpr) -> Option<(&SpaceExpr, &SpaceExpr)> {
    match e {
        Mod(x) => match x.as_ref() {
            TensorEps(a, c) => Some((a, c)),
            _ => None,
        },
        _ => None,
    }
}

fn fmt_p(p: f64) -> String {
    num(p)
}

fn c61a(e: &SpaceExpr) -> Outcome {
    let Some((a, c)) = mod_pi(e) else { return NoMatch };
    let (Some(p1), Some(p2)) = (unit_lp(a), unit_lp(c)) else { return NoMatch };
    if 1.0 <= p1 && p1 <= p2 && p2 <= 2.0 {
        Fired(amalgam(fl(lp(p2, 0.0)), Finite(1.0), 0.0), format!("p1={}, p2={}", fmt_p(p1), fmt_p(p2)))
    } else {
        Rejected("1≤p₁≤p₂≤2")
    }
}

fn c61b(e: &SpaceExpr) -> Outcome {
    let Some((a, c)) = mod_eps(e) else { return NoMatch };
    let Some(p2) = unit_lp(c) else { return NoMatch };
    let out = || amalgam(fl(lp(p2, 0.0)), Inf0, 0.0);
    if let Some(p1) = unit_lp(a) {
        if 2.0 <= p2 && p2 <= p1 {
            return Fired(out(), format!("p1={}, p2={}", fmt_p(p1), fmt_p(p2)));
        }
        return Rejected("2≤p₂≤p₁<∞");
    }
    if is_unit_c0(a) {
        if p2 >= 2.0 {
            return Fired(out(), format!("p1=C0, p2={}", fmt_p(p2)));
        }
        return Rejected("2≤p₂<∞");
    }
    NoMatch
}

fn c61c(e: &SpaceExpr) -> Outcome {
    let Some((a, c)) = mod_eps(e) else { return NoMatch };
    match (a, c) {
        (C0(w1), C0(w2)) => Fired(
            Amalgam(b(fl(C0(w2.reflect()))), Inf0, *w1),
            format!("s1={}, s2={}", num(w1.0), num(w2.0)),
        ),
        _ => NoMatch,
    }
}

fn r62(e: &SpaceExpr) -> Outcome {
    match e {
        FL(x) => match x.as_ref() {
            Mpq(Finite(p), q, TfWeight::Tensor(w1, w2)) if q.is(1.0) && w1.is_unit() && w2.is_unit() => {
                if *p <= 2.0 {
                    Fired(amalgam(fl(lp(*p, 0.0)), Finite(1.0), 0.0), format!("p2={}", fmt_p(*p)))
                } else {
                    Rejected("1≤p₂≤2")
                }
            }
            _ => NoMatch,
        },
        _ => NoMatch,
    }
}

fn is_space_atom(e: &SpaceExpr) -> bool {
    !matches!(e, TensorPi(..) | TensorEps(..) | Mod(_) | Dual(_))
}

fn r69i(e: &SpaceExpr) -> Outcome {
    if let Some((Lp(Finite(p), w), c)) = mod_pi(e) {
        if *p == 1.0 && is_space_atom(c) {
            return Fired(Amalgam(b(FLinv(b(c.clone()))), Finite(1.0), *w), format!("s={}", num(w.0)));
        }
    }
    if let Some((C0(w), c)) = mod_eps(e) {
        if is_space_atom(c) {
            return Fired(Amalgam(b(FLinv(b(c.clone()))), Inf0, *w), format!("s={}", num(w.0)));
        }
    }
    NoMatch
}

fn r69ii(e: &SpaceExpr) -> Outcome {
    let (f, target) = if let Some((f, FL(x))) = mod_pi(e) {
        match x.as_ref() {
            Lp(p, w) if p.is(1.0) => (f, Lp(Finite(1.0), *w)),
            Amalgam(inner, p, w) if p.is(1.0) => (f, Amalgam(inner.clone(), Finite(1.0), *w)),
            _ => return NoMatch,
        }
    } else if let Some((f, FL(x))) = mod_eps(e) {
        match x.as_ref() {
            C0(w) => (f, C0(*w)),
            Amalgam(inner, Inf0, w) => (f, Amalgam(inner.clone(), Inf0, *w)),
            _ => return NoMatch,
        }
    } else {
        return NoMatch;
    };
    if f.is_omega_flat() {
        Fired(target, format!("F={f}"))
    } else {
        Rejected("ω_F = 1")
    }
}

fn r69iii(e: &SpaceExpr) -> Outcome {
    if let Some((Lp(Finite(p1), w1), FL(x))) = mod_pi(e) {
        if let Lp(Finite(p2), w2) = x.as_ref() {
            let bind = format!("p1={}, p2={}", fmt_p(*p1), fmt_p(*p2));
            return if 1.0 / p1 + 1.0 / p2 >= 1.0 {
                Fired(Amalgam(b(lp(*p2, 0.0)), Finite(1.0), w1.times(*w2)), bind)
            } else {
                Rejected("p₁⁻¹+p₂⁻¹≥1")
            };
        }
    }
    if let Some((Lp(Finite(p1), w1), FL(x))) = mod_eps(e) {
        if let Lp(Finite(p2), w2) = x.as_ref() {
            let bind = format!("p1={}, p2={}", fmt_p(*p1), fmt_p(*p2));
            return if *p1 > 1.0 && *p2 > 1.0 && 1.0 / p1 + 1.0 / p2 <= 1.0 {
                Fired(Amalgam(b(lp(*p2, 0.0)), Inf0, w1.times(*w2)), bind)
            } else {
                Rejected("1<p₁,p₂<∞, p₁⁻¹+p₂⁻¹≤1")
            };
        }
    }
    NoMatch
}

/// Splits `(W(F, L^{p1}_{η1}), F W(E, L^{p2}_{η2}))`.
fn amalgam_pair<'a>(a: &'a SpaceExpr, c: &'a SpaceExpr) -> Option<(&'a SpaceExpr, Exponent, WeightExpr, &'a SpaceExpr, Exponent, WeightExpr)> {
    match (a, c) {
        (Amalgam(f, p1, w1), FL(x)) => match x.as_ref() {
            Amalgam(e, p2, w2) => Some((f, *p1, *w1, e, *p2, *w2)),
            _ => None,
        },
        _ => None,
    }
}

fn bind2(p1: Exponent, p2: Exponent) -> String {
    format!("p1={p1}, p2={p2}")
}

/// Exponent hypotheses for the projective case.
pub fn pi_exponents_ok(p1: Exponent, p2: Exponent) -> bool {
    match (p1, p2) {
        (Finite(_), Finite(_)) => p1.recip() + p2.recip() >= 1.0,
        (Inf0, q) => q.is(1.0),
        (p, Inf0) => p.is(1.0),
        _ => false,
    }
}

/// Exponent hypotheses for the injective case.
pub fn eps_exponents_ok(p1: Exponent, p2: Exponent) -> bool {
    match (p1, p2) {
        (Finite(a), Finite(c)) => a > 1.0 && c > 1.0 && 1.0 / a + 1.0 / c <= 1.0,
        (Inf0, Finite(_)) | (Finite(_), Inf0) | (Inf0, Inf0) => true,
        _ => false,
    }
}

pub const PI_HYPOTHESIS: &str = "p₁^{-1}+p₂^{-1}≥1";
pub const EPS_HYPOTHESIS: &str = "p₁^{-1}+p₂^{-1}≤1 with 1<p₁,p₂<∞, or a vanishing exponent";

fn t42(e: &SpaceExpr) -> Outcome {
    let Some((a, c)) = mod_pi(e) else { return NoMatch };
    let Some((f, p1, w1, ee, p2, w2)) = amalgam_pair(a, c) else { return NoMatch };
    if !f.is_omega_flat() {
        return Rejected("ω_F = 1");
    }
    if !pi_exponents_ok(p1, p2) {
        return Rejected(PI_HYPOTHESIS);
    }
    Fired(Amalgam(b(ee.clone()), Finite(1.0), w1.times(w2)), bind2(p1, p2))
}

fn t51(e: &SpaceExpr) -> Outcome {
    let Some((a, c)) = mod_eps(e) else { return NoMatch };
    let Some((f, p1, w1, ee, p2, w2)) = amalgam_pair(a, c) else { return NoMatch };
    if !f.is_omega_flat() {
        return Rejected("ω_F = 1");
    }
    if !eps_exponents_ok(p1, p2) {
        return Rejected(EPS_HYPOTHESIS);
    }
    Fired(Amalgam(b(ee.clone()), Inf0, w1.times(w2)), bind2(p1, p2))
}

fn l34(e: &SpaceExpr) -> Outcome {
    let FLinv(x) = e else { return NoMatch };
    let Amalgam(loc, Finite(p2), w2) = x.as_ref() else { return NoMatch };
    let FL(y) = loc.as_ref() else { return NoMatch };
    let Lp(Finite(p1), w1) = y.as_ref() else { return NoMatch };
    Fired(
        Mpq(Finite(*p1), Finite(*p2), TfWeight::Tensor(*w1, *w2)),
        format!("p1={}, p2={}", fmt_p(*p1), fmt_p(*p2)),
    )
}

fn boch(e: &SpaceExpr) -> Outcome {
    let Some((Lp(Finite(p), w1), Lp(q, w2))) = mod_pi(e) else { return NoMatch };
    if !q.is(1.0) {
        return NoMatch;
    }
    Fired(Mpq(Finite(*p), Finite(1.0), TfWeight::Tensor(w1.reflect(), *w2)), format!("p={}", fmt_p(*p)))
}

fn dual(e: &SpaceExpr) -> Outcome {
    let Dual(x) = e else { return NoMatch };
    let Amalgam(loc, p, w) = x.as_ref() else { return NoMatch };
    if matches!(loc.as_ref(), Dual(_)) {
        return NoMatch;
    }
    let q = match p {
        Finite(v) if *v == 1.0 => Inf,
        Finite(v) => Finite(v / (v - 1.0)),
        Inf0 => Finite(1.0),
        Inf => return Rejected("p<∞ or vanishing sup"),
    };
    Fired(Amalgam(b(Dual(loc.clone())), q, w.recip()), format!("p={p}, q={q}"))
}

fn shubin(e: &SpaceExpr) -> Outcome {
    match e {
        Qs(s) => Fired(Mpq(Finite(2.0), Finite(2.0), TfWeight::Radial(WeightExpr(*s))), format!("s={}", num(*s))),
        _ => NoMatch,
    }
}

fn fourier_cancel(e: &SpaceExpr) -> Outcome {
    match e {
        FL(x) => match x.as_ref() {
            FLinv(y) => Fired(y.as_ref().clone(), String::new()),
            _ => NoMatch,
        },
        FLinv(x) => match x.as_ref() {
            FL(y) => Fired(y.as_ref().clone(), String::new()),
            _ => NoMatch,
        },
        _ => NoMatch,
    }
}

fn reflection(e: &SpaceExpr) -> Outcome {
    let FLinv(x) = e else { return NoMatch };
    match x.as_ref() {
        Lp(Finite(_), _) | C0(_) => Fired(FL(x.clone()), String::new()),
        _ => NoMatch,
    }
}

pub static RULES: &[Rule] = &[
    Rule { id: "R_C61a", location: "Corollary 6.1(a)", apply: c61a },
    Rule { id: "R_C61b", location: "Corollary 6.1(b)", apply: c61b },
    Rule { id: "R_C61c", location: "Corollary 6.1(c)", apply: c61c },
    Rule { id: "R_R62", location: "Remark 6.2", apply: r62 },
    Rule { id: "R_R69i", location: "Remark 6.9(i)", apply: r69i },
    Rule { id: "R_R69ii", location: "Remark 6.9(ii)", apply: r69ii },
    Rule { id: "R_R69iii", location: "Remark 6.9(iii)", apply: r69iii },
    Rule { id: "R_T42", location: "Theorem 4.2", apply: t42 },
    Rule { id: "R_T51", location: "Theorem 5.1", apply: t51 },
    Rule { id: "R_L34", location: "Lemma 3.4", apply: l34 },
    Rule { id: "R_Boch", location: "Remark 6.9(i)", apply: boch },
    Rule { id: "R_Dual", location: "Lemma 3.1(iii)", apply: dual },
    Rule { id: "R_Q", location: "Corollary 6.7", apply: shubin },
    Rule { id: "R_FF", location: "Fourier image norm", apply: fourier_cancel },
    Rule { id: "R_Refl", location: "reflection-invariant Fourier image", apply: reflection },
];

pub fn rule(id: &str) -> Option<&'static Rule> {
    RULES.iter().find(|r| r.id == id)
}
