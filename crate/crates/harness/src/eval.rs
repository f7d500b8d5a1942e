//! Numeric evaluation of a space expression's norm on a sampled function.

use serde::Serialize;
use tfnorm_core::norms::{amalgam_norm_discrete, lp_norm, modulation_norm, shubin_norm, NormResult};
use tfnorm_core::windows::normalized_gaussian;
use tfnorm_core::{AmalgamSpec, Bupu, GlobalSpec, Method, SampledFunction, SpaceSpec, Weight};
use tfnorm_identify::ast::{Exponent, SpaceExpr, TfWeight, WeightExpr};
use tfnorm_identify::normalize;

use crate::error::{HarnessError, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Evaluation {
    pub space: String,
    pub normal_form: String,
    pub value: f64,
    pub truncation_error_estimate: f64,
    pub method: String,
    /// Whether the local norms decay across the grid; present for vanishing-sup globals.
    pub tail_vanishing: Option<bool>,
}

fn w(e: &WeightExpr) -> Weight {
    Weight::Power(e.0)
}

fn exp_value(p: &Exponent) -> f64 {
    p.finite().unwrap_or(f64::INFINITY)
}

fn unsupported(e: &SpaceExpr) -> HarnessError {
    HarnessError::Config(format!("no numeric norm for `{e}`"))
}

fn local_spec(e: &SpaceExpr) -> Result<SpaceSpec> {
    Ok(match e {
        SpaceExpr::Lp(Exponent::Inf0, wt) | SpaceExpr::C0(wt) => SpaceSpec::c0(w(wt)),
        SpaceExpr::Lp(p, wt) => SpaceSpec::lp(exp_value(p), w(wt)),
        SpaceExpr::FL(inner) => match inner.as_ref() {
            SpaceExpr::Lp(p, wt) => SpaceSpec::flp(exp_value(p), w(wt)),
            _ => return Err(unsupported(e)),
        },
        _ => return Err(unsupported(e)),
    })
}

fn direct(e: &SpaceExpr, f: &SampledFunction) -> Result<NormResult> {
    let plain = |value| NormResult { value, truncation_error_estimate: 0.0, method: Method::Direct, tail: None };
    match e {
        SpaceExpr::Lp(..) | SpaceExpr::C0(_) | SpaceExpr::FL(_) => {
            let spec = local_spec(e)?;
            let value = match &spec {
                SpaceSpec::Lp { p, w } => lp_norm(f, *p, w),
                SpaceSpec::C0 { w } => lp_norm(f, f64::INFINITY, w),
                SpaceSpec::FLp { p, w } => tfnorm_core::flp_norm(f, *p, w),
                SpaceSpec::MixedLpq { .. } => unreachable!("local_spec never yields a mixed space"),
            };
            Ok(plain(value))
        }
        SpaceExpr::Amalgam(local, p, wt) => {
            let global = match p {
                Exponent::Finite(p) => GlobalSpec::Lp { p: *p, w: w(wt) },
                Exponent::Inf => GlobalSpec::Linf { w: w(wt) },
                Exponent::Inf0 => GlobalSpec::Linf0 { w: w(wt) },
            };
            let b = Bupu::new(f.grid)?;
            Ok(amalgam_norm_discrete(f, &AmalgamSpec::new(local_spec(local)?, global), &b)?)
        }
        SpaceExpr::Mpq(p, q, tw) => {
            let weight = match tw {
                TfWeight::Tensor(a, b) => Weight::tensor(w(a), w(b)),
                TfWeight::Radial(a) => w(a),
            };
            let g = normalized_gaussian(f.grid);
            Ok(modulation_norm(f, &g, exp_value(p), exp_value(q), &weight)?)
        }
        SpaceExpr::Qs(s) => Ok(shubin_norm(f, *s)?),
        _ => Err(unsupported(e)),
    }
}

/// Evaluates the norm of `f` in `e`, falling back to the normal form of `e` when the
/// expression itself has no direct numeric counterpart.
pub fn evaluate(e: &SpaceExpr, f: &SampledFunction) -> Result<Evaluation> {
    let nf = normalize(e).normal_form;
    let r = match direct(e, f) {
        Ok(r) => r,
        Err(HarnessError::Config(_)) => direct(&nf, f)?,
        Err(err) => return Err(err),
    };
    Ok(Evaluation {
        space: e.to_string(),
        normal_form: nf.to_string(),
        value: r.value,
        truncation_error_estimate: r.truncation_error_estimate,
        method: r.method.to_string(),
        tail_vanishing: r.tail.map(|t| t.vanishing),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use tfnorm_core::windows::gaussian;
    use tfnorm_core::GridSpec;
    use tfnorm_identify::parse;

    #[test]
    fn lebesgue_norm_of_gaussian() {
        let f = gaussian(GridSpec::standard());
        let r = evaluate(&parse("L1").unwrap(), &f).unwrap();
        assert!((r.value - 1.0).abs() < 1e-8);
        assert_eq!(r.method, "direct");
    }

    #[test]
    fn tensor_expression_uses_normal_form() {
        let f = gaussian(GridSpec::standard());
        let via = evaluate(&parse("Mod((L1 opi L2))").unwrap(), &f).unwrap();
        let amal = evaluate(&parse("W(FL2[0], l1[0])").unwrap(), &f).unwrap();
        assert_eq!(via.normal_form, "W(FL2[0], l1[0])");
        assert_eq!(via.value, amal.value);
        assert_eq!(via.method, "discrete");
    }

    #[test]
    fn vanishing_global_reports_tail() {
        let f = gaussian(GridSpec::standard());
        let r = evaluate(&parse("W(L2, linf0)").unwrap(), &f).unwrap();
        assert_eq!(r.tail_vanishing, Some(true));
    }

    #[test]
    fn irreducible_tensor_is_rejected() {
        let f = gaussian(GridSpec::standard());
        assert!(evaluate(&parse("Mod((L3 opi L3))").unwrap(), &f).is_err());
    }
}
