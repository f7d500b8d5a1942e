//! Innermost-first normalization to a fixpoint, with traces.

use crate::ast::*;
use crate::rules::{Outcome, RULES};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TraceStep {
    pub rule_id: String,
    pub paper_location: String,
    pub before: String,
    pub after: String,
    #[serde(skip)]
    pub bindings: String,
}

/// A rule whose pattern matched an irreducible node but whose hypothesis failed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Rejection {
    pub rule_id: String,
    pub paper_location: String,
    pub at: String,
    pub hypothesis: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Normalized {
    pub normal_form: SpaceExpr,
    pub trace: Vec<TraceStep>,
    pub rejections: Vec<Rejection>,
}

pub fn normalize(e: &SpaceExpr) -> Normalized {
    let mut trace = Vec::new();
    let mut rejections = Vec::new();
    let normal_form = norm(e, &mut trace, &mut rejections);
    Normalized { normal_form, trace, rejections }
}

fn norm(e: &SpaceExpr, trace: &mut Vec<TraceStep>, rej: &mut Vec<Rejection>) -> SpaceExpr {
    let node = e.map_children(|c| norm(c, trace, rej));
    let mut pending = Vec::new();
    for r in RULES {
        match (r.apply)(&node) {
            Outcome::NoMatch => {}
            Outcome::Rejected(h) => pending.push(Rejection {
                rule_id: r.id.into(),
                paper_location: r.location.into(),
                at: node.to_string(),
                hypothesis: h.into(),
            }),
            Outcome::Fired(next, bindings) => {
                trace.push(TraceStep {
                    rule_id: r.id.into(),
                    paper_location: r.location.into(),
                    before: node.to_string(),
                    after: next.to_string(),
                    bindings,
                });
                return norm(&next, trace, rej);
            }
        }
    }
    rej.extend(pending);
    node
}

/// Well-founded measure decreased by every rule: a weighted node count, then the total
/// size of subtrees under `Dual`.
pub fn measure(e: &SpaceExpr) -> (u64, u64) {
    fn weight(e: &SpaceExpr) -> u64 {
        let own = match e {
            Mod(_) | TensorPi(..) | TensorEps(..) => 1000,
            Qs(_) => 100,
            FLinv(_) => 10,
            Mpq(..) => 5,
            _ => 1,
        };
        own + e.children().iter().map(|c| weight(c)).sum::<u64>()
    }
    fn dual_size(e: &SpaceExpr) -> u64 {
        let own = if matches!(e, Dual(_)) { e.size() as u64 } else { 0 };
        own + e.children().iter().map(|c| dual_size(c)).sum::<u64>()
    }
    (weight(e), dual_size(e))
}

/// One line per firing, or `already normal`.
pub fn explain(trace: &[TraceStep]) -> String {
    if trace.is_empty() {
        return "already normal".into();
    }
    trace
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let b = if s.bindings.is_empty() { String::new() } else { format!("  [{}]", s.bindings) };
            format!("{}. {} ({}): {} => {}{}", i + 1, s.rule_id, s.paper_location, s.before, s.after, b)
        })
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn trace_json(trace: &[TraceStep]) -> String {
    serde_json::to_string_pretty(trace).expect("trace serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    fn nf(s: &str) -> Normalized {
        normalize(&parse(s).unwrap())
    }

    #[test]
    fn explain_normal_input() {
        let n = nf("L2[1]");
        assert!(n.trace.is_empty());
        assert_eq!(explain(&n.trace), "already normal");
    }

    #[test]
    fn explain_lists_each_firing() {
        let n = nf("Mod((L1[1] opi L2))");
        let text = explain(&n.trace);
        assert_eq!(text.lines().count(), 2);
        assert!(text.starts_with("1. R_R69i (Remark 6.9(i)): "));
        assert!(text.contains("2. R_Refl"));
    }

    #[test]
    fn trace_json_fields_in_order() {
        let n = nf("Mod((L1 opi L2))");
        let j = trace_json(&n.trace);
        let v: serde_json::Value = serde_json::from_str(&j).unwrap();
        assert_eq!(v[0]["rule_id"], "R_C61a");
        assert_eq!(v[0]["after"], "W(FL2[0], l1[0])");
        let a = j.find("rule_id").unwrap();
        let b = j.find("paper_location").unwrap();
        let c = j.find("before").unwrap();
        assert!(a < b && b < c);
        assert!(!j.contains("bindings"));
    }

    #[test]
    fn fourier_of_amalgam_becomes_modulation_space() {
        let n = nf("Finv(W(FL2[1], l1[0]))");
        assert_eq!(n.normal_form.to_string(), "M2,1[1,0]");
        assert_eq!(n.trace[0].rule_id, "R_L34");
    }

    #[test]
    fn fourier_pair_cancels() {
        assert_eq!(nf("F(Finv(W(L2, l1)))").normal_form.to_string(), "W(L2[0], l1[0])");
    }

    #[test]
    fn injective_hypothesis_rejection_is_recorded() {
        let n = nf("Mod((W(L2, l1) oeps F(W(L2, l1))))");
        assert!(n.trace.is_empty());
        assert!(n.rejections.iter().any(|r| r.rule_id == "R_T51"));
    }

    #[test]
    fn projective_outside_range_is_irreducible() {
        let n = nf("Mod((L3 opi L2))");
        assert!(n.trace.is_empty());
        assert_eq!(n.normal_form.to_string(), "Mod((L3[0] opi L2[0]))");
        assert!(n.rejections.iter().any(|r| r.rule_id == "R_C61a"));
    }

    #[test]
    fn weighted_space_is_not_translation_flat() {
        assert!(parse("L2").unwrap().is_omega_flat());
        assert!(!parse("L2[1]").unwrap().is_omega_flat());
        assert!(!parse("L2[-1]").unwrap().is_omega_flat());
        assert!(parse("FL2[3]").unwrap().is_omega_flat());
        assert!(!parse("FL2[3]").unwrap().is_nu_flat());
        assert!(parse("W(L2, l1)").unwrap().is_omega_flat());
        assert!(!parse("W(L2, l1[2])").unwrap().is_omega_flat());
    }

    #[test]
    fn every_step_lowers_measure() {
        for src in ["Mod((Q0 opi FL1[1]))", "Dual(W(L2, l1[1]))", "Mod((L1[1] opi L2))", "F(M2,1[0,0])"] {
            let n = nf(src);
            for s in &n.trace {
                let before = measure(&parse(&s.before).unwrap());
                let after = measure(&parse(&s.after).unwrap());
                assert!(after < before, "{} -> {}", s.before, s.after);
            }
        }
    }
}
