//! Inclusion search over embedding edges. Only positive evidence is reported.

use crate::ast::*;
use crate::engine::normalize;
use serde::Serialize;
use std::collections::{HashSet, VecDeque};
use Exponent::{Finite, Inf, Inf0};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InclusionStep {
    pub rule_id: String,
    pub paper_location: String,
    pub from: String,
    pub to: String,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Inclusion {
    /// A chain of embeddings from the first space to the second.
    Established(Vec<InclusionStep>),
    /// No chain found within the search bounds; this is not a proof of non-inclusion.
    NoEvidence,
}

const MAX_DEPTH: usize = 6;
const MAX_NODES: usize = 20_000;

type Edge = (SpaceExpr, &'static str, &'static str);

fn exponents(e: &SpaceExpr, out: &mut Vec<Exponent>) {
    if let Amalgam(_, p, _) = e {
        out.push(*p);
    }
    for c in e.children() {
        exponents(c, out);
    }
}

fn top_edges(e: &SpaceExpr, targets: &[Exponent], wrap_vanishing: bool) -> Vec<Edge> {
    let mut out = Vec::new();
    match e {
        Amalgam(loc, p, w) => {
            let mut push = |q: Exponent| {
                out.push((Amalgam(loc.clone(), q, *w), "L31i", "Lemma 3.1(i)"));
            };
            match p {
                Finite(p1) => {
                    for t in targets {
                        if let Finite(q) = t {
                            if q > p1 {
                                push(*t);
                            }
                        }
                    }
                    push(Inf0);
                }
                Inf0 => push(Inf),
                Inf => {}
            }
            if p.is(1.0) && w.is_unit() && !matches!(loc.as_ref(), Dual(_)) {
                out.push((loc.as_ref().clone(), "L31s", "Lemma 3.1"));
            }
        }
        TensorPi(a, b) => out.push((TensorEps(a.clone(), b.clone()), "PiEps", "projective-injective ordering")),
        _ => {}
    }
    if wrap_vanishing && !matches!(e, Amalgam(..) | TensorPi(..) | TensorEps(..) | Mod(_) | Dual(_)) {
        out.push((Amalgam(Box::new(e.clone()), Inf0, WeightExpr::UNIT), "L31s", "Lemma 3.1"));
    }
    out
}

fn edges(e: &SpaceExpr, targets: &[Exponent], wrap: bool) -> Vec<Edge> {
    let mut out = top_edges(e, targets, wrap);
    let rebuild = |i: usize, sub: SpaceExpr| -> SpaceExpr {
        let mut k = 0;
        e.map_children(|c| {
            let r = if k == i { sub.clone() } else { c.clone() };
            k += 1;
            r
        })
    };
    if !matches!(e, Dual(_)) {
        for (i, c) in e.children().into_iter().enumerate() {
            for (s, id, loc) in edges(c, targets, wrap) {
                out.push((rebuild(i, s), id, loc));
            }
        }
    }
    out
}

pub fn includes(a: &SpaceExpr, b: &SpaceExpr) -> Inclusion {
    let start = normalize(a).normal_form;
    let goal = normalize(b).normal_form;
    let goal_key = goal.to_string();
    if start.to_string() == goal_key {
        return Inclusion::Established(vec![InclusionStep {
            rule_id: "Eq".into(),
            paper_location: "normal-form equality".into(),
            from: a.to_string(),
            to: b.to_string(),
        }]);
    }
    let mut targets = Vec::new();
    exponents(&goal, &mut targets);
    let wrap = targets.contains(&Inf0) || targets.contains(&Inf);
    let mut seen: HashSet<String> = HashSet::new();
    seen.insert(start.to_string());
    let mut queue: VecDeque<(SpaceExpr, Vec<InclusionStep>)> = VecDeque::new();
    queue.push_back((start, Vec::new()));
    while let Some((cur, path)) = queue.pop_front() {
        if path.len() >= MAX_DEPTH {
            continue;
        }
        for (next, id, loc) in edges(&cur, &targets, wrap) {
            let next = normalize(&next).normal_form;
            let key = next.to_string();
            if !seen.insert(key.clone()) {
                continue;
            }
            let mut p = path.clone();
            p.push(InclusionStep {
                rule_id: id.into(),
                paper_location: loc.into(),
                from: cur.to_string(),
                to: key.clone(),
            });
            if key == goal_key {
                return Inclusion::Established(p);
            }
            if seen.len() >= MAX_NODES {
                return Inclusion::NoEvidence;
            }
            queue.push_back((next, p));
        }
    }
    Inclusion::NoEvidence
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    fn inc(a: &str, b: &str) -> Inclusion {
        includes(&parse(a).unwrap(), &parse(b).unwrap())
    }

    #[test]
    fn equal_normal_forms() {
        let Inclusion::Established(c) = inc("Mod((L1 opi L2))", "W(FL2, l1)") else { panic!() };
        assert_eq!(c[0].rule_id, "Eq");
    }

    #[test]
    fn projective_into_injective() {
        let Inclusion::Established(c) = inc("Mod((L1 opi L2))", "Mod((L2 oeps L2))") else { panic!() };
        assert!(!c.is_empty());
    }

    #[test]
    fn global_exponent_increase() {
        assert!(matches!(inc("W(L2, l1)", "W(L2, l3)"), Inclusion::Established(_)));
        assert!(matches!(inc("W(L2, l1)", "W(L2, linf)"), Inclusion::Established(_)));
        assert!(matches!(inc("W(L2, l1)", "L2"), Inclusion::Established(_)));
    }

    #[test]
    fn no_reverse_evidence() {
        assert_eq!(inc("W(L2, l3)", "W(L2, l1)"), Inclusion::NoEvidence);
        assert_eq!(inc("L2", "L3"), Inclusion::NoEvidence);
        assert_eq!(inc("L1", "L2"), Inclusion::NoEvidence);
    }
}
