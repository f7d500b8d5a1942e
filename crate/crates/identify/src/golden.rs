//! Fixed expressions with their expected normal forms and rule sequences.

use crate::engine::{normalize, TraceStep};
use crate::parser::parse;
use serde::Serialize;

pub struct GoldenCase {
    pub input: &'static str,
    pub normal_form: &'static str,
    pub rules: &'static [&'static str],
    /// Rules whose hypotheses fail at the irreducible result.
    pub rejected: &'static [&'static str],
}

pub static GOLDEN: &[GoldenCase] = &[
    GoldenCase { input: "Mod((L1 opi L2))", normal_form: "W(FL2[0], l1[0])", rules: &["R_C61a"], rejected: &[] },
    GoldenCase { input: "Mod((L2[1] opi L1))", normal_form: "M2,1[1,0]", rules: &["R_Boch"], rejected: &[] },
    GoldenCase { input: "Mod((C0 oeps L3))", normal_form: "W(FL3[0], linf0[0])", rules: &["R_C61b"], rejected: &[] },
    GoldenCase { input: "Mod((C0[1] oeps C0[2]))", normal_form: "W(F(C0[2]), linf0[1])", rules: &["R_C61c"], rejected: &[] },
    GoldenCase { input: "Mod((L1[1] opi L2))", normal_form: "W(FL2[0], l1[1])", rules: &["R_R69i", "R_Refl"], rejected: &[] },
    GoldenCase { input: "Mod((L2 opi FL1[1]))", normal_form: "L1[1]", rules: &["R_R69ii"], rejected: &[] },
    GoldenCase { input: "Mod((Q0 opi FL1[1]))", normal_form: "L1[1]", rules: &["R_Q", "R_R69ii"], rejected: &[] },
    GoldenCase { input: "Mod((L2[1] opi FL2[1]))", normal_form: "W(L2[0], l1[2])", rules: &["R_R69iii"], rejected: &[] },
    GoldenCase { input: "Mod((L3 oeps FL3[1]))", normal_form: "W(L3[0], linf0[1])", rules: &["R_R69iii"], rejected: &[] },
    GoldenCase {
        input: "Mod((W(L2, l1[1]) opi F(W(FL2, l1[1]))))",
        normal_form: "W(FL2[0], l1[2])",
        rules: &["R_T42"],
        rejected: &[],
    },
    GoldenCase {
        input: "Mod((W(L2, l2) oeps F(W(L2, l2))))",
        normal_form: "W(L2[0], linf0[0])",
        rules: &["R_T51"],
        rejected: &[],
    },
    GoldenCase {
        input: "Mod((W(L2, l3) opi F(W(L2, l3))))",
        normal_form: "Mod((W(L2[0], l3[0]) opi F(W(L2[0], l3[0]))))",
        rules: &[],
        rejected: &["R_T42"],
    },
    GoldenCase { input: "Mod((L3 opi L3))", normal_form: "Mod((L3[0] opi L3[0]))", rules: &[], rejected: &["R_C61a"] },
    GoldenCase { input: "F(M2,1[0,0])", normal_form: "W(FL2[0], l1[0])", rules: &["R_R62"], rejected: &[] },
    GoldenCase { input: "Dual(W(L2, l1[1]))", normal_form: "W(Dual(L2[0]), linf[-1])", rules: &["R_Dual"], rejected: &[] },
];

#[derive(Debug, Clone, Serialize)]
pub struct GoldenOutcome {
    pub input: String,
    pub normal_form: String,
    pub trace: Vec<TraceStep>,
    pub rejected: Vec<String>,
    pub pass: bool,
}

pub fn run_golden() -> Vec<GoldenOutcome> {
    GOLDEN
        .iter()
        .map(|c| match parse(c.input) {
            Ok(e) => {
                let n = normalize(&e);
                let ids: Vec<&str> = n.trace.iter().map(|s| s.rule_id.as_str()).collect();
                let rejected: Vec<String> = n.rejections.iter().map(|r| r.rule_id.clone()).collect();
                let nf = n.normal_form.to_string();
                let pass = nf == c.normal_form && ids == c.rules && rejected == c.rejected;
                GoldenOutcome { input: c.input.into(), normal_form: nf, trace: n.trace, rejected, pass }
            }
            Err(err) => GoldenOutcome {
                input: c.input.into(),
                normal_form: err.to_string(),
                trace: vec![],
                rejected: vec![],
                pass: false,
            },
        })
        .collect()
}

pub fn golden_json() -> String {
    serde_json::to_string_pretty(&run_golden()).expect("golden outcomes serialize")
}
