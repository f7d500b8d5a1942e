//! Verification reports and their JSON and CSV encodings.

use serde::{Deserialize, Serialize};

use crate::config::VerifyConfig;

/// Floats as JSON numbers, with non-finite values written as `"inf"`, `"-inf"` or `"nan"`.
pub mod float {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_finite() {
            s.serialize_f64(*v)
        } else if v.is_nan() {
            s.serialize_str("nan")
        } else if *v > 0.0 {
            s.serialize_str("inf")
        } else {
            s.serialize_str("-inf")
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Num(f64),
        Text(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Num(v) => Ok(v),
            Repr::Text(t) => match t.as_str() {
                "inf" => Ok(f64::INFINITY),
                "-inf" => Ok(f64::NEG_INFINITY),
                "nan" => Ok(f64::NAN),
                _ => Err(serde::de::Error::custom(format!("not a number: {t}"))),
            },
        }
    }
}

/// One comparison: `ratio = lhs / rhs` for equivalence checks, or a residual in `lhs`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub group: String,
    pub function: String,
    #[serde(with = "float")]
    pub lhs: f64,
    #[serde(with = "float")]
    pub rhs: f64,
    #[serde(with = "float")]
    pub ratio: f64,
    pub ok: bool,
    pub detail: String,
}

/// How a group of rows is judged.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Check {
    /// `max ratio / min ratio <= bound`.
    Spread { bound: f64 },
    /// Every `ratio <= bound`.
    AtMost { bound: f64 },
    /// Every row's own flag.
    Rows,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub group: String,
    pub check: Check,
    pub count: usize,
    #[serde(with = "float")]
    pub min: f64,
    #[serde(with = "float")]
    pub max: f64,
    #[serde(with = "float")]
    pub spread: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub location: String,
    pub config: VerifyConfig,
    pub groups: Vec<GroupSummary>,
    pub rows: Vec<Row>,
    pub pass: bool,
    /// Wall-clock time; kept out of the serialized forms so that reruns are byte-identical.
    #[serde(skip)]
    pub runtime_secs: f64,
}

pub fn summarize(group: &str, check: Check, rows: &[Row]) -> GroupSummary {
    let mine: Vec<&Row> = rows.iter().filter(|r| r.group == group).collect();
    let min = mine.iter().map(|r| r.ratio).fold(f64::INFINITY, f64::min);
    let max = mine.iter().map(|r| r.ratio).fold(f64::NEG_INFINITY, f64::max);
    let finite = mine.iter().all(|r| r.ratio.is_finite());
    // Spread is only meaningful for equivalence checks.
    let spread = match check {
        Check::Spread { .. } if !mine.is_empty() => max / min,
        _ => 1.0,
    };
    let pass = !mine.is_empty()
        && mine.iter().all(|r| r.ok)
        && match check {
            Check::Spread { bound } => finite && min > 0.0 && spread <= bound,
            Check::AtMost { bound } => max <= bound,
            Check::Rows => true,
        };
    GroupSummary { group: group.into(), check, count: mine.len(), min, max, spread, pass }
}

impl Report {
    /// Builds the report, judging each group in the order given.
    /// Rows are stably reordered to follow the group order.
    pub fn new(suite: &str, location: &str, config: VerifyConfig, checks: &[(String, Check)], mut rows: Vec<Row>) -> Self {
        rows.sort_by_key(|r| checks.iter().position(|(g, _)| *g == r.group).unwrap_or(usize::MAX));
        let groups: Vec<GroupSummary> = checks.iter().map(|(g, c)| summarize(g, *c, &rows)).collect();
        let pass = !groups.is_empty() && groups.iter().all(|g| g.pass);
        Report { suite: suite.into(), location: location.into(), config, groups, rows, pass, runtime_secs: 0.0 }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// Header, one line per row, and a final summary line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("group,function,lhs,rhs,ratio,ok,detail\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{:e},{:e},{:e},{},{}\n",
                csv_field(&r.group),
                csv_field(&r.function),
                r.lhs,
                r.rhs,
                r.ratio,
                r.ok,
                csv_field(&r.detail)
            ));
        }
        let worst = self.groups.iter().map(|g| g.spread).fold(1.0, f64::max);
        out.push_str(&format!(
            "summary,{},{},{},{:e},{},{}\n",
            csv_field(&self.suite),
            self.groups.len(),
            self.rows.len(),
            worst,
            self.pass,
            csv_field(&self.location)
        ));
        out
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(format!("unknown format `{s}`")),
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
