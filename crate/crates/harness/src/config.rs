use serde::{Deserialize, Serialize};
use tfnorm_core::GridSpec;

/// Local component chosen for suites that take one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LocalKind {
    L,
    FL,
    C0,
}

impl std::str::FromStr for LocalKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "L" => Ok(LocalKind::L),
            "FL" => Ok(LocalKind::FL),
            "C0" => Ok(LocalKind::C0),
            _ => Err(format!("local space `{s}` is not one of L, FL, C0")),
        }
    }
}

/// Suite configuration. Unset exponents and weights select the suite's default matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub p1: Option<f64>,
    pub p2: Option<f64>,
    pub s1: Option<f64>,
    pub s2: Option<f64>,
    pub local: Option<LocalKind>,
    #[serde(rename = "L")]
    pub l: f64,
    #[serde(rename = "N")]
    pub n: usize,
    pub seed: u64,
    pub dual_count: usize,
    /// Spread bound for two-sided equivalence checks.
    pub spread_bound: f64,
    /// Spread bound for checks driven by sampled injective lower bounds.
    pub eps_spread_bound: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            p1: None,
            p2: None,
            s1: None,
            s2: None,
            local: None,
            l: 16.0,
            n: 1024,
            seed: 1,
            dual_count: tfnorm_core::tensor::DEFAULT_DUAL_COUNT,
            spread_bound: 10.0,
            eps_spread_bound: 100.0,
        }
    }
}

impl VerifyConfig {
    pub fn grid(&self) -> tfnorm_core::Result<GridSpec> {
        GridSpec::new(1, self.l, self.n)
    }

    pub fn with_n(&self, n: usize) -> Self {
        VerifyConfig { n, ..self.clone() }
    }
}
