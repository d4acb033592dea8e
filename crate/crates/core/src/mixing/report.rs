use serde::{Deserialize, Serialize};

use crate::graphs::Family;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Mixes,
    DoesNotMixCertified,
    NoMixingFoundEvidence,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Mixes => "mixes",
            Verdict::DoesNotMixCertified => "does-not-mix-certified",
            Verdict::NoMixingFoundEvidence => "no-mixing-found-evidence",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificationRoute {
    ClosedForm,
    Numeric,
}

/// Outcome of a mixing certification or scan.
///
/// For closed-form non-mixing verdicts `min_distance` is a certified lower bound
/// on the TV distance over all times and `deficit` is the per-vertex gap
/// `1/n - max P_t(j)` on the vertices that can never reach `1/n`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MixingReport {
    pub graph: Family,
    pub verdict: Verdict,
    pub witness_times: Vec<f64>,
    pub min_distance: f64,
    pub min_time: Option<f64>,
    pub deficit: Option<f64>,
    pub scan_window: [f64; 2],
    pub grid_step: Option<f64>,
    pub tolerance: f64,
    pub route: CertificationRoute,
    pub notes: Vec<String>,
}

impl MixingReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is always serializable")
    }

    pub fn from_json(text: &str) -> serde_json::Result<MixingReport> {
        serde_json::from_str(text)
    }
}
