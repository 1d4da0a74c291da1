use std::fmt::{self, Display};
use std::time::Instant;

use serde::Serialize;

/// Which identity a record checks. Declaration order fixes output order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum IdentityId {
    #[serde(rename = "theorem1")]
    Theorem1,
    #[serde(rename = "vanishing")]
    Vanishing,
    #[serde(rename = "theorem2")]
    Theorem2,
    #[serde(rename = "recurrence")]
    Recurrence,
    #[serde(rename = "perA")]
    PerA,
    #[serde(rename = "theorem3_per_det")]
    Theorem3PerDet,
    #[serde(rename = "even_cycle_expansion")]
    EvenCycleExpansion,
    #[serde(rename = "cyclo_even")]
    CycloEven,
    #[serde(rename = "cyclo_odd")]
    CycloOdd,
    #[serde(rename = "cycle_lemma")]
    CycleLemma,
    #[serde(rename = "derangement_sums")]
    DerangementSums,
    #[serde(rename = "wang_sun_det")]
    WangSunDet,
    #[serde(rename = "sun_congruence")]
    SunCongruence,
}

impl IdentityId {
    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::Theorem1 => "theorem1",
            IdentityId::Vanishing => "vanishing",
            IdentityId::Theorem2 => "theorem2",
            IdentityId::Recurrence => "recurrence",
            IdentityId::PerA => "perA",
            IdentityId::Theorem3PerDet => "theorem3_per_det",
            IdentityId::EvenCycleExpansion => "even_cycle_expansion",
            IdentityId::CycloEven => "cyclo_even",
            IdentityId::CycloOdd => "cyclo_odd",
            IdentityId::CycleLemma => "cycle_lemma",
            IdentityId::DerangementSums => "derangement_sums",
            IdentityId::WangSunDet => "wang_sun_det",
            IdentityId::SunCongruence => "sun_congruence",
        }
    }

    /// Tag mixed into per-trial RNG seeds.
    pub(crate) fn stream_tag(self) -> u64 {
        self as u64 + 1
    }
}

impl Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one exact comparison. `status` is `Pass` exactly when the
/// canonical texts of both sides coincide.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictRecord {
    pub identity: IdentityId,
    pub n: u64,
    pub seed: Option<u64>,
    pub trial: u64,
    /// Distinguishes several comparisons made for the same `(identity, n, trial)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
    pub lhs: String,
    pub rhs: String,
    pub status: Status,
    pub elapsed_ms: u64,
}

impl VerdictRecord {
    pub(crate) fn compare(
        identity: IdentityId,
        n: usize,
        seed: Option<u64>,
        trial: usize,
        lhs: &impl Display,
        rhs: &impl Display,
        started: Instant,
    ) -> Self {
        let lhs = lhs.to_string();
        let rhs = rhs.to_string();
        let status = if lhs == rhs { Status::Pass } else { Status::Fail };
        VerdictRecord {
            identity,
            n: n as u64,
            seed,
            trial: trial as u64,
            case: None,
            lhs,
            rhs,
            status,
            elapsed_ms: started.elapsed().as_millis() as u64,
        }
    }

    pub(crate) fn with_case(mut self, case: &str) -> Self {
        self.case = Some(case.to_owned());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("verdict records always serialize")
    }

    /// The JSON line with `elapsed_ms` zeroed, for determinism comparisons.
    pub fn to_json_line_untimed(&self) -> String {
        VerdictRecord {
            elapsed_ms: 0,
            ..self.clone()
        }
        .to_json_line()
    }

    pub fn to_human_line(&self) -> String {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        let mut line = format!("{status} {} n={} trial={}", self.identity, self.n, self.trial);
        if let Some(case) = &self.case {
            line.push_str(&format!(" case={case}"));
        }
        line.push_str(&format!(" lhs={} rhs={} ({} ms)", self.lhs, self.rhs, self.elapsed_ms));
        line
    }
}
