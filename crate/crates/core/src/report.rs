//! Versioned JSON reports shared by every check.

use serde::Serialize;

pub const SCHEMA: &str = "stressca/1";

/// Outcome of a theorem check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Hypotheses hold and the conclusion was confirmed.
    Verified,
    /// Some hypothesis fails; the conclusion is reported but not claimed.
    HypothesesNotMet,
    /// Hypotheses hold but the conclusion fails.
    Violated,
    /// The input is outside the scope of the statement.
    NotApplicable,
    /// A search ran out of budget before deciding.
    Inconclusive,
}

impl Verdict {
    /// Process exit code: 0 for verified, 1 otherwise.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Verified => 0,
            _ => 1,
        }
    }

    /// Verified when `hypotheses` and `conclusion` hold, and the appropriate
    /// failure otherwise.
    pub fn from_checks(hypotheses: bool, conclusion: bool) -> Verdict {
        match (hypotheses, conclusion) {
            (false, _) => Verdict::HypothesesNotMet,
            (true, true) => Verdict::Verified,
            (true, false) => Verdict::Violated,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub name: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Hypothesis {
    pub fn new(name: impl Into<String>, holds: bool) -> Self {
        Hypothesis { name: name.into(), holds, detail: None }
    }

    pub fn with_detail(name: impl Into<String>, holds: bool, detail: impl Into<String>) -> Self {
        Hypothesis { name: name.into(), holds, detail: Some(detail.into()) }
    }
}

/// `{"schema", "theorem", "hypotheses", "verdict", "witness", "ranks"}`.
///
/// Field order is fixed and all maps inside `witness` and `ranks` are sorted,
/// so equal inputs give byte-identical output.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub theorem: String,
    pub hypotheses: Vec<Hypothesis>,
    pub verdict: Verdict,
    pub witness: serde_json::Value,
    pub ranks: serde_json::Value,
}

impl Report {
    pub fn new(
        theorem: impl Into<String>,
        hypotheses: Vec<Hypothesis>,
        verdict: Verdict,
        witness: impl Serialize,
        ranks: impl Serialize,
    ) -> Self {
        Report {
            schema: SCHEMA,
            theorem: theorem.into(),
            hypotheses,
            verdict,
            witness: serde_json::to_value(witness).expect("witness serializes"),
            ranks: serde_json::to_value(ranks).expect("ranks serialize"),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Results that render as a [`Report`].
pub trait Certificate {
    fn report(&self) -> Report;

    fn verdict(&self) -> Verdict {
        self.report().verdict
    }
}
