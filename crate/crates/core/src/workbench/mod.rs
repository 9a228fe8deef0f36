//! Assessment documents, reports, scenario comparison and the run store.

mod compare;
mod document;
mod report;
mod store;

use std::fmt;
use std::io;
use std::path::PathBuf;

use thiserror::Error;

use crate::prioritization::{AssetAssessment, PrioritizeError};
use crate::risk_position::{CountryProfile, Orientation, RiskError};

pub use compare::{compare_scenarios, render_delta_text, RankChange, ScenarioDelta};
pub use document::{
    load_scenario, load_scenario_with, parse_scenario, parse_scenario_with, save_scenario,
    scenario_to_string, LoadOptions, SCHEMA_VERSION,
};
pub use report::{
    parse_report, render_priority_structured, render_priority_text, render_report_structured,
    render_report_text, run_report, AssessmentReport, GoalAreaSection, Levels, ReportRow,
};
pub use store::{list_runs, store_run, RunId, RunStore, StoreGuard, RUNS_DIR};

/// One violated invariant of a scenario document, with the offending field path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub field: String,
    pub message: String,
}

impl Violation {
    pub fn new(field: impl Into<String>, message: impl Into<String>) -> Violation {
        Violation {
            field: field.into(),
            message: message.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.field, self.message)
    }
}

#[derive(Debug, Error)]
pub enum WorkbenchError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid scenario: {}", join_violations(.0))]
    Validation(Vec<Violation>),
    #[error("{}: {source}", .path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("store {} is locked by another writer", .0.display())]
    StoreLocked(PathBuf),
    #[error(transparent)]
    Risk(#[from] RiskError),
    #[error(transparent)]
    Prioritize(#[from] PrioritizeError),
}

impl WorkbenchError {
    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> WorkbenchError {
        WorkbenchError::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code: 1 for parse and validation problems, 2 for I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            WorkbenchError::Io { .. } | WorkbenchError::StoreLocked(_) => 2,
            _ => 1,
        }
    }

    pub fn violations(&self) -> &[Violation] {
        match self {
            WorkbenchError::Validation(v) => v,
            _ => &[],
        }
    }
}

fn join_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(Violation::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub schema_version: u32,
    pub label: String,
    pub country: CountryProfile,
    pub orientation: Orientation,
    pub assets: Vec<AssetAssessment>,
}

impl Scenario {
    /// Invariants not already carried by the field types.
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.schema_version != SCHEMA_VERSION {
            out.push(Violation::new(
                "schema_version",
                format!(
                    "unsupported schema version {} (expected {SCHEMA_VERSION})",
                    self.schema_version
                ),
            ));
        }
        let mut seen = std::collections::HashSet::new();
        for (i, asset) in self.assets.iter().enumerate() {
            if asset.id.trim().is_empty() {
                out.push(Violation::new(
                    format!("assets[{i}].id"),
                    "asset id must not be empty",
                ));
            } else if !seen.insert(asset.id.as_str()) {
                out.push(Violation::new(
                    format!("assets[{i}].id"),
                    format!("duplicate asset id {:?}", asset.id),
                ));
            }
        }
        out
    }
}
