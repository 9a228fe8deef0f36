//! The scenario document: a JSON object with keys `schema_version`, `label`,
//! `country`, `orientation` and `assets`.
//!
//! Scale terms accept codes or long names on input; the canonical form written
//! by [`save_scenario`] always uses codes.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Number;

use super::{Scenario, Violation, WorkbenchError};
use crate::prioritization::{AssetAssessment, GoalArea, Weakness};
use crate::risk_position::{
    AdverseExposureLevel, AreaRating, CountryProfile, Orientation, ReadinessProfile, SeiLevel,
    Weights,
};
use crate::scales::{parse_term, LinguisticTerm};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, Default)]
pub struct LoadOptions {
    /// Rescale weights that do not sum to 1 instead of rejecting them.
    pub normalize_weights: bool,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioDoc {
    schema_version: Number,
    label: String,
    country: CountryDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    orientation: Option<String>,
    #[serde(default)]
    assets: Vec<AssetDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CountryDoc {
    name: String,
    sei: Number,
    readiness: ReadinessDoc,
    adverse: Number,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<f64>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ReadinessDoc {
    homeland_security: String,
    business_continuity: String,
    disaster_recovery: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AssetDoc {
    id: String,
    #[serde(default)]
    name: String,
    goal_area: String,
    threat: String,
    impact: String,
    weakness: Number,
}

pub fn load_scenario(path: impl AsRef<Path>) -> Result<Scenario, WorkbenchError> {
    load_scenario_with(path, &LoadOptions::default())
}

pub fn load_scenario_with(
    path: impl AsRef<Path>,
    options: &LoadOptions,
) -> Result<Scenario, WorkbenchError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| WorkbenchError::io(path, e))?;
    parse_scenario_with(&text, options)
}

pub fn parse_scenario(text: &str) -> Result<Scenario, WorkbenchError> {
    parse_scenario_with(text, &LoadOptions::default())
}

pub fn parse_scenario_with(text: &str, options: &LoadOptions) -> Result<Scenario, WorkbenchError> {
    let doc: ScenarioDoc = serde_json::from_str(text).map_err(|e| WorkbenchError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let mut v = Vec::new();
    let scenario = convert(doc, options, &mut v);
    match scenario {
        Some(s) if v.is_empty() => {
            let extra = s.violations();
            if extra.is_empty() {
                Ok(s)
            } else {
                Err(WorkbenchError::Validation(extra))
            }
        }
        Some(s) => {
            v.extend(s.violations());
            Err(WorkbenchError::Validation(v))
        }
        None => Err(WorkbenchError::Validation(v)),
    }
}

/// Collects every violation it can find; returns a scenario only when all
/// fields converted.
fn convert(doc: ScenarioDoc, options: &LoadOptions, v: &mut Vec<Violation>) -> Option<Scenario> {
    let schema_version = doc
        .schema_version
        .as_u64()
        .and_then(|n| u32::try_from(n).ok());
    if schema_version.is_none() {
        v.push(Violation::new(
            "schema_version",
            format!(
                "expected a nonnegative integer, found {}",
                doc.schema_version
            ),
        ));
    }

    let orientation = match doc.orientation.as_deref() {
        None => Some(Orientation::default()),
        Some(text) => text
            .parse::<Orientation>()
            .map_err(|e| v.push(Violation::new("orientation", e.to_string())))
            .ok(),
    };

    let country = convert_country(doc.country, options, v);

    let assets: Vec<Option<AssetAssessment>> = doc
        .assets
        .into_iter()
        .enumerate()
        .map(|(i, a)| convert_asset(i, a, v))
        .collect();

    let assets: Option<Vec<AssetAssessment>> = assets.into_iter().collect();
    Some(Scenario {
        schema_version: schema_version?,
        label: doc.label,
        country: country?,
        orientation: orientation?,
        assets: assets?,
    })
}

fn convert_country(
    doc: CountryDoc,
    options: &LoadOptions,
    v: &mut Vec<Violation>,
) -> Option<CountryProfile> {
    let sei = integer(&doc.sei, "country.sei", v).and_then(|n| {
        SeiLevel::new(n)
            .map_err(|e| v.push(Violation::new("country.sei", e.to_string())))
            .ok()
    });
    let adverse = integer(&doc.adverse, "country.adverse", v).and_then(|n| {
        AdverseExposureLevel::new(n)
            .map_err(|e| v.push(Violation::new("country.adverse", e.to_string())))
            .ok()
    });

    let mut rating = |text: &str, field: &str| {
        text.parse::<AreaRating>()
            .map_err(|e| {
                v.push(Violation::new(
                    format!("country.readiness.{field}"),
                    e.to_string(),
                ))
            })
            .ok()
    };
    let homeland = rating(&doc.readiness.homeland_security, "homeland_security");
    let continuity = rating(&doc.readiness.business_continuity, "business_continuity");
    let recovery = rating(&doc.readiness.disaster_recovery, "disaster_recovery");

    let weights = match doc.weights.as_deref() {
        None => Some(Weights::default()),
        Some(&[a, b, c]) => {
            let built = if options.normalize_weights {
                Weights::normalized(a, b, c)
            } else {
                Weights::new(a, b, c)
            };
            built
                .map_err(|e| v.push(Violation::new("country.weights", e.to_string())))
                .ok()
        }
        Some(other) => {
            v.push(Violation::new(
                "country.weights",
                format!("expected exactly three weights, found {}", other.len()),
            ));
            None
        }
    };

    if doc.name.trim().is_empty() {
        v.push(Violation::new(
            "country.name",
            "country name must not be empty",
        ));
        return None;
    }
    let readiness = ReadinessProfile::new(homeland?, continuity?, recovery?);
    CountryProfile::new(doc.name, sei?, readiness, adverse?, weights?).ok()
}

fn convert_asset(index: usize, doc: AssetDoc, v: &mut Vec<Violation>) -> Option<AssetAssessment> {
    let prefix = format!("assets[{index}]");
    let mut term = |text: &str, field: &str| -> Option<LinguisticTerm> {
        parse_term(text)
            .map_err(|e| v.push(Violation::new(format!("{prefix}.{field}"), e.to_string())))
            .ok()
    };
    let threat = term(&doc.threat, "threat");
    let impact = term(&doc.impact, "impact");
    let goal_area = doc
        .goal_area
        .parse::<GoalArea>()
        .map_err(|e| v.push(Violation::new(format!("{prefix}.goal_area"), e.to_string())))
        .ok();
    let weakness_field = format!("{prefix}.weakness");
    let weakness = match doc.weakness.as_i64() {
        Some(n) => Weakness::new(n)
            .map_err(|e| v.push(Violation::new(&weakness_field, e.to_string())))
            .ok(),
        None => {
            v.push(Violation::new(
                &weakness_field,
                format!(
                    "weakness out of range: {} (expected an integer point 1..=5)",
                    doc.weakness
                ),
            ));
            None
        }
    };
    Some(AssetAssessment {
        id: doc.id,
        name: doc.name,
        goal_area: goal_area?,
        threat: threat?,
        impact: impact?,
        weakness: weakness?,
    })
}

fn integer(n: &Number, field: &str, v: &mut Vec<Violation>) -> Option<i64> {
    let out = n.as_i64();
    if out.is_none() {
        v.push(Violation::new(
            field,
            format!("expected an integer, found {n}"),
        ));
    }
    out
}

fn to_doc(s: &Scenario) -> ScenarioDoc {
    let c = &s.country;
    ScenarioDoc {
        schema_version: Number::from(s.schema_version),
        label: s.label.clone(),
        country: CountryDoc {
            name: c.name().to_string(),
            sei: Number::from(c.sei.level()),
            readiness: ReadinessDoc {
                homeland_security: c.readiness.homeland_security.as_str().to_string(),
                business_continuity: c.readiness.business_continuity.as_str().to_string(),
                disaster_recovery: c.readiness.disaster_recovery.as_str().to_string(),
            },
            adverse: Number::from(c.adverse.level()),
            weights: Some(c.weights.as_array().to_vec()),
        },
        orientation: Some(s.orientation.as_str().to_string()),
        assets: s
            .assets
            .iter()
            .map(|a| AssetDoc {
                id: a.id.clone(),
                name: a.name.clone(),
                goal_area: a.goal_area.as_str().to_string(),
                threat: a.threat.code().to_string(),
                impact: a.impact.code().to_string(),
                weakness: Number::from(a.weakness.point()),
            })
            .collect(),
    }
}

/// Canonical document text, newline-terminated.
pub fn scenario_to_string(s: &Scenario) -> String {
    let mut text = serde_json::to_string_pretty(&to_doc(s)).expect("scenario document serializes");
    text.push('\n');
    text
}

pub fn save_scenario(s: &Scenario, path: impl AsRef<Path>) -> Result<(), WorkbenchError> {
    let path = path.as_ref();
    fs::write(path, scenario_to_string(s)).map_err(|e| WorkbenchError::io(path, e))
}
