use serde::{Deserialize, Serialize};

use super::{Scenario, WorkbenchError};
use crate::prioritization::{prioritize, GoalArea};
use crate::risk_position::{
    classify_readiness, component_scores, risk_position, AreaRating, Components, Orientation,
};
use crate::scales::LinguisticTerm;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Levels {
    pub sei: u8,
    pub sei_descriptor: String,
    pub homeland_security: AreaRating,
    pub business_continuity: AreaRating,
    pub disaster_recovery: AreaRating,
    pub readiness: u8,
    pub adverse: u8,
    pub adverse_descriptor: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub rank: usize,
    pub id: String,
    pub name: String,
    pub goal_area: GoalArea,
    pub threat: LinguisticTerm,
    pub impact: LinguisticTerm,
    pub risk: f64,
    pub weakness: u8,
    pub priority: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GoalAreaSection {
    pub goal_area: GoalArea,
    pub title: String,
    pub rows: Vec<ReportRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AssessmentReport {
    pub label: String,
    pub country: String,
    pub orientation: Orientation,
    pub levels: Levels,
    pub components: Components,
    pub weights: [f64; 3],
    pub risk_position: f64,
    pub priority_vector: Vec<ReportRow>,
    /// One section per strategic goal area, always all three, in fixed order.
    pub goal_areas: Vec<GoalAreaSection>,
}

pub fn run_report(s: &Scenario) -> Result<AssessmentReport, WorkbenchError> {
    let country = &s.country;
    let components = component_scores(country, s.orientation);
    let position = risk_position(&components, &country.weights)?;
    let vector = prioritize(&s.assets)?;

    let rows: Vec<ReportRow> = vector
        .entries()
        .iter()
        .enumerate()
        .map(|(i, entry)| {
            let asset = s
                .assets
                .iter()
                .find(|a| a.id == entry.asset_id)
                .expect("priority vector ids come from the scenario");
            ReportRow {
                rank: i + 1,
                id: asset.id.clone(),
                name: asset.name.clone(),
                goal_area: asset.goal_area,
                threat: asset.threat,
                impact: asset.impact,
                risk: entry.risk.value(),
                weakness: entry.weakness.point(),
                priority: entry.priority.value(),
            }
        })
        .collect();

    let goal_areas = GoalArea::ALL
        .into_iter()
        .map(|area| GoalAreaSection {
            goal_area: area,
            title: area.title().to_string(),
            rows: rows
                .iter()
                .filter(|r| r.goal_area == area)
                .cloned()
                .collect(),
        })
        .collect();

    Ok(AssessmentReport {
        label: s.label.clone(),
        country: country.name().to_string(),
        orientation: s.orientation,
        levels: Levels {
            sei: country.sei.level(),
            sei_descriptor: country.sei.descriptor().to_string(),
            homeland_security: country.readiness.homeland_security,
            business_continuity: country.readiness.business_continuity,
            disaster_recovery: country.readiness.disaster_recovery,
            readiness: classify_readiness(&country.readiness),
            adverse: country.adverse.level(),
            adverse_descriptor: country.adverse.descriptor().to_string(),
        },
        components,
        weights: country.weights.as_array(),
        risk_position: position,
        priority_vector: rows,
        goal_areas,
    })
}

/// Left-aligned first columns, right-aligned numeric columns, two-space gutters.
fn render_table(out: &mut String, headers: &[&str], right: &[bool], rows: &[Vec<String>]) {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut line = |cells: Vec<&str>| {
        let mut text = String::new();
        for ((cell, w), r) in cells.iter().zip(&widths).zip(right) {
            text.push_str("  ");
            if *r {
                text.push_str(&format!("{cell:>w$}"));
            } else {
                text.push_str(&format!("{cell:<w$}"));
            }
        }
        out.push_str(text.trim_end());
        out.push('\n');
    };
    line(headers.to_vec());
    for row in rows {
        line(row.iter().map(String::as_str).collect());
    }
}

const PRIORITY_HEADERS: [&str; 9] = [
    "Rank",
    "Id",
    "Name",
    "Goal area",
    "Threat",
    "Impact",
    "Risk",
    "Weakness",
    "Priority",
];
const PRIORITY_RIGHT: [bool; 9] = [true, false, false, false, false, false, true, true, true];

fn priority_rows(rows: &[ReportRow]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| {
            vec![
                r.rank.to_string(),
                r.id.clone(),
                r.name.clone(),
                r.goal_area.to_string(),
                r.threat.to_string(),
                r.impact.to_string(),
                format!("{:.1}", r.risk),
                format!("{:.1}", f64::from(r.weakness)),
                format!("{:.1}", r.priority),
            ]
        })
        .collect()
}

fn render_priority_table(out: &mut String, rows: &[ReportRow]) {
    if rows.is_empty() {
        out.push_str("  (no assets)\n");
    } else {
        render_table(
            out,
            &PRIORITY_HEADERS,
            &PRIORITY_RIGHT,
            &priority_rows(rows),
        );
    }
}

pub fn render_priority_text(report: &AssessmentReport) -> String {
    let mut out = String::from("Priority vector\n");
    render_priority_table(&mut out, &report.priority_vector);
    out
}

pub fn render_report_text(report: &AssessmentReport) -> String {
    let mut out = String::new();
    let title = format!("Assessment report: {}", report.label);
    out.push_str(&title);
    out.push('\n');
    out.push_str(&"=".repeat(title.chars().count()));
    out.push_str("\n\n");
    out.push_str(&format!("Country:     {}\n", report.country));
    out.push_str(&format!("Orientation: {}\n\n", report.orientation));

    let l = &report.levels;
    let c = &report.components;
    out.push_str("Risk position\n");
    let readiness_note = format!(
        "homeland security {}, business continuity {}, disaster recovery {}",
        l.homeland_security, l.business_continuity, l.disaster_recovery
    );
    let component_rows = vec![
        vec![
            "SEI position".into(),
            l.sei.to_string(),
            format!("{:.1}", c.sei),
            format!("{:.4}", report.weights[0]),
            l.sei_descriptor.clone(),
        ],
        vec![
            "Unreadiness".into(),
            l.readiness.to_string(),
            format!("{:.1}", c.readiness),
            format!("{:.4}", report.weights[1]),
            readiness_note,
        ],
        vec![
            "Adverse exposure".into(),
            l.adverse.to_string(),
            format!("{:.1}", c.adverse),
            format!("{:.4}", report.weights[2]),
            l.adverse_descriptor.clone(),
        ],
    ];
    render_table(
        &mut out,
        &["Component", "Level", "Score", "Weight", "Basis"],
        &[false, true, true, true, false],
        &component_rows,
    );
    out.push_str(&format!("  Risk position: {:.4}\n\n", report.risk_position));

    out.push_str(&render_priority_text(report));

    for section in &report.goal_areas {
        out.push('\n');
        out.push_str(&format!("Goal area: {}\n", section.title));
        render_priority_table(&mut out, &section.rows);
    }
    out
}

pub fn render_report_structured(report: &AssessmentReport) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("report serializes");
    text.push('\n');
    text
}

pub fn render_priority_structured(report: &AssessmentReport) -> String {
    let mut text = serde_json::to_string_pretty(&report.priority_vector).expect("rows serialize");
    text.push('\n');
    text
}

pub fn parse_report(text: &str) -> Result<AssessmentReport, WorkbenchError> {
    serde_json::from_str(text).map_err(|e| WorkbenchError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}
