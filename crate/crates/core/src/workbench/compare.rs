use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::{Scenario, WorkbenchError};
use crate::prioritization::prioritize;
use crate::risk_position::country_risk;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankChange {
    pub id: String,
    pub old_rank: usize,
    pub new_rank: usize,
    /// `old_rank - new_rank`; positive means the asset moved up.
    pub change: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScenarioDelta {
    pub old_label: String,
    pub new_label: String,
    pub old_risk_position: f64,
    pub new_risk_position: f64,
    /// new minus old
    pub risk_delta: f64,
    /// Assets present in both scenarios, in new-rank order.
    pub moved: Vec<RankChange>,
    pub added: Vec<String>,
    pub removed: Vec<String>,
}

impl ScenarioDelta {
    pub fn is_zero(&self) -> bool {
        self.risk_delta == 0.0
            && self.added.is_empty()
            && self.removed.is_empty()
            && self.moved.iter().all(|m| m.change == 0)
    }
}

pub fn compare_scenarios(a: &Scenario, b: &Scenario) -> Result<ScenarioDelta, WorkbenchError> {
    let old_risk = country_risk(&a.country, a.orientation)?;
    let new_risk = country_risk(&b.country, b.orientation)?;
    let old_vec = prioritize(&a.assets)?;
    let new_vec = prioritize(&b.assets)?;

    let old_ids: HashSet<&str> = old_vec.ids().collect();
    let new_ids: HashSet<&str> = new_vec.ids().collect();

    let moved = new_vec
        .ids()
        .enumerate()
        .filter_map(|(i, id)| {
            let old_rank = old_vec.rank_of(id)?;
            let new_rank = i + 1;
            Some(RankChange {
                id: id.to_string(),
                old_rank,
                new_rank,
                change: old_rank as i64 - new_rank as i64,
            })
        })
        .collect();

    let mut added: Vec<String> = new_ids
        .difference(&old_ids)
        .map(|s| s.to_string())
        .collect();
    let mut removed: Vec<String> = old_ids
        .difference(&new_ids)
        .map(|s| s.to_string())
        .collect();
    added.sort();
    removed.sort();

    Ok(ScenarioDelta {
        old_label: a.label.clone(),
        new_label: b.label.clone(),
        old_risk_position: old_risk,
        new_risk_position: new_risk,
        risk_delta: new_risk - old_risk,
        moved,
        added,
        removed,
    })
}

pub fn render_delta_text(delta: &ScenarioDelta) -> String {
    let mut out = format!("Comparison: {} -> {}\n\n", delta.old_label, delta.new_label);
    out.push_str(&format!(
        "Risk position: {:.4} -> {:.4} (delta {:+.4})\n\n",
        delta.old_risk_position, delta.new_risk_position, delta.risk_delta
    ));
    out.push_str("Rank changes\n");
    if delta.moved.is_empty() {
        out.push_str("  (none)\n");
    } else {
        let width = delta
            .moved
            .iter()
            .map(|m| m.id.len())
            .max()
            .unwrap_or(0)
            .max(2);
        out.push_str(&format!(
            "  {:<width$}  {:>3}  {:>3}  {:>6}\n",
            "Id", "Old", "New", "Change"
        ));
        for m in &delta.moved {
            out.push_str(&format!(
                "  {:<width$}  {:>3}  {:>3}  {:>+6}\n",
                m.id, m.old_rank, m.new_rank, m.change
            ));
        }
    }
    for (title, ids) in [("Added", &delta.added), ("Removed", &delta.removed)] {
        out.push_str(&format!("\n{title}\n"));
        if ids.is_empty() {
            out.push_str("  (none)\n");
        }
        for id in ids.iter() {
            out.push_str(&format!("  {id}\n"));
        }
    }
    out
}
