//! Asset prioritization: risk from threat and business impact, priority as
//! risk times control weakness, and the descending priority vector.

use std::cmp::Reverse;
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fusion::fuse_quant;
use crate::scales::{write_half_units, LinguisticTerm, Score};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrioritizeError {
    #[error("weakness out of range: {0} (expected an integer point 1..=5)")]
    WeaknessOutOfRange(i64),
    #[error("duplicate asset id {0:?}")]
    DuplicateAssetId(String),
    #[error("asset id must not be empty")]
    EmptyAssetId,
    #[error("unknown goal area {0:?}; expected business_continuity, disaster_recovery or homeland_security")]
    UnknownGoalArea(String),
}

/// The strategic goal an asset's protection serves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GoalArea {
    BusinessContinuity,
    DisasterRecovery,
    HomelandSecurity,
}

impl GoalArea {
    pub const ALL: [GoalArea; 3] = [
        GoalArea::BusinessContinuity,
        GoalArea::DisasterRecovery,
        GoalArea::HomelandSecurity,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GoalArea::BusinessContinuity => "business_continuity",
            GoalArea::DisasterRecovery => "disaster_recovery",
            GoalArea::HomelandSecurity => "homeland_security",
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            GoalArea::BusinessContinuity => "Business continuity",
            GoalArea::DisasterRecovery => "Disaster recovery",
            GoalArea::HomelandSecurity => "Homeland security",
        }
    }
}

impl fmt::Display for GoalArea {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl FromStr for GoalArea {
    type Err = PrioritizeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let normalized: String = s
            .trim()
            .chars()
            .map(|c| {
                if c == ' ' || c == '-' {
                    '_'
                } else {
                    c.to_ascii_lowercase()
                }
            })
            .collect();
        GoalArea::ALL
            .into_iter()
            .find(|g| g.as_str() == normalized)
            .ok_or_else(|| PrioritizeError::UnknownGoalArea(s.to_string()))
    }
}

/// Weakness of the controls currently protecting an asset, an integer point 1..=5.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weakness(u8);

impl Weakness {
    pub fn new(point: i64) -> Result<Weakness, PrioritizeError> {
        if (1..=5).contains(&point) {
            Ok(Weakness(point as u8))
        } else {
            Err(PrioritizeError::WeaknessOutOfRange(point))
        }
    }

    pub fn point(self) -> u8 {
        self.0
    }
}

impl fmt::Display for Weakness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_half_units(f, u32::from(self.0) * 2)
    }
}

/// `risk * weakness`, exact on the half-step grid `1.0 ..= 25.0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Priority(u8);

impl Priority {
    pub fn half_units(self) -> u8 {
        self.0
    }

    pub fn value(self) -> f64 {
        f64::from(self.0) / 2.0
    }
}

impl fmt::Display for Priority {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_half_units(f, u32::from(self.0))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssetAssessment {
    pub id: String,
    pub name: String,
    pub goal_area: GoalArea,
    pub threat: LinguisticTerm,
    pub impact: LinguisticTerm,
    pub weakness: Weakness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PriorityEntry {
    pub asset_id: String,
    pub risk: Score,
    pub weakness: Weakness,
    pub priority: Priority,
}

/// Entries in descending priority, ties in ascending asset id.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PriorityVector {
    entries: Vec<PriorityEntry>,
}

impl PriorityVector {
    pub fn entries(&self) -> &[PriorityEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// 1-based rank of an asset.
    pub fn rank_of(&self, asset_id: &str) -> Option<usize> {
        self.entries
            .iter()
            .position(|e| e.asset_id == asset_id)
            .map(|i| i + 1)
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|e| e.asset_id.as_str())
    }
}

pub fn asset_risk(threat: LinguisticTerm, impact: LinguisticTerm) -> Score {
    fuse_quant(threat, impact)
}

pub fn asset_priority(risk: Score, weakness: Weakness) -> Priority {
    Priority(risk.half_units() * weakness.point())
}

/// Checked variant taking a raw weakness point.
pub fn asset_priority_checked(risk: Score, weakness: i64) -> Result<Priority, PrioritizeError> {
    Weakness::new(weakness).map(|w| asset_priority(risk, w))
}

pub fn prioritize(assets: &[AssetAssessment]) -> Result<PriorityVector, PrioritizeError> {
    let mut seen = HashSet::with_capacity(assets.len());
    for asset in assets {
        if asset.id.is_empty() {
            return Err(PrioritizeError::EmptyAssetId);
        }
        if !seen.insert(asset.id.as_str()) {
            return Err(PrioritizeError::DuplicateAssetId(asset.id.clone()));
        }
    }

    let mut entries: Vec<PriorityEntry> = assets
        .iter()
        .map(|asset| {
            let risk = asset_risk(asset.threat, asset.impact);
            PriorityEntry {
                asset_id: asset.id.clone(),
                risk,
                weakness: asset.weakness,
                priority: asset_priority(risk, asset.weakness),
            }
        })
        .collect();
    // ids are unique, so this key is a total order
    entries.sort_unstable_by(|a, b| {
        (Reverse(a.priority), &a.asset_id).cmp(&(Reverse(b.priority), &b.asset_id))
    });
    Ok(PriorityVector { entries })
}
