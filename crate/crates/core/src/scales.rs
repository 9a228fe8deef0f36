//! Individual (5-point) and fused (9-point) rating scales.
//!
//! Every scale value is a multiple of one half, so scores are carried as an
//! integer count of half-steps. Equality, ordering and ties are exact.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScaleError {
    #[error("score {0} is not on the half-step grid 1.0, 1.5, ..., 5.0")]
    OffGridScore(f64),
    #[error(
        "unknown term {text:?}; expected one of {}",
        LinguisticTerm::vocabulary()
    )]
    UnknownTerm { text: String },
}

/// A value of the half-step grid `{1.0, 1.5, ..., 5.0}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Score(u8);

impl Score {
    pub const MIN: Score = Score(2);
    pub const MAX: Score = Score(10);

    /// Builds a score from a count of half-steps (2 ..= 10).
    pub fn from_half_units(half_units: u8) -> Option<Score> {
        (Self::MIN.0..=Self::MAX.0)
            .contains(&half_units)
            .then_some(Score(half_units))
    }

    pub fn from_f64(value: f64) -> Result<Score, ScaleError> {
        let doubled = value * 2.0;
        if !doubled.is_finite() || doubled.fract() != 0.0 || !(2.0..=10.0).contains(&doubled) {
            return Err(ScaleError::OffGridScore(value));
        }
        Ok(Score(doubled as u8))
    }

    pub fn half_units(self) -> u8 {
        self.0
    }

    pub fn value(self) -> f64 {
        f64::from(self.0) / 2.0
    }

    /// Every grid point in ascending order.
    pub fn grid() -> impl Iterator<Item = Score> {
        (Self::MIN.0..=Self::MAX.0).map(Score)
    }
}

impl fmt::Display for Score {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_half_units(f, u32::from(self.0))
    }
}

/// Writes `half_units / 2` with exactly one decimal place.
pub(crate) fn write_half_units(f: &mut fmt::Formatter<'_>, half_units: u32) -> fmt::Result {
    let frac = if half_units.is_multiple_of(2) { 0 } else { 5 };
    let text = format!("{}.{}", half_units / 2, frac);
    f.pad(&text)
}

/// A term of the individual 5-point scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum LinguisticTerm {
    V,
    L,
    M,
    H,
    X,
}

impl LinguisticTerm {
    pub const ALL: [LinguisticTerm; 5] = [
        LinguisticTerm::V,
        LinguisticTerm::L,
        LinguisticTerm::M,
        LinguisticTerm::H,
        LinguisticTerm::X,
    ];

    /// Integer score 1..=5.
    pub fn points(self) -> u8 {
        match self {
            LinguisticTerm::V => 1,
            LinguisticTerm::L => 2,
            LinguisticTerm::M => 3,
            LinguisticTerm::H => 4,
            LinguisticTerm::X => 5,
        }
    }

    pub fn from_points(points: u8) -> Option<LinguisticTerm> {
        Self::ALL.get(usize::from(points).checked_sub(1)?).copied()
    }

    pub fn code(self) -> &'static str {
        match self {
            LinguisticTerm::V => "V",
            LinguisticTerm::L => "L",
            LinguisticTerm::M => "M",
            LinguisticTerm::H => "H",
            LinguisticTerm::X => "X",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LinguisticTerm::V => "Very low",
            LinguisticTerm::L => "Low",
            LinguisticTerm::M => "Moderate",
            LinguisticTerm::H => "High",
            LinguisticTerm::X => "Very high",
        }
    }

    /// The same symbol on the fused scale.
    pub fn embed(self) -> FusedTerm {
        match self {
            LinguisticTerm::V => FusedTerm::V,
            LinguisticTerm::L => FusedTerm::L,
            LinguisticTerm::M => FusedTerm::M,
            LinguisticTerm::H => FusedTerm::H,
            LinguisticTerm::X => FusedTerm::X,
        }
    }

    fn vocabulary() -> String {
        Self::ALL
            .iter()
            .map(|t| format!("{} ({})", t.code(), t.name()))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for LinguisticTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.code())
    }
}

impl FromStr for LinguisticTerm {
    type Err = ScaleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_term(s)
    }
}

/// A term of the fused 9-point scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FusedTerm {
    V,
    VL,
    L,
    LM,
    M,
    MH,
    H,
    HX,
    X,
}

impl FusedTerm {
    pub const ALL: [FusedTerm; 9] = [
        FusedTerm::V,
        FusedTerm::VL,
        FusedTerm::L,
        FusedTerm::LM,
        FusedTerm::M,
        FusedTerm::MH,
        FusedTerm::H,
        FusedTerm::HX,
        FusedTerm::X,
    ];

    pub fn code(self) -> &'static str {
        match self {
            FusedTerm::V => "V",
            FusedTerm::VL => "VL",
            FusedTerm::L => "L",
            FusedTerm::LM => "LM",
            FusedTerm::M => "M",
            FusedTerm::MH => "MH",
            FusedTerm::H => "H",
            FusedTerm::HX => "HX",
            FusedTerm::X => "X",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FusedTerm::V => "Very low",
            FusedTerm::VL => "Very low to low",
            FusedTerm::L => "Low",
            FusedTerm::LM => "Low to moderate",
            FusedTerm::M => "Moderate",
            FusedTerm::MH => "Moderate to high",
            FusedTerm::H => "High",
            FusedTerm::HX => "High to very high",
            FusedTerm::X => "Very high",
        }
    }
}

impl fmt::Display for FusedTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.code())
    }
}

pub fn term_score(term: LinguisticTerm) -> Score {
    Score(term.points() * 2)
}

pub fn fused_term_score(term: FusedTerm) -> Score {
    // ALL is in ascending order starting at 1.0 (two half-units)
    let pos = FusedTerm::ALL
        .iter()
        .position(|&t| t == term)
        .unwrap_or_default();
    Score(pos as u8 + 2)
}

pub fn score_to_fused_term(score: Score) -> FusedTerm {
    FusedTerm::ALL[usize::from(score.0 - 2)]
}

/// Inverse of [`fused_term_score`] for a raw numeric value.
pub fn value_to_fused_term(value: f64) -> Result<FusedTerm, ScaleError> {
    Score::from_f64(value).map(score_to_fused_term)
}

/// Parses a letter code (`"H"`) or long name (`"very low"`), ignoring case and
/// surrounding whitespace.
pub fn parse_term(text: &str) -> Result<LinguisticTerm, ScaleError> {
    let needle = text.trim();
    LinguisticTerm::ALL
        .into_iter()
        .find(|t| needle.eq_ignore_ascii_case(t.code()) || needle.eq_ignore_ascii_case(t.name()))
        .ok_or_else(|| ScaleError::UnknownTerm {
            text: text.to_string(),
        })
}
