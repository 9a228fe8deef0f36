//! Helpers shared by the integration test targets: independent oracles,
//! the printed fusion tables, random scenario generation and golden files.
#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};

use rand::seq::SliceRandom;
use rand::Rng;

use riskpos::prioritization::{AssetAssessment, GoalArea, Weakness};
use riskpos::risk_position::{
    AdverseExposureLevel, AreaRating, CountryProfile, Orientation, ReadinessProfile, SeiLevel,
    Weights,
};
use riskpos::scales::LinguisticTerm;
use riskpos::workbench::{Scenario, SCHEMA_VERSION};

/// Row/column order of the printed tables.
pub const TERMS: [&str; 5] = ["V", "L", "M", "H", "X"];

/// The linguistic fused-scale table, transcribed cell by cell.
pub const LINGUISTIC_TABLE: [[&str; 5]; 5] = [
    ["V", "VL", "L", "LM", "M"],
    ["VL", "L", "LM", "M", "MH"],
    ["L", "LM", "M", "MH", "H"],
    ["LM", "M", "MH", "H", "HX"],
    ["M", "MH", "H", "HX", "X"],
];

/// The quantitative fused-scale table, transcribed cell by cell.
pub const QUANTITATIVE_TABLE: [[f64; 5]; 5] = [
    [1.0, 1.5, 2.0, 2.5, 3.0],
    [1.5, 2.0, 2.5, 3.0, 3.5],
    [2.0, 2.5, 3.0, 3.5, 4.0],
    [2.5, 3.0, 3.5, 4.0, 4.5],
    [3.0, 3.5, 4.0, 4.5, 5.0],
];

/// Fused-term score by position on the nine-point scale.
pub fn fused_code_value(code: &str) -> f64 {
    let order = ["V", "VL", "L", "LM", "M", "MH", "H", "HX", "X"];
    let pos = order
        .iter()
        .position(|c| *c == code)
        .expect("known fused code");
    1.0 + 0.5 * pos as f64
}

pub fn term_points(t: LinguisticTerm) -> f64 {
    match t {
        LinguisticTerm::V => 1.0,
        LinguisticTerm::L => 2.0,
        LinguisticTerm::M => 3.0,
        LinguisticTerm::H => 4.0,
        LinguisticTerm::X => 5.0,
    }
}

/// Priority computed in plain floating point; every value is a multiple of
/// 0.5 below 32, so it is exact.
pub fn oracle_priority(a: &AssetAssessment) -> f64 {
    (term_points(a.threat) + term_points(a.impact)) / 2.0 * f64::from(a.weakness.point())
}

/// Reference ordering: each asset's rank is the number of assets that beat it
/// under (priority desc, id asc), found by comparing every pair.
pub fn brute_force_order(assets: &[AssetAssessment]) -> Vec<String> {
    let priorities: Vec<f64> = assets.iter().map(oracle_priority).collect();
    let mut slots: Vec<Option<String>> = vec![None; assets.len()];
    for (i, a) in assets.iter().enumerate() {
        let mut beaten_by = 0;
        for (j, b) in assets.iter().enumerate() {
            if i != j
                && (priorities[j] > priorities[i]
                    || (priorities[j] == priorities[i] && b.id < a.id))
            {
                beaten_by += 1;
            }
        }
        assert!(
            slots[beaten_by].is_none(),
            "reference ranks must be distinct"
        );
        slots[beaten_by] = Some(a.id.clone());
    }
    slots
        .into_iter()
        .map(|s| s.expect("every rank filled"))
        .collect()
}

/// Weighted sum accumulated back to front.
pub fn oracle_weighted_sum(components: [f64; 3], weights: [f64; 3]) -> f64 {
    let mut total = 0.0;
    for k in (0..3).rev() {
        total += weights[k] * components[k];
    }
    total
}

pub fn random_term(rng: &mut impl Rng) -> LinguisticTerm {
    *LinguisticTerm::ALL.choose(rng).unwrap()
}

pub fn random_asset(rng: &mut impl Rng, id: String) -> AssetAssessment {
    AssetAssessment {
        name: format!("asset {id}"),
        id,
        goal_area: *GoalArea::ALL.choose(rng).unwrap(),
        threat: random_term(rng),
        impact: random_term(rng),
        weakness: Weakness::new(rng.gen_range(1..=5)).unwrap(),
    }
}

/// `count` assets with unique ids drawn from a small alphabet so that equal
/// priorities and lexicographic tie-breaks are common.
pub fn random_assets(rng: &mut impl Rng, count: usize) -> Vec<AssetAssessment> {
    let mut ids: Vec<String> = (0..count)
        .map(|i| format!("{}{i}", ["a", "b", "db", "A"][i % 4]))
        .collect();
    ids.shuffle(rng);
    ids.into_iter().map(|id| random_asset(rng, id)).collect()
}

pub fn random_weights(rng: &mut impl Rng) -> Weights {
    loop {
        let raw: [f64; 3] = [
            rng.gen_range(0.0..1.0),
            rng.gen_range(0.0..1.0),
            rng.gen_range(0.0..1.0),
        ];
        if let Ok(w) = Weights::normalized(raw[0], raw[1], raw[2]) {
            return w;
        }
    }
}

pub fn random_scenario(rng: &mut impl Rng, max_assets: usize) -> Scenario {
    let labels = [
        "what-if",
        "baseline \"2026\"",
        "Évaluation nationale",
        "tab\tand\nnewline",
        "",
    ];
    let count = rng.gen_range(0..=max_assets);
    Scenario {
        schema_version: SCHEMA_VERSION,
        label: labels.choose(rng).unwrap().to_string(),
        country: CountryProfile::new(
            format!("Country {}", rng.gen_range(0..1000)),
            SeiLevel::new(rng.gen_range(1..=5)).unwrap(),
            ReadinessProfile::new(
                *AreaRating::ALL.choose(rng).unwrap(),
                *AreaRating::ALL.choose(rng).unwrap(),
                *AreaRating::ALL.choose(rng).unwrap(),
            ),
            AdverseExposureLevel::new(rng.gen_range(1..=5)).unwrap(),
            random_weights(rng),
        )
        .unwrap(),
        orientation: if rng.gen_bool(0.5) {
            Orientation::Literal
        } else {
            Orientation::Oriented
        },
        assets: random_assets(rng, count),
    }
}

pub fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn golden_path(name: &str) -> PathBuf {
    fixture("golden").join(name)
}

/// Compares against a golden file; `UPDATE_GOLDEN=1` rewrites it instead.
pub fn check_golden(name: &str, actual: &str) -> Result<(), String> {
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, actual).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if expected == actual {
        return Ok(());
    }
    let first_diff = expected
        .lines()
        .zip(actual.lines())
        .position(|(e, a)| e != a)
        .unwrap_or_else(|| expected.lines().count().min(actual.lines().count()));
    Err(format!(
        "golden file {name} differs at line {}",
        first_diff + 1
    ))
}
