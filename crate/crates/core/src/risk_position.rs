//! Country risk position: a weighted sum of the security economic intelligence
//! (SEI) position, the readiness level and the adverse-exposure level.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

const WEIGHT_SUM_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RiskError {
    #[error("{what} level {value} out of range 1..=5")]
    LevelOutOfRange { what: &'static str, value: i64 },
    #[error("component {name} = {value} out of range [1, 5]")]
    ComponentOutOfRange { name: &'static str, value: f64 },
    #[error("weight {index} is negative or not finite ({value})")]
    NegativeWeight { index: usize, value: f64 },
    #[error("weights sum to {sum}, not 1")]
    WeightsNotNormalized { sum: f64 },
    #[error("weights sum to zero and cannot be normalized")]
    ZeroWeights,
    #[error("unknown area rating {0:?}; expected very_weak, weak, strong or very_strong")]
    UnknownAreaRating(String),
    #[error("unknown orientation {0:?}; expected literal or oriented")]
    UnknownOrientation(String),
    #[error("country name must not be empty")]
    EmptyCountryName,
}

/// SEI position, 1 (enemy of all SB6 countries) to 5 (one of the SB6).
///
/// Examples per level: 1 Iran; 2 most African countries; 3 Tunisia; 4 Japan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SeiLevel(u8);

impl SeiLevel {
    pub fn new(level: i64) -> Result<SeiLevel, RiskError> {
        checked_level(level, "SEI").map(SeiLevel)
    }

    pub fn level(self) -> u8 {
        self.0
    }

    pub fn descriptor(self) -> &'static str {
        match self.0 {
            1 => "Considered enemy by all SB6 countries",
            2 => "Has no friends among the SB6 countries",
            3 => "Friendly developing countries",
            4 => "Industrial countries not part of the SB6",
            _ => "One of the SB6 countries",
        }
    }
}

/// Adverse exposure, 1 (neutral, no enemies) to 5 (widely considered a terrorist country).
///
/// Examples per level: 1 Vatican, Switzerland; 4 USA, UK, Poland; 5 North Korea.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdverseExposureLevel(u8);

impl AdverseExposureLevel {
    pub fn new(level: i64) -> Result<AdverseExposureLevel, RiskError> {
        checked_level(level, "adverse exposure").map(AdverseExposureLevel)
    }

    pub fn level(self) -> u8 {
        self.0
    }

    pub fn descriptor(self) -> &'static str {
        match self.0 {
            1 => "Has no enemies and is neutral",
            2 => "Has no enemies but not neutral",
            3 => "Not in any war",
            4 => "In war but not considered a terrorist country",
            _ => "Considered a terrorist country by many countries",
        }
    }
}

fn checked_level(level: i64, what: &'static str) -> Result<u8, RiskError> {
    if (1..=5).contains(&level) {
        Ok(level as u8)
    } else {
        Err(RiskError::LevelOutOfRange { what, value: level })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AreaRating {
    VeryWeak,
    Weak,
    Strong,
    VeryStrong,
}

impl AreaRating {
    pub const ALL: [AreaRating; 4] = [
        AreaRating::VeryWeak,
        AreaRating::Weak,
        AreaRating::Strong,
        AreaRating::VeryStrong,
    ];

    pub fn ordinal(self) -> u8 {
        self as u8 + 1
    }

    pub fn as_str(self) -> &'static str {
        match self {
            AreaRating::VeryWeak => "very_weak",
            AreaRating::Weak => "weak",
            AreaRating::Strong => "strong",
            AreaRating::VeryStrong => "very_strong",
        }
    }
}

impl fmt::Display for AreaRating {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl FromStr for AreaRating {
    type Err = RiskError;

    /// Accepts `very_weak`, `very weak`, `very-weak` in any case.
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
        AreaRating::ALL
            .into_iter()
            .find(|r| r.as_str() == normalized)
            .ok_or_else(|| RiskError::UnknownAreaRating(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ReadinessProfile {
    pub homeland_security: AreaRating,
    pub business_continuity: AreaRating,
    pub disaster_recovery: AreaRating,
}

impl ReadinessProfile {
    pub fn new(
        homeland_security: AreaRating,
        business_continuity: AreaRating,
        disaster_recovery: AreaRating,
    ) -> ReadinessProfile {
        ReadinessProfile {
            homeland_security,
            business_continuity,
            disaster_recovery,
        }
    }

    pub fn uniform(rating: AreaRating) -> ReadinessProfile {
        ReadinessProfile::new(rating, rating, rating)
    }

    pub fn areas(&self) -> [AreaRating; 3] {
        [
            self.homeland_security,
            self.business_continuity,
            self.disaster_recovery,
        ]
    }

    /// All 64 profiles.
    pub fn all() -> impl Iterator<Item = ReadinessProfile> {
        AreaRating::ALL.into_iter().flat_map(|h| {
            AreaRating::ALL.into_iter().flat_map(move |b| {
                AreaRating::ALL
                    .into_iter()
                    .map(move |d| ReadinessProfile::new(h, b, d))
            })
        })
    }
}

/// Readiness level, 1 (very weak everywhere) to 5 (very strong everywhere).
///
/// 1: all very weak. 2: all at most weak. 3: some but not all areas at most
/// weak. 4: all at least strong. 5: all very strong.
pub fn classify_readiness(profile: &ReadinessProfile) -> u8 {
    let areas = profile.areas();
    let all = |pred: fn(&AreaRating) -> bool| areas.iter().all(pred);
    if all(|r| *r == AreaRating::VeryWeak) {
        1
    } else if all(|r| *r <= AreaRating::Weak) {
        2
    } else if areas.iter().any(|r| *r <= AreaRating::Weak) {
        3
    } else if all(|r| *r == AreaRating::VeryStrong) {
        5
    } else {
        4
    }
}

/// The three weights of the risk-position sum. They are nonnegative and sum to 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Weights {
    alphas: [f64; 3],
}

impl Weights {
    pub fn new(sei: f64, readiness: f64, adverse: f64) -> Result<Weights, RiskError> {
        let alphas = Self::checked([sei, readiness, adverse])?;
        let sum: f64 = alphas.iter().sum();
        if (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
            return Err(RiskError::WeightsNotNormalized { sum });
        }
        Ok(Weights { alphas })
    }

    /// Rescales the weights proportionally so they sum to 1.
    pub fn normalized(sei: f64, readiness: f64, adverse: f64) -> Result<Weights, RiskError> {
        let alphas = Self::checked([sei, readiness, adverse])?;
        let sum: f64 = alphas.iter().sum();
        if sum <= 0.0 {
            return Err(RiskError::ZeroWeights);
        }
        Ok(Weights {
            alphas: alphas.map(|a| a / sum),
        })
    }

    fn checked(alphas: [f64; 3]) -> Result<[f64; 3], RiskError> {
        for (index, &value) in alphas.iter().enumerate() {
            if !value.is_finite() || value < 0.0 {
                return Err(RiskError::NegativeWeight { index, value });
            }
        }
        Ok(alphas)
    }

    pub fn as_array(&self) -> [f64; 3] {
        self.alphas
    }
}

impl Default for Weights {
    fn default() -> Self {
        Weights {
            alphas: [1.0 / 3.0; 3],
        }
    }
}

/// How the three levels enter the weighted sum.
///
/// `Literal` uses the raw levels. `Oriented` inverts the SEI and readiness
/// levels (`6 - x`) so that every component grows with risk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Literal,
    #[default]
    Oriented,
}

impl Orientation {
    pub fn as_str(self) -> &'static str {
        match self {
            Orientation::Literal => "literal",
            Orientation::Oriented => "oriented",
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl FromStr for Orientation {
    type Err = RiskError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "literal" => Ok(Orientation::Literal),
            "oriented" => Ok(Orientation::Oriented),
            _ => Err(RiskError::UnknownOrientation(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CountryProfile {
    name: String,
    pub sei: SeiLevel,
    pub readiness: ReadinessProfile,
    pub adverse: AdverseExposureLevel,
    pub weights: Weights,
}

impl CountryProfile {
    pub fn new(
        name: impl Into<String>,
        sei: SeiLevel,
        readiness: ReadinessProfile,
        adverse: AdverseExposureLevel,
        weights: Weights,
    ) -> Result<CountryProfile, RiskError> {
        let name = name.into();
        if name.trim().is_empty() {
            return Err(RiskError::EmptyCountryName);
        }
        Ok(CountryProfile {
            name,
            sei,
            readiness,
            adverse,
            weights,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Components {
    pub sei: f64,
    pub readiness: f64,
    pub adverse: f64,
}

impl Components {
    pub fn as_array(&self) -> [f64; 3] {
        [self.sei, self.readiness, self.adverse]
    }
}

pub fn component_scores(country: &CountryProfile, orientation: Orientation) -> Components {
    let sei = f64::from(country.sei.level());
    let readiness = f64::from(classify_readiness(&country.readiness));
    let adverse = f64::from(country.adverse.level());
    match orientation {
        Orientation::Literal => Components {
            sei,
            readiness,
            adverse,
        },
        Orientation::Oriented => Components {
            sei: 6.0 - sei,
            readiness: 6.0 - readiness,
            adverse,
        },
    }
}

pub fn risk_position(components: &Components, weights: &Weights) -> Result<f64, RiskError> {
    let names = ["sei", "readiness", "adverse"];
    let values = components.as_array();
    for (name, value) in names.into_iter().zip(values) {
        if !(1.0..=5.0).contains(&value) {
            return Err(RiskError::ComponentOutOfRange { name, value });
        }
    }
    let [a1, a2, a3] = weights.alphas;
    Ok(a1 * components.sei + a2 * components.readiness + a3 * components.adverse)
}

pub fn country_risk(country: &CountryProfile, orientation: Orientation) -> Result<f64, RiskError> {
    risk_position(&component_scores(country, orientation), &country.weights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use AreaRating::*;

    fn profile(sei: i64, readiness: ReadinessProfile, adverse: i64) -> CountryProfile {
        CountryProfile::new(
            "Testland",
            SeiLevel::new(sei).unwrap(),
            readiness,
            AdverseExposureLevel::new(adverse).unwrap(),
            Weights::default(),
        )
        .unwrap()
    }

    #[test]
    fn classify_documented_rows() {
        assert_eq!(classify_readiness(&ReadinessProfile::uniform(VeryWeak)), 1);
        assert_eq!(classify_readiness(&ReadinessProfile::uniform(Weak)), 2);
        assert_eq!(
            classify_readiness(&ReadinessProfile::new(Strong, Weak, Strong)),
            3
        );
        assert_eq!(classify_readiness(&ReadinessProfile::uniform(Strong)), 4);
        assert_eq!(
            classify_readiness(&ReadinessProfile::uniform(VeryStrong)),
            5
        );
    }

    #[test]
    fn classify_extension() {
        assert_eq!(
            classify_readiness(&ReadinessProfile::new(VeryWeak, Weak, VeryWeak)),
            2
        );
        assert_eq!(
            classify_readiness(&ReadinessProfile::new(VeryStrong, VeryWeak, VeryStrong)),
            3
        );
        assert_eq!(
            classify_readiness(&ReadinessProfile::new(VeryStrong, Strong, VeryStrong)),
            4
        );
        assert_eq!(ReadinessProfile::all().count(), 64);
    }

    #[test]
    fn components_literal_and_oriented() {
        let sb6 = profile(5, ReadinessProfile::uniform(Strong), 4);
        let lit = component_scores(&sb6, Orientation::Literal);
        assert_eq!(lit.as_array(), [5.0, 4.0, 4.0]);
        let ori = component_scores(&sb6, Orientation::Oriented);
        assert_eq!(ori.as_array(), [1.0, 2.0, 4.0]);

        let mid = profile(3, ReadinessProfile::new(Strong, Weak, Strong), 3);
        assert_eq!(
            component_scores(&mid, Orientation::Literal).as_array(),
            [3.0; 3]
        );
        assert_eq!(
            component_scores(&mid, Orientation::Oriented).as_array(),
            [3.0; 3]
        );
    }

    #[test]
    fn risk_position_examples() {
        let c = Components {
            sei: 5.0,
            readiness: 4.0,
            adverse: 4.0,
        };
        let r = risk_position(&c, &Weights::default()).unwrap();
        assert!((r - 13.0 / 3.0).abs() < 1e-12);

        let w = Weights::new(0.2, 0.5, 0.3).unwrap();
        let flat = Components {
            sei: 2.5,
            readiness: 2.5,
            adverse: 2.5,
        };
        assert!((risk_position(&flat, &w).unwrap() - 2.5).abs() < 1e-12);

        let degenerate = Weights::new(0.0, 0.0, 1.0).unwrap();
        let c = Components {
            sei: 1.0,
            readiness: 1.0,
            adverse: 5.0,
        };
        assert_eq!(risk_position(&c, &degenerate).unwrap(), 5.0);
    }

    #[test]
    fn risk_position_rejects_out_of_range() {
        let c = Components {
            sei: 0.5,
            readiness: 3.0,
            adverse: 3.0,
        };
        assert!(matches!(
            risk_position(&c, &Weights::default()),
            Err(RiskError::ComponentOutOfRange { name: "sei", .. })
        ));
    }

    #[test]
    fn country_risk_examples() {
        let sb6 = profile(5, ReadinessProfile::uniform(Strong), 4);
        let lit = country_risk(&sb6, Orientation::Literal).unwrap();
        let ori = country_risk(&sb6, Orientation::Oriented).unwrap();
        assert!((lit - 13.0 / 3.0).abs() < 1e-12);
        assert!((ori - 7.0 / 3.0).abs() < 1e-12);

        let mid = profile(3, ReadinessProfile::new(Strong, Weak, Strong), 3);
        assert_eq!(
            country_risk(&mid, Orientation::Literal),
            country_risk(&mid, Orientation::Oriented)
        );
        assert!((country_risk(&mid, Orientation::Literal).unwrap() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn weights_validation() {
        assert!(matches!(
            Weights::new(0.5, 0.5, 0.5),
            Err(RiskError::WeightsNotNormalized { .. })
        ));
        assert!(matches!(
            Weights::new(-0.1, 0.6, 0.5),
            Err(RiskError::NegativeWeight { index: 0, .. })
        ));
        assert!(Weights::new(0.3, 0.3, 0.4 + 5e-10).is_ok());
        let w = Weights::normalized(1.0, 1.0, 2.0).unwrap();
        assert_eq!(w.as_array(), [0.25, 0.25, 0.5]);
        assert_eq!(
            Weights::normalized(0.0, 0.0, 0.0),
            Err(RiskError::ZeroWeights)
        );
    }

    #[test]
    fn levels_and_names() {
        assert!(SeiLevel::new(0).is_err());
        assert!(AdverseExposureLevel::new(6).is_err());
        assert_eq!(
            SeiLevel::new(5).unwrap().descriptor(),
            "One of the SB6 countries"
        );
        assert_eq!(
            AdverseExposureLevel::new(3).unwrap().descriptor(),
            "Not in any war"
        );
        assert!(CountryProfile::new(
            " ",
            SeiLevel::new(1).unwrap(),
            ReadinessProfile::uniform(Weak),
            AdverseExposureLevel::new(1).unwrap(),
            Weights::default()
        )
        .is_err());
    }

    #[test]
    fn parse_area_rating_and_orientation() {
        assert_eq!("Very Weak".parse::<AreaRating>(), Ok(VeryWeak));
        assert_eq!("very_strong".parse::<AreaRating>(), Ok(VeryStrong));
        assert!("medium".parse::<AreaRating>().is_err());
        assert_eq!("LITERAL".parse::<Orientation>(), Ok(Orientation::Literal));
        assert!("sideways".parse::<Orientation>().is_err());
    }
}
