//! Security risk position of a country and prioritization of candidate assets
//! for protection.
//!
//! - [`scales`]: the individual 5-point and fused 9-point rating scales
//! - [`fusion`]: fusing two ratings into one, linguistically and numerically
//! - [`risk_position`]: country profiles and the weighted risk position
//! - [`prioritization`]: per-asset risk, priority and the priority vector
//! - [`workbench`]: scenario documents, reports, comparison and the run store

pub mod cli;
pub mod fusion;
pub mod prioritization;
pub mod risk_position;
pub mod scales;
pub mod workbench;

pub use fusion::{fuse_linguistic, fuse_quant, fusion_matrix, FusionMatrix, MatrixKind};
pub use prioritization::{
    asset_priority, asset_risk, prioritize, AssetAssessment, GoalArea, Priority, PriorityEntry,
    PriorityVector, Weakness,
};
pub use risk_position::{
    classify_readiness, component_scores, country_risk, risk_position, AdverseExposureLevel,
    AreaRating, Components, CountryProfile, Orientation, ReadinessProfile, SeiLevel, Weights,
};
pub use scales::{
    fused_term_score, parse_term, score_to_fused_term, term_score, FusedTerm, LinguisticTerm, Score,
};
pub use workbench::Scenario;
