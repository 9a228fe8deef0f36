//! Fusion of two individual-scale ratings (for example a threat and a business
//! impact) into one fused-scale rating (for example a risk).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::scales::{score_to_fused_term, term_score, FusedTerm, LinguisticTerm, Score};

/// Quantitative fusion: the mean of the two term scores.
pub fn fuse_quant(a: LinguisticTerm, b: LinguisticTerm) -> Score {
    // (2a + 2b) / 2 half-units
    let half_units = (term_score(a).half_units() + term_score(b).half_units()) / 2;
    Score::from_half_units(half_units).expect("mean of two grid points stays on the grid")
}

pub fn fuse_linguistic(a: LinguisticTerm, b: LinguisticTerm) -> FusedTerm {
    score_to_fused_term(fuse_quant(a, b))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixKind {
    Linguistic,
    Quantitative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cell {
    Linguistic(FusedTerm),
    Quantitative(Score),
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Linguistic(t) => t.fmt(f),
            // integral cells print without a fraction, as in the printed table
            Cell::Quantitative(s) if s.half_units() % 2 == 0 => {
                f.pad(&(s.half_units() / 2).to_string())
            }
            Cell::Quantitative(s) => s.fmt(f),
        }
    }
}

/// The full 5x5 table, rows indexed by the first scale and columns by the second.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionMatrix {
    kind: MatrixKind,
    cells: [[Cell; 5]; 5],
}

impl FusionMatrix {
    pub fn new(kind: MatrixKind) -> FusionMatrix {
        let cells = LinguisticTerm::ALL.map(|row| {
            LinguisticTerm::ALL.map(|col| match kind {
                MatrixKind::Linguistic => Cell::Linguistic(fuse_linguistic(row, col)),
                MatrixKind::Quantitative => Cell::Quantitative(fuse_quant(row, col)),
            })
        });
        FusionMatrix { kind, cells }
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn cell(&self, row: LinguisticTerm, col: LinguisticTerm) -> Cell {
        self.cells[usize::from(row.points() - 1)][usize::from(col.points() - 1)]
    }

    pub fn rows(&self) -> impl Iterator<Item = (LinguisticTerm, &[Cell; 5])> {
        LinguisticTerm::ALL.into_iter().zip(self.cells.iter())
    }

    /// Plain-text rendering with scale-2 terms across and scale-1 terms down.
    pub fn render(&self) -> String {
        let title = match self.kind {
            MatrixKind::Linguistic => "Linguistic fused scale",
            MatrixKind::Quantitative => "Quantitative fused scale",
        };
        let mut out = String::new();
        out.push_str(title);
        out.push('\n');
        out.push_str("Rows: scale 1 (e.g. threats); columns: scale 2 (e.g. business impact); entries: fused scale (e.g. risks)\n");
        out.push_str(&format!("{:<4}", ""));
        for col in LinguisticTerm::ALL {
            out.push_str(&format!("{:>5}", col.code()));
        }
        out.push('\n');
        for (row, cells) in self.rows() {
            out.push_str(&format!("{:<4}", row.code()));
            for cell in cells {
                out.push_str(&format!("{:>5}", cell.to_string()));
            }
            out.push('\n');
        }
        out
    }
}

pub fn fusion_matrix(kind: MatrixKind) -> FusionMatrix {
    FusionMatrix::new(kind)
}
