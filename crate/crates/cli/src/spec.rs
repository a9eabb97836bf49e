//! Datum files.
//!
//! ```json
//! {"torus_rank": 1, "dominant_rank": 1, "generators": [[1, 0], [-1, 2]], "label": "optional"}
//! ```
//!
//! The first `torus_rank` coordinates of a generator are torus characters,
//! the remaining `dominant_rank` ones are coefficients of fundamental weights
//! and must be nonnegative.

use std::fmt;

use horoflex_core::lattice::LatticeVector;
use horoflex_core::semigroup::{DatumError, HorosphericalDatum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatumSpec {
    pub torus_rank: usize,
    pub dominant_rank: usize,
    pub generators: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

/// Line and column, both starting at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {} column {}", self.line, self.column)
    }
}

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("malformed datum at {position}: {message}")]
    Malformed { position: Position, message: String },
    #[error("{path}{}: {message}", at.map(|p| format!(" ({p})")).unwrap_or_default())]
    Invalid {
        path: String,
        at: Option<Position>,
        message: String,
    },
    #[error("ambient rank {rank} exceeds the cap of {cap} (set HOROFLEX_MAX_RANK to raise it)")]
    RankCap { rank: usize, cap: usize },
}

pub fn parse_spec(text: &str) -> Result<DatumSpec, SpecError> {
    serde_json::from_str(text).map_err(|e| SpecError::Malformed {
        position: Position {
            line: e.line(),
            column: e.column(),
        },
        message: strip_position(&e.to_string()),
    })
}

fn strip_position(message: &str) -> String {
    match message.rfind(" at line ") {
        Some(i) => message[..i].to_string(),
        None => message.to_string(),
    }
}

impl DatumSpec {
    pub fn from_datum(d: &HorosphericalDatum, label: Option<String>) -> Self {
        DatumSpec {
            torus_rank: d.torus_rank(),
            dominant_rank: d.dominant_rank(),
            generators: d
                .generators()
                .iter()
                .map(|g| g.to_i64s().expect("generators of a parsed datum fit in i64"))
                .collect(),
            label,
        }
    }

    /// Validates against the datum invariants. `source` is the text the spec
    /// was parsed from, used to point at offending generators.
    pub fn to_datum(&self, max_rank: usize, source: Option<&str>) -> Result<HorosphericalDatum, SpecError> {
        let rank = self.torus_rank + self.dominant_rank;
        if rank > max_rank {
            return Err(SpecError::RankCap { rank, cap: max_rank });
        }
        let locate = |i: usize| source.and_then(|s| generator_position(s, i));
        let gens = self.generators.iter().map(|g| LatticeVector::from_i64s(g)).collect();
        HorosphericalDatum::new(self.torus_rank, self.dominant_rank, gens).map_err(|e| match e {
            DatumError::RankMismatch { index, expected, found } => SpecError::Invalid {
                path: format!("generators[{index}]"),
                at: locate(index),
                message: format!("has {found} coordinates, expected torus_rank + dominant_rank = {expected}"),
            },
            DatumError::NotDominant { index, coord } => SpecError::Invalid {
                path: format!("generators[{index}][{coord}]"),
                at: locate(index),
                message: format!(
                    "dominant coordinate is {}, must be nonnegative",
                    self.generators[index][coord]
                ),
            },
            DatumError::NoGenerators => SpecError::Invalid {
                path: "generators".into(),
                at: None,
                message: "needs at least one nonzero generator".into(),
            },
            DatumError::Lattice(l) => SpecError::Invalid {
                path: "generators".into(),
                at: None,
                message: l.to_string(),
            },
        })
    }
}

/// Position of the `index`-th element of the top-level `generators` array in
/// already-valid JSON text.
fn generator_position(text: &str, index: usize) -> Option<Position> {
    let mut depth = 0usize;
    let mut in_string = false;
    let mut escaped = false;
    let mut string_start = 0;
    let mut last_key: Option<&str> = None;
    let mut in_generators = false;
    let mut seen = 0usize;
    let mut expecting_element = false;
    for (i, c) in text.char_indices() {
        if in_string {
            if escaped {
                escaped = false;
            } else if c == '\\' {
                escaped = true;
            } else if c == '"' {
                in_string = false;
                if depth == 1 {
                    last_key = Some(&text[string_start..i]);
                }
            }
            continue;
        }
        if in_generators && depth == 2 && expecting_element && !c.is_whitespace() && c != ',' && c != ']' {
            if seen == index {
                return Some(position_of(text, i));
            }
            seen += 1;
            expecting_element = false;
        }
        match c {
            '"' => {
                in_string = true;
                string_start = i + 1;
            }
            '[' | '{' => {
                depth += 1;
                if depth == 2 && c == '[' && last_key == Some("generators") {
                    in_generators = true;
                    expecting_element = true;
                }
            }
            ']' | '}' => {
                if depth == 2 && in_generators {
                    in_generators = false;
                }
                depth = depth.saturating_sub(1);
            }
            ',' if in_generators && depth == 2 => expecting_element = true,
            _ => {}
        }
    }
    None
}

fn position_of(text: &str, byte: usize) -> Position {
    let before = &text[..byte];
    let line = before.matches('\n').count() + 1;
    let column = before.rfind('\n').map_or(before.chars().count(), |nl| before[nl + 1..].chars().count()) + 1;
    Position { line, column }
}
