//! Text formats: the grid truth-table document and the JSON pair document.
//!
//! A grid document is a header line `m n` followed by `n` rows of `m`
//! characters from `{'0','1'}`; the top row holds `y = n - 1`, so the text
//! reads like the usual picture of the grid. Rendering is canonical
//! (exactly one trailing newline) and `render . parse` is the identity on
//! canonical documents.

use serde::{Deserialize, Serialize};

use crate::{GridDim, GridFunction, Point, ProperPair};

/// Grid-document parse failure; lines are 1-based, the header is line 1.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line 1: malformed header: {0}")]
    Header(String),
    #[error("line {line}: expected {expected} characters, found {found}")]
    LineLength {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: illegal character `{ch}`")]
    IllegalCharacter { line: usize, ch: char },
    #[error("expected {expected} row lines, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("line {line}: unexpected trailing content")]
    TrailingContent { line: usize },
}

fn parse_header(header: &str) -> Result<GridDim, ParseError> {
    let bad = |msg: &str| ParseError::Header(msg.to_string());
    let (ms, ns) = header
        .split_once(' ')
        .ok_or_else(|| bad("expected `m n`"))?;
    for part in [ms, ns] {
        if part.is_empty() || !part.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad("expected two base-10 integers"));
        }
    }
    let m: i64 = ms.parse().map_err(|_| bad("grid width out of range"))?;
    let n: i64 = ns.parse().map_err(|_| bad("grid height out of range"))?;
    GridDim::new(m, n).map_err(|_| bad("unsupported grid dimensions"))
}

/// Parses a grid document into a truth table.
pub fn parse_grid(text: &str) -> Result<GridFunction, ParseError> {
    let mut lines: Vec<&str> = text.split('\n').collect();
    if lines.last() == Some(&"") {
        lines.pop(); // the canonical trailing newline
    }
    let dim = parse_header(lines.first().copied().unwrap_or_default())?;
    let (m, n) = (dim.m() as usize, dim.n() as usize);
    let rows = &lines[1..];
    if rows.len() < n {
        return Err(ParseError::RowCount {
            expected: n,
            found: rows.len(),
        });
    }
    if rows.len() > n {
        return Err(ParseError::TrailingContent { line: n + 2 });
    }
    let mut f = GridFunction::constant(dim, false);
    for (j, row) in rows.iter().enumerate() {
        let line_no = j + 2;
        let chars: Vec<char> = row.chars().collect();
        if chars.len() != m {
            return Err(ParseError::LineLength {
                line: line_no,
                expected: m,
                found: chars.len(),
            });
        }
        let y = (n - 1 - j) as i64;
        for (x, &ch) in chars.iter().enumerate() {
            match ch {
                '0' => {}
                '1' => f.set(Point::new(x as i64, y), true),
                _ => return Err(ParseError::IllegalCharacter { line: line_no, ch }),
            }
        }
    }
    Ok(f)
}

/// Canonical inverse of [`parse_grid`].
pub fn render_grid(f: &GridFunction) -> String {
    let dim = f.dim();
    let mut out = format!("{} {}\n", dim.m(), dim.n());
    for j in 0..dim.n() {
        let y = dim.n() - 1 - j;
        for x in 0..dim.m() {
            out.push(if f.value(Point::new(x, y)) { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}

/// JSON document listing segment pairs on a grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairDocument {
    pub m: i64,
    pub n: i64,
    pub pairs: Vec<PairEntry>,
}

/// One pair of oriented segments `A -> B`, `C -> D`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairEntry {
    #[serde(rename = "A")]
    pub a: [i64; 2],
    #[serde(rename = "B")]
    pub b: [i64; 2],
    #[serde(rename = "C")]
    pub c: [i64; 2],
    #[serde(rename = "D")]
    pub d: [i64; 2],
}

impl PairDocument {
    pub fn new(dim: GridDim, pairs: &[ProperPair]) -> Self {
        let as_array = |p: Point| [p.x, p.y];
        Self {
            m: dim.m(),
            n: dim.n(),
            pairs: pairs
                .iter()
                .map(|pair| PairEntry {
                    a: as_array(pair.first().a()),
                    b: as_array(pair.first().b()),
                    c: as_array(pair.second().a()),
                    d: as_array(pair.second().b()),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("document serializes");
        out.push('\n');
        out
    }
}
