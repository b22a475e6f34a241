//! JSON documents and table renderings.
//!
//! A document is one flat object:
//!
//! ```json
//! {
//!   "order": 3,
//!   "unit": 0,
//!   "alpha": [0, 2, 1],
//!   "table": [
//!     [0, 2, 1],
//!     [2, 1, 0],
//!     [1, 0, 2]
//!   ],
//!   "labels": ["1", "a", "b"]
//! }
//! ```
//!
//! Indices are zero-based; `labels` is optional.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::Error;
use crate::group::{verify, AxiomReport, HomGroup};
use crate::perm::Permutation;
use crate::table::CayleyTable;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomGroupDocument {
    pub order: usize,
    pub unit: usize,
    pub alpha: Vec<usize>,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("parse error at line {line}, column {column}: {message}{}", context_suffix(.context))]
    Parse {
        line: usize,
        column: usize,
        message: String,
        context: Option<String>,
    },
    #[error("malformed document: {0}")]
    Shape(String),
    #[error(transparent)]
    Structure(#[from] Error),
}

impl DocumentError {
    pub fn tag(&self) -> &'static str {
        match self {
            DocumentError::Parse { .. } => "parse",
            DocumentError::Shape(_) => "shape",
            DocumentError::Structure(Error::Rejected(_)) => "invalid",
            DocumentError::Structure(_) => "shape",
        }
    }
}

fn context_suffix(context: &Option<String>) -> String {
    match context {
        Some(line) => format!("\n  | {line}"),
        None => String::new(),
    }
}

/// The validated pieces of a document, before the axiom check.
#[derive(Clone, Debug)]
pub struct Parts {
    pub table: CayleyTable,
    pub alpha: Permutation,
    pub unit: usize,
    pub labels: Option<Vec<String>>,
}

impl Parts {
    pub fn verify(&self) -> AxiomReport {
        verify(&self.table, &self.alpha, self.unit)
    }

    pub fn into_hom_group(self) -> Result<HomGroup, DocumentError> {
        let g = HomGroup::new(self.table, self.alpha, self.unit)?;
        Ok(match self.labels {
            Some(labels) => g.with_labels(labels)?,
            None => g,
        })
    }
}

impl HomGroupDocument {
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        serde_json::from_str(text).map_err(|e| {
            let line = e.line();
            let context = line
                .checked_sub(1)
                .and_then(|l| text.lines().nth(l))
                .map(str::to_string);
            DocumentError::Parse {
                line,
                column: e.column(),
                message: e.to_string(),
                context,
            }
        })
    }

    pub fn from_hom_group(g: &HomGroup) -> Self {
        HomGroupDocument {
            order: g.order(),
            unit: g.unit(),
            alpha: g.alpha().images().to_vec(),
            table: g.table().rows(),
            labels: g.labels().map(<[String]>::to_vec),
        }
    }

    /// Checks the shape of every array without running the axiom check.
    pub fn parts(&self) -> Result<Parts, DocumentError> {
        let n = self.order;
        if n == 0 {
            return Err(DocumentError::Shape("order must be at least 1".into()));
        }
        if self.unit >= n {
            return Err(DocumentError::Shape(format!(
                "unit {} out of range",
                self.unit
            )));
        }
        if self.alpha.len() != n {
            return Err(DocumentError::Shape(format!(
                "alpha has {} entries, expected {n}",
                self.alpha.len()
            )));
        }
        if self.table.len() != n {
            return Err(DocumentError::Shape(format!(
                "table has {} rows, expected {n}",
                self.table.len()
            )));
        }
        if let Some(labels) = &self.labels {
            if labels.len() != n {
                return Err(DocumentError::Shape(format!(
                    "{} labels, expected {n}",
                    labels.len()
                )));
            }
        }
        let table = CayleyTable::new(self.table.clone())
            .map_err(|e| DocumentError::Shape(format!("table: {e}")))?;
        let alpha = Permutation::new(self.alpha.clone())
            .map_err(|e| DocumentError::Shape(format!("alpha: {e}")))?;
        Ok(Parts {
            table,
            alpha,
            unit: self.unit,
            labels: self.labels.clone(),
        })
    }

    pub fn into_hom_group(self) -> Result<HomGroup, DocumentError> {
        self.parts()?.into_hom_group()
    }

    /// Serializes with one table row per line. Output ends in a newline.
    pub fn to_json(&self) -> String {
        let ints = |v: &[usize]| {
            v.iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        let mut out = String::new();
        out.push_str("{\n");
        let _ = writeln!(out, "  \"order\": {},", self.order);
        let _ = writeln!(out, "  \"unit\": {},", self.unit);
        let _ = writeln!(out, "  \"alpha\": [{}],", ints(&self.alpha));
        out.push_str("  \"table\": [\n");
        for (i, row) in self.table.iter().enumerate() {
            let sep = if i + 1 < self.table.len() { "," } else { "" };
            let _ = writeln!(out, "    [{}]{sep}", ints(row));
        }
        out.push_str("  ]");
        if let Some(labels) = &self.labels {
            let quoted: Vec<String> = labels
                .iter()
                .map(|l| serde_json::to_string(l).expect("strings serialize"))
                .collect();
            let _ = write!(out, ",\n  \"labels\": [{}]", quoted.join(", "));
        }
        out.push_str("\n}\n");
        out
    }
}

/// Loads and fully validates a document.
pub fn load(text: &str) -> Result<HomGroup, DocumentError> {
    HomGroupDocument::parse(text)?.into_hom_group()
}

pub fn save(g: &HomGroup) -> String {
    HomGroupDocument::from_hom_group(g).to_json()
}

/// Raw index matrix, one comma-separated row per line.
pub fn render_csv(table: &CayleyTable) -> String {
    let mut out = String::new();
    for row in table.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// Cayley table with a header row and column of labels, the unit first,
/// padded to a fixed column width.
pub fn render_text(table: &CayleyTable, unit: usize, labels: &dyn Fn(usize) -> String) -> String {
    let n = table.order();
    let order: Vec<usize> = std::iter::once(unit)
        .chain((0..n).filter(|&x| x != unit))
        .collect();
    let width = (0..n)
        .map(|i| labels(i).chars().count())
        .max()
        .unwrap_or(1)
        .max(1);
    let pad = |s: String| format!("{s:>width$}");
    let mut out = String::new();
    let header: Vec<String> = order.iter().map(|&j| pad(labels(j))).collect();
    let _ = writeln!(out, "{} | {}", pad("*".to_string()), header.join(" "));
    let _ = writeln!(
        out,
        "{}-+-{}",
        "-".repeat(width),
        "-".repeat(header.join(" ").chars().count())
    );
    for &i in &order {
        let cells: Vec<String> = order
            .iter()
            .map(|&j| pad(labels(table.get(i, j))))
            .collect();
        let _ = writeln!(out, "{} | {}", pad(labels(i)), cells.join(" "));
    }
    out
}

pub fn render_hom_group(g: &HomGroup) -> String {
    render_text(g.table(), g.unit(), &|i| g.label(i))
}
