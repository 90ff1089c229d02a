//! Evaluated inequalities and their CSV form.

use std::collections::BTreeMap;
use std::io::Write;

use serde::Serialize;
use serde_json::Value;

use crate::error::Result;

/// Slack on every comparison: `a <= b` holds iff `a <= b + TOL`, `a < b`
/// holds iff `a < b - TOL`.
pub const COMPARISON_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = "<=")]
    Le,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Lt => "<",
            Relation::Le => "<=",
        }
    }

    pub fn evaluate(self, lhs: f64, rhs: f64) -> bool {
        match self {
            Relation::Lt => lhs < rhs - COMPARISON_TOLERANCE,
            Relation::Le => lhs <= rhs + COMPARISON_TOLERANCE,
        }
    }
}

pub type Inputs = BTreeMap<String, Value>;

/// Builds an `Inputs` record from `key => value` pairs.
#[macro_export]
macro_rules! inputs {
    ($($key:literal => $value:expr),* $(,)?) => {{
        let mut map = $crate::report::Inputs::new();
        $(map.insert($key.to_string(), ::serde_json::json!($value));)*
        map
    }};
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub relation: Relation,
    pub holds: bool,
    pub inputs: Inputs,
}

impl BoundReport {
    pub fn evaluate(name: impl Into<String>, lhs: f64, rhs: f64, relation: Relation, inputs: Inputs) -> Self {
        BoundReport { name: name.into(), lhs, rhs, relation, holds: relation.evaluate(lhs, rhs), inputs }
    }
}

/// A bound that was either evaluated or not applicable to the input.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum BoundRow {
    Evaluated(BoundReport),
    Skipped { name: String, reason: String },
}

impl BoundRow {
    pub fn name(&self) -> &str {
        match self {
            BoundRow::Evaluated(r) => &r.name,
            BoundRow::Skipped { name, .. } => name,
        }
    }

    /// False only for an evaluated bound that fails.
    pub fn ok(&self) -> bool {
        match self {
            BoundRow::Evaluated(r) => r.holds,
            BoundRow::Skipped { .. } => true,
        }
    }
}

impl From<BoundReport> for BoundRow {
    fn from(r: BoundReport) -> Self {
        BoundRow::Evaluated(r)
    }
}

/// Columns: name, lhs, rhs, relation, holds, parameters (JSON). Skipped
/// rows leave the numbers empty and put `skipped` under `holds`.
pub fn write_csv<W: Write>(rows: &[BoundRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["name", "lhs", "rhs", "relation", "holds", "parameters"])?;
    for row in rows {
        match row {
            BoundRow::Evaluated(r) => {
                let params = serde_json::to_string(&r.inputs)?;
                w.write_record([
                    r.name.as_str(),
                    &r.lhs.to_string(),
                    &r.rhs.to_string(),
                    r.relation.symbol(),
                    if r.holds { "true" } else { "false" },
                    &params,
                ])?;
            }
            BoundRow::Skipped { name, reason } => {
                let params = serde_json::to_string(&serde_json::json!({ "reason": reason }))?;
                w.write_record([name.as_str(), "", "", "", "skipped", &params])?;
            }
        }
    }
    w.flush()?;
    Ok(())
}
