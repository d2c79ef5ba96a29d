//! Wire format for reports: the JSON schema emitted by the CLI and FFI, and
//! the aligned-text pretty printer.
//!
//! Schema:
//! ```text
//! {"degrees":[{"j":int,"free_rank":int,"torsion":[int],
//!              "per_vertex":{label:{"free_rank":int,"torsion":[int]}},
//!              "field":{"kstar_copies":int,"mu":[int],"ext":[int],"infinite_ext":bool}}],
//!  "provenance":string}
//! ```
//! Identical inputs produce byte-identical JSON.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::abelian::{FgAbelianGroup, FieldModel, GroupValue};
use crate::error::{Error, Result};
use crate::monomial::NonreducedReport;
use crate::picard::{CohomologyReport, DegreeReport, GradedRankReport, GraphCounts, Provenance};

fn numbers(values: &[BigInt]) -> Result<Vec<serde_json::Number>> {
    values
        .iter()
        .map(|v| {
            serde_json::Number::from_str(&v.to_string())
                .map_err(|e| Error::Parse(format!("non-numeric torsion entry: {e}")))
        })
        .collect()
}

fn bigints(values: &[serde_json::Number]) -> Result<Vec<BigInt>> {
    values
        .iter()
        .map(|n| {
            BigInt::from_str(&n.to_string())
                .map_err(|e| Error::Parse(format!("invalid integer in report: {e}")))
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct GroupJson {
    free_rank: usize,
    torsion: Vec<serde_json::Number>,
}

impl GroupJson {
    fn from_group(g: &FgAbelianGroup) -> Result<Self> {
        Ok(GroupJson {
            free_rank: g.free_rank(),
            torsion: numbers(g.invariant_factors())?,
        })
    }

    fn to_group(&self) -> Result<FgAbelianGroup> {
        let torsion = bigints(&self.torsion)?;
        Ok(FgAbelianGroup::from_orders(
            std::iter::repeat_n(BigInt::from(0), self.free_rank).chain(torsion),
        ))
    }
}

#[derive(Serialize, Deserialize)]
struct FieldJson {
    kstar_copies: usize,
    mu: Vec<serde_json::Number>,
    ext: Vec<serde_json::Number>,
    infinite_ext: bool,
}

#[derive(Serialize, Deserialize)]
struct DegreeJson {
    j: usize,
    free_rank: usize,
    torsion: Vec<serde_json::Number>,
    per_vertex: BTreeMap<String, GroupJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    field: Option<FieldJson>,
}

#[derive(Serialize, Deserialize)]
struct ReportJson {
    degrees: Vec<DegreeJson>,
    provenance: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    field_model: Option<FieldModel>,
}

fn report_to_wire(report: &CohomologyReport) -> Result<ReportJson> {
    let mut degrees = Vec::with_capacity(report.degrees.len());
    for d in &report.degrees {
        let mut per_vertex = BTreeMap::new();
        for (label, g) in &d.per_vertex {
            per_vertex.insert(label.clone(), GroupJson::from_group(g)?);
        }
        degrees.push(DegreeJson {
            j: d.j,
            free_rank: d.combinatorial.free_rank(),
            torsion: numbers(d.combinatorial.invariant_factors())?,
            per_vertex,
            field: match &d.field {
                None => None,
                Some(v) => Some(FieldJson {
                    kstar_copies: v.kstar_copies,
                    mu: numbers(&v.mu)?,
                    ext: numbers(&v.ext)?,
                    infinite_ext: v.infinite_ext,
                }),
            },
        });
    }
    Ok(ReportJson {
        degrees,
        provenance: report.provenance.as_str().to_string(),
        field_model: report.field_model,
    })
}

/// Serializes a report to its canonical JSON string.
pub fn report_to_json(report: &CohomologyReport) -> Result<String> {
    Ok(serde_json::to_string(&report_to_wire(report)?)?)
}

pub fn report_to_json_pretty_value(report: &CohomologyReport) -> Result<serde_json::Value> {
    Ok(serde_json::to_value(report_to_wire(report)?)?)
}

/// Parses a report back from its JSON form; inverse of [`report_to_json`].
pub fn report_from_json(text: &str) -> Result<CohomologyReport> {
    let wire: ReportJson = serde_json::from_str(text)?;
    let provenance = match wire.provenance.as_str() {
        "direct" => Provenance::Direct,
        "formula" => Provenance::Formula,
        "both-agree" => Provenance::BothAgree,
        other => return Err(Error::Parse(format!("unknown provenance `{other}`"))),
    };
    let mut degrees = Vec::with_capacity(wire.degrees.len());
    for d in wire.degrees {
        let combinatorial = GroupJson {
            free_rank: d.free_rank,
            torsion: d.torsion,
        }
        .to_group()?;
        let mut per_vertex = BTreeMap::new();
        for (label, g) in d.per_vertex {
            per_vertex.insert(label, g.to_group()?);
        }
        let field = match d.field {
            None => None,
            Some(f) => {
                let model = wire
                    .field_model
                    .ok_or_else(|| Error::Parse("field part without field_model".into()))?;
                Some(GroupValue {
                    model,
                    kstar_copies: f.kstar_copies,
                    mu: bigints(&f.mu)?,
                    ext: bigints(&f.ext)?,
                    infinite_ext: f.infinite_ext,
                })
            }
        };
        degrees.push(DegreeReport {
            j: d.j,
            combinatorial,
            per_vertex,
            field,
        });
    }
    Ok(CohomologyReport {
        degrees,
        provenance,
        field_model: wire.field_model,
    })
}

/// Aligned text table for a report.
pub fn report_to_pretty(report: &CohomologyReport) -> String {
    let mut rows: Vec<[String; 3]> = vec![[
        "degree".to_string(),
        "combinatorial".to_string(),
        "field".to_string(),
    ]];
    for d in &report.degrees {
        let field = match &d.field {
            None => "-".to_string(),
            Some(v) => v.to_string(),
        };
        rows.push([format!("H^{}", d.j), d.combinatorial.to_string(), field]);
    }
    let widths: Vec<usize> = (0..3)
        .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &rows {
        let _ = writeln!(
            out,
            "{:w0$}  {:w1$}  {:w2$}",
            row[0],
            row[1],
            row[2],
            w0 = widths[0],
            w1 = widths[1],
            w2 = widths[2]
        );
    }
    for d in &report.degrees {
        if d.per_vertex.is_empty() {
            continue;
        }
        let parts: Vec<String> = d
            .per_vertex
            .iter()
            .map(|(label, g)| format!("{label}: {g}"))
            .collect();
        let _ = writeln!(out, "H^{} by vertex: {}", d.j, parts.join(", "));
    }
    if let Some(model) = &report.field_model {
        let _ = writeln!(out, "field model: {model}");
    }
    let _ = writeln!(out, "provenance: {}", report.provenance.as_str());
    out
}

/// JSON for the graph fast path, with the graded rank sequence when the
/// graph is connected.
pub fn graph_to_json(counts: &GraphCounts, graded: Option<&GradedRankReport>) -> String {
    let graded_value = match graded {
        None => serde_json::Value::Null,
        Some(g) => serde_json::to_value(g).expect("rank report serializes"),
    };
    let value = serde_json::json!({
        "isolated": counts.isolated,
        "picard_rank": counts.picard_rank,
        "graded": graded_value,
        "note": "all higher cohomology vanishes",
    });
    value.to_string()
}

pub fn graph_to_pretty(counts: &GraphCounts, graded: Option<&GradedRankReport>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "isolated vertices (rank H^0): {}", counts.isolated);
    let _ = writeln!(out, "local Picard rank (rank H^1): {}", counts.picard_rank);
    if let Some(g) = graded {
        let _ = writeln!(
            out,
            "graded unit sequence ranks: 1 -> {} -> {} -> {} (cyclomatic {})",
            g.proj_picard_rank, g.local_picard_rank, g.cyclomatic, g.cyclomatic
        );
        let _ = writeln!(out, "exactness identity verified: {}", g.identity_verified);
    }
    let _ = writeln!(out, "all higher cohomology vanishes");
    out
}

/// JSON for a non-reduced monomial report: the Stanley-Reisner report of the
/// reduction extended with the removed variables and the nilpotent table
/// keyed by degree tuple.
pub fn nonreduced_to_json(report: &NonreducedReport) -> Result<String> {
    let mut value = report_to_json_pretty_value(&report.reduced)?;
    let object = value.as_object_mut().expect("report is an object");
    object.insert(
        "removed_variables".to_string(),
        serde_json::to_value(&report.removed_variables)?,
    );
    let mut table = serde_json::Map::new();
    for (degree, dims) in &report.nilpotent.entries {
        let key = degree
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(",");
        table.insert(key, serde_json::to_value(dims)?);
    }
    object.insert("nilpotent".to_string(), serde_json::Value::Object(table));
    Ok(serde_json::Value::Object(object.clone()).to_string())
}

pub fn nonreduced_to_pretty(report: &NonreducedReport) -> String {
    let mut out = report_to_pretty(&report.reduced);
    if !report.removed_variables.is_empty() {
        let _ = writeln!(
            out,
            "variables removed by reduction: {}",
            report.removed_variables.join(", ")
        );
    }
    if report.nilpotent.is_zero() {
        let _ = writeln!(
            out,
            "nilpotent table: zero (the ideal is squarefree or all classes die)"
        );
    } else {
        let _ = writeln!(
            out,
            "nilpotent dimensions by degree (j = 0..{}):",
            report.nilpotent.chart_count - 1
        );
        for (degree, dims) in &report.nilpotent.entries {
            let key = degree
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(",");
            let row = dims
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            let _ = writeln!(out, "  ({key}): {row}");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::picard::{crosscheck_simplicial, stanley_reisner_cohomology};
    use crate::simplicial::tests_support::hollow_triangle;

    #[test]
    fn json_round_trip() {
        let t = hollow_triangle();
        let report = stanley_reisner_cohomology(&t, FieldModel::FiniteField(7)).unwrap();
        let text = report_to_json(&report).unwrap();
        let back = report_from_json(&text).unwrap();
        assert_eq!(back, report);
        // determinism
        assert_eq!(report_to_json(&back).unwrap(), text);
    }

    #[test]
    fn schema_keys() {
        let t = hollow_triangle();
        let report = crosscheck_simplicial(&t).unwrap();
        let value: serde_json::Value =
            serde_json::from_str(&report_to_json(&report).unwrap()).unwrap();
        assert_eq!(value["provenance"], "both-agree");
        assert_eq!(value["degrees"][1]["j"], 1);
        assert_eq!(value["degrees"][1]["free_rank"], 3);
        assert!(value["degrees"][1]["torsion"]
            .as_array()
            .unwrap()
            .is_empty());
        assert_eq!(value["degrees"][1]["per_vertex"]["x"]["free_rank"], 1);
        assert!(value["degrees"][1].get("field").is_none());
    }

    #[test]
    fn field_part_schema() {
        let t = hollow_triangle();
        let report = stanley_reisner_cohomology(&t, FieldModel::Symbolic).unwrap();
        let value: serde_json::Value =
            serde_json::from_str(&report_to_json(&report).unwrap()).unwrap();
        let field = &value["degrees"][1]["field"];
        assert_eq!(field["kstar_copies"], 1);
        assert!(field["mu"].as_array().unwrap().is_empty());
        assert!(field["ext"].as_array().unwrap().is_empty());
        assert_eq!(field["infinite_ext"], false);
    }

    #[test]
    fn pretty_output_mentions_groups() {
        let t = hollow_triangle();
        let report = crosscheck_simplicial(&t).unwrap();
        let text = report_to_pretty(&report);
        assert!(text.contains("Z^3"));
        assert!(text.contains("provenance: both-agree"));
    }
}
