//! Input file formats: facet files, binoid presentation JSON, and monomial
//! ideal files.

use crate::binoid::BinoidPresentation;
use crate::error::{Error, Result};
use crate::monomial::{DegreeBox, MonomialIdeal};
use crate::simplicial::SimplicialComplex;

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().filter_map(|line| {
        let line = match line.find('#') {
            Some(pos) => &line[..pos],
            None => line,
        };
        let line = line.trim();
        (!line.is_empty()).then_some(line)
    })
}

/// Parses a facet file: one facet per line as whitespace-separated vertex
/// labels, `#` comments, and an optional first line `vertices: a b c` that
/// fixes the vertex order. Without the header, vertices are ordered by first
/// appearance. A singleton facet keeps an isolated vertex.
pub fn parse_facet_file(text: &str) -> Result<SimplicialComplex> {
    let mut vertices: Vec<String> = Vec::new();
    let mut explicit_order = false;
    let mut facets: Vec<Vec<String>> = Vec::new();
    for (idx, line) in content_lines(text).enumerate() {
        if idx == 0 {
            if let Some(rest) = line.strip_prefix("vertices:") {
                vertices = rest.split_whitespace().map(str::to_string).collect();
                explicit_order = true;
                continue;
            }
        }
        let facet: Vec<String> = line.split_whitespace().map(str::to_string).collect();
        if !explicit_order {
            for v in &facet {
                if !vertices.contains(v) {
                    vertices.push(v.clone());
                }
            }
        }
        facets.push(facet);
    }
    if vertices.is_empty() {
        return Err(Error::Parse("facet file lists no vertices".into()));
    }
    SimplicialComplex::from_facets(vertices, &facets)
}

/// Parses a binoid presentation from JSON:
/// `{"generators": [...], "congruences": [[[..],[..]], ...], "infinities": [[..], ...]}`.
pub fn parse_presentation_json(text: &str) -> Result<BinoidPresentation> {
    let p: BinoidPresentation = serde_json::from_str(text)?;
    p.validate()?;
    Ok(p)
}

/// Parses a monomial ideal file: one generator per line as space-separated
/// exponents, `#` comments, and an optional first line `variables: x y z`
/// naming the variables (default `x1 x2 …`).
pub fn parse_ideal_file(text: &str) -> Result<MonomialIdeal> {
    let mut variables: Option<Vec<String>> = None;
    let mut generators: Vec<Vec<u64>> = Vec::new();
    for (idx, line) in content_lines(text).enumerate() {
        if idx == 0 {
            if let Some(rest) = line.strip_prefix("variables:") {
                variables = Some(rest.split_whitespace().map(str::to_string).collect());
                continue;
            }
        }
        let exponents: Vec<u64> = line
            .split_whitespace()
            .map(|tok| {
                tok.parse()
                    .map_err(|_| Error::Parse(format!("invalid exponent `{tok}`")))
            })
            .collect::<Result<Vec<u64>>>()?;
        generators.push(exponents);
    }
    let n = match (&variables, generators.first()) {
        (Some(v), _) => v.len(),
        (None, Some(g)) => g.len(),
        (None, None) => {
            return Err(Error::Parse(
                "ideal file must name variables or list a generator".into(),
            ))
        }
    };
    let variables = variables.unwrap_or_else(|| (1..=n).map(|i| format!("x{i}")).collect());
    MonomialIdeal::new(variables, generators)
}

/// Parses a degree-box option: `lo..hi` for a uniform window over all `n`
/// variables, or `lo..hi,lo..hi,…` with one range per variable.
pub fn parse_degree_box(spec: &str, n: usize) -> Result<DegreeBox> {
    let ranges: Vec<&str> = spec.split(',').collect();
    let parse_range = |r: &str| -> Result<(i64, i64)> {
        let (lo, hi) = r
            .split_once("..")
            .ok_or_else(|| Error::Parse(format!("invalid range `{r}` (expected lo..hi)")))?;
        let lo = lo
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("invalid bound `{lo}`")))?;
        let hi = hi
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("invalid bound `{hi}`")))?;
        Ok((lo, hi))
    };
    if ranges.len() == 1 {
        let (lo, hi) = parse_range(ranges[0])?;
        return DegreeBox::uniform(n, lo, hi);
    }
    if ranges.len() != n {
        return Err(Error::Parse(format!(
            "degree box lists {} ranges for {n} variables",
            ranges.len()
        )));
    }
    let mut lower = Vec::with_capacity(n);
    let mut upper = Vec::with_capacity(n);
    for r in ranges {
        let (lo, hi) = parse_range(r)?;
        lower.push(lo);
        upper.push(hi);
    }
    DegreeBox::new(lower, upper)
}
