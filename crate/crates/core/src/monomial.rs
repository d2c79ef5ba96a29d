//! Non-reduced monomial quotients: reduction to a simplicial complex and the
//! per-multidegree nilpotent correction to the unit-sheaf cohomology.
//!
//! For a monomial ideal `I` with radical `I_△`, the sheaf of nilpotents on
//! the quotient is the module `𝒩 = I_△/I`. Its Čech cohomology over the
//! coordinate cover is ℤ^n-graded with zero- or one-dimensional chart
//! components per degree, decided by monomial membership; in characteristic
//! zero the dimensions equal the contribution of the multiplicative sheaf
//! `1+𝒩`, so they are reported as a table over a finite degree window.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::abelian::{rank, FieldModel};
use crate::abelian::{IntMatrix, Subgroup};
use crate::binoid::UnitGroupValue;
use crate::cech::{build_cech_complex, CechComplex, UnitSheafModel};
use crate::error::{Error, Result};
use crate::picard::{stanley_reisner_cohomology, CohomologyReport};
use crate::simplicial::SimplicialComplex;

/// A monomial ideal in `n` variables, stored by a minimal generator list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    variables: Vec<String>,
    generators: Vec<Vec<u64>>,
}

impl MonomialIdeal {
    /// Builds an ideal, dropping generators divisible by another generator.
    pub fn new(variables: Vec<String>, generators: Vec<Vec<u64>>) -> Result<Self> {
        let n = variables.len();
        for g in &generators {
            if g.len() != n {
                return Err(Error::BadIdeal(format!(
                    "generator {g:?} does not match {n} variables"
                )));
            }
            if g.iter().all(|&e| e == 0) {
                return Err(Error::BadIdeal("the unit monomial generates (1)".into()));
            }
        }
        Ok(MonomialIdeal {
            variables,
            generators: minimalize(generators),
        })
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn variable_count(&self) -> usize {
        self.variables.len()
    }

    pub fn generators(&self) -> &[Vec<u64>] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(|g| g.iter().all(|&e| e <= 1))
    }

    /// Minimal generators of the radical: squarefree parts, minimalized.
    pub fn radical_generators(&self) -> Vec<Vec<u64>> {
        minimalize(
            self.generators
                .iter()
                .map(|g| g.iter().map(|&e| e.min(1)).collect())
                .collect(),
        )
    }

    pub fn contains(&self, exponents: &[i64]) -> bool {
        self.generators.iter().any(|g| {
            g.iter()
                .zip(exponents)
                .all(|(&ge, &ae)| ae >= 0 && ge as i64 <= ae)
        })
    }
}

fn divides(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn minimalize(gens: Vec<Vec<u64>>) -> Vec<Vec<u64>> {
    let mut sorted: Vec<Vec<u64>> = gens;
    sorted.sort();
    sorted.dedup();
    let keep: Vec<Vec<u64>> = sorted
        .iter()
        .filter(|g| {
            !sorted
                .iter()
                .any(|other| *other != **g && divides(other, g))
        })
        .cloned()
        .collect();
    keep
}

/// A finite window of multidegrees, with per-variable bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBox {
    pub lower: Vec<i64>,
    pub upper: Vec<i64>,
}

impl DegreeBox {
    pub fn new(lower: Vec<i64>, upper: Vec<i64>) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(Error::BadIdeal("degree box bounds differ in length".into()));
        }
        if lower.iter().zip(&upper).any(|(l, u)| l > u) {
            return Err(Error::BadIdeal("degree box has lower > upper".into()));
        }
        Ok(DegreeBox { lower, upper })
    }

    /// The same range in every variable.
    pub fn uniform(n: usize, lower: i64, upper: i64) -> Result<Self> {
        DegreeBox::new(vec![lower; n], vec![upper; n])
    }

    pub fn dimension(&self) -> usize {
        self.lower.len()
    }

    /// All degree tuples in the box, lexicographically.
    pub fn degrees(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        let mut cur = self.lower.clone();
        if cur.is_empty() {
            return vec![Vec::new()];
        }
        loop {
            out.push(cur.clone());
            let mut i = cur.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < self.upper[i] {
                    cur[i] += 1;
                    let tail = i + 1;
                    cur[tail..].clone_from_slice(&self.lower[tail..]);
                    break;
                }
                if i == 0 {
                    return out;
                }
            }
        }
    }
}

/// Result of reducing a monomial quotient: the complex of the radical and
/// the variables whose pure powers lie in the ideal (these are not vertices).
#[derive(Clone, Debug)]
pub struct ReductionResult {
    pub complex: SimplicialComplex,
    pub removed_variables: Vec<String>,
}

/// The simplicial complex of the radical: faces are the subsets `F` with
/// the squarefree monomial `x_F` outside `√I`. The zero ideal gives the full
/// simplex.
pub fn reduction_complex(ideal: &MonomialIdeal) -> ReductionResult {
    let n = ideal.variable_count();
    assert!(n < 28, "variable count too large for subset enumeration");
    let radical = ideal.radical_generators();
    let supports: Vec<BTreeSet<usize>> = radical.iter().map(|g| support(g)).collect();
    let removed: BTreeSet<usize> = supports
        .iter()
        .filter(|s| s.len() == 1)
        .map(|s| *s.iter().next().unwrap())
        .collect();
    let alive: Vec<usize> = (0..n).filter(|v| !removed.contains(v)).collect();
    let m = alive.len();
    let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
    for mask in 0u64..(1u64 << m) {
        let subset: BTreeSet<usize> = (0..m)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| alive[i])
            .collect();
        if supports.iter().any(|s| s.is_subset(&subset)) {
            continue;
        }
        faces.insert((0..m).filter(|i| mask >> i & 1 == 1).collect());
    }
    let labels: Vec<String> = alive.iter().map(|&v| ideal.variables[v].clone()).collect();
    ReductionResult {
        complex: SimplicialComplex::from_faces(labels, faces),
        removed_variables: removed
            .into_iter()
            .map(|v| ideal.variables[v].clone())
            .collect(),
    }
}

fn support(v: &[u64]) -> BTreeSet<usize> {
    v.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, _)| i)
        .collect()
}

/// K-dimension of the degree-`a` component of `(I_△/I)` localized at `X_F`.
///
/// Inverting the variables in `F`, the component is spanned by the single
/// monomial `X^a`; it survives exactly when `a` is nonnegative off `F`,
/// some `F`-shift lands in the radical, and no `F`-shift lands in `I`.
fn chart_dimension(
    ideal: &MonomialIdeal,
    radical_supports: &[BTreeSet<usize>],
    chart: &[usize],
    degree: &[i64],
) -> bool {
    let n = ideal.variable_count();
    let in_chart = |v: usize| chart.binary_search(&v).is_ok();
    // nonnegative off the chart
    if (0..n).any(|v| !in_chart(v) && degree[v] < 0) {
        return false;
    }
    // maximal support after shifting: positive off-chart entries plus the chart
    let s: BTreeSet<usize> = (0..n).filter(|&v| in_chart(v) || degree[v] > 0).collect();
    if !radical_supports.iter().any(|sup| sup.is_subset(&s)) {
        return false;
    }
    // avoid I under every chart shift
    ideal
        .generators()
        .iter()
        .all(|g| (0..n).any(|v| !in_chart(v) && degree[v] < g[v] as i64))
}

/// Rank-one chart model for one multidegree of the nilpotent module.
struct NilpotentDegreeModel<'a> {
    ideal: &'a MonomialIdeal,
    radical_supports: Vec<BTreeSet<usize>>,
    degree: Vec<i64>,
}

impl UnitSheafModel for NilpotentDegreeModel<'_> {
    fn chart_count(&self) -> usize {
        self.ideal.variable_count()
    }

    fn value(&self, subset: &[usize]) -> UnitGroupValue {
        if chart_dimension(self.ideal, &self.radical_supports, subset, &self.degree) {
            UnitGroupValue::Group(Subgroup::full(1))
        } else {
            UnitGroupValue::Zero
        }
    }

    fn restrict(&self, _small: &[usize], _large: &[usize]) -> IntMatrix {
        IntMatrix::identity(1)
    }
}

/// Per-degree dimension table of the nilpotent Čech cohomology.
///
/// `entries[degree][j]` is the K-dimension of the degree component of
/// `H^j({D(X_i)}, 𝒩)`; degrees whose whole row vanishes are omitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NilpotentTable {
    pub chart_count: usize,
    pub entries: BTreeMap<Vec<i64>, Vec<usize>>,
}

impl NilpotentTable {
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Computes the nilpotent dimension table over the given degree window.
///
/// Only characteristic-zero field models are accepted: the identification of
/// the multiplicative group `1+𝒩` with the additive module cohomology uses
/// truncated exp/log and has no positive-characteristic counterpart here.
/// The symbolic model is treated as a characteristic-zero field.
pub fn nilpotent_cech_dimensions(
    ideal: &MonomialIdeal,
    window: &DegreeBox,
    model: FieldModel,
) -> Result<NilpotentTable> {
    if model.has_positive_characteristic() {
        return Err(Error::CharPUnsupported);
    }
    let n = ideal.variable_count();
    if window.dimension() != n {
        return Err(Error::BadIdeal(format!(
            "degree box has {} variables, ideal has {n}",
            window.dimension()
        )));
    }
    let radical = ideal.radical_generators();
    let radical_supports: Vec<BTreeSet<usize>> = radical.iter().map(|g| support(g)).collect();
    let mut entries = BTreeMap::new();
    for degree in window.degrees() {
        let model_for_degree = NilpotentDegreeModel {
            ideal,
            radical_supports: radical_supports.clone(),
            degree: degree.clone(),
        };
        let complex = build_cech_complex(&model_for_degree)?;
        let dims = rational_cohomology_dimensions(&complex);
        if dims.iter().any(|&d| d > 0) {
            entries.insert(degree, dims);
        }
    }
    Ok(NilpotentTable {
        chart_count: n,
        entries,
    })
}

/// Dimensions of the cohomology of a complex of ℚ-vector spaces presented by
/// integer matrices: `dim ker d^j − rank d^{j−1}`.
fn rational_cohomology_dimensions(complex: &CechComplex) -> Vec<usize> {
    let ranks = complex.ranks();
    if ranks.is_empty() {
        return Vec::new();
    }
    let map_ranks: Vec<usize> = complex.maps.iter().map(rank).collect();
    let mut out = Vec::with_capacity(ranks.len());
    for j in 0..ranks.len() {
        let outgoing = map_ranks.get(j).copied().unwrap_or(0);
        let incoming = if j == 0 { 0 } else { map_ranks[j - 1] };
        out.push(ranks[j] - outgoing - incoming);
    }
    out
}

/// The combined answer for a non-reduced monomial quotient: the
/// Stanley-Reisner cohomology of the reduction plus the nilpotent table.
/// The three kinds of summands are reported separately and never merged.
#[derive(Clone, Debug)]
pub struct NonreducedReport {
    pub reduced: CohomologyReport,
    pub removed_variables: Vec<String>,
    pub nilpotent: NilpotentTable,
}

pub fn nonreduced_report(
    ideal: &MonomialIdeal,
    model: FieldModel,
    window: &DegreeBox,
) -> Result<NonreducedReport> {
    if model.has_positive_characteristic() {
        return Err(Error::CharPUnsupported);
    }
    model.validate()?;
    let reduction = reduction_complex(ideal);
    let reduced = stanley_reisner_cohomology(&reduction.complex, model)?;
    let nilpotent = nilpotent_cech_dimensions(ideal, window, model)?;
    Ok(NonreducedReport {
        reduced,
        removed_variables: reduction.removed_variables,
        nilpotent,
    })
}
