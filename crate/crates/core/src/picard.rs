//! High-level answers: local Picard groups and full unit-sheaf cohomology
//! for simplicial binoids (direct Čech pipeline, closed-form link pipeline,
//! and their cross-check), integral binoids, Stanley-Reisner algebras with
//! field models, and graph fast paths.

use std::collections::BTreeMap;

use crate::abelian::{coefficient_value, FgAbelianGroup, FieldModel, GroupValue};
use crate::binoid::{difference_group, BinoidPresentation};
use crate::cech::{
    build_cech_complex, IntegralBinoidSheaf, SimplicialUnitSheaf, VertexComponentSheaf,
};
use crate::error::{Error, Result};
use crate::simplicial::{cohomology_z, homology_z, SimplicialComplex};

/// How a report's numbers were obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Direct,
    Formula,
    BothAgree,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::Direct => "direct",
            Provenance::Formula => "formula",
            Provenance::BothAgree => "both-agree",
        }
    }
}

/// One cohomological degree of a report.
#[derive(Clone, Debug, PartialEq)]
pub struct DegreeReport {
    pub j: usize,
    /// The integral (combinatorial) part of H^j.
    pub combinatorial: FgAbelianGroup,
    /// Decomposition of the combinatorial part along the vertices.
    pub per_vertex: BTreeMap<String, FgAbelianGroup>,
    /// Field part H^j(△, K*), present for Stanley-Reisner computations.
    pub field: Option<GroupValue>,
}

/// A full cohomology answer, one entry per degree starting at j = 0.
#[derive(Clone, Debug, PartialEq)]
pub struct CohomologyReport {
    pub degrees: Vec<DegreeReport>,
    pub provenance: Provenance,
    pub field_model: Option<FieldModel>,
}

impl CohomologyReport {
    pub fn combinatorial(&self, j: usize) -> FgAbelianGroup {
        self.degrees
            .get(j)
            .map(|d| d.combinatorial.clone())
            .unwrap_or_else(FgAbelianGroup::trivial)
    }

    /// The local Picard group: the degree-1 combinatorial part together with
    /// whatever field part lives there.
    pub fn picard_degree(&self) -> Option<&DegreeReport> {
        self.degrees.get(1)
    }

    /// Fully evaluated group in degree `j` when the field model is concrete
    /// (finite fields): combinatorial ⊕ field.
    pub fn total_group(&self, j: usize) -> Option<FgAbelianGroup> {
        let degree = self.degrees.get(j)?;
        match &degree.field {
            None => Some(degree.combinatorial.clone()),
            Some(v) => Some(degree.combinatorial.direct_sum(&v.concrete()?)),
        }
    }
}

fn require_all_singletons(k: &SimplicialComplex) -> Result<()> {
    for v in 0..k.vertex_count() {
        if !k.is_face(&[v]) {
            return Err(Error::VertexOutsideFacets(k.vertices()[v].clone()));
        }
    }
    Ok(())
}

/// Direct pipeline: assembles the Čech complex of the unit sheaf over the
/// coordinate cover and computes its cohomology, together with the
/// per-vertex decomposition of the complex.
pub fn picloc_simplicial_direct(k: &SimplicialComplex) -> Result<CohomologyReport> {
    require_all_singletons(k)?;
    let n = k.vertex_count();
    if n == 0 {
        return Ok(CohomologyReport {
            degrees: Vec::new(),
            provenance: Provenance::Direct,
            field_model: None,
        });
    }
    let top = k.dim().unwrap_or(-1).max(0) as usize;

    let full = build_cech_complex(&SimplicialUnitSheaf::new(k))?;
    let groups = full.cohomology()?;
    debug_assert!(
        groups.iter().skip(top + 1).all(FgAbelianGroup::is_trivial),
        "cohomology above the dimension must vanish"
    );

    let mut per_vertex_groups: Vec<Vec<FgAbelianGroup>> = Vec::with_capacity(n);
    for v in 0..n {
        let component = build_cech_complex(&VertexComponentSheaf::new(k, v))?;
        per_vertex_groups.push(component.cohomology()?);
    }

    let mut degrees = Vec::with_capacity(top + 1);
    for j in 0..=top {
        let combinatorial = groups
            .get(j)
            .cloned()
            .unwrap_or_else(FgAbelianGroup::trivial);
        let mut per_vertex = BTreeMap::new();
        let mut vertex_sum = FgAbelianGroup::trivial();
        for v in 0..n {
            let h = per_vertex_groups[v]
                .get(j)
                .cloned()
                .unwrap_or_else(FgAbelianGroup::trivial);
            vertex_sum = vertex_sum.direct_sum(&h);
            per_vertex.insert(k.vertices()[v].clone(), h);
        }
        debug_assert_eq!(
            combinatorial, vertex_sum,
            "vertex decomposition must sum to the full cohomology"
        );
        degrees.push(DegreeReport {
            j,
            combinatorial,
            per_vertex,
            field: None,
        });
    }
    Ok(CohomologyReport {
        degrees,
        provenance: Provenance::Direct,
        field_model: None,
    })
}

/// Closed-form pipeline: `H^j = ⊕_v H̃^{j−1}(lk(v), ℤ)`, assembled from the
/// reduced cohomology of the vertex links.
pub fn picloc_simplicial_formula(k: &SimplicialComplex) -> Result<CohomologyReport> {
    require_all_singletons(k)?;
    let n = k.vertex_count();
    if n == 0 {
        return Ok(CohomologyReport {
            degrees: Vec::new(),
            provenance: Provenance::Formula,
            field_model: None,
        });
    }
    let top = k.dim().unwrap_or(-1).max(0) as usize;

    let mut link_cohomology = Vec::with_capacity(n);
    for v in 0..n {
        let link = k.link(&[v])?;
        link_cohomology.push(cohomology_z(&link, true)?);
    }

    let mut degrees = Vec::with_capacity(top + 1);
    for j in 0..=top {
        let mut combinatorial = FgAbelianGroup::trivial();
        let mut per_vertex = BTreeMap::new();
        for v in 0..n {
            let h = link_cohomology[v].at(j as isize - 1);
            combinatorial = combinatorial.direct_sum(&h);
            per_vertex.insert(k.vertices()[v].clone(), h);
        }
        degrees.push(DegreeReport {
            j,
            combinatorial,
            per_vertex,
            field: None,
        });
    }
    Ok(CohomologyReport {
        degrees,
        provenance: Provenance::Formula,
        field_model: None,
    })
}

/// Runs both pipelines and checks that they agree degree by degree and
/// vertex by vertex. A mismatch signals an implementation bug, never a
/// property of the input.
pub fn crosscheck_simplicial(k: &SimplicialComplex) -> Result<CohomologyReport> {
    let direct = picloc_simplicial_direct(k)?;
    let formula = picloc_simplicial_formula(k)?;
    if direct.degrees.len() != formula.degrees.len() {
        return Err(Error::CrossCheckMismatch {
            degree: direct.degrees.len().min(formula.degrees.len()),
            direct: format!("{} degrees", direct.degrees.len()),
            formula: format!("{} degrees", formula.degrees.len()),
        });
    }
    for (d, f) in direct.degrees.iter().zip(&formula.degrees) {
        if d.combinatorial != f.combinatorial || d.per_vertex != f.per_vertex {
            return Err(Error::CrossCheckMismatch {
                degree: d.j,
                direct: d.combinatorial.to_string(),
                formula: f.combinatorial.to_string(),
            });
        }
    }
    let mut report = formula;
    report.provenance = Provenance::BothAgree;
    Ok(report)
}

/// Local Picard group and higher unit cohomology of an integral binoid via
/// the Čech complex of localization unit groups over the coordinate cover.
pub fn picloc_integral_binoid(p: &BinoidPresentation) -> Result<CohomologyReport> {
    let gamma = difference_group(p)?;
    let n = p.generator_count();
    let sheaf = IntegralBinoidSheaf::new(gamma, n);
    let complex = build_cech_complex(&sheaf)?;
    let groups = complex.cohomology()?;
    let degrees = groups
        .into_iter()
        .enumerate()
        .map(|(j, combinatorial)| DegreeReport {
            j,
            combinatorial,
            per_vertex: BTreeMap::new(),
            field: None,
        })
        .collect();
    Ok(CohomologyReport {
        degrees,
        provenance: Provenance::Direct,
        field_model: None,
    })
}

/// Full unit-sheaf cohomology of the Stanley-Reisner algebra of `k`:
/// the combinatorial part from the link formula plus the field part
/// `H^j(△, K*)` evaluated under `model`.
pub fn stanley_reisner_cohomology(
    k: &SimplicialComplex,
    model: FieldModel,
) -> Result<CohomologyReport> {
    model.validate()?;
    let mut report = picloc_simplicial_formula(k)?;
    if k.vertex_count() == 0 {
        report.field_model = Some(model);
        return Ok(report);
    }
    let homology = homology_z(k)?;
    for degree in &mut report.degrees {
        let j = degree.j as isize;
        degree.field = Some(coefficient_value(
            &homology.at(j),
            &homology.at(j - 1),
            model,
        )?);
    }
    report.field_model = Some(model);
    Ok(report)
}

/// Degree counts of the graph fast path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphCounts {
    /// Number of isolated vertices: rank of H⁰.
    pub isolated: usize,
    /// Σ (deg(v) − 1) over non-isolated vertices: rank of H¹ = Pic^loc.
    pub picard_rank: usize,
}

/// `(s, r)` for a graph by direct degree counting. All cohomology above
/// degree 1 vanishes for graphs.
pub fn graph_fast_path(k: &SimplicialComplex) -> Result<GraphCounts> {
    require_all_singletons(k)?;
    if k.dim().unwrap_or(-1) > 1 {
        return Err(Error::NotAGraph);
    }
    let degrees = k.vertex_degrees();
    let isolated = degrees.iter().filter(|&&d| d == 0).count();
    let picard_rank = degrees.iter().filter(|&&d| d > 0).map(|&d| d - 1).sum();
    Ok(GraphCounts {
        isolated,
        picard_rank,
    })
}

/// Rank bookkeeping along the graded unit sequence of a connected graph:
/// `0 → ℤ → ℤ^{|E|} → ℤ^{2|E|−|V|} → H¹(△, ℤ) → 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct GradedRankReport {
    pub global_units_rank: usize,
    pub proj_picard_rank: usize,
    pub local_picard_rank: usize,
    pub cyclomatic: usize,
    /// Exactness bookkeeping: cyclomatic = |E| − |V| + 1 and the alternating
    /// rank sum vanishes, cross-checked against the computed rank of H¹(△,ℤ).
    pub identity_verified: bool,
}

/// Verifies the exact-sequence ranks for a connected graph.
pub fn graph_graded_report(k: &SimplicialComplex) -> Result<GradedRankReport> {
    require_all_singletons(k)?;
    let dim = k.dim().unwrap_or(-1);
    if dim > 1 {
        return Err(Error::NotAGraph);
    }
    if dim != 1 {
        return Err(Error::Disconnected);
    }
    if k.component_count() != 1 {
        return Err(Error::Disconnected);
    }
    let v = k.vertex_count();
    let e = k.faces_of_dim(1).len();
    let proj_picard_rank = e;
    let local_picard_rank = 2 * e - v;
    let cyclomatic = e + 1 - v;

    let h1 = cohomology_z(k, false)?.at(1);
    let fast = graph_fast_path(k)?;
    let identity_verified = h1.is_free()
        && h1.free_rank() == cyclomatic
        && fast.picard_rank == local_picard_rank
        && 1 + local_picard_rank == e + cyclomatic;
    Ok(GradedRankReport {
        global_units_rank: 1,
        proj_picard_rank,
        local_picard_rank,
        cyclomatic,
        identity_verified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::tests_support::{
        hollow_triangle, labels, projective_plane, two_triangles,
    };

    #[test]
    fn hollow_triangle_both_pipelines() {
        let t = hollow_triangle();
        let direct = picloc_simplicial_direct(&t).unwrap();
        assert_eq!(direct.combinatorial(0), FgAbelianGroup::trivial());
        assert_eq!(direct.combinatorial(1), FgAbelianGroup::free(3));
        let formula = picloc_simplicial_formula(&t).unwrap();
        assert_eq!(formula.combinatorial(1), FgAbelianGroup::free(3));
        // each link is two points: one Z per vertex in degree 1
        for h in formula.degrees[1].per_vertex.values() {
            assert_eq!(h, &FgAbelianGroup::free(1));
        }
        let checked = crosscheck_simplicial(&t).unwrap();
        assert_eq!(checked.provenance, Provenance::BothAgree);
    }

    #[test]
    fn simplex_is_acyclic() {
        let simplex =
            SimplicialComplex::from_facets(labels(&["a", "b", "c"]), &[labels(&["a", "b", "c"])])
                .unwrap();
        let report = crosscheck_simplicial(&simplex).unwrap();
        for d in &report.degrees {
            assert!(d.combinatorial.is_trivial());
        }
    }

    #[test]
    fn isolated_vertices_contribute_in_degree_zero() {
        let k =
            SimplicialComplex::from_facets(labels(&["x", "y"]), &[labels(&["x"]), labels(&["y"])])
                .unwrap();
        let report = crosscheck_simplicial(&k).unwrap();
        assert_eq!(report.combinatorial(0), FgAbelianGroup::free(2));
    }

    #[test]
    fn two_triangle_complex_is_trivial() {
        let k = two_triangles();
        let report = crosscheck_simplicial(&k).unwrap();
        assert_eq!(report.combinatorial(1), FgAbelianGroup::trivial());
        let sr = stanley_reisner_cohomology(&k, FieldModel::Symbolic).unwrap();
        assert!(sr.degrees[1].field.as_ref().unwrap().is_trivial());
    }

    #[test]
    fn integral_binoid_pipelines() {
        let p = crate::binoid::tests_support::binoid_x_plus_y_eq_2z();
        let report = picloc_integral_binoid(&p).unwrap();
        assert_eq!(report.combinatorial(0), FgAbelianGroup::trivial());
        assert_eq!(report.combinatorial(1), FgAbelianGroup::cyclic(2));

        let p = crate::binoid::tests_support::binoid_x_plus_y_eq_z_plus_w();
        let report = picloc_integral_binoid(&p).unwrap();
        assert_eq!(report.combinatorial(1), FgAbelianGroup::free(1));
        assert_eq!(report.combinatorial(2), FgAbelianGroup::trivial());

        // the free binoid has a simplex spectrum
        let free = BinoidPresentation::new(labels(&["a", "b", "c"]), vec![], vec![]).unwrap();
        let report = picloc_integral_binoid(&free).unwrap();
        assert_eq!(report.combinatorial(1), FgAbelianGroup::trivial());
    }

    #[test]
    fn stanley_reisner_triangle() {
        let t = hollow_triangle();
        let sym = stanley_reisner_cohomology(&t, FieldModel::Symbolic).unwrap();
        // H⁰ = K*, H¹ = Z³ ⊕ K*
        assert!(sym.combinatorial(0).is_trivial());
        assert_eq!(sym.degrees[0].field.as_ref().unwrap().kstar_copies, 1);
        assert_eq!(sym.combinatorial(1), FgAbelianGroup::free(3));
        assert_eq!(sym.degrees[1].field.as_ref().unwrap().kstar_copies, 1);

        let fq = stanley_reisner_cohomology(&t, FieldModel::FiniteField(7)).unwrap();
        let total = fq.total_group(1).unwrap();
        assert_eq!(
            total,
            FgAbelianGroup::free(3).direct_sum(&FgAbelianGroup::cyclic(6))
        );
    }

    #[test]
    fn graph_fast_paths() {
        let t = hollow_triangle();
        let counts = graph_fast_path(&t).unwrap();
        assert_eq!(
            counts,
            GraphCounts {
                isolated: 0,
                picard_rank: 3
            }
        );

        let edge =
            SimplicialComplex::from_facets(labels(&["a", "b"]), &[labels(&["a", "b"])]).unwrap();
        assert_eq!(
            graph_fast_path(&edge).unwrap(),
            GraphCounts {
                isolated: 0,
                picard_rank: 0
            }
        );

        let edge_plus_point = SimplicialComplex::from_facets(
            labels(&["a", "b", "c"]),
            &[labels(&["a", "b"]), labels(&["c"])],
        )
        .unwrap();
        assert_eq!(
            graph_fast_path(&edge_plus_point).unwrap(),
            GraphCounts {
                isolated: 1,
                picard_rank: 0
            }
        );

        assert!(matches!(
            graph_fast_path(&two_triangles()),
            Err(Error::NotAGraph)
        ));
    }

    #[test]
    fn graded_rank_reports() {
        let t = hollow_triangle();
        let r = graph_graded_report(&t).unwrap();
        assert_eq!(
            (
                r.global_units_rank,
                r.proj_picard_rank,
                r.local_picard_rank,
                r.cyclomatic
            ),
            (1, 3, 3, 1)
        );
        assert!(r.identity_verified);

        // path on 4 vertices (a tree)
        let tree = SimplicialComplex::from_facets(
            labels(&["a", "b", "c", "d"]),
            &[
                labels(&["a", "b"]),
                labels(&["b", "c"]),
                labels(&["c", "d"]),
            ],
        )
        .unwrap();
        let r = graph_graded_report(&tree).unwrap();
        assert_eq!(
            (
                r.global_units_rank,
                r.proj_picard_rank,
                r.local_picard_rank,
                r.cyclomatic
            ),
            (1, 3, 2, 0)
        );
        assert!(r.identity_verified);

        let edge =
            SimplicialComplex::from_facets(labels(&["a", "b"]), &[labels(&["a", "b"])]).unwrap();
        let r = graph_graded_report(&edge).unwrap();
        assert_eq!(
            (
                r.global_units_rank,
                r.proj_picard_rank,
                r.local_picard_rank,
                r.cyclomatic
            ),
            (1, 1, 0, 0)
        );

        let disconnected = SimplicialComplex::from_facets(
            labels(&["a", "b", "c"]),
            &[labels(&["a", "b"]), labels(&["c"])],
        )
        .unwrap();
        assert!(matches!(
            graph_graded_report(&disconnected),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn torsion_witness_in_degree_three() {
        // cone over the projective plane: the apex link is RP², whose H̃²
        // carries Z/2, so H³ of the punctured spectrum has torsion
        let rp2 = projective_plane();
        let mut vertices = labels(&["a"]);
        vertices.extend(rp2.vertices().iter().cloned());
        let facets: Vec<Vec<String>> = rp2
            .facets()
            .iter()
            .map(|f| {
                let mut facet = labels(&["a"]);
                facet.extend(rp2.label_face(f));
                facet
            })
            .collect();
        let cone = SimplicialComplex::from_facets(vertices, &facets).unwrap();
        let report = crosscheck_simplicial(&cone).unwrap();
        assert_eq!(report.combinatorial(1), FgAbelianGroup::trivial());
        assert_eq!(report.combinatorial(2), FgAbelianGroup::trivial());
        assert_eq!(report.combinatorial(3), FgAbelianGroup::cyclic(2));
        assert_eq!(report.degrees[3].per_vertex["a"], FgAbelianGroup::cyclic(2));
    }
}
