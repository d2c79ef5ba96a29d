//! Simplicial complexes, links, and simplicial (co)homology over ℤ, ℤ/m and
//! field-model coefficients.
//!
//! A complex is stored by its full face family over an ordered vertex list;
//! the vertex order is fixed at construction time and determines all
//! boundary signs. Two degenerate values are representable: the void complex
//! (no faces at all) and the irrelevant complex (faces = {∅} only). Vertices
//! that belong to no face are allowed — links suspend the usual convention
//! that every singleton is a face — but [`SimplicialComplex::from_facets`]
//! rejects them.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;

use crate::abelian::{
    coefficient_value, complex_cohomology, complex_cohomology_mod, FgAbelianGroup, FieldModel,
    GroupValue, IntMatrix,
};
use crate::error::{Error, Result};

/// A finite abstract simplicial complex on an ordered vertex list.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    /// Every face, as a sorted vector of vertex indices; contains the empty
    /// face unless the complex is void.
    faces: BTreeSet<Vec<usize>>,
}

impl SimplicialComplex {
    /// The complex with no faces at all.
    pub fn void() -> Self {
        SimplicialComplex {
            vertices: Vec::new(),
            faces: BTreeSet::new(),
        }
    }

    /// The complex whose only face is the empty face.
    pub fn irrelevant(vertices: Vec<String>) -> Self {
        let mut faces = BTreeSet::new();
        faces.insert(Vec::new());
        SimplicialComplex { vertices, faces }
    }

    /// Builds a complex from facet lists of vertex labels.
    ///
    /// The vertex order of `vertices` is the global orientation order. Facets
    /// are closed downward; contained facets are dropped. A vertex that
    /// appears in no facet is an error: list it as a singleton facet to keep
    /// it as an isolated vertex.
    pub fn from_facets(vertices: Vec<String>, facets: &[Vec<String>]) -> Result<Self> {
        let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
        faces.insert(Vec::new());
        let index_of = |label: &String| -> Result<usize> {
            vertices
                .iter()
                .position(|v| v == label)
                .ok_or_else(|| Error::UnknownVertex(label.clone()))
        };
        for facet in facets {
            let mut idx: Vec<usize> = facet.iter().map(index_of).collect::<Result<Vec<usize>>>()?;
            idx.sort_unstable();
            idx.dedup();
            insert_closure(&mut faces, &idx);
        }
        let complex = SimplicialComplex { vertices, faces };
        for (i, label) in complex.vertices.iter().enumerate() {
            if !complex.faces.contains(&vec![i]) {
                return Err(Error::VertexOutsideFacets(label.clone()));
            }
        }
        Ok(complex)
    }

    /// Internal constructor from an already-closed face family.
    pub(crate) fn from_faces(vertices: Vec<String>, faces: BTreeSet<Vec<usize>>) -> Self {
        SimplicialComplex { vertices, faces }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.faces.len() == 1 && self.faces.contains(&Vec::new())
    }

    /// Dimension: `None` for the void complex, `Some(-1)` for the irrelevant
    /// complex.
    pub fn dim(&self) -> Option<isize> {
        self.faces.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn faces(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.faces.iter()
    }

    /// Faces of dimension `d` in lexicographic order of their sorted vertex
    /// index tuples.
    pub fn faces_of_dim(&self, d: isize) -> Vec<Vec<usize>> {
        let size = (d + 1) as usize;
        self.faces
            .iter()
            .filter(|f| f.len() == size)
            .cloned()
            .collect()
    }

    pub fn is_face(&self, face: &[usize]) -> bool {
        debug_assert!(face.windows(2).all(|w| w[0] < w[1]));
        self.faces.contains(face)
    }

    /// Maximal faces, in lexicographic order.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.faces
            .iter()
            .filter(|f| {
                !self
                    .faces
                    .iter()
                    .any(|g| g.len() > f.len() && f.iter().all(|v| g.binary_search(v).is_ok()))
            })
            .cloned()
            .collect()
    }

    pub fn label_face(&self, face: &[usize]) -> Vec<String> {
        face.iter().map(|&v| self.vertices[v].clone()).collect()
    }

    /// Link of the face `F`: all `G ⊆ V∖F` with `F ∪ G` a face, as a complex
    /// on the vertex list `V∖F` (in inherited order). The link of a facet is
    /// the irrelevant complex. Singletons of `V∖F` need not be faces here.
    pub fn link(&self, face: &[usize]) -> Result<SimplicialComplex> {
        if !self.is_face(face) {
            return Err(Error::NotAFace(format!("{face:?}")));
        }
        let remaining: Vec<usize> = (0..self.vertices.len())
            .filter(|v| !face.contains(v))
            .collect();
        let new_index: std::collections::BTreeMap<usize, usize> = remaining
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        let mut link_faces: BTreeSet<Vec<usize>> = BTreeSet::new();
        for g in &self.faces {
            if g.iter().any(|v| face.contains(v)) {
                continue;
            }
            let mut union: Vec<usize> = g.iter().chain(face.iter()).copied().collect();
            union.sort_unstable();
            if self.faces.contains(&union) {
                link_faces.insert(g.iter().map(|v| new_index[v]).collect());
            }
        }
        let labels = remaining
            .iter()
            .map(|&v| self.vertices[v].clone())
            .collect();
        Ok(SimplicialComplex::from_faces(labels, link_faces))
    }

    /// Restriction to a vertex subset `W`: all faces contained in `W`, as a
    /// complex on the vertex list `W` (in inherited order).
    pub fn restriction(&self, w: &BTreeSet<usize>) -> SimplicialComplex {
        let remaining: Vec<usize> = (0..self.vertices.len()).filter(|v| w.contains(v)).collect();
        let new_index: std::collections::BTreeMap<usize, usize> = remaining
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        let faces = self
            .faces
            .iter()
            .filter(|f| f.iter().all(|v| w.contains(v)))
            .map(|f| f.iter().map(|v| new_index[v]).collect())
            .collect();
        let labels = remaining
            .iter()
            .map(|&v| self.vertices[v].clone())
            .collect();
        SimplicialComplex::from_faces(labels, faces)
    }

    /// Degrees of all vertices when the complex is a graph (dim ≤ 1).
    pub fn vertex_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.vertices.len()];
        for f in self.faces_of_dim(1) {
            deg[f[0]] += 1;
            deg[f[1]] += 1;
        }
        deg
    }

    /// Number of connected components of the face-support graph (vertices
    /// that are faces, joined by edge faces).
    pub fn component_count(&self) -> usize {
        let verts: Vec<usize> = self.faces_of_dim(0).into_iter().map(|f| f[0]).collect();
        let mut parent: std::collections::BTreeMap<usize, usize> =
            verts.iter().map(|&v| (v, v)).collect();
        fn find(parent: &mut std::collections::BTreeMap<usize, usize>, v: usize) -> usize {
            let p = parent[&v];
            if p == v {
                v
            } else {
                let root = find(parent, p);
                parent.insert(v, root);
                root
            }
        }
        for e in self.faces_of_dim(1) {
            let (a, b) = (find(&mut parent, e[0]), find(&mut parent, e[1]));
            if a != b {
                parent.insert(a, b);
            }
        }
        let mut roots = BTreeSet::new();
        for &v in &verts {
            roots.insert(find(&mut parent, v));
        }
        roots.len()
    }
}

fn insert_closure(faces: &mut BTreeSet<Vec<usize>>, facet: &[usize]) {
    let n = facet.len();
    assert!(n < 64, "facet too large");
    for mask in 0u64..(1u64 << n) {
        let subset: Vec<usize> = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| facet[i])
            .collect();
        faces.insert(subset);
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return write!(f, "SimplicialComplex(void)");
        }
        if self.is_irrelevant() {
            return write!(f, "SimplicialComplex(irrelevant)");
        }
        let facets: Vec<String> = self
            .facets()
            .iter()
            .map(|face| self.label_face(face).join(" "))
            .collect();
        write!(f, "SimplicialComplex{{{}}}", facets.join(", "))
    }
}

/// Integral cochain complex of a simplicial complex.
///
/// `maps[i]` is the coboundary from degree `min_degree + i` to the next
/// degree, in the column-vector convention. The reduced variant starts at
/// degree −1 with the empty face.
pub struct CochainComplexZ {
    pub min_degree: isize,
    pub ranks: Vec<usize>,
    pub maps: Vec<IntMatrix>,
    pub reduced: bool,
}

/// Coboundary matrix between the given face lists of consecutive dimensions.
/// The entry for `F ⊂ G` with `G∖F = {v}` is `(−1)^k` where `k` is the
/// position of `v` in the sorted tuple `G`.
pub(crate) fn coboundary_matrix(lower: &[Vec<usize>], upper: &[Vec<usize>]) -> IntMatrix {
    let col_of: std::collections::BTreeMap<&Vec<usize>, usize> =
        lower.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut m = IntMatrix::zero(upper.len(), lower.len());
    for (row, g) in upper.iter().enumerate() {
        for k in 0..g.len() {
            let mut f = g.clone();
            f.remove(k);
            if let Some(&col) = col_of.get(&f) {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                m.set(row, col, BigInt::from(sign));
            }
        }
    }
    m
}

/// The cochain complex of `k` with ℤ coefficients.
pub fn cochain_complex(k: &SimplicialComplex, reduced: bool) -> Result<CochainComplexZ> {
    if reduced && k.is_void() {
        return Err(Error::VoidComplex);
    }
    let min_degree: isize = if reduced { -1 } else { 0 };
    let Some(dim) = k.dim() else {
        return Ok(CochainComplexZ {
            min_degree,
            ranks: Vec::new(),
            maps: Vec::new(),
            reduced,
        });
    };
    if dim < min_degree {
        return Ok(CochainComplexZ {
            min_degree,
            ranks: Vec::new(),
            maps: Vec::new(),
            reduced,
        });
    }
    let mut per_degree: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut d = min_degree;
    while d <= dim {
        per_degree.push(k.faces_of_dim(d));
        d += 1;
    }
    let ranks: Vec<usize> = per_degree.iter().map(|f| f.len()).collect();
    let maps: Vec<IntMatrix> = per_degree
        .windows(2)
        .map(|w| coboundary_matrix(&w[0], &w[1]))
        .collect();
    Ok(CochainComplexZ {
        min_degree,
        ranks,
        maps,
        reduced,
    })
}

/// Cohomology groups indexed by degree, with everything outside the stored
/// range trivial. Reduced cohomology starts at degree −1; the conventions
/// H̃^{−1}({∅}) = ℤ and H̃^j(void) = 0 come out of the complexes themselves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedGroups {
    pub min_degree: isize,
    pub groups: Vec<FgAbelianGroup>,
}

impl GradedGroups {
    pub fn empty(min_degree: isize) -> Self {
        GradedGroups {
            min_degree,
            groups: Vec::new(),
        }
    }

    pub fn at(&self, j: isize) -> FgAbelianGroup {
        let idx = j - self.min_degree;
        if idx < 0 || idx as usize >= self.groups.len() {
            FgAbelianGroup::trivial()
        } else {
            self.groups[idx as usize].clone()
        }
    }

    pub fn max_degree(&self) -> isize {
        self.min_degree + self.groups.len() as isize - 1
    }
}

fn complex_to_groups(c: &CochainComplexZ) -> Result<GradedGroups> {
    let groups = if c.ranks.is_empty() {
        Vec::new()
    } else if c.maps.is_empty() {
        vec![FgAbelianGroup::free(c.ranks[0])]
    } else {
        complex_cohomology(&c.maps)?
    };
    Ok(GradedGroups {
        min_degree: c.min_degree,
        groups,
    })
}

/// Simplicial cohomology with ℤ coefficients (reduced or not).
pub fn cohomology_z(k: &SimplicialComplex, reduced: bool) -> Result<GradedGroups> {
    complex_to_groups(&cochain_complex(k, reduced)?)
}

/// Simplicial homology with ℤ coefficients, computed from the transposed
/// cochain complex.
pub fn homology_z(k: &SimplicialComplex) -> Result<GradedGroups> {
    let c = cochain_complex(k, false)?;
    if c.ranks.is_empty() {
        return Ok(GradedGroups::empty(0));
    }
    if c.maps.is_empty() {
        return Ok(GradedGroups {
            min_degree: 0,
            groups: vec![FgAbelianGroup::free(c.ranks[0])],
        });
    }
    // chain complex ∂_j = (d^{j-1})^T; re-index descending to feed the
    // ascending cohomology routine
    let maps: Vec<IntMatrix> = c.maps.iter().rev().map(|m| m.transpose()).collect();
    let mut groups = complex_cohomology(&maps)?;
    groups.reverse();
    Ok(GradedGroups {
        min_degree: 0,
        groups,
    })
}

/// Cohomology with ℤ/m coefficients by direct mod-m cochain computation.
pub fn cohomology_mod(k: &SimplicialComplex, modulus: &BigInt) -> Result<GradedGroups> {
    let c = cochain_complex(k, false)?;
    let groups = if c.ranks.is_empty() {
        Vec::new()
    } else if c.maps.is_empty() {
        vec![FgAbelianGroup::from_orders(std::iter::repeat_n(
            modulus.clone(),
            c.ranks[0],
        ))]
    } else {
        complex_cohomology_mod(&c.maps, modulus)?
    };
    Ok(GradedGroups {
        min_degree: 0,
        groups,
    })
}

/// Cohomology with coefficients in `K*` under the given field model,
/// assembled by universal coefficients from integral homology.
pub fn cohomology_with_field(k: &SimplicialComplex, model: FieldModel) -> Result<Vec<GroupValue>> {
    if k.is_void() {
        return Err(Error::VoidComplex);
    }
    let homology = homology_z(k)?;
    let top = homology.max_degree().max(0);
    let mut out = Vec::new();
    for j in 0..=top {
        out.push(coefficient_value(
            &homology.at(j),
            &homology.at(j - 1),
            model,
        )?);
    }
    Ok(out)
}

#[cfg(test)]
pub(crate) mod tests_support {
    use super::SimplicialComplex;

    pub(crate) fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    pub(crate) fn hollow_triangle() -> SimplicialComplex {
        SimplicialComplex::from_facets(
            labels(&["x", "y", "z"]),
            &[
                labels(&["x", "y"]),
                labels(&["y", "z"]),
                labels(&["x", "z"]),
            ],
        )
        .unwrap()
    }

    pub(crate) fn two_triangles() -> SimplicialComplex {
        SimplicialComplex::from_facets(
            labels(&["x", "y", "z", "w"]),
            &[labels(&["x", "y", "z"]), labels(&["y", "z", "w"])],
        )
        .unwrap()
    }

    /// The 6-vertex triangulation of the real projective plane.
    pub(crate) fn projective_plane() -> SimplicialComplex {
        let v = labels(&["1", "2", "3", "4", "5", "6"]);
        let facets: Vec<Vec<String>> = [
            ["1", "2", "3"],
            ["1", "3", "4"],
            ["1", "4", "5"],
            ["1", "5", "6"],
            ["1", "2", "6"],
            ["2", "3", "5"],
            ["3", "4", "6"],
            ["2", "4", "5"],
            ["3", "5", "6"],
            ["2", "4", "6"],
        ]
        .iter()
        .map(|f| labels(f))
        .collect();
        SimplicialComplex::from_facets(v, &facets).unwrap()
    }
}
