//! Čech complexes over the coordinate cover for arbitrary unit-sheaf models,
//! and constant-sheaf Čech complexes.
//!
//! A model assigns to every nonempty chart subset `F ⊆ [n]` a unit group and
//! to every inclusion `F ⊂ G` a restriction matrix. The complex is assembled
//! blockwise: the block map from `(F, p)` to `(G, p+1)` with `G = F ∪ {v}`
//! is `(−1)^k · restrict(F, G)` where `k` is the position of `v` in the
//! sorted tuple `G`. Blocks for zero groups are omitted.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::abelian::{
    complex_cohomology, complex_cohomology_mod, FgAbelianGroup, IntMatrix, Subgroup,
};
use crate::binoid::{
    localization_unit_group_in, simplicial_unit_sheaf_value, DifferenceGroup, UnitGroupValue,
};
use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;

/// A sheaf of unit groups on the coordinate cover `{D(x_i)}`.
pub trait UnitSheafModel {
    fn chart_count(&self) -> usize;

    /// Value on the chart `D(x_F)`; `subset` is sorted and nonempty.
    fn value(&self, subset: &[usize]) -> UnitGroupValue;

    /// Matrix of the restriction `value(small) → value(large)` in the stored
    /// bases, for `small ⊂ large` with both values nonzero.
    fn restrict(&self, small: &[usize], large: &[usize]) -> IntMatrix;
}

/// One direct summand of a Čech group: the chart subset and the rank of its
/// unit group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CechBlock {
    pub face: Vec<usize>,
    pub rank: usize,
}

/// The assembled complex: blocks per degree `p` (charts of size `p+1`, in
/// lexicographic order) and the coboundary matrices between consecutive
/// degrees.
#[derive(Clone, Debug)]
pub struct CechComplex {
    pub degrees: Vec<Vec<CechBlock>>,
    pub maps: Vec<IntMatrix>,
}

impl CechComplex {
    /// Total rank per degree.
    pub fn ranks(&self) -> Vec<usize> {
        self.degrees
            .iter()
            .map(|blocks| blocks.iter().map(|b| b.rank).sum())
            .collect()
    }

    pub fn cohomology(&self) -> Result<Vec<FgAbelianGroup>> {
        cech_cohomology(self)
    }

    /// Debug dump: per degree, the face list and the coboundary matrix in
    /// the one-row-per-line integer format.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (p, blocks) in self.degrees.iter().enumerate() {
            let faces: Vec<String> = blocks
                .iter()
                .map(|b| {
                    format!(
                        "{{{}}}:{}",
                        b.face
                            .iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>()
                            .join(","),
                        b.rank
                    )
                })
                .collect();
            let _ = writeln!(out, "degree {p}: {}", faces.join(" "));
            if p < self.maps.len() {
                let _ = write!(out, "{}", self.maps[p]);
            }
        }
        out
    }
}

/// Combinations of `0..n` of size `k` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Builds the Čech complex of a unit-sheaf model over the full coordinate
/// cover, degrees `0..n−1`.
///
/// Restriction coherence is spot-checked on all chains `F ⊂ G ⊂ H` with
/// `|H| ≤ 3`, and `∂∘∂ = 0` is verified on the assembled matrices; failures
/// surface as [`Error::RestrictionIncoherent`].
pub fn build_cech_complex(model: &dyn UnitSheafModel) -> Result<CechComplex> {
    let n = model.chart_count();
    check_coherence(model)?;

    let mut degrees: Vec<Vec<CechBlock>> = Vec::new();
    for p in 0..n {
        let blocks: Vec<CechBlock> = combinations(n, p + 1)
            .into_iter()
            .filter_map(|face| {
                let rank = model.value(&face).rank();
                (rank > 0).then_some(CechBlock { face, rank })
            })
            .collect();
        degrees.push(blocks);
    }

    let mut maps = Vec::new();
    for p in 0..n.saturating_sub(1) {
        maps.push(assemble_map(model, &degrees[p], &degrees[p + 1]));
    }

    for (p, pair) in maps.windows(2).enumerate() {
        if !pair[1].mul(&pair[0]).is_zero() {
            return Err(Error::RestrictionIncoherent(format!(
                "∂∘∂ ≠ 0 between degrees {p} and {}",
                p + 2
            )));
        }
    }

    Ok(CechComplex { degrees, maps })
}

fn assemble_map(model: &dyn UnitSheafModel, lower: &[CechBlock], upper: &[CechBlock]) -> IntMatrix {
    let col_offsets = offsets(lower);
    let row_offsets = offsets(upper);
    let upper_index: BTreeMap<&Vec<usize>, usize> = upper
        .iter()
        .enumerate()
        .map(|(i, b)| (&b.face, i))
        .collect();
    let total_rows: usize = upper.iter().map(|b| b.rank).sum();
    let total_cols: usize = lower.iter().map(|b| b.rank).sum();
    let mut out = IntMatrix::zero(total_rows, total_cols);
    let n = model.chart_count();
    for (bi, block) in lower.iter().enumerate() {
        for v in 0..n {
            if block.face.contains(&v) {
                continue;
            }
            let mut g: Vec<usize> = block
                .face
                .iter()
                .copied()
                .chain(std::iter::once(v))
                .collect();
            g.sort_unstable();
            let Some(&ui) = upper_index.get(&g) else {
                continue;
            };
            let k = g.iter().position(|&w| w == v).unwrap();
            let mut sub = model.restrict(&block.face, &g);
            if k % 2 == 1 {
                sub.negate_in_place();
            }
            out.set_block(row_offsets[ui], col_offsets[bi], &sub);
        }
    }
    out
}

fn offsets(blocks: &[CechBlock]) -> Vec<usize> {
    let mut out = Vec::with_capacity(blocks.len());
    let mut acc = 0;
    for b in blocks {
        out.push(acc);
        acc += b.rank;
    }
    out
}

fn check_coherence(model: &dyn UnitSheafModel) -> Result<()> {
    let n = model.chart_count();
    let mut small_subsets: Vec<Vec<usize>> = Vec::new();
    for k in 1..=n.min(3) {
        small_subsets.extend(combinations(n, k));
    }
    let nonzero: Vec<&Vec<usize>> = small_subsets
        .iter()
        .filter(|s| model.value(s).rank() > 0)
        .collect();
    for f in &nonzero {
        for g in &nonzero {
            if !is_strict_subset(f, g) {
                continue;
            }
            for h in &nonzero {
                if !is_strict_subset(g, h) {
                    continue;
                }
                let direct = model.restrict(f, h);
                let composed = model.restrict(g, h).mul(&model.restrict(f, g));
                if direct != composed {
                    return Err(Error::RestrictionIncoherent(format!(
                        "restriction along {f:?} ⊂ {g:?} ⊂ {h:?} does not compose"
                    )));
                }
            }
        }
    }
    Ok(())
}

fn is_strict_subset(a: &[usize], b: &[usize]) -> bool {
    a.len() < b.len() && a.iter().all(|v| b.binary_search(v).is_ok())
}

/// Cohomology of the assembled complex, degrees `0..n−1`.
pub fn cech_cohomology(c: &CechComplex) -> Result<Vec<FgAbelianGroup>> {
    let ranks = c.ranks();
    if ranks.is_empty() {
        return Ok(Vec::new());
    }
    if c.maps.is_empty() {
        return Ok(vec![FgAbelianGroup::free(ranks[0])]);
    }
    complex_cohomology(&c.maps)
}

/// The unit sheaf of a simplicial binoid on its coordinate cover:
/// `ℤ^F` on faces, zero on non-faces, with coordinate inclusions as
/// restriction maps.
pub struct SimplicialUnitSheaf<'a> {
    complex: &'a SimplicialComplex,
}

impl<'a> SimplicialUnitSheaf<'a> {
    pub fn new(complex: &'a SimplicialComplex) -> Self {
        SimplicialUnitSheaf { complex }
    }
}

impl UnitSheafModel for SimplicialUnitSheaf<'_> {
    fn chart_count(&self) -> usize {
        self.complex.vertex_count()
    }

    fn value(&self, subset: &[usize]) -> UnitGroupValue {
        simplicial_unit_sheaf_value(self.complex, subset)
    }

    fn restrict(&self, small: &[usize], large: &[usize]) -> IntMatrix {
        let a = simplicial_unit_sheaf_value(self.complex, small);
        let b = simplicial_unit_sheaf_value(self.complex, large);
        match (a.as_subgroup(), b.as_subgroup()) {
            (Some(sa), Some(sb)) => sa
                .inclusion_matrix(sb)
                .expect("face unit groups nest along inclusions"),
            _ => unreachable!("restrict called on a zero block"),
        }
    }
}

/// The single-vertex component of the simplicial unit sheaf: one copy of ℤ
/// on every face containing the vertex.
pub struct VertexComponentSheaf<'a> {
    complex: &'a SimplicialComplex,
    vertex: usize,
}

impl<'a> VertexComponentSheaf<'a> {
    pub fn new(complex: &'a SimplicialComplex, vertex: usize) -> Self {
        VertexComponentSheaf { complex, vertex }
    }
}

impl UnitSheafModel for VertexComponentSheaf<'_> {
    fn chart_count(&self) -> usize {
        self.complex.vertex_count()
    }

    fn value(&self, subset: &[usize]) -> UnitGroupValue {
        if subset.contains(&self.vertex) && self.complex.is_face(subset) {
            UnitGroupValue::Group(Subgroup::full(1))
        } else {
            UnitGroupValue::Zero
        }
    }

    fn restrict(&self, _small: &[usize], _large: &[usize]) -> IntMatrix {
        IntMatrix::identity(1)
    }
}

/// The unit sheaf of an integral, cancellative, torsion-free binoid:
/// localization unit groups inside the difference group, with subgroup
/// inclusions as restriction maps. Values are cached per chart.
pub struct IntegralBinoidSheaf {
    gamma: DifferenceGroup,
    generators: usize,
    cache: RefCell<BTreeMap<Vec<usize>, Subgroup>>,
}

impl IntegralBinoidSheaf {
    pub fn new(gamma: DifferenceGroup, generators: usize) -> Self {
        IntegralBinoidSheaf {
            gamma,
            generators,
            cache: RefCell::new(BTreeMap::new()),
        }
    }

    fn unit_group(&self, subset: &[usize]) -> Subgroup {
        if let Some(g) = self.cache.borrow().get(subset) {
            return g.clone();
        }
        let g = localization_unit_group_in(
            &self.gamma,
            self.generators,
            &subset.iter().copied().collect(),
        );
        self.cache.borrow_mut().insert(subset.to_vec(), g.clone());
        g
    }
}

impl UnitSheafModel for IntegralBinoidSheaf {
    fn chart_count(&self) -> usize {
        self.generators
    }

    fn value(&self, subset: &[usize]) -> UnitGroupValue {
        let g = self.unit_group(subset);
        if g.rank() == 0 {
            UnitGroupValue::Zero
        } else {
            UnitGroupValue::Group(g)
        }
    }

    fn restrict(&self, small: &[usize], large: &[usize]) -> IntMatrix {
        let a = self.unit_group(small);
        let b = self.unit_group(large);
        a.inclusion_matrix(&b)
            .expect("localization unit groups nest along chart inclusions")
    }
}

/// Rank-one constant model: one copy of ℤ on every face of the complex.
struct ConstantModel<'a> {
    complex: &'a SimplicialComplex,
}

impl UnitSheafModel for ConstantModel<'_> {
    fn chart_count(&self) -> usize {
        self.complex.vertex_count()
    }

    fn value(&self, subset: &[usize]) -> UnitGroupValue {
        if self.complex.is_face(subset) {
            UnitGroupValue::Group(Subgroup::full(1))
        } else {
            UnitGroupValue::Zero
        }
    }

    fn restrict(&self, _small: &[usize], _large: &[usize]) -> IntMatrix {
        IntMatrix::identity(1)
    }
}

/// Čech complex of a constant sheaf `G` on the coordinate cover: the block
/// at every face is `G`, and the matrices of the rank-one skeleton equal the
/// unreduced simplicial cochain matrices.
pub struct ConstantSheafComplex {
    pub skeleton: CechComplex,
    pub group: FgAbelianGroup,
}

/// Builds the constant-sheaf complex of `G` over the cover of `k`.
pub fn constant_sheaf_complex(
    k: &SimplicialComplex,
    group: FgAbelianGroup,
) -> Result<ConstantSheafComplex> {
    if k.is_void() {
        return Err(Error::VoidComplex);
    }
    let skeleton = build_cech_complex(&ConstantModel { complex: k })?;
    Ok(ConstantSheafComplex { skeleton, group })
}

impl ConstantSheafComplex {
    /// Cohomology with coefficients in `G`, degree by degree: the free part
    /// contributes `free_rank` copies of the integral cohomology, each
    /// invariant factor `d` the mod-d cohomology of the same matrices.
    pub fn cohomology(&self) -> Result<Vec<FgAbelianGroup>> {
        let n = self.skeleton.degrees.len();
        if n == 0 {
            return Ok(Vec::new());
        }
        let mut out = vec![FgAbelianGroup::trivial(); n];
        if self.group.is_trivial() {
            return Ok(out);
        }
        let integral = cech_cohomology(&self.skeleton)?;
        for (j, h) in integral.iter().enumerate() {
            for _ in 0..self.group.free_rank() {
                out[j] = out[j].direct_sum(h);
            }
        }
        for d in self.group.invariant_factors() {
            let modded: Vec<FgAbelianGroup> = if self.skeleton.maps.is_empty() {
                vec![FgAbelianGroup::from_orders(std::iter::repeat_n(
                    d.clone(),
                    self.skeleton.ranks()[0],
                ))]
            } else {
                complex_cohomology_mod(&self.skeleton.maps, d)?
            };
            for (j, h) in modded.iter().enumerate() {
                out[j] = out[j].direct_sum(h);
            }
        }
        Ok(out)
    }
}
