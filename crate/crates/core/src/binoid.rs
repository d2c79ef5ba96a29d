//! Finitely generated commutative binoid presentations, difference groups,
//! and unit groups of localizations.
//!
//! Two engines live here. Simplicial binoids (no congruences, squarefree
//! infinity relations) have unit sheaf values ℤ^F on faces and 0 elsewhere.
//! Integral, cancellative, torsion-free binoids (congruences only) get their
//! localization unit groups from the minimal-face rule inside the rational
//! cone spanned by the generator images in the difference group; the face
//! test is exact rational feasibility by Fourier–Motzkin elimination.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::abelian::{smith_normal_form, IntMatrix, Subgroup};
use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;

/// A presentation of a finitely generated commutative binoid: generators,
/// additive congruences `a = b`, and infinity relations `h = ∞`, all as
/// exponent vectors over the generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinoidPresentation {
    pub generators: Vec<String>,
    #[serde(default)]
    pub congruences: Vec<(Vec<u64>, Vec<u64>)>,
    #[serde(default)]
    pub infinities: Vec<Vec<u64>>,
}

impl BinoidPresentation {
    pub fn new(
        generators: Vec<String>,
        congruences: Vec<(Vec<u64>, Vec<u64>)>,
        infinities: Vec<Vec<u64>>,
    ) -> Result<Self> {
        let p = BinoidPresentation {
            generators,
            congruences,
            infinities,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.generators.len();
        for (a, b) in &self.congruences {
            if a.len() != n || b.len() != n {
                return Err(Error::BadPresentation(format!(
                    "congruence {a:?} = {b:?} does not match {n} generators"
                )));
            }
            if a == b {
                return Err(Error::BadPresentation(format!(
                    "congruence {a:?} = {b:?} has syntactically equal sides"
                )));
            }
        }
        for h in &self.infinities {
            if h.len() != n {
                return Err(Error::BadPresentation(format!(
                    "infinity relation {h:?} does not match {n} generators"
                )));
            }
            if h.iter().all(|&e| e == 0) {
                return Err(Error::BadPresentation(
                    "relation 0 = ∞ collapses the binoid".into(),
                ));
            }
        }
        Ok(())
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn is_integral(&self) -> bool {
        self.infinities.is_empty()
    }
}

/// The simplicial binoid of a complex: one generator per vertex, no
/// congruences, and `x_H = ∞` exactly for the minimal non-faces `H`.
pub fn simplicial_binoid_of(k: &SimplicialComplex) -> BinoidPresentation {
    let n = k.vertex_count();
    assert!(n < 28, "vertex count too large for subset enumeration");
    let dim = k.dim().unwrap_or(-1);
    let max_size = ((dim + 2).max(1) as usize).min(n);
    let mut infinities = Vec::new();
    for mask in 1u64..(1u64 << n) {
        let size = mask.count_ones() as usize;
        if size > max_size {
            continue;
        }
        let subset: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        if k.is_face(&subset) {
            continue;
        }
        // minimal: every proper subset obtained by dropping one vertex is a face
        let minimal = (0..subset.len()).all(|drop| {
            let sub: Vec<usize> = subset
                .iter()
                .enumerate()
                .filter(|(pos, _)| *pos != drop)
                .map(|(_, &v)| v)
                .collect();
            k.is_face(&sub)
        });
        if minimal {
            let mut vec = vec![0u64; n];
            for &v in &subset {
                vec[v] = 1;
            }
            infinities.push(vec);
        }
    }
    BinoidPresentation {
        generators: k.vertices().to_vec(),
        congruences: Vec::new(),
        infinities,
    }
}

fn support(v: &[u64]) -> BTreeSet<usize> {
    v.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, _)| i)
        .collect()
}

/// Monomial ideal membership: `a` lies in the ideal generated by `gens`
/// exactly when some generator divides it componentwise.
fn in_monomial_ideal(a: &[u64], gens: &[Vec<u64>]) -> bool {
    gens.iter()
        .any(|g| g.iter().zip(a).all(|(ge, ae)| ge <= ae))
}

/// Recognizes a presentation as a simplicial binoid and recovers its
/// complex `{F | x_F ≠ ∞}`.
///
/// Requires no congruences and a reduced set of infinity relations (the
/// squarefree parts must generate the same ideal). Generators that are
/// themselves annihilated (`x_v = ∞`) are dropped from the vertex set, which
/// matches reading the presentation over a minimal generating set.
pub fn detect_simplicial(p: &BinoidPresentation) -> Result<SimplicialComplex> {
    p.validate()?;
    if !p.congruences.is_empty() {
        return Err(Error::NotSimplicial(format!(
            "congruence {:?} = {:?} present",
            p.congruences[0].0, p.congruences[0].1
        )));
    }
    for h in &p.infinities {
        let squarefree: Vec<u64> = h.iter().map(|&e| e.min(1)).collect();
        if !in_monomial_ideal(&squarefree, &p.infinities) {
            return Err(Error::NotSimplicial(format!(
                "not reduced: relation {h:?} = ∞ is not squarefree and its squarefree part is not implied"
            )));
        }
    }
    let n = p.generator_count();
    let dead: BTreeSet<usize> = (0..n)
        .filter(|&v| {
            let mut e = vec![0u64; n];
            e[v] = 1;
            in_monomial_ideal(&e, &p.infinities)
        })
        .collect();
    if !dead.is_empty() {
        log::warn!(
            "generators {:?} are annihilated and dropped from the vertex set",
            dead.iter()
                .map(|&v| p.generators[v].as_str())
                .collect::<Vec<_>>()
        );
    }
    let alive: Vec<usize> = (0..n).filter(|v| !dead.contains(v)).collect();
    let supports: Vec<BTreeSet<usize>> = p.infinities.iter().map(|h| support(h)).collect();
    assert!(
        alive.len() < 28,
        "vertex count too large for subset enumeration"
    );
    let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
    let m = alive.len();
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
    let labels: Vec<String> = alive.iter().map(|&v| p.generators[v].clone()).collect();
    Ok(SimplicialComplex::from_faces(labels, faces))
}

/// The difference group Γ = ℤ^n / ⟨a − b⟩ of an integral presentation,
/// with the projection ℤ^n → ℤ^rank identifying Γ with a coordinate lattice.
#[derive(Clone, Debug)]
pub struct DifferenceGroup {
    rank: usize,
    projection: IntMatrix,
}

impl DifferenceGroup {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn projection(&self) -> &IntMatrix {
        &self.projection
    }

    /// Image of an exponent vector in the coordinate lattice.
    pub fn image(&self, exponents: &[BigInt]) -> Vec<BigInt> {
        self.projection.mul_vec(exponents)
    }

    pub fn image_u64(&self, exponents: &[u64]) -> Vec<BigInt> {
        let v: Vec<BigInt> = exponents.iter().map(|&e| BigInt::from(e)).collect();
        self.image(&v)
    }

    /// Image of the `i`-th generator.
    pub fn generator_image(&self, i: usize) -> Vec<BigInt> {
        self.projection.col_vec(i)
    }
}

/// Computes the difference group of an integral presentation.
///
/// Torsion in the quotient is a hard error: the unit-group engine is only
/// valid for cancellative, torsion-free binoids, and torsion is exactly how
/// failures of those hypotheses surface from a presentation.
pub fn difference_group(p: &BinoidPresentation) -> Result<DifferenceGroup> {
    p.validate()?;
    if !p.is_integral() {
        return Err(Error::NonIntegral);
    }
    let n = p.generator_count();
    let mut relation = IntMatrix::zero(n, p.congruences.len());
    for (c, (a, b)) in p.congruences.iter().enumerate() {
        for i in 0..n {
            relation.set(i, c, BigInt::from(a[i] as i64) - BigInt::from(b[i] as i64));
        }
    }
    let snf = smith_normal_form(&relation);
    let torsion: Vec<BigInt> = snf
        .diagonal()
        .into_iter()
        .filter(|d| d > &BigInt::from(1))
        .collect();
    if !torsion.is_empty() {
        return Err(Error::TorsionDetected { factors: torsion });
    }
    let r = snf.rank();
    let rank = n - r;
    let mut projection = IntMatrix::zero(rank, n);
    for (row, i) in (r..n).enumerate() {
        for j in 0..n {
            projection.set(row, j, snf.u.at(i, j).clone());
        }
    }
    Ok(DifferenceGroup { rank, projection })
}

/// True when the image of generator `i` lies in the minimal face of the cone
/// spanned by all generator images that contains the image of `f`.
///
/// Decided by exact rational feasibility: the minimal face containing `f̄`
/// consists of the cone points `x` with `f̄ − εx` still in the cone for some
/// ε > 0.
pub fn minimal_face_contains(gamma: &DifferenceGroup, f: &[u64], i: usize) -> bool {
    assert!(
        f.iter().any(|&e| e > 0),
        "zero exponent vector has no minimal face"
    );
    let rays: Vec<Vec<BigInt>> = (0..gamma.projection.cols())
        .map(|j| gamma.generator_image(j))
        .collect();
    let target = gamma.image_u64(f);
    cone::supremum_of_epsilon_is_positive(&rays, &rays[i], &target)
}

/// Value of the unit sheaf of an integral binoid on the chart `D(x_F)`:
/// the subgroup of Γ generated by the generator images on the minimal face
/// containing `x_F`.
pub fn localization_unit_group(p: &BinoidPresentation, face: &BTreeSet<usize>) -> Result<Subgroup> {
    assert!(!face.is_empty(), "localization at the empty chart");
    let gamma = difference_group(p)?;
    Ok(localization_unit_group_in(
        &gamma,
        p.generator_count(),
        face,
    ))
}

/// Same as [`localization_unit_group`] with a precomputed difference group.
pub fn localization_unit_group_in(
    gamma: &DifferenceGroup,
    n: usize,
    face: &BTreeSet<usize>,
) -> Subgroup {
    let mut f = vec![0u64; n];
    for &v in face {
        f[v] = 1;
    }
    let gens: Vec<Vec<BigInt>> = (0..n)
        .filter(|&i| minimal_face_contains(gamma, &f, i))
        .map(|i| gamma.generator_image(i))
        .collect();
    Subgroup::from_generators(gamma.rank(), gens)
}

/// Value of the unit sheaf of a simplicial binoid on the chart `D(x_F)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnitGroupValue {
    /// The chart is empty (F is a non-face).
    Zero,
    Group(Subgroup),
}

impl UnitGroupValue {
    pub fn rank(&self) -> usize {
        match self {
            UnitGroupValue::Zero => 0,
            UnitGroupValue::Group(g) => g.rank(),
        }
    }

    pub fn as_subgroup(&self) -> Option<&Subgroup> {
        match self {
            UnitGroupValue::Zero => None,
            UnitGroupValue::Group(g) => Some(g),
        }
    }
}

/// `ℤ^F` (free on the vertices of F, inside ℤ^V) when `F` is a face, zero
/// when it is not. Simplicial binoids are positive, so `F = ∅` gives the
/// trivial group.
pub fn simplicial_unit_sheaf_value(k: &SimplicialComplex, face: &[usize]) -> UnitGroupValue {
    if !k.is_face(face) {
        return UnitGroupValue::Zero;
    }
    let n = k.vertex_count();
    let gens: Vec<Vec<BigInt>> = face
        .iter()
        .map(|&v| {
            let mut e = vec![BigInt::zero(); n];
            e[v] = BigInt::from(1);
            e
        })
        .collect();
    UnitGroupValue::Group(Subgroup::from_generators(n, gens))
}

/// Checks that unit sheaf values computed from a presentation agree with
/// those computed from its reduction, chart by chart.
///
/// For a presentation with infinity relations the value on `D(x_F)` is zero
/// exactly when `x_F` is nilpotent; the reduction replaces every relation by
/// its squarefree part. The two rules must give the same answer on every
/// subset of the generators. Integral presentations pass vacuously.
pub fn units_equal_reduction_check(p: &BinoidPresentation) -> Result<bool> {
    p.validate()?;
    if p.is_integral() {
        return Ok(true);
    }
    if !p.congruences.is_empty() {
        return Err(Error::MixedPresentation);
    }
    let n = p.generator_count();
    assert!(n < 28, "generator count too large for subset enumeration");
    let reduced: Vec<Vec<u64>> = p
        .infinities
        .iter()
        .map(|h| h.iter().map(|&e| e.min(1)).collect())
        .collect();
    for mask in 0u64..(1u64 << n) {
        let subset: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        // original rule: x_F nilpotent iff some relation has support inside F
        let nilpotent = p
            .infinities
            .iter()
            .map(|h| support(h))
            .any(|s| s.iter().all(|v| subset.contains(v)));
        // reduction rule: squarefree x_F lies in the reduced ideal
        let mut xf = vec![0u64; n];
        for &v in &subset {
            xf[v] = 1;
        }
        let dead = in_monomial_ideal(&xf, &reduced);
        if nilpotent != dead {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact rational cone feasibility by Fourier–Motzkin elimination.
mod cone {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::{One, Signed, Zero};

    /// One inequality `Σ coeffs·v ≤ rhs`.
    #[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
    struct Ineq {
        coeffs: Vec<BigRational>,
        rhs: BigRational,
    }

    impl Ineq {
        fn is_trivial(&self) -> bool {
            self.coeffs.iter().all(|c| c.is_zero()) && !self.rhs.is_negative()
        }

        fn is_infeasible(&self) -> bool {
            self.coeffs.iter().all(|c| c.is_zero()) && self.rhs.is_negative()
        }

        /// Scales to a canonical integer form for deduplication.
        fn normalize(&mut self) {
            use num_integer::Integer;
            let mut denom_lcm = BigInt::one();
            for c in self.coeffs.iter().chain(std::iter::once(&self.rhs)) {
                denom_lcm = denom_lcm.lcm(c.denom());
            }
            let scale = BigRational::from_integer(denom_lcm);
            for c in &mut self.coeffs {
                *c *= &scale;
            }
            self.rhs *= &scale;
            let mut num_gcd = BigInt::zero();
            for c in self.coeffs.iter().chain(std::iter::once(&self.rhs)) {
                num_gcd = num_gcd.gcd(c.numer());
            }
            if num_gcd > BigInt::one() {
                let scale = BigRational::from_integer(num_gcd).recip();
                for c in &mut self.coeffs {
                    *c *= &scale;
                }
                self.rhs *= &scale;
            }
        }
    }

    /// Decides whether `sup { ε ≥ 0 : ∃λ ≥ 0, Σ λ_j·rays_j + ε·dir = target }`
    /// is strictly positive. The caller guarantees the system is feasible at
    /// ε = 0 (the target lies in the cone).
    pub(super) fn supremum_of_epsilon_is_positive(
        rays: &[Vec<BigInt>],
        dir: &[BigInt],
        target: &[BigInt],
    ) -> bool {
        let n = rays.len();
        let dim = target.len();
        let nvars = n + 1; // λ_0..λ_{n-1}, then ε

        // equalities: coordinate by coordinate
        let mut eqs: Vec<(Vec<BigRational>, BigRational)> = Vec::with_capacity(dim);
        for c in 0..dim {
            let mut row = Vec::with_capacity(nvars);
            for ray in rays {
                row.push(BigRational::from_integer(ray[c].clone()));
            }
            row.push(BigRational::from_integer(dir[c].clone()));
            eqs.push((row, BigRational::from_integer(target[c].clone())));
        }

        // Gaussian elimination pivoting only on λ columns, so ε survives.
        let mut pivot_of_eq: Vec<Option<usize>> = vec![None; eqs.len()];
        let mut used_cols: Vec<usize> = Vec::new();
        for e in 0..eqs.len() {
            let Some(col) = (0..n).find(|j| !used_cols.contains(j) && !eqs[e].0[*j].is_zero())
            else {
                continue;
            };
            let inv = eqs[e].0[col].clone().recip();
            for v in &mut eqs[e].0 {
                *v *= &inv;
            }
            eqs[e].1 *= &inv;
            let pivot_row = eqs[e].clone();
            for (o, other) in eqs.iter_mut().enumerate() {
                if o == e || other.0[col].is_zero() {
                    continue;
                }
                let factor = other.0[col].clone();
                for (v, pv) in other.0.iter_mut().zip(&pivot_row.0) {
                    *v -= &factor * pv;
                }
                other.1 -= &factor * &pivot_row.1;
            }
            pivot_of_eq[e] = Some(col);
            used_cols.push(col);
        }

        // Express the inequality system λ ≥ 0, ε ≥ 0 over the free variables.
        // A pivoted equality col = rhs − Σ free gives λ_col ≥ 0 directly;
        // unpivoted equalities become inequality pairs.
        let free_vars: Vec<usize> = (0..nvars)
            .filter(|v| *v == n || !used_cols.contains(v))
            .collect();
        let free_pos = |v: usize| free_vars.iter().position(|&x| x == v).unwrap();

        let mut system: Vec<Ineq> = Vec::new();
        // nonnegativity of free λ variables (and ε)
        for pos in 0..free_vars.len() {
            let mut coeffs = vec![BigRational::zero(); free_vars.len()];
            coeffs[pos] = -BigRational::one();
            system.push(Ineq {
                coeffs,
                rhs: BigRational::zero(),
            });
        }
        // nonnegativity of pivoted λ variables: λ_col = rhs − Σ_{free} a_v·v ≥ 0
        for (e, pivot) in pivot_of_eq.iter().enumerate() {
            let Some(_col) = pivot else { continue };
            let mut coeffs = vec![BigRational::zero(); free_vars.len()];
            for &v in &free_vars {
                coeffs[free_pos(v)] = eqs[e].0[v].clone();
            }
            system.push(Ineq {
                coeffs,
                rhs: eqs[e].1.clone(),
            });
        }
        // unpivoted equalities: Σ_{free} a_v·v = rhs
        for (e, pivot) in pivot_of_eq.iter().enumerate() {
            if pivot.is_some() {
                continue;
            }
            let mut coeffs = vec![BigRational::zero(); free_vars.len()];
            for &v in &free_vars {
                coeffs[free_pos(v)] = eqs[e].0[v].clone();
            }
            let neg: Vec<BigRational> = coeffs.iter().map(|c| -c.clone()).collect();
            system.push(Ineq {
                coeffs,
                rhs: eqs[e].1.clone(),
            });
            system.push(Ineq {
                coeffs: neg,
                rhs: -eqs[e].1.clone(),
            });
        }

        // Fourier–Motzkin: eliminate every free variable except ε (last).
        let eps_pos = free_pos(n);
        let mut active: Vec<usize> = (0..free_vars.len()).filter(|&p| p != eps_pos).collect();
        while let Some(var) = active.pop() {
            system = eliminate(system, var);
            if system.iter().any(Ineq::is_infeasible) {
                debug_assert!(false, "cone system must be feasible at ε = 0");
                return false;
            }
        }

        // Bounds on ε alone.
        let mut sup_positive = true;
        for ineq in &system {
            let c = &ineq.coeffs[eps_pos];
            if c.is_positive() {
                // ε ≤ rhs / c
                let bound = &ineq.rhs / c;
                if !bound.is_positive() {
                    sup_positive = false;
                }
            } else if c.is_zero() && ineq.rhs.is_negative() {
                debug_assert!(false, "cone system must be feasible at ε = 0");
                return false;
            }
        }
        sup_positive
    }

    fn eliminate(system: Vec<Ineq>, var: usize) -> Vec<Ineq> {
        let mut keep: Vec<Ineq> = Vec::new();
        let mut pos: Vec<Ineq> = Vec::new();
        let mut neg: Vec<Ineq> = Vec::new();
        for ineq in system {
            match ineq.coeffs[var].cmp(&BigRational::zero()) {
                std::cmp::Ordering::Equal => keep.push(ineq),
                std::cmp::Ordering::Greater => pos.push(ineq),
                std::cmp::Ordering::Less => neg.push(ineq),
            }
        }
        for p in &pos {
            for q in &neg {
                // p·|q_v| + q·p_v cancels var; both multipliers positive
                let a = q.coeffs[var].abs();
                let b = p.coeffs[var].clone();
                let coeffs: Vec<BigRational> = p
                    .coeffs
                    .iter()
                    .zip(&q.coeffs)
                    .map(|(pc, qc)| pc * &a + qc * &b)
                    .collect();
                let mut combined = Ineq {
                    coeffs,
                    rhs: &p.rhs * &a + &q.rhs * &b,
                };
                if combined.is_trivial() {
                    continue;
                }
                combined.normalize();
                keep.push(combined);
            }
        }
        keep.sort();
        keep.dedup();
        keep
    }
}
