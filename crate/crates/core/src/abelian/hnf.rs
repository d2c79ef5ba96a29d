//! Hermite normal form and subgroups of ℤ^n.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;
use super::snf::smith_normal_form;

/// Row-style Hermite normal form of the subgroup spanned by `rows`.
///
/// The result has one row per basis vector, pivots positive, pivot columns
/// strictly increasing and entries above each pivot reduced into
/// `[0, pivot)`. Zero rows are dropped, so the output is the canonical
/// representative of the row span: two subgroups are equal if and only if
/// their HNF matrices are equal.
pub fn hermite_normal_form(rows: Vec<Vec<BigInt>>, cols: usize) -> IntMatrix {
    let mut work: Vec<Vec<BigInt>> = rows
        .into_iter()
        .filter(|r| r.iter().any(|e| !e.is_zero()))
        .collect();
    for r in &work {
        assert_eq!(r.len(), cols, "ragged generator");
    }
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();

    for col in 0..cols {
        loop {
            // pick the remaining row with smallest nonzero |entry| at col
            let mut best: Option<usize> = None;
            for (idx, row) in work.iter().enumerate() {
                if row[col].is_zero() {
                    continue;
                }
                match best {
                    Some(b) if work[b][col].abs() <= row[col].abs() => {}
                    _ => best = Some(idx),
                }
            }
            let Some(p) = best else { break };
            let mut done = true;
            for idx in 0..work.len() {
                if idx == p || work[idx][col].is_zero() {
                    continue;
                }
                let q = work[idx][col].div_floor(&work[p][col]);
                for j in 0..cols {
                    let sub = &q * &work[p][j];
                    work[idx][j] = &work[idx][j] - sub;
                }
                if !work[idx][col].is_zero() {
                    done = false;
                }
            }
            if done {
                let mut pivot_row = work.swap_remove(p);
                if pivot_row[col].is_negative() {
                    for e in &mut pivot_row {
                        *e = -std::mem::take(e);
                    }
                }
                out.push(pivot_row);
                pivots.push(col);
                work.retain(|r| r.iter().any(|e| !e.is_zero()));
                break;
            }
        }
    }

    // reduce entries above each pivot into [0, pivot)
    for k in 0..out.len() {
        let col = pivots[k];
        for j in 0..k {
            let q = out[j][col].div_floor(&out[k][col]);
            if q.is_zero() {
                continue;
            }
            for c in 0..cols {
                let sub = &q * &out[k][c];
                out[j][c] = &out[j][c] - sub;
            }
        }
    }

    IntMatrix::from_rows(out, cols)
}

/// A subgroup of ℤ^ambient_rank, stored by its canonical HNF basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subgroup {
    ambient_rank: usize,
    basis: IntMatrix,
}

impl Subgroup {
    pub fn from_generators(ambient_rank: usize, gens: Vec<Vec<BigInt>>) -> Self {
        let basis = hermite_normal_form(gens, ambient_rank);
        Subgroup {
            ambient_rank,
            basis,
        }
    }

    pub fn zero(ambient_rank: usize) -> Self {
        Subgroup {
            ambient_rank,
            basis: IntMatrix::zero(0, ambient_rank),
        }
    }

    pub fn full(ambient_rank: usize) -> Self {
        Subgroup {
            ambient_rank,
            basis: IntMatrix::identity(ambient_rank),
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    /// Basis matrix in HNF; rows are the basis vectors.
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.rows() == 0
    }

    /// Coordinates of `v` in the HNF basis, or `None` if `v` is outside.
    pub fn coordinates_of(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.ambient_rank);
        let mut rem: Vec<BigInt> = v.to_vec();
        let mut coords = vec![BigInt::zero(); self.basis.rows()];
        for k in 0..self.basis.rows() {
            let pivot_col = (0..self.ambient_rank)
                .find(|&j| !self.basis.at(k, j).is_zero())
                .expect("HNF basis has no zero rows");
            let (q, r) = rem[pivot_col].div_rem(self.basis.at(k, pivot_col));
            if !r.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for j in 0..self.ambient_rank {
                    let sub = &q * self.basis.at(k, j);
                    rem[j] = &rem[j] - sub;
                }
            }
            coords[k] = q;
        }
        if rem.iter().all(|e| e.is_zero()) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates_of(v).is_some()
    }

    pub fn is_contained_in(&self, other: &Subgroup) -> bool {
        assert_eq!(self.ambient_rank, other.ambient_rank);
        (0..self.basis.rows()).all(|i| other.contains(self.basis.row(i)))
    }

    /// The matrix of the inclusion `self ↪ other` in the two HNF bases:
    /// column `i` holds the `other`-coordinates of the `i`-th basis vector.
    /// `None` when `self` is not contained in `other`.
    pub fn inclusion_matrix(&self, other: &Subgroup) -> Option<IntMatrix> {
        assert_eq!(self.ambient_rank, other.ambient_rank);
        let mut out = IntMatrix::zero(other.rank(), self.rank());
        for i in 0..self.basis.rows() {
            let coords = other.coordinates_of(self.basis.row(i))?;
            for (r, c) in coords.into_iter().enumerate() {
                out.set(r, i, c);
            }
        }
        Some(out)
    }
}

/// HNF basis of `ker(a)` for the map `x ↦ a·x` on column vectors.
///
/// Kernels of integer maps are saturated, so every lattice point of the
/// rational kernel has integer coordinates in this basis.
pub fn kernel_basis(a: &IntMatrix) -> Subgroup {
    let snf = smith_normal_form(a);
    let r = snf.rank();
    let gens: Vec<Vec<BigInt>> = (r..a.cols()).map(|j| snf.v.col_vec(j)).collect();
    Subgroup::from_generators(a.cols(), gens)
}

/// HNF basis of `im(a)`, the column span of `a`, without saturation.
pub fn image_basis(a: &IntMatrix) -> Subgroup {
    let gens: Vec<Vec<BigInt>> = (0..a.cols()).map(|j| a.col_vec(j)).collect();
    Subgroup::from_generators(a.rows(), gens)
}
