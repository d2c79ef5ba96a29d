//! Smith normal form over ℤ with unimodular transformation matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::group::FgAbelianGroup;
use super::matrix::IntMatrix;

/// Decomposition `U·A·V = D` with `U`, `V` unimodular and `D` diagonal
/// satisfying the divisibility chain `d₁ | d₂ | …` with all `d_i ≥ 0`.
pub struct SmithNormalForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithNormalForm {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        let n = self.d.rows().min(self.d.cols());
        (0..n).filter(|&i| !self.d.at(i, i).is_zero()).count()
    }

    /// Nonzero diagonal entries in order.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n)
            .map(|i| self.d.at(i, i).clone())
            .filter(|e| !e.is_zero())
            .collect()
    }
}

/// Computes the Smith normal form of `a`.
///
/// Pivot selection takes the smallest nonzero entry in absolute value from
/// the remaining submatrix, with row-major tie-breaking, which makes `U` and
/// `V` deterministic across runs.
pub fn smith_normal_form(a: &IntMatrix) -> SmithNormalForm {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    let bound = m.min(n);
    let mut t = 0;
    while t < bound {
        if !eliminate_at(&mut d, &mut u, &mut v, t) {
            break;
        }
        t += 1;
    }
    let rank = t;

    // Enforce the divisibility chain d_i | d_{i+1} with explicit 2×2
    // unimodular transforms that keep the matrix diagonal: for a pair (a, b)
    // with g = s·a + t·b,
    //   [[s, t], [−b/g, a/g]] · diag(a, b) · [[1, −t·b/g], [1, s·a/g]]
    //     = diag(g, ab/g).
    // Each exchange strictly decreases the earlier entry, so the pass
    // terminates.
    loop {
        let mut changed = false;
        for t in 0..rank.saturating_sub(1) {
            let a = d.at(t, t).clone();
            let b = d.at(t + 1, t + 1).clone();
            if (&b % &a).is_zero() {
                continue;
            }
            let ext = a.extended_gcd(&b);
            let (g, s, r) = (ext.gcd, ext.x, ext.y);
            let lcm = (&a / &g) * &b;

            apply_left_2x2(&mut d, &mut u, t, &s, &r, &(-&b / &g), &(&a / &g));
            apply_right_2x2(
                &mut d,
                &mut v,
                t,
                &BigInt::from(1),
                &(-&r * &b / &g),
                &BigInt::from(1),
                &(&s * &a / &g),
            );
            debug_assert_eq!(d.at(t, t), &g);
            debug_assert_eq!(d.at(t + 1, t + 1), &lcm);
            changed = true;
        }
        if !changed {
            break;
        }
    }

    SmithNormalForm { u, d, v }
}

/// Left-multiplies rows `t`, `t+1` of both matrices by `[[a, b], [c, e]]`.
fn apply_left_2x2(
    d: &mut IntMatrix,
    u: &mut IntMatrix,
    t: usize,
    a: &BigInt,
    b: &BigInt,
    c: &BigInt,
    e: &BigInt,
) {
    for m in [d, u] {
        for j in 0..m.cols() {
            let top = m.at(t, j).clone();
            let bottom = m.at(t + 1, j).clone();
            m.set(t, j, a * &top + b * &bottom);
            m.set(t + 1, j, c * &top + e * &bottom);
        }
    }
}

/// Right-multiplies columns `t`, `t+1` of both matrices by `[[a, b], [c, e]]`.
fn apply_right_2x2(
    d: &mut IntMatrix,
    v: &mut IntMatrix,
    t: usize,
    a: &BigInt,
    b: &BigInt,
    c: &BigInt,
    e: &BigInt,
) {
    for m in [d, v] {
        for i in 0..m.rows() {
            let left = m.at(i, t).clone();
            let right = m.at(i, t + 1).clone();
            m.set(i, t, &left * a + &right * c);
            m.set(i, t + 1, &left * b + &right * e);
        }
    }
}

/// Clears row and column `t`, leaving a positive pivot at `(t,t)`.
/// Returns false when the submatrix `[t.., t..]` is zero.
fn eliminate_at(d: &mut IntMatrix, u: &mut IntMatrix, v: &mut IntMatrix, t: usize) -> bool {
    let (m, n) = (d.rows(), d.cols());
    loop {
        let Some((pi, pj)) = select_pivot(d, t) else {
            return false;
        };
        if pi != t {
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
        }
        if pj != t {
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
        }
        if d.at(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }

        let mut clean = true;
        for i in t + 1..m {
            if !d.at(i, t).is_zero() {
                let q = d.at(i, t).div_floor(d.at(t, t));
                let neg_q = -q;
                d.add_row_multiple(i, t, &neg_q);
                u.add_row_multiple(i, t, &neg_q);
                if !d.at(i, t).is_zero() {
                    clean = false;
                }
            }
        }
        for j in t + 1..n {
            if !d.at(t, j).is_zero() {
                let q = d.at(t, j).div_floor(d.at(t, t));
                let neg_q = -q;
                d.add_col_multiple(j, t, &neg_q);
                v.add_col_multiple(j, t, &neg_q);
                if !d.at(t, j).is_zero() {
                    clean = false;
                }
            }
        }
        // Row clearing may have disturbed the column; check both.
        let col_clear = (t + 1..m).all(|i| d.at(i, t).is_zero());
        let row_clear = (t + 1..n).all(|j| d.at(t, j).is_zero());
        if clean && col_clear && row_clear {
            return true;
        }
        // Any surviving remainder is strictly smaller than the pivot, so the
        // re-selection loop terminates.
    }
}

fn select_pivot(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let e = d.at(i, j);
            if e.is_zero() {
                continue;
            }
            let a = e.abs();
            match &best {
                Some((_, _, cur)) if *cur <= a => {}
                _ => best = Some((i, j, a)),
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Rank of the ℤ-linear map given by `a`.
pub fn rank(a: &IntMatrix) -> usize {
    smith_normal_form(a).rank()
}

/// Cokernel `ℤ^rows / colspan(a)` as an abstract group.
pub fn cokernel(a: &IntMatrix) -> FgAbelianGroup {
    let snf = smith_normal_form(a);
    let r = snf.rank();
    let free = a.rows() - r;
    FgAbelianGroup::from_orders(
        snf.diagonal()
            .into_iter()
            .chain(std::iter::repeat_n(BigInt::zero(), free)),
    )
}

/// Solves `a · x = b` over ℤ. Returns `None` when no integer solution exists.
pub fn solve(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows(), b.len());
    let snf = smith_normal_form(a);
    let c = snf.u.mul_vec(b);
    let r = snf.rank();
    let mut y = vec![BigInt::zero(); a.cols()];
    for (i, ci) in c.iter().enumerate() {
        if i < r {
            let di = snf.d.at(i, i);
            let (q, rem) = ci.div_rem(di);
            if !rem.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !ci.is_zero() {
            return None;
        }
    }
    Some(snf.v.mul_vec(&y))
}
