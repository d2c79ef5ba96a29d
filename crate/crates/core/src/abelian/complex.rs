//! Cohomology of co-chain complexes of finitely generated free abelian groups.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::group::FgAbelianGroup;
use super::hnf::{kernel_basis, Subgroup};
use super::matrix::IntMatrix;
use super::snf::{cokernel, smith_normal_form};
use crate::error::{Error, Result};

/// Cohomology of the complex `C⁰ → C¹ → … → C^m` given by the coboundary
/// matrices `d⁰, …, d^{m-1}` (column-vector convention: `d^j` has
/// `rank C^{j+1}` rows and `rank C^j` columns).
///
/// Returns `H⁰, …, H^m` where `H^j = ker d^j / im d^{j-1}`, with the missing
/// outer maps read as zero. The quotient is computed by expressing the image
/// generators in an HNF basis of the kernel and taking the cokernel of the
/// coefficient matrix.
pub fn complex_cohomology(maps: &[IntMatrix]) -> Result<Vec<FgAbelianGroup>> {
    if maps.is_empty() {
        return Ok(Vec::new());
    }
    for (j, pair) in maps.windows(2).enumerate() {
        if pair[1].cols() != pair[0].rows() {
            return Err(Error::BadPresentation(format!(
                "maps d^{} and d^{} are not composable",
                j,
                j + 1
            )));
        }
        if !pair[1].mul(&pair[0]).is_zero() {
            return Err(Error::CompositionNonzero { degree: j });
        }
    }

    let m = maps.len();
    let mut out = Vec::with_capacity(m + 1);
    for j in 0..=m {
        let kernel = if j < m {
            kernel_basis(&maps[j])
        } else {
            Subgroup::full(maps[m - 1].rows())
        };
        if j == 0 {
            out.push(FgAbelianGroup::free(kernel.rank()));
            continue;
        }
        out.push(quotient_in_kernel(&kernel, &maps[j - 1]));
    }
    Ok(out)
}

/// `kernel / colspan(incoming)`, assuming the image lies inside the kernel.
fn quotient_in_kernel(kernel: &Subgroup, incoming: &IntMatrix) -> FgAbelianGroup {
    if kernel.rank() == 0 {
        return FgAbelianGroup::trivial();
    }
    let mut coeffs = IntMatrix::zero(kernel.rank(), incoming.cols());
    for c in 0..incoming.cols() {
        let col = incoming.col_vec(c);
        let coords = kernel
            .coordinates_of(&col)
            .expect("image not contained in kernel although d∘d = 0");
        for (r, value) in coords.into_iter().enumerate() {
            coeffs.set(r, c, value);
        }
    }
    cokernel(&coeffs)
}

/// Cohomology of the same complex with coefficients reduced mod `m ≥ 2`:
/// `H^j = ker(d̄^j) / im(d̄^{j-1})` over ℤ/m.
///
/// The kernel of `x ↦ d·x mod m` is the lattice `V·diag(m/gcd(dᵢ,m))·ℤ^n`
/// read off the Smith normal form of `d`; the quotient also divides out
/// `m·ℤ^n`.
pub fn complex_cohomology_mod(maps: &[IntMatrix], modulus: &BigInt) -> Result<Vec<FgAbelianGroup>> {
    assert!(modulus >= &BigInt::from(2), "modulus must be at least 2");
    if maps.is_empty() {
        return Ok(Vec::new());
    }
    for (j, pair) in maps.windows(2).enumerate() {
        if !pair[1].mul(&pair[0]).is_zero() {
            return Err(Error::CompositionNonzero { degree: j });
        }
    }

    let m = maps.len();
    let mut out = Vec::with_capacity(m + 1);
    for j in 0..=m {
        let dim = if j < m {
            maps[j].cols()
        } else {
            maps[m - 1].rows()
        };
        let kernel = if j < m {
            mod_kernel_lattice(&maps[j], modulus)
        } else {
            Subgroup::full(dim)
        };
        // generators to divide out: columns of d^{j-1} plus m·ℤ^dim
        let mut gens: Vec<Vec<BigInt>> = Vec::new();
        if j > 0 {
            for c in 0..maps[j - 1].cols() {
                gens.push(maps[j - 1].col_vec(c));
            }
        }
        for i in 0..dim {
            let mut e = vec![BigInt::zero(); dim];
            e[i] = modulus.clone();
            gens.push(e);
        }
        let mut coeffs = IntMatrix::zero(kernel.rank(), gens.len());
        for (c, g) in gens.iter().enumerate() {
            let coords = kernel
                .coordinates_of(g)
                .expect("mod-m image not contained in mod-m kernel");
            for (r, value) in coords.into_iter().enumerate() {
                coeffs.set(r, c, value);
            }
        }
        out.push(cokernel(&coeffs));
    }
    Ok(out)
}

/// The lattice `{x ∈ ℤ^n : a·x ≡ 0 mod m}` as a full-rank subgroup of ℤ^n.
fn mod_kernel_lattice(a: &IntMatrix, modulus: &BigInt) -> Subgroup {
    let snf = smith_normal_form(a);
    let n = a.cols();
    let r = snf.rank();
    let mut gens = Vec::with_capacity(n);
    for i in 0..n {
        let scale = if i < r {
            let d = snf.d.at(i, i);
            modulus / d.gcd(modulus)
        } else {
            BigInt::from(1)
        };
        let col = snf.v.col_vec(i);
        gens.push(col.into_iter().map(|e| &e * &scale).collect());
    }
    Subgroup::from_generators(n, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_group_complex() {
        // 0 → Z → 0: encode as the single map Z → 0
        let maps = [IntMatrix::zero(0, 1)];
        let h = complex_cohomology(&maps).unwrap();
        assert_eq!(h, vec![FgAbelianGroup::free(1), FgAbelianGroup::trivial()]);
    }

    #[test]
    fn two_term_unit_complex() {
        // ∂⁰ = ((1,-1),(0,2)): H⁰ = 0 (injective), H¹ = Z/2
        let maps = [IntMatrix::from_rows_i64(&[vec![1, -1], vec![0, 2]])];
        let h = complex_cohomology(&maps).unwrap();
        assert_eq!(h[0], FgAbelianGroup::trivial());
        assert_eq!(h[1], FgAbelianGroup::cyclic(2));
    }

    #[test]
    fn composition_check_fires() {
        let d0 = IntMatrix::from_rows_i64(&[vec![1], vec![0]]);
        let d1 = IntMatrix::from_rows_i64(&[vec![1, 1]]);
        let err = complex_cohomology(&[d0, d1]).unwrap_err();
        assert!(matches!(err, Error::CompositionNonzero { degree: 0 }));
    }

    #[test]
    fn euler_characteristic_bookkeeping() {
        // circle as a 3-cycle cochain complex: Z^3 → Z^3
        let d0 = IntMatrix::from_rows_i64(&[vec![-1, 1, 0], vec![-1, 0, 1], vec![0, -1, 1]]);
        let h = complex_cohomology(std::slice::from_ref(&d0)).unwrap();
        let chi_complex = 3i64 - 3;
        let chi_h = h[0].free_rank() as i64 - h[1].free_rank() as i64;
        assert_eq!(chi_complex, chi_h);
        assert_eq!(h[0], FgAbelianGroup::free(1));
        assert_eq!(h[1], FgAbelianGroup::free(1));
    }

    #[test]
    fn mod_m_cohomology_of_multiplication() {
        // Z → Z by 2: over Z/4 the kernel is 2Z/4 and the image is 2Z/4 in
        // degree 1; H⁰ = Z/2, H¹ = Z/2.
        let maps = [IntMatrix::from_rows_i64(&[vec![2]])];
        let h = complex_cohomology_mod(&maps, &BigInt::from(4)).unwrap();
        assert_eq!(h[0], FgAbelianGroup::cyclic(2));
        assert_eq!(h[1], FgAbelianGroup::cyclic(2));
    }
}
