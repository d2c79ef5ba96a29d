//! Property tests for the exact linear algebra and the simplicial layer.

mod common;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use picloc::abelian::{
    coefficient_value, cokernel, image_basis, kernel_basis, smith_normal_form, solve, FieldModel,
    IntMatrix, Subgroup,
};
use picloc::binoid::{difference_group, minimal_face_contains, BinoidPresentation};
use picloc::simplicial::{cochain_complex, cohomology_mod, cohomology_z, SimplicialComplex};

use common::{random_complex, seeded_rng, vertex_labels};

fn matrix_strategy(max_dim: usize, max_entry: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(-max_entry..=max_entry, r * c).prop_map(move |entries| {
            IntMatrix::from_fn(r, c, |i, j| BigInt::from(entries[i * c + j]))
        })
    })
}

/// A complex on `n` vertices from a facet bitmask list.
fn complex_strategy(n: usize) -> impl Strategy<Value = SimplicialComplex> {
    proptest::collection::vec(1u32..(1 << n), 1..=n + 2).prop_map(move |masks| {
        let vertices = vertex_labels(n);
        let mut facets: Vec<Vec<String>> = masks
            .iter()
            .map(|m| {
                (0..n)
                    .filter(|i| m >> i & 1 == 1)
                    .map(|i| vertices[i].clone())
                    .collect()
            })
            .collect();
        for label in &vertices {
            if !facets.iter().any(|f| f.contains(label)) {
                facets.push(vec![label.clone()]);
            }
        }
        SimplicialComplex::from_facets(vertices, &facets).unwrap()
    })
}

proptest! {
    #[test]
    fn snf_decomposition_invariants(a in matrix_strategy(6, 9)) {
        let snf = smith_normal_form(&a);
        prop_assert_eq!(snf.u.mul(&a).mul(&snf.v), snf.d.clone());
        prop_assert_eq!(snf.u.determinant().abs(), BigInt::one());
        prop_assert_eq!(snf.v.determinant().abs(), BigInt::one());
        let diag = snf.diagonal();
        for w in diag.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        for i in 0..snf.d.rows() {
            for j in 0..snf.d.cols() {
                if i != j {
                    prop_assert!(snf.d.at(i, j).is_zero());
                }
            }
        }
    }

    #[test]
    fn cokernel_is_unimodular_invariant(a in matrix_strategy(5, 6), seed in any::<u64>()) {
        // random unimodular factors from elementary operations
        let mut l = IntMatrix::identity(a.rows());
        let mut r = IntMatrix::identity(a.cols());
        let mut state = seed | 1;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..8 {
            if l.rows() > 1 {
                let i = (next() % l.rows() as u64) as usize;
                let mut j = (next() % l.rows() as u64) as usize;
                if i == j { j = (j + 1) % l.rows(); }
                let f = BigInt::from((next() % 5) as i64 - 2);
                l.add_row_multiple(i, j, &f);
            }
            if r.cols() > 1 {
                let i = (next() % r.cols() as u64) as usize;
                let mut j = (next() % r.cols() as u64) as usize;
                if i == j { j = (j + 1) % r.cols(); }
                let f = BigInt::from((next() % 5) as i64 - 2);
                r.add_col_multiple(i, j, &f);
            }
        }
        prop_assert_eq!(cokernel(&l.mul(&a).mul(&r)), cokernel(&a));
    }

    #[test]
    fn kernel_annihilates_and_image_lifts(a in matrix_strategy(5, 6)) {
        let kernel = kernel_basis(&a);
        for i in 0..kernel.rank() {
            let product = a.mul_vec(kernel.basis().row(i));
            prop_assert!(product.iter().all(|e| e.is_zero()));
        }
        let image = image_basis(&a);
        for i in 0..image.rank() {
            prop_assert!(solve(&a, image.basis().row(i)).is_some());
        }
        // rank bookkeeping
        prop_assert_eq!(kernel.rank() + image.rank(), a.cols());
    }

    #[test]
    fn hnf_is_canonical_under_generator_shuffles(a in matrix_strategy(4, 5), seed in any::<u64>()) {
        let rows: Vec<Vec<BigInt>> = (0..a.rows()).map(|i| a.row_vec(i)).collect();
        let g1 = Subgroup::from_generators(a.cols(), rows.clone());
        let mut shuffled = rows.clone();
        shuffled.rotate_left((seed % a.rows() as u64) as usize);
        // add a redundant combination of the first two generators
        if shuffled.len() >= 2 {
            let extra: Vec<BigInt> = shuffled[0]
                .iter()
                .zip(&shuffled[1])
                .map(|(x, y)| x + y)
                .collect();
            shuffled.push(extra);
        }
        let g2 = Subgroup::from_generators(a.cols(), shuffled);
        prop_assert_eq!(g1, g2);
    }

    #[test]
    fn cochain_complexes_square_to_zero(k in complex_strategy(5), reduced in any::<bool>()) {
        let c = cochain_complex(&k, reduced).unwrap();
        for w in c.maps.windows(2) {
            prop_assert!(w[1].mul(&w[0]).is_zero());
        }
    }

    #[test]
    fn euler_characteristic_matches(k in complex_strategy(5)) {
        let c = cochain_complex(&k, false).unwrap();
        let h = cohomology_z(&k, false).unwrap();
        let chi_ranks: i64 = c.ranks.iter().enumerate()
            .map(|(j, &r)| if j % 2 == 0 { r as i64 } else { -(r as i64) })
            .sum();
        let chi_h: i64 = h.groups.iter().enumerate()
            .map(|(j, g)| if j % 2 == 0 { g.free_rank() as i64 } else { -(g.free_rank() as i64) })
            .sum();
        prop_assert_eq!(chi_ranks, chi_h);
    }

    #[test]
    fn degree_zero_counts_components(k in complex_strategy(6)) {
        let h = cohomology_z(&k, false).unwrap();
        prop_assert_eq!(h.at(0).free_rank(), k.component_count());
        prop_assert!(h.at(0).is_free());
        // reduced degree 0 has one copy less
        let reduced = cohomology_z(&k, true).unwrap();
        prop_assert_eq!(reduced.at(0).free_rank(), k.component_count() - 1);
    }

    #[test]
    fn cohomology_vanishes_above_dimension(k in complex_strategy(5)) {
        let h = cohomology_z(&k, false).unwrap();
        let dim = k.dim().unwrap();
        for j in (dim + 1)..(h.max_degree() + 1) {
            prop_assert!(h.at(j).is_trivial());
        }
    }

    #[test]
    fn link_of_empty_face_and_full_restriction_are_identities(k in complex_strategy(5)) {
        prop_assert_eq!(k.link(&[]).unwrap(), k.clone());
        let all: std::collections::BTreeSet<usize> = (0..k.vertex_count()).collect();
        prop_assert_eq!(k.restriction(&all), k.clone());
    }

    #[test]
    fn downward_closure_holds(k in complex_strategy(5)) {
        for face in k.faces() {
            for drop in 0..face.len() {
                let sub: Vec<usize> = face
                    .iter()
                    .enumerate()
                    .filter(|(pos, _)| *pos != drop)
                    .map(|(_, &v)| v)
                    .collect();
                prop_assert!(k.is_face(&sub));
            }
        }
    }
}

#[test]
fn finite_field_coefficients_agree_with_mod_q_minus_1() {
    // K* of F_q is cyclic of order q−1, so H^j(△, K*) must equal the direct
    // mod-(q−1) cochain cohomology
    let mut rng = seeded_rng(0xfeed_0001);
    for q in [4u64, 5, 7, 9] {
        for _ in 0..12 {
            let k = random_complex(&mut rng, 6);
            let hom = picloc::simplicial::homology_z(&k).unwrap();
            let direct = cohomology_mod(&k, &BigInt::from(q - 1)).unwrap();
            let top = k.dim().unwrap_or(0).max(0);
            for j in 0..=top {
                let value =
                    coefficient_value(&hom.at(j), &hom.at(j - 1), FieldModel::FiniteField(q))
                        .unwrap();
                assert_eq!(
                    value.concrete().unwrap(),
                    direct.at(j),
                    "q={q}, j={j}, complex {k:?}"
                );
            }
        }
    }
}

#[test]
fn minimal_face_test_is_monotone() {
    let presentations = [
        BinoidPresentation::new(
            vertex_labels(3),
            vec![(vec![1, 1, 0], vec![0, 0, 2])],
            vec![],
        )
        .unwrap(),
        BinoidPresentation::new(
            vertex_labels(4),
            vec![(vec![1, 1, 0, 0], vec![0, 0, 1, 1])],
            vec![],
        )
        .unwrap(),
        BinoidPresentation::new(
            vertex_labels(3),
            vec![(vec![1, 2, 0], vec![0, 0, 3])],
            vec![],
        )
        .unwrap(),
    ];
    for p in &presentations {
        let n = p.generator_count();
        let gamma = difference_group(p).unwrap();
        for f_mask in 1u64..(1 << n) {
            let f: Vec<u64> = (0..n).map(|v| u64::from(f_mask >> v & 1 == 1)).collect();
            for i in 0..n {
                if !minimal_face_contains(&gamma, &f, i) {
                    continue;
                }
                // adding a generator already on the face keeps every member
                for j in 0..n {
                    if !minimal_face_contains(&gamma, &f, j) {
                        continue;
                    }
                    let mut bigger = f.clone();
                    bigger[j] += 1;
                    assert!(
                        minimal_face_contains(&gamma, &bigger, i),
                        "monotonicity broke: f={f:?}, j={j}, i={i}"
                    );
                }
            }
        }
    }
}

#[test]
fn torsion_groups_from_mod_m_complexes() {
    // Z/m complexes produce groups whose invariant factors divide m
    let mut rng = seeded_rng(0xfeed_0002);
    for _ in 0..20 {
        let k = random_complex(&mut rng, 6);
        for m in [2u32, 6, 12] {
            let groups = cohomology_mod(&k, &BigInt::from(m)).unwrap();
            for j in 0..=k.dim().unwrap_or(0).max(0) {
                let g = groups.at(j);
                assert_eq!(g.free_rank(), 0);
                for d in g.invariant_factors() {
                    assert!((&BigInt::from(m) % d).is_zero(), "factor {d} ∤ {m}");
                }
            }
        }
    }
}
