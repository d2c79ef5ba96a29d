//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the verified values (run with `--nocapture` to see them).

mod common;

use std::time::Instant;

use num_bigint::BigInt;

use picloc::abelian::{uct_mod, FgAbelianGroup, FieldModel, IntMatrix};
use picloc::binoid::BinoidPresentation;
use picloc::cech::{build_cech_complex, constant_sheaf_complex, SimplicialUnitSheaf};
use picloc::error::Error;
use picloc::monomial::{nilpotent_cech_dimensions, DegreeBox, MonomialIdeal};
use picloc::picard::{
    crosscheck_simplicial, graph_fast_path, picloc_integral_binoid, picloc_simplicial_formula,
    stanley_reisner_cohomology,
};
use picloc::simplicial::{cohomology_mod, cohomology_z, homology_z};

use common::*;

#[test]
fn criterion_01_pic_of_x_plus_y_eq_2z() {
    let start = Instant::now();
    let p = BinoidPresentation::new(
        labels(&["x", "y", "z"]),
        vec![(vec![1, 1, 0], vec![0, 0, 2])],
        vec![],
    )
    .unwrap();
    let report = picloc_integral_binoid(&p).unwrap();
    assert_eq!(report.combinatorial(1), FgAbelianGroup::cyclic(2));
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!(
        "criterion 01: PASS — Pic^loc(x,y,z | x+y=2z) = {} in {elapsed:?}",
        report.combinatorial(1)
    );
}

#[test]
fn criterion_02_ranks_of_x_plus_y_eq_z_plus_w() {
    let start = Instant::now();
    let p = BinoidPresentation::new(
        labels(&["x", "y", "z", "w"]),
        vec![(vec![1, 1, 0, 0], vec![0, 0, 1, 1])],
        vec![],
    )
    .unwrap();
    let gamma = picloc::binoid::difference_group(&p).unwrap();
    let sheaf = picloc::cech::IntegralBinoidSheaf::new(gamma, 4);
    let complex = build_cech_complex(&sheaf).unwrap();
    assert_eq!(complex.ranks(), vec![4, 14, 12, 3]);
    let h = complex.cohomology().unwrap();
    assert_eq!(h[1], FgAbelianGroup::free(1));
    assert_eq!(h[2], FgAbelianGroup::trivial());
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!("criterion 02: PASS — ranks (4, 14, 12, 3), H^1 = Z, H^2 = 0 in {elapsed:?}");
}

#[test]
fn criterion_03_pipeline_equality_random_suite() {
    let start = Instant::now();
    let mut rng = seeded_rng(0x5eed_0003);
    let mut checked = 0usize;
    for _ in 0..200 {
        let k = random_complex(&mut rng, 7);
        let report = crosscheck_simplicial(&k)
            .unwrap_or_else(|e| panic!("pipelines disagree on {k:?}: {e}"));
        assert_eq!(report.provenance.as_str(), "both-agree");
        checked += 1;
    }
    let elapsed = start.elapsed();
    assert_eq!(checked, 200);
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}");
    println!(
        "criterion 03: PASS — direct ≅ formula on {checked} random complexes (≤ 7 vertices) in {elapsed:?}"
    );
}

#[test]
fn criterion_04_graph_corollary() {
    let mut rng = seeded_rng(0x5eed_0004);
    for _ in 0..100 {
        let g = random_graph(&mut rng, 8);
        let counts = graph_fast_path(&g).unwrap();
        let report = picloc_simplicial_formula(&g).unwrap();
        assert_eq!(
            report.combinatorial(0),
            FgAbelianGroup::free(counts.isolated),
            "H^0 mismatch on {g:?}"
        );
        assert_eq!(
            report.combinatorial(1),
            FgAbelianGroup::free(counts.picard_rank),
            "H^1 mismatch on {g:?}"
        );
        // r really is the degree sum
        let expected_r: usize = g
            .vertex_degrees()
            .iter()
            .filter(|&&d| d > 0)
            .map(|&d| d - 1)
            .sum();
        assert_eq!(counts.picard_rank, expected_r);
    }
    println!("criterion 04: PASS — (s, r) matches the general formula on 100 random graphs (≤ 8 vertices)");
}

#[test]
fn criterion_05_section_examples() {
    // two triangles glued along an edge: everything trivial in degree 1
    let k = two_triangles();
    let report = stanley_reisner_cohomology(&k, FieldModel::Symbolic).unwrap();
    assert_eq!(report.combinatorial(1), FgAbelianGroup::trivial());
    assert!(report.degrees[1].field.as_ref().unwrap().is_trivial());

    // prism shell: combinatorially trivial but one K* from the circle
    let p = prism();
    let report = stanley_reisner_cohomology(&p, FieldModel::Symbolic).unwrap();
    assert_eq!(report.combinatorial(1), FgAbelianGroup::trivial());
    let field = report.degrees[1].field.as_ref().unwrap();
    assert_eq!(field.kstar_copies, 1);
    assert!(field.mu.is_empty() && field.ext.is_empty() && !field.infinite_ext);
    println!("criterion 05: PASS — two-triangle complex has H^1 = 0 ⊕ 0; prism has H^1 = 0 ⊕ K*");
}

#[test]
fn criterion_06_stanley_reisner_triangle() {
    let t = hollow_triangle();

    // hand-built Čech coboundary of the unit part over {D(X), D(Y), D(Z)}:
    // (a, b, c) ↦ (−a, b, −a, c, −b, c) on charts xy, xz, yz
    let hand_units = IntMatrix::from_rows_i64(&[
        vec![-1, 0, 0],
        vec![0, 1, 0],
        vec![-1, 0, 0],
        vec![0, 0, 1],
        vec![0, -1, 0],
        vec![0, 0, 1],
    ]);
    let built = build_cech_complex(&SimplicialUnitSheaf::new(&t)).unwrap();
    assert_eq!(
        built.maps[0], hand_units,
        "unit part differs from the hand-built matrix"
    );

    // hand-built constant-sheaf coboundary (K* part skeleton):
    // (α, β, γ) ↦ (β−α, γ−α, γ−β)
    let hand_constant = IntMatrix::from_rows_i64(&[vec![-1, 1, 0], vec![-1, 0, 1], vec![0, -1, 1]]);
    let constant = constant_sheaf_complex(&t, FgAbelianGroup::free(1)).unwrap();
    assert_eq!(
        constant.skeleton.maps[0], hand_constant,
        "constant part differs from the hand-built matrix"
    );

    // assembled answers
    let sym = stanley_reisner_cohomology(&t, FieldModel::Symbolic).unwrap();
    assert_eq!(sym.combinatorial(1), FgAbelianGroup::free(3));
    let field = sym.degrees[1].field.as_ref().unwrap();
    assert_eq!(field.kstar_copies, 1);
    assert!(field.mu.is_empty() && field.ext.is_empty());

    let fq = stanley_reisner_cohomology(&t, FieldModel::FiniteField(7)).unwrap();
    assert_eq!(
        fq.total_group(1).unwrap(),
        FgAbelianGroup::free(3).direct_sum(&FgAbelianGroup::cyclic(6))
    );

    // the hand-built unit complex has the same cohomology
    let h1_hand = picloc::abelian::complex_cohomology(&[hand_units]).unwrap();
    assert_eq!(h1_hand[1], FgAbelianGroup::free(3));
    println!(
        "criterion 06: PASS — H^1(Spec• K[triangle], O*) = Z^3 ⊕ K* (and Z^3 ⊕ Z/6 over F_7), matrix-level match"
    );
}

#[test]
fn criterion_07_constant_sheaf_equivalence() {
    let mut checked = 0usize;
    // exhaustive on ≤ 4 vertices
    for n in 1..=4 {
        for k in enumerate_full_support_complexes(n) {
            assert_constant_sheaf_matches(&k);
            checked += 1;
        }
    }
    // dense random sampling on 5 and 6 vertices
    let mut rng = seeded_rng(0x5eed_0007);
    for _ in 0..400 {
        let k = random_complex(&mut rng, 6);
        assert_constant_sheaf_matches(&k);
        checked += 1;
    }
    println!(
        "criterion 07: PASS — constant-sheaf Čech cohomology equals simplicial cohomology on {checked} complexes (exhaustive ≤ 4 vertices, sampled on 5–6)"
    );
}

fn assert_constant_sheaf_matches(k: &picloc::simplicial::SimplicialComplex) {
    let cech = constant_sheaf_complex(k, FgAbelianGroup::free(1))
        .unwrap()
        .cohomology()
        .unwrap();
    let simplicial = cohomology_z(k, false).unwrap();
    let top = k.dim().unwrap_or(-1);
    for j in 0..=top.max(0) {
        assert_eq!(
            cech.get(j as usize)
                .cloned()
                .unwrap_or_else(FgAbelianGroup::trivial),
            simplicial.at(j),
            "constant sheaf mismatch at degree {j} on {k:?}"
        );
    }
    for (j, h) in cech.iter().enumerate().skip((top.max(0) + 1) as usize) {
        assert!(h.is_trivial(), "spurious class at degree {j}");
    }
}

#[test]
fn criterion_08_vanishing_and_freeness() {
    let mut rng = seeded_rng(0x5eed_0008);
    for _ in 0..200 {
        let k = random_complex(&mut rng, 7);
        let dim = k.dim().unwrap_or(-1);
        // compute the full Čech cohomology in all cover degrees, so the
        // vanishing above the dimension is genuinely exercised
        let full = build_cech_complex(&SimplicialUnitSheaf::new(&k)).unwrap();
        let groups = full.cohomology().unwrap();
        for (j, h) in groups.iter().enumerate() {
            if (j as isize) > dim {
                assert!(
                    h.is_trivial(),
                    "H^{j} nonzero above dimension {dim} on {k:?}"
                );
            }
        }
        if let Some(h0) = groups.first() {
            assert!(h0.is_free(), "H^0 not free on {k:?}");
            let zero_dim_facets = k.facets().iter().filter(|f| f.len() == 1).count();
            assert_eq!(h0.free_rank(), zero_dim_facets, "H^0 rank on {k:?}");
        }
        if let Some(h1) = groups.get(1) {
            assert!(h1.is_free(), "H^1 not free on {k:?}");
        }
    }
    println!(
        "criterion 08: PASS — vanishing above dim, free H^0/H^1, H^0 rank = #0-dimensional facets on 200 random complexes"
    );
}

#[test]
fn criterion_09_uct_oracle() {
    let moduli = [2u32, 3, 4, 6];
    let mut rng = seeded_rng(0x5eed_0009);
    let mut complexes: Vec<picloc::simplicial::SimplicialComplex> =
        (0..50).map(|_| random_complex(&mut rng, 6)).collect();
    complexes.push(projective_plane());
    for k in &complexes {
        let hom = homology_z(k).unwrap();
        let top = k.dim().unwrap_or(-1).max(0);
        for m in moduli {
            let m = BigInt::from(m);
            let direct = cohomology_mod(k, &m).unwrap();
            for j in 0..=top {
                let assembled = uct_mod(&hom.at(j), &hom.at(j - 1), &m);
                assert_eq!(
                    direct.at(j),
                    assembled,
                    "UCT mismatch at j={j}, m={m} on {k:?}"
                );
            }
        }
    }
    // the torsion witness: H^2(RP², Z/2) = Z/2 from Ext(H_1, Z/2)
    let rp2 = projective_plane();
    let h2 = cohomology_mod(&rp2, &BigInt::from(2)).unwrap().at(2);
    assert_eq!(h2, FgAbelianGroup::cyclic(2));
    println!(
        "criterion 09: PASS — direct mod-m cochains equal the UCT assembly on 51 complexes × m ∈ {{2,3,4,6}}, including RP²"
    );
}

#[test]
fn criterion_10_rejected_inputs() {
    // the non-cancellative, torsion presentation is refused with a torsion
    // diagnostic
    let bad = BinoidPresentation::new(
        labels(&["e", "f", "g"]),
        vec![
            (vec![2, 0, 0], vec![1, 0, 0]),
            (vec![0, 2, 0], vec![0, 1, 0]),
            (vec![0, 0, 2], vec![1, 1, 0]),
        ],
        vec![],
    )
    .unwrap();
    match picloc_integral_binoid(&bad) {
        Err(Error::TorsionDetected { factors }) => {
            assert_eq!(factors, vec![BigInt::from(2)]);
        }
        other => panic!("expected TorsionDetected, got {other:?}"),
    }

    // the cuspidal-curve binoid goes through the integral engine; the
    // combinatorial answer is trivial (the algebra side differs, which is
    // documented as out of scope)
    let neil = BinoidPresentation::new(labels(&["x", "y"]), vec![(vec![2, 0], vec![0, 3])], vec![])
        .unwrap();
    let report = picloc_integral_binoid(&neil).unwrap();
    assert_eq!(report.combinatorial(0), FgAbelianGroup::free(1));
    assert_eq!(report.combinatorial(1), FgAbelianGroup::trivial());

    let readme = std::fs::read_to_string(
        std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../README.md"),
    )
    .expect("workspace README");
    assert!(
        readme.contains("cuspidal") || readme.contains("Neil"),
        "README must document the non-normal discrepancy"
    );
    println!(
        "criterion 10: PASS — torsion presentation rejected with Z/2 diagnostic; cusp binoid computes Pic^loc = 0 with the algebra-side discrepancy documented"
    );
}

#[test]
fn criterion_11_nilpotent_module() {
    // I = (X²) in K[X,Y] over the box [−2,2]²: one class in degree (1, b)
    // at j = 0 for every b, nothing anywhere else
    let i = MonomialIdeal::new(labels(&["x", "y"]), vec![vec![2, 0]]).unwrap();
    let window = DegreeBox::uniform(2, -2, 2).unwrap();
    let table = nilpotent_cech_dimensions(&i, &window, FieldModel::AlgClosedChar0).unwrap();
    for b in -2..=2i64 {
        for a in -2..=2i64 {
            let expected_j0 = usize::from(a == 1);
            let row = table.entries.get(&vec![a, b]);
            match row {
                None => assert_eq!(expected_j0, 0, "missing entry at ({a},{b})"),
                Some(dims) => {
                    assert_eq!(dims[0], expected_j0, "j = 0 at ({a},{b})");
                    assert!(dims[1..].iter().all(|&d| d == 0), "higher j at ({a},{b})");
                }
            }
        }
    }
    assert_eq!(table.entries.len(), 5);

    // squarefree ideals have no nilpotents at all
    let squarefree =
        MonomialIdeal::new(labels(&["x", "y", "z"]), vec![vec![1, 1, 0], vec![0, 1, 1]]).unwrap();
    let window3 = DegreeBox::uniform(3, -2, 2).unwrap();
    let zero_table =
        nilpotent_cech_dimensions(&squarefree, &window3, FieldModel::AlgClosedChar0).unwrap();
    assert!(zero_table.is_zero());
    println!(
        "criterion 11: PASS — (X²) table is 1 exactly in degrees (1, b) at j = 0; squarefree table is zero"
    );
}

#[test]
fn acceptance_cli_binoid_matches_criterion_01() {
    // the CLI path of criterion 1: `picloc binoid` on the presentation file
    let dir = tempdir();
    let path = dir.join("x_plus_y_eq_2z.json");
    std::fs::write(
        &path,
        r#"{"generators":["x","y","z"],"congruences":[[[1,1,0],[0,0,2]]],"infinities":[]}"#,
    )
    .unwrap();
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_picloc"))
        .arg("binoid")
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["degrees"][1]["free_rank"], 0);
    assert_eq!(value["degrees"][1]["torsion"][0], 2);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn acceptance_cli_rejects_non_cancellative_with_exit_1() {
    let dir = tempdir();
    let path = dir.join("idempotent.json");
    std::fs::write(
        &path,
        r#"{"generators":["e","f","g"],"congruences":[[[2,0,0],[1,0,0]],[[0,2,0],[0,1,0]],[[0,0,2],[1,1,0]]],"infinities":[]}"#,
    )
    .unwrap();
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_picloc"))
        .arg("binoid")
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("torsion"), "diagnostic: {stderr}");
    std::fs::remove_dir_all(&dir).ok();
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!(
        "picloc-acceptance-{}-{}",
        std::process::id(),
        std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .unwrap()
            .as_nanos()
    ));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
