//! Shared fixtures and generators for the integration test suites.
#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use picloc::simplicial::SimplicialComplex;

pub fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

pub fn vertex_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

pub fn hollow_triangle() -> SimplicialComplex {
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

pub fn two_triangles() -> SimplicialComplex {
    SimplicialComplex::from_facets(
        labels(&["x", "y", "z", "w"]),
        &[labels(&["x", "y", "z"]), labels(&["y", "z", "w"])],
    )
    .unwrap()
}

/// The boundary surface of a triangular prism without its top and bottom
/// triangles: three rectangles, each split into two triangles. Every vertex
/// link is a path on four vertices and the whole complex retracts to a
/// circle.
pub fn prism() -> SimplicialComplex {
    let v = labels(&["1", "2", "3", "4", "5", "6"]);
    let facets: Vec<Vec<String>> = [
        ["1", "2", "5"],
        ["1", "4", "5"],
        ["2", "3", "6"],
        ["2", "5", "6"],
        ["1", "3", "4"],
        ["3", "4", "6"],
    ]
    .iter()
    .map(|f| labels(f))
    .collect();
    SimplicialComplex::from_facets(v, &facets).unwrap()
}

/// The 6-vertex triangulation of the real projective plane (H₁ = ℤ/2).
pub fn projective_plane() -> SimplicialComplex {
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

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random complex on up to `max_vertices` vertices with every singleton a
/// face: random facets of mixed sizes, missing vertices patched in as
/// isolated singleton facets.
pub fn random_complex(rng: &mut ChaCha8Rng, max_vertices: usize) -> SimplicialComplex {
    let n = rng.gen_range(1..=max_vertices);
    let vertices = vertex_labels(n);
    let facet_count = rng.gen_range(1..=(n + 2));
    let mut facets: Vec<Vec<String>> = Vec::new();
    for _ in 0..facet_count {
        let size = 1 + (rng.gen_range(0..n) * rng.gen_range(0..n)) / n.max(1);
        let mut pool: Vec<usize> = (0..n).collect();
        let mut facet = Vec::new();
        for _ in 0..size.min(n) {
            let pick = rng.gen_range(0..pool.len());
            facet.push(pool.swap_remove(pick));
        }
        facets.push(facet.iter().map(|&v| vertices[v].clone()).collect());
    }
    let mut covered = vec![false; n];
    for f in &facets {
        for label in f {
            let idx = vertices.iter().position(|v| v == label).unwrap();
            covered[idx] = true;
        }
    }
    for (idx, seen) in covered.iter().enumerate() {
        if !seen {
            facets.push(vec![vertices[idx].clone()]);
        }
    }
    SimplicialComplex::from_facets(vertices, &facets).unwrap()
}

/// A random graph (dimension ≤ 1 complex) on up to `max_vertices` vertices.
pub fn random_graph(rng: &mut ChaCha8Rng, max_vertices: usize) -> SimplicialComplex {
    let n = rng.gen_range(1..=max_vertices);
    let vertices = vertex_labels(n);
    let p: f64 = rng.gen_range(0.1..0.9);
    let mut facets: Vec<Vec<String>> = Vec::new();
    let mut covered = vec![false; n];
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                facets.push(vec![vertices[a].clone(), vertices[b].clone()]);
                covered[a] = true;
                covered[b] = true;
            }
        }
    }
    for (idx, seen) in covered.iter().enumerate() {
        if !seen {
            facets.push(vec![vertices[idx].clone()]);
        }
    }
    SimplicialComplex::from_facets(vertices, &facets).unwrap()
}

/// Every complex on `n ≤ 4` vertices in which all singletons are faces,
/// enumerated as the downward-closed families of subsets of size ≥ 2.
pub fn enumerate_full_support_complexes(n: usize) -> Vec<SimplicialComplex> {
    assert!(n <= 4, "exhaustive enumeration is for small vertex counts");
    let vertices = vertex_labels(n);
    let mut big_subsets: Vec<Vec<usize>> = Vec::new();
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() >= 2 {
            big_subsets.push((0..n).filter(|i| mask >> i & 1 == 1).collect());
        }
    }
    let m = big_subsets.len();
    let mut out = Vec::new();
    'family: for family in 0u32..(1u32 << m) {
        let chosen: Vec<&Vec<usize>> = (0..m)
            .filter(|i| family >> i & 1 == 1)
            .map(|i| &big_subsets[i])
            .collect();
        // downward closure within the size ≥ 2 world
        for face in &chosen {
            if face.len() == 2 {
                continue;
            }
            for drop in 0..face.len() {
                let sub: Vec<usize> = face
                    .iter()
                    .enumerate()
                    .filter(|(pos, _)| *pos != drop)
                    .map(|(_, &v)| v)
                    .collect();
                if !chosen.iter().any(|f| **f == sub) {
                    continue 'family;
                }
            }
        }
        let mut facets: Vec<Vec<String>> = chosen
            .iter()
            .map(|f| f.iter().map(|&v| vertices[v].clone()).collect())
            .collect();
        for label in &vertices {
            facets.push(vec![label.clone()]);
        }
        out.push(SimplicialComplex::from_facets(vertices.clone(), &facets).unwrap());
    }
    out
}
