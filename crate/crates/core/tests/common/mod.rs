#![allow(dead_code)]

use wofc::generate::{all_forests, random_complex, random_forest, random_graph, seeded};
use wofc::{parse_complex, Graph, SimplicialComplex};

pub const TREE: &str = "\
x3 x4 x5
x3 x5 x6
x1 x2 x3
x1 x3 x4
";

pub fn tree() -> SimplicialComplex {
    parse_complex(TREE).unwrap().complex
}

pub fn complex(text: &str) -> SimplicialComplex {
    parse_complex(text).unwrap().complex
}

/// Every forest with at most 4 facets on at most 7 vertices.
pub fn exhaustive_forests() -> Vec<SimplicialComplex> {
    all_forests(4, 7)
}

pub fn random_forests(count: usize) -> Vec<SimplicialComplex> {
    let mut rng = seeded(0x5eed_f0e5);
    (0..count).map(|_| random_forest(&mut rng, 5, 8)).collect()
}

/// Exhaustive small forests followed by 500 random ones.
pub fn forest_corpus() -> Vec<SimplicialComplex> {
    let mut out = exhaustive_forests();
    out.extend(random_forests(500));
    out
}

pub fn random_complexes(count: usize) -> Vec<SimplicialComplex> {
    let mut rng = seeded(0xc0de_0007);
    (0..count).map(|_| random_complex(&mut rng, 5, 8)).collect()
}

pub fn random_graphs(count: usize, max_edges: usize) -> Vec<Graph> {
    let mut rng = seeded(0x9a_4a_u64 + max_edges as u64);
    (0..count).map(|_| random_graph(&mut rng, max_edges, 7)).collect()
}
