//! Instance generators for tests and the `--seed` options.
//!
//! Forests are grown by repeatedly adding a leaf: a new facet `S ∪ N` where
//! `S` is a proper subset of an existing facet (possibly empty) and `N` is a
//! nonempty set of fresh vertices. Removing a leaf from a forest leaves a
//! forest, so every forest arises this way. The converse fails (three facets
//! glued pairwise along single vertices form a cycle), so each step is kept
//! only if the result is still a forest. Vertices are named `x1, x2, ...`.

use std::collections::BTreeSet;
use std::sync::Arc;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::{BitSet, VertexSet};
use crate::complex::leaf_witness;
use crate::complex::SimplicialComplex;
use crate::graphs::Graph;

/// The generator behind every seeded random instance.
pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn variable_names(n: usize) -> Arc<[String]> {
    (1..=n).map(|i| format!("x{i}")).collect::<Vec<_>>().into()
}

fn build(n: usize, facets: Vec<VertexSet>) -> SimplicialComplex {
    SimplicialComplex::from_facet_sets(variable_names(n), &facets)
        .expect("generated facets are nonempty")
        .complex
}

fn random_subset<R: Rng + ?Sized>(rng: &mut R, universe: usize, size: usize) -> VertexSet {
    rand::seq::index::sample(rng, universe, size).into_iter().collect()
}

/// Up to `max_facets` random facets on at most `max_vertices` variables.
/// Draws that are comparable with an earlier facet are retried a few times
/// and otherwise dropped by normalization.
pub fn random_complex<R: Rng + ?Sized>(rng: &mut R, max_facets: usize, max_vertices: usize) -> SimplicialComplex {
    // Favor many facets on few vertices, so that cycles are common.
    let q = rng.random_range(1..=max_facets.max(1)).max(rng.random_range(1..=max_facets.max(1)));
    let span = max_vertices.clamp(1, 4)..=max_vertices.max(1);
    let n = rng.random_range(span.clone()).min(rng.random_range(span));
    let mut facets: Vec<VertexSet> = Vec::with_capacity(q);
    for _ in 0..q {
        let mut draw = BitSet::EMPTY;
        for _ in 0..10 {
            let size = if rng.random_bool(0.1) { 1 } else { rng.random_range(2..=3) };
            draw = random_subset(rng, n, size.min(n));
            if facets.iter().all(|&f| !f.is_subset(draw) && !draw.is_subset(f)) {
                break;
            }
        }
        facets.push(draw);
    }
    build(n, facets)
}

/// Proper subsets of facets of `facets`, plus the empty set.
fn attachment_sets(facets: &[VertexSet]) -> BTreeSet<VertexSet> {
    let mut out = BTreeSet::new();
    for &g in facets {
        out.extend(g.subsets().filter(|&s| s != g));
    }
    out
}

/// A random forest with at most `max_facets` facets and `max_vertices`
/// vertices, with shuffled facet order and vertex labels.
pub fn random_forest<R: Rng + ?Sized>(rng: &mut R, max_facets: usize, max_vertices: usize) -> SimplicialComplex {
    let max_vertices = max_vertices.max(1);
    let q = rng.random_range(1..=max_facets.clamp(1, max_vertices));
    // Every later facet needs at least one fresh vertex.
    let first = rng.random_range(1..=(max_vertices - (q - 1)).min(4));
    let mut facets = vec![BitSet::full(first)];
    let mut n = first;
    for k in 1..q {
        let reserve = q - 1 - k;
        let fresh = rng.random_range(1..=(max_vertices - n - reserve).min(3));
        let new = BitSet::from_indices(n..n + fresh);
        // A disjoint facet always keeps a forest; attachments are retried.
        let mut chosen = new;
        for _ in 0..20 {
            if rng.random_bool(0.2) {
                break;
            }
            let g = facets[rng.random_range(0..facets.len())];
            let mut s: VertexSet = g.iter().filter(|_| rng.random_bool(0.5)).collect();
            if s == g {
                s.remove(g.iter().nth(rng.random_range(0..g.len())).unwrap());
            }
            facets.push(s | new);
            let ok = is_forest(&facets);
            facets.pop();
            if ok {
                chosen = s | new;
                break;
            }
        }
        facets.push(chosen);
        n += fresh;
    }
    let mut relabel: Vec<usize> = (0..n).collect();
    relabel.shuffle(rng);
    let mut facets: Vec<VertexSet> = facets
        .into_iter()
        .map(|f| f.iter().map(|v| relabel[v]).collect())
        .collect();
    facets.shuffle(rng);
    build(n, facets)
}

fn is_forest(facets: &[VertexSet]) -> bool {
    let mut sub = Vec::with_capacity(facets.len());
    BitSet::full(facets.len()).subsets().all(|set| {
        sub.clear();
        sub.extend(set.iter().map(|i| facets[i]));
        set.len() < 3 || (0..sub.len()).any(|f| leaf_witness(&sub, f).is_some())
    })
}

/// Isomorphism-invariant key: the vertex-by-facet incidence columns,
/// sorted, minimized over facet orders.
fn canonical_key(facets: &[VertexSet], n: usize) -> Vec<u16> {
    (0..facets.len())
        .permutations(facets.len())
        .map(|perm| {
            let mut cols: Vec<u16> = (0..n)
                .map(|v| {
                    perm.iter()
                        .enumerate()
                        .filter(|(_, &f)| facets[f].contains(v))
                        .fold(0u16, |acc, (pos, _)| acc | (1 << pos))
                })
                .collect();
            cols.sort_unstable();
            cols
        })
        .min()
        .unwrap_or_default()
}

/// Every forest with at most `max_facets` facets on at most `max_vertices`
/// vertices, one per isomorphism class, ordered by facet count.
pub fn all_forests(max_facets: usize, max_vertices: usize) -> Vec<SimplicialComplex> {
    let mut level: Vec<(usize, Vec<VertexSet>)> = (1..=max_vertices).map(|k| (k, vec![BitSet::full(k)])).collect();
    let mut out: Vec<SimplicialComplex> = Vec::new();
    for q in 1..=max_facets {
        out.extend(level.iter().map(|(n, f)| build(*n, f.clone())));
        if q == max_facets {
            break;
        }
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for (n, facets) in &level {
            for s in attachment_sets(facets) {
                for fresh in 1..=max_vertices - n {
                    let mut grown = facets.clone();
                    grown.push(s | BitSet::from_indices(*n..n + fresh));
                    let m = n + fresh;
                    if is_forest(&grown) && seen.insert(canonical_key(&grown, m)) {
                        next.push((m, grown));
                    }
                }
            }
        }
        level = next;
    }
    out
}

/// A random simple graph with between 1 and `max_edges` edges on at most
/// `max_vertices` vertices.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, max_edges: usize, max_vertices: usize) -> Graph {
    let n = max_vertices.max(2);
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let m = rng.random_range(1..=max_edges.clamp(1, pairs.len()));
    let picked = rand::seq::index::sample(rng, pairs.len(), m);
    let edges: Vec<(String, String)> = picked
        .into_iter()
        .map(|i| {
            let (u, v) = pairs[i];
            (format!("v{}", u + 1), format!("v{}", v + 1))
        })
        .collect();
    Graph::from_edges(&edges).expect("distinct non-loop edges").graph
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_forests_are_forests() {
        let mut rng = seeded(7);
        for _ in 0..200 {
            let f = random_forest(&mut rng, 5, 8);
            assert!(f.num_facets() <= 5 && f.num_vertices() <= 8);
            assert!(f.is_forest(20).unwrap().is_forest(), "{f:?}");
        }
    }

    #[test]
    fn small_forest_counts() {
        // One facet: sizes 1..=3. Two facets on three vertices: {a}{b},
        // {a}{bc} and {ab}{bc}.
        let all = all_forests(2, 3);
        assert!(all_forests(4, 5).iter().all(|f| f.is_forest(20).unwrap().is_forest()));
        assert_eq!(all.iter().filter(|f| f.num_facets() == 1).count(), 3);
        assert_eq!(all.iter().filter(|f| f.num_facets() == 2).count(), 3);
        assert!(all.iter().all(|f| f.is_forest(20).unwrap().is_forest()));
    }

    #[test]
    fn isomorphic_complexes_share_a_key() {
        let a = [BitSet::from_indices([0, 1]), BitSet::from_indices([1, 2])];
        let b = [BitSet::from_indices([1, 2]), BitSet::from_indices([0, 2])];
        assert_eq!(canonical_key(&a, 3), canonical_key(&b, 3));
        let c = [BitSet::from_indices([0, 1]), BitSet::from_indices([2])];
        assert_ne!(canonical_key(&a, 3), canonical_key(&c, 3));
    }

    #[test]
    fn random_graphs_and_complexes_respect_bounds() {
        let mut rng = seeded(1);
        for _ in 0..100 {
            let g = random_graph(&mut rng, 8, 6);
            assert!(g.num_edges() >= 1 && g.num_edges() <= 8);
            let c = random_complex(&mut rng, 5, 8);
            assert!(c.num_facets() >= 1 && c.num_facets() <= 5);
        }
    }

    #[test]
    fn seeds_are_reproducible() {
        let a = random_forest(&mut seeded(42), 5, 8);
        let b = random_forest(&mut seeded(42), 5, 8);
        assert_eq!(a, b);
    }
}
