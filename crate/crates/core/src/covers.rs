//! Facet covers, vertex covers, induced matchings and well ordered facet
//! covers.
//!
//! A sequence `F1, ..., Fk` of facets is a *well ordered facet cover* when
//! `{F1, ..., Fk}` is a minimal facet cover and every facet `H` outside it
//! admits a position `i <= k - 1` with `Fi ⊆ H ∪ F(i+1) ∪ ... ∪ Fk`.
//!
//! Positions in certificates are 0-based, so the admissible witness
//! positions are `0..=k-2`.

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::Serialize;

use crate::bitset::{BitSet, FacetSet, VertexSet};
use crate::complex::SimplicialComplex;
use crate::error::{check_cap, CapKind, Error, Result};

/// Search strategy for [`well_ordered_order`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStrategy {
    /// Permutations up to [`PERMUTATION_THRESHOLD`] facets, backtracking
    /// above.
    Auto,
    Permutations,
    Backtracking,
}

/// Largest cover size handled by plain permutation enumeration in
/// [`SearchStrategy::Auto`].
pub const PERMUTATION_THRESHOLD: usize = 8;

/// Above this many facets the subset-union table is not materialized.
const UNION_TABLE_LIMIT: usize = 22;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WellOrderedCertificate {
    /// Cover facet indices, ascending.
    pub cover: Vec<usize>,
    /// The sequence itself.
    pub order: Vec<usize>,
    /// Outside facet index -> 0-based position of its witness in `order`.
    pub witnesses: BTreeMap<usize, usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderFailure {
    NotCovering { uncovered: VertexSet },
    NotMinimal { redundant: usize },
    NoWitness { facet: usize },
}

impl std::fmt::Display for OrderFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OrderFailure::NotCovering { uncovered } => {
                write!(f, "does not cover vertices {:?}", uncovered)
            }
            OrderFailure::NotMinimal { redundant } => {
                write!(f, "not minimal: facet {redundant} is redundant")
            }
            OrderFailure::NoWitness { facet } => {
                write!(f, "outside facet {facet} has no witness position")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WellOrderedCheck {
    WellOrdered(WellOrderedCertificate),
    Fails(OrderFailure),
}

impl WellOrderedCheck {
    pub fn is_well_ordered(&self) -> bool {
        matches!(self, WellOrderedCheck::WellOrdered(_))
    }
}

/// One cardinality at which a well ordered facet cover exists, with the
/// lexicographically least witnessing sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WellOrderedCover {
    pub cardinality: usize,
    pub sequence: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InducedMatching {
    /// `|F1 ∪ ... ∪ Fs| - s`.
    pub value: usize,
    pub facets: FacetSet,
}

fn is_cover(cx: &SimplicialComplex, set: FacetSet) -> bool {
    cx.union_of(set) == cx.vertices()
}

/// First member (in iteration order of `members`) that is covered by the
/// union of the others.
fn redundant_member(facets: &[VertexSet], members: &[usize]) -> Option<usize> {
    members.iter().copied().find(|&m| {
        let others = members
            .iter()
            .filter(|&&o| o != m)
            .fold(BitSet::EMPTY, |acc, &o| acc | facets[o]);
        facets[m].is_subset(others)
    })
}

pub fn is_minimal_facet_cover(cx: &SimplicialComplex, set: FacetSet) -> bool {
    is_cover(cx, set) && redundant_member(cx.facets(), &set.to_vec()).is_none()
}

/// All minimal facet covers, cardinality first, then lexicographic on facet
/// indices.
pub fn minimal_facet_covers(cx: &SimplicialComplex, facet_cap: usize) -> Result<Vec<FacetSet>> {
    check_cap(CapKind::Facets, facet_cap, cx.num_facets())?;
    if cx.is_empty() {
        return Ok(Vec::new());
    }
    let facets = cx.facets();
    let target = cx.vertices();
    // Unions of every facet subset, built incrementally from the mask with
    // its lowest bit cleared.
    let q = facets.len();
    let mut covers = Vec::new();
    if q <= UNION_TABLE_LIMIT {
        let mut unions = vec![BitSet::EMPTY; 1 << q];
        for mask in 1usize..(1 << q) {
            let low = mask.trailing_zeros() as usize;
            unions[mask] = unions[mask & (mask - 1)] | facets[low];
            if unions[mask] != target {
                continue;
            }
            let minimal = (0..q)
                .filter(|&i| mask >> i & 1 == 1)
                .all(|i| unions[mask & !(1 << i)] != target);
            if minimal {
                covers.push(BitSet::from_bits(mask as u64));
            }
        }
    } else {
        for mask in 1u64..(1 << q) {
            let set = BitSet::from_bits(mask);
            if is_minimal_facet_cover(cx, set) {
                covers.push(set);
            }
        }
    }
    covers.sort_by(|a, b| a.cmp_graded(*b));
    Ok(covers)
}

/// Witness position for outside facet `h`, if any.
fn witness_position(facets: &[VertexSet], seq: &[usize], suffix: &[VertexSet], h: VertexSet) -> Option<usize> {
    let k = seq.len();
    (0..k.saturating_sub(1)).find(|&p| facets[seq[p]].is_subset(h | suffix[p + 1]))
}

/// `suffix[p]` is the union of `seq[p..]`; `suffix[k]` is empty.
fn suffix_unions(facets: &[VertexSet], seq: &[usize]) -> Vec<VertexSet> {
    let mut suffix = vec![BitSet::EMPTY; seq.len() + 1];
    for p in (0..seq.len()).rev() {
        suffix[p] = suffix[p + 1] | facets[seq[p]];
    }
    suffix
}

/// Fast check used by the searches: assumes `seq` is a minimal cover.
fn order_is_well_ordered(facets: &[VertexSet], seq: &[usize], outside: &[usize]) -> bool {
    let suffix = suffix_unions(facets, seq);
    outside
        .iter()
        .all(|&h| witness_position(facets, seq, &suffix, facets[h]).is_some())
}

/// Checks the defining conditions literally and reports the first one that
/// fails: coverage, then minimality, then outside facets in index order.
pub fn is_well_ordered(cx: &SimplicialComplex, seq: &[usize]) -> Result<WellOrderedCheck> {
    let mut seen = BitSet::EMPTY;
    for &i in seq {
        cx.facet(i)?;
        if seen.contains(i) {
            return Err(Error::DuplicateFacet(i));
        }
        seen.insert(i);
    }
    let facets = cx.facets();
    let uncovered = cx.vertices() - cx.union_of(seen);
    if !uncovered.is_empty() {
        return Ok(WellOrderedCheck::Fails(OrderFailure::NotCovering { uncovered }));
    }
    if let Some(redundant) = redundant_member(facets, seq) {
        return Ok(WellOrderedCheck::Fails(OrderFailure::NotMinimal { redundant }));
    }
    let suffix = suffix_unions(facets, seq);
    let mut witnesses = BTreeMap::new();
    for h in (0..facets.len()).filter(|&h| !seen.contains(h)) {
        match witness_position(facets, seq, &suffix, facets[h]) {
            Some(p) => {
                witnesses.insert(h, p);
            }
            None => return Ok(WellOrderedCheck::Fails(OrderFailure::NoWitness { facet: h })),
        }
    }
    Ok(WellOrderedCheck::WellOrdered(WellOrderedCertificate {
        cover: seen.to_vec(),
        order: seq.to_vec(),
        witnesses,
    }))
}

/// The lexicographically least ordering of `cover` that is a well ordered
/// facet cover, or `None` when `cover` is not a minimal facet cover or no
/// ordering works.
pub fn well_ordered_order(
    cx: &SimplicialComplex,
    cover: FacetSet,
    strategy: SearchStrategy,
) -> Option<Vec<usize>> {
    if cover.is_empty() || !is_minimal_facet_cover(cx, cover) {
        return None;
    }
    let facets = cx.facets();
    let outside: Vec<usize> = (0..facets.len()).filter(|&h| !cover.contains(h)).collect();
    let use_permutations = match strategy {
        SearchStrategy::Auto => cover.len() <= PERMUTATION_THRESHOLD,
        SearchStrategy::Permutations => true,
        SearchStrategy::Backtracking => false,
    };
    if use_permutations {
        let k = cover.len();
        cover
            .to_vec()
            .into_iter()
            .permutations(k)
            .find(|seq| order_is_well_ordered(facets, seq, &outside))
    } else {
        Backtracker::new(facets, cover, &outside).lex_least()
    }
}

/// Backtracking search that fixes the sequence from the last position
/// downward. A node is pruned as soon as some outside facet can no longer
/// acquire a witness.
struct Backtracker<'a> {
    facets: &'a [VertexSet],
    cover: FacetSet,
    outside: &'a [usize],
    k: usize,
}

impl<'a> Backtracker<'a> {
    fn new(facets: &'a [VertexSet], cover: FacetSet, outside: &'a [usize]) -> Self {
        Backtracker {
            facets,
            cover,
            outside,
            k: cover.len(),
        }
    }

    fn union(&self, set: FacetSet) -> VertexSet {
        set.iter().fold(BitSet::EMPTY, |acc, i| acc | self.facets[i])
    }

    /// Builds the least sequence one position at a time from the front,
    /// asking the back-to-front search whether a completion exists.
    fn lex_least(&self) -> Option<Vec<usize>> {
        let mut prefix = Vec::with_capacity(self.k);
        let mut rest = self.cover;
        while prefix.len() < self.k {
            let next = rest.iter().find(|&c| {
                prefix.push(c);
                let ok = self.completable(&prefix, rest.without(c));
                prefix.pop();
                ok
            })?;
            prefix.push(next);
            rest.remove(next);
        }
        Some(prefix)
    }

    /// Is there an arrangement of `rest` after `prefix` that is well
    /// ordered?
    fn completable(&self, prefix: &[usize], rest: FacetSet) -> bool {
        // A prefix member at position j has suffix prefix[j+1..] ∪ rest,
        // which is already determined.
        let rest_union = self.union(rest);
        let mut prefix_suffix = vec![rest_union; prefix.len() + 1];
        for j in (0..prefix.len()).rev() {
            prefix_suffix[j] = prefix_suffix[j + 1] | self.facets[prefix[j]];
        }
        let prefix_can = |h: VertexSet| {
            (0..prefix.len())
                .filter(|&j| j + 1 < self.k)
                .any(|j| self.facets[prefix[j]].is_subset(h | prefix_suffix[j + 1]))
        };
        let pending: Vec<usize> = self
            .outside
            .iter()
            .copied()
            .filter(|&h| !prefix_can(self.facets[h]))
            .collect();
        self.fill(rest, BitSet::EMPTY, self.k, &pending)
    }

    /// Places members of `unplaced` at positions `pos - 1, pos - 2, ...`.
    /// `suffix` is the union of everything placed at positions `>= pos`.
    fn fill(&self, unplaced: FacetSet, suffix: VertexSet, pos: usize, pending: &[usize]) -> bool {
        if pending.is_empty() {
            return true;
        }
        if unplaced.is_empty() {
            return false;
        }
        // Every pending facet needs some unplaced member that could still
        // witness it: its suffix will be at most suffix ∪ (other unplaced).
        let feasible = pending.iter().all(|&h| {
            let h = self.facets[h];
            unplaced.iter().any(|c| {
                self.facets[c].is_subset(h | suffix | self.union(unplaced.without(c)))
            })
        });
        if !feasible {
            return false;
        }
        let position = pos - 1;
        for c in unplaced.iter() {
            let f = self.facets[c];
            let still: Vec<usize> = if position + 1 < self.k {
                pending
                    .iter()
                    .copied()
                    .filter(|&h| !f.is_subset(self.facets[h] | suffix))
                    .collect()
            } else {
                pending.to_vec()
            };
            if self.fill(unplaced.without(c), suffix | f, position, &still) {
                return true;
            }
        }
        false
    }
}

/// Every cardinality admitting a well ordered facet cover, each with its
/// lexicographically least sequence. Empty when none exists.
pub fn find_well_ordered_covers(
    cx: &SimplicialComplex,
    facet_cap: usize,
) -> Result<Vec<WellOrderedCover>> {
    let mut best: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for cover in minimal_facet_covers(cx, facet_cap)? {
        if let Some(seq) = well_ordered_order(cx, cover, SearchStrategy::Auto) {
            let slot = best.entry(seq.len()).or_insert_with(|| seq.clone());
            if seq < *slot {
                *slot = seq;
            }
        }
    }
    Ok(best
        .into_iter()
        .map(|(cardinality, sequence)| WellOrderedCover {
            cardinality,
            sequence,
        })
        .collect())
}

/// All inclusion-minimal vertex covers (transversals), cardinality first,
/// then lexicographic.
pub fn minimal_vertex_covers(cx: &SimplicialComplex, vertex_cap: usize) -> Result<Vec<VertexSet>> {
    check_cap(CapKind::Vertices, vertex_cap, cx.num_vertices())?;
    fn grow(facets: &[VertexSet], chosen: VertexSet, out: &mut Vec<VertexSet>) {
        let Some(&unhit) = facets.iter().find(|f| !f.intersects(chosen)) else {
            out.push(chosen);
            return;
        };
        for v in unhit.iter() {
            let next = chosen.with(v);
            // Each chosen vertex must keep a facet that only it hits;
            // private facets only disappear as the set grows.
            let keeps_private = chosen.iter().all(|u| {
                facets
                    .iter()
                    .any(|f| (*f & next) == BitSet::singleton(u))
            });
            if keeps_private {
                grow(facets, next, out);
            }
        }
    }
    let mut out = Vec::new();
    if !cx.is_empty() {
        grow(cx.facets(), BitSet::EMPTY, &mut out);
    }
    out.sort_by(|a, b| a.cmp_graded(*b));
    out.dedup();
    Ok(out)
}

/// Pairwise disjoint facets whose union induces exactly themselves.
pub fn is_induced_matching(cx: &SimplicialComplex, set: FacetSet) -> bool {
    let facets = cx.facets();
    let members = set.to_vec();
    let disjoint = members
        .iter()
        .tuple_combinations()
        .all(|(&a, &b)| !facets[a].intersects(facets[b]));
    disjoint && cx.induced_facets(cx.union_of(set)) == set
}

/// Maximizes `|F1 ∪ ... ∪ Fs| - s` over nonempty induced matchings. Ties go
/// to the first matching in cardinality-then-lexicographic order.
pub fn max_induced_matching_weight(
    cx: &SimplicialComplex,
    facet_cap: usize,
) -> Result<InducedMatching> {
    check_cap(CapKind::Facets, facet_cap, cx.num_facets())?;
    if cx.is_empty() {
        return Err(Error::EmptyComplex);
    }
    fn extend(
        cx: &SimplicialComplex,
        chosen: FacetSet,
        used: VertexSet,
        from: usize,
        best: &mut Option<InducedMatching>,
    ) {
        if !chosen.is_empty() && is_induced_matching(cx, chosen) {
            let value = used.len() - chosen.len();
            let better = match best {
                None => true,
                Some(b) => {
                    value > b.value
                        || (value == b.value && chosen.cmp_graded(b.facets).is_lt())
                }
            };
            if better {
                *best = Some(InducedMatching {
                    value,
                    facets: chosen,
                });
            }
        }
        for i in from..cx.num_facets() {
            let f = cx.facets()[i];
            if !f.intersects(used) {
                extend(cx, chosen.with(i), used | f, i + 1, best);
            }
        }
    }
    let mut best = None;
    extend(cx, BitSet::EMPTY, BitSet::EMPTY, 0, &mut best);
    Ok(best.expect("a single facet is always an induced matching"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{complex, tree};

    fn sets(v: &[&[usize]]) -> Vec<FacetSet> {
        v.iter().map(|s| BitSet::from_indices(s.iter().copied())).collect()
    }

    #[test]
    fn minimal_facet_covers_examples() {
        // F1..F4 are indices 0..3.
        assert_eq!(
            minimal_facet_covers(&tree(), 20).unwrap(),
            sets(&[&[0, 1, 2], &[1, 2, 3]])
        );
        assert_eq!(
            minimal_facet_covers(&complex(&["x y", "y z", "x z"]), 20).unwrap(),
            sets(&[&[0, 1], &[0, 2], &[1, 2]])
        );
        assert_eq!(
            minimal_facet_covers(&complex(&["a b c"]), 20).unwrap(),
            sets(&[&[0]])
        );
        assert!(minimal_facet_covers(&tree(), 2).is_err());
    }

    #[test]
    fn well_ordered_examples() {
        let g = tree();
        let WellOrderedCheck::WellOrdered(cert) = is_well_ordered(&g, &[0, 1, 2]).unwrap() else {
            panic!()
        };
        assert_eq!(cert.witnesses, BTreeMap::from([(3, 0)]));

        let WellOrderedCheck::WellOrdered(cert) = is_well_ordered(&g, &[3, 2, 1]).unwrap() else {
            panic!()
        };
        assert_eq!(cert.witnesses, BTreeMap::from([(0, 0)]));

        let path = complex(&["a b", "b c", "c d"]);
        for seq in [[0, 2], [2, 0]] {
            assert_eq!(
                is_well_ordered(&path, &seq).unwrap(),
                WellOrderedCheck::Fails(OrderFailure::NoWitness { facet: 1 })
            );
        }
    }

    #[test]
    fn well_ordered_failure_modes() {
        let g = tree();
        assert!(matches!(
            is_well_ordered(&g, &[0, 1]).unwrap(),
            WellOrderedCheck::Fails(OrderFailure::NotCovering { .. })
        ));
        assert_eq!(
            is_well_ordered(&g, &[0, 1, 2, 3]).unwrap(),
            WellOrderedCheck::Fails(OrderFailure::NotMinimal { redundant: 0 })
        );
        assert!(matches!(
            is_well_ordered(&g, &[0, 0]),
            Err(Error::DuplicateFacet(0))
        ));
        assert!(matches!(
            is_well_ordered(&g, &[7]),
            Err(Error::UnknownFacet(7))
        ));
    }

    #[test]
    fn find_examples() {
        assert_eq!(
            find_well_ordered_covers(&tree(), 20).unwrap(),
            vec![WellOrderedCover {
                cardinality: 3,
                sequence: vec![0, 1, 2]
            }]
        );
        assert_eq!(
            find_well_ordered_covers(&complex(&["a b", "c d"]), 20).unwrap(),
            vec![WellOrderedCover {
                cardinality: 2,
                sequence: vec![0, 1]
            }]
        );
        assert!(find_well_ordered_covers(&complex(&["a b", "b c", "c d"]), 20)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn vertex_covers() {
        let g = tree();
        let covers = minimal_vertex_covers(&g, 24).unwrap();
        assert_eq!(covers[0], g.vertex_set(&["x3"]).unwrap());
        assert!(covers[1..].iter().all(|c| c.len() > 1));

        let t = complex(&["x y", "y z", "x z"]);
        let names: Vec<String> = minimal_vertex_covers(&t, 24)
            .unwrap()
            .into_iter()
            .map(|c| t.monomial(c))
            .collect();
        assert_eq!(names, vec!["xy", "xz", "yz"]);

        let e = complex(&["a b"]);
        let names: Vec<String> = minimal_vertex_covers(&e, 24)
            .unwrap()
            .into_iter()
            .map(|c| e.monomial(c))
            .collect();
        assert_eq!(names, vec!["a", "b"]);
        assert!(minimal_vertex_covers(&tree(), 5).is_err());
    }

    #[test]
    fn induced_matching_weights() {
        let m = max_induced_matching_weight(&tree(), 20).unwrap();
        assert_eq!(m.value, 2);
        assert_eq!(m.facets.len(), 1);

        let m = max_induced_matching_weight(&complex(&["a b", "c d"]), 20).unwrap();
        assert_eq!(m.value, 2);
        assert_eq!(m.facets.to_vec(), vec![0, 1]);

        let m = max_induced_matching_weight(&complex(&["a b c d e"]), 20).unwrap();
        assert_eq!(m.value, 4);
    }

    #[test]
    fn strategies_agree_on_small_complexes() {
        use crate::generate::random_complex;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let cx = random_complex(&mut rng, 7, 8);
            for cover in minimal_facet_covers(&cx, 20).unwrap() {
                let a = well_ordered_order(&cx, cover, SearchStrategy::Permutations);
                let b = well_ordered_order(&cx, cover, SearchStrategy::Backtracking);
                assert_eq!(a, b, "{cx:?} cover {cover:?}");
                if let Some(seq) = a {
                    assert!(is_well_ordered(&cx, &seq).unwrap().is_well_ordered());
                }
            }
        }
    }

    #[test]
    fn backtracking_handles_large_covers() {
        // Five stars r-s, r-t with extra edges t_i t_(i+1): the ten star
        // edges form a minimal cover whose designated edges r-s are an
        // induced matching, so a well ordered order exists.
        let mut lines: Vec<String> = Vec::new();
        for i in 0..5 {
            lines.push(format!("r{i} s{i}"));
            lines.push(format!("r{i} t{i}"));
        }
        lines.extend((0..4).map(|i| format!("t{i} t{}", i + 1)));
        let refs: Vec<&str> = lines.iter().map(String::as_str).collect();
        let cx = complex(&refs);
        let seq = well_ordered_order(&cx, BitSet::full(10), SearchStrategy::Auto).unwrap();
        assert!(is_well_ordered(&cx, &seq).unwrap().is_well_ordered());

        // A path on twenty vertices: the alternate edges cover it minimally
        // but every bridge edge joins two of them.
        let mut lines: Vec<String> = (0..10).map(|i| format!("a{i} b{i}")).collect();
        lines.extend((0..9).map(|i| format!("b{i} a{}", i + 1)));
        let refs: Vec<&str> = lines.iter().map(String::as_str).collect();
        let path = complex(&refs);
        assert_eq!(
            well_ordered_order(&path, BitSet::full(10), SearchStrategy::Auto),
            None
        );
    }
}
