//! Betti numbers of facet ideals of simplicial forests, read off from well
//! ordered facet covers of induced subcollections, plus the leaf recursion
//! for the top multidegree and regularity lower bounds for any complex.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::betti::{BettiDiagram, BettiTable, Convention};
use crate::bitset::{FacetSet, VertexSet};
use crate::caps::Caps;
use crate::complex::{ForestCheck, Localized, SimplicialComplex};
use crate::covers::{find_well_ordered_covers, max_induced_matching_weight};
use crate::error::{check_cap, CapKind, Error, Result};

/// Unions of nonempty facet subsets, cardinality first, then lexicographic.
pub fn lcm_lattice(cx: &SimplicialComplex, facet_cap: usize) -> Result<Vec<VertexSet>> {
    check_cap(CapKind::Facets, facet_cap, cx.num_facets())?;
    let q = cx.num_facets();
    // unions[mask] built from the mask with its lowest bit cleared.
    let mut unions = vec![VertexSet::EMPTY; 1usize << q];
    let mut seen = BTreeSet::new();
    for mask in 1usize..(1 << q) {
        let low = mask.trailing_zeros() as usize;
        unions[mask] = unions[mask & (mask - 1)] | cx.facets()[low];
        seen.insert(unions[mask]);
    }
    let mut out: Vec<VertexSet> = seen.into_iter().collect();
    out.sort_by(|a, b| a.cmp_graded(*b));
    Ok(out)
}

/// A well ordered facet cover of `Γ_degree`, in host facet indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverCertificate {
    pub degree: VertexSet,
    pub cardinality: usize,
    pub sequence: Vec<usize>,
}

impl CoverCertificate {
    /// `|degree| - cardinality`.
    pub fn regularity_value(&self) -> usize {
        self.degree.len() - self.cardinality
    }
}

/// For every lattice degree `m` and every cardinality `i` at which `Γ_m`
/// has a well ordered facet cover, the lexicographically least sequence.
/// Valid for any complex: each certificate forces `b_{i,m}(S/I) != 0`.
pub fn cover_certificates(cx: &SimplicialComplex, facet_cap: usize) -> Result<Vec<CoverCertificate>> {
    let mut out = Vec::new();
    for m in lcm_lattice(cx, facet_cap)? {
        let induced = cx.induced_facets(m);
        let host: Vec<usize> = induced.to_vec();
        let sub = cx.subcollection(induced);
        for cover in find_well_ordered_covers(&sub, facet_cap)? {
            out.push(CoverCertificate {
                degree: m,
                cardinality: cover.cardinality,
                sequence: cover.sequence.iter().map(|&j| host[j]).collect(),
            });
        }
    }
    Ok(out)
}

fn require_forest(cx: &SimplicialComplex, facet_cap: usize) -> Result<()> {
    match cx.is_forest(facet_cap)? {
        ForestCheck::Forest => Ok(()),
        ForestCheck::NotForest { leafless } => Err(Error::NotAForest { leafless }),
    }
}

/// The multigraded Betti table of `S/F(Γ)` for a forest `Γ`, in the
/// quotient convention.
pub fn multigraded_betti(cx: &SimplicialComplex, caps: &Caps) -> Result<BettiTable> {
    require_forest(cx, caps.facets)?;
    let mut table = BettiTable::new(Convention::Quotient);
    for cert in cover_certificates(cx, caps.facets)? {
        if table.get(cert.degree, cert.cardinality) > 0 || !table.indices_at(cert.degree).is_empty() {
            return Err(Error::ForestLawViolation(format!(
                "degree {} carries well ordered covers of several cardinalities",
                cx.monomial(cert.degree)
            )));
        }
        table.insert(cert.degree, cert.cardinality, 1);
    }
    Ok(table)
}

pub fn graded_betti(cx: &SimplicialComplex, caps: &Caps) -> Result<BettiDiagram> {
    Ok(BettiDiagram::from_table(&multigraded_betti(cx, caps)?))
}

/// `(pd, reg)` of `S/F(Γ)` for a forest.
pub fn pd_reg(cx: &SimplicialComplex, caps: &Caps) -> Result<(usize, usize)> {
    Ok(multigraded_betti(cx, caps)?.pd_reg())
}

/// The homological index `i` with `b_{i,V(Γ)}(S/F(Γ)) = 1`, or `None` when
/// the top multidegree carries no Betti number. Leaves are chosen first in
/// facet order.
pub fn top_betti_recursive(cx: &SimplicialComplex, caps: &Caps) -> Result<Option<usize>> {
    top_betti_recursive_with(cx, caps, |_, leaves| leaves[0])
}

/// As [`top_betti_recursive`], with `choose` picking a leaf from the list
/// of leaves of each connected complex met along the recursion.
pub fn top_betti_recursive_with<C>(cx: &SimplicialComplex, caps: &Caps, mut choose: C) -> Result<Option<usize>>
where
    C: FnMut(&SimplicialComplex, &[usize]) -> usize,
{
    require_forest(cx, caps.facets)?;
    if cx.is_empty() {
        return Err(Error::EmptyComplex);
    }
    Ok(top_of_forest(cx, &mut choose))
}

/// Runs the recursion on a connected forest starting from leaf `leaf`.
pub fn top_betti_from_leaf(cx: &SimplicialComplex, caps: &Caps, leaf: usize) -> Result<Option<usize>> {
    require_forest(cx, caps.facets)?;
    if !cx.is_connected() {
        return Err(Error::ForestLawViolation(
            "a starting leaf needs a connected complex".into(),
        ));
    }
    if cx.is_leaf(leaf)?.is_none() {
        return Err(Error::ForestLawViolation(format!("facet {leaf} is not a leaf")));
    }
    let mut first = Some(leaf);
    let mut choose = |_: &SimplicialComplex, leaves: &[usize]| first.take().unwrap_or(leaves[0]);
    Ok(top_of_tree(cx, &mut choose))
}

type Chooser<'a> = dyn FnMut(&SimplicialComplex, &[usize]) -> usize + 'a;

fn top_of_forest(cx: &SimplicialComplex, choose: &mut Chooser<'_>) -> Option<usize> {
    // Over disjoint supports the resolutions tensor, so indices add.
    cx.connected_components()
        .iter()
        .map(|tree| top_of_tree(tree, choose))
        .sum()
}

fn top_of_tree(cx: &SimplicialComplex, choose: &mut Chooser<'_>) -> Option<usize> {
    if cx.num_facets() == 1 {
        return Some(1);
    }
    let leaves = cx.leaves();
    let leaf = choose(cx, &leaves);
    debug_assert!(leaves.contains(&leaf));
    let removed = cx.facets()[leaf];
    match cx.localize(leaf).expect("leaf index is valid") {
        Localized::UnitIdeal => None,
        Localized::Complex(rest) => {
            if rest.num_vertices() < cx.num_vertices() - removed.len() {
                return None;
            }
            top_of_forest(&rest, choose).map(|i| i + 1)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularityBounds {
    /// `max |F1 ∪ ... ∪ Fs| - s` over well ordered facet covers of induced
    /// subcollections.
    pub wofc_bound: usize,
    pub wofc_witness: CoverCertificate,
    /// `max |F1 ∪ ... ∪ Fs| - s` over induced matchings.
    pub induced_matching_bound: usize,
    pub matching: Vec<usize>,
}

/// Both lower bounds for `reg(S/F(Γ))`. Ties keep the first witness in
/// degree order.
pub fn regularity_lower_bounds(cx: &SimplicialComplex, caps: &Caps) -> Result<RegularityBounds> {
    if cx.is_empty() {
        return Err(Error::EmptyComplex);
    }
    let matching = max_induced_matching_weight(cx, caps.facets)?;
    let mut best: Option<CoverCertificate> = None;
    for cert in cover_certificates(cx, caps.facets)? {
        if best
            .as_ref()
            .is_none_or(|b| cert.regularity_value() > b.regularity_value())
        {
            best = Some(cert);
        }
    }
    let witness = best.expect("every single facet is a well ordered cover of itself");
    Ok(RegularityBounds {
        wofc_bound: witness.regularity_value(),
        wofc_witness: witness,
        induced_matching_bound: matching.value,
        matching: matching.facets.to_vec(),
    })
}

/// Facet indices of a facet set, in the order the sequence lists them.
pub fn sequence_set(seq: &[usize]) -> FacetSet {
    seq.iter().copied().collect()
}
