//! Simplicial complexes stored by their facets.
//!
//! A [`SimplicialComplex`] doubles as a squarefree monomial ideal: facet `i`
//! is the support of generator `i`. Facet order is meaningful: it is the
//! default total order on generators and the tie-breaking order for every
//! search in the crate.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::bitset::{graded_subsets, BitSet, FacetSet, VertexSet, CAPACITY};
use crate::error::{check_cap, CapKind, Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    names: Arc<[String]>,
    facets: Vec<VertexSet>,
}

/// Why an input facet did not survive normalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum DropReason {
    /// Identical to the earlier input facet `of`.
    Duplicate { of: usize },
    /// Strictly contained in input facet `within`.
    Contained { within: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Dropped {
    pub input_index: usize,
    #[serde(flatten)]
    pub reason: DropReason,
}

#[derive(Debug, Clone)]
pub struct Normalized {
    pub complex: SimplicialComplex,
    pub dropped: Vec<Dropped>,
}

/// How a facet qualifies as a leaf.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeafWitness {
    OnlyFacet,
    /// Index of a facet `G != F` with `F ∩ H ⊆ G` for every other facet `H`.
    Facet(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Leaf {
    pub witness: LeafWitness,
    pub free_vertices: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ForestCheck {
    Forest,
    /// The first subcollection (cardinality first, then lexicographic on
    /// facet indices) that has no leaf.
    NotForest { leafless: Vec<usize> },
}

impl ForestCheck {
    pub fn is_forest(&self) -> bool {
        matches!(self, ForestCheck::Forest)
    }
}

/// Result of localizing a facet ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Localized {
    Complex(SimplicialComplex),
    /// Some generator became 1.
    UnitIdeal,
}

impl SimplicialComplex {
    /// Builds a complex from named facets, keeping only the inclusion-maximal
    /// ones. Vertex indices follow the order of first appearance.
    pub fn normalize<S: AsRef<str>>(raw: &[Vec<S>]) -> Result<Normalized> {
        let mut index: HashMap<&str, usize> = HashMap::new();
        let mut names: Vec<String> = Vec::new();
        let mut sets = Vec::with_capacity(raw.len());
        for facet in raw {
            let mut set = BitSet::EMPTY;
            for token in facet {
                let token = token.as_ref();
                let next = index.len();
                let i = *index.entry(token).or_insert(next);
                if i == names.len() {
                    names.push(token.to_string());
                    if names.len() > CAPACITY {
                        return Err(Error::TooManyVertices(names.len()));
                    }
                }
                set.insert(i);
            }
            sets.push(set);
        }
        Self::from_facet_sets(names.into(), &sets)
    }

    /// Normalizes raw vertex sets over an existing name table.
    pub fn from_facet_sets(names: Arc<[String]>, raw: &[VertexSet]) -> Result<Normalized> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(i) = raw.iter().position(|f| f.is_empty()) {
            return Err(Error::EmptyFacet(i));
        }
        if let Some(bad) = raw.iter().flat_map(|f| f.iter()).find(|&v| v >= names.len()) {
            return Err(Error::UnknownVertex(format!("#{bad}")));
        }
        let mut facets = Vec::new();
        let mut dropped = Vec::new();
        for (i, &f) in raw.iter().enumerate() {
            let reason = if let Some(j) = raw[..i].iter().position(|&g| g == f) {
                Some(DropReason::Duplicate { of: j })
            } else {
                raw.iter()
                    .position(|&g| f.is_proper_subset(g))
                    .map(|j| DropReason::Contained { within: j })
            };
            match reason {
                Some(reason) => dropped.push(Dropped {
                    input_index: i,
                    reason,
                }),
                None => facets.push(f),
            }
        }
        Ok(Normalized {
            complex: SimplicialComplex { names, facets },
            dropped,
        })
    }

    /// The complex with no facets (the zero ideal).
    pub fn empty(names: Arc<[String]>) -> Self {
        SimplicialComplex {
            names,
            facets: Vec::new(),
        }
    }

    /// Builds a complex from facets that are already pairwise incomparable.
    pub(crate) fn from_normalized_parts(names: Arc<[String]>, facets: Vec<VertexSet>) -> Self {
        debug_assert!(facets.iter().enumerate().all(|(i, f)| facets
            .iter()
            .enumerate()
            .all(|(j, g)| i == j || !f.is_subset(*g))));
        SimplicialComplex { names, facets }
    }

    pub fn names(&self) -> &Arc<[String]> {
        &self.names
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn facet(&self, i: usize) -> Result<VertexSet> {
        self.facets.get(i).copied().ok_or(Error::UnknownFacet(i))
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// `V(Γ)`: the union of the facets.
    pub fn vertices(&self) -> VertexSet {
        self.union_of(self.all_facets())
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices().len()
    }

    pub fn all_facets(&self) -> FacetSet {
        BitSet::full(self.facets.len())
    }

    /// Union of the facets with the given indices (the lcm of those
    /// generators).
    pub fn union_of(&self, facets: FacetSet) -> VertexSet {
        facets
            .iter()
            .fold(BitSet::EMPTY, |acc, i| acc | self.facets[i])
    }

    pub fn position(&self, facet: VertexSet) -> Option<usize> {
        self.facets.iter().position(|&f| f == facet)
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn vertex_set<S: AsRef<str>>(&self, names: &[S]) -> Result<VertexSet> {
        names
            .iter()
            .map(|n| {
                self.vertex_index(n.as_ref())
                    .ok_or_else(|| Error::UnknownVertex(n.as_ref().to_string()))
            })
            .collect()
    }

    pub fn vertex_names(&self, set: VertexSet) -> Vec<String> {
        set.iter().map(|v| self.names[v].clone()).collect()
    }

    /// Monomial notation, e.g. `x1x3x4`; `1` for the empty set.
    pub fn monomial(&self, set: VertexSet) -> String {
        if set.is_empty() {
            return "1".to_string();
        }
        set.iter().map(|v| self.names[v].as_str()).collect()
    }

    /// Indices of the facets contained in `a`.
    pub fn induced_facets(&self, a: VertexSet) -> FacetSet {
        self.facets
            .iter()
            .enumerate()
            .filter(|(_, f)| f.is_subset(a))
            .map(|(i, _)| i)
            .collect()
    }

    /// `Γ_A = ⟨F ∈ Facets(Γ) | F ⊆ A⟩`.
    pub fn induced_subcollection(&self, a: VertexSet) -> Result<SimplicialComplex> {
        if !a.is_subset(self.vertices()) {
            return Err(Error::VerticesOutsideComplex);
        }
        Ok(self.subcollection(self.induced_facets(a)))
    }

    /// The complex generated by the facets with the given indices, in their
    /// original relative order.
    pub fn subcollection(&self, facets: FacetSet) -> SimplicialComplex {
        SimplicialComplex {
            names: self.names.clone(),
            facets: facets.iter().map(|i| self.facets[i]).collect(),
        }
    }

    /// Facet index sets of the connected components, ordered by their
    /// smallest facet index.
    pub fn component_facet_sets(&self) -> Vec<FacetSet> {
        let q = self.facets.len();
        let mut parent: Vec<usize> = (0..q).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for i in 0..q {
            for j in i + 1..q {
                if self.facets[i].intersects(self.facets[j]) {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut groups: Vec<(usize, FacetSet)> = Vec::new();
        for i in 0..q {
            let root = find(&mut parent, i);
            match groups.iter_mut().find(|(r, _)| *r == root) {
                Some((_, set)) => set.insert(i),
                None => groups.push((root, BitSet::singleton(i))),
            }
        }
        groups.into_iter().map(|(_, set)| set).collect()
    }

    pub fn connected_components(&self) -> Vec<SimplicialComplex> {
        self.component_facet_sets()
            .into_iter()
            .map(|s| self.subcollection(s))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_facet_sets().len() <= 1
    }

    /// Leaf test for facet `f`; `Ok(None)` when `f` is not a leaf.
    pub fn is_leaf(&self, f: usize) -> Result<Option<Leaf>> {
        self.facet(f)?;
        Ok(leaf_witness(&self.facets, f).map(|witness| Leaf {
            witness,
            free_vertices: self.free_vertices(f),
        }))
    }

    /// Vertices of facet `f` lying in no other facet.
    pub fn free_vertices(&self, f: usize) -> VertexSet {
        let others = self
            .facets
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != f)
            .fold(BitSet::EMPTY, |acc, (_, &g)| acc | g);
        self.facets[f] - others
    }

    /// Indices of all leaves, in facet order.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.facets.len())
            .filter(|&f| leaf_witness(&self.facets, f).is_some())
            .collect()
    }

    /// Exhaustive forest test over all nonempty subcollections.
    pub fn is_forest(&self, facet_cap: usize) -> Result<ForestCheck> {
        check_cap(CapKind::Facets, facet_cap, self.facets.len())?;
        let mut sub = Vec::with_capacity(self.facets.len());
        for set in graded_subsets(self.all_facets()) {
            // One or two facets always contain a leaf.
            if set.len() < 3 {
                continue;
            }
            sub.clear();
            sub.extend(set.iter().map(|i| self.facets[i]));
            if !(0..sub.len()).any(|f| leaf_witness(&sub, f).is_some()) {
                return Ok(ForestCheck::NotForest {
                    leafless: set.to_vec(),
                });
            }
        }
        Ok(ForestCheck::Forest)
    }

    /// Localization at the prime generated by the variables in `keep`:
    /// every other variable is set to 1 and the surviving generators are
    /// reduced to a minimal generating set. Variable names are unchanged.
    pub fn localize_at(&self, keep: VertexSet) -> Localized {
        let images: Vec<VertexSet> = self.facets.iter().map(|&g| g & keep).collect();
        if images.iter().any(|g| g.is_empty()) {
            return Localized::UnitIdeal;
        }
        let mut kept: Vec<VertexSet> = Vec::new();
        for (i, &g) in images.iter().enumerate() {
            let redundant = images
                .iter()
                .enumerate()
                .any(|(j, &h)| h.is_proper_subset(g) || (h == g && j < i));
            if !redundant {
                kept.push(g);
            }
        }
        Localized::Complex(SimplicialComplex::from_normalized_parts(
            self.names.clone(),
            kept,
        ))
    }

    /// `F(Γ ∖ ⟨F⟩)` localized at `(x : x ∉ F)`: drop facet `f`, replace each
    /// remaining facet `G` by `G ∖ F` and keep the minimal results.
    pub fn localize(&self, f: usize) -> Result<Localized> {
        let removed = self.facet(f)?;
        let rest = self.subcollection(self.all_facets().without(f));
        Ok(rest.localize_at(!removed))
    }
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let facets: Vec<String> = self.facets.iter().map(|&s| self.monomial(s)).collect();
        write!(f, "⟨{}⟩", facets.join(", "))
    }
}

/// Leaf test on a bare facet list.
pub(crate) fn leaf_witness(facets: &[VertexSet], f: usize) -> Option<LeafWitness> {
    if facets.len() == 1 {
        return Some(LeafWitness::OnlyFacet);
    }
    let this = facets[f];
    (0..facets.len())
        .filter(|&g| g != f)
        .find(|&g| {
            facets
                .iter()
                .enumerate()
                .all(|(h, &other)| h == f || (this & other).is_subset(facets[g]))
        })
        .map(LeafWitness::Facet)
}
