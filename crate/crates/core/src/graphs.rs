//! Simple graphs as one-dimensional complexes, bouquet decompositions of
//! minimal edge covers, and the translation between strongly disjoint
//! bouquet sets and well ordered edge covers.

use std::sync::Arc;

use itertools::Itertools;
use serde_json::{json, Value};

use crate::bitset::{BitSet, FacetSet, VertexSet};
use crate::complex::SimplicialComplex;
use crate::covers::{is_induced_matching, is_well_ordered, WellOrderedCheck};
use crate::error::{Error, Result};

/// A finite simple graph. Edge `i` is generator `i` of the edge ideal.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    complex: SimplicialComplex,
}

/// A graph together with the input lines that repeated an earlier edge.
#[derive(Debug, Clone)]
pub struct GraphBuild {
    pub graph: Graph,
    /// `(input index, input index of the first occurrence)`.
    pub duplicates: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from named edges, keeping the first copy of repeated
    /// edges. Loops are rejected.
    pub fn from_edges<S: AsRef<str>>(edges: &[(S, S)]) -> Result<GraphBuild> {
        if edges.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut names: Vec<String> = Vec::new();
        let index = |name: &str, names: &mut Vec<String>| match names.iter().position(|n| n == name) {
            Some(i) => i,
            None => {
                names.push(name.to_string());
                names.len() - 1
            }
        };
        let mut sets: Vec<VertexSet> = Vec::new();
        let mut first_input: Vec<usize> = Vec::new();
        let mut duplicates = Vec::new();
        for (k, (a, b)) in edges.iter().enumerate() {
            let (a, b) = (a.as_ref(), b.as_ref());
            if a == b {
                return Err(Error::Graph(format!("edge {} is a loop at {a}", k + 1)));
            }
            let (u, v) = (index(a, &mut names), index(b, &mut names));
            if names.len() > crate::bitset::CAPACITY {
                return Err(Error::TooManyVertices(names.len()));
            }
            let e = BitSet::from_indices([u, v]);
            match sets.iter().position(|&f| f == e) {
                Some(first) => duplicates.push((k, first_input[first])),
                None => {
                    sets.push(e);
                    first_input.push(k);
                }
            }
        }
        let names: Arc<[String]> = names.into();
        Ok(GraphBuild {
            graph: Graph {
                complex: SimplicialComplex::from_normalized_parts(names, sets),
            },
            duplicates,
        })
    }

    /// Reads a complex whose facets all have two vertices as a graph.
    pub fn from_complex(cx: &SimplicialComplex) -> Result<Graph> {
        if let Some(i) = cx.facets().iter().position(|f| f.len() != 2) {
            return Err(Error::Graph(format!("facet {} does not have two vertices", i + 1)));
        }
        Ok(Graph { complex: cx.clone() })
    }

    pub fn as_complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn names(&self) -> &Arc<[String]> {
        self.complex.names()
    }

    pub fn num_edges(&self) -> usize {
        self.complex.num_facets()
    }

    pub fn vertices(&self) -> VertexSet {
        self.complex.vertices()
    }

    /// Endpoints of edge `i`, smaller index first.
    pub fn endpoints(&self, i: usize) -> (usize, usize) {
        let e = self.complex.facets()[i];
        (e.min().unwrap(), e.max().unwrap())
    }

    pub fn edge_names(&self, i: usize) -> [String; 2] {
        let (u, v) = self.endpoints(i);
        let names = self.names();
        [names[u].clone(), names[v].clone()]
    }

    pub fn edge_index(&self, a: &str, b: &str) -> Option<usize> {
        let u = self.complex.vertex_index(a)?;
        let v = self.complex.vertex_index(b)?;
        self.complex.position(BitSet::from_indices([u, v]))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let edges: Vec<String> = (0..self.num_edges())
            .map(|i| self.edge_names(i).join("-"))
            .collect();
        write!(f, "Graph[{}]", edges.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bouquet {
    pub root: usize,
    /// Leaf vertices, sorted by name.
    pub leaves: Vec<usize>,
    /// Edge indices, aligned with `leaves`.
    pub edges: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BouquetSet {
    /// Sorted by root name.
    pub bouquets: Vec<Bouquet>,
    /// One edge per bouquet, when known to be an induced matching.
    pub designated: Option<Vec<usize>>,
}

impl BouquetSet {
    pub fn edge_set(&self) -> FacetSet {
        self.bouquets.iter().flat_map(|b| b.edges.iter().copied()).collect()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.bouquets
            .iter()
            .map(|b| BitSet::from_indices(b.leaves.iter().copied()).with(b.root))
            .fold(BitSet::EMPTY, |a, b| a | b)
    }

    pub fn to_json(&self, g: &Graph) -> Value {
        let names = g.names();
        let bouquets: Vec<Value> = self
            .bouquets
            .iter()
            .map(|b| {
                json!({
                    "root": names[b.root],
                    "leaves": b.leaves.iter().map(|&v| &names[v]).collect::<Vec<_>>(),
                    "edges": b.edges.iter().map(|&e| g.edge_names(e)).collect::<Vec<_>>(),
                })
            })
            .collect();
        let designated = self
            .designated
            .as_ref()
            .map(|d| d.iter().map(|&e| g.edge_names(e)).collect::<Vec<_>>());
        json!({ "bouquets": bouquets, "designated": designated })
    }
}

/// Splits a minimal edge cover into vertex-disjoint stars.
pub fn bouquet_decomposition(g: &Graph, cover: FacetSet) -> Result<BouquetSet> {
    let cx = g.as_complex();
    if let Some(bad) = cover.iter().find(|&e| e >= g.num_edges()) {
        return Err(Error::UnknownFacet(bad));
    }
    let missing = g.vertices() - cx.union_of(cover);
    if !missing.is_empty() {
        return Err(Error::Bouquet(format!(
            "edges do not cover {}",
            cx.vertex_names(missing).join(" ")
        )));
    }
    if let Some(e) = cover
        .iter()
        .find(|&e| cx.facets()[e].is_subset(cx.union_of(cover.without(e))))
    {
        return Err(Error::Bouquet(format!(
            "cover is not minimal: {} is redundant",
            g.edge_names(e).join("-")
        )));
    }
    let names = g.names();
    let sub = cx.subcollection(cover);
    let host = cover.to_vec();
    let mut bouquets = Vec::new();
    for component in sub.component_facet_sets() {
        let edges: Vec<usize> = component.iter().map(|j| host[j]).collect();
        let root = if edges.len() == 1 {
            let (u, v) = g.endpoints(edges[0]);
            if names[u] <= names[v] { u } else { v }
        } else {
            // A minimal cover has no path of length three, so a component
            // with two or more edges is a star around its only shared vertex.
            let shared = edges
                .iter()
                .map(|&e| cx.facets()[e])
                .fold(g.vertices(), |a, b| a & b);
            shared.min().expect("component of a minimal cover is a star")
        };
        let mut spokes: Vec<(usize, usize)> = edges
            .iter()
            .map(|&e| {
                let (u, v) = g.endpoints(e);
                (if u == root { v } else { u }, e)
            })
            .collect();
        spokes.sort_by(|a, b| names[a.0].cmp(&names[b.0]));
        bouquets.push(Bouquet {
            root,
            leaves: spokes.iter().map(|s| s.0).collect(),
            edges: spokes.iter().map(|s| s.1).collect(),
        });
    }
    bouquets.sort_by(|a, b| names[a.root].cmp(&names[b.root]));
    Ok(BouquetSet {
        bouquets,
        designated: None,
    })
}

/// Whether the designated edges, one per bouquet, form an induced matching.
pub fn is_strongly_disjoint(g: &Graph, set: &BouquetSet, designated: &[usize]) -> Result<bool> {
    if designated.len() != set.bouquets.len() {
        return Err(Error::Bouquet(format!(
            "{} designated edges for {} bouquets",
            designated.len(),
            set.bouquets.len()
        )));
    }
    for (k, (b, &s)) in set.bouquets.iter().zip(designated).enumerate() {
        if !b.edges.contains(&s) {
            return Err(Error::Bouquet(format!("designated edge {} lies outside bouquet {}", s, k + 1)));
        }
    }
    let chosen: FacetSet = designated.iter().copied().collect();
    Ok(chosen.len() == designated.len() && is_induced_matching(g.as_complex(), chosen))
}

/// First designation (in lexicographic order of edge choices) making the
/// bouquets strongly disjoint.
pub fn strongly_disjoint_designation(g: &Graph, set: &BouquetSet) -> Option<Vec<usize>> {
    set.bouquets
        .iter()
        .map(|b| b.edges.iter().copied())
        .multi_cartesian_product()
        .find(|choice| is_strongly_disjoint(g, set, choice).unwrap_or(false))
}

/// Non-designated edges in bouquet order, then the designated edges. The
/// result is checked to be a well ordered edge cover.
pub fn wofc_from_bouquets(g: &Graph, set: &BouquetSet) -> Result<Vec<usize>> {
    let designated = set
        .designated
        .as_ref()
        .ok_or_else(|| Error::Bouquet("no designated edges".into()))?;
    let roots_and_leaves: Vec<VertexSet> = set
        .bouquets
        .iter()
        .map(|b| BitSet::from_indices(b.leaves.iter().copied()).with(b.root))
        .collect();
    if roots_and_leaves
        .iter()
        .tuple_combinations()
        .any(|(a, b)| a.intersects(*b))
    {
        return Err(Error::Bouquet("bouquets are not vertex-disjoint".into()));
    }
    if set.vertex_set() != g.vertices() {
        return Err(Error::Bouquet("bouquets do not span every vertex".into()));
    }
    if !is_strongly_disjoint(g, set, designated)? {
        return Err(Error::Bouquet("designated edges are not an induced matching".into()));
    }
    let mut seq: Vec<usize> = set
        .bouquets
        .iter()
        .flat_map(|b| b.edges.iter().copied())
        .filter(|e| !designated.contains(e))
        .collect();
    seq.extend(designated.iter().copied());
    match is_well_ordered(g.as_complex(), &seq)? {
        WellOrderedCheck::WellOrdered(_) => Ok(seq),
        WellOrderedCheck::Fails(why) => Err(Error::NotWellOrdered(why.to_string())),
    }
}

/// Bouquets of a well ordered edge cover, designating in each bouquet the
/// edge appearing last in the sequence. The designation is checked to be
/// an induced matching.
pub fn bouquets_from_wofc(g: &Graph, seq: &[usize]) -> Result<BouquetSet> {
    if let WellOrderedCheck::Fails(why) = is_well_ordered(g.as_complex(), seq)? {
        return Err(Error::NotWellOrdered(why.to_string()));
    }
    let mut set = bouquet_decomposition(g, seq.iter().copied().collect())?;
    let position = |e: usize| seq.iter().position(|&d| d == e).unwrap();
    let designated: Vec<usize> = set
        .bouquets
        .iter()
        .map(|b| *b.edges.iter().max_by_key(|&&e| position(e)).unwrap())
        .collect();
    if !is_strongly_disjoint(g, &set, &designated)? {
        return Err(Error::Bouquet("designated edges are not an induced matching".into()));
    }
    set.designated = Some(designated);
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covers::{find_well_ordered_covers, minimal_facet_covers};

    fn graph(edges: &[(&str, &str)]) -> Graph {
        Graph::from_edges(edges).unwrap().graph
    }

    fn claw() -> Graph {
        graph(&[("r", "z1"), ("r", "z2"), ("r", "z3")])
    }

    fn path() -> Graph {
        graph(&[("a", "b"), ("b", "c"), ("c", "d")])
    }

    #[test]
    fn construction() {
        let b = Graph::from_edges(&[("a", "b"), ("b", "a"), ("b", "c")]).unwrap();
        assert_eq!(b.graph.num_edges(), 2);
        assert_eq!(b.duplicates, vec![(1, 0)]);
        assert!(matches!(Graph::from_edges(&[("a", "a")]), Err(Error::Graph(_))));
        assert_eq!(path().edge_index("c", "b"), Some(1));
        assert_eq!(format!("{:?}", path()), "Graph[a-b, b-c, c-d]");
    }

    #[test]
    fn decompositions() {
        let g = claw();
        let set = bouquet_decomposition(&g, g.as_complex().all_facets()).unwrap();
        assert_eq!(set.bouquets.len(), 1);
        assert_eq!(g.names()[set.bouquets[0].root], "r");

        let g = path();
        let set = bouquet_decomposition(&g, BitSet::from_indices([0, 2])).unwrap();
        let roots: Vec<&str> = set.bouquets.iter().map(|b| g.names()[b.root].as_str()).collect();
        assert_eq!(roots, vec!["a", "c"]);

        let g = graph(&[("y", "x")]);
        let set = bouquet_decomposition(&g, BitSet::singleton(0)).unwrap();
        assert_eq!(g.names()[set.bouquets[0].root], "x");

        let g = path();
        assert!(bouquet_decomposition(&g, BitSet::singleton(1)).is_err());
        assert!(bouquet_decomposition(&g, g.as_complex().all_facets()).is_err());
    }

    #[test]
    fn strong_disjointness() {
        let g = path();
        let set = bouquet_decomposition(&g, BitSet::from_indices([0, 2])).unwrap();
        assert!(!is_strongly_disjoint(&g, &set, &[0, 2]).unwrap());
        assert!(strongly_disjoint_designation(&g, &set).is_none());
        assert!(is_strongly_disjoint(&g, &set, &[1, 2]).is_err());

        let g = claw();
        let set = bouquet_decomposition(&g, g.as_complex().all_facets()).unwrap();
        for e in 0..3 {
            assert!(is_strongly_disjoint(&g, &set, &[e]).unwrap());
        }

        let g = graph(&[("a", "b"), ("c", "d")]);
        let set = bouquet_decomposition(&g, BitSet::from_indices([0, 1])).unwrap();
        assert!(is_strongly_disjoint(&g, &set, &[0, 1]).unwrap());
    }

    #[test]
    fn claw_conversions() {
        let g = claw();
        let mut set = bouquet_decomposition(&g, g.as_complex().all_facets()).unwrap();
        set.designated = Some(vec![0]);
        assert_eq!(wofc_from_bouquets(&g, &set).unwrap(), vec![1, 2, 0]);

        let back = bouquets_from_wofc(&g, &[1, 2, 0]).unwrap();
        assert_eq!(back.designated, Some(vec![0]));
        assert_eq!(back.edge_set(), g.as_complex().all_facets());
    }

    #[test]
    fn two_edges_and_a_tree() {
        let g = graph(&[("a", "b"), ("c", "d")]);
        let set = bouquets_from_wofc(&g, &[0, 1]).unwrap();
        assert_eq!(set.designated, Some(vec![0, 1]));

        // Two stars a-{b,c} and d-{e,f} joined through b-e.
        let g = graph(&[("a", "b"), ("a", "c"), ("d", "e"), ("d", "f"), ("b", "e")]);
        let mut set = bouquet_decomposition(&g, BitSet::from_indices([0, 1, 2, 3])).unwrap();
        set.designated = strongly_disjoint_designation(&g, &set);
        assert_eq!(set.designated, Some(vec![0, 3]));
        let seq = wofc_from_bouquets(&g, &set).unwrap();
        let again = bouquets_from_wofc(&g, &seq).unwrap();
        assert_eq!(again.edge_set(), set.edge_set());
    }

    #[test]
    fn path_has_no_well_ordered_edge_cover() {
        let g = path();
        assert!(find_well_ordered_covers(g.as_complex(), 20).unwrap().is_empty());
        for cover in minimal_facet_covers(g.as_complex(), 20).unwrap() {
            let set = bouquet_decomposition(&g, cover).unwrap();
            assert!(strongly_disjoint_designation(&g, &set).is_none());
        }
        assert!(matches!(bouquets_from_wofc(&g, &[0, 2]), Err(Error::NotWellOrdered(_))));
    }

    #[test]
    fn json_shape() {
        let g = claw();
        let set = bouquets_from_wofc(&g, &[1, 2, 0]).unwrap();
        let v = set.to_json(&g);
        assert_eq!(v["bouquets"][0]["root"], "r");
        assert_eq!(v["designated"][0], json!(["r", "z1"]));
    }
}
