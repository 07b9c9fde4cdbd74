//! Lyubeznik complexes of facet ideals.
//!
//! Fix a total order `m1 < m2 < ... < ms` on the generators. For a monomial
//! `m`, `min(m)` is the least generator dividing `m`, and for a set `G` of
//! generators `min(G) = min(lcm(G))`. A face `F` of the Taylor simplex is
//! *rooted* when `min(G) ∈ G` for every nonempty `G ⊆ F`; the rooted faces
//! form the Lyubeznik complex, which supports a free resolution of `S/I`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bitset::{BitSet, FacetSet, VertexSet};
use crate::complex::SimplicialComplex;
use crate::covers::{is_well_ordered, WellOrderedCheck};
use crate::error::{check_cap, CapKind, Error, Result};

/// A total order on generator indices: `sequence[0] < sequence[1] < ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorOrder {
    sequence: Vec<usize>,
    rank: Vec<usize>,
}

impl GeneratorOrder {
    pub fn new(sequence: Vec<usize>) -> Result<Self> {
        let n = sequence.len();
        let mut rank = vec![usize::MAX; n];
        for (r, &g) in sequence.iter().enumerate() {
            if g >= n {
                return Err(Error::InvalidOrder(format!("index {g} out of range 0..{n}")));
            }
            if rank[g] != usize::MAX {
                return Err(Error::InvalidOrder(format!("index {g} repeated")));
            }
            rank[g] = r;
        }
        Ok(GeneratorOrder { sequence, rank })
    }

    /// Input (facet) order.
    pub fn identity(n: usize) -> Self {
        GeneratorOrder {
            sequence: (0..n).collect(),
            rank: (0..n).collect(),
        }
    }

    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    pub fn rank(&self, generator: usize) -> usize {
        self.rank[generator]
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    /// Members of `set` sorted by this order.
    pub fn sorted(&self, set: FacetSet) -> Vec<usize> {
        let mut v = set.to_vec();
        v.sort_by_key(|&g| self.rank[g]);
        v
    }

    fn check_for(&self, cx: &SimplicialComplex) -> Result<()> {
        if self.len() != cx.num_facets() {
            return Err(Error::InvalidOrder(format!(
                "order has {} entries but the ideal has {} generators",
                self.len(),
                cx.num_facets()
            )));
        }
        Ok(())
    }
}

/// The least generator (under `order`) whose support is contained in `m`.
pub fn min_generator(cx: &SimplicialComplex, order: &GeneratorOrder, m: VertexSet) -> Result<usize> {
    order.check_for(cx)?;
    order
        .sequence()
        .iter()
        .copied()
        .find(|&g| cx.facets()[g].is_subset(m))
        .ok_or(Error::NoDividingGenerator)
}

fn min_of_set(cx: &SimplicialComplex, order: &GeneratorOrder, set: FacetSet) -> usize {
    let lcm = cx.union_of(set);
    order
        .sequence()
        .iter()
        .copied()
        .find(|&g| cx.facets()[g].is_subset(lcm))
        .expect("every member of the set divides its lcm")
}

/// Rootedness straight from the definition: every nonempty subset contains
/// its own minimum.
pub fn is_rooted(cx: &SimplicialComplex, order: &GeneratorOrder, face: FacetSet) -> bool {
    face.subsets()
        .filter(|g| !g.is_empty())
        .all(|g| g.contains(min_of_set(cx, order, g)))
}

#[derive(Debug, Clone)]
pub struct LyubeznikComplex {
    order: GeneratorOrder,
    generators: Vec<VertexSet>,
    faces: Vec<FacetSet>,
    facets: Vec<FacetSet>,
}

#[derive(Serialize)]
struct LyubeznikJson {
    order: Vec<usize>,
    faces: Vec<Vec<usize>>,
    facets: Vec<Vec<usize>>,
}

impl LyubeznikComplex {
    pub fn order(&self) -> &GeneratorOrder {
        &self.order
    }

    /// Nonempty rooted faces, cardinality first, then lexicographic.
    pub fn faces(&self) -> &[FacetSet] {
        &self.faces
    }

    pub fn facets(&self) -> &[FacetSet] {
        &self.facets
    }

    pub fn contains(&self, face: FacetSet) -> bool {
        face.is_empty() || self.faces.binary_search_by(|f| f.cmp_graded(face)).is_ok()
    }

    pub fn lcm(&self, face: FacetSet) -> VertexSet {
        face.iter()
            .fold(BitSet::EMPTY, |acc, g| acc | self.generators[g])
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(LyubeznikJson {
            order: self.order.sequence().to_vec(),
            faces: self.faces.iter().map(|f| f.to_vec()).collect(),
            facets: self.facets.iter().map(|f| f.to_vec()).collect(),
        })
        .expect("plain data serializes")
    }
}

/// All rooted faces. Subsets of a mask are numerically smaller, so walking
/// masks in increasing order sees every maximal proper subset first; a face
/// is tested only when all of those are rooted.
pub fn lyubeznik_complex(
    cx: &SimplicialComplex,
    order: &GeneratorOrder,
    generator_cap: usize,
) -> Result<LyubeznikComplex> {
    check_cap(CapKind::LyubeznikGenerators, generator_cap, cx.num_facets())?;
    order.check_for(cx)?;
    let q = cx.num_facets();
    let mut rooted = vec![false; 1 << q];
    let mut faces = Vec::new();
    for mask in 1usize..(1 << q) {
        let set = BitSet::from_bits(mask as u64);
        let closed = set.iter().all(|g| {
            let sub = mask & !(1 << g);
            sub == 0 || rooted[sub]
        });
        if closed && set.contains(min_of_set(cx, order, set)) {
            rooted[mask] = true;
            faces.push(set);
        }
    }
    faces.sort_by(|a, b| a.cmp_graded(*b));
    let facets = faces
        .iter()
        .copied()
        .filter(|f| (0..q).all(|g| f.contains(g) || !rooted[(f.with(g)).bits() as usize]))
        .collect();
    Ok(LyubeznikComplex {
        order: order.clone(),
        generators: cx.facets().to_vec(),
        faces,
        facets,
    })
}

/// A facet of the Lyubeznik complex all of whose members are needed for its
/// lcm. It certifies `b_{index, multidegree}(S/I) != 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BarileWitness {
    pub face: FacetSet,
    pub multidegree: VertexSet,
    pub index: usize,
}

pub fn barile_witnesses(
    cx: &SimplicialComplex,
    order: &GeneratorOrder,
    generator_cap: usize,
) -> Result<Vec<BarileWitness>> {
    let lambda = lyubeznik_complex(cx, order, generator_cap)?;
    Ok(lambda
        .facets()
        .iter()
        .copied()
        .filter(|&face| {
            let lcm = cx.union_of(face);
            face.iter().all(|g| cx.union_of(face.without(g)) != lcm)
        })
        .map(|face| BarileWitness {
            face,
            multidegree: cx.union_of(face),
            index: face.len(),
        })
        .collect())
}

/// The order `F1 < ... < Fk < (remaining facets in input order)` under which
/// a well ordered facet cover `F1, ..., Fk` is a facet of the Lyubeznik
/// complex.
pub fn order_from_wofc(cx: &SimplicialComplex, seq: &[usize]) -> Result<GeneratorOrder> {
    if let WellOrderedCheck::Fails(why) = is_well_ordered(cx, seq)? {
        return Err(Error::NotWellOrdered(why.to_string()));
    }
    let cover = BitSet::from_indices(seq.iter().copied());
    let mut sequence = seq.to_vec();
    sequence.extend((0..cx.num_facets()).filter(|g| !cover.contains(*g)));
    let order = GeneratorOrder::new(sequence)?;
    assert!(
        is_rooted(cx, &order, cover),
        "well ordered cover is not rooted under the constructed order"
    );
    for h in (0..cx.num_facets()).filter(|h| !cover.contains(*h)) {
        assert!(
            !is_rooted(cx, &order, cover.with(h)),
            "well ordered cover extends by facet {h}"
        );
    }
    Ok(order)
}

/// A monomial with arbitrary exponents, keyed by vertex index.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(BTreeMap<usize, u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn squarefree(support: VertexSet) -> Self {
        Monomial(support.iter().map(|v| (v, 1)).collect())
    }

    pub fn exponents(&self) -> &BTreeMap<usize, u32> {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (&v, &e) in &other.0 {
            *out.entry(v).or_insert(0) += e;
        }
        Monomial(out)
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0
            .iter()
            .map(|(&v, &e)| {
                if e == 1 {
                    names[v].clone()
                } else {
                    format!("{}^{}", names[v], e)
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedMonomial {
    pub sign: i8,
    pub monomial: Monomial,
}

/// The differential `d_i : L_i -> L_(i-1)` of the Lyubeznik resolution,
/// stored sparsely. Columns are the rooted faces with `i` members, rows the
/// faces with `i - 1` members (the empty face when `i = 1`).
#[derive(Debug, Clone)]
pub struct BoundaryMatrix {
    pub index: usize,
    pub rows: Vec<FacetSet>,
    pub cols: Vec<FacetSet>,
    pub entries: BTreeMap<(usize, usize), SignedMonomial>,
}

impl BoundaryMatrix {
    pub fn get(&self, row: usize, col: usize) -> Option<&SignedMonomial> {
        self.entries.get(&(row, col))
    }
}

/// `d_i([m_t1, ..., m_ti]) = Σ_j (-1)^(j+1) lcm(F)/lcm(F ∖ m_tj) [F ∖ m_tj]`
/// with `t1 < ... < ti` in the generator order.
pub fn boundary_matrices(lambda: &LyubeznikComplex) -> Vec<BoundaryMatrix> {
    let top = lambda.faces.iter().map(|f| f.len()).max().unwrap_or(0);
    let faces_of = |size: usize| -> Vec<FacetSet> {
        if size == 0 {
            vec![BitSet::EMPTY]
        } else {
            lambda.faces.iter().copied().filter(|f| f.len() == size).collect()
        }
    };
    (1..=top)
        .map(|i| {
            let rows = faces_of(i - 1);
            let cols = faces_of(i);
            let row_index: BTreeMap<FacetSet, usize> =
                rows.iter().enumerate().map(|(r, &f)| (f, r)).collect();
            let mut entries = BTreeMap::new();
            for (c, &face) in cols.iter().enumerate() {
                let lcm = lambda.lcm(face);
                for (j, g) in lambda.order.sorted(face).into_iter().enumerate() {
                    let sub = face.without(g);
                    let r = row_index[&sub];
                    entries.insert(
                        (r, c),
                        SignedMonomial {
                            sign: if j % 2 == 0 { 1 } else { -1 },
                            monomial: Monomial::squarefree(lcm - lambda.lcm(sub)),
                        },
                    );
                }
            }
            BoundaryMatrix {
                index: i,
                rows,
                cols,
                entries,
            }
        })
        .collect()
}

/// Terms of `lower ∘ upper` that fail to cancel, keyed by (row of `lower`,
/// column of `upper`). Empty exactly when the composition is zero.
pub fn composition_residue(
    lower: &BoundaryMatrix,
    upper: &BoundaryMatrix,
) -> BTreeMap<(usize, usize), BTreeMap<Monomial, i64>> {
    let mut sums: BTreeMap<(usize, usize), BTreeMap<Monomial, i64>> = BTreeMap::new();
    for (&(mid, col), outer) in &upper.entries {
        for (&(row, mid2), inner) in &lower.entries {
            if mid2 != mid {
                continue;
            }
            let term = inner.monomial.mul(&outer.monomial);
            *sums
                .entry((row, col))
                .or_default()
                .entry(term)
                .or_insert(0) += i64::from(inner.sign) * i64::from(outer.sign);
        }
    }
    for terms in sums.values_mut() {
        terms.retain(|_, c| *c != 0);
    }
    sums.retain(|_, terms| !terms.is_empty());
    sums
}

/// `d_(i-1) ∘ d_i = 0` for every consecutive pair.
pub fn d_squared_vanishes(mats: &[BoundaryMatrix]) -> bool {
    mats.windows(2)
        .all(|w| composition_residue(&w[0], &w[1]).is_empty())
}
