//! Ground-truth Betti numbers from simplicial homology.
//!
//! For a squarefree monomial ideal `I` and a squarefree multidegree `m`,
//! `b_{i,m}(I) = dim H̃_(i-1)(Taylor(I)_{<m})`, where the strict-lower
//! Taylor complex collects the generator subsets whose lcm strictly divides
//! `m`. Homology is computed over the rationals with exact integer
//! elimination. This module shares no code with the facet cover route.

use std::collections::{BTreeMap, BTreeSet};

use crate::betti::{BettiTable, Convention};
use crate::bitset::{BitSet, FacetSet, VertexSet};
use crate::caps::Caps;
use crate::complex::SimplicialComplex;
use crate::error::{check_cap, CapKind, Result};
use crate::rank::{exact_rank, ExactMatrix};

/// A downward-closed family of generator-index sets. The void complex has
/// no faces at all; every other complex contains the empty face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbstractComplex {
    /// All faces, cardinality first, then lexicographic.
    faces: Vec<FacetSet>,
}

impl AbstractComplex {
    pub fn void() -> Self {
        AbstractComplex { faces: Vec::new() }
    }

    /// The downward closure of `generators` (plus the empty face).
    pub fn from_maximal_faces(generators: &[FacetSet]) -> Self {
        let mut all = BTreeSet::new();
        all.insert(BitSet::EMPTY);
        for &g in generators {
            all.extend(g.subsets());
        }
        Self::from_faces(all)
    }

    fn from_faces<I: IntoIterator<Item = FacetSet>>(faces: I) -> Self {
        let mut faces: Vec<FacetSet> = faces.into_iter().collect();
        faces.sort_by(|a, b| a.cmp_graded(*b));
        faces.dedup();
        AbstractComplex { faces }
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn faces(&self) -> &[FacetSet] {
        &self.faces
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    /// Faces of dimension `d` (with `d + 1` vertices); `d = -1` is the
    /// empty face.
    pub fn faces_of_dim(&self, d: isize) -> Vec<FacetSet> {
        if d < -1 {
            return Vec::new();
        }
        let size = (d + 1) as usize;
        self.faces.iter().copied().filter(|f| f.len() == size).collect()
    }

    pub fn dimension(&self) -> Option<isize> {
        self.faces.last().map(|f| f.len() as isize - 1)
    }

    pub fn maximal_faces(&self) -> Vec<FacetSet> {
        self.faces
            .iter()
            .copied()
            .filter(|&f| !self.faces.iter().any(|&g| f.is_proper_subset(g)))
            .collect()
    }
}

/// `Taylor(I)_{<m}`: generator subsets whose lcm is a proper subset of `m`.
pub fn taylor_lower(cx: &SimplicialComplex, m: VertexSet) -> AbstractComplex {
    let dividing: FacetSet = cx
        .facets()
        .iter()
        .enumerate()
        .filter(|(_, f)| f.is_subset(m))
        .map(|(i, _)| i)
        .collect();
    AbstractComplex::from_faces(
        dividing
            .subsets()
            .filter(|&s| cx.union_of(s).is_proper_subset(m)),
    )
}

/// Augmented boundary `∂_d : C_d -> C_(d-1)` with the usual alternating
/// signs; rows are `(d-1)`-faces, columns `d`-faces.
pub fn boundary_matrix(k: &AbstractComplex, d: isize) -> ExactMatrix {
    let rows = k.faces_of_dim(d - 1);
    let cols = k.faces_of_dim(d);
    let index: BTreeMap<FacetSet, usize> = rows.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut m = ExactMatrix::zeros(rows.len(), cols.len());
    for (c, &face) in cols.iter().enumerate() {
        for (j, v) in face.iter().enumerate() {
            let r = index[&face.without(v)];
            m.set(r, c, if j % 2 == 0 { 1 } else { -1 });
        }
    }
    m
}

/// Reduced homology dimensions over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedHomology {
    /// `dims[k]` is `dim H̃_(k-1)`.
    dims: Vec<usize>,
}

impl ReducedHomology {
    pub fn dim(&self, d: isize) -> usize {
        if d < -1 {
            return 0;
        }
        self.dims.get((d + 1) as usize).copied().unwrap_or(0)
    }

    /// `(d, dim H̃_d)` for every nonzero group.
    pub fn nonzero(&self) -> Vec<(isize, usize)> {
        self.dims
            .iter()
            .enumerate()
            .filter(|(_, &v)| v > 0)
            .map(|(k, &v)| (k as isize - 1, v))
            .collect()
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&v| v == 0)
    }
}

/// `dim H̃_d = #d-faces - rank ∂_d - rank ∂_(d+1)`, using the augmented
/// chain complex so that `{∅}` has `H̃_(-1) = 1`. The void complex has no
/// homology.
pub fn reduced_homology_dims(k: &AbstractComplex, face_cap: usize) -> Result<ReducedHomology> {
    check_cap(CapKind::Faces, face_cap, k.num_faces())?;
    let Some(top) = k.dimension() else {
        return Ok(ReducedHomology { dims: Vec::new() });
    };
    // ranks[k] = rank ∂_(k-1), k = 0 ..= top + 2; ∂_(-1) and ∂_(top+1) are zero.
    let mut ranks = vec![0usize; (top + 3) as usize];
    for d in 0..=top {
        ranks[(d + 1) as usize] = exact_rank(&boundary_matrix(k, d));
    }
    let dims = (-1..=top)
        .map(|d| {
            let n = k.faces_of_dim(d).len();
            n - ranks[(d + 1) as usize] - ranks[(d + 2) as usize]
        })
        .collect();
    Ok(ReducedHomology { dims })
}

/// `∂_(d-1) ∘ ∂_d = 0` for every `d`.
pub fn boundary_squares_to_zero(k: &AbstractComplex) -> bool {
    let Some(top) = k.dimension() else {
        return true;
    };
    (1..=top).all(|d| {
        let lower = boundary_matrix(k, d - 1);
        let upper = boundary_matrix(k, d);
        lower.rows() == 0 || upper.cols() == 0 || lower.mul(&upper).is_zero()
    })
}

/// Reduced Euler characteristic computed from faces and from homology.
pub fn euler_characteristics(k: &AbstractComplex, h: &ReducedHomology) -> (i64, i64) {
    let top = k.dimension().unwrap_or(-1);
    let sign = |d: isize| if d.rem_euclid(2) == 0 { 1 } else { -1 };
    let faces = (-1..=top)
        .map(|d| sign(d) * k.faces_of_dim(d).len() as i64)
        .sum();
    let homology = (-1..=top).map(|d| sign(d) * h.dim(d) as i64).sum();
    (faces, homology)
}

/// Multigraded Betti numbers of `S/I` for every lcm of a nonempty generator
/// subset. Zero entries are omitted.
pub fn betti_oracle(cx: &SimplicialComplex, caps: &Caps) -> Result<BettiTable> {
    check_cap(CapKind::OracleGenerators, caps.oracle_generators, cx.num_facets())?;
    let mut degrees = BTreeSet::new();
    for subset in cx.all_facets().subsets().skip(1) {
        degrees.insert(cx.union_of(subset));
    }
    let mut table = BettiTable::new(Convention::Quotient);
    for m in degrees {
        let lower = taylor_lower(cx, m);
        let h = reduced_homology_dims(&lower, caps.faces)?;
        // b_{i,m}(I) = dim H̃_(i-1), and b_{i,m}(S/I) = b_{i-1,m}(I).
        for (d, rank) in h.nonzero() {
            let ideal_index = (d + 1) as usize;
            table.insert(m, ideal_index + 1, rank as u64);
        }
    }
    Ok(table)
}
