//! Betti numbers of squarefree monomial ideals through well ordered facet
//! covers.
//!
//! A [`SimplicialComplex`] is stored by its facets, which are read as the
//! generators of its facet ideal. For simplicial forests [`multigraded_betti`]
//! reads the whole multigraded Betti table off well ordered facet covers of
//! induced subcollections. For arbitrary complexes the same covers give
//! nonvanishing certificates and a regularity lower bound, and
//! [`betti_oracle`] computes exact Betti numbers from simplicial homology.

pub mod betti;
pub mod bitset;
pub mod caps;
pub mod complex;
pub mod covers;
pub mod error;
pub mod forest;
pub mod generate;
pub mod graphs;
pub mod lyubeznik;
pub mod oracle;
pub mod parse;
pub mod rank;

pub use betti::{BettiDiagram, BettiTable, Convention};
pub use bitset::{BitSet, FacetSet, VertexSet};
pub use caps::Caps;
pub use complex::{ForestCheck, Localized, SimplicialComplex};
pub use covers::{find_well_ordered_covers, is_well_ordered, minimal_facet_covers};
pub use error::{CapKind, Error, Result};
pub use forest::{multigraded_betti, regularity_lower_bounds, top_betti_recursive};
pub use graphs::Graph;
pub use lyubeznik::{lyubeznik_complex, GeneratorOrder, LyubeznikComplex};
pub use oracle::betti_oracle;
pub use parse::{parse_complex, parse_graph};

#[cfg(test)]
pub(crate) mod testutil {
    use crate::complex::SimplicialComplex;
    use crate::generate::variable_names;

    /// Facets given as whitespace-separated names.
    pub fn complex(lines: &[&str]) -> SimplicialComplex {
        let raw: Vec<Vec<&str>> = lines.iter().map(|l| l.split_whitespace().collect()).collect();
        SimplicialComplex::normalize(&raw).unwrap().complex
    }

    /// The four-facet tree x3x4x5, x3x5x6, x1x2x3, x1x3x4 on x1..x6.
    pub fn tree() -> SimplicialComplex {
        let names = variable_names(6);
        let facets = [[3, 4, 5], [3, 5, 6], [1, 2, 3], [1, 3, 4]]
            .iter()
            .map(|f| f.iter().map(|v| v - 1).collect())
            .collect::<Vec<_>>();
        SimplicialComplex::from_facet_sets(names, &facets).unwrap().complex
    }
}
