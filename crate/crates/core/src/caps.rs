//! Resource limits for the exhaustive algorithms.

use serde::{Deserialize, Serialize};

/// Upper bounds on instance size. Every exhaustive routine checks the
/// relevant bound up front and refuses with [`crate::Error::CapExceeded`]
/// rather than running for an unbounded amount of time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Facet count for forest recognition, cover enumeration and the
    /// well ordered cover search.
    pub facets: usize,
    /// Vertex count for minimal vertex cover enumeration.
    pub vertices: usize,
    /// Generator count for Lyubeznik complex construction.
    pub lyubeznik_generators: usize,
    /// Generator count for the homology oracle.
    pub oracle_generators: usize,
    /// Total face count of a single complex handed to the homology routine.
    pub faces: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            facets: 20,
            vertices: 24,
            lyubeznik_generators: 16,
            oracle_generators: 12,
            faces: 1 << 16,
        }
    }
}
