use thiserror::Error;

/// Which resource limit a refused computation ran into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapKind {
    Facets,
    Vertices,
    LyubeznikGenerators,
    OracleGenerators,
    Faces,
}

impl std::fmt::Display for CapKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CapKind::Facets => "facet",
            CapKind::Vertices => "vertex",
            CapKind::LyubeznikGenerators => "lyubeznik generator",
            CapKind::OracleGenerators => "oracle generator",
            CapKind::Faces => "face",
        })
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("no facets given")]
    EmptyInput,
    #[error("facet {0} is empty")]
    EmptyFacet(usize),
    #[error("the complex has no facets")]
    EmptyComplex,
    #[error("too many vertices: {0} (at most {max} supported)", max = crate::bitset::CAPACITY)]
    TooManyVertices(usize),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex set is not contained in the vertex set of the complex")]
    VerticesOutsideComplex,
    #[error("facet index {0} is out of range")]
    UnknownFacet(usize),
    #[error("facet index {0} appears more than once")]
    DuplicateFacet(usize),
    #[error("{kind} cap exceeded: {actual} > {limit}")]
    CapExceeded {
        kind: CapKind,
        limit: usize,
        actual: usize,
    },
    #[error("the complex is not a simplicial forest (leafless subcollection {leafless:?}); use the homology oracle instead")]
    NotAForest { leafless: Vec<usize> },
    #[error("forest law violated at a multidegree: {0}")]
    ForestLawViolation(String),
    #[error("invalid generator order: {0}")]
    InvalidOrder(String),
    #[error("no generator divides the given monomial")]
    NoDividingGenerator,
    #[error("sequence is not a well ordered facet cover: {0}")]
    NotWellOrdered(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid graph input: {0}")]
    Graph(String),
    #[error("invalid bouquet data: {0}")]
    Bouquet(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_cap(kind: CapKind, limit: usize, actual: usize) -> Result<()> {
    if actual > limit {
        Err(Error::CapExceeded {
            kind,
            limit,
            actual,
        })
    } else {
        Ok(())
    }
}
