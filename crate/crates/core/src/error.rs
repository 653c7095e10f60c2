use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ground set of size {n} exceeds the {max}-vertex limit")]
    TooManyVertices { n: usize, max: usize },

    #[error("facets[{facet}]: vertex {vertex} is out of range for n = {n}")]
    VertexOutOfRange { facet: usize, vertex: usize, n: usize },

    #[error("facets[{facet}]: vertex {vertex} is listed twice")]
    DuplicateVertex { facet: usize, vertex: usize },

    #[error("facet list is empty; use SimplicialComplex::void for the void complex")]
    EmptyFacetList,

    #[error("skeleton dimension {k} is out of range for {nv} vertices")]
    SkeletonDimension { nv: usize, k: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("bundled complex `{name}` failed validation: {reason}")]
    InvalidBundled { name: String, reason: String },

    #[error("unknown complex `{0}`")]
    UnknownComplex(String),

    #[error("invalid coloring certificate: {0}")]
    InvalidCertificate(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid construction parameters: {0}")]
    InvalidParameters(String),

    #[error("invalid query: {0}")]
    InvalidQuery(String),

    #[error("the Hurwitz-Radon function is defined for n >= 1")]
    ZeroArgument,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
