use thiserror::Error;

/// Errors raised while staging a mesh through [`crate::MeshEditor`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EditorError {
    #[error("editor protocol violation: {0}")]
    Protocol(&'static str),
    #[error("{what} index {index} added twice")]
    DuplicateIndex { what: &'static str, index: usize },
    #[error("{what} index {index} outside declared range 0..{len}")]
    IndexOutOfRange { what: &'static str, index: usize, len: usize },
    #[error("cell {cell} references vertex {vertex}, but only {n_vertices} vertices are declared")]
    DanglingVertex { cell: usize, vertex: u32, n_vertices: usize },
    #[error("expected {expected} values, got {got}")]
    WrongArity { expected: usize, got: usize },
    #[error("cell {cell} repeats vertex {vertex}")]
    DegenerateCell { cell: usize, vertex: u32 },
    #[error("non-finite coordinate on vertex {0}")]
    NonFiniteCoordinate(usize),
    #[error("incomplete fill: {filled} of {expected} {what} added")]
    IncompleteFill { what: &'static str, filled: usize, expected: usize },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension {dim} out of range 0..={max}")]
    DimensionOutOfRange { dim: usize, max: usize },
    #[error("index {index} out of range 0..{len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("connectivity {from} -> {to} not initialized")]
    NotInitialized { from: usize, to: usize },
    #[error("connectivity {from} -> {to} is the defining cell-vertex class and cannot be cleared")]
    ProtectedClass { from: usize, to: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid connectivity {from} -> {to}: {reason}")]
    InvalidConnectivity { from: usize, to: usize, reason: String },
    #[error(transparent)]
    Editor(#[from] EditorError),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("facet with original vertices {vertices:?} is shared by {ranks} ranks")]
    NonManifold { vertices: Vec<u32>, ranks: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("cursor used after the mesh topology changed")]
    StaleCursor,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(dim: usize, max: usize) -> Result<()> {
    if dim > max {
        Err(Error::DimensionOutOfRange { dim, max })
    } else {
        Ok(())
    }
}
