//! Simplicial mesh kernel.
//!
//! A mesh is a set of entities `(d, i)` (vertices, edges, faces, cells) plus
//! incidence classes `d -> d'` stored in compressed offset/index arrays. Only
//! the cell-vertex class is required; every other class is computed on demand
//! by [`engine::compute_connectivity`], usually implicitly through the
//! iterators in [`traversal`].

pub mod bench;
pub mod cell;
pub mod connectivity;
pub mod dist;
mod editor;
pub mod engine;
mod error;
pub mod function;
pub mod generators;
pub mod geometry;
pub mod io;
pub mod memory;
pub mod mesh;
pub mod ops;
pub mod topology;
pub mod traversal;

pub use cell::{local_entity_vertex_sets, CellKind, VertexKey};
pub use connectivity::Connectivity;
pub use editor::MeshEditor;
pub use error::{EditorError, Error, Result};
pub use function::{MeshFunction, MeshValue};
pub use geometry::MeshGeometry;
pub use mesh::{Mesh, MeshEntity, ValidationReport};
pub use topology::MeshTopology;
