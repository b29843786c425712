//! Operations producing new meshes from existing ones.

mod boundary;
mod refine;

pub use boundary::{boundary_mesh, BoundaryExtraction};
pub use refine::{refine_uniform, refine_uniform_times};
