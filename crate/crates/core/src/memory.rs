//! Closed-form payload sizes for simplicial meshes holding only the
//! cell-vertex class, matching [`crate::Mesh::size_bytes`].

/// Bytes of a mesh with `n_cells` simplices of dimension `tdim` over
/// `n_vertices` points in `gdim` dimensions: `4 ((D + 1) N_D + N_D + 1)` for
/// the cell-vertex indices and offsets plus `8 n N_0` for the coordinates.
pub fn simplex_mesh_bytes(tdim: usize, gdim: usize, n_cells: u64, n_vertices: u64) -> u64 {
    4 * ((tdim as u64 + 1) * n_cells + n_cells + 1) + 8 * gdim as u64 * n_vertices
}

/// Same, for a tetrahedral mesh with `cells_per_vertex` times as many cells as
/// vertices. Coordinates are counted as `24 N_3 / ratio`, which stays exact
/// when `N_3 / ratio` itself is not an integer.
pub fn tet_mesh_bytes_from_ratio(n_cells: u64, cells_per_vertex: u64) -> u64 {
    4 * (5 * n_cells + 1) + 24 * n_cells / cells_per_vertex
}
