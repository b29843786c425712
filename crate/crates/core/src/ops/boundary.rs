use crate::error::{Error, Result};
use crate::function::MeshFunction;
use crate::mesh::Mesh;

/// The boundary of a mesh plus maps back into it.
#[derive(Debug, Clone)]
pub struct BoundaryExtraction {
    /// Mesh of dimension D - 1 with copied coordinates.
    pub boundary: Mesh,
    /// Boundary vertex -> original vertex.
    pub vertex_map: MeshFunction<u32>,
    /// Boundary cell -> original facet.
    pub cell_map: MeshFunction<u32>,
}

/// Extracts the facets incident to exactly one cell.
///
/// Boundary cells and vertices are numbered in ascending order of their
/// original indices, so both maps are increasing.
pub fn boundary_mesh(mesh: &Mesh) -> Result<BoundaryExtraction> {
    let tdim = mesh.dim();
    let facet_kind = mesh
        .kind()
        .facet_kind()
        .ok_or_else(|| Error::Unsupported("boundary of a 0-dimensional mesh".into()))?;
    let fdim = tdim - 1;
    let facet_cells = mesh.init(fdim, tdim)?;
    let facet_vertices = if fdim == 0 {
        None
    } else {
        Some(mesh.init(fdim, 0)?)
    };
    let vertices_of = |f: u32| -> &[u32] {
        match facet_vertices {
            Some(c) => c.row(f as usize),
            None => &[],
        }
    };

    let facets: Vec<u32> = (0..facet_cells.num_rows())
        .filter(|&f| facet_cells.row_len(f) == 1)
        .map(|f| f as u32)
        .collect();

    let mut used = vec![false; mesh.num_vertices()];
    for &f in &facets {
        if fdim == 0 {
            used[f as usize] = true;
        } else {
            for &v in vertices_of(f) {
                used[v as usize] = true;
            }
        }
    }
    // original vertex -> boundary vertex, assigned in ascending original order
    let mut renumber = vec![u32::MAX; mesh.num_vertices()];
    let mut vertex_map = Vec::new();
    for v in (0..used.len()).filter(|&v| used[v]) {
        renumber[v] = vertex_map.len() as u32;
        vertex_map.push(v as u32);
    }

    let gdim = mesh.gdim();
    let mut coordinates = Vec::with_capacity(vertex_map.len() * gdim);
    for &v in &vertex_map {
        coordinates.extend_from_slice(mesh.geometry().point(v as usize));
    }
    let mut cells = Vec::with_capacity(facets.len() * (fdim + 1));
    for &f in &facets {
        if fdim == 0 {
            cells.push(renumber[f as usize]);
        } else {
            cells.extend(vertices_of(f).iter().map(|&v| renumber[v as usize]));
        }
    }

    let boundary = Mesh::new(facet_kind, gdim, coordinates, cells)?;
    Ok(BoundaryExtraction {
        boundary,
        vertex_map: MeshFunction::from_values(0, vertex_map),
        cell_map: MeshFunction::from_values(fdim, facets),
    })
}
