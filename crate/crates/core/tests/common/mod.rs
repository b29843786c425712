#![allow(dead_code)]

pub mod oracle;

use meshtopo::{CellKind, Mesh};

/// Cells (0,1,3), (1,2,3) on the unit square.
pub fn two_triangles() -> Mesh {
    Mesh::new(
        CellKind::Triangle,
        2,
        vec![0.0, 0.0, 1.0, 0.0, 1.0, 1.0, 0.0, 1.0],
        vec![0, 1, 3, 1, 2, 3],
    )
    .unwrap()
}

pub fn single_tetrahedron() -> Mesh {
    Mesh::new(
        CellKind::Tetrahedron,
        3,
        vec![0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0],
        vec![0, 1, 2, 3],
    )
    .unwrap()
}

/// Rows of a class with each row sorted.
pub fn sorted_rows(mesh: &Mesh, d0: usize, d1: usize) -> Vec<Vec<u32>> {
    mesh.connectivity(d0, d1)
        .unwrap()
        .expect("class computed")
        .rows()
        .map(|r| {
            let mut r = r.to_vec();
            r.sort_unstable();
            r
        })
        .collect()
}
