//! Structured simplicial meshes of the unit interval, square and cube.
//!
//! Vertices sit on the regular lattice, x fastest. Cells are numbered lattice
//! box by lattice box, and within a box by sub-cell. Every emitted tuple is
//! ascending, so the meshes are already ordered.

use crate::cell::CellKind;
use crate::error::{Error, Result};
use crate::mesh::Mesh;

fn check(counts: &[usize]) -> Result<()> {
    if counts.contains(&0) {
        return Err(Error::InvalidArgument(format!(
            "subdivision counts must be at least 1, got {counts:?}"
        )));
    }
    let cells = counts.iter().try_fold(1usize, |a, &n| a.checked_mul(n));
    let verts = counts.iter().try_fold(1usize, |a, &n| a.checked_mul(n + 1));
    match (cells, verts) {
        (Some(c), Some(v)) if c.saturating_mul(6) <= u32::MAX as usize && v <= u32::MAX as usize => Ok(()),
        _ => Err(Error::Unsupported(format!("lattice {counts:?} too large for 32-bit indices"))),
    }
}

/// `nx` equal intervals on [0, 1].
pub fn unit_interval(nx: usize) -> Result<Mesh> {
    check(&[nx])?;
    let coordinates = (0..=nx).map(|i| i as f64 / nx as f64).collect();
    let cells = (0..nx as u32).flat_map(|i| [i, i + 1]).collect();
    Mesh::new(CellKind::Interval, 1, coordinates, cells)
}

/// `2 nx ny` triangles on [0, 1]^2, each box cut along its lower-left to
/// upper-right diagonal.
pub fn unit_square(nx: usize, ny: usize) -> Result<Mesh> {
    check(&[nx, ny])?;
    let mut coordinates = Vec::with_capacity(2 * (nx + 1) * (ny + 1));
    for iy in 0..=ny {
        for ix in 0..=nx {
            coordinates.extend([ix as f64 / nx as f64, iy as f64 / ny as f64]);
        }
    }
    let row = (nx + 1) as u32;
    let mut cells = Vec::with_capacity(6 * nx * ny);
    for iy in 0..ny as u32 {
        for ix in 0..nx as u32 {
            let v0 = iy * row + ix;
            let (v1, v2, v3) = (v0 + 1, v0 + row, v0 + row + 1);
            cells.extend([v0, v1, v3, v0, v2, v3]);
        }
    }
    Mesh::new(CellKind::Triangle, 2, coordinates, cells)
}

/// `6 nx ny nz` tetrahedra on [0, 1]^3 (Kuhn subdivision).
///
/// Each box is split into the six tetrahedra that share its main diagonal,
/// one per ordering of the axes: `(v0, v0 + e_a, v0 + e_a + e_b, v7)`.
/// Neighbouring boxes then agree on their common faces.
pub fn unit_cube(nx: usize, ny: usize, nz: usize) -> Result<Mesh> {
    check(&[nx, ny, nz])?;
    let mut coordinates = Vec::with_capacity(3 * (nx + 1) * (ny + 1) * (nz + 1));
    for iz in 0..=nz {
        for iy in 0..=ny {
            for ix in 0..=nx {
                coordinates.extend([
                    ix as f64 / nx as f64,
                    iy as f64 / ny as f64,
                    iz as f64 / nz as f64,
                ]);
            }
        }
    }
    let ex = 1u32;
    let ey = (nx + 1) as u32;
    let ez = ((nx + 1) * (ny + 1)) as u32;
    let steps = [
        (ex, ey),
        (ex, ez),
        (ey, ex),
        (ey, ez),
        (ez, ex),
        (ez, ey),
    ];
    let mut cells = Vec::with_capacity(24 * nx * ny * nz);
    for iz in 0..nz as u32 {
        for iy in 0..ny as u32 {
            for ix in 0..nx as u32 {
                let v0 = iz * ez + iy * ey + ix;
                let v7 = v0 + ex + ey + ez;
                for (a, b) in steps {
                    cells.extend([v0, v0 + a, v0 + a + b, v7]);
                }
            }
        }
    }
    Mesh::new(CellKind::Tetrahedron, 3, coordinates, cells)
}
