//! The mesh: a topology paired with a geometry, and entity views into it.

use crate::cell::{CellKind, VertexKey};
use crate::connectivity::Connectivity;
use crate::engine;
use crate::error::{check_dim, EditorError, Error, Result};
use crate::geometry::MeshGeometry;
use crate::topology::MeshTopology;

/// A simplicial mesh.
///
/// All data lives in three flat arrays per stored class plus the coordinate
/// array; everything else (entities, iterators, views) is generated on demand.
#[derive(Debug, Clone)]
pub struct Mesh {
    topology: MeshTopology,
    geometry: MeshGeometry,
}

/// Diagnostics collected by [`Mesh::validate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ValidationReport {
    /// Cells with negative signed volume (only counted when gdim == tdim).
    pub inverted_cells: usize,
    pub stored_classes: usize,
}

impl Mesh {
    /// Creates a mesh from coordinates (`gdim` per vertex) and flat cell-vertex
    /// tuples (`D + 1` per cell).
    pub fn new(kind: CellKind, gdim: usize, coordinates: Vec<f64>, cells: Vec<u32>) -> Result<Self> {
        if gdim == 0 || gdim > 3 || gdim < kind.dim() {
            return Err(Error::InvalidArgument(format!(
                "geometric dimension {gdim} unsupported for {kind} cells"
            )));
        }
        if !coordinates.len().is_multiple_of(gdim) {
            return Err(EditorError::WrongArity {
                expected: gdim * (coordinates.len() / gdim + 1),
                got: coordinates.len(),
            }
            .into());
        }
        let nv = kind.num_vertices();
        if !cells.len().is_multiple_of(nv) {
            return Err(EditorError::WrongArity {
                expected: nv * (cells.len() / nv + 1),
                got: cells.len(),
            }
            .into());
        }
        let num_vertices = coordinates.len() / gdim;
        if num_vertices > u32::MAX as usize || cells.len() / nv > u32::MAX as usize {
            return Err(Error::Unsupported("more than 2^32-1 entities".into()));
        }
        if let Some(v) = coordinates.iter().position(|x| !x.is_finite()) {
            return Err(EditorError::NonFiniteCoordinate(v / gdim).into());
        }
        for (c, tuple) in cells.chunks_exact(nv).enumerate() {
            for (a, &v) in tuple.iter().enumerate() {
                if v as usize >= num_vertices {
                    return Err(EditorError::DanglingVertex {
                        cell: c,
                        vertex: v,
                        n_vertices: num_vertices,
                    }
                    .into());
                }
                if tuple[..a].contains(&v) {
                    return Err(EditorError::DegenerateCell { cell: c, vertex: v }.into());
                }
            }
        }
        let topology = MeshTopology::new(kind, num_vertices, Connectivity::from_uniform(nv, cells));
        Ok(Mesh {
            topology,
            geometry: MeshGeometry::new(gdim, coordinates),
        })
    }

    pub fn kind(&self) -> CellKind {
        self.topology.kind()
    }

    pub fn topology(&self) -> &MeshTopology {
        &self.topology
    }

    pub fn topology_mut(&mut self) -> &mut MeshTopology {
        &mut self.topology
    }

    pub fn geometry(&self) -> &MeshGeometry {
        &self.geometry
    }

    /// Topological dimension D.
    pub fn dim(&self) -> usize {
        self.topology.dim()
    }

    /// Geometric dimension n.
    pub fn gdim(&self) -> usize {
        self.geometry.dim()
    }

    pub fn num_vertices(&self) -> usize {
        self.topology.num_vertices()
    }

    pub fn num_cells(&self) -> usize {
        self.topology.num_cells()
    }

    /// N_d if the entities of dimension `d` exist yet.
    pub fn num_entities(&self, d: usize) -> Option<usize> {
        self.topology.size(d)
    }

    pub fn point(&self, v: usize) -> Result<&[f64]> {
        if v >= self.num_vertices() {
            return Err(Error::IndexOutOfRange {
                index: v,
                len: self.num_vertices(),
            });
        }
        Ok(self.geometry.point(v))
    }

    /// The stored class d -> d', without computing it.
    pub fn connectivity(&self, d0: usize, d1: usize) -> Result<Option<&Connectivity>> {
        self.topology.connectivity(d0, d1)
    }

    /// Computes d -> d' (and whatever it depends on) unless already stored.
    #[inline]
    pub fn init(&self, d0: usize, d1: usize) -> Result<&Connectivity> {
        if let Some(c) = self.topology.get(d0, d1) {
            return Ok(c);
        }
        engine::compute_connectivity(&self.topology, d0, d1)
    }

    /// Builds the entities of dimension `d` and returns N_d.
    pub fn init_entities(&self, d: usize) -> Result<usize> {
        check_dim(d, self.dim())?;
        if d > 0 && d < self.dim() {
            self.init(d, 0)?;
        }
        Ok(self.topology.size(d).expect("entities built above"))
    }

    /// Computes every class d -> d'.
    pub fn init_all(&self) -> Result<()> {
        for d0 in 0..=self.dim() {
            for d1 in 0..=self.dim() {
                self.init(d0, d1)?;
            }
        }
        Ok(())
    }

    pub fn clear(&mut self, d0: usize, d1: usize) -> Result<()> {
        self.topology.clear(d0, d1)
    }

    /// Payload bytes: stored classes plus coordinates.
    pub fn size_bytes(&self) -> usize {
        self.topology.size_bytes() + self.geometry.size_bytes()
    }

    pub fn entity(&self, d: usize, i: usize) -> Result<MeshEntity<'_>> {
        check_dim(d, self.dim())?;
        let n = self
            .topology
            .size(d)
            .ok_or(Error::NotInitialized { from: d, to: 0 })?;
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, len: n });
        }
        Ok(MeshEntity::new(self, d, i as u32))
    }

    /// Sorted vertex set of entity `(d, i)`. Needs d -> 0 for 0 < d.
    pub fn entity_vertices(&self, d: usize, i: usize) -> Result<VertexKey> {
        check_dim(d, self.dim())?;
        if d == 0 {
            if i >= self.num_vertices() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    len: self.num_vertices(),
                });
            }
            return Ok(VertexKey::new(&[i as u32]));
        }
        let c = self
            .topology
            .get(d, 0)
            .ok_or(Error::NotInitialized { from: d, to: 0 })?;
        c.get_row(i)
            .map(VertexKey::new)
            .ok_or(Error::IndexOutOfRange {
                index: i,
                len: c.num_rows(),
            })
    }

    /// Replaces every coordinate; the topology is untouched.
    pub fn set_coordinates(&mut self, coordinates: &[f64]) -> Result<()> {
        let gdim = self.gdim();
        let current = self.geometry.coordinates_mut();
        if coordinates.len() != current.len() {
            return Err(EditorError::WrongArity {
                expected: current.len(),
                got: coordinates.len(),
            }
            .into());
        }
        if let Some(v) = coordinates.iter().position(|x| !x.is_finite()) {
            return Err(EditorError::NonFiniteCoordinate(v / gdim).into());
        }
        current.copy_from_slice(coordinates);
        Ok(())
    }

    /// Sorts each cell's vertex tuple ascending and drops all derived classes.
    pub fn order(&mut self) {
        let nv = self.kind().num_vertices();
        let cells = self.topology.cells();
        let already = cells.rows().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        if already {
            return;
        }
        let mut indices = cells.indices().to_vec();
        for tuple in indices.chunks_exact_mut(nv) {
            tuple.sort_unstable();
        }
        self.topology
            .replace_cells(Connectivity::from_uniform(nv, indices));
    }

    /// Whether every cell tuple is ascending.
    pub fn is_ordered(&self) -> bool {
        self.topology
            .cells()
            .rows()
            .all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    /// Signed volume of a cell when gdim == D, unsigned measure otherwise.
    pub fn cell_volume(&self, c: usize) -> f64 {
        let tuple = self.topology.cells().row(c);
        simplex_measure(&self.geometry, tuple, self.gdim())
    }

    /// Σ_d (-1)^d N_d, building all entity dimensions first.
    pub fn euler_characteristic(&self) -> Result<i64> {
        let mut chi = 0i64;
        for d in 0..=self.dim() {
            let n = self.init_entities(d)? as i64;
            chi += if d % 2 == 0 { n } else { -n };
        }
        Ok(chi)
    }

    /// Checks CRS well-formedness of every stored class and the simplicial
    /// shape of the cell-vertex class.
    pub fn validate(&self) -> Result<ValidationReport> {
        let tdim = self.dim();
        let mut report = ValidationReport::default();
        for (d0, d1) in self.topology.stored_classes() {
            let c = self.topology.get(d0, d1).expect("listed as stored");
            let rows = self.topology.size(d0).unwrap_or(c.num_rows());
            let bound = self
                .topology
                .size(d1)
                .ok_or(Error::NotInitialized { from: d1, to: 0 })?;
            c.validate(rows, bound)
                .map_err(|reason| Error::InvalidConnectivity {
                    from: d0,
                    to: d1,
                    reason,
                })?;
            if d1 == 0 && d0 > 0 {
                let want = d0 + 1;
                if let Some(i) = (0..c.num_rows()).find(|&i| c.row_len(i) != want) {
                    return Err(Error::InvalidConnectivity {
                        from: d0,
                        to: 0,
                        reason: format!("row {i} has {} vertices, expected {want}", c.row_len(i)),
                    });
                }
            }
            report.stored_classes += 1;
        }
        if self.geometry.num_points() != self.num_vertices() {
            return Err(Error::Precondition("geometry and topology vertex counts differ".into()));
        }
        if self.gdim() == tdim && tdim > 0 {
            report.inverted_cells = (0..self.num_cells())
                .filter(|&c| self.cell_volume(c) < 0.0)
                .count();
        }
        Ok(report)
    }
}

/// Signed volume (gdim == D) or unsigned measure of the simplex spanned by `vertices`.
pub(crate) fn simplex_measure(geometry: &MeshGeometry, vertices: &[u32], gdim: usize) -> f64 {
    let tdim = vertices.len() - 1;
    if tdim == 0 {
        return 1.0;
    }
    let p0 = geometry.point(vertices[0] as usize);
    let mut edges = [[0.0f64; 3]; 3];
    for (k, &v) in vertices[1..].iter().enumerate() {
        let p = geometry.point(v as usize);
        for a in 0..gdim {
            edges[k][a] = p[a] - p0[a];
        }
    }
    let factorial = [1.0, 1.0, 2.0, 6.0][tdim];
    if tdim == gdim {
        let det = match tdim {
            1 => edges[0][0],
            2 => edges[0][0] * edges[1][1] - edges[0][1] * edges[1][0],
            _ => det3(&edges),
        };
        return det / factorial;
    }
    // Gram determinant for embedded simplices
    let mut gram = [[0.0f64; 3]; 3];
    for i in 0..tdim {
        for j in 0..tdim {
            gram[i][j] = (0..gdim).map(|a| edges[i][a] * edges[j][a]).sum();
        }
    }
    let det = match tdim {
        1 => gram[0][0],
        2 => gram[0][0] * gram[1][1] - gram[0][1] * gram[1][0],
        _ => det3(&gram),
    };
    det.max(0.0).sqrt() / factorial
}

fn det3(m: &[[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// A view of entity `(d, i)`. Holds no mesh data of its own.
#[derive(Debug, Clone, Copy)]
pub struct MeshEntity<'a> {
    mesh: &'a Mesh,
    dim: u8,
    index: u32,
}

impl<'a> MeshEntity<'a> {
    #[inline]
    pub(crate) fn new(mesh: &'a Mesh, dim: usize, index: u32) -> Self {
        MeshEntity {
            mesh,
            dim: dim as u8,
            index,
        }
    }

    pub fn mesh(&self) -> &'a Mesh {
        self.mesh
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    #[inline]
    pub fn index(&self) -> usize {
        self.index as usize
    }

    /// The row (d -> d')_i as stored. Fails if the class has not been computed;
    /// use the cursor interface to compute it on demand.
    pub fn incident(&self, d: usize) -> Result<&'a [u32]> {
        let c = self
            .mesh
            .connectivity(self.dim(), d)?
            .ok_or(Error::NotInitialized {
                from: self.dim(),
                to: d,
            })?;
        Ok(c.row(self.index()))
    }

    /// Coordinates of a vertex entity.
    pub fn point(&self) -> Result<&'a [f64]> {
        if self.dim != 0 {
            return Err(Error::Precondition(format!(
                "point() on an entity of dimension {}",
                self.dim
            )));
        }
        self.mesh.point(self.index())
    }

    pub fn vertex_key(&self) -> Result<VertexKey> {
        self.mesh.entity_vertices(self.dim(), self.index())
    }
}

impl PartialEq for MeshEntity<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.mesh, other.mesh) && self.dim == other.dim && self.index == other.index
    }
}

impl Eq for MeshEntity<'_> {}
