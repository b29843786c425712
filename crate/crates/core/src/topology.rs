//! Entity counts plus the (D+1) x (D+1) table of incidence classes.

use std::sync::OnceLock;

use crate::cell::CellKind;
use crate::connectivity::Connectivity;
use crate::error::{check_dim, Error, Result};

/// Mesh topology: the entities are implicit (`(d, 0..N_d)`), only the
/// incidence classes are stored.
///
/// Classes other than D -> 0 are filled at most once per slot through shared
/// references, so a mesh can compute connectivity on demand while it is
/// borrowed by iterators. Removing classes or rewriting cells needs `&mut`
/// and bumps [`MeshTopology::revision`].
#[derive(Debug, Clone)]
pub struct MeshTopology {
    kind: CellKind,
    num_vertices: usize,
    table: Vec<OnceLock<Connectivity>>,
    revision: u64,
}

impl MeshTopology {
    /// Creates a topology from the minimal class D -> 0.
    pub(crate) fn new(kind: CellKind, num_vertices: usize, cells: Connectivity) -> Self {
        let n = kind.dim() + 1;
        let table: Vec<OnceLock<Connectivity>> = (0..n * n).map(|_| OnceLock::new()).collect();
        let topology = MeshTopology {
            kind,
            num_vertices,
            table,
            revision: 0,
        };
        let _ = topology.slot(kind.dim(), 0).set(cells);
        topology
    }

    #[inline]
    fn slot(&self, d0: usize, d1: usize) -> &OnceLock<Connectivity> {
        &self.table[d0 * (self.kind.dim() + 1) + d1]
    }

    /// Topological dimension D.
    pub fn dim(&self) -> usize {
        self.kind.dim()
    }

    pub fn kind(&self) -> CellKind {
        self.kind
    }

    /// Number of entities of dimension `d`, or `None` if they have not been built yet.
    pub fn size(&self, d: usize) -> Option<usize> {
        let tdim = self.dim();
        if d > tdim {
            None
        } else if d == 0 {
            Some(self.num_vertices)
        } else if d == tdim {
            Some(self.cells().num_rows())
        } else {
            self.slot(d, 0).get().map(Connectivity::num_rows)
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_cells(&self) -> usize {
        self.cells().num_rows()
    }

    /// The cell -> vertex class, always present.
    pub fn cells(&self) -> &Connectivity {
        self.slot(self.dim(), 0)
            .get()
            .expect("cell-vertex connectivity is always present")
    }

    /// The stored class d -> d', if any. Never computes anything.
    pub fn connectivity(&self, d0: usize, d1: usize) -> Result<Option<&Connectivity>> {
        check_dim(d0, self.dim())?;
        check_dim(d1, self.dim())?;
        Ok(self.slot(d0, d1).get())
    }

    #[inline]
    pub(crate) fn get(&self, d0: usize, d1: usize) -> Option<&Connectivity> {
        if d0 > self.dim() || d1 > self.dim() {
            return None;
        }
        self.slot(d0, d1).get()
    }

    pub fn has(&self, d0: usize, d1: usize) -> bool {
        d0 <= self.dim() && d1 <= self.dim() && self.slot(d0, d1).get().is_some()
    }

    /// Stores a computed class. A slot that is already filled keeps its value.
    pub(crate) fn store(&self, d0: usize, d1: usize, c: Connectivity) -> &Connectivity {
        let slot = self.slot(d0, d1);
        let _ = slot.set(c);
        slot.get().expect("slot filled above")
    }

    /// Drops a stored class. The cell-vertex class is refused.
    pub fn clear(&mut self, d0: usize, d1: usize) -> Result<()> {
        check_dim(d0, self.dim())?;
        check_dim(d1, self.dim())?;
        if d0 == self.dim() && d1 == 0 {
            return Err(Error::ProtectedClass { from: d0, to: d1 });
        }
        let n = self.dim() + 1;
        if self.table[d0 * n + d1].take().is_some() {
            self.revision += 1;
        }
        Ok(())
    }

    /// Drops every class except the cell-vertex one.
    pub fn clear_derived(&mut self) {
        let tdim = self.dim();
        for d0 in 0..=tdim {
            for d1 in 0..=tdim {
                if !(d0 == tdim && d1 == 0) {
                    let _ = self.clear(d0, d1);
                }
            }
        }
        self.revision += 1;
    }

    /// Replaces the cell-vertex class and discards everything derived from it.
    pub(crate) fn replace_cells(&mut self, cells: Connectivity) {
        self.clear_derived();
        let k = self.dim() * (self.dim() + 1);
        let slot = &mut self.table[k];
        *slot = OnceLock::new();
        let _ = slot.set(cells);
    }

    /// Counter bumped whenever stored data is removed or rewritten.
    pub fn revision(&self) -> u64 {
        self.revision
    }

    /// Stored incidence classes as `(d, d')` pairs.
    pub fn stored_classes(&self) -> Vec<(usize, usize)> {
        let n = self.dim() + 1;
        (0..n * n)
            .filter(|&k| self.table[k].get().is_some())
            .map(|k| (k / n, k % n))
            .collect()
    }

    /// Payload bytes of all stored classes.
    pub fn size_bytes(&self) -> usize {
        self.table
            .iter()
            .filter_map(OnceLock::get)
            .map(Connectivity::size_bytes)
            .sum()
    }
}
