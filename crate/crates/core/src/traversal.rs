//! Iteration over mesh entities.
//!
//! A cursor walks either all entities of one dimension or the entities
//! incident to a fixed entity. Whatever connectivity the walk needs is computed
//! when the cursor is created, so the loop body never mutates the mesh. Cursors
//! nest freely:
//!
//! ```
//! use meshtopo::generators::unit_square;
//! use meshtopo::traversal::cells;
//!
//! let mesh = unit_square(2, 2).unwrap();
//! let mut pairs = 0;
//! for cell in cells(&mesh) {
//!     for edge in cell.edges().unwrap() {
//!         pairs += edge.vertices().count();
//!     }
//! }
//! assert_eq!(pairs, 8 * 3 * 2);
//! ```

use crate::error::{check_dim, Error, Result};
use crate::mesh::{Mesh, MeshEntity};

#[derive(Debug, Clone, Copy)]
enum Source<'a> {
    All(usize),
    Row(&'a [u32]),
}

/// Iterator over entities of one dimension; see the module docs.
#[derive(Debug, Clone)]
pub struct EntityCursor<'a> {
    mesh: &'a Mesh,
    dim: usize,
    anchor: Option<(usize, u32)>,
    source: Source<'a>,
    pos: usize,
    revision: u64,
}

impl<'a> EntityCursor<'a> {
    /// All entities `(d, 0), ..., (d, N_d - 1)`, building them first if needed.
    pub fn global(mesh: &'a Mesh, d: usize) -> Result<Self> {
        let n = mesh.init_entities(d)?;
        Ok(EntityCursor {
            mesh,
            dim: d,
            anchor: None,
            source: Source::All(n),
            pos: 0,
            revision: mesh.topology().revision(),
        })
    }

    /// The entities of dimension `d` incident to `entity`, in stored order.
    pub fn incident(entity: MeshEntity<'a>, d: usize) -> Result<Self> {
        let mesh = entity.mesh();
        check_dim(d, mesh.dim())?;
        let row = mesh.init(entity.dim(), d)?.row(entity.index());
        Ok(EntityCursor {
            mesh,
            dim: d,
            anchor: Some((entity.dim(), entity.index() as u32)),
            source: Source::Row(row),
            pos: 0,
            revision: mesh.topology().revision(),
        })
    }

    /// Dimension of the entities produced.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Total number of entities in the walk.
    pub fn size(&self) -> usize {
        match self.source {
            Source::All(n) => n,
            Source::Row(r) => r.len(),
        }
    }

    pub fn position(&self) -> usize {
        self.pos
    }

    pub fn is_end(&self) -> bool {
        self.pos >= self.size()
    }

    /// The entity under the cursor, `None` at the end.
    #[inline]
    pub fn current(&self) -> Option<MeshEntity<'a>> {
        let index = match self.source {
            Source::All(n) => (self.pos < n).then_some(self.pos as u32)?,
            Source::Row(r) => *r.get(self.pos)?,
        };
        Some(MeshEntity::new(self.mesh, self.dim, index))
    }

    #[inline]
    pub fn advance(&mut self) {
        if self.pos < self.size() {
            self.pos += 1;
        }
    }

    /// Detaches the cursor from its borrow so it can be resumed later.
    pub fn state(&self) -> CursorState {
        CursorState {
            dim: self.dim,
            anchor: self.anchor,
            pos: self.pos,
            revision: self.revision,
        }
    }
}

impl<'a> Iterator for EntityCursor<'a> {
    type Item = MeshEntity<'a>;

    #[inline]
    fn next(&mut self) -> Option<MeshEntity<'a>> {
        let e = self.current()?;
        self.pos += 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.size() - self.pos.min(self.size());
        (left, Some(left))
    }
}

impl ExactSizeIterator for EntityCursor<'_> {}

/// A cursor position that does not borrow the mesh.
///
/// Resuming fails with [`Error::StaleCursor`] if the mesh topology was changed
/// (classes cleared, cells reordered) after the state was taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CursorState {
    dim: usize,
    anchor: Option<(usize, u32)>,
    pos: usize,
    revision: u64,
}

impl CursorState {
    pub fn resume<'a>(&self, mesh: &'a Mesh) -> Result<EntityCursor<'a>> {
        if mesh.topology().revision() != self.revision {
            return Err(Error::StaleCursor);
        }
        let mut cursor = match self.anchor {
            None => EntityCursor::global(mesh, self.dim)?,
            Some((d, i)) => EntityCursor::incident(mesh.entity(d, i as usize)?, self.dim)?,
        };
        cursor.pos = self.pos.min(cursor.size());
        Ok(cursor)
    }
}

/// Named entity kinds, resolved against the mesh dimension D.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Named {
    Vertex,
    Edge,
    Face,
    Facet,
    Cell,
}

impl Named {
    /// Topological dimension of this kind in a mesh of dimension `tdim`.
    pub fn resolve(self, tdim: usize) -> Result<usize> {
        let d = match self {
            Named::Vertex => Some(0),
            Named::Edge => Some(1),
            Named::Face => Some(2),
            Named::Facet => tdim.checked_sub(1),
            Named::Cell => Some(tdim),
        };
        match d {
            Some(d) if d <= tdim => Ok(d),
            _ => Err(Error::DimensionOutOfRange {
                dim: d.unwrap_or(usize::MAX),
                max: tdim,
            }),
        }
    }
}

pub fn entities(mesh: &Mesh, d: usize) -> Result<EntityCursor<'_>> {
    EntityCursor::global(mesh, d)
}

pub fn named(mesh: &Mesh, kind: Named) -> Result<EntityCursor<'_>> {
    EntityCursor::global(mesh, kind.resolve(mesh.dim())?)
}

pub fn vertices(mesh: &Mesh) -> EntityCursor<'_> {
    EntityCursor::global(mesh, 0).expect("vertices always exist")
}

pub fn edges(mesh: &Mesh) -> Result<EntityCursor<'_>> {
    named(mesh, Named::Edge)
}

pub fn faces(mesh: &Mesh) -> Result<EntityCursor<'_>> {
    named(mesh, Named::Face)
}

pub fn facets(mesh: &Mesh) -> Result<EntityCursor<'_>> {
    named(mesh, Named::Facet)
}

pub fn cells(mesh: &Mesh) -> EntityCursor<'_> {
    EntityCursor::global(mesh, mesh.dim()).expect("cells always exist")
}

impl<'a> MeshEntity<'a> {
    /// Incident entities of dimension `d`, computing the class on first use.
    pub fn entities(&self, d: usize) -> Result<EntityCursor<'a>> {
        EntityCursor::incident(*self, d)
    }

    pub fn named(&self, kind: Named) -> Result<EntityCursor<'a>> {
        EntityCursor::incident(*self, kind.resolve(self.mesh().dim())?)
    }

    pub fn vertices(&self) -> EntityCursor<'a> {
        EntityCursor::incident(*self, 0).expect("vertex incidence is always computable")
    }

    pub fn edges(&self) -> Result<EntityCursor<'a>> {
        self.named(Named::Edge)
    }

    pub fn faces(&self) -> Result<EntityCursor<'a>> {
        self.named(Named::Face)
    }

    pub fn facets(&self) -> Result<EntityCursor<'a>> {
        self.named(Named::Facet)
    }

    pub fn cells(&self) -> EntityCursor<'a> {
        EntityCursor::incident(*self, self.mesh().dim()).expect("cell incidence is always computable")
    }
}
