//! Explicit mesh construction, one vertex and one cell at a time.

use crate::cell::CellKind;
use crate::error::{EditorError, Error, Result};
use crate::mesh::Mesh;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Stage {
    Opened,
    Vertices,
    Cells,
    Closed,
}

/// Stages vertices and cells, then hands out a validated [`Mesh`].
///
/// ```
/// use meshtopo::MeshEditor;
///
/// let mut editor = MeshEditor::open("triangle".parse().unwrap(), 2, 2).unwrap();
/// editor.init_vertices(4).unwrap();
/// editor.add_vertex(0, &[0.0, 0.0]).unwrap();
/// editor.add_vertex(1, &[1.0, 0.0]).unwrap();
/// editor.add_vertex(2, &[1.0, 1.0]).unwrap();
/// editor.add_vertex(3, &[0.0, 1.0]).unwrap();
/// editor.init_cells(2).unwrap();
/// editor.add_cell(0, &[0, 1, 2]).unwrap();
/// editor.add_cell(1, &[0, 2, 3]).unwrap();
/// let mesh = editor.close().unwrap();
/// assert_eq!(mesh.num_cells(), 2);
/// ```
#[derive(Debug)]
pub struct MeshEditor {
    kind: CellKind,
    gdim: usize,
    stage: Stage,
    coordinates: Vec<f64>,
    vertex_set: Vec<bool>,
    vertices_added: usize,
    cells: Vec<u32>,
    cell_set: Vec<bool>,
    cells_added: usize,
}

impl MeshEditor {
    pub fn open(kind: CellKind, tdim: usize, gdim: usize) -> Result<Self> {
        if tdim != kind.dim() {
            return Err(Error::InvalidArgument(format!(
                "{kind} cells have topological dimension {}, not {tdim}",
                kind.dim()
            )));
        }
        if gdim == 0 || gdim > 3 || gdim < tdim {
            return Err(Error::InvalidArgument(format!(
                "geometric dimension {gdim} unsupported for {kind} cells"
            )));
        }
        Ok(MeshEditor {
            kind,
            gdim,
            stage: Stage::Opened,
            coordinates: Vec::new(),
            vertex_set: Vec::new(),
            vertices_added: 0,
            cells: Vec::new(),
            cell_set: Vec::new(),
            cells_added: 0,
        })
    }

    pub fn init_vertices(&mut self, n: usize) -> Result<()> {
        if self.stage != Stage::Opened {
            return Err(EditorError::Protocol("init_vertices must directly follow open").into());
        }
        self.coordinates = vec![0.0; n * self.gdim];
        self.vertex_set = vec![false; n];
        self.stage = Stage::Vertices;
        Ok(())
    }

    pub fn add_vertex(&mut self, i: usize, point: &[f64]) -> Result<()> {
        if !matches!(self.stage, Stage::Vertices | Stage::Cells) {
            return Err(EditorError::Protocol("add_vertex before init_vertices").into());
        }
        let n = self.vertex_set.len();
        if i >= n {
            return Err(EditorError::IndexOutOfRange { what: "vertex", index: i, len: n }.into());
        }
        if point.len() != self.gdim {
            return Err(EditorError::WrongArity {
                expected: self.gdim,
                got: point.len(),
            }
            .into());
        }
        if point.iter().any(|x| !x.is_finite()) {
            return Err(EditorError::NonFiniteCoordinate(i).into());
        }
        if std::mem::replace(&mut self.vertex_set[i], true) {
            return Err(EditorError::DuplicateIndex { what: "vertex", index: i }.into());
        }
        self.coordinates[i * self.gdim..(i + 1) * self.gdim].copy_from_slice(point);
        self.vertices_added += 1;
        Ok(())
    }

    pub fn init_cells(&mut self, n: usize) -> Result<()> {
        if self.stage != Stage::Vertices {
            return Err(EditorError::Protocol("init_cells must follow init_vertices").into());
        }
        self.cells = vec![0; n * self.kind.num_vertices()];
        self.cell_set = vec![false; n];
        self.stage = Stage::Cells;
        Ok(())
    }

    pub fn add_cell(&mut self, i: usize, vertices: &[u32]) -> Result<()> {
        if self.stage != Stage::Cells {
            return Err(EditorError::Protocol("add_cell before init_cells").into());
        }
        let n = self.cell_set.len();
        if i >= n {
            return Err(EditorError::IndexOutOfRange { what: "cell", index: i, len: n }.into());
        }
        let nv = self.kind.num_vertices();
        if vertices.len() != nv {
            return Err(EditorError::WrongArity {
                expected: nv,
                got: vertices.len(),
            }
            .into());
        }
        let n_vertices = self.vertex_set.len();
        for (a, &v) in vertices.iter().enumerate() {
            if v as usize >= n_vertices {
                return Err(EditorError::DanglingVertex { cell: i, vertex: v, n_vertices }.into());
            }
            if vertices[..a].contains(&v) {
                return Err(EditorError::DegenerateCell { cell: i, vertex: v }.into());
            }
        }
        if std::mem::replace(&mut self.cell_set[i], true) {
            return Err(EditorError::DuplicateIndex { what: "cell", index: i }.into());
        }
        self.cells[i * nv..(i + 1) * nv].copy_from_slice(vertices);
        self.cells_added += 1;
        Ok(())
    }

    /// Checks that every declared vertex and cell was added and builds the mesh.
    pub fn close(&mut self) -> Result<Mesh> {
        match self.stage {
            Stage::Cells => {}
            Stage::Closed => return Err(EditorError::Protocol("editor already closed").into()),
            _ => return Err(EditorError::Protocol("close before init_cells").into()),
        }
        if self.vertices_added != self.vertex_set.len() {
            return Err(EditorError::IncompleteFill {
                what: "vertices",
                filled: self.vertices_added,
                expected: self.vertex_set.len(),
            }
            .into());
        }
        if self.cells_added != self.cell_set.len() {
            return Err(EditorError::IncompleteFill {
                what: "cells",
                filled: self.cells_added,
                expected: self.cell_set.len(),
            }
            .into());
        }
        self.stage = Stage::Closed;
        Mesh::new(
            self.kind,
            self.gdim,
            std::mem::take(&mut self.coordinates),
            std::mem::take(&mut self.cells),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square_editor() -> MeshEditor {
        let mut e = MeshEditor::open(CellKind::Triangle, 2, 2).unwrap();
        e.init_vertices(4).unwrap();
        for (i, p) in [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]].iter().enumerate() {
            e.add_vertex(i, p).unwrap();
        }
        e.init_cells(2).unwrap();
        e
    }

    fn editor_err(r: Result<impl std::fmt::Debug>) -> EditorError {
        match r {
            Err(Error::Editor(e)) => e,
            other => panic!("expected editor error, got {other:?}"),
        }
    }

    #[test]
    fn builds_the_square() {
        let mut e = square_editor();
        e.add_cell(0, &[0, 1, 2]).unwrap();
        e.add_cell(1, &[0, 2, 3]).unwrap();
        let mesh = e.close().unwrap();
        assert_eq!(mesh.num_vertices(), 4);
        assert_eq!(mesh.num_cells(), 2);
        assert_eq!(mesh.topology().cells().indices(), &[0, 1, 2, 0, 2, 3]);
        assert_eq!(mesh.point(2).unwrap(), &[1.0, 1.0]);
        assert_eq!(mesh.point(0).unwrap(), &[0.0, 0.0]);
    }

    #[test]
    fn distinct_errors() {
        let mut e = square_editor();
        assert!(matches!(
            editor_err(e.add_cell(0, &[0, 1, 7])),
            EditorError::DanglingVertex { vertex: 7, .. }
        ));
        assert!(matches!(
            editor_err(e.add_cell(0, &[0, 1])),
            EditorError::WrongArity { expected: 3, got: 2 }
        ));
        e.add_cell(0, &[0, 1, 2]).unwrap();
        assert!(matches!(
            editor_err(e.add_cell(0, &[0, 2, 3])),
            EditorError::DuplicateIndex { what: "cell", index: 0 }
        ));
        assert!(matches!(
            editor_err(e.close()),
            EditorError::IncompleteFill { what: "cells", filled: 1, expected: 2 }
        ));
        assert!(matches!(
            editor_err(e.add_cell(5, &[0, 2, 3])),
            EditorError::IndexOutOfRange { .. }
        ));
    }

    #[test]
    fn protocol_order() {
        let mut e = MeshEditor::open(CellKind::Triangle, 2, 2).unwrap();
        assert!(matches!(editor_err(e.add_vertex(0, &[0.0, 0.0])), EditorError::Protocol(_)));
        assert!(matches!(editor_err(e.init_cells(1)), EditorError::Protocol(_)));
        assert!(matches!(editor_err(e.close()), EditorError::Protocol(_)));
        e.init_vertices(3).unwrap();
        assert!(matches!(editor_err(e.add_cell(0, &[0, 1, 2])), EditorError::Protocol(_)));
        assert!(matches!(editor_err(e.init_vertices(3)), EditorError::Protocol(_)));
        e.add_vertex(0, &[0.0, 0.0]).unwrap();
        assert!(matches!(
            editor_err(e.add_vertex(0, &[1.0, 0.0])),
            EditorError::DuplicateIndex { what: "vertex", .. }
        ));
        e.init_cells(0).unwrap();
        assert!(matches!(
            editor_err(e.close()),
            EditorError::IncompleteFill { what: "vertices", .. }
        ));
    }

    #[test]
    fn rejects_mismatched_dimensions() {
        assert!(MeshEditor::open(CellKind::Triangle, 3, 3).is_err());
        assert!(MeshEditor::open(CellKind::Tetrahedron, 3, 2).is_err());
    }
}
