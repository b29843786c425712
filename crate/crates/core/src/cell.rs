//! Simplex cell kinds and their local sub-entity templates.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Simplicial cell types. `Point` only appears as the boundary of interval meshes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellKind {
    Point,
    Interval,
    Triangle,
    Tetrahedron,
}

// Local vertex tuples of the sub-entities of a reference simplex. Entity k of
// dimension D-1 omits local vertex k; tetrahedron edges follow the same
// "opposite" convention pairwise: edge k is opposite edge 5-k.
const POINT_VERTICES: &[&[usize]] = &[&[0]];
const INTERVAL_VERTICES: &[&[usize]] = &[&[0], &[1]];
const INTERVAL_CELL: &[&[usize]] = &[&[0, 1]];
const TRIANGLE_VERTICES: &[&[usize]] = &[&[0], &[1], &[2]];
const TRIANGLE_EDGES: &[&[usize]] = &[&[1, 2], &[0, 2], &[0, 1]];
const TRIANGLE_CELL: &[&[usize]] = &[&[0, 1, 2]];
const TET_VERTICES: &[&[usize]] = &[&[0], &[1], &[2], &[3]];
const TET_EDGES: &[&[usize]] = &[&[2, 3], &[1, 3], &[1, 2], &[0, 3], &[0, 2], &[0, 1]];
const TET_FACES: &[&[usize]] = &[&[1, 2, 3], &[0, 2, 3], &[0, 1, 3], &[0, 1, 2]];
const TET_CELL: &[&[usize]] = &[&[0, 1, 2, 3]];

impl CellKind {
    pub fn from_dim(dim: usize) -> Result<Self> {
        match dim {
            0 => Ok(CellKind::Point),
            1 => Ok(CellKind::Interval),
            2 => Ok(CellKind::Triangle),
            3 => Ok(CellKind::Tetrahedron),
            _ => Err(Error::DimensionOutOfRange { dim, max: 3 }),
        }
    }

    /// Topological dimension D.
    pub fn dim(self) -> usize {
        match self {
            CellKind::Point => 0,
            CellKind::Interval => 1,
            CellKind::Triangle => 2,
            CellKind::Tetrahedron => 3,
        }
    }

    pub fn num_vertices(self) -> usize {
        self.dim() + 1
    }

    /// Number of sub-entities of dimension `d` in one cell: C(D+1, d+1).
    pub fn num_entities(self, d: usize) -> usize {
        let n = self.dim() + 1;
        let k = d + 1;
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    /// Kind of the facets (e.g. the triangles bounding a tetrahedron).
    pub fn facet_kind(self) -> Option<CellKind> {
        match self {
            CellKind::Point => None,
            CellKind::Interval => Some(CellKind::Point),
            CellKind::Triangle => Some(CellKind::Interval),
            CellKind::Tetrahedron => Some(CellKind::Triangle),
        }
    }

    /// Local vertex tuples for the sub-entities of dimension `d`, in template order.
    pub fn template(self, d: usize) -> Result<&'static [&'static [usize]]> {
        let t: &'static [&'static [usize]] = match (self, d) {
            (CellKind::Point, 0) => POINT_VERTICES,
            (CellKind::Interval, 0) => INTERVAL_VERTICES,
            (CellKind::Interval, 1) => INTERVAL_CELL,
            (CellKind::Triangle, 0) => TRIANGLE_VERTICES,
            (CellKind::Triangle, 1) => TRIANGLE_EDGES,
            (CellKind::Triangle, 2) => TRIANGLE_CELL,
            (CellKind::Tetrahedron, 0) => TET_VERTICES,
            (CellKind::Tetrahedron, 1) => TET_EDGES,
            (CellKind::Tetrahedron, 2) => TET_FACES,
            (CellKind::Tetrahedron, 3) => TET_CELL,
            _ => {
                return Err(Error::DimensionOutOfRange {
                    dim: d,
                    max: self.dim(),
                })
            }
        };
        Ok(t)
    }

    pub fn name(self) -> &'static str {
        match self {
            CellKind::Point => "point",
            CellKind::Interval => "interval",
            CellKind::Triangle => "triangle",
            CellKind::Tetrahedron => "tetrahedron",
        }
    }
}

impl fmt::Display for CellKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CellKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "point" | "vertex" => Ok(CellKind::Point),
            "interval" => Ok(CellKind::Interval),
            "triangle" => Ok(CellKind::Triangle),
            "tetrahedron" => Ok(CellKind::Tetrahedron),
            other => Err(Error::InvalidArgument(format!("unknown cell kind `{other}`"))),
        }
    }
}

/// Sorted tuple of global vertex indices identifying an entity independently of
/// how any particular cell orders it. Holds up to four vertices inline.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexKey {
    len: u8,
    vertices: [u32; 4],
}

impl VertexKey {
    /// Builds the key from arbitrary-order vertices.
    ///
    /// Panics if more than four vertices are given.
    pub fn new(vertices: &[u32]) -> Self {
        assert!(vertices.len() <= 4, "vertex key holds at most 4 vertices");
        let mut key = VertexKey {
            len: vertices.len() as u8,
            vertices: [u32::MAX; 4],
        };
        key.vertices[..vertices.len()].copy_from_slice(vertices);
        key.vertices[..vertices.len()].sort_unstable();
        key
    }

    /// Key of the cell-local entity selected by `positions` out of `cell_vertices`.
    #[inline]
    pub fn from_positions(cell_vertices: &[u32], positions: &[usize]) -> Self {
        let mut key = VertexKey {
            len: positions.len() as u8,
            vertices: [u32::MAX; 4],
        };
        for (slot, &p) in key.vertices.iter_mut().zip(positions) {
            *slot = cell_vertices[p];
        }
        // insertion sort, at most four entries
        let v = &mut key.vertices[..positions.len()];
        for i in 1..v.len() {
            let mut j = i;
            while j > 0 && v[j - 1] > v[j] {
                v.swap(j - 1, j);
                j -= 1;
            }
        }
        key
    }

    #[inline]
    pub fn as_slice(&self) -> &[u32] {
        &self.vertices[..self.len as usize]
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }
}

impl fmt::Debug for VertexKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("VertexKey").field(&self.as_slice()).finish()
    }
}

/// Vertex keys of the dimension-`d` sub-entities of one cell, in template order.
pub fn local_entity_vertex_sets(
    kind: CellKind,
    d: usize,
    cell_vertices: &[u32],
) -> Result<Vec<VertexKey>> {
    let tdim = kind.dim();
    if d == 0 || d >= tdim {
        return Err(Error::DimensionOutOfRange {
            dim: d,
            max: tdim.saturating_sub(1),
        });
    }
    if cell_vertices.len() != kind.num_vertices() {
        return Err(Error::InvalidArgument(format!(
            "a {kind} has {} vertices, got {}",
            kind.num_vertices(),
            cell_vertices.len()
        )));
    }
    Ok(kind
        .template(d)?
        .iter()
        .map(|positions| VertexKey::from_positions(cell_vertices, positions))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == k)
            .map(|m| (0..n).filter(|i| m & (1 << i) != 0).collect())
            .collect()
    }

    #[test]
    fn templates_cover_every_subset_once() {
        for kind in [CellKind::Interval, CellKind::Triangle, CellKind::Tetrahedron] {
            for d in 0..=kind.dim() {
                let t = kind.template(d).unwrap();
                assert_eq!(t.len(), kind.num_entities(d));
                let mut got: Vec<Vec<usize>> = t.iter().map(|s| s.to_vec()).collect();
                for s in &got {
                    assert_eq!(s.len(), d + 1);
                    assert!(s.windows(2).all(|w| w[0] < w[1]));
                }
                got.sort();
                let mut want = subsets(kind.num_vertices(), d + 1);
                want.sort();
                assert_eq!(got, want, "{kind} d={d}");
            }
        }
    }

    #[test]
    fn triangle_edges_of_cell_013() {
        let keys = local_entity_vertex_sets(CellKind::Triangle, 1, &[0, 1, 3]).unwrap();
        let keys: Vec<&[u32]> = keys.iter().map(|k| k.as_slice()).collect();
        assert_eq!(keys, vec![&[1, 3][..], &[0, 3], &[0, 1]]);
        assert_eq!(keys.len(), CellKind::Triangle.num_entities(1));
    }

    #[test]
    fn tetrahedron_faces() {
        let keys = local_entity_vertex_sets(CellKind::Tetrahedron, 2, &[0, 1, 2, 3]).unwrap();
        let keys: Vec<&[u32]> = keys.iter().map(|k| k.as_slice()).collect();
        assert_eq!(keys, vec![&[1, 2, 3][..], &[0, 2, 3], &[0, 1, 3], &[0, 1, 2]]);
    }

    #[test]
    fn keys_are_sorted_for_unsorted_cells() {
        let keys = local_entity_vertex_sets(CellKind::Triangle, 1, &[7, 2, 5]).unwrap();
        let keys: Vec<&[u32]> = keys.iter().map(|k| k.as_slice()).collect();
        assert_eq!(keys, vec![&[2, 5][..], &[5, 7], &[2, 7]]);
    }

    #[test]
    fn rejects_cell_and_vertex_dimensions() {
        assert!(local_entity_vertex_sets(CellKind::Triangle, 0, &[0, 1, 2]).is_err());
        assert!(local_entity_vertex_sets(CellKind::Triangle, 2, &[0, 1, 2]).is_err());
        assert!(local_entity_vertex_sets(CellKind::Interval, 1, &[0, 1]).is_err());
        assert!(local_entity_vertex_sets(CellKind::Triangle, 1, &[0, 1]).is_err());
    }

    #[test]
    fn kind_names_round_trip() {
        for kind in [
            CellKind::Point,
            CellKind::Interval,
            CellKind::Triangle,
            CellKind::Tetrahedron,
        ] {
            assert_eq!(kind.name().parse::<CellKind>().unwrap(), kind);
            assert_eq!(CellKind::from_dim(kind.dim()).unwrap(), kind);
        }
        assert!("quadrilateral".parse::<CellKind>().is_err());
    }
}
