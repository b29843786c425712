/// Vertex coordinates in a flat array, `gdim` values per vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct MeshGeometry {
    gdim: usize,
    coordinates: Vec<f64>,
}

impl MeshGeometry {
    pub(crate) fn new(gdim: usize, coordinates: Vec<f64>) -> Self {
        debug_assert!(gdim > 0 && coordinates.len().is_multiple_of(gdim));
        MeshGeometry { gdim, coordinates }
    }

    /// Geometric dimension n.
    pub fn dim(&self) -> usize {
        self.gdim
    }

    pub fn num_points(&self) -> usize {
        self.coordinates.len() / self.gdim
    }

    #[inline]
    pub fn point(&self, v: usize) -> &[f64] {
        &self.coordinates[self.gdim * v..self.gdim * (v + 1)]
    }

    pub fn coordinates(&self) -> &[f64] {
        &self.coordinates
    }

    pub(crate) fn coordinates_mut(&mut self) -> &mut [f64] {
        &mut self.coordinates
    }

    pub fn size_bytes(&self) -> usize {
        8 * self.coordinates.len()
    }
}
