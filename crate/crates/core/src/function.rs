use std::fmt::Debug;

use crate::error::{check_dim, Error, Result};
use crate::mesh::Mesh;

mod sealed {
    pub trait Sealed {}
    impl Sealed for bool {}
    impl Sealed for u32 {}
    impl Sealed for f64 {}
}

/// Value types a [`MeshFunction`] may hold: markers, indices, and material data.
pub trait MeshValue: sealed::Sealed + Copy + Debug + PartialEq + Default + Send + Sync {}

impl MeshValue for bool {}
impl MeshValue for u32 {}
impl MeshValue for f64 {}

/// One value per entity of a fixed dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct MeshFunction<T: MeshValue> {
    dim: usize,
    values: Vec<T>,
}

impl<T: MeshValue> MeshFunction<T> {
    /// A function on the dimension-`d` entities of `mesh`, all set to `fill`.
    /// The entities must already exist.
    pub fn new(mesh: &Mesh, d: usize, fill: T) -> Result<Self> {
        check_dim(d, mesh.dim())?;
        let n = mesh
            .num_entities(d)
            .ok_or(Error::NotInitialized { from: d, to: 0 })?;
        Ok(MeshFunction {
            dim: d,
            values: vec![fill; n],
        })
    }

    pub fn from_values(dim: usize, values: Vec<T>) -> Self {
        MeshFunction { dim, values }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, i: usize) -> Result<T> {
        self.values.get(i).copied().ok_or(Error::IndexOutOfRange {
            index: i,
            len: self.values.len(),
        })
    }

    pub fn set(&mut self, i: usize, value: T) -> Result<()> {
        let len = self.values.len();
        let slot = self
            .values
            .get_mut(i)
            .ok_or(Error::IndexOutOfRange { index: i, len })?;
        *slot = value;
        Ok(())
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn fill(&mut self, value: T) {
        self.values.iter_mut().for_each(|v| *v = value);
    }
}

impl<T: MeshValue> std::ops::Index<usize> for MeshFunction<T> {
    type Output = T;

    fn index(&self, i: usize) -> &T {
        &self.values[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cell::CellKind;

    fn mesh() -> Mesh {
        Mesh::new(
            CellKind::Triangle,
            2,
            vec![0.0, 0.0, 1.0, 0.0, 1.0, 1.0, 0.0, 1.0],
            vec![0, 1, 3, 1, 2, 3],
        )
        .unwrap()
    }

    #[test]
    fn fill_get_set() {
        let mesh = mesh();
        let mut f = MeshFunction::new(&mesh, 2, 0u32).unwrap();
        assert_eq!(f.values(), &[0, 0]);
        f.set(1, 7).unwrap();
        assert_eq!(f.get(1).unwrap(), 7);
        assert_eq!(f[1], 7);
        assert!(f.get(2).is_err());
        assert!(f.set(2, 1).is_err());
        assert_eq!(f.len(), 2);
    }

    #[test]
    fn needs_entities() {
        let mesh = mesh();
        assert!(matches!(
            MeshFunction::new(&mesh, 1, false),
            Err(Error::NotInitialized { .. })
        ));
        mesh.init_entities(1).unwrap();
        let f = MeshFunction::new(&mesh, 1, 0.5f64).unwrap();
        assert_eq!(f.len(), 5);
        assert!(MeshFunction::new(&mesh, 3, 0u32).is_err());
    }
}
