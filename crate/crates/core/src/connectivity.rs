//! Compressed storage for one incidence class d -> d'.

/// The incidence class d -> d' stored as two flat arrays.
///
/// The entities of dimension d' incident to entity `(d, i)` are
/// `indices[offsets[i]..offsets[i + 1]]`. Only the column pattern is stored,
/// like a sparse matrix in CRS form without values.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Connectivity {
    offsets: Vec<u32>,
    indices: Vec<u32>,
}

impl Connectivity {
    /// Assembles a class from raw arrays without checking them; see [`Connectivity::validate`].
    pub fn from_parts(offsets: Vec<u32>, indices: Vec<u32>) -> Self {
        Connectivity { offsets, indices }
    }

    /// Class where every row has the same length, e.g. cell -> vertex for simplices.
    pub fn from_uniform(row_len: usize, indices: Vec<u32>) -> Self {
        debug_assert!(row_len > 0 && indices.len().is_multiple_of(row_len));
        let n = indices.len() / row_len;
        let offsets = (0..=n).map(|i| (i * row_len) as u32).collect();
        Connectivity { offsets, indices }
    }

    pub fn from_rows<R: AsRef<[u32]>>(rows: &[R]) -> Self {
        let mut offsets = Vec::with_capacity(rows.len() + 1);
        let total = rows.iter().map(|r| r.as_ref().len()).sum();
        let mut indices = Vec::with_capacity(total);
        offsets.push(0);
        for r in rows {
            indices.extend_from_slice(r.as_ref());
            offsets.push(indices.len() as u32);
        }
        Connectivity { offsets, indices }
    }

    /// Number of rows, i.e. N_d.
    #[inline]
    pub fn num_rows(&self) -> usize {
        self.offsets.len().saturating_sub(1)
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u32] {
        let start = self.offsets[i] as usize;
        let end = self.offsets[i + 1] as usize;
        &self.indices[start..end]
    }

    pub fn get_row(&self, i: usize) -> Option<&[u32]> {
        (i < self.num_rows()).then(|| self.row(i))
    }

    #[inline]
    pub fn row_len(&self, i: usize) -> usize {
        (self.offsets[i + 1] - self.offsets[i]) as usize
    }

    pub fn rows(&self) -> impl ExactSizeIterator<Item = &[u32]> + '_ {
        self.offsets
            .windows(2)
            .map(move |w| &self.indices[w[0] as usize..w[1] as usize])
    }

    pub fn offsets(&self) -> &[u32] {
        &self.offsets
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    /// Payload size: four bytes per stored integer.
    pub fn size_bytes(&self) -> usize {
        4 * (self.offsets.len() + self.indices.len())
    }

    /// Checks well-formedness against the expected row count and column bound.
    pub fn validate(&self, num_rows: usize, index_bound: usize) -> Result<(), String> {
        if self.offsets.len() != num_rows + 1 {
            return Err(format!(
                "offsets has length {}, expected {}",
                self.offsets.len(),
                num_rows + 1
            ));
        }
        if self.offsets[0] != 0 {
            return Err("offsets[0] != 0".into());
        }
        if let Some(i) = self.offsets.windows(2).position(|w| w[0] > w[1]) {
            return Err(format!("offsets decrease at row {i}"));
        }
        if *self.offsets.last().unwrap() as usize != self.indices.len() {
            return Err(format!(
                "last offset {} != indices length {}",
                self.offsets.last().unwrap(),
                self.indices.len()
            ));
        }
        if let Some(&bad) = self.indices.iter().find(|&&j| j as usize >= index_bound) {
            return Err(format!("index {bad} out of bound {index_bound}"));
        }
        for (i, row) in self.rows().enumerate() {
            for (a, x) in row.iter().enumerate() {
                if row[a + 1..].contains(x) {
                    return Err(format!("row {i} repeats index {x}"));
                }
            }
        }
        Ok(())
    }
}
