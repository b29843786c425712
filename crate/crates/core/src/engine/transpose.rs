use crate::connectivity::Connectivity;
use crate::error::{Error, Result};
use crate::topology::MeshTopology;

/// Computes d -> d' from d' -> d for `d < d'`. Rows list the d'-entities in
/// ascending index order.
pub fn transpose(topology: &MeshTopology, d0: usize, d1: usize) -> Result<()> {
    if d0 >= d1 {
        return Err(Error::Precondition(format!(
            "transpose computes d -> d' for d < d', got {d0} -> {d1}"
        )));
    }
    let source = topology.get(d1, d0).ok_or_else(|| {
        Error::Precondition(format!("transpose {d0} -> {d1} needs {d1} -> {d0}"))
    })?;
    let n = topology
        .size(d0)
        .ok_or(Error::NotInitialized { from: d0, to: 0 })?;

    // counting pass
    let mut offsets = vec![0u32; n + 1];
    for &i in source.indices() {
        offsets[i as usize + 1] += 1;
    }
    for i in 0..n {
        offsets[i + 1] += offsets[i];
    }

    // filling pass
    let mut next: Vec<u32> = offsets[..n].to_vec();
    let mut indices = vec![0u32; offsets[n] as usize];
    for (j, row) in source.rows().enumerate() {
        for &i in row {
            let slot = &mut next[i as usize];
            indices[*slot as usize] = j as u32;
            *slot += 1;
        }
    }

    topology.store(d0, d1, Connectivity::from_parts(offsets, indices));
    Ok(())
}
