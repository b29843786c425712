use crate::connectivity::Connectivity;
use crate::error::{Error, Result};
use crate::topology::MeshTopology;

/// Vertex sets of the entities of one dimension; vertices are their own set.
enum VertexSets<'a> {
    Identity,
    Rows(&'a Connectivity),
}

impl VertexSets<'_> {
    #[inline]
    fn contained_in(&self, j: u32, outer: &[u32]) -> bool {
        match self {
            VertexSets::Identity => outer.contains(&j),
            VertexSets::Rows(c) => c.row(j as usize).iter().all(|v| outer.contains(v)),
        }
    }
}

/// Computes d -> d' from d -> d'' and d'' -> d' for `d >= d'`.
///
/// For `d == d'`, entity j joins row i when `j != i` and both reach a common
/// d''-entity. For `d > d'`, j joins row i when every vertex of j is a vertex of i.
/// Rows keep first-encounter order.
pub fn intersection(topology: &MeshTopology, d0: usize, d1: usize, via: usize) -> Result<()> {
    if d0 < d1 {
        return Err(Error::Precondition(format!(
            "intersection computes d -> d' for d >= d', got {d0} -> {d1}"
        )));
    }
    let missing = |a: usize, b: usize| {
        Error::Precondition(format!(
            "intersection {d0} -> {d1} via {via} needs {a} -> {b}"
        ))
    };
    let first = topology.get(d0, via).ok_or_else(|| missing(d0, via))?;
    let second = topology.get(via, d1).ok_or_else(|| missing(via, d1))?;
    let n = topology
        .size(d0)
        .ok_or(Error::NotInitialized { from: d0, to: 0 })?;
    let m = topology
        .size(d1)
        .ok_or(Error::NotInitialized { from: d1, to: 0 })?;

    let containment = if d0 > d1 {
        let outer = topology.get(d0, 0).ok_or_else(|| missing(d0, 0))?;
        let inner = if d1 == 0 {
            VertexSets::Identity
        } else {
            VertexSets::Rows(topology.get(d1, 0).ok_or_else(|| missing(d1, 0))?)
        };
        Some((outer, inner))
    } else {
        None
    };

    // marker[j] == i once j has been looked at for row i
    let mut marker = vec![u32::MAX; m];
    let visit_row = |marker: &mut [u32], i: usize, sink: &mut dyn FnMut(u32)| {
        let stamp = i as u32;
        for &k in first.row(i) {
            for &j in second.row(k as usize) {
                let seen = &mut marker[j as usize];
                if *seen == stamp {
                    continue;
                }
                *seen = stamp;
                let accept = match &containment {
                    None => j as usize != i,
                    Some((outer, inner)) => inner.contained_in(j, outer.row(i)),
                };
                if accept {
                    sink(j);
                }
            }
        }
    };

    // counting pass
    let mut offsets = vec![0u32; n + 1];
    for i in 0..n {
        let mut count = 0u32;
        visit_row(&mut marker, i, &mut |_| count += 1);
        offsets[i + 1] = offsets[i] + count;
    }

    // filling pass
    let mut indices = vec![0u32; offsets[n] as usize];
    let mut pos = 0usize;
    marker.fill(u32::MAX);
    for i in 0..n {
        visit_row(&mut marker, i, &mut |j| {
            indices[pos] = j;
            pos += 1;
        });
    }
    debug_assert_eq!(pos, indices.len());

    topology.store(d0, d1, Connectivity::from_parts(offsets, indices));
    Ok(())
}
