use std::collections::HashMap;

use crate::cell::VertexKey;
use crate::connectivity::Connectivity;
use crate::error::{Error, Result};
use crate::topology::MeshTopology;

/// How Build decides whether a cell's candidate entity already exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BuildStrategy {
    /// Recompute the candidates of every lower-numbered neighbouring cell
    /// (from D -> D) and look for a match. Needs no storage beyond the output.
    #[default]
    NeighborScan,
    /// Look candidates up in a global map from vertex key to entity index.
    /// Does not need D -> D, at the price of a hash map of size N_d.
    VertexKeyMap,
}

/// Creates the entities of dimension `0 < d < D`, storing D -> d and d -> 0.
///
/// Entities are numbered in order of the first cell that contains them; the
/// entities of one cell are visited in template order.
pub fn build(topology: &MeshTopology, d: usize) -> Result<()> {
    build_with(topology, d, BuildStrategy::NeighborScan)
}

pub fn build_with(topology: &MeshTopology, d: usize, strategy: BuildStrategy) -> Result<()> {
    let tdim = topology.dim();
    if d == 0 || d >= tdim {
        return Err(Error::Precondition(format!(
            "build creates entities of dimension 0 < d < {tdim}, got {d}"
        )));
    }
    let template = topology.kind().template(d)?;
    let (cell_entities, entity_vertices) = match strategy {
        BuildStrategy::NeighborScan => {
            let neighbors = topology.get(tdim, tdim).ok_or_else(|| {
                Error::Precondition(format!("build({d}) needs {tdim} -> {tdim}"))
            })?;
            scan_neighbors(topology.cells(), neighbors, template, d)
        }
        BuildStrategy::VertexKeyMap => key_map(topology.cells(), template, d),
    };
    topology.store(
        tdim,
        d,
        Connectivity::from_uniform(template.len(), cell_entities),
    );
    topology.store(d, 0, Connectivity::from_uniform(d + 1, entity_vertices));
    Ok(())
}

const MAX_LOCAL: usize = 6;

#[inline]
fn local_keys(cell: &[u32], template: &[&[usize]], keys: &mut [VertexKey; MAX_LOCAL]) {
    for (key, positions) in keys.iter_mut().zip(template) {
        *key = VertexKey::from_positions(cell, positions);
    }
}

/// For each local entity of cell `i`, the first earlier neighbouring cell
/// holding it and its local position there.
#[inline]
fn match_earlier(
    cells: &Connectivity,
    neighbors: &Connectivity,
    template: &[&[usize]],
    i: usize,
    own: &[VertexKey; MAX_LOCAL],
    found: &mut [Option<(u32, u8)>; MAX_LOCAL],
) {
    let m = template.len();
    *found = [None; MAX_LOCAL];
    let mut missing = m;
    let mut theirs = [VertexKey::new(&[]); MAX_LOCAL];
    for &j in neighbors.row(i) {
        if j as usize >= i {
            continue;
        }
        local_keys(cells.row(j as usize), template, &mut theirs);
        for a in 0..m {
            if found[a].is_some() {
                continue;
            }
            if let Some(b) = theirs[..m].iter().position(|k| *k == own[a]) {
                found[a] = Some((j, b as u8));
                missing -= 1;
            }
        }
        if missing == 0 {
            break;
        }
    }
}

fn scan_neighbors(
    cells: &Connectivity,
    neighbors: &Connectivity,
    template: &[&[usize]],
    d: usize,
) -> (Vec<u32>, Vec<u32>) {
    let m = template.len();
    let n_cells = cells.num_rows();
    let mut own = [VertexKey::new(&[]); MAX_LOCAL];
    let mut found = [None; MAX_LOCAL];

    // counting pass
    let mut count = 0usize;
    for i in 0..n_cells {
        local_keys(cells.row(i), template, &mut own);
        match_earlier(cells, neighbors, template, i, &own, &mut found);
        count += found[..m].iter().filter(|f| f.is_none()).count();
    }

    // filling pass
    let mut cell_entities = vec![0u32; n_cells * m];
    let mut entity_vertices = vec![0u32; count * (d + 1)];
    let mut k = 0u32;
    for i in 0..n_cells {
        local_keys(cells.row(i), template, &mut own);
        match_earlier(cells, neighbors, template, i, &own, &mut found);
        for a in 0..m {
            cell_entities[i * m + a] = match found[a] {
                Some((j, b)) => cell_entities[j as usize * m + b as usize],
                None => {
                    let start = k as usize * (d + 1);
                    entity_vertices[start..start + d + 1].copy_from_slice(own[a].as_slice());
                    k += 1;
                    k - 1
                }
            };
        }
    }
    debug_assert_eq!(k as usize, count);
    (cell_entities, entity_vertices)
}

fn key_map(cells: &Connectivity, template: &[&[usize]], d: usize) -> (Vec<u32>, Vec<u32>) {
    let m = template.len();
    let n_cells = cells.num_rows();
    let mut own = [VertexKey::new(&[]); MAX_LOCAL];

    // counting pass assigns indices in first-cell order
    let mut index: HashMap<VertexKey, u32> = HashMap::new();
    for i in 0..n_cells {
        local_keys(cells.row(i), template, &mut own);
        for key in &own[..m] {
            let next = index.len() as u32;
            index.entry(*key).or_insert(next);
        }
    }

    // filling pass
    let mut cell_entities = vec![0u32; n_cells * m];
    let mut entity_vertices = vec![0u32; index.len() * (d + 1)];
    for i in 0..n_cells {
        local_keys(cells.row(i), template, &mut own);
        for a in 0..m {
            let e = index[&own[a]];
            cell_entities[i * m + a] = e;
            let start = e as usize * (d + 1);
            entity_vertices[start..start + d + 1].copy_from_slice(own[a].as_slice());
        }
    }
    (cell_entities, entity_vertices)
}
