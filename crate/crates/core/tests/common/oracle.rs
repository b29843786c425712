//! Incidence straight from the definitions, by exhaustive search.
//!
//! Entities are identified by their sorted vertex sets, so results can be
//! compared with the engine regardless of how either side numbers entities.

use std::collections::{BTreeMap, BTreeSet};

use meshtopo::Mesh;

pub type Key = Vec<u32>;

/// Everything the oracle knows about a mesh.
pub struct Oracle {
    pub tdim: usize,
    /// Per dimension, the vertex sets of all entities.
    pub entities: Vec<Vec<Key>>,
}

fn subsets(set: &[u32], k: usize, start: usize, cur: &mut Vec<u32>, out: &mut Vec<Key>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for i in start..set.len() {
        cur.push(set[i]);
        subsets(set, k, i + 1, cur, out);
        cur.pop();
    }
}

impl Oracle {
    pub fn new(mesh: &Mesh) -> Self {
        let tdim = mesh.dim();
        let cells: Vec<Key> = mesh
            .topology()
            .cells()
            .rows()
            .map(|r| {
                let mut r = r.to_vec();
                r.sort_unstable();
                r
            })
            .collect();
        let mut entities = Vec::new();
        for d in 0..=tdim {
            let set: BTreeSet<Key> = if d == 0 {
                (0..mesh.num_vertices() as u32).map(|v| vec![v]).collect()
            } else {
                let mut all = Vec::new();
                for c in &cells {
                    subsets(c, d + 1, 0, &mut Vec::new(), &mut all);
                }
                all.into_iter().collect()
            };
            entities.push(set.into_iter().collect());
        }
        Oracle { tdim, entities }
    }

    pub fn count(&self, d: usize) -> usize {
        self.entities[d].len()
    }

    fn share_cell(&self, a: &Key, b: &Key) -> bool {
        self.entities[self.tdim]
            .iter()
            .any(|c| a.iter().chain(b).all(|v| c.contains(v)))
    }

    /// d -> d' as a map from entity vertex set to the set of incident vertex sets.
    pub fn class(&self, d0: usize, d1: usize) -> BTreeMap<Key, BTreeSet<Key>> {
        let contains = |outer: &Key, inner: &Key| inner.iter().all(|v| outer.contains(v));
        let mut out = BTreeMap::new();
        for a in &self.entities[d0] {
            let row: BTreeSet<Key> = self.entities[d1]
                .iter()
                .filter(|b| {
                    if d0 > d1 {
                        contains(a, b)
                    } else if d0 < d1 {
                        contains(b, a)
                    } else if d0 == 0 {
                        a != *b && self.share_cell(a, b)
                    } else {
                        a != *b && a.iter().any(|v| b.contains(v))
                    }
                })
                .cloned()
                .collect();
            out.insert(a.clone(), row);
        }
        out
    }
}

/// The engine's d -> d' in the oracle's terms. The class and both entity
/// dimensions must already be computed.
pub fn engine_class(mesh: &Mesh, d0: usize, d1: usize) -> BTreeMap<Key, BTreeSet<Key>> {
    let key = |d: usize, i: usize| mesh.entity_vertices(d, i).unwrap().as_slice().to_vec();
    let conn = mesh.connectivity(d0, d1).unwrap().expect("class computed");
    let mut out = BTreeMap::new();
    for i in 0..conn.num_rows() {
        let row: BTreeSet<Key> = conn.row(i).iter().map(|&j| key(d1, j as usize)).collect();
        assert_eq!(row.len(), conn.row_len(i), "duplicate in row {i} of {d0} -> {d1}");
        let previous = out.insert(key(d0, i), row);
        assert!(previous.is_none(), "entity ({d0}, {i}) has the vertex set of another");
    }
    out
}

/// Compares every class of `mesh`, computing each one on a fresh copy first
/// so that every request order the driver can see gets exercised.
pub fn check_all_classes(mesh: &Mesh) {
    let oracle = Oracle::new(mesh);
    let tdim = mesh.dim();
    for d0 in 0..=tdim {
        for d1 in 0..=tdim {
            let mut fresh = mesh.clone();
            fresh.topology_mut().clear_derived();
            fresh.init(d0, d1).unwrap();
            for d in [d0, d1] {
                fresh.init_entities(d).unwrap();
            }
            assert_eq!(fresh.num_entities(d0), Some(oracle.count(d0)), "N_{d0}");
            assert_eq!(
                engine_class(&fresh, d0, d1),
                oracle.class(d0, d1),
                "class {d0} -> {d1}"
            );
        }
    }
}
