//! Computation of any incidence class d -> d' from the cell-vertex class.
//!
//! Three primitives do the work:
//!
//! * [`build`] creates the entities of an intermediate dimension `0 < d < D`
//!   (classes D -> d and d -> 0) from D -> 0 and D -> D,
//! * [`transpose`] inverts d' -> d into d -> d' for `d < d'`,
//! * [`intersection`] composes d -> d'' and d'' -> d' into d -> d' for `d >= d'`.
//!
//! [`compute_connectivity`] applies them recursively in an order that only ever
//! needs classes which are already present or can themselves be computed.
//! Every primitive makes a counting pass followed by a filling pass so the
//! output arrays are allocated once at their final size.

mod build;
mod intersection;
mod transpose;

pub use build::{build, build_with, BuildStrategy};
pub use intersection::intersection;
pub use transpose::transpose;

use crate::connectivity::Connectivity;
use crate::error::{check_dim, Result};
use crate::topology::MeshTopology;

/// One primitive application performed by the driver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Build(usize),
    Transpose(usize, usize),
    Intersection(usize, usize, usize),
}

/// Makes d -> d' available, computing it and its prerequisites if needed.
pub fn compute_connectivity(topology: &MeshTopology, d0: usize, d1: usize) -> Result<&Connectivity> {
    connectivity(topology, d0, d1, &mut |_| {})?;
    Ok(topology.get(d0, d1).expect("computed above"))
}

/// Like [`compute_connectivity`], returning the primitives applied in order.
pub fn compute_connectivity_traced(topology: &MeshTopology, d0: usize, d1: usize) -> Result<Vec<Step>> {
    let mut steps = Vec::new();
    connectivity(topology, d0, d1, &mut |s| steps.push(s))?;
    Ok(steps)
}

fn connectivity(
    topology: &MeshTopology,
    d0: usize,
    d1: usize,
    trace: &mut dyn FnMut(Step),
) -> Result<()> {
    let tdim = topology.dim();
    check_dim(d0, tdim)?;
    check_dim(d1, tdim)?;

    ensure_entities(topology, d0, trace)?;
    ensure_entities(topology, d1, trace)?;
    if topology.has(d0, d1) {
        return Ok(());
    }

    // D -> d for an intermediate d only comes from Build, which keeps its rows
    // in template order. Reached when the class was cleared after building.
    if d0 == tdim && d1 > 0 && d1 < tdim {
        return run_build(topology, d1, trace);
    }

    if d0 < d1 {
        connectivity(topology, d1, d0, trace)?;
        transpose(topology, d0, d1)?;
        trace(Step::Transpose(d0, d1));
    } else {
        let via = if d0 == 0 && d1 == 0 { tdim } else { 0 };
        connectivity(topology, d0, via, trace)?;
        connectivity(topology, via, d1, trace)?;
        intersection(topology, d0, d1, via)?;
        trace(Step::Intersection(d0, d1, via));
    }
    Ok(())
}

/// Entities of an intermediate dimension exist once d -> 0 is stored.
fn ensure_entities(topology: &MeshTopology, d: usize, trace: &mut dyn FnMut(Step)) -> Result<()> {
    let tdim = topology.dim();
    if d > 0 && d < tdim && !topology.has(d, 0) {
        run_build(topology, d, trace)?;
    }
    Ok(())
}

fn run_build(topology: &MeshTopology, d: usize, trace: &mut dyn FnMut(Step)) -> Result<()> {
    let tdim = topology.dim();
    connectivity(topology, tdim, tdim, trace)?;
    build(topology, d)?;
    trace(Step::Build(d));
    Ok(())
}
