//! Timing and memory measurements on unit cube meshes.

use std::hint::black_box;
use std::io::Write;
use std::time::Instant;

use crate::error::Result;
use crate::generators::unit_cube;
use crate::mesh::Mesh;
use crate::ops::refine_uniform;
use crate::traversal::{cells, vertices};

pub const REPETITIONS: usize = 5;
pub const CSV_HEADER: &str = "scenario,size,n_vertices,n_cells,seconds,bytes";

/// One CSV row.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub scenario: &'static str,
    pub size: usize,
    pub n_vertices: usize,
    pub n_cells: usize,
    pub seconds: f64,
    pub bytes: usize,
}

impl BenchRecord {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{:.9},{}",
            self.scenario, self.size, self.n_vertices, self.n_cells, self.seconds, self.bytes
        )
    }
}

/// Median wall time of `reps` runs of `run`, each on a fresh `setup()` value,
/// after one untimed warm-up run. Returns the output of the last run as well.
pub fn median_seconds<S, T>(
    reps: usize,
    mut setup: impl FnMut() -> S,
    mut run: impl FnMut(S) -> T,
) -> (f64, T) {
    assert!(reps > 0);
    let mut times = Vec::with_capacity(reps);
    let mut last = None;
    drop(black_box(run(black_box(setup()))));
    for rep in 0..reps {
        let input = setup();
        let start = Instant::now();
        let out = black_box(run(black_box(input)));
        times.push(start.elapsed().as_secs_f64());
        // release each result before the next run so runs see the same heap
        if rep + 1 == reps {
            last = Some(out);
        } else {
            drop(out);
        }
    }
    times.sort_by(f64::total_cmp);
    (times[reps / 2], last.expect("at least one run"))
}

/// Sum of the vertex indices of all cells, walking nested cursors.
pub fn cell_vertex_sum_cursor(mesh: &Mesh) -> u64 {
    let mut sum = 0u64;
    for cell in cells(mesh) {
        for v in cell.vertices() {
            sum += v.index() as u64;
        }
    }
    sum
}

/// Same sum, reading the offset and index arrays directly.
pub fn cell_vertex_sum_direct(mesh: &Mesh) -> u64 {
    let conn = mesh.topology().cells();
    let offsets = conn.offsets();
    let indices = conn.indices();
    let mut sum = 0u64;
    for c in 0..conn.num_rows() {
        for &v in &indices[offsets[c] as usize..offsets[c + 1] as usize] {
            sum += v as u64;
        }
    }
    sum
}

/// Sum of all vertex coordinates, read through vertex cursors.
pub fn coordinate_sum(mesh: &Mesh) -> f64 {
    let mut sum = 0.0;
    for v in vertices(mesh) {
        for x in v.point().expect("vertex entity") {
            sum += x;
        }
    }
    sum
}

/// All scenarios for `unit_cube(n, n, n)`.
pub fn bench_size(n: usize, reps: usize) -> Result<Vec<BenchRecord>> {
    let record = |scenario, mesh: &Mesh, seconds| BenchRecord {
        scenario,
        size: n,
        n_vertices: mesh.num_vertices(),
        n_cells: mesh.num_cells(),
        seconds,
        bytes: mesh.size_bytes(),
    };
    let (t_create, mesh) = median_seconds(reps, || (), |_| unit_cube(n, n, n));
    let mesh = mesh?;
    let mut out = vec![record("create", &mesh, t_create)];

    let (t, _) = median_seconds(reps, || (), |_| cell_vertex_sum_cursor(&mesh));
    out.push(record("iterate_cursor", &mesh, t));
    let (t, _) = median_seconds(reps, || (), |_| cell_vertex_sum_direct(&mesh));
    out.push(record("iterate_direct", &mesh, t));
    let (t, _) = median_seconds(reps, || (), |_| coordinate_sum(&mesh));
    out.push(record("coordinates", &mesh, t));

    let base = unit_cube(n, n, n)?;
    let (t, fine) = median_seconds(reps, || base.clone(), |m| refine_uniform(&m));
    out.push(record("refine", &fine?, t));
    Ok(out)
}

pub fn bench_suite(sizes: &[usize]) -> Result<Vec<BenchRecord>> {
    let mut out = Vec::new();
    for &n in sizes {
        out.extend(bench_size(n, REPETITIONS)?);
    }
    Ok(out)
}

pub fn write_csv<W: Write>(records: &[BenchRecord], mut out: W) -> Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        writeln!(out, "{}", r.csv_row())?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::memory::simplex_mesh_bytes;

    #[test]
    fn small_suite() {
        let records = bench_size(2, 1).unwrap();
        let names: Vec<_> = records.iter().map(|r| r.scenario).collect();
        assert_eq!(names, ["create", "iterate_cursor", "iterate_direct", "coordinates", "refine"]);
        let create = &records[0];
        assert_eq!((create.n_vertices, create.n_cells), (27, 48));
        assert_eq!(create.bytes as u64, simplex_mesh_bytes(3, 3, 48, 27));
        assert_eq!(records[4].n_cells, 8 * 48);
        assert!(records.iter().all(|r| r.seconds >= 0.0));

        let mut csv = Vec::new();
        write_csv(&records, &mut csv).unwrap();
        let text = String::from_utf8(csv).unwrap();
        assert!(text.starts_with("scenario,size,n_vertices,n_cells,seconds,bytes\ncreate,2,27,48,"));
        assert_eq!(text.lines().count(), 6);
    }

    #[test]
    fn sums_agree() {
        let mesh = unit_cube(3, 2, 2).unwrap();
        assert_eq!(cell_vertex_sum_cursor(&mesh), cell_vertex_sum_direct(&mesh));
        let expected: f64 = mesh.geometry().coordinates().iter().sum();
        assert!((coordinate_sum(&mesh) - expected).abs() < 1e-9);
    }
}
