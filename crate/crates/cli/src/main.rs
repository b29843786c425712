use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use meshtopo::bench::{bench_suite, write_csv};
use meshtopo::dist::{
    compute_mapping, distribute, partition_cells, serial_pattern, sparsity_pattern, DofMapResult, Element,
};
use meshtopo::generators::{unit_cube, unit_interval, unit_square};
use meshtopo::io::{read_mesh_file, write_mesh_file, write_mesh_function_file};
use meshtopo::ops::{boundary_mesh, refine_uniform_times};
use meshtopo::Mesh;

/// Simplicial mesh tools.
#[derive(Parser)]
#[command(name = "meshtopo", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a unit interval, square or cube mesh.
    Gen {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print entity counts.
    Info {
        path: PathBuf,
        /// Compute every entity dimension and the Euler characteristic.
        #[arg(long)]
        all: bool,
    },
    /// Refine uniformly.
    Refine {
        path: PathBuf,
        #[arg(long, default_value_t = 1)]
        times: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Extract the boundary mesh and its maps back to the input.
    Boundary {
        path: PathBuf,
        #[arg(long)]
        out: String,
    },
    /// Partition and write one mesh per rank with its shared-facet maps.
    Partition {
        path: PathBuf,
        #[arg(long)]
        ranks: usize,
        #[arg(long)]
        out: String,
    },
    /// Number P1 dofs over a partition and validate the result.
    Dofmap {
        path: PathBuf,
        #[arg(long)]
        ranks: usize,
        #[arg(long)]
        out: String,
    },
    /// Time creation, iteration and refinement of unit cubes; write CSV.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = [8, 16, 32])]
        sizes: Vec<usize>,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Shape {
    #[arg(long, value_name = "N")]
    interval: Option<usize>,
    #[arg(long, num_args = 1..=2, value_names = ["N", "M"])]
    square: Option<Vec<usize>>,
    #[arg(long, num_args = 1..=3, value_names = ["N", "M", "K"])]
    cube: Option<Vec<usize>>,
}

fn generate(args: &Shape) -> Result<Mesh> {
    if let Some(n) = args.interval {
        return Ok(unit_interval(n)?);
    }
    if let Some(s) = &args.square {
        let m = s.get(1).copied().unwrap_or(s[0]);
        return Ok(unit_square(s[0], m)?);
    }
    let c = args.cube.as_ref().expect("clap enforces one shape");
    match c.as_slice() {
        [n] => Ok(unit_cube(*n, *n, *n)?),
        [n, m, k] => Ok(unit_cube(*n, *m, *k)?),
        _ => bail!("--cube takes N or N M K"),
    }
}

fn info(path: &Path, all: bool) -> Result<String> {
    let mesh = read_mesh_file(path).with_context(|| format!("reading {}", path.display()))?;
    if all {
        mesh.init_all()?;
    }
    let mut s = format!("{} mesh, tdim {}, gdim {}\n", mesh.kind(), mesh.dim(), mesh.gdim());
    for d in 0..=mesh.dim() {
        if let Some(n) = mesh.num_entities(d) {
            writeln!(s, "N_{d}={n}")?;
        }
    }
    if all {
        writeln!(s, "euler={}", mesh.euler_characteristic()?)?;
    }
    writeln!(s, "bytes={}", mesh.size_bytes())?;
    Ok(s)
}

fn with_suffix(prefix: &str, suffix: &str) -> PathBuf {
    PathBuf::from(format!("{prefix}{suffix}"))
}

fn boundary(path: &Path, out: &str) -> Result<String> {
    let mesh = read_mesh_file(path)?;
    let ext = boundary_mesh(&mesh)?;
    write_mesh_file(&ext.boundary, with_suffix(out, ".txt"))?;
    write_mesh_function_file(&ext.vertex_map, with_suffix(out, "_vertex_map.txt"))?;
    write_mesh_function_file(&ext.cell_map, with_suffix(out, "_cell_map.txt"))?;
    Ok(format!(
        "boundary: {} vertices, {} cells\n",
        ext.boundary.num_vertices(),
        ext.boundary.num_cells()
    ))
}

fn partition(path: &Path, ranks: usize, out: &str) -> Result<String> {
    let mesh = read_mesh_file(path)?;
    let dm = distribute(&mesh, &partition_cells(&mesh, ranks)?)?;
    let mut s = String::new();
    for (i, r) in dm.ranks().iter().enumerate() {
        write_mesh_file(&r.mesh, with_suffix(out, &format!("_rank{i}.txt")))?;
        write_mesh_function_file(&r.shared_rank, with_suffix(out, &format!("_rank{i}_S.txt")))?;
        write_mesh_function_file(&r.shared_facet, with_suffix(out, &format!("_rank{i}_F.txt")))?;
        write_mesh_function_file(&r.global_vertex, with_suffix(out, &format!("_rank{i}_vertices.txt")))?;
        let shared = (0..r.shared_rank.len()).filter(|&f| r.shared_rank[f] as usize != i).count();
        writeln!(
            s,
            "rank {i}: {} cells, {} vertices, {shared} shared facets",
            r.mesh.num_cells(),
            r.mesh.num_vertices()
        )?;
    }
    Ok(s)
}

fn dof_table(result: &DofMapResult, rank: usize) -> String {
    let k = result.dofs_per_cell;
    let cells = result.tables[rank].len() / k;
    let mut s = format!("# dofmap rank {rank} cells {cells} dofs_per_cell {k}\n");
    for c in 0..cells {
        let row: Vec<String> = result.cell_dofs(rank, c).iter().map(u32::to_string).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

fn dofmap(path: &Path, ranks: usize, out: &str) -> Result<String> {
    let mesh = read_mesh_file(path)?;
    let dm = distribute(&mesh, &partition_cells(&mesh, ranks)?)?;
    let result = compute_mapping(&dm, Element::P1)?;
    for i in 0..ranks {
        fs::write(with_suffix(out, &format!("_rank{i}_dofs.txt")), dof_table(&result, i))?;
    }

    let mut sorted = result.global_of_vertex.clone();
    sorted.sort_unstable();
    let bijection = sorted.iter().copied().eq(0..result.num_global as u32)
        && result.num_global == mesh.num_vertices();
    let relabeled: meshtopo::dist::Pattern = serial_pattern(&mesh)
        .into_iter()
        .map(|(a, b)| (result.global_of_vertex[a as usize], result.global_of_vertex[b as usize]))
        .collect();
    let pattern = sparsity_pattern(&dm, &result) == relabeled;

    let ok = |b: bool| if b { "OK" } else { "FAILED" };
    let mut report = format!("ranks={ranks}\nN_global={}\n", result.num_global);
    writeln!(report, "offsets={:?}", result.offsets)?;
    writeln!(report, "owned={:?}", result.owned)?;
    writeln!(report, "bijection {}", ok(bijection))?;
    writeln!(report, "sparsity pattern {}", ok(pattern))?;
    fs::write(with_suffix(out, "_report.txt"), &report)?;
    if !(bijection && pattern) {
        bail!("dof numbering failed validation\n{report}");
    }
    Ok(report)
}

fn bench(sizes: &[usize], out: &Path) -> Result<String> {
    let records = bench_suite(sizes)?;
    write_csv(&records, fs::File::create(out)?)?;
    let mut s = String::new();
    for n in sizes {
        let time = |name: &str| {
            records
                .iter()
                .find(|r| r.size == *n && r.scenario == name)
                .map_or(f64::NAN, |r| r.seconds)
        };
        writeln!(
            s,
            "n={n}: create {:.3e} s, cursor/direct {:.2}, refine {:.3e} s",
            time("create"),
            time("iterate_cursor") / time("iterate_direct"),
            time("refine")
        )?;
    }
    Ok(s)
}

fn run(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Gen { shape, out } => {
            let mesh = generate(&shape)?;
            write_mesh_file(&mesh, &out)?;
            Ok(format!(
                "wrote {} vertices, {} cells to {}\n",
                mesh.num_vertices(),
                mesh.num_cells(),
                out.display()
            ))
        }
        Command::Info { path, all } => info(&path, all),
        Command::Refine { path, times, out } => {
            let mesh = refine_uniform_times(&read_mesh_file(&path)?, times)?;
            write_mesh_file(&mesh, &out)?;
            Ok(format!("refined {times} times: {} vertices, {} cells\n", mesh.num_vertices(), mesh.num_cells()))
        }
        Command::Boundary { path, out } => boundary(&path, &out),
        Command::Partition { path, ranks, out } => partition(&path, ranks, &out),
        Command::Dofmap { path, ranks, out } => dofmap(&path, ranks, &out),
        Command::Bench { sizes, out } => bench(&sizes, &out),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
