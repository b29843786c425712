//! Plain-text mesh and mesh-function files.
//!
//! ```text
//! # optional comments
//! mesh triangle 2 2
//! vertices 4
//! 0.0000000000000000e0 0.0000000000000000e0
//! ...
//! cells 2
//! 0 1 3
//! 1 2 3
//! ```
//!
//! Floats are written with 17 significant digits, so a write/read cycle
//! reproduces every coordinate bit for bit. Map files hold one integer per
//! line after a `# meshfunction <dim> <N>` header.

use std::fmt::Write as _;
use std::fs;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::Path;

use crate::cell::CellKind;
use crate::editor::MeshEditor;
use crate::error::{Error, Result};
use crate::function::MeshFunction;
use crate::mesh::Mesh;

pub fn write_mesh<W: Write>(mesh: &Mesh, mut out: W) -> Result<()> {
    let mut s = String::new();
    let gdim = mesh.gdim();
    writeln!(s, "mesh {} {} {}", mesh.kind(), mesh.dim(), gdim).unwrap();
    writeln!(s, "vertices {}", mesh.num_vertices()).unwrap();
    for p in mesh.geometry().coordinates().chunks_exact(gdim) {
        for (a, x) in p.iter().enumerate() {
            let sep = if a + 1 == gdim { "\n" } else { " " };
            write!(s, "{x:.16e}{sep}").unwrap();
        }
    }
    writeln!(s, "cells {}", mesh.num_cells()).unwrap();
    for row in mesh.topology().cells().rows() {
        for (a, v) in row.iter().enumerate() {
            let sep = if a + 1 == row.len() { "\n" } else { " " };
            write!(s, "{v}{sep}").unwrap();
        }
    }
    out.write_all(s.as_bytes())?;
    Ok(())
}

pub fn write_mesh_file(mesh: &Mesh, path: impl AsRef<Path>) -> Result<()> {
    let file = fs::File::create(path)?;
    write_mesh(mesh, std::io::BufWriter::new(file))
}

pub fn mesh_to_string(mesh: &Mesh) -> String {
    let mut buf = Vec::new();
    write_mesh(mesh, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("ascii output")
}

/// Non-empty lines with comments removed, numbered from 1.
fn content_lines<R: BufRead>(input: R) -> impl Iterator<Item = Result<(usize, String)>> {
    input.lines().enumerate().filter_map(|(i, line)| match line {
        Err(e) => Some(Err(e.into())),
        Ok(l) => {
            let body = l.split('#').next().unwrap_or("").trim();
            (!body.is_empty()).then(|| Ok((i + 1, body.to_string())))
        }
    })
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_header(line: usize, text: &str, keyword: &str) -> Result<usize> {
    let mut words = text.split_whitespace();
    if words.next() != Some(keyword) {
        return Err(parse_err(line, format!("expected `{keyword} <count>`, found `{text}`")));
    }
    let n = words
        .next()
        .and_then(|w| w.parse().ok())
        .ok_or_else(|| parse_err(line, format!("bad {keyword} count in `{text}`")))?;
    if words.next().is_some() {
        return Err(parse_err(line, format!("trailing input after `{keyword} {n}`")));
    }
    Ok(n)
}

fn editor_at<T>(line: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Editor(inner) => parse_err(line, inner.to_string()),
        other => other,
    })
}

pub fn read_mesh<R: Read>(input: R) -> Result<Mesh> {
    let mut lines = content_lines(BufReader::new(input));
    let mut next = |what: &str| -> Result<(usize, String)> {
        lines
            .next()
            .unwrap_or_else(|| Err(parse_err(0, format!("unexpected end of file, expected {what}"))))
    };

    let (ln, header) = next("mesh header")?;
    let words: Vec<&str> = header.split_whitespace().collect();
    let (kind, tdim, gdim) = match words.as_slice() {
        ["mesh", kind, tdim, gdim] => {
            let kind: CellKind = kind.parse().map_err(|e: Error| parse_err(ln, e.to_string()))?;
            let tdim: usize = tdim.parse().map_err(|_| parse_err(ln, "bad topological dimension"))?;
            let gdim: usize = gdim.parse().map_err(|_| parse_err(ln, "bad geometric dimension"))?;
            (kind, tdim, gdim)
        }
        _ => return Err(parse_err(ln, format!("expected `mesh <kind> <tdim> <gdim>`, found `{header}`"))),
    };
    let mut editor = MeshEditor::open(kind, tdim, gdim).map_err(|e| parse_err(ln, e.to_string()))?;

    let (ln, text) = next("vertices header")?;
    let n_vertices = parse_header(ln, &text, "vertices")?;
    editor.init_vertices(n_vertices)?;
    let mut point = Vec::with_capacity(gdim);
    let mut pending = None;
    for i in 0..n_vertices {
        let (ln, text) = next("vertex coordinates")?;
        if text.starts_with("cells") {
            pending = Some((ln, text, i));
            break;
        }
        point.clear();
        for w in text.split_whitespace() {
            point.push(w.parse::<f64>().map_err(|_| parse_err(ln, format!("bad coordinate `{w}`")))?);
        }
        editor_at(ln, editor.add_vertex(i, &point))?;
    }
    if let Some((ln, _, found)) = pending {
        return Err(parse_err(
            ln,
            format!("vertex count mismatch: header declares {n_vertices}, found {found}"),
        ));
    }

    let (ln, text) = next("cells header")?;
    if !text.starts_with("cells") {
        return Err(parse_err(
            ln,
            format!("vertex count mismatch: more than the declared {n_vertices} vertices"),
        ));
    }
    let n_cells = parse_header(ln, &text, "cells")?;
    editor.init_cells(n_cells)?;
    let mut tuple = Vec::with_capacity(tdim + 1);
    for i in 0..n_cells {
        let (ln, text) = next("cell vertices").map_err(|_| {
            parse_err(0, format!("cell count mismatch: header declares {n_cells}, found {i}"))
        })?;
        tuple.clear();
        for w in text.split_whitespace() {
            tuple.push(w.parse::<u32>().map_err(|_| parse_err(ln, format!("bad vertex index `{w}`")))?);
        }
        editor_at(ln, editor.add_cell(i, &tuple))?;
    }
    if let Some(extra) = lines.next() {
        let (ln, _) = extra?;
        return Err(parse_err(ln, format!("cell count mismatch: more than the declared {n_cells} cells")));
    }
    editor.close()
}

pub fn read_mesh_file(path: impl AsRef<Path>) -> Result<Mesh> {
    read_mesh(fs::File::open(path)?)
}

pub fn read_mesh_str(text: &str) -> Result<Mesh> {
    read_mesh(text.as_bytes())
}

pub fn write_mesh_function<W: Write>(f: &MeshFunction<u32>, mut out: W) -> Result<()> {
    let mut s = format!("# meshfunction {} {}\n", f.dim(), f.len());
    for v in f.values() {
        writeln!(s, "{v}").unwrap();
    }
    out.write_all(s.as_bytes())?;
    Ok(())
}

pub fn write_mesh_function_file(f: &MeshFunction<u32>, path: impl AsRef<Path>) -> Result<()> {
    write_mesh_function(f, fs::File::create(path)?)
}

pub fn read_mesh_function<R: Read>(input: R) -> Result<MeshFunction<u32>> {
    let mut lines = BufReader::new(input).lines().enumerate();
    let (dim, n) = loop {
        let Some((i, line)) = lines.next() else {
            return Err(parse_err(0, "missing `# meshfunction <dim> <N>` header"));
        };
        let line = line?;
        let words: Vec<&str> = line.split_whitespace().collect();
        if words.is_empty() {
            continue;
        }
        match words.as_slice() {
            ["#", "meshfunction", d, n] => {
                let d = d.parse().map_err(|_| parse_err(i + 1, "bad dimension"))?;
                let n = n.parse().map_err(|_| parse_err(i + 1, "bad count"))?;
                break (d, n);
            }
            _ => return Err(parse_err(i + 1, "expected `# meshfunction <dim> <N>`")),
        }
    };
    let mut values = Vec::with_capacity(n);
    for (i, line) in lines {
        let line = line?;
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        values.push(body.parse().map_err(|_| parse_err(i + 1, format!("bad value `{body}`")))?);
    }
    if values.len() != n {
        return Err(parse_err(0, format!("declared {n} values, found {}", values.len())));
    }
    Ok(MeshFunction::from_values(dim, values))
}

pub fn read_mesh_function_file(path: impl AsRef<Path>) -> Result<MeshFunction<u32>> {
    read_mesh_function(fs::File::open(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{unit_cube, unit_square};

    const EDITOR_SQUARE: &str = "\
# the square from the editor example
mesh triangle 2 2
vertices 4
0.0 0.0
1.0 0.0
1.0 1.0
0.0 1.0
cells 2
0 1 2
0 2 3
";

    #[test]
    fn reads_hand_written_file() {
        let mesh = read_mesh_str(EDITOR_SQUARE).unwrap();
        assert_eq!((mesh.num_vertices(), mesh.num_cells()), (4, 2));
        assert_eq!(mesh.point(2).unwrap(), &[1.0, 1.0]);
        let text = mesh_to_string(&mesh);
        assert!(text.starts_with("mesh triangle 2 2\nvertices 4\n"));
        assert!(text.contains("cells 2\n0 1 2\n0 2 3\n"));
    }

    #[test]
    fn round_trip_is_exact() {
        for mesh in [unit_square(1, 1).unwrap(), unit_square(3, 7).unwrap(), unit_cube(2, 3, 1).unwrap()] {
            let text = mesh_to_string(&mesh);
            let back = read_mesh_str(&text).unwrap();
            assert_eq!(back.topology().cells(), mesh.topology().cells());
            assert_eq!(back.geometry().coordinates(), mesh.geometry().coordinates());
            assert_eq!(mesh_to_string(&back), text);
        }
    }

    #[test]
    fn short_vertex_list_reports_cells_line() {
        let text = EDITOR_SQUARE.replace("0.0 1.0\n", "");
        match read_mesh_str(&text) {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 7);
                assert!(message.contains("count mismatch"), "{message}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn errors_carry_line_numbers() {
        let text = EDITOR_SQUARE.replace("0 2 3", "0 2 9");
        assert!(matches!(read_mesh_str(&text), Err(Error::Parse { line: 10, .. })));
        let text = EDITOR_SQUARE.replace("1.0 0.0", "1.0 zero");
        assert!(matches!(read_mesh_str(&text), Err(Error::Parse { line: 5, .. })));
        let text = EDITOR_SQUARE.replace("mesh triangle", "mesh hexagon");
        assert!(matches!(read_mesh_str(&text), Err(Error::Parse { line: 2, .. })));
        let text = EDITOR_SQUARE.replace("0 2 3\n", "");
        assert!(matches!(read_mesh_str(&text), Err(Error::Parse { .. })));
        let text = format!("{EDITOR_SQUARE}1 2 3\n");
        assert!(matches!(read_mesh_str(&text), Err(Error::Parse { line: 11, .. })));
    }

    #[test]
    fn mesh_function_round_trip() {
        let f = MeshFunction::from_values(1, vec![3u32, 1, 4, 1, 5]);
        let mut buf = Vec::new();
        write_mesh_function(&f, &mut buf).unwrap();
        assert!(buf.starts_with(b"# meshfunction 1 5\n3\n"));
        assert_eq!(read_mesh_function(buf.as_slice()).unwrap(), f);
        assert!(read_mesh_function(&b"# meshfunction 0 2\n1\n"[..]).is_err());
    }
}
