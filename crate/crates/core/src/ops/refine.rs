use crate::cell::CellKind;
use crate::error::{Error, Result};
use crate::mesh::Mesh;

/// A child cell as local nodes of its parent: `0..=D` are the parent's
/// vertices, `D + 1 + k` is the midpoint of local edge `k`.
type Child = [usize; 4];
/// Interior children, with the octahedron diagonal they use if any.
type Split = (Option<(usize, usize)>, Vec<Child>);

struct Scheme {
    tdim: usize,
    edges: Vec<(usize, usize)>,
}

impl Scheme {
    fn new(kind: CellKind) -> Result<Self> {
        let tdim = kind.dim();
        let edges = match tdim {
            0 => return Err(Error::Unsupported("refinement of point meshes".into())),
            1 => vec![(0, 1)],
            _ => kind.template(1)?.iter().map(|e| (e[0], e[1])).collect(),
        };
        Ok(Scheme { tdim, edges })
    }

    fn mid(&self, a: usize, b: usize) -> usize {
        let key = (a.min(b), a.max(b));
        let k = self.edges.iter().position(|&e| e == key).expect("edge of the cell");
        self.tdim + 1 + k
    }

    /// Twice the barycentric coordinates of a node.
    fn bary(&self, node: usize) -> [i64; 4] {
        let mut x = [0i64; 4];
        if node <= self.tdim {
            x[node] = 2;
        } else {
            let (a, b) = self.edges[node - self.tdim - 1];
            x[a] = 1;
            x[b] = 1;
        }
        x
    }

    /// Swaps the last two nodes if the child is inverted relative to its parent.
    fn orient(&self, mut child: Child) -> Child {
        let n = self.tdim + 1;
        let mut m = [[0i64; 4]; 4];
        for (row, &node) in m.iter_mut().zip(&child[..n]) {
            *row = self.bary(node);
        }
        let det = det(&m, n);
        debug_assert!(det != 0);
        if det < 0 {
            child.swap(n - 2, n - 1);
        }
        child
    }

    /// Corner children, one per parent vertex, scaled by 1/2 towards it.
    fn corners(&self) -> Vec<Child> {
        (0..=self.tdim)
            .map(|i| {
                let mut c = [0; 4];
                for (j, slot) in c.iter_mut().enumerate().take(self.tdim + 1) {
                    *slot = if j == i { i } else { self.mid(i, j) };
                }
                self.orient(c)
            })
            .collect()
    }

    /// The interior children. For tetrahedra there is one set per choice of
    /// octahedron diagonal, given as the pair of opposite parent edges.
    fn interior(&self) -> Vec<Split> {
        match self.tdim {
            1 => vec![(None, vec![])],
            2 => vec![(None, vec![self.orient([self.mid(1, 2), self.mid(0, 2), self.mid(0, 1), 0])])],
            _ => [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)]
                .into_iter()
                .map(|(a, b, c, d)| {
                    let p = self.mid(a, b);
                    let q = self.mid(c, d);
                    let ring = [self.mid(a, c), self.mid(c, b), self.mid(b, d), self.mid(d, a)];
                    let children = (0..4)
                        .map(|k| self.orient([p, q, ring[k], ring[(k + 1) % 4]]))
                        .collect();
                    (Some((p, q)), children)
                })
                .collect(),
        }
    }
}

fn det(m: &[[i64; 4]; 4], n: usize) -> i64 {
    if n == 1 {
        return m[0][0];
    }
    let mut total = 0;
    for col in 0..n {
        let mut minor = [[0i64; 4]; 4];
        for r in 1..n {
            for (k, c) in (0..n).filter(|&c| c != col).enumerate() {
                minor[r - 1][k] = m[r][c];
            }
        }
        let sign = if col % 2 == 0 { 1 } else { -1 };
        total += sign * m[0][col] * det(&minor, n - 1);
    }
    total
}

/// One level of uniform refinement.
///
/// Intervals are bisected, triangles split into four, tetrahedra into eight
/// (four corners plus the inner octahedron cut along its shortest diagonal).
/// New vertices: the old ones, then one midpoint per edge in edge order.
/// Children of a cell are contiguous, parents in order, and share the
/// parent's orientation.
pub fn refine_uniform(mesh: &Mesh) -> Result<Mesh> {
    let scheme = Scheme::new(mesh.kind())?;
    let tdim = scheme.tdim;
    let gdim = mesh.gdim();
    let n0 = mesh.num_vertices();
    let cells = mesh.topology().cells();

    let (cell_edges, edge_vertices) = if tdim == 1 {
        (None, cells)
    } else {
        (Some(mesh.init(tdim, 1)?), mesh.init(1, 0)?)
    };
    let n1 = edge_vertices.num_rows();

    let mut coordinates = Vec::with_capacity((n0 + n1) * gdim);
    coordinates.extend_from_slice(mesh.geometry().coordinates());
    for e in edge_vertices.rows() {
        let a = mesh.geometry().point(e[0] as usize);
        let b = mesh.geometry().point(e[1] as usize);
        coordinates.extend(a.iter().zip(b).map(|(x, y)| 0.5 * (x + y)));
    }

    let corners = scheme.corners();
    let interior = scheme.interior();
    let nv = tdim + 1;
    let per_parent = corners.len() + interior[0].1.len();
    let mut out = Vec::with_capacity(cells.num_rows() * per_parent * nv);
    let mut nodes = [0u32; 10];
    for c in 0..cells.num_rows() {
        let parent = cells.row(c);
        nodes[..nv].copy_from_slice(parent);
        match cell_edges {
            Some(ce) => {
                for (k, &e) in ce.row(c).iter().enumerate() {
                    nodes[nv + k] = (n0 + e as usize) as u32;
                }
            }
            None => nodes[nv] = (n0 + c) as u32,
        }

        let children = if interior.len() == 1 {
            &interior[0].1
        } else {
            let mut best: Option<(f64, (u32, u32), usize)> = None;
            for (i, (diag, _)) in interior.iter().enumerate() {
                let (p, q) = diag.expect("diagonal for tetrahedra");
                let (gp, gq) = (nodes[p], nodes[q]);
                let xp = &coordinates[gp as usize * gdim..(gp as usize + 1) * gdim];
                let xq = &coordinates[gq as usize * gdim..(gq as usize + 1) * gdim];
                let len: f64 = xp.iter().zip(xq).map(|(a, b)| (a - b) * (a - b)).sum();
                let pair = (gp.min(gq), gp.max(gq));
                let better = match best {
                    None => true,
                    Some((l, bp, _)) => {
                        let tol = 1e-12 * l.max(len);
                        len < l - tol || ((len - l).abs() <= tol && pair < bp)
                    }
                };
                if better {
                    best = Some((len, pair, i));
                }
            }
            &interior[best.expect("three diagonals").2].1
        };

        for child in corners.iter().chain(children) {
            out.extend(child[..nv].iter().map(|&node| nodes[node]));
        }
    }
    Mesh::new(mesh.kind(), gdim, coordinates, out)
}

/// Applies [`refine_uniform`] `times` times.
pub fn refine_uniform_times(mesh: &Mesh, times: usize) -> Result<Mesh> {
    let mut current = mesh.clone();
    for _ in 0..times {
        current = refine_uniform(&current)?;
    }
    Ok(current)
}
