//! Simple undirected graphs, BFS distance matrices and the spectrum of the
//! path adjacency matrix.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: &'static str },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("edge {0}-{1} is invalid")]
    InvalidEdge(usize, usize),
}

/// Undirected simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        Ok(Graph {
            adj: vec![Vec::new(); n],
        })
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `{u, v}`; repeated edges are ignored, loops are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.adj.len();
        if u == v || u >= n || v >= n {
            return Err(GraphError::InvalidEdge(u, v));
        }
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
            let pos = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos, u);
        }
        Ok(())
    }

    pub fn n_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn n_edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|a| a.binary_search(&v).is_ok())
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, a)| a.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        self.bfs(0).iter().all(Option::is_some)
    }

    fn bfs(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.adj.len()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0) + 1;
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d);
                    queue.push_back(v);
                }
            }
        }
        dist
    }
}

/// Path `P_n` on `0..n`.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Every vertex of `g1` joined to every vertex of `g2`; `g2` is relabelled
/// to follow `g1`.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let off = g1.n_vertices();
    let n = off + g2.n_vertices();
    let mut g = Graph {
        adj: vec![Vec::new(); n],
    };
    let own = g1
        .edges()
        .chain(g2.edges().map(|(u, v)| (u + off, v + off)));
    let cross = (0..off).flat_map(|u| (off..n).map(move |v| (u, v)));
    for (u, v) in own.chain(cross) {
        // Indices are in range and never equal by construction.
        let _ = g.add_edge(u, v);
    }
    g
}

/// Fan `K_1 + P_n`: hub 0 adjacent to every path vertex `1..=n`.
pub fn fan(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::Empty);
    }
    Ok(join(&complete(1)?, &path(n)?))
}

/// Parses one `u v` pair per line (0-indexed); `#` starts a comment and
/// blank lines are skipped. The vertex count is one more than the largest
/// index mentioned.
pub fn from_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let mut next = || -> Result<usize, GraphError> {
            parts
                .next()
                .ok_or(GraphError::Parse {
                    line: line_no,
                    reason: "expected two vertex indices",
                })?
                .parse()
                .map_err(|_| GraphError::Parse {
                    line: line_no,
                    reason: "vertex index is not a non-negative integer",
                })
        };
        let (u, v) = (next()?, next()?);
        if parts.next().is_some() {
            return Err(GraphError::Parse {
                line: line_no,
                reason: "trailing tokens after edge",
            });
        }
        if u == v {
            return Err(GraphError::Parse {
                line: line_no,
                reason: "self-loop",
            });
        }
        edges.push((u, v));
    }
    let n = edges
        .iter()
        .map(|&(u, v)| u.max(v) + 1)
        .max()
        .ok_or(GraphError::Parse {
            line: 0,
            reason: "no edges",
        })?;
    Graph::from_edges(n, edges)
}

/// Dense symmetric matrix of graph distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.d[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.d[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.d.chunks(self.n)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn satisfies_triangle_inequality(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| {
            (0..n).all(|j| (0..n).all(|k| self.get(i, j) <= self.get(i, k) + self.get(k, j)))
        })
    }
}

/// All-pairs distances by one BFS per source.
pub fn distance_matrix(g: &Graph) -> Result<DistMatrix, GraphError> {
    let n = g.n_vertices();
    let mut d = Vec::with_capacity(n * n);
    for s in 0..n {
        for dist in g.bfs(s) {
            d.push(dist.ok_or(GraphError::Disconnected)?);
        }
    }
    Ok(DistMatrix { n, d })
}

/// Eigenvalue `ω_k = 2cos(kπ/(n+1))`, the `k`-th largest of the path
/// adjacency matrix `A_n`.
pub fn path_eigenvalue(n: usize, k: usize) -> f64 {
    2.0 * libm::cos(k as f64 * PI / (n + 1) as f64)
}

/// Eigenvalues of `A_n` indexed `k = 1..=n`.
#[derive(Debug, Clone, PartialEq)]
pub struct PathSpectrum {
    pub n: usize,
    /// `eigenvalues[k-1] = ω_k`, strictly decreasing.
    pub eigenvalues: Vec<f64>,
}

impl PathSpectrum {
    pub fn new(n: usize) -> Self {
        PathSpectrum {
            n,
            eigenvalues: (1..=n).map(|k| path_eigenvalue(n, k)).collect(),
        }
    }

    /// `ω_k`, 1-based.
    pub fn omega(&self, k: usize) -> f64 {
        self.eigenvalues[k - 1]
    }
}

/// Eigenvector of `A_n` for `ω_k`: entries `sin(lkπ/(n+1))`, `l = 1..=n`.
pub fn path_eigenvector(n: usize, k: usize) -> Vec<f64> {
    assert!(1 <= k && k <= n, "eigenvector index {k} out of 1..={n}");
    (1..=n)
        .map(|l| libm::sin((l * k) as f64 * PI / (n + 1) as f64))
        .collect()
}

/// `A_n · v` for the path adjacency matrix.
pub fn path_adjacency_apply(v: &[f64]) -> Vec<f64> {
    let n = v.len();
    (0..n)
        .map(|i| {
            let left = if i > 0 { v[i - 1] } else { 0.0 };
            let right = if i + 1 < n { v[i + 1] } else { 0.0 };
            left + right
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_fans_are_complete() {
        assert_eq!(fan(1).unwrap(), complete(2).unwrap());
        assert_eq!(fan(2).unwrap(), complete(3).unwrap());
        assert_eq!(
            join(&complete(1).unwrap(), &complete(1).unwrap()),
            complete(2).unwrap()
        );
    }

    #[test]
    fn fan_five_counts() {
        let g = fan(5).unwrap();
        assert_eq!(g.n_vertices(), 6);
        assert_eq!(g.n_edges(), 9);
        assert!((1..=5).all(|v| g.has_edge(0, v)));
        assert!(g.has_edge(1, 2) && !g.has_edge(1, 3));
    }

    #[test]
    fn path_three_distances() {
        let d = distance_matrix(&path(3).unwrap()).unwrap();
        let rows: Vec<&[u32]> = d.rows().collect();
        assert_eq!(rows, [&[0, 1, 2][..], &[1, 0, 1], &[2, 1, 0]]);
    }

    #[test]
    fn fan_distance_through_hub() {
        let d = distance_matrix(&fan(5).unwrap()).unwrap();
        assert_eq!(d.get(1, 5), 2);
        assert_eq!(d.get(0, 3), 1);
        assert!(d.is_symmetric());
        assert!(d.satisfies_triangle_inequality());
    }

    #[test]
    fn disconnected_graph_is_rejected() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(distance_matrix(&g), Err(GraphError::Disconnected));
    }

    #[test]
    fn edge_list_parsing() {
        let g = from_edge_list("# path on 3\n0 1\n\n1 2  # tail\n2 1\n").unwrap();
        assert_eq!(g, path(3).unwrap());
        assert!(matches!(
            from_edge_list("0 1\n1"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            from_edge_list("0 x"),
            Err(GraphError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            from_edge_list("3 3"),
            Err(GraphError::Parse { .. })
        ));
        assert!(matches!(
            from_edge_list("0 1 2"),
            Err(GraphError::Parse { .. })
        ));
        assert!(matches!(
            from_edge_list("# nothing\n"),
            Err(GraphError::Parse { .. })
        ));
    }

    #[test]
    fn invalid_edges() {
        let mut g = Graph::empty(2).unwrap();
        assert_eq!(g.add_edge(0, 2), Err(GraphError::InvalidEdge(0, 2)));
        assert_eq!(g.add_edge(1, 1), Err(GraphError::InvalidEdge(1, 1)));
        assert_eq!(Graph::empty(0), Err(GraphError::Empty));
    }

    #[test]
    fn path_eigenpairs() {
        let g = path_eigenvector(2, 1);
        assert!((g[0] - libm::sin(PI / 3.0)).abs() < 1e-15);
        assert!((g[1] - libm::sin(2.0 * PI / 3.0)).abs() < 1e-15);
        assert!((path_eigenvalue(2, 1) - 1.0).abs() < 1e-15);
        assert_eq!(path_eigenvector(1, 1), [1.0]);
        assert!(path_eigenvalue(1, 1).abs() < 1e-15);
        for n in 1..=12 {
            let spectrum = PathSpectrum::new(n);
            for k in 1..=n {
                let v = path_eigenvector(n, k);
                let av = path_adjacency_apply(&v);
                let w = spectrum.omega(k);
                assert!(av.iter().zip(&v).all(|(a, b)| (a - w * b).abs() < 1e-9));
            }
            assert!(spectrum.eigenvalues.windows(2).all(|p| p[0] > p[1]));
        }
    }
}
