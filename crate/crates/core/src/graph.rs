//! Simple connected undirected graphs, their text formats and distance counts.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Input formats understood by [`parse_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    /// Lines `u v`, `#` starts a comment, blank lines ignored.
    EdgeList,
    /// `n` lines of `n` characters `0`/`1`.
    AdjMatrix,
    /// Printable-ASCII graph6, at most 62 vertices.
    Graph6,
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "edgelist" => Ok(GraphFormat::EdgeList),
            "adjmatrix" => Ok(GraphFormat::AdjMatrix),
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphFormat::EdgeList => "edgelist",
            GraphFormat::AdjMatrix => "adjmatrix",
            GraphFormat::Graph6 => "graph6",
        })
    }
}

/// A simple, connected, undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
}

impl Graph {
    /// Validates simplicity and connectivity.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::parse(0, "graph has no vertices"));
        }
        let mut seen = HashSet::with_capacity(edges.len());
        let mut neighbors = vec![Vec::new(); n];
        let mut norm = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::parse(0, format!("edge ({u}, {v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::NotSimple(format!("self-loop at vertex {u}")));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::NotSimple(format!("duplicate edge ({}, {})", e.0, e.1)));
            }
            neighbors[u].push(v);
            neighbors[v].push(u);
            norm.push(e);
        }
        norm.sort_unstable();
        for adj in &mut neighbors {
            adj.sort_unstable();
        }
        let g = Graph {
            n,
            edges: norm,
            neighbors,
        };
        let reached = g.bfs_distances(0).iter().filter(|d| d.is_some()).count();
        if reached != n {
            return Err(Error::Disconnected { reached, n });
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.neighbors[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.neighbors[u].len()
    }

    pub fn degree_range(&self) -> (usize, usize) {
        let min = (0..self.n).map(|u| self.degree(u)).min().unwrap_or(0);
        let max = (0..self.n).map(|u| self.degree(u)).max().unwrap_or(0);
        (min, max)
    }

    pub fn is_regular(&self) -> bool {
        let (min, max) = self.degree_range();
        min == max
    }

    pub fn adjacency_matrix(&self) -> Matrix {
        let mut a = Matrix::zeros(self.n, self.n);
        for &(u, v) in &self.edges {
            a[(u, v)] = 1.0;
            a[(v, u)] = 1.0;
        }
        a
    }

    /// `A x` using the adjacency lists.
    pub fn adjacency_apply(&self, x: &[f64]) -> Vec<f64> {
        self.neighbors
            .iter()
            .map(|adj| adj.iter().map(|&v| x[v]).sum())
            .collect()
    }

    /// BFS distances from `src`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[src] = Some(0);
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &v in &self.neighbors[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Bipartiteness by BFS 2-colouring.
    pub fn is_bipartite(&self) -> bool {
        let dist = self.bfs_distances(0);
        self.edges
            .iter()
            .all(|&(u, v)| dist[u].map(|d| d % 2) != dist[v].map(|d| d % 2))
    }

    /// graph6 encoding; panics for `n > 62`.
    pub fn to_graph6(&self) -> String {
        assert!(self.n <= 62, "graph6 writer supports n <= 62");
        let mut bits = Vec::with_capacity(self.n * self.n / 2);
        let set: HashSet<(usize, usize)> = self.edges.iter().copied().collect();
        for j in 1..self.n {
            for i in 0..j {
                bits.push(set.contains(&(i, j)));
            }
        }
        let mut out = String::new();
        out.push((self.n as u8 + 63) as char);
        for chunk in bits.chunks(6) {
            let mut byte = 0u8;
            for k in 0..6 {
                byte <<= 1;
                if chunk.get(k).copied().unwrap_or(false) {
                    byte |= 1;
                }
            }
            out.push((byte + 63) as char);
        }
        out
    }
}

/// Parses a graph and relabels vertices densely in first-seen order.
pub fn parse_graph(text: &[u8], format: GraphFormat) -> Result<Graph> {
    let text = std::str::from_utf8(text).map_err(|e| Error::parse(0, format!("not UTF-8: {e}")))?;
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::AdjMatrix => parse_adj_matrix(text),
        GraphFormat::Graph6 => parse_graph6(text),
    }
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut labels: HashMap<&str, usize> = HashMap::new();
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::parse(
                lineno + 1,
                format!("expected `u v`, found {} fields", toks.len()),
            ));
        }
        let mut id = |t| {
            let next = labels.len();
            *labels.entry(t).or_insert(next)
        };
        let u = id(toks[0]);
        let v = id(toks[1]);
        edges.push((u, v));
    }
    if labels.is_empty() {
        return Err(Error::parse(0, "edge list is empty"));
    }
    Graph::from_edges(labels.len(), &edges)
}

fn parse_adj_matrix(text: &str) -> Result<Graph> {
    let rows: Vec<(usize, Vec<u8>)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.bytes().filter(|b| !b.is_ascii_whitespace()).collect::<Vec<u8>>()))
        .filter(|(_, r)| !r.is_empty())
        .collect();
    let n = rows.len();
    if n == 0 {
        return Err(Error::parse(0, "adjacency matrix is empty"));
    }
    let mut bits = vec![vec![false; n]; n];
    for (i, (lineno, row)) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::parse(
                *lineno,
                format!("row has {} entries, expected {n}", row.len()),
            ));
        }
        for (j, &b) in row.iter().enumerate() {
            bits[i][j] = match b {
                b'0' => false,
                b'1' => true,
                other => {
                    return Err(Error::parse(
                        *lineno,
                        format!("unexpected character `{}`", other as char),
                    ))
                }
            };
        }
    }
    let mut edges = Vec::new();
    for i in 0..n {
        if bits[i][i] {
            return Err(Error::NotSimple(format!("self-loop at vertex {i}")));
        }
        for j in i + 1..n {
            if bits[i][j] != bits[j][i] {
                return Err(Error::parse(
                    rows[i].0,
                    format!("matrix is not symmetric at ({i}, {j})"),
                ));
            }
            if bits[i][j] {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

fn parse_graph6(text: &str) -> Result<Graph> {
    let mut s = text.trim();
    if let Some(rest) = s.strip_prefix(">>graph6<<") {
        s = rest;
    }
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse(1, "graph6 string is empty"));
    }
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(Error::parse(1, "graph6 byte outside the printable range 63..=126"));
    }
    if bytes[0] == 126 {
        return Err(Error::parse(1, "graph6 with more than 62 vertices is not supported"));
    }
    let n = (bytes[0] - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let body = &bytes[1..];
    if body.len() != nbits.div_ceil(6) {
        return Err(Error::parse(
            1,
            format!("graph6 body has {} bytes, expected {} for n = {n}", body.len(), nbits.div_ceil(6)),
        ));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// Per-vertex counts of vertices at each distance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistanceProfile {
    /// Largest distance observed (the diameter).
    pub diameter: usize,
    /// `counts[u][t]` = number of vertices at distance exactly `t` from `u`,
    /// for `t` in `0..=diameter`.
    pub counts: Vec<Vec<usize>>,
}

pub fn distance_profile(g: &Graph) -> DistanceProfile {
    let per_vertex: Vec<Vec<usize>> = (0..g.n())
        .map(|u| {
            let dist = g.bfs_distances(u);
            let ecc = dist.iter().flatten().copied().max().unwrap_or(0);
            let mut c = vec![0; ecc + 1];
            for d in dist.into_iter().flatten() {
                c[d] += 1;
            }
            c
        })
        .collect();
    let diameter = per_vertex.iter().map(|c| c.len() - 1).max().unwrap_or(0);
    let counts = per_vertex
        .into_iter()
        .map(|mut c| {
            c.resize(diameter + 1, 0);
            c
        })
        .collect();
    DistanceProfile { diameter, counts }
}

/// Mean over vertices of the number of vertices at distance `d`; zero past
/// the diameter.
pub fn average_excess(dp: &DistanceProfile, d: usize) -> f64 {
    let n = dp.counts.len();
    if n == 0 {
        return 0.0;
    }
    let total: usize = dp.counts.iter().map(|c| c.get(d).copied().unwrap_or(0)).sum();
    total as f64 / n as f64
}

/// Standard graph families, mostly for tests and examples.
pub mod generators {
    use super::Graph;

    fn build(n: usize, edges: Vec<(usize, usize)>) -> Graph {
        Graph::from_edges(n, &edges).expect("generator produced an invalid graph")
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        build(n, edges)
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        build(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
    }

    pub fn path(n: usize) -> Graph {
        build(n, (1..n).map(|i| (i - 1, i)).collect())
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges = (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j))).collect();
        build(a + b, edges)
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        build(10, edges)
    }

    /// Cartesian product K_n × K_2.
    pub fn prism(n: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
                edges.push((n + i, n + j));
            }
            edges.push((i, n + i));
        }
        build(2 * n, edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_triangle() {
        let g = parse_graph(b"0 1\n1 2\n2 0", GraphFormat::EdgeList).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn edge_list_relabels_in_first_seen_order() {
        let g = parse_graph(b"# comment\nb a\n\na c # trailing\n", GraphFormat::EdgeList).unwrap();
        assert_eq!(g.n(), 3);
        // b=0, a=1, c=2
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn adjacency_matrix_k2() {
        let g = parse_graph(b"01\n10", GraphFormat::AdjMatrix).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn graph6_petersen() {
        let g = parse_graph(b"IheA@GUAo\n", GraphFormat::Graph6).unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edges().len(), 15);
        assert!(g.is_regular() && g.degree(0) == 3);
        assert_eq!(g.to_graph6(), "IheA@GUAo");
    }

    #[test]
    fn graph6_writer_roundtrips() {
        for g in [generators::petersen(), generators::cycle(7), generators::prism(3)] {
            let back = parse_graph(g.to_graph6().as_bytes(), GraphFormat::Graph6).unwrap();
            assert_eq!(back, g);
        }
    }

    #[test]
    fn rejects_loops_multi_edges_and_disconnection() {
        assert!(matches!(
            parse_graph(b"0 0\n", GraphFormat::EdgeList),
            Err(Error::NotSimple(_))
        ));
        assert!(matches!(
            parse_graph(b"0 1\n1 0\n", GraphFormat::EdgeList),
            Err(Error::NotSimple(_))
        ));
        assert!(matches!(
            parse_graph(b"0 1\n2 3\n", GraphFormat::EdgeList),
            Err(Error::Disconnected { reached: 2, n: 4 })
        ));
        assert!(matches!(
            parse_graph(b"11\n10", GraphFormat::AdjMatrix),
            Err(Error::NotSimple(_))
        ));
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(
            parse_graph(b"0 1 2\n", GraphFormat::EdgeList),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_graph(b"01\n00", GraphFormat::AdjMatrix),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_graph(b"010\n10", GraphFormat::AdjMatrix),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(parse_graph(b"Ih", GraphFormat::Graph6), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph(b"~?@A", GraphFormat::Graph6), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph(b"", GraphFormat::EdgeList), Err(Error::Parse { .. })));
    }

    #[test]
    fn distance_profiles_of_small_graphs() {
        let k3 = generators::complete(3);
        let dp = distance_profile(&k3);
        assert_eq!(dp.diameter, 1);
        assert!(dp.counts.iter().all(|c| c == &vec![1, 2]));

        let p3 = generators::path(3);
        let dp = distance_profile(&p3);
        assert_eq!(dp.diameter, 2);
        assert_eq!(dp.counts, vec![vec![1, 1, 1], vec![1, 2, 0], vec![1, 1, 1]]);
        assert!((average_excess(&dp, 2) - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(average_excess(&dp, 0), 1.0);
        assert_eq!(average_excess(&dp, 5), 0.0);

        assert_eq!(average_excess(&distance_profile(&k3), 1), 2.0);
    }

    #[test]
    fn petersen_distance_profile() {
        let dp = distance_profile(&generators::petersen());
        assert_eq!(dp.diameter, 2);
        assert!(dp.counts.iter().all(|c| c == &vec![1, 3, 6]));
        assert_eq!(average_excess(&dp, 2), 6.0);
    }

    #[test]
    fn bipartite_by_colouring() {
        assert!(generators::cycle(6).is_bipartite());
        assert!(!generators::cycle(5).is_bipartite());
        assert!(generators::complete_bipartite(3, 3).is_bipartite());
        assert!(!generators::petersen().is_bipartite());
    }
}
