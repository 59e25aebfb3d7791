#![allow(dead_code)]

use std::collections::VecDeque;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spectra_core::{Graph, Spectrum};

/// Spectral excess per vertex below which double precision no longer
/// resolves the last predistance polynomial.
pub const EXCESS_RESOLUTION: f64 = 1e-15;

pub fn resolvable(pre: &spectra_core::PreintersectionSet, n: usize) -> bool {
    pre.spectral_excess() >= EXCESS_RESOLUTION * n as f64
}

/// Rounding in quantities that divide by `p_d(λ_0)` grows like
/// `ε n / p_d(λ_0)`; tight tolerances are checked only above this ratio.
pub const WELL_RESOLVED: f64 = 1e-10;

pub fn well_resolved(pre: &spectra_core::PreintersectionSet, n: usize) -> bool {
    pre.spectral_excess() >= WELL_RESOLVED * n as f64
}

pub fn sqrt13() -> f64 {
    13f64.sqrt()
}

/// Spectrum of the 9-vertex example graph with five distinct eigenvalues.
pub fn spectrum_447() -> Spectrum {
    let r = sqrt13();
    Spectrum::new(
        vec![3.0, (-1.0 + r) / 2.0, 0.0, -1.0, (-1.0 - r) / 2.0],
        vec![1, 2, 3, 1, 2],
    )
    .unwrap()
}

/// A graph with that spectrum, found by search; it may have cospectral
/// mates, so only spectral quantities are compared against it.
pub fn graph_447() -> Graph {
    Graph::from_edges(
        9,
        &[
            (0, 5),
            (0, 8),
            (1, 3),
            (1, 5),
            (2, 3),
            (2, 4),
            (2, 5),
            (2, 7),
            (4, 5),
            (4, 6),
            (4, 8),
            (6, 7),
        ],
    )
    .unwrap()
}

/// Ω of the example, as (numerator, denominator) pairs.
pub const OMEGA_447: [&[(i64, i64)]; 5] = [
    &[(1, 1)],
    &[(0, 1), (9, 8)],
    &[(-268, 157), (-201, 1256), (201, 314)],
    &[(23607, 50711), (-83082, 50711), (-732, 2983), (183, 646)],
    &[(78, 323), (547, 1292), (-32, 57), (-113, 969), (1, 12)],
];

pub const HOFFMAN_447: [(i64, i64); 5] = [(0, 1), (-1, 4), (-1, 6), (1, 6), (1, 12)];

pub const ALPHA_447: [(i64, i64); 5] = [(0, 1), (1, 4), (387, 628), (27036, 50711), (-129, 323)];
pub const BETA_447: [(i64, i64); 4] = [(3, 1), (67, 36), (6588, 10519), (4082, 19703)];
pub const GAMMA_447: [(i64, i64); 4] = [(8, 9), (471, 268), (21641, 9577), (1098, 323)];

pub fn frac((p, q): (i64, i64)) -> f64 {
    p as f64 / q as f64
}

pub fn rel_err(got: f64, want: f64) -> f64 {
    if want == 0.0 {
        got.abs()
    } else {
        ((got - want) / want).abs()
    }
}

pub fn omega_447() -> Vec<Vec<f64>> {
    OMEGA_447
        .iter()
        .map(|row| row.iter().copied().map(frac).collect())
        .collect()
}

pub fn petersen_spectrum() -> Spectrum {
    Spectrum::new(vec![3.0, 1.0, -2.0], vec![1, 5, 4]).unwrap()
}

/// Random connected simple graph on `2..=max_n` vertices.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    loop {
        let n = rng.gen_range(2..=max_n);
        let p: f64 = rng.gen_range(0.15..0.85);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        if let Ok(g) = Graph::from_edges(n, &edges) {
            return g;
        }
    }
}

pub fn random_graphs(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_connected_graph(&mut rng, max_n)).collect()
}

/// All-pairs distances by Floyd–Warshall on the edge list.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for &(u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Mean number of vertices at distance exactly `dist`.
pub fn mean_at_distance(g: &Graph, dist: usize) -> f64 {
    let d = floyd_warshall(g);
    let count: usize = d.iter().map(|row| row.iter().filter(|&&x| x == dist).count()).sum();
    count as f64 / g.n() as f64
}

/// Two-colouring by an explicit queue, independent of the library's check.
pub fn two_colourable(g: &Graph) -> bool {
    let n = g.n();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut colour = vec![None; n];
    for s in 0..n {
        if colour[s].is_some() {
            continue;
        }
        colour[s] = Some(false);
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            let cu = colour[u].unwrap();
            for &v in &adj[u] {
                match colour[v] {
                    None => {
                        colour[v] = Some(!cu);
                        q.push_back(v);
                    }
                    Some(cv) if cv == cu => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// Shortest cycle length (any parity) and shortest odd cycle length, by
/// BFS from every vertex.
pub fn girth_and_odd_girth(g: &Graph) -> (Option<usize>, Option<usize>) {
    let n = g.n();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut girth: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &v in &adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push_back(v);
                } else if parent[u] != v {
                    let len = dist[u] + dist[v] + 1;
                    girth = Some(girth.map_or(len, |g| g.min(len)));
                }
            }
        }
    }
    // shortest odd closed walk contains an odd cycle of the same length;
    // track parity-layered distances
    let mut odd: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![[usize::MAX; 2]; n];
        dist[s][0] = 0;
        let mut q = VecDeque::from([(s, 0usize)]);
        while let Some((u, p)) = q.pop_front() {
            for &v in &adj[u] {
                let np = 1 - p;
                if dist[v][np] == usize::MAX {
                    dist[v][np] = dist[u][p] + 1;
                    q.push_back((v, np));
                }
            }
        }
        if dist[s][1] != usize::MAX {
            odd = Some(odd.map_or(dist[s][1], |o| o.min(dist[s][1])));
        }
    }
    (girth, odd)
}

/// Connected circulant graph on `n` vertices: jump 1 plus a random subset of
/// the other jumps, so always regular.
pub fn random_circulant(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(4..=max_n);
    let mut jumps = vec![1];
    for j in 2..=n / 2 {
        if rng.gen_bool(0.4) {
            jumps.push(j);
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for &j in &jumps {
            let v = (u + j) % n;
            let e = (u.min(v), u.max(v));
            if !edges.contains(&e) {
                edges.push(e);
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}
