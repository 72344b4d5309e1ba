//! Seeded graph generators. Fixed seed means fixed output.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::seeded_rng;
use rand::Rng;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GraphKind {
    Gnp {
        n: usize,
        p: f64,
    },
    Gnm {
        n: usize,
        m: usize,
    },
    Complete {
        n: usize,
    },
    CompleteBipartite {
        a: u32,
        b: u32,
    },
    Cycle {
        n: usize,
    },
    HypercubeQ3,
    /// Two complete bipartite blocks K_{s,t} joined by an (s+t)-matching.
    Hst {
        s: u32,
        t: u32,
    },
}

pub fn generate(kind: GraphKind, seed: u64) -> Result<Graph> {
    match kind {
        GraphKind::Gnp { n, p } => gnp(n, p, seed),
        GraphKind::Gnm { n, m } => gnm(n, m, seed),
        GraphKind::Complete { n } => {
            let edges = all_pairs(n);
            Graph::new(n, &edges)
        }
        GraphKind::CompleteBipartite { a, b } => complete_bipartite(a, b),
        GraphKind::Cycle { n } => cycle(n),
        GraphKind::HypercubeQ3 => hypercube_q3(),
        GraphKind::Hst { s, t } => hst(s, t),
    }
}

fn all_pairs(n: usize) -> Vec<(u32, u32)> {
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n as u32 {
        for v in (u + 1)..n as u32 {
            edges.push((u, v));
        }
    }
    edges
}

fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParams(format!(
            "gnp needs p in [0,1], got {p}"
        )));
    }
    let mut rng = seeded_rng(seed);
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in (u + 1)..n as u32 {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges)
}

fn gnm(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let total = n * n.saturating_sub(1) / 2;
    if m > total {
        return Err(Error::InvalidParams(format!(
            "gnm: m = {m} exceeds {total} possible edges"
        )));
    }
    if total > 50_000_000 {
        return Err(Error::InvalidParams(
            "gnm: n too large to enumerate candidate pairs".into(),
        ));
    }
    let mut pairs = all_pairs(n);
    let mut rng = seeded_rng(seed);
    // partial Fisher-Yates: the first m slots become the sample
    for i in 0..m {
        let j = rng.gen_range(i..pairs.len());
        pairs.swap(i, j);
    }
    pairs.truncate(m);
    pairs.sort_unstable();
    Graph::new(n, &pairs)
}

/// K_{a,b} with side A on vertices 0..a.
pub fn complete_bipartite(a: u32, b: u32) -> Result<Graph> {
    let n = (a + b) as usize;
    let mut edges = Vec::with_capacity((a * b) as usize);
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    let side_a: Vec<u32> = (0..a).collect();
    Graph::new(n, &edges)?.with_bipartition(&side_a)
}

fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParams(format!("cycle needs n >= 3, got {n}")));
    }
    let mut edges: Vec<(u32, u32)> = (0..n as u32 - 1).map(|i| (i, i + 1)).collect();
    edges.push((0, n as u32 - 1));
    Graph::new(n, &edges)
}

/// The 3-dimensional cube on 8 vertices, relabeled so the even-parity class
/// forms the id prefix and the bipartition serializes.
fn hypercube_q3() -> Result<Graph> {
    let labels: Vec<u32> = {
        let mut even: Vec<u32> = (0..8)
            .filter(|x: &u32| x.count_ones().is_multiple_of(2))
            .collect();
        let odd: Vec<u32> = (0..8)
            .filter(|x: &u32| !x.count_ones().is_multiple_of(2))
            .collect();
        even.extend(odd);
        even
    };
    let mut id_of = [0u32; 8];
    for (i, &l) in labels.iter().enumerate() {
        id_of[l as usize] = i as u32;
    }
    let mut edges = Vec::new();
    for x in 0..8u32 {
        for bit in 0..3 {
            let y = x ^ (1 << bit);
            if x < y {
                edges.push((id_of[x as usize], id_of[y as usize]));
            }
        }
    }
    Graph::new(8, &edges)?.with_bipartition(&[0, 1, 2, 3])
}

/// Start with a copy of K_{s,t} on {x_i} x {x'_j} and another on
/// {y_i} x {y'_j}, then join them by the (s+t)-matching x_i y_i, x'_j y'_j.
/// Side A = {x_i} and {y'_j} occupies the id prefix.
fn hst(s: u32, t: u32) -> Result<Graph> {
    if s < 1 || t < 1 {
        return Err(Error::InvalidParams("hst needs s, t >= 1".into()));
    }
    // ids: x_i -> i, y'_j -> s+j, x'_j -> s+t+j, y_i -> s+2t+i
    let x = |i: u32| i;
    let yp = |j: u32| s + j;
    let xp = |j: u32| s + t + j;
    let y = |i: u32| s + 2 * t + i;
    let mut edges = Vec::new();
    for i in 0..s {
        for j in 0..t {
            edges.push((x(i), xp(j)));
            edges.push((y(i), yp(j)));
        }
    }
    for i in 0..s {
        edges.push((x(i), y(i)));
    }
    for j in 0..t {
        edges.push((xp(j), yp(j)));
    }
    let side_a: Vec<u32> = (0..s + t).collect();
    Graph::new(2 * (s + t) as usize, &edges)?.with_bipartition(&side_a)
}
