//! Seeded instance builders shared by the acceptance criteria.

use rand::Rng;
use smalldense::graph::Graph;
use smalldense::rng::seeded_rng;

pub fn random_bipartite(a: u32, b: u32, p: f64, seed: u64) -> Graph {
    let mut rng = seeded_rng(seed);
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            if rng.gen::<f64>() < p {
                edges.push((u, a + v));
            }
        }
    }
    let side: Vec<u32> = (0..a).collect();
    Graph::new((a + b) as usize, &edges)
        .unwrap()
        .with_bipartition(&side)
        .unwrap()
}

/// Bipartite graph with exactly m cross edges, sampled uniformly.
pub fn random_bipartite_gnm(a: u32, b: u32, m: usize, seed: u64) -> Graph {
    let mut pairs: Vec<(u32, u32)> = (0..a)
        .flat_map(|u| (0..b).map(move |v| (u, a + v)))
        .collect();
    let mut rng = seeded_rng(seed);
    for i in 0..m {
        let j = rng.gen_range(i..pairs.len());
        pairs.swap(i, j);
    }
    pairs.truncate(m);
    let side: Vec<u32> = (0..a).collect();
    Graph::new((a + b) as usize, &pairs)
        .unwrap()
        .with_bipartition(&side)
        .unwrap()
}

/// Union of k seeded Hamilton cycles; duplicate edges are dropped, so the
/// result is near-regular with max degree at most 2k.
pub fn hamilton_union(n: usize, k: usize, seed: u64) -> Graph {
    let mut rng = seeded_rng(seed);
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for _ in 0..k {
        let mut perm: Vec<u32> = (0..n as u32).collect();
        for i in (1..n).rev() {
            let j = rng.gen_range(0..=i);
            perm.swap(i, j);
        }
        for i in 0..n {
            let u = perm[i];
            let v = perm[(i + 1) % n];
            let key = (u.min(v), u.max(v));
            if u != v && seen.insert(key) {
                edges.push(key);
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// d-regular bipartite circulant on two sides of width w: side A is 0..w and
/// vertex k joins b_{(k+o) mod w} for d seeded offsets o.
pub fn circulant_biregular(w: u32, d: u32, seed: u64) -> Graph {
    let mut rng = seeded_rng(seed);
    let mut offsets: Vec<u32> = (0..w).collect();
    for i in 0..d as usize {
        let j = rng.gen_range(i..w as usize);
        offsets.swap(i, j);
    }
    offsets.truncate(d as usize);
    let mut edges = Vec::with_capacity((w * d) as usize);
    for k in 0..w {
        for &o in &offsets {
            edges.push((k, w + (k + o) % w));
        }
    }
    let side: Vec<u32> = (0..w).collect();
    Graph::new(2 * w as usize, &edges)
        .unwrap()
        .with_bipartition(&side)
        .unwrap()
}

/// Incidence graph of the 7-point projective plane: 7 points, 7 lines,
/// girth 6.
pub fn fano_incidence() -> Graph {
    let lines: [[u32; 3]; 7] = [
        [0, 1, 2],
        [0, 3, 4],
        [0, 5, 6],
        [1, 3, 5],
        [1, 4, 6],
        [2, 3, 6],
        [2, 4, 5],
    ];
    let mut edges = Vec::new();
    for (li, pts) in lines.iter().enumerate() {
        for &p in pts {
            edges.push((p, 7 + li as u32));
        }
    }
    let side: Vec<u32> = (0..7).collect();
    Graph::new(14, &edges)
        .unwrap()
        .with_bipartition(&side)
        .unwrap()
}

/// Every edge of K4 subdivided once: bipartite with girth 6 on 10 vertices.
pub fn subdivided_k4() -> Graph {
    let mut edges = Vec::new();
    let mut next = 4u32;
    for u in 0..4u32 {
        for v in u + 1..4 {
            edges.push((u, next));
            edges.push((v, next));
            next += 1;
        }
    }
    let side: Vec<u32> = (0..4).collect();
    Graph::new(10, &edges)
        .unwrap()
        .with_bipartition(&side)
        .unwrap()
}
