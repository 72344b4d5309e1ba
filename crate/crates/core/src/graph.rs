//! Undirected simple graphs with an optional declared bipartition.
//!
//! Vertices are dense 0-indexed integers. Adjacency is kept both as sorted
//! neighbor lists and as one bit set per vertex; common-neighborhood queries
//! reduce to word-wise ANDs over the bit rows.

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::rng::seeded_rng;
use num::BigRational;
use rand::Rng;
use std::collections::VecDeque;

/// Eccentricity-derived radius; disconnected graphs carry an explicit marker
/// rather than a sentinel value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Radius {
    Finite(u32),
    Infinite,
}

impl Radius {
    pub fn is_finite(&self) -> bool {
        matches!(self, Radius::Finite(_))
    }

    /// True when the radius is finite and at most `bound`.
    pub fn at_most(&self, bound: u32) -> bool {
        match self {
            Radius::Finite(r) => *r <= bound,
            Radius::Infinite => false,
        }
    }
}

impl std::fmt::Display for Radius {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Radius::Finite(r) => write!(f, "{r}"),
            Radius::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DegreeStats {
    pub min_degree: usize,
    /// Exact average degree 2e/n.
    pub avg_degree: BigRational,
    pub radius: Radius,
}

#[derive(Clone, Debug)]
struct Bipartition {
    a: Vec<u32>,
    b: Vec<u32>,
    /// side[v] = 0 for A, 1 for B
    side: Vec<u8>,
}

/// Undirected simple graph.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<u32>>,
    rows: Vec<Bits>,
    bipartition: Option<Bipartition>,
}

impl Graph {
    /// Builds a graph from an edge list. Endpoint order within a pair does not
    /// matter; self-loops and duplicates are rejected.
    pub fn new(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        let mut rows = vec![Bits::new(n); n];
        let mut m = 0;
        for &(x, y) in edges {
            let (u, v) = if x < y { (x, y) } else { (y, x) };
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if v as usize >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            if rows[u as usize].get(v as usize) {
                return Err(Error::InvalidGraph(format!("duplicate edge {u} {v}")));
            }
            rows[u as usize].set(v as usize);
            rows[v as usize].set(u as usize);
            adj[u as usize].push(v);
            adj[v as usize].push(u);
            m += 1;
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            m,
            adj,
            rows,
            bipartition: None,
        })
    }

    /// Declares the bipartition with side A given explicitly; side B is the
    /// complement. Every edge must cross the two sides.
    pub fn with_bipartition(mut self, side_a: &[u32]) -> Result<Self> {
        let mut side = vec![1u8; self.n];
        for &v in side_a {
            if v as usize >= self.n {
                return Err(Error::VertexOutOfRange { v, n: self.n });
            }
            if side[v as usize] == 0 {
                return Err(Error::InvalidGraph(format!(
                    "vertex {v} listed twice in side A"
                )));
            }
            side[v as usize] = 0;
        }
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if side[u] == side[v as usize] {
                    return Err(Error::InvalidGraph(format!(
                        "edge {u} {v} lies within one side of the declared bipartition"
                    )));
                }
            }
        }
        let a: Vec<u32> = (0..self.n as u32)
            .filter(|&v| side[v as usize] == 0)
            .collect();
        let b: Vec<u32> = (0..self.n as u32)
            .filter(|&v| side[v as usize] == 1)
            .collect();
        self.bipartition = Some(Bipartition { a, b, side });
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn neighbor_bits(&self, v: u32) -> &Bits {
        &self.rows[v as usize]
    }

    #[inline]
    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.rows[u as usize].get(v as usize)
    }

    /// Edges with the smaller endpoint first, ascending.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n as u32 {
            for &v in &self.adj[u as usize] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn has_bipartition(&self) -> bool {
        self.bipartition.is_some()
    }

    pub fn side_a(&self) -> Result<&[u32]> {
        self.bipartition
            .as_ref()
            .map(|b| b.a.as_slice())
            .ok_or(Error::MissingBipartition)
    }

    pub fn side_b(&self) -> Result<&[u32]> {
        self.bipartition
            .as_ref()
            .map(|b| b.b.as_slice())
            .ok_or(Error::MissingBipartition)
    }

    /// 0 if `v` is in side A, 1 if in side B.
    pub fn side_of(&self, v: u32) -> Result<u8> {
        self.bipartition
            .as_ref()
            .map(|b| b.side[v as usize])
            .ok_or(Error::MissingBipartition)
    }

    /// Intersection of the neighborhoods of all members of `s`.
    pub fn common_neighborhood(&self, s: &TSet) -> Result<Vec<u32>> {
        self.common_neighborhood_of(s.members())
    }

    pub fn common_neighborhood_of(&self, vs: &[u32]) -> Result<Vec<u32>> {
        for &v in vs {
            if v as usize >= self.n {
                return Err(Error::VertexOutOfRange { v, n: self.n });
            }
        }
        Ok(self.common_bits_of(vs).ones().map(|i| i as u32).collect())
    }

    /// Bit-row form of the common neighborhood; empty set maps to all vertices.
    pub fn common_bits_of(&self, vs: &[u32]) -> Bits {
        let mut acc = match vs.first() {
            Some(&v) => self.rows[v as usize].clone(),
            None => Bits::full(self.n),
        };
        for &v in &vs[1..] {
            acc.and_assign(&self.rows[v as usize]);
        }
        acc
    }

    /// Exact minimum degree, average degree, and radius (all-pairs BFS).
    pub fn degree_stats(&self) -> Result<DegreeStats> {
        if self.n == 0 {
            return Err(Error::InvalidParams("degree_stats requires n >= 1".into()));
        }
        let min_degree = self.adj.iter().map(Vec::len).min().unwrap();
        let avg_degree = BigRational::new((2 * self.m).into(), self.n.into());
        let mut radius = Radius::Infinite;
        let mut best: Option<u32> = None;
        for v in 0..self.n as u32 {
            match self.eccentricity(v) {
                Some(ecc) => {
                    best = Some(best.map_or(ecc, |b| b.min(ecc)));
                }
                None => {
                    best = None;
                    break;
                }
            }
        }
        if let Some(ecc) = best {
            radius = Radius::Finite(ecc);
        }
        Ok(DegreeStats {
            min_degree,
            avg_degree,
            radius,
        })
    }

    /// Max BFS distance from `v`, or None if some vertex is unreachable.
    fn eccentricity(&self, v: u32) -> Option<u32> {
        let mut dist = vec![u32::MAX; self.n];
        let mut queue = VecDeque::new();
        dist[v as usize] = 0;
        queue.push_back(v);
        let mut seen = 1;
        let mut ecc = 0;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u as usize] {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = dist[u as usize] + 1;
                    ecc = ecc.max(dist[w as usize]);
                    seen += 1;
                    queue.push_back(w);
                }
            }
        }
        (seen == self.n).then_some(ecc)
    }

    /// Subgraph induced by `w`, re-indexed densely. `vertices[new] = old`.
    /// A declared bipartition is restricted onto the kept vertices.
    pub fn induced_subgraph(&self, w: &[u32]) -> Result<Induced> {
        let mut vertices: Vec<u32> = w.to_vec();
        vertices.sort_unstable();
        vertices.dedup();
        for &v in &vertices {
            if v as usize >= self.n {
                return Err(Error::VertexOutOfRange { v, n: self.n });
            }
        }
        self.induced_in_order(&vertices)
    }

    /// Same as `induced_subgraph` but keeps the caller's vertex order, so a
    /// bipartite caller can place one side first and get a prefix bipartition.
    pub fn induced_in_order(&self, vertices: &[u32]) -> Result<Induced> {
        let mut new_id = vec![u32::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            if v as usize >= self.n {
                return Err(Error::VertexOutOfRange { v, n: self.n });
            }
            if new_id[v as usize] != u32::MAX {
                return Err(Error::InvalidGraph(format!(
                    "vertex {v} repeated in induced set"
                )));
            }
            new_id[v as usize] = i as u32;
        }
        let mut edges = Vec::new();
        for &v in vertices {
            for &u in &self.adj[v as usize] {
                if u > v && new_id[u as usize] != u32::MAX {
                    edges.push((new_id[v as usize], new_id[u as usize]));
                }
            }
        }
        let mut graph = Graph::new(vertices.len(), &edges)?;
        if let Some(bp) = &self.bipartition {
            let side_a: Vec<u32> = vertices
                .iter()
                .enumerate()
                .filter(|(_, &v)| bp.side[v as usize] == 0)
                .map(|(i, _)| i as u32)
                .collect();
            graph = graph.with_bipartition(&side_a)?;
        }
        Ok(Induced {
            graph,
            vertices: vertices.to_vec(),
        })
    }

    /// Spanning bipartite subgraph keeping at least half of the edges.
    ///
    /// A graph that is already two-colorable keeps every edge (a declared
    /// bipartition is reused, otherwise one is found by BFS). Other inputs get
    /// a seeded random bisection improved by local moves: a vertex flips sides
    /// while its cross-degree is below its own-side degree, which terminates
    /// with every vertex at cross-degree >= own-side degree and hence at least
    /// ceil(e/2) edges kept.
    pub fn bipartite_half(&self, seed: u64) -> Graph {
        if self.bipartition.is_some() {
            return self.clone();
        }
        if let Some(side) = self.two_coloring() {
            return self.keep_cross_edges(&side);
        }
        let mut rng = seeded_rng(seed);
        let mut side: Vec<u8> = (0..self.n).map(|_| rng.gen_range(0..2u8)).collect();
        loop {
            let mut moved = false;
            for v in 0..self.n {
                let cross = self.adj[v]
                    .iter()
                    .filter(|&&u| side[u as usize] != side[v])
                    .count();
                if 2 * cross < self.adj[v].len() {
                    side[v] ^= 1;
                    moved = true;
                }
            }
            if !moved {
                break;
            }
        }
        self.keep_cross_edges(&side)
    }

    /// BFS 2-coloring; None if an odd cycle is found.
    fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        for root in 0..self.n as u32 {
            if side[root as usize] != u8::MAX {
                continue;
            }
            side[root as usize] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u as usize] {
                    if side[w as usize] == u8::MAX {
                        side[w as usize] = side[u as usize] ^ 1;
                        queue.push_back(w);
                    } else if side[w as usize] == side[u as usize] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    fn keep_cross_edges(&self, side: &[u8]) -> Graph {
        let edges: Vec<(u32, u32)> = self
            .edges()
            .into_iter()
            .filter(|&(u, v)| side[u as usize] != side[v as usize])
            .collect();
        let side_a: Vec<u32> = (0..self.n as u32)
            .filter(|&v| side[v as usize] == 0)
            .collect();
        Graph::new(self.n, &edges)
            .expect("cross edges of a valid graph stay valid")
            .with_bipartition(&side_a)
            .expect("cross edges respect the bisection")
    }
}

/// Induced subgraph together with the new-id -> old-id map.
#[derive(Clone, Debug)]
pub struct Induced {
    pub graph: Graph,
    pub vertices: Vec<u32>,
}

/// Sorted set of t distinct vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TSet {
    members: Vec<u32>,
}

impl TSet {
    pub fn new(mut members: Vec<u32>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::InvalidParams("a t-set needs t >= 1".into()));
        }
        members.sort_unstable();
        if members.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParams(
                "t-set members must be distinct".into(),
            ));
        }
        Ok(TSet { members })
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn t(&self) -> usize {
        self.members.len()
    }

    pub fn encode(&self) -> String {
        let parts: Vec<String> = self.members.iter().map(u32::to_string).collect();
        parts.join(",")
    }

    pub fn decode(s: &str) -> Result<Self> {
        let members = s
            .split(',')
            .map(|p| {
                p.parse::<u32>()
                    .map_err(|_| Error::InvalidParams(format!("bad t-set `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        TSet::new(members)
    }
}

/// Unordered set of t pairwise vertex-disjoint edges of a host graph, kept in
/// canonical order (sorted by smaller endpoint).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TMatching {
    edges: Vec<(u32, u32)>,
}

impl TMatching {
    pub fn new(host: &Graph, edges: Vec<(u32, u32)>) -> Result<Self> {
        if edges.is_empty() {
            return Err(Error::InvalidParams("a t-matching needs t >= 1".into()));
        }
        let mut edges: Vec<(u32, u32)> = edges
            .into_iter()
            .map(|(x, y)| if x < y { (x, y) } else { (y, x) })
            .collect();
        edges.sort_unstable();
        let mut seen = Bits::new(host.n());
        for &(u, v) in &edges {
            if !host.has_edge(u, v) {
                return Err(Error::AnchorNotInGraph);
            }
            if seen.get(u as usize) || seen.get(v as usize) {
                return Err(Error::InvalidParams(
                    "matching edges must be vertex-disjoint".into(),
                ));
            }
            seen.set(u as usize);
            seen.set(v as usize);
        }
        Ok(TMatching { edges })
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn t(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> Vec<u32> {
        let mut vs: Vec<u32> = self.edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.sort_unstable();
        vs
    }

    pub fn encode(&self) -> String {
        let parts: Vec<String> = self.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
        parts.join(",")
    }

    pub fn decode(host: &Graph, s: &str) -> Result<Self> {
        let mut edges = Vec::new();
        for part in s.split(',') {
            let (u, v) = part
                .split_once('-')
                .ok_or_else(|| Error::InvalidParams(format!("bad matching `{s}`")))?;
            let u = u
                .parse::<u32>()
                .map_err(|_| Error::InvalidParams(format!("bad matching `{s}`")))?;
            let v = v
                .parse::<u32>()
                .map_err(|_| Error::InvalidParams(format!("bad matching `{s}`")))?;
            edges.push((u, v));
        }
        TMatching::new(host, edges)
    }
}
