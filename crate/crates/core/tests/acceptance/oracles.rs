//! Naive enumeration oracles. Each one recomputes a count by direct search,
//! sharing no code path with the library counters it checks.

use smalldense::graph::Graph;

/// All k-subsets of 0..n as sorted vectors.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    fn go(n: usize, k: usize, start: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n as u32 {
            cur.push(v);
            go(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    go(n, k, 0, &mut cur, &mut out);
    out
}

/// Stars K_{1,t}: a center plus a t-subset of its neighborhood, enumerated
/// subset by subset.
pub fn stars(g: &Graph, t: usize) -> u64 {
    let mut total = 0u64;
    for c in 0..g.n() as u32 {
        let nbrs = g.neighbors(c);
        total += count_subsets(nbrs.len(), t);
    }
    total
}

fn count_subsets(n: usize, k: usize) -> u64 {
    // explicit lattice walk rather than a closed form
    if k > n {
        return 0;
    }
    let mut row = vec![0u64; k + 1];
    row[0] = 1;
    for _ in 0..n {
        for j in (1..=k).rev() {
            row[j] += row[j - 1];
        }
    }
    row[k]
}

/// Unordered pairs of disjoint t-sets with every cross pair adjacent.
pub fn bicliques(g: &Graph, t: usize) -> u64 {
    let sets = combinations(g.n(), t);
    let mut count = 0u64;
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if sets[i].iter().any(|v| sets[j].contains(v)) {
                continue;
            }
            let all = sets[i]
                .iter()
                .all(|&u| sets[j].iter().all(|&v| g.has_edge(u, v)));
            if all {
                count += 1;
            }
        }
    }
    count
}

/// t-subsets of the edge list that are pairwise vertex-disjoint.
pub fn t_matchings(g: &Graph, t: usize) -> u64 {
    let edges = g.edges();
    let subsets = combinations(edges.len(), t);
    let mut count = 0u64;
    'outer: for sub in subsets {
        for a in 0..sub.len() {
            for b in a + 1..sub.len() {
                let (u1, v1) = edges[sub[a] as usize];
                let (u2, v2) = edges[sub[b] as usize];
                if u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2 {
                    continue 'outer;
                }
            }
        }
        count += 1;
    }
    count
}

/// (W_A, W_B, C4 count) of a bipartite graph by direct loops.
pub fn cherries_and_c4(g: &Graph) -> (u64, u64, u64) {
    let a = g.side_a().unwrap();
    let b = g.side_b().unwrap();
    let cherry = |side: &[u32]| {
        let mut w = 0u64;
        for &c in side {
            let d = g.neighbors(c).len();
            for i in 0..d {
                for _ in i + 1..d {
                    w += 1;
                }
            }
        }
        w
    };
    let mut s = 0u64;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            for k in 0..b.len() {
                for l in k + 1..b.len() {
                    if g.has_edge(a[i], b[k])
                        && g.has_edge(a[i], b[l])
                        && g.has_edge(a[j], b[k])
                        && g.has_edge(a[j], b[l])
                    {
                        s += 1;
                    }
                }
            }
        }
    }
    (cherry(a), cherry(b), s)
}

/// C4 count of an arbitrary graph: ordered 4-cycles / 8.
pub fn c4(g: &Graph) -> u64 {
    let n = g.n() as u32;
    let mut ordered = 0u64;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if a != b
                        && a != c
                        && a != d
                        && b != c
                        && b != d
                        && c != d
                        && g.has_edge(a, b)
                        && g.has_edge(b, c)
                        && g.has_edge(c, d)
                        && g.has_edge(d, a)
                    {
                        ordered += 1;
                    }
                }
            }
        }
    }
    ordered / 8
}

/// H_{1,t} incidences: for each edge, count t-matchings between the naive
/// neighbor lists of its endpoints.
pub fn h1t_incidences(g: &Graph, t: usize) -> u64 {
    let mut total = 0u64;
    for (u, v) in g.edges() {
        let (x, y) = if g.side_of(u).unwrap() == 0 {
            (u, v)
        } else {
            (v, u)
        };
        let xs: Vec<u32> = (0..g.n() as u32)
            .filter(|&w| w != x && g.has_edge(w, y))
            .collect();
        let ys: Vec<u32> = (0..g.n() as u32)
            .filter(|&w| w != y && g.has_edge(w, x))
            .collect();
        let mut cross: Vec<(u32, u32)> = Vec::new();
        for &p in &xs {
            for &q in &ys {
                if g.has_edge(p, q) {
                    cross.push((p, q));
                }
            }
        }
        let subsets = combinations(cross.len(), t);
        'sub: for sub in subsets {
            for a in 0..sub.len() {
                for b in a + 1..sub.len() {
                    let (p1, q1) = cross[sub[a] as usize];
                    let (p2, q2) = cross[sub[b] as usize];
                    if p1 == p2 || q1 == q2 {
                        continue 'sub;
                    }
                }
            }
            total += 1;
        }
    }
    total
}

/// Injective edge-preserving maps from a pattern into a host.
pub fn count_monomorphisms(pattern_n: usize, pattern_edges: &[(u32, u32)], host: &Graph) -> u64 {
    let mut pat_adj = vec![Vec::new(); pattern_n];
    for &(u, v) in pattern_edges {
        pat_adj[u as usize].push(v);
        pat_adj[v as usize].push(u);
    }
    let mut assign: Vec<Option<u32>> = vec![None; pattern_n];
    let mut used = vec![false; host.n()];
    fn go(
        p: usize,
        pat_adj: &[Vec<u32>],
        host: &Graph,
        assign: &mut Vec<Option<u32>>,
        used: &mut Vec<bool>,
    ) -> u64 {
        if p == pat_adj.len() {
            return 1;
        }
        let mut total = 0u64;
        'cand: for w in 0..host.n() as u32 {
            if used[w as usize] {
                continue;
            }
            for &q in &pat_adj[p] {
                if let Some(img) = assign[q as usize] {
                    if !host.has_edge(w, img) {
                        continue 'cand;
                    }
                }
            }
            assign[p] = Some(w);
            used[w as usize] = true;
            total += go(p + 1, pat_adj, host, assign, used);
            assign[p] = None;
            used[w as usize] = false;
        }
        total
    }
    go(0, &pat_adj, host, &mut assign, &mut used)
}

/// Subgraph copies of a pattern: monomorphisms divided by the pattern's
/// self-monomorphism count.
pub fn copies_of_pattern(pattern_n: usize, pattern_edges: &[(u32, u32)], host: &Graph) -> u64 {
    let pattern = Graph::new(pattern_n, pattern_edges).unwrap();
    let auts = count_monomorphisms(pattern_n, pattern_edges, &pattern);
    let monos = count_monomorphisms(pattern_n, pattern_edges, host);
    assert_eq!(monos % auts, 0, "monomorphism count must split into copies");
    monos / auts
}

/// t-spider pattern: center 0, midpoints 1..=t, leaves t+1..=2t.
pub fn spider_pattern(t: u32) -> (usize, Vec<(u32, u32)>) {
    let mut edges = Vec::new();
    for i in 1..=t {
        edges.push((0, i));
        edges.push((i, t + i));
    }
    (2 * t as usize + 1, edges)
}

/// Two K_{s,t} blocks joined by an (s+t)-matching, labeled independently of
/// the library generator: x_i = i, y_i = s+i, x'_j = 2s+j, y'_j = 2s+t+j.
pub fn hst_pattern(s: u32, t: u32) -> (usize, Vec<(u32, u32)>) {
    let x = |i: u32| i;
    let y = |i: u32| s + i;
    let xp = |j: u32| 2 * s + j;
    let yp = |j: u32| 2 * s + t + j;
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
    (2 * (s + t) as usize, edges)
}
