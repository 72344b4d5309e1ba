//! Exact counters for the structures the extraction pipeline consumes:
//! stars, bicliques, t-matchings, cherries and four-cycles, link graphs,
//! H_{1,t} and H_{s,t} copies, spiders, and biclique-freeness probes.
//!
//! Counts are unbounded integers and every reported lower bound is an exact
//! rational, so inequality checks never round.

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::graph::{Graph, Induced, TMatching, TSet};
use num::{BigInt, BigRational, BigUint, One, Zero};
use std::collections::BTreeSet;

/// Default ceiling on enumerated objects; exceeding a cap is an error, never
/// silent truncation.
pub const DEFAULT_CAP: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructureKind {
    StarT,
    BicliqueTT,
    TMatching,
    CherryA,
    CherryB,
    C4,
    H1T,
    SpiderT,
    HST,
}

impl StructureKind {
    pub fn name(&self) -> &'static str {
        match self {
            StructureKind::StarT => "star_t",
            StructureKind::BicliqueTT => "biclique_tt",
            StructureKind::TMatching => "t_matching",
            StructureKind::CherryA => "cherry_A",
            StructureKind::CherryB => "cherry_B",
            StructureKind::C4 => "c4",
            StructureKind::H1T => "h_1t",
            StructureKind::SpiderT => "spider_t",
            StructureKind::HST => "h_st",
        }
    }
}

/// One counter run: the exact count, the matching lower bound evaluated on
/// this input, and whether the bound's hypotheses held. The bound is reported
/// even when the hypotheses fail; only `hypotheses_met` gates inequality tests.
#[derive(Clone, Debug)]
pub struct CountReport {
    pub structure: StructureKind,
    pub t: u32,
    pub n: usize,
    pub m: usize,
    pub count: BigUint,
    pub bound: Option<BigRational>,
    pub hypotheses_met: bool,
}

impl CountReport {
    /// `structure,t,n,m,count,bound_num,bound_den,hypotheses_met`
    pub fn csv_row(&self) -> String {
        let (num, den) = match &self.bound {
            Some(b) => (b.numer().to_string(), b.denom().to_string()),
            None => ("0".into(), "1".into()),
        };
        format!(
            "{},{},{},{},{},{},{},{}",
            self.structure.name(),
            self.t,
            self.n,
            self.m,
            self.count,
            num,
            den,
            self.hypotheses_met
        )
    }

    pub fn csv_header() -> &'static str {
        "structure,t,n,m,count,bound_num,bound_den,hypotheses_met"
    }

    /// count >= bound, exact.
    pub fn count_meets_bound(&self) -> bool {
        match &self.bound {
            Some(b) => BigRational::from_integer(BigInt::from(self.count.clone())) >= *b,
            None => true,
        }
    }
}

pub fn binom(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    num::integer::binomial(BigUint::from(n), BigUint::from(k))
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n)
        .map(BigUint::from)
        .fold(BigUint::one(), |a, b| a * b)
}

fn big_pow(base: u64, exp: u32) -> BigUint {
    BigUint::from(base).pow(exp)
}

fn ratio(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Number of t-stars K_{1,t}: sum over vertices of C(d(x), t).
pub fn count_stars(g: &Graph, t: u32) -> BigUint {
    (0..g.n() as u32)
        .map(|v| binom(g.degree(v) as u64, t as u64))
        .sum()
}

/// 2 to the power `e` as a rational, `e` possibly negative.
fn pow2_rational(e: i64) -> BigRational {
    if e >= 0 {
        ratio(big_pow(2, e as u32), BigUint::one())
    } else {
        ratio(BigUint::one(), big_pow(2, (-e) as u32))
    }
}

/// Unordered pairs {S, T} of disjoint t-sets with all t^2 cross edges present.
///
/// Each adjacent ordered pair is counted once from each side, so the count is
/// sum over t-sets S of C(d*(S), t), halved. The reported lower bound is
/// c_t E^{t^2} / n^{2t^2-2t} with c_t = 2^{t^2-t-3} / (t!)^2, and the
/// hypotheses are E >= t n^{2-1/t} (compared as E^t >= t^t n^{2t-1}) and
/// n >= t^2.
pub fn count_bicliques(g: &Graph, t: u32, cap: u64) -> Result<CountReport> {
    if t < 1 {
        return Err(Error::InvalidParams("count_bicliques needs t >= 1".into()));
    }
    let sets = enumerate_t_sets(g, t, cap)?;
    let mut doubled = BigUint::zero();
    for s in &sets {
        let d_star = g.common_bits_of(s.members()).count();
        doubled += binom(d_star as u64, t as u64);
    }
    let two: BigUint = BigUint::from(2u32);
    debug_assert!((&doubled % &two).is_zero());
    let count = doubled / two;

    let n = g.n();
    let e = g.m() as u64;
    let t2 = t * t;
    let c_t = pow2_rational(t as i64 * t as i64 - t as i64 - 3)
        / BigRational::from_integer(BigInt::from(factorial(t as u64).pow(2)));
    let bound = c_t * ratio(big_pow(e, t2), big_pow(n as u64, 2 * t2 - 2 * t));
    let hyp_edges = big_pow(e, t) >= big_pow(t as u64, t) * big_pow(n as u64, 2 * t - 1);
    let hyp_n = n as u64 >= (t as u64) * (t as u64);
    Ok(CountReport {
        structure: StructureKind::BicliqueTT,
        t,
        n,
        m: g.m(),
        count,
        bound: Some(bound),
        hypotheses_met: hyp_edges && hyp_n,
    })
}

/// All t-subsets of V(G) in lexicographic order, capped.
pub fn enumerate_t_sets(g: &Graph, t: u32, cap: u64) -> Result<Vec<TSet>> {
    let n = g.n() as u64;
    let total = binom(n, t as u64);
    if total > BigUint::from(cap) {
        return Err(Error::CapExceeded {
            what: "t-set enumeration",
            needed: u64::try_from(&total).unwrap_or(u64::MAX),
            cap,
        });
    }
    let t = t as usize;
    let mut out = Vec::new();
    if t > g.n() {
        return Ok(out);
    }
    let mut cur: Vec<u32> = (0..t as u32).collect();
    loop {
        out.push(TSet::new(cur.clone()).expect("combination is sorted and distinct"));
        // next combination
        let mut i = t;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if cur[i] < (g.n() - t + i) as u32 {
                cur[i] += 1;
                for j in i + 1..t {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Counts t-matchings without materializing them.
fn count_matchings_from(edges: &[(u32, u32)], used: &mut Bits, t: u32, start: usize) -> BigUint {
    if t == 0 {
        return BigUint::one();
    }
    let mut total = BigUint::zero();
    for i in start..edges.len() {
        let (u, v) = edges[i];
        if used.get(u as usize) || used.get(v as usize) {
            continue;
        }
        used.set(u as usize);
        used.set(v as usize);
        total += count_matchings_from(edges, used, t - 1, i + 1);
        used.clear(u as usize);
        used.clear(v as usize);
    }
    total
}

/// Exact number of t-matchings, with the crude matching-count lower bounds:
/// at least E^t / (2^t t!) once E >= 4*Delta*t, and at least E^t / (2 t!)
/// once E >= 4*Delta*t^2. The report carries the strongest applicable bound.
pub fn count_t_matchings(g: &Graph, t: u32) -> Result<CountReport> {
    if t < 1 {
        return Err(Error::InvalidParams(
            "count_t_matchings needs t >= 1".into(),
        ));
    }
    let edges = g.edges();
    let mut used = Bits::new(g.n());
    let count = count_matchings_from(&edges, &mut used, t, 0);

    let e = g.m() as u64;
    let delta = g.max_degree() as u64;
    let strong = e >= 4 * delta * (t as u64) * (t as u64);
    let weak = e >= 4 * delta * t as u64;
    let et = big_pow(e, t);
    let bound = if strong {
        ratio(et, BigUint::from(2u32) * factorial(t as u64))
    } else {
        ratio(et, big_pow(2, t) * factorial(t as u64))
    };
    Ok(CountReport {
        structure: StructureKind::TMatching,
        t,
        n: g.n(),
        m: g.m(),
        count,
        bound: Some(bound),
        hypotheses_met: weak || strong,
    })
}

/// All t-matchings in canonical (lexicographic edge-index) order, capped.
pub fn enumerate_t_matchings(g: &Graph, t: u32, cap: u64) -> Result<Vec<TMatching>> {
    let edges = g.edges();
    let mut out = Vec::new();
    let mut used = Bits::new(g.n());
    let mut stack = Vec::with_capacity(t as usize);
    #[allow(clippy::too_many_arguments)]
    fn go(
        g: &Graph,
        edges: &[(u32, u32)],
        used: &mut Bits,
        stack: &mut Vec<(u32, u32)>,
        out: &mut Vec<TMatching>,
        t: u32,
        start: usize,
        cap: u64,
    ) -> Result<()> {
        if stack.len() == t as usize {
            if out.len() as u64 >= cap {
                return Err(Error::CapExceeded {
                    what: "t-matching enumeration",
                    needed: out.len() as u64 + 1,
                    cap,
                });
            }
            out.push(TMatching::new(g, stack.clone()).expect("edges checked disjoint"));
            return Ok(());
        }
        for i in start..edges.len() {
            let (u, v) = edges[i];
            if used.get(u as usize) || used.get(v as usize) {
                continue;
            }
            used.set(u as usize);
            used.set(v as usize);
            stack.push((u, v));
            go(g, edges, used, stack, out, t, i + 1, cap)?;
            stack.pop();
            used.clear(u as usize);
            used.clear(v as usize);
        }
        Ok(())
    }
    go(g, &edges, &mut used, &mut stack, &mut out, t, 0, cap)?;
    Ok(out)
}

/// (W_A, W_B, S): cherries centered in each side and the exact C4 count of a
/// bipartite graph. S is computed from one side's codegrees.
pub fn count_cherries_and_c4(g: &Graph) -> Result<(BigUint, BigUint, BigUint)> {
    let a = g.side_a()?;
    let b = g.side_b()?;
    let w_a: BigUint = a.iter().map(|&x| binom(g.degree(x) as u64, 2)).sum();
    let w_b: BigUint = b.iter().map(|&x| binom(g.degree(x) as u64, 2)).sum();
    let mut s = BigUint::zero();
    for (i, &u) in a.iter().enumerate() {
        for &v in &a[i + 1..] {
            let mut row = g.neighbor_bits(u).clone();
            row.and_assign(g.neighbor_bits(v));
            s += binom(row.count() as u64, 2);
        }
    }
    Ok((w_a, w_b, s))
}

/// Exact C4 count of an arbitrary graph: each four-cycle is seen once per
/// diagonal pair, so the codegree sum halves.
pub fn count_c4(g: &Graph) -> BigUint {
    let mut doubled = BigUint::zero();
    for u in 0..g.n() as u32 {
        for v in u + 1..g.n() as u32 {
            let mut row = g.neighbor_bits(u).clone();
            row.and_assign(g.neighbor_bits(v));
            doubled += binom(row.count() as u64, 2);
        }
    }
    let two = BigUint::from(2u32);
    debug_assert!((&doubled % &two).is_zero());
    doubled / two
}

/// Anchor of a link graph: a single edge or a whole t-matching.
#[derive(Clone, Debug)]
pub enum LinkAnchor {
    Edge(u32, u32),
    Matching(TMatching),
}

impl LinkAnchor {
    fn vertices(&self) -> Vec<u32> {
        match self {
            LinkAnchor::Edge(u, v) => vec![*u, *v],
            LinkAnchor::Matching(m) => m.vertices(),
        }
    }
}

/// Link graph of an anchor inside a bipartite host: X is the common
/// neighborhood of the anchor's B-vertices, Y of its A-vertices, both minus
/// the anchor itself; `induced` is the subgraph induced by X u Y.
#[derive(Clone, Debug)]
pub struct LinkGraph {
    pub anchor: LinkAnchor,
    pub x_side: Vec<u32>,
    pub y_side: Vec<u32>,
    pub induced: Induced,
    pub v_m: usize,
    pub e_m: usize,
}

pub fn link_graph(g: &Graph, anchor: &LinkAnchor) -> Result<LinkGraph> {
    if let LinkAnchor::Edge(u, v) = anchor {
        if !g.has_edge(*u, *v) {
            return Err(Error::AnchorNotInGraph);
        }
    }
    let anchor_vs = anchor.vertices();
    let mut a_part = Vec::new();
    let mut b_part = Vec::new();
    for &v in &anchor_vs {
        match g.side_of(v)? {
            0 => a_part.push(v),
            _ => b_part.push(v),
        }
    }
    let mut x_bits = g.common_bits_of(&b_part);
    let mut y_bits = g.common_bits_of(&a_part);
    for &v in &anchor_vs {
        x_bits.clear(v as usize);
        y_bits.clear(v as usize);
    }
    // X lives in A, Y in B; intersect with the sides to drop stray matches
    // of the empty-anchor-side case.
    let x_side: Vec<u32> = x_bits
        .ones()
        .map(|i| i as u32)
        .filter(|&v| g.side_of(v).unwrap() == 0)
        .collect();
    let y_side: Vec<u32> = y_bits
        .ones()
        .map(|i| i as u32)
        .filter(|&v| g.side_of(v).unwrap() == 1)
        .collect();
    let mut order: Vec<u32> = x_side.clone();
    order.extend(&y_side);
    let induced = g.induced_in_order(&order)?;
    let v_m = induced.graph.n();
    let e_m = induced.graph.m();
    Ok(LinkGraph {
        anchor: anchor.clone(),
        x_side,
        y_side,
        induced,
        v_m,
        e_m,
    })
}

/// (copy_count, incidence_count) for H_{1,t} in a bipartite graph.
///
/// An incidence is a pair (edge e, t-matching in the link graph of e); the
/// incidence total is what the supersaturation bound controls. Distinct
/// subgraph copies are recovered by deduplicating edge sets (a C4 yields four
/// incidences but one copy).
pub fn count_h1t(g: &Graph, t: u32, cap: u64) -> Result<(BigUint, BigUint)> {
    if t < 1 {
        return Err(Error::InvalidParams("count_h1t needs t >= 1".into()));
    }
    g.side_a()?;
    let mut incidences = BigUint::zero();
    let mut copies: BTreeSet<Vec<(u32, u32)>> = BTreeSet::new();
    for (u, v) in g.edges() {
        let (x, y) = if g.side_of(u)? == 0 { (u, v) } else { (v, u) };
        let link = link_graph(g, &LinkAnchor::Edge(x, y))?;
        let matchings = enumerate_t_matchings(&link.induced.graph, t, cap)?;
        incidences += BigUint::from(matchings.len());
        for m in matchings {
            let mut edge_set: Vec<(u32, u32)> = Vec::with_capacity(3 * t as usize + 1);
            let norm = |a: u32, b: u32| if a < b { (a, b) } else { (b, a) };
            edge_set.push(norm(x, y));
            for &(p, q) in m.edges() {
                let (p, q) = (
                    link.induced.vertices[p as usize],
                    link.induced.vertices[q as usize],
                );
                // p' in X (adjacent to y), q' in Y (adjacent to x)
                let (px, qy) = if g.side_of(p)? == 0 { (p, q) } else { (q, p) };
                edge_set.push(norm(px, qy));
                edge_set.push(norm(y, px));
                edge_set.push(norm(x, qy));
            }
            edge_set.sort_unstable();
            copies.insert(edge_set);
        }
    }
    Ok((BigUint::from(copies.len()), incidences))
}

/// Lower-bound report for the H_{1,t} incidence count: once
/// E >= 4 sqrt(2t) n^{3/2} (compared as E^2 >= 32 t n^3), the incidences are
/// at least E^{3t+1} / (2^{5t+2} t! |A|^{2t} |B|^{2t}).
pub fn h1t_report(g: &Graph, t: u32, cap: u64) -> Result<CountReport> {
    let (_, incidences) = count_h1t(g, t, cap)?;
    let e = g.m() as u64;
    let n = g.n() as u64;
    let a = g.side_a()?.len() as u64;
    let b = g.side_b()?.len() as u64;
    let bound = ratio(
        big_pow(e, 3 * t + 1),
        big_pow(2, 5 * t + 2) * factorial(t as u64) * big_pow(a, 2 * t) * big_pow(b, 2 * t),
    );
    let hyp = big_pow(e, 2) >= BigUint::from(32 * t as u64) * big_pow(n, 3);
    Ok(CountReport {
        structure: StructureKind::H1T,
        t,
        n: g.n(),
        m: g.m(),
        count: incidences,
        bound: Some(bound),
        hypotheses_met: hyp,
    })
}

/// Exact count of t-spider subgraphs: a center, t distinct midpoints adjacent
/// to it, and t leaves hanging off the midpoints, all 2t+1 vertices distinct.
pub fn count_spiders(g: &Graph, t: u32) -> Result<BigUint> {
    if t < 1 {
        return Err(Error::InvalidParams("count_spiders needs t >= 1".into()));
    }
    if t == 1 {
        // a 1-spider is a bare 2-edge path; both endpoints decompose it, so
        // count paths directly
        return Ok((0..g.n() as u32)
            .map(|v| binom(g.degree(v) as u64, 2))
            .sum());
    }
    // for t >= 2 the decomposition (center, legs) of a spider subgraph is
    // unique, so no dedup is needed
    let mut total = BigUint::zero();
    for c in 0..g.n() as u32 {
        total += count_legs(g, c, t);
    }
    Ok(total)
}

/// Number of ways to pick t legs (midpoint, leaf) at center `c`, midpoints
/// ascending, all vertices distinct.
fn count_legs(g: &Graph, c: u32, t: u32) -> BigUint {
    fn go(g: &Graph, c: u32, used: &mut Bits, remaining: u32, min_mid_idx: usize) -> BigUint {
        if remaining == 0 {
            return BigUint::one();
        }
        let mids = g.neighbors(c);
        let mut total = BigUint::zero();
        for (idx, &mid) in mids.iter().enumerate().skip(min_mid_idx) {
            if used.get(mid as usize) {
                continue;
            }
            used.set(mid as usize);
            for &leaf in g.neighbors(mid) {
                if leaf == c || used.get(leaf as usize) {
                    continue;
                }
                used.set(leaf as usize);
                total += go(g, c, used, remaining - 1, idx + 1);
                used.clear(leaf as usize);
            }
            used.clear(mid as usize);
        }
        total
    }
    let mut used = Bits::new(g.n());
    used.set(c as usize);
    go(g, c, &mut used, t, 0)
}

/// Exact number of H_{s,t} subgraph copies: an s-matching and a disjoint
/// t-matching joined crosswise between opposite endpoints. Copies are
/// deduplicated by edge set, which collapses the part swap and endpoint
/// relabelings.
pub fn count_hst(g: &Graph, s: u32, t: u32, cap: u64) -> Result<BigUint> {
    if s < 1 || t < 1 {
        return Err(Error::InvalidParams("count_hst needs s, t >= 1".into()));
    }
    // orientation masks are u32 bit sets
    if s > 30 || t > 30 {
        return Err(Error::InvalidParams("count_hst supports s, t <= 30".into()));
    }
    let s_matchings = enumerate_t_matchings(g, s, cap)?;
    let t_matchings = if s == t {
        s_matchings.clone()
    } else {
        enumerate_t_matchings(g, t, cap)?
    };
    let work = (s_matchings.len() as u64).saturating_mul(t_matchings.len() as u64);
    if work > cap.saturating_mul(64) {
        return Err(Error::CapExceeded {
            what: "h_st pair enumeration",
            needed: work,
            cap: cap * 64,
        });
    }
    let mut copies: BTreeSet<Vec<(u32, u32)>> = BTreeSet::new();
    let norm = |a: u32, b: u32| if a < b { (a, b) } else { (b, a) };
    for sm in &s_matchings {
        let mut sm_bits = Bits::new(g.n());
        for &v in &sm.vertices() {
            sm_bits.set(v as usize);
        }
        for tm in &t_matchings {
            if tm.vertices().iter().any(|&v| sm_bits.get(v as usize)) {
                continue;
            }
            // orient each edge of both matchings; orientation bit k flips edge k
            let s_edges = sm.edges();
            let t_edges = tm.edges();
            for s_mask in 0u32..1 << s {
                let oriented_s: Vec<(u32, u32)> = s_edges
                    .iter()
                    .enumerate()
                    .map(|(k, &(a, b))| if s_mask >> k & 1 == 0 { (a, b) } else { (b, a) })
                    .collect();
                'tmask: for t_mask in 0u32..1 << t {
                    let oriented_t: Vec<(u32, u32)> = t_edges
                        .iter()
                        .enumerate()
                        .map(|(k, &(a, b))| if t_mask >> k & 1 == 0 { (a, b) } else { (b, a) })
                        .collect();
                    for &(x, _y) in &oriented_s {
                        for &(xp, _yp) in &oriented_t {
                            if !g.has_edge(x, xp) {
                                continue 'tmask;
                            }
                        }
                    }
                    for &(_x, y) in &oriented_s {
                        for &(_xp, yp) in &oriented_t {
                            if !g.has_edge(y, yp) {
                                continue 'tmask;
                            }
                        }
                    }
                    let mut edge_set = Vec::new();
                    edge_set.extend(s_edges.iter().copied());
                    edge_set.extend(t_edges.iter().copied());
                    for &(x, y) in &oriented_s {
                        for &(xp, yp) in &oriented_t {
                            edge_set.push(norm(x, xp));
                            edge_set.push(norm(y, yp));
                        }
                    }
                    edge_set.sort_unstable();
                    edge_set.dedup();
                    copies.insert(edge_set);
                }
            }
        }
    }
    Ok(BigUint::from(copies.len()))
}

/// Unordered pairs {M, N} of vertex-disjoint t-matchings whose opposite sides
/// are completely joined (the quantity the H_{t,t} supersaturation bound
/// controls, and the edge count of the t-matching auxiliary graph).
pub fn count_htt_pairs(g: &Graph, t: u32, cap: u64) -> Result<BigUint> {
    let matchings = enumerate_t_matchings(g, t, cap)?;
    let data: Vec<(Bits, Vec<u32>, Vec<u32>)> = matchings
        .iter()
        .map(|m| {
            let mut bits = Bits::new(g.n());
            let mut a_vs = Vec::new();
            let mut b_vs = Vec::new();
            for &v in &m.vertices() {
                bits.set(v as usize);
                if g.side_of(v)? == 0 {
                    a_vs.push(v);
                } else {
                    b_vs.push(v);
                }
            }
            Ok((bits, a_vs, b_vs))
        })
        .collect::<Result<_>>()?;
    let mut count = BigUint::zero();
    for i in 0..data.len() {
        for j in i + 1..data.len() {
            if htt_adjacent(g, &data[i], &data[j]) {
                count += BigUint::one();
            }
        }
    }
    Ok(count)
}

pub(crate) fn htt_adjacent(
    g: &Graph,
    (bits_m, a_m, b_m): &(Bits, Vec<u32>, Vec<u32>),
    (bits_n, a_n, b_n): &(Bits, Vec<u32>, Vec<u32>),
) -> bool {
    if bits_m.intersects(bits_n) {
        return false;
    }
    a_m.iter().all(|&x| b_n.iter().all(|&y| g.has_edge(x, y)))
        && b_m.iter().all(|&x| a_n.iter().all(|&y| g.has_edge(x, y)))
}

/// Report for the H_{t,t} incidence-pair count against its supersaturation
/// bound c'_t E^{2t^2+2t} / n^{4t^2}, hypotheses: bipartite, K_{t+1,q}-free,
/// and E >= 12 q t n^{4t/(2t+1)} (compared at power 2t+1).
pub fn htt_pair_report(g: &Graph, t: u32, q: u32, cap: u64) -> Result<CountReport> {
    let count = count_htt_pairs(g, t, cap)?;
    let e = g.m() as u64;
    let n = g.n() as u64;
    let t64 = t as u64;
    let c_prime = ratio(
        BigUint::one(),
        big_pow(2, 5 * t * t + 4 * t + 1) * factorial(t64).pow(t + 1),
    );
    let bound = c_prime * ratio(big_pow(e, 2 * t * t + 2 * t), big_pow(n, 4 * t * t));
    let free = is_biclique_free(g, t + 1, q, cap)?;
    let hyp_edges =
        big_pow(e, 2 * t + 1) >= big_pow(12 * q as u64 * t64, 2 * t + 1) * big_pow(n, 4 * t);
    Ok(CountReport {
        structure: StructureKind::HST,
        t,
        n: g.n(),
        m: g.m(),
        count,
        bound: Some(bound),
        hypotheses_met: free && hyp_edges,
    })
}

/// True iff G has no K_{p,q} subgraph: no p-set whose common neighborhood
/// holds q further vertices.
pub fn is_biclique_free(g: &Graph, p: u32, q: u32, cap: u64) -> Result<bool> {
    Ok(find_biclique(g, p, q, cap)?.is_none())
}

/// Finds one K_{p,q} subgraph if present: a p-set and q common neighbors.
pub fn find_biclique(g: &Graph, p: u32, q: u32, cap: u64) -> Result<Option<(Vec<u32>, Vec<u32>)>> {
    if p < 1 || q < 1 {
        return Err(Error::InvalidParams("find_biclique needs p, q >= 1".into()));
    }
    for s in enumerate_t_sets(g, p, cap)? {
        let common = g.common_bits_of(s.members());
        if common.count() >= q as usize {
            let qs: Vec<u32> = common.ones().take(q as usize).map(|i| i as u32).collect();
            return Ok(Some((s.members().to_vec(), qs)));
        }
    }
    Ok(None)
}

/// C(x, m) * 2 * m! >= x^m in exact integers; requires x >= m^2 >= 1 and under
/// that hypothesis always holds.
pub fn binomial_floor_check(x: u64, m: u64) -> Result<bool> {
    if m < 1 || x < m * m {
        return Err(Error::InvalidParams(format!(
            "binomial_floor_check needs x >= m^2 >= 1, got x={x} m={m}"
        )));
    }
    let lhs = binom(x, m) * BigUint::from(2u32) * factorial(m);
    let rhs = BigUint::from(x).pow(m as u32);
    Ok(lhs >= rhs)
}
