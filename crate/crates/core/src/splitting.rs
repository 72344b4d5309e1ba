//! Greedy combinatorial subroutines and the randomized h-coloring that feeds
//! the layered extraction: uniform hypergraph matching, union-spanning edge
//! selection, seeded vertex coloring, and the per-structure disjoint-family
//! validation with retries.

use crate::bits::Bits;
use crate::counting::binom;
use crate::error::{Error, Result};
use crate::goodness::{build_aux, classify_goodness, AuxGraph, AuxKind, GoodnessTable};
use crate::graph::Graph;
use crate::rng::seeded_rng;
use num::{BigUint, One};
use rand::Rng;
use std::collections::BTreeSet;
use std::collections::HashMap;
use std::fmt::Write as _;

/// Uniform hypergraph: every edge is a sorted t-set.
#[derive(Clone, Debug)]
pub struct Hypergraph {
    pub n: usize,
    pub t: u32,
    edges: Vec<Vec<u32>>,
}

impl Hypergraph {
    pub fn new(n: usize, t: u32, mut edges: Vec<Vec<u32>>) -> Result<Self> {
        for e in edges.iter_mut() {
            e.sort_unstable();
            if e.len() != t as usize {
                return Err(Error::InvalidParams(format!(
                    "hypergraph edge has size {}, expected {t}",
                    e.len()
                )));
            }
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidParams(
                    "hypergraph edge repeats a vertex".into(),
                ));
            }
            if let Some(&v) = e.last() {
                if v as usize >= n {
                    return Err(Error::VertexOutOfRange { v, n });
                }
            }
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParams("duplicate hypergraph edge".into()));
        }
        Ok(Hypergraph { n, t, edges })
    }

    pub fn edges(&self) -> &[Vec<u32>] {
        &self.edges
    }

    /// Max number of edges through one vertex.
    pub fn max_vertex_load(&self) -> usize {
        let mut load = vec![0usize; self.n];
        for e in &self.edges {
            for &v in e {
                load[v as usize] += 1;
            }
        }
        load.into_iter().max().unwrap_or(0)
    }
}

/// Greedy maximal matching in lexicographic edge order. Maximality gives at
/// least ceil(e / (t * D)) edges where D is the max per-vertex load.
pub fn greedy_hypergraph_matching(h: &Hypergraph) -> Vec<Vec<u32>> {
    let mut used = Bits::new(h.n);
    let mut out = Vec::new();
    for e in &h.edges {
        if e.iter().all(|&v| !used.get(v as usize)) {
            for &v in e {
                used.set(v as usize);
            }
            out.push(e.clone());
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct SpanningSelection {
    pub selected: Vec<Vec<u32>>,
    pub union: Vec<u32>,
    /// Whether at least C(m, t) edges were supplied.
    pub hypothesis_met: bool,
}

/// Greedily accumulates edges not contained in the running union until the
/// union reaches m vertices; with C(m,t) distinct edges available this needs
/// at most m - t + 1 picks. Callers below the edge hypothesis still get the
/// selection when the greedy happens to reach m.
pub fn spanning_selection(edges: &[Vec<u32>], m: u32) -> Result<SpanningSelection> {
    if edges.is_empty() {
        return Err(Error::InvalidParams(
            "spanning_selection needs at least one edge".into(),
        ));
    }
    let t = edges[0].len() as u32;
    if edges.iter().any(|e| e.len() as u32 != t) {
        return Err(Error::InvalidParams(
            "spanning_selection edges must be uniform".into(),
        ));
    }
    let required = binom(m as u64, t as u64);
    let hypothesis_met = BigUint::from(edges.len()) >= required;

    let mut sorted: Vec<Vec<u32>> = edges.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut union: BTreeSet<u32> = BTreeSet::new();
    let mut selected = Vec::new();
    for e in &sorted {
        if union.len() >= m as usize {
            break;
        }
        if e.iter().any(|v| !union.contains(v)) {
            union.extend(e.iter().copied());
            selected.push(e.clone());
        }
    }
    if union.len() < m as usize {
        return Err(Error::InsufficientEdges {
            supplied: edges.len(),
            required: u64::try_from(&required).unwrap_or(u64::MAX),
        });
    }
    Ok(SpanningSelection {
        selected,
        union: union.into_iter().collect(),
        hypothesis_met,
    })
}

/// An h-coloring of the host vertices, colors 1..=h.
#[derive(Clone, Debug)]
pub struct Partition {
    pub h: u32,
    pub seed: u64,
    pub attempts_used: u32,
    color_of: Vec<u32>,
}

impl Partition {
    pub fn color(&self, v: u32) -> u32 {
        self.color_of[v as usize]
    }

    pub fn class(&self, j: u32) -> Vec<u32> {
        (0..self.color_of.len() as u32)
            .filter(|&v| self.color(v) == j)
            .collect()
    }

    pub fn n(&self) -> usize {
        self.color_of.len()
    }

    /// Swaps two color labels everywhere.
    pub fn relabel_swap(&self, a: u32, b: u32) -> Partition {
        let color_of = self
            .color_of
            .iter()
            .map(|&c| {
                if c == a {
                    b
                } else if c == b {
                    a
                } else {
                    c
                }
            })
            .collect();
        Partition {
            h: self.h,
            seed: self.seed,
            attempts_used: self.attempts_used,
            color_of,
        }
    }

    /// `h n` header, then one `vertex color` line per vertex.
    pub fn serialize(&self, header: Option<&str>) -> String {
        let mut out = String::new();
        if let Some(hd) = header {
            writeln!(out, "{hd}").unwrap();
        }
        writeln!(out, "{} {}", self.h, self.color_of.len()).unwrap();
        for (v, c) in self.color_of.iter().enumerate() {
            writeln!(out, "{v} {c}").unwrap();
        }
        out
    }

    pub fn parse(text: &str) -> Result<Partition> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (ln, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing `h n` header".into(),
        })?;
        let mut it = header.split_whitespace();
        let h: u32 = it.next().and_then(|w| w.parse().ok()).ok_or(Error::Parse {
            line: ln,
            msg: "bad h".into(),
        })?;
        let n: usize = it.next().and_then(|w| w.parse().ok()).ok_or(Error::Parse {
            line: ln,
            msg: "bad n".into(),
        })?;
        let mut color_of = vec![0u32; n];
        for _ in 0..n {
            let (ln, l) = lines.next().ok_or(Error::Parse {
                line: 0,
                msg: "partition ended early".into(),
            })?;
            let mut it = l.split_whitespace();
            let v: usize = it.next().and_then(|w| w.parse().ok()).ok_or(Error::Parse {
                line: ln,
                msg: "bad vertex".into(),
            })?;
            let c: u32 = it.next().and_then(|w| w.parse().ok()).ok_or(Error::Parse {
                line: ln,
                msg: "bad color".into(),
            })?;
            if v >= n || c < 1 || c > h {
                return Err(Error::Parse {
                    line: ln,
                    msg: "vertex or color out of range".into(),
                });
            }
            color_of[v] = c;
        }
        Ok(Partition {
            h,
            seed: 0,
            attempts_used: 0,
            color_of,
        })
    }
}

/// Colors every vertex i.i.d. uniformly from {1..h} with the seeded generator.
pub fn random_partition(g: &Graph, h: u32, seed: u64) -> Result<Partition> {
    if h < 1 {
        return Err(Error::InvalidParams("random_partition needs h >= 1".into()));
    }
    let mut rng = seeded_rng(seed);
    let color_of = (0..g.n()).map(|_| rng.gen_range(1..=h)).collect();
    Ok(Partition {
        h,
        seed,
        attempts_used: 1,
        color_of,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitKind {
    /// Structures are t-sets; families live in common neighborhoods.
    Even,
    /// Structures are t-matchings of a bipartite host; families live in link
    /// graphs and are extracted edge-disjoint first, then vertex-disjoint.
    Odd,
}

impl SplitKind {
    pub fn aux_kind(&self) -> AuxKind {
        match self {
            SplitKind::Even => AuxKind::BicliqueAux,
            SplitKind::Odd => AuxKind::HttAux,
        }
    }
}

/// One disjoint family: for the (h,`level`)-good structure `structure_id`,
/// the (h,`level`-1)-good structures found inside its neighborhood and color
/// class `class`.
#[derive(Clone, Debug)]
pub struct FamilyRecord {
    pub structure_id: usize,
    pub level: u32,
    pub class: u32,
    pub family: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct SplitValidation {
    pub theta: u64,
    pub records: Vec<FamilyRecord>,
    /// Aux id of a monochromatic (h,h)-good structure, if any.
    pub monochromatic_top: Option<usize>,
    pub passes: bool,
}

impl SplitValidation {
    fn failing_records(&self) -> usize {
        self.records
            .iter()
            .filter(|r| (r.family.len() as u64) < self.theta)
            .count()
    }

    /// `level,class,structure_id,family_size,theta,pass` rows.
    pub fn csv(&self) -> String {
        let mut out = String::from("level,class,structure_id,family_size,theta,pass\n");
        for r in &self.records {
            let pass = r.family.len() as u64 >= self.theta;
            writeln!(
                out,
                "{},{},{},{},{},{}",
                r.level,
                r.class,
                r.structure_id,
                r.family.len(),
                self.theta,
                pass
            )
            .unwrap();
        }
        out
    }
}

/// Aux graph plus its goodness table, reusable across coloring attempts.
pub struct SplitContext {
    pub aux: AuxGraph,
    pub table: GoodnessTable,
    pub kind: SplitKind,
    pub h: u32,
    host_n: usize,
}

impl SplitContext {
    pub fn build(g: &Graph, t: u32, h: u32, kind: SplitKind, cap: u64) -> Result<SplitContext> {
        let aux = build_aux(g, t, kind.aux_kind(), cap)?;
        let table = classify_goodness(&aux.adjacency, h)?;
        Ok(SplitContext {
            aux,
            table,
            kind,
            h,
            host_n: g.n(),
        })
    }

    /// Color class holding every vertex of the structure, if monochromatic.
    pub fn monochromatic_class(&self, id: usize, p: &Partition) -> Option<u32> {
        let vs = self.aux.structure(id).vertices();
        let c = p.color(vs[0]);
        vs.iter().all(|&v| p.color(v) == c).then_some(c)
    }
}

/// Validates one coloring: for every (h,i)-good structure at every level
/// i in 1..=h and every class j, extracts the greedy disjoint family of
/// (h,i-1)-good structures inside the neighborhood and class, and records it.
/// Passes iff every family reaches theta and some (h,h)-good structure is
/// monochromatic.
pub fn validate_split_with(ctx: &SplitContext, p: &Partition, theta: u64) -> SplitValidation {
    let h = ctx.h;
    let mut records = Vec::new();
    let mut all_ok = true;
    for level in 1..=h {
        for id in 0..ctx.aux.len() {
            if !ctx.table.is_good(id, level) {
                continue;
            }
            for class in 1..=h {
                let family = greedy_family(ctx, p, id, level, class);
                if (family.len() as u64) < theta {
                    all_ok = false;
                }
                records.push(FamilyRecord {
                    structure_id: id,
                    level,
                    class,
                    family,
                });
            }
        }
    }
    let monochromatic_top = (0..ctx.aux.len())
        .find(|&id| ctx.table.is_good(id, h) && ctx.monochromatic_class(id, p).is_some());
    let passes = all_ok && monochromatic_top.is_some();
    SplitValidation {
        theta,
        records,
        monochromatic_top,
        passes,
    }
}

/// Greedy disjoint family of (h,level-1)-good structures adjacent to `id`,
/// monochromatic in `class`. Candidates are scanned in canonical structure
/// order; the odd kind goes edge-disjoint first, then vertex-disjoint.
fn greedy_family(
    ctx: &SplitContext,
    p: &Partition,
    id: usize,
    level: u32,
    class: u32,
) -> Vec<usize> {
    let candidates: Vec<usize> = ctx
        .aux
        .adjacency
        .neighbors(id as u32)
        .iter()
        .map(|&x| x as usize)
        .filter(|&x| ctx.table.is_good(x, level - 1))
        .filter(|&x| ctx.monochromatic_class(x, p) == Some(class))
        .collect();
    let survivors: Vec<usize> = match ctx.kind {
        SplitKind::Even => candidates,
        SplitKind::Odd => {
            // phase 1: maximal edge-disjoint subcollection
            let mut used_edges: BTreeSet<(u32, u32)> = BTreeSet::new();
            let mut kept = Vec::new();
            for &x in &candidates {
                if let crate::goodness::TStructure::Matching(m) = ctx.aux.structure(x) {
                    if m.edges().iter().all(|e| !used_edges.contains(e)) {
                        used_edges.extend(m.edges().iter().copied());
                        kept.push(x);
                    }
                }
            }
            kept
        }
    };
    // vertex-disjoint greedy
    let mut used = vec![false; ctx.host_n];
    let mut family = Vec::new();
    for x in survivors {
        let vs = ctx.aux.structure(x).vertices();
        if vs.iter().all(|&v| !used[v as usize]) {
            for &v in &vs {
                used[v as usize] = true;
            }
            family.push(x);
        }
    }
    family
}

/// Convenience wrapper that builds the context for a single validation.
pub fn validate_split(
    g: &Graph,
    p: &Partition,
    t: u32,
    h: u32,
    theta: u64,
    kind: SplitKind,
    cap: u64,
) -> Result<SplitValidation> {
    let ctx = SplitContext::build(g, t, h, kind, cap)?;
    Ok(validate_split_with(&ctx, p, theta))
}

/// Structured failure of the retry loop, carrying the best-scoring attempt.
#[derive(Debug)]
pub struct SplitExhausted {
    pub attempts: u32,
    pub best: Option<Box<(Partition, SplitValidation)>>,
}

impl std::fmt::Display for SplitExhausted {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.best {
            Some(b) => write!(
                f,
                "no passing partition in {} attempts; best had {} failing families (top {})",
                self.attempts,
                b.1.failing_records(),
                if b.1.monochromatic_top.is_some() {
                    "present"
                } else {
                    "missing"
                }
            ),
            None => write!(f, "no passing partition in {} attempts", self.attempts),
        }
    }
}

impl std::error::Error for SplitExhausted {}

/// Retries seeded colorings until one validates; attempt k uses seed + k.
pub fn split_with_retries_in(
    ctx: &SplitContext,
    g: &Graph,
    theta: u64,
    max_attempts: u32,
    seed: u64,
) -> std::result::Result<(Partition, SplitValidation), SplitExhausted> {
    let mut best: Option<Box<(Partition, SplitValidation)>> = None;
    for attempt in 0..max_attempts {
        let mut p = random_partition(g, ctx.h, seed.wrapping_add(attempt as u64))
            .expect("h >= 1 checked by context");
        p.attempts_used = attempt + 1;
        let v = validate_split_with(ctx, &p, theta);
        if v.passes {
            return Ok((p, v));
        }
        let score = v.failing_records() + usize::from(v.monochromatic_top.is_none());
        let better = match &best {
            None => true,
            Some(b) => score < b.1.failing_records() + usize::from(b.1.monochromatic_top.is_none()),
        };
        if better {
            best = Some(Box::new((p, v)));
        }
    }
    Err(SplitExhausted {
        attempts: max_attempts,
        best,
    })
}

#[allow(clippy::too_many_arguments)]
pub fn split_with_retries(
    g: &Graph,
    t: u32,
    h: u32,
    theta: u64,
    kind: SplitKind,
    max_attempts: u32,
    seed: u64,
    cap: u64,
) -> Result<std::result::Result<(Partition, SplitValidation), SplitExhausted>> {
    let ctx = SplitContext::build(g, t, h, kind, cap)?;
    Ok(split_with_retries_in(&ctx, g, theta, max_attempts, seed))
}

/// Smallest integer c with c^(t^2) > 3^h * (4 b t^2 h^t)^t, the asymptotic
/// edge-density constant behind the even-case splitting guarantee.
pub fn paper_constant_even(h: u32, t: u32, b: u64) -> BigUint {
    let rhs = BigUint::from(3u32).pow(h)
        * (BigUint::from(4 * b)
            * BigUint::from(t as u64 * t as u64)
            * BigUint::from(h as u64).pow(t))
        .pow(t);
    smallest_power_exceeding(&rhs, t * t, true)
}

/// Smallest integer c with
/// c^((2t+1)t) >= 2^(5t^2+4t+1) (t!)^(t+1) 3^h (q t^3 2^(t+3) b h^(2t))^t,
/// the odd-case analogue.
pub fn paper_constant_odd(h: u32, q: u32, t: u32, b: u64) -> BigUint {
    let inv_c_t = BigUint::from(2u32).pow(5 * t * t + 4 * t + 1)
        * crate::counting::factorial(t as u64).pow(t + 1);
    let rhs = inv_c_t
        * BigUint::from(3u32).pow(h)
        * (BigUint::from(q as u64)
            * BigUint::from(t as u64).pow(3)
            * BigUint::from(2u32).pow(t + 3)
            * BigUint::from(b)
            * BigUint::from(h as u64).pow(2 * t))
        .pow(t);
    smallest_power_exceeding(&rhs, (2 * t + 1) * t, false)
}

/// Smallest c >= 1 with c^exp > rhs (strict) or c^exp >= rhs.
fn smallest_power_exceeding(rhs: &BigUint, exp: u32, strict: bool) -> BigUint {
    let ok = |c: &BigUint| {
        let p = c.pow(exp);
        if strict {
            p > *rhs
        } else {
            p >= *rhs
        }
    };
    let mut hi = BigUint::one();
    while !ok(&hi) {
        hi *= BigUint::from(2u32);
    }
    let mut lo = BigUint::one();
    while &lo + BigUint::one() < hi {
        let mid = (&lo + &hi) / BigUint::from(2u32);
        if ok(&mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    if ok(&lo) {
        lo
    } else {
        hi
    }
}

/// Lookup from (structure, level, class) to its recorded family.
pub fn family_index(v: &SplitValidation) -> HashMap<(usize, u32, u32), &[usize]> {
    v.records
        .iter()
        .map(|r| ((r.structure_id, r.level, r.class), r.family.as_slice()))
        .collect()
}
