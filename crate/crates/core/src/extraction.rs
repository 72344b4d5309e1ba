//! Layered BFS extraction of a small dense subgraph.
//!
//! The pipeline splits the host into color classes, roots a search tree at a
//! monochromatic top-good structure, walks the validated disjoint families
//! layer by layer, and turns the first sufficiently-multiple in-arc collision
//! into a certificate: a vertex set whose induced subgraph meets the degree,
//! radius, and order bounds. Certificates are re-verified by measurement and
//! never trusted.

use crate::counting::{binom, find_biclique};
use crate::error::{Error, Result};
use crate::goodness::TStructure;
use crate::graph::{Graph, Radius, TMatching, TSet};
use crate::splitting::{
    family_index, spanning_selection, split_with_retries_in, SplitContext, SplitKind,
};
use num::{BigRational, ToPrimitive};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtractMode {
    /// Targets minimum degree 2t via t-sets and biclique adjacency.
    Even,
    /// Targets average degree 2t+1 via t-matchings of a bipartite half.
    Odd,
}

impl ExtractMode {
    pub fn name(&self) -> &'static str {
        match self {
            ExtractMode::Even => "even",
            ExtractMode::Odd => "odd",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "even" => Ok(ExtractMode::Even),
            "odd" => Ok(ExtractMode::Odd),
            _ => Err(Error::InvalidParams(format!("unknown mode `{s}`"))),
        }
    }

    fn split_kind(&self) -> SplitKind {
        match self {
            ExtractMode::Even => SplitKind::Even,
            ExtractMode::Odd => SplitKind::Odd,
        }
    }
}

/// Collision thresholds: C(2t, t) in even mode, ceil(t! (3e)^{2t}) in odd
/// mode. Tests override these downward; the assembly and the certificate
/// checks do not depend on the threshold value.
pub fn default_collision_threshold(mode: ExtractMode, t: u32) -> u64 {
    match mode {
        ExtractMode::Even => binom(2 * t as u64, t as u64).to_u64().unwrap_or(u64::MAX),
        ExtractMode::Odd => {
            let fact: f64 = (1..=t as u64).map(|x| x as f64).product();
            let pow = (3.0 * std::f64::consts::E).powi(2 * t as i32);
            (fact * pow).ceil() as u64
        }
    }
}

#[derive(Clone, Debug)]
pub struct ExtractParams {
    pub mode: ExtractMode,
    pub t: u32,
    pub r: u32,
    pub theta: u64,
    pub seed: u64,
    pub max_split_attempts: u32,
    /// None means the mode default.
    pub collision_threshold: Option<u64>,
    pub cap: u64,
}

impl ExtractParams {
    pub fn threshold(&self) -> u64 {
        self.collision_threshold
            .unwrap_or_else(|| default_collision_threshold(self.mode, self.t))
    }
}

/// Measured values stored with a certificate for reporting; `certify`
/// recomputes all of them from scratch.
#[derive(Clone, Debug)]
pub struct CertMeasurements {
    pub order: usize,
    pub min_degree: usize,
    pub avg_degree: BigRational,
    pub radius: Radius,
}

#[derive(Clone, Debug)]
pub enum Witness {
    /// BFS subtree plus the collision: arcs are (parent, child) structure
    /// pairs, leaves are the selected collision parents.
    Layered {
        subtree_root: TStructure,
        arcs: Vec<(TStructure, TStructure)>,
        leaves: Vec<TStructure>,
        collision: TStructure,
    },
    /// Odd-mode short-circuit: a complete bipartite block found directly.
    Biclique { left: Vec<u32>, right: Vec<u32> },
}

#[derive(Clone, Debug)]
pub struct Certificate {
    pub mode: ExtractMode,
    pub t: u32,
    pub r: u32,
    pub vertices: Vec<u32>,
    pub witness: Witness,
    pub measured: CertMeasurements,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FailureReason {
    NoTopGoodStructure,
    SplitFailed,
    Case2Exhausted,
    CapsExceeded,
}

impl FailureReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            FailureReason::NoTopGoodStructure => "no_top_good_structure",
            FailureReason::SplitFailed => "split_failed",
            FailureReason::Case2Exhausted => "case2_exhausted",
            FailureReason::CapsExceeded => "caps_exceeded",
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct ExtractionStats {
    pub layer_sizes: Vec<usize>,
    /// Per explored layer, the largest in-arc multiplicity seen.
    pub max_multiplicity: Vec<u64>,
    pub split_attempts: u32,
    pub selections_tried: usize,
}

#[derive(Debug)]
pub enum ExtractResult {
    Certified(Box<Certificate>),
    Failed(FailureReason),
}

impl ExtractResult {
    pub fn outcome_str(&self) -> &'static str {
        match self {
            ExtractResult::Certified(_) => "certified",
            ExtractResult::Failed(r) => r.as_str(),
        }
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            ExtractResult::Certified(c) => Some(c),
            ExtractResult::Failed(_) => None,
        }
    }
}

#[derive(Debug)]
pub struct ExtractionOutcome {
    pub result: ExtractResult,
    pub stats: ExtractionStats,
}

/// BFS out-tree over auxiliary ids.
#[derive(Clone, Debug, Default)]
pub struct BfsTree {
    parent: HashMap<usize, usize>,
    depth: HashMap<usize, u32>,
}

impl BfsTree {
    pub fn contains(&self, v: usize) -> bool {
        self.depth.contains_key(&v)
    }

    pub fn depth(&self, v: usize) -> Option<u32> {
        self.depth.get(&v).copied()
    }

    /// Path from `v` up to the root, starting at `v`.
    pub fn path_to_root(&self, v: usize) -> Vec<usize> {
        let mut path = vec![v];
        let mut cur = v;
        while let Some(&p) = self.parent.get(&cur) {
            path.push(p);
            cur = p;
        }
        path
    }
}

/// Deepest vertex lying on every root-to-leaf path.
pub fn closest_common_ancestor(tree: &BfsTree, leaves: &[usize]) -> Result<usize> {
    if leaves.is_empty() {
        return Err(Error::InvalidParams("need at least one leaf".into()));
    }
    for &l in leaves {
        if !tree.contains(l) {
            return Err(Error::LeafNotInTree);
        }
    }
    let first = tree.path_to_root(leaves[0]);
    let rest: Vec<BTreeSet<usize>> = leaves[1..]
        .iter()
        .map(|&l| tree.path_to_root(l).into_iter().collect())
        .collect();
    for v in first {
        if rest.iter().all(|p| p.contains(&v)) {
            return Ok(v);
        }
    }
    Err(Error::LeafNotInTree)
}

/// Picks collision parents whose structures span enough host vertices:
/// t+1 t-sets with union at least 2t in even mode; 2t+1 t-matchings one of
/// whose endpoint sides unions to at least 3t in odd mode. Returns indices
/// into `parents`.
pub fn select_collision_leaves(
    g: &Graph,
    parents: &[TStructure],
    t: u32,
    mode: ExtractMode,
) -> Result<Vec<usize>> {
    let need = match mode {
        ExtractMode::Even => t as usize + 1,
        ExtractMode::Odd => 2 * t as usize + 1,
    };
    let mut seen: BTreeSet<String> = BTreeSet::new();
    let mut distinct: Vec<usize> = Vec::new();
    for (i, p) in parents.iter().enumerate() {
        if seen.insert(p.encode()) {
            distinct.push(i);
        }
    }
    if distinct.len() < need {
        return Err(Error::InsufficientParents {
            have: distinct.len(),
            need,
        });
    }
    match mode {
        ExtractMode::Even => {
            let sets: Vec<Vec<u32>> = distinct.iter().map(|&i| parents[i].vertices()).collect();
            let sel = spanning_selection(&sets, 2 * t).map_err(|_| Error::NoQualifyingSelection)?;
            let mut chosen: Vec<usize> = sel
                .selected
                .iter()
                .map(|s| distinct[sets.iter().position(|x| x == s).unwrap()])
                .collect();
            pad_selection(&mut chosen, &distinct, need);
            Ok(chosen)
        }
        ExtractMode::Odd => {
            let mut a_sides: Vec<Vec<u32>> = Vec::new();
            let mut b_sides: Vec<Vec<u32>> = Vec::new();
            for &i in &distinct {
                let mut a = Vec::new();
                let mut b = Vec::new();
                for v in parents[i].vertices() {
                    if g.side_of(v)? == 0 {
                        a.push(v);
                    } else {
                        b.push(v);
                    }
                }
                a_sides.push(a);
                b_sides.push(b);
            }
            for sides in [&a_sides, &b_sides] {
                let mut uniq: Vec<Vec<u32>> = sides.clone();
                uniq.sort_unstable();
                uniq.dedup();
                if let Ok(sel) = spanning_selection(&uniq, 3 * t) {
                    let mut chosen: Vec<usize> = sel
                        .selected
                        .iter()
                        .map(|s| distinct[sides.iter().position(|x| x == s).unwrap()])
                        .collect();
                    chosen.sort_unstable();
                    chosen.dedup();
                    pad_selection(&mut chosen, &distinct, need);
                    if chosen.len() == need {
                        return Ok(chosen);
                    }
                }
            }
            Err(Error::NoQualifyingSelection)
        }
    }
}

fn pad_selection(chosen: &mut Vec<usize>, pool: &[usize], need: usize) {
    for &i in pool {
        if chosen.len() >= need {
            break;
        }
        if !chosen.contains(&i) {
            chosen.push(i);
        }
    }
    chosen.sort_unstable();
}

/// Runs the full pipeline. Parameter errors surface as `Err`; pipeline dead
/// ends are reported through `ExtractResult::Failed`.
pub fn extract(g: &Graph, params: &ExtractParams) -> Result<ExtractionOutcome> {
    match params.mode {
        ExtractMode::Even if params.t < 2 => {
            return Err(Error::InvalidParams("even mode needs t >= 2".into()));
        }
        ExtractMode::Odd if params.t < 1 => {
            return Err(Error::InvalidParams("odd mode needs t >= 1".into()));
        }
        _ => {}
    }
    if params.r < 1 {
        return Err(Error::InvalidParams("extract needs r >= 1".into()));
    }

    let mut stats = ExtractionStats::default();

    let host = match params.mode {
        ExtractMode::Even => g.clone(),
        ExtractMode::Odd => {
            // a complete bipartite block already carries average degree 2t+1;
            // take it directly before halving can lose it
            let q = 2 * params.t * params.t + 3 * params.t + 1;
            if let Some((left, right)) = find_biclique(g, params.t + 1, q, params.cap)? {
                let cert = biclique_certificate(g, params, left, right)?;
                let report = certify(g, &cert)?;
                if !report.pass {
                    return Err(Error::InvalidGraph(
                        "internal error: direct biclique certificate failed certification".into(),
                    ));
                }
                return Ok(ExtractionOutcome {
                    result: ExtractResult::Certified(Box::new(cert)),
                    stats,
                });
            }
            g.bipartite_half(params.seed)
        }
    };

    if host.m() == 0 {
        return Ok(failed(FailureReason::NoTopGoodStructure, stats));
    }

    let ctx = match SplitContext::build(
        &host,
        params.t,
        params.r,
        params.mode.split_kind(),
        params.cap,
    ) {
        Ok(ctx) => ctx,
        Err(Error::CapExceeded { .. }) => {
            return Ok(failed(FailureReason::CapsExceeded, stats));
        }
        Err(e) => return Err(e),
    };
    if ctx.aux.is_empty() || ctx.aux.adjacency.m() == 0 {
        return Ok(failed(FailureReason::NoTopGoodStructure, stats));
    }
    if !(0..ctx.aux.len()).any(|v| ctx.table.is_good(v, params.r)) {
        return Ok(failed(FailureReason::NoTopGoodStructure, stats));
    }

    let (partition, validation) = match split_with_retries_in(
        &ctx,
        &host,
        params.theta,
        params.max_split_attempts,
        params.seed,
    ) {
        Ok(ok) => ok,
        Err(err) => {
            stats.split_attempts = err.attempts;
            return Ok(failed(FailureReason::SplitFailed, stats));
        }
    };
    stats.split_attempts = partition.attempts_used;

    let root = validation
        .monochromatic_top
        .expect("passing validation has a top");
    let root_class = ctx
        .monochromatic_class(root, &partition)
        .expect("top structure is monochromatic");
    // classes are relabeled so the root lives in class 1: layer i+1 reads the
    // family recorded under the original label swap(i+1)
    let swap = |j: u32| {
        if j == 1 {
            root_class
        } else if j == root_class {
            1
        } else {
            j
        }
    };
    let families_raw = family_index(&validation);
    let family = |id: usize, level: u32, class: u32| -> &[usize] {
        families_raw
            .get(&(id, level, swap(class)))
            .copied()
            .unwrap_or(&[])
    };

    let r = params.r;
    let threshold = params.threshold();
    let mut tree = BfsTree::default();
    tree.depth.insert(root, 0);
    let mut frontier = vec![root];
    stats.layer_sizes.push(1);

    for i in 0..r {
        // arcs from layer i land on the recorded disjoint family of each
        // frontier vertex, all inside class i+1
        let mut targets: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &x in &frontier {
            for &y in family(x, r - i, i + 1) {
                targets.entry(y).or_default().push(x);
            }
        }
        let mut next = Vec::new();
        let mut max_mult = 0u64;
        for (&y, parents) in &targets {
            max_mult = max_mult.max(parents.len() as u64);
            if !tree.contains(y) {
                tree.parent.insert(y, parents[0]);
                tree.depth.insert(y, i + 1);
                next.push(y);
            }
        }
        stats.layer_sizes.push(next.len());
        stats.max_multiplicity.push(max_mult);

        for (&y, parents) in &targets {
            if (parents.len() as u64) < threshold {
                continue;
            }
            stats.selections_tried += 1;
            let parent_structures: Vec<TStructure> = parents
                .iter()
                .map(|&x| ctx.aux.structure(x).clone())
                .collect();
            let chosen =
                match select_collision_leaves(&host, &parent_structures, params.t, params.mode) {
                    Ok(c) => c,
                    Err(_) => continue,
                };
            let leaves: Vec<usize> = chosen.iter().map(|&k| parents[k]).collect();
            let cert = assemble_certificate(g, &ctx, &tree, params, y, &leaves)?;
            let report = certify(g, &cert)?;
            if !report.pass {
                return Err(Error::InvalidGraph(
                    "internal error: assembled certificate failed certification".into(),
                ));
            }
            return Ok(ExtractionOutcome {
                result: ExtractResult::Certified(Box::new(cert)),
                stats,
            });
        }

        if next.is_empty() {
            return Ok(failed(FailureReason::Case2Exhausted, stats));
        }
        frontier = next;
    }
    Ok(failed(FailureReason::Case2Exhausted, stats))
}

fn failed(reason: FailureReason, stats: ExtractionStats) -> ExtractionOutcome {
    ExtractionOutcome {
        result: ExtractResult::Failed(reason),
        stats,
    }
}

fn biclique_certificate(
    g: &Graph,
    params: &ExtractParams,
    left: Vec<u32>,
    right: Vec<u32>,
) -> Result<Certificate> {
    let mut vertices: Vec<u32> = left.iter().chain(right.iter()).copied().collect();
    vertices.sort_unstable();
    vertices.dedup();
    let measured = measure(g, &vertices)?;
    Ok(Certificate {
        mode: params.mode,
        t: params.t,
        r: params.r,
        vertices,
        witness: Witness::Biclique { left, right },
        measured,
    })
}

/// Case-1 assembly: the subtree from the closest common ancestor of the
/// selected leaves, plus the collision arcs, induces the certificate.
fn assemble_certificate(
    g: &Graph,
    ctx: &SplitContext,
    tree: &BfsTree,
    params: &ExtractParams,
    collision: usize,
    leaves: &[usize],
) -> Result<Certificate> {
    let cca = closest_common_ancestor(tree, leaves)?;
    let mut subtree: BTreeSet<usize> = BTreeSet::new();
    let mut arcs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for &leaf in leaves {
        let path = tree.path_to_root(leaf);
        // walk child -> parent until the ancestor
        for w in path.windows(2) {
            let (child, parent) = (w[0], w[1]);
            subtree.insert(child);
            if child == cca {
                break;
            }
            arcs.insert((parent, child));
            if parent == cca {
                subtree.insert(parent);
                break;
            }
        }
        subtree.insert(cca);
    }
    let mut vertices: BTreeSet<u32> = BTreeSet::new();
    for &x in &subtree {
        vertices.extend(ctx.aux.structure(x).vertices());
    }
    vertices.extend(ctx.aux.structure(collision).vertices());
    let vertices: Vec<u32> = vertices.into_iter().collect();
    let measured = measure(g, &vertices)?;
    Ok(Certificate {
        mode: params.mode,
        t: params.t,
        r: params.r,
        vertices,
        witness: Witness::Layered {
            subtree_root: ctx.aux.structure(cca).clone(),
            arcs: arcs
                .into_iter()
                .map(|(p, c)| (ctx.aux.structure(p).clone(), ctx.aux.structure(c).clone()))
                .collect(),
            leaves: leaves
                .iter()
                .map(|&l| ctx.aux.structure(l).clone())
                .collect(),
            collision: ctx.aux.structure(collision).clone(),
        },
        measured,
    })
}

fn measure(g: &Graph, vertices: &[u32]) -> Result<CertMeasurements> {
    let induced = g.induced_subgraph(vertices)?.graph;
    let stats = induced.degree_stats()?;
    Ok(CertMeasurements {
        order: induced.n(),
        min_degree: stats.min_degree,
        avg_degree: stats.avg_degree,
        radius: stats.radius,
    })
}

#[derive(Clone, Debug)]
pub struct CheckLine {
    pub name: &'static str,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct CertifyReport {
    pub measured: CertMeasurements,
    pub checks: Vec<CheckLine>,
    pub pass: bool,
}

/// Recomputes the induced subgraph and all measured quantities, then applies
/// the mode's bounds. Stored measurements are ignored.
pub fn certify(g: &Graph, cert: &Certificate) -> Result<CertifyReport> {
    let measured = measure(g, &cert.vertices)?;
    let t = cert.t as usize;
    let r = cert.r;
    let checks = match cert.mode {
        ExtractMode::Even => vec![
            CheckLine {
                name: "min_degree >= 2t",
                pass: measured.min_degree >= 2 * t,
            },
            CheckLine {
                name: "radius <= r",
                pass: measured.radius.at_most(r),
            },
            CheckLine {
                name: "order < r*t^2 + r*t",
                pass: measured.order < (r as usize) * t * t + (r as usize) * t,
            },
        ],
        ExtractMode::Odd => {
            let target = BigRational::from_integer((2 * t as i64 + 1).into());
            vec![
                CheckLine {
                    name: "avg_degree >= 2t+1",
                    pass: measured.avg_degree >= target,
                },
                CheckLine {
                    name: "radius <= r+1",
                    pass: measured.radius.at_most(r + 1),
                },
                CheckLine {
                    name: "order <= r*(4t^2 + 2t)",
                    pass: measured.order <= (r as usize) * (4 * t * t + 2 * t),
                },
            ]
        }
    };
    let pass = checks.iter().all(|c| c.pass);
    Ok(CertifyReport {
        measured,
        checks,
        pass,
    })
}

/// Text form: `mode t r`, the vertex list, then keyword-prefixed witness
/// lines (`root`, `arc`, `leaf`, `collision`, or `biclique`).
pub fn write_certificate(cert: &Certificate, header: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(h) = header {
        writeln!(out, "{h}").unwrap();
    }
    writeln!(out, "{} {} {}", cert.mode.name(), cert.t, cert.r).unwrap();
    let verts: Vec<String> = cert.vertices.iter().map(u32::to_string).collect();
    writeln!(out, "{}", verts.join(" ")).unwrap();
    match &cert.witness {
        Witness::Layered {
            subtree_root,
            arcs,
            leaves,
            collision,
        } => {
            writeln!(out, "root {}", subtree_root.encode()).unwrap();
            for (p, c) in arcs {
                writeln!(out, "arc {} {}", p.encode(), c.encode()).unwrap();
            }
            for l in leaves {
                writeln!(out, "leaf {}", l.encode()).unwrap();
            }
            writeln!(out, "collision {}", collision.encode()).unwrap();
        }
        Witness::Biclique { left, right } => {
            let l: Vec<String> = left.iter().map(u32::to_string).collect();
            let r: Vec<String> = right.iter().map(u32::to_string).collect();
            writeln!(out, "biclique {}|{}", l.join(","), r.join(",")).unwrap();
        }
    }
    out
}

pub fn parse_certificate(text: &str, host: &Graph) -> Result<Certificate> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (ln, head) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing certificate header".into(),
    })?;
    let mut it = head.split_whitespace();
    let mode = ExtractMode::parse(it.next().ok_or(Error::Parse {
        line: ln,
        msg: "missing mode".into(),
    })?)?;
    let t: u32 = it.next().and_then(|w| w.parse().ok()).ok_or(Error::Parse {
        line: ln,
        msg: "bad t".into(),
    })?;
    let r: u32 = it.next().and_then(|w| w.parse().ok()).ok_or(Error::Parse {
        line: ln,
        msg: "bad r".into(),
    })?;
    let (vln, vline) = lines.next().ok_or(Error::Parse {
        line: 0,
        msg: "missing vertex list".into(),
    })?;
    let vertices: Vec<u32> = vline
        .split_whitespace()
        .map(|w| {
            w.parse::<u32>().map_err(|_| Error::Parse {
                line: vln,
                msg: "bad vertex".into(),
            })
        })
        .collect::<Result<_>>()?;

    let decode = |s: &str| -> Result<TStructure> {
        match mode {
            ExtractMode::Even => Ok(TStructure::Set(TSet::decode(s)?)),
            ExtractMode::Odd => Ok(TStructure::Matching(TMatching::decode(host, s)?)),
        }
    };
    let mut subtree_root = None;
    let mut arcs = Vec::new();
    let mut leaves = Vec::new();
    let mut collision = None;
    let mut biclique = None;
    for (ln, l) in lines {
        let (kw, rest) = l.split_once(' ').unwrap_or((l, ""));
        match kw {
            "root" => subtree_root = Some(decode(rest)?),
            "arc" => {
                let (p, c) = rest.split_once(' ').ok_or(Error::Parse {
                    line: ln,
                    msg: "bad arc".into(),
                })?;
                arcs.push((decode(p)?, decode(c)?));
            }
            "leaf" => leaves.push(decode(rest)?),
            "collision" => collision = Some(decode(rest)?),
            "biclique" => {
                let (l, r) = rest.split_once('|').ok_or(Error::Parse {
                    line: ln,
                    msg: "bad biclique witness".into(),
                })?;
                let parse_ids = |s: &str| -> Result<Vec<u32>> {
                    s.split(',')
                        .filter(|p| !p.is_empty())
                        .map(|p| {
                            p.parse::<u32>().map_err(|_| Error::Parse {
                                line: ln,
                                msg: "bad vertex id".into(),
                            })
                        })
                        .collect()
                };
                biclique = Some((parse_ids(l)?, parse_ids(r)?));
            }
            _ => {
                return Err(Error::Parse {
                    line: ln,
                    msg: format!("unknown keyword `{kw}`"),
                })
            }
        }
    }
    let witness = if let Some((left, right)) = biclique {
        Witness::Biclique { left, right }
    } else {
        Witness::Layered {
            subtree_root: subtree_root.ok_or(Error::Parse {
                line: 0,
                msg: "missing root line".into(),
            })?,
            arcs,
            leaves,
            collision: collision.ok_or(Error::Parse {
                line: 0,
                msg: "missing collision line".into(),
            })?,
        }
    };
    let measured = measure(host, &vertices)?;
    Ok(Certificate {
        mode,
        t,
        r,
        vertices,
        witness,
        measured,
    })
}
