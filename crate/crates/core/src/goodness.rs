//! Recursive degree-based vertex classification and the auxiliary graphs it
//! runs on.
//!
//! A vertex is (h,1)-good when its degree is at least a 1/3^h fraction of the
//! average degree, and (h,i)-good when it is (h,1)-good and at least half of
//! its neighbors are (h,i-1)-good. The classes nest downward, and the total
//! degree of (h,h)-bad vertices never exceeds two thirds of the edges.
//!
//! The auxiliary graphs lift the classification to t-sets (adjacent when they
//! span a complete bipartite K_{t,t}) and to t-matchings of a bipartite host
//! (adjacent when opposite endpoints are completely joined).

use crate::bits::Bits;
use crate::counting::{enumerate_t_matchings, enumerate_t_sets, htt_adjacent};
use crate::error::{Error, Result};
use crate::graph::{Graph, TMatching, TSet};
use num::{BigInt, BigRational, BigUint, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AuxKind {
    /// Vertices are all t-sets; edges are biclique pairs.
    BicliqueAux,
    /// Vertices are all t-matchings of a bipartite host; edges join the two
    /// parts of an H_{t,t}.
    HttAux,
}

/// A structure living at an auxiliary-graph vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TStructure {
    Set(TSet),
    Matching(TMatching),
}

impl TStructure {
    /// Host vertices covered by the structure.
    pub fn vertices(&self) -> Vec<u32> {
        match self {
            TStructure::Set(s) => s.members().to_vec(),
            TStructure::Matching(m) => m.vertices(),
        }
    }

    pub fn encode(&self) -> String {
        match self {
            TStructure::Set(s) => s.encode(),
            TStructure::Matching(m) => m.encode(),
        }
    }
}

/// Fully materialized auxiliary graph. `adjacency` is a plain graph over
/// structure indices, so every vertex-level query applies unchanged.
#[derive(Clone, Debug)]
pub struct AuxGraph {
    pub kind: AuxKind,
    pub t: u32,
    pub structures: Vec<TStructure>,
    pub adjacency: Graph,
}

impl AuxGraph {
    pub fn avg_degree(&self) -> BigRational {
        if self.adjacency.n() == 0 {
            return BigRational::zero();
        }
        BigRational::new((2 * self.adjacency.m()).into(), self.adjacency.n().into())
    }

    pub fn structure(&self, id: usize) -> &TStructure {
        &self.structures[id]
    }

    pub fn len(&self) -> usize {
        self.structures.len()
    }

    pub fn is_empty(&self) -> bool {
        self.structures.is_empty()
    }
}

/// Materializes the auxiliary graph of the requested kind under `cap`.
pub fn build_aux(g: &Graph, t: u32, kind: AuxKind, cap: u64) -> Result<AuxGraph> {
    if t < 1 {
        return Err(Error::InvalidParams("build_aux needs t >= 1".into()));
    }
    match kind {
        AuxKind::BicliqueAux => {
            let sets = enumerate_t_sets(g, t, cap)?;
            // precomputed common neighborhoods make each pair check t bit tests
            let commons: Vec<Bits> = sets.iter().map(|s| g.common_bits_of(s.members())).collect();
            let mut edges = Vec::new();
            for (i, common) in commons.iter().enumerate() {
                for (j, set) in sets.iter().enumerate().skip(i + 1) {
                    if set.members().iter().all(|&v| common.get(v as usize)) {
                        edges.push((i as u32, j as u32));
                    }
                }
            }
            let adjacency = Graph::new(sets.len(), &edges)?;
            Ok(AuxGraph {
                kind,
                t,
                structures: sets.into_iter().map(TStructure::Set).collect(),
                adjacency,
            })
        }
        AuxKind::HttAux => {
            g.side_a()?;
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
            let mut edges = Vec::new();
            for i in 0..data.len() {
                for j in i + 1..data.len() {
                    if htt_adjacent(g, &data[i], &data[j]) {
                        edges.push((i as u32, j as u32));
                    }
                }
            }
            let adjacency = Graph::new(matchings.len(), &edges)?;
            Ok(AuxGraph {
                kind,
                t,
                structures: matchings.into_iter().map(TStructure::Matching).collect(),
                adjacency,
            })
        }
    }
}

/// Per-vertex goodness flags for levels 1..=h.
#[derive(Clone, Debug)]
pub struct GoodnessTable {
    pub h: u32,
    /// D / 3^h, the level-1 degree threshold, exact.
    pub degree_threshold: BigRational,
    /// good[i-1][v] = vertex v is (h,i)-good.
    good: Vec<Vec<bool>>,
    /// s_i = total degree of (h,i)-bad vertices, per level.
    pub bad_degree_sums: Vec<BigUint>,
}

impl GoodnessTable {
    /// Is `v` (h,i)-good? Level 0 is good by convention.
    pub fn is_good(&self, v: usize, i: u32) -> bool {
        if i == 0 {
            return true;
        }
        self.good[i as usize - 1][v]
    }

    pub fn good_set(&self, i: u32) -> Vec<usize> {
        (0..self.good[0].len())
            .filter(|&v| self.is_good(v, i))
            .collect()
    }

    pub fn n(&self) -> usize {
        self.good.first().map_or(0, Vec::len)
    }

    /// CSV rows `vertex_index,structure_members,good_1..good_h`; the second
    /// column is the aux structure encoding when one is supplied.
    pub fn csv(&self, structures: Option<&[TStructure]>) -> String {
        let mut out = String::new();
        out.push_str("vertex_index,structure_members");
        for i in 1..=self.h {
            out.push_str(&format!(",good_{i}"));
        }
        out.push('\n');
        for v in 0..self.n() {
            let label = match structures {
                Some(ss) => ss[v].encode(),
                None => v.to_string(),
            };
            out.push_str(&format!("{v},{label}"));
            for i in 1..=self.h {
                out.push_str(if self.is_good(v, i) { ",1" } else { ",0" });
            }
            out.push('\n');
        }
        out
    }
}

/// Classifies every vertex of `g` level by level; level i reads only level
/// i-1. Thresholds and the half-count comparison are exact: degree d passes
/// level 1 iff d * n * 3^h >= 2e, and "at least half" is 2 * good >= d.
pub fn classify_goodness(g: &Graph, h: u32) -> Result<GoodnessTable> {
    if h < 1 {
        return Err(Error::InvalidParams(
            "classify_goodness needs h >= 1".into(),
        ));
    }
    let n = g.n();
    let two_e = BigUint::from(2 * g.m());
    let pow3h = BigUint::from(3u32).pow(h);
    let degree_threshold = if n == 0 {
        BigRational::zero()
    } else {
        BigRational::new(
            BigInt::from(two_e.clone()),
            BigInt::from(&pow3h * BigUint::from(n)),
        )
    };
    let level1: Vec<bool> = (0..n)
        .map(|v| BigUint::from(g.degree(v as u32)) * BigUint::from(n) * &pow3h >= two_e)
        .collect();
    let mut good = vec![level1];
    for _ in 2..=h {
        let prev = good.last().unwrap();
        let next: Vec<bool> = (0..n)
            .map(|v| {
                if !good[0][v] {
                    return false;
                }
                let good_neighbors = g
                    .neighbors(v as u32)
                    .iter()
                    .filter(|&&u| prev[u as usize])
                    .count();
                2 * good_neighbors >= g.degree(v as u32)
            })
            .collect();
        good.push(next);
    }
    let bad_degree_sums = good
        .iter()
        .map(|level| {
            (0..n)
                .filter(|&v| !level[v])
                .map(|v| BigUint::from(g.degree(v as u32)))
                .sum()
        })
        .collect();
    Ok(GoodnessTable {
        h,
        degree_threshold,
        good,
        bad_degree_sums,
    })
}

/// Structures whose auxiliary vertices are (h,i)-good; i = 0 returns all.
pub fn good_structures(
    g: &Graph,
    t: u32,
    h: u32,
    i: u32,
    kind: AuxKind,
    cap: u64,
) -> Result<Vec<TStructure>> {
    if i > h {
        return Err(Error::InvalidParams(format!(
            "goodness level {i} exceeds h = {h}"
        )));
    }
    let aux = build_aux(g, t, kind, cap)?;
    if i == 0 {
        return Ok(aux.structures);
    }
    let table = classify_goodness(&aux.adjacency, h)?;
    Ok(aux
        .structures
        .into_iter()
        .enumerate()
        .filter(|(v, _)| table.is_good(*v, i))
        .map(|(_, s)| s)
        .collect())
}

#[derive(Clone, Debug)]
pub struct MassCheck {
    pub bad_sum: BigUint,
    pub good_sum: BigUint,
    pub passes: bool,
}

/// Total degree mass of (h,h)-bad vs (h,h)-good vertices; passes iff
/// bad <= (2/3)e and good >= (4/3)e, compared in integers.
pub fn goodness_mass_check(g: &Graph, h: u32) -> Result<MassCheck> {
    let table = classify_goodness(g, h)?;
    let bad_sum = table.bad_degree_sums.last().unwrap().clone();
    let good_sum = BigUint::from(2 * g.m()) - bad_sum.clone();
    let three = BigUint::from(3u32);
    let e = BigUint::from(g.m());
    let passes = &bad_sum * &three <= BigUint::from(2u32) * &e
        && &good_sum * &three >= BigUint::from(4u32) * &e;
    Ok(MassCheck {
        bad_sum,
        good_sum,
        passes,
    })
}

/// The induction invariant on the intermediate sums:
/// s_i * 3^(h-i+1) <= 2e for every level i.
pub fn level_sums_within_bound(table: &GoodnessTable, edge_count: usize) -> bool {
    let two_e = BigUint::from(2 * edge_count);
    table.bad_degree_sums.iter().enumerate().all(|(idx, s)| {
        let i = idx as u32 + 1;
        s * BigUint::from(3u32).pow(table.h - i + 1) <= two_e
    })
}
