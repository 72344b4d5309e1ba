//! Probabilistic-deletion exponent of a graph family.
//!
//! For a family {F_1, ..., F_k}, gamma = max_j min over subgraphs H of F_j
//! with e(H) >= 2 of (n(H)-2)/(e(H)-1), and c = max_j min over subgraphs with
//! e(H) >= 1 of n(H)/e(H). Both minima are attained at induced subgraphs, so
//! the brute force walks vertex subsets.

use crate::error::{Error, Result};
use crate::graph::Graph;
use num::{BigInt, BigRational};

#[derive(Clone, Debug)]
pub struct FamilyExponent {
    pub gamma: BigRational,
    pub c_exponent: BigRational,
    /// Induced subgraph attaining gamma in the maximizing member.
    pub witness: Graph,
    pub witness_member: usize,
    /// 2 - gamma, the edge-count exponent the family forces.
    pub lower_bound_exponent: BigRational,
}

pub fn erdos_renyi_exponent(family: &[Graph]) -> Result<FamilyExponent> {
    if family.is_empty() {
        return Err(Error::InvalidParams("family must be nonempty".into()));
    }
    let mut best_gamma: Option<(BigRational, Graph, usize)> = None;
    let mut best_c: Option<BigRational> = None;
    for (idx, g) in family.iter().enumerate() {
        if g.n() > 10 {
            return Err(Error::InvalidParams(format!(
                "family member {idx} has {} vertices; subgraph sweep caps at 10",
                g.n()
            )));
        }
        if g.m() < 2 {
            return Err(Error::InvalidParams(format!(
                "family member {idx} has fewer than 2 edges"
            )));
        }
        let (gamma, c, witness) = member_minima(g)?;
        if best_gamma.as_ref().is_none_or(|(bg, ..)| gamma > *bg) {
            best_gamma = Some((gamma, witness, idx));
        }
        if best_c.as_ref().is_none_or(|bc| c > *bc) {
            best_c = Some(c);
        }
    }
    let (gamma, witness, witness_member) = best_gamma.unwrap();
    let two = BigRational::from_integer(BigInt::from(2));
    Ok(FamilyExponent {
        lower_bound_exponent: two - gamma.clone(),
        gamma,
        c_exponent: best_c.unwrap(),
        witness,
        witness_member,
    })
}

/// (min (n-2)/(e-1), min n/e, gamma witness) over induced subgraphs of one member.
fn member_minima(g: &Graph) -> Result<(BigRational, BigRational, Graph)> {
    let n = g.n();
    let mut min_gamma: Option<(BigRational, u32)> = None;
    let mut min_c: Option<BigRational> = None;
    for mask in 1u32..1 << n {
        let verts: Vec<u32> = (0..n as u32).filter(|&v| mask >> v & 1 == 1).collect();
        let mut e = 0u64;
        for (i, &u) in verts.iter().enumerate() {
            for &v in &verts[i + 1..] {
                if g.has_edge(u, v) {
                    e += 1;
                }
            }
        }
        let nn = verts.len() as i64;
        if e >= 1 {
            let c = BigRational::new(nn.into(), (e as i64).into());
            min_c = Some(match min_c {
                None => c,
                Some(b) => b.min(c),
            });
        }
        if e >= 2 {
            let gamma = BigRational::new((nn - 2).into(), (e as i64 - 1).into());
            let replace = match &min_gamma {
                None => true,
                Some((bg, _)) => gamma < *bg,
            };
            if replace {
                min_gamma = Some((gamma, mask));
            }
        }
    }
    let (gamma, mask) = min_gamma.expect("member has >= 2 edges");
    let verts: Vec<u32> = (0..n as u32).filter(|&v| mask >> v & 1 == 1).collect();
    let witness = g.induced_subgraph(&verts)?.graph;
    Ok((gamma, min_c.unwrap(), witness))
}
