//! Potts models, set colorings and equivalence-class colorings as gain-graph
//! coloring problems, each with a direct evaluator that does not touch the
//! gain-graph code.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigUint;

use crate::counting::count_brute;
use crate::error::{Error, Result};
use crate::graph::{group_expansion, GainGraph, SimpleGraph};
use crate::group::{
    build_block_symmetric, point_action, regular_action, subset_action, FiniteGroup, SpinAction,
};
use crate::limits::{saturating_pow, Limits};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

impl FromStr for Sign {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "+" => Ok(Sign::Positive),
            "-" | "\u{2212}" => Ok(Sign::Negative),
            _ => Err(format!("unknown sign `{s}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGraph {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize, Sign)>,
}

impl SignedGraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize, Sign)>) -> Result<SignedGraph> {
        if let Some(&(u, v, _)) = edges
            .iter()
            .find(|(u, v, _)| *u >= vertex_count || *v >= vertex_count)
        {
            return Err(Error::InvalidVertex(u.max(v)));
        }
        Ok(SignedGraph {
            vertex_count,
            edges,
        })
    }
}

/// Negative edges become identity links; positive edges become one link per
/// non-identity element. Under the regular action the totally frustrated
/// states are then exactly the Potts states satisfying every edge.
pub fn potts_gain_graph(d: &SignedGraph, group: Arc<FiniteGroup>) -> Result<GainGraph> {
    if group.order() < 2 {
        return Err(Error::TrivialGroup);
    }
    let mut g = GainGraph::new(group.clone(), d.vertex_count);
    for &(u, v, sign) in &d.edges {
        match sign {
            Sign::Negative => {
                g.add_edge(u, v, group.identity())?;
            }
            Sign::Positive => {
                for x in group.elements().filter(|x| !x.is_identity()) {
                    g.add_edge(u, v, x)?;
                }
            }
        }
    }
    Ok(g)
}

fn check_states(q: usize, n: usize, limits: &Limits) -> Result<()> {
    let states = saturating_pow(q as u128, n);
    if states > limits.max_states {
        return Err(Error::bound("state count", states, limits.max_states));
    }
    Ok(())
}

/// Calls `f` on every word of length `n` over `0..q`; stops early if `f`
/// returns false.
fn for_each_state(n: usize, q: usize, mut f: impl FnMut(&[usize])) {
    if n > 0 && q == 0 {
        return;
    }
    let mut s = vec![0usize; n];
    loop {
        f(&s);
        let Some(i) = (0..n).rev().find(|&i| s[i] + 1 < q) else {
            return;
        };
        s[i] += 1;
        s[i + 1..].iter_mut().for_each(|x| *x = 0);
    }
}

/// Potts states with `q` spin values in which every positive edge joins equal
/// spins and every negative edge unequal ones.
pub fn potts_direct_count(d: &SignedGraph, q: usize, limits: &Limits) -> Result<BigUint> {
    check_states(q, d.vertex_count, limits)?;
    let mut count = 0u64;
    for_each_state(d.vertex_count, q, |s| {
        let ok = d.edges.iter().all(|&(u, v, sign)| match sign {
            Sign::Positive => s[u] == s[v],
            Sign::Negative => s[u] != s[v],
        });
        count += ok as u64;
    });
    Ok(count.into())
}

fn cross_check(what: &'static str, value: BigUint, oracle: BigUint) -> Result<BigUint> {
    if value == oracle {
        Ok(value)
    } else {
        Err(Error::OracleMismatch {
            what,
            left: value.to_string(),
            right: oracle.to_string(),
        })
    }
}

/// Satisfied Potts states, counted as totally frustrated states of the
/// encoding under the regular action and checked against direct enumeration.
pub fn potts_satisfiable_count(
    d: &SignedGraph,
    group: Arc<FiniteGroup>,
    limits: &Limits,
) -> Result<BigUint> {
    let g = potts_gain_graph(d, group.clone())?;
    let value = count_brute(&g, &regular_action(group.clone()), limits)?.value;
    let direct = potts_direct_count(d, group.order(), limits)?;
    cross_check("Potts count", value, direct)
}

/// The gain graph `S_k Δ` and the action of `S_k` on subsets of `[k]`.
pub fn set_coloring_instance(
    adjacency: &SimpleGraph,
    k: usize,
    limits: &Limits,
) -> Result<(GainGraph, SpinAction)> {
    if k > limits.max_set_colors {
        return Err(Error::bound(
            "set-coloring k",
            k as u128,
            limits.max_set_colors as u128,
        ));
    }
    let action = subset_action(k, limits)?;
    let graph = group_expansion(adjacency, action.group().clone(), limits)?;
    Ok((graph, action))
}

/// Assignments of subsets of `[k]` to vertices with `S_w ≠ σ(S_v)` for every
/// edge and every permutation `σ`, counted on the expansion and checked
/// against [`set_coloring_direct`].
pub fn set_coloring_count(adjacency: &SimpleGraph, k: usize, limits: &Limits) -> Result<BigUint> {
    let (graph, action) = set_coloring_instance(adjacency, k, limits)?;
    let value = count_brute(&graph, &action, limits)?.value;
    cross_check(
        "set-coloring count",
        value,
        set_coloring_direct(adjacency, k, limits)?,
    )
}

fn all_permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in all_permutations(k - 1) {
        for slot in 0..=p.len() {
            let mut q = p.clone();
            q.insert(slot, k - 1);
            out.push(q);
        }
    }
    out
}

/// Direct enumeration over subset assignments and explicit permutations.
pub fn set_coloring_direct(adjacency: &SimpleGraph, k: usize, limits: &Limits) -> Result<BigUint> {
    if k > limits.max_set_colors {
        return Err(Error::bound(
            "set-coloring k",
            k as u128,
            limits.max_set_colors as u128,
        ));
    }
    check_states(1 << k, adjacency.vertex_count, limits)?;
    let perms = all_permutations(k);
    let image = |set: usize, p: &[usize]| {
        (0..k)
            .filter(|&x| set >> x & 1 == 1)
            .fold(0, |acc, x| acc | 1 << p[x])
    };
    let mut count = 0u64;
    for_each_state(adjacency.vertex_count, 1 << k, |s| {
        let ok = adjacency
            .edges
            .iter()
            .all(|&(v, w)| perms.iter().all(|p| s[w] != image(s[v], p)));
        count += ok as u64;
    });
    Ok(count.into())
}

/// `𝔊Δ` with `𝔊` the product of the symmetric groups of the blocks, acting
/// on the points of all blocks.
pub fn equivalence_expansion(
    adjacency: &SimpleGraph,
    block_sizes: &[usize],
    limits: &Limits,
) -> Result<(GainGraph, SpinAction)> {
    let group = Arc::new(build_block_symmetric(block_sizes, limits)?);
    let action = point_action(group.clone())?;
    let graph = group_expansion(adjacency, group, limits)?;
    Ok((graph, action))
}

/// Colorings by points of the blocks in which adjacent vertices get points
/// from different blocks.
pub fn equivalence_direct_count(
    adjacency: &SimpleGraph,
    block_sizes: &[usize],
    limits: &Limits,
) -> Result<BigUint> {
    let block_of: Vec<usize> = block_sizes
        .iter()
        .enumerate()
        .flat_map(|(i, &b)| std::iter::repeat_n(i, b))
        .collect();
    check_states(block_of.len(), adjacency.vertex_count, limits)?;
    let mut count = 0u64;
    for_each_state(adjacency.vertex_count, block_of.len(), |s| {
        count += adjacency
            .edges
            .iter()
            .all(|&(v, w)| block_of[s[v]] != block_of[s[w]]) as u64;
    });
    Ok(count.into())
}

/// Block-inequivalent colorings, counted on the expansion and checked
/// against [`equivalence_direct_count`].
pub fn equivalence_count(
    adjacency: &SimpleGraph,
    block_sizes: &[usize],
    limits: &Limits,
) -> Result<BigUint> {
    let (graph, action) = equivalence_expansion(adjacency, block_sizes, limits)?;
    let value = count_brute(&graph, &action, limits)?.value;
    cross_check(
        "equivalence-class count",
        value,
        equivalence_direct_count(adjacency, block_sizes, limits)?,
    )
}

#[cfg(test)]
mod tests;
