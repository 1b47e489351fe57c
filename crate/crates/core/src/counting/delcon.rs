use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{check_group, to_count, CountResult, Method};
use crate::error::{Error, Result};
use crate::graph::GainGraph;
use crate::group::{FiniteGroup, FixTable, GroupElement, SpinAction};
use crate::limits::Limits;

#[derive(Clone)]
struct Mini {
    n: usize,
    /// `(u, v, gain)` in edge-id order.
    edges: Vec<(usize, usize, GroupElement)>,
}

struct Recursion<'a> {
    group: &'a FiniteGroup,
    fix: FixTable,
    calls: u64,
    budget: u64,
}

impl Recursion<'_> {
    fn run(&mut self, g: &Mini) -> Result<BigInt> {
        self.calls += 1;
        if self.calls > self.budget {
            return Err(Error::bound(
                "deletion-contraction calls",
                self.calls as u128,
                self.budget as u128,
            ));
        }
        // t(v): spins at v fixed by none of v's loop gains
        let mut loop_gains: Vec<Vec<GroupElement>> = vec![Vec::new(); g.n];
        for &(u, v, h) in &g.edges {
            if u == v {
                if h.is_identity() {
                    return Ok(BigInt::zero());
                }
                loop_gains[u].push(h);
            }
        }
        let t: Vec<usize> = loop_gains
            .iter()
            .map(|gs| self.fix.size() - self.fix.union_count(gs))
            .collect();
        if t.contains(&0) {
            return Ok(BigInt::zero());
        }
        let Some(link) = g.edges.iter().position(|&(u, v, _)| u != v) else {
            return Ok(t.iter().fold(BigInt::one(), |acc, &x| acc * x));
        };
        let mut deleted = g.clone();
        deleted.edges.remove(link);
        let del = self.run(&deleted)?;
        let con = self.run(&contract(self.group, g, link))?;
        Ok(del - con)
    }
}

/// Same canonical contraction as [`GainGraph::contract_link`].
fn contract(group: &FiniteGroup, g: &Mini, link: usize) -> Mini {
    let (keep, gone, gain) = g.edges[link];
    let eta_gone = group.inv(gain);
    let switch_at = |x: usize| {
        if x == gone {
            eta_gone
        } else {
            GroupElement::IDENTITY
        }
    };
    let relabel = |x: usize| {
        let x = if x == gone { keep } else { x };
        if x > gone {
            x - 1
        } else {
            x
        }
    };
    let edges = g
        .edges
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != link)
        .map(|(_, &(u, v, h))| {
            let h = group.mul(group.mul(group.inv(switch_at(u)), h), switch_at(v));
            (relabel(u), relabel(v), h)
        })
        .collect();
    Mini { n: g.n - 1, edges }
}

/// `χ(Φ) = χ(Φ∖e) − χ(Φ/e)` on the lowest-id link, down to graphs whose
/// only edges are loops, where the count is `Π_v t(v)`.
pub fn count_delcon(
    graph: &GainGraph,
    action: &SpinAction,
    limits: &Limits,
) -> Result<CountResult> {
    check_group(graph, action)?;
    let mini = Mini {
        n: graph.vertex_count(),
        edges: graph.edges().iter().map(|e| (e.u, e.v, e.gain)).collect(),
    };
    let mut rec = Recursion {
        group: graph.group(),
        fix: FixTable::new(action),
        calls: 0,
        budget: limits.max_delcon_calls,
    };
    let value = rec.run(&mini)?;
    to_count(value, Method::DeletionContraction, rec.calls)
}
