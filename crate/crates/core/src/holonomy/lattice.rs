use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{EdgeSubset, GainGraph, WeightedForest};
use crate::group::{generate_subgroup, GroupElement, Subgroup};
use crate::limits::Limits;

/// A holonomy-closed edge set with the data the counting formulas need.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedSet {
    pub edges: EdgeSubset,
    /// `μ(∅, A)`; zero throughout a bottomless lattice.
    pub mobius: i64,
    /// Non-identity holonomy generators of each component of `A` that has
    /// edges (at an arbitrary base vertex of that component).
    pub components: Vec<Vec<GroupElement>>,
    /// Vertices not touched by `A`.
    pub isolated: usize,
    pub(crate) mask: u64,
}

impl ClosedSet {
    /// `c(A)`: components of `(V, A)`, isolated vertices included.
    pub fn component_count(&self) -> usize {
        self.components.len() + self.isolated
    }

    /// `b(A)`: balanced components of `(V, A)`, isolated vertices included.
    pub fn balanced_count(&self) -> usize {
        self.components.iter().filter(|g| g.is_empty()).count() + self.isolated
    }
}

/// All holonomy-closed edge sets, sorted by size and then lexicographically
/// by edge id, with the Möbius function from the bottom.
#[derive(Debug, Clone)]
pub struct ClosedSetLattice {
    sets: Vec<ClosedSet>,
    bottomless: bool,
}

impl ClosedSetLattice {
    pub fn sets(&self) -> &[ClosedSet] {
        &self.sets
    }

    /// True when `∅` is not closed, which happens exactly when the graph
    /// has an identity loop.
    pub fn is_bottomless(&self) -> bool {
        self.bottomless
    }

    pub fn mobius(&self, set: &EdgeSubset) -> Option<i64> {
        self.sets.iter().find(|c| c.edges == *set).map(|c| c.mobius)
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

/// Closedness test on an edge mask, using a weighted union-find in place
/// of an explicit forest. Returns the component profile when closed.
fn closed_profile(
    graph: &GainGraph,
    wf: &mut WeightedForest<'_>,
    mask: u64,
) -> Option<(Vec<Vec<GroupElement>>, usize)> {
    wf.reset();
    let m = graph.edge_count();
    for p in (0..m).filter(|p| mask >> p & 1 == 1) {
        wf.add(p);
    }
    let (comps, isolated) = wf.profile();
    let mut groups: HashMap<usize, Subgroup> = HashMap::new();
    for p in (0..m).filter(|p| mask >> p & 1 == 0) {
        let Some((root, h)) = wf.holonomy(p) else {
            continue;
        };
        if h.is_identity() {
            return None;
        }
        if !wf.is_touched(root) {
            // loop at an untouched vertex: trivial group, h ≠ 1
            continue;
        }
        let group = groups.entry(root).or_insert_with(|| {
            let gens = comps
                .iter()
                .find(|(r, _)| *r == root)
                .map(|(_, g)| g.as_slice())
                .unwrap_or(&[]);
            generate_subgroup(graph.group(), gens)
        });
        if group.contains(h) {
            return None;
        }
    }
    Some((comps.into_iter().map(|(_, g)| g).collect(), isolated))
}

/// Filters the power set of `E` down to the holonomy-closed sets and computes
/// `μ(∅, A) = −Σ_{B ⊊ A closed} μ(∅, B)`.
pub fn enumerate_closed_sets(graph: &GainGraph, limits: &Limits) -> Result<ClosedSetLattice> {
    let m = graph.edge_count();
    if m > limits.max_lattice_edges || m >= 64 {
        return Err(Error::bound(
            "edge count for closed-set enumeration",
            m as u128,
            limits.max_lattice_edges as u128,
        ));
    }
    let mut sets: Vec<ClosedSet> = (0..1u64 << m)
        .into_par_iter()
        .map_init(
            || WeightedForest::new(graph),
            |wf, mask| {
                closed_profile(graph, wf, mask).map(|(components, isolated)| ClosedSet {
                    edges: graph.subset_of_positions((0..m).filter(|p| mask >> p & 1 == 1)),
                    mobius: 0,
                    components,
                    isolated,
                    mask,
                })
            },
        )
        .flatten()
        .collect();
    sets.sort_by(|a, b| {
        a.edges
            .len()
            .cmp(&b.edges.len())
            .then_with(|| a.edges.iter().cmp(b.edges.iter()))
    });
    let bottomless = sets.first().is_none_or(|s| s.mask != 0);
    if !bottomless {
        fill_mobius(&mut sets, m)?;
    }
    Ok(ClosedSetLattice { sets, bottomless })
}

fn fill_mobius(sets: &mut [ClosedSet], m: usize) -> Result<()> {
    let mut by_mask: HashMap<u64, usize> = HashMap::with_capacity(sets.len());
    for i in 0..sets.len() {
        let mask = sets[i].mask;
        let mu = if i == 0 {
            1
        } else {
            let mut sum: i64 = 0;
            if (i as u128) < 1u128 << sets[i].edges.len().min(m) {
                for b in &sets[..i] {
                    if b.mask & !mask == 0 {
                        sum = sum
                            .checked_add(b.mobius)
                            .ok_or(Error::Overflow("Möbius sum"))?;
                    }
                }
            } else {
                // proper submasks of `mask`, including 0
                let mut sub = mask;
                loop {
                    sub = sub.wrapping_sub(1) & mask;
                    if let Some(&j) = by_mask.get(&sub) {
                        sum = sum
                            .checked_add(sets[j].mobius)
                            .ok_or(Error::Overflow("Möbius sum"))?;
                    }
                    if sub == 0 {
                        break;
                    }
                }
            }
            sum.checked_neg().ok_or(Error::Overflow("Möbius sum"))?
        };
        sets[i].mobius = mu;
        by_mask.insert(mask, i);
    }
    Ok(())
}
