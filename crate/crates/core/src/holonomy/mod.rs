//! Holonomy groups of edge sets, the fixed-set size `h_Q`, and holonomy
//! closure.

mod lattice;

pub use lattice::{enumerate_closed_sets, ClosedSet, ClosedSetLattice};

use crate::error::{Error, Result};
use crate::graph::{Analysis, EdgeId, EdgeSubset, ForestRule, GainGraph};
use crate::group::{fixed_set, generate_subgroup, GroupElement, SpinAction, Subgroup};

/// An edge set `A` with a chosen maximal forest and one base vertex per
/// component of `A`.
#[derive(Debug, Clone)]
pub struct HolonomyContext<'g> {
    graph: &'g GainGraph,
    set: EdgeSubset,
    analysis: Analysis,
}

impl<'g> HolonomyContext<'g> {
    /// Breadth-first forest, smallest vertex of each component as base.
    pub fn new(graph: &'g GainGraph, set: &EdgeSubset) -> Result<Self> {
        Self::with_rule(graph, set, ForestRule::BreadthFirst)
    }

    pub fn with_rule(graph: &'g GainGraph, set: &EdgeSubset, rule: ForestRule) -> Result<Self> {
        let positions = graph.positions(set)?;
        Ok(HolonomyContext {
            graph,
            set: set.clone(),
            analysis: Analysis::new(graph, &positions, rule),
        })
    }

    /// An explicit maximal forest of `set` and base vertices, one for each
    /// component in order of the components' smallest vertices.
    pub fn with_forest(
        graph: &'g GainGraph,
        set: &EdgeSubset,
        forest: &EdgeSubset,
        bases: &[usize],
    ) -> Result<Self> {
        let positions = graph.positions(set)?;
        let forest = graph.positions(forest)?;
        Ok(HolonomyContext {
            graph,
            set: set.clone(),
            analysis: Analysis::with_forest(graph, &positions, &forest, bases)?,
        })
    }

    pub fn set(&self) -> &EdgeSubset {
        &self.set
    }

    pub fn forest(&self) -> EdgeSubset {
        self.graph.subset_of_positions(self.analysis.forest())
    }

    pub fn bases(&self) -> Vec<usize> {
        self.analysis.comps.iter().map(|c| c.base).collect()
    }

    /// Number of components of `A` that contain edges.
    pub fn component_count(&self) -> usize {
        self.analysis.comps.len()
    }

    pub fn component_edges(&self, component: usize) -> Result<EdgeSubset> {
        let c = self.component(component)?;
        Ok(self.graph.subset_of_positions(c.edges.iter().copied()))
    }

    pub fn component_vertices(&self, component: usize) -> Result<&[usize]> {
        Ok(&self.component(component)?.vertices)
    }

    pub fn component_of_vertex(&self, v: usize) -> Option<usize> {
        self.analysis.comp_of.get(v).copied().flatten()
    }

    fn component(&self, component: usize) -> Result<&crate::graph::ComponentData> {
        self.analysis
            .comps
            .get(component)
            .ok_or(Error::InvalidForest(format!("no component {component}")))
    }

    /// Holonomy `φ(W_e)` at the base of the component spanning `e`'s
    /// endpoints, or `None` when `e`'s endpoints are not connected in `A`.
    pub fn edge_holonomy(&self, e: EdgeId) -> Result<Option<GroupElement>> {
        let pos = self.graph.position(e)?;
        Ok(self
            .analysis
            .spanning_component(self.graph, pos)
            .map(|_| self.analysis.holonomy(self.graph, pos)))
    }
}

/// Holonomies of the non-forest edges of one component, in edge-id order.
pub fn holonomy_generators(
    ctx: &HolonomyContext<'_>,
    component: usize,
) -> Result<Vec<GroupElement>> {
    Ok(ctx.component(component)?.generators.clone())
}

pub fn holonomy_group(ctx: &HolonomyContext<'_>, component: usize) -> Result<Subgroup> {
    let gens = holonomy_generators(ctx, component)?;
    Ok(generate_subgroup(ctx.graph.group(), &gens))
}

/// `h_Q(A) = |Fix ℌ_A(v)|` for a connected edge set. The empty set stands
/// for a single isolated vertex, whose holonomy group is trivial, giving `|Q|`.
pub fn h_fixed_count(graph: &GainGraph, action: &SpinAction, conn: &EdgeSubset) -> Result<usize> {
    if !action.same_group(graph.group()) {
        return Err(Error::GroupMismatch);
    }
    let ctx = HolonomyContext::new(graph, conn)?;
    match ctx.component_count() {
        0 => Ok(action.size()),
        1 => Ok(fixed_set(action, &holonomy_group(&ctx, 0)?).len()),
        _ => Err(Error::NotConnected),
    }
}

/// Edges of the graphic closure of `A` whose holonomy lies in the holonomy
/// group of the component of `A` spanning them. A loop at a vertex `A` does
/// not touch sees the trivial group, so it enters iff its gain is trivial.
pub fn holonomy_closure(graph: &GainGraph, set: &EdgeSubset) -> Result<EdgeSubset> {
    let ctx = HolonomyContext::new(graph, set)?;
    let a = &ctx.analysis;
    let mut groups: Vec<Option<Subgroup>> = vec![None; a.comps.len()];
    let mut out = EdgeSubset::new();
    for (pos, e) in graph.edges().iter().enumerate() {
        let inside = if set.contains(e.id) {
            true
        } else if let Some(c) = a.spanning_component(graph, pos) {
            let h = a.holonomy(graph, pos);
            h.is_identity()
                || groups[c]
                    .get_or_insert_with(|| generate_subgroup(graph.group(), &a.comps[c].generators))
                    .contains(h)
        } else {
            e.is_loop() && e.gain.is_identity()
        };
        if inside {
            out.insert(e.id);
        }
    }
    Ok(out)
}

pub fn is_holonomy_closed(graph: &GainGraph, set: &EdgeSubset) -> Result<bool> {
    Ok(holonomy_closure(graph, set)? == *set)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::graph::walk_gain;
    use crate::group::{build_cyclic, regular_action, standard_colors, FiniteGroup};
    use crate::limits::Limits;

    fn z(n: usize) -> Arc<FiniteGroup> {
        Arc::new(build_cyclic(n, &Limits::default()).unwrap())
    }

    fn set(ids: &[usize]) -> EdgeSubset {
        ids.iter().map(|&i| EdgeId(i)).collect()
    }

    #[test]
    fn generators() {
        let path = GainGraph::from_edges(z(3), 3, &[(0, 1, 1), (1, 2, 2)]).unwrap();
        let ctx = HolonomyContext::new(&path, &path.edge_set()).unwrap();
        assert!(holonomy_generators(&ctx, 0).unwrap().is_empty());

        let tri = GainGraph::from_edges(z(5), 3, &[(0, 1, 0), (1, 2, 0), (2, 0, 3)]).unwrap();
        let ctx = HolonomyContext::new(&tri, &tri.edge_set()).unwrap();
        let cycle = walk_gain(&tri, 0, &[(EdgeId(0), 1), (EdgeId(1), 2), (EdgeId(2), 0)]).unwrap();
        assert_eq!(holonomy_generators(&ctx, 0).unwrap(), vec![cycle]);

        let lp = GainGraph::from_edges(z(5), 1, &[(0, 0, 2)]).unwrap();
        let ctx = HolonomyContext::new(&lp, &lp.edge_set()).unwrap();
        assert_eq!(holonomy_generators(&ctx, 0).unwrap(), vec![GroupElement(2)]);
    }

    #[test]
    fn groups() {
        let tri = GainGraph::from_edges(z(4), 3, &[(0, 1, 1), (1, 2, 1), (0, 2, 2)]).unwrap();
        let ctx = HolonomyContext::new(&tri, &tri.edge_set()).unwrap();
        assert!(holonomy_group(&ctx, 0).unwrap().is_trivial());

        let lp = GainGraph::from_edges(z(4), 1, &[(0, 0, 2)]).unwrap();
        let ctx = HolonomyContext::new(&lp, &lp.edge_set()).unwrap();
        assert_eq!(
            holonomy_group(&ctx, 0).unwrap().elements(),
            &[GroupElement(0), GroupElement(2)]
        );

        let s3 = Arc::new(crate::group::build_symmetric(3, &Limits::default()).unwrap());
        let two = GainGraph::from_edges(s3.clone(), 1, &[(0, 0, 1), (0, 0, 3)]).unwrap();
        let ctx = HolonomyContext::new(&two, &two.edge_set()).unwrap();
        assert_eq!(
            holonomy_group(&ctx, 0).unwrap(),
            generate_subgroup(&s3, &[GroupElement(1), GroupElement(3)])
        );
    }

    #[test]
    fn fixed_counts() {
        let lim = Limits::default();
        let one = GainGraph::new(z(5), 1);
        let q5 = regular_action(z(5));
        assert_eq!(h_fixed_count(&one, &q5, &set(&[])).unwrap(), 5);
        let digon = GainGraph::from_edges(z(2), 2, &[(0, 1, 0), (0, 1, 1)]).unwrap();
        assert_eq!(
            h_fixed_count(&digon, &regular_action(z(2)), &digon.edge_set()).unwrap(),
            0
        );
        let std1 = standard_colors(z(2), 1, &lim).unwrap();
        assert_eq!(h_fixed_count(&digon, &std1, &digon.edge_set()).unwrap(), 1);
        let apart = GainGraph::from_edges(z(2), 4, &[(0, 1, 0), (2, 3, 0)]).unwrap();
        assert_eq!(
            h_fixed_count(&apart, &std1, &apart.edge_set()),
            Err(Error::NotConnected)
        );
    }

    #[test]
    fn closures() {
        let digon = GainGraph::from_edges(z(2), 2, &[(0, 1, 0), (0, 1, 1)]).unwrap();
        assert_eq!(holonomy_closure(&digon, &set(&[0])).unwrap(), set(&[0]));
        assert_eq!(holonomy_closure(&digon, &set(&[1])).unwrap(), set(&[1]));
        assert_eq!(
            holonomy_closure(&digon, &set(&[0, 1])).unwrap(),
            set(&[0, 1])
        );

        let nonid = GainGraph::from_edges(z(2), 1, &[(0, 0, 1)]).unwrap();
        assert_eq!(holonomy_closure(&nonid, &set(&[])).unwrap(), set(&[]));
        let id = GainGraph::from_edges(z(2), 1, &[(0, 0, 0)]).unwrap();
        assert_eq!(holonomy_closure(&id, &set(&[])).unwrap(), set(&[0]));
        assert!(!is_holonomy_closed(&id, &set(&[])).unwrap());

        assert!(is_holonomy_closed(&digon, &digon.edge_set()).unwrap());
        assert!(is_holonomy_closed(&digon, &set(&[0])).unwrap());
        let twin = GainGraph::from_edges(z(2), 2, &[(0, 1, 0), (0, 1, 0)]).unwrap();
        assert!(!is_holonomy_closed(&twin, &set(&[0])).unwrap());
    }

    #[test]
    fn closure_uses_group_not_generators() {
        // ℤ₄ loop of gain 1 at vertex 0 generates everything; a parallel
        // link pair with holonomy 3 = 1⁻¹ is in the closure
        let g = GainGraph::from_edges(z(4), 2, &[(0, 0, 1), (0, 1, 0), (0, 1, 3)]).unwrap();
        assert_eq!(
            holonomy_closure(&g, &set(&[0, 1])).unwrap(),
            set(&[0, 1, 2])
        );
        // gain 2 loop generates {0,2}; holonomy 3 is outside
        let g = GainGraph::from_edges(z(4), 2, &[(0, 0, 2), (0, 1, 0), (0, 1, 3)]).unwrap();
        assert_eq!(holonomy_closure(&g, &set(&[0, 1])).unwrap(), set(&[0, 1]));
    }
}
