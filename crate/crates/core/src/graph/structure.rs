use std::collections::VecDeque;

use super::{EdgeId, EdgeSubset, GainGraph};
use crate::error::{Error, Result};
use crate::group::GroupElement;

/// How a maximal forest of an edge set is grown: both scan edges in id
/// order starting from the smallest vertex of each component.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum ForestRule {
    #[default]
    BreadthFirst,
    DepthFirst,
}

/// Connected components of an edge set `A` on the full vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    /// Edge sets of the components that contain edges, ordered by smallest vertex.
    pub edge_components: Vec<EdgeSubset>,
    /// Vertices incident with no edge of `A`.
    pub isolated: Vec<usize>,
}

#[derive(Debug, Clone)]
pub(crate) struct ComponentData {
    pub base: usize,
    pub vertices: Vec<usize>,
    /// Edge positions, increasing.
    pub edges: Vec<usize>,
    pub forest: Vec<usize>,
    /// Holonomy of each non-forest edge of the component, at `base`.
    pub generators: Vec<GroupElement>,
}

/// A maximal forest of an edge set together with tree-path gains from each
/// component's base vertex.
#[derive(Debug, Clone)]
pub(crate) struct Analysis {
    pub comp_of: Vec<Option<usize>>,
    pub comps: Vec<ComponentData>,
    /// `potential[x]` is the gain of the forest path from the base of `x`'s
    /// component to `x` (identity for vertices outside the set).
    pub potential: Vec<GroupElement>,
}

fn adjacency(graph: &GainGraph, positions: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let mut adj = vec![Vec::new(); graph.vertex_count()];
    for &p in positions {
        let e = &graph.edges()[p];
        adj[e.u].push((p, e.v));
        if e.is_link() {
            adj[e.v].push((p, e.u));
        }
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    adj
}

impl Analysis {
    pub(crate) fn new(graph: &GainGraph, positions: &[usize], rule: ForestRule) -> Analysis {
        let adj = adjacency(graph, positions);
        let (comp_of, mut comps) = Self::components(graph, positions, &adj);
        for c in &mut comps {
            c.forest = match rule {
                ForestRule::BreadthFirst => bfs_forest(&adj, c.base),
                ForestRule::DepthFirst => dfs_forest(&adj, c.base),
            };
        }
        Self::finish(graph, comp_of, comps)
    }

    /// Uses a caller-chosen forest and base vertices (one per component, in
    /// the order of the components' smallest vertices).
    pub(crate) fn with_forest(
        graph: &GainGraph,
        positions: &[usize],
        forest: &[usize],
        bases: &[usize],
    ) -> Result<Analysis> {
        let adj = adjacency(graph, positions);
        let (comp_of, mut comps) = Self::components(graph, positions, &adj);
        if bases.len() != comps.len() {
            return Err(Error::InvalidForest(format!(
                "{} base vertices given for {} components",
                bases.len(),
                comps.len()
            )));
        }
        let mut in_set = vec![false; graph.edge_count()];
        for &p in positions {
            in_set[p] = true;
        }
        for &p in forest {
            if !in_set[p] {
                return Err(Error::InvalidForest(format!(
                    "edge {} is not in the set",
                    graph.edges()[p].id
                )));
            }
            if graph.edges()[p].is_loop() {
                return Err(Error::InvalidForest("forest contains a loop".into()));
            }
        }
        for (c, &base) in comps.iter_mut().zip(bases) {
            if comp_of.get(base).copied().flatten() != comp_of[c.vertices[0]] {
                return Err(Error::InvalidForest(format!(
                    "base {base} is not in its component"
                )));
            }
            c.base = base;
            c.forest = forest
                .iter()
                .copied()
                .filter(|&p| comp_of[graph.edges()[p].u] == comp_of[c.vertices[0]])
                .collect();
            c.forest.sort_unstable();
            c.forest.dedup();
            if c.forest.len() + 1 != c.vertices.len() {
                return Err(Error::InvalidForest(
                    "not a spanning tree of its component".into(),
                ));
            }
        }
        let analysis = Self::finish(graph, comp_of, comps);
        // a spanning tree with |V|-1 edges reaches every vertex iff it is acyclic
        let mut reached = vec![false; graph.vertex_count()];
        for c in &analysis.comps {
            let tree_adj = adjacency(graph, &c.forest);
            let mut queue = VecDeque::from([c.base]);
            reached[c.base] = true;
            while let Some(x) = queue.pop_front() {
                for &(_, y) in &tree_adj[x] {
                    if !reached[y] {
                        reached[y] = true;
                        queue.push_back(y);
                    }
                }
            }
            if c.vertices.iter().any(|&v| !reached[v]) {
                return Err(Error::InvalidForest("forest contains a cycle".into()));
            }
        }
        Ok(analysis)
    }

    fn components(
        graph: &GainGraph,
        positions: &[usize],
        adj: &[Vec<(usize, usize)>],
    ) -> (Vec<Option<usize>>, Vec<ComponentData>) {
        let n = graph.vertex_count();
        let mut comp_of = vec![None; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if comp_of[start].is_some() || adj[start].is_empty() {
                continue;
            }
            let id = comps.len();
            let mut vertices = vec![start];
            comp_of[start] = Some(id);
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &(_, y) in &adj[x] {
                    if comp_of[y].is_none() {
                        comp_of[y] = Some(id);
                        vertices.push(y);
                        queue.push_back(y);
                    }
                }
            }
            vertices.sort_unstable();
            comps.push(ComponentData {
                base: start,
                vertices,
                edges: Vec::new(),
                forest: Vec::new(),
                generators: Vec::new(),
            });
        }
        for &p in positions {
            let c = comp_of[graph.edges()[p].u].expect("endpoint of a set edge");
            comps[c].edges.push(p);
        }
        for c in &mut comps {
            c.edges.sort_unstable();
        }
        (comp_of, comps)
    }

    fn finish(
        graph: &GainGraph,
        comp_of: Vec<Option<usize>>,
        mut comps: Vec<ComponentData>,
    ) -> Analysis {
        let grp = graph.group();
        let mut potential = vec![GroupElement::IDENTITY; graph.vertex_count()];
        for c in &comps {
            let tree_adj = adjacency(graph, &c.forest);
            let mut seen = vec![false; graph.vertex_count()];
            seen[c.base] = true;
            let mut queue = VecDeque::from([c.base]);
            while let Some(x) = queue.pop_front() {
                for &(p, y) in &tree_adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        potential[y] = grp.mul(potential[x], graph.gain_from(p, x));
                        queue.push_back(y);
                    }
                }
            }
        }
        let mut analysis = Analysis {
            comp_of,
            comps: Vec::new(),
            potential,
        };
        for c in &mut comps {
            c.generators = c
                .edges
                .iter()
                .filter(|p| c.forest.binary_search(p).is_err())
                .map(|&p| analysis.holonomy(graph, p))
                .collect();
        }
        analysis.comps = comps;
        analysis
    }

    /// `φ(W_e) = φ(T_u) φ(e) φ(T_v)⁻¹` for `e: u → v`; meaningful when both
    /// endpoints lie in one component of the set.
    pub(crate) fn holonomy(&self, graph: &GainGraph, pos: usize) -> GroupElement {
        let grp = graph.group();
        let e = &graph.edges()[pos];
        grp.mul(
            grp.mul(self.potential[e.u], e.gain),
            grp.inv(self.potential[e.v]),
        )
    }

    /// Component containing both endpoints of the edge at `pos`, if any.
    pub(crate) fn spanning_component(&self, graph: &GainGraph, pos: usize) -> Option<usize> {
        let e = &graph.edges()[pos];
        match (self.comp_of[e.u], self.comp_of[e.v]) {
            (Some(a), Some(b)) if a == b => Some(a),
            _ => None,
        }
    }

    pub(crate) fn isolated(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.comp_of.len()).filter(|&v| self.comp_of[v].is_none())
    }

    pub(crate) fn isolated_count(&self) -> usize {
        self.comp_of.iter().filter(|c| c.is_none()).count()
    }

    pub(crate) fn forest(&self) -> Vec<usize> {
        let mut f: Vec<usize> = self
            .comps
            .iter()
            .flat_map(|c| c.forest.iter().copied())
            .collect();
        f.sort_unstable();
        f
    }

    pub(crate) fn is_component_balanced(&self, c: usize) -> bool {
        self.comps[c].generators.iter().all(|g| g.is_identity())
    }

    pub(crate) fn balanced_count(&self) -> usize {
        (0..self.comps.len())
            .filter(|&c| self.is_component_balanced(c))
            .count()
            + self.isolated_count()
    }
}

fn bfs_forest(adj: &[Vec<(usize, usize)>], base: usize) -> Vec<usize> {
    let mut seen = vec![false; adj.len()];
    seen[base] = true;
    let mut forest = Vec::new();
    let mut queue = VecDeque::from([base]);
    while let Some(x) = queue.pop_front() {
        for &(p, y) in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                forest.push(p);
                queue.push_back(y);
            }
        }
    }
    forest.sort_unstable();
    forest
}

fn dfs_forest(adj: &[Vec<(usize, usize)>], base: usize) -> Vec<usize> {
    let mut seen = vec![false; adj.len()];
    seen[base] = true;
    let mut forest = Vec::new();
    let mut stack = vec![(base, 0usize)];
    while let Some(&mut (x, ref mut next)) = stack.last_mut() {
        if let Some(&(p, y)) = adj[x].get(*next) {
            *next += 1;
            if !seen[y] {
                seen[y] = true;
                forest.push(p);
                stack.push((y, 0));
            }
        } else {
            stack.pop();
        }
    }
    forest.sort_unstable();
    forest
}

/// Union-find whose nodes carry the gain from their root, used by the
/// counting loops where a full [`Analysis`] per subset would be too slow.
/// The base vertex of each component is whatever ends up as its root, so
/// generators agree with [`Analysis`] only up to conjugation.
pub(crate) struct WeightedForest<'g> {
    graph: &'g GainGraph,
    parent: Vec<usize>,
    /// Gain from `parent[x]` to `x`.
    rel: Vec<GroupElement>,
    touched: Vec<bool>,
    cycle_edges: Vec<usize>,
}

impl<'g> WeightedForest<'g> {
    pub(crate) fn new(graph: &'g GainGraph) -> Self {
        let n = graph.vertex_count();
        WeightedForest {
            graph,
            parent: (0..n).collect(),
            rel: vec![GroupElement::IDENTITY; n],
            touched: vec![false; n],
            cycle_edges: Vec::new(),
        }
    }

    pub(crate) fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i;
        }
        self.rel.fill(GroupElement::IDENTITY);
        self.touched.fill(false);
        self.cycle_edges.clear();
    }

    /// Root of `x` and the gain from that root to `x`.
    pub(crate) fn find(&mut self, x: usize) -> (usize, GroupElement) {
        let grp = self.graph.group();
        let mut path = Vec::new();
        let mut r = x;
        while self.parent[r] != r {
            path.push(r);
            r = self.parent[r];
        }
        // compress from the top down so each node's rel becomes root-relative
        for &y in path.iter().rev() {
            let p = self.parent[y];
            if p != r {
                self.rel[y] = grp.mul(self.rel[p], self.rel[y]);
                self.parent[y] = r;
            }
        }
        let pot = if x == r {
            GroupElement::IDENTITY
        } else {
            self.rel[x]
        };
        (r, pot)
    }

    pub(crate) fn add(&mut self, pos: usize) {
        let grp = self.graph.group();
        let e = self.graph.edges()[pos];
        self.touched[e.u] = true;
        self.touched[e.v] = true;
        let (ru, pu) = self.find(e.u);
        let (rv, pv) = self.find(e.v);
        if ru == rv {
            self.cycle_edges.push(pos);
        } else {
            // new potential of rv is pu·φ·pv⁻¹, so that pot(v) = pot(u)·φ
            self.parent[rv] = ru;
            self.rel[rv] = grp.mul(grp.mul(pu, e.gain), grp.inv(pv));
        }
    }

    /// Holonomy at the root of the edge's component, when the endpoints are
    /// connected (always, for loops). A loop at an untouched vertex reports
    /// that vertex as its own root.
    pub(crate) fn holonomy(&mut self, pos: usize) -> Option<(usize, GroupElement)> {
        let grp = self.graph.group();
        let e = self.graph.edges()[pos];
        let (ru, pu) = self.find(e.u);
        let (rv, pv) = self.find(e.v);
        if ru != rv {
            return None;
        }
        Some((ru, grp.mul(grp.mul(pu, e.gain), grp.inv(pv))))
    }

    pub(crate) fn is_touched(&self, v: usize) -> bool {
        self.touched[v]
    }

    /// Non-identity holonomy generators per component root, plus the number
    /// of vertices no edge touched.
    pub(crate) fn profile(&mut self) -> (Vec<(usize, Vec<GroupElement>)>, usize) {
        let n = self.parent.len();
        let mut slot = vec![usize::MAX; n];
        let mut comps: Vec<(usize, Vec<GroupElement>)> = Vec::new();
        let mut isolated = 0;
        for v in 0..n {
            if !self.touched[v] {
                isolated += 1;
                continue;
            }
            let (r, _) = self.find(v);
            if slot[r] == usize::MAX {
                slot[r] = comps.len();
                comps.push((r, Vec::new()));
            }
        }
        let cycles = std::mem::take(&mut self.cycle_edges);
        for &pos in &cycles {
            if let Some((r, h)) = self.holonomy(pos) {
                if !h.is_identity() {
                    comps[slot[r]].1.push(h);
                }
            }
        }
        self.cycle_edges = cycles;
        (comps, isolated)
    }
}

pub fn components(graph: &GainGraph, set: &EdgeSubset) -> Result<Components> {
    let positions = graph.positions(set)?;
    let a = Analysis::new(graph, &positions, ForestRule::BreadthFirst);
    Ok(Components {
        edge_components: a
            .comps
            .iter()
            .map(|c| graph.subset_of_positions(c.edges.iter().copied()))
            .collect(),
        isolated: a.isolated().collect(),
    })
}

/// Maximal forest grown breadth-first in edge-id order.
pub fn spanning_forest(graph: &GainGraph, set: &EdgeSubset) -> Result<EdgeSubset> {
    spanning_forest_by(graph, set, ForestRule::BreadthFirst)
}

pub fn spanning_forest_by(
    graph: &GainGraph,
    set: &EdgeSubset,
    rule: ForestRule,
) -> Result<EdgeSubset> {
    let positions = graph.positions(set)?;
    let a = Analysis::new(graph, &positions, rule);
    Ok(graph.subset_of_positions(a.forest()))
}

/// Ordered product of gains along a walk given as a start vertex and a
/// sequence of `(edge, vertex reached)` steps. Loops are read forwards.
pub fn walk_gain(
    graph: &GainGraph,
    start: usize,
    steps: &[(EdgeId, usize)],
) -> Result<GroupElement> {
    if start >= graph.vertex_count() {
        return Err(Error::InvalidVertex(start));
    }
    let grp = graph.group();
    let mut at = start;
    let mut gain = GroupElement::IDENTITY;
    for (i, &(e, next)) in steps.iter().enumerate() {
        let edge = graph.edge(e)?;
        let ok = if edge.is_loop() {
            at == edge.u && next == edge.u
        } else {
            (at == edge.u && next == edge.v) || (at == edge.v && next == edge.u)
        };
        if !ok {
            return Err(Error::MalformedWalk(format!(
                "step {i}: edge {e} does not join {at} and {next}"
            )));
        }
        gain = grp.mul(gain, graph.oriented_gain(e, at)?);
        at = next;
    }
    Ok(gain)
}

pub fn is_balanced(graph: &GainGraph, set: &EdgeSubset) -> Result<bool> {
    let positions = graph.positions(set)?;
    let a = Analysis::new(graph, &positions, ForestRule::BreadthFirst);
    Ok((0..a.comps.len()).all(|c| a.is_component_balanced(c)))
}

/// `b(Φ|A)`: balanced components of `(V, A)`, isolated vertices included.
pub fn balanced_component_count(graph: &GainGraph, set: &EdgeSubset) -> Result<usize> {
    let positions = graph.positions(set)?;
    Ok(Analysis::new(graph, &positions, ForestRule::BreadthFirst).balanced_count())
}

/// Rank in the frame matroid: `|V| − b(Φ|A)`.
pub fn frame_rank(graph: &GainGraph, set: &EdgeSubset) -> Result<usize> {
    Ok(graph.vertex_count() - balanced_component_count(graph, set)?)
}

/// `A` plus every edge whose endpoints are joined by a path in `A`; every
/// loop is in every closure.
pub fn graphic_closure(graph: &GainGraph, set: &EdgeSubset) -> Result<EdgeSubset> {
    let positions = graph.positions(set)?;
    let a = Analysis::new(graph, &positions, ForestRule::BreadthFirst);
    Ok(graph
        .edges()
        .iter()
        .enumerate()
        .filter(|&(p, e)| {
            set.contains(e.id) || e.is_loop() || a.spanning_component(graph, p).is_some()
        })
        .map(|(_, e)| e.id)
        .collect())
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::group::{build_cyclic, build_symmetric, FiniteGroup};
    use crate::limits::Limits;

    fn z(n: usize) -> Arc<FiniteGroup> {
        Arc::new(build_cyclic(n, &Limits::default()).unwrap())
    }

    fn set(ids: &[usize]) -> EdgeSubset {
        ids.iter().map(|&i| EdgeId(i)).collect()
    }

    #[test]
    fn component_examples() {
        let g = GainGraph::from_edges(z(2), 3, &[(0, 1, 0), (1, 2, 0), (2, 0, 0)]).unwrap();
        let c = components(&g, &set(&[])).unwrap();
        assert_eq!((c.edge_components.len(), c.isolated.len()), (0, 3));
        assert_eq!(
            components(&g, &g.edge_set()).unwrap().edge_components.len(),
            1
        );
        let two = GainGraph::from_edges(z(2), 4, &[(0, 1, 0), (2, 3, 1)]).unwrap();
        assert_eq!(
            components(&two, &two.edge_set())
                .unwrap()
                .edge_components
                .len(),
            2
        );
    }

    #[test]
    fn forest_examples() {
        let tri = GainGraph::from_edges(z(2), 3, &[(0, 1, 0), (1, 2, 0), (2, 0, 0)]).unwrap();
        let f = spanning_forest(&tri, &tri.edge_set()).unwrap();
        // BFS from 0 scans e0 (to 1) and e2 (to 2)
        assert_eq!(f.ids(), vec![0, 2]);
        let path = GainGraph::from_edges(z(2), 3, &[(0, 1, 1), (1, 2, 1)]).unwrap();
        assert_eq!(
            spanning_forest(&path, &path.edge_set()).unwrap(),
            path.edge_set()
        );
        let digon = GainGraph::from_edges(z(2), 2, &[(0, 1, 0), (0, 1, 1)]).unwrap();
        assert_eq!(
            spanning_forest(&digon, &digon.edge_set()).unwrap().ids(),
            vec![0]
        );
        let dfs = spanning_forest_by(&tri, &tri.edge_set(), ForestRule::DepthFirst).unwrap();
        assert_eq!(dfs.ids(), vec![0, 1]);
    }

    #[test]
    fn walks() {
        let g = GainGraph::from_edges(z(5), 2, &[(0, 1, 3)]).unwrap();
        assert_eq!(walk_gain(&g, 0, &[]).unwrap(), GroupElement(0));
        assert_eq!(
            walk_gain(&g, 0, &[(EdgeId(0), 1)]).unwrap(),
            GroupElement(3)
        );
        assert_eq!(
            walk_gain(&g, 0, &[(EdgeId(0), 1), (EdgeId(0), 0)]).unwrap(),
            GroupElement(0)
        );
        assert!(matches!(
            walk_gain(&g, 0, &[(EdgeId(0), 0)]),
            Err(Error::MalformedWalk(_))
        ));
    }

    #[test]
    fn balance() {
        let s3 = Arc::new(build_symmetric(3, &Limits::default()).unwrap());
        let path = GainGraph::from_edges(s3.clone(), 3, &[(0, 1, 3), (1, 2, 4)]).unwrap();
        assert!(is_balanced(&path, &path.edge_set()).unwrap());
        let digon = GainGraph::from_edges(z(3), 2, &[(0, 1, 0), (0, 1, 2)]).unwrap();
        assert!(!is_balanced(&digon, &digon.edge_set()).unwrap());
        // triangle with gains g, h, (gh)⁻¹ around the cycle 0→1→2→0
        let (g, h) = (GroupElement(3), GroupElement(4));
        let closing = s3.inv(s3.mul(g, h));
        let tri = GainGraph::from_edges(
            s3.clone(),
            3,
            &[(0, 1, g.0), (1, 2, h.0), (2, 0, closing.0)],
        )
        .unwrap();
        let cycle = walk_gain(&tri, 0, &[(EdgeId(0), 1), (EdgeId(1), 2), (EdgeId(2), 0)]).unwrap();
        assert!(cycle.is_identity());
        assert!(is_balanced(&tri, &tri.edge_set()).unwrap());
    }

    #[test]
    fn balanced_counts_and_rank() {
        let g = GainGraph::from_edges(z(2), 3, &[(0, 1, 0), (0, 1, 1)]).unwrap();
        assert_eq!(balanced_component_count(&g, &set(&[])).unwrap(), 3);
        assert_eq!(balanced_component_count(&g, &g.edge_set()).unwrap(), 1);
        let tri = GainGraph::from_edges(z(2), 3, &[(0, 1, 0), (1, 2, 0), (2, 0, 0)]).unwrap();
        assert_eq!(balanced_component_count(&tri, &tri.edge_set()).unwrap(), 1);
        assert_eq!(frame_rank(&tri, &set(&[])).unwrap(), 0);
        assert_eq!(frame_rank(&tri, &tri.edge_set()).unwrap(), 2);
        let unbal = GainGraph::from_edges(z(2), 3, &[(0, 1, 0), (1, 2, 0), (2, 0, 1)]).unwrap();
        assert_eq!(frame_rank(&unbal, &unbal.edge_set()).unwrap(), 3);
    }

    #[test]
    fn closure_examples() {
        let digon = GainGraph::from_edges(z(2), 2, &[(0, 1, 0), (0, 1, 1)]).unwrap();
        assert_eq!(
            graphic_closure(&digon, &set(&[0])).unwrap(),
            digon.edge_set()
        );
        let loops = GainGraph::from_edges(z(2), 2, &[(0, 0, 1), (0, 1, 0), (1, 1, 0)]).unwrap();
        assert_eq!(
            graphic_closure(&loops, &set(&[])).unwrap().ids(),
            vec![0, 2]
        );
        let chord = GainGraph::from_edges(z(2), 3, &[(0, 1, 0), (1, 2, 0), (0, 2, 1)]).unwrap();
        assert_eq!(
            graphic_closure(&chord, &set(&[0, 1])).unwrap(),
            chord.edge_set()
        );
    }

    #[test]
    fn custom_forest_validation() {
        let tri = GainGraph::from_edges(z(2), 3, &[(0, 1, 0), (1, 2, 0), (2, 0, 1)]).unwrap();
        let all = [0, 1, 2];
        assert!(Analysis::with_forest(&tri, &all, &[0, 1], &[2]).is_ok());
        assert!(Analysis::with_forest(&tri, &all, &[0], &[0]).is_err());
        assert!(Analysis::with_forest(&tri, &all, &[0, 1, 2], &[0]).is_err());
        assert!(Analysis::with_forest(&tri, &[0, 1], &[0, 1], &[0]).is_ok());
        assert!(Analysis::with_forest(&tri, &[0], &[0, 1], &[0]).is_err());
        assert!(Analysis::with_forest(&tri, &all, &[0, 1], &[0, 1]).is_err());
    }

    #[test]
    fn weighted_forest_profiles_match_analysis() {
        let s3 = Arc::new(build_symmetric(3, &Limits::default()).unwrap());
        let g = GainGraph::from_edges(
            s3.clone(),
            5,
            &[
                (0, 1, 1),
                (1, 2, 3),
                (2, 0, 5),
                (3, 3, 2),
                (1, 0, 4),
                (2, 1, 2),
            ],
        )
        .unwrap();
        let positions: Vec<usize> = (0..g.edge_count()).collect();
        let a = Analysis::new(&g, &positions, ForestRule::BreadthFirst);
        let mut wf = WeightedForest::new(&g);
        for &p in &positions {
            wf.add(p);
        }
        let (comps, isolated) = wf.profile();
        assert_eq!(isolated, a.isolated_count());
        assert_eq!(comps.len(), a.comps.len());
        for (root, gens) in comps {
            let c = a.comp_of[root].unwrap();
            let from_uf = crate::group::generate_subgroup(&s3, &gens);
            let from_bfs = crate::group::generate_subgroup(&s3, &a.comps[c].generators);
            // different bases: conjugate by the tree path between them
            let conj = from_bfs.conjugate(&s3, a.potential[root]);
            assert_eq!(from_uf, conj);
        }
    }
}
