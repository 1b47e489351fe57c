//! Gain graphs: multigraphs with a group element on each oriented edge.

mod structure;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

pub use structure::{
    balanced_component_count, components, frame_rank, graphic_closure, is_balanced,
    spanning_forest, spanning_forest_by, walk_gain, Components, ForestRule,
};
pub(crate) use structure::{Analysis, ComponentData, WeightedForest};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupElement, SpinAction};
use crate::limits::Limits;

/// Stable edge identifier. Ids survive deletion and contraction and are
/// never reused within a graph's lineage.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// An edge `u → v` whose gain is read in that direction. Loops have `u == v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub id: EdgeId,
    pub u: usize,
    pub v: usize,
    pub gain: GroupElement,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    pub fn is_link(&self) -> bool {
        self.u != self.v
    }
}

/// A set of edge ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeSubset(BTreeSet<EdgeId>);

impl EdgeSubset {
    pub fn new() -> EdgeSubset {
        EdgeSubset::default()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.0.contains(&e)
    }

    pub fn insert(&mut self, e: EdgeId) -> bool {
        self.0.insert(e)
    }

    pub fn remove(&mut self, e: EdgeId) -> bool {
        self.0.remove(&e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &EdgeSubset) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &EdgeSubset) -> EdgeSubset {
        EdgeSubset(self.0.union(&other.0).copied().collect())
    }

    pub fn ids(&self) -> Vec<usize> {
        self.0.iter().map(|e| e.0).collect()
    }
}

impl FromIterator<EdgeId> for EdgeSubset {
    fn from_iter<T: IntoIterator<Item = EdgeId>>(iter: T) -> Self {
        EdgeSubset(iter.into_iter().collect())
    }
}

impl fmt::Display for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", e.0)?;
        }
        write!(f, "}}")
    }
}

/// One spin per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct State(pub Vec<usize>);

/// One group element per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Switching(pub Vec<GroupElement>);

impl Switching {
    pub fn identity(n: usize) -> Switching {
        Switching(vec![GroupElement::IDENTITY; n])
    }
}

/// An ordinary graph, given by an edge list. Loops and parallel edges are
/// permitted so that underlying graphs of gain graphs can be represented.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<SimpleGraph> {
        if let Some(&(u, v)) = edges
            .iter()
            .find(|&&(u, v)| u >= vertex_count || v >= vertex_count)
        {
            return Err(Error::InvalidVertex(u.max(v)));
        }
        Ok(SimpleGraph {
            vertex_count,
            edges,
        })
    }

    pub fn complete(n: usize) -> SimpleGraph {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        SimpleGraph {
            vertex_count: n,
            edges,
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct GainGraph {
    group: Arc<FiniteGroup>,
    vertex_count: usize,
    edges: Vec<Edge>,
    next_id: usize,
}

impl fmt::Debug for GainGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GainGraph(n={}; ", self.vertex_count)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}:{}->{}@{}", e.id.0, e.u, e.v, e.gain.0)?;
        }
        write!(f, ")")
    }
}

impl GainGraph {
    pub fn new(group: Arc<FiniteGroup>, vertex_count: usize) -> GainGraph {
        GainGraph {
            group,
            vertex_count,
            edges: Vec::new(),
            next_id: 0,
        }
    }

    /// Builds a graph from `(from, to, gain)` triples; edge ids are the
    /// positions in the list.
    pub fn from_edges(
        group: Arc<FiniteGroup>,
        vertex_count: usize,
        edges: &[(usize, usize, usize)],
    ) -> Result<GainGraph> {
        let mut g = GainGraph::new(group, vertex_count);
        for &(u, v, gain) in edges {
            g.add_edge(u, v, GroupElement(gain))?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize, gain: GroupElement) -> Result<EdgeId> {
        for x in [u, v] {
            if x >= self.vertex_count {
                return Err(Error::InvalidVertex(x));
            }
        }
        if !self.group.contains(gain) {
            return Err(Error::InvalidElement(gain.0));
        }
        let id = EdgeId(self.next_id);
        self.next_id += 1;
        self.edges.push(Edge { id, u, v, gain });
        Ok(id)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Edges in increasing id order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, id: EdgeId) -> Result<&Edge> {
        self.position(id).map(|p| &self.edges[p])
    }

    pub(crate) fn position(&self, id: EdgeId) -> Result<usize> {
        self.edges
            .binary_search_by_key(&id, |e| e.id)
            .map_err(|_| Error::MissingEdge(id))
    }

    pub fn edge_set(&self) -> EdgeSubset {
        self.edges.iter().map(|e| e.id).collect()
    }

    pub fn has_identity_loop(&self) -> bool {
        self.edges
            .iter()
            .any(|e| e.is_loop() && e.gain.is_identity())
    }

    /// Checks that `set` names only edges of this graph.
    pub fn check_subset(&self, set: &EdgeSubset) -> Result<()> {
        match set.iter().find(|&e| self.position(e).is_err()) {
            Some(e) => Err(Error::MissingEdge(e)),
            None => Ok(()),
        }
    }

    pub(crate) fn positions(&self, set: &EdgeSubset) -> Result<Vec<usize>> {
        set.iter().map(|e| self.position(e)).collect()
    }

    pub(crate) fn subset_of_positions(
        &self,
        positions: impl IntoIterator<Item = usize>,
    ) -> EdgeSubset {
        positions.into_iter().map(|p| self.edges[p].id).collect()
    }

    pub fn check_state(&self, action: &SpinAction, state: &State) -> Result<()> {
        if state.0.len() != self.vertex_count {
            return Err(Error::LengthMismatch {
                expected: self.vertex_count,
                found: state.0.len(),
            });
        }
        match state.0.iter().find(|&&q| q >= action.size()) {
            Some(&q) => Err(Error::InvalidSpin(q)),
            None => Ok(()),
        }
    }

    /// The gain of `e` read starting at `from`. Loops return their stored gain.
    pub fn oriented_gain(&self, e: EdgeId, from: usize) -> Result<GroupElement> {
        let edge = self.edge(e)?;
        if from == edge.u {
            Ok(edge.gain)
        } else if from == edge.v {
            Ok(self.group.inv(edge.gain))
        } else {
            Err(Error::NotAnEndpoint {
                edge: e,
                vertex: from,
            })
        }
    }

    #[inline]
    pub(crate) fn gain_from(&self, pos: usize, from: usize) -> GroupElement {
        let e = &self.edges[pos];
        if from == e.u {
            e.gain
        } else {
            self.group.inv(e.gain)
        }
    }

    /// `φ^η(e) = η_u⁻¹ φ(e) η_v` for every edge `e: u → v`.
    pub fn switch(&self, eta: &Switching) -> Result<GainGraph> {
        self.check_switching(eta)?;
        let grp = &self.group;
        let mut g = self.clone();
        for e in &mut g.edges {
            e.gain = grp.mul(grp.mul(grp.inv(eta.0[e.u]), e.gain), eta.0[e.v]);
        }
        Ok(g)
    }

    fn check_switching(&self, eta: &Switching) -> Result<()> {
        if eta.0.len() != self.vertex_count {
            return Err(Error::LengthMismatch {
                expected: self.vertex_count,
                found: eta.0.len(),
            });
        }
        match eta.0.iter().find(|g| !self.group.contains(**g)) {
            Some(g) => Err(Error::InvalidElement(g.0)),
            None => Ok(()),
        }
    }

    /// Removes `e`; ids of the remaining edges are unchanged.
    pub fn delete(&self, e: EdgeId) -> Result<GainGraph> {
        let pos = self.position(e)?;
        let mut g = self.clone();
        g.edges.remove(pos);
        Ok(g)
    }

    /// Keeps only the edges in `set`, on the same vertex set (`Φ|A`).
    pub fn restrict(&self, set: &EdgeSubset) -> Result<GainGraph> {
        self.check_subset(set)?;
        let mut g = self.clone();
        g.edges.retain(|e| set.contains(e.id));
        Ok(g)
    }

    /// The edges of `set` with their endpoints only (`Φ⟨A⟩`). Vertices are
    /// renumbered in increasing order; edge ids are kept.
    pub fn edge_induced(&self, set: &EdgeSubset) -> Result<GainGraph> {
        self.check_subset(set)?;
        let mut used = vec![false; self.vertex_count];
        for e in self.edges.iter().filter(|e| set.contains(e.id)) {
            used[e.u] = true;
            used[e.v] = true;
        }
        let mut label = vec![usize::MAX; self.vertex_count];
        let mut n = 0;
        for v in 0..self.vertex_count {
            if used[v] {
                label[v] = n;
                n += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| set.contains(e.id))
            .map(|e| Edge {
                u: label[e.u],
                v: label[e.v],
                ..*e
            })
            .collect();
        Ok(GainGraph {
            group: self.group.clone(),
            vertex_count: n,
            edges,
            next_id: self.next_id,
        })
    }

    /// Contracts the link `e: u → v`. The graph is first switched at `v`
    /// alone by `φ(e)⁻¹` so `e` gets identity gain; then `e` is deleted and
    /// `v` is merged into `u`. Remaining vertices keep their relative order.
    pub fn contract_link(&self, e: EdgeId) -> Result<GainGraph> {
        let pos = self.position(e)?;
        let edge = self.edges[pos];
        if edge.is_loop() {
            return Err(Error::LoopContraction(e));
        }
        let mut eta = Switching::identity(self.vertex_count);
        eta.0[edge.v] = self.group.inv(edge.gain);
        let mut g = self.switch(&eta)?;
        g.edges.remove(pos);
        let (keep, gone) = (edge.u, edge.v);
        let relabel = |x: usize| {
            let x = if x == gone { keep } else { x };
            if x > gone {
                x - 1
            } else {
                x
            }
        };
        for f in &mut g.edges {
            f.u = relabel(f.u);
            f.v = relabel(f.v);
        }
        g.vertex_count -= 1;
        Ok(g)
    }

    /// The underlying graph, forgetting gains.
    pub fn underlying(&self) -> SimpleGraph {
        SimpleGraph {
            vertex_count: self.vertex_count,
            edges: self.edges.iter().map(|e| (e.u, e.v)).collect(),
        }
    }

    /// `self` and `other` side by side, `other`'s vertices shifted by
    /// `self.vertex_count()` and its edges given fresh ids after `self`'s.
    pub fn disjoint_union(&self, other: &GainGraph) -> Result<GainGraph> {
        self.one_point_union_impl(other, None)
    }

    /// Glues `other` onto `self` by identifying `other`'s vertex `at_other`
    /// with `self`'s vertex `at_self`.
    pub fn one_point_union(
        &self,
        at_self: usize,
        other: &GainGraph,
        at_other: usize,
    ) -> Result<GainGraph> {
        if at_self >= self.vertex_count {
            return Err(Error::InvalidVertex(at_self));
        }
        if at_other >= other.vertex_count {
            return Err(Error::InvalidVertex(at_other));
        }
        self.one_point_union_impl(other, Some((at_self, at_other)))
    }

    fn one_point_union_impl(
        &self,
        other: &GainGraph,
        glue: Option<(usize, usize)>,
    ) -> Result<GainGraph> {
        if *self.group != *other.group {
            return Err(Error::GroupMismatch);
        }
        let map = |x: usize| match glue {
            Some((s, o)) if x == o => s,
            Some((_, o)) if x > o => self.vertex_count + x - 1,
            _ => self.vertex_count + x,
        };
        let n = self.vertex_count + other.vertex_count - usize::from(glue.is_some());
        let mut g = GainGraph {
            group: self.group.clone(),
            vertex_count: n,
            edges: self.edges.clone(),
            next_id: self.next_id,
        };
        for e in &other.edges {
            g.add_edge(map(e.u), map(e.v), e.gain)?;
        }
        Ok(g)
    }
}

/// `s^η_v = s_v η_v`.
pub fn switch_state(state: &State, eta: &Switching, action: &SpinAction) -> Result<State> {
    if state.0.len() != eta.0.len() {
        return Err(Error::LengthMismatch {
            expected: state.0.len(),
            found: eta.0.len(),
        });
    }
    Ok(State(
        state
            .0
            .iter()
            .zip(&eta.0)
            .map(|(&q, &g)| action.act(q, g))
            .collect(),
    ))
}

/// `I(s)`: edges `e: v → w` with `s_w = s_v φ(e)`.
pub fn satisfied_edges(
    graph: &GainGraph,
    action: &SpinAction,
    state: &State,
) -> Result<EdgeSubset> {
    graph.check_state(action, state)?;
    Ok(graph
        .edges
        .iter()
        .filter(|e| action.act(state.0[e.u], e.gain) == state.0[e.v])
        .map(|e| e.id)
        .collect())
}

/// `𝔊Δ`: one edge of every gain for each edge of `adjacency`, in edge
/// order, gains in increasing element order.
pub fn group_expansion(
    adjacency: &SimpleGraph,
    group: Arc<FiniteGroup>,
    limits: &Limits,
) -> Result<GainGraph> {
    let total = adjacency.edges.len() as u128 * group.order() as u128;
    if total > limits.max_expansion_edges as u128 {
        return Err(Error::bound(
            "expansion edge count",
            total,
            limits.max_expansion_edges as u128,
        ));
    }
    let mut g = GainGraph::new(group.clone(), adjacency.vertex_count);
    for &(u, v) in &adjacency.edges {
        for x in group.elements() {
            g.add_edge(u, v, x)?;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_cyclic, regular_action, trivial_action};

    fn z(n: usize) -> Arc<FiniteGroup> {
        Arc::new(build_cyclic(n, &Limits::default()).unwrap())
    }

    #[test]
    fn oriented_gains() {
        let g = GainGraph::from_edges(z(3), 2, &[(0, 1, 1), (0, 1, 0)]).unwrap();
        assert_eq!(g.oriented_gain(EdgeId(0), 0).unwrap(), GroupElement(1));
        assert_eq!(g.oriented_gain(EdgeId(0), 1).unwrap(), GroupElement(2));
        assert_eq!(g.oriented_gain(EdgeId(1), 1).unwrap(), GroupElement(0));
        let g3 = GainGraph::from_edges(z(3), 3, &[(0, 1, 1)]).unwrap();
        assert!(matches!(
            g3.oriented_gain(EdgeId(0), 2),
            Err(Error::NotAnEndpoint { .. })
        ));
    }

    #[test]
    fn switching() {
        let g = GainGraph::from_edges(z(3), 2, &[(0, 1, 1), (1, 1, 2)]).unwrap();
        assert_eq!(g.switch(&Switching::identity(2)).unwrap(), g);
        let eta = Switching(vec![GroupElement(1), GroupElement(0)]);
        let s = g.switch(&eta).unwrap();
        assert_eq!(s.edges()[0].gain, GroupElement(0));
        // loop at v: h⁻¹ g h, abelian here so unchanged
        let eta = Switching(vec![GroupElement(0), GroupElement(1)]);
        assert_eq!(g.switch(&eta).unwrap().edges()[1].gain, GroupElement(2));
    }

    #[test]
    fn state_switching() {
        let reg = regular_action(z(2));
        let s = State(vec![0, 0]);
        assert_eq!(switch_state(&s, &Switching::identity(2), &reg).unwrap(), s);
        let eta = Switching(vec![GroupElement(1), GroupElement(0)]);
        assert_eq!(switch_state(&s, &eta, &reg).unwrap(), State(vec![1, 0]));
        let triv = trivial_action(z(2), 3, &Limits::default()).unwrap();
        let s = State(vec![2, 1]);
        assert_eq!(switch_state(&s, &eta, &triv).unwrap(), s);
    }

    #[test]
    fn satisfaction() {
        let reg = regular_action(z(2));
        let g = GainGraph::from_edges(z(2), 2, &[(0, 1, 0)]).unwrap();
        let sat = satisfied_edges(&g, &reg, &State(vec![1, 1])).unwrap();
        assert_eq!(sat.ids(), vec![0]);
        let lp = GainGraph::from_edges(z(2), 1, &[(0, 0, 1)]).unwrap();
        for q in 0..2 {
            assert!(satisfied_edges(&lp, &reg, &State(vec![q]))
                .unwrap()
                .is_empty());
        }
        let digon = GainGraph::from_edges(z(2), 2, &[(0, 1, 0), (0, 1, 1)]).unwrap();
        let sat = satisfied_edges(&digon, &reg, &State(vec![0, 1])).unwrap();
        assert_eq!(sat.ids(), vec![1]);
        assert!(satisfied_edges(&digon, &reg, &State(vec![0])).is_err());
        assert!(satisfied_edges(&digon, &reg, &State(vec![0, 2])).is_err());
    }

    #[test]
    fn deletion() {
        let k2 = GainGraph::from_edges(z(2), 2, &[(0, 1, 0)]).unwrap();
        let d = k2.delete(EdgeId(0)).unwrap();
        assert_eq!((d.vertex_count(), d.edge_count()), (2, 0));
        let digon = GainGraph::from_edges(z(2), 2, &[(0, 1, 0), (0, 1, 1)]).unwrap();
        let d = digon.delete(EdgeId(0)).unwrap();
        assert_eq!(d.edges()[0].id, EdgeId(1));
        let g = GainGraph::from_edges(z(2), 2, &[(0, 0, 1), (0, 1, 1)]).unwrap();
        let d = g.delete(EdgeId(0)).unwrap();
        assert_eq!(d.edges(), &g.edges()[1..]);
        assert_eq!(g.delete(EdgeId(7)), Err(Error::MissingEdge(EdgeId(7))));
    }

    #[test]
    fn contraction() {
        let k2 = GainGraph::from_edges(z(2), 2, &[(0, 1, 0)]).unwrap();
        let c = k2.contract_link(EdgeId(0)).unwrap();
        assert_eq!((c.vertex_count(), c.edge_count()), (1, 0));

        let digon = GainGraph::from_edges(z(2), 2, &[(0, 1, 0), (0, 1, 1)]).unwrap();
        let c = digon.contract_link(EdgeId(0)).unwrap();
        assert_eq!(c.vertex_count(), 1);
        assert_eq!(
            c.edges(),
            &[Edge {
                id: EdgeId(1),
                u: 0,
                v: 0,
                gain: GroupElement(1)
            }]
        );

        let tri = GainGraph::from_edges(z(2), 3, &[(0, 1, 0), (1, 2, 0), (2, 0, 0)]).unwrap();
        let c = tri.contract_link(EdgeId(0)).unwrap();
        assert_eq!(c.vertex_count(), 2);
        assert!(c
            .edges()
            .iter()
            .all(|e| e.is_link() && e.gain.is_identity()));
        assert_eq!(c.edge_set().ids(), vec![1, 2]);

        let lp = GainGraph::from_edges(z(2), 1, &[(0, 0, 1)]).unwrap();
        assert_eq!(
            lp.contract_link(EdgeId(0)),
            Err(Error::LoopContraction(EdgeId(0)))
        );
    }

    #[test]
    fn contraction_gain_bookkeeping() {
        // e0: 2 → 0 gain 1 in ℤ₃; e1: 0 → 2 gain 2 becomes a loop of gain
        // φ(e0)φ(e1) read around the digon = 1·2 = 0 in ℤ₃.
        let g = GainGraph::from_edges(z(3), 3, &[(2, 0, 1), (0, 2, 2), (1, 2, 1)]).unwrap();
        let c = g.contract_link(EdgeId(0)).unwrap();
        assert_eq!(c.vertex_count(), 2);
        let e1 = c.edge(EdgeId(1)).unwrap();
        assert!(e1.is_loop());
        assert_eq!(e1.gain, GroupElement(0));
        // vertex 0 merged into 2, then everything above 0 shifts down
        let e2 = c.edge(EdgeId(2)).unwrap();
        assert_eq!((e2.u, e2.v), (0, 1));
    }

    #[test]
    fn expansions() {
        let k2 = SimpleGraph::complete(2);
        let g = group_expansion(&k2, z(2), &Limits::default()).unwrap();
        assert_eq!(
            g.edges().iter().map(|e| e.gain.0).collect::<Vec<_>>(),
            vec![0, 1]
        );
        let s3 = Arc::new(crate::group::build_symmetric(3, &Limits::default()).unwrap());
        assert_eq!(
            group_expansion(&k2, s3, &Limits::default())
                .unwrap()
                .edge_count(),
            6
        );
        let empty = SimpleGraph::new(3, vec![]).unwrap();
        assert_eq!(
            group_expansion(&empty, z(4), &Limits::default())
                .unwrap()
                .edge_count(),
            0
        );
    }

    #[test]
    fn unions() {
        let a = GainGraph::from_edges(z(2), 2, &[(0, 1, 1)]).unwrap();
        let b = GainGraph::from_edges(z(2), 3, &[(0, 1, 0), (1, 2, 1)]).unwrap();
        let d = a.disjoint_union(&b).unwrap();
        assert_eq!(d.vertex_count(), 5);
        assert_eq!(d.edges()[2].u, 3);
        let o = a.one_point_union(1, &b, 1).unwrap();
        assert_eq!(o.vertex_count(), 4);
        assert_eq!(
            o.edges().iter().map(|e| (e.u, e.v)).collect::<Vec<_>>(),
            vec![(0, 1), (2, 1), (1, 3)]
        );
    }
}
