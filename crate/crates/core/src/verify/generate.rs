use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::error::Result;
use crate::graph::GainGraph;
use crate::group::{
    build_cyclic, build_symmetric, regular_action, standard_colors, subset_action, trivial_action,
    zero_free_colors, FiniteGroup, GroupElement, SpinAction,
};
use crate::limits::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Cyclic(usize),
    Symmetric(usize),
}

impl GroupKind {
    pub fn build(self, limits: &Limits) -> Result<FiniteGroup> {
        match self {
            GroupKind::Cyclic(n) => build_cyclic(n, limits),
            GroupKind::Symmetric(d) => build_symmetric(d, limits),
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Cyclic(n) => write!(f, "Z{n}"),
            GroupKind::Symmetric(d) => write!(f, "S{d}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ActionKind {
    Regular,
    Trivial(usize),
    StandardColors(usize),
    ZeroFree(usize),
    /// Subsets of the points of a symmetric group.
    Subsets,
}

impl ActionKind {
    pub fn build(
        self,
        group: &GroupKind,
        built: Arc<FiniteGroup>,
        limits: &Limits,
    ) -> Result<SpinAction> {
        match self {
            ActionKind::Regular => Ok(regular_action(built)),
            ActionKind::Trivial(m) => trivial_action(built, m, limits),
            ActionKind::StandardColors(k) => standard_colors(built, k, limits),
            ActionKind::ZeroFree(k) => zero_free_colors(built, k, limits),
            ActionKind::Subsets => match *group {
                GroupKind::Symmetric(d) => subset_action(d, limits),
                GroupKind::Cyclic(_) => Err(crate::error::Error::InvalidAction(
                    "subset action needs a symmetric group".into(),
                )),
            },
        }
    }

    fn applies_to(self, group: &GroupKind) -> bool {
        !matches!((self, group), (ActionKind::Subsets, GroupKind::Cyclic(_)))
    }
}

impl fmt::Display for ActionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionKind::Regular => f.write_str("regular"),
            ActionKind::Trivial(m) => write!(f, "trivial({m})"),
            ActionKind::StandardColors(k) => write!(f, "standard_colors({k})"),
            ActionKind::ZeroFree(k) => write!(f, "zero_free({k})"),
            ActionKind::Subsets => f.write_str("subsets"),
        }
    }
}

/// Parameters of the random instance generator. The defaults are part of the
/// command-line contract: changing them changes what a seed means.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorConfig {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub groups: Vec<GroupKind>,
    pub actions: Vec<ActionKind>,
    /// Chance that an edge is a loop.
    pub loop_probability: f64,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            max_vertices: 5,
            max_edges: 8,
            groups: vec![
                GroupKind::Cyclic(2),
                GroupKind::Cyclic(3),
                GroupKind::Cyclic(4),
                GroupKind::Symmetric(3),
            ],
            actions: vec![
                ActionKind::Regular,
                ActionKind::Trivial(1),
                ActionKind::Trivial(3),
                ActionKind::StandardColors(1),
                ActionKind::StandardColors(2),
                ActionKind::ZeroFree(1),
                ActionKind::ZeroFree(2),
                ActionKind::Subsets,
            ],
            loop_probability: 0.15,
        }
    }
}

/// A generated instance together with the description that rebuilds it.
#[derive(Debug, Clone)]
pub struct Instance {
    pub group_kind: GroupKind,
    pub action_kind: ActionKind,
    pub graph: GainGraph,
    pub action: SpinAction,
}

impl Instance {
    pub fn new(
        group_kind: GroupKind,
        action_kind: ActionKind,
        vertex_count: usize,
        edges: &[(usize, usize, usize)],
        limits: &Limits,
    ) -> Result<Instance> {
        let group = Arc::new(group_kind.build(limits)?);
        let action = action_kind.build(&group_kind, group, limits)?;
        let graph = GainGraph::from_edges(action.group().clone(), vertex_count, edges)?;
        Ok(Instance {
            group_kind,
            action_kind,
            graph,
            action,
        })
    }

    pub fn with_graph(&self, graph: GainGraph) -> Instance {
        Instance {
            graph,
            ..self.clone()
        }
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} |Q|={} |V|={} edges=[",
            self.group_kind,
            self.action_kind,
            self.action.size(),
            self.graph.vertex_count()
        )?;
        for (i, e) in self.graph.edges().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}:{}->{} g{}", e.id, e.u, e.v, e.gain.0)?;
        }
        f.write_str("]")
    }
}

pub fn random_instance(
    rng: &mut impl Rng,
    config: &GeneratorConfig,
    limits: &Limits,
) -> Result<Instance> {
    let group_kind = config.groups[rng.gen_range(0..config.groups.len())];
    let actions: Vec<ActionKind> = config
        .actions
        .iter()
        .copied()
        .filter(|a| a.applies_to(&group_kind))
        .collect();
    let action_kind = actions[rng.gen_range(0..actions.len())];
    let n = rng.gen_range(1..=config.max_vertices.max(1));
    let m = rng.gen_range(0..=config.max_edges);
    let order = group_kind.build(limits)?.order();
    let edges: Vec<(usize, usize, usize)> = (0..m)
        .map(|_| {
            let u = rng.gen_range(0..n);
            let v = if n == 1 || rng.gen_bool(config.loop_probability) {
                u
            } else {
                (u + rng.gen_range(1..n)) % n
            };
            (u, v, rng.gen_range(0..order))
        })
        .collect();
    Instance::new(group_kind, action_kind, n, &edges, limits)
}

/// A uniformly random switching function.
pub fn random_switching(rng: &mut impl Rng, graph: &GainGraph) -> crate::graph::Switching {
    let order = graph.group().order();
    crate::graph::Switching(
        (0..graph.vertex_count())
            .map(|_| GroupElement(rng.gen_range(0..order)))
            .collect(),
    )
}
