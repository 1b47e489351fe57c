//! The JSON instance format.
//!
//! ```json
//! {
//!   "comment": "digon with gains 1 and g",
//!   "group": { "kind": "cyclic", "order": 2 },
//!   "spins": [ { "kind": "regular" }, { "kind": "trivial", "size": 1, "mult": 2 } ],
//!   "graph": { "vertices": 2, "edges": [[0, 1, 0], [0, 1, 1]] },
//!   "signed": { "vertices": 2, "edges": [[0, 1, "+"]] }
//! }
//! ```
//!
//! Gains are element indices read in the from→to orientation; an edge given
//! as `[u, v]` has the identity gain.

use std::sync::Arc;

use frustra::group::{
    build_cyclic, build_symmetric, disjoint_union_action, regular_action, standard_colors,
    subset_action, trivial_action, zero_free_colors,
};
use frustra::{
    FiniteGroup, GainGraph, GroupElement, Limits, Sign, SignedGraph, SimpleGraph, SpinAction,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comment: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub spins: Vec<SpinSpec>,
    pub graph: GraphSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signed: Option<SignedSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupSpec {
    Cyclic { order: usize },
    Symmetric { degree: usize },
    Table { table: Vec<Vec<usize>> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpinSpec {
    #[serde(flatten)]
    pub kind: SpinKind,
    /// Number of copies of this part; 1 when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SpinKind {
    Regular,
    Trivial {
        size: usize,
    },
    StandardColors {
        k: usize,
    },
    ZeroFree {
        k: usize,
    },
    Subsets {
        degree: usize,
    },
    /// `table[q][g]` is the image of spin `q` under element `g`.
    Table {
        table: Vec<Vec<usize>>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EdgeSpec {
    Gain(usize, usize, usize),
    Plain(usize, usize),
}

impl EdgeSpec {
    pub fn ends(self) -> (usize, usize) {
        match self {
            EdgeSpec::Gain(u, v, _) | EdgeSpec::Plain(u, v) => (u, v),
        }
    }

    pub fn gain(self) -> usize {
        match self {
            EdgeSpec::Gain(_, _, g) => g,
            EdgeSpec::Plain(..) => 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphSpec {
    pub vertices: usize,
    #[serde(default)]
    pub edges: Vec<EdgeSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignedSpec {
    pub vertices: usize,
    #[serde(default)]
    pub edges: Vec<(usize, usize, String)>,
}

/// A located problem with an instance file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceError {
    pub location: String,
    pub message: String,
}

impl std::fmt::Display for InstanceError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

fn located(location: impl Into<String>, message: impl ToString) -> InstanceError {
    InstanceError {
        location: location.into(),
        message: message.to_string(),
    }
}

pub fn parse(text: &str) -> Result<InstanceFile, InstanceError> {
    serde_json::from_str(text).map_err(|e| {
        let location = format!("line {} column {}", e.line(), e.column());
        let message = e.to_string();
        let message = message
            .strip_suffix(&format!(" at {location}"))
            .unwrap_or(&message)
            .to_string();
        located(location, message)
    })
}

pub fn render(file: &InstanceFile) -> String {
    serde_json::to_string_pretty(file).expect("instance files always serialize")
}

/// Everything the commands need, validated.
#[derive(Debug, Clone)]
pub struct Built {
    pub group: Arc<FiniteGroup>,
    pub parts: Vec<SpinAction>,
    pub part_names: Vec<String>,
    pub mults: Vec<usize>,
    pub graph: GainGraph,
}

impl Built {
    /// The spin set: every part with its multiplicity.
    pub fn action(&self, limits: &Limits) -> Result<SpinAction, frustra::Error> {
        disjoint_union_action(&self.parts, &self.mults, limits)
    }
}

impl GroupSpec {
    pub fn build(&self, limits: &Limits) -> Result<FiniteGroup, InstanceError> {
        match self {
            GroupSpec::Cyclic { order } => build_cyclic(*order, limits),
            GroupSpec::Symmetric { degree } => build_symmetric(*degree, limits),
            GroupSpec::Table { table } => FiniteGroup::from_table(table, limits),
        }
        .map_err(|e| located("group", e))
    }
}

impl SpinKind {
    pub fn name(&self) -> String {
        match self {
            SpinKind::Regular => "regular".into(),
            SpinKind::Trivial { size } => format!("trivial({size})"),
            SpinKind::StandardColors { k } => format!("standard_colors({k})"),
            SpinKind::ZeroFree { k } => format!("zero_free({k})"),
            SpinKind::Subsets { degree } => format!("subsets({degree})"),
            SpinKind::Table { table } => format!("table({})", table.len()),
        }
    }

    pub fn build(
        &self,
        group: &Arc<FiniteGroup>,
        limits: &Limits,
    ) -> Result<SpinAction, frustra::Error> {
        let action = match self {
            SpinKind::Regular => Ok(regular_action(group.clone())),
            SpinKind::Trivial { size } => trivial_action(group.clone(), *size, limits),
            SpinKind::StandardColors { k } => standard_colors(group.clone(), *k, limits),
            SpinKind::ZeroFree { k } => zero_free_colors(group.clone(), *k, limits),
            SpinKind::Subsets { degree } => subset_action(*degree, limits),
            SpinKind::Table { table } => SpinAction::from_table(group.clone(), table, limits),
        }?;
        if !action.same_group(group) {
            return Err(frustra::Error::GroupMismatch);
        }
        Ok(action)
    }
}

impl InstanceFile {
    pub fn group(&self, limits: &Limits) -> Result<Arc<FiniteGroup>, InstanceError> {
        self.group
            .as_ref()
            .ok_or_else(|| located("group", "missing group"))?
            .build(limits)
            .map(Arc::new)
    }

    pub fn build(&self, limits: &Limits) -> Result<Built, InstanceError> {
        let group = self.group(limits)?;
        let specs = if self.spins.is_empty() {
            vec![SpinSpec {
                kind: SpinKind::Regular,
                mult: None,
            }]
        } else {
            self.spins.clone()
        };
        let mut parts = Vec::new();
        for (i, s) in specs.iter().enumerate() {
            parts.push(
                s.kind
                    .build(&group, limits)
                    .map_err(|e| located(format!("spins[{i}]"), e))?,
            );
        }
        let n = self.graph.vertices;
        let mut graph = GainGraph::new(group.clone(), n);
        for (i, e) in self.graph.edges.iter().enumerate() {
            let (u, v) = e.ends();
            if u >= n || v >= n {
                return Err(located(
                    format!("graph.edges[{i}]"),
                    format!("endpoint out of range for {n} vertices"),
                ));
            }
            if e.gain() >= group.order() {
                return Err(located(
                    format!("graph.edges[{i}]"),
                    format!(
                        "gain {} out of range for a group of order {}",
                        e.gain(),
                        group.order()
                    ),
                ));
            }
            graph
                .add_edge(u, v, GroupElement(e.gain()))
                .map_err(|err| located(format!("graph.edges[{i}]"), err))?;
        }
        Ok(Built {
            group,
            part_names: specs.iter().map(|s| s.kind.name()).collect(),
            mults: specs.iter().map(|s| s.mult.unwrap_or(1)).collect(),
            parts,
            graph,
        })
    }

    /// The graph block with gains ignored.
    pub fn adjacency(&self) -> Result<SimpleGraph, InstanceError> {
        SimpleGraph::new(
            self.graph.vertices,
            self.graph.edges.iter().map(|e| e.ends()).collect(),
        )
        .map_err(|e| located("graph", e))
    }

    pub fn signed_graph(&self) -> Result<SignedGraph, InstanceError> {
        let s = self
            .signed
            .as_ref()
            .ok_or_else(|| located("signed", "missing signed-graph block"))?;
        let mut edges = Vec::new();
        for (i, (u, v, sign)) in s.edges.iter().enumerate() {
            let sign: Sign = sign
                .parse()
                .map_err(|e| located(format!("signed.edges[{i}]"), e))?;
            edges.push((*u, *v, sign));
        }
        SignedGraph::new(s.vertices, edges).map_err(|e| located("signed", e))
    }
}
