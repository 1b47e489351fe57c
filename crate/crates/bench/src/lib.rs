//! Fixed benchmark instances.

use std::sync::Arc;

use frustra::graph::group_expansion;
use frustra::group::{build_cyclic, build_symmetric, regular_action, standard_colors};
use frustra::{GainGraph, Limits, SimpleGraph, SpinAction};

pub struct Case {
    pub name: &'static str,
    pub graph: GainGraph,
    pub action: SpinAction,
}

/// `K_n` with gain `(u + 2v) mod m` on edge `u → v`, under `standard_colors(Z_m, k)`.
pub fn complete_cyclic(n: usize, m: usize, k: usize) -> (GainGraph, SpinAction) {
    let limits = Limits::default();
    let group = Arc::new(build_cyclic(m, &limits).unwrap());
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v, (u + 2 * v) % m)))
        .collect();
    let graph = GainGraph::from_edges(group.clone(), n, &edges).unwrap();
    (graph, standard_colors(group, k, &limits).unwrap())
}

pub fn cases() -> Vec<Case> {
    let limits = Limits::default();
    let (k4, colors) = complete_cyclic(4, 3, 1);
    let (k5, colors5) = complete_cyclic(5, 2, 1);
    let s3 = Arc::new(build_symmetric(3, &limits).unwrap());
    let path = SimpleGraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
    let expansion = group_expansion(&path, s3.clone(), &limits).unwrap();
    vec![
        Case {
            name: "K4 Z3 standard(1)",
            graph: k4,
            action: colors,
        },
        Case {
            name: "K5 Z2 standard(1)",
            graph: k5,
            action: colors5,
        },
        Case {
            name: "S3 path expansion regular",
            graph: expansion,
            action: regular_action(s3),
        },
    ]
}
