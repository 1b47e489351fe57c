use std::sync::Arc;

use num_bigint::BigUint;
use num_rational::BigRational;

use super::*;
use crate::group::{
    build_cyclic, build_symmetric, regular_action, standard_colors, subset_action, trivial_action,
    FiniteGroup,
};

fn cyclic(n: usize) -> Arc<FiniteGroup> {
    Arc::new(build_cyclic(n, &Limits::default()).unwrap())
}

fn all_methods(g: &GainGraph, a: &SpinAction) -> BigUint {
    let report = verify_all(g, a, &Limits::default());
    for (m, r) in &report.results {
        assert!(r.is_ok(), "{m}: {r:?}");
    }
    assert!(report.agree, "{:?}", report.results);
    report.value().unwrap().clone()
}

#[test]
fn single_link_counts_ordered_pairs() {
    let z3 = cyclic(3);
    let g = GainGraph::from_edges(z3.clone(), 2, &[(0, 1, 1)]).unwrap();
    assert_eq!(all_methods(&g, &regular_action(z3)), BigUint::from(6u8));
}

#[test]
fn balanced_digon_with_two_gains_is_unsatisfiable_under_regular() {
    let z2 = cyclic(2);
    let g = GainGraph::from_edges(z2.clone(), 2, &[(0, 1, 0), (0, 1, 1)]).unwrap();
    assert_eq!(
        all_methods(&g, &regular_action(z2.clone())),
        BigUint::from(0u8)
    );
    let colors = standard_colors(z2, 1, &Limits::default()).unwrap();
    assert_eq!(all_methods(&g, &colors), BigUint::from(4u8));
}

#[test]
fn loops_remove_fixed_spins() {
    let z3 = cyclic(3);
    let g = GainGraph::from_edges(z3.clone(), 1, &[(0, 0, 1)]).unwrap();
    assert_eq!(
        all_methods(&g, &regular_action(z3.clone())),
        BigUint::from(3u8)
    );
    let triv = trivial_action(z3.clone(), 2, &Limits::default()).unwrap();
    assert_eq!(all_methods(&g, &triv), BigUint::from(0u8));
    let id_loop = GainGraph::from_edges(z3.clone(), 2, &[(1, 1, 0)]).unwrap();
    assert_eq!(
        all_methods(&id_loop, &regular_action(z3)),
        BigUint::from(0u8)
    );
}

#[test]
fn empty_graph_and_empty_spin_set() {
    let z2 = cyclic(2);
    let empty = GainGraph::new(z2.clone(), 0);
    let none = trivial_action(z2.clone(), 0, &Limits::default()).unwrap();
    assert_eq!(all_methods(&empty, &none), BigUint::from(1u8));
    let two = GainGraph::new(z2.clone(), 2);
    assert_eq!(all_methods(&two, &none), BigUint::from(0u8));
    assert_eq!(all_methods(&two, &regular_action(z2)), BigUint::from(4u8));
}

#[test]
fn unbalanced_triangle() {
    let z2 = cyclic(2);
    let g = GainGraph::from_edges(z2.clone(), 3, &[(0, 1, 0), (1, 2, 0), (0, 2, 1)]).unwrap();
    let a = regular_action(z2);
    assert_eq!(all_methods(&g, &a), BigUint::from(2u8));
    assert_eq!(
        theta(&g, &a, &Limits::default()).unwrap(),
        BigRational::from_integer(2.into())
    );
}

#[test]
fn theta_divides_by_balanced_components() {
    let z3 = cyclic(3);
    let g = GainGraph::from_edges(z3.clone(), 3, &[(0, 1, 1)]).unwrap();
    // b = 2: the edge {0,1} and the isolated vertex 2
    let t = theta(&g, &regular_action(z3.clone()), &Limits::default()).unwrap();
    assert_eq!(t, BigRational::new(18.into(), 9.into()));
    let none = trivial_action(z3, 0, &Limits::default()).unwrap();
    assert_eq!(
        theta(&g, &none, &Limits::default()),
        Err(Error::EmptySpinSet)
    );
}

#[test]
fn s3_on_subsets() {
    let limits = Limits::default();
    let s3 = Arc::new(build_symmetric(3, &limits).unwrap());
    let a = subset_action(3, &limits).unwrap();
    let g = GainGraph::from_edges(
        s3,
        3,
        &[(0, 1, 1), (1, 2, 3), (2, 0, 5), (0, 0, 2), (1, 2, 0)],
    )
    .unwrap();
    let v = all_methods(&g, &a);
    assert!(v > BigUint::from(0u8));
}

#[test]
fn mismatched_group_is_rejected() {
    let g = GainGraph::new(cyclic(2), 1);
    let a = regular_action(cyclic(3));
    for m in Method::ALL {
        assert_eq!(
            count(&g, &a, m, &Limits::default()),
            Err(Error::GroupMismatch)
        );
    }
}

#[test]
fn bounds_are_enforced() {
    let z2 = cyclic(2);
    let g = GainGraph::from_edges(z2.clone(), 3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap();
    let a = regular_action(z2);
    let tight = Limits {
        max_states: 4,
        max_subsets: 4,
        max_delcon_calls: 2,
        max_lattice_edges: 2,
        ..Limits::default()
    };
    for m in Method::ALL {
        assert!(
            matches!(count(&g, &a, m, &tight), Err(Error::BoundExceeded { .. })),
            "{m}"
        );
    }
}

#[test]
fn method_names_round_trip() {
    for m in Method::ALL {
        assert_eq!(m.name().parse::<Method>(), Ok(m));
    }
    assert!("fast".parse::<Method>().is_err());
}
