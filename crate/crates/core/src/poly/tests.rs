use std::sync::Arc;

use num_bigint::BigInt;

use super::*;
use crate::counting::count_brute;
use crate::group::{
    build_cyclic, disjoint_union_action, regular_action, trivial_action, FiniteGroup,
};

fn z(n: usize) -> Arc<FiniteGroup> {
    Arc::new(build_cyclic(n, &Limits::default()).unwrap())
}

fn lim() -> Limits {
    Limits::default()
}

fn k1k2(g: &Arc<FiniteGroup>) -> Vec<SpinAction> {
    vec![
        regular_action(g.clone()),
        trivial_action(g.clone(), 1, &lim()).unwrap(),
    ]
}

#[test]
fn isolated_vertex() {
    let g = GainGraph::new(z(2), 1);
    let p = grand_polynomial(&g, &[regular_action(z(2))], &lim()).unwrap();
    assert_eq!(p.to_string(), "2*k1");
}

#[test]
fn identity_link() {
    let g = GainGraph::from_edges(z(2), 2, &[(0, 1, 0)]).unwrap();
    let parts = [regular_action(z(2))];
    let p = grand_polynomial(&g, &parts, &lim()).unwrap();
    assert_eq!(p.to_string(), "4*k1^2 - 2*k1");
    assert_eq!(p.evaluate(&[1]).unwrap(), BigInt::from(2));
    assert_eq!(
        leading_form(&g, &parts, &lim()).unwrap().to_string(),
        "4*k1^2"
    );
    let rz = regular_plus_zeroes(&g, &lim()).unwrap();
    let lam = MultiPoly::linear(&[2, 1]);
    assert_eq!(rz, &lam.pow(2) - &lam);
    assert_eq!(rz, grand_polynomial(&g, &k1k2(&z(2)), &lim()).unwrap());
}

#[test]
fn nonidentity_loop() {
    let g = GainGraph::from_edges(z(2), 1, &[(0, 0, 1)]).unwrap();
    let parts = k1k2(&z(2));
    assert_eq!(
        grand_polynomial(&g, &parts, &lim()).unwrap().to_string(),
        "2*k1"
    );
    assert_eq!(regular_plus_zeroes(&g, &lim()).unwrap().to_string(), "2*k1");
    assert_eq!(
        leading_form(&g, &[regular_action(z(2))], &lim())
            .unwrap()
            .to_string(),
        "2*k1"
    );
    assert_eq!(
        chromatic_polynomial(&g, &lim()).unwrap().to_string(),
        "λ - 1"
    );
    // no regular spin is fixed by a non-identity gain, so all λ states count
    assert_eq!(zero_free_polynomial(&g, &lim()).unwrap().to_string(), "λ");
}

#[test]
fn identity_loop_gives_zero() {
    let g = GainGraph::from_edges(z(3), 2, &[(0, 1, 2), (1, 1, 0)]).unwrap();
    assert!(grand_polynomial(&g, &k1k2(&z(3)), &lim())
        .unwrap()
        .is_zero());
    assert!(regular_plus_zeroes(&g, &lim()).unwrap().is_zero());
    assert!(leading_form(&g, &k1k2(&z(3)), &lim()).unwrap().is_zero());
    assert!(chromatic_polynomial(&g, &lim()).unwrap().is_zero());
    assert!(zero_free_polynomial(&g, &lim()).unwrap().is_zero());
}

#[test]
fn single_link_specializations() {
    let g = GainGraph::from_edges(z(3), 2, &[(0, 1, 1)]).unwrap();
    assert_eq!(
        chromatic_polynomial(&g, &lim()).unwrap().to_string(),
        "λ^2 - λ"
    );
    assert_eq!(
        zero_free_polynomial(&g, &lim()).unwrap().to_string(),
        "λ^2 - λ"
    );
}

#[test]
fn digon_evaluates_to_brute_counts() {
    let g = GainGraph::from_edges(z(2), 2, &[(0, 1, 0), (0, 1, 1)]).unwrap();
    let parts = k1k2(&z(2));
    let p = grand_polynomial(&g, &parts, &lim()).unwrap();
    assert_eq!(p.evaluate(&[1, 1]).unwrap(), BigInt::from(4));
    for a in 0..=3 {
        for b in 0..=3 {
            let q = disjoint_union_action(&parts, &[a, b], &lim()).unwrap();
            let brute = count_brute(&g, &q, &lim()).unwrap().value;
            assert_eq!(
                p.evaluate(&[a, b]).unwrap(),
                BigInt::from(brute),
                "({a},{b})"
            );
        }
    }
    assert_eq!(p.total_degree(), Some(2));
    assert_eq!(
        p.homogeneous_part(2),
        leading_form(&g, &parts, &lim()).unwrap()
    );
}

#[test]
fn empty_graph_constant_term() {
    let g = GainGraph::new(z(2), 0);
    let p = grand_polynomial(&g, &k1k2(&z(2)), &lim()).unwrap();
    assert_eq!(p.to_string(), "1");
    assert_eq!(zero_free_polynomial(&g, &lim()).unwrap().to_string(), "1");
}

#[test]
fn mismatched_parts_are_rejected() {
    let g = GainGraph::new(z(2), 1);
    assert_eq!(
        grand_polynomial(&g, &[regular_action(z(3))], &lim()),
        Err(Error::GroupMismatch)
    );
    let many = vec![regular_action(z(2)); 9];
    assert!(matches!(
        grand_polynomial(&g, &many, &lim()),
        Err(Error::BoundExceeded { .. })
    ));
}

#[test]
fn ordinary_chromatic_polynomials() {
    let k2 = SimpleGraph::complete(2);
    assert_eq!(graph_chromatic(&k2, &lim()).unwrap().to_string(), "λ^2 - λ");
    let k3 = SimpleGraph::complete(3);
    assert_eq!(
        graph_chromatic(&k3, &lim()).unwrap(),
        UniPoly::from_integers([0, 2, -3, 1])
    );
    let looped = SimpleGraph::new(2, vec![(0, 1), (1, 1)]).unwrap();
    assert!(graph_chromatic(&looped, &lim()).unwrap().is_zero());
    let parallel = SimpleGraph::new(2, vec![(0, 1), (1, 0)]).unwrap();
    assert_eq!(
        graph_chromatic(&parallel, &lim()).unwrap(),
        graph_chromatic(&k2, &lim()).unwrap()
    );
    let c4 = SimpleGraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    // (λ−1)^4 + (λ−1)
    assert_eq!(
        graph_chromatic(&c4, &lim()).unwrap(),
        UniPoly::from_integers([0, -3, 6, -4, 1])
    );
}
