use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::counting::count_delcon;
use crate::group::build_cyclic;
use crate::poly::{zero_free_polynomial, UniPoly};

fn lim() -> Limits {
    Limits::default()
}

fn z(n: usize) -> Arc<FiniteGroup> {
    Arc::new(build_cyclic(n, &lim()).unwrap())
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn k2() -> SimpleGraph {
    SimpleGraph::complete(2)
}

#[test]
fn potts_encoding_shapes() {
    let neg = SignedGraph::new(2, vec![(0, 1, Sign::Negative)]).unwrap();
    let g = potts_gain_graph(&neg, z(2)).unwrap();
    assert_eq!(g.edge_count(), 1);
    assert!(g.edges()[0].gain.is_identity());
    let pos = SignedGraph::new(2, vec![(0, 1, Sign::Positive)]).unwrap();
    let gains: Vec<usize> = potts_gain_graph(&pos, z(3))
        .unwrap()
        .edges()
        .iter()
        .map(|e| e.gain.0)
        .collect();
    assert_eq!(gains, vec![1, 2]);
    let mixed = SignedGraph::new(2, vec![(0, 1, Sign::Positive), (0, 1, Sign::Negative)]).unwrap();
    assert_eq!(potts_gain_graph(&mixed, z(4)).unwrap().edge_count(), 4);
    assert_eq!(potts_gain_graph(&neg, z(1)), Err(Error::TrivialGroup));
    assert!(SignedGraph::new(2, vec![(0, 2, Sign::Positive)]).is_err());
}

#[test]
fn potts_counts() {
    let neg = SignedGraph::new(2, vec![(0, 1, Sign::Negative)]).unwrap();
    assert_eq!(potts_satisfiable_count(&neg, z(3), &lim()).unwrap(), big(6));
    let pos = SignedGraph::new(2, vec![(0, 1, Sign::Positive)]).unwrap();
    assert_eq!(potts_satisfiable_count(&pos, z(2), &lim()).unwrap(), big(2));
    let tri = SignedGraph::new(
        3,
        vec![
            (0, 1, Sign::Positive),
            (1, 2, Sign::Positive),
            (0, 2, Sign::Positive),
        ],
    )
    .unwrap();
    assert_eq!(potts_satisfiable_count(&tri, z(2), &lim()).unwrap(), big(2));
}

#[test]
fn potts_random_and_zero_free_value() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..30 {
        let n = rng.gen_range(1..=5);
        let m = rng.gen_range(0..=6);
        let edges = (0..m)
            .map(|_| {
                let s = if rng.gen_bool(0.5) {
                    Sign::Positive
                } else {
                    Sign::Negative
                };
                (rng.gen_range(0..n), rng.gen_range(0..n), s)
            })
            .collect();
        let d = SignedGraph::new(n, edges).unwrap();
        let order = rng.gen_range(2..=3);
        let count = potts_satisfiable_count(&d, z(order), &lim()).unwrap();
        let g = potts_gain_graph(&d, z(order)).unwrap();
        let poly = zero_free_polynomial(&g, &lim()).unwrap();
        assert_eq!(
            poly.evaluate_int(order),
            BigRational::from_integer(count.into())
        );
    }
}

#[test]
fn sign_parsing() {
    assert_eq!("+".parse(), Ok(Sign::Positive));
    assert_eq!("-".parse(), Ok(Sign::Negative));
    assert_eq!("\u{2212}".parse(), Ok(Sign::Negative));
    assert!("0".parse::<Sign>().is_err());
    assert_eq!(Sign::Negative.to_string(), "-");
}

fn binomial(n: u64, r: u64) -> u64 {
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn set_colorings_of_an_edge() {
    // adjacent subsets only need different sizes: 4^k − C(2k, k)
    for k in 1..=4u64 {
        let expected = 4u64.pow(k as u32) - binomial(2 * k, k);
        assert_eq!(
            set_coloring_count(&k2(), k as usize, &lim()).unwrap(),
            big(expected),
            "k={k}"
        );
    }
    assert_eq!(set_coloring_count(&k2(), 2, &lim()).unwrap(), big(10));
    assert!(set_coloring_count(&k2(), 5, &lim()).is_err());
}

#[test]
fn set_colorings_of_edgeless_graph() {
    let empty = SimpleGraph::new(3, vec![]).unwrap();
    assert_eq!(set_coloring_count(&empty, 2, &lim()).unwrap(), big(1 << 6));
}

#[test]
fn set_coloring_deletion_contraction() {
    let path = SimpleGraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
    for k in 1..=3 {
        let (g, a) = set_coloring_instance(&path, k, &lim()).unwrap();
        for e in g.edges().iter().filter(|e| e.is_link()) {
            let whole = count_brute(&g, &a, &lim()).unwrap().value;
            let del = count_brute(&g.delete(e.id).unwrap(), &a, &lim())
                .unwrap()
                .value;
            let con = count_brute(&g.contract_link(e.id).unwrap(), &a, &lim())
                .unwrap()
                .value;
            assert_eq!(BigInt::from(whole), BigInt::from(del) - BigInt::from(con));
        }
    }
}

/// Fits the unique polynomial through the first points and checks it misses
/// the last one.
fn refuted(xs: &[i64], ys: &[u64]) -> bool {
    let n = xs.len() - 1;
    let pts: Vec<_> = xs[..n]
        .iter()
        .zip(ys)
        .map(|(&x, &y)| {
            (
                BigRational::from_integer(x.into()),
                BigRational::from_integer(y.into()),
            )
        })
        .collect();
    let p = UniPoly::interpolate(&pts).unwrap();
    p.evaluate_int(xs[n]) != BigRational::from_integer(ys[n].into())
}

#[test]
fn set_coloring_is_not_a_polynomial_in_natural_variables() {
    let ys: Vec<u64> = (1..=4)
        .map(|k| {
            set_coloring_count(&k2(), k, &lim())
                .unwrap()
                .try_into()
                .unwrap()
        })
        .collect();
    assert_eq!(ys, vec![2, 10, 44, 186]);
    let in_k = [1, 2, 3, 4];
    let in_subsets = [2, 4, 8, 16];
    let in_perms = [1, 2, 6, 24];
    for xs in [in_k, in_subsets, in_perms] {
        // degree ≤ 1 through k = 1,2 misses k = 3; degree ≤ 2 through k = 1..3 misses k = 4
        assert!(refuted(&xs[..3], &ys[..3]), "{xs:?}");
        assert!(refuted(&xs, &ys), "{xs:?}");
    }
}

#[test]
fn equivalence_classes() {
    let cases: [(&[usize], u64); 3] = [(&[1, 1], 2), (&[2], 0), (&[2, 1], 4)];
    for (blocks, expected) in cases {
        assert_eq!(
            equivalence_count(&k2(), blocks, &lim()).unwrap(),
            big(expected),
            "{blocks:?}"
        );
    }
    let tri = SimpleGraph::complete(3);
    assert_eq!(
        equivalence_count(&tri, &[1, 2, 1], &lim()).unwrap(),
        equivalence_direct_count(&tri, &[1, 2, 1], &lim()).unwrap()
    );
    // two blocks cannot color a triangle
    let (g, a) = equivalence_expansion(&tri, &[2, 1], &lim()).unwrap();
    assert_eq!(count_delcon(&g, &a, &lim()).unwrap().value, big(0));
}
