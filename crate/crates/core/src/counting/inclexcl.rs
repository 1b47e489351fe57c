use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use super::{check_group, to_count, CountResult, Method};
use crate::error::{Error, Result};
use crate::graph::{GainGraph, WeightedForest};
use crate::group::{FixTable, GroupElement, SpinAction};
use crate::limits::Limits;

/// `Π_j h_Q(A_j) · |Q|^{isolated}` as an exact integer.
pub(crate) fn component_product(
    fix: &FixTable,
    comps: &[Vec<GroupElement>],
    isolated: usize,
) -> BigInt {
    let factors = comps
        .iter()
        .map(|gens| fix.fixed_count(gens))
        .chain(std::iter::repeat_n(fix.size(), isolated));
    let mut small: u128 = 1;
    let mut big: Option<BigInt> = None;
    for f in factors {
        if f == 0 {
            return BigInt::zero();
        }
        match small.checked_mul(f as u128) {
            Some(x) => small = x,
            None => {
                let acc = big.take().unwrap_or_else(|| BigInt::from(1u8));
                big = Some(acc * small * f);
                small = 1;
            }
        }
    }
    match big {
        Some(b) => b * small,
        None => BigInt::from(small),
    }
}

/// `Σ_{A ⊆ E} (−1)^{|A|} Π_j h_Q(A_j)`, isolated vertices contributing `|Q|`.
pub fn count_inclexcl(
    graph: &GainGraph,
    action: &SpinAction,
    limits: &Limits,
) -> Result<CountResult> {
    check_group(graph, action)?;
    let m = graph.edge_count();
    let subsets = if m >= 127 { u128::MAX } else { 1u128 << m };
    if subsets > limits.max_subsets || m >= 64 {
        return Err(Error::bound(
            "edge subset count 2^|E|",
            subsets,
            limits.max_subsets,
        ));
    }
    let fix = FixTable::new(action);
    let total = (0..1u64 << m)
        .into_par_iter()
        .map_init(
            || WeightedForest::new(graph),
            |wf, mask| {
                wf.reset();
                for p in (0..m).filter(|p| mask >> p & 1 == 1) {
                    wf.add(p);
                }
                let (comps, isolated) = wf.profile();
                let gens: Vec<Vec<GroupElement>> = comps.into_iter().map(|(_, g)| g).collect();
                let term = component_product(&fix, &gens, isolated);
                if mask.count_ones() % 2 == 1 {
                    -term
                } else {
                    term
                }
            },
        )
        .reduce(BigInt::zero, |a, b| a + b);
    to_count(total, Method::InclusionExclusion, 1u64 << m)
}
