use num_bigint::BigInt;
use num_traits::Zero;

use super::inclexcl::component_product;
use super::{check_group, to_count, CountResult, Method};
use crate::error::Result;
use crate::graph::GainGraph;
use crate::group::{FixTable, SpinAction};
use crate::holonomy::enumerate_closed_sets;
use crate::limits::Limits;

/// `Σ_{A closed} μ(∅, A) Π_j h_Q(A_j)`. A bottomless lattice means an
/// identity loop, which every state satisfies, so the count is 0.
pub fn count_mobius(
    graph: &GainGraph,
    action: &SpinAction,
    limits: &Limits,
) -> Result<CountResult> {
    check_group(graph, action)?;
    let lattice = enumerate_closed_sets(graph, limits)?;
    if lattice.is_bottomless() {
        return to_count(BigInt::zero(), Method::Mobius, lattice.len() as u64);
    }
    let fix = FixTable::new(action);
    let total = lattice
        .sets()
        .iter()
        .filter(|s| s.mobius != 0)
        .fold(BigInt::zero(), |acc, s| {
            acc + component_product(&fix, &s.components, s.isolated) * s.mobius
        });
    to_count(total, Method::Mobius, lattice.len() as u64)
}
