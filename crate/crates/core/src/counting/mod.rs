//! Four independent evaluators of the number of totally frustrated states,
//! and the normalized invariant `θ`.

mod brute;
mod delcon;
mod inclexcl;
mod mobius;

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow};

pub use brute::count_brute;
pub use delcon::count_delcon;
pub use inclexcl::count_inclexcl;
pub use mobius::count_mobius;

use crate::error::{Error, Result};
use crate::graph::{balanced_component_count, GainGraph};
use crate::group::SpinAction;
use crate::limits::{saturating_pow, Limits};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Brute,
    DeletionContraction,
    InclusionExclusion,
    Mobius,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Brute,
        Method::DeletionContraction,
        Method::InclusionExclusion,
        Method::Mobius,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::DeletionContraction => "delcon",
            Method::InclusionExclusion => "inclexcl",
            Method::Mobius => "mobius",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CountStats {
    /// Search-tree nodes, recursive calls, or edge subsets visited.
    pub visited: u64,
}

/// `χ_Φ(Q)` as computed by one method.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountResult {
    pub value: BigUint,
    pub method: Method,
    pub stats: CountStats,
}

pub fn count(
    graph: &GainGraph,
    action: &SpinAction,
    method: Method,
    limits: &Limits,
) -> Result<CountResult> {
    match method {
        Method::Brute => count_brute(graph, action, limits),
        Method::DeletionContraction => count_delcon(graph, action, limits),
        Method::InclusionExclusion => count_inclexcl(graph, action, limits),
        Method::Mobius => count_mobius(graph, action, limits),
    }
}

pub(crate) fn check_group(graph: &GainGraph, action: &SpinAction) -> Result<()> {
    if action.same_group(graph.group()) {
        Ok(())
    } else {
        Err(Error::GroupMismatch)
    }
}

pub(crate) fn to_count(value: BigInt, method: Method, visited: u64) -> Result<CountResult> {
    let value = value.to_biguint().ok_or_else(|| Error::OracleMismatch {
        what: "negative count",
        left: method.to_string(),
        right: "nonnegative".into(),
    })?;
    Ok(CountResult {
        value,
        method,
        stats: CountStats { visited },
    })
}

/// `θ(Φ) = |Q|^{−b(Φ)} χ_Φ(Q)`, counting by enumeration when the state
/// space is within bounds and by deletion-contraction otherwise.
pub fn theta(graph: &GainGraph, action: &SpinAction, limits: &Limits) -> Result<BigRational> {
    let b = balanced_component_count(graph, &graph.edge_set())?;
    let q = action.size();
    if q == 0 && b > 0 {
        return Err(Error::EmptySpinSet);
    }
    let states = saturating_pow(q as u128, graph.vertex_count());
    let chi = if states <= limits.max_states {
        count_brute(graph, action, limits)?
    } else {
        count_delcon(graph, action, limits)?
    };
    let denom: BigInt = Pow::pow(BigInt::from(q), b as u32);
    let denom = if b == 0 { BigInt::one() } else { denom };
    Ok(BigRational::new(BigInt::from(chi.value), denom))
}

/// Outcome of running every method on one instance.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub results: Vec<(Method, Result<CountResult>)>,
    /// True iff every method succeeded and all values are equal.
    pub agree: bool,
}

impl VerificationReport {
    pub fn value(&self) -> Option<&BigUint> {
        if !self.agree {
            return None;
        }
        self.results
            .first()
            .and_then(|(_, r)| r.as_ref().ok())
            .map(|r| &r.value)
    }
}

pub fn verify_all(graph: &GainGraph, action: &SpinAction, limits: &Limits) -> VerificationReport {
    let results: Vec<_> = Method::ALL
        .into_iter()
        .map(|m| (m, count(graph, action, m, limits)))
        .collect();
    let values: Vec<_> = results
        .iter()
        .map(|(_, r)| r.as_ref().ok().map(|c| &c.value))
        .collect();
    let agree = values.iter().all(|v| v.is_some()) && values.windows(2).all(|w| w[0] == w[1]);
    VerificationReport { results, agree }
}

#[cfg(test)]
mod tests;
