//! Exact counting of totally frustrated states of gain graphs.
//!
//! A gain graph carries a group element on every oriented edge; a state puts
//! a spin from a set with a right group action on every vertex, and an edge
//! `e: v → w` is satisfied when `s_w = s_v φ(e)`. This crate counts states in
//! which no edge is satisfied by four independent methods (state
//! enumeration, deletion-contraction, inclusion-exclusion over edge sets,
//! and Möbius inversion over holonomy-closed sets), and builds the
//! multivariate polynomial in spin-part multiplicities together with its
//! chromatic and zero-free specializations.

pub mod counting;
pub mod error;
pub mod graph;
pub mod group;
pub mod holonomy;
pub mod limits;
pub mod models;
pub mod poly;
pub mod verify;

pub use counting::{
    count, count_brute, count_delcon, count_inclexcl, count_mobius, theta, verify_all, CountResult,
    Method, VerificationReport,
};
pub use error::{Error, Result};
pub use graph::{EdgeId, EdgeSubset, GainGraph, SimpleGraph, State, Switching};
pub use group::{FiniteGroup, GroupElement, SpinAction, Subgroup};
pub use limits::Limits;
pub use models::{Sign, SignedGraph};
pub use poly::{MultiPoly, UniPoly};
