//! The grand polynomial in spin-part multiplicities and its univariate
//! specializations.

mod multi;
mod uni;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

pub use multi::MultiPoly;
pub use uni::UniPoly;

use crate::counting::count_delcon;
use crate::error::{Error, Result};
use crate::graph::{GainGraph, SimpleGraph};
use crate::group::{standard_colors, zero_free_colors, FixTable, GroupElement, SpinAction};
use crate::holonomy::enumerate_closed_sets;
use crate::limits::Limits;

fn check_parts(graph: &GainGraph, parts: &[SpinAction], limits: &Limits) -> Result<()> {
    if parts.len() > limits.max_parts {
        return Err(Error::bound(
            "spin parts",
            parts.len() as u128,
            limits.max_parts as u128,
        ));
    }
    if parts.iter().any(|a| !a.same_group(graph.group())) {
        return Err(Error::GroupMismatch);
    }
    Ok(())
}

/// `χ_Φ(Q)` as a polynomial in the multiplicities `k_i` of the parts, for
/// `Q = Q_1×[k_1] ∪ … ∪ Q_p×[k_p]`:
/// `Σ_{A closed} μ(∅,A) Π_j Σ_i k_i |Fix_i(H_j)|`, isolated vertices
/// contributing `Σ_i k_i |Q_i|`.
pub fn grand_polynomial(
    graph: &GainGraph,
    parts: &[SpinAction],
    limits: &Limits,
) -> Result<MultiPoly> {
    check_parts(graph, parts, limits)?;
    let p = parts.len();
    let lattice = enumerate_closed_sets(graph, limits)?;
    if lattice.is_bottomless() {
        return Ok(MultiPoly::zero(p));
    }
    let tables: Vec<FixTable> = parts.iter().map(FixTable::new).collect();
    let sizes: Vec<usize> = tables.iter().map(FixTable::size).collect();
    // Closed sets with the same multiset of linear factors share a product.
    let mut grouped: BTreeMap<Vec<Vec<usize>>, BigInt> = BTreeMap::new();
    for set in lattice.sets().iter().filter(|s| s.mobius != 0) {
        let mut key: Vec<Vec<usize>> = set
            .components
            .iter()
            .map(|gens| tables.iter().map(|t| t.fixed_count(gens)).collect())
            .chain(std::iter::repeat_n(sizes.clone(), set.isolated))
            .collect();
        key.sort();
        *grouped.entry(key).or_default() += set.mobius;
    }
    let terms: Vec<_> = grouped.into_iter().filter(|(_, m)| !m.is_zero()).collect();
    Ok(terms
        .par_iter()
        .map(|(factors, mu)| {
            factors
                .iter()
                .fold(MultiPoly::one(p), |acc, f| &acc * &MultiPoly::linear(f))
                .scale(mu)
        })
        .reduce(|| MultiPoly::zero(p), |a, b| &a + &b))
}

/// The degree-`|V|` part of the grand polynomial in closed form:
/// `Π_v Σ_i k_i (|Q_i| − |∪_{loops at v} Fix_i(φ(l))|)`.
pub fn leading_form(graph: &GainGraph, parts: &[SpinAction], limits: &Limits) -> Result<MultiPoly> {
    check_parts(graph, parts, limits)?;
    let tables: Vec<FixTable> = parts.iter().map(FixTable::new).collect();
    let mut loops: Vec<Vec<GroupElement>> = vec![Vec::new(); graph.vertex_count()];
    for e in graph.edges().iter().filter(|e| e.is_loop()) {
        loops[e.u].push(e.gain);
    }
    Ok(loops
        .iter()
        .fold(MultiPoly::one(parts.len()), |acc, gains| {
            let coeffs: Vec<usize> = tables
                .iter()
                .map(|t| t.size() - t.union_count(gains))
                .collect();
            &acc * &MultiPoly::linear(&coeffs)
        }))
}

/// The grand polynomial for parts `[regular, one fixed spin]`, from balance
/// statistics alone: `Σ_{A closed} μ(∅,A) (k1|G| + k2)^{b(A)} k2^{c(A)−b(A)}`.
pub fn regular_plus_zeroes(graph: &GainGraph, limits: &Limits) -> Result<MultiPoly> {
    let lattice = enumerate_closed_sets(graph, limits)?;
    if lattice.is_bottomless() {
        return Ok(MultiPoly::zero(2));
    }
    let mut grouped: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
    for set in lattice.sets() {
        let b = set.balanced_count() as u32;
        let c = set.component_count() as u32;
        *grouped.entry((b, c - b)).or_default() += set.mobius;
    }
    let q = MultiPoly::linear(&[graph.group().order(), 1]);
    let k2 = MultiPoly::var(2, 1);
    Ok(grouped
        .into_iter()
        .filter(|(_, m)| !m.is_zero())
        .fold(MultiPoly::zero(2), |acc, ((b, u), mu)| {
            &acc + &(&q.pow(b) * &k2.pow(u)).scale(&mu)
        }))
}

fn check_vertices(graph: &GainGraph, limits: &Limits) -> Result<()> {
    let n = graph.vertex_count();
    if n > limits.max_poly_vertices {
        return Err(Error::bound(
            "vertices for interpolation",
            n as u128,
            limits.max_poly_vertices as u128,
        ));
    }
    Ok(())
}

fn interpolate_counts(
    graph: &GainGraph,
    ks: impl Iterator<Item = usize>,
    lambda: impl Fn(usize) -> usize,
    colors: impl Fn(usize) -> Result<SpinAction>,
    limits: &Limits,
) -> Result<UniPoly> {
    let mut points = Vec::new();
    for k in ks {
        let chi = count_delcon(graph, &colors(k)?, limits)?.value;
        points.push((
            BigRational::from_integer(lambda(k).into()),
            BigRational::from_integer(chi.into()),
        ));
    }
    let poly = UniPoly::interpolate(&points)?;
    if !poly.is_integral() {
        return Err(Error::NonIntegral);
    }
    Ok(poly)
}

/// `χ_Φ(λ)`, counting states over `G×[k] ∪ {0}` with `λ = k|G| + 1`.
pub fn chromatic_polynomial(graph: &GainGraph, limits: &Limits) -> Result<UniPoly> {
    check_vertices(graph, limits)?;
    let group = graph.group().clone();
    let order = group.order();
    interpolate_counts(
        graph,
        0..=graph.vertex_count(),
        |k| k * order + 1,
        |k| standard_colors(group.clone(), k, limits),
        limits,
    )
}

fn zero_free_raw(graph: &GainGraph, limits: &Limits) -> Result<UniPoly> {
    let group = graph.group().clone();
    let order = group.order();
    interpolate_counts(
        graph,
        1..=graph.vertex_count() + 1,
        |k| k * order,
        |k| zero_free_colors(group.clone(), k, limits),
        limits,
    )
}

/// `χ̄_Φ(λ)`, counting states over `G×[k]` with `λ = k|G|`. Checked to be
/// unchanged by deleting the non-identity loops.
pub fn zero_free_polynomial(graph: &GainGraph, limits: &Limits) -> Result<UniPoly> {
    check_vertices(graph, limits)?;
    let poly = zero_free_raw(graph, limits)?;
    let nonidentity_loops: Vec<_> = graph
        .edges()
        .iter()
        .filter(|e| e.is_loop() && !e.gain.is_identity())
        .map(|e| e.id)
        .collect();
    if !nonidentity_loops.is_empty() {
        let mut stripped = graph.clone();
        for id in nonidentity_loops {
            stripped = stripped.delete(id)?;
        }
        let other = zero_free_raw(&stripped, limits)?;
        if other != poly {
            return Err(Error::OracleMismatch {
                what: "zero-free polynomial after deleting non-identity loops",
                left: poly.to_string(),
                right: other.to_string(),
            });
        }
    }
    Ok(poly)
}

/// The chromatic polynomial of an ordinary graph, by deletion-contraction
/// on a simplified edge list.
pub fn graph_chromatic(graph: &SimpleGraph, limits: &Limits) -> Result<UniPoly> {
    let mut calls = 0u64;
    let coeffs = chromatic_rec(
        graph.vertex_count,
        simplify(&graph.edges),
        &mut calls,
        limits.max_delcon_calls,
    )?;
    Ok(UniPoly::from_integers(coeffs))
}

/// Sorted endpoints, parallels merged; `None` if a loop is present.
fn simplify(edges: &[(usize, usize)]) -> Option<Vec<(usize, usize)>> {
    let mut out: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
    for &(u, v) in edges {
        if u == v {
            return None;
        }
        out.push((u.min(v), u.max(v)));
    }
    out.sort_unstable();
    out.dedup();
    Some(out)
}

fn chromatic_rec(
    n: usize,
    edges: Option<Vec<(usize, usize)>>,
    calls: &mut u64,
    budget: u64,
) -> Result<Vec<BigInt>> {
    *calls += 1;
    if *calls > budget {
        return Err(Error::bound(
            "deletion-contraction calls",
            *calls as u128,
            budget as u128,
        ));
    }
    let Some(mut edges) = edges else {
        return Ok(Vec::new());
    };
    let Some((u, v)) = edges.pop() else {
        let mut c = vec![BigInt::zero(); n + 1];
        c[n] = BigInt::from(1);
        return Ok(c);
    };
    let merged: Vec<(usize, usize)> = edges
        .iter()
        .map(|&(a, b)| {
            let f = |x: usize| {
                let x = if x == v { u } else { x };
                if x > v {
                    x - 1
                } else {
                    x
                }
            };
            (f(a), f(b))
        })
        .collect();
    let del = chromatic_rec(n, Some(edges), calls, budget)?;
    let con = chromatic_rec(n - 1, simplify(&merged), calls, budget)?;
    let len = del.len().max(con.len());
    Ok((0..len)
        .map(|i| del.get(i).cloned().unwrap_or_default() - con.get(i).cloned().unwrap_or_default())
        .collect())
}

#[cfg(test)]
mod tests;
