use num_bigint::BigInt;

use super::{check_group, to_count, CountResult, Method};
use crate::error::{Error, Result};
use crate::graph::GainGraph;
use crate::group::{GroupElement, SpinAction};
use crate::limits::{saturating_pow, Limits};

/// Enumerates states vertex by vertex, abandoning a partial state as soon as
/// an edge between assigned vertices is satisfied.
pub fn count_brute(graph: &GainGraph, action: &SpinAction, limits: &Limits) -> Result<CountResult> {
    check_group(graph, action)?;
    let n = graph.vertex_count();
    let q = action.size();
    let states = saturating_pow(q as u128, n);
    if states > limits.max_states {
        return Err(Error::bound(
            "state count |Q|^|V|",
            states,
            limits.max_states,
        ));
    }
    // For each vertex: links to earlier vertices as (w, gain read from w),
    // and the spins its own loops leave available.
    let mut back: Vec<Vec<(usize, GroupElement)>> = vec![Vec::new(); n];
    let mut allowed: Vec<Vec<usize>> = vec![(0..q).collect(); n];
    for (pos, e) in graph.edges().iter().enumerate() {
        if e.is_loop() {
            allowed[e.u].retain(|&s| action.act(s, e.gain) != s);
        } else {
            let (w, v) = if e.u < e.v { (e.u, e.v) } else { (e.v, e.u) };
            back[v].push((w, graph.gain_from(pos, w)));
        }
    }
    if n == 0 {
        return to_count(BigInt::from(1u8), Method::Brute, 1);
    }
    let mut spins = vec![0usize; n];
    let mut cursor = vec![0usize; n];
    let mut count: u64 = 0;
    let mut visited: u64 = 0;
    let mut v = 0usize;
    loop {
        if cursor[v] == allowed[v].len() {
            cursor[v] = 0;
            if v == 0 {
                break;
            }
            v -= 1;
            continue;
        }
        let s = allowed[v][cursor[v]];
        cursor[v] += 1;
        visited += 1;
        if back[v].iter().any(|&(w, g)| action.act(spins[w], g) == s) {
            continue;
        }
        spins[v] = s;
        if v + 1 == n {
            count += 1;
        } else {
            v += 1;
        }
    }
    to_count(BigInt::from(count), Method::Brute, visited)
}
