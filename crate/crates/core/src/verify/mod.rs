//! Seeded random instances, the invariant suite run on them, and shrinking
//! of failing instances to a minimal counterexample.

mod generate;

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use generate::{
    random_instance, random_switching, ActionKind, GeneratorConfig, GroupKind, Instance,
};

use crate::counting::{
    count_brute, count_delcon, count_inclexcl, count_mobius, CountResult, Method,
};
use crate::error::Result;
use crate::graph::{is_balanced, satisfied_edges, switch_state, GainGraph, State};
use crate::group::SpinAction;
use crate::holonomy::{holonomy_group, is_holonomy_closed, HolonomyContext};
use crate::limits::{saturating_pow, Limits};
use crate::poly::graph_chromatic;

pub type CounterFn = fn(&GainGraph, &SpinAction, &Limits) -> Result<CountResult>;

/// The four counters the suite compares. Replaceable so that a deliberately
/// broken counter can be shown to be caught.
#[derive(Clone, Copy)]
pub struct Counters {
    pub brute: CounterFn,
    pub delcon: CounterFn,
    pub inclexcl: CounterFn,
    pub mobius: CounterFn,
}

impl Default for Counters {
    fn default() -> Self {
        Counters {
            brute: count_brute,
            delcon: count_delcon,
            inclexcl: count_inclexcl,
            mobius: count_mobius,
        }
    }
}

impl Counters {
    fn all(&self) -> [(Method, CounterFn); 4] {
        [
            (Method::Brute, self.brute),
            (Method::DeletionContraction, self.delcon),
            (Method::InclusionExclusion, self.inclexcl),
            (Method::Mobius, self.mobius),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Invariant {
    MethodAgreement,
    SwitchingInvariance,
    SatisfiedSetClosure,
    DeletionContraction,
    BalancedChromatic,
}

impl Invariant {
    pub const ALL: [Invariant; 5] = [
        Invariant::MethodAgreement,
        Invariant::SwitchingInvariance,
        Invariant::SatisfiedSetClosure,
        Invariant::DeletionContraction,
        Invariant::BalancedChromatic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Invariant::MethodAgreement => "method agreement",
            Invariant::SwitchingInvariance => "switching invariance",
            Invariant::SatisfiedSetClosure => "satisfied-set closure",
            Invariant::DeletionContraction => "deletion-contraction",
            Invariant::BalancedChromatic => "balanced chromatic",
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Knobs of one suite run that are not part of instance generation.
#[derive(Debug, Clone)]
pub struct SuiteOptions {
    /// Instances with at most this many states have every state checked for
    /// satisfied-set closure; larger ones get `sampled_states` random states.
    pub exhaustive_states: u128,
    pub sampled_states: usize,
    pub shrink: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            exhaustive_states: 100_000,
            sampled_states: 64,
            shrink: true,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CaseFailure {
    pub index: usize,
    pub invariant: Invariant,
    pub detail: String,
    pub instance: String,
    /// The instance after edge and vertex deletion, still failing the same
    /// invariant.
    pub minimal: Option<String>,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub seed: u64,
    pub count: usize,
    /// Instances on which each invariant held.
    pub passes: Vec<(Invariant, usize)>,
    pub failures: Vec<CaseFailure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn counter_value(
    f: CounterFn,
    g: &GainGraph,
    a: &SpinAction,
    limits: &Limits,
) -> std::result::Result<BigUint, String> {
    f(g, a, limits).map(|r| r.value).map_err(|e| e.to_string())
}

fn all_states(n: usize, q: usize) -> impl Iterator<Item = State> {
    let total = if n == 0 { 1 } else { q.pow(n as u32) };
    (0..total).map(move |mut x| {
        State(
            (0..n)
                .map(|_| {
                    let s = x % q;
                    x /= q;
                    s
                })
                .collect(),
        )
    })
}

fn sample_states(inst: &Instance, rng: &mut ChaCha8Rng, opts: &SuiteOptions) -> Vec<State> {
    let n = inst.graph.vertex_count();
    let q = inst.action.size();
    if q == 0 {
        return if n == 0 {
            vec![State(Vec::new())]
        } else {
            Vec::new()
        };
    }
    if saturating_pow(q as u128, n) <= opts.exhaustive_states {
        all_states(n, q).collect()
    } else {
        (0..opts.sampled_states)
            .map(|_| State((0..n).map(|_| rng.gen_range(0..q)).collect()))
            .collect()
    }
}

/// Checks one invariant; `Err` carries a description of the violation.
pub fn check_invariant(
    inv: Invariant,
    inst: &Instance,
    counters: &Counters,
    opts: &SuiteOptions,
    rng_seed: u64,
    limits: &Limits,
) -> std::result::Result<(), String> {
    let g = &inst.graph;
    let a = &inst.action;
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let err = |e: crate::Error| e.to_string();
    match inv {
        Invariant::MethodAgreement => {
            let values: Vec<(Method, _)> = counters
                .all()
                .into_iter()
                .map(|(m, f)| (m, counter_value(f, g, a, limits)))
                .collect();
            if values.iter().all(|(_, v)| v.is_ok() && *v == values[0].1) {
                Ok(())
            } else {
                let parts: Vec<String> = values
                    .iter()
                    .map(|(m, v)| match v {
                        Ok(x) => format!("{m}={x}"),
                        Err(e) => format!("{m} error: {e}"),
                    })
                    .collect();
                Err(parts.join(", "))
            }
        }
        Invariant::SwitchingInvariance => {
            let eta = random_switching(&mut rng, g);
            let switched = g.switch(&eta).map_err(err)?;
            let before = counter_value(counters.brute, g, a, limits)?;
            let after = counter_value(counters.brute, &switched, a, limits)?;
            if before != after {
                return Err(format!(
                    "count {before} becomes {after} under switching {:?}",
                    eta.0
                ));
            }
            for s in sample_states(inst, &mut rng, opts)
                .into_iter()
                .take(opts.sampled_states)
            {
                let s2 = switch_state(&s, &eta, a).map_err(err)?;
                let i1 = satisfied_edges(g, a, &s).map_err(err)?;
                let i2 = satisfied_edges(&switched, a, &s2).map_err(err)?;
                if i1 != i2 {
                    return Err(format!(
                        "satisfied set of state {:?} changes from {i1} to {i2}",
                        s.0
                    ));
                }
            }
            Ok(())
        }
        Invariant::SatisfiedSetClosure => {
            for s in sample_states(inst, &mut rng, opts) {
                let sat = satisfied_edges(g, a, &s).map_err(err)?;
                if !is_holonomy_closed(g, &sat).map_err(err)? {
                    return Err(format!(
                        "satisfied set {sat} of state {:?} is not closed",
                        s.0
                    ));
                }
            }
            Ok(())
        }
        Invariant::DeletionContraction => {
            let whole = BigInt::from(counter_value(counters.brute, g, a, limits)?);
            for e in g.edges().iter().filter(|e| e.is_link()) {
                let del = BigInt::from(counter_value(
                    counters.brute,
                    &g.delete(e.id).map_err(err)?,
                    a,
                    limits,
                )?);
                let con = BigInt::from(counter_value(
                    counters.brute,
                    &g.contract_link(e.id).map_err(err)?,
                    a,
                    limits,
                )?);
                if whole != &del - &con {
                    return Err(format!("at {}: {whole} != {del} - {con}", e.id));
                }
            }
            Ok(())
        }
        Invariant::BalancedChromatic => {
            let all = g.edge_set();
            let ctx = HolonomyContext::new(g, &all).map_err(err)?;
            for c in 0..ctx.component_count() {
                let edges = ctx.component_edges(c).map_err(err)?;
                let trivial = holonomy_group(&ctx, c).map_err(err)?.is_trivial();
                if trivial != is_balanced(g, &edges).map_err(err)? {
                    return Err(format!(
                        "component {edges}: trivial holonomy {trivial} disagrees with balance"
                    ));
                }
            }
            if is_balanced(g, &all).map_err(err)? {
                let chi = counter_value(counters.brute, g, a, limits)?;
                let poly = graph_chromatic(&g.underlying(), limits).map_err(err)?;
                let expected = poly.evaluate_int(a.size());
                if expected != BigRational::from_integer(chi.clone().into()) {
                    return Err(format!(
                        "balanced graph has {chi} states, chromatic polynomial gives {expected}"
                    ));
                }
            }
            Ok(())
        }
    }
}

fn drop_vertex(graph: &GainGraph, v: usize) -> Option<GainGraph> {
    if graph.edges().iter().any(|e| e.u == v || e.v == v) {
        return None;
    }
    let shift = |x: usize| if x > v { x - 1 } else { x };
    let edges: Vec<(usize, usize, usize)> = graph
        .edges()
        .iter()
        .map(|e| (shift(e.u), shift(e.v), e.gain.0))
        .collect();
    GainGraph::from_edges(graph.group().clone(), graph.vertex_count() - 1, &edges).ok()
}

/// Greedily deletes edges, then isolated vertices, while `inv` still fails.
pub fn shrink(
    inv: Invariant,
    inst: &Instance,
    counters: &Counters,
    opts: &SuiteOptions,
    rng_seed: u64,
    limits: &Limits,
) -> Instance {
    let fails = |i: &Instance| check_invariant(inv, i, counters, opts, rng_seed, limits).is_err();
    let mut current = inst.clone();
    loop {
        let smaller = current
            .graph
            .edges()
            .iter()
            .filter_map(|e| current.graph.delete(e.id).ok())
            .chain(
                (0..current.graph.vertex_count())
                    .rev()
                    .filter_map(|v| drop_vertex(&current.graph, v)),
            )
            .map(|g| current.with_graph(g))
            .find(|c| fails(c));
        match smaller {
            Some(c) => current = c,
            None => return current,
        }
    }
}

/// Generates `count` instances from `seed` and checks every invariant on
/// each. The same seed and configuration always give the same report.
pub fn run_suite(
    seed: u64,
    count: usize,
    config: &GeneratorConfig,
    counters: &Counters,
    opts: &SuiteOptions,
    limits: &Limits,
) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut passes: Vec<(Invariant, usize)> = Invariant::ALL.iter().map(|&i| (i, 0)).collect();
    let mut failures = Vec::new();
    for index in 0..count {
        let inst = random_instance(&mut rng, config, limits)?;
        let case_seed = rng.gen::<u64>();
        for (slot, inv) in Invariant::ALL.into_iter().enumerate() {
            match check_invariant(inv, &inst, counters, opts, case_seed, limits) {
                Ok(()) => passes[slot].1 += 1,
                Err(detail) => {
                    let minimal = opts
                        .shrink
                        .then(|| shrink(inv, &inst, counters, opts, case_seed, limits).to_string());
                    failures.push(CaseFailure {
                        index,
                        invariant: inv,
                        detail,
                        instance: inst.to_string(),
                        minimal,
                    });
                }
            }
        }
    }
    Ok(SuiteReport {
        seed,
        count,
        passes,
        failures,
    })
}

/// `count` seeded instances, for callers that want their own checks.
pub fn instances(
    seed: u64,
    count: usize,
    config: &GeneratorConfig,
    limits: &Limits,
) -> Result<Vec<Instance>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let inst = random_instance(&mut rng, config, limits);
            let _ = rng.gen::<u64>();
            inst
        })
        .collect()
}
