use std::io::Read;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use frustra::group::fixed_set;
use frustra::holonomy::{
    holonomy_closure, holonomy_generators, holonomy_group, is_holonomy_closed, HolonomyContext,
};
use frustra::models::{
    potts_direct_count, potts_satisfiable_count, set_coloring_count, set_coloring_direct,
};
use frustra::poly::{
    chromatic_polynomial, grand_polynomial, graph_chromatic, leading_form, regular_plus_zeroes,
    zero_free_polynomial,
};
use frustra::verify::{run_suite, Counters, GeneratorConfig, SuiteOptions};
use frustra::{count, EdgeId, EdgeSubset, Error, Limits, Method};

use crate::instance::{parse, Built, InstanceError, InstanceFile};
use crate::report::{MethodCount, RunReport};

#[derive(Debug, Parser)]
#[command(
    name = "frustra",
    version,
    about = "Exact counts of totally frustrated states on gain graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Include wall-clock times per method (makes output nondeterministic).
    #[arg(long, global = true)]
    pub timings: bool,
    /// Largest state space brute force will enumerate.
    #[arg(long, global = true)]
    pub max_states: Option<u128>,
    /// Largest number of edge subsets inclusion-exclusion will visit.
    #[arg(long, global = true)]
    pub max_subsets: Option<u128>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count totally frustrated states.
    Count {
        /// Instance file; standard input when absent or `-`.
        file: Option<PathBuf>,
        /// brute, delcon, inclexcl, mobius, or all (which must agree).
        #[arg(long, default_value = "all")]
        method: String,
    },
    /// Print the grand polynomial or one of its specializations.
    Poly {
        file: Option<PathBuf>,
        /// Comma-separated spin-part indices for the grand polynomial, or any
        /// of: leading, zeroes, chromatic, zero-free, underlying.
        #[arg(long, value_delimiter = ',')]
        parts: Vec<String>,
    },
    /// Holonomy data of an edge set.
    Holonomy {
        file: Option<PathBuf>,
        /// Comma-separated edge ids; `all` (the default) or `none`.
        #[arg(long, default_value = "all")]
        edges: String,
    },
    /// Run the invariant suite on seeded random instances.
    Verify {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        count: usize,
    },
    /// Count satisfied states of the signed graph in the file's `signed` block.
    Potts { file: Option<PathBuf> },
    /// Count set colorings of the file's graph (gains ignored) with subsets of [k].
    Setcolor {
        file: Option<PathBuf>,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Input(String),
    Bound(String),
    Divergence(String),
    Other(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Bound(_) => 3,
            CliError::Divergence(_) => 4,
            CliError::Other(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "invalid input: {m}"),
            CliError::Bound(m) => write!(f, "bound exceeded: {m}"),
            CliError::Divergence(m) => write!(f, "divergence: {m}"),
            CliError::Other(m) => f.write_str(m),
        }
    }
}

impl From<InstanceError> for CliError {
    fn from(e: InstanceError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let m = e.to_string();
        match e {
            Error::BoundExceeded { .. } | Error::Overflow(_) => CliError::Bound(m),
            Error::OracleMismatch { .. } | Error::NonIntegral => CliError::Divergence(m),
            Error::InvalidGroup(_)
            | Error::InvalidAction(_)
            | Error::GroupMismatch
            | Error::LengthMismatch { .. }
            | Error::MissingEdge(_)
            | Error::InvalidVertex(_)
            | Error::InvalidElement(_)
            | Error::InvalidSpin(_)
            | Error::TrivialGroup
            | Error::EmptyGroup => CliError::Input(m),
            _ => CliError::Other(m),
        }
    }
}

fn read_input(file: Option<&Path>) -> Result<InstanceFile, CliError> {
    let text = match file {
        Some(p) if p != Path::new("-") => std::fs::read_to_string(p)
            .map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?,
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::Input(format!("standard input: {e}")))?;
            s
        }
    };
    Ok(parse(&text)?)
}

impl Cli {
    pub fn limits(&self) -> Limits {
        let mut l = Limits::default();
        if let Some(s) = self.max_states {
            l.max_states = s;
        }
        if let Some(s) = self.max_subsets {
            l.max_subsets = s;
        }
        l
    }
}

/// Runs a command. The report is returned together with the exit status;
/// errors that leave nothing to report come back as `Err`.
pub fn run(cli: &Cli) -> Result<(RunReport, i32), CliError> {
    let limits = cli.limits();
    match &cli.command {
        Command::Count { file, method } => {
            let f = read_input(file.as_deref())?;
            cmd_count(&f, method, cli.timings, &limits)
        }
        Command::Poly { file, parts } => {
            let f = read_input(file.as_deref())?;
            Ok((cmd_poly(&f, parts, &limits)?, 0))
        }
        Command::Holonomy { file, edges } => {
            let f = read_input(file.as_deref())?;
            Ok((cmd_holonomy(&f, edges, &limits)?, 0))
        }
        Command::Verify { seed, count } => cmd_verify(*seed, *count, &limits),
        Command::Potts { file } => {
            let f = read_input(file.as_deref())?;
            Ok((cmd_potts(&f, &limits)?, 0))
        }
        Command::Setcolor { file, k } => {
            let f = read_input(file.as_deref())?;
            Ok((cmd_setcolor(&f, *k, &limits)?, 0))
        }
    }
}

pub fn cmd_count(
    f: &InstanceFile,
    method: &str,
    timings: bool,
    limits: &Limits,
) -> Result<(RunReport, i32), CliError> {
    let methods: Vec<Method> = if method == "all" {
        Method::ALL.to_vec()
    } else {
        vec![method.parse().map_err(CliError::Input)?]
    };
    let built = f.build(limits)?;
    let action = built.action(limits)?;
    let mut report = RunReport::new("count", f.comment.clone());
    let mut bound = None;
    for m in &methods {
        let start = Instant::now();
        let result = count(&built.graph, &action, *m, limits);
        let millis = timings.then(|| start.elapsed().as_secs_f64() * 1e3);
        match result {
            Ok(r) => report.counts.push(MethodCount {
                method: m.to_string(),
                value: Some(r.value.to_string()),
                error: None,
                visited: Some(r.stats.visited),
                millis,
            }),
            Err(e) => {
                if methods.len() == 1 {
                    return Err(e.into());
                }
                if matches!(e, Error::BoundExceeded { .. }) {
                    bound.get_or_insert(3);
                }
                report.counts.push(MethodCount {
                    method: m.to_string(),
                    value: None,
                    error: Some(e.to_string()),
                    visited: None,
                    millis,
                });
            }
        }
    }
    if methods.len() == 1 {
        return Ok((report, 0));
    }
    let first = &report.counts[0].value;
    let agree = report
        .counts
        .iter()
        .all(|c| c.value.is_some() && c.value == *first);
    report.verdict = Some(agree);
    let code = if agree { 0 } else { bound.unwrap_or(4) };
    Ok((report, code))
}

fn select_parts(
    built: &Built,
    indices: &[usize],
) -> Result<(Vec<frustra::SpinAction>, Vec<String>), CliError> {
    let indices: Vec<usize> = if indices.is_empty() {
        (0..built.parts.len()).collect()
    } else {
        indices.to_vec()
    };
    let mut parts = Vec::new();
    let mut names = Vec::new();
    for &i in &indices {
        let p = built
            .parts
            .get(i)
            .ok_or_else(|| CliError::Input(format!("--parts: no spin part {i}")))?;
        parts.push(p.clone());
        names.push(format!("k{} = {}", names.len() + 1, built.part_names[i]));
    }
    Ok((parts, names))
}

pub fn cmd_poly(
    f: &InstanceFile,
    selection: &[String],
    limits: &Limits,
) -> Result<RunReport, CliError> {
    let built = f.build(limits)?;
    let mut report = RunReport::new("poly", f.comment.clone());
    let mut indices = Vec::new();
    let mut keywords = Vec::new();
    for s in selection.iter().map(|s| s.trim()).filter(|s| !s.is_empty()) {
        match s.parse::<usize>() {
            Ok(i) => indices.push(i),
            Err(_) => keywords.push(s),
        }
    }
    if keywords.is_empty() || !indices.is_empty() {
        let (parts, names) = select_parts(&built, &indices)?;
        report.entry(
            format!("grand ({})", names.join(", ")),
            grand_polynomial(&built.graph, &parts, limits)?,
        );
    }
    for kw in keywords {
        match kw {
            "leading" => {
                let (parts, names) = select_parts(&built, &indices)?;
                report.entry(
                    format!("leading ({})", names.join(", ")),
                    leading_form(&built.graph, &parts, limits)?,
                );
            }
            "zeroes" => report.entry(
                "regular plus zeroes (k1 = regular, k2 = trivial(1))",
                regular_plus_zeroes(&built.graph, limits)?,
            ),
            "chromatic" => report.entry("chromatic", chromatic_polynomial(&built.graph, limits)?),
            "zero-free" => report.entry("zero-free", zero_free_polynomial(&built.graph, limits)?),
            "underlying" => report.entry(
                "underlying",
                graph_chromatic(&built.graph.underlying(), limits)?,
            ),
            other => {
                return Err(CliError::Input(format!(
                    "--parts: unknown selection `{other}`"
                )))
            }
        }
    }
    Ok(report)
}

fn parse_edges(built: &Built, spec: &str) -> Result<EdgeSubset, CliError> {
    match spec.trim() {
        "all" => Ok(built.graph.edge_set()),
        "" | "none" => Ok(EdgeSubset::new()),
        list => {
            let mut set = EdgeSubset::new();
            for item in list.split(',') {
                let id: usize =
                    item.trim().trim_start_matches('e').parse().map_err(|_| {
                        CliError::Input(format!("--edges: `{item}` is not an edge id"))
                    })?;
                built.graph.edge(EdgeId(id))?;
                set.insert(EdgeId(id));
            }
            Ok(set)
        }
    }
}

pub fn cmd_holonomy(f: &InstanceFile, edges: &str, limits: &Limits) -> Result<RunReport, CliError> {
    let built = f.build(limits)?;
    let set = parse_edges(&built, edges)?;
    let g = &built.graph;
    let ctx = HolonomyContext::new(g, &set)?;
    let mut report = RunReport::new("holonomy", f.comment.clone());
    report.entry("edge set", &set);
    report.entry("forest", ctx.forest());
    for c in 0..ctx.component_count() {
        let gens: Vec<String> = holonomy_generators(&ctx, c)?
            .iter()
            .map(|x| format!("g{}", x.0))
            .collect();
        let h = holonomy_group(&ctx, c)?;
        let label = format!("component {c}");
        report.entry(
            format!("{label} vertices"),
            format!("{:?}", ctx.component_vertices(c)?),
        );
        report.entry(format!("{label} base"), ctx.bases()[c]);
        report.entry(
            format!("{label} generators"),
            format!("[{}]", gens.join(", ")),
        );
        report.entry(format!("{label} subgroup order"), h.order());
        for (name, part) in built.part_names.iter().zip(&built.parts) {
            report.entry(
                format!("{label} fixed in {name}"),
                fixed_set(part, &h).len(),
            );
        }
    }
    let closure = holonomy_closure(g, &set)?;
    report.entry("closure", &closure);
    report.entry("closed", is_holonomy_closed(g, &set)?);
    Ok(report)
}

pub fn cmd_verify(seed: u64, count: usize, limits: &Limits) -> Result<(RunReport, i32), CliError> {
    let config = GeneratorConfig::default();
    let r = run_suite(
        seed,
        count,
        &config,
        &Counters::default(),
        &SuiteOptions::default(),
        limits,
    )?;
    let mut report = RunReport::new("verify", None);
    report.entry("seed", seed);
    report.entry("instances", count);
    report.entry(
        "generator",
        format!(
            "|V| 1..={}, |E| 0..={}, groups Z2/Z3/Z4/S3, actions regular/trivial/standard_colors/zero_free/subsets",
            config.max_vertices, config.max_edges
        ),
    );
    for (inv, passes) in &r.passes {
        report.entry(inv.name(), format!("{passes}/{count}"));
    }
    for fail in &r.failures {
        report.entry(
            format!("FAIL #{} {}", fail.index, fail.invariant),
            format!("{} on {}", fail.detail, fail.instance),
        );
        if let Some(m) = &fail.minimal {
            report.entry("  minimal", m);
        }
    }
    report.verdict = Some(r.passed());
    Ok((report, if r.passed() { 0 } else { 4 }))
}

pub fn cmd_potts(f: &InstanceFile, limits: &Limits) -> Result<RunReport, CliError> {
    let group = f.group(limits)?;
    let signed = f.signed_graph()?;
    let value = potts_satisfiable_count(&signed, group.clone(), limits)?;
    let mut report = RunReport::new("potts", f.comment.clone());
    report.entry("satisfied states", &value);
    report.entry(
        "direct enumeration",
        potts_direct_count(&signed, group.order(), limits)?,
    );
    report.verdict = Some(true);
    Ok(report)
}

pub fn cmd_setcolor(f: &InstanceFile, k: usize, limits: &Limits) -> Result<RunReport, CliError> {
    let adjacency = f.adjacency()?;
    let value = set_coloring_count(&adjacency, k, limits)?;
    let mut report = RunReport::new("setcolor", f.comment.clone());
    report.entry("k", k);
    report.entry("set colorings", &value);
    report.entry(
        "direct enumeration",
        set_coloring_direct(&adjacency, k, limits)?,
    );
    report.verdict = Some(true);
    Ok(report)
}
