//! Command-line front end: generate graph families, compute 2-connected
//! order spectra, run theorem checks and conjecture probes, and import or
//! validate block designs.
//!
//! Exit codes form a total mapping:
//!   0  success / all claims pass / conclusion holds
//!   1  usage, I/O, or parse error
//!   2  counterexample, failed validation, or violated claim
//!   3  inconclusive: budget-truncated result or hypothesis not met
//!   4  no validated design available
//!
//! Output is byte-deterministic given (arguments, seed, input files): graphs
//! go to `--out` or stdout, diagnostics to stderr, and reports carry the
//! input graph hash. `TWOCONN_BUDGET` overrides the default enumeration
//! budget.

use std::error::Error;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use twoconn::checker::{
    self, CheckerError, FamilySpec, HypothesisTag, ProbeReport, TheoremCertificate, Verdict,
};
use twoconn::constructions::{
    gen_complete, gen_complete_bipartite, gen_cycle, gen_g_eps, gen_h, gen_hanoi_3_2,
    gen_hypercube_q3, gen_path, GEpsParams, HParams,
};
use twoconn::design;
use twoconn::graph::Graph;
use twoconn::io;
use twoconn::spectrum::{order_achieved, spectrum_exhaustive, SpectrumError};

const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Parser)]
#[command(
    name = "twoconn",
    version,
    about = "2-connected subgraph order spectra: generators, oracles, and theorem checks",
    after_help = "Exit codes: 0 pass, 1 error, 2 counterexample/failed validation, \
                  3 inconclusive (budget or hypothesis), 4 design unavailable.\n\
                  TWOCONN_BUDGET overrides the default enumeration budget \
                  (10000000 nodes, exact for n <= 16)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph family instance (graph to --out or stdout, summary to stderr)
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Compute the 2-connected order spectrum of a graph file
    Spectrum(SpectrumArgs),
    /// Probe a conjecture hypothesis on a graph file
    Probe(ProbeArgs),
    /// Run a theorem check
    Check {
        #[command(subcommand)]
        check: CheckCmd,
    },
    /// Validate a design file or build its incidence graph
    Design {
        #[command(subcommand)]
        action: DesignCmd,
    },
    /// Re-export a graph file (DOT or edge-list)
    Export {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    EdgeList,
    Dot,
}

#[derive(Subcommand)]
enum GenFamily {
    /// Clique K_q plus a path, glued by two vertex-disjoint edges
    GEps {
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "eps")]
        q: Option<usize>,
        /// Derive q = floor(n^(1-eps)) instead of passing it directly
        #[arg(long)]
        eps: Option<f64>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// m copies of K_{s,s} chained cyclically by m vertex-disjoint edges
    H {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        s: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Tower-of-Hanoi state graph (3 pegs, 2 discs)
    Hanoi {
        #[command(flatten)]
        out: OutArgs,
    },
    /// The 3-cube
    Q3 {
        #[command(flatten)]
        out: OutArgs,
    },
    Cycle {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    Path {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    Complete {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    CompleteBipartite {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Args)]
struct OutArgs {
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::EdgeList)]
    format: Format,
}

#[derive(Args)]
struct SpectrumArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    k_min: Option<usize>,
    #[arg(long)]
    k_max: Option<usize>,
    /// Targeted queries for a comma-separated list of orders
    #[arg(long, value_delimiter = ',')]
    orders: Vec<usize>,
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ProbeArgs {
    /// size-n32 | mindeg-sqrt | mindeg-quarter | mindeg-third | mindeg-frac
    hypothesis: String,
    /// Denominator for mindeg-frac (delta >= n/k)
    #[arg(long)]
    k: Option<usize>,
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum CheckCmd {
    /// Quadrilateral bound: degree-sum trigger implies a 4-cycle
    Reiman {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        random: bool,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Quarter-degree interpolation bound (single graph or sampled)
    MindegQuarter {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        random: bool,
        /// Shorthand for --n-min N --n-max N
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 8)]
        n_min: usize,
        #[arg(long, default_value_t = 16)]
        n_max: usize,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Degree-2 bound for critically 2-connected graphs
    Hamidoune {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// Sweep all labeled connected graphs up to --max-n vertices
        #[arg(long)]
        sweep: bool,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Order-5 exclusion triple (no C5, no K_{2,3}, no order-5 subgraph)
    Order5 {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Generate a family instance and check its predicted properties
    Family {
        #[command(subcommand)]
        family: FamilyCmd,
    },
    /// Integer evaluation of the clique-plus-path size bound (no graph built)
    SizeBound {
        #[arg(long)]
        n: u128,
        #[arg(long)]
        q: Option<u128>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum FamilyCmd {
    GEps {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    H {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    Hanoi {
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    Q3 {
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    Sbibd {
        #[arg(long)]
        k: usize,
        /// Design file to import instead of the builtin candidate
        #[arg(long)]
        design: Option<PathBuf>,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum DesignCmd {
    Validate {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Validate, then write the bipartite incidence graph
    Incidence {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::EdgeList)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn budget_or_default(cli_budget: Option<u64>) -> u64 {
    cli_budget
        .or_else(|| std::env::var("TWOCONN_BUDGET").ok().and_then(|s| s.parse().ok()))
        .unwrap_or(DEFAULT_BUDGET)
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn Error>> {
    match cli.command {
        Command::Gen { family } => cmd_gen(family),
        Command::Spectrum(args) => cmd_spectrum(args),
        Command::Probe(args) => cmd_probe(args),
        Command::Check { check } => cmd_check(check),
        Command::Design { action } => cmd_design(action),
        Command::Export { input, format, out } => {
            let g = io::read_graph_file(&input)?;
            emit_graph(&g, &out, format)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn emit_graph(g: &Graph, out: &Option<PathBuf>, format: Format) -> Result<(), Box<dyn Error>> {
    let text = match format {
        Format::EdgeList => io::to_edge_list_string(g),
        Format::Dot => io::to_dot_string(g),
    };
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn describe(g: &Graph, name: &str) {
    eprintln!(
        "{name}: {} vertices, {} edges, min degree {}",
        g.n(),
        g.edge_count(),
        g.min_degree()
    );
}

fn cmd_gen(family: GenFamily) -> Result<ExitCode, Box<dyn Error>> {
    match family {
        GenFamily::GEps { n, q, eps, out } => {
            let params = match (q, eps) {
                (Some(q), None) => GEpsParams::new(n, q)?,
                (None, Some(e)) => GEpsParams::from_eps(n, e)?,
                _ => return Err("pass exactly one of --q or --eps".into()),
            };
            let ge = gen_g_eps(params);
            describe(&ge.graph, &format!("g-eps(n={}, q={})", params.n, params.q));
            eprintln!(
                "roles: clique 0..{}, path {}..{}, x={}, x'={}, y={}, y'={}",
                params.q - 1,
                params.q,
                params.n - 1,
                ge.x,
                ge.x_prime,
                ge.y,
                ge.y_prime
            );
            emit_graph(&ge.graph, &out.out, out.format)?;
        }
        GenFamily::H { m, s, out } => {
            let params = HParams::new(m, s)?;
            let h = gen_h(params);
            describe(&h.graph, &format!("h(m={m}, s={s})"));
            let conn: Vec<String> =
                h.connectors.iter().map(|(a, b)| format!("({a},{b})")).collect();
            eprintln!("roles: y0={}, connectors {}", h.y0, conn.join(" "));
            emit_graph(&h.graph, &out.out, out.format)?;
        }
        GenFamily::Hanoi { out } => {
            let g = gen_hanoi_3_2();
            describe(&g, "hanoi(3 pegs, 2 discs)");
            emit_graph(&g, &out.out, out.format)?;
        }
        GenFamily::Q3 { out } => {
            let g = gen_hypercube_q3();
            describe(&g, "q3");
            emit_graph(&g, &out.out, out.format)?;
        }
        GenFamily::Cycle { n, out } => {
            let g = gen_cycle(n)?;
            describe(&g, &format!("cycle({n})"));
            emit_graph(&g, &out.out, out.format)?;
        }
        GenFamily::Path { n, out } => {
            let g = gen_path(n)?;
            describe(&g, &format!("path({n})"));
            emit_graph(&g, &out.out, out.format)?;
        }
        GenFamily::Complete { n, out } => {
            let g = gen_complete(n)?;
            describe(&g, &format!("complete({n})"));
            emit_graph(&g, &out.out, out.format)?;
        }
        GenFamily::CompleteBipartite { a, b, out } => {
            let g = gen_complete_bipartite(a, b)?;
            describe(&g, &format!("complete-bipartite({a}, {b})"));
            emit_graph(&g, &out.out, out.format)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(serde::Serialize)]
struct SpectrumReport {
    version: String,
    graph_hash: String,
    n: usize,
    k_min: usize,
    k_max: usize,
    achieved: Vec<usize>,
    missing: Vec<usize>,
    unknown: Vec<usize>,
    witnesses: std::collections::BTreeMap<usize, Vec<usize>>,
    budget: u64,
    nodes_visited: u64,
    complete: bool,
}

fn print_spectrum_report(report: &SpectrumReport, json: bool) -> Result<(), Box<dyn Error>> {
    if json {
        println!("{}", serde_json::to_string_pretty(report)?);
        return Ok(());
    }
    println!("graph {} (n = {})", report.graph_hash, report.n);
    println!("achieved: {}", join(&report.achieved));
    println!("missing: {}", join(&report.missing));
    if !report.unknown.is_empty() {
        println!("unknown (budget): {}", join(&report.unknown));
    }
    for (k, w) in &report.witnesses {
        println!("witness {k}: {}", join(w));
    }
    println!(
        "nodes visited: {} of budget {} ({})",
        report.nodes_visited,
        report.budget,
        if report.complete { "complete" } else { "partial" }
    );
    Ok(())
}

fn cmd_spectrum(args: SpectrumArgs) -> Result<ExitCode, Box<dyn Error>> {
    let g = io::read_graph_file(&args.input)?;
    let budget = budget_or_default(args.budget);
    if !args.orders.is_empty() {
        return cmd_spectrum_targeted(&g, &args, budget);
    }
    let k_min = args.k_min.unwrap_or(3);
    let k_max = args.k_max.unwrap_or(g.n());
    let (spectrum, unknown, complete) = match spectrum_exhaustive(&g, k_min, k_max, budget) {
        Ok(s) => (s, vec![], true),
        Err(SpectrumError::BudgetExhausted(p)) => (p.spectrum, p.unknown, false),
        Err(e) => return Err(e.into()),
    };
    let report = SpectrumReport {
        version: checker::VERSION.into(),
        graph_hash: io::graph_hash(&g),
        n: g.n(),
        k_min,
        k_max,
        achieved: spectrum.achieved.iter().copied().collect(),
        missing: if complete { spectrum.missing() } else { vec![] },
        unknown,
        witnesses: spectrum
            .witnesses
            .iter()
            .map(|(k, w)| (*k, w.members().to_vec()))
            .collect(),
        budget,
        nodes_visited: spectrum.nodes_visited,
        complete,
    };
    print_spectrum_report(&report, args.json)?;
    Ok(if complete { ExitCode::SUCCESS } else { ExitCode::from(3) })
}

fn cmd_spectrum_targeted(
    g: &Graph,
    args: &SpectrumArgs,
    budget: u64,
) -> Result<ExitCode, Box<dyn Error>> {
    let mut achieved = vec![];
    let mut missing = vec![];
    let mut unknown = vec![];
    let mut witnesses = std::collections::BTreeMap::new();
    for &k in &args.orders {
        match order_achieved(g, k, budget) {
            Ok(Some(w)) => {
                achieved.push(k);
                witnesses.insert(k, w.members().to_vec());
            }
            Ok(None) => missing.push(k),
            Err(SpectrumError::BudgetExhausted(_)) => unknown.push(k),
            Err(e) => return Err(e.into()),
        }
    }
    let complete = unknown.is_empty();
    let report = SpectrumReport {
        version: checker::VERSION.into(),
        graph_hash: io::graph_hash(g),
        n: g.n(),
        k_min: args.orders.iter().copied().min().unwrap_or(0),
        k_max: args.orders.iter().copied().max().unwrap_or(0),
        achieved,
        missing,
        unknown,
        witnesses,
        budget,
        nodes_visited: 0,
        complete,
    };
    print_spectrum_report(&report, args.json)?;
    Ok(if complete { ExitCode::SUCCESS } else { ExitCode::from(3) })
}

fn join(xs: &[usize]) -> String {
    if xs.is_empty() {
        return "(none)".into();
    }
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn parse_hypothesis(name: &str, k: Option<usize>) -> Result<HypothesisTag, Box<dyn Error>> {
    Ok(match name {
        "size-n32" => HypothesisTag::SizeN32,
        "mindeg-sqrt" => HypothesisTag::MindegSqrt,
        "mindeg-quarter" => HypothesisTag::MindegQuarter,
        "mindeg-third" => HypothesisTag::MindegThird,
        "mindeg-frac" => {
            let k = k.ok_or("mindeg-frac requires --k")?;
            HypothesisTag::MindegFrac(k)
        }
        other => return Err(format!("unknown hypothesis {other:?}").into()),
    })
}

fn print_probe(report: &ProbeReport, json: bool) -> Result<(), Box<dyn Error>> {
    if json {
        println!("{}", serde_json::to_string_pretty(report)?);
    } else {
        println!(
            "graph {} (n = {}, m = {}, delta = {})",
            report.graph_hash, report.n, report.m, report.min_degree
        );
        println!(
            "hypothesis {}: {} ({} vs {}) -> {}",
            report.hypothesis.name,
            report.hypothesis.relation,
            report.hypothesis.lhs,
            report.hypothesis.rhs,
            if report.hypothesis.holds { "holds" } else { "fails" }
        );
        println!("achieved: {}", join(&report.achieved));
        println!("missing: {}", join(&report.missing));
        if !report.unknown.is_empty() {
            println!("unknown (budget): {}", join(&report.unknown));
        }
        println!("verdict: {}", report.verdict.as_str());
    }
    Ok(())
}

fn verdict_exit(v: Verdict) -> ExitCode {
    match v {
        Verdict::ConclusionHolds => ExitCode::SUCCESS,
        Verdict::Counterexample => ExitCode::from(2),
        Verdict::InconclusiveBudget | Verdict::HypothesisNotMet => ExitCode::from(3),
    }
}

fn checker_error_exit(e: CheckerError) -> Result<ExitCode, Box<dyn Error>> {
    match &e {
        CheckerError::TheoremViolated { .. } => {
            eprintln!("THEOREM VIOLATED: {e}");
            Ok(ExitCode::from(2))
        }
        CheckerError::DesignUnavailable { .. } => {
            eprintln!("{e}");
            Ok(ExitCode::from(4))
        }
        _ => Err(e.into()),
    }
}

fn cmd_probe(args: ProbeArgs) -> Result<ExitCode, Box<dyn Error>> {
    let g = io::read_graph_file(&args.input)?;
    let tag = parse_hypothesis(&args.hypothesis, args.k)?;
    let budget = budget_or_default(args.budget);
    match checker::conjecture_probe(&g, tag, budget) {
        Ok(report) => {
            print_probe(&report, args.json)?;
            Ok(verdict_exit(report.verdict))
        }
        Err(e) => checker_error_exit(e),
    }
}

fn print_certificate(cert: &TheoremCertificate, json: bool) -> Result<(), Box<dyn Error>> {
    if json {
        println!("{}", serde_json::to_string_pretty(cert)?);
    } else {
        println!("theorem: {}", cert.theorem);
        println!("instance: {}", cert.instance);
        if let Some(h) = &cert.graph_hash {
            println!("graph: {h}");
        }
        for c in &cert.claims {
            let mark = if c.pass { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                println!("[{mark}] {}", c.name);
            } else {
                println!("[{mark}] {}: {}", c.name, c.detail);
            }
        }
        println!("verdict: {}", cert.verdict.as_str());
    }
    Ok(())
}

fn emit_certificate(
    out: Result<TheoremCertificate, CheckerError>,
    json: bool,
) -> Result<ExitCode, Box<dyn Error>> {
    match out {
        Ok(cert) => {
            print_certificate(&cert, json)?;
            Ok(verdict_exit(cert.verdict))
        }
        Err(e) => checker_error_exit(e),
    }
}

fn cmd_check(check: CheckCmd) -> Result<ExitCode, Box<dyn Error>> {
    match check {
        CheckCmd::Reiman { input, random, samples, max_n, seed, json } => match (input, random) {
            (Some(path), false) => {
                let g = io::read_graph_file(&path)?;
                match checker::reiman_check(&g) {
                    Ok(out) => {
                        if json {
                            println!("{}", serde_json::to_string_pretty(&out)?);
                        } else {
                            println!(
                                "sum C(d,2) = {}, C(n,2) = {}, triggered: {}, 4-cycle: {}",
                                out.lhs,
                                out.rhs,
                                out.triggered,
                                out.c4
                                    .as_ref()
                                    .map(|w| join(w.members()))
                                    .unwrap_or_else(|| "(none)".into())
                            );
                        }
                        Ok(ExitCode::SUCCESS)
                    }
                    Err(e) => checker_error_exit(e),
                }
            }
            (None, true) => emit_certificate(checker::reiman_random(samples, max_n, seed), json),
            _ => Err("pass exactly one of --in FILE or --random".into()),
        },
        CheckCmd::MindegQuarter { input, random, n, n_min, n_max, samples, seed, budget, json } => {
            let budget = budget_or_default(budget);
            match (input, random) {
                (Some(path), false) => {
                    let g = io::read_graph_file(&path)?;
                    emit_certificate(checker::mindeg_quarter_check(&g, budget), json)
                }
                (None, true) => {
                    let (lo, hi) = match n {
                        Some(n) => (n, n),
                        None => (n_min, n_max),
                    };
                    emit_certificate(
                        checker::sampled_mindeg_quarter(lo, hi, samples, seed, budget),
                        json,
                    )
                }
                _ => Err("pass exactly one of --in FILE or --random".into()),
            }
        }
        CheckCmd::Hamidoune { input, sweep, max_n, json } => match (input, sweep) {
            (Some(path), false) => {
                let g = io::read_graph_file(&path)?;
                emit_certificate(checker::hamidoune_check(&g), json)
            }
            (None, true) => emit_certificate(checker::hamidoune_sweep(max_n), json),
            _ => Err("pass exactly one of --in FILE or --sweep".into()),
        },
        CheckCmd::Order5 { input, budget, json } => {
            let g = io::read_graph_file(&input)?;
            let budget = budget_or_default(budget);
            match checker::order5_exclusion_check(&g, budget) {
                Ok(out) => {
                    if json {
                        println!("{}", serde_json::to_string_pretty(&out)?);
                    } else {
                        println!(
                            "no C5: {}, no K_{{2,3}}: {}, no order-5 subgraph: {}",
                            out.no_c5, out.no_k23, out.no_order5
                        );
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => checker_error_exit(e),
            }
        }
        CheckCmd::Family { family } => {
            let (spec, budget, json) = match family {
                FamilyCmd::GEps { n, q, budget, json } => {
                    (FamilySpec::GEps { n, q }, budget, json)
                }
                FamilyCmd::H { m, s, budget, json } => (FamilySpec::H { m, s }, budget, json),
                FamilyCmd::Hanoi { budget, json } => (FamilySpec::Hanoi, budget, json),
                FamilyCmd::Q3 { budget, json } => (FamilySpec::Q3, budget, json),
                FamilyCmd::Sbibd { k, design, budget, json } => {
                    (FamilySpec::Sbibd { k, design_path: design }, budget, json)
                }
            };
            let budget = budget_or_default(budget);
            emit_certificate(checker::family_report(&spec, budget), json)
        }
        CheckCmd::SizeBound { n, q, json } => {
            emit_certificate(checker::size_bound_check(n, q), json)
        }
    }
}

fn cmd_design(action: DesignCmd) -> Result<ExitCode, Box<dyn Error>> {
    match action {
        DesignCmd::Validate { input, json } => {
            let des = design::load_design(&input)?;
            let report = design::validate_design(&des);
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                println!("{}", report.summary());
                for v in &report.violations {
                    println!("violation: {v}");
                }
            }
            Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
        DesignCmd::Incidence { input, out, format } => {
            let des = design::load_design(&input)?;
            let report = design::validate_design(&des);
            if !report.passed() {
                eprintln!("{}", report.summary());
                return Ok(ExitCode::from(2));
            }
            let g = design::incidence_graph(&des)?;
            let body = match format {
                Format::EdgeList => io::to_edge_list_string(&g),
                Format::Dot => io::to_dot_string(&g),
            };
            let text = match format {
                Format::EdgeList => format!(
                    "# incidence graph of a ({}, {}, {}) design: points 0..{}, blocks {}..{}\n{}",
                    des.v,
                    des.k,
                    des.lambda,
                    des.v - 1,
                    des.v,
                    2 * des.v - 1,
                    body
                ),
                Format::Dot => body,
            };
            match out {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
            describe(&g, "incidence graph");
            Ok(ExitCode::SUCCESS)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_parses() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn hypothesis_names() {
        assert!(parse_hypothesis("mindeg-sqrt", None).is_ok());
        assert!(parse_hypothesis("mindeg-frac", Some(3)).is_ok());
        assert!(parse_hypothesis("mindeg-frac", None).is_err());
        assert!(parse_hypothesis("nope", None).is_err());
    }
}
