//! Command-line front end: compute mvc for one graph, verify a proposed
//! coloring, report bounds, construct the named families, print threshold
//! tables, and run the exhaustive claim checks.
//!
//! Exit codes are a stable contract: 0 = verified / computed, 1 = a claim
//! check found a counterexample or a coloring failed verification, 2 =
//! usage or parse error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use mvc::bounds::bounds_report;
use mvc::checks::{run_check, CheckReport, Claim};
use mvc::coloring::{unserved_pair, waste, VertexColoring};
use mvc::extremal::{construct, f_v, g_v, Family};
use mvc::graph6::{parse_graph6, write_graph6};
use mvc::solver::{mvc_exact_capped, DEFAULT_CAP};
use mvc::Graph;

#[derive(Parser)]
#[command(
    name = "mvc",
    version,
    about = "Monochromatic vertex-connection number: exact values, bounds, extremal families, exhaustive checks"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Graph6,
    Adj,
}

#[derive(Subcommand)]
enum Command {
    /// Compute mvc(G) exactly for a graph6-encoded connected graph.
    Compute {
        #[arg(long)]
        graph6: String,
        /// Also print (and re-verify) an optimal coloring.
        #[arg(long)]
        witness: bool,
    },
    /// Check whether a coloring is an MVC-coloring of a graph.
    VerifyColoring {
        #[arg(long)]
        graph6: String,
        /// Comma-separated color ids, one per vertex, e.g. "0,1,1,2".
        #[arg(long)]
        colors: String,
    },
    /// Report lower/upper bounds (and the exact value when feasible).
    Bounds {
        #[arg(long)]
        graph6: String,
    },
    /// Construct a named family member.
    Construct {
        /// One of: path, cycle, complete, star, double-star,
        /// clique-pendant-path, clique-edge-path, eg-extremal-g1,
        /// clique-plus-p3.
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        extra: Option<usize>,
        #[arg(long, value_enum, default_value_t = Emit::Graph6)]
        emit: Emit,
    },
    /// Print the f_v or g_v threshold table for one order n.
    Table {
        /// Least edge count that forces mvc >= k.
        #[arg(long, conflicts_with = "gv")]
        fv: bool,
        /// Greatest edge count that caps mvc <= k.
        #[arg(long)]
        gv: bool,
        #[arg(long)]
        n: usize,
    },
    /// Exhaustively verify one claim; exit 1 if a counterexample appears.
    Check {
        /// One of: cycles, prop23, erdos-gallai, nordhaus-gaddum,
        /// diameter-formula, oracle-agreement, bounds-sandwich.
        #[arg(long)]
        claim: String,
        #[arg(long)]
        n_max: usize,
        /// Worker threads (default: available parallelism).
        #[arg(long)]
        jobs: Option<usize>,
        /// graph6 file to scan instead of the built-in enumeration.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn solver_cap() -> Result<usize, String> {
    match std::env::var("MVC_SOLVER_CAP") {
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_CAP),
        Err(e) => Err(format!("MVC_SOLVER_CAP: {e}")),
        Ok(s) => s
            .parse::<usize>()
            .map_err(|_| format!("MVC_SOLVER_CAP must be a vertex count, got {s:?}")),
    }
}

fn parse_connected(graph6: &str) -> Result<Graph, String> {
    let g = parse_graph6(graph6).map_err(|e| format!("{graph6:?}: {e}"))?;
    if !g.is_connected() {
        return Err(format!("{graph6:?}: graph is disconnected; mvc is undefined"));
    }
    Ok(g)
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let format = cli.format;
    match cli.command {
        Command::Compute { graph6, witness } => {
            let g = parse_connected(&graph6)?;
            let cap = solver_cap()?;
            let result = mvc_exact_capped(&g, cap).map_err(|e| e.to_string())?;
            let witness_text = if witness {
                // Re-verify before printing: the witness must serve every
                // pair and attain the value.
                assert_eq!(unserved_pair(&g, &result.witness), Ok(None));
                assert_eq!(result.witness.color_count(), result.value);
                Some(result.witness.to_string())
            } else {
                None
            };
            let out = ComputeOut {
                graph6: write_graph6(&g),
                n: g.n(),
                m: g.m(),
                value: result.value,
                witness: witness_text,
                nodes: result.nodes,
                budget: result.budget,
            };
            match format {
                Format::Json => print_json(&out),
                Format::Tsv => {
                    kv("graph6", &out.graph6);
                    kv("n", out.n);
                    kv("m", out.m);
                    kv("value", out.value);
                    if let Some(w) = &out.witness {
                        kv("witness", w);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyColoring { graph6, colors } => {
            let g = parse_graph6(&graph6).map_err(|e| format!("{graph6:?}: {e}"))?;
            let coloring = VertexColoring::parse(&colors).map_err(|e| e.to_string())?;
            let pair = unserved_pair(&g, &coloring).map_err(|e| e.to_string())?;
            let account = waste(&coloring);
            let out = VerifyOut {
                graph6: write_graph6(&g),
                valid: pair.is_none(),
                colors: account.colors,
                total_waste: account.total,
                unserved_pair: pair,
            };
            match format {
                Format::Json => print_json(&out),
                Format::Tsv => {
                    kv("graph6", &out.graph6);
                    kv("valid", out.valid);
                    kv("colors", out.colors);
                    kv("total_waste", out.total_waste);
                    if let Some((u, v)) = out.unserved_pair {
                        kv("unserved_pair", format!("{u} {v}"));
                    }
                }
            }
            Ok(if out.valid {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Bounds { graph6 } => {
            let g = parse_connected(&graph6)?;
            let cap = solver_cap()?;
            let exact = if g.n() <= cap {
                Some(
                    mvc_exact_capped(&g, cap)
                        .map_err(|e| e.to_string())?
                        .value,
                )
            } else {
                None
            };
            let report = bounds_report(&g, exact).map_err(|e| e.to_string())?;
            match format {
                Format::Json => print_json(&report),
                Format::Tsv => {
                    kv("n", report.n);
                    kv("m", report.m);
                    kv("min_degree", report.min_degree);
                    kv("max_degree", report.max_degree);
                    kv("diameter", report.diameter);
                    kv("spanning_tree_lower", report.spanning_tree_lower);
                    kv("tree_leaf_count", report.tree.leaf_count);
                    kv("tree_exact", report.tree.exact);
                    let edges: Vec<String> = report
                        .tree
                        .edges
                        .iter()
                        .map(|(u, v)| format!("{u}-{v}"))
                        .collect();
                    kv("tree_edges", edges.join(" "));
                    kv("diameter_upper", report.diameter_upper);
                    match &report.min_degree_bound {
                        Some(b) => kv("min_degree_bound", format!("{b} (ceil {})", b.ceil)),
                        None => kv("min_degree_bound", "-"),
                    }
                    match report.exact {
                        Some(v) => kv("exact", v),
                        None => kv("exact", "-"),
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct {
            family,
            n,
            t,
            a,
            b,
            d,
            extra,
            emit,
        } => {
            let spec = family_from_args(&family, n, t, a, b, d, extra)?;
            let g = construct(&spec).map_err(|e| e.to_string())?;
            match (emit, format) {
                (Emit::Graph6, Format::Json) => print_json(&ConstructOut {
                    family: &family,
                    n: g.n(),
                    m: g.m(),
                    graph6: Some(write_graph6(&g)),
                    adj: None,
                }),
                (Emit::Graph6, Format::Tsv) => println!("{}", write_graph6(&g)),
                (Emit::Adj, Format::Json) => print_json(&ConstructOut {
                    family: &family,
                    n: g.n(),
                    m: g.m(),
                    graph6: None,
                    adj: Some(adjacency_lists(&g)),
                }),
                (Emit::Adj, Format::Tsv) => {
                    for (v, row) in adjacency_lists(&g).into_iter().enumerate() {
                        let joined: Vec<String> = row.iter().map(usize::to_string).collect();
                        println!("{v}\t{}", joined.join(" "));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { fv, gv, n } => {
            if fv == gv {
                return Err("table needs exactly one of --fv or --gv".into());
            }
            if n < 3 {
                return Err("threshold tables need n >= 3".into());
            }
            let kind = if fv { "fv" } else { "gv" };
            let rows: Vec<TableRow> = (3..=n)
                .map(|k| TableRow {
                    k,
                    value: if fv { f_v(n, k) } else { g_v(n, k) },
                })
                .collect();
            match format {
                Format::Json => print_json(&TableOut { kind, n, rows }),
                Format::Tsv => {
                    println!("k\t{kind}");
                    for row in rows {
                        match row.value {
                            Some(v) => println!("{}\t{v}", row.k),
                            None => println!("{}\t-", row.k),
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check {
            claim,
            n_max,
            jobs,
            corpus,
        } => {
            if let Some(jobs) = jobs {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs)
                    .build_global()
                    .map_err(|e| format!("--jobs {jobs}: {e}"))?;
            }
            let claim: Claim = claim.parse().map_err(|e| format!("{e}"))?;
            let report = run_check(claim, n_max, corpus.as_deref()).map_err(|e| e.to_string())?;
            match format {
                Format::Json => print_json(&report),
                Format::Tsv => print_check_tsv(&report),
            }
            Ok(if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn family_from_args(
    tag: &str,
    n: Option<usize>,
    t: Option<usize>,
    a: Option<usize>,
    b: Option<usize>,
    d: Option<usize>,
    extra: Option<usize>,
) -> Result<Family, String> {
    fn need(v: Option<usize>, name: &str, tag: &str) -> Result<usize, String> {
        v.ok_or_else(|| format!("family {tag} needs --{name}"))
    }
    // Accept both kebab-case and snake_case tags.
    let canon = tag.replace('_', "-");
    Ok(match canon.as_str() {
        "path" => Family::Path {
            n: need(n, "n", tag)?,
        },
        "cycle" => Family::Cycle {
            n: need(n, "n", tag)?,
        },
        "complete" => Family::Complete {
            n: need(n, "n", tag)?,
        },
        "star" => Family::Star {
            n: need(n, "n", tag)?,
        },
        "double-star" => Family::DoubleStar {
            a: need(a, "a", tag)?,
            b: need(b, "b", tag)?,
        },
        "clique-pendant-path" => Family::CliquePendantPath {
            n: need(n, "n", tag)?,
            d: need(d, "d", tag)?,
        },
        "clique-edge-path" => Family::CliqueEdgePath {
            n: need(n, "n", tag)?,
            t: need(t, "t", tag)?,
        },
        "eg-extremal-g1" => Family::EgExtremalG1 {
            n: need(n, "n", tag)?,
            t: need(t, "t", tag)?,
            extra: extra.unwrap_or(0),
        },
        "clique-plus-p3" => Family::CliquePlusP3 {
            n: need(n, "n", tag)?,
        },
        _ => return Err(format!("unknown family {tag:?}")),
    })
}

fn adjacency_lists(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.n())
        .map(|v| {
            (0..g.n())
                .filter(|&u| g.has_edge(v, u))
                .collect::<Vec<_>>()
        })
        .collect()
}

fn print_check_tsv(report: &CheckReport) {
    kv("claim", &report.claim);
    kv("n_max", report.n_max);
    kv("scanned", report.scanned);
    kv("pass", report.pass);
    kv("wall_ms", report.wall_ms);
    for c in &report.counterexamples {
        println!("counterexample\t{}\t{}", c.graph6, c.detail);
    }
    for n in &report.notes {
        println!("note\t{n}");
    }
}

fn kv(key: &str, value: impl std::fmt::Display) {
    println!("{key}\t{value}");
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report types serialize")
    );
}

#[derive(Serialize)]
struct ComputeOut {
    graph6: String,
    n: usize,
    m: usize,
    value: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
    nodes: u64,
    budget: u32,
}

#[derive(Serialize)]
struct VerifyOut {
    graph6: String,
    valid: bool,
    colors: u32,
    total_waste: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    unserved_pair: Option<(usize, usize)>,
}

#[derive(Serialize)]
struct ConstructOut<'a> {
    family: &'a str,
    n: usize,
    m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    graph6: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    adj: Option<Vec<Vec<usize>>>,
}

#[derive(Serialize)]
struct TableRow {
    k: usize,
    value: Option<usize>,
}

#[derive(Serialize)]
struct TableOut<'a> {
    kind: &'a str,
    n: usize,
    rows: Vec<TableRow>,
}
