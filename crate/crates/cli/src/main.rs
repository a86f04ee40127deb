//! `lirr`: locally irregular edge-colorings from the command line.
//!
//! Exit codes: 0 success, 2 bound violated or coloring invalid, 3 input
//! error, 4 node budget exhausted.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lirr::{
    chi_irr_with, color_balanced_4, color_balanced_forest_2, color_fully_subdivided_2, color_subcubic_4,
    decomposability_bound, export_dot, fig6_experiment, find_tree_needing_3, check_high_degree_trees, fully_subdivide,
    parse_graph6, pertinent_decomposition, resume_campaign, strongly_pertinent_decomposition, two_path_decomposition,
    validate_decomposition, vertex_parity_color, verify_coloring, write_graph6, Bipartition, CampaignConfig,
    CampaignError, CampaignReport, Decomposition, EdgeColoring, Family, Graph, Method, Mode, Overlay, ParityPair,
    SolveOptions, SolveStatus,
};

#[derive(Parser)]
#[command(name = "lirr", version, about = "Locally irregular edge-colorings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum DecomposeMode {
    #[value(name = "2path")]
    TwoPath,
    Pertinent,
    Strong,
}

#[derive(Clone, Copy, ValueEnum)]
enum ColorMethod {
    Exact,
    Subcubic4,
    Subdivided2,
    Forest2,
    Balanced4,
    Parity,
}

#[derive(Clone, Copy, ValueEnum)]
enum CampaignMethod {
    Exact,
    Constructive,
}

#[derive(Subcommand)]
enum Command {
    /// Exact locally irregular chromatic index of each input graph.
    ChiIrr {
        graph: String,
        /// Largest number of colors to try (default: the decomposability bound).
        #[arg(long)]
        k_max: Option<usize>,
        /// Search-node limit per graph.
        #[arg(long)]
        budget: Option<u64>,
        /// Exit with code 2 if some graph needs more colors than this.
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Check a coloring (JSON text or file) against a graph.
    Verify { graph: String, coloring: String },
    /// Build an edge-decomposition into 2-paths and claws.
    Decompose {
        graph: String,
        #[arg(long, value_enum, default_value = "strong")]
        mode: DecomposeMode,
    },
    /// Color each input graph with the chosen method.
    Color {
        graph: String,
        #[arg(long, value_enum, default_value = "exact")]
        method: ColorMethod,
        /// Decomposition (JSON text or file) for subcubic4; built if omitted.
        #[arg(long)]
        decomposition: Option<String>,
        /// Vertex signature for the parity method, e.g. 0110.
        #[arg(long)]
        signature: Option<String>,
        /// Color limit for the exact and parity methods.
        #[arg(long)]
        k_max: Option<usize>,
    },
    /// Color every graph of a family up to a given order and report the histogram.
    Campaign {
        #[arg(long, default_value = "cubic")]
        family: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 3)]
        bound: usize,
        #[arg(long, value_enum, default_value = "exact")]
        method: CampaignMethod,
        /// Search-node limit per graph.
        #[arg(long)]
        budget: Option<u64>,
        /// Checkpoint file, rewritten after every completed order.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Continue from the checkpoint file instead of starting over.
        #[arg(long, requires = "checkpoint")]
        resume: bool,
        /// Write the histogram as CSV to this file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Smallest tree needing three colors, and the high-degree tree check.
    Fig1 {
        #[arg(long, default_value_t = 16)]
        max_edges: usize,
        #[arg(long, default_value_t = 10)]
        high_degree_edges: usize,
    },
    /// Subdivided-cube decompositions with and without few element-uniform colors.
    Fig6,
    /// Graphviz output, optionally overlaying a coloring or decomposition.
    ExportDot {
        graph: String,
        #[arg(long, conflicts_with = "decomposition")]
        coloring: Option<String>,
        #[arg(long)]
        decomposition: Option<String>,
    },
}

enum Failure {
    Input(anyhow::Error),
    Violated,
    Budget(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

type Run = Result<(), Failure>;

/// Text given inline or as a path to a file.
fn text_or_file(arg: &str) -> anyhow::Result<String> {
    let path = Path::new(arg);
    if path.is_file() {
        fs::read_to_string(path).with_context(|| format!("reading {arg}"))
    } else {
        Ok(arg.to_string())
    }
}

/// JSON graphs, graph6 strings, or files holding either (graph6 one per line).
fn read_graphs(arg: &str) -> anyhow::Result<Vec<Graph>> {
    let text = text_or_file(arg)?;
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        return Ok(vec![Graph::from_json_str(trimmed)?]);
    }
    let graphs = trimmed
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| parse_graph6(l).with_context(|| format!("bad graph6 line {l:?}")))
        .collect::<anyhow::Result<Vec<_>>>()?;
    if graphs.is_empty() {
        bail!("no graphs in {arg:?}");
    }
    Ok(graphs)
}

fn read_graph(arg: &str) -> anyhow::Result<Graph> {
    let mut graphs = read_graphs(arg)?;
    if graphs.len() != 1 {
        bail!("expected one graph, found {}", graphs.len());
    }
    Ok(graphs.remove(0))
}

fn read_coloring(arg: &str) -> anyhow::Result<EdgeColoring> {
    Ok(EdgeColoring::from_json_str(text_or_file(arg)?.trim())?)
}

fn read_decomposition(g: &Graph, arg: &str) -> anyhow::Result<Decomposition> {
    Ok(Decomposition::from_json_str(g, text_or_file(arg)?.trim())?)
}

fn name(g: &Graph) -> Value {
    match write_graph6(g) {
        Ok(s) => json!(s),
        Err(_) => json!(g.to_json()),
    }
}

fn chi_irr_cmd(graph: &str, k_max: Option<usize>, budget: Option<u64>, bound: Option<usize>) -> Run {
    let mut violated = false;
    let mut exhausted = None;
    for g in read_graphs(graph)? {
        let opts = SolveOptions {
            node_budget: budget,
            ..SolveOptions::new(k_max.unwrap_or(decomposability_bound(&g).max(1)))
        };
        let r = chi_irr_with(&g, &opts);
        if matches!((bound, r.colors()), (Some(b), Some(k)) if k > b) {
            violated = true;
        }
        if r.status == SolveStatus::ExceededBudget {
            exhausted = Some(format!("node budget exhausted on {}", name(&g)));
        }
        println!("{}", json!({ "graph": name(&g), "result": r }));
    }
    match exhausted {
        Some(msg) => Err(Failure::Budget(msg)),
        None if violated => Err(Failure::Violated),
        None => Ok(()),
    }
}

fn verify_cmd(graph: &str, coloring: &str) -> Run {
    let g = read_graph(graph)?;
    let c = read_coloring(coloring)?;
    let report = verify_coloring(&g, &c).map_err(|e| anyhow!(e))?;
    println!("{}", serde_json::to_string(&report).expect("report serializes"));
    if report.valid {
        Ok(())
    } else {
        Err(Failure::Violated)
    }
}

fn decompose_cmd(graph: &str, mode: DecomposeMode) -> Run {
    for g in read_graphs(graph)? {
        let d = match mode {
            DecomposeMode::TwoPath => two_path_decomposition(&g),
            DecomposeMode::Pertinent => pertinent_decomposition(&g),
            DecomposeMode::Strong => strongly_pertinent_decomposition(&g),
        }
        .map_err(|e| anyhow!("{}: {e}", name(&g)))?;
        println!("{}", d.to_json_value());
    }
    Ok(())
}

fn parse_signature(text: &str) -> anyhow::Result<Vec<u8>> {
    text.chars()
        .map(|ch| match ch {
            '0' => Ok(0),
            '1' => Ok(1),
            _ => Err(anyhow!("signature must be a string of 0s and 1s")),
        })
        .collect()
}

fn color_cmd(
    graph: &str,
    method: ColorMethod,
    decomposition: Option<&str>,
    signature: Option<&str>,
    k_max: Option<usize>,
) -> Run {
    let mut exhausted = None;
    for g in read_graphs(graph)? {
        let out = match method {
            ColorMethod::Exact => {
                let k = k_max.unwrap_or(decomposability_bound(&g).max(1));
                let r = chi_irr_with(&g, &SolveOptions::new(k));
                if r.status == SolveStatus::ExceededBudget {
                    exhausted = Some(format!("node budget exhausted on {}", name(&g)));
                }
                json!({ "graph": name(&g), "result": r })
            }
            ColorMethod::Subcubic4 => {
                let d = match decomposition {
                    Some(arg) => read_decomposition(&g, arg)?,
                    None => strongly_pertinent_decomposition(&g).map_err(|e| anyhow!(e))?,
                };
                let out = color_subcubic_4(&g, &d).map_err(|e| anyhow!(e))?;
                json!({ "graph": name(&g), "decomposition": d.to_json_value(), "result": out })
            }
            ColorMethod::Subdivided2 => {
                let c = color_fully_subdivided_2(&g).map_err(|e| anyhow!(e))?;
                json!({ "base": g.to_json(), "subdivided": fully_subdivide(&g).to_json(), "coloring": c })
            }
            ColorMethod::Forest2 | ColorMethod::Balanced4 => {
                let b = Bipartition::balanced(&g).ok_or_else(|| anyhow!("graph is not balanced bipartite"))?;
                let c = if matches!(method, ColorMethod::Forest2) {
                    color_balanced_forest_2(&g, &b)
                } else {
                    color_balanced_4(&g, &b)
                }
                .map_err(|e| anyhow!(e))?;
                json!({ "graph": name(&g), "bipartition": b, "coloring": c })
            }
            ColorMethod::Parity => {
                let sig = parse_signature(signature.ok_or_else(|| anyhow!("--signature is required"))?)?;
                let p = ParityPair::new(g.clone(), sig);
                let c = vertex_parity_color(&p, k_max.unwrap_or(6)).map_err(|e| anyhow!(e))?;
                json!({ "graph": name(&g), "coloring": c })
            }
        };
        println!("{out}");
    }
    match exhausted {
        Some(msg) => Err(Failure::Budget(msg)),
        None => Ok(()),
    }
}

#[allow(clippy::too_many_arguments)]
fn campaign_cmd(
    family: &str,
    max_n: Option<usize>,
    bound: usize,
    method: CampaignMethod,
    budget: Option<u64>,
    checkpoint: Option<&Path>,
    resume: bool,
    csv: Option<&Path>,
) -> Run {
    let family = Family::by_name(family)
        .ok_or_else(|| anyhow!("unknown family {family:?}; expected cubic, subcubic, or subcubic-min2"))?;
    let config = CampaignConfig {
        n_max: max_n.unwrap_or(family.default_n_max()),
        family,
        bound,
        method: match method {
            CampaignMethod::Exact => Method::Exact,
            CampaignMethod::Constructive => Method::Constructive,
        },
        node_budget: budget,
    };
    let start = match checkpoint {
        Some(path) if resume && path.exists() => {
            let saved = CampaignReport::from_json_str(&fs::read_to_string(path).context("reading checkpoint")?).map_err(|e| anyhow!(e))?;
            if saved.config != config {
                return Err(anyhow!("checkpoint was written for a different campaign").into());
            }
            saved
        }
        _ => CampaignReport::new(config),
    };
    let save = |r: &CampaignReport| {
        if let Some(path) = checkpoint {
            if let Err(e) = fs::write(path, r.to_json_string()) {
                eprintln!("warning: could not write checkpoint: {e}");
            }
        }
    };
    let (report, timing) = match resume_campaign(start, save) {
        Ok(done) => done,
        Err(CampaignError::BudgetExhausted { graph6, n, partial }) => {
            save(&partial);
            return Err(Failure::Budget(format!("node budget exhausted on {graph6} at n = {n}")));
        }
        Err(e) => return Err(anyhow!(e).into()),
    };
    if let Some(path) = csv {
        fs::write(path, report.histogram_csv()).with_context(|| format!("writing {}", path.display()))?;
    }
    println!("{}", report.to_json_string());
    for (n, t) in &timing.per_level {
        eprintln!("n = {n}: {:.3}s", t.as_secs_f64());
    }
    eprintln!("total: {:.3}s", timing.total.as_secs_f64());
    if report.passes() {
        Ok(())
    } else {
        Err(Failure::Violated)
    }
}

fn fig1_cmd(max_edges: usize, high_degree_edges: usize) -> Run {
    let w = find_tree_needing_3(max_edges).map_err(|e| Failure::Budget(e.to_string()))?;
    let trees = check_high_degree_trees(high_degree_edges);
    println!(
        "{}",
        serde_json::to_string_pretty(&json!({
            "tree": name(&w.tree),
            "edges": w.tree.edges(),
            "coloring": w.coloring,
            "two_colors": w.two_color_refutation,
            "high_degree_trees": {
                "max_edges": high_degree_edges,
                "checked": trees.checked,
                "non_decomposable": trees.non_decomposable,
                "violations": trees.violations,
            },
        }))
        .expect("report serializes")
    );
    if trees.violations.is_empty() {
        Ok(())
    } else {
        Err(Failure::Violated)
    }
}

fn fig6_cmd() -> Run {
    let r = fig6_experiment();
    println!("{}", serde_json::to_string_pretty(&r.to_json_value()).expect("report serializes"));
    if r.witnessed() {
        Ok(())
    } else {
        Err(Failure::Violated)
    }
}

fn export_dot_cmd(graph: &str, coloring: Option<&str>, decomposition: Option<&str>) -> Run {
    let g = read_graph(graph)?;
    let c = coloring.map(read_coloring).transpose()?;
    let d = decomposition.map(|arg| read_decomposition(&g, arg)).transpose()?;
    if let Some(d) = &d {
        let report = validate_decomposition(&g, d, Mode::Any);
        if !report.valid {
            return Err(anyhow!("decomposition does not fit the graph").into());
        }
    }
    if let Some(c) = &c {
        if c.colors.len() != g.edge_count() {
            return Err(anyhow!("{} colors for {} edges", c.colors.len(), g.edge_count()).into());
        }
    }
    let overlay = c
        .as_ref()
        .map(Overlay::Coloring)
        .or_else(|| d.as_ref().map(Overlay::Decomposition));
    print!("{}", export_dot(&g, overlay));
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::ChiIrr { graph, k_max, budget, bound } => chi_irr_cmd(graph, *k_max, *budget, *bound),
        Command::Verify { graph, coloring } => verify_cmd(graph, coloring),
        Command::Decompose { graph, mode } => decompose_cmd(graph, *mode),
        Command::Color {
            graph,
            method,
            decomposition,
            signature,
            k_max,
        } => color_cmd(graph, *method, decomposition.as_deref(), signature.as_deref(), *k_max),
        Command::Campaign {
            family,
            max_n,
            bound,
            method,
            budget,
            checkpoint,
            resume,
            csv,
        } => campaign_cmd(
            family,
            *max_n,
            *bound,
            *method,
            *budget,
            checkpoint.as_deref(),
            *resume,
            csv.as_deref(),
        ),
        Command::Fig1 {
            max_edges,
            high_degree_edges,
        } => fig1_cmd(*max_edges, *high_degree_edges),
        Command::Fig6 => fig6_cmd(),
        Command::ExportDot {
            graph,
            coloring,
            decomposition,
        } => export_dot_cmd(graph, coloring.as_deref(), decomposition.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violated) => ExitCode::from(2),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(3)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(4)
        }
    }
}
