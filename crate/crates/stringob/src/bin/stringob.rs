//! Command-line front end: graph generation, obstruction decisions,
//! string-representation round trips, corpus experiments.
//!
//! Exit codes: 0 = computed/verified, 1 = a requested check failed,
//! 2 = input error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result, anyhow, bail};
use clap::{Args, Parser, Subcommand, ValueEnum};

use stringob::corpus::{CorpusSpec, run_corpus};
use stringob::drawing::{
    Drawing, SvgOptions, crossing_vector, export_svg, layout_convex_order, layout_moment_curve,
    layout_random,
};
use stringob::graph::{Family, Graph, PairKind, barycentric_subdivision, generate, pair_set};
use stringob::obstruction::{build_system, decide_integer, decide_mod2};
use stringob::strings::{
    StringRepresentation, drawing_from_strings, strings_from_drawing, verify_sd_disjointness,
    verify_string_representation,
};

#[derive(Parser)]
#[command(name = "stringob", version, about = "String-graph crossing obstructions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named graph as JSON.
    Gen(GenArgs),
    /// Decide an obstruction for a graph.
    Obstruction(ObstructionArgs),
    /// String-representation operations.
    Strings(StringsArgs),
    /// Run a seeded corpus of random-graph checks.
    Corpus(CorpusArgs),
}

#[derive(Args)]
struct GenArgs {
    /// heawood | gp | c_cbar | complete | complete_bipartite | subdivide
    family: String,
    /// Family parameters (n for complete and c_cbar, m n for
    /// complete_bipartite, k for subdivide).
    params: Vec<usize>,
    /// Input graph for subdivide.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, ValueEnum)]
enum PairsArg {
    Delta,
    S,
    Sd,
}

#[derive(Copy, Clone, ValueEnum)]
enum ModeArg {
    Mod2,
    Integer,
}

#[derive(Copy, Clone, ValueEnum)]
enum LayoutArg {
    Moment,
    Convex,
    Random,
}

#[derive(Args)]
struct ObstructionArgs {
    graph: PathBuf,
    #[arg(long, value_enum)]
    pairs: PairsArg,
    #[arg(long, value_enum, default_value = "mod2")]
    mode: ModeArg,
    /// Layout whose crossing vector seeds the decision; the verdict is
    /// layout independent.
    #[arg(long, value_enum, default_value = "moment")]
    layout: LayoutArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the layout as SVG, odd-parity crossings highlighted.
    #[arg(long)]
    svg: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct StringsArgs {
    #[command(subcommand)]
    command: StringsCommand,
}

#[derive(Subcommand)]
enum StringsCommand {
    /// Check that curves realize the graph; exit 1 with violations if not.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        rep: PathBuf,
    },
    /// Build a drawing of the barycentric subdivision from curves.
    ToDrawing {
        #[arg(long)]
        graph: PathBuf,
        rep: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Extract curves from a drawing of the barycentric subdivision.
    FromDrawing {
        #[arg(long)]
        graph: PathBuf,
        drawing: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct CorpusArgs {
    spec: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Obstruction(args) => cmd_obstruction(args),
        Command::Strings(args) => cmd_strings(args),
        Command::Corpus(args) => cmd_corpus(args),
    }
}

fn load_graph(path: &PathBuf) -> Result<Graph> {
    let s = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Graph::from_json(&s).map_err(|e| anyhow!("parsing {}: {e}", path.display()))
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, content).with_context(|| format!("writing {}", p.display()))?,
        None => println!("{content}"),
    }
    Ok(())
}

fn cmd_gen(args: GenArgs) -> Result<ExitCode> {
    let family = match (args.family.as_str(), args.params.as_slice()) {
        ("heawood", []) => Family::Heawood,
        ("gp", []) => Family::Gp,
        ("c_cbar" | "c-cbar", [n]) => Family::CCbar(*n),
        ("complete", [n]) => Family::Complete(*n),
        ("complete_bipartite" | "complete-bipartite", [m, n]) => Family::CompleteBipartite(*m, *n),
        ("subdivide", [k]) => {
            let input = args
                .input
                .as_ref()
                .ok_or_else(|| anyhow!("subdivide requires --input"))?;
            Family::Subdivide(load_graph(input)?, *k)
        }
        (f, ps) => bail!("unknown family {f:?} with {} parameter(s)", ps.len()),
    };
    let g = generate(&family)?;
    emit(&args.out, &g.to_json())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_obstruction(args: ObstructionArgs) -> Result<ExitCode> {
    let g = load_graph(&args.graph)?;
    let kind = match args.pairs {
        PairsArg::Delta => PairKind::Delta,
        PairsArg::S => PairKind::S,
        PairsArg::Sd => PairKind::Sd,
    };
    let pairs = pair_set(&g, kind);
    let drawn = pairs.base().clone();
    let d = match args.layout {
        LayoutArg::Moment => layout_moment_curve(&drawn),
        LayoutArg::Convex => {
            let order: Vec<usize> = (0..drawn.vertex_count()).collect();
            layout_convex_order(&drawn, &order)?
        }
        LayoutArg::Random => layout_random(&drawn, args.seed)?,
    };
    let o = crossing_vector(&d, &pairs)?;
    let sys = build_system(&pairs);
    let report = match args.mode {
        ModeArg::Mod2 => decide_mod2(&sys, &o)?,
        ModeArg::Integer => decide_integer(&sys, &o)?,
    };
    if let Some(svg_path) = &args.svg {
        let svg = export_svg(
            &d,
            &SvgOptions {
                highlight: Some(&o),
                ..SvgOptions::default()
            },
        );
        fs::write(svg_path, svg).with_context(|| format!("writing {}", svg_path.display()))?;
    }
    emit(&args.out, &report.to_json())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_strings(args: StringsArgs) -> Result<ExitCode> {
    match args.command {
        StringsCommand::Verify { graph, rep } => {
            let g = load_graph(&graph)?;
            let rep_s =
                fs::read_to_string(&rep).with_context(|| format!("reading {}", rep.display()))?;
            let rep = StringRepresentation::from_json(&g, &rep_s)?;
            let violations = verify_string_representation(&rep);
            let valid = violations.is_empty();
            let v = serde_json::json!({
                "valid": valid,
                "violations": violations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            });
            println!("{v}");
            Ok(if valid { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        StringsCommand::ToDrawing { graph, rep, out } => {
            let g = load_graph(&graph)?;
            let rep_s =
                fs::read_to_string(&rep).with_context(|| format!("reading {}", rep.display()))?;
            let rep = StringRepresentation::from_json(&g, &rep_s)?;
            let (sub, drawing) = drawing_from_strings(&rep)?;
            debug_assert!(verify_sd_disjointness(&sub, &drawing).is_empty());
            emit(&out, &drawing.to_json())?;
            Ok(ExitCode::SUCCESS)
        }
        StringsCommand::FromDrawing { graph, drawing, out } => {
            let g = load_graph(&graph)?;
            let sub = barycentric_subdivision(&g);
            let d_s = fs::read_to_string(&drawing)
                .with_context(|| format!("reading {}", drawing.display()))?;
            let d = Drawing::from_json(sub.star(), &d_s)?;
            let rep = strings_from_drawing(&sub, &d)?;
            let violations = verify_string_representation(&rep);
            if !violations.is_empty() {
                bail!("extracted representation fails verification: {}", violations[0]);
            }
            emit(&out, &rep.to_json())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn cmd_corpus(args: CorpusArgs) -> Result<ExitCode> {
    let s = fs::read_to_string(&args.spec)
        .with_context(|| format!("reading {}", args.spec.display()))?;
    let spec: CorpusSpec = serde_json::from_str(&s).context("parsing corpus spec")?;
    let summary = run_corpus(&spec);
    emit(&args.out, &summary.to_json_value().to_string())?;
    Ok(if summary.failure_count() == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
