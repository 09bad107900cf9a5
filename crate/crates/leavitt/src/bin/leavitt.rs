//! Batch front end. Graphs come in as JSON files, results leave as JSON,
//! DOT, or short fixed-format text; identical invocations produce identical
//! bytes. Exit code 1 flags a domain error, 2 a malformed input.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use leavitt::algebra::{normal_form, Gf, Scalar};
use leavitt::graph::Graph;
use leavitt::monoid::{congruent_within, MonoidElement, Verdict};
use leavitt::moves;
use leavitt::pipeline::{corner_graph, decompose};
use leavitt::projective::ProjectiveClass;
use leavitt::text;
use leavitt::VertexId;

#[derive(Parser)]
#[command(
    name = "leavitt",
    about = "Graph moves, graph monoids, and path algebra corners",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArg {
    /// Path to a graph JSON file {"vertices": [..], "edges": [{"id","src","dst"}, ..]}
    #[arg(long)]
    graph: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Print vertex classifications and graph-level flags
    Info {
        /// Path to a graph JSON file
        graph: PathBuf,
    },
    /// Apply one graph move and print the resulting graph as JSON
    #[command(subcommand)]
    Move(MoveCommand),
    /// Eliminate sources exhaustively and print the reduction report
    Sf {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Reduce to a totally looped graph and print the decomposition report
    Decompose {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Compute the corner graph of a vertex class
    Corner {
        #[command(flatten)]
        graph: GraphArg,
        /// Vertex multiset "v1:2,v2:1"
        #[arg(long)]
        class: String,
    },
    /// Decide congruence of two vertex multisets in the graph monoid
    MonoidEq {
        #[command(flatten)]
        graph: GraphArg,
        /// Left multiset "v1:2,v2:1"
        #[arg(long)]
        a: String,
        /// Right multiset "v1:2,v2:1"
        #[arg(long)]
        b: String,
        /// Budget of distinct elements to visit
        #[arg(long, default_value_t = 100_000)]
        max_states: usize,
    },
    /// Normal-form an element of the algebra
    AlgebraEval {
        #[command(flatten)]
        graph: GraphArg,
        /// Element like "2*[e1.e2|f1] + 1*[v]"
        #[arg(long)]
        expr: String,
        /// Coefficient characteristic: 0 for rationals, or one of 2,3,5,7,11,13
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
    },
    /// Render a graph in DOT format
    EmitDot {
        #[command(flatten)]
        graph: GraphArg,
    },
}

#[derive(Subcommand)]
enum MoveCommand {
    /// Collapse a regular vertex that bases no loop
    Collapse {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        vertex: String,
    },
    /// Remove a source vertex and its outgoing edges
    SourceElim {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        vertex: String,
    },
    /// Contract the unique edge out of a suitable vertex
    MoveR {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        vertex: String,
    },
    /// Split a vertex along a partition "e1,e2|e3" of its incoming edges
    InSplit {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        vertex: String,
        #[arg(long)]
        partition: String,
    },
    /// Split a vertex along a partition "e1,e2|e3" of its outgoing edges
    OutSplit {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        vertex: String,
        #[arg(long)]
        partition: String,
    },
    /// Grow a strand of given length into every vertex, "v1:3,v2:1"
    Hair {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        lengths: String,
    },
}

enum AppError {
    Domain(leavitt::Error),
    Input(String),
}

impl From<leavitt::Error> for AppError {
    fn from(e: leavitt::Error) -> Self {
        AppError::Domain(e)
    }
}

impl AppError {
    fn exit_code(&self) -> u8 {
        match self {
            AppError::Domain(e) if e.is_malformed_input() => 2,
            AppError::Domain(_) => 1,
            AppError::Input(_) => 2,
        }
    }

    fn message(&self) -> String {
        match self {
            AppError::Domain(e) => e.to_string(),
            AppError::Input(m) => m.clone(),
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph, AppError> {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| AppError::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&raw)
        .map_err(|e| AppError::Input(format!("cannot parse {}: {e}", path.display())))
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<(), AppError> {
    let rendered = serde_json::to_string_pretty(value)
        .map_err(|e| AppError::Input(format!("cannot serialize: {e}")))?;
    println!("{rendered}");
    Ok(())
}

fn vertex(label: &str) -> Result<VertexId, AppError> {
    Ok(VertexId::new(label)?)
}

fn class_from(text: &str) -> Result<ProjectiveClass, AppError> {
    Ok(ProjectiveClass::new(text::parse_multiset(text)?)?)
}

fn monoid_element_from(g: &Graph, text: &str) -> Result<MonoidElement, AppError> {
    let m = MonoidElement::new(text::parse_multiset(text)?)?;
    m.check_supported(g)?;
    Ok(m)
}

fn run_move(cmd: MoveCommand) -> Result<(), AppError> {
    let moved = match cmd {
        MoveCommand::Collapse { graph, vertex: v } => {
            moves::collapse(&load_graph(&graph.graph)?, &vertex(&v)?)?
        }
        MoveCommand::SourceElim { graph, vertex: v } => {
            moves::source_eliminate(&load_graph(&graph.graph)?, &vertex(&v)?)?
        }
        MoveCommand::MoveR { graph, vertex: v } => {
            moves::move_r(&load_graph(&graph.graph)?, &vertex(&v)?)?
        }
        MoveCommand::InSplit {
            graph,
            vertex: v,
            partition,
        } => {
            let g = load_graph(&graph.graph)?;
            moves::in_split(&g, &vertex(&v)?, &text::parse_partition(&partition)?)?
        }
        MoveCommand::OutSplit {
            graph,
            vertex: v,
            partition,
        } => {
            let g = load_graph(&graph.graph)?;
            moves::out_split(&g, &vertex(&v)?, &text::parse_partition(&partition)?)?
        }
        MoveCommand::Hair { graph, lengths } => {
            let g = load_graph(&graph.graph)?;
            let spec = moves::HairSpec(text::parse_multiset(&lengths)?);
            moves::hair_extend(&g, &spec)?
        }
    };
    print_json(&moved)
}

fn run_info(path: &Path) -> Result<(), AppError> {
    let g = load_graph(path)?;
    println!("vertices: {}", g.vertex_count());
    println!("edges: {}", g.edge_count());
    println!("trivial: {}", g.is_trivial());
    println!("totally_looped: {}", g.is_totally_looped());
    println!("acyclic: {}", g.is_acyclic());
    for v in g.vertices() {
        let c = g.classify_vertex(v)?;
        let mut flags = Vec::new();
        if c.is_regular {
            flags.push("regular");
        }
        if c.is_sink {
            flags.push("sink");
        }
        if c.is_source {
            flags.push("source");
        }
        if c.is_isolated {
            flags.push("isolated");
        }
        if c.is_base_of_loop {
            flags.push("base_of_loop");
        }
        println!("{v}: {}", flags.join(","));
    }
    Ok(())
}

fn eval_over<S: Scalar>(g: &Graph, expr: &str) -> Result<String, AppError> {
    let element = text::parse_element::<S>(g, expr)?;
    let reduced = normal_form(g, &element)?;
    Ok(text::render_element(&reduced))
}

fn run(command: Command) -> Result<(), AppError> {
    match command {
        Command::Info { graph } => run_info(&graph)?,
        Command::Move(cmd) => run_move(cmd)?,
        Command::Sf { graph } => {
            let g = load_graph(&graph.graph)?;
            print_json(&moves::sf_reduce(&g))?;
        }
        Command::Decompose { graph } => {
            let g = load_graph(&graph.graph)?;
            print_json(&decompose(&g)?)?;
        }
        Command::Corner { graph, class } => {
            let g = load_graph(&graph.graph)?;
            let eps = class_from(&class)?;
            print_json(&corner_graph(&g, &eps)?)?;
        }
        Command::MonoidEq {
            graph,
            a,
            b,
            max_states,
        } => {
            let g = load_graph(&graph.graph)?;
            let a = monoid_element_from(&g, &a)?;
            let b = monoid_element_from(&g, &b)?;
            let status = congruent_within(&g, &a, &b, max_states)?;
            match status.verdict {
                Verdict::Equivalent { witness } => {
                    println!("Equivalent");
                    for step in witness {
                        println!("  {step}");
                    }
                }
                Verdict::Inequivalent => println!("Inequivalent"),
                Verdict::Unknown => println!("Unknown"),
            }
        }
        Command::AlgebraEval {
            graph,
            expr,
            characteristic,
        } => {
            let g = load_graph(&graph.graph)?;
            let rendered = match characteristic {
                0 => eval_over::<num_rational::BigRational>(&g, &expr)?,
                2 => eval_over::<Gf<2>>(&g, &expr)?,
                3 => eval_over::<Gf<3>>(&g, &expr)?,
                5 => eval_over::<Gf<5>>(&g, &expr)?,
                7 => eval_over::<Gf<7>>(&g, &expr)?,
                11 => eval_over::<Gf<11>>(&g, &expr)?,
                13 => eval_over::<Gf<13>>(&g, &expr)?,
                other => {
                    return Err(AppError::Input(format!(
                        "unsupported characteristic {other}: use 0 or one of 2,3,5,7,11,13"
                    )))
                }
            };
            println!("{rendered}");
        }
        Command::EmitDot { graph } => {
            let g = load_graph(&graph.graph)?;
            print!("{}", g.to_dot());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    // Die quietly when the reading end of a pipe closes early, as under
    // `leavitt sf --graph g.json | head`, instead of panicking mid-print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
