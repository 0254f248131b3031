use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use permpow::dot::{cloud_graph_to_dot, graph_to_dot};
use permpow::{io, scan};
use permpow_core::families::c8_all_valid_noninvolutions;
use permpow_core::partition::{is_equitable, neighborhood_partition, quotient_adjacency};
use permpow_core::perm::involution_count;
use permpow_core::reduction::{
    bijection_system_count, copies_partition, count_involution_candidates, equivalent_involutions_in,
    reduce_to_involution,
};
use permpow_core::spectral::spectral_gap_estimate;
use permpow_core::zigzag::{zigzag_product, CloudGraph};
use permpow_core::{Error, Graph, Permutation, PowerSpace};
use serde_json::json;

/// `println!` that reports a closed stdout as an error instead of panicking.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        writeln!(std::io::stdout(), $($arg)*)
    }};
}

/// Permutations are written in cycle notation, e.g. "(0 4 6)(2 9)", or as
/// a word of images, e.g. "w:1,0,2".
#[derive(Parser)]
#[command(name = "permpow", version)]
#[command(about = "Permutational powers and zig-zag products of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether Ã P Ã is symmetric and emit the power graph
    Power {
        graph: PathBuf,
        /// Number of copies of the graph
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        perm: String,
        /// Write power.json and power.dot here instead of printing JSON
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },

    /// Zig-zag product of two labeled graphs
    Zigzag {
        g: PathBuf,
        h: PathBuf,
        /// Write zigzag.json and zigzag.dot here instead of printing JSON
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },

    /// Compare Ã P Ã with Ã Q Ã
    Equal {
        graph: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        perm: String,
        #[arg(long)]
        perm2: String,
    },

    /// Find an involution giving the same product
    Reduce {
        graph: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        perm: String,
        /// Also brute-force all equivalent involutions when there are at
        /// most this many involutions to test
        #[arg(long)]
        cap: Option<u64>,
    },

    /// Neighborhood partition of a graph
    Partition { graph: PathBuf },

    /// Quotient of a graph by its neighborhood partition
    Quotient { graph: PathBuf },

    /// Count permutations with a symmetric product
    Enumerate {
        graph: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest group order an exhaustive scan will accept
        #[arg(long, default_value_t = 100_000_000)]
        cap: u64,
    },

    /// List the non-involutions of Sym(8) valid for the 8-cycle
    CatalogC8,

    /// Estimate the second eigenvalue of a regular graph
    Gap { graph: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    Sample,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) if broken_pipe(&err) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn broken_pipe(err: &anyhow::Error) -> bool {
    err.chain()
        .filter_map(|e| e.downcast_ref::<std::io::Error>())
        .any(|e| e.kind() == std::io::ErrorKind::BrokenPipe)
}

fn verdict(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn load_space(path: &Path, k: usize) -> Result<PowerSpace> {
    let graph = io::read_graph(path)?;
    Ok(PowerSpace::new(&graph, k)?)
}

fn parse_perm(text: &str, space: &PowerSpace) -> Result<Permutation> {
    Permutation::parse(text, space.size()).with_context(|| format!("permutation {text:?}"))
}

fn emit(graph: &Graph, name: &str, layout: Option<usize>, out_dir: Option<&Path>) -> Result<()> {
    match out_dir {
        Some(dir) => {
            std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            let json = dir.join(format!("{name}.json"));
            let dot = dir.join(format!("{name}.dot"));
            io::write_graph(&json, graph)?;
            io::write_text(&dot, &graph_to_dot(graph, name, layout))?;
            out!("wrote {}", json.display())?;
            out!("wrote {}", dot.display())?;
        }
        None => out!("{}", io::graph_to_json(graph)?)?,
    }
    Ok(())
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Power { graph, k, perm, out_dir } => {
            let space = load_space(&graph, k)?;
            let p = parse_perm(&perm, &space)?;
            let power = space.power(&p)?;
            out!("symmetric: {}", power.symmetric)?;
            out!("involution: {}", p.is_involution())?;
            match &power.graph {
                Some(g) => {
                    if let Some(dir) = &out_dir {
                        let cloud = CloudGraph::from_permutation(&p, k, space.m())?;
                        std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
                        io::write_text(dir.join("clouds.dot"), &cloud_graph_to_dot(&cloud, "clouds"))?;
                    }
                    emit(g, "power", Some(space.m()), out_dir.as_deref())?;
                }
                None => {
                    let (i, j) = power.product.asymmetry().expect("product is not symmetric");
                    out!("first asymmetric entry: ({i}, {j})")?;
                }
            }
            Ok(verdict(power.symmetric))
        }
        Command::Zigzag { g, h, out_dir } => {
            let g = io::read_labeled(&g)?;
            let h = io::read_labeled(&h)?;
            let z = zigzag_product(&g, &h)?;
            out!("vertices: {}", z.vertex_count())?;
            out!("degree: {}", h.degree() * h.degree())?;
            emit(&z, "zigzag", Some(g.degree()), out_dir.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Equal { graph, k, perm, perm2 } => {
            let space = load_space(&graph, k)?;
            let p = parse_perm(&perm, &space)?;
            let q = parse_perm(&perm2, &space)?;
            let equal = space.products_equal(&p, &q)?;
            out!("products equal: {equal}")?;
            Ok(verdict(equal))
        }
        Command::Reduce { graph, k, perm, cap } => {
            let space = load_space(&graph, k)?;
            let p = parse_perm(&perm, &space)?;
            let q = match reduce_to_involution(space.base(), k, &p) {
                Ok(q) => q,
                Err(Error::QuotientNotSymmetric) => {
                    out!("permutation quotient is not symmetric; no involution from transfer sets")?;
                    return Ok(ExitCode::from(1));
                }
                Err(err) => return Err(err.into()),
            };
            let pi = copies_partition(space.base(), k)?;
            out!("q: {q}")?;
            out!("involution: {}", q.is_involution())?;
            out!("products equal: {}", space.products_equal(&p, &q)?)?;
            out!("closed-form count: {}", count_involution_candidates(&p, &pi)?)?;
            out!("bijection systems: {}", bijection_system_count(&p, &pi)?)?;
            if let Some(cap) = cap {
                if involution_count(space.size()) <= BigUint::from(cap) {
                    let all = equivalent_involutions_in(&space, &p, cap)?;
                    out!("equivalent involutions: {}", all.len())?;
                } else {
                    out!("equivalent involutions: skipped, more than {cap} to test")?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Partition { graph } => {
            let g = io::read_graph(&graph)?;
            let pi = neighborhood_partition(&g);
            out!("{}", io::partition_to_json(&pi)?)?;
            out!("equitable: {}", is_equitable(&g, &pi)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Quotient { graph } => {
            let g = io::read_graph(&graph)?;
            let pi = neighborhood_partition(&g);
            let q = quotient_adjacency(&g, &pi)?;
            let counts = io::GraphFile::from_matrix(&q.counts)?.matrix;
            let report = json!({
                "blocks": pi.blocks(),
                "counts": counts,
                "sizes": q.sizes,
                "invertible": q.is_invertible(),
            });
            out!("{}", serde_json::to_string_pretty(&report)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { graph, k, mode, samples, seed, cap } => {
            let space = load_space(&graph, k)?;
            let summary = match mode {
                Mode::Exhaustive => scan::exhaustive(&space, cap)?,
                Mode::Sample => scan::sampled(&space, samples, seed)?,
            };
            out!("{summary}")?;
            Ok(ExitCode::SUCCESS)
        }
        Command::CatalogC8 => {
            for p in c8_all_valid_noninvolutions() {
                out!("{p}")?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gap { graph } => {
            let g = io::read_graph(&graph)?;
            let est = spectral_gap_estimate(&g)?;
            out!("degree: {}", est.degree)?;
            out!("lambda2: {:.9}", est.lambda2)?;
            out!("gap: {:.9}", est.gap())?;
            out!("iterations: {}", est.iterations)?;
            out!("converged: {}", est.converged)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
