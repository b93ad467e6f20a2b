use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand};
use neumaier::commands::{self, Expectation, TableFormat};
use neumaier::input::{resolve, GraphSource, ResolvedGraph};
use neumaier::report::Report;

/// Construct, classify and verify Neumaier graphs.
#[derive(Parser)]
#[command(name = "neumaier", version)]
struct Cli {
    /// Emit the JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for table and scan commands.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    /// Also write the JSON report to FILE.
    #[arg(long, global = true, value_name = "FILE")]
    report: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArg {
    /// Catalog name, graph6 string or edge-list file.
    graph: Option<String>,
    #[arg(long, conflicts_with_all = ["graph", "name", "edges"])]
    g6: Option<String>,
    #[arg(long, conflicts_with_all = ["graph", "edges"])]
    name: Option<String>,
    #[arg(long, value_name = "FILE", conflicts_with = "graph")]
    edges: Option<PathBuf>,
}

impl GraphArg {
    fn source(&self) -> Result<GraphSource> {
        Ok(match (&self.graph, &self.g6, &self.name, &self.edges) {
            (Some(t), None, None, None) => GraphSource::guess(t),
            (None, Some(s), None, None) => GraphSource::Graph6(s.clone()),
            (None, None, Some(n), None) => GraphSource::Name(n.clone()),
            (None, None, None, Some(p)) => GraphSource::EdgeFile(p.clone()),
            _ => bail!("give exactly one graph: positional, --g6, --name or --edges"),
        })
    }

    fn resolve(&self) -> Result<ResolvedGraph> {
        resolve(&self.source()?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify a graph as Neumaier, strictly Neumaier or neither.
    Classify(GraphArg),
    /// Parameter feasibility.
    #[command(subcommand)]
    Params(ParamsCommand),
    /// Reproduce the table of small strongly regular Neumaier graphs.
    Table1 {
        #[arg(long, value_enum, default_value = "markdown")]
        format: TableFormat,
    },
    /// Print the graph6 string of a graph.
    Build(GraphArg),
    /// Build and classify a Cayley graph, e.g. `cayley Z28 1,4,5,7,14,-1,-4,-5,-7`.
    Cayley { group: String, set: String },
    /// Exact characteristic polynomial and integer spectrum.
    Spectrum(GraphArg),
    /// Automorphism group.
    Aut(GraphArg),
    /// Isomorphism test between two graphs.
    Iso {
        g: String,
        h: String,
        #[arg(long, value_enum)]
        expect: Option<Expectation>,
    },
    /// Search connected circulants for strongly regular Neumaier graphs.
    CirculantScan {
        #[arg(long, default_value_t = 30)]
        max_n: usize,
    },
    /// Four-part partition around a regular clique.
    Equitable {
        #[command(flatten)]
        graph: GraphArg,
        /// Clique vertices, comma-separated (default: every regular clique).
        #[arg(long, value_delimiter = ',')]
        clique: Option<Vec<usize>>,
        /// Base vertex in the clique (default: every vertex of the clique).
        #[arg(long)]
        base: Option<usize>,
    },
}

#[derive(Subcommand)]
enum ParamsCommand {
    /// All feasible tuples with valency at most K.
    Enumerate {
        #[arg(long, default_value_t = 10)]
        k_max: usize,
        /// Also list strongly regular tuples.
        #[arg(long)]
        srg: bool,
    },
    /// Check one tuple `n k lambda a c [mu]`.
    Check { n: usize, k: usize, lambda: usize, a: usize, c: usize, mu: Option<usize> },
}

fn run(cli: &Cli) -> Result<Report> {
    Ok(match &cli.command {
        Command::Classify(g) => commands::classify(&g.resolve()?)?,
        Command::Params(ParamsCommand::Enumerate { k_max, srg }) => commands::params_enumerate(*k_max, *srg)?,
        Command::Params(ParamsCommand::Check { n, k, lambda, a, c, mu }) => {
            commands::params_check(*n, *k, *lambda, *a, *c, *mu)?
        }
        Command::Table1 { format } => commands::table1_report(*format)?,
        Command::Build(g) => commands::build(&g.resolve()?)?,
        Command::Cayley { group, set } => commands::cayley(group, set)?,
        Command::Spectrum(g) => commands::spectrum(&g.resolve()?)?,
        Command::Aut(g) => commands::aut(&g.resolve()?)?,
        Command::Iso { g, h, expect } => {
            let g = resolve(&GraphSource::guess(g))?;
            let h = resolve(&GraphSource::guess(h))?;
            commands::iso(&g, &h, *expect)?
        }
        Command::CirculantScan { max_n } => commands::circulant_scan(*max_n)?.0,
        Command::Equitable { graph, clique, base } => commands::equitable(&graph.resolve()?, clique.clone(), *base)?,
    })
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("NEUMAIER_LOG", "warn")).init();
    let cli = Cli::parse();
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let start = Instant::now();
    let outcome = pool.install(|| run(&cli));
    log::info!("finished in {:?}", start.elapsed());
    match outcome {
        Ok(report) => {
            if let Some(path) = &cli.report {
                if let Err(e) = std::fs::write(path, report.to_json()) {
                    eprintln!("error: writing {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if cli.json {
                print!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
