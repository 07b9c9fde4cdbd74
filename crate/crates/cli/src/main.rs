//! `wofc`: Betti numbers of squarefree monomial ideals from the command line.
//!
//! Exit status: 0 success, 1 usage or input error, 2 a resource cap refused
//! the computation, 3 `compare` found a disagreement.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use wofc::{Caps, Convention};

use commands::Report;

#[derive(Parser, Debug)]
#[command(
    name = "wofc",
    version,
    about = "Betti numbers of squarefree monomial ideals via well ordered facet covers",
    after_help = "Input: one facet per line as whitespace-separated variable names, `#` starts a \
                  comment (graph-bouquets: one edge per line). Read from stdin when no path or `-` \
                  is given. Facet numbers in text output are 1-based positions among the kept \
                  facets; JSON indices are 0-based."
)]
struct Cli {
    #[command(flatten)]
    opts: Options,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Debug, Clone)]
struct Options {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Homological indexing of Betti tables: of S/I or of I.
    #[arg(long, global = true, value_enum, default_value_t = ConventionArg::Quotient)]
    convention: ConventionArg,
    /// Use a seeded random instance instead of reading input.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Generator used with --seed (graph-bouquets always draws a graph).
    #[arg(long, global = true, value_enum, default_value_t = Generator::Complex, requires = "seed")]
    generator: Generator,
    /// Most facets for forest checks and cover searches.
    #[arg(long, global = true, env = "WOFC_FACET_CAP", default_value_t = Caps::default().facets)]
    facet_cap: usize,
    /// Most vertices for vertex cover enumeration.
    #[arg(long, global = true, env = "WOFC_VERTEX_CAP", default_value_t = Caps::default().vertices)]
    vertex_cap: usize,
    /// Most generators for the Lyubeznik complex.
    #[arg(long, global = true, env = "WOFC_LYUBEZNIK_CAP", default_value_t = Caps::default().lyubeznik_generators)]
    lyubeznik_cap: usize,
    /// Most generators for the homology oracle.
    #[arg(long, global = true, env = "WOFC_ORACLE_CAP", default_value_t = Caps::default().oracle_generators)]
    oracle_cap: usize,
    /// Most faces of a single complex handed to the homology routine.
    #[arg(long, global = true, env = "WOFC_FACE_CAP", default_value_t = Caps::default().faces)]
    face_cap: usize,
}

impl Options {
    fn caps(&self) -> Caps {
        Caps {
            facets: self.facet_cap,
            vertices: self.vertex_cap,
            lyubeznik_generators: self.lyubeznik_cap,
            oracle_generators: self.oracle_cap,
            faces: self.face_cap,
        }
    }

    fn convention(&self) -> Convention {
        match self.convention {
            ConventionArg::Quotient => Convention::Quotient,
            ConventionArg::Ideal => Convention::Ideal,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum ConventionArg {
    Quotient,
    Ideal,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum Generator {
    /// Random facets; often not a forest.
    Complex,
    /// A random simplicial forest grown by adding leaves.
    Forest,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Multigraded and graded Betti numbers of a simplicial forest.
    Betti(Source),
    /// Exact Betti numbers of any complex from simplicial homology.
    Oracle(Source),
    /// Check the forest formula (or cover certificates) against the oracle.
    Compare(Source),
    /// Decide whether the complex is a simplicial forest.
    IsForest(Source),
    /// Minimal facet covers and their well ordered orderings.
    Covers(Source),
    /// Well ordered facet covers of the whole complex, or check one sequence.
    Wofc {
        #[command(flatten)]
        source: Source,
        /// Facet numbers in sequence order, e.g. 3,1,4.
        #[arg(long, value_delimiter = ',')]
        sequence: Option<Vec<usize>>,
    },
    /// Lyubeznik complex of the facet ideal under a generator order.
    Lyubeznik {
        #[command(flatten)]
        source: Source,
        /// Facet numbers from smallest to largest generator; default file order.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<usize>>,
    },
    /// Remove a facet and localize at the variables outside it.
    Localize {
        #[command(flatten)]
        source: Source,
        /// Facet number to remove.
        #[arg(long)]
        facet: usize,
    },
    /// Regularity lower bounds from covers and from induced matchings.
    Bounds(Source),
    /// Bouquet sets of minimal edge covers of a graph, or bouquets of a sequence.
    GraphBouquets {
        #[command(flatten)]
        source: Source,
        /// Edge numbers of a well ordered edge cover, in order.
        #[arg(long, value_delimiter = ',')]
        sequence: Option<Vec<usize>>,
    },
}

#[derive(Args, Debug, Clone)]
struct Source {
    /// Input file; stdin when omitted or `-`.
    input: Option<PathBuf>,
}

/// How a run ended, mapped onto the exit status.
#[derive(Debug)]
pub enum Failure {
    Input(String),
    Cap(String),
}

impl From<wofc::Error> for Failure {
    fn from(e: wofc::Error) -> Self {
        match e {
            wofc::Error::CapExceeded { .. } => Failure::Cap(format!("refused: {e}")),
            other => Failure::Input(other.to_string()),
        }
    }
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let opts = &cli.opts;
    let caps = opts.caps();
    let conv = opts.convention();
    if let Verb::GraphBouquets { source, sequence } = &cli.verb {
        let g = input::graph(source.input.as_deref(), opts.seed)?;
        return commands::graph_bouquets(&g, sequence.as_deref(), &caps);
    }
    let source = match &cli.verb {
        Verb::Betti(s) | Verb::Oracle(s) | Verb::Compare(s) | Verb::IsForest(s) | Verb::Covers(s) | Verb::Bounds(s) => s,
        Verb::Wofc { source, .. } | Verb::Lyubeznik { source, .. } | Verb::Localize { source, .. } => source,
        Verb::GraphBouquets { .. } => unreachable!(),
    };
    let seed = opts.seed.map(|s| (s, matches!(opts.generator, Generator::Forest)));
    let cx = input::complex(source.input.as_deref(), seed)?;
    match &cli.verb {
        Verb::Betti(_) => commands::betti(&cx, &caps, conv),
        Verb::Oracle(_) => commands::oracle(&cx, &caps, conv),
        Verb::Compare(_) => commands::compare(&cx, &caps, conv),
        Verb::IsForest(_) => commands::is_forest(&cx, &caps),
        Verb::Covers(_) => commands::covers(&cx, &caps),
        Verb::Wofc { sequence, .. } => commands::wofc(&cx, sequence.as_deref(), &caps),
        Verb::Lyubeznik { order, .. } => commands::lyubeznik(&cx, order.as_deref(), &caps),
        Verb::Localize { facet, .. } => commands::localize(&cx, *facet),
        Verb::Bounds(_) => commands::bounds(&cx, &caps),
        Verb::GraphBouquets { .. } => unreachable!(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(report) => {
            report.print(cli.opts.format == Format::Json);
            if report.mismatch {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
