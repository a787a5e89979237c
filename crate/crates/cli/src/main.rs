//! `shoda`: strong Shoda pairs and primitive central idempotents from the command line.
//!
//! Exit codes: 0 success, 1 computation limit, 2 malformed input.

mod bench;
mod output;

use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use shoda_core::catalog::{parse_group_file, parse_spec};
use shoda_core::group::DEFAULT_ORDER_CAP;
use shoda_core::lattice::DEFAULT_LATTICE_CAP;
use shoda_core::{
    count_consistency, ext_strong_shoda_pairs_with, strong_shoda_pairs_with, verify_pci_set,
    Error, FiniteGroup, SearchOptions, TieBreak,
};

#[derive(Parser)]
#[command(name = "shoda", version, about = "Strong Shoda pairs and primitive central idempotents of Q[G]")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; `csv` is accepted by `bench` only.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    /// Refuse groups with more elements than this.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP)]
    order_cap: usize,

    /// Refuse subgroup lattices with more members than this.
    #[arg(long, global = true, default_value_t = DEFAULT_LATTICE_CAP)]
    lattice_cap: usize,

    /// Which largest abelian normal subgroup to pick when several qualify.
    #[arg(long, value_enum, global = true, default_value_t = Tie::First)]
    tie_break: Tie,
}

#[derive(Subcommand)]
enum Command {
    /// Extremely strong Shoda pairs.
    Essp { group: String },
    /// Strong Shoda pairs, extremely strong ones first.
    Ssp { group: String },
    /// Primitive central idempotents realized by Shoda pairs.
    Pcis {
        group: String,
        #[arg(long, value_enum, default_value_t = Method::Essp)]
        method: Method,
    },
    /// Whether the group is normally monomial, with the dimension sum reached.
    IsNormallyMonomial { group: String },
    /// Check the idempotents found against the algebra laws and the rational class count.
    Verify {
        group: String,
        #[arg(long, value_enum, default_value_t = Method::Ssp)]
        method: Method,
    },
    /// Time the search, with optional pruning ablations and a direct-search baseline.
    Bench {
        group: String,
        /// Add a run with the abelian-quotient and cyclic-A_N shortcuts disabled.
        #[arg(long)]
        no_lemma1: bool,
        /// Add a run with the cyclic-centre filter disabled.
        #[arg(long)]
        no_lemma3: bool,
        /// Add a run that scans every subgroup class without the extremely strong phase.
        #[arg(long)]
        direct_ssp: bool,
        /// Timed repetitions per configuration; the median is reported.
        #[arg(long, default_value_t = 5)]
        repeat: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Essp,
    Ssp,
}

#[derive(Clone, Copy, ValueEnum)]
enum Tie {
    First,
    Last,
}

enum Failure {
    Limit(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_limit() {
            Failure::Limit(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

/// A spec such as `dihedral:8`, or the path of a group file.
fn load_group(arg: &str, cap: usize) -> Result<FiniteGroup, Failure> {
    let path = Path::new(arg);
    let spec = if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("{arg}: {e}")))?;
        parse_group_file(&text).map_err(|e| Failure::Input(format!("{arg}: {e}")))?
    } else {
        parse_spec(arg)?
    };
    Ok(spec.build_with_cap(cap)?)
}

fn run(cli: Cli) -> Result<String, Failure> {
    if cli.format == Format::Csv && !matches!(cli.command, Command::Bench { .. }) {
        return Err(Failure::Input("--format csv is only supported by `bench`".into()));
    }
    let json = cli.format == Format::Json;
    let opts = SearchOptions {
        tie_break: match cli.tie_break {
            Tie::First => TieBreak::First,
            Tie::Last => TieBreak::Last,
        },
        lattice_cap: cli.lattice_cap,
        ..SearchOptions::default()
    };
    let with_idempotents = SearchOptions {
        collect_idempotents: true,
        ..opts.clone()
    };
    let search = |g: &FiniteGroup, method: Method, o: &SearchOptions| match method {
        Method::Essp => ext_strong_shoda_pairs_with(g, o),
        Method::Ssp => strong_shoda_pairs_with(g, o),
    };

    match &cli.command {
        Command::Essp { group } | Command::Ssp { group } => {
            let method = match cli.command {
                Command::Essp { .. } => Method::Essp,
                _ => Method::Ssp,
            };
            let g = load_group(group, cli.order_cap)?;
            let report = search(&g, method, &opts)?;
            Ok(output::pairs(group, &g, method_name(method), &report, json))
        }
        Command::Pcis { group, method } => {
            let g = load_group(group, cli.order_cap)?;
            let report = search(&g, *method, &with_idempotents)?;
            Ok(output::idempotents(group, &g, method_name(*method), &report, json))
        }
        Command::IsNormallyMonomial { group } => {
            let g = load_group(group, cli.order_cap)?;
            let sum = shoda_core::essp_sum_dim(&g)?;
            Ok(output::normally_monomial(group, &g, sum, json))
        }
        Command::Verify { group, method } => {
            let g = load_group(group, cli.order_cap)?;
            let report = search(&g, *method, &with_idempotents)?;
            let es = report.idempotents.as_deref().unwrap_or_default();
            let verdict = verify_pci_set(&g, es, report.complete);
            let consistency = if report.complete && *method == Method::Essp {
                Some(count_consistency(&g)?)
            } else {
                None
            };
            Ok(output::verification(
                group,
                &g,
                method_name(*method),
                &report,
                &verdict,
                consistency,
                json,
            ))
        }
        Command::Bench {
            group,
            no_lemma1,
            no_lemma3,
            direct_ssp,
            repeat,
        } => {
            let g = load_group(group, cli.order_cap)?;
            let plan = bench::Plan {
                no_lemma1: *no_lemma1,
                no_lemma3: *no_lemma3,
                direct_ssp: *direct_ssp,
                repeat: (*repeat).max(1),
            };
            let rows = bench::run(&g, &plan, &opts)?;
            Ok(match cli.format {
                Format::Text => bench::text(group, &g, &rows),
                Format::Json => bench::json(group, &g, &rows),
                Format::Csv => bench::csv(&rows),
            })
        }
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Essp => "essp",
        Method::Ssp => "ssp",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Limit(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
