use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cyclic_covers::check;
use cyclic_covers::report::{self, DescribeError, DescribeOptions};
use cyclic_covers::search::{self, PoleFilter, SearchFilter, SearchOptions};

#[derive(Parser)]
#[command(name = "cyclic-covers", version, about = "Square-tiled cyclic covers M_N(a1,a2,a3,a4)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Cycles,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one cover.
    Describe {
        #[arg(allow_negative_numbers = true)]
        n: i64,
        #[arg(num_args = 4, allow_negative_numbers = true, value_names = ["A1", "A2", "A3", "A4"])]
        a: Vec<i64>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// List degree-0 points inside the stratum.
        #[arg(long)]
        include_marked: bool,
    },
    /// Search all canonical classes with N <= N_MAX.
    Search {
        #[arg(default_value_t = 20)]
        n_max: u32,
        #[arg(value_parser = parse_filter, default_value = "all")]
        filter: SearchFilter,
        #[arg(long, conflicts_with = "meromorphic")]
        holomorphic: bool,
        #[arg(long)]
        meromorphic: bool,
        /// Minimal genus (abelian filter) or effective genus (minus filter).
        #[arg(long)]
        geff_min: Option<u32>,
    },
    /// Veech index and SL(2,Z)-orbit.
    Orbit {
        #[arg(allow_negative_numbers = true)]
        n: i64,
        #[arg(num_args = 4, allow_negative_numbers = true, value_names = ["A1", "A2", "A3", "A4"])]
        a: Vec<i64>,
    },
    /// Run every cross-validation on all quadruples with N <= N_MAX.
    Check {
        n_max: u32,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

fn parse_filter(s: &str) -> Result<SearchFilter, String> {
    s.parse()
}

fn quad(a: &[i64]) -> [i64; 4] {
    [a[0], a[1], a[2], a[3]]
}

fn fail(e: &DescribeError) -> ExitCode {
    let field = match e {
        DescribeError::Params(p) => Some(p.field()),
        DescribeError::Veech(_) => None,
    };
    let obj = serde_json::json!({
        "error": e.code(),
        "message": e.to_string(),
        "field": field,
    });
    println!("{obj}");
    if e.is_input_error() {
        ExitCode::from(2)
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Describe {
            n,
            a,
            format,
            include_marked,
        } => match report::describe(n, quad(&a), DescribeOptions { include_marked }) {
            Ok(r) => {
                match format {
                    Format::Json => println!("{}", r.to_json()),
                    Format::Cycles => print!("{}", r.to_text()),
                }
                ExitCode::SUCCESS
            }
            Err(e) => fail(&e),
        },
        Command::Search {
            n_max,
            filter,
            holomorphic,
            meromorphic,
            geff_min,
        } => {
            if n_max < 2 {
                eprintln!("N_MAX must be at least 2");
                return ExitCode::from(2);
            }
            let poles = match (holomorphic, meromorphic) {
                (true, _) => PoleFilter::Holomorphic,
                (_, true) => PoleFilter::Meromorphic,
                _ => PoleFilter::Any,
            };
            let opts = SearchOptions {
                n_max,
                filter,
                poles,
                geff_min,
            };
            print!("{}", search::search(&opts).to_json_lines());
            ExitCode::SUCCESS
        }
        Command::Orbit { n, a } => match report::orbit_report(n, quad(&a)) {
            Ok(r) => {
                println!("{}", serde_json::to_string(&r).expect("orbit serializes"));
                ExitCode::SUCCESS
            }
            Err(e) => fail(&e),
        },
        Command::Check { n_max, jobs } => {
            if n_max < 2 {
                eprintln!("N_MAX must be at least 2");
                return ExitCode::from(2);
            }
            let summary = check::run_check(n_max, jobs);
            print!("{}", summary.render());
            if summary.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
