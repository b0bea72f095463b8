//! `bhset`: greedy B_h-set construction, certification, and
//! verification from the command line.
//!
//! Exit codes are stable across subcommands: 0 for success or a
//! certified set, 1 when a checked property fails and a witness is
//! printed, 2 for usage and parse errors, 3 when a computation hits
//! the overflow or resource guards.

mod output;

use clap::{Parser, Subcommand, ValueEnum};

use bhset::{
    greedy_prefix, h_fold_sumset, is_bh, oracle_greedy, oracle_is_bh, rep_count, representations,
    verify_suite, ClaimRecord, IntegerSet, Order, Result, VerifyOptions,
};

#[derive(Parser)]
#[command(
    name = "bhset",
    version,
    about = "Greedy B_h-sets: construction, certification, sumsets, tables, and verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the greedy B_h-set terms a_0 through a_count
    Greedy {
        /// Sum length defining the B_h property
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        h: u32,
        /// Number of terms to construct after the initial 0
        #[arg(long)]
        count: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Use the brute-force reference construction instead of the
        /// incremental engine
        #[arg(long)]
        oracle: bool,
    },
    /// Certify a set as B_h or print a collision witness
    Check {
        /// Sum length defining the B_h property
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        h: u32,
        /// Comma-separated, strictly increasing nonnegative integers
        #[arg(long, value_parser = parse_set)]
        set: IntegerSet,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Use the brute-force reference certifier
        #[arg(long)]
        oracle: bool,
    },
    /// Count and list the representations of n as h-element sums
    Repfn {
        /// Sum length defining the B_h property
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        h: u32,
        /// Comma-separated, strictly increasing nonnegative integers
        #[arg(long, value_parser = parse_set)]
        set: IntegerSet,
        /// Value whose representations are counted
        #[arg(long)]
        n: u128,
    },
    /// Print the h-fold sumset of a set
    Sumset {
        /// Sum length defining the B_h property
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        h: u32,
        /// Comma-separated, strictly increasing nonnegative integers
        #[arg(long, value_parser = parse_set)]
        set: IntegerSet,
    },
    /// Tabulate greedy terms a_1..a_k for a range of h
    Table {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        h_min: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        h_max: u32,
        /// Number of terms per row
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the closed-form and bound verification suite
    Verify {
        /// Largest h checked against the third-term formula
        #[arg(long, default_value_t = 30)]
        h_max_a3: u32,
        /// Largest h checked against the fourth-term formula
        #[arg(long, default_value_t = 20)]
        h_max_a4: u32,
        /// Greedy terms computed per order
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..), default_value_t = 4)]
        depth: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Append a synthetic failing claim to prove the harness can
        /// report failure
        #[arg(long)]
        inject_fault: bool,
    },
}

fn parse_set(input: &str) -> std::result::Result<IntegerSet, String> {
    let mut elements = Vec::new();
    for piece in input.split(',') {
        let value: u128 = piece
            .parse()
            .map_err(|_| format!("'{piece}' is not a nonnegative decimal integer"))?;
        elements.push(value);
    }
    IntegerSet::new(elements).map_err(|e| e.to_string())
}

fn order(h: u32) -> Order {
    Order::new(h).expect("argument range starts at 1")
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            3
        }
    };
    std::process::exit(code);
}

fn run(command: Command) -> Result<i32> {
    match command {
        Command::Greedy {
            h,
            count,
            format,
            oracle,
        } => {
            let elements = if oracle {
                oracle_greedy(order(h), count)?
            } else {
                greedy_prefix(order(h), count)?
            };
            println!(
                "{}",
                match format {
                    Format::Text => output::greedy_text(&elements),
                    Format::Csv => output::greedy_csv(&elements),
                    Format::Json => output::greedy_json(h, &elements),
                }
            );
            Ok(0)
        }
        Command::Check {
            h,
            set,
            format,
            oracle,
        } => {
            let verdict = if oracle {
                oracle_is_bh(&set, order(h))?
            } else {
                is_bh(&set, order(h))?
            };
            println!(
                "{}",
                match format {
                    Format::Text => output::check_text(&verdict),
                    Format::Csv => output::check_csv(&verdict),
                    Format::Json => output::check_json(h, &set, &verdict),
                }
            );
            Ok(if verdict.is_certified() { 0 } else { 1 })
        }
        Command::Repfn { h, set, n } => {
            let count = rep_count(&set, order(h), n);
            println!("{count}");
            for rep in representations(&set, order(h), n) {
                println!("{rep}");
            }
            Ok(0)
        }
        Command::Sumset { h, set } => {
            let sumset = h_fold_sumset(&set, order(h))?;
            println!("{sumset}");
            Ok(0)
        }
        Command::Table {
            h_min,
            h_max,
            k,
            format,
        } => {
            if h_min > h_max {
                eprintln!("error: --h-min must not exceed --h-max");
                return Ok(2);
            }
            let mut rows = Vec::with_capacity((h_max - h_min + 1) as usize);
            for h in h_min..=h_max {
                rows.push((h, greedy_prefix(order(h), k)?));
            }
            println!(
                "{}",
                match format {
                    Format::Text => output::table_text(&rows),
                    Format::Csv => output::table_csv(&rows, k),
                    Format::Json => output::table_json(&rows),
                }
            );
            Ok(0)
        }
        Command::Verify {
            h_max_a3,
            h_max_a4,
            depth,
            format,
            inject_fault,
        } => {
            let options = VerifyOptions {
                h_max_a3,
                h_max_a4,
                prefix_depth: depth,
                ..VerifyOptions::default()
            };
            let mut report = verify_suite(&options);
            if inject_fault {
                report.claims.push(ClaimRecord {
                    id: "injected_fault".to_string(),
                    range: "self-test".to_string(),
                    expected: Vec::new(),
                    computed: Vec::new(),
                    pass: false,
                    details: "synthetic failure requested via --inject-fault".to_string(),
                });
                report.pass = false;
            }
            println!(
                "{}",
                match format {
                    Format::Text => output::verify_text(&report),
                    Format::Csv => output::verify_csv(&report),
                    Format::Json => output::verify_json(&report),
                }
            );
            Ok(if report.pass { 0 } else { 1 })
        }
    }
}
