//! The `actegory` command: validate and print fixture files, evaluate
//! operator expressions over them, and run the law suite.

use std::process::ExitCode;

use actegory_cli::{expr, format, report, workspace::Workspace, CliError};
use actegory_core::lawsuite::{run_selected, FuzzConfig};
use actegory_core::Limits;
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "actegory", version, about = "finite complemented-pair engine")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate fixture files.
    Validate {
        files: Vec<String>,
    },
    /// Print a loaded value back in the text format (round-trip check).
    Print {
        /// fixture files to load
        #[arg(short, long)]
        file: Vec<String>,
        /// name of the value to print; prints every value when omitted
        name: Option<String>,
    },
    /// Evaluate a prefix expression over loaded values.
    Eval {
        #[arg(short, long)]
        file: Vec<String>,
        /// e.g. "(end (harrow M M))"
        expr: String,
    },
    /// Regenerate and print a fuzzed instance (for counterexample reports).
    Instance {
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long)]
        index: usize,
        #[arg(long, default_value = "m")]
        size: String,
    },
    /// Run the law suite (law ids or block names; "all" for everything).
    Check {
        /// law ids like `comp2.3`, block names like `exy`, or `all`
        laws: Vec<String>,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// instance-size class: s, m or l
        #[arg(long, default_value = "m")]
        size: String,
        /// fuzzed instances per law
        #[arg(long, default_value_t = 100)]
        instances: usize,
        /// machine-readable report
        #[arg(long)]
        json: bool,
    },
}

fn limits_from_env() -> Limits {
    let base = Limits::default();
    match std::env::var("ACTEGORY_SIZE_LIMIT") {
        Ok(v) => match v.parse::<usize>() {
            Ok(factor) if factor >= 1 => base.scaled(factor),
            _ => {
                eprintln!("warning: ignoring invalid ACTEGORY_SIZE_LIMIT=`{v}` (expected a positive integer scale)");
                base
            }
        },
        Err(_) => base,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                CliError::Engine(ref err) if err.is_size_limit() => ExitCode::from(2),
                CliError::Parse { .. }
                | CliError::NameClash(_)
                | CliError::UnknownName(_)
                | CliError::Arity(_)
                | CliError::Expr(_) => ExitCode::from(2),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let limits = limits_from_env();
    match cli.command {
        Command::Validate { files } => {
            let mut ws = Workspace::new();
            for f in &files {
                ws.load_file(f, &limits)?;
            }
            for (name, v) in ws.names() {
                println!("ok: {} `{}`", v.kind(), name);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Print { file, name } => {
            let mut ws = Workspace::new();
            for f in &file {
                ws.load_file(f, &limits)?;
            }
            match name {
                Some(n) => print!("{}", format::print_value(&n, ws.get(&n)?)),
                None => {
                    for (n, v) in ws.names() {
                        print!("{}", format::print_value(n, v));
                        println!();
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Eval { file, expr: src } => {
            let mut ws = Workspace::new();
            for f in &file {
                ws.load_file(f, &limits)?;
            }
            let e = expr::parse(&src)?;
            let v = expr::eval(&ws, &e, &limits)?;
            print!("{}", expr::print_eval(&v));
            Ok(ExitCode::SUCCESS)
        }
        Command::Instance { seed, index, size } => {
            let config = FuzzConfig { seed, instances: index + 1, ..FuzzConfig::default() }
                .sized(&size)
                .map_err(CliError::Engine)?;
            let mut fz = actegory_core::lawsuite::Fuzzer::new(config);
            let input = fz.instance(index).map_err(CliError::Engine)?;
            // categories are renamed so the dump reparses even when two of
            // them happen to share a library name
            print!("{}", format::print_category_as("X", &input.x));
            print!("{}", format::print_category_as("Y", &input.y));
            print!("{}", format::print_category_as("Z", &input.z));
            print!("{}", format::print_functor_as("f", &input.f, "X", "Y"));
            print!("{}", format::print_functor_as("f2", &input.f2, "X", "Y"));
            print!("{}", format::print_functor_as("g", &input.g, "Y", "Z"));
            print!("{}", format::print_left_as("A", &input.a, "X"));
            print!("{}", format::print_left_as("B", &input.b, "X"));
            print!("{}", format::print_left_as("C2", &input.c, "X"));
            print!("{}", format::print_left_as("Ay", &input.ay, "Y"));
            print!("{}", format::print_right_as("M", &input.m, "X"));
            print!("{}", format::print_right_as("N", &input.n, "X"));
            print!("{}", format::print_right_as("M2", &input.m2, "X"));
            print!("{}", format::print_right_as("My", &input.my, "Y"));
            print!("{}", format::print_right_as("My2", &input.my2, "Y"));
            print!("{}", format::print_left_as("Ay2", &input.ay2, "Y"));
            print!("{}", format::print_profunctor_as("H", &input.h, "X"));
            print!("{}", format::print_profunctor_as("K", &input.k, "X"));
            print!("{}", format::print_profunctor_as("Hy", &input.hy, "Y"));
            print!("{}", format::print_category_as("Ptot", &input.p.total));
            print!("{}", format::print_functor_as("p", &input.p.proj, "Ptot", "X"));
            print!("{}", format::print_category_as("Qtot", &input.q.total));
            print!("{}", format::print_functor_as("q", &input.q.proj, "Qtot", "X"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { laws, seed, size, instances, json } => {
            let config = FuzzConfig { seed, instances, ..FuzzConfig::default() }
                .sized(&size)
                .map_err(CliError::Engine)?;
            let select: Option<Vec<String>> =
                if laws.is_empty() || laws.iter().any(|l| l == "all") {
                    None
                } else {
                    Some(laws)
                };
            let rep = run_selected(&config, select.as_deref()).map_err(CliError::Engine)?;
            if json {
                println!("{}", report::to_json(&rep));
            } else {
                print!("{}", report::to_text(&rep));
            }
            Ok(if rep.all_pass() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}
