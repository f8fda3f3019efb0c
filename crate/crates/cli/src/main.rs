use std::io::Read;
use std::path::PathBuf;
use std::process;

use clap::{Parser, Subcommand};
use udenom::molien::DEFAULT_GROUP_BOUND;
use udenom::torus::DEFAULT_SUBSET_BOUND;
use udenom::ExactCyclo;
use udenom_cli::{
    cmd_binary_forms, cmd_cyclo, cmd_finite, cmd_torus, paper_report, render_report, CliError, CycloOp, ExitCode,
    Method, OutputForm,
};

#[derive(Parser)]
#[command(name = "udenom", version, about = "Universal denominators of Hilbert series of invariant rings")]
struct Cli {
    #[arg(long, value_enum, default_value_t = OutputForm::Factored, global = true)]
    output: OutputForm,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Finite group given as JSON (file or stdin).
    Finite {
        input: Option<PathBuf>,
        /// Print Hilbert series coefficients up to this degree.
        #[arg(long)]
        order: Option<usize>,
        /// Cap on enumerated group elements.
        #[arg(long, default_value_t = DEFAULT_GROUP_BOUND)]
        bound: u64,
    },
    /// Diagonal torus action given as JSON weights (file or stdin).
    Torus {
        input: Option<PathBuf>,
        /// Largest number of coordinates for subset enumeration.
        #[arg(long, default_value_t = DEFAULT_SUBSET_BOUND)]
        bound: usize,
    },
    /// SL_2 on binary forms of degree n.
    BinaryForms {
        n: u32,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Cyclotomic helpers.
    Cyclo {
        #[command(subcommand)]
        op: CycloCmd,
    },
    /// Recompute the published examples and report each one.
    PaperReport,
}

#[derive(Subcommand)]
enum CycloCmd {
    /// Expand phi_d, with d like `6` or `4,2`.
    Expand {
        degree: String,
    },
    /// Factor 1 - t^d.
    Factor {
        degree: String,
    },
    Lcm {
        a: String,
        b: String,
    },
    Gcd {
        a: String,
        b: String,
    },
}

fn read_input(path: Option<PathBuf>) -> Result<String, CliError> {
    let mut s = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            s = std::fs::read_to_string(&p)
                .map_err(|e| CliError::parse(format!("cannot read {}: {e}", p.display())))?;
        }
        _ => {
            std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::parse(format!("cannot read stdin: {e}")))?;
        }
    }
    Ok(s)
}

fn run(cli: Cli) -> Result<String, CliError> {
    let form = cli.output;
    match cli.command {
        Command::Finite { input, order, bound } => cmd_finite(&read_input(input)?, form, order, bound, &ExactCyclo),
        Command::Torus { input, bound } => cmd_torus(&read_input(input)?, form, bound),
        Command::BinaryForms { n, method } => cmd_binary_forms(n, method, form),
        Command::Cyclo { op } => {
            let op = match op {
                CycloCmd::Expand { degree } => CycloOp::Expand(degree),
                CycloCmd::Factor { degree } => CycloOp::Factor(degree),
                CycloCmd::Lcm { a, b } => CycloOp::Lcm(a, b),
                CycloCmd::Gcd { a, b } => CycloOp::Gcd(a, b),
            };
            cmd_cyclo(&op, form, &ExactCyclo)
        }
        Command::PaperReport => {
            let items = paper_report(&ExactCyclo);
            let text = render_report(&items);
            if items.iter().all(|i| i.passed) {
                Ok(text)
            } else {
                print!("{text}");
                Err(CliError::new(ExitCode::ReportMismatch, "paper report has failing items"))
            }
        }
    }
}

fn main() {
    match run(Cli::parse()) {
        Ok(out) => print!("{out}"),
        Err(e) => {
            eprintln!("error: {e}");
            process::exit(e.code as i32);
        }
    }
}
