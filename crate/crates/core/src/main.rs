use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cubic3::report::{self, IdealOp as Op};
use cubic3::{Error, Result};

#[derive(Parser)]
#[command(name = "cubic3", version, about = "Cubic function fields of characteristic three")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Standard model of the curve and the transformations used.
    Standardize { file: PathBuf },
    /// Index, discriminant, genus and related data of a standard curve.
    Invariants { file: PathBuf },
    /// Decomposition of a finite place or of infinity.
    Split {
        file: PathBuf,
        /// A monic irreducible polynomial (coefficients, constant first) or `inf`.
        #[arg(long)]
        place: String,
    },
    /// Ideal arithmetic.
    Ideal {
        file: PathBuf,
        #[command(subcommand)]
        op: IdealOp,
    },
    /// The distinguished representative of the class of I1 I2.
    Compred { file: PathBuf, i1: String, i2: String },
    /// Recomputes the built-in GF(3^10) example and compares it with the published values.
    VerifyExample,
}

#[derive(Subcommand)]
enum IdealOp {
    /// I1 I2, with content.
    Mul { i1: String, i2: String },
    /// The inverse s/I of a primitive ideal.
    Inv { i: String },
    /// I1 / I2 where I2 contains I1.
    Div { i1: String, i2: String },
}

fn load(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<(String, bool)> {
    let out = match cli.cmd {
        Cmd::Standardize { file } => report::standardize(&load(&file)?)?,
        Cmd::Invariants { file } => report::invariants(&load(&file)?)?,
        Cmd::Split { file, place } => report::split(&load(&file)?, &place)?,
        Cmd::Ideal { file, op } => {
            let text = load(&file)?;
            match op {
                IdealOp::Mul { i1, i2 } => report::ideal(&text, Op::Mul, &i1, Some(&i2))?,
                IdealOp::Inv { i } => report::ideal(&text, Op::Inv, &i, None)?,
                IdealOp::Div { i1, i2 } => report::ideal(&text, Op::Div, &i1, Some(&i2))?,
            }
        }
        Cmd::Compred { file, i1, i2 } => report::compred(&load(&file)?, &i1, &i2)?,
        Cmd::VerifyExample => return report::verify_example(),
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error={} code={} message={e}", e.tag(), e.exit_code());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
