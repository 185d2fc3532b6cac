use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod doc;
mod verbs;

use verbs::{MakeArgs, Output, Run};

/// Exact computations with parabolic subalgebras.
///
/// Document arguments are file paths, `-` for stdin, or inline JSON.
/// Exit status: 0 on success, 1 on a rejected input (error JSON on
/// stderr), 2 on a failed internal consistency check.
#[derive(Parser)]
#[command(name = "parabolica", version, about)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Catalog algebra `gl n`, `sl n` or `so p q`, or one of its parabolics.
    Make {
        #[arg(value_parser = ["gl", "sl", "so"])]
        family: String,
        #[arg(required = true, num_args = 1..=2)]
        dims: Vec<usize>,
        /// Standard parabolic of the given type, e.g. `1,3`.
        #[arg(long, conflicts_with_all = ["borel", "stabilizer"])]
        parabolic: Option<String>,
        /// The standard Borel subalgebra.
        #[arg(long, conflicts_with = "stabilizer")]
        borel: bool,
        /// Stabilizer of the span of these vectors of the defining space.
        #[arg(long)]
        stabilizer: Option<String>,
    },
    /// Runs the parabolic recognizer on a subspace document.
    Check {
        #[arg(default_value = "-")]
        subspace: String,
        /// Also compute the lowest-weight line in the exterior power.
        #[arg(long)]
        wedge: bool,
        /// Exterior-power budget; defaults to PARABOLICA_WEDGE_BUDGET or 512.
        #[arg(long, requires = "wedge")]
        budget: Option<u128>,
    },
    /// Projects a parabolic along another.
    Project { along: String, parabolic: String },
    /// Opposite parabolic through a grading element.
    Opposite {
        #[arg(default_value = "-")]
        parabolic: String,
        /// Subspace document the grading element must lie in.
        #[arg(long)]
        within: Option<String>,
    },
    /// Levi subalgebra and Levi quotient.
    Levi {
        #[arg(default_value = "-")]
        parabolic: String,
        #[arg(long)]
        within: Option<String>,
    },
    /// Roots, root spaces, Cartan matrix and fundamental coweights.
    Rootdata {
        #[arg(default_value = "-")]
        algebra: String,
    },
    /// Weyl word of a minimal parabolic containing the standard Cartan.
    Weyl {
        #[arg(default_value = "-")]
        chamber: String,
    },
    /// Weyl distance between two minimal parabolics.
    Delta { first: String, second: String },
    /// The standard apartment as a chamber system.
    Building {
        #[arg(default_value = "-")]
        algebra: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Also glue a second apartment and check the building axioms.
        #[arg(long)]
        verify: bool,
    },
    /// Standard configuration of a witness, projected from its center.
    Config {
        #[arg(default_value = "-")]
        witness: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Runs the acceptance suite.
    Selftest {
        #[arg(long)]
        criterion: Option<usize>,
    },
}

fn run(command: Command) -> doc::CliResult<Run> {
    let output = match command {
        Command::Make { family, dims, parabolic, borel, stabilizer } => verbs::make(MakeArgs {
            family: &family,
            dims: &dims,
            parabolic: parabolic.as_deref(),
            borel,
            stabilizer: stabilizer.as_deref(),
        })?,
        Command::Check { subspace, wedge, budget } => verbs::check(&subspace, wedge, budget)?,
        Command::Project { along, parabolic } => verbs::project(&along, &parabolic)?,
        Command::Opposite { parabolic, within } => verbs::opposite(&parabolic, within.as_deref())?,
        Command::Levi { parabolic, within } => verbs::levi(&parabolic, within.as_deref())?,
        Command::Rootdata { algebra } => verbs::rootdata(&algebra)?,
        Command::Weyl { chamber } => verbs::weyl(&chamber)?,
        Command::Delta { first, second } => verbs::delta(&first, &second)?,
        Command::Building { algebra, format, verify } => {
            verbs::building(&algebra, matches!(format, Format::Dot), verify)?
        }
        Command::Config { witness, format } => verbs::config(&witness, matches!(format, Format::Dot))?,
        Command::Selftest { criterion } => return verbs::selftest(criterion),
    };
    Ok(output.into())
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args.command) {
        Ok(Run { output, code }) => {
            let text = match output {
                Output::Json(v) => serde_json::to_string_pretty(&v).expect("JSON value") + "\n",
                Output::Text(s) => s,
            };
            // a closed pipe downstream is not our failure
            let _ = std::io::stdout().write_all(text.as_bytes());
            ExitCode::from(code as u8)
        }
        Err(f) => {
            eprintln!("{}", f.to_json());
            ExitCode::from(f.exit_code() as u8)
        }
    }
}
