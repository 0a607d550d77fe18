use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use slimbasis_cli::formats::VectorFile;
use slimbasis_cli::verify::{self, Sabotage, Suite};
use slimbasis_cli::{read_file, write_file, CliError, Mode};

/// Slim normal bases, ADFT matrices and the addition-only fast transform.
#[derive(Parser)]
#[command(name = "slimbasis", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the ADFT matrix of order n as CSV with a header line.
    GenMatrix {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Mode::Slim)]
        mode: Mode,
        #[arg(long)]
        out: PathBuf,
    },
    /// Apply the fast transform of length 2^t to a vector file.
    Transform {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Print the number of additions executed.
        #[arg(long)]
        count: bool,
    },
    /// Run an invariant suite and report each check.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long)]
        bound: Option<u64>,
        #[arg(long, value_enum, hide = true)]
        sabotage: Option<Sabotage>,
    },
    /// Write the fast transform of length 2^t as a straight-line program.
    ExportPlan {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Describe the slim generator of Q(zeta_n).
    Basis {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        show_coords: bool,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::GenMatrix { n, mode, out } => {
            write_file(&out, &slimbasis_cli::gen_matrix(n, mode)?.to_text())
        }
        Command::Transform {
            t,
            input,
            out,
            count,
        } => {
            let v = VectorFile::parse(&read_file(&input)?)?;
            let (result, ops) = slimbasis_cli::transform(t, &v, count)?;
            write_file(&out, &result.to_text())?;
            if let Some(ops) = ops {
                println!("additions: {ops}");
            }
            Ok(())
        }
        Command::Verify {
            suite,
            bound,
            sabotage,
        } => {
            let report = verify::run(suite, bound, sabotage)?;
            print!("{}", report.to_text());
            match report.failures() {
                0 => Ok(()),
                k => Err(CliError::Verification(k)),
            }
        }
        Command::ExportPlan { t, out } => write_file(&out, &slimbasis_cli::export_plan(t)?),
        Command::Basis { n, show_coords } => {
            print!("{}", slimbasis_cli::basis(n, show_coords)?);
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
