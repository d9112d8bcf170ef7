//! `leibniz`: structural analysis of Leibniz algebras given as JSON files.
//!
//! Exit codes: 0 on success, 1 when the tested property fails (for example
//! a tensor violating the Leibniz identity, or a non-cyclic input to
//! `classify`), 2 on unreadable input or any other error.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use leibniz_core::io::{parse_input, Input};
use leibniz_core::report::{self, Options, Outcome, Status};
use leibniz_core::{Backend, Tolerance, C64};

#[derive(Parser)]
#[command(name = "leibniz", version, about = "Structural invariants of finite-dimensional Leibniz algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    /// Scale all tolerances from this base value (rank and comparison use it
    /// directly, root clustering 100 times it).
    #[arg(long, global = true, value_name = "EPS")]
    tolerance: Option<f64>,

    /// Scalar backend to compute in.
    #[arg(long, global = true, value_enum)]
    backend: Option<BackendArg>,

    /// Load tensors that fail the Leibniz identity.
    #[arg(long, global = true)]
    allow_invalid: bool,

    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Exact,
    Float,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the Leibniz identity on all basis triples.
    Check { file: PathBuf },
    /// Classify a 3-dimensional cyclic algebra, from a file or from `aa³ = αa² + βa³`.
    Classify {
        file: Option<PathBuf>,
        /// α as `RE,IM`.
        #[arg(long, allow_hyphen_values = true, requires = "beta", conflicts_with = "file")]
        alpha: Option<String>,
        /// β as `RE,IM`.
        #[arg(long, allow_hyphen_values = true, requires = "alpha", conflicts_with = "file")]
        beta: Option<String>,
    },
    /// Run every analysis and assemble one report.
    Analyze { file: PathBuf },
    /// Lower central, derived and right-normed series.
    Series { file: PathBuf },
    /// Engel subalgebra and Fitting decomposition of an element, or the
    /// left/right Engel conditions when no element is given.
    Engel {
        file: PathBuf,
        /// Coordinates `c1,c2,…` in the input basis.
        #[arg(long, allow_hyphen_values = true)]
        element: Option<String>,
    },
    /// Cartan subalgebra of a cyclic algebra and its normalizers.
    Cartan { file: PathBuf },
    /// Maximal subalgebras and the Frattini subalgebra of a cyclic algebra.
    Maximals { file: PathBuf },
    /// Derivation algebra with its inner and outer parts.
    Derivations { file: PathBuf },
    /// Killing form Gram matrix and radical.
    Killing { file: PathBuf },
    /// Decide whether the algebra is generated by one element.
    IsCyclic { file: PathBuf },
}

fn read_input(path: &Path) -> anyhow::Result<Input> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        s
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    parse_input(&text).with_context(|| format!("parsing {}", path.display()))
}

fn parse_pair(text: &str) -> anyhow::Result<C64> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let [re, im] = parts.as_slice() else {
        bail!("expected RE,IM, got {text:?}");
    };
    let re: f64 = re.parse().with_context(|| format!("real part {re:?}"))?;
    let im: f64 = im.parse().with_context(|| format!("imaginary part {im:?}"))?;
    Ok(C64::new(re, im))
}

fn options(g: &Global) -> anyhow::Result<Options> {
    let mut opts = Options { allow_invalid: g.allow_invalid, ..Options::default() };
    if let Some(eps) = g.tolerance {
        opts.tolerance = Tolerance::scaled(eps)?;
    }
    opts.backend = g.backend.map(|b| match b {
        BackendArg::Exact => Backend::Exact,
        BackendArg::Float => Backend::Float,
    });
    Ok(opts)
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let opts = options(&cli.global)?;
    let outcome = match &cli.command {
        Command::Check { file } => report::check(&read_input(file)?, &opts)?,
        Command::Classify { file: Some(file), .. } => report::classify(&read_input(file)?, &opts)?,
        Command::Classify { file: None, alpha: Some(a), beta: Some(b) } => {
            report::classify_pair(parse_pair(a)?, parse_pair(b)?, &opts)?
        }
        Command::Classify { .. } => bail!("classify needs a file or both --alpha and --beta"),
        Command::Analyze { file } => report::analyze(&read_input(file)?, &opts)?,
        Command::Series { file } => report::series(&read_input(file)?, &opts)?,
        Command::Engel { file, element } => {
            let input = read_input(file)?;
            let element = element.as_deref().map(report::parse_element).transpose()?;
            report::engel(&input, element.as_deref(), &opts)?
        }
        Command::Cartan { file } => report::cartan(&read_input(file)?, &opts)?,
        Command::Maximals { file } => report::maximals(&read_input(file)?, &opts)?,
        Command::Derivations { file } => report::derivation_space(&read_input(file)?, &opts)?,
        Command::Killing { file } => report::killing_form(&read_input(file)?, &opts)?,
        Command::IsCyclic { file } => report::cyclicity(&read_input(file)?, &opts)?,
    };
    Ok(outcome)
}

fn emit(outcome: &Outcome, out: Option<&Path>) -> anyhow::Result<()> {
    let mut text = serde_json::to_string_pretty(&outcome.json)?;
    text.push('\n');
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let result = run(&cli).and_then(|o| emit(&o, cli.global.out.as_deref()).map(|()| o.status));
    match result {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::PropertyFailure) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
