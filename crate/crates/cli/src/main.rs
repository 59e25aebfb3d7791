use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use spectra_cli::{
    run, run_each, CheckKind, CliError, Command, Input, InputKind, Job, Options, OutputFormat,
    Target,
};
use spectra_core::spectral::DEFAULT_CLUSTER_TOL;
use spectra_core::transforms::parse_path;
use spectra_core::GraphFormat;

#[derive(Parser)]
#[command(name = "spectra", version, about = "Spectra, predistance polynomials and preintersection numbers of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    /// Eigenvalues closer than this are merged
    #[arg(long, global = true, default_value_t = DEFAULT_CLUSTER_TOL)]
    cluster_tol: f64,

    /// Tolerance of the selected check
    #[arg(long, global = true)]
    check_tol: Option<f64>,

    #[arg(long, short, global = true, value_enum, default_value_t = Format::Json)]
    output: Format,

    /// Also report the nearest fraction with denominator at most 10^6
    #[arg(long, global = true)]
    rationalize: bool,

    /// edgelist, adjmatrix or graph6; inferred when omitted
    #[arg(long, global = true)]
    graph_format: Option<GraphFormat>,

    /// Process every file in this directory instead of FILE
    #[arg(long, global = true, value_name = "DIR")]
    each: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute one description from another
    Compute {
        #[arg(value_enum)]
        target: TargetArg,
        #[arg(long, value_enum)]
        from: KindArg,
        /// Longest closed walk counted by `compute moments`
        #[arg(long)]
        max_len: Option<usize>,
        file: Option<String>,
    },
    /// Apply a comma-separated conversion path such as sp→poly,poly→pre
    Convert {
        #[arg(long)]
        path: String,
        file: Option<String>,
    },
    /// Run a distance-regularity test or structural predicate
    Check {
        #[arg(value_enum)]
        what: CheckArg,
        #[arg(long, value_enum)]
        from: Option<KindArg>,
        file: Option<String>,
    },
    /// Run a conversion cycle and compare the result with the input
    Roundtrip {
        #[arg(long)]
        path: String,
        #[arg(long, default_value_t = 1e-7)]
        tol: f64,
        #[arg(long, value_enum)]
        from: Option<KindArg>,
        file: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    Spectrum,
    Polys,
    Preintersection,
    Moments,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Graph,
    Spectrum,
    Polys,
    Preintersection,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    Drg,
    Bipartite,
    Girth,
    Gamma,
    Monic,
}

impl From<KindArg> for InputKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Graph => InputKind::Graph,
            KindArg::Spectrum => InputKind::Spectrum,
            KindArg::Polys => InputKind::Polys,
            KindArg::Preintersection => InputKind::Preintersection,
        }
    }
}

fn build(cli: Cli) -> Result<(Job, Option<PathBuf>), CliError> {
    let g = cli.global;
    let (command, input_kind, file) = match cli.command {
        Cmd::Compute {
            target,
            from,
            max_len,
            file,
        } => {
            let target = match target {
                TargetArg::Spectrum => Target::Spectrum,
                TargetArg::Polys => Target::Polys,
                TargetArg::Preintersection => Target::Preintersection,
                TargetArg::Moments => Target::Moments,
            };
            (Command::Compute { target, max_len }, Some(from.into()), file)
        }
        Cmd::Convert { path, file } => (Command::Convert { path: path_arg(&path)? }, None, file),
        Cmd::Check { what, from, file } => {
            let what = match what {
                CheckArg::Drg => CheckKind::Drg,
                CheckArg::Bipartite => CheckKind::Bipartite,
                CheckArg::Girth => CheckKind::Girth,
                CheckArg::Gamma => CheckKind::Gamma,
                CheckArg::Monic => CheckKind::Monic,
            };
            (Command::Check { what }, from.map(Into::into), file)
        }
        Cmd::Roundtrip {
            path,
            tol,
            from,
            file,
        } => (
            Command::Roundtrip {
                path: path_arg(&path)?,
                tol,
            },
            from.map(Into::into),
            file,
        ),
    };
    let input = match (&file, &g.each) {
        (Some(_), Some(_)) => return Err(CliError::Usage("give either FILE or --each, not both".into())),
        (Some(f), None) => Input::parse(f),
        (None, Some(_)) => Input::Stdin,
        (None, None) => return Err(CliError::Usage("missing FILE (use - for stdin)".into())),
    };
    let job = Job {
        command,
        input_kind,
        input,
        options: Options {
            cluster_tol: g.cluster_tol,
            check_tol: g.check_tol,
            output: match g.output {
                Format::Json => OutputFormat::Json,
                Format::Text => OutputFormat::Text,
            },
            rationalize: g.rationalize,
            graph_format: g.graph_format,
        },
    };
    Ok((job, g.each))
}

/// A malformed path is a usage error, not a domain error.
fn path_arg(s: &str) -> Result<Vec<spectra_core::transforms::Conversion>, CliError> {
    parse_path(s).map_err(|e| CliError::Usage(e.to_string()))
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("SPECTRA_LOG", "warn"))
        .format_timestamp(None)
        .init();
    let cli = Cli::parse();
    let result = build(cli).and_then(|(job, each)| {
        let out = match &each {
            Some(dir) => run_each(&job, dir)?,
            None => run(&job)?,
        };
        Ok((out, job.options.output))
    });
    match result {
        Ok((out, format)) => {
            print!("{}", out.render(format));
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
