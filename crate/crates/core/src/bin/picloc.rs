//! `picloc`: local Picard groups and unit-sheaf cohomology from the command
//! line.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use picloc::abelian::FieldModel;
use picloc::binoid::detect_simplicial;
use picloc::error::{Error, Result};
use picloc::io::{parse_degree_box, parse_facet_file, parse_ideal_file, parse_presentation_json};
use picloc::monomial::nonreduced_report;
use picloc::picard::{
    crosscheck_simplicial, graph_fast_path, graph_graded_report, picloc_integral_binoid,
    picloc_simplicial_formula, stanley_reisner_cohomology, CohomologyReport,
};
use picloc::report::{
    graph_to_json, graph_to_pretty, nonreduced_to_json, nonreduced_to_pretty, report_to_json,
    report_to_pretty,
};

#[derive(Parser)]
#[command(
    name = "picloc",
    about = "Local Picard groups and unit-sheaf cohomology of binoids, simplicial complexes and Stanley-Reisner rings",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    output: OutputFormat,

    /// Shorthand for --output pretty.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Combinatorial cohomology of the simplicial binoid of a facet file,
    /// by the closed-form link formula, with the per-vertex decomposition.
    Simplicial { input: PathBuf },

    /// Run the direct Čech pipeline and the link formula, verify that they
    /// agree, and report the result.
    Crosscheck { input: PathBuf },

    /// Cohomology of a binoid given by a presentation JSON file. Integral
    /// presentations use the difference-group engine; presentations with
    /// infinity relations must be simplicial.
    Binoid { input: PathBuf },

    /// Full unit-sheaf cohomology of the Stanley-Reisner ring of a facet
    /// file: combinatorial part plus the field part under --field.
    #[command(name = "stanley-reisner")]
    StanleyReisner {
        input: PathBuf,
        /// Field model: q=<prime power> | p=<prime> | Qbar | Cstar | R | Q | symbolic.
        #[arg(long)]
        field: String,
    },

    /// Isolated-vertex and Picard rank counts of a graph, with the graded
    /// rank sequence when the graph is connected.
    Graph { input: PathBuf },

    /// Non-reduced monomial quotient: Stanley-Reisner cohomology of the
    /// reduction plus the nilpotent dimension table over a degree window.
    Monomial {
        input: PathBuf,
        /// Field model (characteristic zero): Qbar | Cstar | R | Q | symbolic.
        #[arg(long)]
        field: String,
        /// Degree window, e.g. -2..2 or -1..1,0..3 (one range per variable).
        #[arg(long, default_value = "-2..2", allow_hyphen_values = true)]
        r#box: String,
    },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().filter_or("PICLOC_LOG", "warn"))
        .format_timestamp(None)
        .init();

    let cli = Cli::parse();
    let format = if cli.pretty {
        OutputFormat::Pretty
    } else {
        cli.output
    };
    match run(&cli.command, format) {
        Ok(output) => {
            use std::io::Write;
            // tolerate a closed pipe on the reading side
            let _ = writeln!(std::io::stdout(), "{}", output.trim_end());
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(Error::from)
}

fn render_report(report: &CohomologyReport, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Json => report_to_json(report),
        OutputFormat::Pretty => Ok(report_to_pretty(report)),
    }
}

fn run(command: &Command, format: OutputFormat) -> Result<String> {
    match command {
        Command::Simplicial { input } => {
            let complex = parse_facet_file(&read(input)?)?;
            let report = picloc_simplicial_formula(&complex)?;
            render_report(&report, format)
        }
        Command::Crosscheck { input } => {
            let complex = parse_facet_file(&read(input)?)?;
            let report = crosscheck_simplicial(&complex)?;
            render_report(&report, format)
        }
        Command::Binoid { input } => {
            let presentation = parse_presentation_json(&read(input)?)?;
            let report = if presentation.is_integral() {
                picloc_integral_binoid(&presentation)?
            } else if presentation.congruences.is_empty() {
                let complex = detect_simplicial(&presentation)?;
                crosscheck_simplicial(&complex)?
            } else {
                return Err(Error::MixedPresentation);
            };
            render_report(&report, format)
        }
        Command::StanleyReisner { input, field } => {
            let complex = parse_facet_file(&read(input)?)?;
            let model = FieldModel::parse(field)?;
            let report = stanley_reisner_cohomology(&complex, model)?;
            render_report(&report, format)
        }
        Command::Graph { input } => {
            let complex = parse_facet_file(&read(input)?)?;
            let counts = graph_fast_path(&complex)?;
            let graded = match graph_graded_report(&complex) {
                Ok(g) => Some(g),
                Err(Error::Disconnected) => None,
                Err(other) => return Err(other),
            };
            Ok(match format {
                OutputFormat::Json => graph_to_json(&counts, graded.as_ref()),
                OutputFormat::Pretty => graph_to_pretty(&counts, graded.as_ref()),
            })
        }
        Command::Monomial {
            input,
            field,
            r#box,
        } => {
            let ideal = parse_ideal_file(&read(input)?)?;
            let model = FieldModel::parse(field)?;
            let window = parse_degree_box(r#box, ideal.variable_count())?;
            let report = nonreduced_report(&ideal, model, &window)?;
            Ok(match format {
                OutputFormat::Json => nonreduced_to_json(&report)?,
                OutputFormat::Pretty => nonreduced_to_pretty(&report),
            })
        }
    }
}
