mod commands;
mod output;

use std::fs;
use std::process::ExitCode;

use braidcalc::exactla::parse_rational;
use braidcalc::{Error, Field, FieldSpec};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "braidcalc", version, about = "Exact braided Hopf algebra computations")]
struct Cli {
    /// Field for files that do not name one: `Q` or `cyclotomic:N`
    #[arg(long, global = true, conflicts_with = "minpoly")]
    field: Option<String>,
    /// Field Q[x]/(p) for files that do not name one; coefficients of p from
    /// the constant term up, comma separated
    #[arg(long, global = true, allow_hyphen_values = true)]
    minpoly: Option<String>,
    /// Truncation degree for graded constructions
    #[arg(long, global = true)]
    max_degree: Option<usize>,
    /// Write the constructed definition file here (the report for verbs
    /// that construct nothing)
    #[arg(long, global = true)]
    out: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
pub enum Verb {
    /// Check the bialgebra and antipode axioms of an algebra file or `builtin:NAME`
    CheckHopf { algebra: String },
    /// Check the crossed-module compatibility of a module file
    CheckYd { module: String },
    /// Check a Hopf bimodule file and report its invariants
    CheckBimodule { bimodule: String },
    /// Crossed-module braiding between one or two module files, with its inverse
    Braid { first: String, second: Option<String> },
    /// Smash bialgebra of an admissible object file
    Smash { object: String },
    /// Quasitriangular bosonization of an inner quasitriangular object
    Bosonize { qt: String, inner: String },
    /// Split a bialgebra projection into its base and invariant object
    Decompose { projection: String },
    /// Exterior algebra dimensions and structure of a braided object
    Exterior {
        #[arg(long)]
        braiding: String,
    },
    /// Exterior calculus generated by a first-order calculus
    Calculus { calculus: String },
}

impl Verb {
    fn name(&self) -> &'static str {
        match self {
            Verb::CheckHopf { .. } => "check-hopf",
            Verb::CheckYd { .. } => "check-yd",
            Verb::CheckBimodule { .. } => "check-bimodule",
            Verb::Braid { .. } => "braid",
            Verb::Smash { .. } => "smash",
            Verb::Bosonize { .. } => "bosonize",
            Verb::Decompose { .. } => "decompose",
            Verb::Exterior { .. } => "exterior",
            Verb::Calculus { .. } => "calculus",
        }
    }
}

fn default_field(cli: &Cli) -> Result<Field, Error> {
    match (&cli.field, &cli.minpoly) {
        (_, Some(p)) => {
            let coeffs = p.split(',').map(parse_rational).collect::<Result<Vec<_>, _>>()?;
            Field::extension(coeffs, false).map_err(|e| Error::Parse(e.to_string()))
        }
        (Some(name), None) => FieldSpec::Named(name.clone()).build(),
        (None, None) => Ok(Field::rationals()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let field = match default_field(&cli) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let out = match commands::run(&cli.verb, field, cli.max_degree) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let rendered = match cli.format {
        Format::Json => out.to_json(),
        Format::Text => out.to_text(),
    };
    print!("{rendered}");
    if let Some(path) = &cli.out {
        let body = out.artifact.as_deref().unwrap_or(&rendered);
        if let Err(e) = fs::write(path, body) {
            eprintln!("error: cannot write {path}: {e}");
            return ExitCode::from(2);
        }
    }
    match out.status {
        output::Status::Pass => ExitCode::SUCCESS,
        output::Status::Fail => ExitCode::from(1),
    }
}
