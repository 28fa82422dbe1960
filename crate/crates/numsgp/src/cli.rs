//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on a computational failure or a failing
//! check, 2 on bad usage or invalid input. Errors are reported on stderr as
//! one line `error[Code]: message`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use numsgp_core::paths2::{row_minima, word_to_gapset, words_of_codim};
use numsgp_core::{
    closed_form_two_gen, family_gf_3, inversions, thm_tri_gf, Error, GfRational,
    NumericalSemigroup, PathWord, SeriesTruncation, TabularGrid,
};
use serde_json::Value;

use crate::json;
use crate::parallel::census_parallel;
use crate::render;
use crate::verify::{self, Settings};

/// Largest codimension accepted by `paths --codim`.
pub const MAX_LISTED_CODIM: usize = 12;

#[derive(Debug, Parser)]
#[command(
    name = "numsgp",
    version,
    about = "Numerical semigroups and their ideal generating functions"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Worker threads for the census.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    /// Node budget for the census.
    #[arg(long, global = true, env = "NUMSGP_BUDGET")]
    pub budget: Option<u64>,
    /// Show elapsed times in verification reports.
    #[arg(long, global = true)]
    pub timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Latex,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Oracle,
    Closed2,
    Tri,
    Family3,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants of a semigroup.
    Info {
        #[arg(required = true)]
        generators: Vec<u64>,
    },
    /// Number of ideals of each codimension up to K.
    Census {
        #[arg(required = true)]
        generators: Vec<u64>,
        #[arg(short = 'K', long = "max-codim")]
        max_codim: usize,
    },
    /// Truncated generating function, its numerator and its degree.
    Gf {
        #[arg(required = true)]
        generators: Vec<u64>,
        #[arg(short = 'N', long = "order")]
        order: usize,
        #[arg(long, value_enum, default_value_t = Method::Oracle)]
        method: Method,
    },
    /// Cross-check closed forms against the census.
    #[command(group(ArgGroup::new("target").required(true).args(["generators", "family3", "suite"])))]
    Verify {
        generators: Vec<u64>,
        /// Check the family <3, n+2, 2n+1>.
        #[arg(long, value_name = "N")]
        family3: Option<u64>,
        /// Run the full battery.
        #[arg(long)]
        suite: bool,
    },
    /// Lattice paths for <a, b>.
    #[command(group(ArgGroup::new("what").required(true).args(["codim", "word"])))]
    Paths {
        a: u64,
        b: u64,
        /// List every path of this codimension.
        #[arg(long)]
        codim: Option<usize>,
        /// Show a single word over the label grid.
        #[arg(long)]
        word: Option<String>,
    },
    /// Label grid of an eligible triple.
    Grid {
        a: u64,
        b: u64,
        c: u64,
        #[arg(long, default_value_t = 6)]
        columns: usize,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.code(),
            CliError::Usage(_) => "Usage",
            CliError::Io { .. } => "Io",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(
                Error::NotStabilized { .. }
                | Error::BudgetExceeded { .. }
                | Error::InexactDivision
                | Error::CoverViolation(_)
                | Error::Overflow,
            )
            | CliError::Io { .. } => 1,
            _ => 2,
        }
    }

    fn hint(&self) -> &'static str {
        match self {
            CliError::Core(Error::NotStabilized { .. }) => " with -N",
            CliError::Core(Error::BudgetExceeded { .. }) => " with --budget or NUMSGP_BUDGET",
            _ => "",
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Rendered output plus the exit code it should produce.
struct Output {
    body: String,
    code: i32,
}

impl From<String> for Output {
    fn from(body: String) -> Self {
        Output { body, code: 0 }
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let text = e.to_string();
            let message: Vec<&str> = text
                .lines()
                .take_while(|l| !l.starts_with("Usage:"))
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .collect();
            let message = message.join(" ");
            let _ = writeln!(
                stderr,
                "error[Usage]: {}",
                message.trim_start_matches("error: ")
            );
            return 2;
        }
    };
    let result = execute(&cli).and_then(|out| {
        match &cli.out {
            Some(path) => std::fs::write(path, &out.body).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?,
            None => {
                let _ = stdout.write_all(out.body.as_bytes());
            }
        }
        Ok(out.code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error[{}]: {e}{}", e.code(), e.hint());
            e.exit_code()
        }
    }
}

fn settings(cli: &Cli) -> Settings {
    Settings {
        threads: cli.threads.max(1),
        budget: cli
            .budget
            .unwrap_or(numsgp_core::census::DEFAULT_NODE_BUDGET),
    }
}

fn unsupported(format: Format, command: &str) -> CliError {
    let name = format.to_possible_value().expect("no skipped variants");
    CliError::Usage(format!(
        "format {} is not available for {command}",
        name.get_name()
    ))
}

fn execute(cli: &Cli) -> CliResult<Output> {
    let cfg = settings(cli);
    let f = cli.format;
    match &cli.command {
        Command::Info { generators } => {
            info(&NumericalSemigroup::new(generators)?, f).map(Into::into)
        }
        Command::Census {
            generators,
            max_codim,
        } => {
            let s = NumericalSemigroup::new(generators)?;
            census(&s, *max_codim, cfg, f).map(Into::into)
        }
        Command::Gf {
            generators,
            order,
            method,
        } => {
            let s = NumericalSemigroup::new(generators)?;
            gf(&s, *order, *method, cfg, f).map(Into::into)
        }
        Command::Verify {
            generators,
            family3,
            suite,
        } => verify_cmd(generators, *family3, *suite, cfg, f, cli.timings),
        Command::Paths { a, b, codim, word } => {
            NumericalSemigroup::new(&[*a, *b])?;
            match (codim, word) {
                (Some(k), _) => list_paths(*a, *b, *k, f),
                (None, Some(w)) => show_word(*a, *b, w, f),
                (None, None) => unreachable!("clap requires --codim or --word"),
            }
            .map(Into::into)
        }
        Command::Grid { a, b, c, columns } => {
            let rows = TabularGrid::new(*a, *b, *c)?.table(*columns);
            Ok(match f {
                Format::Text => render::table_text(&rows),
                Format::Json => json::to_string(&render::table_json(&rows)) + "\n",
                Format::Csv => render::table_csv(&rows),
                Format::Latex => render::table_latex(&rows),
                Format::Svg => render::table_svg(&rows),
            }
            .into())
        }
    }
}

fn spaced(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

fn commas(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

fn braces(xs: &[u64]) -> String {
    format!("{{{}}}", commas(xs))
}

fn big_spaced(xs: &[BigInt]) -> String {
    xs.iter()
        .map(BigInt::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn info(s: &NumericalSemigroup, f: Format) -> CliResult<String> {
    match f {
        Format::Text => Ok(format!(
            "generators: {}\nembedding dimension: {}\nmultiplicity: {}\napery set: {}\n\
             frobenius: {}\ngenus: {}\nconductor: {}\ngaps: {}\nsmall elements: {}\n",
            spaced(s.generators()),
            s.embedding_dimension(),
            s.multiplicity(),
            spaced(s.apery()),
            s.frobenius(),
            s.genus(),
            s.conductor(),
            braces(&s.gaps()),
            braces(&s.small_elements()),
        )),
        Format::Json => Ok(json::to_string(&json::object([
            ("apery", json::u64s(s.apery())),
            ("conductor", Value::from(s.conductor())),
            ("embedding_dimension", Value::from(s.embedding_dimension())),
            ("frobenius", Value::from(s.frobenius())),
            ("gaps", json::u64s(&s.gaps())),
            ("generators", json::u64s(s.generators())),
            ("genus", Value::from(s.genus())),
            ("multiplicity", Value::from(s.multiplicity())),
            ("small_elements", json::u64s(&s.small_elements())),
        ])) + "\n"),
        other => Err(unsupported(other, "info")),
    }
}

fn census(s: &NumericalSemigroup, k: usize, cfg: Settings, f: Format) -> CliResult<String> {
    let t = census_parallel(s, k, cfg.threads, cfg.budget)?;
    match f {
        Format::Text => {
            let mut out = format!("generators: {}\nk m(S,k)\n", spaced(s.generators()));
            for (i, c) in t.counts.iter().enumerate() {
                out.push_str(&format!("{i} {c}\n"));
            }
            match t.onset {
                Some(o) => out.push_str(&format!("stable value {} from k = {o}\n", t.stable_value)),
                None => out.push_str(&format!(
                    "tail not yet constant over {} terms\n",
                    s.multiplicity()
                )),
            }
            Ok(out)
        }
        Format::Json => Ok(json::to_string(&json::object([
            ("counts", json::ints(&t.counts)),
            ("generators", json::u64s(s.generators())),
            ("max_codim", Value::from(k)),
            ("onset", t.onset.map_or(Value::Null, Value::from)),
            ("stable_value", json::int(&t.stable_value)),
        ])) + "\n"),
        Format::Csv => Ok(coeff_csv(&t.counts)),
        other => Err(unsupported(other, "census")),
    }
}

fn coeff_csv(coeffs: &[BigInt]) -> String {
    let mut out = String::from("k,m\n");
    for (i, c) in coeffs.iter().enumerate() {
        out.push_str(&format!("{i},{c}\n"));
    }
    out
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Oracle => "oracle",
        Method::Closed2 => "closed2",
        Method::Tri => "tri",
        Method::Family3 => "family3",
    }
}

/// Series of `s` through `q^order` by the chosen method.
pub fn gf_series(
    s: &NumericalSemigroup,
    order: usize,
    method: Method,
    cfg: Settings,
) -> CliResult<SeriesTruncation> {
    let g = s.generators();
    let needs = |what: &str| {
        CliError::Usage(format!(
            "method {} needs {what}, got <{}>",
            method_name(method),
            spaced(g)
        ))
    };
    let rational: GfRational = match method {
        Method::Oracle => return Ok(census_parallel(s, order, cfg.threads, cfg.budget)?.series()),
        Method::Closed2 => match g {
            &[a, b] => closed_form_two_gen(a, b)?,
            _ => return Err(needs("exactly two minimal generators")),
        },
        Method::Tri => match g {
            &[a, b, c] => thm_tri_gf(a, b, c)?,
            _ => return Err(needs("exactly three minimal generators")),
        },
        Method::Family3 => match g {
            &[3, b, c] if b >= 4 && c == 2 * b - 3 => family_gf_3(b - 2)?.constructive,
            _ => return Err(needs("generators of the form 3, n+2, 2n+1")),
        },
    };
    Ok(rational.expand(order))
}

fn gf(
    s: &NumericalSemigroup,
    order: usize,
    method: Method,
    cfg: Settings,
    f: Format,
) -> CliResult<String> {
    let series = gf_series(s, order, method, cfg)?;
    let num = series.extract_numerator(s.max_generator() as usize)?;
    match f {
        Format::Text => Ok(format!(
            "generators: {}\nmethod: {}\ncoeffs: {}\nnumerator: {}\ndegree: {}\n",
            spaced(s.generators()),
            method_name(method),
            big_spaced(series.coeffs()),
            num.f,
            num.series_degree
                .map_or("none".to_string(), |d| d.to_string()),
        )),
        Format::Json => Ok(json::to_string(&json::object([
            ("coeffs", json::ints(series.coeffs())),
            ("degree", num.series_degree.map_or(Value::Null, Value::from)),
            ("generators", json::u64s(s.generators())),
            ("method", Value::from(method_name(method))),
            ("numerator", json::ints(num.f.coeffs())),
        ])) + "\n"),
        Format::Csv => Ok(coeff_csv(series.coeffs())),
        other => Err(unsupported(other, "gf")),
    }
}

fn verify_cmd(
    generators: &[u64],
    family3: Option<u64>,
    suite: bool,
    cfg: Settings,
    f: Format,
    timings: bool,
) -> CliResult<Output> {
    let chosen =
        usize::from(!generators.is_empty()) + usize::from(family3.is_some()) + usize::from(suite);
    if chosen != 1 {
        return Err(CliError::Usage(
            "give exactly one of GENERATORS, --family3 N or --suite".into(),
        ));
    }
    let report = if suite {
        verify::suite(cfg)
    } else if let Some(n) = family3 {
        verify::verify_family3(n, cfg)?
    } else {
        verify::verify_semigroup(&NumericalSemigroup::new(generators)?, cfg)
    };
    let body = match f {
        Format::Text => report.to_text(timings),
        Format::Json => json::to_string(&report.to_json(timings)) + "\n",
        other => return Err(unsupported(other, "verify")),
    };
    Ok(Output {
        body,
        code: if report.passed() { 0 } else { 1 },
    })
}

fn list_paths(a: u64, b: u64, k: usize, f: Format) -> CliResult<String> {
    if k > MAX_LISTED_CODIM {
        return Err(CliError::Usage(format!(
            "--codim {k} is above the listing limit {MAX_LISTED_CODIM}"
        )));
    }
    let mut rows = Vec::new();
    for w in words_of_codim(a, b, k)? {
        let gaps = word_to_gapset(&w, a, b)?;
        let minima = row_minima(&w, a, b)?;
        rows.push((w, gaps.elements().to_vec(), minima));
    }
    match f {
        Format::Text => Ok(rows
            .iter()
            .map(|(w, g, m)| format!("{w} gaps {} row minima {}\n", braces(g), commas(m)))
            .collect()),
        Format::Json => Ok(json::to_string(&Value::Array(
            rows.iter()
                .map(|(w, g, m)| {
                    json::object([
                        ("gaps", json::u64s(g)),
                        ("row_minima", json::u64s(m)),
                        ("word", Value::from(w.to_string())),
                    ])
                })
                .collect(),
        )) + "\n"),
        Format::Csv => {
            let mut out = String::from("word,gaps,row_minima\n");
            for (w, g, m) in &rows {
                out.push_str(&format!("{w},{},{}\n", spaced(g), spaced(m)));
            }
            Ok(out)
        }
        other => Err(unsupported(other, "paths --codim")),
    }
}

fn show_word(a: u64, b: u64, word: &str, f: Format) -> CliResult<String> {
    let w: PathWord = word
        .parse()
        .map_err(|e| CliError::Core(Error::BadArguments(format!("{e}"))))?;
    let gaps = word_to_gapset(&w, a, b)?;
    let minima = row_minima(&w, a, b)?;
    match f {
        Format::Text => Ok(format!(
            "word: {w}\ngaps: {}\nrow minima: {}\ncodim: {}\n{}",
            braces(gaps.elements()),
            commas(&minima),
            inversions(&w),
            render::path_text(&w, a, b)
        )),
        Format::Json => Ok(json::to_string(&json::object([
            ("codim", Value::from(inversions(&w))),
            ("gaps", json::u64s(gaps.elements())),
            ("row_minima", json::u64s(&minima)),
            ("word", Value::from(w.to_string())),
        ])) + "\n"),
        Format::Svg => Ok(render::path_svg(&w, a, b)),
        other => Err(unsupported(other, "paths --word")),
    }
}
