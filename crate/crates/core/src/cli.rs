//! Command-line dispatch: evaluation, classification, segment and pair
//! representations, essential points, enumeration, counting and property
//! verification.
//!
//! Exit codes: 0 success, 1 property-sweep counterexamples, 2 usage or input
//! format errors, 3 precondition violations (for example `segment` on a
//! non-threshold document). All diagnostics go to the error stream.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::format::{self, PairDocument};
use crate::oracle::{self, PropertyReport};
use crate::{threshold, two_threshold, Error, GridDim, GridFunction, OrientedSegment, Point};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

#[derive(Parser)]
#[command(
    name = "gridthresh",
    version,
    about = "Exact threshold and 2-threshold functions on integer grids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    #[value(name = "threshold")]
    Threshold,
    #[value(name = "2threshold")]
    TwoThreshold,
}

#[derive(Subcommand)]
enum Command {
    /// Print the function of one oriented prime segment, or the conjunction
    /// of two, as a grid document.
    Eval {
        #[arg(long, num_args = 2, value_names = ["M", "N"], allow_negative_numbers = true)]
        grid: Vec<i64>,
        /// Oriented segment `ax ay bx by`; repeat for a conjunction.
        #[arg(
            long = "seg",
            num_args = 4,
            value_names = ["AX", "AY", "BX", "BY"],
            action = clap::ArgAction::Append,
            allow_negative_numbers = true,
            required = true
        )]
        seg: Vec<i64>,
    },
    /// Classify the function in a grid document.
    Classify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Print the oriented prime segment of a non-constant threshold function.
    Segment {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Print defining proper pairs of a proper 2-threshold function.
    Pairs {
        #[arg(long = "in")]
        input: PathBuf,
        /// List every defining proper pair instead of the first one.
        #[arg(long)]
        all: bool,
    },
    /// Print the constructively chosen defining proper pair.
    Canonical {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Print all essential points with respect to the chosen class.
    Essential {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        class: ClassArg,
    },
    /// Enumerate all functions of the class on a grid.
    Enumerate {
        #[arg(long, num_args = 2, value_names = ["M", "N"], allow_negative_numbers = true)]
        grid: Vec<i64>,
        #[arg(long)]
        class: ClassArg,
        #[arg(long = "count-only")]
        count_only: bool,
    },
    /// Count the proper pairs defining an interior singleton function.
    CountSingleton {
        #[arg(long, num_args = 2, value_names = ["M", "N"], allow_negative_numbers = true)]
        grid: Vec<i64>,
        #[arg(long, num_args = 2, value_names = ["X", "Y"], allow_negative_numbers = true)]
        point: Vec<i64>,
    },
    /// Run one exhaustive property sweep and report counterexamples.
    Verify {
        #[arg(long)]
        property: String,
        #[arg(long, num_args = 2, value_names = ["M", "N"], allow_negative_numbers = true)]
        grid: Vec<i64>,
    },
}

type CommandError = (i32, String);

fn usage(msg: impl Into<String>) -> CommandError {
    (EXIT_USAGE, msg.into())
}

fn lib_err(e: Error) -> CommandError {
    let code = match e {
        Error::UnknownProperty(_) | Error::BadDim { .. } => EXIT_USAGE,
        _ => EXIT_PRECONDITION,
    };
    (code, e.to_string())
}

fn parse_dim(grid: &[i64]) -> Result<GridDim, CommandError> {
    if grid.len() != 2 {
        return Err(usage("--grid takes exactly two integers"));
    }
    GridDim::new(grid[0], grid[1]).map_err(lib_err)
}

fn parse_point(point: &[i64]) -> Result<Point, CommandError> {
    if point.len() != 2 {
        return Err(usage("--point takes exactly two integers"));
    }
    Ok(Point::new(point[0], point[1]))
}

fn parse_segment(vals: &[i64]) -> Result<OrientedSegment, CommandError> {
    OrientedSegment::new(Point::new(vals[0], vals[1]), Point::new(vals[2], vals[3]))
        .map_err(lib_err)
}

fn load_grid(path: &Path) -> Result<GridFunction, CommandError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    format::parse_grid(&text).map_err(|e| usage(e.to_string()))
}

fn render_report(report: &PropertyReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("property: {}\n", report.property_id));
    out.push_str(&format!("grid: {} {}\n", report.dim.m(), report.dim.n()));
    out.push_str(&format!("cases checked: {}\n", report.cases_checked));
    out.push_str(&format!("failures: {}\n", report.failures.len()));
    for failure in &report.failures {
        out.push_str(&format!("  - {failure}\n"));
    }
    out
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, CommandError> {
    let emit = |out: &mut dyn Write, text: &str| {
        out.write_all(text.as_bytes())
            .map_err(|e| (EXIT_USAGE, format!("cannot write output: {e}")))
    };
    match command {
        Command::Eval { grid, seg } => {
            let dim = parse_dim(&grid)?;
            let f = match seg.len() {
                4 => {
                    let s = parse_segment(&seg)?;
                    threshold::function_from_segment(&s, dim).map_err(lib_err)?
                }
                8 => {
                    let s1 = parse_segment(&seg[..4])?;
                    let s2 = parse_segment(&seg[4..])?;
                    two_threshold::function_from_pair(&s1, &s2, dim).map_err(lib_err)?
                }
                _ => return Err(usage("--seg must be given once or twice")),
            };
            emit(out, &format::render_grid(&f))?;
            Ok(EXIT_OK)
        }
        Command::Classify { input } => {
            let f = load_grid(&input)?;
            let class = two_threshold::classify_function(&f).map_err(lib_err)?;
            emit(out, &format!("{class}\n"))?;
            Ok(EXIT_OK)
        }
        Command::Segment { input } => {
            let f = load_grid(&input)?;
            let s = threshold::segment_from_function(&f).map_err(lib_err)?;
            emit(out, &format!("A={} B={}\n", s.a(), s.b()))?;
            Ok(EXIT_OK)
        }
        Command::Pairs { input, all } => {
            let f = load_grid(&input)?;
            let mut pairs = two_threshold::find_all_proper_pairs(&f).map_err(lib_err)?;
            if !all {
                pairs.truncate(1);
            }
            emit(out, &PairDocument::new(f.dim(), &pairs).to_json())?;
            Ok(EXIT_OK)
        }
        Command::Canonical { input } => {
            let f = load_grid(&input)?;
            let pair = two_threshold::construct_proper_pair(&f).map_err(lib_err)?;
            emit(out, &PairDocument::new(f.dim(), &[pair]).to_json())?;
            Ok(EXIT_OK)
        }
        Command::Essential { input, class } => {
            let f = load_grid(&input)?;
            let points = match class {
                ClassArg::Threshold => {
                    threshold::essential_points_threshold(&f).map_err(lib_err)?
                }
                ClassArg::TwoThreshold => {
                    two_threshold::essential_points_2threshold(&f).map_err(lib_err)?
                }
            };
            let mut text = String::new();
            for p in points {
                text.push_str(&format!("{p}\n"));
            }
            emit(out, &text)?;
            Ok(EXIT_OK)
        }
        Command::Enumerate {
            grid,
            class,
            count_only,
        } => {
            let dim = parse_dim(&grid)?;
            let text = match class {
                ClassArg::Threshold => {
                    let entries = threshold::enumerate_threshold(dim).map_err(lib_err)?;
                    if count_only {
                        format!("{}\n", entries.len())
                    } else {
                        entries
                            .iter()
                            .map(|(s, _)| format!("A={} B={}\n", s.a(), s.b()))
                            .collect()
                    }
                }
                ClassArg::TwoThreshold => {
                    let functions = two_threshold::enumerate_two_threshold(dim).map_err(lib_err)?;
                    if count_only {
                        format!("{}\n", functions.len())
                    } else {
                        functions.iter().map(format::render_grid).collect()
                    }
                }
            };
            emit(out, &text)?;
            Ok(EXIT_OK)
        }
        Command::CountSingleton { grid, point } => {
            let dim = parse_dim(&grid)?;
            let a = parse_point(&point)?;
            let count = two_threshold::count_singleton_proper_pairs(dim, a).map_err(lib_err)?;
            emit(out, &format!("{count}\n"))?;
            Ok(EXIT_OK)
        }
        Command::Verify { property, grid } => {
            let dim = parse_dim(&grid)?;
            let report = oracle::check_property(&property, dim).map_err(|e| match e {
                Error::UnknownProperty(_) => usage(format!(
                    "{e}; known properties: {}",
                    oracle::property_ids().join(", ")
                )),
                other => lib_err(other),
            })?;
            emit(out, &render_report(&report))?;
            Ok(if report.passed() {
                EXIT_OK
            } else {
                EXIT_PROPERTY_FAILED
            })
        }
    }
}

/// Parses `args` and runs the command, writing to the given streams;
/// returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err((code, message)) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

/// [`run`] on the process arguments and standard streams.
pub fn run_from_env() -> i32 {
    let mut out = std::io::stdout();
    let mut err = std::io::stderr();
    run(std::env::args_os(), &mut out, &mut err)
}
