//! Command-line front end. Exit codes: 0 pass, 1 verification failure,
//! 2 usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::complex::PureComplex;
use crate::crosspoly::{build_b, build_boundary, build_complement, BidParams};
use crate::enumeration::{sparla_check, sparla_counterexample_report, vector_report};
use crate::error::{Error, Result};
use crate::face::{Face, VertexLabel};
use crate::homology::reduced_homology;
use crate::io::{read_complex, to_json, to_text};
use crate::symmetry::{group_closure, Generator, VertexPermutation};
use crate::verify::{sweep, verify_complex, verify_params, Expect, Suite, SweepKind};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "xpol", version, about = "Build and verify the complexes B(i,d) in the boundary of the cross-polytope")]
pub struct Cli {
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the facet list of a complex.
    Build(BuildArgs),
    /// Run verification suites on B(i,d) or on a facet file.
    Verify(VerifyArgs),
    /// Print f/h/g/h'/flag tables, homology or symmetry data.
    Report {
        #[command(subcommand)]
        what: ReportCommand,
    },
    /// Evaluate an inequality.
    Check {
        #[command(subcommand)]
        what: CheckCommand,
    },
    /// Run checks over every (i,d) with d up to --d-max.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    #[value(name = "B", alias = "b")]
    B,
    Complement,
    Boundary,
    Star,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Skeleton,
    Symmetry,
    Complement,
    Shelling,
    Manifold,
    Homology,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Skeleton => Suite::Skeleton,
            SuiteArg::Symmetry => Suite::Symmetry,
            SuiteArg::Complement => Suite::Complement,
            SuiteArg::Shelling => Suite::Shelling,
            SuiteArg::Manifold => Suite::Manifold,
            SuiteArg::Homology => Suite::Homology,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Debug, Args)]
pub struct ComplexArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub i: Option<isize>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long, value_enum, default_value = "B")]
    pub target: Target,
    /// Apex of the star target (default x_d).
    #[arg(long)]
    pub apex: Option<String>,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[command(flatten)]
    pub complex: ComplexArgs,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub complex: ComplexArgs,
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Vec<SuiteArg>,
    /// Facet file (JSON or one facet per line); its line order is the
    /// shelling order tested by the shelling suite.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum ReportCommand {
    Vectors {
        #[command(flatten)]
        complex: ComplexArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Homology {
        #[command(flatten)]
        complex: ComplexArgs,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Symmetry {
        #[arg(long, allow_hyphen_values = true)]
        i: isize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum CheckCommand {
    /// With --i: the equality case on the boundary of B(i,2r+2). With --chi
    /// and --k: the inequality for the given numbers.
    Sparla {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        i: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        chi: Option<i64>,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepSuites {
    Counting,
    All,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub d_max: usize,
    #[arg(long, value_enum, default_value = "all")]
    pub suites: SweepSuites,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn params(c: &ComplexArgs) -> Result<BidParams> {
    let (Some(i), Some(d)) = (c.i, c.d) else {
        return Err(Error::Parameter("--i and --d are required".into()));
    };
    BidParams::new(i, d)
}

/// The complex named by `--target`, with a display name.
pub fn build_target(c: &ComplexArgs) -> Result<(String, PureComplex)> {
    let p = params(c)?;
    let (i, d) = (p.i, p.d);
    Ok(match c.target {
        Target::B => (format!("B({i},{d})"), build_b(p)),
        Target::Complement => (format!("C({i},{d})"), build_complement(p)),
        Target::Boundary => (format!("∂B({i},{d})"), build_boundary(p)?),
        Target::Star => {
            let apex: VertexLabel = match &c.apex {
                Some(s) => s.parse()?,
                None => VertexLabel::x(d),
            };
            let k = build_b(p).star(Face::from_labels([apex])?)?;
            (format!("star({apex}) in B({i},{d})"), k)
        }
    })
}

struct Output {
    text: String,
    passed: bool,
}

fn json_output<T: Serialize>(value: &T, passed: bool) -> Result<Output> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(Output { text, passed })
}

fn out_path(cli: &Cli) -> Option<&PathBuf> {
    match &cli.command {
        Command::Build(a) => a.out.as_ref(),
        Command::Verify(a) => a.out.as_ref(),
        Command::Report { what } => match what {
            ReportCommand::Vectors { out, .. }
            | ReportCommand::Homology { out, .. }
            | ReportCommand::Symmetry { out, .. } => out.as_ref(),
        },
        Command::Check { what: CheckCommand::Sparla { out, .. } } => out.as_ref(),
        Command::Sweep(a) => a.out.as_ref(),
    }
}

fn dispatch(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Build(a) => {
            let (_, k) = build_target(&a.complex)?;
            let text = match a.format {
                Format::Json => to_json(&k) + "\n",
                Format::Text => to_text(&k),
            };
            Ok(Output { text, passed: true })
        }
        Command::Verify(a) => {
            let suites: Vec<Suite> = a.suite.iter().map(|&s| s.into()).collect();
            let report = match &a.input {
                Some(path) => {
                    let (k, order) = read_complex(&std::fs::read_to_string(path)?, a.complex.d)?;
                    let expect = if a.complex.target == Target::Boundary { Expect::Closed } else { Expect::WithBoundary };
                    verify_complex(&path.display().to_string(), &k, &order, expect, &suites)?
                }
                None => {
                    if a.complex.target != Target::B {
                        return Err(Error::Parameter("--target applies to verify only with --input".into()));
                    }
                    verify_params(params(&a.complex)?, &suites)?
                }
            };
            json_output(&report, report.passed)
        }
        Command::Report { what } => match what {
            ReportCommand::Vectors { complex, format, .. } => {
                let (name, k) = build_target(complex)?;
                let p = params(complex)?;
                let closed_form = match complex.target {
                    Target::B => Some((p, false)),
                    Target::Boundary => Some((p, true)),
                    _ => None,
                };
                let report = vector_report(&name, &k, closed_form)?;
                match format {
                    Format::Json => json_output(&report, true),
                    Format::Text => Ok(Output { text: report.to_text(), passed: true }),
                }
            }
            ReportCommand::Homology { complex, input, .. } => {
                let k = match input {
                    Some(path) => read_complex(&std::fs::read_to_string(path)?, complex.d)?.0,
                    None => build_target(complex)?.1,
                };
                json_output(&reduced_homology(&k)?, true)
            }
            ReportCommand::Symmetry { i, d, .. } => {
                let p = BidParams::new(*i, *d)?;
                let b = build_b(p);
                let family: &[Generator] = if p.i.rem_euclid(2) == 0 {
                    &[Generator::D, Generator::E, Generator::R]
                } else {
                    &[Generator::E, Generator::RPrime]
                };
                let group = group_closure(family, p.d, Some(&b), None)?;
                let images = Generator::ALL
                    .iter()
                    .map(|&g| {
                        let perm = VertexPermutation::generator(g, p.d)?;
                        let table: Vec<[String; 2]> = VertexLabel::all(p.d)
                            .map(|l| [l.to_string(), perm.apply_label(l).to_string()])
                            .collect();
                        let preserves = crate::symmetry::apply(&perm, &b) == b;
                        Ok(json!({ "generator": g.name(), "images": table, "preserves_b": preserves }))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let passed = group.relations_ok && group.vertex_transitive && group.preserves_complex == Some(true);
                json_output(&json!({ "complex": format!("B({i},{d})"), "group": group, "generators": images }), passed)
            }
        },
        Command::Check { what: CheckCommand::Sparla { r, i, chi, k, .. } } => match (i, chi, k) {
            (Some(i), None, None) => {
                let rep = sparla_counterexample_report(*r, *i)?;
                let passed = rep.sparla.equality && rep.sparla.skeleton_present == Some(false);
                json_output(&rep, passed)
            }
            (None, Some(chi), Some(k)) => {
                let rep = sparla_check(*chi, *r, *k)?;
                let passed = rep.holds;
                json_output(&rep, passed)
            }
            _ => Err(Error::Parameter("give either --i, or both --chi and --k".into())),
        },
        Command::Sweep(a) => {
            let kind = match a.suites {
                SweepSuites::Counting => SweepKind::Counting,
                SweepSuites::All => SweepKind::All,
            };
            let report = sweep(a.d_max, kind)?;
            json_output(&report, report.passed)
        }
    }
}

/// Parses `args`, runs the command and writes its output to `stdout` (or
/// `--out`). Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = write!(sink, "{}", e.render());
            return if code == 0 { EXIT_PASS } else { EXIT_USAGE };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads.unwrap_or(0)).build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let result = pool.install(|| dispatch(&cli)).and_then(|out| {
        match out_path(&cli) {
            Some(path) => std::fs::write(path, &out.text)?,
            None => stdout.write_all(out.text.as_bytes())?,
        }
        Ok(out.passed)
    });
    match result {
        Ok(true) => EXIT_PASS,
        Ok(false) => EXIT_FAIL,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}
