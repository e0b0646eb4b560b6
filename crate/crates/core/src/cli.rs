//! The `braidquot` command line.

use std::collections::BTreeMap;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::homs::{Suite, VerificationReport};
use crate::oracle::{abelian_invariants, Class2Quotient, Invariants};
use crate::par::Exec;
use crate::presentations::{
    presentation_base, presentation_mixed, presentation_punctured, presentation_quotient,
    Presentation, QuotientKind,
};
use crate::quotients::parse_element;
use crate::words::{parse_word, GroupParams};

#[derive(Parser, Debug)]
#[command(
    name = "braidquot",
    version,
    about = "Exact arithmetic in quotients of surface mixed braid groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Strands in the first block.
    #[arg(long, global = true, default_value_t = 3)]
    pub k: usize,
    /// Strands in the second block.
    #[arg(long, global = true, default_value_t = 3)]
    pub n: usize,
    /// Genus of the surface.
    #[arg(long, global = true, default_value_t = 1)]
    pub g: usize,
    #[arg(long, global = true, value_enum)]
    pub quotient: Option<QuotientArg>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, global = true)]
    pub json: bool,
    /// Run verification checks on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the normal form of a word.
    Nf { word: String },
    /// Decide whether two words are equal in the quotient.
    Eq { lhs: String, rhs: String },
    /// Print a presentation.
    Present {
        #[arg(long, value_enum, conflicts_with = "quotient")]
        pres: Option<PresArg>,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
    },
    /// Query the class-2 oracle about a presentation.
    Oracle {
        #[arg(long, value_enum, default_value = "mixed")]
        pres: PresArg,
        #[arg(
            long,
            value_enum,
            conflicts_with = "trivial",
            required_unless_present = "trivial"
        )]
        invariants: Option<InvariantsArg>,
        #[arg(long)]
        trivial: Option<String>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientArg {
    #[value(name = "gamma3-mixed")]
    Gamma3Mixed,
    #[value(name = "gamma3-punctured")]
    Gamma3Punctured,
    Gk,
    Hsigma,
    #[value(name = "abel-mixed")]
    AbelMixed,
    #[value(name = "abel-punctured")]
    AbelPunctured,
}

impl QuotientArg {
    fn kind(self) -> QuotientKind {
        match self {
            QuotientArg::Gamma3Mixed => QuotientKind::MixedGamma3,
            QuotientArg::Gamma3Punctured => QuotientKind::PuncturedGamma3,
            QuotientArg::Gk => QuotientKind::GkSurface,
            QuotientArg::Hsigma => QuotientKind::HSigma,
            QuotientArg::AbelMixed => QuotientKind::MixedAbel,
            QuotientArg::AbelPunctured => QuotientKind::PuncturedAbel,
        }
    }

    fn name(self) -> String {
        self.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string()
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum PresArg {
    Mixed,
    Punctured,
    Base,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteArg {
    Relators,
    Diagram,
    Rigidity,
    Nonextension,
    OracleAgreement,
    GroupLaws,
    WittHall,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvariantsArg {
    Abelian,
    #[value(name = "gamma2mod3")]
    Gamma2Mod3,
}

/// Exit status: success, a negative answer, or an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    Negative = 1,
    Error = 2,
}

fn invariants_json(inv: &Invariants) -> serde_json::Value {
    json!({
        "free_rank": inv.free_rank,
        "torsion": inv.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        "text": inv.to_string(),
    })
}

fn pres_for(arg: PresArg, params: &GroupParams) -> Result<Presentation> {
    match arg {
        PresArg::Mixed => presentation_mixed(params),
        PresArg::Punctured => Ok(presentation_punctured(params)),
        PresArg::Base => presentation_base(params),
    }
}

/// `check group → (passed, total)`, grouping ids by their first two
/// components, ignoring a trailing sample index.
fn summarize(report: &VerificationReport) -> BTreeMap<String, (usize, usize)> {
    let mut groups = BTreeMap::new();
    for c in &report.checks {
        let mut parts: Vec<&str> = c.id.split('.').collect();
        if parts.len() > 1 && parts[parts.len() - 1].chars().all(|ch| ch.is_ascii_digit()) {
            parts.pop();
        }
        parts.truncate(2);
        let group = parts.join(".");
        let entry = groups.entry(group).or_insert((0, 0));
        entry.0 += c.passed as usize;
        entry.1 += 1;
    }
    groups
}

fn run_cli(cli: &Cli, out: &mut dyn Write) -> Result<Status> {
    let params = GroupParams::new(cli.k, cli.n, cli.g)?;
    let io = |e: std::io::Error| Error::Invalid(format!("write failed: {e}"));
    let quotient = cli.quotient.unwrap_or(QuotientArg::Gamma3Mixed);
    match &cli.command {
        Command::Nf { word } => {
            let x = parse_element(word, &params, quotient.kind())?;
            if cli.json {
                let v = json!({
                    "schema": 1,
                    "params": params,
                    "quotient": quotient.name(),
                    "word": word,
                    "normal_form": x.to_string(),
                });
                writeln!(out, "{v}").map_err(io)?;
            } else {
                writeln!(out, "{x}").map_err(io)?;
            }
            Ok(Status::Ok)
        }
        Command::Eq { lhs, rhs } => {
            let x = parse_element(lhs, &params, quotient.kind())?;
            let y = parse_element(rhs, &params, quotient.kind())?;
            let equal = x == y;
            if cli.json {
                let v = json!({
                    "schema": 1,
                    "params": params,
                    "quotient": quotient.name(),
                    "equal": equal,
                    "lhs": x.to_string(),
                    "rhs": y.to_string(),
                });
                writeln!(out, "{v}").map_err(io)?;
            } else {
                writeln!(out, "{}", if equal { "equal" } else { "unequal" }).map_err(io)?;
            }
            Ok(if equal { Status::Ok } else { Status::Negative })
        }
        Command::Present { pres } => {
            let p = match (pres, cli.quotient) {
                (_, Some(q)) => presentation_quotient(&params, q.kind())?,
                (Some(arg), None) => pres_for(*arg, &params)?,
                (None, None) => presentation_mixed(&params)?,
            };
            if cli.json {
                writeln!(out, "{}", p.to_json()).map_err(io)?;
            } else {
                write!(out, "{}", p.to_text()).map_err(io)?;
            }
            Ok(Status::Ok)
        }
        Command::Verify { suite } => {
            let suites: Vec<Suite> = match suite {
                SuiteArg::All => Suite::ALL.to_vec(),
                SuiteArg::Relators => vec![Suite::Relators],
                SuiteArg::Diagram => vec![Suite::Diagram],
                SuiteArg::Rigidity => vec![Suite::Rigidity],
                SuiteArg::Nonextension => vec![Suite::Nonextension],
                SuiteArg::OracleAgreement => vec![Suite::OracleAgreement],
                SuiteArg::GroupLaws => vec![Suite::GroupLaws],
                SuiteArg::WittHall => vec![Suite::WittHall],
            };
            let exec = if cli.sequential {
                Exec::Sequential
            } else {
                Exec::Parallel
            };
            let reports = suites
                .iter()
                .map(|s| s.run(&params, cli.seed, cli.samples, exec))
                .collect::<Result<Vec<_>>>()?;
            let passed = reports.iter().all(VerificationReport::passed);
            if cli.json {
                let v = json!({
                    "schema": 1,
                    "params": params,
                    "seed": cli.seed,
                    "samples": cli.samples,
                    "passed": passed,
                    "reports": reports,
                });
                writeln!(out, "{v}").map_err(io)?;
            } else {
                write_table(out, &reports).map_err(io)?;
            }
            Ok(if passed { Status::Ok } else { Status::Negative })
        }
        Command::Oracle {
            pres,
            invariants,
            trivial,
        } => {
            let p = pres_for(*pres, &params)?;
            if let Some(text) = trivial {
                let w = parse_word(text, &params)?;
                let t = Class2Quotient::new(&p)?.is_trivial(&w)?;
                if cli.json {
                    let v = json!({"schema": 1, "params": params, "word": text, "trivial": t});
                    writeln!(out, "{v}").map_err(io)?;
                } else {
                    writeln!(out, "{}", if t { "trivial" } else { "nontrivial" }).map_err(io)?;
                }
                return Ok(if t { Status::Ok } else { Status::Negative });
            }
            let which = invariants.expect("clap requires --invariants without --trivial");
            let inv = match which {
                InvariantsArg::Abelian => abelian_invariants(&p)?,
                InvariantsArg::Gamma2Mod3 => Class2Quotient::new(&p)?.gamma2_mod_gamma3(),
            };
            if cli.json {
                let name = which
                    .to_possible_value()
                    .expect("named")
                    .get_name()
                    .to_string();
                let v = json!({
                    "schema": 1,
                    "params": params,
                    "invariants": name,
                    "group": invariants_json(&inv),
                });
                writeln!(out, "{v}").map_err(io)?;
            } else {
                writeln!(out, "{inv}").map_err(io)?;
            }
            Ok(Status::Ok)
        }
    }
}

fn write_table(out: &mut dyn Write, reports: &[VerificationReport]) -> std::io::Result<()> {
    let rows: Vec<(String, String, (usize, usize))> = reports
        .iter()
        .flat_map(|r| {
            summarize(r)
                .into_iter()
                .map(move |(group, counts)| (r.suite.clone(), group, counts))
        })
        .collect();
    let w_suite = rows.iter().map(|r| r.0.len()).max().unwrap_or(5).max(5);
    let w_group = rows.iter().map(|r| r.1.len()).max().unwrap_or(5).max(5);
    writeln!(
        out,
        "{:<w_suite$}  {:<w_group$}  {:>7}  {:>7}",
        "suite", "check", "passed", "total"
    )?;
    for (suite, group, (passed, total)) in &rows {
        let mark = if passed == total { "" } else { "  FAIL" };
        writeln!(
            out,
            "{suite:<w_suite$}  {group:<w_group$}  {passed:>7}  {total:>7}{mark}"
        )?;
    }
    let failures: Vec<_> = reports.iter().flat_map(|r| r.failures()).collect();
    for f in &failures {
        writeln!(out, "FAIL {}: {}", f.id, f.witness.as_deref().unwrap_or(""))?;
    }
    let total: usize = reports.iter().map(|r| r.checks.len()).sum();
    if failures.is_empty() {
        writeln!(out, "all {total} checks passed")
    } else {
        writeln!(out, "{} of {total} checks failed", failures.len())
    }
}

/// Parses `args` (including the program name) and runs the command, writing
/// results to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> Status
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                return Status::Error;
            }
            let _ = write!(out, "{rendered}");
            return Status::Ok;
        }
    };
    match run_cli(&cli, out) {
        Ok(status) => status,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            Status::Error
        }
    }
}
