//! Command-line surface. `run` does all the work and returns the exit code,
//! so the binary is a thin wrapper and tests can drive it in-process.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;
use wdl_core::congruence::{enumerate_congruences, structure_flags, CongruenceError};
use wdl_core::dicomplement::{axiom_report, enumerate, tables_from_spec, ComplementSide};
use wdl_core::filters::{enumerate_filters, FilterError};
use wdl_core::sfilters::{enumerate_s_filters, f_from_skeleton_filter, skeleton_filters};
use wdl_core::spectra::{classify_all, Universe};
use wdl_core::{BoundedLattice, Caps, DicomplementError, Dicomplementation, LatticeError, LatticeSpec};

use crate::builtin::{builtin, UnknownBuiltin};
use crate::catalog::{run_suite, verify_all, CatalogError, Suite};
use crate::dot::export_dot;
use crate::format::{parse, ParseError};
use crate::report::*;

pub const EXIT_OK: i32 = 0;
/// A law whose status must be `pass` came back `fail`.
pub const EXIT_LAW_FAILED: i32 = 1;
/// Unreadable, malformed or invalid input.
pub const EXIT_INPUT: i32 = 2;
/// A size cap or a hypothesis stopped the computation.
pub const EXIT_REFUSED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "wdl", version, about = "Check finite weakly dicomplemented lattices against their theory")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the instance and report the axioms.
    Validate(Input),
    /// Identities, skeleton ortholattices and dense/codense nearlattices.
    Laws(Input),
    /// The filter lattice and its dual weak complementation.
    Filters(Input),
    /// S-filters and their correspondence with filters of the dual skeleton.
    Sfilters(Input),
    /// Prime, primary and maximal filters.
    Spectra(Input),
    /// The congruence lattice and structure flags.
    Congruences(Input),
    /// Every suite; exits nonzero iff some law fails.
    VerifyAll(Input),
    /// Hasse diagram in DOT.
    ExportDot(Input),
    /// All tables on the bare lattice satisfying the axioms.
    Enumerate {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = SideArg::Both)]
        side: SideArg,
    },
}

#[derive(Debug, Args)]
pub struct Input {
    /// Lattice file in the text format.
    #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
    pub file: Option<PathBuf>,
    /// L6, L7, B2, B4, B8, L6-trivial or chain-<n>-trivial.
    #[arg(long)]
    pub builtin: Option<String>,
    /// Machine-readable output.
    #[arg(long)]
    pub json: bool,
    /// Sets every size cap (lattice, enumeration, filters, congruences) to N.
    #[arg(long, value_name = "N")]
    pub max_size: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Delta,
    Nabla,
    Both,
}

impl SideArg {
    fn side(self) -> ComplementSide {
        match self {
            SideArg::Delta => ComplementSide::Delta,
            SideArg::Nabla => ComplementSide::Nabla,
            SideArg::Both => ComplementSide::Both,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Builtin(#[from] UnknownBuiltin),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Dicomplement(#[from] DicomplementError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

impl From<FilterError> for CliError {
    fn from(e: FilterError) -> Self {
        CliError::Catalog(e.into())
    }
}

impl From<CongruenceError> for CliError {
    fn from(e: CongruenceError) -> Self {
        CliError::Catalog(e.into())
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Lattice(LatticeError::SizeCapExceeded { .. })
            | CliError::Dicomplement(DicomplementError::SizeCapExceeded { .. })
            | CliError::Dicomplement(DicomplementError::Lattice(LatticeError::SizeCapExceeded { .. })) => EXIT_REFUSED,
            CliError::Catalog(e) if e.is_refusal() => EXIT_REFUSED,
            _ => EXIT_INPUT,
        }
    }

    fn kind(&self) -> &'static str {
        if self.exit_code() == EXIT_REFUSED {
            "refused"
        } else {
            "input"
        }
    }
}

fn caps(input: &Input) -> Caps {
    input.max_size.map_or_else(Caps::default, Caps::uniform)
}

/// Subject name and the raw spec, before any validation.
fn load_spec(input: &Input) -> Result<(String, LatticeSpec), CliError> {
    if let Some(name) = &input.builtin {
        return Ok((name.clone(), crate::format::spec_of(&builtin(name)?)));
    }
    let path = input.file.as_ref().expect("clap requires --file or --builtin");
    let text =
        std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    let subject = path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned());
    Ok((subject, parse(&text)?))
}

fn load(input: &Input) -> Result<(String, Dicomplementation), CliError> {
    let (subject, spec) = load_spec(input)?;
    Ok((subject, Dicomplementation::from_spec(&spec, caps(input).lattice)?))
}

fn emit<T: Serialize>(
    out: &mut dyn Write,
    input_json: bool,
    value: &T,
    text: impl FnOnce(&mut dyn Write) -> std::io::Result<()>,
) {
    let res = if input_json {
        serde_json::to_string_pretty(value).map_err(std::io::Error::other).and_then(|s| writeln!(out, "{s}"))
    } else {
        text(out)
    };
    // A closed pipe is not worth a panic.
    let _ = res;
}

fn write_report(out: &mut dyn Write, r: &Report) -> std::io::Result<()> {
    writeln!(out, "{} ({})", r.subject, r.suite)?;
    for e in &r.results {
        write!(out, "  {:<8} {}", e.status, e.id)?;
        if let Some(w) = &e.witness {
            write!(out, "  [{}]", w.join(", "))?;
        }
        if let Some(n) = &e.note {
            write!(out, "  ({n})")?;
        }
        writeln!(out)?;
    }
    let s = r.summary;
    writeln!(out, "summary: {} pass, {} fail, {} finding, {} skipped", s.pass, s.fail, s.finding, s.skipped)
}

fn show_set(s: &[String]) -> String {
    format!("{{{}}}", s.join(","))
}

fn exit_for(r: &Report) -> i32 {
    if r.failed() {
        EXIT_LAW_FAILED
    } else {
        EXIT_OK
    }
}

fn pairs(l: &BoundedLattice, t: &[usize]) -> Vec<[String; 2]> {
    l.elements().map(|x| [l.name(x).to_string(), l.name(t[x]).to_string()]).collect()
}

fn execute(command: &Command, out: &mut dyn Write) -> Result<i32, CliError> {
    let input = match command {
        Command::Enumerate { input, .. } => input,
        Command::Validate(i)
        | Command::Laws(i)
        | Command::Filters(i)
        | Command::Sfilters(i)
        | Command::Spectra(i)
        | Command::Congruences(i)
        | Command::VerifyAll(i)
        | Command::ExportDot(i) => i,
    };
    let caps = caps(input);
    let json = input.json;

    match command {
        Command::Validate(_) => {
            let (subject, spec) = load_spec(input)?;
            let l = BoundedLattice::from_spec(&spec, caps.lattice)?;
            let (delta, nabla) = tables_from_spec(&l, &spec)?;
            let report = Report::new(&subject, "validate", &axiom_report(&l, delta.as_deref(), nabla.as_deref()));
            let value = ValidateOutput {
                subject,
                elements: l.names().to_vec(),
                covers: l.covers().into_iter().map(|(a, b)| [l.name(a).to_string(), l.name(b).to_string()]).collect(),
                has_delta: delta.is_some(),
                has_nabla: nabla.is_some(),
                report,
            };
            emit(out, json, &value, |o| {
                writeln!(o, "{} elements, {} covers", value.elements.len(), value.covers.len())?;
                write_report(o, &value.report)
            });
            Ok(exit_for(&value.report))
        }
        Command::Laws(_) => {
            let (subject, d) = load(input)?;
            let report = Report::new(&subject, "laws", &run_suite(&d, Suite::Identities, caps)?);
            emit(out, json, &report, |o| write_report(o, &report));
            Ok(exit_for(&report))
        }
        Command::Filters(_) => {
            let (subject, d) = load(input)?;
            let l = d.lattice();
            let report = Report::new(&subject, "filters", &run_suite(&d, Suite::Filters, caps)?);
            let filters: Vec<NamedSet> = enumerate_filters(l, caps.filters)?.into_iter().map(|f| named(l, f)).collect();
            let value = FiltersOutput { subject, filters, report };
            emit(out, json, &value, |o| {
                for f in &value.filters {
                    writeln!(o, "{}", show_set(f))?;
                }
                write_report(o, &value.report)
            });
            Ok(exit_for(&value.report))
        }
        Command::Sfilters(_) => {
            let (subject, d) = load(input)?;
            let l = d.lattice();
            let report = Report::new(&subject, "sfilters", &run_suite(&d, Suite::SFilters, caps)?);
            let w = d.wcl()?;
            let s_filters = enumerate_s_filters(&w, caps.filters)?.into_iter().map(|f| named(l, f)).collect();
            let phi = skeleton_filters(&w)
                .into_iter()
                .map(|g| {
                    Ok(PhiEntry { skeleton_filter: named(l, g), s_filter: named(l, f_from_skeleton_filter(&w, g)?) })
                })
                .collect::<Result<Vec<_>, FilterError>>()?;
            let value = SFiltersOutput { subject, s_filters, phi, report };
            emit(out, json, &value, |o| {
                for p in &value.phi {
                    writeln!(o, "{} -> {}", show_set(&p.skeleton_filter), show_set(&p.s_filter))?;
                }
                write_report(o, &value.report)
            });
            Ok(exit_for(&value.report))
        }
        Command::Spectra(_) => {
            let (subject, d) = load(input)?;
            let l = d.lattice();
            let report = Report::new(&subject, "spectra", &run_suite(&d, Suite::Spectra, caps)?);
            let w = d.wcl()?;
            let mut classification = Vec::new();
            for u in [Universe::Lattice, Universe::Skeleton, Universe::SFilters] {
                classification
                    .extend(classify_all(&w, u, caps.filters)?.iter().map(|c| ClassificationEntry::new(l, c)));
            }
            let value = SpectraOutput { subject, classification, report };
            emit(out, json, &value, |o| {
                for c in &value.classification {
                    let flag = |b: bool, s: &'static str| if b { s } else { "" };
                    writeln!(
                        o,
                        "{:<10} {:<16} {} {} {}",
                        c.universe,
                        show_set(&c.filter),
                        flag(c.prime, "prime"),
                        flag(c.primary, "primary"),
                        flag(c.maximal, "maximal")
                    )?;
                }
                write_report(o, &value.report)
            });
            Ok(exit_for(&value.report))
        }
        Command::Congruences(_) => {
            let (subject, d) = load(input)?;
            let l = d.lattice();
            let report = Report::new(&subject, "congruences", &run_suite(&d, Suite::Congruences, caps)?);
            let w = d.wcl()?;
            let cap = caps.congruences.min(caps.filters);
            let congruences = enumerate_congruences(&w, cap)?.iter().map(|c| CongruenceEntry::new(l, c)).collect();
            let flags = Flags::from(&structure_flags(&w, cap)?);
            let value = CongruencesOutput { subject, congruences, flags, report };
            emit(out, json, &value, |o| {
                for c in &value.congruences {
                    let blocks: Vec<String> = c.blocks.iter().map(|b| show_set(b)).collect();
                    writeln!(o, "{}  cokernel {}", blocks.join("|"), show_set(&c.cokernel))?;
                }
                let f = &value.flags;
                writeln!(
                    o,
                    "distributive={} regular={} simple={} subdirectly-irreducible={}",
                    f.distributive, f.regular, f.simple, f.subdirectly_irreducible
                )?;
                write_report(o, &value.report)
            });
            Ok(exit_for(&value.report))
        }
        Command::VerifyAll(_) => {
            let (subject, d) = load(input)?;
            let report = Report::new(&subject, "verify-all", &verify_all(&d, caps)?);
            emit(out, json, &report, |o| write_report(o, &report));
            Ok(exit_for(&report))
        }
        Command::ExportDot(_) => {
            let (subject, d) = load(input)?;
            let dot = export_dot(&d, &subject);
            #[derive(Serialize)]
            struct DotOutput<'a> {
                subject: &'a str,
                dot: &'a str,
            }
            emit(out, json, &DotOutput { subject: &subject, dot: &dot }, |o| write!(o, "{dot}"));
            Ok(EXIT_OK)
        }
        Command::Enumerate { side, .. } => {
            let (subject, spec) = load_spec(input)?;
            let l = BoundedLattice::from_spec(&spec, caps.lattice)?;
            let found = enumerate(&l, side.side(), caps.dicomplementations)?;
            let tables = found
                .iter()
                .map(|d| TablePair {
                    delta: d.delta_table().ok().map(|t| pairs(&l, t)),
                    nabla: d.nabla_table().ok().map(|t| pairs(&l, t)),
                })
                .collect();
            let value = EnumerateOutput {
                subject,
                side: format!("{side:?}").to_lowercase(),
                count: found.len(),
                dicomplementations: tables,
            };
            emit(out, json, &value, |o| {
                let row = |t: &[[String; 2]]| t.iter().map(|[a, b]| format!("{a}->{b}")).collect::<Vec<_>>().join(" ");
                for (k, t) in value.dicomplementations.iter().enumerate() {
                    write!(o, "#{k}")?;
                    if let Some(dt) = &t.delta {
                        write!(o, "  delta: {}", row(dt))?;
                    }
                    if let Some(nt) = &t.nabla {
                        write!(o, "  nabla: {}", row(nt))?;
                    }
                    writeln!(o)?;
                }
                writeln!(o, "{} found", value.count)
            });
            Ok(EXIT_OK)
        }
    }
}

/// Runs one command, writing results to `out` and errors to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let code = e.exit_code();
            let _ = writeln!(err, "error: {e}");
            let json = match &cli.command {
                Command::Enumerate { input, .. } => input.json,
                Command::Validate(i)
                | Command::Laws(i)
                | Command::Filters(i)
                | Command::Sfilters(i)
                | Command::Spectra(i)
                | Command::Congruences(i)
                | Command::VerifyAll(i)
                | Command::ExportDot(i) => i.json,
            };
            if json {
                let body = ErrorOutput { error: e.to_string(), kind: e.kind().to_string() };
                if let Ok(s) = serde_json::to_string_pretty(&body) {
                    let _ = writeln!(out, "{s}");
                }
            }
            code
        }
    }
}
