//! The `qlat` command line.
//!
//! Exit codes: 0 when the command succeeds and any checked property holds,
//! 1 when a checked property fails or an `--expect` does not match (the
//! witness is printed), 2 for usage, input and parse errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::congruence::{
    all_congruences, is_congruence, is_q_homomorphism, kernel_partition, quotient, satisfies_star,
    Partition, PosetMap,
};
use crate::element_set::ElementSet;
use crate::error::Error;
use crate::format::{emit_dot, format_poset, PosetFile};
use crate::ideals::{
    all_structures, closure, is_closed_structure, structure_lattice, StructureKind,
};
use crate::ops::{check_identities, classify, is_associative, is_modular, mlb, mub, Kind};
use crate::poset::Poset;
use crate::sweep::{self, Claim};
use crate::verdict::Verdict;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "qlat", version, about = "Quasi-lattice toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify a poset and optionally assert a property.
    Check {
        file: PathBuf,
        #[arg(long, value_enum)]
        expect: Option<Expectation>,
    },
    /// Print the minimal upper bounds of two elements.
    Mub { file: PathBuf, a: String, b: String },
    /// Print the maximal lower bounds of two elements.
    Mlb { file: PathBuf, a: String, b: String },
    /// List ideals, or close or check a set (comma-separated labels).
    Ideals(StructureArgs),
    /// List filters, or close or check a set (comma-separated labels).
    Filters(StructureArgs),
    /// List congruences, or check one partition such as "0,m|1".
    Congruences {
        file: PathBuf,
        #[arg(long, value_name = "PARTITION")]
        check: Option<String>,
    },
    /// Print the quotient by a congruence in the poset file format.
    Quotient {
        file: PathBuf,
        #[arg(long, value_name = "PARTITION")]
        partition: String,
    },
    /// Check that a map (target labels in source element order) is a
    /// q-lattice homomorphism.
    Hom {
        source: PathBuf,
        target: PathBuf,
        #[arg(long, value_name = "LABELS")]
        map: String,
        /// Also check the kernel for the congruence and (*) conditions.
        #[arg(long)]
        kernel: bool,
    },
    /// Re-check the claim registry over all labeled posets.
    Enumerate {
        /// Largest ground-set size; defaults to each claim's own bound.
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated claim ids, or `all`.
        #[arg(long, default_value = "all")]
        claims: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Directory for counterexample poset files.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Print the Hasse diagram as Graphviz DOT.
    Dot { file: PathBuf },
}

#[derive(Debug, clap::Args)]
struct StructureArgs {
    file: PathBuf,
    /// Print the closure of a set.
    #[arg(long, value_name = "SET", conflicts_with = "check")]
    closure: Option<String>,
    /// Check whether a set is closed.
    #[arg(long, value_name = "SET")]
    check: Option<String>,
    /// Print the lattice of all structures in the poset file format.
    #[arg(long, conflicts_with_all = ["closure", "check"])]
    lattice: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Expectation {
    QuasiLattice,
    Lattice,
    NotQuasiLattice,
    Associative,
    Modular,
    Identities,
}

impl Expectation {
    fn name(self) -> &'static str {
        match self {
            Expectation::QuasiLattice => "quasi-lattice",
            Expectation::Lattice => "lattice",
            Expectation::NotQuasiLattice => "not-quasi-lattice",
            Expectation::Associative => "associative",
            Expectation::Modular => "modular",
            Expectation::Identities => "identities",
        }
    }
}

/// A command failure, already mapped to its exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Violation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::NotAQuasiLattice(..)
            | Error::NotACongruence(_)
            | Error::StarViolated(_)
            | Error::QuotientNotPoset(_)
            | Error::QuotientNotLattice(_)
            | Error::QuotientInconsistent(_)
            | Error::StructureLatticeViolation(_)
            | Error::NotSurjective(_)
            | Error::TargetNotLattice(_) => Failure::Violation(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Runs the CLI with process stdout and stderr and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI, writing the report to `out` and diagnostics to `err`.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let mut report = String::new();
    let outcome = dispatch(cli.command, &mut report);
    let _ = out.write_all(report.as_bytes());
    match outcome {
        Ok(code) => code,
        Err(Failure::Violation(msg)) => {
            let _ = writeln!(out, "violation: {msg}");
            EXIT_VIOLATION
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, out: &mut String) -> Outcome {
    match command {
        Command::Check { file, expect } => check(&load(&file)?, expect, out),
        Command::Mub { file, a, b } => bounds(&load(&file)?, &a, &b, mub, out),
        Command::Mlb { file, a, b } => bounds(&load(&file)?, &a, &b, mlb, out),
        Command::Ideals(args) => structures(args, StructureKind::Ideal, out),
        Command::Filters(args) => structures(args, StructureKind::Filter, out),
        Command::Congruences { file, check } => congruences(&load(&file)?, check.as_deref(), out),
        Command::Quotient { file, partition } => quotient_cmd(&load(&file)?, &partition, out),
        Command::Hom {
            source,
            target,
            map,
            kernel,
        } => hom(&load(&source)?, &load(&target)?, &map, kernel, out),
        Command::Enumerate {
            n,
            claims,
            jobs,
            out_dir,
        } => enumerate(n, &claims, jobs, out_dir.as_deref(), out),
        Command::Dot { file } => {
            out.push_str(&emit_dot(&load(&file)?));
            Ok(EXIT_OK)
        }
    }
}

fn load(path: &Path) -> std::result::Result<Poset, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    PosetFile::parse(&text)
        .map(|f| f.poset)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn braces(p: &Poset, s: ElementSet) -> String {
    format!("{{{}}}", p.labels_of(s).join(", "))
}

/// Parses a comma-separated label list; the empty string is the empty set.
fn parse_set(p: &Poset, literal: &str) -> std::result::Result<ElementSet, Failure> {
    let mut s = ElementSet::EMPTY;
    for label in literal.split(',').map(str::trim).filter(|l| !l.is_empty()) {
        s.insert(p.index_of(label)?);
    }
    Ok(s)
}

fn verdict_code(v: &Verdict) -> i32 {
    if v.holds() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    }
}

fn check(p: &Poset, expect: Option<Expectation>, out: &mut String) -> Outcome {
    let c = classify(p);
    out.push_str(&format!("elements {}\n", p.len()));
    out.push_str(&format!("covers {}\n", p.covers_of().len()));
    out.push_str(&format!("classification {}\n", c.kind.name()));
    if let Some((a, b)) = c.witness {
        out.push_str(&format!(
            "witness ({}, {}): mub {} mlb {}\n",
            p.label(a),
            p.label(b),
            braces(p, mub(p, a, b)),
            braces(p, mlb(p, a, b))
        ));
    }
    let Some(expect) = expect else {
        return Ok(EXIT_OK);
    };
    let verdict = match expect {
        Expectation::QuasiLattice => c.is_quasi_lattice(),
        Expectation::Lattice => c.kind == Kind::Lattice,
        Expectation::NotQuasiLattice => c.kind == Kind::NotQuasiLattice,
        other => {
            let v = match other {
                Expectation::Associative => is_associative(p)?,
                Expectation::Modular => is_modular(p)?,
                _ => check_identities(p)?,
            };
            out.push_str(&format!("expect {}: {v}\n", other.name()));
            return Ok(verdict_code(&v));
        }
    };
    out.push_str(&format!(
        "expect {}: {}\n",
        expect.name(),
        if verdict { "holds" } else { "fails" }
    ));
    Ok(if verdict { EXIT_OK } else { EXIT_VIOLATION })
}

fn bounds(
    p: &Poset,
    a: &str,
    b: &str,
    op: fn(&Poset, usize, usize) -> ElementSet,
    out: &mut String,
) -> Outcome {
    let s = op(p, p.index_of(a)?, p.index_of(b)?);
    out.push_str(&p.labels_of(s).join(" "));
    out.push('\n');
    Ok(EXIT_OK)
}

fn structures(args: StructureArgs, kind: StructureKind, out: &mut String) -> Outcome {
    let p = load(&args.file)?;
    if let Some(set) = args.closure.as_deref() {
        out.push_str(&braces(&p, closure(&p, parse_set(&p, set)?, kind)));
        out.push('\n');
        return Ok(EXIT_OK);
    }
    if let Some(set) = args.check.as_deref() {
        let v = is_closed_structure(&p, parse_set(&p, set)?, kind);
        out.push_str(&format!("{}: {v}\n", kind.name()));
        return Ok(verdict_code(&v));
    }
    if args.lattice {
        let name = format!("{}s", kind.name());
        out.push_str(&format_poset(&structure_lattice(&p, kind)?, Some(&name)));
        return Ok(EXIT_OK);
    }
    let all = all_structures(&p, kind)?;
    out.push_str(&format!("{} {}s\n", all.len(), kind.name()));
    for s in all {
        out.push_str(&braces(&p, s));
        out.push('\n');
    }
    Ok(EXIT_OK)
}

fn congruences(p: &Poset, check: Option<&str>, out: &mut String) -> Outcome {
    if let Some(literal) = check {
        let theta = Partition::parse(p, literal)?;
        let cong = is_congruence(p, &theta)?;
        let star = satisfies_star(p, &theta)?;
        out.push_str(&format!("congruence: {cong}\n"));
        out.push_str(&format!("condition (*): {star}\n"));
        return Ok(if cong.holds() && star.holds() {
            EXIT_OK
        } else {
            EXIT_VIOLATION
        });
    }
    let all = all_congruences(p)?;
    out.push_str(&format!("{} congruences\n", all.len()));
    for theta in all {
        out.push_str(&theta.to_literal(p));
        out.push('\n');
    }
    Ok(EXIT_OK)
}

fn quotient_cmd(p: &Poset, literal: &str, out: &mut String) -> Outcome {
    let theta = Partition::parse(p, literal)?;
    let q = quotient(p, &theta)?;
    for (i, &block) in q.projection.iter().enumerate() {
        out.push_str(&format!("# {} -> {}\n", p.label(i), q.poset.label(block)));
    }
    out.push_str(&format_poset(&q.poset, Some("quotient")));
    Ok(EXIT_OK)
}

fn hom(source: &Poset, target: &Poset, literal: &str, kernel: bool, out: &mut String) -> Outcome {
    let images: Vec<&str> = literal.split(',').map(str::trim).collect();
    let map = PosetMap::from_labels(source, target, &images)?;
    let v = is_q_homomorphism(&map);
    out.push_str(&format!("q-lattice homomorphism: {v}\n"));
    if !v.holds() {
        return Ok(EXIT_VIOLATION);
    }
    if !kernel {
        return Ok(EXIT_OK);
    }
    let theta = kernel_partition(&map)?;
    let cong = is_congruence(source, &theta)?;
    let star = satisfies_star(source, &theta)?;
    out.push_str(&format!("kernel {}\n", theta.to_literal(source)));
    out.push_str(&format!("congruence: {cong}\n"));
    out.push_str(&format!("condition (*): {star}\n"));
    Ok(if cong.holds() && star.holds() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

fn enumerate(
    n: Option<usize>,
    claims: &str,
    jobs: usize,
    out_dir: Option<&Path>,
    out: &mut String,
) -> Outcome {
    let claims = Claim::parse_list(claims)?;
    if claims.is_empty() {
        return Err(Failure::Usage("no claims selected".to_string()));
    }
    let report = match n {
        Some(n) => sweep::verify_theorems(n, &claims, jobs)?,
        None => sweep::verify_defaults(&claims, jobs)?,
    };
    out.push_str(&report.render());
    if let Some(dir) = out_dir {
        let written = report
            .write_counterexamples(dir)
            .map_err(|e| Failure::Usage(format!("{}: {e}", dir.display())))?;
        for path in written {
            out.push_str(&format!("wrote {}\n", path.display()));
        }
    }
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}
