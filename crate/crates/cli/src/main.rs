//! Command-line front end for the `lyt` library.
//!
//! Each verb maps onto one library checker or construction. Exit codes are
//! the only pass/fail channel:
//!
//! * `0` — every requested check passed / the construction succeeded,
//! * `1` — a mathematical check failed (the report lists the violations),
//! * `2` — input or usage error (unknown flag, unreadable file, exceeded
//!   search budget, ...).
//!
//! Reports never change verdicts; they only explain them. With
//! `--format json` every result is a single JSON object carrying
//! `"schema_version": "1"`. The only environment variables consulted are
//! `LYT_MAX_VIOLATIONS` (cap on stored violation witnesses) and `LYT_SEED`
//! (seed passthrough for the library's randomized tests; the CLI itself
//! never draws randomness).

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use lyt::cohomology::{
    delta1, delta2, ly_cohomologous_witness, ly_cohomology, mrbo_cohomology, total_cohomology,
    ComplexKind, ComplexReport, TotalComplex,
};
use lyt::corpus::{
    named_algebras, named_operators, operator_family_three_dim, operator_family_two_dim,
};
use lyt::deformation::{check_infinitesimal, deformations_equivalent};
use lyt::extension::{extension_from_cocycle, AbelianExtension};
use lyt::format::{
    algebra_from_file, algebra_to_file, cochain1_from_file, cochain2_from_file, extension_from_file,
    extension_to_file, infinitesimal_from_file, matrix_from_file, matrix_to_file, rep_from_file,
    rep_to_file, total_cochain2_from_file, total_cochain2_to_file, AlgebraFile, CochainFile,
    ExtensionFile, InfinitesimalFile, MatrixFile, RepFile,
};

use lyt::operators::{check_operator, descendant, search_operators_with_threads};
use lyt::report::{set_max_violations, ReportBuilder};
use lyt::representation::{check_mrb_rep, check_representation, semidirect, semidirect_operator};
use lyt::scalar::{int, parse_scalar, zero};
use lyt::{
    AxiomReport, Error, LYAlgebra, Matrix, MrblyAlgebra, OperatorKind, Representation, Scalar,
};

const SCHEMA_VERSION: &str = "1";

#[derive(Parser)]
#[command(
    name = "lyt",
    version,
    about = "Exact checks and constructions for Lie-Yamaguti algebras with modified Rota-Baxter operators",
    arg_required_else_help = true
)]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Text)]
    format: OutFormat,

    #[command(subcommand)]
    verb: Verb,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Verb {
    /// Check the Lie-Yamaguti axioms LY1-LY6 on an algebra file.
    CheckAlgebra {
        /// Algebra file ({"dim", "binary", "ternary"}).
        algebra: PathBuf,
    },

    /// Check an operator identity (modified Rota-Baxter, weight -1
    /// Rota-Baxter, or Nijenhuis) on all basis tuples.
    CheckOperator {
        #[arg(long)]
        algebra: PathBuf,
        /// Matrix file for the operator.
        #[arg(long)]
        operator: PathBuf,
        /// One of: mrb, rb_m1, nijenhuis.
        #[arg(long)]
        kind: String,
    },

    /// Check the representation axioms R1-R7 and R6', and (with
    /// --operator) the modified Rota-Baxter compatibility of the pair
    /// (R, rv) with the representation.
    CheckRep {
        #[arg(long)]
        algebra: PathBuf,
        /// Representation file ({"dimV", "rho", "theta", "D", "rv"?}).
        #[arg(long)]
        rep: PathBuf,
        /// Operator on the algebra; requires "rv" in the representation
        /// file and additionally checks the compatibility identities.
        #[arg(long)]
        operator: Option<PathBuf>,
    },

    /// Build the descendant algebra of a modified Rota-Baxter operator:
    /// [x,y]_R = [Rx,y]+[x,Ry] and the matching ternary bracket.
    Descend {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        operator: PathBuf,
        /// Write the resulting algebra file here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Build the semidirect product of an algebra with a representation,
    /// together with the block operator diag(R, rv), emitted as an
    /// extension file (the zero-cocycle extension).
    Semidirect {
        #[arg(long)]
        algebra: PathBuf,
        /// Operator R on the algebra.
        #[arg(long)]
        operator: PathBuf,
        /// Representation file; must carry "rv".
        #[arg(long)]
        rep: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Exact cohomology dimensions in degrees 1 and 2 for one of the
    /// three complexes (ly, mrbo, total; "mrbly" is accepted for total).
    Cohomology {
        #[arg(long)]
        algebra: PathBuf,
        /// Operator R; required for the mrbo and total complexes.
        #[arg(long)]
        operator: Option<PathBuf>,
        /// Coefficient representation; the adjoint one when omitted.
        #[arg(long)]
        rep: Option<PathBuf>,
        /// One of: ly, mrbo, total (alias mrbly).
        #[arg(long)]
        complex: String,
        /// Restrict the text report to one degree (1 or 2).
        #[arg(long)]
        degree: Option<u8>,
    },

    /// Check the cocycle condition: either a cochain file against a chosen
    /// complex, or an infinitesimal deformation file ({"F1","G1","R1"})
    /// against the full linearized axiom system.
    CheckCocycle {
        #[arg(long)]
        algebra: PathBuf,
        /// Operator R; required for the mrbo/total complexes and for
        /// --infinitesimal.
        #[arg(long)]
        operator: Option<PathBuf>,
        /// Coefficient representation; the adjoint one when omitted.
        #[arg(long)]
        rep: Option<PathBuf>,
        /// Cochain file to test (degree 1 or 2).
        #[arg(long, conflicts_with = "infinitesimal")]
        cochain: Option<PathBuf>,
        /// Complex for --cochain: ly, mrbo, total (alias mrbly).
        #[arg(long)]
        complex: Option<String>,
        /// Cross-check: fail unless the cochain file has this degree.
        #[arg(long)]
        degree: Option<u8>,
        /// Infinitesimal deformation file to test directly.
        #[arg(long)]
        infinitesimal: Option<PathBuf>,
    },

    /// Decide whether two cochains (or two infinitesimal deformations)
    /// differ by a coboundary; prints the degree-1 witness when they do.
    Cohomologous {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        operator: Option<PathBuf>,
        /// Coefficient representation; the adjoint one when omitted.
        #[arg(long)]
        rep: Option<PathBuf>,
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        /// How to read the two files.
        #[arg(long, value_enum, default_value_t = PairKind::Cochain)]
        kind: PairKind,
        /// Complex for cochain inputs: ly, mrbo, total (alias mrbly).
        #[arg(long)]
        complex: Option<String>,
    },

    /// Build the abelian extension classified by a total 2-cocycle.
    Extend {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        operator: PathBuf,
        /// Representation file; must carry "rv".
        #[arg(long)]
        rep: PathBuf,
        /// Total 2-cochain file ({"degree":2,"f","g","op"}).
        #[arg(long)]
        cocycle: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Read an extension file and extract the induced representation, the
    /// fiber operator, and the 2-cocycle of a section (the canonical one
    /// unless --section is given).
    ExtractCocycle {
        #[arg(long)]
        extension: PathBuf,
        /// Matrix file for a section of the projection.
        #[arg(long)]
        section: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Enumerate all matrices with entries from a finite candidate pool
    /// and list those passing an operator identity.
    SearchOperators {
        #[arg(long)]
        algebra: PathBuf,
        /// Comma-separated rationals, e.g. "-1,0,1" or "0,1/2,1".
        #[arg(long, allow_hyphen_values = true)]
        candidates: String,
        /// One of: mrb, rb_m1, nijenhuis.
        #[arg(long)]
        kind: String,
        /// Refuse enumerations larger than this many matrices.
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        /// Worker threads; the hit list is identical for every count.
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },

    /// Write a built-in example file (algebras, operator family members,
    /// adjoint representations); with no name, list the known names.
    Examples {
        /// Which example to write.
        name: Option<String>,
        /// Parameter k of the 2-dim operator family [[1,k1],[0,k]].
        #[arg(long, allow_hyphen_values = true)]
        k: Option<String>,
        /// Parameter k1 of the 2-dim operator family.
        #[arg(long, allow_hyphen_values = true)]
        k1: Option<String>,
        /// Parameters of the 3-dim operator family (a, b, c, f, i).
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        c: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        f: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        i: Option<String>,
        /// Dimension for the generic "id" and "zero" matrices.
        #[arg(long, default_value_t = 2)]
        dim: usize,
        /// Output path; defaults to "<name>.json" in the current directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum PairKind {
    /// Cochain files over the chosen complex.
    Cochain,
    /// Infinitesimal deformation files ({"F1","G1","R1"}), compared in
    /// the total complex with adjoint coefficients.
    Infinitesimal,
}

impl Verb {
    fn name(&self) -> &'static str {
        match self {
            Verb::CheckAlgebra { .. } => "check-algebra",
            Verb::CheckOperator { .. } => "check-operator",
            Verb::CheckRep { .. } => "check-rep",
            Verb::Descend { .. } => "descend",
            Verb::Semidirect { .. } => "semidirect",
            Verb::Cohomology { .. } => "cohomology",
            Verb::CheckCocycle { .. } => "check-cocycle",
            Verb::Cohomologous { .. } => "cohomologous",
            Verb::Extend { .. } => "extend",
            Verb::ExtractCocycle { .. } => "extract-cocycle",
            Verb::SearchOperators { .. } => "search-operators",
            Verb::Examples { .. } => "examples",
        }
    }
}

/// What a verb produced: the verdict, the text rendering, and the JSON
/// payload fields (merged under the schema envelope).
struct Outcome {
    passed: bool,
    text: String,
    json: Map<String, Value>,
}

impl Outcome {
    fn new(passed: bool, text: String) -> Self {
        let mut json = Map::new();
        json.insert("passed".into(), Value::Bool(passed));
        Outcome { passed, text, json }
    }

    fn with(mut self, key: &str, value: Value) -> Self {
        self.json.insert(key.into(), value);
        self
    }
}

/// Prints to stdout, ignoring a closed pipe (e.g. output piped into
/// `head`): the exit code stays the only verdict channel.
fn print_out(s: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout().lock(), "{s}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = apply_env() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let command = cli.verb.name();
    match dispatch(cli.verb) {
        Ok(out) => {
            match cli.format {
                OutFormat::Text => {
                    if !out.text.is_empty() {
                        print_out(&out.text);
                    }
                }
                OutFormat::Json => print_envelope(command, out.json),
            }
            ExitCode::from(if out.passed { 0 } else { 1 })
        }
        Err(e) => {
            let code = classify(&e);
            if code == 1 {
                match cli.format {
                    OutFormat::Text => print_out(&e.to_string()),
                    OutFormat::Json => {
                        let mut payload = Map::new();
                        payload.insert("passed".into(), Value::Bool(false));
                        payload.insert("error".into(), Value::String(e.to_string()));
                        if let Error::PreconditionFailed { check, report } = &e {
                            payload.insert("check".into(), Value::String((*check).into()));
                            payload.insert("report".into(), to_value(report));
                        }
                        print_envelope(command, payload);
                    }
                }
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(code)
        }
    }
}

/// Exit code for an error: mathematical check failures get 1, everything
/// else (unreadable input, shape mismatches, exceeded budgets) gets 2.
fn classify(e: &Error) -> u8 {
    match e {
        Error::PreconditionFailed { .. } | Error::NotACocycle(_) | Error::NotASection => 1,
        _ => 2,
    }
}

fn apply_env() -> Result<(), Error> {
    if let Ok(raw) = std::env::var("LYT_MAX_VIOLATIONS") {
        let cap: usize = raw
            .parse()
            .map_err(|_| Error::Parse(format!("LYT_MAX_VIOLATIONS must be a number, got {raw:?}")))?;
        set_max_violations(cap);
    }
    Ok(())
}

fn print_envelope(command: &str, payload: Map<String, Value>) {
    let mut obj = Map::new();
    obj.insert("schema_version".into(), Value::String(SCHEMA_VERSION.into()));
    obj.insert("command".into(), Value::String(command.into()));
    obj.extend(payload);
    print_out(&pretty(&Value::Object(obj)));
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON value serializes")
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report types serialize")
}

// ---------------------------------------------------------------------------
// File plumbing

fn load_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Error> {
    let s = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&s).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn load_algebra(path: &Path) -> Result<LYAlgebra, Error> {
    algebra_from_file(&load_json::<AlgebraFile>(path)?)
}

fn load_matrix(path: &Path) -> Result<Matrix, Error> {
    matrix_from_file(&load_json::<MatrixFile>(path)?)
}

fn load_rep(path: &Path, alg: &LYAlgebra) -> Result<(Representation, Option<Matrix>), Error> {
    rep_from_file(alg.clone(), &load_json::<RepFile>(path)?)
}

/// Canonical on-disk form: pretty-printed JSON plus a trailing newline.
/// Parse followed by serialize reproduces a canonical file byte for byte.
fn canonical_doc<T: serde::Serialize>(t: &T) -> String {
    let mut s = serde_json::to_string_pretty(t).expect("file types serialize");
    s.push('\n');
    s
}

fn write_doc<T: serde::Serialize>(path: &Path, t: &T) -> Result<(), Error> {
    std::fs::write(path, canonical_doc(t))
        .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))
}

/// Emits a constructed document: to `--out` as a canonical file (reporting
/// the path), otherwise onto stdout.
fn emit_document<T: serde::Serialize>(
    doc: &T,
    key: &str,
    out: Option<&Path>,
    mut outcome: Outcome,
) -> Result<Outcome, Error> {
    match out {
        Some(path) => {
            write_doc(path, doc)?;
            let line = format!("wrote {}", path.display());
            if outcome.text.is_empty() {
                outcome.text = line;
            } else {
                outcome.text = format!("{}\n{line}", outcome.text);
            }
            outcome
                .json
                .insert("written".into(), Value::String(path.display().to_string()));
        }
        None => {
            outcome.text = canonical_doc(doc).trim_end().to_string();
        }
    }
    outcome.json.insert(key.into(), to_value(doc));
    Ok(outcome)
}

// ---------------------------------------------------------------------------
// Shared pieces

fn parse_kind(s: &str) -> Result<OperatorKind, Error> {
    OperatorKind::from_str(s)
}

fn parse_complex(s: &str) -> Result<ComplexKind, Error> {
    ComplexKind::from_str(s)
}

/// Coefficients for a complex: the representation, and the operator pair
/// (R, R_V) when the complex involves the operator. With no `--rep` the
/// adjoint representation is used and R_V defaults to R itself; an
/// explicit representation file must carry `"rv"`.
fn coefficient_data(
    alg: &LYAlgebra,
    rep_path: Option<&Path>,
    op_path: Option<&Path>,
    needs_operator: bool,
) -> Result<(Representation, Option<(Matrix, Matrix)>), Error> {
    let (rep, rv) = match rep_path {
        Some(p) => load_rep(p, alg)?,
        None => (Representation::adjoint(alg), None),
    };
    if !needs_operator {
        return Ok((rep, None));
    }
    let op_path = op_path.ok_or_else(|| {
        Error::Parse("--operator is required for this complex (mrbo/total)".into())
    })?;
    let r = load_matrix(op_path)?;
    let rv = match rv {
        Some(rv) => rv,
        None if rep_path.is_none() => r.clone(),
        None => {
            return Err(Error::Parse(
                "the representation file must carry \"rv\" (the operator on the fiber)".into(),
            ))
        }
    };
    Ok((rep, Some((r, rv))))
}

/// Report whose violations are the nonzero coordinates of a differential
/// image, so "is this a cocycle" failures show where the image lives.
fn image_report(label: &str, flat: &[Scalar]) -> AxiomReport {
    let mut b = ReportBuilder::new();
    let z = [zero()];
    for (i, v) in flat.iter().enumerate() {
        b.check(label, &[i], std::slice::from_ref(v), &z);
    }
    b.finish()
}

fn verdict_text(label: &str, report: &AxiomReport) -> String {
    if report.passed {
        format!("{label}: pass")
    } else {
        format!("{label}: {report}").trim_end().to_string()
    }
}

fn complex_text(r: &ComplexReport, degree: Option<u8>) -> String {
    let head = format!(
        "complex: {} (base dim {}, coefficient dim {})",
        r.complex, r.algebra_dim, r.coefficient_dim
    );
    let lines = match degree {
        Some(1) => vec![
            format!("C1 = {}", r.c1_dim),
            format!("rank d1 = {}", r.rank_d1),
            format!("H1 = {}", r.h1_dim),
        ],
        Some(2) => vec![
            format!("C2 = {}", r.c2_dim),
            format!("rank d1 = {}   rank d2 = {}", r.rank_d1, r.rank_d2),
            format!("H2 = {}", r.h2_dim),
        ],
        _ => vec![
            format!("C1 = {}   C2 = {}   C3 = {}", r.c1_dim, r.c2_dim, r.c3_dim),
            format!("rank d1 = {}   rank d2 = {}", r.rank_d1, r.rank_d2),
            format!("H1 = {}   H2 = {}", r.h1_dim, r.h2_dim),
        ],
    };
    format!("{head}\n{}", lines.join("\n"))
}

// ---------------------------------------------------------------------------
// Verb handlers

fn dispatch(verb: Verb) -> Result<Outcome, Error> {
    match verb {
        Verb::CheckAlgebra { algebra } => cmd_check_algebra(&algebra),
        Verb::CheckOperator {
            algebra,
            operator,
            kind,
        } => cmd_check_operator(&algebra, &operator, &kind),
        Verb::CheckRep {
            algebra,
            rep,
            operator,
        } => cmd_check_rep(&algebra, &rep, operator.as_deref()),
        Verb::Descend {
            algebra,
            operator,
            out,
        } => cmd_descend(&algebra, &operator, out.as_deref()),
        Verb::Semidirect {
            algebra,
            operator,
            rep,
            out,
        } => cmd_semidirect(&algebra, &operator, &rep, out.as_deref()),
        Verb::Cohomology {
            algebra,
            operator,
            rep,
            complex,
            degree,
        } => cmd_cohomology(&algebra, operator.as_deref(), rep.as_deref(), &complex, degree),
        Verb::CheckCocycle {
            algebra,
            operator,
            rep,
            cochain,
            complex,
            degree,
            infinitesimal,
        } => cmd_check_cocycle(
            &algebra,
            operator.as_deref(),
            rep.as_deref(),
            cochain.as_deref(),
            complex.as_deref(),
            degree,
            infinitesimal.as_deref(),
        ),
        Verb::Cohomologous {
            algebra,
            operator,
            rep,
            left,
            right,
            kind,
            complex,
        } => cmd_cohomologous(
            &algebra,
            operator.as_deref(),
            rep.as_deref(),
            &left,
            &right,
            kind,
            complex.as_deref(),
        ),
        Verb::Extend {
            algebra,
            operator,
            rep,
            cocycle,
            out,
        } => cmd_extend(&algebra, &operator, &rep, &cocycle, out.as_deref()),
        Verb::ExtractCocycle {
            extension,
            section,
            out,
        } => cmd_extract_cocycle(&extension, section.as_deref(), out.as_deref()),
        Verb::SearchOperators {
            algebra,
            candidates,
            kind,
            budget,
            threads,
        } => cmd_search_operators(&algebra, &candidates, &kind, budget, threads),
        Verb::Examples {
            name,
            k,
            k1,
            a,
            b,
            c,
            f,
            i,
            dim,
            out,
        } => cmd_examples(ExampleRequest {
            name,
            k,
            k1,
            a,
            b,
            c,
            f,
            i,
            dim,
            out,
        }),
    }
}

fn cmd_check_algebra(path: &Path) -> Result<Outcome, Error> {
    let alg = load_algebra(path)?;
    let report = alg.check_ly_axioms();
    let passed = report.passed;
    Ok(Outcome::new(passed, verdict_text("LY1\u{2013}LY6", &report))
        .with("report", to_value(&report)))
}

fn cmd_check_operator(algebra: &Path, operator: &Path, kind: &str) -> Result<Outcome, Error> {
    let alg = load_algebra(algebra)?;
    let op = load_matrix(operator)?;
    let kind = parse_kind(kind)?;
    let report = check_operator(&alg, &op, kind)?;
    let passed = report.passed;
    Ok(Outcome::new(passed, verdict_text(kind.as_str(), &report))
        .with("kind", Value::String(kind.as_str().into()))
        .with("report", to_value(&report)))
}

fn cmd_check_rep(algebra: &Path, rep: &Path, operator: Option<&Path>) -> Result<Outcome, Error> {
    let alg = load_algebra(algebra)?;
    let (rep, rv) = load_rep(rep, &alg)?;
    let mut reports = vec![check_representation(&rep)];
    let mut label = String::from("R1\u{2013}R7, R6'");
    let compat = operator.is_some();
    if let Some(op_path) = operator {
        let r = load_matrix(op_path)?;
        let rv = rv.as_ref().ok_or_else(|| {
            Error::Parse(
                "the representation file must carry \"rv\" to check operator compatibility".into(),
            )
        })?;
        reports.push(check_mrb_rep(&rep, &r, rv)?);
        label.push_str(", MRB compatibility");
    }
    let report = AxiomReport::merge(reports);
    let passed = report.passed;
    Ok(Outcome::new(passed, verdict_text(&label, &report))
        .with("compatibility_checked", Value::Bool(compat))
        .with("report", to_value(&report)))
}

fn cmd_descend(algebra: &Path, operator: &Path, out: Option<&Path>) -> Result<Outcome, Error> {
    let alg = load_algebra(algebra)?;
    let r = load_matrix(operator)?;
    let desc = descendant(&alg, &r)?;
    let doc = algebra_to_file(&desc);
    emit_document(&doc, "algebra", out, Outcome::new(true, String::new()))
}

fn cmd_semidirect(
    algebra: &Path,
    operator: &Path,
    rep: &Path,
    out: Option<&Path>,
) -> Result<Outcome, Error> {
    let alg = load_algebra(algebra)?;
    let r = load_matrix(operator)?;
    let (rep, rv) = load_rep(rep, &alg)?;
    let rv = rv.ok_or_else(|| {
        Error::Parse("the representation file must carry \"rv\" (the operator on the fiber)".into())
    })?;
    let total = semidirect(&rep)?;
    let rop = semidirect_operator(&r, &rv);
    // Validates the product: the block operator must again satisfy the
    // modified Rota-Baxter identity on the product algebra.
    let pair = MrblyAlgebra::new(total, rop)?;
    let base = MrblyAlgebra::new(alg, r)?;
    let n = rep.dim();
    let m = rep.vdim();
    let inclusion = Matrix::from_fn(n + m, m, |row, col| {
        if row == n + col {
            int(1)
        } else {
            zero()
        }
    });
    let projection = Matrix::from_fn(n, n + m, |row, col| {
        if row == col {
            int(1)
        } else {
            zero()
        }
    });
    let ext = AbelianExtension::new(pair, base, inclusion, projection)?;
    let doc = extension_to_file(&ext);
    emit_document(&doc, "extension", out, Outcome::new(true, String::new()))
}

fn cmd_cohomology(
    algebra: &Path,
    operator: Option<&Path>,
    rep: Option<&Path>,
    complex: &str,
    degree: Option<u8>,
) -> Result<Outcome, Error> {
    if let Some(d) = degree {
        if d != 1 && d != 2 {
            return Err(Error::UnsupportedDegree(d));
        }
    }
    let kind = parse_complex(complex)?;
    let alg = load_algebra(algebra)?;
    let needs_op = !matches!(kind, ComplexKind::Ly);
    let (rep, ops) = coefficient_data(&alg, rep, operator, needs_op)?;
    let report = match kind {
        ComplexKind::Ly => ly_cohomology(&rep)?,
        ComplexKind::Mrbo => {
            let (r, rv) = ops.expect("operator pair is present for mrbo");
            mrbo_cohomology(&rep, &r, &rv)?
        }
        ComplexKind::Total => {
            let (r, rv) = ops.expect("operator pair is present for total");
            total_cohomology(&rep, &r, &rv)?
        }
    };
    let mut out = Outcome::new(true, complex_text(&report, degree)).with("report", to_value(&report));
    if let Some(d) = degree {
        out = out.with("degree", Value::Number(d.into()));
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn cmd_check_cocycle(
    algebra: &Path,
    operator: Option<&Path>,
    rep: Option<&Path>,
    cochain: Option<&Path>,
    complex: Option<&str>,
    degree: Option<u8>,
    infinitesimal: Option<&Path>,
) -> Result<Outcome, Error> {
    let alg = load_algebra(algebra)?;

    if let Some(inf_path) = infinitesimal {
        let op_path = operator
            .ok_or_else(|| Error::Parse("--operator is required with --infinitesimal".into()))?;
        let r = load_matrix(op_path)?;
        let base = MrblyAlgebra::new(alg.clone(), r)?;
        let def = infinitesimal_from_file(alg.dim(), &load_json::<InfinitesimalFile>(inf_path)?)?;
        let report = check_infinitesimal(&base, &def)?;
        let passed = report.passed;
        return Ok(
            Outcome::new(passed, verdict_text("infinitesimal deformation", &report))
                .with("report", to_value(&report)),
        );
    }

    let cochain_path =
        cochain.ok_or_else(|| Error::Parse("give either --cochain or --infinitesimal".into()))?;
    let complex = complex
        .ok_or_else(|| Error::Parse("--complex is required with --cochain".into()))?;
    let kind = parse_complex(complex)?;
    let file: CochainFile = load_json(cochain_path)?;
    if let Some(d) = degree {
        if d != file.degree {
            return Err(Error::Parse(format!(
                "--degree {d} does not match the file's degree {}",
                file.degree
            )));
        }
    }
    if matches!(kind, ComplexKind::Ly | ComplexKind::Mrbo) && file.op.is_some() {
        return Err(Error::Parse(
            "the \"op\" part of a cochain is only meaningful in the total complex".into(),
        ));
    }

    let needs_op = !matches!(kind, ComplexKind::Ly);
    let (rep, ops) = coefficient_data(&alg, rep, operator, needs_op)?;
    let (n, m) = (rep.dim(), rep.vdim());
    let label = format!("{}-d{}", kind_str(&kind), file.degree);
    let image = match kind {
        ComplexKind::Ly => match file.degree {
            1 => delta1(&rep, &cochain1_from_file(n, m, &file)?).flatten(),
            2 => delta2(&rep, &cochain2_from_file(n, m, &file)?).flatten(),
            d => return Err(Error::UnsupportedDegree(d)),
        },
        ComplexKind::Mrbo | ComplexKind::Total => {
            let (r, rv) = ops.expect("operator pair is present");
            let tc = TotalComplex::new(&rep, &r, &rv)?;
            match (&kind, file.degree) {
                (ComplexKind::Mrbo, 1) => tc.partial1(&cochain1_from_file(n, m, &file)?).flatten(),
                (ComplexKind::Mrbo, 2) => tc.partial2(&cochain2_from_file(n, m, &file)?).flatten(),
                (ComplexKind::Total, 1) => tc.d1(&cochain1_from_file(n, m, &file)?).flatten(),
                (ComplexKind::Total, 2) => {
                    tc.d2(&total_cochain2_from_file(n, m, &file)?).flatten()
                }
                (_, d) => return Err(Error::UnsupportedDegree(d)),
            }
        }
    };
    let report = image_report(&label, &image);
    let passed = report.passed;
    let head = format!("{}-cocycle ({})", file.degree, kind_str(&kind));
    Ok(Outcome::new(passed, verdict_text(&head, &report))
        .with("complex", Value::String(kind_str(&kind).into()))
        .with("degree", Value::Number(file.degree.into()))
        .with("report", to_value(&report)))
}

fn kind_str(kind: &ComplexKind) -> &'static str {
    match kind {
        ComplexKind::Ly => "ly",
        ComplexKind::Mrbo => "mrbo",
        ComplexKind::Total => "total",
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_cohomologous(
    algebra: &Path,
    operator: Option<&Path>,
    rep: Option<&Path>,
    left: &Path,
    right: &Path,
    kind: PairKind,
    complex: Option<&str>,
) -> Result<Outcome, Error> {
    let alg = load_algebra(algebra)?;

    let witness: Option<Matrix> = match kind {
        PairKind::Infinitesimal => {
            let op_path = operator.ok_or_else(|| {
                Error::Parse("--operator is required with --kind infinitesimal".into())
            })?;
            let r = load_matrix(op_path)?;
            let base = MrblyAlgebra::new(alg.clone(), r)?;
            let n = alg.dim();
            let a = infinitesimal_from_file(n, &load_json::<InfinitesimalFile>(left)?)?;
            let b = infinitesimal_from_file(n, &load_json::<InfinitesimalFile>(right)?)?;
            deformations_equivalent(&base, &a, &b)?
        }
        PairKind::Cochain => {
            let complex = complex
                .ok_or_else(|| Error::Parse("--complex is required with --kind cochain".into()))?;
            let ckind = parse_complex(complex)?;
            let needs_op = !matches!(ckind, ComplexKind::Ly);
            let (rep, ops) = coefficient_data(&alg, rep, operator, needs_op)?;
            let (n, m) = (rep.dim(), rep.vdim());
            let lf: CochainFile = load_json(left)?;
            let rf: CochainFile = load_json(right)?;
            match ckind {
                ComplexKind::Ly => {
                    let a = cochain2_from_file(n, m, &lf)?;
                    let b = cochain2_from_file(n, m, &rf)?;
                    ly_cohomologous_witness(&rep, &a, &b).map(|h| h.map)
                }
                ComplexKind::Mrbo => {
                    let (r, rv) = ops.expect("operator pair is present");
                    let tc = TotalComplex::new(&rep, &r, &rv)?;
                    let a = cochain2_from_file(n, m, &lf)?;
                    let b = cochain2_from_file(n, m, &rf)?;
                    ly_cohomologous_witness(tc.induced(), &a, &b).map(|h| h.map)
                }
                ComplexKind::Total => {
                    let (r, rv) = ops.expect("operator pair is present");
                    let tc = TotalComplex::new(&rep, &r, &rv)?;
                    let a = total_cochain2_from_file(n, m, &lf)?;
                    let b = total_cochain2_from_file(n, m, &rf)?;
                    tc.cohomologous_witness(&a, &b).map(|h| h.map)
                }
            }
        }
    };

    match witness {
        Some(w) => {
            let doc = matrix_to_file(&w);
            Ok(
                Outcome::new(true, format!("cohomologous: yes\nwitness =\n{w}"))
                    .with("cohomologous", Value::Bool(true))
                    .with("witness", to_value(&doc)),
            )
        }
        None => Ok(Outcome::new(false, "cohomologous: no".into())
            .with("cohomologous", Value::Bool(false))
            .with("witness", Value::Null)),
    }
}

fn cmd_extend(
    algebra: &Path,
    operator: &Path,
    rep: &Path,
    cocycle: &Path,
    out: Option<&Path>,
) -> Result<Outcome, Error> {
    let alg = load_algebra(algebra)?;
    let r = load_matrix(operator)?;
    let (rep, rv) = load_rep(rep, &alg)?;
    let rv = rv.ok_or_else(|| {
        Error::Parse("the representation file must carry \"rv\" (the operator on the fiber)".into())
    })?;
    let file: CochainFile = load_json(cocycle)?;
    let c = total_cochain2_from_file(rep.dim(), rep.vdim(), &file)?;
    let ext = extension_from_cocycle(&rep, &r, &rv, &c)?;
    let doc = extension_to_file(&ext);
    emit_document(&doc, "extension", out, Outcome::new(true, String::new()))
}

fn cmd_extract_cocycle(
    extension: &Path,
    section: Option<&Path>,
    out: Option<&Path>,
) -> Result<Outcome, Error> {
    let ext = extension_from_file(&load_json::<ExtensionFile>(extension)?)?;
    let s = match section {
        Some(p) => load_matrix(p)?,
        None => ext.canonical_section(),
    };
    let cocycle = ext.cocycle_from_section(&s)?;
    let rep = ext.induced_rep()?;
    let rv = ext.fiber_operator()?;
    let doc = json!({
        "representation": to_value(&rep_to_file(&rep, Some(&rv))),
        "fiber_operator": to_value(&matrix_to_file(&rv)),
        "cocycle": to_value(&total_cochain2_to_file(&cocycle)),
    });
    let mut outcome = Outcome::new(true, String::new());
    match out {
        Some(path) => {
            write_doc(path, &doc)?;
            outcome.text = format!("wrote {}", path.display());
            outcome
                .json
                .insert("written".into(), Value::String(path.display().to_string()));
        }
        None => {
            outcome.text = canonical_doc(&doc).trim_end().to_string();
        }
    }
    if let Value::Object(fields) = doc {
        outcome.json.extend(fields);
    }
    Ok(outcome)
}

fn cmd_search_operators(
    algebra: &Path,
    candidates: &str,
    kind: &str,
    budget: u64,
    threads: usize,
) -> Result<Outcome, Error> {
    let alg = load_algebra(algebra)?;
    let kind = parse_kind(kind)?;
    let pool: Vec<Scalar> = candidates
        .split(',')
        .map(parse_scalar)
        .collect::<Result<_, _>>()?;
    let hits = search_operators_with_threads(&alg, &pool, kind, budget, threads)?;
    let mut text = format!("operators found: {}", hits.len());
    for m in &hits {
        text.push('\n');
        text.push_str(m.to_string().trim_end());
    }
    let docs: Vec<Value> = hits.iter().map(|m| to_value(&matrix_to_file(m))).collect();
    Ok(Outcome::new(true, text)
        .with("kind", Value::String(kind.as_str().into()))
        .with("count", Value::Number(hits.len().into()))
        .with("operators", Value::Array(docs)))
}

// ---------------------------------------------------------------------------
// Built-in examples

struct ExampleRequest {
    name: Option<String>,
    k: Option<String>,
    k1: Option<String>,
    a: Option<String>,
    b: Option<String>,
    c: Option<String>,
    f: Option<String>,
    i: Option<String>,
    dim: usize,
    out: Option<PathBuf>,
}

fn example_names() -> Vec<String> {
    let mut names: Vec<String> = named_algebras().iter().map(|(n, _)| n.to_string()).collect();
    names.extend(named_algebras().iter().map(|(n, _)| format!("{n}-adjoint")));
    names.extend(named_operators().iter().map(|(n, _, _)| n.to_string()));
    names.push("id".into());
    names.push("zero".into());
    names
}

fn scalar_arg(raw: &Option<String>, default: Scalar) -> Result<Scalar, Error> {
    match raw {
        Some(s) => parse_scalar(s),
        None => Ok(default),
    }
}

fn cmd_examples(req: ExampleRequest) -> Result<Outcome, Error> {
    let name = match &req.name {
        Some(n) => n.clone(),
        None => {
            let names = example_names();
            let text = format!("known example names:\n  {}", names.join("\n  "));
            let json_names = Value::Array(names.into_iter().map(Value::String).collect());
            return Ok(Outcome::new(true, text).with("names", json_names));
        }
    };

    let (doc, kind): (Value, &str) = build_example(&name, &req)?;
    let path = req
        .out
        .clone()
        .unwrap_or_else(|| PathBuf::from(format!("{name}.json")));
    write_doc(&path, &doc)?;
    Ok(
        Outcome::new(true, format!("wrote {} ({kind})", path.display()))
            .with("name", Value::String(name))
            .with("kind", Value::String(kind.into()))
            .with("written", Value::String(path.display().to_string())),
    )
}

/// Builds one named example document, verifying it against its checker
/// before anything is written.
fn build_example(name: &str, req: &ExampleRequest) -> Result<(Value, &'static str), Error> {
    // Plain algebra names.
    if let Some((_, alg)) = named_algebras().into_iter().find(|(n, _)| *n == name) {
        let report = alg.check_ly_axioms();
        if !report.passed {
            return Err(Error::PreconditionFailed {
                check: "emitted example algebra",
                report,
            });
        }
        return Ok((to_value(&algebra_to_file(&alg)), "algebra"));
    }

    // Adjoint representation of a named algebra.
    if let Some(base) = name.strip_suffix("-adjoint") {
        if let Some((_, alg)) = named_algebras().into_iter().find(|(n, _)| *n == base) {
            let rep = Representation::adjoint(&alg);
            let report = check_representation(&rep);
            if !report.passed {
                return Err(Error::PreconditionFailed {
                    check: "emitted adjoint representation",
                    report,
                });
            }
            return Ok((to_value(&rep_to_file(&rep, None)), "representation"));
        }
    }

    // Operator family members with adjustable parameters.
    let paired: Option<(Matrix, &'static str)> = match name {
        "ly2-op" => {
            let k = scalar_arg(&req.k, int(2))?;
            let k1 = scalar_arg(&req.k1, int(3))?;
            Some((operator_family_two_dim(&k, &k1), "ly2"))
        }
        "ly3-op" => {
            let a = scalar_arg(&req.a, lyt::scalar::frac(1, 2))?;
            let b = scalar_arg(&req.b, lyt::scalar::frac(1, 2))?;
            let c = scalar_arg(&req.c, int(1))?;
            let f = scalar_arg(&req.f, int(-1))?;
            let i = scalar_arg(&req.i, int(2))?;
            Some((operator_family_three_dim(&a, &b, &c, &f, &i)?, "ly3"))
        }
        _ => named_operators()
            .into_iter()
            .find(|(n, _, _)| *n == name)
            .map(|(_, alg_name, m)| (m, alg_name)),
    };
    if let Some((m, alg_name)) = paired {
        let alg = lyt::corpus::algebra_by_name(alg_name)?;
        let report = check_operator(&alg, &m, OperatorKind::ModifiedRotaBaxter)?;
        if !report.passed {
            return Err(Error::PreconditionFailed {
                check: "emitted example operator",
                report,
            });
        }
        return Ok((to_value(&matrix_to_file(&m)), "operator"));
    }

    // Generic building-block matrices (no paired algebra, no identity to
    // hold; "zero" in particular is the stock counterexample input).
    match name {
        "id" => {
            return Ok((
                to_value(&matrix_to_file(&Matrix::identity(req.dim))),
                "operator",
            ))
        }
        "zero" => {
            return Ok((
                to_value(&matrix_to_file(&Matrix::zeros(req.dim, req.dim))),
                "operator",
            ))
        }
        _ => {}
    }

    Err(Error::Parse(format!(
        "unknown example name {name:?}; known names: {}",
        example_names().join(", ")
    )))
}
