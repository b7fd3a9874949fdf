//! Command-line front end: `check`, `audit`, `construct` and `model`.
//!
//! Exit codes: 0 when every check holds (always for `audit`, `construct`
//! and `model` once evaluation completes), 1 when a check finds a
//! violation, 2 on any input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::AlgebraTable;
use crate::audit::{audit_selected, detect_orientation};
use crate::bialgebra::{bialgebra_double, check_coproduct_bialgebra, check_manin_triple, dual_reps, equivalence_audit, BialgebraCandidate};
use crate::bimodule::{bimodule_audit, check_bimodule, check_derived_relations, semidirect_sum, Bimodule};
use crate::coalgebra::{
    check_aux_coalgebra_identities, check_cocomm_coassoc, check_co_left, check_co_right, check_lie_coalgebra, coalgebra_proposition_audit,
    dualize, dualize_co, opposite_coproduct,
};
use crate::error::{Error, Result};
use crate::identity::{catalog_entry, evaluate, parse_identity, Identity};
use crate::io::Object;
use crate::matched_pair::{check_matched_pair, double, induced_commassoc_pair, induced_lie_pair, matched_pair_audit, MatchedPairData};
use crate::models::{ModelSpec, Orientation};
use crate::report::{Finding, Report};

#[derive(Parser, Debug)]
#[command(name = "zinbiel", version, about = "Exact checks for Zinbiel algebras and their relatives")]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Worker threads for evaluation; output does not depend on it.
    #[arg(long, global = true)]
    pub parallel: Option<usize>,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check one law on a JSON object.
    ///
    /// Algebras take a catalog name or an identity such as
    /// "(x (y z)) = ((x y) z) + ((y x) z)". Other kinds take a check name:
    /// coalgebra: co_right, co_left, cocomm_coassoc, lie_coalgebra, identities, propositions;
    /// bimodule: bimodule, derived, semidirect;
    /// matched_pair: matched_pair, double, commassoc, lie;
    /// bialgebra_candidate: manin_triple, matched_pair, bialgebra, equivalence.
    Check { file: PathBuf, check: Option<String> },
    /// Evaluate every claim about a JSON object or a built-in model.
    Audit {
        file: Option<PathBuf>,
        /// Built-in model such as trunc-int:right:5, trunc-int:left:3, free:2:3 or zero:3.
        #[arg(long)]
        model: Option<String>,
        /// Orientation the algebra is supposed to satisfy.
        #[arg(long)]
        orientation: Option<Orientation>,
        /// Comma-separated claim names (algebras only).
        #[arg(long, value_delimiter = ',')]
        claims: Option<Vec<String>>,
    },
    /// Build a new object from input files and print it as canonical JSON.
    Construct {
        #[arg(value_enum)]
        kind: ConstructKind,
        inputs: Vec<PathBuf>,
    },
    /// Print a built-in model as algebra JSON.
    Model { spec: String },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConstructKind {
    Opposite,
    Symmetrize,
    Commutator,
    Semidirect,
    Double,
    Dual,
    BialgebraDouble,
    RegularBimodule,
    DualReps,
    Candidate,
}

/// Parses arguments, runs, and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

pub fn execute(cli: &Cli) -> Result<i32> {
    match cli.parallel {
        Some(0) => Err(Error::Input("--parallel must be at least 1".into())),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(n).build().map_err(|e| Error::Input(e.to_string()))?;
            pool.install(|| dispatch(cli))
        }
        None => dispatch(cli),
    }
}

fn dispatch(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Check { file, check } => {
            let obj = Object::load(file)?;
            let report = check_object(&obj, check.as_deref(), &file.display().to_string())?;
            emit_report(cli, &report)?;
            Ok(if report.all_hold() { 0 } else { 1 })
        }
        Command::Audit { file, model, orientation, claims } => {
            let report = audit(file.as_deref(), model.as_deref(), *orientation, claims.as_deref())?;
            emit_report(cli, &report)?;
            Ok(0)
        }
        Command::Construct { kind, inputs } => {
            let obj = construct(*kind, inputs)?;
            emit(cli, &obj.to_canonical_string())?;
            Ok(0)
        }
        Command::Model { spec } => {
            let spec: ModelSpec = spec.parse()?;
            emit(cli, &Object::Algebra(spec.build()?).to_canonical_string())?;
            Ok(0)
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.out {
        Some(p) => std::fs::write(p, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn emit_report(cli: &Cli, r: &Report) -> Result<()> {
    let text = match cli.format {
        Format::Text => r.to_text(),
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&r.to_json())?),
    };
    emit(cli, &text)
}

fn lookup_identity(spec: &str) -> Result<(String, Identity)> {
    match catalog_entry(spec) {
        Ok(id) => Ok((spec.to_string(), id.clone())),
        Err(_) if spec.contains('=') => Ok(("identity".to_string(), parse_identity(spec)?)),
        Err(e) => Err(e),
    }
}

fn mismatch(kind: &str, check: &str) -> Error {
    Error::Input(format!("check {check:?} does not apply to a {kind}"))
}

fn single(name: &str, f: Finding, subject: &str) -> Report {
    let mut r = Report::new(name, subject);
    r.push(f);
    r
}

/// Runs one named check on a loaded object.
pub fn check_object(obj: &Object, check: Option<&str>, subject: &str) -> Result<Report> {
    let kind = obj.kind();
    match obj {
        Object::Algebra(a) => {
            let spec = check.ok_or_else(|| Error::Input("an identity name or expression is required for an algebra".into()))?;
            let (name, id) = lookup_identity(spec)?;
            let f = Finding::from_residuals(name, id.to_string(), &evaluate(a, &id), !id.rhs().is_empty());
            Ok(single("check", f, subject))
        }
        Object::Coalgebra(c) => match check.unwrap_or("co_right") {
            "co_right" => Ok(single("check", check_co_right(c), subject)),
            "co_left" => Ok(single("check", check_co_left(c), subject)),
            "cocomm_coassoc" => Ok(check_cocomm_coassoc(c)),
            "lie_coalgebra" => Ok(check_lie_coalgebra(c)),
            "identities" => Ok(check_aux_coalgebra_identities(c)),
            "propositions" => Ok(coalgebra_proposition_audit(c)),
            other => Err(mismatch(kind, other)),
        },
        Object::Bimodule(b) => match check.unwrap_or("bimodule") {
            "bimodule" => Ok(check_bimodule(b)),
            "derived" => Ok(check_derived_relations(b)),
            "semidirect" => Ok(semidirect_report(b, subject)),
            other => Err(mismatch(kind, other)),
        },
        Object::MatchedPair(mp) => match check.unwrap_or("matched_pair") {
            "matched_pair" => Ok(check_matched_pair(mp)),
            "double" => Ok(double_report(mp, subject)),
            "commassoc" => Ok(induced_commassoc_pair(mp)),
            "lie" => Ok(induced_lie_pair(mp)),
            other => Err(mismatch(kind, other)),
        },
        Object::Bialgebra(bc) => match check.unwrap_or("manin_triple") {
            "manin_triple" => Ok(check_manin_triple(bc)),
            "matched_pair" => Ok(check_matched_pair(&dual_reps(bc))),
            "bialgebra" => Ok(check_coproduct_bialgebra(bc)),
            "equivalence" => Ok(equivalence_audit(bc).report),
            other => Err(mismatch(kind, other)),
        },
    }
}

fn right_zinbiel_finding(claim: &str, t: &AlgebraTable) -> Finding {
    let id = catalog_entry("right_zinbiel").expect("catalog entry");
    Finding::from_residuals(claim, id.to_string(), &evaluate(t, id), true)
}

fn semidirect_report(b: &Bimodule, subject: &str) -> Report {
    let s = semidirect_sum(b);
    single("check", right_zinbiel_finding("semidirect_right_zinbiel", &s).with_note(format!("on A ⊕ V, dimension {}", s.dim())), subject)
}

fn double_report(mp: &MatchedPairData, subject: &str) -> Report {
    let d = double(mp);
    single("check", right_zinbiel_finding("double_right_zinbiel", &d).with_note(format!("on A ⊕ B, dimension {}", d.dim())), subject)
}

fn audit(file: Option<&Path>, model: Option<&str>, orientation: Option<Orientation>, claims: Option<&[String]>) -> Result<Report> {
    let (obj, subject, attributed) = match (file, model) {
        (Some(_), Some(_)) => return Err(Error::Input("give either a file or --model, not both".into())),
        (None, None) => return Err(Error::Input("audit needs a file or --model".into())),
        (None, Some(m)) => {
            let spec: ModelSpec = m.parse()?;
            (Object::Algebra(spec.build()?), spec.to_string(), spec.orientation())
        }
        (Some(f), None) => (Object::load(f)?, f.display().to_string(), None),
    };
    if claims.is_some() && !matches!(obj, Object::Algebra(_)) {
        return Err(Error::Input("--claims applies to algebras only".into()));
    }
    match obj {
        Object::Algebra(a) => {
            let o = orientation.or(attributed).or_else(|| detect_orientation(&a)).unwrap_or(Orientation::Right);
            audit_selected(&a, o, &subject, claims)
        }
        Object::Coalgebra(c) => {
            let mut r = check_aux_coalgebra_identities(&c);
            r.subject = subject;
            r.kind = "coalgebra_audit".into();
            r.extend(coalgebra_proposition_audit(&c).findings);
            Ok(r)
        }
        Object::Bimodule(b) => Ok(bimodule_audit(&b, &subject)),
        Object::MatchedPair(mp) => Ok(matched_pair_audit(&mp, &subject)),
        Object::Bialgebra(bc) => {
            let mut r = equivalence_audit(&bc).report;
            r.subject = subject;
            Ok(r)
        }
    }
}

fn expect_inputs(kind: ConstructKind, inputs: &[PathBuf], n: usize) -> Result<Vec<Object>> {
    if inputs.len() != n {
        return Err(Error::Input(format!("construct {kind:?} takes {n} input file(s), got {}", inputs.len())));
    }
    inputs.iter().map(|p| Object::load(p)).collect()
}

fn wrong_kind(kind: ConstructKind, obj: &Object) -> Error {
    Error::Input(format!("construct {kind:?} does not accept a {}", obj.kind()))
}

/// Builds the requested object from loaded inputs.
pub fn construct(kind: ConstructKind, inputs: &[PathBuf]) -> Result<Object> {
    if kind == ConstructKind::Candidate {
        let objs = expect_inputs(kind, inputs, 2)?;
        return match (&objs[0], &objs[1]) {
            (Object::Algebra(a), Object::Algebra(s)) => Ok(Object::Bialgebra(BialgebraCandidate::new(a.clone(), s.clone())?)),
            (o, _) => Err(wrong_kind(kind, o)),
        };
    }
    let obj = expect_inputs(kind, inputs, 1)?.remove(0);
    construct_from(kind, &obj)
}

pub fn construct_from(kind: ConstructKind, obj: &Object) -> Result<Object> {
    use ConstructKind as K;
    let out = match (kind, obj) {
        (K::Opposite, Object::Algebra(a)) => Object::Algebra(a.opposite()),
        (K::Opposite, Object::Coalgebra(c)) => Object::Coalgebra(opposite_coproduct(c)),
        (K::Symmetrize, Object::Algebra(a)) => Object::Algebra(a.symmetrize()),
        (K::Commutator, Object::Algebra(a)) => Object::Algebra(a.commutator()),
        (K::Semidirect, Object::Bimodule(b)) => Object::Algebra(semidirect_sum(b)),
        (K::Semidirect, Object::Algebra(a)) => Object::Algebra(semidirect_sum(&Bimodule::regular(a))),
        (K::Double, Object::MatchedPair(mp)) => Object::Algebra(double(mp)),
        (K::Dual, Object::Algebra(a)) => Object::Coalgebra(dualize(a)),
        (K::Dual, Object::Coalgebra(c)) => Object::Algebra(dualize_co(c)),
        (K::BialgebraDouble, Object::Bialgebra(bc)) => Object::Algebra(bialgebra_double(bc)),
        (K::RegularBimodule, Object::Algebra(a)) => Object::Bimodule(Bimodule::regular(a)),
        (K::DualReps, Object::Bialgebra(bc)) => Object::MatchedPair(dual_reps(bc)),
        (_, o) => return Err(wrong_kind(kind, o)),
    };
    Ok(out)
}
