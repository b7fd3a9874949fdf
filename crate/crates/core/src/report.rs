//! Verdicts, witnesses and the text/JSON rendering shared by every check.

use std::fmt::{self, Write as _};

use rayon::prelude::*;
use serde_json::{json, Value as JsonValue};

use crate::identity::Residual;
use crate::scalar::Scalar;
use crate::tensor::{Matrix, Tensor3, Vector};

/// How many violating tuples a finding keeps beyond the count.
pub const WITNESS_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
}

impl Verdict {
    pub fn from_bool(holds: bool) -> Self {
        if holds {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }

    pub fn holds(self) -> bool {
        self == Verdict::Holds
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
        }
    }
}

/// The value one side of a law takes at a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(Scalar),
    Vector(Vector),
    /// Two-leg tensor `Σ m[i][j] e_i⊗e_j`.
    Legs2(Matrix),
    /// Three-leg tensor `Σ t[i][j][k] e_i⊗e_j⊗e_k`.
    Legs3(Tensor3),
}

impl Value {
    pub fn is_zero(&self) -> bool {
        match self {
            Value::Scalar(s) => s.is_zero(),
            Value::Vector(v) => v.is_zero(),
            Value::Legs2(m) => m.is_zero(),
            Value::Legs3(t) => t.is_zero(),
        }
    }

    pub fn sub(&self, other: &Value) -> Value {
        let minus = Scalar::from_int(-1);
        match (self, other) {
            (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(a - b),
            (Value::Vector(a), Value::Vector(b)) => Value::Vector(a.sub(b)),
            (Value::Legs2(a), Value::Legs2(b)) => Value::Legs2(a.sub(b)),
            (Value::Legs3(a), Value::Legs3(b)) => {
                let mut t = a.clone();
                t.add_scaled(&minus, b);
                Value::Legs3(t)
            }
            _ => panic!("subtracting values of different kinds"),
        }
    }

    pub fn to_json(&self) -> JsonValue {
        match self {
            Value::Scalar(s) => json!(s.to_string()),
            Value::Vector(v) => vector_json(v),
            Value::Legs2(m) => JsonValue::Array(m.iter().map(|((i, j), s)| json!([i, j, s.to_string()])).collect()),
            Value::Legs3(t) => JsonValue::Array(t.iter().map(|((i, j, k), s)| json!([i, j, k, s.to_string()])).collect()),
        }
    }
}

impl From<Scalar> for Value {
    fn from(s: Scalar) -> Self {
        Value::Scalar(s)
    }
}

impl From<Vector> for Value {
    fn from(v: Vector) -> Self {
        Value::Vector(v)
    }
}

impl From<Matrix> for Value {
    fn from(m: Matrix) -> Self {
        Value::Legs2(m)
    }
}

impl From<Tensor3> for Value {
    fn from(t: Tensor3) -> Self {
        Value::Legs3(t)
    }
}

fn fmt_legs<'a>(f: &mut fmt::Formatter<'_>, entries: impl Iterator<Item = (String, &'a Scalar)>) -> fmt::Result {
    let mut empty = true;
    for (name, s) in entries {
        if !empty {
            f.write_str(if s.is_negative() { " - " } else { " + " })?;
        } else if s.is_negative() {
            f.write_str("-")?;
        }
        let m = s.abs();
        if m.is_one() {
            f.write_str(&name)?;
        } else {
            write!(f, "({m}){name}")?;
        }
        empty = false;
    }
    if empty {
        f.write_str("0")?;
    }
    Ok(())
}

/// Scalars print as `p/q`, vectors as `(1/2)e3`, tensors as `e0⊗e1 + (1/2)e1⊗e0`.
impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(s) => write!(f, "{s}"),
            Value::Vector(v) => write!(f, "{v}"),
            Value::Legs2(m) => fmt_legs(f, m.iter().map(|((i, j), s)| (format!("e{i}⊗e{j}"), s))),
            Value::Legs3(t) => fmt_legs(f, t.iter().map(|((i, j, k), s)| (format!("e{i}⊗e{j}⊗e{k}"), s))),
        }
    }
}

/// A violating input: the basis elements substituted (rendered as labels such
/// as `e1`, `f0` or `v2`) and what the two sides evaluated to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub tuple: Vec<String>,
    /// Absent for one-sided laws `Σ terms = 0`.
    pub sides: Option<(Value, Value)>,
    pub residual: Value,
}

impl Witness {
    pub fn from_sides(tuple: Vec<String>, lhs: impl Into<Value>, rhs: impl Into<Value>) -> Self {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        let residual = lhs.sub(&rhs);
        Witness { tuple, sides: Some((lhs, rhs)), residual }
    }

    pub fn from_residual(tuple: Vec<String>, residual: impl Into<Value>) -> Self {
        Witness { tuple, sides: None, residual: residual.into() }
    }

    /// Witness for an identity residual; `two_sided` keeps `lhs vs rhs`.
    pub fn from_identity(r: &Residual, two_sided: bool) -> Self {
        let tuple = r.assignment.iter().map(|i| format!("e{i}")).collect();
        if two_sided {
            Witness::from_sides(tuple, r.lhs.clone(), r.rhs.clone())
        } else {
            Witness::from_residual(tuple, r.value.clone())
        }
    }

    pub fn tuple_text(&self) -> String {
        format!("({})", self.tuple.join(","))
    }

    pub fn to_json(&self) -> JsonValue {
        let mut obj = json!({
            "tuple": self.tuple,
            "residual": self.residual.to_json(),
        });
        if let Some((l, r)) = &self.sides {
            obj["lhs"] = l.to_json();
            obj["rhs"] = r.to_json();
        }
        obj
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.sides {
            Some((l, r)) => write!(f, "{}: {l} vs {r}", self.tuple_text()),
            None => write!(f, "{}: residual {}", self.tuple_text(), self.residual),
        }
    }
}

/// Sparse `[[index, "p/q"], ...]`.
pub fn vector_json(v: &Vector) -> JsonValue {
    JsonValue::Array(v.iter().map(|(i, s)| json!([i, s.to_string()])).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Finding {
    pub claim: String,
    /// The law or condition being tested, in readable form.
    pub statement: String,
    pub verdict: Verdict,
    /// Total number of violating inputs.
    pub violations: usize,
    /// Up to [`WITNESS_CAP`] violations in canonical order; the first is the witness.
    pub witnesses: Vec<Witness>,
    pub note: Option<String>,
}

impl Finding {
    pub fn new(claim: impl Into<String>, statement: impl Into<String>, all: impl IntoIterator<Item = Witness>) -> Self {
        let mut witnesses = Vec::new();
        let mut violations = 0;
        for w in all {
            if witnesses.len() < WITNESS_CAP {
                witnesses.push(w);
            }
            violations += 1;
        }
        Finding {
            claim: claim.into(),
            statement: statement.into(),
            verdict: Verdict::from_bool(violations == 0),
            violations,
            witnesses,
            note: None,
        }
    }

    pub fn holds(claim: impl Into<String>, statement: impl Into<String>) -> Self {
        Finding::new(claim, statement, std::iter::empty())
    }

    /// A boolean outcome with no per-tuple witness.
    pub fn flag(claim: impl Into<String>, statement: impl Into<String>, holds: bool) -> Self {
        let mut f = Finding::holds(claim, statement);
        if !holds {
            f.verdict = Verdict::Fails;
            f.violations = 1;
        }
        f
    }

    /// Evaluate a law at every tuple of basis indices, lexicographically.
    ///
    /// `slots` gives each position's label prefix and dimension; `eval`
    /// returns the two sides at one tuple. Runs on the current rayon pool;
    /// the result does not depend on the number of workers.
    pub fn scan<F>(claim: impl Into<String>, statement: impl Into<String>, slots: &[(&str, usize)], eval: F) -> Self
    where
        F: Fn(&[usize]) -> (Value, Value) + Sync,
    {
        let total = slots.iter().try_fold(1usize, |acc, (_, d)| acc.checked_mul(*d)).expect("tuple count overflows usize");
        let found: Vec<Witness> = (0..total)
            .into_par_iter()
            .filter_map(|mut t| {
                let mut idx = vec![0; slots.len()];
                for (slot, (_, d)) in idx.iter_mut().zip(slots).rev() {
                    *slot = t % d;
                    t /= d;
                }
                let (lhs, rhs) = eval(&idx);
                (lhs != rhs).then(|| {
                    let tuple = idx.iter().zip(slots).map(|(i, (p, _))| format!("{p}{i}")).collect();
                    Witness::from_sides(tuple, lhs, rhs)
                })
            })
            .collect();
        Finding::new(claim, statement, found)
    }

    pub fn from_residuals(claim: impl Into<String>, statement: impl Into<String>, residuals: &[Residual], two_sided: bool) -> Self {
        Finding::new(claim, statement, residuals.iter().map(|r| Witness::from_identity(r, two_sided)))
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witnesses.first()
    }

    pub fn passed(&self) -> bool {
        self.verdict.holds()
    }

    pub fn to_json(&self) -> JsonValue {
        let mut obj = json!({
            "claim": self.claim,
            "statement": self.statement,
            "verdict": self.verdict.as_str(),
            "violations": self.violations,
            "witness": self.witness().map_or(JsonValue::Null, Witness::to_json),
        });
        if self.witnesses.len() > 1 {
            obj["more_witnesses"] = JsonValue::Array(self.witnesses[1..].iter().map(Witness::to_json).collect());
        }
        if let Some(n) = &self.note {
            obj["note"] = json!(n);
        }
        obj
    }

    fn write_text(&self, out: &mut String) {
        let verdict = if self.passed() { "HOLDS" } else { "FAILS" };
        let _ = writeln!(out, "{}: {verdict}  [{}]", self.claim, self.statement);
        if let Some(n) = &self.note {
            let _ = writeln!(out, "  note: {n}");
        }
        for (n, w) in self.witnesses.iter().enumerate() {
            let _ = writeln!(out, "  {} {w}", if n == 0 { "witness" } else { "also" });
        }
        if self.violations > self.witnesses.len() {
            let _ = writeln!(out, "  ... {} violations in total", self.violations);
        }
    }
}

/// An ordered list of findings about one subject.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub kind: String,
    pub subject: String,
    /// Set when the subject fails the report's standing hypothesis; the
    /// findings are still computed.
    pub vacuous: bool,
    pub notes: Vec<String>,
    pub findings: Vec<Finding>,
}

impl Report {
    pub fn new(kind: impl Into<String>, subject: impl Into<String>) -> Self {
        Report { kind: kind.into(), subject: subject.into(), vacuous: false, notes: Vec::new(), findings: Vec::new() }
    }

    pub fn push(&mut self, f: Finding) {
        self.findings.push(f);
    }

    pub fn extend(&mut self, fs: impl IntoIterator<Item = Finding>) {
        self.findings.extend(fs);
    }

    pub fn all_hold(&self) -> bool {
        self.findings.iter().all(Finding::passed)
    }

    pub fn finding(&self, claim: &str) -> Option<&Finding> {
        self.findings.iter().find(|f| f.claim == claim)
    }

    pub fn to_json(&self) -> JsonValue {
        json!({
            "kind": self.kind,
            "subject": self.subject,
            "vacuous": self.vacuous,
            "notes": self.notes,
            "findings": self.findings.iter().map(Finding::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {}: {}", self.kind, self.subject);
        if self.vacuous {
            let _ = writeln!(out, "(vacuous: the subject does not satisfy the standing hypothesis)");
        }
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        for f in &self.findings {
            f.write_text(&mut out);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_rendering() {
        let w = Witness::from_sides(
            vec!["e1".into(), "e0".into(), "e2".into()],
            Vector::basis(4, 3).scaled(&Scalar::frac(1, 3)),
            Vector::basis(4, 3).scaled(&Scalar::frac(2, 3)),
        );
        assert_eq!(w.to_string(), "(e1,e0,e2): (1/3)e3 vs (2/3)e3");
        assert_eq!(w.residual, Value::Vector(Vector::basis(4, 3).scaled(&Scalar::frac(-1, 3))));
        let j = w.to_json();
        assert_eq!(j["residual"], json!([[3, "-1/3"]]));
    }

    #[test]
    fn tensor_values_render_as_legs() {
        let t = Tensor3::from_entries((3, 3, 3), [((0, 1, 2), Scalar::one()), ((1, 0, 2), Scalar::frac(-1, 2))]).unwrap();
        assert_eq!(Value::from(t).to_string(), "e0⊗e1⊗e2 - (1/2)e1⊗e0⊗e2");
        let m = Matrix::from_entries(2, 2, [((1, 0), Scalar::from_int(3))]).unwrap();
        assert_eq!(Value::from(m.clone()).to_string(), "(3)e1⊗e0");
        assert_eq!(Value::from(m).to_json(), json!([[1, 0, "3"]]));
        assert_eq!(Value::from(Scalar::frac(2, 4)).to_string(), "1/2");
        assert_eq!(Value::from(Matrix::zeros(2, 2)).to_string(), "0");
    }

    #[test]
    fn scan_orders_tuples_lexicographically() {
        let f = Finding::scan("c", "x + y = 2", &[("e", 3), ("f", 2)], |t| {
            (Value::from(Scalar::from_int((t[0] + t[1]) as i64)), Value::from(Scalar::from_int(2)))
        });
        assert_eq!(f.violations, 4);
        let tuples: Vec<String> = f.witnesses.iter().map(Witness::tuple_text).collect();
        assert_eq!(tuples, ["(e0,f0)", "(e0,f1)", "(e1,f0)", "(e2,f1)"]);
        assert!(Finding::scan("c", "s", &[("e", 0)], |_| unreachable!()).passed());
    }

    #[test]
    fn findings_cap_witnesses_but_count_all() {
        let ws = (0..40).map(|i| Witness::from_residual(vec![format!("e{i}")], Vector::basis(1, 0)));
        let f = Finding::new("c", "s", ws);
        assert_eq!(f.violations, 40);
        assert_eq!(f.witnesses.len(), WITNESS_CAP);
        assert!(!f.passed());
        assert!(Finding::holds("c", "s").passed());
        assert!(!Finding::flag("c", "s", false).passed());
    }
}
