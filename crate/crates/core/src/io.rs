//! Canonical JSON for every object kind.
//!
//! Scalars are strings `"p"` or `"p/q"`, sparse entries are index tuples
//! followed by the scalar, and output lists entries in index order with
//! object keys sorted, so equal objects serialize to identical bytes.
//! Duplicate entries on input are errors.

use std::path::Path;

use serde_json::{json, Map, Value as JsonValue};

use crate::algebra::AlgebraTable;
use crate::bialgebra::BialgebraCandidate;
use crate::bimodule::Bimodule;
use crate::coalgebra::CoalgebraTable;
use crate::error::{Error, Result};
use crate::matched_pair::MatchedPairData;
use crate::scalar::Scalar;
use crate::tensor::{Matrix, Tensor3};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Algebra(AlgebraTable),
    Coalgebra(CoalgebraTable),
    Bimodule(Bimodule),
    MatchedPair(MatchedPairData),
    Bialgebra(BialgebraCandidate),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Algebra(_) => "algebra",
            Object::Coalgebra(_) => "coalgebra",
            Object::Bimodule(_) => "bimodule",
            Object::MatchedPair(_) => "matched_pair",
            Object::Bialgebra(_) => "bialgebra_candidate",
        }
    }

    pub fn to_json(&self) -> JsonValue {
        match self {
            Object::Algebra(a) => algebra_json(a),
            Object::Coalgebra(c) => json!({"kind": "coalgebra", "dim": c.dim(), "coproduct": tensor_json(c.coproduct())}),
            Object::Bimodule(b) => json!({
                "kind": "bimodule",
                "algebra": algebra_json(b.base()),
                "v_dim": b.v_dim(),
                "l": family_json(b.l()),
                "r": family_json(b.r()),
            }),
            Object::MatchedPair(mp) => json!({
                "kind": "matched_pair",
                "A": algebra_json(&mp.a),
                "B": algebra_json(&mp.b),
                "lA": family_json(&mp.l_a),
                "rA": family_json(&mp.r_a),
                "lB": family_json(&mp.l_b),
                "rB": family_json(&mp.r_b),
            }),
            Object::Bialgebra(bc) => json!({"kind": "bialgebra_candidate", "A": algebra_json(&bc.a), "Astar": algebra_json(&bc.astar)}),
        }
    }

    pub fn from_json(v: &JsonValue) -> Result<Self> {
        let obj = as_object(v, "top level")?;
        let kind = obj.get("kind").and_then(JsonValue::as_str).ok_or_else(|| input("missing string field \"kind\""))?;
        match kind {
            "algebra" => Ok(Object::Algebra(algebra_from(v)?)),
            "coalgebra" => {
                let dim = count(obj, "dim")?;
                let t = tensor_from(field(obj, "coproduct")?, (dim, dim, dim), "coproduct")?;
                Ok(Object::Coalgebra(CoalgebraTable::new(t)?))
            }
            "bimodule" => {
                let base = algebra_from(field(obj, "algebra")?)?;
                let m = count(obj, "v_dim")?;
                let n = base.dim();
                let l = family_from(field(obj, "l")?, n, m, m, "l")?;
                let r = family_from(field(obj, "r")?, n, m, m, "r")?;
                Ok(Object::Bimodule(Bimodule::new(base, m, l, r)?))
            }
            "matched_pair" => {
                let a = algebra_from(field(obj, "A")?)?;
                let b = algebra_from(field(obj, "B")?)?;
                let (n, p) = (a.dim(), b.dim());
                let l_a = family_from(field(obj, "lA")?, n, p, p, "lA")?;
                let r_a = family_from(field(obj, "rA")?, n, p, p, "rA")?;
                let l_b = family_from(field(obj, "lB")?, p, n, n, "lB")?;
                let r_b = family_from(field(obj, "rB")?, p, n, n, "rB")?;
                Ok(Object::MatchedPair(MatchedPairData::new(a, b, l_a, r_a, l_b, r_b)?))
            }
            "bialgebra_candidate" => {
                let a = algebra_from(field(obj, "A")?)?;
                let astar = algebra_from(field(obj, "Astar")?)?;
                Ok(Object::Bialgebra(BialgebraCandidate::new(a, astar)?))
            }
            other => Err(input(format!("unknown kind {other:?}"))),
        }
    }

    /// Compact canonical form with a trailing newline.
    pub fn to_canonical_string(&self) -> String {
        let mut s = self.to_json().to_string();
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        Object::from_json(&serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Object::parse(&std::fs::read_to_string(path)?)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_canonical_string())?;
        Ok(())
    }
}

fn input(msg: impl Into<String>) -> Error {
    Error::Input(msg.into())
}

fn as_object<'a>(v: &'a JsonValue, what: &str) -> Result<&'a Map<String, JsonValue>> {
    v.as_object().ok_or_else(|| input(format!("{what} must be a JSON object")))
}

fn field<'a>(obj: &'a Map<String, JsonValue>, name: &str) -> Result<&'a JsonValue> {
    obj.get(name).ok_or_else(|| input(format!("missing field {name:?}")))
}

fn count(obj: &Map<String, JsonValue>, name: &str) -> Result<usize> {
    field(obj, name)?
        .as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| input(format!("field {name:?} must be a nonnegative integer")))
}

fn tensor_json(t: &Tensor3) -> JsonValue {
    JsonValue::Array(t.iter().map(|((i, j, k), s)| json!([i, j, k, s.to_string()])).collect())
}

fn family_json(fam: &[Matrix]) -> JsonValue {
    let mut out = Vec::new();
    for (i, m) in fam.iter().enumerate() {
        out.extend(m.iter().map(|((r, c), s)| json!([i, r, c, s.to_string()])));
    }
    JsonValue::Array(out)
}

pub fn algebra_json(a: &AlgebraTable) -> JsonValue {
    json!({"kind": "algebra", "dim": a.dim(), "basis": a.basis(), "structure": tensor_json(a.structure())})
}

fn entry(v: &JsonValue, what: &str) -> Result<((usize, usize, usize), Scalar)> {
    let bad = || input(format!("{what} entries must be [int, int, int, \"p/q\"], got {v}"));
    let arr = v.as_array().filter(|a| a.len() == 4).ok_or_else(bad)?;
    let idx = |n: usize| arr[n].as_u64().and_then(|x| usize::try_from(x).ok()).ok_or_else(bad);
    let s: Scalar = arr[3].as_str().ok_or_else(bad)?.parse()?;
    Ok(((idx(0)?, idx(1)?, idx(2)?), s))
}

fn tensor_from(v: &JsonValue, dims: (usize, usize, usize), what: &str) -> Result<Tensor3> {
    let arr = v.as_array().ok_or_else(|| input(format!("{what} must be an array")))?;
    let entries = arr.iter().map(|e| entry(e, what)).collect::<Result<Vec<_>>>()?;
    Tensor3::from_unique_entries(dims, entries)
}

fn family_from(v: &JsonValue, len: usize, rows: usize, cols: usize, what: &str) -> Result<Vec<Matrix>> {
    let t = tensor_from(v, (len, rows, cols), what)?;
    let mut fam = vec![Matrix::zeros(rows, cols); len];
    for ((i, r, c), s) in t.iter() {
        fam[i].set(r, c, s.clone());
    }
    Ok(fam)
}

pub fn algebra_from(v: &JsonValue) -> Result<AlgebraTable> {
    let obj = as_object(v, "algebra")?;
    if let Some(k) = obj.get("kind") {
        if k.as_str() != Some("algebra") {
            return Err(input(format!("expected kind \"algebra\", got {k}")));
        }
    }
    let dim = count(obj, "dim")?;
    let basis = match obj.get("basis") {
        None => crate::algebra::default_labels("e", dim),
        Some(b) => b
            .as_array()
            .ok_or_else(|| input("basis must be an array of strings"))?
            .iter()
            .map(|s| s.as_str().map(str::to_string).ok_or_else(|| input("basis must be an array of strings")))
            .collect::<Result<Vec<_>>>()?,
    };
    if basis.len() != dim {
        return Err(Error::Dimension(format!("{} basis labels for dim {dim}", basis.len())));
    }
    let t = tensor_from(field(obj, "structure")?, (dim, dim, dim), "structure")?;
    AlgebraTable::new(basis, t)
}
