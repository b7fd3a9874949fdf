//! Concrete algebra tables used as test families and audit subjects.
//!
//! * Truncated integration products on polynomials `Q[X]/(X^{n+1})`: the
//!   right model `a * b = b ∫_0^X a` and the left model `a ∘ b = ∫_0^X b a'`.
//!   The left product with the constant monomial kept satisfies neither
//!   Zinbiel identity: `(X∘1)∘1 = X` while `X∘(1∘1) = 0`. Its restriction to
//!   polynomials without constant term is left Zinbiel; see [`positive_degree`].
//! * Free half-shuffle algebras on words, truncated by length.
//! * Zero algebras and a one-dimensional idempotent (negative control).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::algebra::AlgebraTable;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::Tensor3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Left,
    Right,
}

impl Orientation {
    pub fn flip(self) -> Self {
        match self {
            Orientation::Left => Orientation::Right,
            Orientation::Right => Orientation::Left,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Orientation::Left => "left",
            Orientation::Right => "right",
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Orientation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Orientation::Left),
            "right" => Ok(Orientation::Right),
            other => Err(Error::Input(format!("orientation must be left or right, got {other:?}"))),
        }
    }
}

/// Basis `e_0..e_n` ↔ monomials `X^0..X^n`; products past degree `n` vanish.
///
/// Right: `e_i * e_j = e_{i+j+1} / (i+1)`. Left: `e_i ∘ e_j = i/(i+j) e_{i+j}` for `i ≥ 1`.
pub fn trunc_integration(n: usize, orientation: Orientation) -> AlgebraTable {
    let dim = n + 1;
    let mut t = Tensor3::cube(dim);
    for i in 0..dim {
        for j in 0..dim {
            match orientation {
                Orientation::Right => {
                    let k = i + j + 1;
                    if k <= n {
                        t.set(i, j, k, Scalar::frac(1, i as i64 + 1));
                    }
                }
                Orientation::Left => {
                    let k = i + j;
                    if i >= 1 && k <= n {
                        t.set(i, j, k, Scalar::frac(i as i64, k as i64));
                    }
                }
            }
        }
    }
    let labels = (0..dim).map(|i| format!("X^{i}")).collect();
    AlgebraTable::new(labels, t).expect("square tensor")
}

fn shuffles(u: &[u8], v: &[u8], prefix: &mut Vec<u8>, out: &mut BTreeMap<Vec<u8>, i64>) {
    if u.is_empty() || v.is_empty() {
        let mut w = prefix.clone();
        w.extend_from_slice(u);
        w.extend_from_slice(v);
        *out.entry(w).or_default() += 1;
        return;
    }
    prefix.push(u[0]);
    shuffles(&u[1..], v, prefix, out);
    prefix.pop();
    prefix.push(v[0]);
    shuffles(u, &v[1..], prefix, out);
    prefix.pop();
}

/// Shuffle product of two words, as word → multiplicity.
pub fn shuffle(u: &[u8], v: &[u8]) -> BTreeMap<Vec<u8>, i64> {
    let mut out = BTreeMap::new();
    shuffles(u, v, &mut Vec::new(), &mut out);
    out
}

/// All nonempty words of length `<= max_len`, by length then lexicographically.
pub fn words(letters: usize, max_len: usize) -> Vec<Vec<u8>> {
    let mut all = Vec::new();
    let mut layer: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                (0..letters as u8).map(move |a| {
                    let mut w = w.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
        all.extend(layer.iter().cloned());
    }
    all
}

fn word_label(w: &[u8]) -> String {
    w.iter().map(|&a| (b'a' + a) as char).collect()
}

/// Largest table `free_halfshuffle` will build.
pub const MAX_FREE_DIM: usize = 4096;

/// Half-shuffle algebra on words over `letters` letters, modulo words longer
/// than `max_len`: `u * va = (u ⧢ v) a`.
pub fn free_halfshuffle(letters: usize, max_len: usize) -> Result<AlgebraTable> {
    if letters == 0 || letters > 26 {
        return Err(Error::Input(format!("free model needs 1..=26 letters, got {letters}")));
    }
    if max_len == 0 {
        return Err(Error::Input("free model needs max_len >= 1".into()));
    }
    let dim: usize = (1..=max_len).map(|l| letters.saturating_pow(l as u32)).fold(0usize, usize::saturating_add);
    if dim > MAX_FREE_DIM {
        return Err(Error::Input(format!("free:{letters}:{max_len} has dimension {dim} > {MAX_FREE_DIM}")));
    }
    let basis = words(letters, max_len);
    let index: HashMap<&[u8], usize> = basis.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
    let mut t = Tensor3::cube(dim);
    for (i, u) in basis.iter().enumerate() {
        for (j, v) in basis.iter().enumerate() {
            if u.len() + v.len() > max_len {
                continue;
            }
            let (last, head) = v.split_last().expect("nonempty word");
            for (mut w, count) in shuffle(u, head) {
                w.push(*last);
                t.add_at(i, j, index[w.as_slice()], &Scalar::from_int(count));
            }
        }
    }
    AlgebraTable::new(basis.iter().map(|w| word_label(w)).collect(), t)
}

/// Zero algebras of dimensions 0..=3 followed by the idempotent `e0*e0 = e0`.
pub fn trivial_models() -> Vec<AlgebraTable> {
    let mut out: Vec<AlgebraTable> = (0..=3).map(AlgebraTable::zero).collect();
    out.push(idempotent());
    out
}

pub fn idempotent() -> AlgebraTable {
    AlgebraTable::from_entries(1, [(0, 0, 0, Scalar::one())]).expect("1-dim table")
}

/// The span of `X^1..X^n` inside [`trunc_integration`], closed under both
/// products. Basis `e_0..e_{n-1}` ↔ `X^1..X^n`.
pub fn positive_degree(n: usize, orientation: Orientation) -> AlgebraTable {
    let idx: Vec<usize> = (1..=n).collect();
    trunc_integration(n, orientation).subalgebra(&idx).expect("an ideal")
}

/// A model named on the command line: `trunc-int:right:N`, `trunc-int:left:N`,
/// `trunc-pos:left:N` (positive degrees only), `free:K:M` or `zero:N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelSpec {
    TruncIntegration { n: usize, orientation: Orientation },
    PositiveDegree { n: usize, orientation: Orientation },
    Free { letters: usize, max_len: usize },
    Zero { dim: usize },
}

impl ModelSpec {
    pub fn build(&self) -> Result<AlgebraTable> {
        match *self {
            ModelSpec::TruncIntegration { n, orientation } => Ok(trunc_integration(n, orientation)),
            ModelSpec::PositiveDegree { n, orientation } => Ok(positive_degree(n, orientation)),
            ModelSpec::Free { letters, max_len } => free_halfshuffle(letters, max_len),
            ModelSpec::Zero { dim } => Ok(AlgebraTable::zero(dim)),
        }
    }

    /// The orientation the model is attributed, if any. The left
    /// `trunc-int` model does not actually satisfy it for `n >= 1`.
    pub fn orientation(&self) -> Option<Orientation> {
        match *self {
            ModelSpec::TruncIntegration { orientation, .. } | ModelSpec::PositiveDegree { orientation, .. } => Some(orientation),
            ModelSpec::Free { .. } => Some(Orientation::Right),
            ModelSpec::Zero { .. } => None,
        }
    }
}

impl FromStr for ModelSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Input(format!("bad model spec {s:?}; expected trunc-int:right:N, trunc-int:left:N, trunc-pos:left:N, free:K:M or zero:N"));
        let num = |p: &str| p.parse::<usize>().map_err(|_| bad());
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            ["trunc-int", o, n] => Ok(ModelSpec::TruncIntegration { n: num(n)?, orientation: o.parse().map_err(|_| bad())? }),
            ["trunc-pos", o, n] => Ok(ModelSpec::PositiveDegree { n: num(n)?, orientation: o.parse().map_err(|_| bad())? }),
            ["free", k, m] => Ok(ModelSpec::Free { letters: num(k)?, max_len: num(m)? }),
            ["zero", n] => Ok(ModelSpec::Zero { dim: num(n)? }),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for ModelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelSpec::TruncIntegration { n, orientation } => write!(f, "trunc-int:{orientation}:{n}"),
            ModelSpec::PositiveDegree { n, orientation } => write!(f, "trunc-pos:{orientation}:{n}"),
            ModelSpec::Free { letters, max_len } => write!(f, "free:{letters}:{max_len}"),
            ModelSpec::Zero { dim } => write!(f, "zero:{dim}"),
        }
    }
}
