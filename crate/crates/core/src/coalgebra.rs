//! Coalgebras given by a coproduct tensor, `Δ(e_k) = Σ d[k][i][j] e_i⊗e_j`.
//!
//! Three-leg laws are sums of terms `P ∘ (F ⊗ G) ∘ D` with `D ∈ {Δ, τ∘Δ}`,
//! one further coproduct applied to a single leg, and an optional leg swap
//! `P`. Each is evaluated per basis input as an exact 3-leg array. A term
//! also has a transpose: the product tree it becomes on the dual algebra
//! `e_i·e_j = Σ_k d[k][i][j] e_k`.

use std::fmt;

use crate::algebra::AlgebraTable;
use crate::error::{Error, Result};
use crate::identity::{Identity, ProductTree, Term};
use crate::report::{Finding, Report, Value};
use crate::scalar::Scalar;
use crate::tensor::{Matrix, Tensor3};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraTable {
    dim: usize,
    coproduct: Tensor3,
}

impl CoalgebraTable {
    pub fn new(coproduct: Tensor3) -> Result<Self> {
        let (a, b, c) = coproduct.dims();
        if a != b || b != c {
            return Err(Error::Dimension(format!("coproduct tensor must be cubic, got {a}x{b}x{c}")));
        }
        Ok(CoalgebraTable { dim: a, coproduct })
    }

    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>) -> Result<Self> {
        CoalgebraTable::new(Tensor3::from_entries((dim, dim, dim), entries.into_iter().map(|(k, i, j, s)| ((k, i, j), s)))?)
    }

    pub fn zero(dim: usize) -> Self {
        CoalgebraTable { dim, coproduct: Tensor3::cube(dim) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coproduct(&self) -> &Tensor3 {
        &self.coproduct
    }

    pub fn coefficient(&self, k: usize, i: usize, j: usize) -> Scalar {
        self.coproduct.get(k, i, j)
    }

    /// `Δ(e_k)` as a two-leg tensor.
    pub fn delta(&self, k: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for ((kk, i, j), s) in self.coproduct.iter() {
            if kk == k {
                m.set(i, j, s.clone());
            }
        }
        m
    }

    fn deltas(&self) -> Vec<Vec<(usize, usize, Scalar)>> {
        let mut out = vec![Vec::new(); self.dim];
        for ((k, i, j), s) in self.coproduct.iter() {
            out[k].push((i, j, s.clone()));
        }
        out
    }
}

/// `τ∘Δ`: `d'[k][i][j] = d[k][j][i]`.
pub fn opposite_coproduct(c: &CoalgebraTable) -> CoalgebraTable {
    CoalgebraTable { dim: c.dim, coproduct: c.coproduct.permute([0, 2, 1]) }
}

fn combine(c: &CoalgebraTable, sign: i64) -> CoalgebraTable {
    let mut t = c.coproduct.clone();
    t.add_scaled(&Scalar::from_int(sign), &opposite_coproduct(c).coproduct);
    CoalgebraTable { dim: c.dim, coproduct: t }
}

/// `Δ + τ∘Δ`
pub fn sym_coproduct(c: &CoalgebraTable) -> CoalgebraTable {
    combine(c, 1)
}

/// `Δ - τ∘Δ`
pub fn antisym_coproduct(c: &CoalgebraTable) -> CoalgebraTable {
    combine(c, -1)
}

/// `d[k][i][j] = c[i][j][k]`
pub fn dualize(a: &AlgebraTable) -> CoalgebraTable {
    CoalgebraTable { dim: a.dim(), coproduct: a.structure().permute([2, 0, 1]) }
}

/// `c[i][j][k] = d[k][i][j]`
pub fn dualize_co(c: &CoalgebraTable) -> AlgebraTable {
    AlgebraTable::from_tensor(c.coproduct.permute([1, 2, 0])).expect("cubic tensor")
}

/// Leg swap applied last.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outer {
    Id,
    /// `τ⊗id`
    SwapFirst,
    /// `id⊗τ`
    SwapLast,
}

/// One term `coef · P ∘ (F) ∘ D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoTerm {
    pub coef: Scalar,
    pub outer: Outer,
    /// The second coproduct acts on the first leg (`Δ⊗id`) when true,
    /// on the second (`id⊗Δ`) otherwise.
    pub on_first: bool,
    /// The second coproduct is `τ∘Δ`.
    pub inner_flip: bool,
    /// The first coproduct is `τ∘Δ`.
    pub base_flip: bool,
}

impl CoTerm {
    pub fn new(outer: Outer, on_first: bool, inner_flip: bool, base_flip: bool) -> Self {
        CoTerm { coef: Scalar::one(), outer, on_first, inner_flip, base_flip }
    }

    pub fn scaled(mut self, coef: Scalar) -> Self {
        self.coef = coef;
        self
    }

    fn apply(&self, deltas: &[Vec<(usize, usize, Scalar)>], dim: usize, k: usize, out: &mut Tensor3) {
        for (i, j, s) in &deltas[k] {
            let (i, j) = if self.base_flip { (*j, *i) } else { (*i, *j) };
            let (split, keep) = if self.on_first { (i, j) } else { (j, i) };
            for (p, q, t) in &deltas[split] {
                let (p, q) = if self.inner_flip { (*q, *p) } else { (*p, *q) };
                let legs = if self.on_first { [p, q, keep] } else { [keep, p, q] };
                let legs = match self.outer {
                    Outer::Id => legs,
                    Outer::SwapFirst => [legs[1], legs[0], legs[2]],
                    Outer::SwapLast => [legs[0], legs[2], legs[1]],
                };
                debug_assert!(legs.iter().all(|&l| l < dim));
                out.add_at(legs[0], legs[1], legs[2], &(&(&self.coef * s) * t));
            }
        }
    }

    /// The product tree this term transposes to on the dual algebra, over
    /// variables `x, y, z` in leg order.
    pub fn to_tree(&self) -> ProductTree {
        let vars = match self.outer {
            Outer::Id => [0, 1, 2],
            Outer::SwapFirst => [1, 0, 2],
            Outer::SwapLast => [0, 2, 1],
        };
        let v = |i: usize| ProductTree::Var(vars[i]);
        let node = |flip: bool, l: ProductTree, r: ProductTree| if flip { ProductTree::product(r, l) } else { ProductTree::product(l, r) };
        if self.on_first {
            node(self.base_flip, node(self.inner_flip, v(0), v(1)), v(2))
        } else {
            node(self.base_flip, v(0), node(self.inner_flip, v(1), v(2)))
        }
    }
}

impl fmt::Display for CoTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = |flip: bool| if flip { "(τ∘Δ)" } else { "Δ" };
        match self.outer {
            Outer::Id => {}
            Outer::SwapFirst => f.write_str("(τ⊗id)∘")?,
            Outer::SwapLast => f.write_str("(id⊗τ)∘")?,
        }
        if self.on_first {
            write!(f, "({}⊗id)∘{}", d(self.inner_flip), d(self.base_flip))
        } else {
            write!(f, "(id⊗{})∘{}", d(self.inner_flip), d(self.base_flip))
        }
    }
}

/// `Σ lhs = Σ rhs` of three-leg maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoLaw {
    pub lhs: Vec<CoTerm>,
    pub rhs: Vec<CoTerm>,
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[CoTerm]) -> fmt::Result {
    if terms.is_empty() {
        return f.write_str("0");
    }
    for (n, t) in terms.iter().enumerate() {
        let neg = t.coef.is_negative();
        match (n, neg) {
            (0, true) => f.write_str("-")?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        let m = t.coef.abs();
        if !m.is_one() {
            write!(f, "{m}*")?;
        }
        write!(f, "{t}")?;
    }
    Ok(())
}

impl fmt::Display for CoLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.lhs)?;
        f.write_str(" = ")?;
        write_terms(f, &self.rhs)
    }
}

impl CoLaw {
    pub fn new(lhs: Vec<CoTerm>, rhs: Vec<CoTerm>) -> Self {
        CoLaw { lhs, rhs }
    }

    fn side(c: &CoalgebraTable, deltas: &[Vec<(usize, usize, Scalar)>], terms: &[CoTerm], k: usize) -> Tensor3 {
        let mut out = Tensor3::cube(c.dim);
        for t in terms {
            t.apply(deltas, c.dim, k, &mut out);
        }
        out
    }

    /// Both sides at `e_k`.
    pub fn evaluate_at(&self, c: &CoalgebraTable, k: usize) -> (Tensor3, Tensor3) {
        let deltas = c.deltas();
        (CoLaw::side(c, &deltas, &self.lhs, k), CoLaw::side(c, &deltas, &self.rhs, k))
    }

    pub fn check(&self, c: &CoalgebraTable, claim: &str) -> Finding {
        let deltas = c.deltas();
        Finding::scan(claim, self.to_string(), &[("e", c.dim)], |t| {
            (Value::from(CoLaw::side(c, &deltas, &self.lhs, t[0])), Value::from(CoLaw::side(c, &deltas, &self.rhs, t[0])))
        })
    }

    /// The element identity this law transposes to: the law holds on `C`
    /// iff the identity holds on `dualize_co(C)`.
    pub fn transpose(&self) -> Result<Identity> {
        let side = |ts: &[CoTerm]| ts.iter().map(|t| (t.coef.clone(), t.to_tree())).collect::<Vec<Term>>();
        Identity::new(vec!["x".into(), "y".into(), "z".into()], side(&self.lhs), side(&self.rhs))
    }
}

fn term(outer: Outer, on_first: bool, inner_flip: bool, base_flip: bool) -> CoTerm {
    CoTerm::new(outer, on_first, inner_flip, base_flip)
}

/// `(Δ⊗id)∘Δ`
fn dd_id() -> CoTerm {
    term(Outer::Id, true, false, false)
}

/// `(id⊗Δ)∘Δ`
fn id_dd() -> CoTerm {
    term(Outer::Id, false, false, false)
}

pub fn co_right_law() -> CoLaw {
    CoLaw::new(vec![id_dd()], vec![dd_id(), term(Outer::Id, true, true, false)])
}

pub fn co_left_law() -> CoLaw {
    CoLaw::new(vec![dd_id()], vec![id_dd(), term(Outer::Id, false, true, false)])
}

pub fn coassociative_law() -> CoLaw {
    CoLaw::new(vec![dd_id()], vec![id_dd()])
}

pub fn co_jacobi_law() -> CoLaw {
    CoLaw::new(vec![id_dd(), term(Outer::SwapLast, true, false, false), dd_id().scaled(Scalar::from_int(-1))], vec![])
}

/// Auxiliary laws said to hold in a right Zinbiel coalgebra (`right_co_*`,
/// `co_identity_*`) or a left one (`left_co_*`), by name.
pub fn aux_laws() -> Vec<(&'static str, CoLaw)> {
    let swap_first_id_dd = term(Outer::SwapFirst, false, false, false);
    let swap_last_dd_id = term(Outer::SwapLast, true, false, false);
    let swap_first_tail = term(Outer::SwapFirst, false, true, true);
    vec![
        ("right_co_relation_a", CoLaw::new(vec![id_dd()], vec![swap_first_id_dd.clone()])),
        ("right_co_relation_b", CoLaw::new(vec![swap_first_id_dd], vec![term(Outer::SwapFirst, true, false, true)])),
        ("left_co_relation_a", CoLaw::new(vec![dd_id()], vec![swap_last_dd_id.clone()])),
        ("left_co_relation_b", CoLaw::new(vec![swap_last_dd_id.clone()], vec![term(Outer::SwapLast, false, false, true)])),
        (
            "co_identity_1",
            CoLaw::new(vec![term(Outer::Id, false, true, false)], vec![swap_last_dd_id.clone(), swap_first_tail.clone()]),
        ),
        ("co_identity_2", CoLaw::new(vec![term(Outer::Id, true, false, true)], vec![swap_last_dd_id, swap_first_tail])),
        (
            "co_identity_3",
            CoLaw::new(vec![term(Outer::Id, true, true, true)], vec![term(Outer::Id, false, false, true), term(Outer::Id, false, true, true)]),
        ),
    ]
}

pub fn check_co_right(c: &CoalgebraTable) -> Finding {
    co_right_law().check(c, "co_right_zinbiel")
}

pub fn check_co_left(c: &CoalgebraTable) -> Finding {
    co_left_law().check(c, "co_left_zinbiel")
}

fn two_leg_finding(c: &CoalgebraTable, claim: &str, statement: &str, sign: i64) -> Finding {
    let op = opposite_coproduct(c);
    let s = Scalar::from_int(sign);
    Finding::scan(claim, statement, &[("e", c.dim)], |t| (Value::from(c.delta(t[0])), Value::from(op.delta(t[0]).scaled(&s))))
}

/// `Δ = τ∘Δ` and coassociativity.
pub fn check_cocomm_coassoc(c: &CoalgebraTable) -> Report {
    let mut r = Report::new("cocommutative_coassociative", format!("dim {}", c.dim));
    r.push(two_leg_finding(c, "cocommutative", "Δ = τ∘Δ", 1));
    r.push(coassociative_law().check(c, "coassociative"));
    r
}

/// `Δ = -τ∘Δ` and the co-Jacobi identity.
pub fn check_lie_coalgebra(c: &CoalgebraTable) -> Report {
    let mut r = Report::new("lie_coalgebra", format!("dim {}", c.dim));
    r.push(two_leg_finding(c, "antisymmetric", "Δ = -τ∘Δ", -1));
    r.push(co_jacobi_law().check(c, "co_jacobi"));
    r
}

/// Every auxiliary law on `C` and, as `*_mirrored`, on the opposite coproduct.
pub fn check_aux_coalgebra_identities(c: &CoalgebraTable) -> Report {
    let mut r = Report::new("coalgebra_identities", format!("dim {}", c.dim));
    let right = check_co_right(c).passed();
    let left = check_co_left(c).passed();
    r.notes.push(format!("co_right_zinbiel: {}; co_left_zinbiel: {}", holds_text(right), holds_text(left)));
    let op = opposite_coproduct(c);
    for (name, law) in aux_laws() {
        r.push(law.check(c, name));
        r.push(law.check(&op, &format!("{name}_mirrored")).with_note("on the opposite coproduct"));
    }
    r
}

fn holds_text(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

/// Tests the two "Zinbiel coalgebra if ..." statements on one coproduct:
/// each implication fails exactly when its premise holds and `Δ` satisfies
/// neither Zinbiel coalgebra law.
pub fn coalgebra_proposition_audit(c: &CoalgebraTable) -> Report {
    let mut r = Report::new("coalgebra_propositions", format!("dim {}", c.dim));
    let right = check_co_right(c);
    let left = check_co_left(c);
    let zinbiel = right.passed() || left.passed();
    let sym = check_cocomm_coassoc(&sym_coproduct(c));
    let anti = check_lie_coalgebra(&antisym_coproduct(c));
    let (sym_ok, anti_ok) = (sym.all_hold(), anti.all_hold());
    r.push(right);
    r.push(left);
    r.extend(sym.findings.into_iter().map(|mut f| {
        f.claim = format!("sym_{}", f.claim);
        f
    }));
    r.extend(anti.findings.into_iter().map(|mut f| {
        f.claim = format!("antisym_{}", f.claim);
        f
    }));
    r.push(Finding::flag("symmetrization_implication", "Δ+τ∘Δ cocommutative coassociative ⇒ Δ Zinbiel", !sym_ok || zinbiel));
    r.push(Finding::flag("antisymmetrization_implication", "Δ-τ∘Δ Lie coalgebra ⇒ Δ Zinbiel", !anti_ok || zinbiel));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identity::catalog_entry;
    use crate::models::{trunc_integration, Orientation};

    fn t(n: usize) -> AlgebraTable {
        trunc_integration(n, Orientation::Right)
    }

    #[test]
    fn dual_of_t3() {
        let c = dualize(&t(3));
        assert_eq!(c.coefficient(2, 0, 1), Scalar::one());
        assert_eq!(c.coefficient(2, 1, 0), Scalar::frac(1, 2));
        assert_eq!(Value::from(c.delta(2)).to_string(), "e0⊗e1 + (1/2)e1⊗e0");
        assert_eq!(dualize_co(&c), t(3));
    }

    #[test]
    fn laws_transpose_to_the_zinbiel_identities() {
        assert_eq!(&co_right_law().transpose().unwrap(), catalog_entry("right_zinbiel").unwrap());
        assert_eq!(&co_left_law().transpose().unwrap(), catalog_entry("left_zinbiel").unwrap());
        assert_eq!(&coassociative_law().transpose().unwrap(), catalog_entry("associative").unwrap());
    }

    #[test]
    fn dual_of_right_model_is_co_right() {
        for n in 0..=5 {
            let c = dualize(&t(n));
            assert!(check_co_right(&c).passed(), "n={n}");
            assert!(check_co_left(&opposite_coproduct(&c)).passed());
            assert_eq!(check_co_left(&c).passed(), n <= 1, "n={n}");
        }
    }

    #[test]
    fn perturbation_breaks_co_right() {
        let mut d = dualize(&t(3)).coproduct().clone();
        d.add_at(0, 0, 0, &Scalar::one());
        let c = CoalgebraTable::new(d).unwrap();
        assert!(!check_co_right(&c).passed());
        assert!(!dualize_co(&c).is_right_zinbiel());
    }

    #[test]
    fn zero_coproduct_satisfies_everything() {
        let z = CoalgebraTable::zero(3);
        assert!(check_co_right(&z).passed() && check_co_left(&z).passed());
        assert!(check_cocomm_coassoc(&z).all_hold());
        assert!(check_lie_coalgebra(&z).all_hold());
        assert!(check_aux_coalgebra_identities(&z).all_hold());
        assert_eq!(sym_coproduct(&z), z);
    }

    #[test]
    fn symmetrized_and_antisymmetrized() {
        let c = dualize(&t(3));
        assert!(check_cocomm_coassoc(&sym_coproduct(&c)).all_hold());
        let own = check_cocomm_coassoc(&c);
        assert!(!own.finding("cocommutative").unwrap().passed());
        assert!(antisym_coproduct(&sym_coproduct(&c)).coproduct().is_zero());
        let jac = check_lie_coalgebra(&antisym_coproduct(&dualize(&t(5))));
        assert!(jac.finding("antisymmetric").unwrap().passed());
        assert!(!jac.finding("co_jacobi").unwrap().passed());
    }

    #[test]
    fn opposite_is_an_involution() {
        let c = dualize(&t(4));
        assert_eq!(opposite_coproduct(&opposite_coproduct(&c)), c);
    }

    #[test]
    fn term_display() {
        assert_eq!(co_right_law().to_string(), "(id⊗Δ)∘Δ = (Δ⊗id)∘Δ + ((τ∘Δ)⊗id)∘Δ");
        assert_eq!(co_jacobi_law().to_string(), "(id⊗Δ)∘Δ + (id⊗τ)∘(Δ⊗id)∘Δ - (Δ⊗id)∘Δ = 0");
    }

    #[test]
    fn idempotent_dual_refutes_both_propositions() {
        let c = dualize(&crate::models::idempotent());
        let r = coalgebra_proposition_audit(&c);
        assert!(!r.finding("symmetrization_implication").unwrap().passed());
        assert!(!r.finding("antisymmetrization_implication").unwrap().passed());
    }
}
