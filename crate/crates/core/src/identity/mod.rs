//! Multilinear identities over a single bilinear product.
//!
//! An [`Identity`] is a pair of rational-weighted sums of parenthesized
//! product trees, `lhs = rhs`, in which every term uses each declared
//! variable exactly once. Because both sides are multilinear, checking the
//! identity on all tuples of basis vectors decides it on the whole algebra.
//!
//! The textual form is a small s-expression language:
//!
//! ```text
//! term     := VAR | "(" term term ")"
//! summand  := [RATIONAL "*"] term
//! side     := "0" | ["-"] summand (("+" | "-") summand)*
//! identity := ["[" VAR ("," VAR)* "]"] side ["=" side]
//! ```
//!
//! `(x y)` is the product `x * y`. Without an explicit `[...]` header the
//! variables are ordered by first appearance.

mod catalog;
mod eval;
mod parse;
pub mod tensor_map;

use std::collections::HashMap;
use std::fmt;

pub use catalog::{catalog, catalog_entry, CATALOG_NAMES};
pub use eval::{evaluate, evaluate_at, first_violation, holds, Residual};
pub use parse::parse_identity;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ProductTree {
    /// Index into the owning identity's variable list.
    Var(usize),
    Product(Box<ProductTree>, Box<ProductTree>),
}

impl ProductTree {
    pub fn product(left: ProductTree, right: ProductTree) -> Self {
        ProductTree::Product(Box::new(left), Box::new(right))
    }

    fn count_vars(&self, counts: &mut [usize]) {
        match self {
            ProductTree::Var(v) => {
                if let Some(c) = counts.get_mut(*v) {
                    *c += 1;
                }
            }
            ProductTree::Product(l, r) => {
                l.count_vars(counts);
                r.count_vars(counts);
            }
        }
    }

    fn max_var(&self) -> usize {
        match self {
            ProductTree::Var(v) => *v,
            ProductTree::Product(l, r) => l.max_var().max(r.max_var()),
        }
    }

    fn first_appearance(&self, order: &mut Vec<usize>) {
        match self {
            ProductTree::Var(v) => {
                if !order.contains(v) {
                    order.push(*v);
                }
            }
            ProductTree::Product(l, r) => {
                l.first_appearance(order);
                r.first_appearance(order);
            }
        }
    }

    /// Every product node with its children exchanged: evaluating the mirror
    /// on `A` is evaluating the original on the opposite algebra.
    pub fn mirror(&self) -> ProductTree {
        match self {
            ProductTree::Var(v) => ProductTree::Var(*v),
            ProductTree::Product(l, r) => ProductTree::product(r.mirror(), l.mirror()),
        }
    }

    pub fn rename(&self, map: &[usize]) -> ProductTree {
        match self {
            ProductTree::Var(v) => ProductTree::Var(map[*v]),
            ProductTree::Product(l, r) => ProductTree::product(l.rename(map), r.rename(map)),
        }
    }

    /// Expands each product node `a.b` into `a*b + sign * b*a`.
    fn expand(&self, sign: &Scalar) -> Vec<(Scalar, ProductTree)> {
        match self {
            ProductTree::Var(v) => vec![(Scalar::one(), ProductTree::Var(*v))],
            ProductTree::Product(l, r) => {
                let (ls, rs) = (l.expand(sign), r.expand(sign));
                let mut out = Vec::with_capacity(2 * ls.len() * rs.len());
                for (a, ta) in &ls {
                    for (b, tb) in &rs {
                        let c = a * b;
                        out.push((c.clone(), ProductTree::product(ta.clone(), tb.clone())));
                        out.push((&c * sign, ProductTree::product(tb.clone(), ta.clone())));
                    }
                }
                out
            }
        }
    }

    fn write(&self, names: &[String], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProductTree::Var(v) => f.write_str(&names[*v]),
            ProductTree::Product(l, r) => {
                f.write_str("(")?;
                l.write(names, f)?;
                f.write_str(" ")?;
                r.write(names, f)?;
                f.write_str(")")
            }
        }
    }
}

pub type Term = (Scalar, ProductTree);

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Identity {
    variables: Vec<String>,
    lhs: Vec<Term>,
    rhs: Vec<Term>,
}

/// Merge repeated trees (keeping first-occurrence order) and drop zero terms.
fn normalize_side(terms: Vec<Term>) -> Vec<Term> {
    let mut out: Vec<Term> = Vec::new();
    let mut seen: HashMap<ProductTree, usize> = HashMap::new();
    for (c, t) in terms {
        match seen.get(&t) {
            Some(&i) => out[i].0 += &c,
            None => {
                seen.insert(t.clone(), out.len());
                out.push((c, t));
            }
        }
    }
    out.retain(|(c, _)| !c.is_zero());
    out
}

impl Identity {
    /// Validates multilinearity and normalizes both sides.
    pub fn new(variables: Vec<String>, lhs: Vec<Term>, rhs: Vec<Term>) -> Result<Self> {
        let lhs = normalize_side(lhs);
        let rhs = normalize_side(rhs);
        if lhs.is_empty() && rhs.is_empty() {
            return Err(Error::Arity("identity has no nonzero terms".into()));
        }
        for (n, name) in variables.iter().enumerate() {
            if variables[..n].contains(name) {
                return Err(Error::Arity(format!("variable {name} declared twice")));
            }
        }
        for (_, tree) in lhs.iter().chain(rhs.iter()) {
            if tree.max_var() >= variables.len() {
                return Err(Error::Arity("term uses an undeclared variable".into()));
            }
            let mut counts = vec![0; variables.len()];
            tree.count_vars(&mut counts);
            for (v, &c) in counts.iter().enumerate() {
                if c != 1 {
                    let what = if c == 0 { "missing from" } else { "repeated in" };
                    return Err(Error::Arity(format!(
                        "variable {} {what} term {}",
                        variables[v],
                        TreeDisplay(tree, &variables)
                    )));
                }
            }
        }
        Ok(Identity { variables, lhs, rhs })
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn arity(&self) -> usize {
        self.variables.len()
    }

    pub fn lhs(&self) -> &[Term] {
        &self.lhs
    }

    pub fn rhs(&self) -> &[Term] {
        &self.rhs
    }

    /// All terms of `lhs - rhs`.
    pub fn terms(&self) -> impl Iterator<Item = Term> + '_ {
        self.lhs.iter().cloned().chain(self.rhs.iter().map(|(c, t)| (-c, t.clone())))
    }

    /// The same law read in the opposite algebra.
    pub fn mirror(&self) -> Identity {
        let m = |side: &[Term]| side.iter().map(|(c, t)| (c.clone(), t.mirror())).collect();
        Identity { variables: self.variables.clone(), lhs: m(&self.lhs), rhs: m(&self.rhs) }
    }

    fn expand_with(&self, sign: Scalar) -> Result<Identity> {
        let e = |side: &[Term]| {
            side.iter()
                .flat_map(|(c, t)| t.expand(&sign).into_iter().map(move |(d, u)| (c * &d, u)))
                .collect()
        };
        Identity::new(self.variables.clone(), e(&self.lhs), e(&self.rhs))
    }

    /// Rewrite the law for the bracket `[a, b] = a*b - b*a` in terms of `*`.
    /// Fails only if every term cancels.
    pub fn through_commutator(&self) -> Result<Identity> {
        self.expand_with(Scalar::from_int(-1))
    }

    /// Rewrite the law for `{a, b} = a*b + b*a` in terms of `*`.
    pub fn through_anticommutator(&self) -> Result<Identity> {
        self.expand_with(Scalar::one())
    }

    fn appearance_order(&self) -> Vec<usize> {
        let mut order = Vec::new();
        for (_, t) in self.lhs.iter().chain(self.rhs.iter()) {
            t.first_appearance(&mut order);
        }
        order
    }

    /// Render one side; an empty side renders as `0`.
    fn write_side(&self, side: &[Term], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if side.is_empty() {
            return f.write_str("0");
        }
        for (n, (c, t)) in side.iter().enumerate() {
            let mag = c.abs();
            match (n == 0, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            t.write(&self.variables, f)?;
        }
        Ok(())
    }
}

struct TreeDisplay<'a>(&'a ProductTree, &'a [String]);

impl fmt::Display for TreeDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.write(self.1, f)
    }
}

/// DSL form; `parse_identity(&id.to_string())` gives back `id`.
impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let natural: Vec<usize> = (0..self.variables.len()).collect();
        if self.appearance_order() != natural {
            write!(f, "[{}] ", self.variables.join(", "))?;
        }
        self.write_side(&self.lhs, f)?;
        if !self.rhs.is_empty() {
            f.write_str(" = ")?;
            self.write_side(&self.rhs, f)?;
        }
        Ok(())
    }
}
