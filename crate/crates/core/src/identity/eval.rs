use rayon::prelude::*;

use super::{Identity, ProductTree, Term};
use crate::algebra::AlgebraTable;
use crate::error::{Error, Result};
use crate::tensor::Vector;

/// One violating assignment of basis vectors to the identity's variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Residual {
    /// Basis index per variable, in declaration order.
    pub assignment: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
    /// `lhs - rhs`, never zero.
    pub value: Vector,
}

fn eval_tree(a: &AlgebraTable, tree: &ProductTree, args: &[Vector]) -> Vector {
    match tree {
        ProductTree::Var(v) => args[*v].clone(),
        ProductTree::Product(l, r) => a.mul(&eval_tree(a, l, args), &eval_tree(a, r, args)),
    }
}

fn eval_side(a: &AlgebraTable, side: &[Term], args: &[Vector]) -> Vector {
    let mut acc = Vector::zero(a.dim());
    for (c, t) in side {
        acc.add_scaled(c, &eval_tree(a, t, args));
    }
    acc
}

/// Both sides at arbitrary vectors.
pub fn evaluate_at(a: &AlgebraTable, id: &Identity, args: &[Vector]) -> Result<(Vector, Vector)> {
    if args.len() != id.arity() {
        return Err(Error::Arity(format!("{} arguments for an identity in {} variables", args.len(), id.arity())));
    }
    if let Some(v) = args.iter().find(|v| v.dim() != a.dim()) {
        return Err(Error::Dimension(format!("argument of dimension {} in an algebra of dimension {}", v.dim(), a.dim())));
    }
    Ok((eval_side(a, id.lhs(), args), eval_side(a, id.rhs(), args)))
}

fn tuple_count(dim: usize, arity: usize) -> usize {
    dim.checked_pow(arity as u32).expect("basis tuple count overflows usize")
}

/// Lexicographic decoding: the first variable is the most significant digit.
fn decode(mut t: usize, dim: usize, arity: usize) -> Vec<usize> {
    let mut out = vec![0; arity];
    for slot in out.iter_mut().rev() {
        *slot = t % dim;
        t /= dim;
    }
    out
}

fn residual_at(a: &AlgebraTable, id: &Identity, t: usize) -> Option<Residual> {
    let assignment = decode(t, a.dim(), id.arity());
    let args: Vec<Vector> = assignment.iter().map(|&i| a.basis_vec(i)).collect();
    let lhs = eval_side(a, id.lhs(), &args);
    let rhs = eval_side(a, id.rhs(), &args);
    let value = lhs.sub(&rhs);
    (!value.is_zero()).then_some(Residual { assignment, lhs, rhs, value })
}

/// Every violating basis tuple, in lexicographic tuple order.
///
/// Work is spread over the current rayon pool; the result does not depend
/// on the number of workers.
pub fn evaluate(a: &AlgebraTable, id: &Identity) -> Vec<Residual> {
    let total = tuple_count(a.dim(), id.arity());
    (0..total).into_par_iter().filter_map(|t| residual_at(a, id, t)).collect()
}

/// The lexicographically first violation, if any.
pub fn first_violation(a: &AlgebraTable, id: &Identity) -> Option<Residual> {
    let total = tuple_count(a.dim(), id.arity());
    (0..total).into_par_iter().find_map_first(|t| residual_at(a, id, t))
}

pub fn holds(a: &AlgebraTable, id: &Identity) -> bool {
    first_violation(a, id).is_none()
}
