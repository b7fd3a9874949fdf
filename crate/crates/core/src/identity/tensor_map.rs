//! Laws written as equalities of maps `A^{⊗n} → A` built from the product
//! `μ`, the flip `τ` and `id`, expanded mechanically to element form.
//!
//! `μ∘(id⊗μ)` applied to `x⊗y⊗z` is `x*(y*z)`; `μ∘τ` is the opposite
//! product; composition applies the rightmost map first.

use std::fmt;

use super::{Identity, ProductTree};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MapExpr {
    Id,
    Tau,
    Mu,
    Tensor(Vec<MapExpr>),
    /// `Compose([f, g])` is `f∘g`.
    Compose(Vec<MapExpr>),
}

pub fn tensor(parts: impl Into<Vec<MapExpr>>) -> MapExpr {
    MapExpr::Tensor(parts.into())
}

pub fn compose(parts: impl Into<Vec<MapExpr>>) -> MapExpr {
    MapExpr::Compose(parts.into())
}

/// `μ∘τ`
pub fn mu_tau() -> MapExpr {
    compose([MapExpr::Mu, MapExpr::Tau])
}

impl MapExpr {
    /// `(inputs, outputs)` tensor arities.
    pub fn arity(&self) -> Result<(usize, usize)> {
        match self {
            MapExpr::Id => Ok((1, 1)),
            MapExpr::Tau => Ok((2, 2)),
            MapExpr::Mu => Ok((2, 1)),
            MapExpr::Tensor(parts) => parts.iter().try_fold((0, 0), |(i, o), p| {
                let (pi, po) = p.arity()?;
                Ok((i + pi, o + po))
            }),
            MapExpr::Compose(parts) => {
                let mut iter = parts.iter().rev();
                let first = iter.next().ok_or_else(|| Error::Input("empty composition".into()))?;
                let (input, mut out) = first.arity()?;
                for p in iter {
                    let (pi, po) = p.arity()?;
                    if pi != out {
                        return Err(Error::Input(format!("cannot compose {p} after a map with {out} outputs")));
                    }
                    out = po;
                }
                Ok((input, out))
            }
        }
    }

    fn apply_unchecked(&self, inputs: Vec<ProductTree>) -> Vec<ProductTree> {
        match self {
            MapExpr::Id => inputs,
            MapExpr::Tau => vec![inputs[1].clone(), inputs[0].clone()],
            MapExpr::Mu => vec![ProductTree::product(inputs[0].clone(), inputs[1].clone())],
            MapExpr::Tensor(parts) => {
                let mut rest = inputs.into_iter();
                let mut out = Vec::new();
                for p in parts {
                    let (n, _) = p.arity().expect("checked");
                    out.extend(p.apply_unchecked(rest.by_ref().take(n).collect()));
                }
                out
            }
            MapExpr::Compose(parts) => parts.iter().rev().fold(inputs, |acc, p| p.apply_unchecked(acc)),
        }
    }

    pub fn apply(&self, inputs: Vec<ProductTree>) -> Result<Vec<ProductTree>> {
        let (n, _) = self.arity()?;
        if n != inputs.len() {
            return Err(Error::Input(format!("{self} takes {n} tensor legs, got {}", inputs.len())));
        }
        Ok(self.apply_unchecked(inputs))
    }
}

impl fmt::Display for MapExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |f: &mut fmt::Formatter<'_>, parts: &[MapExpr], sep: &str| -> fmt::Result {
            for (n, p) in parts.iter().enumerate() {
                if n > 0 {
                    f.write_str(sep)?;
                }
                match p {
                    MapExpr::Tensor(_) | MapExpr::Compose(_) => write!(f, "({p})")?,
                    _ => write!(f, "{p}")?,
                }
            }
            Ok(())
        };
        match self {
            MapExpr::Id => f.write_str("id"),
            MapExpr::Tau => f.write_str("τ"),
            MapExpr::Mu => f.write_str("μ"),
            MapExpr::Tensor(parts) => join(f, parts, "⊗"),
            MapExpr::Compose(parts) => join(f, parts, "∘"),
        }
    }
}

fn variable_names(n: usize) -> Vec<String> {
    if n <= 3 {
        ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

/// Expand `Σ lhs = Σ rhs` of maps `A^{⊗n} → A` into an element identity.
pub fn expand_law(lhs: &[(Scalar, MapExpr)], rhs: &[(Scalar, MapExpr)]) -> Result<Identity> {
    let first = lhs.iter().chain(rhs).next().ok_or_else(|| Error::Input("empty law".into()))?;
    let (n, _) = first.1.arity()?;
    let vars: Vec<ProductTree> = (0..n).map(ProductTree::Var).collect();
    let expand = |side: &[(Scalar, MapExpr)]| -> Result<Vec<(Scalar, ProductTree)>> {
        side.iter()
            .map(|(c, m)| {
                let mut out = m.apply(vars.clone())?;
                if out.len() != 1 {
                    return Err(Error::Input(format!("{m} has {} outputs, expected 1", out.len())));
                }
                Ok((c.clone(), out.remove(0)))
            })
            .collect()
    };
    Identity::new(variable_names(n), expand(lhs)?, expand(rhs)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use MapExpr::{Id, Mu, Tau};

    fn one(m: MapExpr) -> (Scalar, MapExpr) {
        (Scalar::one(), m)
    }

    #[test]
    fn basic_expansions() {
        let law = expand_law(&[one(compose([Mu, tensor([Id, Mu])]))], &[one(compose([Mu, tensor([Mu, Id])]))]).unwrap();
        assert_eq!(law.to_string(), "(x (y z)) = ((x y) z)");

        let law = expand_law(&[one(compose([mu_tau(), tensor([Id, mu_tau()])]))], &[]).unwrap();
        assert_eq!(law.to_string(), "[x, y, z] ((z y) x)");
    }

    #[test]
    fn flips_permute_inputs() {
        let m = compose([Mu, tensor([Id, Mu]), tensor([Tau, Id])]);
        let out = m.apply((0..3).map(ProductTree::Var).collect()).unwrap();
        let law = Identity::new(variable_names(3), vec![(Scalar::one(), out[0].clone())], vec![]).unwrap();
        assert_eq!(law.to_string(), "[x, y, z] (y (x z))");
    }

    #[test]
    fn arity_mismatches_are_errors() {
        assert!(compose([Mu, Mu]).arity().is_err());
        assert!(compose(Vec::<MapExpr>::new()).arity().is_err());
        assert!(expand_law(&[one(tensor([Id, Id]))], &[]).is_err());
        assert!(Mu.apply(vec![ProductTree::Var(0)]).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(compose([Mu, tensor([Id, mu_tau()])]).to_string(), "μ∘(id⊗(μ∘τ))");
    }
}
