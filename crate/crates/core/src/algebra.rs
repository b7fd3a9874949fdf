//! Finite-dimensional algebras given by structure constants.
//!
//! Convention used everywhere in the crate: `e_i * e_j = sum_k c[i][j][k] e_k`,
//! the first index being the left factor.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::{Matrix, Tensor3, Vector};

#[derive(Clone)]
pub struct AlgebraTable {
    dim: usize,
    basis: Vec<String>,
    structure: Tensor3,
    /// `products[i * dim + j]` lists the nonzero `(k, c[i][j][k])`.
    products: Vec<Vec<(usize, Scalar)>>,
}

/// Labels are decorative, so equality only looks at the structure tensor.
impl PartialEq for AlgebraTable {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.structure == other.structure
    }
}

impl Eq for AlgebraTable {}

impl fmt::Debug for AlgebraTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AlgebraTable")
            .field("dim", &self.dim)
            .field("structure", &self.structure.iter().collect::<Vec<_>>())
            .finish()
    }
}

pub fn default_labels(prefix: &str, dim: usize) -> Vec<String> {
    (0..dim).map(|i| format!("{prefix}{i}")).collect()
}

impl AlgebraTable {
    pub fn new(basis: Vec<String>, structure: Tensor3) -> Result<Self> {
        let dim = basis.len();
        if structure.dims() != (dim, dim, dim) {
            return Err(Error::Dimension(format!(
                "structure tensor {:?} does not match {} basis labels",
                structure.dims(),
                dim
            )));
        }
        let mut products = vec![Vec::new(); dim * dim];
        for ((i, j, k), s) in structure.iter() {
            products[i * dim + j].push((k, s.clone()));
        }
        Ok(AlgebraTable { dim, basis, structure, products })
    }

    pub fn from_tensor(structure: Tensor3) -> Result<Self> {
        let dim = structure.dims().0;
        Self::new(default_labels("e", dim), structure)
    }

    /// Builds from `(i, j, k, c)` entries, summing repeats.
    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>) -> Result<Self> {
        let t = Tensor3::from_entries((dim, dim, dim), entries.into_iter().map(|(i, j, k, s)| ((i, j, k), s)))?;
        Self::from_tensor(t)
    }

    pub fn zero(dim: usize) -> Self {
        Self::from_tensor(Tensor3::cube(dim)).expect("cube tensor")
    }

    pub fn with_labels(mut self, basis: Vec<String>) -> Result<Self> {
        if basis.len() != self.dim {
            return Err(Error::Dimension(format!("{} labels for dimension {}", basis.len(), self.dim)));
        }
        self.basis = basis;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn structure(&self) -> &Tensor3 {
        &self.structure
    }

    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.structure.get(i, j, k)
    }

    /// Nonzero `(k, c[i][j][k])` for the basis product `e_i * e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.products[i * self.dim + j]
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> Vector {
        Vector::from_entries(self.dim, self.basis_product(i, j).iter().cloned()).expect("indices in range")
    }

    /// Bilinear extension of the structure constants.
    pub fn multiply(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        if x.dim() != self.dim || y.dim() != self.dim {
            return Err(Error::Dimension(format!(
                "multiply: operands of dimension {} and {} in an algebra of dimension {}",
                x.dim(),
                y.dim(),
                self.dim
            )));
        }
        Ok(self.mul(x, y))
    }

    pub(crate) fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zero(self.dim);
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let ab = a * b;
                for (k, c) in self.basis_product(i, j) {
                    out.add_at(*k, &(&ab * c));
                }
            }
        }
        out
    }

    /// `(x*y)*z - x*(y*z)`
    pub fn associator(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector> {
        let left = self.multiply(&self.multiply(x, y)?, z)?;
        let right = self.multiply(x, &self.multiply(y, z)?)?;
        Ok(left.sub(&right))
    }

    fn map_structure(&self, f: impl Fn(&mut Tensor3, (usize, usize, usize), &Scalar)) -> AlgebraTable {
        let mut t = Tensor3::cube(self.dim);
        for (key, s) in self.structure.iter() {
            f(&mut t, key, s);
        }
        AlgebraTable::new(self.basis.clone(), t).expect("same shape")
    }

    /// `x *' y = y * x`
    pub fn opposite(&self) -> AlgebraTable {
        self.map_structure(|t, (i, j, k), s| t.set(j, i, k, s.clone()))
    }

    /// `{x, y} = x*y + y*x`
    pub fn symmetrize(&self) -> AlgebraTable {
        self.map_structure(|t, (i, j, k), s| {
            t.add_at(i, j, k, s);
            t.add_at(j, i, k, s);
        })
    }

    /// `[x, y] = x*y - y*x`
    pub fn commutator(&self) -> AlgebraTable {
        self.map_structure(|t, (i, j, k), s| {
            t.add_at(i, j, k, s);
            t.add_at(j, i, k, &-s);
        })
    }

    /// Block-diagonal product on `A ⊕ B`; `B`'s indices are shifted by `dim(A)`.
    pub fn direct_sum(&self, other: &AlgebraTable) -> AlgebraTable {
        let n = self.dim;
        let dim = n + other.dim;
        let mut t = Tensor3::cube(dim);
        for ((i, j, k), s) in self.structure.iter() {
            t.set(i, j, k, s.clone());
        }
        for ((i, j, k), s) in other.structure.iter() {
            t.set(i + n, j + n, k + n, s.clone());
        }
        let basis = self.basis.iter().chain(other.basis.iter()).cloned().collect();
        AlgebraTable::new(basis, t).expect("block shape")
    }

    /// Matrix of `y ↦ e_i * y`.
    pub fn left_mult(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, s) in self.basis_product(i, j) {
                m.set(*k, j, s.clone());
            }
        }
        m
    }

    /// Matrix of `y ↦ y * e_i`.
    pub fn right_mult(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, s) in self.basis_product(j, i) {
                m.set(*k, j, s.clone());
            }
        }
        m
    }

    /// Restriction to the coordinate subspace spanned by `indices`, if that
    /// subspace is closed under the product.
    pub fn subalgebra(&self, indices: &[usize]) -> Result<AlgebraTable> {
        let mut position = vec![None; self.dim];
        for (p, &i) in indices.iter().enumerate() {
            if i >= self.dim {
                return Err(Error::IndexOutOfRange { index: i, dim: self.dim });
            }
            position[i] = Some(p);
        }
        let m = indices.len();
        let mut t = Tensor3::cube(m);
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                for (k, s) in self.basis_product(i, j) {
                    let Some(c) = position[*k] else {
                        return Err(Error::Input(format!(
                            "{} * {} leaves the subspace (component on {})",
                            self.basis[i], self.basis[j], self.basis[*k]
                        )));
                    };
                    t.set(a, b, c, s.clone());
                }
            }
        }
        AlgebraTable::new(indices.iter().map(|&i| self.basis[i].clone()).collect(), t)
    }

    fn first_basis_failure(&self, f: impl Fn(usize, usize, usize) -> Vector) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if !f(i, j, k).is_zero() {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Direct check of `(x*y)*z = x*(y*z) + x*(z*y)`, written out by hand so it
    /// can be cross-checked against the identity engine.
    pub fn left_zinbiel_failure(&self) -> Option<(usize, usize, usize)> {
        self.first_basis_failure(|i, j, k| {
            let (x, y, z) = (self.basis_vec(i), self.basis_vec(j), self.basis_vec(k));
            let lhs = self.mul(&self.mul(&x, &y), &z);
            let rhs = self.mul(&x, &self.mul(&y, &z)).add(&self.mul(&x, &self.mul(&z, &y)));
            lhs.sub(&rhs)
        })
    }

    /// Direct check of `x*(y*z) = (x*y)*z + (y*x)*z`.
    pub fn right_zinbiel_failure(&self) -> Option<(usize, usize, usize)> {
        self.first_basis_failure(|i, j, k| {
            let (x, y, z) = (self.basis_vec(i), self.basis_vec(j), self.basis_vec(k));
            let lhs = self.mul(&x, &self.mul(&y, &z));
            let rhs = self.mul(&self.mul(&x, &y), &z).add(&self.mul(&self.mul(&y, &x), &z));
            lhs.sub(&rhs)
        })
    }

    pub fn is_left_zinbiel(&self) -> bool {
        self.left_zinbiel_failure().is_none()
    }

    pub fn is_right_zinbiel(&self) -> bool {
        self.right_zinbiel_failure().is_none()
    }

    pub fn is_commutative(&self) -> bool {
        self.structure.iter().all(|((i, j, k), s)| &self.structure.get(j, i, k) == s)
    }

    pub fn is_associative(&self) -> bool {
        self.first_basis_failure(|i, j, k| {
            self.associator(&self.basis_vec(i), &self.basis_vec(j), &self.basis_vec(k)).expect("same dim")
        })
        .is_none()
    }

    pub fn basis_vec(&self, i: usize) -> Vector {
        Vector::basis(self.dim, i)
    }
}
