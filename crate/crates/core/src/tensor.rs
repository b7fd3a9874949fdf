//! Sparse exact containers: [`Vector`], [`Matrix`] and [`Tensor3`].
//!
//! All three store only nonzero entries in ordered maps, so iteration order is
//! deterministic and two containers are equal iff they hold the same nonzero
//! entries at the same shape.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

fn check_index(index: usize, dim: usize) -> Result<()> {
    if index < dim {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index, dim })
    }
}

fn accumulate<K: Ord>(map: &mut BTreeMap<K, Scalar>, key: K, value: &Scalar) {
    if value.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += value;
            if e.get().is_zero() {
                e.remove();
            }
        }
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(value.clone());
        }
    }
}

fn store<K: Ord>(map: &mut BTreeMap<K, Scalar>, key: K, value: Scalar) {
    if value.is_zero() {
        map.remove(&key);
    } else {
        map.insert(key, value);
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Vector {
    dim: usize,
    entries: BTreeMap<usize, Scalar>,
}

impl Vector {
    pub fn zero(dim: usize) -> Self {
        Vector { dim, entries: BTreeMap::new() }
    }

    pub fn basis(dim: usize, index: usize) -> Self {
        assert!(index < dim, "basis index {index} out of range for dimension {dim}");
        let mut v = Vector::zero(dim);
        v.entries.insert(index, Scalar::one());
        v
    }

    /// Sums duplicate indices; rejects out-of-range ones.
    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = (usize, Scalar)>) -> Result<Self> {
        let mut v = Vector::zero(dim);
        for (i, s) in entries {
            check_index(i, dim)?;
            accumulate(&mut v.entries, i, &s);
        }
        Ok(v)
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        let mut v = Vector::zero(values.len());
        for (i, s) in values.iter().enumerate() {
            store(&mut v.entries, i, s.clone());
        }
        v
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, index: usize) -> Scalar {
        self.entries.get(&index).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, index: usize, value: Scalar) {
        assert!(index < self.dim);
        store(&mut self.entries, index, value);
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.entries.iter().map(|(&i, s)| (i, s))
    }

    /// `self += coef * other`
    pub fn add_scaled(&mut self, coef: &Scalar, other: &Vector) {
        debug_assert_eq!(self.dim, other.dim);
        if coef.is_zero() {
            return;
        }
        for (i, s) in other.iter() {
            accumulate(&mut self.entries, i, &(coef * s));
        }
    }

    pub fn add_at(&mut self, index: usize, value: &Scalar) {
        assert!(index < self.dim);
        accumulate(&mut self.entries, index, value);
    }

    pub fn scaled(&self, coef: &Scalar) -> Vector {
        let mut out = Vector::zero(self.dim);
        out.add_scaled(coef, self);
        out
    }

    pub fn add(&self, other: &Vector) -> Vector {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), other);
        out
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        let mut out = self.clone();
        out.add_scaled(&Scalar::from_int(-1), other);
        out
    }

    /// Reinterpret in a larger space, shifting every index by `offset`.
    pub fn embed(&self, dim: usize, offset: usize) -> Vector {
        assert!(offset + self.dim <= dim);
        Vector { dim, entries: self.entries.iter().map(|(&i, s)| (i + offset, s.clone())).collect() }
    }

    /// Restrict to the window `[offset, offset + dim)`.
    pub fn project(&self, offset: usize, dim: usize) -> Vector {
        Vector {
            dim,
            entries: self
                .entries
                .range(offset..offset + dim)
                .map(|(&i, s)| (i - offset, s.clone()))
                .collect(),
        }
    }
}

fn fmt_coefficient_term(f: &mut fmt::Formatter<'_>, coef: &Scalar, name: &str, first: bool) -> fmt::Result {
    let negative = coef.is_negative();
    let magnitude = coef.abs();
    if first {
        if negative {
            write!(f, "-")?;
        }
    } else if negative {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    if magnitude.is_one() {
        write!(f, "{name}")
    } else if magnitude.denom().is_one() {
        write!(f, "{magnitude}{name}")
    } else {
        write!(f, "({magnitude}){name}")
    }
}

/// Renders as `e2 - (1/2)e3`, `-(1/30)e5`, or `0`.
impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        for (n, (i, s)) in self.iter().enumerate() {
            fmt_coefficient_term(f, s, &format!("e{i}"), n == 0)?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.entries.insert((i, i), Scalar::one());
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: impl IntoIterator<Item = ((usize, usize), Scalar)>) -> Result<Self> {
        let mut m = Matrix::zeros(rows, cols);
        for ((r, c), s) in entries {
            check_index(r, rows)?;
            check_index(c, cols)?;
            accumulate(&mut m.entries, (r, c), &s);
        }
        Ok(m)
    }

    pub fn from_rows(rows: &[Vec<Scalar>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Matrix::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (c, s) in row.iter().enumerate() {
                store(&mut m.entries, (r, c), s.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, row: usize, col: usize) -> Scalar {
        self.entries.get(&(row, col)).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, row: usize, col: usize, value: Scalar) {
        assert!(row < self.rows && col < self.cols);
        store(&mut self.entries, (row, col), value);
    }

    pub fn add_at(&mut self, row: usize, col: usize, value: &Scalar) {
        assert!(row < self.rows && col < self.cols);
        accumulate(&mut self.entries, (row, col), value);
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &Scalar)> {
        self.entries.iter().map(|(&k, s)| (k, s))
    }

    pub fn transpose(&self) -> Matrix {
        Matrix {
            rows: self.cols,
            cols: self.rows,
            entries: self.entries.iter().map(|(&(r, c), s)| ((c, r), s.clone())).collect(),
        }
    }

    pub fn add_scaled(&mut self, coef: &Scalar, other: &Matrix) {
        assert_eq!(self.shape(), other.shape());
        if coef.is_zero() {
            return;
        }
        for (k, s) in other.iter() {
            accumulate(&mut self.entries, k, &(coef * s));
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), other);
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        let mut out = self.clone();
        out.add_scaled(&Scalar::from_int(-1), other);
        out
    }

    pub fn scaled(&self, coef: &Scalar) -> Matrix {
        let mut out = Matrix::zeros(self.rows, self.cols);
        out.add_scaled(coef, self);
        out
    }

    /// Matrix product `self * other`: apply `other` first.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut by_row: BTreeMap<usize, Vec<(usize, &Scalar)>> = BTreeMap::new();
        for (&(r, c), s) in &other.entries {
            by_row.entry(r).or_default().push((c, s));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for (&(i, k), a) in &self.entries {
            if let Some(row) = by_row.get(&k) {
                for &(j, b) in row {
                    accumulate(&mut out.entries, (i, j), &(a * b));
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.dim(), "matrix-vector shape mismatch");
        let mut out = Vector::zero(self.rows);
        for (&(r, c), s) in &self.entries {
            let x = v.get(c);
            if !x.is_zero() {
                out.add_at(r, &(s * &x));
            }
        }
        out
    }

    pub fn column(&self, col: usize) -> Vector {
        let mut out = Vector::zero(self.rows);
        for (&(r, c), s) in &self.entries {
            if c == col {
                out.set(r, s.clone());
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }
}

/// Exact rank over the rationals.
///
/// Rows are cleared of denominators and then reduced with Bareiss
/// fraction-free elimination, so every intermediate value is an integer minor.
pub fn rank(m: &Matrix) -> usize {
    let (rows, cols) = m.shape();
    let mut grid: Vec<Vec<BigInt>> = Vec::with_capacity(rows);
    for r in 0..rows {
        let lcm = (0..cols).fold(BigInt::one(), |acc, c| acc.lcm(m.get(r, c).denom()));
        grid.push(
            (0..cols)
                .map(|c| {
                    let s = m.get(r, c);
                    s.numer() * (&lcm / s.denom())
                })
                .collect(),
        );
    }

    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !grid[r][col].is_zero()) else {
            continue;
        };
        grid.swap(rank, pivot);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let v = &grid[rank][col] * &grid[i][j] - &grid[i][col] * &grid[rank][j];
                grid[i][j] = v / &prev;
            }
            grid[i][col] = BigInt::zero();
        }
        prev = grid[rank][col].clone();
        rank += 1;
    }
    rank
}

pub type Index3 = (usize, usize, usize);

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tensor3 {
    dims: (usize, usize, usize),
    entries: BTreeMap<Index3, Scalar>,
}

impl Tensor3 {
    pub fn zeros(d0: usize, d1: usize, d2: usize) -> Self {
        Tensor3 { dims: (d0, d1, d2), entries: BTreeMap::new() }
    }

    pub fn cube(d: usize) -> Self {
        Tensor3::zeros(d, d, d)
    }

    /// Sums duplicate keys; use [`Tensor3::from_unique_entries`] to reject them.
    pub fn from_entries(dims: (usize, usize, usize), entries: impl IntoIterator<Item = (Index3, Scalar)>) -> Result<Self> {
        let mut t = Tensor3::zeros(dims.0, dims.1, dims.2);
        for ((i, j, k), s) in entries {
            t.check((i, j, k))?;
            accumulate(&mut t.entries, (i, j, k), &s);
        }
        Ok(t)
    }

    pub fn from_unique_entries(dims: (usize, usize, usize), entries: impl IntoIterator<Item = (Index3, Scalar)>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        let mut t = Tensor3::zeros(dims.0, dims.1, dims.2);
        for (key, s) in entries {
            t.check(key)?;
            if !seen.insert(key) {
                return Err(Error::Input(format!("duplicate entry {key:?}")));
            }
            store(&mut t.entries, key, s);
        }
        Ok(t)
    }

    fn check(&self, (i, j, k): Index3) -> Result<()> {
        check_index(i, self.dims.0)?;
        check_index(j, self.dims.1)?;
        check_index(k, self.dims.2)
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.entries.get(&(i, j, k)).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        self.check((i, j, k)).expect("tensor index in range");
        store(&mut self.entries, (i, j, k), value);
    }

    pub fn add_at(&mut self, i: usize, j: usize, k: usize, value: &Scalar) {
        self.check((i, j, k)).expect("tensor index in range");
        accumulate(&mut self.entries, (i, j, k), value);
    }

    pub fn iter(&self) -> impl Iterator<Item = (Index3, &Scalar)> {
        self.entries.iter().map(|(&k, s)| (k, s))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Reorder the three legs: entry `(i0, i1, i2)` moves to position
    /// `(i[perm[0]], i[perm[1]], i[perm[2]])`.
    pub fn permute(&self, perm: [usize; 3]) -> Tensor3 {
        let d = [self.dims.0, self.dims.1, self.dims.2];
        let mut out = Tensor3::zeros(d[perm[0]], d[perm[1]], d[perm[2]]);
        for (&(i, j, k), s) in &self.entries {
            let idx = [i, j, k];
            out.entries.insert((idx[perm[0]], idx[perm[1]], idx[perm[2]]), s.clone());
        }
        out
    }

    pub fn add_scaled(&mut self, coef: &Scalar, other: &Tensor3) {
        assert_eq!(self.dims, other.dims);
        for (k, s) in other.iter() {
            accumulate(&mut self.entries, k, &(coef * s));
        }
    }
}
