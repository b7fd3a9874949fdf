//! Independent oracles. Nothing here calls the library's evaluators: tables
//! come from polynomial arithmetic and word shuffles, and laws are checked
//! with dense loops.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use zinbiel::models::Orientation;
use zinbiel::{AlgebraTable, Scalar};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn to_q(s: &Scalar) -> Q {
    Q::new(s.numer().clone(), s.denom().clone())
}

/// Dense polynomial in `X`, coefficient of `X^i` at index `i`.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly(pub Vec<Q>);

impl Poly {
    pub fn monomial(d: usize) -> Poly {
        let mut c = vec![Q::zero(); d + 1];
        c[d] = Q::one();
        Poly(c)
    }

    pub fn zero() -> Poly {
        Poly(Vec::new())
    }

    pub fn coeff(&self, d: usize) -> Q {
        self.0.get(d).cloned().unwrap_or_else(Q::zero)
    }

    pub fn degree_bound(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.0.is_empty() || o.0.is_empty() {
            return Poly::zero();
        }
        let mut c = vec![Q::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly(c)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        Poly((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        Poly((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    /// `∫₀^X`
    pub fn integrate(&self) -> Poly {
        let mut c = vec![Q::zero()];
        for (i, a) in self.0.iter().enumerate() {
            c.push(a / Q::from_integer(BigInt::from(i + 1)));
        }
        Poly(c)
    }

    pub fn derivative(&self) -> Poly {
        Poly(self.0.iter().enumerate().skip(1).map(|(i, a)| a * Q::from_integer(BigInt::from(i))).collect())
    }

    /// Drops every term of degree above `n`.
    pub fn truncate(&self, n: usize) -> Poly {
        Poly(self.0.iter().take(n + 1).cloned().collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

/// `a ∗ b = b·∫a` (right) or `a ∘ b = ∫ b·a'` (left), truncated at degree `n`.
pub fn integration_product(a: &Poly, b: &Poly, o: Orientation, n: usize) -> Poly {
    let p = match o {
        Orientation::Right => b.mul(&a.integrate()),
        Orientation::Left => b.mul(&a.derivative()).integrate(),
    };
    p.truncate(n)
}

pub type Dense = Vec<Vec<Vec<Q>>>;

/// Structure constants of the truncated integration model from polynomials.
pub fn integration_oracle(n: usize, o: Orientation) -> Dense {
    let mut c = vec![vec![vec![Q::zero(); n + 1]; n + 1]; n + 1];
    for i in 0..=n {
        for j in 0..=n {
            let p = integration_product(&Poly::monomial(i), &Poly::monomial(j), o, n);
            for k in 0..=n {
                c[i][j][k] = p.coeff(k);
            }
        }
    }
    c
}

pub fn dense(a: &AlgebraTable) -> Dense {
    let n = a.dim();
    let mut c = vec![vec![vec![Q::zero(); n]; n]; n];
    for ((i, j, k), s) in a.structure().iter() {
        c[i][j][k] = to_q(s);
    }
    c
}

pub fn dense_mul(c: &Dense, x: &[Q], y: &[Q]) -> Vec<Q> {
    let n = c.len();
    let mut out = vec![Q::zero(); n];
    for i in 0..n {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..n {
            if y[j].is_zero() {
                continue;
            }
            for k in 0..n {
                if !c[i][j][k].is_zero() {
                    out[k] += &x[i] * &y[j] * &c[i][j][k];
                }
            }
        }
    }
    out
}

pub fn unit(n: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[i] = Q::one();
    v
}

fn add(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `x(yz) = (xy)z + (yx)z` on all basis triples, by dense loops.
pub fn dense_right_zinbiel(c: &Dense) -> bool {
    let n = c.len();
    let e = |i| unit(n, i);
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| {
                let lhs = dense_mul(c, &e(x), &dense_mul(c, &e(y), &e(z)));
                let rhs = add(&dense_mul(c, &dense_mul(c, &e(x), &e(y)), &e(z)), &dense_mul(c, &dense_mul(c, &e(y), &e(x)), &e(z)));
                lhs == rhs
            })
        })
    })
}

/// `(xy)z = x(yz) + x(zy)` on all basis triples, by dense loops.
pub fn dense_left_zinbiel(c: &Dense) -> bool {
    let n = c.len();
    let e = |i| unit(n, i);
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| {
                let lhs = dense_mul(c, &dense_mul(c, &e(x), &e(y)), &e(z));
                let rhs = add(&dense_mul(c, &e(x), &dense_mul(c, &e(y), &e(z))), &dense_mul(c, &e(x), &dense_mul(c, &e(z), &e(y))));
                lhs == rhs
            })
        })
    })
}

/// Dense coproduct `d[k][i][j]`.
pub type DenseCo = Vec<Vec<Vec<Q>>>;

pub fn dense_co(c: &zinbiel::CoalgebraTable) -> DenseCo {
    let n = c.dim();
    let mut d = vec![vec![vec![Q::zero(); n]; n]; n];
    for ((k, i, j), s) in c.coproduct().iter() {
        d[k][i][j] = to_q(s);
    }
    d
}

type Legs3 = BTreeMap<(usize, usize, usize), Q>;

fn put(m: &mut Legs3, key: (usize, usize, usize), v: Q) {
    let e = m.entry(key).or_insert_with(Q::zero);
    *e += v;
    if e.is_zero() {
        m.remove(&key);
    }
}

/// `(Δ⊗id)Δ(e_k)` and `(id⊗Δ)Δ(e_k)` with an optional flip of the inner
/// coproduct, spelled out with explicit sums.
fn iterate(d: &DenseCo, k: usize, first: bool, inner_flip: bool) -> Legs3 {
    let n = d.len();
    let mut out = Legs3::new();
    for i in 0..n {
        for j in 0..n {
            let s = &d[k][i][j];
            if s.is_zero() {
                continue;
            }
            let split = if first { i } else { j };
            for p in 0..n {
                for r in 0..n {
                    let t = if inner_flip { &d[split][r][p] } else { &d[split][p][r] };
                    if t.is_zero() {
                        continue;
                    }
                    let key = if first { (p, r, j) } else { (i, p, r) };
                    put(&mut out, key, s * t);
                }
            }
        }
    }
    out
}

fn sum(a: Legs3, b: Legs3) -> Legs3 {
    let mut out = a;
    for (k, v) in b {
        put(&mut out, k, v);
    }
    out
}

/// `(id⊗Δ)Δ = (Δ⊗id)Δ + ((τΔ)⊗id)Δ` at every basis vector.
pub fn dense_co_right(d: &DenseCo) -> bool {
    (0..d.len()).all(|k| iterate(d, k, false, false) == sum(iterate(d, k, true, false), iterate(d, k, true, true)))
}

/// `(Δ⊗id)Δ = (id⊗Δ)Δ + (id⊗(τΔ))Δ` at every basis vector.
pub fn dense_co_left(d: &DenseCo) -> bool {
    (0..d.len()).all(|k| iterate(d, k, true, false) == sum(iterate(d, k, false, false), iterate(d, k, false, true)))
}

/// Shuffle product of words, by the recursion `ua ш vb = (u ш vb)a + (ua ш v)b`.
pub fn shuffle(u: &[u8], v: &[u8]) -> BTreeMap<Vec<u8>, i64> {
    let mut out = BTreeMap::new();
    if u.is_empty() || v.is_empty() {
        out.insert([u, v].concat(), 1);
        return out;
    }
    let (ul, vl) = (u[u.len() - 1], v[v.len() - 1]);
    for (w, c) in shuffle(&u[..u.len() - 1], v) {
        let mut w = w;
        w.push(ul);
        *out.entry(w).or_insert(0) += c;
    }
    for (w, c) in shuffle(u, &v[..v.len() - 1]) {
        let mut w = w;
        w.push(vl);
        *out.entry(w).or_insert(0) += c;
    }
    out
}

/// `u ∗ v = (u ш v') · last(v)` on words, dropping words longer than `max_len`.
pub fn halfshuffle(u: &[u8], v: &[u8], max_len: usize) -> BTreeMap<Vec<u8>, i64> {
    let last = v[v.len() - 1];
    shuffle(u, &v[..v.len() - 1])
        .into_iter()
        .filter(|(w, _)| w.len() < max_len)
        .map(|(mut w, c)| {
            w.push(last);
            (w, c)
        })
        .collect()
}

/// Every nonempty word over the first `letters` letters up to `max_len`.
pub fn all_words(letters: usize, max_len: usize) -> Vec<Vec<u8>> {
    let mut out: Vec<Vec<u8>> = Vec::new();
    let mut layer: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                (0..letters as u8).map(move |l| {
                    let mut w = w.clone();
                    w.push(b'a' + l);
                    w
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}
