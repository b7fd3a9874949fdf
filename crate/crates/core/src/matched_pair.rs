//! Matched pairs of right Zinbiel algebras and their double on `A ⊕ B`.
//!
//! `lA, rA` are families indexed by the basis of A acting on B, `lB, rB` the
//! other way round. The double is
//!
//! ```text
//! (x+a)*(y+b) = (x·y + lB(a)y + rB(b)x) + (a∘b + lA(x)b + rA(y)a)
//! ```
//!
//! and it is right Zinbiel exactly when both algebras are, both action pairs
//! are bimodules, and the six compatibility equalities below hold.
//!
//! Tuples label basis vectors of A as `e*` and of B as `f*`.

use crate::algebra::AlgebraTable;
use crate::audit::zinbiel_identity;
use crate::bimodule::{axiom_findings, check_family, extend_linearly, Bimodule};
use crate::error::{Error, Result};
use crate::identity::{catalog_entry, evaluate};
use crate::models::Orientation;
use crate::report::{Finding, Report};
use crate::tensor::{Matrix, Tensor3, Vector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPairData {
    pub a: AlgebraTable,
    pub b: AlgebraTable,
    /// `dim A` matrices, each `dim B × dim B`.
    pub l_a: Vec<Matrix>,
    pub r_a: Vec<Matrix>,
    /// `dim B` matrices, each `dim A × dim A`.
    pub l_b: Vec<Matrix>,
    pub r_b: Vec<Matrix>,
}

impl MatchedPairData {
    pub fn new(a: AlgebraTable, b: AlgebraTable, l_a: Vec<Matrix>, r_a: Vec<Matrix>, l_b: Vec<Matrix>, r_b: Vec<Matrix>) -> Result<Self> {
        let (n, p) = (a.dim(), b.dim());
        check_family("lA", &l_a, n, p, p)?;
        check_family("rA", &r_a, n, p, p)?;
        check_family("lB", &l_b, p, n, n)?;
        check_family("rB", &r_b, p, n, n)?;
        Ok(MatchedPairData { a, b, l_a, r_a, l_b, r_b })
    }

    /// All four families zero.
    pub fn trivial(a: &AlgebraTable, b: &AlgebraTable) -> Self {
        let (n, p) = (a.dim(), b.dim());
        MatchedPairData {
            a: a.clone(),
            b: b.clone(),
            l_a: vec![Matrix::zeros(p, p); n],
            r_a: vec![Matrix::zeros(p, p); n],
            l_b: vec![Matrix::zeros(n, n); p],
            r_b: vec![Matrix::zeros(n, n); p],
        }
    }

    /// A bimodule seen as a matched pair with `B = V` carrying the zero product.
    pub fn from_bimodule(m: &Bimodule) -> Self {
        let mut mp = MatchedPairData::trivial(m.base(), &AlgebraTable::zero(m.v_dim()));
        mp.l_a = m.l().to_vec();
        mp.r_a = m.r().to_vec();
        mp
    }

    /// Read the maps off an algebra `D = A ⊕ B` whose listed basis subsets
    /// span subalgebras. The subsets must partition the basis of `D`.
    pub fn from_decomposition(d: &AlgebraTable, a_idx: &[usize], b_idx: &[usize]) -> Result<Self> {
        let mut seen = vec![false; d.dim()];
        for &i in a_idx.iter().chain(b_idx) {
            if i >= d.dim() {
                return Err(Error::IndexOutOfRange { index: i, dim: d.dim() });
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::Input(format!("basis index {i} listed twice")));
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Input("the two index sets do not cover the basis".into()));
        }
        let a = d.subalgebra(a_idx)?;
        let b = d.subalgebra(b_idx)?;
        let mut mp = MatchedPairData::trivial(&a, &b);
        for (x, &gx) in a_idx.iter().enumerate() {
            for (f, &gf) in b_idx.iter().enumerate() {
                for (k, s) in d.basis_product(gx, gf) {
                    match a_idx.iter().position(|i| i == k) {
                        Some(row) => mp.r_b[f].set(row, x, s.clone()),
                        None => {
                            let row = b_idx.iter().position(|i| i == k).expect("partition");
                            mp.l_a[x].set(row, f, s.clone());
                        }
                    }
                }
                for (k, s) in d.basis_product(gf, gx) {
                    match a_idx.iter().position(|i| i == k) {
                        Some(row) => mp.l_b[f].set(row, x, s.clone()),
                        None => {
                            let row = b_idx.iter().position(|i| i == k).expect("partition");
                            mp.r_a[x].set(row, f, s.clone());
                        }
                    }
                }
            }
        }
        Ok(mp)
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.a.dim(), self.b.dim())
    }

    fn e(&self, i: usize) -> Vector {
        Vector::basis(self.a.dim(), i)
    }

    fn f(&self, i: usize) -> Vector {
        Vector::basis(self.b.dim(), i)
    }

    fn la(&self, x: &Vector) -> Matrix {
        extend_linearly(&self.l_a, x, self.b.dim())
    }

    fn ra(&self, x: &Vector) -> Matrix {
        extend_linearly(&self.r_a, x, self.b.dim())
    }

    fn lb(&self, a: &Vector) -> Matrix {
        extend_linearly(&self.l_b, a, self.a.dim())
    }

    fn rb(&self, a: &Vector) -> Matrix {
        extend_linearly(&self.r_b, a, self.a.dim())
    }

    fn bimodules(&self) -> (Bimodule, Bimodule) {
        let (n, p) = self.dims();
        (
            Bimodule::new(self.a.clone(), p, self.l_a.clone(), self.r_a.clone()).expect("shapes checked"),
            Bimodule::new(self.b.clone(), n, self.l_b.clone(), self.r_b.clone()).expect("shapes checked"),
        )
    }
}

fn right_zinbiel_finding(claim: &str, t: &AlgebraTable) -> Finding {
    let id = zinbiel_identity(Orientation::Right);
    Finding::from_residuals(claim, id.to_string(), &evaluate(t, id), true)
}

/// Prerequisites (both algebras right Zinbiel, both bimodules) followed by
/// the six compatibility equalities.
pub fn check_matched_pair(mp: &MatchedPairData) -> Report {
    let (n, p) = mp.dims();
    let mut report = Report::new("matched_pair", format!("dim A = {n}, dim B = {p}"));
    report.push(right_zinbiel_finding("A_right_zinbiel", &mp.a));
    report.push(right_zinbiel_finding("B_right_zinbiel", &mp.b));
    let (on_b, on_a) = mp.bimodules();
    report.extend(axiom_findings(&on_b, "A_on_B_", "e", "f"));
    report.extend(axiom_findings(&on_a, "B_on_A_", "f", "e"));

    let (a, b) = (&mp.a, &mp.b);
    let xya = [("e", n), ("e", n), ("f", p)];
    let abx = [("f", p), ("f", p), ("e", n)];

    report.push(Finding::scan("compat_rB", "rB(a)(x·y + y·x) = x·(rB(a)y) + rB(lA(y)a)x", &xya, |t| {
        let (x, y, f) = (mp.e(t[0]), mp.e(t[1]), mp.f(t[2]));
        let rb = &mp.r_b[t[2]];
        let lhs = rb.apply(&a.mul(&x, &y).add(&a.mul(&y, &x)));
        let rhs = a.mul(&x, &rb.apply(&y)).add(&mp.rb(&mp.l_a[t[1]].apply(&f)).apply(&x));
        (lhs.into(), rhs.into())
    }));
    report.push(Finding::scan("compat_rA", "rA(x)(a∘b + b∘a) = a∘(rA(x)b) + rA(lB(b)x)a", &abx, |t| {
        let (fa, fb, x) = (mp.f(t[0]), mp.f(t[1]), mp.e(t[2]));
        let ra = &mp.r_a[t[2]];
        let lhs = ra.apply(&b.mul(&fa, &fb).add(&b.mul(&fb, &fa)));
        let rhs = b.mul(&fa, &ra.apply(&fb)).add(&mp.ra(&mp.l_b[t[1]].apply(&x)).apply(&fa));
        (lhs.into(), rhs.into())
    }));

    // lB(a)(x·y) = ((lB+rB)(a)x)·y + lB((lA+rA)(x)a)y = x·(lB(a)y) + rB(rA(y)a)x
    let lb_middle = |x: usize, y: usize, f: usize| {
        let (ex, ey, ef) = (mp.e(x), mp.e(y), mp.f(f));
        let lbrb_x = mp.l_b[f].add(&mp.r_b[f]).apply(&ex);
        let lara_a = mp.l_a[x].add(&mp.r_a[x]).apply(&ef);
        a.mul(&lbrb_x, &ey).add(&mp.lb(&lara_a).apply(&ey))
    };
    report.push(Finding::scan("compat_lB_first", "lB(a)(x·y) = ((lB+rB)(a)x)·y + lB((lA+rA)(x)a)y", &xya, |t| {
        let lhs = mp.l_b[t[2]].apply(&a.mul(&mp.e(t[0]), &mp.e(t[1])));
        (lhs.into(), lb_middle(t[0], t[1], t[2]).into())
    }));
    report.push(Finding::scan("compat_lB_second", "((lB+rB)(a)x)·y + lB((lA+rA)(x)a)y = x·(lB(a)y) + rB(rA(y)a)x", &xya, |t| {
        let (ex, ey, ef) = (mp.e(t[0]), mp.e(t[1]), mp.f(t[2]));
        let rhs = a.mul(&ex, &mp.l_b[t[2]].apply(&ey)).add(&mp.rb(&mp.r_a[t[1]].apply(&ef)).apply(&ex));
        (lb_middle(t[0], t[1], t[2]).into(), rhs.into())
    }));

    // lA(x)(a∘b) = lA((lB+rB)(a)x)b + ((lA+rA)(x)a)∘b = a∘(lA(x)b) + rA(rB(b)x)a
    let la_middle = |fa: usize, fb: usize, x: usize| {
        let (ea, eb, ex) = (mp.f(fa), mp.f(fb), mp.e(x));
        let lbrb_x = mp.l_b[fa].add(&mp.r_b[fa]).apply(&ex);
        let lara_a = mp.l_a[x].add(&mp.r_a[x]).apply(&ea);
        mp.la(&lbrb_x).apply(&eb).add(&b.mul(&lara_a, &eb))
    };
    report.push(Finding::scan("compat_lA_first", "lA(x)(a∘b) = lA((lB+rB)(a)x)b + ((lA+rA)(x)a)∘b", &abx, |t| {
        let lhs = mp.l_a[t[2]].apply(&b.mul(&mp.f(t[0]), &mp.f(t[1])));
        (lhs.into(), la_middle(t[0], t[1], t[2]).into())
    }));
    report.push(Finding::scan("compat_lA_second", "lA((lB+rB)(a)x)b + ((lA+rA)(x)a)∘b = a∘(lA(x)b) + rA(rB(b)x)a", &abx, |t| {
        let (ea, eb, ex) = (mp.f(t[0]), mp.f(t[1]), mp.e(t[2]));
        let rhs = b.mul(&ea, &mp.l_a[t[2]].apply(&eb)).add(&mp.ra(&mp.r_b[t[1]].apply(&ex)).apply(&ea));
        (la_middle(t[0], t[1], t[2]).into(), rhs.into())
    }));
    report
}

pub fn is_matched_pair(mp: &MatchedPairData) -> bool {
    check_matched_pair(mp).all_hold()
}

fn labelled_sum(a: &AlgebraTable, b: &AlgebraTable) -> Vec<String> {
    a.basis().iter().chain(b.basis()).cloned().collect()
}

/// The product on `A ⊕ B` built from the two algebras and the four families.
pub fn double(mp: &MatchedPairData) -> AlgebraTable {
    let (n, p) = mp.dims();
    let mut t = Tensor3::cube(n + p);
    for ((i, j, k), s) in mp.a.structure().iter() {
        t.add_at(i, j, k, s);
    }
    for ((i, j, k), s) in mp.b.structure().iter() {
        t.add_at(n + i, n + j, n + k, s);
    }
    for f in 0..p {
        // x * f: rB(f)x in A, lA(x)f in B; f * x: lB(f)x in A, rA(x)f in B.
        for ((row, x), s) in mp.r_b[f].iter() {
            t.add_at(x, n + f, row, s);
        }
        for ((row, x), s) in mp.l_b[f].iter() {
            t.add_at(n + f, x, row, s);
        }
    }
    for x in 0..n {
        for ((row, f), s) in mp.l_a[x].iter() {
            t.add_at(x, n + f, n + row, s);
        }
        for ((row, f), s) in mp.r_a[x].iter() {
            t.add_at(n + f, x, n + row, s);
        }
    }
    AlgebraTable::new(labelled_sum(&mp.a, &mp.b), t).expect("square tensor")
}

fn identity_finding(claim: &str, name: &str, t: &AlgebraTable) -> Finding {
    let id = catalog_entry(name).expect("catalog entry");
    Finding::from_residuals(claim, id.to_string(), &evaluate(t, id), !id.rhs().is_empty())
}

/// Matched pair of commutative associative algebras `(G, H)` with
/// `ρ: G → gl(H)` and `μ: H → gl(G)`, whose double is
/// `(x+a)(y+b) = x·y + μ(a)y + μ(b)x + a∘b + ρ(x)b + ρ(y)a`.
pub fn commassoc_matched_pair(g: &AlgebraTable, h: &AlgebraTable, rho: &[Matrix], mu: &[Matrix], subject: &str) -> Report {
    let (n, p) = (g.dim(), h.dim());
    let mut report = Report::new("commassoc_matched_pair", subject);
    report.push(identity_finding("G_commutative", "commutative", g));
    report.push(identity_finding("G_associative", "associative", g));
    report.push(identity_finding("H_commutative", "commutative", h));
    report.push(identity_finding("H_associative", "associative", h));
    let e = |i| Vector::basis(n, i);
    let f = |i| Vector::basis(p, i);
    report.push(Finding::scan("rho_representation", "ρ(x·y) = ρ(x)ρ(y)", &[("e", n), ("e", n), ("f", p)], |t| {
        let lhs = extend_linearly(rho, &g.mul_basis(t[0], t[1]), p).apply(&f(t[2]));
        let rhs = rho[t[0]].apply(&rho[t[1]].apply(&f(t[2])));
        (lhs.into(), rhs.into())
    }));
    report.push(Finding::scan("mu_representation", "μ(a∘b) = μ(a)μ(b)", &[("f", p), ("f", p), ("e", n)], |t| {
        let lhs = extend_linearly(mu, &h.mul_basis(t[0], t[1]), n).apply(&e(t[2]));
        let rhs = mu[t[0]].apply(&mu[t[1]].apply(&e(t[2])));
        (lhs.into(), rhs.into())
    }));
    report.push(Finding::scan("compat_rho", "ρ(x)(a∘b) = (ρ(x)a)∘b + ρ(μ(a)x)b", &[("e", n), ("f", p), ("f", p)], |t| {
        let (x, a, b) = (t[0], f(t[1]), f(t[2]));
        let lhs = rho[x].apply(&h.mul(&a, &b));
        let rhs = h.mul(&rho[x].apply(&a), &b).add(&extend_linearly(rho, &mu[t[1]].apply(&e(x)), p).apply(&b));
        (lhs.into(), rhs.into())
    }));
    report.push(Finding::scan("compat_mu", "μ(a)(x·y) = (μ(a)x)·y + μ(ρ(x)a)y", &[("f", p), ("e", n), ("e", n)], |t| {
        let (a, x, y) = (t[0], e(t[1]), e(t[2]));
        let lhs = mu[a].apply(&g.mul(&x, &y));
        let rhs = g.mul(&mu[a].apply(&x), &y).add(&extend_linearly(mu, &rho[t[1]].apply(&f(a)), n).apply(&y));
        (lhs.into(), rhs.into())
    }));
    report
}

/// The double of [`commassoc_matched_pair`].
pub fn commassoc_double(g: &AlgebraTable, h: &AlgebraTable, rho: &[Matrix], mu: &[Matrix]) -> AlgebraTable {
    let mp = MatchedPairData { a: g.clone(), b: h.clone(), l_a: rho.to_vec(), r_a: rho.to_vec(), l_b: mu.to_vec(), r_b: mu.to_vec() };
    double(&mp)
}

/// Matched pair of Lie algebras `(G, H)` with `ρ: G → gl(H)`, `μ: H → gl(G)`,
/// whose double bracket is `[x,y] + μ(a)y - μ(b)x + [a,b] + ρ(x)b - ρ(y)a`.
pub fn lie_matched_pair(g: &AlgebraTable, h: &AlgebraTable, rho: &[Matrix], mu: &[Matrix], subject: &str) -> Report {
    let (n, p) = (g.dim(), h.dim());
    let mut report = Report::new("lie_matched_pair", subject);
    report.push(identity_finding("G_jacobi", "jacobi", g));
    report.push(identity_finding("H_jacobi", "jacobi", h));
    let e = |i| Vector::basis(n, i);
    let f = |i| Vector::basis(p, i);
    let rho_at = |v: &Vector| extend_linearly(rho, v, p);
    let mu_at = |v: &Vector| extend_linearly(mu, v, n);
    report.push(Finding::scan("rho_representation", "ρ([x,y]) = ρ(x)ρ(y) - ρ(y)ρ(x)", &[("e", n), ("e", n), ("f", p)], |t| {
        let b = f(t[2]);
        let lhs = rho_at(&g.mul_basis(t[0], t[1])).apply(&b);
        let rhs = rho[t[0]].apply(&rho[t[1]].apply(&b)).sub(&rho[t[1]].apply(&rho[t[0]].apply(&b)));
        (lhs.into(), rhs.into())
    }));
    report.push(Finding::scan("mu_representation", "μ([a,b]) = μ(a)μ(b) - μ(b)μ(a)", &[("f", p), ("f", p), ("e", n)], |t| {
        let x = e(t[2]);
        let lhs = mu_at(&h.mul_basis(t[0], t[1])).apply(&x);
        let rhs = mu[t[0]].apply(&mu[t[1]].apply(&x)).sub(&mu[t[1]].apply(&mu[t[0]].apply(&x)));
        (lhs.into(), rhs.into())
    }));
    report.push(Finding::scan(
        "compat_rho",
        "ρ(x)[a,b] - [ρ(x)a,b] - [a,ρ(x)b] + ρ(μ(a)x)b - ρ(μ(b)x)a = 0",
        &[("e", n), ("f", p), ("f", p)],
        |t| {
            let (x, a, b) = (t[0], f(t[1]), f(t[2]));
            let mut v = rho[x].apply(&h.mul(&a, &b));
            v = v.sub(&h.mul(&rho[x].apply(&a), &b)).sub(&h.mul(&a, &rho[x].apply(&b)));
            v = v.add(&rho_at(&mu[t[1]].apply(&e(x))).apply(&b)).sub(&rho_at(&mu[t[2]].apply(&e(x))).apply(&a));
            (v.into(), Vector::zero(p).into())
        },
    ));
    report.push(Finding::scan(
        "compat_mu",
        "μ(a)[x,y] - [μ(a)x,y] - [x,μ(a)y] + μ(ρ(x)a)y - μ(ρ(y)a)x = 0",
        &[("f", p), ("e", n), ("e", n)],
        |t| {
            let (a, x, y) = (t[0], e(t[1]), e(t[2]));
            let mut v = mu[a].apply(&g.mul(&x, &y));
            v = v.sub(&g.mul(&mu[a].apply(&x), &y)).sub(&g.mul(&x, &mu[a].apply(&y)));
            v = v.add(&mu_at(&rho[t[1]].apply(&f(a))).apply(&y)).sub(&mu_at(&rho[t[2]].apply(&f(a))).apply(&x));
            (v.into(), Vector::zero(n).into())
        },
    ));
    report
}

/// The double bracket of [`lie_matched_pair`].
pub fn lie_double(g: &AlgebraTable, h: &AlgebraTable, rho: &[Matrix], mu: &[Matrix]) -> AlgebraTable {
    let minus = |fam: &[Matrix]| fam.iter().map(|m| m.scaled(&crate::scalar::Scalar::from_int(-1))).collect();
    let mp = MatchedPairData { a: g.clone(), b: h.clone(), l_a: rho.to_vec(), r_a: minus(rho), l_b: mu.to_vec(), r_b: minus(mu) };
    double(&mp)
}

fn family_sum(x: &[Matrix], y: &[Matrix], sign: i64) -> Vec<Matrix> {
    let c = crate::scalar::Scalar::from_int(sign);
    x.iter()
        .zip(y)
        .map(|(a, b)| {
            let mut m = a.clone();
            m.add_scaled(&c, b);
            m
        })
        .collect()
}

/// Symmetrized algebras with `lA + rA`, `lB + rB`.
pub fn induced_commassoc_pair(mp: &MatchedPairData) -> Report {
    let g = mp.a.symmetrize();
    let h = mp.b.symmetrize();
    let rho = family_sum(&mp.l_a, &mp.r_a, 1);
    let mu = family_sum(&mp.l_b, &mp.r_b, 1);
    let mut r = commassoc_matched_pair(&g, &h, &rho, &mu, "symmetrized pair, maps lA+rA and lB+rB");
    r.vacuous = !is_matched_pair(mp);
    r
}

/// Commutator algebras with `lA - rA`, `lB - rB`.
pub fn induced_lie_pair(mp: &MatchedPairData) -> Report {
    let g = mp.a.commutator();
    let h = mp.b.commutator();
    let rho = family_sum(&mp.l_a, &mp.r_a, -1);
    let mu = family_sum(&mp.l_b, &mp.r_b, -1);
    let mut r = lie_matched_pair(&g, &h, &rho, &mu, "sub-adjacent pair, maps lA-rA and lB-rB");
    r.vacuous = !is_matched_pair(mp);
    r
}

/// Conditions, double, and both induced pairs.
pub fn matched_pair_audit(mp: &MatchedPairData, subject: &str) -> Report {
    let mut report = Report::new("matched_pair_audit", subject);
    let check = check_matched_pair(mp);
    report.vacuous = !check.all_hold();
    report.extend(check.findings);
    let d = double(mp);
    report.push(right_zinbiel_finding("double_right_zinbiel", &d).with_note(format!("on A ⊕ B, dimension {}", d.dim())));
    for (prefix, sub) in [("commassoc_", induced_commassoc_pair(mp)), ("lie_", induced_lie_pair(mp))] {
        report.extend(sub.findings.into_iter().map(|mut f| {
            f.claim = format!("{prefix}{}", f.claim);
            f
        }));
    }
    report
}
