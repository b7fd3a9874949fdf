//! Bimodules `(l, r, V)` of a right Zinbiel algebra, the semidirect sum on
//! `A ⊕ V` and the induced action `l - r` of the sub-adjacent bracket.
//!
//! Actions compose as linear maps: `r_y l_x` applies `l_x` first. Every check
//! works per basis tuple `(x, y, v)` and reports the two sides as vectors of V.

use crate::algebra::AlgebraTable;
use crate::audit::zinbiel_identity;
use crate::error::{Error, Result};
use crate::identity::evaluate;
use crate::models::Orientation;
use crate::report::{Finding, Report, Value};
use crate::tensor::{Matrix, Tensor3, Vector};

/// `Σ x_i fam[i]`, an `m × m` matrix.
pub fn extend_linearly(fam: &[Matrix], x: &Vector, m: usize) -> Matrix {
    let mut out = Matrix::zeros(m, m);
    for (i, s) in x.iter() {
        out.add_scaled(s, &fam[i]);
    }
    out
}

pub(crate) fn check_family(name: &str, fam: &[Matrix], len: usize, rows: usize, cols: usize) -> Result<()> {
    if fam.len() != len {
        return Err(Error::Dimension(format!("{name} has {} matrices, expected {len}", fam.len())));
    }
    if let Some((i, m)) = fam.iter().enumerate().find(|(_, m)| m.shape() != (rows, cols)) {
        return Err(Error::Dimension(format!("{name}[{i}] is {}x{}, expected {rows}x{cols}", m.rows(), m.cols())));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    base: AlgebraTable,
    v_dim: usize,
    l: Vec<Matrix>,
    r: Vec<Matrix>,
}

impl Bimodule {
    pub fn new(base: AlgebraTable, v_dim: usize, l: Vec<Matrix>, r: Vec<Matrix>) -> Result<Self> {
        let n = base.dim();
        check_family("l", &l, n, v_dim, v_dim)?;
        check_family("r", &r, n, v_dim, v_dim)?;
        Ok(Bimodule { base, v_dim, l, r })
    }

    /// `V = A`, `l_x = L_x`, `r_x = R_x`.
    pub fn regular(base: &AlgebraTable) -> Self {
        let n = base.dim();
        let l = (0..n).map(|i| base.left_mult(i)).collect();
        let r = (0..n).map(|i| base.right_mult(i)).collect();
        Bimodule { base: base.clone(), v_dim: n, l, r }
    }

    pub fn zero(base: &AlgebraTable, v_dim: usize) -> Self {
        let n = base.dim();
        let z = vec![Matrix::zeros(v_dim, v_dim); n];
        Bimodule { base: base.clone(), v_dim, l: z.clone(), r: z }
    }

    pub fn base(&self) -> &AlgebraTable {
        &self.base
    }

    pub fn v_dim(&self) -> usize {
        self.v_dim
    }

    pub fn l(&self) -> &[Matrix] {
        &self.l
    }

    pub fn r(&self) -> &[Matrix] {
        &self.r
    }

    pub fn l_mut(&mut self) -> &mut [Matrix] {
        &mut self.l
    }

    pub fn r_mut(&mut self) -> &mut [Matrix] {
        &mut self.r
    }

    pub fn l_at(&self, x: &Vector) -> Matrix {
        extend_linearly(&self.l, x, self.v_dim)
    }

    pub fn r_at(&self, x: &Vector) -> Matrix {
        extend_linearly(&self.r, x, self.v_dim)
    }

    fn v(&self, i: usize) -> Vector {
        Vector::basis(self.v_dim, i)
    }

    fn slots(&self) -> [(&'static str, usize); 3] {
        self.slots_with("e", "v")
    }

    fn slots_with<'p>(&self, x: &'p str, v: &'p str) -> [(&'p str, usize); 3] {
        [(x, self.base.dim()), (x, self.base.dim()), (v, self.v_dim)]
    }
}

fn base_finding(base: &AlgebraTable) -> Finding {
    let id = zinbiel_identity(Orientation::Right);
    Finding::from_residuals("base_right_zinbiel", id.to_string(), &evaluate(base, id), true)
        .with_note("the acted-on algebra must itself be right Zinbiel")
}

/// The axioms, one finding each, preceded by the base-algebra prerequisite.
/// The bimodule is valid iff the report holds everywhere.
pub fn check_bimodule(b: &Bimodule) -> Report {
    let mut report = Report::new("bimodule", format!("dim A = {}, dim V = {}", b.base.dim(), b.v_dim));
    report.push(base_finding(&b.base));
    report.extend(axiom_findings(b, "", "e", "v"));
    report
}

/// The three axioms alone; claims get `prefix`, tuples use the given labels.
pub(crate) fn axiom_findings(b: &Bimodule, prefix: &str, x_label: &str, v_label: &str) -> Vec<Finding> {
    let a = &b.base;
    let slots = b.slots_with(x_label, v_label);
    let mut out = Vec::new();
    out.push(Finding::scan(format!("{prefix}left_action"), "l_x l_y = l_{x·y} + l_{y·x}", &slots, |t| {
        let (x, y, v) = (t[0], t[1], b.v(t[2]));
        let lhs = b.l[x].apply(&b.l[y].apply(&v));
        let rhs = b.l_at(&a.mul_basis(x, y).add(&a.mul_basis(y, x))).apply(&v);
        (lhs.into(), rhs.into())
    }));
    out.push(Finding::scan(format!("{prefix}mixed_action"), "l_x r_y = r_{x·y}", &slots, |t| {
        let (x, y, v) = (t[0], t[1], b.v(t[2]));
        let lhs = b.l[x].apply(&b.r[y].apply(&v));
        let rhs = b.r_at(&a.mul_basis(x, y)).apply(&v);
        (lhs.into(), rhs.into())
    }));
    out.push(Finding::scan(format!("{prefix}right_action"), "r_{x·y} = r_y r_x + r_y l_x", &slots, |t| {
        let (x, y, v) = (t[0], t[1], b.v(t[2]));
        let lhs = b.r_at(&a.mul_basis(x, y)).apply(&v);
        let rhs = b.r[y].apply(&b.r[x].apply(&v).add(&b.l[x].apply(&v)));
        (lhs.into(), rhs.into())
    }));
    out
}

pub fn is_bimodule(b: &Bimodule) -> bool {
    check_bimodule(b).all_hold()
}

/// The two relations said to follow from the axioms, with `r_y l_x` read
/// both ways. Vacuous when `b` is not a bimodule.
pub fn check_derived_relations(b: &Bimodule) -> Report {
    let mut report = Report::new("derived_relations", format!("dim A = {}, dim V = {}", b.base.dim(), b.v_dim));
    report.vacuous = !is_bimodule(b);
    let a = &b.base;
    report.push(
        Finding::scan("l_product_l_then_r", "l_{x·y} = r_y ∘ l_x", &b.slots(), |t| {
            let (x, y, v) = (t[0], t[1], b.v(t[2]));
            let lhs = b.l_at(&a.mul_basis(x, y)).apply(&v);
            let rhs = b.r[y].apply(&b.l[x].apply(&v));
            (lhs.into(), rhs.into())
        })
        .with_note("l_x applied first"),
    );
    report.push(
        Finding::scan("l_product_r_then_l", "l_{x·y} = l_x ∘ r_y", &b.slots(), |t| {
            let (x, y, v) = (t[0], t[1], b.v(t[2]));
            let lhs = b.l_at(&a.mul_basis(x, y)).apply(&v);
            let rhs = b.l[x].apply(&b.r[y].apply(&v));
            (lhs.into(), rhs.into())
        })
        .with_note("r_y applied first"),
    );
    report.push(Finding::scan("r_commute", "r_x r_y = r_y r_x", &b.slots(), |t| {
        let (x, y, v) = (t[0], t[1], b.v(t[2]));
        let lhs = b.r[x].apply(&b.r[y].apply(&v));
        let rhs = b.r[y].apply(&b.r[x].apply(&v));
        (lhs.into(), rhs.into())
    }));
    report
}

/// `(x+u)*(y+v) = x·y + l_x v + r_y u` on `A ⊕ V`; the `V×V` block is zero.
pub fn semidirect_sum(b: &Bimodule) -> AlgebraTable {
    let n = b.base.dim();
    let dim = n + b.v_dim;
    let mut t = Tensor3::cube(dim);
    for ((i, j, k), s) in b.base.structure().iter() {
        t.set(i, j, k, s.clone());
    }
    for x in 0..n {
        for ((row, col), s) in b.l[x].iter() {
            t.add_at(x, n + col, n + row, s);
        }
        for ((row, col), s) in b.r[x].iter() {
            t.add_at(n + col, x, n + row, s);
        }
    }
    let mut labels = b.base.basis().to_vec();
    labels.extend((0..b.v_dim).map(|i| format!("v{i}")));
    AlgebraTable::new(labels, t).expect("square tensor")
}

/// The family `x ↦ l_x - r_x` and whether it represents the bracket
/// `[x,y] = x·y - y·x`.
pub fn induced_subadjacent_map(b: &Bimodule) -> (Vec<Matrix>, Finding) {
    let rho: Vec<Matrix> = b.l.iter().zip(&b.r).map(|(l, r)| l.sub(r)).collect();
    let a = &b.base;
    let finding = Finding::scan("subadjacent_representation", "ρ_{[x,y]} = ρ_x ρ_y - ρ_y ρ_x, ρ = l - r", &b.slots(), |t| {
        let (x, y, v) = (t[0], t[1], b.v(t[2]));
        let bracket = a.mul_basis(x, y).sub(&a.mul_basis(y, x));
        let lhs = extend_linearly(&rho, &bracket, b.v_dim).apply(&v);
        let rhs = rho[x].apply(&rho[y].apply(&v)).sub(&rho[y].apply(&rho[x].apply(&v)));
        (Value::from(lhs), Value::from(rhs))
    });
    (rho, finding)
}

/// Everything this module can say about one bimodule.
pub fn bimodule_audit(b: &Bimodule, subject: &str) -> Report {
    let mut report = Report::new("bimodule_audit", subject);
    let axioms = check_bimodule(b);
    report.vacuous = !axioms.all_hold();
    report.extend(axioms.findings);
    report.extend(check_derived_relations(b).findings);
    report.push(induced_subadjacent_map(b).1);
    let sd = semidirect_sum(b);
    let id = zinbiel_identity(Orientation::Right);
    report.push(
        Finding::from_residuals("semidirect_right_zinbiel", id.to_string(), &evaluate(&sd, id), true)
            .with_note(format!("on A ⊕ V, dimension {}", sd.dim())),
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::trunc_integration;
    use crate::scalar::Scalar;

    fn t(n: usize) -> AlgebraTable {
        trunc_integration(n, Orientation::Right)
    }

    #[test]
    fn regular_bimodule_of_right_model_is_valid() {
        for n in 0..=5 {
            let b = Bimodule::regular(&t(n));
            assert!(check_bimodule(&b).all_hold(), "n={n}");
            assert!(semidirect_sum(&b).is_right_zinbiel());
        }
    }

    #[test]
    fn zero_maps_are_a_bimodule() {
        let b = Bimodule::zero(&t(3), 2);
        assert!(check_bimodule(&b).all_hold());
        assert_eq!(semidirect_sum(&b), t(3).direct_sum(&AlgebraTable::zero(2)));
        assert!(check_derived_relations(&b).all_hold());
        let (rho, f) = induced_subadjacent_map(&b);
        assert!(rho.iter().all(Matrix::is_zero));
        assert!(f.passed());
    }

    #[test]
    fn perturbed_regular_bimodule_fails() {
        let mut b = Bimodule::regular(&t(3));
        b.l_mut()[0].add_at(1, 0, &Scalar::one());
        assert!(!is_bimodule(&b));
        assert!(!semidirect_sum(&b).is_right_zinbiel());
    }

    #[test]
    fn derived_relations_on_regular_t5() {
        let r = check_derived_relations(&Bimodule::regular(&t(5)));
        assert!(!r.vacuous);
        let comm = r.finding("r_commute").unwrap();
        assert_eq!(comm.witness().unwrap().to_string(), "(e0,e1,v0): (1/3)e3 vs (1/2)e3");
        assert!(comm.witnesses.iter().any(|w| w.to_string() == "(e1,e0,v0): (1/2)e3 vs (1/3)e3"));
        assert!(!r.finding("l_product_l_then_r").unwrap().passed());
        assert!(!r.finding("l_product_r_then_l").unwrap().passed());
    }

    #[test]
    fn semidirect_blocks() {
        let b = Bimodule::regular(&t(3));
        let sd = semidirect_sum(&b);
        assert_eq!(sd.dim(), 8);
        assert_eq!(sd.subalgebra(&[0, 1, 2, 3]).unwrap(), t(3));
        for i in 4..8 {
            for j in 4..8 {
                assert!(sd.mul_basis(i, j).is_zero());
            }
        }
    }

    #[test]
    fn linear_extension() {
        let b = Bimodule::regular(&t(4));
        let x = Vector::basis(5, 1).add(&Vector::basis(5, 2));
        assert_eq!(b.l_at(&x), b.l()[1].add(&b.l()[2]));
    }

    #[test]
    fn shapes_are_validated() {
        assert!(Bimodule::new(t(1), 2, vec![Matrix::zeros(2, 2)], vec![Matrix::zeros(2, 2); 2]).is_err());
        assert!(Bimodule::new(t(1), 2, vec![Matrix::zeros(2, 2); 2], vec![Matrix::zeros(2, 3); 2]).is_err());
    }
}
