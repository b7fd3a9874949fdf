//! Bilinear forms, the standard pairing on `A ⊕ A*`, and the Manin-triple
//! and equivalence checks for a pair of algebras `(A, A*)`.
//!
//! Dual maps are basis transposes against the natural pairing:
//! `⟨T*φ, v⟩ = ⟨φ, Tv⟩`.

use crate::algebra::AlgebraTable;
use crate::audit::zinbiel_identity;
use crate::coalgebra::{check_co_right, dualize, dualize_co, CoalgebraTable};
use crate::error::{Error, Result};
use crate::identity::evaluate;
use crate::matched_pair::{check_matched_pair, double, lie_matched_pair, MatchedPairData};
use crate::models::Orientation;
use crate::report::{Finding, Report, Value, Witness};
use crate::scalar::Scalar;
use crate::tensor::Matrix;

/// `B(e_i, e_j) = g[i][j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearFormTable {
    g: Matrix,
}

impl BilinearFormTable {
    pub fn new(g: Matrix) -> Result<Self> {
        if g.rows() != g.cols() {
            return Err(Error::Dimension(format!("form matrix must be square, got {}x{}", g.rows(), g.cols())));
        }
        Ok(BilinearFormTable { g })
    }

    pub fn dim(&self) -> usize {
        self.g.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.g
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.g.get(i, j)
    }
}

/// Block form `[[0, I], [I, 0]]` on `A ⊕ A*` with `dim A = n`.
pub fn standard_pairing(n: usize) -> BilinearFormTable {
    let mut g = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        g.set(i, n + i, Scalar::one());
        g.set(n + i, i, Scalar::one());
    }
    BilinearFormTable { g }
}

fn pair_row(form: &BilinearFormTable, v: &crate::tensor::Vector, z: usize) -> Scalar {
    let mut s = Scalar::zero();
    for (k, c) in v.iter() {
        s += &(c * &form.get(k, z));
    }
    s
}

fn invariance_finding(a: &AlgebraTable, form: &BilinearFormTable) -> Finding {
    let n = a.dim();
    Finding::scan("invariant", "B(x·y, z) = B(x, y·z)", &[("e", n), ("e", n), ("e", n)], |t| {
        let lhs = pair_row(form, &a.mul_basis(t[0], t[1]), t[2]);
        let yz = a.mul_basis(t[1], t[2]);
        let mut rhs = Scalar::zero();
        for (k, c) in yz.iter() {
            rhs += &(c * &form.get(t[0], k));
        }
        (lhs.into(), rhs.into())
    })
}

/// Symmetry, invariance over all basis triples, and nondegeneracy.
pub fn check_form(a: &AlgebraTable, form: &BilinearFormTable) -> Result<Report> {
    let n = a.dim();
    if form.dim() != n {
        return Err(Error::Dimension(format!("form has dimension {}, algebra {}", form.dim(), n)));
    }
    let mut r = Report::new("bilinear_form", format!("dim {n}"));
    r.push(Finding::scan("symmetric", "B(x, y) = B(y, x)", &[("e", n), ("e", n)], |t| {
        (form.get(t[0], t[1]).into(), form.get(t[1], t[0]).into())
    }));
    r.push(invariance_finding(a, form));
    let rank = form.g.rank();
    r.push(Finding::flag("nondegenerate", "rank B = dim", rank == n).with_note(format!("rank {rank} of {n}")));
    Ok(r)
}

/// `(A, A*)`, with `A*` the product on the dual space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BialgebraCandidate {
    pub a: AlgebraTable,
    pub astar: AlgebraTable,
}

impl BialgebraCandidate {
    pub fn new(a: AlgebraTable, astar: AlgebraTable) -> Result<Self> {
        if a.dim() != astar.dim() {
            return Err(Error::Dimension(format!("A has dimension {}, A* {}", a.dim(), astar.dim())));
        }
        Ok(BialgebraCandidate { a, astar })
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }
}

fn transposes(t: &AlgebraTable, mult: impl Fn(&AlgebraTable, usize) -> Matrix) -> Vec<Matrix> {
    (0..t.dim()).map(|i| mult(t, i).transpose()).collect()
}

/// `lA = R_·^T`, `rA = L_·^T` on `A*`; `lB = R_∘^T`, `rB = L_∘^T` on `A`.
pub fn dual_reps(bc: &BialgebraCandidate) -> MatchedPairData {
    MatchedPairData::new(
        bc.a.clone(),
        bc.astar.clone(),
        transposes(&bc.a, AlgebraTable::right_mult),
        transposes(&bc.a, AlgebraTable::left_mult),
        transposes(&bc.astar, AlgebraTable::right_mult),
        transposes(&bc.astar, AlgebraTable::left_mult),
    )
    .expect("square families of matching size")
}

/// The product on `A ⊕ A*` built from [`dual_reps`].
pub fn bialgebra_double(bc: &BialgebraCandidate) -> AlgebraTable {
    double(&dual_reps(bc))
}

fn block_finding(d: &AlgebraTable, claim: &str, block: usize, n: usize) -> Finding {
    let (label, other) = if block == 0 { ("e", n) } else { ("f", 0) };
    Finding::scan(claim, "products of block elements stay in the block", &[(label, n), (label, n)], |t| {
        let v = d.mul_basis(block + t[0], block + t[1]);
        (v.project(other, n).into(), crate::tensor::Vector::zero(n).into())
    })
}

fn isotropy_finding(form: &BilinearFormTable, claim: &str, block: usize, n: usize) -> Finding {
    let label = if block == 0 { "e" } else { "f" };
    Finding::scan(claim, "B vanishes on the block", &[(label, n), (label, n)], |t| {
        (form.get(block + t[0], block + t[1]).into(), Scalar::zero().into())
    })
}

/// Subalgebra and isotropy of both blocks, the double's right-Zinbiel check,
/// and the standard pairing's symmetry, nondegeneracy and invariance on it.
pub fn check_manin_triple(bc: &BialgebraCandidate) -> Report {
    let n = bc.dim();
    let d = bialgebra_double(bc);
    let form = standard_pairing(n);
    let mut r = Report::new("manin_triple", format!("A ⊕ A*, dim {}", 2 * n));
    r.push(block_finding(&d, "A_subalgebra", 0, n).with_note("holds by construction"));
    r.push(block_finding(&d, "Astar_subalgebra", n, n).with_note("holds by construction"));
    r.push(isotropy_finding(&form, "A_isotropic", 0, n).with_note("holds by construction"));
    r.push(isotropy_finding(&form, "Astar_isotropic", n, n).with_note("holds by construction"));
    let id = zinbiel_identity(Orientation::Right);
    r.push(Finding::from_residuals("double_right_zinbiel", id.to_string(), &evaluate(&d, id), true));
    let mut fr = check_form(&d, &form).expect("matching dimensions");
    for f in &mut fr.findings {
        f.claim = format!("pairing_{}", f.claim);
    }
    r.extend(fr.findings);
    r
}

fn neg_adjoint_duals(t: &AlgebraTable) -> Vec<Matrix> {
    let minus = Scalar::from_int(-1);
    (0..t.dim()).map(|i| t.left_mult(i).sub(&t.right_mult(i)).transpose().scaled(&minus)).collect()
}

/// Maps of [`dual_reps`] read off the coproduct `Δ` of `A*` directly.
fn coproduct_reps(a: &AlgebraTable, c: &CoalgebraTable) -> MatchedPairData {
    let n = a.dim();
    let mut l_b = vec![Matrix::zeros(n, n); n];
    let mut r_b = vec![Matrix::zeros(n, n); n];
    for ((k, i, j), s) in c.coproduct().iter() {
        // f^i ∘ f^j = Σ d[k][i][j] f^k
        l_b[j].add_at(i, k, s);
        r_b[i].add_at(j, k, s);
    }
    MatchedPairData::new(
        a.clone(),
        dualize_co(c),
        transposes(a, AlgebraTable::right_mult),
        transposes(a, AlgebraTable::left_mult),
        l_b,
        r_b,
    )
    .expect("square families of matching size")
}

/// Condition (3) restated through `Δ = dualize(A*)`: the right-Zinbiel
/// check on `A*` becomes the co-right check on `Δ`.
pub fn check_coproduct_bialgebra(bc: &BialgebraCandidate) -> Report {
    let c = dualize(&bc.astar);
    let mut r = Report::new("zinbiel_bialgebra", format!("A with Δ = dual of A*, dim {}", bc.dim()));
    r.push(Finding::flag("dualize_involution", "dualize_co(dualize(A*)) = A*", dualize_co(&c) == bc.astar));
    r.push(check_co_right(&c));
    let mp = check_matched_pair(&coproduct_reps(&bc.a, &c));
    r.extend(mp.findings.into_iter().filter(|f| f.claim != "B_right_zinbiel"));
    r
}

/// The four conditions, evaluated independently.
#[derive(Clone, Debug)]
pub struct Equivalence {
    pub manin_triple: bool,
    pub lie_matched_pair: bool,
    pub matched_pair: bool,
    pub bialgebra: bool,
    pub report: Report,
}

impl Equivalence {
    pub fn verdicts(&self) -> [bool; 4] {
        [self.manin_triple, self.lie_matched_pair, self.matched_pair, self.bialgebra]
    }

    pub fn agree(&self) -> bool {
        let v = self.verdicts();
        v.iter().all(|&b| b == v[0])
    }
}

const BRANCHES: [(&str, &str); 4] = [
    ("manin_", "Manin triple with the standard pairing"),
    ("lie_", "Lie matched pair of the commutator algebras with -ad*"),
    ("matched_", "matched pair with the dual representations"),
    ("bialgebra_", "Zinbiel bialgebra through the dualized coproduct"),
];

pub fn equivalence_audit(bc: &BialgebraCandidate) -> Equivalence {
    let ((manin, lie), (matched, bialg)) = rayon::join(
        || {
            rayon::join(
                || check_manin_triple(bc),
                || {
                    let (g, h) = (bc.a.commutator(), bc.astar.commutator());
                    lie_matched_pair(&g, &h, &neg_adjoint_duals(&bc.a), &neg_adjoint_duals(&bc.astar), "commutator algebras")
                },
            )
        },
        || rayon::join(|| check_matched_pair(&dual_reps(bc)), || check_coproduct_bialgebra(bc)),
    );
    let subs = [manin, lie, matched, bialg];
    let verdicts: Vec<bool> = subs.iter().map(Report::all_hold).collect();

    let mut report = Report::new("bialgebra_equivalence", format!("A, A* of dim {}", bc.dim()));
    for (n, ((prefix, statement), v)) in BRANCHES.iter().zip(&verdicts).enumerate() {
        report.push(Finding::flag(format!("condition_{}", n + 1), *statement, *v).with_note(prefix.trim_end_matches('_')));
    }
    let agree = verdicts.iter().all(|&b| b == verdicts[0]);
    let witnesses: Vec<Witness> = if agree {
        Vec::new()
    } else {
        subs.iter()
            .zip(BRANCHES)
            .flat_map(|(s, (prefix, _))| {
                s.findings.iter().filter(|f| !f.passed()).take(1).map(move |f| match f.witness() {
                    Some(w) => {
                        let mut w = w.clone();
                        w.tuple.insert(0, format!("{prefix}{}", f.claim));
                        w
                    }
                    None => Witness::from_residual(vec![format!("{prefix}{}", f.claim)], Value::from(Scalar::one())),
                })
            })
            .collect()
    };
    let mut agreement = Finding::new("conditions_agree", "the four conditions hold or fail together", witnesses);
    if agree {
        agreement = Finding::holds("conditions_agree", "the four conditions hold or fail together");
    }
    let text: Vec<&str> = verdicts.iter().map(|&b| if b { "true" } else { "false" }).collect();
    report.push(agreement.with_note(format!("verdicts [{}]", text.join(", "))));
    for (s, (prefix, _)) in subs.into_iter().zip(BRANCHES) {
        report.extend(s.findings.into_iter().map(|mut f| {
            f.claim = format!("{prefix}{}", f.claim);
            f
        }));
    }
    Equivalence {
        manin_triple: verdicts[0],
        lie_matched_pair: verdicts[1],
        matched_pair: verdicts[2],
        bialgebra: verdicts[3],
        report,
    }
}
