//! Seeded single-entry perturbations and random objects.
//!
//! Every generator draws from a `ChaCha8Rng`, so a seed fixes the whole
//! family across platforms.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::AlgebraTable;
use crate::bialgebra::BialgebraCandidate;
use crate::bimodule::Bimodule;
use crate::coalgebra::CoalgebraTable;
use crate::matched_pair::MatchedPairData;
use crate::models::{positive_degree, trunc_integration, Orientation};
use crate::scalar::Scalar;
use crate::tensor::{Matrix, Tensor3};

/// Perturbations per base object in the standard fuzz families.
pub const FUZZ_COUNT: usize = 200;

pub struct Fuzzer {
    rng: ChaCha8Rng,
}

impl Fuzzer {
    pub fn new(seed: u64) -> Self {
        Fuzzer { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Nonzero `p/q` with `|p| ≤ 3`, `1 ≤ q ≤ 3`.
    pub fn scalar(&mut self) -> Scalar {
        let mut p = 0;
        while p == 0 {
            p = self.rng.gen_range(-3..=3);
        }
        Scalar::frac(p, self.rng.gen_range(1..=3))
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    fn bump_tensor(&mut self, t: &mut Tensor3) {
        let (a, b, c) = t.dims();
        if a * b * c == 0 {
            return;
        }
        let (i, j, k) = (self.index(a), self.index(b), self.index(c));
        let d = self.scalar();
        t.add_at(i, j, k, &d);
    }

    fn bump_family(&mut self, fam: &mut [Matrix]) {
        let Some(m) = fam.first() else { return };
        let (rows, cols) = m.shape();
        if rows * cols == 0 {
            return;
        }
        let i = self.index(fam.len());
        let (r, c) = (self.index(rows), self.index(cols));
        let d = self.scalar();
        fam[i].add_at(r, c, &d);
    }

    pub fn perturb_algebra(&mut self, a: &AlgebraTable) -> AlgebraTable {
        let mut t = a.structure().clone();
        self.bump_tensor(&mut t);
        AlgebraTable::new(a.basis().to_vec(), t).expect("same shape")
    }

    pub fn perturb_coalgebra(&mut self, c: &CoalgebraTable) -> CoalgebraTable {
        let mut t = c.coproduct().clone();
        self.bump_tensor(&mut t);
        CoalgebraTable::new(t).expect("same shape")
    }

    /// One entry of the base product or of `l` or `r`.
    pub fn perturb_bimodule(&mut self, b: &Bimodule) -> Bimodule {
        let mut out = b.clone();
        match self.index(3) {
            0 => out = Bimodule::new(self.perturb_algebra(b.base()), b.v_dim(), b.l().to_vec(), b.r().to_vec()).expect("same shape"),
            1 => self.bump_family(out.l_mut()),
            _ => self.bump_family(out.r_mut()),
        }
        out
    }

    /// One entry of either product or of one of the four maps.
    pub fn perturb_matched_pair(&mut self, mp: &MatchedPairData) -> MatchedPairData {
        let mut out = mp.clone();
        match self.index(6) {
            0 => out.a = self.perturb_algebra(&mp.a),
            1 => out.b = self.perturb_algebra(&mp.b),
            2 => self.bump_family(&mut out.l_a),
            3 => self.bump_family(&mut out.r_a),
            4 => self.bump_family(&mut out.l_b),
            _ => self.bump_family(&mut out.r_b),
        }
        out
    }

    /// `count` perturbations of one object.
    pub fn family<T>(&mut self, base: &T, count: usize, mut step: impl FnMut(&mut Self, &T) -> T) -> Vec<T> {
        (0..count).map(|_| step(self, base)).collect()
    }

    /// Random sparse table with up to `nnz` entries.
    pub fn algebra(&mut self, dim: usize, nnz: usize) -> AlgebraTable {
        let mut t = Tensor3::cube(dim);
        for _ in 0..nnz {
            self.bump_tensor(&mut t);
        }
        AlgebraTable::from_tensor(t).expect("cubic")
    }

    pub fn coalgebra(&mut self, dim: usize, nnz: usize) -> CoalgebraTable {
        let mut t = Tensor3::cube(dim);
        for _ in 0..nnz {
            self.bump_tensor(&mut t);
        }
        CoalgebraTable::new(t).expect("cubic")
    }

    pub fn bimodule(&mut self, dim: usize, v_dim: usize, nnz: usize) -> Bimodule {
        let base = self.algebra(dim, nnz);
        let mut b = Bimodule::zero(&base, v_dim);
        for _ in 0..nnz {
            self.bump_family(b.l_mut());
            self.bump_family(b.r_mut());
        }
        b
    }

    pub fn matched_pair(&mut self, n: usize, p: usize, nnz: usize) -> MatchedPairData {
        let mut mp = MatchedPairData::trivial(&self.algebra(n, nnz), &self.algebra(p, nnz));
        for _ in 0..nnz {
            self.bump_family(&mut mp.l_a);
            self.bump_family(&mut mp.r_a);
            self.bump_family(&mut mp.l_b);
            self.bump_family(&mut mp.r_b);
        }
        mp
    }

    /// A candidate `(A, A*)` of dimension `2..=4` built from right models,
    /// their scalings and the zero product, sometimes with one entry bumped.
    pub fn bialgebra_candidate(&mut self) -> BialgebraCandidate {
        let dim = self.rng.gen_range(2..=4);
        let pick = |f: &mut Self| -> AlgebraTable {
            let choices: [fn(usize) -> AlgebraTable; 3] = [
                |d| trunc_integration(d - 1, Orientation::Right),
                |d| positive_degree(d, Orientation::Right),
                AlgebraTable::zero,
            ];
            let base = choices.choose(&mut f.rng).expect("nonempty")(dim);
            let s = f.scalar();
            let scaled = AlgebraTable::new(
                base.basis().to_vec(),
                Tensor3::from_entries(base.structure().dims(), base.structure().iter().map(|(k, v)| (k, v * &s))).expect("same shape"),
            )
            .expect("same shape");
            if f.rng.gen_bool(0.3) {
                f.perturb_algebra(&scaled)
            } else {
                scaled
            }
        };
        let a = pick(self);
        let astar = pick(self);
        BialgebraCandidate::new(a, astar).expect("equal dimensions")
    }
}
