//! One PASS/FAIL line per acceptance criterion, then a hard assertion that
//! every criterion passed. Each check is exact; there is no tolerance.

mod common;

use std::io::Write;
use std::path::Path;
use std::process::Command;

use common::*;
use zinbiel::audit::audit_claims;
use zinbiel::bialgebra::{check_manin_triple, dual_reps, equivalence_audit, standard_pairing};
use zinbiel::bimodule::{check_bimodule, semidirect_sum};
use zinbiel::coalgebra::{check_co_left, check_co_right, dualize, dualize_co, opposite_coproduct};
use zinbiel::fuzz::{Fuzzer, FUZZ_COUNT};
use zinbiel::identity::{catalog_entry, evaluate, holds};
use zinbiel::matched_pair::{check_matched_pair, double, MatchedPairData};
use zinbiel::models::{free_halfshuffle, positive_degree, trivial_models, trunc_integration, Orientation};
use zinbiel::{AlgebraTable, Bimodule, Object};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn id_holds(a: &AlgebraTable, name: &str) -> bool {
    holds(a, catalog_entry(name).expect("catalog entry"))
}

/// Every model instance the criteria range over, with its label.
fn models() -> Vec<(String, AlgebraTable)> {
    let mut out = Vec::new();
    for n in 0..=8 {
        out.push((format!("trunc-int:right:{n}"), trunc_integration(n, Orientation::Right)));
        out.push((format!("trunc-int:left:{n}"), trunc_integration(n, Orientation::Left)));
        out.push((format!("trunc-int:right:{n} opposite"), trunc_integration(n, Orientation::Right).opposite()));
    }
    for n in 1..=8 {
        out.push((format!("trunc-pos:left:{n}"), positive_degree(n, Orientation::Left)));
        out.push((format!("trunc-pos:right:{n}"), positive_degree(n, Orientation::Right)));
    }
    for (k, m) in [(1, 4), (2, 2), (2, 3)] {
        out.push((format!("free:{k}:{m}"), free_halfshuffle(k, m).unwrap()));
    }
    for (i, t) in trivial_models().into_iter().enumerate() {
        out.push((format!("trivial #{i}"), t));
    }
    out
}

fn criterion_1() -> Outcome {
    let mut failures = Vec::new();
    for n in 0..=8 {
        for (o, name) in [(Orientation::Right, "right_zinbiel"), (Orientation::Left, "left_zinbiel")] {
            let t = trunc_integration(n, o);
            let residuals = evaluate(&t, catalog_entry(name).unwrap());
            let oracle = match o {
                Orientation::Right => dense_right_zinbiel(&integration_oracle(n, o)),
                Orientation::Left => dense_left_zinbiel(&integration_oracle(n, o)),
            };
            ensure(oracle == residuals.is_empty(), || format!("engine and oracle disagree on trunc-int:{o}:{n}"))?;
            if !residuals.is_empty() {
                failures.push(format!("trunc-int:{o}:{n} fails {name} on {} triples", residuals.len()));
            }
        }
    }
    if failures.is_empty() {
        Ok("both integration models pass for n <= 8".into())
    } else {
        Err(format!("{} of 18 instances fail, first: {}", failures.len(), failures[0]))
    }
}

fn criterion_2() -> Outcome {
    let mut count = 0;
    for (seed, (name, a)) in models().into_iter().enumerate() {
        let family = Fuzzer::new(seed as u64).family(&a, FUZZ_COUNT, Fuzzer::perturb_algebra);
        for t in std::iter::once(&a).chain(&family) {
            ensure(t.is_left_zinbiel() == t.opposite().is_right_zinbiel(), || format!("mismatch under {name}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} tables, zero discrepancies"))
}

fn criterion_3() -> Outcome {
    let mut count = 0;
    for (name, a) in models() {
        if a.dim() > 9 || !(a.is_right_zinbiel() || a.is_left_zinbiel()) {
            continue;
        }
        let s = a.symmetrize();
        ensure(id_holds(&s, "commutative") && id_holds(&s, "associative"), || format!("{name}: symmetrization fails"))?;
        count += 1;
    }
    Ok(format!("{count} passing models symmetrize to commutative associative algebras"))
}

fn criterion_4() -> Outcome {
    let ps = Poly::monomial;
    let r = |x: &Poly, y: &Poly| integration_product(x, y, Orientation::Right, 5);
    let l = |x: &Poly, y: &Poly| integration_product(x, y, Orientation::Left, 3);
    let br = |x: &Poly, y: &Poly| r(x, y).sub(&r(y, x));
    let (x, y, z) = (ps(0), ps(1), ps(2));
    let jac = br(&x, &br(&y, &z)).add(&br(&y, &br(&z, &x))).add(&br(&z, &br(&x, &y)));
    ensure(jac.sub(&Poly::monomial(5).mul(&Poly(vec![q(-1, 30)]))).is_zero(), || "oracle Jacobiator".into())?;
    let assoc = |x: &Poly, y: &Poly, z: &Poly| l(&l(x, y), z).sub(&l(x, &l(y, z)));
    let (x, y, z) = (ps(1), ps(0), ps(2));
    ensure(assoc(&x, &y, &z).coeff(3) == q(1, 3) && assoc(&z, &y, &x).coeff(3) == q(2, 3), || "oracle center symmetry".into())?;
    let (x, y, z) = (ps(0), ps(0), ps(1));
    ensure(r(&r(&x, &y), &z).coeff(3) == q(1, 2) && r(&r(&x, &z), &y).coeff(3) == q(1, 3), || "oracle right relation".into())?;

    let cases = [
        (Orientation::Right, 5, "lie_admissible", "(e0,e1,e2): residual -(1/30)e5", "audit_trunc-int_right_5.txt"),
        (Orientation::Left, 3, "center_symmetric", "(e1,e0,e2): (1/3)e3 vs (2/3)e3", "audit_trunc-int_left_3.txt"),
        (Orientation::Right, 5, "right_relation", "(e0,e0,e1): (1/2)e3 vs (1/3)e3", "audit_trunc-int_right_5.txt"),
    ];
    for (o, n, claim, witness, golden) in cases {
        let report = audit_claims(&trunc_integration(n, o), o);
        let f = report.finding(claim).ok_or_else(|| format!("missing {claim}"))?;
        ensure(f.witnesses.iter().any(|w| w.to_string() == witness), || format!("{claim}: engine lacks {witness}"))?;
        let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(golden);
        let text = std::fs::read_to_string(&path).map_err(|e| format!("{golden}: {e}"))?;
        ensure(text.contains(witness), || format!("{golden} lacks {witness}"))?;
    }
    Ok("three refutations recomputed by the oracle and present in the goldens".into())
}

fn criterion_5() -> Outcome {
    let mut count = 0;
    for (name, a) in models() {
        let d = dense(&a);
        let (right, left) = (dense_right_zinbiel(&d), dense_left_zinbiel(&d));
        if right {
            ensure(id_holds(&a, "left_relation"), || format!("{name}: left_relation"))?;
            for k in 1..=4 {
                ensure(id_holds(&a, &format!("tensor_identity_{k}")), || format!("{name}: tensor_identity_{k}"))?;
            }
        }
        if left {
            ensure(id_holds(&a, "right_relation"), || format!("{name}: right_relation"))?;
            for k in 1..=4 {
                let id = catalog_entry(&format!("tensor_identity_{k}")).unwrap().mirror();
                ensure(holds(&a, &id), || format!("{name}: tensor_identity_{k}_mirrored"))?;
            }
        }
        count += usize::from(right || left);
    }
    Ok(format!("{count} passing tables confirm every derived relation"))
}

fn criterion_6() -> Outcome {
    let mut bases = Vec::new();
    for n in 0..=5 {
        let t = trunc_integration(n, Orientation::Right);
        bases.push(Bimodule::regular(&t));
        bases.push(Bimodule::zero(&t, 1));
        bases.push(Bimodule::zero(&t, 2));
    }
    let (mut count, mut passing) = (0, 0);
    for (seed, base) in bases.iter().enumerate() {
        let family = Fuzzer::new(1000 + seed as u64).family(base, FUZZ_COUNT, Fuzzer::perturb_bimodule);
        for b in std::iter::once(base).chain(&family) {
            let lhs = check_bimodule(b).all_hold();
            ensure(lhs == semidirect_sum(b).is_right_zinbiel(), || format!("discrepancy at base #{seed}"))?;
            count += 1;
            passing += usize::from(lhs);
        }
    }
    Ok(format!("{count} bimodules ({passing} valid), zero discrepancies"))
}

fn criterion_7() -> Outcome {
    let mut bases = Vec::new();
    let small = trivial_models();
    for a in &small {
        for b in &small {
            bases.push(MatchedPairData::trivial(a, b));
        }
    }
    for n in 0..=3 {
        let t = trunc_integration(n, Orientation::Right);
        bases.push(MatchedPairData::from_bimodule(&Bimodule::regular(&t)));
        bases.push(MatchedPairData::trivial(&t, &t.opposite()));
    }
    let free = free_halfshuffle(2, 2).unwrap();
    let (a_idx, b_idx): (Vec<usize>, Vec<usize>) = (0..free.dim()).partition(|&i| !free.basis()[i].contains('b'));
    bases.push(MatchedPairData::from_decomposition(&free, &a_idx, &b_idx).map_err(|e| e.to_string())?);
    let (mut count, mut passing) = (0, 0);
    for (seed, base) in bases.iter().enumerate() {
        let (p, r) = base.dims();
        ensure(p + r <= 8, || format!("base #{seed} too large"))?;
        let family = Fuzzer::new(2000 + seed as u64).family(base, FUZZ_COUNT, Fuzzer::perturb_matched_pair);
        for mp in std::iter::once(base).chain(&family) {
            let lhs = check_matched_pair(mp).all_hold();
            ensure(lhs == double(mp).is_right_zinbiel(), || format!("discrepancy at base #{seed}"))?;
            count += 1;
            passing += usize::from(lhs);
        }
    }
    Ok(format!("{count} matched pairs ({passing} valid), zero discrepancies"))
}

fn criterion_8() -> Outcome {
    let mut count = 0;
    for (seed, (name, a)) in models().into_iter().enumerate() {
        ensure(dualize_co(&dualize(&a)).structure() == a.structure(), || format!("{name}: dualize round trip"))?;
        let family = Fuzzer::new(3000 + seed as u64).family(&a, 20, Fuzzer::perturb_algebra);
        for t in std::iter::once(&a).chain(&family) {
            let d = dense(t);
            let c = dualize(t);
            ensure(check_co_right(&c).passed() == dense_right_zinbiel(&d), || format!("{name}: co_right verdict"))?;
            ensure(check_co_left(&c).passed() == dense_left_zinbiel(&d), || format!("{name}: co_left verdict"))?;
            let op = opposite_coproduct(&c);
            ensure(check_co_right(&op).passed() == check_co_left(&c).passed(), || format!("{name}: opposite swap"))?;
            ensure(check_co_left(&op).passed() == check_co_right(&c).passed(), || format!("{name}: opposite swap"))?;
            count += 1;
        }
    }
    Ok(format!("{count} coalgebras, all verdicts match the transpose"))
}

fn criterion_9() -> Outcome {
    for n in 0..=8 {
        let g = standard_pairing(n);
        ensure(g.matrix().rank() == 2 * n, || format!("pairing {n} degenerate"))?;
        for i in 0..2 * n {
            for j in 0..2 * n {
                ensure(g.get(i, j) == g.get(j, i), || format!("pairing {n} not symmetric"))?;
                ensure((i < n) != (j < n) || g.get(i, j).is_zero(), || format!("pairing {n} not isotropic"))?;
            }
        }
    }
    let mut fz = Fuzzer::new(9);
    let mut disagreements = 0;
    for i in 0..20 {
        let bc = fz.bialgebra_candidate();
        let c = check_manin_triple(&bc).finding("double_right_zinbiel").map(|f| f.passed()).ok_or("no condition (c)")?;
        ensure(c == check_matched_pair(&dual_reps(&bc)).all_hold(), || format!("candidate {i}: condition (c)"))?;
        let eq = equivalence_audit(&bc);
        let v = eq.verdicts();
        for k in 1..=4 {
            let f = eq.report.finding(&format!("condition_{k}")).ok_or_else(|| format!("candidate {i}: no condition_{k}"))?;
            ensure(f.passed() == v[k - 1], || format!("candidate {i}: condition_{k} flag"))?;
        }
        let flag = eq.report.finding("conditions_agree").ok_or_else(|| format!("candidate {i}: no agreement finding"))?;
        let all_same = v.iter().all(|&b| b == v[0]);
        ensure(flag.passed() == all_same, || format!("candidate {i}: disagreement not flagged"))?;
        disagreements += usize::from(!all_same);
    }
    Ok(format!("pairings n <= 8 ok; 20 candidates complete, {disagreements} disagreements flagged"))
}

fn criterion_10() -> Outcome {
    let mut fz = Fuzzer::new(10);
    for i in 0..500 {
        let (d, e) = (1 + fz.index(4), 1 + fz.index(3));
        let obj = match i % 5 {
            0 => Object::Algebra(fz.algebra(d, 6)),
            1 => Object::Coalgebra(fz.coalgebra(d, 6)),
            2 => Object::Bimodule(fz.bimodule(d, e, 4)),
            3 => Object::MatchedPair(fz.matched_pair(d, e, 4)),
            _ => Object::Bialgebra(fz.bialgebra_candidate()),
        };
        let s = obj.to_canonical_string();
        let back = Object::parse(&s).map_err(|e| format!("object {i}: {e}"))?;
        ensure(back == obj && back.to_canonical_string() == s, || format!("object {i} ({}) does not round trip", obj.kind()))?;
    }

    let t5 = trunc_integration(5, Orientation::Right);
    let bc = Fuzzer::new(3).bialgebra_candidate();
    let render = |threads: usize| {
        rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap().install(|| {
            let mut s = audit_claims(&t5, Orientation::Right).to_json().to_string();
            s.push_str(&equivalence_audit(&bc).report.to_json().to_string());
            s
        })
    };
    let one = render(1);
    ensure(one == render(2) && one == render(8), || "reports depend on the worker count".into())?;

    let corpus = |f: &str| Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/corpus").join(f).display().to_string();
    let cases: [(&[&str], i32); 9] = [
        (&["check", "CORPUS:t3.json", "right_zinbiel"], 0),
        (&["check", "CORPUS:t3_bumped.json", "right_zinbiel"], 1),
        (&["check", "CORPUS:l3.json", "left_zinbiel"], 1),
        (&["check", "CORPUS:t3_regular.json"], 0),
        (&["check", "CORPUS:candidate.json"], 1),
        (&["check", "CORPUS:bad_syntax.json", "right_zinbiel"], 2),
        (&["check", "CORPUS:bad_duplicate.json", "right_zinbiel"], 2),
        (&["check", "CORPUS:bad_scalar.json", "right_zinbiel"], 2),
        (&["--parallel", "2", "audit", "--model", "trunc-int:right:5"], 0),
    ];
    for (args, want) in cases {
        let args: Vec<String> = args.iter().map(|a| a.strip_prefix("CORPUS:").map(corpus).unwrap_or_else(|| a.to_string())).collect();
        let got = Command::new(env!("CARGO_BIN_EXE_zinbiel")).args(&args).output().map_err(|e| e.to_string())?.status.code();
        ensure(got == Some(want), || format!("{args:?}: exit {got:?}, expected {want}"))?;
    }
    Ok("500 round trips, identical output for 1/2/8 workers, exit codes conform".into())
}

#[test]
fn acceptance() {
    let criteria: [fn() -> Outcome; 10] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
    ];
    let mut failed = Vec::new();
    let mut out = std::io::stdout().lock();
    for (i, c) in criteria.iter().enumerate() {
        let (tag, detail) = match c() {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed.push(i + 1);
                ("FAIL", d)
            }
        };
        writeln!(out, "criterion {}: {tag}  {detail}", i + 1).unwrap();
    }
    drop(out);
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
