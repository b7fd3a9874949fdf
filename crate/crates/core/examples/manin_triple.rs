//! Manin triples on A ⊕ A* and the four-way equivalence audit.

use zinbiel::bialgebra::{check_manin_triple, equivalence_audit, standard_pairing};
use zinbiel::fuzz::Fuzzer;
use zinbiel::models::{trunc_integration, Orientation};
use zinbiel::{AlgebraTable, BialgebraCandidate};

fn main() -> zinbiel::Result<()> {
    println!("standard pairing, n = 2: rank {}", standard_pairing(2).matrix().rank());

    let bc = BialgebraCandidate::new(trunc_integration(2, Orientation::Right), AlgebraTable::zero(3))?;
    print!("{}", check_manin_triple(&bc).to_text());

    let mut fuzz = Fuzzer::new(2024);
    println!("\nseeded candidates: [manin, lie, matched, bialgebra]");
    for _ in 0..10 {
        let bc = fuzz.bialgebra_candidate();
        let e = equivalence_audit(&bc);
        println!("dim {} {:?} agree: {}", bc.dim(), e.verdicts(), e.agree());
    }
    Ok(())
}
