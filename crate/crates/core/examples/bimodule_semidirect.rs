//! Bimodule axioms against the right-Zinbiel check on the semidirect sum.

use zinbiel::bimodule::{bimodule_audit, is_bimodule, semidirect_sum};
use zinbiel::fuzz::Fuzzer;
use zinbiel::models::{trunc_integration, Orientation};
use zinbiel::Bimodule;

fn main() {
    let t3 = trunc_integration(3, Orientation::Right);
    let regular = Bimodule::regular(&t3);
    print!("{}", bimodule_audit(&regular, "regular bimodule of T3").to_text());

    let mut fuzz = Fuzzer::new(11);
    let (mut agree, mut broken) = (0, 0);
    for b in fuzz.family(&regular, 200, Fuzzer::perturb_bimodule) {
        let axioms = is_bimodule(&b);
        agree += usize::from(axioms == semidirect_sum(&b).is_right_zinbiel());
        broken += usize::from(!axioms);
    }
    println!("\n200 perturbations: {broken} break the axioms, {agree} agree with the semidirect check");
}
