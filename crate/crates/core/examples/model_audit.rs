//! Audit the integration models against the claims made about them.

use zinbiel::audit::{audit_claims, detect_orientation};
use zinbiel::models::{positive_degree, trunc_integration, Orientation};

fn main() {
    for n in [3, 5] {
        let t = trunc_integration(n, Orientation::Right);
        print!("{}", audit_claims(&t, Orientation::Right).to_text());
        println!();
    }

    let l3 = trunc_integration(3, Orientation::Left);
    println!("left model with constants: detected orientation {:?}", detect_orientation(&l3));
    if let Some((i, j, k)) = l3.left_zinbiel_failure() {
        println!("  left identity first fails at (e{i},e{j},e{k})");
    }
    let p3 = positive_degree(3, Orientation::Left);
    println!("positive-degree part: detected orientation {:?}\n", detect_orientation(&p3));
    print!("{}", audit_claims(&l3, Orientation::Left).to_text());
}
