//! Parse identities, evaluate them on a table and print the first witness.

use zinbiel::identity::{catalog, evaluate, first_violation};
use zinbiel::models::{trunc_integration, Orientation};
use zinbiel::{parse_identity, Witness};

fn main() -> zinbiel::Result<()> {
    let t3 = trunc_integration(3, Orientation::Right);

    for (name, id) in catalog() {
        let verdict = match first_violation(&t3, id) {
            None => "holds".to_string(),
            Some(r) => format!("fails at {}", Witness::from_identity(&r, !id.rhs().is_empty())),
        };
        println!("{name:<28} {verdict}");
    }

    let custom = parse_identity("(x (y z)) = (y (x z))")?;
    println!("\n{custom}: {} violations on T3", evaluate(&t3, &custom).len());
    Ok(())
}
