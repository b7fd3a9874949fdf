//! Coproducts dual to the models, their opposite, and the coalgebra claims.

use zinbiel::coalgebra::{
    check_aux_coalgebra_identities, check_co_left, check_co_right, co_right_law, coalgebra_proposition_audit, dualize, opposite_coproduct,
};
use zinbiel::models::{idempotent, trunc_integration, Orientation};
use zinbiel::Value;

fn main() -> zinbiel::Result<()> {
    let c = dualize(&trunc_integration(3, Orientation::Right));
    println!("Δ(f2) = {}", Value::from(c.delta(2)));
    println!("co-right: {}, co-left: {}", check_co_right(&c).passed(), check_co_left(&c).passed());
    let op = opposite_coproduct(&c);
    println!("opposite: co-right {}, co-left {}", check_co_right(&op).passed(), check_co_left(&op).passed());
    println!("{} transposes to {}\n", co_right_law(), co_right_law().transpose()?);

    print!("{}", check_aux_coalgebra_identities(&dualize(&trunc_integration(5, Orientation::Right))).to_text());
    println!();
    print!("{}", coalgebra_proposition_audit(&dualize(&idempotent())).to_text());
    Ok(())
}
