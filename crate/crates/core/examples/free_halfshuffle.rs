//! Truncated free Zinbiel algebras on words with the half-shuffle product.

use zinbiel::audit::detect_orientation;
use zinbiel::models::{free_halfshuffle, shuffle};

fn main() -> zinbiel::Result<()> {
    println!("shuffle(ab, c) = {:?}", shuffle(b"ab", b"c"));
    for (letters, max_len) in [(1, 3), (2, 3), (2, 4)] {
        let t = free_halfshuffle(letters, max_len)?;
        println!("free:{letters}:{max_len}: dim {}, orientation {:?}", t.dim(), detect_orientation(&t));
    }
    let t = free_halfshuffle(1, 3)?;
    println!("a * aa = {}", t.mul_basis(0, 1));
    Ok(())
}
