//! Matched pairs read off a free half-shuffle algebra, and their doubles.

use zinbiel::matched_pair::{double, is_matched_pair, matched_pair_audit};
use zinbiel::models::free_halfshuffle;
use zinbiel::MatchedPairData;

fn main() -> zinbiel::Result<()> {
    // Words in the letter a alone against words containing b.
    let d = free_halfshuffle(2, 2)?;
    let (a_idx, b_idx): (Vec<usize>, Vec<usize>) = (0..d.dim()).partition(|&i| !d.basis()[i].contains('b'));
    let mp = MatchedPairData::from_decomposition(&d, &a_idx, &b_idx)?;
    println!("A = {:?}, B = {:?}", mp.a.basis(), mp.b.basis());
    println!("matched pair: {}", is_matched_pair(&mp));
    println!("double is right Zinbiel: {}\n", double(&mp).is_right_zinbiel());
    print!("{}", matched_pair_audit(&mp, "free:2:2 split by letter b").to_text());
    Ok(())
}
