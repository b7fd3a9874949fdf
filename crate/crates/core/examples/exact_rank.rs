//! Exact rationals and fraction-free rank.

use zinbiel::{Matrix, Scalar};

fn main() -> zinbiel::Result<()> {
    let third: Scalar = "1/3".parse()?;
    let sum = &third + &Scalar::frac(1, 6);
    println!("1/3 + 1/6 = {sum}");

    // A Hilbert-type matrix is nonsingular however large its entries get.
    let n = 6;
    let rows: Vec<Vec<Scalar>> = (0..n).map(|i| (0..n).map(|j| Scalar::frac(1, (i + j + 1) as i64)).collect()).collect();
    let h = Matrix::from_rows(&rows);
    println!("rank of the {n}x{n} Hilbert matrix: {}", h.rank());

    let mut singular = h.clone();
    for j in 0..n {
        singular.set(n - 1, j, h.get(0, j) + h.get(1, j));
    }
    println!("after replacing the last row by row0 + row1: {}", singular.rank());
    Ok(())
}
