//! Fixed inputs shared by the benchmarks.

use aqtab_core::{validate_input, LambdaParam, ParabolicDatum};

/// Three-block datum with a nice, nonzero `lambda` and a feasible Dirac system.
pub fn three_block() -> (ParabolicDatum, LambdaParam) {
    validate_input(&[(2, 1), (3, 1), (0, 2)], &[0, 2, 4]).expect("valid input")
}

/// Seven single-box blocks alternating in sign, `lambda` stepping by one.
pub fn seven_boxes() -> (ParabolicDatum, LambdaParam) {
    let pairs: Vec<(usize, usize)> = (0..7)
        .map(|i| if i % 2 == 0 { (1, 0) } else { (0, 1) })
        .collect();
    validate_input(&pairs, &[0, 1, 2, 3, 4, 5, 6]).expect("valid input")
}
