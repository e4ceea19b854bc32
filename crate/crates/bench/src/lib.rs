//! Fixtures shared by the benchmarks.

use pcn_core::Composition;

/// The running example in `C_8`.
pub fn example() -> Composition {
    "4,5,4,1,0,2,0@8".parse().expect("valid composition")
}

/// Every composition of `C_n`, used as a batch input.
pub fn all(n: usize) -> Vec<Composition> {
    Composition::all(n).expect("n >= 1")
}
