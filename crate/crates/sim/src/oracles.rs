//! Brute-force oracle matrices.

use crate::kernels::{bit_of, C64};
use crate::matrix::UnitaryMatrix;
use circuit_core::Permutation;

/// The n-qubit Toffoli (controlled-X) gate: identity except the bottom-right
/// 2x2 block (all controls |1>) equals X. `n = 1` is X itself, `n = 2` CNOT.
pub fn toffoli_matrix(n: usize) -> UnitaryMatrix {
    let dim = 1usize << n;
    let mut m = UnitaryMatrix::identity(dim);
    let one = C64::new(1.0, 0.0);
    let zero = C64::new(0.0, 0.0);
    m.set(dim - 2, dim - 2, zero);
    m.set(dim - 1, dim - 1, zero);
    m.set(dim - 2, dim - 1, one);
    m.set(dim - 1, dim - 2, one);
    m
}

/// The n-qubit controlled-ZX gate: identity except the bottom-right 2x2 block
/// equals `Z * X = [[0, 1], [-1, 0]]`.
pub fn czx_matrix(n: usize) -> UnitaryMatrix {
    let dim = 1usize << n;
    let mut m = UnitaryMatrix::identity(dim);
    let zero = C64::new(0.0, 0.0);
    m.set(dim - 2, dim - 2, zero);
    m.set(dim - 1, dim - 1, zero);
    m.set(dim - 2, dim - 1, C64::new(1.0, 0.0));
    m.set(dim - 1, dim - 2, C64::new(-1.0, 0.0));
    m
}

/// The n-qubit controlled-`Rx(theta)` gate: identity except the bottom-right
/// 2x2 block equals `Rx(theta)`. At `theta = pi` the block is `-iX`, the
/// relative-phase Toffoli realized by a pure controlled-Rx network.
pub fn mcrx_matrix(n: usize, theta: f64) -> UnitaryMatrix {
    let dim = 1usize << n;
    let mut m = UnitaryMatrix::identity(dim);
    let c = C64::new((theta / 2.0).cos(), 0.0);
    let s = C64::new(0.0, -(theta / 2.0).sin());
    m.set(dim - 2, dim - 2, c);
    m.set(dim - 1, dim - 1, c);
    m.set(dim - 2, dim - 1, s);
    m.set(dim - 1, dim - 2, s);
    m
}

/// Basis-permutation matrix of a line permutation.
///
/// Columns are indexed by logical basis states, rows by physical ones: entry
/// `(r, c)` is 1 iff for every logical qubit `q`, the bit of `r` on physical
/// line `p(q)` equals the bit of `c` on line `q`. Thus `P * psi` re-lays-out a
/// logically-indexed state onto the physical lines.
pub fn permutation_matrix(p: &Permutation) -> UnitaryMatrix {
    let n = p.len();
    let dim = 1usize << n;
    let mut m = UnitaryMatrix::zeros(dim);
    for c in 0..dim {
        let mut r = 0usize;
        for q in 1..=n {
            if bit_of(c, q, n) == 1 {
                r |= 1 << (n - p.apply(q));
            }
        }
        m.set(r, c, C64::new(1.0, 0.0));
    }
    m
}
