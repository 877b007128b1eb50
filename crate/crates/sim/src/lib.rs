//! Dense unitary / statevector engine and oracle matrices.
//!
//! This crate is the verification authority for the rest of the workspace:
//! circuits are turned into explicit matrices (or applied to statevectors)
//! and compared against brute-force oracles, up to a single global phase.
//!
//! Bit convention: **qubit 1 is the most significant bit** of the basis index,
//! so the "all controls |1>" subspace is literally the bottom-right block of
//! the oracle matrices.

mod equiv;
mod kernels;
mod matrix;
mod oracles;

use thiserror::Error;

pub use equiv::{equiv_up_to_phase, EquivalenceReport};
pub use kernels::{
    apply_cnot, apply_controlled_1q, apply_crx, apply_gate, apply_hadamard, apply_phase,
    apply_swap, bit_of, C64,
};
pub use matrix::UnitaryMatrix;
pub use oracles::{czx_matrix, mcrx_matrix, permutation_matrix, toffoli_matrix};

use circuit_core::Circuit;

/// Largest circuit width accepted by [`unitary_of`] and [`apply_state`].
pub const WIDTH_CAP: usize = 14;

/// Errors produced by the simulation engine.
#[derive(Debug, Error)]
pub enum SimError {
    #[error("circuit width {width} exceeds the simulator cap of {cap} qubits")]
    WidthOverCap { width: usize, cap: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },

    #[error("input state has norm {norm}, expected 1 (within 1e-10)")]
    NotNormalized { norm: f64 },
}

pub type Result<T> = std::result::Result<T, SimError>;

/// Full unitary of a circuit: the product of gate embeddings in application
/// order (the first gate in the list acts first, `U = G_m ... G_2 G_1`).
pub fn unitary_of(c: &Circuit) -> Result<UnitaryMatrix> {
    let n = c.width();
    if n > WIDTH_CAP {
        return Err(SimError::WidthOverCap {
            width: n,
            cap: WIDTH_CAP,
        });
    }
    let dim = 1usize << n;
    let mut m = UnitaryMatrix::zeros(dim);
    let mut col = vec![C64::new(0.0, 0.0); dim];
    for j in 0..dim {
        col.iter_mut().for_each(|v| *v = C64::new(0.0, 0.0));
        col[j] = C64::new(1.0, 0.0);
        for g in c.gates() {
            apply_gate(&mut col, n, g);
        }
        for (r, &v) in col.iter().enumerate() {
            m.set(r, j, v);
        }
    }
    Ok(m)
}

/// Applies a circuit to a normalized statevector, returning the new vector.
pub fn apply_state(c: &Circuit, s: &[C64]) -> Result<Vec<C64>> {
    let n = c.width();
    if n > WIDTH_CAP {
        return Err(SimError::WidthOverCap {
            width: n,
            cap: WIDTH_CAP,
        });
    }
    let dim = 1usize << n;
    if s.len() != dim {
        return Err(SimError::DimMismatch {
            left: s.len(),
            right: dim,
        });
    }
    let norm = s.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(SimError::NotNormalized { norm });
    }
    let mut out = s.to_vec();
    for g in c.gates() {
        apply_gate(&mut out, n, g);
    }
    Ok(out)
}
