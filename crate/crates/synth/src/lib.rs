//! Generation of the eight-part n-qubit Toffoli decomposition.
//!
//! The controlled-ZX-style backbone `C1..C6` is a network of two-qubit
//! controlled-Rx gates only; its exact unitary is the n-qubit
//! controlled-`Rx(pi)` gate (identity except a bottom `-iX` block), a
//! relative-phase Toffoli. Adding `2n-3` single-qubit phase gates in two
//! layers `P1`/`P2` turns it into the exact n-qubit Toffoli up to one global
//! phase; each phase gate fuses with its partner controlled-Rx into a
//! controlled root of X via an algebraic identity (see [`fuse_phase`]).
//!
//! The gate order is a pipelined schedule over four triangular meshes, giving
//! circuit depth exactly `8n-20` (for n >= 4) and size `2n^2 - 6n + 5`.

mod fusion;
mod plan;

pub use fusion::{fuse_phase, root_of_x};
pub use plan::{gen_czx, gen_phase_layers, gen_toffoli, gen_toffoli_fused, plan, ToffoliPlan};
