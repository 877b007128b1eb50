//! Core data model for the toolkit: exact dyadic angles, gates, circuits,
//! qubit-line permutations, and the depth/size metrics used throughout.
//!
//! Conventions:
//! - Qubit lines are **1-based** everywhere at the API surface, matching the
//!   usual circuit-diagram labelling `{1..n}`.
//! - All rotation and phase angles are exact dyadic multiples of pi,
//!   `sign * pi / 2^k`, stored as [`DyadicAngle`] and converted to radians
//!   only on demand.
//! - Circuits are immutable value types: every operation returns a new value.

mod angle;
mod circuit;
mod error;
mod gate;
mod json;
mod perm;

pub use angle::DyadicAngle;
pub use circuit::{Circuit, SizeCount};
pub use error::CircuitError;
pub use gate::{Gate, GateKind};
pub use json::{circuit_from_json, circuit_to_json};
pub use perm::Permutation;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, CircuitError>;
