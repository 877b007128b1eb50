//! Compilation of local circuits to NMR pulse parameters.
//!
//! The pulse vocabulary is the native two-spin NMR model: local Z evolutions
//! `U1(theta) = e^{i theta Z}` / `U2(theta)` on single spins, the Ising
//! coupling `U0(theta) = e^{i theta Z (x) Z}` on an adjacent spin pair, and an
//! ideal Hadamard frame pulse. The core identity is the sandwich
//! `(I (x) H) U0(t0) U1(t1) U2(t2) (I (x) H)`, which realizes a CNOT at
//! `(pi/4, -pi/4, -pi/4)` (up to the global prefactor `e^{-i pi/4}`) and a
//! controlled-`Rx(2 theta)` at `(theta/2, 0, -theta/2)`.
//!
//! Schedules carry an accumulated global phase so that the pulse unitary
//! (product of steps times the phase) equals the compiled gate **exactly**,
//! not merely up to phase.

mod compile;
mod json;
mod sandwich;

pub use compile::{compile_circuit, compile_gate, pulse_unitary};
pub use json::{schedule_from_json, schedule_to_json};
pub use sandwich::{deltas, ising_sandwich, ising_sandwich_product};

use num_complex::Complex;
use thiserror::Error;

pub type C64 = Complex<f64>;

/// One NMR pulse primitive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PulseStep {
    /// Ising evolution `e^{i theta Z_a Z_b}` on an adjacent spin pair.
    IsingU0 { theta: f64, spins: (usize, usize) },
    /// Local evolution `e^{i theta Z}` on one spin (first spin of a pair).
    LocalU1 { theta: f64, spin: usize },
    /// Local evolution `e^{i theta Z}` on one spin (second spin of a pair).
    LocalU2 { theta: f64, spin: usize },
    /// Ideal instantaneous Hadamard frame pulse.
    HadamardFrame { spin: usize },
}

impl PulseStep {
    pub fn spins(&self) -> Vec<usize> {
        match *self {
            PulseStep::IsingU0 { spins, .. } => vec![spins.0, spins.1],
            PulseStep::LocalU1 { spin, .. }
            | PulseStep::LocalU2 { spin, .. }
            | PulseStep::HadamardFrame { spin } => vec![spin],
        }
    }
}

/// An ordered pulse sequence with its tracked global phase.
#[derive(Debug, Clone, PartialEq)]
pub struct PulseSchedule {
    pub width: usize,
    pub steps: Vec<PulseStep>,
    /// Unit scalar such that `product(steps) * global_phase` equals the
    /// compiled circuit's unitary exactly.
    pub global_phase: C64,
}

impl PulseSchedule {
    pub fn empty(width: usize) -> Self {
        PulseSchedule {
            width,
            steps: Vec::new(),
            global_phase: C64::new(1.0, 0.0),
        }
    }

    /// Appends another schedule of the same width.
    pub fn extend(&mut self, other: &PulseSchedule) {
        debug_assert_eq!(self.width, other.width);
        self.steps.extend_from_slice(&other.steps);
        self.global_phase *= other.global_phase;
    }
}

/// Errors produced by the pulse compiler.
#[derive(Debug, Error)]
pub enum NmrError {
    #[error("two-qubit gate on lines ({a}, {b}) is not nearest-neighbor; the pulse model only couples adjacent spins")]
    NonAdjacent { a: usize, b: usize },

    #[error("gate kind {kind} is not pulse-compilable; unfuse controlled-root-of-X gates into a phase gate plus a controlled-Rx first")]
    Unsupported { kind: String },

    #[error("circuit is not local; offending gate indices: {offenders:?}")]
    NotLocal { offenders: Vec<usize> },

    #[error("pulse spin index {spin} out of range for width {width}")]
    SpinOutOfRange { spin: usize, width: usize },

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("serialized pulse step has unknown kind {0:?}")]
    UnknownStepKind(String),

    #[error("serialized pulse step {kind:?} expects {expected} spin(s), got {got}")]
    BadSpinCount {
        kind: String,
        expected: usize,
        got: usize,
    },
}

pub type Result<T> = std::result::Result<T, NmrError>;
