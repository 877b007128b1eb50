use thiserror::Error;

/// Errors produced by the circuit data model.
#[derive(Debug, Error)]
pub enum CircuitError {
    #[error("circuit width mismatch: left has width {left}, right has width {right}")]
    WidthMismatch { left: usize, right: usize },

    #[error("qubit index {qubit} out of range for circuit width {width} (lines are 1..={width})")]
    QubitOutOfRange { qubit: usize, width: usize },

    #[error("gate acts twice on qubit {qubit}; the two line indices must be distinct")]
    DuplicateQubits { qubit: usize },

    #[error("dyadic angle sign must be +1 or -1, got {0}")]
    BadSign(i32),

    #[error("permutation map {map:?} is not a bijection on 1..={n}")]
    NonBijectivePermutation { map: Vec<usize>, n: usize },

    #[error("permutation length {len} does not match circuit width {width}")]
    PermutationLengthMismatch { len: usize, width: usize },

    #[error("fusion mismatch: {0}")]
    FusionMismatch(String),

    #[error("unknown gate kind {0:?} in serialized circuit")]
    UnknownKind(String),

    #[error("serialized gate {kind:?} expects {expected} qubit index(es), got {got}")]
    BadQubitCount {
        kind: String,
        expected: usize,
        got: usize,
    },

    #[error("serialized gate {kind:?} is missing field {field:?}")]
    MissingField { kind: String, field: &'static str },

    #[error("construction requires n >= {min}, got n = {n}")]
    UnsupportedWidth { n: usize, min: usize },

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}
