//! Library half of the command-line tool: OpenQASM 2.0 export with a small
//! re-simulating parser (used to validate exports against the dense
//! simulator), plus the serialized metadata emitted by the `lower` command.

pub mod qasm;

use circuit_core::CircuitError;
use localize::LoweredBlock;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("circuit error: {0}")]
    Circuit(#[from] CircuitError),

    #[error("simulation error: {0}")]
    Sim(#[from] sim::SimError),

    #[error("pulse error: {0}")]
    Nmr(#[from] nmr::NmrError),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("qasm parse error: {0}")]
    Qasm(String),

    #[error("invalid argument: {0}")]
    BadArg(String),
}

pub type Result<T> = std::result::Result<T, CliError>;

/// Per-block metadata in the `lower` command's output: the block name, its
/// entry/exit line-contents tuples, and gate counts.
#[derive(Debug, Serialize, Deserialize)]
pub struct BlockMeta {
    pub block_id: String,
    /// `ordering_in[i]` = logical qubit on physical line `i+1` at block entry.
    pub ordering_in: Vec<usize>,
    pub ordering_out: Vec<usize>,
    pub gate_count: usize,
    pub swap_count: usize,
}

impl BlockMeta {
    pub fn of(b: &LoweredBlock) -> BlockMeta {
        let swaps = b.circuit.len() - localize::non_swap_gates(&b.circuit).len();
        BlockMeta {
            block_id: b.block_id.name().to_string(),
            ordering_in: b.ordering_in.line_contents(),
            ordering_out: b.ordering_out.line_contents(),
            gate_count: b.circuit.len(),
            swap_count: swaps,
        }
    }
}

/// Output document of the `lower` command: the full lowered circuit in the
/// standard circuit JSON shape (under `"circuit"`, so downstream commands can
/// consume it directly) plus the per-block ordering metadata.
#[derive(Debug, Serialize, Deserialize)]
pub struct LowerOutput {
    pub width: usize,
    pub circuit: serde_json::Value,
    pub blocks: Vec<BlockMeta>,
}

/// Reads a circuit from JSON text, accepting either a bare circuit document
/// or a `lower` output document with the circuit nested under `"circuit"`.
pub fn read_circuit(text: &str) -> Result<circuit_core::Circuit> {
    let value: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| CliError::BadArg(format!("input is not valid JSON: {e}")))?;
    let circuit_text = match value.get("circuit") {
        Some(inner) => inner.to_string(),
        None => text.to_string(),
    };
    Ok(circuit_core::circuit_from_json(&circuit_text)?)
}
