//! Lowering of the eight-part decomposition to local gates on a linear chain.
//!
//! "Local" means single-qubit gates plus two-qubit gates between physically
//! adjacent lines. Each backbone part is lowered independently into a
//! [`LoweredBlock`] that records the qubit ordering on entry and exit; the
//! exit orderings are fixed tuples (see [`ordering_out`]) and chain through
//! the pipeline, with two swap-only reset blocks restoring the identity
//! ordering midway and at the end.

mod router;

use circuit_core::{Circuit, CircuitError, Gate, Permutation, Result};
use router::Router;

/// The eight lowered blocks, in pipeline order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockId {
    C1Prime,
    C2Prime,
    C3Prime,
    /// Swap-only reset after C3'.
    C3HalfPrime,
    C4Prime,
    C5Prime,
    C6Prime,
    /// Swap-only reset after C6'.
    C6HalfPrime,
}

impl BlockId {
    pub const ALL: [BlockId; 8] = [
        BlockId::C1Prime,
        BlockId::C2Prime,
        BlockId::C3Prime,
        BlockId::C3HalfPrime,
        BlockId::C4Prime,
        BlockId::C5Prime,
        BlockId::C6Prime,
        BlockId::C6HalfPrime,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            BlockId::C1Prime => "C1'",
            BlockId::C2Prime => "C2'",
            BlockId::C3Prime => "C3'",
            BlockId::C3HalfPrime => "C3.5'",
            BlockId::C4Prime => "C4'",
            BlockId::C5Prime => "C5'",
            BlockId::C6Prime => "C6'",
            BlockId::C6HalfPrime => "C6.5'",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        BlockId::ALL
            .into_iter()
            .find(|b| b.name() == name)
            .ok_or_else(|| CircuitError::UnknownKind(name.to_string()))
    }
}

impl std::fmt::Display for BlockId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A lowered block: local gates only, with the tracked qubit orderings.
#[derive(Debug, Clone)]
pub struct LoweredBlock {
    pub block_id: BlockId,
    pub circuit: Circuit,
    pub ordering_in: Permutation,
    pub ordering_out: Permutation,
}

/// Locality check result: pass iff every two-qubit gate couples adjacent
/// lines; offenders are gate indices into the circuit.
#[derive(Debug, Clone)]
pub struct LocalityReport {
    pub pass: bool,
    pub offenders: Vec<usize>,
}

/// The exit qubit ordering of each block, as a line-contents tuple
/// (`tuple[i]` = logical qubit held by physical line `i+1`).
pub fn ordering_out(block: BlockId, n: usize) -> Result<Permutation> {
    require_n(n)?;
    let tuple: Vec<usize> = match block {
        // {1, n, n-1, ..., 3, 2}
        BlockId::C1Prime => std::iter::once(1).chain((2..=n).rev()).collect(),
        // {n, n-1, ..., 2, 1}
        BlockId::C2Prime => (1..=n).rev().collect(),
        // {2, 3, ..., n-1, n, 1}
        BlockId::C3Prime => (2..=n).chain(std::iter::once(1)).collect(),
        BlockId::C3HalfPrime | BlockId::C6HalfPrime => (1..=n).collect(),
        // {1, n-1, n-2, ..., 2, n}
        BlockId::C4Prime => std::iter::once(1)
            .chain((2..n).rev())
            .chain(std::iter::once(n))
            .collect(),
        // {n-1, n-2, ..., 2, 1, n}
        BlockId::C5Prime => (1..n).rev().chain(std::iter::once(n)).collect(),
        // {2, 3, ..., n-1, 1, n}
        BlockId::C6Prime => (2..n)
            .chain(std::iter::once(1))
            .chain(std::iter::once(n))
            .collect(),
    };
    Permutation::from_line_contents(&tuple)
}

/// The entry ordering of each block: identity for C1' and C4' (the resets
/// restore identity just before P2 and at the very end), otherwise the exit
/// ordering of the preceding block.
pub fn ordering_in(block: BlockId, n: usize) -> Result<Permutation> {
    require_n(n)?;
    Ok(match block {
        BlockId::C1Prime | BlockId::C4Prime => Permutation::identity(n),
        BlockId::C2Prime => ordering_out(BlockId::C1Prime, n)?,
        BlockId::C3Prime => ordering_out(BlockId::C2Prime, n)?,
        BlockId::C3HalfPrime => ordering_out(BlockId::C3Prime, n)?,
        BlockId::C5Prime => ordering_out(BlockId::C4Prime, n)?,
        BlockId::C6Prime => ordering_out(BlockId::C5Prime, n)?,
        BlockId::C6HalfPrime => ordering_out(BlockId::C6Prime, n)?,
    })
}

/// The unlowered gates of a block (empty for the two swap-only resets).
pub fn unlowered_block(block: BlockId, n: usize) -> Result<Circuit> {
    let p = synth::plan(n)?;
    Ok(match block {
        BlockId::C1Prime => p.c1,
        BlockId::C2Prime => p.c2,
        BlockId::C3Prime => p.c3,
        BlockId::C4Prime => p.c4,
        BlockId::C5Prime => p.c5,
        BlockId::C6Prime => p.c6,
        BlockId::C3HalfPrime | BlockId::C6HalfPrime => Circuit::empty(n),
    })
}

/// Lowers one block to local gates.
///
/// Non-adjacent controlled-Rx gates are routed with chains of adjacent swaps,
/// then a final adjacent-swap sort brings the lines to the block's fixed exit
/// ordering. For the swap-only resets this sort is the whole block and uses
/// the minimal number of adjacent swaps (the inversion count of the ordering
/// they undo).
pub fn lower_block(block: BlockId, n: usize) -> Result<LoweredBlock> {
    let ordering_in = ordering_in(block, n)?;
    let ordering_out = ordering_out(block, n)?;
    let source = unlowered_block(block, n)?;
    let mut router = Router::new(n, &ordering_in);
    for g in source.gates() {
        router.route_gate(g)?;
    }
    router.sort_to(&ordering_out)?;
    Ok(LoweredBlock {
        block_id: block,
        circuit: router.into_circuit()?,
        ordering_in,
        ordering_out,
    })
}

/// Lowers all eight blocks in pipeline order.
pub fn lower_pipeline(n: usize) -> Result<Vec<LoweredBlock>> {
    BlockId::ALL.iter().map(|&b| lower_block(b, n)).collect()
}

/// The fully lowered decomposition:
/// `P1 + C1' + C2' + C3' + C3.5' + P2 + C4' + C5' + C6' + C6.5'`.
///
/// P1 acts at the initial identity ordering and P2 at the identity ordering
/// restored by C3.5', so both phase layers need no relabelling. The final
/// tracked ordering is the identity and the unitary equals the n-qubit
/// Toffoli up to one global phase.
pub fn lower_toffoli(n: usize) -> Result<Circuit> {
    let plan = synth::plan(n)?;
    let blocks = lower_pipeline(n)?;
    let mut out = plan.p1.clone();
    for b in &blocks[..4] {
        out = out.compose(&b.circuit)?;
    }
    out = out.compose(&plan.p2)?;
    for b in &blocks[4..] {
        out = out.compose(&b.circuit)?;
    }
    Ok(out)
}

/// Checks that every two-qubit gate couples adjacent lines (`|i - j| == 1`).
pub fn check_locality(c: &Circuit) -> LocalityReport {
    let mut offenders = Vec::new();
    for (idx, g) in c.gates().iter().enumerate() {
        let qs = g.qubits();
        if qs.len() == 2 && qs[0].abs_diff(qs[1]) != 1 {
            offenders.push(idx);
        }
    }
    LocalityReport {
        pass: offenders.is_empty(),
        offenders,
    }
}

fn require_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(CircuitError::UnsupportedWidth { n, min: 3 });
    }
    Ok(())
}

/// Helper used by tests and the CLI: gates of a block that are not swaps.
pub fn non_swap_gates(c: &Circuit) -> Vec<Gate> {
    c.gates()
        .iter()
        .copied()
        .filter(|g| !matches!(g, Gate::Swap { .. }))
        .collect()
}
