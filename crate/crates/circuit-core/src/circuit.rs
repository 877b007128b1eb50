use crate::{CircuitError, Gate, GateKind, Permutation, Result};

/// An ordered gate list over `width` labelled lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    width: usize,
    gates: Vec<Gate>,
}

/// Per-kind gate counts returned by [`Circuit::size`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SizeCount {
    pub phase: usize,
    pub controlled_rx: usize,
    pub controlled_root_x: usize,
    pub controlled_root_x_dagger: usize,
    pub cnot: usize,
    pub hadamard: usize,
    pub swap: usize,
}

impl SizeCount {
    pub fn get(&self, kind: GateKind) -> usize {
        match kind {
            GateKind::Phase => self.phase,
            GateKind::ControlledRx => self.controlled_rx,
            GateKind::ControlledRootX => self.controlled_root_x,
            GateKind::ControlledRootXDagger => self.controlled_root_x_dagger,
            GateKind::Cnot => self.cnot,
            GateKind::Hadamard => self.hadamard,
            GateKind::Swap => self.swap,
        }
    }

    pub fn total(&self) -> usize {
        GateKind::ALL.into_iter().map(|k| self.get(k)).sum()
    }

    pub fn add(&self, other: &SizeCount) -> SizeCount {
        SizeCount {
            phase: self.phase + other.phase,
            controlled_rx: self.controlled_rx + other.controlled_rx,
            controlled_root_x: self.controlled_root_x + other.controlled_root_x,
            controlled_root_x_dagger: self.controlled_root_x_dagger
                + other.controlled_root_x_dagger,
            cnot: self.cnot + other.cnot,
            hadamard: self.hadamard + other.hadamard,
            swap: self.swap + other.swap,
        }
    }
}

impl Circuit {
    /// Empty circuit of the given width.
    pub fn empty(width: usize) -> Self {
        Circuit {
            width,
            gates: Vec::new(),
        }
    }

    /// Builds a circuit, validating every gate against the width.
    pub fn new(width: usize, gates: Vec<Gate>) -> Result<Self> {
        for g in &gates {
            g.validate(width)?;
        }
        Ok(Circuit { width, gates })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// Appends a gate, validating it first.
    pub fn push(&mut self, gate: Gate) -> Result<()> {
        gate.validate(self.width)?;
        self.gates.push(gate);
        Ok(())
    }

    /// Gate list of `self` followed by gate list of `other`.
    pub fn compose(&self, other: &Circuit) -> Result<Circuit> {
        if self.width != other.width {
            return Err(CircuitError::WidthMismatch {
                left: self.width,
                right: other.width,
            });
        }
        let mut gates = self.gates.clone();
        gates.extend_from_slice(&other.gates);
        Ok(Circuit {
            width: self.width,
            gates,
        })
    }

    /// Concatenates many circuits of equal width.
    pub fn compose_all<'a>(
        width: usize,
        parts: impl IntoIterator<Item = &'a Circuit>,
    ) -> Result<Circuit> {
        let mut out = Circuit::empty(width);
        for p in parts {
            out = out.compose(p)?;
        }
        Ok(out)
    }

    /// Number of layers under as-soon-as-possible greedy scheduling: each gate
    /// is placed in the earliest layer after the last layer occupied by any of
    /// its lines. Single- and two-qubit gates alike count as depth 1.
    pub fn depth(&self) -> usize {
        let mut line_layer = vec![0usize; self.width + 1];
        let mut depth = 0;
        for g in &self.gates {
            let layer = g
                .qubits()
                .iter()
                .map(|&q| line_layer[q])
                .max()
                .unwrap_or(0)
                + 1;
            for q in g.qubits() {
                line_layer[q] = layer;
            }
            depth = depth.max(layer);
        }
        depth
    }

    /// Occurrence count per gate kind; totals to the gate-list length.
    pub fn size(&self) -> SizeCount {
        let mut s = SizeCount::default();
        for g in &self.gates {
            match g.kind() {
                GateKind::Phase => s.phase += 1,
                GateKind::ControlledRx => s.controlled_rx += 1,
                GateKind::ControlledRootX => s.controlled_root_x += 1,
                GateKind::ControlledRootXDagger => s.controlled_root_x_dagger += 1,
                GateKind::Cnot => s.cnot += 1,
                GateKind::Hadamard => s.hadamard += 1,
                GateKind::Swap => s.swap += 1,
            }
        }
        s
    }

    /// Relabels every gate's lines through `p` (`map[logical] = physical`),
    /// preserving gate order.
    pub fn permute(&self, p: &Permutation) -> Result<Circuit> {
        if p.len() != self.width {
            return Err(CircuitError::PermutationLengthMismatch {
                len: p.len(),
                width: self.width,
            });
        }
        let gates = self
            .gates
            .iter()
            .map(|g| g.map_qubits(|q| p.apply(q)))
            .collect();
        Ok(Circuit {
            width: self.width,
            gates,
        })
    }
}
