use crate::{CircuitError, DyadicAngle, Result};

/// The gate vocabulary of the toolkit.
///
/// Qubit indices are 1-based circuit lines; for two-qubit gates the control
/// comes first where the distinction exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gate {
    /// Phase gate `S(theta) = diag(1, e^{i theta})`.
    Phase { qubit: usize, angle: DyadicAngle },
    /// Controlled `Rx(theta) = e^{-i X theta / 2}` on the target.
    ControlledRx {
        control: usize,
        target: usize,
        angle: DyadicAngle,
    },
    /// Controlled `2^t`-th root of X (the fused phase + controlled-Rx form).
    ControlledRootX {
        control: usize,
        target: usize,
        t: u32,
    },
    /// Adjoint of [`Gate::ControlledRootX`].
    ControlledRootXDagger {
        control: usize,
        target: usize,
        t: u32,
    },
    Cnot { control: usize, target: usize },
    Hadamard { qubit: usize },
    Swap { a: usize, b: usize },
}

/// Discriminant of [`Gate`], used for per-kind size counts and serialization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GateKind {
    Phase,
    ControlledRx,
    ControlledRootX,
    ControlledRootXDagger,
    Cnot,
    Hadamard,
    Swap,
}

impl GateKind {
    pub const ALL: [GateKind; 7] = [
        GateKind::Phase,
        GateKind::ControlledRx,
        GateKind::ControlledRootX,
        GateKind::ControlledRootXDagger,
        GateKind::Cnot,
        GateKind::Hadamard,
        GateKind::Swap,
    ];

    /// Stable lowercase tag used in the JSON circuit format.
    pub fn tag(&self) -> &'static str {
        match self {
            GateKind::Phase => "phase",
            GateKind::ControlledRx => "crx",
            GateKind::ControlledRootX => "crootx",
            GateKind::ControlledRootXDagger => "crootxdg",
            GateKind::Cnot => "cnot",
            GateKind::Hadamard => "h",
            GateKind::Swap => "swap",
        }
    }

    pub fn from_tag(tag: &str) -> Result<Self> {
        GateKind::ALL
            .into_iter()
            .find(|k| k.tag() == tag)
            .ok_or_else(|| CircuitError::UnknownKind(tag.to_string()))
    }
}

impl Gate {
    pub fn kind(&self) -> GateKind {
        match self {
            Gate::Phase { .. } => GateKind::Phase,
            Gate::ControlledRx { .. } => GateKind::ControlledRx,
            Gate::ControlledRootX { .. } => GateKind::ControlledRootX,
            Gate::ControlledRootXDagger { .. } => GateKind::ControlledRootXDagger,
            Gate::Cnot { .. } => GateKind::Cnot,
            Gate::Hadamard { .. } => GateKind::Hadamard,
            Gate::Swap { .. } => GateKind::Swap,
        }
    }

    /// The lines this gate touches, control first where applicable.
    pub fn qubits(&self) -> Vec<usize> {
        match *self {
            Gate::Phase { qubit, .. } | Gate::Hadamard { qubit } => vec![qubit],
            Gate::ControlledRx {
                control, target, ..
            }
            | Gate::ControlledRootX {
                control, target, ..
            }
            | Gate::ControlledRootXDagger {
                control, target, ..
            }
            | Gate::Cnot { control, target } => vec![control, target],
            Gate::Swap { a, b } => vec![a, b],
        }
    }

    /// Checks index range and distinctness against a circuit width.
    pub fn validate(&self, width: usize) -> Result<()> {
        let qs = self.qubits();
        for &q in &qs {
            if q == 0 || q > width {
                return Err(CircuitError::QubitOutOfRange { qubit: q, width });
            }
        }
        if qs.len() == 2 && qs[0] == qs[1] {
            return Err(CircuitError::DuplicateQubits { qubit: qs[0] });
        }
        Ok(())
    }

    /// Rewrites the gate's line indices through `relabel` (1-based in/out).
    pub fn map_qubits(&self, mut relabel: impl FnMut(usize) -> usize) -> Gate {
        match *self {
            Gate::Phase { qubit, angle } => Gate::Phase {
                qubit: relabel(qubit),
                angle,
            },
            Gate::ControlledRx {
                control,
                target,
                angle,
            } => Gate::ControlledRx {
                control: relabel(control),
                target: relabel(target),
                angle,
            },
            Gate::ControlledRootX { control, target, t } => Gate::ControlledRootX {
                control: relabel(control),
                target: relabel(target),
                t,
            },
            Gate::ControlledRootXDagger { control, target, t } => Gate::ControlledRootXDagger {
                control: relabel(control),
                target: relabel(target),
                t,
            },
            Gate::Cnot { control, target } => Gate::Cnot {
                control: relabel(control),
                target: relabel(target),
            },
            Gate::Hadamard { qubit } => Gate::Hadamard {
                qubit: relabel(qubit),
            },
            Gate::Swap { a, b } => Gate::Swap {
                a: relabel(a),
                b: relabel(b),
            },
        }
    }
}
