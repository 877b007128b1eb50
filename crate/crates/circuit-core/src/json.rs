//! Canonical JSON circuit format:
//!
//! ```json
//! {"width": 3,
//!  "gates": [{"kind": "crx", "qubits": [1, 3], "sign": 1, "k": 1},
//!            {"kind": "phase", "qubits": [2], "sign": -1, "k": 2},
//!            {"kind": "crootx", "qubits": [1, 2], "t": 1}]}
//! ```
//!
//! Angles are stored exactly as `(sign, k)` pairs, so the round trip is
//! bit-exact (only integers are serialized).

use crate::{Circuit, CircuitError, DyadicAngle, Gate, GateKind, Result};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize)]
struct CircuitRepr {
    width: usize,
    gates: Vec<GateRepr>,
}

#[derive(Serialize, Deserialize)]
struct GateRepr {
    kind: String,
    qubits: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sign: Option<i8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    t: Option<u32>,
}

fn gate_to_repr(g: &Gate) -> GateRepr {
    let (sign, k, t) = match *g {
        Gate::Phase { angle, .. } | Gate::ControlledRx { angle, .. } => {
            (Some(angle.sign()), Some(angle.k()), None)
        }
        Gate::ControlledRootX { t, .. } | Gate::ControlledRootXDagger { t, .. } => {
            (None, None, Some(t))
        }
        _ => (None, None, None),
    };
    GateRepr {
        kind: g.kind().tag().to_string(),
        qubits: g.qubits(),
        sign,
        k,
        t,
    }
}

fn angle_of(r: &GateRepr) -> Result<DyadicAngle> {
    let sign = r.sign.ok_or(CircuitError::MissingField {
        kind: r.kind.clone(),
        field: "sign",
    })?;
    let k = r.k.ok_or(CircuitError::MissingField {
        kind: r.kind.clone(),
        field: "k",
    })?;
    DyadicAngle::new(sign, k)
}

fn qubits_of(r: &GateRepr, expected: usize) -> Result<&[usize]> {
    if r.qubits.len() != expected {
        return Err(CircuitError::BadQubitCount {
            kind: r.kind.clone(),
            expected,
            got: r.qubits.len(),
        });
    }
    Ok(&r.qubits)
}

fn repr_to_gate(r: &GateRepr) -> Result<Gate> {
    let kind = GateKind::from_tag(&r.kind)?;
    let root_t = |r: &GateRepr| {
        r.t.ok_or(CircuitError::MissingField {
            kind: r.kind.clone(),
            field: "t",
        })
    };
    Ok(match kind {
        GateKind::Phase => Gate::Phase {
            qubit: qubits_of(r, 1)?[0],
            angle: angle_of(r)?,
        },
        GateKind::Hadamard => Gate::Hadamard {
            qubit: qubits_of(r, 1)?[0],
        },
        GateKind::ControlledRx => {
            let q = qubits_of(r, 2)?;
            Gate::ControlledRx {
                control: q[0],
                target: q[1],
                angle: angle_of(r)?,
            }
        }
        GateKind::ControlledRootX => {
            let q = qubits_of(r, 2)?;
            Gate::ControlledRootX {
                control: q[0],
                target: q[1],
                t: root_t(r)?,
            }
        }
        GateKind::ControlledRootXDagger => {
            let q = qubits_of(r, 2)?;
            Gate::ControlledRootXDagger {
                control: q[0],
                target: q[1],
                t: root_t(r)?,
            }
        }
        GateKind::Cnot => {
            let q = qubits_of(r, 2)?;
            Gate::Cnot {
                control: q[0],
                target: q[1],
            }
        }
        GateKind::Swap => {
            let q = qubits_of(r, 2)?;
            Gate::Swap { a: q[0], b: q[1] }
        }
    })
}

/// Serializes a circuit to the canonical JSON format (pretty-printed).
pub fn circuit_to_json(c: &Circuit) -> String {
    let repr = CircuitRepr {
        width: c.width(),
        gates: c.gates().iter().map(gate_to_repr).collect(),
    };
    serde_json::to_string_pretty(&repr).expect("circuit serialization cannot fail")
}

/// Parses a circuit from the canonical JSON format, validating every gate.
pub fn circuit_from_json(text: &str) -> Result<Circuit> {
    let repr: CircuitRepr = serde_json::from_str(text)?;
    let gates = repr
        .gates
        .iter()
        .map(repr_to_gate)
        .collect::<Result<Vec<_>>>()?;
    Circuit::new(repr.width, gates)
}
