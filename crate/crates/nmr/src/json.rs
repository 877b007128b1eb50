//! Pulse schedule JSON format:
//!
//! ```json
//! {"width": 3,
//!  "steps": [{"kind": "h", "spins": [2]},
//!            {"kind": "u0", "theta": 0.7853981633974483, "spins": [1, 2]}],
//!  "global_phase": [0.7071067811865476, 0.7071067811865475]}
//! ```

use crate::{C64, NmrError, PulseSchedule, PulseStep, Result};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize)]
struct ScheduleRepr {
    width: usize,
    steps: Vec<StepRepr>,
    global_phase: [f64; 2],
}

#[derive(Serialize, Deserialize)]
struct StepRepr {
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    theta: Option<f64>,
    spins: Vec<usize>,
}

fn step_to_repr(s: &PulseStep) -> StepRepr {
    let (kind, theta) = match *s {
        PulseStep::IsingU0 { theta, .. } => ("u0", Some(theta)),
        PulseStep::LocalU1 { theta, .. } => ("u1", Some(theta)),
        PulseStep::LocalU2 { theta, .. } => ("u2", Some(theta)),
        PulseStep::HadamardFrame { .. } => ("h", None),
    };
    StepRepr {
        kind: kind.to_string(),
        theta,
        spins: s.spins(),
    }
}

fn repr_to_step(r: &StepRepr) -> Result<PulseStep> {
    let need_spins = |expected: usize| -> Result<()> {
        if r.spins.len() != expected {
            return Err(NmrError::BadSpinCount {
                kind: r.kind.clone(),
                expected,
                got: r.spins.len(),
            });
        }
        Ok(())
    };
    let theta = r.theta.unwrap_or(0.0);
    Ok(match r.kind.as_str() {
        "u0" => {
            need_spins(2)?;
            PulseStep::IsingU0 {
                theta,
                spins: (r.spins[0], r.spins[1]),
            }
        }
        "u1" => {
            need_spins(1)?;
            PulseStep::LocalU1 {
                theta,
                spin: r.spins[0],
            }
        }
        "u2" => {
            need_spins(1)?;
            PulseStep::LocalU2 {
                theta,
                spin: r.spins[0],
            }
        }
        "h" => {
            need_spins(1)?;
            PulseStep::HadamardFrame { spin: r.spins[0] }
        }
        other => return Err(NmrError::UnknownStepKind(other.to_string())),
    })
}

pub fn schedule_to_json(s: &PulseSchedule) -> String {
    let repr = ScheduleRepr {
        width: s.width,
        steps: s.steps.iter().map(step_to_repr).collect(),
        global_phase: [s.global_phase.re, s.global_phase.im],
    };
    serde_json::to_string_pretty(&repr).expect("schedule serialization cannot fail")
}

pub fn schedule_from_json(text: &str) -> Result<PulseSchedule> {
    let repr: ScheduleRepr = serde_json::from_str(text)?;
    let steps = repr
        .steps
        .iter()
        .map(repr_to_step)
        .collect::<Result<Vec<_>>>()?;
    Ok(PulseSchedule {
        width: repr.width,
        steps,
        global_phase: C64::new(repr.global_phase[0], repr.global_phase[1]),
    })
}
