use crate::{C64, NmrError, PulseSchedule, PulseStep, Result};
use circuit_core::{Circuit, Gate};
use sim::{apply_hadamard, bit_of, UnitaryMatrix};

const FRAC_PI_4: f64 = std::f64::consts::FRAC_PI_4;

fn require_adjacent(a: usize, b: usize) -> Result<()> {
    if a.abs_diff(b) != 1 {
        return Err(NmrError::NonAdjacent { a, b });
    }
    Ok(())
}

/// CNOT with control `c` and target `t` (adjacent spins): the sandwich at
/// `(pi/4, -pi/4, -pi/4)` with Hadamard frames on the target. The step
/// product is `e^{-i pi/4} * CNOT`, so `e^{+i pi/4}` is recorded in the
/// global phase to make the schedule exact.
fn cnot_schedule(width: usize, c: usize, t: usize) -> PulseSchedule {
    PulseSchedule {
        width,
        steps: vec![
            PulseStep::HadamardFrame { spin: t },
            PulseStep::IsingU0 {
                theta: FRAC_PI_4,
                spins: (c, t),
            },
            PulseStep::LocalU1 {
                theta: -FRAC_PI_4,
                spin: c,
            },
            PulseStep::LocalU2 {
                theta: -FRAC_PI_4,
                spin: t,
            },
            PulseStep::HadamardFrame { spin: t },
        ],
        global_phase: C64::from_polar(1.0, FRAC_PI_4),
    }
}

/// Compiles one local gate to a pulse schedule over `width` spins.
pub fn compile_gate(g: &Gate, width: usize) -> Result<PulseSchedule> {
    let mut sched = PulseSchedule::empty(width);
    match *g {
        // S(theta) = e^{i theta/2} U1(-theta/2).
        Gate::Phase { qubit, angle } => {
            let theta = angle.to_radians();
            sched.steps.push(PulseStep::LocalU1 {
                theta: -theta / 2.0,
                spin: qubit,
            });
            sched.global_phase = C64::from_polar(1.0, theta / 2.0);
        }
        Gate::Hadamard { qubit } => {
            sched.steps.push(PulseStep::HadamardFrame { spin: qubit });
        }
        // Controlled-Rx(2 theta) = sandwich(theta/2, 0, -theta/2); the zero
        // local pulse is omitted.
        Gate::ControlledRx {
            control,
            target,
            angle,
        } => {
            require_adjacent(control, target)?;
            let quarter = angle.to_radians() / 4.0;
            sched.steps.extend_from_slice(&[
                PulseStep::HadamardFrame { spin: target },
                PulseStep::IsingU0 {
                    theta: quarter,
                    spins: (control, target),
                },
                PulseStep::LocalU2 {
                    theta: -quarter,
                    spin: target,
                },
                PulseStep::HadamardFrame { spin: target },
            ]);
        }
        Gate::Cnot { control, target } => {
            require_adjacent(control, target)?;
            sched = cnot_schedule(width, control, target);
        }
        // Three CNOTs with alternating orientation.
        Gate::Swap { a, b } => {
            require_adjacent(a, b)?;
            sched.extend(&cnot_schedule(width, a, b));
            sched.extend(&cnot_schedule(width, b, a));
            sched.extend(&cnot_schedule(width, a, b));
        }
        Gate::ControlledRootX { .. } | Gate::ControlledRootXDagger { .. } => {
            return Err(NmrError::Unsupported {
                kind: format!("{:?}", g.kind()),
            });
        }
    }
    Ok(sched)
}

/// Compiles a whole local circuit: concatenation of per-gate schedules.
pub fn compile_circuit(c: &Circuit) -> Result<PulseSchedule> {
    let locality = localize_check(c);
    if !locality.is_empty() {
        return Err(NmrError::NotLocal {
            offenders: locality,
        });
    }
    let mut sched = PulseSchedule::empty(c.width());
    for g in c.gates() {
        sched.extend(&compile_gate(g, c.width())?);
    }
    Ok(sched)
}

// Local (inline) adjacency scan; avoids a dependency cycle with the lowering
// crate, which uses the same |i - j| == 1 criterion.
fn localize_check(c: &Circuit) -> Vec<usize> {
    c.gates()
        .iter()
        .enumerate()
        .filter(|(_, g)| {
            let qs = g.qubits();
            qs.len() == 2 && qs[0].abs_diff(qs[1]) != 1
        })
        .map(|(i, _)| i)
        .collect()
}

fn apply_step(state: &mut [C64], n: usize, step: &PulseStep) {
    match *step {
        PulseStep::IsingU0 { theta, spins } => {
            for (i, v) in state.iter_mut().enumerate() {
                let parity = bit_of(i, spins.0, n) ^ bit_of(i, spins.1, n);
                let sign = if parity == 0 { 1.0 } else { -1.0 };
                *v *= C64::from_polar(1.0, sign * theta);
            }
        }
        PulseStep::LocalU1 { theta, spin } | PulseStep::LocalU2 { theta, spin } => {
            for (i, v) in state.iter_mut().enumerate() {
                let sign = if bit_of(i, spin, n) == 0 { 1.0 } else { -1.0 };
                *v *= C64::from_polar(1.0, sign * theta);
            }
        }
        PulseStep::HadamardFrame { spin } => apply_hadamard(state, n, spin),
    }
}

/// The unitary of a schedule: ordered product of the step unitaries times the
/// tracked global phase.
pub fn pulse_unitary(s: &PulseSchedule) -> Result<UnitaryMatrix> {
    let n = s.width;
    for step in &s.steps {
        for spin in step.spins() {
            if spin == 0 || spin > n {
                return Err(NmrError::SpinOutOfRange { spin, width: n });
            }
        }
    }
    let dim = 1usize << n;
    let mut m = UnitaryMatrix::zeros(dim);
    let mut col = vec![C64::new(0.0, 0.0); dim];
    for j in 0..dim {
        col.iter_mut().for_each(|v| *v = C64::new(0.0, 0.0));
        col[j] = C64::new(1.0, 0.0);
        for step in &s.steps {
            apply_step(&mut col, n, step);
        }
        for (r, &v) in col.iter().enumerate() {
            m.set(r, j, v * s.global_phase);
        }
    }
    Ok(m)
}
