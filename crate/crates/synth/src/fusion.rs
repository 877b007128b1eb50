use circuit_core::{CircuitError, Gate, Result};
use num_complex::Complex;

type C64 = Complex<f64>;

/// The `2^t`-th root of X (or its adjoint):
/// `e^{+-i pi / 2^{t+1}} * e^{-+ i X pi / 2^{t+1}}`.
///
/// Satisfies `root_of_x(t, false)^{2^t} == X` exactly; `t = 0` is X itself.
pub fn root_of_x(t: u32, dagger: bool) -> [[C64; 2]; 2] {
    let half = std::f64::consts::PI / f64::powi(2.0, t as i32 + 1);
    let sign = if dagger { -1.0 } else { 1.0 };
    let ph = C64::from_polar(1.0, sign * half);
    let c = C64::new(half.cos(), 0.0);
    let s = C64::new(0.0, -sign * half.sin());
    [[ph * c, ph * s], [ph * s, ph * c]]
}

/// Fuses a phase gate on the control line into its partner controlled-Rx.
///
/// For `g = controlled-Rx(+-pi/2^t)` and `s = S(+-pi/2^{t+1})` on `g`'s
/// control (same sign, halved angle), the product is exactly the controlled
/// `2^t`-th root of X (adjoint for the negative sign): the phase multiplies
/// only the control-is-|1> block, turning `e^{-iX theta/2}` into
/// `e^{i theta/2} e^{-iX theta/2}`, whose `2^t`-th power is X.
pub fn fuse_phase(g: &Gate, s: &Gate) -> Result<Gate> {
    let (control, target, angle) = match *g {
        Gate::ControlledRx {
            control,
            target,
            angle,
        } => (control, target, angle),
        _ => {
            return Err(CircuitError::FusionMismatch(format!(
                "expected a controlled-Rx gate, got {:?}",
                g.kind()
            )))
        }
    };
    let (qubit, phase_angle) = match *s {
        Gate::Phase { qubit, angle } => (qubit, angle),
        _ => {
            return Err(CircuitError::FusionMismatch(format!(
                "expected a phase gate, got {:?}",
                s.kind()
            )))
        }
    };
    if qubit != control {
        return Err(CircuitError::FusionMismatch(format!(
            "phase gate acts on line {qubit}, but the controlled-Rx control is line {control}"
        )));
    }
    if phase_angle != angle.halved() {
        return Err(CircuitError::FusionMismatch(format!(
            "phase angle {phase_angle} is not half of the rotation angle {angle}"
        )));
    }
    let t = angle.k();
    Ok(if angle.sign() > 0 {
        Gate::ControlledRootX { control, target, t }
    } else {
        Gate::ControlledRootXDagger { control, target, t }
    })
}
