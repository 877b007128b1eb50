//! In-place statevector kernels for the gate vocabulary.
//!
//! All kernels take 1-based qubit lines with qubit 1 as the most significant
//! bit of the basis index.

use circuit_core::Gate;
use num_complex::Complex;

pub type C64 = Complex<f64>;

/// Bit of basis index `i` on line `q` (1-based, qubit 1 = MSB) for width `n`.
#[inline]
pub fn bit_of(i: usize, q: usize, n: usize) -> usize {
    (i >> (n - q)) & 1
}

#[inline]
fn mask_of(q: usize, n: usize) -> usize {
    1 << (n - q)
}

/// `S(theta) = diag(1, e^{i theta})` on line `q`.
pub fn apply_phase(state: &mut [C64], n: usize, q: usize, theta: f64) {
    let ph = C64::from_polar(1.0, theta);
    for (i, v) in state.iter_mut().enumerate() {
        if bit_of(i, q, n) == 1 {
            *v *= ph;
        }
    }
}

/// Hadamard on line `q`.
pub fn apply_hadamard(state: &mut [C64], n: usize, q: usize) {
    let m = mask_of(q, n);
    let s = std::f64::consts::FRAC_1_SQRT_2;
    for i in 0..state.len() {
        if i & m == 0 {
            let a = state[i];
            let b = state[i | m];
            state[i] = (a + b) * s;
            state[i | m] = (a - b) * s;
        }
    }
}

/// CNOT with control `c`, target `t`.
pub fn apply_cnot(state: &mut [C64], n: usize, c: usize, t: usize) {
    let mc = mask_of(c, n);
    let mt = mask_of(t, n);
    for i in 0..state.len() {
        if i & mc != 0 && i & mt == 0 {
            state.swap(i, i | mt);
        }
    }
}

/// Swap of lines `a` and `b`.
pub fn apply_swap(state: &mut [C64], n: usize, a: usize, b: usize) {
    let ma = mask_of(a, n);
    let mb = mask_of(b, n);
    for i in 0..state.len() {
        if i & ma != 0 && i & mb == 0 {
            state.swap(i, (i & !ma) | mb);
        }
    }
}

/// Arbitrary single-qubit operator `m` on target `t`, applied only where the
/// control line `c` is |1>. Pass `c = 0` for an uncontrolled application.
pub fn apply_controlled_1q(state: &mut [C64], n: usize, c: usize, t: usize, m: [[C64; 2]; 2]) {
    let mc = if c == 0 { 0 } else { mask_of(c, n) };
    let mt = mask_of(t, n);
    for i in 0..state.len() {
        if i & mt == 0 && (mc == 0 || i & mc != 0) {
            let j = i | mt;
            let a = state[i];
            let b = state[j];
            state[i] = m[0][0] * a + m[0][1] * b;
            state[j] = m[1][0] * a + m[1][1] * b;
        }
    }
}

/// `Rx(theta) = e^{-i X theta / 2}` as a 2x2 matrix.
pub fn rx_2x2(theta: f64) -> [[C64; 2]; 2] {
    let c = C64::new((theta / 2.0).cos(), 0.0);
    let s = C64::new(0.0, -(theta / 2.0).sin());
    [[c, s], [s, c]]
}

/// `e^{i pi / 2^{t+1}} * Rx(pi / 2^t)`: the 2^t-th root of X (conjugated for
/// `dagger`). Kept here so the simulator can embed fused controlled-root
/// gates without depending on the synthesis crate.
fn root_x_2x2(t: u32, dagger: bool) -> [[C64; 2]; 2] {
    let angle = std::f64::consts::PI / f64::powi(2.0, t as i32);
    let sign = if dagger { -1.0 } else { 1.0 };
    let ph = C64::from_polar(1.0, sign * angle / 2.0);
    let m = rx_2x2(sign * angle);
    [[ph * m[0][0], ph * m[0][1]], [ph * m[1][0], ph * m[1][1]]]
}

/// Controlled `Rx(theta)`.
pub fn apply_crx(state: &mut [C64], n: usize, c: usize, t: usize, theta: f64) {
    apply_controlled_1q(state, n, c, t, rx_2x2(theta));
}

/// Applies one gate of the circuit vocabulary in place.
pub fn apply_gate(state: &mut [C64], n: usize, g: &Gate) {
    match *g {
        Gate::Phase { qubit, angle } => apply_phase(state, n, qubit, angle.to_radians()),
        Gate::Hadamard { qubit } => apply_hadamard(state, n, qubit),
        Gate::ControlledRx {
            control,
            target,
            angle,
        } => apply_crx(state, n, control, target, angle.to_radians()),
        Gate::ControlledRootX { control, target, t } => {
            apply_controlled_1q(state, n, control, target, root_x_2x2(t, false))
        }
        Gate::ControlledRootXDagger { control, target, t } => {
            apply_controlled_1q(state, n, control, target, root_x_2x2(t, true))
        }
        Gate::Cnot { control, target } => apply_cnot(state, n, control, target),
        Gate::Swap { a, b } => apply_swap(state, n, a, b),
    }
}
