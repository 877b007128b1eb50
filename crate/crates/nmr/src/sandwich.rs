//! The two-spin control sequence `(I (x) H) U0 U1 U2 (I (x) H)`.

use crate::C64;
use sim::UnitaryMatrix;

/// The four diagonal phases of the sequence:
/// `D1 = e^{i(t0+t1+t2)}`, `D2 = e^{i(-t0+t1-t2)}`,
/// `D3 = e^{i(-t0-t1+t2)}`, `D4 = e^{i(t0-t1-t2)}`.
pub fn deltas(t0: f64, t1: f64, t2: f64) -> [C64; 4] {
    [
        C64::from_polar(1.0, t0 + t1 + t2),
        C64::from_polar(1.0, -t0 + t1 - t2),
        C64::from_polar(1.0, -t0 - t1 + t2),
        C64::from_polar(1.0, t0 - t1 - t2),
    ]
}

/// Closed form of the sandwich: block matrix
/// `1/2 [[D1+D2, D1-D2], [D1-D2, D1+D2]] (+) [[D3+D4, D3-D4], ...]`.
///
/// Note: the middle diagonal factor of the sequence is
/// `diag(e^{i t2}, e^{-i t2}, e^{i t2}, e^{-i t2})`; the closed form above is
/// the one the D-phase formulas force.
pub fn ising_sandwich(t0: f64, t1: f64, t2: f64) -> UnitaryMatrix {
    let [d1, d2, d3, d4] = deltas(t0, t1, t2);
    let half = C64::new(0.5, 0.0);
    let mut m = UnitaryMatrix::zeros(4);
    m.set(0, 0, (d1 + d2) * half);
    m.set(0, 1, (d1 - d2) * half);
    m.set(1, 0, (d1 - d2) * half);
    m.set(1, 1, (d1 + d2) * half);
    m.set(2, 2, (d3 + d4) * half);
    m.set(2, 3, (d3 - d4) * half);
    m.set(3, 2, (d3 - d4) * half);
    m.set(3, 3, (d3 + d4) * half);
    m
}

/// The same sequence as an explicit product of the four factor matrices
/// `(I (x) H) * U0(t0) * U1(t1) * U2(t2) * (I (x) H)`; used to cross-check
/// the closed form.
pub fn ising_sandwich_product(t0: f64, t1: f64, t2: f64) -> UnitaryMatrix {
    let diag = |phases: [f64; 4]| {
        let mut m = UnitaryMatrix::zeros(4);
        for (i, p) in phases.into_iter().enumerate() {
            m.set(i, i, C64::from_polar(1.0, p));
        }
        m
    };
    let u0 = diag([t0, -t0, -t0, t0]);
    let u1 = diag([t1, t1, -t1, -t1]);
    let u2 = diag([t2, -t2, t2, -t2]);
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut h2 = UnitaryMatrix::zeros(4);
    for block in [0usize, 2] {
        h2.set(block, block, C64::new(s, 0.0));
        h2.set(block, block + 1, C64::new(s, 0.0));
        h2.set(block + 1, block, C64::new(s, 0.0));
        h2.set(block + 1, block + 1, C64::new(-s, 0.0));
    }
    h2.mul(&u0).mul(&u1).mul(&u2).mul(&h2)
}
