use circuit_core::{Circuit, DyadicAngle, Gate, Permutation};
use num_complex::Complex;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use sim::{
    apply_state, czx_matrix, equiv_up_to_phase, mcrx_matrix, permutation_matrix, toffoli_matrix,
    unitary_of, C64, UnitaryMatrix,
};

fn c(re: f64, im: f64) -> C64 {
    Complex::new(re, im)
}

fn crx(control: usize, target: usize, sign: i8, k: u32) -> Gate {
    Gate::ControlledRx {
        control,
        target,
        angle: DyadicAngle::new(sign, k).unwrap(),
    }
}

/// Deterministic random circuit over the full gate vocabulary.
fn random_circuit(n: usize, len: usize, rng: &mut ChaCha8Rng) -> Circuit {
    let mut circ = Circuit::empty(n);
    for _ in 0..len {
        let a = rng.gen_range(1..=n);
        let mut b = rng.gen_range(1..=n);
        while b == a {
            b = rng.gen_range(1..=n);
        }
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        let k = rng.gen_range(0..4);
        let g = match rng.gen_range(0..7) {
            0 => Gate::Phase {
                qubit: a,
                angle: DyadicAngle::new(sign, k).unwrap(),
            },
            1 => crx(a, b, sign, k),
            2 => Gate::ControlledRootX {
                control: a,
                target: b,
                t: k,
            },
            3 => Gate::ControlledRootXDagger {
                control: a,
                target: b,
                t: k,
            },
            4 => Gate::Cnot {
                control: a,
                target: b,
            },
            5 => Gate::Hadamard { qubit: a },
            _ => Gate::Swap { a, b },
        };
        circ.push(g).unwrap();
    }
    circ
}

#[test]
fn empty_circuit_is_identity() {
    let u = unitary_of(&Circuit::empty(2)).unwrap();
    assert_eq!(u.max_abs_diff(&UnitaryMatrix::identity(4)), 0.0);
}

#[test]
fn single_cnot_matches_standard_matrix() {
    let circ = Circuit::new(
        2,
        vec![Gate::Cnot {
            control: 1,
            target: 2,
        }],
    )
    .unwrap();
    let u = unitary_of(&circ).unwrap();
    assert_eq!(u.max_abs_diff(&toffoli_matrix(2)), 0.0);
}

#[test]
fn toffoli_oracle_shapes() {
    // n=1 is X, n=2 is CNOT, n=3 swaps |110> and |111>.
    let x = toffoli_matrix(1);
    assert_eq!(x.get(0, 1), c(1.0, 0.0));
    assert_eq!(x.get(1, 0), c(1.0, 0.0));
    assert_eq!(x.get(0, 0), c(0.0, 0.0));

    let t3 = toffoli_matrix(3);
    for i in 0..6 {
        assert_eq!(t3.get(i, i), c(1.0, 0.0));
    }
    assert_eq!(t3.get(6, 7), c(1.0, 0.0));
    assert_eq!(t3.get(7, 6), c(1.0, 0.0));
    assert_eq!(t3.get(6, 6), c(0.0, 0.0));
}

#[test]
fn czx_oracle_block() {
    let z = czx_matrix(1);
    assert_eq!(z.get(0, 1), c(1.0, 0.0));
    assert_eq!(z.get(1, 0), c(-1.0, 0.0));

    // n=2: row |10> col |11> is +1; row |11> col |10> is -1.
    let z2 = czx_matrix(2);
    assert_eq!(z2.get(2, 3), c(1.0, 0.0));
    assert_eq!(z2.get(3, 2), c(-1.0, 0.0));
}

#[test]
fn czx_equals_cz_times_toffoli() {
    for n in [2usize, 3] {
        let dim = 1usize << n;
        // Controlled-Z on all n lines: -1 on the all-ones state.
        let mut cz = UnitaryMatrix::identity(dim);
        cz.set(dim - 1, dim - 1, c(-1.0, 0.0));
        let prod = cz.mul(&toffoli_matrix(n));
        assert_eq!(prod.max_abs_diff(&czx_matrix(n)), 0.0);
    }
}

#[test]
fn mcrx_pi_block_is_minus_i_x() {
    let m = mcrx_matrix(3, std::f64::consts::PI);
    assert!((m.get(6, 7) - c(0.0, -1.0)).norm() < 1e-15);
    assert!((m.get(7, 6) - c(0.0, -1.0)).norm() < 1e-15);
    assert!(m.get(6, 6).norm() < 1e-15);
    assert!(m.get(5, 5).norm() - 1.0 < 1e-15);
}

#[test]
fn equivalence_recovers_global_phase() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let circ = random_circuit(3, 20, &mut rng);
    let u = unitary_of(&circ).unwrap();
    for _ in 0..10 {
        let lambda = C64::from_polar(1.0, rng.gen_range(-3.0..3.0));
        let v = u.scaled(lambda);
        let rep = equiv_up_to_phase(&v, &u, 1e-12).unwrap();
        assert!(rep.equivalent);
        assert!((rep.phase - lambda).norm() < 1e-12);
    }
    let rep = equiv_up_to_phase(&u, &u.scaled(C64::from_polar(1.0, 0.4487)), 1e-9).unwrap();
    assert!(rep.equivalent);
}

#[test]
fn equivalence_detects_inequivalence() {
    let i2 = UnitaryMatrix::identity(2);
    let rep = equiv_up_to_phase(&toffoli_matrix(1), &i2, 1e-9).unwrap();
    assert!(!rep.equivalent);
}

#[test]
fn equivalence_known_phase_example() {
    let u = toffoli_matrix(3);
    let ph = C64::from_polar(1.0, std::f64::consts::PI / 7.0);
    let rep = equiv_up_to_phase(&u.scaled(ph), &u, 1e-12).unwrap();
    assert!(rep.equivalent);
    assert!((rep.phase - ph).norm() < 1e-12);
}

#[test]
fn unitary_distributes_over_compose() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..5 {
        let a = random_circuit(3, 12, &mut rng);
        let b = random_circuit(3, 12, &mut rng);
        let ab = a.compose(&b).unwrap();
        let ua = unitary_of(&a).unwrap();
        let ub = unitary_of(&b).unwrap();
        // First gate acts first, so compose(a, b) has matrix U_b * U_a.
        assert!(unitary_of(&ab).unwrap().max_abs_diff(&ub.mul(&ua)) < 1e-13);
    }
}

#[test]
fn generated_circuits_are_unitary() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for n in 2..=4 {
        let circ = random_circuit(n, 30, &mut rng);
        let u = unitary_of(&circ).unwrap();
        assert!(u.unitarity_deviation() < 1e-12 * (1 << n) as f64);
    }
}

#[test]
fn permute_conjugates_by_basis_permutation() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let circ = random_circuit(3, 15, &mut rng);
    let p = Permutation::from_map(vec![2, 3, 1]).unwrap();
    let lhs = unitary_of(&circ.permute(&p).unwrap()).unwrap();
    let pm = permutation_matrix(&p);
    let rhs = pm.mul(&unitary_of(&circ).unwrap()).mul(&pm.dagger());
    assert!(lhs.max_abs_diff(&rhs) < 1e-13);
}

#[test]
fn apply_state_matches_unitary_columns() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for n in 2..=5 {
        let circ = random_circuit(n, 20, &mut rng);
        let u = unitary_of(&circ).unwrap();
        let dim = 1usize << n;
        for j in 0..dim {
            let mut e = vec![c(0.0, 0.0); dim];
            e[j] = c(1.0, 0.0);
            let out = apply_state(&circ, &e).unwrap();
            for (r, v) in out.iter().enumerate() {
                assert!((v - u.get(r, j)).norm() < 1e-12);
            }
            let norm = out.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
            assert!((norm - 1.0).abs() < 1e-12);
        }
    }
}

#[test]
fn apply_state_toffoli_basis_actions() {
    let t = toffoli_matrix(3);
    let circ_t = {
        // Simulate via the oracle matrix itself on |110> and |010>.
        t
    };
    let mut s110 = vec![c(0.0, 0.0); 8];
    s110[6] = c(1.0, 0.0);
    let out = circ_t.apply(&s110);
    assert!((out[7].norm() - 1.0).abs() < 1e-12);
    let mut s010 = vec![c(0.0, 0.0); 8];
    s010[2] = c(1.0, 0.0);
    let out = circ_t.apply(&s010);
    assert!((out[2].norm() - 1.0).abs() < 1e-12);
}

#[test]
fn apply_state_rejects_bad_input() {
    let circ = Circuit::empty(2);
    let bad_dim = vec![c(1.0, 0.0); 3];
    assert!(apply_state(&circ, &bad_dim).is_err());
    let unnormalized = vec![c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
    assert!(apply_state(&circ, &unnormalized).is_err());
}

#[test]
fn width_over_cap_rejected() {
    let circ = Circuit::empty(sim::WIDTH_CAP + 1);
    let err = unitary_of(&circ).unwrap_err();
    assert!(err.to_string().contains(&sim::WIDTH_CAP.to_string()));
}
