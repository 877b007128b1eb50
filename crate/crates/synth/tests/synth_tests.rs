use circuit_core::{Circuit, DyadicAngle, Gate};
use num_complex::Complex;
use sim::{equiv_up_to_phase, mcrx_matrix, toffoli_matrix, unitary_of, UnitaryMatrix};
use synth::{fuse_phase, gen_czx, gen_phase_layers, gen_toffoli, gen_toffoli_fused, plan};

type C64 = Complex<f64>;

#[test]
fn small_n_rejected() {
    assert!(gen_czx(2).is_err());
    assert!(gen_toffoli(2).is_err());
    assert!(gen_phase_layers(1).is_err());
}

#[test]
fn backbone_unitary_is_multi_controlled_rx_pi() {
    // The controlled-Rx-only backbone realizes exactly the n-qubit
    // controlled-Rx(pi) gate (bottom block -iX), at machine precision.
    for n in 3..=8 {
        let u = unitary_of(&gen_czx(n).unwrap()).unwrap();
        let oracle = mcrx_matrix(n, std::f64::consts::PI);
        assert!(
            u.max_abs_diff(&oracle) < 1e-12,
            "n={n}: {}",
            u.max_abs_diff(&oracle)
        );
    }
}

#[test]
fn toffoli_matches_oracle_up_to_phase() {
    for n in 3..=8 {
        let u = unitary_of(&gen_toffoli(n).unwrap()).unwrap();
        let rep = equiv_up_to_phase(&u, &toffoli_matrix(n), 1e-9).unwrap();
        assert!(rep.equivalent, "n={n}: deviation {}", rep.max_deviation);
    }
}

#[test]
fn backbone_depth_formula() {
    // Frozen depth table: 8n-20 for n >= 4; the n=3 instance measures 5.
    assert_eq!(gen_czx(3).unwrap().depth(), 5);
    for n in 4..=10 {
        assert_eq!(gen_czx(n).unwrap().depth(), 8 * n - 20, "n={n}");
    }
    assert_eq!(gen_czx(5).unwrap().depth(), 20);
    assert_eq!(gen_czx(6).unwrap().depth(), 28);
}

#[test]
fn toffoli_depth_overhead_is_two() {
    for n in 3..=10 {
        let czx_depth = gen_czx(n).unwrap().depth();
        let tof_depth = gen_toffoli(n).unwrap().depth();
        assert_eq!(tof_depth, czx_depth + 2, "n={n}");
    }
}

#[test]
fn backbone_sizes() {
    for n in 3..=10 {
        let s = gen_czx(n).unwrap().size();
        assert_eq!(s.controlled_rx, 2 * n * n - 6 * n + 5, "n={n}");
        assert_eq!(s.phase, 0);
        assert_eq!(s.total(), s.controlled_rx);
    }
    assert_eq!(gen_czx(4).unwrap().size().controlled_rx, 13);
}

#[test]
fn phase_counts_and_width() {
    for n in 3..=10 {
        let t = gen_toffoli(n).unwrap();
        assert_eq!(t.size().phase, 2 * n - 3, "n={n}");
        assert_eq!(t.width(), n);
    }
    assert_eq!(gen_toffoli(4).unwrap().size().phase, 5);
    assert_eq!(gen_toffoli(5).unwrap().size().phase, 7);
}

#[test]
fn plan_part_contents() {
    for n in 3..=8 {
        let p = plan(n).unwrap();
        for part in [&p.c1, &p.c2, &p.c3, &p.c4, &p.c5, &p.c6] {
            let s = part.size();
            assert_eq!(s.total(), s.controlled_rx, "backbone parts are pure crx");
        }
        for layer in [&p.p1, &p.p2] {
            let s = layer.size();
            assert_eq!(s.total(), s.phase, "phase layers are pure phases");
        }
        assert_eq!(p.p1.len() + p.p2.len(), 2 * n - 3);
        // C2 and C5 are the two single control-1 gates of the pattern.
        assert_eq!(p.c2.len(), 1);
        assert_eq!(p.c5.len(), 1);
        // The full plan concatenation is gen_toffoli.
        assert_eq!(p.full(), gen_toffoli(n).unwrap());
        assert_eq!(p.backbone(), gen_czx(n).unwrap());
    }
}

#[test]
fn phase_layers_pair_up() {
    for n in 3..=8 {
        let (p1, p2) = gen_phase_layers(n).unwrap();
        assert_eq!(p1.len() + p2.len(), 2 * n - 3);
        assert_eq!(p1.len(), n - 1);
        assert_eq!(p2.len(), n - 2);
        // Every P2 angle is the negation of a P1 angle family member.
        let angles = |c: &Circuit| -> Vec<DyadicAngle> {
            c.gates()
                .iter()
                .map(|g| match *g {
                    Gate::Phase { angle, .. } => angle,
                    _ => panic!("phase layer holds a non-phase gate"),
                })
                .collect()
        };
        let p1_angles = angles(&p1);
        for a in angles(&p2) {
            assert!(
                p1_angles.contains(&a.negated()),
                "n={n}: P2 angle {a} has no negated P1 partner"
            );
        }
    }
    let (p1, p2) = gen_phase_layers(3).unwrap();
    assert_eq!(p1.len() + p2.len(), 3);
}

#[test]
fn fused_matrix_equals_separate_product() {
    // 4x4 check of the fusion identity for t = 1..6 and both signs.
    for t in 1..=6u32 {
        for sign in [1i8, -1] {
            let g = Gate::ControlledRx {
                control: 1,
                target: 2,
                angle: DyadicAngle::new(sign, t).unwrap(),
            };
            let s = Gate::Phase {
                qubit: 1,
                angle: DyadicAngle::new(sign, t + 1).unwrap(),
            };
            let fused = fuse_phase(&g, &s).unwrap();
            let fused_u = unitary_of(&Circuit::new(2, vec![fused]).unwrap()).unwrap();
            let sep_u = unitary_of(&Circuit::new(2, vec![g, s]).unwrap()).unwrap();
            assert!(
                fused_u.max_abs_diff(&sep_u) < 1e-12,
                "t={t} sign={sign}: {}",
                fused_u.max_abs_diff(&sep_u)
            );
        }
    }
}

#[test]
fn fused_circuit_reproduces_unfused_unitary() {
    for n in 3..=6 {
        let fused = gen_toffoli_fused(n).unwrap();
        let s = fused.size();
        assert_eq!(s.phase, 0);
        assert_eq!(
            s.controlled_root_x + s.controlled_root_x_dagger,
            2 * n - 3,
            "n={n}"
        );
        let uf = unitary_of(&fused).unwrap();
        let uu = unitary_of(&gen_toffoli(n).unwrap()).unwrap();
        assert!(uf.max_abs_diff(&uu) < 1e-12, "n={n}");
    }
}

#[test]
fn root_of_x_embeds_as_controlled_block() {
    // Controlled gate with the synthesized root block equals phase * crx.
    for t in 0..=4u32 {
        let r = synth::root_of_x(t, false);
        let mut expect = UnitaryMatrix::identity(4);
        for a in 0..2 {
            for b in 0..2 {
                expect.set(2 + a, 2 + b, r[a][b]);
            }
        }
        let circ = Circuit::new(
            2,
            vec![Gate::ControlledRootX {
                control: 1,
                target: 2,
                t,
            }],
        )
        .unwrap();
        let u = unitary_of(&circ).unwrap();
        assert!(u.max_abs_diff(&expect) < 1e-13, "t={t}");
    }
    let _ = C64::new(0.0, 0.0);
}
