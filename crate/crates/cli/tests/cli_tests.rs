use circuit_core::{circuit_from_json, circuit_to_json, Circuit, DyadicAngle, Gate};
use cli::qasm::{export_qasm, simulate_qasm};
use sim::{equiv_up_to_phase, toffoli_matrix, unitary_of};
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_crxkit"))
}

#[test]
fn qasm_export_empty_circuit_is_header_only() {
    let text = export_qasm(&Circuit::empty(3)).unwrap();
    assert!(text.starts_with("OPENQASM 2.0;"));
    assert!(text.contains("qreg q[3];"));
    // No statements after the register declaration.
    let after = text.split("qreg q[3];").nth(1).unwrap();
    assert_eq!(after.trim(), "");
}

#[test]
fn qasm_export_single_phase_gate_is_one_u1_statement() {
    let c = Circuit::new(
        1,
        vec![Gate::Phase {
            qubit: 1,
            angle: DyadicAngle::positive(2),
        }],
    )
    .unwrap();
    let text = export_qasm(&c).unwrap();
    let stmts: Vec<&str> = text
        .lines()
        .skip_while(|l| !l.starts_with("qreg"))
        .skip(1)
        .collect();
    assert_eq!(stmts.len(), 1);
    assert!(stmts[0].starts_with("u1(7.85398163397448"), "{}", stmts[0]);
    assert!(stmts[0].contains("e-1) q[0];"), "{}", stmts[0]);
}

#[test]
fn qasm_resimulation_matches_simulator_for_every_gate_kind() {
    let a = DyadicAngle::negative(3);
    let c = Circuit::new(
        3,
        vec![
            Gate::Phase { qubit: 2, angle: a },
            Gate::Hadamard { qubit: 3 },
            Gate::ControlledRx {
                control: 1,
                target: 3,
                angle: a,
            },
            Gate::ControlledRootX {
                control: 2,
                target: 1,
                t: 2,
            },
            Gate::ControlledRootXDagger {
                control: 3,
                target: 2,
                t: 1,
            },
            Gate::Cnot {
                control: 1,
                target: 2,
            },
            Gate::Swap { a: 2, b: 3 },
        ],
    )
    .unwrap();
    let resim = simulate_qasm(&export_qasm(&c).unwrap()).unwrap();
    let direct = unitary_of(&c).unwrap();
    let report = equiv_up_to_phase(&resim, &direct, 1e-9).unwrap();
    assert!(report.equivalent, "{report:?}");
}

#[test]
fn qasm_resimulation_of_generated_network_is_toffoli() {
    let c = synth::gen_toffoli(3).unwrap();
    let resim = simulate_qasm(&export_qasm(&c).unwrap()).unwrap();
    let report = equiv_up_to_phase(&resim, &toffoli_matrix(3), 1e-9).unwrap();
    assert!(report.equivalent, "{report:?}");
}

#[test]
fn synth_output_round_trips_and_verifies() {
    let dir = std::env::temp_dir().join("crxkit-test-synth");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t4.json");
    let status = bin()
        .args(["synth", "--n", "4", "--output"])
        .arg(&path)
        .status()
        .unwrap();
    assert!(status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let c = circuit_from_json(&text).unwrap();
    assert_eq!(circuit_to_json(&c), text);
    assert_eq!(c, synth::gen_toffoli(4).unwrap());

    let status = bin()
        .args(["verify", "--target", "toffoli", "--input"])
        .arg(&path)
        .status()
        .unwrap();
    assert!(status.success());
}

#[test]
fn lower_output_feeds_compile_nmr_and_pulse_verify() {
    let dir = std::env::temp_dir().join("crxkit-test-pipeline");
    std::fs::create_dir_all(&dir).unwrap();
    let lowered = dir.join("lowered.json");
    let pulses = dir.join("pulses.json");

    assert!(bin()
        .args(["lower", "--n", "3", "--output"])
        .arg(&lowered)
        .status()
        .unwrap()
        .success());

    // The lower output carries per-block ordering metadata.
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&lowered).unwrap()).unwrap();
    let blocks = doc["blocks"].as_array().unwrap();
    assert_eq!(blocks.len(), 8);
    assert_eq!(blocks[0]["block_id"], "C1'");
    assert_eq!(
        blocks[0]["ordering_out"].as_array().unwrap().len(),
        3
    );

    assert!(bin()
        .args(["compile-nmr", "--input"])
        .arg(&lowered)
        .args(["--output"])
        .arg(&pulses)
        .status()
        .unwrap()
        .success());

    assert!(bin()
        .args(["verify", "--pulse", "--target", "toffoli", "--input"])
        .arg(&pulses)
        .status()
        .unwrap()
        .success());
}

#[test]
fn verify_exit_status_reflects_equivalence() {
    let dir = std::env::temp_dir().join("crxkit-test-verify");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t3.json");
    assert!(bin()
        .args(["synth", "--n", "3", "--output"])
        .arg(&path)
        .status()
        .unwrap()
        .success());
    // The full network is not the plain controlled-ZX oracle.
    let status = bin()
        .args(["verify", "--target", "czx", "--input"])
        .arg(&path)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(1));
}

#[test]
fn stats_reports_formula_constants() {
    let out = bin().args(["stats", "--n", "5"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("depth(backbone) = 20"), "{text}");
    assert!(text.contains("size.phase = 7"), "{text}");
    assert!(text.contains("constant 8n-20 = 20"), "{text}");
    assert!(text.contains("constant 2n-3 = 7"), "{text}");
    assert!(text.contains("constant 14n-21 = 49"), "{text}");

    let out = bin().args(["stats", "--n", "4"]).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("constant 14n-21 = 35"), "{text}");
}

#[test]
fn bad_arguments_fail_with_one_line_reason() {
    let out = bin().args(["synth", "--n", "2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(err.starts_with("error: "), "{err}");
}

#[test]
fn fused_synth_verifies_as_toffoli() {
    let dir = std::env::temp_dir().join("crxkit-test-fused");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("fused4.json");
    assert!(bin()
        .args(["synth", "--n", "4", "--fused", "--output"])
        .arg(&path)
        .status()
        .unwrap()
        .success());
    assert!(bin()
        .args(["verify", "--target", "toffoli", "--input"])
        .arg(&path)
        .status()
        .unwrap()
        .success());
}
