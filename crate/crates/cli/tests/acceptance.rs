//! Acceptance gate: one test per numbered verification criterion, each
//! printing a single PASS/FAIL line with the measured quantities. The
//! checks themselves live in `aquiflow_cli::verify`, shared with the
//! `verify` subcommand; the tenth criterion drives the real binary.

use std::process::Command;

use aquiflow_cli::verify;
use aquiflow_cli::CheckResult;

fn assert_criterion(result: CheckResult) {
    println!(
        "{} {:<26} {}",
        if result.passed { "PASS" } else { "FAIL" },
        result.name,
        result.details
    );
    assert!(result.passed, "{}: {}", result.name, result.details);
}

#[test]
fn criterion_01_classical_limit() {
    assert_criterion(verify::criterion_1());
}

#[test]
fn criterion_02_time_operator_rate() {
    assert_criterion(verify::criterion_2());
}

#[test]
fn criterion_03_space_operator_rate() {
    assert_criterion(verify::criterion_3());
}

#[test]
fn criterion_04_stability_perturbations() {
    assert_criterion(verify::criterion_4());
}

#[test]
fn criterion_05_contraction_bound() {
    assert_criterion(verify::criterion_5());
}

#[test]
fn criterion_06_picard_convergence() {
    assert_criterion(verify::criterion_6());
}

#[test]
fn criterion_07_uniqueness_determinism() {
    assert_criterion(verify::criterion_7());
}

#[test]
fn criterion_08_special_functions() {
    assert_criterion(verify::criterion_8());
}

#[test]
fn criterion_09_parseval() {
    assert_criterion(verify::criterion_9());
}

#[test]
fn criterion_10_verify_subcommand_exits_0() {
    let out = Command::new(env!("CARGO_BIN_EXE_aquiflow"))
        .arg("verify")
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8_lossy(&out.stdout);
    print!("{stdout}");
    let passed = out.status.code() == Some(0);
    println!(
        "{} {:<26} exit code {:?} (need 0)",
        if passed { "PASS" } else { "FAIL" },
        "10-verify-exit-code",
        out.status.code()
    );
    assert!(passed, "`aquiflow verify` exited {:?}", out.status.code());
}
