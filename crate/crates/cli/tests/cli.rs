//! End-to-end behaviour of the `singlet` binary.

use std::process::{Command, Output};

fn singlet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_singlet"))
        .args(args)
        .env_remove("SINGLET_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = singlet(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    singlet(args).status.code().unwrap()
}

#[test]
fn fuse_examples() {
    assert_eq!(stdout(&["--p", "2", "fuse", "M(1,2)", "M(1,2)"]), "P(1,1)\n");
    assert_eq!(stdout(&["--p", "3", "fuse", "F(1/2)", "F(-1/2)"]), "M(3,3) + P(2,2)\n");
    assert_eq!(
        stdout(&["--p", "2", "fuse", "P(1,1)", "P(1,1)"]),
        "P(0,1) + 2*P(1,1) + P(2,1)\n"
    );
    assert_eq!(
        stdout(&["--p", "2", "--format", "json", "fuse", "M(1,2)", "M(1,2)"]),
        "[{\"mult\":1,\"r\":1,\"s\":1,\"species\":\"P\"}]\n"
    );
}

#[test]
fn structure_commands() {
    assert_eq!(stdout(&["--p", "2", "dual", "F(1/2) + M(2,1)"]), "M(0,1) + F(-5/2)\n");
    assert_eq!(
        stdout(&["--p", "2", "kclass", "P(1,1)"]),
        "M(0,1) + 2*M(1,1) + M(2,1)\n"
    );
    assert_eq!(
        stdout(&["--p", "2", "loewy", "P(2,1)"]),
        "P(2,1): [M(2,1)] [M(1,1), M(3,1)] [M(2,1)]\n"
    );
    assert_eq!(
        stdout(&["--p", "2", "factors", "Fa(1,1)"]),
        "Fa(1,1): M(1,1)@0 + M(2,1)@1\n"
    );
    assert_eq!(stdout(&["--p", "2", "grade", "F(1/2)"]), "F(1/2): 1/2\n");
    assert_eq!(stdout(&["--p", "2", "twist", "M(1,2)"]), "M(1,2): 7/8\n");
    assert_eq!(stdout(&["--p", "2", "monodromy", "F(1/2)"]), "F(1/2): 1/4\n");
    assert_eq!(stdout(&["--p", "3", "verma", "1", "2"]), "M(0,2) + M(1,2) + M(2,2)\n");
}

#[test]
fn characters() {
    assert_eq!(
        stdout(&["--p", "2", "--order", "5", "char", "M(1,1)"]),
        "h0=0 coeffs=[1, 0, 1, 2, 3, 4]\n"
    );
    assert_eq!(
        stdout(&["--p", "2", "--order", "3", "--format", "json", "char", "F(1/2)"]),
        "{\"cosets\":[{\"coeffs\":[1,1,2,3],\"h0\":\"5/32\"}]}\n"
    );
    let from_env = Command::new(env!("CARGO_BIN_EXE_singlet"))
        .args(["--p", "2", "char", "M(1,1)"])
        .env("SINGLET_ORDER", "2")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(from_env.stdout).unwrap(), "h0=0 coeffs=[1, 0, 1]\n");
    let shifted = stdout(&["--p", "2", "--order", "0", "char", "--shift", "M(1,1)"]);
    assert_eq!(shifted, "h0=1/12 coeffs=[1]\n");
}

#[test]
fn orbifold_commands() {
    let simples = stdout(&["--p", "2", "--m", "2", "simples"]);
    assert_eq!(simples.lines().count(), 16);
    assert_eq!(
        stdout(&["--p", "2", "--m", "2", "induce", "M(5,1) + F(1/2)"]),
        "W(1,1) + V(1/2)\n"
    );
    assert_eq!(
        stdout(&["--p", "2", "--m", "2", "orbfuse", "W(1,2)", "V(1/2)"]),
        "V(3/2) + V(15/2)\n"
    );
    assert_eq!(
        stdout(&["--p", "2", "--m", "2", "orbfuse", "W(3,1)", "W(3,1)"]),
        "W(1,1)\n"
    );
    assert_eq!(
        stdout(&["--p", "2", "--m", "1", "loewy", "R(1,1)"]),
        "R(1,1): [W(1,1)] [W(0,1), W(0,1)] [W(1,1)]\n"
    );
    assert_eq!(
        stdout(&["--p", "2", "--m", "1", "--order", "3", "char", "W(1,1)"]),
        "h0=0 coeffs=[1, 0, 1, 4]\n"
    );
}

#[test]
fn check_suites_pass() {
    let out = stdout(&["--p", "2", "--order", "40", "check", "--suite", "all"]);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 7, "{out}");
    let json = stdout(&["--p", "3", "--format", "json", "check", "--suite", "oracle"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["passed"], serde_json::Value::Bool(true));
}

#[test]
fn user_errors_exit_with_one() {
    let bad = singlet(&["--p", "2", "fuse", "M(1,2)", "F(4/2)"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("F(4/2)"));
    let syntax = singlet(&["--p", "2", "dual", "M(1,2"]);
    assert_eq!(syntax.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&syntax.stderr).contains("byte 5"));
    assert_eq!(code(&["--p", "2", "dual", "G(1,1)"]), 1);
    assert_eq!(code(&["--p", "2", "fuse", "Fa(1,1)", "M(1,1)"]), 1);
    assert_eq!(code(&["--p", "2", "--m", "1", "induce", "F(1/2)"]), 1);
    assert_eq!(code(&["--p", "2", "check", "--suite", "nope"]), 1);
    assert_eq!(code(&["fuse", "M(1,1)", "M(1,1)"]), 1);
    assert_eq!(code(&["--p", "2", "fuse", "M(1,1)"]), 1);
    assert_eq!(code(&["--p", "2", "--format", "xml", "simples"]), 1);
}

#[test]
fn json_is_byte_stable() {
    let args = [
        "--p",
        "3",
        "--format",
        "json",
        "fuse",
        "P(1,2) + F(1/2)",
        "F(-1/2) + M(1,2)",
    ];
    let first = singlet(&args).stdout;
    for _ in 0..3 {
        assert_eq!(singlet(&args).stdout, first);
    }
}
