use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fundpoly"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn verify_suites_pass() {
    let out = run(&["verify", "--surface", "mobius", "--grid", "41"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("PASS mobius"));

    let out = run(&["verify", "--surface", "projective", "--samples", "500"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));

    for surface in ["torus", "hemisphere", "rp2"] {
        let out = run(&["verify", "--surface", surface, "--grid", "9", "--samples", "50"]);
        assert_eq!(code(&out), 0, "{surface}: {}", stdout(&out));
    }
}

#[test]
fn verify_rejects_bad_geometry() {
    let out = run(&["verify", "--surface", "torus", "--R", "1", "--r", "2"]);
    assert_eq!(code(&out), 2);
    assert!(out.stdout.is_empty());
}

#[test]
fn verify_csv_and_overrides() {
    let out = run(&[
        "verify", "--surface", "torus", "--grid", "10", "--format", "csv", "--tol-rt", "0",
    ]);
    let text = stdout(&out);
    assert!(text.starts_with("suite,check,cases,max_error,tolerance,pass\n"));
    assert!(text.contains("torus,torus.right_inverse,"));
    // An impossible round-trip tolerance fails a check, which exits 1.
    assert_eq!(code(&out), 1, "{text}");

    let out = run(&["verify", "--surface", "mobius", "--grid", "5", "--tol-eq", "2e-9"]);
    assert!(stdout(&out).contains("tol-eq=2e-9"));
    assert_eq!(code(&run(&["verify", "--surface", "mobius", "--tol-eq", "-1"])), 2);
    assert_eq!(code(&run(&["verify", "--surface", "mobius", "--grid", "2"])), 2);
    assert_eq!(code(&run(&["verify", "--surface", "klein"])), 2);
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--surface", "projective", "--samples", "80", "--seed", "7"];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
}

#[test]
fn invert_examples() {
    let out = run(&["invert", "--surface", "mobius", "--point", " -1,0,0.5"]);
    assert_eq!((code(&out), stdout(&out).as_str()), (0, "(1, 1)\n"));

    let out = run(&["invert", "--surface", "torus", "--R", "3", "--r", "1", "--point", "4,0,0"]);
    assert_eq!((code(&out), stdout(&out).as_str()), (0, "(0, 0)\n"));

    let out = run(&["invert", "--surface", "projective", "--point", "0,0,0,0"]);
    assert_eq!((code(&out), stdout(&out).as_str()), (0, "(1, 0, 0)\n"));
}

#[test]
fn invert_failures() {
    let out = run(&["invert", "--surface", "torus", "--point", "0,0,0"]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("not on surface"));

    assert_eq!(code(&run(&["invert", "--surface", "mobius", "--point", "1,0"])), 2);
    assert_eq!(code(&run(&["invert", "--surface", "projective", "--point", "1,0,0"])), 2);
    assert_eq!(code(&run(&["invert", "--surface", "mobius", "--point", "a,b,c"])), 2);
    assert_eq!(code(&run(&["invert", "--surface", "rp2", "--point", "1,0,0"])), 2);
}

#[test]
fn seam_examples() {
    let out = run(&["seam", "--surface", "mobius", "--decades", "2,3,4"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 4, "{text}");
    assert_eq!(text.lines().next(), Some("param,y,gap,ratio"));

    assert_eq!(code(&run(&["seam", "--surface", "projective"])), 2);

    let out = run(&["seam", "--surface", "torus", "--decades", "2,3", "--R", "3", "--r", "1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 3);

    assert_eq!(code(&run(&["seam", "--surface", "mobius", "--decades", "3,2"])), 2);
    assert_eq!(code(&run(&["seam", "--surface", "mobius", "--decades", "x"])), 2);
}

#[test]
fn export_files() {
    let dir = tempfile::tempdir().unwrap();
    let obj = dir.path().join("torus.obj");
    let out = run(&["export", "--surface", "torus", "--grid", "64", "--out", obj.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = std::fs::read_to_string(&obj).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 64 * 64);
    assert_eq!(text.lines().filter(|l| l.starts_with("f ")).count(), 2 * 64 * 64);

    let csv = dir.path().join("p.csv");
    let out = run(&[
        "export", "--surface", "projective", "--samples", "1000", "--out", csv.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().count(), 1001);
    assert_eq!(text.lines().nth(1), Some("0,0,0,0"));
}

#[test]
fn export_to_stdout_and_errors() {
    let out = run(&["export", "--surface", "mobius", "--grid", "4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().filter(|l| l.starts_with("v ")).count(), 20);

    let out = run(&["export", "--surface", "projective", "--samples", "1"]);
    assert_eq!(stdout(&out), "u,v,w,t\n0,0,0,0\n");

    assert_eq!(code(&run(&["export", "--surface", "projective", "--format", "obj"])), 2);
    assert_eq!(code(&run(&["export", "--surface", "torus", "--format", "csv4d"])), 2);
    assert_eq!(code(&run(&["export", "--surface", "torus", "--grid", "2"])), 2);
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("no/such/dir/x.obj");
    let out = run(&["export", "--surface", "torus", "--out", missing.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
}
