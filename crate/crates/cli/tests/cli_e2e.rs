//! End-to-end runs of the installed binary: verify determinism of emitted
//! files, script execution and exit codes.

use std::process::Command;

fn homolog() -> Command {
    Command::new(env!("CARGO_BIN_EXE_homolog"))
}

#[test]
fn verify_emits_deterministic_reports() {
    let dir = tempfile::tempdir().unwrap();
    let r1 = dir.path().join("a.json");
    let r2 = dir.path().join("b.json");
    for path in [&r1, &r2] {
        let status = homolog()
            .args([
                "verify",
                "--check",
                "R01",
                "--check",
                "R72",
                "--seed",
                "7",
                "--n",
                "8",
                "--max-side",
                "60",
                "--report",
            ])
            .arg(path)
            .status()
            .unwrap();
        assert!(status.success());
    }
    let a = std::fs::read(&r1).unwrap();
    let b = std::fs::read(&r2).unwrap();
    assert_eq!(a, b, "reports must be byte-identical");
    let text = String::from_utf8(a).unwrap();
    assert!(text.contains("\"id\": \"R01\""));
    assert!(text.contains("\"verdict\": \"PASS\""));
}

#[test]
fn run_executes_scripts_and_renders_svg() {
    let dir = tempfile::tempdir().unwrap();
    let script = dir.path().join("demo.geo");
    std::fs::write(
        &script,
        "triangle T = (0,3) (0,0) (4,0)\n\
         circle c = incircle(T)\n\
         triangle K = derive(T, contact)\n\
         point I = incenter(T)\n\
         assert eq(I, (1,1))\n\
         assert homological(T, K)\n",
    )
    .unwrap();
    let svg1 = dir.path().join("out1.svg");
    let svg2 = dir.path().join("out2.svg");
    for svg in [&svg1, &svg2] {
        let out = homolog()
            .arg("run")
            .arg(&script)
            .arg("--svg")
            .arg(svg)
            .output()
            .unwrap();
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
        let stdout = String::from_utf8(out.stdout).unwrap();
        assert!(stdout.contains("PASS"));
    }
    let a = std::fs::read(&svg1).unwrap();
    assert_eq!(
        a,
        std::fs::read(&svg2).unwrap(),
        "SVG must be byte-identical"
    );
    // exactly one circle element rendered with a stroke (the incircle)
    let text = String::from_utf8(a).unwrap();
    assert_eq!(text.matches("stroke=\"darkorange\"").count(), 1);
}

#[test]
fn failing_assert_gives_nonzero_exit() {
    let dir = tempfile::tempdir().unwrap();
    let script = dir.path().join("bad.geo");
    std::fs::write(
        &script,
        "triangle T = (0,3) (0,0) (4,0)\nassert eq(incenter(T), (9,9))\n",
    )
    .unwrap();
    let status = homolog().arg("run").arg(&script).status().unwrap();
    assert!(!status.success());

    let parse_bad = dir.path().join("syntax.geo");
    std::fs::write(&parse_bad, "point X = meet(join((0,0)\n").unwrap();
    let out = homolog().arg("run").arg(&parse_bad).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line"));
}

#[test]
fn list_checks_prints_catalog() {
    let out = homolog().arg("list-checks").output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("R01"));
    assert!(text.contains("R93"));
}
