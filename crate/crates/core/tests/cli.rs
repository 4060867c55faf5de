use std::process::{Command, Output};

fn classzeta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_classzeta"))
        .args(args)
        .env_remove("CLASSZETA_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(classzeta(&["classnum", "--disc", "-163"]).status.code(), Some(0));
    assert_eq!(classzeta(&["classnum", "--disc", "-5"]).status.code(), Some(1));
    assert_eq!(classzeta(&["census", "--bound", "2"]).status.code(), Some(1));
    assert_eq!(classzeta(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(classzeta(&["--help"]).status.code(), Some(0));
    assert_eq!(classzeta(&["selftest", "--order", "20"]).status.code(), Some(0));
}

#[test]
fn census_output_is_independent_of_workers() {
    let one = classzeta(&["census", "--bound", "20000", "--workers", "1"]);
    let four = classzeta(&["census", "--bound", "20000", "--workers", "4"]);
    assert!(one.status.success());
    assert_eq!(stdout(&one), stdout(&four));
    let env = Command::new(env!("CARGO_BIN_EXE_classzeta"))
        .args(["census", "--bound", "20000"])
        .env("CLASSZETA_WORKERS", "3")
        .output()
        .unwrap();
    assert_eq!(stdout(&one), stdout(&env));
}

#[test]
fn report_findings_go_to_stderr() {
    let o = classzeta(&["report", "--watkins", "--hmax", "12"]);
    assert_eq!(o.status.code(), Some(0));
    let err = String::from_utf8_lossy(&o.stderr).into_owned();
    assert!(err.contains("finding: #p < 2p for p in [67, 73, 83, 97]"), "{err}");
    assert!(stdout(&o).starts_with("h,predicted,empirical,delta,dold_pred,dold_emp\n1,8,9,1,0,0\n"));
}

#[test]
fn verify_census_small_bound() {
    let o = classzeta(&["verify-census", "--bound", "1000", "--workers", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("h=1 expected=9 actual=9 match\n"));
    assert!(out.contains("h=3 expected=16 actual=16 match\n"));
    assert!(out.ends_with("bound=1000 match=3 mismatch=0 inconclusive=97\n"), "{out}");
}
