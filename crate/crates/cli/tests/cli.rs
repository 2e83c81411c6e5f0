use std::process::Command;

use serde_json::Value;

fn sf(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_surgeryforge"))
        .args(args)
        .env_remove("SURGERYFORGE_JOBS")
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = sf(args);
    assert_eq!(code, 0, "stderr: {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn report_envelope() {
    let v = json(&["simpleknot", "chi", "49", "19", "18"]);
    for key in ["command", "parameters", "results", "counterexamples", "elapsed_ms", "version"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["elapsed_ms"], 0);
    let r = &v["results"][0];
    assert_eq!(r["chi"], -33);
    assert_eq!(r["genus"], 17);
    assert_eq!(r["order"], 49);
}

#[test]
fn lens_homeo_oriented() {
    let v = json(&["lens", "homeo", "18", "5", "18", "11", "--oriented"]);
    assert_eq!(v["results"][0]["homeomorphic"], true);
    let v = json(&["lens", "homeo", "7", "2", "7", "3", "--oriented"]);
    assert_eq!(v["results"][0]["oriented"], false);
    assert_eq!(v["results"][0]["unoriented"], true);
}

#[test]
fn negative_and_rational_arguments() {
    let v = json(&["lens", "surgery", "-7/2"]);
    assert_eq!(v["results"][0]["lens"], "L(7,2)");
    let v = json(&["families", "eval", "X1", "2", "-3/2"]);
    assert_eq!(v["results"].as_array().unwrap().len(), 2);
    let v = json(&["families", "eval", "B", "7/3"]);
    let lenses: Vec<_> = v["results"].as_array().unwrap().iter().map(|r| r["lens"].clone()).collect();
    assert_eq!(lenses, ["L(12,5)", "L(17,6)", "L(29,11)"]);
}

#[test]
fn pentangle_sweep_is_clean() {
    let v = json(&["pentangle", "verify", "--bound", "2"]);
    assert_eq!(v["counterexamples"].as_array().unwrap().len(), 0);
    assert_eq!(v["results"][0]["tuples_checked"], 4096);
}

#[test]
fn output_independent_of_jobs() {
    let args = ["families", "verify", "intersections", "--bound", "4"];
    let one = sf(&[&args[..], &["--jobs", "1"]].concat());
    let two = sf(&[&args[..], &["--jobs", "2"]].concat());
    assert_eq!(one.0, 0);
    assert_eq!(one, two);
}

#[test]
fn census_gaps_exit_one() {
    let (code, out, _) = sf(&["families", "census", "--tmax", "2", "--seqmax", "4"]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    let cx = v["counterexamples"].as_array().unwrap();
    assert!(cx.iter().any(|c| c["extra"]["lens"] == "L(11,7)"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(sf(&["bogus"]).0, 2);
    assert_eq!(sf(&["lens", "normalize", "4"]).0, 2);
    let (code, out, err) = sf(&["lens", "normalize", "4", "2"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.starts_with("error:"));
    assert_eq!(sf(&["families", "eval", "A", "1"]).0, 2);
    assert_eq!(sf(&["--help"]).0, 0);
}

#[test]
fn alternate_formats() {
    let (_, out, _) = sf(&["families", "eval", "B", "7/3", "--format", "csv"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("lens,note,slot"));
    assert_eq!(lines.count(), 3);

    let (_, out, _) = sf(&["normseq", "dual", "(2,3,2,2)", "--format", "jsonl"]);
    let rows: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 2);
    assert!(rows[0].get("result").is_some());
    assert_eq!(rows[1]["results"], 1);

    let (_, out, _) = sf(&["lens", "mirror", "7", "2", "--format", "text"]);
    assert!(out.starts_with("command: lens mirror\n"));
    assert!(out.contains("mirror: L(7,5)"));
}

#[test]
fn timing_flag_fills_elapsed() {
    let (_, out, _) = sf(&["--timing", "pentangle", "verify", "--bound", "2"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v["elapsed_ms"].is_u64());
}

#[test]
fn in_process_run_matches_binary() {
    let argv = ["surgeryforge", "cf", "eval", "[3,2,2]"];
    let (code, out, _) = surgeryforge_cli::run(argv);
    assert_eq!(code, 0);
    assert_eq!(out, sf(&argv[1..]).1);
}
