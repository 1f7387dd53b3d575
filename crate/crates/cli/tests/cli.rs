use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lcmlat"))
        .args(args)
        .env("NO_COLOR", "1")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(args: &[&str], stdin: Option<&str>) -> String {
    let out = run(args, stdin);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn fano_betti_table_layout() {
    let fano = stdout(&["make", "fano"], None);
    let table = stdout(&["ideal", "betti", "-"], Some(&fano));
    assert!(table.contains("3 | - 7  - -"), "{table}");
    assert!(table.contains("4 | - - 14 8"), "{table}");
    assert_eq!(stdout(&["ideal", "pd", "-"], Some(&fano)), "3\n");
    assert_eq!(stdout(&["lattice", "mobius", "-"], Some(&fano)).trim().trim_start_matches('-'), "8");
}

#[test]
fn every_make_output_feeds_every_ideal_and_lattice_consumer() {
    let makes: [&[&str]; 8] = [
        &["make", "subspace", "--q", "2", "--r", "2"],
        &["make", "mn", "--n", "3"],
        &["make", "fano"],
        &["make", "path", "--n", "4"],
        &["make", "cycle", "--n", "5"],
        &["make", "complete", "--n", "4"],
        &["make", "star", "--n", "4"],
        &["make", "fixture", "graphic-matroid"],
    ];
    let consumers: [&[&str]; 12] = [
        &["ideal", "lcm", "-"],
        &["ideal", "betti", "-"],
        &["ideal", "pd", "-"],
        &["ideal", "height", "-"],
        &["ideal", "cm", "-"],
        &["ideal", "taylor-minimal", "-"],
        &["ideal", "pure", "-"],
        &["ideal", "polarize", "-"],
        &["ideal", "minimal", "-"],
        &["lattice", "check", "-"],
        &["lattice", "phan", "-"],
        &["lattice", "mobius", "-"],
    ];
    for m in makes {
        let made = stdout(m, None);
        for c in consumers {
            stdout(c, Some(&made));
            let mut json = c.to_vec();
            json.push("--json");
            let out = stdout(&json, Some(&made));
            serde_json::from_str::<serde_json::Value>(&out).unwrap();
        }
    }
}

#[test]
fn phan_output_round_trips_through_text() {
    let fano = stdout(&["make", "fano"], None);
    let ideal = stdout(&["lattice", "phan", "-"], Some(&fano));
    assert_eq!(ideal.lines().count(), 7);
    assert_eq!(stdout(&["ideal", "minimal", "-"], Some(&ideal)), "true\n");
    let json = stdout(&["lattice", "phan", "-", "--json"], Some(&fano));
    assert_eq!(stdout(&["ideal", "cm", "-"], Some(&json)), "true (pd 3, height 3)\n");
}

#[test]
fn graph_props_exit_codes() {
    let out = run(&["graph", "props", "--fixture", "fig3"], None);
    assert_eq!(out.status.code(), Some(0));
    let c5 = stdout(&["make", "cycle", "--n", "5"], None);
    let out = run(&["graph", "props", "-"], Some(&c5));
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL  [lsm]"));
    let out = run(&["graph", "props", "--fixture", "fano"], None);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_and_input_errors_exit_one() {
    assert_eq!(run(&["frobnicate"], None).status.code(), Some(1));
    assert_eq!(run(&["verify", "no-such-id"], None).status.code(), Some(1));
    assert_eq!(run(&["ideal", "pd", "--char", "4", "-"], Some("x1")).status.code(), Some(1));
    let out = run(&["ideal", "pd", "-"], Some("x1*x2\nx1*y\n"));
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(run(&["--help"], None).status.code(), Some(0));
}

#[test]
fn verify_json_is_byte_identical_across_runs_and_worker_counts() {
    let args = ["verify", "pd-height-bound", "--seed", "11", "--json"];
    let a = stdout(&args, None);
    let b = stdout(&[&args[..], &["--jobs", "1"]].concat(), None);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["seed"], 11);
    assert_eq!(v["verdict"], "pass");
}

#[test]
fn verify_failure_exits_two_and_reproduces() {
    let out = run(&["verify", "lsm", "--max-n", "5", "--json"], None);
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let instance = v["counterexamples"][0]["instance"].to_string();
    let out = run(&["verify", "lsm", "--instance", "-"], Some(&instance));
    assert_eq!(out.status.code(), Some(2));
    let pass = stdout(&["verify", "lsm", "--instance", "-"], Some(r#"{"n":3,"edges":[[0,1],[1,2]]}"#));
    assert!(pass.starts_with("PASS lsm"));
}

#[test]
fn verify_text_lists_seed_and_respects_no_color() {
    let text = stdout(&["verify", "special-families"], None);
    assert!(text.starts_with("PASS special-families"));
    assert!(text.contains("seed 0"));
    assert!(!text.contains('\x1b'));
    let list = stdout(&["verify", "--list"], None);
    assert_eq!(list.lines().count(), lcm_lattice::verify::CATALOG.len());
}
