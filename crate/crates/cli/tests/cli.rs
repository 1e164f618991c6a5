use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn symlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symlab"))
        .args(args)
        .env_remove("SYMLAB_BUDGET")
        .output()
        .expect("binary runs")
}

fn symlab_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_symlab"))
        .args(args)
        .env_remove("SYMLAB_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

#[test]
fn friendship_distinguishing_number() {
    let o = symlab(&["compute", "--family", "friendship:15", "--invariant", "D"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["D", "6"]));
}

#[test]
fn path_report() {
    let o = symlab(&["compute", "--family", "path:5", "--invariant", "all", "--json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!((v["D"].as_u64(), v["rho"].as_u64(), v["det"].as_u64()), (Some(2), Some(1), Some(1)));
}

#[test]
fn single_vertex_from_graph6_and_stdin() {
    let o = symlab(&["compute", "--g6", "@", "--invariant", "all", "--json"]);
    let v = json(&o);
    assert_eq!((v["D"].as_u64(), v["rho"].as_u64(), v["det"].as_u64()), (Some(1), Some(1), Some(0)));
    let o = symlab_stdin(&["compute", "--g6", "-", "--json"], "Bg\n");
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(json(&o)["n"], 3);
}

#[test]
fn selected_invariants_leave_others_null() {
    let o = symlab(&["compute", "--family", "cycle:5", "--invariant", "det", "--json"]);
    let v = json(&o);
    assert_eq!(v["det"], 2);
    assert!(v["rho"].is_null() && v["class_sizes"].is_null());
}

#[test]
fn edge_list_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("star.txt");
    std::fs::write(&path, "4 3\n0 1\n0 2\n0 3\n").unwrap();
    let o = symlab(&["compute", "--edgelist", path.to_str().unwrap(), "--json"]);
    let v = json(&o);
    assert_eq!((v["D"].as_u64(), v["det"].as_u64()), (Some(3), Some(2)));
}

#[test]
fn witnesses_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let rp = report.to_str().unwrap();
    let o = symlab(&["compute", "--family", "friendship:4", "--json", "-o", rp]);
    assert!(o.status.success());
    let o = symlab(&["compute", "--family", "friendship:4", "--check-witness", rp]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o), "witness ok\n");

    // A report for another graph, and a tampered determining set.
    let o = symlab(&["compute", "--family", "friendship:5", "--check-witness", rp]);
    assert_eq!(o.status.code(), Some(1));
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    v["witness_det_set"] = serde_json::json!([1, 2, 3, 4]);
    std::fs::write(&report, v.to_string()).unwrap();
    let o = symlab(&["compute", "--family", "friendship:4", "--check-witness", rp]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("not determining"));
}

#[test]
fn witnesses_re_verify_over_a_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let rp = report.to_str().unwrap();
    let graphs: Vec<String> = symlab::corpus::connected_graphs(4)
        .chain(symlab::corpus::connected_graphs(3))
        .map(|g| symlab::graph::graph6::emit_graph6(&g))
        .collect();
    for g6 in &graphs {
        let o = symlab(&["compute", "--g6", g6, "--json", "-o", rp]);
        assert!(o.status.success());
        let o = symlab(&["compute", "--g6", g6, "--check-witness", rp]);
        assert!(o.status.success(), "{g6}: {}", stderr(&o));
    }
}

#[test]
fn budget_exhaustion_exits_3() {
    let o = symlab(&["compute", "--family", "friendship:8", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("budget"));
    let o = Command::new(env!("CARGO_BIN_EXE_symlab"))
        .args(["compute", "--family", "friendship:8"])
        .env("SYMLAB_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["compute", "--family", "path:3", "--g6", "Bg"][..],
        &["compute"],
        &["compute", "--family", "nonsense:3"],
        &["compute", "--g6", "B"],
        &["verify", "--suite", "Thm9.9"],
        &["verify", "--corpus", "bogus"],
        &["frobnicate"],
    ] {
        assert_eq!(symlab(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_friendship_determining_number() {
    let o = symlab(&["verify", "--suite", "Thm3.4", "--corpus", "friendship:2..6", "--json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v[0]["theorem"], "Thm3.4");
    assert_eq!(v[0]["status"], "verified");
    assert_eq!(v[0]["graphs_checked"], 5);
}

#[test]
fn verify_counterexample_is_replayable() {
    let o = symlab(&[
        "verify",
        "--suite",
        "Thm4.1",
        "--corpus",
        "corona-pairs:(path:3),(complete:2)",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    let cx = &v[0]["counterexample"];
    assert_eq!(v[0]["status"], "counterexample");
    let replay = cx["replay"].as_str().unwrap();
    let g6 = cx["graph6"].as_str().unwrap();
    assert_eq!(replay, format!("symlab compute --g6 '{g6}' --invariant all"));
    let o = symlab(&["compute", "--g6", g6, "--invariant", "all", "--json"]);
    assert_eq!(json(&o)["det"], cx["values"]["det"]);
}

#[test]
fn verify_output_is_independent_of_jobs() {
    let run = |jobs: &str| {
        let o = symlab(&[
            "verify", "--suite", "Prop2.2,Prop2.5,Rem3.2", "--corpus", "all-connected:<=4", "--json", "--jobs", jobs,
        ]);
        assert!(o.status.success(), "{}", stderr(&o));
        stdout(&o)
    };
    let one = run("1");
    assert_eq!(one, run("4"));
    let v: Value = serde_json::from_str(&one).unwrap();
    let ids: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["theorem"].as_str().unwrap()).collect();
    assert_eq!(ids, ["Prop2.2i", "Prop2.2ii", "Prop2.5", "Rem3.2"]);
    assert_eq!(v[3]["status"], "hypothesis-never-met");
}

#[test]
fn informative_failures_do_not_fail_the_run() {
    let o = symlab(&["verify", "--suite", "Boutin.Hypercube", "--corpus", "hypercube:4", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v[0]["informative"], true);
    assert_eq!(v[0]["status"], "counterexample");
}

#[test]
fn convert_round_trip_and_errors() {
    let o = symlab_stdin(&["convert", "--from", "edgelist", "--to", "graph6"], "3 2\n0 1\n1 2\n");
    assert_eq!(stdout(&o), "Bg\n");
    let o = symlab_stdin(&["convert", "--from", "graph6", "--to", "edgelist"], "Bg\n");
    assert_eq!(stdout(&o), "3 2\n0 1\n1 2\n");

    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad.txt");
    std::fs::write(&input, "3 2\n0 1\n1 x\n").unwrap();
    let o = symlab(&["convert", "--from", "edgelist", "--to", "graph6", input.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));

    let out = dir.path().join("c5.g6");
    std::fs::write(&input, "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    let o = symlab(&[
        "convert", "--from", "edgelist", "--to", "graph6", input.to_str().unwrap(), "-o", out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert_eq!(std::fs::read_to_string(&out).unwrap(), "Dhc\n");
}

#[test]
fn list_checks_names_every_id() {
    let o = symlab(&["list-checks"]);
    let text = stdout(&o);
    for c in symlab::verifier::checks() {
        assert!(text.contains(c.id), "{}", c.id);
    }
}
