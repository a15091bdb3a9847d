//! End-to-end command behavior: output files, schemas, exit codes, and
//! determinism under fixed seeds.

mod common;

use common::{assert_valid, bin, run, run_ok};
use meyniel_core::graph::{from_edge_list, from_graph6, to_edge_list, Graph};
use serde_json::Value;

fn tmpdir() -> tempfile::TempDir {
    tempfile::tempdir().expect("tempdir")
}

#[test]
fn construct_gamma3_writes_valid_outputs() {
    let dir = tmpdir();
    let out = dir.path().to_str().unwrap();
    let stdout = run_ok(&["construct", "--family", "gamma3", "--p", "3", "--out", out]);
    assert!(stdout.contains("gamma3_p3.edges"));

    let meta: Value = serde_json::from_str(
        &std::fs::read_to_string(dir.path().join("gamma3_p3.meta.json")).unwrap(),
    )
    .unwrap();
    assert_valid("construct-meta.schema.json", &meta);
    assert_eq!(meta["s_size"], 6);
    assert_eq!(meta["n"], 45);

    let edges = std::fs::read(dir.path().join("gamma3_p3.edges")).unwrap();
    let graph = from_edge_list(&edges, None).unwrap();
    assert_eq!(graph.n(), 45);
    assert!((0..45).all(|v| graph.degree(v) == 6));
}

#[test]
fn construct_gamma1_reports_prime_and_size() {
    let dir = tmpdir();
    let out = dir.path().to_str().unwrap();
    run_ok(&["construct", "--family", "gamma1", "--n", "200", "--out", out]);
    let meta: Value = serde_json::from_str(
        &std::fs::read_to_string(dir.path().join("gamma1_n200_p5.meta.json")).unwrap(),
    )
    .unwrap();
    assert_valid("construct-meta.schema.json", &meta);
    assert_eq!(meta["params"]["p"], 5);
    assert_eq!(meta["s_size"], 8);
}

#[test]
fn construct_graph6_roundtrips() {
    let dir = tmpdir();
    let out = dir.path().to_str().unwrap();
    run_ok(&[
        "construct", "--family", "gamma2", "--p", "3", "--k", "2", "--out", out, "--format",
        "graph6",
    ]);
    let g6 = std::fs::read(dir.path().join("gamma2_k2_p3.g6")).unwrap();
    let graph = from_graph6(&g6).unwrap();
    let edges = std::fs::read(dir.path().join("gamma2_k2_p3.edges")).unwrap();
    assert_eq!(graph, from_edge_list(&edges, Some(9)).unwrap());
}

#[test]
fn check_reports_validate_and_match_claims() {
    let report: Value =
        serde_json::from_str(&run_ok(&["check", "--family", "gamma3", "--p", "5", "--t", "3"]))
            .unwrap();
    assert_valid("freeness-report.schema.json", &report);
    assert_eq!(report["triangle_free"]["free"], true);
    assert_eq!(report["k2t_free"]["3"]["free"], true);
    assert_eq!(report["nontrivial_4cycle_free"]["free"], true);

    let report: Value =
        serde_json::from_str(&run_ok(&["check", "--family", "gamma1", "--n", "200", "--t", "4"]))
            .unwrap();
    assert_valid("freeness-report.schema.json", &report);
    assert_eq!(report["triangle_free"]["free"], true);
    assert_eq!(report["k2t_free"]["4"]["free"], true);
}

#[test]
fn check_file_input_reports_k22_violation_with_witness() {
    let dir = tmpdir();
    let path = dir.path().join("c4.edges");
    std::fs::write(&path, to_edge_list(&Graph::cycle(4))).unwrap();
    let report: Value = serde_json::from_str(&run_ok(&[
        "check",
        "--input",
        path.to_str().unwrap(),
        "--t",
        "2",
    ]))
    .unwrap();
    assert_valid("freeness-report.schema.json", &report);
    assert_eq!(report["k2t_free"]["2"]["free"], false);
    let witness = &report["k2t_free"]["2"]["witness"];
    assert_eq!(witness["pair"], serde_json::json!([0, 2]));
    assert!(report["nontrivial_4cycle_free"].is_null());
}

#[test]
fn copnumber_gamma3_p3_is_exactly_four() {
    let cert: Value =
        serde_json::from_str(&run_ok(&["copnumber", "--family", "gamma3", "--p", "3"])).unwrap();
    assert_valid("certificate.schema.json", &cert);
    assert_eq!(cert["bounds"]["lower"]["value"], 4);
    assert_eq!(cert["bounds"]["lower"]["rule"], "lemma-2.2");
    assert_eq!(cert["bounds"]["upper"]["value"], 4);
    assert_eq!(cert["bounds"]["upper"]["rule"], "frankl");
    assert_eq!(cert["bounds"]["exact"], 4);
    assert_eq!(cert["theorem"]["satisfied"], true);
}

#[test]
fn copnumber_torus_sandwiches_solver_value() {
    let cert: Value = serde_json::from_str(&run_ok(&[
        "copnumber", "--family", "gamma2", "--p", "3", "--k", "2",
    ]))
    .unwrap();
    assert_valid("certificate.schema.json", &cert);
    let lower = cert["bounds"]["lower"]["value"].as_u64().unwrap();
    let upper = cert["bounds"]["upper"]["value"].as_u64().unwrap();
    let exact = cert["bounds"]["exact"].as_u64().unwrap();
    assert!(lower <= exact && exact <= upper);
    assert_eq!(exact, 2);
}

#[test]
fn copnumber_petersen_file_is_exactly_three() {
    let dir = tmpdir();
    let path = dir.path().join("petersen.edges");
    std::fs::write(&path, to_edge_list(&Graph::petersen())).unwrap();
    let cert: Value = serde_json::from_str(&run_ok(&[
        "copnumber",
        "--input",
        path.to_str().unwrap(),
    ]))
    .unwrap();
    assert_valid("certificate.schema.json", &cert);
    assert_eq!(cert["bounds"]["exact"], 3);
    assert_eq!(cert["graph"]["family"], "file");
    assert!(cert["theorem"].is_null());
}

#[test]
fn copnumber_budget_exhaustion_yields_bracket_and_exit_zero() {
    let cert: Value = serde_json::from_str(&run_ok(&[
        "copnumber", "--family", "gamma3", "--p", "5", "--max-states", "100000",
    ]))
    .unwrap();
    assert_valid("certificate.schema.json", &cert);
    assert_eq!(cert["bounds"]["lower"]["value"], 6);
    assert_eq!(cert["bounds"]["upper"]["value"], 6);
    assert!(cert["bounds"]["exact"].is_null());
    assert_eq!(cert["solver"]["inconclusive"], true);
}

#[test]
fn simulate_transcripts_validate_and_are_seed_deterministic() {
    let args = [
        "simulate", "--family", "gamma1", "--n", "200", "--cops", "2", "--cop-strategy",
        "random", "--robber-strategy", "evader", "--rounds", "200", "--seed", "11",
    ];
    let first = run_ok(&args);
    let second = run_ok(&args);
    assert_eq!(first, second, "same seed must give identical bytes");
    for line in first.lines() {
        let parsed: Value = serde_json::from_str(line).unwrap();
        assert_valid("transcript-line.schema.json", &parsed);
    }
    let last: Value = serde_json::from_str(first.lines().last().unwrap()).unwrap();
    assert_eq!(last["outcome"], "survived");

    let mut other_seed = args.to_vec();
    *other_seed.last_mut().unwrap() = "12";
    assert_ne!(first, run_ok(&other_seed));
}

#[test]
fn simulate_optimal_cops_capture_on_path() {
    let dir = tmpdir();
    let path = dir.path().join("p4.edges");
    std::fs::write(&path, to_edge_list(&Graph::path(4))).unwrap();
    let stdout = run_ok(&[
        "simulate",
        "--input",
        path.to_str().unwrap(),
        "--cops",
        "1",
        "--cop-strategy",
        "optimal",
        "--robber-strategy",
        "evader",
        "--rounds",
        "100",
    ]);
    let last: Value = serde_json::from_str(stdout.lines().last().unwrap()).unwrap();
    assert_eq!(last["outcome"], "captured");
}

#[test]
fn table_is_deterministic_and_satisfied() {
    let csv = run_ok(&["table"]);
    assert_eq!(csv, run_ok(&["table"]));
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "family,params,n,s_size,delta,lower,lower_rule,upper,upper_rule,exact,target,achieved,satisfied"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 14);
    assert!(rows.iter().all(|r| r.ends_with("true")));

    let json: Value = serde_json::from_str(&run_ok(&["table", "--format", "json"])).unwrap();
    assert_valid("table-row.schema.json", &json);
    assert_eq!(json.as_array().unwrap().len(), 14);

    let filtered = run_ok(&["table", "--family", "gamma3"]);
    assert_eq!(filtered.lines().count(), 5); // header + 4 rows
}

#[test]
fn thread_override_is_accepted() {
    let out = bin()
        .env("MEYNIEL_LAB_THREADS", "2")
        .args(["table", "--family", "gamma2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        run_ok(&["table", "--family", "gamma2"])
    );
}

#[test]
fn exit_codes_follow_the_contract() {
    // 2: precondition (odd extension degree)
    let out = run(&["construct", "--family", "gamma2", "--p", "3", "--k", "3"]);
    assert_eq!(out.status.code(), Some(2));
    // 2: usage (unknown subcommand, handled by the parser)
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    // 3: unreadable input
    let out = run(&["check", "--input", "/nonexistent/graph.edges"]);
    assert_eq!(out.status.code(), Some(3));
    // 0: inconclusive solver result is still success
    let out = run(&[
        "copnumber", "--family", "gamma3", "--p", "5", "--max-states", "1000",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn construct_outputs_are_rerun_identical() {
    let dir_a = tmpdir();
    let dir_b = tmpdir();
    for dir in [&dir_a, &dir_b] {
        run_ok(&[
            "construct", "--family", "greedy", "--n", "175", "--out",
            dir.path().to_str().unwrap(), "--format", "graph6",
        ]);
    }
    for name in ["greedy_n175.edges", "greedy_n175.g6", "greedy_n175.meta.json"] {
        let a = std::fs::read(dir_a.path().join(name)).unwrap();
        let b = std::fs::read(dir_b.path().join(name)).unwrap();
        assert_eq!(a, b, "{name} differs between runs");
    }
}
