//! End-to-end tests of the binary's documented behaviors.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cutdom"))
}

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn cutdom");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn compute_gamma_ct_on_c7_edgelist() {
    let c7 = "7 7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n0 6\n";
    let out = run(&["compute", "--format", "edgelist", "--params", "gamma_ct"], c7);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("gamma_ct = 3"));
}

#[test]
fn compute_profile_on_c4_is_all_twos() {
    let c4 = "4 4\n0 1\n1 2\n2 3\n0 3\n";
    let out = run(&["compute", "--params", "profile", "--mode", "literal"], c4);
    assert!(out.status.success());
    let text = stdout_of(&out);
    for name in ["gamma_ct", "ir_ct", "i_ct", "beta_ct", "Gamma_ct", "IR_ct"] {
        assert!(text.contains(&format!("{name} = 2")), "missing {name} in {text}");
    }
}

#[test]
fn compute_lambda_on_k6() {
    let gen = run(&["gen", "--family", "complete", "--n", "6"], "");
    let out = run(&["compute", "--params", "lambda"], &stdout_of(&gen));
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("lambda = 5"));
}

#[test]
fn compute_json_is_complete_or_absent() {
    let out = run(
        &["compute", "--params", "gamma_ct,lambda", "--json", "--witness"],
        "2 1\n0 1\n",
    );
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(v["gamma_ct"]["value"], 1);
    assert_eq!(v["lambda"]["value"], 1);
    // error path: no JSON at all on stdout
    let bad = run(&["compute", "--params", "gamma_ct", "--json"], "garbage");
    assert_eq!(bad.status.code(), Some(2));
    assert!(stdout_of(&bad).is_empty());
}

#[test]
fn gen_figure2_edgelist_is_exact() {
    let out = run(&["gen", "--family", "figure2", "--format", "edgelist"], "");
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "5 6\n0 1\n0 2\n1 2\n1 3\n2 4\n3 4\n");
}

#[test]
fn gen_two_cliques_order_and_size() {
    let out = run(
        &["gen", "--family", "two_cliques", "--m", "4", "--n", "4", "--len", "2"],
        "",
    );
    assert!(out.status.success());
    assert!(stdout_of(&out).starts_with("9 14\n"));
}

#[test]
fn gen_rejects_bad_family_parameters() {
    let out = run(&["gen", "--family", "cycle", "--n", "2"], "");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gen_composes_with_compute() {
    let gen = run(&["gen", "--family", "wheel", "--n", "6", "--format", "graph6"], "");
    let out = run(
        &["compute", "--format", "graph6", "--params", "gamma_ct"],
        &stdout_of(&gen),
    );
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("gamma_ct = 4"));
}

#[test]
fn check_figure_claims_verify() {
    let out = run(&["check", "--claims", "C15", "--max-n", "2"], "");
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("C15"));
    assert!(text.contains("hard counterexamples: 0"));
}

#[test]
fn check_reads_graph6_stream_for_one_claim() {
    let c5 = cutdom_core::io::write_graph6(&cutdom_core::families::cycle(5).unwrap()).unwrap();
    let k5 = cutdom_core::io::write_graph6(&cutdom_core::families::complete(5).unwrap()).unwrap();
    let stream = format!("{c5}\n{k5}\n");
    let out = run(&["check", "--graph6", "-", "--claims", "C9", "--json"], &stream);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    for line in lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["claim"], "C9");
        assert_eq!(v["status"], "verified");
    }
}

#[test]
fn check_rejects_bad_stream_with_position() {
    let out = run(&["check", "--graph6", "-", "--claims", "C9"], "A_\n~zz\n");
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "stderr was: {err}");
}

#[test]
fn check_unknown_claim_is_a_usage_error() {
    let out = run(&["check", "--claims", "C99"], "");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn survey_counts_the_five_vertex_catalogue() {
    // all 21 connected graphs on 5 vertices, as graph6
    let mut stream = String::new();
    for g in cutdom_core::families::all_connected_graphs(5).unwrap() {
        stream.push_str(&cutdom_core::io::write_graph6(&g).unwrap());
        stream.push('\n');
    }
    let out = run(&["survey", "--graph6", "-"], &stream);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 22); // header + 21 rows
}

#[test]
fn survey_of_empty_stream_is_empty_and_ok() {
    let out = run(&["survey", "--graph6", "-"], "");
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).lines().count(), 1); // header only
}

#[test]
fn survey_k4_flags() {
    let k4 = run(&["gen", "--family", "complete", "--n", "4", "--format", "graph6"], "");
    let out = run(&["survey", "--graph6", "-", "--json"], &stdout_of(&k4));
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(v["gamma_prime"], 2);
    assert_eq!(v["gamma_ct"], 3);
    assert_eq!(v["lambda_eq_ct"], true);
    assert_eq!(v["gp_eq_ct"], false);
}

#[test]
fn survey_skips_bad_lines_and_continues() {
    let out = run(&["survey", "--graph6", "-"], "A_\nnot-a-graph\nBw\n");
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).lines().count(), 3); // header + 2 good rows
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn caps_produce_actionable_errors() {
    let gen = run(&["gen", "--family", "complete", "--n", "6"], "");
    let out = run(
        &["compute", "--params", "gamma_ct", "--gamma-ct-cap", "10"],
        &stdout_of(&gen),
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--gamma-ct-cap"));
}
