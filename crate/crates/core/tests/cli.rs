//! End-to-end tests of the command surface, driven in-process through
//! `cli::run` so exit codes and output bytes can be asserted exactly.

use cubic_count::cli::run;

fn exec(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["cubic-count"];
    full.extend_from_slice(args);
    let code = run(full, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn exec_json(args: &[&str]) -> (i32, serde_json::Value) {
    let (code, out, _) = exec(args);
    (code, serde_json::from_str(&out).expect("json output"))
}

#[test]
fn count_default_mode_verifies_three_samples() {
    let (code, json) = exec_json(&["count", "--n", "4", "--degrees", "5", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(json["signature"], "765");
    assert_eq!(json["samples_checked"], 3);
    assert_eq!(json["n"], 4);
    assert_eq!(json["degrees"], serde_json::json!([5]));
}

#[test]
fn count_with_explicit_weights_and_trace() {
    let (code, json) = exec_json(&[
        "count",
        "--n",
        "4",
        "--degrees",
        "5",
        "--weights",
        "5,1",
        "--trace",
        "--json",
    ]);
    assert_eq!(code, 0);
    assert_eq!(json["signature"], "765");
    assert_eq!(json["samples_checked"], 1);
    // entries are stored ascending regardless of input order
    assert_eq!(json["weights_used"], serde_json::json!([1, 5]));
    assert_eq!(json["per_plane"][0]["value"], "765");
}

#[test]
fn count_with_rank_renders_quadratic_form() {
    let (code, json) = exec_json(&[
        "count",
        "--n",
        "4",
        "--degrees",
        "5",
        "--rank",
        "317206375",
        "--json",
    ]);
    assert_eq!(code, 0);
    assert_eq!(json["gw"]["hyperbolic_multiplicity"], "158602805");
    assert_eq!(
        json["gw"]["general_form"],
        "765 + 158602805·H + ε₁(⟨2⟩−1) + ε₂(⟨3⟩−1) + ε₃(⟨6⟩−1)"
    );
}

#[test]
fn count_refuses_even_degree() {
    let (code, _, err) = exec(&["count", "--n", "4", "--degrees", "4"]);
    assert_eq!(code, 2);
    assert!(err.contains("even degree"), "stderr: {err}");

    let (code, json) = exec_json(&["count", "--n", "4", "--degrees", "4", "--json"]);
    assert_eq!(code, 2);
    assert_eq!(json["error"]["code"], "vanishing-even-degree");
}

#[test]
fn count_vanishing_override_reports_zero() {
    let (code, json) = exec_json(&[
        "count",
        "--n",
        "4",
        "--degrees",
        "4",
        "--allow-vanishing",
        "--json",
    ]);
    assert_eq!(code, 0);
    assert_eq!(json["signature"], "0");
    assert_eq!(json["samples_checked"], 0);
}

#[test]
fn count_refuses_non_orientable_and_rank_mismatch() {
    let (code, json) = exec_json(&["count", "--n", "7", "--degrees", "9", "--json"]);
    assert_eq!(code, 2);
    assert_eq!(json["error"]["code"], "not-orientable");

    let (code, json) = exec_json(&["count", "--n", "4", "--degrees", "3", "--json"]);
    assert_eq!(code, 2);
    assert_eq!(json["error"]["code"], "rank-mismatch");
}

#[test]
fn count_rejects_bad_weights() {
    let (code, json) = exec_json(&[
        "count",
        "--n",
        "4",
        "--degrees",
        "5",
        "--weights",
        "3,9",
        "--json",
    ]);
    assert_eq!(code, 2);
    assert_eq!(json["error"]["code"], "invalid-weights");

    let (code, json) = exec_json(&[
        "count",
        "--n",
        "10",
        "--degrees",
        "13",
        "--weights",
        "1,5",
        "--json",
    ]);
    assert_eq!(code, 2);
    assert_eq!(json["error"]["code"], "weight-length");
}

#[test]
fn json_output_is_byte_stable() {
    let args = [
        "cubic-count",
        "count",
        "--n",
        "5",
        "--degrees",
        "3,3",
        "--seed",
        "9",
        "--json",
    ];
    let mut out1 = Vec::new();
    let mut out2 = Vec::new();
    let mut err = Vec::new();
    assert_eq!(run(args, &mut out1, &mut err), 0);
    assert_eq!(run(args, &mut out2, &mut err), 0);
    assert_eq!(out1, out2);
}

#[test]
fn usage_errors_exit_one() {
    let (code, _, err) = exec(&["count", "--degrees", "5"]);
    assert_eq!(code, 1);
    assert!(!err.is_empty());

    let (code, _, _) = exec(&["no-such-command"]);
    assert_eq!(code, 1);

    let (code, out, _) = exec(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("count"));
}

#[test]
fn enumerate_lists_nine_cases() {
    let (code, json) = exec_json(&["enumerate", "--max-n", "12", "--json"]);
    assert_eq!(code, 0);
    let listing = json.as_array().unwrap();
    assert_eq!(listing.len(), 9);
    assert!(listing.contains(&serde_json::json!({"n": 11, "degrees": [7, 7]})));

    let (code, out, _) = exec(&["enumerate", "--max-n", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("n=4 degrees=(5)"));
    assert!(out.contains("1 relatively orientable case(s)"));
}

#[test]
fn orient_reports_without_refusing() {
    let (code, json) = exec_json(&["orient", "--n", "7", "--degrees", "9", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(json["rank_ok"], true);
    assert_eq!(json["orientable"], false);

    let (code, out, _) = exec(&["orient", "--n", "4", "--degrees", "5"]);
    assert_eq!(code, 0);
    assert!(out.contains("relatively oriented: true"));
}

#[test]
fn gw_command_renders_forms() {
    let (code, json) = exec_json(&["gw", "--signature", "765", "--rank", "317206375", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(json["signature"], "765");
    assert_eq!(json["rank"], "317206375");
    assert_eq!(json["hyperbolic_multiplicity"], "158602805");

    let (code, out, _) = exec(&["gw", "--signature", "0", "--rank", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("squares-2-3: H"));

    let (code, json) = exec_json(&["gw", "--signature", "1", "--rank", "2", "--json"]);
    assert_eq!(code, 2);
    assert_eq!(json["error"]["code"], "parity-mismatch");
}

#[test]
fn table_recomputes_and_diffs() {
    let (code, out, _) = exec(&["table"]);
    assert_eq!(code, 0);
    assert_eq!(out.matches("[PASS]").count(), 9);
    assert!(out.contains("768328170191602020"));
}

#[test]
fn table_with_overridden_fixture_detects_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.json");
    std::fs::write(
        &path,
        r#"[{ "n": 4, "degrees": [5], "signature": "766", "rank": "317206375" }]"#,
    )
    .unwrap();
    let (code, out, _) = exec(&["table", "--table-path", path.to_str().unwrap()]);
    assert_eq!(code, 3);
    assert!(out.contains("[FAIL]"));
}

#[test]
fn verify_suites_pass() {
    let (code, out, _) = exec(&["verify", "--suite", "combinatorics"]);
    assert_eq!(code, 0);
    assert!(out.lines().all(|line| line.starts_with("[PASS]")));

    let (code, out, _) = exec(&["verify", "--suite", "oracle"]);
    assert_eq!(code, 0);
    assert_eq!(out.matches("[PASS]").count(), 3);
}

#[test]
fn bench_times_the_large_cases() {
    let (code, out, _) = exec(&["bench"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 3);
    assert!(out.contains("n=12 degrees=(5,5,5)"));
    assert!(out.contains("1833366298500"));
}
