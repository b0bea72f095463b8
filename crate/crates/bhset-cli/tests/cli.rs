//! End-to-end tests of the `bhset` binary: output bytes, exit codes,
//! and determinism across the fast and brute-force paths.

use std::process::{Command, Output};

fn bhset(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bhset"))
        .args(args)
        .output()
        .expect("binary must spawn")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal exits")
}

#[test]
fn greedy_text_output() {
    let out = bhset(&["greedy", "--h", "2", "--count", "4"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "0 1 3 7 12\n");
}

#[test]
fn greedy_order_one_is_consecutive() {
    let out = bhset(&["greedy", "--h", "1", "--count", "3"]);
    assert_eq!(stdout(&out), "0 1 2 3\n");
}

#[test]
fn greedy_json_output() {
    let out = bhset(&["greedy", "--h", "2", "--count", "4", "--format", "json"]);
    assert_eq!(
        stdout(&out),
        "{\"h\":2,\"elements\":[\"0\",\"1\",\"3\",\"7\",\"12\"]}\n"
    );
}

#[test]
fn greedy_csv_output() {
    let out = bhset(&["greedy", "--h", "2", "--count", "2", "--format", "csv"]);
    assert_eq!(stdout(&out), "k,a\n0,0\n1,1\n2,3\n");
}

#[test]
fn greedy_zero_count_prints_the_origin() {
    let out = bhset(&["greedy", "--h", "3", "--count", "0"]);
    assert_eq!(stdout(&out), "0\n");
}

#[test]
fn oracle_flag_is_byte_identical() {
    for args in [
        vec!["greedy", "--h", "3", "--count", "4"],
        vec!["greedy", "--h", "2", "--count", "5", "--format", "json"],
        vec!["greedy", "--h", "4", "--count", "3", "--format", "csv"],
        vec!["check", "--h", "3", "--set", "0,1,3,7"],
        vec!["check", "--h", "2", "--set", "0,1,3,7", "--format", "json"],
        vec![
            "check",
            "--h",
            "3",
            "--set",
            "0,1,3,9,27",
            "--format",
            "csv",
        ],
    ] {
        let fast = bhset(&args);
        let mut oracle_args = args.clone();
        oracle_args.push("--oracle");
        let slow = bhset(&oracle_args);
        assert_eq!(stdout(&fast), stdout(&slow), "paths diverged on {args:?}");
        assert_eq!(exit_code(&fast), exit_code(&slow));
    }
}

#[test]
fn check_certified_exits_zero() {
    let out = bhset(&["check", "--h", "2", "--set", "0,1,3,7"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "certified\n");
}

#[test]
fn check_singleton_is_certified() {
    let out = bhset(&["check", "--h", "2", "--set", "0"]);
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn check_refuted_prints_witness_and_exits_one() {
    let out = bhset(&["check", "--h", "3", "--set", "0,1,3,7"]);
    assert_eq!(exit_code(&out), 1);
    assert_eq!(stdout(&out), "3 = 0+0+3 = 1+1+1\n");
}

#[test]
fn check_json_round_trips_byte_identically() {
    for args in [
        ["check", "--h", "2", "--set", "0,1,3,7", "--format", "json"],
        ["check", "--h", "3", "--set", "0,1,3,7", "--format", "json"],
    ] {
        let rendered = stdout(&bhset(&args));
        let parsed: serde_json::Value = serde_json::from_str(rendered.trim_end()).unwrap();
        assert_eq!(format!("{parsed}\n"), rendered);
    }
}

#[test]
fn repfn_lists_count_then_representations() {
    let out = bhset(&["repfn", "--h", "3", "--set", "0,1,3,7", "--n", "9"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "2\n1+1+7\n3+3+3\n");
}

#[test]
fn repfn_reports_zero_for_unreachable_values() {
    let out = bhset(&["repfn", "--h", "2", "--set", "0,1", "--n", "99"]);
    assert_eq!(stdout(&out), "0\n");
}

#[test]
fn sumset_lists_the_twofold_sums() {
    let out = bhset(&["sumset", "--h", "2", "--set", "0,1,3,7"]);
    assert_eq!(stdout(&out), "0,1,2,3,4,6,7,8,10,14\n");
}

#[test]
fn table_rows_cover_the_requested_range() {
    let out = bhset(&["table", "--h-min", "1", "--h-max", "3", "--k", "3"]);
    assert_eq!(stdout(&out), "1 2 3\n1 3 7\n1 4 13\n");
}

#[test]
fn table_single_cell() {
    let out = bhset(&["table", "--h-min", "5", "--h-max", "5", "--k", "1"]);
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn table_fourth_term_even_case() {
    let out = bhset(&["table", "--h-min", "2", "--h-max", "2", "--k", "4"]);
    assert_eq!(stdout(&out), "1 3 7 12\n");
}

#[test]
fn table_csv_has_headered_rows() {
    let out = bhset(&[
        "table", "--h-min", "1", "--h-max", "2", "--k", "3", "--format", "csv",
    ]);
    assert_eq!(stdout(&out), "h,a1,a2,a3\n1,1,2,3\n2,1,3,7\n");
}

#[test]
fn table_json_is_row_ordered() {
    let out = bhset(&[
        "table", "--h-min", "1", "--h-max", "2", "--k", "2", "--format", "json",
    ]);
    assert_eq!(
        stdout(&out),
        "{\"rows\":[{\"h\":1,\"a\":[\"1\",\"2\"]},{\"h\":2,\"a\":[\"1\",\"3\"]}]}\n"
    );
}

#[test]
fn verify_passes_on_small_ranges() {
    let out = bhset(&["verify", "--h-max-a3", "1", "--h-max-a4", "1"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("all 7 claims pass"));
}

#[test]
fn verify_json_reports_every_claim() {
    let out = bhset(&[
        "verify",
        "--h-max-a3",
        "2",
        "--h-max-a4",
        "2",
        "--format",
        "json",
    ]);
    let parsed: serde_json::Value = serde_json::from_str(stdout(&out).trim_end()).unwrap();
    assert_eq!(parsed["pass"], serde_json::Value::Bool(true));
    let ids: Vec<&str> = parsed["claims"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    assert_eq!(
        ids,
        vec![
            "a1_formula",
            "a2_formula",
            "a3_formula",
            "a4_quasipolynomial",
            "extension_bound",
            "geometric_bound",
            "repunit_family",
        ]
    );
}

#[test]
fn verify_fault_injection_exits_one() {
    let out = bhset(&[
        "verify",
        "--h-max-a3",
        "1",
        "--h-max-a4",
        "1",
        "--inject-fault",
    ]);
    assert_eq!(exit_code(&out), 1);
    assert!(stdout(&out).contains("FAIL injected_fault"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["greedy", "--h", "0", "--count", "3"],
        vec!["greedy", "--count", "3"],
        vec!["check", "--h", "2", "--set", "0,5,3"],
        vec!["check", "--h", "2", "--set", "0,x"],
        vec!["check", "--h", "2", "--set", "3,3"],
        vec!["table", "--h-min", "3", "--h-max", "1", "--k", "2"],
        vec!["repfn", "--h", "2", "--set", "0,1", "--n", "-4"],
        vec!["frobnicate"],
    ] {
        let out = bhset(&args);
        assert_eq!(exit_code(&out), 2, "wrong exit for {args:?}");
    }
}

#[test]
fn sum_overflow_exits_three_with_diagnostic() {
    let out = bhset(&[
        "check",
        "--h",
        "2",
        "--set",
        "0,340282366920938463463374607431768211455",
    ]);
    assert_eq!(exit_code(&out), 3);
    assert!(stderr(&out).contains("overflow"));
    assert!(stdout(&out).is_empty());
}

#[test]
fn oracle_enumeration_cap_exits_three() {
    let big_set = (0..130u128)
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",");
    let out = bhset(&["check", "--h", "4", "--set", &big_set, "--oracle"]);
    assert_eq!(exit_code(&out), 3);
    assert!(stderr(&out).contains("exceeds the cap"));
}

#[test]
fn output_is_deterministic_across_runs() {
    for args in [
        vec!["greedy", "--h", "4", "--count", "4", "--format", "json"],
        vec![
            "verify",
            "--h-max-a3",
            "3",
            "--h-max-a4",
            "3",
            "--format",
            "csv",
        ],
        vec![
            "table", "--h-min", "1", "--h-max", "4", "--k", "4", "--format", "csv",
        ],
    ] {
        let first = bhset(&args);
        let second = bhset(&args);
        assert_eq!(stdout(&first), stdout(&second));
    }
}
