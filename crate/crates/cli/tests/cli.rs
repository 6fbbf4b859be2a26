use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use btchow_cli::{execute, parse_problem, parse_problem_str, ReportFile, Settings, Task};

fn example(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("examples").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_btchow")).args(args).output().unwrap()
}

fn write_temp(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("btchow-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

const ALL_EXAMPLES: [&str; 6] =
    ["q8.json", "signed_s4.json", "signed_s5.json", "norm_one_s3.json", "split_rank1.json", "quadratic_strata.json"];

#[test]
fn every_bundled_example_parses() {
    for name in ALL_EXAMPLES {
        parse_problem(&example(name)).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn quaternion_report_shows_the_order_two_witness() {
    let out = run(&["--input", example("q8.json").to_str().unwrap(), "--tasks", "all", "--format", "structured"]);
    assert_eq!(exit_code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let report = ReportFile::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    let d3 = report.degrees.iter().find(|d| d.degree == 3).unwrap();
    assert_eq!(d3.kernel.as_ref().unwrap().text, "Z/2");
    assert_eq!(d3.witnesses.len(), 1);
    let w = &d3.witnesses[0];
    assert_eq!(w.order, 2.into());
    assert_eq!(w.terms.len(), 8);
    assert!(w.text.contains("x*y*z") && w.text.contains("x'*y'*z'"));
}

#[test]
fn signed_s4_degree_two_cokernel_is_z2() {
    let out = run(&["--input", example("signed_s4.json").to_str().unwrap(), "--degrees", "2", "--format", "structured"]);
    assert_eq!(exit_code(&out), 0);
    let report = ReportFile::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(report.degrees.len(), 1);
    assert_eq!(report.degrees[0].cokernel.as_ref().unwrap().text, "Z/2");
}

#[test]
fn norm_one_torus_has_trivial_kernels_and_cokernels() {
    let file = parse_problem(&example("norm_one_s3.json")).unwrap();
    let mut settings = Settings::from_file(&file);
    settings.degrees = "1..3".parse().unwrap();
    let report = execute(&file, &settings).unwrap();
    for d in &report.degrees {
        assert_eq!(d.kernel.as_ref().unwrap().text, "0");
        assert_eq!(d.cokernel.as_ref().unwrap().text, "0");
    }
}

#[test]
fn structured_report_round_trips() {
    for name in ALL_EXAMPLES {
        let file = parse_problem(&example(name)).unwrap();
        let mut settings = Settings::from_file(&file);
        settings.tasks = Task::ALL.to_vec();
        settings.oracle = true;
        let report = execute(&file, &settings).unwrap();
        let back = ReportFile::from_json(&report.to_json()).unwrap();
        assert_eq!(back, report, "{name}");
    }
}

#[test]
fn reports_are_deterministic_up_to_timing() {
    let file = parse_problem(&example("q8.json")).unwrap();
    let mut settings = Settings::from_file(&file);
    settings.tasks = Task::ALL.to_vec();
    let a = execute(&file, &settings).unwrap().without_timing();
    let b = execute(&file, &settings).unwrap().without_timing();
    assert_eq!(a.to_json(), b.to_json());
    let degrees: Vec<usize> = a.degrees.iter().map(|d| d.degree).collect();
    assert_eq!(degrees, [1, 2, 3]);
}

#[test]
fn output_file_matches_standard_output() {
    let target = std::env::temp_dir().join(format!("btchow-out-{}.json", std::process::id()));
    let input = example("norm_one_s3.json");
    let out = run(&["--input", input.to_str().unwrap(), "--format", "structured", "--output", target.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let written = ReportFile::from_json(&std::fs::read_to_string(&target).unwrap()).unwrap();
    let printed = run(&["--input", input.to_str().unwrap(), "--format", "structured"]);
    let printed = ReportFile::from_json(&String::from_utf8(printed.stdout).unwrap()).unwrap();
    assert_eq!(written.without_timing(), printed.without_timing());
    std::fs::remove_file(target).ok();
}

#[test]
fn malformed_json_exits_with_parse_code_and_position() {
    let path = write_temp("bad.json", "{\n  \"group\": {\"degree\": 2,\n  }\n}");
    let out = run(&["--input", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("parse") && err.contains("line 3"), "{err}");
}

#[test]
fn missing_input_is_a_parse_error() {
    let out = run(&["--input", "/nonexistent/problem.json"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn unknown_keys_are_rejected_with_their_path() {
    let err = parse_problem_str(r#"{"group": {"degree": 1, "generatorz": []}}"#).unwrap_err();
    let msg = err.to_string();
    assert!(msg.contains("generatorz") && msg.contains("group"), "{msg}");
}

#[test]
fn minimal_split_torus_is_valid() {
    let file = parse_problem_str(r#"{"group": {"degree": 1}}"#).unwrap();
    let report = execute(&file, &Settings::from_file(&file)).unwrap();
    assert_eq!(report.group_order, 1);
    assert!(report.degrees.iter().all(|d| d.chow_group.as_ref().unwrap().text == "Z"));
}

#[test]
fn wrong_sign_length_names_the_generator() {
    let text = r#"{"group": {"degree": 2, "generators": [{"perm": [2, 1]}, {"perm": [1, 2], "signs": [1]}]}}"#;
    let msg = parse_problem_str(text).unwrap_err().to_string();
    assert!(msg.contains("generator 2") && msg.contains("sign"), "{msg}");
}

#[test]
fn non_bijection_is_a_parse_error() {
    let text = r#"{"group": {"degree": 3, "generators": [{"perm": [1, 1, 2]}]}}"#;
    let path = write_temp("nonbij.json", text);
    assert_eq!(exit_code(&run(&["--input", path.to_str().unwrap()])), 2);
}

#[test]
fn torsion_quotient_exits_with_validation_code() {
    let text = r#"{"group": {"degree": 2, "generators": [{"perm": [2, 1]}]}, "phat_embedding": [[2], [2]]}"#;
    let path = write_temp("torsion.json", text);
    let out = run(&["--input", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("validation"));
}

#[test]
fn unstable_embedding_exits_with_validation_code() {
    let text = r#"{"group": {"degree": 2, "generators": [{"perm": [2, 1]}]}, "phat_embedding": [[1], [0]]}"#;
    let path = write_temp("unstable.json", text);
    assert_eq!(exit_code(&run(&["--input", path.to_str().unwrap()])), 3);
}

#[test]
fn group_bound_exits_with_resource_code() {
    let input = example("signed_s5.json");
    let out = run(&["--input", input.to_str().unwrap(), "--max-group-order", "60"]);
    assert_eq!(exit_code(&out), 4);
    assert!(String::from_utf8_lossy(&out.stderr).contains("resource-bound"));
}

#[test]
fn degree_cap_exits_with_resource_code() {
    let input = example("norm_one_s3.json");
    assert_eq!(exit_code(&run(&["--input", input.to_str().unwrap(), "--degrees", "1..3", "--max-degree", "2"])), 4);
}

#[test]
fn invariant_failures_exit_with_their_own_code() {
    let e: btchow_cli::CliError = btchow::Error::InvariantViolation("kernel has free rank 1".into()).into();
    assert_eq!(e.exit_code(), 5);
    let e: btchow_cli::CliError =
        btchow::Error::CrossCheckMismatch { degree: 2, cokernel: "Z/2".into(), h1: "0".into() }.into();
    assert_eq!(e.exit_code(), 5);
    assert_eq!(e.category(), "invariant");
}

#[test]
fn strata_task_works_without_an_embedding() {
    let out = run(&["--input", example("quadratic_strata.json").to_str().unwrap(), "--tasks", "strata", "--format", "structured"]);
    assert_eq!(exit_code(&out), 0);
    let report = ReportFile::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    let counts: Vec<usize> = report.strata.iter().map(|s| s.strata.len()).collect();
    assert_eq!(counts, [1, 1, 1]);
    assert!(report.degrees.is_empty());
}

#[test]
fn strata_on_signed_groups_is_a_validation_error() {
    let out = run(&["--input", example("signed_s4.json").to_str().unwrap(), "--tasks", "strata"]);
    assert_eq!(exit_code(&out), 0, "signed S_4 acts by plain permutations on 2n points");
    let text = r#"{"group": {"degree": 1, "generators": [{"perm": [1], "signs": [-1]}]}, "tasks": ["strata"]}"#;
    let path = write_temp("signed_strata.json", text);
    assert_eq!(exit_code(&run(&["--input", path.to_str().unwrap()])), 3);
}

#[test]
fn table_format_lists_every_degree() {
    let out = run(&["--input", example("signed_s4.json").to_str().unwrap()]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("2 ") && l.contains("Z/2")), "{text}");
}
