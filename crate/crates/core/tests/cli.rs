//! End-to-end tests of the binary: argument handling, exit codes, formats
//! and the stdin/file plumbing.

use std::io::Write as _;
use std::process::{Command, Output, Stdio};

use polyquiver::geometry::{Angulation, AngulationDoc, PolygonParams};
use polyquiver::quiver::{ColouredQuiver, QuiverDoc};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_polyquiver"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("failed to run the binary")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is utf-8")
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is utf-8")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no exit code")
}

/// The three-vertex example quiver used throughout: colours up to 3,
/// arrows 0->1 (colour 0) and 1->2 (colour 2) with their opposites.
fn example_quiver() -> ColouredQuiver {
    let mut q = ColouredQuiver::new(3, 3);
    q.set_arrow_pair(0, 1, 0, 1);
    q.set_arrow_pair(1, 2, 2, 1);
    q
}

fn quiver_json(q: &ColouredQuiver) -> String {
    serde_json::to_string(&q.to_doc()).unwrap()
}

fn parse_quiver(text: &str) -> ColouredQuiver {
    let doc: QuiverDoc = serde_json::from_str(text.trim()).expect("quiver JSON");
    ColouredQuiver::from_doc(&doc).expect("valid quiver")
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(exit_code(&run(&["--help"])), 0);
    assert_eq!(exit_code(&run(&["--version"])), 0);
    assert_eq!(exit_code(&run(&["count", "--help"])), 0);
}

#[test]
fn unknown_arguments_exit_one() {
    assert_eq!(exit_code(&run(&["frobnicate"])), 1);
    assert_eq!(exit_code(&run(&["count", "-n", "2"])), 1); // -m missing
    assert_eq!(exit_code(&run(&["count", "-n", "two", "-m", "1"])), 1);
    assert_eq!(exit_code(&run(&["count", "-n", "5..2", "-m", "1"])), 1);
    assert_eq!(exit_code(&run(&["count", "-n", "0", "-m", "1"])), 1);
}

#[test]
fn count_formats() {
    let csv = run(&["count", "-n", "2", "-m", "1", "--format", "csv"]);
    assert_eq!(exit_code(&csv), 0);
    assert_eq!(stdout_of(&csv), "2,1,1\n");

    let text = run(&["count", "-n", "4", "-m", "2"]);
    assert_eq!(exit_code(&text), 0);
    assert_eq!(stdout_of(&text), "n=4 m=2: 25\n");

    let json = run(&["count", "-n", "3", "-m", "1", "--format", "json"]);
    assert_eq!(exit_code(&json), 0);
    let value: serde_json::Value = serde_json::from_str(stdout_of(&json).trim()).unwrap();
    assert_eq!(value["n"], 3);
    assert_eq!(value["m"], 1);
    assert_eq!(value["count"], "4");
}

#[test]
fn count_ranges_expand_row_major() {
    let output = run(&["count", "-n", "2..3", "-m", "1..2", "--format", "csv"]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout_of(&output), "2,1,1\n2,2,2\n3,1,4\n3,2,7\n");
}

#[test]
fn count_methods_agree_on_small_instances() {
    for method in ["formula", "geometry", "bfs"] {
        let output = run(&["count", "-n", "3", "-m", "2", "--method", method, "--format", "csv"]);
        assert_eq!(exit_code(&output), 0, "method {method}");
        assert_eq!(stdout_of(&output), "3,2,7\n", "method {method}");
    }
}

#[test]
fn count_methods_refuse_oversized_instances() {
    let bfs = run(&["count", "-n", "50", "-m", "4", "--method", "bfs"]);
    assert_eq!(exit_code(&bfs), 1);
    assert!(stderr_of(&bfs).contains("too large"));

    let geometry = run(&["count", "-n", "40", "-m", "8", "--method", "geometry"]);
    assert_eq!(exit_code(&geometry), 1);
    assert!(stderr_of(&geometry).contains("limit"));
}

#[test]
fn count_expectations_gate_the_exit_code() {
    assert_eq!(exit_code(&run(&["count", "-n", "2", "-m", "2", "--expect", "2"])), 0);
    let wrong = run(&["count", "-n", "2", "-m", "2", "--expect", "3"]);
    assert_eq!(exit_code(&wrong), 2);
    assert!(stderr_of(&wrong).contains("expectation failed"));
    // an expectation over a whole range is ambiguous
    assert_eq!(
        exit_code(&run(&["count", "-n", "2..3", "-m", "2", "--expect", "2"])),
        1
    );
}

#[test]
fn table_defaults_to_the_classic_grid() {
    let output = run(&["table", "--format", "csv"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout_of(&output);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 76);
    assert_eq!(lines[0], "2,1,1");
    assert_eq!(lines[75], "20,4,873654669882574580");
}

#[test]
fn tilting_count_prints_fuss_catalan_numbers() {
    let output = run(&["tilting-count", "-n", "2..3", "-m", "2", "--format", "csv"]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout_of(&output), "2,2,12\n3,2,55\n");
}

#[test]
fn enumerate_lists_angulations_and_classes() {
    let all = run(&["enumerate", "-n", "2", "-m", "2"]);
    assert_eq!(exit_code(&all), 0);
    let text = stdout_of(&all);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 12);
    let distinct: std::collections::BTreeSet<&str> = lines.iter().copied().collect();
    assert_eq!(distinct.len(), 12);

    let classes = run(&["enumerate", "-n", "2", "-m", "2", "--method", "classes"]);
    assert_eq!(exit_code(&classes), 0);
    assert_eq!(stdout_of(&classes).lines().count(), 2);

    let json = run(&["enumerate", "-n", "2", "-m", "1", "--format", "json"]);
    assert_eq!(exit_code(&json), 0);
    for line in stdout_of(&json).lines() {
        let doc: AngulationDoc = serde_json::from_str(line).unwrap();
        Angulation::from_doc(&doc).unwrap();
    }

    assert_eq!(exit_code(&run(&["enumerate", "-n", "2", "-m", "2", "--format", "csv"])), 1);
}

#[test]
fn mutate_applies_the_requested_vertices() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("quiver.json");
    std::fs::write(&input, quiver_json(&example_quiver())).unwrap();
    let input = input.to_str().unwrap();

    let once = run(&["mutate", "--input", input, "--at", "2"]);
    assert_eq!(exit_code(&once), 0);
    let mut expected = ColouredQuiver::new(3, 3);
    expected.set_arrow_pair(0, 1, 0, 1);
    expected.set_arrow_pair(1, 2, 1, 1);
    assert_eq!(parse_quiver(&stdout_of(&once)), expected);

    // m + 1 = 4 mutations at one vertex are the identity
    let cycle = run(&["mutate", "--input", input, "--at", "2,2,2,2"]);
    assert_eq!(exit_code(&cycle), 0);
    assert_eq!(parse_quiver(&stdout_of(&cycle)), example_quiver());

    let out_path = dir.path().join("result.json");
    let redirected = run(&[
        "mutate",
        "--input",
        input,
        "--at",
        "2",
        "--output",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&redirected), 0);
    assert_eq!(stdout_of(&redirected), "");
    assert_eq!(parse_quiver(&std::fs::read_to_string(&out_path).unwrap()), expected);
}

#[test]
fn mutate_reads_stdin_when_no_input_is_given() {
    let mut child = bin()
        .args(["mutate", "--at", "2"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(quiver_json(&example_quiver()).as_bytes())
        .unwrap();
    let output = child.wait_with_output().unwrap();
    assert_eq!(exit_code(&output), 0);
    let mut expected = ColouredQuiver::new(3, 3);
    expected.set_arrow_pair(0, 1, 0, 1);
    expected.set_arrow_pair(1, 2, 1, 1);
    assert_eq!(parse_quiver(&stdout_of(&output)), expected);
}

#[test]
fn mutate_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("quiver.json");
    std::fs::write(&input, quiver_json(&example_quiver())).unwrap();
    let input = input.to_str().unwrap();

    let out_of_range = run(&["mutate", "--input", input, "--at", "7"]);
    assert_eq!(exit_code(&out_of_range), 1);
    assert!(stderr_of(&out_of_range).contains("error:"));

    let garbled = dir.path().join("garbled.json");
    std::fs::write(&garbled, "{not json").unwrap();
    let bad = run(&["mutate", "--input", garbled.to_str().unwrap(), "--at", "0"]);
    assert_eq!(exit_code(&bad), 1);
    assert!(stderr_of(&bad).contains("bad quiver JSON"));

    assert_eq!(exit_code(&run(&["mutate", "--input", input])), 1); // --at missing
}

#[test]
fn quiver_of_accepts_diagonals_or_a_file() {
    let from_flags = run(&["quiver-of", "--diagonals", "1-4,4-7", "-n", "2", "-m", "2"]);
    assert_eq!(exit_code(&from_flags), 0);
    let mut expected = ColouredQuiver::new(2, 2);
    expected.set_arrow_pair(0, 1, 2, 1);
    assert_eq!(parse_quiver(&stdout_of(&from_flags)), expected);

    let params = PolygonParams::new(3, 2).unwrap();
    let angulation = Angulation::parse_compact(params, "1-4,4-7").unwrap();
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("angulation.json");
    std::fs::write(&input, serde_json::to_string(&angulation.to_doc()).unwrap()).unwrap();
    let from_file = run(&["quiver-of", "--input", input.to_str().unwrap()]);
    assert_eq!(exit_code(&from_file), 0);
    assert_eq!(parse_quiver(&stdout_of(&from_file)), expected);

    // the two sources are mutually exclusive, and flags need -n and -m
    assert_eq!(
        exit_code(&run(&[
            "quiver-of",
            "--diagonals",
            "1-4",
            "--input",
            input.to_str().unwrap(),
        ])),
        1
    );
    assert_eq!(exit_code(&run(&["quiver-of", "--diagonals", "1-4,4-7"])), 1);
    assert_eq!(
        exit_code(&run(&["quiver-of", "--diagonals", "1-5,4-7", "-n", "2", "-m", "2"])),
        1
    );
}

#[test]
fn relations_render_cell_triples() {
    let params = PolygonParams::new(4, 1).unwrap();
    let angulation = Angulation::parse_compact(params, "1-3,3-5,1-5").unwrap();
    let expected_text: Vec<String> = angulation
        .relations()
        .iter()
        .map(|t| format!("{} {} {}", t[0], t[1], t[2]))
        .collect();
    assert_eq!(expected_text.len(), 3);

    let output = run(&["relations", "--diagonals", "1-3,3-5,1-5", "-n", "3", "-m", "1"]);
    assert_eq!(exit_code(&output), 0);
    let lines: Vec<String> = stdout_of(&output).lines().map(str::to_string).collect();
    assert_eq!(lines, expected_text);

    let json = run(&[
        "relations",
        "--diagonals",
        "1-3,3-5,1-5",
        "-n",
        "3",
        "-m",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(exit_code(&json), 0);
    let parsed: Vec<Vec<[u32; 2]>> = stdout_of(&json)
        .lines()
        .map(|line| serde_json::from_str(line).unwrap())
        .collect();
    assert_eq!(parsed.len(), 3);

    // a fan has no such triples
    let fan = run(&["relations", "--diagonals", "1-3,1-4", "-n", "2", "-m", "1"]);
    assert_eq!(exit_code(&fan), 0);
    assert_eq!(stdout_of(&fan), "");
}

#[test]
fn verify_reports_and_gates_on_failures() {
    let ok = run(&["verify", "--max-n", "2", "--max-m", "2"]);
    assert_eq!(exit_code(&ok), 0);
    let text = stdout_of(&ok);
    assert!(text.contains("[PASS]"));
    assert!(!text.contains("[FAIL]"));
    assert!(text.contains("checks passed"));

    let corrupted = run(&[
        "verify",
        "--max-n",
        "2",
        "--max-m",
        "2",
        "--corrupt-colour-convention",
    ]);
    assert_eq!(exit_code(&corrupted), 2);
    assert!(stdout_of(&corrupted).contains("[FAIL]"));

    assert_eq!(exit_code(&run(&["verify", "--max-n", "99"])), 1);
}

#[test]
fn output_files_receive_exactly_the_stdout_payload() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("counts.csv");
    let output = run(&[
        "count",
        "-n",
        "2",
        "-m",
        "1",
        "--format",
        "csv",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout_of(&output), "");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "2,1,1\n");
}
