//! End-to-end tests of the command-line interface.

use std::io::Write;
use std::process::{Command, Output};

use foldenum::oracle::{oracle_count, oracle_enumerate};
use foldenum::{ClassDistribution, FoldConfiguration, FoldSizes};

fn foldenum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_foldenum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn sizes_uneven() {
    let out = foldenum(&["sizes", "--n", "301", "--k", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "100,100,101\n");
}

#[test]
fn sizes_even() {
    let out = foldenum(&["sizes", "--n", "90", "--k", "5"]);
    assert_eq!(stdout_of(&out), "18,18,18,18,18\n");
}

#[test]
fn sizes_rejects_more_folds_than_records() {
    let out = foldenum(&["sizes", "--n", "5", "--k", "6"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(
        stderr.contains("fold count exceeds records"),
        "stderr: {stderr}"
    );
}

#[test]
fn enumerate_forced_instance_jsonl() {
    let out = foldenum(&["enumerate", "--classes", "1,1", "--k", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "{\"folds\":[[0,1],[1,0]]}\n");
}

#[test]
fn enumerate_csv_stream_matches_count() {
    let out = foldenum(&[
        "enumerate",
        "--classes",
        "2,24,64",
        "--k",
        "5",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let stdout = stdout_of(&out);
    let mut lines = stdout.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with("f0_c0,f0_c1,f0_c2,f1_c0"));
    let data_lines = lines.count();

    let counted = foldenum(&["count", "--classes", "2,24,64", "--k", "5"]);
    assert_eq!(stdout_of(&counted).trim().parse::<usize>().unwrap(), data_lines);
    assert_eq!(data_lines, 3364);
}

#[test]
fn enumerate_limit_is_a_prefix_of_valid_configurations() {
    let out = foldenum(&[
        "enumerate",
        "--classes",
        "3,4,5",
        "--k",
        "3",
        "--limit",
        "10",
    ]);
    assert!(out.status.success());
    let stdout = stdout_of(&out);
    assert_eq!(stdout.lines().count(), 10);

    let n = FoldSizes::new(vec![4, 4, 4]).unwrap();
    let c = ClassDistribution::new(vec![3, 4, 5]).unwrap();
    let reference = oracle_enumerate(&n, &c).unwrap();
    for line in stdout.lines() {
        let parsed: serde_json::Value = serde_json::from_str(line).unwrap();
        let rows: Vec<Vec<u64>> = parsed["folds"]
            .as_array()
            .unwrap()
            .iter()
            .map(|row| {
                row.as_array()
                    .unwrap()
                    .iter()
                    .map(|v| v.as_u64().unwrap())
                    .collect()
            })
            .collect();
        let config = foldenum::standardize(&FoldConfiguration::from_rows(rows).unwrap());
        assert!(reference.contains(&config), "{line} not a valid configuration");
    }
}

#[test]
fn enumerate_is_byte_deterministic() {
    let args = ["enumerate", "--classes", "3,4,5", "--k", "3"];
    let first = foldenum(&args);
    let second = foldenum(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn enumerate_rejects_invalid_instances() {
    let out = foldenum(&["enumerate", "--classes", "1,1", "--k", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn count_single_class() {
    let out = foldenum(&["count", "--classes", "10", "--k", "2"]);
    assert_eq!(stdout_of(&out), "1\n");
}

#[test]
fn count_matches_oracle() {
    let out = foldenum(&["count", "--classes", "6,6", "--k", "3"]);
    let expected = oracle_count(
        &FoldSizes::new(vec![4, 4, 4]).unwrap(),
        &ClassDistribution::new(vec![6, 6]).unwrap(),
    )
    .unwrap();
    assert_eq!(stdout_of(&out).trim(), expected.to_string());
}

#[test]
fn count_warns_on_zero_count_classes() {
    let out = foldenum(&["count", "--classes", "0,4", "--k", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "1\n");
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("warning"), "stderr: {stderr}");
}

#[test]
fn sweep_table_shape() {
    let out = foldenum(&[
        "sweep", "--classes", "1,1", "--k-min", "2", "--k-max", "2",
    ]);
    assert!(out.status.success());
    let stdout = stdout_of(&out);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines[0], "k,sizes,count,elapsed_ms");
    assert!(lines[1].starts_with("2,1|1,1,"));
    assert_eq!(lines.len(), 2);
}

#[test]
fn sweep_counts_match_count_subcommand() {
    let out = foldenum(&[
        "sweep", "--classes", "3,4,5", "--k-min", "2", "--k-max", "4",
    ]);
    let stdout = stdout_of(&out);
    for line in stdout.lines().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        let (k, count) = (fields[0], fields[2]);
        let single = foldenum(&["count", "--classes", "3,4,5", "--k", k]);
        assert_eq!(stdout_of(&single).trim(), count, "k={k}");
    }
}

#[test]
fn labels_file_round_trips_against_classes() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    // multiplicities 2, 3, 1 in first-appearance order
    write!(file, "ant\nbee\nant\nbee\n\n  bee  \ncat\n").unwrap();
    let path = file.path().to_str().unwrap();

    let via_file = foldenum(&["count", "--labels-file", path, "--k", "2"]);
    let via_classes = foldenum(&["count", "--classes", "2,3,1", "--k", "2"]);
    assert!(via_file.status.success());
    assert_eq!(stdout_of(&via_file), stdout_of(&via_classes));
}

#[test]
fn missing_labels_file_is_an_io_error() {
    let out = foldenum(&["count", "--labels-file", "/nonexistent/labels.txt", "--k", "2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn classes_and_labels_file_are_mutually_exclusive() {
    let out = foldenum(&[
        "count", "--classes", "1,1", "--labels-file", "x.txt", "--k", "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
}
