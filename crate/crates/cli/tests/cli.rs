//! Invokes the built binary and checks output and exit statuses.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_smoothwords"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

fn status(args: &[&str]) -> i32 {
    run(args).status.code().expect("exited normally")
}

#[test]
fn count_examples() {
    assert_eq!(ok(&["count", "sw", "--n", "11", "--k", "3"]), "19601\n");
    assert_eq!(ok(&["count", "sn", "--n", "0", "--k", "5"]), "1\n");
    assert_eq!(
        ok(&["count", "scw", "--n", "8", "--k", "6", "--method", "spectral"]),
        "4468\n"
    );
    assert_eq!(
        ok(&[
            "count",
            "sn",
            "--n",
            "9",
            "--k",
            "6",
            "--method",
            "bruteforce"
        ]),
        "1360\n"
    );
}

#[test]
fn count_prints_plain_decimals_beyond_64_bits() {
    let out = ok(&["count", "sw", "--n", "200", "--k", "9"]);
    let digits = out.trim_end();
    assert!(digits.len() > 20);
    assert!(digits.bytes().all(|b| b.is_ascii_digit()));
}

#[test]
fn count_jsonl_record() {
    let out = ok(&["count", "sw", "--n", "3", "--k", "4", "--format", "jsonl"]);
    assert_eq!(
        out,
        "{\"family\":\"sw\",\"n\":3,\"k\":4,\"method\":\"matrix\",\"count\":\"26\"}\n"
    );
}

#[test]
fn count_exit_statuses() {
    assert_eq!(
        status(&["count", "sw", "--n", "26", "--k", "3", "--method", "spectral"]),
        3
    );
    assert_eq!(
        status(&["count", "scw", "--n", "5", "--k", "11", "--method", "spectral"]),
        3
    );
    assert_eq!(
        status(&[
            "count",
            "sw",
            "--n",
            "40",
            "--k",
            "3",
            "--method",
            "bruteforce"
        ]),
        2
    );
    assert_eq!(status(&["count", "sw", "--n", "4", "--k", "0"]), 2);
    assert_eq!(status(&["count", "xyz", "--n", "4", "--k", "3"]), 2);
    assert_eq!(status(&["count", "sw", "--n", "-1", "--k", "3"]), 2);
    assert_eq!(status(&["count", "sw", "--k", "3"]), 2);
}

#[test]
fn spectral_failure_prints_nothing_on_stdout() {
    let out = run(&[
        "count", "sn", "--n", "30", "--k", "4", "--method", "spectral",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
}

#[test]
fn default_tables_match_golden_files() {
    assert_eq!(ok(&["table", "both"]), include_str!("golden/table_both.md"));
    assert_eq!(
        ok(&["table", "both", "3", "7", "11", "md"]),
        include_str!("golden/table_both.md")
    );
    assert_eq!(ok(&["table", "sn"]), include_str!("golden/table_sn.md"));
    assert_eq!(
        ok(&["table", "sn", "1", "7", "11", "md"]),
        include_str!("golden/table_sn.md")
    );
}

#[test]
fn table_flags_and_formats() {
    let csv = ok(&["table", "sw", "--format", "csv"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("k,0,1,2,3,4,5,6,7,8,9,10,11"));
    assert_eq!(
        lines.next(),
        Some("3,1,3,7,17,41,99,239,577,1393,3363,8119,19601")
    );

    let both = ok(&[
        "table", "both", "--k-min", "7", "--k-max", "7", "--format", "csv",
    ]);
    assert!(both.contains("sw,7,1,7,19,53,149,421,1193,3387,9627,27383,77923,221805"));

    let sn1 = ok(&["table", "sn", "1", "1", "11", "csv"]);
    assert_eq!(sn1.lines().nth(1), Some("1,1,1,1,1,1,1,1,1,1,1,1,1"));

    let jsonl = ok(&[
        "table", "scw", "--k-min", "3", "--k-max", "4", "--n-max", "2", "--format", "jsonl",
    ]);
    assert_eq!(jsonl.lines().count(), 6);

    let via_gf = ok(&["table", "both", "--method", "gf"]);
    assert_eq!(via_gf, include_str!("golden/table_both.md"));
}

#[test]
fn table_bad_ranges() {
    assert_eq!(status(&["table", "sw", "5", "3"]), 2);
    assert_eq!(status(&["table", "sn", "--k-min", "0"]), 2);
    assert_eq!(
        status(&["table", "sw", "--method", "spectral", "--n-max", "30"]),
        3
    );
    assert_eq!(status(&["table", "nope"]), 2);
}

#[test]
fn gf_output() {
    let out = ok(&["gf", "sw", "--k", "3"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with('(') && lines[0].contains(")/("));
    assert_eq!(lines[1], "1,3,7,17,41,99,239,577,1393,3363,8119,19601");

    let trivial = ok(&["gf", "scw", "--k", "1"]);
    assert_eq!(trivial.lines().nth(1), Some("1,1,1,1,1,1,1,1,1,1,1,1"));

    let four = ok(&["gf", "sw", "--k", "4"]);
    let coeffs: Vec<&str> = four.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(coeffs[3], "26");

    assert_eq!(status(&["gf", "sw", "--k", "0"]), 2);
    assert_eq!(status(&["gf", "sn", "--k", "3"]), 2);
}

#[test]
fn check_statuses() {
    let out = ok(&["check", "--n-max", "9", "--k-max", "5"]);
    assert!(out.starts_with("PASS"));
    ok(&["check", "--n-max", "0", "--k-max", "1"]);
    assert_eq!(status(&["check", "--n-max", "3", "--k-max", "0"]), 2);
}

#[test]
fn asymptotics_reports() {
    let p = ok(&["asymptotics", "proportion", "--k", "3"]);
    assert!(p.contains("limit: 0.828427"), "{p}");

    let scw = ok(&["asymptotics", "scw", "--k", "3", "--n", "11"]);
    assert!(scw.contains("exact: 16239"));
    let ratio: f64 = scw
        .lines()
        .find_map(|l| l.strip_prefix("ratio: "))
        .unwrap()
        .parse()
        .unwrap();
    assert!((ratio - 1.0).abs() < 1e-3);

    let big = ok(&["asymptotics", "proportion", "--k", "1000"]);
    let limit: f64 = big
        .lines()
        .find_map(|l| l.strip_prefix("limit: "))
        .unwrap()
        .parse()
        .unwrap();
    let target = 3.0 * std::f64::consts::PI.powi(2) / 8000.0;
    assert!((limit / target - 1.0).abs() < 0.01);

    assert_eq!(status(&["asymptotics", "sw", "--k", "3"]), 2);
    assert_eq!(status(&["asymptotics", "sw", "--k", "0", "--n", "3"]), 2);
}

#[test]
fn output_is_deterministic() {
    let args = ["table", "both", "--format", "jsonl"];
    assert_eq!(ok(&args), ok(&args));
}
