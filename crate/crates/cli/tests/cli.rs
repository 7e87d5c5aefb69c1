use std::io::Write;
use std::process::{Command, Stdio};

use convspace_cli::{run, EXIT_COUNTEREXAMPLE, EXIT_INVALID_INPUT, EXIT_PASS, EXIT_USAGE};
use serde_json::{json, Value};

struct Output {
    code: u8,
    stdout: String,
    stderr: String,
}

fn cli(args: &[&str]) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("convspace").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn cli_json(args: &[&str]) -> (u8, Value) {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let o = cli(&all);
    (
        o.code,
        serde_json::from_str(&o.stdout).unwrap_or(Value::Null),
    )
}

#[test]
fn laws_pass_on_the_rational_line() {
    let o = cli(&[
        "laws",
        "--instance",
        "rat",
        "--seed",
        "42",
        "--cases",
        "500",
    ]);
    assert_eq!(o.code, EXIT_PASS, "{}", o.stdout);
    assert!(o.stdout.contains("all 32 checks hold"), "{}", o.stdout);
}

#[test]
fn broken_demo_prints_a_counterexample() {
    let o = cli(&["laws", "--instance", "broken-demo", "--cases", "50"]);
    assert_eq!(o.code, EXIT_COUNTEREXAMPLE);
    assert!(
        o.stdout.contains("FAIL skewed-commutativity"),
        "{}",
        o.stdout
    );
    assert!(o.stdout.contains("lhs = "));
}

#[test]
fn broken_convn_reports_division_by_zero() {
    let (code, v) = cli_json(&["laws", "--instance", "broken-convn", "--cases", "50"]);
    assert_eq!(code, EXIT_COUNTEREXAMPLE);
    let projection = v["laws"]
        .as_array()
        .unwrap()
        .iter()
        .find(|l| l["law"] == "projection")
        .unwrap();
    assert_eq!(projection["pass"], false);
    assert!(projection["counterexample"]["lhs"]
        .as_str()
        .unwrap()
        .contains("division by zero"));
}

#[test]
fn laws_json_has_one_entry_per_law() {
    let (code, v) = cli_json(&["laws", "--instance", "vec2", "--cases", "30"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(v["pass"], true);
    let names: Vec<&str> = v["laws"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| l["law"].as_str().unwrap())
        .collect();
    let mut unique = names.clone();
    unique.sort();
    unique.dedup();
    assert_eq!(unique.len(), names.len(), "duplicate law names: {names:?}");
    for law in [
        "unit",
        "quasi-associativity",
        "partition",
        "s1-convn",
        "hull-union-split",
    ] {
        assert!(names.contains(&law), "{law} missing from {names:?}");
    }
}

#[test]
fn laws_json_is_byte_identical_for_identical_flags() {
    let args = [
        "--format",
        "json",
        "laws",
        "--instance",
        "dompair",
        "--seed",
        "9",
        "--cases",
        "40",
    ];
    assert_eq!(cli(&args).stdout, cli(&args).stdout);
    let other = [
        "--format",
        "json",
        "laws",
        "--instance",
        "dompair",
        "--seed",
        "10",
        "--cases",
        "40",
    ];
    assert_ne!(cli(&args).stdout, cli(&other).stdout);
}

#[test]
fn every_instance_name_is_accepted() {
    for name in convspace::suite::Instance::NAMES {
        let o = cli(&["laws", "--instance", name, "--cases", "5"]);
        assert!(
            o.code == EXIT_PASS || name.starts_with("broken"),
            "{name}: {}",
            o.stdout
        );
    }
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(cli(&["laws", "--instance", "nope"]).code, EXIT_USAGE);
    assert_eq!(cli(&["laws"]).code, EXIT_USAGE);
    assert_eq!(cli(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(
        cli(&["laws", "--instance", "rat", "--cases", "many"]).code,
        EXIT_USAGE
    );
    assert_eq!(cli(&[]).code, EXIT_USAGE);
    let o = cli(&["convex-check", "--fn", "cosh"]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("unknown function"), "{}", o.stderr);
    assert_eq!(
        cli(&["convex-check", "--fn", "sin", "--interval", "0..1"]).code,
        EXIT_USAGE
    );
}

#[test]
fn help_exits_zero() {
    let o = cli(&["--help"]);
    assert_eq!(o.code, EXIT_PASS);
    assert!(o.stdout.contains("hull-split"));
}

#[test]
fn barycenter_of_three_vectors() {
    let input = r#"{"weights":["1/2","1/4","1/4"],"points":[{"coords":["0","0"]},{"coords":["1","0"]},{"coords":["0","1"]}]}"#;
    let (code, v) = cli_json(&["barycenter", "--input", input]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(v, json!({"point": {"coords": ["1/4", "1/4"]}}));
    let o = cli(&["barycenter", "--input", input]);
    assert_eq!(o.stdout, "(1/4, 1/4)\n");
}

#[test]
fn barycenter_point_mass_echoes_the_point() {
    let (code, v) = cli_json(&[
        "barycenter",
        "--input",
        r#"{"weights":["0","1","0"],"points":["3","-5/7","9"]}"#,
    ]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(v["point"], "-5/7");
    let dists =
        r#"{"weights":["1","0"],"points":[{"weights":["1/3","2/3"]},{"weights":["1","0"]}]}"#;
    let (_, v) = cli_json(&["barycenter", "--input", dists]);
    assert_eq!(v["point"], json!({"weights": ["1/3", "2/3"]}));
}

#[test]
fn barycenter_rejects_bad_input() {
    let o = cli(&[
        "barycenter",
        "--input",
        r#"{"weights":["1/2","1/4"],"points":["0","1"]}"#,
    ]);
    assert_eq!(o.code, EXIT_INVALID_INPUT);
    assert!(o.stderr.contains("3/4"), "{}", o.stderr);
    let arity = cli(&[
        "barycenter",
        "--input",
        r#"{"weights":["1/2","1/2"],"points":["0"]}"#,
    ]);
    assert_eq!(arity.code, EXIT_INVALID_INPUT);
    assert!(arity.stderr.contains("arity mismatch"), "{}", arity.stderr);
    let mixed = cli(&[
        "barycenter",
        "--input",
        r#"{"weights":["1/2","1/2"],"points":[["0"],["1","2"]]}"#,
    ]);
    assert_eq!(mixed.code, EXIT_INVALID_INPUT);
    assert_eq!(
        cli(&["barycenter", "--input", "{not json"]).code,
        EXIT_INVALID_INPUT
    );
    assert_eq!(
        cli(&["barycenter", "--input", "/nonexistent/input.json"]).code,
        EXIT_INVALID_INPUT
    );
    assert_eq!(
        cli(&[
            "barycenter",
            "--input",
            r#"{"weights":["1"],"points":[0.5]}"#
        ])
        .code,
        EXIT_INVALID_INPUT
    );
}

#[test]
fn barycenter_reads_files() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, r#"{{"weights":["1/3","2/3"],"points":["3","6"]}}"#).unwrap();
    let (code, v) = cli_json(&["barycenter", "--input", f.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(v["point"], "5");
}

#[test]
fn hull_split_two_points() {
    let (code, v) = cli_json(&[
        "hull-split",
        "--input",
        r#"{"weights":["1/2","1/2"],"generators":["0","1"]}"#,
        "--x",
        "0",
        "--default-x",
        r#""5""#,
        "--default-y",
        r#""7""#,
    ]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(v["p"], "1/2");
    assert_eq!(v["reconstruction"], true);
    assert_eq!(v["x"], json!({"weights": ["1"], "generators": ["0"]}));
    assert_eq!(v["y"], json!({"weights": ["1"], "generators": ["1"]}));
    assert_eq!(v["point"], "1/2");
}

#[test]
fn hull_split_all_x_uses_the_y_default() {
    let input = r#"{"weights":["1/4","3/4"],"generators":[["0","0"],["4","8"]],
        "x_indices":[0,1],"default_x":["1","1"],"default_y":["9","9"]}"#;
    let (code, v) = cli_json(&["hull-split", "--input", input]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(v["p"], "1");
    assert_eq!(
        v["y"],
        json!({"weights": ["1"], "generators": [{"coords": ["9", "9"]}]})
    );
    assert_eq!(v["point"], json!({"coords": ["3", "6"]}));
    assert_eq!(v["reconstruction"], true);
}

#[test]
fn hull_split_errors() {
    let defaults = ["--default-x", r#""0""#, "--default-y", r#""1""#];
    let run_with = |input: &str, x: &str| {
        let mut args = vec!["hull-split", "--input", input, "--x", x];
        args.extend_from_slice(&defaults);
        cli(&args)
    };
    let malformed = run_with(r#"{"weights":["1"]}"#, "0");
    assert_eq!(malformed.code, EXIT_INVALID_INPUT);
    assert!(
        malformed.stderr.contains("generators"),
        "{}",
        malformed.stderr
    );
    assert_eq!(
        run_with(r#"{"weights":["1"],"generators":["0","1"]}"#, "0").code,
        EXIT_INVALID_INPUT
    );
    assert_eq!(
        run_with(r#"{"weights":["1"],"generators":["0"]}"#, "4").code,
        EXIT_INVALID_INPUT
    );
    let no_defaults = cli(&[
        "hull-split",
        "--input",
        r#"{"weights":["1"],"generators":["0"]}"#,
        "--x",
        "0",
    ]);
    assert_eq!(no_defaults.code, EXIT_USAGE);
    let wrong_dim = cli(&[
        "hull-split",
        "--input",
        r#"{"weights":["1"],"generators":[["0","0"]]}"#,
        "--x",
        "0",
        "--default-x",
        r#"["0"]"#,
        "--default-y",
        r#"["0","0"]"#,
    ]);
    assert_eq!(wrong_dim.code, EXIT_INVALID_INPUT);
}

#[test]
fn divergence_values() {
    let (code, v) = cli_json(&[
        "divergence",
        "--p",
        r#"{"weights":["1","0"]}"#,
        "--q",
        r#"["1/2","1/2"]"#,
    ]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(v["dominated"], true);
    let d: f64 = v["divergence"].as_str().unwrap().parse().unwrap();
    assert!((d - 1.0).abs() < 1e-12);

    let (_, same) = cli_json(&[
        "divergence",
        "--p",
        r#"["1/3","2/3"]"#,
        "--q",
        r#"["1/3","2/3"]"#,
    ]);
    assert_eq!(
        same["divergence"].as_str().unwrap().parse::<f64>().unwrap(),
        0.0
    );

    let nats = cli(&[
        "divergence",
        "--p",
        r#"["1","0"]"#,
        "--q",
        r#"["1/2","1/2"]"#,
        "--base",
        "e",
    ]);
    assert!(
        nats.stdout.starts_with("D(P || Q) = 6.93147180559945"),
        "{}",
        nats.stdout
    );
}

#[test]
fn divergence_rejects_non_dominated_pairs() {
    let o = cli(&[
        "divergence",
        "--p",
        r#"["1/2","1/2"]"#,
        "--q",
        r#"["1","0"]"#,
    ]);
    assert_eq!(o.code, EXIT_INVALID_INPUT);
    assert!(o.stderr.contains("not dominated"), "{}", o.stderr);
    let (code, v) = cli_json(&[
        "divergence",
        "--p",
        r#"["1/2","1/2"]"#,
        "--q",
        r#"["1","0"]"#,
    ]);
    assert_eq!(code, EXIT_INVALID_INPUT);
    assert_eq!(v["dominated"], false);
    assert_eq!(v["divergence"], Value::Null);
    assert_eq!(
        cli(&["divergence", "--p", r#"["1"]"#, "--q", r#"["1/2","1/2"]"#]).code,
        EXIT_INVALID_INPUT
    );
}

#[test]
fn convex_check_examples() {
    let log = cli(&[
        "convex-check",
        "--fn",
        "log_ext",
        "--mode",
        "concave",
        "--interval",
        "1e-6:1e6",
    ]);
    assert_eq!(log.code, EXIT_PASS, "{}", log.stdout);
    assert!(log.stdout.contains("log spacing"));

    let square = cli(&["convex-check", "--fn", "square", "--mode", "concave"]);
    assert_eq!(square.code, EXIT_COUNTEREXAMPLE);
    assert!(
        square.stdout.contains("FAIL convex-in"),
        "{}",
        square.stdout
    );

    let sin = cli(&["convex-check", "--fn", "sin"]);
    assert_eq!(sin.code, EXIT_COUNTEREXAMPLE);

    let square_convex = cli(&["convex-check", "--fn", "square", "--interval", "-10:10"]);
    assert_eq!(square_convex.code, EXIT_PASS, "{}", square_convex.stdout);
}

#[test]
fn convex_check_json_and_preconditions() {
    let (code, v) = cli_json(&[
        "convex-check",
        "--fn",
        "exp",
        "--cases",
        "100",
        "--grid",
        "50",
    ]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(v["function"], "exp");
    assert_eq!(v["laws"].as_array().unwrap().len(), 2);
    assert_eq!(
        cli(&["convex-check", "--fn", "exp", "--interval", "3:1"]).code,
        EXIT_INVALID_INPUT
    );
    assert_eq!(
        cli(&["convex-check", "--fn", "exp", "--slack", "-1"]).code,
        EXIT_INVALID_INPUT
    );
    assert_eq!(
        cli(&["convex-check", "--fn", "exp", "--grid", "2"]).code,
        EXIT_INVALID_INPUT
    );
}

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_convspace"))
}

#[test]
fn binary_exit_codes() {
    let pass = binary()
        .args(["laws", "--instance", "rat", "--cases", "20"])
        .output()
        .unwrap();
    assert_eq!(pass.status.code(), Some(0));
    let fail = binary()
        .args(["laws", "--instance", "broken-demo", "--cases", "20"])
        .output()
        .unwrap();
    assert_eq!(fail.status.code(), Some(1));
    let usage = binary()
        .args(["laws", "--instance", "nope"])
        .output()
        .unwrap();
    assert_eq!(usage.status.code(), Some(64));
    let invalid = binary()
        .args([
            "divergence",
            "--p",
            r#"["1/2","1/2"]"#,
            "--q",
            r#"["1","0"]"#,
        ])
        .output()
        .unwrap();
    assert_eq!(invalid.status.code(), Some(2));
}

#[test]
fn seed_defaults_to_the_environment() {
    let report = |seed: Option<&str>, flag: Option<&str>| {
        let mut cmd = binary();
        cmd.args([
            "--format",
            "json",
            "laws",
            "--instance",
            "fdist2",
            "--cases",
            "10",
        ]);
        if let Some(f) = flag {
            cmd.args(["--seed", f]);
        }
        match seed {
            Some(s) => cmd.env("CONVSPACE_SEED", s),
            None => cmd.env_remove("CONVSPACE_SEED"),
        };
        let v: Value = serde_json::from_slice(&cmd.output().unwrap().stdout).unwrap();
        v["seed"].as_u64().unwrap()
    };
    assert_eq!(report(None, None), 42);
    assert_eq!(report(Some("7"), None), 7);
    assert_eq!(report(Some("7"), Some("8")), 8);
}

#[test]
fn binary_reads_stdin() {
    let mut child = binary()
        .args(["barycenter", "--input", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"weights":["1/2","1/2"],"points":["1","2"]}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "3/2\n");
}
