use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nullstellensatz"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ok_json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn code(args: &[&str]) -> i32 {
    let out = run(args);
    if out.status.code() != Some(0) {
        assert!(
            !out.stderr.is_empty(),
            "{args:?} failed without a diagnostic"
        );
    }
    out.status.code().expect("exit code")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path =
        std::env::temp_dir().join(format!("nullstellensatz-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn expand_example() {
    let v = ok_json(&[
        "expand", "--ring", "Z", "--poly", "x1^2", "--at", "1", "--bounds", "3",
    ]);
    assert_eq!(v, json!({"0": "1", "1": "2", "2": "1"}));
    let v = ok_json(&[
        "expand", "--ring", "Z", "--poly", "x1*x2", "--at", "1,1", "--bounds", "2,2",
    ]);
    assert_eq!(v["1,1"], "1");
    assert_eq!(v["0,0"], "1");
}

#[test]
fn reduce_example() {
    let v = ok_json(&[
        "reduce",
        "--ring",
        "Q",
        "--poly",
        "x1^2",
        "--sets",
        r#"[["0","1"]]"#,
    ]);
    assert_eq!(v["remainder"], "x1");
    assert_eq!(v["quotients"], json!(["1"]));
    let v = ok_json(&[
        "reduce",
        "--ring",
        "Z",
        "--poly",
        "x1^3*x2^3",
        "--sets",
        r#"[["0","1"],["0","1"]]"#,
        "--strategy",
        "lex",
    ]);
    assert_eq!(v["remainder"], "x1*x2");
}

#[test]
fn witness_from_grid_file() {
    let grid = temp_file("grid.json", r#"[["0","1"],["0","1"]]"#);
    let arg = format!("@{}", grid.display());
    let v = ok_json(&[
        "witness", "--ring", "Z", "--poly", "x1*x2", "--grid", &arg, "--t", "1,1",
    ]);
    assert_eq!(v["point"], json!(["1", "1"]));
    assert_eq!(v["orders"], json!([0, 0]));
    assert_eq!(v["value"], "1");
    assert_eq!(v["certificate_sum"], "1");
    let bare = grid.display().to_string();
    let v = ok_json(&[
        "witness", "--ring", "Z", "--poly", "x1*x2", "--grid", &bare, "--t", "1,1",
    ]);
    assert_eq!(v["point"], json!(["1", "1"]));

    let poly = temp_file("poly.txt", "x1*x2 + 2*x1\n");
    let parg = format!("@{}", poly.display());
    let v = ok_json(&[
        "witness",
        "--ring",
        "Zn:4",
        "--poly",
        &parg,
        "--grid",
        &arg,
        "--t",
        "1,1",
        "--mode",
        "exhaustive",
    ]);
    assert_eq!(v["verified"], true);
    std::fs::remove_file(grid).ok();
    std::fs::remove_file(poly).ok();
}

#[test]
fn interpolate_and_identities() {
    let v = ok_json(&[
        "interpolate",
        "--ring",
        "Q",
        "--data",
        r#"{"multiset": [{"value": "0", "mult": 2}, "1"],
            "values": [{"s": "0", "u": 0, "y": "0"}, {"s": "0", "u": 1, "y": "1"}, {"s": "1", "u": 0, "y": "0"}]}"#,
    ]);
    assert_eq!(v["poly"], "-x1^2 + x1");
    let v = ok_json(&[
        "verify-identities",
        "--ring",
        "Fp:7",
        "--seed",
        "4",
        "--max-cases",
        "30",
    ]);
    assert_eq!(v["problems"], 30);
    assert_eq!(v["certificate_failures"], json!([]));
    assert_eq!(v["moment_failures"], json!([]));
}

#[test]
fn covering_commands() {
    let mult = r#"{"grid": [[{"value": "0"}, {"value": "1", "mult": 2}, {"value": "2"}]],
                   "planes": [{"a": ["1"], "b": "1"}, {"a": ["1"], "b": "1"}, {"a": ["1"], "b": "2"}]}"#;
    let v = ok_json(&[
        "cover-check",
        "--mode",
        "mult",
        "--ring",
        "Q",
        "--instance",
        mult,
    ]);
    assert_eq!(v["valid_cover"], true);
    assert_eq!(v["bound"], 3);

    let short = r#"{"ring": "Q", "grid": [[{"value": "0"}, {"value": "1", "mult": 2}, {"value": "2"}]],
                    "planes": [{"a": ["1"], "b": "1"}, {"a": ["1"], "b": "2"}]}"#;
    let v = ok_json(&[
        "cover-check",
        "--mode",
        "mult",
        "--instance",
        short,
        "--certificate",
    ]);
    assert_eq!(v["valid_cover"], false);
    assert_eq!(v["certificate"]["p_at_origin"], "-2");

    let cube = r#"{"planes": [{"a": ["1", "1"], "b": "1"}, {"a": ["1", "1"], "b": "2"}]}"#;
    let v = ok_json(&[
        "cover-check",
        "--mode",
        "cube",
        "--ring",
        "Zn:4",
        "--instance",
        cube,
    ]);
    assert_eq!(v["valid"], true);
    assert_eq!(v["bound_holds"], true);

    let v = ok_json(&["cover-search", "--ring", "Zn:4", "--n", "2"]);
    assert_eq!(v["minimum"], 2);
    assert_eq!(v["violation"], Value::Null);
}

#[test]
fn snevily_commands() {
    let v = ok_json(&["snevily", "--p", "5", "--a", "0,1", "--b", "0,0"]);
    assert_eq!(v["permutation"], json!([0, 1]));
    let v = ok_json(&["snevily", "--p", "3", "--a", "0,0,1", "--b", "0,1,2"]);
    assert_eq!(v["permutation"], Value::Null);
    assert_eq!(v["conjecture_fails"], true);
    let v = ok_json(&["snevily", "--p", "3", "--exhaustive"]);
    assert_eq!(v["tuples"], 46);
}

#[test]
fn exit_code_contract() {
    let corpus: &[(&[&str], i32)] = &[
        (
            &[
                "expand", "--ring", "Q", "--poly", "3/2*x1", "--at", "0", "--bounds", "2",
            ],
            0,
        ),
        (
            &[
                "witness",
                "--ring",
                "Zn:6",
                "--poly",
                "x1",
                "--grid",
                r#"[["0","1","3"]]"#,
                "--t",
                "1",
            ],
            1,
        ),
        (
            &[
                "witness",
                "--ring",
                "Q",
                "--poly",
                "x1*x2",
                "--grid",
                r#"[["0"],["0","1"]]"#,
                "--t",
                "1,1",
            ],
            1,
        ),
        (
            &[
                "witness",
                "--ring",
                "Q",
                "--poly",
                "x1^2+x2^2",
                "--grid",
                r#"[["0","1"],["0","1"]]"#,
                "--t",
                "1,1",
            ],
            1,
        ),
        (
            &[
                "witness",
                "--ring",
                "Q",
                "--poly",
                "x1^2*x2",
                "--grid",
                r#"[["0","1"],["0","1"]]"#,
                "--t",
                "1,1",
            ],
            1,
        ),
        (
            &["snevily", "--p", "3", "--a", "0,1,2,0", "--b", "0,0,0,0"],
            1,
        ),
        (
            &[
                "cover-check",
                "--mode",
                "mult",
                "--ring",
                "Zn:4",
                "--instance",
                r#"{"grid": [["0","1"]], "planes": []}"#,
            ],
            1,
        ),
        (
            &[
                "reduce",
                "--ring",
                "Z",
                "--poly",
                "x1",
                "--sets",
                r#"[[{"value": "0", "mult": 2}]]"#,
            ],
            1,
        ),
        (
            &[
                "expand", "--ring", "Zn:6", "--poly", "x1/2", "--at", "0", "--bounds", "1",
            ],
            2,
        ),
        (
            &[
                "expand", "--ring", "Z", "--poly", "x1 +", "--at", "0", "--bounds", "1",
            ],
            2,
        ),
        (
            &[
                "expand", "--ring", "Fp:4", "--poly", "x1", "--at", "0", "--bounds", "1",
            ],
            2,
        ),
        (
            &[
                "expand", "--ring", "Z", "--poly", "x1", "--at", "0,0", "--bounds", "1",
            ],
            2,
        ),
        (
            &[
                "witness",
                "--ring",
                "Z",
                "--poly",
                "x1",
                "--grid",
                "@/nonexistent/grid.json",
                "--t",
                "1",
            ],
            2,
        ),
        (
            &[
                "witness", "--ring", "Z", "--poly", "x1", "--grid", "[[", "--t", "1",
            ],
            2,
        ),
        (
            &[
                "reduce",
                "--ring",
                "Z",
                "--poly",
                "x1",
                "--sets",
                r#"[["0","1"]]"#,
                "--strategy",
                "bogus",
            ],
            2,
        ),
        (
            &[
                "cover-search",
                "--ring",
                "Zn:4",
                "--n",
                "2",
                "--max-cases",
                "5",
            ],
            0,
        ),
        (&["bogus-command"], 2),
    ];
    for (args, expected) in corpus {
        assert_eq!(code(args), *expected, "{args:?}");
    }
}
