use std::io::Write;
use std::process::{Command, Output, Stdio};

use proptest::prelude::*;
use skewsym::symfun::{Basis, SymElem};
use skewsym::{Partition, QPoly};
use skewsym_cli::json::{parse_sym, render, sym_to_json};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_skewsym"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone())
        .unwrap()
        .trim_end()
        .to_string()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

const H2: &str = r#"{"basis":"h","terms":[{"part":[2],"coef":[[0,"1/1"]]}]}"#;
const S21: &str = r#"{"basis":"s","terms":[{"part":[2,1],"coef":[[0,"1/1"]]}]}"#;
const H21: &str = r#"{"basis":"h","terms":[{"part":[2,1],"coef":[[0,"1/1"]]}]}"#;

#[test]
fn convert_examples() {
    let o = run(&["convert", "--to", "e"], H2);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        r#"{"basis":"e","terms":[{"part":[2],"coef":[[0,"-1/1"]]},{"part":[1,1],"coef":[[0,"1/1"]]}]}"#
    );
    let o = run(&["convert", "--to", "e"], S21);
    assert_eq!(
        stdout(&o),
        r#"{"basis":"e","terms":[{"part":[3],"coef":[[0,"-1/1"]]},{"part":[2,1],"coef":[[0,"1/1"]]}]}"#
    );
    assert_eq!(stdout(&run(&["convert", "--to", "s"], S21)), S21);
}

#[test]
fn convert_reads_files_and_round_trips() {
    let path = std::env::temp_dir().join(format!("skewsym-cli-{}.json", std::process::id()));
    std::fs::write(&path, S21).unwrap();
    let to_m = run(
        &["convert", "--input", path.to_str().unwrap(), "--to", "m"],
        "",
    );
    assert_eq!(to_m.status.code(), Some(0));
    let back = run(&["convert", "--to", "s"], &stdout(&to_m));
    assert_eq!(stdout(&back), S21);
    std::fs::remove_file(&path).unwrap();
    let missing = run(
        &["convert", "--input", "/nonexistent/file.json", "--to", "m"],
        "",
    );
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn malformed_input_exits_one() {
    for bad in [
        "",
        "{",
        r#"{"basis":"q","terms":[]}"#,
        r#"{"basis":"h","terms":[{"part":[1,3],"coef":[]}]}"#,
    ] {
        let o = run(&["convert", "--to", "m"], bad);
        assert_eq!(o.status.code(), Some(1), "{bad:?}");
        assert!(o.stdout.is_empty());
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn skew_examples() {
    let o = run(&["skew", "--f", "e:1"], H21);
    assert_eq!(
        stdout(&o),
        r#"{"basis":"h","terms":[{"part":[2],"coef":[[0,"1/1"]]},{"part":[1,1],"coef":[[0,"1/1"]]}]}"#
    );
    let o = run(&["skew", "--f", "s:2,1"], S21);
    assert_eq!(
        stdout(&o),
        r#"{"basis":"s","terms":[{"part":[],"coef":[[0,"1/1"]]}]}"#
    );
    let o = run(&["skew", "--f", "p:9"], S21);
    assert_eq!(stdout(&o), r#"{"basis":"s","terms":[]}"#);
    assert_eq!(run(&["skew", "--f", "x:1"], S21).status.code(), Some(1));
    assert_eq!(run(&["skew", "--f", "e1"], S21).status.code(), Some(1));
}

#[test]
fn lr_examples() {
    let o = run(
        &[
            "lr", "--lambda", "2,1", "--mu", "1", "--nu", "1,1", "--method", "all",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    for m in ["classical", "skew", "plactic"] {
        assert_eq!(v[m], 1);
    }
    assert_eq!(v["agree"], true);

    let o = run(
        &["lr", "--lambda", "3,2,1", "--mu", "", "--nu", "3,2,1"],
        "",
    );
    assert_eq!(json(&o)["classical"], 1);

    let o = run(
        &[
            "lr", "--lambda", "3,2,1", "--mu", "2,1", "--nu", "2,1", "--method", "plactic",
        ],
        "",
    );
    let v = json(&o);
    assert_eq!(v["plactic"], 2);
    assert!(v.get("classical").is_none());

    let o = run(&["lr", "--lambda", "2,1", "--mu", "2", "--nu", "2"], "");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn chromatic_examples() {
    let base = ["chromatic", "--hess", "2,3,4,5,5", "--beta", "1,1,2,1,1"];
    let coeff = |lambda: &str| {
        let mut args = base.to_vec();
        args.extend(["--coeff", lambda]);
        stdout(&run(&args, ""))
    };
    assert_eq!(coeff("3,2,1"), r#"{"part":[3,2,1],"coef":[[3,"1/1"]]}"#);
    assert_eq!(
        coeff("6"),
        r#"{"part":[6],"coef":[[0,"1/1"],[1,"2/1"],[2,"2/1"],[3,"2/1"],[4,"2/1"],[5,"2/1"],[6,"1/1"]]}"#
    );
    assert_eq!(coeff("1,1,1,1,1,1"), r#"{"part":[1,1,1,1,1,1],"coef":[]}"#);

    // The full expansion is itself a valid symmetric function in the h basis.
    let full = run(&base, "");
    let f = parse_sym(&stdout(&full)).unwrap();
    assert_eq!(f.basis(), Basis::H);
    assert_eq!(f.len(), 6);

    assert_eq!(
        run(&["chromatic", "--hess", "2,1", "--beta", "1,1"], "")
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["chromatic", "--hess", "2,2", "--beta", "1"], "")
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["chromatic", "--hess", "2,2", "--beta", "1,-1"], "")
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn verify_examples() {
    let base = ["verify", "--hess", "2,3,4,5,5", "--beta", "1,1,2,1,1"];
    let with = |extra: &[&str]| {
        let mut args = base.to_vec();
        args.extend_from_slice(extra);
        run(&args, "")
    };
    let o = with(&["--recurrence", "e", "--k", "2", "--lambda", "3,1"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let three_five_three = serde_json::json!([[2, "3/1"], [3, "5/1"], [4, "3/1"]]);
    assert_eq!(v["lhs"], three_five_three);
    assert_eq!(v["rhs"], three_five_three);
    assert_eq!(v["holds"], true);
    assert!(!v["rhs_terms"].as_array().unwrap().is_empty());

    let o = with(&["--recurrence", "p", "--k", "2", "--lambda", "3,1"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let expected = serde_json::json!([[1, "2/1"], [2, "5/1"], [3, "6/1"], [4, "5/1"], [5, "2/1"]]);
    assert_eq!(v["lhs"], expected);
    assert_eq!(v["rhs"], expected);

    let o = with(&[
        "--recurrence",
        "e",
        "--k",
        "2",
        "--lambda",
        "3,1",
        "--deg-variant",
        "a",
    ]);
    assert_eq!(json(&o)["deg_variant"], "a");

    let o = with(&["--recurrence", "hp", "--mu", "3,2,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["holds"], true);

    assert_eq!(
        with(&["--recurrence", "hp", "--mu", "4,2"]).status.code(),
        Some(1)
    );
    assert_eq!(
        with(&["--recurrence", "e", "--k", "2", "--lambda", "3"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        with(&["--recurrence", "e", "--lambda", "3,1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        with(&["--recurrence", "p", "--k", "2"]).status.code(),
        Some(1)
    );
}

#[test]
fn nc_examples() {
    let pass = |args: &[&str]| {
        let o = run(args, "");
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let v = json(&o);
        assert_eq!(v["pass"], true);
        assert!(v["checked"].as_u64().unwrap() > 0);
    };
    pass(&[
        "nc",
        "--check",
        "commutation",
        "--ideal",
        "plactic",
        "--max-deg",
        "7",
    ]);
    pass(&[
        "nc",
        "--check",
        "commutation",
        "--ideal",
        "unit-interval",
        "--hess",
        "2,3,4,5,5",
        "--max-deg",
        "6",
    ]);
    pass(&[
        "nc",
        "--check",
        "perp",
        "--ideal",
        "unit-interval",
        "--hess",
        "2,3,4,5,5",
        "--max-deg",
        "6",
    ]);
    pass(&[
        "nc",
        "--check",
        "perp",
        "--ideal",
        "plactic",
        "--max-deg",
        "5",
    ]);
    pass(&[
        "nc",
        "--check",
        "perp",
        "--ideal",
        "content",
        "--n",
        "3",
        "--max-deg",
        "5",
    ]);
    pass(&[
        "nc",
        "--check",
        "schur-expansion",
        "--ideal",
        "plactic",
        "--max-deg",
        "5",
    ]);
    pass(&[
        "nc",
        "--check",
        "schur-expansion",
        "--ideal",
        "content",
        "--max-deg",
        "4",
    ]);

    let err = |args: &[&str]| assert_eq!(run(args, "").status.code(), Some(1), "{args:?}");
    err(&[
        "nc",
        "--check",
        "perp",
        "--ideal",
        "unit-interval",
        "--max-deg",
        "3",
    ]);
    err(&[
        "nc",
        "--check",
        "perp",
        "--ideal",
        "plactic",
        "--hess",
        "2,2",
        "--max-deg",
        "3",
    ]);
    err(&[
        "nc",
        "--check",
        "schur-expansion",
        "--ideal",
        "unit-interval",
        "--hess",
        "2,2",
        "--max-deg",
        "3",
    ]);
    err(&[
        "nc",
        "--check",
        "nothing",
        "--ideal",
        "plactic",
        "--max-deg",
        "3",
    ]);
}

#[test]
fn pretty_output_parses_to_the_same_value() {
    let plain = run(&["lr", "--lambda", "2,1", "--mu", "1", "--nu", "1,1"], "");
    let pretty = run(
        &[
            "--pretty", "lr", "--lambda", "2,1", "--mu", "1", "--nu", "1,1",
        ],
        "",
    );
    assert!(stdout(&pretty).contains('\n'));
    assert_eq!(json(&plain), json(&pretty));
}

#[test]
fn help_exits_zero() {
    let o = run(&["--help"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("chromatic"));
    assert_eq!(run(&[], "").status.code(), Some(1));
}

fn sym_strategy() -> impl Strategy<Value = SymElem> {
    let part = (0usize..=5).prop_flat_map(|n| {
        let all = Partition::all(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    });
    let coef = prop::collection::vec((-3i64..=3, 1i64..=4), 0..4).prop_map(|c| {
        QPoly::from_terms(
            c.into_iter()
                .enumerate()
                .map(|(e, (n, d))| (e, skewsym::foundation::rational(n, d))),
        )
    });
    (
        prop::sample::select(Basis::ALL.to_vec()),
        prop::collection::vec((part, coef), 0..5),
    )
        .prop_map(|(b, terms)| SymElem::from_terms(b, terms))
}

proptest! {
    #[test]
    fn serialization_round_trips(f in sym_strategy()) {
        let text = render(&sym_to_json(&f), false);
        let parsed = parse_sym(&text).unwrap();
        prop_assert_eq!(&parsed, &f);
        prop_assert_eq!(render(&sym_to_json(&parsed), false), text);
    }
}
