use std::process::{Command, Output};

fn pres(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pres")).args(args).output().expect("spawn pres")
}

#[test]
fn exit_codes_follow_verdicts() {
    let yes = pres(&["wp", "builtin:free_monoid(2)", "ab", "ab"]);
    assert_eq!(yes.status.code(), Some(0));
    let no = pres(&["wp", "builtin:free_monoid(2)", "ab", "ba"]);
    assert_eq!(no.status.code(), Some(1));
    let unknown = pres(&[
        "wp",
        "builtin:free_commutative_monoid(2)",
        "ab",
        "aa",
        "--semi",
        "--budget",
        "3",
    ]);
    assert_eq!(unknown.status.code(), Some(2));
    let usage = pres(&["frobnicate"]);
    assert_eq!(usage.status.code(), Some(64));
    let data = pres(&["check", "definitely-missing.pres"]);
    assert_eq!(data.status.code(), Some(65));
}

#[test]
fn derive_reports_work_cost() {
    let out = pres(&["derive", "builtin:free_commutative_monoid(2)", "ab", "ba", "--cost", "work"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("cost: 4"), "{text}");
}

#[test]
fn presentation_files_are_accepted() {
    let dir = std::env::temp_dir().join("pres-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("z3.pres");
    std::fs::write(&file, "kind = group\nletters = a\nrel aaa\n").unwrap();
    let out = pres(&["check", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("relators: 1"), "{text}");

    let out = pres(&["table", file.to_str().unwrap(), "--fn", "dehn", "--n", "6", "--max-len", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("6,2"), "{text}");
}

#[test]
fn table_output_is_identical_across_job_counts() {
    let args = [
        "table",
        "builtin:free_commutative_monoid(2)",
        "--fn",
        "dl",
        "--m",
        "4",
        "--n",
        "4",
        "--max-len",
        "6",
    ];
    let one = pres(&[&args[..], &["--jobs", "1"]].concat());
    let four = pres(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.stderr, four.stderr);
    // and across repeated runs
    let again = pres(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(four.stdout, again.stdout);
}

#[test]
fn diagram_round_trip_via_json() {
    let dir = std::env::temp_dir().join("pres-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let derivation = dir.join("swap.json");
    let out = pres(&["derive", "builtin:free_commutative_monoid(2)", "ab", "ba", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    std::fs::write(&derivation, &out.stdout).unwrap();
    let out = pres(&[
        "diagram",
        "builtin:free_commutative_monoid(2)",
        "--derivation",
        derivation.to_str().unwrap(),
        "--out",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["faces"].as_array().unwrap().len(), 1);
}

#[test]
fn tietze_script_checks_hold() {
    let dir = std::env::temp_dir().join("pres-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let script = dir.join("moves.tz");
    std::fs::write(&script, "T1 add: aab = aba\nT3 add: y = ab\n").unwrap();
    let out = pres(&[
        "tietze",
        "builtin:free_commutative_monoid(2)",
        "--script",
        script.to_str().unwrap(),
        "--check-inequalities",
        "--domain",
        "3,3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("dl sandwich: holds"), "{text}");
    assert!(text.contains("letters = a b y"), "{text}");
}
