use std::process::Command;

use arfkit::cli::{run_from_args, EXIT_INVALID_INPUT, EXIT_OK};
use arfkit::{classify_report, NumericalSemigroup};
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("arfkit").chain(args.iter().copied());
    let code = run_from_args(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn invalid_input_exits_two() {
    for args in [
        &["classify", "0,3"][..],
        &["classify", "4,6"],
        &["info", "3,x"],
        &["lipman", ""],
        &["frobnicate"],
        &["survey"],
    ] {
        let (code, _, err) = run(args);
        assert_eq!(code, EXIT_INVALID_INPUT, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
    let (_, _, err) = run(&["classify", "4,6"]);
    assert!(err.contains("gcd"), "{err}");
}

#[test]
fn arf_closure_text() {
    assert_eq!(run(&["arf-closure", "3,7,11"]), (EXIT_OK, "<3,7,8>\n".into(), String::new()));
    assert_eq!(run(&["arf-closure", "<3,7,11>", "--unicode"]).1, "⟨3,7,8⟩\n");
}

#[test]
fn classify_json_flags() {
    let (code, out, _) = run(&["classify", "3,7,11", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["flags"]["arf"], false);
    assert_eq!(v["flags"]["almost_symmetric"], true);
    assert_eq!(v["flags"]["ggl"], "true");
    assert_eq!(v["invariants"]["F"], 8);
    assert_eq!(v["invariants"]["ell"], 1);
    assert_eq!(v["consistent"], true);
    assert!(v.get("violations").is_none());
}

#[test]
fn ggl_unknown_without_max_embdim() {
    let (code, out, _) = run(&["classify", "4,5,11", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["flags"]["max_embdim"], false);
    assert_eq!(v["flags"]["symmetric"], false);
    assert_eq!(v["flags"]["ggl"], "unknown");
}

#[test]
fn classify_json_is_reproducible_from_its_own_semigroup_block() {
    for gens in ["3,7,11", "4,7,9,10", "5,16,17,18,19", "6,7,8,9,10,11"] {
        let (_, out, _) = run(&["classify", gens, "--json"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        let h: NumericalSemigroup = serde_json::from_value(v["semigroup"].clone()).unwrap();
        let again = serde_json::to_string_pretty(&classify_report(&h)).unwrap() + "\n";
        assert_eq!(out, again);
        let (_, twice, _) = run(&["classify", gens, "--json"]);
        assert_eq!(out, twice);
    }
}

#[test]
fn text_reports() {
    let (code, out, _) = run(&["info", "3,5,7"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("frobenius          4"), "{out}");
    let (_, out, _) = run(&["lipman", "4,7,9,10", "--unicode"]);
    assert!(out.lines().next().unwrap().contains("⟨4,7,9,10⟩"), "{out}");
    assert!(out.lines().last().unwrap().contains("⟨1⟩"), "{out}");
    let (code, out, _) = run(&["classify", "3,7,11"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("<3,7,11>"));
}

#[test]
fn verify_paper_all_pass() {
    let (code, out, _) = run(&["verify-paper"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.trim_end().ends_with("6/6 PASS"), "{out}");
    assert!(!out.contains("FAIL"));
}

#[test]
fn survey_to_stdout_and_cap() {
    let (code, out, err) = run(&["survey", "--max-genus", "4", "--jobs", "2"]);
    assert_eq!(code, EXIT_OK, "{err}");
    let records: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records.len(), 1 + 1 + 2 + 4 + 7);
    assert!(records.iter().all(|r| r["violations"].as_array().unwrap().is_empty()));

    let (code, out, err) = run(&["survey", "--max-genus", "9", "--genus-cap", "3"]);
    assert_eq!(code, EXIT_OK);
    assert!(err.contains("capped"), "{err}");
    assert_eq!(out.lines().count(), 1 + 1 + 2 + 4);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_arfkit");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code().unwrap();
    assert_eq!(status(&["classify", "3,7,11"]), EXIT_OK);
    assert_eq!(status(&["classify", "6,9"]), EXIT_INVALID_INPUT);
    assert_eq!(status(&["nope"]), EXIT_INVALID_INPUT);

    let out = Command::new(bin)
        .args(["survey", "--max-genus", "8"])
        .env("ARFKIT_MAX_GENUS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 4);
    assert!(String::from_utf8(out.stderr).unwrap().contains("capped to 2"));
}

#[test]
fn unwritable_output_is_invalid_input() {
    let (code, _, err) = run(&["survey", "--max-genus", "2", "--out", "/nonexistent-dir/x.jsonl"]);
    assert_eq!(code, EXIT_INVALID_INPUT);
    assert!(err.contains("nonexistent-dir"));
}
