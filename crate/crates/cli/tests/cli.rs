use std::path::PathBuf;
use std::process::{Command, Output};

fn omlkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_omlkit"))
        .args(args)
        .env_remove("OMLKIT_CORPUS_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn repo_file(rel: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", rel].iter().collect();
    p.to_string_lossy().into_owned()
}

fn schema() -> jsonschema::Validator {
    let text = include_str!("../report.schema.json");
    jsonschema::validator_for(&serde_json::from_str(text).unwrap()).unwrap()
}

#[test]
fn boolean_test_on_example_fails_with_witness() {
    let out = omlkit(&["boolean-test", "paper-example-2set"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("{1}⊕{1}={1,2}"), "{}", stdout(&out));
}

#[test]
fn shipped_example_file_matches_builtin() {
    let file = repo_file("corpus/paper-example-2set.rlse");
    let a = omlkit(&["boolean-test", &file, "--json", "--witnesses"]);
    let b = omlkit(&["boolean-test", "paper-example-2set", "--json", "--witnesses"]);
    assert_eq!(a.status.code(), Some(1));
    let strip = |o: &Output| {
        let mut v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        v.as_object_mut().unwrap().remove("command");
        v
    };
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn terms_filter_prints_two_classes() {
    let out = omlkit(&["terms-filter", "--corpus", "boolean_2,mo2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("2 surviving classes\n"));
}

#[test]
fn check_oml_exit_codes() {
    assert_eq!(omlkit(&["check-oml", "boolean_3"]).status.code(), Some(0));
    let o6 = omlkit(&["check-oml", "o6", "--witnesses"]);
    assert_eq!(o6.status.code(), Some(1));
    assert!(stdout(&o6).contains("witness x="));
    assert_eq!(omlkit(&["check-oml", "no-such-structure"]).status.code(), Some(2));
    assert_eq!(omlkit(&["check-oml", "paper-example-2set"]).status.code(), Some(2));
    assert_eq!(omlkit(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.oml");
    std::fs::write(&path, "KIND oml\nELEMENTS 0 1\nLEQ\n0\n").unwrap();
    let out = omlkit(&["check-oml", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 4"));
    std::fs::write(&path, "KIND oml\nELEMENTS 0 1\nLEQ\n0 1\nCOMPLEMENT\n0 z\n").unwrap();
    assert_eq!(omlkit(&["check-oml", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn corpus_dir_is_searched() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::copy(repo_file("corpus/paper-example-2set.rlse"), dir.path().join("ex.rlse")).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_omlkit"))
        .args(["check-rlse", "ex"])
        .env("OMLKIT_CORPUS_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn emitted_structures_reload() {
    let dir = tempfile::tempdir().unwrap();
    let states = dir.path().join("mo2.oml");
    let out = omlkit(&["states-find", "mo2"]);
    assert_eq!(out.status.code(), Some(0));
    std::fs::write(&states, &out.stdout).unwrap();
    assert_eq!(omlkit(&["states-check-full", states.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(omlkit(&["boolean-test", states.to_str().unwrap()]).status.code(), Some(1));

    let rlse = dir.path().join("b3.rlse");
    let out = omlkit(&["construct", "boolean_3", "--plus", "t1"]);
    std::fs::write(&rlse, &out.stdout).unwrap();
    assert_eq!(omlkit(&["boolean-test", rlse.to_str().unwrap()]).status.code(), Some(0));
    let derived = omlkit(&["derive", rlse.to_str().unwrap()]);
    assert_eq!(derived.status.code(), Some(0));
    let lattice = dir.path().join("b3.oml");
    std::fs::write(&lattice, &derived.stdout).unwrap();
    assert_eq!(omlkit(&["check-oml", lattice.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn states_check_full_rejects_partial_sets() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mo2.oml");
    let text = "KIND oml\nELEMENTS 0 a a' b b' 1\nCOVERS\n0 a\n0 a'\n0 b\n0 b'\na 1\na' 1\nb 1\nb' 1\n\
                COMPLEMENT\n0 1\na a'\nb b'\nSTATES\n0 1 0 0 1 1\n";
    std::fs::write(&path, text).unwrap();
    let out = omlkit(&["states-check-full", path.to_str().unwrap(), "--witnesses"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("witness x=a, y=b'"), "{}", stdout(&out));
}

#[test]
fn custom_plus_is_validated() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("plus.rlse");
    // symmetric difference on 2^1 except 1⊕1 = 1
    std::fs::write(&path, "KIND rlse\nELEMENTS {} {1}\nOPLUS\n{} | {} {1}\n{1} | {1} {1}\n").unwrap();
    let arg = format!("custom={}", path.display());
    let out = omlkit(&["construct", "boolean_1", "--plus", &arg]);
    assert_eq!(out.status.code(), Some(1), "{}", stdout(&out));
    std::fs::write(&path, "KIND rlse\nELEMENTS {} {1}\nOPLUS\n{} | {} {1}\n{1} | {1} {}\n").unwrap();
    assert_eq!(omlkit(&["construct", "boolean_1", "--plus", &arg]).status.code(), Some(0));
}

#[test]
fn json_reports_validate_and_match_text() {
    let validator = schema();
    let runs: &[&[&str]] = &[
        &["check-oml", "mo2"],
        &["check-oml", "o6"],
        &["check-rlse", "paper-example-2set"],
        &["boolean-test", "paper-example-2set"],
        &["boolean-test", "mo2"],
        &["boolean-test", "boolean_2"],
        &["derive", "paper-example-2set"],
        &["construct", "mo3", "--plus", "t2"],
        &["terms-filter", "--corpus", "boolean_2,mo2"],
        &["terms-enumerate"],
        &["states-find", "boolean_3"],
    ];
    for args in runs {
        for extra in [&[][..], &["--witnesses"][..]] {
            let mut with: Vec<&str> = args.to_vec();
            with.extend(extra);
            let text = omlkit(&with);
            with.push("--json");
            let json = omlkit(&with);
            assert_eq!(text.status.code(), json.status.code(), "{with:?}");
            let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
            assert!(validator.is_valid(&v), "{with:?}: {v}");
            let text = stdout(&text);
            for c in v["checks"].as_array().unwrap() {
                let verdict = if c["passed"].as_bool().unwrap() { "PASS" } else { "FAIL" };
                let line = format!("{verdict}  {}", c["name"].as_str().unwrap());
                assert!(text.contains(&line), "{with:?}: missing `{line}`");
            }
        }
    }
}

#[test]
fn reports_are_deterministic() {
    for args in [&["states-find", "mo3"][..], &["terms-filter", "--witnesses"][..]] {
        assert_eq!(omlkit(args).stdout, omlkit(args).stdout);
    }
}

#[test]
fn verify_all_passes() {
    let out = omlkit(&["verify-all"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    for i in 1..=9 {
        assert!(text.contains(&format!("PASS  criterion {i} ")), "{text}");
    }
}
