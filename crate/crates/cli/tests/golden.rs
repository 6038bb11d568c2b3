//! JSON output over the example corpus against checked-in golden files.
//! Set UPDATE_GOLDEN=1 to rewrite them.

use std::path::PathBuf;
use std::process::Command;

use hmodpi_cli::scenarios::SCENARIOS;

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hmodpi"))
        .args(args)
        .args(["--format", "json"])
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn corpus_matches_golden_files() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut mismatches = Vec::new();
    for s in SCENARIOS {
        let (code, stdout) = run(s.args);
        assert_eq!(code, s.exit, "{}: exit code\n{stdout}", s.name);
        let path = dir.join(format!("{}.json", s.name));
        if update {
            std::fs::create_dir_all(&dir).unwrap();
            std::fs::write(&path, &stdout).unwrap();
            continue;
        }
        let expected = std::fs::read_to_string(&path)
            .unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
        if expected != stdout {
            mismatches.push(s.name);
        }
    }
    assert!(mismatches.is_empty(), "golden mismatches: {mismatches:?}");
}

#[test]
fn json_output_parses() {
    let (code, stdout) = run(&["codim", "--algebra", "corpus/m2.json", "--n", "2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["codim"], 2);
    assert_eq!(v["command"], "codim");
}

#[test]
fn text_output_names_the_failing_axiom() {
    let out = Command::new(env!("CARGO_BIN_EXE_hmodpi"))
        .args(["verify", "hopf", "--algebra", "corpus/broken_antipode.json"])
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("first_failure: antipode"), "{text}");
}

#[test]
fn unknown_subcommand_is_invalid_input() {
    let out = Command::new(env!("CARGO_BIN_EXE_hmodpi")).arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
