mod common;

use std::io::Write;
use std::process::Stdio;

use common::{bin, golden_path, run, stdout, FIXTURES};

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

#[test]
fn goldens() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for (name, args) in FIXTURES {
        let out = stdout(args);
        let path = golden_path(name);
        if update {
            std::fs::create_dir_all(path.parent().unwrap()).unwrap();
            std::fs::write(&path, &out).unwrap();
            continue;
        }
        let want =
            std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(out, want, "golden {name} differs");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["eval", "counit . unit"]), 0);
    assert_eq!(code(&["eval", "foo("]), 2);
    assert_eq!(code(&["eval", "swap . unit"]), 3);
    assert_eq!(code(&["eval", "h . nabla(1)"]), 3);
    assert_eq!(code(&["eq", "swap . swap", "id(2)"]), 0);
    assert_eq!(code(&["eq", "h", "id(2)"]), 1);
    assert_eq!(code(&["eq", "nabla(1) . delta(1)", "id(1)"]), 0);
    assert_eq!(code(&["eq", "swap", "id(1)"]), 4);
    assert_eq!(code(&["separate", "swap . swap", "id(2)"]), 1);
    assert_eq!(code(&["check-axioms", "-c", "EF", "--max-param", "1"]), 0);
}

#[test]
fn eq_reports_witness() {
    let out = stdout(&["eq", "--separate", "h", "id(2)"]);
    assert!(out.starts_with("not equal\n"));
    let w: serde_json::Value = serde_json::from_str(out.lines().nth(1).unwrap()).unwrap();
    assert_eq!(w["case"], "sources");
}

#[test]
fn reads_stdin_and_files() {
    let mut child = bin()
        .args(["eval", "--format", "text"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"%category PF\nswap")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        stdout(&["eval", "--format", "text", "-c", "PF", "swap"])
    );

    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, "counit . unit").unwrap();
    let path = f.path().to_str().unwrap();
    assert_eq!(
        stdout(&["eval", "--file", path]),
        stdout(&["eval", "counit . unit"])
    );
}

#[test]
fn fuzz_is_deterministic() {
    let args = ["fuzz", "--seed", "11", "--count", "30"];
    assert_eq!(stdout(&args), stdout(&args));
    assert_ne!(
        stdout(&args),
        stdout(&["fuzz", "--seed", "12", "--count", "30"])
    );
    let empty = run(&["fuzz", "--count", "0", "--format", "json"]);
    assert_eq!(empty.status.code(), Some(0));
}
