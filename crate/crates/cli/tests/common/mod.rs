#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_splitpre"))
}

pub fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

pub fn stdout(args: &[&str]) -> String {
    String::from_utf8(run(args).stdout).expect("utf-8 output")
}

/// Fixed invocations whose output is compared byte for byte.
pub const FIXTURES: &[(&str, &[&str])] = &[
    ("eval_h", &["eval", "h"]),
    ("eval_counit_unit", &["eval", "counit . unit"]),
    ("eval_swap_ascii", &["eval", "--format", "ascii", "swap"]),
    ("eval_h_text", &["eval", "--format", "text", "h"]),
    ("render_h_ascii", &["render", "h"]),
    ("render_h_dot", &["render", "--format", "dot", "h"]),
    ("render_hbar_ascii", &["render", "hbar"]),
    (
        "render_down_ascii",
        &["render", "pad(0, counit, 1) . h . pad(1, unit, 0)"],
    ),
    (
        "render_rb_dot",
        &[
            "render",
            "--format",
            "dot",
            "-c",
            "RB",
            "delta(1) . nabla(1)",
        ],
    ),
    ("normalize_h", &["normalize", "h"]),
    (
        "normalize_rb",
        &["normalize", "-c", "RB", "delta(1) . nabla(1)"],
    ),
    (
        "normalize_hbar_text",
        &["normalize", "--format", "text", "hbar"],
    ),
    (
        "eq_h_id_separate",
        &["eq", "--separate", "--format", "json", "h", "id(2)"],
    ),
    (
        "separate_rb",
        &[
            "separate",
            "-c",
            "RB",
            "id(2)",
            "union(id(2), iota(0,1;2,2))",
        ],
    ),
    (
        "check_axioms_rb",
        &["check-axioms", "-c", "RB", "--max-param", "1"],
    ),
    (
        "fuzz_pf",
        &["fuzz", "-c", "PF", "--seed", "0", "--count", "50"],
    ),
];

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.txt"))
}

/// Names of fixtures whose current output differs from the stored golden.
pub fn golden_mismatches() -> Vec<&'static str> {
    FIXTURES
        .iter()
        .filter(|(name, args)| {
            std::fs::read_to_string(golden_path(name)).ok() != Some(stdout(args))
        })
        .map(|(name, _)| *name)
        .collect()
}
