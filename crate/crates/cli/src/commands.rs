use std::fmt::Write;

use serde::Serialize;
use splitpre::fuzz::{run_fuzz, FuzzConfig};
use splitpre::maximality::{separate, SeparationWitness};
use splitpre::normalform::{
    axiom_catalog, catalog_json, check_axiom, normalize, AxiomCheck, NormalForm,
};
use splitpre::semantics::{equal, eval, SemError};
use splitpre::termlang::{parse_with, print, ArrowTerm, Category, TermError};

use crate::render;

/// Exit codes shared by all subcommands.
pub mod exit {
    pub const OK: i32 = 0;
    pub const NOT_EQUAL: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const TYPE: i32 = 3;
    pub const MISMATCH: i32 = 4;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
    Dot,
    Ascii,
}

#[derive(Serialize)]
struct EqJson<'a> {
    category: Category,
    equal: bool,
    witness: Option<&'a SeparationWitness>,
}

#[derive(Serialize)]
struct NormalizeJson<'a> {
    category: Category,
    normal_form: &'a NormalForm,
    term: String,
}

/// What a subcommand prints and the code it exits with.
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: exit::OK,
        }
    }

    pub fn fail(code: i32, msg: impl std::fmt::Display) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code,
        }
    }
}

fn term_code(e: &TermError) -> i32 {
    match e {
        TermError::Syntax { .. }
        | TermError::BadParams { .. }
        | TermError::UnknownDerived(_)
        | TermError::UnknownCategory(_) => exit::PARSE,
        TermError::IllTyped { .. }
        | TermError::WrongCategory { .. }
        | TermError::Mixed(_)
        | TermError::CategoryMismatch(..) => exit::TYPE,
    }
}

fn parse_term(text: &str, cat: Option<Category>) -> Result<ArrowTerm, Outcome> {
    parse_with(text, cat).map_err(|e| Outcome::fail(term_code(&e), e))
}

/// Parses two terms into one category; a term without category-specific
/// generators is reread in the other's category.
fn parse_pair(a: &str, b: &str, cat: Option<Category>) -> Result<(ArrowTerm, ArrowTerm), Outcome> {
    let (f, g) = (parse_term(a, cat)?, parse_term(b, cat)?);
    if f.category() == g.category() {
        return Ok((f, g));
    }
    if let (Ok(g2), Err(_)) = (
        parse_with(b, Some(f.category())),
        parse_with(a, Some(g.category())),
    ) {
        return Ok((f, g2));
    }
    if let Ok(f2) = parse_with(a, Some(g.category())) {
        return Ok((f2, g));
    }
    Err(Outcome::fail(
        exit::TYPE,
        SemError::CategoryMismatch(f.category(), g.category()),
    ))
}

fn same_type(f: &ArrowTerm, g: &ArrowTerm) -> Result<(), Outcome> {
    if f.type_of() != g.type_of() {
        return Err(Outcome::fail(
            exit::MISMATCH,
            SemError::TypeMismatch(f.type_of(), g.type_of()),
        ));
    }
    Ok(())
}

fn value_text(t: &ArrowTerm) -> String {
    let v = eval(t);
    let mut s = format!("{} {}\n", t.category(), t.type_of());
    match v.split_relation() {
        Some(r) => {
            for (x, y) in r.pairs().filter(|(x, y)| x != y) {
                writeln!(s, "{x} -> {y}").expect("writing to a string");
            }
        }
        None => {
            for (i, j) in v.rel().expect("relation").pairs() {
                writeln!(s, "{i} -> {j}").expect("writing to a string");
            }
        }
    }
    s
}

fn render_value(t: &ArrowTerm, format: Format) -> String {
    let v = eval(t);
    match format {
        Format::Json => v.to_json() + "\n",
        Format::Text => value_text(t),
        Format::Ascii => render::ascii(&v),
        Format::Dot => render::dot(&v),
    }
}

pub fn eval_cmd(text: &str, cat: Option<Category>, format: Format) -> Outcome {
    match parse_term(text, cat) {
        Ok(t) => Outcome::ok(render_value(&t, format)),
        Err(o) => o,
    }
}

pub fn render_cmd(text: &str, cat: Option<Category>, format: Format) -> Outcome {
    let format = if format == Format::Json || format == Format::Text {
        Format::Ascii
    } else {
        format
    };
    eval_cmd(text, cat, format)
}

pub fn eq_cmd(
    a: &str,
    b: &str,
    cat: Option<Category>,
    with_witness: bool,
    format: Format,
) -> Outcome {
    let (f, g) = match parse_pair(a, b, cat).and_then(|(f, g)| same_type(&f, &g).map(|_| (f, g))) {
        Ok(p) => p,
        Err(o) => return o,
    };
    let same = equal(&f, &g).expect("unified category and type");
    let witness = if with_witness && !same {
        separate(&f, &g).ok()
    } else {
        None
    };
    let stdout = match format {
        Format::Json => {
            let body = EqJson {
                category: f.category(),
                equal: same,
                witness: witness.as_ref(),
            };
            serde_json::to_string(&body).expect("plain data serializes") + "\n"
        }
        _ => {
            let mut s = String::from(if same { "equal\n" } else { "not equal\n" });
            if let Some(w) = &witness {
                s += &w.to_json();
                s.push('\n');
            }
            s
        }
    };
    Outcome {
        stdout,
        stderr: String::new(),
        code: if same { exit::OK } else { exit::NOT_EQUAL },
    }
}

pub fn separate_cmd(a: &str, b: &str, cat: Option<Category>) -> Outcome {
    let (f, g) = match parse_pair(a, b, cat).and_then(|(f, g)| same_type(&f, &g).map(|_| (f, g))) {
        Ok(p) => p,
        Err(o) => return o,
    };
    match separate(&f, &g) {
        Ok(w) => Outcome::ok(w.to_json() + "\n"),
        Err(e) => Outcome::fail(exit::NOT_EQUAL, e),
    }
}

fn nf_text(nf: &NormalForm) -> String {
    let pairs: Vec<String> = match nf {
        NormalForm::Eta(e) => e.etas.iter().map(|(i, j)| format!("({i},{j})")).collect(),
        NormalForm::EtaBar(e) => e.etas.iter().map(|(i, j)| format!("{{{i},{j}}}")).collect(),
        NormalForm::Iota(e) => e.pairs.iter().map(|(i, j)| format!("({i},{j})")).collect(),
    };
    let label = match nf {
        NormalForm::Iota(_) => "iotas",
        _ => "etas",
    };
    format!("{label}: {}\n", pairs.join(" "))
}

pub fn normalize_cmd(text: &str, cat: Option<Category>, format: Format) -> Outcome {
    let t = match parse_term(text, cat) {
        Ok(t) => t,
        Err(o) => return o,
    };
    let nf = normalize(&t).expect("every category has a normal form");
    let term = print(nf.term().expect("payload of a term is valid").term());
    match format {
        Format::Json => {
            let body = NormalizeJson {
                category: t.category(),
                normal_form: &nf,
                term,
            };
            Outcome::ok(serde_json::to_string(&body).expect("plain data serializes") + "\n")
        }
        _ => Outcome::ok(format!("{}term: {term}\n", nf_text(&nf))),
    }
}

pub fn check_axioms_cmd(cats: &[Category], max: usize, catalog: bool, format: Format) -> Outcome {
    if catalog {
        let parts: Vec<String> = cats.iter().map(|&c| catalog_json(c, max)).collect();
        return Outcome::ok(parts.join("\n") + "\n");
    }
    let reports: Vec<AxiomCheck> = cats
        .iter()
        .flat_map(|&c| {
            axiom_catalog(c)
                .into_iter()
                .map(move |a| check_axiom(&a, max))
        })
        .collect();
    let failed = reports.iter().filter(|r| !r.failures.is_empty()).count();
    let stdout = match format {
        Format::Json => serde_json::to_string(&reports).expect("plain data serializes") + "\n",
        _ => {
            let mut s = String::new();
            for r in &reports {
                let status = match (r.failures.is_empty(), r.instances) {
                    (false, _) => "FAIL",
                    (true, 0) => "SKIP",
                    (true, _) => "PASS",
                };
                writeln!(
                    s,
                    "{status} {} {} ({} instances)",
                    r.category, r.name, r.instances
                )
                .expect("writing to a string");
                for f in r.failures.iter().take(3) {
                    writeln!(s, "    {f}").expect("writing to a string");
                }
            }
            writeln!(s, "{} entries, {failed} failed", reports.len()).expect("writing to a string");
            s
        }
    };
    Outcome {
        stdout,
        stderr: String::new(),
        code: if failed == 0 {
            exit::OK
        } else {
            exit::NOT_EQUAL
        },
    }
}

pub fn fuzz_cmd(
    cats: &[Category],
    seed: u64,
    count: usize,
    cfg: FuzzConfig,
    format: Format,
) -> Outcome {
    let reports: Vec<_> = cats
        .iter()
        .map(|&c| run_fuzz(c, seed, count, cfg))
        .collect();
    let passed = reports.iter().all(|r| r.passed());
    let stdout = match format {
        Format::Json => {
            serde_json::to_string_pretty(&reports).expect("plain data serializes") + "\n"
        }
        _ => reports.iter().map(|r| r.to_text()).collect(),
    };
    Outcome {
        stdout,
        stderr: String::new(),
        code: if passed { exit::OK } else { exit::NOT_EQUAL },
    }
}
