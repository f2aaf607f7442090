//! Named equation schemas: the three presentations and the derived
//! equations, each instantiable over small parameters.

mod ef;
mod pf;
mod rb;
mod shared;

use std::sync::Arc;

use serde::Serialize;

use super::NfError;
use crate::semantics::eval;
use crate::termlang::{print, ArrowTerm, Category, Generator, Term};

/// Where an entry comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Origin {
    /// An axiom of the generator presentation.
    Presentation,
    /// An equation derivable in the presentation.
    Derived,
}

/// A natural-number parameter ranging over `lo..=hi`; `hi = None` means
/// the caller's bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ParamSpec {
    pub name: &'static str,
    pub lo: usize,
    pub hi: Option<usize>,
}

/// One choice of parameters. `left`/`right` pad both sides of the equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub nats: Vec<usize>,
    pub terms: Vec<Term>,
    pub left: usize,
    pub right: usize,
}

impl Instance {
    pub fn nats(nats: &[usize]) -> Self {
        Instance {
            nats: nats.to_vec(),
            terms: Vec::new(),
            left: 0,
            right: 0,
        }
    }

    pub fn with_terms(nats: &[usize], terms: Vec<Term>) -> Self {
        Instance {
            nats: nats.to_vec(),
            terms,
            left: 0,
            right: 0,
        }
    }

    pub fn padded(mut self, left: usize, right: usize) -> Self {
        self.left = left;
        self.right = right;
        self
    }
}

type Build = dyn Fn(&[usize], &[Term]) -> Option<(Term, Term)> + Send + Sync;

#[derive(Clone)]
pub struct Axiom {
    pub name: String,
    pub category: Category,
    pub origin: Origin,
    pub params: Vec<ParamSpec>,
    /// Number of term metavariables, drawn from [`sample_terms`].
    pub term_params: usize,
    /// Whether instances are also checked under outer padding.
    pub outer: bool,
    build: Arc<Build>,
}

impl std::fmt::Debug for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Axiom")
            .field("name", &self.name)
            .field("category", &self.category)
            .field("params", &self.params)
            .field("term_params", &self.term_params)
            .finish()
    }
}

impl Axiom {
    pub(crate) fn new(
        name: impl Into<String>,
        category: Category,
        origin: Origin,
        params: &[&'static str],
        build: impl Fn(&[usize]) -> Option<(Term, Term)> + Send + Sync + 'static,
    ) -> Self {
        Axiom {
            name: name.into(),
            category,
            origin,
            params: params
                .iter()
                .map(|&name| ParamSpec {
                    name,
                    lo: 0,
                    hi: None,
                })
                .collect(),
            term_params: 0,
            outer: true,
            build: Arc::new(move |n, _| build(n)),
        }
    }

    pub(crate) fn with_terms(
        name: impl Into<String>,
        category: Category,
        origin: Origin,
        params: &[&'static str],
        term_params: usize,
        build: impl Fn(&[usize], &[Term]) -> Option<(Term, Term)> + Send + Sync + 'static,
    ) -> Self {
        Axiom {
            name: name.into(),
            category,
            origin,
            params: params
                .iter()
                .map(|&name| ParamSpec {
                    name,
                    lo: 0,
                    hi: None,
                })
                .collect(),
            term_params,
            outer: false,
            build: Arc::new(build),
        }
    }

    /// Fixes the range of parameter `name`.
    pub(crate) fn range(mut self, name: &str, lo: usize, hi: usize) -> Self {
        let p = self
            .params
            .iter_mut()
            .find(|p| p.name == name)
            .expect("declared parameter");
        p.lo = lo;
        p.hi = Some(hi);
        self
    }

    pub(crate) fn no_outer(mut self) -> Self {
        self.outer = false;
        self
    }

    /// Both sides for `inst`, or `None` when the parameters are outside the
    /// schema's side conditions.
    pub fn sides(&self, inst: &Instance) -> Option<(Term, Term)> {
        if inst.nats.len() != self.params.len() || inst.terms.len() != self.term_params {
            return None;
        }
        let (l, r) = (self.build)(&inst.nats, &inst.terms)?;
        Some((
            crate::termlang::pad(inst.left, &l, inst.right),
            crate::termlang::pad(inst.left, &r, inst.right),
        ))
    }

    /// Typed sides; ill-typed or mismatched sides are errors.
    pub fn instantiate(&self, inst: &Instance) -> Result<(ArrowTerm, ArrowTerm), NfError> {
        let (l, r) = self.sides(inst).ok_or_else(|| {
            NfError::Instance(format!(
                "{}: parameters {:?} not admissible",
                self.name, inst.nats
            ))
        })?;
        let (l, r) = (
            ArrowTerm::new(self.category, l)?,
            ArrowTerm::new(self.category, r)?,
        );
        if l.type_of() != r.type_of() {
            return Err(NfError::Instance(format!(
                "{}: sides have types {} and {}",
                self.name,
                l.type_of(),
                r.type_of()
            )));
        }
        Ok((l, r))
    }

    /// Every parameter assignment with values bounded by `max`.
    pub fn instances(&self, max: usize) -> Vec<Instance> {
        let ranges: Vec<(usize, usize)> = self
            .params
            .iter()
            .map(|p| (p.lo, p.hi.unwrap_or(max).max(p.lo)))
            .collect();
        let nat_choices = product(&ranges);
        let pool = sample_terms(self.category);
        let term_choices = product(&vec![(0, pool.len() - 1); self.term_params]);
        let pad_max = if self.outer { max } else { 0 };
        let mut out = Vec::new();
        for nats in &nat_choices {
            for picks in &term_choices {
                let terms: Vec<Term> = picks.iter().map(|&k| pool[k].clone()).collect();
                for left in 0..=pad_max {
                    for right in 0..=pad_max {
                        out.push(Instance {
                            nats: nats.clone(),
                            terms: terms.clone(),
                            left,
                            right,
                        });
                    }
                }
            }
        }
        out
    }

    /// The first admissible instance, used for display.
    pub fn example(&self, max: usize) -> Option<(Instance, ArrowTerm, ArrowTerm)> {
        self.instances(max).into_iter().find_map(|inst| {
            if inst.left + inst.right > 0 {
                return None;
            }
            let (l, r) = self.instantiate(&inst).ok()?;
            Some((inst, l, r))
        })
    }
}

fn product(ranges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &(lo, hi) in ranges {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (lo..=hi).map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    out
}

/// Small terms used to instantiate term metavariables.
pub fn sample_terms(cat: Category) -> Vec<Term> {
    use Generator::*;
    let leaf = |g: Generator| Term::gen(g);
    let padl = |g: Generator| Term::padded_gen(1, g, 0);
    let mut out = vec![Term::Id(0), Term::Id(1), Term::Id(2)];
    match cat {
        Category::PF | Category::EF => {
            let bridge = if cat == Category::PF { H } else { HBar };
            out.extend([
                leaf(Unit),
                leaf(Counit),
                leaf(Swap),
                leaf(bridge),
                padl(Unit),
                padl(Counit),
                Term::padded_gen(0, bridge, 1),
                Term::comp(leaf(Counit), leaf(bridge)),
                Term::comp(leaf(bridge), padl(Unit)),
                Term::comp(leaf(bridge), leaf(Swap)),
            ]);
            if cat == Category::PF {
                out.push(crate::termlang::derived::down());
                out.push(crate::termlang::derived::up());
            }
        }
        Category::RB => {
            out.extend([
                leaf(Nabla(1)),
                leaf(Delta(1)),
                leaf(UnitK(1)),
                leaf(CounitK(1)),
                leaf(UnitK(2)),
                leaf(CounitK(2)),
                crate::termlang::derived::tau(Category::RB),
                Term::comp(leaf(Delta(1)), leaf(Nabla(1))),
                Term::comp(leaf(UnitK(1)), leaf(CounitK(1))),
                Term::comp(leaf(Nabla(1)), Term::padded_gen(1, UnitK(1), 0)),
                Term::comp(Term::padded_gen(1, CounitK(1), 0), leaf(Delta(1))),
            ]);
        }
    }
    out
}

/// The full catalog for `cat`: presentation axioms first.
pub fn axiom_catalog(cat: Category) -> Vec<Axiom> {
    match cat {
        Category::PF => pf::catalog(),
        Category::EF => ef::catalog(),
        Category::RB => rb::catalog(),
    }
}

pub fn find_axiom(cat: Category, name: &str) -> Option<Axiom> {
    axiom_catalog(cat).into_iter().find(|a| a.name == name)
}

/// Outcome of checking one entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub name: String,
    pub category: Category,
    pub instances: usize,
    pub failures: Vec<String>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.instances > 0
    }
}

/// Evaluates both sides of every admissible instance.
pub fn check_axiom(ax: &Axiom, max: usize) -> AxiomCheck {
    let mut instances = 0;
    let mut failures = Vec::new();
    for inst in ax.instances(max) {
        if ax.sides(&inst).is_none() {
            continue;
        }
        instances += 1;
        match ax.instantiate(&inst) {
            Err(e) => failures.push(e.to_string()),
            Ok((l, r)) => {
                if eval(&l) != eval(&r) {
                    failures.push(format!(
                        "{:?} pad ({},{}): {} ≠ {}",
                        inst.nats,
                        inst.left,
                        inst.right,
                        print(l.term()),
                        print(r.term())
                    ));
                }
            }
        }
    }
    AxiomCheck {
        name: ax.name.clone(),
        category: ax.category,
        instances,
        failures,
    }
}

#[derive(Serialize)]
struct AxiomJson {
    name: String,
    category: Category,
    origin: Origin,
    params: Vec<String>,
    term_params: usize,
    example: Option<ExampleJson>,
}

#[derive(Serialize)]
struct ExampleJson {
    params: Vec<usize>,
    terms: Vec<String>,
    lhs: String,
    rhs: String,
}

/// The catalog with one displayed instance per entry.
pub fn catalog_json(cat: Category, max: usize) -> String {
    let entries: Vec<AxiomJson> = axiom_catalog(cat)
        .iter()
        .map(|a| AxiomJson {
            name: a.name.clone(),
            category: a.category,
            origin: a.origin,
            params: a.params.iter().map(|p| p.name.to_string()).collect(),
            term_params: a.term_params,
            example: a.example(max).map(|(inst, l, r)| ExampleJson {
                params: inst.nats,
                terms: inst.terms.iter().map(print).collect(),
                lhs: print(l.term()),
                rhs: print(r.term()),
            }),
        })
        .collect();
    serde_json::to_string_pretty(&entries).expect("plain data serializes")
}

impl Serialize for Category {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_is_sound() {
        for cat in Category::ALL {
            for ax in axiom_catalog(cat) {
                let report = check_axiom(&ax, 3);
                assert!(
                    report.instances > 0,
                    "{cat} {} has no admissible instance",
                    ax.name
                );
                assert!(
                    report.failures.is_empty(),
                    "{cat} {}: {:?}",
                    ax.name,
                    &report.failures[..report.failures.len().min(3)]
                );
            }
        }
    }
}
