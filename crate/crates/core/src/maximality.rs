//! Separating contexts for non-equal parallel arrows.
//!
//! Given `v ≠ w`, each `separate_*` builds `pre` and `post` so that
//! `post ∘ v ∘ pre` and `post ∘ w ∘ pre` are distinct arrows of a tiny type:
//! `1 → 1` for relation-style pivots, `2 → 0` or `0 → 2` when both ends of
//! the pivot sit on the same side.

use serde::Serialize;
use thiserror::Error;

use crate::semantics::{eval, SemError, SemValue};
use crate::splcore::{Node, NodeJson, Tag};
use crate::termlang::derived::{counits, units};
use crate::termlang::{
    chain_of, drop_ids, pad, plus, print, unify, ArrowTerm, Category, Term, TermError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeparationError {
    #[error("terms are equal; nothing to separate")]
    Equal,
    #[error("expected {expected} terms, got {got}")]
    WrongCategory { expected: Category, got: Category },
    #[error(transparent)]
    Sem(#[from] SemError),
    #[error(transparent)]
    Term(#[from] TermError),
}

/// A differing pair of the two semantic values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Pivot {
    /// `(i, j)` of a binary relation.
    Rel(usize, usize),
    /// An ordered pair of points of a split preorder.
    Split(Node, Node),
}

/// Which shape of context was used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeparationCase {
    /// One source and one target point; results are `1 → 1`.
    Cross,
    /// Two source points; results are `2 → 0`.
    Sources,
    /// Two target points; results are `0 → 2`.
    Targets,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationWitness {
    pub category: Category,
    pub pivot: Pivot,
    /// Whether the pivot pair belongs to `v` (otherwise to `w`).
    pub pivot_in_v: bool,
    pub case: SeparationCase,
    pub pre: ArrowTerm,
    pub post: ArrowTerm,
    /// `post ∘ v ∘ pre` and `post ∘ w ∘ pre`.
    pub results: (SemValue, SemValue),
}

#[derive(Serialize)]
#[serde(untagged)]
enum PivotJson {
    Rel([usize; 2]),
    Split([NodeJson; 2]),
}

#[derive(Serialize)]
struct WitnessJson<'a> {
    category: Category,
    case: SeparationCase,
    pivot: PivotJson,
    pivot_in_v: bool,
    pre: String,
    post: String,
    results: [&'a SemValue; 2],
}

impl Serialize for SeparationWitness {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let pivot = match self.pivot {
            Pivot::Rel(i, j) => PivotJson::Rel([i, j]),
            Pivot::Split(x, y) => PivotJson::Split([x.into(), y.into()]),
        };
        WitnessJson {
            category: self.category,
            case: self.case,
            pivot,
            pivot_in_v: self.pivot_in_v,
            pre: print(self.pre.term()),
            post: print(self.post.term()),
            results: [&self.results.0, &self.results.1],
        }
        .serialize(s)
    }
}

impl SeparationWitness {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

/// Dispatches on the common category of `v` and `w`.
pub fn separate(v: &ArrowTerm, w: &ArrowTerm) -> Result<SeparationWitness, SeparationError> {
    let (v, w) = &unify(v, w)?;
    match v.category() {
        Category::RB => separate_rb(v, w),
        Category::EF => separate_ef(v, w),
        Category::PF => separate_pf(v, w),
    }
}

fn check(
    v: &ArrowTerm,
    w: &ArrowTerm,
    cat: Category,
) -> Result<(SemValue, SemValue), SeparationError> {
    let (v, w) = (recast(v, cat)?, recast(w, cat)?);
    if crate::semantics::equal(&v, &w)? {
        return Err(SeparationError::Equal);
    }
    Ok((eval(&v), eval(&w)))
}

fn recast(t: &ArrowTerm, cat: Category) -> Result<ArrowTerm, SeparationError> {
    t.recast(cat).map_err(|_| SeparationError::WrongCategory {
        expected: cat,
        got: t.category(),
    })
}

/// `!^a + 1_1 + !^b` (or with counits), a `1 → a+1+b` (resp. reverse) selector.
fn select(cat: Category, a: usize, b: usize, outward: bool) -> Result<Term, TermError> {
    let side = |k| {
        if outward {
            units(cat, k)
        } else {
            counits(cat, k)
        }
    };
    plus(&plus(&side(a), &Term::Id(1))?, &side(b))
}

/// `!^a + _1!^{gap}_1 + !^b`: keeps two strands `gap` apart.
fn select_two(
    cat: Category,
    a: usize,
    gap: usize,
    b: usize,
    outward: bool,
) -> Result<Term, TermError> {
    let side = |k| {
        if outward {
            units(cat, k)
        } else {
            counits(cat, k)
        }
    };
    plus(&plus(&side(a), &pad(1, &side(gap), 1))?, &side(b))
}

fn finish(
    cat: Category,
    v: &ArrowTerm,
    w: &ArrowTerm,
    pre: Term,
    post: Term,
) -> Result<(ArrowTerm, ArrowTerm, (SemValue, SemValue)), SeparationError> {
    let (pre, post) = (
        ArrowTerm::new(cat, drop_ids(&pre))?,
        ArrowTerm::new(cat, drop_ids(&post))?,
    );
    let apply = |t: &ArrowTerm| -> Result<SemValue, SeparationError> {
        let full = ArrowTerm::new(cat, chain_of(&[post.term(), t.term(), pre.term()]))?;
        Ok(eval(&full))
    };
    let results = (apply(v)?, apply(w)?);
    Ok((pre, post, results))
}

/// RB: the least differing pair `(i, j)` is cut out by `!`/`¡` contexts,
/// leaving the identity on `1` against the empty `1 → 1` relation.
pub fn separate_rb(v: &ArrowTerm, w: &ArrowTerm) -> Result<SeparationWitness, SeparationError> {
    let cat = Category::RB;
    let (gv, gw) = check(v, w, cat)?;
    let (rv, rw) = (gv.rel().expect("RB value"), gw.rel().expect("RB value"));
    let &(i, j) = rv
        .symmetric_difference(rw)
        .iter()
        .min()
        .expect("unequal relations differ somewhere");
    let (n, m) = (v.src(), v.tgt());
    let pre = select(cat, i, n - i - 1, true)?;
    let post = select(cat, j, m - j - 1, false)?;
    let (pre, post, results) = finish(cat, v, w, pre, post)?;
    Ok(SeparationWitness {
        category: cat,
        pivot: Pivot::Rel(i, j),
        pivot_in_v: rv.contains(i, j),
        case: SeparationCase::Cross,
        pre,
        post,
        results,
    })
}

pub fn separate_ef(v: &ArrowTerm, w: &ArrowTerm) -> Result<SeparationWitness, SeparationError> {
    separate_split(Category::EF, v, w)
}

/// PF: the results land among the four `1 → 1` (or `2 → 0`, `0 → 2`)
/// split preorders, discrete, one-way either direction, or merged.
pub fn separate_pf(v: &ArrowTerm, w: &ArrowTerm) -> Result<SeparationWitness, SeparationError> {
    separate_split(Category::PF, v, w)
}

fn separate_split(
    cat: Category,
    v: &ArrowTerm,
    w: &ArrowTerm,
) -> Result<SeparationWitness, SeparationError> {
    let (gv, gw) = check(v, w, cat)?;
    let (sv, sw) = (
        gv.split_relation().expect("split value"),
        gw.split_relation().expect("split value"),
    );
    let (x, y) = sv
        .pairs()
        .filter(|&(a, b)| !sw.contains(a, b))
        .chain(sw.pairs().filter(|&(a, b)| !sv.contains(a, b)))
        .min()
        .expect("unequal values differ somewhere");
    let (n, m) = (v.src(), v.tgt());
    let (case, pre, post) = match (x.tag, y.tag) {
        (Tag::Src, Tag::Tgt) | (Tag::Tgt, Tag::Src) => {
            let (s, t) = if x.tag == Tag::Src {
                (x.pos, y.pos)
            } else {
                (y.pos, x.pos)
            };
            (
                SeparationCase::Cross,
                select(cat, s, n - s - 1, true)?,
                select(cat, t, m - t - 1, false)?,
            )
        }
        (Tag::Src, Tag::Src) => {
            let (a, b) = (x.pos.min(y.pos), x.pos.max(y.pos));
            (
                SeparationCase::Sources,
                select_two(cat, a, b - a - 1, n - b - 1, true)?,
                counits(cat, m),
            )
        }
        (Tag::Tgt, Tag::Tgt) => {
            let (a, b) = (x.pos.min(y.pos), x.pos.max(y.pos));
            (
                SeparationCase::Targets,
                units(cat, n),
                select_two(cat, a, b - a - 1, m - b - 1, false)?,
            )
        }
    };
    let (pre, post, results) = finish(cat, v, w, pre, post)?;
    Ok(SeparationWitness {
        category: cat,
        pivot: Pivot::Split(x, y),
        pivot_in_v: sv.contains(x, y),
        case,
        pre,
        post,
        results,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::splcore::{BinRel, SplitPreorder};
    use crate::termlang::{parse, parse_with};

    fn sep(a: &str, b: &str) -> SeparationWitness {
        separate(&parse(a).unwrap(), &parse(b).unwrap()).unwrap()
    }

    fn one_to_one(pairs: &[(Node, Node)]) -> SemValue {
        SemValue::Preorder(SplitPreorder::generated_by(1, 1, pairs.iter().copied()).unwrap())
    }

    #[test]
    fn rb_single_iota() {
        let rb = |t: Term| ArrowTerm::new(Category::RB, t).unwrap();
        let v = rb(crate::termlang::derived::iota(0, 0, 1, 1).unwrap());
        let w = separate_rb(&v, &rb(crate::termlang::derived::zero(Category::RB, 1, 1))).unwrap();
        assert_eq!(w.pivot, Pivot::Rel(0, 0));
        assert_eq!(
            w.results,
            (
                SemValue::Rel(BinRel::identity(1)),
                SemValue::Rel(BinRel::empty(1, 1))
            )
        );
    }

    #[test]
    fn rb_pivot_is_least() {
        let w = separate_rb(
            &parse_with("id(2)", Some(Category::RB)).unwrap(),
            &parse_with("delta(1) . nabla(1)", Some(Category::RB)).unwrap(),
        )
        .unwrap();
        assert_eq!(w.pivot, Pivot::Rel(0, 1));
        assert!(!w.pivot_in_v);
        assert_eq!(w.results.1, SemValue::Rel(BinRel::identity(1)));
        assert_eq!(w.results.0, SemValue::Rel(BinRel::empty(1, 1)));
    }

    #[test]
    fn ef_sources_case() {
        let w = sep("hbar", "pad(0, swap, 0) . swap");
        assert_eq!(w.case, SeparationCase::Sources);
        assert_eq!(w.pivot, Pivot::Split(Node::src(0), Node::src(1)));
        assert_eq!((w.results.0.n(), w.results.0.m()), (2, 0));
        assert_ne!(w.results.0, w.results.1);
    }

    #[test]
    fn pf_down_against_identity() {
        let down = ArrowTerm::new(Category::PF, crate::termlang::derived::down()).unwrap();
        let w = separate_pf(&down, &parse("id(1)").unwrap()).unwrap();
        let (s, t) = (Node::src(0), Node::tgt(0));
        assert_eq!(w.case, SeparationCase::Cross);
        assert_eq!(
            w.results,
            (one_to_one(&[(s, t)]), one_to_one(&[(s, t), (t, s)]))
        );
    }

    #[test]
    fn refuses_equal_terms() {
        let (a, b) = (parse("swap . swap").unwrap(), parse("id(2)").unwrap());
        assert_eq!(separate(&a, &b), Err(SeparationError::Equal));
    }

    #[test]
    fn json_shape() {
        let w = sep("h", "id(2)");
        let v: serde_json::Value = serde_json::from_str(&w.to_json()).unwrap();
        assert_eq!(v["category"], "PF");
        assert!(v["pre"].is_string() && v["results"].as_array().unwrap().len() == 2);
    }
}
