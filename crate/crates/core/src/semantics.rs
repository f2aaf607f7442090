//! The evaluation functor `G` into split preorders, split equivalences and
//! binary relations, and the equality decision built on it.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::splcore::{
    compose_rel, compose_split, identity_split, strict_part, BinRel, BinRelJson, Node,
    SplitEquivalence, SplitPreorder, SplitRelation, SplitRelationJson,
};
use crate::termlang::{ArrowTerm, Category, Generator, Term, TermError, TermType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemError {
    #[error(transparent)]
    Term(#[from] TermError),
    #[error("category mismatch: {0} against {1}")]
    CategoryMismatch(Category, Category),
    #[error("type mismatch: {0} against {1}")]
    TypeMismatch(TermType, TermType),
    #[error("RB terms have no strict part")]
    NoStrictPart,
}

/// A value of the model matching a term's category.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SemValue {
    Preorder(SplitPreorder),
    Equivalence(SplitEquivalence),
    Rel(BinRel),
}

impl SemValue {
    pub fn n(&self) -> usize {
        match self {
            SemValue::Preorder(p) => p.n(),
            SemValue::Equivalence(e) => e.preorder().n(),
            SemValue::Rel(r) => r.n(),
        }
    }

    pub fn m(&self) -> usize {
        match self {
            SemValue::Preorder(p) => p.m(),
            SemValue::Equivalence(e) => e.preorder().m(),
            SemValue::Rel(r) => r.m(),
        }
    }

    /// The underlying pair set for PF and EF values.
    pub fn split_relation(&self) -> Option<&SplitRelation> {
        match self {
            SemValue::Preorder(p) => Some(p.relation()),
            SemValue::Equivalence(e) => Some(e.relation()),
            SemValue::Rel(_) => None,
        }
    }

    pub fn preorder(&self) -> Option<&SplitPreorder> {
        match self {
            SemValue::Preorder(p) => Some(p),
            SemValue::Equivalence(e) => Some(e.preorder()),
            SemValue::Rel(_) => None,
        }
    }

    pub fn rel(&self) -> Option<&BinRel> {
        match self {
            SemValue::Rel(r) => Some(r),
            _ => None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

impl serde::Serialize for SemValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            SemValue::Rel(r) => BinRelJson::from(r).serialize(s),
            other => {
                SplitRelationJson::from(other.split_relation().expect("split value")).serialize(s)
            }
        }
    }
}

fn split(n: usize, m: usize, pairs: &[(Node, Node)]) -> SplitPreorder {
    SplitPreorder::new(SplitRelation::from_pairs(n, m, pairs.iter().copied()).expect("in bounds"))
        .expect("generator clause is a preorder")
}

/// Every pair among `nodes`.
fn merged(nodes: &[Node]) -> Vec<(Node, Node)> {
    nodes
        .iter()
        .flat_map(|&x| nodes.iter().map(move |&y| (x, y)))
        .collect()
}

/// Generator clauses for PF and EF; lines are double links.
pub fn generator_preorder(g: Generator) -> Option<SplitPreorder> {
    let (s, t) = (Node::src, Node::tgt);
    let p = match g {
        Generator::Unit => SplitPreorder::discrete(0, 1),
        Generator::Counit => SplitPreorder::discrete(1, 0),
        Generator::Swap => {
            let mut pairs = merged(&[s(0), t(1)]);
            pairs.extend(merged(&[s(1), t(0)]));
            split(2, 2, &pairs)
        }
        Generator::H => {
            let mut pairs = merged(&[s(0), t(0)]);
            pairs.extend(merged(&[s(1), t(1)]));
            for a in [s(0), t(0)] {
                for b in [s(1), t(1)] {
                    pairs.push((a, b));
                }
            }
            split(2, 2, &pairs)
        }
        Generator::HBar => split(2, 2, &merged(&[s(0), s(1), t(0), t(1)])),
        _ => return None,
    };
    Some(p)
}

/// Generator clauses for RB; lines are single downward pairs.
pub fn generator_rel(g: Generator) -> Option<BinRel> {
    let r = match g {
        Generator::Nabla(k) => {
            BinRel::from_pairs(2 * k, k, (0..k).flat_map(|i| [(i, i), (k + i, i)]))
                .expect("in bounds")
        }
        Generator::Delta(k) => {
            BinRel::from_pairs(k, 2 * k, (0..k).flat_map(|i| [(i, i), (i, k + i)]))
                .expect("in bounds")
        }
        Generator::UnitK(k) => BinRel::empty(0, k),
        Generator::CounitK(k) => BinRel::empty(k, 0),
        _ => return None,
    };
    Some(r)
}

fn eval_split(t: &Term) -> Result<SplitPreorder, SemError> {
    match t {
        Term::Id(n) => Ok(identity_split(*n).into_preorder()),
        Term::Gen { left, gen, right } => {
            let p = generator_preorder(*gen).ok_or_else(|| TermError::WrongCategory {
                gen: gen.to_string(),
                category: Category::PF,
            })?;
            Ok(p.padded(*left, *right))
        }
        Term::Comp(after, before) => {
            let (a, b) = (eval_split(after)?, eval_split(before)?);
            compose_split(&b, &a).map_err(|_| {
                SemError::Term(TermError::IllTyped {
                    after: TermType::new(a.n(), a.m()),
                    before: TermType::new(b.n(), b.m()),
                })
            })
        }
    }
}

fn eval_rel(t: &Term) -> Result<BinRel, SemError> {
    match t {
        Term::Id(n) => Ok(BinRel::identity(*n)),
        Term::Gen { left, gen, right } => {
            let r = generator_rel(*gen).ok_or_else(|| TermError::WrongCategory {
                gen: gen.to_string(),
                category: Category::RB,
            })?;
            Ok(r.padded(*left, *right))
        }
        Term::Comp(after, before) => {
            let (a, b) = (eval_rel(after)?, eval_rel(before)?);
            compose_rel(&b, &a).map_err(|_| {
                SemError::Term(TermError::IllTyped {
                    after: TermType::new(a.n(), a.m()),
                    before: TermType::new(b.n(), b.m()),
                })
            })
        }
    }
}

/// `G t`, evaluating raw syntax under `cat`.
pub fn eval_term(cat: Category, t: &Term) -> Result<SemValue, SemError> {
    match cat {
        Category::PF => Ok(SemValue::Preorder(eval_split(t)?)),
        Category::EF => {
            let p = eval_split(t)?;
            Ok(SemValue::Equivalence(
                SplitEquivalence::new(p).expect("EF generators are symmetric"),
            ))
        }
        Category::RB => Ok(SemValue::Rel(eval_rel(t)?)),
    }
}

/// `G t`.
pub fn eval(t: &ArrowTerm) -> SemValue {
    eval_term(t.category(), t.term()).expect("ArrowTerm is well-typed")
}

/// Decides `f = g` in the presentation of their category.
pub fn equal(f: &ArrowTerm, g: &ArrowTerm) -> Result<bool, SemError> {
    if f.category() != g.category() {
        return Err(SemError::CategoryMismatch(f.category(), g.category()));
    }
    if f.type_of() != g.type_of() {
        return Err(SemError::TypeMismatch(f.type_of(), g.type_of()));
    }
    Ok(eval(f) == eval(g))
}

/// `G_s t`: the semantics without its loops.
pub fn eval_strict(t: &ArrowTerm) -> Result<SplitRelation, SemError> {
    match eval(t).preorder() {
        Some(p) => Ok(strict_part(p)),
        None => Err(SemError::NoStrictPart),
    }
}

/// The strict part of an EF value as unordered pairs `(x, y)` with `x < y`.
pub fn eval_strict_unordered(t: &ArrowTerm) -> Result<BTreeSet<(Node, Node)>, SemError> {
    Ok(eval_strict(t)?.pairs().filter(|(x, y)| x < y).collect())
}
