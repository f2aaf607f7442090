//! Split relations, split preorders and split equivalences between finite
//! ordinals, plain binary relations, and the embeddings between them.

mod binrel;
mod json;
pub(crate) mod matrix;
mod split;

use thiserror::Error;

pub use binrel::{compose_rel, BinRel};
pub use json::{BinRelJson, NodeJson, SplitRelationJson};
pub use split::{
    bar_union, compose_equivalence, compose_split, domain_of, identity_split, restrict_away,
    strict_part, transitive_closure, Node, SplitEquivalence, SplitPreorder, SplitRelation, Tag,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SplError {
    #[error("type mismatch: {}→{} against {}→{}", left.0, left.1, right.0, right.1)]
    TypeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("node {node} out of bounds for {n}→{m}")]
    OutOfBounds { node: Node, n: usize, m: usize },
    #[error("pair ({}, {}) out of bounds for {n}→{m}", pair.0, pair.1)]
    PairOutOfBounds {
        pair: (usize, usize),
        n: usize,
        m: usize,
    },
    #[error("relation is not reflexive")]
    NotReflexive,
    #[error("relation is not transitive")]
    NotTransitive,
    #[error("relation is not symmetric")]
    NotSymmetric,
    #[error("relation is not a total single-valued function")]
    NotAFunction,
    #[error("split preorder is not in the image of the relation embedding")]
    NotRelationLike,
}

/// Loops plus `(a_s, b_t)` for every `(a, b) ∈ R`.
pub fn embed_relation(r: &BinRel) -> SplitPreorder {
    let pairs = r.pairs().map(|(a, b)| (Node::src(a), Node::tgt(b)));
    let rel = SplitRelation::from_pairs(r.n(), r.m(), pairs)
        .expect("in bounds by construction")
        .with_loops();
    // no strict pair leaves a target, so the set is already transitive
    SplitPreorder::new_unchecked(rel)
}

/// Classes of the form `f⁻¹(b) ∪ {b_t}`.
pub fn embed_function(f: &BinRel) -> Result<SplitEquivalence, SplError> {
    let image = f.as_function().ok_or(SplError::NotAFunction)?;
    let (n, m) = (f.n(), f.m());
    let mut rel = SplitRelation::empty(n, m);
    for (a, &b) in image.iter().enumerate() {
        for (x, y) in [(Node::src(a), Node::tgt(b)), (Node::tgt(b), Node::src(a))] {
            rel.insert(x, y)?;
        }
        for (a2, &b2) in image.iter().enumerate() {
            if b == b2 {
                rel.insert(Node::src(a), Node::src(a2))?;
            }
        }
    }
    let p = SplitPreorder::new_unchecked(rel.with_loops());
    SplitEquivalence::new(p)
}

/// True when every strict pair runs from a source point to a target point.
pub fn is_relation_like(p: &SplitPreorder) -> bool {
    strict_part(p)
        .pairs()
        .all(|(x, y)| x.tag == Tag::Src && y.tag == Tag::Tgt)
}

/// Recovers `R` from `embed_relation(R)`.
pub fn unembed_relation(p: &SplitPreorder) -> Result<BinRel, SplError> {
    if !is_relation_like(p) {
        return Err(SplError::NotRelationLike);
    }
    BinRel::from_pairs(
        p.n(),
        p.m(),
        strict_part(p).pairs().map(|(x, y)| (x.pos, y.pos)),
    )
}

/// The strand `{(0_s, 0_t)}` as a 1→1 split preorder.
pub fn down_strand() -> SplitPreorder {
    embed_relation(&BinRel::identity(1))
}

/// A fresh leftmost `↓` strand next to a relation-like `f`: `M S f ∘ ↓_n`.
pub fn semi_embed_m(f: &SplitPreorder) -> Result<SplitPreorder, SplError> {
    if !is_relation_like(f) {
        return Err(SplError::NotRelationLike);
    }
    Ok(down_strand().tensor(f))
}
