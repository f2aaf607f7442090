use std::collections::BTreeSet;
use std::fmt;

use super::matrix::BitMatrix;
use super::SplError;

/// Which copy of the disjoint union a point lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    Src,
    Tgt,
}

/// A point of `n + m`: source points order before target points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Node {
    pub tag: Tag,
    pub pos: usize,
}

impl Node {
    pub const fn src(pos: usize) -> Self {
        Node { tag: Tag::Src, pos }
    }

    pub const fn tgt(pos: usize) -> Self {
        Node { tag: Tag::Tgt, pos }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tag {
            Tag::Src => write!(f, "{}s", self.pos),
            Tag::Tgt => write!(f, "{}t", self.pos),
        }
    }
}

/// An arbitrary set of ordered pairs over the points of `n + m`.
///
/// Stored as a dense adjacency matrix indexed by the flat position of a
/// node (`k_s ↦ k`, `k_t ↦ n + k`), so equality is extensional.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SplitRelation {
    n: usize,
    m: usize,
    bits: BitMatrix,
}

impl SplitRelation {
    pub fn empty(n: usize, m: usize) -> Self {
        SplitRelation {
            n,
            m,
            bits: BitMatrix::new(n + m, n + m),
        }
    }

    pub fn from_pairs<I>(n: usize, m: usize, pairs: I) -> Result<Self, SplError>
    where
        I: IntoIterator<Item = (Node, Node)>,
    {
        let mut r = SplitRelation::empty(n, m);
        for (x, y) in pairs {
            r.insert(x, y)?;
        }
        Ok(r)
    }

    pub(crate) fn from_bits(n: usize, m: usize, bits: BitMatrix) -> Self {
        debug_assert_eq!(bits.rows(), n + m);
        SplitRelation { n, m, bits }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn node_count(&self) -> usize {
        self.n + self.m
    }

    pub fn flat(&self, x: Node) -> usize {
        match x.tag {
            Tag::Src => x.pos,
            Tag::Tgt => self.n + x.pos,
        }
    }

    pub fn unflat(&self, k: usize) -> Node {
        if k < self.n {
            Node::src(k)
        } else {
            Node::tgt(k - self.n)
        }
    }

    fn check(&self, x: Node) -> Result<usize, SplError> {
        let bound = match x.tag {
            Tag::Src => self.n,
            Tag::Tgt => self.m,
        };
        if x.pos < bound {
            Ok(self.flat(x))
        } else {
            Err(SplError::OutOfBounds {
                node: x,
                n: self.n,
                m: self.m,
            })
        }
    }

    pub fn insert(&mut self, x: Node, y: Node) -> Result<(), SplError> {
        let (i, j) = (self.check(x)?, self.check(y)?);
        self.bits.set(i, j);
        Ok(())
    }

    pub fn contains(&self, x: Node, y: Node) -> bool {
        match (self.check(x), self.check(y)) {
            (Ok(i), Ok(j)) => self.bits.get(i, j),
            _ => false,
        }
    }

    pub fn contains_flat(&self, i: usize, j: usize) -> bool {
        self.bits.get(i, j)
    }

    pub fn len(&self) -> usize {
        self.bits.count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Pairs in canonical order.
    pub fn pairs(&self) -> impl Iterator<Item = (Node, Node)> + '_ {
        self.bits
            .ones()
            .map(|(i, j)| (self.unflat(i), self.unflat(j)))
    }

    pub fn flat_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.bits.ones()
    }

    pub fn nodes(&self) -> impl Iterator<Item = Node> {
        let (n, m) = (self.n, self.m);
        (0..n).map(Node::src).chain((0..m).map(Node::tgt))
    }

    pub fn is_subset(&self, other: &SplitRelation) -> bool {
        (self.n, self.m) == (other.n, other.m) && self.bits.is_subset(&other.bits)
    }

    pub fn union(&self, other: &SplitRelation) -> Result<SplitRelation, SplError> {
        self.same_type(other)?;
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        Ok(SplitRelation::from_bits(self.n, self.m, bits))
    }

    fn same_type(&self, other: &SplitRelation) -> Result<(), SplError> {
        if (self.n, self.m) == (other.n, other.m) {
            Ok(())
        } else {
            Err(SplError::TypeMismatch {
                left: (self.n, self.m),
                right: (other.n, other.m),
            })
        }
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.node_count()).all(|i| self.bits.get(i, i))
    }

    pub fn is_transitive(&self) -> bool {
        let mut c = self.bits.clone();
        c.close_transitively();
        c == self.bits
    }

    pub fn is_symmetric(&self) -> bool {
        self.bits.transpose() == self.bits
    }

    pub fn converse(&self) -> SplitRelation {
        SplitRelation::from_bits(self.n, self.m, self.bits.transpose())
    }

    /// Adds every loop `(x, x)`.
    pub fn with_loops(&self) -> SplitRelation {
        let mut bits = self.bits.clone();
        for i in 0..self.node_count() {
            bits.set(i, i);
        }
        SplitRelation::from_bits(self.n, self.m, bits)
    }
}

impl fmt::Debug for SplitRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}→{} {{", self.n, self.m)?;
        for (k, (x, y)) in self.pairs().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({x},{y})")?;
        }
        write!(f, "}}")
    }
}

/// A reflexive, transitive split relation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SplitPreorder(SplitRelation);

impl SplitPreorder {
    pub fn new(rel: SplitRelation) -> Result<Self, SplError> {
        if !rel.is_reflexive() {
            return Err(SplError::NotReflexive);
        }
        if !rel.is_transitive() {
            return Err(SplError::NotTransitive);
        }
        Ok(SplitPreorder(rel))
    }

    pub(crate) fn new_unchecked(rel: SplitRelation) -> Self {
        debug_assert!(rel.is_reflexive() && rel.is_transitive());
        SplitPreorder(rel)
    }

    /// The smallest split preorder containing `pairs`.
    pub fn generated_by<I>(n: usize, m: usize, pairs: I) -> Result<Self, SplError>
    where
        I: IntoIterator<Item = (Node, Node)>,
    {
        let rel = SplitRelation::from_pairs(n, m, pairs)?.with_loops();
        Ok(SplitPreorder(transitive_closure(&rel)))
    }

    pub fn discrete(n: usize, m: usize) -> Self {
        SplitPreorder(SplitRelation::empty(n, m).with_loops())
    }

    pub fn relation(&self) -> &SplitRelation {
        &self.0
    }

    pub fn into_relation(self) -> SplitRelation {
        self.0
    }

    pub fn n(&self) -> usize {
        self.0.n
    }

    pub fn m(&self) -> usize {
        self.0.m
    }

    pub fn contains(&self, x: Node, y: Node) -> bool {
        self.0.contains(x, y)
    }

    pub fn is_equivalence(&self) -> bool {
        self.0.is_symmetric()
    }

    /// Places `other` to the right of `self`.
    pub fn tensor(&self, other: &SplitPreorder) -> SplitPreorder {
        let (n1, m1, n2, m2) = (self.n(), self.m(), other.n(), other.m());
        let (n, m) = (n1 + n2, m1 + m2);
        let mut bits = BitMatrix::new(n + m, n + m);
        let left = |k: usize| if k < n1 { k } else { n + (k - n1) };
        let right = |k: usize| if k < n2 { n1 + k } else { n + m1 + (k - n2) };
        for (i, j) in self.0.bits.ones() {
            bits.set(left(i), left(j));
        }
        for (i, j) in other.0.bits.ones() {
            bits.set(right(i), right(j));
        }
        SplitPreorder(SplitRelation::from_bits(n, m, bits))
    }

    /// `_l P _r`: identity strands on both sides.
    pub fn padded(&self, l: usize, r: usize) -> SplitPreorder {
        if l == 0 && r == 0 {
            return self.clone();
        }
        identity_preorder(l)
            .tensor(self)
            .tensor(&identity_preorder(r))
    }
}

impl fmt::Debug for SplitPreorder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A symmetric split preorder.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SplitEquivalence(SplitPreorder);

impl SplitEquivalence {
    pub fn new(p: SplitPreorder) -> Result<Self, SplError> {
        if p.is_equivalence() {
            Ok(SplitEquivalence(p))
        } else {
            Err(SplError::NotSymmetric)
        }
    }

    pub fn preorder(&self) -> &SplitPreorder {
        &self.0
    }

    pub fn into_preorder(self) -> SplitPreorder {
        self.0
    }

    pub fn relation(&self) -> &SplitRelation {
        self.0.relation()
    }

    /// Equivalence classes, each sorted, in order of their least member.
    pub fn classes(&self) -> Vec<Vec<Node>> {
        let rel = self.relation();
        let mut seen = vec![false; rel.node_count()];
        let mut out = Vec::new();
        for i in 0..rel.node_count() {
            if seen[i] {
                continue;
            }
            let class: Vec<usize> = (0..rel.node_count())
                .filter(|&j| rel.contains_flat(i, j))
                .collect();
            for &j in &class {
                seen[j] = true;
            }
            out.push(class.into_iter().map(|j| rel.unflat(j)).collect());
        }
        out
    }
}

impl fmt::Debug for SplitEquivalence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn domain_of(r: &SplitRelation) -> BTreeSet<Node> {
    let mut out = BTreeSet::new();
    for (x, y) in r.pairs() {
        out.insert(x);
        out.insert(y);
    }
    out
}

/// Transitive closure; for a relation reflexive on its domain this is `Tr`.
pub fn transitive_closure(p: &SplitRelation) -> SplitRelation {
    let mut bits = p.bits.clone();
    bits.close_transitively();
    SplitRelation::from_bits(p.n, p.m, bits)
}

/// `Tr(P ∪ Q)`.
pub fn bar_union(p: &SplitRelation, q: &SplitRelation) -> Result<SplitRelation, SplError> {
    Ok(transitive_closure(&p.union(q)?))
}

/// Drops every pair with an endpoint in `x`.
pub fn restrict_away(r: &SplitRelation, x: &BTreeSet<Node>) -> SplitRelation {
    let mut bits = r.bits.clone();
    let gone: Vec<usize> = x
        .iter()
        .filter(|node| r.check(**node).is_ok())
        .map(|node| r.flat(*node))
        .collect();
    for (i, j) in r.bits.ones() {
        if gone.contains(&i) || gone.contains(&j) {
            bits.clear(i, j);
        }
    }
    SplitRelation::from_bits(r.n, r.m, bits)
}

/// `Q ∘ P`.
///
/// The universe is `n + mid + k`: P's targets and Q's sources share the
/// middle block, which is closed over and then deleted.
pub fn compose_split(p: &SplitPreorder, q: &SplitPreorder) -> Result<SplitPreorder, SplError> {
    let (n, mid, k) = (p.n(), p.m(), q.m());
    if q.n() != mid {
        return Err(SplError::TypeMismatch {
            left: (p.n(), p.m()),
            right: (q.n(), q.m()),
        });
    }
    let total = n + mid + k;
    let mut u = BitMatrix::new(total, total);
    // P: src ↦ 0.., tgt ↦ n..   Q: src ↦ n.., tgt ↦ n+mid..
    for (i, j) in p.0.bits.ones() {
        u.set(i, j);
    }
    for (i, j) in q.0.bits.ones() {
        u.set(n + i, n + j);
    }
    u.close_transitively();
    let keep = |i: usize| {
        if i < n {
            Some(i)
        } else if i >= n + mid {
            Some(i - mid)
        } else {
            None
        }
    };
    let mut out = BitMatrix::new(n + k, n + k);
    for (i, j) in u.ones() {
        if let (Some(a), Some(b)) = (keep(i), keep(j)) {
            out.set(a, b);
        }
    }
    Ok(SplitPreorder(SplitRelation::from_bits(n, k, out)))
}

fn identity_preorder(n: usize) -> SplitPreorder {
    let mut r = SplitRelation::empty(n, n);
    for i in 0..n {
        for (a, b) in [(i, i), (i, n + i), (n + i, i), (n + i, n + i)] {
            r.bits.set(a, b);
        }
    }
    SplitPreorder(r)
}

pub fn identity_split(n: usize) -> SplitEquivalence {
    SplitEquivalence(identity_preorder(n))
}

pub fn compose_equivalence(
    p: &SplitEquivalence,
    q: &SplitEquivalence,
) -> Result<SplitEquivalence, SplError> {
    compose_split(&p.0, &q.0).map(SplitEquivalence)
}

pub fn strict_part(p: &SplitPreorder) -> SplitRelation {
    let mut bits = p.0.bits.clone();
    for i in 0..p.0.node_count() {
        bits.clear(i, i);
    }
    SplitRelation::from_bits(p.n(), p.m(), bits)
}
