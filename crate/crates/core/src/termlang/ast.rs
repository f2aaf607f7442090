use std::fmt;

use thiserror::Error;

/// The three generator signatures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Category {
    PF,
    EF,
    RB,
}

impl Category {
    pub const ALL: [Category; 3] = [Category::PF, Category::EF, Category::RB];

    pub fn name(self) -> &'static str {
        match self {
            Category::PF => "PF",
            Category::EF => "EF",
            Category::RB => "RB",
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Category {
    type Err = TermError;

    fn from_str(s: &str) -> Result<Self, TermError> {
        match s.trim() {
            "PF" | "pf" => Ok(Category::PF),
            "EF" | "ef" => Ok(Category::EF),
            "RB" | "rb" => Ok(Category::RB),
            other => Err(TermError::UnknownCategory(other.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TermType {
    pub src: usize,
    pub tgt: usize,
}

impl TermType {
    pub const fn new(src: usize, tgt: usize) -> Self {
        TermType { src, tgt }
    }
}

impl fmt::Display for TermType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}→{}", self.src, self.tgt)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    Unit,
    Counit,
    Swap,
    H,
    HBar,
    Nabla(usize),
    Delta(usize),
    UnitK(usize),
    CounitK(usize),
}

impl Generator {
    pub fn arity(self) -> TermType {
        use Generator::*;
        match self {
            Unit => TermType::new(0, 1),
            Counit => TermType::new(1, 0),
            Swap | H | HBar => TermType::new(2, 2),
            Nabla(k) => TermType::new(2 * k, k),
            Delta(k) => TermType::new(k, 2 * k),
            UnitK(k) => TermType::new(0, k),
            CounitK(k) => TermType::new(k, 0),
        }
    }

    pub fn belongs_to(self, cat: Category) -> bool {
        use Generator::*;
        match self {
            Unit | Counit | Swap => cat != Category::RB,
            H => cat == Category::PF,
            HBar => cat == Category::EF,
            Nabla(_) | Delta(_) | UnitK(_) | CounitK(_) => cat == Category::RB,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Generator::*;
        match self {
            Unit => f.write_str("unit"),
            Counit => f.write_str("counit"),
            Swap => f.write_str("swap"),
            H => f.write_str("h"),
            HBar => f.write_str("hbar"),
            Nabla(k) => write!(f, "nabla({k})"),
            Delta(k) => write!(f, "delta({k})"),
            UnitK(k) => write!(f, "unitk({k})"),
            CounitK(k) => write!(f, "counitk({k})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("ill-typed composition: after has type {after}, before has type {before}")]
    IllTyped { after: TermType, before: TermType },
    #[error("generator {gen} is not available in {category}")]
    WrongCategory { gen: String, category: Category },
    #[error("incompatible generators: {0}")]
    Mixed(String),
    #[error("category mismatch: {0} against {1}")]
    CategoryMismatch(Category, Category),
    #[error("bad parameters for {name}: {msg}")]
    BadParams { name: String, msg: String },
    #[error("unknown derived constructor {0:?}")]
    UnknownDerived(String),
    #[error("unknown category {0:?}")]
    UnknownCategory(String),
}

impl TermError {
    pub fn bad(name: &str, msg: impl Into<String>) -> Self {
        TermError::BadParams {
            name: name.to_string(),
            msg: msg.into(),
        }
    }
}

/// Arrow-term syntax. Padding lives on generator leaves only; [`pad`]
/// pushes it there.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Id(usize),
    Gen {
        left: usize,
        gen: Generator,
        right: usize,
    },
    /// `Comp(after, before)` is `after ∘ before`.
    Comp(Box<Term>, Box<Term>),
}

impl Term {
    pub fn gen(g: Generator) -> Term {
        Term::Gen {
            left: 0,
            gen: g,
            right: 0,
        }
    }

    pub fn padded_gen(left: usize, g: Generator, right: usize) -> Term {
        Term::Gen {
            left,
            gen: g,
            right,
        }
    }

    pub fn comp(after: Term, before: Term) -> Term {
        Term::Comp(Box::new(after), Box::new(before))
    }

    pub fn type_of(&self) -> Result<TermType, TermError> {
        match self {
            Term::Id(n) => Ok(TermType::new(*n, *n)),
            Term::Gen { left, gen, right } => {
                let a = gen.arity();
                Ok(TermType::new(left + a.src + right, left + a.tgt + right))
            }
            Term::Comp(after, before) => {
                let (a, b) = (after.type_of()?, before.type_of()?);
                if b.tgt != a.src {
                    return Err(TermError::IllTyped {
                        after: a,
                        before: b,
                    });
                }
                Ok(TermType::new(b.src, a.tgt))
            }
        }
    }

    /// Leaves in written order: the first factor is applied last.
    pub fn factors(&self) -> Vec<&Term> {
        let mut out = Vec::new();
        fn go<'a>(t: &'a Term, out: &mut Vec<&'a Term>) {
            match t {
                Term::Comp(a, b) => {
                    go(a, out);
                    go(b, out);
                }
                leaf => out.push(leaf),
            }
        }
        go(self, &mut out);
        out
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Term::Comp(a, b) => a.leaf_count() + b.leaf_count(),
            _ => 1,
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::Comp(a, b) => 1 + a.depth().max(b.depth()),
            _ => 0,
        }
    }

    pub fn generators(&self) -> Vec<Generator> {
        self.factors()
            .into_iter()
            .filter_map(|t| match t {
                Term::Gen { gen, .. } => Some(*gen),
                _ => None,
            })
            .collect()
    }

    pub fn fits(&self, cat: Category) -> Result<(), TermError> {
        match self.generators().into_iter().find(|g| !g.belongs_to(cat)) {
            Some(g) => Err(TermError::WrongCategory {
                gen: g.to_string(),
                category: cat,
            }),
            None => Ok(()),
        }
    }
}

/// `_l t _r`, with nested padding collapsed and composites distributed.
pub fn pad(left: usize, t: &Term, right: usize) -> Term {
    if left == 0 && right == 0 {
        return t.clone();
    }
    match t {
        Term::Id(k) => Term::Id(left + k + right),
        Term::Gen {
            left: l,
            gen,
            right: r,
        } => Term::Gen {
            left: left + l,
            gen: *gen,
            right: r + right,
        },
        Term::Comp(a, b) => Term::comp(pad(left, a, right), pad(left, b, right)),
    }
}

/// Type-checked `after ∘ before`.
pub fn compose(after: Term, before: Term) -> Result<Term, TermError> {
    let (a, b) = (after.type_of()?, before.type_of()?);
    if a.src != b.tgt {
        return Err(TermError::IllTyped {
            after: a,
            before: b,
        });
    }
    Ok(Term::comp(after, before))
}

/// `f + g := _m g ∘ f_k` for `f: n→m`, `g: k→l`.
pub fn plus(f: &Term, g: &Term) -> Result<Term, TermError> {
    let (tf, tg) = (f.type_of()?, g.type_of()?);
    Ok(Term::comp(pad(tf.tgt, g, 0), pad(0, f, tg.src)))
}

/// Right-nested composite of `factors` in written order.
///
/// # Panics
/// On an empty list.
pub fn chain(factors: Vec<Term>) -> Term {
    let mut it = factors.into_iter().rev();
    let mut acc = it.next().expect("chain needs at least one factor");
    for f in it {
        acc = Term::comp(f, acc);
    }
    acc
}

/// `t` with identity factors dropped from its composites.
pub fn drop_ids(t: &Term) -> Term {
    let ty = t.type_of().map(|ty| ty.src);
    let kept: Vec<Term> = t
        .factors()
        .into_iter()
        .filter(|f| !matches!(f, Term::Id(_)))
        .cloned()
        .collect();
    match (kept.is_empty(), ty) {
        (true, Ok(n)) => Term::Id(n),
        (true, Err(_)) => t.clone(),
        (false, _) => chain(kept),
    }
}

/// Builds a chain from the factors of each piece, so nesting is flattened.
pub fn chain_of(pieces: &[&Term]) -> Term {
    chain(pieces.iter().flat_map(|t| t.factors()).cloned().collect())
}

/// Brings two terms into one category, recasting whichever side fits the
/// other's signature.
pub fn unify(f: &ArrowTerm, g: &ArrowTerm) -> Result<(ArrowTerm, ArrowTerm), TermError> {
    if f.category == g.category {
        return Ok((f.clone(), g.clone()));
    }
    if let Ok(g2) = g.recast(f.category) {
        if f.recast(g.category).is_err() {
            return Ok((f.clone(), g2));
        }
    }
    if let Ok(f2) = f.recast(g.category) {
        return Ok((f2, g.clone()));
    }
    Err(TermError::CategoryMismatch(f.category, g.category))
}

/// A well-typed term of a fixed category.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArrowTerm {
    category: Category,
    term: Term,
    ty: TermType,
}

impl ArrowTerm {
    pub fn new(category: Category, term: Term) -> Result<Self, TermError> {
        term.fits(category)?;
        let ty = term.type_of()?;
        Ok(ArrowTerm { category, term, ty })
    }

    pub fn category(&self) -> Category {
        self.category
    }

    pub fn term(&self) -> &Term {
        &self.term
    }

    pub fn into_term(self) -> Term {
        self.term
    }

    pub fn type_of(&self) -> TermType {
        self.ty
    }

    pub fn src(&self) -> usize {
        self.ty.src
    }

    pub fn tgt(&self) -> usize {
        self.ty.tgt
    }

    pub fn pad(&self, left: usize, right: usize) -> ArrowTerm {
        let term = pad(left, &self.term, right);
        let ty = TermType::new(left + self.ty.src + right, left + self.ty.tgt + right);
        ArrowTerm {
            category: self.category,
            term,
            ty,
        }
    }

    /// The same term read in `cat`; fails if a generator is unavailable there.
    pub fn recast(&self, cat: Category) -> Result<ArrowTerm, TermError> {
        self.term.fits(cat)?;
        Ok(ArrowTerm {
            category: cat,
            ..self.clone()
        })
    }

    pub fn then(&self, after: &ArrowTerm) -> Result<ArrowTerm, TermError> {
        after.compose(self)
    }

    /// `self ∘ before`.
    pub fn compose(&self, before: &ArrowTerm) -> Result<ArrowTerm, TermError> {
        self.same_category(before)?;
        let term = compose(self.term.clone(), before.term.clone())?;
        Ok(ArrowTerm {
            category: self.category,
            term,
            ty: TermType::new(before.src(), self.tgt()),
        })
    }

    pub fn plus(&self, g: &ArrowTerm) -> Result<ArrowTerm, TermError> {
        self.same_category(g)?;
        ArrowTerm::new(self.category, plus(&self.term, &g.term)?)
    }

    fn same_category(&self, other: &ArrowTerm) -> Result<(), TermError> {
        if self.category == other.category {
            Ok(())
        } else {
            Err(TermError::CategoryMismatch(self.category, other.category))
        }
    }
}

impl fmt::Display for ArrowTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::print(&self.term))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    #[test]
    fn typing_examples() {
        assert_eq!(
            Term::padded_gen(1, Unit, 0).type_of().unwrap(),
            TermType::new(1, 2)
        );
        assert_eq!(Term::Id(3).type_of().unwrap(), TermType::new(3, 3));
        assert_eq!(Term::gen(Nabla(2)).type_of().unwrap(), TermType::new(4, 2));
        let bad = Term::comp(Term::gen(Unit), Term::gen(Unit));
        assert_eq!(
            bad.type_of(),
            Err(TermError::IllTyped {
                after: TermType::new(0, 1),
                before: TermType::new(0, 1)
            })
        );
    }

    #[test]
    fn pad_examples() {
        let t = Term::comp(Term::gen(H), Term::gen(Swap));
        assert_eq!(pad(0, &t, 0), t);
        assert_eq!(
            pad(1, &Term::padded_gen(2, Swap, 0), 3),
            Term::padded_gen(3, Swap, 3)
        );
        assert_eq!(
            pad(1, &t, 1),
            Term::comp(Term::padded_gen(1, H, 1), Term::padded_gen(1, Swap, 1))
        );
        assert_eq!(pad(2, &Term::Id(1), 0), Term::Id(3));
    }

    #[test]
    fn plus_typing() {
        let p = plus(&Term::gen(Unit), &Term::gen(Counit)).unwrap();
        assert_eq!(p.type_of().unwrap(), TermType::new(1, 1));
        assert_eq!(
            p,
            Term::comp(Term::padded_gen(1, Counit, 0), Term::padded_gen(0, Unit, 1))
        );
    }

    #[test]
    fn chain_is_right_nested() {
        let c = chain(vec![Term::Id(1), Term::Id(1), Term::Id(1)]);
        assert_eq!(
            c,
            Term::comp(Term::Id(1), Term::comp(Term::Id(1), Term::Id(1)))
        );
        let left = Term::comp(Term::comp(Term::Id(1), Term::Id(1)), Term::Id(1));
        assert_eq!(chain_of(&[&left]), c);
    }

    #[test]
    fn category_fit() {
        assert!(ArrowTerm::new(Category::EF, Term::gen(H)).is_err());
        assert!(ArrowTerm::new(Category::RB, Term::gen(Swap)).is_err());
        assert!(ArrowTerm::new(Category::PF, Term::gen(Swap)).is_ok());
        let a = ArrowTerm::new(Category::PF, Term::gen(Unit)).unwrap();
        let b = ArrowTerm::new(Category::EF, Term::gen(Counit)).unwrap();
        assert!(matches!(
            b.compose(&a),
            Err(TermError::CategoryMismatch(..))
        ));
    }
}
