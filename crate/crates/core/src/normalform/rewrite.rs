use super::catalog::{Axiom, Instance};
use super::NfError;
use crate::termlang::{chain, ArrowTerm, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    LeftToRight,
    RightToLeft,
}

impl std::str::FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ltr" | "lr" | "forward" => Ok(Direction::LeftToRight),
            "rtl" | "rl" | "backward" => Ok(Direction::RightToLeft),
            other => Err(format!("unknown direction {other:?}")),
        }
    }
}

fn oriented(a: &Axiom, inst: &Instance, dir: Direction) -> Result<(ArrowTerm, ArrowTerm), NfError> {
    let (l, r) = a.instantiate(inst)?;
    Ok(match dir {
        Direction::LeftToRight => (l, r),
        Direction::RightToLeft => (r, l),
    })
}

fn owned_factors(t: &Term) -> Vec<Term> {
    t.factors().into_iter().cloned().collect()
}

/// Factor positions of `t` where the instantiated side occurs as a
/// contiguous block of factors.
pub fn matches(
    t: &ArrowTerm,
    a: &Axiom,
    inst: &Instance,
    dir: Direction,
) -> Result<Vec<usize>, NfError> {
    let (from, _) = oriented(a, inst, dir)?;
    let (hay, needle) = (owned_factors(t.term()), owned_factors(from.term()));
    if needle.len() > hay.len() {
        return Ok(Vec::new());
    }
    Ok((0..=hay.len() - needle.len())
        .filter(|&i| hay[i..i + needle.len()] == needle[..])
        .collect())
}

/// Replaces the block of factors starting at `position` (written order)
/// by the other side of the instantiated equation.
pub fn apply_axiom(
    t: &ArrowTerm,
    a: &Axiom,
    inst: &Instance,
    position: usize,
    dir: Direction,
) -> Result<ArrowTerm, NfError> {
    if a.category != t.category() {
        return Err(NfError::WrongCategory(a.category));
    }
    let (from, to) = oriented(a, inst, dir)?;
    let hay = owned_factors(t.term());
    let needle = owned_factors(from.term());
    let end = position + needle.len();
    if end > hay.len() || hay[position..end] != needle[..] {
        return Err(NfError::NoMatch {
            axiom: a.name.clone(),
            position,
        });
    }
    let mut out: Vec<Term> = hay[..position].to_vec();
    out.extend(owned_factors(to.term()));
    out.extend_from_slice(&hay[end..]);
    Ok(ArrowTerm::new(t.category(), chain(out))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normalform::find_axiom;
    use crate::semantics::eval;
    use crate::termlang::{parse, parse_with, print, Category};

    #[test]
    fn unit_counit_at_root() {
        let t = parse_with("counit . unit", Some(Category::PF)).unwrap();
        let a = find_axiom(Category::PF, "(0·0)").unwrap();
        let out = apply_axiom(&t, &a, &Instance::nats(&[]), 0, Direction::LeftToRight).unwrap();
        assert_eq!(*out.term(), Term::Id(0));
    }

    #[test]
    fn swap_swap_under_padding() {
        let t = parse("pad(1, swap . swap, 0)").unwrap();
        let a = find_axiom(t.category(), "(ττ)").unwrap();
        let inst = Instance::nats(&[]).padded(1, 0);
        assert_eq!(
            matches(&t, &a, &inst, Direction::LeftToRight).unwrap(),
            vec![0]
        );
        let out = apply_axiom(&t, &a, &inst, 0, Direction::LeftToRight).unwrap();
        assert_eq!(print(out.term()), "id(3)");
    }

    #[test]
    fn inner_block_and_reverse() {
        let t = parse("h . h . h . swap").unwrap();
        let a = find_axiom(Category::PF, "(H idemp)").unwrap();
        let inst = Instance::nats(&[]);
        assert_eq!(
            matches(&t, &a, &inst, Direction::LeftToRight).unwrap(),
            vec![0, 1]
        );
        let once = apply_axiom(&t, &a, &inst, 1, Direction::LeftToRight).unwrap();
        assert_eq!(print(once.term()), "h . h . swap");
        assert_eq!(eval(&once), eval(&t));
        let back = apply_axiom(&once, &a, &inst, 0, Direction::RightToLeft).unwrap();
        assert_eq!(print(back.term()), "h . h . h . swap");
    }

    #[test]
    fn no_match() {
        let t = parse("h . swap").unwrap();
        let a = find_axiom(Category::PF, "(ττ)").unwrap();
        let err = apply_axiom(&t, &a, &Instance::nats(&[]), 0, Direction::LeftToRight).unwrap_err();
        assert!(matches!(err, NfError::NoMatch { position: 0, .. }));
        let rb = find_axiom(Category::RB, "(∇Δ)").unwrap();
        assert!(matches!(
            apply_axiom(&t, &rb, &Instance::nats(&[1]), 0, Direction::LeftToRight),
            Err(NfError::WrongCategory(_))
        ));
    }
}
