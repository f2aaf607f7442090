//! Derived constructors, each expanded into primitive syntax by its
//! defining equation.

use super::ast::{chain, chain_of, pad, plus, ArrowTerm, Category, Generator, Term, TermError};
use crate::normalform::{eta_term, etabar_term};
use Generator::*;

fn g(left: usize, gen: Generator, right: usize) -> Term {
    Term::padded_gen(left, gen, right)
}

/// `τ`; in RB, `∇² ∘ (!¹_1 + _1!¹)`.
pub fn tau(cat: Category) -> Term {
    match cat {
        Category::RB => {
            let sum = plus(&g(0, UnitK(1), 1), &g(1, UnitK(1), 0)).expect("typed");
            chain_of(&[&Term::gen(Nabla(2)), &sum])
        }
        _ => Term::gen(Swap),
    }
}

/// `H̄` written in PF: `H ∘ τ ∘ H`.
pub fn hbar_in_pf() -> Term {
    chain(vec![Term::gen(H), Term::gen(Swap), Term::gen(H)])
}

/// `(ī,j)^N = (i,j)^N ∘ (j,i)^N` in PF.
pub fn etabar_in_pf(i: usize, j: usize, n: usize) -> Result<Term, TermError> {
    let a = eta_term(i, j, n)?;
    let b = eta_term(j, i, n)?;
    Ok(chain_of(&[a.term(), b.term()]))
}

/// `!^k : 0 → k`, with `!^{k+1} = !_k ∘ !^k` and `!^0 = 1`.
pub fn units(cat: Category, k: usize) -> Term {
    match (cat, k) {
        (_, 0) => Term::Id(0),
        (Category::RB, k) => Term::gen(UnitK(k)),
        (_, k) => chain((0..k).rev().map(|j| g(0, Unit, j)).collect()),
    }
}

/// `¡^k : k → 0`, with `¡^{k+1} = ¡^k ∘ ¡_k` and `¡^0 = 1`.
pub fn counits(cat: Category, k: usize) -> Term {
    match (cat, k) {
        (_, 0) => Term::Id(0),
        (Category::RB, k) => Term::gen(CounitK(k)),
        (_, k) => chain((0..k).map(|j| g(0, Counit, j)).collect()),
    }
}

/// `0^{n,m} = !^m ∘ ¡^n`.
pub fn zero(cat: Category, n: usize, m: usize) -> Term {
    match (n, m) {
        (0, 0) => Term::Id(0),
        (0, m) => units(cat, m),
        (n, 0) => counits(cat, n),
        (n, m) => chain_of(&[&units(cat, m), &counits(cat, n)]),
    }
}

/// `(i choose j)^{n,m} = 0^{i,j} + 1_1 + 0^{n-i-1, m-j-1}` in RB.
pub fn iota(i: usize, j: usize, n: usize, m: usize) -> Result<Term, TermError> {
    if i >= n || j >= m {
        return Err(TermError::bad("iota", format!("({i},{j}) outside {n}→{m}")));
    }
    let cat = Category::RB;
    let head = plus(&zero(cat, i, j), &Term::Id(1))?;
    plus(&head, &zero(cat, n - i - 1, m - j - 1))
}

/// `f ∪ g = ∇^m ∘ (f + g) ∘ Δ^n` in RB.
pub fn union(f: &Term, h: &Term) -> Result<Term, TermError> {
    let (tf, th) = (f.type_of()?, h.type_of()?);
    if tf != th {
        return Err(TermError::bad(
            "union",
            format!("operands of types {tf} and {th}"),
        ));
    }
    let sum = plus(f, h)?;
    Ok(Term::comp(
        Term::gen(Nabla(tf.tgt)),
        Term::comp(sum, Term::gen(Delta(tf.src))),
    ))
}

/// Right-nested union; the empty union is `0^{n,m}`.
pub fn union_all(n: usize, m: usize, terms: &[Term]) -> Result<Term, TermError> {
    let Some((last, init)) = terms.split_last() else {
        return Ok(zero(Category::RB, n, m));
    };
    init.iter()
        .rev()
        .try_fold(last.clone(), |acc, t| union(t, &acc))
}

/// `∇ : 2 → 1`.
pub fn nabla(cat: Category) -> Term {
    match cat {
        Category::PF => chain(vec![
            g(0, Counit, 1),
            Term::gen(H),
            Term::gen(Swap),
            Term::gen(H),
        ]),
        Category::EF => chain(vec![g(0, Counit, 1), Term::gen(HBar)]),
        Category::RB => Term::gen(Nabla(1)),
    }
}

/// `Δ : 1 → 2`.
pub fn delta(cat: Category) -> Term {
    match cat {
        Category::PF => chain(vec![
            Term::gen(H),
            Term::gen(Swap),
            Term::gen(H),
            g(0, Unit, 1),
        ]),
        Category::EF => chain(vec![Term::gen(HBar), g(0, Unit, 1)]),
        Category::RB => Term::gen(Delta(1)),
    }
}

/// `↓ = ¡_1 ∘ H ∘ _1!` (PF).
pub fn down() -> Term {
    chain(vec![g(0, Counit, 1), Term::gen(H), g(1, Unit, 0)])
}

/// `↑ = M¡ ∘ M∇ ∘ M↓_M ∘ Δ_M ∘ !_M` (PF), reading `M f` as `_1 f`.
pub fn up() -> Term {
    let pf = Category::PF;
    chain_of(&[
        &g(1, Counit, 0),
        &pad(1, &nabla(pf), 0),
        &pad(1, &down(), 1),
        &pad(0, &delta(pf), 1),
        &g(0, Unit, 1),
    ])
}

/// The mirrored expansion `¡_M ∘ ∇_M ∘ M↓_M ∘ MΔ ∘ M!` (PF).
pub fn up_alt() -> Term {
    let pf = Category::PF;
    chain_of(&[
        &g(0, Counit, 1),
        &pad(0, &nabla(pf), 1),
        &pad(1, &down(), 1),
        &pad(1, &delta(pf), 0),
        &g(1, Unit, 0),
    ])
}

/// `∇↓ = ∇ ∘ M↓ ∘ ↓_M`; in RB this is `∇¹`.
pub fn nabla_down(cat: Category) -> Term {
    match cat {
        Category::PF => chain_of(&[&nabla(cat), &pad(1, &down(), 0), &pad(0, &down(), 1)]),
        _ => nabla(cat),
    }
}

/// `Δ↓ = M↓ ∘ ↓_M ∘ Δ`; in RB this is `Δ¹`.
pub fn delta_down(cat: Category) -> Term {
    match cat {
        Category::PF => chain_of(&[&pad(1, &down(), 0), &pad(0, &down(), 1), &delta(cat)]),
        _ => delta(cat),
    }
}

/// `♮^n = ¡^n_n ∘ (n−1, 2n−1)‾ ∘ … ∘ (0, n)‾ ∘ _n!^n`, with `♮^0 = 1`.
pub fn natural(cat: Category, n: usize) -> Result<Term, TermError> {
    if n == 0 {
        return Ok(Term::Id(0));
    }
    let bridge = |i: usize| -> Result<Term, TermError> {
        match cat {
            Category::PF => etabar_in_pf(i, n + i, 2 * n),
            Category::EF => etabar_term(i, n + i, 2 * n).map(ArrowTerm::into_term),
            Category::RB => Err(TermError::bad("natural", "not defined in RB")),
        }
    };
    let mut pieces = vec![pad(0, &counits(cat, n), n)];
    for i in (0..n).rev() {
        pieces.push(bridge(i)?);
    }
    pieces.push(pad(n, &units(cat, n), 0));
    Ok(chain_of(&pieces.iter().collect::<Vec<_>>()))
}

/// `τ́^0 = 1_1`, `τ́^{k+1} = τ_k ∘ _1τ́^k`: moves strand `k` to the front.
pub fn tau_acute(cat: Category, k: usize) -> Term {
    if k == 0 {
        return Term::Id(1);
    }
    chain_of(&[
        &pad(0, &tau(cat), k - 1),
        &pad(1, &tau_acute(cat, k - 1), 0),
    ])
}

/// `τ̀^0 = 1_1`, `τ̀^{k+1} = _kτ ∘ τ̀^k_1`: moves strand `0` to the back.
pub fn tau_grave(cat: Category, k: usize) -> Term {
    if k == 0 {
        return Term::Id(1);
    }
    chain_of(&[
        &pad(k - 1, &tau(cat), 0),
        &pad(0, &tau_grave(cat, k - 1), 1),
    ])
}

/// Names accepted by [`derived`].
pub const DERIVED_NAMES: &[&str] = &[
    "nabla",
    "delta",
    "down",
    "up",
    "up-alt",
    "nabla-down",
    "delta-down",
    "tau",
    "hbar",
    "units",
    "counits",
    "zero",
    "natural",
    "eta",
    "etabar",
    "iota",
    "tau-acute",
    "tau-grave",
];

/// Looks up a derived constructor by name. `nabla-PF` style suffixes pick
/// the category.
pub fn derived(cat: Category, name: &str, params: &[usize]) -> Result<ArrowTerm, TermError> {
    let (base, cat) = match name.rsplit_once('-') {
        Some((b, suffix)) if suffix.parse::<Category>().is_ok() => {
            (b, suffix.parse().expect("checked"))
        }
        _ => (name, cat),
    };
    let want = |k: usize| -> Result<(), TermError> {
        if params.len() == k {
            Ok(())
        } else {
            Err(TermError::bad(
                base,
                format!("expected {k} parameters, got {}", params.len()),
            ))
        }
    };
    let p = params;
    let term = match base {
        "nabla" => want(0).map(|_| nabla(cat))?,
        "delta" => want(0).map(|_| delta(cat))?,
        "down" => want(0).map(|_| down())?,
        "up" => want(0).map(|_| up())?,
        "up-alt" => want(0).map(|_| up_alt())?,
        "nabla-down" => want(0).map(|_| nabla_down(cat))?,
        "delta-down" => want(0).map(|_| delta_down(cat))?,
        "tau" => want(0).map(|_| tau(cat))?,
        "hbar" => want(0).map(|_| {
            if cat == Category::PF {
                hbar_in_pf()
            } else {
                Term::gen(HBar)
            }
        })?,
        "units" => want(1).map(|_| units(cat, p[0]))?,
        "counits" => want(1).map(|_| counits(cat, p[0]))?,
        "zero" => want(2).map(|_| zero(cat, p[0], p[1]))?,
        "natural" => {
            want(1)?;
            natural(cat, p[0])?
        }
        "eta" => {
            want(3)?;
            eta_term(p[0], p[1], p[2])?.into_term()
        }
        "etabar" => {
            want(3)?;
            match cat {
                Category::PF => etabar_in_pf(p[0], p[1], p[2])?,
                _ => etabar_term(p[0], p[1], p[2])?.into_term(),
            }
        }
        "iota" => {
            want(4)?;
            iota(p[0], p[1], p[2], p[3])?
        }
        "tau-acute" => want(1).map(|_| tau_acute(cat, p[0]))?,
        "tau-grave" => want(1).map(|_| tau_grave(cat, p[0]))?,
        _ => return Err(TermError::UnknownDerived(name.to_string())),
    };
    ArrowTerm::new(cat, term)
}
