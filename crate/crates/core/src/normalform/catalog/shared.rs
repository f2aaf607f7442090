//! Term helpers and the schemas common to several categories.

use super::{Axiom, Origin};
use crate::normalform::eta::{eta_term, etabar_term};
use crate::termlang::derived::{counits, delta, nabla, natural, tau, units};
use crate::termlang::{chain, pad, ArrowTerm, Category, Generator, Term};

pub(super) fn g(left: usize, gen: Generator, right: usize) -> Term {
    Term::padded_gen(left, gen, right)
}

pub(super) fn id(n: usize) -> Term {
    Term::Id(n)
}

pub(super) fn p(left: usize, t: &Term, right: usize) -> Term {
    pad(left, t, right)
}

/// Written-order composite; nested composites are flattened.
pub(super) fn c(parts: Vec<Term>) -> Term {
    chain(parts.iter().flat_map(|t| t.factors()).cloned().collect())
}

pub(super) fn when(cond: bool) -> Option<()> {
    cond.then_some(())
}

/// `l -_p 1`.
pub(super) fn dec(l: usize, p: usize) -> usize {
    if l > p {
        l - 1
    } else {
        l
    }
}

/// The eta arrow of `cat`: ordinary in PF, overlined in EF.
pub(super) fn eta(cat: Category, i: usize, j: usize, n: usize) -> Option<Term> {
    let t = match cat {
        Category::PF => eta_term(i, j, n),
        _ => etabar_term(i, j, n),
    };
    t.ok().map(ArrowTerm::into_term)
}

/// The bridge generator: `H` in PF, `H̄` in EF.
pub(super) fn bridge(cat: Category) -> Generator {
    if cat == Category::PF {
        Generator::H
    } else {
        Generator::HBar
    }
}

pub(super) fn unit1(cat: Category) -> Term {
    units(cat, 1)
}

pub(super) fn counit1(cat: Category) -> Term {
    counits(cat, 1)
}

/// Name, source, target, left and right eta sets.
type FixedEtas = (
    &'static str,
    usize,
    usize,
    &'static [(usize, usize)],
    &'static [(usize, usize)],
);

fn law(name: &str, cat: Category, lhs: Term, rhs: Term) -> Axiom {
    Axiom::new(name, cat, Origin::Derived, &[], move |_| {
        Some((lhs.clone(), rhs.clone()))
    })
}

/// Monad, comonad and commutativity equations for `∇`, `Δ`, `!`, `¡`, `τ`;
/// `one` is the identity of the monad.
pub(super) fn monad_laws(
    cat: Category,
    tag: &str,
    nab: &Term,
    del: &Term,
    one: &Term,
) -> Vec<Axiom> {
    let (u, cu, t) = (unit1(cat), counit1(cat), tau(cat));
    let name = |s: &str| format!("{tag}{s}");
    vec![
        law(
            &name("monad assoc"),
            cat,
            c(vec![nab.clone(), p(0, nab, 1)]),
            c(vec![nab.clone(), p(1, nab, 0)]),
        ),
        law(
            &name("monad unit 1"),
            cat,
            c(vec![nab.clone(), p(0, &u, 1)]),
            one.clone(),
        ),
        law(
            &name("monad unit 2"),
            cat,
            c(vec![nab.clone(), p(1, &u, 0)]),
            one.clone(),
        ),
        law(
            &name("comonad coassoc"),
            cat,
            c(vec![p(0, del, 1), del.clone()]),
            c(vec![p(1, del, 0), del.clone()]),
        ),
        law(
            &name("comonad counit 1"),
            cat,
            c(vec![p(0, &cu, 1), del.clone()]),
            one.clone(),
        ),
        law(
            &name("comonad counit 2"),
            cat,
            c(vec![p(1, &cu, 0), del.clone()]),
            one.clone(),
        ),
        law(
            &name("∇ com"),
            cat,
            c(vec![nab.clone(), t.clone()]),
            nab.clone(),
        ),
        law(
            &name("Δ com"),
            cat,
            c(vec![t.clone(), del.clone()]),
            del.clone(),
        ),
        law(
            &name("∇ sym"),
            cat,
            c(vec![t.clone(), p(0, nab, 1)]),
            c(vec![p(1, nab, 0), p(0, &t, 1), p(1, &t, 0)]),
        ),
        law(
            &name("Δ sym"),
            cat,
            c(vec![p(0, del, 1), t.clone()]),
            c(vec![p(1, &t, 0), p(0, &t, 1), p(1, del, 0)]),
        ),
    ]
}

/// The Frobenius equations and separability, for PF and EF.
pub(super) fn frobenius_laws(cat: Category) -> Vec<Axiom> {
    let (nab, del) = (nabla(cat), delta(cat));
    let mut out = monad_laws(cat, "", &nab, &del, &id(1));
    let mid = c(vec![del.clone(), nab.clone()]);
    out.push(law(
        "Frobenius 1",
        cat,
        c(vec![p(1, &nab, 0), p(0, &del, 1)]),
        mid.clone(),
    ));
    out.push(law(
        "Frobenius 2",
        cat,
        mid,
        c(vec![p(0, &nab, 1), p(1, &del, 0)]),
    ));
    out.push(law("separability", cat, c(vec![nab, del]), id(1)));
    out
}

/// The eta-arrow algebra, ordinary in PF and overlined in EF.
pub(super) fn eta_laws(cat: Category) -> Vec<Axiom> {
    use Generator::*;
    let bridge = bridge(cat);
    let d = Origin::Derived;
    let mut out = vec![
        Axiom::new("(H def)", cat, d, &["n", "m"], move |v| {
            let (n, m) = (v[0], v[1]);
            Some((g(n, bridge, m), eta(cat, n, n + 1, n + 2 + m)?))
        }),
        Axiom::new("(τ def)", cat, d, &["n", "m"], move |v| {
            let (n, m) = (v[0], v[1]);
            let size = n + 3 + m;
            let rhs = c(vec![
                g(n, Counit, 2 + m),
                eta(cat, n + 2, n, size)?,
                eta(cat, n, n + 2, size)?,
                g(n + 2, Unit, m),
            ]);
            Some((g(n, Swap, m), rhs))
        }),
        Axiom::new("(η !)", cat, d, &["i", "j", "p", "q"], move |v| {
            let (i, j, pp, q) = (v[0], v[1], v[2], v[3]);
            when(i.min(j) < pp && pp < i.max(j) && i.max(j) < pp + 1 + q)?;
            let lhs = c(vec![eta(cat, i, j, pp + 1 + q)?, g(pp, Unit, q)]);
            let rhs = c(vec![
                g(pp, Unit, q),
                eta(cat, dec(i, pp), dec(j, pp), pp + q)?,
            ]);
            Some((lhs, rhs))
        })
        .no_outer(),
        Axiom::new("(η ¡)", cat, d, &["i", "j", "p", "q"], move |v| {
            let (i, j, pp, q) = (v[0], v[1], v[2], v[3]);
            when(i.min(j) < pp && pp < i.max(j) && i.max(j) < pp + 1 + q)?;
            let lhs = c(vec![g(pp, Counit, q), eta(cat, i, j, pp + 1 + q)?]);
            let rhs = c(vec![
                eta(cat, dec(i, pp), dec(j, pp), pp + q)?,
                g(pp, Counit, q),
            ]);
            Some((lhs, rhs))
        })
        .no_outer(),
        Axiom::new("(η idemp)", cat, d, &["i", "j", "n"], move |v| {
            let e = eta(cat, v[0], v[1], v[2])?;
            Some((c(vec![e.clone(), e.clone()]), e))
        })
        .no_outer(),
        Axiom::new("(η perm)", cat, d, &["i", "j", "k", "l", "n"], move |v| {
            let a = eta(cat, v[0], v[1], v[4])?;
            let b = eta(cat, v[2], v[3], v[4])?;
            Some((c(vec![a.clone(), b.clone()]), c(vec![b, a])))
        })
        .no_outer(),
        Axiom::new("(η Tr)", cat, d, &["m", "p", "r", "n"], move |v| {
            let (m, pp, r, n) = (v[0], v[1], v[2], v[3]);
            when(m != r)?;
            let (a, b) = (eta(cat, m, pp, n)?, eta(cat, pp, r, n)?);
            Some((
                c(vec![a.clone(), b.clone()]),
                c(vec![a, b, eta(cat, m, r, n)?]),
            ))
        })
        .no_outer(),
        Axiom::new("(η k·l)", cat, d, &["p", "q", "a", "b"], move |v| {
            eta_kl(cat, v[0], v[1], v[2], v[3])
        })
        .range("a", 1, 15)
        .range("b", 1, 15)
        .no_outer(),
        Axiom::new("(η k·0)", cat, d, &["p", "q", "a"], move |v| {
            eta_k0(cat, v[0], v[1], v[2], true)
        })
        .range("a", 1, 15)
        .no_outer(),
        Axiom::new("(η 0·l)", cat, d, &["p", "q", "b"], move |v| {
            eta_k0(cat, v[0], v[1], v[2], false)
        })
        .range("b", 1, 15)
        .no_outer(),
        Axiom::new("(H Tr)", cat, d, &[], move |_| {
            let lhs = c(vec![g(0, bridge, 1), g(1, bridge, 0)]);
            Some((lhs.clone(), c(vec![lhs, eta(cat, 0, 2, 3)?])))
        }),
        Axiom::new("♮ = 1", cat, d, &["n"], move |v| {
            Some((natural(cat, v[0]).ok()?, id(v[0])))
        }),
    ];
    let fixed: [FixedEtas; 5] = [
        (
            "(η 1·2)",
            1,
            2,
            &[(0, 1), (1, 2), (1, 3)],
            &[(0, 1), (0, 2)],
        ),
        (
            "(η 2·1)",
            2,
            1,
            &[(0, 2), (1, 2), (2, 3)],
            &[(0, 2), (1, 2)],
        ),
        ("(η 1·1)", 1, 1, &[(0, 1), (1, 2)], &[(0, 1)]),
        ("(η 1·0)", 1, 0, &[(0, 1)], &[]),
        ("(η 0·1)", 0, 1, &[(0, 1)], &[]),
    ];
    for (name, pp, q, lhs, rhs) in fixed {
        out.push(Axiom::new(name, cat, d, &[], move |_| {
            let mut l = vec![g(pp, Counit, q)];
            for &(i, j) in lhs {
                l.push(eta(cat, i, j, pp + 1 + q)?);
            }
            l.push(g(pp, Unit, q));
            let r = rhs
                .iter()
                .map(|&(i, j)| eta(cat, i, j, pp + q))
                .collect::<Option<Vec<_>>>()?;
            Some((c(l), if r.is_empty() { id(pp + q) } else { c(r) }))
        }));
    }
    out
}

fn mask_members(mask: usize, size: usize, p: usize) -> Option<Vec<usize>> {
    when(mask >> size == 0 && mask & (1 << p) == 0)?;
    Some((0..size).filter(|&i| mask & (1 << i) != 0).collect())
}

/// `_p¡_q ∘ {(m_i,p)}° ∘ {(p,r_j)}° ∘ _p!_q`, the sets given as bit masks.
fn eta_kl(cat: Category, pp: usize, q: usize, a: usize, b: usize) -> Option<(Term, Term)> {
    when(pp + q <= 3)?;
    let size = pp + 1 + q;
    let (ms, rs) = (mask_members(a, size, pp)?, mask_members(b, size, pp)?);
    let mut lhs = vec![g(pp, Generator::Counit, q)];
    for &m in &ms {
        lhs.push(eta(cat, m, pp, size)?);
    }
    for &r in &rs {
        lhs.push(eta(cat, pp, r, size)?);
    }
    lhs.push(g(pp, Generator::Unit, q));
    let mut rhs = Vec::new();
    for &m in &ms {
        for &r in &rs {
            let (x, y) = (dec(m, pp), dec(r, pp));
            if x != y {
                rhs.push(eta(cat, x, y, pp + q)?);
            }
        }
    }
    Some((c(lhs), if rhs.is_empty() { id(pp + q) } else { c(rhs) }))
}

fn eta_k0(cat: Category, pp: usize, q: usize, mask: usize, into_p: bool) -> Option<(Term, Term)> {
    when(pp + q <= 3)?;
    let size = pp + 1 + q;
    let mut lhs = vec![g(pp, Generator::Counit, q)];
    for m in mask_members(mask, size, pp)? {
        lhs.push(if into_p {
            eta(cat, m, pp, size)?
        } else {
            eta(cat, pp, m, size)?
        });
    }
    lhs.push(g(pp, Generator::Unit, q));
    // In EF the bridge is symmetric, so erasing `p` leaves its neighbours bonded.
    let mut rhs = Vec::new();
    if cat == Category::EF {
        let ms = mask_members(mask, size, pp)?;
        for (k, &x) in ms.iter().enumerate() {
            for &y in &ms[k + 1..] {
                rhs.push(eta(cat, dec(x, pp), dec(y, pp), pp + q)?);
            }
        }
    }
    Some((c(lhs), if rhs.is_empty() { id(pp + q) } else { c(rhs) }))
}

/// `(cat 1)` as two entries, and `(fun 1)`.
pub(super) fn category_laws(cat: Category) -> Vec<Axiom> {
    let pres = Origin::Presentation;
    vec![
        Axiom::with_terms("(cat 1) right", cat, pres, &[], 1, move |_, f| {
            let ty = f[0].type_of().ok()?;
            Some((c(vec![f[0].clone(), id(ty.src)]), f[0].clone()))
        }),
        Axiom::with_terms("(cat 1) left", cat, pres, &[], 1, move |_, f| {
            let ty = f[0].type_of().ok()?;
            Some((f[0].clone(), c(vec![id(ty.tgt), f[0].clone()])))
        }),
        Axiom::new("(fun 1)", cat, pres, &[], |_| {
            Some((p(1, &id(0), 0), id(1)))
        }),
    ]
}

/// `(fl)`: `_{q+r}θ ∘ ξ_{r+k} = ξ_{r+l} ∘ _{p+r}θ` for `ξ: p→q`, `θ: k→l`
/// drawn from `gens`.
pub(super) fn fl(cat: Category, gens: Vec<Generator>) -> Axiom {
    let top = gens.len() - 1;
    Axiom::new(
        "(fl)",
        cat,
        Origin::Presentation,
        &["ξ", "θ", "r"],
        move |v| {
            let (xi, th, r) = (gens[v[0]], gens[v[1]], v[2]);
            let (a, b) = (xi.arity(), th.arity());
            let lhs = c(vec![g(a.tgt + r, th, 0), g(0, xi, r + b.src)]);
            let rhs = c(vec![g(0, xi, r + b.tgt), g(a.src + r, th, 0)]);
            Some((lhs, rhs))
        },
    )
    .range("ξ", 0, top)
    .range("θ", 0, top)
    .no_outer()
}

/// `(ττ)`, `(τ YB)`, `(τ!)`, `(τ¡)` and `(0·0)`, shared by PF and EF.
pub(super) fn symmetry_laws(cat: Category) -> Vec<Axiom> {
    use Generator::*;
    let pres = |name: &str, lhs: Term, rhs: Term| {
        Axiom::new(name, cat, Origin::Presentation, &[], move |_| {
            Some((lhs.clone(), rhs.clone()))
        })
    };
    let t = g(0, Swap, 0);
    let (t1, _1t) = (g(0, Swap, 1), g(1, Swap, 0));
    vec![
        pres("(ττ)", c(vec![t.clone(), t.clone()]), id(2)),
        pres(
            "(τ YB)",
            c(vec![_1t.clone(), t1.clone(), _1t.clone()]),
            c(vec![t1.clone(), _1t, t1]),
        ),
        pres("(τ!)", c(vec![t.clone(), g(0, Unit, 1)]), g(1, Unit, 0)),
        pres("(τ¡)", c(vec![g(0, Counit, 1), t]), g(1, Counit, 0)),
        pres("(0·0)", c(vec![g(0, Counit, 0), g(0, Unit, 0)]), id(0)),
    ]
}
