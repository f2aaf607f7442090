use super::shared::*;
use super::{Axiom, Origin};
use crate::termlang::derived::{iota, tau, tau_acute, tau_grave, union, union_all, zero};
use crate::termlang::{plus, Category, Generator::*, Term};

const RB: Category = Category::RB;

fn nab(k: usize) -> Term {
    Term::gen(Nabla(k))
}

fn del(k: usize) -> Term {
    Term::gen(Delta(k))
}

fn bang(k: usize) -> Term {
    Term::gen(UnitK(k))
}

fn gnab(k: usize) -> Term {
    Term::gen(CounitK(k))
}

fn fixed(name: &str, origin: Origin, lhs: Term, rhs: Term) -> Axiom {
    Axiom::new(name, RB, origin, &[], move |_| {
        Some((lhs.clone(), rhs.clone()))
    })
}

fn sum(f: &Term, h: &Term) -> Option<Term> {
    plus(f, h).ok()
}

fn cup(f: &Term, h: &Term) -> Option<Term> {
    union(f, h).ok()
}

/// `(i choose j)^{n,m}`.
fn io(i: usize, j: usize, n: usize, m: usize) -> Option<Term> {
    iota(i, j, n, m).ok()
}

pub(super) fn catalog() -> Vec<Axiom> {
    let mut out = category_laws(RB);
    out.extend(presentation());
    out.extend(structure());
    out.extend(unions());
    out.extend(iota_laws());
    out
}

fn presentation() -> Vec<Axiom> {
    let pres = Origin::Presentation;
    let gens = (0..=2)
        .flat_map(|k| [Nabla(k), Delta(k), UnitK(k), CounitK(k)])
        .collect();
    let mut out = vec![fl(RB, gens)];
    out.extend([
        Axiom::with_terms("(∇ nat)", RB, pres, &[], 1, |_, f| {
            let ty = f[0].type_of().ok()?;
            Some((
                c(vec![f[0].clone(), nab(ty.src)]),
                c(vec![nab(ty.tgt), sum(&f[0], &f[0])?]),
            ))
        }),
        Axiom::with_terms("(Δ nat)", RB, pres, &[], 1, |_, f| {
            let ty = f[0].type_of().ok()?;
            Some((
                c(vec![del(ty.tgt), f[0].clone()]),
                c(vec![sum(&f[0], &f[0])?, del(ty.src)]),
            ))
        }),
        Axiom::with_terms("(! nat)", RB, pres, &[], 1, |_, f| {
            let ty = f[0].type_of().ok()?;
            Some((c(vec![f[0].clone(), bang(ty.src)]), bang(ty.tgt)))
        }),
        Axiom::with_terms("(¡ nat)", RB, pres, &[], 1, |_, f| {
            let ty = f[0].type_of().ok()?;
            Some((c(vec![gnab(ty.tgt), f[0].clone()]), gnab(ty.src)))
        }),
        Axiom::new("(∇! 1)", RB, pres, &["k"], |v| {
            let k = v[0];
            Some((c(vec![nab(k), p(k, &bang(k), 0)]), id(k)))
        }),
        Axiom::new("(∇! 2)", RB, pres, &["k"], |v| {
            let k = v[0];
            Some((c(vec![nab(k), p(0, &bang(k), k)]), id(k)))
        }),
        Axiom::new("(∇! 12)", RB, pres, &["k", "l"], |v| {
            let (k, l) = (v[0], v[1]);
            let s = sum(&p(k, &bang(l), 0), &p(0, &bang(k), l))?;
            Some((c(vec![nab(k + l), s]), id(k + l)))
        }),
        Axiom::new("(Δ¡ 1)", RB, pres, &["k"], |v| {
            let k = v[0];
            Some((c(vec![p(k, &gnab(k), 0), del(k)]), id(k)))
        }),
        Axiom::new("(Δ¡ 2)", RB, pres, &["k"], |v| {
            let k = v[0];
            Some((c(vec![p(0, &gnab(k), k), del(k)]), id(k)))
        }),
        Axiom::new("(Δ¡ 12)", RB, pres, &["k", "l"], |v| {
            let (k, l) = (v[0], v[1]);
            let s = sum(&p(k, &gnab(l), 0), &p(0, &gnab(k), l))?;
            Some((c(vec![s, del(k + l)]), id(k + l)))
        }),
        fixed("(0) !", pres, bang(0), id(0)),
        fixed("(0) ¡", pres, gnab(0), id(0)),
        Axiom::new("(∇Δ)", RB, pres, &["k"], |v| {
            Some((c(vec![nab(v[0]), del(v[0])]), id(v[0])))
        }),
    ]);
    out
}

fn structure() -> Vec<Axiom> {
    let d = Origin::Derived;
    let t = tau(RB);
    let (u, cu) = (bang(1), gnab(1));
    let mut out = vec![fixed(
        "τ dual",
        d,
        t.clone(),
        c(vec![
            plus(&p(0, &cu, 1), &p(1, &cu, 0)).expect("typed"),
            del(2),
        ]),
    )];
    out.extend(monad_laws(RB, "", &nab(1), &del(1), &id(1)));
    out.extend([
        fixed(
            "(2·0)",
            d,
            c(vec![cu.clone(), nab(1)]),
            c(vec![cu.clone(), p(1, &cu, 0)]),
        ),
        fixed(
            "(0·2)",
            d,
            c(vec![del(1), u.clone()]),
            c(vec![p(1, &u, 0), u.clone()]),
        ),
        fixed(
            "(2·2)",
            d,
            c(vec![del(1), nab(1)]),
            c(vec![
                p(1, &nab(1), 0),
                p(0, &nab(1), 2),
                p(1, &t, 1),
                p(2, &del(1), 0),
                p(0, &del(1), 1),
            ]),
        ),
        fixed("(0·0)", d, c(vec![cu, u]), id(0)),
        Axiom::with_terms("(τ́ nat)", RB, d, &[], 1, |_, f| {
            let ty = f[0].type_of().ok()?;
            Some((
                c(vec![p(1, &f[0], 0), tau_acute(RB, ty.src)]),
                c(vec![tau_acute(RB, ty.tgt), p(0, &f[0], 1)]),
            ))
        }),
        Axiom::with_terms("(τ̀ nat)", RB, d, &[], 1, |_, f| {
            let ty = f[0].type_of().ok()?;
            Some((
                c(vec![p(0, &f[0], 1), tau_grave(RB, ty.src)]),
                c(vec![tau_grave(RB, ty.tgt), p(1, &f[0], 0)]),
            ))
        }),
        Axiom::new("∇ recursion", RB, d, &["k"], |v| {
            let k = v[0];
            let rhs = c(vec![sum(&nab(1), &nab(k))?, p(1, &tau_acute(RB, k), k)]);
            Some((nab(k + 1), rhs))
        }),
        Axiom::new("Δ recursion", RB, d, &["k"], |v| {
            let k = v[0];
            let rhs = c(vec![p(1, &tau_grave(RB, k), k), sum(&del(1), &del(k))?]);
            Some((del(k + 1), rhs))
        }),
        Axiom::new("τ́ ∇", RB, d, &["m"], |v| {
            let m = v[0];
            let ta = tau_acute(RB, m);
            Some((
                c(vec![ta.clone(), p(m, &nab(1), 0)]),
                c(vec![p(0, &nab(1), m), p(1, &ta, 0), p(0, &ta, 1)]),
            ))
        }),
    ]);
    out
}

fn unions() -> Vec<Axiom> {
    let d = Origin::Derived;
    vec![
        Axiom::with_terms("∪ assoc", RB, d, &[], 3, |_, f| {
            Some((
                cup(&cup(&f[0], &f[1])?, &f[2])?,
                cup(&f[0], &cup(&f[1], &f[2])?)?,
            ))
        }),
        Axiom::with_terms("∪ comm", RB, d, &[], 2, |_, f| {
            Some((cup(&f[0], &f[1])?, cup(&f[1], &f[0])?))
        }),
        Axiom::with_terms("∪ idemp", RB, d, &[], 1, |_, f| {
            Some((cup(&f[0], &f[0])?, f[0].clone()))
        }),
        Axiom::with_terms("∪ zero", RB, d, &[], 1, |_, f| {
            let ty = f[0].type_of().ok()?;
            Some((cup(&f[0], &zero(RB, ty.src, ty.tgt))?, f[0].clone()))
        }),
        Axiom::with_terms("∘ over ∪ left", RB, d, &[], 3, |_, f| {
            let (a, b, h) = (&f[0], &f[1], &f[2]);
            let lhs = crate::termlang::compose(a.clone(), cup(b, h)?).ok()?;
            Some((
                lhs,
                cup(
                    &c(vec![a.clone(), b.clone()]),
                    &c(vec![a.clone(), h.clone()]),
                )?,
            ))
        }),
        Axiom::with_terms("∘ over ∪ right", RB, d, &[], 3, |_, f| {
            let (a, b, h) = (&f[0], &f[1], &f[2]);
            let lhs = crate::termlang::compose(cup(b, h)?, a.clone()).ok()?;
            Some((
                lhs,
                cup(
                    &c(vec![b.clone(), a.clone()]),
                    &c(vec![h.clone(), a.clone()]),
                )?,
            ))
        }),
        Axiom::with_terms("∘ zero right", RB, d, &["k"], 1, |v, f| {
            let ty = f[0].type_of().ok()?;
            Some((
                c(vec![f[0].clone(), zero(RB, v[0], ty.src)]),
                zero(RB, v[0], ty.tgt),
            ))
        }),
        Axiom::with_terms("∘ zero left", RB, d, &["k"], 1, |v, f| {
            let ty = f[0].type_of().ok()?;
            Some((
                c(vec![zero(RB, ty.tgt, v[0]), f[0].clone()]),
                zero(RB, ty.src, v[0]),
            ))
        }),
        Axiom::with_terms("pad ∪ left", RB, d, &[], 2, |_, f| {
            Some((
                p(1, &cup(&f[0], &f[1])?, 0),
                cup(&p(1, &f[0], 0), &p(1, &f[1], 0))?,
            ))
        }),
        Axiom::with_terms("pad ∪ right", RB, d, &[], 2, |_, f| {
            Some((
                p(0, &cup(&f[0], &f[1])?, 1),
                cup(&p(0, &f[0], 1), &p(0, &f[1], 1))?,
            ))
        }),
        Axiom::with_terms("+ via ∪", RB, d, &[], 2, |_, f| {
            let (tf, tg) = (f[0].type_of().ok()?, f[1].type_of().ok()?);
            let left = sum(&f[0], &zero(RB, tg.src, tg.tgt))?;
            let right = sum(&zero(RB, tf.src, tf.tgt), &f[1])?;
            Some((sum(&f[0], &f[1])?, cup(&left, &right)?))
        }),
        Axiom::new("∇ as ∪", RB, d, &["k"], |v| {
            let k = v[0];
            Some((nab(k), cup(&p(k, &gnab(k), 0), &p(0, &gnab(k), k))?))
        }),
        Axiom::new("Δ as ∪", RB, d, &["k"], |v| {
            let k = v[0];
            Some((del(k), cup(&p(k, &bang(k), 0), &p(0, &bang(k), k))?))
        }),
        Axiom::new("(∇Δ def) ∇", RB, d, &["n", "k", "m"], |v| {
            let (n, k, m) = (v[0], v[1], v[2]);
            Some((
                p(n, &nab(k), m),
                cup(&p(n + k, &gnab(k), m), &p(n, &gnab(k), k + m))?,
            ))
        }),
        Axiom::new("(∇Δ def) Δ", RB, d, &["n", "k", "m"], |v| {
            let (n, k, m) = (v[0], v[1], v[2]);
            Some((
                p(n, &del(k), m),
                cup(&p(n + k, &bang(k), m), &p(n, &bang(k), k + m))?,
            ))
        }),
    ]
}

fn iota_laws() -> Vec<Axiom> {
    let d = Origin::Derived;
    vec![
        Axiom::new("(!¡ def) !", RB, d, &["n", "k", "m"], |v| {
            let (n, k, m) = (v[0], v[1], v[2]);
            when(n + m >= 1)?;
            let (src, tgt) = (n + m, n + k + m);
            let terms = (0..n)
                .map(|i| io(i, i, src, tgt))
                .chain((n..n + m).map(|i| io(i, i + k, src, tgt)))
                .collect::<Option<Vec<_>>>()?;
            Some((p(n, &bang(k), m), union_all(src, tgt, &terms).ok()?))
        }),
        Axiom::new("(!¡ def) ¡", RB, d, &["n", "k", "m"], |v| {
            let (n, k, m) = (v[0], v[1], v[2]);
            when(n + m >= 1)?;
            let (src, tgt) = (n + k + m, n + m);
            let terms = (0..n)
                .map(|i| io(i, i, src, tgt))
                .chain((n..n + m).map(|i| io(i + k, i, src, tgt)))
                .collect::<Option<Vec<_>>>()?;
            Some((p(n, &gnab(k), m), union_all(src, tgt, &terms).ok()?))
        }),
        Axiom::new("!^k = 0", RB, d, &["k"], |v| {
            Some((bang(v[0]), zero(RB, 0, v[0])))
        }),
        Axiom::new("¡^k = 0", RB, d, &["k"], |v| {
            Some((gnab(v[0]), zero(RB, v[0], 0)))
        }),
        Axiom::new("(1 def)", RB, d, &["n", "m"], |v| {
            let s = v[0] + v[1];
            let terms = (0..s).map(|i| io(i, i, s, s)).collect::<Option<Vec<_>>>()?;
            Some((p(v[0], &id(0), v[1]), union_all(s, s, &terms).ok()?))
        }),
        Axiom::new(
            "ι ∘ ι",
            RB,
            d,
            &["p", "q", "r", "n", "m", "k", "l"],
            |v| {
                let (pp, q, r, n, m, k, l) = (v[0], v[1], v[2], v[3], v[4], v[5], v[6]);
                when(n < pp && m < q && k < q && l < r)?;
                let lhs = c(vec![io(k, l, q, r)?, io(n, m, pp, q)?]);
                let rhs = if m == k {
                    io(n, l, pp, r)?
                } else {
                    zero(RB, pp, r)
                };
                Some((lhs, rhs))
            },
        )
        .no_outer(),
        Axiom::new("ι ∘ 0", RB, d, &["p", "q", "r", "k", "l"], |v| {
            let (pp, q, r, k, l) = (v[0], v[1], v[2], v[3], v[4]);
            Some((c(vec![io(k, l, q, r)?, zero(RB, pp, q)]), zero(RB, pp, r)))
        })
        .no_outer(),
        Axiom::new("0 ∘ ι", RB, d, &["p", "q", "r", "n", "m"], |v| {
            let (pp, q, r, n, m) = (v[0], v[1], v[2], v[3], v[4]);
            Some((c(vec![zero(RB, q, r), io(n, m, pp, q)?]), zero(RB, pp, r)))
        })
        .no_outer(),
        Axiom::new("0 ∘ 0", RB, d, &["p", "q", "r"], |v| {
            Some((
                c(vec![zero(RB, v[1], v[2]), zero(RB, v[0], v[1])]),
                zero(RB, v[0], v[2]),
            ))
        }),
    ]
}
