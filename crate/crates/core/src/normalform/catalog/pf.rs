use super::shared::*;
use super::{Axiom, Origin};
use crate::termlang::derived::{
    delta, delta_down, down, etabar_in_pf, hbar_in_pf, nabla, nabla_down, up, up_alt,
};
use crate::termlang::{Category, Generator::*};

const PF: Category = Category::PF;

fn pres(name: &str, lhs: crate::termlang::Term, rhs: crate::termlang::Term) -> Axiom {
    Axiom::new(name, PF, Origin::Presentation, &[], move |_| {
        Some((lhs.clone(), rhs.clone()))
    })
}

fn derived(name: &str, lhs: crate::termlang::Term, rhs: crate::termlang::Term) -> Axiom {
    Axiom::new(name, PF, Origin::Derived, &[], move |_| {
        Some((lhs.clone(), rhs.clone()))
    })
}

pub(super) fn catalog() -> Vec<Axiom> {
    let (t, h) = (g(0, Swap, 0), g(0, H, 0));
    let (t1, _1t) = (g(0, Swap, 1), g(1, Swap, 0));
    let (h1, _1h) = (g(0, H, 1), g(1, H, 0));
    let hth = c(vec![h.clone(), t.clone(), h.clone()]);

    let mut out = category_laws(PF);
    out.push(fl(PF, vec![Unit, Counit, Swap, H]));
    out.extend(symmetry_laws(PF));
    out.extend([
        pres("(H idemp)", c(vec![h.clone(), h.clone()]), h.clone()),
        pres(
            "(H YB)",
            c(vec![_1t.clone(), h1.clone(), _1t.clone()]),
            c(vec![t1.clone(), _1h.clone(), t1.clone()]),
        ),
        pres(
            "(H com) 1",
            c(vec![t.clone(), h.clone(), t.clone(), h.clone()]),
            hth.clone(),
        ),
        pres(
            "(H com) 2",
            hth.clone(),
            c(vec![h.clone(), t.clone(), h.clone(), t.clone()]),
        ),
        pres(
            "(H bond)",
            c(vec![g(0, Counit, 1), hth.clone(), g(0, Unit, 1)]),
            id(1),
        ),
        pres(
            "(HH)",
            c(vec![_1h.clone(), h1.clone()]),
            c(vec![h1.clone(), _1h.clone()]),
        ),
        pres(
            "(HH in)",
            c(vec![t1.clone(), _1h.clone(), t1.clone(), _1h.clone()]),
            c(vec![_1h.clone(), t1.clone(), _1h.clone(), t1.clone()]),
        ),
        pres(
            "(HH out)",
            c(vec![_1t.clone(), h1.clone(), _1t.clone(), h1.clone()]),
            c(vec![h1.clone(), _1t.clone(), h1.clone(), _1t.clone()]),
        ),
        pres(
            "(H 2·0)",
            c(vec![
                g(2, Counit, 0),
                _1h.clone(),
                t1.clone(),
                _1h.clone(),
                g(2, Unit, 0),
            ]),
            t.clone(),
        ),
        pres(
            "(H 0·2)",
            c(vec![
                g(0, Counit, 2),
                h1.clone(),
                _1t.clone(),
                h1.clone(),
                g(0, Unit, 2),
            ]),
            t.clone(),
        ),
        pres(
            "(H 2·2)",
            c(vec![
                g(2, Counit, 2),
                g(2, H, 1),
                g(1, H, 2),
                g(3, Swap, 0),
                g(0, Swap, 3),
                g(2, H, 1),
                g(1, H, 2),
                g(2, Unit, 2),
            ]),
            c(vec![
                g(1, H, 1),
                g(2, Swap, 0),
                g(1, H, 1),
                g(2, Swap, 0),
                g(0, Swap, 2),
                g(1, H, 1),
                g(2, Swap, 0),
                g(1, H, 1),
            ]),
        ),
    ]);

    out.extend(frobenius_laws(PF));
    let (nab, del, dn) = (nabla(PF), delta(PF), down());
    let (nd, dd) = (nabla_down(PF), delta_down(PF));
    let (u, cu) = (g(0, Unit, 0), g(0, Counit, 0));
    out.extend([
        derived("↓ idemp", c(vec![dn.clone(), dn.clone()]), dn.clone()),
        derived(
            "↓ sym",
            c(vec![t.clone(), p(0, &dn, 1)]),
            c(vec![p(1, &dn, 0), t.clone()]),
        ),
        derived("↑ alt", up(), up_alt()),
        derived(
            "up-and-down",
            c(vec![nab.clone(), p(1, &dn, 0), p(0, &up(), 1), del.clone()]),
            id(1),
        ),
        derived(
            "(2·0)",
            c(vec![cu.clone(), nd.clone()]),
            c(vec![cu.clone(), g(1, Counit, 0)]),
        ),
        derived(
            "(0·2)",
            c(vec![dd.clone(), u.clone()]),
            c(vec![g(1, Unit, 0), u.clone()]),
        ),
        derived(
            "(2·2)",
            c(vec![dd.clone(), nd.clone()]),
            c(vec![
                p(1, &nd, 0),
                p(0, &nd, 2),
                g(1, Swap, 1),
                p(2, &dd, 0),
                p(0, &dd, 1),
            ]),
        ),
        derived(
            "bialgebraic separability",
            c(vec![nd.clone(), dd.clone()]),
            dn.clone(),
        ),
        derived(
            "(1·1) from separability",
            c(vec![nab.clone(), p(1, &dn, 0), p(0, &dn, 1), del.clone()]),
            dn.clone(),
        ),
        derived("(2·1)", c(vec![dn.clone(), nd.clone()]), nd.clone()),
        derived("(1·2)", c(vec![dd.clone(), dn.clone()]), dd.clone()),
        derived("(0·1)", c(vec![dn.clone(), u.clone()]), u.clone()),
        derived("(1·0)", c(vec![cu.clone(), dn.clone()]), cu.clone()),
        derived(
            "(∇ circ)",
            nab.clone(),
            c(vec![
                nab.clone(),
                p(1, &c(vec![dn.clone(), nab.clone(), p(0, &dn, 1)]), 0),
                p(0, &del, 1),
            ]),
        ),
    ]);
    out.extend(super::shared::monad_laws(PF, "↓ ", &nd, &dd, &dn));
    let h_via = c(vec![p(1, &nab, 0), p(1, &dn, 1), p(0, &del, 1)]);
    out.extend([
        derived("H via ∇↓Δ", h.clone(), h_via.clone()),
        derived(
            "∇ via H expansion",
            nab.clone(),
            c(vec![g(0, Counit, 1), h_via.clone(), t.clone(), h_via]),
        ),
    ]);
    out.extend(eta_laws(PF));
    out.extend([
        Axiom::new("(H̄ def)", PF, Origin::Derived, &["n", "m"], |v| {
            let (n, m) = (v[0], v[1]);
            Some((
                p(n, &hbar_in_pf(), m),
                etabar_in_pf(n, n + 1, n + 2 + m).ok()?,
            ))
        }),
        Axiom::new("η̄ sym", PF, Origin::Derived, &["i", "j", "n"], |v| {
            Some((
                etabar_in_pf(v[0], v[1], v[2]).ok()?,
                etabar_in_pf(v[1], v[0], v[2]).ok()?,
            ))
        })
        .no_outer(),
    ]);
    out
}
