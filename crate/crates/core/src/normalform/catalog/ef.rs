use super::shared::*;
use super::{Axiom, Origin};
use crate::termlang::derived::{delta, nabla};
use crate::termlang::{Category, Generator::*, Term};

const EF: Category = Category::EF;

fn fixed(name: &str, origin: Origin, lhs: Term, rhs: Term) -> Axiom {
    Axiom::new(name, EF, origin, &[], move |_| {
        Some((lhs.clone(), rhs.clone()))
    })
}

pub(super) fn catalog() -> Vec<Axiom> {
    let pres = Origin::Presentation;
    let (t, hb) = (g(0, Swap, 0), g(0, HBar, 0));
    let (t1, _1t) = (g(0, Swap, 1), g(1, Swap, 0));
    let (hb1, _1hb) = (g(0, HBar, 1), g(1, HBar, 0));

    let mut out = category_laws(EF);
    out.push(fl(EF, vec![Unit, Counit, Swap, HBar]));
    out.extend(symmetry_laws(EF));
    out.extend([
        fixed(
            "(H̄ idemp)",
            pres,
            c(vec![hb.clone(), hb.clone()]),
            hb.clone(),
        ),
        fixed(
            "(H̄ YB)",
            pres,
            c(vec![_1t.clone(), hb1.clone(), _1t.clone()]),
            c(vec![t1.clone(), _1hb.clone(), t1]),
        ),
        fixed(
            "(H̄ com) 1",
            pres,
            c(vec![t.clone(), hb.clone()]),
            hb.clone(),
        ),
        fixed(
            "(H̄ com) 2",
            pres,
            hb.clone(),
            c(vec![hb.clone(), t.clone()]),
        ),
        fixed(
            "(H̄ bond)",
            pres,
            c(vec![g(0, Counit, 1), hb.clone(), g(0, Unit, 1)]),
            id(1),
        ),
        fixed(
            "(H̄H̄)",
            pres,
            c(vec![_1hb.clone(), hb1.clone()]),
            c(vec![hb1, _1hb]),
        ),
    ]);

    out.extend(frobenius_laws(EF));
    let (nab, del) = (nabla(EF), delta(EF));
    let d = Origin::Derived;
    out.extend([
        fixed("H̄ = Δ∘∇", d, hb, c(vec![del.clone(), nab.clone()])),
        fixed(
            "∇ = ¡∘Δ∘∇",
            d,
            nab.clone(),
            c(vec![g(0, Counit, 1), del.clone(), nab.clone()]),
        ),
        fixed(
            "Δ = Δ∘∇∘!",
            d,
            del.clone(),
            c(vec![del, nab, g(0, Unit, 1)]),
        ),
    ]);
    out.extend(eta_laws(EF));
    out.push(
        Axiom::new("η̄ sym", EF, d, &["i", "j", "n"], |v| {
            Some((eta(EF, v[0], v[1], v[2])?, eta(EF, v[1], v[0], v[2])?))
        })
        .no_outer(),
    );
    out
}
