use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::perm::{perm_term, perm_term_inverse, Perm};
use super::NfError;
use crate::semantics::eval_strict;
use crate::termlang::derived::{counits, units};
use crate::termlang::{chain_of, pad, ArrowTerm, Category, Generator, Term, TermError};

/// The canonical `π` with `π(i) = 0`, `π(j) = 1`, order-preserving elsewhere.
pub fn canonical_pi(i: usize, j: usize, n: usize) -> Perm {
    let mut image = vec![0; n];
    image[i] = 0;
    image[j] = 1;
    let mut next = 2;
    for (k, slot) in image.iter_mut().enumerate() {
        if k != i && k != j {
            *slot = next;
            next += 1;
        }
    }
    Perm::new(image).expect("bijective by construction")
}

fn check_eta(name: &str, i: usize, j: usize, n: usize) -> Result<(), TermError> {
    if n < 2 || i >= n || j >= n || i == j {
        return Err(TermError::bad(
            name,
            format!("need distinct i, j < N with N ≥ 2, got ({i},{j},{n})"),
        ));
    }
    Ok(())
}

/// `π⁻¹ ∘ _k g_{N-2-k} ∘ π` for a `π` sending `i ↦ k`, `j ↦ k+1`.
pub fn bridge_with(g: Generator, i: usize, j: usize, pi: &Perm) -> Result<Term, TermError> {
    let n = pi.size();
    check_eta("eta", i, j, n)?;
    let k = pi.apply(i);
    if pi.apply(j) != k + 1 {
        return Err(TermError::bad(
            "eta",
            format!("π sends ({i},{j}) to non-adjacent positions"),
        ));
    }
    let core = Term::padded_gen(k, g, n - 2 - k);
    Ok(chain_of(&[&perm_term_inverse(pi), &core, &perm_term(pi)]))
}

/// `(i,j)^N` in PF: column `i` below column `j`.
pub fn eta_term(i: usize, j: usize, n: usize) -> Result<ArrowTerm, TermError> {
    check_eta("eta", i, j, n)?;
    let t = bridge_with(Generator::H, i, j, &canonical_pi(i, j, n))?;
    ArrowTerm::new(Category::PF, t)
}

/// `(ī,j)^N` in EF: columns `i` and `j` merged.
pub fn etabar_term(i: usize, j: usize, n: usize) -> Result<ArrowTerm, TermError> {
    check_eta("etabar", i, j, n)?;
    let t = bridge_with(Generator::HBar, i, j, &canonical_pi(i, j, n))?;
    ArrowTerm::new(Category::EF, t)
}

/// Eta normal-form payload: the flattened strict part.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EtaNF {
    pub n: usize,
    pub m: usize,
    pub etas: BTreeSet<(usize, usize)>,
}

impl EtaNF {
    pub fn new(n: usize, m: usize, etas: BTreeSet<(usize, usize)>) -> Result<Self, NfError> {
        let nf = EtaNF { n, m, etas };
        nf.validate()?;
        Ok(nf)
    }

    pub fn validate(&self) -> Result<(), NfError> {
        let size = self.n + self.m;
        if let Some(&(i, j)) = self
            .etas
            .iter()
            .find(|&&(i, j)| i >= size || j >= size || i == j)
        {
            return Err(NfError::Invalid(format!(
                "eta ({i},{j}) invalid for {}→{}",
                self.n, self.m
            )));
        }
        for &(a, b) in &self.etas {
            for &(b2, c) in self.etas.range((b, 0)..(b + 1, 0)) {
                debug_assert_eq!(b, b2);
                if a != c && !self.etas.contains(&(a, c)) {
                    return Err(NfError::Invalid(format!(
                        "missing ({a},{c}) from ({a},{b}),({b},{c})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

/// The overlined analogue: unordered pairs stored as `(min, max)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EtaBarNF {
    pub n: usize,
    pub m: usize,
    pub etas: BTreeSet<(usize, usize)>,
}

impl EtaBarNF {
    pub fn new(n: usize, m: usize, etas: BTreeSet<(usize, usize)>) -> Result<Self, NfError> {
        let nf = EtaBarNF { n, m, etas };
        nf.validate()?;
        Ok(nf)
    }

    pub fn validate(&self) -> Result<(), NfError> {
        let size = self.n + self.m;
        if let Some(&(i, j)) = self.etas.iter().find(|&&(i, j)| j >= size || i >= j) {
            return Err(NfError::Invalid(format!(
                "pair ({i},{j}) invalid for {}→{}",
                self.n, self.m
            )));
        }
        let has = |a: usize, b: usize| self.etas.contains(&(a.min(b), a.max(b)));
        for &(a, b) in &self.etas {
            for c in 0..size {
                if c != a && c != b {
                    let linked = (has(b, c) && !has(a, c)) || (has(a, c) && !has(b, c));
                    if linked {
                        return Err(NfError::Invalid(format!(
                            "{{{a},{b}}} not closed through {c}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

fn flat_strict(t: &ArrowTerm) -> Result<BTreeSet<(usize, usize)>, NfError> {
    Ok(eval_strict(t)?.flat_pairs().collect())
}

/// Etas of `t` (PF or EF) under the flattening `k_s ↦ k`, `k_t ↦ n + k`.
pub fn eta_nf(t: &ArrowTerm) -> Result<EtaNF, NfError> {
    if t.category() == Category::RB {
        return Err(NfError::WrongCategory(t.category()));
    }
    Ok(EtaNF {
        n: t.src(),
        m: t.tgt(),
        etas: flat_strict(t)?,
    })
}

pub fn etabar_nf(t: &ArrowTerm) -> Result<EtaBarNF, NfError> {
    if t.category() != Category::EF {
        return Err(NfError::WrongCategory(t.category()));
    }
    let etas = flat_strict(t)?.into_iter().filter(|(i, j)| i < j).collect();
    Ok(EtaBarNF {
        n: t.src(),
        m: t.tgt(),
        etas,
    })
}

/// `¡^n_m ∘ core ∘ _n!^m`; trivial counit or unit blocks are left out.
fn frame(cat: Category, n: usize, m: usize, core: Vec<Term>) -> Term {
    let mut pieces = Vec::new();
    if n > 0 {
        pieces.push(pad(0, &counits(cat, n), m));
    }
    if core.is_empty() {
        pieces.push(Term::Id(n + m));
    } else {
        pieces.extend(core);
    }
    if m > 0 {
        pieces.push(pad(n, &units(cat, m), 0));
    }
    chain_of(&pieces.iter().collect::<Vec<_>>())
}

pub fn eta_nf_term(nf: &EtaNF) -> Result<ArrowTerm, NfError> {
    nf.validate()?;
    let size = nf.n + nf.m;
    let core = nf
        .etas
        .iter()
        .map(|&(i, j)| eta_term(i, j, size).map(ArrowTerm::into_term))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ArrowTerm::new(
        Category::PF,
        frame(Category::PF, nf.n, nf.m, core),
    )?)
}

pub fn etabar_nf_term(nf: &EtaBarNF) -> Result<ArrowTerm, NfError> {
    nf.validate()?;
    let size = nf.n + nf.m;
    let core = nf
        .etas
        .iter()
        .map(|&(i, j)| etabar_term(i, j, size).map(ArrowTerm::into_term))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ArrowTerm::new(
        Category::EF,
        frame(Category::EF, nf.n, nf.m, core),
    )?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::{eval, SemValue};
    use crate::splcore::{identity_split, Node, SplitPreorder};
    use crate::termlang::{parse, print};

    fn bridge_value(i: usize, j: usize, n: usize, both: bool) -> SplitPreorder {
        let (a, b) = ([Node::src(i), Node::tgt(i)], [Node::src(j), Node::tgt(j)]);
        let mut pairs: Vec<_> = identity_split(n).relation().pairs().collect();
        for x in a {
            for y in b {
                pairs.push((x, y));
                if both {
                    pairs.push((y, x));
                }
            }
        }
        SplitPreorder::generated_by(n, n, pairs).unwrap()
    }

    #[test]
    fn eta_base_case_is_h() {
        assert_eq!(
            eval(&eta_term(0, 1, 2).unwrap()),
            eval(&parse("h").unwrap())
        );
        assert_eq!(
            eval(&etabar_term(0, 1, 2).unwrap()),
            eval(&parse("hbar").unwrap())
        );
    }

    #[test]
    fn eta_columns() {
        for n in 2..5 {
            for i in 0..n {
                for j in (0..n).filter(|&j| j != i) {
                    let v = eval(&eta_term(i, j, n).unwrap());
                    assert_eq!(v.preorder().unwrap(), &bridge_value(i, j, n, false));
                    let w = eval(&etabar_term(i, j, n).unwrap());
                    assert_eq!(w.preorder().unwrap(), &bridge_value(i, j, n, true));
                    assert_eq!(w, eval(&etabar_term(j, i, n).unwrap()));
                }
            }
        }
        assert!(eta_term(1, 1, 3).is_err());
        assert!(eta_term(0, 1, 1).is_err());
    }

    #[test]
    fn h_nf() {
        let nf = eta_nf(&parse("h").unwrap()).unwrap();
        assert_eq!(nf.etas.len(), 8);
        let back = eta_nf_term(&nf).unwrap();
        assert_eq!(eval(&back), eval(&parse("h").unwrap()));
    }

    #[test]
    fn empty_nf_frame() {
        let nf = EtaNF::new(1, 1, BTreeSet::new()).unwrap();
        let t = eta_nf_term(&nf).unwrap();
        assert_eq!(
            print(t.term()),
            "pad(0, counit, 1) . id(2) . pad(1, unit, 0)"
        );
        let t0 = eta_nf_term(&EtaNF::new(0, 0, BTreeSet::new()).unwrap()).unwrap();
        assert_eq!(*t0.term(), Term::Id(0));
        assert!(eta_nf(&parse("id(0)").unwrap()).unwrap().etas.is_empty());
    }

    #[test]
    fn identity_nf() {
        let nf = eta_nf(&parse("id(1)").unwrap()).unwrap();
        assert_eq!(nf.etas, [(0, 1), (1, 0)].into_iter().collect());
        let bar = etabar_nf(&parse("id(1)").unwrap()).unwrap();
        assert_eq!(bar.etas, [(0, 1)].into_iter().collect());
        let hb = etabar_nf(&parse("hbar").unwrap()).unwrap();
        assert_eq!(hb.etas.len(), 6);
        assert!(matches!(
            eval(&etabar_nf_term(&hb).unwrap()),
            SemValue::Equivalence(_)
        ));
    }

    #[test]
    fn bridge_slides_through_pi() {
        for size in 2..6 {
            let n = size - 2;
            for pi in Perm::all(size) {
                let k = pi.apply(0);
                if pi.apply(1) != k + 1 {
                    continue;
                }
                let lhs = chain_of(&[&Term::padded_gen(k, Generator::H, n - k), &perm_term(&pi)]);
                let rhs = chain_of(&[&perm_term(&pi), &Term::padded_gen(0, Generator::H, n)]);
                let lhs = ArrowTerm::new(Category::PF, lhs).unwrap();
                let rhs = ArrowTerm::new(Category::PF, rhs).unwrap();
                assert_eq!(eval(&lhs), eval(&rhs), "{pi:?}");
            }
        }
    }

    #[test]
    fn eta_independent_of_pi() {
        for size in 2..6 {
            for pi in Perm::all(size) {
                for i in 0..size {
                    for j in (0..size).filter(|&j| j != i) {
                        if pi.apply(j) != pi.apply(i) + 1 {
                            continue;
                        }
                        for (g, cat) in [
                            (Generator::H, Category::PF),
                            (Generator::HBar, Category::EF),
                        ] {
                            let t =
                                ArrowTerm::new(cat, bridge_with(g, i, j, &pi).unwrap()).unwrap();
                            let canon = if cat == Category::PF {
                                eta_term(i, j, size)
                            } else {
                                etabar_term(i, j, size)
                            };
                            assert_eq!(eval(&t), eval(&canon.unwrap()), "{pi:?} ({i},{j})");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn validation() {
        assert!(EtaNF::new(1, 1, [(0, 1), (1, 0)].into_iter().collect()).is_ok());
        assert!(EtaNF::new(2, 1, [(0, 1), (1, 2)].into_iter().collect()).is_err());
        assert!(EtaNF::new(1, 1, [(0, 0)].into_iter().collect()).is_err());
        assert!(EtaBarNF::new(2, 0, [(1, 0)].into_iter().collect()).is_err());
        assert!(EtaBarNF::new(3, 0, [(0, 1), (1, 2)].into_iter().collect()).is_err());
        assert_eq!(
            EtaNF::new(1, 1, [(0, 1)].into_iter().collect())
                .unwrap()
                .to_json(),
            r#"{"n":1,"m":1,"etas":[[0,1]]}"#
        );
    }
}
