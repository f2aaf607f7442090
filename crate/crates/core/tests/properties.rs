use proptest::prelude::*;

use splitpre::fuzz::{FuzzConfig, TermSampler};
use splitpre::maximality::separate;
use splitpre::normalform::normalize;
use splitpre::semantics::{equal, eval};
use splitpre::splcore::{
    compose_equivalence, compose_rel, compose_split, embed_relation, identity_split,
    transitive_closure, BinRel, Node, SplitEquivalence, SplitPreorder, SplitRelation,
};
use splitpre::termlang::{parse_with, print, Category};

fn node(n: usize, k: usize) -> Node {
    if k < n {
        Node::src(k)
    } else {
        Node::tgt(k - n)
    }
}

fn preorder(n: usize, m: usize) -> impl Strategy<Value = SplitPreorder> {
    let size = (n + m).max(1);
    prop::collection::vec((0..size, 0..size), 0..6).prop_map(move |raw| {
        let pairs = raw
            .into_iter()
            .filter(|_| n + m > 0)
            .map(|(a, b)| (node(n, a), node(n, b)));
        SplitPreorder::generated_by(n, m, pairs).unwrap()
    })
}

fn equivalence(n: usize, m: usize) -> impl Strategy<Value = SplitEquivalence> {
    preorder(n, m).prop_map(|p| {
        let r = p.relation();
        let sym = r.union(&r.converse()).unwrap();
        SplitEquivalence::new(SplitPreorder::generated_by(r.n(), r.m(), sym.pairs()).unwrap())
            .unwrap()
    })
}

fn triple() -> impl Strategy<Value = (SplitPreorder, SplitPreorder, SplitPreorder)> {
    (0..=3usize, 0..=3usize, 0..=3usize, 0..=3usize)
        .prop_flat_map(|(a, b, c, d)| (preorder(a, b), preorder(b, c), preorder(c, d)))
}

fn binrel(n: usize, m: usize) -> impl Strategy<Value = BinRel> {
    prop::collection::vec(prop::bool::ANY, n * m).prop_map(move |bits| {
        BinRel::from_pairs(
            n,
            m,
            (0..n * m).filter(|&k| bits[k]).map(|k| (k / m, k % m)),
        )
        .unwrap()
    })
}

fn category() -> impl Strategy<Value = Category> {
    prop::sample::select(Category::ALL.to_vec())
}

proptest! {
    #[test]
    fn composition_is_associative((p, q, s) in triple()) {
        let left = compose_split(&p, &compose_split(&q, &s).unwrap()).unwrap();
        let right = compose_split(&compose_split(&p, &q).unwrap(), &s).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn identities_are_neutral(p in (0..=3usize, 0..=3usize).prop_flat_map(|(n, m)| preorder(n, m))) {
        let left = compose_split(identity_split(p.n()).preorder(), &p).unwrap();
        let right = compose_split(&p, identity_split(p.m()).preorder()).unwrap();
        prop_assert_eq!(&left, &p);
        prop_assert_eq!(&right, &p);
    }

    #[test]
    fn equivalences_compose_to_equivalences(
        (e, f) in (0..=3usize, 0..=3usize, 0..=3usize).prop_flat_map(|(a, b, c)| (equivalence(a, b), equivalence(b, c)))
    ) {
        let g = compose_equivalence(&e, &f).unwrap();
        prop_assert!(g.relation().is_symmetric());
    }

    #[test]
    fn closure_is_idempotent_and_monotone(
        (p, q) in (0..=3usize, 0..=3usize).prop_flat_map(|(n, m)| (preorder(n, m), preorder(n, m)))
    ) {
        let union = p.relation().union(q.relation()).unwrap();
        let closed = transitive_closure(&union);
        prop_assert!(union.is_subset(&closed));
        prop_assert_eq!(&transitive_closure(&closed), &closed);
        prop_assert!(p.relation().is_subset(&closed));
    }

    #[test]
    fn relation_embedding_is_a_semi_functor(
        (r, s) in (0..=3usize, 0..=3usize, 0..=3usize).prop_flat_map(|(a, b, c)| (binrel(a, b), binrel(b, c)))
    ) {
        let lhs = embed_relation(&compose_rel(&r, &s).unwrap());
        let rhs = compose_split(&embed_relation(&r), &embed_relation(&s)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn strict_part_rebuilds_the_preorder(p in (0..=3usize, 0..=3usize).prop_flat_map(|(n, m)| preorder(n, m))) {
        let strict: Vec<_> = p.relation().pairs().filter(|(x, y)| x != y).collect();
        let rel = SplitRelation::from_pairs(p.n(), p.m(), strict).unwrap().with_loops();
        prop_assert_eq!(SplitPreorder::new(rel).unwrap(), p);
    }

    #[test]
    fn printed_terms_parse_back(cat in category(), seed in any::<u64>()) {
        let t = TermSampler::new(cat, seed, FuzzConfig::default()).term();
        prop_assert_eq!(parse_with(&print(t.term()), Some(cat)).unwrap(), t);
    }

    #[test]
    fn normal_forms_round_trip(cat in category(), seed in any::<u64>()) {
        let t = TermSampler::new(cat, seed, FuzzConfig::default()).term();
        let nf = normalize(&t).unwrap();
        let back = nf.term().unwrap();
        prop_assert_eq!(eval(&back), eval(&t));
        prop_assert_eq!(normalize(&back).unwrap(), nf);
    }

    #[test]
    fn equality_matches_payloads_and_separation(cat in category(), seed in any::<u64>()) {
        let (f, g) = TermSampler::new(cat, seed, FuzzConfig::default()).pair();
        let same = equal(&f, &g).unwrap();
        prop_assert_eq!(same, normalize(&f).unwrap() == normalize(&g).unwrap());
        if !same {
            let w = separate(&f, &g).unwrap();
            prop_assert_ne!(&w.results.0, &w.results.1);
        }
    }
}
