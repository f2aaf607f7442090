//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Oracles here are written against plain pair sets so that they share no
//! code with the library's bit-matrix closure.

mod common;

use std::collections::BTreeSet;
use std::io::Write;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use splitpre::fuzz::{
    all_binrels, all_split_preorders, random_preorder, random_split_relation, run_fuzz, FuzzConfig,
    TermSampler,
};
use splitpre::maximality::{separate, SeparationCase};
use splitpre::normalform::{
    axiom_catalog, check_axiom, eta_nf, eta_nf_term, etabar_nf, etabar_nf_term, iota_nf,
    iota_nf_term, normalize, EtaBarNF, EtaNF, IotaNF,
};
use splitpre::semantics::{equal, eval, SemValue};
use splitpre::splcore::{
    bar_union, compose_equivalence, compose_rel, compose_split, embed_function, embed_relation,
    identity_split, restrict_away, transitive_closure, BinRel, Node, SplitEquivalence,
    SplitPreorder, SplitRelation, Tag,
};
use splitpre::termlang::{parse, parse_with, print, ArrowTerm, Category};

type Pairs = BTreeSet<(Node, Node)>;
type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let spent = start.elapsed();
    ensure(spent < limit, || {
        format!("took {spent:.1?}, limit {limit:?}")
    })
}

fn pairs(r: &SplitRelation) -> Pairs {
    r.pairs().collect()
}

fn oracle_closure(r: &Pairs) -> Pairs {
    let mut out = r.clone();
    loop {
        let step: Vec<_> = out
            .iter()
            .flat_map(|&(x, y)| {
                out.iter()
                    .filter(move |&&(y2, _)| y2 == y)
                    .map(move |&(_, z)| (x, z))
            })
            .filter(|p| !out.contains(p))
            .collect();
        if step.is_empty() {
            return out;
        }
        out.extend(step);
    }
}

fn oracle_restrict(r: &Pairs, x: &BTreeSet<Node>) -> Pairs {
    r.iter()
        .filter(|(a, b)| !x.contains(a) && !x.contains(b))
        .copied()
        .collect()
}

fn flat(n: usize, x: Node) -> usize {
    match x.tag {
        Tag::Src => x.pos,
        Tag::Tgt => n + x.pos,
    }
}

fn oracle_etas(v: &SemValue) -> BTreeSet<(usize, usize)> {
    let r = v.split_relation().expect("split value");
    r.pairs()
        .filter(|(x, y)| x != y)
        .map(|(x, y)| (flat(r.n(), x), flat(r.n(), y)))
        .collect()
}

fn dims(rng: &mut ChaCha8Rng, max: usize) -> (usize, usize) {
    (rng.gen_range(0..=max), rng.gen_range(0..=max))
}

fn reflexive(rng: &mut ChaCha8Rng, n: usize, m: usize) -> SplitRelation {
    let d = rng.gen_range(0.0..0.4);
    random_split_relation(rng, n, m, d).with_loops()
}

fn node_subset(rng: &mut ChaCha8Rng, r: &SplitRelation) -> BTreeSet<Node> {
    r.nodes().filter(|_| rng.gen_bool(0.3)).collect()
}

fn associativity() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for round in 0..10_000 {
        let (a, b, c, d) = (
            rng.gen_range(0..=3),
            rng.gen_range(0..=3),
            rng.gen_range(0..=3),
            rng.gen_range(0..=3),
        );
        let (p, q, s) = (
            random_preorder(&mut rng, a, b),
            random_preorder(&mut rng, b, c),
            random_preorder(&mut rng, c, d),
        );
        let left = compose_split(&p, &compose_split(&q, &s).unwrap()).unwrap();
        let right = compose_split(&compose_split(&p, &q).unwrap(), &s).unwrap();
        ensure(left == right, || {
            format!("random triple {round}: {p:?} {q:?} {s:?}")
        })?;
    }
    let small: Vec<Vec<Vec<SplitPreorder>>> = (0..=2)
        .map(|n| (0..=2 - n).map(|m| all_split_preorders(n, m)).collect())
        .collect();
    let of = |n: usize, m: usize| small.get(n).and_then(|row| row.get(m));
    let mut exhaustive = 0;
    for a in 0..=2 {
        for b in 0..=2 - a {
            for c in 0..=2 - b {
                for d in 0..=2 - c {
                    let (Some(ps), Some(qs), Some(ss)) = (of(a, b), of(b, c), of(c, d)) else {
                        continue;
                    };
                    for p in ps {
                        for q in qs {
                            let qp = compose_split(p, q).unwrap();
                            for s in ss {
                                let left = compose_split(p, &compose_split(q, s).unwrap()).unwrap();
                                ensure(left == compose_split(&qp, s).unwrap(), || {
                                    format!("{p:?} {q:?} {s:?}")
                                })?;
                                exhaustive += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("10000 random and {exhaustive} exhaustive triples"))
}

fn closure_lemmas() -> Outcome {
    const N: usize = 1000;
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for i in 0..N {
        let (n, m) = dims(&mut rng, 3);
        let p = reflexive(&mut rng, n, m);
        let q0 = reflexive(&mut rng, n, m);
        let s = reflexive(&mut rng, n, m);
        let x = node_subset(&mut rng, &p);
        let y = node_subset(&mut rng, &p);
        let tr_p = transitive_closure(&p);
        let ctx = || format!("instance {i}: {p:?}");

        ensure(pairs(&tr_p) == oracle_closure(&pairs(&p)), || {
            format!("closure oracle, {}", ctx())
        })?;
        ensure(p.is_subset(&tr_p), || {
            format!("closure is extensive, {}", ctx())
        })?;
        ensure(transitive_closure(&tr_p).is_subset(&tr_p), || {
            format!("closure is idempotent, {}", ctx())
        })?;
        let q = p.union(&q0).unwrap();
        ensure(tr_p.is_subset(&transitive_closure(&q)), || {
            format!("closure is monotone, {}", ctx())
        })?;

        let absorbs =
            bar_union(&p, &transitive_closure(&q0)).unwrap() == bar_union(&p, &q0).unwrap();
        ensure(absorbs, || format!("closing an operand first, {}", ctx()))?;
        let assoc = bar_union(&p, &bar_union(&q0, &s).unwrap()).unwrap()
            == bar_union(&bar_union(&p, &q0).unwrap(), &s).unwrap();
        ensure(assoc, || format!("closed union associativity, {}", ctx()))?;

        let qx = SplitRelation::from_pairs(n, m, oracle_restrict(&pairs(&q0), &x)).unwrap();
        let union = tr_p.union(&qx).unwrap();
        let commutes = restrict_away(&transitive_closure(&union), &x)
            == transitive_closure(&restrict_away(&union, &x));
        ensure(commutes, || {
            format!("closure commutes with restriction, {}", ctx())
        })?;

        let distributes =
            restrict_away(&s, &x).union(&qx).unwrap() == restrict_away(&s.union(&qx).unwrap(), &x);
        ensure(distributes, || format!("restriction over union, {}", ctx()))?;

        let both: BTreeSet<Node> = x.union(&y).copied().collect();
        let nested = restrict_away(&restrict_away(&s, &x), &y);
        ensure(pairs(&nested) == oracle_restrict(&pairs(&s), &both), || {
            format!("nested restriction, {}", ctx())
        })?;
        ensure(nested == restrict_away(&restrict_away(&s, &y), &x), || {
            format!("restriction order, {}", ctx())
        })?;
    }
    Ok(format!("{N} random instances"))
}

fn axiom_soundness() -> Outcome {
    let start = Instant::now();
    let mut entries = 0;
    for cat in Category::ALL {
        for ax in axiom_catalog(cat) {
            let r = check_axiom(&ax, 3);
            ensure(r.passed(), || {
                format!(
                    "{cat} {}: {} instances, {:?}",
                    r.name,
                    r.instances,
                    r.failures.first()
                )
            })?;
            entries += 1;
        }
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!("{entries} entries"))
}

fn eta_normal_forms() -> Outcome {
    const N: usize = 1000;
    let cfg = FuzzConfig::default();
    let mut pf = TermSampler::new(Category::PF, 4, cfg);
    for _ in 0..N {
        let f = pf.term();
        let text = || print(f.term());
        let nf = eta_nf(&f).map_err(|e| format!("{}: {e}", text()))?;
        ensure(nf.etas == oracle_etas(&eval(&f)), || {
            format!("eta set of {}", text())
        })?;
        let back = eta_nf_term(&nf).unwrap();
        ensure(eval(&back) == eval(&f), || {
            format!("round trip of {}", text())
        })?;
        ensure(nf.validate().is_ok(), || format!("closure of {}", text()))?;
        ensure(eta_nf(&back).unwrap() == nf, || {
            format!("idempotence on {}", text())
        })?;
    }
    let mut ef = TermSampler::new(Category::EF, 4, cfg);
    for _ in 0..N {
        let f = ef.term();
        let text = || print(f.term());
        let nf = etabar_nf(&f).map_err(|e| format!("{}: {e}", text()))?;
        let want: BTreeSet<_> = oracle_etas(&eval(&f))
            .into_iter()
            .filter(|(i, j)| i < j)
            .collect();
        ensure(nf.etas == want, || format!("eta-bar set of {}", text()))?;
        let back = etabar_nf_term(&nf).unwrap();
        ensure(eval(&back) == eval(&f), || {
            format!("round trip of {}", text())
        })?;
        ensure(nf.validate().is_ok(), || format!("closure of {}", text()))?;
        ensure(etabar_nf(&back).unwrap() == nf, || {
            format!("idempotence on {}", text())
        })?;
    }
    Ok(format!("{N} PF and {N} EF terms"))
}

fn completeness() -> Outcome {
    const N: usize = 500;
    let mut equal_pairs = 0;
    for cat in Category::ALL {
        let mut s = TermSampler::new(cat, 5, FuzzConfig::default());
        for _ in 0..N {
            let (f, g) = s.pair();
            let same = equal(&f, &g).unwrap();
            let payloads = normalize(&f).unwrap() == normalize(&g).unwrap();
            ensure(same == payloads, || {
                format!("{cat}: {} vs {}", print(f.term()), print(g.term()))
            })?;
            equal_pairs += usize::from(same);
        }
    }
    Ok(format!("{N} pairs per category, {equal_pairs} equal"))
}

fn ontoness() -> Outcome {
    let start = Instant::now();
    let (mut preorders, mut equivalences, mut relations) = (0, 0, 0);
    for size in 0..=4 {
        for n in 0..=size {
            let m = size - n;
            for p in all_split_preorders(n, m) {
                let etas = oracle_etas(&SemValue::Preorder(p.clone()));
                let t = eta_nf_term(&EtaNF::new(n, m, etas.clone()).unwrap()).unwrap();
                ensure(eval(&t) == SemValue::Preorder(p.clone()), || {
                    format!("preorder {p:?}")
                })?;
                preorders += 1;
                if let Ok(e) = SplitEquivalence::new(p) {
                    let halves = etas.into_iter().filter(|(i, j)| i < j).collect();
                    let t = etabar_nf_term(&EtaBarNF::new(n, m, halves).unwrap()).unwrap();
                    ensure(eval(&t) == SemValue::Equivalence(e.clone()), || {
                        format!("equivalence {e:?}")
                    })?;
                    equivalences += 1;
                }
            }
        }
    }
    for n in 0..=3 {
        for m in 0..=3 {
            for r in all_binrels(n, m) {
                let t = iota_nf_term(&IotaNF::new(n, m, r.pairs().collect()).unwrap()).unwrap();
                ensure(eval(&t) == SemValue::Rel(r.clone()), || {
                    format!("relation {r:?}")
                })?;
                relations += 1;
            }
        }
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!(
        "{preorders} preorders, {equivalences} equivalences, {relations} relations"
    ))
}

fn embedding_laws() -> Outcome {
    let rels = all_binrels(2, 2);
    for r in &rels {
        for s in &rels {
            let lhs = embed_relation(&compose_rel(r, s).unwrap());
            let rhs = compose_split(&embed_relation(r), &embed_relation(s)).unwrap();
            ensure(lhs == rhs, || format!("relations {r:?} then {s:?}"))?;
        }
    }
    let funcs: Vec<BinRel> = all_binrels(3, 3)
        .into_iter()
        .filter(|f| f.as_function().is_some())
        .collect();
    ensure(funcs.len() == 27, || {
        format!("{} functions 3→3", funcs.len())
    })?;
    for f in &funcs {
        for g in &funcs {
            let lhs = embed_function(&compose_rel(f, g).unwrap()).unwrap();
            let rhs = compose_equivalence(&embed_function(f).unwrap(), &embed_function(g).unwrap())
                .unwrap();
            ensure(lhs == rhs, || format!("functions {f:?} then {g:?}"))?;
        }
    }
    for n in 0..=3 {
        ensure(
            embed_function(&BinRel::identity(n)).unwrap() == identity_split(n),
            || format!("identity on {n}"),
        )?;
    }
    for n in 1..=4 {
        let e = embed_relation(&BinRel::identity(n));
        ensure(&e != identity_split(n).preorder(), || {
            format!("relation identity on {n} is the identity")
        })?;
        ensure(compose_split(&e, &e).unwrap() == e, || {
            format!("relation identity on {n} is not idempotent")
        })?;
    }
    Ok(format!(
        "{} relation pairs, {} function pairs",
        rels.len().pow(2),
        funcs.len().pow(2)
    ))
}

fn key_lemma_examples() -> Outcome {
    let etas: BTreeSet<_> = [(0, 2), (0, 3), (4, 2), (4, 3)].into_iter().collect();
    let t = eta_nf_term(&EtaNF::new(3, 2, etas.clone()).unwrap()).unwrap();
    let picture = [
        (Node::src(0), Node::tgt(0)),
        (Node::src(0), Node::src(2)),
        (Node::tgt(1), Node::src(2)),
        (Node::tgt(1), Node::tgt(0)),
    ];
    let want = SplitPreorder::new(
        SplitRelation::from_pairs(3, 2, picture)
            .unwrap()
            .with_loops(),
    )
    .unwrap();
    ensure(eval(&t) == SemValue::Preorder(want), || {
        format!("eta example evaluates to {:?}", eval(&t))
    })?;
    ensure(eta_nf(&t).unwrap().etas == etas, || {
        "eta example payload".into()
    })?;

    let rb =
        parse("%category RB\nunion(iota(0,0;3,2), union(iota(0,1;3,2), iota(2,0;3,2)))").unwrap();
    let iotas: BTreeSet<_> = [(0, 0), (0, 1), (2, 0)].into_iter().collect();
    ensure(iota_nf(&rb).unwrap().pairs == iotas, || {
        "iota example payload".into()
    })?;
    let back = iota_nf_term(&IotaNF::new(3, 2, iotas).unwrap()).unwrap();
    ensure(eval(&back) == eval(&rb), || {
        "iota example round trip".into()
    })?;
    Ok("3→2 eta and iota examples".into())
}

fn maximality() -> Outcome {
    const N: usize = 500;
    let id1 = SemValue::Rel(BinRel::identity(1));
    let empty1 = SemValue::Rel(BinRel::empty(1, 1));
    for cat in Category::ALL {
        let mut s = TermSampler::new(cat, 9, FuzzConfig::default());
        for _ in 0..N {
            let (v, w) = s.unequal_pair();
            let text = || format!("{cat}: {} vs {}", print(v.term()), print(w.term()));
            let wit = separate(&v, &w).map_err(|e| format!("{}: {e}", text()))?;
            let after =
                |t: &ArrowTerm| eval(&wit.post.compose(&t.compose(&wit.pre).unwrap()).unwrap());
            let results = (after(&v), after(&w));
            ensure(results == wit.results && results.0 != results.1, || {
                format!("results of {}", text())
            })?;
            let small = match wit.case {
                SeparationCase::Cross => (1, 1),
                SeparationCase::Sources => (2, 0),
                SeparationCase::Targets => (0, 2),
            };
            ensure((results.0.n(), results.0.m()) == small, || {
                format!("result type of {}", text())
            })?;
            if cat == Category::RB {
                let sharp = (results.0 == id1 && results.1 == empty1)
                    || (results.0 == empty1 && results.1 == id1);
                ensure(sharp, || format!("RB results of {}", text()))?;
            }
        }
    }
    Ok(format!("{N} unequal pairs per category"))
}

fn cli_goldens() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for i in 0..1000 {
        let cat = Category::ALL[i % 3];
        let mut s = TermSampler::new(cat, rng.gen(), FuzzConfig::default());
        let t = s.term();
        let text = print(t.term());
        let back = parse_with(&text, Some(cat)).map_err(|e| format!("{text}: {e}"))?;
        ensure(back == t, || format!("round trip of {text}"))?;
    }
    let mismatched = common::golden_mismatches();
    ensure(mismatched.is_empty(), || {
        format!("goldens differ: {mismatched:?}")
    })?;
    for seed in [0, 7] {
        let args = ["fuzz", "--seed", &seed.to_string(), "--count", "40"].map(String::from);
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        ensure(common::stdout(&args) == common::stdout(&args), || {
            format!("fuzz seed {seed} differs")
        })?;
        let lib = |c| run_fuzz(c, seed, 40, FuzzConfig::default()).to_json();
        ensure(Category::ALL.iter().all(|&c| lib(c) == lib(c)), || {
            format!("library fuzz seed {seed}")
        })?;
    }
    Ok(format!(
        "1000 round trips, {} goldens, fuzz seeds 0 and 7",
        common::FIXTURES.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("associativity of composition", associativity),
        ("closure and restriction lemmas", closure_lemmas),
        ("equation catalog soundness", axiom_soundness),
        ("eta normal forms", eta_normal_forms),
        ("equality against normal forms", completeness),
        ("ontoness of normal forms", ontoness),
        ("embedding laws", embedding_laws),
        ("worked normal-form examples", key_lemma_examples),
        ("separating contexts", maximality),
        ("printing, goldens and determinism", cli_goldens),
    ];
    let mut out = std::io::stdout().lock();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let spent = start.elapsed();
        let line = match &result {
            Ok(detail) => format!("PASS {:>2} {name}: {detail} ({spent:.1?})", i + 1),
            Err(why) => format!("FAIL {:>2} {name}: {why} ({spent:.1?})", i + 1),
        };
        writeln!(out, "{line}").expect("stdout");
        failed += usize::from(result.is_err());
    }
    writeln!(
        out,
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    )
    .expect("stdout");
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
