//! Seeded random terms and semantic values, exhaustive enumeration of small
//! values, and the fuzz report.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::maximality::separate;
use crate::normalform::{axiom_catalog, normalize, NormalForm};
use crate::semantics::{equal, eval, SemValue};
use crate::splcore::{BinRel, SplitEquivalence, SplitPreorder, SplitRelation};
use crate::termlang::derived::{counits, units};
use crate::termlang::{pad, ArrowTerm, Category, Generator, Term};

/// Bounds for sampled terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzConfig {
    /// Nesting depth of compositions.
    pub max_depth: usize,
    /// Padding on either side of a generator leaf.
    pub max_pad: usize,
    /// Source width of a sampled term; also bounds the RB arity index `k`.
    pub max_arity: usize,
    /// No intermediate object is wider than this.
    pub max_width: usize,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            max_depth: 6,
            max_pad: 3,
            max_arity: 3,
            max_width: 6,
        }
    }
}

fn generators(cat: Category, max_arity: usize) -> Vec<Generator> {
    use Generator::*;
    match cat {
        Category::PF => vec![Unit, Counit, Swap, H],
        Category::EF => vec![Unit, Counit, Swap, HBar],
        Category::RB => (0..=max_arity.min(2))
            .flat_map(|k| [Nabla(k), Delta(k), UnitK(k), CounitK(k)])
            .collect(),
    }
}

/// Random well-typed terms of one category, reproducible from a seed.
pub struct TermSampler {
    cat: Category,
    cfg: FuzzConfig,
    rng: ChaCha8Rng,
    gens: Vec<Generator>,
    equations: Option<Vec<(Term, Term)>>,
}

impl TermSampler {
    pub fn new(cat: Category, seed: u64, cfg: FuzzConfig) -> Self {
        TermSampler {
            cat,
            cfg,
            rng: ChaCha8Rng::seed_from_u64(seed),
            gens: generators(cat, cfg.max_arity),
            equations: None,
        }
    }

    pub fn category(&self) -> Category {
        self.cat
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    fn leaf(&mut self, src: usize) -> Term {
        let (pmax, width) = (self.cfg.max_pad, self.cfg.max_width);
        let mut options = Vec::new();
        for &g in &self.gens {
            let a = g.arity();
            if a.src > src || src - a.src > 2 * pmax || src - a.src + a.tgt > width {
                continue;
            }
            let rest = src - a.src;
            for left in rest.saturating_sub(pmax)..=rest.min(pmax) {
                options.push(Term::padded_gen(left, g, rest - left));
            }
        }
        if options.is_empty() || self.rng.gen_ratio(1, 8) {
            return Term::Id(src);
        }
        options.choose(&mut self.rng).expect("nonempty").clone()
    }

    fn grow(&mut self, src: usize, depth: usize) -> Term {
        if depth == 0 || self.rng.gen_ratio(1, 4) {
            return self.leaf(src);
        }
        let before = self.grow(src, depth - 1);
        let mid = before.type_of().expect("sampled terms are typed").tgt;
        let after = self.grow(mid, depth - 1);
        Term::comp(after, before)
    }

    fn arrow(&self, t: Term) -> ArrowTerm {
        ArrowTerm::new(self.cat, t).expect("sampled terms are typed")
    }

    /// A term with source at most `max_arity` and depth at most `max_depth`.
    pub fn term(&mut self) -> ArrowTerm {
        let src = self.rng.gen_range(0..=self.cfg.max_arity);
        self.term_from(src)
    }

    pub fn term_from(&mut self, src: usize) -> ArrowTerm {
        let t = self.grow(src, self.cfg.max_depth);
        self.arrow(t)
    }

    /// A term `n → m`; if sampling misses `m`, the target is fixed with units
    /// or counits on the right.
    pub fn term_of_type(&mut self, n: usize, m: usize) -> ArrowTerm {
        let mut t = self.grow(n, self.cfg.max_depth);
        for _ in 0..32 {
            if t.type_of().expect("typed").tgt == m {
                return self.arrow(t);
            }
            t = self.grow(n, self.cfg.max_depth);
        }
        let k = t.type_of().expect("typed").tgt;
        let fix = if k > m {
            pad(m, &counits(self.cat, k - m), 0)
        } else {
            pad(k, &units(self.cat, m - k), 0)
        };
        self.arrow(Term::comp(fix, t))
    }

    fn equation(&mut self) -> (Term, Term) {
        if self.equations.is_none() {
            let mut eqs = Vec::new();
            for ax in axiom_catalog(self.cat) {
                for inst in ax.instances(1) {
                    if let Ok((l, r)) = ax.instantiate(&inst) {
                        if l.src().max(l.tgt()) <= self.cfg.max_width {
                            eqs.push((l.into_term(), r.into_term()));
                        }
                    }
                }
            }
            self.equations = Some(eqs);
        }
        let eqs = self.equations.as_ref().expect("filled above");
        eqs[self.rng.gen_range(0..eqs.len())].clone()
    }

    /// Two terms of equal type. About a third are equal by construction: one
    /// catalog equation between a shared context.
    pub fn pair(&mut self) -> (ArrowTerm, ArrowTerm) {
        if self.rng.gen_ratio(1, 3) {
            let (l, r) = self.equation();
            let ty = l.type_of().expect("typed");
            let src = self.rng.gen_range(0..=self.cfg.max_arity);
            let saved = self.cfg.max_depth;
            self.cfg.max_depth = 2;
            let pre = self.term_of_type(src, ty.src).into_term();
            let post = self.term_from(ty.tgt).into_term();
            self.cfg.max_depth = saved;
            let wrap = |mid: Term| Term::comp(post.clone(), Term::comp(mid, pre.clone()));
            return (self.arrow(wrap(l)), self.arrow(wrap(r)));
        }
        let f = self.term();
        let g = self.term_of_type(f.src(), f.tgt());
        (f, g)
    }

    /// A pair with distinct values.
    pub fn unequal_pair(&mut self) -> (ArrowTerm, ArrowTerm) {
        loop {
            let (f, g) = self.pair();
            if eval(&f) != eval(&g) {
                return (f, g);
            }
        }
    }
}

/// A uniformly random split relation on `n + m` points.
pub fn random_split_relation(
    rng: &mut impl Rng,
    n: usize,
    m: usize,
    density: f64,
) -> SplitRelation {
    let size = n + m;
    let mut r = SplitRelation::empty(n, m);
    for i in 0..size {
        for j in 0..size {
            if rng.gen_bool(density) {
                r.insert(r.unflat(i), r.unflat(j)).expect("in bounds");
            }
        }
    }
    r
}

/// The preorder generated by a random relation.
pub fn random_preorder(rng: &mut impl Rng, n: usize, m: usize) -> SplitPreorder {
    let density = rng.gen_range(0.0..0.5);
    let r = random_split_relation(rng, n, m, density);
    SplitPreorder::generated_by(n, m, r.pairs().collect::<Vec<_>>()).expect("in bounds")
}

pub fn random_equivalence(rng: &mut impl Rng, n: usize, m: usize) -> SplitEquivalence {
    let density = rng.gen_range(0.0..0.4);
    let r = random_split_relation(rng, n, m, density);
    let sym = r.union(&r.converse()).expect("same type");
    let p = SplitPreorder::generated_by(n, m, sym.pairs().collect::<Vec<_>>()).expect("in bounds");
    SplitEquivalence::new(p).expect("closure of a symmetric relation")
}

pub fn random_binrel(rng: &mut impl Rng, n: usize, m: usize) -> BinRel {
    let density = rng.gen_range(0.0..1.0);
    let pairs: Vec<_> = (0..n).flat_map(|i| (0..m).map(move |j| (i, j))).collect();
    BinRel::from_pairs(n, m, pairs.into_iter().filter(|_| rng.gen_bool(density)))
        .expect("in bounds")
}

/// Every split preorder `n → m`.
pub fn all_split_preorders(n: usize, m: usize) -> Vec<SplitPreorder> {
    let size = n + m;
    let base = SplitRelation::empty(n, m);
    let off: Vec<(usize, usize)> = (0..size)
        .flat_map(|i| (0..size).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let loops: Vec<_> = (0..size)
        .map(|i| (base.unflat(i), base.unflat(i)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << off.len()) {
        let chosen = off
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &(i, j))| (base.unflat(i), base.unflat(j)));
        let r = SplitRelation::from_pairs(n, m, loops.iter().copied().chain(chosen))
            .expect("in bounds");
        if let Ok(p) = SplitPreorder::new(r) {
            out.push(p);
        }
    }
    out
}

/// Every binary relation `n → m`.
pub fn all_binrels(n: usize, m: usize) -> Vec<BinRel> {
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..m).map(move |j| (i, j))).collect();
    (0u64..(1u64 << cells.len()))
        .map(|mask| {
            let pairs = cells
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &p)| p);
            BinRel::from_pairs(n, m, pairs).expect("in bounds")
        })
        .collect()
}

/// Totals of one fuzz run; any nonzero failure count fails the run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FuzzReport {
    pub category: Option<Category>,
    pub seed: u64,
    pub count: usize,
    pub roundtrip_failures: usize,
    pub equal_pairs: usize,
    pub unequal_pairs: usize,
    pub agreement_failures: usize,
    pub separation_failures: usize,
    /// The first few failures, printed.
    pub examples: Vec<String>,
}

impl FuzzReport {
    pub fn passed(&self) -> bool {
        self.roundtrip_failures + self.agreement_failures + self.separation_failures == 0
    }

    fn fail(&mut self, msg: String) {
        if self.examples.len() < 5 {
            self.examples.push(msg);
        }
    }

    pub fn to_text(&self) -> String {
        let cat = self.category.map_or("-", |c| c.name());
        let mut s = format!("category {cat} seed {} count {}\n", self.seed, self.count);
        s += &format!(
            "normal-form round trips: {} failures\n",
            self.roundtrip_failures
        );
        s += &format!(
            "pairs: {} equal, {} unequal, {} disagreements\n",
            self.equal_pairs, self.unequal_pairs, self.agreement_failures
        );
        s += &format!("separations: {} failures\n", self.separation_failures);
        for e in &self.examples {
            s += &format!("  {e}\n");
        }
        s += if self.passed() {
            "result: pass\n"
        } else {
            "result: FAIL\n"
        };
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

fn roundtrip_ok(f: &ArrowTerm) -> Result<(), String> {
    let nf = normalize(f).map_err(|e| e.to_string())?;
    let back = nf.term().map_err(|e| e.to_string())?;
    if eval(&back) != eval(f) {
        return Err("reconstructed term evaluates differently".into());
    }
    if normalize(&back).map_err(|e| e.to_string())? != nf {
        return Err("normal form is not idempotent".into());
    }
    let closed = match &nf {
        NormalForm::Eta(e) => e.validate(),
        NormalForm::EtaBar(e) => e.validate(),
        NormalForm::Iota(_) => Ok(()),
    };
    closed.map_err(|e| e.to_string())
}

fn rb_sharp(results: &(SemValue, SemValue)) -> bool {
    let (id, empty) = (
        SemValue::Rel(BinRel::identity(1)),
        SemValue::Rel(BinRel::empty(1, 1)),
    );
    (results.0 == id && results.1 == empty) || (results.0 == empty && results.1 == id)
}

/// Checks `count` terms and `count` pairs: normal-form round trips,
/// equality against normal-form payloads, and separation of unequal pairs.
pub fn run_fuzz(cat: Category, seed: u64, count: usize, cfg: FuzzConfig) -> FuzzReport {
    let mut report = FuzzReport {
        category: Some(cat),
        seed,
        count,
        ..FuzzReport::default()
    };
    let mut sampler = TermSampler::new(cat, seed, cfg);
    for _ in 0..count {
        let f = sampler.term();
        if let Err(e) = roundtrip_ok(&f) {
            report.roundtrip_failures += 1;
            report.fail(format!(
                "round trip: {}: {e}",
                crate::termlang::print(f.term())
            ));
        }
    }
    for _ in 0..count {
        let (f, g) = sampler.pair();
        let same = equal(&f, &g).expect("pair has one type");
        let payloads = normalize(&f).ok() == normalize(&g).ok();
        if same != payloads {
            report.agreement_failures += 1;
            report.fail(format!(
                "agreement: {} vs {}",
                crate::termlang::print(f.term()),
                crate::termlang::print(g.term())
            ));
        }
        if same {
            report.equal_pairs += 1;
            continue;
        }
        report.unequal_pairs += 1;
        match separate(&f, &g) {
            Ok(w)
                if w.results.0 != w.results.1 && (cat != Category::RB || rb_sharp(&w.results)) => {}
            Ok(_) => {
                report.separation_failures += 1;
                report.fail(format!(
                    "separation results: {}",
                    crate::termlang::print(f.term())
                ));
            }
            Err(e) => {
                report.separation_failures += 1;
                report.fail(format!("separation: {e}"));
            }
        }
    }
    report
}
