use super::ast::{ArrowTerm, Category, Generator, Term, TermError};
use super::derived;

/// Surface syntax before category resolution and desugaring.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Syn {
    Id(usize),
    Unit,
    Counit,
    Swap,
    H,
    HBar,
    Nabla(usize),
    Delta(usize),
    UnitK(usize),
    CounitK(usize),
    Pad(usize, Box<Syn>, usize),
    Plus(Box<Syn>, Box<Syn>),
    Eta(usize, usize, usize),
    EtaBar(usize, usize, usize),
    Iota(usize, usize, usize, usize),
    Zero(usize, usize),
    Union(Box<Syn>, Box<Syn>),
    Comp(Box<Syn>, Box<Syn>),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, TermError> {
        Err(TermError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), TermError> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += 1;
                Ok(())
            }
            Some(d) => self.err(format!("expected '{}', found '{}'", c as char, d as char)),
            None => self.err(format!("expected '{}', found end of input", c as char)),
        }
    }

    fn nat(&mut self) -> Result<usize, TermError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a natural number");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits.parse().map_err(|_| TermError::Syntax {
            pos: start,
            msg: "number too large".into(),
        })
    }

    fn word(&mut self) -> Result<(usize, &'a str), TermError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_lowercase() {
            self.pos += 1;
        }
        if start == self.pos {
            return match self.src.get(self.pos) {
                Some(c) => self.err(format!("unexpected '{}'", *c as char)),
                None => self.err("unexpected end of input"),
            };
        }
        Ok((
            start,
            std::str::from_utf8(&self.src[start..self.pos]).expect("ascii letters"),
        ))
    }

    fn nats<const N: usize>(&mut self, seps: [u8; N]) -> Result<Vec<usize>, TermError> {
        self.expect(b'(')?;
        let mut out = vec![self.nat()?];
        for s in seps {
            self.expect(s)?;
            out.push(self.nat()?);
        }
        self.expect(b')')?;
        Ok(out)
    }

    fn term(&mut self) -> Result<Syn, TermError> {
        let first = self.atom()?;
        if self.peek() == Some(b'.') {
            self.pos += 1;
            let rest = self.term()?;
            Ok(Syn::Comp(Box::new(first), Box::new(rest)))
        } else {
            Ok(first)
        }
    }

    fn two_terms(&mut self) -> Result<(Box<Syn>, Box<Syn>), TermError> {
        self.expect(b'(')?;
        let a = self.term()?;
        self.expect(b',')?;
        let b = self.term()?;
        self.expect(b')')?;
        Ok((Box::new(a), Box::new(b)))
    }

    fn atom(&mut self) -> Result<Syn, TermError> {
        if self.peek() == Some(b'(') {
            self.pos += 1;
            let t = self.term()?;
            self.expect(b')')?;
            return Ok(t);
        }
        let (start, w) = self.word()?;
        let syn = match w {
            "id" => Syn::Id(self.nats([])?[0]),
            "unit" => Syn::Unit,
            "counit" => Syn::Counit,
            "swap" => Syn::Swap,
            "h" => Syn::H,
            "hbar" => Syn::HBar,
            "nabla" => Syn::Nabla(self.nats([])?[0]),
            "delta" => Syn::Delta(self.nats([])?[0]),
            "unitk" => Syn::UnitK(self.nats([])?[0]),
            "counitk" => Syn::CounitK(self.nats([])?[0]),
            "pad" => {
                self.expect(b'(')?;
                let l = self.nat()?;
                self.expect(b',')?;
                let t = self.term()?;
                self.expect(b',')?;
                let r = self.nat()?;
                self.expect(b')')?;
                Syn::Pad(l, Box::new(t), r)
            }
            "plus" => {
                let (a, b) = self.two_terms()?;
                Syn::Plus(a, b)
            }
            "union" => {
                let (a, b) = self.two_terms()?;
                Syn::Union(a, b)
            }
            "eta" => {
                let v = self.nats(*b",,")?;
                Syn::Eta(v[0], v[1], v[2])
            }
            "etabar" => {
                let v = self.nats(*b",,")?;
                Syn::EtaBar(v[0], v[1], v[2])
            }
            "iota" => {
                let v = self.nats(*b",;,")?;
                Syn::Iota(v[0], v[1], v[2], v[3])
            }
            "zero" => {
                let v = self.nats(*b",")?;
                Syn::Zero(v[0], v[1])
            }
            other => {
                return Err(TermError::Syntax {
                    pos: start,
                    msg: format!("unknown atom {other:?}"),
                })
            }
        };
        Ok(syn)
    }
}

#[derive(Default)]
struct Markers {
    pf: Option<&'static str>,
    ef: Option<&'static str>,
    rb: Option<&'static str>,
}

fn scan(s: &Syn, mk: &mut Markers) {
    match s {
        Syn::H => {
            mk.pf.get_or_insert("h");
        }
        Syn::Eta(..) => {
            mk.pf.get_or_insert("eta");
        }
        Syn::HBar => {
            mk.ef.get_or_insert("hbar");
        }
        Syn::EtaBar(..) => {
            mk.ef.get_or_insert("etabar");
        }
        Syn::Nabla(_) => {
            mk.rb.get_or_insert("nabla");
        }
        Syn::Delta(_) => {
            mk.rb.get_or_insert("delta");
        }
        Syn::UnitK(_) => {
            mk.rb.get_or_insert("unitk");
        }
        Syn::CounitK(_) => {
            mk.rb.get_or_insert("counitk");
        }
        Syn::Iota(..) => {
            mk.rb.get_or_insert("iota");
        }
        Syn::Union(a, b) => {
            mk.rb.get_or_insert("union");
            scan(a, mk);
            scan(b, mk);
        }
        Syn::Pad(_, t, _) => scan(t, mk),
        Syn::Plus(a, b) | Syn::Comp(a, b) => {
            scan(a, mk);
            scan(b, mk);
        }
        Syn::Id(_) | Syn::Unit | Syn::Counit | Syn::Swap | Syn::Zero(..) => {}
    }
}

/// The least signature covering the markers, checked against an override.
fn resolve(mk: &Markers, forced: Option<Category>) -> Result<Category, TermError> {
    if let (Some(r), Some(o)) = (mk.rb, mk.pf.or(mk.ef)) {
        return Err(TermError::Mixed(format!("{r} (RB) together with {o}")));
    }
    let inferred = if mk.rb.is_some() {
        Category::RB
    } else if mk.pf.is_some() {
        Category::PF
    } else {
        Category::EF
    };
    let Some(cat) = forced else {
        return Ok(inferred);
    };
    let offending = match cat {
        Category::PF => mk.rb,
        Category::EF => mk.pf.or(mk.rb),
        Category::RB => mk.pf.or(mk.ef),
    };
    match offending {
        Some(g) => Err(TermError::WrongCategory {
            gen: g.to_string(),
            category: cat,
        }),
        None => Ok(cat),
    }
}

fn elaborate(s: &Syn, cat: Category) -> Result<Term, TermError> {
    use Category::*;
    let leaf = |g: Generator| Ok(Term::gen(g));
    match s {
        Syn::Id(n) => Ok(Term::Id(*n)),
        Syn::Unit => leaf(if cat == RB {
            Generator::UnitK(1)
        } else {
            Generator::Unit
        }),
        Syn::Counit => leaf(if cat == RB {
            Generator::CounitK(1)
        } else {
            Generator::Counit
        }),
        Syn::Swap => Ok(derived::tau(cat)),
        Syn::H => leaf(Generator::H),
        Syn::HBar if cat == PF => Ok(derived::hbar_in_pf()),
        Syn::HBar => leaf(Generator::HBar),
        Syn::Nabla(k) => leaf(Generator::Nabla(*k)),
        Syn::Delta(k) => leaf(Generator::Delta(*k)),
        Syn::UnitK(k) => leaf(Generator::UnitK(*k)),
        Syn::CounitK(k) => leaf(Generator::CounitK(*k)),
        Syn::Pad(l, t, r) => Ok(super::pad(*l, &elaborate(t, cat)?, *r)),
        Syn::Plus(a, b) => super::plus(&elaborate(a, cat)?, &elaborate(b, cat)?),
        Syn::Eta(i, j, n) => crate::normalform::eta_term(*i, *j, *n).map(ArrowTerm::into_term),
        Syn::EtaBar(i, j, n) if cat == PF => derived::etabar_in_pf(*i, *j, *n),
        Syn::EtaBar(i, j, n) => {
            crate::normalform::etabar_term(*i, *j, *n).map(ArrowTerm::into_term)
        }
        Syn::Iota(i, j, n, m) => derived::iota(*i, *j, *n, *m),
        Syn::Zero(n, m) => Ok(derived::zero(cat, *n, *m)),
        Syn::Union(a, b) => derived::union(&elaborate(a, cat)?, &elaborate(b, cat)?),
        Syn::Comp(a, b) => super::compose(elaborate(a, cat)?, elaborate(b, cat)?),
    }
}

fn split_header(text: &str) -> Result<(Option<Category>, usize), TermError> {
    let trimmed = text.trim_start();
    let offset = text.len() - trimmed.len();
    let Some(rest) = trimmed.strip_prefix('%') else {
        return Ok((None, 0));
    };
    let line_end = rest.find('\n').unwrap_or(rest.len());
    let line = &rest[..line_end];
    let Some(name) = line.strip_prefix("category") else {
        return Err(TermError::Syntax {
            pos: offset,
            msg: "expected %category header".into(),
        });
    };
    let cat = name.trim().parse().map_err(|_| TermError::Syntax {
        pos: offset,
        msg: format!("bad category {:?}", name.trim()),
    })?;
    Ok((Some(cat), offset + 1 + line_end))
}

/// Parses with the category taken from the header or inferred.
pub fn parse(text: &str) -> Result<ArrowTerm, TermError> {
    parse_with(text, None)
}

/// Parses; `forced` overrides any header.
pub fn parse_with(text: &str, forced: Option<Category>) -> Result<ArrowTerm, TermError> {
    let (header, start) = split_header(text)?;
    let mut p = Parser {
        src: text.as_bytes(),
        pos: start,
    };
    let syn = p.term()?;
    if let Some(c) = p.peek() {
        return p.err(format!("trailing input starting at '{}'", c as char));
    }
    let mut mk = Markers::default();
    scan(&syn, &mut mk);
    let cat = resolve(&mk, forced.or(header))?;
    ArrowTerm::new(cat, elaborate(&syn, cat)?)
}
