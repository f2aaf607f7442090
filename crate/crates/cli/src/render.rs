//! Text pictures of semantic values.
//!
//! Source points sit on the top row and target points on the bottom row.
//! Every link between two distinct points gets its own row in between;
//! loops are never drawn.

use std::collections::BTreeSet;
use std::fmt::Write;

use splitpre::semantics::SemValue;
use splitpre::splcore::{Node, Tag};

const STEP: usize = 4;

/// A link between two distinct points; `forward` is `a → b`, `backward` is
/// `b → a`, with `a` at the smaller column (or the source side).
struct Link {
    a: Node,
    b: Node,
    forward: bool,
    backward: bool,
}

fn links(v: &SemValue) -> Vec<Link> {
    let pairs: BTreeSet<(Node, Node)> = match v {
        SemValue::Rel(r) => r
            .pairs()
            .map(|(i, j)| (Node::src(i), Node::tgt(j)))
            .collect(),
        other => other
            .split_relation()
            .expect("split value")
            .pairs()
            .filter(|(x, y)| x != y)
            .collect(),
    };
    let key = |x: Node| (x.pos, x.tag);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &(x, y) in &pairs {
        let (a, b) = if key(x) <= key(y) { (x, y) } else { (y, x) };
        if seen.insert((a, b)) {
            out.push(Link {
                a,
                b,
                forward: pairs.contains(&(a, b)),
                backward: pairs.contains(&(b, a)),
            });
        }
    }
    out
}

fn label_row(count: usize) -> String {
    let mut s = String::new();
    for i in 0..count {
        let col = i * STEP;
        while s.len() < col {
            s.push(' ');
        }
        write!(s, "{i}").expect("writing to a string");
    }
    s
}

fn tag_char(x: Node) -> char {
    match x.tag {
        Tag::Src => 's',
        Tag::Tgt => 't',
    }
}

fn link_row(l: &Link) -> String {
    let (ca, cb) = (l.a.pos * STEP, l.b.pos * STEP);
    let mut row: Vec<char> = vec![' '; cb + 1];
    if ca == cb {
        row[ca] = match (l.forward, l.backward) {
            (true, true) => '|',
            (true, false) => 'v',
            _ => '^',
        };
    } else {
        let fill = if l.forward && l.backward { '=' } else { '-' };
        for c in row.iter_mut().take(cb).skip(ca + 1) {
            *c = fill;
        }
        if !l.backward {
            row[cb - 1] = '>';
        } else if !l.forward {
            row[ca + 1] = '<';
        }
        row[ca] = tag_char(l.a);
        row[cb] = tag_char(l.b);
    }
    row.into_iter().collect()
}

pub fn ascii(v: &SemValue) -> String {
    let mut out = String::new();
    writeln!(out, "{}", label_row(v.n())).expect("writing to a string");
    for l in links(v) {
        writeln!(out, "{}", link_row(&l)).expect("writing to a string");
    }
    writeln!(out, "{}", label_row(v.m())).expect("writing to a string");
    out
}

fn dot_id(x: Node) -> String {
    format!("{}{}", tag_char(x), x.pos)
}

pub fn dot(v: &SemValue) -> String {
    let mut out = String::from("digraph G {\n  rankdir=TB;\n");
    let row = |tag: &str, count: usize| -> String {
        let ids: Vec<String> = (0..count).map(|i| format!("{tag}{i}")).collect();
        format!(
            "  {{ rank=same; {} }}\n",
            ids.iter()
                .map(|s| format!("{s};"))
                .collect::<Vec<_>>()
                .join(" ")
        )
    };
    if v.n() > 0 {
        out += &row("s", v.n());
    }
    if v.m() > 0 {
        out += &row("t", v.m());
    }
    for l in links(v) {
        if l.forward {
            writeln!(out, "  {} -> {};", dot_id(l.a), dot_id(l.b)).expect("writing to a string");
        }
        if l.backward {
            writeln!(out, "  {} -> {};", dot_id(l.b), dot_id(l.a)).expect("writing to a string");
        }
    }
    out.push_str("}\n");
    out
}
