use super::ast::Term;

/// Canonical text: `g . f` for `g ∘ f`, parentheses only around a
/// composite standing on the left of a dot.
pub fn print(t: &Term) -> String {
    let mut out = String::new();
    write_term(t, &mut out);
    out
}

fn write_term(t: &Term, out: &mut String) {
    match t {
        Term::Comp(after, before) => {
            write_atom(after, out);
            out.push_str(" . ");
            write_term(before, out);
        }
        leaf => write_atom(leaf, out),
    }
}

fn write_atom(t: &Term, out: &mut String) {
    match t {
        Term::Id(n) => out.push_str(&format!("id({n})")),
        Term::Gen {
            left: 0,
            gen,
            right: 0,
        } => out.push_str(&gen.to_string()),
        Term::Gen { left, gen, right } => out.push_str(&format!("pad({left}, {gen}, {right})")),
        comp @ Term::Comp(..) => {
            out.push('(');
            write_term(comp, out);
            out.push(')');
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::termlang::Generator::*;

    #[test]
    fn examples() {
        assert_eq!(
            print(&Term::comp(Term::gen(Counit), Term::gen(Unit))),
            "counit . unit"
        );
        assert_eq!(print(&Term::padded_gen(1, H, 0)), "pad(1, h, 0)");
        assert_eq!(print(&Term::gen(Nabla(2))), "nabla(2)");
        let left = Term::comp(Term::comp(Term::gen(H), Term::gen(Swap)), Term::Id(2));
        assert_eq!(print(&left), "(h . swap) . id(2)");
        let right = Term::comp(Term::gen(H), Term::comp(Term::gen(Swap), Term::Id(2)));
        assert_eq!(print(&right), "h . swap . id(2)");
    }
}
