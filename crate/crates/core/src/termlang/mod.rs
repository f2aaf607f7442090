//! Arrow terms over the PF, EF and RB signatures, the textual syntax, and
//! derived constructors.

mod ast;
pub mod derived;
mod parser;
mod printer;

pub use ast::{
    chain, chain_of, compose, drop_ids, pad, plus, unify, ArrowTerm, Category, Generator, Term,
    TermError, TermType,
};
pub use derived::derived;
pub use parser::{parse, parse_with};
pub use printer::print;
