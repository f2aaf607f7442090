//! Split preorders and the categories PF, EF and RB presented by
//! generators: terms, their semantics, normal forms, the equation catalog
//! and maximality witnesses.

pub mod fuzz;
pub mod maximality;
pub mod normalform;
pub mod semantics;
pub mod splcore;
pub mod termlang;
