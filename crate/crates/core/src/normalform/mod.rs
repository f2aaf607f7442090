//! Canonical normal forms (eta for PF/EF, iota for RB), the permutation
//! toolkit, the equation catalog and single-step rewriting.

pub mod catalog;
mod eta;
mod iota;
mod perm;
mod rewrite;

use thiserror::Error;

use crate::semantics::SemError;
use crate::termlang::{ArrowTerm, Category, TermError};

pub use catalog::{
    axiom_catalog, catalog_json, check_axiom, find_axiom, Axiom, AxiomCheck, Instance, Origin,
};
pub use eta::{
    bridge_with, canonical_pi, eta_nf, eta_nf_term, eta_term, etabar_nf, etabar_nf_term,
    etabar_term, EtaBarNF, EtaNF,
};
pub use iota::{iota_nf, iota_nf_term, IotaNF};
pub use perm::{perm_remove, perm_term, perm_term_inverse, Perm, PermError};
pub use rewrite::{apply_axiom, matches, Direction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NfError {
    #[error("not available in {0}")]
    WrongCategory(Category),
    #[error("invalid normal form: {0}")]
    Invalid(String),
    #[error("bad instance: {0}")]
    Instance(String),
    #[error("{axiom} does not match at factor {position}")]
    NoMatch { axiom: String, position: usize },
    #[error(transparent)]
    Sem(#[from] SemError),
    #[error(transparent)]
    Term(#[from] TermError),
}

/// The normal form matching a term's category.
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(untagged)]
pub enum NormalForm {
    Eta(EtaNF),
    EtaBar(EtaBarNF),
    Iota(IotaNF),
}

impl NormalForm {
    /// The canonical term of the payload.
    pub fn term(&self) -> Result<ArrowTerm, NfError> {
        match self {
            NormalForm::Eta(nf) => eta_nf_term(nf),
            NormalForm::EtaBar(nf) => etabar_nf_term(nf),
            NormalForm::Iota(nf) => iota_nf_term(nf),
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            NormalForm::Eta(nf) => nf.to_json(),
            NormalForm::EtaBar(nf) => nf.to_json(),
            NormalForm::Iota(nf) => nf.to_json(),
        }
    }
}

/// Eta normal form in PF, overlined eta in EF, iota in RB.
pub fn normalize(t: &ArrowTerm) -> Result<NormalForm, NfError> {
    Ok(match t.category() {
        Category::PF => NormalForm::Eta(eta_nf(t)?),
        Category::EF => NormalForm::EtaBar(etabar_nf(t)?),
        Category::RB => NormalForm::Iota(iota_nf(t)?),
    })
}
