use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::NfError;
use crate::semantics::eval;
use crate::termlang::derived::{iota, union_all};
use crate::termlang::{ArrowTerm, Category};

/// Iota normal-form payload: the pairs of the denoted relation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IotaNF {
    pub n: usize,
    pub m: usize,
    pub pairs: BTreeSet<(usize, usize)>,
}

impl IotaNF {
    pub fn new(n: usize, m: usize, pairs: BTreeSet<(usize, usize)>) -> Result<Self, NfError> {
        if let Some(&(i, j)) = pairs.iter().find(|&&(i, j)| i >= n || j >= m) {
            return Err(NfError::Invalid(format!("pair ({i},{j}) outside {n}→{m}")));
        }
        Ok(IotaNF { n, m, pairs })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

pub fn iota_nf(t: &ArrowTerm) -> Result<IotaNF, NfError> {
    if t.category() != Category::RB {
        return Err(NfError::WrongCategory(t.category()));
    }
    let v = eval(t);
    let r = v.rel().expect("RB evaluates to a relation");
    Ok(IotaNF {
        n: r.n(),
        m: r.m(),
        pairs: r.pairs().collect(),
    })
}

/// Right-nested union of the sorted iotas; empty gives `zero(n,m)`.
pub fn iota_nf_term(nf: &IotaNF) -> Result<ArrowTerm, NfError> {
    let nf = IotaNF::new(nf.n, nf.m, nf.pairs.clone())?;
    let iotas = nf
        .pairs
        .iter()
        .map(|&(i, j)| iota(i, j, nf.n, nf.m))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ArrowTerm::new(
        Category::RB,
        union_all(nf.n, nf.m, &iotas)?,
    )?)
}
