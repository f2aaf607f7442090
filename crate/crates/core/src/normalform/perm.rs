use thiserror::Error;

use crate::termlang::{chain, Generator, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("image {0:?} is not a bijection")]
    NotBijective(Vec<usize>),
    #[error("permutation sends {k} to {actual}, not {l}")]
    WrongPair { k: usize, l: usize, actual: usize },
}

/// A bijection on `0..N`, given by its image sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn new(image: Vec<usize>) -> Result<Self, PermError> {
        let mut seen = vec![false; image.len()];
        for &j in &image {
            if j >= image.len() || std::mem::replace(&mut seen[j], true) {
                return Err(PermError::NotBijective(image));
            }
        }
        Ok(Perm(image))
    }

    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn image(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.size()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Positions of adjacent swaps, in the order they are applied.
    fn swaps(&self) -> Vec<usize> {
        let mut arr = self.0.clone();
        let mut out = Vec::new();
        let mut dirty = true;
        while dirty {
            dirty = false;
            for p in 0..arr.len().saturating_sub(1) {
                if arr[p] > arr[p + 1] {
                    arr.swap(p, p + 1);
                    out.push(p);
                    dirty = true;
                }
            }
        }
        out
    }

    /// All permutations of `0..n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Perm> {
        fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Perm>) {
            if prefix.len() == used.len() {
                out.push(Perm(prefix.clone()));
                return;
            }
            for j in 0..used.len() {
                if !used[j] {
                    used[j] = true;
                    prefix.push(j);
                    go(prefix, used, out);
                    prefix.pop();
                    used[j] = false;
                }
            }
        }
        let mut out = Vec::new();
        go(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }
}

fn swap_term(n: usize, p: usize) -> Term {
    Term::padded_gen(p, Generator::Swap, n - p - 2)
}

/// Adjacent transpositions realizing `p`: source `i` is linked to target `p(i)`.
pub fn perm_term(p: &Perm) -> Term {
    let sw = p.swaps();
    if sw.is_empty() {
        return Term::Id(p.size());
    }
    chain(sw.iter().rev().map(|&q| swap_term(p.size(), q)).collect())
}

/// `π⁻¹`: the factors of [`perm_term`] in reverse order.
pub fn perm_term_inverse(p: &Perm) -> Term {
    let sw = p.swaps();
    if sw.is_empty() {
        return Term::Id(p.size());
    }
    chain(sw.iter().map(|&q| swap_term(p.size(), q)).collect())
}

/// `π^{-(k,l)}`: drops the pair `(k, π(k) = l)` and closes the gaps.
pub fn perm_remove(p: &Perm, k: usize, l: usize) -> Result<Perm, PermError> {
    let actual = p.apply(k);
    if actual != l {
        return Err(PermError::WrongPair { k, l, actual });
    }
    let n = p.size() - 1;
    let image = (0..n)
        .map(|i| {
            let t = p.apply(if i < k { i } else { i + 1 });
            if t < l {
                t
            } else {
                t - 1
            }
        })
        .collect();
    Ok(Perm(image))
}
