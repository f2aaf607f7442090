use std::fmt;

use super::matrix::BitMatrix;
use super::SplError;

/// A binary relation between the ordinals `n` and `m`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinRel {
    n: usize,
    m: usize,
    bits: BitMatrix,
}

impl BinRel {
    pub fn empty(n: usize, m: usize) -> Self {
        BinRel {
            n,
            m,
            bits: BitMatrix::new(n, m),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut r = BinRel::empty(n, n);
        for i in 0..n {
            r.bits.set(i, i);
        }
        r
    }

    pub fn from_pairs<I>(n: usize, m: usize, pairs: I) -> Result<Self, SplError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut r = BinRel::empty(n, m);
        for (i, j) in pairs {
            r.insert(i, j)?;
        }
        Ok(r)
    }

    /// The graph of `f`, with `f[i]` the image of `i`.
    pub fn from_function(m: usize, f: &[usize]) -> Result<Self, SplError> {
        BinRel::from_pairs(f.len(), m, f.iter().copied().enumerate())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn insert(&mut self, i: usize, j: usize) -> Result<(), SplError> {
        if i >= self.n || j >= self.m {
            return Err(SplError::PairOutOfBounds {
                pair: (i, j),
                n: self.n,
                m: self.m,
            });
        }
        self.bits.set(i, j);
        Ok(())
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        i < self.n && j < self.m && self.bits.get(i, j)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.bits.ones()
    }

    pub fn len(&self) -> usize {
        self.bits.count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `Some(f)` when the relation is total and single-valued.
    pub fn as_function(&self) -> Option<Vec<usize>> {
        let mut f = vec![None; self.n];
        for (i, j) in self.pairs() {
            if f[i].replace(j).is_some() {
                return None;
            }
        }
        f.into_iter().collect()
    }

    pub fn tensor(&self, other: &BinRel) -> BinRel {
        let mut r = BinRel::empty(self.n + other.n, self.m + other.m);
        for (i, j) in self.pairs() {
            r.bits.set(i, j);
        }
        for (i, j) in other.pairs() {
            r.bits.set(self.n + i, self.m + j);
        }
        r
    }

    pub fn padded(&self, l: usize, r: usize) -> BinRel {
        if l == 0 && r == 0 {
            return self.clone();
        }
        BinRel::identity(l)
            .tensor(self)
            .tensor(&BinRel::identity(r))
    }

    pub fn union(&self, other: &BinRel) -> Result<BinRel, SplError> {
        if (self.n, self.m) != (other.n, other.m) {
            return Err(SplError::TypeMismatch {
                left: (self.n, self.m),
                right: (other.n, other.m),
            });
        }
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        Ok(BinRel {
            n: self.n,
            m: self.m,
            bits,
        })
    }

    pub fn symmetric_difference(&self, other: &BinRel) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = self
            .pairs()
            .filter(|&(i, j)| !other.contains(i, j))
            .chain(other.pairs().filter(|&(i, j)| !self.contains(i, j)))
            .collect();
        out.sort_unstable();
        out
    }
}

impl fmt::Debug for BinRel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}→{} {{", self.n, self.m)?;
        for (k, (i, j)) in self.pairs().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({i},{j})")?;
        }
        write!(f, "}}")
    }
}

/// `S ∘ R`, with `r` applied first.
pub fn compose_rel(r: &BinRel, s: &BinRel) -> Result<BinRel, SplError> {
    if r.m != s.n {
        return Err(SplError::TypeMismatch {
            left: (r.n, r.m),
            right: (s.n, s.m),
        });
    }
    Ok(BinRel {
        n: r.n,
        m: s.m,
        bits: r.bits.product(&s.bits),
    })
}
