//! Dense boolean matrices packed into `u64` words.

#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct BitMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub(crate) fn new(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64).max(1);
        BitMatrix {
            rows,
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    pub(crate) fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub(crate) fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, r: usize, c: usize) {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.words + c / 64] |= 1 << (c % 64);
    }

    #[inline]
    pub(crate) fn clear(&mut self, r: usize, c: usize) {
        self.data[r * self.words + c / 64] &= !(1 << (c % 64));
    }

    fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.words..(r + 1) * self.words]
    }

    /// `row[dst] |= row[src]`
    fn or_row_into(&mut self, src: usize, dst: usize) {
        if src == dst {
            return;
        }
        let w = self.words;
        for k in 0..w {
            let v = self.data[src * w + k];
            self.data[dst * w + k] |= v;
        }
    }

    pub(crate) fn union_with(&mut self, other: &BitMatrix) {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a |= *b;
        }
    }

    pub(crate) fn is_subset(&self, other: &BitMatrix) -> bool {
        self.data.iter().zip(&other.data).all(|(a, b)| a & !b == 0)
    }

    /// Warshall sweep; the matrix must be square.
    pub(crate) fn close_transitively(&mut self) {
        debug_assert_eq!(self.rows, self.cols);
        for k in 0..self.rows {
            for i in 0..self.rows {
                if self.get(i, k) {
                    self.or_row_into(k, i);
                }
            }
        }
    }

    /// Boolean product `self · other`.
    pub(crate) fn product(&self, other: &BitMatrix) -> BitMatrix {
        debug_assert_eq!(self.cols, other.rows);
        let mut out = BitMatrix::new(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k) {
                    let src = other.row(k);
                    let w = out.words;
                    for (d, s) in out.data[i * w..(i + 1) * w].iter_mut().zip(src) {
                        *d |= *s;
                    }
                }
            }
        }
        out
    }

    pub(crate) fn transpose(&self) -> BitMatrix {
        let mut out = BitMatrix::new(self.cols, self.rows);
        for (r, c) in self.ones() {
            out.set(c, r);
        }
        out
    }

    /// Set bits in row-major order.
    pub(crate) fn ones(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.rows).flat_map(move |r| {
            let row = self.row(r);
            row.iter().enumerate().flat_map(move |(k, &word)| {
                let mut w = word;
                std::iter::from_fn(move || {
                    if w == 0 {
                        return None;
                    }
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some((r, k * 64 + b))
                })
            })
        })
    }

    pub(crate) fn count(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }
}
