use crate::error::{Error, Result};
use crate::perm::Permutation;

/// An `n × n` multiplication table over `{0..n-1}`; `get(i, j)` is `i·j`.
///
/// Only the entry range is enforced here. The Latin square property and
/// everything else is checked by [`crate::group::verify`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CayleyTable {
    n: usize,
    entries: Vec<usize>,
}

impl CayleyTable {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::Shape(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for value in row {
                if value >= n {
                    return Err(Error::IndexOutOfRange {
                        index: value,
                        order: n,
                    });
                }
                entries.push(value);
            }
        }
        Ok(CayleyTable { n, entries })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let value = f(i, j);
                if value >= n {
                    return Err(Error::IndexOutOfRange {
                        index: value,
                        order: n,
                    });
                }
                entries.push(value);
            }
        }
        Ok(CayleyTable { n, entries })
    }

    pub(crate) fn from_flat_unchecked(n: usize, entries: Vec<usize>) -> Self {
        debug_assert_eq!(entries.len(), n * n);
        CayleyTable { n, entries }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[usize] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn column(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).map(move |i| self.get(i, j))
    }

    /// Row-major flattening.
    pub fn flat(&self) -> &[usize] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.entries.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Transports the table along `p`: the result satisfies
    /// `r[p(i)][p(j)] = p(t[i][j])`.
    pub fn relabel(&self, p: &Permutation) -> CayleyTable {
        assert_eq!(
            p.len(),
            self.n,
            "relabeling with a permutation of the wrong degree"
        );
        let mut entries = vec![0; self.n * self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                entries[p.apply(i) * self.n + p.apply(j)] = p.apply(self.get(i, j));
            }
        }
        CayleyTable { n: self.n, entries }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_shapes() {
        assert!(matches!(CayleyTable::new(vec![]), Err(Error::EmptyCarrier)));
        assert!(matches!(
            CayleyTable::new(vec![vec![0, 1], vec![1]]),
            Err(Error::Shape(_))
        ));
        assert!(matches!(
            CayleyTable::new(vec![vec![0, 2], vec![1, 0]]),
            Err(Error::IndexOutOfRange { index: 2, order: 2 })
        ));
    }

    #[test]
    fn relabel_transports_products() {
        let t = CayleyTable::from_fn(3, |i, j| (i + j) % 3).unwrap();
        let p = Permutation::new(vec![1, 2, 0]).unwrap();
        let r = t.relabel(&p);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(r.get(p.apply(i), p.apply(j)), p.apply(t.get(i, j)));
            }
        }
        assert!(r.is_symmetric());
        assert_eq!(t.column(1).collect::<Vec<_>>(), vec![1, 2, 0]);
    }
}
