//! Exact linear algebra over `Q(i)`: matrix inversion and incremental row echelon spans.

use std::collections::BTreeMap;

use crate::ring::Scalar;

/// Inverse of a square matrix, `None` if singular.
pub fn invert(m: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    let n = m.len();
    let mut a: Vec<Vec<Scalar>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].inv().ok()?;
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, p) in a[r].iter_mut().zip(&pivot_row) {
                    *x -= &(&f * p);
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub type SparseVec<K> = BTreeMap<K, Scalar>;

/// A subspace kept in reduced echelon form; the pivot of each row is its smallest key.
#[derive(Clone, Debug)]
pub struct Span<K: Ord + Clone> {
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Default for Span<K> {
    fn default() -> Self {
        Span { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Span<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Residual of `v` after eliminating every pivot.
    pub fn reduce(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut v = v.clone();
        v.retain(|_, c| !c.is_zero());
        let mut cursor: Option<K> = None;
        loop {
            let next = match &cursor {
                None => v.keys().next().cloned(),
                Some(c) => v
                    .range((std::ops::Bound::Excluded(c.clone()), std::ops::Bound::Unbounded))
                    .next()
                    .map(|(k, _)| k.clone()),
            };
            let Some(key) = next else { break };
            if let Some(row) = self.rows.get(&key) {
                let f = v[&key].clone();
                for (k, c) in row {
                    let entry = v.entry(k.clone()).or_insert_with(Scalar::zero);
                    *entry -= &(&f * c);
                    if entry.is_zero() {
                        v.remove(k);
                    }
                }
            }
            cursor = Some(key);
        }
        v
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Add `v`; returns whether it was independent of the existing rows.
    pub fn insert(&mut self, v: &SparseVec<K>) -> bool {
        let r = self.reduce(v);
        let Some((pivot, lead)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = lead.inv().expect("nonzero pivot");
        let row = r.into_iter().map(|(k, c)| (k, &c * &inv)).collect();
        self.rows.insert(pivot, row);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    #[test]
    fn inverse_of_swap() {
        let m = vec![vec![s(0), s(1)], vec![s(1), s(0)]];
        assert_eq!(invert(&m).unwrap(), m);
        assert!(invert(&[vec![s(1), s(2)], vec![s(2), s(4)]]).is_none());
    }

    #[test]
    fn span_rank_and_membership() {
        let v = |xs: &[i64]| -> SparseVec<usize> {
            xs.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, &x)| (i, s(x))).collect()
        };
        let mut sp = Span::new();
        assert!(sp.insert(&v(&[1, 2, 0])));
        assert!(sp.insert(&v(&[0, 1, 1])));
        assert!(!sp.insert(&v(&[1, 3, 1])));
        assert!(sp.contains(&v(&[2, 5, 1])));
        assert!(!sp.contains(&v(&[0, 0, 1])));
        assert_eq!(sp.rank(), 2);
    }
}
