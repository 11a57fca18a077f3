//! Dense and sparse linear algebra over the rationals.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rat = BigRational;

/// Dense rational matrix as a list of rows.
pub type QMatrix = Vec<Vec<Rat>>;

/// Reduced row echelon form in place (leftmost pivots). Returns pivot columns.
pub fn rref(m: &mut QMatrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for j in c..cols {
                let t = &f * &m[r][j];
                m[i][j] -= t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn qrank(m: &QMatrix) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

/// Basis of the right null space `{x : M x = 0}`.
pub fn qkernel(m: &QMatrix, cols: usize) -> Vec<Vec<Rat>> {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rat::zero(); cols];
            x[f] = Rat::one();
            for (r, &p) in pivots.iter().enumerate() {
                x[p] = -a[r][f].clone();
            }
            x
        })
        .collect()
}

pub type SparseVec = BTreeMap<usize, Rat>;

/// Incrementally built, fully reduced echelon basis of a subspace of `Q^n`.
///
/// Each stored row has coefficient 1 at its pivot, which is the largest
/// index among its nonzero entries, and no other row has a nonzero entry in
/// that column. The resulting basis is the unique reduced echelon form of the
/// span with respect to the reversed column order, so normal forms do not
/// depend on insertion order.
#[derive(Clone, Debug, Default)]
pub struct SparseEchelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl SparseEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Canonical representative of `v` modulo the span.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for (&c, x) in v {
            if let Some(row) = self.rows.get(&c) {
                for (&j, y) in row {
                    let e = out.entry(j).or_insert_with(Rat::zero);
                    *e -= x * y;
                    if e.is_zero() {
                        out.remove(&j);
                    }
                }
            }
        }
        out
    }

    /// Adds `v` to the span. Returns `true` when the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let mut r = self.reduce(v);
        let Some((&p, lead)) = r.iter().next_back() else { return false };
        let inv = lead.recip();
        for x in r.values_mut() {
            *x *= &inv;
        }
        for row in self.rows.values_mut() {
            if let Some(f) = row.get(&p).cloned() {
                for (&j, y) in &r {
                    let e = row.entry(j).or_insert_with(Rat::zero);
                    *e -= &f * y;
                    if e.is_zero() {
                        row.remove(&j);
                    }
                }
            }
        }
        r.retain(|_, x| !x.is_zero());
        self.rows.insert(p, r);
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }
}

pub fn sparse_from_dense(v: &[Rat]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(x: i64) -> Rat {
        Rat::from_integer(BigInt::from(x))
    }

    fn qm(rows: &[&[i64]]) -> QMatrix {
        rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let id = qm(&[&[1, 0], &[0, 1]]);
        assert_eq!(qrank(&id), 2);
        assert!(qkernel(&id, 2).is_empty());
        let eq = qm(&[&[1, 2, 3], &[1, 2, 3]]);
        assert_eq!(qrank(&eq), 1);
        let k = qkernel(&eq, 3);
        assert_eq!(k.len(), 2);
        for x in &k {
            let s: Rat = x.iter().zip(&eq[0]).map(|(a, b)| a * b).sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn echelon_order_independent() {
        let vs: Vec<SparseVec> = vec![
            sparse_from_dense(&[q(1), q(1), q(0)]),
            sparse_from_dense(&[q(0), q(1), q(-1)]),
        ];
        let mut a = SparseEchelon::new();
        let mut b = SparseEchelon::new();
        for v in &vs {
            a.insert(v);
        }
        for v in vs.iter().rev() {
            b.insert(v);
        }
        assert_eq!(a.rows, b.rows);
        assert_eq!(a.pivots().collect::<Vec<_>>(), vec![1, 2]);
        assert!(a.contains(&sparse_from_dense(&[q(1), q(2), q(-1)])));
        assert!(!a.insert(&sparse_from_dense(&[q(2), q(3), q(-1)])));
    }
}
