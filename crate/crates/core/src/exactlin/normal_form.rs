//! Hermite and Smith normal forms over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::lattice::FiniteAbelianGroup;
use super::matrix::IntMatrix;

/// Row-style Hermite normal form.
///
/// Returns `(H, U)` with `U` unimodular and `U * A = H`. The nonzero rows of
/// `H` come first, each pivot is positive, and entries above a pivot lie in
/// `[0, pivot)`. `H` depends only on the row lattice of `A`.
pub fn hnf(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = a.clone();
    let mut u = IntMatrix::identity(a.rows());
    let rows = a.rows();
    let mut p = 0;
    for col in 0..a.cols() {
        if p == rows {
            break;
        }
        for i in p + 1..rows {
            if h[(i, col)].is_zero() {
                continue;
            }
            if h[(p, col)].is_zero() {
                h.swap_rows(p, i);
                u.swap_rows(p, i);
                continue;
            }
            let a_ = h[(p, col)].clone();
            let b_ = h[(i, col)].clone();
            let eg = a_.extended_gcd(&b_);
            let (g, x, y) = (eg.gcd, eg.x, eg.y);
            let z = -(&b_ / &g);
            let w = &a_ / &g;
            h.combine_rows(p, i, &x, &y, &z, &w);
            u.combine_rows(p, i, &x, &y, &z, &w);
        }
        if h[(p, col)].is_zero() {
            continue;
        }
        if h[(p, col)].is_negative() {
            h.negate_row(p);
            u.negate_row(p);
        }
        let pivot = h[(p, col)].clone();
        for i in 0..p {
            let q = h[(i, col)].div_floor(&pivot);
            if !q.is_zero() {
                let nq = -q;
                h.add_row_multiple(i, p, &nq);
                u.add_row_multiple(i, p, &nq);
            }
        }
        p += 1;
    }
    (h, u)
}

/// Rank of an integer matrix (equal to its rank over the rationals).
pub fn int_rank(a: &IntMatrix) -> usize {
    let (h, _) = hnf(a);
    (0..h.rows()).filter(|&i| h.row(i).iter().any(|x| !x.is_zero())).count()
}

/// Basis (as rows) of the integer left kernel `{x : x A = 0}`.
pub fn left_kernel(a: &IntMatrix) -> IntMatrix {
    let (h, u) = hnf(a);
    let zero_rows: Vec<Vec<BigInt>> = (0..h.rows())
        .filter(|&i| h.row(i).iter().all(Zero::is_zero))
        .map(|i| u.row_vec(i))
        .collect();
    IntMatrix::from_rows(a.rows(), &zero_rows).expect("consistent widths")
}

/// Basis (as columns) of the integer right kernel `{x : A x = 0}`.
pub fn right_kernel(a: &IntMatrix) -> IntMatrix {
    left_kernel(&a.transpose()).transpose()
}

/// Result of [`snf`]: `left * A * right = diag(diag)` padded with zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfDecomposition {
    pub left: IntMatrix,
    pub diag: Vec<BigInt>,
    pub right: IntMatrix,
    left_inv: IntMatrix,
    right_inv: IntMatrix,
}

impl SnfDecomposition {
    pub fn rank(&self) -> usize {
        self.diag.len()
    }

    /// Inverse of `left`.
    pub fn left_inverse(&self) -> &IntMatrix {
        &self.left_inv
    }

    /// Inverse of `right`.
    pub fn right_inverse(&self) -> &IntMatrix {
        &self.right_inv
    }

    /// The diagonal matrix `D` with the shape of the input.
    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.left.rows(), self.right.cols());
        for (i, x) in self.diag.iter().enumerate() {
            d[(i, i)] = x.clone();
        }
        d
    }
}

struct SnfState {
    d: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl SnfState {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    /// row[dst] += f * row[src]
    fn add_row(&mut self, dst: usize, src: usize, f: &BigInt) {
        self.d.add_row_multiple(dst, src, f);
        self.u.add_row_multiple(dst, src, f);
        self.u_inv.add_col_multiple(src, dst, &-f);
    }

    /// col[dst] += f * col[src]
    fn add_col(&mut self, dst: usize, src: usize, f: &BigInt) {
        self.d.add_col_multiple(dst, src, f);
        self.v.add_col_multiple(dst, src, f);
        self.v_inv.add_row_multiple(src, dst, &-f);
    }

    fn negate_row(&mut self, r: usize) {
        self.d.negate_row(r);
        self.u.negate_row(r);
        self.u_inv.negate_col(r);
    }

    fn smallest_in(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..self.d.rows() {
            for j in t..self.d.cols() {
                let x = &self.d[(i, j)];
                if x.is_zero() {
                    continue;
                }
                let ax = x.abs();
                if best.as_ref().is_none_or(|b| ax < b.2) {
                    best = Some((i, j, ax));
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    /// Smallest nonzero entry in row t or column t (from index t on).
    fn smallest_cross(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        let mut consider = |i: usize, j: usize, x: &BigInt| {
            if x.is_zero() {
                return;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|b| ax < b.2) {
                best = Some((i, j, ax));
            }
        };
        for i in t..self.d.rows() {
            consider(i, t, &self.d[(i, t)]);
        }
        for j in t + 1..self.d.cols() {
            consider(t, j, &self.d[(t, j)]);
        }
        best.map(|(i, j, _)| (i, j))
    }
}

/// Smith normal form with unimodular transforms.
///
/// Pivots are chosen as the smallest nonzero absolute value in the active
/// block; the postcondition `U * A * V = D` is what guarantees correctness.
pub fn snf(a: &IntMatrix) -> SnfDecomposition {
    let (r, n) = (a.rows(), a.cols());
    let mut st = SnfState {
        d: a.clone(),
        u: IntMatrix::identity(r),
        u_inv: IntMatrix::identity(r),
        v: IntMatrix::identity(n),
        v_inv: IntMatrix::identity(n),
    };
    let mut diag = Vec::new();
    let mut t = 0;
    while t < r.min(n) {
        let Some((pi, pj)) = st.smallest_in(t) else { break };
        st.swap_rows(t, pi);
        st.swap_cols(t, pj);
        loop {
            let pivot = st.d[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..r {
                if st.d[(i, t)].is_zero() {
                    continue;
                }
                let q = &st.d[(i, t)] / &pivot;
                st.add_row(i, t, &-q);
                if !st.d[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                if st.d[(t, j)].is_zero() {
                    continue;
                }
                let q = &st.d[(t, j)] / &pivot;
                st.add_col(j, t, &-q);
                if !st.d[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                let (i, j) = st.smallest_cross(t).expect("pivot is nonzero");
                st.swap_rows(t, i);
                st.swap_cols(t, j);
                continue;
            }
            // Row t and column t are clear; enforce divisibility of the rest.
            let bad = (t + 1..r)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !st.d[(i, j)].is_multiple_of(&pivot));
            match bad {
                Some((i, _)) => st.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if st.d[(t, t)].is_negative() {
            st.negate_row(t);
        }
        diag.push(st.d[(t, t)].clone());
        t += 1;
    }
    SnfDecomposition { left: st.u, diag, right: st.v, left_inv: st.u_inv, right_inv: st.v_inv }
}

/// Cokernel `Z^r / (column span of A)` as free rank plus torsion.
///
/// Generator lifts of the torsion part are columns of `U^{-1}`.
pub fn cokernel(a: &IntMatrix) -> (usize, FiniteAbelianGroup) {
    let s = snf(a);
    let r = a.rows();
    let free_rank = r - s.rank();
    let mut factors = Vec::new();
    let mut lifts = Vec::new();
    for (i, d) in s.diag.iter().enumerate() {
        if d > &BigInt::one() {
            factors.push(d.clone());
            lifts.push(s.left_inv.column(i));
        }
    }
    (free_rank, FiniteAbelianGroup::new(factors, lifts))
}
