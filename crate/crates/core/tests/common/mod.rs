#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::prelude::*;
use toric_core::exactlin::IntMatrix;

pub fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Matrices with `1..=max_rows` rows, `min_cols..=max_cols` columns and entries in `[-bound, bound]`.
pub fn matrix(max_rows: usize, min_cols: usize, max_cols: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_rows, min_cols..=max_cols).prop_flat_map(move |(r, n)| {
        proptest::collection::vec(proptest::collection::vec(-bound..=bound, n), r)
            .prop_map(move |rows| IntMatrix::from_rows(n, &rows).expect("rectangular"))
    })
}

/// A unimodular `r × r` matrix built from random elementary row operations.
pub fn unimodular(r: usize) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec((0..r, 0..r, -2i64..=2, any::<bool>()), 0..8).prop_map(move |ops| {
        let mut rows: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| (i == j) as i64).collect()).collect();
        for (i, j, c, swap) in ops {
            if i == j {
                rows[i].iter_mut().for_each(|x| *x = -*x);
            } else if swap {
                rows.swap(i, j);
            } else {
                let src = rows[i].clone();
                for (x, y) in rows[j].iter_mut().zip(src) {
                    *x += c * y;
                }
            }
        }
        IntMatrix::from_rows(r, &rows).expect("square")
    })
}
