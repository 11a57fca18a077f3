//! The small integer matrices used throughout the examples and tests.

use crate::exactlin::IntMatrix;

/// Columns `(1,0), (0,1), (1,1)`: three lines in the plane torus.
pub fn three_lines() -> IntMatrix {
    IntMatrix::from_i64(&[&[1, 0, 1], &[0, 1, 1]])
}

/// Columns `(1,0), (a,n), (a+1,n)`.
pub fn three_lines_twisted(n: i64, a: i64) -> IntMatrix {
    IntMatrix::from_i64(&[&[1, a, a + 1], &[0, n, n]])
}

/// Columns `(1,0,0), (1,5,0), (1,0,5), (3,5,5)`.
pub fn quadruple() -> IntMatrix {
    IntMatrix::from_i64(&[&[1, 1, 1, 3], &[0, 5, 0, 5], &[0, 0, 5, 5]])
}

/// Columns `(1,0,0), (4,5,0), (1,0,5), (6,5,5)`; same arithmetic matroid as [`quadruple`].
pub fn quadruple_prime() -> IntMatrix {
    IntMatrix::from_i64(&[&[1, 4, 1, 6], &[0, 5, 0, 5], &[0, 0, 5, 5]])
}

/// Columns `e1, e2, e3, e1+e2+e3`; the unimodular quadruple.
pub fn quadruple_unimodular() -> IntMatrix {
    IntMatrix::from_i64(&[&[1, 0, 0, 1], &[0, 1, 0, 1], &[0, 0, 1, 1]])
}
