//! Exact integer and rational linear algebra.

mod lattice;
mod matrix;
mod normal_form;
mod rational;

pub use lattice::{quotient_group, FiniteAbelianGroup, Lattice};
pub use matrix::IntMatrix;
pub use normal_form::{cokernel, hnf, int_rank, left_kernel, right_kernel, snf, SnfDecomposition};
pub use rational::{qkernel, qrank, rref, sparse_from_dense, QMatrix, Rat, SparseEchelon, SparseVec};
