//! Cohomology rings of complements of toric arrangements, built from their
//! presentations by generators and relations and studied degree by degree.

mod classes;
mod graded;
mod labels;
mod presentations;

pub use classes::{log_class, torus_coordinate_classes};
pub use graded::{single, CohomElement, FreeElement, Generator, GradedAlgebraQ, Monomial, DEFAULT_GENERATOR_LIMIT};
pub use labels::{GeneratorLabel, Relation, RelationFamily};
pub use presentations::{
    build_rational_presentation, build_rational_presentation_with_limit, build_unimodular_presentation, circuits,
    merge_parity, nullity_one_sets, Circuit,
};

use crate::error::Result;
use crate::exactlin::IntMatrix;
use num_bigint::BigInt;

/// Free rank and torsion of the degree `k` part of the integral cohomology of
/// a totally unimodular arrangement.
pub fn integral_graded_unimodular(n: &IntMatrix, k: usize) -> Result<(usize, Vec<BigInt>)> {
    build_unimodular_presentation(n)?.integral_graded(k)
}
