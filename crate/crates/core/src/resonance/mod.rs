//! First resonance varieties of graded algebras: kernels of multiplication by
//! degree-one classes, and the decomposition into planes through Plücker
//! coordinates.

mod plane;
mod variety;

pub use plane::{pair_indices, plane_from_plucker, plucker_variables, Plane, PluckerPoint};
pub use variety::{
    analyze_resonance, delta_kernel_dim, grassmann_pfaffian_ideal, in_r1, lattice_vectors_in_basis,
    linear_ideal_of_subspace, resonance_components, resonance_lattices, wedge_kernel, DegreeOneBasis,
    ResonanceAnalysis,
};
