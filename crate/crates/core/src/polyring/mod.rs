//! Exact polynomial arithmetic: integer polynomials for Tutte and Poincaré
//! polynomials, and rational multivariate polynomials with Gröbner bases.

mod bivariate;
mod groebner;
mod multivariate;
mod solve;
mod univariate;

pub use bivariate::{tutte_to_poincare, BivariatePolyZ};
pub use groebner::{
    buchberger, contains_point, hilbert_function, hilbert_numerator, normal_form, projective_dim_degree, GroebnerBasis,
    IdealQ,
};
pub use multivariate::{divides, variables, Monomial, MultiPolyQ, TermOrder};
pub use solve::{
    affine_rational_points, normalize_projective, primitive_integer_vector, projective_rational_points, rational_roots,
};
pub use univariate::UniPolyZ;
