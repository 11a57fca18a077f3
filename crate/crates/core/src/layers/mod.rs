//! Layers of a central toric arrangement: the connected components of
//! intersections of hypertori, their poset, and the groups formed by the
//! components of a single intersection.

mod groups;
mod iso;
mod layer;
mod poset;

pub use groups::{commuting_iso_exists, component_group, projection, projection_kernel, ComponentGroup, Projection};
pub use iso::{is_isomorphic, verify_isomorphism};
pub use layer::{components, frac, leq, solve_characters, Layer};
pub use poset::{enumerate_in_order, enumerate_layers, enumerate_layers_with_limit, hasse_dot, property_p, LayerPoset};
