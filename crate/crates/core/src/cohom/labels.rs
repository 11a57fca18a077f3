use crate::arithmat::Subset;
use crate::layers::Layer;

use super::graded::FreeElement;

/// Names of the generators of a presentation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GeneratorLabel {
    /// Torus class pulled back by the character of hypertorus `i`.
    Psi(usize),
    /// Logarithmic form of hypertorus `i` (unimodular presentation).
    OmegaSmall(usize),
    /// Torus class of a direction not seen by any hypertorus (non-essential arrangements).
    Torus(usize),
    /// Form attached to a component `layer` of the intersection over the independent set `subset`.
    OmegaBar { layer: Layer, subset: Subset },
}

/// Which family of relations produced a relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RelationFamily {
    /// `ω_i ψ_i = 0`
    LogTimesTorus,
    /// `Σ c_i ψ_i = 0` for a signed unimodular dependency.
    SignedDependency,
    /// Product relation of a signed unimodular dependency.
    SignedProduct,
    /// `ω̄_{W,S} ψ_i = 0` for `i ∈ S`.
    BarTimesTorus,
    /// Product of two bar forms.
    BarProduct,
    /// `Σ k_i ψ_i = 0` for a circuit.
    Dependency,
    /// The relation attached to a circuit and a component of its intersection.
    CircuitComponent,
    /// A torus class set to zero.
    Torus,
}

#[derive(Clone, Debug)]
pub struct Relation {
    pub family: RelationFamily,
    /// Hypertori involved (a circuit, a support, or a single index).
    pub support: Subset,
    pub degree: usize,
    pub poly: FreeElement,
}

impl Relation {
    pub fn torus(label: GeneratorLabel, poly: FreeElement) -> Self {
        let support = match label {
            GeneratorLabel::Psi(i) => 1 << i,
            _ => 0,
        };
        Relation { family: RelationFamily::Torus, support, degree: 1, poly }
    }
}
