use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::arithmat::{check_subset_guard, Subset, MAX_GROUND};
use crate::error::{Error, Result};
use crate::exactlin::{right_kernel, FiniteAbelianGroup, IntMatrix, Lattice, Rat};

use super::layer::{components, solve_characters, Layer};

/// Largest group whose elements are enumerated one by one.
pub const MAX_GROUP_ORDER: u64 = 1 << 20;

/// The components of `∩_{i ∈ I} H_i` with their group structure, identified
/// with the characters of the saturated lattice that vanish on the span of
/// the columns in `I`.
///
/// Elements are addressed by exponent vectors on a fixed set of generators
/// dual to the invariant-factor decomposition of the quotient lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentGroup {
    subset: Subset,
    span: Lattice,
    closure: Lattice,
    quotient: FiniteAbelianGroup,
    elements: Vec<Layer>,
}

impl ComponentGroup {
    pub fn subset(&self) -> Subset {
        self.subset
    }

    pub fn closure(&self) -> &Lattice {
        &self.closure
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        self.quotient.invariant_factors()
    }

    pub fn order(&self) -> BigInt {
        self.quotient.order()
    }

    /// The components, in canonical order.
    pub fn elements(&self) -> &[Layer] {
        &self.elements
    }

    /// Exponents of a component on the fixed generators.
    pub fn exponents(&self, w: &Layer) -> Result<Vec<BigInt>> {
        if w.direction() != &self.closure {
            return Err(Error::Precondition("layer is not a component of this intersection".into()));
        }
        let mut out = Vec::new();
        for (d, g) in self.quotient.invariant_factors().iter().zip(self.quotient.generator_lifts()) {
            let v = w.character_at(g)? * Rat::from_integer(d.clone());
            out.push(v.to_integer());
        }
        Ok(out)
    }

    /// The component with the given exponents (taken modulo the invariant factors).
    pub fn element(&self, exps: &[BigInt]) -> Result<Layer> {
        let factors = self.quotient.invariant_factors();
        if exps.len() != factors.len() {
            return Err(Error::Dimension(format!("{} exponents for {} generators", exps.len(), factors.len())));
        }
        let mut gens = self.span.basis_vectors();
        let mut values = vec![Rat::zero(); gens.len()];
        for ((e, d), g) in exps.iter().zip(factors).zip(self.quotient.generator_lifts()) {
            gens.push(g.clone());
            values.push(Rat::new(e.clone(), d.clone()));
        }
        let mut sols = solve_characters(self.closure.ambient_dim(), &gens, &values)?;
        match (sols.pop(), sols.is_empty()) {
            (Some(w), true) if w.direction() == &self.closure => Ok(w),
            _ => Err(Error::Precondition("exponents do not determine a unique component".into())),
        }
    }

    /// Every exponent vector with entries in `[0, d_j)`, in odometer order.
    pub fn exponent_vectors(&self) -> Result<Vec<Vec<BigInt>>> {
        let factors = self.quotient.invariant_factors();
        let order = self.order();
        if order > BigInt::from(MAX_GROUP_ORDER) {
            return Err(Error::Precondition(format!("group of order {} is too large to enumerate", order)));
        }
        let mut out = Vec::with_capacity(order.to_usize().unwrap_or(0));
        let mut cur = vec![BigInt::zero(); factors.len()];
        loop {
            out.push(cur.clone());
            let mut k = 0;
            loop {
                if k == factors.len() {
                    return Ok(out);
                }
                cur[k] += 1;
                if cur[k] < factors[k] {
                    break;
                }
                cur[k] = BigInt::zero();
                k += 1;
            }
        }
    }

    /// The component of this intersection containing `w`.
    pub fn restrict(&self, w: &Layer) -> Result<Layer> {
        let values = self.closure.basis_vectors().iter().map(|b| w.character_at(b)).collect::<Result<Vec<_>>>()?;
        Layer::new(self.closure.clone(), values)
    }
}

fn subset_columns(n: &IntMatrix, s: Subset) -> Vec<Vec<BigInt>> {
    (0..n.cols()).filter(|i| s >> i & 1 == 1).map(|i| n.column(i)).collect()
}

/// Group of components of `∩_{i ∈ I} H_i`.
pub fn component_group(n: &IntMatrix, subset: Subset) -> Result<ComponentGroup> {
    check_subset_guard(n.cols(), MAX_GROUND)?;
    if subset >> n.cols() != 0 {
        return Err(Error::Precondition("subset mentions a missing column".into()));
    }
    let cols = subset_columns(n, subset);
    let span = Lattice::from_vectors(n.rows(), &cols)?;
    let closure = span.saturation();
    let quotient = crate::exactlin::quotient_group(&closure, &span)?;
    let elements = components(n.rows(), &cols)?;
    Ok(ComponentGroup { subset, span, closure, quotient, elements })
}

/// The restriction map from the components over `J` to those over `I ⊆ J`.
#[derive(Clone, Debug)]
pub struct Projection {
    pub source: ComponentGroup,
    pub target: ComponentGroup,
    /// Images of the source generators, as target exponent vectors.
    pub images: Vec<Vec<BigInt>>,
}

impl Projection {
    pub fn apply(&self, exps: &[BigInt]) -> Result<Vec<BigInt>> {
        let w = self.source.element(exps)?;
        self.target.exponents(&self.target.restrict(&w)?)
    }

    /// The kernel as a sublattice of source exponent space (containing the relations `d_j e_j`).
    pub fn kernel_lattice(&self) -> Result<Lattice> {
        let k = self.source.invariant_factors().len();
        let tf = self.target.invariant_factors();
        if tf.is_empty() {
            return Ok(Lattice::full(k));
        }
        // x ↦ M x must lie in diag(d') Z^{k'}
        let mut m = IntMatrix::zeros(tf.len(), k + tf.len());
        for (j, img) in self.images.iter().enumerate() {
            for (i, v) in img.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        for (i, d) in tf.iter().enumerate() {
            m[(i, k + i)] = d.clone();
        }
        let ker = right_kernel(&m);
        let vecs: Vec<Vec<BigInt>> = ker.column_vectors().into_iter().map(|c| c[..k].to_vec()).collect();
        Lattice::from_vectors(k, &vecs)
    }

    /// Components over `J` mapping to the identity component over `I`.
    pub fn kernel_elements(&self) -> Result<Vec<Layer>> {
        let zero = vec![BigInt::zero(); self.target.invariant_factors().len()];
        let mut out = Vec::new();
        for e in self.source.exponent_vectors()? {
            if self.apply(&e)? == zero {
                out.push(self.source.element(&e)?);
            }
        }
        out.sort();
        Ok(out)
    }
}

pub fn projection(n: &IntMatrix, j: Subset, i: Subset) -> Result<Projection> {
    if i & !j != 0 {
        return Err(Error::Precondition(format!("{:b} is not contained in {:b}", i, j)));
    }
    let source = component_group(n, j)?;
    let target = component_group(n, i)?;
    let k = source.invariant_factors().len();
    let mut images = Vec::with_capacity(k);
    for g in 0..k {
        let mut e = vec![BigInt::zero(); k];
        e[g] = BigInt::from(1);
        let w = source.element(&e)?;
        images.push(target.exponents(&target.restrict(&w)?)?);
    }
    Ok(Projection { source, target, images })
}

/// Kernel of the projection from the components over the whole ground set to those over `I`.
pub fn projection_kernel(n: &IntMatrix, i: Subset) -> Result<Lattice> {
    let full = (1u64 << n.cols()) - 1;
    projection(n, full, i)?.kernel_lattice()
}

/// Whether there is an isomorphism `φ` from the components over `I` to those
/// over `J` with `φ ∘ π_I = π_J`, decided by building `φ` element by element
/// from the projections out of the whole ground set.
pub fn commuting_iso_exists(n: &IntMatrix, i: Subset, j: Subset) -> Result<bool> {
    let full = (1u64 << n.cols()) - 1;
    let top = component_group(n, full)?;
    let gi = component_group(n, i)?;
    let gj = component_group(n, j)?;
    let mut phi: BTreeMap<Layer, Layer> = BTreeMap::new();
    for e in top.exponent_vectors()? {
        let w = top.element(&e)?;
        let a = gi.restrict(&w)?;
        let b = gj.restrict(&w)?;
        match phi.get(&a) {
            Some(prev) if prev != &b => return Ok(false),
            _ => {
                phi.insert(a, b);
            }
        }
    }
    if phi.len() != gi.elements().len() || gi.elements().len() != gj.elements().len() {
        return Ok(false);
    }
    let mut image: Vec<&Layer> = phi.values().collect();
    image.sort();
    image.dedup();
    Ok(image.len() == gj.elements().len())
}
