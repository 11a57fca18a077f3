use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{snf, IntMatrix, Lattice, Rat};

/// Largest number of components enumerated for one intersection.
pub const MAX_COMPONENTS: u64 = 1 << 20;

/// Reduces a rational to its representative in `[0, 1)`.
pub fn frac(x: &Rat) -> Rat {
    x - Rat::from_integer(x.floor().to_integer())
}

/// A connected component of an intersection of hypertori through the identity.
///
/// The component is `{t : chi(t) = exp(2 pi i f(chi)) for chi in direction}`
/// where `direction` is a saturated character lattice and `f` is recorded by
/// its values on the HNF basis rows, reduced into `[0, 1)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Layer {
    direction: Lattice,
    character: Vec<Rat>,
}

impl Layer {
    /// The whole torus of dimension `r`.
    pub fn torus(r: usize) -> Self {
        Layer { direction: Lattice::zero(r), character: Vec::new() }
    }

    pub fn new(direction: Lattice, character: Vec<Rat>) -> Result<Self> {
        if !direction.is_saturated() {
            return Err(Error::Precondition("layer direction must be saturated".into()));
        }
        if character.len() != direction.rank() {
            return Err(Error::Dimension(format!(
                "{} character values for a lattice of rank {}",
                character.len(),
                direction.rank()
            )));
        }
        Ok(Layer { direction, character: character.iter().map(frac).collect() })
    }

    pub fn direction(&self) -> &Lattice {
        &self.direction
    }

    pub fn character(&self) -> &[Rat] {
        &self.character
    }

    /// Codimension in the torus.
    pub fn rank(&self) -> usize {
        self.direction.rank()
    }

    pub fn ambient_dim(&self) -> usize {
        self.direction.ambient_dim()
    }

    /// Value in `[0, 1)` of the defining character at `v`, which must lie in the direction lattice.
    pub fn character_at(&self, v: &[BigInt]) -> Result<Rat> {
        let coords = self
            .direction
            .coordinates(v)?
            .ok_or_else(|| Error::Precondition("vector outside the layer's direction lattice".into()))?;
        let mut acc = Rat::zero();
        for (c, f) in coords.iter().zip(&self.character) {
            acc += Rat::from_integer(c.clone()) * f;
        }
        Ok(frac(&acc))
    }

    /// Components of the intersection of two layers.
    pub fn intersect(&self, other: &Layer) -> Result<Vec<Layer>> {
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::Dimension("layers in tori of different dimensions".into()));
        }
        let mut gens = self.direction.basis_vectors();
        gens.extend(other.direction.basis_vectors());
        let mut values = self.character.clone();
        values.extend(other.character.iter().cloned());
        solve_characters(self.ambient_dim(), &gens, &values)
    }
}

impl fmt::Debug for Layer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Layer{{")?;
        for (k, row) in self.direction.basis_vectors().iter().enumerate() {
            let row: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "{}[{}]={}", if k > 0 { ", " } else { "" }, row.join(","), self.character[k])?;
        }
        write!(f, "}}")
    }
}

/// All layers `W` whose direction is the saturation of the span of `gens`
/// and whose character takes the value `values[i]` (mod 1) on `gens[i]`.
pub fn solve_characters(ambient: usize, gens: &[Vec<BigInt>], values: &[Rat]) -> Result<Vec<Layer>> {
    if gens.len() != values.len() {
        return Err(Error::Dimension("one value per generator is required".into()));
    }
    let span = Lattice::from_vectors(ambient, gens)?;
    let direction = span.saturation();
    let s = direction.rank();
    if s == 0 {
        return Ok(if values.iter().all(|v| frac(v).is_zero()) { vec![Layer::torus(ambient)] } else { vec![] });
    }
    let mut coords = Vec::with_capacity(gens.len());
    for g in gens {
        coords.push(direction.coordinates(g)?.expect("generator lies in its saturated span"));
    }
    let c = IntMatrix::from_rows(s, &coords)?;
    let dec = snf(&c);
    let ug: Vec<Rat> = (0..gens.len())
        .map(|j| {
            (0..gens.len()).fold(Rat::zero(), |acc, l| acc + Rat::from_integer(dec.left[(j, l)].clone()) * &values[l])
        })
        .collect();
    if ug[s..].iter().any(|x| !frac(x).is_zero()) {
        return Ok(vec![]);
    }
    let diag = &dec.diag;
    let count = diag.iter().fold(BigInt::one(), |acc, d| acc * d);
    if count > BigInt::from(MAX_COMPONENTS) {
        return Err(Error::Precondition(format!("{} components exceed the enumeration limit", count)));
    }
    let mut out = Vec::with_capacity(count.to_usize().unwrap_or(0));
    let mut offsets = vec![BigInt::zero(); s];
    loop {
        let hp: Vec<Rat> =
            (0..s).map(|j| (&ug[j] + Rat::from_integer(offsets[j].clone())) / Rat::from_integer(diag[j].clone())).collect();
        let h: Vec<Rat> = (0..s)
            .map(|i| frac(&(0..s).fold(Rat::zero(), |acc, j| acc + Rat::from_integer(dec.right[(i, j)].clone()) * &hp[j])))
            .collect();
        out.push(Layer { direction: direction.clone(), character: h });
        // odometer over offsets in [0, d_j)
        let mut k = 0;
        loop {
            if k == s {
                out.sort();
                out.dedup();
                return Ok(out);
            }
            offsets[k] += 1;
            if offsets[k] < diag[k] {
                break;
            }
            offsets[k] = BigInt::zero();
            k += 1;
        }
    }
}

/// `W1 <= W2` in the poset of layers, i.e. `W2` is contained in `W1`.
pub fn leq(w1: &Layer, w2: &Layer) -> Result<bool> {
    if w1.ambient_dim() != w2.ambient_dim() {
        return Err(Error::Dimension("layers in tori of different dimensions".into()));
    }
    if !w2.direction.contains_lattice(&w1.direction)? {
        return Ok(false);
    }
    for (row, value) in w1.direction.basis_vectors().iter().zip(&w1.character) {
        if &w2.character_at(row)? != value {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Components of the intersection of the hypertori `{t : t^c = 1}` for the given characters.
pub fn components(ambient: usize, characters: &[Vec<BigInt>]) -> Result<Vec<Layer>> {
    solve_characters(ambient, characters, &vec![Rat::zero(); characters.len()])
}
