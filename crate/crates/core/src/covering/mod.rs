//! Integral obstruction for the cyclic coverings of the three-line
//! arrangement: the covering `(t₁, t₂) ↦ (t₁, t₁^a t₂^n)` pulls the three
//! lines back to the arrangement with characters `(1,0), (a,n), (a+1,n)`.
//! Degree-one integral classes are written in the basis `ω₁, ω₂, ω₃, α, β`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::cohom::{build_unimodular_presentation, CohomElement, GeneratorLabel};
use crate::error::{Error, Result};
use crate::exactlin::{cokernel, IntMatrix, Lattice, Rat};
use crate::layers::{enumerate_layers, is_isomorphic};
use crate::named;
use crate::resonance::{resonance_components, resonance_lattices, DegreeOneBasis, Plane};

/// Rank of the first cohomology of the base and of every covering.
pub const H1_RANK: usize = 5;

/// Covering degree `n` and twist `a`, with `a` and `a + 1` prime to `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoveringSpec {
    n: i64,
    a: i64,
}

impl CoveringSpec {
    pub fn new(n: i64, a: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::Covering(format!("covering degree must be positive, got {n}")));
        }
        if a.gcd(&n) != 1 || (a + 1).gcd(&n) != 1 {
            return Err(Error::Covering(format!("{a} and {} must both be prime to {n}", a + 1)));
        }
        Ok(CoveringSpec { n, a })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    /// Whether `n > 5` and `n` is prime to 6.
    pub fn meets_obstruction_hypotheses(&self) -> bool {
        self.n > 5 && self.n.gcd(&6) == 1
    }

    /// The character matrix of the pulled-back arrangement.
    pub fn arrangement(&self) -> IntMatrix {
        named::three_lines_twisted(self.n, self.a)
    }
}

/// Columns are the images of `ω₁, ω₂, ω₃, ψ₁, ψ₂` in the basis `ω₁, ω₂, ω₃, α, β`.
pub fn pullback_matrix(spec: &CoveringSpec) -> IntMatrix {
    let mut rows: Vec<Vec<i64>> = (0..H1_RANK).map(|i| (0..H1_RANK).map(|j| (i == j) as i64).collect()).collect();
    rows[3][4] = spec.a;
    rows[4][4] = spec.n;
    IntMatrix::from_rows(H1_RANK, &rows).expect("square")
}

fn q(x: i64) -> Rat {
    Rat::from_integer(x.into())
}

fn unit(i: usize) -> Vec<Rat> {
    (0..H1_RANK).map(|j| q((i == j) as i64)).collect()
}

/// The five resonance planes of the three lines in the basis `ω₁, ω₂, ω₃, ψ₁, ψ₂`,
/// ordered so that the first three contain `ω₁, ω₂, ω₃` and the last two
/// contain `ω₁ − ω₃` and `ω₂ − ω₃`.
pub fn base_components() -> Result<Vec<Plane>> {
    let alg = build_unimodular_presentation(&named::three_lines())?;
    let mut classes: Vec<CohomElement> =
        (0..3).map(|i| alg.generator(&GeneratorLabel::OmegaSmall(i))).collect::<Result<_>>()?;
    classes.extend((0..2).map(|i| alg.generator(&GeneratorLabel::Psi(i))).collect::<Result<Vec<_>>>()?);
    let basis = DegreeOneBasis::new(&alg, classes)?;
    let planes = resonance_components(&alg, &basis)?;
    let diff = |i: usize, j: usize| -> Vec<Rat> { unit(i).iter().zip(unit(j)).map(|(x, y)| x - y).collect() };
    let markers = [unit(0), unit(1), unit(2), diff(0, 2), diff(1, 2)];
    markers
        .iter()
        .map(|m| {
            let mut hits = Vec::new();
            for p in &planes {
                if p.contains(m)? {
                    hits.push(p.clone());
                }
            }
            match hits.as_slice() {
                [p] => Ok(p.clone()),
                _ => Err(Error::Precondition(format!("{} resonance planes contain a marker class", hits.len()))),
            }
        })
        .collect()
}

/// First integral cohomology of a covering together with its resonance sublattices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H1Lattice {
    spec: CoveringSpec,
    components: Vec<Lattice>,
}

impl H1Lattice {
    /// Resonance sublattices given directly; each must have rank two in `Z^5`.
    pub fn from_components(spec: CoveringSpec, components: Vec<Lattice>) -> Result<Self> {
        if components.iter().any(|l| l.ambient_dim() != H1_RANK || l.rank() != 2) {
            return Err(Error::Covering("resonance sublattices must have rank 2 in Z^5".into()));
        }
        Ok(H1Lattice { spec, components })
    }

    pub fn spec(&self) -> &CoveringSpec {
        &self.spec
    }

    pub fn components(&self) -> &[Lattice] {
        &self.components
    }

    pub fn component(&self, i: usize) -> Result<&Lattice> {
        self.components
            .get(i)
            .ok_or_else(|| Error::Precondition(format!("no resonance component {i}")))
    }

    pub fn ambient(&self) -> Lattice {
        Lattice::full(H1_RANK)
    }
}

/// Pulls the base resonance planes back along the covering and intersects
/// them with the integral lattice.
pub fn build_h1_lattice(spec: &CoveringSpec) -> Result<H1Lattice> {
    let p = pullback_matrix(spec);
    let image = |v: &[Rat]| -> Vec<Rat> {
        (0..H1_RANK)
            .map(|i| (0..H1_RANK).fold(Rat::zero(), |s, j| s + Rat::from_integer(p.row(i)[j].clone()) * &v[j]))
            .collect()
    };
    let planes = base_components()?
        .iter()
        .map(|pl| {
            let [u, v] = pl.basis();
            Plane::new(image(u), image(v))
        })
        .collect::<Result<Vec<_>>>()?;
    let standard: Vec<Vec<Rat>> = (0..H1_RANK).map(unit).collect();
    Ok(H1Lattice { spec: *spec, components: resonance_lattices(&planes, &standard)? })
}

/// The resonance sublattices written out directly:
/// `⟨ω₁, α⟩, ⟨ω₂, nβ+aα⟩, ⟨ω₃, nβ+(a+1)α⟩, ⟨ω₁−ω₃, ω₂−ω₁+α⟩, ⟨ω₂−ω₃, ω₁−ω₂+nβ+aα⟩`.
pub fn closed_form_components(spec: &CoveringSpec) -> Vec<Lattice> {
    let (n, a) = (spec.n, spec.a);
    let pairs: [[[i64; 5]; 2]; 5] = [
        [[1, 0, 0, 0, 0], [0, 0, 0, 1, 0]],
        [[0, 1, 0, 0, 0], [0, 0, 0, a, n]],
        [[0, 0, 1, 0, 0], [0, 0, 0, a + 1, n]],
        [[1, 0, -1, 0, 0], [-1, 1, 0, 1, 0]],
        [[0, 1, -1, 0, 0], [1, -1, 0, a, n]],
    ];
    pairs
        .iter()
        .map(|[u, v]| {
            let big = |w: &[i64; 5]| w.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
            Lattice::from_vectors(H1_RANK, &[big(u), big(v)]).expect("rank five vectors")
        })
        .collect()
}

/// Order of the torsion subgroup of `H¹ / ⟨Q_i, Q_j⟩`.
pub fn c_value(h: &H1Lattice, i: usize, j: usize) -> Result<BigInt> {
    if i == j {
        return Err(Error::Precondition("c-value needs two distinct components".into()));
    }
    let sum = h.component(i)?.sum(h.component(j)?)?;
    let (_, torsion) = cokernel(&sum.basis().transpose());
    Ok(torsion.order())
}

/// All c-values `c(i, j)` for `i < j`.
pub fn c_values(h: &H1Lattice) -> Result<Vec<((usize, usize), BigInt)>> {
    let k = h.components().len();
    let mut out = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            out.push(((i, j), c_value(h, i, j)?));
        }
    }
    Ok(out)
}

/// Elements of `ambient` having a positive multiple in `l`.
pub fn radical(l: &Lattice, ambient: &Lattice) -> Result<Lattice> {
    if !ambient.contains_lattice(l)? {
        return Err(Error::Precondition("lattice is not contained in the ambient lattice".into()));
    }
    l.saturation().intersect(ambient)
}

/// `Rad(⋂_{i<j≤3} ⟨Q_i, Q_j⟩)`, the classes coming from the ambient torus.
pub fn torus_lattice(h: &H1Lattice) -> Result<Lattice> {
    let mut meet = h.ambient();
    for i in 0..3 {
        for j in i + 1..3 {
            meet = meet.intersect(&h.component(i)?.sum(h.component(j)?)?)?;
        }
    }
    radical(&meet, &h.ambient())
}

/// Generator of `Q_i ∩ L`, which must have rank one.
pub fn torus_line_generator(h: &H1Lattice, l: &Lattice, i: usize) -> Result<Vec<BigInt>> {
    let line = h.component(i)?.intersect(l)?;
    if line.rank() != 1 {
        return Err(Error::Precondition(format!(
            "component {i} meets the torus lattice in rank {}, not 1",
            line.rank()
        )));
    }
    let mut v = line.basis_vectors().remove(0);
    if v.iter().find(|x| !x.is_zero()).is_some_and(|x| x < &BigInt::zero()) {
        v = v.into_iter().map(|x| -x).collect();
    }
    Ok(v)
}

/// Generators of `Q_i ∩ L` for the three components through the torus classes.
pub fn torus_line_generators(h: &H1Lattice, l: &Lattice) -> Result<Vec<Vec<BigInt>>> {
    (0..3).map(|i| torus_line_generator(h, l, i)).collect()
}

/// Whether `s·v_i + t·v_j ∈ nL` for some pair `i < j` and signs `s, t`.
pub fn pair_sum_in_nl(lines: &[Vec<BigInt>], n: &BigInt, l: &Lattice) -> Result<bool> {
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            for s in [1i64, -1] {
                for t in [1i64, -1] {
                    let w: Vec<BigInt> = lines[i]
                        .iter()
                        .zip(&lines[j])
                        .map(|(x, y)| x * BigInt::from(s) + y * BigInt::from(t))
                        .collect();
                    if l.in_scaled(&w, n)? {
                        return Ok(true);
                    }
                }
            }
        }
    }
    Ok(false)
}

/// Data of one covering in the obstruction pipeline.
#[derive(Clone, Debug)]
pub struct CoveringData {
    pub spec: CoveringSpec,
    pub h1: H1Lattice,
    pub c_values: Vec<((usize, usize), BigInt)>,
    pub torus_lattice: Lattice,
    pub lines: Vec<Vec<BigInt>>,
    pub pair_sum_in_nl: bool,
}

fn covering_data(spec: CoveringSpec) -> Result<CoveringData> {
    let h1 = build_h1_lattice(&spec)?;
    let c_values = c_values(&h1)?;
    let torus_lattice = torus_lattice(&h1)?;
    let lines = torus_line_generators(&h1, &torus_lattice)?;
    let pair_sum_in_nl = pair_sum_in_nl(&lines, &BigInt::from(spec.n), &torus_lattice)?;
    Ok(CoveringData { spec, h1, c_values, torus_lattice, lines, pair_sum_in_nl })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The integral cohomology rings of the two coverings are not isomorphic.
    NonIsomorphic,
    /// The hypotheses hold but some step of the obstruction did not go through.
    Inconclusive,
    /// `n ≤ 5` or `n` not prime to 6.
    Withheld,
}

#[derive(Clone, Debug)]
pub struct NonIsomorphismReport {
    pub n: i64,
    pub hypotheses_met: bool,
    pub posets_isomorphic: bool,
    pub coverings: [CoveringData; 2],
    pub c_patterns_agree: bool,
    /// The pairs with `c > 1` form a graph whose only triangle is `{Q₁, Q₂, Q₃}`,
    /// so an isomorphism must permute these three.
    pub first_three_forced: bool,
    pub verdict: Verdict,
}

fn only_triangle_is_first_three(c: &[((usize, usize), BigInt)]) -> bool {
    let edge = |i: usize, j: usize| c.iter().any(|&((a, b), ref v)| (a, b) == (i.min(j), i.max(j)) && v > &BigInt::one());
    let k = c.iter().map(|((_, b), _)| b + 1).max().unwrap_or(0);
    let mut triangles = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            for l in j + 1..k {
                if edge(i, j) && edge(i, l) && edge(j, l) {
                    triangles.push((i, j, l));
                }
            }
        }
    }
    triangles == [(0, 1, 2)]
}

/// Compares the coverings with twists 1 and 2 of degree `n`.
pub fn verify_non_isomorphism(n: i64) -> Result<NonIsomorphismReport> {
    let first = CoveringSpec::new(n, 1)?;
    let second = CoveringSpec::new(n, 2)?;
    let hypotheses_met = first.meets_obstruction_hypotheses();
    let posets_isomorphic =
        is_isomorphic(&enumerate_layers(&first.arrangement())?, &enumerate_layers(&second.arrangement())?).is_some();
    let d1 = covering_data(first)?;
    let d2 = covering_data(second)?;
    let c_patterns_agree = d1.c_values == d2.c_values;
    let first_three_forced = only_triangle_is_first_three(&d1.c_values) && only_triangle_is_first_three(&d2.c_values);
    let verdict = if !hypotheses_met {
        Verdict::Withheld
    } else if posets_isomorphic
        && c_patterns_agree
        && first_three_forced
        && d1.torus_lattice == d2.torus_lattice
        && d1.pair_sum_in_nl != d2.pair_sum_in_nl
    {
        Verdict::NonIsomorphic
    } else {
        Verdict::Inconclusive
    };
    Ok(NonIsomorphismReport {
        n,
        hypotheses_met,
        posets_isomorphic,
        coverings: [d1, d2],
        c_patterns_agree,
        first_three_forced,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn spec_validation() {
        assert!(CoveringSpec::new(7, 1).is_ok());
        assert!(CoveringSpec::new(6, 1).is_err());
        assert!(CoveringSpec::new(7, 6).is_err());
        assert!(CoveringSpec::new(0, 1).is_err());
        assert!(CoveringSpec::new(7, 1).unwrap().meets_obstruction_hypotheses());
        assert!(!CoveringSpec::new(5, 1).unwrap().meets_obstruction_hypotheses());
    }

    #[test]
    fn pullback_columns() {
        let p = pullback_matrix(&CoveringSpec::new(7, 2).unwrap());
        assert_eq!(p.column(4), big(&[0, 0, 0, 2, 7]));
        assert_eq!(p.column(3), big(&[0, 0, 0, 1, 0]));
        assert_eq!(p.determinant().unwrap(), BigInt::from(7));
        assert_eq!(pullback_matrix(&CoveringSpec::new(1, 0).unwrap()), IntMatrix::identity(5));
    }

    #[test]
    fn components_match_closed_form() {
        for (n, a) in [(7, 1), (7, 2), (11, 1), (5, 2), (1, 0)] {
            let spec = CoveringSpec::new(n, a).unwrap();
            assert_eq!(build_h1_lattice(&spec).unwrap().components(), closed_form_components(&spec).as_slice());
        }
    }

    #[test]
    fn c_value_pattern() {
        for a in [1, 2] {
            let h = build_h1_lattice(&CoveringSpec::new(7, a).unwrap()).unwrap();
            for ((i, j), c) in c_values(&h).unwrap() {
                let expected = if [(0, 1), (0, 2), (1, 2), (3, 4)].contains(&(i, j)) { 7 } else { 1 };
                assert_eq!(c, BigInt::from(expected), "pair {i},{j}");
            }
            assert!(c_value(&h, 2, 2).is_err());
        }
    }

    #[test]
    fn radical_examples() {
        let z2 = Lattice::full(2);
        let two = Lattice::from_vectors(2, &[big(&[2, 0]), big(&[0, 2])]).unwrap();
        assert_eq!(radical(&two, &z2).unwrap(), z2);
        assert_eq!(radical(&z2, &z2).unwrap(), z2);
    }

    #[test]
    fn torus_lines() {
        let h = build_h1_lattice(&CoveringSpec::new(7, 1).unwrap()).unwrap();
        let l = torus_lattice(&h).unwrap();
        assert_eq!(l, Lattice::from_vectors(5, &[big(&[0, 0, 0, 1, 0]), big(&[0, 0, 0, 0, 1])]).unwrap());
        let lines = torus_line_generators(&h, &l).unwrap();
        assert_eq!(lines, vec![big(&[0, 0, 0, 1, 0]), big(&[0, 0, 0, 1, 7]), big(&[0, 0, 0, 2, 7])]);
        assert!(torus_line_generator(&h, &l, 3).is_err());
        assert!(pair_sum_in_nl(&lines, &BigInt::from(7), &l).unwrap());

        let h2 = build_h1_lattice(&CoveringSpec::new(7, 2).unwrap()).unwrap();
        let lines2 = torus_line_generators(&h2, &l).unwrap();
        assert_eq!(lines2, vec![big(&[0, 0, 0, 1, 0]), big(&[0, 0, 0, 2, 7]), big(&[0, 0, 0, 3, 7])]);
        assert!(!pair_sum_in_nl(&lines2, &BigInt::from(7), &l).unwrap());

        let h5 = build_h1_lattice(&CoveringSpec::new(5, 2).unwrap()).unwrap();
        let lines5 = torus_line_generators(&h5, &torus_lattice(&h5).unwrap()).unwrap();
        assert!(pair_sum_in_nl(&lines5, &BigInt::from(5), &l).unwrap());
    }

    #[test]
    fn verdicts() {
        for n in [7, 11, 13] {
            let r = verify_non_isomorphism(n).unwrap();
            assert!(r.posets_isomorphic && r.c_patterns_agree && r.first_three_forced);
            assert_eq!(r.verdict, Verdict::NonIsomorphic, "n = {n}");
        }
        let r = verify_non_isomorphism(5).unwrap();
        assert_eq!(r.verdict, Verdict::Withheld);
        assert_eq!(r.coverings[0].pair_sum_in_nl, r.coverings[1].pair_sum_in_nl);
        assert!(verify_non_isomorphism(9).is_err());
    }
}
