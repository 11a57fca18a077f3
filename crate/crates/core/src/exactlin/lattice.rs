use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::matrix::IntMatrix;
use super::normal_form::{hnf, left_kernel, snf};
use crate::error::{Error, Result};

/// A sublattice of `Z^m`, stored by the nonzero rows of its canonical row HNF.
///
/// Two lattices are equal exactly when their stored bases are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lattice {
    ambient: usize,
    basis: IntMatrix,
}

impl Lattice {
    pub fn zero(ambient: usize) -> Self {
        Lattice { ambient, basis: IntMatrix::zeros(0, ambient) }
    }

    pub fn full(ambient: usize) -> Self {
        Lattice { ambient, basis: IntMatrix::identity(ambient) }
    }

    /// Lattice spanned by the rows of `m`.
    pub fn from_rows(m: &IntMatrix) -> Self {
        let (h, _) = hnf(m);
        let rows: Vec<Vec<BigInt>> = (0..h.rows())
            .filter(|&i| h.row(i).iter().any(|x| !x.is_zero()))
            .map(|i| h.row_vec(i))
            .collect();
        Lattice { ambient: m.cols(), basis: IntMatrix::from_rows(m.cols(), &rows).expect("widths agree") }
    }

    /// Lattice spanned by the columns of `m` (so the ambient dimension is `m.rows()`).
    pub fn from_columns(m: &IntMatrix) -> Self {
        Self::from_rows(&m.transpose())
    }

    pub fn from_vectors(ambient: usize, vectors: &[Vec<BigInt>]) -> Result<Self> {
        Ok(Self::from_rows(&IntMatrix::from_rows(ambient, vectors)?))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    /// Basis rows in canonical HNF.
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<BigInt>> {
        self.basis.row_vectors()
    }

    fn check_ambient(&self, len: usize) -> Result<()> {
        if len != self.ambient {
            return Err(Error::Dimension(format!("vector of length {} in ambient Z^{}", len, self.ambient)));
        }
        Ok(())
    }

    /// Integer coordinates of `v` on the HNF basis, or `None` if `v` is not in the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        self.check_ambient(v.len())?;
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        for i in 0..self.rank() {
            let row = self.basis.row(i);
            let p = row.iter().position(|x| !x.is_zero()).expect("basis rows are nonzero");
            if !rest[p].is_multiple_of(&row[p]) {
                return Ok(None);
            }
            let c = &rest[p] / &row[p];
            if !c.is_zero() {
                for (r, b) in rest.iter_mut().zip(row) {
                    *r -= &c * b;
                }
            }
            coords.push(c);
        }
        Ok(if rest.iter().all(Zero::is_zero) { Some(coords) } else { None })
    }

    pub fn contains(&self, v: &[BigInt]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    pub fn contains_lattice(&self, other: &Lattice) -> Result<bool> {
        self.check_ambient(other.ambient)?;
        for v in other.basis_vectors() {
            if !self.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `v ∈ n·L`
    pub fn in_scaled(&self, v: &[BigInt], n: &BigInt) -> Result<bool> {
        self.check_ambient(v.len())?;
        if n.is_zero() {
            return Ok(v.iter().all(Zero::is_zero));
        }
        if !v.iter().all(|x| x.is_multiple_of(n)) {
            return Ok(false);
        }
        let w: Vec<BigInt> = v.iter().map(|x| x / n).collect();
        self.contains(&w)
    }

    pub fn sum(&self, other: &Lattice) -> Result<Lattice> {
        self.check_ambient(other.ambient)?;
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Lattice::from_vectors(self.ambient, &rows)
    }

    pub fn intersect(&self, other: &Lattice) -> Result<Lattice> {
        self.check_ambient(other.ambient)?;
        if self.rank() == 0 || other.rank() == 0 {
            return Ok(Lattice::zero(self.ambient));
        }
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        let stacked = IntMatrix::from_rows(self.ambient, &rows)?;
        let kernel = left_kernel(&stacked);
        let k1 = self.rank();
        let coeffs = kernel.select_columns(&(0..k1).collect::<Vec<_>>());
        Ok(Lattice::from_rows(&coeffs.mul(&self.basis)?))
    }

    /// Smallest saturated lattice containing `self`: all `x` with some `k x` in `self`.
    pub fn saturation(&self) -> Lattice {
        if self.rank() == 0 {
            return self.clone();
        }
        let s = snf(&self.basis);
        let k = s.rank();
        let vinv = s.right_inverse();
        let rows: Vec<Vec<BigInt>> = (0..k).map(|i| vinv.row_vec(i)).collect();
        Lattice::from_vectors(self.ambient, &rows).expect("widths agree")
    }

    pub fn is_saturated(&self) -> bool {
        self.saturation() == *self
    }

    /// Expresses each basis row of `sub` in coordinates of `self`'s basis.
    pub fn coordinate_matrix(&self, sub: &Lattice) -> Result<IntMatrix> {
        self.check_ambient(sub.ambient)?;
        let mut rows = Vec::with_capacity(sub.rank());
        for v in sub.basis_vectors() {
            match self.coordinates(&v)? {
                Some(c) => rows.push(c),
                None => return Err(Error::Precondition("sublattice is not contained in the superlattice".into())),
            }
        }
        IntMatrix::from_rows(self.rank(), &rows)
    }
}

/// Finite abelian group `⊕ Z/d_i` with `d_1 | d_2 | ...`, each `d_i > 1`,
/// plus integer lifts of the cyclic generators into an ambient lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    invariant_factors: Vec<BigInt>,
    generator_lifts: Vec<Vec<BigInt>>,
}

impl FiniteAbelianGroup {
    pub fn new(invariant_factors: Vec<BigInt>, generator_lifts: Vec<Vec<BigInt>>) -> Self {
        debug_assert_eq!(invariant_factors.len(), generator_lifts.len());
        debug_assert!(invariant_factors.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
        FiniteAbelianGroup { invariant_factors, generator_lifts }
    }

    pub fn trivial() -> Self {
        FiniteAbelianGroup { invariant_factors: Vec::new(), generator_lifts: Vec::new() }
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn generator_lifts(&self) -> &[Vec<BigInt>] {
        &self.generator_lifts
    }

    pub fn order(&self) -> BigInt {
        self.invariant_factors.iter().fold(BigInt::one(), |acc, d| acc * d)
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }
}

/// `sup / sub` for lattices of equal rank with `sub ⊆ sup`.
pub fn quotient_group(sup: &Lattice, sub: &Lattice) -> Result<FiniteAbelianGroup> {
    if sup.ambient_dim() != sub.ambient_dim() {
        return Err(Error::Dimension("lattices live in different ambient spaces".into()));
    }
    if sup.rank() != sub.rank() {
        return Err(Error::Precondition(format!("rank mismatch: {} vs {}", sup.rank(), sub.rank())));
    }
    let c = sup.coordinate_matrix(sub)?;
    let s = snf(&c);
    let vinv = s.right_inverse();
    let mut factors = Vec::new();
    let mut lifts = Vec::new();
    for (i, d) in s.diag.iter().enumerate() {
        if d > &BigInt::one() {
            factors.push(d.clone());
            let coords = vinv.row_vec(i);
            let lift: Vec<BigInt> = (0..sup.ambient_dim())
                .map(|j| coords.iter().enumerate().map(|(k, c)| c * &sup.basis()[(k, j)]).sum())
                .collect();
            lifts.push(lift);
        }
    }
    Ok(FiniteAbelianGroup::new(factors, lifts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> Vec<BigInt> {
        x.iter().map(|&a| BigInt::from(a)).collect()
    }

    fn lat(m: usize, rows: &[&[i64]]) -> Lattice {
        let rows: Vec<Vec<BigInt>> = rows.iter().map(|r| v(r)).collect();
        Lattice::from_vectors(m, &rows).unwrap()
    }

    #[test]
    fn saturation_examples() {
        let l = lat(3, &[&[1, 0, 0], &[1, 5, 0]]);
        assert_eq!(l.saturation(), lat(3, &[&[1, 0, 0], &[0, 1, 0]]));
        assert_eq!(lat(2, &[&[2, 0], &[0, 3]]).saturation(), Lattice::full(2));
        let s = lat(3, &[&[1, 2, 3]]);
        assert_eq!(s.saturation(), s);
        assert!(Lattice::zero(4).is_saturated());
    }

    #[test]
    fn quotient_examples() {
        let g = lat(3, &[&[1, 0, 0], &[1, 5, 0]]);
        let q = quotient_group(&g.saturation(), &g).unwrap();
        assert_eq!(q.invariant_factors(), &v(&[5])[..]);
        assert!(quotient_group(&g, &g).unwrap().is_trivial());
        let n = IntMatrix::from_i64(&[&[1, 1, 1, 3], &[0, 5, 0, 5], &[0, 0, 5, 5]]);
        let gamma = Lattice::from_columns(&n);
        let q = quotient_group(&gamma.saturation(), &gamma).unwrap();
        assert_eq!(q.invariant_factors(), &v(&[5, 5])[..]);
        for (lift, d) in q.generator_lifts().iter().zip(q.invariant_factors()) {
            assert!(!gamma.contains(lift).unwrap());
            let scaled: Vec<BigInt> = lift.iter().map(|x| x * d).collect();
            assert!(gamma.contains(&scaled).unwrap());
        }
    }

    #[test]
    fn quotient_precondition_errors() {
        let a = lat(2, &[&[1, 0]]);
        let b = Lattice::full(2);
        assert!(quotient_group(&b, &a).is_err());
        let c = lat(2, &[&[0, 1]]);
        assert!(quotient_group(&a, &c).is_err());
    }

    #[test]
    fn lattice_operations() {
        let x = lat(2, &[&[1, 0]]);
        let y = lat(2, &[&[0, 1]]);
        assert_eq!(x.intersect(&y).unwrap().rank(), 0);
        assert_eq!(x.sum(&y).unwrap(), Lattice::full(2));
        assert!(Lattice::full(2).in_scaled(&v(&[0, 7]), &BigInt::from(7)).unwrap());
        assert!(!Lattice::full(2).in_scaled(&v(&[1, 7]), &BigInt::from(7)).unwrap());
        // L = <alpha, beta>; (5b + 2a) + (5b + 3a) = 5(a + 2b)
        let w = v(&[5, 10]);
        assert!(Lattice::full(2).in_scaled(&w, &BigInt::from(5)).unwrap());
        assert!(x.contains(&v(&[1, 0, 0])).is_err());
        assert!(x.sum(&Lattice::full(3)).is_err());
    }

    #[test]
    fn intersection_nontrivial() {
        let a = lat(2, &[&[2, 0], &[0, 1]]);
        let b = lat(2, &[&[1, 1], &[0, 3]]);
        let i = a.intersect(&b).unwrap();
        // brute force on a box
        for x in -12i64..=12 {
            for y in -12i64..=12 {
                let p = v(&[x, y]);
                let expect = a.contains(&p).unwrap() && b.contains(&p).unwrap();
                assert_eq!(i.contains(&p).unwrap(), expect, "{:?}", p);
            }
        }
    }
}
