use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::{rref, QMatrix, Rat};
use crate::polyring::{normalize_projective, primitive_integer_vector};

/// Index pairs `(i, j)` with `i < j < m` in lexicographic order.
pub fn pair_indices(m: usize) -> Vec<(usize, usize)> {
    (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect()
}

/// Variable names `x12, x13, …` for the Plücker coordinates of planes in `Q^m`.
pub fn plucker_variables(m: usize) -> Arc<Vec<String>> {
    let sep = if m >= 10 { "_" } else { "" };
    Arc::new(pair_indices(m).into_iter().map(|(i, j)| format!("x{}{}{}", i + 1, sep, j + 1)).collect())
}

/// A two-dimensional subspace of `Q^m`, stored by its reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Plane {
    rows: [Vec<Rat>; 2],
}

impl Plane {
    pub fn new(u: Vec<Rat>, v: Vec<Rat>) -> Result<Self> {
        if u.len() != v.len() {
            return Err(Error::Dimension(format!("spanning vectors of lengths {} and {}", u.len(), v.len())));
        }
        let mut m: QMatrix = vec![u, v];
        if rref(&mut m).len() != 2 {
            return Err(Error::Precondition("spanning vectors are dependent".into()));
        }
        let v = m.pop().expect("two rows");
        let u = m.pop().expect("two rows");
        Ok(Plane { rows: [u, v] })
    }

    pub fn from_integers(u: &[i64], v: &[i64]) -> Result<Self> {
        let q = |w: &[i64]| w.iter().map(|&x| Rat::from_integer(x.into())).collect();
        Plane::new(q(u), q(v))
    }

    pub fn ambient_dim(&self) -> usize {
        self.rows[0].len()
    }

    /// The reduced echelon basis.
    pub fn basis(&self) -> &[Vec<Rat>; 2] {
        &self.rows
    }

    /// Echelon basis rows scaled to primitive integer vectors.
    pub fn integer_basis(&self) -> [Vec<BigInt>; 2] {
        self.rows.clone().map(|r| primitive_integer_vector(&r).expect("basis rows are nonzero"))
    }

    pub fn contains(&self, w: &[Rat]) -> Result<bool> {
        if w.len() != self.ambient_dim() {
            return Err(Error::Dimension(format!("vector of length {} for a plane in Q^{}", w.len(), self.ambient_dim())));
        }
        let mut m: QMatrix = vec![self.rows[0].clone(), self.rows[1].clone(), w.to_vec()];
        Ok(rref(&mut m).len() == 2)
    }

    pub fn plucker(&self) -> PluckerPoint {
        let [u, v] = &self.rows;
        let coords = pair_indices(self.ambient_dim()).into_iter().map(|(i, j)| &u[i] * &v[j] - &u[j] * &v[i]).collect();
        PluckerPoint::new(self.ambient_dim(), coords).expect("independent rows")
    }
}

impl fmt::Display for Plane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [u, v] = self.integer_basis();
        let show = |w: &[BigInt]| w.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        write!(f, "<({}), ({})>", show(&u), show(&v))
    }
}

/// Projective point of `P(Λ² Q^m)` in lexicographic Plücker coordinates,
/// normalized so that the first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PluckerPoint {
    m: usize,
    coords: Vec<Rat>,
}

impl PluckerPoint {
    pub fn new(m: usize, coords: Vec<Rat>) -> Result<Self> {
        if coords.len() != m * m.saturating_sub(1) / 2 {
            return Err(Error::Dimension(format!("{} Plücker coordinates for m = {m}", coords.len())));
        }
        let coords = normalize_projective(&coords)
            .ok_or_else(|| Error::Precondition("all Plücker coordinates vanish".into()))?;
        Ok(PluckerPoint { m, coords })
    }

    pub fn from_integers(m: usize, coords: &[i64]) -> Result<Self> {
        PluckerPoint::new(m, coords.iter().map(|&x| Rat::from_integer(x.into())).collect())
    }

    pub fn ambient_dim(&self) -> usize {
        self.m
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    /// Primitive integer representative.
    pub fn integer_coords(&self) -> Vec<BigInt> {
        primitive_integer_vector(&self.coords).expect("nonzero point")
    }

    /// Entry `(i, j)` of the associated skew-symmetric matrix.
    pub fn skew(&self, i: usize, j: usize) -> Rat {
        let idx = |a: usize, b: usize| a * (2 * self.m - a - 1) / 2 + (b - a - 1);
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.coords[idx(i, j)].clone(),
            std::cmp::Ordering::Greater => -self.coords[idx(j, i)].clone(),
            std::cmp::Ordering::Equal => Rat::zero(),
        }
    }

    /// Whether all four-term Pfaffian quadrics vanish.
    pub fn is_decomposable(&self) -> bool {
        let m = self.m;
        for i in 0..m {
            for j in i + 1..m {
                for k in j + 1..m {
                    for l in k + 1..m {
                        let q = self.skew(i, j) * self.skew(k, l) - self.skew(i, k) * self.skew(j, l)
                            + self.skew(i, l) * self.skew(j, k);
                        if !q.is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

impl fmt::Display for PluckerPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.integer_coords().iter().map(ToString::to_string).collect();
        write!(f, "[{}]", c.join(","))
    }
}

/// The plane whose Plücker point is `p`: for `x_ij ≠ 0`, rows `i` and `j` of
/// the skew-symmetric matrix span it.
pub fn plane_from_plucker(p: &PluckerPoint) -> Result<Plane> {
    if !p.is_decomposable() {
        return Err(Error::NotDecomposable(format!("{p} violates a Pfaffian quadric")));
    }
    let (i, j) = pair_indices(p.m)
        .into_iter()
        .find(|&(i, j)| !p.skew(i, j).is_zero())
        .expect("normalized point has a nonzero coordinate");
    let row = |a: usize| (0..p.m).map(|b| p.skew(a, b)).collect::<Vec<_>>();
    Plane::new(row(i), row(j))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_order() {
        assert_eq!(pair_indices(3), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(plucker_variables(4)[5], "x34");
        assert_eq!(plucker_variables(10)[0], "x1_2");
    }

    #[test]
    fn canonical_form() {
        let a = Plane::from_integers(&[1, 0, 1], &[0, 1, 1]).unwrap();
        let b = Plane::from_integers(&[1, 1, 2], &[1, -1, 0]).unwrap();
        assert_eq!(a, b);
        assert!(Plane::from_integers(&[1, 2, 3], &[2, 4, 6]).is_err());
        assert!(a.contains(&[Rat::from_integer(3.into()), Rat::from_integer(2.into()), Rat::from_integer(5.into())]).unwrap());
    }

    #[test]
    fn known_points_to_planes() {
        // basis order ω1, ω2, ω3, ψ1, ψ2
        let p1 = PluckerPoint::from_integers(5, &[0, 0, 1, 0, 0, 0, 0, 0, 0, 0]).unwrap();
        assert_eq!(plane_from_plucker(&p1).unwrap(), Plane::from_integers(&[1, 0, 0, 0, 0], &[0, 0, 0, 1, 0]).unwrap());
        let p4 = PluckerPoint::from_integers(5, &[1, -1, 1, 0, 1, 0, 0, -1, 0, 0]).unwrap();
        let expected = Plane::from_integers(&[1, 0, -1, 0, 0], &[1, -1, 0, -1, 0]).unwrap();
        assert_eq!(plane_from_plucker(&p4).unwrap(), expected);
        assert_eq!(expected.plucker(), p4);
    }

    #[test]
    fn non_decomposable() {
        // e1∧e2 + e3∧e4
        let p = PluckerPoint::from_integers(4, &[1, 0, 0, 0, 0, 1]).unwrap();
        assert!(!p.is_decomposable());
        assert!(matches!(plane_from_plucker(&p), Err(Error::NotDecomposable(_))));
    }
}
