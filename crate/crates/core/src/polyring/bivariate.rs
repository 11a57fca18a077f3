use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::univariate::UniPolyZ;
use crate::error::{Error, Result};

/// Sparse integer polynomial in `x` and `y`, keyed by `(deg_x, deg_y)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BivariatePolyZ {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivariatePolyZ {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(0, 0, c);
        p
    }

    pub fn x() -> Self {
        Self::from_terms(&[((1, 0), 1)])
    }

    pub fn y() -> Self {
        Self::from_terms(&[((0, 1), 1)])
    }

    pub fn from_terms(terms: &[((u32, u32), i64)]) -> Self {
        let mut p = Self::zero();
        for &((i, j), c) in terms {
            p.add_term(i, j, BigInt::from(c));
        }
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: BigInt) {
        let e = self.terms.entry((i, j)).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), BigInt> {
        &self.terms
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, -c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &other.terms {
                out.add_term(i + k, j + l, a * b);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(BigInt::one()), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * num_traits::pow(x.clone(), i as usize) * num_traits::pow(y.clone(), j as usize))
            .sum()
    }
}

/// `P(t) = t^rank * T((2t+1)/t, 0)`, the specialization of an arithmetic
/// Tutte polynomial giving the Poincaré polynomial of an essential
/// arrangement of the given rank.
pub fn tutte_to_poincare(tutte: &BivariatePolyZ, rank: u32) -> Result<UniPolyZ> {
    let two_t_plus_one = UniPolyZ::from_i64(&[1, 2]);
    let mut out = UniPolyZ::zero();
    for (&(i, j), c) in tutte.terms() {
        if j > 0 {
            continue;
        }
        if i > rank {
            return Err(Error::InvalidTutte(format!("x-degree {} exceeds rank {}", i, rank)));
        }
        let term = two_t_plus_one.pow(i as usize).mul(&UniPolyZ::monomial(c.clone(), (rank - i) as usize));
        out = out.add(&term);
    }
    Ok(out)
}

impl fmt::Display for BivariatePolyZ {
    /// Terms by decreasing total degree, then decreasing `x` degree:
    /// `x^3 + x^2 + 25x + 25y + 48`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by(|a, b| (b.0 + b.1, b.0).cmp(&(a.0 + a.1, a.0)));
        for (n, &&(i, j)) in keys.iter().enumerate() {
            let c = &self.terms[&(i, j)];
            if n == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            let a = c.abs();
            let mut var = String::new();
            for (name, e) in [("x", i), ("y", j)] {
                match e {
                    0 => {}
                    1 => var.push_str(name),
                    _ => var.push_str(&format!("{}^{}", name, e)),
                }
            }
            if var.is_empty() || !a.is_one() {
                write!(f, "{}", a)?;
            }
            write!(f, "{}", var)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let p = BivariatePolyZ::from_terms(&[((2, 0), 1), ((1, 0), 1), ((0, 1), 1)]);
        assert_eq!(p.add(&BivariatePolyZ::zero()), p);
        assert_eq!(p.eval(&BigInt::from(2), &BigInt::zero()), BigInt::from(6));
        let one = BivariatePolyZ::constant(BigInt::one());
        let q = BivariatePolyZ::x().sub(&one).mul(&BivariatePolyZ::y().sub(&one));
        assert_eq!(q, BivariatePolyZ::from_terms(&[((1, 1), 1), ((1, 0), -1), ((0, 1), -1), ((0, 0), 1)]));
        assert_eq!(q.to_string(), "xy - x - y + 1");
    }

    #[test]
    fn poincare_specializations() {
        let cases: &[(&[((u32, u32), i64)], u32, &[i64])] = &[
            (&[((2, 0), 1), ((1, 0), 1), ((0, 1), 1)], 2, &[1, 5, 6]),
            (&[((2, 0), 1), ((1, 0), 1), ((0, 1), 7), ((0, 0), 12)], 2, &[1, 5, 18]),
            (&[((3, 0), 1), ((2, 0), 1), ((1, 0), 25), ((0, 1), 25), ((0, 0), 48)], 3, &[1, 7, 41, 110]),
            (&[((3, 0), 1), ((2, 0), 1), ((1, 0), 1), ((0, 1), 1)], 3, &[1, 7, 17, 14]),
        ];
        for (terms, r, expect) in cases {
            let t = BivariatePolyZ::from_terms(terms);
            assert_eq!(tutte_to_poincare(&t, *r).unwrap(), UniPolyZ::from_i64(expect), "{}", t);
        }
    }

    #[test]
    fn poincare_rejects_high_x_degree() {
        let t = BivariatePolyZ::from_terms(&[((3, 0), 1)]);
        assert!(matches!(tutte_to_poincare(&t, 2), Err(Error::InvalidTutte(_))));
    }
}
