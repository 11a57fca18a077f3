//! Arithmetic matroids and matroids over the integers represented by an
//! integer matrix, with their arithmetic Tutte and Poincaré polynomials.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactlin::{cokernel, IntMatrix};
use crate::polyring::{tutte_to_poincare, BivariatePolyZ, UniPolyZ};

/// Default bound on the ground set size for `2^n` subset enumeration.
pub const MAX_GROUND: usize = 20;

/// A subset of the ground set, bit `i` standing for column `i`.
pub type Subset = u64;

/// Rejects ground sets too large for subset enumeration.
pub fn check_subset_guard(n: usize, limit: usize) -> Result<()> {
    if n > limit || n > 63 {
        return Err(Error::SubsetGuard { ground: n, limit });
    }
    Ok(())
}

/// Rank and multiplicity tables indexed by subset bitmask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArithmeticMatroid {
    ground: usize,
    rank: Vec<u32>,
    mult: Vec<BigInt>,
}

/// Free rank and invariant factors (all greater than 1) of `Z^r / <N[S]>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleType {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

/// Isomorphism type of the quotient module for every subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZMatroid {
    ground: usize,
    modules: Vec<ModuleType>,
}

impl ArithmeticMatroid {
    /// Builds the tables from explicit data; `rank` and `mult` are indexed by subset bitmask.
    pub fn from_tables(ground: usize, rank: Vec<u32>, mult: Vec<BigInt>) -> Result<Self> {
        check_subset_guard(ground, MAX_GROUND)?;
        if rank.len() != 1 << ground || mult.len() != 1 << ground {
            return Err(Error::Dimension(format!("tables must have 2^{} entries", ground)));
        }
        Ok(ArithmeticMatroid { ground, rank, mult })
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn rank(&self, s: Subset) -> u32 {
        self.rank[s as usize]
    }

    pub fn multiplicity(&self, s: Subset) -> &BigInt {
        &self.mult[s as usize]
    }

    pub fn full_set(&self) -> Subset {
        (1u64 << self.ground) - 1
    }

    pub fn subsets(&self) -> impl Iterator<Item = Subset> {
        0..(1u64 << self.ground)
    }
}

impl ZMatroid {
    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn module(&self, s: Subset) -> &ModuleType {
        &self.modules[s as usize]
    }
}

/// Arithmetic matroid of the columns of `n`, refusing more than `limit` columns.
pub fn from_matrix_with_limit(n: &IntMatrix, limit: usize) -> Result<ArithmeticMatroid> {
    let z = zmatroid_from_matrix_with_limit(n, limit)?;
    let rows = n.rows();
    let rank = z.modules.iter().map(|m| (rows - m.free_rank) as u32).collect();
    let mult = z.modules.iter().map(|m| m.torsion.iter().product()).collect();
    Ok(ArithmeticMatroid { ground: z.ground, rank, mult })
}

pub fn from_matrix(n: &IntMatrix) -> Result<ArithmeticMatroid> {
    from_matrix_with_limit(n, MAX_GROUND)
}

pub fn zmatroid_from_matrix_with_limit(n: &IntMatrix, limit: usize) -> Result<ZMatroid> {
    let ground = n.cols();
    check_subset_guard(ground, limit)?;
    let modules = (0..1u64 << ground)
        .map(|s| {
            let (free_rank, group) = cokernel(&n.select_mask(s));
            ModuleType { free_rank, torsion: group.invariant_factors().to_vec() }
        })
        .collect();
    Ok(ZMatroid { ground, modules })
}

pub fn zmatroid_from_matrix(n: &IntMatrix) -> Result<ZMatroid> {
    zmatroid_from_matrix_with_limit(n, MAX_GROUND)
}

/// Checks `rk(S) <= |S|`, monotonicity and submodularity over all subset pairs,
/// together with positivity of the multiplicities.
pub fn rank_axioms_check(m: &ArithmeticMatroid) -> bool {
    let all: Vec<Subset> = m.subsets().collect();
    for &s in &all {
        if m.rank(s) > s.count_ones() || m.multiplicity(s) < &BigInt::one() {
            return false;
        }
        for &t in &all {
            if s & t == s && m.rank(s) > m.rank(t) {
                return false;
            }
            if m.rank(s & t) + m.rank(s | t) > m.rank(s) + m.rank(t) {
                return false;
            }
        }
    }
    true
}

/// Table equality with the identity on the ground order.
pub fn equals(a: &ArithmeticMatroid, b: &ArithmeticMatroid) -> Result<bool> {
    if a.ground != b.ground {
        return Err(Error::Dimension(format!("ground sizes {} and {}", a.ground, b.ground)));
    }
    Ok(a == b)
}

pub fn zmatroid_equals(a: &ZMatroid, b: &ZMatroid) -> Result<bool> {
    if a.ground != b.ground {
        return Err(Error::Dimension(format!("ground sizes {} and {}", a.ground, b.ground)));
    }
    Ok(a == b)
}

/// `sum_S m(S) (x-1)^(rk E - rk S) (y-1)^(|S| - rk S)`
pub fn arithmetic_tutte(m: &ArithmeticMatroid) -> BivariatePolyZ {
    let one = BivariatePolyZ::constant(BigInt::one());
    let xm = BivariatePolyZ::x().sub(&one);
    let ym = BivariatePolyZ::y().sub(&one);
    let rk_e = m.rank(m.full_set());
    let mut out = BivariatePolyZ::zero();
    for s in m.subsets() {
        let rs = m.rank(s);
        let term = xm
            .pow(rk_e - rs)
            .mul(&ym.pow(s.count_ones() - rs))
            .mul(&BivariatePolyZ::constant(m.multiplicity(s).clone()));
        out = out.add(&term);
    }
    out
}

/// Poincaré polynomial of the complement of the arrangement in a torus of
/// dimension `r`. A non-essential arrangement contributes a factor
/// `(1+t)^(r - rk E)` from the directions its characters do not see.
pub fn poincare_polynomial(m: &ArithmeticMatroid, r: u32) -> Result<UniPolyZ> {
    let rk_e = m.rank(m.full_set());
    if rk_e > r {
        return Err(Error::InvalidTutte(format!("rank {} exceeds torus dimension {}", rk_e, r)));
    }
    let essential = tutte_to_poincare(&arithmetic_tutte(m), rk_e)?;
    Ok(UniPolyZ::from_i64(&[1, 1]).pow((r - rk_e) as usize).mul(&essential))
}

/// Whether every subset has multiplicity one.
pub fn is_totally_unimodular(n: &IntMatrix) -> Result<bool> {
    let m = from_matrix(n)?;
    Ok(m.mult.iter().all(One::is_one))
}
