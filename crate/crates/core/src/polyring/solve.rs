use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::groebner::buchberger;
use super::multivariate::{MultiPolyQ, TermOrder};
use crate::error::{Error, Result};
use crate::exactlin::Rat;

/// Largest integer whose divisors are enumerated when searching rational roots.
pub const DIVISOR_SEARCH_LIMIT: u64 = 1 << 40;

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let n = n.abs();
    let limit = BigInt::from(DIVISOR_SEARCH_LIMIT);
    if n > limit {
        return Err(Error::Precondition(format!("coefficient {} too large for root search", n)));
    }
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            let e = &n / &d;
            if e != d {
                out.push(e);
            }
        }
        d += 1;
    }
    Ok(out)
}

/// Distinct rational roots of a univariate polynomial with coefficients by
/// increasing power, sorted increasingly.
pub fn rational_roots(coeffs: &[Rat]) -> Result<Vec<Rat>> {
    let mut c: Vec<Rat> = coeffs.to_vec();
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    if c.is_empty() {
        return Err(Error::Precondition("the zero polynomial has every root".into()));
    }
    let denom = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut ints: Vec<BigInt> = c.iter().map(|x| (x * Rat::from_integer(denom.clone())).to_integer()).collect();
    let mut roots = Vec::new();
    let low = ints.iter().position(|x| !x.is_zero()).expect("nonzero polynomial");
    if low > 0 {
        roots.push(Rat::zero());
        ints.drain(..low);
    }
    if ints.len() > 1 {
        let ps = divisors(&ints[0])?;
        let qs = divisors(ints.last().expect("nonempty"))?;
        let eval = |x: &Rat| ints.iter().rev().fold(Rat::zero(), |acc, a| acc * x + Rat::from_integer(a.clone()));
        for p in &ps {
            for q in &qs {
                for s in [p.clone(), -p.clone()] {
                    let x = Rat::new(s, q.clone());
                    if eval(&x).is_zero() && !roots.contains(&x) {
                        roots.push(x);
                    }
                }
            }
        }
    }
    roots.sort();
    Ok(roots)
}

/// Rational points of a zero-dimensional affine system, found by a lex
/// Gröbner basis and back substitution. Points with an irrational
/// coordinate are not returned.
pub fn affine_rational_points(vars: &Arc<Vec<String>>, gens: &[MultiPolyQ]) -> Result<Vec<Vec<Rat>>> {
    let n = vars.len();
    if n == 0 {
        let consistent = gens.iter().all(MultiPolyQ::is_zero);
        return Ok(if consistent { vec![vec![]] } else { vec![] });
    }
    let g = buchberger(vars, gens, TermOrder::Lex)?;
    if g.is_unit() {
        return Ok(vec![]);
    }
    let last = n - 1;
    let uni = g
        .polys()
        .iter()
        .find(|p| p.support() == vec![last])
        .ok_or(Error::PositiveDimensional(n as i64))?;
    let mut coeffs = vec![Rat::zero(); uni.total_degree().unwrap_or(0) as usize + 1];
    for (m, c) in uni.terms() {
        coeffs[m[last] as usize] = c.clone();
    }
    let sub_vars: Arc<Vec<String>> = Arc::new(vars[..last].to_vec());
    let mut points = Vec::new();
    for root in rational_roots(&coeffs)? {
        let reduced: Vec<MultiPolyQ> = g
            .polys()
            .iter()
            .map(|p| p.specialize_last(&root, sub_vars.clone()))
            .filter(|p| !p.is_zero())
            .collect();
        if n == 1 {
            if reduced.is_empty() {
                points.push(vec![root]);
            }
            continue;
        }
        for mut pt in affine_rational_points(&sub_vars, &reduced)? {
            pt.push(root.clone());
            points.push(pt);
        }
    }
    points.sort();
    Ok(points)
}

/// Rational points of a projective scheme given by homogeneous generators,
/// each normalized so its first nonzero coordinate is 1.
pub fn projective_rational_points(vars: &Arc<Vec<String>>, gens: &[MultiPolyQ]) -> Result<Vec<Vec<Rat>>> {
    let n = vars.len();
    let mut points = Vec::new();
    for chart in 0..n {
        // x_j = 0 for j < chart, x_chart = 1; remaining variables x_{chart+1}..
        let chart_vars: Arc<Vec<String>> = Arc::new(vars[chart + 1..].to_vec());
        let restricted: Vec<MultiPolyQ> = gens
            .iter()
            .map(|g| {
                let mut p = MultiPolyQ::zero(chart_vars.clone());
                for (m, c) in g.terms() {
                    if m[..chart].iter().all(|&e| e == 0) {
                        p.add_term(m[chart + 1..].to_vec(), c.clone());
                    }
                }
                p
            })
            .filter(|p| !p.is_zero())
            .collect();
        let found = if chart_vars.is_empty() {
            if restricted.is_empty() { vec![vec![]] } else { vec![] }
        } else {
            affine_rational_points(&chart_vars, &restricted)?
        };
        for tail in found {
            let mut pt = vec![Rat::zero(); chart];
            pt.push(Rat::one());
            pt.extend(tail);
            points.push(pt);
        }
    }
    Ok(points)
}

/// Scales a nonzero vector so its first nonzero entry is 1.
pub fn normalize_projective(v: &[Rat]) -> Option<Vec<Rat>> {
    let lead = v.iter().find(|x| !x.is_zero())?.clone();
    Some(v.iter().map(|x| x / &lead).collect())
}

/// Primitive integer representative with positive first nonzero entry.
pub fn primitive_integer_vector(v: &[Rat]) -> Option<Vec<BigInt>> {
    let w = normalize_projective(v)?;
    let denom = w.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = w.iter().map(|x| (x * Rat::from_integer(denom.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    Some(ints.into_iter().map(|x| x / &g).collect())
}
