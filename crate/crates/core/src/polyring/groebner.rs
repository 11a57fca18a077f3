use std::sync::Arc;

use num_traits::{One, Zero};

use super::multivariate::{divides, monomial_degree, monomial_lcm, Monomial, MultiPolyQ, TermOrder};
use super::univariate::UniPolyZ;
use crate::error::{Error, Result};
use crate::exactlin::{rref, Rat};

/// An ideal given by generators, together with the term order used to study it.
#[derive(Clone, Debug)]
pub struct IdealQ {
    pub vars: Arc<Vec<String>>,
    pub gens: Vec<MultiPolyQ>,
    pub order: TermOrder,
}

impl IdealQ {
    pub fn new(vars: Arc<Vec<String>>, gens: Vec<MultiPolyQ>, order: TermOrder) -> Result<Self> {
        for g in &gens {
            if g.vars() != &vars {
                return Err(Error::Variables("generator lives in a different ring".into()));
            }
        }
        Ok(IdealQ { vars, gens, order })
    }

    pub fn groebner(&self) -> Result<GroebnerBasis> {
        buchberger(&self.vars, &self.gens, self.order)
    }
}

/// Reduced Gröbner basis: monic, sorted by decreasing leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    vars: Arc<Vec<String>>,
    order: TermOrder,
    polys: Vec<MultiPolyQ>,
}

impl GroebnerBasis {
    pub fn vars(&self) -> &Arc<Vec<String>> {
        &self.vars
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn polys(&self) -> &[MultiPolyQ] {
        &self.polys
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|p| p.leading(self.order).expect("nonzero").0.clone()).collect()
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.polys.iter().any(|p| p.total_degree() == Some(0))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.polys.iter().all(MultiPolyQ::is_homogeneous)
    }

    pub fn contains(&self, p: &MultiPolyQ) -> Result<bool> {
        Ok(normal_form(p, self)?.is_zero())
    }
}

/// Remainder of `p` under full reduction by `g`.
pub fn normal_form(p: &MultiPolyQ, g: &GroebnerBasis) -> Result<MultiPolyQ> {
    if p.vars() != &g.vars {
        return Err(Error::Variables("polynomial and basis live in different rings".into()));
    }
    Ok(reduce(p, &g.polys, g.order))
}

fn reduce(p: &MultiPolyQ, basis: &[MultiPolyQ], order: TermOrder) -> MultiPolyQ {
    let leads: Vec<(Monomial, Rat)> = basis
        .iter()
        .map(|b| {
            let (m, c) = b.leading(order).expect("nonzero basis element");
            (m.clone(), c.clone())
        })
        .collect();
    let mut rest = p.clone();
    let mut rem = MultiPolyQ::zero(p.vars().clone());
    while let Some((m, c)) = rest.leading(order).map(|(m, c)| (m.clone(), c.clone())) {
        match leads.iter().position(|(l, _)| divides(l, &m)) {
            Some(k) => {
                let q: Monomial = m.iter().zip(&leads[k].0).map(|(a, b)| a - b).collect();
                let f = c / &leads[k].1;
                rest = rest.sub(&basis[k].mul_term(&q, &f)).expect("same ring");
            }
            None => {
                rem.add_term(m.clone(), c.clone());
                rest.add_term(m, -c);
            }
        }
    }
    rem
}

fn s_polynomial(f: &MultiPolyQ, g: &MultiPolyQ, order: TermOrder) -> MultiPolyQ {
    let (mf, cf) = f.leading(order).expect("nonzero");
    let (mg, cg) = g.leading(order).expect("nonzero");
    let l = monomial_lcm(mf, mg);
    let qf: Monomial = l.iter().zip(mf).map(|(a, b)| a - b).collect();
    let qg: Monomial = l.iter().zip(mg).map(|(a, b)| a - b).collect();
    let a = f.mul_term(&qf, &(Rat::one() / cf));
    let b = g.mul_term(&qg, &(Rat::one() / cg));
    a.sub(&b).expect("same ring")
}

fn unit(vars: &Arc<Vec<String>>) -> Vec<MultiPolyQ> {
    vec![MultiPolyQ::constant(vars.clone(), Rat::one())]
}

fn buchberger_core(vars: &Arc<Vec<String>>, gens: &[MultiPolyQ], order: TermOrder) -> Vec<MultiPolyQ> {
    let mut basis: Vec<MultiPolyQ> = Vec::new();
    for g in gens {
        let r = reduce(g, &basis, order);
        if r.is_zero() {
            continue;
        }
        if r.total_degree() == Some(0) {
            return unit(vars);
        }
        basis.push(r.make_monic(order));
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let lead = |p: &MultiPolyQ| p.leading(order).expect("nonzero").0.clone();
    while !pairs.is_empty() {
        // normal selection strategy: smallest lcm first
        let (k, _) = pairs
            .iter()
            .enumerate()
            .min_by(|a, b| {
                let la = monomial_lcm(&lead(&basis[a.1 .0]), &lead(&basis[a.1 .1]));
                let lb = monomial_lcm(&lead(&basis[b.1 .0]), &lead(&basis[b.1 .1]));
                order.cmp(&la, &lb)
            })
            .expect("nonempty");
        let (i, j) = pairs.swap_remove(k);
        let (li, lj) = (lead(&basis[i]), lead(&basis[j]));
        if li.iter().zip(&lj).all(|(a, b)| *a == 0 || *b == 0) {
            continue;
        }
        let l = monomial_lcm(&li, &lj);
        // chain criterion
        let chained = (0..basis.len()).any(|m| {
            m != i
                && m != j
                && divides(&lead(&basis[m]), &l)
                && !pairs.contains(&(i.min(m), i.max(m)))
                && !pairs.contains(&(j.min(m), j.max(m)))
        });
        if chained {
            continue;
        }
        let r = reduce(&s_polynomial(&basis[i], &basis[j], order), &basis, order);
        if r.is_zero() {
            continue;
        }
        if r.total_degree() == Some(0) {
            return unit(vars);
        }
        let n = basis.len();
        basis.push(r.make_monic(order));
        for m in 0..n {
            pairs.push((m, n));
        }
    }
    interreduce(basis, order)
}

fn interreduce(mut basis: Vec<MultiPolyQ>, order: TermOrder) -> Vec<MultiPolyQ> {
    basis.retain(|p| !p.is_zero());
    basis.sort_by(|a, b| order.cmp(a.leading(order).unwrap().0, b.leading(order).unwrap().0));
    let mut minimal: Vec<MultiPolyQ> = Vec::new();
    for p in basis {
        let lp = p.leading(order).unwrap().0.clone();
        if minimal.iter().any(|q| divides(q.leading(order).unwrap().0, &lp)) {
            continue;
        }
        minimal.push(p);
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<MultiPolyQ> =
            minimal.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, p)| p.clone()).collect();
        let (m, c) = minimal[k].leading(order).map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut tail = minimal[k].clone();
        tail.add_term(m.clone(), -c);
        let mut p = reduce(&tail, &others, order);
        p.add_term(m, Rat::one());
        out.push(p.make_monic(order));
    }
    out.sort_by(|a, b| order.cmp(b.leading(order).unwrap().0, a.leading(order).unwrap().0));
    out
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// Generators of degree at most one are first brought to echelon form and
/// used to eliminate their pivot variables from the remaining generators.
pub fn buchberger(vars: &Arc<Vec<String>>, gens: &[MultiPolyQ], order: TermOrder) -> Result<GroebnerBasis> {
    if vars.is_empty() {
        return Err(Error::Precondition("empty variable set".into()));
    }
    for g in gens {
        if g.vars() != vars {
            return Err(Error::Variables("generator lives in a different ring".into()));
        }
    }
    let n = vars.len();
    let (linear, nonlinear): (Vec<&MultiPolyQ>, Vec<&MultiPolyQ>) =
        gens.iter().filter(|g| !g.is_zero()).partition(|g| g.total_degree().unwrap_or(0) <= 1);

    // columns: x_0 .. x_{n-1}, constant
    let mut rows: Vec<Vec<Rat>> = linear
        .iter()
        .map(|g| {
            let mut row = vec![Rat::zero(); n + 1];
            for (m, c) in g.terms() {
                match m.iter().position(|&e| e == 1) {
                    Some(i) => row[i] = c.clone(),
                    None => row[n] = c.clone(),
                }
            }
            row
        })
        .collect();
    let pivots = rref(&mut rows);
    if pivots.contains(&n) {
        return Ok(GroebnerBasis { vars: vars.clone(), order, polys: unit(vars) });
    }
    let linear_polys: Vec<MultiPolyQ> = rows
        .iter()
        .take(pivots.len())
        .map(|row| {
            let mut p = MultiPolyQ::linear(vars.clone(), &row[..n]);
            p.add_term(vec![0; n], row[n].clone());
            p
        })
        .collect();

    let mut rest: Vec<MultiPolyQ> = Vec::new();
    for g in nonlinear {
        let mut h = g.clone();
        for (p, &v) in linear_polys.iter().zip(&pivots) {
            if h.terms().keys().any(|m| m[v] > 0) {
                // x_v = x_v - p, which no longer involves x_v
                let value = MultiPolyQ::var(vars.clone(), v).sub(p)?;
                h = h.substitute(v, &value)?;
            }
        }
        rest.push(h);
    }
    let core = buchberger_core(vars, &rest, order);
    if core.iter().any(|p| p.total_degree() == Some(0)) {
        return Ok(GroebnerBasis { vars: vars.clone(), order, polys: unit(vars) });
    }
    let mut all = linear_polys;
    all.extend(core);
    Ok(GroebnerBasis { vars: vars.clone(), order, polys: interreduce(all, order) })
}

/// Number of standard monomials of degree `d`, i.e. the value of the Hilbert
/// function of a homogeneous ideal.
pub fn hilbert_function(g: &GroebnerBasis, d: u32) -> Result<u64> {
    if !g.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let leads = g.leading_monomials();
    let mut mono = vec![0u32; g.vars.len()];
    Ok(count_standard(&leads, &mut mono, 0, d))
}

fn count_standard(leads: &[Monomial], mono: &mut Vec<u32>, var: usize, left: u32) -> u64 {
    if leads.iter().any(|l| divides(l, mono)) {
        return 0;
    }
    if var + 1 == mono.len() {
        mono[var] = left;
        let ok = !leads.iter().any(|l| divides(l, mono));
        mono[var] = 0;
        return ok as u64;
    }
    let mut total = 0;
    for e in 0..=left {
        mono[var] = e;
        total += count_standard(leads, mono, var + 1, left - e);
    }
    mono[var] = 0;
    total
}

/// Numerator `N(t)` of the Hilbert series `N(t) / (1-t)^n` of `k[x_1..x_n] / (leads)`.
pub fn hilbert_numerator(leads: &[Monomial]) -> UniPolyZ {
    let mut gens = minimalize(leads.to_vec());
    if gens.is_empty() {
        return UniPolyZ::one();
    }
    if gens.iter().any(|m| monomial_degree(m) == 0) {
        return UniPolyZ::zero();
    }
    let n = gens[0].len();
    let coprime = (0..n).all(|v| gens.iter().filter(|m| m[v] > 0).count() <= 1);
    if coprime {
        return gens.iter().fold(UniPolyZ::one(), |acc, m| {
            acc.mul(&UniPolyZ::one().sub(&UniPolyZ::monomial(1.into(), monomial_degree(m) as usize)))
        });
    }
    // split on the variable shared by the most generators
    let v = (0..n).max_by_key(|&v| gens.iter().filter(|m| m[v] > 0).count()).expect("n > 0");
    let mut pivot = vec![0; n];
    pivot[v] = 1;
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            let mut q = m.clone();
            q[v] = q[v].saturating_sub(1);
            q
        })
        .collect();
    gens.push(pivot);
    let with = hilbert_numerator(&gens);
    with.add(&UniPolyZ::monomial(1.into(), 1).mul(&hilbert_numerator(&colon)))
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| monomial_degree(m));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in gens {
        if !out.iter().any(|o| divides(o, &m)) {
            out.push(m);
        }
    }
    out
}

/// Dimension and degree of the projective scheme cut out by a homogeneous
/// ideal; the empty scheme has dimension −1 and degree 0.
pub fn projective_dim_degree(g: &GroebnerBasis) -> Result<(i64, u64)> {
    if !g.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let mut num = hilbert_numerator(&g.leading_monomials());
    if num.is_zero() {
        return Ok((-1, 0));
    }
    let mut k = 0i64;
    while let Some(q) = num.div_one_minus_t() {
        num = q;
        k += 1;
    }
    let krull = g.vars.len() as i64 - k;
    if krull <= 0 {
        return Ok((-1, 0));
    }
    let degree = num.eval(&1.into());
    let degree: u64 = degree.try_into().map_err(|_| Error::Precondition("negative degree".into()))?;
    Ok((krull - 1, degree))
}

/// Whether every generator vanishes at the given (projective or affine) point.
pub fn contains_point(gens: &[MultiPolyQ], point: &[Rat]) -> Result<bool> {
    if point.iter().all(Zero::is_zero) {
        return Err(Error::Precondition("the zero vector is not a projective point".into()));
    }
    for g in gens {
        if !g.eval(point)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
