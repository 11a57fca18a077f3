use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{snf, IntMatrix, Rat, SparseEchelon, SparseVec};

use super::labels::{GeneratorLabel, Relation};

/// Sorted generator indices; odd generators occur at most once.
pub type Monomial = Vec<usize>;

/// Element of the free graded-commutative algebra.
pub type FreeElement = BTreeMap<Monomial, Rat>;

/// Default bound on the number of generators of a presentation.
pub const DEFAULT_GENERATOR_LIMIT: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub label: GeneratorLabel,
    pub degree: usize,
}

/// A graded-commutative algebra given by generators and homogeneous
/// relations, computed degree by degree up to a top degree as the quotient
/// of the free algebra `F_d` by the span `R_d` of relation multiples.
#[derive(Clone, Debug)]
pub struct GradedAlgebraQ {
    generators: Vec<Generator>,
    relations: Vec<Relation>,
    top: usize,
    bases: Vec<Vec<Monomial>>,
    index: Vec<HashMap<Monomial, usize>>,
    spans: Vec<SparseEchelon>,
}

/// A homogeneous element, stored in reduced form over the monomial basis of its degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomElement {
    pub degree: usize,
    pub coords: SparseVec,
}

impl CohomElement {
    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }
}

fn add_into(target: &mut FreeElement, m: Monomial, c: Rat) {
    if c.is_zero() {
        return;
    }
    let e = target.entry(m.clone()).or_insert_with(Rat::zero);
    *e += c;
    if e.is_zero() {
        target.remove(&m);
    }
}

impl GradedAlgebraQ {
    pub fn new(generators: Vec<Generator>, relations: Vec<Relation>, top: usize, limit: usize) -> Result<Self> {
        if generators.len() > limit {
            return Err(Error::GeneratorGuard { count: generators.len(), limit });
        }
        let mut alg = GradedAlgebraQ { generators, relations, top, bases: vec![], index: vec![], spans: vec![] };
        for d in 0..=top {
            let basis = alg.enumerate_monomials(d);
            alg.index.push(basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect());
            alg.bases.push(basis);
        }
        for d in 0..=top {
            let mut span = SparseEchelon::new();
            for rel in &alg.relations {
                if rel.degree > d {
                    continue;
                }
                for mono in &alg.bases[d - rel.degree] {
                    let v = alg.to_coords(d, &alg.mul_free(&rel.poly, &single(mono.clone())));
                    span.insert(&v);
                }
            }
            alg.spans.push(span);
        }
        Ok(alg)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn top_degree(&self) -> usize {
        self.top
    }

    pub fn generator_index(&self, label: &GeneratorLabel) -> Option<usize> {
        self.generators.iter().position(|g| &g.label == label)
    }

    pub fn free_dimension(&self, d: usize) -> usize {
        self.bases.get(d).map_or(0, Vec::len)
    }

    pub fn relation_rank(&self, d: usize) -> usize {
        self.spans.get(d).map_or(0, SparseEchelon::rank)
    }

    /// `dim F_d - dim R_d`; zero above the top degree.
    pub fn graded_dimension(&self, d: usize) -> usize {
        self.free_dimension(d) - self.relation_rank(d)
    }

    pub fn graded_dimensions(&self) -> Vec<usize> {
        (0..=self.top).map(|d| self.graded_dimension(d)).collect()
    }

    pub fn monomial_basis(&self, d: usize) -> &[Monomial] {
        &self.bases[d]
    }

    /// Monomials of degree `d` whose classes form a basis of the quotient.
    pub fn standard_monomials(&self, d: usize) -> Vec<Monomial> {
        if d > self.top {
            return vec![];
        }
        self.bases[d].iter().enumerate().filter(|(i, _)| !self.spans[d].is_pivot(*i)).map(|(_, m)| m.clone()).collect()
    }

    fn degree_of(&self, m: &[usize]) -> usize {
        m.iter().map(|&g| self.generators[g].degree).sum()
    }

    fn enumerate_monomials(&self, d: usize) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.extend_monomials(0, d, &mut cur, &mut out);
        out
    }

    fn extend_monomials(&self, from: usize, left: usize, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for g in from..self.generators.len() {
            let deg = self.generators[g].degree;
            if deg == 0 || deg > left {
                continue;
            }
            cur.push(g);
            let next = if deg % 2 == 1 { g + 1 } else { g };
            self.extend_monomials(next, left - deg, cur, out);
            cur.pop();
        }
    }

    /// Product of two monomials as `(sign, normal form)`, or `None` when it vanishes.
    pub fn mul_monomials(&self, a: &[usize], b: &[usize]) -> Option<(i32, Monomial)> {
        let mut sign = 1;
        for &x in a {
            for &y in b {
                if y < x && self.generators[x].degree % 2 == 1 && self.generators[y].degree % 2 == 1 {
                    sign = -sign;
                }
                if x == y && self.generators[x].degree % 2 == 1 {
                    return None;
                }
            }
        }
        let mut m: Monomial = a.iter().chain(b).copied().collect();
        m.sort_unstable();
        Some((sign, m))
    }

    pub fn mul_free(&self, a: &FreeElement, b: &FreeElement) -> FreeElement {
        let mut out = FreeElement::new();
        for (ma, ca) in a {
            for (mb, cb) in b {
                if let Some((s, m)) = self.mul_monomials(ma, mb) {
                    add_into(&mut out, m, Rat::from_integer(s.into()) * ca * cb);
                }
            }
        }
        out
    }

    /// Ordered product of generators as a free element.
    pub fn word(&self, gens: &[usize]) -> FreeElement {
        gens.iter().fold(single(vec![]), |acc, &g| self.mul_free(&acc, &single(vec![g])))
    }

    fn to_coords(&self, d: usize, p: &FreeElement) -> SparseVec {
        let mut v = SparseVec::new();
        for (m, c) in p {
            debug_assert_eq!(self.degree_of(m), d);
            v.insert(self.index[d][m], c.clone());
        }
        v
    }

    /// Class of a homogeneous free element of degree `d`.
    pub fn element(&self, d: usize, p: &FreeElement) -> Result<CohomElement> {
        for m in p.keys() {
            if self.degree_of(m) != d {
                return Err(Error::Precondition("element is not homogeneous of the stated degree".into()));
            }
        }
        if d > self.top {
            return Ok(CohomElement { degree: d, coords: SparseVec::new() });
        }
        Ok(CohomElement { degree: d, coords: self.spans[d].reduce(&self.to_coords(d, p)) })
    }

    pub fn generator(&self, label: &GeneratorLabel) -> Result<CohomElement> {
        let g = self.generator_index(label).ok_or_else(|| Error::Precondition(format!("no generator {:?}", label)))?;
        self.element(self.generators[g].degree, &single(vec![g]))
    }

    pub fn one(&self) -> CohomElement {
        self.element(0, &single(vec![])).expect("degree 0")
    }

    pub fn combine(&self, terms: &[(i64, &CohomElement)]) -> Result<CohomElement> {
        let q: Vec<(Rat, &CohomElement)> = terms.iter().map(|(c, x)| (Rat::from_integer((*c).into()), *x)).collect();
        self.combine_rational(&q)
    }

    /// Linear combination with rational coefficients of elements of one degree.
    pub fn combine_rational(&self, terms: &[(Rat, &CohomElement)]) -> Result<CohomElement> {
        let d = terms.first().map_or(0, |t| t.1.degree);
        let mut v = SparseVec::new();
        for (c, x) in terms {
            if x.degree != d {
                return Err(Error::Precondition("adding elements of different degrees".into()));
            }
            for (&i, y) in &x.coords {
                let e = v.entry(i).or_insert_with(Rat::zero);
                *e += c * y;
                if e.is_zero() {
                    v.remove(&i);
                }
            }
        }
        Ok(self.reduce(d, v))
    }

    fn reduce(&self, d: usize, v: SparseVec) -> CohomElement {
        if d > self.top {
            return CohomElement { degree: d, coords: SparseVec::new() };
        }
        CohomElement { degree: d, coords: self.spans[d].reduce(&v) }
    }

    fn as_free(&self, x: &CohomElement) -> FreeElement {
        x.coords.iter().map(|(&i, c)| (self.bases[x.degree][i].clone(), c.clone())).collect()
    }

    pub fn multiply(&self, x: &CohomElement, y: &CohomElement) -> CohomElement {
        let d = x.degree + y.degree;
        if d > self.top {
            return CohomElement { degree: d, coords: SparseVec::new() };
        }
        let p = self.mul_free(&self.as_free(x), &self.as_free(y));
        let v = self.to_coords(d, &p);
        self.reduce(d, v)
    }

    /// Rank of the multiplication map from the tensor product of degrees `p` and `q` to degree `p+q`.
    pub fn multiplication_rank(&self, p: usize, q: usize) -> usize {
        if p + q > self.top {
            return 0;
        }
        let left = self.standard_monomials(p);
        let right = self.standard_monomials(q);
        let mut image = SparseEchelon::new();
        for a in &left {
            for b in &right {
                let x = self.element(p, &single(a.clone())).expect("degree p");
                let y = self.element(q, &single(b.clone())).expect("degree q");
                image.insert(&self.multiply(&x, &y).coords);
            }
        }
        image.rank()
    }

    /// The algebra with the additional homogeneous relations.
    pub fn with_relations(&self, extra: Vec<Relation>) -> Result<Self> {
        let mut rels = self.relations.clone();
        rels.extend(extra);
        GradedAlgebraQ::new(self.generators.clone(), rels, self.top, usize::MAX)
    }

    /// Quotient by the ideal generated by all degree-one torus classes.
    pub fn quotient_by_torus_ideal(&self) -> Result<Self> {
        let extra = self
            .generators
            .iter()
            .enumerate()
            .filter(|(_, g)| matches!(g.label, GeneratorLabel::Psi(_)))
            .map(|(i, g)| Relation::torus(g.label.clone(), single(vec![i])))
            .collect();
        self.with_relations(extra)
    }

    /// Free rank and torsion of `F_d / R_d` over the integers; every relation must be integral.
    pub fn integral_graded(&self, d: usize) -> Result<(usize, Vec<BigInt>)> {
        if d > self.top {
            return Ok((0, vec![]));
        }
        let cols = self.bases[d].len();
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for rel in &self.relations {
            if rel.degree > d {
                continue;
            }
            for mono in &self.bases[d - rel.degree] {
                let p = self.mul_free(&rel.poly, &single(mono.clone()));
                let mut row = vec![BigInt::zero(); cols];
                for (m, c) in &p {
                    if !c.is_integer() {
                        return Err(Error::Precondition("relation with non-integral coefficient".into()));
                    }
                    row[self.index[d][m]] = c.to_integer();
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
        rows.sort();
        rows.dedup();
        if rows.is_empty() {
            return Ok((cols, vec![]));
        }
        let m = IntMatrix::from_rows(cols, &rows)?;
        let dec = snf(&m);
        let torsion = dec.diag.iter().filter(|x| !x.is_one()).cloned().collect();
        Ok((cols - dec.rank(), torsion))
    }
}

pub fn single(m: Monomial) -> FreeElement {
    let mut p = FreeElement::new();
    p.insert(m, Rat::one());
    p
}
