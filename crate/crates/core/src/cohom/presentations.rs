use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arithmat::{check_subset_guard, is_totally_unimodular, Subset, MAX_GROUND};
use crate::error::{Error, Result};
use crate::exactlin::{int_rank, right_kernel, IntMatrix, Rat};
use crate::layers::{components, leq, Layer};

use super::graded::{single, FreeElement, Generator, GradedAlgebraQ, DEFAULT_GENERATOR_LIMIT};
use super::labels::{GeneratorLabel, Relation, RelationFamily};

fn members(s: Subset) -> Vec<usize> {
    (0..64).filter(|i| s >> i & 1 == 1).collect()
}

fn subset_rank(n: &IntMatrix, s: Subset) -> usize {
    int_rank(&n.select_mask(s))
}

/// A set of columns with a primitive integer dependency among them (first
/// nonzero coefficient positive), coefficients listed in column order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    pub subset: Subset,
    pub coefficients: Vec<BigInt>,
}

pub fn circuits(n: &IntMatrix) -> Result<Vec<Circuit>> {
    Ok(nullity_one_sets(n)?.into_iter().filter(|c| c.coefficients.iter().all(|x| !x.is_zero())).collect())
}

/// Subsets whose columns satisfy exactly one independent linear dependency,
/// with that dependency made primitive (zero coefficients allowed). Circuits
/// are the ones with full support.
pub fn nullity_one_sets(n: &IntMatrix) -> Result<Vec<Circuit>> {
    check_subset_guard(n.cols(), MAX_GROUND)?;
    let mut out = Vec::new();
    for s in 1..(1u64 << n.cols()) {
        let k = s.count_ones() as usize;
        if subset_rank(n, s) != k - 1 {
            continue;
        }
        let ker = right_kernel(&n.select_mask(s));
        let mut coeffs = ker.column(0);
        let g = coeffs.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        for c in coeffs.iter_mut() {
            *c /= &g;
        }
        if coeffs.iter().find(|c| !c.is_zero()).is_some_and(Signed::is_negative) {
            for c in coeffs.iter_mut() {
                *c = -c.clone();
            }
        }
        out.push(Circuit { subset: s, coefficients: coeffs });
    }
    Ok(out)
}

fn rat(x: i64) -> Rat {
    Rat::from_integer(x.into())
}

fn add_term(p: &mut FreeElement, other: &FreeElement, c: &Rat) {
    for (m, x) in other {
        let e = p.entry(m.clone()).or_insert_with(Rat::zero);
        *e += x * c;
        if e.is_zero() {
            p.remove(m);
        }
    }
}

fn linear(terms: &[(usize, i64)]) -> FreeElement {
    let mut p = FreeElement::new();
    for &(g, c) in terms {
        add_term(&mut p, &single(vec![g]), &rat(c));
    }
    p
}

fn push(rels: &mut Vec<Relation>, family: RelationFamily, support: Subset, degree: usize, poly: FreeElement) {
    if !poly.is_empty() {
        rels.push(Relation { family, support, degree, poly });
    }
}

/// One free degree-one class per torus direction outside the span of the characters.
fn complement_classes(n: &IntMatrix) -> Vec<Generator> {
    (0..n.rows() - int_rank(n)).map(|j| Generator { label: GeneratorLabel::Torus(j), degree: 1 }).collect()
}

/// Integral presentation of a totally unimodular arrangement by the degree
/// one classes `ω_i` (indices `0..n`) and `ψ_i` (indices `n..2n`).
pub fn build_unimodular_presentation(n: &IntMatrix) -> Result<GradedAlgebraQ> {
    if !is_totally_unimodular(n)? {
        return Err(Error::NotUnimodular);
    }
    let cols = n.cols();
    let omega = |i: usize| i;
    let psi = |i: usize| cols + i;
    let mut generators: Vec<Generator> =
        (0..cols).map(|i| Generator { label: GeneratorLabel::OmegaSmall(i), degree: 1 }).collect();
    generators.extend((0..cols).map(|i| Generator { label: GeneratorLabel::Psi(i), degree: 1 }));
    generators.extend(complement_classes(n));
    let shell = GradedAlgebraQ::new(generators.clone(), vec![], 0, usize::MAX)?;

    let mut rels = Vec::new();
    for i in 0..cols {
        push(&mut rels, RelationFamily::LogTimesTorus, 1 << i, 2, shell.word(&[omega(i), psi(i)]));
    }
    for circuit in circuits(n)? {
        if circuit.coefficients.iter().any(|c| c.abs() != BigInt::one()) {
            return Err(Error::NotUnimodular);
        }
        let idx = members(circuit.subset);
        for flip in [1i64, -1] {
            let c: Vec<i64> = circuit.coefficients.iter().map(|x| if x.is_positive() { flip } else { -flip }).collect();
            let dep: Vec<(usize, i64)> = idx.iter().zip(&c).map(|(&i, &s)| (psi(i), s)).collect();
            push(&mut rels, RelationFamily::SignedDependency, circuit.subset, 1, linear(&dep));
            // ω'_i = ω_i, or ω_i - ψ_i when c_i = -1; factor j is ω'_j - ω'_{j-1} + c_{j-1} ψ_{j-1}
            let shifted = |j: usize| -> Vec<(usize, i64)> {
                if c[j] == 1 {
                    vec![(omega(idx[j]), 1)]
                } else {
                    vec![(omega(idx[j]), 1), (psi(idx[j]), -1)]
                }
            };
            let mut product = single(vec![]);
            for j in 1..idx.len() {
                let mut factor = linear(&shifted(j));
                let prev: Vec<(usize, i64)> = shifted(j - 1).into_iter().map(|(g, x)| (g, -x)).collect();
                add_term(&mut factor, &linear(&prev), &Rat::one());
                add_term(&mut factor, &linear(&[(psi(idx[j - 1]), c[j - 1])]), &Rat::one());
                product = shell.mul_free(&product, &factor);
            }
            push(&mut rels, RelationFamily::SignedProduct, circuit.subset, idx.len() - 1, product);
        }
    }
    GradedAlgebraQ::new(generators, rels, n.rows(), DEFAULT_GENERATOR_LIMIT)
}

/// Parity (0 or 1) of the permutation sorting the concatenation of `s` and `t`.
pub fn merge_parity(s: Subset, t: Subset) -> usize {
    let mut inversions = 0;
    for a in members(s) {
        for b in members(t) {
            if b < a {
                inversions += 1;
            }
        }
    }
    inversions % 2
}

pub fn build_rational_presentation(n: &IntMatrix) -> Result<GradedAlgebraQ> {
    build_rational_presentation_with_limit(n, DEFAULT_GENERATOR_LIMIT)
}

/// Rational presentation of a central arrangement by the torus classes `ψ_i`
/// and the forms `ω̄_{W,S}` for independent `S` and components `W` of the
/// intersection over `S`.
pub fn build_rational_presentation_with_limit(n: &IntMatrix, limit: usize) -> Result<GradedAlgebraQ> {
    let cols = n.cols();
    check_subset_guard(cols, MAX_GROUND)?;
    let r = n.rows();
    let columns = n.column_vectors();
    let chars = |s: Subset| -> Vec<Vec<BigInt>> { members(s).iter().map(|&i| columns[i].clone()).collect() };

    // components of every subset intersection, needed for multiplicities
    let mut comps: Vec<Vec<Layer>> = Vec::with_capacity(1 << cols);
    let mut bar_count = 0usize;
    for s in 0..(1u64 << cols) {
        let c = components(r, &chars(s))?;
        if s != 0 && subset_rank(n, s) == s.count_ones() as usize {
            bar_count += c.len();
            if bar_count + cols > limit {
                return Err(Error::GeneratorGuard { count: bar_count + cols, limit });
            }
        }
        comps.push(c);
    }
    let independent: Vec<Subset> =
        (1..(1u64 << cols)).filter(|&s| subset_rank(n, s) == s.count_ones() as usize).collect();

    let mut bars: Vec<(usize, Subset, Layer)> = Vec::new();
    for &s in &independent {
        for w in &comps[s as usize] {
            bars.push((s.count_ones() as usize, s, w.clone()));
        }
    }
    bars.sort();
    let mut generators: Vec<Generator> = Vec::new();
    for (d, s, w) in bars.iter().filter(|b| b.0 == 1) {
        generators.push(Generator { label: GeneratorLabel::OmegaBar { layer: w.clone(), subset: *s }, degree: *d });
    }
    let psi_start = generators.len();
    generators.extend((0..cols).map(|i| Generator { label: GeneratorLabel::Psi(i), degree: 1 }));
    generators.extend(complement_classes(n));
    for (d, s, w) in bars.iter().filter(|b| b.0 > 1) {
        generators.push(Generator { label: GeneratorLabel::OmegaBar { layer: w.clone(), subset: *s }, degree: *d });
    }
    let psi = |i: usize| psi_start + i;
    let shell = GradedAlgebraQ::new(generators.clone(), vec![], 0, usize::MAX)?;
    let bar_index = |w: &Layer, s: Subset| -> usize {
        shell
            .generator_index(&GeneratorLabel::OmegaBar { layer: w.clone(), subset: s })
            .expect("bar generator exists")
    };
    // ω̄_{W,∅} is the unit
    let bar_word = |w: &Layer, s: Subset| -> Vec<usize> { if s == 0 { vec![] } else { vec![bar_index(w, s)] } };

    let mut rels = Vec::new();
    let bar_gens: Vec<(usize, Subset, Layer)> = generators
        .iter()
        .enumerate()
        .filter_map(|(g, gen)| match &gen.label {
            GeneratorLabel::OmegaBar { layer, subset } => Some((g, *subset, layer.clone())),
            _ => None,
        })
        .collect();

    for (g, s, _) in &bar_gens {
        for i in members(*s) {
            push(&mut rels, RelationFamily::BarTimesTorus, *s, s.count_ones() as usize + 1, shell.word(&[*g, psi(i)]));
        }
    }

    for (a, (g, s, w)) in bar_gens.iter().enumerate() {
        for (h, t, v) in &bar_gens[a..] {
            let degree = (s.count_ones() + t.count_ones()) as usize;
            if degree > r {
                continue;
            }
            let mut rel = shell.word(&[*g, *h]);
            let meet = w.intersect(v)?;
            let generic = s & t == 0 && meet.first().is_some_and(|u| u.rank() == w.rank() + v.rank());
            if generic {
                let sign = if merge_parity(*s, *t) == 1 { Rat::one() } else { -Rat::one() };
                for u in &meet {
                    add_term(&mut rel, &single(vec![bar_index(u, s | t)]), &sign);
                }
            }
            push(&mut rels, RelationFamily::BarProduct, s | t, degree, rel);
        }
    }

    let independent_set = |s: Subset| subset_rank(n, s) == s.count_ones() as usize;
    for dep in nullity_one_sets(n)? {
        let idx = members(dep.subset);
        let k = &dep.coefficients;
        let full_support = k.iter().all(|x| !x.is_zero());
        if full_support {
            let terms: Vec<(usize, i64)> = idx
                .iter()
                .zip(k)
                .map(|(&i, c)| (psi(i), i64::try_from(c.clone()).expect("small dependency coefficient")))
                .collect();
            push(&mut rels, RelationFamily::Dependency, dep.subset, 1, linear(&terms));
        }

        let degree = idx.len() - 1;
        if degree > r {
            continue;
        }
        let sign_of = |j: usize| -> i64 {
            let p = idx.iter().position(|&x| x == j).expect("member");
            match k[p].sign() {
                num_bigint::Sign::Minus => -1,
                num_bigint::Sign::NoSign => 0,
                num_bigint::Sign::Plus => 1,
            }
        };
        for l in &comps[dep.subset as usize] {
            let mut rel = FreeElement::new();
            for &i in &idx {
                let rest = dep.subset & !(1 << i);
                let m_rest = comps[rest as usize].len() as i64;
                // S ⊔ T = rest with |T| even
                let mut t = rest;
                loop {
                    let s = rest & !t;
                    let c_t: i64 = members(t).iter().map(|&j| sign_of(j)).product();
                    if t.count_ones() % 2 == 0 && c_t != 0 && independent_set(s) {
                        let w = comps[s as usize]
                            .iter()
                            .find(|w| leq(w, l).unwrap_or(false))
                            .expect("some component contains the layer");
                        let preceding = members(s).iter().filter(|&&j| j < i).count();
                        let sign = if (preceding + merge_parity(s, t)).is_multiple_of(2) { 1 } else { -1 };
                        let coeff = Rat::new(BigInt::from(sign * c_t * comps[s as usize].len() as i64), BigInt::from(m_rest));
                        let mut word = bar_word(w, s);
                        word.extend(members(t).iter().map(|&j| psi(j)));
                        add_term(&mut rel, &shell.word(&word), &coeff);
                    }
                    if t == 0 {
                        break;
                    }
                    t = (t - 1) & rest;
                }
            }
            push(&mut rels, RelationFamily::CircuitComponent, dep.subset, degree, rel);
        }
    }
    GradedAlgebraQ::new(generators, rels, r, limit)
}
