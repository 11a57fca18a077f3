use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cohom::{single, CohomElement, GradedAlgebraQ};
use crate::error::{Error, Result};
use crate::exactlin::{qkernel, rref, Lattice, QMatrix, Rat, SparseEchelon};
use crate::polyring::{
    buchberger, primitive_integer_vector, projective_dim_degree, projective_rational_points, IdealQ, MultiPolyQ,
    TermOrder,
};

use super::plane::{pair_indices, plane_from_plucker, plucker_variables, Plane, PluckerPoint};

/// An ordered basis of the degree-one part of an algebra, fixing the
/// coordinates used for planes and Plücker points.
#[derive(Clone, Debug)]
pub struct DegreeOneBasis {
    classes: Vec<CohomElement>,
}

impl DegreeOneBasis {
    pub fn new(alg: &GradedAlgebraQ, classes: Vec<CohomElement>) -> Result<Self> {
        if classes.iter().any(|c| c.degree != 1) {
            return Err(Error::Precondition("basis classes must have degree one".into()));
        }
        let dim = alg.graded_dimension(1);
        if classes.len() != dim {
            return Err(Error::Dimension(format!("{} classes for a degree-one part of dimension {dim}", classes.len())));
        }
        let mut span = SparseEchelon::new();
        for c in &classes {
            if !span.insert(&c.coords) {
                return Err(Error::Precondition("basis classes are dependent".into()));
            }
        }
        Ok(DegreeOneBasis { classes })
    }

    /// The standard monomials of degree one.
    pub fn standard(alg: &GradedAlgebraQ) -> Result<Self> {
        let classes = alg
            .standard_monomials(1)
            .into_iter()
            .map(|m| alg.element(1, &single(m)))
            .collect::<Result<Vec<_>>>()?;
        DegreeOneBasis::new(alg, classes)
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[CohomElement] {
        &self.classes
    }

    pub fn element(&self, alg: &GradedAlgebraQ, coords: &[Rat]) -> Result<CohomElement> {
        if coords.len() != self.len() {
            return Err(Error::Dimension(format!("{} coordinates for a basis of size {}", coords.len(), self.len())));
        }
        let terms: Vec<(Rat, &CohomElement)> = coords.iter().cloned().zip(&self.classes).collect();
        if terms.is_empty() {
            return Ok(CohomElement { degree: 1, coords: Default::default() });
        }
        alg.combine_rational(&terms)
    }

    pub fn coordinates(&self, x: &CohomElement) -> Result<Vec<Rat>> {
        if x.degree != 1 {
            return Err(Error::Precondition("expected a degree-one class".into()));
        }
        let keys: BTreeSet<usize> =
            self.classes.iter().flat_map(|c| c.coords.keys()).chain(x.coords.keys()).copied().collect();
        let k = self.len();
        let mut m: QMatrix = keys
            .iter()
            .map(|key| {
                let mut row: Vec<Rat> =
                    self.classes.iter().map(|c| c.coords.get(key).cloned().unwrap_or_else(Rat::zero)).collect();
                row.push(x.coords.get(key).cloned().unwrap_or_else(Rat::zero));
                row
            })
            .collect();
        let pivots = rref(&mut m);
        if pivots.contains(&k) {
            return Err(Error::Precondition("class is not in the span of the basis".into()));
        }
        let mut out = vec![Rat::zero(); k];
        for (r, &p) in pivots.iter().enumerate() {
            out[p] = m[r][k].clone();
        }
        Ok(out)
    }
}

/// Dimension of the kernel of multiplication by `alpha` from degree one to degree two.
pub fn delta_kernel_dim(alg: &GradedAlgebraQ, alpha: &CohomElement) -> Result<usize> {
    if alpha.degree != 1 {
        return Err(Error::Precondition(format!("expected a degree-one class, got degree {}", alpha.degree)));
    }
    let basis = DegreeOneBasis::standard(alg)?;
    let mut image = SparseEchelon::new();
    for b in basis.classes() {
        image.insert(&alg.multiply(alpha, b).coords);
    }
    Ok(basis.len() - image.rank())
}

/// Membership in the first resonance variety.
pub fn in_r1(alg: &GradedAlgebraQ, alpha: &CohomElement) -> Result<bool> {
    let k = delta_kernel_dim(alg, alpha)?;
    Ok(alpha.is_zero() || k >= 2)
}

/// Basis of the kernel of the multiplication `Λ²A¹ → A²`, in lexicographic
/// pair coordinates of the given basis.
pub fn wedge_kernel(alg: &GradedAlgebraQ, basis: &DegreeOneBasis) -> Vec<Vec<Rat>> {
    let pairs = pair_indices(basis.len());
    let products: Vec<CohomElement> =
        pairs.iter().map(|&(i, j)| alg.multiply(&basis.classes()[i], &basis.classes()[j])).collect();
    let keys: BTreeSet<usize> = products.iter().flat_map(|p| p.coords.keys()).copied().collect();
    let m: QMatrix = keys
        .iter()
        .map(|k| products.iter().map(|p| p.coords.get(k).cloned().unwrap_or_else(Rat::zero)).collect())
        .collect();
    let mut kernel = qkernel(&m, pairs.len());
    rref(&mut kernel);
    kernel
}

/// The quadrics `x_ij x_kl − x_ik x_jl + x_il x_jk` cutting out the Grassmannian of planes in `Q^m`.
pub fn grassmann_pfaffian_ideal(m: usize) -> Result<IdealQ> {
    let vars = plucker_variables(m);
    let pairs = pair_indices(m);
    let var = |i: usize, j: usize| {
        let idx = pairs.iter().position(|&p| p == (i, j)).expect("pair");
        MultiPolyQ::var(vars.clone(), idx)
    };
    let mut gens = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                for l in k + 1..m {
                    let q = var(i, j)
                        .mul(&var(k, l))?
                        .sub(&var(i, k).mul(&var(j, l))?)?
                        .add(&var(i, l).mul(&var(j, k))?)?;
                    gens.push(q);
                }
            }
        }
    }
    IdealQ::new(vars, gens, TermOrder::GrevLex)
}

/// Linear forms in Plücker coordinates vanishing on the span of `k`.
pub fn linear_ideal_of_subspace(m: usize, k: &[Vec<Rat>]) -> Result<IdealQ> {
    let n = m * m.saturating_sub(1) / 2;
    if k.iter().any(|v| v.len() != n) {
        return Err(Error::Dimension(format!("subspace vectors must have {n} coordinates")));
    }
    let mut forms = qkernel(&k.to_vec(), n);
    rref(&mut forms);
    let vars = plucker_variables(m);
    let gens = forms
        .iter()
        .map(|f| {
            let ints: Vec<Rat> = primitive_integer_vector(f)
                .expect("nonzero form")
                .into_iter()
                .map(Rat::from_integer)
                .collect();
            MultiPolyQ::linear(vars.clone(), &ints)
        })
        .collect();
    IdealQ::new(vars, gens, TermOrder::GrevLex)
}

/// Intermediate data of the resonance computation.
#[derive(Clone, Debug)]
pub struct ResonanceAnalysis {
    /// Kernel of `Λ²A¹ → A²` in Plücker coordinates.
    pub kernel: Vec<Vec<Rat>>,
    pub linear_ideal: IdealQ,
    pub projective_dim: i64,
    pub degree: u64,
    pub points: Vec<PluckerPoint>,
    pub planes: Vec<Plane>,
}

/// Intersects the projectivized wedge kernel with the Grassmannian, solves
/// for its rational points exactly and certifies that their number equals the
/// degree of the intersection scheme.
pub fn analyze_resonance(alg: &GradedAlgebraQ, basis: &DegreeOneBasis) -> Result<ResonanceAnalysis> {
    let m = basis.len();
    let kernel = wedge_kernel(alg, basis);
    let linear_ideal = linear_ideal_of_subspace(m, &kernel)?;
    let pfaffians = grassmann_pfaffian_ideal(m)?;
    let vars = plucker_variables(m);
    let mut gens = linear_ideal.gens.clone();
    gens.extend(pfaffians.gens);
    let g = buchberger(&vars, &gens, TermOrder::GrevLex)?;
    let (projective_dim, degree) = projective_dim_degree(&g)?;
    if projective_dim > 0 {
        return Err(Error::PositiveDimensional(projective_dim));
    }
    let points: Vec<PluckerPoint> = if projective_dim < 0 {
        Vec::new()
    } else {
        projective_rational_points(&vars, g.polys())?
            .into_iter()
            .map(|p| PluckerPoint::new(m, p))
            .collect::<Result<_>>()?
    };
    if points.len() as u64 != degree {
        return Err(Error::UnresolvedPoints { found: points.len(), degree: degree as usize });
    }
    let planes = points.iter().map(plane_from_plucker).collect::<Result<Vec<_>>>()?;
    Ok(ResonanceAnalysis { kernel, linear_ideal, projective_dim, degree, points, planes })
}

/// The planes making up the first resonance variety.
pub fn resonance_components(alg: &GradedAlgebraQ, basis: &DegreeOneBasis) -> Result<Vec<Plane>> {
    Ok(analyze_resonance(alg, basis)?.planes)
}

/// Rows of the inverse of a square rational matrix.
fn inverse(b: &[Vec<Rat>]) -> Result<QMatrix> {
    let m = b.len();
    let mut aug: QMatrix = b
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..m).map(|k| if k == i { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    if rref(&mut aug) != (0..m).collect::<Vec<_>>() {
        return Err(Error::Precondition("lattice basis is not of full rank".into()));
    }
    Ok(aug.into_iter().map(|r| r[m..].to_vec()).collect())
}

/// Saturated rank-two sublattices `P ∩ Λ` for each plane, where `Λ` is the
/// full-rank lattice spanned by the rows of `lattice_basis` (in basis
/// coordinates). Results are expressed in the coordinates of `Λ`.
pub fn resonance_lattices(planes: &[Plane], lattice_basis: &[Vec<Rat>]) -> Result<Vec<Lattice>> {
    let m = lattice_basis.len();
    if lattice_basis.iter().any(|r| r.len() != m) {
        return Err(Error::Dimension("lattice basis must be square".into()));
    }
    let inv = inverse(lattice_basis)?;
    planes
        .iter()
        .map(|p| {
            if p.ambient_dim() != m {
                return Err(Error::Dimension(format!("plane in Q^{} for a lattice of rank {m}", p.ambient_dim())));
            }
            let vectors: Vec<Vec<BigInt>> = p
                .basis()
                .iter()
                .map(|v| {
                    let c: Vec<Rat> =
                        (0..m).map(|k| (0..m).map(|a| &v[a] * &inv[a][k]).fold(Rat::zero(), |s, x| s + x)).collect();
                    primitive_integer_vector(&c).expect("nonzero vector")
                })
                .collect();
            Ok(Lattice::from_vectors(m, &vectors)?.saturation())
        })
        .collect()
}

/// Vectors of a lattice given in `Λ`-coordinates, mapped back to basis coordinates.
pub fn lattice_vectors_in_basis(lattice: &Lattice, lattice_basis: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    lattice
        .basis_vectors()
        .iter()
        .map(|c| {
            (0..lattice_basis.first().map_or(0, Vec::len))
                .map(|k| c.iter().zip(lattice_basis).fold(Rat::zero(), |s, (x, row)| s + Rat::from_integer(x.clone()) * &row[k]))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohom::{
        build_rational_presentation, build_unimodular_presentation, log_class, torus_coordinate_classes, GeneratorLabel,
    };
    use crate::named;

    fn q(x: i64) -> Rat {
        Rat::from_integer(x.into())
    }

    fn qv(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| q(x)).collect()
    }

    /// ω1, ω2, ω3, ψ1, ψ2 for the three lines.
    fn three_lines_basis(alg: &GradedAlgebraQ) -> DegreeOneBasis {
        let mut classes: Vec<CohomElement> =
            (0..3).map(|i| alg.generator(&GeneratorLabel::OmegaSmall(i)).unwrap()).collect();
        classes.extend((0..2).map(|i| alg.generator(&GeneratorLabel::Psi(i)).unwrap()));
        DegreeOneBasis::new(alg, classes).unwrap()
    }

    fn span_equal(a: &[MultiPolyQ], b: &[MultiPolyQ], n: usize) -> bool {
        let coeffs = |p: &MultiPolyQ| -> Vec<Rat> {
            (0..n)
                .map(|i| {
                    let mut e = vec![0u32; n];
                    e[i] = 1;
                    p.terms().get(&e).cloned().unwrap_or_else(Rat::zero)
                })
                .collect()
        };
        let rank = |ps: &[&MultiPolyQ]| crate::exactlin::qrank(&ps.iter().map(|p| coeffs(p)).collect());
        let ra = rank(&a.iter().collect::<Vec<_>>());
        let rb = rank(&b.iter().collect::<Vec<_>>());
        let rab = rank(&a.iter().chain(b).collect::<Vec<_>>());
        ra == rb && ra == rab
    }

    #[test]
    fn delta_kernels_on_three_lines() {
        let alg = build_unimodular_presentation(&named::three_lines()).unwrap();
        let basis = three_lines_basis(&alg);
        let w1 = basis.classes()[0].clone();
        assert!(delta_kernel_dim(&alg, &w1).unwrap() >= 2);
        assert!(in_r1(&alg, &w1).unwrap());
        let w12 = alg.combine(&[(1, &basis.classes()[0]), (1, &basis.classes()[1])]).unwrap();
        assert_eq!(delta_kernel_dim(&alg, &w12).unwrap(), 1);
        assert!(!in_r1(&alg, &w12).unwrap());
        let zero = basis.element(&alg, &qv(&[0, 0, 0, 0, 0])).unwrap();
        assert_eq!(delta_kernel_dim(&alg, &zero).unwrap(), 5);
        assert!(in_r1(&alg, &zero).unwrap());
        assert!(delta_kernel_dim(&alg, &alg.one()).is_err());
    }

    #[test]
    fn three_lines_linear_ideal() {
        let alg = build_unimodular_presentation(&named::three_lines()).unwrap();
        let basis = three_lines_basis(&alg);
        let k = wedge_kernel(&alg, &basis);
        assert_eq!(k.len(), 4);
        let ideal = linear_ideal_of_subspace(5, &k).unwrap();
        let vars = plucker_variables(5);
        let form = |terms: &[(usize, i64)]| {
            let mut c = vec![q(0); 10];
            for &(i, x) in terms {
                c[i] = q(x);
            }
            MultiPolyQ::linear(vars.clone(), &c)
        };
        // x15, x24, x45, x12+x13, x13+x23, x13-x34+x35
        let expected = vec![
            form(&[(3, 1)]),
            form(&[(5, 1)]),
            form(&[(9, 1)]),
            form(&[(0, 1), (1, 1)]),
            form(&[(1, 1), (4, 1)]),
            form(&[(1, 1), (7, -1), (8, 1)]),
        ];
        assert!(span_equal(&ideal.gens, &expected, 10));
    }

    #[test]
    fn pfaffian_ideals() {
        assert_eq!(grassmann_pfaffian_ideal(5).unwrap().gens.len(), 5);
        assert_eq!(grassmann_pfaffian_ideal(4).unwrap().gens.len(), 1);
        assert!(grassmann_pfaffian_ideal(3).unwrap().gens.is_empty());
        assert_eq!(linear_ideal_of_subspace(3, &[]).unwrap().gens.len(), 3);
        let all: Vec<Vec<Rat>> = (0..3).map(|i| (0..3).map(|j| q((i == j) as i64)).collect()).collect();
        assert!(linear_ideal_of_subspace(3, &all).unwrap().gens.is_empty());
    }

    #[test]
    fn three_lines_components() {
        let alg = build_unimodular_presentation(&named::three_lines()).unwrap();
        let basis = three_lines_basis(&alg);
        let res = analyze_resonance(&alg, &basis).unwrap();
        assert_eq!((res.projective_dim, res.degree), (0, 5));
        let p4 = PluckerPoint::from_integers(5, &[1, -1, 1, 0, 1, 0, 0, -1, 0, 0]).unwrap();
        assert!(res.points.contains(&p4));
        let expected = [
            Plane::from_integers(&[1, 0, 0, 0, 0], &[0, 0, 0, 1, 0]).unwrap(),
            Plane::from_integers(&[0, 1, 0, 0, 0], &[0, 0, 0, 0, 1]).unwrap(),
            Plane::from_integers(&[0, 0, 1, 0, 0], &[0, 0, 0, 1, 1]).unwrap(),
            Plane::from_integers(&[1, 0, -1, 0, 0], &[1, -1, 0, -1, 0]).unwrap(),
            Plane::from_integers(&[0, 1, -1, 0, 0], &[-1, 1, 0, 0, -1]).unwrap(),
        ];
        let got: BTreeSet<Plane> = res.planes.iter().cloned().collect();
        assert_eq!(got, expected.iter().cloned().collect());
        for p in &res.planes {
            let [u, v] = p.basis();
            let x = basis.element(&alg, u).unwrap();
            let y = basis.element(&alg, v).unwrap();
            assert!(alg.multiply(&x, &y).is_zero());
        }
    }

    fn quadruple_basis(alg: &GradedAlgebraQ, n: &crate::exactlin::IntMatrix) -> DegreeOneBasis {
        let mut classes: Vec<CohomElement> = (0..4).map(|i| log_class(alg, i).unwrap()).collect();
        classes.extend(torus_coordinate_classes(alg, n).unwrap());
        DegreeOneBasis::new(alg, classes).unwrap()
    }

    #[test]
    fn quadruple_components_follow_columns() {
        for n in [named::quadruple(), named::quadruple_prime()] {
            let alg = build_rational_presentation(&n).unwrap();
            let basis = quadruple_basis(&alg, &n);
            assert_eq!(wedge_kernel(&alg, &basis).len(), 4);
            let res = analyze_resonance(&alg, &basis).unwrap();
            assert_eq!((res.projective_dim, res.degree), (0, 4));
            // plane i is spanned by ω_i and ψ_i = Σ_k N_{ki} τ_k
            let expected: BTreeSet<Plane> = (0..4)
                .map(|i| {
                    let mut w = vec![0i64; 7];
                    w[i] = 1;
                    let mut psi = vec![0i64; 7];
                    for k in 0..3 {
                        psi[4 + k] = i64::try_from(n.row(k)[i].clone()).unwrap();
                    }
                    Plane::from_integers(&w, &psi).unwrap()
                })
                .collect();
            assert_eq!(res.planes.iter().cloned().collect::<BTreeSet<_>>(), expected);
        }
    }

    #[test]
    fn lattices_of_planes() {
        let p = Plane::from_integers(&[1, 0, 0], &[0, 2, 1]).unwrap();
        let std: Vec<Vec<Rat>> = (0..3).map(|i| (0..3).map(|j| q((i == j) as i64)).collect()).collect();
        let l = resonance_lattices(std::slice::from_ref(&p), &std).unwrap();
        assert_eq!(l[0].rank(), 2);
        let back = lattice_vectors_in_basis(&l[0], &std);
        assert_eq!(Plane::new(back[0].clone(), back[1].clone()).unwrap(), p);
        assert!(l[0].contains(&[BigInt::from(0), BigInt::from(2), BigInt::from(1)]).unwrap());
        assert!(!l[0].contains(&[BigInt::from(0), BigInt::from(1), BigInt::from(0)]).unwrap());
    }
}
