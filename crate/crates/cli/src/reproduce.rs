//! The reproduction harness: every headline value recomputed and compared with its golden value.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use toric_core::arithmat::{arithmetic_tutte, equals, from_matrix, poincare_polynomial, zmatroid_equals, zmatroid_from_matrix};
use toric_core::cohom::{
    build_rational_presentation, build_rational_presentation_with_limit, build_unimodular_presentation, log_class,
    torus_coordinate_classes, CohomElement, GeneratorLabel, GradedAlgebraQ,
};
use toric_core::covering::{
    build_h1_lattice, c_values, pair_sum_in_nl, torus_lattice, torus_line_generators, verify_non_isomorphism,
    CoveringSpec, Verdict,
};
use toric_core::exactlin::{hnf, snf, IntMatrix, Lattice, Rat};
use toric_core::layers::{
    commuting_iso_exists, component_group, enumerate_layers, is_isomorphic, projection_kernel, property_p,
};
use toric_core::named;
use toric_core::resonance::{analyze_resonance, plucker_variables, wedge_kernel, DegreeOneBasis, Plane, PluckerPoint};
use toric_core::Error;

use crate::report::Report;

type Check = Result<(), String>;

macro_rules! check {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// Expected values; `corrupt` replaces one of them to exercise the failure path.
struct Golden {
    /// `(arrangement, [(x power, y power, coefficient)])`
    tutte: Vec<(&'static str, Vec<(u32, u32, i64)>)>,
    poincare: Vec<(&'static str, Vec<i64>)>,
}

impl Golden {
    fn new(corrupt: bool) -> Self {
        let big_const = if corrupt { 49 } else { 48 };
        Golden {
            tutte: vec![
                ("@A", vec![(2, 0, 1), (1, 0, 1), (0, 1, 1)]),
                ("@A(7,1)", vec![(2, 0, 1), (1, 0, 1), (0, 1, 7), (0, 0, 12)]),
                ("@A(7,2)", vec![(2, 0, 1), (1, 0, 1), (0, 1, 7), (0, 0, 12)]),
                ("@N", vec![(3, 0, 1), (2, 0, 1), (1, 0, 25), (0, 1, 25), (0, 0, big_const)]),
                ("@Nprime", vec![(3, 0, 1), (2, 0, 1), (1, 0, 25), (0, 1, 25), (0, 0, 48)]),
                ("@Nsecond", vec![(3, 0, 1), (2, 0, 1), (1, 0, 1), (0, 1, 1)]),
            ],
            poincare: vec![
                ("@A", vec![1, 5, 6]),
                ("@A(7,1)", vec![1, 5, 18]),
                ("@A(7,2)", vec![1, 5, 18]),
                ("@N", vec![1, 7, 41, 110]),
                ("@Nprime", vec![1, 7, 41, 110]),
                ("@Nsecond", vec![1, 7, 17, 14]),
            ],
        }
    }
}

fn arrangement(name: &str) -> IntMatrix {
    crate::input::named_matrix(name.trim_start_matches('@')).expect("built-in name")
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| x.into()).collect()
}

fn rat(x: i64) -> Rat {
    Rat::from_integer(x.into())
}

fn poincare_coeffs(m: &IntMatrix) -> Vec<BigInt> {
    let p = poincare_polynomial(&from_matrix(m).unwrap(), m.rows() as u32).unwrap();
    (0..=m.rows()).map(|k| p.coeff(k)).collect()
}

fn tutte(g: &Golden) -> Check {
    for (name, terms) in &g.tutte {
        let t = arithmetic_tutte(&from_matrix(&arrangement(name)).unwrap());
        let got: BTreeSet<(u32, u32, BigInt)> = t.terms().iter().map(|(&(i, j), c)| (i, j, c.clone())).collect();
        let want: BTreeSet<(u32, u32, BigInt)> = terms.iter().map(|&(i, j, c)| (i, j, c.into())).collect();
        check!(got == want, "{name}: computed {t}");
    }
    Ok(())
}

fn poincare(g: &Golden) -> Check {
    for (name, coeffs) in &g.poincare {
        let got = poincare_coeffs(&arrangement(name));
        check!(got == ints(coeffs), "{name}: computed {got:?}");
    }
    Ok(())
}

fn tables() -> Check {
    let (n, np) = (named::quadruple(), named::quadruple_prime());
    let (a, ap) = (from_matrix(&n).unwrap(), from_matrix(&np).unwrap());
    let (z, zp) = (zmatroid_from_matrix(&n).unwrap(), zmatroid_from_matrix(&np).unwrap());
    check!(equals(&a, &ap).unwrap() && zmatroid_equals(&z, &zp).unwrap(), "the tables of N and N' differ");
    for s in 0u64..16 {
        let k = s.count_ones();
        let m = [1, 1, 5, 25, 25][k as usize];
        let torsion: &[i64] = [&[][..], &[], &[5], &[5, 5], &[5, 5]][k as usize];
        check!(a.rank(s) == k.min(3) && *a.multiplicity(s) == BigInt::from(m), "subset {s:04b}");
        let module = z.module(s);
        check!(module.free_rank == 3 - k.min(3) as usize && module.torsion == ints(torsion), "module of {s:04b}");
    }
    Ok(())
}

fn layers() -> Check {
    let a1 = enumerate_layers(&named::three_lines_twisted(7, 1)).unwrap();
    let a2 = enumerate_layers(&named::three_lines_twisted(7, 2)).unwrap();
    check!(a1.rank_profile() == [1, 3, 7] && a2.rank_profile() == [1, 3, 7], "profiles of the coverings");
    check!(is_isomorphic(&a1, &a2).is_some(), "posets of the coverings not isomorphic");
    let s = enumerate_layers(&named::quadruple()).unwrap();
    let sp = enumerate_layers(&named::quadruple_prime()).unwrap();
    check!(s.rank_profile() == [1, 4, 30, 25] && sp.rank_profile() == [1, 4, 30, 25], "profiles of N, N'");
    check!(is_isomorphic(&s, &sp).is_none(), "posets of N and N' isomorphic");
    check!(property_p(&s).unwrap().is_some(), "property (P) fails for N");
    if let Some(((i, j), (k, l))) = property_p(&sp).unwrap() {
        return Err(format!("property (P) holds for N' with split {{{},{}}} | {{{},{}}}", i + 1, j + 1, k + 1, l + 1));
    }
    let atom = |i| sp.atom(i).unwrap();
    for &x in &sp.min_upper_bounds(atom(0), atom(1)) {
        let mu = sp.layer(x).character_at(&ints(&[0, 1, 0])).unwrap();
        for &y in &sp.min_upper_bounds(atom(2), atom(3)) {
            let zeta = sp.layer(y).character_at(&ints(&[0, 1, -5])).unwrap();
            let size = sp.min_upper_bounds(x, y).len();
            check!(size == if mu == zeta { 5 } else { 0 }, "join of a_{mu} and b_{zeta} has {size} elements");
        }
    }
    Ok(())
}

fn betti() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut suite: Vec<IntMatrix> = ["@A", "@A(7,1)", "@A(7,2)", "@N", "@Nprime", "@Nsecond"].iter().map(|n| arrangement(n)).collect();
    let mut drawn = 0;
    while drawn < 25 {
        let r = rng.gen_range(1..=3);
        let n = rng.gen_range(0..=5);
        let rows: Vec<Vec<i64>> = (0..r).map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        let m = IntMatrix::from_rows(n, &rows).unwrap();
        if matches!(build_rational_presentation_with_limit(&m, 1000), Err(Error::GeneratorGuard { .. })) {
            continue;
        }
        suite.push(m);
        drawn += 1;
    }
    for m in &suite {
        let alg = build_rational_presentation_with_limit(m, 1000).map_err(|e| e.to_string())?;
        let dims: Vec<BigInt> = alg.graded_dimensions().into_iter().map(BigInt::from).collect();
        check!(dims == poincare_coeffs(m), "{m:?}: dimensions {dims:?}");
    }
    Ok(())
}

struct ThreeLines {
    alg: GradedAlgebraQ,
    w: Vec<CohomElement>,
    p: Vec<CohomElement>,
}

impl ThreeLines {
    fn new() -> Self {
        let alg = build_unimodular_presentation(&named::three_lines()).unwrap();
        let w = (0..3).map(|i| alg.generator(&GeneratorLabel::OmegaSmall(i)).unwrap()).collect();
        let p = (0..2).map(|i| alg.generator(&GeneratorLabel::Psi(i)).unwrap()).collect();
        ThreeLines { alg, w, p }
    }

    /// `Σ c·x·y` over the given products.
    fn quadric(&self, terms: &[(i64, &CohomElement, &CohomElement)]) -> CohomElement {
        let products: Vec<CohomElement> = terms.iter().map(|(_, x, y)| self.alg.multiply(x, y)).collect();
        let refs: Vec<(i64, &CohomElement)> = terms.iter().zip(&products).map(|((c, _, _), p)| (*c, p)).collect();
        self.alg.combine(&refs).unwrap()
    }
}

fn relations() -> Check {
    let t = ThreeLines::new();
    let (w, p) = (&t.w, &t.p);
    let vanishing = [
        ("w1w2 - w1w3 + w2w3 - w3p1", t.quadric(&[(1, &w[0], &w[1]), (-1, &w[0], &w[2]), (1, &w[1], &w[2]), (-1, &w[2], &p[0])])),
        ("w1p1", t.quadric(&[(1, &w[0], &p[0])])),
        ("w2p2", t.quadric(&[(1, &w[1], &p[1])])),
        ("w3p1 + w3p2", t.quadric(&[(1, &w[2], &p[0]), (1, &w[2], &p[1])])),
        // (w1 - w3)(w1 - w2 - p1), expanded with w1² = 0
        ("(w1-w3)(w1-w2-p1)", t.quadric(&[(-1, &w[0], &w[1]), (-1, &w[0], &p[0]), (-1, &w[2], &w[0]), (1, &w[2], &w[1]), (1, &w[2], &p[0])])),
        ("(w2-w3)(w1-w2+p2)", t.quadric(&[(1, &w[1], &w[0]), (1, &w[1], &p[1]), (-1, &w[2], &w[0]), (1, &w[2], &w[1]), (-1, &w[2], &p[1])])),
    ];
    for (name, x) in &vanishing {
        check!(x.is_zero(), "{name} is not zero");
    }
    Ok(())
}

fn resonance_of_a() -> Check {
    let t = ThreeLines::new();
    let classes = vec![t.w[0].clone(), t.w[1].clone(), t.w[2].clone(), t.p[0].clone(), t.p[1].clone()];
    let basis = DegreeOneBasis::new(&t.alg, classes).map_err(|e| e.to_string())?;
    let kernel = wedge_kernel(&t.alg, &basis);
    check!(kernel.len() == 4, "kernel dimension {}", kernel.len());
    // the printed linear forms cut out exactly the kernel: they vanish on it and are 6 = 10 - 4 independent forms
    let vars = plucker_variables(5);
    let form = |terms: &[(&str, i64)]| {
        let mut f = vec![rat(0); 10];
        for &(v, c) in terms {
            f[vars.iter().position(|x| x == v).unwrap()] = rat(c);
        }
        f
    };
    let forms = vec![
        form(&[("x15", 1)]),
        form(&[("x24", 1)]),
        form(&[("x45", 1)]),
        form(&[("x12", 1), ("x13", 1)]),
        form(&[("x13", 1), ("x23", 1)]),
        form(&[("x13", 1), ("x34", -1), ("x35", 1)]),
    ];
    for f in &forms {
        for k in &kernel {
            let value: Rat = f.iter().zip(k).map(|(a, b)| a * b).sum();
            check!(value.is_zero(), "a printed linear form does not vanish on the kernel");
        }
    }
    check!(toric_core::exactlin::qrank(&forms) == 6, "printed linear forms are dependent");
    let r = analyze_resonance(&t.alg, &basis).map_err(|e| e.to_string())?;
    check!(r.projective_dim == 0 && r.degree == 5, "dimension {} degree {}", r.projective_dim, r.degree);
    let want: BTreeSet<PluckerPoint> = [
        [0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 1, 1, 0],
        [1, -1, 1, 0, 1, 0, 0, -1, 0, 0],
        [1, -1, 0, 0, 1, 0, -1, 0, 1, 0],
    ]
    .iter()
    .map(|c| PluckerPoint::from_integers(5, c).unwrap())
    .collect();
    let got: BTreeSet<PluckerPoint> = r.points.iter().cloned().collect();
    check!(got == want, "points {:?}", got.iter().map(ToString::to_string).collect::<Vec<_>>());
    Ok(())
}

fn resonance_of_quadruples() -> Check {
    let mut errors = Vec::new();
    let printed: [(&str, [[i64; 3]; 4]); 2] = [
        ("@N", [[1, 0, 0], [4, 5, 0], [1, 0, 5], [3, 5, 5]]),
        ("@Nprime", [[1, 0, 0], [1, 5, 0], [1, 0, 5], [6, 5, 5]]),
    ];
    for (name, torus_parts) in printed {
        let m = arrangement(name);
        let alg = build_rational_presentation(&m).unwrap();
        let mut classes: Vec<CohomElement> = (0..4).map(|i| log_class(&alg, i).unwrap()).collect();
        classes.extend(torus_coordinate_classes(&alg, &m).unwrap());
        let basis = DegreeOneBasis::new(&alg, classes).map_err(|e| e.to_string())?;
        let planes = analyze_resonance(&alg, &basis).map_err(|e| e.to_string())?.planes;
        check!(planes.len() == 4, "{name}: {} planes", planes.len());
        for (i, t) in torus_parts.iter().enumerate() {
            let mut u = [0i64; 7];
            u[i] = 1;
            let v = [0, 0, 0, 0, t[0], t[1], t[2]];
            let q = Plane::from_integers(&u, &v).unwrap();
            if !planes.contains(&q) {
                errors.push(format!("{name}: printed plane {} = {q} is not a component", i + 1));
            }
        }
    }
    if errors.is_empty() {
        Ok(())
    } else {
        Err(errors.join("; "))
    }
}

fn integral_lattices() -> Check {
    let n = 7;
    for a in [1, 2] {
        let h = build_h1_lattice(&CoveringSpec::new(n, a).unwrap()).map_err(|e| e.to_string())?;
        let closed = [
            [[1, 0, 0, 0, 0], [0, 0, 0, 1, 0]],
            [[0, 1, 0, 0, 0], [0, 0, 0, a, n]],
            [[0, 0, 1, 0, 0], [0, 0, 0, a + 1, n]],
            [[1, 0, -1, 0, 0], [-1, 1, 0, 1, 0]],
            [[0, 1, -1, 0, 0], [1, -1, 0, a, n]],
        ];
        check!(h.components().len() == 5, "a = {a}: {} components", h.components().len());
        for (i, (got, [u, v])) in h.components().iter().zip(closed).enumerate() {
            let want = Lattice::from_vectors(5, &[ints(&u), ints(&v)]).unwrap();
            check!(*got == want, "a = {a}: component {} differs", i + 1);
        }
    }
    Ok(())
}

fn c_table() -> Check {
    let sevens: BTreeSet<(usize, usize)> = [(0, 1), (0, 2), (1, 2), (3, 4)].into();
    for a in [1, 2] {
        let h = build_h1_lattice(&CoveringSpec::new(7, a).unwrap()).unwrap();
        let cs = c_values(&h).unwrap();
        check!(cs.len() == 10, "a = {a}: {} pairs", cs.len());
        for ((i, j), c) in cs {
            let want = if sevens.contains(&(i, j)) { 7 } else { 1 };
            check!(c == BigInt::from(want), "a = {a}: c({},{}) = {c}", i + 1, j + 1);
        }
    }
    Ok(())
}

fn obstruction() -> Check {
    for (n, a, want) in [(7, 1, true), (7, 2, false), (5, 2, true)] {
        let h = build_h1_lattice(&CoveringSpec::new(n, a).unwrap()).unwrap();
        let l = torus_lattice(&h).unwrap();
        let got = pair_sum_in_nl(&torus_line_generators(&h, &l).unwrap(), &BigInt::from(n), &l).unwrap();
        check!(got == want, "({n},{a}): l1 + l2 in nL is {got}");
    }
    for (n, want) in [(7, Verdict::NonIsomorphic), (11, Verdict::NonIsomorphic), (13, Verdict::NonIsomorphic), (5, Verdict::Withheld)] {
        let v = verify_non_isomorphism(n).unwrap().verdict;
        check!(v == want, "n = {n}: {v:?}");
    }
    Ok(())
}

fn ranks() -> Check {
    for (name, want) in [("@N", 51), ("@Nprime", 43)] {
        let s = build_rational_presentation(&arrangement(name)).unwrap().quotient_by_torus_ideal().unwrap();
        let r = s.multiplication_rank(1, 2);
        check!(r == want, "{name}: {r}");
    }
    let r = ThreeLines::new().alg.multiplication_rank(1, 1);
    check!(r == 6, "@A: {r}");
    Ok(())
}

fn groups() -> Check {
    let factors = component_group(&named::quadruple(), 0b1111).unwrap().invariant_factors().to_vec();
    check!(factors == ints(&[5, 5]), "LG([4]) has invariant factors {factors:?}");
    let pairs = [0b0011u64, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100];
    for (name, want) in [("@N", vec![]), ("@Nprime", vec![(0b0011, 0b1100), (0b1001, 0b0110)])] {
        let m = arrangement(name);
        let mut coincide = BTreeSet::new();
        for (x, &s) in pairs.iter().enumerate() {
            for &t in &pairs[x + 1..] {
                let same = projection_kernel(&m, s).unwrap() == projection_kernel(&m, t).unwrap();
                check!(commuting_iso_exists(&m, s, t).unwrap() == same, "{name}: isomorphism test disagrees at {s:04b}, {t:04b}");
                if same {
                    coincide.insert((s.min(t), s.max(t)));
                }
            }
        }
        let want: BTreeSet<(u64, u64)> = want.into_iter().map(|(s, t): (u64, u64)| (s.min(t), s.max(t))).collect();
        check!(coincide == want, "{name}: coincidences {coincide:?}");
    }
    Ok(())
}

fn rational_invariants() -> Check {
    let x = build_rational_presentation(&named::three_lines_twisted(7, 1)).unwrap();
    let y = build_rational_presentation(&named::three_lines_twisted(7, 2)).unwrap();
    check!(x.graded_dimensions() == y.graded_dimensions(), "graded dimensions differ");
    for p in 0..=2 {
        for q in 0..=2 - p {
            check!(x.multiplication_rank(p, q) == y.multiplication_rank(p, q), "ranks in degrees {p}, {q} differ");
        }
    }
    Ok(())
}

fn normal_forms() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for case in 0..200 {
        let (r, n) = (rng.gen_range(1..=4), rng.gen_range(1..=5));
        let rows: Vec<Vec<i64>> = (0..r).map(|_| (0..n).map(|_| rng.gen_range(-5..=5)).collect()).collect();
        let a = IntMatrix::from_rows(n, &rows).unwrap();
        let d = snf(&a);
        check!(d.left.mul(&a).unwrap().mul(&d.right).unwrap() == d.diagonal_matrix(), "case {case}: SNF factorization");
        check!(d.diag.windows(2).all(|w| if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() }), "case {case}: SNF divisibility");
        check!(d.left.determinant().unwrap().abs().is_one() && d.right.determinant().unwrap().abs().is_one(), "case {case}: SNF factors");
        let (h, u) = hnf(&a);
        check!(u.mul(&a).unwrap() == h && u.determinant().unwrap().abs().is_one(), "case {case}: HNF transform");
        check!(hnf(&h).0 == h, "case {case}: HNF not idempotent");
    }
    for (name, free) in [("@A", vec![1, 5, 6]), ("@Nsecond", vec![1, 7, 17, 14])] {
        let alg = build_unimodular_presentation(&arrangement(name)).unwrap();
        for (k, &f) in free.iter().enumerate() {
            let (rank, torsion) = alg.integral_graded(k).unwrap();
            check!(rank == f && torsion.is_empty(), "{name}: degree {k} is Z^{rank} with torsion {torsion:?}");
        }
    }
    Ok(())
}

/// Runs all checks. Returns the report and whether every check passed.
pub fn run(corrupt: bool) -> (Report, bool) {
    let golden = Golden::new(corrupt);
    let checks: Vec<(&str, Box<dyn Fn() -> Check + '_>)> = vec![
        ("Tutte polynomials", Box::new(|| tutte(&golden))),
        ("Poincare polynomials", Box::new(|| poincare(&golden))),
        ("matroid tables of N and N'", Box::new(tables)),
        ("posets of layers and property (P)", Box::new(layers)),
        ("Betti numbers against Poincare polynomials", Box::new(betti)),
        ("degree-two relations of the three lines", Box::new(relations)),
        ("resonance of the three lines", Box::new(resonance_of_a)),
        ("resonance of N and N'", Box::new(resonance_of_quadruples)),
        ("integral resonance lattices", Box::new(integral_lattices)),
        ("c-values", Box::new(c_table)),
        ("integral obstruction", Box::new(obstruction)),
        ("multiplication ranks", Box::new(ranks)),
        ("component groups", Box::new(groups)),
        ("rational invariants of the coverings", Box::new(rational_invariants)),
        ("normal forms and integral cohomology", Box::new(normal_forms)),
    ];
    let hook = panic::take_hook();
    panic::set_hook(Box::new(|_| {}));
    let mut report = Report::new("reproduce");
    let mut entries = Vec::new();
    let mut passed = 0;
    for (i, (name, f)) in checks.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("computation panicked".into()));
        let (status, detail) = match &outcome {
            Ok(()) => {
                passed += 1;
                ("PASS", String::new())
            }
            Err(e) => ("FAIL", e.clone()),
        };
        report.line(if detail.is_empty() {
            format!("{status} {:>2} {name}", i + 1)
        } else {
            format!("{status} {:>2} {name}: {detail}", i + 1)
        });
        entries.push(json!({"id": i + 1, "name": name, "status": status, "detail": detail}));
    }
    panic::set_hook(hook);
    report.line(format!("{passed}/{} checks passed", checks.len()));
    report.results = json!({"checks": entries, "passed": passed, "total": checks.len()});
    (report, passed == checks.len())
}
