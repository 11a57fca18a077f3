//! One function per subcommand, each producing a [`Report`].

use std::path::Path;

use num_bigint::BigInt;
use serde_json::{json, Value};

use toric_core::arithmat::{
    arithmetic_tutte, from_matrix_with_limit, is_totally_unimodular, poincare_polynomial,
    zmatroid_from_matrix_with_limit,
};
use toric_core::cohom::{
    build_rational_presentation_with_limit, build_unimodular_presentation, log_class, torus_coordinate_classes,
    CohomElement, GradedAlgebraQ, DEFAULT_GENERATOR_LIMIT,
};
use toric_core::covering::{
    build_h1_lattice, c_values, pair_sum_in_nl, torus_lattice, torus_line_generators, verify_non_isomorphism,
    CoveringData, CoveringSpec, Verdict,
};
use toric_core::exactlin::IntMatrix;
use toric_core::layers::{enumerate_layers_with_limit, hasse_dot, is_isomorphic, property_p, LayerPoset};
use toric_core::named;
use toric_core::resonance::{analyze_resonance, plucker_variables, DegreeOneBasis};

use crate::error::{CliError, CliResult};
use crate::input::MatrixInput;
use crate::report::{
    bivariate_value, int_value, ints_value, join_ints, lattice_text, lattice_value, subset_label, subset_members,
    univariate_value, Report,
};

/// Enumeration guards in force for one invocation.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub ground: usize,
    pub generators: usize,
}

impl Limits {
    /// `--max-subsets K` allows ground sets with at most `K` subsets.
    pub fn new(force: bool, max_subsets: u64) -> Self {
        if force {
            return Limits { ground: 63, generators: usize::MAX };
        }
        Limits { ground: max_subsets.max(1).ilog2() as usize, generators: DEFAULT_GENERATOR_LIMIT }
    }
}

pub fn matroid(input: &MatrixInput, limits: Limits) -> CliResult<Report> {
    let m = &input.matrix;
    let am = from_matrix_with_limit(m, limits.ground)?;
    let zm = zmatroid_from_matrix_with_limit(m, limits.ground)?;
    let tutte = arithmetic_tutte(&am);
    let poincare = poincare_polynomial(&am, m.rows() as u32)?;
    let unimodular = is_totally_unimodular(m)?;
    let ground = am.ground_size();

    let mut report = Report::new("matroid").with_input(input);
    let mut table = Vec::new();
    report.line(format!("rank {}, ground set {}, totally unimodular: {unimodular}", m.rows(), ground));
    report.line("subset  rk  m  Z^r/<N[S]>");
    for s in am.subsets() {
        let module = zm.module(s);
        table.push(json!({
            "subset": subset_members(s, ground),
            "rank": am.rank(s),
            "multiplicity": int_value(am.multiplicity(s)),
            "module": {"free_rank": module.free_rank, "torsion": ints_value(&module.torsion)},
        }));
        let mut parts = Vec::new();
        if module.free_rank > 0 {
            parts.push(format!("Z^{}", module.free_rank));
        }
        parts.extend(module.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            parts.push("0".into());
        }
        report.line(format!("{}  {}  {}  {}", subset_label(s, ground), am.rank(s), am.multiplicity(s), parts.join(" + ")));
    }
    report.line(format!("Tutte: {tutte}"));
    report.line(format!("Poincare: {poincare}"));
    report.results = json!({
        "rank": m.rows(),
        "ground_size": ground,
        "totally_unimodular": unimodular,
        "subsets": table,
        "tutte": bivariate_value(&tutte),
        "poincare": univariate_value(&poincare),
    });
    Ok(report)
}

fn poset_summary(p: &LayerPoset) -> Value {
    json!({"layers": p.len(), "rank_profile": p.rank_profile(), "hypertori": p.atom_count()})
}

pub fn layers(input: &MatrixInput, limits: Limits, dot: Option<&Path>) -> CliResult<Report> {
    let p = enumerate_layers_with_limit(&input.matrix, limits.ground)?;
    let mut report = Report::new("layers").with_input(input);
    report.line(format!("layers: {}", p.len()));
    report.line(format!("rank profile: {:?}", p.rank_profile()));
    let mut results = poset_summary(&p);
    if let Some(path) = dot {
        std::fs::write(path, hasse_dot(&p)).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
        results["dot"] = json!(path.display().to_string());
        report.line(format!("Hasse diagram written to {}", path.display()));
    }
    report.results = results;
    Ok(report)
}

/// Property (P) for posets with exactly four connected hypertori.
fn property_p_value(p: &LayerPoset) -> CliResult<Option<Value>> {
    if p.atom_count() != 4 || (0..4).any(|i| p.atom(i).is_none()) {
        return Ok(None);
    }
    Ok(Some(match property_p(p)? {
        Some(((i, j), (k, l))) => json!({"holds": true, "witness": [[i + 1, j + 1], [k + 1, l + 1]]}),
        None => json!({"holds": false}),
    }))
}

pub fn poset_compare(first: &MatrixInput, second: &MatrixInput, limits: Limits) -> CliResult<Report> {
    let p1 = enumerate_layers_with_limit(&first.matrix, limits.ground)?;
    let p2 = enumerate_layers_with_limit(&second.matrix, limits.ground)?;
    let iso = is_isomorphic(&p1, &p2).is_some();
    let mut report = Report::new("poset-compare").with_input(first).with_input(second);
    report.line(format!("rank profiles: {:?} / {:?}", p1.rank_profile(), p2.rank_profile()));
    report.line(format!("isomorphic: {iso}"));
    let mut results = json!({"first": poset_summary(&p1), "second": poset_summary(&p2), "isomorphic": iso});
    if let (Some(a), Some(b)) = (property_p_value(&p1)?, property_p_value(&p2)?) {
        for (name, v) in [("first", &a), ("second", &b)] {
            let line = match v["witness"].as_array() {
                Some(w) => {
                    let part = |x: &Value| format!("{{{},{}}}", x[0], x[1]);
                    format!("property (P) for {name}: true, split {} | {}", part(&w[0]), part(&w[1]))
                }
                None => format!("property (P) for {name}: false"),
            };
            report.line(line);
        }
        results["property_p"] = json!({"first": a, "second": b});
    }
    report.results = results;
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Coefficients {
    #[value(name = "Q")]
    Q,
    #[value(name = "Z")]
    Z,
}

pub fn cohomology(
    input: &MatrixInput,
    limits: Limits,
    over: Coefficients,
    quotient_torus: bool,
    mult_rank: Option<(usize, usize)>,
) -> CliResult<Report> {
    let m = &input.matrix;
    let mut report = Report::new("cohomology").with_input(input);
    let mut results = json!({"coefficients": format!("{over:?}"), "quotient_torus": quotient_torus});
    let alg = match over {
        Coefficients::Q => {
            let alg = build_rational_presentation_with_limit(m, limits.generators)?;
            if quotient_torus {
                alg.quotient_by_torus_ideal()?
            } else {
                alg
            }
        }
        Coefficients::Z => {
            if quotient_torus {
                return Err(CliError::Usage("--quotient-torus is only available over Q".into()));
            }
            if !is_totally_unimodular(m)? {
                return Err(CliError::Usage(
                    "integral cohomology needs a totally unimodular matrix (every maximal minor in {-1,0,1}); use --over Q"
                        .into(),
                ));
            }
            let alg = build_unimodular_presentation(m)?;
            let mut degrees = Vec::new();
            for k in 0..=alg.top_degree() {
                let (free, torsion) = alg.integral_graded(k)?;
                report.line(format!(
                    "H^{k}: Z^{free}{}",
                    torsion.iter().map(|t| format!(" + Z/{t}")).collect::<String>()
                ));
                degrees.push(json!({"degree": k, "free_rank": free, "torsion": ints_value(&torsion)}));
            }
            results["integral"] = json!(degrees);
            alg
        }
    };
    let dims = alg.graded_dimensions();
    report.line(format!("graded dimensions: {dims:?}"));
    results["dimensions"] = json!(dims);
    if let Some((p, q)) = mult_rank {
        let r = alg.multiplication_rank(p, q);
        report.line(format!("rank of degree {p} x degree {q} -> degree {}: {r}", p + q));
        results["multiplication_rank"] = json!({"p": p, "q": q, "rank": r});
    }
    report.results = results;
    Ok(report)
}

/// Log classes of the hypertori followed by torus coordinate classes, or the
/// generator basis when those are unavailable.
fn resonance_basis(alg: &GradedAlgebraQ, m: &IntMatrix) -> CliResult<(DegreeOneBasis, Vec<String>)> {
    let preferred = || -> toric_core::Result<Vec<CohomElement>> {
        let mut classes = (0..m.cols()).map(|i| log_class(alg, i)).collect::<toric_core::Result<Vec<_>>>()?;
        classes.extend(torus_coordinate_classes(alg, m)?);
        Ok(classes)
    };
    if let Ok(classes) = preferred() {
        if let Ok(basis) = DegreeOneBasis::new(alg, classes) {
            let mut labels: Vec<String> = (1..=m.cols()).map(|i| format!("w{i}")).collect();
            labels.extend((1..=m.rows()).map(|i| format!("t{i}")));
            return Ok((basis, labels));
        }
    }
    let basis = DegreeOneBasis::standard(alg)?;
    let labels = (1..=basis.len()).map(|i| format!("e{i}")).collect();
    Ok((basis, labels))
}

pub fn resonance(input: &MatrixInput, limits: Limits, integral: Option<(i64, i64)>) -> CliResult<Report> {
    let m = &input.matrix;
    if integral.is_some() && *m != named::three_lines() {
        return Err(CliError::Usage("--integral applies to the three-line arrangement @A only".into()));
    }
    let alg = if is_totally_unimodular(m)? {
        build_unimodular_presentation(m)?
    } else {
        build_rational_presentation_with_limit(m, limits.generators)?
    };
    let (basis, labels) = resonance_basis(&alg, m)?;
    let analysis = analyze_resonance(&alg, &basis)?;
    let mut planes = analysis.planes.clone();
    planes.sort();

    let mut report = Report::new("resonance").with_input(input);
    report.line(format!("degree-one basis: {}", labels.join(" ")));
    report.line(format!("kernel of the wedge map: dimension {}", analysis.kernel.len()));
    report.line(format!("projective dimension {}, degree {}", analysis.projective_dim, analysis.degree));
    report.line(format!("Plucker coordinates: {}", plucker_variables(basis.len()).join(" ")));
    let mut plane_values = Vec::new();
    for (k, p) in planes.iter().enumerate() {
        let [u, v] = p.integer_basis();
        let pl = p.plucker().integer_coords();
        report.line(format!("plane {}: <({}), ({})>  [{}]", k + 1, join_ints(&u), join_ints(&v), join_ints(&pl)));
        plane_values.push(json!({"basis": [ints_value(&u), ints_value(&v)], "plucker": ints_value(&pl)}));
    }
    let mut results = json!({
        "basis": labels,
        "kernel_dim": analysis.kernel.len(),
        "projective_dim": analysis.projective_dim,
        "degree": analysis.degree,
        "plucker_variables": *plucker_variables(basis.len()),
        "planes": plane_values,
    });
    if let Some((n, a)) = integral {
        let spec = CoveringSpec::new(n, a)?;
        let h = build_h1_lattice(&spec)?;
        let cs = c_values(&h)?;
        let l = torus_lattice(&h)?;
        let lines = torus_line_generators(&h, &l)?;
        let pair_sum = pair_sum_in_nl(&lines, &BigInt::from(n), &l)?;
        let data = CoveringData { spec, h1: h, c_values: cs, torus_lattice: l, lines, pair_sum_in_nl: pair_sum };
        report.line(format!("integral lattices of the covering of degree {n}, twist {a} (basis w1 w2 w3 alpha beta):"));
        covering_lines(&mut report, &data);
        results["integral"] = covering_value(&data);
    }
    report.results = results;
    Ok(report)
}

fn covering_value(d: &CoveringData) -> Value {
    json!({
        "n": d.spec.n(),
        "a": d.spec.a(),
        "components": d.h1.components().iter().map(lattice_value).collect::<Vec<_>>(),
        "c_values": d.c_values.iter().map(|((i, j), c)| json!({"pair": [i + 1, j + 1], "c": int_value(c)})).collect::<Vec<_>>(),
        "torus_lattice": lattice_value(&d.torus_lattice),
        "lines": d.lines.iter().map(|v| ints_value(v)).collect::<Vec<_>>(),
        "pair_sum_in_nl": d.pair_sum_in_nl,
    })
}

fn covering_lines(report: &mut Report, d: &CoveringData) {
    for (i, c) in d.h1.components().iter().enumerate() {
        report.line(format!("  Q{}: {}", i + 1, lattice_text(c)));
    }
    let big: Vec<String> =
        d.c_values.iter().filter(|(_, c)| *c != BigInt::from(1)).map(|((i, j), c)| format!("c({},{})={c}", i + 1, j + 1)).collect();
    report.line(format!("  c-values other than 1: {}", big.join(" ")));
    report.line(format!("  torus lattice L: {}", lattice_text(&d.torus_lattice)));
    let lines: Vec<String> = d.lines.iter().map(|v| format!("({})", join_ints(v))).collect();
    report.line(format!("  lines Q_i cap L: {}", lines.join(" ")));
    report.line(format!("  l1 + l2 in nL: {}", d.pair_sum_in_nl));
}

pub fn obstruction(n: i64) -> CliResult<Report> {
    let r = verify_non_isomorphism(n)?;
    let verdict = match r.verdict {
        Verdict::NonIsomorphic => "non-isomorphic",
        Verdict::Inconclusive => "inconclusive",
        Verdict::Withheld => "withheld",
    };
    let mut report = Report::new("obstruction");
    report.line(format!("coverings of degree {n} with twists 1 and 2"));
    report.line(format!("hypotheses (n > 5, gcd(n, 6) = 1): {}", r.hypotheses_met));
    report.line(format!("posets of layers isomorphic: {}", r.posets_isomorphic));
    for d in &r.coverings {
        report.line(format!("twist {}:", d.spec.a()));
        covering_lines(&mut report, d);
    }
    report.line(format!("c-patterns agree: {}", r.c_patterns_agree));
    report.line(format!("first three components forced: {}", r.first_three_forced));
    report.line(format!("verdict: {verdict}"));
    report.results = json!({
        "n": n,
        "hypotheses_met": r.hypotheses_met,
        "posets_isomorphic": r.posets_isomorphic,
        "coverings": r.coverings.iter().map(covering_value).collect::<Vec<_>>(),
        "c_patterns_agree": r.c_patterns_agree,
        "first_three_forced": r.first_three_forced,
        "verdict": verdict,
    });
    Ok(report)
}
