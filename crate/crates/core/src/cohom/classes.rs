//! Named degree-one classes in either presentation.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::{rref, IntMatrix, QMatrix, Rat};

use super::graded::{CohomElement, GradedAlgebraQ};
use super::labels::GeneratorLabel;

/// Logarithmic class `ω_i` of a connected hypertorus.
///
/// In the rational presentation this is `(ω̄_i + ψ_i) / 2`.
pub fn log_class(alg: &GradedAlgebraQ, i: usize) -> Result<CohomElement> {
    if let Ok(w) = alg.generator(&GeneratorLabel::OmegaSmall(i)) {
        return Ok(w);
    }
    let bars: Vec<&GeneratorLabel> = alg
        .generators()
        .iter()
        .map(|g| &g.label)
        .filter(|l| matches!(l, GeneratorLabel::OmegaBar { subset, .. } if *subset == 1u64 << i))
        .collect();
    match bars.as_slice() {
        [bar] => {
            let b = alg.generator(bar)?;
            let p = alg.generator(&GeneratorLabel::Psi(i))?;
            let half = Rat::new(1.into(), 2.into());
            alg.combine_rational(&[(half.clone(), &b), (half, &p)])
        }
        [] => Err(Error::Precondition(format!("no logarithmic class for hypertorus {i}"))),
        _ => Err(Error::Precondition(format!("hypertorus {i} is not connected"))),
    }
}

/// Classes `τ_1, …, τ_r` of the coordinate directions of the torus, so that
/// `ψ_j = Σ_k N_{kj} τ_k` for every column `j` of `n`.
pub fn torus_coordinate_classes(alg: &GradedAlgebraQ, n: &IntMatrix) -> Result<Vec<CohomElement>> {
    let r = n.rows();
    // pick r independent columns greedily
    let mut chosen: Vec<usize> = Vec::new();
    for j in 0..n.cols() {
        let mut trial = chosen.clone();
        trial.push(j);
        let mut m: QMatrix = trial
            .iter()
            .map(|&c| n.column(c).iter().map(|x| Rat::from_integer(x.clone())).collect())
            .collect();
        if rref(&mut m).len() == trial.len() {
            chosen = trial;
        }
    }
    if chosen.len() < r {
        return Err(Error::Precondition("columns do not span the character lattice over the rationals".into()));
    }
    // [τ] = [ψ_chosen] · B⁻¹ with B the chosen columns
    let mut aug: QMatrix = (0..r)
        .map(|i| {
            let mut row: Vec<Rat> = chosen.iter().map(|&c| Rat::from_integer(n.row(i)[c].clone())).collect();
            row.extend((0..r).map(|k| if k == i { Rat::from_integer(1.into()) } else { Rat::zero() }));
            row
        })
        .collect();
    rref(&mut aug);
    let inv: Vec<Vec<Rat>> = aug.iter().map(|row| row[r..].to_vec()).collect();
    let psis: Vec<CohomElement> =
        chosen.iter().map(|&c| alg.generator(&GeneratorLabel::Psi(c))).collect::<Result<_>>()?;
    (0..r)
        .map(|k| {
            let terms: Vec<(Rat, &CohomElement)> = (0..r).map(|a| (inv[a][k].clone(), &psis[a])).collect();
            alg.combine_rational(&terms)
        })
        .collect()
}
