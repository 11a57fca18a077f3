use std::collections::BTreeMap;
use std::fmt::Write;

use crate::arithmat::{check_subset_guard, Subset, MAX_GROUND};
use crate::error::{Error, Result};
use crate::exactlin::IntMatrix;

use super::layer::{components, leq, Layer};

/// The poset of layers of a central toric arrangement, ordered by reverse inclusion.
///
/// Elements are sorted by rank (codimension) and then canonically, so index 0
/// is the whole torus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerPoset {
    ambient: usize,
    layers: Vec<Layer>,
    below: Vec<Vec<bool>>,
    hypertori: Vec<Vec<usize>>,
}

impl LayerPoset {
    pub fn len(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    pub fn layer(&self, i: usize) -> &Layer {
        &self.layers[i]
    }

    pub fn rank(&self, i: usize) -> usize {
        self.layers[i].rank()
    }

    pub fn index_of(&self, w: &Layer) -> Option<usize> {
        self.layers.iter().position(|l| l == w)
    }

    /// Number of elements of each rank, starting from rank 0.
    pub fn rank_profile(&self) -> Vec<usize> {
        let top = self.layers.iter().map(Layer::rank).max().unwrap_or(0);
        let mut out = vec![0; top + 1];
        for l in &self.layers {
            out[l.rank()] += 1;
        }
        out
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.below[i][j]
    }

    /// Layers forming the hypertorus with index `i` (one when its character is primitive).
    pub fn hypertorus(&self, i: usize) -> &[usize] {
        &self.hypertori[i]
    }

    pub fn atom_count(&self) -> usize {
        self.hypertori.len()
    }

    /// The single layer of hypertorus `i`, if it is connected and proper.
    pub fn atom(&self, i: usize) -> Option<usize> {
        match self.hypertori[i].as_slice() {
            [a] if self.rank(*a) == 1 => Some(*a),
            _ => None,
        }
    }

    pub fn upper_set(&self, i: usize) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.below[i][j]).collect()
    }

    pub fn lower_set(&self, i: usize) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.below[j][i]).collect()
    }

    /// `j` covers `i`.
    pub fn covers(&self, i: usize, j: usize) -> bool {
        i != j && self.below[i][j] && !(0..self.len()).any(|k| k != i && k != j && self.below[i][k] && self.below[k][j])
    }

    pub fn cover_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in 0..self.len() {
                if self.covers(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Minimal common upper bounds: the join set of two elements.
    pub fn min_upper_bounds(&self, a: usize, b: usize) -> Vec<usize> {
        let common: Vec<usize> = (0..self.len()).filter(|&k| self.below[a][k] && self.below[b][k]).collect();
        common.iter().copied().filter(|&k| !common.iter().any(|&l| l != k && self.below[l][k])).collect()
    }

    /// Maximal common lower bounds.
    pub fn max_lower_bounds(&self, a: usize, b: usize) -> Vec<usize> {
        let common: Vec<usize> = (0..self.len()).filter(|&k| self.below[k][a] && self.below[k][b]).collect();
        common.iter().copied().filter(|&k| !common.iter().any(|&l| l != k && self.below[k][l])).collect()
    }

    /// Number of common upper bounds of every pair.
    pub fn common_upper_counts(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut out = vec![vec![0; n]; n];
        for a in 0..n {
            for b in a..n {
                let c = (0..n).filter(|&k| self.below[a][k] && self.below[b][k]).count();
                out[a][b] = c;
                out[b][a] = c;
            }
        }
        out
    }
}

/// Poset of layers of the arrangement whose hypertori are `{t : t^c = 1}` for the columns `c` of `n`.
pub fn enumerate_layers(n: &IntMatrix) -> Result<LayerPoset> {
    enumerate_layers_with_limit(n, MAX_GROUND)
}

pub fn enumerate_layers_with_limit(n: &IntMatrix, limit: usize) -> Result<LayerPoset> {
    enumerate_in_order(n, limit, None)
}

/// Enumeration visiting subsets in the given order; the result does not depend on it.
pub fn enumerate_in_order(n: &IntMatrix, limit: usize, order: Option<&[Subset]>) -> Result<LayerPoset> {
    let ground = n.cols();
    check_subset_guard(ground, limit)?;
    let r = n.rows();
    let columns = n.column_vectors();
    let default: Vec<Subset> = (0..1u64 << ground).collect();
    let order = order.unwrap_or(&default);
    if order.len() != default.len() {
        return Err(Error::Dimension("subset order must list every subset once".into()));
    }
    let mut found: BTreeMap<(usize, Layer), ()> = BTreeMap::new();
    for &s in order {
        let chars: Vec<_> = (0..ground).filter(|i| s >> i & 1 == 1).map(|i| columns[i].clone()).collect();
        for w in components(r, &chars)? {
            found.insert((w.rank(), w), ());
        }
    }
    let layers: Vec<Layer> = found.into_keys().map(|(_, w)| w).collect();
    let m = layers.len();
    let mut below = vec![vec![false; m]; m];
    for i in 0..m {
        for j in 0..m {
            below[i][j] = layers[i].rank() <= layers[j].rank() && leq(&layers[i], &layers[j])?;
        }
    }
    let mut hypertori = Vec::with_capacity(ground);
    for c in &columns {
        let comps = components(r, std::slice::from_ref(c))?;
        hypertori.push(comps.iter().map(|w| layers.iter().position(|l| l == w).expect("enumerated")).collect());
    }
    Ok(LayerPoset { ambient: r, layers, below, hypertori })
}

/// Graphviz rendering of the cover relations, one rank per row.
pub fn hasse_dot(p: &LayerPoset) -> String {
    let mut labels: Vec<String> = (0..p.len()).map(|i| format!("r{}_{}", p.rank(i), i)).collect();
    let mut named: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for h in 0..p.atom_count() {
        if let Some(a) = p.atom(h) {
            named.entry(a).or_default().push(format!("H{}", h + 1));
        }
    }
    for (a, names) in named {
        labels[a] = names.join("=");
    }
    if !p.is_empty() && p.rank(0) == 0 {
        labels[0] = "T".to_string();
    }
    let mut out = String::from("digraph layers {\n  rankdir=BT;\n");
    for (rank, _) in p.rank_profile().iter().enumerate() {
        let members: Vec<String> = (0..p.len()).filter(|&i| p.rank(i) == rank).map(|i| format!("n{}", i)).collect();
        if !members.is_empty() {
            let _ = writeln!(out, "  {{ rank=same; {}; }}", members.join("; "));
        }
    }
    for (i, label) in labels.iter().enumerate() {
        let _ = writeln!(out, "  n{} [label=\"{}\"];", i, label);
    }
    for (i, j) in p.cover_edges() {
        let _ = writeln!(out, "  n{} -> n{};", i, j);
    }
    out.push_str("}\n");
    out
}

/// Searches a splitting `{i,j} | {k,l}` of the four hypertori such that every
/// component of `H_i ∩ H_j` meets every component of `H_k ∩ H_l`.
/// Returns the first such splitting as `((i, j), (k, l))`, zero based.
pub fn property_p(p: &LayerPoset) -> Result<Option<((usize, usize), (usize, usize))>> {
    if p.atom_count() != 4 {
        return Err(Error::Precondition(format!("expected 4 hypertori, found {}", p.atom_count())));
    }
    let mut atoms = [0; 4];
    for (i, a) in atoms.iter_mut().enumerate() {
        *a = p.atom(i).ok_or_else(|| Error::Precondition(format!("hypertorus {} is not a connected atom", i + 1)))?;
    }
    for ((i, j), (k, l)) in [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))] {
        let left = p.min_upper_bounds(atoms[i], atoms[j]);
        let right = p.min_upper_bounds(atoms[k], atoms[l]);
        if left.iter().all(|&a| right.iter().all(|&b| !p.min_upper_bounds(a, b).is_empty())) {
            return Ok(Some(((i, j), (k, l))));
        }
    }
    Ok(None)
}
