use super::poset::LayerPoset;

type Invariant = (usize, usize, usize, Vec<(usize, bool, bool, usize)>);

struct View<'a> {
    p: &'a LayerPoset,
    cub: Vec<Vec<usize>>,
    inv: Vec<Invariant>,
}

impl<'a> View<'a> {
    fn new(p: &'a LayerPoset) -> Self {
        let cub = p.common_upper_counts();
        let n = p.len();
        let inv = (0..n)
            .map(|x| {
                let mut pairs: Vec<(usize, bool, bool, usize)> =
                    (0..n).map(|y| (p.rank(y), p.leq(x, y), p.leq(y, x), cub[x][y])).collect();
                pairs.sort();
                (p.rank(x), p.upper_set(x).len(), p.lower_set(x).len(), pairs)
            })
            .collect();
        View { p, cub, inv }
    }

    fn compatible(&self, other: &View, x: usize, fx: usize, y: usize, fy: usize) -> bool {
        self.p.leq(x, y) == other.p.leq(fx, fy)
            && self.p.leq(y, x) == other.p.leq(fy, fx)
            && self.cub[x][y] == other.cub[fx][fy]
    }
}

/// An order isomorphism between two posets of layers, as the image of each
/// element of `a` in `b`, or `None` when none exists.
pub fn is_isomorphic(a: &LayerPoset, b: &LayerPoset) -> Option<Vec<usize>> {
    if a.len() != b.len() || a.rank_profile() != b.rank_profile() {
        return None;
    }
    let va = View::new(a);
    let vb = View::new(b);
    let mut ia = va.inv.clone();
    let mut ib = vb.inv.clone();
    ia.sort();
    ib.sort();
    if ia != ib {
        return None;
    }
    let n = a.len();
    let candidates: Vec<Vec<usize>> = (0..n).map(|x| (0..n).filter(|&y| va.inv[x] == vb.inv[y]).collect()).collect();

    // most constrained element next: many comparabilities with placed ones, few candidates
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for _ in 0..n {
        let next = (0..n)
            .filter(|&x| !placed[x])
            .max_by_key(|&x| {
                let links = order.iter().filter(|&&y: &&usize| a.leq(x, y) || a.leq(y, x)).count();
                (links, usize::MAX - candidates[x].len(), usize::MAX - x)
            })
            .expect("unplaced element");
        placed[next] = true;
        order.push(next);
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(&va, &vb, &order, &candidates, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend(
    va: &View,
    vb: &View,
    order: &[usize],
    candidates: &[Vec<usize>],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    for &fx in &candidates[x] {
        if used[fx] {
            continue;
        }
        if order[..depth].iter().all(|&y| va.compatible(vb, x, fx, y, map[y])) && va.compatible(vb, x, fx, x, fx) {
            map[x] = fx;
            used[fx] = true;
            if extend(va, vb, order, candidates, depth + 1, map, used) {
                return true;
            }
            used[fx] = false;
            map[x] = usize::MAX;
        }
    }
    false
}

/// Whether `map` is a bijection preserving and reflecting the order.
pub fn verify_isomorphism(a: &LayerPoset, b: &LayerPoset, map: &[usize]) -> bool {
    if map.len() != a.len() || a.len() != b.len() {
        return false;
    }
    let mut seen = vec![false; b.len()];
    for &y in map {
        if y >= b.len() || seen[y] {
            return false;
        }
        seen[y] = true;
    }
    (0..a.len()).all(|x| (0..a.len()).all(|y| a.leq(x, y) == b.leq(map[x], map[y])))
}
