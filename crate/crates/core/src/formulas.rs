//! Closed forms and sufficient criteria that avoid the game-tree search.

use std::collections::HashSet;

use crate::engine::GameValue;
use crate::graph::{domination_stats, gamma_sets, Graph, GraphError, VertexSet};
use crate::residual::residual_decompose;

/// Default vertex cap for [`find_dominating_matching`].
pub const DEFAULT_MATCHING_CAP: usize = 18;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormulaError {
    #[error("input is not a tree")]
    NotATree,
    #[error("cycle formula needs n >= 3, got {0}")]
    CycleTooSmall(usize),
    #[error("invalid pairing: {0}")]
    InvalidPairing(String),
    #[error("precondition violated: {0}")]
    Domain(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `(γ_MB(T), γ'_MB(T))` for a tree, read off its residual.
///
/// ```
/// use mbdom::{formulas::tree_values, graph::{generate, Family}, GameValue::*};
///
/// let star = generate(&Family::Star(3)).unwrap();
/// assert_eq!(tree_values(&star).unwrap(), (Finite(1), Infinite));
/// ```
pub fn tree_values(t: &Graph) -> Result<(GameValue, GameValue), FormulaError> {
    if t.order() == 0 || !t.is_tree() {
        return Err(FormulaError::NotATree);
    }
    let n = t.order() as u32;
    let residual = residual_decompose(t).residual;
    let values = match residual.order() {
        0 => (GameValue::Finite(n / 2), GameValue::Finite(n / 2)),
        // K1 itself: Dominator still needs one move.
        1 => (GameValue::Finite(((n - 1) / 2).max(1)), GameValue::Infinite),
        _ => match star_leaves(&residual) {
            Some(k) if k >= 3 => (GameValue::Finite((n - k as u32).div_ceil(2)), GameValue::Infinite),
            _ => (GameValue::Infinite, GameValue::Infinite),
        },
    };
    Ok(values)
}

/// `Some(k)` when `g` is `K_{1,k}`.
fn star_leaves(g: &Graph) -> Option<usize> {
    let n = g.order();
    if n < 2 || g.edge_count() != n - 1 {
        return None;
    }
    let hub = (0..n).find(|&v| g.degree(v) == n - 1)?;
    (0..n)
        .filter(|&v| v != hub)
        .all(|v| g.degree(v) == 1)
        .then_some(n - 1)
}

/// `(γ_MB(C_n), γ'_MB(C_n))`, both `⌊n/2⌋`.
pub fn cycle_values(n: usize) -> Result<(GameValue, GameValue), FormulaError> {
    if n < 3 {
        return Err(FormulaError::CycleTooSmall(n));
    }
    let v = GameValue::Finite((n / 2) as u32);
    Ok((v, v))
}

/// Bounds on the values of a disjoint union `G ∪ H`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnionBounds {
    pub d_low: GameValue,
    pub d_high: GameValue,
    pub s_low: GameValue,
    pub s_high: GameValue,
}

impl UnionBounds {
    pub fn brackets(&self, gmb: GameValue, gmb_prime: GameValue) -> bool {
        self.d_low <= gmb && gmb <= self.d_high && self.s_low <= gmb_prime && gmb_prime <= self.s_high
    }
}

/// Takes `γ_MB` and `γ'_MB` of `G` and of `H`.
pub fn union_bounds(
    gd_g: GameValue,
    gs_g: GameValue,
    gd_h: GameValue,
    gs_h: GameValue,
) -> UnionBounds {
    UnionBounds {
        d_low: gd_g + gd_h,
        d_high: (gs_g + gd_h).min(gd_g + gs_h),
        s_low: (gs_g + gd_h).max(gd_g + gs_h),
        s_high: gs_g + gs_h,
    }
}

/// Pairwise disjoint vertex pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pairing {
    pairs: Vec<(usize, usize)>,
}

impl Pairing {
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<Self, FormulaError> {
        let mut seen = VertexSet::EMPTY;
        for &(u, v) in &pairs {
            if u == v {
                return Err(FormulaError::InvalidPairing(format!("pair ({u}, {v}) repeats a vertex")));
            }
            for w in [u, v] {
                if w >= 64 || seen.contains(w) {
                    return Err(FormulaError::InvalidPairing(format!("vertex {w} appears twice")));
                }
                seen.insert(w);
            }
        }
        Ok(Pairing { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn vertices(&self) -> VertexSet {
        self.pairs.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    /// True iff every pair is an edge of `g`.
    pub fn is_matching(&self, g: &Graph) -> bool {
        self.pairs.iter().all(|&(u, v)| g.has_edge(u, v))
    }

    /// Index of the pair containing `v`, with its partner.
    pub fn partner(&self, v: usize) -> Option<(usize, usize)> {
        self.pairs.iter().enumerate().find_map(|(i, &(a, b))| {
            if a == v {
                Some((i, b))
            } else if b == v {
                Some((i, a))
            } else {
                None
            }
        })
    }
}

/// True iff `⋃ N[u_i, v_i] = V(G)`.
pub fn pairing_check(g: &Graph, x: &Pairing) -> Result<bool, FormulaError> {
    let n = g.order();
    if let Some(&(u, v)) = x.pairs.iter().find(|&&(u, v)| u >= n || v >= n) {
        return Err(FormulaError::InvalidPairing(format!(
            "pair ({u}, {v}) is outside a graph on {n} vertices"
        )));
    }
    let covered: VertexSet = x
        .pairs
        .iter()
        .fold(VertexSet::EMPTY, |acc, &(u, v)| acc | g.common_closed_neighborhood(u, v));
    Ok(covered == g.vertices())
}

/// Some dominating matching of `g`, or `None`. Capped at
/// [`DEFAULT_MATCHING_CAP`] vertices.
pub fn find_dominating_matching(g: &Graph) -> Result<Option<Pairing>, FormulaError> {
    find_dominating_matching_capped(g, DEFAULT_MATCHING_CAP)
}

pub fn find_dominating_matching_capped(
    g: &Graph,
    cap: usize,
) -> Result<Option<Pairing>, FormulaError> {
    let n = g.order();
    if n > cap {
        return Err(GraphError::CapExceeded { n, cap }.into());
    }
    let cover: Vec<((usize, usize), VertexSet)> = g
        .edges()
        .into_iter()
        .map(|(u, v)| ((u, v), g.common_closed_neighborhood(u, v)))
        .collect();
    let mut chosen = Vec::new();
    let mut dead = HashSet::new();
    let found = extend_matching(g.vertices(), &cover, VertexSet::EMPTY, VertexSet::EMPTY, &mut chosen, &mut dead);
    Ok(found.then_some(Pairing { pairs: chosen }))
}

/// Covers the lowest uncovered vertex with each usable edge in turn.
fn extend_matching(
    full: VertexSet,
    cover: &[((usize, usize), VertexSet)],
    used: VertexSet,
    covered: VertexSet,
    chosen: &mut Vec<(usize, usize)>,
    dead: &mut HashSet<(u64, u64)>,
) -> bool {
    let Some(w) = (full - covered).first() else {
        return true;
    };
    if dead.contains(&(used.bits(), covered.bits())) {
        return false;
    }
    for &((u, v), nbhd) in cover {
        if !nbhd.contains(w) || used.contains(u) || used.contains(v) {
            continue;
        }
        chosen.push((u, v));
        if extend_matching(full, cover, used.with(u).with(v), covered | nbhd, chosen, dead) {
            return true;
        }
        chosen.pop();
    }
    dead.insert((used.bits(), covered.bits()));
    false
}

/// For `γ(G) = 2`: the lowest vertex lying in at least two γ-sets.
pub fn gamma2_witness(g: &Graph) -> Result<Option<usize>, FormulaError> {
    let gamma = domination_stats(g)?.gamma;
    if gamma != 2 {
        return Err(FormulaError::Domain(format!("expected γ = 2, got {gamma}")));
    }
    let mut count = vec![0usize; g.order()];
    for set in gamma_sets(g)? {
        for v in set {
            count[v] += 1;
        }
    }
    Ok(count.iter().position(|&c| c >= 2))
}

/// γ, `X_γ` and whether `X_γ < 2^(γ-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ErdosSelfridge {
    pub gamma: usize,
    pub num_gamma_sets: u64,
    pub criterion: bool,
}

pub fn erdos_selfridge(g: &Graph) -> Result<ErdosSelfridge, FormulaError> {
    let stats = domination_stats(g)?;
    let criterion = stats.gamma >= 1 && (stats.num_gamma_sets as u128) < 1u128 << (stats.gamma - 1);
    Ok(ErdosSelfridge {
        gamma: stats.gamma,
        num_gamma_sets: stats.num_gamma_sets,
        criterion,
    })
}

/// When true, Staller wins the game on the γ-sets and so `γ_MB(G) > γ(G)`.
pub fn erdos_selfridge_check(g: &Graph) -> Result<bool, FormulaError> {
    Ok(erdos_selfridge(g)?.criterion)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{gmb, gmb_prime};
    use crate::graph::generate;
    use GameValue::*;

    fn gen(spec: &str) -> Graph {
        generate(&spec.parse().unwrap()).unwrap()
    }

    #[test]
    fn tree_examples() {
        assert_eq!(tree_values(&gen("path:4")).unwrap(), (Finite(2), Finite(2)));
        assert_eq!(tree_values(&gen("star:3")).unwrap(), (Finite(1), Infinite));
        assert_eq!(tree_values(&gen("star:4")).unwrap(), (Finite(1), Infinite));
        let spider = gen("spider:2,2,2");
        assert_eq!(tree_values(&spider).unwrap(), (Finite(3), Infinite));
        assert_eq!(gmb(&spider).unwrap(), Finite(3));
        let ds = gen("double_star:2,2");
        assert_eq!(tree_values(&ds).unwrap(), (Infinite, Infinite));
        assert_eq!(gmb(&ds).unwrap(), Infinite);
        assert_eq!(tree_values(&gen("path:1")).unwrap(), (Finite(1), Infinite));
        assert_eq!(tree_values(&gen("cycle:4")), Err(FormulaError::NotATree));
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(cycle_values(5).unwrap(), (Finite(2), Finite(2)));
        assert_eq!(cycle_values(11).unwrap(), (Finite(5), Finite(5)));
        assert_eq!(cycle_values(4).unwrap(), (Finite(2), Finite(2)));
        assert_eq!(cycle_values(2), Err(FormulaError::CycleTooSmall(2)));
    }

    #[test]
    fn union_examples() {
        let b = union_bounds(Finite(1), Finite(2), Finite(1), Finite(3));
        assert_eq!((b.d_low, b.d_high), (Finite(2), Finite(3)));
        assert_eq!((b.s_low, b.s_high), (Finite(4), Finite(5)));
        let b = union_bounds(Finite(2), Finite(3), Finite(1), Finite(1));
        assert_eq!((b.d_low, b.d_high), (Finite(3), Finite(3)));
        let b = union_bounds(Infinite, Infinite, Finite(1), Finite(1));
        assert!([b.d_low, b.d_high, b.s_low, b.s_high].iter().all(|v| *v == Infinite));
    }

    #[test]
    fn pairing_examples() {
        let c4 = gen("cycle:4");
        let x = Pairing::new(vec![(0, 1), (2, 3)]).unwrap();
        assert!(pairing_check(&c4, &x).unwrap());
        let c6 = gen("cycle:6");
        let x = Pairing::new(vec![(0, 1), (3, 4)]).unwrap();
        assert!(!pairing_check(&c6, &x).unwrap());
        let grst = gen("grst:2,2,2");
        let x = Pairing::new(vec![(2, 3), (4, 5)]).unwrap();
        assert!(x.is_matching(&grst));
        assert!(pairing_check(&grst, &x).unwrap());
        assert!(matches!(
            Pairing::new(vec![(0, 1), (1, 2)]),
            Err(FormulaError::InvalidPairing(_))
        ));
        let far = Pairing::new(vec![(0, 9)]).unwrap();
        assert!(pairing_check(&c4, &far).is_err());
    }

    #[test]
    fn dominating_matching_examples() {
        let p4 = gen("path:4");
        let x = find_dominating_matching(&p4).unwrap().unwrap();
        assert_eq!(x.pairs(), &[(0, 1), (2, 3)]);
        assert_eq!(find_dominating_matching(&gen("cycle:5")).unwrap(), None);
        let c6 = gen("cycle:6");
        let x = find_dominating_matching(&c6).unwrap().unwrap();
        assert_eq!(x.len(), 3);
        assert!(pairing_check(&c6, &x).unwrap());
        assert!(gmb_prime(&c6).unwrap() <= Finite(x.len() as u32));
        assert!(find_dominating_matching(&Graph::empty(19).unwrap()).is_err());
    }

    #[test]
    fn gamma2_examples() {
        assert!(gamma2_witness(&gen("cycle:4")).unwrap().is_some());
        assert_eq!(gamma2_witness(&gen("cycle:6")).unwrap(), None);
        assert_eq!(gamma2_witness(&gen("path:5")).unwrap(), Some(1));
        assert!(matches!(gamma2_witness(&gen("cycle:8")), Err(FormulaError::Domain(_))));
    }

    #[test]
    fn erdos_selfridge_examples() {
        let es = erdos_selfridge(&gen("cycle:14")).unwrap();
        assert_eq!((es.gamma, es.num_gamma_sets, es.criterion), (5, 14, true));
        assert!(!erdos_selfridge_check(&gen("cycle:8")).unwrap());
        assert!(!erdos_selfridge_check(&gen("path:2")).unwrap());
        assert!(!erdos_selfridge_check(&Graph::empty(0).unwrap()).unwrap());
    }
}
