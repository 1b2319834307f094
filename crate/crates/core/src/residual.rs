//! Residual graphs: iterated removal of pendant `P2`s.
//!
//! A pendant `P2` is an edge `x–y` where `x` is a leaf and `y` has degree
//! exactly two. Removing pendant `P2`s until none is left (and removing the
//! whole graph when it is exactly `P2`) yields the residual graph `R(G)`. The
//! removed vertices induce a forest `H` whose unique perfect matching is the
//! list of removed pairs, and
//!
//! * `γ'_MB(G) = n(H)/2 + γ'_MB(R(G))`,
//! * `n(H)/2 + γ_MB(R(G)) - 1 <= γ_MB(G) <= n(H)/2 + γ_MB(R(G))`.

use rand::Rng;

use crate::engine::{gmb, gmb_prime, EngineError, GameValue};
use crate::graph::{has_perfect_matching, Graph, VertexSet};

/// Result of reducing a graph to its residual.
#[derive(Debug, Clone)]
pub struct ResidualDecomposition {
    pub residual: Graph,
    /// `residual_map[i]` is the original index of residual vertex `i`.
    pub residual_map: Vec<usize>,
    /// `(leaf, support)` pairs in removal order, in original indices.
    pub removed_pairs: Vec<(usize, usize)>,
    pub original_n: usize,
}

impl ResidualDecomposition {
    pub fn removed(&self) -> VertexSet {
        self.removed_pairs
            .iter()
            .flat_map(|&(x, y)| [x, y])
            .collect()
    }

    /// Order of the removed forest `H`.
    pub fn removed_order(&self) -> usize {
        2 * self.removed_pairs.len()
    }

    /// `H`, the subgraph of `original` induced by the removed vertices, with
    /// its index map back to `original`.
    pub fn removed_forest(&self, original: &Graph) -> (Graph, Vec<usize>) {
        original.induced_subgraph(self.removed())
    }

    /// Translates a set of original vertices to residual indices, dropping
    /// vertices that were removed.
    pub fn to_residual(&self, set: VertexSet) -> VertexSet {
        self.residual_map
            .iter()
            .enumerate()
            .filter(|(_, &orig)| set.contains(orig))
            .map(|(i, _)| i)
            .collect()
    }

    /// `"empty"`, `"K1"`, or `"self"` when nothing was removed.
    pub fn describe(&self) -> String {
        match self.residual.order() {
            0 => "empty".into(),
            1 => "K1".into(),
            _ if self.removed_pairs.is_empty() => "self".into(),
            n => format!("order {n}"),
        }
    }
}

/// Reduces with the lowest-indexed removable leaf first.
pub fn residual_decompose(g: &Graph) -> ResidualDecomposition {
    residual_decompose_by(g, |_| 0)
}

/// Reduces choosing uniformly among the removable pendant `P2`s at each step.
pub fn residual_decompose_random<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> ResidualDecomposition {
    residual_decompose_by(g, |options| rng.gen_range(0..options.len()))
}

/// Reduces `g`, letting `choose` pick which of the currently removable
/// `(leaf, support)` pairs (listed by increasing leaf) goes next.
pub fn residual_decompose_by(
    g: &Graph,
    mut choose: impl FnMut(&[(usize, usize)]) -> usize,
) -> ResidualDecomposition {
    let mut alive = g.vertices();
    let mut removed_pairs = Vec::new();
    loop {
        let degree = |v: usize| (g.neighbors(v) & alive).len();
        let options: Vec<(usize, usize)> = alive
            .iter()
            .filter(|&x| degree(x) == 1)
            .filter_map(|x| {
                let y = (g.neighbors(x) & alive).first()?;
                (degree(y) == 2).then_some((x, y))
            })
            .collect();
        if !options.is_empty() {
            let (x, y) = options[choose(&options).min(options.len() - 1)];
            alive.remove(x);
            alive.remove(y);
            removed_pairs.push((x, y));
            continue;
        }
        // The whole remaining graph is a single edge.
        if alive.len() == 2 {
            let x = alive.first().expect("two vertices");
            let y = (alive.without(x)).first().expect("two vertices");
            if g.has_edge(x, y) {
                alive = VertexSet::EMPTY;
                removed_pairs.push((x, y));
            }
        }
        break;
    }
    let (residual, residual_map) = g.induced_subgraph(alive);
    ResidualDecomposition {
        residual,
        residual_map,
        removed_pairs,
        original_n: g.order(),
    }
}

/// True iff `g` is empty, `K1`, or every support vertex has degree at least 3.
pub fn is_residual_fixpoint(g: &Graph) -> bool {
    if g.order() <= 1 {
        return true;
    }
    (0..g.order())
        .filter(|&v| g.degree(v) == 1)
        .flat_map(|leaf| g.neighbors(leaf).iter())
        .all(|support| g.degree(support) >= 3)
}

/// Values of `G` derived from the residual graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResidualBounds {
    pub sgame_exact: GameValue,
    pub dgame_low: GameValue,
    pub dgame_high: GameValue,
}

pub fn reduce_and_solve(g: &Graph) -> Result<ResidualBounds, EngineError> {
    let dec = residual_decompose(g);
    Ok(bounds_from_residual(
        g,
        &dec,
        gmb(&dec.residual)?,
        gmb_prime(&dec.residual)?,
    ))
}

/// Combines residual values with the size of the removed forest.
pub fn bounds_from_residual(
    g: &Graph,
    dec: &ResidualDecomposition,
    residual_gmb: GameValue,
    residual_gmb_prime: GameValue,
) -> ResidualBounds {
    let half = (dec.removed_order() / 2) as u32;
    let dgame_high = residual_gmb + half;
    let mut dgame_low = dgame_high.saturating_sub(1);
    if g.order() > 0 {
        dgame_low = dgame_low.max(GameValue::Finite(half.max(1)));
    }
    ResidualBounds {
        sgame_exact: residual_gmb_prime + half,
        dgame_low,
        dgame_high,
    }
}

/// `G` has a perfect matching iff `R(G)` has one.
pub fn check_matching_transfer(g: &Graph) -> bool {
    has_perfect_matching(g) == has_perfect_matching(&residual_decompose(g).residual)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{are_isomorphic, generate, perfect_matchings, Family};
    use GameValue::*;

    fn gen(spec: &str) -> Graph {
        generate(&spec.parse().unwrap()).unwrap()
    }

    #[test]
    fn p4_empties() {
        let dec = residual_decompose(&gen("path:4"));
        assert_eq!(dec.residual.order(), 0);
        assert_eq!(dec.removed_pairs, vec![(0, 1), (2, 3)]);
        assert_eq!(dec.describe(), "empty");
    }

    #[test]
    fn p5_leaves_k1() {
        let dec = residual_decompose(&gen("path:5"));
        assert_eq!(dec.residual.order(), 1);
        assert_eq!(dec.removed_pairs.len(), 2);
        assert_eq!(dec.residual_map, vec![4]);
    }

    #[test]
    fn star_is_fixed() {
        let star = gen("star:3");
        let dec = residual_decompose(&star);
        assert_eq!(dec.residual, star);
        assert!(dec.removed_pairs.is_empty());
        assert_eq!(dec.describe(), "self");
    }

    #[test]
    fn removal_order_does_not_matter_for_p9() {
        let p9 = gen("path:9");
        let left = residual_decompose_by(&p9, |_| 0);
        let right = residual_decompose_by(&p9, |opts| opts.len() - 1);
        assert_ne!(left.removed_pairs, right.removed_pairs);
        assert!(are_isomorphic(&left.residual, &right.residual).unwrap());
        assert_eq!(left.residual.order(), 1);
    }

    #[test]
    fn fixpoint_characterization() {
        assert!(is_residual_fixpoint(&gen("path:1")));
        assert!(is_residual_fixpoint(&Graph::empty(0).unwrap()));
        assert!(!is_residual_fixpoint(&gen("path:3")));
        assert!(!is_residual_fixpoint(&gen("path:2")));
        assert!(is_residual_fixpoint(&gen("double_star:2,2")));
        assert!(is_residual_fixpoint(&gen("cycle:5")));
        let dec = residual_decompose(&gen("spider:2,3,1"));
        assert!(is_residual_fixpoint(&dec.residual));
    }

    #[test]
    fn removed_pairs_are_the_unique_matching_of_h() {
        let g = gen("spider:2,2,4,1");
        let dec = residual_decompose(&g);
        let (h, map) = dec.removed_forest(&g);
        let matchings = perfect_matchings(&h, 2);
        assert_eq!(matchings.len(), 1);
        let mut from_h: Vec<(usize, usize)> = matchings[0]
            .iter()
            .map(|&(a, b)| (map[a].min(map[b]), map[a].max(map[b])))
            .collect();
        let mut removed: Vec<(usize, usize)> =
            dec.removed_pairs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        from_h.sort();
        removed.sort();
        assert_eq!(from_h, removed);
    }

    #[test]
    fn reduce_and_solve_examples() {
        let b = reduce_and_solve(&gen("path:4")).unwrap();
        assert_eq!(b.sgame_exact, Finite(2));
        assert_eq!((b.dgame_low, b.dgame_high), (Finite(2), Finite(2)));

        let b = reduce_and_solve(&gen("path:5")).unwrap();
        assert_eq!(b.sgame_exact, Infinite);
        assert_eq!((b.dgame_low, b.dgame_high), (Finite(2), Finite(3)));
        assert_eq!(gmb(&gen("path:5")).unwrap(), Finite(2));

        let fig4 = gen("fig4");
        let dec = residual_decompose(&fig4);
        assert!(dec.removed_pairs.is_empty());
        let b = reduce_and_solve(&fig4).unwrap();
        assert_eq!(b.sgame_exact, gmb_prime(&fig4).unwrap());
        assert_eq!(b.dgame_high, gmb(&fig4).unwrap());
    }

    #[test]
    fn matching_transfer_examples() {
        for spec in ["cycle:6", "path:6", "path:5", "spider:2,2,2", "grst:2,2,3"] {
            assert!(check_matching_transfer(&gen(spec)), "{spec}");
        }
        assert_eq!(residual_decompose(&gen("path:6")).residual.order(), 0);
    }

    #[test]
    fn translation_to_residual_indices() {
        let g = generate(&Family::Spider(vec![2, 3])).unwrap();
        let dec = residual_decompose(&g);
        let all = dec.to_residual(g.vertices());
        assert_eq!(all, dec.residual.vertices());
        assert_eq!(dec.to_residual(dec.removed()), VertexSet::EMPTY);
    }
}
