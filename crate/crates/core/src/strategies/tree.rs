use std::collections::VecDeque;

use super::{killing_move, Decision, Move, Strategy, StrategyError};
use crate::engine::{GameConfig, GameState};
use crate::graph::{has_perfect_matching, Graph, VertexSet};

/// Staller's S-game strategy on a tree with a perfect matching that makes
/// Dominator select half the vertices and ends with Staller taking `target`.
///
/// The move order is fixed up front. Peel a deepest leaf `x` (with support
/// `y` and `y`'s other neighbor `z`) off the tree rooted at its lowest
/// vertex. If the target is outside `{x, y}`, Staller plays `y` and continues
/// on the rest; otherwise she first plays the rest with `z` as its target and
/// then plays the target. During play, a move that leaves some undominated
/// vertex without options always takes precedence.
pub struct StallerTree {
    plan: Vec<usize>,
    target: usize,
}

impl StallerTree {
    pub fn new(t: &Graph, target: usize) -> Result<Self, StrategyError> {
        if t.order() == 0 || !t.is_tree() || !has_perfect_matching(t) {
            return Err(StrategyError::Precondition(
                "tree strategy needs a tree with a perfect matching".into(),
            ));
        }
        if target >= t.order() {
            return Err(StrategyError::Precondition(format!(
                "target {target} is not a vertex of the tree"
            )));
        }
        Ok(StallerTree {
            plan: plan(t, t.vertices(), target),
            target,
        })
    }

    /// Staller's moves in order, assuming Dominator answers each one.
    pub fn plan(&self) -> &[usize] {
        &self.plan
    }

    pub fn target(&self) -> usize {
        self.target
    }
}

fn plan(t: &Graph, alive: VertexSet, target: usize) -> Vec<usize> {
    if alive.len() == 2 {
        return vec![target];
    }
    let (x, y) = deepest_leaf(t, alive);
    let rest = alive.without(x).without(y);
    if target != x && target != y {
        let mut moves = vec![y];
        moves.extend(plan(t, rest, target));
        moves
    } else {
        let z = (t.neighbors(y) & rest).first().expect("support has a second neighbor");
        let mut moves = plan(t, rest, z);
        moves.push(target);
        moves
    }
}

/// Deepest leaf from the lowest alive vertex (lowest index on ties) and its
/// neighbor.
fn deepest_leaf(t: &Graph, alive: VertexSet) -> (usize, usize) {
    let root = alive.first().expect("non-empty tree");
    let mut depth = vec![usize::MAX; t.order()];
    depth[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for w in (t.neighbors(v) & alive).iter() {
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                queue.push_back(w);
            }
        }
    }
    let x = alive
        .iter()
        .filter(|&v| (t.neighbors(v) & alive).len() == 1)
        .max_by(|&a, &b| depth[a].cmp(&depth[b]).then(b.cmp(&a)))
        .expect("a tree with two or more vertices has a leaf");
    let y = (t.neighbors(x) & alive).first().expect("leaf has a neighbor");
    (x, y)
}

impl Strategy for StallerTree {
    fn name(&self) -> &str {
        "tree"
    }

    fn next_move(
        &mut self,
        config: &GameConfig,
        state: &GameState,
        _history: &[Move],
    ) -> Result<Decision, StrategyError> {
        if let Some(v) = killing_move(config, state) {
            return Ok(Decision::planned(v));
        }
        if let Some(&v) = self.plan.iter().find(|&&v| state.available.contains(v)) {
            return Ok(Decision::planned(v));
        }
        state
            .available
            .first()
            .map(Decision::fallback)
            .ok_or(StrategyError::NoMove)
    }
}
