use super::{killing_move, Decision, Move, Strategy, StrategyError};
use crate::engine::{GameConfig, GameState, Player, Solver};

/// Staller's strategy on `C_n` (vertices `0..n` in cyclic order).
///
/// In the S-game she opens on `x1` and then walks in steps of two away from
/// Dominator's first reply, so that every step leaves the vertex she skipped
/// with a single option. In the D-game she answers Dominator's first move at
/// distance three. From then on, with `s` her last move and `dir` her
/// direction: a reply on `s - dir` is met with `s + 2 dir`, a reply on
/// `s + dir` with `s + 4 dir` (restarting the distance-three pattern), and
/// any other reply with `s + 2 dir`. When that vertex is taken she falls
/// back to an optimal move, flagged in the record.
pub struct StallerCycle {
    n: usize,
    first: Player,
    solver: Option<Solver>,
}

impl StallerCycle {
    pub fn new(n: usize, first: Player) -> Result<Self, StrategyError> {
        if n < 3 {
            return Err(StrategyError::Precondition(format!(
                "cycle strategy needs n >= 3, got {n}"
            )));
        }
        Ok(StallerCycle {
            n,
            first,
            solver: None,
        })
    }

    fn step(&self, v: usize, k: i64) -> usize {
        (v as i64 + k).rem_euclid(self.n as i64) as usize
    }

    fn pattern_move(&self, history: &[Move]) -> Option<usize> {
        let last_of = |p: Player| history.iter().rev().find(|m| m.player == p).map(|m| m.vertex);
        let Some(s) = last_of(Player::Staller) else {
            return match self.first {
                Player::Staller => Some(0),
                Player::Dominator => last_of(Player::Dominator).map(|d| self.step(d, 3)),
            };
        };
        let dir = match self.first {
            Player::Staller if history.get(1).map(|m| m.vertex) == Some(self.step(0, 1)) => -1,
            _ => 1,
        };
        let d = last_of(Player::Dominator)?;
        if d == self.step(s, dir) {
            Some(self.step(s, 4 * dir))
        } else {
            Some(self.step(s, 2 * dir))
        }
    }
}

impl Strategy for StallerCycle {
    fn name(&self) -> &str {
        "cycle"
    }

    fn next_move(
        &mut self,
        config: &GameConfig,
        state: &GameState,
        history: &[Move],
    ) -> Result<Decision, StrategyError> {
        if config.graph.order() != self.n {
            return Err(StrategyError::Precondition(format!(
                "strategy built for C{} used on a graph of order {}",
                self.n,
                config.graph.order()
            )));
        }
        if let Some(v) = killing_move(config, state) {
            return Ok(Decision::planned(v));
        }
        if let Some(v) = self.pattern_move(history).filter(|&v| state.available.contains(v)) {
            return Ok(Decision::planned(v));
        }
        if self.solver.is_none() {
            self.solver = Some(Solver::new(config)?);
        }
        let solver = self.solver.as_mut().expect("solver initialised above");
        Ok(Decision::fallback(solver.optimal_move(state)?))
    }
}
