use super::{Decision, Move, Strategy, StrategyError};
use crate::engine::{GameConfig, GameState, Player};
use crate::formulas::{pairing_check, Pairing};
use crate::graph::{Graph, VertexSet};

/// Dominator answers every Staller move inside an untouched pair with its
/// partner and otherwise opens the lowest pair he has not yet entered.
pub struct PairingDominator {
    pairing: Pairing,
}

impl PairingDominator {
    /// Fails unless `pairing` is a pairing dominating set of `g`.
    pub fn new(g: &Graph, pairing: Pairing) -> Result<Self, StrategyError> {
        if !pairing_check(g, &pairing)? {
            return Err(StrategyError::Precondition(
                "pairs do not dominate the graph".into(),
            ));
        }
        Ok(PairingDominator { pairing })
    }

    pub fn pairing(&self) -> &Pairing {
        &self.pairing
    }
}

impl Strategy for PairingDominator {
    fn name(&self) -> &str {
        "pairing"
    }

    fn next_move(
        &mut self,
        _config: &GameConfig,
        state: &GameState,
        history: &[Move],
    ) -> Result<Decision, StrategyError> {
        let mine: VertexSet = history
            .iter()
            .filter(|m| m.player == Player::Dominator)
            .map(|m| m.vertex)
            .collect();
        let entered = |(u, v): (usize, usize)| mine.contains(u) || mine.contains(v);

        if let Some(last) = history.last().filter(|m| m.player == Player::Staller) {
            if let Some((i, partner)) = self.pairing.partner(last.vertex) {
                if !entered(self.pairing.pairs()[i]) && state.available.contains(partner) {
                    return Ok(Decision::planned(partner));
                }
            }
        }
        let open = self
            .pairing
            .pairs()
            .iter()
            .filter(|&&pair| !entered(pair))
            .find_map(|&(u, v)| {
                [u.min(v), u.max(v)]
                    .into_iter()
                    .find(|&w| state.available.contains(w))
            });
        match open {
            Some(v) => Ok(Decision::planned(v)),
            None => state
                .available
                .first()
                .map(Decision::fallback)
                .ok_or(StrategyError::NoMove),
        }
    }
}
