//! Strategies that play one side of a game, and a referee that pits two of
//! them against each other.
//!
//! ```
//! use mbdom::graph::{generate, Family};
//! use mbdom::strategies::{simulate, OptimalStrategy};
//! use mbdom::{GameConfig, Player};
//!
//! let config = GameConfig::d_game(generate(&Family::Cycle(5)).unwrap());
//! let mut dom = OptimalStrategy::new(&config).unwrap();
//! let mut sta = OptimalStrategy::new(&config).unwrap();
//! let record = simulate(&config, &mut dom, &mut sta);
//! assert_eq!(record.winner, Player::Dominator);
//! assert_eq!(record.dominator_moves, Some(2));
//! ```

mod cycle;
mod pairing;
mod referee;
mod tree;

use rand::seq::IteratorRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::engine::{EngineError, GameConfig, GameState, Player, Solver};
use crate::formulas::{find_dominating_matching, FormulaError};

pub use cycle::StallerCycle;
pub use pairing::PairingDominator;
pub use referee::{replay, simulate, Forfeit, GameRecord, RecordError};
pub use tree::StallerTree;

#[derive(Debug, thiserror::Error)]
pub enum StrategyError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no vertex left to select")]
    NoMove,
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
}

/// One selected vertex. `fallback` marks moves made outside the strategy's
/// own pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Decision {
    pub vertex: usize,
    pub fallback: bool,
}

impl Decision {
    pub fn planned(vertex: usize) -> Self {
        Decision { vertex, fallback: false }
    }

    pub fn fallback(vertex: usize) -> Self {
        Decision { vertex, fallback: true }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Move {
    pub player: Player,
    pub vertex: usize,
    pub fallback: bool,
}

pub trait Strategy {
    fn name(&self) -> &str;

    /// Chooses a vertex for the player to move in `state`. `history` lists
    /// every move so far.
    fn next_move(
        &mut self,
        config: &GameConfig,
        state: &GameState,
        history: &[Move],
    ) -> Result<Decision, StrategyError>;
}

/// Plays an optimal move at every turn, lowest index on ties.
pub struct OptimalStrategy {
    solver: Solver,
}

impl OptimalStrategy {
    pub fn new(config: &GameConfig) -> Result<Self, StrategyError> {
        Ok(OptimalStrategy {
            solver: Solver::new(config)?,
        })
    }
}

impl Strategy for OptimalStrategy {
    fn name(&self) -> &str {
        "optimal"
    }

    fn next_move(
        &mut self,
        _config: &GameConfig,
        state: &GameState,
        _history: &[Move],
    ) -> Result<Decision, StrategyError> {
        Ok(Decision::planned(self.solver.optimal_move(state)?))
    }
}

/// Uniformly random available vertex from a seeded generator.
pub struct RandomStrategy {
    rng: ChaCha8Rng,
}

impl RandomStrategy {
    pub fn new(seed: u64) -> Self {
        RandomStrategy {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }
}

impl Strategy for RandomStrategy {
    fn name(&self) -> &str {
        "random"
    }

    fn next_move(
        &mut self,
        _config: &GameConfig,
        state: &GameState,
        _history: &[Move],
    ) -> Result<Decision, StrategyError> {
        state
            .available
            .iter()
            .choose(&mut self.rng)
            .map(Decision::planned)
            .ok_or(StrategyError::NoMove)
    }
}

/// Names accepted by [`by_name`].
pub const STRATEGY_NAMES: [&str; 5] = ["optimal", "random", "pairing", "tree", "cycle"];

/// Builds a strategy for `player` by name. `pairing` searches for a
/// dominating matching, `tree` aims its last move at `target`, `seed` feeds
/// `random`.
pub fn by_name(
    name: &str,
    config: &GameConfig,
    player: Player,
    target: usize,
    seed: u64,
) -> Result<Box<dyn Strategy>, StrategyError> {
    let wrong_side = |side: Player| {
        StrategyError::Precondition(format!("`{name}` plays for {side}, not {player}"))
    };
    match name {
        "optimal" => Ok(Box::new(OptimalStrategy::new(config)?)),
        "random" => Ok(Box::new(RandomStrategy::new(seed))),
        "pairing" if player == Player::Dominator => {
            let pairing = find_dominating_matching(&config.graph)?.ok_or_else(|| {
                StrategyError::Precondition("graph has no dominating matching".into())
            })?;
            Ok(Box::new(PairingDominator::new(&config.graph, pairing)?))
        }
        "tree" if player == Player::Staller => Ok(Box::new(StallerTree::new(&config.graph, target)?)),
        "cycle" if player == Player::Staller => {
            Ok(Box::new(StallerCycle::new(config.graph.order(), config.first)?))
        }
        "pairing" => Err(wrong_side(Player::Dominator)),
        "tree" | "cycle" => Err(wrong_side(Player::Staller)),
        other => Err(StrategyError::Precondition(format!(
            "unknown strategy `{other}`, expected one of {}",
            STRATEGY_NAMES.join(", ")
        ))),
    }
}

/// A vertex Staller can take to leave some undominated vertex with no
/// selectable vertex in its closed neighborhood.
pub(crate) fn killing_move(config: &GameConfig, state: &GameState) -> Option<usize> {
    let g = &config.graph;
    (g.vertices() - state.dominated).iter().find_map(|w| {
        let options = g.closed(w) & state.available;
        (options.len() == 1).then(|| options.first().expect("one option"))
    })
}
