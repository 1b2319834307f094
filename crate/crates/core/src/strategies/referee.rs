use std::fmt;

use super::{Move, Strategy};
use crate::engine::{GameConfig, GameState, Player};
use crate::graph::VertexSet;

/// A strategy that failed to produce a legal move loses the game.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Forfeit {
    pub player: Player,
    pub reason: String,
}

/// Trace and outcome of one refereed game.
///
/// The text form has one line per move (`D x3`, `S x1`, vertex `v` printed as
/// `x{v+1}`, with a trailing `# fallback` where it applies), an optional
/// `FORFEIT` line, and a final `WINNER D <moves>` or `WINNER S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameRecord {
    pub moves: Vec<Move>,
    pub winner: Player,
    /// Dominator's move count at the moment of domination.
    pub dominator_moves: Option<u32>,
    pub final_dominated: VertexSet,
    pub forfeit: Option<Forfeit>,
}

impl GameRecord {
    pub fn fallback_count(&self) -> usize {
        self.moves.iter().filter(|m| m.fallback).count()
    }

    pub fn last_move_of(&self, player: Player) -> Option<usize> {
        self.moves.iter().rev().find(|m| m.player == player).map(|m| m.vertex)
    }
}

impl fmt::Display for GameRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.moves {
            write!(f, "{} x{}", m.player, m.vertex + 1)?;
            if m.fallback {
                f.write_str(" # fallback")?;
            }
            writeln!(f)?;
        }
        if let Some(forfeit) = &self.forfeit {
            writeln!(f, "FORFEIT {} {}", forfeit.player, forfeit.reason)?;
        }
        match self.dominator_moves {
            Some(k) if self.winner == Player::Dominator => writeln!(f, "WINNER D {k}"),
            _ => writeln!(f, "WINNER {}", self.winner),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RecordError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("move {index}: {msg}")]
    Illegal { index: usize, msg: String },
    #[error("moves end before the game does")]
    Incomplete,
    #[error("recorded outcome `{recorded}` differs from the replayed `{replayed}`")]
    Mismatch { recorded: String, replayed: String },
}

/// Referees a game between `dom` and `sta`. Play stops when Dominator's
/// vertices dominate the graph or no vertex is left.
pub fn simulate(config: &GameConfig, dom: &mut dyn Strategy, sta: &mut dyn Strategy) -> GameRecord {
    let mut state = config.initial_state();
    let mut moves = Vec::new();
    let mut dominator_count = 0u32;
    loop {
        if config.is_won(&state) {
            return finish(moves, Player::Dominator, Some(dominator_count), state, None);
        }
        if state.available.is_empty() {
            return finish(moves, Player::Staller, None, state, None);
        }
        let player = state.turn;
        let strategy: &mut dyn Strategy = match player {
            Player::Dominator => &mut *dom,
            Player::Staller => &mut *sta,
        };
        let reason = match strategy.next_move(config, &state, &moves) {
            Ok(d) if state.available.contains(d.vertex) => {
                moves.push(Move {
                    player,
                    vertex: d.vertex,
                    fallback: d.fallback,
                });
                if player == Player::Dominator {
                    dominator_count += 1;
                }
                state = config.play(&state, d.vertex);
                continue;
            }
            Ok(d) => format!("{} chose unavailable vertex x{}", strategy.name(), d.vertex + 1),
            Err(e) => format!("{}: {e}", strategy.name()),
        };
        let forfeit = Forfeit { player, reason };
        return finish(moves, player.other(), None, state, Some(forfeit));
    }
}

fn finish(
    moves: Vec<Move>,
    winner: Player,
    dominator_moves: Option<u32>,
    state: GameState,
    forfeit: Option<Forfeit>,
) -> GameRecord {
    GameRecord {
        moves,
        winner,
        dominator_moves,
        final_dominated: state.dominated,
        forfeit,
    }
}

/// Re-referees a fixed move list and returns the outcome it implies.
pub fn replay(
    config: &GameConfig,
    moves: &[Move],
    forfeit: Option<Forfeit>,
) -> Result<GameRecord, RecordError> {
    let mut state = config.initial_state();
    let mut dominator_count = 0u32;
    for (index, m) in moves.iter().enumerate() {
        let illegal = |msg: String| RecordError::Illegal { index, msg };
        if config.is_won(&state) {
            return Err(illegal("game already won by Dominator".into()));
        }
        if m.player != state.turn {
            return Err(illegal(format!("expected a move by {}", state.turn)));
        }
        if !state.available.contains(m.vertex) {
            return Err(illegal(format!("x{} is not available", m.vertex + 1)));
        }
        if m.player == Player::Dominator {
            dominator_count += 1;
        }
        state = config.play(&state, m.vertex);
    }
    if let Some(f) = forfeit {
        if f.player != state.turn || config.is_won(&state) || state.available.is_empty() {
            return Err(RecordError::Illegal {
                index: moves.len(),
                msg: format!("{} cannot forfeit here", f.player),
            });
        }
        return Ok(finish(moves.to_vec(), f.player.other(), None, state, Some(f)));
    }
    if config.is_won(&state) {
        Ok(finish(moves.to_vec(), Player::Dominator, Some(dominator_count), state, None))
    } else if state.available.is_empty() {
        Ok(finish(moves.to_vec(), Player::Staller, None, state, None))
    } else {
        Err(RecordError::Incomplete)
    }
}

impl GameRecord {
    /// Parses the text form and replays it on `config`, checking that the
    /// recorded winner matches.
    pub fn parse(config: &GameConfig, text: &str) -> Result<GameRecord, RecordError> {
        let mut moves = Vec::new();
        let mut forfeit = None;
        let mut winner_line = None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let err = |msg: &str| RecordError::Parse {
                line,
                msg: msg.to_string(),
            };
            let (body, fallback) = match raw.split_once('#') {
                Some((body, comment)) => (body.trim(), comment.trim() == "fallback"),
                None => (raw.trim(), false),
            };
            if body.is_empty() {
                continue;
            }
            if winner_line.is_some() {
                return Err(err("text after WINNER"));
            }
            if let Some(rest) = body.strip_prefix("FORFEIT ") {
                let (who, reason) = rest.split_once(' ').unwrap_or((rest, ""));
                let player = who.parse().map_err(|_| err("bad player"))?;
                forfeit = Some(Forfeit {
                    player,
                    reason: reason.to_string(),
                });
            } else if let Some(rest) = body.strip_prefix("WINNER ") {
                winner_line = Some(rest.trim().to_string());
            } else {
                let (who, name) = body.split_once(' ').ok_or_else(|| err("expected `<D|S> x<k>`"))?;
                let player = who.parse().map_err(|_| err("bad player"))?;
                let k: usize = name
                    .trim()
                    .strip_prefix('x')
                    .and_then(|k| k.parse().ok())
                    .filter(|&k| k >= 1)
                    .ok_or_else(|| err("bad vertex"))?;
                moves.push(Move {
                    player,
                    vertex: k - 1,
                    fallback,
                });
            }
        }
        let recorded = winner_line.ok_or(RecordError::Parse {
            line: text.lines().count(),
            msg: "missing WINNER line".into(),
        })?;
        let record = replay(config, &moves, forfeit)?;
        let replayed = record.to_string();
        let replayed = replayed
            .lines()
            .last()
            .and_then(|l| l.strip_prefix("WINNER "))
            .unwrap_or_default();
        if replayed != recorded {
            return Err(RecordError::Mismatch {
                recorded,
                replayed: replayed.to_string(),
            });
        }
        Ok(record)
    }
}
