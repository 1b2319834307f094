//! Exact solving, residual reduction and strategy simulation for the
//! Maker-Breaker domination game.
pub mod engine;
pub mod formulas;
pub mod graph;
pub mod residual;
pub mod strategies;
pub mod verify;

pub use engine::{gmb, gmb_prime, solve, GameConfig, GameState, GameValue, Player};
pub use graph::{Graph, VertexSet};

// Runs the guide's code blocks as doc-tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/solving.md")]
    mod solving {}
    #[doc = include_str!("../../../book/src/residual.md")]
    mod residual {}
    #[doc = include_str!("../../../book/src/formulas.md")]
    mod formulas {}
    #[doc = include_str!("../../../book/src/strategies.md")]
    mod strategies {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
