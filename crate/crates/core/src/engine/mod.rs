//! Exact solver for the Maker-Breaker domination game.
//!
//! Dominator and Staller alternately select unselected vertices. Dominator
//! wins once his selections dominate the graph; the value of a position is the
//! number of further Dominator moves needed under optimal play by both
//! players, or [`GameValue::Infinite`] when Staller can prevent domination.
//!
//! Positions are keyed by `(available, dominated, turn)`. Staller's past
//! selections matter only through `available`, Dominator's only through
//! `dominated`, so the key is a sufficient statistic and the move history is
//! never stored.

mod search;
mod value;

use rayon::prelude::*;

use crate::graph::{domination_stats, Graph, GraphError, VertexSet};
use search::{LocalMemo, Memo, Rules, SharedMemo};

pub use value::{GameValue, Player};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("graph has {n} vertices; the solver refuses more than {cap} without an override")]
    TooLarge { n: usize, cap: usize },
    #[error("memo table reached its cap of {0} entries")]
    MemoCapExceeded(usize),
    #[error("no available vertex to move on")]
    NoMove,
    #[error("pre-dominated set {0:?} is not a subset of the vertex set")]
    InvalidPreDominated(VertexSet),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A game to solve: graph, first player, the `S` of `G|S`, pass rules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameConfig {
    pub graph: Graph,
    pub first: Player,
    pub pre_dominated: VertexSet,
    pub staller_may_pass: bool,
    pub dominator_may_pass: bool,
}

impl GameConfig {
    pub fn new(graph: Graph, first: Player) -> Self {
        GameConfig {
            graph,
            first,
            pre_dominated: VertexSet::EMPTY,
            staller_may_pass: false,
            dominator_may_pass: false,
        }
    }

    /// Dominator moves first.
    pub fn d_game(graph: Graph) -> Self {
        GameConfig::new(graph, Player::Dominator)
    }

    /// Staller moves first.
    pub fn s_game(graph: Graph) -> Self {
        GameConfig::new(graph, Player::Staller)
    }

    pub fn with_pre_dominated(mut self, set: VertexSet) -> Result<Self, EngineError> {
        if !set.is_subset(self.graph.vertices()) {
            return Err(EngineError::InvalidPreDominated(set));
        }
        self.pre_dominated = set;
        Ok(self)
    }

    pub fn with_passes(mut self, dominator: bool, staller: bool) -> Self {
        self.dominator_may_pass = dominator;
        self.staller_may_pass = staller;
        self
    }

    pub fn initial_state(&self) -> GameState {
        GameState {
            available: self.graph.vertices(),
            dominated: self.pre_dominated,
            turn: self.first,
            after_pass: false,
        }
    }

    /// State after the player to move selects `v`.
    pub fn play(&self, state: &GameState, v: usize) -> GameState {
        let mut next = *state;
        next.available.remove(v);
        if state.turn == Player::Dominator {
            next.dominated |= self.graph.closed(v);
        }
        next.turn = state.turn.other();
        next.after_pass = false;
        next
    }

    pub fn is_won(&self, state: &GameState) -> bool {
        state.dominated == self.graph.vertices()
    }
}

/// A position: unselected vertices, dominated vertices, player to move.
///
/// `after_pass` is set when the previous action was a pass; two passes in a
/// row are not allowed, so pass-enabled games still terminate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GameState {
    pub available: VertexSet,
    pub dominated: VertexSet,
    pub turn: Player,
    pub after_pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverOptions {
    /// Graphs above this order are refused unless `allow_oversize` is set.
    pub max_vertices: usize,
    pub allow_oversize: bool,
    /// Hard cap on memo entries; reaching it is an error, never an eviction.
    pub memo_cap: usize,
    pub memoize: bool,
    /// Worker threads for root-level moves. `1` keeps everything sequential.
    pub jobs: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            max_vertices: 24,
            allow_oversize: false,
            memo_cap: 50_000_000,
            memoize: true,
            jobs: 1,
        }
    }
}

/// A solver bound to one configuration. Its memo persists across queries, so
/// asking for values or optimal moves of many positions of the same game is
/// cheap.
pub struct Solver {
    rules: Rules,
    initial: GameState,
    memo: LocalMemo,
}

impl Solver {
    pub fn new(config: &GameConfig) -> Result<Self, EngineError> {
        Solver::with_options(config, &SolverOptions::default())
    }

    pub fn with_options(config: &GameConfig, opts: &SolverOptions) -> Result<Self, EngineError> {
        let n = config.graph.order();
        if n > opts.max_vertices && !opts.allow_oversize {
            return Err(EngineError::TooLarge {
                n,
                cap: opts.max_vertices,
            });
        }
        if !config.pre_dominated.is_subset(config.graph.vertices()) {
            return Err(EngineError::InvalidPreDominated(config.pre_dominated));
        }
        Ok(Solver {
            rules: Rules {
                closed: config.graph.closed_neighborhoods().iter().map(|s| s.bits()).collect(),
                full: config.graph.vertices().bits(),
                dominator_may_pass: config.dominator_may_pass,
                staller_may_pass: config.staller_may_pass,
                memoize: opts.memoize,
                memo_cap: opts.memo_cap,
            },
            initial: config.initial_state(),
            memo: LocalMemo::default(),
        })
    }

    pub fn root_value(&mut self) -> Result<GameValue, EngineError> {
        let initial = self.initial;
        self.value(&initial)
    }

    pub fn value(&mut self, state: &GameState) -> Result<GameValue, EngineError> {
        search::value(
            &self.rules,
            &mut self.memo,
            state.available.bits(),
            state.dominated.bits(),
            state.turn,
            state.after_pass,
        )
    }

    /// Lowest-indexed vertex achieving the optimal value for the player to
    /// move: Dominator minimizes, Staller maximizes.
    pub fn optimal_move(&mut self, state: &GameState) -> Result<usize, EngineError> {
        let mut best: Option<(usize, GameValue)> = None;
        for v in state.available.iter() {
            let child = self.child_value(state, v)?;
            let better = match (best, state.turn) {
                (None, _) => true,
                (Some((_, b)), Player::Dominator) => child < b,
                (Some((_, b)), Player::Staller) => child > b,
            };
            if better {
                best = Some((v, child));
            }
        }
        best.map(|(v, _)| v).ok_or(EngineError::NoMove)
    }

    /// Value of the position after the player to move selects `v`, counting
    /// that move if it is Dominator's.
    pub fn child_value(&mut self, state: &GameState, v: usize) -> Result<GameValue, EngineError> {
        let mut available = state.available.bits() & !(1 << v);
        let (dominated, bonus) = match state.turn {
            Player::Dominator => (state.dominated.bits() | self.rules.closed[v], 1),
            Player::Staller => (state.dominated.bits(), 0),
        };
        available &= self.rules.full;
        let child = search::value(
            &self.rules,
            &mut self.memo,
            available,
            dominated,
            state.turn.other(),
            false,
        )?;
        Ok(child + bonus)
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }
}

pub fn solve(config: &GameConfig) -> Result<GameValue, EngineError> {
    solve_with(config, &SolverOptions::default())
}

/// Solves `config`. With `jobs > 1` the root moves are evaluated on a thread
/// pool sharing one concurrent memo.
pub fn solve_with(config: &GameConfig, opts: &SolverOptions) -> Result<GameValue, EngineError> {
    let solver = Solver::with_options(config, opts)?;
    if opts.jobs <= 1 {
        let mut solver = solver;
        return solver.root_value();
    }
    let rules = solver.rules;
    let start = solver.initial;
    if start.dominated.bits() == rules.full || start.available.is_empty() {
        return search::value(
            &rules,
            &mut LocalMemo::default(),
            start.available.bits(),
            start.dominated.bits(),
            start.turn,
            false,
        );
    }
    let shared = SharedMemo::new();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .expect("thread pool");
    let children: Vec<Result<GameValue, EngineError>> = pool.install(|| {
        start
            .available
            .iter()
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|v| {
                let mut memo = &shared;
                let (dominated, bonus) = match start.turn {
                    Player::Dominator => (start.dominated.bits() | rules.closed[v], 1),
                    Player::Staller => (start.dominated.bits(), 0),
                };
                let child = search::value(
                    &rules,
                    &mut memo,
                    start.available.bits() & !(1 << v),
                    dominated,
                    start.turn.other(),
                    false,
                )?;
                Ok(child + bonus)
            })
            .collect()
    });
    let mut values = Vec::with_capacity(children.len());
    for c in children {
        values.push(c?);
    }
    let mut best = match start.turn {
        Player::Dominator => values.iter().copied().min(),
        Player::Staller => values.iter().copied().max(),
    }
    .expect("at least one root move");
    let may_pass = match start.turn {
        Player::Dominator => rules.dominator_may_pass,
        Player::Staller => rules.staller_may_pass,
    };
    if may_pass {
        let mut memo = &shared;
        let skip = search::value(
            &rules,
            &mut memo,
            start.available.bits(),
            start.dominated.bits(),
            start.turn.other(),
            true,
        )?;
        best = match start.turn {
            Player::Dominator => best.min(skip),
            Player::Staller => best.max(skip),
        };
    }
    Ok(best)
}

/// γ_MB: Dominator starts.
pub fn gmb(g: &Graph) -> Result<GameValue, EngineError> {
    solve(&GameConfig::d_game(g.clone()))
}

/// γ'_MB: Staller starts.
pub fn gmb_prime(g: &Graph) -> Result<GameValue, EngineError> {
    solve(&GameConfig::s_game(g.clone()))
}

pub fn optimal_move(config: &GameConfig, state: &GameState) -> Result<usize, EngineError> {
    Solver::new(config)?.optimal_move(state)
}

/// Domination number, both game values and the elementary bounds between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub n: usize,
    pub gamma: usize,
    pub gmb: GameValue,
    pub gmb_prime: GameValue,
    /// `1 <= gmb <= ceil(n/2)` when finite and `n >= 1`.
    pub d_bound_ok: bool,
    /// `1 <= gmb' <= floor(n/2)` when finite and `n >= 1`.
    pub s_bound_ok: bool,
    /// `gamma <= gmb <= gmb'`.
    pub chain_ok: bool,
}

impl BoundsReport {
    pub fn all_ok(&self) -> bool {
        self.d_bound_ok && self.s_bound_ok && self.chain_ok
    }
}

pub fn verify_basic_bounds(g: &Graph) -> Result<BoundsReport, EngineError> {
    let n = g.order();
    let gamma = domination_stats(g)?.gamma;
    let d = gmb(g)?;
    let s = gmb_prime(g)?;
    let within = |v: GameValue, hi: usize| match v {
        GameValue::Finite(k) => n == 0 || (1..=hi).contains(&(k as usize)),
        GameValue::Infinite => true,
    };
    Ok(BoundsReport {
        n,
        gamma,
        gmb: d,
        gmb_prime: s,
        d_bound_ok: within(d, n.div_ceil(2)),
        s_bound_ok: within(s, n / 2),
        chain_ok: GameValue::Finite(gamma as u32) <= d && d <= s,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;
    use GameValue::*;

    fn gen(spec: &str) -> Graph {
        generate(&spec.parse().unwrap()).unwrap()
    }

    #[test]
    fn solve_examples() {
        assert_eq!(gmb(&gen("cycle:5")).unwrap(), Finite(2));
        assert_eq!(gmb_prime(&gen("path:3")).unwrap(), Infinite);
        assert_eq!(gmb(&gen("complete:2")).unwrap(), Finite(1));
        let fig4 = gen("fig4");
        let u = fig4.vertex_by_label("u").unwrap();
        let cfg = GameConfig::s_game(fig4.clone())
            .with_pre_dominated(VertexSet::singleton(u))
            .unwrap();
        assert_eq!(solve(&cfg).unwrap(), Finite(1));
        assert_eq!(gmb(&fig4).unwrap(), Finite(2));
    }

    #[test]
    fn wrappers() {
        let g = gen("grst:2,2,3");
        assert_eq!(gmb(&g).unwrap(), Finite(2));
        assert_eq!(gmb_prime(&g).unwrap(), Finite(3));
        let g = gen("gt:3");
        assert_eq!(gmb(&g).unwrap(), Finite(1));
        assert_eq!(gmb_prime(&g).unwrap(), Finite(3));
        let empty = Graph::empty(0).unwrap();
        assert_eq!(gmb(&empty).unwrap(), Finite(0));
        assert_eq!(gmb_prime(&empty).unwrap(), Finite(0));
    }

    #[test]
    fn fully_pre_dominated_is_zero() {
        let g = gen("cycle:5");
        let cfg = GameConfig::s_game(g.clone()).with_pre_dominated(g.vertices()).unwrap();
        assert_eq!(solve(&cfg).unwrap(), Finite(0));
    }

    #[test]
    fn k1_values() {
        let k1 = gen("path:1");
        assert_eq!(gmb(&k1).unwrap(), Finite(1));
        assert_eq!(gmb_prime(&k1).unwrap(), Infinite);
    }

    #[test]
    fn optimal_moves() {
        let p3 = gen("path:3");
        let cfg = GameConfig::d_game(p3);
        assert_eq!(optimal_move(&cfg, &cfg.initial_state()).unwrap(), 1);
        let star = gen("star:5");
        let cfg = GameConfig::d_game(star);
        assert_eq!(optimal_move(&cfg, &cfg.initial_state()).unwrap(), 0);

        // C5 after d1 = x1, s1 = x4: Dominator must answer next to x4.
        let cfg = GameConfig::d_game(gen("cycle:5"));
        let state = cfg.play(&cfg.play(&cfg.initial_state(), 0), 3);
        let mv = optimal_move(&cfg, &state).unwrap();
        assert!(mv == 2 || mv == 4, "got {mv}");
        let mut solver = Solver::new(&cfg).unwrap();
        let best = solver.child_value(&state, mv).unwrap();
        assert_eq!(best, Finite(1));
        assert!(solver.child_value(&state, 1).unwrap() > best);
        let done = GameState {
            available: VertexSet::EMPTY,
            ..cfg.initial_state()
        };
        assert_eq!(optimal_move(&cfg, &done), Err(EngineError::NoMove));
    }

    #[test]
    fn basic_bounds() {
        let k1 = gen("path:1");
        let k2 = gen("complete:2");
        let g = k1.disjoint_union(&k2).unwrap().disjoint_union(&k2).unwrap();
        let r = verify_basic_bounds(&g).unwrap();
        assert_eq!(r.gmb, Finite(3));
        assert!(r.all_ok());

        let r = verify_basic_bounds(&gen("cycle:6")).unwrap();
        assert_eq!((r.gamma, r.gmb, r.gmb_prime), (2, Finite(3), Finite(3)));
        assert!(r.all_ok());

        let r = verify_basic_bounds(&k1).unwrap();
        assert_eq!(r.gmb_prime, Infinite);
        assert!(r.all_ok());
    }

    #[test]
    fn caps() {
        let big = gen("star:24");
        assert!(matches!(gmb(&big), Err(EngineError::TooLarge { n: 25, cap: 24 })));
        let opts = SolverOptions {
            allow_oversize: true,
            ..Default::default()
        };
        assert_eq!(solve_with(&GameConfig::s_game(big.clone()), &opts).unwrap(), Infinite);
        assert_eq!(solve_with(&GameConfig::d_game(big), &opts).unwrap(), Finite(1));

        let opts = SolverOptions {
            memo_cap: 3,
            ..Default::default()
        };
        let cfg = GameConfig::s_game(gen("cycle:10"));
        assert_eq!(solve_with(&cfg, &opts), Err(EngineError::MemoCapExceeded(3)));
    }

    #[test]
    fn parallel_matches_sequential() {
        let opts = SolverOptions {
            jobs: 4,
            ..Default::default()
        };
        for spec in ["cycle:9", "grst:2,3,4", "double_star:2,2", "fig4"] {
            for first in [Player::Dominator, Player::Staller] {
                let cfg = GameConfig::new(gen(spec), first);
                assert_eq!(solve_with(&cfg, &opts).unwrap(), solve(&cfg).unwrap(), "{spec}");
                let cfg = cfg.with_passes(true, true);
                assert_eq!(solve_with(&cfg, &opts).unwrap(), solve(&cfg).unwrap(), "{spec}");
            }
        }
    }

    #[test]
    fn pre_dominated_must_be_subset() {
        let cfg = GameConfig::d_game(gen("path:3"));
        assert!(cfg.with_pre_dominated(VertexSet::singleton(5)).is_err());
    }
}
