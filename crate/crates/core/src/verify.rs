//! Property suites that cross-check the closed forms, the residual reduction
//! and the strategies against the exact solver.
//!
//! Each suite runs a list of named checks over a pool of graphs and records
//! every counterexample in edge-list form. Random pools are seeded, so a run
//! is reproducible from `(suite, max_n, seed)`.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::engine::{
    gmb, gmb_prime, solve, solve_with, verify_basic_bounds, EngineError, GameConfig, GameValue,
    Player, SolverOptions,
};
use crate::formulas::{
    cycle_values, erdos_selfridge, find_dominating_matching, gamma2_witness, pairing_check,
    tree_values, union_bounds, FormulaError, Pairing,
};
use crate::graph::enumerate::{
    for_each_labeled_graph, for_each_prufer_tree, nonisomorphic_trees, random_connected_graph,
    random_subset, random_tree,
};
use crate::graph::{
    are_isomorphic, domination_stats, generate, has_perfect_matching, perfect_matchings, Family,
    Graph, GraphError, VertexSet,
};
use crate::residual::{
    check_matching_transfer, is_residual_fixpoint, reduce_and_solve, residual_decompose,
    residual_decompose_random,
};
use crate::strategies::{
    replay, simulate, GameRecord, OptimalStrategy, PairingDominator, RandomStrategy, StallerCycle,
    StallerTree, StrategyError,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Bounds,
    Trees,
    Cycles,
    Residual,
    Union,
    Lemmas,
    Strategies,
    Gamma2,
    Realization,
    Es,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Bounds,
        Suite::Trees,
        Suite::Cycles,
        Suite::Residual,
        Suite::Union,
        Suite::Lemmas,
        Suite::Strategies,
        Suite::Gamma2,
        Suite::Realization,
        Suite::Es,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bounds => "bounds",
            Suite::Trees => "trees",
            Suite::Cycles => "cycles",
            Suite::Residual => "residual",
            Suite::Union => "union",
            Suite::Lemmas => "lemmas",
            Suite::Strategies => "strategies",
            Suite::Gamma2 => "gamma2",
            Suite::Realization => "realization",
            Suite::Es => "es",
        }
    }

    /// Largest order swept when `--max-n` is not given.
    pub fn default_max_n(self) -> usize {
        match self {
            Suite::Cycles => 14,
            Suite::Trees | Suite::Residual => 11,
            Suite::Strategies => 12,
            _ => 10,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                format!("unknown suite `{s}`, expected one of {}", names.join(", "))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_n: Option<usize>,
    pub seed: u64,
    /// Size of each random pool.
    pub instances: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_n: None,
            seed: 0,
            instances: 50,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Strategy(#[from] StrategyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl VerifyError {
    /// True when the run stopped on a solver or enumeration cap.
    pub fn is_resource_cap(&self) -> bool {
        matches!(
            self,
            VerifyError::Engine(EngineError::MemoCapExceeded(_) | EngineError::TooLarge { .. })
                | VerifyError::Formula(FormulaError::Graph(GraphError::CapExceeded { .. }))
                | VerifyError::Graph(GraphError::CapExceeded { .. })
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub detail: String,
    pub graph: Graph,
}

/// One named property with the number of instances it was checked on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub instances: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl Check {
    fn new(name: &str) -> Self {
        Check {
            name: name.to_string(),
            instances: 0,
            counterexamples: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, g: &Graph, detail: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.counterexamples.push(Counterexample {
                detail: detail(),
                graph: g.clone(),
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub max_n: usize,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite={} max_n={} seed={}", self.suite, self.max_n, self.seed)?;
        for c in &self.checks {
            writeln!(
                f,
                "check={} instances={} failures={}",
                c.name,
                c.instances,
                c.counterexamples.len()
            )?;
            for ce in &c.counterexamples {
                writeln!(f, "counterexample check={} detail={}", c.name, ce.detail)?;
                for line in ce.graph.to_edge_list().lines() {
                    writeln!(f, "  {line}")?;
                }
            }
        }
        writeln!(f, "result={}", if self.passed() { "pass" } else { "fail" })
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<SuiteReport, VerifyError> {
    let max_n = opts.max_n.unwrap_or(suite.default_max_n());
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let ctx = Ctx {
        max_n,
        instances: opts.instances,
    };
    let checks = match suite {
        Suite::Bounds => bounds(&ctx, &mut rng)?,
        Suite::Trees => trees(&ctx)?,
        Suite::Cycles => cycles(&ctx)?,
        Suite::Residual => residual(&ctx, &mut rng)?,
        Suite::Union => union(&ctx, &mut rng)?,
        Suite::Lemmas => lemmas(&ctx, &mut rng)?,
        Suite::Strategies => strategies(&ctx, &mut rng)?,
        Suite::Gamma2 => gamma2(&ctx, &mut rng)?,
        Suite::Realization => vec![realization()?],
        Suite::Es => es(&ctx, &mut rng)?,
    };
    Ok(SuiteReport {
        suite,
        max_n,
        seed: opts.seed,
        checks,
    })
}

struct Ctx {
    max_n: usize,
    instances: usize,
}

type Checks = Result<Vec<Check>, VerifyError>;

fn gen(family: Family) -> Graph {
    generate(&family).expect("fixed family parameters are valid")
}

fn values(g: &Graph) -> Result<(GameValue, GameValue), EngineError> {
    Ok((gmb(g)?, gmb_prime(g)?))
}

/// Connected graphs with orders in `min_n..=max_n` and mixed densities.
fn random_pool(rng: &mut ChaCha8Rng, count: usize, min_n: usize, max_n: usize) -> Vec<Graph> {
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min_n..=max_n.max(min_n));
            let p = rng.gen_range(0.0..0.6);
            random_connected_graph(n, p, rng)
        })
        .collect()
}

/// Named graphs used across suites.
fn family_pool(max_n: usize) -> Vec<Graph> {
    let families = [
        Family::Path(2),
        Family::Path(3),
        Family::Path(5),
        Family::Cycle(4),
        Family::Cycle(6),
        Family::Star(3),
        Family::Complete(4),
        Family::Spider(vec![2, 2, 2]),
        Family::DoubleStar(2, 2),
        Family::Grst(2, 2, 3),
        Family::Gt(3),
        Family::Xnm(2, 1),
        Family::Yk(3),
        Family::Fig4,
    ];
    families
        .into_iter()
        .map(gen)
        .filter(|g| g.order() <= max_n)
        .collect()
}

fn bounds(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Checks {
    let mut elementary = Check::new("elementary-bounds");
    let mut memo = Check::new("memo-soundness");
    let mut pool = family_pool(ctx.max_n);
    pool.extend(random_pool(rng, ctx.instances, 1, ctx.max_n));
    let k1_k2_k2 = Graph::from_edges(5, &[(1, 2), (3, 4)]).expect("valid edges");
    pool.push(k1_k2_k2.clone());
    for g in &pool {
        let r = verify_basic_bounds(g)?;
        elementary.record(r.all_ok(), g, || format!("{r:?}"));
    }
    let mut tight = Check::new("upper-bound-tight");
    let v = gmb(&k1_k2_k2)?;
    tight.record(v == GameValue::Finite(3), &k1_k2_k2, || format!("gmb={v}"));

    let plain = SolverOptions::default();
    let no_memo = SolverOptions {
        memoize: false,
        ..SolverOptions::default()
    };
    for g in random_pool(rng, ctx.instances, 1, ctx.max_n.min(10)) {
        for first in [Player::Dominator, Player::Staller] {
            let config = GameConfig::new(g.clone(), first);
            let a = solve_with(&config, &plain)?;
            let b = solve_with(&config, &plain)?;
            let c = solve_with(&config, &no_memo)?;
            memo.record(a == b && b == c, &g, || format!("{first}: {a} {b} {c}"));
        }
    }
    Ok(vec![elementary, tight, memo])
}

fn trees(ctx: &Ctx) -> Checks {
    let mut classes = Check::new("tree-formula");
    for n in 1..=ctx.max_n {
        for t in nonisomorphic_trees(n) {
            let formula = tree_values(&t)?;
            let engine = values(&t)?;
            classes.record(formula == engine, &t, || format!("formula={formula:?} engine={engine:?}"));
        }
    }
    // Every labeled tree for the smaller orders.
    let mut labeled = Check::new("tree-formula-prufer");
    let mut result = Ok(());
    for n in 1..=ctx.max_n.min(8) {
        for_each_prufer_tree(n, |t| {
            if result.is_err() {
                return;
            }
            match (tree_values(t), values(t)) {
                (Ok(formula), Ok(engine)) => labeled.record(formula == engine, t, || {
                    format!("formula={formula:?} engine={engine:?}")
                }),
                (Err(e), _) => result = Err(VerifyError::from(e)),
                (_, Err(e)) => result = Err(VerifyError::from(e)),
            }
        });
    }
    result?;
    Ok(vec![classes, labeled])
}

fn cycles(ctx: &Ctx) -> Checks {
    let mut check = Check::new("cycle-values");
    for n in 3..=ctx.max_n {
        let c = gen(Family::Cycle(n));
        let formula = cycle_values(n)?;
        let engine = values(&c)?;
        check.record(formula == engine, &c, || format!("n={n} engine={engine:?}"));
    }
    Ok(vec![check])
}

/// `fig4` with trees that have perfect matchings hung off it, one of them at
/// the pendant vertex `u`.
pub fn fig4_with_matching_trees() -> Vec<Graph> {
    let base = gen(Family::Fig4);
    let u = base.vertex_by_label("u").expect("fig4 labels u");
    // (attachment vertex in G, tree, tree vertex joined to it)
    let attachments: [&[(usize, usize, usize)]; 5] = [
        &[(u, 2, 0)],
        &[(u, 4, 0)],
        &[(u, 4, 1)],
        &[(u, 2, 0), (0, 2, 0)],
        &[(u, 2, 0), (3, 4, 0)],
    ];
    attachments
        .iter()
        .map(|list| {
            let mut g = base.clone();
            for &(at, path_len, joint) in list.iter() {
                let offset = g.order();
                g = g.disjoint_union(&gen(Family::Path(path_len))).expect("within cap");
                g.add_edge(at, offset + joint).expect("valid edge");
            }
            g
        })
        .collect()
}

fn residual(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Checks {
    let mut equality = Check::new("sgame-equality");
    let mut sandwich = Check::new("dgame-sandwich");
    let mut fixpoint = Check::new("fixpoint");
    let mut unique_matching = Check::new("unique-matching-of-h");
    let mut attained = Check::new("bounds-attained");

    let mut pool: Vec<Graph> = (1..=ctx.max_n).flat_map(nonisomorphic_trees).collect();
    pool.extend((0..ctx.instances).map(|_| {
        let n = rng.gen_range(2..=12);
        let p = rng.gen_range(0.0..0.3);
        random_connected_graph(n, p, rng)
    }));
    for g in &pool {
        let b = reduce_and_solve(g)?;
        let (d, s) = values(g)?;
        equality.record(b.sgame_exact == s, g, || format!("sgame_exact={} gmb'={s}", b.sgame_exact));
        sandwich.record(b.dgame_low <= d && d <= b.dgame_high, g, || {
            format!("[{}, {}] gmb={d}", b.dgame_low, b.dgame_high)
        });
        let dec = residual_decompose(g);
        let again = residual_decompose(&dec.residual);
        fixpoint.record(
            again.removed_pairs.is_empty() && is_residual_fixpoint(&dec.residual),
            g,
            || format!("residual still reduces by {:?}", again.removed_pairs),
        );
        if dec.removed_order() <= 12 {
            let (h, map) = dec.removed_forest(g);
            let matchings = perfect_matchings(&h, 2);
            let ok = is_forest(&h)
                && matchings.len() == 1
                && normalized(matchings[0].iter().map(|&(a, b)| (map[a], map[b])))
                    == normalized(dec.removed_pairs.iter().copied());
            unique_matching.record(ok, g, || format!("H has {} perfect matchings", matchings.len()));
        }
    }

    let p5 = gen(Family::Path(5));
    let b = reduce_and_solve(&p5)?;
    let d = gmb(&p5)?;
    attained.record(d == b.dgame_low, &p5, || format!("P5 gmb={d} low={}", b.dgame_low));
    let p4 = gen(Family::Path(4));
    let b = reduce_and_solve(&p4)?;
    let d = gmb(&p4)?;
    attained.record(d == b.dgame_high, &p4, || format!("P4 gmb={d} high={}", b.dgame_high));
    for g in fig4_with_matching_trees() {
        let b = reduce_and_solve(&g)?;
        let d = gmb(&g)?;
        attained.record(d == b.dgame_low && b.dgame_low < b.dgame_high, &g, || {
            format!("gmb={d} range=[{}, {}]", b.dgame_low, b.dgame_high)
        });
    }
    Ok(vec![equality, sandwich, fixpoint, unique_matching, attained])
}

fn is_forest(g: &Graph) -> bool {
    let mut seen = VertexSet::EMPTY;
    let mut components = 0;
    for v in g.vertices() {
        if !seen.contains(v) {
            seen |= g.component_of(v);
            components += 1;
        }
    }
    g.edge_count() + components == g.order()
}

fn normalized(pairs: impl Iterator<Item = (usize, usize)>) -> Vec<(usize, usize)> {
    let mut v: Vec<(usize, usize)> = pairs.map(|(a, b)| (a.min(b), a.max(b))).collect();
    v.sort_unstable();
    v
}

fn union(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Checks {
    let mut brackets = Check::new("union-brackets");
    for _ in 0..30 {
        let g = random_pool(rng, 1, 1, ctx.max_n.min(7)).remove(0);
        let h = random_pool(rng, 1, 1, ctx.max_n.min(7)).remove(0);
        let (gd, gs) = values(&g)?;
        let (hd, hs) = values(&h)?;
        let u = g.disjoint_union(&h).expect("within cap");
        let (ud, us) = values(&u)?;
        let b = union_bounds(gd, gs, hd, hs);
        brackets.record(b.brackets(ud, us), &u, || format!("{b:?} actual=({ud}, {us})"));
    }

    let mut sharp = Check::new("union-sharp");
    let y2 = gen(Family::Yk(2));
    let y3 = gen(Family::Yk(3));
    let yy = y2.disjoint_union(&y3).expect("within cap");
    let (yd, ys) = values(&yy)?;
    let b = union_bounds(gmb(&y2)?, gmb_prime(&y2)?, gmb(&y3)?, gmb_prime(&y3)?);
    sharp.record(
        (yd, ys) == (GameValue::Finite(3), GameValue::Finite(4)) && yd == b.d_high && ys == b.s_low,
        &yy,
        || format!("Y2+Y3 values=({yd}, {ys}) bounds={b:?}"),
    );
    let x = gen(Family::Xnm(2, 1));
    let (xd, xs) = values(&x)?;
    sharp.record((xd, xs) == (GameValue::Finite(2), GameValue::Finite(3)), &x, || {
        format!("X21 values=({xd}, {xs})")
    });
    let y1 = gen(Family::Yk(1));
    let xy = x.disjoint_union(&y1).expect("within cap");
    let xyd = gmb(&xy)?;
    let b = union_bounds(xd, xs, gmb(&y1)?, gmb_prime(&y1)?);
    sharp.record(xyd == GameValue::Finite(3) && xyd == b.d_low, &xy, || {
        format!("X21+Y1 gmb={xyd} bounds={b:?}")
    });
    Ok(vec![brackets, sharp])
}

fn lemmas(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Checks {
    let n_hi = ctx.max_n.max(2);
    let mut continuation = Check::new("continuation");
    for g in random_pool(rng, ctx.instances, 2, n_hi) {
        let a = random_subset(g.vertices(), rng);
        let b = random_subset(a, rng);
        for first in [Player::Dominator, Player::Staller] {
            let va = solve(&GameConfig::new(g.clone(), first).with_pre_dominated(a)?)?;
            let vb = solve(&GameConfig::new(g.clone(), first).with_pre_dominated(b)?)?;
            continuation.record(va <= vb, &g, || {
                format!("{first}: G|{a:?} = {va} > G|{b:?} = {vb}")
            });
        }
    }

    let mut no_skip = Check::new("no-skip");
    let mut pool: Vec<Graph> = (1..=n_hi.min(9)).flat_map(nonisomorphic_trees).collect();
    pool.extend(random_pool(rng, ctx.instances, 1, n_hi));
    for g in &pool {
        for first in [Player::Dominator, Player::Staller] {
            let base = GameConfig::new(g.clone(), first);
            let plain = solve(&base)?;
            for (dom, sta) in [(true, false), (false, true)] {
                let v = solve(&base.clone().with_passes(dom, sta))?;
                no_skip.record(v == plain, g, || {
                    format!("{first} dominator_pass={dom} staller_pass={sta}: {v} vs {plain}")
                });
            }
        }
    }

    let mut pairing = Check::new("pairing-oracle");
    for g in random_pool(rng, ctx.instances, 2, n_hi) {
        let mut order: Vec<usize> = g.vertices().iter().collect();
        order.shuffle(rng);
        let k = rng.gen_range(1..=(g.order() / 2).min(10));
        let x = Pairing::new(order.chunks(2).take(k).map(|c| (c[0], c[1])).collect())?;
        let oracle = every_selection_dominates(&g, &x);
        let checked = pairing_check(&g, &x)?;
        pairing.record(checked == oracle, &g, || format!("{x:?}: check={checked} oracle={oracle}"));
        if let Some(m) = find_dominating_matching(&g)? {
            let oracle = every_selection_dominates(&g, &m);
            pairing.record(oracle, &g, || format!("matching {m:?} fails the oracle"));
        }
    }

    let mut chain = Check::new("chain-and-bounds");
    let mut transfer = Check::new("matching-transfer");
    let mut fact2 = Check::new("dominating-matching-wins");
    for g in random_pool(rng, ctx.instances, 1, n_hi) {
        let r = verify_basic_bounds(&g)?;
        chain.record(r.all_ok(), &g, || format!("{r:?}"));
        transfer.record(check_matching_transfer(&g), &g, || "transfer fails".into());
        if let Some(m) = find_dominating_matching(&g)? {
            let k = GameValue::Finite(m.len() as u32);
            fact2.record(r.gmb <= k && r.gmb_prime <= k, &g, || {
                format!("|X|={} values=({}, {})", m.len(), r.gmb, r.gmb_prime)
            });
        }
    }

    let mut uniqueness = Check::new("residual-uniqueness");
    for _ in 0..ctx.instances {
        let t = random_tree(rng.gen_range(1..=n_hi), rng);
        let reference = residual_decompose(&t).residual;
        let mut ok = true;
        for _ in 0..20 {
            let other = residual_decompose_random(&t, rng).residual;
            ok &= are_isomorphic(&reference, &other)?;
        }
        uniqueness.record(ok, &t, || "residuals differ between removal orders".into());
    }
    Ok(vec![continuation, no_skip, pairing, chain, transfer, fact2, uniqueness])
}

/// Every choice of one vertex per pair dominates `g`.
fn every_selection_dominates(g: &Graph, x: &Pairing) -> bool {
    let pairs = x.pairs();
    (0u32..1 << pairs.len()).all(|mask| {
        let pick: VertexSet = pairs
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| if mask >> i & 1 == 1 { v } else { u })
            .collect();
        g.is_dominating(pick)
    })
}

fn strategies(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Checks {
    let mut lemma11 = Check::new("tree-strategy");
    let mut replays = Check::new("referee-replay");
    let mut check_replay = |config: &GameConfig, rec: &GameRecord| {
        let again = replay(config, &rec.moves, rec.forfeit.clone());
        let parsed = GameRecord::parse(config, &rec.to_string());
        replays.record(
            again.as_ref() == Ok(rec) && parsed.as_ref() == Ok(rec),
            &config.graph,
            || format!("record does not replay:\n{rec}"),
        );
    };

    for n in (2..=ctx.max_n).step_by(2) {
        for t in nonisomorphic_trees(n).into_iter().filter(has_perfect_matching) {
            let config = GameConfig::s_game(t.clone());
            let mut dom = OptimalStrategy::new(&config)?;
            for v in 0..n {
                let mut sta = StallerTree::new(&t, v)?;
                let rec = simulate(&config, &mut dom, &mut sta);
                let ok = rec.dominator_moves == Some(n as u32 / 2)
                    && rec.last_move_of(Player::Staller) == Some(v);
                lemma11.record(ok, &t, || format!("target x{}:\n{rec}", v + 1));
                check_replay(&config, &rec);
            }
        }
    }

    let mut cycle = Check::new("cycle-strategy");
    for n in 3..=ctx.max_n.max(14) {
        for first in [Player::Dominator, Player::Staller] {
            let config = GameConfig::new(gen(Family::Cycle(n)), first);
            let mut dom = OptimalStrategy::new(&config)?;
            let mut sta = StallerCycle::new(n, first)?;
            let rec = simulate(&config, &mut dom, &mut sta);
            let ok = rec.forfeit.is_none()
                && rec.dominator_moves.is_none_or(|k| k >= n as u32 / 2);
            cycle.record(ok, &config.graph, || format!("{first}:\n{rec}"));
            check_replay(&config, &rec);
        }
    }

    let mut pairing = Check::new("pairing-strategy");
    let mut pool = family_pool(ctx.max_n);
    pool.extend(random_pool(rng, ctx.instances, 2, ctx.max_n.min(10)));
    for g in pool {
        let Some(x) = find_dominating_matching(&g)? else {
            continue;
        };
        let k = x.len() as u32;
        for first in [Player::Dominator, Player::Staller] {
            let config = GameConfig::new(g.clone(), first);
            let mut opponents: Vec<Box<dyn crate::strategies::Strategy>> =
                vec![Box::new(OptimalStrategy::new(&config)?)];
            for _ in 0..200 {
                opponents.push(Box::new(RandomStrategy::new(rng.gen())));
            }
            let mut ok = true;
            let mut worst = None;
            for sta in opponents.iter_mut() {
                let mut dom = PairingDominator::new(&g, x.clone())?;
                let rec = simulate(&config, &mut dom, sta.as_mut());
                if rec.winner != Player::Dominator || rec.dominator_moves.is_none_or(|m| m > k) {
                    ok = false;
                    worst = Some(rec);
                }
            }
            pairing.record(ok, &g, || {
                format!("{first} with {x:?}:\n{}", worst.map(|r| r.to_string()).unwrap_or_default())
            });
        }
    }

    let mut optimal = Check::new("optimal-realizes-value");
    for g in random_pool(rng, ctx.instances, 1, ctx.max_n.min(10)) {
        for first in [Player::Dominator, Player::Staller] {
            let config = GameConfig::new(g.clone(), first);
            let value = solve(&config)?;
            let mut dom = OptimalStrategy::new(&config)?;
            let mut sta = OptimalStrategy::new(&config)?;
            let rec = simulate(&config, &mut dom, &mut sta);
            let ok = match value {
                GameValue::Finite(k) => rec.dominator_moves == Some(k),
                GameValue::Infinite => rec.winner == Player::Staller,
            };
            optimal.record(ok, &g, || format!("{first} value={value}:\n{rec}"));
            check_replay(&config, &rec);
        }
    }
    Ok(vec![lemma11, cycle, pairing, optimal, replays])
}

fn gamma2(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Checks {
    let mut mandated = Check::new("gamma2-mandated");
    for (family, expect) in [
        (Family::Cycle(6), false),
        (Family::Cycle(4), true),
        (Family::Path(5), true),
    ] {
        let g = gen(family);
        let w = gamma2_witness(&g)?;
        let d = gmb(&g)?;
        mandated.record(
            w.is_some() == expect && (d == GameValue::Finite(2)) == expect,
            &g,
            || format!("witness={w:?} gmb={d}"),
        );
    }

    let mut iff = Check::new("gamma2-iff");
    let mut pool = family_pool(ctx.max_n);
    for n in 1..=ctx.max_n.min(5) {
        for_each_labeled_graph(n, |g| pool.push(g.clone()));
    }
    pool.extend(random_pool(rng, 4 * ctx.instances, 3, ctx.max_n));
    for _ in 0..ctx.instances {
        // Sparse spanning trees plus a few chords land on γ = 2 less often;
        // denser graphs with a small dominating set do.
        let n = rng.gen_range(4..=ctx.max_n.max(4));
        let p = rng.gen_range(0.3..0.8);
        pool.push(random_connected_graph(n, p, rng));
    }
    for g in &pool {
        if domination_stats(g)?.gamma != 2 {
            continue;
        }
        let w = gamma2_witness(g)?;
        let d = gmb(g)?;
        iff.record(w.is_some() == (d == GameValue::Finite(2)), g, || {
            format!("witness={w:?} gmb={d}")
        });
    }
    Ok(vec![mandated, iff])
}

fn realization() -> Result<Check, VerifyError> {
    let mut check = Check::new("realization");
    let cases = [(2, 2, 2), (2, 2, 3), (2, 3, 3), (2, 3, 4), (3, 3, 4)]
        .into_iter()
        .map(|(r, s, t)| (Family::Grst(r, s, t), (r, s, t)))
        .chain((1..=3).map(|t| (Family::Gt(t), (1, 1, t))));
    for (family, (r, s, t)) in cases {
        let g = gen(family.clone());
        let gamma = domination_stats(&g)?.gamma;
        let (d, sv) = values(&g)?;
        let ok = gamma == r
            && d == GameValue::Finite(s as u32)
            && sv == GameValue::Finite(t as u32);
        check.record(ok, &g, || format!("{family}: gamma={gamma} gmb={d} gmb'={sv}"));
    }
    Ok(check)
}

fn es(ctx: &Ctx, rng: &mut ChaCha8Rng) -> Checks {
    let mut examples = Check::new("es-examples");
    let c14 = gen(Family::Cycle(14));
    let es14 = erdos_selfridge(&c14)?;
    let d14 = gmb(&c14)?;
    examples.record(
        es14.criterion && es14.gamma == 5 && d14 == GameValue::Finite(7),
        &c14,
        || format!("{es14:?} gmb={d14}"),
    );
    let c8 = gen(Family::Cycle(8));
    let es8 = erdos_selfridge(&c8)?;
    let d8 = gmb(&c8)?;
    examples.record(
        !es8.criterion && es8.gamma == 3 && d8 == GameValue::Finite(4),
        &c8,
        || format!("{es8:?} gmb={d8}"),
    );

    let mut implication = Check::new("es-implies-gap");
    let mut pool = family_pool(ctx.max_n);
    pool.extend(random_pool(rng, ctx.instances, 1, ctx.max_n));
    pool.extend((3..=ctx.max_n.max(14)).map(|n| gen(Family::Cycle(n))));
    for g in &pool {
        let es = erdos_selfridge(g)?;
        if es.criterion {
            let d = gmb(g)?;
            implication.record(d > GameValue::Finite(es.gamma as u32), g, || {
                format!("{es:?} gmb={d}")
            });
        }
    }
    Ok(vec![examples, implication])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(suite: Suite, max_n: usize) -> SuiteReport {
        let opts = VerifyOptions {
            max_n: Some(max_n),
            seed: 3,
            instances: 10,
        };
        run_suite(suite, &opts).unwrap()
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        for (suite, n) in [
            (Suite::Cycles, 8),
            (Suite::Trees, 6),
            (Suite::Bounds, 6),
            (Suite::Residual, 6),
            (Suite::Lemmas, 6),
            (Suite::Gamma2, 6),
            (Suite::Realization, 0),
        ] {
            let report = quick(suite, n);
            assert!(report.passed(), "{report}");
        }
        assert_eq!(quick(Suite::Cycles, 14).check("cycle-values").unwrap().instances, 12);
    }

    #[test]
    fn report_lists_counterexamples() {
        let mut check = Check::new("demo");
        check.record(false, &gen(Family::Path(2)), || "made up".into());
        let report = SuiteReport {
            suite: Suite::Bounds,
            max_n: 2,
            seed: 0,
            checks: vec![check],
        };
        let text = report.to_string();
        assert!(text.contains("counterexample check=demo detail=made up"));
        assert!(text.contains("  2 1\n  0 1\n"));
        assert!(text.ends_with("result=fail\n"));
    }
}
