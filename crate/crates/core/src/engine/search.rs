//! Memoized minimax over `(available, dominated, turn)`.

use std::collections::hash_map::Entry;
use std::sync::atomic::{AtomicUsize, Ordering};

use dashmap::DashMap;
use rustc_hash::{FxBuildHasher, FxHashMap};

use super::{EngineError, GameValue, Player};

/// Immutable game rules shared by every search over one configuration.
#[derive(Debug, Clone)]
pub(crate) struct Rules {
    pub closed: Vec<u64>,
    pub full: u64,
    pub dominator_may_pass: bool,
    pub staller_may_pass: bool,
    pub memoize: bool,
    pub memo_cap: usize,
}

/// Position key. `available` uses at most 62 bits; the top two carry the
/// turn and whether the previous action was a pass.
#[inline]
pub(crate) fn key(available: u64, dominated: u64, turn: Player, after_pass: bool) -> u128 {
    let mut hi = available;
    if turn == Player::Staller {
        hi |= 1 << 62;
    }
    if after_pass {
        hi |= 1 << 63;
    }
    (hi as u128) << 64 | dominated as u128
}

pub(crate) trait Memo {
    fn get(&self, key: u128) -> Option<GameValue>;
    fn insert(&mut self, key: u128, value: GameValue, cap: usize) -> Result<(), EngineError>;
    fn len(&self) -> usize;
}

#[derive(Default)]
pub(crate) struct LocalMemo(pub FxHashMap<u128, GameValue>);

impl Memo for LocalMemo {
    #[inline]
    fn get(&self, key: u128) -> Option<GameValue> {
        self.0.get(&key).copied()
    }

    #[inline]
    fn insert(&mut self, key: u128, value: GameValue, cap: usize) -> Result<(), EngineError> {
        let len = self.0.len();
        match self.0.entry(key) {
            Entry::Occupied(_) => Ok(()),
            Entry::Vacant(slot) => {
                if len >= cap {
                    return Err(EngineError::MemoCapExceeded(cap));
                }
                slot.insert(value);
                Ok(())
            }
        }
    }

    fn len(&self) -> usize {
        self.0.len()
    }
}

/// Concurrent memo shared by root-level workers. Entries are written once;
/// a racing recomputation writes the same value.
pub(crate) struct SharedMemo {
    map: DashMap<u128, GameValue, FxBuildHasher>,
    count: AtomicUsize,
}

impl SharedMemo {
    pub fn new() -> Self {
        SharedMemo {
            map: DashMap::with_hasher(FxBuildHasher),
            count: AtomicUsize::new(0),
        }
    }
}

impl Memo for &SharedMemo {
    #[inline]
    fn get(&self, key: u128) -> Option<GameValue> {
        self.map.get(&key).map(|v| *v)
    }

    fn insert(&mut self, key: u128, value: GameValue, cap: usize) -> Result<(), EngineError> {
        if self.map.insert(key, value).is_none()
            && self.count.fetch_add(1, Ordering::Relaxed) >= cap
        {
            return Err(EngineError::MemoCapExceeded(cap));
        }
        Ok(())
    }

    fn len(&self) -> usize {
        self.count.load(Ordering::Relaxed)
    }
}

/// Additional Dominator moves needed from the given position under optimal
/// play by both sides.
pub(crate) fn value<M: Memo>(
    rules: &Rules,
    memo: &mut M,
    available: u64,
    dominated: u64,
    turn: Player,
    after_pass: bool,
) -> Result<GameValue, EngineError> {
    if dominated == rules.full {
        return Ok(GameValue::ZERO);
    }
    if available == 0 {
        return Ok(GameValue::Infinite);
    }
    // Undominated vertices with no selectable vertex left in their closed
    // neighborhood can never be dominated. Those with exactly one left make
    // that vertex urgent: Staller takes it and wins, so Dominator must.
    let mut undominated = rules.full & !dominated;
    let mut urgent = 0u64;
    let mut threatened = 0u64;
    while undominated != 0 {
        let w = undominated.trailing_zeros() as usize;
        undominated &= undominated - 1;
        let options = rules.closed[w] & available;
        match options.count_ones() {
            0 => return Ok(GameValue::Infinite),
            1 => urgent |= options,
            2 => threatened |= options,
            _ => {}
        }
    }
    if turn == Player::Staller && urgent != 0 {
        return Ok(GameValue::Infinite);
    }

    let k = key(available, dominated, turn, after_pass);
    if rules.memoize {
        if let Some(v) = memo.get(k) {
            return Ok(v);
        }
    }

    let result = match turn {
        Player::Dominator => {
            let finishes = ones(available).any(|v| dominated | rules.closed[v] == rules.full);
            if finishes {
                GameValue::Finite(1)
            } else if urgent.count_ones() >= 2 {
                GameValue::Infinite
            } else {
                // Without a finishing move the answer is at least 2.
                let candidates = if urgent != 0 { urgent } else { available };
                let mut order: Vec<(u32, usize)> = ones(candidates)
                    .map(|v| ((rules.closed[v] & !dominated).count_ones(), v))
                    .collect();
                order.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
                let mut best = GameValue::Infinite;
                for &(_, v) in &order {
                    if best <= GameValue::Finite(2) {
                        break;
                    }
                    let child = value(
                        rules,
                        memo,
                        available & !(1 << v),
                        dominated | rules.closed[v],
                        Player::Staller,
                        false,
                    )? + 1;
                    best = best.min(child);
                }
                if rules.dominator_may_pass && !after_pass && urgent == 0 && best > GameValue::Finite(2)
                {
                    let skip = value(rules, memo, available, dominated, Player::Staller, true)?;
                    best = best.min(skip);
                }
                best
            }
        }
        Player::Staller => {
            // Moves that leave some vertex with a single option come first.
            let mut best = GameValue::ZERO;
            let first = threatened & available;
            for v in ones(first).chain(ones(available & !first)) {
                if best == GameValue::Infinite {
                    break;
                }
                let child = value(
                    rules,
                    memo,
                    available & !(1 << v),
                    dominated,
                    Player::Dominator,
                    false,
                )?;
                best = best.max(child);
            }
            if rules.staller_may_pass && !after_pass && best != GameValue::Infinite {
                let skip = value(rules, memo, available, dominated, Player::Dominator, true)?;
                best = best.max(skip);
            }
            best
        }
    };

    if rules.memoize {
        memo.insert(k, result, rules.memo_cap)?;
    }
    Ok(result)
}

#[inline]
fn ones(mut bits: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if bits == 0 {
            return None;
        }
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        Some(v)
    })
}
