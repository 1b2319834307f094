use super::{Graph, GraphError, VertexSet};

/// Default vertex cap for subset enumeration.
pub const DEFAULT_STATS_CAP: usize = 20;

/// Domination number, number of minimum dominating sets and one of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DomStats {
    pub gamma: usize,
    pub num_gamma_sets: u64,
    pub one_witness_set: VertexSet,
}

pub fn domination_stats(g: &Graph) -> Result<DomStats, GraphError> {
    domination_stats_capped(g, DEFAULT_STATS_CAP)
}

/// Enumerates subsets by increasing size and stops at the first size that
/// admits a dominating set.
pub fn domination_stats_capped(g: &Graph, cap: usize) -> Result<DomStats, GraphError> {
    let mut stats: Option<DomStats> = None;
    for_each_gamma_set(g, cap, |gamma, set| match &mut stats {
        None => {
            stats = Some(DomStats {
                gamma,
                num_gamma_sets: 1,
                one_witness_set: set,
            })
        }
        Some(s) => s.num_gamma_sets += 1,
    })?;
    Ok(stats.expect("the full vertex set always dominates"))
}

/// Every minimum dominating set, in increasing order of their bit patterns.
pub fn gamma_sets(g: &Graph) -> Result<Vec<VertexSet>, GraphError> {
    let mut out = Vec::new();
    for_each_gamma_set(g, DEFAULT_STATS_CAP, |_, s| out.push(s))?;
    Ok(out)
}

fn for_each_gamma_set(
    g: &Graph,
    cap: usize,
    mut visit: impl FnMut(usize, VertexSet),
) -> Result<(), GraphError> {
    let n = g.order();
    if n > cap {
        return Err(GraphError::CapExceeded { n, cap });
    }
    let closed = g.closed_neighborhoods();
    let full = g.vertices().bits();
    for k in 0..=n {
        let mut found = false;
        for_each_subset_of_size(n, k, |mask| {
            let mut dom = 0u64;
            let mut rest = mask;
            while rest != 0 {
                dom |= closed[rest.trailing_zeros() as usize].bits();
                rest &= rest - 1;
            }
            if dom == full {
                found = true;
                visit(k, VertexSet(mask));
            }
        });
        if found {
            break;
        }
    }
    Ok(())
}

/// Gosper's hack over all `k`-subsets of `0..n`.
pub(crate) fn for_each_subset_of_size(n: usize, k: usize, mut f: impl FnMut(u64)) {
    if k > n {
        return;
    }
    if k == 0 {
        f(0);
        return;
    }
    let limit = 1u64 << n;
    let mut mask = (1u64 << k) - 1;
    while mask < limit {
        f(mask);
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    #[test]
    fn cycles_of_order_3k_minus_1() {
        for k in 2..=4 {
            let c = generate(&Family::Cycle(3 * k - 1)).unwrap();
            let s = domination_stats(&c).unwrap();
            assert_eq!(s.gamma, k);
            assert_eq!(s.num_gamma_sets, (3 * k - 1) as u64);
            assert!(c.is_dominating(s.one_witness_set));
        }
    }

    #[test]
    fn complete_graph() {
        let k3 = generate(&Family::Complete(3)).unwrap();
        let s = domination_stats(&k3).unwrap();
        assert_eq!((s.gamma, s.num_gamma_sets), (1, 3));
    }

    #[test]
    fn empty_graph_and_cap() {
        let s = domination_stats(&Graph::empty(0).unwrap()).unwrap();
        assert_eq!((s.gamma, s.num_gamma_sets), (0, 1));
        let big = generate(&Family::Path(21)).unwrap();
        assert!(matches!(
            domination_stats(&big),
            Err(GraphError::CapExceeded { n: 21, cap: 20 })
        ));
    }

    #[test]
    fn gosper_counts_binomials() {
        let mut count = 0;
        for_each_subset_of_size(10, 4, |m| {
            assert_eq!(m.count_ones(), 4);
            count += 1;
        });
        assert_eq!(count, 210);
    }

    #[test]
    fn gamma_sets_of_p5() {
        // a–b–c–d–e: {a,d}, {b,d}, {b,e}
        let p5 = generate(&Family::Path(5)).unwrap();
        let sets = gamma_sets(&p5).unwrap();
        let expected: Vec<VertexSet> = vec![
            [0, 3].into_iter().collect(),
            [1, 3].into_iter().collect(),
            [1, 4].into_iter().collect(),
        ];
        let mut got = sets.clone();
        got.sort();
        let mut exp = expected;
        exp.sort();
        assert_eq!(got, exp);
    }
}
