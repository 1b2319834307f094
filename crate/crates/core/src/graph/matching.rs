use std::collections::VecDeque;

use super::{Graph, VertexSet};

const NONE: usize = usize::MAX;

/// Maximum matching by Edmonds' blossom algorithm. Returns the mate of each
/// vertex.
pub fn maximum_matching(g: &Graph) -> Vec<Option<usize>> {
    let mut b = Blossom::new(g);
    for root in 0..g.order() {
        if b.mate[root] == NONE {
            if let Some(end) = b.find_augmenting_path(root) {
                b.augment(end);
            }
        }
    }
    b.mate.iter().map(|&m| (m != NONE).then_some(m)).collect()
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    g.order().is_multiple_of(2) && maximum_matching(g).iter().all(Option::is_some)
}

/// All perfect matchings, each as a list of edges `(u, v)` with `u < v`,
/// stopping once `limit` have been found. Exhaustive, meant for small graphs.
pub fn perfect_matchings(g: &Graph, limit: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(
        g: &Graph,
        free: VertexSet,
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        let Some(u) = free.first() else {
            out.push(current.clone());
            return;
        };
        for v in (g.neighbors(u) & free).iter() {
            current.push((u, v));
            go(g, free.without(u).without(v), current, out, limit);
            current.pop();
        }
    }
    let mut out = Vec::new();
    if g.order().is_multiple_of(2) {
        go(g, g.vertices(), &mut Vec::new(), &mut out, limit);
    }
    out
}

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.order();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for to in self.g.neighbors(v).iter() {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    #[test]
    fn small_cases() {
        assert!(has_perfect_matching(&generate(&Family::Path(4)).unwrap()));
        assert!(!has_perfect_matching(&generate(&Family::Path(3)).unwrap()));
        assert!(has_perfect_matching(&generate(&Family::Cycle(6)).unwrap()));
        assert!(!has_perfect_matching(&generate(&Family::Star(3)).unwrap()));
        assert!(has_perfect_matching(&Graph::empty(0).unwrap()));
    }

    #[test]
    fn odd_cycle_blossom() {
        // Triangle with a pendant path: 0-1-2-0, 2-3, 3-4, 4-5. Needs a blossom contraction
        // when growing from vertex 5 after a poor greedy start.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        assert!(has_perfect_matching(&g));
        let mate = maximum_matching(&g);
        for (v, m) in mate.iter().enumerate() {
            let m = m.unwrap();
            assert!(g.has_edge(v, m));
            assert_eq!(mate[m], Some(v));
        }
    }

    #[test]
    fn enumeration_counts() {
        // C6 has exactly two perfect matchings, K4 has three.
        assert_eq!(perfect_matchings(&generate(&Family::Cycle(6)).unwrap(), 10).len(), 2);
        assert_eq!(perfect_matchings(&generate(&Family::Complete(4)).unwrap(), 10).len(), 3);
        assert_eq!(perfect_matchings(&generate(&Family::Complete(6)).unwrap(), 4).len(), 4);
    }
}
