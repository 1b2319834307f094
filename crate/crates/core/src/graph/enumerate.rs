//! Test pools: Prüfer decoding, trees up to isomorphism, random graphs.

use std::collections::BTreeSet;

use rand::Rng;

use super::{Graph, VertexSet};

/// Decodes a Prüfer sequence over `0..n` (length `n - 2`) into a labeled tree.
pub fn prufer_decode(seq: &[usize], n: usize) -> Graph {
    assert!(n >= 2 && seq.len() == n - 2, "sequence length must be n - 2");
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut g = Graph::empty(n).expect("n within cap");
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        g.add_edge(leaf, s).expect("valid edge");
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let last: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    g.add_edge(last[0], last[1]).expect("valid edge");
    g
}

/// Calls `f` on every labeled tree on `n` vertices (`n^(n-2)` of them).
pub fn for_each_prufer_tree(n: usize, mut f: impl FnMut(&Graph)) {
    match n {
        0 => {}
        1 => f(&Graph::empty(1).expect("n within cap")),
        _ => {
            let mut seq = vec![0usize; n - 2];
            loop {
                f(&prufer_decode(&seq, n));
                let mut i = 0;
                loop {
                    if i == seq.len() {
                        return;
                    }
                    seq[i] += 1;
                    if seq[i] < n {
                        break;
                    }
                    seq[i] = 0;
                    i += 1;
                }
            }
        }
    }
}

/// Canonical string of a tree, equal for two trees iff they are isomorphic.
pub fn tree_canonical_form(t: &Graph) -> String {
    let centers = tree_centers(t);
    centers
        .iter()
        .map(|&c| rooted_code(t, c, usize::MAX))
        .min()
        .unwrap_or_default()
}

fn tree_centers(t: &Graph) -> Vec<usize> {
    let mut alive = t.vertices();
    let mut degree: Vec<usize> = t.degree_sequence();
    while alive.len() > 2 {
        let leaves: Vec<usize> = alive.iter().filter(|&v| degree[v] <= 1).collect();
        for &v in &leaves {
            alive.remove(v);
            for w in (t.neighbors(v) & alive).iter() {
                degree[w] -= 1;
            }
        }
    }
    alive.iter().collect()
}

fn rooted_code(t: &Graph, v: usize, parent: usize) -> String {
    let mut children: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&w| w != parent)
        .map(|w| rooted_code(t, w, v))
        .collect();
    children.sort();
    format!("({})", children.concat())
}

/// One representative of each isomorphism class of trees on `n` vertices,
/// built by attaching a leaf to every vertex of every smaller tree.
pub fn nonisomorphic_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![Graph::empty(1).expect("n within cap")];
    for size in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..t.order() {
                let mut g = Graph::empty(size).expect("n within cap");
                for (a, b) in t.edges() {
                    g.add_edge(a, b).expect("valid edge");
                }
                g.add_edge(v, size - 1).expect("valid edge");
                if seen.insert(tree_canonical_form(&g)) {
                    next.push(g);
                }
            }
        }
        level = next;
    }
    level
}

/// Uniform random labeled tree via a random Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    if n <= 1 {
        return Graph::empty(n).expect("n within cap");
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    prufer_decode(&seq, n)
}

/// Random connected graph: a random spanning tree plus each remaining pair
/// with probability `p`.
pub fn random_connected_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = random_tree(n, rng);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(p) {
                g.add_edge(u, v).expect("valid edge");
            }
        }
    }
    g
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n).expect("n within cap");
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("valid edge");
            }
        }
    }
    g
}

/// Every labeled graph on `n` vertices (`2^(n(n-1)/2)` of them).
pub fn for_each_labeled_graph(n: usize, mut f: impl FnMut(&Graph)) {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    assert!(pairs.len() < 32, "too many labeled graphs to enumerate");
    for mask in 0u32..(1u32 << pairs.len()) {
        let mut g = Graph::empty(n).expect("n within cap");
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.add_edge(u, v).expect("valid edge");
            }
        }
        f(&g);
    }
}

/// A uniformly random subset of `set`.
pub fn random_subset<R: Rng + ?Sized>(set: VertexSet, rng: &mut R) -> VertexSet {
    set.iter().filter(|_| rng.gen_bool(0.5)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn prufer_counts_cayley() {
        for n in 1..=6usize {
            let mut count = 0usize;
            for_each_prufer_tree(n, |t| {
                assert!(t.is_tree());
                count += 1;
            });
            let expected = if n == 1 { 1 } else { n.pow(n as u32 - 2) };
            assert_eq!(count, expected);
        }
    }

    #[test]
    fn class_enumeration_matches_prufer_classes() {
        // OEIS A000055: 1, 1, 1, 2, 3, 6, 11, 23
        let expected = [1, 1, 1, 2, 3, 6, 11, 23];
        for n in 1..=8 {
            let classes = nonisomorphic_trees(n);
            assert_eq!(classes.len(), expected[n - 1], "n = {n}");
            let mut from_prufer = BTreeSet::new();
            for_each_prufer_tree(n, |t| {
                from_prufer.insert(tree_canonical_form(t));
            });
            let from_classes: BTreeSet<String> = classes.iter().map(tree_canonical_form).collect();
            assert_eq!(from_prufer, from_classes, "n = {n}");
        }
    }

    #[test]
    fn larger_class_counts() {
        assert_eq!(nonisomorphic_trees(10).len(), 106);
        assert_eq!(nonisomorphic_trees(11).len(), 235);
    }

    #[test]
    fn random_pools_are_connected() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 1..12 {
            assert!(random_tree(n, &mut rng).is_tree());
            assert!(random_connected_graph(n, 0.3, &mut rng).is_connected());
        }
    }
}
