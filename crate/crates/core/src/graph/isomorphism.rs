use super::{Graph, GraphError, VertexSet};

pub const MAX_ISOMORPHISM_VERTICES: usize = 12;

/// Brute-force isomorphism test with degree pruning. Labels are ignored.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool, GraphError> {
    for x in [g, h] {
        if x.order() > MAX_ISOMORPHISM_VERTICES {
            return Err(GraphError::CapExceeded {
                n: x.order(),
                cap: MAX_ISOMORPHISM_VERTICES,
            });
        }
    }
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let mut dg = g.degree_sequence();
    let mut dh = h.degree_sequence();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }

    // Map high-degree vertices first; they constrain the search most.
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut image = vec![usize::MAX; g.order()];
    Ok(extend(g, h, &order, 0, &mut image, VertexSet::EMPTY))
}

fn extend(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: VertexSet,
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in (h.vertices() - used).iter() {
        if h.degree(w) != g.degree(v) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(image[u], w));
        if !consistent {
            continue;
        }
        image[v] = w;
        if extend(g, h, order, depth + 1, image, used.with(w)) {
            return true;
        }
    }
    image[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    #[test]
    fn examples() {
        let p3 = generate(&Family::Path(3)).unwrap();
        let k12 = generate(&Family::Star(2)).unwrap();
        assert!(are_isomorphic(&p3, &k12).unwrap());
        let c4 = generate(&Family::Cycle(4)).unwrap();
        let p4 = generate(&Family::Path(4)).unwrap();
        assert!(!are_isomorphic(&c4, &p4).unwrap());
    }

    #[test]
    fn same_degrees_different_graphs() {
        // C6 and two disjoint triangles are both 2-regular on six vertices.
        let c6 = generate(&Family::Cycle(6)).unwrap();
        let k3 = generate(&Family::Complete(3)).unwrap();
        let two_k3 = k3.disjoint_union(&k3).unwrap();
        assert!(!are_isomorphic(&c6, &two_k3).unwrap());
    }

    #[test]
    fn relabeled_copy() {
        let g = generate(&Family::Grst(2, 2, 3)).unwrap();
        let perm = [7, 3, 5, 0, 1, 6, 2, 4];
        assert!(are_isomorphic(&g, &g.permuted(&perm)).unwrap());
    }

    #[test]
    fn cap() {
        let big = generate(&Family::Path(13)).unwrap();
        assert!(are_isomorphic(&big, &big).is_err());
    }
}
