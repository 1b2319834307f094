//! Named graph families.
//!
//! Vertex numbering is part of each family's contract, since tests and the
//! CLI refer to landmark vertices by index or label:
//!
//! | family            | vertices                                                             |
//! |-------------------|----------------------------------------------------------------------|
//! | `path:n`          | `x1..xn` along the path                                              |
//! | `cycle:n`         | `x1..xn` around the cycle                                            |
//! | `star:k`          | center `c` = 0, leaves `1..=k`                                       |
//! | `complete:n`      | `0..n`                                                               |
//! | `empty:n`         | `n` isolated vertices                                                |
//! | `spider:l1,l2,..` | center `c` = 0, then each leg from the center outwards               |
//! | `double_star:a,b` | centers `c1` = 0 and `c2` = 1, then `a` leaves of `c1`, `b` of `c2`  |
//! | `grst:r,s,t`      | `x1..xr`, `t-r+1` triangles at `x1`, `s-r+1` at `x2`, then `y3..yr`  |
//! | `gt:t`            | shared vertex `c` = 0, then the opposite edges of the `t` triangles  |
//! | `xnm:n,m`         | hubs `x1` = 0, `x2` = 1, `n` triangles at `x1`, then `m` at `x2`     |
//! | `yk:k`            | apex `y` = 0, then the `k` triangle edges                            |
//! | `fig4`            | diamond `0..4` missing edge 0–3, pendant `u` = 4 attached to 3       |

use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Empty(usize),
    Path(usize),
    Cycle(usize),
    /// `K_{1,k}`.
    Star(usize),
    Complete(usize),
    /// Leg lengths.
    Spider(Vec<usize>),
    DoubleStar(usize, usize),
    Grst(usize, usize, usize),
    Gt(usize),
    Xnm(usize, usize),
    Yk(usize),
    Fig4,
}

fn invalid(msg: impl Into<String>) -> GraphError {
    GraphError::InvalidParams(msg.into())
}

pub fn generate(family: &Family) -> Result<Graph, GraphError> {
    match *family {
        Family::Empty(n) => Graph::empty(n),
        Family::Path(n) => {
            if n == 0 {
                return Err(invalid("path needs at least one vertex"));
            }
            let mut g = Graph::empty(n)?;
            for v in 1..n {
                g.add_edge(v - 1, v)?;
            }
            label_sequence(&mut g, "x", 0..n);
            Ok(g)
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(invalid("cycle needs at least three vertices"));
            }
            let mut g = Graph::empty(n)?;
            for v in 0..n {
                g.add_edge(v, (v + 1) % n)?;
            }
            label_sequence(&mut g, "x", 0..n);
            Ok(g)
        }
        Family::Star(k) => {
            if k == 0 {
                return Err(invalid("star needs at least one leaf"));
            }
            let mut g = Graph::empty(k + 1)?;
            for leaf in 1..=k {
                g.add_edge(0, leaf)?;
            }
            g.set_label(0, "c");
            Ok(g)
        }
        Family::Complete(n) => {
            if n == 0 {
                return Err(invalid("complete graph needs at least one vertex"));
            }
            let mut g = Graph::empty(n)?;
            for u in 0..n {
                for v in u + 1..n {
                    g.add_edge(u, v)?;
                }
            }
            Ok(g)
        }
        Family::Spider(ref legs) => {
            if legs.is_empty() || legs.contains(&0) {
                return Err(invalid("spider legs must be non-empty with positive lengths"));
            }
            let n = 1 + legs.iter().sum::<usize>();
            let mut g = Graph::empty(n)?;
            let mut next = 1;
            for &len in legs {
                let mut prev = 0;
                for _ in 0..len {
                    g.add_edge(prev, next)?;
                    prev = next;
                    next += 1;
                }
            }
            g.set_label(0, "c");
            Ok(g)
        }
        Family::DoubleStar(a, b) => {
            let mut g = Graph::empty(2 + a + b)?;
            g.add_edge(0, 1)?;
            for i in 0..a {
                g.add_edge(0, 2 + i)?;
            }
            for i in 0..b {
                g.add_edge(1, 2 + a + i)?;
            }
            g.set_label(0, "c1");
            g.set_label(1, "c2");
            Ok(g)
        }
        Family::Grst(r, s, t) => {
            if !(2 <= r && r <= s && s <= t) {
                return Err(invalid(format!("grst needs 2 <= r <= s <= t, got {r},{s},{t}")));
            }
            let at_x1 = t - r + 1;
            let at_x2 = s - r + 1;
            let n = r + 2 * at_x1 + 2 * at_x2 + (r - 2);
            let mut g = Graph::empty(n)?;
            for i in 1..r {
                g.add_edge(i - 1, i)?;
            }
            let mut next = r;
            for (hub, count) in [(0, at_x1), (1, at_x2)] {
                next = attach_triangles(&mut g, hub, count, next)?;
            }
            for i in 2..r {
                g.add_edge(i, next)?;
                g.set_label(next, format!("y{}", i + 1));
                next += 1;
            }
            label_sequence(&mut g, "x", 0..r);
            Ok(g)
        }
        Family::Gt(t) | Family::Yk(t) => {
            if t == 0 {
                return Err(invalid("needs at least one triangle"));
            }
            let mut g = Graph::empty(1 + 2 * t)?;
            attach_triangles(&mut g, 0, t, 1)?;
            g.set_label(0, if matches!(family, Family::Gt(_)) { "c" } else { "y" });
            Ok(g)
        }
        Family::Xnm(n, m) => {
            if !(1 <= m && m <= n) {
                return Err(invalid(format!("xnm needs 1 <= m <= n, got {n},{m}")));
            }
            let mut g = Graph::empty(2 + 2 * n + 2 * m)?;
            g.add_edge(0, 1)?;
            let next = attach_triangles(&mut g, 0, n, 2)?;
            attach_triangles(&mut g, 1, m, next)?;
            g.set_label(0, "x1");
            g.set_label(1, "x2");
            Ok(g)
        }
        Family::Fig4 => {
            let mut g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4)])?;
            g.set_label(4, "u");
            Ok(g)
        }
    }
}

/// Adds `count` triangles sharing `hub`, using fresh vertices from `next`.
fn attach_triangles(
    g: &mut Graph,
    hub: usize,
    count: usize,
    mut next: usize,
) -> Result<usize, GraphError> {
    for _ in 0..count {
        g.add_edge(hub, next)?;
        g.add_edge(hub, next + 1)?;
        g.add_edge(next, next + 1)?;
        next += 2;
    }
    Ok(next)
}

fn label_sequence(g: &mut Graph, prefix: &str, range: std::ops::Range<usize>) {
    for v in range {
        g.set_label(v, format!("{prefix}{}", v + 1));
    }
}

impl FromStr for Family {
    type Err = GraphError;

    /// Parses `family[:p1,p2,..]`, optionally prefixed with `gen:`.
    fn from_str(spec: &str) -> Result<Self, Self::Err> {
        let spec = spec.strip_prefix("gen:").unwrap_or(spec);
        let (name, params) = spec.split_once(':').unwrap_or((spec, ""));
        let nums: Vec<usize> = if params.is_empty() {
            Vec::new()
        } else {
            params
                .split(',')
                .map(|p| p.trim().parse().map_err(|_| invalid(format!("bad parameter `{p}`"))))
                .collect::<Result<_, _>>()?
        };
        let arity = |k: usize| -> Result<(), GraphError> {
            if nums.len() == k {
                Ok(())
            } else {
                Err(invalid(format!("`{name}` takes {k} parameter(s), got {}", nums.len())))
            }
        };
        let family = match name {
            "empty" => arity(1).map(|_| Family::Empty(nums[0]))?,
            "path" => arity(1).map(|_| Family::Path(nums[0]))?,
            "cycle" => arity(1).map(|_| Family::Cycle(nums[0]))?,
            "star" => arity(1).map(|_| Family::Star(nums[0]))?,
            "complete" => arity(1).map(|_| Family::Complete(nums[0]))?,
            "spider" => Family::Spider(nums),
            "double_star" => arity(2).map(|_| Family::DoubleStar(nums[0], nums[1]))?,
            "grst" => arity(3).map(|_| Family::Grst(nums[0], nums[1], nums[2]))?,
            "gt" => arity(1).map(|_| Family::Gt(nums[0]))?,
            "xnm" => arity(2).map(|_| Family::Xnm(nums[0], nums[1]))?,
            "yk" => arity(1).map(|_| Family::Yk(nums[0]))?,
            "fig4" => arity(0).map(|_| Family::Fig4)?,
            other => return Err(invalid(format!("unknown family `{other}`"))),
        };
        Ok(family)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Empty(n) => write!(f, "empty:{n}"),
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Star(k) => write!(f, "star:{k}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Spider(legs) => {
                let legs: Vec<String> = legs.iter().map(|l| l.to_string()).collect();
                write!(f, "spider:{}", legs.join(","))
            }
            Family::DoubleStar(a, b) => write!(f, "double_star:{a},{b}"),
            Family::Grst(r, s, t) => write!(f, "grst:{r},{s},{t}"),
            Family::Gt(t) => write!(f, "gt:{t}"),
            Family::Xnm(n, m) => write!(f, "xnm:{n},{m}"),
            Family::Yk(k) => write!(f, "yk:{k}"),
            Family::Fig4 => write!(f, "fig4"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(spec: &str) -> Graph {
        generate(&spec.parse().unwrap()).unwrap()
    }

    #[test]
    fn grst_counts() {
        let g = gen("grst:2,2,3");
        assert_eq!(g.order(), 8);
        assert_eq!(g.vertex_by_label("x1"), Some(0));
        assert_eq!(g.degree(0), 1 + 2 * 2);
        assert_eq!(g.degree(1), 1 + 2);
        for (r, s, t) in [(2, 2, 2), (2, 3, 4), (3, 3, 4), (4, 5, 7)] {
            let g = generate(&Family::Grst(r, s, t)).unwrap();
            let n = if r >= 3 {
                r + (r - 2) + 2 * (t - r + 1) + 2 * (s - r + 1)
            } else {
                2 + 2 * (t - r + 1) + 2 * (s - r + 1)
            };
            assert_eq!(g.order(), n);
            // path edges + three per triangle + pendant y's
            let m = (r - 1) + 3 * (t - r + 1) + 3 * (s - r + 1) + (r - 2);
            assert_eq!(g.edge_count(), m);
            assert!(g.is_connected());
        }
        let g = gen("grst:4,4,4");
        assert_eq!(g.neighbors(g.vertex_by_label("y4").unwrap()).iter().collect::<Vec<_>>(), vec![3]);
    }

    #[test]
    fn triangle_bundles() {
        let y3 = gen("yk:3");
        assert_eq!(y3.order(), 7);
        assert_eq!(y3.degree(0), 6);
        assert_eq!(y3.edge_count(), 9);
        assert_eq!(gen("gt:3"), y3);
        let x = gen("xnm:2,1");
        assert_eq!(x.order(), 8);
        assert_eq!((x.degree(0), x.degree(1)), (5, 3));
    }

    #[test]
    fn fig4_shape() {
        let g = gen("fig4");
        assert_eq!((g.order(), g.edge_count()), (5, 6));
        assert_eq!(g.degree_sequence(), vec![2, 3, 3, 3, 1]);
        assert_eq!(g.vertex_by_label("u"), Some(4));
    }

    #[test]
    fn small_families() {
        assert_eq!(gen("spider:2,2,2").order(), 7);
        assert!(gen("spider:2,2,2").is_tree());
        assert_eq!(gen("double_star:2,2").degree_sequence(), vec![3, 3, 1, 1, 1, 1]);
        assert_eq!(gen("star:4").order(), 5);
        assert_eq!(gen("complete:4").edge_count(), 6);
        assert_eq!(gen("empty:3").edge_count(), 0);
        assert_eq!(gen("gen:cycle:5").vertex_name(2), "x3");
    }

    #[test]
    fn rejects_bad_params() {
        assert!("grst:3,2,4".parse::<Family>().and_then(|f| generate(&f)).is_err());
        assert!("xnm:1,2".parse::<Family>().and_then(|f| generate(&f)).is_err());
        assert!("cycle:2".parse::<Family>().and_then(|f| generate(&f)).is_err());
        assert!("cycle".parse::<Family>().is_err());
        assert!("wheel:5".parse::<Family>().is_err());
        assert!("path:63".parse::<Family>().and_then(|f| generate(&f)).is_err());
    }

    #[test]
    fn display_round_trips() {
        for spec in ["path:4", "spider:1,2", "grst:2,3,4", "fig4", "double_star:2,2"] {
            assert_eq!(spec.parse::<Family>().unwrap().to_string(), spec);
        }
    }
}
