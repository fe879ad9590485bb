//! Local connectivity by unit-capacity max-flow on the split graph.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{members, Graph};

/// Maximum number of internally disjoint `x`-`y` paths. An edge `xy`
/// counts as one path.
pub fn menger_local_connectivity(g: &Graph, x: usize, y: usize) -> Result<usize> {
    let n = g.order();
    for v in [x, y] {
        if v >= n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: n,
            });
        }
    }
    if x == y {
        return Err(Error::SameEndpoints(x));
    }
    // v_in = 2v, v_out = 2v + 1
    let nodes = 2 * n;
    let big = n as i32 + 1;
    let mut cap = vec![vec![0i32; nodes]; nodes];
    for v in 0..n {
        cap[2 * v][2 * v + 1] = if v == x || v == y { big } else { 1 };
        for u in members(g.neighbors(v)) {
            cap[2 * v + 1][2 * u] = 1;
        }
    }
    let (source, sink) = (2 * x + 1, 2 * y);
    let mut flow = 0;
    loop {
        let mut prev = vec![usize::MAX; nodes];
        prev[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(a) = queue.pop_front() {
            if a == sink {
                break;
            }
            for b in 0..nodes {
                if prev[b] == usize::MAX && cap[a][b] > 0 {
                    prev[b] = a;
                    queue.push_back(b);
                }
            }
        }
        if prev[sink] == usize::MAX {
            return Ok(flow);
        }
        let mut b = sink;
        while b != source {
            let a = prev[b];
            cap[a][b] -= 1;
            cap[b][a] += 1;
            b = a;
        }
        flow += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let mut e = vec![];
        for u in 0..4 {
            for v in u + 1..4 {
                e.push((u, v));
            }
        }
        let k4 = Graph::from_edges(4, &e).unwrap();
        assert_eq!(menger_local_connectivity(&k4, 0, 3).unwrap(), 3);
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        for y in 1..5 {
            assert_eq!(menger_local_connectivity(&c5, 0, y).unwrap(), 2);
        }
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(menger_local_connectivity(&split, 0, 3).unwrap(), 0);
        assert_eq!(
            menger_local_connectivity(&k4, 1, 1),
            Err(Error::SameEndpoints(1))
        );
    }
}
