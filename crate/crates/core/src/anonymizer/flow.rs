//! Min-cost flow by successive shortest paths with Johnson potentials.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: i64,
    cost: i64,
}

#[derive(Debug, Clone)]
pub(crate) struct MinCostFlow {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl MinCostFlow {
    pub fn new(nodes: usize) -> Self {
        MinCostFlow {
            arcs: Vec::new(),
            out: vec![Vec::new(); nodes],
        }
    }

    /// Adds `from -> to` and its residual twin; returns the forward arc id.
    pub fn add_arc(&mut self, from: usize, to: usize, cap: i64, cost: i64) -> usize {
        let id = self.arcs.len();
        self.arcs.push(Arc { to, cap, cost });
        self.arcs.push(Arc {
            to: from,
            cap: 0,
            cost: -cost,
        });
        self.out[from].push(id);
        self.out[to].push(id + 1);
        id
    }

    /// Flow pushed through arc `id`.
    pub fn flow_on(&self, id: usize) -> i64 {
        self.arcs[id ^ 1].cap
    }

    /// Sends up to `limit` units from `source` to `sink` at minimum cost.
    /// Arc costs must be non-negative. Returns `(flow, cost)`.
    pub fn run(&mut self, source: usize, sink: usize, limit: i64) -> (i64, i64) {
        let nodes = self.out.len();
        let mut potential = vec![0i64; nodes];
        let mut dist = vec![i64::MAX; nodes];
        let mut via = vec![usize::MAX; nodes];
        let mut heap = BinaryHeap::new();
        let (mut flow, mut cost) = (0, 0);
        while flow < limit {
            dist.fill(i64::MAX);
            via.fill(usize::MAX);
            dist[source] = 0;
            heap.push(Reverse((0i64, source)));
            while let Some(Reverse((du, u))) = heap.pop() {
                if du > dist[u] {
                    continue;
                }
                for &id in &self.out[u] {
                    let arc = &self.arcs[id];
                    if arc.cap == 0 {
                        continue;
                    }
                    let reduced = arc.cost + potential[u] - potential[arc.to];
                    let dv = du + reduced;
                    if dv < dist[arc.to] {
                        dist[arc.to] = dv;
                        via[arc.to] = id;
                        heap.push(Reverse((dv, arc.to)));
                    }
                }
            }
            if dist[sink] == i64::MAX {
                break;
            }
            for v in 0..nodes {
                if dist[v] != i64::MAX {
                    potential[v] += dist[v];
                }
            }
            let mut push = limit - flow;
            let mut v = sink;
            while v != source {
                let id = via[v];
                push = push.min(self.arcs[id].cap);
                v = self.arcs[id ^ 1].to;
            }
            let mut v = sink;
            while v != source {
                let id = via[v];
                self.arcs[id].cap -= push;
                self.arcs[id ^ 1].cap += push;
                cost += push * self.arcs[id].cost;
                v = self.arcs[id ^ 1].to;
            }
            flow += push;
        }
        (flow, cost)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_transport() {
        // two suppliers of 1 unit, two consumers; crossing is cheaper
        let mut f = MinCostFlow::new(6);
        f.add_arc(0, 1, 1, 0);
        f.add_arc(0, 2, 1, 0);
        let a = f.add_arc(1, 3, 1, 5);
        let b = f.add_arc(1, 4, 1, 1);
        f.add_arc(2, 3, 1, 2);
        f.add_arc(2, 4, 1, 1);
        f.add_arc(3, 5, 1, 0);
        f.add_arc(4, 5, 1, 0);
        assert_eq!(f.run(0, 5, 10), (2, 3));
        assert_eq!(f.flow_on(a), 0);
        assert_eq!(f.flow_on(b), 1);
    }

    #[test]
    fn needs_rerouting() {
        // greedy shortest path first takes 1->3, which must be undone
        let mut f = MinCostFlow::new(6);
        f.add_arc(0, 1, 1, 0);
        f.add_arc(0, 2, 1, 0);
        f.add_arc(1, 3, 1, 0);
        f.add_arc(1, 4, 1, 1);
        f.add_arc(2, 3, 1, 1);
        f.add_arc(2, 4, 1, 10);
        f.add_arc(3, 5, 1, 0);
        f.add_arc(4, 5, 1, 0);
        assert_eq!(f.run(0, 5, 2), (2, 2));
    }
}
