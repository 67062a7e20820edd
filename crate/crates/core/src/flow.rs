//! Dinic max-flow on small integral networks. Deterministic: edges are
//! explored in insertion order.

use std::collections::VecDeque;

#[derive(Clone, Debug)]
struct FlowEdge {
    to: usize,
    cap: i64,
    rev: usize,
}

pub(crate) struct Dinic {
    graph: Vec<Vec<FlowEdge>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

/// Handle for querying how much flow an edge ended up carrying.
#[derive(Clone, Copy, Debug)]
pub(crate) struct EdgeRef {
    from: usize,
    index: usize,
    cap: i64,
}

impl Dinic {
    pub fn new(n: usize) -> Self {
        Dinic {
            graph: vec![Vec::new(); n],
            level: vec![0; n],
            iter: vec![0; n],
        }
    }

    pub fn add_edge(&mut self, from: usize, to: usize, cap: i64) -> EdgeRef {
        let index = self.graph[from].len();
        let rev = self.graph[to].len();
        self.graph[from].push(FlowEdge { to, cap, rev });
        self.graph[to].push(FlowEdge {
            to: from,
            cap: 0,
            rev: index,
        });
        EdgeRef { from, index, cap }
    }

    pub fn flow_on(&self, e: EdgeRef) -> i64 {
        e.cap - self.graph[e.from][e.index].cap
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.fill(-1);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for e in &self.graph[v] {
                if e.cap > 0 && self.level[e.to] < 0 {
                    self.level[e.to] = self.level[v] + 1;
                    queue.push_back(e.to);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, v: usize, t: usize, limit: i64) -> i64 {
        if v == t {
            return limit;
        }
        while self.iter[v] < self.graph[v].len() {
            let i = self.iter[v];
            let (to, cap, rev) = {
                let e = &self.graph[v][i];
                (e.to, e.cap, e.rev)
            };
            if cap > 0 && self.level[v] < self.level[to] {
                let pushed = self.dfs(to, t, limit.min(cap));
                if pushed > 0 {
                    self.graph[v][i].cap -= pushed;
                    self.graph[to][rev].cap += pushed;
                    return pushed;
                }
            }
            self.iter[v] += 1;
        }
        0
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut total = 0;
        while self.bfs(s, t) {
            self.iter.fill(0);
            loop {
                let pushed = self.dfs(s, t, i64::MAX);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_network() {
        let mut d = Dinic::new(4);
        d.add_edge(0, 1, 10);
        d.add_edge(0, 2, 5);
        let e = d.add_edge(1, 3, 10);
        d.add_edge(2, 3, 5);
        assert_eq!(d.max_flow(0, 3), 15);
        assert_eq!(d.flow_on(e), 10);
    }

    #[test]
    fn disconnected_sink() {
        let mut d = Dinic::new(3);
        d.add_edge(0, 1, 7);
        assert_eq!(d.max_flow(0, 2), 0);
    }

    #[test]
    fn unit_capacity_bipartite_matching() {
        // K_{3,3} as a flow network: matching number 3.
        let mut d = Dinic::new(8);
        for x in 0..3 {
            d.add_edge(6, x, 1);
            d.add_edge(3 + x, 7, 1);
        }
        for x in 0..3 {
            for y in 3..6 {
                d.add_edge(x, y, 1);
            }
        }
        assert_eq!(d.max_flow(6, 7), 3);
    }
}
