//! Immutable simple graphs on labeled vertices `0..n`.
//!
//! Adjacency is a bitset per vertex, so neighborhood queries, induced
//! components, and edge counts are word-parallel. Graphs never change after
//! construction; edge deletion returns a new value, which makes sharing
//! across harness workers free.

use crate::error::Error;
use crate::vset::VertexSet;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a simple graph from an edge list. Repeated edges are collapsed;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        let mut adj = vec![VertexSet::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::new(); n],
        }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The neighborhood of a single vertex.
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The full vertex set `{0, ..., n-1}`.
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    fn check_subset(&self, s: &VertexSet) -> Result<(), Error> {
        if !s.is_subset_of(&self.vertices()) {
            return Err(Error::VertexOutOfRange {
                vertex: s.iter().find(|&v| v >= self.n).unwrap_or(self.n),
                order: self.n,
            });
        }
        Ok(())
    }

    /// The k-th neighborhood: vertices adjacent to at least `k` members
    /// of `s`. For `k = 1` this is the ordinary neighborhood of `s`.
    pub fn lambda_k(&self, s: &VertexSet, k: usize) -> Result<VertexSet, Error> {
        if k == 0 {
            return Err(Error::Argument("lambda_k requires k >= 1".into()));
        }
        self.check_subset(s)?;
        let mut out = VertexSet::new();
        for v in 0..self.n {
            if self.adj[v].intersection_len(s) >= k {
                out.insert(v);
            }
        }
        Ok(out)
    }

    /// Connected components of the induced subgraph `G[u]`, each returned as
    /// a vertex set, ordered by smallest member.
    pub fn components_in(&self, u: &VertexSet) -> Result<Vec<VertexSet>, Error> {
        self.check_subset(u)?;
        let mut remaining = u.clone();
        let mut out = Vec::new();
        while let Some(start) = remaining.min_element() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp.clone();
            while !frontier.is_empty() {
                let mut next = VertexSet::new();
                for v in frontier.iter() {
                    next = next.union(&self.adj[v]);
                }
                frontier = next.intersection(u).difference(&comp);
                comp = comp.union(&frontier);
            }
            remaining = remaining.difference(&comp);
            out.push(comp);
        }
        Ok(out)
    }

    /// Number of connected components of the whole graph.
    pub fn component_count(&self) -> usize {
        self.components_in(&self.vertices()).unwrap().len()
    }

    /// Neighborhood as a bit mask; only valid for `n <= 64`.
    pub(crate) fn adj_mask(&self, v: usize) -> u64 {
        self.adj[v].as_mask().expect("graph order exceeds 64")
    }

    /// Component count and odd-order component count of `G[u]`, where `u`
    /// is a bit mask over vertices. Allocation-free; the hot path for the
    /// exhaustive toughness and Tutte-condition scans.
    pub(crate) fn component_parity_in_mask(&self, u: u64) -> (usize, usize) {
        let mut rem = u;
        let mut count = 0;
        let mut odd = 0;
        while rem != 0 {
            let mut comp = rem & rem.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.adj_mask(v);
                }
                frontier = next & u & !comp;
                comp |= frontier;
            }
            rem &= !comp;
            count += 1;
            odd += (comp.count_ones() % 2) as usize;
        }
        (count, odd)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// `e(S, T)`: edges with one endpoint in `s` and the other in `t`, each
    /// edge counted exactly once even when the sets overlap.
    pub fn edges_between(&self, s: &VertexSet, t: &VertexSet) -> Result<usize, Error> {
        self.check_subset(s)?;
        self.check_subset(t)?;
        // Summing |adj(v) ∩ t| over v in s counts edges inside s ∩ t twice.
        let mut total = 0usize;
        for v in s.iter() {
            total += self.adj[v].intersection_len(t);
        }
        let both = s.intersection(t);
        let mut inner_twice = 0usize;
        for v in both.iter() {
            inner_twice += self.adj[v].intersection_len(&both);
        }
        Ok(total - inner_twice / 2)
    }

    /// New graph with the listed edges deleted; every pair must be an edge.
    pub fn remove_edges(&self, edges: &[(usize, usize)]) -> Result<Self, Error> {
        let mut adj = self.adj.clone();
        for &(u, v) in edges {
            if !self.has_edge(u, v) {
                return Err(Error::NotAnEdge(u, v));
            }
            adj[u].remove(v);
            adj[v].remove(u);
        }
        Ok(Graph { n: self.n, adj })
    }

    /// Minimum and maximum degree. Errors on the empty graph.
    pub fn degree_extremes(&self) -> Result<(usize, usize), Error> {
        if self.n == 0 {
            return Err(Error::Argument(
                "degree extremes are undefined on the empty graph".into(),
            ));
        }
        let mut lo = usize::MAX;
        let mut hi = 0;
        for v in 0..self.n {
            let d = self.degree(v);
            lo = lo.min(d);
            hi = hi.max(d);
        }
        Ok((lo, hi))
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == self.n - 1)
    }

    /// Greedy 2-coloring. Returns one color class (the side containing the
    /// smallest vertex of each component), or `None` if an odd cycle exists.
    pub fn bipartition_side(&self) -> Option<VertexSet> {
        let mut color = vec![2u8; self.n];
        let mut side = VertexSet::new();
        for start in 0..self.n {
            if color[start] != 2 {
                continue;
            }
            color[start] = 0;
            side.insert(start);
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for u in self.adj[v].iter() {
                    if color[u] == 2 {
                        color[u] = 1 - color[v];
                        if color[u] == 0 {
                            side.insert(u);
                        }
                        queue.push(u);
                    } else if color[u] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition_side().is_some()
    }

    /// Checks that `s` induces no edge.
    pub fn check_independent(&self, s: &VertexSet) -> Result<(), Error> {
        self.check_subset(s)?;
        for v in s.iter() {
            if let Some(u) = self.adj[v].intersection(s).min_element() {
                return Err(Error::NotIndependent(v.min(u), v.max(u)));
            }
        }
        Ok(())
    }

    /// Checks that `s` induces a clique.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let inside = self.adj[v].intersection_len(s);
            inside == s.len() - 1
        })
    }

    /// Validates that `(x, y)` is a bipartition: disjoint independent sets
    /// covering all vertices.
    pub fn check_bipartition(&self, x: &VertexSet, y: &VertexSet) -> Result<(), Error> {
        if !x.is_disjoint(y) {
            return Err(Error::NotBipartition("sides overlap".into()));
        }
        if x.union(y) != self.vertices() {
            return Err(Error::NotBipartition(
                "sides do not cover the vertex set".into(),
            ));
        }
        self.check_independent(x)
            .map_err(|_| Error::NotBipartition("first side is not independent".into()))?;
        self.check_independent(y)
            .map_err(|_| Error::NotBipartition("second side is not independent".into()))?;
        Ok(())
    }

    /// Induced subgraph on `keep`, relabeled to `0..keep.len()`. Returns the
    /// new graph and the map from new labels back to the original ones.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let labels: Vec<usize> = keep.iter().collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in labels.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in labels.iter().enumerate() {
            for w in self.adj[v].intersection(keep).iter() {
                if index[w] > i {
                    edges.push((i, index[w]));
                }
            }
        }
        (
            Graph::new(labels.len(), &edges).expect("relabeled edges are in range"),
            labels,
        )
    }

    /// Adjacency lists in ascending order, for algorithms that walk edges.
    pub(crate) fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|v| self.adj[v].iter().collect()).collect()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, FamilySpec};

    fn k4() -> Graph {
        generate(&FamilySpec::Complete(4)).unwrap()
    }

    fn vs(members: &[usize]) -> VertexSet {
        members.iter().copied().collect()
    }

    #[test]
    fn construction_rejects_loops_and_range() {
        assert!(matches!(
            Graph::new(3, &[(1, 1)]),
            Err(Error::SelfLoop(1))
        ));
        assert!(matches!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { .. })
        ));
        let g = Graph::new(3, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn lambda_k_examples() {
        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        assert!(c5.lambda_k(&vs(&[0, 1]), 2).unwrap().is_empty());

        let g = k4();
        assert_eq!(g.lambda_k(&vs(&[0, 1]), 2).unwrap(), vs(&[2, 3]));
        assert_eq!(g.lambda_k(&vs(&[0, 1, 2]), 2).unwrap(), vs(&[0, 1, 2, 3]));
        assert!(g.lambda_k(&vs(&[0]), 0).is_err());
    }

    #[test]
    fn lambda_k_monotone_in_k() {
        let g = generate(&FamilySpec::Petersen).unwrap();
        let s = vs(&[0, 2, 5, 7]);
        let l1 = g.lambda_k(&s, 1).unwrap();
        let l2 = g.lambda_k(&s, 2).unwrap();
        let l3 = g.lambda_k(&s, 3).unwrap();
        assert!(l3.is_subset_of(&l2));
        assert!(l2.is_subset_of(&l1));
    }

    #[test]
    fn components_examples() {
        let g = k4();
        let comps = g.components_in(&g.vertices()).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].len(), 4);

        let two_triangles = generate(&FamilySpec::DisjointUnion(
            Box::new(FamilySpec::Complete(3)),
            Box::new(FamilySpec::Complete(3)),
        ))
        .unwrap();
        let comps = two_triangles.components_in(&two_triangles.vertices()).unwrap();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0], vs(&[0, 1, 2]));
        assert_eq!(comps[1], vs(&[3, 4, 5]));

        let star = generate(&FamilySpec::CompleteBipartite(1, 3)).unwrap();
        let leaves = vs(&[1, 2, 3]);
        let comps = star.components_in(&leaves).unwrap();
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn edges_between_counts_once() {
        let g = k4();
        assert_eq!(g.edges_between(&vs(&[0, 1]), &vs(&[2, 3])).unwrap(), 4);
        let t = vs(&[0, 1, 2]);
        assert_eq!(g.edges_between(&t, &t).unwrap(), 3);
        let c4 = generate(&FamilySpec::Cycle(4)).unwrap();
        assert_eq!(c4.edges_between(&vs(&[0]), &vs(&[1, 3])).unwrap(), 2);
    }

    #[test]
    fn remove_edges_is_persistent() {
        let g = k4();
        let h = g.remove_edges(&[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert_eq!(h.edge_count(), 4);
        assert!(!h.has_edge(0, 1));
        // 4-cycle 0-2-1-3-0 remains
        assert!(h.has_edge(0, 2) && h.has_edge(2, 1) && h.has_edge(1, 3) && h.has_edge(3, 0));
        assert!(matches!(
            h.remove_edges(&[(0, 1)]),
            Err(Error::NotAnEdge(0, 1))
        ));
        let same = g.remove_edges(&[]).unwrap();
        assert_eq!(same, g);
        let stripped = g.remove_edges(&g.edges()).unwrap();
        assert_eq!(stripped.edge_count(), 0);
        assert_eq!(stripped.n(), 4);
    }

    #[test]
    fn bipartition_detection() {
        let c4 = generate(&FamilySpec::Cycle(4)).unwrap();
        let side = c4.bipartition_side().unwrap();
        c4.check_bipartition(&side, &side.complement(4)).unwrap();
        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        assert!(c5.bipartition_side().is_none());
    }

    #[test]
    fn degree_extremes_examples() {
        let star = generate(&FamilySpec::CompleteBipartite(1, 3)).unwrap();
        assert_eq!(star.degree_extremes().unwrap(), (1, 3));
        let c6 = generate(&FamilySpec::Cycle(6)).unwrap();
        assert_eq!(c6.degree_extremes().unwrap(), (2, 2));
        assert!(Graph::empty(0).degree_extremes().is_err());
    }
}
