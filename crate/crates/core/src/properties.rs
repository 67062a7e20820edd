//! Classical graph parameters computed exactly: toughness, independence
//! number, vertex connectivity, degree extremes (the latter lives on
//! `Graph`).

use crate::error::Error;
use crate::flow::Dinic;
use crate::graph::Graph;
use crate::Rational;
use std::cmp::Ordering;

/// Exact toughness; complete graphs take the value infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Toughness {
    Finite(Rational),
    Infinite,
}

impl Toughness {
    pub fn at_least(&self, bound: Rational) -> bool {
        match self {
            Toughness::Infinite => true,
            Toughness::Finite(r) => *r >= bound,
        }
    }
}

impl PartialOrd for Toughness {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Toughness {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Toughness::Infinite, Toughness::Infinite) => Ordering::Equal,
            (Toughness::Infinite, _) => Ordering::Greater,
            (_, Toughness::Infinite) => Ordering::Less,
            (Toughness::Finite(a), Toughness::Finite(b)) => a.cmp(b),
        }
    }
}

pub const TOUGHNESS_CAP: usize = 16;

pub fn toughness(g: &Graph) -> Result<Toughness, Error> {
    toughness_capped(g, TOUGHNESS_CAP)
}

/// Minimum of `|S| / c(G - S)` over all cut sets `S` with `c(G - S) > 1`,
/// by exhaustive subset enumeration. Complete graphs (which have no such
/// `S`) are infinitely tough.
pub fn toughness_capped(g: &Graph, cap: usize) -> Result<Toughness, Error> {
    let n = g.n();
    if n > cap || n > 62 {
        return Err(Error::Capacity {
            what: "exhaustive toughness search",
            cap: cap.min(62),
            n,
        });
    }
    if g.is_complete() {
        return Ok(Toughness::Infinite);
    }
    let full = (1u64 << n) - 1;
    let mut best: Option<Rational> = None;
    for mask in 0u64..(1u64 << n) {
        let rest = full & !mask;
        if rest.count_ones() <= 1 {
            continue;
        }
        let (c, _) = g.component_parity_in_mask(rest);
        if c > 1 {
            let ratio = Rational::new(mask.count_ones() as i64, c as i64);
            if best.is_none_or(|b| ratio < b) {
                best = Some(ratio);
            }
        }
    }
    Ok(Toughness::Finite(best.expect(
        "a non-complete graph has a disconnecting set",
    )))
}

pub const INDEPENDENCE_CAP: usize = 30;

pub fn independence_number(g: &Graph) -> Result<usize, Error> {
    independence_number_capped(g, INDEPENDENCE_CAP)
}

/// Exact independence number: maximum clique of the complement by branch
/// and bound with a greedy-coloring bound.
pub fn independence_number_capped(g: &Graph, cap: usize) -> Result<usize, Error> {
    let n = g.n();
    if n > cap || n > 62 {
        return Err(Error::Capacity {
            what: "independence-number branch and bound",
            cap: cap.min(62),
            n,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let full = (1u64 << n) - 1;
    // Complement adjacency.
    let co_adj: Vec<u64> = (0..n)
        .map(|v| {
            let mask = g.neighbors(v).as_mask().expect("n <= 62");
            full & !mask & !(1u64 << v)
        })
        .collect();
    let mut best = 0usize;
    expand_clique(&co_adj, full, 0, &mut best);
    Ok(best)
}

fn expand_clique(adj: &[u64], cand: u64, size: usize, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    // Greedy coloring of the candidates; the color index bounds how much
    // the clique can still grow.
    let mut order: Vec<(usize, usize)> = Vec::with_capacity(cand.count_ones() as usize);
    let mut uncolored = cand;
    let mut color = 0usize;
    while uncolored != 0 {
        color += 1;
        let mut class = uncolored;
        while class != 0 {
            let v = class.trailing_zeros() as usize;
            order.push((v, color));
            uncolored &= !(1u64 << v);
            class &= !(1u64 << v) & !adj[v];
        }
    }
    let mut remaining = cand;
    for &(v, c) in order.iter().rev() {
        if size + c <= *best {
            return;
        }
        expand_clique(adj, remaining & adj[v], size + 1, best);
        remaining &= !(1u64 << v);
    }
}

/// Exact vertex connectivity via unit-capacity vertex-splitting max-flow
/// over all non-adjacent pairs; `n - 1` for complete graphs, `0` for
/// disconnected graphs or fewer than two vertices.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    if !g.is_connected() {
        return 0;
    }
    let mut best = usize::MAX;
    for s in 0..n {
        for t in s + 1..n {
            if g.has_edge(s, t) {
                continue;
            }
            // Split each vertex v into v_in = 2v and v_out = 2v + 1 with a
            // unit edge; graph edges go out -> in in both directions.
            let mut net = Dinic::new(2 * n);
            for v in 0..n {
                net.add_edge(2 * v, 2 * v + 1, 1);
            }
            for (a, b) in g.edges() {
                net.add_edge(2 * a + 1, 2 * b, 1);
                net.add_edge(2 * b + 1, 2 * a, 1);
            }
            let flow = net.max_flow(2 * s + 1, 2 * t) as usize;
            best = best.min(flow);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, FamilySpec};
    use crate::vset::VertexSet;

    #[test]
    fn toughness_examples() {
        let c4 = generate(&FamilySpec::Cycle(4)).unwrap();
        assert_eq!(
            toughness(&c4).unwrap(),
            Toughness::Finite(Rational::new(1, 1))
        );
        let k5 = generate(&FamilySpec::Complete(5)).unwrap();
        assert_eq!(toughness(&k5).unwrap(), Toughness::Infinite);
        let star = generate(&FamilySpec::CompleteBipartite(1, 3)).unwrap();
        assert_eq!(
            toughness(&star).unwrap(),
            Toughness::Finite(Rational::new(1, 3))
        );
        // Disconnected graphs have toughness 0.
        let two = generate(&FamilySpec::DisjointUnion(
            Box::new(FamilySpec::Complete(2)),
            Box::new(FamilySpec::Complete(2)),
        ))
        .unwrap();
        assert_eq!(
            toughness(&two).unwrap(),
            Toughness::Finite(Rational::new(0, 1))
        );
        assert!(toughness(&Graph::empty(17)).is_err());
        assert!(Toughness::Infinite > Toughness::Finite(Rational::new(100, 1)));
    }

    #[test]
    fn independence_examples() {
        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        assert_eq!(independence_number(&c5).unwrap(), 2);
        let k4 = generate(&FamilySpec::Complete(4)).unwrap();
        assert_eq!(independence_number(&k4).unwrap(), 1);
        let petersen = generate(&FamilySpec::Petersen).unwrap();
        assert_eq!(independence_number(&petersen).unwrap(), 4);
        assert_eq!(independence_number(&Graph::empty(7)).unwrap(), 7);
        assert_eq!(independence_number(&Graph::empty(0)).unwrap(), 0);
    }

    #[test]
    fn independence_matches_brute_force() {
        for n in 0..=6usize {
            let bits = n * n.saturating_sub(1) / 2;
            for mask in (0u64..(1 << bits)).step_by(3) {
                let g = crate::harness::graph_from_edge_mask(n, mask);
                let brute = (0u64..(1 << n))
                    .filter(|&s| {
                        let set = VertexSet::from_mask(s);
                        g.check_independent(&set).is_ok()
                    })
                    .map(|s| s.count_ones() as usize)
                    .max()
                    .unwrap_or(0);
                assert_eq!(independence_number(&g).unwrap(), brute, "n={n} mask={mask}");
            }
        }
    }

    #[test]
    fn connectivity_examples() {
        let k33 = generate(&FamilySpec::CompleteBipartite(3, 3)).unwrap();
        assert_eq!(vertex_connectivity(&k33), 3);
        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        assert_eq!(vertex_connectivity(&c5), 2);
        let petersen = generate(&FamilySpec::Petersen).unwrap();
        assert_eq!(vertex_connectivity(&petersen), 3);
        let k4 = generate(&FamilySpec::Complete(4)).unwrap();
        assert_eq!(vertex_connectivity(&k4), 3);
        let path = generate(&FamilySpec::Path(4)).unwrap();
        assert_eq!(vertex_connectivity(&path), 1);
        let two = generate(&FamilySpec::DisjointUnion(
            Box::new(FamilySpec::Complete(2)),
            Box::new(FamilySpec::Complete(2)),
        ))
        .unwrap();
        assert_eq!(vertex_connectivity(&two), 0);
        assert_eq!(vertex_connectivity(&Graph::empty(1)), 0);
    }

    #[test]
    fn connectivity_below_min_degree() {
        for mask in (0u64..(1 << 15)).step_by(7) {
            let g = crate::harness::graph_from_edge_mask(6, mask);
            let kappa = vertex_connectivity(&g);
            let delta = g.degree_extremes().unwrap().0;
            assert!(kappa <= delta, "mask={mask}");
        }
    }
}
