//! Matchings: maximum/perfect/near-perfect, hypomatchability, iterated
//! disjoint (near-)perfect matchings, and the bipartite machinery (Hall
//! violators, Lebensold values, flow-based disjoint X-covering matchings,
//! and proper bipartite edge coloring).

use crate::blossom::{self, UNMATCHED};
use crate::error::Error;
use crate::flow::Dinic;
use crate::graph::Graph;
use crate::vset::VertexSet;
use std::collections::BTreeMap;

/// A set of vertex-disjoint edges together with the covered vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
    covered: VertexSet,
}

impl Matching {
    /// Builds a matching from edges; panics if two edges share an endpoint.
    /// Edges are normalized to `u < v` and sorted.
    pub fn new(mut edges: Vec<(usize, usize)>) -> Self {
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        let mut covered = VertexSet::new();
        for &(u, v) in &edges {
            assert!(
                u != v && !covered.contains(u) && !covered.contains(v),
                "edges do not form a matching"
            );
            covered.insert(u);
            covered.insert(v);
        }
        Matching { edges, covered }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn covered(&self) -> &VertexSet {
        &self.covered
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn covers(&self, s: &VertexSet) -> bool {
        s.is_subset_of(&self.covered)
    }
}

/// An ordered list of pairwise edge-disjoint matchings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingFamily {
    matchings: Vec<Matching>,
}

impl MatchingFamily {
    /// Panics if any edge appears in two member matchings.
    pub fn new(matchings: Vec<Matching>) -> Self {
        let mut seen = std::collections::BTreeSet::new();
        for m in &matchings {
            for &e in m.edges() {
                assert!(seen.insert(e), "edge {e:?} appears in two matchings");
            }
        }
        MatchingFamily { matchings }
    }

    pub fn matchings(&self) -> &[Matching] {
        &self.matchings
    }

    pub fn len(&self) -> usize {
        self.matchings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matchings.is_empty()
    }
}

/// A set certifying that no perfect matching exists: deleting it leaves
/// more odd components than the set has vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TutteWitness {
    pub set: VertexSet,
    pub odd_count: usize,
}

/// Exhaustive Tutte-witness search is capped at this order; beyond it,
/// non-existence is reported without a witness.
pub const TUTTE_WITNESS_CAP: usize = 24;

fn mate_to_matching(mate: &[usize]) -> Matching {
    let edges: Vec<_> = mate
        .iter()
        .enumerate()
        .filter(|&(v, &m)| m != UNMATCHED && v < m)
        .map(|(v, &m)| (v, m))
        .collect();
    Matching::new(edges)
}

/// A maximum-cardinality matching. Deterministic for a fixed labeling.
pub fn max_matching(g: &Graph) -> Matching {
    mate_to_matching(&blossom::max_matching(&g.adjacency_lists()))
}

/// `q_G(u)`: the number of odd-order components of `G - u`.
pub fn tutte_q(g: &Graph, u: &VertexSet) -> Result<usize, Error> {
    let rest = u.complement(g.n());
    if g.n() <= 64 {
        if !u.is_subset_of(&g.vertices()) {
            return Err(Error::VertexOutOfRange {
                vertex: u.iter().find(|&v| v >= g.n()).unwrap_or(g.n()),
                order: g.n(),
            });
        }
        let mask = rest.as_mask().expect("n <= 64");
        return Ok(g.component_parity_in_mask(mask).1);
    }
    Ok(g.components_in(&rest)?
        .iter()
        .filter(|c| c.len() % 2 == 1)
        .count())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PerfectMatching {
    Found(Matching),
    /// No perfect matching; the witness is the smallest violating set by
    /// bitset value, present when the order is within the search cap.
    None { witness: Option<TutteWitness> },
}

/// Either a perfect matching or a Tutte witness `u` with `q_G(u) > |u|`.
pub fn perfect_matching(g: &Graph) -> PerfectMatching {
    let n = g.n();
    if n % 2 == 0 {
        let m = max_matching(g);
        if m.len() * 2 == n {
            return PerfectMatching::Found(m);
        }
    }
    let witness = if n <= TUTTE_WITNESS_CAP {
        let mut found = None;
        'search: for mask in 0u64..(1u64 << n) {
            let u: VertexSet = VertexSet::from_mask(mask);
            let q = tutte_q(g, &u).unwrap();
            if q > u.len() {
                found = Some(TutteWitness {
                    odd_count: q,
                    set: u,
                });
                break 'search;
            }
        }
        Some(found.expect("Tutte's theorem: a violator exists when no perfect matching does"))
    } else {
        None
    };
    PerfectMatching::None { witness }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Hypomatchable {
    /// For every vertex `v`, a perfect matching of `G - v` (in the original
    /// labels), indexed by `v`.
    Yes(Vec<Matching>),
    /// A vertex whose removal leaves no perfectly matchable graph.
    No { vertex: usize },
}

/// Decides hypomatchability by `n` blossom runs, one per deleted vertex.
pub fn hypomatchable(g: &Graph) -> Hypomatchable {
    let n = g.n();
    if n % 2 == 0 {
        // Even order can never be hypomatchable (G - v has odd order); for
        // n = 0 there is no vertex to certify with, but the empty list of
        // per-vertex matchings is also vacuously complete.
        if n == 0 {
            return Hypomatchable::Yes(Vec::new());
        }
        return Hypomatchable::No { vertex: 0 };
    }
    let mut certificates = Vec::with_capacity(n);
    for v in 0..n {
        let keep = VertexSet::singleton(v).complement(n);
        let (h, labels) = g.induced_subgraph(&keep);
        let m = max_matching(&h);
        if m.len() * 2 != n - 1 {
            return Hypomatchable::No { vertex: v };
        }
        certificates.push(Matching::new(
            m.edges()
                .iter()
                .map(|&(a, b)| (labels[a], labels[b]))
                .collect(),
        ));
    }
    Hypomatchable::Yes(certificates)
}

/// Failure report for the iterated disjoint-matching pipeline: the step at
/// which no (near-)perfect matching existed, and the residual graph.
#[derive(Clone, Debug)]
pub struct PipelineFailure {
    pub step: usize,
    pub residual: Graph,
}

impl std::fmt::Display for PipelineFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "no (near-)perfect matching at step {} (residual has {} edges)",
            self.step,
            self.residual.edge_count()
        )
    }
}

/// Builds `t` pairwise edge-disjoint matchings, each perfect (even order)
/// or near-perfect (odd order), by repeatedly matching and deleting.
pub fn disjoint_near_perfect_matchings(
    g: &Graph,
    t: usize,
) -> Result<MatchingFamily, PipelineFailure> {
    let target = g.n() / 2;
    let mut residual = g.clone();
    let mut found = Vec::with_capacity(t);
    for step in 0..t {
        let m = max_matching(&residual);
        if m.len() < target {
            return Err(PipelineFailure { step, residual });
        }
        residual = residual
            .remove_edges(m.edges())
            .expect("matching edges are present in the residual");
        found.push(m);
    }
    Ok(MatchingFamily::new(found))
}

/// Smallest (by bitset value) `S ⊆ x` with `|Λ(S)| < |S|`, or `None` when
/// Hall's condition holds on `x`.
pub fn hall_violator(g: &Graph, x: &VertexSet) -> Result<Option<VertexSet>, Error> {
    g.check_independent(x)?;
    let members: Vec<usize> = x.iter().collect();
    let m = members.len();
    if m > 25 {
        return Err(Error::Capacity {
            what: "exhaustive Hall-violator search",
            cap: 25,
            n: m,
        });
    }
    for mask in 1u64..(1u64 << m) {
        let s: VertexSet = (0..m)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| members[i])
            .collect();
        if g.lambda_k(&s, 1)?.len() < s.len() {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

/// `L^k(s) = Σ_{y ∉ x} min(k, |Λ(y) ∩ s|)`.
pub fn lebensold_value(g: &Graph, x: &VertexSet, s: &VertexSet, k: usize) -> Result<usize, Error> {
    g.check_independent(x)?;
    if !s.is_subset_of(x) {
        return Err(Error::Argument("s must be a subset of x".into()));
    }
    let y = x.complement(g.n());
    Ok(y.iter()
        .map(|v| k.min(g.neighbors(v).intersection_len(s)))
        .sum())
}

#[derive(Clone, Debug)]
pub enum XCoverOutcome {
    /// `k` pairwise edge-disjoint matchings, each covering all of `x`.
    Matchings(MatchingFamily),
    /// A set `S ⊆ x` with `L^k(S) < k |S|`.
    Violator(VertexSet),
}

/// Decides whether `k` disjoint matchings covering `x` exist, by max-flow:
/// source -> each x-vertex (capacity k), x-y edges (capacity 1), each
/// y-vertex -> sink (capacity k). On success the flow subgraph has degree
/// exactly `k` on `x` and at most `k` elsewhere, and is split into `k`
/// color classes by proper edge coloring; each class covers `x`. On failure
/// the smallest violating set is returned.
pub fn disjoint_x_covering_matchings(
    g: &Graph,
    x: &VertexSet,
    k: usize,
) -> Result<XCoverOutcome, Error> {
    if k == 0 {
        return Err(Error::Argument(
            "disjoint_x_covering_matchings requires k >= 1".into(),
        ));
    }
    g.check_independent(x)?;
    let n = g.n();
    let y = x.complement(n);
    let (source, sink) = (n, n + 1);
    let mut net = Dinic::new(n + 2);
    for v in x.iter() {
        net.add_edge(source, v, k as i64);
    }
    let mut edge_refs = Vec::new();
    for v in x.iter() {
        for w in g.neighbors(v).iter() {
            edge_refs.push(((v, w), net.add_edge(v, w, 1)));
        }
    }
    for w in y.iter() {
        net.add_edge(w, sink, k as i64);
    }
    let value = net.max_flow(source, sink);
    if value == (k * x.len()) as i64 {
        let carried: Vec<(usize, usize)> = edge_refs
            .iter()
            .filter(|&&(_, r)| net.flow_on(r) == 1)
            .map(|&(e, _)| e)
            .collect();
        let sub = Graph::new(n, &carried).expect("flow edges are graph edges");
        let coloring = bipartite_edge_color_with_side(&sub, k, x)?;
        let mut classes = vec![Vec::new(); k];
        for (&edge, &color) in &coloring {
            classes[color].push(edge);
        }
        let matchings: Vec<Matching> = classes.into_iter().map(Matching::new).collect();
        for m in &matchings {
            assert!(m.covers(x), "color class misses part of x");
        }
        return Ok(XCoverOutcome::Matchings(MatchingFamily::new(matchings)));
    }
    // By max-flow duality a violating set exists; find the smallest.
    let members: Vec<usize> = x.iter().collect();
    let m = members.len();
    for mask in 1u64..(1u64 << m) {
        let s: VertexSet = (0..m)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| members[i])
            .collect();
        if lebensold_value(g, x, &s, k)? < k * s.len() {
            return Ok(XCoverOutcome::Violator(s));
        }
    }
    unreachable!("flow deficit without a violating set");
}

/// Proper `k`-edge-coloring of a bipartite graph with `k >= Δ(G)`, by
/// incremental alternating-path recoloring. Keys are edges `(u, v)` with
/// `u < v`; colors are `0..k`.
pub fn bipartite_edge_color(
    g: &Graph,
    k: usize,
) -> Result<BTreeMap<(usize, usize), usize>, Error> {
    let side = g
        .bipartition_side()
        .ok_or_else(|| Error::Argument("graph is not bipartite".into()))?;
    bipartite_edge_color_with_side(g, k, &side)
}

fn bipartite_edge_color_with_side(
    g: &Graph,
    k: usize,
    _side: &VertexSet,
) -> Result<BTreeMap<(usize, usize), usize>, Error> {
    let n = g.n();
    let max_deg = if n == 0 { 0 } else { g.degree_extremes()?.1 };
    if k < max_deg {
        return Err(Error::Argument(format!(
            "need at least Δ = {max_deg} colors, got {k}"
        )));
    }
    // Colors above Δ are never needed: the smallest free color at a vertex
    // with fewer than Δ colored edges is below Δ.
    let palette = max_deg;
    let mut partner = vec![vec![usize::MAX; palette]; n];
    let free = |partner: &Vec<Vec<usize>>, v: usize| -> usize {
        (0..palette)
            .find(|&c| partner[v][c] == usize::MAX)
            .expect("a free color always exists below Δ")
    };
    let mut colors = BTreeMap::new();
    for (u, v) in g.edges() {
        let a = free(&partner, u);
        let b = free(&partner, v);
        if a != b {
            // Flip the maximal (a, b)-alternating path starting at v with
            // an a-edge. In a bipartite graph it cannot end at u (it would
            // arrive on the wrong side), so afterwards a is free at both.
            let mut path = vec![v];
            let mut want = a;
            loop {
                let w = *path.last().unwrap();
                let next = partner[w][want];
                if next == usize::MAX {
                    break;
                }
                path.push(next);
                want = if want == a { b } else { a };
            }
            debug_assert!(!path.contains(&u));
            for i in 0..path.len() - 1 {
                let (w, x) = (path[i], path[i + 1]);
                let old = if i % 2 == 0 { a } else { b };
                partner[w][old] = usize::MAX;
                partner[x][old] = usize::MAX;
            }
            for i in 0..path.len() - 1 {
                let (w, x) = (path[i], path[i + 1]);
                let new = if i % 2 == 0 { b } else { a };
                partner[w][new] = x;
                partner[x][new] = w;
                colors.insert((w.min(x), w.max(x)), new);
            }
        }
        partner[u][a] = v;
        partner[v][a] = u;
        colors.insert((u.min(v), u.max(v)), a);
    }
    Ok(colors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, FamilySpec};

    fn vs(members: &[usize]) -> VertexSet {
        members.iter().copied().collect()
    }

    #[test]
    fn tutte_q_examples() {
        let star = generate(&FamilySpec::CompleteBipartite(1, 3)).unwrap();
        assert_eq!(tutte_q(&star, &vs(&[0])).unwrap(), 3);
        let k4 = generate(&FamilySpec::Complete(4)).unwrap();
        assert_eq!(tutte_q(&k4, &VertexSet::new()).unwrap(), 0);
        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        assert_eq!(tutte_q(&c5, &vs(&[0])).unwrap(), 0);
    }

    #[test]
    fn perfect_matching_examples() {
        let k4 = generate(&FamilySpec::Complete(4)).unwrap();
        match perfect_matching(&k4) {
            PerfectMatching::Found(m) => assert_eq!(m.len(), 2),
            other => panic!("expected matching, got {other:?}"),
        }

        let star = generate(&FamilySpec::CompleteBipartite(1, 3)).unwrap();
        match perfect_matching(&star) {
            PerfectMatching::None { witness: Some(w) } => {
                assert_eq!(w.set, vs(&[0]));
                assert_eq!(w.odd_count, 3);
            }
            other => panic!("expected witness, got {other:?}"),
        }

        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        match perfect_matching(&c5) {
            PerfectMatching::None { witness: Some(w) } => {
                assert!(w.set.is_empty());
                assert_eq!(w.odd_count, 1);
            }
            other => panic!("expected witness, got {other:?}"),
        }
    }

    #[test]
    fn hypomatchable_examples() {
        let k5 = generate(&FamilySpec::Complete(5)).unwrap();
        match hypomatchable(&k5) {
            Hypomatchable::Yes(ms) => {
                assert_eq!(ms.len(), 5);
                for (v, m) in ms.iter().enumerate() {
                    assert_eq!(m.len(), 2);
                    assert!(!m.covered().contains(v));
                }
            }
            other => panic!("expected yes, got {other:?}"),
        }

        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        assert!(matches!(hypomatchable(&c5), Hypomatchable::Yes(_)));

        let p3 = generate(&FamilySpec::Path(3)).unwrap();
        assert_eq!(hypomatchable(&p3), Hypomatchable::No { vertex: 1 });

        let k1 = generate(&FamilySpec::Complete(1)).unwrap();
        assert!(matches!(hypomatchable(&k1), Hypomatchable::Yes(_)));
    }

    #[test]
    fn disjoint_matchings_examples() {
        let k6 = generate(&FamilySpec::Complete(6)).unwrap();
        let fam = disjoint_near_perfect_matchings(&k6, 2).unwrap();
        assert_eq!(fam.len(), 2);
        for m in fam.matchings() {
            assert_eq!(m.len(), 3);
        }

        let k4 = generate(&FamilySpec::Complete(4)).unwrap();
        assert_eq!(disjoint_near_perfect_matchings(&k4, 1).unwrap().len(), 1);

        let c4 = generate(&FamilySpec::Cycle(4)).unwrap();
        let fam = disjoint_near_perfect_matchings(&c4, 2).unwrap();
        assert_eq!(fam.len(), 2);

        // C4 has only two disjoint perfect matchings.
        let failure = disjoint_near_perfect_matchings(&c4, 3).unwrap_err();
        assert_eq!(failure.step, 2);
        assert_eq!(failure.residual.edge_count(), 0);

        // Odd order: near-perfect matchings.
        let k5 = generate(&FamilySpec::Complete(5)).unwrap();
        let fam = disjoint_near_perfect_matchings(&k5, 2).unwrap();
        for m in fam.matchings() {
            assert_eq!(m.len(), 2);
        }
    }

    #[test]
    fn hall_violator_examples() {
        let k22 = generate(&FamilySpec::CompleteBipartite(2, 2)).unwrap();
        assert_eq!(hall_violator(&k22, &vs(&[0, 1])).unwrap(), None);

        let star = generate(&FamilySpec::CompleteBipartite(1, 3)).unwrap();
        let v = hall_violator(&star, &vs(&[1, 2, 3])).unwrap().unwrap();
        assert_eq!(v, vs(&[1, 2]));

        let three_edges = generate(&FamilySpec::DisjointUnion(
            Box::new(FamilySpec::DisjointUnion(
                Box::new(FamilySpec::Path(2)),
                Box::new(FamilySpec::Path(2)),
            )),
            Box::new(FamilySpec::Path(2)),
        ))
        .unwrap();
        assert_eq!(hall_violator(&three_edges, &vs(&[0, 2, 4])).unwrap(), None);
    }

    #[test]
    fn lebensold_value_examples() {
        let k33 = generate(&FamilySpec::CompleteBipartite(3, 3)).unwrap();
        let x = vs(&[0, 1, 2]);
        assert_eq!(lebensold_value(&k33, &x, &x, 3).unwrap(), 9);
        assert_eq!(lebensold_value(&k33, &x, &x, 2).unwrap(), 6);

        let star = generate(&FamilySpec::CompleteBipartite(1, 3)).unwrap();
        let leaves = vs(&[1, 2, 3]);
        assert_eq!(lebensold_value(&star, &leaves, &leaves, 2).unwrap(), 2);
    }

    #[test]
    fn x_covering_matchings_examples() {
        let k33 = generate(&FamilySpec::CompleteBipartite(3, 3)).unwrap();
        match disjoint_x_covering_matchings(&k33, &vs(&[0, 1, 2]), 3).unwrap() {
            XCoverOutcome::Matchings(fam) => {
                assert_eq!(fam.len(), 3);
                for m in fam.matchings() {
                    assert_eq!(m.len(), 3);
                }
            }
            other => panic!("expected matchings, got {other:?}"),
        }

        let star = generate(&FamilySpec::CompleteBipartite(1, 3)).unwrap();
        match disjoint_x_covering_matchings(&star, &vs(&[1, 2, 3]), 1).unwrap() {
            XCoverOutcome::Violator(s) => assert_eq!(s, vs(&[1, 2])),
            other => panic!("expected violator, got {other:?}"),
        }

        let c6 = generate(&FamilySpec::Cycle(6)).unwrap();
        match disjoint_x_covering_matchings(&c6, &vs(&[0, 2, 4]), 2).unwrap() {
            XCoverOutcome::Matchings(fam) => {
                assert_eq!(fam.len(), 2);
                for m in fam.matchings() {
                    assert!(m.covers(&vs(&[0, 2, 4])));
                }
            }
            other => panic!("expected matchings, got {other:?}"),
        }
    }

    #[test]
    fn edge_coloring_examples() {
        let c6 = generate(&FamilySpec::Cycle(6)).unwrap();
        let colors = bipartite_edge_color(&c6, 2).unwrap();
        assert_proper(&c6, &colors, 2);

        let k33 = generate(&FamilySpec::CompleteBipartite(3, 3)).unwrap();
        let colors = bipartite_edge_color(&k33, 3).unwrap();
        assert_proper(&k33, &colors, 3);
        // Each class of a 3-coloring of K_{3,3} is a perfect matching.
        for c in 0..3 {
            assert_eq!(colors.values().filter(|&&x| x == c).count(), 3);
        }

        let p4 = generate(&FamilySpec::Path(4)).unwrap();
        let colors = bipartite_edge_color(&p4, 2).unwrap();
        assert_proper(&p4, &colors, 2);

        assert!(bipartite_edge_color(&k33, 2).is_err());
        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        assert!(bipartite_edge_color(&c5, 5).is_err());
    }

    fn assert_proper(
        g: &Graph,
        colors: &BTreeMap<(usize, usize), usize>,
        k: usize,
    ) {
        assert_eq!(colors.len(), g.edge_count());
        for (&(u, v), &c) in colors {
            assert!(g.has_edge(u, v));
            assert!(c < k);
        }
        for v in 0..g.n() {
            let mut seen = std::collections::BTreeSet::new();
            for (&(a, b), &c) in colors {
                if a == v || b == v {
                    assert!(seen.insert(c), "vertex {v} sees color {c} twice");
                }
            }
        }
    }

    #[test]
    fn coloring_on_random_bipartite_graphs() {
        // Exhaustive over all bipartite graphs with sides 3 and 3.
        for mask in 0u32..(1 << 9) {
            let mut edges = Vec::new();
            for x in 0..3 {
                for y in 0..3 {
                    if mask >> (3 * x + y) & 1 == 1 {
                        edges.push((x, 3 + y));
                    }
                }
            }
            let g = Graph::new(6, &edges).unwrap();
            let deg = if edges.is_empty() {
                0
            } else {
                g.degree_extremes().unwrap().1
            };
            if deg == 0 {
                continue;
            }
            let colors = bipartite_edge_color(&g, deg).unwrap();
            assert_proper(&g, &colors, deg);
        }
    }
}
