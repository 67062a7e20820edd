//! Exhaustive verification of the claim catalog over small graphs.
//!
//! Sources are either the internal enumeration of all labeled graphs on
//! `n <= 7` vertices (in ascending edge-bitmask order, so the first
//! counterexample reported is the minimum one) or a file of graph6 lines.
//! Verification fans out across worker threads; reports are merged in
//! stream order, so identical inputs produce identical reports.

mod checks;

pub use checks::{check_claim, ClaimId, Outcome};

use crate::error::Error;
use crate::graph::Graph;
use crate::graph6::{parse_graph6, write_graph6};
use crate::vset::VertexSet;
use rayon::prelude::*;
use std::path::PathBuf;
use std::time::{Duration, Instant};

/// Largest order for the internal all-labeled-graphs enumeration.
pub const INTERNAL_CAP: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSource {
    /// All `2^(n(n-1)/2)` labeled graphs on `n` vertices, ascending by edge
    /// bitmask.
    Internal(usize),
    /// graph6 lines from a file, one graph per line, in file order.
    Stream(PathBuf),
}

/// Builds the labeled graph whose edge bitmask is `mask`: bit
/// `j(j-1)/2 + i` encodes the pair `(i, j)` with `i < j`, the same column
/// order as the graph6 format.
pub fn graph_from_edge_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> bit & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::new(n, &edges).expect("triangle pairs are in range")
}

enum Resolved {
    Internal { n: usize },
    Graphs(Vec<Graph>),
}

impl Resolved {
    fn len(&self) -> u64 {
        match self {
            Resolved::Internal { n } => 1u64 << (n * (n - 1) / 2),
            Resolved::Graphs(v) => v.len() as u64,
        }
    }

    fn get(&self, idx: u64) -> Graph {
        match self {
            Resolved::Internal { n } => graph_from_edge_mask(*n, idx),
            Resolved::Graphs(v) => v[idx as usize].clone(),
        }
    }
}

fn resolve(source: &GraphSource) -> Result<Resolved, Error> {
    match source {
        GraphSource::Internal(n) => {
            if *n > INTERNAL_CAP {
                return Err(Error::Capacity {
                    what: "internal labeled-graph enumeration",
                    cap: INTERNAL_CAP,
                    n: *n,
                });
            }
            Ok(Resolved::Internal { n: *n })
        }
        GraphSource::Stream(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            let mut graphs = Vec::new();
            for (i, line) in text.lines().enumerate() {
                let line = line.trim_end();
                if line.is_empty() {
                    continue;
                }
                graphs.push(parse_graph6(line).map_err(|source| Error::Stream {
                    path: path.display().to_string(),
                    line: i + 1,
                    source,
                })?);
            }
            Ok(Resolved::Graphs(graphs))
        }
    }
}

/// Deterministic stream over a source's graphs.
pub fn enumerate_graphs(source: &GraphSource) -> Result<impl Iterator<Item = Graph>, Error> {
    let resolved = resolve(source)?;
    Ok((0..resolved.len()).map(move |i| resolved.get(i)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub graph6: String,
    pub k: usize,
    pub details: String,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub claim: String,
    pub graphs_scanned: u64,
    pub hypothesis_hits: u64,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn verified(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

fn graph_tag(g: &Graph) -> String {
    write_graph6(g).unwrap_or_else(|_| format!("{g:?}"))
}

/// Runs a claim over an indexed family of graphs, in parallel, merging in
/// index order. This is the engine behind `verify_claim`; it is public so
/// custom enumerations (split graphs, bipartite sweeps) can reuse it.
pub fn verify_claim_indexed<F>(
    claim: ClaimId,
    total: u64,
    get: F,
    k_values: &[usize],
) -> VerificationReport
where
    F: Fn(u64) -> Graph + Sync,
{
    let started = Instant::now();
    let ks: Vec<usize> = if claim.uses_k() {
        k_values.to_vec()
    } else {
        vec![0]
    };
    let (hits, mut counterexamples) = (0..total as usize)
        .into_par_iter()
        .with_min_len(256)
        .map(|idx| {
            let idx = idx as u64;
            let g = get(idx);
            let mut hits = 0u64;
            let mut cex: Vec<(u64, usize, Counterexample)> = Vec::new();
            for (pos, &k) in ks.iter().enumerate() {
                match check_claim(claim, &g, k) {
                    Outcome::Vacuous => {}
                    Outcome::Holds => hits += 1,
                    Outcome::Fails(details) => {
                        hits += 1;
                        cex.push((
                            idx,
                            pos,
                            Counterexample {
                                graph6: graph_tag(&g),
                                k,
                                details,
                            },
                        ));
                    }
                }
            }
            (hits, cex)
        })
        .reduce(
            || (0u64, Vec::new()),
            |(h1, mut c1), (h2, c2)| {
                c1.extend(c2);
                (h1 + h2, c1)
            },
        );
    counterexamples.sort_by_key(|(idx, pos, _)| (*idx, *pos));
    VerificationReport {
        claim: claim.name().to_string(),
        graphs_scanned: total,
        hypothesis_hits: hits,
        counterexamples: counterexamples.into_iter().map(|(_, _, c)| c).collect(),
        elapsed: started.elapsed(),
    }
}

/// Verifies one claim over a graph source for the given k values.
pub fn verify_claim(
    claim: ClaimId,
    source: &GraphSource,
    k_values: &[usize],
) -> Result<VerificationReport, Error> {
    let resolved = resolve(source)?;
    Ok(verify_claim_indexed(
        claim,
        resolved.len(),
        |i| resolved.get(i),
        k_values,
    ))
}

/// All split partitions `(x independent, y clique)` of `g`, by ascending
/// clique-side bitmask. Empty when none exist (also for `n > 25`, beyond
/// desk scale).
pub fn split_partitions(g: &Graph) -> Vec<(VertexSet, VertexSet)> {
    let n = g.n();
    if n > 25 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for y_mask in 0u64..(1u64 << n) {
        let y = VertexSet::from_mask(y_mask);
        let x = y.complement(n);
        if g.is_clique(&y) && g.check_independent(&x).is_ok() {
            out.push((x, y));
        }
    }
    out
}

/// The split partition maximizing the clique side (ties to the smallest
/// clique bitmask), so that no independent-side vertex is adjacent to all
/// of the clique.
pub fn split_partition_normalized(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    split_partitions(g)
        .into_iter()
        .max_by(|(_, y1), (_, y2)| {
            y1.len()
                .cmp(&y2.len())
                .then_with(|| y2.value_cmp(y1))
        })
}

/// All choices of one bipartition side, or `None` if the graph has an odd
/// cycle. Each connected component contributes an independent two-way
/// choice; the number of results is `2^components`, capped at 16
/// components.
pub fn bipartition_sides(g: &Graph) -> Option<Vec<VertexSet>> {
    let base = g.bipartition_side()?;
    let comps = g.components_in(&g.vertices()).unwrap();
    if comps.len() > 16 {
        return None;
    }
    let mut out = Vec::with_capacity(1 << comps.len());
    for combo in 0u64..(1u64 << comps.len()) {
        let mut x = VertexSet::new();
        for (i, c) in comps.iter().enumerate() {
            let side = base.intersection(c);
            if combo >> i & 1 == 1 {
                x = x.union(&c.difference(&side));
            } else {
                x = x.union(&side);
            }
        }
        out.push(x);
    }
    Some(out)
}

/// Indexed enumeration of every labeled split graph on `n` vertices: each
/// choice of clique side `Y` contributes all `2^(|X||Y|)` cross-edge
/// patterns. Graphs with several split partitions appear once per
/// partition, which is harmless for universally quantified checks.
pub struct SplitGraphs {
    n: usize,
    // (y_mask, first index of its block)
    parts: Vec<(u64, u64)>,
    total: u64,
}

impl SplitGraphs {
    pub fn new(n: usize) -> Self {
        assert!(n <= 10, "split enumeration is desk-scale only");
        let mut parts = Vec::new();
        let mut total = 0u64;
        for y_mask in 0u64..(1u64 << n) {
            let y_size = y_mask.count_ones() as usize;
            let x_size = n - y_size;
            parts.push((y_mask, total));
            total += 1u64 << (x_size * y_size);
        }
        SplitGraphs { n, parts, total }
    }

    pub fn len(&self) -> u64 {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    pub fn get(&self, idx: u64) -> Graph {
        let part = self
            .parts
            .partition_point(|&(_, start)| start <= idx)
            .saturating_sub(1);
        let (y_mask, start) = self.parts[part];
        let cross = idx - start;
        let ys: Vec<usize> = (0..self.n).filter(|&v| y_mask >> v & 1 == 1).collect();
        let xs: Vec<usize> = (0..self.n).filter(|&v| y_mask >> v & 1 == 0).collect();
        let mut edges = Vec::new();
        for (i, &a) in ys.iter().enumerate() {
            for &b in &ys[i + 1..] {
                edges.push((a, b));
            }
        }
        for (i, &x) in xs.iter().enumerate() {
            for (j, &y) in ys.iter().enumerate() {
                if cross >> (i * ys.len() + j) & 1 == 1 {
                    edges.push((x, y));
                }
            }
        }
        Graph::new(self.n, &edges).expect("labels in range")
    }
}

/// Indexed enumeration of all bipartite graphs with designated sides of
/// sizes `a` (labels `0..a`) and `b` (labels `a..a+b`).
pub struct BipartiteInstances {
    pub a: usize,
    pub b: usize,
}

impl BipartiteInstances {
    pub fn new(a: usize, b: usize) -> Self {
        assert!(a * b <= 36, "bipartite enumeration is desk-scale only");
        BipartiteInstances { a, b }
    }

    pub fn len(&self) -> u64 {
        1u64 << (self.a * self.b)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The graph for `mask` together with its designated x side.
    pub fn get(&self, mask: u64) -> (Graph, VertexSet) {
        let mut edges = Vec::new();
        for x in 0..self.a {
            for y in 0..self.b {
                if mask >> (x * self.b + y) & 1 == 1 {
                    edges.push((x, self.a + y));
                }
            }
        }
        let g = Graph::new(self.a + self.b, &edges).expect("labels in range");
        let x: VertexSet = (0..self.a).collect();
        (g, x)
    }
}

/// Conjecture probes: exploratory sweeps whose findings are evidence, not
/// proof.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProbeId {
    /// Does β^k(G, X) >= 1 force a k-factor covering X? Checked under two
    /// interpretations: (a) a subgraph that is k-regular on all its own
    /// vertices and contains X; (b) a spanning subgraph with degree exactly
    /// k on X and at most k elsewhere.
    BipKfactorCoverX,
    /// Does β^k(G) >= 1 force a t-factor for intermediate t?
    FactorSpectrum,
}

impl ProbeId {
    pub fn name(&self) -> &'static str {
        match self {
            ProbeId::BipKfactorCoverX => "BIP_KFACTOR_COVER_X",
            ProbeId::FactorSpectrum => "FACTOR_SPECTRUM",
        }
    }
}

impl std::str::FromStr for ProbeId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "BIP_KFACTOR_COVER_X" => Ok(ProbeId::BipKfactorCoverX),
            "FACTOR_SPECTRUM" => Ok(ProbeId::FactorSpectrum),
            _ => Err(Error::Argument(format!("unknown probe '{s}'"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ProbeParams {
    pub k: usize,
    /// Factor degree for `FactorSpectrum`.
    pub t: Option<usize>,
}

/// Checks interpretation (a): some subgraph that is k-regular on its own
/// vertex set and contains all of `x`. Equivalently some `|x|`-subset `y'`
/// of the other side spans an induced graph with a k-factor.
fn has_kfactor_covering_x_subgraph(g: &Graph, x: &VertexSet, k: usize) -> bool {
    let y: Vec<usize> = x.complement(g.n()).iter().collect();
    let need = x.len();
    if y.len() < need {
        return false;
    }
    let mut chosen: Vec<usize> = Vec::with_capacity(need);
    subsets_of_size(&y, need, 0, &mut chosen, &mut |subset| {
        let keep = x.union(&subset.iter().copied().collect());
        let (h, _) = g.induced_subgraph(&keep);
        crate::factors::find_k_factor(&h, k).is_some()
    })
}

fn subsets_of_size(
    pool: &[usize],
    need: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    found: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if chosen.len() == need {
        return found(chosen);
    }
    if pool.len() - from < need - chosen.len() {
        return false;
    }
    for i in from..pool.len() {
        chosen.push(pool[i]);
        if subsets_of_size(pool, need, i + 1, chosen, found) {
            chosen.pop();
            return true;
        }
        chosen.pop();
    }
    false
}

pub fn probe_conjecture(
    which: ProbeId,
    source: &GraphSource,
    params: &ProbeParams,
) -> Result<VerificationReport, Error> {
    let resolved = resolve(source)?;
    Ok(probe_indexed(which, resolved.len(), |i| resolved.get(i), params))
}

/// Probe engine over an indexed family; see `verify_claim_indexed`.
pub fn probe_indexed<F>(
    which: ProbeId,
    total: u64,
    get: F,
    params: &ProbeParams,
) -> VerificationReport
where
    F: Fn(u64) -> Graph + Sync,
{
    let started = Instant::now();
    let k = params.k;
    let t = params.t;
    let (hits, mut counterexamples) = (0..total as usize)
        .into_par_iter()
        .with_min_len(64)
        .map(|idx| {
            let idx = idx as u64;
            let g = get(idx);
            let mut hits = 0u64;
            let mut cex: Vec<(u64, Counterexample)> = Vec::new();
            match which {
                ProbeId::BipKfactorCoverX => {
                    if let Some(sides) = bipartition_sides(&g) {
                        for x in sides {
                            let b = crate::binding::beta_k_bipartite(&g, &x, k)
                                .expect("sides are independent");
                            if !b.at_least(crate::Rational::new(1, 1)) {
                                continue;
                            }
                            hits += 1;
                            if !has_kfactor_covering_x_subgraph(&g, &x, k) {
                                cex.push((
                                    idx,
                                    Counterexample {
                                        graph6: graph_tag(&g),
                                        k,
                                        details: format!(
                                            "interpretation (a): no k-regular subgraph \
                                             containing X = {x}"
                                        ),
                                    },
                                ));
                            }
                            let spanning_ok = matches!(
                                crate::matching::disjoint_x_covering_matchings(&g, &x, k)
                                    .expect("side is independent"),
                                crate::matching::XCoverOutcome::Matchings(_)
                            );
                            if !spanning_ok {
                                cex.push((
                                    idx,
                                    Counterexample {
                                        graph6: graph_tag(&g),
                                        k,
                                        details: format!(
                                            "interpretation (b): no spanning subgraph with \
                                             degree k on X = {x} and at most k elsewhere"
                                        ),
                                    },
                                ));
                            }
                        }
                    }
                }
                ProbeId::FactorSpectrum => {
                    let t = t.expect("FACTOR_SPECTRUM requires a factor degree");
                    let beta = crate::binding::beta_k(&g, k)
                        .expect("desk-scale graph")
                        .at_least(crate::Rational::new(1, 1));
                    if beta && (g.n() * t) % 2 == 0 {
                        hits += 1;
                        if crate::factors::find_k_factor(&g, t).is_none() {
                            cex.push((
                                idx,
                                Counterexample {
                                    graph6: graph_tag(&g),
                                    k,
                                    details: format!("beta^{k} >= 1 but no {t}-factor"),
                                },
                            ));
                        }
                    }
                }
            }
            (hits, cex)
        })
        .reduce(
            || (0u64, Vec::new()),
            |(h1, mut c1), (h2, c2)| {
                c1.extend(c2);
                (h1 + h2, c1)
            },
        );
    counterexamples.sort_by_key(|(idx, _)| *idx);
    let mut name = which.name().to_string();
    if let Some(t) = t {
        if which == ProbeId::FactorSpectrum {
            name = format!("{name}(t={t})");
        }
    }
    VerificationReport {
        claim: name,
        graphs_scanned: total,
        hypothesis_hits: hits,
        counterexamples: counterexamples.into_iter().map(|(_, c)| c).collect(),
        elapsed: started.elapsed(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, FamilySpec};

    #[test]
    fn internal_counts() {
        assert_eq!(enumerate_graphs(&GraphSource::Internal(3)).unwrap().count(), 8);
        assert_eq!(enumerate_graphs(&GraphSource::Internal(4)).unwrap().count(), 64);
        assert!(matches!(
            enumerate_graphs(&GraphSource::Internal(8)),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn stream_roundtrip_and_errors() {
        let dir = std::env::temp_dir();
        let path = dir.join("bindfactor_harness_test.g6");
        std::fs::write(&path, "C~\nD?{\n").unwrap();
        let graphs: Vec<Graph> = enumerate_graphs(&GraphSource::Stream(path.clone()))
            .unwrap()
            .collect();
        assert_eq!(graphs.len(), 2);
        assert_eq!(graphs[0].n(), 4);
        assert_eq!(graphs[1].n(), 5);

        std::fs::write(&path, "C~\nnot-a-graph\n").unwrap();
        match enumerate_graphs(&GraphSource::Stream(path.clone())) {
            Err(Error::Stream { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected stream error, got {:?}", other.map(|i| i.count())),
        }
        std::fs::remove_file(&path).ok();
    }

    #[test]
    fn edge_mask_order_matches_graph6_bits() {
        // Mask 1 sets the (0,1) bit, the first graph6 triangle bit.
        let g = graph_from_edge_mask(4, 1);
        assert_eq!(g.edges(), vec![(0, 1)]);
        let g = graph_from_edge_mask(4, 0b111111);
        assert!(g.is_complete());
    }

    #[test]
    fn verify_monotone_on_small_internal() {
        let report = verify_claim(
            ClaimId::ObsMonotone,
            &GraphSource::Internal(4),
            &[2, 3],
        )
        .unwrap();
        assert_eq!(report.graphs_scanned, 64);
        assert!(report.verified());
        assert_eq!(report.hypothesis_hits, 128);
    }

    #[test]
    fn verify_k_factor_on_internal_4() {
        let report =
            verify_claim(ClaimId::ThmKFactor, &GraphSource::Internal(4), &[2]).unwrap();
        assert!(report.verified());
        // Only K4 has beta^2 >= 1 among labeled graphs on 4 vertices.
        assert_eq!(report.hypothesis_hits, 1);
    }

    #[test]
    fn reports_are_deterministic() {
        let a = verify_claim(ClaimId::PropTough, &GraphSource::Internal(4), &[2]).unwrap();
        let b = verify_claim(ClaimId::PropTough, &GraphSource::Internal(4), &[2]).unwrap();
        assert_eq!(a.hypothesis_hits, b.hypothesis_hits);
        assert_eq!(a.counterexamples, b.counterexamples);
    }

    #[test]
    fn split_detection() {
        let tight = generate(&FamilySpec::SplitTight(8, 2)).unwrap();
        // Every independent-side vertex sees the whole clique, so the
        // normalized partition absorbs one of them into the clique side.
        let (x, y) = split_partition_normalized(&tight).unwrap();
        assert_eq!(y.len(), 4);
        assert_eq!(x.len(), 4);
        g_check(&tight, &x, &y);

        fn g_check(g: &Graph, x: &VertexSet, y: &VertexSet) {
            assert!(g.is_clique(y));
            g.check_independent(x).unwrap();
        }

        let c4 = generate(&FamilySpec::Cycle(4)).unwrap();
        // C4 is not split: any clique side has <= 2 vertices and leaves an
        // edge on the other side.
        assert!(split_partition_normalized(&c4).is_none());

        let k4 = generate(&FamilySpec::Complete(4)).unwrap();
        let (x, y) = split_partition_normalized(&k4).unwrap();
        assert_eq!(y.len(), 4);
        assert!(x.is_empty());
    }

    #[test]
    fn split_enumeration_covers_small_cases() {
        // n = 2: graphs K2 and its complement are both split; enumeration
        // must produce both (with duplicates allowed).
        let en = SplitGraphs::new(2);
        let mut seen_edge = false;
        let mut seen_empty = false;
        for i in 0..en.len() {
            let g = en.get(i);
            if g.edge_count() == 1 {
                seen_edge = true;
            } else {
                seen_empty = true;
            }
        }
        assert!(seen_edge && seen_empty);

        // Every split graph on 4 vertices is generated.
        let en = SplitGraphs::new(4);
        let mut masks = std::collections::BTreeSet::new();
        for i in 0..en.len() {
            let g = en.get(i);
            let mut mask = 0u64;
            for (bit, (u, v)) in [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]
                .iter()
                .enumerate()
                .map(|(b, p)| (b, *p))
            {
                if g.has_edge(u, v) {
                    mask |= 1 << bit;
                }
            }
            masks.insert(mask);
        }
        let brute: std::collections::BTreeSet<u64> = (0u64..64)
            .filter(|&m| !split_partitions(&graph_from_edge_mask(4, m)).is_empty())
            .collect();
        assert_eq!(masks, brute);
    }

    #[test]
    fn bipartite_instances_shape() {
        let en = BipartiteInstances::new(2, 3);
        assert_eq!(en.len(), 64);
        let (g, x) = en.get(0b111111);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(x.len(), 2);
        g.check_independent(&x).unwrap();
    }

    #[test]
    fn probe_factor_spectrum_flags_pendant_family() {
        // Clique K_{n-1} plus a vertex adjacent to exactly 2k-1 clique
        // vertices: β^k >= 1 yet no 2k-factor.
        let k = 2usize;
        let n = 8usize;
        let mut edges = Vec::new();
        for u in 0..n - 1 {
            for v in u + 1..n - 1 {
                edges.push((u, v));
            }
        }
        for v in 0..2 * k - 1 {
            edges.push((v, n - 1));
        }
        let g = Graph::new(n, &edges).unwrap();
        assert!(crate::binding::beta_k(&g, k)
            .unwrap()
            .at_least(crate::Rational::new(1, 1)));
        let graphs = [g];
        let report = probe_indexed(
            ProbeId::FactorSpectrum,
            1,
            |i| graphs[i as usize].clone(),
            &ProbeParams {
                k,
                t: Some(2 * k),
            },
        );
        assert_eq!(report.hypothesis_hits, 1);
        assert_eq!(report.counterexamples.len(), 1);

        // The same family does admit a 3-factor (k+1, via the split result).
        let report = probe_indexed(
            ProbeId::FactorSpectrum,
            1,
            |i| graphs[i as usize].clone(),
            &ProbeParams {
                k,
                t: Some(2 * k - 1),
            },
        );
        assert!(report.verified());
    }

    #[test]
    fn probe_bip_cover_on_small_sweep() {
        // Over all bipartite graphs with sides 3 and 3 and k = 2, both
        // interpretations hold (the k = 2 case is a known theorem).
        let en = BipartiteInstances::new(3, 3);
        let report = probe_indexed(
            ProbeId::BipKfactorCoverX,
            en.len(),
            |i| en.get(i).0,
            &ProbeParams { k: 2, t: None },
        );
        assert!(report.verified(), "{:?}", report.counterexamples);
        assert!(report.hypothesis_hits > 0);
    }
}
