//! The claim catalog: one checker per verifiable statement, each with a
//! hypothesis filter and a conclusion test built entirely from the public
//! module APIs.

use super::{bipartition_sides, split_partition_normalized};
use crate::binding::{beta_k, beta_k_bipartite};
use crate::error::Error;
use crate::factors::{
    check_barrier_properties, delta, find_k_factor, find_maxmin_barrier, OrderedPartition,
    PARTITION_CAP,
};
use crate::family::{generate, FamilySpec};
use crate::graph::Graph;
use crate::matching::{
    disjoint_near_perfect_matchings, disjoint_x_covering_matchings, hypomatchable,
    perfect_matching, Hypomatchable, PerfectMatching, XCoverOutcome,
};
use crate::properties::{independence_number, toughness, vertex_connectivity};
use crate::vset::VertexSet;
use crate::Rational;
use std::str::FromStr;

/// Identifiers for the verifiable claims.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClaimId {
    /// nk even and β^k >= 1 imply a k-factor (k >= 2).
    ThmKFactor,
    /// Split graph of even order with β^k >= 1 has a (k+1)-factor.
    ThmSplitK1,
    /// β^k >= 1 implies k-1 disjoint perfect or near-perfect matchings.
    ThmDisjointPm,
    /// β^k(G, X) >= 1 implies k disjoint matchings covering X.
    ThmBipMatchings,
    /// β^k > 0 implies non-bipartite; β^k <= (n-k)/k.
    ObsNonbipUb,
    /// β^i >= β^k for 1 <= i <= k.
    ObsMonotone,
    /// β^2 > 0 implies connected.
    ObsConnectedK2,
    /// β^k > 0 implies connected (k >= 2).
    CorConnected,
    /// β > 0: δ(G) >= (β+1)k - 1; β >= 1 adds δ(G) >= n - (n-1)/β.
    LemMindeg,
    /// Order 2k with β^k >= 1 forces the complete graph.
    CorComplete2k,
    /// α <= n/(β+1); β >= 1 refines to α <= (n - β(k-1))/(β+1).
    PropIndep,
    /// τ(G) >= β^k(G).
    PropTough,
    /// β^k >= 1 implies κ(G) >= n(β-1)/(β+1).
    PropConn,
    /// Even order with β^k >= 1 has a perfect matching.
    LemPmExists,
    /// Odd order: hypomatchable iff q(U) <= |U|-1 for all nonempty U.
    CorHypoIff,
    /// Odd order with β^k >= 1 is hypomatchable.
    LemHypo,
    /// β^k >= 1 and Δ(F) <= k-2 imply β^2(G - E(F)) >= 1.
    LemFdom,
    /// Split partition of a graph with β^k >= 1 has |Y| >= max(k, |X|+k-1).
    ObsSplitY,
    /// nk even: every ordered partition has even deficiency.
    LemDeltaParity,
    /// The maxmin barrier satisfies its four structural properties.
    LemMaxminProps,
    /// The tight split family: β^k equals the minimum of the three case
    /// ratios, is below 1, and the graph has a barrier but no k-factor.
    FamilyTightness,
}

impl ClaimId {
    pub const ALL: [ClaimId; 21] = [
        ClaimId::ThmKFactor,
        ClaimId::ThmSplitK1,
        ClaimId::ThmDisjointPm,
        ClaimId::ThmBipMatchings,
        ClaimId::ObsNonbipUb,
        ClaimId::ObsMonotone,
        ClaimId::ObsConnectedK2,
        ClaimId::CorConnected,
        ClaimId::LemMindeg,
        ClaimId::CorComplete2k,
        ClaimId::PropIndep,
        ClaimId::PropTough,
        ClaimId::PropConn,
        ClaimId::LemPmExists,
        ClaimId::CorHypoIff,
        ClaimId::LemHypo,
        ClaimId::LemFdom,
        ClaimId::ObsSplitY,
        ClaimId::LemDeltaParity,
        ClaimId::LemMaxminProps,
        ClaimId::FamilyTightness,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ClaimId::ThmKFactor => "THM_K_FACTOR",
            ClaimId::ThmSplitK1 => "THM_SPLIT_K1",
            ClaimId::ThmDisjointPm => "THM_DISJOINT_PM",
            ClaimId::ThmBipMatchings => "THM_BIP_MATCHINGS",
            ClaimId::ObsNonbipUb => "OBS_NONBIP_UB",
            ClaimId::ObsMonotone => "OBS_MONOTONE",
            ClaimId::ObsConnectedK2 => "OBS_CONNECTED_K2",
            ClaimId::CorConnected => "COR_CONNECTED",
            ClaimId::LemMindeg => "LEM_MINDEG",
            ClaimId::CorComplete2k => "COR_COMPLETE_2K",
            ClaimId::PropIndep => "PROP_INDEP",
            ClaimId::PropTough => "PROP_TOUGH",
            ClaimId::PropConn => "PROP_CONN",
            ClaimId::LemPmExists => "LEM_PM_EXISTS",
            ClaimId::CorHypoIff => "COR_HYPO_IFF",
            ClaimId::LemHypo => "LEM_HYPO",
            ClaimId::LemFdom => "LEM_FDOM",
            ClaimId::ObsSplitY => "OBS_SPLIT_Y",
            ClaimId::LemDeltaParity => "LEM_DELTA_PARITY",
            ClaimId::LemMaxminProps => "LEM_MAXMIN_PROPS",
            ClaimId::FamilyTightness => "FAMILY_TIGHTNESS",
        }
    }

    /// Whether the checker consumes the k parameter. Claims that ignore it
    /// run once per graph (reported with k = 0).
    pub fn uses_k(&self) -> bool {
        !matches!(self, ClaimId::ObsConnectedK2 | ClaimId::CorHypoIff)
    }
}

impl std::fmt::Display for ClaimId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        ClaimId::ALL
            .iter()
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Argument(format!("unknown claim '{s}'")))
    }
}

/// Checker result for one (graph, k) instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// The hypothesis filter did not apply.
    Vacuous,
    Holds,
    Fails(String),
}

fn ratio(g: &Graph, k: usize) -> Rational {
    beta_k(g, k)
        .expect("desk-scale graph")
        .as_ratio()
        .expect("beta_k never reports an empty domain")
}

fn one() -> Rational {
    Rational::new(1, 1)
}

fn fails(msg: impl Into<String>) -> Outcome {
    Outcome::Fails(msg.into())
}

fn holds_if(ok: bool, msg: impl Into<String>) -> Outcome {
    if ok {
        Outcome::Holds
    } else {
        fails(msg)
    }
}

/// Runs one claim checker. `k` is ignored for claims with `uses_k() == false`.
pub fn check_claim(claim: ClaimId, g: &Graph, k: usize) -> Outcome {
    match claim {
        ClaimId::ThmKFactor => {
            if k < 2 || (g.n() * k) % 2 == 1 || ratio(g, k) < one() {
                return Outcome::Vacuous;
            }
            holds_if(
                find_k_factor(g, k).is_some(),
                format!("beta^{k} >= 1 but no {k}-factor"),
            )
        }
        ClaimId::ThmSplitK1 => {
            if k < 2 || g.n() % 2 == 1 || split_partition_normalized(g).is_none() {
                return Outcome::Vacuous;
            }
            if ratio(g, k) < one() {
                return Outcome::Vacuous;
            }
            holds_if(
                find_k_factor(g, k + 1).is_some(),
                format!("split graph with beta^{k} >= 1 but no {}-factor", k + 1),
            )
        }
        ClaimId::ThmDisjointPm => {
            if k < 1 || ratio(g, k) < one() {
                return Outcome::Vacuous;
            }
            match disjoint_near_perfect_matchings(g, k - 1) {
                Ok(_) => Outcome::Holds,
                Err(f) => fails(format!("matching pipeline failed: {f}")),
            }
        }
        ClaimId::ThmBipMatchings => {
            if k < 1 {
                return Outcome::Vacuous;
            }
            let Some(sides) = bipartition_sides(g) else {
                return Outcome::Vacuous;
            };
            let mut any_hit = false;
            for x in sides {
                let b = beta_k_bipartite(g, &x, k).expect("sides are independent");
                if !b.at_least(one()) {
                    continue;
                }
                any_hit = true;
                match disjoint_x_covering_matchings(g, &x, k).expect("side is independent") {
                    XCoverOutcome::Matchings(fam) => {
                        debug_assert_eq!(fam.len(), k);
                    }
                    XCoverOutcome::Violator(s) => {
                        return fails(format!(
                            "beta^{k}(G, X) >= 1 for X = {x} but L^{k} fails on {s}"
                        ));
                    }
                }
            }
            if any_hit {
                Outcome::Holds
            } else {
                Outcome::Vacuous
            }
        }
        ClaimId::ObsNonbipUb => {
            if k < 2 || g.n() < k {
                return Outcome::Vacuous;
            }
            let r = ratio(g, k);
            if r > Rational::new(0, 1) && g.is_bipartite() {
                return fails(format!("bipartite graph with beta^{k} = {r} > 0"));
            }
            let bound = Rational::new((g.n() - k) as i64, k as i64);
            holds_if(
                r <= bound,
                format!("beta^{k} = {r} exceeds (n-k)/k = {bound}"),
            )
        }
        ClaimId::ObsMonotone => {
            if k < 2 || g.n() == 0 {
                return Outcome::Vacuous;
            }
            let high = ratio(g, k);
            for i in 1..k {
                let low = ratio(g, i);
                if low < high {
                    return fails(format!("beta^{i} = {low} < beta^{k} = {high}"));
                }
            }
            Outcome::Holds
        }
        ClaimId::ObsConnectedK2 => {
            if g.n() == 0 || ratio(g, 2) <= Rational::new(0, 1) {
                return Outcome::Vacuous;
            }
            holds_if(g.is_connected(), "beta^2 > 0 on a disconnected graph")
        }
        ClaimId::CorConnected => {
            if k < 2 || g.n() == 0 || ratio(g, k) <= Rational::new(0, 1) {
                return Outcome::Vacuous;
            }
            holds_if(
                g.is_connected(),
                format!("beta^{k} > 0 on a disconnected graph"),
            )
        }
        ClaimId::LemMindeg => {
            if k < 2 || g.n() == 0 {
                return Outcome::Vacuous;
            }
            let beta = ratio(g, k);
            if beta <= Rational::new(0, 1) {
                return Outcome::Vacuous;
            }
            let min_deg = Rational::new(g.degree_extremes().unwrap().0 as i64, 1);
            let bound1 = (beta + one()) * Rational::new(k as i64, 1) - one();
            if min_deg < bound1 {
                return fails(format!("min degree {min_deg} below (beta+1)k-1 = {bound1}"));
            }
            if beta >= one() {
                let n = Rational::new(g.n() as i64, 1);
                let bound2 = n - (n - one()) / beta;
                if min_deg < bound2 {
                    return fails(format!(
                        "min degree {min_deg} below n-(n-1)/beta = {bound2}"
                    ));
                }
            }
            Outcome::Holds
        }
        ClaimId::CorComplete2k => {
            if k < 2 || g.n() != 2 * k || ratio(g, k) < one() {
                return Outcome::Vacuous;
            }
            holds_if(g.is_complete(), "order 2k with beta^k >= 1 but incomplete")
        }
        ClaimId::PropIndep => {
            if k < 2 || g.n() == 0 {
                return Outcome::Vacuous;
            }
            let Ok(alpha) = independence_number(g) else {
                return Outcome::Vacuous;
            };
            let alpha = Rational::new(alpha as i64, 1);
            let beta = ratio(g, k);
            let n = Rational::new(g.n() as i64, 1);
            if alpha > n / (beta + one()) {
                return fails(format!("alpha = {alpha} exceeds n/(beta+1)"));
            }
            if beta >= one() {
                let refined = (n - beta * Rational::new(k as i64 - 1, 1)) / (beta + one());
                if alpha > refined {
                    return fails(format!("alpha = {alpha} exceeds refined bound {refined}"));
                }
            }
            Outcome::Holds
        }
        ClaimId::PropTough => {
            if k < 2 || g.n() == 0 {
                return Outcome::Vacuous;
            }
            let Ok(tau) = toughness(g) else {
                return Outcome::Vacuous;
            };
            let beta = ratio(g, k);
            holds_if(
                tau.at_least(beta),
                format!("toughness {tau:?} below beta^{k} = {beta}"),
            )
        }
        ClaimId::PropConn => {
            if k < 2 || g.n() == 0 {
                return Outcome::Vacuous;
            }
            let beta = ratio(g, k);
            if beta < one() {
                return Outcome::Vacuous;
            }
            let kappa = Rational::new(vertex_connectivity(g) as i64, 1);
            let bound = (beta - one()) / (beta + one()) * Rational::new(g.n() as i64, 1);
            holds_if(
                kappa >= bound,
                format!("kappa = {kappa} below n(beta-1)/(beta+1) = {bound}"),
            )
        }
        ClaimId::LemPmExists => {
            if k < 2 || g.n() % 2 == 1 || ratio(g, k) < one() {
                return Outcome::Vacuous;
            }
            holds_if(
                matches!(perfect_matching(g), PerfectMatching::Found(_)),
                format!("even order with beta^{k} >= 1 but no perfect matching"),
            )
        }
        ClaimId::CorHypoIff => {
            let n = g.n();
            if n % 2 == 0 || n > 24 {
                return Outcome::Vacuous;
            }
            let blossom_says = matches!(hypomatchable(g), Hypomatchable::Yes(_));
            let mut q_condition = true;
            for mask in 1u64..(1u64 << n) {
                let u = VertexSet::from_mask(mask);
                if crate::matching::tutte_q(g, &u).unwrap() > u.len() - 1 {
                    q_condition = false;
                    break;
                }
            }
            holds_if(
                blossom_says == q_condition,
                format!("hypomatchable = {blossom_says} but q-condition = {q_condition}"),
            )
        }
        ClaimId::LemHypo => {
            if k < 2 || g.n() % 2 == 0 || ratio(g, k) < one() {
                return Outcome::Vacuous;
            }
            holds_if(
                matches!(hypomatchable(g), Hypomatchable::Yes(_)),
                format!("odd order with beta^{k} >= 1 but not hypomatchable"),
            )
        }
        ClaimId::LemFdom => {
            if k < 2 || ratio(g, k) < one() {
                return Outcome::Vacuous;
            }
            let edges = g.edges();
            let mut chosen: Vec<(usize, usize)> = Vec::new();
            let mut degree = vec![0usize; g.n()];
            match fdom_scan(g, k, &edges, 0, &mut chosen, &mut degree) {
                None => Outcome::Holds,
                Some(f) => fails(format!(
                    "beta^2(G - E(F)) < 1 for F = {f:?} with max degree <= {}",
                    k - 2
                )),
            }
        }
        ClaimId::ObsSplitY => {
            if k < 2 {
                return Outcome::Vacuous;
            }
            let Some((x, y)) = split_partition_normalized(g) else {
                return Outcome::Vacuous;
            };
            if ratio(g, k) < one() {
                return Outcome::Vacuous;
            }
            let need = k.max(x.len() + k - 1);
            holds_if(
                y.len() >= need,
                format!(
                    "clique side has {} vertices, below max(k, |X|+k-1) = {need}",
                    y.len()
                ),
            )
        }
        ClaimId::LemDeltaParity => {
            let n = g.n();
            if k < 1 || (n * k) % 2 == 1 || n > 12 {
                return Outcome::Vacuous;
            }
            let mut assignment = vec![0u8; n];
            loop {
                let mut s = VertexSet::new();
                let mut t = VertexSet::new();
                let mut u = VertexSet::new();
                for (v, &d) in assignment.iter().enumerate() {
                    match d {
                        0 => u.insert(v),
                        1 => t.insert(v),
                        _ => s.insert(v),
                    }
                }
                let p = OrderedPartition::new(g, s, t, u).unwrap();
                let d = delta(g, &p, k).unwrap();
                if d % 2 != 0 {
                    return fails(format!(
                        "odd deficiency {d} at S={}, T={}, U={}",
                        p.s, p.t, p.u
                    ));
                }
                let mut i = 0;
                while i < n && assignment[i] == 2 {
                    assignment[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
                assignment[i] += 1;
            }
            Outcome::Holds
        }
        ClaimId::LemMaxminProps => {
            if k < 2 || (g.n() * k) % 2 == 1 || g.n() > PARTITION_CAP {
                return Outcome::Vacuous;
            }
            let Some(barrier) = find_maxmin_barrier(g, k).unwrap() else {
                return Outcome::Vacuous;
            };
            let report = check_barrier_properties(g, &barrier).unwrap();
            holds_if(
                report.all_hold(),
                format!("maxmin barrier violates structural properties: {report:?}"),
            )
        }
        ClaimId::FamilyTightness => {
            let n = g.n();
            if k < 2 || n % 2 == 1 || n < 2 * k + 2 {
                return Outcome::Vacuous;
            }
            let family = generate(&FamilySpec::SplitTight(n, k)).unwrap();
            if *g != family {
                return Outcome::Vacuous;
            }
            let beta = ratio(g, k);
            let (ni, ki) = (n as i64, k as i64);
            let expected = Rational::new(ni - 2, ni + 2 * ki)
                .min(Rational::new(ni - 2 * ki, 2 * ki))
                .min(Rational::new(ni - ki, ki));
            if beta != expected {
                return fails(format!("beta^{k} = {beta}, expected {expected}"));
            }
            if beta >= one() {
                return fails(format!("beta^{k} = {beta} is not below 1"));
            }
            if find_k_factor(g, k).is_some() {
                return fails(format!("tight family unexpectedly has a {k}-factor"));
            }
            if n <= PARTITION_CAP {
                match find_maxmin_barrier(g, k).unwrap() {
                    None => return fails("no barrier found despite missing k-factor"),
                    Some(b) => {
                        if b.deficiency > -2 || b.deficiency % 2 != 0 {
                            return fails(format!("barrier deficiency {} malformed", b.deficiency));
                        }
                    }
                }
            }
            Outcome::Holds
        }
    }
}

/// Depth-first scan over spanning subgraphs F with Δ(F) <= k-2; returns the
/// first F whose deletion drops β^2 below 1.
fn fdom_scan(
    g: &Graph,
    k: usize,
    edges: &[(usize, usize)],
    idx: usize,
    chosen: &mut Vec<(usize, usize)>,
    degree: &mut [usize],
) -> Option<Vec<(usize, usize)>> {
    if idx == edges.len() {
        let h = g.remove_edges(chosen).unwrap();
        let b2 = beta_k(&h, 2).unwrap();
        if !b2.at_least(Rational::new(1, 1)) {
            return Some(chosen.clone());
        }
        return None;
    }
    if let Some(bad) = fdom_scan(g, k, edges, idx + 1, chosen, degree) {
        return Some(bad);
    }
    let (u, v) = edges[idx];
    if degree[u] < k - 2 && degree[v] < k - 2 {
        degree[u] += 1;
        degree[v] += 1;
        chosen.push((u, v));
        let res = fdom_scan(g, k, edges, idx + 1, chosen, degree);
        chosen.pop();
        degree[u] -= 1;
        degree[v] -= 1;
        if res.is_some() {
            return res;
        }
    }
    None
}
