//! k-factors and Tutte barriers.
//!
//! A k-factor is found (or refuted) through the classical gadget reduction
//! to perfect matching. Non-existence is certified by an ordered partition
//! (S, T, U) with negative deficiency
//! `δ(S,T,U) = k|S| - k|T| + Σ_{v∈T} d_{G-S}(v) - q(S,T,U)`,
//! where `q` counts the components C of G[U] with `k|C| + e(C,T)` odd.
//! `find_maxmin_barrier` scans all 3^n ordered partitions and returns the
//! barrier that maximizes |S|, then minimizes |T|, with remaining ties
//! broken toward the smallest (S, T) bitset pair.

use crate::blossom::{self, UNMATCHED};
use crate::error::Error;
use crate::graph::Graph;
use crate::vset::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedPartition {
    pub s: VertexSet,
    pub t: VertexSet,
    pub u: VertexSet,
}

impl OrderedPartition {
    /// Validates that `(s, t, u)` partitions the vertex set of `g`.
    pub fn new(g: &Graph, s: VertexSet, t: VertexSet, u: VertexSet) -> Result<Self, Error> {
        if !s.is_disjoint(&t) || !s.is_disjoint(&u) || !t.is_disjoint(&u) {
            return Err(Error::Argument("partition parts overlap".into()));
        }
        if s.union(&t).union(&u) != g.vertices() {
            return Err(Error::Argument(
                "partition does not cover the vertex set".into(),
            ));
        }
        Ok(OrderedPartition { s, t, u })
    }
}

/// A partition certifying that no k-factor exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarrierCertificate {
    pub partition: OrderedPartition,
    pub k: usize,
    pub deficiency: i64,
    /// Components of G[U] whose `k|C| + e(C,T)` is odd, by smallest member.
    pub odd_components: Vec<VertexSet>,
    pub maxmin: bool,
}

/// A spanning k-regular subgraph, stored as its edge set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorSubgraph {
    pub edges: Vec<(usize, usize)>,
    pub k: usize,
}

/// Components of `G[U]` that are odd with respect to the partition and `k`.
pub fn odd_components(
    g: &Graph,
    p: &OrderedPartition,
    k: usize,
) -> Result<Vec<VertexSet>, Error> {
    let comps = g.components_in(&p.u)?;
    let mut out = Vec::new();
    for c in comps {
        let crossing = g.edges_between(&c, &p.t)?;
        if (k * c.len() + crossing) % 2 == 1 {
            out.push(c);
        }
    }
    Ok(out)
}

/// The deficiency `δ_G(S, T, U)` for the k-factor condition.
pub fn delta(g: &Graph, p: &OrderedPartition, k: usize) -> Result<i64, Error> {
    // Re-validate against this graph; a partition built for another graph
    // is an argument error.
    let p = OrderedPartition::new(g, p.s.clone(), p.t.clone(), p.u.clone())?;
    let q = odd_components(g, &p, k)?.len() as i64;
    let mut t_degrees = 0i64;
    for v in p.t.iter() {
        t_degrees += g.neighbors(v).difference(&p.s).len() as i64;
    }
    Ok(k as i64 * (p.s.len() as i64 - p.t.len() as i64) + t_degrees - q)
}

/// Finds a k-factor via the gadget reduction, or returns `None`.
///
/// Fast rejections: `n*k` odd, or minimum degree below `k`. Otherwise each
/// vertex `v` becomes `d(v)` external nodes (one per incident edge) plus
/// `d(v) - k` internal nodes joined to all of its externals; each original
/// edge joins the two corresponding externals. A perfect matching of the
/// gadget exists iff a k-factor does, and the factor edges are exactly the
/// external-external pairs that got matched.
pub fn find_k_factor(g: &Graph, k: usize) -> Option<FactorSubgraph> {
    let n = g.n();
    if n == 0 || k == 0 {
        return Some(FactorSubgraph {
            edges: Vec::new(),
            k,
        });
    }
    if (n * k) % 2 == 1 {
        return None;
    }
    if g.degree_extremes().ok()?.0 < k {
        return None;
    }
    if g.degree_extremes().ok()? == (k, k) {
        // Already k-regular: the whole edge set is the factor.
        return Some(verified(g, g.edges(), k));
    }

    // External node ids: vertex-major, neighbors ascending.
    let mut ext_base = vec![0usize; n + 1];
    for v in 0..n {
        ext_base[v + 1] = ext_base[v] + g.degree(v);
    }
    let ext_total = ext_base[n];
    let mut int_base = vec![0usize; n + 1];
    for v in 0..n {
        int_base[v + 1] = int_base[v] + (g.degree(v) - k);
    }
    let total = ext_total + int_base[n];

    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); total];
    // Position of w in v's ascending neighbor list gives the external id.
    let ext_id = |v: usize, w: usize| -> usize {
        let offset = g
            .neighbors(v)
            .iter()
            .position(|x| x == w)
            .expect("w is a neighbor of v");
        ext_base[v] + offset
    };
    for (u, v) in g.edges() {
        let a = ext_id(u, v);
        let b = ext_id(v, u);
        adj[a].push(b);
        adj[b].push(a);
    }
    for v in 0..n {
        for i in 0..(g.degree(v) - k) {
            let internal = ext_total + int_base[v] + i;
            for e in ext_base[v]..ext_base[v + 1] {
                adj[internal].push(e);
                adj[e].push(internal);
            }
        }
    }
    for l in adj.iter_mut() {
        l.sort_unstable();
    }

    let mate = blossom::max_matching(&adj);
    if mate.iter().any(|&m| m == UNMATCHED) {
        return None;
    }
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        if mate[ext_id(u, v)] == ext_id(v, u) {
            edges.push((u, v));
        }
    }
    Some(verified(g, edges, k))
}

fn verified(g: &Graph, edges: Vec<(usize, usize)>, k: usize) -> FactorSubgraph {
    let mut deg = vec![0usize; g.n()];
    for &(u, v) in &edges {
        assert!(g.has_edge(u, v), "factor edge ({u},{v}) not in graph");
        deg[u] += 1;
        deg[v] += 1;
    }
    assert!(
        deg.iter().all(|&d| d == k),
        "factor is not {k}-regular"
    );
    FactorSubgraph { edges, k }
}

/// Default cap on the 3^n ordered-partition scan.
pub const PARTITION_CAP: usize = 15;

pub fn find_maxmin_barrier(g: &Graph, k: usize) -> Result<Option<BarrierCertificate>, Error> {
    find_maxmin_barrier_capped(g, k, PARTITION_CAP)
}

/// Scans all ordered partitions of a graph with `n <= cap` and returns the
/// maxmin barrier, or `None` when every partition has nonnegative
/// deficiency (equivalently, a k-factor exists when `k <= δ(G)`).
pub fn find_maxmin_barrier_capped(
    g: &Graph,
    k: usize,
    cap: usize,
) -> Result<Option<BarrierCertificate>, Error> {
    let n = g.n();
    if n > cap || n > 38 {
        return Err(Error::Capacity {
            what: "ordered-partition scan",
            cap: cap.min(38),
            n,
        });
    }
    if k == 0 {
        return Err(Error::Argument("barriers require k >= 1".into()));
    }

    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).as_mask().expect("n <= 38"))
        .collect();
    let full: u64 = if n == 0 { 0 } else { (1u64 << n) - 1 };

    // Odometer over vertex classes (0 = U, 1 = T, 2 = S) with incremental
    // maintenance of Σ_{v∈T} d_{G-S}(v); the component parity term is
    // recomputed per partition.
    let mut digits = vec![0u8; n];
    let mut s_mask = 0u64;
    let mut t_mask = 0u64;
    let mut sum_t = 0i64;
    let mut best: Option<(usize, usize, u64, u64, i64)> = None;

    loop {
        let u_mask = full & !s_mask & !t_mask;
        let q = {
            let mut q = 0i64;
            let mut rem = u_mask;
            while rem != 0 {
                let start = rem & rem.wrapping_neg();
                let mut comp = start;
                let mut frontier = start;
                while frontier != 0 {
                    let mut next = 0u64;
                    let mut f = frontier;
                    while f != 0 {
                        let v = f.trailing_zeros() as usize;
                        f &= f - 1;
                        next |= adj[v];
                    }
                    frontier = next & u_mask & !comp;
                    comp |= frontier;
                }
                rem &= !comp;
                let mut crossing = 0u32;
                let mut c = comp;
                while c != 0 {
                    let v = c.trailing_zeros() as usize;
                    c &= c - 1;
                    crossing += (adj[v] & t_mask).count_ones();
                }
                if (k as u64 * comp.count_ones() as u64 + crossing as u64) % 2 == 1 {
                    q += 1;
                }
            }
            q
        };
        let s_len = s_mask.count_ones() as usize;
        let t_len = t_mask.count_ones() as usize;
        let deficiency = k as i64 * (s_len as i64 - t_len as i64) + sum_t - q;
        if deficiency < 0 {
            let candidate = (s_len, t_len, s_mask, t_mask, deficiency);
            let replace = match &best {
                None => true,
                Some(b) => {
                    (candidate.0 > b.0)
                        || (candidate.0 == b.0 && candidate.1 < b.1)
                        || (candidate.0 == b.0
                            && candidate.1 == b.1
                            && (candidate.2, candidate.3) < (b.2, b.3))
                }
            };
            if replace {
                best = Some(candidate);
            }
        }

        // Advance the odometer, updating S/T membership and sum_t.
        let mut i = 0;
        loop {
            if i == n {
                break;
            }
            let bit = 1u64 << i;
            match digits[i] {
                0 => {
                    // U -> T
                    digits[i] = 1;
                    t_mask |= bit;
                    sum_t += (adj[i] & !s_mask).count_ones() as i64;
                    break;
                }
                1 => {
                    // T -> S
                    digits[i] = 2;
                    t_mask &= !bit;
                    sum_t -= (adj[i] & !s_mask).count_ones() as i64;
                    s_mask |= bit;
                    sum_t -= (adj[i] & t_mask).count_ones() as i64;
                    break;
                }
                _ => {
                    // S -> U, carry to the next digit.
                    digits[i] = 0;
                    s_mask &= !bit;
                    sum_t += (adj[i] & t_mask).count_ones() as i64;
                    i += 1;
                }
            }
        }
        if i == n {
            break;
        }
    }

    match best {
        None => Ok(None),
        Some((_, _, s_mask, t_mask, deficiency)) => {
            let s = VertexSet::from_mask(s_mask);
            let t = VertexSet::from_mask(t_mask);
            let u = VertexSet::from_mask(full & !s_mask & !t_mask);
            let partition = OrderedPartition::new(g, s, t, u)?;
            // Cross-check the incremental engine against the direct formula.
            let direct = delta(g, &partition, k)?;
            assert_eq!(direct, deficiency, "incremental deficiency mismatch");
            let odd = odd_components(g, &partition, k)?;
            Ok(Some(BarrierCertificate {
                partition,
                k,
                deficiency,
                odd_components: odd,
                maxmin: true,
            }))
        }
    }
}

/// Outcome of checking the four structural properties of a maxmin barrier:
/// (i) every U-vertex sends at most k-1 edges to T, at most k-2 from even
/// components; (ii) G[T] has maximum degree at most k-2; (iii) for every
/// odd component C and T-vertex w, e(w,T) + e(w,C) <= k-1; (iv) for every
/// T-vertex w, e(w,T) plus its edges into even components is at most k-2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarrierPropertyReport {
    pub u_edges_to_t_bounded: bool,
    pub t_induced_degree_bounded: bool,
    pub t_to_odd_component_bounded: bool,
    pub t_to_even_components_bounded: bool,
}

impl BarrierPropertyReport {
    pub fn all_hold(&self) -> bool {
        self.u_edges_to_t_bounded
            && self.t_induced_degree_bounded
            && self.t_to_odd_component_bounded
            && self.t_to_even_components_bounded
    }
}

/// Checks the maxmin-barrier properties by direct counting. The partition
/// must belong to `g` and reproduce the certificate's deficiency.
pub fn check_barrier_properties(
    g: &Graph,
    b: &BarrierCertificate,
) -> Result<BarrierPropertyReport, Error> {
    let recomputed = delta(g, &b.partition, b.k)?;
    if recomputed != b.deficiency {
        return Err(Error::Argument(format!(
            "certificate deficiency {} does not match this graph (recomputed {})",
            b.deficiency, recomputed
        )));
    }
    let k = b.k as i64;
    let p = &b.partition;
    let comps = g.components_in(&p.u)?;
    let odd: Vec<&VertexSet> = comps
        .iter()
        .filter(|c| (b.k * c.len() + g.edges_between(c, &p.t).unwrap()) % 2 == 1)
        .collect();
    let even: Vec<&VertexSet> = comps
        .iter()
        .filter(|c| (b.k * c.len() + g.edges_between(c, &p.t).unwrap()) % 2 == 0)
        .collect();

    let mut item_i = true;
    for c in &comps {
        let is_even = (b.k * c.len() + g.edges_between(c, &p.t)?) % 2 == 0;
        for w in c.iter() {
            let e_w_t = g.neighbors(w).intersection_len(&p.t) as i64;
            let bound = if is_even { k - 2 } else { k - 1 };
            if e_w_t > bound {
                item_i = false;
            }
        }
    }

    let mut item_ii = true;
    let mut item_iii = true;
    let mut item_iv = true;
    for w in p.t.iter() {
        let e_w_t = g.neighbors(w).intersection_len(&p.t) as i64;
        if e_w_t > k - 2 {
            item_ii = false;
        }
        for c in &odd {
            let e_w_c = g.neighbors(w).intersection_len(c) as i64;
            if e_w_t + e_w_c > k - 1 {
                item_iii = false;
            }
        }
        let even_total: i64 = even
            .iter()
            .map(|c| g.neighbors(w).intersection_len(c) as i64)
            .sum();
        if e_w_t + even_total > k - 2 {
            item_iv = false;
        }
    }

    Ok(BarrierPropertyReport {
        u_edges_to_t_bounded: item_i,
        t_induced_degree_bounded: item_ii,
        t_to_odd_component_bounded: item_iii,
        t_to_even_components_bounded: item_iv,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, FamilySpec};

    fn vs(members: &[usize]) -> VertexSet {
        members.iter().copied().collect()
    }

    #[test]
    fn delta_on_tight_family() {
        let g = generate(&FamilySpec::SplitTight(8, 2)).unwrap();
        let p = OrderedPartition::new(&g, vs(&[5, 6, 7]), vs(&[0, 1, 2, 3, 4]), vs(&[])).unwrap();
        assert_eq!(delta(&g, &p, 2).unwrap(), -4);
    }

    #[test]
    fn delta_trivial_partitions() {
        let k4 = generate(&FamilySpec::Complete(4)).unwrap();
        let p = OrderedPartition::new(&k4, vs(&[]), vs(&[]), k4.vertices()).unwrap();
        assert_eq!(delta(&k4, &p, 2).unwrap(), 0);
        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        let p = OrderedPartition::new(&c5, vs(&[]), vs(&[]), c5.vertices()).unwrap();
        assert_eq!(delta(&c5, &p, 2).unwrap(), 0);
    }

    #[test]
    fn partition_validation() {
        let k4 = generate(&FamilySpec::Complete(4)).unwrap();
        assert!(OrderedPartition::new(&k4, vs(&[0]), vs(&[0]), vs(&[1, 2, 3])).is_err());
        assert!(OrderedPartition::new(&k4, vs(&[0]), vs(&[1]), vs(&[2])).is_err());
    }

    #[test]
    fn k_factor_examples() {
        let k4 = generate(&FamilySpec::Complete(4)).unwrap();
        let f = find_k_factor(&k4, 2).unwrap();
        assert_eq!(f.edges.len(), 4);

        let tight = generate(&FamilySpec::SplitTight(8, 2)).unwrap();
        assert!(find_k_factor(&tight, 2).is_none());

        let petersen = generate(&FamilySpec::Petersen).unwrap();
        let f = find_k_factor(&petersen, 3).unwrap();
        assert_eq!(f.edges, petersen.edges());

        // Petersen also has a 2-factor (two disjoint 5-cycles).
        let f = find_k_factor(&petersen, 2).unwrap();
        assert_eq!(f.edges.len(), 10);

        // Odd n*k is rejected immediately.
        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        assert!(find_k_factor(&c5, 3).is_none());
        assert!(find_k_factor(&c5, 2).is_some());
    }

    #[test]
    fn k_factor_via_gadget_on_k5_minus_edge() {
        // K5 minus one edge: 2-factor exists (a 5-cycle through the gap).
        let k5 = generate(&FamilySpec::Complete(5)).unwrap();
        let g = k5.remove_edges(&[(0, 1)]).unwrap();
        let f = find_k_factor(&g, 2).unwrap();
        assert_eq!(f.edges.len(), 5);
        assert!(!f.edges.contains(&(0, 1)));
    }

    #[test]
    fn maxmin_barrier_examples() {
        let k4 = generate(&FamilySpec::Complete(4)).unwrap();
        assert_eq!(find_maxmin_barrier(&k4, 2).unwrap(), None);

        let tight = generate(&FamilySpec::SplitTight(8, 2)).unwrap();
        let b = find_maxmin_barrier(&tight, 2).unwrap().unwrap();
        assert!(b.deficiency <= -2);
        assert_eq!(b.deficiency % 2, 0);
        assert!(b.maxmin);

        let star = generate(&FamilySpec::CompleteBipartite(1, 3)).unwrap();
        let b = find_maxmin_barrier(&star, 1).unwrap().unwrap();
        assert!(b.deficiency <= -2);
        // Maxmin: S = {center} admits deficiency -2 with empty T.
        assert_eq!(b.partition.s, vs(&[0]));
        assert_eq!(b.partition.t, vs(&[]));

        let over = crate::Graph::empty(16);
        assert!(matches!(
            find_maxmin_barrier(&over, 2),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn barrier_properties_on_tight_family() {
        let tight = generate(&FamilySpec::SplitTight(8, 2)).unwrap();
        let b = find_maxmin_barrier(&tight, 2).unwrap().unwrap();
        let report = check_barrier_properties(&tight, &b).unwrap();
        assert!(report.all_hold(), "{report:?}");
    }

    #[test]
    fn barrier_properties_flag_violations() {
        // A hand-built barrier that is not maxmin: for the star with k = 1,
        // S = {center}, T = {leaf 1} also has negative deficiency, but its
        // U-vertices are fine; instead violate (ii) on a path with k = 1:
        // P4 has no 1-factor obstruction... use K_{1,3} with T = two leaves.
        let star = generate(&FamilySpec::CompleteBipartite(1, 3)).unwrap();
        let p = OrderedPartition::new(&star, vs(&[0]), vs(&[1]), vs(&[2, 3])).unwrap();
        let d = delta(&star, &p, 1).unwrap();
        assert!(d < 0);
        let cert = BarrierCertificate {
            odd_components: odd_components(&star, &p, 1).unwrap(),
            partition: p,
            k: 1,
            deficiency: d,
            maxmin: false,
        };
        let report = check_barrier_properties(&star, &cert).unwrap();
        // (i) holds: U-vertices have no T-neighbors. (iv) fails: the center
        // is in S, so w = leaf 1 in T has e(w,T) = 0 but k - 2 = -1 < 0.
        assert!(report.u_edges_to_t_bounded);
        assert!(!report.t_to_even_components_bounded || !report.t_induced_degree_bounded);
        assert!(!report.all_hold());
    }

    #[test]
    fn mismatched_certificate_is_rejected() {
        let tight = generate(&FamilySpec::SplitTight(8, 2)).unwrap();
        let mut b = find_maxmin_barrier(&tight, 2).unwrap().unwrap();
        b.deficiency -= 2;
        assert!(check_barrier_properties(&tight, &b).is_err());
        let other = generate(&FamilySpec::Complete(8)).unwrap();
        let b = find_maxmin_barrier(&tight, 2).unwrap().unwrap();
        assert!(check_barrier_properties(&other, &b).is_err());
    }
}
