//! Exact binding numbers with minimizing witnesses.
//!
//! `beta_k` minimizes `|Λ^k(S)| / |S|` over all subsets `S` with `|S| >= k`
//! and `Λ^k(S) != V(G)`. The classical binding number is the same minimum
//! with `k = 1`, and the bipartite variants restrict `S` to one side of a
//! bipartition. All four searches share one enumeration engine that walks
//! the subsets of a universe in Gray-code order, maintaining per-vertex
//! counters `|Λ(v) ∩ S|` incrementally, so each subset costs one
//! degree-sized update instead of a full rescan. The `reference` module
//! holds a deliberately naive two-loop implementation used as the oracle
//! the optimized engine is tested against.

use crate::error::Error;
use crate::graph::Graph;
use crate::vset::VertexSet;
use crate::Rational;

/// Exact outcome of a binding-number computation.
///
/// `DefinedZero` is the convention value (order smaller than `k`, or a
/// bipartite side smaller than `k`), kept distinct from a genuine zero
/// minimum. `NoFeasibleSet` is reported when the minimized domain is empty,
/// which cannot happen for `beta_k` on graphs of order at least `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BindingOutcome {
    Value(Rational),
    DefinedZero,
    NoFeasibleSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BindingValue {
    pub outcome: BindingOutcome,
    /// Minimizing set, smallest by bitset value among all minimizers.
    pub witness: Option<VertexSet>,
    /// Number of feasible sets examined.
    pub feasible_count: u64,
}

impl BindingValue {
    fn defined_zero() -> Self {
        BindingValue {
            outcome: BindingOutcome::DefinedZero,
            witness: None,
            feasible_count: 0,
        }
    }

    /// The value as a rational, with `DefinedZero` comparing as `0`.
    pub fn as_ratio(&self) -> Option<Rational> {
        match &self.outcome {
            BindingOutcome::Value(r) => Some(*r),
            BindingOutcome::DefinedZero => Some(Rational::new(0, 1)),
            BindingOutcome::NoFeasibleSet => None,
        }
    }

    pub fn at_least(&self, bound: Rational) -> bool {
        self.as_ratio().is_some_and(|r| r >= bound)
    }

    pub fn is_positive(&self) -> bool {
        self.as_ratio().is_some_and(|r| r > Rational::new(0, 1))
    }
}

/// Largest order accepted by the exact enumerations. The subset walk is
/// `2^n` steps, so anything beyond this cap could not finish anyway.
pub const ENUMERATION_CAP: usize = 63;

struct Best {
    lam: u64,
    size: u64,
    mask: u64,
}

/// Gray-code subset scan over `universe` (ascending vertex labels).
///
/// Tracks `lam = |Λ^k(S)|` incrementally. A subset is feasible when
/// `|S| >= min_size` and, if `forbidden_lam` is set, `lam != forbidden_lam`
/// (used for the `Λ^k(S) != V` and `Λ(S) != Y` side conditions). Returns the
/// minimizer of `lam / |S|` with ties broken toward the smaller bitset
/// value, plus the number of feasible subsets seen.
fn scan_min_ratio(
    adj: &[Vec<usize>],
    n: usize,
    universe: &[usize],
    k: usize,
    min_size: usize,
    forbidden_lam: Option<usize>,
) -> (Option<Best>, u64) {
    let m = universe.len();
    debug_assert!(m <= ENUMERATION_CAP);
    let mut counts = vec![0u32; n];
    let mut lam = 0u64;
    let mut mask = 0u64;
    let mut best: Option<Best> = None;
    let mut feasible = 0u64;
    let k32 = k as u32;

    for step in 1u64..(1u64 << m) {
        let pos = step.trailing_zeros() as usize;
        let bit = 1u64 << pos;
        mask ^= bit;
        let vertex = universe[pos];
        if mask & bit != 0 {
            for &w in &adj[vertex] {
                counts[w] += 1;
                if counts[w] == k32 {
                    lam += 1;
                }
            }
        } else {
            for &w in &adj[vertex] {
                if counts[w] == k32 {
                    lam -= 1;
                }
                counts[w] -= 1;
            }
        }
        let size = mask.count_ones() as u64;
        if (size as usize) < min_size {
            continue;
        }
        if forbidden_lam == Some(lam as usize) {
            continue;
        }
        feasible += 1;
        let better = match &best {
            None => true,
            // lam/size < b.lam/b.size, exactly
            Some(b) => match (lam * b.size).cmp(&(b.lam * size)) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Equal => mask < b.mask,
                std::cmp::Ordering::Greater => false,
            },
        };
        if better {
            best = Some(Best { lam, size, mask });
        }
    }
    (best, feasible)
}

fn mask_to_set(universe: &[usize], mask: u64) -> VertexSet {
    (0..universe.len())
        .filter(|&i| mask >> i & 1 == 1)
        .map(|i| universe[i])
        .collect()
}

fn check_cap(m: usize) -> Result<(), Error> {
    if m > ENUMERATION_CAP {
        Err(Error::Capacity {
            what: "exact binding-number enumeration",
            cap: ENUMERATION_CAP,
            n: m,
        })
    } else {
        Ok(())
    }
}

fn finish(universe: &[usize], best: Option<Best>, feasible: u64) -> BindingValue {
    match best {
        Some(b) => BindingValue {
            outcome: BindingOutcome::Value(Rational::new(b.lam as i64, b.size as i64)),
            witness: Some(mask_to_set(universe, b.mask)),
            feasible_count: feasible,
        },
        None => BindingValue {
            outcome: BindingOutcome::NoFeasibleSet,
            witness: None,
            feasible_count: 0,
        },
    }
}

/// The k-th binding number: minimum of `|Λ^k(S)| / |S|` over `S ⊆ V(G)`
/// with `|S| >= k` and `Λ^k(S) != V(G)`. Returns the convention value when
/// the order is smaller than `k`.
pub fn beta_k(g: &Graph, k: usize) -> Result<BindingValue, Error> {
    if k == 0 {
        return Err(Error::Argument("beta_k requires k >= 1".into()));
    }
    if g.n() < k {
        return Ok(BindingValue::defined_zero());
    }
    check_cap(g.n())?;
    let universe: Vec<usize> = (0..g.n()).collect();
    let (best, feasible) = scan_min_ratio(
        &g.adjacency_lists(),
        g.n(),
        &universe,
        k,
        k,
        Some(g.n()),
    );
    Ok(finish(&universe, best, feasible))
}

/// The weak bipartite k-th binding number: minimum of `|Λ^k(S)| / |S|` over
/// `S ⊆ x` with `|S| >= k` (no neighborhood side condition). `x` must be
/// independent. Returns the convention value when `|x| < k`.
pub fn beta_k_bipartite(g: &Graph, x: &VertexSet, k: usize) -> Result<BindingValue, Error> {
    if k == 0 {
        return Err(Error::Argument("beta_k_bipartite requires k >= 1".into()));
    }
    g.check_independent(x)?;
    if x.len() < k {
        return Ok(BindingValue::defined_zero());
    }
    check_cap(x.len())?;
    let universe: Vec<usize> = x.iter().collect();
    let (best, feasible) = scan_min_ratio(&g.adjacency_lists(), g.n(), &universe, k, k, None);
    Ok(finish(&universe, best, feasible))
}

/// The classical binding number: minimum of `|Λ(S)| / |S|` over nonempty
/// `S` with `Λ(S) != V(G)`. This is `beta_k` with `k = 1`; singleton sets
/// are always feasible, so the minimum exists for every graph of order at
/// least one.
pub fn bind_classical(g: &Graph) -> Result<BindingValue, Error> {
    if g.n() == 0 {
        return Err(Error::Argument(
            "the binding number requires at least one vertex".into(),
        ));
    }
    beta_k(g, 1)
}

/// The bipartite binding number for a bipartition `(x, y)`: the minimum of
/// `min{|Λ(S)|/|S| : ∅ != S ⊆ X, Λ(S) != Y}` and the symmetric quantity
/// over `Y`, except that complete bipartite graphs take the value
/// `min(|X|, |Y|)` by convention (with no witness).
pub fn bind_bipartite(g: &Graph, x: &VertexSet, y: &VertexSet) -> Result<BindingValue, Error> {
    g.check_bipartition(x, y)?;
    if x.is_empty() || y.is_empty() {
        return Err(Error::Argument(
            "bipartite binding number requires both sides nonempty".into(),
        ));
    }
    if g.edge_count() == x.len() * y.len() {
        let value = x.len().min(y.len()) as i64;
        return Ok(BindingValue {
            outcome: BindingOutcome::Value(Rational::new(value, 1)),
            witness: None,
            feasible_count: 0,
        });
    }
    check_cap(x.len().max(y.len()))?;
    let adj = g.adjacency_lists();
    let mut best: Option<(Rational, VertexSet)> = None;
    let mut feasible_total = 0u64;
    for (side, other) in [(x, y), (y, x)] {
        let universe: Vec<usize> = side.iter().collect();
        let (side_best, feasible) =
            scan_min_ratio(&adj, g.n(), &universe, 1, 1, Some(other.len()));
        feasible_total += feasible;
        if let Some(b) = side_best {
            let ratio = Rational::new(b.lam as i64, b.size as i64);
            let set = mask_to_set(&universe, b.mask);
            let replace = match &best {
                None => true,
                Some((r, w)) => {
                    ratio < *r || (ratio == *r && set.value_cmp(w) == std::cmp::Ordering::Less)
                }
            };
            if replace {
                best = Some((ratio, set));
            }
        }
    }
    Ok(match best {
        Some((r, w)) => BindingValue {
            outcome: BindingOutcome::Value(r),
            witness: Some(w),
            feasible_count: feasible_total,
        },
        None => BindingValue {
            outcome: BindingOutcome::NoFeasibleSet,
            witness: None,
            feasible_count: 0,
        },
    })
}

/// Naive reference implementations: ascending-mask enumeration with the
/// neighborhood recomputed from scratch for every subset. These are the
/// oracles the incremental engine is checked against; they share no state
/// maintenance with it.
pub mod reference {
    use super::*;

    fn naive_scan(
        g: &Graph,
        universe: &[usize],
        k: usize,
        min_size: usize,
        forbidden_lam: Option<usize>,
    ) -> (Option<(u64, VertexSet)>, u64) {
        let m = universe.len();
        let mut best: Option<(Rational, VertexSet, u64)> = None;
        let mut feasible = 0u64;
        for mask in 1u64..(1u64 << m) {
            let s = super::mask_to_set(universe, mask);
            if s.len() < min_size {
                continue;
            }
            let lam = g.lambda_k(&s, k).unwrap().len();
            if forbidden_lam == Some(lam) {
                continue;
            }
            feasible += 1;
            let ratio = Rational::new(lam as i64, s.len() as i64);
            let better = match &best {
                None => true,
                Some((r, _, _)) => ratio < *r,
            };
            if better {
                best = Some((ratio, s, lam as u64));
            }
        }
        (best.map(|(_, s, lam)| (lam, s)), feasible)
    }

    pub fn beta_k_naive(g: &Graph, k: usize) -> BindingValue {
        assert!(k >= 1);
        if g.n() < k {
            return BindingValue::defined_zero();
        }
        let universe: Vec<usize> = (0..g.n()).collect();
        let (best, feasible) = naive_scan(g, &universe, k, k, Some(g.n()));
        match best {
            Some((lam, s)) => BindingValue {
                outcome: BindingOutcome::Value(Rational::new(lam as i64, s.len() as i64)),
                witness: Some(s),
                feasible_count: feasible,
            },
            None => BindingValue {
                outcome: BindingOutcome::NoFeasibleSet,
                witness: None,
                feasible_count: 0,
            },
        }
    }

    pub fn beta_k_bipartite_naive(g: &Graph, x: &VertexSet, k: usize) -> BindingValue {
        assert!(k >= 1);
        if x.len() < k {
            return BindingValue::defined_zero();
        }
        let universe: Vec<usize> = x.iter().collect();
        let (best, feasible) = naive_scan(g, &universe, k, k, None);
        match best {
            Some((lam, s)) => BindingValue {
                outcome: BindingOutcome::Value(Rational::new(lam as i64, s.len() as i64)),
                witness: Some(s),
                feasible_count: feasible,
            },
            None => BindingValue {
                outcome: BindingOutcome::NoFeasibleSet,
                witness: None,
                feasible_count: 0,
            },
        }
    }

    pub fn bind_bipartite_naive(g: &Graph, x: &VertexSet, y: &VertexSet) -> BindingValue {
        if g.edge_count() == x.len() * y.len() {
            return BindingValue {
                outcome: BindingOutcome::Value(Rational::new(x.len().min(y.len()) as i64, 1)),
                witness: None,
                feasible_count: 0,
            };
        }
        let mut best: Option<(Rational, VertexSet)> = None;
        let mut feasible_total = 0u64;
        for (side, other) in [(x, y), (y, x)] {
            let universe: Vec<usize> = side.iter().collect();
            let (side_best, feasible) = naive_scan(g, &universe, 1, 1, Some(other.len()));
            feasible_total += feasible;
            if let Some((lam, s)) = side_best {
                let ratio = Rational::new(lam as i64, s.len() as i64);
                let replace = match &best {
                    None => true,
                    Some((r, w)) => {
                        ratio < *r
                            || (ratio == *r && s.value_cmp(w) == std::cmp::Ordering::Less)
                    }
                };
                if replace {
                    best = Some((ratio, s));
                }
            }
        }
        match best {
            Some((r, w)) => BindingValue {
                outcome: BindingOutcome::Value(r),
                witness: Some(w),
                feasible_count: feasible_total,
            },
            None => BindingValue {
                outcome: BindingOutcome::NoFeasibleSet,
                witness: None,
                feasible_count: 0,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, FamilySpec};

    fn ratio(p: i64, q: i64) -> BindingOutcome {
        BindingOutcome::Value(Rational::new(p, q))
    }

    fn vs(members: &[usize]) -> VertexSet {
        members.iter().copied().collect()
    }

    #[test]
    fn beta_2_of_k4_is_one() {
        let g = generate(&FamilySpec::Complete(4)).unwrap();
        let b = beta_k(&g, 2).unwrap();
        assert_eq!(b.outcome, ratio(1, 1));
        assert_eq!(b.witness, Some(vs(&[0, 1])));
    }

    #[test]
    fn beta_2_of_c4_is_zero() {
        let g = generate(&FamilySpec::Cycle(4)).unwrap();
        let b = beta_k(&g, 2).unwrap();
        assert_eq!(b.outcome, ratio(0, 1));
        assert_eq!(b.witness, Some(vs(&[0, 1])));
        assert!(!b.is_positive());
    }

    #[test]
    fn beta_2_of_tight_split_family() {
        let g = generate(&FamilySpec::SplitTight(8, 2)).unwrap();
        let b = beta_k(&g, 2).unwrap();
        assert_eq!(b.outcome, ratio(1, 2));
        // All five independent-side vertices plus the first clique vertex.
        assert_eq!(b.witness, Some(vs(&[0, 1, 2, 3, 4, 5])));
    }

    #[test]
    fn beta_above_order_is_defined_zero() {
        let g = generate(&FamilySpec::Complete(3)).unwrap();
        let b = beta_k(&g, 5).unwrap();
        assert_eq!(b.outcome, BindingOutcome::DefinedZero);
        assert_eq!(b.witness, None);
        assert_eq!(b.as_ratio(), Some(Rational::new(0, 1)));
    }

    #[test]
    fn beta_bipartite_examples() {
        let k22 = generate(&FamilySpec::CompleteBipartite(2, 2)).unwrap();
        let b = beta_k_bipartite(&k22, &vs(&[0, 1]), 2).unwrap();
        assert_eq!(b.outcome, ratio(1, 1));

        let star = generate(&FamilySpec::CompleteBipartite(1, 3)).unwrap();
        let b = beta_k_bipartite(&star, &vs(&[1, 2, 3]), 2).unwrap();
        assert_eq!(b.outcome, ratio(1, 3));
        assert_eq!(b.witness, Some(vs(&[1, 2, 3])));

        let k33 = generate(&FamilySpec::CompleteBipartite(3, 3)).unwrap();
        let b = beta_k_bipartite(&k33, &vs(&[0, 1, 2]), 3).unwrap();
        assert_eq!(b.outcome, ratio(1, 1));

        // Too-small side takes the convention value.
        let b = beta_k_bipartite(&star, &vs(&[0]), 2).unwrap();
        assert_eq!(b.outcome, BindingOutcome::DefinedZero);

        // Non-independent side is rejected.
        let k4 = generate(&FamilySpec::Complete(4)).unwrap();
        assert!(beta_k_bipartite(&k4, &vs(&[0, 1]), 2).is_err());
    }

    // Oracle-derived values for the classical binding number. For C5 the
    // naive scan gives 4/3, attained by complements of non-adjacent pairs
    // (the three-vertex sets whose neighborhood misses one vertex).
    #[test]
    fn bind_classical_examples() {
        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        let oracle = reference::beta_k_naive(&c5, 1);
        let b = bind_classical(&c5).unwrap();
        assert_eq!(b, oracle);
        assert_eq!(b.outcome, ratio(4, 3));

        let k33 = generate(&FamilySpec::CompleteBipartite(3, 3)).unwrap();
        let b = bind_classical(&k33).unwrap();
        assert_eq!(b, reference::beta_k_naive(&k33, 1));
        assert_eq!(b.outcome, ratio(1, 1));
        assert_eq!(b.witness, Some(vs(&[0, 1, 2])));

        // The one-vertex graph: S = {0} is feasible (its neighborhood is
        // empty and differs from V), so the minimum is a genuine 0.
        let k1 = generate(&FamilySpec::Complete(1)).unwrap();
        let b = bind_classical(&k1).unwrap();
        assert_eq!(b.outcome, ratio(0, 1));
        assert_eq!(b.witness, Some(vs(&[0])));

        assert!(bind_classical(&Graph::empty(0)).is_err());
    }

    #[test]
    fn bind_of_complete_graph_is_n_minus_one() {
        let k5 = generate(&FamilySpec::Complete(5)).unwrap();
        let b = bind_classical(&k5).unwrap();
        assert_eq!(b.outcome, ratio(4, 1));
        assert_eq!(b.witness, Some(vs(&[0])));
    }

    #[test]
    fn bind_bipartite_examples() {
        let k23 = generate(&FamilySpec::CompleteBipartite(2, 3)).unwrap();
        let b = bind_bipartite(&k23, &vs(&[0, 1]), &vs(&[2, 3, 4])).unwrap();
        assert_eq!(b.outcome, ratio(2, 1));
        assert_eq!(b.witness, None);

        // C4 = K_{2,2} is complete bipartite, so the special case applies.
        let c4 = generate(&FamilySpec::Cycle(4)).unwrap();
        let b = bind_bipartite(&c4, &vs(&[0, 2]), &vs(&[1, 3])).unwrap();
        assert_eq!(b.outcome, ratio(2, 1));

        // C6: oracle-derived. Only singletons are feasible on either side
        // (any two same-side vertices already dominate the other side), so
        // the minimum is 2/1.
        let c6 = generate(&FamilySpec::Cycle(6)).unwrap();
        let x = vs(&[0, 2, 4]);
        let y = vs(&[1, 3, 5]);
        let oracle = reference::bind_bipartite_naive(&c6, &x, &y);
        let b = bind_bipartite(&c6, &x, &y).unwrap();
        assert_eq!(b, oracle);
        assert_eq!(b.outcome, ratio(2, 1));

        assert!(bind_bipartite(&c6, &vs(&[0, 1]), &vs(&[2, 3, 4, 5])).is_err());
    }

    #[test]
    fn matches_naive_reference_on_small_graphs() {
        // Spot check here; the full n = 6 sweep is in the acceptance suite.
        for n in 0..=5usize {
            let bits = n * n.saturating_sub(1) / 2;
            for mask in 0u64..(1 << bits) {
                let g = crate::harness::graph_from_edge_mask(n, mask);
                for k in 1..=3usize {
                    let fast = beta_k(&g, k).unwrap();
                    let slow = reference::beta_k_naive(&g, k);
                    assert_eq!(fast, slow, "n={n} mask={mask} k={k}");
                }
            }
        }
    }

    #[test]
    fn upper_bound_on_small_graphs() {
        for mask in 0u64..(1 << 10) {
            let g = crate::harness::graph_from_edge_mask(5, mask);
            for k in 1..=4usize {
                let b = beta_k(&g, k).unwrap();
                let bound = Rational::new((5 - k) as i64, k as i64);
                assert!(b.as_ratio().unwrap() <= bound);
            }
        }
    }
}
