//! Maximum-cardinality matching in general graphs (Edmonds' blossom
//! contraction, array-based, O(V^3)).
//!
//! Vertices and adjacency are scanned in ascending label order and the
//! search is breadth-first, so the returned matching is a deterministic
//! function of the adjacency lists.

use std::collections::VecDeque;

pub(crate) const UNMATCHED: usize = usize::MAX;

/// Returns `mate`, where `mate[v]` is the partner of `v` or `UNMATCHED`.
pub(crate) fn max_matching(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut mate = vec![UNMATCHED; n];

    // Greedy seed cuts the number of augmentation rounds roughly in half.
    for v in 0..n {
        if mate[v] == UNMATCHED {
            for &u in &adj[v] {
                if mate[u] == UNMATCHED {
                    mate[v] = u;
                    mate[u] = v;
                    break;
                }
            }
        }
    }

    for root in 0..n {
        if mate[root] == UNMATCHED {
            augment(adj, &mut mate, root);
        }
    }
    mate
}

fn lca(mate: &[usize], base: &[usize], parent: &[usize], mut a: usize, mut b: usize) -> usize {
    let mut on_path = vec![false; mate.len()];
    loop {
        a = base[a];
        on_path[a] = true;
        if mate[a] == UNMATCHED {
            break;
        }
        a = parent[mate[a]];
    }
    loop {
        b = base[b];
        if on_path[b] {
            return b;
        }
        b = parent[mate[b]];
    }
}

#[allow(clippy::too_many_arguments)]
fn mark_path(
    mate: &[usize],
    base: &[usize],
    blossom: &mut [bool],
    parent: &mut [usize],
    mut v: usize,
    b: usize,
    mut child: usize,
) {
    while base[v] != b {
        blossom[base[v]] = true;
        blossom[base[mate[v]]] = true;
        parent[v] = child;
        child = mate[v];
        v = parent[mate[v]];
    }
}

fn augment(adj: &[Vec<usize>], mate: &mut [usize], root: usize) -> bool {
    let n = adj.len();
    let mut parent = vec![UNMATCHED; n];
    let mut base: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    used[root] = true;
    let mut queue = VecDeque::from([root]);

    while let Some(v) = queue.pop_front() {
        for &to in &adj[v] {
            if base[v] == base[to] || mate[v] == to {
                continue;
            }
            if to == root || (mate[to] != UNMATCHED && parent[mate[to]] != UNMATCHED) {
                // Odd cycle: contract the blossom to its base.
                let cur_base = lca(mate, &base, &parent, v, to);
                let mut blossom = vec![false; n];
                mark_path(mate, &base, &mut blossom, &mut parent, v, cur_base, to);
                mark_path(mate, &base, &mut blossom, &mut parent, to, cur_base, v);
                for i in 0..n {
                    if blossom[base[i]] {
                        base[i] = cur_base;
                        if !used[i] {
                            used[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if parent[to] == UNMATCHED {
                parent[to] = v;
                if mate[to] == UNMATCHED {
                    // Augmenting path found; flip matched edges along it.
                    let mut u = to;
                    while u != UNMATCHED {
                        let pv = parent[u];
                        let next = mate[pv];
                        mate[u] = pv;
                        mate[pv] = u;
                        u = next;
                    }
                    return true;
                }
                used[mate[to]] = true;
                queue.push_back(mate[to]);
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, FamilySpec};
    use crate::harness::graph_from_edge_mask;

    fn matching_size(adj: &[Vec<usize>]) -> usize {
        let mate = max_matching(adj);
        // Sanity: symmetric and along edges.
        for (v, &m) in mate.iter().enumerate() {
            if m != UNMATCHED {
                assert_eq!(mate[m], v);
                assert!(adj[v].contains(&m));
            }
        }
        mate.iter().filter(|&&m| m != UNMATCHED).count() / 2
    }

    // Exhaustive oracle: maximum matching size by subset DP.
    fn brute_size(n: usize, adj: &[Vec<usize>]) -> usize {
        let mut memo = vec![u8::MAX; 1 << n];
        fn go(mask: u64, adj: &[Vec<usize>], memo: &mut [u8]) -> u8 {
            if mask == 0 {
                return 0;
            }
            if memo[mask as usize] != u8::MAX {
                return memo[mask as usize];
            }
            let v = mask.trailing_zeros() as usize;
            let mut best = go(mask & !(1 << v), adj, memo);
            for &u in &adj[v] {
                if mask >> u & 1 == 1 {
                    best = best.max(1 + go(mask & !(1 << v) & !(1 << u), adj, memo));
                }
            }
            memo[mask as usize] = best;
            best
        }
        go((1u64 << n) - 1, adj, &mut memo) as usize
    }

    #[test]
    fn named_graphs() {
        let k4 = generate(&FamilySpec::Complete(4)).unwrap();
        assert_eq!(matching_size(&k4.adjacency_lists()), 2);
        let c5 = generate(&FamilySpec::Cycle(5)).unwrap();
        assert_eq!(matching_size(&c5.adjacency_lists()), 2);
        let petersen = generate(&FamilySpec::Petersen).unwrap();
        assert_eq!(matching_size(&petersen.adjacency_lists()), 5);
    }

    #[test]
    fn agrees_with_brute_force_on_all_small_graphs() {
        for n in 0..=6usize {
            let bits = n * n.saturating_sub(1) / 2;
            for mask in 0u64..(1 << bits) {
                let g = graph_from_edge_mask(n, mask);
                let adj = g.adjacency_lists();
                assert_eq!(
                    matching_size(&adj),
                    brute_size(n, &adj),
                    "n={n} mask={mask}"
                );
            }
        }
    }

    #[test]
    fn blossom_contraction_cases() {
        // Two triangles bridged by an edge: needs blossom handling.
        let g = crate::Graph::new(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)],
        )
        .unwrap();
        assert_eq!(matching_size(&g.adjacency_lists()), 3);
    }

    #[test]
    fn deterministic() {
        let g = generate(&FamilySpec::Petersen).unwrap();
        let a = max_matching(&g.adjacency_lists());
        let b = max_matching(&g.adjacency_lists());
        assert_eq!(a, b);
    }
}
