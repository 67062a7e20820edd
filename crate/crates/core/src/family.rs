//! Generators for the named graph families, with fixed documented labelings
//! so certificates are reproducible byte for byte.

use crate::error::Error;
use crate::graph::Graph;
use std::fmt;
use std::str::FromStr;

/// A named family instance.
///
/// Labelings:
/// - `Complete(n)`: vertices `0..n`.
/// - `CompleteBipartite(a, b)`: side A is `0..a`, side B is `a..a+b`.
/// - `Cycle(n)`: edges `(i, i+1 mod n)`, `n >= 3`.
/// - `Path(n)`: edges `(i, i+1)`.
/// - `Petersen`: outer cycle `0..5`, inner pentagram `5..10`, spokes `(i, 5+i)`.
/// - `SplitTight(n, k)`: even `n >= 2k+2`; independent side `0..=n/2`
///   (n/2 + 1 vertices), clique on the remaining `n/2 - 1` labels, all
///   cross edges present.
/// - `Andersen(r)`: `r + 2` triangles on labels `0..3(r+2)` completely
///   joined to `r` otherwise-isolated vertices after them.
/// - `KaterinisWoodall(r, k)`: with `l = r*k - 1`, a clique on `2l - 2r`
///   labels completely joined to `l` disjoint edges after it.
/// - `Join(a, b)` / `DisjointUnion(a, b)`: `a`'s labels first, `b` shifted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Cycle(usize),
    Path(usize),
    Petersen,
    SplitTight(usize, usize),
    Andersen(usize),
    KaterinisWoodall(usize, usize),
    Join(Box<FamilySpec>, Box<FamilySpec>),
    DisjointUnion(Box<FamilySpec>, Box<FamilySpec>),
}

pub fn generate(spec: &FamilySpec) -> Result<Graph, Error> {
    match *spec {
        FamilySpec::Complete(n) => {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            Graph::new(n, &edges)
        }
        FamilySpec::CompleteBipartite(a, b) => {
            let mut edges = Vec::new();
            for u in 0..a {
                for v in a..a + b {
                    edges.push((u, v));
                }
            }
            Graph::new(a + b, &edges)
        }
        FamilySpec::Cycle(n) => {
            if n < 3 {
                return Err(Error::Family(format!("cycle requires n >= 3, got {n}")));
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::new(n, &edges)
        }
        FamilySpec::Path(n) => {
            if n == 0 {
                return Err(Error::Family("path requires n >= 1".into()));
            }
            let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            Graph::new(n, &edges)
        }
        FamilySpec::Petersen => {
            let mut edges = Vec::new();
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((5 + i, 5 + (i + 2) % 5));
                edges.push((i, 5 + i));
            }
            Graph::new(10, &edges)
        }
        FamilySpec::SplitTight(n, k) => {
            if k == 0 {
                return Err(Error::Family("split_tight requires k >= 1".into()));
            }
            if n % 2 != 0 || n < 2 * k + 2 {
                return Err(Error::Family(format!(
                    "split_tight requires even n >= 2k+2, got n = {n}, k = {k}"
                )));
            }
            let ind = n / 2 + 1;
            let mut edges = Vec::new();
            for u in ind..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            for u in 0..ind {
                for v in ind..n {
                    edges.push((u, v));
                }
            }
            Graph::new(n, &edges)
        }
        FamilySpec::Andersen(r) => {
            if r == 0 {
                return Err(Error::Family("andersen requires r >= 1".into()));
            }
            let triangles = r + 2;
            let tri_verts = 3 * triangles;
            let n = tri_verts + r;
            let mut edges = Vec::new();
            for t in 0..triangles {
                let b = 3 * t;
                edges.extend([(b, b + 1), (b, b + 2), (b + 1, b + 2)]);
            }
            for u in 0..tri_verts {
                for v in tri_verts..n {
                    edges.push((u, v));
                }
            }
            Graph::new(n, &edges)
        }
        FamilySpec::KaterinisWoodall(r, k) => {
            if r == 0 || k < 2 {
                return Err(Error::Family(
                    "katerinis_woodall requires r >= 1 and k >= 2".into(),
                ));
            }
            let l = r * k - 1;
            let clique = 2 * l - 2 * r;
            let n = clique + 2 * l;
            let mut edges = Vec::new();
            for u in 0..clique {
                for v in u + 1..clique {
                    edges.push((u, v));
                }
            }
            for i in 0..l {
                edges.push((clique + 2 * i, clique + 2 * i + 1));
            }
            for u in 0..clique {
                for v in clique..n {
                    edges.push((u, v));
                }
            }
            Graph::new(n, &edges)
        }
        FamilySpec::Join(ref a, ref b) => {
            let (ga, gb) = (generate(a)?, generate(b)?);
            let na = ga.n();
            let mut edges = ga.edges();
            edges.extend(gb.edges().into_iter().map(|(u, v)| (u + na, v + na)));
            for u in 0..na {
                for v in na..na + gb.n() {
                    edges.push((u, v));
                }
            }
            Graph::new(na + gb.n(), &edges)
        }
        FamilySpec::DisjointUnion(ref a, ref b) => {
            let (ga, gb) = (generate(a)?, generate(b)?);
            let na = ga.n();
            let mut edges = ga.edges();
            edges.extend(gb.edges().into_iter().map(|(u, v)| (u + na, v + na)));
            Graph::new(na + gb.n(), &edges)
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a},{b}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Petersen => write!(f, "petersen"),
            FamilySpec::SplitTight(n, k) => write!(f, "split_tight:{n},{k}"),
            FamilySpec::Andersen(r) => write!(f, "andersen:{r}"),
            FamilySpec::KaterinisWoodall(r, k) => write!(f, "katerinis_woodall:{r},{k}"),
            FamilySpec::Join(a, b) => write!(f, "join({a},{b})"),
            FamilySpec::DisjointUnion(a, b) => write!(f, "disjoint_union({a},{b})"),
        }
    }
}

/// Grammar: `name`, `name:p1,p2`, or `join(spec,spec)` /
/// `disjoint_union(spec,spec)` with nesting.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = |msg: String| Error::Family(msg);

        if let Some(rest) = s.strip_prefix("join(").or_else(|| {
            s.strip_prefix("disjoint_union(")
        }) {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| bad(format!("missing closing paren in '{s}'")))?;
            let mut depth = 0usize;
            let mut split = None;
            for (i, c) in inner.char_indices() {
                match c {
                    '(' => depth += 1,
                    ')' => {
                        depth = depth
                            .checked_sub(1)
                            .ok_or_else(|| bad(format!("unbalanced parens in '{s}'")))?
                    }
                    ',' if depth == 0 => {
                        split = Some(i);
                        break;
                    }
                    _ => {}
                }
            }
            let split = split.ok_or_else(|| bad(format!("combinator needs two parts: '{s}'")))?;
            let a = Box::new(inner[..split].parse()?);
            let b = Box::new(inner[split + 1..].parse()?);
            return Ok(if s.starts_with("join(") {
                FamilySpec::Join(a, b)
            } else {
                FamilySpec::DisjointUnion(a, b)
            });
        }

        let (name, params) = match s.split_once(':') {
            Some((n, p)) => (n, p),
            None => (s, ""),
        };
        let nums: Vec<usize> = if params.is_empty() {
            Vec::new()
        } else {
            params
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| bad(format!("bad integer parameter '{p}' in '{s}'")))
                })
                .collect::<Result<_, _>>()?
        };
        let arity = |want: usize| {
            if nums.len() == want {
                Ok(())
            } else {
                Err(bad(format!(
                    "family '{name}' takes {want} parameter(s), got {}",
                    nums.len()
                )))
            }
        };
        match name {
            "complete" => {
                arity(1)?;
                Ok(FamilySpec::Complete(nums[0]))
            }
            "complete_bipartite" => {
                arity(2)?;
                Ok(FamilySpec::CompleteBipartite(nums[0], nums[1]))
            }
            "cycle" => {
                arity(1)?;
                Ok(FamilySpec::Cycle(nums[0]))
            }
            "path" => {
                arity(1)?;
                Ok(FamilySpec::Path(nums[0]))
            }
            "petersen" => {
                arity(0)?;
                Ok(FamilySpec::Petersen)
            }
            "split_tight" => {
                arity(2)?;
                Ok(FamilySpec::SplitTight(nums[0], nums[1]))
            }
            "andersen" => {
                arity(1)?;
                Ok(FamilySpec::Andersen(nums[0]))
            }
            "katerinis_woodall" => {
                arity(2)?;
                Ok(FamilySpec::KaterinisWoodall(nums[0], nums[1]))
            }
            _ => Err(bad(format!("unknown family '{name}'"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_tight_8_2_matches_explicit_construction() {
        // Independent 5-set {0..4} completely joined to a triangle {5,6,7}.
        let g = generate(&FamilySpec::SplitTight(8, 2)).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(g.edge_count(), 3 + 15);
        for u in 0..5 {
            for v in 0..5 {
                assert!(u == v || !g.has_edge(u, v));
            }
            for v in 5..8 {
                assert!(g.has_edge(u, v));
            }
        }
        for u in 5..8 {
            for v in 5..8 {
                assert!(u == v || g.has_edge(u, v));
            }
        }
        assert!(generate(&FamilySpec::SplitTight(7, 2)).is_err());
        assert!(generate(&FamilySpec::SplitTight(4, 2)).is_err());
    }

    #[test]
    fn andersen_1_is_three_triangles_joined_to_one_vertex() {
        let g = generate(&FamilySpec::Andersen(1)).unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.degree(9), 9);
        for t in 0..3 {
            let b = 3 * t;
            assert!(g.has_edge(b, b + 1) && g.has_edge(b, b + 2) && g.has_edge(b + 1, b + 2));
        }
        assert!(!g.has_edge(0, 3));
    }

    #[test]
    fn katerinis_woodall_shape() {
        // r = 1, k = 2: l = 1, clique K_0 plus one edge.
        let g = generate(&FamilySpec::KaterinisWoodall(1, 2)).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edge_count(), 1);
        // r = 1, k = 3: l = 2, clique K_2 joined to two disjoint edges.
        let g = generate(&FamilySpec::KaterinisWoodall(1, 3)).unwrap();
        assert_eq!(g.n(), 6);
        assert!(g.has_edge(0, 1) && g.has_edge(2, 3) && g.has_edge(4, 5));
        assert!(!g.has_edge(2, 4) && !g.has_edge(3, 5));
        assert_eq!(g.degree(0), 5);
    }

    #[test]
    fn petersen_is_cubic() {
        let g = generate(&FamilySpec::Petersen).unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.degree_extremes().unwrap(), (3, 3));
        assert_eq!(g.edge_count(), 15);
    }

    #[test]
    fn spec_strings_round_trip() {
        for text in [
            "complete:4",
            "complete_bipartite:2,3",
            "cycle:5",
            "path:4",
            "petersen",
            "split_tight:8,2",
            "andersen:1",
            "katerinis_woodall:1,2",
            "join(complete:3,cycle:4)",
            "disjoint_union(join(complete:1,path:2),petersen)",
        ] {
            let spec: FamilySpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
            let again: FamilySpec = spec.to_string().parse().unwrap();
            assert_eq!(spec, again);
        }
        assert!("frobnicate:3".parse::<FamilySpec>().is_err());
        assert!("complete".parse::<FamilySpec>().is_err());
        assert!("join(complete:3)".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn join_matches_complete_bipartite() {
        let a = generate(&FamilySpec::Join(
            Box::new(FamilySpec::Complete(1)),
            Box::new(FamilySpec::Complete(1)),
        ))
        .unwrap();
        assert_eq!(a, generate(&FamilySpec::Complete(2)).unwrap());
        let b: FamilySpec = "join(disjoint_union(complete:1,complete:1),complete:1)"
            .parse()
            .unwrap();
        let g = generate(&b).unwrap();
        // Path 0-2-1: two isolated vertices joined to a third.
        assert_eq!(g.edges(), vec![(0, 2), (1, 2)]);
    }
}
