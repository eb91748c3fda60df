//! Perfect matchings: enumeration, constrained existence, matching-covered
//! and k-extendability tests, and the partition of a regular bipartite
//! graph's edges into perfect matchings.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A set of pairwise vertex-disjoint edges of some host graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    /// Validates disjointness and membership in the host.
    pub fn new(host: &Graph, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Matching> {
        let mut es: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if !host.has_edge(a, b) {
                return Err(Error::EdgeNotInGraph { u: a, v: b });
            }
            es.push((a.min(b), a.max(b)));
        }
        es.sort_unstable();
        let mut seen = vec![false; host.n()];
        for &(u, v) in &es {
            if seen[u] || seen[v] {
                return Err(Error::ForcedNotMatching);
            }
            seen[u] = true;
            seen[v] = true;
        }
        Ok(Matching { edges: es })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// Perfect exactly when it covers every vertex of the host.
    pub fn is_perfect_in(&self, host: &Graph) -> bool {
        2 * self.edges.len() == host.n()
    }
}

/// Walks all perfect matchings extending `forced` and avoiding `forbidden`,
/// in lexicographic order of their sorted edge lists. The visitor returns
/// `false` to stop early. Returns the number of matchings visited; exceeding
/// `budget` is an error carrying the partial count.
fn for_each_perfect_matching<F>(
    g: &Graph,
    forced: &[(usize, usize)],
    forbidden: &[(usize, usize)],
    budget: u64,
    visit: F,
) -> Result<u64>
where
    F: FnMut(&[(usize, usize)]) -> bool,
{
    let forced = Matching::new(g, forced.iter().copied())?;
    let mut banned = vec![false; g.m()];
    for &(u, v) in forbidden {
        match g.edge_index(u, v) {
            Some(i) => banned[i] = true,
            None => return Err(Error::EdgeNotInGraph { u, v }),
        }
    }
    for &(u, v) in forced.edges() {
        if banned[g.edge_index(u, v).expect("validated")] {
            return Err(Error::ForcedForbiddenOverlap);
        }
    }

    let mut covered = vec![false; g.n()];
    for &(u, v) in forced.edges() {
        covered[u] = true;
        covered[v] = true;
    }
    if (g.n() - forced.size() * 2) % 2 == 1 {
        return Ok(0);
    }

    struct State<'a, F> {
        g: &'a Graph,
        banned: &'a [bool],
        covered: Vec<bool>,
        chosen: Vec<(usize, usize)>,
        scratch: Vec<(usize, usize)>,
        count: u64,
        budget: u64,
        visit: F,
        stopped: bool,
    }

    fn rec<F: FnMut(&[(usize, usize)]) -> bool>(s: &mut State<'_, F>) -> Result<()> {
        let v = match s.covered.iter().position(|&c| !c) {
            None => {
                if s.count == s.budget {
                    return Err(Error::BudgetExceeded {
                        what: "perfect matching enumeration",
                        partial: s.count,
                    });
                }
                s.count += 1;
                // Matching the lowest uncovered vertex first yields the edges
                // in sorted order already, except for pre-forced edges; a
                // final sort keeps the emitted list canonical either way.
                s.scratch.clear();
                s.scratch.extend_from_slice(&s.chosen);
                s.scratch.sort_unstable();
                if !(s.visit)(&s.scratch) {
                    s.stopped = true;
                }
                return Ok(());
            }
            Some(v) => v,
        };
        for i in 0..s.g.adj(v).len() {
            let w = s.g.adj(v)[i];
            if s.covered[w] {
                continue;
            }
            if s.banned[s.g.edge_index(v, w).expect("adjacency edge")] {
                continue;
            }
            s.covered[v] = true;
            s.covered[w] = true;
            s.chosen.push((v, w));
            let r = rec(s);
            s.chosen.pop();
            s.covered[v] = false;
            s.covered[w] = false;
            r?;
            if s.stopped {
                return Ok(());
            }
        }
        Ok(())
    }

    let mut state = State {
        g,
        banned: &banned,
        covered,
        chosen: forced.edges().to_vec(),
        scratch: Vec::new(),
        count: 0,
        budget,
        visit,
        stopped: false,
    };
    rec(&mut state)?;
    Ok(state.count)
}

/// All perfect matchings, each exactly once, lexicographic by sorted edge
/// list. `Err(BudgetExceeded)` if there are more than `budget` of them.
pub fn enumerate_perfect_matchings(g: &Graph, budget: u64) -> Result<Vec<Matching>> {
    let mut out = Vec::new();
    for_each_perfect_matching(g, &[], &[], budget, |edges| {
        out.push(Matching { edges: edges.to_vec() });
        true
    })?;
    Ok(out)
}

/// Number of perfect matchings, subject to the same budget.
pub fn count_perfect_matchings(g: &Graph, budget: u64) -> Result<u64> {
    for_each_perfect_matching(g, &[], &[], budget, |_| true)
}

/// First perfect matching containing all of `forced` and none of
/// `forbidden`, in enumeration order; `None` when there is none.
pub fn perfect_matching_with(
    g: &Graph,
    forced: &[(usize, usize)],
    forbidden: &[(usize, usize)],
) -> Result<Option<Matching>> {
    let mut found = None;
    for_each_perfect_matching(g, forced, forbidden, u64::MAX, |edges| {
        found = Some(Matching { edges: edges.to_vec() });
        false
    })?;
    Ok(found)
}

/// Streams perfect matchings to a visitor; the visitor returns `false` to
/// stop. Exposed for the modules that must look at every perfect matching
/// without materialising them.
pub fn visit_perfect_matchings<F>(g: &Graph, budget: u64, visit: F) -> Result<u64>
where
    F: FnMut(&[(usize, usize)]) -> bool,
{
    for_each_perfect_matching(g, &[], &[], budget, visit)
}

/// Connected and every edge lies in some perfect matching.
pub fn is_matching_covered(g: &Graph) -> bool {
    if !g.is_connected() {
        return false;
    }
    g.edges().iter().all(|&e| {
        perfect_matching_with(g, &[e], &[]).expect("edge comes from the graph").is_some()
    })
}

/// Every matching of size exactly `k` extends to a perfect matching.
/// Requires at least 2k + 2 vertices.
pub fn is_k_extendable(g: &Graph, k: usize) -> Result<bool> {
    assert!(k >= 1, "extendability parameter must be positive");
    if g.n() < 2 * k + 2 {
        return Err(Error::TooSmall { n: g.n(), need: 2 * k + 2 });
    }
    let mut chosen: Vec<(usize, usize)> = Vec::with_capacity(k);
    fn rec(g: &Graph, from: usize, left: usize, chosen: &mut Vec<(usize, usize)>) -> Result<bool> {
        if left == 0 {
            return Ok(perfect_matching_with(g, chosen, &[])?.is_some());
        }
        for i in from..g.m() {
            let (u, v) = g.edges()[i];
            if chosen.iter().any(|&(a, b)| a == u || a == v || b == u || b == v) {
                continue;
            }
            chosen.push((u, v));
            let ok = rec(g, i + 1, left - 1, chosen)?;
            chosen.pop();
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }
    rec(g, 0, k, &mut chosen)
}

/// A brace: connected, bipartite, and either the quadrilateral or a
/// 2-extendable graph on at least six vertices.
pub fn is_brace(g: &Graph) -> bool {
    if !g.is_connected() || g.bipartition().is_none() {
        return false;
    }
    let is_c4 = g.n() == 4 && g.m() == 4 && g.vertices().all(|v| g.degree(v) == 2);
    if is_c4 {
        return true;
    }
    if g.n() < 6 {
        return false;
    }
    is_k_extendable(g, 2).expect("n >= 6 checked")
}

/// Partitions the edges of a k-regular bipartite graph into k pairwise
/// disjoint perfect matchings.
pub fn konig_partition(g: &Graph) -> Result<Vec<Matching>> {
    let k = g.regularity().ok_or(Error::NotRegular)?;
    if k == 0 {
        return Err(Error::NotRegular);
    }
    if g.bipartition().is_none() {
        return Err(Error::NotBipartite);
    }
    let mut remaining = g.clone();
    let mut parts = Vec::with_capacity(k);
    for _ in 0..k {
        let m = perfect_matching_with(&remaining, &[], &[])?
            .ok_or(Error::Internal("regular bipartite graph lost its perfect matching"))?;
        remaining = remaining.without_edges(m.edges())?;
        parts.push(m);
    }
    debug_assert_eq!(remaining.m(), 0);
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fixture, FixtureId};

    #[test]
    fn k33_has_six_perfect_matchings() {
        let g = fixture(FixtureId::K33);
        let ms = enumerate_perfect_matchings(&g, 1 << 20).unwrap();
        assert_eq!(ms.len(), 6);
        for m in &ms {
            assert!(m.is_perfect_in(&g));
        }
        // Lexicographic order, first and last by hand.
        assert_eq!(ms[0].edges(), &[(0, 3), (1, 4), (2, 5)]);
        assert_eq!(ms[5].edges(), &[(0, 5), (1, 4), (2, 3)]);
    }

    #[test]
    fn odd_order_graph_has_none() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(enumerate_perfect_matchings(&g, 10).unwrap().is_empty());
    }

    #[test]
    fn budget_is_a_loud_error() {
        let g = fixture(FixtureId::K33);
        match enumerate_perfect_matchings(&g, 3) {
            Err(Error::BudgetExceeded { partial: 3, .. }) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn forced_and_forbidden() {
        let g = fixture(FixtureId::K33);
        let m = perfect_matching_with(&g, &[(0, 4)], &[]).unwrap().unwrap();
        assert!(m.contains(0, 4));
        assert!(m.is_perfect_in(&g));

        let all: Vec<_> = g.edges().to_vec();
        assert!(perfect_matching_with(&g, &[], &all).unwrap().is_none());

        // Two opposite spokes of the cube extend to a perfect matching.
        let cube = fixture(FixtureId::Cube);
        assert!(perfect_matching_with(&cube, &[(0, 4), (2, 6)], &[]).unwrap().is_some());

        assert!(matches!(
            perfect_matching_with(&g, &[(0, 3), (0, 4)], &[]),
            Err(Error::ForcedNotMatching)
        ));
        assert!(matches!(
            perfect_matching_with(&g, &[(0, 3)], &[(0, 3)]),
            Err(Error::ForcedForbiddenOverlap)
        ));
    }

    #[test]
    fn matching_covered_examples() {
        assert!(is_matching_covered(&fixture(FixtureId::Prism)));
        assert!(is_matching_covered(&fixture(FixtureId::K33)));
        assert!(!is_matching_covered(&fixture(FixtureId::Fig7a)));
        assert!(!is_matching_covered(&fixture(FixtureId::Fig2c)));
    }

    #[test]
    fn extendability_examples() {
        assert!(is_k_extendable(&fixture(FixtureId::K33), 2).unwrap());
        assert!(is_k_extendable(&fixture(FixtureId::Heawood), 2).unwrap());
        assert!(is_k_extendable(&fixture(FixtureId::Cube), 2).unwrap());
        assert!(!is_k_extendable(&fixture(FixtureId::Prism), 2).unwrap());
        assert!(matches!(
            is_k_extendable(&fixture(FixtureId::C4), 2),
            Err(Error::TooSmall { n: 4, need: 6 })
        ));
    }

    #[test]
    fn brace_examples() {
        assert!(is_brace(&fixture(FixtureId::C4)));
        assert!(is_brace(&fixture(FixtureId::K33)));
        assert!(is_brace(&fixture(FixtureId::Heawood)));
        assert!(is_brace(&fixture(FixtureId::Cube)));
        assert!(!is_brace(&fixture(FixtureId::Fig2b))); // has degree-2 vertices
        assert!(!is_brace(&fixture(FixtureId::K4))); // not bipartite
        assert!(!is_brace(&fixture(FixtureId::Fig5b))); // not even matchable everywhere
    }

    #[test]
    fn konig_partition_properties() {
        for (id, k, size) in
            [(FixtureId::K33, 3, 3), (FixtureId::Heawood, 3, 7), (FixtureId::C4, 2, 2)]
        {
            let g = fixture(id);
            let parts = konig_partition(&g).unwrap();
            assert_eq!(parts.len(), k, "{id}");
            let mut seen = std::collections::BTreeSet::new();
            for p in &parts {
                assert_eq!(p.size(), size, "{id}");
                assert!(p.is_perfect_in(&g));
                for &e in p.edges() {
                    assert!(seen.insert(e), "{id}: edge {e:?} reused");
                }
            }
            assert_eq!(seen.len(), g.m(), "{id}: partition must cover all edges");
        }
        assert!(matches!(konig_partition(&fixture(FixtureId::Prism)), Err(Error::NotBipartite)));
        assert!(matches!(konig_partition(&fixture(FixtureId::Fig2b)), Err(Error::NotRegular)));
    }
}
