//! Pfaffian orientations. An orientation is Pfaffian when every nice cycle
//! is oddly oriented; a nice cycle is an even cycle whose vertex deletion
//! leaves a perfectly matchable graph (equivalently, a cycle alternating
//! with respect to some perfect matching — the per-matching form is kept as
//! a test oracle).
//!
//! The search for a Pfaffian orientation fixes a reference direction on a
//! spanning forest and walks the 2^(m−n+c) switching-class representatives
//! given by the non-forest edges. Switching at a vertex flips exactly two
//! edges of every cycle through it, so Pfaffian-ness is a class property
//! and exhausting the representatives makes a failed search a proof.

use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching;

/// A direction for every edge of a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    host_n: usize,
    host_m: usize,
    /// `flipped[e]` means edge `(u,v)` (with u < v) is directed v → u.
    flipped: Vec<bool>,
}

impl Orientation {
    /// Builds an orientation from one `(tail, head)` pair per host edge.
    pub fn new(g: &Graph, directions: &[(usize, usize)]) -> Result<Orientation> {
        let mut flipped = vec![None; g.m()];
        for &(tail, head) in directions {
            let idx = g
                .edge_index(tail, head)
                .ok_or(Error::EdgeNotInGraph { u: tail, v: head })?;
            if flipped[idx].is_some() {
                return Err(Error::ParallelEdge { u: tail.min(head), v: tail.max(head) });
            }
            flipped[idx] = Some(tail > head);
        }
        let flipped: Option<Vec<bool>> = flipped.into_iter().collect();
        match flipped {
            Some(flipped) => Ok(Orientation { host_n: g.n(), host_m: g.m(), flipped }),
            None => Err(Error::Internal("orientation must direct every host edge")),
        }
    }

    fn from_flips(g: &Graph, flipped: Vec<bool>) -> Orientation {
        Orientation { host_n: g.n(), host_m: g.m(), flipped }
    }

    /// The `(tail, head)` pairs in host edge order.
    pub fn directed_edges(&self, g: &Graph) -> Vec<(usize, usize)> {
        g.edges()
            .iter()
            .zip(&self.flipped)
            .map(|(&(u, v), &f)| if f { (v, u) } else { (u, v) })
            .collect()
    }

    /// True when the edge `{from, to}` is directed from → to.
    pub fn is_forward(&self, g: &Graph, from: usize, to: usize) -> bool {
        let idx = g.edge_index(from, to).expect("edge of host");
        let (u, _) = g.edges()[idx];
        (from == u) != self.flipped[idx]
    }

    /// The orientation with every edge at `v` reversed (a switching).
    pub fn switched(&self, g: &Graph, v: usize) -> Orientation {
        let mut flipped = self.flipped.clone();
        for &w in g.adj(v) {
            let idx = g.edge_index(v, w).expect("edge of host");
            flipped[idx] = !flipped[idx];
        }
        Orientation { host_n: self.host_n, host_m: self.host_m, flipped }
    }
}

/// An even cycle whose deletion leaves a perfectly matchable graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct NiceCycle {
    vertices: Vec<usize>,
}

impl NiceCycle {
    /// Validates the cycle and the matchability of the remainder.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<NiceCycle> {
        if vertices.len() < 4 || vertices.len() % 2 != 0 {
            return Err(Error::Internal("nice cycles have even length at least 4"));
        }
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != vertices.len() {
            return Err(Error::Internal("cycle vertices must be distinct"));
        }
        for i in 0..vertices.len() {
            let (a, b) = (vertices[i], vertices[(i + 1) % vertices.len()]);
            if !g.has_edge(a, b) {
                return Err(Error::EdgeNotInGraph { u: a, v: b });
            }
        }
        if !remainder_matchable(g, &vertices)? {
            return Err(Error::Internal("cycle remainder has no perfect matching"));
        }
        Ok(NiceCycle { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Edge list of the cycle.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.vertices.len())
            .map(|i| {
                let (a, b) = (self.vertices[i], self.vertices[(i + 1) % self.vertices.len()]);
                (a.min(b), a.max(b))
            })
            .collect()
    }
}

fn remainder_matchable(g: &Graph, cycle: &[usize]) -> Result<bool> {
    if cycle.len() == g.n() {
        return Ok(true); // empty remainder, trivially matchable
    }
    let mut keep: Vec<usize> = (0..g.n()).collect();
    keep.retain(|v| !cycle.contains(v));
    let (h, _) = g.induced(&keep)?;
    Ok(matching::perfect_matching_with(&h, &[], &[])?.is_some())
}

/// Enumerates every simple cycle of `g` in canonical form (least vertex
/// first, then towards its smaller cycle-neighbour), calling `emit` for
/// each. `budget` caps the number of search steps.
fn for_each_cycle(g: &Graph, budget: u64, mut emit: impl FnMut(&[usize]) -> Result<()>) -> Result<()> {
    let mut steps = 0u64;
    let mut on_path = vec![false; g.n()];
    let mut path: Vec<usize> = Vec::new();

    fn dfs(
        g: &Graph,
        start: usize,
        on_path: &mut Vec<bool>,
        path: &mut Vec<usize>,
        steps: &mut u64,
        budget: u64,
        emit: &mut impl FnMut(&[usize]) -> Result<()>,
    ) -> Result<()> {
        let v = *path.last().expect("nonempty path");
        for &w in g.adj(v) {
            if w == start && path.len() >= 3 {
                // Canonical direction: second vertex below last vertex.
                if path[1] < path[path.len() - 1] {
                    emit(path)?;
                }
                continue;
            }
            if w <= start || on_path[w] {
                continue;
            }
            *steps += 1;
            if *steps > budget {
                return Err(Error::BudgetExceeded { what: "cycle enumeration", partial: *steps });
            }
            on_path[w] = true;
            path.push(w);
            let r = dfs(g, start, on_path, path, steps, budget, emit);
            path.pop();
            on_path[w] = false;
            r?;
        }
        Ok(())
    }

    for start in 0..g.n() {
        on_path[start] = true;
        path.push(start);
        let r = dfs(g, start, &mut on_path, &mut path, &mut steps, budget, &mut emit);
        path.pop();
        on_path[start] = false;
        r?;
    }
    Ok(())
}

/// All nice cycles, sorted by length then vertex sequence. The host must
/// have a perfect matching.
pub fn nice_cycles(g: &Graph, budget: u64) -> Result<Vec<NiceCycle>> {
    if matching::perfect_matching_with(g, &[], &[])?.is_none() {
        return Err(Error::NoPerfectMatching);
    }
    let mut out: Vec<NiceCycle> = Vec::new();
    for_each_cycle(g, budget, |cycle| {
        if cycle.len() % 2 == 0 && remainder_matchable(g, cycle)? {
            out.push(NiceCycle { vertices: cycle.to_vec() });
        }
        Ok(())
    })?;
    out.sort_by(|a, b| (a.len(), &a.vertices).cmp(&(b.len(), &b.vertices)));
    Ok(out)
}

/// Counts the forward edges of one traversal of the cycle; odd counts are
/// direction-independent because the cycle has even length.
pub fn is_oddly_oriented(g: &Graph, o: &Orientation, c: &NiceCycle) -> bool {
    let vs = c.vertices();
    let forward = (0..vs.len())
        .filter(|&i| o.is_forward(g, vs[i], vs[(i + 1) % vs.len()]))
        .count();
    forward % 2 == 1
}

/// Every nice cycle is oddly oriented.
pub fn is_pfaffian_orientation(g: &Graph, o: &Orientation, budget: u64) -> Result<bool> {
    let cycles = nice_cycles(g, budget)?;
    Ok(cycles.iter().all(|c| is_oddly_oriented(g, o, c)))
}

/// Spanning forest of `g` as edge indices (BFS from each component root).
fn spanning_forest(g: &Graph) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut tree = Vec::new();
    let mut queue = std::collections::VecDeque::new();
    for root in 0..g.n() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for &w in g.adj(v) {
                if !seen[w] {
                    seen[w] = true;
                    tree.push(g.edge_index(v, w).expect("adjacent"));
                    queue.push_back(w);
                }
            }
        }
    }
    tree
}

/// Searches the switching-class representatives for a Pfaffian orientation.
/// `None` is a proof that the graph is not Pfaffian; the search refuses to
/// start if the class count 2^(m−n+components) exceeds the budget exponent.
pub fn find_pfaffian_orientation(g: &Graph, budgets: &Budgets) -> Result<Option<Orientation>> {
    let cycles = nice_cycles(g, budgets.cycles)?;
    let tree = spanning_forest(g);
    let mut is_tree = vec![false; g.m()];
    for &e in &tree {
        is_tree[e] = true;
    }
    let free: Vec<usize> = (0..g.m()).filter(|&e| !is_tree[e]).collect();
    let k = free.len();
    if k as u32 > budgets.orientation_exponent {
        return Err(Error::BudgetExceeded {
            what: "pfaffian orientation switching classes",
            partial: k as u64,
        });
    }
    let mut free_pos = vec![usize::MAX; g.m()];
    for (i, &e) in free.iter().enumerate() {
        free_pos[e] = i;
    }

    // Reference orientation: every edge u -> v with u < v. Under a flip set
    // S of free edges, a cycle's forward parity is its reference parity
    // plus |S ∩ C|.
    let mut parity = Vec::with_capacity(cycles.len());
    let mut cycles_with_free: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (ci, c) in cycles.iter().enumerate() {
        let vs = c.vertices();
        let forward =
            (0..vs.len()).filter(|&i| vs[i] < vs[(i + 1) % vs.len()]).count();
        parity.push((forward % 2) as u8);
        for (a, b) in c.edges() {
            let e = g.edge_index(a, b).expect("cycle edge");
            if free_pos[e] != usize::MAX {
                cycles_with_free[free_pos[e]].push(ci);
            }
        }
    }

    let mut bad = parity.iter().filter(|&&p| p == 0).count();
    if bad == 0 {
        return Ok(Some(Orientation::from_flips(g, vec![false; g.m()])));
    }
    let total: u128 = 1u128 << k;
    let mut s: u128 = 0;
    while s + 1 < total {
        // Advance to s+1, toggling the changed free edges.
        let diff = s ^ (s + 1);
        for (i, list) in cycles_with_free.iter().enumerate() {
            if diff & (1 << i) != 0 {
                for &ci in list {
                    if parity[ci] == 1 {
                        parity[ci] = 0;
                        bad += 1;
                    } else {
                        parity[ci] = 1;
                        bad -= 1;
                    }
                }
            }
        }
        s += 1;
        if bad == 0 {
            let mut flips = vec![false; g.m()];
            for (i, &e) in free.iter().enumerate() {
                flips[e] = s & (1 << i) != 0;
            }
            return Ok(Some(Orientation::from_flips(g, flips)));
        }
    }
    Ok(None)
}

/// Whether some orientation of `g` is Pfaffian.
pub fn is_pfaffian(g: &Graph, budgets: &Budgets) -> Result<bool> {
    Ok(find_pfaffian_orientation(g, budgets)?.is_some())
}

/// Which disjunct of the girth statement a brace satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GirthTheoremBranch {
    NonPfaffian,
    HeawoodException,
    GirthFour,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GirthTheoremVerdict {
    pub pass: bool,
    pub branch: Option<GirthTheoremBranch>,
}

/// Checks, for a brace, that it is non-Pfaffian, or the Heawood graph, or
/// has girth 4. A failing verdict would be a counterexample to that
/// statement.
pub fn check_pfaffian_girth_theorem(g: &Graph, budgets: &Budgets) -> Result<GirthTheoremVerdict> {
    if !matching::is_brace(g) {
        return Err(Error::NotBrace);
    }
    if !is_pfaffian(g, budgets)? {
        return Ok(GirthTheoremVerdict { pass: true, branch: Some(GirthTheoremBranch::NonPfaffian) });
    }
    if crate::iso::are_isomorphic(g, &crate::fixtures::fixture(crate::fixtures::FixtureId::Heawood)) {
        return Ok(GirthTheoremVerdict {
            pass: true,
            branch: Some(GirthTheoremBranch::HeawoodException),
        });
    }
    if g.girth() == Some(4) {
        return Ok(GirthTheoremVerdict { pass: true, branch: Some(GirthTheoremBranch::GirthFour) });
    }
    Ok(GirthTheoremVerdict { pass: false, branch: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fixture, FixtureId};

    const B: u64 = 1 << 22;

    #[test]
    fn c4_has_one_nice_cycle() {
        let c4 = fixture(FixtureId::C4);
        let nc = nice_cycles(&c4, B).unwrap();
        assert_eq!(nc.len(), 1);
        assert_eq!(nc[0].vertices(), &[0, 1, 2, 3]);
    }

    #[test]
    fn k33_nice_cycles_are_all_cycles() {
        // Every 4-cycle leaves an edge, every 6-cycle leaves nothing.
        let k33 = fixture(FixtureId::K33);
        let nc = nice_cycles(&k33, B).unwrap();
        let (fours, sixes): (Vec<_>, Vec<_>) = nc.iter().partition(|c| c.len() == 4);
        assert_eq!(fours.len(), 9);
        assert_eq!(sixes.len(), 6);
    }

    #[test]
    fn odd_orientation_parity() {
        let c4 = fixture(FixtureId::C4);
        let cycle = NiceCycle::new(&c4, vec![0, 1, 2, 3]).unwrap();
        // Three forward edges: odd.
        let o = Orientation::new(&c4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(is_oddly_oriented(&c4, &o, &cycle));
        // Cyclically consistent orientation: 4 forward or 0, even.
        let o = Orientation::new(&c4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!is_oddly_oriented(&c4, &o, &cycle));
        // Alternating orientation: two forward, even.
        let o = Orientation::new(&c4, &[(0, 1), (2, 1), (2, 3), (0, 3)]).unwrap();
        assert!(!is_oddly_oriented(&c4, &o, &cycle));
    }

    #[test]
    fn parity_agrees_for_both_traversal_directions() {
        let cube = fixture(FixtureId::Cube);
        let o = find_pfaffian_orientation(&cube, &Budgets::default()).unwrap().unwrap();
        for c in nice_cycles(&cube, B).unwrap() {
            let mut rev = c.vertices().to_vec();
            rev.reverse();
            rev.rotate_right(1); // keep the least vertex first
            let c_rev = NiceCycle::new(&cube, rev).unwrap();
            assert_eq!(is_oddly_oriented(&cube, &o, &c), is_oddly_oriented(&cube, &o, &c_rev));
        }
    }

    #[test]
    fn pfaffian_fixtures() {
        let budgets = Budgets::default();
        assert!(is_pfaffian(&fixture(FixtureId::C4), &budgets).unwrap());
        assert!(is_pfaffian(&fixture(FixtureId::Cube), &budgets).unwrap());
        assert!(is_pfaffian(&fixture(FixtureId::Heawood), &budgets).unwrap());
        assert!(!is_pfaffian(&fixture(FixtureId::K33), &budgets).unwrap());
    }

    #[test]
    fn found_orientation_passes_the_definition() {
        let budgets = Budgets::default();
        for id in [FixtureId::C4, FixtureId::Cube, FixtureId::Heawood, FixtureId::Prism] {
            let g = fixture(id);
            let o = find_pfaffian_orientation(&g, &budgets).unwrap().unwrap();
            assert!(is_pfaffian_orientation(&g, &o, B).unwrap(), "{id}");
        }
    }

    #[test]
    fn switching_preserves_pfaffian_orientations() {
        let g = fixture(FixtureId::Cube);
        let o = find_pfaffian_orientation(&g, &Budgets::default()).unwrap().unwrap();
        for v in g.vertices() {
            let s = o.switched(&g, v);
            assert!(is_pfaffian_orientation(&g, &s, B).unwrap());
        }
    }

    #[test]
    fn orientation_construction_is_strict() {
        let c4 = fixture(FixtureId::C4);
        assert!(matches!(
            Orientation::new(&c4, &[(0, 1), (1, 2), (2, 3)]),
            Err(Error::Internal(_))
        ));
        assert!(matches!(
            Orientation::new(&c4, &[(0, 1), (1, 0), (2, 3), (0, 3)]),
            Err(Error::ParallelEdge { u: 0, v: 1 })
        ));
        assert!(matches!(
            Orientation::new(&c4, &[(0, 2), (1, 2), (2, 3), (0, 3)]),
            Err(Error::EdgeNotInGraph { u: 0, v: 2 })
        ));
    }

    #[test]
    fn girth_statement_on_fixtures() {
        let budgets = Budgets::default();
        let heawood = check_pfaffian_girth_theorem(&fixture(FixtureId::Heawood), &budgets).unwrap();
        assert!(heawood.pass);
        assert_eq!(heawood.branch, Some(GirthTheoremBranch::HeawoodException));

        let cube = check_pfaffian_girth_theorem(&fixture(FixtureId::Cube), &budgets).unwrap();
        assert!(cube.pass);
        assert_eq!(cube.branch, Some(GirthTheoremBranch::GirthFour));

        let k33 = check_pfaffian_girth_theorem(&fixture(FixtureId::K33), &budgets).unwrap();
        assert!(k33.pass);
        assert_eq!(k33.branch, Some(GirthTheoremBranch::NonPfaffian));

        assert!(matches!(
            check_pfaffian_girth_theorem(&fixture(FixtureId::Prism), &budgets),
            Err(Error::NotBrace)
        ));
    }

    #[test]
    fn orientation_exponent_budget() {
        let mut budgets = Budgets::default();
        budgets.orientation_exponent = 2;
        // Heawood has 21 - 14 + 1 = 8 independent cycles.
        assert!(matches!(
            find_pfaffian_orientation(&fixture(FixtureId::Heawood), &budgets),
            Err(Error::BudgetExceeded { partial: 8, .. })
        ));
    }
}
