//! Edge cuts, tightness, tight cut contractions, and the decomposition of a
//! matching covered graph into bricks and braces.
//!
//! A cut is *quasi-tight* when every perfect matching of the host meets it
//! exactly once (vacuously so when there is no perfect matching), and
//! *tight* when additionally the host is matching covered. For 3-connected
//! cubic bipartite hosts the non-trivial tight cuts are exactly the induced
//! 3-edge matchings whose removal disconnects the graph, which gives the
//! decomposition a fast path; other hosts fall back to a bounded subset
//! search that errs loudly instead of guessing.

use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching;

/// A vertex subset X together with the derived edge set δ(X).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCut {
    host_n: usize,
    x: Vec<usize>,
    delta: Vec<(usize, usize)>,
    trivial: bool,
}

impl EdgeCut {
    pub fn x(&self) -> &[usize] {
        &self.x
    }

    pub fn delta(&self) -> &[(usize, usize)] {
        &self.delta
    }

    pub fn is_trivial(&self) -> bool {
        self.trivial
    }

    pub fn host_n(&self) -> usize {
        self.host_n
    }

    /// The complement side, sorted.
    pub fn complement(&self) -> Vec<usize> {
        let mut inside = vec![false; self.host_n];
        for &v in &self.x {
            inside[v] = true;
        }
        (0..self.host_n).filter(|&v| !inside[v]).collect()
    }
}

/// Builds the cut record around a proper, non-empty vertex subset.
pub fn cut_around(g: &Graph, x: &[usize]) -> Result<EdgeCut> {
    let mut xs: Vec<usize> = x.to_vec();
    xs.sort_unstable();
    xs.dedup();
    if xs.is_empty() || xs.len() >= g.n() {
        return Err(Error::EmptyOrFullCut);
    }
    if let Some(&v) = xs.last() {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { v, n: g.n() });
        }
    }
    let mut inside = vec![false; g.n()];
    for &v in &xs {
        inside[v] = true;
    }
    let delta: Vec<(usize, usize)> =
        g.edges().iter().copied().filter(|&(u, v)| inside[u] != inside[v]).collect();
    let trivial = xs.len() == 1 || xs.len() == g.n() - 1;
    Ok(EdgeCut { host_n: g.n(), x: xs, delta, trivial })
}

fn check_host(g: &Graph, c: &EdgeCut) -> Result<()> {
    if c.host_n != g.n() {
        return Err(Error::Internal("cut does not belong to this host graph"));
    }
    Ok(())
}

fn delta_mask(g: &Graph, c: &EdgeCut) -> Result<u128> {
    if g.m() > 128 {
        return Err(Error::TooManyEdges { m: g.m(), max: 128 });
    }
    let mut mask = 0u128;
    for &(u, v) in &c.delta {
        mask |= 1 << g.edge_index(u, v).expect("delta edges come from the host");
    }
    Ok(mask)
}

fn matching_mask(g: &Graph, edges: &[(usize, usize)]) -> u128 {
    let mut mask = 0u128;
    for &(u, v) in edges {
        mask |= 1 << g.edge_index(u, v).expect("matching edges come from the host");
    }
    mask
}

/// Every perfect matching meets δ(X) exactly once; vacuously true when the
/// host has no perfect matching at all.
pub fn is_quasi_tight(g: &Graph, c: &EdgeCut, budget: u64) -> Result<bool> {
    check_host(g, c)?;
    let dm = delta_mask(g, c)?;
    let mut ok = true;
    matching::visit_perfect_matchings(g, budget, |m| {
        if (matching_mask(g, m) & dm).count_ones() != 1 {
            ok = false;
            return false;
        }
        true
    })?;
    Ok(ok)
}

/// Tightness is quasi-tightness on a matching covered host.
pub fn is_tight(g: &Graph, c: &EdgeCut, budget: u64) -> Result<bool> {
    if !matching::is_matching_covered(g) {
        return Err(Error::NotMatchingCovered);
    }
    is_quasi_tight(g, c, budget)
}

/// No two endpoints of distinct edges of `edges` are adjacent in `g`, and
/// the edges themselves are pairwise disjoint.
pub fn is_induced_matching(g: &Graph, edges: &[(usize, usize)]) -> bool {
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                return false;
            }
            if g.has_edge(a, c) || g.has_edge(a, d) || g.has_edge(b, c) || g.has_edge(b, d) {
                return false;
            }
        }
    }
    true
}

/// First non-trivial tight cut in the documented search order; `Ok(None)`
/// only when the search space was covered completely.
pub fn find_nontrivial_tight_cut(g: &Graph, budgets: &Budgets) -> Result<Option<EdgeCut>> {
    find_nontrivial_tight_cut_with(g, budgets, false)
}

/// As `find_nontrivial_tight_cut`, but `pick_last` selects the final tight
/// cut of the same enumeration instead of the first. Exposed so the
/// decomposition's order-independence can be demonstrated.
pub fn find_nontrivial_tight_cut_with(
    g: &Graph,
    budgets: &Budgets,
    pick_last: bool,
) -> Result<Option<EdgeCut>> {
    if !matching::is_matching_covered(g) {
        return Err(Error::NotMatchingCovered);
    }
    if g.m() > 128 {
        return Err(Error::TooManyEdges { m: g.m(), max: 128 });
    }
    let pms = matching::enumerate_perfect_matchings(g, budgets.matchings)?;
    let pm_masks: Vec<u128> = pms.iter().map(|m| matching_mask(g, m.edges())).collect();
    let tight = |c: &EdgeCut| -> bool {
        let dm = delta_mask(g, c).expect("edge count checked");
        pm_masks.iter().all(|&m| (m & dm).count_ones() == 1)
    };

    if g.is_cubic() && g.bipartition().is_some() && g.is_k_connected(3) {
        // Non-trivial tight cuts of such graphs are induced 3-edge matchings
        // whose removal disconnects; scan those in ascending edge order.
        let mut found: Option<EdgeCut> = None;
        let m = g.m();
        for i in 0..m {
            for j in i + 1..m {
                for k in j + 1..m {
                    let f = [g.edges()[i], g.edges()[j], g.edges()[k]];
                    if !is_induced_matching(g, &f) {
                        continue;
                    }
                    let h = g.without_edges(&f).expect("edges from host");
                    let comp = h.components();
                    if comp.iter().max() != Some(&1) {
                        continue; // removal did not split into exactly two parts
                    }
                    if f.iter().any(|&(u, v)| comp[u] == comp[v]) {
                        continue;
                    }
                    let side0: Vec<usize> = (0..g.n()).filter(|&v| comp[v] == comp[0]).collect();
                    let cut = cut_around(g, &side0).expect("proper subset");
                    debug_assert!(!cut.is_trivial());
                    if tight(&cut) {
                        if !pick_last {
                            return Ok(Some(cut));
                        }
                        found = Some(cut);
                    }
                }
            }
        }
        return Ok(found);
    }

    // General hosts: subsets containing vertex 0, ascending by size.
    if g.n() > 64 {
        return Err(Error::TooManyVertices { n: g.n(), max: 64 });
    }
    let cap = budgets.subset_size.min(g.n().saturating_sub(2));
    let complete = cap >= g.n().saturating_sub(2);
    let mut found: Option<EdgeCut> = None;
    for size in 2..=cap {
        let mut chosen: Vec<usize> = Vec::with_capacity(size - 1);
        let mut x: Vec<usize> = Vec::with_capacity(size);
        let mut stop = false;
        combos(g.n(), 1, size - 1, &mut chosen, &mut |rest| {
            x.clear();
            x.push(0);
            x.extend_from_slice(rest);
            let cut = cut_around(g, &x).expect("proper subset");
            if !cut.is_trivial() && tight(&cut) {
                found = Some(cut);
                if !pick_last {
                    stop = true;
                    return false;
                }
            }
            true
        });
        if stop {
            return Ok(found);
        }
    }
    if found.is_none() && !complete {
        return Err(Error::BudgetExceeded { what: "tight cut subset search", partial: cap as u64 });
    }
    Ok(found)
}

/// Lexicographic size-`left` combinations from `from..n`; visitor returns
/// false to stop. Returns false when stopped.
fn combos(
    n: usize,
    from: usize,
    left: usize,
    chosen: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if left == 0 {
        return visit(chosen);
    }
    for v in from..n {
        if n - v < left {
            break;
        }
        chosen.push(v);
        let go_on = combos(n, v + 1, left - 1, chosen, visit);
        chosen.pop();
        if !go_on {
            return false;
        }
    }
    true
}

/// One side of a tight cut contraction.
#[derive(Debug, Clone)]
pub struct Contraction {
    pub graph: Graph,
    /// Index of the new vertex standing for the contracted side.
    pub contraction_vertex: usize,
    /// For each vertex of `graph`, the host vertex it came from; `None` for
    /// the contraction vertex.
    pub vertex_map: Vec<Option<usize>>,
}

fn contract_side(g: &Graph, keep: &[usize]) -> Contraction {
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in keep.iter().enumerate() {
        pos[v] = i;
    }
    let c = keep.len();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for &(u, v) in g.edges() {
        match (pos[u], pos[v]) {
            (usize::MAX, usize::MAX) => {} // loop at the contraction vertex, dropped
            (usize::MAX, b) => edges.push((b.min(c), b.max(c))),
            (a, usize::MAX) => edges.push((a.min(c), a.max(c))),
            (a, b) => edges.push((a.min(b), a.max(b))),
        }
    }
    edges.sort_unstable();
    edges.dedup(); // parallel edges into the contraction vertex collapse
    let graph = Graph::from_edges(c + 1, edges).expect("contraction yields a simple graph");
    let mut vertex_map: Vec<Option<usize>> = keep.iter().copied().map(Some).collect();
    vertex_map.push(None);
    Contraction { graph, contraction_vertex: c, vertex_map }
}

/// The two tight cut contractions of a non-trivial tight cut: first the one
/// keeping X (complement contracted into a new last vertex), then the one
/// keeping the complement.
pub fn tight_cut_contractions(
    g: &Graph,
    c: &EdgeCut,
    budget: u64,
) -> Result<(Contraction, Contraction)> {
    check_host(g, c)?;
    if c.is_trivial() {
        return Err(Error::TrivialCut);
    }
    if !is_tight(g, c, budget)? {
        return Err(Error::CutNotTight);
    }
    Ok((contract_side(g, c.x()), contract_side(g, &c.complement())))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PieceKind {
    Brick,
    Brace,
}

impl std::fmt::Display for PieceKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PieceKind::Brick => "brick",
            PieceKind::Brace => "brace",
        })
    }
}

#[derive(Debug, Clone)]
pub struct Piece {
    pub graph: Graph,
    pub kind: PieceKind,
}

/// One decomposition step, recorded against the intermediate host it was
/// found in (identified by its graph6 string).
#[derive(Debug, Clone)]
pub struct CutTraceEntry {
    pub host_graph6: String,
    pub x: Vec<usize>,
    pub delta: Vec<(usize, usize)>,
}

#[derive(Debug, Clone)]
pub struct DecompositionResult {
    pub pieces: Vec<Piece>,
    pub cut_trace: Vec<CutTraceEntry>,
}

/// Repeats tight cut contraction until no piece has a non-trivial tight
/// cut, labelling each final piece a brick or a brace.
pub fn decompose(g: &Graph, budgets: &Budgets) -> Result<DecompositionResult> {
    decompose_with(g, budgets, false)
}

/// Decomposition with the alternative cut-selection order (last tight cut
/// of the enumeration instead of the first).
pub fn decompose_with(
    g: &Graph,
    budgets: &Budgets,
    pick_last: bool,
) -> Result<DecompositionResult> {
    let mut pieces = Vec::new();
    let mut trace = Vec::new();
    let mut work = vec![g.clone()];
    while let Some(h) = work.pop() {
        match find_nontrivial_tight_cut_with(&h, budgets, pick_last)? {
            None => {
                let kind =
                    if h.bipartition().is_some() { PieceKind::Brace } else { PieceKind::Brick };
                pieces.push(Piece { graph: h, kind });
            }
            Some(cut) => {
                trace.push(CutTraceEntry {
                    host_graph6: crate::graph6::encode(&h)?,
                    x: cut.x().to_vec(),
                    delta: cut.delta().to_vec(),
                });
                let (a, b) = tight_cut_contractions(&h, &cut, budgets.matchings)?;
                // X side is processed first, complement side after.
                work.push(b.graph);
                work.push(a.graph);
            }
        }
    }
    Ok(DecompositionResult { pieces, cut_trace: trace })
}

/// The balance counts of a cut satisfying the one-sided colour hypothesis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CutBalance {
    pub x_in_a: usize,
    pub x_in_b: usize,
    pub complement_in_a: usize,
    pub complement_in_b: usize,
    pub matchings: u64,
}

/// Checks the cut balance statement on a bipartite host: if all X-side
/// endpoints of δ(X) lie in one colour class A and some perfect matching
/// meets δ(X) exactly once, then |X∩A| − |X∩B| = 1 = |X̄∩B| − |X̄∩A| and
/// every perfect matching meets δ(X) exactly once. Hypothesis failures are
/// named individually; a conclusion failure (a counterexample to the
/// statement) is reported as `BalanceViolated`.
pub fn verify_cut_balance(g: &Graph, c: &EdgeCut, budget: u64) -> Result<CutBalance> {
    check_host(g, c)?;
    let bip = g.bipartition().ok_or(Error::NotBipartite)?;
    if c.delta().is_empty() {
        return Err(Error::EmptyCut);
    }
    let mut in_x = vec![false; g.n()];
    for &v in c.x() {
        in_x[v] = true;
    }
    // The colour class holding every X-side endpoint of the cut.
    let mut side_class: Option<bool> = None;
    for &(u, v) in c.delta() {
        let inside = if in_x[u] { u } else { v };
        let cls = bip.class_of(inside).expect("vertex of host");
        match side_class {
            None => side_class = Some(cls),
            Some(c0) if c0 != cls => return Err(Error::MixedCutEndpoints),
            _ => {}
        }
    }
    let a_class = side_class.expect("delta nonempty");

    let dm = delta_mask(g, c)?;
    let mut meets_once = 0u64;
    let mut total = 0u64;
    matching::visit_perfect_matchings(g, budget, |m| {
        total += 1;
        if (matching_mask(g, m) & dm).count_ones() == 1 {
            meets_once += 1;
        }
        true
    })?;
    if meets_once == 0 {
        return Err(Error::NoSingleMeetingMatching);
    }

    let in_a = |v: usize| bip.class_of(v).expect("vertex of host") == a_class;
    let x_in_a = c.x().iter().filter(|&&v| in_a(v)).count();
    let x_in_b = c.x().len() - x_in_a;
    let comp = c.complement();
    let complement_in_a = comp.iter().filter(|&&v| in_a(v)).count();
    let complement_in_b = comp.len() - complement_in_a;

    let x_diff = x_in_a as i64 - x_in_b as i64;
    let co_diff = complement_in_b as i64 - complement_in_a as i64;
    if x_diff != 1 || co_diff != 1 || meets_once != total {
        return Err(Error::BalanceViolated { x_diff, co_diff, meets_once, matchings: total });
    }
    Ok(CutBalance { x_in_a, x_in_b, complement_in_a, complement_in_b, matchings: total })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fixture, FixtureId};

    const B: u64 = 1 << 20;

    fn budgets() -> Budgets {
        Budgets::default()
    }

    fn c6() -> Graph {
        Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap()
    }

    #[test]
    fn cut_around_examples() {
        let k33 = fixture(FixtureId::K33);
        let c = cut_around(&k33, &[0]).unwrap();
        assert_eq!(c.delta().len(), 3);
        assert!(c.is_trivial());

        let prism = fixture(FixtureId::Prism);
        let c = cut_around(&prism, &[0, 1, 2]).unwrap();
        assert_eq!(c.delta(), &[(0, 4), (1, 5), (2, 3)]);
        assert!(!c.is_trivial());

        let c4 = fixture(FixtureId::C4);
        assert_eq!(cut_around(&c4, &[0, 1]).unwrap().delta().len(), 2);

        assert!(matches!(cut_around(&c4, &[]), Err(Error::EmptyOrFullCut)));
        assert!(matches!(cut_around(&c4, &[0, 1, 2, 3]), Err(Error::EmptyOrFullCut)));
    }

    #[test]
    fn quasi_tightness() {
        // No perfect matching at all: every cut is quasi-tight.
        let fig7b = fixture(FixtureId::Fig7b);
        let principal = cut_around(&fig7b, &(0..15).collect::<Vec<_>>()).unwrap();
        assert_eq!(principal.delta(), &[(12, 15), (13, 17), (14, 16)]);
        assert!(is_quasi_tight(&fig7b, &principal, B).unwrap());

        // The prism's rung cut is met three times by the all-rungs matching.
        let prism = fixture(FixtureId::Prism);
        let rungs = cut_around(&prism, &[0, 1, 2]).unwrap();
        assert!(!is_quasi_tight(&prism, &rungs, B).unwrap());

        // Odd order: no perfect matchings, vacuously quasi-tight.
        let fig5a = fixture(FixtureId::Fig5a);
        let any = cut_around(&fig5a, &[0, 1]).unwrap();
        assert!(is_quasi_tight(&fig5a, &any, B).unwrap());
    }

    #[test]
    fn tightness_examples() {
        let k33 = fixture(FixtureId::K33);
        let trivial = cut_around(&k33, &[4]).unwrap();
        assert!(is_tight(&k33, &trivial, B).unwrap());

        let prism = fixture(FixtureId::Prism);
        let rungs = cut_around(&prism, &[0, 1, 2]).unwrap();
        assert!(!is_tight(&prism, &rungs, B).unwrap());

        let fig7b = fixture(FixtureId::Fig7b);
        let c = cut_around(&fig7b, &[0]).unwrap();
        assert!(matches!(is_tight(&fig7b, &c, B), Err(Error::NotMatchingCovered)));
    }

    #[test]
    fn braces_and_bricks_have_no_nontrivial_tight_cut() {
        assert!(find_nontrivial_tight_cut(&fixture(FixtureId::K33), &budgets()).unwrap().is_none());
        assert!(find_nontrivial_tight_cut(&fixture(FixtureId::Heawood), &budgets())
            .unwrap()
            .is_none());
        assert!(find_nontrivial_tight_cut(&fixture(FixtureId::Prism), &budgets())
            .unwrap()
            .is_none());
        assert!(find_nontrivial_tight_cut(&fixture(FixtureId::C4), &budgets()).unwrap().is_none());
    }

    #[test]
    fn hexagon_decomposes_into_two_quadrilaterals() {
        let g = c6();
        let cut = find_nontrivial_tight_cut(&g, &budgets()).unwrap().unwrap();
        assert_eq!(cut.x(), &[0, 1, 2]);
        let (a, b) = tight_cut_contractions(&g, &cut, B).unwrap();
        for side in [&a, &b] {
            assert_eq!(side.graph.n(), 4);
            assert_eq!(side.graph.m(), 4);
            assert_eq!(side.contraction_vertex, 3);
            assert!(side.graph.vertices().all(|v| side.graph.degree(v) == 2));
        }
        assert_eq!(a.vertex_map, vec![Some(0), Some(1), Some(2), None]);

        let d = decompose(&g, &budgets()).unwrap();
        assert_eq!(d.pieces.len(), 2);
        assert!(d.pieces.iter().all(|p| p.kind == PieceKind::Brace));
        assert_eq!(d.cut_trace.len(), 1);
    }

    #[test]
    fn decompose_irreducible_fixtures() {
        let d = decompose(&fixture(FixtureId::K33), &budgets()).unwrap();
        assert_eq!(d.pieces.len(), 1);
        assert_eq!(d.pieces[0].kind, PieceKind::Brace);
        assert!(d.cut_trace.is_empty());

        let d = decompose(&fixture(FixtureId::Prism), &budgets()).unwrap();
        assert_eq!(d.pieces.len(), 1);
        assert_eq!(d.pieces[0].kind, PieceKind::Brick);
    }

    #[test]
    fn contraction_preconditions() {
        let k33 = fixture(FixtureId::K33);
        let trivial = cut_around(&k33, &[0]).unwrap();
        assert!(matches!(tight_cut_contractions(&k33, &trivial, B), Err(Error::TrivialCut)));

        let prism = fixture(FixtureId::Prism);
        let rungs = cut_around(&prism, &[0, 1, 2]).unwrap();
        assert!(matches!(tight_cut_contractions(&prism, &rungs, B), Err(Error::CutNotTight)));
    }

    #[test]
    fn cut_balance_on_c4_and_hypothesis_rejection() {
        let c4 = fixture(FixtureId::C4);
        let c = cut_around(&c4, &[0]).unwrap();
        let bal = verify_cut_balance(&c4, &c, B).unwrap();
        assert_eq!((bal.x_in_a, bal.x_in_b), (1, 0));
        assert_eq!((bal.complement_in_b, bal.complement_in_a), (2, 1));
        assert_eq!(bal.matchings, 2);

        // Mixed-colour endpoints on the X side are a named error.
        let g = c6();
        let mixed = cut_around(&g, &[0, 1]).unwrap();
        assert!(matches!(verify_cut_balance(&g, &mixed, B), Err(Error::MixedCutEndpoints)));

        let prism = fixture(FixtureId::Prism);
        let c = cut_around(&prism, &[0]).unwrap();
        assert!(matches!(verify_cut_balance(&prism, &c, B), Err(Error::NotBipartite)));
    }
}
