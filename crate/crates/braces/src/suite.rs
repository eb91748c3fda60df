//! The statement verifier: runs every structural statement the toolkit is
//! built around against the bundled fixtures and constructions, one entry
//! per statement, and reports PASS / FAIL / INCONCLUSIVE. A budget
//! exhaustion is never a PASS.
//!
//! The suite is driven by a configurable fixture set and an expectation
//! table so tests can inject faults (a perturbed fixture, a mislabelled
//! expectation) and watch the right entries fail.

use std::collections::BTreeMap;

use crate::budget::Budgets;
use crate::construct::{self, StarProduct, TrisumSpec};
use crate::cuts;
use crate::error::Result;
use crate::factors;
use crate::fixtures::{fixture, FixtureId, ALL_FIXTURES};
use crate::graph::Graph;
use crate::iso::are_isomorphic;
use crate::matching;
use crate::pfaffian;
use crate::planar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteStatus {
    Pass,
    Fail,
    Inconclusive,
}

impl std::fmt::Display for SuiteStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SuiteStatus::Pass => "PASS",
            SuiteStatus::Fail => "FAIL",
            SuiteStatus::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Debug, Clone)]
pub struct SuiteEntry {
    pub id: &'static str,
    pub title: &'static str,
    pub status: SuiteStatus,
    pub evidence: String,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub entries: Vec<SuiteEntry>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.status == SuiteStatus::Pass)
    }

    pub fn any_inconclusive(&self) -> bool {
        self.entries.iter().any(|e| e.status == SuiteStatus::Inconclusive)
    }

    pub fn entry(&self, id: &str) -> Option<&SuiteEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&format!("{:12} {:32} {}\n", e.status.to_string(), e.id, e.evidence));
        }
        let pass = self.entries.iter().filter(|e| e.status == SuiteStatus::Pass).count();
        out.push_str(&format!("{} of {} entries pass\n", pass, self.entries.len()));
        out
    }
}

/// The graphs the suite runs on, replaceable for fault injection.
#[derive(Debug, Clone)]
pub struct FixtureSet {
    map: BTreeMap<FixtureId, Graph>,
}

impl Default for FixtureSet {
    fn default() -> Self {
        FixtureSet { map: ALL_FIXTURES.iter().map(|&id| (id, fixture(id))).collect() }
    }
}

impl FixtureSet {
    pub fn get(&self, id: FixtureId) -> &Graph {
        &self.map[&id]
    }

    pub fn replace(&mut self, id: FixtureId, g: Graph) {
        self.map.insert(id, g);
    }
}

/// Expected fixture labels the suite checks computed values against.
#[derive(Debug, Clone)]
pub struct Expectations {
    pub two_factor_hamiltonian: BTreeMap<FixtureId, bool>,
    pub has_two_factor: BTreeMap<FixtureId, bool>,
}

impl Default for Expectations {
    fn default() -> Self {
        use FixtureId::*;
        let tfh = [
            (C4, true),
            (K4, true),
            (K4minus, true),
            (K33, true),
            (Cube, false),
            (Prism, false),
            (Heawood, true),
            (Fig2b, true),
            (Fig2c, true),  // vacuously: no 2-factor
            (Fig4a, true),  // vacuously
            (Fig4b, true),  // vacuously
            (Fig5a, true),  // vacuously
            (Fig5b, false),
            (Fig6a, false),
            (Fig6b, true),
            (Fig7a, true),  // vacuously
            (Fig7b, true),  // vacuously
        ];
        let has = [
            (C4, true),
            (K4, true),
            (K4minus, true),
            (K33, true),
            (Cube, true),
            (Prism, true),
            (Heawood, true),
            (Fig2b, true),
            (Fig2c, false),
            (Fig4a, false),
            (Fig4b, false),
            (Fig5a, false),
            (Fig5b, true),
            (Fig6a, true),
            (Fig6b, true),
            (Fig7a, false),
            (Fig7b, false),
        ];
        Expectations {
            two_factor_hamiltonian: tfh.into_iter().collect(),
            has_two_factor: has.into_iter().collect(),
        }
    }
}

impl Expectations {
    pub fn set_two_factor_hamiltonian(&mut self, id: FixtureId, value: bool) {
        self.two_factor_hamiltonian.insert(id, value);
    }
}

#[derive(Debug, Clone, Default)]
pub struct SuiteConfig {
    pub fixtures: FixtureSet,
    pub expect: Expectations,
    pub budgets: Budgets,
}

/// Runs the whole suite with the default configuration.
pub fn paper_suite() -> SuiteReport {
    run_paper_suite(&SuiteConfig::default())
}

fn entry(
    id: &'static str,
    title: &'static str,
    run: impl FnOnce() -> Result<(bool, String)>,
) -> SuiteEntry {
    match run() {
        Ok((true, evidence)) => SuiteEntry { id, title, status: SuiteStatus::Pass, evidence },
        Ok((false, evidence)) => SuiteEntry { id, title, status: SuiteStatus::Fail, evidence },
        Err(e) if e.is_budget() => SuiteEntry {
            id,
            title,
            status: SuiteStatus::Inconclusive,
            evidence: format!("budget exhausted: {e}"),
        },
        Err(e) => SuiteEntry {
            id,
            title,
            status: SuiteStatus::Fail,
            evidence: format!("error: {e}"),
        },
    }
}

struct Ctx<'a> {
    cfg: &'a SuiteConfig,
}

impl<'a> Ctx<'a> {
    fn g(&self, id: FixtureId) -> &Graph {
        self.cfg.fixtures.get(id)
    }

    fn budgets(&self) -> &Budgets {
        &self.cfg.budgets
    }

    fn tfh(&self, g: &Graph) -> Result<bool> {
        Ok(factors::is_two_factor_hamiltonian(g, self.budgets().two_factors)?.holds)
    }

    fn expect_tfh(&self, id: FixtureId) -> bool {
        self.cfg.expect.two_factor_hamiltonian[&id]
    }

    fn star(&self, a: FixtureId, b: FixtureId) -> Result<StarProduct> {
        construct::star_product(self.g(a), 0, self.g(b), 0, None)
    }

    /// Whether `product` is some star product of the two factors, searching
    /// attachment vertices and pairings exhaustively.
    fn is_star_product_of(&self, product: &Graph, a: &Graph, b: &Graph) -> Result<bool> {
        if product.n() != a.n() + b.n() - 2 {
            return Ok(false);
        }
        let deg3 = |g: &Graph| g.vertices().filter(|&v| g.degree(v) == 3).collect::<Vec<_>>();
        const PERMS: [[usize; 3]; 6] =
            [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        for &va in &deg3(a) {
            for &vb in &deg3(b) {
                let na = a.adj(va).to_vec();
                let nb = b.adj(vb).to_vec();
                for perm in PERMS {
                    let pairing: Vec<(usize, usize)> =
                        (0..3).map(|i| (na[i], nb[perm[i]])).collect();
                    let sp = construct::star_product(a, va, b, vb, Some(&pairing))?;
                    if are_isomorphic(&sp.graph, product) {
                        return Ok(true);
                    }
                }
            }
        }
        Ok(false)
    }
}

/// Verifies a claimed subdivision witness: nine internally disjoint paths
/// joining the two branch triples, certifying a topological K33 and hence
/// non-planarity.
fn verify_k33_subdivision(
    g: &Graph,
    side_a: [usize; 3],
    side_b: [usize; 3],
    paths: &[Vec<usize>],
) -> bool {
    if paths.len() != 9 {
        return false;
    }
    let mut expected: Vec<(usize, usize)> = Vec::new();
    for &b in &side_b {
        for &a in &side_a {
            expected.push((b, a));
        }
    }
    let mut used_interior: Vec<usize> = Vec::new();
    for (p, &(from, to)) in paths.iter().zip(&expected) {
        if p.len() < 2 || p[0] != from || *p.last().unwrap() != to {
            return false;
        }
        for w in p.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return false;
            }
        }
        for &v in &p[1..p.len() - 1] {
            if side_a.contains(&v) || side_b.contains(&v) {
                return false;
            }
            used_interior.push(v);
        }
    }
    let before = used_interior.len();
    used_interior.sort_unstable();
    used_interior.dedup();
    before == used_interior.len()
}

/// Trisum of three cubes over a shared quadrilateral face, the suite's
/// non-planar Pfaffian brace instance.
pub fn cube_trisum() -> Graph {
    let cube = fixture(FixtureId::Cube);
    construct::trisum(&TrisumSpec {
        pieces: [cube.clone(), cube.clone(), cube],
        cycles: [[0, 1, 2, 3]; 3],
        delete: vec![],
    })
    .expect("three cubes glue over their outer face")
}

pub fn run_paper_suite(cfg: &SuiteConfig) -> SuiteReport {
    let ctx = Ctx { cfg };
    let mut entries = Vec::new();

    entries.push(entry("fixture-sanity", "fixture orders, sizes, girths", || {
        let expected = [
            (FixtureId::C4, 4, 4),
            (FixtureId::K4, 4, 6),
            (FixtureId::K4minus, 4, 5),
            (FixtureId::K33, 6, 9),
            (FixtureId::Cube, 8, 12),
            (FixtureId::Prism, 6, 9),
            (FixtureId::Heawood, 14, 21),
            (FixtureId::Fig2b, 6, 7),
            (FixtureId::Fig2c, 6, 7),
            (FixtureId::Fig4a, 16, 24),
            (FixtureId::Fig4b, 18, 27),
            (FixtureId::Fig5a, 7, 10),
            (FixtureId::Fig5b, 12, 17),
            (FixtureId::Fig6a, 8, 10),
            (FixtureId::Fig6b, 14, 17),
            (FixtureId::Fig7a, 16, 24),
            (FixtureId::Fig7b, 18, 27),
        ];
        let mut bad = Vec::new();
        for (id, n, m) in expected {
            let g = ctx.g(id);
            if (g.n(), g.m()) != (n, m) {
                bad.push(format!("{id}: ({}, {}) != ({n}, {m})", g.n(), g.m()));
            }
        }
        for (id, girth) in [(FixtureId::K33, 4), (FixtureId::Heawood, 6), (FixtureId::Cube, 4)] {
            let got = ctx.g(id).girth();
            if got != Some(girth) {
                bad.push(format!("girth({id}) = {got:?}, want {girth}"));
            }
        }
        for id in [FixtureId::K4, FixtureId::K33, FixtureId::Cube, FixtureId::Prism, FixtureId::Heawood, FixtureId::Fig7a, FixtureId::Fig7b] {
            if !ctx.g(id).is_cubic() {
                bad.push(format!("{id} is not cubic"));
            }
        }
        if bad.is_empty() {
            Ok((true, "17 fixtures match their drawings; girths 4/6/4".into()))
        } else {
            Ok((false, bad.join("; ")))
        }
    }));

    entries.push(entry("thm-2.2-konig", "regular bipartite edge partition", || {
        let mut ev = Vec::new();
        for id in [FixtureId::K33, FixtureId::Heawood, FixtureId::Cube, FixtureId::C4] {
            let g = ctx.g(id);
            let parts = matching::konig_partition(g)?;
            let k = g.regularity().unwrap_or(0);
            let mut seen = std::collections::BTreeSet::new();
            let ok = parts.len() == k
                && parts.iter().all(|p| p.is_perfect_in(g))
                && parts.iter().flat_map(|p| p.edges()).all(|&e| seen.insert(e))
                && seen.len() == g.m();
            if !ok {
                return Ok((false, format!("{id}: partition invalid")));
            }
            ev.push(format!("{id}: {k} matchings"));
        }
        Ok((true, ev.join(", ")))
    }));

    entries.push(entry("lemma-2.1-three-connected", "2FH cubic bipartite implies 3-connected", || {
        let k33 = ctx.g(FixtureId::K33);
        let heawood = ctx.g(FixtureId::Heawood);
        let mut hosts: Vec<(String, Graph)> = vec![
            ("K33".into(), k33.clone()),
            ("Heawood".into(), heawood.clone()),
            ("K33*K33".into(), ctx.star(FixtureId::K33, FixtureId::K33)?.graph),
            ("K33*Heawood".into(), ctx.star(FixtureId::K33, FixtureId::Heawood)?.graph),
        ];
        let mut ev = Vec::new();
        for (name, g) in hosts.drain(..) {
            if !(g.is_cubic() && g.bipartition().is_some()) {
                return Ok((false, format!("{name}: not cubic bipartite")));
            }
            if ctx.tfh(&g)? && !g.is_k_connected(3) {
                return Ok((false, format!("{name}: 2FH but not 3-connected")));
            }
            ev.push(name);
        }
        Ok((true, format!("checked on {}", ev.join(", "))))
    }));

    entries.push(entry("lemma-2.4-tight-cut-shape", "tight iff induced 3-matching (exhaustive)", || {
        let products = [
            ("K33*K33", ctx.star(FixtureId::K33, FixtureId::K33)?.graph),
            ("K33*Heawood", ctx.star(FixtureId::K33, FixtureId::Heawood)?.graph),
        ];
        let hosts: Vec<(&str, &Graph)> = vec![
            ("K33", ctx.g(FixtureId::K33)),
            ("Heawood", ctx.g(FixtureId::Heawood)),
            ("K33*K33", &products[0].1),
            ("K33*Heawood", &products[1].1),
        ];
        let mut ev = Vec::new();
        for (name, g) in hosts {
            if !(g.is_cubic() && g.bipartition().is_some() && g.is_k_connected(3)) {
                return Ok((false, format!("{name}: hypothesis violated")));
            }
            let pms = matching::enumerate_perfect_matchings(g, ctx.budgets().matchings)?;
            let mut checked = 0u64;
            let mut tight_count = 0u64;
            // All partitions, as subsets containing vertex 0 of proper size.
            let n = g.n();
            for bits in 0u64..(1u64 << (n - 1)) {
                let mut x = vec![0usize];
                for v in 1..n {
                    if bits & (1 << (v - 1)) != 0 {
                        x.push(v);
                    }
                }
                if x.len() < 2 || x.len() > n - 2 {
                    continue;
                }
                let cut = cuts::cut_around(g, &x)?;
                let tight = pms.iter().all(|m| {
                    m.edges().iter().filter(|&&e| cut.delta().contains(&e)).count() == 1
                });
                let shape = cut.delta().len() == 3 && cuts::is_induced_matching(g, cut.delta());
                if tight != shape {
                    return Ok((false, format!("{name}: X={x:?} tight={tight} shape={shape}")));
                }
                checked += 1;
                tight_count += u64::from(tight);
            }
            ev.push(format!("{name}: {checked} cuts, {tight_count} tight"));
        }
        Ok((true, ev.join("; ")))
    }));

    entries.push(entry("lemma-2.5-contraction-preservation", "contractions stay cubic 3-connected bipartite", || {
        let mut ev = Vec::new();
        for (name, a, b) in [
            ("K33*K33", FixtureId::K33, FixtureId::K33),
            ("K33*Heawood", FixtureId::K33, FixtureId::Heawood),
            ("Cube*K33", FixtureId::Cube, FixtureId::K33),
        ] {
            let sp = ctx.star(a, b)?;
            let (c1, c2) = cuts::tight_cut_contractions(
                &sp.graph,
                &sp.principal_cut,
                ctx.budgets().matchings,
            )?;
            for side in [&c1, &c2] {
                let h = &side.graph;
                if !(h.is_cubic() && h.is_k_connected(3) && h.bipartition().is_some()) {
                    return Ok((false, format!("{name}: contraction breaks the hypothesis")));
                }
            }
            ev.push(name.to_string());
        }
        Ok((true, format!("both contractions checked for {}", ev.join(", "))))
    }));

    entries.push(entry("lemma-2.6-tfh-transfer", "2FH transfers across tight cut contractions", || {
        let mut ev = Vec::new();
        for (name, a, b) in [
            ("K33*K33", FixtureId::K33, FixtureId::K33),
            ("K33*Heawood", FixtureId::K33, FixtureId::Heawood),
            ("Cube*K33", FixtureId::Cube, FixtureId::K33),
        ] {
            let sp = ctx.star(a, b)?;
            let (c1, c2) = cuts::tight_cut_contractions(
                &sp.graph,
                &sp.principal_cut,
                ctx.budgets().matchings,
            )?;
            let whole = ctx.tfh(&sp.graph)?;
            let parts = ctx.tfh(&c1.graph)? && ctx.tfh(&c2.graph)?;
            if whole != parts {
                return Ok((false, format!("{name}: whole={whole} parts={parts}")));
            }
            ev.push(format!("{name}: {whole}"));
        }
        Ok((true, ev.join(", ")))
    }));

    entries.push(entry("lemma-2.7-principal-cut-induced", "principal cut of cubic bipartite product is induced", || {
        let mut ev = Vec::new();
        for (name, a, b) in [
            ("K33*K33", FixtureId::K33, FixtureId::K33),
            ("K33*Heawood", FixtureId::K33, FixtureId::Heawood),
            ("Heawood*K33", FixtureId::Heawood, FixtureId::K33),
            ("Cube*K33", FixtureId::Cube, FixtureId::K33),
            ("Cube*Cube", FixtureId::Cube, FixtureId::Cube),
        ] {
            let sp = ctx.star(a, b)?;
            if !construct::principal_cut_is_induced_matching(&sp.graph, &sp.principal_cut) {
                return Ok((false, format!("{name}: cut not an induced 3-matching")));
            }
            ev.push(name.to_string());
        }
        // The non-bipartite product of two K4 is the tightness contrast.
        let prism = ctx.star(FixtureId::K4, FixtureId::K4)?;
        let contrast = construct::principal_cut_is_induced_matching(&prism.graph, &prism.principal_cut);
        if contrast {
            return Ok((false, "K4*K4 principal cut unexpectedly induced".into()));
        }
        Ok((true, format!("{}; K4*K4 correctly not induced", ev.join(", "))))
    }));

    entries.push(entry("obs-2.8-star-roundtrip", "decomposing a star product returns its factors", || {
        let mut ev = Vec::new();
        for (name, a, b) in [
            ("K33*K33", FixtureId::K33, FixtureId::K33),
            ("K33*Heawood", FixtureId::K33, FixtureId::Heawood),
        ] {
            let sp = ctx.star(a, b)?;
            let d = cuts::decompose(&sp.graph, ctx.budgets())?;
            if d.pieces.len() != 2 {
                return Ok((false, format!("{name}: {} pieces", d.pieces.len())));
            }
            let (ga, gb) = (ctx.g(a), ctx.g(b));
            let ok = (are_isomorphic(&d.pieces[0].graph, ga) && are_isomorphic(&d.pieces[1].graph, gb))
                || (are_isomorphic(&d.pieces[0].graph, gb) && are_isomorphic(&d.pieces[1].graph, ga));
            if !ok {
                return Ok((false, format!("{name}: pieces are not the factors")));
            }
            ev.push(format!("{name} -> {{{}, {}}}", a.name(), b.name()));
        }
        Ok((true, ev.join(", ")))
    }));

    entries.push(entry("thm-2.9-brace-reduction", "2FH cubic braces among fixtures are K33 and Heawood", || {
        let mut survivors = Vec::new();
        for &id in ALL_FIXTURES.iter() {
            let g = ctx.g(id);
            if g.is_cubic() && matching::is_brace(g) && ctx.tfh(g)? {
                survivors.push(id.name());
            }
        }
        if survivors != vec!["K33", "Heawood"] {
            return Ok((false, format!("survivors {survivors:?}")));
        }
        for (name, a, b) in [
            ("K33*K33", FixtureId::K33, FixtureId::K33),
            ("K33*Heawood", FixtureId::K33, FixtureId::Heawood),
        ] {
            let sp = ctx.star(a, b)?;
            if matching::is_brace(&sp.graph) {
                return Ok((false, format!("{name} must not be a brace")));
            }
            if !ctx.tfh(&sp.graph)? {
                return Ok((false, format!("{name} must stay 2FH")));
            }
        }
        Ok((true, "fixture braces {K33, Heawood}; products 2FH and non-brace".into()))
    }));

    entries.push(entry("obs-a.2-factor-complements", "cubic 2-factors are perfect matching complements", || {
        let mut ev = Vec::new();
        for id in [FixtureId::K4, FixtureId::K33, FixtureId::Cube, FixtureId::Prism, FixtureId::Heawood] {
            let g = ctx.g(id);
            let general = factors::enumerate_two_factors_general(g, ctx.budgets().two_factors)?;
            let mut general: Vec<Vec<(usize, usize)>> =
                general.iter().map(|f| f.edges().to_vec()).collect();
            general.sort();
            let pms = matching::enumerate_perfect_matchings(g, ctx.budgets().matchings)?;
            let mut complements: Vec<Vec<(usize, usize)>> = pms
                .iter()
                .map(|m| g.edges().iter().copied().filter(|e| !m.edges().contains(e)).collect())
                .collect();
            complements.sort();
            if general != complements {
                return Ok((false, format!("{id}: sets differ")));
            }
            ev.push(format!("{id}: {}", general.len()));
        }
        Ok((true, ev.join(", ")))
    }));

    entries.push(entry("thm-a.4-matching-covered", "cubic matching covered iff 2-connected", || {
        let mut ev = Vec::new();
        for id in [FixtureId::K4, FixtureId::K33, FixtureId::Cube, FixtureId::Prism, FixtureId::Heawood, FixtureId::Fig7a, FixtureId::Fig7b] {
            let g = ctx.g(id);
            let mc = matching::is_matching_covered(g);
            let two = g.is_k_connected(2);
            if mc != two {
                return Ok((false, format!("{id}: covered={mc} 2conn={two}")));
            }
            ev.push(format!("{id}:{mc}"));
        }
        Ok((true, ev.join(" ")))
    }));

    entries.push(entry("thm-a.5-petersen", "cubic bridgeless graphs have perfect matchings", || {
        let mut ev = Vec::new();
        for &id in ALL_FIXTURES.iter() {
            let g = ctx.g(id);
            if !g.is_cubic() || !g.bridges().is_empty() {
                continue;
            }
            if matching::perfect_matching_with(g, &[], &[])?.is_none() {
                return Ok((false, format!("{id}: no perfect matching")));
            }
            ev.push(id.name());
        }
        Ok((true, format!("checked {}", ev.join(", "))))
    }));

    entries.push(entry("thm-1.4-pieces-pfaffian", "Pfaffian iff all bricks and braces are Pfaffian", || {
        let mut ev = Vec::new();
        for (name, a, b) in [
            ("K33*K33", FixtureId::K33, FixtureId::K33),
            ("Cube*Cube", FixtureId::Cube, FixtureId::Cube),
            ("Cube*K33", FixtureId::Cube, FixtureId::K33),
        ] {
            let sp = ctx.star(a, b)?;
            let whole = pfaffian::is_pfaffian(&sp.graph, ctx.budgets())?;
            let d = cuts::decompose(&sp.graph, ctx.budgets())?;
            let mut parts = true;
            for p in &d.pieces {
                parts &= pfaffian::is_pfaffian(&p.graph, ctx.budgets())?;
            }
            if whole != parts {
                return Ok((false, format!("{name}: whole={whole} pieces={parts}")));
            }
            ev.push(format!("{name}: {whole}"));
        }
        Ok((true, ev.join(", ")))
    }));

    entries.push(entry("lemma-a.1-bridgeless-star", "bridgeless cubic star: 2FH iff factors 2FH and cut quasi-tight", || {
        let mut ev = Vec::new();
        // (factor a, factor b, fixture the product must match and whose
        // 2FH label applies)
        for (a, b, product_label) in [
            (FixtureId::K4, FixtureId::K4, Some(FixtureId::Prism)),
            (FixtureId::K33, FixtureId::K33, None),
            (FixtureId::Cube, FixtureId::K33, None),
        ] {
            let sp = ctx.star(a, b)?;
            if !sp.graph.bridges().is_empty() {
                return Ok((false, "product is not bridgeless".into()));
            }
            let whole = ctx.tfh(&sp.graph)?;
            if let Some(label) = product_label {
                if !are_isomorphic(&sp.graph, ctx.g(label)) {
                    return Ok((false, format!("{}*{} is not {label}", a.name(), b.name())));
                }
                if whole != ctx.expect_tfh(label) {
                    return Ok((
                        false,
                        format!("{label}: computed 2FH {whole} != expected {}", ctx.expect_tfh(label)),
                    ));
                }
            }
            let fa = ctx.tfh(ctx.g(a))?;
            let fb = ctx.tfh(ctx.g(b))?;
            if fa != ctx.expect_tfh(a) || fb != ctx.expect_tfh(b) {
                return Ok((false, format!("{}/{}: computed factor 2FH differs from label", a.name(), b.name())));
            }
            let qt = cuts::is_quasi_tight(&sp.graph, &sp.principal_cut, ctx.budgets().matchings)?;
            let rhs = fa && fb && qt;
            if whole != rhs {
                return Ok((false, format!("{}*{}: lhs={whole} rhs={rhs}", a.name(), b.name())));
            }
            ev.push(format!("{}*{}: 2fh={whole} qt={qt}", a.name(), b.name()));
        }
        Ok((true, ev.join("; ")))
    }));

    entries.push(entry("lemma-a.3-pair-rich-star", "pairwise 2-factor-rich principal cut transfers 2FH", || {
        let sp = ctx.star(FixtureId::K33, FixtureId::K33)?;
        let cut = sp.principal_cut.delta().to_vec();
        let factors_list = factors::enumerate_two_factors(&sp.graph, ctx.budgets().two_factors)?;
        for i in 0..cut.len() {
            for j in i + 1..cut.len() {
                let hit = factors_list.iter().any(|f| {
                    f.edges().contains(&cut[i]) && f.edges().contains(&cut[j])
                });
                if !hit {
                    return Ok((false, format!("pair ({:?}, {:?}) in no 2-factor", cut[i], cut[j])));
                }
            }
        }
        let whole = ctx.tfh(&sp.graph)?;
        let parts = ctx.tfh(ctx.g(FixtureId::K33))?;
        if whole != (parts && parts) {
            return Ok((false, "equivalence fails on K33*K33".into()));
        }
        Ok((true, format!("hypothesis holds on K33*K33 ({} 2-factors); equivalence holds", factors_list.len())))
    }));

    entries.push(entry("lemma-a.6-cut-balance", "one-sided cuts balance the colour classes", || {
        let mut ev = Vec::new();
        for (name, a, b) in [
            ("K33*K33", FixtureId::K33, FixtureId::K33),
            ("K33*Heawood", FixtureId::K33, FixtureId::Heawood),
            ("Cube*Cube", FixtureId::Cube, FixtureId::Cube),
        ] {
            let sp = ctx.star(a, b)?;
            let bal = cuts::verify_cut_balance(&sp.graph, &sp.principal_cut, ctx.budgets().matchings)?;
            ev.push(format!(
                "{name}: |X∩A|-|X∩B|={}, matchings={}",
                bal.x_in_a as i64 - bal.x_in_b as i64,
                bal.matchings
            ));
        }
        let c4 = ctx.g(FixtureId::C4);
        let cut = cuts::cut_around(c4, &[0])?;
        cuts::verify_cut_balance(c4, &cut, ctx.budgets().matchings)?;
        ev.push("C4 trivial cut".into());
        Ok((true, ev.join("; ")))
    }));

    entries.push(entry("lemma-a.7-bipartite-cubic-star", "cubic bipartite star: 2FH iff both factors 2FH", || {
        let mut ev = Vec::new();
        for (name, a, b) in [
            ("K33*K33", FixtureId::K33, FixtureId::K33),
            ("K33*Heawood", FixtureId::K33, FixtureId::Heawood),
            ("Cube*K33", FixtureId::Cube, FixtureId::K33),
            ("Cube*Cube", FixtureId::Cube, FixtureId::Cube),
        ] {
            let sp = ctx.star(a, b)?;
            if !(sp.graph.is_cubic() && sp.graph.bipartition().is_some()) {
                return Ok((false, format!("{name}: not cubic bipartite")));
            }
            let whole = ctx.tfh(&sp.graph)?;
            let parts = ctx.tfh(ctx.g(a))? && ctx.tfh(ctx.g(b))?;
            if whole != parts {
                return Ok((false, format!("{name}: lhs={whole} rhs={parts}")));
            }
            ev.push(format!("{name}:{whole}"));
        }
        Ok((true, ev.join(" ")))
    }));

    entries.push(entry("lemma-3.1-quad-faces", "planar braces other than C4 have at least six quadrilateral faces", || {
        let cube = ctx.g(FixtureId::Cube);
        let rotation = planar::parse_rotation_file(cube, planar::fixture_rotation(FixtureId::Cube).expect("bundled"))?;
        let quads = planar::count_quadrilateral_faces(cube, &rotation)?;
        if quads < 6 {
            return Ok((false, format!("cube has {quads} quadrilateral faces")));
        }
        Ok((true, format!("cube: exactly {quads} quadrilateral faces (tight)")))
    }));

    entries.push(entry("lemma-3.2-four-cycle-split", "brace split over a shared quadrilateral gives braces", || {
        // Two cubes glued over a quadrilateral face.
        let cube = fixture(FixtureId::Cube);
        let mut edges: Vec<(usize, usize)> = cube.edges().to_vec();
        for &(u, v) in cube.edges() {
            let m = |x: usize| if x < 4 { x } else { x + 4 };
            let (a, b) = (m(u), m(v));
            if !(a < 4 && b < 4) {
                edges.push((a.min(b), a.max(b)));
            }
        }
        let doubled = Graph::from_edges(12, edges.into_iter().collect::<std::collections::BTreeSet<_>>())?;
        let mut ev = Vec::new();
        if matching::is_brace(&doubled) {
            // Both split parts are cubes, which are braces.
            if !matching::is_brace(&cube) {
                return Ok((false, "cube failed its own brace test".into()));
            }
            ev.push("cube∪cube over C: brace, parts braces".to_string());
        } else {
            return Ok((false, "glued double cube should be a brace".into()));
        }
        let tri = cube_trisum();
        if matching::is_brace(&tri) {
            if !(matching::is_brace(&doubled) && matching::is_brace(&cube)) {
                return Ok((false, "trisum split parts are not braces".into()));
            }
            ev.push("cube trisum: brace, split parts braces".to_string());
        }
        Ok((true, ev.join("; ")))
    }));

    entries.push(entry("lemma-3.3-partner-four-cycles", "each 4-cycle of a planar brace has an edge-disjoint partner", || {
        let cube = ctx.g(FixtureId::Cube);
        let cycles = planar::all_four_cycles(cube);
        for c in &cycles {
            if planar::edge_disjoint_partner(cube, c)?.is_none() {
                return Ok((false, format!("cube 4-cycle {c:?} has no partner")));
            }
        }
        Ok((true, format!("cube: all {} 4-cycles have partners", cycles.len())))
    }));

    entries.push(entry("lemma-3.4-nonplanar-pfaffian", "non-planar Pfaffian brace has three edge-disjoint 4-cycles", || {
        let g = cube_trisum();
        if !matching::is_brace(&g) {
            return Ok((false, "cube trisum is not a brace".into()));
        }
        if !pfaffian::is_pfaffian(&g, ctx.budgets())? {
            return Ok((false, "cube trisum is not Pfaffian".into()));
        }
        // Non-planarity witness: a K33 subdivision with branch triples
        // {0,1,2} and the three inner-square corners attached to 0.
        let paths: Vec<Vec<usize>> = vec![
            vec![4, 0],
            vec![4, 5, 1],
            vec![4, 7, 6, 2],
            vec![8, 0],
            vec![8, 9, 1],
            vec![8, 11, 10, 2],
            vec![12, 0],
            vec![12, 13, 1],
            vec![12, 15, 14, 2],
        ];
        if !verify_k33_subdivision(&g, [0, 1, 2], [4, 8, 12], &paths) {
            return Ok((false, "subdivision witness invalid".into()));
        }
        let triple = planar::three_edge_disjoint_four_cycles(&g);
        if triple.is_none() {
            return Ok((false, "no three edge-disjoint 4-cycles".into()));
        }
        for c in planar::all_four_cycles(&g) {
            if planar::edge_disjoint_partner(&g, &c)?.is_none() {
                return Ok((false, format!("4-cycle {c:?} has no partner")));
            }
        }
        Ok((true, format!("16-vertex trisum brace: Pfaffian, non-planar (K33 subdivision), triple {:?}", triple.unwrap())))
    }));

    entries.push(entry("thm-1.6-girth", "Pfaffian braces other than Heawood have girth 4", || {
        let mut ev = Vec::new();
        for id in [FixtureId::C4, FixtureId::K33, FixtureId::Cube, FixtureId::Heawood] {
            let v = pfaffian::check_pfaffian_girth_theorem(ctx.g(id), ctx.budgets())?;
            if !v.pass {
                return Ok((false, format!("{id}: counterexample")));
            }
            ev.push(format!("{id}:{:?}", v.branch.expect("pass has a branch")));
        }
        let tri = cube_trisum();
        let v = pfaffian::check_pfaffian_girth_theorem(&tri, ctx.budgets())?;
        if !v.pass {
            return Ok((false, "cube trisum: counterexample".into()));
        }
        ev.push(format!("cube-trisum:{:?}", v.branch.expect("pass has a branch")));
        Ok((true, ev.join(" ")))
    }));

    entries.push(entry("cor-1.7-heawood-unique", "Heawood is the only Pfaffian 2FH cubic brace fixture", || {
        let heawood = ctx.g(FixtureId::Heawood);
        let mut winners = Vec::new();
        for &id in ALL_FIXTURES.iter() {
            let g = ctx.g(id);
            if !(g.is_cubic() && matching::is_brace(g)) {
                continue;
            }
            if pfaffian::is_pfaffian(g, ctx.budgets())? && ctx.tfh(g)? {
                winners.push(id);
                if !are_isomorphic(g, heawood) {
                    return Ok((false, format!("{id} is a Pfaffian 2FH cubic brace but not Heawood")));
                }
            }
        }
        if winners.len() != 1 {
            return Ok((false, format!("winners {winners:?}")));
        }
        Ok((true, "unique winner: Heawood".into()))
    }));

    entries.push(entry("pfaffian-fixtures", "Pfaffian status of the base fixtures", || {
        for (id, want) in [
            (FixtureId::C4, true),
            (FixtureId::Cube, true),
            (FixtureId::Prism, true),
            (FixtureId::Heawood, true),
            (FixtureId::K33, false),
        ] {
            let got = pfaffian::is_pfaffian(ctx.g(id), ctx.budgets())?;
            if got != want {
                return Ok((false, format!("{id}: pfaffian={got}, want {want}")));
            }
        }
        Ok((true, "C4, Cube, Prism, Heawood Pfaffian; K33 not".into()))
    }));

    entries.push(entry("fig-2", "the two star products of K4minus", || {
        let fig2b = ctx.g(FixtureId::Fig2b);
        let fig2c = ctx.g(FixtureId::Fig2c);
        if fig2b.bipartition().is_none() {
            return Ok((false, "Fig2b must be bipartite".into()));
        }
        if !ctx.tfh(fig2b)? {
            return Ok((false, "Fig2b must be 2FH".into()));
        }
        if fig2c.bipartition().is_some() {
            return Ok((false, "Fig2c must be non-bipartite".into()));
        }
        if factors::has_two_factor(fig2c) {
            return Ok((false, "Fig2c must not have a 2-factor".into()));
        }
        if !ctx.tfh(fig2c)? {
            return Ok((false, "Fig2c must be vacuously 2FH".into()));
        }
        let k4m = ctx.g(FixtureId::K4minus);
        if !ctx.is_star_product_of(fig2b, k4m, k4m)? || !ctx.is_star_product_of(fig2c, k4m, k4m)? {
            return Ok((false, "figures are not star products of K4minus".into()));
        }
        Ok((true, "bipartite 2FH product and 2-factor-free product both realised".into()))
    }));

    entries.push(entry("fig-3", "the prism witnesses the quasi-tightness requirement", || {
        let prism = ctx.g(FixtureId::Prism);
        let k4 = ctx.g(FixtureId::K4);
        if ctx.tfh(k4)? != ctx.expect_tfh(FixtureId::K4) || !ctx.expect_tfh(FixtureId::K4) {
            return Ok((false, "K4 must be 2FH".into()));
        }
        let got = ctx.tfh(prism)?;
        if got != ctx.expect_tfh(FixtureId::Prism) {
            return Ok((false, format!("Prism: computed 2FH {got} != expected {}", ctx.expect_tfh(FixtureId::Prism))));
        }
        if got {
            return Ok((false, "Prism must not be 2FH".into()));
        }
        let rungs = cuts::cut_around(prism, &[0, 1, 2])?;
        if cuts::is_quasi_tight(prism, &rungs, ctx.budgets().matchings)? {
            return Ok((false, "prism principal cut must not be quasi-tight".into()));
        }
        Ok((true, "factors 2FH, product not, principal cut not quasi-tight".into()))
    }));

    entries.push(entry("fig-5", "reverse direction of the unproven star proposition fails", || {
        let a = ctx.g(FixtureId::Fig5a);
        let b = ctx.g(FixtureId::Fig5b);
        if factors::has_two_factor(a) {
            return Ok((false, "Fig5a must not have a 2-factor".into()));
        }
        if !ctx.tfh(a)? {
            return Ok((false, "Fig5a must be vacuously 2FH".into()));
        }
        let verdict = factors::is_two_factor_hamiltonian(b, ctx.budgets().two_factors)?;
        if verdict.holds || verdict.witness.is_none() {
            return Ok((false, "Fig5b must have a disconnected 2-factor".into()));
        }
        if !ctx.is_star_product_of(b, a, a)? {
            return Ok((false, "Fig5b is not a star product of two Fig5a".into()));
        }
        Ok((true, format!(
            "factors vacuously 2FH, product has a {}-component 2-factor",
            verdict.witness.expect("checked").components()
        )))
    }));

    entries.push(entry("fig-6", "forward direction of the unproven star proposition fails", || {
        let a = ctx.g(FixtureId::Fig6a);
        let b = ctx.g(FixtureId::Fig6b);
        let va = factors::is_two_factor_hamiltonian(a, ctx.budgets().two_factors)?;
        if va.holds || !va.has_two_factor {
            return Ok((false, "Fig6a must have a disconnected 2-factor".into()));
        }
        let vb = factors::is_two_factor_hamiltonian(b, ctx.budgets().two_factors)?;
        if !vb.holds || !vb.has_two_factor {
            return Ok((false, "Fig6b must be 2FH with 2-factors present".into()));
        }
        if !ctx.is_star_product_of(b, a, a)? {
            return Ok((false, "Fig6b is not a star product of two Fig6a".into()));
        }
        Ok((true, "product 2FH (with 2-factors), factors not 2FH".into()))
    }));

    entries.push(entry("fig-7", "the bridged star product and its vacuously quasi-tight cut", || {
        let a = ctx.g(FixtureId::Fig7a);
        let b = ctx.g(FixtureId::Fig7b);
        if a.bridges().is_empty() {
            return Ok((false, "Fig7a must have a bridge".into()));
        }
        if matching::perfect_matching_with(a, &[], &[])?.is_some() {
            return Ok((false, "Fig7a must have no perfect matching".into()));
        }
        if factors::has_two_factor(a) {
            return Ok((false, "Fig7a must have no 2-factor".into()));
        }
        if matching::perfect_matching_with(b, &[], &[])?.is_some() {
            return Ok((false, "Fig7b must have no perfect matching".into()));
        }
        if !ctx.is_star_product_of(b, a, ctx.g(FixtureId::K4))? {
            return Ok((false, "Fig7b is not a star product of Fig7a and K4".into()));
        }
        let principal = cuts::cut_around(b, &(0..15).collect::<Vec<_>>())?;
        if !cuts::is_quasi_tight(b, &principal, ctx.budgets().matchings)? {
            return Ok((false, "Fig7b principal cut must be (vacuously) quasi-tight".into()));
        }
        Ok((true, format!("Fig7a: {} bridges, no perfect matching; Fig7b principal cut quasi-tight", a.bridges().len())))
    }));

    entries.push(entry("fixture-2fh-table", "computed 2FH and 2-factor existence match the expected table", || {
        let mut bad = Vec::new();
        for &id in ALL_FIXTURES.iter() {
            let g = ctx.g(id);
            let v = factors::is_two_factor_hamiltonian(g, ctx.budgets().two_factors)?;
            if v.holds != ctx.expect_tfh(id) {
                bad.push(format!("{id}: 2fh={} want {}", v.holds, ctx.expect_tfh(id)));
            }
            if v.has_two_factor != ctx.cfg.expect.has_two_factor[&id] {
                bad.push(format!(
                    "{id}: has2f={} want {}",
                    v.has_two_factor, ctx.cfg.expect.has_two_factor[&id]
                ));
            }
        }
        if bad.is_empty() {
            Ok((true, "all 17 fixtures match".into()))
        } else {
            Ok((false, bad.join("; ")))
        }
    }));

    SuiteReport { entries }
}
