//! Combinatorial embeddings as rotation systems, face tracing with the
//! Euler-formula genus, quadrilateral face counting, and 4-cycle searches.
//!
//! Embeddings are inputs, not computed: planarity testing is out of scope,
//! and the planar fixtures ship with rotation files transcribed from their
//! drawings.

use crate::error::{Error, Result};
use crate::fixtures::FixtureId;
use crate::graph::Graph;

/// A cyclic neighbour order per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    host_n: usize,
    order: Vec<Vec<usize>>,
}

impl RotationSystem {
    /// Validates that every vertex's sequence is a permutation of its
    /// neighbourhood.
    pub fn new(g: &Graph, order: Vec<Vec<usize>>) -> Result<RotationSystem> {
        if order.len() != g.n() {
            return Err(Error::InconsistentRotation { v: order.len().min(g.n()) });
        }
        for (v, rot) in order.iter().enumerate() {
            let mut sorted = rot.clone();
            sorted.sort_unstable();
            if sorted != g.adj(v) {
                return Err(Error::InconsistentRotation { v });
            }
        }
        Ok(RotationSystem { host_n: g.n(), order })
    }

    pub fn order(&self, v: usize) -> &[usize] {
        &self.order[v]
    }

    /// Neighbour that follows `from` in the cyclic order at `v`.
    fn successor(&self, v: usize, from: usize) -> usize {
        let rot = &self.order[v];
        let pos = rot.iter().position(|&w| w == from).expect("from is a neighbour of v");
        rot[(pos + 1) % rot.len()]
    }
}

/// Parses the rotation file format: one line per vertex, `v: n1 n2 n3 ...`,
/// `#` comments and blank lines ignored. Every vertex must appear once.
pub fn parse_rotation_file(g: &Graph, text: &str) -> Result<RotationSystem> {
    let mut order: Vec<Option<Vec<usize>>> = vec![None; g.n()];
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (head, tail) = line.split_once(':').ok_or_else(|| Error::RotationParse {
            line: line_no,
            msg: "expected `v: n1 n2 ...`".into(),
        })?;
        let v: usize = head.trim().parse().map_err(|_| Error::RotationParse {
            line: line_no,
            msg: format!("bad vertex {head:?}"),
        })?;
        if v >= g.n() {
            return Err(Error::RotationParse {
                line: line_no,
                msg: format!("vertex {v} out of range"),
            });
        }
        if order[v].is_some() {
            return Err(Error::RotationParse {
                line: line_no,
                msg: format!("vertex {v} listed twice"),
            });
        }
        let nbrs: Vec<usize> = tail
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>().map_err(|_| Error::RotationParse {
                    line: line_no,
                    msg: format!("bad neighbour {t:?}"),
                })
            })
            .collect::<Result<_>>()?;
        order[v] = Some(nbrs);
    }
    let order: Vec<Vec<usize>> = order
        .into_iter()
        .enumerate()
        .map(|(v, o)| {
            o.ok_or(Error::RotationParse { line: 0, msg: format!("vertex {v} missing") })
        })
        .collect::<Result<_>>()?;
    RotationSystem::new(g, order)
}

/// Rotation systems bundled for the planar fixtures, transcribed from the
/// standard drawings.
pub fn fixture_rotation(id: FixtureId) -> Option<&'static str> {
    match id {
        FixtureId::C4 => Some(include_str!("../data/rotations/C4.rot")),
        FixtureId::K4 => Some(include_str!("../data/rotations/K4.rot")),
        FixtureId::K4minus => Some(include_str!("../data/rotations/K4minus.rot")),
        FixtureId::Cube => Some(include_str!("../data/rotations/Cube.rot")),
        FixtureId::Prism => Some(include_str!("../data/rotations/Prism.rot")),
        _ => None,
    }
}

/// The faces traced from a rotation system, each as the cyclic sequence of
/// dart tails, plus the genus from n − m + f = 2 − 2g.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceTrace {
    pub faces: Vec<Vec<usize>>,
    pub genus: usize,
}

/// Traces all faces by the next-dart rule. The host must be connected.
pub fn trace_faces(g: &Graph, r: &RotationSystem) -> Result<FaceTrace> {
    if r.host_n != g.n() {
        return Err(Error::Internal("rotation system does not belong to this host"));
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if g.m() == 0 {
        // A single vertex: one face bounded by nothing.
        return Ok(FaceTrace { faces: vec![Vec::new()], genus: 0 });
    }
    // Darts are (edge index, direction): dart 2e is u -> v, 2e + 1 is v -> u.
    let dart_id = |g: &Graph, from: usize, to: usize| -> usize {
        let e = g.edge_index(from, to).expect("edge of host");
        let (u, _) = g.edges()[e];
        2 * e + usize::from(from != u)
    };
    let mut seen = vec![false; 2 * g.m()];
    let mut faces = Vec::new();
    for start in 0..2 * g.m() {
        if seen[start] {
            continue;
        }
        let (u0, v0) = g.edges()[start / 2];
        let (mut from, mut to) = if start % 2 == 0 { (u0, v0) } else { (v0, u0) };
        let mut walk = Vec::new();
        loop {
            let d = dart_id(g, from, to);
            if seen[d] {
                break;
            }
            seen[d] = true;
            walk.push(from);
            let next = r.successor(to, from);
            from = to;
            to = next;
        }
        faces.push(walk);
    }
    let f = faces.len();
    let euler = g.n() as i64 - g.m() as i64 + f as i64;
    let two_genus = 2 - euler;
    if two_genus < 0 || two_genus % 2 != 0 {
        return Err(Error::Internal("face trace broke the Euler relation"));
    }
    Ok(FaceTrace { faces, genus: (two_genus / 2) as usize })
}

/// Number of quadrilateral faces of a planar (genus 0) rotation system.
pub fn count_quadrilateral_faces(g: &Graph, r: &RotationSystem) -> Result<usize> {
    let trace = trace_faces(g, r)?;
    if trace.genus != 0 {
        return Err(Error::NonPlanarRotation { genus: trace.genus });
    }
    Ok(trace.faces.iter().filter(|f| f.len() == 4).count())
}

/// Every simple 4-cycle, once each, as the canonical sequence
/// `[v0, v1, v2, v3]` with `v0` minimal and `v1 < v3`, sorted.
pub fn all_four_cycles(g: &Graph) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for v0 in g.vertices() {
        for v2 in v0 + 1..g.n() {
            // Common neighbours above v0 close 4-cycles v0 - a - v2 - b.
            let common: Vec<usize> = g
                .adj(v0)
                .iter()
                .copied()
                .filter(|&x| x > v0 && g.has_edge(x, v2))
                .collect();
            for (i, &a) in common.iter().enumerate() {
                for &b in &common[i + 1..] {
                    out.push([v0, a, v2, b]);
                }
            }
        }
    }
    out.sort_unstable();
    out
}

fn four_cycle_edges(c: &[usize; 4]) -> [(usize, usize); 4] {
    let mut es = [(0, 0); 4];
    for i in 0..4 {
        let (a, b) = (c[i], c[(i + 1) % 4]);
        es[i] = (a.min(b), a.max(b));
    }
    es
}

fn edge_disjoint(a: &[usize; 4], b: &[usize; 4]) -> bool {
    let ea = four_cycle_edges(a);
    let eb = four_cycle_edges(b);
    ea.iter().all(|e| !eb.contains(e))
}

/// The canonically least 4-cycle sharing no edge with `c`, or `None`.
pub fn edge_disjoint_partner(g: &Graph, c: &[usize; 4]) -> Result<Option<[usize; 4]>> {
    for (a, b) in four_cycle_edges(c) {
        if !g.has_edge(a, b) {
            return Err(Error::EdgeNotInGraph { u: a, v: b });
        }
    }
    Ok(all_four_cycles(g).into_iter().find(|other| edge_disjoint(c, other)))
}

/// First lexicographic triple of pairwise edge-disjoint 4-cycles, if any.
pub fn three_edge_disjoint_four_cycles(g: &Graph) -> Option<[[usize; 4]; 3]> {
    let cycles = all_four_cycles(g);
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            if !edge_disjoint(&cycles[i], &cycles[j]) {
                continue;
            }
            for k in j + 1..cycles.len() {
                if edge_disjoint(&cycles[i], &cycles[k]) && edge_disjoint(&cycles[j], &cycles[k]) {
                    return Some([cycles[i], cycles[j], cycles[k]]);
                }
            }
        }
    }
    None
}
