//! Graph constructions: the star product with its principal 3-edge cut,
//! the trisum of three bipartite graphs over a shared 4-cycle, and iterated
//! star-product families driven by recipe files.

use crate::cuts::{self, EdgeCut};
use crate::error::{Error, Result};
use crate::fixtures::{fixture, FixtureId};
use crate::graph::Graph;

/// Result of a star product: the product graph, the principal 3-edge cut,
/// and the re-indexing maps `(original vertex, product vertex)` for both
/// factors (the deleted vertices are absent).
#[derive(Debug, Clone)]
pub struct StarProduct {
    pub graph: Graph,
    pub principal_cut: EdgeCut,
    pub map1: Vec<(usize, usize)>,
    pub map2: Vec<(usize, usize)>,
}

/// Deletes the degree-3 vertices `v1` of `g1` and `v2` of `g2` and joins
/// their neighbourhoods by a 3-edge matching.
///
/// `pairing` lists pairs `(a, b)` with `a` a neighbour of `v1` and `b` a
/// neighbour of `v2`, and must be a bijection; `None` pairs the ascending
/// neighbour lists positionally. Different pairings give genuinely
/// different products, so the parameter is part of the operation.
///
/// Vertices of `g1` other than `v1` keep their relative order as
/// `0..n1-2`; those of `g2` follow.
pub fn star_product(
    g1: &Graph,
    v1: usize,
    g2: &Graph,
    v2: usize,
    pairing: Option<&[(usize, usize)]>,
) -> Result<StarProduct> {
    for (g, v) in [(g1, v1), (g2, v2)] {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { v, n: g.n() });
        }
        if g.degree(v) != 3 {
            return Err(Error::DegreeNotThree { v, deg: g.degree(v) });
        }
    }
    let n1: Vec<usize> = g1.adj(v1).to_vec();
    let n2: Vec<usize> = g2.adj(v2).to_vec();
    let pairs: Vec<(usize, usize)> = match pairing {
        None => n1.iter().copied().zip(n2.iter().copied()).collect(),
        Some(p) => p.to_vec(),
    };
    {
        let mut left: Vec<usize> = pairs.iter().map(|&(a, _)| a).collect();
        let mut right: Vec<usize> = pairs.iter().map(|&(_, b)| b).collect();
        left.sort_unstable();
        right.sort_unstable();
        if left != n1 || right != n2 {
            return Err(Error::PairingNotBijective);
        }
    }

    let mut map1 = vec![usize::MAX; g1.n()];
    let mut next = 0;
    for v in 0..g1.n() {
        if v != v1 {
            map1[v] = next;
            next += 1;
        }
    }
    let mut map2 = vec![usize::MAX; g2.n()];
    for v in 0..g2.n() {
        if v != v2 {
            map2[v] = next;
            next += 1;
        }
    }

    let mut edges: Vec<(usize, usize)> = Vec::new();
    for &(u, v) in g1.edges() {
        if u != v1 && v != v1 {
            edges.push((map1[u], map1[v]));
        }
    }
    for &(u, v) in g2.edges() {
        if u != v2 && v != v2 {
            edges.push((map2[u], map2[v]));
        }
    }
    for &(a, b) in &pairs {
        edges.push((map1[a], map2[b]));
    }
    let graph = Graph::from_edges(next, edges)?;
    let x: Vec<usize> = (0..g1.n() - 1).collect();
    let principal_cut = cuts::cut_around(&graph, &x)?;
    debug_assert_eq!(principal_cut.delta().len(), 3);
    let pack = |map: &[usize]| {
        map.iter()
            .enumerate()
            .filter(|&(_, &new)| new != usize::MAX)
            .map(|(old, &new)| (old, new))
            .collect()
    };
    Ok(StarProduct { graph, principal_cut, map1: pack(&map1), map2: pack(&map2) })
}

/// Whether a principal cut is an induced matching of three edges in the
/// product.
pub fn principal_cut_is_induced_matching(g: &Graph, cut: &EdgeCut) -> bool {
    cut.delta().len() == 3 && cuts::is_induced_matching(g, cut.delta())
}

/// Specification of a trisum: three bipartite pieces, a designated 4-cycle
/// in each (as a cyclic vertex sequence), and the set of shared-cycle edge
/// positions to delete. Cycle position `i` is the edge between the cycle's
/// `i`-th and `(i+1)`-th vertex.
#[derive(Debug, Clone)]
pub struct TrisumSpec {
    pub pieces: [Graph; 3],
    pub cycles: [[usize; 4]; 3],
    pub delete: Vec<usize>,
}

/// Glues the three pieces along their designated 4-cycles (identified in
/// sequence order) and removes the selected cycle edges. The shared cycle
/// becomes vertices 0..4 of the result; interior vertices of each piece
/// follow in piece order.
pub fn trisum(spec: &TrisumSpec) -> Result<Graph> {
    for (i, (g, c)) in spec.pieces.iter().zip(spec.cycles.iter()).enumerate() {
        let mut distinct = c.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != 4 || distinct.iter().any(|&v| v >= g.n()) {
            return Err(Error::TrisumNotAFourCycle { piece: i });
        }
        for j in 0..4 {
            if !g.has_edge(c[j], c[(j + 1) % 4]) {
                return Err(Error::TrisumNotAFourCycle { piece: i });
            }
        }
        if g.n() == 4 {
            return Err(Error::TrisumNoOutsideVertex { piece: i });
        }
        if g.bipartition().is_none() {
            return Err(Error::NotBipartite);
        }
    }
    for &d in &spec.delete {
        if d >= 4 {
            return Err(Error::TrisumNotAFourCycle { piece: 3 });
        }
    }

    // Cycle vertices map to 0..4 by sequence position; interiors follow.
    let mut next = 4;
    let mut edges: std::collections::BTreeSet<(usize, usize)> = std::collections::BTreeSet::new();
    for (g, c) in spec.pieces.iter().zip(spec.cycles.iter()) {
        let mut map = vec![usize::MAX; g.n()];
        for (pos, &v) in c.iter().enumerate() {
            map[v] = pos;
        }
        for v in 0..g.n() {
            if map[v] == usize::MAX {
                map[v] = next;
                next += 1;
            }
        }
        for &(u, v) in g.edges() {
            let (a, b) = (map[u], map[v]);
            edges.insert((a.min(b), a.max(b)));
        }
    }
    let mut delete = spec.delete.clone();
    delete.sort_unstable();
    delete.dedup();
    for &d in &delete {
        let (a, b) = (d, (d + 1) % 4);
        edges.remove(&(a.min(b), a.max(b)));
    }
    let g = Graph::from_edges(next, edges)?;
    if g.bipartition().is_none() {
        return Err(Error::TrisumColouringClash);
    }
    Ok(g)
}

/// One step of an iterated star-product family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyStep {
    pub base: FixtureId,
    /// Degree-3 attachment vertex in the running product; `None` only on
    /// the first step.
    pub attach: Option<usize>,
    /// Images in the base of the attachment vertex's ascending neighbours.
    /// Pairs with the base's lowest-index degree-3 vertex; `None` means the
    /// lexicographic pairing.
    pub pairing: Option<[usize; 3]>,
}

#[derive(Debug, Clone)]
pub struct FamilyStepTrace {
    /// Product after this step, as graph6.
    pub graph6: String,
    /// Principal cut of this step, in the coordinates of that product.
    pub principal_cut: Option<EdgeCut>,
}

#[derive(Debug, Clone)]
pub struct FamilyResult {
    pub graph: Graph,
    pub trace: Vec<FamilyStepTrace>,
}

fn lowest_degree_three_vertex(g: &Graph) -> Result<usize> {
    g.vertices()
        .find(|&v| g.degree(v) == 3)
        .ok_or(Error::DegreeNotThree { v: 0, deg: g.degree(0) })
}

/// Iterated star product starting from the first step's base fixture.
/// Every intermediate principal cut is recorded in the trace.
pub fn diwan_family(steps: &[FamilyStep]) -> Result<FamilyResult> {
    let mut iter = steps.iter().enumerate();
    let (_, first) = iter.next().ok_or(Error::RecipeParse {
        line: 0,
        msg: "a family needs at least one step".into(),
    })?;
    if first.attach.is_some() || first.pairing.is_some() {
        return Err(Error::FamilyStep {
            step: 0,
            source: Box::new(Error::RecipeParse {
                line: 1,
                msg: "the first step names the starting base only".into(),
            }),
        });
    }
    let mut running = fixture(first.base);
    let mut trace = vec![FamilyStepTrace {
        graph6: crate::graph6::encode(&running)?,
        principal_cut: None,
    }];
    for (i, step) in iter {
        let wrap = |source: Error| Error::FamilyStep { step: i, source: Box::new(source) };
        let base = fixture(step.base);
        let attach = step.attach.ok_or_else(|| {
            wrap(Error::RecipeParse { line: i + 1, msg: "missing attachment vertex".into() })
        })?;
        let base_attach = lowest_degree_three_vertex(&base).map_err(wrap)?;
        let pairing: Option<Vec<(usize, usize)>> = match step.pairing {
            None => None,
            Some(images) => {
                if attach >= running.n() {
                    return Err(wrap(Error::VertexOutOfRange { v: attach, n: running.n() }));
                }
                let nbrs = running.adj(attach).to_vec();
                if nbrs.len() != 3 {
                    return Err(wrap(Error::DegreeNotThree { v: attach, deg: nbrs.len() }));
                }
                Some(nbrs.into_iter().zip(images).collect())
            }
        };
        let sp = star_product(&running, attach, &base, base_attach, pairing.as_deref())
            .map_err(wrap)?;
        running = sp.graph;
        trace.push(FamilyStepTrace {
            graph6: crate::graph6::encode(&running)?,
            principal_cut: Some(sp.principal_cut),
        });
    }
    Ok(FamilyResult { graph: running, trace })
}

/// Parses a family recipe: one step per line, `base [vertex [pairing]]`,
/// where `vertex` is the attachment vertex in the running product and
/// `pairing` is a comma-separated triple of base vertices. Blank lines and
/// `#` comments are skipped. The first step is the bare base name.
pub fn parse_recipe(text: &str) -> Result<Vec<FamilyStep>> {
    let mut steps = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let base: FixtureId = tokens
            .next()
            .expect("nonempty line")
            .parse()
            .map_err(|_| Error::RecipeParse { line: line_no, msg: "unknown base name".into() })?;
        let attach = match tokens.next() {
            None => None,
            Some(t) => Some(t.parse::<usize>().map_err(|_| Error::RecipeParse {
                line: line_no,
                msg: format!("bad vertex {t:?}"),
            })?),
        };
        let pairing = match tokens.next() {
            None => None,
            Some(t) => {
                let parts: Vec<usize> = t
                    .split(',')
                    .map(|p| {
                        p.parse::<usize>().map_err(|_| Error::RecipeParse {
                            line: line_no,
                            msg: format!("bad pairing {t:?}"),
                        })
                    })
                    .collect::<Result<_>>()?;
                if parts.len() != 3 {
                    return Err(Error::RecipeParse {
                        line: line_no,
                        msg: "pairing needs exactly three vertices".into(),
                    });
                }
                Some([parts[0], parts[1], parts[2]])
            }
        };
        if let Some(extra) = tokens.next() {
            return Err(Error::RecipeParse {
                line: line_no,
                msg: format!("unexpected trailing token {extra:?}"),
            });
        }
        steps.push(FamilyStep { base, attach, pairing });
    }
    if steps.is_empty() {
        return Err(Error::RecipeParse { line: 0, msg: "empty recipe".into() });
    }
    Ok(steps)
}
