//! Named fixture graphs, transcribed edge by edge from their standard
//! drawings. Vertex numbering is documented per fixture so results can be
//! cross-checked against the pictures by hand.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Identifier for a bundled fixture graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FixtureId {
    C4,
    K4,
    K4minus,
    K33,
    Cube,
    Prism,
    Heawood,
    Fig2b,
    Fig2c,
    Fig4a,
    Fig4b,
    Fig5a,
    Fig5b,
    Fig6a,
    Fig6b,
    Fig7a,
    Fig7b,
}

pub const ALL_FIXTURES: [FixtureId; 17] = [
    FixtureId::C4,
    FixtureId::K4,
    FixtureId::K4minus,
    FixtureId::K33,
    FixtureId::Cube,
    FixtureId::Prism,
    FixtureId::Heawood,
    FixtureId::Fig2b,
    FixtureId::Fig2c,
    FixtureId::Fig4a,
    FixtureId::Fig4b,
    FixtureId::Fig5a,
    FixtureId::Fig5b,
    FixtureId::Fig6a,
    FixtureId::Fig6b,
    FixtureId::Fig7a,
    FixtureId::Fig7b,
];

pub fn all_fixtures() -> &'static [FixtureId] {
    &ALL_FIXTURES
}

impl FixtureId {
    pub fn name(self) -> &'static str {
        match self {
            FixtureId::C4 => "C4",
            FixtureId::K4 => "K4",
            FixtureId::K4minus => "K4minus",
            FixtureId::K33 => "K33",
            FixtureId::Cube => "Cube",
            FixtureId::Prism => "Prism",
            FixtureId::Heawood => "Heawood",
            FixtureId::Fig2b => "Fig2b",
            FixtureId::Fig2c => "Fig2c",
            FixtureId::Fig4a => "Fig4a",
            FixtureId::Fig4b => "Fig4b",
            FixtureId::Fig5a => "Fig5a",
            FixtureId::Fig5b => "Fig5b",
            FixtureId::Fig6a => "Fig6a",
            FixtureId::Fig6b => "Fig6b",
            FixtureId::Fig7a => "Fig7a",
            FixtureId::Fig7b => "Fig7b",
        }
    }
}

impl std::str::FromStr for FixtureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<FixtureId> {
        ALL_FIXTURES
            .iter()
            .copied()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownFixture(s.to_string()))
    }
}

impl std::fmt::Display for FixtureId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Returns the fixture graph with its documented deterministic numbering.
pub fn fixture(id: FixtureId) -> Graph {
    let (n, edges): (usize, &[(usize, usize)]) = match id {
        // Quadrilateral 0-1-2-3-0.
        FixtureId::C4 => (4, &[(0, 1), (1, 2), (2, 3), (0, 3)]),

        // Complete graph on four vertices.
        FixtureId::K4 => (4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),

        // K4 with the edge {1,3} removed. In the drawing: 0 = left corner,
        // 1 = bottom, 2 = right corner, 3 = top; 0 and 2 keep degree 3.
        FixtureId::K4minus => (4, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]),

        // Lower row 0,1,2 joined completely to upper row 3,4,5.
        FixtureId::K33 => {
            (6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])
        }

        // Outer square 0-1-2-3, inner square 4-5-6-7, spokes i — i+4.
        FixtureId::Cube => (
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (0, 3),
                (4, 5),
                (5, 6),
                (6, 7),
                (4, 7),
                (0, 4),
                (1, 5),
                (2, 6),
                (3, 7),
            ],
        ),

        // Triangles {0,1,2} and {3,4,5}; rungs 0-4, 1-5, 2-3 as drawn
        // (the rungs form the principal 3-edge cut of K4 * K4).
        FixtureId::Prism => (
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 4), (1, 5), (2, 3)],
        ),

        // 14-cycle 0..13 plus the seven chords pairing opposite arcs.
        // Vertex i here is vertex i+1 in the usual 1-based picture.
        FixtureId::Heawood => {
            const CHORDS: [(usize, usize); 7] =
                [(0, 5), (1, 10), (2, 7), (3, 12), (4, 9), (6, 11), (8, 13)];
            let mut edges: Vec<(usize, usize)> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
            edges.extend_from_slice(&CHORDS);
            return Graph::from_edges(14, edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))))
                .expect("Heawood transcription is a simple graph");
        }

        // Star product of two copies of K4minus that is bipartite: a 6-cycle
        // 0-3-1-5-2-4-0 plus the chord {1,4}. Classes {0,1,2} / {3,4,5}.
        FixtureId::Fig2b => (6, &[(0, 3), (0, 4), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5)]),

        // The other star product of two copies of K4minus: two paths
        // 0-4-2 and 3-5-1 joined by the matching {0,3},{1,4},{2,5};
        // contains a 5-cycle, and no 2-factor exists.
        FixtureId::Fig2c => (6, &[(0, 3), (0, 4), (1, 4), (1, 5), (2, 4), (2, 5), (3, 5)]),

        // Alias of Fig7a; see below.
        FixtureId::Fig4a => return fixture(FixtureId::Fig7a),
        // Alias of Fig7b; see below.
        FixtureId::Fig4b => return fixture(FixtureId::Fig7b),

        // Bipartite, no 2-factor: filled vertices 0..3 (left, bottom, top,
        // right in the drawing), empty vertices 4,5,6 (middle column).
        // 0 and 3 see all of 4,5,6; 1 sees 4,5; 2 sees 5,6.
        FixtureId::Fig5a => (
            7,
            &[(0, 4), (0, 5), (0, 6), (1, 4), (1, 5), (2, 5), (2, 6), (3, 4), (3, 5), (3, 6)],
        ),

        // Star product of two copies of Fig5a (attached at the two
        // degree-3 filled vertices); classes 0..5 / 6..11, principal cut
        // {3,6},{4,7},{5,8}. Not 2-factor Hamiltonian.
        FixtureId::Fig5b => (
            12,
            &[
                (0, 6),
                (0, 7),
                (0, 8),
                (1, 6),
                (1, 7),
                (2, 7),
                (2, 8),
                (3, 6),
                (3, 9),
                (3, 11),
                (4, 7),
                (4, 9),
                (4, 10),
                (4, 11),
                (5, 8),
                (5, 10),
                (5, 11),
            ],
        ),

        // Bipartite ladder-with-chords on classes 0..3 / 4..7; it has a
        // 2-factor made of two quadrilaterals, so it is not 2-factor
        // Hamiltonian.
        FixtureId::Fig6a => (
            8,
            &[
                (0, 4),
                (1, 5),
                (2, 6),
                (3, 7),
                (0, 5),
                (1, 6),
                (2, 7),
                (1, 4),
                (2, 5),
                (3, 6),
            ],
        ),

        // Star product of two copies of Fig6a, attached at a degree-3
        // vertex of each. Numbering: 0..3 = filled left part, 4..6 = empty
        // left part, 7..10 = empty right part, 11..13 = filled right part.
        // The drawing renders the edge {3,9} with its left endpoint on top
        // of vertex 4's column; transcribing it as {4's neighbour} would
        // leave vertex 3 with degree 1 and contradict this graph being a
        // star product of two copies of Fig6a, so {3,9} it is.
        FixtureId::Fig6b => (
            14,
            &[
                (0, 4),
                (1, 5),
                (2, 6),
                (7, 11),
                (8, 12),
                (9, 13),
                (0, 5),
                (1, 4),
                (1, 7),
                (2, 5),
                (2, 8),
                (3, 6),
                (3, 9),
                (8, 11),
                (9, 12),
                (10, 12),
                (10, 13),
            ],
        ),

        // Cubic graph assembled from a K5-minus-a-triangle block (0..4),
        // a cut vertex 5, a K5-minus-a-path block (6..10) and a
        // near-K5 block (11..15); all three edges at vertex 5 are bridges.
        // No perfect matching and no 2-factor.
        FixtureId::Fig7a => (
            16,
            &[
                (0, 1),
                (0, 2),
                (0, 4),
                (1, 2),
                (1, 3),
                (2, 4),
                (3, 4),
                (3, 5),
                (5, 6),
                (5, 11),
                (6, 7),
                (6, 8),
                (7, 9),
                (7, 10),
                (8, 9),
                (8, 10),
                (9, 10),
                (11, 12),
                (11, 14),
                (12, 13),
                (12, 15),
                (13, 14),
                (13, 15),
                (14, 15),
            ],
        ),

        // Star product of Fig7a and K4: vertex 13 of Fig7a is replaced by
        // the triangle 15,16,17 and the matching {12,15},{14,16},{13,17}.
        // Numbering: 0..12 = vertices 0..12 of Fig7a, 13 = old 14,
        // 14 = old 15, 15..17 = the triangle. Still cubic, still without
        // a perfect matching.
        FixtureId::Fig7b => (
            18,
            &[
                (0, 1),
                (0, 2),
                (0, 4),
                (1, 2),
                (1, 3),
                (2, 4),
                (3, 4),
                (3, 5),
                (5, 6),
                (5, 11),
                (6, 7),
                (6, 8),
                (7, 9),
                (7, 10),
                (8, 9),
                (8, 10),
                (9, 10),
                (11, 12),
                (11, 13),
                (12, 14),
                (13, 14),
                (15, 16),
                (15, 17),
                (16, 17),
                (12, 15),
                (14, 16),
                (13, 17),
            ],
        ),
    };
    Graph::from_edges(n, edges.iter().copied()).expect("fixture transcriptions are simple graphs")
}

/// All fixtures as graph6 lines plus a name sidecar, one name per line,
/// aligned with the graph lines.
pub fn fixture_bundle() -> (String, String) {
    let mut g6 = String::new();
    let mut names = String::new();
    for id in ALL_FIXTURES {
        let g = fixture(id);
        g6.push_str(&crate::graph6::encode(&g).expect("fixtures are small"));
        g6.push('\n');
        names.push_str(id.name());
        names.push('\n');
    }
    (g6, names)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_and_edge_counts_match_drawings() {
        let expect = [
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
        for (id, n, m) in expect {
            let g = fixture(id);
            assert_eq!((g.n(), g.m()), (n, m), "{id}");
        }
    }

    #[test]
    fn cubic_fixtures_have_degree_three_everywhere() {
        for id in [
            FixtureId::K4,
            FixtureId::K33,
            FixtureId::Cube,
            FixtureId::Prism,
            FixtureId::Heawood,
            FixtureId::Fig7a,
            FixtureId::Fig7b,
        ] {
            let g = fixture(id);
            assert!(g.is_cubic(), "{id} should be cubic");
            assert_eq!(g.vertices().map(|v| g.degree(v)).sum::<usize>(), 2 * g.m());
        }
    }

    #[test]
    fn bipartite_fixtures() {
        for (id, a, b) in [
            (FixtureId::K33, 3, 3),
            (FixtureId::Heawood, 7, 7),
            (FixtureId::Cube, 4, 4),
            (FixtureId::Fig2b, 3, 3),
            (FixtureId::Fig5a, 4, 3),
            (FixtureId::Fig5b, 6, 6),
            (FixtureId::Fig6a, 4, 4),
            (FixtureId::Fig6b, 7, 7),
        ] {
            let p = fixture(id).bipartition().unwrap_or_else(|| panic!("{id} should be bipartite"));
            assert_eq!((p.class_a.len(), p.class_b.len()), (a, b), "{id}");
        }
        for id in [FixtureId::K4, FixtureId::K4minus, FixtureId::Prism, FixtureId::Fig2c] {
            assert!(fixture(id).bipartition().is_none(), "{id} should have an odd cycle");
        }
    }

    #[test]
    fn heawood_girth_is_six() {
        assert_eq!(fixture(FixtureId::Heawood).girth(), Some(6));
    }

    #[test]
    fn fig7a_bridges_all_meet_the_cut_vertex() {
        let g = fixture(FixtureId::Fig7a);
        assert_eq!(g.bridges(), vec![(3, 5), (5, 6), (5, 11)]);
        assert!(!g.is_k_connected(2));
    }

    #[test]
    fn fixture_names_round_trip() {
        for id in ALL_FIXTURES {
            let back: FixtureId = id.name().parse().unwrap();
            assert_eq!(back, id);
        }
        assert!("Petersen".parse::<FixtureId>().is_err());
    }

    #[test]
    fn bundle_lines_align() {
        let (g6, names) = fixture_bundle();
        let g6: Vec<&str> = g6.lines().collect();
        let names: Vec<&str> = names.lines().collect();
        assert_eq!(g6.len(), ALL_FIXTURES.len());
        assert_eq!(names.len(), ALL_FIXTURES.len());
        for (line, id) in g6.iter().zip(ALL_FIXTURES) {
            assert_eq!(crate::graph6::decode(line).unwrap(), fixture(id));
        }
    }
}
