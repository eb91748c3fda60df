//! Exact graph isomorphism by degree-refined backtracking. Meant for the
//! handful of vertices the rest of the crate works with; no canonical
//! labelling, just a yes/no decision.

use crate::graph::Graph;

/// Iterated neighbour-degree refinement: vertices get colours, colours are
/// refined by the multiset of neighbour colours until stable.
fn refine_colours(g: &Graph) -> Vec<u64> {
    let mut colour: Vec<u64> = (0..g.n()).map(|v| g.degree(v) as u64).collect();
    for _ in 0..g.n() {
        let mut sig: Vec<(u64, Vec<u64>)> = (0..g.n())
            .map(|v| {
                let mut nb: Vec<u64> = g.adj(v).iter().map(|&w| colour[w]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut sorted = sig.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<u64> =
            sig.drain(..).map(|s| sorted.binary_search(&s).unwrap() as u64).collect();
        if next == colour {
            break;
        }
        colour = next;
    }
    colour
}

/// Mapping order: BFS discovery, so that every vertex after a component
/// root has an already-mapped neighbour and candidate images come from one
/// mapped neighbourhood. This is what keeps the search shallow on regular
/// graphs, where colour refinement alone separates nothing.
fn bfs_order(g: &Graph) -> (Vec<usize>, Vec<Option<usize>>) {
    let mut order = Vec::with_capacity(g.n());
    let mut parent: Vec<Option<usize>> = vec![None; g.n()];
    let mut seen = vec![false; g.n()];
    let mut queue = std::collections::VecDeque::new();
    for root in 0..g.n() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in g.adj(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    queue.push_back(w);
                }
            }
        }
    }
    (order, parent)
}

/// Exact isomorphism test.
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    if g1.n() != g2.n() || g1.m() != g2.m() {
        return false;
    }
    let c1 = refine_colours(g1);
    let c2 = refine_colours(g2);
    let mut h1 = c1.clone();
    let mut h2 = c2.clone();
    h1.sort_unstable();
    h2.sort_unstable();
    if h1 != h2 {
        return false;
    }

    let (order, parent) = bfs_order(g1);
    let mut image = vec![usize::MAX; g1.n()];
    let mut used = vec![false; g2.n()];

    fn rec(
        g1: &Graph,
        g2: &Graph,
        c1: &[u64],
        c2: &[u64],
        order: &[usize],
        parent: &[Option<usize>],
        pos: usize,
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        // Candidates: the whole of g2 for component roots, otherwise the
        // neighbours of the parent's image.
        let candidates: Vec<usize> = match parent[v] {
            None => (0..g2.n()).collect(),
            Some(p) => g2.adj(image[p]).to_vec(),
        };
        'candidates: for w in candidates {
            if used[w] || c2[w] != c1[v] || g2.degree(w) != g1.degree(v) {
                continue;
            }
            // Forward adjacency preservation suffices: an injective map
            // sending every edge to an edge is an isomorphism once the edge
            // counts agree.
            for &u in g1.adj(v) {
                let iu = image[u];
                if iu != usize::MAX && !g2.has_edge(iu, w) {
                    continue 'candidates;
                }
            }
            image[v] = w;
            used[w] = true;
            if rec(g1, g2, c1, c2, order, parent, pos + 1, image, used) {
                return true;
            }
            image[v] = usize::MAX;
            used[w] = false;
        }
        false
    }

    rec(g1, g2, &c1, &c2, &order, &parent, 0, &mut image, &mut used)
}
