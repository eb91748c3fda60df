use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Loops and parallel edges are unrepresentable: construction rejects them,
/// and operations that could create them (contractions, products) must
/// de-duplicate explicitly before building their result. Values are immutable
/// after construction and cheap to share across threads.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// Normalised `(u, v)` with `u < v`, sorted lexicographically.
    edges: Vec<(usize, usize)>,
    /// Sorted neighbour list per vertex, derived from `edges`.
    adj: Vec<Vec<usize>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.edges.len(), self.edges)
    }
}

impl Graph {
    /// Builds a graph from an edge list. Rejects out-of-range endpoints,
    /// loops and repeated edges.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut es: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a >= n {
                return Err(Error::VertexOutOfRange { v: a, n });
            }
            if b >= n {
                return Err(Error::VertexOutOfRange { v: b, n });
            }
            if a == b {
                return Err(Error::LoopEdge { v: a });
            }
            es.push((a.min(b), a.max(b)));
        }
        es.sort_unstable();
        for w in es.windows(2) {
            if w[0] == w[1] {
                return Err(Error::ParallelEdge { u: w[0].0, v: w[0].1 });
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &es {
            adj[u].push(v);
            adj[v].push(u);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(Graph { n, edges: es, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adj(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of `{u,v}` in the sorted edge list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let e = (u.min(v), u.max(v));
        self.edges.binary_search(&e).ok()
    }

    pub fn is_cubic(&self) -> bool {
        self.vertices().all(|v| self.degree(v) == 3)
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regularity(&self) -> Option<usize> {
        let k = self.degree(0);
        if self.vertices().all(|v| self.degree(v) == k) {
            Some(k)
        } else {
            None
        }
    }

    /// New graph with the listed edges removed. Errors if any is absent.
    pub fn without_edges(&self, remove: &[(usize, usize)]) -> Result<Graph> {
        let mut gone = vec![false; self.edges.len()];
        for &(u, v) in remove {
            match self.edge_index(u, v) {
                Some(i) => gone[i] = true,
                None => return Err(Error::EdgeNotInGraph { u, v }),
            }
        }
        let kept = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| !gone[*i])
            .map(|(_, &e)| e);
        Graph::from_edges(self.n, kept)
    }

    /// Induced subgraph on `keep` (sorted, deduplicated internally).
    /// Returns the subgraph together with the map `new index -> old vertex`.
    pub fn induced(&self, keep: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut verts: Vec<usize> = keep.to_vec();
        verts.sort_unstable();
        verts.dedup();
        if verts.is_empty() {
            return Err(Error::EmptyGraph);
        }
        if let Some(&v) = verts.last() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { v, n: self.n });
            }
        }
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let es = self.edges.iter().filter_map(|&(u, v)| {
            if pos[u] != usize::MAX && pos[v] != usize::MAX {
                Some((pos[u], pos[v]))
            } else {
                None
            }
        });
        let g = Graph::from_edges(verts.len(), es)?;
        Ok((g, verts))
    }

    /// Component id per vertex, ids numbered by smallest contained vertex order.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.components().iter().max().map_or(0, |&c| c + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Length of a shortest cycle; `None` for forests.
    ///
    /// Runs one BFS per root: the shortest cycle through the BFS root is
    /// detected when a non-tree edge joins two vertices whose depths sum
    /// appropriately. O(n·m), fine at the scales this crate targets.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            queue.clear();
            dist[root] = 0;
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        // Cycle through the root has length dist[v] + dist[w] + 1;
                        // for other cycles this is an overestimate, but every
                        // shortest cycle is found exactly from one of its own
                        // vertices as root.
                        let len = dist[v] + dist[w] + 1;
                        if best.map_or(true, |b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    /// True when the graph contains an odd cycle.
    pub fn has_odd_cycle(&self) -> bool {
        self.two_colouring().is_none()
    }

    fn two_colouring(&self) -> Option<Vec<bool>> {
        let mut colour = vec![None; self.n];
        let mut queue = std::collections::VecDeque::new();
        for s in 0..self.n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                let cv = colour[v].unwrap();
                for &w in &self.adj[v] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!cv);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cv => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(Option::unwrap).collect())
    }

    /// Canonical bipartition, or `None` when an odd cycle exists.
    ///
    /// Canonical means: in every connected component, the class containing
    /// the component's lowest-numbered vertex goes to `class_a`.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let colour = self.two_colouring()?;
        // two_colouring starts each component at its lowest vertex with
        // colour `false`, so class A is exactly the `false` side.
        let mut a = Vec::new();
        let mut b = Vec::new();
        for v in 0..self.n {
            if colour[v] {
                b.push(v);
            } else {
                a.push(v);
            }
        }
        Some(Bipartition { class_a: a, class_b: b })
    }

    /// Edges whose deletion increases the component count, sorted.
    pub fn bridges(&self) -> Vec<(usize, usize)> {
        // Iterative DFS low-point computation.
        let mut disc = vec![usize::MAX; self.n];
        let mut low = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        let mut timer = 0;
        // Stack entries: (vertex, parent edge index into adj[v], next child position)
        let mut stack: Vec<(usize, usize, usize)> = Vec::new();
        for root in 0..self.n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            stack.push((root, usize::MAX, 0));
            while let Some(&mut (v, pe, ref mut idx)) = stack.last_mut() {
                if *idx < self.adj[v].len() {
                    let w = self.adj[v][*idx];
                    let edge_id = self.edge_index(v, w).unwrap();
                    *idx += 1;
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, edge_id, 0));
                    } else if edge_id != pe {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&mut (p, _, _)) = stack.last_mut() {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            out.push((p.min(v), p.max(v)));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Vertex connectivity test per the usual convention: true iff the graph
    /// is connected, has more than `k` vertices, and no vertex set of size
    /// `< k` disconnects it. Under this convention the complete graph on n
    /// vertices is exactly (n−1)-connected.
    pub fn is_k_connected(&self, k: usize) -> bool {
        assert!(k >= 1, "connectivity parameter must be positive");
        if !self.is_connected() {
            return false;
        }
        if self.n < k + 1 {
            return false;
        }
        if k == 1 {
            return true;
        }
        let mut sep = Vec::new();
        self.separator_search(0, k - 1, &mut sep)
    }

    /// Returns false if some separator of size <= limit (built on top of
    /// `chosen`) disconnects the graph.
    fn separator_search(&self, from: usize, limit: usize, chosen: &mut Vec<usize>) -> bool {
        if !chosen.is_empty() && !self.connected_avoiding(chosen) {
            return false;
        }
        if limit == 0 {
            return true;
        }
        for v in from..self.n {
            chosen.push(v);
            if !self.separator_search(v + 1, limit - 1, chosen) {
                chosen.pop();
                return false;
            }
            chosen.pop();
        }
        true
    }

    fn connected_avoiding(&self, removed: &[usize]) -> bool {
        let mut skip = vec![false; self.n];
        for &v in removed {
            skip[v] = true;
        }
        let start = match (0..self.n).find(|&v| !skip[v]) {
            Some(s) => s,
            None => return true,
        };
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        seen[start] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !skip[w] && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n - removed.len()
    }

    /// Cyclic 4-connectivity for cubic graphs: no edge set of size < 4 leaves
    /// two components that each contain a cycle. Rejects non-cubic input.
    pub fn is_cyclically_4_connected(&self) -> Result<bool> {
        if !self.is_cubic() {
            return Err(Error::NotCubic);
        }
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        let m = self.m();
        let mut cut = Vec::with_capacity(3);
        // Every violating edge set contains a violating minimal cut, and for
        // |F| <= 3 checking all edge subsets of size <= 3 is cheap.
        fn rec(g: &Graph, from: usize, left: usize, cut: &mut Vec<(usize, usize)>) -> bool {
            if !cut.is_empty() && !cyclic_components_ok(g, cut) {
                return false;
            }
            if left == 0 {
                return true;
            }
            for i in from..g.m() {
                cut.push(g.edges[i]);
                if !rec(g, i + 1, left - 1, cut) {
                    cut.pop();
                    return false;
                }
                cut.pop();
            }
            true
        }
        fn cyclic_components_ok(g: &Graph, cut: &[(usize, usize)]) -> bool {
            let h = g.without_edges(cut).expect("cut edges come from the graph");
            let comp = h.components();
            let k = comp.iter().max().map_or(0, |&c| c + 1);
            let mut verts = vec![0usize; k];
            let mut edges = vec![0usize; k];
            for v in 0..h.n {
                verts[comp[v]] += 1;
            }
            for &(u, _) in h.edges() {
                edges[comp[u]] += 1;
            }
            // A component contains a cycle iff it has at least as many edges
            // as vertices.
            (0..k).filter(|&c| edges[c] >= verts[c]).count() <= 1
        }
        let _ = m;
        Ok(rec(self, 0, 3, &mut cut))
    }
}

/// The two colour classes of a bipartite graph, in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub class_a: Vec<usize>,
    pub class_b: Vec<usize>,
}

impl Bipartition {
    pub fn class_of(&self, v: usize) -> Option<bool> {
        if self.class_a.binary_search(&v).is_ok() {
            Some(false)
        } else if self.class_b.binary_search(&v).is_ok() {
            Some(true)
        } else {
            None
        }
    }
}
