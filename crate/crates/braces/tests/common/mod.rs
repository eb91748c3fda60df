//! Shared test oracles: independent reference implementations used to
//! compute expected values. Everything here deliberately avoids the library
//! code paths it is used to check.

#![allow(dead_code)]

use braces::graph::Graph;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi graph with at least one vertex.
pub fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n.max(1), edges).expect("simple by construction")
}

/// Random cubic graph on an even number of vertices via the pairing model,
/// rejecting pairings with loops or parallel edges.
pub fn random_cubic_graph(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    assert!(n >= 4 && n % 2 == 0);
    loop {
        let mut stubs: Vec<usize> = (0..3 * n).map(|i| i / 3).collect();
        // Fisher-Yates.
        for i in (1..stubs.len()).rev() {
            let j = rng.gen_range(0..=i);
            stubs.swap(i, j);
        }
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(3 * n / 2);
        let mut ok = true;
        for pair in stubs.chunks(2) {
            let (a, b) = (pair[0], pair[1]);
            if a == b {
                ok = false;
                break;
            }
            edges.push((a.min(b), a.max(b)));
        }
        if !ok {
            continue;
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        return Graph::from_edges(n, edges).expect("simple after rejection");
    }
}

/// Bit-level graph6 reference encoder, assembled through a textual bit
/// string rather than the library's shift pipeline.
pub fn reference_graph6_encode(g: &Graph) -> String {
    assert!(g.n() <= 62, "reference encoder covers the short header only");
    let mut bits = String::new();
    for j in 1..g.n() {
        for i in 0..j {
            bits.push(if g.has_edge(i, j) { '1' } else { '0' });
        }
    }
    while bits.len() % 6 != 0 {
        bits.push('0');
    }
    let mut out = String::new();
    out.push((g.n() as u8 + 63) as char);
    for chunk in bits.as_bytes().chunks(6) {
        let mut v = 0u8;
        for &b in chunk {
            v = v * 2 + (b - b'0');
        }
        out.push((v + 63) as char);
    }
    out
}

/// Perfect matchings by dumb combination enumeration over edge subsets of
/// size n/2, with a disjointness test. Independent of the library's
/// lowest-vertex backtracking.
pub fn oracle_perfect_matchings(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    if g.n() % 2 != 0 {
        return out;
    }
    let want = g.n() / 2;
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    fn rec(
        g: &Graph,
        from: usize,
        want: usize,
        chosen: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if chosen.len() == want {
            out.push(chosen.clone());
            return;
        }
        if g.m() - from < want - chosen.len() {
            return;
        }
        for i in from..g.m() {
            let (u, v) = g.edges()[i];
            if chosen.iter().all(|&(a, b)| a != u && a != v && b != u && b != v) {
                chosen.push((u, v));
                rec(g, i + 1, want, chosen, out);
                chosen.pop();
            }
        }
    }
    rec(g, 0, want, &mut chosen, &mut out);
    out.sort();
    out
}

/// Girth by searching for a k-cycle for increasing k, via DFS paths.
pub fn oracle_girth(g: &Graph) -> Option<usize> {
    fn has_cycle_of_length(g: &Graph, k: usize) -> bool {
        fn dfs(g: &Graph, start: usize, path: &mut Vec<usize>, on: &mut Vec<bool>, k: usize) -> bool {
            let v = *path.last().unwrap();
            if path.len() == k {
                return g.has_edge(v, start);
            }
            for &w in g.adj(v) {
                if w > start && !on[w] {
                    on[w] = true;
                    path.push(w);
                    if dfs(g, start, path, on, k) {
                        return true;
                    }
                    path.pop();
                    on[w] = false;
                }
            }
            false
        }
        for start in 0..g.n() {
            let mut on = vec![false; g.n()];
            on[start] = true;
            let mut path = vec![start];
            if dfs(g, start, &mut path, &mut on, k) {
                return true;
            }
        }
        false
    }
    (3..=g.n()).find(|&k| has_cycle_of_length(g, k))
}

/// 2-factors by independent include/exclude recursion over the edge list
/// with degree caps.
pub fn oracle_two_factors(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    let mut deg = vec![0usize; g.n()];
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    fn rec(
        g: &Graph,
        i: usize,
        deg: &mut Vec<usize>,
        chosen: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if i == g.m() {
            if deg.iter().all(|&d| d == 2) {
                out.push(chosen.clone());
            }
            return;
        }
        // Feasibility: every vertex must still be able to reach degree 2
        // using edges from position i onward.
        let mut need: i64 = 0;
        for v in 0..g.n() {
            if deg[v] > 2 {
                return;
            }
            need += (2 - deg[v]) as i64;
        }
        let remaining = (g.m() - i) as i64;
        if need > 2 * remaining {
            return;
        }
        let (u, v) = g.edges()[i];
        if deg[u] < 2 && deg[v] < 2 {
            deg[u] += 1;
            deg[v] += 1;
            chosen.push((u, v));
            rec(g, i + 1, deg, chosen, out);
            chosen.pop();
            deg[u] -= 1;
            deg[v] -= 1;
        }
        rec(g, i + 1, deg, chosen, out);
    }
    rec(g, 0, &mut deg, &mut chosen, &mut out);
    out.sort();
    out.dedup();
    out
}

pub fn component_ids(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut comp = vec![usize::MAX; n];
    let mut c = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        comp[s] = c;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if comp[w] == usize::MAX {
                    comp[w] = c;
                    stack.push(w);
                }
            }
        }
        c += 1;
    }
    comp
}

/// Cyclic 4-connectivity oracle via vertex-subset cut enumeration:
/// for every X, if |δ(X)| < 4 then deleting δ(X) must leave at most one
/// component containing a cycle.
pub fn oracle_cyclically_4_connected(g: &Graph) -> bool {
    assert!(g.n() <= 20);
    for bits in 1u32..(1 << (g.n() - 1)) {
        let x: Vec<usize> =
            std::iter::once(0).chain((1..g.n()).filter(|&v| bits & (1 << (v - 1)) != 0)).collect();
        let inside = |v: usize| x.contains(&v);
        let cut: Vec<(usize, usize)> =
            g.edges().iter().copied().filter(|&(u, v)| inside(u) != inside(v)).collect();
        if cut.len() >= 4 {
            continue;
        }
        let rest: Vec<(usize, usize)> =
            g.edges().iter().copied().filter(|e| !cut.contains(e)).collect();
        let comp = component_ids(g.n(), &rest);
        let k = comp.iter().max().map_or(0, |&c| c + 1);
        let mut verts = vec![0usize; k];
        let mut edges = vec![0usize; k];
        for v in 0..g.n() {
            verts[comp[v]] += 1;
        }
        for &(u, _) in &rest {
            edges[comp[u]] += 1;
        }
        if (0..k).filter(|&c| edges[c] >= verts[c]).count() > 1 {
            return false;
        }
    }
    true
}

/// Alternating-cycle oracle: the union, over every perfect matching M, of
/// the cycles that alternate between M and its complement. Returned as
/// canonical vertex sequences (least vertex first, then the smaller
/// neighbour), sorted.
pub fn oracle_alternating_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let matchings = oracle_perfect_matchings(g);
    let mut found: std::collections::BTreeSet<Vec<usize>> = std::collections::BTreeSet::new();
    for m in &matchings {
        let partner: Vec<usize> = {
            let mut p = vec![usize::MAX; g.n()];
            for &(u, v) in m {
                p[u] = v;
                p[v] = u;
            }
            p
        };
        // An alternating cycle contains the matching edge of each of its
        // vertices, so its least vertex has its partner inside the cycle and
        // above it; start only there, matching edge first.
        for s in 0..g.n() {
            if partner[s] < s {
                continue;
            }
            let mut path = vec![s, partner[s]];
            let mut on = vec![false; g.n()];
            on[s] = true;
            on[partner[s]] = true;
            walk(g, &partner, s, &mut path, &mut on, false, &mut found);
        }
    }
    fn walk(
        g: &Graph,
        partner: &[usize],
        start: usize,
        path: &mut Vec<usize>,
        on: &mut Vec<bool>,
        need_matching: bool,
        found: &mut std::collections::BTreeSet<Vec<usize>>,
    ) {
        let v = *path.last().unwrap();
        if need_matching {
            let w = partner[v];
            if w < start || on[w] {
                return;
            }
            on[w] = true;
            path.push(w);
            walk(g, partner, start, path, on, false, found);
            path.pop();
            on[w] = false;
        } else {
            for &w in g.adj(v) {
                if w == partner[v] {
                    continue;
                }
                if w == start {
                    // Even length is automatic: edges alternate M, non-M.
                    let mut canon = path.clone();
                    if canon[1] > canon[canon.len() - 1] {
                        canon[1..].reverse();
                    }
                    found.insert(canon);
                    continue;
                }
                if w < start || on[w] {
                    continue;
                }
                on[w] = true;
                path.push(w);
                walk(g, partner, start, path, on, true, found);
                path.pop();
                on[w] = false;
            }
        }
    }
    found.into_iter().collect()
}

/// Face-based orientation of a planar embedding: orient edges so that every
/// face but one has an odd number of forward darts, peeling faces with one
/// undecided edge at a time. For a planar graph this is a Pfaffian
/// orientation, built without the library's switching-class search.
pub fn fkt_orientation(g: &Graph, faces: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let m = g.m();
    // Dart (a, b) of face f: edge {a,b} traversed a -> b.
    let face_darts: Vec<Vec<(usize, usize)>> = faces
        .iter()
        .map(|walk| {
            (0..walk.len()).map(|i| (walk[i], walk[(i + 1) % walk.len()])).collect()
        })
        .collect();
    let mut direction: Vec<Option<(usize, usize)>> = vec![None; m];
    // A spanning tree takes its natural direction; the face peeling then
    // decides one remaining edge per bounded face.
    {
        let mut seen = vec![false; g.n()];
        let mut queue = std::collections::VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &w in g.adj(v) {
                if !seen[w] {
                    seen[w] = true;
                    let idx = g.edge_index(v, w).unwrap();
                    direction[idx] = Some(g.edges()[idx]);
                    queue.push_back(w);
                }
            }
        }
    }
    let mut done = vec![false; faces.len()];
    // The last face is treated as the outer one and never processed.
    done[faces.len() - 1] = true;
    loop {
        let mut progressed = false;
        for (fi, darts) in face_darts.iter().enumerate() {
            if done[fi] {
                continue;
            }
            let undecided: Vec<&(usize, usize)> = darts
                .iter()
                .filter(|&&(a, b)| direction[g.edge_index(a, b).unwrap()].is_none())
                .collect();
            if undecided.len() != 1 {
                continue;
            }
            let forward = darts
                .iter()
                .filter(|&&(a, b)| direction[g.edge_index(a, b).unwrap()] == Some((a, b)))
                .count();
            let &&(a, b) = undecided.first().unwrap();
            let idx = g.edge_index(a, b).unwrap();
            direction[idx] = if forward % 2 == 0 { Some((a, b)) } else { Some((b, a)) };
            done[fi] = true;
            progressed = true;
        }
        if !progressed {
            break;
        }
    }
    // Any edges not decided by the peeling (tree-like leftovers) get their
    // natural direction.
    direction
        .into_iter()
        .enumerate()
        .map(|(i, d)| d.unwrap_or(g.edges()[i]))
        .collect()
}

// ---------------------------------------------------------------------------
// Corpus generation: bipartite graphs as 0-1 matrices with constrained line
// sums, enumerated with non-increasing rows, then connected-filtered and
// deduplicated up to isomorphism.
// ---------------------------------------------------------------------------

/// All k x k 0-1 matrices with every row and column summing to exactly
/// `row_sum`, rows non-increasing as bit masks. Calls `emit` with each.
fn sorted_matrices(k: usize, row_sum: usize, emit: &mut impl FnMut(&[u16])) {
    let candidates: Vec<u16> =
        (0..(1u16 << k)).filter(|m| m.count_ones() as usize == row_sum).rev().collect();
    let mut rows: Vec<u16> = Vec::with_capacity(k);
    let mut col_used = vec![0usize; k];
    fn rec(
        k: usize,
        row_sum: usize,
        candidates: &[u16],
        rows: &mut Vec<u16>,
        col_used: &mut Vec<usize>,
        emit: &mut impl FnMut(&[u16]),
    ) {
        if rows.len() == k {
            emit(rows);
            return;
        }
        let remaining = k - rows.len();
        let max_prev = rows.last().copied().unwrap_or(u16::MAX);
        for &cand in candidates {
            if cand > max_prev {
                continue;
            }
            let mut ok = true;
            for j in 0..k {
                if cand & (1 << j) != 0 && col_used[j] == row_sum {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            // Column feasibility: every column must be fillable by the
            // remaining rows.
            for j in 0..k {
                let add = usize::from(cand & (1 << j) != 0);
                if row_sum - (col_used[j] + add) > remaining - 1 {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            for j in 0..k {
                if cand & (1 << j) != 0 {
                    col_used[j] += 1;
                }
            }
            rows.push(cand);
            rec(k, row_sum, candidates, rows, col_used, emit);
            rows.pop();
            for j in 0..k {
                if cand & (1 << j) != 0 {
                    col_used[j] -= 1;
                }
            }
        }
    }
    rec(k, row_sum, &candidates, &mut rows, &mut col_used, emit);
}

fn matrix_to_graph(k: usize, rows: &[u16]) -> Graph {
    let mut edges = Vec::new();
    for (i, &row) in rows.iter().enumerate() {
        for j in 0..k {
            if row & (1 << j) != 0 {
                edges.push((i, k + j));
            }
        }
    }
    Graph::from_edges(2 * k, edges).expect("matrix graphs are simple")
}

/// Cheap isomorphism invariant: codegree multiset plus girth.
fn invariant_key(g: &Graph) -> Vec<usize> {
    let mut codegrees = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let c = g.adj(u).iter().filter(|&&w| g.has_edge(w, v)).count();
            codegrees.push(c);
        }
    }
    codegrees.sort_unstable();
    codegrees.push(g.girth().unwrap_or(0));
    codegrees.push(g.m());
    codegrees
}

fn dedup_push(
    classes: &mut std::collections::HashMap<Vec<usize>, Vec<Graph>>,
    out: &mut Vec<Graph>,
    g: Graph,
) {
    let key = invariant_key(&g);
    let bucket = classes.entry(key).or_default();
    if bucket.iter().any(|h| braces::iso::are_isomorphic(h, &g)) {
        return;
    }
    bucket.push(g.clone());
    out.push(g);
}

/// The multiplicity-corrected count of labelled matrices represented by one
/// non-increasing row multiset: rows! / prod(multiplicities!).
fn orderings(rows: &[u16]) -> u128 {
    let mut fact = vec![1u128; rows.len() + 1];
    for i in 1..=rows.len() {
        fact[i] = fact[i - 1] * i as u128;
    }
    let mut total = fact[rows.len()];
    let mut i = 0;
    while i < rows.len() {
        let mut j = i;
        while j < rows.len() && rows[j] == rows[i] {
            j += 1;
        }
        total /= fact[j - i];
        i = j;
    }
    total
}

/// Independent count of k x k 0-1 matrices with all line sums `s`, by
/// dynamic programming over column capacity profiles.
pub fn count_regular_matrices(k: usize, s: usize) -> u128 {
    assert!(s == 3, "profile DP written for line sum 3");
    // State: numbers of columns with remaining capacity 1, 2, 3
    // (capacity-0 columns are implicit).
    let binom = |n: usize, r: usize| -> u128 {
        if r > n {
            return 0;
        }
        let mut x = 1u128;
        for i in 0..r {
            x = x * (n - i) as u128 / (i + 1) as u128;
        }
        x
    };
    let mut table: std::collections::HashMap<(usize, usize, usize, usize), u128> =
        std::collections::HashMap::new();
    table.insert((k, 0, 0, k), 1); // k rows left, all columns capacity 3
    for _ in 0..k {
        let mut next = std::collections::HashMap::new();
        for (&(rows, c1, c2, c3), &ways) in &table {
            // choose a columns of capacity 1, b of capacity 2, c of capacity 3
            for a in 0..=3usize.min(c1) {
                for b in 0..=(3 - a).min(c2) {
                    let c = 3 - a - b;
                    if c > c3 {
                        continue;
                    }
                    let w = ways * binom(c1, a) * binom(c2, b) * binom(c3, c);
                    if w == 0 {
                        continue;
                    }
                    // capacity-1 columns chosen drop out; capacity-2 -> 1; 3 -> 2.
                    let key = (rows - 1, c1 - a + b, c2 - b + c, c3 - c);
                    *next.entry(key).or_insert(0) += w;
                }
            }
        }
        table = next;
    }
    table.get(&(0, 0, 0, 0)).copied().unwrap_or(0)
}

/// Complete corpus of connected cubic bipartite graphs on 2k vertices up to
/// isomorphism, plus the labelled matrix count it represents (for the
/// completeness cross-check).
pub fn cubic_bipartite_corpus(k: usize) -> (Vec<Graph>, u128) {
    let mut classes = std::collections::HashMap::new();
    let mut out = Vec::new();
    let mut labelled: u128 = 0;
    sorted_matrices(k, 3, &mut |rows| {
        labelled += orderings(rows);
        let g = matrix_to_graph(k, rows);
        if g.is_connected() {
            dedup_push(&mut classes, &mut out, g);
        }
    });
    (out, labelled)
}

/// Complete corpus of connected bipartite graphs with balanced classes of
/// size k and minimum degree 3 on both sides, up to isomorphism.
pub fn min_degree_three_bipartite_corpus(k: usize) -> Vec<Graph> {
    let candidates: Vec<u16> =
        (0..(1u16 << k)).filter(|m| m.count_ones() >= 3).rev().collect();
    let mut classes = std::collections::HashMap::new();
    let mut out = Vec::new();
    let mut rows: Vec<u16> = Vec::with_capacity(k);
    let mut col_used = vec![0usize; k];
    fn rec(
        k: usize,
        candidates: &[u16],
        rows: &mut Vec<u16>,
        col_used: &mut Vec<usize>,
        classes: &mut std::collections::HashMap<Vec<usize>, Vec<Graph>>,
        out: &mut Vec<Graph>,
    ) {
        if rows.len() == k {
            if col_used.iter().all(|&c| c >= 3) {
                let g = matrix_to_graph(k, rows);
                if g.is_connected() {
                    dedup_push(classes, out, g);
                }
            }
            return;
        }
        let remaining = k - rows.len();
        let max_prev = rows.last().copied().unwrap_or(u16::MAX);
        for &cand in candidates {
            if cand > max_prev {
                continue;
            }
            // Column feasibility: each column must still be able to reach 3.
            let ok = (0..k).all(|j| {
                let add = usize::from(cand & (1 << j) != 0);
                col_used[j] + add + (remaining - 1) >= 3
            });
            if !ok {
                continue;
            }
            for j in 0..k {
                if cand & (1 << j) != 0 {
                    col_used[j] += 1;
                }
            }
            rows.push(cand);
            rec(k, candidates, rows, col_used, classes, out);
            rows.pop();
            for j in 0..k {
                if cand & (1 << j) != 0 {
                    col_used[j] -= 1;
                }
            }
        }
    }
    rec(k, &candidates, &mut rows, &mut col_used, &mut classes, &mut out);
    out
}

/// 2-connectivity oracle: connected, at least 3 vertices, and no cut
/// vertex, decided by per-vertex removal and BFS.
pub fn oracle_two_connected(g: &Graph) -> bool {
    fn connected_without(g: &Graph, skip: Option<usize>) -> bool {
        let start = match (0..g.n()).find(|&v| Some(v) != skip) {
            Some(s) => s,
            None => return true,
        };
        let mut seen = vec![false; g.n()];
        seen[start] = true;
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in g.adj(v) {
                if Some(w) != skip && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == g.n() - usize::from(skip.is_some())
    }
    if g.n() < 3 || !connected_without(g, None) {
        return false;
    }
    (0..g.n()).all(|v| connected_without(g, Some(v)))
}
