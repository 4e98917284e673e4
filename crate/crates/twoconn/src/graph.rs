//! Simple undirected graphs with the connectivity machinery the spectrum
//! search and the theorem checkers are built on.
//!
//! Vertices are dense integers `0..n`. A [`Graph`] is immutable after
//! construction, so every operation here is read-only and safe to call from
//! concurrent threads. Witness sets are always returned in canonical sorted
//! order, and pattern detectors return the lexicographically smallest
//! qualifying vertex set so results are reproducible.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::{self, SubsetTester};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("invalid edge ({u}, {v}) for a graph on {n} vertices")]
    InvalidEdge { u: usize, v: usize, n: usize },
    #[error("invalid vertex {v} for a graph on {n} vertices")]
    InvalidVertex { v: usize, n: usize },
    #[error("graph is not connected")]
    NotConnected,
}

/// A sorted, duplicate-free set of vertex ids.
///
/// The derived `Ord` compares the sorted member lists lexicographically,
/// which is the canonical witness order used everywhere in this crate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, Default)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    pub fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet(members)
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    /// Position of `v` within the sorted member list, if present.
    pub fn rank(&self, v: usize) -> Option<usize> {
        self.0.binary_search(&v).ok()
    }

    pub fn union_with(&self, extra: &[usize]) -> VertexSet {
        let mut m = self.0.clone();
        m.extend_from_slice(extra);
        VertexSet::new(m)
    }

    pub fn without(&self, removed: &[usize]) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|v| !removed.contains(v)).collect())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        VertexSet::new(v)
    }
}

/// Block/cut-vertex decomposition of a connected graph.
///
/// Each block is the vertex set of a maximal 2-connected piece or of a
/// bridge (a K2). Every edge of the host lies in exactly one block, and a
/// vertex is a cut vertex iff it lies in at least two blocks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
}

/// Simple undirected graph: no self-loops, no parallel edges, symmetric
/// adjacency, all neighbor ids in `[0, n)`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    masks: Vec<Box<[u64]>>,
    words: usize,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.m)
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are collapsed;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let words = bitset::words_for(n);
        let mut masks: Vec<Box<[u64]>> =
            (0..n).map(|_| vec![0u64; words].into_boxed_slice()).collect();
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(GraphError::InvalidEdge { u, v, n });
            }
            bitset::set_bit(&mut masks[u], v);
            bitset::set_bit(&mut masks[v], u);
        }
        let adj: Vec<Vec<usize>> = masks.iter().map(|m| bitset::iter_bits(m).collect()).collect();
        let m = adj.iter().map(|a| a.len()).sum::<usize>() / 2;
        Ok(Graph { n, adj, masks, words, m })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && bitset::test_bit(&self.masks[u], v)
    }

    /// All edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub(crate) fn masks(&self) -> &[Box<[u64]>] {
        &self.masks
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    /// Subgraph induced by `s`, relabeled by rank within `s`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        for v in s.iter() {
            if v >= self.n {
                return Err(GraphError::InvalidVertex { v, n: self.n });
            }
        }
        let mut edges = Vec::new();
        for (i, u) in s.iter().enumerate() {
            for (j, v) in s.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edge_list(s.len(), &edges)
    }

    /// The graph with one vertex removed, relabeled by rank.
    pub fn without_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&VertexSet::from_sorted(keep))
            .expect("members are in range")
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// True iff the graph has order >= 3, is connected, and has no cut
    /// vertex. C3 is the smallest 2-connected graph under this convention;
    /// K2 never qualifies.
    pub fn is_two_connected(&self) -> bool {
        self.n >= 3 && self.is_connected() && !self.has_cut_vertex()
    }

    fn has_cut_vertex(&self) -> bool {
        // Lowpoint DFS over the first component only; callers check
        // connectivity separately.
        if self.n == 0 {
            return false;
        }
        let mut num = vec![usize::MAX; self.n];
        let mut low = vec![0usize; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut timer = 0usize;
        // Iterative DFS: (vertex, neighbor index).
        let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
        num[0] = timer;
        low[0] = timer;
        timer += 1;
        let mut root_children = 0usize;
        while let Some(&mut (u, ref mut idx)) = stack.last_mut() {
            if *idx < self.adj[u].len() {
                let v = self.adj[u][*idx];
                *idx += 1;
                if num[v] == usize::MAX {
                    parent[v] = u;
                    num[v] = timer;
                    low[v] = timer;
                    timer += 1;
                    if u == 0 {
                        root_children += 1;
                    }
                    stack.push((v, 0));
                } else if v != parent[u] {
                    low[u] = low[u].min(num[v]);
                }
            } else {
                stack.pop();
                let p = parent[u];
                if p != usize::MAX {
                    low[p] = low[p].min(low[u]);
                    if p != 0 && low[u] >= num[p] {
                        return true;
                    }
                }
            }
        }
        root_children >= 2
    }

    /// Standard block/cut-vertex decomposition.
    pub fn block_decomposition(&self) -> Result<BlockDecomposition, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::NotConnected);
        }
        if self.n == 1 {
            return Ok(BlockDecomposition { blocks: vec![], cut_vertices: VertexSet::default() });
        }
        let mut num = vec![usize::MAX; self.n];
        let mut low = vec![0usize; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut timer = 0usize;
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();
        let mut blocks: Vec<BTreeSet<usize>> = Vec::new();
        let mut cuts: BTreeSet<usize> = BTreeSet::new();
        let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
        num[0] = 0;
        low[0] = 0;
        timer += 1;
        let mut root_children = 0usize;
        while let Some(&mut (u, ref mut idx)) = stack.last_mut() {
            if *idx < self.adj[u].len() {
                let v = self.adj[u][*idx];
                *idx += 1;
                if num[v] == usize::MAX {
                    parent[v] = u;
                    num[v] = timer;
                    low[v] = timer;
                    timer += 1;
                    if u == 0 {
                        root_children += 1;
                    }
                    edge_stack.push((u, v));
                    stack.push((v, 0));
                } else if v != parent[u] && num[v] < num[u] {
                    edge_stack.push((u, v));
                    low[u] = low[u].min(num[v]);
                }
            } else {
                stack.pop();
                let p = parent[u];
                if p != usize::MAX {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= num[p] {
                        // Everything pushed after (p, u) is one block.
                        let mut block = BTreeSet::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            block.insert(a);
                            block.insert(b);
                            if (a, b) == (p, u) {
                                break;
                            }
                        }
                        blocks.push(block);
                        if p != 0 {
                            cuts.insert(p);
                        }
                    }
                }
            }
        }
        if root_children >= 2 {
            cuts.insert(0);
        }
        let mut blocks: Vec<VertexSet> = blocks
            .into_iter()
            .map(|b| VertexSet::from_sorted(b.into_iter().collect()))
            .collect();
        blocks.sort();
        Ok(BlockDecomposition {
            blocks,
            cut_vertices: VertexSet::from_sorted(cuts.into_iter().collect()),
        })
    }

    /// Minimum number of vertices whose deletion disconnects the graph or
    /// leaves fewer than two vertices. `vertex_connectivity(K_n) = n - 1`.
    ///
    /// Small instances are decided by exhaustive cut enumeration, larger
    /// ones by unit-capacity max-flow; the contract is the value, not the
    /// method.
    pub fn vertex_connectivity(&self) -> usize {
        if self.n <= 1 {
            return 0;
        }
        if !self.is_connected() {
            return 0;
        }
        if self.m == self.n * (self.n - 1) / 2 {
            return self.n - 1;
        }
        let delta = self.min_degree();
        // Non-complete: the connectivity is at most the minimum degree.
        let mut work: u128 = 0;
        let mut feasible = true;
        for s in 1..=delta {
            work = work.saturating_add(binomial(self.n, s));
            if work > 300_000 {
                feasible = false;
                break;
            }
        }
        if feasible {
            self.connectivity_by_cut_enumeration(delta)
        } else {
            self.connectivity_by_max_flow(delta)
        }
    }

    fn connectivity_by_cut_enumeration(&self, delta: usize) -> usize {
        let mut tester = SubsetTester::new(self.words);
        let full: Vec<u64> = {
            let mut f = vec![0u64; self.words];
            for v in 0..self.n {
                bitset::set_bit(&mut f, v);
            }
            f
        };
        for s in 1..=delta {
            let mut found = false;
            let mut cut = vec![0usize; s];
            self.for_each_combination(s, &mut cut, 0, 0, &mut |cut| {
                let mut rem = full.clone();
                for &c in cut.iter() {
                    bitset::clear_bit(&mut rem, c);
                }
                if !tester.connected(self.masks(), &rem) {
                    found = true;
                    true
                } else {
                    false
                }
            });
            if found {
                return s;
            }
        }
        // Unreachable for non-complete connected graphs, but keep a sane
        // answer for defensive callers.
        self.n - 1
    }

    fn for_each_combination(
        &self,
        size: usize,
        buf: &mut Vec<usize>,
        depth: usize,
        start: usize,
        stop: &mut impl FnMut(&Vec<usize>) -> bool,
    ) -> bool {
        if depth == size {
            return stop(buf);
        }
        for v in start..self.n {
            if self.n - v < size - depth {
                break;
            }
            buf[depth] = v;
            if self.for_each_combination(size, buf, depth + 1, v + 1, stop) {
                return true;
            }
        }
        false
    }

    fn connectivity_by_max_flow(&self, delta: usize) -> usize {
        // Some minimum cut misses at least one of any delta+1 vertices, so
        // flows from those sources to their non-neighbors reach it.
        let sources: Vec<usize> = (0..self.n).take(delta + 1).collect();
        let mut best = self.n - 1;
        for &s in &sources {
            for t in 0..self.n {
                if t == s || self.has_edge(s, t) {
                    continue;
                }
                let lambda = self.local_vertex_connectivity(s, t, best);
                best = best.min(lambda);
            }
        }
        best
    }

    /// Max number of internally vertex-disjoint s-t paths, capped at `cap`
    /// (returns `cap` once reached). Unit-capacity flow on the split graph.
    fn local_vertex_connectivity(&self, s: usize, t: usize, cap: usize) -> usize {
        // Node 2v = v_in, 2v+1 = v_out. Arcs: v_in->v_out (cap 1, v != s,t),
        // u_out->v_in for each edge (cap 1 suffices with vertex caps).
        let nn = 2 * self.n;
        let mut head: Vec<Vec<usize>> = vec![Vec::new(); nn];
        let mut to: Vec<usize> = Vec::new();
        let mut capacity: Vec<u8> = Vec::new();
        let mut add = |head: &mut Vec<Vec<usize>>, a: usize, b: usize, c: u8| {
            head[a].push(to.len());
            to.push(b);
            capacity.push(c);
            head[b].push(to.len());
            to.push(a);
            capacity.push(0);
        };
        for v in 0..self.n {
            let c = if v == s || v == t { 2 } else { 1 };
            add(&mut head, 2 * v, 2 * v + 1, c);
        }
        for (u, v) in self.edges() {
            add(&mut head, 2 * u + 1, 2 * v, 1);
            add(&mut head, 2 * v + 1, 2 * u, 1);
        }
        let src = 2 * s + 1;
        let dst = 2 * t;
        let mut flow = 0usize;
        let mut prev_edge = vec![usize::MAX; nn];
        while flow < cap {
            prev_edge.fill(usize::MAX);
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(src);
            let mut reached = false;
            'bfs: while let Some(u) = queue.pop_front() {
                for &e in &head[u] {
                    if capacity[e] > 0 && prev_edge[to[e]] == usize::MAX && to[e] != src {
                        prev_edge[to[e]] = e;
                        if to[e] == dst {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(to[e]);
                    }
                }
            }
            if !reached {
                break;
            }
            let mut x = dst;
            while x != src {
                let e = prev_edge[x];
                capacity[e] -= 1;
                capacity[e ^ 1] += 1;
                x = to[e ^ 1];
            }
            flow += 1;
        }
        flow
    }

    /// True iff the connectivity is exactly 2 and deleting any single vertex
    /// drops it below 2.
    pub fn is_critically_two_connected(&self) -> bool {
        if self.vertex_connectivity() != 2 {
            return false;
        }
        (0..self.n).all(|v| !self.without_vertex(v).is_two_connected())
    }

    /// Common neighborhood of two distinct vertices.
    pub fn common_neighbors(&self, u: usize, v: usize) -> Result<VertexSet, GraphError> {
        if u >= self.n {
            return Err(GraphError::InvalidVertex { v: u, n: self.n });
        }
        if v >= self.n || u == v {
            return Err(GraphError::InvalidVertex { v, n: self.n });
        }
        let mut out = Vec::new();
        for i in 0..self.words {
            let mut w = self.masks[u][i] & self.masks[v][i];
            while w != 0 {
                out.push(i * 64 + w.trailing_zeros() as usize);
                w &= w - 1;
            }
        }
        Ok(VertexSet::from_sorted(out))
    }

    fn common_count(&self, u: usize, v: usize) -> usize {
        self.masks[u]
            .iter()
            .zip(self.masks[v].iter())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn smallest_commons(&self, u: usize, v: usize, take: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(take);
        'outer: for i in 0..self.words {
            let mut w = self.masks[u][i] & self.masks[v][i];
            while w != 0 {
                out.push(i * 64 + w.trailing_zeros() as usize);
                if out.len() == take {
                    break 'outer;
                }
                w &= w - 1;
            }
        }
        out
    }

    /// Lexicographically smallest 4-set hosting a C4 subgraph, if any.
    ///
    /// A 4-cycle exists iff some vertex pair has two common neighbors; each
    /// hosting set is that pair plus two of its common neighbors, so the
    /// minimum over pairs of {pair + two smallest common neighbors} is the
    /// global minimum.
    pub fn contains_c4(&self) -> Option<VertexSet> {
        let mut best: Option<VertexSet> = None;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.common_count(u, v) >= 2 {
                    let mut members = self.smallest_commons(u, v, 2);
                    members.push(u);
                    members.push(v);
                    let cand = VertexSet::new(members);
                    if best.as_ref().is_none_or(|b| cand < *b) {
                        best = Some(cand);
                    }
                }
            }
        }
        best
    }

    /// Lexicographically smallest 5-set hosting a K_{2,3} subgraph, if any
    /// (a vertex pair with three common neighbors).
    pub fn contains_k23(&self) -> Option<VertexSet> {
        let mut best: Option<VertexSet> = None;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.common_count(u, v) >= 3 {
                    let mut members = self.smallest_commons(u, v, 3);
                    members.push(u);
                    members.push(v);
                    let cand = VertexSet::new(members);
                    if best.as_ref().is_none_or(|b| cand < *b) {
                        best = Some(cand);
                    }
                }
            }
        }
        best
    }

    /// Lexicographically smallest vertex set of a 5-cycle subgraph, if any.
    pub fn contains_c5(&self) -> Option<VertexSet> {
        // The smallest witness starts at the least vertex lying on any C5
        // whose other vertices are all larger.
        let anchor = (0..self.n).find(|&a| self.has_c5_through(a))?;
        let rest: Vec<usize> = ((anchor + 1)..self.n).collect();
        let mut combo = [0usize; 4];
        self.first_c5_combination(anchor, &rest, &mut combo, 0, 0)
    }

    fn has_c5_through(&self, a: usize) -> bool {
        // Simple paths a -> v1 -> v2 -> v3 -> v4 over vertices > a, closed by
        // an edge v4 -> a.
        for &v1 in self.neighbors(a).iter().filter(|&&x| x > a) {
            for &v2 in self.neighbors(v1).iter().filter(|&&x| x > a && x != a) {
                if v2 == a {
                    continue;
                }
                for &v3 in self.neighbors(v2).iter() {
                    if v3 <= a || v3 == v1 {
                        continue;
                    }
                    for &v4 in self.neighbors(v3).iter() {
                        if v4 <= a || v4 == v1 || v4 == v2 {
                            continue;
                        }
                        if self.has_edge(v4, a) {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    fn first_c5_combination(
        &self,
        anchor: usize,
        rest: &[usize],
        combo: &mut [usize; 4],
        depth: usize,
        start: usize,
    ) -> Option<VertexSet> {
        if depth == 4 {
            let set = [anchor, combo[0], combo[1], combo[2], combo[3]];
            if self.five_set_hosts_c5(&set) {
                return Some(VertexSet::from_sorted(set.to_vec()));
            }
            return None;
        }
        for i in start..rest.len() {
            if rest.len() - i < 4 - depth {
                break;
            }
            combo[depth] = rest[i];
            if let Some(w) = self.first_c5_combination(anchor, rest, combo, depth + 1, i + 1) {
                return Some(w);
            }
        }
        None
    }

    fn five_set_hosts_c5(&self, set: &[usize; 5]) -> bool {
        // Every vertex needs two neighbors inside the set.
        for &v in set {
            let mut d = 0;
            for &u in set {
                if u != v && self.has_edge(u, v) {
                    d += 1;
                }
            }
            if d < 2 {
                return false;
            }
        }
        // 12 distinct cyclic orders of 5 labeled vertices: fix set[0] first.
        const ORDERS: [[usize; 4]; 12] = [
            [1, 2, 3, 4],
            [1, 2, 4, 3],
            [1, 3, 2, 4],
            [1, 3, 4, 2],
            [1, 4, 2, 3],
            [1, 4, 3, 2],
            [2, 1, 3, 4],
            [2, 1, 4, 3],
            [2, 3, 1, 4],
            [2, 4, 1, 3],
            [3, 1, 2, 4],
            [3, 2, 1, 4],
        ];
        for ord in ORDERS {
            let cycle = [set[0], set[ord[0]], set[ord[1]], set[ord[2]], set[ord[3]]];
            if (0..5).all(|i| self.has_edge(cycle[i], cycle[(i + 1) % 5])) {
                return true;
            }
        }
        false
    }

    /// Cartesian product; vertex `(a, b)` gets id `a * other.n() + b`.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let hn = other.n;
        let mut edges = Vec::new();
        for a in 0..self.n {
            for b in 0..hn {
                let id = a * hn + b;
                for &b2 in other.neighbors(b) {
                    if b2 > b {
                        edges.push((id, a * hn + b2));
                    }
                }
                for &a2 in self.neighbors(a) {
                    if a2 > a {
                        edges.push((id, a2 * hn + b));
                    }
                }
            }
        }
        Graph::from_edge_list(self.n * hn, &edges).expect("product ids are in range")
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &v in &self.adj[u] {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        stack.push(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Bitmask of `s` in this graph's word width.
    pub(crate) fn mask_of(&self, s: &VertexSet) -> Vec<u64> {
        let mut m = vec![0u64; self.words];
        for v in s.iter() {
            bitset::set_bit(&mut m, v);
        }
        m
    }

    /// 2-connectivity of the induced subgraph on `s`, without relabeling.
    pub fn induced_two_connected(&self, s: &VertexSet) -> bool {
        let mask = self.mask_of(s);
        let mut tester = SubsetTester::new(self.words);
        tester.two_connected(self.masks(), &mask)
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out: u128 = 1;
    for i in 0..k {
        out = out * (n - i) as u128 / (i + 1) as u128;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        gen_complete, gen_complete_bipartite, gen_cycle, gen_hypercube_q3, gen_path,
    };

    fn petersen() -> Graph {
        let mut e = vec![];
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edge_list(10, &e).unwrap()
    }

    #[test]
    fn from_edge_list_triangle() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(g.is_two_connected());
    }

    #[test]
    fn from_edge_list_rejects_self_loop() {
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 0)]),
            Err(GraphError::InvalidEdge { u: 0, v: 0, n: 2 })
        );
    }

    #[test]
    fn from_edge_list_rejects_out_of_range() {
        assert!(matches!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(GraphError::InvalidEdge { .. })
        ));
    }

    #[test]
    fn from_edge_list_dedups() {
        let g = Graph::from_edge_list(4, &[(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn induced_subgraph_examples() {
        let c5 = gen_cycle(5).unwrap();
        let p3 = c5.induced_subgraph(&VertexSet::new(vec![0, 1, 2])).unwrap();
        assert_eq!(p3.edge_count(), 2);
        assert!(!p3.is_two_connected());

        let k4 = gen_complete(4).unwrap();
        let tri = k4.induced_subgraph(&VertexSet::new(vec![1, 2, 3])).unwrap();
        assert_eq!(tri.edge_count(), 3);
        assert!(tri.is_two_connected());

        // A face of the cube induces a C4: brute-force over all 4-sets for one.
        let q3 = gen_hypercube_q3();
        let mut found_face = false;
        for a in 0..8 {
            for b in a + 1..8 {
                for c in b + 1..8 {
                    for d in c + 1..8 {
                        let s = VertexSet::from_sorted(vec![a, b, c, d]);
                        let h = q3.induced_subgraph(&s).unwrap();
                        if h.edge_count() == 4 && h.is_two_connected() {
                            found_face = true;
                        }
                    }
                }
            }
        }
        assert!(found_face);

        assert!(matches!(
            c5.induced_subgraph(&VertexSet::new(vec![0, 9])),
            Err(GraphError::InvalidVertex { v: 9, .. })
        ));
    }

    #[test]
    fn two_connected_examples() {
        assert!(gen_cycle(3).unwrap().is_two_connected());
        assert!(!gen_path(4).unwrap().is_two_connected());
        let q3 = gen_hypercube_q3();
        for v in 0..8 {
            assert!(q3.without_vertex(v).is_two_connected());
        }
        assert!(!gen_complete(2).unwrap().is_two_connected());
    }

    #[test]
    fn block_decomposition_bowtie() {
        // Two triangles sharing vertex 0.
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let d = g.block_decomposition().unwrap();
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.cut_vertices, VertexSet::new(vec![0]));
        assert_eq!(d.blocks[0], VertexSet::new(vec![0, 1, 2]));
        assert_eq!(d.blocks[1], VertexSet::new(vec![0, 3, 4]));
    }

    #[test]
    fn block_decomposition_cycle_and_pendant() {
        let c5 = gen_cycle(5).unwrap();
        let d = c5.block_decomposition().unwrap();
        assert_eq!(d.blocks.len(), 1);
        assert!(d.cut_vertices.is_empty());

        // Triangle with a pendant edge.
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let d = g.block_decomposition().unwrap();
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.cut_vertices, VertexSet::new(vec![2]));
        let sizes: Vec<usize> = d.blocks.iter().map(|b| b.len()).collect();
        assert!(sizes.contains(&2) && sizes.contains(&3));

        let two = Graph::from_edge_list(2, &[]).unwrap();
        assert_eq!(two.block_decomposition(), Err(GraphError::NotConnected));
    }

    #[test]
    fn block_edges_partition_edges() {
        for g in [
            gen_cycle(6).unwrap(),
            Graph::from_edge_list(7, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (5, 6)])
                .unwrap(),
            petersen(),
        ] {
            let d = g.block_decomposition().unwrap();
            let total: usize = d
                .blocks
                .iter()
                .map(|b| g.induced_subgraph(b).unwrap().edge_count())
                .sum();
            assert_eq!(total, g.edge_count());
            // Cut vertex iff in >= 2 blocks.
            for v in 0..g.n() {
                let in_blocks = d.blocks.iter().filter(|b| b.contains(v)).count();
                assert_eq!(in_blocks >= 2, d.cut_vertices.contains(v), "vertex {v}");
            }
        }
    }

    #[test]
    fn vertex_connectivity_examples() {
        assert_eq!(gen_hypercube_q3().vertex_connectivity(), 3);
        assert_eq!(gen_cycle(5).unwrap().vertex_connectivity(), 2);
        assert_eq!(gen_path(3).unwrap().vertex_connectivity(), 1);
        assert_eq!(gen_complete(4).unwrap().vertex_connectivity(), 3);
        assert_eq!(gen_complete(1).unwrap().vertex_connectivity(), 0);
        assert_eq!(gen_complete_bipartite(3, 4).unwrap().vertex_connectivity(), 3);
    }

    #[test]
    fn max_flow_agrees_with_enumeration() {
        for g in [gen_hypercube_q3(), petersen(), gen_complete_bipartite(2, 5).unwrap()] {
            let delta = g.min_degree();
            assert_eq!(g.connectivity_by_cut_enumeration(delta), g.connectivity_by_max_flow(delta));
        }
    }

    #[test]
    fn critically_two_connected_examples() {
        assert!(gen_cycle(5).unwrap().is_critically_two_connected());
        assert!(!gen_complete(4).unwrap().is_critically_two_connected());
        // K4 minus one edge: deleting a degree-3 vertex leaves a triangle.
        let g = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(g.vertex_connectivity(), 2);
        assert!(!g.is_critically_two_connected());
    }

    #[test]
    fn c4_detector() {
        assert!(gen_complete_bipartite(2, 3).unwrap().contains_c4().is_some());
        assert!(gen_cycle(5).unwrap().contains_c4().is_none());
        assert_eq!(
            gen_cycle(4).unwrap().contains_c4(),
            Some(VertexSet::new(vec![0, 1, 2, 3]))
        );
        // Witness is lexicographically smallest: C4 on {1,2,3,4} plus an
        // earlier C4 on {0,1,2,3} via chords.
        let g = Graph::from_edge_list(5, &[(1, 2), (2, 3), (3, 4), (4, 1), (0, 1), (0, 3), (1, 3)])
            .unwrap();
        let w = g.contains_c4().unwrap();
        assert_eq!(w, VertexSet::new(vec![0, 1, 2, 3]));
    }

    #[test]
    fn c5_detector() {
        assert_eq!(
            gen_cycle(5).unwrap().contains_c5(),
            Some(VertexSet::new(vec![0, 1, 2, 3, 4]))
        );
        assert!(gen_complete_bipartite(3, 3).unwrap().contains_c5().is_none());
        assert!(gen_hypercube_q3().contains_c5().is_none());
        let w = petersen().contains_c5().unwrap();
        // Self-check the witness hosts a 5-cycle.
        let g = petersen();
        let arr: [usize; 5] = w.members().try_into().unwrap();
        assert!(g.five_set_hosts_c5(&arr));
        assert_eq!(w, VertexSet::new(vec![0, 1, 2, 3, 4]));
    }

    #[test]
    fn k23_detector() {
        assert_eq!(
            gen_complete_bipartite(2, 3).unwrap().contains_k23(),
            Some(VertexSet::new(vec![0, 1, 2, 3, 4]))
        );
        assert!(gen_complete(4).unwrap().contains_k23().is_none());
        assert!(gen_cycle(6).unwrap().contains_k23().is_none());
        assert!(gen_complete(5).unwrap().contains_k23().is_some());
    }

    #[test]
    fn cartesian_product_examples() {
        let q3 = gen_cycle(4).unwrap().cartesian_product(&gen_complete(2).unwrap());
        assert_eq!(q3.n(), 8);
        assert_eq!(q3.edge_count(), 12);
        assert!((0..8).all(|v| q3.degree(v) == 3));

        let g = petersen();
        let same = gen_complete(1).unwrap().cartesian_product(&g);
        assert_eq!(same.edges(), g.edges());

        let c4 = gen_complete(2).unwrap().cartesian_product(&gen_complete(2).unwrap());
        assert_eq!(c4.n(), 4);
        assert_eq!(c4.edge_count(), 4);
        assert!(c4.is_two_connected());
    }

    #[test]
    fn product_degree_law() {
        let g = gen_path(4).unwrap();
        let h = gen_cycle(5).unwrap();
        let p = g.cartesian_product(&h);
        for a in 0..g.n() {
            for b in 0..h.n() {
                assert_eq!(p.degree(a * h.n() + b), g.degree(a) + h.degree(b));
            }
        }
    }

    #[test]
    fn common_neighbors_examples() {
        let c4 = gen_cycle(4).unwrap();
        assert_eq!(c4.common_neighbors(0, 2).unwrap().len(), 2);
        assert_eq!(c4.common_neighbors(0, 1).unwrap().len(), 0);
        assert!(matches!(
            c4.common_neighbors(1, 1),
            Err(GraphError::InvalidVertex { .. })
        ));
    }

    #[test]
    fn bipartite_check() {
        assert!(gen_hypercube_q3().is_bipartite());
        assert!(!gen_cycle(5).unwrap().is_bipartite());
        assert!(gen_path(6).unwrap().is_bipartite());
    }
}
