//! Generators for the graph families with interesting 2-connected spectra,
//! plus the standard cycle/clique/bipartite/path constructors.
//!
//! Every generator is deterministic and its vertex-id layout is frozen so
//! that emitted edge lists are stable golden data.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

fn invalid(msg: impl Into<String>) -> ConstructionError {
    ConstructionError::InvalidParams(msg.into())
}

/// Parameters of the clique-plus-path graph: a clique of order `q` glued to
/// a path of order `n - q` by two edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GEpsParams {
    pub n: usize,
    pub q: usize,
}

impl GEpsParams {
    pub fn new(n: usize, q: usize) -> Result<Self, ConstructionError> {
        if q < 3 {
            return Err(invalid(format!("clique order q = {q} must be at least 3")));
        }
        if n <= q {
            return Err(invalid(format!("need n - q >= 1, got n = {n}, q = {q}")));
        }
        Ok(GEpsParams { n, q })
    }

    /// Convenience wrapper computing `q = floor(n^(1 - eps))`.
    pub fn from_eps(n: usize, eps: f64) -> Result<Self, ConstructionError> {
        if !(0.0..1.0).contains(&eps) {
            return Err(invalid(format!("eps = {eps} must lie in [0, 1)")));
        }
        let q = (n as f64).powf(1.0 - eps).floor() as usize;
        GEpsParams::new(n, q)
    }
}

/// The clique-plus-path graph together with its labeled roles.
///
/// Layout: vertices `0..q` form the clique, `q..n` the path in id order.
/// The two gluing edges are `e1 = (x, x') = (0, q)` and
/// `e2 = (y, y') = (1, n-1)`.
#[derive(Debug, Clone)]
pub struct GEps {
    pub graph: Graph,
    pub params: GEpsParams,
    pub clique: VertexSet,
    pub path: VertexSet,
    pub x: usize,
    pub y: usize,
    pub x_prime: usize,
    pub y_prime: usize,
}

pub fn gen_g_eps(params: GEpsParams) -> GEps {
    let GEpsParams { n, q } = params;
    let mut edges = Vec::with_capacity(q * (q - 1) / 2 + (n - q) + 1);
    for u in 0..q {
        for v in (u + 1)..q {
            edges.push((u, v));
        }
    }
    for u in q..(n - 1) {
        edges.push((u, u + 1));
    }
    edges.push((0, q));
    edges.push((1, n - 1));
    let graph = Graph::from_edge_list(n, &edges).expect("layout is in range");
    GEps {
        graph,
        params,
        clique: VertexSet::from_sorted((0..q).collect()),
        path: VertexSet::from_sorted((q..n).collect()),
        x: 0,
        y: 1,
        x_prime: q,
        y_prime: n - 1,
    }
}

/// Parameters of the chained complete-bipartite graph: `m` disjoint copies
/// of `K_{s,s}` joined cyclically by `m` vertex-disjoint edges. `m` odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HParams {
    pub m: usize,
    pub s: usize,
}

impl HParams {
    pub fn new(m: usize, s: usize) -> Result<Self, ConstructionError> {
        if m < 3 || m % 2 == 0 {
            return Err(invalid(format!("m = {m} must be an odd integer >= 3")));
        }
        if s < 2 {
            return Err(invalid(format!("s = {s} must be at least 2")));
        }
        Ok(HParams { m, s })
    }

    pub fn n(&self) -> usize {
        2 * self.m * self.s
    }
}

/// The chained complete-bipartite graph with its labeled roles.
///
/// Block `i` (0-based) occupies ids `[2si, 2si + 2s)`: first the `X`
/// side, then the `Y` side. Connector `e_i` (1-based, `i < m`) joins the
/// first vertex of `Y_i` to the first vertex of `X_{i+1}`; `e_m` joins the
/// first vertex of `Y_m` to `y_0`, the second vertex of `Y_1`.
#[derive(Debug, Clone)]
pub struct HGraph {
    pub graph: Graph,
    pub params: HParams,
    pub x_sides: Vec<VertexSet>,
    pub y_sides: Vec<VertexSet>,
    /// `y_1, ..., y_m` (index 0 is `y_1`).
    pub y_reps: Vec<usize>,
    /// `x_2, ..., x_m` (index 0 is `x_2`).
    pub x_reps: Vec<usize>,
    pub y0: usize,
    /// The m connector edges `e_1, ..., e_m` in order.
    pub connectors: Vec<(usize, usize)>,
}

pub fn gen_h(params: HParams) -> HGraph {
    let HParams { m, s } = params;
    let n = params.n();
    let mut edges = Vec::with_capacity(m * s * s + m);
    let mut x_sides = Vec::with_capacity(m);
    let mut y_sides = Vec::with_capacity(m);
    for i in 0..m {
        let base = 2 * s * i;
        for a in base..(base + s) {
            for b in (base + s)..(base + 2 * s) {
                edges.push((a, b));
            }
        }
        x_sides.push(VertexSet::from_sorted((base..base + s).collect()));
        y_sides.push(VertexSet::from_sorted((base + s..base + 2 * s).collect()));
    }
    let y_reps: Vec<usize> = (0..m).map(|i| 2 * s * i + s).collect();
    let x_reps: Vec<usize> = (1..m).map(|i| 2 * s * i).collect();
    let y0 = s + 1;
    let mut connectors = Vec::with_capacity(m);
    for i in 0..(m - 1) {
        connectors.push((y_reps[i], x_reps[i]));
    }
    connectors.push((y_reps[m - 1], y0));
    edges.extend_from_slice(&connectors);
    let graph = Graph::from_edge_list(n, &edges).expect("layout is in range");
    HGraph { graph, params, x_sides, y_sides, y_reps, x_reps, y0, connectors }
}

/// State graph of the Tower of Hanoi with 3 pegs and 2 discs.
///
/// A state is `(small, large)` with peg ids in `{0, 1, 2}`; the vertex id is
/// `3 * small + large`. Edges are legal single-disc moves: the small disc
/// moves freely, the large disc moves only when the small disc sits on the
/// third peg.
pub fn gen_hanoi_3_2() -> Graph {
    let id = |small: usize, large: usize| 3 * small + large;
    let mut edges = Vec::new();
    for small in 0..3 {
        for large in 0..3 {
            for small2 in (small + 1)..3 {
                edges.push((id(small, large), id(small2, large)));
            }
            if small != large {
                for large2 in 0..3 {
                    if large2 != large && large2 != small && large2 > large {
                        edges.push((id(small, large), id(small, large2)));
                    }
                }
            }
        }
    }
    let g = Graph::from_edge_list(9, &edges).expect("state ids are in range");
    debug_assert_eq!(g.n(), 9);
    debug_assert_eq!(g.edge_count(), 12);
    g
}

/// The 3-cube as the cartesian product of a 4-cycle and an edge.
pub fn gen_hypercube_q3() -> Graph {
    let c4 = gen_cycle(4).expect("4 >= 3");
    let k2 = gen_complete(2).expect("2 >= 1");
    c4.cartesian_product(&k2)
}

pub fn gen_cycle(n: usize) -> Result<Graph, ConstructionError> {
    if n < 3 {
        return Err(invalid(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::from_edge_list(n, &edges).expect("ids in range"))
}

pub fn gen_path(n: usize) -> Result<Graph, ConstructionError> {
    if n < 1 {
        return Err(invalid("a path needs at least 1 vertex".to_string()));
    }
    let edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Ok(Graph::from_edge_list(n, &edges).expect("ids in range"))
}

pub fn gen_complete(n: usize) -> Result<Graph, ConstructionError> {
    if n < 1 {
        return Err(invalid("a complete graph needs at least 1 vertex".to_string()));
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Ok(Graph::from_edge_list(n, &edges).expect("ids in range"))
}

/// Complete bipartite graph; part A is `0..a`, part B is `a..a+b`.
pub fn gen_complete_bipartite(a: usize, b: usize) -> Result<Graph, ConstructionError> {
    if a < 1 || b < 1 {
        return Err(invalid(format!("both parts must be nonempty, got ({a}, {b})")));
    }
    let mut edges = Vec::with_capacity(a * b);
    for u in 0..a {
        for v in a..(a + b) {
            edges.push((u, v));
        }
    }
    Ok(Graph::from_edge_list(a + b, &edges).expect("ids in range"))
}
