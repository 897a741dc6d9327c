//! Graphs, colorings and the orientation a coloring induces.
//!
//! Vertices are dense ids `0..n`. A [`Coloring`] is any map to non-negative
//! integers that gives adjacent vertices distinct values; it does not have to
//! be surjective onto `0..k` and it does not have to use color 0. Orienting
//! every edge from its higher-colored end to its lower-colored end turns a
//! colored graph into a DAG ([`ColoredGraph`]).

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A subset of `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(n),
        }
    }

    pub fn full(n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert_range(..);
        VertexSet { bits }
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Self {
        let mut set = VertexSet::new(n);
        for v in vertices {
            set.insert(v);
        }
        set
    }

    /// Builds a set from the low `n` bits of `mask`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1))
    }

    /// Universe size.
    pub fn capacity(&self) -> usize {
        self.bits.len()
    }

    pub fn insert(&mut self, v: usize) {
        self.bits.insert(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.bits.set(v, false);
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.bits.difference_with(&other.bits);
    }

    /// Low 64 bits as a mask; only meaningful when the universe fits.
    pub fn to_mask(&self) -> u64 {
        self.iter()
            .filter(|&v| v < 64)
            .fold(0u64, |m, v| m | 1 << v)
    }

    /// Sum of `colors[v]` over members.
    pub fn weight(&self, coloring: &Coloring) -> u64 {
        self.iter().map(|v| coloring.color(v) as u64).sum()
    }
}

/// Lexicographic order of the sorted member lists.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Finite simple undirected graph on `0..n`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Graph {
    n: usize,
    #[serde(skip)]
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a simple graph, rejecting loops, repeated edges and bad endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        let mut canon = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        for &(u, v) in &canon {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            adj,
            edges: canon,
        })
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Open neighbourhood bitmasks; requires `n <= 64`.
    pub fn neighbor_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask view needs n <= 64");
        self.adj
            .iter()
            .map(|list| list.iter().fold(0u64, |m, &u| m | 1 << u))
            .collect()
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(self.n, &edges).expect("complement of a simple graph is simple")
    }

    /// Subgraph induced by `keep`; vertex `keep[i]` becomes `i`.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        Graph::new(keep.len(), &edges).expect("induced subgraph of a simple graph is simple")
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() == self.n - 1 && self.is_connected()
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&v| self.degree(v) + 1 == self.n)
            .collect()
    }

    /// Two-coloring of the vertices if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adj[v] {
                    if side[u] == u8::MAX {
                        side[u] = 1 - side[v];
                        queue.push_back(u);
                    } else if side[u] == side[v] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }
}

/// Vertex colors; properness is checked against a graph, not stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Coloring(Vec<u32>);

impl Coloring {
    pub fn new(colors: Vec<u32>) -> Self {
        Coloring(colors)
    }

    pub fn color(&self, v: usize) -> u32 {
        self.0[v]
    }

    pub fn colors(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_color(&self) -> Option<u32> {
        self.0.iter().copied().max()
    }

    /// Number of distinct colors used.
    pub fn color_count(&self) -> usize {
        let mut used = self.0.clone();
        used.sort_unstable();
        used.dedup();
        used.len()
    }

    /// Vertices carrying the largest color.
    pub fn top_class(&self) -> Vec<usize> {
        match self.max_color() {
            Some(top) => (0..self.0.len()).filter(|&v| self.0[v] == top).collect(),
            None => Vec::new(),
        }
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }
}

impl From<Vec<u32>> for Coloring {
    fn from(colors: Vec<u32>) -> Self {
        Coloring(colors)
    }
}

/// Checks properness. `Ok(None)` means proper, `Ok(Some(edge))` names the
/// first edge (in sorted edge order) whose endpoints share a color.
pub fn validate_coloring(g: &Graph, c: &Coloring) -> Result<Option<(usize, usize)>> {
    if c.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            got: c.len(),
        });
    }
    Ok(g.edges()
        .iter()
        .copied()
        .find(|&(u, v)| c.color(u) == c.color(v)))
}

/// Why a set fails to be up-color dominating.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", content = "vertex", rename_all = "snake_case")]
pub enum Violation {
    /// The set contains a vertex of color 0.
    ColorZeroMember(usize),
    /// A vertex outside the set has no higher-colored neighbour inside it.
    Undominated(usize),
}

/// A properly colored graph together with its high-to-low orientation.
#[derive(Clone, Debug)]
pub struct ColoredGraph {
    graph: Graph,
    coloring: Coloring,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
}

/// Orients every edge from its higher-colored endpoint.
pub fn orient(g: &Graph, c: &Coloring) -> Result<ColoredGraph> {
    if let Some((u, v)) = validate_coloring(g, c)? {
        return Err(Error::ImproperColoring(u, v));
    }
    let n = g.n();
    let mut out_adj = vec![Vec::new(); n];
    let mut in_adj = vec![Vec::new(); n];
    for &(u, v) in g.edges() {
        let (hi, lo) = if c.color(u) > c.color(v) {
            (u, v)
        } else {
            (v, u)
        };
        out_adj[hi].push(lo);
        in_adj[lo].push(hi);
    }
    for list in out_adj.iter_mut().chain(in_adj.iter_mut()) {
        list.sort_unstable();
    }
    Ok(ColoredGraph {
        graph: g.clone(),
        coloring: c.clone(),
        out_adj,
        in_adj,
    })
}

impl ColoredGraph {
    pub fn new(g: &Graph, c: &Coloring) -> Result<Self> {
        orient(g, c)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn coloring(&self) -> &Coloring {
        &self.coloring
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn color(&self, v: usize) -> u32 {
        self.coloring.color(v)
    }

    /// Lower-colored neighbours (`N+`).
    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    /// Higher-colored neighbours (`N-`).
    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adj[v].len()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    /// Directed edges `(high, low)`.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(u, outs)| outs.iter().map(move |&v| (u, v)))
    }

    /// Vertices with no higher-colored neighbour. Every up-color dominating
    /// set contains all of them.
    pub fn local_maxima(&self) -> VertexSet {
        VertexSet::from_vertices(self.n(), (0..self.n()).filter(|&v| self.in_degree(v) == 0))
    }

    /// First isolated color-0 vertex. Such a vertex can neither join a
    /// dominating set nor be dominated, so none exists while this is `Some`.
    pub fn infeasible_vertex(&self) -> Option<usize> {
        (0..self.n()).find(|&v| self.color(v) == 0 && self.graph.degree(v) == 0)
    }

    pub fn is_feasible(&self) -> bool {
        self.infeasible_vertex().is_none()
    }

    /// `Ok(())` when `d` is an up-color dominating set, otherwise the first
    /// violation found scanning vertices in id order (membership errors are
    /// reported before domination errors).
    pub fn check_up_color_dominating(&self, d: &VertexSet) -> std::result::Result<(), Violation> {
        if let Some(v) = d.iter().find(|&v| self.color(v) == 0) {
            return Err(Violation::ColorZeroMember(v));
        }
        for v in 0..self.n() {
            if !d.contains(v) && !self.in_adj[v].iter().any(|&u| d.contains(u)) {
                return Err(Violation::Undominated(v));
            }
        }
        Ok(())
    }

    pub fn is_up_color_dominating(&self, d: &VertexSet) -> bool {
        self.check_up_color_dominating(d).is_ok()
    }
}

/// Free-function form of [`ColoredGraph::local_maxima`].
pub fn local_maxima(cg: &ColoredGraph) -> VertexSet {
    cg.local_maxima()
}

/// Free-function form of [`ColoredGraph::check_up_color_dominating`].
pub fn is_up_color_dominating(
    cg: &ColoredGraph,
    d: &VertexSet,
) -> std::result::Result<(), Violation> {
    cg.check_up_color_dominating(d)
}

pub fn complement(g: &Graph) -> Graph {
    g.complement()
}
