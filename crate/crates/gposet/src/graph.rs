//! Finite multigraphs stored as symmetric multiplicity matrices.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors raised by graph construction and manipulation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("operation requires a simple graph (no loops, no multiple edges)")]
    NotSimple,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("edge multiplicity exceeds {max}", max = u8::MAX)]
    MultiplicityOverflow,
}

/// A finite multigraph with loops.
///
/// `adj[i * order + j]` is the number of edges between `i` and `j`; the
/// diagonal holds loop counts. The matrix is kept symmetric by every
/// constructor, so values are immutable once built.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    order: usize,
    adj: Vec<u8>,
}

/// A sorted, duplicate-free set of vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    /// All vertices `0..order`.
    pub fn full(order: usize) -> Self {
        VertexSet((0..order).collect())
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

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// The vertices of `0..order` not in this set.
    pub fn complement_in(&self, order: usize) -> VertexSet {
        VertexSet((0..order).filter(|v| !self.contains(*v)).collect())
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    /// This set with one more vertex.
    pub fn with(&self, v: usize) -> VertexSet {
        VertexSet::new(self.iter().chain(std::iter::once(v)))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

/// Named graph families with standard simple representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedFamily {
    /// Path on `a` vertices.
    Path(usize),
    /// Cycle on `n >= 3` vertices.
    Cycle(usize),
    Complete(usize),
    /// `n` isolated vertices.
    Empty(usize),
    /// Complete multipartite graph with the given part sizes.
    CompleteMultipartite(Vec<usize>),
    /// A 5-cycle with one chord closing a triangle.
    House,
    Null,
}

/// Output of [`Graph::predicates`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralPredicates {
    pub is_connected: bool,
    pub has_pendant: bool,
    pub contains_triangle: bool,
    /// Degrees in weakly decreasing order; a loop adds 2.
    pub degree_sequence: Vec<usize>,
    pub is_bipartite: bool,
}

impl Graph {
    /// The graph with no vertices.
    pub fn null() -> Self {
        Graph { order: 0, adj: Vec::new() }
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph { order: n, adj: vec![0; n * n] }
    }

    /// Simple graph from an edge list. Repeated edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(i, j) in edges {
            g.check_vertex(i)?;
            g.check_vertex(j)?;
            if i == j {
                return Err(GraphError::NotSimple);
            }
            g.set(i, j, 1);
        }
        Ok(g)
    }

    /// Multigraph from `(i, j, multiplicity)` triples; `i == j` adds loops.
    /// Triples naming the same pair accumulate.
    pub fn from_multiplicities(n: usize, entries: &[(usize, usize, u32)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(i, j, m) in entries {
            g.check_vertex(i)?;
            g.check_vertex(j)?;
            let total = u32::from(g.mult(i, j)) + m;
            let total = u8::try_from(total).map_err(|_| GraphError::MultiplicityOverflow)?;
            g.set(i, j, total);
        }
        Ok(g)
    }

    /// Build from a full row-major matrix. The matrix must be symmetric.
    pub fn from_matrix(n: usize, adj: Vec<u8>) -> Result<Self, GraphError> {
        if adj.len() != n * n {
            return Err(GraphError::InvalidParameter(format!("matrix has {} entries, expected {}", adj.len(), n * n)));
        }
        for i in 0..n {
            for j in 0..i {
                if adj[i * n + j] != adj[j * n + i] {
                    return Err(GraphError::InvalidParameter("matrix is not symmetric".into()));
                }
            }
        }
        Ok(Graph { order: n, adj })
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.order {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, order: self.order })
        }
    }

    fn set(&mut self, i: usize, j: usize, m: u8) {
        let n = self.order;
        self.adj[i * n + j] = m;
        self.adj[j * n + i] = m;
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_null(&self) -> bool {
        self.order == 0
    }

    /// Multiplicity of the edge `{i, j}` (loop count when `i == j`).
    #[inline]
    pub fn mult(&self, i: usize, j: usize) -> u8 {
        self.adj[i * self.order + j]
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.mult(i, j) > 0
    }

    /// Row-major multiplicity matrix.
    pub fn matrix(&self) -> &[u8] {
        &self.adj
    }

    /// Total number of edges counted with multiplicity, loops included.
    pub fn edge_count(&self) -> usize {
        let n = self.order;
        let mut total = 0;
        for i in 0..n {
            for j in i..n {
                total += usize::from(self.mult(i, j));
            }
        }
        total
    }

    /// Loop-free vertex neighbours of `v`.
    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.order).filter(move |&u| u != v && self.has_edge(u, v))
    }

    /// Degree with multiplicity; each loop contributes 2.
    pub fn degree(&self, v: usize) -> usize {
        let row = &self.adj[v * self.order..(v + 1) * self.order];
        row.iter().map(|&m| usize::from(m)).sum::<usize>() + usize::from(row[v])
    }

    pub fn is_simple(&self) -> bool {
        let n = self.order;
        (0..n).all(|i| self.mult(i, i) == 0) && self.adj.iter().all(|&m| m <= 1)
    }

    pub fn has_loops(&self) -> bool {
        (0..self.order).any(|i| self.mult(i, i) > 0)
    }

    /// Subgraph induced by `s`, renumbered by sorted position.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        if let Some(&bad) = s.as_slice().last().filter(|&&v| v >= self.order) {
            return Err(GraphError::VertexOutOfRange { vertex: bad, order: self.order });
        }
        Ok(self.induced_unchecked(s.as_slice()))
    }

    /// Induced subgraph on a sorted, in-range vertex list.
    pub(crate) fn induced_unchecked(&self, vs: &[usize]) -> Graph {
        let k = vs.len();
        let mut adj = vec![0; k * k];
        for (a, &i) in vs.iter().enumerate() {
            for (b, &j) in vs.iter().enumerate() {
                adj[a * k + b] = self.mult(i, j);
            }
        }
        Graph { order: k, adj }
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let keep: Vec<usize> = (0..self.order).filter(|&u| u != v).collect();
        Ok(self.induced_unchecked(&keep))
    }

    /// Complement of a simple graph.
    pub fn complement(&self) -> Result<Graph, GraphError> {
        if !self.is_simple() {
            return Err(GraphError::NotSimple);
        }
        let n = self.order;
        let mut adj = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    adj[i * n + j] = 1 - self.mult(i, j);
                }
            }
        }
        Ok(Graph { order: n, adj })
    }

    /// Block-diagonal union; `other`'s vertices are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let (a, b) = (self.order, other.order);
        let n = a + b;
        let mut adj = vec![0; n * n];
        for i in 0..a {
            adj[i * n..i * n + a].copy_from_slice(&self.adj[i * a..(i + 1) * a]);
        }
        for i in 0..b {
            let row = (a + i) * n + a;
            adj[row..row + b].copy_from_slice(&other.adj[i * b..(i + 1) * b]);
        }
        Graph { order: n, adj }
    }

    /// The graph with vertex `i` renamed to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let n = self.order;
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(GraphError::InvalidParameter("permutation length differs from order".into()));
        }
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(GraphError::InvalidParameter("not a permutation".into()));
            }
        }
        let mut adj = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                adj[perm[i] * n + perm[j]] = self.mult(i, j);
            }
        }
        Ok(Graph { order: n, adj })
    }

    pub fn path(a: usize) -> Result<Graph, GraphError> {
        if a == 0 {
            return Err(GraphError::InvalidParameter("a path needs at least one vertex".into()));
        }
        let edges: Vec<_> = (1..a).map(|i| (i - 1, i)).collect();
        Graph::from_edges(a, &edges)
    }

    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for i in 0..n {
            for j in 0..i {
                g.set(i, j, 1);
            }
        }
        g
    }

    /// Complete multipartite graph; zero-sized parts are allowed and ignored.
    pub fn complete_multipartite(parts: &[usize]) -> Graph {
        let n: usize = parts.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (p, &size) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(p, size));
        }
        let mut g = Graph::empty(n);
        for i in 0..n {
            for j in 0..i {
                if part_of[i] != part_of[j] {
                    g.set(i, j, 1);
                }
            }
        }
        g
    }

    /// Triangle 0-1-2 on top of the square 1-2-4-3.
    pub fn house() -> Graph {
        Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (3, 4), (2, 4)]).expect("static edge list")
    }

    pub fn make_named(family: &NamedFamily) -> Result<Graph, GraphError> {
        match family {
            NamedFamily::Path(a) => Graph::path(*a),
            NamedFamily::Cycle(n) => Graph::cycle(*n),
            NamedFamily::Complete(n) => Ok(Graph::complete(*n)),
            NamedFamily::Empty(n) => Ok(Graph::empty(*n)),
            NamedFamily::CompleteMultipartite(parts) => Ok(Graph::complete_multipartite(parts)),
            NamedFamily::House => Ok(Graph::house()),
            NamedFamily::Null => Ok(Graph::null()),
        }
    }

    /// Disjoint union of paths with the given orders.
    pub fn path_forest(parts: &[usize]) -> Result<Graph, GraphError> {
        let mut g = Graph::null();
        for &p in parts {
            g = g.disjoint_union(&Graph::path(p)?);
        }
        Ok(g)
    }

    /// Two copies of `self` with vertex `v` of the first copy joined to
    /// every vertex of the second.
    pub fn d_v_construction(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let n = self.order;
        let mut g = self.disjoint_union(self);
        for x in 0..n {
            let m = g.mult(v, n + x) + 1;
            g.set(v, n + x, m);
        }
        Ok(g)
    }

    /// Connectivity over edges of positive multiplicity. The null graph has
    /// no components and is reported as disconnected.
    pub fn is_connected(&self) -> bool {
        self.order > 0 && self.components().len() == 1
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.order;
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut k = 0;
            while k < members.len() {
                let u = members[k];
                k += 1;
                for w in self.neighbours(u) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            out.push(VertexSet::new(members));
        }
        out
    }

    pub fn has_pendant(&self) -> bool {
        (0..self.order).any(|v| self.neighbours(v).count() == 1)
    }

    pub fn contains_triangle(&self) -> bool {
        let n = self.order;
        (0..n).any(|a| {
            (a + 1..n).any(|b| self.has_edge(a, b) && (b + 1..n).any(|c| self.has_edge(a, c) && self.has_edge(b, c)))
        })
    }

    pub fn is_bipartite(&self) -> bool {
        if self.has_loops() {
            return false;
        }
        let n = self.order;
        let mut colour = vec![u8::MAX; n];
        for s in 0..n {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for w in self.neighbours(u) {
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[u];
                        stack.push(w);
                    } else if colour[w] == colour[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Degrees in weakly decreasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn predicates(&self) -> StructuralPredicates {
        StructuralPredicates {
            is_connected: self.is_connected(),
            has_pendant: self.has_pendant(),
            contains_triangle: self.contains_triangle(),
            degree_sequence: self.degree_sequence(),
            is_bipartite: self.is_bipartite(),
        }
    }

    /// If this is a simple disjoint union of paths, its path orders in
    /// weakly decreasing order.
    pub fn as_path_forest(&self) -> Option<Vec<usize>> {
        if !self.is_simple() {
            return None;
        }
        let mut parts = Vec::new();
        for comp in self.components() {
            let k = comp.len();
            let degs: Vec<usize> = comp.iter().map(|v| self.degree(v)).collect();
            let edges: usize = degs.iter().sum::<usize>() / 2;
            if edges + 1 != k || degs.iter().any(|&d| d > 2) {
                return None;
            }
            parts.push(k);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Some(parts)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}", self.order)?;
        let n = self.order;
        for i in 0..n {
            for j in i..n {
                match self.mult(i, j) {
                    0 => {}
                    1 => write!(f, " {i}-{j}")?,
                    m => write!(f, " {i}-{j}x{m}")?,
                }
            }
        }
        write!(f, ")")
    }
}
