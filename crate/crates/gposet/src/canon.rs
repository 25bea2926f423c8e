//! Canonical codes, isomorphism, occurrences and vertex transitivity.
//!
//! The canonical code of a graph on `n` vertices is the byte `n` followed by
//! the upper triangle of the relabelled multiplicity matrix, diagonal
//! included, read column by column. It is the lexicographic minimum over
//! every labelling whose vertex order respects a canonical colouring of the
//! vertices (degree partition refined to a stable colouring). Reading
//! columns lets a partial labelling fix a prefix of the code, which is what
//! the branch-and-bound search prunes on.

use std::fmt;

use dashmap::DashMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// Default bound on the order of graphs that may be canonicalized.
pub const DEFAULT_MAX_ORDER: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("graph of order {order} exceeds the canonical-form bound {bound}")]
    OrderBound { order: usize, bound: usize },
    #[error("malformed canonical code: {0}")]
    Malformed(String),
}

/// Isomorphism-class key; equal iff the graphs are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Box<[u8]>);

impl CanonicalCode {
    pub fn order(&self) -> usize {
        usize::from(self.0[0])
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(s: &str) -> Result<Self, CanonError> {
        if s.len() % 2 != 0 || s.is_empty() {
            return Err(CanonError::Malformed("odd or empty hex string".into()));
        }
        let bytes = (0..s.len())
            .step_by(2)
            .map(|k| u8::from_str_radix(&s[k..k + 2], 16))
            .collect::<Result<Vec<u8>, _>>()
            .map_err(|e| CanonError::Malformed(e.to_string()))?;
        let n = usize::from(bytes[0]);
        if bytes.len() != 1 + n * (n + 1) / 2 {
            return Err(CanonError::Malformed("length does not match order".into()));
        }
        Ok(CanonicalCode(bytes.into_boxed_slice()))
    }

    /// The canonical representative described by this code.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let mut adj = vec![0u8; n * n];
        let mut k = 1;
        for j in 0..n {
            for i in 0..=j {
                adj[i * n + j] = self.0[k];
                adj[j * n + i] = self.0[k];
                k += 1;
            }
        }
        Graph::from_matrix(n, adj).expect("decoded matrix is symmetric")
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for CanonicalCode {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        CanonicalCode::from_hex(&s).map_err(serde::de::Error::custom)
    }
}

/// All subsets η of the host's vertices with `G[η] ≅ H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OccurrenceSet {
    pub host_order: usize,
    pub occurrences: Vec<VertexSet>,
}

impl OccurrenceSet {
    pub fn len(&self) -> usize {
        self.occurrences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.occurrences.is_empty()
    }

    /// Z(η) for each occurrence.
    pub fn zero_sets(&self) -> Vec<VertexSet> {
        self.occurrences.iter().map(|o| o.complement_in(self.host_order)).collect()
    }
}

/// Canonicalizes graphs up to a configurable order, memoizing codes.
pub struct Canonicalizer {
    max_order: usize,
    cache: DashMap<Graph, CanonicalCode>,
}

impl Default for Canonicalizer {
    fn default() -> Self {
        Canonicalizer::new(DEFAULT_MAX_ORDER)
    }
}

impl fmt::Debug for Canonicalizer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Canonicalizer").field("max_order", &self.max_order).field("cached", &self.cache.len()).finish()
    }
}

impl Canonicalizer {
    pub fn new(max_order: usize) -> Self {
        // Codes store the order in a single byte.
        Canonicalizer { max_order: max_order.min(255), cache: DashMap::new() }
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }

    pub fn cached(&self) -> usize {
        self.cache.len()
    }

    pub fn clear_cache(&self) {
        self.cache.clear();
    }

    pub fn check_order(&self, g: &Graph) -> Result<(), CanonError> {
        if g.order() > self.max_order {
            Err(CanonError::OrderBound { order: g.order(), bound: self.max_order })
        } else {
            Ok(())
        }
    }

    pub fn canonical_form(&self, g: &Graph) -> Result<CanonicalCode, CanonError> {
        self.check_order(g)?;
        if let Some(c) = self.cache.get(g) {
            return Ok(c.clone());
        }
        let code = CanonicalCode(canonical_bytes(g).into_boxed_slice());
        self.cache.insert(g.clone(), code.clone());
        Ok(code)
    }

    pub fn is_isomorphic(&self, g: &Graph, h: &Graph) -> Result<bool, CanonError> {
        self.check_order(g)?;
        self.check_order(h)?;
        if g.order() != h.order() || g.edge_count() != h.edge_count() || g.degree_sequence() != h.degree_sequence() {
            return Ok(false);
        }
        Ok(self.canonical_form(g)? == self.canonical_form(h)?)
    }

    /// Every vertex subset of `g` inducing a copy of `h`, in lexicographic order.
    pub fn occurrences(&self, h: &Graph, g: &Graph) -> Result<OccurrenceSet, CanonError> {
        let mut occurrences = Vec::new();
        self.scan_occurrences(h, g, |s| {
            occurrences.push(VertexSet::new(s.iter().copied()));
            true
        })?;
        Ok(OccurrenceSet { host_order: g.order(), occurrences })
    }

    /// Whether `h` is an induced subgraph of `g`.
    pub fn contains(&self, h: &Graph, g: &Graph) -> Result<bool, CanonError> {
        let mut found = false;
        self.scan_occurrences(h, g, |_| {
            found = true;
            false
        })?;
        Ok(found)
    }

    /// Calls `visit` on each occurrence until it returns false.
    fn scan_occurrences(
        &self,
        h: &Graph,
        g: &Graph,
        mut visit: impl FnMut(&[usize]) -> bool,
    ) -> Result<(), CanonError> {
        self.check_order(g)?;
        self.check_order(h)?;
        let (k, n) = (h.order(), g.order());
        if k > n {
            return Ok(());
        }
        let target = self.canonical_form(h)?;
        let edges = h.edge_count();
        let degrees = h.degree_sequence();
        let mut subset: Vec<usize> = (0..k).collect();
        loop {
            let sub = g.induced_unchecked(&subset);
            if sub.edge_count() == edges
                && sub.degree_sequence() == degrees
                && self.canonical_form(&sub)? == target
                && !visit(&subset)
            {
                return Ok(());
            }
            if !next_combination(&mut subset, n) {
                return Ok(());
            }
        }
    }

    /// True iff all one-vertex-deleted subgraphs are isomorphic, which for
    /// finite graphs is equivalent to vertex transitivity.
    pub fn is_vertex_transitive(&self, g: &Graph) -> Result<bool, CanonError> {
        self.check_order(g)?;
        let n = g.order();
        if n <= 1 {
            return Ok(true);
        }
        let first = self.canonical_form(&g.delete_vertex(0).expect("vertex in range"))?;
        for v in 1..n {
            if self.canonical_form(&g.delete_vertex(v).expect("vertex in range"))? != first {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Advance a sorted k-subset of `0..n` to the next one in lexicographic order.
pub(crate) fn next_combination(s: &mut [usize], n: usize) -> bool {
    let k = s.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if s[i] < n - k + i {
            s[i] += 1;
            for t in i + 1..k {
                s[t] = s[t - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Stable vertex colouring starting from (loop count, degree), refined by
/// the multiset of (neighbour colour, multiplicity) until no class splits.
/// Colours are ranks of sorted signatures, hence invariant under relabelling.
fn stable_colouring(g: &Graph) -> Vec<u32> {
    let n = g.order();
    let mut colour =
        rank_signatures(&(0..n).map(|v| vec![u32::from(g.mult(v, v)), g.degree(v) as u32]).collect::<Vec<_>>());
    let mut classes = count_classes(&colour);
    loop {
        let sigs: Vec<Vec<u32>> = (0..n)
            .map(|v| {
                let mut nb: Vec<(u32, u32)> = (0..n)
                    .filter(|&u| u != v && g.has_edge(u, v))
                    .map(|u| (colour[u], u32::from(g.mult(u, v))))
                    .collect();
                nb.sort_unstable();
                let mut sig = vec![colour[v]];
                for (c, m) in nb {
                    sig.push(c);
                    sig.push(m);
                }
                sig
            })
            .collect();
        let next = rank_signatures(&sigs);
        let next_classes = count_classes(&next);
        colour = next;
        if next_classes == classes {
            return colour;
        }
        classes = next_classes;
    }
}

fn rank_signatures(sigs: &[Vec<u32>]) -> Vec<u32> {
    let mut distinct: Vec<&Vec<u32>> = sigs.iter().collect();
    distinct.sort();
    distinct.dedup();
    sigs.iter().map(|s| distinct.binary_search(&s).expect("present") as u32).collect()
}

fn count_classes(colour: &[u32]) -> usize {
    let mut c = colour.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    /// `cell[p]` is the colour required at position `p`.
    cell: Vec<u32>,
    colour: Vec<u32>,
    /// Vertices with identical adjacency to everything else; swapping two of
    /// them is an automorphism, so they are placed in increasing order.
    twin_class: Vec<usize>,
    used: Vec<bool>,
    perm: Vec<usize>,
    cur: Vec<u8>,
    best: Vec<u8>,
}

impl Search<'_> {
    fn run(&mut self, p: usize, mut less: bool) -> bool {
        if p == self.n {
            self.best.copy_from_slice(&self.cur);
            return true;
        }
        let off = p * (p + 1) / 2;
        let mut updated = false;
        for v in 0..self.n {
            if self.used[v] || self.colour[v] != self.cell[p] {
                continue;
            }
            let tc = self.twin_class[v];
            if (0..v).any(|w| !self.used[w] && self.twin_class[w] == tc) {
                continue;
            }
            for r in 0..p {
                self.cur[off + r] = self.g.mult(self.perm[r], v);
            }
            self.cur[off + p] = self.g.mult(v, v);
            let child_less = if less {
                true
            } else {
                match self.cur[off..=off + p].cmp(&self.best[off..=off + p]) {
                    std::cmp::Ordering::Less => true,
                    std::cmp::Ordering::Equal => false,
                    std::cmp::Ordering::Greater => continue,
                }
            };
            self.used[v] = true;
            self.perm[p] = v;
            if self.run(p + 1, child_less) {
                updated = true;
                less = false;
            }
            self.used[v] = false;
        }
        updated
    }
}

fn twin_classes(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let twins = |u: usize, v: usize| {
        g.mult(u, u) == g.mult(v, v) && (0..n).all(|x| x == u || x == v || g.mult(u, x) == g.mult(v, x))
    };
    let mut class = vec![usize::MAX; n];
    for v in 0..n {
        if class[v] == usize::MAX {
            class[v] = v;
            for w in v + 1..n {
                if class[w] == usize::MAX && twins(v, w) {
                    class[w] = v;
                }
            }
        }
    }
    class
}

fn canonical_bytes(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let len = n * (n + 1) / 2;
    let mut out = Vec::with_capacity(1 + len);
    out.push(n as u8);
    if n == 0 {
        return out;
    }
    let colour = stable_colouring(g);
    let mut cell = colour.clone();
    cell.sort_unstable();
    let mut s = Search {
        g,
        n,
        cell,
        colour,
        twin_class: twin_classes(g),
        used: vec![false; n],
        perm: vec![0; n],
        cur: vec![0; len],
        best: vec![0; len],
    };
    s.run(0, true);
    out.extend_from_slice(&s.best);
    out
}
