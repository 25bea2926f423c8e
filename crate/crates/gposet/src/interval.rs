//! Explicit intervals `[H, G]` of the induced-subgraph poset.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde::Serialize;
use thiserror::Error;

use crate::canon::{CanonError, CanonicalCode, Canonicalizer};
use crate::graph::{Graph, GraphError};
use crate::io;
use crate::poset::HassePoset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntervalError {
    #[error("the bottom graph is not an induced subgraph of the top graph")]
    NotContained,
    #[error("the connected variant needs connected endpoints")]
    DisconnectedEndpoint,
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error(transparent)]
    Canon(#[from] CanonError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One isomorphism class inside an interval.
#[derive(Clone, Debug, Serialize)]
pub struct IntervalElement {
    pub code: CanonicalCode,
    /// Canonical representative.
    #[serde(skip)]
    pub graph: Graph,
    pub rank: usize,
    /// `μ(bottom, self)`.
    pub mobius: i64,
}

/// The interval `[H, G]` (or `[H, G]^c` built inside connected graphs) with
/// its Hasse diagram and Möbius values from the bottom.
///
/// Elements are sorted by rank and then canonical code, so the bottom is
/// the first element and the top the last.
#[derive(Clone, Debug)]
pub struct Interval {
    connected_variant: bool,
    elements: Vec<IntervalElement>,
    index: BTreeMap<CanonicalCode, usize>,
    poset: HassePoset,
}

impl Interval {
    fn assemble(
        connected_variant: bool,
        base_order: usize,
        graphs: BTreeMap<(usize, CanonicalCode), Graph>,
        covers: &BTreeSet<(CanonicalCode, CanonicalCode)>,
    ) -> Interval {
        let mut index = BTreeMap::new();
        let mut elements = Vec::with_capacity(graphs.len());
        for (k, ((order, code), graph)) in graphs.into_iter().enumerate() {
            index.insert(code.clone(), k);
            elements.push(IntervalElement { code, graph, rank: order - base_order, mobius: 0 });
        }
        let mut lower = vec![Vec::new(); elements.len()];
        for (lo, hi) in covers {
            if let (Some(&a), Some(&b)) = (index.get(lo), index.get(hi)) {
                lower[b].push(a);
            }
        }
        let rank = elements.iter().map(|e| e.rank).collect();
        let poset = HassePoset::from_lower_covers(rank, lower);
        let mu = poset.mobius_from(0);
        for (e, m) in elements.iter_mut().zip(mu) {
            e.mobius = m;
        }
        Interval { connected_variant, elements, index, poset }
    }

    pub fn connected_variant(&self) -> bool {
        self.connected_variant
    }

    pub fn bottom(&self) -> &IntervalElement {
        &self.elements[0]
    }

    pub fn top(&self) -> &IntervalElement {
        self.elements.last().expect("an interval is never empty")
    }

    /// Rank of the whole interval, `|G| - |H|`.
    pub fn rank(&self) -> usize {
        self.top().rank
    }

    /// `μ(H, G)`.
    pub fn mobius(&self) -> i64 {
        self.top().mobius
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> &[IntervalElement] {
        &self.elements
    }

    pub fn get(&self, code: &CanonicalCode) -> Option<&IntervalElement> {
        self.index.get(code).map(|&k| &self.elements[k])
    }

    pub fn position(&self, code: &CanonicalCode) -> Option<usize> {
        self.index.get(code).copied()
    }

    pub fn poset(&self) -> &HassePoset {
        &self.poset
    }

    /// Covering pairs `(lower, upper)`.
    pub fn hasse_edges(&self) -> Vec<(CanonicalCode, CanonicalCode)> {
        let mut out = Vec::with_capacity(self.poset.cover_count());
        for (b, e) in self.elements.iter().enumerate() {
            for &a in self.poset.lower_covers(b) {
                out.push((self.elements[a].code.clone(), e.code.clone()));
            }
        }
        out
    }

    pub fn leq(&self, a: &CanonicalCode, b: &CanonicalCode) -> bool {
        match (self.index.get(a), self.index.get(b)) {
            (Some(&x), Some(&y)) => self.poset.leq(x, y),
            _ => false,
        }
    }

    /// Element counts per rank, bottom first.
    pub fn rank_sequence(&self) -> Vec<usize> {
        let mut seq = vec![0; self.rank() + 1];
        for e in &self.elements {
            seq[e.rank] += 1;
        }
        seq
    }

    /// Maximal elements of the interior.
    pub fn coatoms(&self) -> Vec<CanonicalCode> {
        let r = self.rank();
        if r < 2 {
            return Vec::new();
        }
        self.elements.iter().filter(|e| e.rank == r - 1).map(|e| e.code.clone()).collect()
    }

    /// `None` when the interior is empty.
    pub fn coatom_unique(&self) -> Option<bool> {
        let c = self.coatoms();
        (!c.is_empty()).then_some(c.len() == 1)
    }

    fn interior(&self) -> FixedBitSet {
        let n = self.len();
        let mut s = FixedBitSet::with_capacity(n);
        if n > 2 {
            s.insert_range(1..n - 1);
        }
        s
    }

    /// Components of the comparability graph on the open interval, each
    /// as a list of canonical codes.
    pub fn interior_components(&self) -> Vec<Vec<CanonicalCode>> {
        self.poset
            .components_within(&self.interior())
            .into_iter()
            .map(|c| c.into_iter().map(|k| self.elements[k].code.clone()).collect())
            .collect()
    }

    /// True iff the open interval splits into two nonempty parts with no
    /// comparabilities between them.
    pub fn interior_disconnected(&self) -> bool {
        self.poset.components_within(&self.interior()).len() >= 2
    }

    /// A disconnected interior in an interval of rank at least 3.
    pub fn nontrivially_disconnected(&self) -> bool {
        self.rank() >= 3 && self.interior_disconnected()
    }

    /// `μ(e, G)` for each element in order, computed on the reversed diagram.
    pub fn mobius_to_top(&self) -> Vec<i64> {
        self.poset.mobius_to(self.len() - 1)
    }

    fn restrict(&self, keep: &FixedBitSet) -> Interval {
        let base = self.elements[keep.ones().next().expect("nonempty restriction")].graph.order();
        let mut graphs = BTreeMap::new();
        for k in keep.ones() {
            let e = &self.elements[k];
            graphs.insert((e.graph.order(), e.code.clone()), e.graph.clone());
        }
        let mut covers = BTreeSet::new();
        for b in keep.ones() {
            for &a in self.poset.lower_covers(b) {
                if keep.contains(a) {
                    covers.insert((self.elements[a].code.clone(), self.elements[b].code.clone()));
                }
            }
        }
        Interval::assemble(self.connected_variant, base, graphs, &covers)
    }

    /// The subinterval `[x, G]`.
    pub fn above(&self, x: &CanonicalCode) -> Option<Interval> {
        let k = self.position(x)?;
        Some(self.restrict(&self.poset.up_set(k)))
    }

    /// The subinterval `[H, x]`.
    pub fn below(&self, x: &CanonicalCode) -> Option<Interval> {
        let k = self.position(x)?;
        Some(self.restrict(self.poset.down_set(k)))
    }

    /// The subinterval `[x, y]`, if `x <= y`.
    pub fn between(&self, x: &CanonicalCode, y: &CanonicalCode) -> Option<Interval> {
        let (a, b) = (self.position(x)?, self.position(y)?);
        if !self.poset.leq(a, b) {
            return None;
        }
        let mut keep = self.poset.up_set(a);
        keep.intersect_with(self.poset.down_set(b));
        Some(self.restrict(&keep))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let elements: Vec<serde_json::Value> = self
            .elements
            .iter()
            .map(|e| {
                serde_json::json!({
                    "code": e.code,
                    "graph6": io::to_graph6(&e.graph).ok(),
                    "order": e.graph.order(),
                    "edges": e.graph.edge_count(),
                    "rank": e.rank,
                    "mu": e.mobius,
                })
            })
            .collect();
        let edges: Vec<[usize; 2]> =
            (0..self.len()).flat_map(|b| self.poset.lower_covers(b).iter().map(move |&a| [a, b])).collect();
        serde_json::json!({
            "bottom": self.bottom().code,
            "top": self.top().code,
            "connected_variant": self.connected_variant,
            "size": self.len(),
            "rank": self.rank(),
            "mu": self.mobius(),
            "rank_sequence": self.rank_sequence(),
            "interior_disconnected": self.interior_disconnected(),
            "nontrivially_disconnected": self.nontrivially_disconnected(),
            "coatoms": self.coatoms(),
            "elements": elements,
            "hasse_edges": edges,
        })
    }

    /// Hasse diagram in DOT, nodes labelled by graph6 (or edge list for
    /// multigraphs), rank and Möbius value.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph interval {\n  rankdir=BT;\n");
        for (k, e) in self.elements.iter().enumerate() {
            let name = io::to_graph6(&e.graph).unwrap_or_else(|_| format!("{:?}", e.graph));
            let label = format!("{name}\\nrank {}\\nμ = {}", e.rank, e.mobius);
            let _ = writeln!(out, "  n{k} [label={}];", io::dot_id(&label).replace("\\\\n", "\\n"));
        }
        for b in 0..self.len() {
            for &a in self.poset.lower_covers(b) {
                let _ = writeln!(out, "  n{a} -- n{b};");
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Build `[h, g]` top-down by single vertex deletions, keeping classes that
/// still contain `h`. With `connected_variant` every element must be connected.
pub fn build_interval(
    canon: &Canonicalizer,
    h: &Graph,
    g: &Graph,
    connected_variant: bool,
) -> Result<Interval, IntervalError> {
    canon.check_order(g)?;
    canon.check_order(h)?;
    if connected_variant && (!h.is_connected() || !g.is_connected()) {
        return Err(IntervalError::DisconnectedEndpoint);
    }
    if h.order() > g.order() || !canon.contains(h, g)? {
        return Err(IntervalError::NotContained);
    }
    let hcode = canon.canonical_form(h)?;
    let gcode = canon.canonical_form(g)?;
    let base = h.order();
    let mut graphs: BTreeMap<(usize, CanonicalCode), Graph> = BTreeMap::new();
    let mut covers = BTreeSet::new();
    let mut level: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
    level.insert(gcode.clone(), gcode.to_graph());
    for k in (base + 1..=g.order()).rev() {
        let mut next: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
        let mut rejected: HashSet<CanonicalCode> = HashSet::new();
        for (code, rep) in &level {
            for v in 0..k {
                let child = rep.delete_vertex(v)?;
                if connected_variant && !child.is_connected() {
                    continue;
                }
                let cc = canon.canonical_form(&child)?;
                if next.contains_key(&cc) {
                    covers.insert((cc, code.clone()));
                    continue;
                }
                if rejected.contains(&cc) {
                    continue;
                }
                let keep = if k - 1 == base { cc == hcode } else { canon.contains(h, &child)? };
                if keep {
                    next.insert(cc.clone(), cc.to_graph());
                    covers.insert((cc, code.clone()));
                } else {
                    rejected.insert(cc);
                }
            }
        }
        for (code, rep) in std::mem::replace(&mut level, next) {
            graphs.insert((k, code), rep);
        }
    }
    for (code, rep) in level {
        graphs.insert((base, code), rep);
    }
    Ok(Interval::assemble(connected_variant, base, graphs, &covers))
}

/// `μ(h, g)` in the poset of all graphs; zero when `h ≰ g`.
pub fn mobius(canon: &Canonicalizer, h: &Graph, g: &Graph) -> Result<i64, IntervalError> {
    match build_interval(canon, h, g, false) {
        Ok(iv) => Ok(iv.mobius()),
        Err(IntervalError::NotContained) => Ok(0),
        Err(e) => Err(e),
    }
}

/// `μ_c(h, g)` in the poset of connected graphs; zero when `h ≰ g`.
pub fn mobius_connected(canon: &Canonicalizer, h: &Graph, g: &Graph) -> Result<i64, IntervalError> {
    match build_interval(canon, h, g, true) {
        Ok(iv) => Ok(iv.mobius()),
        Err(IntervalError::NotContained) => Ok(0),
        Err(e) => Err(e),
    }
}

/// The whole down-set `[∅, g]`.
pub fn down_set(canon: &Canonicalizer, g: &Graph) -> Result<Interval, IntervalError> {
    build_interval(canon, &Graph::null(), g, false)
}

/// Weakly increasing then weakly decreasing.
pub fn is_unimodal(seq: &[usize]) -> bool {
    let mut k = 0;
    while k + 1 < seq.len() && seq[k] <= seq[k + 1] {
        k += 1;
    }
    while k + 1 < seq.len() && seq[k] >= seq[k + 1] {
        k += 1;
    }
    k + 1 >= seq.len()
}
