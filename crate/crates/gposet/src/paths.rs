//! The poset of path forests. A forest is a multiset of path orders and
//! covers are single vertex deletions, so everything here is arithmetic on
//! multisets and never touches a canonicalizer.

use std::collections::HashMap;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::Graph;
use crate::poset::HassePoset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("path orders must be positive")]
    ZeroPart,
    #[error("operation {op} needs a path of order {} in {multiset}", op.domain_u)]
    InvalidOperation { op: Operation, multiset: PathMultiset },
    #[error("operation {0} is not one of the nine operations on parts of order at most 5")]
    Unsupported(Operation),
    #[error("part {part} exceeds the supported maximum {max}")]
    PartTooLarge { part: usize, max: usize },
    #[error("{bottom} is not contained in {top}")]
    NotContained { bottom: PathMultiset, top: PathMultiset },
    #[error("more than {cap} maximal chains")]
    CapExceeded { cap: usize },
    #[error("malformed operation chain: {0}")]
    MalformedChain(String),
    #[error("graph is not a disjoint union of paths")]
    NotAPathForest,
}

/// A multiset of path orders, stored weakly decreasing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PathMultiset(Vec<usize>);

impl PathMultiset {
    pub fn new(parts: impl IntoIterator<Item = usize>) -> Result<Self, PathError> {
        let mut v: Vec<usize> = parts.into_iter().collect();
        if v.contains(&0) {
            return Err(PathError::ZeroPart);
        }
        v.sort_unstable_by(|a, b| b.cmp(a));
        Ok(PathMultiset(v))
    }

    /// `n` copies of `P_x`.
    pub fn repeated(x: usize, n: usize) -> Result<Self, PathError> {
        Self::new(std::iter::repeat_n(x, n))
    }

    pub fn empty() -> Self {
        PathMultiset(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of vertices, the rank in the path poset.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn max_part(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn count(&self, u: usize) -> usize {
        self.0.iter().filter(|&&p| p == u).count()
    }

    pub fn contains_part(&self, u: usize) -> bool {
        self.0.contains(&u)
    }

    /// Removes one `u` and inserts the nonzero image parts.
    pub fn apply(&self, op: Operation) -> Result<PathMultiset, PathError> {
        let pos = self
            .0
            .iter()
            .position(|&p| p == op.domain_u)
            .ok_or_else(|| PathError::InvalidOperation { op, multiset: self.clone() })?;
        let mut v = self.0.clone();
        v.remove(pos);
        v.extend([op.w1, op.w2].into_iter().filter(|&w| w > 0));
        v.sort_unstable_by(|a, b| b.cmp(a));
        Ok(PathMultiset(v))
    }

    /// Every operation applicable here, with its result, ordered by domain
    /// then image.
    pub fn children(&self) -> Vec<(Operation, PathMultiset)> {
        let mut domains: Vec<usize> = self.0.clone();
        domains.dedup();
        let mut out = Vec::new();
        for u in domains {
            for op in Operation::all_with_domain(u) {
                out.push((op, self.apply(op).expect("domain present")));
            }
        }
        out
    }

    /// Induced containment `P_self ≤ P_other`.
    ///
    /// Parts of `self` are packed into parts of `other`: a host path of
    /// order `t` fits parts `s_1..s_k` iff `Σ (s_i + 1) <= t + 1`.
    pub fn is_contained_in(&self, other: &PathMultiset) -> bool {
        if self.total() > other.total() || self.len() > other.total() {
            return false;
        }
        let mut caps: Vec<usize> = other.0.iter().map(|t| t + 1).collect();
        pack(&self.0, 0, &mut caps)
    }

    pub fn to_graph(&self) -> Graph {
        Graph::path_forest(&self.0).expect("parts are positive")
    }

    pub fn from_graph(g: &Graph) -> Result<Self, PathError> {
        let parts = g.as_path_forest().ok_or(PathError::NotAPathForest)?;
        Self::new(parts)
    }

    /// Compact form such as `5,3,1`; empty for the null graph.
    pub fn word(&self) -> String {
        self.0.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
    }
}

fn pack(items: &[usize], k: usize, caps: &mut [usize]) -> bool {
    if k == items.len() {
        return true;
    }
    let need = items[k] + 1;
    for b in 0..caps.len() {
        // Bins with equal remaining capacity are interchangeable.
        if caps[b] < need || caps[..b].contains(&caps[b]) {
            continue;
        }
        caps[b] -= need;
        if pack(items, k + 1, caps) {
            caps[b] += need;
            return true;
        }
        caps[b] += need;
    }
    false
}

impl fmt::Display for PathMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.word())
    }
}

impl fmt::Debug for PathMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for PathMultiset {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Deleting one vertex of a `P_u`, leaving `P_{w1} ⊔ P_{w2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Operation {
    pub domain_u: usize,
    pub w1: usize,
    pub w2: usize,
}

impl Operation {
    /// Normalizes the image so that `w1 >= w2`.
    pub fn new(domain_u: usize, w1: usize, w2: usize) -> Result<Self, PathError> {
        if domain_u == 0 || w1 + w2 + 1 != domain_u {
            return Err(PathError::MalformedChain(format!("{domain_u}->({w1},{w2}) does not delete one vertex")));
        }
        Ok(Operation { domain_u, w1: w1.max(w2), w2: w1.min(w2) })
    }

    pub fn all_with_domain(u: usize) -> impl Iterator<Item = Operation> {
        (0..=(u.saturating_sub(1)) / 2).map(move |w2| Operation { domain_u: u, w1: u - 1 - w2, w2 })
    }
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.domain_u >= 10 {
            return write!(f, "{}→({},{})", self.domain_u, self.w1, self.w2);
        }
        write!(f, "{}→{}", self.domain_u, self.w1)?;
        if self.w2 > 0 {
            write!(f, "{}", self.w2)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Operation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl std::str::FromStr for Operation {
    type Err = PathError;

    /// Accepts `5→31`, `5->31`, `1→0` and `12->(6,5)`.
    fn from_str(s: &str) -> Result<Self, PathError> {
        let bad = || PathError::MalformedChain(format!("cannot parse operation {s:?}"));
        let (u, w) = s.split_once('→').or_else(|| s.split_once("->")).ok_or_else(bad)?;
        let u: usize = u.trim().parse().map_err(|_| bad())?;
        let w = w.trim();
        let (w1, w2) = if let Some(inner) = w.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            let (a, b) = inner.split_once(',').ok_or_else(bad)?;
            (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?)
        } else {
            let digits: Vec<usize> =
                w.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect::<Option<_>>().ok_or_else(bad)?;
            match digits.as_slice() {
                [a] => (*a, 0),
                [a, b] => (*a, *b),
                _ => return Err(bad()),
            }
        };
        Operation::new(u, w1, w2)
    }
}

/// The closed interval `[bottom, top]` of the path poset with `μ(bottom, ·)`.
#[derive(Clone, Debug)]
pub struct PathInterval {
    elements: Vec<PathMultiset>,
    index: HashMap<PathMultiset, usize>,
    poset: HassePoset,
    mobius: Vec<i64>,
}

impl PathInterval {
    pub fn build(bottom: &PathMultiset, top: &PathMultiset) -> Result<Self, PathError> {
        if !bottom.is_contained_in(top) {
            return Err(PathError::NotContained { bottom: bottom.clone(), top: top.clone() });
        }
        let (elements, lower) = down_closure(top, |m| bottom.is_contained_in(m));
        let index: HashMap<PathMultiset, usize> = elements.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let rank = elements.iter().map(|m| m.total() - bottom.total()).collect();
        let poset = HassePoset::from_lower_covers(rank, lower);
        let mobius = poset.mobius_from(0);
        Ok(PathInterval { elements, index, poset, mobius })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[PathMultiset] {
        &self.elements
    }

    pub fn bottom(&self) -> &PathMultiset {
        &self.elements[0]
    }

    pub fn top(&self) -> &PathMultiset {
        self.elements.last().expect("nonempty")
    }

    pub fn rank(&self) -> usize {
        self.top().total() - self.bottom().total()
    }

    pub fn poset(&self) -> &HassePoset {
        &self.poset
    }

    pub fn position(&self, m: &PathMultiset) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// `μ(bottom, m)`, zero outside the interval.
    pub fn mobius_at(&self, m: &PathMultiset) -> i64 {
        self.position(m).map_or(0, |i| self.mobius[i])
    }

    pub fn mobius(&self) -> i64 {
        *self.mobius.last().expect("nonempty")
    }

    pub fn rank_sequence(&self) -> Vec<usize> {
        let mut seq = vec![0; self.rank() + 1];
        for e in 0..self.len() {
            seq[self.poset.rank(e)] += 1;
        }
        seq
    }
}

/// Everything below `top` that passes `keep`, sorted by `(total, multiset)`,
/// with lower covers as indices. `keep` must be upward closed.
pub(crate) fn down_closure(
    top: &PathMultiset,
    keep: impl Fn(&PathMultiset) -> bool,
) -> (Vec<PathMultiset>, Vec<Vec<usize>>) {
    let mut levels: Vec<Vec<PathMultiset>> = vec![vec![top.clone()]];
    loop {
        let mut next: Vec<PathMultiset> = levels
            .last()
            .expect("nonempty")
            .iter()
            .flat_map(|m| m.children().into_iter().map(|(_, c)| c))
            .filter(|c| keep(c))
            .collect();
        next.sort_unstable();
        next.dedup();
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }
    let elements: Vec<PathMultiset> = levels.into_iter().rev().flatten().collect();
    let index: HashMap<&PathMultiset, usize> = elements.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let lower = elements
        .iter()
        .map(|m| {
            let mut covers: Vec<usize> = m.children().iter().filter_map(|(_, c)| index.get(c).copied()).collect();
            covers.sort_unstable();
            covers.dedup();
            covers
        })
        .collect();
    (elements, lower)
}

/// `μ(P_bottom, P_top)`, zero when `bottom` does not embed in `top`.
pub fn path_mobius(bottom: &PathMultiset, top: &PathMultiset) -> i64 {
    match PathInterval::build(bottom, top) {
        Ok(iv) => iv.mobius(),
        Err(_) => 0,
    }
}

/// `μ(e, top)` for every `e` below `top`, from one top-down pass over the
/// whole down-set.
pub fn mobius_to_top(top: &PathMultiset) -> HashMap<PathMultiset, i64> {
    let (elements, lower) = down_closure(top, |_| true);
    let rank = elements.iter().map(PathMultiset::total).collect();
    let poset = HassePoset::from_lower_covers(rank, lower);
    let mu = poset.mobius_to(elements.len() - 1);
    elements.into_iter().zip(mu).collect()
}
