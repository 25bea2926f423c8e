//! Zero-split and strongly zero-split classification of intervals.
//!
//! Both conditions constrain pairs of occurrences, so a valid partition
//! exists iff the graph joining every constrained pair is disconnected.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::canon::{CanonicalCode, Canonicalizer};
use crate::graph::{Graph, VertexSet};
use crate::interval::{build_interval, IntervalError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitStatus {
    NotZeroSplit,
    ZeroSplitOnly,
    StronglyZeroSplit,
}

/// Occurrences `eta` and `phi` from opposite sides with `G[eta ∪ i] ≅ G[phi ∪ j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitWitness {
    pub eta: VertexSet,
    pub phi: VertexSet,
    pub i: usize,
    pub j: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitReport {
    pub status: SplitStatus,
    pub occurrences: Vec<VertexSet>,
    /// `(A, B)`; for `ZeroSplitOnly` this is a zero-split partition that the
    /// witness defeats.
    pub partition: Option<(Vec<VertexSet>, Vec<VertexSet>)>,
    pub witness: Option<SplitWitness>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn split_by_root(uf: &mut UnionFind, occ: &[VertexSet]) -> Option<(Vec<usize>, Vec<usize>)> {
    let root = uf.find(0);
    let (a, b): (Vec<usize>, Vec<usize>) = (0..occ.len()).partition(|&k| uf.find(k) == root);
    (!b.is_empty()).then_some((a, b))
}

fn pick(occ: &[VertexSet], ks: &[usize]) -> Vec<VertexSet> {
    ks.iter().map(|&k| occ[k].clone()).collect()
}

/// Classify `[h, g]` by its occurrence structure.
pub fn split_classify(canon: &Canonicalizer, h: &Graph, g: &Graph) -> Result<SplitReport, IntervalError> {
    let occ = canon.occurrences(h, g)?.occurrences;
    if occ.is_empty() {
        return Err(IntervalError::NotContained);
    }
    let n = g.order();
    let m = occ.len();
    // Extension classes G[eta ∪ i] for each i outside eta.
    let mut ext: Vec<Vec<(CanonicalCode, usize)>> = Vec::with_capacity(m);
    for eta in &occ {
        let mut e = Vec::new();
        for i in eta.complement_in(n).iter() {
            let sub = g.induced_subgraph(&eta.with(i))?;
            e.push((canon.canonical_form(&sub)?, i));
        }
        e.sort();
        ext.push(e);
    }
    let ext_codes: Vec<BTreeSet<&CanonicalCode>> = ext.iter().map(|e| e.iter().map(|(c, _)| c).collect()).collect();

    let mut zero = UnionFind::new(m);
    let mut strong = UnionFind::new(m);
    for a in 0..m {
        for b in a + 1..m {
            // Z(a) ∩ Z(b) = ∅ exactly when a ∪ b covers every vertex.
            let covers_all = (0..n).all(|v| occ[a].contains(v) || occ[b].contains(v));
            if !covers_all {
                zero.union(a, b);
                strong.union(a, b);
            } else if !ext_codes[a].is_disjoint(&ext_codes[b]) {
                strong.union(a, b);
            }
        }
    }

    if let Some((a, b)) = split_by_root(&mut strong, &occ) {
        return Ok(SplitReport {
            status: SplitStatus::StronglyZeroSplit,
            partition: Some((pick(&occ, &a), pick(&occ, &b))),
            occurrences: occ,
            witness: None,
        });
    }
    if let Some((a, b)) = split_by_root(&mut zero, &occ) {
        let witness = a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y))).find_map(|(x, y)| {
            ext[x].iter().find_map(|(cx, i)| {
                ext[y].iter().find(|(cy, _)| cy == cx).map(|(_, j)| SplitWitness {
                    eta: occ[x].clone(),
                    phi: occ[y].clone(),
                    i: *i,
                    j: *j,
                })
            })
        });
        return Ok(SplitReport {
            status: SplitStatus::ZeroSplitOnly,
            partition: Some((pick(&occ, &a), pick(&occ, &b))),
            occurrences: occ,
            witness,
        });
    }
    Ok(SplitReport { status: SplitStatus::NotZeroSplit, occurrences: occ, partition: None, witness: None })
}

/// Checks that `[h, g]` has a disconnected interior exactly when it is
/// strongly zero-split. Requires `|g| - |h| > 2`.
pub fn verify_disconnection_theorem(canon: &Canonicalizer, h: &Graph, g: &Graph) -> Result<bool, IntervalError> {
    if g.order() < h.order() + 3 {
        return Err(IntervalError::Hypothesis(format!(
            "need |G| - |H| > 2, got |G| = {}, |H| = {}",
            g.order(),
            h.order()
        )));
    }
    let iv = build_interval(canon, h, g, false)?;
    let report = split_classify(canon, h, g)?;
    Ok(iv.interior_disconnected() == (report.status == SplitStatus::StronglyZeroSplit))
}
