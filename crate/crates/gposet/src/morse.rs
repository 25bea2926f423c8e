//! Lexicographic discrete Morse theory on intervals of path forests with
//! parts of order at most 5.
//!
//! Chains are read in the dual poset, from the top forest down to the
//! bottom one, one vertex deletion per step. `c_0` is the top and op `t`
//! takes `c_t` to `c_{t+1}`. Chains are ordered lexicographically by their
//! operation sequences under [`OPERATION_ORDER`].
//!
//! An interval `(c_i, c_j)` of a chain is skipped iff some other chain from
//! `c_i` to `c_j` is lexicographically smaller than the chain's own segment.
//! The smallest such chain is found greedily, so `(c_i, c_j)` is skipped iff
//! some step `t` in `i..=j-2` differs from the first step of the smallest
//! chain from `c_t` to `c_j`. That criterion only looks at `c_i..c_j`, which
//! is what makes a single depth-first pass per top enough to evaluate every
//! chain of every interval below it.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::paths::{mobius_to_top, Operation, PathError, PathMultiset};

pub const MAX_PART: usize = 5;

const fn op(domain_u: usize, w1: usize, w2: usize) -> Operation {
    Operation { domain_u, w1, w2 }
}

/// The nine operations on parts of order at most 5, smallest first.
pub const OPERATION_ORDER: [Operation; 9] = [
    op(5, 2, 2),
    op(4, 2, 1),
    op(3, 2, 0),
    op(5, 4, 0),
    op(5, 3, 1),
    op(4, 3, 0),
    op(3, 1, 1),
    op(1, 0, 0),
    op(2, 1, 0),
];

const R_54: u8 = 3;
const R_531: u8 = 4;
const R_311: u8 = 6;
const R_10: u8 = 7;
const R_21: u8 = 8;

/// Position of `op` in [`OPERATION_ORDER`].
pub fn operation_rank(op: Operation) -> Result<usize, PathError> {
    OPERATION_ORDER.iter().position(|&o| o == op).ok_or(PathError::Unsupported(op))
}

pub fn operation_order(a: Operation, b: Operation) -> Result<Ordering, PathError> {
    Ok(operation_rank(a)?.cmp(&operation_rank(b)?))
}

fn check_parts(m: &PathMultiset) -> Result<(), PathError> {
    match m.max_part() {
        p if p > MAX_PART => Err(PathError::PartTooLarge { part: p, max: MAX_PART }),
        _ => Ok(()),
    }
}

/// A maximal chain written as its start and the operations applied.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct OperationChain {
    pub start: PathMultiset,
    pub ops: Vec<Operation>,
}

impl OperationChain {
    /// Fails if some operation's domain is missing at its step.
    pub fn new(start: PathMultiset, ops: Vec<Operation>) -> Result<Self, PathError> {
        let chain = OperationChain { start, ops };
        chain.elements()?;
        Ok(chain)
    }

    /// `c_0, ..., c_r`.
    pub fn elements(&self) -> Result<Vec<PathMultiset>, PathError> {
        let mut out = Vec::with_capacity(self.ops.len() + 1);
        out.push(self.start.clone());
        for &op in &self.ops {
            let next = out.last().expect("nonempty").apply(op)?;
            out.push(next);
        }
        Ok(out)
    }

    pub fn end(&self) -> Result<PathMultiset, PathError> {
        Ok(self.elements()?.pop().expect("nonempty"))
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// The lexicographic chain order. Both chains must use only the nine
    /// supported operations.
    pub fn pl_cmp(&self, other: &OperationChain) -> Result<Ordering, PathError> {
        for (a, b) in self.ops.iter().zip(&other.ops) {
            match operation_order(*a, *b)? {
                Ordering::Equal => continue,
                o => return Ok(o),
            }
        }
        Ok(self.ops.len().cmp(&other.ops.len()))
    }

    /// Multiplicity of `op` in the operation sequence.
    pub fn op_count(&self, op: Operation) -> usize {
        self.ops.iter().filter(|&&o| o == op).count()
    }
}

impl fmt::Display for OperationChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.ops.iter().map(Operation::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for OperationChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.start, self)
    }
}

/// A chain with its minimal skipped intervals and their truncation.
///
/// `msis` holds endpoint indices `(i, j)`. `j_intervals` holds inclusive
/// ranges of interior indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MorseRecord {
    pub chain: OperationChain,
    pub msis: Vec<(usize, usize)>,
    pub j_intervals: Vec<(usize, usize)>,
    pub is_critical: bool,
}

impl MorseRecord {
    pub fn rank(&self) -> usize {
        self.chain.len()
    }

    /// Contribution `(-1)^(|J| - 1)` of a critical chain.
    pub fn critical_sign(&self) -> i64 {
        bh_sign(self.rank(), self.j_intervals.len())
    }
}

/// Every maximal chain of the dual interval from `top` down to `bottom`,
/// smallest first.
pub fn enumerate_maximal_chains(
    top: &PathMultiset,
    bottom: &PathMultiset,
    cap: usize,
) -> Result<Vec<OperationChain>, PathError> {
    check_parts(top)?;
    if !bottom.is_contained_in(top) {
        return Err(PathError::NotContained { bottom: bottom.clone(), top: top.clone() });
    }
    let mut out = Vec::new();
    let mut ops = Vec::new();
    enumerate_rec(top, top, bottom, &mut ops, &mut out, cap)?;
    Ok(out)
}

fn enumerate_rec(
    start: &PathMultiset,
    cur: &PathMultiset,
    bottom: &PathMultiset,
    ops: &mut Vec<Operation>,
    out: &mut Vec<OperationChain>,
    cap: usize,
) -> Result<(), PathError> {
    if cur.total() == bottom.total() {
        if out.len() == cap {
            return Err(PathError::CapExceeded { cap });
        }
        out.push(OperationChain { start: start.clone(), ops: ops.clone() });
        return Ok(());
    }
    for op in OPERATION_ORDER {
        if !cur.contains_part(op.domain_u) {
            continue;
        }
        let next = cur.apply(op)?;
        if bottom.is_contained_in(&next) {
            ops.push(op);
            enumerate_rec(start, &next, bottom, ops, out, cap)?;
            ops.pop();
        }
    }
    Ok(())
}

/// Property of a chain list: the order of two chains is decided by their
/// prefixes up to and including the first differing element.
pub fn is_pl_ordering(chains: &[OperationChain]) -> bool {
    let mut seen: HashSet<(&[Operation], &[Operation])> = HashSet::new();
    for (x, a) in chains.iter().enumerate() {
        for b in &chains[x + 1..] {
            let Some(d) = a.ops.iter().zip(&b.ops).position(|(p, q)| p != q) else {
                return false;
            };
            let key = (&a.ops[..=d], &b.ops[..=d]);
            if seen.contains(&(key.1, key.0)) {
                return false;
            }
            seen.insert(key);
        }
    }
    true
}

/// Inclusion-minimal members of a set of `(i, j)` intervals.
fn minimal_intervals(mut sk: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
    sk.sort_unstable();
    sk.dedup();
    let keep: Vec<(usize, usize)> =
        sk.iter().copied().filter(|&(i, j)| !sk.iter().any(|&(p, q)| (p, q) != (i, j) && i <= p && q <= j)).collect();
    keep
}

/// MSIs by explicit comparison with the chains before `chain` in `context`,
/// which must list the whole interval in order.
pub fn skipped_intervals(chain: &OperationChain, context: &[OperationChain]) -> Result<MorseRecord, PathError> {
    let pos = context
        .iter()
        .position(|c| c == chain)
        .ok_or_else(|| PathError::MalformedChain(format!("{chain:?} is not in the context")))?;
    let mine = chain.elements()?;
    let earlier: Vec<Vec<PathMultiset>> =
        context[..pos].iter().map(OperationChain::elements).collect::<Result<_, _>>()?;
    let r = chain.len();
    let mut skipped = Vec::new();
    for i in 0..r {
        for j in i + 2..=r {
            let hit = earlier.iter().enumerate().any(|(k, b)| {
                b.len() == mine.len()
                    && (0..=i).chain(j..=r).all(|t| b[t] == mine[t])
                    && context[k].pl_cmp(chain) == Ok(Ordering::Less)
            });
            if hit {
                skipped.push((i, j));
            }
        }
    }
    Ok(MorseRecord {
        chain: chain.clone(),
        msis: minimal_intervals(skipped),
        j_intervals: Vec::new(),
        is_critical: false,
    })
}

/// The MSIs computed from the greedy criterion instead of a chain context.
pub fn chain_msis(chain: &OperationChain) -> Result<Vec<(usize, usize)>, PathError> {
    let c = chain.elements()?;
    let ranks: Vec<usize> = chain.ops.iter().map(|&o| operation_rank(o)).collect::<Result<_, _>>()?;
    let mut msis: Vec<(usize, usize)> = Vec::new();
    for j in 2..c.len() {
        let m = (0..j - 1).rev().find(|&t| Some(ranks[t]) != first_op(&c[t], &c[j]));
        if let Some(m) = m {
            if msis.last().is_none_or(|&(i, _)| m > i) {
                msis.push((m, j));
            }
        }
    }
    Ok(msis)
}

fn first_op(from: &PathMultiset, to: &PathMultiset) -> Option<usize> {
    OPERATION_ORDER
        .iter()
        .position(|&o| from.contains_part(o.domain_u) && to.is_contained_in(&from.apply(o).expect("domain present")))
}

/// Truncates MSIs given as endpoint pairs sorted by start; returns the
/// inclusive interior ranges `J_1, J_2, ...`.
pub fn truncate_msis(msis: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut rem: Vec<(usize, usize)> = msis.iter().map(|&(i, j)| (i + 1, j - 1)).collect();
    rem.sort_unstable();
    let mut js = Vec::new();
    while !rem.is_empty() {
        let first = rem.remove(0);
        js.push(first);
        let cut: Vec<(usize, usize)> = rem
            .iter()
            .filter_map(|&(lo, hi)| {
                // Earlier J's end before `first` starts, so only the front
                // of a later range can overlap.
                let lo = if lo <= first.1 { first.1 + 1 } else { lo };
                (lo <= hi).then_some((lo, hi))
            })
            .collect();
        rem = cut
            .iter()
            .copied()
            .filter(|&(lo, hi)| !cut.iter().any(|&(a, b)| (a, b) != (lo, hi) && lo <= a && b <= hi))
            .collect();
        rem.sort_unstable();
        rem.dedup();
    }
    js
}

fn covers_interior(js: &[(usize, usize)], rank: usize) -> bool {
    let mut need = 1;
    for &(lo, hi) in js {
        if lo > need {
            return false;
        }
        need = need.max(hi + 1);
    }
    need >= rank
}

pub fn compute_j_intervals(mut rec: MorseRecord) -> MorseRecord {
    rec.j_intervals = truncate_msis(&rec.msis);
    rec.is_critical = covers_interior(&rec.j_intervals, rec.chain.len());
    rec
}

/// Records for every chain of the interval, via the greedy criterion.
pub fn morse_records(top: &PathMultiset, bottom: &PathMultiset, cap: usize) -> Result<Vec<MorseRecord>, PathError> {
    enumerate_maximal_chains(top, bottom, cap)?
        .into_iter()
        .map(|chain| {
            let msis = chain_msis(&chain)?;
            Ok(compute_j_intervals(MorseRecord { chain, msis, j_intervals: Vec::new(), is_critical: false }))
        })
        .collect()
}

/// Forests below a set of tops, with per-element lookup tables.
struct Universe {
    elems: Vec<PathMultiset>,
    child: Vec<[u16; 9]>,
    /// `down[x]` holds every `y <= x`.
    down: Vec<FixedBitSet>,
    /// `firstop[c][d]`: rank of the smallest operation from `c` whose result
    /// still contains `d`, or `NONE`.
    firstop: Vec<Vec<u8>>,
    index: HashMap<PathMultiset, u16>,
}

const NONE16: u16 = u16::MAX;
const NONE8: u8 = u8::MAX;

impl Universe {
    fn below(tops: &[PathMultiset]) -> Self {
        let mut all: Vec<PathMultiset> = Vec::new();
        let mut seen: HashSet<PathMultiset> = HashSet::new();
        let mut stack: Vec<PathMultiset> = tops.to_vec();
        while let Some(m) = stack.pop() {
            if seen.insert(m.clone()) {
                for (_, c) in m.children() {
                    stack.push(c);
                }
                all.push(m);
            }
        }
        all.sort_unstable_by(|a, b| (a.total(), a).cmp(&(b.total(), b)));
        assert!(all.len() < NONE16 as usize, "universe too large");
        let index: HashMap<PathMultiset, u16> = all.iter().cloned().enumerate().map(|(i, m)| (m, i as u16)).collect();
        let n = all.len();
        let mut child = vec![[NONE16; 9]; n];
        let mut down: Vec<FixedBitSet> = Vec::with_capacity(n);
        for (x, m) in all.iter().enumerate() {
            let mut d = FixedBitSet::with_capacity(n);
            d.insert(x);
            for (r, o) in OPERATION_ORDER.iter().enumerate() {
                if m.contains_part(o.domain_u) {
                    let c = index[&m.apply(*o).expect("domain present")];
                    child[x][r] = c;
                    d.union_with(&down[c as usize]);
                }
            }
            down.push(d);
        }
        let firstop = (0..n)
            .map(|c| {
                let mut row = vec![NONE8; n];
                for d in down[c].ones() {
                    row[d] = (0..9)
                        .find(|&r| child[c][r] != NONE16 && down[child[c][r] as usize].contains(d))
                        .map_or(NONE8, |r| r as u8);
                }
                row
            })
            .collect();
        Universe { elems: all, child, down, firstop, index }
    }

    /// All forests with parts at most 5 and at most `max_total` vertices.
    fn all(max_total: usize) -> Self {
        let tops: Vec<PathMultiset> = partitions_bounded(max_total, MAX_PART);
        Self::below(&tops)
    }
}

/// Multisets with parts in `1..=max_part` and total exactly `n`.
fn partitions_exact(n: usize, max_part: usize) -> Vec<PathMultiset> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<PathMultiset>) {
        if n == 0 {
            out.push(PathMultiset::new(cur.iter().copied()).expect("positive"));
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_part, &mut Vec::new(), &mut out);
    out
}

/// Multisets with parts in `1..=max_part` and total at most `n`.
pub fn partitions_bounded(n: usize, max_part: usize) -> Vec<PathMultiset> {
    (0..=n).flat_map(|k| partitions_exact(k, max_part)).collect()
}

/// State of a chain prefix during the depth-first pass.
struct Prefix {
    path: Vec<u16>,
    ops: Vec<u8>,
    msis: Vec<(usize, usize)>,
}

impl Prefix {
    fn j_count_if_critical(&self) -> Option<usize> {
        let r = self.ops.len();
        if r <= 1 {
            return Some(0);
        }
        let js = truncate_msis(&self.msis);
        covers_interior(&js, r).then_some(js.len())
    }

    fn chain(&self, u: &Universe) -> OperationChain {
        OperationChain {
            start: u.elems[self.path[0] as usize].clone(),
            ops: self.ops.iter().map(|&r| OPERATION_ORDER[r as usize]).collect(),
        }
    }
}

fn dfs(u: &Universe, p: &mut Prefix, target: Option<u16>, visit: &mut impl FnMut(&Prefix, Option<(usize, usize)>)) {
    let k = p.path.len() - 1;
    let c_k = p.path[k] as usize;
    let mut new_msi = None;
    if k >= 2 {
        let m = (0..k - 1).rev().find(|&t| p.ops[t] != u.firstop[p.path[t] as usize][c_k]);
        if let Some(m) = m {
            if p.msis.last().is_none_or(|&(i, _)| m > i) {
                p.msis.push((m, k));
                new_msi = Some((m, k));
            }
        }
    }
    visit(p, new_msi);
    for r in 0..9u8 {
        let c = u.child[c_k][r as usize];
        if c == NONE16 || target.is_some_and(|t| !u.down[c as usize].contains(t as usize)) {
            continue;
        }
        p.path.push(c);
        p.ops.push(r);
        dfs(u, p, target, visit);
        p.path.pop();
        p.ops.pop();
    }
    if new_msi.is_some() {
        p.msis.pop();
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MorseSummary {
    pub top: PathMultiset,
    pub bottom: PathMultiset,
    pub rank: usize,
    pub chain_count: u64,
    pub critical_count: u64,
    /// Critical chains in chain order, truncated at the listing cap.
    pub critical_chains: Vec<OperationChain>,
    /// `Σ (-1)^(|J(C)| - 1)` over critical chains.
    pub mobius: i64,
    /// `(-1)^rank` times the number of critical chains.
    pub rank_sign_mobius: i64,
}

/// Maximum number of critical chains kept in a summary's listing.
pub const CRITICAL_LISTING_CAP: usize = 1000;

/// `μ(P_bottom, P_top)` from the critical chains of the interval.
pub fn mobius_via_morse(top: &PathMultiset, bottom: &PathMultiset) -> Result<MorseSummary, PathError> {
    check_parts(top)?;
    if !bottom.is_contained_in(top) {
        return Err(PathError::NotContained { bottom: bottom.clone(), top: top.clone() });
    }
    let u = Universe::below(std::slice::from_ref(top));
    let t = u.index[top];
    let b = u.index[bottom];
    let rank = top.total() - bottom.total();
    let mut s = MorseSummary {
        top: top.clone(),
        bottom: bottom.clone(),
        rank,
        chain_count: 0,
        critical_count: 0,
        critical_chains: Vec::new(),
        mobius: 0,
        rank_sign_mobius: 0,
    };
    let mut p = Prefix { path: vec![t], ops: Vec::new(), msis: Vec::new() };
    dfs(&u, &mut p, Some(b), &mut |p, _| {
        if *p.path.last().expect("nonempty") != b {
            return;
        }
        s.chain_count += 1;
        if let Some(jc) = p.j_count_if_critical() {
            s.critical_count += 1;
            s.mobius += bh_sign(p.ops.len(), jc);
            if s.critical_chains.len() < CRITICAL_LISTING_CAP {
                s.critical_chains.push(p.chain(&u));
            }
        }
    });
    s.rank_sign_mobius = if rank % 2 == 0 { 1 } else { -1 } * s.critical_count as i64;
    Ok(s)
}

fn bh_sign(rank: usize, j_count: usize) -> i64 {
    if rank == 0 || j_count % 2 == 1 {
        1
    } else {
        -1
    }
}

/// An MSI that breaks one of the structural rules checked during a sweep.
#[derive(Clone, Debug, Serialize)]
pub struct LemmaViolation {
    pub rule: &'static str,
    pub reading: SegmentReading,
    pub chain: OperationChain,
    pub msi: (usize, usize),
}

/// Per-interval agreement data from [`morse_sweep`].
#[derive(Clone, Debug, Serialize)]
pub struct SweepRow {
    pub top: PathMultiset,
    pub bottom: PathMultiset,
    pub chains: u64,
    pub critical: u64,
    pub morse: i64,
    pub rank_sign: i64,
    pub recursion: i64,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SweepReport {
    pub max_total: usize,
    pub lemma_total: usize,
    pub intervals: usize,
    pub chains: u64,
    pub msis_checked: u64,
    pub mismatches: Vec<SweepRow>,
    /// Intervals where the rank-signed count differs from the signed sum.
    pub sign_rule_differences: Vec<SweepRow>,
    pub violations: Vec<LemmaViolation>,
    /// Violations per `rule/reading`.
    pub violation_counts: BTreeMap<String, u64>,
}

const MAX_VIOLATIONS: usize = 100;

/// Checks the critical-chain value against the recursion for every interval
/// whose top has parts at most 5 and at most `max_total` vertices, and checks
/// every MSI of tops with at most `lemma_total` vertices against the
/// structural rules.
pub fn morse_sweep(max_total: usize, lemma_total: usize) -> SweepReport {
    let u = Universe::all(max_total);
    let mut report = SweepReport { max_total, lemma_total, ..Default::default() };
    for t in 0..u.elems.len() {
        let top = &u.elems[t];
        let recursion = mobius_to_top(top);
        let check = top.total() <= lemma_total;
        // bottom index -> (chains, critical, signed sum)
        let mut acc: BTreeMap<u16, (u64, u64, i64)> = BTreeMap::new();
        let mut p = Prefix { path: vec![t as u16], ops: Vec::new(), msis: Vec::new() };
        dfs(&u, &mut p, None, &mut |p, new_msi| {
            let b = *p.path.last().expect("nonempty");
            let e = acc.entry(b).or_default();
            e.0 += 1;
            if let Some(jc) = p.j_count_if_critical() {
                e.1 += 1;
                e.2 += bh_sign(p.ops.len(), jc);
            }
            if let (true, Some(msi)) = (check, new_msi) {
                report.msis_checked += 1;
                for reading in [SegmentReading::Full, SegmentReading::Interior] {
                    for rule in lemma_screens(&p.ops, msi, reading) {
                        *report.violation_counts.entry(format!("{rule}/{reading:?}")).or_default() += 1;
                        if report.violations.len() < MAX_VIOLATIONS {
                            report.violations.push(LemmaViolation { rule, reading, chain: p.chain(&u), msi });
                        }
                    }
                }
            }
        });
        for (b, (chains, critical, morse)) in acc {
            let bottom = &u.elems[b as usize];
            let rank = top.total() - bottom.total();
            let row = SweepRow {
                top: top.clone(),
                bottom: bottom.clone(),
                chains,
                critical,
                morse,
                rank_sign: if rank % 2 == 0 { 1 } else { -1 } * critical as i64,
                recursion: recursion[bottom],
            };
            report.intervals += 1;
            report.chains += chains;
            if row.morse != row.recursion {
                report.mismatches.push(row.clone());
            }
            if row.rank_sign != row.morse {
                report.sign_rule_differences.push(row);
            }
        }
    }
    report
}

/// Which operations of an MSI `(i, j)` count as its own.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SegmentReading {
    /// `op_i, ..., op_{j-1}`: every step from `c_i` to `c_j`.
    Full,
    /// `op_{i+1}, ..., op_{j-2}`: only steps between interior elements.
    Interior,
}

/// Rules an MSI `(i, j)` must satisfy under `reading`; returns the names of
/// the rules it breaks.
fn lemma_screens(ops: &[u8], (i, j): (usize, usize), reading: SegmentReading) -> Vec<&'static str> {
    let seg = match reading {
        SegmentReading::Full => &ops[i..j],
        SegmentReading::Interior => &ops[i + 1..j - 1],
    };
    let size = j - i - 1;
    let mut broken = Vec::new();
    if seg.last() == Some(&R_21) {
        broken.push("ends_with_2to1");
    }
    if seg.first() == Some(&R_54) && size != 1 {
        broken.push("starts_with_5to4_not_size_1");
    }
    if size > 1 {
        let inverted =
            (0..seg.len()).any(|x| (x + 1..seg.len()).any(|y| seg[y] < seg[x] && !(seg[y] == R_10 && seg[x] == R_21)));
        if inverted {
            broken.push("inversion");
        }
        if seg.contains(&R_311) && seg.contains(&R_10) {
            broken.push("contains_3to11_and_1to0");
        }
        if seg.contains(&R_531) && seg.contains(&R_10) {
            broken.push("contains_5to31_and_1to0");
        }
    }
    broken
}

/// The chains from `5^n` to `1^n` built from `5→31` and `3→11`, each
/// followed at once by `1→0`, with every prefix holding more `5→31` than
/// `3→11` before each `3→11`.
pub fn dyck_chains(n: usize) -> Vec<OperationChain> {
    let up = OPERATION_ORDER[R_531 as usize];
    let down = OPERATION_ORDER[R_311 as usize];
    let drop = OPERATION_ORDER[R_10 as usize];
    let start = PathMultiset::repeated(5, n).expect("positive");
    let mut out = Vec::new();
    for mask in 0u64..(1 << (2 * n)) {
        if mask.count_ones() as usize != n {
            continue;
        }
        let mut ops = Vec::with_capacity(4 * n);
        let mut height = 0i64;
        let mut ok = true;
        for s in 0..2 * n {
            if mask >> s & 1 == 1 {
                ops.push(up);
                height += 1;
            } else {
                if height == 0 {
                    ok = false;
                    break;
                }
                ops.push(down);
                height -= 1;
            }
            ops.push(drop);
        }
        if ok {
            if let Ok(c) = OperationChain::new(start.clone(), ops) {
                out.push(c);
            }
        }
    }
    out.sort_by(|a, b| a.pl_cmp(b).expect("supported operations"));
    out
}

pub fn dyck_critical_count(n: usize) -> u64 {
    dyck_chains(n).len() as u64
}

/// One reading of a cell of the operation-pair table.
#[derive(Clone, Debug, Serialize)]
pub struct Table1Variant {
    pub chain: [PathMultiset; 3],
    /// Everything reachable from `c_i` by an operation before the first one.
    pub earlier_elements: Vec<PathMultiset>,
    /// For each earlier element, the operation taking it to `c_{i+2}`.
    pub rescue_ops: Vec<Option<Operation>>,
    pub has_size1_msi: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Table1Cell {
    pub first: Operation,
    pub second: Operation,
    /// `c_i` holding both domains, then `c_i` holding only the first domain
    /// when the second domain lies in the first image.
    pub variants: Vec<Table1Variant>,
}

impl Table1Cell {
    pub fn verdicts(&self) -> Vec<bool> {
        self.variants.iter().map(|v| v.has_size1_msi).collect()
    }
}

pub fn table1_cell(first: Operation, second: Operation) -> Result<Table1Cell, PathError> {
    let r1 = operation_rank(first)?;
    operation_rank(second)?;
    let mut starts = vec![PathMultiset::new([first.domain_u, second.domain_u])?];
    if [first.w1, first.w2].contains(&second.domain_u) {
        starts.push(PathMultiset::new([first.domain_u])?);
    }
    let mut variants = Vec::new();
    for c0 in starts {
        let c1 = c0.apply(first)?;
        let c2 = c1.apply(second)?;
        let mut earlier = Vec::new();
        let mut rescue = Vec::new();
        for o in &OPERATION_ORDER[..r1] {
            if !c0.contains_part(o.domain_u) {
                continue;
            }
            let b = c0.apply(*o)?;
            let fix = OPERATION_ORDER
                .iter()
                .copied()
                .find(|p| b.contains_part(p.domain_u) && b.apply(*p).ok().as_ref() == Some(&c2));
            earlier.push(b);
            rescue.push(fix);
        }
        let has = rescue.iter().any(Option::is_some);
        variants.push(Table1Variant {
            chain: [c0, c1, c2],
            earlier_elements: earlier,
            rescue_ops: rescue,
            has_size1_msi: has,
        });
    }
    Ok(Table1Cell { first, second, variants })
}

/// All 81 cells, rows by first operation.
pub fn table1() -> Vec<Vec<Table1Cell>> {
    OPERATION_ORDER
        .iter()
        .map(|&a| OPERATION_ORDER.iter().map(|&b| table1_cell(a, b).expect("supported")).collect())
        .collect()
}
