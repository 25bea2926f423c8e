//! Reproducible experiment suites. Each returns an [`ExperimentReport`]
//! whose rows record where every value came from (`recursion`,
//! `closed_form`, `morse`, `expected` for a published value) and whether
//! the sources agree.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::canon::{CanonError, CanonicalCode, Canonicalizer};
use crate::enumerate::simple_graphs_up_to;
use crate::fixtures;
use crate::formulas::{self, FormulaError};
use crate::graph::{Graph, GraphError};
use crate::interval::{build_interval, down_set, is_unimodal, mobius, IntervalError};
use crate::io;
use crate::morse::{self, mobius_via_morse, MAX_PART};
use crate::paths::{path_mobius, PathError, PathMultiset};
use crate::split::split_classify;

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error(transparent)]
    Canon(#[from] CanonError),
    #[error(transparent)]
    Interval(#[from] IntervalError),
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{0}")]
    Bound(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct ExperimentReport {
    pub name: String,
    pub parameters: BTreeMap<String, Value>,
    pub rows: Vec<Value>,
    /// True iff every cross-check in `rows` matched.
    pub agreement: bool,
    pub runtime_secs: f64,
    pub notes: Vec<String>,
}

impl ExperimentReport {
    fn new(name: &str) -> Self {
        ExperimentReport {
            name: name.to_string(),
            parameters: BTreeMap::new(),
            rows: Vec::new(),
            agreement: true,
            runtime_secs: 0.0,
            notes: Vec::new(),
        }
    }

    fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.parameters.insert(key.to_string(), json!(value));
        self
    }

    fn finish(mut self, start: Instant) -> Self {
        self.runtime_secs = start.elapsed().as_secs_f64();
        self
    }

    /// Plain-text rendering: one `key=value` line per row.
    pub fn to_text(&self) -> String {
        let mut out = format!("# {}", self.name);
        for (k, v) in &self.parameters {
            out.push_str(&format!(" {k}={}", plain(v)));
        }
        out.push('\n');
        for row in &self.rows {
            let line = match row {
                Value::Object(m) => m.iter().map(|(k, v)| format!("{k}={}", plain(v))).collect::<Vec<_>>().join(" "),
                other => plain(other),
            };
            out.push_str(&line);
            out.push('\n');
        }
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        out.push_str(&format!("agreement={} runtime={:.3}s\n", self.agreement, self.runtime_secs));
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        other => other.to_string(),
    }
}

/// `μ(nK_1, n P_x)` for every `n, x >= 1` with `n + x <= max_total`, by the
/// path-forest recursion, against the published table and the closed form.
/// Small tops (parts at most 5, at most 12 vertices) also get the
/// critical-chain count.
pub fn table2(max_total: usize) -> Result<ExperimentReport, ExperimentError> {
    let start = Instant::now();
    let expected = fixtures::table2();
    let mut report = ExperimentReport::new("table2").param("max_total", max_total);
    for n in 1..max_total {
        for x in 1..=max_total - n {
            let bottom = PathMultiset::repeated(1, n)?;
            let top = PathMultiset::repeated(x, n)?;
            let recursion = path_mobius(&bottom, &top);
            let published = expected.get(n, x);
            let closed = formulas::mu_n_paths_column(x, n);
            let morse = if x <= MAX_PART && n * x <= 12 { Some(mobius_via_morse(&top, &bottom)?.mobius) } else { None };
            let ok = [published, closed, morse].iter().flatten().all(|&v| v == recursion);
            report.agreement &= ok;
            report.rows.push(json!({
                "n": n, "x": x, "recursion": recursion, "expected": published,
                "closed_form": closed, "morse": morse, "match": ok,
            }));
        }
    }
    Ok(report.finish(start))
}

/// One interval `[H, G]` of the census.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CensusEntry {
    pub g_order: usize,
    pub h_order: usize,
    pub mobius: i64,
}

/// `μ(H, G)` for every pair of isomorphism classes `H ≤ G` of simple graphs
/// with `|G| <= n`, the null graph included on both sides.
pub fn interval_census(canon: &Canonicalizer, n: usize) -> Result<Vec<CensusEntry>, ExperimentError> {
    let graphs: Vec<Graph> = simple_graphs_up_to(canon, n)?.into_iter().flatten().map(|(_, g)| g).collect();
    let per_graph: Result<Vec<Vec<CensusEntry>>, ExperimentError> = graphs
        .par_iter()
        .map(|g| {
            let iv = down_set(canon, g)?;
            let mu = iv.mobius_to_top();
            Ok(iv
                .elements()
                .iter()
                .zip(mu)
                .map(|(e, m)| CensusEntry { g_order: g.order(), h_order: e.graph.order(), mobius: m })
                .collect())
        })
        .collect();
    Ok(per_graph?.into_iter().flatten().collect())
}

/// Which pairs of the census count as intervals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CensusConvention {
    /// `H` non-null, `H = G` included. The reported convention.
    NonNull,
    /// The null graph allowed as `H`.
    WithNull,
    /// `H` non-null, rank at least 1.
    NonNullProper,
    /// `H` non-null, rank at least 2.
    NonNullRankTwo,
}

impl CensusConvention {
    pub const ALL: [CensusConvention; 4] = [
        CensusConvention::NonNull,
        CensusConvention::WithNull,
        CensusConvention::NonNullProper,
        CensusConvention::NonNullRankTwo,
    ];

    pub fn admits(self, e: &CensusEntry) -> bool {
        let rank = e.g_order - e.h_order;
        match self {
            CensusConvention::NonNull => e.h_order > 0,
            CensusConvention::WithNull => true,
            CensusConvention::NonNullProper => e.h_order > 0 && rank >= 1,
            CensusConvention::NonNullRankTwo => e.h_order > 0 && rank >= 2,
        }
    }
}

/// `(zeros, intervals)` among census entries with `|G| <= n` admitted by
/// the convention.
pub fn zero_count(census: &[CensusEntry], n: usize, convention: CensusConvention) -> (u64, u64) {
    census
        .iter()
        .filter(|e| e.g_order <= n && convention.admits(e))
        .fold((0, 0), |(z, t), e| (z + u64::from(e.mobius == 0), t + 1))
}

/// Percentage of intervals with `μ = 0` for `|G| <= m`, `m = 1..=n`, under
/// each convention. Agreement is judged on the `non_null` convention
/// against the published percentages.
pub fn zero_proportion(canon: &Canonicalizer, n: usize) -> Result<ExperimentReport, ExperimentError> {
    let start = Instant::now();
    let expected = fixtures::zero_proportion();
    let census = interval_census(canon, n)?;
    let mut report =
        ExperimentReport::new("zero_proportion").param("n", n).param("tolerance_points", expected.tolerance_points);
    for convention in CensusConvention::ALL {
        for m in 1..=n {
            let (zeros, total) = zero_count(&census, m, convention);
            let percent = 100.0 * zeros as f64 / total.max(1) as f64;
            let published = expected.percent.get(&m).copied();
            let within = published.map(|p| (p - percent).abs() <= expected.tolerance_points);
            if convention == CensusConvention::NonNull && within == Some(false) {
                report.agreement = false;
            }
            report.rows.push(json!({
                "convention": convention, "n": m, "zeros": zeros, "intervals": total,
                "percent": (percent * 100.0).round() / 100.0, "expected": published, "within_tolerance": within,
            }));
        }
    }
    if !report.agreement {
        report.notes.push(
            "no listed convention reproduces the published percentages; see the README for the wider search".into(),
        );
    }
    Ok(report.finish(start))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conjecture {
    Schroder,
    House,
    Unimodal,
    Coatoms,
    Alternating,
}

pub fn conjecture(canon: &Canonicalizer, which: Conjecture, bound: usize) -> Result<ExperimentReport, ExperimentError> {
    match which {
        Conjecture::Schroder => schroder(bound),
        Conjecture::House => house(canon, bound),
        Conjecture::Unimodal => unimodal(canon, bound),
        Conjecture::Coatoms => coatoms(canon, bound),
        Conjecture::Alternating => alternating(canon, bound),
    }
}

/// `μ(nK_1, x P_5 ⊔ y P_4)` against `(-1)^y T(n, x)` for `n <= bound`.
pub fn schroder(bound: usize) -> Result<ExperimentReport, ExperimentError> {
    let start = Instant::now();
    let mut report = ExperimentReport::new("conjecture_schroder").param("bound", bound);
    for n in 1..=bound {
        for x in 0..=n {
            let y = n - x;
            let mut parts = vec![5; x];
            parts.extend(std::iter::repeat_n(4, y));
            let top = PathMultiset::new(parts)?;
            let recursion = path_mobius(&PathMultiset::repeated(1, n)?, &top);
            let sign = if y % 2 == 0 { 1 } else { -1 };
            let predicted = sign * formulas::schroder(n as u64, x as u64)?;
            report.agreement &= recursion == predicted;
            report.rows.push(json!({
                "n": n, "x": x, "y": y, "top": top.word(), "recursion": recursion,
                "conjectured": predicted, "match": recursion == predicted,
            }));
        }
    }
    Ok(report.finish(start))
}

/// `μ(nK_1, H^n)` for `n` disjoint houses against `μ(nK_1, n P_5)` and the
/// Catalan number.
pub fn house(canon: &Canonicalizer, bound: usize) -> Result<ExperimentReport, ExperimentError> {
    let start = Instant::now();
    if 5 * bound > canon.max_order() {
        return Err(ExperimentError::Bound(format!("{bound} houses need {} vertices; raise --max-order", 5 * bound)));
    }
    let mut report = ExperimentReport::new("conjecture_house").param("bound", bound);
    for n in 1..=bound {
        let mut g = Graph::null();
        for _ in 0..n {
            g = g.disjoint_union(&Graph::house());
        }
        let recursion = mobius(canon, &Graph::empty(n), &g)?;
        let paths = path_mobius(&PathMultiset::repeated(1, n)?, &PathMultiset::repeated(5, n)?);
        let catalan = formulas::catalan(n as u64)?;
        let ok = recursion == catalan && paths == catalan;
        report.agreement &= ok;
        report.rows.push(json!({
            "n": n, "recursion": recursion, "paths_recursion": paths, "catalan": catalan, "match": ok,
        }));
    }
    Ok(report.finish(start))
}

fn graph_label(g: &Graph) -> String {
    io::to_graph6(g).unwrap_or_else(|_| format!("{g:?}"))
}

/// Rank sequences of every `[H, G]` and `[H, G]^c` with `|G| <= bound`.
pub fn unimodal(canon: &Canonicalizer, bound: usize) -> Result<ExperimentReport, ExperimentError> {
    let start = Instant::now();
    let graphs: Vec<Graph> = simple_graphs_up_to(canon, bound)?.into_iter().flatten().map(|(_, g)| g).collect();
    let per_graph: Result<Vec<(u64, u64, Vec<Value>)>, ExperimentError> = graphs
        .par_iter()
        .map(|g| {
            let mut checked = (0u64, 0u64);
            let mut bad = Vec::new();
            let full = down_set(canon, g)?;
            let mut variants = vec![(false, full)];
            if g.order() > 0 && g.is_connected() {
                variants.push((true, build_interval(canon, &Graph::complete(1), g, true)?));
            }
            for (connected, iv) in &variants {
                for e in iv.elements() {
                    let sub = iv.above(&e.code).expect("element of the interval");
                    let seq = sub.rank_sequence();
                    if *connected {
                        checked.1 += 1;
                    } else {
                        checked.0 += 1;
                    }
                    if !is_unimodal(&seq) {
                        bad.push(json!({
                            "connected_variant": connected, "h": graph_label(&e.graph),
                            "g": graph_label(g), "rank_sequence": seq,
                        }));
                    }
                }
            }
            Ok((checked.0, checked.1, bad))
        })
        .collect();
    let mut report = ExperimentReport::new("conjecture_unimodal").param("bound", bound);
    let (mut all, mut conn) = (0, 0);
    for (a, c, bad) in per_graph? {
        all += a;
        conn += c;
        report.rows.extend(bad);
    }
    report.agreement = report.rows.is_empty();
    report.parameters.insert("intervals_checked".into(), json!(all));
    report.parameters.insert("connected_intervals_checked".into(), json!(conn));
    report.parameters.insert("violations".into(), json!(report.rows.len()));
    Ok(report.finish(start))
}

/// Groups `[H, G]` with `|G| - |H| >= 2` by `H` and the coatom set, and lists
/// every group holding more than one `G`.
pub fn coatoms(canon: &Canonicalizer, bound: usize) -> Result<ExperimentReport, ExperimentError> {
    let start = Instant::now();
    let graphs: Vec<Graph> = simple_graphs_up_to(canon, bound)?.into_iter().flatten().map(|(_, g)| g).collect();
    type Key = (CanonicalCode, Vec<CanonicalCode>);
    let per_graph: Result<Vec<Vec<(Key, (usize, CanonicalCode, String, String))>>, ExperimentError> = graphs
        .par_iter()
        .map(|g| {
            let iv = down_set(canon, g)?;
            let top = iv.top().code.clone();
            let mut out = Vec::new();
            for e in iv.elements().iter().filter(|e| e.graph.order() > 0 && e.graph.order() + 2 <= g.order()) {
                let sub = iv.above(&e.code).expect("element of the interval");
                let mut cs = sub.coatoms();
                cs.sort();
                out.push(((e.code.clone(), cs), (g.order(), top.clone(), graph_label(&e.graph), graph_label(g))));
            }
            Ok(out)
        })
        .collect();
    let mut groups: BTreeMap<Key, Vec<(usize, CanonicalCode, String, String)>> = BTreeMap::new();
    let mut pairs = 0u64;
    for (key, val) in per_graph?.into_iter().flatten() {
        pairs += 1;
        groups.entry(key).or_default().push(val);
    }
    let mut report =
        ExperimentReport::new("conjecture_coatoms").param("bound", bound).param("intervals_checked", pairs);
    for ((_, coatoms), tops) in groups.iter().filter(|(_, v)| v.len() > 1) {
        let h = tops[0].2.clone();
        let coatom_labels: Vec<String> = coatoms.iter().map(|c| graph_label(&c.to_graph())).collect();
        let gs: Vec<&str> = tops.iter().map(|t| t.3.as_str()).collect();
        report.rows.push(json!({ "h": h, "coatoms": coatom_labels, "tops": gs }));
    }
    report.agreement = report.rows.is_empty();
    report.parameters.insert("collisions".into(), json!(report.rows.len()));
    Ok(report.finish(start))
}

const SIGN_LISTING_CAP: usize = 200;

/// Pairs `H ≤ G`, `|G| <= bound`, with `μ(H, G) ≠ 0` of the wrong sign for
/// its rank, plus the published non-alternating example.
pub fn alternating(canon: &Canonicalizer, bound: usize) -> Result<ExperimentReport, ExperimentError> {
    let start = Instant::now();
    let graphs: Vec<Graph> = simple_graphs_up_to(canon, bound)?.into_iter().flatten().map(|(_, g)| g).collect();
    let per_graph: Result<Vec<Vec<Value>>, ExperimentError> = graphs
        .par_iter()
        .map(|g| {
            let iv = down_set(canon, g)?;
            let mu = iv.mobius_to_top();
            Ok(iv
                .elements()
                .iter()
                .zip(mu)
                .filter(|(e, m)| {
                    let rank = g.order() - e.graph.order();
                    e.graph.order() > 0 && *m != 0 && (*m > 0) != (rank % 2 == 0)
                })
                .map(|(e, m)| {
                    json!({
                        "h": graph_label(&e.graph), "g": graph_label(g),
                        "rank": g.order() - e.graph.order(), "mu": m,
                    })
                })
                .collect())
        })
        .collect();
    let violations: Vec<Value> = per_graph?.into_iter().flatten().collect();
    let fig = fixtures::nonalternating_graph();
    let fig_mu = mobius(canon, &Graph::empty(2), &fig)?;
    let mut report = ExperimentReport::new("conjecture_alternating")
        .param("bound", bound)
        .param("sign_violations", violations.len());
    report.rows.push(json!({
        "h": "2K1", "g": graph_label(&fig), "rank": 5, "mu": fig_mu, "expected": 1, "match": fig_mu == 1,
    }));
    report.agreement = fig_mu == 1;
    report.rows.extend(violations.into_iter().take(SIGN_LISTING_CAP));
    Ok(report.finish(start))
}

/// Critical chains of `[P_bottom, P_top]` with the Morse value against the
/// recursion.
pub fn morse_report(top: &PathMultiset, bottom: &PathMultiset) -> Result<ExperimentReport, ExperimentError> {
    let start = Instant::now();
    let summary = mobius_via_morse(top, bottom)?;
    let recursion = path_mobius(bottom, top);
    let mut report = ExperimentReport::new("morse")
        .param("top", top.word())
        .param("bottom", bottom.word())
        .param("rank", summary.rank)
        .param("chains", summary.chain_count)
        .param("critical", summary.critical_count)
        .param("morse", summary.mobius)
        .param("recursion", recursion)
        .param("rank_sign_count", summary.rank_sign_mobius);
    report.rows = summary.critical_chains.iter().map(|c| json!({ "critical_chain": c.to_string() })).collect();
    report.agreement = summary.mobius == recursion;
    if summary.rank_sign_mobius != summary.mobius {
        report.notes.push(format!(
            "(-1)^rank times the critical count gives {}, the signed sum over J gives {}",
            summary.rank_sign_mobius, summary.mobius
        ));
    }
    if (summary.critical_count as usize) > summary.critical_chains.len() {
        report.notes.push(format!("critical chain listing truncated at {}", morse::CRITICAL_LISTING_CAP));
    }
    Ok(report.finish(start))
}

/// Split classification of `[h, g]` next to the interval's own connectivity.
pub fn split_report(canon: &Canonicalizer, h: &Graph, g: &Graph) -> Result<ExperimentReport, ExperimentError> {
    let start = Instant::now();
    let split = split_classify(canon, h, g)?;
    let iv = build_interval(canon, h, g, false)?;
    let disconnected = iv.interior_disconnected();
    let strong = split.status == crate::split::SplitStatus::StronglyZeroSplit;
    let mut report = ExperimentReport::new("split_classify")
        .param("h", graph_label(h))
        .param("g", graph_label(g))
        .param("rank", iv.rank())
        .param("status", split.status)
        .param("occurrences", split.occurrences.len())
        .param("interior_disconnected", disconnected)
        .param("nontrivially_disconnected", iv.nontrivially_disconnected());
    report.rows.push(json!({ "partition": split.partition, "witness": split.witness }));
    // The equivalence is only claimed for rank above 2.
    report.agreement = iv.rank() <= 2 || disconnected == strong;
    Ok(report.finish(start))
}
