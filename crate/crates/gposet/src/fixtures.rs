//! Published reference values shipped with the crate, used by the
//! experiment reports and the regression tests.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::graph::Graph;

#[derive(Clone, Debug, Deserialize)]
pub struct Table2Cell {
    pub n: usize,
    pub x: usize,
    pub mu: i64,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Table2 {
    pub max_total: usize,
    pub cells: Vec<Table2Cell>,
}

impl Table2 {
    pub fn get(&self, n: usize, x: usize) -> Option<i64> {
        self.cells.iter().find(|c| c.n == n && c.x == x).map(|c| c.mu)
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct Fig2 {
    pub bottom: Vec<usize>,
    pub top: Vec<usize>,
    pub elements: usize,
    pub rank_sequence: Vec<usize>,
    /// Keyed by the part word, e.g. `"421"`.
    pub mu: BTreeMap<String, i64>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct NamedValue {
    pub name: String,
    /// A graph spec accepted by [`crate::dsl::parse_graph`].
    pub spec: String,
    pub mu: i64,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Fig3 {
    pub bottom: String,
    pub top: String,
    pub computed: Vec<NamedValue>,
    /// Values as drawn in the published figure, which omits `K3` and
    /// mislabels `P4` and the paw.
    pub figure_labels: Vec<NamedValue>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct ZeroProportion {
    pub tolerance_points: f64,
    pub percent: BTreeMap<usize, f64>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Table1 {
    pub operations: Vec<String>,
    /// `verdicts[row][col]` lists one verdict per start variant.
    pub verdicts: Vec<Vec<Vec<bool>>>,
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> T {
    serde_json::from_str(text).expect("bundled fixture is valid JSON")
}

pub fn table2() -> Table2 {
    parse(include_str!("../data/table2.json"))
}

pub fn fig2() -> Fig2 {
    parse(include_str!("../data/fig2.json"))
}

pub fn fig3() -> Fig3 {
    parse(include_str!("../data/fig3.json"))
}

pub fn zero_proportion() -> ZeroProportion {
    parse(include_str!("../data/zero_proportion.json"))
}

pub fn table1() -> Table1 {
    parse(include_str!("../data/table1.json"))
}

/// The 7-vertex graph with `μ(2K_1, G) = +1` at odd rank 5.
pub fn nonalternating_graph() -> Graph {
    let edges = [(1, 2), (2, 4), (4, 5), (5, 3), (3, 1), (2, 5), (4, 3), (4, 6), (6, 5), (6, 7)];
    let zero_based: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
    Graph::from_edges(7, &zero_based).expect("valid edges")
}
