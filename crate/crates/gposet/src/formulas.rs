//! Closed-form Möbius values for named families and the number sequences
//! they produce.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("parameters outside the formula's domain: {0}")]
    Domain(String),
    #[error("value does not fit in 64 bits")]
    Overflow,
    #[error("the null-bottom rule needs a loop-free top graph")]
    LoopsPresent,
    #[error("bottom is not contained in top")]
    NotContained,
}

fn domain(msg: impl Into<String>) -> FormulaError {
    FormulaError::Domain(msg.into())
}

fn sign(e: u64) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn binomial(n: u64, k: u64) -> Result<i64, FormulaError> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step.
        acc = acc.checked_mul(u128::from(n - i)).ok_or(FormulaError::Overflow)? / u128::from(i + 1);
    }
    i64::try_from(acc).map_err(|_| FormulaError::Overflow)
}

pub fn catalan(n: u64) -> Result<i64, FormulaError> {
    let c = binomial(2 * n, n)?;
    Ok(c / (n as i64 + 1))
}

/// `F_0 = 0`, `F_1 = F_2 = 1`.
pub fn fibonacci(n: u64) -> Result<i64, FormulaError> {
    let (mut a, mut b) = (0i64, 1i64);
    for _ in 0..n {
        let c = a.checked_add(b).ok_or(FormulaError::Overflow)?;
        a = b;
        b = c;
    }
    Ok(a)
}

/// `T(n, k) = C(n, k) C(n + k, k) / (k + 1)` (OEIS A088617); zero for `k > n`.
pub fn schroder(n: u64, k: u64) -> Result<i64, FormulaError> {
    if k > n {
        return Ok(0);
    }
    let a = binomial(n, k)? as i128;
    let b = binomial(n + k, k)? as i128;
    let v = a.checked_mul(b).ok_or(FormulaError::Overflow)? / (i128::from(k) + 1);
    i64::try_from(v).map_err(|_| FormulaError::Overflow)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SequenceKind {
    Catalan,
    Fibonacci,
    Schroder,
}

/// Dispatch over the sequences; Schröder takes two arguments, the others one.
pub fn sequences(kind: SequenceKind, args: &[u64]) -> Result<i64, FormulaError> {
    match (kind, args) {
        (SequenceKind::Catalan, [n]) => catalan(*n),
        (SequenceKind::Fibonacci, [n]) => fibonacci(*n),
        (SequenceKind::Schroder, [n, k]) => schroder(*n, *k),
        _ => Err(domain(format!("wrong number of arguments for {kind:?}"))),
    }
}

/// A family of intervals with a closed-form Möbius value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum ClosedForm {
    /// Top `K_n`.
    Complete { n: usize },
    /// Top `n` isolated vertices.
    EmptyGraph { n: usize },
    /// Top `C_n`.
    Cycle { n: usize },
    /// Top the complete multipartite graph with `n` parts of size `k`.
    Multipartite { k: usize, n: usize },
    /// `[∅, G]` for loop-free `G` of the given order.
    NullBottom { order: usize },
    /// `[B_{a1,a2}, B_{b1,b2}]`.
    CompleteBipartite { a1: usize, a2: usize, b1: usize, b2: usize },
    /// `[K_{a+n}, B_{1^a, k^n}]`.
    MultipartiteSplit { a: usize, n: usize, k: usize },
    /// `[P_m, P_x]`.
    PathToPath { m: usize, x: usize },
    /// `[2K_1, P_a ⊔ P_b]`.
    TwoPaths { a: usize, b: usize },
    /// `[nK_1, n P_x]`.
    NPathsColumn { x: usize, n: usize },
    /// `[(x+y)K_1, x P_4 ⊔ y P_3]`.
    P4P3Mix { x: usize, y: usize },
}

impl ClosedForm {
    /// The closed-form value, or `None` where no closed form is known.
    pub fn evaluate(&self) -> Result<Option<i64>, FormulaError> {
        Ok(match *self {
            ClosedForm::NullBottom { order } => Some(null_bottom_value(order)),
            ClosedForm::CompleteBipartite { a1, a2, b1, b2 } => Some(mu_complete_bipartite(a1, a2, b1, b2)?),
            ClosedForm::MultipartiteSplit { a, n, k } => Some(mu_multipartite_split(a, n, k)?),
            ClosedForm::PathToPath { m, x } => Some(mu_path_to_path(m, x)?),
            ClosedForm::TwoPaths { a, b } => Some(mu_two_paths(a, b)?),
            ClosedForm::NPathsColumn { x, n } => mu_n_paths_column(x, n),
            ClosedForm::P4P3Mix { x, y } => Some(mu_p4_p3_mix(x, y)?),
            ClosedForm::Complete { .. }
            | ClosedForm::EmptyGraph { .. }
            | ClosedForm::Cycle { .. }
            | ClosedForm::Multipartite { .. } => None,
        })
    }

    /// Order of the top graph for the vertex-transitive families.
    fn transitive_top_order(&self) -> Option<usize> {
        match *self {
            ClosedForm::Complete { n } | ClosedForm::EmptyGraph { n } | ClosedForm::Cycle { n } => Some(n),
            ClosedForm::Multipartite { k, n } => Some(k * n),
            _ => None,
        }
    }

    /// The top graph of a family member.
    pub fn top_graph(&self) -> Result<Graph, FormulaError> {
        let g = match *self {
            ClosedForm::Complete { n } => Graph::complete(n),
            ClosedForm::EmptyGraph { n } => Graph::empty(n),
            ClosedForm::Cycle { n } => Graph::cycle(n).map_err(|e| domain(e.to_string()))?,
            ClosedForm::Multipartite { k, n } => Graph::complete_multipartite(&vec![k; n]),
            ClosedForm::NullBottom { order } => {
                return Err(domain(format!("any loop-free graph of order {order} is a top")))
            }
            ClosedForm::CompleteBipartite { b1, b2, .. } => Graph::complete_multipartite(&[b1, b2]),
            ClosedForm::MultipartiteSplit { a, n, k } => {
                let mut parts = vec![1; a];
                parts.extend(std::iter::repeat_n(k, n));
                Graph::complete_multipartite(&parts)
            }
            ClosedForm::PathToPath { x, .. } => Graph::path(x).map_err(|e| domain(e.to_string()))?,
            ClosedForm::TwoPaths { a, b } => Graph::path_forest(&[a, b]).map_err(|e| domain(e.to_string()))?,
            ClosedForm::NPathsColumn { x, n } => Graph::path_forest(&vec![x; n]).map_err(|e| domain(e.to_string()))?,
            ClosedForm::P4P3Mix { x, y } => {
                let mut parts = vec![4; x];
                parts.extend(std::iter::repeat_n(3, y));
                Graph::path_forest(&parts).map_err(|e| domain(e.to_string()))?
            }
        };
        Ok(g)
    }

    /// The bottom graph where the family fixes one.
    pub fn bottom_graph(&self) -> Option<Graph> {
        match *self {
            ClosedForm::NullBottom { .. } => Some(Graph::null()),
            ClosedForm::CompleteBipartite { a1, a2, .. } => Some(Graph::complete_multipartite(&[a1, a2])),
            ClosedForm::MultipartiteSplit { a, n, .. } => Some(Graph::complete(a + n)),
            ClosedForm::PathToPath { m, .. } => Graph::path(m).ok(),
            ClosedForm::TwoPaths { .. } => Some(Graph::empty(2)),
            ClosedForm::NPathsColumn { n, .. } => Some(Graph::empty(n)),
            ClosedForm::P4P3Mix { x, y } => Some(Graph::empty(x + y)),
            _ => None,
        }
    }
}

fn null_bottom_value(order: usize) -> i64 {
    match order {
        0 => 1,
        1 => -1,
        _ => 0,
    }
}

/// `μ(∅, G)` for loop-free `G`.
pub fn mu_null_bottom(g: &Graph) -> Result<i64, FormulaError> {
    if g.has_loops() {
        return Err(FormulaError::LoopsPresent);
    }
    Ok(null_bottom_value(g.order()))
}

/// Vanishing below the top two ranks for vertex-transitive tops, plus the
/// null-bottom rule. `None` means no closed form applies.
pub fn mu_named_top(h: &Graph, top: &ClosedForm) -> Result<Option<i64>, FormulaError> {
    let n = top
        .transitive_top_order()
        .ok_or_else(|| domain("top must be complete, empty, cycle or balanced multipartite"))?;
    if let ClosedForm::Cycle { n } = *top {
        if n < 3 {
            return Err(domain("cycles need n >= 3"));
        }
    }
    if h.is_null() {
        return Ok(Some(null_bottom_value(n)));
    }
    let k = h.order();
    Ok((k + 1 != n && k != n).then_some(0))
}

/// `μ(B_{a1,a2}, B_{b1,b2})`. Both pairs are sorted before the case split,
/// which is the orientation where containment is componentwise.
pub fn mu_complete_bipartite(a1: usize, a2: usize, b1: usize, b2: usize) -> Result<i64, FormulaError> {
    let (a1, a2) = (a1.min(a2), a1.max(a2));
    let (b1, b2) = (b1.min(b2), b1.max(b2));
    if a1 > b1 || a2 > b2 {
        return Err(FormulaError::NotContained);
    }
    let (d1, d2) = (b1 - a1, b2 - a2);
    Ok(if d1 == 0 && d2 == 0 {
        1
    } else if d1 + d2 == 1 {
        -1
    } else if d1 == 1 && d2 == 1 && a1 != a2 {
        1
    } else {
        0
    })
}

/// `μ(K_{a+n}, B_{1^a, k^n}) = 0`. A single coatom forces the zero, which
/// needs rank `n(k - 1) >= 2`.
pub fn mu_multipartite_split(a: usize, n: usize, k: usize) -> Result<i64, FormulaError> {
    if a == 0 || n == 0 || k < 2 || n * (k - 1) < 2 {
        return Err(domain(format!("need a, n > 0, k >= 2 and n(k-1) >= 2; got a={a}, n={n}, k={k}")));
    }
    Ok(0)
}

/// `μ(P_m, P_x) = (-1)^(x-m)`.
pub fn mu_path_to_path(m: usize, x: usize) -> Result<i64, FormulaError> {
    if m == 0 || m > x {
        return Err(domain(format!("need 1 <= m <= x, got m={m}, x={x}")));
    }
    Ok(sign((x - m) as u64))
}

/// `μ(2K_1, P_a ⊔ P_b)` for `a >= b > 1`.
pub fn mu_two_paths(a: usize, b: usize) -> Result<i64, FormulaError> {
    if b <= 1 || a < b {
        return Err(domain(format!("need a >= b > 1, got a={a}, b={b}")));
    }
    if a == b {
        fibonacci((a - 2) as u64)
    } else {
        Ok(sign((a + b) as u64) * fibonacci(b as u64)?)
    }
}

/// `μ(nK_1, n P_x)` where a closed form is known; the `n = 1` rule wins
/// over the `x = 2` rule.
pub fn mu_n_paths_column(x: usize, n: usize) -> Option<i64> {
    if x == 0 || n == 0 {
        return None;
    }
    if n == 1 || x == 4 {
        Some(sign((x + n) as u64))
    } else if x == 1 || x == 3 {
        Some(1)
    } else if x == 2 {
        Some(0)
    } else if n == 2 {
        fibonacci((x - 2) as u64).ok()
    } else if x == 5 {
        catalan(n as u64).ok()
    } else {
        None
    }
}

/// `μ(nK_1, x P_4 ⊔ y P_3) = (-1)^x C(n, y)` with `n = x + y`.
pub fn mu_p4_p3_mix(x: usize, y: usize) -> Result<i64, FormulaError> {
    let n = x + y;
    if n == 0 {
        return Err(domain("need x + y >= 1"));
    }
    Ok(sign(x as u64) * binomial(n as u64, y as u64)?)
}

/// Part sizes (ascending) when `g` is a simple complete multipartite graph,
/// i.e. non-adjacency is an equivalence relation.
pub fn multipartite_parts(g: &Graph) -> Option<Vec<usize>> {
    if !g.is_simple() {
        return None;
    }
    let n = g.order();
    let mut class = vec![usize::MAX; n];
    let mut parts = Vec::new();
    for v in 0..n {
        if class[v] != usize::MAX {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&u| u == v || !g.has_edge(u, v)).collect();
        for &u in &members {
            if class[u] != usize::MAX {
                return None;
            }
            class[u] = parts.len();
        }
        parts.push(members);
    }
    // Within a class every pair must be non-adjacent.
    for p in &parts {
        for (i, &u) in p.iter().enumerate() {
            if p[i + 1..].iter().any(|&w| g.has_edge(u, w)) {
                return None;
            }
        }
    }
    let mut sizes: Vec<usize> = parts.iter().map(Vec::len).collect();
    // With independent classes, every cross pair is an edge iff the count
    // is that of the complete multipartite graph.
    let within: usize = sizes.iter().map(|s| s * s).sum();
    if g.edge_count() != (n * n - within) / 2 {
        return None;
    }
    sizes.sort_unstable();
    Some(sizes)
}

fn is_cycle(g: &Graph) -> bool {
    g.order() >= 3 && g.is_simple() && g.is_connected() && (0..g.order()).all(|v| g.degree(v) == 2)
}

/// Every closed-form family that `[h, g]` belongs to, most specific first.
pub fn identify(h: &Graph, g: &Graph) -> Vec<ClosedForm> {
    let mut out = Vec::new();
    if h.is_null() && !g.has_loops() {
        out.push(ClosedForm::NullBottom { order: g.order() });
    }
    if !h.is_simple() || !g.is_simple() {
        return out;
    }
    let n = h.order();
    let empty_bottom = h.edge_count() == 0 && n > 0;
    if let (Some(hp), Some(gp)) = (h.as_path_forest(), g.as_path_forest()) {
        if hp.len() == 1 && gp.len() == 1 && hp[0] <= gp[0] {
            out.push(ClosedForm::PathToPath { m: hp[0], x: gp[0] });
        }
        if empty_bottom && gp.len() == n {
            if n == 2 && gp[1] > 1 {
                out.push(ClosedForm::TwoPaths { a: gp[0], b: gp[1] });
            }
            if gp.iter().all(|&p| p == gp[0]) && mu_n_paths_column(gp[0], n).is_some() {
                out.push(ClosedForm::NPathsColumn { x: gp[0], n });
            }
            if gp.iter().all(|&p| p == 3 || p == 4) {
                let x = gp.iter().filter(|&&p| p == 4).count();
                out.push(ClosedForm::P4P3Mix { x, y: n - x });
            }
        }
    }
    if let (Some(hb), Some(gb)) = (multipartite_parts(h), multipartite_parts(g)) {
        let pair = |p: &[usize]| match *p {
            [a] => Some((0, a)),
            [a, b] => Some((a, b)),
            _ => None,
        };
        if let (Some((a1, a2)), Some((b1, b2))) = (pair(&hb), pair(&gb)) {
            if a1 <= b1 && a2 <= b2 {
                out.push(ClosedForm::CompleteBipartite { a1, a2, b1, b2 });
            }
        }
        if hb.iter().all(|&p| p == 1) {
            let a = gb.iter().filter(|&&p| p == 1).count();
            let big: Vec<usize> = gb.iter().copied().filter(|&p| p > 1).collect();
            if !big.is_empty() && big.iter().all(|&p| p == big[0]) && hb.len() == a + big.len() {
                let form = ClosedForm::MultipartiteSplit { a, n: big.len(), k: big[0] };
                if form.evaluate().is_ok() {
                    out.push(form);
                }
            }
        }
    }
    let top = if g.order() > 0 && g.edge_count() == g.order() * (g.order() - 1) / 2 {
        Some(ClosedForm::Complete { n: g.order() })
    } else if g.order() > 0 && g.edge_count() == 0 {
        Some(ClosedForm::EmptyGraph { n: g.order() })
    } else if is_cycle(g) {
        Some(ClosedForm::Cycle { n: g.order() })
    } else {
        multipartite_parts(g)
            .filter(|p| p.len() > 1 && p.iter().all(|&s| s == p[0]))
            .map(|p| ClosedForm::Multipartite { k: p[0], n: p.len() })
    };
    out.extend(top);
    out
}

/// A closed-form value for `μ(h, g)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub form: ClosedForm,
    pub value: i64,
}

/// The first family from [`identify`] that yields a value.
pub fn predict(h: &Graph, g: &Graph) -> Option<Prediction> {
    identify(h, g).into_iter().find_map(|form| {
        let value = match form {
            ClosedForm::NullBottom { .. } => mu_null_bottom(g).ok(),
            ClosedForm::Complete { .. }
            | ClosedForm::EmptyGraph { .. }
            | ClosedForm::Cycle { .. }
            | ClosedForm::Multipartite { .. } => mu_named_top(h, &form).ok().flatten(),
            _ => form.evaluate().ok().flatten(),
        }?;
        Some(Prediction { form, value })
    })
}
