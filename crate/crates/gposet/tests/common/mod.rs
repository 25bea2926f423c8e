//! Brute-force oracles that share no code with the library beyond the
//! `Graph` container.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use gposet::Graph;

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn code_under(g: &Graph, p: &[usize]) -> Vec<u8> {
    let n = g.order();
    let mut code = vec![n as u8];
    for i in 0..n {
        for j in i..n {
            code.push(g.mult(p[i], p[j]));
        }
    }
    code
}

/// Lexicographically least upper triangle over every labelling.
pub fn brute_code(g: &Graph) -> Vec<u8> {
    permutations(g.order()).iter().map(|p| code_under(g, p)).min().unwrap_or_else(|| vec![0])
}

/// Vertex subset of `g` selected by `mask`.
pub fn induced(g: &Graph, mask: u32) -> Graph {
    let vs: Vec<usize> = (0..g.order()).filter(|&v| mask >> v & 1 == 1).collect();
    let k = vs.len();
    let mut entries = Vec::new();
    for a in 0..k {
        for b in a..k {
            let m = g.mult(vs[a], vs[b]);
            if m > 0 {
                entries.push((a, b, u32::from(m)));
            }
        }
    }
    Graph::from_multiplicities(k, &entries).expect("valid restriction")
}

/// One representative per isomorphism class of simple graphs on `n`
/// vertices, from all `2^(n choose 2)` labelled graphs.
pub fn brute_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut seen: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        seen.entry(brute_code(&g)).or_insert(g);
    }
    seen.into_values().collect()
}

/// The classes of induced subgraphs of `g`, keyed by brute-force code.
pub struct DownSet {
    pub reps: BTreeMap<Vec<u8>, Graph>,
    /// For each class, the codes of the classes it contains.
    below: HashMap<Vec<u8>, Vec<Vec<u8>>>,
}

impl DownSet {
    pub fn new(g: &Graph) -> DownSet {
        let mut reps = BTreeMap::new();
        for mask in 0..(1u32 << g.order()) {
            let h = induced(g, mask);
            reps.entry(brute_code(&h)).or_insert(h);
        }
        let mut below = HashMap::new();
        for (code, rep) in &reps {
            let mut sub: Vec<Vec<u8>> = (0..(1u32 << rep.order())).map(|m| brute_code(&induced(rep, m))).collect();
            sub.sort();
            sub.dedup();
            below.insert(code.clone(), sub);
        }
        DownSet { reps, below }
    }

    pub fn leq(&self, a: &[u8], b: &[u8]) -> bool {
        self.below[b].binary_search(&a.to_vec()).is_ok()
    }

    /// `μ(h, g)` by the defining recursion over the classes of the down-set.
    pub fn mobius(&self, h: &[u8], top: &[u8]) -> i64 {
        if !self.leq(h, top) {
            return 0;
        }
        let mut inside: Vec<&Vec<u8>> = self.reps.keys().filter(|z| self.leq(h, z) && self.leq(z, top)).collect();
        inside.sort_by_key(|z| z[0]);
        let mut mu: HashMap<&Vec<u8>, i64> = HashMap::new();
        for z in &inside {
            let v = if z.as_slice() == h {
                1
            } else {
                -inside.iter().filter(|w| w[0] < z[0] && self.leq(w, z)).map(|w| mu[*w]).sum::<i64>()
            };
            mu.insert(z, v);
        }
        mu[&top.to_vec()]
    }
}

pub fn brute_mobius(h: &Graph, g: &Graph) -> i64 {
    let ds = DownSet::new(g);
    ds.mobius(&brute_code(h), &brute_code(g))
}

/// Every vertex maps to vertex 0 under some automorphism.
pub fn brute_vertex_transitive(g: &Graph) -> bool {
    let n = g.order();
    if n <= 1 {
        return true;
    }
    let id = code_under(g, &(0..n).collect::<Vec<_>>());
    let mut reach = vec![false; n];
    for p in permutations(n) {
        if code_under(g, &p) == id {
            reach[p[0]] = true;
        }
    }
    reach.iter().all(|&r| r)
}

/// Subsets of `g` inducing a copy of `h`, as bitmasks.
pub fn brute_occurrences(h: &Graph, g: &Graph) -> Vec<u32> {
    let target = brute_code(h);
    (0..(1u32 << g.order()))
        .filter(|m| m.count_ones() as usize == h.order() && brute_code(&induced(g, *m)) == target)
        .collect()
}

/// `(zero_split, strongly_zero_split)` by trying every bipartition of the
/// occurrences.
pub fn brute_split(h: &Graph, g: &Graph) -> (bool, bool) {
    let occ = brute_occurrences(h, g);
    let full = (1u32 << g.order()) - 1;
    let k = occ.len();
    if k < 2 {
        return (false, false);
    }
    let n = g.order();
    // ext[t][i]: class of occurrence t extended by vertex i.
    let ext: Vec<Vec<Option<Vec<u8>>>> = occ
        .iter()
        .map(|&eta| (0..n).map(|i| (eta >> i & 1 == 0).then(|| brute_code(&induced(g, eta | 1 << i)))).collect())
        .collect();
    let (mut zero, mut strong) = (false, false);
    // Occurrence 0 always sits in A.
    for sel in 0u32..(1 << (k - 1)) {
        let in_a = |t: usize| t == 0 || sel >> (t - 1) & 1 == 0;
        let (a, b): (Vec<usize>, Vec<usize>) = (0..k).partition(|&t| in_a(t));
        if b.is_empty() {
            continue;
        }
        let za = a.iter().fold(0, |acc, &t| acc | (full & !occ[t]));
        let zb = b.iter().fold(0, |acc, &t| acc | (full & !occ[t]));
        if za & zb != 0 {
            continue;
        }
        zero = true;
        let clash = a
            .iter()
            .any(|&s| b.iter().any(|&t| ext[s].iter().flatten().any(|x| ext[t].iter().flatten().any(|y| x == y))));
        if !clash {
            strong = true;
            break;
        }
    }
    (zero, strong)
}

/// Number of maximal chains from `top` down to `bottom` among path forests,
/// counting each distinct child multiset once.
pub fn count_path_chains(top: &[usize], bottom: &[usize]) -> u64 {
    fn norm(mut v: Vec<usize>) -> Vec<usize> {
        v.retain(|&p| p > 0);
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
    fn rec(m: Vec<usize>, bottom: &[usize], bt: usize, memo: &mut HashMap<Vec<usize>, u64>) -> u64 {
        let t: usize = m.iter().sum();
        if t == bt {
            return u64::from(m == bottom);
        }
        if let Some(&c) = memo.get(&m) {
            return c;
        }
        let mut children: Vec<Vec<usize>> = Vec::new();
        for (k, &p) in m.iter().enumerate() {
            for i in 0..p {
                let mut c = m.clone();
                c[k] = i;
                c.push(p - 1 - i);
                children.push(norm(c));
            }
        }
        children.sort();
        children.dedup();
        let total = children.into_iter().map(|c| rec(c, bottom, bt, memo)).sum();
        memo.insert(m, total);
        total
    }
    let bottom = norm(bottom.to_vec());
    let bt = bottom.iter().sum();
    rec(norm(top.to_vec()), &bottom, bt, &mut HashMap::new())
}

/// All partitions of `n` into parts of size at most `max`, largest part first.
pub fn brute_partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in brute_partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}
