//! Finite ranked posets given by their Hasse diagram.
//!
//! Elements are indexed so that every lower cover of `e` has a smaller index
//! than `e`; sorting by rank is the usual way to get there.

use fixedbitset::FixedBitSet;

/// A finite poset stored as lower covers plus principal down-sets.
#[derive(Clone, Debug)]
pub struct HassePoset {
    rank: Vec<usize>,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
    /// `down[e]` holds every `z <= e`, including `e`.
    down: Vec<FixedBitSet>,
}

impl HassePoset {
    /// Panics if a cover points to an index that is not smaller.
    pub fn from_lower_covers(rank: Vec<usize>, lower: Vec<Vec<usize>>) -> Self {
        let n = rank.len();
        assert_eq!(lower.len(), n, "one cover list per element");
        let mut upper = vec![Vec::new(); n];
        let mut down: Vec<FixedBitSet> = Vec::with_capacity(n);
        for e in 0..n {
            let mut d = FixedBitSet::with_capacity(n);
            d.insert(e);
            for &z in &lower[e] {
                assert!(z < e, "lower cover {z} of {e} must come first");
                d.union_with(&down[z]);
                upper[z].push(e);
            }
            down.push(d);
        }
        HassePoset { rank, lower, upper, down }
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn rank(&self, e: usize) -> usize {
        self.rank[e]
    }

    pub fn lower_covers(&self, e: usize) -> &[usize] {
        &self.lower[e]
    }

    pub fn upper_covers(&self, e: usize) -> &[usize] {
        &self.upper[e]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.down[b].contains(a)
    }

    pub fn down_set(&self, e: usize) -> &FixedBitSet {
        &self.down[e]
    }

    /// Every element `>= a`.
    pub fn up_set(&self, a: usize) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.len());
        for e in a..self.len() {
            if self.down[e].contains(a) {
                s.insert(e);
            }
        }
        s
    }

    pub fn cover_count(&self) -> usize {
        self.lower.iter().map(Vec::len).sum()
    }

    /// `μ(a, e)` for every `e`, zero where `a ≰ e`, by
    /// `μ(a,a) = 1` and `μ(a,e) = -Σ_{a <= z < e} μ(a,z)`.
    pub fn mobius_from(&self, a: usize) -> Vec<i64> {
        let n = self.len();
        let mut mu = vec![0i64; n];
        mu[a] = 1;
        for e in a + 1..n {
            if !self.down[e].contains(a) {
                continue;
            }
            let mut s = 0i64;
            for z in self.down[e].ones() {
                if z != e && z >= a {
                    s = s.checked_add(mu[z]).expect("Möbius value overflows i64");
                }
            }
            mu[e] = s.checked_neg().expect("Möbius value overflows i64");
        }
        mu
    }

    /// `μ(e, b)` for every `e`, zero where `e ≰ b`, computed top-down on the
    /// dual: `μ*(b,b) = 1` and `μ*(b,e) = -Σ_{e < z <= b} μ*(b,z)`.
    pub fn mobius_to(&self, b: usize) -> Vec<i64> {
        let n = self.len();
        let within = &self.down[b];
        let mut mu = vec![0i64; n];
        mu[b] = 1;
        for e in (0..b).rev() {
            if !within.contains(e) {
                continue;
            }
            let mut s = 0i64;
            for z in within.ones() {
                if z > e && self.down[z].contains(e) {
                    s = s.checked_add(mu[z]).expect("Möbius value overflows i64");
                }
            }
            mu[e] = s.checked_neg().expect("Möbius value overflows i64");
        }
        mu
    }

    /// Connected components of the Hasse diagram restricted to `subset`.
    /// Two comparable elements of an interval's interior are joined by a
    /// saturated chain that stays inside the interior, so these are also the
    /// components of the comparability graph there.
    pub fn components_within(&self, subset: &FixedBitSet) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = FixedBitSet::with_capacity(n);
        let mut out = Vec::new();
        for s in subset.ones() {
            if seen.contains(s) {
                continue;
            }
            seen.insert(s);
            let mut comp = vec![s];
            let mut k = 0;
            while k < comp.len() {
                let u = comp[k];
                k += 1;
                for &w in self.lower[u].iter().chain(&self.upper[u]) {
                    if subset.contains(w) && !seen.contains(w) {
                        seen.insert(w);
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Number of maximal chains from `a` up to `b`, saturating.
    pub fn count_maximal_chains(&self, a: usize, b: usize) -> u64 {
        let n = self.len();
        let mut ways = vec![0u64; n];
        ways[a] = 1;
        for e in a + 1..=b {
            if !self.down[b].contains(e) || !self.down[e].contains(a) {
                continue;
            }
            ways[e] = self.lower[e].iter().fold(0u64, |acc, &z| acc.saturating_add(ways[z]));
        }
        ways[b]
    }
}
