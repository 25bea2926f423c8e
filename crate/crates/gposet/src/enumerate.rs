//! Generation of all graphs up to isomorphism.

use std::collections::BTreeMap;

use crate::canon::{CanonError, CanonicalCode, Canonicalizer};
use crate::graph::Graph;

/// Every simple graph on `n` vertices up to isomorphism, as canonical
/// representatives sorted by code.
///
/// Classes on `n` vertices are exactly the one-vertex extensions of the
/// classes on `n - 1` vertices, so each level is the deduplicated set of all
/// `2^(n-1)` extensions of the previous one.
pub fn simple_graphs(canon: &Canonicalizer, n: usize) -> Result<Vec<(CanonicalCode, Graph)>, CanonError> {
    let mut level = vec![(canon.canonical_form(&Graph::null())?, Graph::null())];
    for k in 1..=n {
        level = extend_level(canon, &level, k)?;
    }
    Ok(level)
}

/// All simple graphs with at most `n` vertices, grouped by order.
pub fn simple_graphs_up_to(canon: &Canonicalizer, n: usize) -> Result<Vec<Vec<(CanonicalCode, Graph)>>, CanonError> {
    let mut out = vec![vec![(canon.canonical_form(&Graph::null())?, Graph::null())]];
    for k in 1..=n {
        let next = extend_level(canon, &out[k - 1], k)?;
        out.push(next);
    }
    Ok(out)
}

fn extend_level(
    canon: &Canonicalizer,
    prev: &[(CanonicalCode, Graph)],
    k: usize,
) -> Result<Vec<(CanonicalCode, Graph)>, CanonError> {
    let mut seen: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
    let old = k - 1;
    for (_, g) in prev {
        for mask in 0u64..(1u64 << old) {
            let mut adj = vec![0u8; k * k];
            for i in 0..old {
                for j in 0..old {
                    adj[i * k + j] = g.mult(i, j);
                }
                if mask >> i & 1 == 1 {
                    adj[i * k + old] = 1;
                    adj[old * k + i] = 1;
                }
            }
            let h = Graph::from_matrix(k, adj).expect("symmetric by construction");
            let code = canon.canonical_form(&h)?;
            seen.entry(code).or_insert_with_key(|c| c.to_graph());
        }
    }
    // The extension graphs are one-off labelled inputs; keeping them cached
    // only costs memory.
    canon.clear_cache();
    Ok(seen.into_iter().collect())
}
