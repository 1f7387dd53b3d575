//! Small connected graphs, labeled or up to isomorphism.

use std::collections::BTreeMap;

use super::Graph;
use crate::error::{Error, Result};

/// Largest vertex count for the permutation-based canonical form.
pub const CANONICAL_MAX_VERTICES: usize = 8;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Graph whose edges are the set bits of `mask` over [`pairs`].
pub(crate) fn graph_from_pair_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(n).expect("small vertex count");
    for (k, (u, v)) in pairs(n).into_iter().enumerate() {
        if mask >> k & 1 == 1 {
            g.add_edge(u, v).expect("valid pair");
        }
    }
    g
}

/// Every connected labeled graph on `n ≥ 2` vertices, in order of edge mask.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    connected_graphs_in(n, 0..1u64 << pairs(n).len())
}

/// Connected labeled graphs whose edge masks fall in `range`.
pub fn connected_graphs_in(n: usize, range: std::ops::Range<u64>) -> Vec<Graph> {
    range
        .map(|mask| graph_from_pair_mask(n, mask))
        .filter(|g| g.is_nontrivial() && g.is_connected())
        .collect()
}

fn pair_mask(g: &Graph, perm: &[usize], index: &[Vec<usize>]) -> u64 {
    g.edges().into_iter().fold(0, |m, (u, v)| {
        let (a, b) = (perm[u], perm[v]);
        m | 1 << index[a.min(b)][a.max(b)]
    })
}

/// Smallest edge mask over all relabelings.
pub fn canonical_form(g: &Graph) -> Result<u64> {
    let n = g.n();
    if n > CANONICAL_MAX_VERTICES {
        return Err(Error::ResourceLimit(format!(
            "canonical forms are limited to {CANONICAL_MAX_VERTICES} vertices"
        )));
    }
    let mut index = vec![vec![0; n]; n];
    for (k, (u, v)) in pairs(n).into_iter().enumerate() {
        index[u][v] = k;
    }
    // Heap's algorithm.
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = pair_mask(g, &perm, &index);
    let mut c = vec![0; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.min(pair_mask(g, &perm, &index));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(best)
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, ordered by canonical mask.
///
/// Built from the classes on `n − 1` vertices: every connected graph has a
/// vertex whose removal keeps it connected, so attaching a new vertex to a
/// nonempty neighbourhood in each smaller class reaches every class.
pub fn connected_graphs_up_to_iso(n: usize) -> Result<Vec<Graph>> {
    if n < 2 {
        return Err(Error::BadParameter("need at least 2 vertices".into()));
    }
    if n > CANONICAL_MAX_VERTICES {
        return Err(Error::ResourceLimit(format!(
            "isomorphism classes are limited to {CANONICAL_MAX_VERTICES} vertices"
        )));
    }
    if n == 2 {
        return Ok(vec![Graph::path(2)?]);
    }
    let mut classes: BTreeMap<u64, Graph> = BTreeMap::new();
    for small in connected_graphs_up_to_iso(n - 1)? {
        for nbrs in 1u64..1 << (n - 1) {
            let mut g = Graph::empty(n)?;
            for (u, v) in small.edges() {
                g.add_edge(u, v)?;
            }
            for w in 0..n - 1 {
                if nbrs >> w & 1 == 1 {
                    g.add_edge(w, n - 1)?;
                }
            }
            let code = canonical_form(&g)?;
            classes.entry(code).or_insert_with(|| graph_from_pair_mask(n, code));
        }
    }
    Ok(classes.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn labeled_counts() {
        // Connected labeled graphs: 1, 4, 38, 728, 26704.
        let counts: Vec<usize> = (2..=6).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 4, 38, 728, 26704]);
    }

    #[test]
    fn class_counts() {
        // Connected graphs up to isomorphism: 1, 2, 6, 21, 112.
        let counts: Vec<usize> = (2..=6)
            .map(|n| connected_graphs_up_to_iso(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 6, 21, 112]);
    }

    #[test]
    fn classes_match_labeled_enumeration() {
        let from_labeled: HashSet<u64> = connected_graphs(5)
            .iter()
            .map(|g| canonical_form(g).unwrap())
            .collect();
        let classes: HashSet<u64> = connected_graphs_up_to_iso(5)
            .unwrap()
            .iter()
            .map(|g| canonical_form(g).unwrap())
            .collect();
        assert_eq!(from_labeled, classes);
    }

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        let g = Graph::path(5).unwrap();
        let h = g.relabel(&[3, 0, 4, 1, 2]);
        assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        assert_ne!(
            canonical_form(&g).unwrap(),
            canonical_form(&Graph::star(5).unwrap()).unwrap()
        );
    }
}
