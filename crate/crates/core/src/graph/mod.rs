//! Finite simple graphs, edge ideals and the lattices they generate.
//!
//! Vertices are `0..n` with `n ≤ 64`; adjacency is one bitmask per vertex.

mod enumerate;
mod report;

pub use enumerate::{
    canonical_form, connected_graphs, connected_graphs_in, connected_graphs_up_to_iso,
    CANONICAL_MAX_VERTICES,
};
pub use report::{graph_lattice_checks, graph_lattice_report, Check, GraphLatticeReport, Theorem};

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lattice::{FiniteLattice, MAX_ELEMENTS};
use crate::monomial::Monomial;

pub const MAX_VERTICES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// `{"n": N, "edges": [[u, v], ...]}` with 0-based vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

fn bit(v: usize) -> u64 {
    1u64 << v
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&v| mask >> v & 1 == 1)
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::BadParameter(format!(
                "{n} vertices; at most {MAX_VERTICES} are supported"
            )));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::IndexOutOfRange {
                    index: x,
                    size: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::BadParameter(format!("loop at vertex {u}")));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn all_vertices(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            bit(self.n) - 1
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| bits(self.adj[u]).filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_nontrivial(&self) -> bool {
        self.adj.iter().any(|&a| a != 0)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = bit(0);
        let mut frontier = bit(0);
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.all_vertices()
    }

    pub fn complement(&self) -> Graph {
        let all = self.all_vertices();
        Graph {
            n: self.n,
            adj: (0..self.n).map(|v| all & !self.adj[v] & !bit(v)).collect(),
        }
    }

    /// Vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = Graph::empty(self.n + other.n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n)?;
        }
        Ok(g)
    }

    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph {
            n: self.n,
            adj: vec![0; self.n],
        };
        for (u, v) in self.edges() {
            g.adj[perm[u]] |= bit(perm[v]);
            g.adj[perm[v]] |= bit(perm[u]);
        }
        g
    }

    pub fn path(n: usize) -> Result<Graph> {
        if n < 2 {
            return Err(Error::BadParameter("path needs n ≥ 2".into()));
        }
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::BadParameter("cycle needs n ≥ 3".into()));
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        if n < 2 {
            return Err(Error::BadParameter("complete graph needs n ≥ 2".into()));
        }
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(n, &edges)
    }

    /// The star on `n` vertices, centred at vertex 0.
    pub fn star(n: usize) -> Result<Graph> {
        if n < 2 {
            return Err(Error::BadParameter("star needs n ≥ 2".into()));
        }
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// One generator `x_u x_v` per edge, in edge order.
    pub fn edge_ideal(&self) -> Result<MonomialIdeal> {
        if !self.is_nontrivial() {
            return Err(Error::NoEdges);
        }
        let gens = self
            .edges()
            .into_iter()
            .map(|(u, v)| Monomial::squarefree(self.n, [u, v]));
        MonomialIdeal::minimalize(self.n, gens)
    }

    fn four_subsets(&self) -> impl Iterator<Item = [usize; 4]> + '_ {
        let n = self.n;
        (0..n).flat_map(move |a| {
            (a + 1..n).flat_map(move |b| {
                (b + 1..n).flat_map(move |c| (c + 1..n).map(move |d| [a, b, c, d]))
            })
        })
    }

    /// Edge count and sorted degree sequence of the induced subgraph.
    fn induced_shape(&self, q: [usize; 4]) -> (usize, [usize; 4]) {
        let mask = q.iter().fold(0, |m, &v| m | bit(v));
        let mut degs = q.map(|v| (self.adj[v] & mask).count_ones() as usize);
        degs.sort_unstable();
        (degs.iter().sum::<usize>() / 2, degs)
    }

    fn has_induced(&self, edges: usize, degs: [usize; 4]) -> Option<[usize; 4]> {
        self.four_subsets()
            .find(|&q| self.induced_shape(q) == (edges, degs))
    }

    /// An induced pair of disjoint edges, if any.
    pub fn find_gap(&self) -> Option<[usize; 4]> {
        self.has_induced(2, [1, 1, 1, 1])
    }

    /// No two edges that are disjoint and joined by no edge.
    pub fn is_gap_free(&self) -> bool {
        self.find_gap().is_none()
    }

    pub fn is_c4_free(&self) -> bool {
        self.has_induced(4, [2, 2, 2, 2]).is_none()
    }

    pub fn complement_is_c4_free(&self) -> bool {
        self.complement().is_c4_free()
    }

    /// The diamond is K4 minus an edge.
    pub fn is_diamond_free(&self) -> bool {
        self.has_induced(5, [2, 2, 3, 3]).is_none()
    }

    pub fn has_no_disjoint_edges(&self) -> bool {
        let edges = self.edges();
        edges.iter().enumerate().all(|(i, &(a, b))| {
            edges[i + 1..]
                .iter()
                .all(|&(c, d)| a == c || a == d || b == c || b == d)
        })
    }

    /// An edge meeting every other edge.
    pub fn universal_edge(&self) -> Option<(usize, usize)> {
        self.edges().into_iter().find(|&(u, v)| {
            let rest = self.all_vertices() & !bit(u) & !bit(v);
            bits(rest).all(|w| self.adj[w] & rest == 0)
        })
    }

    pub fn has_universal_edge(&self) -> bool {
        self.universal_edge().is_some()
    }

    pub fn is_star(&self) -> bool {
        self.n >= 2
            && self.num_edges() == self.n - 1
            && (0..self.n).any(|v| self.degree(v) == self.n - 1)
    }

    pub fn is_triangle(&self) -> bool {
        self.n == 3 && self.num_edges() == 3
    }

    fn is_clique(&self, mask: u64) -> bool {
        bits(mask).all(|v| self.adj[v] & mask == mask & !bit(v))
    }

    fn attaches_uniquely(&self, h: u64) -> bool {
        let outside = self.all_vertices() & !h;
        h != 0
            && self.is_clique(h)
            && bits(outside).all(|v| self.adj[v] & outside == 0 && (self.adj[v] & h).count_ones() == 1)
    }

    /// A clique `H` such that the vertices outside `H` are pairwise
    /// non-adjacent and each has exactly one neighbour in `H`.
    ///
    /// Outside vertices then have degree one, so `H` holds every vertex of
    /// degree at least two; a leaf in `H` forces `|H| ≤ 2`. Those are the
    /// only candidates tried.
    pub fn clique_with_unique_attachment(&self) -> Option<u64> {
        let core = (0..self.n)
            .filter(|&v| self.degree(v) >= 2)
            .fold(0, |m, v| m | bit(v));
        let singles = (0..self.n).map(bit);
        let pairs = self.edges().into_iter().map(|(u, v)| bit(u) | bit(v));
        std::iter::once(core)
            .chain(singles)
            .chain(pairs)
            .find(|&h| self.attaches_uniquely(h))
    }

    pub fn has_clique_with_unique_attachment(&self) -> bool {
        self.clique_with_unique_attachment().is_some()
    }

    /// Vertex sets that are unions of edges, i.e. induce subgraphs without
    /// isolated vertices. Includes the empty set.
    pub fn edge_unions(&self) -> Result<Vec<u64>> {
        let edges: Vec<u64> = self
            .edges()
            .into_iter()
            .map(|(u, v)| bit(u) | bit(v))
            .collect();
        let mut seen: HashSet<u64> = HashSet::from([0]);
        let mut out = vec![0];
        let mut i = 0;
        while i < out.len() {
            let m = out[i];
            i += 1;
            for &e in &edges {
                if seen.insert(m | e) {
                    out.push(m | e);
                    if out.len() > MAX_ELEMENTS {
                        return Err(Error::TooLarge(out.len(), MAX_ELEMENTS));
                    }
                }
            }
        }
        Ok(out)
    }

    /// LCM lattice of the edge ideal, built on vertex sets: joins are unions
    /// and the order is inclusion. Element order and labels match
    /// [`MonomialIdeal::lcm_lattice`] of [`Graph::edge_ideal`].
    pub fn lcm_lattice(&self) -> Result<FiniteLattice> {
        if !self.is_nontrivial() {
            return Err(Error::NoEdges);
        }
        let label = |m: u64| Monomial::squarefree(self.n, bits(m));
        let edge_masks: Vec<u64> = self
            .edges()
            .into_iter()
            .map(|(u, v)| bit(u) | bit(v))
            .collect();
        let mut rest: Vec<(Monomial, u64)> = self
            .edge_unions()?
            .into_iter()
            .filter(|&m| m != 0 && (m.count_ones() > 2 || !edge_masks.contains(&m)))
            .map(|m| (label(m), m))
            .collect();
        rest.sort_by(|a, b| (a.0.degree(), &a.0).cmp(&(b.0.degree(), &b.0)));
        let masks: Vec<u64> = std::iter::once(0)
            .chain(edge_masks)
            .chain(rest.into_iter().map(|(_, m)| m))
            .collect();
        let n = masks.len();
        let mut down = vec![crate::lattice::BitSet::new(n); n];
        for (x, row) in down.iter_mut().enumerate() {
            for (y, &m) in masks.iter().enumerate() {
                if m & !masks[x] == 0 {
                    row.insert(y);
                }
            }
        }
        let mut l = FiniteLattice::from_down_sets(down)?;
        l.set_labels_unchecked(masks.into_iter().map(label).collect());
        Ok(l)
    }

    /// Vertices outside `a` all of whose neighbours lie in `a`.
    pub fn isolated_by(&self, a: u64) -> u64 {
        bits(self.all_vertices() & !a)
            .filter(|&v| self.adj[v] & !a == 0)
            .fold(0, |m, v| m | bit(v))
    }

    /// For every union of edges `A`, some independent `X ⊆ A` dominates the
    /// vertices that `A` isolates. Returns the first `A` that fails.
    pub fn independent_set_obstruction(&self) -> Result<Option<u64>> {
        for a in self.edge_unions()? {
            let targets = self.isolated_by(a);
            if !self.dominate_independently(a, targets, 0) {
                return Ok(Some(a));
            }
        }
        Ok(None)
    }

    pub fn complemented_via_independent_sets(&self) -> Result<bool> {
        Ok(self.independent_set_obstruction()?.is_none())
    }

    fn dominate_independently(&self, pool: u64, targets: u64, chosen: u64) -> bool {
        let covered = bits(chosen).fold(0, |m, x| m | self.adj[x]);
        let open = targets & !covered;
        if open == 0 {
            return true;
        }
        let t = open.trailing_zeros() as usize;
        bits(self.adj[t] & pool).any(|x| {
            self.adj[x] & chosen == 0 && self.dominate_independently(pool, targets, chosen | bit(x))
        })
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n,
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn from_json(json: &GraphJson) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = json.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(json.n, &edges)
    }
}

/// Graphs drawn in the examples, with 0-based vertices.
pub mod fixtures {
    use super::Graph;

    pub const IDS: &[&str] = &["fig3", "fig5", "fig6", "bipartite-cm", "lsm-typical", "diamond"];

    fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).expect("fixture edges are valid")
    }

    /// Edge `{0, 1}` meets every edge; a supersolvable but not modular lattice.
    pub fn supersolvable_typical() -> Graph {
        build(
            11,
            &[
                (0, 1),
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 5),
                (0, 6),
                (0, 7),
                (0, 8),
                (0, 9),
                (0, 10),
                (1, 9),
                (1, 10),
            ],
        )
    }

    /// pd equals the lattice height although the lattice is not graded.
    /// Two triangles sharing vertex 0.
    pub fn fig5() -> Graph {
        build(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)])
    }

    /// Complemented but not strongly complemented.
    pub fn fig6() -> Graph {
        build(6, &[(1, 2), (2, 4), (4, 3), (3, 1), (4, 5), (2, 3), (1, 0)])
    }

    /// Cohen–Macaulay edge ideal with an ungraded lattice.
    pub fn bipartite_cm() -> Graph {
        build(6, &[(0, 3), (0, 5), (1, 4), (1, 5), (2, 5)])
    }

    /// A clique on 0..4 with pendant vertices.
    pub fn lsm_typical() -> Graph {
        build(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (0, 3),
                (1, 5),
                (0, 6),
                (0, 7),
                (0, 8),
                (0, 9),
                (0, 2),
                (1, 3),
                (3, 4),
            ],
        )
    }

    /// K4 minus the edge {0, 3}.
    pub fn diamond() -> Graph {
        build(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    }

    pub fn by_id(id: &str) -> Option<Graph> {
        Some(match id {
            "fig3" => supersolvable_typical(),
            "fig5" => fig5(),
            "fig6" => fig6(),
            "bipartite-cm" => bipartite_cm(),
            "lsm-typical" => lsm_typical(),
            "diamond" => diamond(),
            _ => return None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn butterfly() -> Graph {
        fixtures::fig5()
    }

    #[test]
    fn families() {
        assert_eq!(Graph::path(2).unwrap().edges(), vec![(0, 1)]);
        assert_eq!(Graph::cycle(4).unwrap().edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(Graph::complete(4).unwrap().num_edges(), 6);
        assert!(Graph::star(5).unwrap().is_star());
        assert!(Graph::path(3).unwrap().is_star());
        assert!(Graph::path(2).unwrap().is_star());
        assert!(!Graph::path(4).unwrap().is_star());
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::path(1).is_err());
    }

    #[test]
    fn bad_edges() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::IndexOutOfRange { index: 3, size: 3 })
        ));
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn edge_ideals() {
        assert_eq!(Graph::star(3).unwrap().edge_ideal().unwrap().to_string(), "(x1*x2, x1*x3)");
        assert_eq!(
            fixtures::bipartite_cm().edge_ideal().unwrap().to_string(),
            "(x1*x4, x1*x6, x2*x5, x2*x6, x3*x6)"
        );
        assert_eq!(
            Graph::complete(3).unwrap().edge_ideal().unwrap().to_string(),
            "(x1*x2, x1*x3, x2*x3)"
        );
        assert!(matches!(Graph::empty(3).unwrap().edge_ideal(), Err(Error::NoEdges)));
    }

    #[test]
    fn induced_patterns() {
        assert!(!Graph::path(5).unwrap().is_gap_free());
        assert!(Graph::path(4).unwrap().is_gap_free());
        let c5 = Graph::cycle(5).unwrap();
        assert!(c5.is_gap_free() && c5.is_diamond_free() && c5.is_c4_free());
        assert!(!fixtures::diamond().is_diamond_free());
        assert!(!Graph::cycle(4).unwrap().is_c4_free());
        assert!(Graph::complete(4).unwrap().is_diamond_free());
    }

    #[test]
    fn structural_searches() {
        assert_eq!(fixtures::supersolvable_typical().universal_edge(), Some((0, 1)));
        assert!(!Graph::path(5).unwrap().has_universal_edge());
        assert!(Graph::complete(3).unwrap().has_no_disjoint_edges());
        assert!(!Graph::path(4).unwrap().has_no_disjoint_edges());
        assert_eq!(fixtures::lsm_typical().clique_with_unique_attachment(), Some(0b1111));
        assert!(Graph::path(4).unwrap().has_clique_with_unique_attachment());
        assert!(!Graph::cycle(4).unwrap().has_clique_with_unique_attachment());
    }

    /// The unique-attachment condition without independence of the outside
    /// vertices, by brute force over cliques.
    fn loose_unique_attachment(g: &Graph) -> bool {
        (1u64..1 << g.n()).any(|h| {
            g.is_clique(h)
                && bits(g.all_vertices() & !h).all(|v| (g.neighbors(v) & h).count_ones() == 1)
        })
    }

    #[test]
    fn butterfly_needs_independent_outside_vertices() {
        let g = butterfly();
        assert!(loose_unique_attachment(&g));
        assert!(!g.has_clique_with_unique_attachment());
        assert!(!g.is_gap_free());
        assert!(!g.lcm_lattice().unwrap().is_lower_semimodular().holds);
    }

    #[test]
    fn unique_attachment_matches_forbidden_subgraphs() {
        for g in connected_graphs(6) {
            assert_eq!(
                g.has_clique_with_unique_attachment(),
                g.is_gap_free() && g.is_c4_free() && g.is_diamond_free(),
                "{:?}",
                g.edges()
            );
        }
    }

    #[test]
    fn gap_free_is_complement_c4_free() {
        for g in connected_graphs(5) {
            assert_eq!(g.is_gap_free(), g.complement_is_c4_free());
        }
    }

    #[test]
    fn vertex_set_lattice_matches_generic_lattice() {
        for g in [
            Graph::path(5).unwrap(),
            Graph::cycle(5).unwrap(),
            fixtures::fig6(),
            fixtures::diamond(),
            Graph::complete(4).unwrap(),
        ] {
            let fast = g.lcm_lattice().unwrap();
            let slow = g.edge_ideal().unwrap().lcm_lattice();
            assert_eq!(fast.labels(), slow.labels());
            assert_eq!(fast.covers(), slow.covers());
        }
    }

    #[test]
    fn disjoint_union_gives_product() {
        let a = Graph::path(3).unwrap();
        let b = Graph::complete(3).unwrap();
        let u = a.disjoint_union(&b).unwrap();
        let product = a.lcm_lattice().unwrap().product(&b.lcm_lattice().unwrap()).unwrap();
        assert!(u.lcm_lattice().unwrap().is_isomorphic(&product));
    }

    #[test]
    fn independent_set_criterion_on_families() {
        for n in 3..=8 {
            assert!(Graph::cycle(n).unwrap().complemented_via_independent_sets().unwrap());
        }
        assert!(!Graph::path(7).unwrap().complemented_via_independent_sets().unwrap());
        assert!(Graph::path(6).unwrap().complemented_via_independent_sets().unwrap());
    }

    #[test]
    fn json_round_trip() {
        let g = fixtures::fig5();
        let text = serde_json::to_string(&g.to_json()).unwrap();
        assert_eq!(text, r#"{"n":5,"edges":[[0,1],[0,2],[0,3],[0,4],[1,2],[3,4]]}"#);
        let back: GraphJson = serde_json::from_str(&text).unwrap();
        assert_eq!(Graph::from_json(&back).unwrap(), g);
    }
}
