//! Lattice-side verdicts on `L_{I(G)}` set against their graph-side
//! characterizations.

use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};
use crate::lattice::{FiniteLattice, Property, PropertyReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    GradedGraph,
    UssModular,
    BooleanEdge,
    Supersolvable,
    Lsm,
    Coatomic,
    Complemented,
    GrayAreas,
}

impl Theorem {
    pub const ALL: [Theorem; 8] = [
        Theorem::GradedGraph,
        Theorem::UssModular,
        Theorem::BooleanEdge,
        Theorem::Supersolvable,
        Theorem::Lsm,
        Theorem::Coatomic,
        Theorem::Complemented,
        Theorem::GrayAreas,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::GradedGraph => "graded-graph",
            Theorem::UssModular => "uss-modular",
            Theorem::BooleanEdge => "boolean-edge",
            Theorem::Supersolvable => "supersolvable",
            Theorem::Lsm => "lsm",
            Theorem::Coatomic => "coatomic",
            Theorem::Complemented => "complemented",
            Theorem::GrayAreas => "gray-areas",
        }
    }

    pub fn from_id(id: &str) -> Option<Theorem> {
        Theorem::ALL.into_iter().find(|t| t.id() == id)
    }
}

/// One equivalence (`left ⇔ right`) or implication (`left ⇒ right`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub theorem: Theorem,
    pub statement: &'static str,
    pub left: bool,
    pub right: bool,
    pub implication: bool,
}

impl Check {
    pub fn holds(&self) -> bool {
        if self.implication {
            !self.left || self.right
        } else {
            self.left == self.right
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphLatticeReport {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub lattice_size: usize,
    pub properties: PropertyReport,
    pub linearly_presented: bool,
    pub checks: Vec<Check>,
}

impl GraphLatticeReport {
    pub fn violations(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.holds())
    }

    pub fn checks_for(&self, theorem: Theorem) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(move |c| c.theorem == theorem)
    }
}

/// Every graph characterization evaluated on a connected nontrivial graph,
/// without failing on a mismatch.
pub fn graph_lattice_checks(g: &Graph) -> Result<GraphLatticeReport> {
    if !g.is_nontrivial() || !g.is_connected() {
        return Err(Error::BadParameter(
            "graph must be connected with at least one edge".into(),
        ));
    }
    let lattice = g.lcm_lattice()?;
    let props = PropertyReport::compute(&lattice);
    let p = |x: Property| props.holds(x);
    let linearly_presented = is_linearly_presented(&lattice);

    let gap_free = g.is_gap_free();
    let no_disjoint = g.has_no_disjoint_edges();
    let star = g.is_star();
    let coatomic_graph = star || g.min_degree() >= 2;

    let eq = |theorem, statement, left, right| Check {
        theorem,
        statement,
        left,
        right,
        implication: false,
    };
    let imp = |theorem, statement, left, right| Check {
        theorem,
        statement,
        left,
        right,
        implication: true,
    };
    use Theorem::*;
    let checks = vec![
        eq(GradedGraph, "graded <=> gap-free", p(Property::Graded), gap_free),
        eq(
            GradedGraph,
            "gap-free <=> complement C4-free",
            gap_free,
            g.complement_is_c4_free(),
        ),
        eq(
            GradedGraph,
            "graded <=> linearly presented",
            p(Property::Graded),
            linearly_presented,
        ),
        imp(
            GradedGraph,
            "graded => rank(m) = deg(m) - 1",
            p(Property::Graded),
            rank_is_degree_minus_one(&lattice),
        ),
        eq(UssModular, "modular <=> no disjoint edges", p(Property::Modular), no_disjoint),
        eq(UssModular, "geometric <=> no disjoint edges", p(Property::Geometric), no_disjoint),
        eq(
            UssModular,
            "upper semimodular <=> no disjoint edges",
            p(Property::UpperSemimodular),
            no_disjoint,
        ),
        eq(
            UssModular,
            "no disjoint edges <=> triangle or star",
            no_disjoint,
            g.is_triangle() || star,
        ),
        eq(BooleanEdge, "boolean <=> star", p(Property::Boolean), star),
        eq(BooleanEdge, "distributive <=> star", p(Property::Distributive), star),
        eq(
            Supersolvable,
            "supersolvable <=> edge meeting every edge",
            p(Property::Supersolvable),
            g.has_universal_edge(),
        ),
        eq(
            Lsm,
            "lower semimodular <=> clique with unique attachment",
            p(Property::LowerSemimodular),
            g.has_clique_with_unique_attachment(),
        ),
        eq(
            Lsm,
            "lower semimodular <=> gap-, C4- and diamond-free",
            p(Property::LowerSemimodular),
            gap_free && g.is_c4_free() && g.is_diamond_free(),
        ),
        eq(
            Coatomic,
            "coatomic <=> star or minimum degree >= 2",
            p(Property::Coatomic),
            coatomic_graph,
        ),
        eq(
            Complemented,
            "complemented <=> independent sets dominate isolated vertices",
            p(Property::Complemented),
            g.complemented_via_independent_sets()?,
        ),
        imp(
            GrayAreas,
            "supersolvable and coatomic => complemented",
            p(Property::Supersolvable) && p(Property::Coatomic),
            p(Property::Complemented),
        ),
        imp(
            GrayAreas,
            "lower semimodular and coatomic => complemented",
            p(Property::LowerSemimodular) && p(Property::Coatomic),
            p(Property::Complemented),
        ),
        imp(
            GrayAreas,
            "supersolvable, lower semimodular and coatomic => modular",
            p(Property::Supersolvable) && p(Property::LowerSemimodular) && p(Property::Coatomic),
            p(Property::Modular),
        ),
    ];
    Ok(GraphLatticeReport {
        n: g.n(),
        edges: g.to_json().edges,
        lattice_size: lattice.size(),
        properties: props,
        linearly_presented,
        checks,
    })
}

/// As [`graph_lattice_checks`], failing with the graph and the broken
/// statements if any characterization disagrees.
pub fn graph_lattice_report(g: &Graph) -> Result<GraphLatticeReport> {
    let report = graph_lattice_checks(g)?;
    let broken: Vec<&str> = report.violations().map(|c| c.statement).collect();
    if broken.is_empty() {
        Ok(report)
    } else {
        Err(Error::TheoremViolation(format!(
            "graph on {} vertices with edges {:?}: {}",
            g.n(),
            report.edges,
            broken.join("; ")
        )))
    }
}

fn rank_is_degree_minus_one(l: &FiniteLattice) -> bool {
    let labels = l.labels().expect("graph lattices are labeled");
    (0..l.size())
        .filter(|&m| m != l.bottom())
        .all(|m| l.depth(m) + 1 == labels[m].degree() as usize)
}

/// β_{2,m}(S/I) = 0 whenever deg m > 3. β_{2,m} is the reduced H̃_0 of the
/// open interval (1, m), so it is one less than its number of components.
fn is_linearly_presented(l: &FiniteLattice) -> bool {
    let labels = l.labels().expect("graph lattices are labeled");
    (0..l.size())
        .filter(|&m| labels[m].degree() > 3)
        .all(|m| open_interval_components(l, m) <= 1)
}

fn open_interval_components(l: &FiniteLattice, m: usize) -> usize {
    let interior = l.open_interval(l.bottom(), m).expect("m is above bottom");
    let mut parent: Vec<usize> = (0..l.size()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    let mut components = interior.count();
    for x in interior.iter() {
        for &y in l.lower_covers(x) {
            if interior.contains(y) {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                    components -= 1;
                }
            }
        }
    }
    components
}

#[cfg(test)]
mod tests {
    use super::super::fixtures;
    use super::*;
    use crate::ideal::MonomialIdeal;
    use crate::resolution::betti_table;
    use crate::FieldSpec;

    fn verdict(r: &GraphLatticeReport, p: Property) -> bool {
        r.properties.holds(p)
    }

    #[test]
    fn stars_are_boolean() {
        for n in 2..=6 {
            let r = graph_lattice_report(&Graph::star(n).unwrap()).unwrap();
            assert!(verdict(&r, Property::Boolean));
        }
    }

    #[test]
    fn triangle_is_modular_not_boolean() {
        let r = graph_lattice_report(&Graph::complete(3).unwrap()).unwrap();
        assert!(verdict(&r, Property::Modular));
        assert!(!verdict(&r, Property::Boolean));
    }

    #[test]
    fn typical_supersolvable_graph() {
        let r = graph_lattice_report(&fixtures::supersolvable_typical()).unwrap();
        assert!(verdict(&r, Property::Supersolvable));
        assert!(!verdict(&r, Property::Modular));
    }

    #[test]
    fn typical_lsm_graph() {
        let r = graph_lattice_report(&fixtures::lsm_typical()).unwrap();
        assert!(verdict(&r, Property::LowerSemimodular));
    }

    // The five-cycle is gap-, C4- and diamond-free, yet two of its rank-3
    // elements covered by the top meet in a single edge.
    #[test]
    fn five_cycle_breaks_forbidden_subgraph_form_of_lsm() {
        let c5 = Graph::cycle(5).unwrap();
        let r = graph_lattice_checks(&c5).unwrap();
        assert!(!verdict(&r, Property::LowerSemimodular));
        assert!(!c5.has_clique_with_unique_attachment());
        let broken: Vec<&str> = r.violations().map(|c| c.statement).collect();
        assert_eq!(broken, ["lower semimodular <=> gap-, C4- and diamond-free"]);
        assert!(matches!(graph_lattice_report(&c5), Err(Error::TheoremViolation(_))));
    }

    #[test]
    fn fixtures_pass_all_checks() {
        for g in [fixtures::fig5(), fixtures::fig6(), fixtures::bipartite_cm(), fixtures::diamond()] {
            graph_lattice_report(&g).unwrap();
        }
        let r = graph_lattice_report(&fixtures::fig6()).unwrap();
        assert!(verdict(&r, Property::Complemented));
        // x5*x6 is the meet of the coatoms missing vertices 1, 3 and 4 and it
        // complements x1*x2*x3*x4; no element lacks such complements.
        assert!(verdict(&r, Property::StronglyComplemented));
        let r = graph_lattice_report(&fixtures::fig5()).unwrap();
        assert!(!verdict(&r, Property::Graded));
    }

    #[test]
    fn disconnected_graphs_are_rejected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(graph_lattice_checks(&g).is_err());
    }

    #[test]
    fn linear_presentation_agrees_with_betti_numbers() {
        for g in [Graph::path(5).unwrap(), Graph::cycle(5).unwrap(), Graph::cycle(6).unwrap()] {
            let r = graph_lattice_checks(&g).unwrap();
            let ideal: MonomialIdeal = g.edge_ideal().unwrap();
            let graded = betti_table(&ideal, FieldSpec::default()).graded();
            let beta2_linear = graded.iter().all(|(&(i, j), _)| i != 2 || j <= 3);
            assert_eq!(r.linearly_presented, beta2_linear);
        }
    }

    #[test]
    fn theorem_ids_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(Theorem::from_id(t.id()), Some(t));
        }
    }
}
