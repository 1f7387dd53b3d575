use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};

use super::{FiniteLattice, RankFunction};

/// The lattice properties that get a verdict in a [`PropertyReport`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Atomic,
    Coatomic,
    Graded,
    Modular,
    UpperSemimodular,
    LowerSemimodular,
    Supersolvable,
    Distributive,
    Boolean,
    Geometric,
    Complemented,
    StronglyComplemented,
    UniquelyComplemented,
}

impl Property {
    pub const ALL: [Property; 13] = [
        Property::Atomic,
        Property::Coatomic,
        Property::Graded,
        Property::Modular,
        Property::UpperSemimodular,
        Property::LowerSemimodular,
        Property::Supersolvable,
        Property::Distributive,
        Property::Boolean,
        Property::Geometric,
        Property::Complemented,
        Property::StronglyComplemented,
        Property::UniquelyComplemented,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Atomic => "atomic",
            Property::Coatomic => "coatomic",
            Property::Graded => "graded",
            Property::Modular => "modular",
            Property::UpperSemimodular => "upper_semimodular",
            Property::LowerSemimodular => "lower_semimodular",
            Property::Supersolvable => "supersolvable",
            Property::Distributive => "distributive",
            Property::Boolean => "boolean",
            Property::Geometric => "geometric",
            Property::Complemented => "complemented",
            Property::StronglyComplemented => "strongly_complemented",
            Property::UniquelyComplemented => "uniquely_complemented",
        }
    }

    pub fn evaluate(self, l: &FiniteLattice) -> Verdict {
        match self {
            Property::Atomic => l.is_atomic(),
            Property::Coatomic => l.is_coatomic(),
            Property::Graded => l.graded_verdict(),
            Property::Modular => l.is_modular(),
            Property::UpperSemimodular => l.is_upper_semimodular(),
            Property::LowerSemimodular => l.is_lower_semimodular(),
            Property::Supersolvable => l.is_supersolvable(),
            Property::Distributive => l.is_distributive(),
            Property::Boolean => l.is_boolean(),
            Property::Geometric => l.is_geometric(),
            Property::Complemented => l.is_complemented(),
            Property::StronglyComplemented => l.is_strongly_complemented(),
            Property::UniquelyComplemented => l.is_uniquely_complemented(),
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Evidence attached to a verdict.
///
/// For a false verdict the elements violate the definition (a pair breaking
/// a rank identity, a triple breaking distributivity, an element without a
/// complement, ...). For a true supersolvable verdict they form a modular
/// maximal chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    NotGraded,
    Elements(Vec<usize>),
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Witness::NotGraded => s.serialize_str("not graded"),
            Witness::Elements(xs) => {
                let mut seq = s.serialize_seq(Some(xs.len()))?;
                for x in xs {
                    seq.serialize_element(x)?;
                }
                seq.end()
            }
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::NotGraded => f.write_str("not graded"),
            Witness::Elements(xs) => {
                let parts: Vec<String> = xs.iter().map(usize::to_string).collect();
                write!(f, "({})", parts.join(", "))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Verdict {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Verdict {
    fn yes() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }

    fn no(elements: Vec<usize>) -> Self {
        Verdict {
            holds: false,
            witness: Some(Witness::Elements(elements)),
        }
    }

    fn not_graded() -> Self {
        Verdict {
            holds: false,
            witness: Some(Witness::NotGraded),
        }
    }

    fn from_violation(v: Option<Vec<usize>>) -> Self {
        v.map_or_else(Verdict::yes, Verdict::no)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(transparent)]
pub struct PropertyReport {
    verdicts: BTreeMap<Property, Verdict>,
}

impl PropertyReport {
    pub fn compute(l: &FiniteLattice) -> Self {
        PropertyReport {
            verdicts: Property::ALL.iter().map(|&p| (p, p.evaluate(l))).collect(),
        }
    }

    pub fn verdict(&self, p: Property) -> &Verdict {
        &self.verdicts[&p]
    }

    pub fn holds(&self, p: Property) -> bool {
        self.verdicts[&p].holds
    }

    pub fn iter(&self) -> impl Iterator<Item = (Property, &Verdict)> {
        self.verdicts.iter().map(|(&p, v)| (p, v))
    }

    /// Aligned two-column text.
    pub fn render_text(&self) -> String {
        let width = Property::ALL.iter().map(|p| p.name().len()).max().unwrap_or(0);
        let mut out = String::new();
        for (p, v) in self.iter() {
            let verdict = if v.holds { "yes" } else { "no" };
            match &v.witness {
                Some(w) => out.push_str(&format!("{:<width$}  {verdict:<3}  {w}\n", p.name())),
                None => out.push_str(&format!("{:<width$}  {verdict}\n", p.name())),
            }
        }
        out
    }
}

impl FiniteLattice {
    fn rank_or_none(&self) -> Option<RankFunction> {
        self.rank_function()
    }

    fn graded_verdict(&self) -> Verdict {
        Verdict::from_violation(self.ungraded_cover().map(|(x, y)| vec![x, y]))
    }

    /// Every element is the join of the atoms below it.
    pub fn is_atomic(&self) -> Verdict {
        let atoms = self.atoms();
        Verdict::from_violation(
            (0..self.size())
                .find(|&x| self.join_all(atoms.iter().copied().filter(|&a| self.leq(a, x))) != x)
                .map(|x| vec![x]),
        )
    }

    /// Every element is the meet of the coatoms above it.
    pub fn is_coatomic(&self) -> Verdict {
        let coatoms = self.coatoms();
        Verdict::from_violation(
            (0..self.size())
                .find(|&x| self.meet_all(coatoms.iter().copied().filter(|&c| self.leq(x, c))) != x)
                .map(|x| vec![x]),
        )
    }

    fn rank_pair_check(&self, bad: impl Fn(isize, isize) -> bool) -> Verdict {
        let Some(rank) = self.rank_or_none() else {
            return Verdict::not_graded();
        };
        let r = |x: usize| rank.ranks[x] as isize;
        let n = self.size();
        for x in 0..n {
            for y in x + 1..n {
                let lhs = r(x) + r(y);
                let rhs = r(self.meet(x, y)) + r(self.join(x, y));
                if bad(lhs, rhs) {
                    return Verdict::no(vec![x, y]);
                }
            }
        }
        Verdict::yes()
    }

    /// rk(x) + rk(y) = rk(x ∧ y) + rk(x ∨ y) for all pairs.
    pub fn is_modular(&self) -> Verdict {
        self.rank_pair_check(|lhs, rhs| lhs != rhs)
    }

    /// rk(x) + rk(y) ≥ rk(x ∧ y) + rk(x ∨ y) for all pairs.
    pub fn is_upper_semimodular(&self) -> Verdict {
        self.rank_pair_check(|lhs, rhs| lhs < rhs)
    }

    /// rk(x) + rk(y) ≤ rk(x ∧ y) + rk(x ∨ y) for all pairs.
    pub fn is_lower_semimodular(&self) -> Verdict {
        self.rank_pair_check(|lhs, rhs| lhs > rhs)
    }

    /// Elements satisfying the modular rank identity against every element.
    /// Empty when the lattice is not graded.
    pub fn modular_elements(&self) -> Vec<usize> {
        let Some(rank) = self.rank_or_none() else {
            return Vec::new();
        };
        let r = &rank.ranks;
        (0..self.size())
            .filter(|&m| {
                (0..self.size())
                    .all(|x| r[x] + r[m] == r[self.meet(x, m)] + r[self.join(x, m)])
            })
            .collect()
    }

    /// Graded and some maximal chain consists of modular elements. A true
    /// verdict carries that chain as its witness.
    pub fn is_supersolvable(&self) -> Verdict {
        if self.ungraded_cover().is_some() {
            return Verdict::not_graded();
        }
        let mut modular = vec![false; self.size()];
        for m in self.modular_elements() {
            modular[m] = true;
        }
        // DFS over covers restricted to modular elements, smallest index first.
        let mut dead = vec![false; self.size()];
        let mut chain = vec![self.bottom()];
        if self.modular_chain_from(self.bottom(), &modular, &mut dead, &mut chain) {
            Verdict {
                holds: true,
                witness: Some(Witness::Elements(chain)),
            }
        } else {
            Verdict {
                holds: false,
                witness: None,
            }
        }
    }

    fn modular_chain_from(
        &self,
        x: usize,
        modular: &[bool],
        dead: &mut [bool],
        chain: &mut Vec<usize>,
    ) -> bool {
        if x == self.top() {
            return true;
        }
        for &y in self.upper_covers(x) {
            if modular[y] && !dead[y] {
                chain.push(y);
                if self.modular_chain_from(y, modular, dead, chain) {
                    return true;
                }
                chain.pop();
                dead[y] = true;
            }
        }
        false
    }

    /// x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z) for all triples.
    ///
    /// Decided by checking that every join-irreducible is join-prime; a
    /// failing join-irreducible `j` with `j ≤ y ∨ z`, `j ≰ y`, `j ≰ z` gives
    /// the violating triple `(j, y, z)`.
    pub fn is_distributive(&self) -> Verdict {
        let n = self.size();
        for j in self.join_irreducibles() {
            for y in 0..n {
                if self.leq(j, y) {
                    continue;
                }
                for z in y + 1..n {
                    if !self.leq(j, z) && self.leq(j, self.join(y, z)) {
                        return Verdict::no(vec![j, y, z]);
                    }
                }
            }
        }
        Verdict::yes()
    }

    /// Distributive and complemented.
    pub fn is_boolean(&self) -> Verdict {
        let d = self.is_distributive();
        if !d.holds {
            return d;
        }
        self.is_complemented()
    }

    /// Atomic and upper semimodular.
    pub fn is_geometric(&self) -> Verdict {
        let a = self.is_atomic();
        if !a.holds {
            return a;
        }
        self.is_upper_semimodular()
    }

    pub fn is_complement(&self, x: usize, y: usize) -> bool {
        self.meet(x, y) == self.bottom() && self.join(x, y) == self.top()
    }

    pub fn complements(&self, x: usize) -> Vec<usize> {
        (0..self.size()).filter(|&y| self.is_complement(x, y)).collect()
    }

    pub fn is_complemented(&self) -> Verdict {
        Verdict::from_violation(
            (0..self.size())
                .find(|&x| !(0..self.size()).any(|y| self.is_complement(x, y)))
                .map(|x| vec![x]),
        )
    }

    pub fn is_uniquely_complemented(&self) -> Verdict {
        Verdict::from_violation(
            (0..self.size())
                .find(|&x| {
                    (0..self.size())
                        .filter(|&y| self.is_complement(x, y))
                        .take(2)
                        .count()
                        != 1
                })
                .map(|x| vec![x]),
        )
    }

    /// Elements that are meets of coatoms (the top is the empty meet).
    pub fn meets_of_coatoms(&self) -> Vec<bool> {
        let coatoms = self.coatoms();
        (0..self.size())
            .map(|x| self.meet_all(coatoms.iter().copied().filter(|&c| self.leq(x, c))) == x)
            .collect()
    }

    /// Elements that are joins of atoms (the bottom is the empty join).
    pub fn joins_of_atoms(&self) -> Vec<bool> {
        let atoms = self.atoms();
        (0..self.size())
            .map(|x| self.join_all(atoms.iter().copied().filter(|&a| self.leq(a, x))) == x)
            .collect()
    }

    /// Every element has a complement that is a meet of coatoms and one that
    /// is a join of atoms.
    pub fn is_strongly_complemented(&self) -> Verdict {
        let meets = self.meets_of_coatoms();
        let joins = self.joins_of_atoms();
        let n = self.size();
        Verdict::from_violation(
            (0..n)
                .find(|&x| {
                    let has_meet = (0..n).any(|y| meets[y] && self.is_complement(x, y));
                    let has_join = (0..n).any(|z| joins[z] && self.is_complement(x, z));
                    !(has_meet && has_join)
                })
                .map(|x| vec![x]),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b2() -> FiniteLattice {
        FiniteLattice::from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn m3() -> FiniteLattice {
        FiniteLattice::from_covers(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap()
    }

    fn n5() -> FiniteLattice {
        FiniteLattice::from_covers(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap()
    }

    fn distributive_by_triples(l: &FiniteLattice) -> bool {
        let n = l.size();
        (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| l.meet(x, l.join(y, z)) == l.join(l.meet(x, y), l.meet(x, z)))
            })
        })
    }

    #[test]
    fn b2_has_every_property() {
        let report = PropertyReport::compute(&b2());
        for p in Property::ALL {
            assert!(report.holds(p), "{p} failed");
        }
        assert_eq!(
            report.verdict(Property::Supersolvable).witness,
            Some(Witness::Elements(vec![0, 1, 3]))
        );
    }

    #[test]
    fn one_point_lattice_has_every_property() {
        let l = FiniteLattice::from_covers(1, &[]).unwrap();
        let report = PropertyReport::compute(&l);
        for p in Property::ALL {
            assert!(report.holds(p), "{p} failed");
        }
    }

    #[test]
    fn m3_is_modular_not_distributive() {
        let l = m3();
        let report = PropertyReport::compute(&l);
        assert!(report.holds(Property::Modular));
        assert!(report.holds(Property::Geometric));
        assert!(report.holds(Property::Complemented));
        assert!(!report.holds(Property::UniquelyComplemented));
        let d = report.verdict(Property::Distributive);
        assert!(!d.holds);
        let Some(Witness::Elements(t)) = &d.witness else { panic!() };
        let (x, y, z) = (t[0], t[1], t[2]);
        assert_ne!(l.meet(x, l.join(y, z)), l.join(l.meet(x, y), l.meet(x, z)));
        assert!(!report.holds(Property::Boolean));
    }

    #[test]
    fn pentagon_semimodular_checks_report_not_graded() {
        let l = n5();
        assert_eq!(l.is_modular().witness, Some(Witness::NotGraded));
        assert_eq!(l.is_upper_semimodular().witness, Some(Witness::NotGraded));
        assert_eq!(l.is_supersolvable().witness, Some(Witness::NotGraded));
        assert!(!l.is_distributive().holds);
        assert!(l.is_complemented().holds);
        assert!(!distributive_by_triples(&l));
    }

    #[test]
    fn semimodular_witnesses_break_the_inequality() {
        // 0 < a,b,c; a,b < d; b,c < e; d,e < 1. Lower but not upper semimodular.
        let l = FiniteLattice::from_covers(
            7,
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (2, 5), (3, 5), (4, 6), (5, 6)],
        )
        .unwrap();
        let rank = l.rank_function().unwrap();
        let r = |x: usize| rank.ranks[x] as isize;
        let usm = l.is_upper_semimodular();
        let lsm = l.is_lower_semimodular();
        assert!(!usm.holds);
        let Some(Witness::Elements(p)) = usm.witness else { panic!() };
        assert!(r(p[0]) + r(p[1]) < r(l.meet(p[0], p[1])) + r(l.join(p[0], p[1])));
        assert!(lsm.holds);
    }

    #[test]
    fn distributive_fast_path_matches_triples_on_small_lattices() {
        for l in [b2(), m3(), n5()] {
            assert_eq!(l.is_distributive().holds, distributive_by_triples(&l));
        }
        let chain = FiniteLattice::from_covers(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(chain.is_distributive().holds);
        assert!(!chain.is_complemented().holds);
        assert!(!chain.is_atomic().holds);
    }

    #[test]
    fn report_text_is_aligned() {
        let text = PropertyReport::compute(&m3()).render_text();
        assert!(text.lines().count() == 13);
        assert!(text.contains("distributive           no"));
    }
}
