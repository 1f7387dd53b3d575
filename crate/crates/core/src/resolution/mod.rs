//! Betti numbers of `S/I` from the homology of open intervals in the LCM
//! lattice, together with the invariants read off from them.

mod taylor;

pub use taylor::{
    taylor_betti_numbers, taylor_is_minimal, taylor_is_minimal_by_subsets, TaylorReport,
    TAYLOR_MAX_GENERATORS,
};

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lattice::{FiniteLattice, Property};
use crate::monomial::Monomial;
use crate::scalar::FieldSpec;

/// Multigraded Betti numbers of `S/I`; only nonzero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    field: FieldSpec,
    multigraded: BTreeMap<(usize, Monomial), usize>,
    char0_agrees: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: u32,
    pub m: Vec<u32>,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiJson {
    pub characteristic: u32,
    pub entries: Vec<BettiEntry>,
}

impl BettiTable {
    pub fn from_multigraded(field: FieldSpec, entries: BTreeMap<(usize, Monomial), usize>) -> Self {
        let multigraded = entries.into_iter().filter(|&(_, r)| r > 0).collect();
        BettiTable {
            field,
            multigraded,
            char0_agrees: None,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Result of re-running the interval homology over the rationals:
    /// `None` if it was not run for any interval.
    pub fn char0_agrees(&self) -> Option<bool> {
        self.char0_agrees
    }

    pub fn multigraded(&self) -> &BTreeMap<(usize, Monomial), usize> {
        &self.multigraded
    }

    pub fn get(&self, i: usize, m: &Monomial) -> usize {
        self.multigraded.get(&(i, m.clone())).copied().unwrap_or(0)
    }

    /// β_{i,j}: the sum of β_{i,m} over monomials of degree `j`.
    pub fn graded(&self) -> BTreeMap<(usize, u32), usize> {
        let mut out = BTreeMap::new();
        for ((i, m), r) in &self.multigraded {
            *out.entry((*i, m.degree())).or_insert(0) += r;
        }
        out
    }

    pub fn graded_entry(&self, i: usize, j: u32) -> usize {
        self.graded().get(&(i, j)).copied().unwrap_or(0)
    }

    /// Total rank in homological degree `i`.
    pub fn total(&self, i: usize) -> usize {
        self.multigraded
            .iter()
            .filter(|((k, _), _)| *k == i)
            .map(|(_, r)| r)
            .sum()
    }

    pub fn projective_dimension(&self) -> usize {
        self.multigraded.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// Degrees `(d_0, ..., d_pd)` when every column has a single degree.
    pub fn pure_degrees(&self) -> Option<Vec<u32>> {
        let graded = self.graded();
        (0..=self.projective_dimension())
            .map(|i| {
                let mut ds = graded.keys().filter(|(k, _)| *k == i).map(|(_, j)| *j);
                match (ds.next(), ds.next()) {
                    (Some(d), None) => Some(d),
                    _ => None,
                }
            })
            .collect()
    }

    /// Columns `i`, rows `j − i`, `-` for zero.
    pub fn render_text(&self) -> String {
        let graded = self.graded();
        let pd = self.projective_dimension();
        let max_row = graded
            .keys()
            .map(|&(i, j)| j as usize - i)
            .max()
            .unwrap_or(0);
        let cell = |i: usize, row: usize| match graded.get(&(i, (row + i) as u32)) {
            Some(r) => r.to_string(),
            None => "-".to_string(),
        };
        let widths: Vec<usize> = (0..=pd)
            .map(|i| {
                (0..=max_row)
                    .map(|row| cell(i, row).len())
                    .chain([i.to_string().len()])
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        let label_width = max_row.to_string().len();
        let mut out = String::new();
        let _ = write!(out, "{:>label_width$} |", "");
        for (i, w) in widths.iter().enumerate() {
            let _ = write!(out, " {i:>w$}");
        }
        out.push('\n');
        let rule: usize = widths.iter().map(|w| w + 1).sum();
        let _ = writeln!(out, "{}-+{}", "-".repeat(label_width), "-".repeat(rule));
        for row in 0..=max_row {
            let _ = write!(out, "{row:>label_width$} |");
            for (i, w) in widths.iter().enumerate() {
                let _ = write!(out, " {:>w$}", cell(i, row));
            }
            out.push('\n');
        }
        out
    }

    /// Multigraded entries, one line each: `i m rank`.
    pub fn render_multigraded(&self) -> String {
        self.multigraded
            .iter()
            .map(|((i, m), r)| format!("{i} {m} {r}\n"))
            .collect()
    }

    pub fn to_json(&self) -> BettiJson {
        BettiJson {
            characteristic: self.field.characteristic(),
            entries: self
                .multigraded
                .iter()
                .map(|((i, m), r)| BettiEntry {
                    i: *i,
                    j: m.degree(),
                    m: m.exponents().to_vec(),
                    rank: *r,
                })
                .collect(),
        }
    }
}

/// Betti numbers of `S/I` over `field`:
/// β_{i,m} = dim H̃_{i−2}(open interval (1, m)) in the LCM lattice.
pub fn betti_table(ideal: &MonomialIdeal, field: FieldSpec) -> BettiTable {
    lattice_betti(&ideal.lcm_lattice(), field, false)
}

/// As [`betti_table`], additionally recomputing every interval over the
/// rationals when its boundary matrices are small enough.
pub fn betti_table_checked(ideal: &MonomialIdeal, field: FieldSpec) -> BettiTable {
    lattice_betti(&ideal.lcm_lattice(), field, true)
}

fn lattice_betti(lattice: &FiniteLattice, field: FieldSpec, check: bool) -> BettiTable {
    let labels = lattice.labels().expect("lcm lattices are labeled");
    let bottom = lattice.bottom();
    let per_element: Vec<(usize, Vec<usize>, Option<bool>)> = (0..lattice.size())
        .into_par_iter()
        .filter(|&m| m != bottom)
        .map(|m| {
            let complex = lattice
                .open_interval_order_complex(bottom, m)
                .expect("bottom is below every other element");
            if check {
                let c = complex.reduced_homology_checked(field);
                (m, c.ranks, c.char0_agrees)
            } else {
                (m, complex.reduced_homology_ranks(field), None)
            }
        })
        .collect();
    let mut multigraded = BTreeMap::new();
    multigraded.insert((0, labels[bottom].clone()), 1);
    let mut char0_agrees = None;
    for (m, ranks, agrees) in per_element {
        // ranks[k] is H̃_{k−1}, which contributes to β_{k+1}.
        for (k, &r) in ranks.iter().enumerate() {
            if r > 0 {
                multigraded.insert((k + 1, labels[m].clone()), r);
            }
        }
        if let Some(a) = agrees {
            char0_agrees = Some(char0_agrees.unwrap_or(true) && a);
        }
    }
    BettiTable {
        field,
        multigraded,
        char0_agrees,
    }
}

pub fn projective_dimension(ideal: &MonomialIdeal, field: FieldSpec) -> usize {
    betti_table(ideal, field).projective_dimension()
}

/// `S/I` is Cohen–Macaulay exactly when pd equals the height of `I`.
pub fn is_cohen_macaulay(ideal: &MonomialIdeal, field: FieldSpec) -> bool {
    projective_dimension(ideal, field) == ideal.height()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Purity {
    pub pure: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<u32>>,
}

pub fn is_pure(ideal: &MonomialIdeal, field: FieldSpec) -> Purity {
    let degrees = betti_table(ideal, field).pure_degrees();
    Purity {
        pure: degrees.is_some(),
        degrees,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BooleanEquivalence {
    pub boolean_lattice: bool,
    pub variable_power_criterion: bool,
    pub taylor_minimal: bool,
    pub pd_equals_generators: bool,
    pub field: FieldSpec,
}

/// Four conditions that hold together or not at all: the LCM lattice is
/// Boolean; every generator has a private dominant variable power; the
/// Taylor resolution is minimal; pd equals the number of generators.
pub fn boolean_equivalence_report(
    ideal: &MonomialIdeal,
    field: FieldSpec,
) -> Result<BooleanEquivalence> {
    let lattice = ideal.lcm_lattice();
    let q = ideal.num_generators();
    let taylor_minimal = if q <= 16 {
        taylor_is_minimal_by_subsets(ideal)?.is_minimal
    } else {
        let all = ideal.lcm_of_generators();
        (0..q).all(|p| {
            let rest = ideal
                .generators()
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != p)
                .fold(Monomial::one(ideal.nvars()), |acc, (_, g)| acc.lcm(g));
            rest != all
        })
    };
    let report = BooleanEquivalence {
        boolean_lattice: lattice.is_boolean().holds,
        variable_power_criterion: taylor_is_minimal(ideal).is_minimal,
        taylor_minimal,
        pd_equals_generators: lattice_betti(&lattice, field, false).projective_dimension() == q,
        field,
    };
    let values = [
        report.boolean_lattice,
        report.variable_power_criterion,
        report.taylor_minimal,
        report.pd_equals_generators,
    ];
    if values.iter().all(|&v| v == values[0]) {
        Ok(report)
    } else {
        Err(Error::EquivalenceViolation(format!("{ideal}: {report:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PdHeightReport {
    pub pd: usize,
    pub lattice_height: usize,
    pub mi_width: usize,
    pub equal: bool,
    pub lattice_geometric: bool,
    pub lattice_lsm_coatomic: bool,
    pub lattice_strongly_complemented: bool,
    pub field: FieldSpec,
}

/// pd against the height of the LCM lattice, with the lattice conditions
/// that force or are forced by equality. Any broken implication is an error.
pub fn pd_vs_height_report(ideal: &MonomialIdeal, field: FieldSpec) -> Result<PdHeightReport> {
    let lattice = ideal.lcm_lattice();
    let pd = lattice_betti(&lattice, field, false).projective_dimension();
    let lattice_height = lattice.height();
    let report = PdHeightReport {
        pd,
        lattice_height,
        mi_width: lattice.mi_width(),
        equal: pd == lattice_height,
        lattice_geometric: Property::Geometric.evaluate(&lattice).holds,
        lattice_lsm_coatomic: lattice.is_lower_semimodular().holds
            && lattice.is_coatomic().holds,
        lattice_strongly_complemented: lattice.is_strongly_complemented().holds,
        field,
    };
    let broken = if report.pd > report.lattice_height {
        Some("pd exceeds the lattice height")
    } else if report.pd > report.mi_width {
        Some("pd exceeds the width of the meet-irreducibles")
    } else if report.lattice_geometric && !report.equal {
        Some("geometric lattice with pd below the height")
    } else if report.lattice_lsm_coatomic && !report.equal {
        Some("lower semimodular coatomic lattice with pd below the height")
    } else if report.equal && !report.lattice_strongly_complemented {
        Some("pd equals the height but the lattice is not strongly complemented")
    } else {
        None
    };
    match broken {
        Some(what) => Err(Error::ContractViolation(format!("{ideal}: {what}: {report:?}"))),
        None => Ok(report),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn fano() -> MonomialIdeal {
        MonomialIdeal::parse_text(
            "x2*x4*x5*x7\nx2*x3*x5*x6\nx3*x4*x6*x7\nx1*x2*x6*x7\nx1*x4*x5*x6\nx1*x3*x5*x7\nx1*x2*x3*x4",
        )
        .unwrap()
    }

    fn ideal(text: &str) -> MonomialIdeal {
        MonomialIdeal::parse_text(text).unwrap()
    }

    #[test]
    fn fano_table() {
        let t = betti_table_checked(&fano(), FieldSpec::default());
        let graded = t.graded();
        let expected: BTreeMap<(usize, u32), usize> =
            [((0, 0), 1), ((1, 4), 7), ((2, 6), 14), ((3, 7), 8)].into_iter().collect();
        assert_eq!(graded, expected);
        assert_eq!(t.projective_dimension(), 3);
        assert_eq!(t.pure_degrees(), Some(vec![0, 4, 6, 7]));
        assert_eq!(t.char0_agrees(), Some(true));
        let text = t.render_text();
        let rows: Vec<&str> = text.lines().collect();
        assert_eq!(rows[0], "  | 0 1  2 3");
        assert_eq!(rows[1], "--+---------");
        assert_eq!(rows[2], "0 | 1 -  - -");
        assert_eq!(rows[5], "3 | - 7  - -");
        assert_eq!(rows[6], "4 | - - 14 8");
        assert!(is_cohen_macaulay(&fano(), FieldSpec::GF2));
    }

    #[test]
    fn generators_have_linear_strand_entries() {
        let i = ideal("x1*x2\nx2*x3");
        let t = betti_table(&i, FieldSpec::RATIONALS);
        for g in i.generators() {
            assert_eq!(t.get(1, g), 1);
        }
        assert_eq!(t.get(2, &Monomial::new(vec![1, 1, 1])), 1);
        assert_eq!(t.get(0, &Monomial::one(3)), 1);
    }

    #[test]
    fn principal_ideal_has_pd_one() {
        assert_eq!(projective_dimension(&ideal("x1"), FieldSpec::default()), 1);
        assert_eq!(projective_dimension(&ideal("x1^3*x2"), FieldSpec::GF2), 1);
    }

    #[test]
    fn json_entries() {
        let t = betti_table(&ideal("x1\nx2"), FieldSpec::GF2);
        let json = serde_json::to_string(&t.to_json()).unwrap();
        assert_eq!(
            json,
            r#"{"characteristic":2,"entries":[{"i":0,"j":0,"m":[0,0],"rank":1},{"i":1,"j":1,"m":[0,1],"rank":1},{"i":1,"j":1,"m":[1,0],"rank":1},{"i":2,"j":2,"m":[1,1],"rank":1}]}"#
        );
    }

    #[test]
    fn boolean_equivalence_examples() {
        let all = |r: &BooleanEquivalence| {
            [
                r.boolean_lattice,
                r.variable_power_criterion,
                r.taylor_minimal,
                r.pd_equals_generators,
            ]
        };
        let f = FieldSpec::default();
        assert_eq!(all(&boolean_equivalence_report(&ideal("x1*x2\nx1*x3"), f).unwrap()), [true; 4]);
        assert_eq!(
            all(&boolean_equivalence_report(&ideal("x1*x2\nx2*x3\nx1*x3"), f).unwrap()),
            [false; 4]
        );
        assert_eq!(all(&boolean_equivalence_report(&ideal("x1^2\nx2^3"), f).unwrap()), [true; 4]);
    }

    #[test]
    fn purity_examples() {
        let p = is_pure(&ideal("x2*x3\nx1*x3\nx1*x2"), FieldSpec::default());
        assert_eq!(p.degrees, Some(vec![0, 2, 3]));
        let path5 = ideal("x1*x2\nx2*x3\nx3*x4\nx4*x5");
        assert!(!is_pure(&path5, FieldSpec::default()).pure);
    }

    #[test]
    fn pd_height_on_fano_and_path() {
        let r = pd_vs_height_report(&fano(), FieldSpec::default()).unwrap();
        assert_eq!((r.pd, r.lattice_height, r.lattice_geometric), (3, 3, true));
        let path5 = ideal("x1*x2\nx2*x3\nx3*x4\nx4*x5");
        let r = pd_vs_height_report(&path5, FieldSpec::default()).unwrap();
        assert_eq!((r.pd, r.lattice_height), (3, 4));
        assert!(r.lattice_strongly_complemented);
    }

    #[test]
    fn graphic_matroid_is_not_cohen_macaulay() {
        let i = ideal("x1*x3*x5\nx3*x4*x6\nx1*x2*x3*x4\nx2*x4*x5\nx1*x2*x6");
        assert_eq!(projective_dimension(&i, FieldSpec::default()), 3);
        assert_eq!(i.height(), 2);
        assert!(!is_cohen_macaulay(&i, FieldSpec::default()));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_ideal() -> impl Strategy<Value = MonomialIdeal> {
            (1usize..=5).prop_flat_map(|n| {
                prop::collection::vec(prop::collection::vec(0u32..=2, n), 1..=6).prop_filter_map(
                    "unit generator",
                    move |gens| {
                        MonomialIdeal::minimalize(n, gens.into_iter().map(Monomial::new)).ok()
                    },
                )
            })
        }

        proptest! {
            #[test]
            fn lattice_formula_matches_taylor_oracle(i in arb_ideal(), c in prop::sample::select(vec![0u32, 2, 3, 32003])) {
                let f = FieldSpec::new(c).unwrap();
                let lattice = betti_table(&i, f);
                let oracle = taylor_betti_numbers(&i, f).unwrap();
                prop_assert_eq!(lattice.multigraded(), &oracle);
            }

            #[test]
            fn variable_renaming_permutes_the_table(i in arb_ideal(), seed in any::<u64>()) {
                use rand::seq::SliceRandom;
                use rand::SeedableRng;
                let mut perm: Vec<usize> = (0..i.nvars()).collect();
                perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
                let renamed = i.rename_variables(&perm, i.nvars());
                let a = betti_table(&i, FieldSpec::default());
                let b = betti_table(&renamed, FieldSpec::default());
                let moved: BTreeMap<_, _> = a
                    .multigraded()
                    .iter()
                    .map(|((k, m), r)| ((*k, m.rename(&perm, i.nvars())), *r))
                    .collect();
                prop_assert_eq!(&moved, b.multigraded());
            }

            #[test]
            fn taylor_criteria_agree(i in arb_ideal()) {
                prop_assert_eq!(
                    taylor_is_minimal(&i).is_minimal,
                    taylor_is_minimal_by_subsets(&i).unwrap().is_minimal
                );
                prop_assert!(boolean_equivalence_report(&i, FieldSpec::default()).is_ok());
            }

            #[test]
            fn pd_bounds(i in arb_ideal()) {
                prop_assert!(pd_vs_height_report(&i, FieldSpec::default()).is_ok());
            }
        }
    }
}
