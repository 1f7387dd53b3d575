//! Builders for the modular lattices used as fixtures: subspace lattices,
//! height-two lattices, the Fano plane, plus a small lattice of flats.

use crate::error::{Error, Result};
use crate::graph::{fixtures as graph_fixtures, Graph};
use crate::ideal::{phan_ideal, MonomialIdeal};
use crate::lattice::{FiniteLattice, MAX_ELEMENTS};
use crate::scalar::is_prime;

/// Number of `k`-dimensional subspaces of `F_q^r`.
pub fn gaussian_binomial(q: u64, r: u32, k: u32) -> Option<u64> {
    if k > r {
        return Some(0);
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num = num.checked_mul((q as u128).checked_pow(r - i)? - 1)?;
        den = den.checked_mul((q as u128).checked_pow(i + 1)? - 1)?;
    }
    u64::try_from(num / den).ok()
}

/// Subspaces of `F_q^r` ordered by inclusion, `q` prime.
///
/// Subspaces are listed by dimension, each one given by its reduced
/// row-echelon basis; within a dimension the order is that of the
/// enumeration (pivot sets lexicographic, then free entries).
pub fn subspace_lattice(q: u32, r: u32) -> Result<FiniteLattice> {
    if !is_prime(q) {
        return Err(Error::BadParameter(format!("q = {q} is not prime")));
    }
    if r == 0 {
        return Err(Error::BadParameter("dimension r must be at least 1".into()));
    }
    let mut total: u64 = 0;
    for k in 0..=r {
        let count = gaussian_binomial(q as u64, r, k).unwrap_or(u64::MAX);
        total = total.saturating_add(count);
    }
    if total > MAX_ELEMENTS as u64 {
        return Err(Error::TooLarge(total.min(usize::MAX as u64) as usize, MAX_ELEMENTS));
    }
    let r = r as usize;
    let mut spans: Vec<Vec<u64>> = Vec::new();
    for k in 0..=r {
        for pivots in k_subsets(r, k) {
            for basis in rref_bases(q, r, &pivots) {
                spans.push(span(q, &basis));
            }
        }
    }
    FiniteLattice::from_leq_fn(spans.len(), |x, y| {
        spans[x].iter().all(|v| spans[y].binary_search(v).is_ok())
    })
}

fn k_subsets(r: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, r: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..r {
            cur.push(i);
            go(i + 1, r, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, r, k, &mut Vec::new(), &mut out);
    out
}

/// All reduced row-echelon matrices with the given pivot columns.
fn rref_bases(q: u32, r: usize, pivots: &[usize]) -> Vec<Vec<Vec<u32>>> {
    // Free positions: row i, column c > pivots[i] that is not a pivot.
    let free: Vec<(usize, usize)> = pivots
        .iter()
        .enumerate()
        .flat_map(|(i, &p)| {
            (p + 1..r)
                .filter(|c| !pivots.contains(c))
                .map(move |c| (i, c))
        })
        .collect();
    let count = (q as usize).pow(free.len() as u32);
    (0..count)
        .map(|mut code| {
            let mut rows = vec![vec![0u32; r]; pivots.len()];
            for (i, &p) in pivots.iter().enumerate() {
                rows[i][p] = 1;
            }
            for &(i, c) in &free {
                rows[i][c] = (code % q as usize) as u32;
                code /= q as usize;
            }
            rows
        })
        .collect()
}

/// All vectors in the row space, encoded base `q`, sorted.
fn span(q: u32, basis: &[Vec<u32>]) -> Vec<u64> {
    let r = basis.first().map_or(0, Vec::len);
    let combos = (q as u64).pow(basis.len() as u32);
    let mut out: Vec<u64> = (0..combos)
        .map(|mut code| {
            let mut v = vec![0u64; r];
            for row in basis {
                let c = code % q as u64;
                code /= q as u64;
                for (x, &e) in v.iter_mut().zip(row) {
                    *x = (*x + c * e as u64) % q as u64;
                }
            }
            v.iter().rev().fold(0, |acc, &x| acc * q as u64 + x)
        })
        .collect();
    out.sort_unstable();
    out
}

/// Bottom, `n` pairwise incomparable atoms, top.
pub fn mn_lattice(n: usize) -> Result<FiniteLattice> {
    if n == 0 {
        return Err(Error::BadParameter("M_n needs n ≥ 1".into()));
    }
    if n + 2 > MAX_ELEMENTS {
        return Err(Error::TooLarge(n + 2, MAX_ELEMENTS));
    }
    let top = n + 1;
    let covers: Vec<(usize, usize)> = (1..=n).flat_map(|a| [(0, a), (a, top)]).collect();
    FiniteLattice::from_covers(n + 2, &covers)
}

/// Which coatoms (lines, labelled 1..=7) lie above each atom (point a..g).
const FANO_INCIDENCE: [[usize; 3]; 7] = [
    [1, 3, 6],
    [1, 4, 7],
    [1, 2, 5],
    [3, 4, 5],
    [2, 3, 7],
    [2, 4, 6],
    [5, 6, 7],
];

/// Lattice of flats of the Fano plane: 0 is the bottom, 1..=7 the points
/// a..g, `7 + k` the line labelled `k`, and 15 the top.
pub fn fano_lattice() -> FiniteLattice {
    let mut covers = Vec::new();
    for (i, lines) in FANO_INCIDENCE.iter().enumerate() {
        covers.push((0, i + 1));
        for &k in lines {
            covers.push((i + 1, 7 + k));
        }
    }
    for k in 1..=7 {
        covers.push((7 + k, 15));
    }
    FiniteLattice::from_covers(16, &covers).expect("Fano incidence is a lattice")
}

/// Lattice of flats of the graphic matroid of the diamond (K4 minus an
/// edge), with the edges numbered 1..=5 so that the triangles are {1,2,3}
/// and {3,4,5}.
///
/// Atoms 1..=5 are the edges 1, 4, 3, 2, 5; elements 6..=11 are the
/// rank-two flats 24, 14, 25, 15, 345, 123; 12 is the top.
pub fn graphic_matroid_lattice() -> FiniteLattice {
    let atom_of_edge = [0, 1, 4, 3, 2, 5];
    let flats: [&[usize]; 6] = [&[2, 4], &[1, 4], &[2, 5], &[1, 5], &[3, 4, 5], &[1, 2, 3]];
    let mut covers = Vec::new();
    for a in 1..=5 {
        covers.push((0, a));
    }
    for (k, flat) in flats.iter().enumerate() {
        for &e in *flat {
            covers.push((atom_of_edge[e], 6 + k));
        }
        covers.push((6 + k, 12));
    }
    FiniteLattice::from_covers(13, &covers).expect("lattice of flats")
}

pub fn graphic_matroid_ideal() -> MonomialIdeal {
    phan_ideal(&graphic_matroid_lattice()).expect("geometric lattices are atomic")
}

pub fn fano_ideal() -> MonomialIdeal {
    phan_ideal(&fano_lattice()).expect("the Fano lattice is atomic")
}

/// A named example: a graph, or a lattice given by cover data.
#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum Fixture {
    Graph(Graph),
    Lattice(FiniteLattice),
}

pub const LATTICE_FIXTURE_IDS: &[&str] = &["fano", "graphic-matroid"];

pub fn fixture(id: &str) -> Option<Fixture> {
    match id {
        "fano" => Some(Fixture::Lattice(fano_lattice())),
        "graphic-matroid" => Some(Fixture::Lattice(graphic_matroid_lattice())),
        _ => graph_fixtures::by_id(id).map(Fixture::Graph),
    }
}

pub fn fixture_ids() -> impl Iterator<Item = &'static str> {
    graph_fixtures::IDS
        .iter()
        .chain(LATTICE_FIXTURE_IDS)
        .copied()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Property;
    use crate::resolution::{betti_table, is_cohen_macaulay, projective_dimension};
    use crate::FieldSpec;

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(2, 3, 1), Some(7));
        assert_eq!(gaussian_binomial(3, 2, 1), Some(4));
        assert_eq!(gaussian_binomial(2, 4, 2), Some(35));
        assert_eq!(gaussian_binomial(2, 4, 5), Some(0));
    }

    #[test]
    fn small_subspace_lattices() {
        let l = subspace_lattice(2, 1).unwrap();
        assert_eq!((l.size(), l.height()), (2, 1));
        let m3 = mn_lattice(3).unwrap();
        assert!(subspace_lattice(2, 2).unwrap().is_isomorphic(&m3));
        let pg = subspace_lattice(2, 3).unwrap();
        assert_eq!(pg.size(), 16);
        assert!(pg.is_isomorphic(&fano_lattice()));
        assert!(subspace_lattice(4, 2).is_err());
        assert!(subspace_lattice(2, 0).is_err());
        assert!(matches!(subspace_lattice(2, 7), Err(Error::TooLarge(..))));
    }

    #[test]
    fn subspace_lattices_are_geometric_and_coatomic() {
        for (q, r) in [(2, 2), (3, 2), (5, 2), (2, 3), (3, 3), (2, 4)] {
            let l = subspace_lattice(q, r).unwrap();
            let lines = gaussian_binomial(q as u64, r, 1).unwrap() as usize;
            assert_eq!(l.atoms().len(), lines);
            assert_eq!(l.coatoms().len(), lines);
            for p in [Property::Atomic, Property::Modular, Property::Geometric, Property::Coatomic] {
                assert!(p.evaluate(&l).holds, "({q},{r}) {p}");
            }
            let (graded, rank) = l.is_graded();
            assert!(graded);
            assert_eq!(rank.unwrap().height, r as usize);
        }
    }

    #[test]
    fn mn_lattices() {
        assert_eq!(mn_lattice(1).unwrap().height(), 2);
        let m3 = mn_lattice(3).unwrap();
        assert!(m3.is_modular().holds && !m3.is_distributive().holds);
        let i = phan_ideal(&mn_lattice(5).unwrap()).unwrap();
        assert_eq!(i.num_generators(), 5);
        assert!(i.generators().iter().all(|g| g.degree() == 4));
        assert!(mn_lattice(0).is_err());
    }

    #[test]
    fn fano_phan_ideal_is_verbatim() {
        assert_eq!(
            fano_ideal().to_string(),
            "(x2*x4*x5*x7, x2*x3*x5*x6, x3*x4*x6*x7, x1*x2*x6*x7, x1*x4*x5*x6, x1*x3*x5*x7, x1*x2*x3*x4)"
        );
        let l = fano_lattice();
        assert!(l.is_modular().holds);
        assert_eq!(l.mobius(l.bottom(), l.top()).unwrap().abs(), 8);
    }

    #[test]
    fn graphic_matroid_fixture() {
        let i = graphic_matroid_ideal();
        assert_eq!(
            i.to_string(),
            "(x1*x3*x5, x3*x4*x6, x1*x2*x3*x4, x2*x4*x5, x1*x2*x6)"
        );
        let l = graphic_matroid_lattice();
        for p in [Property::Geometric, Property::Supersolvable, Property::Complemented] {
            assert!(p.evaluate(&l).holds, "{p}");
        }
        assert_eq!(projective_dimension(&i, FieldSpec::default()), 3);
        assert_eq!(i.height(), 2);
        assert!(!is_cohen_macaulay(&i, FieldSpec::default()));
    }

    /// Flats of the diamond's cycle matroid found by brute force: edge sets
    /// that contain every edge whose endpoints they already connect.
    #[test]
    fn graphic_matroid_matches_computed_flats() {
        let g = graph_fixtures::diamond();
        let edges = g.edges();
        let connects = |set: u32, (u, v): (usize, usize)| {
            let mut reach = 1u64 << u;
            loop {
                let mut next = reach;
                for (k, &(a, b)) in edges.iter().enumerate() {
                    if set >> k & 1 == 1 && (reach >> a & 1 == 1 || reach >> b & 1 == 1) {
                        next |= 1 << a | 1 << b;
                    }
                }
                if next == reach {
                    return reach >> v & 1 == 1;
                }
                reach = next;
            }
        };
        let flats: Vec<u32> = (0u32..1 << edges.len())
            .filter(|&s| {
                edges
                    .iter()
                    .enumerate()
                    .all(|(k, &e)| s >> k & 1 == 1 || !connects(s, e))
            })
            .collect();
        let l = FiniteLattice::from_leq_fn(flats.len(), |x, y| flats[x] & !flats[y] == 0).unwrap();
        assert!(l.is_isomorphic(&graphic_matroid_lattice()));
    }

    #[test]
    fn purity_of_subspace_phan_ideals() {
        for (q, r) in [(2u32, 2u32), (3, 2), (2, 3)] {
            let i = phan_ideal(&subspace_lattice(q, r).unwrap()).unwrap();
            let expected: Vec<u32> = (0..=r)
                .map(|k| (1..=k).map(|t| q.pow(r - t)).sum())
                .collect();
            assert_eq!(betti_table(&i, FieldSpec::default()).pure_degrees(), Some(expected));
        }
    }

    #[test]
    fn fixtures_resolve() {
        for id in fixture_ids() {
            assert!(fixture(id).is_some(), "{id}");
        }
        assert!(fixture("nope").is_none());
    }
}
