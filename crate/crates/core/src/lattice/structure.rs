use crate::error::{Error, Result};
use crate::homology::SimplicialComplexData;
use crate::monomial::Monomial;

use super::{BitSet, FiniteLattice};

impl FiniteLattice {
    /// Möbius function μ(x, y) of the interval [x, y].
    pub fn mobius(&self, x: usize, y: usize) -> Result<i64> {
        self.check_index(x)?;
        self.check_index(y)?;
        if !self.leq(x, y) {
            return Err(Error::NotComparable(x, y));
        }
        let mut mu = vec![0i64; self.size()];
        for &z in self.linear_extension() {
            if !self.leq(x, z) || !self.leq(z, y) {
                continue;
            }
            mu[z] = if z == x {
                1
            } else {
                -self
                    .down_set(z)
                    .iter()
                    .filter(|&w| w != z && self.leq(x, w))
                    .map(|w| mu[w])
                    .sum::<i64>()
            };
        }
        Ok(mu[y])
    }

    /// Elements strictly between `lo` and `hi`.
    pub fn open_interval(&self, lo: usize, hi: usize) -> Result<BitSet> {
        self.check_index(lo)?;
        self.check_index(hi)?;
        if !self.lt(lo, hi) {
            return Err(Error::NotComparable(lo, hi));
        }
        let mut set = self.up_set(lo).clone();
        set.intersect_with(self.down_set(hi));
        set.remove(lo);
        set.remove(hi);
        Ok(set)
    }

    /// Order complex of the open interval (lo, hi): every chain is a face,
    /// the empty chain included.
    pub fn open_interval_order_complex(&self, lo: usize, hi: usize) -> Result<SimplicialComplexData> {
        self.open_interval_order_complex_skeleton(lo, hi, usize::MAX)
    }

    /// Faces of dimension at most `max_dim` of the open-interval order complex.
    pub fn open_interval_order_complex_skeleton(
        &self,
        lo: usize,
        hi: usize,
        max_dim: usize,
    ) -> Result<SimplicialComplexData> {
        let interior = self.open_interval(lo, hi)?;
        let vertices: Vec<usize> = interior.iter().collect();
        let mut faces_by_dim: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new()]];
        let mut chain = Vec::new();
        for &v in &vertices {
            self.extend_chains(v, &interior, max_dim, &mut chain, &mut faces_by_dim);
        }
        Ok(SimplicialComplexData::from_sorted_parts(vertices, faces_by_dim))
    }

    fn extend_chains(
        &self,
        z: usize,
        interior: &BitSet,
        max_dim: usize,
        chain: &mut Vec<usize>,
        faces: &mut Vec<Vec<Vec<usize>>>,
    ) {
        chain.push(z);
        let dim = chain.len() - 1;
        if faces.len() <= dim + 1 {
            faces.push(Vec::new());
        }
        let mut face = chain.clone();
        face.sort_unstable();
        faces[dim + 1].push(face);
        if dim < max_dim {
            let mut above = self.up_set(z).clone();
            above.intersect_with(interior);
            above.remove(z);
            for w in above.iter() {
                self.extend_chains(w, interior, max_dim, chain, faces);
            }
        }
        chain.pop();
    }

    /// The order dual. Labels are dropped.
    pub fn dual(&self) -> FiniteLattice {
        let down: Vec<BitSet> = (0..self.size()).map(|x| self.up_set(x).clone()).collect();
        FiniteLattice::from_down_sets(down).expect("dual of a lattice is a lattice")
    }

    /// Componentwise product; element `(i, j)` has index `i * other.size() + j`.
    /// When both factors carry labels the product is labeled in the
    /// concatenated variable set.
    pub fn product(&self, other: &FiniteLattice) -> Result<FiniteLattice> {
        let (n1, n2) = (self.size(), other.size());
        let n = n1 * n2;
        if n > super::MAX_ELEMENTS {
            return Err(Error::TooLarge(n, super::MAX_ELEMENTS));
        }
        let mut down = vec![BitSet::new(n); n];
        for i in 0..n1 {
            for j in 0..n2 {
                let row = &mut down[i * n2 + j];
                for a in self.down_set(i).iter() {
                    for b in other.down_set(j).iter() {
                        row.insert(a * n2 + b);
                    }
                }
            }
        }
        let mut l = FiniteLattice::from_down_sets(down)?;
        if let (Some(l1), Some(l2)) = (self.labels(), other.labels()) {
            let v1 = l1[0].nvars();
            let v2 = l2[0].nvars();
            let labels: Vec<Monomial> = (0..n)
                .map(|k| {
                    let a = l1[k / n2].embed(0, v1 + v2);
                    let b = l2[k % n2].embed(v1, v1 + v2);
                    a.product(&b)
                })
                .collect();
            l.set_labels_unchecked(labels);
        }
        Ok(l)
    }

    /// Width of the subposet of meet-irreducible elements (largest antichain),
    /// via Dilworth's theorem and bipartite matching on the strict order.
    pub fn mi_width(&self) -> usize {
        let mi = self.meet_irreducibles();
        let k = mi.len();
        let adj: Vec<Vec<usize>> = (0..k)
            .map(|i| (0..k).filter(|&j| self.lt(mi[i], mi[j])).collect())
            .collect();
        let mut matched_to: Vec<Option<usize>> = vec![None; k];
        let mut matching = 0;
        for i in 0..k {
            let mut visited = vec![false; k];
            if augment(i, &adj, &mut visited, &mut matched_to) {
                matching += 1;
            }
        }
        k - matching
    }
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    visited: &mut [bool],
    matched_to: &mut [Option<usize>],
) -> bool {
    for &v in &adj[u] {
        if visited[v] {
            continue;
        }
        visited[v] = true;
        if matched_to[v].is_none_or(|w| augment(w, adj, visited, matched_to)) {
            matched_to[v] = Some(u);
            return true;
        }
    }
    false
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

    fn brute_width(l: &FiniteLattice) -> usize {
        let mi = l.meet_irreducibles();
        let k = mi.len();
        (0u32..1 << k)
            .filter(|&s| {
                (0..k).all(|i| {
                    (0..k).all(|j| {
                        s >> i & 1 == 0 || s >> j & 1 == 0 || i == j || !l.leq(mi[i], mi[j])
                    })
                })
            })
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn mobius_values() {
        let l = b2();
        assert_eq!(l.mobius(1, 1).unwrap(), 1);
        assert_eq!(l.mobius(0, 1).unwrap(), -1);
        assert_eq!(l.mobius(0, 3).unwrap(), 1);
        assert_eq!(m3().mobius(0, 4).unwrap(), 2);
        assert!(matches!(l.mobius(1, 2), Err(Error::NotComparable(1, 2))));
    }

    #[test]
    fn mobius_sums_vanish_on_proper_intervals() {
        let l = m3().product(&b2()).unwrap();
        for x in 0..l.size() {
            for y in 0..l.size() {
                if l.lt(x, y) {
                    let s: i64 = (0..l.size())
                        .filter(|&z| l.leq(x, z) && l.leq(z, y))
                        .map(|z| l.mobius(x, z).unwrap())
                        .sum();
                    assert_eq!(s, 0, "interval [{x}, {y}]");
                }
            }
        }
    }

    #[test]
    fn order_complexes_of_small_intervals() {
        let l = b2();
        let atom = l.open_interval_order_complex(0, 1).unwrap();
        assert_eq!(atom.face_counts(), vec![1]);
        let full = l.open_interval_order_complex(0, 3).unwrap();
        assert_eq!(full.face_counts(), vec![1, 2]);
        assert!(l.open_interval_order_complex(1, 2).is_err());
        assert!(l.open_interval_order_complex(1, 1).is_err());
    }

    #[test]
    fn skeleton_truncates() {
        let chain = FiniteLattice::from_covers(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let full = chain.open_interval_order_complex(0, 4).unwrap();
        assert_eq!(full.face_counts(), vec![1, 3, 3, 1]);
        let skel = chain.open_interval_order_complex_skeleton(0, 4, 1).unwrap();
        assert_eq!(skel.face_counts(), vec![1, 3, 3]);
    }

    #[test]
    fn dual_and_product() {
        let l = m3();
        let dd = l.dual().dual();
        assert!(dd.is_isomorphic(&l));
        let b4 = b2().product(&b2()).unwrap();
        assert_eq!(b4.size(), 16);
        assert_eq!(b4.atoms().len(), 4);
        assert!(b4.is_boolean().holds);
        let point = FiniteLattice::from_covers(1, &[]).unwrap();
        assert!(l.product(&point).unwrap().is_isomorphic(&l));
    }

    #[test]
    fn widths() {
        assert_eq!(b2().mi_width(), 2);
        assert_eq!(m3().mi_width(), 3);
        let l = m3().product(&b2()).unwrap();
        assert_eq!(l.mi_width(), brute_width(&l));
    }
}
