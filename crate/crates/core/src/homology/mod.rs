//! Simplicial complexes and reduced homology ranks over exact fields.

mod sparse;

pub use sparse::SparseMatrix;

use serde::{Deserialize, Serialize};

use crate::scalar::{FieldSpec, Scalar};
use crate::with_field;

/// Above this many columns in any boundary matrix the rational
/// cross-check is skipped.
pub const CHAR0_CONFIRMATION_LIMIT: usize = 5000;

/// A finite abstract simplicial complex. Faces are sorted vertex lists;
/// `faces_by_dim[d + 1]` holds the `d`-dimensional faces, so index 0 is the
/// empty face, which is always present.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialComplexData {
    pub vertices: Vec<usize>,
    pub faces_by_dim: Vec<Vec<Vec<usize>>>,
}

impl SimplicialComplexData {
    /// The complex whose only face is the empty face.
    pub fn void() -> Self {
        SimplicialComplexData {
            vertices: Vec::new(),
            faces_by_dim: vec![vec![Vec::new()]],
        }
    }

    /// Closes a list of faces under taking subsets.
    pub fn from_faces<I, F>(faces: I) -> Self
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = usize>,
    {
        let mut all = std::collections::BTreeSet::new();
        all.insert(Vec::new());
        for face in faces {
            let mut f: Vec<usize> = face.into_iter().collect();
            f.sort_unstable();
            f.dedup();
            let k = f.len();
            assert!(k < 32, "face too large to close under subsets");
            for mask in 1u32..1 << k {
                all.insert((0..k).filter(|&i| mask >> i & 1 == 1).map(|i| f[i]).collect::<Vec<_>>());
            }
        }
        let top = all.iter().map(Vec::len).max().unwrap_or(0);
        let mut faces_by_dim = vec![Vec::new(); top + 1];
        for f in all {
            faces_by_dim[f.len()].push(f);
        }
        let vertices = faces_by_dim.get(1).map_or(Vec::new(), |vs| vs.iter().map(|v| v[0]).collect());
        SimplicialComplexData::from_sorted_parts(vertices, faces_by_dim)
    }

    /// `faces_by_dim[k]` must contain only `k`-element sorted vertex lists,
    /// closed under subsets. The lists themselves are sorted here.
    pub(crate) fn from_sorted_parts(vertices: Vec<usize>, mut faces_by_dim: Vec<Vec<Vec<usize>>>) -> Self {
        for level in &mut faces_by_dim {
            level.sort_unstable();
            level.dedup();
        }
        while faces_by_dim.len() > 1 && faces_by_dim.last().is_some_and(Vec::is_empty) {
            faces_by_dim.pop();
        }
        let mut vertices = vertices;
        vertices.sort_unstable();
        SimplicialComplexData {
            vertices,
            faces_by_dim,
        }
    }

    /// Dimension of the largest face; −1 for the void complex.
    pub fn dim(&self) -> isize {
        self.faces_by_dim.len() as isize - 2
    }

    /// Faces of dimension `d` (`d >= -1`).
    pub fn faces(&self, d: isize) -> &[Vec<usize>] {
        let idx = d + 1;
        if idx < 0 {
            return &[];
        }
        self.faces_by_dim.get(idx as usize).map_or(&[], Vec::as_slice)
    }

    /// Face counts by dimension, starting at −1.
    pub fn face_counts(&self) -> Vec<usize> {
        self.faces_by_dim.iter().map(Vec::len).collect()
    }

    /// Boundary map from `d`-faces to `(d−1)`-faces. Deleting the vertex in
    /// sorted position `k` contributes sign `(−1)^k`; for `d = 0` this is the
    /// augmentation onto the empty face.
    pub fn boundary_matrix(&self, d: isize) -> SparseMatrix {
        let cols = self.faces(d);
        let rows = self.faces(d - 1);
        let mut m = SparseMatrix::zeros(rows.len(), cols.len());
        if d < 0 {
            return m;
        }
        let mut buf = Vec::with_capacity(d as usize + 1);
        for (c, face) in cols.iter().enumerate() {
            for k in 0..face.len() {
                buf.clear();
                buf.extend(face.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &v)| v));
                let r = rows
                    .binary_search(&buf)
                    .expect("complex is closed under subsets");
                m.columns[c].push((r, if k % 2 == 0 { 1 } else { -1 }));
            }
        }
        m
    }

    /// Ranks of H̃_d for d = −1 ..= dim, over `F`.
    pub fn reduced_homology_ranks_over<F: Scalar>(&self) -> Vec<usize> {
        let top = self.dim();
        let boundary_ranks: Vec<usize> = (-1..=top + 1)
            .map(|d| self.boundary_matrix(d).rank::<F>())
            .collect();
        (-1..=top)
            .map(|d| {
                let i = (d + 1) as usize;
                self.faces(d).len() - boundary_ranks[i] - boundary_ranks[i + 1]
            })
            .collect()
    }

    /// Ranks of H̃_d for d = −1 ..= dim over the chosen field; entry `k` is
    /// dimension `k − 1`.
    pub fn reduced_homology_ranks(&self, field: FieldSpec) -> Vec<usize> {
        with_field!(field, F => self.reduced_homology_ranks_over::<F>())
    }

    /// Rank of the single group H̃_d. Only `∂_d` and `∂_{d+1}` are reduced,
    /// so a `(d+1)`-skeleton is enough.
    pub fn reduced_homology_rank(&self, d: isize, field: FieldSpec) -> usize {
        if d < -1 || d > self.dim() {
            return 0;
        }
        with_field!(field, F => {
            self.faces(d).len()
                - self.boundary_matrix(d).rank::<F>()
                - self.boundary_matrix(d + 1).rank::<F>()
        })
    }

    /// Σ (−1)^d · #faces_d, including the empty face.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.faces_by_dim
            .iter()
            .enumerate()
            .map(|(k, fs)| if k % 2 == 1 { fs.len() as i64 } else { -(fs.len() as i64) })
            .sum()
    }

    pub fn max_boundary_columns(&self) -> usize {
        self.faces_by_dim.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Ranks over `field`, re-checked over the rationals when the complex is
    /// small enough. A disagreement is logged and reported, never hidden.
    pub fn reduced_homology_checked(&self, field: FieldSpec) -> CheckedRanks {
        let ranks = self.reduced_homology_ranks(field);
        let char0_agrees = if field != FieldSpec::RATIONALS
            && self.max_boundary_columns() < CHAR0_CONFIRMATION_LIMIT
        {
            let exact = self.reduced_homology_ranks(FieldSpec::RATIONALS);
            if exact != ranks {
                log::warn!(
                    "homology ranks over {field} {ranks:?} differ from rational ranks {exact:?}"
                );
            }
            Some(exact == ranks)
        } else {
            None
        };
        CheckedRanks {
            ranks,
            field,
            char0_agrees,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckedRanks {
    pub ranks: Vec<usize>,
    pub field: FieldSpec,
    /// `None` when the rational check was skipped.
    pub char0_agrees: Option<bool>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Fp, Rational};
    use proptest::prelude::*;

    fn hollow_triangle() -> SimplicialComplexData {
        SimplicialComplexData::from_faces([[0, 1], [1, 2], [0, 2]])
    }

    #[test]
    fn augmentation_of_a_point() {
        let k = SimplicialComplexData::from_faces([[7]]);
        let m = k.boundary_matrix(0);
        assert_eq!(m.to_dense(), vec![vec![1]]);
        assert_eq!(k.reduced_homology_ranks(FieldSpec::RATIONALS), vec![0, 0]);
    }

    #[test]
    fn edge_boundary_signs() {
        let k = SimplicialComplexData::from_faces([[3, 5]]);
        assert_eq!(k.boundary_matrix(1).to_dense(), vec![vec![-1], vec![1]]);
    }

    #[test]
    fn hollow_triangle_boundary_has_rank_two() {
        let k = hollow_triangle();
        let d1 = k.boundary_matrix(1);
        assert_eq!((d1.nrows, d1.ncols), (3, 3));
        assert_eq!(d1.rank::<Rational>(), 2);
        assert_eq!(k.reduced_homology_ranks(FieldSpec::GF2), vec![0, 0, 1]);
    }

    #[test]
    fn void_complex_has_homology_in_degree_minus_one() {
        let k = SimplicialComplexData::void();
        assert_eq!(k.dim(), -1);
        assert_eq!(k.reduced_homology_ranks(FieldSpec::RATIONALS), vec![1]);
        assert_eq!(k.reduced_homology_rank(-1, FieldSpec::GF2), 1);
    }

    #[test]
    fn two_points_have_one_reduced_component() {
        let k = SimplicialComplexData::from_faces([[0], [1]]);
        assert_eq!(k.reduced_homology_ranks(FieldSpec::GF32003), vec![0, 1]);
    }

    #[test]
    fn projective_plane_sees_characteristic_two() {
        // Six-vertex triangulation of RP^2.
        let facets = [
            [0, 1, 3], [0, 1, 5], [0, 2, 4], [0, 2, 5], [0, 3, 4],
            [1, 2, 3], [1, 2, 4], [1, 4, 5], [2, 3, 5], [3, 4, 5],
        ];
        let k = SimplicialComplexData::from_faces(facets);
        assert_eq!(k.face_counts(), vec![1, 6, 15, 10]);
        assert_eq!(k.reduced_homology_ranks_over::<Rational>(), vec![0, 0, 0, 0]);
        assert_eq!(k.reduced_homology_ranks_over::<Fp<2>>(), vec![0, 0, 1, 1]);
        let checked = k.reduced_homology_checked(FieldSpec::GF2);
        assert_eq!(checked.char0_agrees, Some(false));
    }

    fn arb_complex() -> impl Strategy<Value = SimplicialComplexData> {
        prop::collection::vec(prop::collection::btree_set(0usize..7, 1..5), 1..8)
            .prop_map(SimplicialComplexData::from_faces)
    }

    proptest! {
        #[test]
        fn boundary_squares_to_zero(k in arb_complex()) {
            for d in 0..=k.dim() {
                let prod = k.boundary_matrix(d).mul(&k.boundary_matrix(d + 1));
                prop_assert_eq!(prod.nnz(), 0);
            }
        }

        #[test]
        fn euler_characteristic_matches_homology(k in arb_complex()) {
            for field in [FieldSpec::RATIONALS, FieldSpec::GF2, FieldSpec::GF32003] {
                let ranks = k.reduced_homology_ranks(field);
                let chi: i64 = ranks
                    .iter()
                    .enumerate()
                    .map(|(i, &r)| if i % 2 == 1 { r as i64 } else { -(r as i64) })
                    .sum();
                prop_assert_eq!(chi, k.reduced_euler_characteristic());
            }
        }

        #[test]
        fn single_group_matches_full_vector(k in arb_complex()) {
            let all = k.reduced_homology_ranks(FieldSpec::GF32003);
            for d in -1..=k.dim() {
                prop_assert_eq!(k.reduced_homology_rank(d, FieldSpec::GF32003), all[(d + 1) as usize]);
            }
        }
    }
}
