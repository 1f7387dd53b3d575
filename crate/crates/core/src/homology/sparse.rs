use crate::scalar::Scalar;

/// Sparse integer matrix stored by columns; each column is a list of
/// `(row, value)` pairs with distinct rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub nrows: usize,
    pub ncols: usize,
    pub columns: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            nrows,
            ncols,
            columns: vec![Vec::new(); ncols],
        }
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.columns[col]
            .iter()
            .find(|&&(r, _)| r == row)
            .map_or(0, |&(_, v)| v)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.ncols]; self.nrows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                out[r][c] = v;
            }
        }
        out
    }

    /// Product `self * rhs` over the integers.
    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, rhs.nrows);
        let mut out = SparseMatrix::zeros(self.nrows, rhs.ncols);
        for (c, col) in rhs.columns.iter().enumerate() {
            let mut acc = vec![0i64; self.nrows];
            for &(k, v) in col {
                for &(r, w) in &self.columns[k] {
                    acc[r] += v * w;
                }
            }
            out.columns[c] = acc
                .into_iter()
                .enumerate()
                .filter(|&(_, v)| v != 0)
                .collect();
        }
        out
    }

    /// Rank over the field `F`.
    ///
    /// Column reduction against a pivot table. Rows are keyed by ascending
    /// occurrence count and columns processed sparsest first (a static
    /// Markowitz ordering), which keeps fill-in low on boundary matrices.
    pub fn rank<F: Scalar>(&self) -> usize {
        if self.nrows == 0 || self.ncols == 0 {
            return 0;
        }
        let mut row_count = vec![0usize; self.nrows];
        for col in &self.columns {
            for &(r, _) in col {
                row_count[r] += 1;
            }
        }
        let mut rows_by_count: Vec<usize> = (0..self.nrows).collect();
        rows_by_count.sort_by_key(|&r| (row_count[r], r));
        let mut key_of_row = vec![0u32; self.nrows];
        for (k, &r) in rows_by_count.iter().enumerate() {
            key_of_row[r] = k as u32;
        }
        let mut col_order: Vec<usize> = (0..self.ncols).collect();
        col_order.sort_by_key(|&c| (self.columns[c].len(), c));

        let mut pivots: Vec<Option<Vec<(u32, F)>>> = vec![None; self.nrows];
        let mut rank = 0;
        for c in col_order {
            let mut col: Vec<(u32, F)> = self.columns[c]
                .iter()
                .map(|&(r, v)| (key_of_row[r], F::from_i64(v)))
                .filter(|(_, v)| !v.is_zero())
                .collect();
            col.sort_by_key(|&(k, _)| k);
            while let Some((key, lead)) = col.first().cloned() {
                match &pivots[key as usize] {
                    Some(p) => {
                        let factor = lead / p[0].1.clone();
                        col = axpy(&col, &factor, p);
                    }
                    None => {
                        pivots[key as usize] = Some(col);
                        rank += 1;
                        break;
                    }
                }
            }
        }
        rank
    }
}

/// `a - factor * b` for key-sorted sparse vectors.
fn axpy<F: Scalar>(a: &[(u32, F)], factor: &F, b: &[(u32, F)]) -> Vec<(u32, F)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ka = a.get(i).map_or(u32::MAX, |e| e.0);
        let kb = b.get(j).map_or(u32::MAX, |e| e.0);
        if ka < kb {
            out.push(a[i].clone());
            i += 1;
        } else if kb < ka {
            out.push((kb, -(factor.clone() * b[j].1.clone())));
            j += 1;
        } else {
            let v = a[i].1.clone() - factor.clone() * b[j].1.clone();
            if !v.is_zero() {
                out.push((ka, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Fp, Rational};

    fn from_dense(rows: &[&[i64]]) -> SparseMatrix {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut m = SparseMatrix::zeros(nrows, ncols);
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    m.columns[c].push((r, v));
                }
            }
        }
        m
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // det = 2: full rank over Q and F_3, rank 1 over F_2.
        let m = from_dense(&[&[1, 1], &[1, -1]]);
        assert_eq!(m.rank::<Rational>(), 2);
        assert_eq!(m.rank::<Fp<3>>(), 2);
        assert_eq!(m.rank::<Fp<2>>(), 1);
    }

    #[test]
    fn rank_of_zero_and_empty() {
        assert_eq!(SparseMatrix::zeros(3, 0).rank::<Rational>(), 0);
        assert_eq!(SparseMatrix::zeros(3, 4).rank::<Fp<2>>(), 0);
    }

    #[test]
    fn dependent_columns() {
        let m = from_dense(&[&[1, 2, 3], &[4, 5, 9], &[7, 8, 15]]);
        assert_eq!(m.rank::<Rational>(), 2);
        assert_eq!(m.rank::<Fp<32003>>(), 2);
    }
}
