//! The Taylor complex, used as an oracle for the lattice formula and for
//! deciding when it is already minimal.
//!
//! Nothing here touches order complexes: the multidegree-`m` strand of the
//! Taylor complex tensored with the field is built directly from generator
//! subsets and its homology is taken with a small dense elimination.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::scalar::{FieldSpec, Scalar};
use crate::with_field;

/// Largest generator count the subset-based routines accept.
pub const TAYLOR_MAX_GENERATORS: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TaylorReport {
    pub is_minimal: bool,
    /// A subset `σ` (generator indices) and a member whose omission keeps
    /// the lcm, so the corresponding differential entry is a unit.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<(Vec<usize>, usize)>,
}

/// Minimality of the Taylor resolution: every generator must carry a
/// variable power strictly larger than in all other generators.
///
/// A generator without one is absorbed by the lcm of the others, so the
/// witness is the full generator set together with that generator.
pub fn taylor_is_minimal(ideal: &MonomialIdeal) -> TaylorReport {
    let gens = ideal.generators();
    for (i, g) in gens.iter().enumerate() {
        let dominant = (0..ideal.nvars()).any(|v| {
            let e = g.exponent(v);
            e > 0
                && gens
                    .iter()
                    .enumerate()
                    .all(|(k, h)| k == i || h.exponent(v) < e)
        });
        if !dominant {
            return TaylorReport {
                is_minimal: false,
                witness: Some(((0..gens.len()).collect(), i)),
            };
        }
    }
    TaylorReport {
        is_minimal: true,
        witness: None,
    }
}

/// The definition checked literally: no subset `σ` and `p ∈ σ` with
/// `lcm(σ \ p) = lcm(σ)`. Exponential in the number of generators.
pub fn taylor_is_minimal_by_subsets(ideal: &MonomialIdeal) -> Result<TaylorReport> {
    let q = ideal.num_generators();
    check_size(q)?;
    let lcms = subset_lcms(ideal);
    for sigma in 1usize..1 << q {
        for p in 0..q {
            if sigma >> p & 1 == 1 && lcms[sigma & !(1 << p)] == lcms[sigma] {
                return Ok(TaylorReport {
                    is_minimal: false,
                    witness: Some((bits(sigma), p)),
                });
            }
        }
    }
    Ok(TaylorReport {
        is_minimal: true,
        witness: None,
    })
}

/// Multigraded Betti numbers of `S/I` from the Taylor complex: for each
/// multidegree `m`, the homology of the complex spanned by subsets with lcm
/// exactly `m`. Zero entries are omitted.
pub fn taylor_betti_numbers(
    ideal: &MonomialIdeal,
    field: FieldSpec,
) -> Result<BTreeMap<(usize, Monomial), usize>> {
    let q = ideal.num_generators();
    check_size(q)?;
    let lcms = subset_lcms(ideal);
    let mut strands: HashMap<&Monomial, Vec<usize>> = HashMap::new();
    for (sigma, m) in lcms.iter().enumerate() {
        strands.entry(m).or_default().push(sigma);
    }
    let mut out = BTreeMap::new();
    for (m, subsets) in strands {
        let ranks = with_field!(field, F => strand_homology::<F>(&lcms, m, &subsets, q));
        for (i, r) in ranks.into_iter().enumerate() {
            if r > 0 {
                out.insert((i, m.clone()), r);
            }
        }
    }
    Ok(out)
}

fn check_size(q: usize) -> Result<()> {
    if q > TAYLOR_MAX_GENERATORS {
        Err(Error::ResourceLimit(format!(
            "{q} generators; the Taylor complex is limited to {TAYLOR_MAX_GENERATORS}"
        )))
    } else {
        Ok(())
    }
}

fn bits(sigma: usize) -> Vec<usize> {
    (0..usize::BITS as usize).filter(|&k| sigma >> k & 1 == 1).collect()
}

fn subset_lcms(ideal: &MonomialIdeal) -> Vec<Monomial> {
    let gens = ideal.generators();
    let q = gens.len();
    let mut lcms = vec![Monomial::one(ideal.nvars()); 1 << q];
    for sigma in 1usize..1 << q {
        let low = sigma.trailing_zeros() as usize;
        lcms[sigma] = lcms[sigma & (sigma - 1)].lcm(&gens[low]);
    }
    lcms
}

/// Homology ranks `H_0, H_1, ...` of one strand.
fn strand_homology<F: Scalar>(
    lcms: &[Monomial],
    m: &Monomial,
    subsets: &[usize],
    q: usize,
) -> Vec<usize> {
    let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); q + 1];
    for &s in subsets {
        by_size[s.count_ones() as usize].push(s);
    }
    // rank of the differential leaving homological degree i
    let mut diff_rank = vec![0usize; q + 2];
    for i in 1..=q {
        let (cols, rows) = (&by_size[i], &by_size[i - 1]);
        if cols.is_empty() || rows.is_empty() {
            continue;
        }
        let row_of: HashMap<usize, usize> = rows.iter().enumerate().map(|(r, &s)| (s, r)).collect();
        let mut dense = vec![vec![F::zero(); cols.len()]; rows.len()];
        for (c, &sigma) in cols.iter().enumerate() {
            for (pos, p) in bits(sigma).into_iter().enumerate() {
                let face = sigma & !(1 << p);
                if &lcms[face] == m {
                    let sign = if pos % 2 == 0 { 1 } else { -1 };
                    dense[row_of[&face]][c] = F::from_i64(sign);
                }
            }
        }
        diff_rank[i] = dense_rank(dense);
    }
    let mut ranks: Vec<usize> = (0..=q)
        .map(|i| by_size[i].len() - diff_rank[i] - diff_rank[i + 1])
        .collect();
    while ranks.last() == Some(&0) {
        ranks.pop();
    }
    ranks
}

/// Row reduction of a dense matrix.
pub(crate) fn dense_rank<F: Scalar>(mut a: Vec<Vec<F>>) -> usize {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..nrows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = F::one() / a[rank][c].clone();
        for r in rank + 1..nrows {
            if a[r][c].is_zero() {
                continue;
            }
            let f = a[r][c].clone() * inv.clone();
            let (upper, lower) = a.split_at_mut(r);
            for (x, y) in lower[0][c..].iter_mut().zip(&upper[rank][c..]) {
                *x = x.clone() - f.clone() * y.clone();
            }
        }
        rank += 1;
    }
    rank
}
