//! Finite bounded lattices.
//!
//! A [`FiniteLattice`] is built from a cover list or a full order relation
//! and validated once; afterwards it is immutable. Meets and joins are
//! tabulated so every binary operation is a table lookup.

mod bitset;
mod io;
mod iso;
mod properties;
mod structure;

pub use bitset::BitSet;
pub use io::LatticeJson;
pub use properties::{Property, PropertyReport, Verdict, Witness};

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// Largest element count accepted by the constructors. Meet and join tables
/// are dense, so memory grows with the square of this.
pub const MAX_ELEMENTS: usize = 4096;

#[derive(Clone, Debug)]
pub struct FiniteLattice {
    n: usize,
    down: Vec<BitSet>,
    up: Vec<BitSet>,
    lower_covers: Vec<Vec<usize>>,
    upper_covers: Vec<Vec<usize>>,
    /// Linear extension: every element appears after everything below it.
    order: Vec<usize>,
    meet: Vec<u32>,
    join: Vec<u32>,
    bottom: usize,
    top: usize,
    longest_from_bottom: Vec<usize>,
    longest_to_top: Vec<usize>,
    labels: Option<Vec<Monomial>>,
}

/// Ranks of a graded lattice; `ranks[bottom] == 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankFunction {
    pub ranks: Vec<usize>,
    pub height: usize,
}

impl FiniteLattice {
    /// Builds a lattice from `(low, high)` pairs. The pairs need not be exact
    /// covers; the order is their reflexive-transitive closure.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Self> {
        check_size(n)?;
        let mut succ = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for &(lo, hi) in covers {
            for index in [lo, hi] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, size: n });
                }
            }
            if lo == hi {
                return Err(Error::CyclicCovers);
            }
            succ[lo].push(hi);
            indegree[hi] += 1;
        }
        // Kahn's algorithm; an incomplete order means a cycle.
        let mut queue: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(x) = queue.pop() {
            topo.push(x);
            for &y in &succ[x] {
                indegree[y] -= 1;
                if indegree[y] == 0 {
                    queue.push(y);
                }
            }
        }
        if topo.len() != n {
            return Err(Error::CyclicCovers);
        }
        let mut pred = vec![Vec::new(); n];
        for (lo, highs) in succ.iter().enumerate() {
            for &hi in highs {
                pred[hi].push(lo);
            }
        }
        let mut down = vec![BitSet::new(n); n];
        for &x in &topo {
            let mut row = BitSet::new(n);
            row.insert(x);
            for &p in &pred[x] {
                row.union_with(&down[p]);
            }
            down[x] = row;
        }
        Self::from_down_sets(down)
    }

    /// Builds a lattice from an arbitrary relation, checking that it is a
    /// partial order first.
    pub fn from_leq_fn(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        check_size(n)?;
        let mut down = vec![BitSet::new(n); n];
        for (x, row) in down.iter_mut().enumerate() {
            for y in 0..n {
                if leq(y, x) {
                    row.insert(y);
                }
            }
        }
        for (x, row) in down.iter().enumerate() {
            if !row.contains(x) {
                return Err(Error::BadParameter(format!("relation is not reflexive at {x}")));
            }
            for y in row.iter() {
                if y != x && down[y].contains(x) {
                    return Err(Error::CyclicCovers);
                }
                if !down[y].is_subset(row) {
                    return Err(Error::BadParameter(format!(
                        "relation is not transitive through {y} <= {x}"
                    )));
                }
            }
        }
        Self::from_down_sets(down)
    }

    /// `down[x]` must be the principal down-set of `x` in a partial order.
    pub(crate) fn from_down_sets(down: Vec<BitSet>) -> Result<Self> {
        let n = down.len();
        check_size(n)?;
        let mut up = vec![BitSet::new(n); n];
        for (x, row) in down.iter().enumerate() {
            for y in row.iter() {
                up[y].insert(x);
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| (down[x].count(), x));

        let bottoms: Vec<usize> = (0..n).filter(|&x| up[x].count() == n).collect();
        let tops: Vec<usize> = (0..n).filter(|&x| down[x].count() == n).collect();
        let bottom = *bottoms.first().ok_or_else(|| {
            let minimal: Vec<usize> = (0..n).filter(|&x| down[x].count() == 1).collect();
            Error::NotBounded(format!("no least element; minimal elements {minimal:?}"))
        })?;
        let top = *tops.first().ok_or_else(|| {
            let maximal: Vec<usize> = (0..n).filter(|&x| up[x].count() == 1).collect();
            Error::NotBounded(format!("no greatest element; maximal elements {maximal:?}"))
        })?;

        let mut lower_covers = vec![Vec::new(); n];
        let mut upper_covers = vec![Vec::new(); n];
        for x in 0..n {
            let mut strict = down[x].clone();
            strict.remove(x);
            for y in strict.iter() {
                let mut between = up[y].clone();
                between.intersect_with(&strict);
                if between.count() == 1 {
                    lower_covers[x].push(y);
                    upper_covers[y].push(x);
                }
            }
        }

        let mut meet = vec![0u32; n * n];
        for &x in &order {
            for y in 0..n {
                let m = if down[y].contains(x) {
                    x
                } else if down[x].contains(y) {
                    y
                } else {
                    greatest(
                        lower_covers[x].iter().map(|&c| meet[c * n + y] as usize),
                        &down,
                    )
                    .ok_or(Error::NotALattice(x, y, "meet"))?
                };
                meet[x * n + y] = m as u32;
            }
        }
        let mut join = vec![0u32; n * n];
        for &x in order.iter().rev() {
            for y in 0..n {
                let j = if up[y].contains(x) {
                    x
                } else if up[x].contains(y) {
                    y
                } else {
                    greatest(
                        upper_covers[x].iter().map(|&c| join[c * n + y] as usize),
                        &up,
                    )
                    .ok_or(Error::NotALattice(x, y, "join"))?
                };
                join[x * n + y] = j as u32;
            }
        }

        let mut longest_from_bottom = vec![0usize; n];
        for &x in &order {
            longest_from_bottom[x] = lower_covers[x]
                .iter()
                .map(|&c| longest_from_bottom[c] + 1)
                .max()
                .unwrap_or(0);
        }
        let mut longest_to_top = vec![0usize; n];
        for &x in order.iter().rev() {
            longest_to_top[x] = upper_covers[x]
                .iter()
                .map(|&c| longest_to_top[c] + 1)
                .max()
                .unwrap_or(0);
        }

        Ok(FiniteLattice {
            n,
            down,
            up,
            lower_covers,
            upper_covers,
            order,
            meet,
            join,
            bottom,
            top,
            longest_from_bottom,
            longest_to_top,
            labels: None,
        })
    }

    /// Attaches monomial labels, checking that divisibility matches the order
    /// and that joins are lcms.
    pub fn with_labels(mut self, labels: Vec<Monomial>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::BadParameter(format!(
                "{} labels for {} elements",
                labels.len(),
                self.n
            )));
        }
        let nvars = labels[0].nvars();
        if let Some(bad) = labels.iter().find(|m| m.nvars() != nvars) {
            return Err(Error::VariableCountMismatch {
                expected: nvars,
                found: bad.nvars(),
            });
        }
        for x in 0..self.n {
            for y in 0..self.n {
                if self.leq(x, y) != labels[x].divides(&labels[y]) {
                    return Err(Error::BadParameter(format!(
                        "labels {} and {} disagree with the order",
                        labels[x], labels[y]
                    )));
                }
                if labels[self.join(x, y)] != labels[x].lcm(&labels[y]) {
                    return Err(Error::BadParameter(format!(
                        "label of {x} v {y} is not lcm({}, {})",
                        labels[x], labels[y]
                    )));
                }
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub(crate) fn set_labels_unchecked(&mut self, labels: Vec<Monomial>) {
        debug_assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn labels(&self) -> Option<&[Monomial]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> Option<&Monomial> {
        self.labels.as_ref().map(|l| &l[x])
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.down[y].contains(x)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.n + y] as usize
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.n + y] as usize
    }

    /// Join of a set of elements; the empty join is the bottom.
    pub fn join_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Meet of a set of elements; the empty meet is the top.
    pub fn meet_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn down_set(&self, x: usize) -> &BitSet {
        &self.down[x]
    }

    pub fn up_set(&self, x: usize) -> &BitSet {
        &self.up[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower_covers[x]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper_covers[x]
    }

    /// All cover pairs `(low, high)`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|x| self.upper_covers[x].iter().map(move |&y| (x, y)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Elements in an order compatible with `<`.
    pub fn linear_extension(&self) -> &[usize] {
        &self.order
    }

    pub fn atoms(&self) -> Vec<usize> {
        let mut v = self.upper_covers[self.bottom].clone();
        v.sort_unstable();
        v
    }

    pub fn coatoms(&self) -> Vec<usize> {
        let mut v = self.lower_covers[self.top].clone();
        v.sort_unstable();
        v
    }

    /// Elements other than the top with exactly one upper cover.
    pub fn meet_irreducibles(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| x != self.top && self.upper_covers[x].len() == 1)
            .collect()
    }

    /// Elements other than the bottom with exactly one lower cover.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| x != self.bottom && self.lower_covers[x].len() == 1)
            .collect()
    }

    /// Length of the longest chain from the bottom to `x`.
    pub fn depth(&self, x: usize) -> usize {
        self.longest_from_bottom[x]
    }

    /// Length of the longest chain from `x` to the top.
    pub fn co_depth(&self, x: usize) -> usize {
        self.longest_to_top[x]
    }

    /// Edge count of the longest bottom-to-top chain.
    pub fn height(&self) -> usize {
        self.longest_from_bottom[self.top]
    }

    /// Graded iff the longest-chain rank increases by exactly one along every
    /// cover; returns the rank function in that case.
    pub fn is_graded(&self) -> (bool, Option<RankFunction>) {
        match self.ungraded_cover() {
            None => (
                true,
                Some(RankFunction {
                    ranks: self.longest_from_bottom.clone(),
                    height: self.height(),
                }),
            ),
            Some(_) => (false, None),
        }
    }

    /// A cover `(x, y)` whose longest-chain ranks differ by more than one.
    pub fn ungraded_cover(&self) -> Option<(usize, usize)> {
        (0..self.n).find_map(|x| {
            self.upper_covers[x]
                .iter()
                .find(|&&y| self.longest_from_bottom[y] != self.longest_from_bottom[x] + 1)
                .map(|&y| (x, y))
        })
    }

    pub fn rank_function(&self) -> Option<RankFunction> {
        self.is_graded().1
    }

    pub fn check_index(&self, x: usize) -> Result<()> {
        if x < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: x,
                size: self.n,
            })
        }
    }
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::NotBounded("empty poset".into()));
    }
    if n > MAX_ELEMENTS {
        return Err(Error::TooLarge(n, MAX_ELEMENTS));
    }
    Ok(())
}

/// The candidate lying above all others in the order given by `down`, if any.
fn greatest(candidates: impl Iterator<Item = usize> + Clone, down: &[BitSet]) -> Option<usize> {
    let best = candidates.clone().max_by_key(|&c| down[c].count())?;
    candidates
        .into_iter()
        .all(|c| down[best].contains(c))
        .then_some(best)
}
