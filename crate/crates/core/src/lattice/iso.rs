use std::collections::HashMap;

use super::FiniteLattice;

type Invariant = (usize, usize, usize, usize, usize, usize);

impl FiniteLattice {
    fn invariant(&self, x: usize) -> Invariant {
        (
            self.depth(x),
            self.co_depth(x),
            self.down_set(x).count(),
            self.up_set(x).count(),
            self.lower_covers(x).len(),
            self.upper_covers(x).len(),
        )
    }

    fn invariant_profile(&self) -> Vec<Invariant> {
        let mut v: Vec<Invariant> = (0..self.size()).map(|x| self.invariant(x)).collect();
        v.sort_unstable();
        v
    }

    /// An order isomorphism `self -> other`, if one exists.
    ///
    /// Elements are placed in a linear extension; an element with two or
    /// more lower covers is the join of any two of them, so its image is
    /// forced, and only join-irreducibles are branched on.
    pub fn isomorphism_to(&self, other: &FiniteLattice) -> Option<Vec<usize>> {
        if self.size() != other.size() || self.invariant_profile() != other.invariant_profile() {
            return None;
        }
        let mut classes: HashMap<Invariant, Vec<usize>> = HashMap::new();
        for y in 0..other.size() {
            classes.entry(other.invariant(y)).or_default().push(y);
        }
        let order = self.linear_extension().to_vec();
        let mut image = vec![usize::MAX; self.size()];
        let mut used = vec![false; other.size()];
        if self.place(0, &order, other, &classes, &mut image, &mut used) {
            Some(image)
        } else {
            None
        }
    }

    pub fn is_isomorphic(&self, other: &FiniteLattice) -> bool {
        self.isomorphism_to(other).is_some()
    }

    fn place(
        &self,
        k: usize,
        order: &[usize],
        other: &FiniteLattice,
        classes: &HashMap<Invariant, Vec<usize>>,
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&x) = order.get(k) else {
            return true;
        };
        let inv = self.invariant(x);
        let lower = self.lower_covers(x);
        let forced;
        let candidates: &[usize] = if lower.len() >= 2 {
            forced = [other.join(image[lower[0]], image[lower[1]])];
            &forced
        } else {
            match classes.get(&inv) {
                Some(c) => c,
                None => return false,
            }
        };
        for &y in candidates {
            if used[y] || other.invariant(y) != inv || !self.consistent(x, y, k, order, other, image) {
                continue;
            }
            image[x] = y;
            used[y] = true;
            if self.place(k + 1, order, other, classes, image, used) {
                return true;
            }
            used[y] = false;
            image[x] = usize::MAX;
        }
        false
    }

    /// Placed elements precede `x` in the linear extension, so only the
    /// relation `w <= x` needs comparing.
    fn consistent(
        &self,
        x: usize,
        y: usize,
        k: usize,
        order: &[usize],
        other: &FiniteLattice,
        image: &[usize],
    ) -> bool {
        order[..k]
            .iter()
            .all(|&w| self.leq(w, x) == other.leq(image[w], y))
    }
}
