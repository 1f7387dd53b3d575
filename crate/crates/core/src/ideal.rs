//! Monomial ideals, their LCM lattices and Phan's minimal ideals.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{BitSet, FiniteLattice};
use crate::monomial::{parse_factors, Monomial};

/// A monomial ideal given by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

/// `{"nvars": n, "gens": [[e1, ..., en], ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub nvars: usize,
    pub gens: Vec<Vec<u32>>,
}

impl MonomialIdeal {
    /// Keeps the divisibility-minimal monomials, in first-seen order.
    pub fn minimalize(nvars: usize, monomials: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut input: Vec<Monomial> = Vec::new();
        let mut seen = HashSet::new();
        for m in monomials {
            if m.nvars() != nvars {
                return Err(Error::VariableCountMismatch {
                    expected: nvars,
                    found: m.nvars(),
                });
            }
            if m.is_one() {
                return Err(Error::UnitGenerator);
            }
            if seen.insert(m.clone()) {
                input.push(m);
            }
        }
        if input.is_empty() {
            return Err(Error::EmptyGeneratorSet);
        }
        let gens = input
            .iter()
            .filter(|m| !input.iter().any(|d| d != *m && d.divides(m)))
            .cloned()
            .collect();
        Ok(MonomialIdeal { nvars, gens })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    /// μ(I), the number of minimal generators.
    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn lcm_of_generators(&self) -> Monomial {
        self.gens
            .iter()
            .fold(Monomial::one(self.nvars), |acc, g| acc.lcm(g))
    }

    /// Applies a variable renaming `i -> perm[i]` into a ring of `nvars` variables.
    pub fn rename_variables(&self, perm: &[usize], nvars: usize) -> MonomialIdeal {
        MonomialIdeal {
            nvars,
            gens: self.gens.iter().map(|g| g.rename(perm, nvars)).collect(),
        }
    }

    /// The LCM lattice: lcms of all generator subsets ordered by divisibility.
    ///
    /// Index 0 is the unit, indices `1..=μ` are the generators in order and
    /// the remaining elements follow sorted by degree, then exponents.
    pub fn lcm_lattice(&self) -> FiniteLattice {
        let mut seen: HashSet<Monomial> = self.gens.iter().cloned().collect();
        let mut extra: Vec<Monomial> = Vec::new();
        let mut frontier: Vec<Monomial> = self.gens.clone();
        while let Some(m) = frontier.pop() {
            for g in &self.gens {
                let l = m.lcm(g);
                if seen.insert(l.clone()) {
                    extra.push(l.clone());
                    frontier.push(l);
                }
            }
        }
        extra.sort_by(|a, b| (a.degree(), a).cmp(&(b.degree(), b)));
        let mut elements = Vec::with_capacity(1 + self.gens.len() + extra.len());
        elements.push(Monomial::one(self.nvars));
        elements.extend(self.gens.iter().cloned());
        elements.extend(extra);
        lattice_of_monomials(elements).expect("lcm closure of generators is a lattice")
    }

    /// Standard polarization: `x_i^e` becomes `x_{i,1} ⋯ x_{i,e}`, with the
    /// new variables grouped by original variable. Variables that never
    /// appear are dropped.
    pub fn polarize(&self) -> MonomialIdeal {
        let maxdeg: Vec<u32> = (0..self.nvars)
            .map(|v| self.gens.iter().map(|g| g.exponent(v)).max().unwrap_or(0))
            .collect();
        let mut offset = Vec::with_capacity(self.nvars);
        let mut total = 0usize;
        for &d in &maxdeg {
            offset.push(total);
            total += d as usize;
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = vec![0u32; total];
                for v in 0..self.nvars {
                    for k in 0..g.exponent(v) as usize {
                        e[offset[v] + k] = 1;
                    }
                }
                Monomial::new(e)
            })
            .collect();
        MonomialIdeal { nvars: total, gens }
    }

    /// Height of I: the smallest set of variables meeting every generator's
    /// support, found by branch and bound.
    pub fn height(&self) -> usize {
        let supports: Vec<BitSet> = self
            .gens
            .iter()
            .map(|g| {
                let mut s = BitSet::new(self.nvars);
                for v in g.support() {
                    s.insert(v);
                }
                s
            })
            .collect();
        let mut best = self.nvars;
        let mut chosen = BitSet::new(self.nvars);
        hitting_set(&supports, &mut chosen, 0, &mut best);
        best
    }

    /// Squarefree and equal, up to renaming variables, to the Phan ideal of
    /// its own LCM lattice.
    ///
    /// Variable `v` corresponds to the lcm `a_v` of the generators it does not
    /// divide; the ideal is minimal exactly when `v -> a_v` is a bijection
    /// from the used variables onto the meet-irreducibles.
    pub fn is_minimal(&self) -> bool {
        if !self.is_squarefree() {
            return false;
        }
        let lattice = self.lcm_lattice();
        let labels = lattice.labels().expect("lcm lattice is labeled");
        let mi: HashSet<&Monomial> = lattice
            .meet_irreducibles()
            .into_iter()
            .map(|x| &labels[x])
            .collect();
        let mut images = HashSet::new();
        for v in 0..self.nvars {
            if self.gens.iter().all(|g| g.exponent(v) == 0) {
                continue;
            }
            let a = self
                .gens
                .iter()
                .filter(|g| g.exponent(v) == 0)
                .fold(Monomial::one(self.nvars), |acc, g| acc.lcm(g));
            if !mi.contains(&a) || !images.insert(a) {
                return false;
            }
        }
        images.len() == mi.len()
    }

    /// Parses the line format: one monomial per line, `x<i>` or `x<i>^<e>`
    /// factors joined by `*`, `#` starting a comment.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut parsed = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let factors = parse_factors(line).map_err(|message| Error::Parse {
                line: lineno + 1,
                message,
            })?;
            if factors.iter().all(|&(_, e)| e == 0) {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: Error::UnitGenerator.to_string(),
                });
            }
            parsed.push(factors);
        }
        let nvars = parsed
            .iter()
            .flatten()
            .map(|&(v, _)| v + 1)
            .max()
            .ok_or(Error::EmptyGeneratorSet)?;
        let monomials = parsed.into_iter().map(|factors| {
            let mut e = vec![0; nvars];
            for (v, k) in factors {
                e[v] += k;
            }
            Monomial::new(e)
        });
        MonomialIdeal::minimalize(nvars, monomials)
    }

    pub fn to_text(&self) -> String {
        self.gens.iter().map(|g| format!("{g}\n")).collect()
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson {
            nvars: self.nvars,
            gens: self.gens.iter().map(|g| g.exponents().to_vec()).collect(),
        }
    }

    pub fn from_json(json: IdealJson) -> Result<Self> {
        let nvars = json.nvars;
        MonomialIdeal::minimalize(nvars, json.gens.into_iter().map(Monomial::new))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(Monomial::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn hitting_set(sets: &[BitSet], chosen: &mut BitSet, size: usize, best: &mut usize) {
    let unhit: Vec<&BitSet> = sets
        .iter()
        .filter(|s| !s.iter().any(|v| chosen.contains(v)))
        .collect();
    let Some(first) = unhit.iter().min_by_key(|s| s.count()) else {
        *best = (*best).min(size);
        return;
    };
    // Pairwise-disjoint unhit sets each need their own variable.
    let mut packed: Vec<&BitSet> = Vec::new();
    for s in &unhit {
        if packed.iter().all(|p| p.iter().all(|v| !s.contains(v))) {
            packed.push(s);
        }
    }
    if size + packed.len() >= *best {
        return;
    }
    for v in first.iter() {
        chosen.insert(v);
        hitting_set(sets, chosen, size + 1, best);
        chosen.remove(v);
    }
}

/// Lattice ordered by divisibility on a list of monomials that is closed
/// under lcm and contains the unit.
pub(crate) fn lattice_of_monomials(elements: Vec<Monomial>) -> Result<FiniteLattice> {
    let n = elements.len();
    let mut down = vec![BitSet::new(n); n];
    for (x, row) in down.iter_mut().enumerate() {
        for (y, m) in elements.iter().enumerate() {
            if m.divides(&elements[x]) {
                row.insert(y);
            }
        }
    }
    let mut l = FiniteLattice::from_down_sets(down)?;
    l.set_labels_unchecked(elements);
    Ok(l)
}

/// Phan's ideal of a finite atomic lattice: one variable per meet-irreducible
/// (ascending element index) and, for each atom `b` (ascending index), the
/// product of the variables of the meet-irreducibles not above `b`.
pub fn phan_ideal(lattice: &FiniteLattice) -> Result<MonomialIdeal> {
    if lattice.size() == 1 {
        return Err(Error::NotAtomic(lattice.bottom()));
    }
    if let Some(crate::lattice::Witness::Elements(w)) = lattice.is_atomic().witness {
        return Err(Error::NotAtomic(w[0]));
    }
    let mi = lattice.meet_irreducibles();
    let nvars = mi.len();
    let gens = lattice.atoms().into_iter().map(|b| {
        Monomial::squarefree(
            nvars,
            mi.iter()
                .enumerate()
                .filter(|&(_, &a)| !lattice.leq(b, a))
                .map(|(v, _)| v),
        )
    });
    MonomialIdeal::minimalize(nvars, gens)
}
