use std::fmt;

use serde::{Deserialize, Serialize};

/// A monomial in `nvars` variables, stored as its exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exponents: vec![0; nvars] }
    }

    /// The squarefree monomial on the given 0-based variable indices.
    pub fn squarefree(nvars: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        let mut m = Self::one(nvars);
        for v in vars {
            m.exponents[v] = 1;
        }
        m
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exponents[var]
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    /// Variables with a positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        }
    }

    /// Re-indexes variables: variable `i` becomes `perm[i]` in a ring of `nvars` variables.
    pub fn rename(&self, perm: &[usize], nvars: usize) -> Monomial {
        let mut out = vec![0; nvars];
        for (i, &e) in self.exponents.iter().enumerate() {
            if e > 0 {
                out[perm[i]] = e;
            }
        }
        Monomial { exponents: out }
    }

    /// Embeds into a larger ring, placing this monomial's variables starting at `offset`.
    pub fn embed(&self, offset: usize, nvars: usize) -> Monomial {
        let mut out = vec![0; nvars];
        out[offset..offset + self.nvars()].copy_from_slice(&self.exponents);
        Monomial { exponents: out }
    }

    pub fn product(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }
}

/// Renders as `x1^2*x3` with 1-based variable names; the unit prints as `1`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Parses one monomial in the `x<i>^<e>*...` syntax into `(variable, exponent)`
/// pairs with 0-based variables. `1` parses as the empty product.
pub(crate) fn parse_factors(text: &str) -> Result<Vec<(usize, u32)>, String> {
    let text = text.trim();
    if text == "1" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for factor in text.split('*') {
        let factor = factor.trim();
        let (var, exp) = match factor.split_once('^') {
            Some((v, e)) => (
                v.trim(),
                e.trim()
                    .parse::<u32>()
                    .map_err(|_| format!("bad exponent in `{factor}`"))?,
            ),
            None => (factor, 1),
        };
        let index = var
            .strip_prefix('x')
            .ok_or_else(|| format!("expected a variable like x3, found `{factor}`"))?
            .parse::<usize>()
            .map_err(|_| format!("bad variable index in `{factor}`"))?;
        if index == 0 {
            return Err(format!("variables are numbered from x1, found `{factor}`"));
        }
        out.push((index - 1, exp));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lcm_gcd_divides() {
        let a = Monomial::new(vec![2, 0, 1]);
        let b = Monomial::new(vec![1, 3, 0]);
        assert_eq!(a.lcm(&b).exponents(), &[2, 3, 1]);
        assert_eq!(a.gcd(&b).exponents(), &[1, 0, 0]);
        assert!(a.gcd(&b).divides(&a));
        assert!(!a.divides(&b));
        assert_eq!(a.lcm(&b).degree(), 6);
    }

    #[test]
    fn display_and_parse() {
        let m = Monomial::new(vec![2, 0, 1]);
        assert_eq!(m.to_string(), "x1^2*x3");
        assert_eq!(parse_factors("x1^2*x3").unwrap(), vec![(0, 2), (2, 1)]);
        assert_eq!(Monomial::one(3).to_string(), "1");
        assert!(parse_factors("y1").is_err());
        assert!(parse_factors("x0").is_err());
        assert!(parse_factors("x1^a").is_err());
    }
}
