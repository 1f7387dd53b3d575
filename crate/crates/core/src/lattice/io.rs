use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{parse_factors, Monomial};

use super::FiniteLattice;

/// Wire form: `{"n": N, "covers": [[i, j], ...], "labels": ["x1*x2", ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub n: usize,
    pub covers: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl LatticeJson {
    pub fn into_lattice(self) -> Result<FiniteLattice> {
        let covers: Vec<(usize, usize)> = self.covers.iter().map(|c| (c[0], c[1])).collect();
        let lattice = FiniteLattice::from_covers(self.n, &covers)?;
        match self.labels {
            None => Ok(lattice),
            Some(text) => {
                let parsed = text
                    .iter()
                    .enumerate()
                    .map(|(i, t)| {
                        parse_factors(t).map_err(|message| Error::Parse { line: i + 1, message })
                    })
                    .collect::<Result<Vec<_>>>()?;
                let nvars = parsed
                    .iter()
                    .flatten()
                    .map(|&(v, _)| v + 1)
                    .max()
                    .unwrap_or(0);
                let labels = parsed
                    .into_iter()
                    .map(|factors| {
                        let mut e = vec![0; nvars];
                        for (v, k) in factors {
                            e[v] += k;
                        }
                        Monomial::new(e)
                    })
                    .collect();
                lattice.with_labels(labels)
            }
        }
    }
}

impl FiniteLattice {
    pub fn to_json(&self) -> LatticeJson {
        LatticeJson {
            n: self.size(),
            covers: self.covers().into_iter().map(|(a, b)| [a, b]).collect(),
            labels: self
                .labels()
                .map(|ls| ls.iter().map(|m| m.to_string()).collect()),
        }
    }

    pub fn from_json_str(text: &str) -> Result<FiniteLattice> {
        serde_json::from_str::<LatticeJson>(text)?.into_lattice()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_keeps_labels() {
        let text = r#"{"n": 4, "covers": [[0,1],[0,2],[1,3],[2,3]], "labels": ["1","x1","x2","x1*x2"]}"#;
        let l = FiniteLattice::from_json_str(text).unwrap();
        assert_eq!(l.label(3).unwrap().to_string(), "x1*x2");
        let back = serde_json::to_string(&l.to_json()).unwrap();
        let again = FiniteLattice::from_json_str(&back).unwrap();
        assert_eq!(again.covers(), l.covers());
        assert_eq!(again.labels(), l.labels());
    }

    #[test]
    fn unlabeled_json_omits_labels() {
        let l = FiniteLattice::from_covers(2, &[(0, 1)]).unwrap();
        assert_eq!(
            serde_json::to_string(&l.to_json()).unwrap(),
            r#"{"n":2,"covers":[[0,1]]}"#
        );
    }
}
