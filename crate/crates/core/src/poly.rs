//! Bivariate generating polynomials in q and t with nonnegative integer
//! coefficients; univariate polynomials in q are the t-degree-0 case.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Zero coefficients are never stored; terms print in decreasing
/// lexicographic order of (q-degree, t-degree).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QTPolynomial {
    coeffs: BTreeMap<(u64, u64), u64>,
}

impl QTPolynomial {
    pub fn zero() -> Self {
        QTPolynomial::default()
    }

    pub fn add_term(&mut self, q_deg: u64, t_deg: u64, coeff: u64) {
        if coeff == 0 {
            return;
        }
        *self.coeffs.entry((q_deg, t_deg)).or_insert(0) += coeff;
    }

    pub fn coeff(&self, q_deg: u64, t_deg: u64) -> u64 {
        self.coeffs.get(&(q_deg, t_deg)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u64, u64), u64)> + '_ {
        self.coeffs.iter().map(|(&k, &v)| (k, v))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Sum of all coefficients.
    pub fn total_mass(&self) -> u128 {
        self.coeffs.values().map(|&v| v as u128).sum()
    }

    /// The polynomial with q and t exchanged.
    pub fn swap_qt(&self) -> QTPolynomial {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&(q, t), &c)| ((t, q), c))
            .collect();
        QTPolynomial { coeffs }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.swap_qt()
    }

    /// Largest t-degree of any term.
    pub fn max_t_degree(&self) -> u64 {
        self.coeffs.keys().map(|&(_, t)| t).max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&JsonPoly::from(self)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: JsonPoly = serde_json::from_str(s).map_err(|e| Error::Parse {
            pos: 0,
            msg: e.to_string(),
        })?;
        let mut out = QTPolynomial::zero();
        for (q, t, c) in raw.terms {
            if c == 0 || out.coeff(q, t) != 0 {
                return Err(Error::Parse {
                    pos: 0,
                    msg: "non-canonical term list".into(),
                });
            }
            out.add_term(q, t, c);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonPoly {
    terms: Vec<(u64, u64, u64)>,
}

impl From<&QTPolynomial> for JsonPoly {
    fn from(p: &QTPolynomial) -> Self {
        JsonPoly {
            terms: p.terms().map(|((q, t), c)| (q, t, c)).collect(),
        }
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, var: char, deg: u64) -> fmt::Result {
    match deg {
        0 => Ok(()),
        1 => write!(f, "{var}"),
        _ => write!(f, "{var}^{deg}"),
    }
}

impl fmt::Display for QTPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (idx, (&(q, t), &c)) in self.coeffs.iter().rev().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            if c != 1 || (q == 0 && t == 0) {
                write!(f, "{c}")?;
            }
            write_power(f, 'q', q)?;
            write_power(f, 't', t)?;
        }
        Ok(())
    }
}

impl fmt::Debug for QTPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QTPolynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_ordering() {
        let mut p = QTPolynomial::zero();
        p.add_term(1, 0, 1);
        p.add_term(0, 1, 1);
        assert_eq!(p.to_string(), "q + t");
        p.add_term(2, 3, 4);
        assert_eq!(p.to_string(), "4q^2t^3 + q + t");
        p.add_term(0, 0, 1);
        assert_eq!(p.to_string(), "4q^2t^3 + q + t + 1");
        assert_eq!(QTPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn symmetry() {
        let mut p = QTPolynomial::zero();
        p.add_term(1, 0, 1);
        p.add_term(0, 1, 1);
        assert!(p.is_symmetric());
        p.add_term(2, 0, 1);
        assert!(!p.is_symmetric());
        assert_eq!(p.total_mass(), 3);
    }

    #[test]
    fn json_round_trip() {
        let mut p = QTPolynomial::zero();
        p.add_term(3, 0, 1);
        p.add_term(1, 1, 2);
        let json = p.to_json();
        assert_eq!(json, r#"{"terms":[[1,1,2],[3,0,1]]}"#);
        assert_eq!(QTPolynomial::from_json(&json).unwrap(), p);
    }
}
