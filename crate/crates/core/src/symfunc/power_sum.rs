use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{format_rational, Rational};

/// A symmetric function `Σ_ρ c_ρ p_ρ` in the power-sum basis. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PowerSumElement {
    terms: BTreeMap<Partition, Rational>,
}

impl PowerSumElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::p(Partition::empty())
    }

    /// The power-sum product `p_ρ`.
    pub fn p(rho: Partition) -> Self {
        Self::term(rho, Rational::one())
    }

    pub fn term(rho: Partition, coeff: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(rho, coeff);
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, Rational)>) -> Self {
        let mut out = Self::zero();
        for (rho, c) in terms {
            out.add_term(rho, c);
        }
        out
    }

    pub fn add_term(&mut self, rho: Partition, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(rho) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, rho: &Partition) -> Rational {
        self.terms.get(rho).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree of all terms; `Some(0)` for zero, `None` if mixed.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(Partition::size);
        match degrees.next() {
            None => Some(0),
            Some(d) => degrees.all(|e| e == d).then_some(d),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (rho, c) in &other.terms {
            out.add_term(rho.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(r, v)| (r.clone(), v * c)))
    }

    /// Ring product: indices concatenate, coefficients multiply.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.union(b), ca * cb);
            }
        }
        out
    }

    /// Multiplies each `p_ρ` coefficient by `f(ρ)`.
    pub fn map_coeffs(&self, mut f: impl FnMut(&Partition, &Rational) -> Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(r, c)| (r.clone(), f(r, c))))
    }

    /// The plethysm `Pl_n`: `p_k ↦ p_{nk}`.
    pub fn plethysm(&self, n: usize) -> Self {
        assert!(n >= 1, "plethysm index must be positive");
        Self::from_terms(self.terms.iter().map(|(r, c)| (r.scaled(n), c.clone())))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.records()).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let records: Vec<PowerSumRecord> =
            serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
        Ok(Self::from_terms(records.into_iter().map(|r| (r.rho, r.coeff))))
    }

    pub fn records(&self) -> Vec<PowerSumRecord> {
        self.terms
            .iter()
            .map(|(rho, coeff)| PowerSumRecord {
                rho: rho.clone(),
                coeff: coeff.clone(),
            })
            .collect()
    }
}

/// One `{rho, coeff}` entry of the JSON form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerSumRecord {
    pub rho: Partition,
    #[serde(with = "crate::rational::serde_text")]
    pub coeff: Rational,
}

impl fmt::Debug for PowerSumElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(r, c)| format!("{}·p[{}]", format_rational(c), r))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn p<const N: usize>(parts: [usize; N]) -> Partition {
        Partition::from(parts)
    }

    #[test]
    fn cancellation_removes_terms() {
        let mut f = PowerSumElement::term(p([2]), frac(1, 2));
        f.add_term(p([2]), frac(-1, 2));
        assert!(f.is_zero());
    }

    #[test]
    fn plethysm_examples() {
        let s2 = PowerSumElement::from_terms([(p([1, 1]), frac(1, 2)), (p([2]), frac(1, 2))]);
        assert_eq!(s2.plethysm(1), s2);
        assert_eq!(PowerSumElement::p(p([1])).plethysm(2), PowerSumElement::p(p([2])));
        assert_eq!(
            s2.plethysm(2),
            PowerSumElement::from_terms([(p([2, 2]), frac(1, 2)), (p([4]), frac(1, 2))])
        );
    }

    #[test]
    fn plethysm_composes() {
        for n in 0..=4 {
            for rho in Partition::all(n) {
                let f = PowerSumElement::p(rho);
                for (a, b) in [(1, 2), (2, 2), (2, 3), (3, 2)] {
                    if n * a * b <= 24 {
                        assert_eq!(f.plethysm(b).plethysm(a), f.plethysm(a * b));
                    }
                }
            }
        }
    }

    #[test]
    fn product_concatenates() {
        let f = PowerSumElement::p(p([2])).add(&PowerSumElement::p(p([1])));
        let g = f.mul(&f);
        assert_eq!(g.coeff(&p([2, 1])), int(2));
        assert_eq!(g.coeff(&p([2, 2])), int(1));
        assert_eq!(g.homogeneous_degree(), None);
    }

    #[test]
    fn json_round_trip() {
        let f = PowerSumElement::from_terms([(p([2, 1]), frac(1, 2)), (p([3]), frac(-2, 3))]);
        let text = f.to_json();
        assert_eq!(
            text,
            r#"[{"rho":"2,1","coeff":"1/2"},{"rho":"3","coeff":"-2/3"}]"#
        );
        assert_eq!(PowerSumElement::from_json(&text).unwrap(), f);
        assert!(PowerSumElement::from_json(r#"[{"rho":"1,2","coeff":"1"}]"#).is_err());
    }
}
