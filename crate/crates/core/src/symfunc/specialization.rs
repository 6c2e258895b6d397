//! Thoma-type specializations `Sp_{α,β,γ}` of the ring of symmetric functions.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::power_sum::PowerSumElement;
use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};

/// A weakly decreasing non-negative parameter sequence, either listed
/// explicitly or given as the geometric spread `x^{(q)}` of a finite list:
/// the decreasing rearrangement of `(1 - q⁻¹) x_i q^{1-j}`, `i, j ≥ 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Sequence {
    Explicit(Vec<Rational>),
    Spread { base: Vec<Rational>, q: Rational },
}

impl Sequence {
    pub fn empty() -> Self {
        Sequence::Explicit(Vec::new())
    }

    pub fn explicit(values: Vec<Rational>) -> Result<Self> {
        check_decreasing(&values)?;
        Ok(Sequence::Explicit(values))
    }

    pub fn spread(base: Vec<Rational>, q: Rational) -> Result<Self> {
        check_decreasing(&base)?;
        if q <= Rational::one() {
            return Err(Error::param("q", format!("{q} must exceed 1")));
        }
        Ok(Sequence::Spread { base, q })
    }

    pub fn is_empty(&self) -> bool {
        match self {
            Sequence::Explicit(v) => v.iter().all(Zero::is_zero),
            Sequence::Spread { base, .. } => base.iter().all(Zero::is_zero),
        }
    }

    /// `Σ_i x_i`.
    pub fn sum(&self) -> Rational {
        match self {
            Sequence::Explicit(v) | Sequence::Spread { base: v, .. } => v.iter().sum(),
        }
    }

    /// `Σ_i x_i^k` for `k ≥ 1`.
    pub fn power_sum(&self, k: usize) -> Rational {
        match self {
            Sequence::Explicit(v) => v.iter().map(|x| num_traits::pow(x.clone(), k)).sum(),
            Sequence::Spread { base, q } => {
                let inv = q.recip();
                let one = Rational::one();
                let scale = num_traits::pow(&one - &inv, k) / (&one - num_traits::pow(inv, k));
                let s: Rational = base.iter().map(|x| num_traits::pow(x.clone(), k)).sum();
                scale * s
            }
        }
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[Rational]| {
            v.iter().map(format_rational).collect::<Vec<_>>().join(",")
        };
        match self {
            Sequence::Explicit(v) => write!(f, "({})", list(v)),
            Sequence::Spread { base, q } => {
                write!(f, "({})^({})", list(base), format_rational(q))
            }
        }
    }
}

fn check_decreasing(values: &[Rational]) -> Result<()> {
    if values.iter().any(Signed::is_negative) {
        return Err(Error::InvalidSpecialization(
            "parameters must be non-negative".into(),
        ));
    }
    if values.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidSpecialization(
            "parameters must be weakly decreasing".into(),
        ));
    }
    Ok(())
}

/// Values of `p_k` for `k ≥ 2`.
pub type PowerFn = Arc<dyn Fn(usize) -> Rational + Send + Sync>;

/// An algebra homomorphism `Λ → Q` given by its values on `p_1, p_2, …`.
#[derive(Clone)]
pub enum Specialization {
    Finite {
        alphas: Vec<Rational>,
        betas: Vec<Rational>,
        gamma: Rational,
    },
    PowerValues { p1: Rational, higher: PowerFn },
}

impl Specialization {
    /// Finite Thoma parameters, checked against `Σ(α_i + β_i) ≤ γ`.
    pub fn finite(alphas: Vec<Rational>, betas: Vec<Rational>, gamma: Rational) -> Result<Self> {
        check_decreasing(&alphas)?;
        check_decreasing(&betas)?;
        let total: Rational = alphas.iter().chain(&betas).sum();
        if total > gamma {
            return Err(Error::InvalidSpecialization(format!(
                "Σα + Σβ = {} exceeds γ = {}",
                format_rational(&total),
                format_rational(&gamma)
            )));
        }
        Ok(Specialization::Finite {
            alphas,
            betas,
            gamma,
        })
    }

    /// `Sp_{α,β,γ}` for possibly infinite (spread) sequences.
    pub fn thoma(alpha: Sequence, beta: Sequence, gamma: Rational) -> Result<Self> {
        match (&alpha, &beta) {
            (Sequence::Explicit(a), Sequence::Explicit(b)) => {
                Specialization::finite(a.clone(), b.clone(), gamma)
            }
            _ => {
                let total = alpha.sum() + beta.sum();
                if total > gamma {
                    return Err(Error::InvalidSpecialization(format!(
                        "Σα + Σβ = {} exceeds γ = {}",
                        format_rational(&total),
                        format_rational(&gamma)
                    )));
                }
                Ok(Specialization::PowerValues {
                    p1: gamma,
                    higher: Arc::new(move |k| {
                        let b = beta.power_sum(k);
                        let b = if k % 2 == 0 { -b } else { b };
                        alpha.power_sum(k) + b
                    }),
                })
            }
        }
    }

    /// `Sp_{α,∅,1}` with `α = (1)`: evaluation at a single variable 1.
    pub fn trivial() -> Self {
        Specialization::Finite {
            alphas: vec![Rational::one()],
            betas: Vec::new(),
            gamma: Rational::one(),
        }
    }

    /// `Sp_{∅,β,1}` with `β = (1)`.
    pub fn steinberg() -> Self {
        Specialization::Finite {
            alphas: Vec::new(),
            betas: vec![Rational::one()],
            gamma: Rational::one(),
        }
    }

    pub fn gamma(&self) -> Rational {
        self.power_sum(1)
    }

    /// Value on `p_k`.
    pub fn power_sum(&self, k: usize) -> Rational {
        assert!(k >= 1, "power sums start at p_1");
        match self {
            Specialization::Finite {
                alphas,
                betas,
                gamma,
            } => {
                if k == 1 {
                    return gamma.clone();
                }
                let a: Rational = alphas.iter().map(|x| num_traits::pow(x.clone(), k)).sum();
                let b: Rational = betas.iter().map(|x| num_traits::pow(x.clone(), k)).sum();
                if k % 2 == 0 {
                    a - b
                } else {
                    a + b
                }
            }
            Specialization::PowerValues { p1, higher } => {
                if k == 1 {
                    p1.clone()
                } else {
                    higher(k)
                }
            }
        }
    }

    /// `Sp ∘ Pl_n`: the specialization `p_k ↦ Sp[p_{nk}]`.
    pub fn plethysm(&self, n: usize) -> Specialization {
        assert!(n >= 1, "plethysm degree must be positive");
        if n == 1 {
            return self.clone();
        }
        let inner = self.clone();
        Specialization::PowerValues {
            p1: self.power_sum(n),
            higher: Arc::new(move |k| inner.power_sum(n * k)),
        }
    }

    /// `Σ_ρ c_ρ Π_i Sp[p_{ρ_i}]`.
    pub fn specialize(&self, f: &PowerSumElement) -> Rational {
        let max_part = f.terms().map(|(rho, _)| rho.part(0)).max().unwrap_or(0);
        let values: Vec<Rational> = (1..=max_part).map(|k| self.power_sum(k)).collect();
        f.terms()
            .map(|(rho, c)| {
                rho.parts()
                    .iter()
                    .fold(c.clone(), |acc, &k| acc * &values[k - 1])
            })
            .sum()
    }
}

impl fmt::Debug for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Specialization::Finite {
                alphas,
                betas,
                gamma,
            } => f
                .debug_struct("Finite")
                .field("alphas", &Sequence::Explicit(alphas.clone()).to_string())
                .field("betas", &Sequence::Explicit(betas.clone()).to_string())
                .field("gamma", &format_rational(gamma))
                .finish(),
            Specialization::PowerValues { p1, .. } => f
                .debug_struct("PowerValues")
                .field("p1", &format_rational(p1))
                .finish_non_exhaustive(),
        }
    }
}

/// `p_k ↦ Sp[p_k]`, free function form.
pub fn spec_power_sum(sp: &Specialization, k: usize) -> Rational {
    sp.power_sum(k)
}

/// `Sp[f]`, free function form.
pub fn specialize(sp: &Specialization, f: &PowerSumElement) -> Rational {
    sp.specialize(f)
}

/// The specialization at the geometric spread `seq^{(q)}` placed in the
/// α slot, with `γ = Σ seq`.
pub fn geometric_spread(seq: Vec<Rational>, q: Rational) -> Result<Specialization> {
    let seq = Sequence::spread(seq, q)?;
    let gamma = seq.sum();
    Specialization::thoma(seq, Sequence::empty(), gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;
    use crate::rational::{frac, int};
    use crate::symfunc::hall_littlewood::schur_in_p;

    fn p<const N: usize>(parts: [usize; N]) -> Partition {
        Partition::from(parts)
    }

    fn fin(a: &[Rational], b: &[Rational]) -> Specialization {
        Specialization::finite(a.to_vec(), b.to_vec(), int(1)).unwrap()
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(fin(&[int(1)], &[]).power_sum(5), int(1));
        assert_eq!(fin(&[], &[int(1)]).power_sum(2), int(-1));
        assert_eq!(fin(&[frac(1, 2), frac(1, 2)], &[]).power_sum(2), frac(1, 2));
    }

    #[test]
    fn specialize_examples() {
        let a = fin(&[int(1)], &[]);
        let b = fin(&[], &[int(1)]);
        assert_eq!(a.specialize(&schur_in_p(&p([2]))), int(1));
        assert_eq!(a.specialize(&schur_in_p(&p([1, 1]))), int(0));
        assert_eq!(b.specialize(&schur_in_p(&p([1, 1]))), int(1));
    }

    #[test]
    fn spread_examples() {
        let s = geometric_spread(vec![int(1)], int(2)).unwrap();
        assert_eq!(s.power_sum(1), int(1));
        assert_eq!(s.power_sum(2), frac(1, 3));
        let e = geometric_spread(vec![], int(2)).unwrap();
        for k in 1..5 {
            assert_eq!(e.power_sum(k), int(0));
        }
    }

    #[test]
    fn spread_matches_truncated_sum() {
        // (1 - 1/q) x q^{1-j}, summed over j exactly as a geometric series
        let q = int(3);
        let seq = Sequence::spread(vec![frac(1, 2), frac(1, 5)], q.clone()).unwrap();
        for k in 1..6 {
            let mut direct = Rational::zero();
            for x in [frac(1, 2), frac(1, 5)] {
                let first = num_traits::pow(&x * (Rational::one() - q.recip()), k);
                let ratio = num_traits::pow(q.recip(), k);
                direct += first / (Rational::one() - ratio);
            }
            assert_eq!(seq.power_sum(k), direct);
        }
    }

    #[test]
    fn finite_validation() {
        assert!(Specialization::finite(vec![frac(1, 2), frac(3, 4)], vec![], int(2)).is_err());
        assert!(Specialization::finite(vec![frac(-1, 2)], vec![], int(1)).is_err());
        assert!(Specialization::finite(vec![frac(2, 3)], vec![frac(1, 2)], int(1)).is_err());
        assert!(Specialization::finite(vec![frac(1, 2)], vec![frac(1, 2)], int(1)).is_ok());
    }

    #[test]
    fn plethysm_reads_multiplied_power_sums() {
        let sp = fin(&[frac(1, 3)], &[frac(1, 2)]);
        let pl = sp.plethysm(2);
        assert_eq!(pl.power_sum(1), sp.power_sum(2));
        assert_eq!(pl.power_sum(3), sp.power_sum(6));
        let f = PowerSumElement::p(p([2, 1]));
        assert_eq!(pl.specialize(&f), sp.specialize(&f.plethysm(2)));
    }
}
