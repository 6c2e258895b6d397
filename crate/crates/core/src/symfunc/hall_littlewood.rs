//! Schur and Hall–Littlewood functions in the power-sum basis.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::power_sum::PowerSumElement;
use super::tables::{check_hl_degree, tables};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::TPolynomial;
use crate::rational::Rational;

/// `s_λ = Σ_ρ χ^λ_ρ / z_ρ · p_ρ`.
pub fn schur_in_p(lambda: &Partition) -> PowerSumElement {
    let tab = tables(lambda.size());
    let row = &tab.chars[tab.index_of(lambda)];
    PowerSumElement::from_terms(
        tab.partitions
            .iter()
            .zip(row)
            .zip(&tab.z)
            .map(|((rho, &chi), z)| (rho.clone(), Rational::new(chi.into(), z.clone()))),
    )
}

/// Coefficients of `Σ_μ w_μ s_μ` in the power-sum basis, for a weight row
/// indexed like the degree tables.
fn schur_combination(n: usize, weights: &[Rational]) -> PowerSumElement {
    let tab = tables(n);
    let mut out = PowerSumElement::zero();
    for (r, rho) in tab.partitions.iter().enumerate() {
        let mut acc = Rational::zero();
        for (w, chi_row) in weights.iter().zip(&tab.chars) {
            if !w.is_zero() && chi_row[r] != 0 {
                acc += w * Rational::from_integer(chi_row[r].into());
            }
        }
        out.add_term(rho.clone(), acc / Rational::from_integer(tab.z[r].clone()));
    }
    out
}

/// Hall–Littlewood `P_λ(·; t) = Σ_μ (K(t)⁻¹)_{λμ} s_μ`.
pub fn hl_p_in_p(lambda: &Partition, t: &Rational) -> Result<PowerSumElement> {
    let n = lambda.size();
    check_hl_degree(n)?;
    let tab = tables(n);
    let inv = tab.kostka_foulkes_inverse_at(t);
    Ok(schur_combination(n, &inv[tab.index_of(lambda)]))
}

/// `b_λ(t) = Π_i Π_{j=1}^{m_i(λ)} (1 - t^j)`.
pub fn b_lambda(lambda: &Partition) -> TPolynomial {
    let mut b = TPolynomial::one();
    for (_, m) in lambda.multiplicities() {
        for j in 1..=m {
            b = &b * &TPolynomial::one_minus_t_pow(j);
        }
    }
    b
}

/// Hall–Littlewood `Q_λ(·; t) = b_λ(t) P_λ(·; t)`.
pub fn hl_q_in_p(lambda: &Partition, t: &Rational) -> Result<PowerSumElement> {
    let b = b_lambda(lambda).eval(t);
    Ok(hl_p_in_p(lambda, t)?.scale(&b))
}

fn check_no_root_of_unity(n: usize, t: &Rational) -> Result<()> {
    let mut power = Rational::one();
    for k in 1..=n {
        power *= t;
        if power.is_one() {
            return Err(Error::DivisionByZero(format!("1 - t^{k} = 0 at t = {t}")));
        }
    }
    Ok(())
}

/// Modified Hall–Littlewood `Q̃_λ`: `Q_λ` with each `p_k` divided by `1 - t^k`.
pub fn modified_hl_q(lambda: &Partition, t: &Rational) -> Result<PowerSumElement> {
    check_no_root_of_unity(lambda.size(), t)?;
    let q = hl_q_in_p(lambda, t)?;
    Ok(q.map_coeffs(|rho, c| {
        let denom: Rational = rho
            .parts()
            .iter()
            .map(|&k| Rational::one() - num_traits::pow(t.clone(), k))
            .product();
        c / denom
    }))
}

/// Schur coefficients `d_λ` with `f = Σ_λ d_λ s_λ`, using `d_λ = Σ_ρ c_ρ χ^λ_ρ`.
pub fn schur_expand(f: &PowerSumElement) -> Result<BTreeMap<Partition, Rational>> {
    let n = f.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    let tab = tables(n);
    let mut out = BTreeMap::new();
    for (lam, chi_row) in tab.partitions.iter().zip(&tab.chars) {
        let mut acc = Rational::zero();
        for (rho, c) in f.terms() {
            let chi = chi_row[tab.index_of(rho)];
            if chi != 0 {
                acc += c * Rational::from_integer(chi.into());
            }
        }
        if !acc.is_zero() {
            out.insert(lam.clone(), acc);
        }
    }
    Ok(out)
}

/// Symbolic Schur expansion of `Q̃_λ(·; t)` cleared of denominators.
///
/// Returns `(D, {μ ↦ N_μ})` with integer polynomials such that the Schur
/// coefficient of `s_μ` in `Q̃_λ` is `N_μ / D`, where
/// `D = n! · Π_{k≤n} (1 - t^k)^{⌊n/k⌋}`.
pub fn modified_hl_schur_symbolic(
    lambda: &Partition,
) -> Result<(TPolynomial, BTreeMap<Partition, TPolynomial>)> {
    let n = lambda.size();
    check_hl_degree(n)?;
    let tab = tables(n);
    let inv = tab.kostka_foulkes_inverse();
    let inv_row = &inv[tab.index_of(lambda)];
    let b = b_lambda(lambda);
    let factorial: BigInt = (1..=n).map(BigInt::from).product::<BigInt>().max(BigInt::one());
    let mut common = TPolynomial::one();
    for k in 1..=n {
        for _ in 0..n / k {
            common = &common * &TPolynomial::one_minus_t_pow(k);
        }
    }
    // per-ρ factor: b_λ · (n!/z_ρ) · (common / Π(1 - t^{ρ_i})) · Σ_μ inv[λ][μ] χ^μ_ρ
    let mut rho_factor = Vec::with_capacity(tab.len());
    for (r, rho) in tab.partitions.iter().enumerate() {
        let mut sum = TPolynomial::zero();
        for (w, chi_row) in inv_row.iter().zip(&tab.chars) {
            if !w.is_zero() && chi_row[r] != 0 {
                sum = &sum + &w.scale(&chi_row[r].into());
            }
        }
        let denom = rho
            .parts()
            .iter()
            .fold(TPolynomial::one(), |acc, &k| &acc * &TPolynomial::one_minus_t_pow(k));
        let cofactor = common.div_exact(&denom).expect("denominator divides the common factor");
        let weight = &factorial / &tab.z[r];
        rho_factor.push(&(&sum * &cofactor) * &b.scale(&weight));
    }
    let mut out = BTreeMap::new();
    for (mu, chi_row) in tab.partitions.iter().zip(&tab.chars) {
        let mut acc = TPolynomial::zero();
        for (f, &chi) in rho_factor.iter().zip(chi_row) {
            if chi != 0 {
                acc = &acc + &f.scale(&chi.into());
            }
        }
        if !acc.is_zero() {
            out.insert(mu.clone(), acc);
        }
    }
    Ok((common.scale(&factorial), out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use crate::symfunc::tableaux::kostka_foulkes;

    fn p<const N: usize>(parts: [usize; N]) -> Partition {
        Partition::from(parts)
    }

    fn elem(terms: &[(Partition, Rational)]) -> PowerSumElement {
        PowerSumElement::from_terms(terms.iter().cloned())
    }

    #[test]
    fn schur_examples() {
        let half = frac(1, 2);
        assert_eq!(
            schur_in_p(&p([2])),
            elem(&[(p([1, 1]), half.clone()), (p([2]), half.clone())])
        );
        assert_eq!(
            schur_in_p(&p([1, 1])),
            elem(&[(p([1, 1]), half.clone()), (p([2]), -half)])
        );
        assert_eq!(schur_in_p(&p([1])), PowerSumElement::p(p([1])));
        assert_eq!(schur_in_p(&Partition::empty()), PowerSumElement::one());
    }

    #[test]
    fn hl_q_examples() {
        for t in [frac(1, 2), frac(1, 3), frac(-2, 7), frac(5, 1)] {
            let one = Rational::one();
            let half = frac(1, 2);
            assert_eq!(
                hl_q_in_p(&p([1]), &t).unwrap(),
                PowerSumElement::term(p([1]), &one - &t)
            );
            let b = (&one - &t) * (&one - &t * &t);
            assert_eq!(
                hl_q_in_p(&p([1, 1]), &t).unwrap(),
                elem(&[(p([1, 1]), &b * &half), (p([2]), -&b * &half)])
            );
            let a = &one - &t;
            assert_eq!(
                hl_q_in_p(&p([2]), &t).unwrap(),
                elem(&[
                    (p([1, 1]), &a * &a * &half),
                    (p([2]), &a * (&one + &t) * &half)
                ])
            );
        }
    }

    #[test]
    fn modified_examples() {
        let t = frac(1, 3);
        let one = Rational::one();
        let half = frac(1, 2);
        assert_eq!(modified_hl_q(&p([1]), &t).unwrap(), PowerSumElement::p(p([1])));
        assert_eq!(
            modified_hl_q(&p([1, 1]), &t).unwrap(),
            elem(&[
                (p([1, 1]), (&one + &t) * &half),
                (p([2]), -(&one - &t) * &half)
            ])
        );
        assert_eq!(modified_hl_q(&p([2]), &t).unwrap(), schur_in_p(&p([2])));
        assert!(matches!(
            modified_hl_q(&p([2]), &-one.clone()),
            Err(Error::DivisionByZero(_))
        ));
        assert!(modified_hl_q(&p([1]), &one).is_err());
    }

    #[test]
    fn schur_expand_examples() {
        let got = schur_expand(&PowerSumElement::p(p([1, 1]))).unwrap();
        assert_eq!(got.len(), 2);
        assert_eq!(got[&p([2])], Rational::one());
        assert_eq!(got[&p([1, 1])], Rational::one());
        for lam in Partition::up_to(6) {
            let got = schur_expand(&schur_in_p(&lam)).unwrap();
            assert_eq!(got.into_iter().collect::<Vec<_>>(), vec![(lam, Rational::one())]);
        }
        let t = frac(2, 5);
        let got = schur_expand(&modified_hl_q(&p([1, 1]), &t).unwrap()).unwrap();
        assert_eq!(got[&p([1, 1])], Rational::one());
        assert_eq!(got[&p([2])], t);
        let mixed = PowerSumElement::p(p([1])).add(&PowerSumElement::p(p([2])));
        assert_eq!(schur_expand(&mixed), Err(Error::NotHomogeneous));
    }

    #[test]
    fn p_is_unitriangular_in_schur() {
        let t = frac(1, 2);
        for lam in Partition::up_to(5) {
            let d = schur_expand(&hl_p_in_p(&lam, &t).unwrap()).unwrap();
            assert_eq!(d[&lam], Rational::one());
            for mu in d.keys() {
                assert!(mu.dominance_leq(&lam).unwrap());
            }
        }
    }

    #[test]
    fn symbolic_modified_matches_kostka_foulkes_small() {
        for lam in Partition::up_to(4) {
            let (d, nums) = modified_hl_schur_symbolic(&lam).unwrap();
            for mu in Partition::all(lam.size()) {
                let want = &d * &kostka_foulkes(&mu, &lam).unwrap();
                let got = nums.get(&mu).cloned().unwrap_or_default();
                assert_eq!(got, want, "{mu:?} {lam:?}");
            }
        }
    }

    #[test]
    fn degree_cap() {
        let big = Partition::row(super::super::tables::HL_DEGREE_CAP + 1);
        assert!(matches!(
            hl_q_in_p(&big, &frac(1, 2)),
            Err(Error::DegreeCapExceeded { .. })
        ));
    }
}
