use num_traits::{One, Zero};
use proptest::prelude::*;

use unitrace::rational::{format_rational, frac, int, parse_rational};
use unitrace::symfunc::{schur_in_p, PowerSumElement, Specialization};
use unitrace::{Partition, Rational};

fn small_rational() -> impl Strategy<Value = Rational> {
    (0i64..=6, 1i64..=8).prop_map(|(a, b)| frac(a, b * 4))
}

fn decreasing(max_len: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec(small_rational(), 0..=max_len).prop_map(|mut v| {
        v.sort();
        v.reverse();
        v
    })
}

fn partition_of_size(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|n| {
        let all: Vec<Partition> = Partition::all(n).collect();
        proptest::sample::select(all)
    })
}

fn element(max_degree: usize) -> impl Strategy<Value = PowerSumElement> {
    proptest::collection::vec((partition_of_size(max_degree), -4i64..=4, 1i64..=3), 1..4).prop_map(
        |terms| PowerSumElement::from_terms(terms.into_iter().map(|(rho, a, b)| (rho, frac(a, b)))),
    )
}

fn finite() -> impl Strategy<Value = Specialization> {
    (decreasing(3), decreasing(3), small_rational()).prop_map(|(a, b, extra)| {
        let total: Rational = a.iter().chain(&b).sum();
        Specialization::finite(a, b, total + extra).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn omega_duality(b in decreasing(3), extra in small_rational(), lambda in partition_of_size(6)) {
        let gamma: Rational = b.iter().sum::<Rational>() + extra;
        let beta_side = Specialization::finite(vec![], b.clone(), gamma.clone()).unwrap();
        let alpha_side = Specialization::finite(b, vec![], gamma).unwrap();
        prop_assert_eq!(
            beta_side.specialize(&schur_in_p(&lambda)),
            alpha_side.specialize(&schur_in_p(&lambda.transpose()))
        );
    }

    #[test]
    fn plethysm_composes(f in element(4), m in 1usize..=2, n in 1usize..=2) {
        prop_assert_eq!(f.plethysm(n).plethysm(m), f.plethysm(m * n));
    }

    #[test]
    fn specialization_is_multiplicative(sp in finite(), f in element(4), g in element(4)) {
        prop_assert_eq!(sp.specialize(&f.mul(&g)), sp.specialize(&f) * sp.specialize(&g));
    }

    #[test]
    fn specialization_is_additive(sp in finite(), f in element(4), g in element(4)) {
        prop_assert_eq!(sp.specialize(&f.add(&g)), sp.specialize(&f) + sp.specialize(&g));
    }

    #[test]
    fn plethysm_specialization_uses_powered_parameters(
        a in decreasing(2),
        b in decreasing(2),
        n in 2usize..=3,
        lambda in partition_of_size(4),
    ) {
        let total: Rational = a.iter().chain(&b).sum();
        let sp = Specialization::finite(a.clone(), b.clone(), total.max(Rational::one())).unwrap();
        // p_k under (α^n, -(-β)^n, 1), computed by hand from the sign convention
        let powered_beta: Vec<Rational> = b
            .iter()
            .map(|x| -num_traits::pow(-x.clone(), n))
            .collect();
        let value = |k: usize| -> Rational {
            let alpha: Rational = a.iter().map(|x| num_traits::pow(x.clone(), n * k)).sum();
            let beta: Rational = powered_beta.iter().map(|x| num_traits::pow(x.clone(), k)).sum();
            if k % 2 == 0 { alpha - beta } else { alpha + beta }
        };
        let f = schur_in_p(&lambda);
        let expected: Rational = f
            .terms()
            .map(|(rho, c)| rho.parts().iter().fold(c.clone(), |acc, &k| acc * value(k)))
            .sum();
        prop_assert_eq!(sp.plethysm(n).specialize(&f), expected);
    }

    #[test]
    fn positive_specializations_give_nonnegative_schur_values(sp in finite(), lambda in partition_of_size(6)) {
        prop_assert!(sp.specialize(&schur_in_p(&lambda)) >= Rational::zero());
    }

    #[test]
    fn rational_text_round_trip(a in -1000i64..1000, b in 1i64..1000) {
        let x = frac(a, b);
        prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }

    #[test]
    fn reciprocal_product_is_one(a in 1i64..500, b in 1i64..500) {
        prop_assert_eq!(frac(a, b) * frac(b, a), int(1));
    }

    #[test]
    fn power_sum_json_round_trip(f in element(5)) {
        prop_assert_eq!(PowerSumElement::from_json(&f.to_json()).unwrap(), f);
    }
}

#[test]
fn hook_sum_identity_up_to_ten() {
    for lambda in Partition::up_to(10) {
        let hooks: usize = lambda.hook_lengths().iter().sum();
        assert_eq!(
            hooks,
            lambda.n_stat() + lambda.transpose().n_stat() + lambda.size(),
            "{lambda:?}"
        );
    }
}

#[test]
fn transpose_is_an_involution_up_to_twelve() {
    for lambda in Partition::up_to(12) {
        assert_eq!(lambda.transpose().transpose(), lambda);
    }
}

#[test]
fn addable_corners_count_distinct_parts() {
    for lambda in Partition::up_to(10) {
        let mut distinct = lambda.parts().to_vec();
        distinct.dedup();
        assert_eq!(lambda.addable_corners().len(), distinct.len() + 1);
    }
}
