use std::collections::BTreeMap;

use unitrace::measures::{
    cyl_prob_from_trace, extension_count, lln_experiment, sample_trajectory, transition_prob,
    MeasureParams,
};
use unitrace::oracle::{class_of, count_fixed_flags, families_enumerate, FqField, FqMatrix};
use unitrace::rational::{frac, int};
use unitrace::symfunc::{kostka, kostka_foulkes, schur_expand, modified_hl_q, Specialization};
use unitrace::traces::{
    biregular_coefficient, glu_trace_coefficients, green_dimension, sp_principal_schur,
    trace_coefficients, unipotent_trace_value, FamilyOfDiagrams, GLUTraceParams,
};
use unitrace::{Partition, Rational, TPolynomial};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn kostka_numbers_and_polynomials() {
    assert_eq!(kostka(&p("2"), &p("1,1")).unwrap(), 1.into());
    assert_eq!(kostka(&p("1,1"), &p("2")).unwrap(), 0.into());
    assert_eq!(
        kostka_foulkes(&p("2"), &p("1,1")).unwrap(),
        TPolynomial::from_i64s(&[0, 1])
    );
    assert_eq!(
        kostka_foulkes(&p("3,1"), &p("2,1,1")).unwrap(),
        TPolynomial::from_i64s(&[0, 1, 1])
    );
}

#[test]
fn modified_hall_littlewood_schur_expansion() {
    let t = frac(2, 7);
    let got = schur_expand(&modified_hl_q(&p("1,1"), &t).unwrap()).unwrap();
    let want = BTreeMap::from([(p("1,1"), int(1)), (p("2"), t)]);
    assert_eq!(got, want);
}

#[test]
fn family_json_is_the_documented_format() {
    let json = r#"[{"tag":"x-1","d":1,"lambda":"1,1"}]"#;
    let f = FamilyOfDiagrams::from_json(json).unwrap();
    assert_eq!(f.to_json(), json);
    assert_eq!(green_dimension(&f, &int(2)).unwrap(), int(2));
    assert!(FamilyOfDiagrams::from_json(r#"[{"tag":"x-1","d":2,"lambda":"1"}]"#).is_err());
}

#[test]
fn steinberg_values() {
    let steinberg = Specialization::steinberg();
    let elliptic = FamilyOfDiagrams::from_json(r#"[{"tag":"c","d":2,"lambda":"1"}]"#).unwrap();
    assert_eq!(unipotent_trace_value(&steinberg, &elliptic, &int(2)).unwrap(), int(-1));
    let coeffs = trace_coefficients(&steinberg, 3).unwrap();
    assert_eq!(coeffs[&p("1,1,1")], int(1));
    assert_eq!(coeffs[&p("3")], int(0));
}

#[test]
fn biregular_pieces() {
    assert_eq!(sp_principal_schur(&p("2"), &int(2)).unwrap(), frac(1, 3));
    assert_eq!(sp_principal_schur(&p("1,1"), &int(2)).unwrap(), frac(2, 3));
    let cuspidal = FamilyOfDiagrams::from_json(r#"[{"tag":"c","d":2,"lambda":"1"}]"#).unwrap();
    assert_eq!(biregular_coefficient(&cuspidal, &int(2)).unwrap(), frac(1, 3));
    let linear = FamilyOfDiagrams::from_json(r#"[{"tag":"a","d":1,"lambda":"1"}]"#).unwrap();
    assert!(biregular_coefficient(&linear, &int(2)).is_err());
}

#[test]
fn glu_coefficients_multiply_over_tags() {
    let half = frac(1, 2);
    let sp = || Specialization::finite(vec![half.clone()], vec![], half.clone()).unwrap();
    let params = GLUTraceParams::new(
        vec![("a".into(), sp()), ("b".into(), sp())],
        FamilyOfDiagrams::default(),
    )
    .unwrap();
    let coeffs = glu_trace_coefficients(&params, 2);
    assert_eq!(coeffs[&vec![p("1"), p("1")]], frac(1, 4));
}

#[test]
fn measure_examples() {
    let q = int(2);
    assert_eq!(extension_count(&p("1"), &p("2"), &q).unwrap(), int(1));
    assert_eq!(extension_count(&p("1"), &p("1,1"), &q).unwrap(), int(1));
    let sp = Specialization::trivial();
    assert_eq!(cyl_prob_from_trace(&sp, &p("1,1"), &q).unwrap(), frac(1, 2));

    let haar = MeasureParams::haar(q.clone()).unwrap();
    assert_eq!(transition_prob(&haar, &p("1"), &p("2")).unwrap(), frac(1, 2));
    let delta = MeasureParams::delta(q.clone()).unwrap();
    let path = sample_trajectory(&delta, 4, 1).unwrap();
    assert_eq!(path.last().unwrap(), &Partition::column(4));
    let row = MeasureParams::single_row(q).unwrap();
    let report = lln_experiment(&row, 50, 3, 9).unwrap();
    assert_eq!(report.get("lambda_1/n", 1).unwrap().empirical, 1.0);
}

#[test]
fn oracle_examples() {
    let f2 = FqField::get(2).unwrap();
    assert!(FqField::get(6).is_err());
    let m = FqMatrix::from_rows(f2, &[vec![1, 1], vec![0, 1]]).unwrap();
    assert_eq!(count_fixed_flags(&m, &[1, 1]), 1);
    assert_eq!(count_fixed_flags(&FqMatrix::identity(f2, 2), &[1, 1]), 3);
    assert_eq!(families_enumerate(f2, 2).len(), 3);
    let u = FqMatrix::from_rows(f2, &[vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
    assert_eq!(
        class_of(&u).unwrap().to_json(),
        r#"[{"tag":"x-1","d":1,"lambda":"2,1"}]"#
    );
}

#[test]
fn dimensions_of_gl2() {
    let q: Rational = int(2);
    let dims: Vec<Rational> = families_enumerate(FqField::get(2).unwrap(), 2)
        .iter()
        .map(|f| green_dimension(f, &q).unwrap())
        .collect();
    let mut sorted = dims.clone();
    sorted.sort();
    assert_eq!(sorted, vec![int(1), int(1), int(2)]);
}
