//! Named verification suites. Each suite evaluates both sides of an
//! identity independently and reports one row per checked instance.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::measures::{
    extension_count, cyl_prob_from_trace, lln_experiment, CentralMeasure, MeasureParams,
};
use crate::oracle::extensions::{extension_type_counts, extension_type_counts_brute};
use crate::oracle::{
    class_of, count_fixed_flags, count_fixed_subspaces, families_enumerate, general_linear_group,
    glu_extension_census, schubert_histogram, unipotent_class_of, unipotent_elements, FqField,
    FqMatrix,
};
use crate::partition::Partition;
use crate::poly::TPolynomial;
use crate::rational::{format_rational, frac, int, pow, Rational};
use crate::symfunc::{
    kostka, kostka_foulkes, modified_hl_q, modified_hl_schur_symbolic, schur_expand, schur_in_p,
    hl_q_in_p, Sequence, Specialization,
};
use crate::traces::{
    biregular_coefficient, branching_predecessors, green_dimension, principal_schur_closed_form,
    sp_principal_schur, trace_coefficients, unipotent_trace_value, Block, FamilyOfDiagrams,
    Variant, UNIT,
};

/// One checked instance of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRow {
    pub identity: String,
    pub instance: String,
    pub left: String,
    pub right: String,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub rows: Vec<CheckRow>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            rows: Vec::new(),
        }
    }

    fn check(&mut self, identity: &str, instance: String, left: String, right: String, pass: bool) {
        self.rows.push(CheckRow {
            identity: identity.to_string(),
            instance,
            left,
            right,
            pass,
        });
    }

    fn equal<T: PartialEq>(&mut self, identity: &str, instance: String, left: T, right: T, show: impl Fn(&T) -> String) {
        let pass = left == right;
        let (l, r) = (show(&left), show(&right));
        self.check(identity, instance, l, r, pass);
    }

    pub fn passed(&self) -> bool {
        !self.rows.is_empty() && self.rows.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRow> {
        self.rows.iter().filter(|r| !r.pass)
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
        w.write_record(["identity", "instance", "left", "right", "result"])
            .expect("in-memory write");
        for r in &self.rows {
            w.write_record([
                r.identity.as_str(),
                r.instance.as_str(),
                r.left.as_str(),
                r.right.as_str(),
                if r.pass { "pass" } else { "fail" },
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }
}

type SuiteFn = fn() -> Result<SuiteReport>;

const REGISTRY: [(&str, SuiteFn); 16] = [
    ("hl-identity", hl_identity),
    ("dimensions", dimensions),
    ("branching", branching),
    ("extensions", extensions),
    ("haar", haar),
    ("normalization", normalization),
    ("lln", lln),
    ("parameter-map", parameter_map),
    ("flags", flags),
    ("spherical", spherical),
    ("biregular", biregular),
    ("steinberg", steinberg),
    ("schubert", schubert),
    ("class-coverage", class_coverage),
    ("companion", companion),
    ("positivity", positivity),
];

pub fn suite_names() -> impl Iterator<Item = &'static str> {
    REGISTRY.iter().map(|(n, _)| *n)
}

pub fn run_suite(name: &str) -> Result<SuiteReport> {
    let (_, f) = REGISTRY
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::param("suite", format!("unknown suite {name:?}")))?;
    f()
}

fn r(x: &Rational) -> String {
    format_rational(x)
}

fn field(q: u32) -> &'static FqField {
    FqField::get(q).expect("supported field")
}

fn join<T>(values: &BTreeSet<T>, show: impl Fn(&T) -> String) -> String {
    values.iter().map(show).collect::<Vec<_>>().join(" ")
}

/// Schur expansion of `Q̃_λ` against the Kostka–Foulkes column of `λ`.
pub fn hl_identity() -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("hl-identity");
    for lambda in Partition::up_to(4) {
        let (d, nums) = modified_hl_schur_symbolic(&lambda)?;
        for mu in Partition::all(lambda.size()) {
            let left = nums.get(&mu).cloned().unwrap_or_default();
            let right = &d * &kostka_foulkes(&mu, &lambda)?;
            rep.equal(
                "schur(Q~) = K(t) symbolic, scaled",
                format!("lambda={lambda} mu={mu}"),
                left,
                right,
                TPolynomial::to_string,
            );
        }
    }
    for t in [frac(1, 2), frac(1, 3)] {
        for lambda in Partition::up_to(6) {
            let d = schur_expand(&modified_hl_q(&lambda, &t)?)?;
            for mu in Partition::all(lambda.size()) {
                let left = d.get(&mu).cloned().unwrap_or_default();
                let right = kostka_foulkes(&mu, &lambda)?.eval(&t);
                rep.equal(
                    "schur(Q~) = K(t) at rational t",
                    format!("lambda={lambda} mu={mu} t={}", r(&t)),
                    left,
                    right,
                    r,
                );
            }
        }
    }
    Ok(rep)
}

fn gl_order(n: usize, q: &Rational) -> Rational {
    (0..n)
        .map(|i| pow(q, n as i64) - pow(q, i as i64))
        .product()
}

pub fn dimensions() -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("dimensions");
    for qv in [2u32, 3] {
        let q = int(qv.into());
        for n in 1..=4 {
            let mut total = Rational::zero();
            let mut integral = true;
            for f in families_enumerate(field(qv), n) {
                let d = green_dimension(&f, &q)?;
                integral &= d.is_integer() && d.is_positive();
                total += &d * &d;
            }
            let right = gl_order(n, &q);
            let pass = integral && total == right;
            rep.check(
                "sum of squared dimensions = |GL(n,q)|",
                format!("n={n} q={qv}"),
                r(&total),
                r(&right),
                pass,
            );
        }
    }
    Ok(rep)
}

pub fn branching() -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("branching");
    for qv in [2u32, 3] {
        let q = int(qv.into());
        for n in 1..=4 {
            for f in families_enumerate(field(qv), n) {
                let dim = green_dimension(&f, &q)?;
                for (variant, label) in [(Variant::Glb, "GLB"), (Variant::Glu, "GLU")] {
                    let mut below = Rational::zero();
                    for g in branching_predecessors(&f, variant) {
                        below += green_dimension(&g, &q)?;
                    }
                    let pass = dim >= below;
                    rep.check(
                        "dim f >= sum of predecessor dims",
                        format!("{label} q={qv} f={}", f.to_json()),
                        r(&dim),
                        r(&below),
                        pass,
                    );
                }
            }
        }
    }
    Ok(rep)
}

pub fn extensions() -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("extensions");
    for qv in [2u32, 3] {
        for n in 0..=4usize {
            let census = glu_extension_census(field(qv), n);
            let expected = (qv as u64).pow((n * n.saturating_sub(1)) as u32);
            let matched = census.total() - census.mismatches.len() as u64;
            let pass = census.mismatches.is_empty() && census.total() == expected;
            rep.check(
                "extension types of every unipotent g match N(lambda,mu)",
                format!("n={n} q={qv}"),
                format!("{matched} elements matched"),
                format!("{expected} unipotent elements"),
                pass,
            );
        }
    }
    // the rank-table classifier against direct Jordan-type extraction
    for (qv, max_n) in [(2u32, 4usize), (3, 3)] {
        for n in 0..=max_n {
            let mut agree = 0u64;
            let mut total = 0u64;
            let mut matches_formula = true;
            let q = int(qv.into());
            for g in unipotent_elements(field(qv), n) {
                total += 1;
                let brute = extension_type_counts_brute(&g)?;
                if extension_type_counts(&g)? == brute {
                    agree += 1;
                }
                let lambda = unipotent_class_of(&g)?;
                for (mu, c) in &brute {
                    matches_formula &= extension_count(&lambda, mu, &q)? == int(*c as i64);
                }
            }
            rep.check(
                "explicit enumeration of extensions matches N(lambda,mu) and the fast classifier",
                format!("n={n} q={qv}"),
                format!("{agree} elements agree"),
                format!("{total} unipotent elements"),
                matches_formula && agree == total,
            );
        }
    }
    Ok(rep)
}

pub fn haar() -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("haar");
    for qv in [2i64, 3] {
        let q = int(qv);
        let measure = CentralMeasure::new(MeasureParams::haar(q.clone())?)?;
        let sp = measure.params().specialization()?;
        for lambda in Partition::up_to(8) {
            let n = lambda.size() as i64;
            rep.equal(
                "cyl(lambda) = q^(-n(n-1)/2)",
                format!("q={qv} lambda={lambda}"),
                measure.cyl_prob_from_hl(&lambda)?,
                pow(&q, -(n * (n - 1) / 2)),
                r,
            );
            let t = q.recip();
            rep.equal(
                "Sp[Q_lambda] = (1-1/q)^n q^(-n(lambda))",
                format!("q={qv} lambda={lambda}"),
                sp.specialize(&hl_q_in_p(&lambda, &t)?),
                pow(&(Rational::one() - &t), n) * pow(&q, -(lambda.n_stat() as i64)),
                r,
            );
        }
    }
    Ok(rep)
}

fn general_grid() -> Vec<(Vec<Rational>, Vec<Rational>)> {
    vec![
        (vec![frac(1, 4)], vec![frac(1, 4)]),
        (vec![frac(1, 2)], vec![frac(1, 3)]),
        (vec![frac(1, 3), frac(1, 6)], vec![frac(1, 4)]),
        (vec![], vec![frac(1, 2)]),
        (vec![frac(1, 2), frac(1, 2)], vec![]),
    ]
}

fn seq_label(v: &[Rational]) -> String {
    format!("({})", v.iter().map(format_rational).collect::<Vec<_>>().join(","))
}

fn row_sums(
    measure: &CentralMeasure,
    n: usize,
    via_cylinders: bool,
) -> Result<(BTreeSet<Rational>, usize)> {
    let mut sums = BTreeSet::new();
    let mut skipped = 0;
    for lambda in Partition::all(n) {
        let rows = if via_cylinders {
            measure.transitions_via_cylinders(&lambda)
        } else {
            measure.transitions(&lambda)
        };
        match rows {
            Ok(rows) => {
                sums.insert(rows.into_iter().map(|(_, p)| p).sum());
            }
            Err(Error::ZeroProbability(_)) => skipped += 1,
            Err(e) => return Err(e),
        }
    }
    Ok((sums, skipped))
}

pub fn normalization() -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("normalization");
    let one = BTreeSet::from([Rational::one()]);
    for qv in [2i64, 3] {
        let q = int(qv);
        let closed = [
            ("haar", MeasureParams::haar(q.clone())?),
            ("delta", MeasureParams::delta(q.clone())?),
            ("single-row", MeasureParams::single_row(q.clone())?),
        ];
        for (label, params) in closed {
            let measure = CentralMeasure::new(params)?;
            for n in 0..=20 {
                for via in [false, true] {
                    let (sums, skipped) = row_sums(&measure, n, via)?;
                    let reachable = Partition::all(n).count() - skipped;
                    let expect_reachable = if label == "haar" { Partition::all(n).count() } else { 1 };
                    rep.check(
                        "sum over mu of P(lambda -> mu) = 1",
                        format!(
                            "{label} q={qv} |lambda|={n} {} ({reachable} reachable)",
                            if via { "N*cyl ratio" } else { "chain" }
                        ),
                        join(&sums, r),
                        "1".into(),
                        sums == one && reachable == expect_reachable,
                    );
                }
            }
        }
        for (rr, cc) in general_grid() {
            let params = MeasureParams::new(rr.clone(), cc.clone(), q.clone())?;
            let label = format!("r={} c={} q={qv}", seq_label(&rr), seq_label(&cc));
            let measure = CentralMeasure::new(params)?;
            for n in 0..=8 {
                let (sums, _) = row_sums(&measure, n, false)?;
                rep.check(
                    "sum over mu of P(lambda -> mu) = 1",
                    format!("{label} |lambda|={n}"),
                    join(&sums, r),
                    "1".into(),
                    sums == one,
                );
            }
            for n in 0..=10 {
                let mut gaps = BTreeSet::new();
                for lambda in Partition::all(n) {
                    let mut total = Rational::zero();
                    for mu in lambda.successors() {
                        total += extension_count(&lambda, &mu, &q)? * measure.cyl_prob(&mu)?;
                    }
                    gaps.insert(total - measure.cyl_prob(&lambda)?);
                }
                rep.check(
                    "cyl(lambda) - sum over mu of N cyl(mu) = 0",
                    format!("{label} |lambda|={n}"),
                    join(&gaps, r),
                    "0".into(),
                    gaps == BTreeSet::from([Rational::zero()]),
                );
            }
        }
    }
    Ok(rep)
}

/// Haar measure at `q = 2`: `λ_1/n → 1/2`, `λ_2/n → 1/4`.
pub fn lln() -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("lln");
    let params = MeasureParams::haar(int(2))?;
    let report = lln_experiment(&params, 1000, 200, 42)?;
    for (stat, lo, hi) in [("lambda_1/n", 0.49, 0.51), ("lambda_2/n", 0.24, 0.26)] {
        let row = report
            .rows
            .iter()
            .find(|x| x.statistic == stat)
            .expect("reported statistic");
        rep.check(
            "empirical mean within the 3-sigma band",
            format!("haar q=2 n=1000 trials=200 seed=42 {stat} predicted={}", r(&row.predicted)),
            format!("{:.6}", row.empirical),
            format!("[{lo}, {hi}]"),
            (lo..=hi).contains(&row.empirical),
        );
    }
    let a = lln_experiment(&params, 200, 20, 7)?.to_csv();
    let b = lln_experiment(&params, 200, 20, 7)?.to_csv();
    rep.check(
        "identical inputs give identical reports",
        "haar q=2 n=200 trials=20 seed=7".into(),
        format!("{} bytes", a.len()),
        format!("{} bytes", b.len()),
        a == b,
    );
    Ok(rep)
}

fn trace_grid() -> Vec<(Vec<Rational>, Vec<Rational>)> {
    vec![
        (vec![int(1)], vec![]),
        (vec![], vec![int(1)]),
        (vec![frac(1, 2), frac(1, 2)], vec![]),
        (vec![frac(1, 4)], vec![frac(1, 4)]),
        (vec![frac(1, 3)], vec![frac(1, 2)]),
        (vec![frac(1, 2), frac(1, 4)], vec![frac(1, 8)]),
    ]
}

pub fn parameter_map() -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("parameter-map");
    for qv in [2i64, 3] {
        let q = int(qv);
        for (alpha, beta) in trace_grid() {
            let sp = Specialization::finite(alpha.clone(), beta.clone(), Rational::one())?;
            let r_seq = Sequence::spread(alpha.clone(), q.clone())?;
            let measure =
                CentralMeasure::new(MeasureParams::with_row_sequence(r_seq, beta.clone(), q.clone())?)?;
            for lambda in Partition::up_to(5) {
                rep.equal(
                    "trace cylinder = measure cylinder with r = alpha^(q), c = beta",
                    format!(
                        "q={qv} alpha={} beta={} lambda={lambda}",
                        seq_label(&alpha),
                        seq_label(&beta)
                    ),
                    cyl_prob_from_trace(&sp, &lambda, &q)?,
                    measure.cyl_prob_from_hl(&lambda)?,
                    r,
                );
            }
        }
    }
    Ok(rep)
}

/// `q^{n(ν)} K_{λ,ν}(q⁻¹)`.
fn unipotent_character(lambda: &Partition, nu: &Partition, q: &Rational) -> Result<Rational> {
    Ok(pow(q, nu.n_stat() as i64) * kostka_foulkes(lambda, nu)?.eval(&q.recip()))
}

pub fn flags() -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("flags");
    for qv in [2u32, 3] {
        let q = int(qv.into());
        for n in 1..=3 {
            let mut observed: BTreeMap<(Partition, Partition), (BTreeSet<u64>, u64)> = BTreeMap::new();
            for g in unipotent_elements(field(qv), n) {
                let nu = unipotent_class_of(&g)?;
                for mu in Partition::all(n) {
                    let entry = observed.entry((nu.clone(), mu.clone())).or_default();
                    entry.0.insert(count_fixed_flags(&g, mu.parts()));
                    entry.1 += 1;
                }
            }
            for ((nu, mu), (counts, elements)) in observed {
                let mut right = Rational::zero();
                for lambda in Partition::all(n) {
                    let k = kostka(&lambda, &mu)?;
                    if !k.is_zero() {
                        right += Rational::from_integer(k) * unipotent_character(&lambda, &nu, &q)?;
                    }
                }
                let pass = counts.len() == 1
                    && Rational::from_integer(BigInt::from(*counts.first().expect("nonempty"))) == right;
                rep.check(
                    "fixed flags psi_mu(g) = sum K(lambda,mu) chi^lambda(g)",
                    format!("q={qv} class={nu} mu={mu} ({elements} elements)"),
                    join(&counts, u64::to_string),
                    r(&right),
                    pass,
                );
            }
        }
    }
    Ok(rep)
}

fn two_variable(t1: &Rational, t2: &Rational) -> Result<Specialization> {
    let (big, small) = if t1 >= t2 { (t1, t2) } else { (t2, t1) };
    Specialization::finite(vec![big.clone(), small.clone()], vec![], t1 + t2)
}

pub fn spherical() -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("spherical");
    let q = int(2);
    for (t1, t2) in [(frac(1, 2), frac(1, 2)), (frac(1, 3), frac(2, 3))] {
        let sp = two_variable(&t1, &t2)?;
        for n in 1..=3usize {
            let mut observed: BTreeMap<FamilyOfDiagrams, (BTreeSet<Rational>, u64, Option<Partition>)> =
                BTreeMap::new();
            for g in general_linear_group(field(2), n) {
                let mut left = Rational::zero();
                for d in 0..=n {
                    let c = count_fixed_subspaces(&g, d);
                    left += pow(&t1, d as i64) * pow(&t2, (n - d) as i64) * int(c as i64);
                }
                let class = class_of(&g)?.canonical();
                let unip = unipotent_class_of(&g).ok();
                let entry = observed.entry(class).or_insert_with(|| (BTreeSet::new(), 0, unip));
                entry.0.insert(left);
                entry.1 += 1;
            }
            for (class, (lefts, elements, unip)) in observed {
                let right = unipotent_trace_value(&sp, &class, &q)?;
                let instance = format!(
                    "n={n} t=({},{}) class={} ({elements} elements)",
                    r(&t1),
                    r(&t2),
                    class.to_json()
                );
                rep.check(
                    "fixed-subspace sum = sum s_lambda(t1,t2) chi^lambda(g)",
                    instance.clone(),
                    join(&lefts, r),
                    r(&right),
                    lefts.len() == 1 && lefts.first() == Some(&right),
                );
                if let Some(nu) = unip {
                    let mut via_kf = Rational::zero();
                    for lambda in Partition::all(n) {
                        via_kf += sp.specialize(&schur_in_p(&lambda)) * unipotent_character(&lambda, &nu, &q)?;
                    }
                    rep.check(
                        "fixed-subspace sum via Kostka-Foulkes character values",
                        instance,
                        join(&lefts, r),
                        r(&via_kf),
                        lefts.len() == 1 && lefts.first() == Some(&via_kf),
                    );
                }
            }
        }
    }
    Ok(rep)
}

fn with_unit(f: &FamilyOfDiagrams, lambda: &Partition) -> Result<FamilyOfDiagrams> {
    let mut blocks = f.blocks().to_vec();
    if !lambda.is_empty() {
        blocks.push(Block::new(UNIT, 1, lambda.clone()));
    }
    FamilyOfDiagrams::new(blocks)
}

pub fn biregular() -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("biregular");
    for qv in [2i64, 3, 4] {
        let q = int(qv);
        for lambda in Partition::up_to(6) {
            rep.equal(
                "Sp[s_lambda] at beta = 1^(q) equals the hook closed form",
                format!("q={qv} lambda={lambda}"),
                sp_principal_schur(&lambda, &q)?,
                principal_schur_closed_form(&lambda, &q)?,
                r,
            );
        }
    }
    for (qv, max_n) in [(2u32, 4usize), (3, 3)] {
        let q = int(qv.into());
        for n in 1..=max_n {
            let normalizer: Rational = (1..=n)
                .map(|i| (&q - Rational::one()) / (pow(&q, i as i64) - Rational::one()))
                .product();
            let mut weighted = Rational::zero();
            for m in 0..=n {
                for f in families_enumerate(field(qv), m) {
                    if f.unit().is_some() {
                        continue;
                    }
                    let c = biregular_coefficient(&f, &q)?;
                    for lambda in Partition::all(n - m) {
                        let left = &c * sp_principal_schur(&lambda, &q)?;
                        let dim = green_dimension(&with_unit(&f, &lambda)?, &q)?;
                        let right = &normalizer * &dim;
                        weighted += &left * &dim;
                        rep.equal(
                            "C(f) Sp[s_lambda] = prod (q-1)/(q^i-1) dim(f + E1(lambda))",
                            format!("n={n} q={qv} f={} lambda={lambda}", f.to_json()),
                            left,
                            right,
                            r,
                        );
                    }
                }
            }
            rep.equal(
                "sum of C(f) Sp[s_lambda] dim = (q-1)^n q^(n(n-1)/2)",
                format!("n={n} q={qv}"),
                weighted,
                pow(&(&q - Rational::one()), n as i64) * pow(&q, (n * (n - 1) / 2) as i64),
                r,
            );
        }
    }
    Ok(rep)
}

pub fn steinberg() -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("steinberg");
    let st = Specialization::steinberg();
    for qv in [2i64, 3, 4, 5] {
        let q = int(qv);
        for n in 1..=4usize {
            let class = FamilyOfDiagrams::new(vec![Block::new(UNIT, 1, Partition::column(n))])?;
            let want = pow(&q, (n * (n - 1) / 2) as i64);
            rep.equal(
                "Steinberg value at the identity = q^(n(n-1)/2)",
                format!("q={qv} n={n}"),
                unipotent_trace_value(&st, &class, &q)?,
                want.clone(),
                r,
            );
            rep.equal(
                "Steinberg dimension from the hook formula",
                format!("q={qv} n={n}"),
                green_dimension(&class, &q)?,
                want,
                r,
            );
        }
        let elliptic = FamilyOfDiagrams::new(vec![Block::new("c", 2, Partition::row(1))])?;
        rep.equal(
            "Steinberg value on the elliptic class = -1",
            format!("q={qv}"),
            unipotent_trace_value(&st, &elliptic, &q)?,
            int(-1),
            r,
        );
    }
    Ok(rep)
}

pub fn schubert() -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("schubert");
    for qv in [2u32, 3] {
        for n in 1..=5usize {
            let hist = schubert_histogram(field(qv), n);
            for code in 0..(1u32 << n) {
                let x: Vec<u8> = (0..n).map(|i| ((code >> i) & 1) as u8).collect();
                let m = x.iter().filter(|&&b| b == 1).count() as i64;
                let weight: i64 = x
                    .iter()
                    .enumerate()
                    .map(|(i, &b)| (i as i64 + 1) * b as i64)
                    .sum();
                let right = (qv as u64).pow((weight - m * (m + 1) / 2) as u32);
                let left = hist.get(&x).copied().unwrap_or(0);
                let label: String = x.iter().map(u8::to_string).collect();
                rep.equal("Schubert cell size", format!("q={qv} x={label}"), left, right, u64::to_string);
            }
        }
    }
    Ok(rep)
}

pub fn class_coverage() -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("class-coverage");
    for qv in [2u32, 3] {
        for n in 1..=3 {
            let families: BTreeSet<FamilyOfDiagrams> =
                families_enumerate(field(qv), n).iter().map(FamilyOfDiagrams::canonical).collect();
            let mut seen = BTreeSet::new();
            let mut elements = 0u64;
            for g in general_linear_group(field(qv), n) {
                seen.insert(class_of(&g)?.canonical());
                elements += 1;
            }
            rep.check(
                "every matrix maps to exactly one family; classes = |CY_n|",
                format!("n={n} q={qv} ({elements} matrices)"),
                format!("{} classes", seen.len()),
                format!("{} families", families.len()),
                seen == families,
            );
        }
    }
    Ok(rep)
}

/// `x² + x + 1` companion blocks over `F_2` with identity blocks above
/// the diagonal inside each Jordan part.
fn companion_jordan(nu: &Partition) -> FqMatrix {
    let f2 = field(2);
    let size = 2 * nu.size();
    let mut m = FqMatrix::zero(f2, size, size);
    let mut at = 0;
    for &part in nu.parts() {
        for b in 0..part {
            let o = at + 2 * b;
            m.set(o, o + 1, 1);
            m.set(o + 1, o, 1);
            m.set(o + 1, o + 1, 1);
            if b + 1 < part {
                m.set(o, o + 2, 1);
                m.set(o + 1, o + 3, 1);
            }
        }
        at += 2 * part;
    }
    m
}

/// Unipotent Jordan matrix of type `nu` over the given field.
fn jordan(field: &'static FqField, nu: &Partition) -> FqMatrix {
    let size = nu.size();
    let mut m = FqMatrix::identity(field, size);
    let mut at = 0;
    for &part in nu.parts() {
        for b in 0..part.saturating_sub(1) {
            m.set(at + b, at + b + 1, 1);
        }
        at += part;
    }
    m
}

pub fn companion() -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("companion");
    let f4 = field(4);
    for m in 1..=2usize {
        for nu in Partition::all(m) {
            let g = companion_jordan(&nu);
            let u = jordan(f4, &nu);
            rep.equal(
                "companion block matrix has the class it encodes",
                format!("nu={nu}"),
                class_of(&g)?.to_json(),
                FamilyOfDiagrams::new(vec![Block::new("poly:1,1,1", 2, nu.clone())])?.to_json(),
                String::clone,
            );
            for shape in Partition::all(2 * m) {
                let left = count_fixed_flags(&g, shape.parts());
                let half: Option<Vec<usize>> = shape
                    .parts()
                    .iter()
                    .map(|&p| (p % 2 == 0).then_some(p / 2))
                    .collect();
                let (right, label) = match half {
                    Some(kappa) => (count_fixed_flags(&u, &kappa), "F_4 unipotent flags"),
                    None => (0, "0 (odd part)"),
                };
                rep.equal(
                    "psi_{2kappa}(companion over F_2) = psi_kappa(unipotent over F_4)",
                    format!("nu={nu} shape={shape} vs {label}"),
                    left,
                    right,
                    u64::to_string,
                );
            }
        }
    }
    Ok(rep)
}

pub fn positivity() -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("positivity");
    for (alpha, beta) in trace_grid() {
        let sp = Specialization::finite(alpha.clone(), beta.clone(), Rational::one())?;
        for n in 0..=6 {
            let coeffs = trace_coefficients(&sp, n)?;
            let min = coeffs.values().min().cloned().unwrap_or_default();
            rep.check(
                "Sp[s_lambda] >= 0",
                format!("alpha={} beta={} n={n}", seq_label(&alpha), seq_label(&beta)),
                r(&min),
                ">= 0".into(),
                !min.is_negative(),
            );
        }
    }
    for qv in [2i64, 3] {
        for (rr, cc) in general_grid() {
            let measure = CentralMeasure::new(MeasureParams::new(rr.clone(), cc.clone(), int(qv))?)?;
            for n in 0..=8 {
                let mut min: Option<Rational> = None;
                for lambda in Partition::all(n) {
                    let v = measure.cyl_prob(&lambda)?;
                    min = Some(min.map_or(v.clone(), |m| m.min(v)));
                }
                let min = min.expect("at least one partition");
                rep.check(
                    "cyl(lambda) >= 0",
                    format!("r={} c={} q={qv} n={n}", seq_label(&rr), seq_label(&cc)),
                    r(&min),
                    ">= 0".into(),
                    !min.is_negative(),
                );
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_names_are_unique() {
        let names: BTreeSet<_> = suite_names().collect();
        assert_eq!(names.len(), REGISTRY.len());
        assert!(run_suite("nope").is_err());
    }

    #[test]
    fn quick_suites_pass() {
        for name in ["steinberg", "schubert", "companion", "class-coverage"] {
            let rep = run_suite(name).unwrap();
            let bad: Vec<_> = rep.failures().collect();
            assert!(bad.is_empty(), "{name}: {bad:?}");
        }
    }

    #[test]
    fn csv_quotes_fields_with_commas() {
        let mut rep = SuiteReport::new("x");
        rep.check("id", "lambda=2,1".into(), "1".into(), "1".into(), true);
        assert_eq!(rep.to_csv(), "identity,instance,left,right,result\nid,\"lambda=2,1\",1,1,pass\n");
    }
}
