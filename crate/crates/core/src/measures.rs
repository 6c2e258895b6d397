//! Central measures on infinite unipotent upper-triangular matrices over
//! `F_q`: cylinder probabilities, the growth chain on Jordan types, and
//! seeded Monte Carlo experiments.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{format_rational, pow, Rational};
use crate::symfunc::{hl_q_in_p, modified_hl_q, Sequence, Specialization};

/// Row frequencies `r`, column frequencies `c` and the field order `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeasureParams {
    r: Sequence,
    c: Vec<Rational>,
    q: Rational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Haar,
    Delta,
    SingleRow,
    General,
}

impl MeasureParams {
    pub fn new(r: Vec<Rational>, c: Vec<Rational>, q: Rational) -> Result<Self> {
        Self::with_row_sequence(Sequence::explicit(r)?, c, q)
    }

    /// Row frequencies may be a geometric spread (infinitely many nonzero terms).
    pub fn with_row_sequence(r: Sequence, c: Vec<Rational>, q: Rational) -> Result<Self> {
        if q <= Rational::one() {
            return Err(Error::param("q", format!("{q} must exceed 1")));
        }
        let c_seq = Sequence::explicit(c.clone())?;
        let total = r.sum() + c_seq.sum();
        if total > Rational::one() {
            return Err(Error::param(
                "r, c",
                format!("Σr + Σc = {} exceeds 1", format_rational(&total)),
            ));
        }
        Ok(MeasureParams { r, c, q })
    }

    /// Haar measure: `r = (1)^{(q)}`, `c = ∅`.
    pub fn haar(q: Rational) -> Result<Self> {
        let r = Sequence::spread(vec![Rational::one()], q.clone())?;
        Self::with_row_sequence(r, Vec::new(), q)
    }

    /// Delta measure at the identity matrix: `r = ∅`, `c = (1)`.
    pub fn delta(q: Rational) -> Result<Self> {
        Self::new(Vec::new(), vec![Rational::one()], q)
    }

    /// `r = (1)`, `c = ∅`: every corner is a single Jordan block.
    pub fn single_row(q: Rational) -> Result<Self> {
        Self::new(vec![Rational::one()], Vec::new(), q)
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn r(&self) -> &Sequence {
        &self.r
    }

    pub fn c(&self) -> &[Rational] {
        &self.c
    }

    fn kind(&self) -> Kind {
        let c_empty = self.c.iter().all(Zero::is_zero);
        let one = Rational::one();
        match &self.r {
            Sequence::Spread { base, q } if c_empty && q == &self.q && base[..] == [one.clone()] => {
                Kind::Haar
            }
            r if r.is_empty() && self.c.first() == Some(&one) => Kind::Delta,
            Sequence::Explicit(v) if c_empty && v.first() == Some(&one) => Kind::SingleRow,
            _ => Kind::General,
        }
    }

    /// `Sp_{r, c^{(q)}, 1}`.
    pub fn specialization(&self) -> Result<Specialization> {
        let beta = Sequence::spread(self.c.clone(), self.q.clone())?;
        Specialization::thoma(self.r.clone(), beta, Rational::one())
    }

    /// The `i`-th (1-based) predicted row and column frequencies.
    pub fn predicted(&self, count: usize) -> (Vec<Rational>, Vec<Rational>) {
        let mut c = self.c.clone();
        c.resize(count, Rational::zero());
        c.truncate(count);
        (largest_terms(&self.r, count), c)
    }
}

/// The `count` largest terms of a sequence, padded with zeros.
fn largest_terms(seq: &Sequence, count: usize) -> Vec<Rational> {
    let mut out = match seq {
        Sequence::Explicit(v) => v.clone(),
        Sequence::Spread { base, q } => {
            let first = Rational::one() - q.recip();
            let mut all: Vec<Rational> = base
                .iter()
                .flat_map(|x| {
                    let start = x * &first;
                    (0..count).map(move |j| &start * pow(q, -(j as i64)))
                })
                .collect();
            all.sort_by(|a, b| b.cmp(a));
            all
        }
    };
    out.resize(count, Rational::zero());
    out.truncate(count);
    out
}

/// Number `N_{λ,μ}` of one-step extensions of a unipotent matrix of type
/// `λ` whose type is `μ`.
pub fn extension_count(lambda: &Partition, mu: &Partition, q: &Rational) -> Result<Rational> {
    if mu.size() != lambda.size() + 1 {
        return Err(Error::SizeMismatch {
            left: lambda.to_string(),
            left_size: lambda.size(),
            right: mu.to_string(),
            right_size: mu.size(),
        });
    }
    let Some((_, j)) = lambda.added_box(mu) else {
        return Ok(Rational::zero());
    };
    let n = lambda.size() as i64;
    let col = lambda.column_length(j) as i64;
    let factor = if j == 1 {
        Rational::one()
    } else {
        let prev = lambda.column_length(j - 1) as i64;
        Rational::one() - pow(q, col - prev)
    };
    Ok(pow(q, n - col) * factor)
}

/// Haar transition probability `q^{-λ'_j} - q^{-λ'_{j-1}}` (second term
/// absent for `j = 1`).
fn haar_transition(lambda: &Partition, j: usize, q: &Rational) -> Rational {
    let here = pow(q, -(lambda.column_length(j) as i64));
    if j == 1 {
        here
    } else {
        here - pow(q, -(lambda.column_length(j - 1) as i64))
    }
}

/// A measure together with a memo of its cylinder probabilities.
pub struct CentralMeasure {
    params: MeasureParams,
    kind: Kind,
    spec: Specialization,
    cache: Mutex<HashMap<Partition, Rational>>,
}

impl CentralMeasure {
    pub fn new(params: MeasureParams) -> Result<Self> {
        let spec = params.specialization()?;
        Ok(CentralMeasure {
            kind: params.kind(),
            params,
            spec,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn params(&self) -> &MeasureParams {
        &self.params
    }

    /// Probability of the cylinder of one fixed matrix of Jordan type `λ`.
    pub fn cyl_prob(&self, lambda: &Partition) -> Result<Rational> {
        if let Some(v) = self.cache.lock().expect("poisoned").get(lambda) {
            return Ok(v.clone());
        }
        let q = &self.params.q;
        let n = lambda.size() as i64;
        let value = match self.kind {
            Kind::Haar => pow(q, -(n * (n - 1) / 2)),
            Kind::Delta => {
                if lambda.part(0) <= 1 {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }
            Kind::SingleRow => {
                if lambda.len() <= 1 {
                    let m = (n - 1).max(0);
                    pow(q, -(m * (m - 1) / 2)) / pow(&(q - Rational::one()), m)
                } else {
                    Rational::zero()
                }
            }
            Kind::General => self.cyl_prob_from_hl(lambda)?,
        };
        self.cache
            .lock()
            .expect("poisoned")
            .insert(lambda.clone(), value.clone());
        Ok(value)
    }

    /// The cylinder probability through the Hall–Littlewood expansion,
    /// regardless of any closed form.
    pub fn cyl_prob_from_hl(&self, lambda: &Partition) -> Result<Rational> {
        let q = &self.params.q;
        let n = lambda.size() as i64;
        let t = q.recip();
        let q_lambda = hl_q_in_p(lambda, &t)?;
        let prefactor = pow(q, -(n * (n - 1) / 2)) / pow(&(Rational::one() - &t), n)
            * pow(q, lambda.n_stat() as i64);
        Ok(prefactor * self.spec.specialize(&q_lambda))
    }

    /// `P(λ → μ)` for every `μ = λ + □`, in row order of the added box.
    pub fn transitions(&self, lambda: &Partition) -> Result<Vec<(Partition, Rational)>> {
        if self.kind != Kind::Haar {
            return self.transitions_via_cylinders(lambda);
        }
        Ok(lambda
            .addable_corners()
            .into_iter()
            .map(|(row, col)| {
                let mu = lambda.add_box(row).expect("addable corner");
                (mu, haar_transition(lambda, col, &self.params.q))
            })
            .collect())
    }

    /// `N_{λ,μ} · cyl(μ) / cyl(λ)` for every `μ = λ + □`.
    pub fn transitions_via_cylinders(&self, lambda: &Partition) -> Result<Vec<(Partition, Rational)>> {
        let q = &self.params.q;
        let here = self.cyl_prob(lambda)?;
        if here.is_zero() {
            return Err(Error::ZeroProbability(format!("{lambda:?}")));
        }
        lambda
            .successors()
            .into_iter()
            .map(|mu| {
                let p = extension_count(lambda, &mu, q)? * self.cyl_prob(&mu)? / &here;
                Ok((mu, p))
            })
            .collect()
    }

    pub fn transition_prob(&self, lambda: &Partition, mu: &Partition) -> Result<Rational> {
        if mu.size() != lambda.size() + 1 {
            return Err(Error::SizeMismatch {
                left: lambda.to_string(),
                left_size: lambda.size(),
                right: mu.to_string(),
                right_size: mu.size(),
            });
        }
        Ok(self
            .transitions(lambda)?
            .into_iter()
            .find(|(m, _)| m == mu)
            .map(|(_, p)| p)
            .unwrap_or_else(Rational::zero))
    }

    /// One growth step driven by a uniform variate `u / 2^64`.
    fn step(&self, lambda: &Partition, u: u64) -> Result<Partition> {
        let options = self.transitions(lambda)?;
        let scale = BigInt::one() << 64;
        let u = BigInt::from(u);
        let mut cumulative = Rational::zero();
        for (mu, p) in &options {
            if p.is_negative() {
                return Err(Error::ZeroProbability(format!(
                    "negative transition probability from {lambda:?}"
                )));
            }
            cumulative += p;
            // u / 2^64 < numer / denom
            if &u * cumulative.denom() < cumulative.numer() * &scale {
                return Ok(mu.clone());
            }
        }
        // Σ p = 1 exceeds every variate; reaching here means the row summed short
        Err(Error::ZeroProbability(format!(
            "transition probabilities from {lambda:?} sum to {}",
            format_rational(&cumulative)
        )))
    }

    fn trajectory_with(&self, n_max: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Partition>> {
        let mut out = Vec::with_capacity(n_max + 1);
        let mut lambda = Partition::empty();
        out.push(lambda.clone());
        for _ in 0..n_max {
            lambda = self.step(&lambda, rng.next_u64())?;
            out.push(lambda.clone());
        }
        Ok(out)
    }

    /// `λ⁰ = ∅, λ¹, …, λ^{n_max}` for trajectory stream `stream` of `seed`.
    pub fn sample_stream(&self, n_max: usize, seed: u64, stream: u64) -> Result<Vec<Partition>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        self.trajectory_with(n_max, &mut rng)
    }

    /// Final Jordan type only, without retaining the path.
    fn sample_final(&self, n_max: usize, seed: u64, stream: u64) -> Result<Partition> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        let mut lambda = Partition::empty();
        for _ in 0..n_max {
            lambda = self.step(&lambda, rng.next_u64())?;
        }
        Ok(lambda)
    }
}

pub fn cyl_prob(params: &MeasureParams, lambda: &Partition) -> Result<Rational> {
    CentralMeasure::new(params.clone())?.cyl_prob(lambda)
}

/// `q^{-n(n-1)/2} q^{n(λ)} Sp[Q̃_λ(·; q⁻¹)]`.
pub fn cyl_prob_from_trace(sp: &Specialization, lambda: &Partition, q: &Rational) -> Result<Rational> {
    if !sp.gamma().is_one() {
        return Err(Error::InvalidSpecialization("γ must be 1".into()));
    }
    if *q <= Rational::one() {
        return Err(Error::param("q", format!("{q} must exceed 1")));
    }
    let n = lambda.size() as i64;
    let qt = modified_hl_q(lambda, &q.recip())?;
    Ok(pow(q, -(n * (n - 1) / 2)) * pow(q, lambda.n_stat() as i64) * sp.specialize(&qt))
}

pub fn transition_prob(params: &MeasureParams, lambda: &Partition, mu: &Partition) -> Result<Rational> {
    CentralMeasure::new(params.clone())?.transition_prob(lambda, mu)
}

pub fn sample_trajectory(params: &MeasureParams, n_max: usize, seed: u64) -> Result<Vec<Partition>> {
    CentralMeasure::new(params.clone())?.sample_stream(n_max, seed, 0)
}

/// Number of rows `i` reported for each statistic.
pub const LLN_ROWS: usize = 4;

#[derive(Clone, Debug, PartialEq)]
pub struct LlnRow {
    pub statistic: String,
    pub i: usize,
    pub empirical: f64,
    pub predicted: Rational,
    pub stderr: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LlnReport {
    pub rows: Vec<LlnRow>,
}

impl LlnReport {
    pub fn get(&self, statistic: &str, i: usize) -> Option<&LlnRow> {
        self.rows.iter().find(|r| r.statistic == statistic && r.i == i)
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
        w.write_record(["statistic", "i", "empirical", "predicted", "stderr"])
            .expect("in-memory write");
        for r in &self.rows {
            w.write_record([
                r.statistic.clone(),
                r.i.to_string(),
                format!("{:.6}", r.empirical),
                format_rational(&r.predicted),
                format!("{:.6}", r.stderr),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }
}

/// Mean of `λ_i/n` and `λ'_i/n` at `n = n_max` over `trials` independent
/// trajectories; trajectory `k` uses stream `k` of `seed`.
pub fn lln_experiment(params: &MeasureParams, n_max: usize, trials: usize, seed: u64) -> Result<LlnReport> {
    if trials == 0 {
        return Err(Error::param("trials", "must be at least 1"));
    }
    if n_max == 0 {
        return Err(Error::param("n_max", "must be at least 1"));
    }
    let measure = CentralMeasure::new(params.clone())?;
    let mut rows_samples: Vec<Vec<f64>> = (0..LLN_ROWS).map(|_| Vec::with_capacity(trials)).collect();
    let mut cols_samples: Vec<Vec<f64>> = (0..LLN_ROWS).map(|_| Vec::with_capacity(trials)).collect();
    for trial in 0..trials {
        let lambda = measure.sample_final(n_max, seed, trial as u64)?;
        let n = n_max as f64;
        for i in 0..LLN_ROWS {
            rows_samples[i].push(lambda.part(i) as f64 / n);
            cols_samples[i].push(lambda.column_length(i + 1) as f64 / n);
        }
    }
    let (pred_r, pred_c) = params.predicted(LLN_ROWS);
    let mut rows = Vec::new();
    for (name, samples, predicted) in [
        ("lambda", &rows_samples, &pred_r),
        ("lambda'", &cols_samples, &pred_c),
    ] {
        for i in 0..LLN_ROWS {
            let (mean, stderr) = mean_and_stderr(&samples[i]);
            rows.push(LlnRow {
                statistic: format!("{name}_{}/n", i + 1),
                i: i + 1,
                empirical: mean,
                predicted: predicted[i].clone(),
                stderr,
            });
        }
    }
    Ok(LlnReport { rows })
}

fn mean_and_stderr(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn general(r: &[Rational], c: &[Rational], q: i64) -> CentralMeasure {
        CentralMeasure::new(MeasureParams::new(r.to_vec(), c.to_vec(), int(q)).unwrap()).unwrap()
    }

    #[test]
    fn extension_count_examples() {
        for q in [int(2), int(3), frac(7, 3)] {
            assert_eq!(extension_count(&Partition::empty(), &p("1"), &q).unwrap(), int(1));
        }
        let q = int(2);
        assert_eq!(extension_count(&p("1"), &p("2"), &q).unwrap(), int(1));
        assert_eq!(extension_count(&p("1"), &p("1,1"), &q).unwrap(), int(1));
        assert_eq!(extension_count(&p("2"), &p("1,1,1"), &q).unwrap(), int(0));
        assert!(extension_count(&p("2"), &p("2"), &q).is_err());
    }

    #[test]
    fn extension_counts_sum_to_q_to_the_n() {
        for q in [int(2), int(3), int(5)] {
            for lam in Partition::up_to(8) {
                let total: Rational = lam
                    .successors()
                    .iter()
                    .map(|mu| extension_count(&lam, mu, &q).unwrap())
                    .sum();
                assert_eq!(total, pow(&q, lam.size() as i64));
            }
        }
    }

    #[test]
    fn haar_closed_form_matches_hl() {
        for q in [int(2), int(3)] {
            let m = CentralMeasure::new(MeasureParams::haar(q.clone()).unwrap()).unwrap();
            for lam in Partition::up_to(6) {
                assert_eq!(m.cyl_prob(&lam).unwrap(), m.cyl_prob_from_hl(&lam).unwrap());
            }
        }
    }

    #[test]
    fn delta_and_single_row_closed_forms_match_hl() {
        for q in [int(2), int(3)] {
            for params in [
                MeasureParams::delta(q.clone()).unwrap(),
                MeasureParams::single_row(q.clone()).unwrap(),
            ] {
                let m = CentralMeasure::new(params).unwrap();
                for lam in Partition::up_to(6) {
                    assert_eq!(m.cyl_prob(&lam).unwrap(), m.cyl_prob_from_hl(&lam).unwrap());
                }
            }
        }
    }

    #[test]
    fn haar_transitions_match_generic_ratio() {
        let q = int(3);
        let m = CentralMeasure::new(MeasureParams::haar(q.clone()).unwrap()).unwrap();
        for lam in Partition::up_to(6) {
            for (mu, prob) in m.transitions(&lam).unwrap() {
                let generic = extension_count(&lam, &mu, &q).unwrap() * m.cyl_prob(&mu).unwrap()
                    / m.cyl_prob(&lam).unwrap();
                assert_eq!(prob, generic);
            }
        }
    }

    #[test]
    fn cyl_examples() {
        for params in [
            MeasureParams::haar(int(2)).unwrap(),
            MeasureParams::delta(int(2)).unwrap(),
            MeasureParams::new(vec![frac(1, 4)], vec![frac(1, 4)], int(3)).unwrap(),
        ] {
            assert_eq!(cyl_prob(&params, &p("1")).unwrap(), int(1));
            assert_eq!(cyl_prob(&params, &Partition::empty()).unwrap(), int(1));
        }
        let delta = MeasureParams::delta(int(2)).unwrap();
        assert_eq!(cyl_prob(&delta, &p("1,1,1")).unwrap(), int(1));
        assert_eq!(cyl_prob(&delta, &p("2,1")).unwrap(), int(0));
    }

    #[test]
    fn from_trace_examples() {
        let triv = Specialization::trivial();
        assert_eq!(cyl_prob_from_trace(&triv, &p("1"), &int(2)).unwrap(), int(1));
        assert_eq!(cyl_prob_from_trace(&triv, &p("1,1"), &int(2)).unwrap(), frac(1, 2));
    }

    #[test]
    fn transition_examples() {
        let q = int(2);
        let haar = MeasureParams::haar(q.clone()).unwrap();
        assert_eq!(transition_prob(&haar, &p("1"), &p("2")).unwrap(), frac(1, 2));
        assert_eq!(transition_prob(&haar, &p("1"), &p("1,1")).unwrap(), frac(1, 2));
        let haar3 = MeasureParams::haar(int(3)).unwrap();
        assert_eq!(transition_prob(&haar3, &p("1"), &p("2")).unwrap(), frac(2, 3));
        let delta = MeasureParams::delta(q.clone()).unwrap();
        assert_eq!(transition_prob(&delta, &p("1,1"), &p("1,1,1")).unwrap(), int(1));
        assert!(matches!(
            transition_prob(&delta, &p("2"), &p("3")),
            Err(Error::ZeroProbability(_))
        ));
        let mixed = MeasureParams::new(vec![frac(1, 4)], vec![frac(1, 4)], q).unwrap();
        assert_eq!(transition_prob(&mixed, &Partition::empty(), &p("1")).unwrap(), int(1));
    }

    #[test]
    fn general_rows_sum_to_one() {
        let m = general(&[frac(1, 4)], &[frac(1, 4)], 2);
        for lam in Partition::up_to(6) {
            let total: Rational = m.transitions(&lam).unwrap().into_iter().map(|(_, p)| p).sum();
            assert_eq!(total, int(1), "{lam:?}");
        }
    }

    #[test]
    fn deterministic_trajectories() {
        let delta = MeasureParams::delta(int(2)).unwrap();
        let t = sample_trajectory(&delta, 5, 9).unwrap();
        for (k, lam) in t.iter().enumerate() {
            assert_eq!(*lam, Partition::column(k));
        }
        let row = MeasureParams::single_row(int(3)).unwrap();
        let t = sample_trajectory(&row, 40, 1).unwrap();
        for (k, lam) in t.iter().enumerate() {
            assert_eq!(*lam, Partition::row(k));
        }
        let haar = MeasureParams::haar(int(2)).unwrap();
        assert_eq!(
            sample_trajectory(&haar, 50, 7).unwrap(),
            sample_trajectory(&haar, 50, 7).unwrap()
        );
    }

    #[test]
    fn general_sampling_beyond_cap_is_rejected() {
        let mixed = MeasureParams::new(vec![frac(1, 4)], vec![frac(1, 4)], int(2)).unwrap();
        assert!(matches!(
            sample_trajectory(&mixed, 20, 3),
            Err(Error::DegreeCapExceeded { .. })
        ));
    }

    #[test]
    fn params_validation() {
        assert!(MeasureParams::new(vec![frac(3, 4)], vec![frac(1, 2)], int(2)).is_err());
        assert!(MeasureParams::new(vec![frac(1, 4), frac(1, 2)], vec![], int(2)).is_err());
        assert!(MeasureParams::new(vec![], vec![], int(1)).is_err());
    }

    #[test]
    fn predicted_haar_frequencies() {
        let (r, c) = MeasureParams::haar(int(2)).unwrap().predicted(3);
        assert_eq!(r, vec![frac(1, 2), frac(1, 4), frac(1, 8)]);
        assert_eq!(c, vec![int(0); 3]);
    }

    #[test]
    fn lln_deterministic_chains() {
        let delta = MeasureParams::delta(int(2)).unwrap();
        let rep = lln_experiment(&delta, 30, 3, 5).unwrap();
        assert_eq!(rep.get("lambda'_1/n", 1).unwrap().empirical, 1.0);
        assert_eq!(rep.get("lambda_1/n", 1).unwrap().empirical, 1.0 / 30.0);
        let row = MeasureParams::single_row(int(2)).unwrap();
        let rep = lln_experiment(&row, 30, 3, 5).unwrap();
        assert_eq!(rep.get("lambda_1/n", 1).unwrap().empirical, 1.0);
        assert_eq!(rep.get("lambda_1/n", 1).unwrap().predicted, int(1));
    }

    #[test]
    fn lln_is_reproducible() {
        let haar = MeasureParams::haar(int(2)).unwrap();
        let a = lln_experiment(&haar, 100, 10, 42).unwrap().to_csv();
        let b = lln_experiment(&haar, 100, 10, 42).unwrap().to_csv();
        assert_eq!(a, b);
        assert!(a.starts_with("statistic,i,empirical,predicted,stderr\nlambda_1/n,1,"));
    }
}
