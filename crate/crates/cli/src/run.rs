use unitrace::measures::{cyl_prob, lln_experiment, sample_trajectory};
use unitrace::oracle::{families_enumerate, FqField};
use unitrace::rational::format_rational;
use unitrace::symfunc::tables::HL_DEGREE_CAP;
use unitrace::symfunc::{
    hl_p_in_p, hl_q_in_p, kostka, kostka_foulkes, modified_hl_q, schur_expand,
};
use unitrace::traces::{
    biregular_coefficient, glu_trace_coefficients, green_dimension, trace_coefficients,
    unipotent_trace_value,
};
use unitrace::verify::run_suite;
use unitrace::{Error, Partition, Result};

use crate::config::{Command, HlKind};
use crate::report::Report;

/// Result of a successful dispatch. `failed` is set when a verification
/// suite reported at least one failing row.
#[derive(Debug)]
pub struct Outcome {
    pub report: Report,
    pub failed: bool,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Self {
        Outcome {
            report,
            failed: false,
        }
    }
}

fn check_cap(degree: usize) -> Result<()> {
    if degree > HL_DEGREE_CAP {
        return Err(Error::DegreeCapExceeded {
            degree,
            cap: HL_DEGREE_CAP,
        });
    }
    Ok(())
}

pub fn execute(command: &Command) -> Result<Outcome> {
    let report = match command {
        Command::Dim { q, family } => Report::scalar(format_rational(&green_dimension(family, q)?)),
        Command::Kostka {
            shape,
            content,
            symbolic,
        } => {
            check_cap(shape.size())?;
            let value = |content: &Partition| -> Result<String> {
                Ok(if *symbolic {
                    kostka_foulkes(shape, content)?.to_string()
                } else {
                    kostka(shape, content)?.to_string()
                })
            };
            match content {
                Some(content) => Report::scalar(value(content)?),
                None => {
                    let mut r = Report::new(&["shape", "content", "value"]);
                    for mu in Partition::all(shape.size()) {
                        r.push(vec![shape.to_string(), mu.to_string(), value(&mu)?]);
                    }
                    r
                }
            }
        }
        Command::HlExpand { lambda, t, kind } => {
            let f = match kind {
                HlKind::P => hl_p_in_p(lambda, t)?,
                HlKind::Q => hl_q_in_p(lambda, t)?,
                HlKind::Modified => modified_hl_q(lambda, t)?,
            };
            let expansion = schur_expand(&f)?;
            let mut r = Report::new(&["mu", "coefficient"]);
            for mu in Partition::all(lambda.size()) {
                let c = expansion.get(&mu).cloned().unwrap_or_default();
                r.push(vec![mu.to_string(), format_rational(&c)]);
            }
            r
        }
        Command::Trace { q, sp, class } => {
            Report::scalar(format_rational(&unipotent_trace_value(sp, class, q)?))
        }
        Command::Coeffs { sp, n } => {
            check_cap(*n)?;
            let mut r = Report::new(&["lambda", "coefficient"]);
            let coeffs = trace_coefficients(sp, *n)?;
            for lambda in Partition::all(*n) {
                let c = coeffs.get(&lambda).cloned().unwrap_or_default();
                r.push(vec![lambda.to_string(), format_rational(&c)]);
            }
            r
        }
        Command::GluCoeffs { params, n } => {
            check_cap(*n)?;
            let mut columns: Vec<&str> = params.tags().collect();
            columns.push("coefficient");
            let mut r = Report::new(&columns);
            for (key, c) in glu_trace_coefficients(params, *n) {
                let mut row: Vec<String> = key.iter().map(Partition::to_string).collect();
                row.push(format_rational(&c));
                r.push(row);
            }
            r
        }
        Command::Biregular { q, max_size } => {
            let field = FqField::get(*q)?;
            let qr = unitrace::rational::int((*q).into());
            let mut r = Report::new(&["size", "family", "coefficient"]);
            for m in 0..=*max_size {
                for f in families_enumerate(field, m) {
                    if f.unit().is_some() {
                        continue;
                    }
                    let c = biregular_coefficient(&f, &qr)?;
                    r.push(vec![m.to_string(), f.to_json(), format_rational(&c)]);
                }
            }
            r
        }
        Command::Cyl { params, lambda } => Report::scalar(format_rational(&cyl_prob(params, lambda)?)),
        Command::Sample { params, nmax, seed } => {
            let mut r = Report::new(&["n", "lambda"]);
            for (n, lambda) in sample_trajectory(params, *nmax, *seed)?.iter().enumerate() {
                r.push(vec![n.to_string(), lambda.to_string()]);
            }
            r
        }
        Command::Lln {
            params,
            nmax,
            trials,
            seed,
        } => {
            let mut r = Report::new(&["statistic", "i", "empirical", "predicted", "stderr"]);
            for row in lln_experiment(params, *nmax, *trials, *seed)?.rows {
                r.push(vec![
                    row.statistic,
                    row.i.to_string(),
                    format!("{:.6}", row.empirical),
                    format_rational(&row.predicted),
                    format!("{:.6}", row.stderr),
                ]);
            }
            r
        }
        Command::Verify { suites } => {
            let mut r = Report::new(&["suite", "identity", "instance", "left", "right", "result"]);
            let mut failed = false;
            for name in suites {
                let rep = run_suite(name)?;
                failed |= !rep.passed();
                for row in rep.rows {
                    r.push(vec![
                        rep.suite.clone(),
                        row.identity,
                        row.instance,
                        row.left,
                        row.right,
                        if row.pass { "pass" } else { "fail" }.into(),
                    ]);
                }
            }
            return Ok(Outcome { report: r, failed });
        }
    };
    Ok(report.into())
}
