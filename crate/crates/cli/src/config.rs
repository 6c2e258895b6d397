use serde::{Deserialize, Serialize};

use unitrace::measures::MeasureParams;
use unitrace::rational::parse_rational;
use unitrace::symfunc::Specialization;
use unitrace::traces::{FamilyOfDiagrams, GLUTraceParams};
use unitrace::verify::suite_names;
use unitrace::{Error, Partition, Rational, Result};

/// Output encoding of a report.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
#[derive(clap::ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// A complete invocation, either read from a JSON file or assembled from
/// command-line flags. All values are kept as text until [`RunConfig::validate`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct RunConfig {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shape: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub content: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub glu: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub measure: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nmax: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub suite: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<Format>,
}

pub const COMMANDS: [&str; 11] = [
    "dim",
    "kostka",
    "kostka-foulkes",
    "hl-expand",
    "trace",
    "coeffs",
    "biregular",
    "cyl",
    "sample",
    "lln",
    "verify",
];

/// Upper bounds that keep a single invocation tractable.
pub const MAX_DEGREE: usize = 40;
pub const MAX_NMAX: usize = 100_000;
pub const MAX_TRIALS: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HlKind {
    P,
    Q,
    Modified,
}

#[derive(Clone, Debug)]
pub enum Command {
    Dim {
        q: Rational,
        family: FamilyOfDiagrams,
    },
    Kostka {
        shape: Partition,
        content: Option<Partition>,
        symbolic: bool,
    },
    HlExpand {
        lambda: Partition,
        t: Rational,
        kind: HlKind,
    },
    Trace {
        q: Rational,
        sp: Specialization,
        class: FamilyOfDiagrams,
    },
    Coeffs {
        sp: Specialization,
        n: usize,
    },
    GluCoeffs {
        params: GLUTraceParams,
        n: usize,
    },
    Biregular {
        q: u32,
        max_size: usize,
    },
    Cyl {
        params: MeasureParams,
        lambda: Partition,
    },
    Sample {
        params: MeasureParams,
        nmax: usize,
        seed: u64,
    },
    Lln {
        params: MeasureParams,
        nmax: usize,
        trials: usize,
        seed: u64,
    },
    Verify {
        suites: Vec<String>,
    },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GluEntry {
    tag: String,
    #[serde(default)]
    alpha: String,
    #[serde(default)]
    beta: String,
    gamma: String,
}

fn invalid(field: &'static str, e: Error) -> Error {
    Error::param(field, e.to_string())
}

fn missing(field: &'static str) -> Error {
    Error::param(field, "required")
}

fn rational(field: &'static str, s: &str) -> Result<Rational> {
    parse_rational(s).map_err(|e| invalid(field, e))
}

/// Comma-separated rationals; the empty string is the empty list.
fn rationals(field: &'static str, s: &str) -> Result<Vec<Rational>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|x| rational(field, x)).collect()
}

fn partition(field: &'static str, s: &str) -> Result<Partition> {
    let p: Partition = s.parse().map_err(|e| invalid(field, e))?;
    if p.size() > MAX_DEGREE {
        return Err(Error::param(field, format!("size {} exceeds {MAX_DEGREE}", p.size())));
    }
    Ok(p)
}

fn family(field: &'static str, s: &str) -> Result<FamilyOfDiagrams> {
    let f = FamilyOfDiagrams::from_json(s).map_err(|e| invalid(field, e))?;
    if f.degree() > MAX_DEGREE {
        return Err(Error::param(field, format!("degree {} exceeds {MAX_DEGREE}", f.degree())));
    }
    Ok(f)
}

fn bounded(field: &'static str, value: usize, max: usize) -> Result<usize> {
    if value > max {
        return Err(Error::param(field, format!("{value} exceeds {max}")));
    }
    Ok(value)
}

fn specialization(alpha: &[Rational], beta: &[Rational], gamma: &Rational) -> Result<Specialization> {
    Specialization::finite(alpha.to_vec(), beta.to_vec(), gamma.clone())
        .map_err(|e| invalid("alpha, beta, gamma", e))
}

fn glu(s: &str, background: FamilyOfDiagrams) -> Result<GLUTraceParams> {
    let entries: Vec<GluEntry> =
        serde_json::from_str(s).map_err(|e| Error::param("glu", e.to_string()))?;
    let mut triples = Vec::with_capacity(entries.len());
    for e in entries {
        let sp = specialization(
            &rationals("glu", &e.alpha)?,
            &rationals("glu", &e.beta)?,
            &rational("glu", &e.gamma)?,
        )?;
        triples.push((e.tag, sp));
    }
    GLUTraceParams::new(triples, background).map_err(|e| invalid("glu", e))
}

impl RunConfig {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn format(&self) -> Format {
        self.format.unwrap_or_default()
    }

    /// Parses every supplied field, then assembles the command.
    pub fn validate(&self) -> Result<Command> {
        let q = self.q.as_deref().map(|s| rational("q", s)).transpose()?;
        if let Some(q) = &q {
            if *q <= Rational::from_integer(1.into()) {
                return Err(Error::param("q", "must exceed 1"));
            }
        }
        let family_v = self.family.as_deref().map(|s| family("family", s)).transpose()?;
        let class = self.class.as_deref().map(|s| family("class", s)).transpose()?;
        let shape = self.shape.as_deref().map(|s| partition("shape", s)).transpose()?;
        let content = self.content.as_deref().map(|s| partition("content", s)).transpose()?;
        let lambda = self.lambda.as_deref().map(|s| partition("lambda", s)).transpose()?;
        let t = self.t.as_deref().map(|s| rational("t", s)).transpose()?;
        let alpha = self.alpha.as_deref().map(|s| rationals("alpha", s)).transpose()?;
        let beta = self.beta.as_deref().map(|s| rationals("beta", s)).transpose()?;
        let gamma = self.gamma.as_deref().map(|s| rational("gamma", s)).transpose()?;
        let r = self.r.as_deref().map(|s| rationals("r", s)).transpose()?;
        let c = self.c.as_deref().map(|s| rationals("c", s)).transpose()?;
        let n = self.n.map(|v| bounded("n", v, MAX_DEGREE)).transpose()?;
        let max_size = self.max_size.map(|v| bounded("max-size", v, 8)).transpose()?;
        let nmax = self.nmax.map(|v| bounded("nmax", v, MAX_NMAX)).transpose()?;
        let trials = self.trials.map(|v| bounded("trials", v, MAX_TRIALS)).transpose()?;
        let kind = match self.kind.as_deref() {
            None | Some("modified") => HlKind::Modified,
            Some("q") => HlKind::Q,
            Some("p") => HlKind::P,
            Some(other) => {
                return Err(Error::param("kind", format!("{other:?} is not one of p, q, modified")))
            }
        };
        if let Some(suite) = &self.suite {
            if suite != "all" && !suite_names().any(|s| s == suite) {
                return Err(Error::param("suite", format!("unknown suite {suite:?}")));
            }
        }

        let one = Rational::from_integer(1.into());
        let sp = || -> Result<Specialization> {
            specialization(
                alpha.as_deref().unwrap_or(&[]),
                beta.as_deref().unwrap_or(&[]),
                gamma.as_ref().unwrap_or(&one),
            )
        };
        let measure = || -> Result<MeasureParams> {
            let q = q.clone().ok_or_else(|| missing("q"))?;
            let built = match self.measure.as_deref().unwrap_or("general") {
                "haar" => MeasureParams::haar(q),
                "delta" => MeasureParams::delta(q),
                "single-row" => MeasureParams::single_row(q),
                "general" => MeasureParams::new(
                    r.clone().unwrap_or_default(),
                    c.clone().unwrap_or_default(),
                    q,
                ),
                other => {
                    return Err(Error::param(
                        "measure",
                        format!("{other:?} is not one of haar, delta, single-row, general"),
                    ))
                }
            };
            built.map_err(|e| invalid("measure", e))
        };
        let need_q = || q.clone().ok_or_else(|| missing("q"));

        Ok(match self.command.as_str() {
            "dim" => Command::Dim {
                q: need_q()?,
                family: family_v.ok_or_else(|| missing("family"))?,
            },
            "kostka" | "kostka-foulkes" => {
                let shape = shape.ok_or_else(|| missing("shape"))?;
                if let Some(content) = &content {
                    if content.size() != shape.size() {
                        return Err(Error::param("content", "size differs from shape"));
                    }
                }
                Command::Kostka {
                    shape,
                    content,
                    symbolic: self.command == "kostka-foulkes",
                }
            }
            "hl-expand" => Command::HlExpand {
                lambda: lambda.ok_or_else(|| missing("lambda"))?,
                t: t.ok_or_else(|| missing("t"))?,
                kind,
            },
            "trace" => Command::Trace {
                q: need_q()?,
                sp: sp()?,
                class: class.ok_or_else(|| missing("class"))?,
            },
            "coeffs" => {
                let n = n.ok_or_else(|| missing("n"))?;
                match &self.glu {
                    Some(s) => Command::GluCoeffs {
                        params: glu(s, family_v.unwrap_or_default())?,
                        n,
                    },
                    None => Command::Coeffs { sp: sp()?, n },
                }
            }
            "biregular" => {
                let q = need_q()?;
                let q = if q.is_integer() {
                    u32::try_from(q.to_integer()).ok()
                } else {
                    None
                }
                .ok_or_else(|| Error::param("q", "must be a supported prime power"))?;
                Command::Biregular {
                    q,
                    max_size: max_size.unwrap_or(2),
                }
            }
            "cyl" => Command::Cyl {
                params: measure()?,
                lambda: lambda.ok_or_else(|| missing("lambda"))?,
            },
            "sample" => Command::Sample {
                params: measure()?,
                nmax: nmax.ok_or_else(|| missing("nmax"))?,
                seed: self.seed.unwrap_or(0),
            },
            "lln" => Command::Lln {
                params: measure()?,
                nmax: nmax.ok_or_else(|| missing("nmax"))?,
                trials: trials.ok_or_else(|| missing("trials"))?,
                seed: self.seed.unwrap_or(0),
            },
            "verify" => {
                let suite = self.suite.clone().ok_or_else(|| missing("suite"))?;
                let suites = if suite == "all" {
                    suite_names().map(String::from).collect()
                } else {
                    vec![suite]
                };
                Command::Verify { suites }
            }
            other => {
                return Err(Error::param(
                    "command",
                    format!("unknown command {other:?}; expected one of {}", COMMANDS.join(", ")),
                ))
            }
        })
    }
}
