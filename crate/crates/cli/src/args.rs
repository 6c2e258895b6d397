use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::config::{Format, RunConfig};

#[derive(Parser, Debug)]
#[command(
    name = "unitrace",
    version,
    about = "Exact unipotent traces, Hall-Littlewood specializations and central measures",
    args_conflicts_with_subcommands = true
)]
pub struct Cli {
    /// Read the whole invocation from a JSON run configuration.
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,

    #[command(subcommand)]
    pub command: Option<Sub>,
}

#[derive(Args, Debug, Default)]
pub struct SpecArgs {
    /// Comma-separated decreasing rationals; empty for none.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
    /// Defaults to 1.
    #[arg(long)]
    pub gamma: Option<String>,
}

#[derive(Args, Debug, Default)]
pub struct MeasureArgs {
    #[arg(long)]
    pub q: String,
    /// haar, delta, single-row or general.
    #[arg(long, default_value = "general")]
    pub measure: String,
    /// Row frequencies for a general measure.
    #[arg(long)]
    pub r: Option<String>,
    /// Column frequencies for a general measure.
    #[arg(long)]
    pub c: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Sub {
    /// Dimension of the irreducible representation indexed by a family.
    Dim {
        #[arg(long)]
        q: String,
        /// JSON list of {"tag","d","lambda"} blocks.
        #[arg(long)]
        family: String,
    },
    /// Kostka number; omit --content for the whole row.
    Kostka {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        content: Option<String>,
    },
    /// Kostka-Foulkes polynomial; omit --content for the whole row.
    KostkaFoulkes {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        content: Option<String>,
    },
    /// Schur expansion of a Hall-Littlewood function at rational t.
    HlExpand {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        t: String,
        /// p, q or modified.
        #[arg(long, default_value = "modified")]
        kind: String,
    },
    /// Unipotent trace value on a class.
    Trace {
        #[arg(long)]
        q: String,
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        class: String,
    },
    /// Expansion coefficients of a trace in degree n.
    Coeffs {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        spec: SpecArgs,
        /// JSON list of {"tag","alpha","beta","gamma"} for the multi-tag variant.
        #[arg(long)]
        glu: Option<String>,
        /// Background family for the multi-tag variant.
        #[arg(long)]
        family: Option<String>,
    },
    /// Coefficients C(f) of the biregular trace for |f| up to --max-size.
    Biregular {
        #[arg(long)]
        q: String,
        #[arg(long, default_value_t = 2)]
        max_size: usize,
    },
    /// Cylinder probability of a Jordan type.
    Cyl {
        #[command(flatten)]
        measure: MeasureArgs,
        #[arg(long)]
        lambda: String,
    },
    /// One trajectory of the growth chain.
    Sample {
        #[command(flatten)]
        measure: MeasureArgs,
        #[arg(long)]
        nmax: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Monte Carlo row and column frequencies.
    Lln {
        #[command(flatten)]
        measure: MeasureArgs,
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run a named verification suite, or "all".
    Verify { suite: String },
}

fn with_spec(mut cfg: RunConfig, spec: SpecArgs) -> RunConfig {
    cfg.alpha = spec.alpha;
    cfg.beta = spec.beta;
    cfg.gamma = spec.gamma;
    cfg
}

fn with_measure(mut cfg: RunConfig, m: MeasureArgs) -> RunConfig {
    cfg.q = Some(m.q);
    cfg.measure = Some(m.measure);
    cfg.r = m.r;
    cfg.c = m.c;
    cfg
}

impl Sub {
    pub fn name(&self) -> &'static str {
        match self {
            Sub::Dim { .. } => "dim",
            Sub::Kostka { .. } => "kostka",
            Sub::KostkaFoulkes { .. } => "kostka-foulkes",
            Sub::HlExpand { .. } => "hl-expand",
            Sub::Trace { .. } => "trace",
            Sub::Coeffs { .. } => "coeffs",
            Sub::Biregular { .. } => "biregular",
            Sub::Cyl { .. } => "cyl",
            Sub::Sample { .. } => "sample",
            Sub::Lln { .. } => "lln",
            Sub::Verify { .. } => "verify",
        }
    }

    pub fn into_config(self) -> RunConfig {
        let cfg = RunConfig {
            command: self.name().to_string(),
            ..RunConfig::default()
        };
        match self {
            Sub::Dim { q, family } => RunConfig {
                q: Some(q),
                family: Some(family),
                ..cfg
            },
            Sub::Kostka { shape, content } | Sub::KostkaFoulkes { shape, content } => RunConfig {
                shape: Some(shape),
                content,
                ..cfg
            },
            Sub::HlExpand { lambda, t, kind } => RunConfig {
                lambda: Some(lambda),
                t: Some(t),
                kind: Some(kind),
                ..cfg
            },
            Sub::Trace { q, spec, class } => with_spec(
                RunConfig {
                    q: Some(q),
                    class: Some(class),
                    ..cfg
                },
                spec,
            ),
            Sub::Coeffs {
                n,
                spec,
                glu,
                family,
            } => with_spec(
                RunConfig {
                    n: Some(n),
                    glu,
                    family,
                    ..cfg
                },
                spec,
            ),
            Sub::Biregular { q, max_size } => RunConfig {
                q: Some(q),
                max_size: Some(max_size),
                ..cfg
            },
            Sub::Cyl { measure, lambda } => with_measure(
                RunConfig {
                    lambda: Some(lambda),
                    ..cfg
                },
                measure,
            ),
            Sub::Sample {
                measure,
                nmax,
                seed,
            } => with_measure(
                RunConfig {
                    nmax: Some(nmax),
                    seed: Some(seed),
                    ..cfg
                },
                measure,
            ),
            Sub::Lln {
                measure,
                nmax,
                trials,
                seed,
            } => with_measure(
                RunConfig {
                    nmax: Some(nmax),
                    trials: Some(trials),
                    seed: Some(seed),
                    ..cfg
                },
                measure,
            ),
            Sub::Verify { suite } => RunConfig {
                suite: Some(suite),
                ..cfg
            },
        }
    }
}

impl Cli {
    /// Resolves flags or a configuration file into a [`RunConfig`]. A
    /// `--format` flag overrides the file's format.
    pub fn into_config(self) -> Result<RunConfig, String> {
        let mut cfg = match (self.config, self.command) {
            (Some(path), _) => {
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
                RunConfig::from_json(&text).map_err(|e| e.to_string())?
            }
            (None, Some(sub)) => sub.into_config(),
            (None, None) => return Err("a subcommand or --config is required".into()),
        };
        if self.format.is_some() {
            cfg.format = self.format;
        }
        Ok(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn clap_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn flags_map_onto_config() {
        let cli = Cli::try_parse_from(["unitrace", "lln", "--q", "2", "--measure", "haar", "--nmax", "5", "--trials", "3"])
            .unwrap();
        let cfg = cli.into_config().unwrap();
        assert_eq!(cfg.command, "lln");
        assert_eq!(cfg.trials, Some(3));
        assert_eq!(cfg.seed, Some(0));
        assert!(Cli::try_parse_from(["unitrace", "--config", "x.json", "dim"]).is_err());
    }
}
