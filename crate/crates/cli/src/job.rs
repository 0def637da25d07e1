//! Job descriptions and their execution. The command-line flags and the
//! `run` subcommand both end up here.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value as Json};

use schurzeta::formal::{self, GiambelliVariant, HookVariant};
use schurzeta::mzv;
use schurzeta::root_zeta::{self, RootVariant, RootZetaArgs};
use schurzeta::schur::{self, VariableTableau};
use schurzeta::verify::{self, Identity, VerifyReport};
use schurzeta::{Complex64, ContentAssignment, EvalResult, Partition, TruncationConfig};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Plain,
    Json,
    Latex,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ExpandTarget {
    Hook { p: usize, q: usize, variant: HookVariant },
    Giambelli {
        shape: Partition,
        #[serde(default)]
        variant: GiambelliVariant,
        /// Collect like terms instead of listing the raw permutation sum.
        #[serde(default)]
        collect: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Command {
    EvalSchur {
        tableau: VariableTableau,
    },
    EvalMzv {
        args: Vec<Complex64>,
        #[serde(default)]
        star: bool,
    },
    EvalRootzeta {
        root: RootZetaArgs,
        function: RootVariant,
    },
    Expand {
        target: ExpandTarget,
    },
    Verify {
        identity: Identity,
        #[serde(default)]
        z: ContentAssignment,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub command: Command,
    #[serde(default)]
    pub cfg: TruncationConfig,
    #[serde(default)]
    pub output: OutputFormat,
    #[serde(default = "one")]
    pub threads: usize,
}

fn one() -> usize {
    1
}

/// Parses a job, naming the offending field on failure.
pub fn parse_job(text: &str) -> Result<JobSpec, String> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        if path == "." {
            format!("invalid job: {}", e.inner())
        } else {
            format!("invalid job at `{path}`: {}", e.inner())
        }
    })
}

pub enum Outcome {
    Eval(EvalResult),
    Expand { terms: Vec<formal::FormalTerm>, collected: bool },
    Verify(Box<VerifyReport>),
}

impl Outcome {
    fn to_json(&self) -> Json {
        match self {
            Outcome::Eval(r) => serde_json::to_value(r).unwrap(),
            Outcome::Expand { terms, collected } => json!({
                "term_count": terms.len(),
                "collected": collected,
                "terms": terms,
                "latex": formal::terms_to_latex(terms),
            }),
            Outcome::Verify(r) => serde_json::to_value(r.as_ref()).unwrap(),
        }
    }

    fn to_plain(&self) -> String {
        match self {
            Outcome::Eval(r) => eval_lines(r, ""),
            Outcome::Expand { terms, collected } => format!(
                "terms: {}{}\n{}\n",
                terms.len(),
                if *collected { " (collected)" } else { " (before collection)" },
                formal::terms_to_string(terms)
            ),
            Outcome::Verify(r) => {
                let mut s = format!("identity: {}\n", r.identity);
                s += &eval_lines(&r.lhs, "lhs ");
                s += &eval_lines(&r.rhs, "rhs ");
                s += &format!("difference: {}\n", r.difference);
                s += &format!("comparison: {}\n", serde_json::to_value(r.comparison).unwrap().as_str().unwrap());
                if r.allowed > 0.0 {
                    s += &format!("allowed: {:e}\n", r.allowed);
                }
                s += &format!("equal: {}\n", r.equal);
                s
            }
        }
    }

    pub fn failed_verification(&self) -> bool {
        matches!(self, Outcome::Verify(r) if !r.equal)
    }
}

fn eval_lines(r: &EvalResult, prefix: &str) -> String {
    let mut s = format!("{prefix}value: {}\n", r.value);
    if let Some(q) = r.value.as_exact() {
        s += &format!("{prefix}approx: {:.15}\n", schurzeta::scalar::rational_to_f64(q));
    }
    match r.tail {
        schurzeta::Tail::None => s += &format!("{prefix}tail: none (exact truncated sum)\n"),
        t => s += &format!("{prefix}tail_bound: {:e} ({})\n", t.bound(), t.kind()),
    }
    s += &format!("{prefix}truncation: M = {}\n", r.truncation);
    for n in &r.notes {
        s += &format!("{prefix}note: {n}\n");
    }
    s
}

pub fn execute(job: &JobSpec) -> schurzeta::Result<Outcome> {
    let cfg = &job.cfg;
    Ok(match &job.command {
        Command::EvalSchur { tableau } => Outcome::Eval(schur::eval_schur(tableau, cfg)?),
        Command::EvalMzv { args, star } => Outcome::Eval(mzv::eval_ez(args, cfg, *star)?),
        Command::EvalRootzeta { root, function } => {
            Outcome::Eval(root_zeta::eval_root_zeta(root, *function, cfg)?)
        }
        Command::Expand { target } => match target {
            ExpandTarget::Hook { p, q, variant } => Outcome::Expand {
                terms: formal::expand_hook(*p, *q, *variant).terms().to_vec(),
                collected: true,
            },
            ExpandTarget::Giambelli { shape, variant, collect } => {
                let terms = if *collect {
                    formal::expand_giambelli(shape, *variant)?.terms().to_vec()
                } else {
                    formal::expand_giambelli_raw(shape, *variant)?
                };
                Outcome::Expand { terms, collected: *collect }
            }
        },
        Command::Verify { identity, z } => Outcome::Verify(Box::new(verify::verify(identity, z, cfg)?)),
    })
}

pub struct Report {
    pub text: String,
    pub exit: i32,
}

/// Runs the job and renders the report in the requested format.
pub fn run(job: &JobSpec) -> Result<Report, String> {
    if job.output == OutputFormat::Latex && !matches!(job.command, Command::Expand { .. }) {
        return Err("latex output is only available for `expand`".into());
    }
    job.cfg.validate().map_err(|e| e.to_string())?;
    let t = Instant::now();
    let out = execute(job).map_err(|e| e.to_string())?;
    let wall = t.elapsed().as_secs_f64();
    let exit = if out.failed_verification() { 2 } else { 0 };
    let text = match job.output {
        OutputFormat::Json => {
            let report = json!({
                "schema": SCHEMA,
                "job": job,
                "result": out.to_json(),
                "wall_time_s": wall,
            });
            serde_json::to_string_pretty(&report).unwrap() + "\n"
        }
        OutputFormat::Plain => format!(
            "job: {}\n{}wall_time_s: {wall:.6}\n",
            serde_json::to_string(job).unwrap(),
            out.to_plain()
        ),
        OutputFormat::Latex => match &out {
            Outcome::Expand { terms, .. } => formal::terms_to_latex(terms) + "\n",
            _ => unreachable!(),
        },
    };
    Ok(Report { text, exit })
}
