//! `schurzeta`: evaluate Schur multiple zeta-functions, multiple zeta values
//! and root-system zeta-functions, expand the determinant formulas, and check
//! the identities between them.

mod job;

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use job::{Command, ExpandTarget, JobSpec, OutputFormat};
use schurzeta::formal::{GiambelliVariant, HookVariant};
use schurzeta::root_zeta::{RootVariant, RootZetaArgs};
use schurzeta::schur::{AntiHookArgs, VariableTableau};
use schurzeta::verify::Identity;
use schurzeta::{Complex64, ContentAssignment, Mode, Partition, SkewShape, TruncationConfig};

#[derive(Parser)]
#[command(name = "schurzeta", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Sub,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Truncation bound: every summation index and tableau entry is at most M.
    #[arg(long = "M", env = "SCHURZETA_M", default_value_t = schurzeta::eval::DEFAULT_M, global = true)]
    m: u64,
    /// Extra slack added to the tail estimates when comparing two sides.
    #[arg(long, env = "SCHURZETA_TOLERANCE", default_value_t = schurzeta::eval::DEFAULT_TOLERANCE, global = true)]
    tolerance: f64,
    #[arg(long, env = "SCHURZETA_MODE", value_enum, default_value_t = ModeArg::Floating, global = true)]
    mode: ModeArg,
    /// Shorthand for `--mode exact`.
    #[arg(long, global = true)]
    exact: bool,
    /// Extrapolate in 1/M (integer exponents ≥ 2 only; heuristic estimate).
    #[arg(long, global = true)]
    accelerate: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain, global = true)]
    format: OutputFormat,
    /// Worker threads for the data-parallel evaluators.
    #[arg(long, env = "SCHURZETA_THREADS", default_value_t = 1, global = true)]
    threads: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Floating,
}

#[derive(Args, Default)]
struct ZArgs {
    #[arg(long)]
    z0: Option<f64>,
    #[arg(long)]
    z1: Option<f64>,
    #[arg(long)]
    z2: Option<f64>,
    #[arg(long)]
    z3: Option<f64>,
    #[arg(long)]
    zm1: Option<f64>,
    #[arg(long)]
    zm2: Option<f64>,
    #[arg(long)]
    zm3: Option<f64>,
    /// Any content variable as `k=re` or `k=re,im`, e.g. `--z -4=2`. Repeatable.
    #[arg(long = "z", value_name = "K=VALUE", allow_hyphen_values = true)]
    extra: Vec<String>,
}

impl ZArgs {
    fn assignment(&self) -> Result<ContentAssignment, String> {
        let mut z = ContentAssignment::new();
        let named = [
            (0, self.z0),
            (1, self.z1),
            (2, self.z2),
            (3, self.z3),
            (-1, self.zm1),
            (-2, self.zm2),
            (-3, self.zm3),
        ];
        for (k, v) in named {
            if let Some(v) = v {
                z.set(k, v);
            }
        }
        for item in &self.extra {
            let (k, v) = item.split_once('=').ok_or_else(|| format!("--z expects K=VALUE, got `{item}`"))?;
            let k: i64 = k.trim().parse().map_err(|_| format!("bad content index in `{item}`"))?;
            z.set(k, parse_complex(v)?);
        }
        Ok(z)
    }
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').collect();
    let num = |t: &str| t.trim().parse::<f64>().map_err(|_| format!("bad number `{t}`"));
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(format!("bad complex value `{s}`")),
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    A,
    Bullet,
    H,
    BulletH,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExpandKind {
    Hook1,
    Hook2,
    Giambelli,
}

#[derive(Clone, Copy, ValueEnum)]
enum IdentityArg {
    Hook1,
    Hook2,
    Giambelli,
    Thm41,
    Thm41Reversed,
    Thm42,
    Antihook,
}

#[derive(Subcommand)]
enum Sub {
    /// Schur multiple zeta-function with content-parametrized variables.
    EvalSchur {
        #[arg(long, value_delimiter = ',', required = true)]
        shape: Vec<usize>,
        /// Inner shape for a skew diagram.
        #[arg(long, value_delimiter = ',')]
        inner: Vec<usize>,
        #[command(flatten)]
        z: ZArgs,
    },
    /// Euler-Zagier ζ(s_1, .., s_r), or ζ★ with --star; s_1 is innermost.
    EvalMzv {
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        args: Vec<f64>,
        #[arg(long)]
        star: bool,
    },
    /// Zeta-function of the root system A_r and its modified variants.
    EvalRootzeta {
        #[arg(long)]
        rank: Option<usize>,
        /// Root variables in canonical order, or s(1,2)..s(1,r+1) with --first-row.
        #[arg(long, value_delimiter = ',', required = true)]
        values: Vec<f64>,
        #[arg(long)]
        first_row: bool,
        #[arg(long, value_enum, default_value_t = VariantArg::A)]
        variant: VariantArg,
        #[arg(long, default_value_t = 0)]
        d: usize,
        #[arg(long)]
        x: Option<f64>,
    },
    /// Expand a hook formula or the Giambelli permutation sum.
    Expand {
        #[arg(value_enum)]
        target: ExpandKind,
        #[arg(long, default_value_t = 0)]
        p: usize,
        #[arg(long, default_value_t = 0)]
        q: usize,
        #[arg(long, value_delimiter = ',')]
        shape: Vec<usize>,
        /// Use the second hook formula in every entry.
        #[arg(long)]
        reversed: bool,
        /// Collect like terms.
        #[arg(long)]
        collect: bool,
    },
    /// Evaluate both sides of an identity and compare them.
    Verify {
        #[arg(value_enum)]
        identity: IdentityArg,
        #[arg(long, default_value_t = 0)]
        p: usize,
        #[arg(long, default_value_t = 0)]
        q: usize,
        #[arg(long, value_delimiter = ',')]
        shape: Vec<usize>,
        /// Anti-hook bottom row s_00..s_k0.
        #[arg(long, value_delimiter = ',')]
        bottom: Vec<f64>,
        /// Anti-hook column s_k1..s_kℓ, bottom to top.
        #[arg(long, value_delimiter = ',')]
        column: Vec<f64>,
        #[command(flatten)]
        z: ZArgs,
    },
    /// Run a JSON job file (`-` for stdin).
    Run { file: String },
}

fn reals(v: &[f64]) -> Vec<Complex64> {
    v.iter().map(|&x| Complex64::new(x, 0.0)).collect()
}

fn shape(v: &[usize]) -> Result<Partition, String> {
    Partition::new(v.to_vec()).map_err(|e| e.to_string())
}

fn build(cli: Cli) -> Result<JobSpec, String> {
    let c = &cli.common;
    let cfg = TruncationConfig {
        m: c.m,
        mode: if c.exact || matches!(c.mode, ModeArg::Exact) { Mode::Exact } else { Mode::Floating },
        tolerance: c.tolerance,
        accelerate: c.accelerate,
    };
    let command = match cli.cmd {
        Sub::EvalSchur { shape: outer, inner, z } => {
            let sk = SkewShape::new(shape(&outer)?, shape(&inner)?).map_err(|e| e.to_string())?;
            Command::EvalSchur { tableau: VariableTableau::content(sk, z.assignment()?) }
        }
        Sub::EvalMzv { args, star } => Command::EvalMzv { args: reals(&args), star },
        Sub::EvalRootzeta { rank, values, first_row, variant, d, x } => {
            let root = if first_row {
                RootZetaArgs::first_row(reals(&values))
            } else {
                let r = rank.ok_or("--rank is required unless --first-row is given")?;
                RootZetaArgs::full(r, reals(&values)).map_err(|e| e.to_string())?
            };
            let need_x = || x.ok_or_else(|| "--x is required for the shifted variants".to_string());
            let function = match variant {
                VariantArg::A => RootVariant::A,
                VariantArg::Bullet => RootVariant::Bullet { d },
                VariantArg::H => RootVariant::H { x: need_x()? },
                VariantArg::BulletH => RootVariant::BulletH { d, x: need_x()? },
            };
            Command::EvalRootzeta { root, function }
        }
        Sub::Expand { target, p, q, shape: s, reversed, collect } => Command::Expand {
            target: match target {
                ExpandKind::Hook1 => ExpandTarget::Hook { p, q, variant: HookVariant::Hook1 },
                ExpandKind::Hook2 => ExpandTarget::Hook { p, q, variant: HookVariant::Hook2 },
                ExpandKind::Giambelli => ExpandTarget::Giambelli {
                    shape: shape(&s)?,
                    variant: if reversed { GiambelliVariant::Reversed } else { GiambelliVariant::Standard },
                    collect,
                },
            },
        },
        Sub::Verify { identity, p, q, shape: s, bottom, column, z } => {
            let identity = match identity {
                IdentityArg::Hook1 => Identity::Hook1 { p, q },
                IdentityArg::Hook2 => Identity::Hook2 { p, q },
                IdentityArg::Giambelli => Identity::Giambelli { shape: shape(&s)? },
                IdentityArg::Thm41 => Identity::Thm41 { shape: shape(&s)? },
                IdentityArg::Thm41Reversed => Identity::Thm41Reversed { shape: shape(&s)? },
                IdentityArg::Thm42 => Identity::Thm42 { shape: shape(&s)? },
                IdentityArg::Antihook => Identity::Antihook(
                    AntiHookArgs::new(reals(&bottom), reals(&column)).map_err(|e| e.to_string())?,
                ),
            };
            Command::Verify { identity, z: z.assignment()? }
        }
        Sub::Run { .. } => unreachable!(),
    };
    Ok(JobSpec { command, cfg, output: c.format, threads: c.threads })
}

fn load(file: &str) -> Result<JobSpec, String> {
    let text = if file == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| e.to_string())?;
        s
    } else {
        std::fs::read_to_string(file).map_err(|e| format!("{file}: {e}"))?
    };
    job::parse_job(&text)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let spec = match &cli.cmd {
        Sub::Run { file } => load(file),
        _ => build(cli),
    };
    let result = spec.and_then(|spec| {
        #[cfg(feature = "parallel")]
        rayon::ThreadPoolBuilder::new()
            .num_threads(spec.threads.max(1))
            .build_global()
            .map_err(|e| e.to_string())?;
        job::run(&spec)
    });
    match result {
        Ok(report) => {
            print!("{}", report.text);
            ExitCode::from(report.exit as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
