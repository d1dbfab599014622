//! Argument parsing and dispatch. Commands render into an [`Outcome`] so the
//! binary and the tests share one code path.

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use singlet_core::characters::{ch_expr, vacuum_shift, CharacterSum};
use singlet_core::fusion::fuse;
use singlet_core::oracle::chebyshev_fuse;
use singlet_core::orbifold::{
    induce, list_simples, orbifold_char, orbifold_expr_to_json, orbifold_fuse, OrbifoldExpr, OrbifoldParams,
};
use singlet_core::rational as rat;
use singlet_core::structure::{dual, expr_to_json, k_class, verma_quotient_factors, virasoro_induce};
use singlet_core::{Error as CoreError, ModuleExpr, Params};
use thiserror::Error;

use crate::checks::{self, CheckConfig, Suite};
use crate::parse::{parse_expr, ParseError, ParsedExpr};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Exact calculator for singlet vertex algebra modules and their orbifolds.
#[derive(Debug, Parser)]
#[command(name = "singlet", version, about)]
pub struct Cli {
    /// The singlet parameter p >= 2.
    #[arg(long)]
    pub p: i64,
    /// Orbifold order m >= 1; needed for W, V and R modules.
    #[arg(long)]
    pub m: Option<i64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Truncation order of characters.
    #[arg(long, env = "SINGLET_ORDER", default_value_t = 10)]
    pub order: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tensor product of two or more expressions.
    Fuse {
        /// Use the recursion oracle instead of the closed-form rules.
        #[arg(long)]
        oracle: bool,
        #[arg(num_args = 2.., required = true)]
        exprs: Vec<String>,
    },
    /// Contragredient module.
    Dual { expr: String },
    /// Class in the Grothendieck group, as a sum of simples.
    Kclass { expr: String },
    /// Composition factors of each summand with their conformal weights.
    Factors { expr: String },
    /// Loewy layers of each summand, top first.
    Loewy { expr: String },
    /// Truncated character.
    Char {
        expr: String,
        /// Include the q^{-c/24} prefactor.
        #[arg(long)]
        shift: bool,
    },
    /// T-grading class mod 2 of each summand.
    Grade { expr: String },
    /// Twist exponent h mod 1 of each simple summand.
    Twist { expr: String },
    /// Monodromy exponent with M(2,1) of each summand.
    Monodromy { expr: String },
    /// Composition factors of the generalized Verma quotient.
    #[command(allow_negative_numbers = true)]
    Verma {
        r: i64,
        s: i64,
        /// Decompose the module induced from the Virasoro irreducible instead.
        #[arg(long)]
        virasoro: bool,
    },
    /// Induction to the orbifold.
    Induce { expr: String },
    /// Simple modules of the orbifold.
    Simples,
    /// Tensor product of orbifold expressions.
    Orbfuse {
        #[arg(num_args = 2.., required = true)]
        exprs: Vec<String>,
    },
    /// Run built-in verification suites.
    Check {
        #[arg(long, default_value = "all")]
        suite: Suite,
    },
}

/// Rendered result of a command together with its exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_internal() => 2,
            _ => 1,
        }
    }
}

/// A rendered value in both formats.
struct Output {
    text: String,
    json: Value,
    code: i32,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, code: 0 }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let shown = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: shown,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: shown,
                },
            };
        }
    };
    let format = cli.format;
    match execute(&cli) {
        Ok(out) => {
            let body = match format {
                Format::Text => out.text,
                Format::Json => serde_json::to_string(&out.json).expect("values serialize"),
            };
            Outcome {
                code: out.code,
                stdout: format!("{}\n", body.trim_end()),
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: e.code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

struct Ctx {
    params: Params,
    orbifold: Option<OrbifoldParams>,
}

impl Ctx {
    fn parse(&self, src: &str) -> Result<ParsedExpr, CliError> {
        Ok(parse_expr(src, &self.params, self.orbifold.as_ref())?)
    }

    fn singlet(&self, src: &str) -> Result<ModuleExpr, CliError> {
        match self.parse(src)? {
            ParsedExpr::Singlet(x) => Ok(x),
            ParsedExpr::Orbifold(_) => Err(CliError::Usage(format!("'{src}' is an orbifold expression"))),
        }
    }

    fn orbifold(&self, src: &str) -> Result<OrbifoldExpr, CliError> {
        match self.parse(src)? {
            ParsedExpr::Orbifold(x) => Ok(x),
            ParsedExpr::Singlet(_) => Err(CliError::Usage(format!("'{src}' is not an orbifold expression"))),
        }
    }

    fn orbifold_params(&self) -> Result<&OrbifoldParams, CliError> {
        self.orbifold
            .as_ref()
            .ok_or_else(|| CliError::Usage("this command needs --m".into()))
    }
}

fn singlet_output(x: &ModuleExpr) -> Output {
    Output::ok(x.to_string(), expr_to_json(x))
}

fn orbifold_output(x: &OrbifoldExpr) -> Output {
    Output::ok(x.to_string(), orbifold_expr_to_json(x))
}

fn char_output(ch: &CharacterSum) -> Output {
    let lines: Vec<String> = ch
        .cosets()
        .map(|(_, s)| {
            let coeffs: Vec<String> = s.coeffs().iter().map(ToString::to_string).collect();
            format!("h0={} coeffs=[{}]", rat::fmt(s.h0()), coeffs.join(", "))
        })
        .collect();
    Output::ok(lines.join("\n"), ch.to_json())
}

/// One line per distinct summand, `label: value`, and the matching JSON array.
fn per_summand<T: std::fmt::Display>(
    x: &ModuleExpr,
    key: &str,
    mut f: impl FnMut(&singlet_core::Indecomposable) -> Result<(T, Value), CliError>,
) -> Result<Output, CliError> {
    let mut lines = Vec::new();
    let mut items = Vec::new();
    for (m, _) in x {
        let (shown, value) = f(m)?;
        lines.push(format!("{m}: {shown}"));
        items.push(json!({"module": m.to_string(), key: value}));
    }
    Ok(Output::ok(lines.join("\n"), Value::Array(items)))
}

fn layers_json<T: ToString>(layers: &[Vec<T>]) -> Value {
    layers
        .iter()
        .map(|l| l.iter().map(ToString::to_string).collect::<Vec<_>>())
        .collect()
}

fn layers_text<T: ToString>(layers: &[Vec<T>]) -> String {
    let parts: Vec<String> = layers
        .iter()
        .map(|l| format!("[{}]", l.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")))
        .collect();
    parts.join(" ")
}

fn execute(cli: &Cli) -> Result<Output, CliError> {
    let params = Params::new(cli.p)?;
    let orbifold = cli.m.map(|m| OrbifoldParams::new(cli.p, m)).transpose()?;
    let ctx = Ctx { params, orbifold };
    let params = &ctx.params;
    match &cli.command {
        Command::Fuse { oracle, exprs } => match ctx.parse(&exprs[0])? {
            ParsedExpr::Singlet(mut acc) => {
                for e in &exprs[1..] {
                    let y = ctx.singlet(e)?;
                    acc = if *oracle {
                        chebyshev_fuse(params, &acc, &y)?
                    } else {
                        fuse(params, &acc, &y)?
                    };
                }
                Ok(singlet_output(&acc))
            }
            ParsedExpr::Orbifold(_) => orbfuse(&ctx, exprs),
        },
        Command::Orbfuse { exprs } => orbfuse(&ctx, exprs),
        Command::Dual { expr } => Ok(singlet_output(&dual(params, &ctx.singlet(expr)?)?)),
        Command::Kclass { expr } => Ok(singlet_output(&k_class(params, &ctx.singlet(expr)?))),
        Command::Factors { expr } => per_summand(&ctx.singlet(expr)?, "factors", |m| {
            let k = m.k_class(params);
            let shown: Vec<String> = k
                .iter()
                .map(|(f, n)| {
                    let h = rat::fmt(&f.lowest_weight(params));
                    if *n == 1 {
                        format!("{f}@{h}")
                    } else {
                        format!("{n}*{f}@{h}")
                    }
                })
                .collect();
            let value: Vec<Value> = k
                .iter()
                .map(|(f, n)| json!({"module": f.to_string(), "mult": n, "h": rat::fmt(&f.lowest_weight(params))}))
                .collect();
            Ok((shown.join(" + "), Value::Array(value)))
        }),
        Command::Loewy { expr } => match ctx.parse(expr)? {
            ParsedExpr::Singlet(x) => per_summand(&x, "layers", |m| {
                let layers = m.loewy_layers(params);
                Ok((layers_text(&layers), layers_json(&layers)))
            }),
            ParsedExpr::Orbifold(x) => {
                let op = ctx.orbifold_params()?;
                let mut lines = Vec::new();
                let mut items = Vec::new();
                for (m, _) in &x {
                    let layers = m.loewy_layers(op);
                    lines.push(format!("{m}: {}", layers_text(&layers)));
                    items.push(json!({"module": m.to_string(), "layers": layers_json(&layers)}));
                }
                Ok(Output::ok(lines.join("\n"), Value::Array(items)))
            }
        },
        Command::Char { expr, shift } => {
            let mut ch = match ctx.parse(expr)? {
                ParsedExpr::Singlet(x) => ch_expr(params, &x, cli.order),
                ParsedExpr::Orbifold(x) => {
                    let op = ctx.orbifold_params()?;
                    let mut total = CharacterSum::default();
                    for m in x.expanded() {
                        for (_, s) in orbifold_char(op, &m, cli.order)?.cosets() {
                            total.insert(s.clone())?;
                        }
                    }
                    total
                }
            };
            if *shift {
                ch = ch.shifted(&vacuum_shift(params));
            }
            Ok(char_output(&ch))
        }
        Command::Grade { expr } => per_summand(&ctx.singlet(expr)?, "t_grade", |m| {
            let g = rat::fmt(&m.t_grade(params));
            Ok((g.clone(), json!(g)))
        }),
        Command::Twist { expr } => per_summand(&ctx.singlet(expr)?, "exponent", |m| {
            let t = m.twist_phase(params)?;
            Ok((t.to_string(), json!(t.to_string())))
        }),
        Command::Monodromy { expr } => per_summand(&ctx.singlet(expr)?, "exponent", |m| {
            let t = m.monodromy_with_m21(params);
            Ok((t.to_string(), json!(t.to_string())))
        }),
        Command::Verma { r, s, virasoro } => {
            let x = if *virasoro {
                virasoro_induce(params, *r, *s)?
            } else {
                verma_quotient_factors(params, *r, *s)?
            };
            Ok(singlet_output(&x))
        }
        Command::Induce { expr } => {
            let op = ctx.orbifold_params()?;
            Ok(orbifold_output(&induce(op, &ctx.singlet(expr)?)?))
        }
        Command::Simples => {
            let simples = list_simples(ctx.orbifold_params()?);
            let labels: Vec<String> = simples.iter().map(ToString::to_string).collect();
            Ok(Output::ok(labels.join("\n"), json!(labels)))
        }
        Command::Check { suite } => {
            let cfg = CheckConfig {
                params: *params,
                orders: cli.m.into_iter().collect(),
                char_order: cli.order,
            };
            let report = checks::run(*suite, &cfg);
            let mut out = Output::ok(report.to_string(), report.to_json());
            if !report.passed() {
                out.code = 2;
            }
            Ok(out)
        }
    }
}

fn orbfuse(ctx: &Ctx, exprs: &[String]) -> Result<Output, CliError> {
    let op = ctx.orbifold_params()?;
    let mut acc = ctx.orbifold(&exprs[0])?;
    for e in &exprs[1..] {
        acc = orbifold_fuse(op, &acc, &ctx.orbifold(e)?)?;
    }
    Ok(orbifold_output(&acc))
}
