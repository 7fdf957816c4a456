//! `infoweight` command-line front end.

mod output;
mod settings;
mod tables;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use infoweight::joint::joint_check;
use infoweight::sampling::{sample, SampleStream};
use infoweight::summary::{moments, summarize};
use infoweight::tail::{tail_report, TailOptions};
use infoweight::{BaseDistribution, ContinuousLaw, Law, QuadratureConfig, WeightedDistribution, WeightingSide};
use serde::Serialize;
use serde_json::json;

use output::{render, Cell, Format, Payload, RunManifest, Table};

#[derive(Debug)]
pub enum CliError {
    /// Exit code 2.
    Usage(String),
    /// Exit code 3: a finite result was required and the numerics failed.
    Numeric(String),
    /// Exit code 1.
    Io(String),
}

impl From<infoweight::Error> for CliError {
    fn from(e: infoweight::Error) -> Self {
        use infoweight::Error as E;
        match e {
            E::InvalidParameter { .. } | E::Domain { .. } | E::Parse { .. } | E::Input(_) => CliError::Usage(e.to_string()),
            _ => CliError::Numeric(e.to_string()),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Numeric(_) => 3,
            CliError::Io(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Numeric(m) | CliError::Io(m) => m,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "infoweight", version, about = "Information-weighted probability distributions")]
struct Cli {
    /// Absolute quadrature tolerance.
    #[arg(long, global = true)]
    abs_tol: Option<f64>,
    /// Relative quadrature tolerance.
    #[arg(long, global = true)]
    rel_tol: Option<f64>,
    /// TOML or JSON file with `abs_tol`, `rel_tol`, `max_subdivisions`.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Output file (stdout if absent); a manifest is written next to it.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum SideArg {
    None,
    Left,
    Right,
    #[value(alias = "two-sided")]
    Two,
}

impl SideArg {
    fn side(self) -> Option<WeightingSide> {
        match self {
            SideArg::None => None,
            SideArg::Left => Some(WeightingSide::Left),
            SideArg::Right => Some(WeightingSide::Right),
            SideArg::Two => Some(WeightingSide::TwoSided),
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum What {
    Pdf,
    Cdf,
    Sf,
    Ppf,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Which {
    Moments,
    Normalize,
    Tails,
}

/// `lo:hi:n`, `n` evenly spaced points including both ends.
#[derive(Debug, Clone, Copy, Serialize)]
struct Grid {
    lo: f64,
    hi: f64,
    n: usize,
}

impl Grid {
    fn points(&self) -> Vec<f64> {
        if self.n == 1 {
            return vec![self.lo];
        }
        let step = (self.hi - self.lo) / (self.n - 1) as f64;
        (0..self.n)
            .map(|i| if i + 1 == self.n { self.hi } else { self.lo + step * i as f64 })
            .collect()
    }
}

fn parse_grid(s: &str) -> Result<Grid, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [lo, hi, n] = parts.as_slice() else {
        return Err("expected lo:hi:n".into());
    };
    let num = |t: &str| t.trim().parse::<f64>().map_err(|_| format!("`{t}` is not a number"));
    let (lo, hi) = (num(lo)?, num(hi)?);
    let n: usize = n.trim().parse().map_err(|_| format!("`{n}` is not a count"))?;
    if !(lo.is_finite() && hi.is_finite()) || lo > hi || n == 0 {
        return Err("need finite lo <= hi and n >= 1".into());
    }
    Ok(Grid { lo, hi, n })
}

fn parse_dist(s: &str) -> Result<BaseDistribution, String> {
    s.parse().map_err(|e: infoweight::Error| e.to_string())
}

#[derive(Args, Debug, Serialize)]
struct LawArgs {
    /// Base distribution, e.g. `pareto(2,1)`.
    #[arg(long, value_parser = parse_dist)]
    dist: BaseDistribution,
    #[arg(long, value_enum, default_value = "none")]
    side: SideArg,
}

impl LawArgs {
    fn law(&self) -> Law {
        Law::new(self.dist, self.side.side())
    }
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
enum Command {
    /// Density, CDF, survival or quantile over a grid.
    Eval {
        #[command(flatten)]
        law: LawArgs,
        #[arg(long, value_enum)]
        what: What,
        /// `lo:hi:n`; probabilities for `ppf`. Defaults to the central 99% range.
        #[arg(long, value_parser = parse_grid, allow_hyphen_values = true)]
        grid: Option<Grid>,
    },
    /// Regenerate a reference table.
    Tables {
        #[arg(value_enum)]
        which: Which,
    },
    /// Mean and variance.
    Moments {
        /// Repeatable; defaults to the ten reference laws.
        #[arg(long, value_parser = parse_dist)]
        dist: Vec<BaseDistribution>,
        /// Repeatable; defaults to `none` and `left`.
        #[arg(long, value_enum)]
        side: Vec<SideArg>,
    },
    /// Tail diagnostics of a weighted law.
    Tails {
        #[command(flatten)]
        law: LawArgs,
        /// Exponential-dominance rates.
        #[arg(long = "lambda", value_delimiter = ',', default_values_t = [0.1, 0.5, 1.5])]
        lambdas: Vec<f64>,
        /// Regular-variation scale factors.
        #[arg(long = "t", value_delimiter = ',', default_values_t = [2.0, 5.0])]
        ts: Vec<f64>,
        #[arg(long, default_value_t = 0.9)]
        percentile: f64,
        /// Sample size for a Hill estimate (skipped if absent).
        #[arg(long)]
        hill_n: Option<usize>,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
    /// Seeded inverse-transform sample.
    Sample {
        #[command(flatten)]
        law: LawArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        stream: u64,
    },
    /// Normalization, marginals and additivity of the joint weighting of an independent pair.
    JointCheck {
        #[arg(long, value_parser = parse_dist)]
        dist_x: BaseDistribution,
        #[arg(long, value_parser = parse_dist)]
        dist_y: BaseDistribution,
        #[arg(long, default_value_t = 41)]
        grid: usize,
    },
    /// Summary statistics plus tail diagnostics.
    Report {
        #[command(flatten)]
        law: LawArgs,
    },
}

impl Command {
    fn default_format(&self) -> Format {
        match self {
            Command::Eval { .. } | Command::Tables { .. } | Command::Moments { .. } | Command::Sample { .. } => Format::Csv,
            Command::Tails { .. } | Command::JointCheck { .. } | Command::Report { .. } => Format::Json,
        }
    }

    fn seeds(&self) -> Vec<u64> {
        match self {
            Command::Tails { seed, hill_n: Some(_), .. } => vec![*seed],
            Command::Sample { seed, .. } => vec![*seed],
            _ => Vec::new(),
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> Result<serde_json::Value, CliError> {
    serde_json::to_value(v).map_err(|e| CliError::Io(e.to_string()))
}

fn cmd_eval(law: &LawArgs, what: What, grid: Option<Grid>) -> Result<Payload, CliError> {
    let l = law.law();
    let grid = match (grid, what) {
        (Some(g), _) => g,
        (None, What::Ppf) => Grid { lo: 0.005, hi: 0.995, n: 199 },
        (None, _) => Grid {
            lo: l.quantile(0.005)?,
            hi: l.quantile(0.995)?,
            n: 199,
        },
    };
    let mut t = Table::new(vec![if matches!(what, What::Ppf) { "p" } else { "x" }, what_name(what)]);
    for x in grid.points() {
        let v = match what {
            What::Pdf => l.pdf(x),
            What::Cdf => l.cdf(x),
            What::Sf => l.sf(x),
            What::Ppf => l.quantile(x)?,
        };
        t.push(vec![x.into(), v.into()]);
    }
    t.meta = Some(json!({ "law": l.to_string(), "what": what_name(what) }));
    Ok(Payload::Table(t))
}

fn what_name(w: What) -> &'static str {
    match w {
        What::Pdf => "pdf",
        What::Cdf => "cdf",
        What::Sf => "sf",
        What::Ppf => "ppf",
    }
}

fn cmd_moments(dists: &[BaseDistribution], sides: &[SideArg], cfg: &QuadratureConfig) -> Result<Payload, CliError> {
    let dists = if dists.is_empty() { BaseDistribution::reference_catalog() } else { dists.to_vec() };
    let sides = if sides.is_empty() { vec![SideArg::None, SideArg::Left] } else { sides.to_vec() };
    let mut t = Table::new(vec!["distribution", "side", "mean", "variance", "status"]);
    for d in &dists {
        for s in &sides {
            let law = Law::new(*d, s.side());
            let (m, v) = moments(&law, cfg)?;
            let status = if m.is_defined() && v.is_defined() { "ok" } else { "undefined" };
            t.push(vec![
                d.to_string().into(),
                s.side().map_or("none", |w| w.as_str()).into(),
                m.value().into(),
                v.value().into(),
                status.into(),
            ]);
        }
    }
    Ok(Payload::Table(t))
}

fn weighted(law: &LawArgs, what: &str) -> Result<WeightedDistribution, CliError> {
    law.side
        .side()
        .map(|s| WeightedDistribution::new(law.dist, s))
        .ok_or_else(|| CliError::Usage(format!("{what} needs --side left, right or two")))
}

fn cmd_sample(law: &LawArgs, n: usize, seed: u64, stream: u64) -> Result<Payload, CliError> {
    let l = law.law();
    let mut rng = SampleStream::with_stream(seed, stream);
    let xs = sample(&l, n, &mut rng)?;
    let meta = rng.metadata();
    let mut t = Table::new(vec!["x"]);
    t.comments = vec![
        format!("law={l}"),
        format!("n={n}"),
        format!("algorithm={}", meta.algorithm_id),
        format!("seed={}", meta.seed),
        format!("stream={}", meta.stream),
        format!("library_version={}", infoweight::VERSION),
    ];
    t.rows = xs.into_iter().map(|x| vec![Cell::Num(x)]).collect();
    t.meta = Some(json!({ "law": l.to_string(), "n": n, "metadata": meta }));
    Ok(Payload::Table(t))
}

fn cmd_report(law: &LawArgs, cfg: &QuadratureConfig) -> Result<Payload, CliError> {
    let l = law.law();
    let summary = summarize(&l, cfg)?;
    let (crossings, tail) = match &l {
        Law::Weighted(w) => (w.crossing_points()?, Some(tail_report(w, &TailOptions::default(), cfg)?)),
        Law::Base(_) => (Vec::new(), None),
    };
    Ok(Payload::Json(json!({
        "law": l.to_string(),
        "base": law.dist.to_string(),
        "side": law.side,
        "summary": to_json(&summary)?,
        "crossings": crossings,
        "tail": to_json(&tail)?,
    })))
}

fn execute(cmd: &Command, cfg: &QuadratureConfig) -> Result<Payload, CliError> {
    match cmd {
        Command::Eval { law, what, grid } => cmd_eval(law, *what, *grid),
        Command::Tables { which } => Ok(Payload::Table(match which {
            Which::Moments => tables::moments_table(cfg)?,
            Which::Normalize => tables::normalize_table(cfg)?,
            Which::Tails => tables::tails_table(cfg)?,
        })),
        Command::Moments { dist, side } => cmd_moments(dist, side, cfg),
        Command::Tails {
            law,
            lambdas,
            ts,
            percentile,
            hill_n,
            seed,
        } => {
            let w = weighted(law, "tails")?;
            let opts = TailOptions {
                lambdas: lambdas.clone(),
                ts: ts.clone(),
                percentile: *percentile,
                hill_n: *hill_n,
                seed: *seed,
            };
            Ok(Payload::Json(to_json(&tail_report(&w, &opts, cfg)?)?))
        }
        Command::Sample { law, n, seed, stream } => cmd_sample(law, *n, *seed, *stream),
        Command::JointCheck { dist_x, dist_y, grid } => {
            let r = joint_check(dist_x, dist_y, *grid, cfg)?;
            Ok(Payload::Json(json!({
                "dist_x": dist_x.to_string(),
                "dist_y": dist_y.to_string(),
                "normalization": to_json(&tables::require_finite(r.normalization, "joint mass")?)?,
                "marginal_max_deviation": r.marginal_max_dev,
                "marginal_points_per_axis": r.marginal_points_per_axis,
                "additivity_max_deviation": r.additivity.corrected_max_dev,
                "additivity_max_deviation_without_half": r.additivity.uncorrected_max_dev,
                "additivity_points": r.additivity.points,
            })))
        }
        Command::Report { law } => cmd_report(law, cfg),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let cfg = settings::resolve(cli.config.as_deref(), cli.abs_tol, cli.rel_tol)?;
    let format = cli.format.unwrap_or_else(|| cli.command.default_format());
    let payload = execute(&cli.command, &cfg)?;
    let text = render(&payload, format)?;

    let Some(out) = &cli.out else {
        print!("{text}");
        return Ok(());
    };
    let io = |e: std::io::Error| CliError::Io(format!("{}: {e}", out.display()));
    std::fs::write(out, &text).map_err(io)?;
    let effective = json!({ "tolerances": cfg, "format": format, "command": cli.command });
    let manifest = RunManifest {
        manifest_version: 1,
        command_line: std::env::args().collect(),
        config_hash: output::sha256_hex(effective.to_string().as_bytes()),
        tolerances: cfg,
        library_version: infoweight::VERSION,
        seeds: cli.command.seeds(),
        timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
        format,
        output: out.clone(),
        output_sha256: output::sha256_hex(text.as_bytes()),
    };
    let mut m = serde_json::to_string_pretty(&manifest).map_err(|e| CliError::Io(e.to_string()))?;
    m.push('\n');
    std::fs::write(output::manifest_path(out), m).map_err(io)?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("infoweight: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        let g = parse_grid("0.01:0.99:99").unwrap();
        let pts = g.points();
        assert_eq!(pts.len(), 99);
        assert_eq!(pts[0], 0.01);
        assert_eq!(pts[98], 0.99);
        assert!((pts[1] - 0.02).abs() < 1e-15);
        for bad in ["1:0:5", "0:1", "0:1:0", "a:1:3", "0:inf:3"] {
            assert!(parse_grid(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn errors_map_to_exit_codes() {
        let usage: CliError = infoweight::Error::Input("x".into()).into();
        assert_eq!(usage.exit_code(), 2);
        let num: CliError = infoweight::Error::Divergent { value: 1.0, abs_err: 1.0 }.into();
        assert_eq!(num.exit_code(), 3);
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
