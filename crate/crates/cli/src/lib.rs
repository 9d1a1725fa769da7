//! Command-line driver for `spinor-lfunc-core`.
//!
//! `run` parses arguments, executes one subcommand and returns the process
//! exit code: 0 when everything passes, 1 on a coefficient mismatch, 2 on
//! invalid input.

pub mod config;
pub mod params;
pub mod report;
pub mod sweep;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::OnceLock;

use anyhow::{anyhow, bail, ensure, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use spinor_lfunc_core::characters::{
    char_so_even, char_sp, schur_gl, similitude_char, DominantWeight, EigenvalueList, NormalizationExponent,
    PaddedWeight, SimilitudeFamily,
};
use spinor_lfunc_core::lfactors::l_factor;
use spinor_lfunc_core::satake::{
    is_similitude, satake_gl, satake_gspin_even_split, satake_gspin_odd, satake_quasisplit, SatakeParameter,
};
use spinor_lfunc_core::RationalMatrix;

use config::{parse_normalization, rational, rationals, split_list, ExplicitParameters, ParameterSource, RunConfig};
use report::{NormalizationJson, RunReport, SCHEMA_VERSION};

#[derive(Debug, Parser)]
#[command(name = "spinor-lfunc", version, about = "Exact unramified GSpin x GL Rankin-Selberg identities")]
struct Cli {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Format for stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for multi-instance runs (0 = all cores).
    #[arg(long, global = true, env = "SPINOR_LFUNC_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Verify one identity (or `--count` seeded instances of it).
    Verify(VerifyArgs),
    /// Verify a grid of cases, ranks and seeds.
    Sweep(SweepArgs),
    /// Print one character value.
    Char(CharArgs),
    /// Print the coefficients of det(1 - M T)^{-1}.
    Lfactor(LfactorArgs),
    /// Build a Satake parameter and check it.
    Satake(SatakeArgs),
    /// Check the symmetric-algebra decomposition.
    Symalg(SymalgArgs),
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// JSON config; replaces every other verify flag.
    #[arg(long, conflicts_with_all = ["case", "n", "m", "order", "seed", "u"])]
    config: Option<PathBuf>,
    #[arg(long)]
    case: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, default_value_t = 8)]
    order: usize,
    #[arg(long, conflicts_with = "u")]
    seed: Option<u64>,
    #[arg(long, default_value_t = 1, requires = "seed")]
    count: u64,
    /// Explicit parameters: chi_0 = u^2.
    #[arg(long, allow_hyphen_values = true, requires_all = ["chi", "tau"])]
    u: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    chi: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    tau: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    #[arg(long, default_value = "auto")]
    normalization: String,
}

#[derive(Debug, Args)]
struct SweepArgs {
    /// Comma-separated `case:n:m` entries.
    #[arg(long, default_value = sweep::DEFAULT_GRID)]
    grid: String,
    #[arg(long, default_value_t = 10)]
    seeds: u64,
    #[arg(long, default_value_t = 0)]
    seed_base: u64,
    #[arg(long, default_value_t = 8)]
    order: usize,
    #[arg(long, default_value = "auto")]
    normalization: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CharGroup {
    Gl,
    Sp,
    So,
    Gsp,
    Gso,
}

#[derive(Debug, Args)]
struct CharArgs {
    #[arg(long, value_enum)]
    group: CharGroup,
    #[arg(long)]
    rank: usize,
    /// Comma-separated parts of the dominant weight.
    #[arg(long)]
    weight: String,
    /// Comma-separated eigenvalues (the torus part for gsp/gso).
    #[arg(long, allow_hyphen_values = true)]
    point: String,
    /// Similitude value, gsp/gso only.
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,
    #[arg(long, default_value = "auto")]
    normalization: String,
}

#[derive(Debug, Args)]
struct LfactorArgs {
    /// Rows separated by ';', entries by ','.
    #[arg(long, allow_hyphen_values = true)]
    matrix: String,
    #[arg(long)]
    order: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SatakeFamily {
    Gl,
    Odd,
    EvenSplit,
    EvenQuasiSplit,
}

#[derive(Debug, Args)]
struct SatakeArgs {
    #[arg(long, value_enum)]
    family: SatakeFamily,
    /// chi_0 = u^2; ignored for gl.
    #[arg(long, allow_hyphen_values = true, default_value = "1")]
    u: String,
    #[arg(long, allow_hyphen_values = true)]
    chi: String,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SymalgFamily {
    Gsp,
    Gso,
}

#[derive(Debug, Args)]
struct SymalgArgs {
    /// Run the full resolution battery instead of one instance.
    #[arg(long, conflicts_with_all = ["family", "m", "n", "r", "seed"])]
    battery: bool,
    #[arg(long, value_enum, required_unless_present = "battery")]
    family: Option<SymalgFamily>,
    #[arg(long, required_unless_present = "battery")]
    m: Option<usize>,
    #[arg(long, required_unless_present = "battery")]
    n: Option<usize>,
    #[arg(long, required_unless_present = "battery")]
    r: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "auto")]
    normalization: String,
}

/// Input errors map to exit code 2; everything else is reported through the
/// verdicts.
#[derive(Debug)]
struct InvalidInput(anyhow::Error);

fn invalid<T>(r: Result<T>) -> Result<T, InvalidInput> {
    r.map_err(InvalidInput)
}

static RESOLVED: OnceLock<Result<NormalizationExponent, String>> = OnceLock::new();

/// The exponent fixed by the symmetric-algebra battery, computed once per
/// process.
pub fn resolved_normalization() -> Result<NormalizationExponent> {
    RESOLVED
        .get_or_init(|| params::resolve_exponent().map_err(|e| e.to_string()))
        .clone()
        .map_err(|e| anyhow!("normalization could not be resolved: {e}"))
}

/// Turns a normalization flag into the exponent and its echo.
pub fn normalization(label: &str) -> Result<(NormalizationExponent, NormalizationJson)> {
    match parse_normalization(label)? {
        Some(e) => Ok((e, NormalizationJson { exponent: e.label().to_string(), source: "explicit".to_string() })),
        None => {
            let e = resolved_normalization()?;
            Ok((e, NormalizationJson { exponent: e.label().to_string(), source: "symalg battery".to_string() }))
        }
    }
}

struct Output {
    json: String,
    text: String,
    code: i32,
}

impl Output {
    fn report(r: &RunReport) -> Self {
        Output { json: r.to_json(), text: r.to_text(), code: r.summary.exit_code() }
    }

    fn value(json: serde_json::Value, text: String, code: i32) -> Self {
        let mut json = serde_json::to_string_pretty(&json).expect("value serializes");
        json.push('\n');
        Output { json, text, code }
    }
}

fn verify_config(args: &VerifyArgs) -> Result<RunConfig> {
    if let Some(path) = &args.config {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        return RunConfig::from_json(&text);
    }
    let case = args.case.clone().ok_or_else(|| anyhow!("--case is required without --config"))?;
    let (n, m) = match (args.n, args.m) {
        (Some(n), Some(m)) => (n, m),
        _ => bail!("--n and --m are required without --config"),
    };
    let source = match (&args.u, args.seed) {
        (Some(u), None) => ParameterSource::Explicit(ExplicitParameters {
            u: u.clone(),
            chi: split_list(args.chi.as_deref().unwrap_or_default()),
            tau: split_list(args.tau.as_deref().unwrap_or_default()),
            a: args.a.clone(),
            alpha: args.alpha.clone(),
            beta: args.beta.clone(),
        }),
        (None, Some(seed)) => ParameterSource::Seeded { seed, count: args.count },
        _ => bail!("give either --seed or explicit --u/--chi/--tau"),
    };
    let config =
        RunConfig { schema: 1, case, n, m, order: args.order, normalization: args.normalization.clone(), source };
    config.validate()?;
    Ok(config)
}

fn verify(args: &VerifyArgs, jobs: Option<usize>) -> Result<Output, InvalidInput> {
    let config = invalid(verify_config(args))?;
    let instances = invalid(config.instances())?;
    let (exponent, norm) = invalid(normalization(&config.normalization))?;
    let results = invalid(sweep::run_instances(&instances, config.order, exponent, jobs))?;
    let config_json = serde_json::to_value(&config).expect("config serializes");
    Ok(Output::report(&RunReport::new("verify", config_json, norm, results)))
}

fn run_sweep(args: &SweepArgs, jobs: Option<usize>) -> Result<Output, InvalidInput> {
    let grid = invalid(sweep::parse_grid(&args.grid))?;
    if args.seeds == 0 {
        return Err(InvalidInput(anyhow!("--seeds must be at least 1")));
    }
    let (exponent, norm) = invalid(normalization(&args.normalization))?;
    let instances = invalid(sweep::grid_instances(&grid, args.seed_base, args.seeds))?;
    let results = invalid(sweep::run_instances(&instances, args.order, exponent, jobs))?;
    let config = serde_json::json!({
        "grid": args.grid,
        "seeds": args.seeds,
        "seed_base": args.seed_base,
        "order": args.order,
        "normalization": args.normalization,
    });
    Ok(Output::report(&RunReport::new("sweep", config, norm, results)))
}

fn weight_parts(s: &str) -> Result<Vec<u32>> {
    split_list(s).iter().map(|p| p.parse::<u32>().with_context(|| format!("bad weight part {p:?}"))).collect()
}

fn char_value(args: &CharArgs) -> Result<Output> {
    let mut parts = weight_parts(&args.weight)?;
    ensure!(parts.len() <= args.rank, "weight has more than {} parts", args.rank);
    parts.resize(args.rank, 0);
    let point = rationals(&split_list(&args.point))?;
    ensure!(point.len() == args.rank, "point needs {} entries, got {}", args.rank, point.len());
    let x = EigenvalueList::new(point)?;
    let weight = PaddedWeight::new(parts.clone())?;
    let mu = args.mu.as_deref().map(rational).transpose()?;
    let mut norm = None;
    let value = match args.group {
        CharGroup::Gl => schur_gl(&DominantWeight::new(parts)?, &x)?,
        CharGroup::Sp => char_sp(&weight, &x)?,
        CharGroup::So => char_so_even(&weight, &x)?,
        CharGroup::Gsp | CharGroup::Gso => {
            let mu = mu.clone().ok_or_else(|| anyhow!("--mu is required for gsp/gso"))?;
            let family = if args.group == CharGroup::Gsp { SimilitudeFamily::GSp } else { SimilitudeFamily::GSO };
            let (e, n) = normalization(&args.normalization)?;
            norm = Some(n);
            similitude_char(family, &weight, &x, &mu, e)?
        }
    };
    ensure!(
        mu.is_none() || matches!(args.group, CharGroup::Gsp | CharGroup::Gso),
        "--mu only applies to gsp/gso"
    );
    let json = serde_json::json!({
        "schema": SCHEMA_VERSION,
        "command": "char",
        "group": format!("{:?}", args.group).to_lowercase(),
        "weight": weight.parts(),
        "point": x.values().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "mu": mu.map(|m| m.to_string()),
        "normalization": norm,
        "value": value.to_string(),
    });
    Ok(Output::value(json, format!("{value}\n"), 0))
}

/// Parses the `"a,b;c,d"` matrix literal.
pub fn parse_matrix(s: &str) -> Result<RationalMatrix> {
    let rows = s
        .split(';')
        .map(|row| {
            let entries: Vec<String> = row.split(',').map(|e| e.trim().to_string()).collect();
            rationals(&entries)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RationalMatrix::from_rows(rows)?)
}

fn lfactor(args: &LfactorArgs) -> Result<Output> {
    let m = parse_matrix(&args.matrix)?;
    let series = l_factor(&m, args.order)?;
    let coefficients: Vec<String> = series.coefficients().iter().map(|c| c.to_string()).collect();
    let json = serde_json::json!({
        "schema": SCHEMA_VERSION,
        "command": "lfactor",
        "matrix": m.to_string(),
        "order": args.order,
        "coefficients": coefficients,
    });
    Ok(Output::value(json, format!("{series}\n"), 0))
}

fn satake(args: &SatakeArgs) -> Result<Output> {
    let chi = split_list(&args.chi);
    let explicit = ExplicitParameters {
        u: args.u.clone(),
        chi: chi.clone(),
        tau: Vec::new(),
        a: args.a.clone(),
        alpha: args.alpha.clone(),
        beta: args.beta.clone(),
    };
    let describe = |p: &SatakeParameter| (p.matrix().to_string(), p.mu().to_string(), p.matrix().det().to_string());
    let (family, (matrix, mu, det), member, extra) = match args.family {
        SatakeFamily::Gl => {
            let p = satake_gl(&rationals(&chi)?)?;
            ("gl", describe(&p), true, serde_json::Value::Null)
        }
        SatakeFamily::Odd => {
            let data = explicit.data(false)?;
            let p = satake_gspin_odd(&data)?;
            let ok = is_similitude(SimilitudeFamily::GSp, p.matrix(), &data.chi0);
            ("odd", describe(&p), ok, serde_json::Value::Null)
        }
        SatakeFamily::EvenSplit => {
            let data = explicit.data(false)?;
            let p = satake_gspin_even_split(&data)?;
            let ok = is_similitude(SimilitudeFamily::GSO, p.matrix(), &data.chi0);
            ("even-split", describe(&p), ok, serde_json::Value::Null)
        }
        SatakeFamily::EvenQuasiSplit => {
            let data = explicit.data(true)?;
            let qs = satake_quasisplit(&data)?;
            let ok = is_similitude(SimilitudeFamily::GSp, qs.reduced.matrix(), &data.chi0);
            let extra = serde_json::json!({
                "reduced": qs.reduced.matrix().to_string(),
                "block": qs.block.to_string(),
                "a_is_square": qs.a_is_square,
            });
            ("even-quasi-split", describe(&qs.full), ok, extra)
        }
    };
    let json = serde_json::json!({
        "schema": SCHEMA_VERSION,
        "command": "satake",
        "family": family,
        "matrix": matrix,
        "mu": mu,
        "det": det,
        "similitude_check": member,
        "quasi_split": extra,
    });
    let text = format!("matrix {matrix}\nmu {mu}\ndet {det}\nsimilitude check {}\n", if member { "ok" } else { "failed" });
    Ok(Output::value(json, text, if member { 0 } else { 1 }))
}

fn symalg(args: &SymalgArgs, jobs: Option<usize>) -> Result<Output, InvalidInput> {
    let cases = if args.battery {
        params::symalg_battery()
    } else {
        let family = match args.family.expect("required by clap") {
            SymalgFamily::Gsp => SimilitudeFamily::GSp,
            SymalgFamily::Gso => SimilitudeFamily::GSO,
        };
        let (m, n, r) = (args.m.expect("required"), args.n.expect("required"), args.r.expect("required"));
        invalid(params::symalg_instance(family, m, n, r, args.seed).map(|_| ()).map_err(anyhow::Error::from))?;
        vec![(family, m, n, r, args.seed)]
    };
    let (exponent, norm) = invalid(normalization(&args.normalization))?;
    let results = invalid(sweep::run_symalg(&cases, exponent, jobs))?;
    let config = serde_json::json!({
        "battery": args.battery,
        "family": args.family.map(|f| format!("{f:?}").to_lowercase()),
        "m": args.m, "n": args.n, "r": args.r,
        "seed": if args.battery { None } else { Some(args.seed) },
        "normalization": args.normalization,
    });
    Ok(Output::report(&RunReport::new("symalg", config, norm, results)))
}

fn dispatch(cli: &Cli) -> Result<Output, InvalidInput> {
    match &cli.command {
        Command::Verify(a) => verify(a, cli.jobs),
        Command::Sweep(a) => run_sweep(a, cli.jobs),
        Command::Char(a) => invalid(char_value(a)),
        Command::Lfactor(a) => invalid(lfactor(a)),
        Command::Satake(a) => invalid(satake(a)),
        Command::Symalg(a) => symalg(a, cli.jobs),
    }
}

/// Runs the CLI on `argv` (including the program name), writing to the
/// given streams, and returns the exit code.
pub fn run_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let _ = writeln!(stderr, "{e}\n{}", config::SCHEMA);
            return 2;
        }
    };
    let out = match dispatch(&cli) {
        Ok(out) => out,
        Err(InvalidInput(e)) => {
            let _ = writeln!(stderr, "error: {e:#}\n\n{}", config::SCHEMA);
            return 2;
        }
    };
    let shown = match cli.format {
        Format::Json => &out.json,
        Format::Text => &out.text,
    };
    if let Some(path) = &cli.output {
        if let Err(e) = std::fs::write(path, &out.json) {
            let _ = writeln!(stderr, "error: writing {}: {e}", path.display());
            return 2;
        }
        if cli.format == Format::Text {
            let _ = stdout.write_all(out.text.as_bytes());
        }
    } else {
        let _ = stdout.write_all(shown.as_bytes());
    }
    out.code
}

/// `run_with` on the process streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
