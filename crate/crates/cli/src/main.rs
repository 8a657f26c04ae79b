//! `modcodes`: command-line access to the curve, code and bound computations.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use modcodes::agcodes::{
    code_parameters, weight_distribution_with, Convention, LinearCode, Strategy,
};
use modcodes::bounds::{genus_x0, gv_bound, prop7_bound, tvz_exceeds_gv, tvz_line};
use modcodes::curves::{hecke_trace_by_count, x0_model, CurvePoint};
use modcodes::qseries::{
    delta_series, eisenstein_normalized, eta_quotient, hecke_coeff_level11, j_series,
    EtaQuotientSpec,
};
use modcodes::reproduce::{self, xpx_code, Status};
use modcodes::riemannroch::{one_point_basis, OnePointKind};
use modcodes::{agcodes, Error, FFMatrix, LaurentSeriesZ, PrimeField};

#[derive(Parser)]
#[command(name = "modcodes", version, about = "Codes from modular curves")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the GF(p)-points of a curve.
    Points(CurveArgs),
    /// Show the stored model of X_0(N).
    Model {
        #[arg(long)]
        level: u64,
    },
    /// Genus of X_0(N).
    Genus {
        #[arg(long = "N")]
        n: u64,
    },
    /// Generator, systematic form and check matrix of a one-point code.
    Code(CodeArgs),
    /// Weight distribution of a one-point code.
    Weights {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value_t = ConventionArg::Descending)]
        convention: ConventionArg,
        #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
        strategy: StrategyArg,
    },
    /// Asymptotic bounds.
    Bounds {
        #[command(subcommand)]
        which: BoundsCommand,
    },
    /// Leading coefficients of a q-series.
    Qseries {
        #[arg(long, value_enum)]
        series: SeriesArg,
        /// Truncation order: coefficients below q^order are shown.
        #[arg(long, default_value_t = 10)]
        order: i64,
        /// Eta-quotient factors such as `1:2,11:2` for eta(z)^2 eta(11z)^2.
        #[arg(long, value_delimiter = ',')]
        factors: Vec<String>,
    },
    /// Trace of T_p on level 11 from point counts and from the eta product.
    Hecke {
        #[arg(long = "N")]
        n: u64,
        #[arg(long)]
        p: u64,
    },
    /// The conic-ratio code on the level-19 curve over GF(7).
    ConicExample,
    /// Recompute every published example and compare with the printed values.
    Reproduce {
        /// Restrict to one group of rows.
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(reproduce::GROUPS))]
        only: Option<String>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Args)]
struct CurveArgs {
    /// Level of a stored X_0(N) model.
    #[arg(long, conflicts_with = "xpx", required_unless_present = "xpx")]
    level: Option<u64>,
    /// Use y^2 = x^p - x instead of a modular curve.
    #[arg(long)]
    xpx: bool,
    #[arg(long)]
    p: u64,
}

#[derive(Args)]
struct CodeArgs {
    #[command(flatten)]
    curve: CurveArgs,
    /// Pole order at infinity.
    #[arg(long)]
    a: u32,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Subcommand)]
enum BoundsCommand {
    /// CSV of delta, GV, TVZ and optionally the genus bound.
    Curve {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 100)]
        grid: usize,
        #[arg(long)]
        g: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
    },
    /// Interval of relative distance where TVZ lies above GV.
    Tvz {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 10_000)]
        grid: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Descending,
    Plain,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Auto,
    Direct,
    Dual,
    RankProfile,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesArg {
    J,
    Delta,
    E4,
    E6,
    Eta,
}

type CmdResult = Result<String, Error>;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    if let Command::Reproduce { only, jobs } = &cli.command {
        let (text, ok) = reproduce_report(only.clone(), *jobs, cli.json);
        emit(&text);
        return if ok { ExitCode::SUCCESS } else { ExitCode::from(1) };
    }
    match run(&cli) {
        Ok(out) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn envelope(mut v: Value) -> String {
    if let Value::Object(m) = &mut v {
        m.insert("schema".into(), json!(1));
    }
    serde_json::to_string_pretty(&v).expect("valid JSON")
}

fn matrix_json(m: &FFMatrix) -> Value {
    json!(m.to_rows())
}

fn curve_points(args: &CurveArgs) -> Result<(String, Vec<CurvePoint>), Error> {
    let field = PrimeField::new(args.p)?;
    match args.level {
        Some(level) => {
            let entry = x0_model(level)?;
            let mut pts = entry.model.over(field)?.enumerate_points();
            pts.rotate_right(1);
            Ok((entry.model.to_string(), pts))
        }
        None => {
            let model = modcodes::curves::HyperellipticModel::x_pow_minus_x(args.p as usize)?;
            let mut pts = model.over(field)?.enumerate_points()?;
            pts.rotate_right(1);
            Ok((model.to_string(), pts))
        }
    }
}

fn build_code(args: &CodeArgs) -> Result<LinearCode, Error> {
    let p = args.curve.p;
    match args.curve.level {
        Some(level) => {
            let field = PrimeField::new(p)?;
            let entry = x0_model(level)?;
            let pts: Vec<CurvePoint> = entry
                .model
                .over(field)?
                .enumerate_points()
                .into_iter()
                .filter(|pt| pt.affine().is_some())
                .collect();
            agcodes::evaluation_code(
                &one_point_basis(OnePointKind::Elliptic, args.a),
                &pts,
                field,
                format!("level {level} over F_{p}, L({} inf)", args.a),
            )
        }
        None => xpx_code(p, args.a, None),
    }
}

fn run(cli: &Cli) -> CmdResult {
    let json = cli.json;
    match &cli.command {
        Command::Points(args) => {
            let (model, pts) = curve_points(args)?;
            let listed: Vec<String> = pts.iter().map(|p| p.to_string()).collect();
            if json {
                return Ok(envelope(json!({
                    "model": model, "p": args.p, "count": pts.len(), "points": listed,
                })));
            }
            Ok(format!("{{{}}}\n{} points on {model} over F_{}", listed.join(", "), pts.len(), args.p))
        }
        Command::Model { level } => {
            let e = x0_model(*level)?;
            let printed = e.printed_form.as_ref();
            if json {
                return Ok(envelope(json!({
                    "level": e.level,
                    "model": e.model.to_string(),
                    "coefficients": e.model.coefficients(),
                    "discriminant": e.discriminant,
                    "source": e.source,
                    "printed_form": printed.map(|f| json!({
                        "model": f.model.to_string(),
                        "discriminant": f.printed_discriminant,
                    })),
                })));
            }
            let mut out = format!(
                "N = {}: {}  (discriminant {}; {})",
                e.level, e.model, e.discriminant, e.source
            );
            if let Some(f) = printed {
                out.push_str(&format!("\nprinted form: {}  (discriminant {})", f.model, f.printed_discriminant));
            }
            Ok(out)
        }
        Command::Genus { n } => {
            let r = genus_x0(*n)?;
            if json {
                return Ok(envelope(json!({
                    "N": r.level, "mu": r.mu, "mu2": r.mu2, "mu3": r.mu3,
                    "mu_inf": r.mu_inf, "genus": r.genus,
                })));
            }
            Ok(format!(
                "g(X_0({})) = {}  (mu = {}, mu2 = {}, mu3 = {}, cusps = {})",
                r.level, r.genus, r.mu, r.mu2, r.mu3, r.mu_inf
            ))
        }
        Command::Code(args) => {
            let code = build_code(args)?;
            let params = code_parameters(&code, args.jobs)?;
            let sys = code.systematic()?;
            if json {
                return Ok(envelope(json!({
                    "provenance": code.provenance(),
                    "p": code.p(), "n": params.n, "k": params.k, "d": params.d,
                    "mds": params.mds, "t": params.t,
                    "generator": matrix_json(code.generator()),
                    "systematic": matrix_json(&sys.generator),
                    "permutation": sys.permutation,
                    "check": matrix_json(&sys.check),
                })));
            }
            Ok(format!(
                "{}\n[{}, {}, {}] over F_{}, MDS: {}, corrects {} errors\nG =\n{}\nsystematic (columns {:?}) =\n{}\nH =\n{}",
                code.provenance(),
                params.n,
                params.k,
                params.d,
                code.p(),
                params.mds,
                params.t,
                code.generator(),
                sys.permutation,
                sys.generator,
                sys.check
            ))
        }
        Command::Weights { code, convention, strategy } => {
            let c = build_code(code)?;
            let strategy = match strategy {
                StrategyArg::Auto => Strategy::Auto,
                StrategyArg::Direct => Strategy::Direct,
                StrategyArg::Dual => Strategy::Dual,
                StrategyArg::RankProfile => Strategy::RankProfile,
            };
            let w = weight_distribution_with(&c, strategy, code.jobs)?;
            let conv = match convention {
                ConventionArg::Descending => Convention::Descending,
                ConventionArg::Plain => Convention::Plain,
            };
            if json {
                let counts: Vec<String> = w.counts().iter().map(|c| c.to_string()).collect();
                return Ok(envelope(json!({
                    "n": c.n(), "k": c.k(), "p": c.p(), "counts": counts,
                    "polynomial": w.render(conv),
                })));
            }
            Ok(w.render(conv))
        }
        Command::Bounds { which } => bounds(which, json),
        Command::Qseries { series, order, factors } => qseries(*series, *order, factors, json),
        Command::Hecke { n, p } => {
            if *n != 11 {
                return Err(Error::PreconditionFailed("the eta product is only known for N = 11".into()));
            }
            let count = hecke_trace_by_count(*n, *p)?;
            let eta = hecke_coeff_level11(*p, *p as i64 + 1)?;
            if json {
                return Ok(envelope(json!({
                    "N": n, "p": p, "count": count, "eta": eta.to_string(),
                    "agree": eta.to_string() == count.to_string(),
                })));
            }
            Ok(format!("Tr(T_{p}) = {count} (count) = {eta} (eta)"))
        }
        Command::ConicExample => {
            let report = reproduce::run(&reproduce::Options {
                only: Some("conic".into()),
                jobs: 1,
            });
            let code = reproduce::conic_code()?;
            let sys = code.systematic()?;
            if json {
                return Ok(envelope(json!({
                    "points": reproduce::conic_points()?.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                    "rank": code.k(),
                    "generator": matrix_json(code.generator()),
                    "systematic": matrix_json(&sys.generator),
                    "permutation": sys.permutation,
                    "check": matrix_json(&sys.check),
                    "rows": report_rows_json(&report),
                })));
            }
            Ok(format!(
                "G =\n{}\nsystematic (columns {:?}) =\n{}\nH =\n{}\n{report}",
                code.generator(),
                sys.permutation,
                sys.generator,
                sys.check
            ))
        }
        Command::Reproduce { only, jobs } => Ok(reproduce_report(only.clone(), *jobs, json).0),
    }
}

/// Report text and whether every row passed or was an erratum.
fn reproduce_report(only: Option<String>, jobs: usize, json: bool) -> (String, bool) {
    let report = reproduce::run(&reproduce::Options { only, jobs });
    let ok = report.count(Status::Fail) == 0;
    let text = if json {
        envelope(json!({
            "rows": report_rows_json(&report),
            "pass": report.count(Status::Pass),
            "erratum": report.count(Status::Erratum),
            "fail": report.count(Status::Fail),
        }))
    } else {
        report.to_string()
    };
    (text, ok)
}

fn report_rows_json(report: &reproduce::Report) -> Value {
    report
        .rows
        .iter()
        .map(|r| {
            json!({
                "criterion": r.criterion, "group": r.group, "name": r.name,
                "status": r.status.to_string(), "detail": r.detail,
            })
        })
        .collect()
}

fn bounds(which: &BoundsCommand, json: bool) -> CmdResult {
    match which {
        BoundsCommand::Curve { q, grid, g, n } => {
            if *grid == 0 {
                return Err(Error::PreconditionFailed("grid must be positive".into()));
            }
            let prop7 = match (g, n) {
                (Some(g), Some(n)) => Some(prop7_bound::<f64>(*g, *n)),
                (None, None) => None,
                _ => return Err(Error::PreconditionFailed("--g and --n go together".into())),
            };
            let top = (*q - 1) as f64 / *q as f64;
            let mut rows = Vec::with_capacity(grid + 1);
            for i in 0..=*grid {
                let delta = top * i as f64 / *grid as f64;
                let gv = gv_bound::<f64>(*q, delta);
                let tvz = tvz_line::<f64>(*q, delta).ok();
                rows.push((delta, gv, tvz));
            }
            if json {
                let pts: Vec<Value> = rows
                    .iter()
                    .map(|(d, gv, tvz)| json!({"delta": d, "gv": gv, "tvz": tvz, "prop7": prop7}))
                    .collect();
                return Ok(envelope(json!({"q": q, "points": pts})));
            }
            let mut out = String::from(if prop7.is_some() { "delta,gv,tvz,prop7" } else { "delta,gv,tvz" });
            for (d, gv, tvz) in rows {
                let tvz = tvz.map_or(String::new(), |t| t.to_string());
                out.push_str(&format!("\n{d},{gv},{tvz}"));
                if let Some(b) = prop7 {
                    out.push_str(&format!(",{b}"));
                }
            }
            Ok(out)
        }
        BoundsCommand::Tvz { q, grid } => {
            let r = tvz_exceeds_gv::<f64>(*q, *grid)?;
            if json {
                return Ok(envelope(json!({"q": q, "interval": r.map(|(a, b)| [a, b])})));
            }
            Ok(match r {
                Some((a, b)) => format!("TVZ above GV for delta in ({a:.9}, {b:.9})"),
                None => "TVZ never above GV".to_string(),
            })
        }
    }
}

fn parse_factors(factors: &[String]) -> Result<EtaQuotientSpec, Error> {
    let mut out = Vec::new();
    for f in factors {
        let bad = || Error::PreconditionFailed(format!("bad factor {f}, expected d:r"));
        let (d, r) = f.split_once(':').ok_or_else(bad)?;
        out.push((d.trim().parse().map_err(|_| bad())?, r.trim().parse().map_err(|_| bad())?));
    }
    Ok(EtaQuotientSpec::new(&out))
}

fn qseries(series: SeriesArg, order: i64, factors: &[String], json: bool) -> CmdResult {
    let s: LaurentSeriesZ = match series {
        SeriesArg::J => j_series(order)?,
        SeriesArg::Delta => delta_series(order)?,
        SeriesArg::E4 => eisenstein_normalized(4, order)?,
        SeriesArg::E6 => eisenstein_normalized(6, order)?,
        SeriesArg::Eta => eta_quotient(&parse_factors(factors)?, order)?,
    };
    if json {
        let coeffs: Vec<String> = s.coefficients().iter().map(|c| c.to_string()).collect();
        return Ok(envelope(json!({
            "lowest": s.lowest_exponent(), "order": s.order(), "coefficients": coeffs,
        })));
    }
    Ok(s.to_string())
}
