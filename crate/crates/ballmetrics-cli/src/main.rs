//! `ballmetrics` command line: evaluate metrics, run verification suites,
//! solve constants, evaluate distortion bounds, and emit tables.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error, 3 a verification
//! run found violations.

use std::fmt::Write as _;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ballmetrics::analysis::{
    brute_force_extremum, cassinian_product_bound, inequality_names, lemma21_eval,
    m_function, sharpness_probe, solve_alpha, verify_inequality, Lemma21Function, OracleMetric,
};
use ballmetrics::ball::{
    hat_c_ball, rho_ball, s_ball, s_extremal_angle, sh_half_rho, tangency_certificate, Method,
    MetricValue,
};
use ballmetrics::distortion::{
    c_of_k, casgrow_bound, eta_k, mu, phi_k, rho_growth_bound, verify_casgrow_against_eta,
    DistortionParams,
};
use ballmetrics::domain::boundary_distance;
use ballmetrics::generic::{cassinian_generic, j_generic, jung_ratio_bound, s_generic};
use ballmetrics::geometry::{angle_between, reduce_to_plane};
use ballmetrics::report::{fmt_g15, to_json_string};
use ballmetrics::{DomainSpec, Point, SampledDomain};

const PROBE_NAMES: &[&str] = &["two_sc", "lambda_j_chat", "lambda_j_c", "imsz_equality"];

#[derive(Parser)]
#[command(
    name = "ballmetrics",
    version,
    about = "Cassinian, triangular-ratio, distance-ratio and hyperbolic metrics \
             on the unit ball and sampled domains",
    arg_required_else_help = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MetricName {
    /// Hyperbolic metric (unit ball only)
    Rho,
    /// sh(rho/2) (unit ball only)
    Shrho,
    /// Distance ratio metric
    J,
    /// Cassinian metric
    C,
    /// Triangular ratio metric
    S,
    /// Lower Cassinian bound via the nearest boundary point
    Chat,
    /// Distance from --x to the domain boundary (no --y)
    Bd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    /// Equal-modulus triangular-ratio closed form over an (r, omega) grid
    SClosedForm,
    /// Tangency angles, gamma and certificate residuals
    Tangency,
    /// Cassinian oval products along the circle for a pair and its
    /// centered translate
    Oval,
    /// Plane reduction of a pair: norms, angle and planar coordinates
    PlanePair,
    /// The sharp-constant quotient m(t)
    MFunction,
    /// The four monotone logarithm-lemma functions on their grids
    Lemma21,
    /// A sharpness probe (requires --name)
    Sharpness,
    /// Jung ratio bounds for built-in shapes (and --domain, when given)
    Jung,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a metric at a pair of points
    Eval {
        /// Metric to evaluate
        #[arg(long, value_enum)]
        metric: MetricName,
        /// First point, comma-separated coordinates (e.g. 0.5,0)
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        /// Second point (not used by --metric bd)
        #[arg(long, allow_hyphen_values = true)]
        y: Option<String>,
        /// Boundary CSV file; evaluates on the sampled domain instead of
        /// the unit ball
        #[arg(long)]
        domain: Option<String>,
        /// Expected dimension; cross-checked against the parsed points
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Run a registered inequality over seeded random pairs
    Verify {
        /// Inequality name (see --help for the registry)
        #[arg(long)]
        name: String,
        /// Ball dimension to sample in
        #[arg(long, default_value_t = 2)]
        dim: usize,
        /// Number of random pairs
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        /// RNG seed
        #[arg(long, env = "BALLMETRICS_SEED", default_value_t = 0)]
        seed: u64,
        /// Violation tolerance (defaults to the registry's per-inequality
        /// tolerance; may be negative to demand strictly positive slack)
        #[arg(long, allow_hyphen_values = true)]
        tolerance: Option<f64>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Solve the sharp comparison constants alpha and a
    Constants {
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Evaluate the quasiregular distortion stack
    #[command(group(
        ArgGroup::new("which")
            .required(true)
            .args(["phi", "eta", "c_of_k", "casgrow", "mu", "rho_growth", "eta_check"]),
    ))]
    Distort {
        /// Maximal dilatation K >= 1
        #[arg(long = "K")]
        k: f64,
        /// phi_K at this r in [0, 1]
        #[arg(long)]
        phi: Option<f64>,
        /// eta_K at this t >= 0
        #[arg(long)]
        eta: Option<f64>,
        /// The growth constant c(K) = 2 arth(phi_K(th 1/2))
        #[arg(long = "c-of-k")]
        c_of_k: bool,
        /// Cassinian growth bound at this t = c(0, x)
        #[arg(long)]
        casgrow: Option<f64>,
        /// Grotzsch modulus mu at this r in (0, 1) (K is ignored)
        #[arg(long)]
        mu: Option<f64>,
        /// Hyperbolic growth bound c(K) max(rho, rho^(1/K)) at this rho
        #[arg(long = "rho-growth")]
        rho_growth: Option<f64>,
        /// Compare eta_K(t) against the Cassinian growth bound at this t
        #[arg(long = "eta-check")]
        eta_check: Option<f64>,
        /// Inversion tolerance for mu^{-1}
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Brute-force boundary extremum oracle
    #[command(group(
        ArgGroup::new("target")
            .required(true)
            .args(["metric", "product_bound"]),
    ))]
    Oracle {
        /// Metric to brute-force: c or s
        #[arg(long, value_parser = ["c", "s"])]
        metric: Option<String>,
        /// Evaluate the Cassinian oval product bound instead
        #[arg(long = "product-bound")]
        product_bound: bool,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        /// Number of coarse grid angles
        #[arg(long, default_value_t = 65_536)]
        grid: usize,
        /// Golden-section refinement iterations per coarse basin
        #[arg(long = "refine-iters", default_value_t = 64)]
        refine_iters: usize,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Emit CSV tables behind the closed forms and figures
    Table {
        #[arg(long, value_enum)]
        which: TableKind,
        /// Grid resolution, where applicable
        #[arg(long, default_value_t = 16)]
        steps: usize,
        /// Pair for oval / plane-pair tables
        #[arg(long, allow_hyphen_values = true, default_value = "0.5,0")]
        x: String,
        #[arg(long, allow_hyphen_values = true, default_value = "-0.5,0")]
        y: String,
        /// Probe name for --which sharpness
        #[arg(long)]
        name: Option<String>,
        /// Boundary CSV for --which jung
        #[arg(long)]
        domain: Option<String>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

enum CliError {
    Usage(String),
    Domain(String),
}

impl From<ballmetrics::Error> for CliError {
    fn from(e: ballmetrics::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                std::process::exit(0);
            }
            let msg = e.to_string();
            eprintln!("{}", msg.lines().next().unwrap_or("error: invalid arguments"));
            std::process::exit(1);
        }
    };
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            std::process::exit(1);
        }
        Err(CliError::Domain(m)) => {
            eprintln!("error: {m}");
            std::process::exit(2);
        }
    }
}

fn parse_point(label: &str, s: &str, dim: Option<usize>) -> Result<Point, CliError> {
    let coords = s
        .split(',')
        .map(|f| {
            f.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Usage(format!("--{label}: {f:?} is not a number")))
        })
        .collect::<Result<Vec<f64>, CliError>>()?;
    if coords.len() < 2 {
        return Err(CliError::Usage(format!(
            "--{label}: need at least two coordinates, got {}",
            coords.len()
        )));
    }
    if let Some(d) = dim {
        if coords.len() != d {
            return Err(CliError::Usage(format!(
                "--{label} has {} coordinates but --dim is {d}",
                coords.len()
            )));
        }
    }
    Point::new(coords).map_err(|e| CliError::Usage(format!("--{label}: {e}")))
}

fn resolve_format(format: Option<Format>, table: bool) -> Result<Format, CliError> {
    match (table, format) {
        (true, None | Some(Format::Csv)) => Ok(Format::Csv),
        (true, Some(_)) => Err(CliError::Usage(
            "tables are emitted as CSV; drop --format or pass --format csv".into(),
        )),
        (false, None) => Ok(Format::Json),
        (false, Some(Format::Csv)) => Err(CliError::Usage(
            "CSV is reserved for table emission; use --format json or text".into(),
        )),
        (false, Some(f)) => Ok(f),
    }
}

#[derive(Serialize)]
struct EvalOutput<'a> {
    metric: &'a str,
    value: f64,
    witness: Option<&'a Point>,
    method: Method,
}

#[derive(Serialize)]
struct DistortOutput<'a> {
    k: f64,
    function: &'a str,
    argument: Option<f64>,
    value: f64,
}

#[derive(Serialize)]
struct EtaCheckOutput {
    k: f64,
    function: &'static str,
    argument: f64,
    eta: f64,
    bound: f64,
    holds: bool,
}

#[derive(Serialize)]
struct OracleOutput<'a> {
    metric: &'a str,
    grid: usize,
    refine_iters: usize,
    value: f64,
    witness: Option<&'a Point>,
    method: Method,
}

/// Key/value text rendering of a flat JSON object.
fn print_text_from_json(json: &str) {
    let trimmed = json.trim_start_matches('{').trim_end_matches('}');
    // Reports are flat; a shallow split on top-level commas is enough.
    let mut depth = 0;
    let mut field = String::new();
    let mut fields = Vec::new();
    for ch in trimmed.chars() {
        match ch {
            '[' | '{' => depth += 1,
            ']' | '}' => depth -= 1,
            ',' if depth == 0 => {
                fields.push(std::mem::take(&mut field));
                continue;
            }
            _ => {}
        }
        field.push(ch);
    }
    if !field.is_empty() {
        fields.push(field);
    }
    for f in fields {
        if let Some((k, v)) = f.split_once(':') {
            println!("{} = {}", k.trim_matches('"'), v);
        }
    }
}

fn emit(format: Format, json: String) {
    match format {
        Format::Json => println!("{json}"),
        Format::Text => print_text_from_json(&json),
        Format::Csv => unreachable!("csv handled by table emitters"),
    }
}

fn load_domain(path: &str) -> Result<DomainSpec, CliError> {
    Ok(DomainSpec::Sampled(SampledDomain::from_csv(path)?))
}

fn run(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Eval {
            metric,
            x,
            y,
            domain,
            dim,
            format,
        } => {
            let format = resolve_format(format, false)?;
            let x = parse_point("x", &x, dim)?;
            let domain_spec = match &domain {
                Some(path) => load_domain(path)?,
                None => DomainSpec::unit_ball(x.dim())?,
            };
            if metric == MetricName::Bd {
                if y.is_some() {
                    return Err(CliError::Usage("--metric bd takes no --y".into()));
                }
                let value = boundary_distance(&domain_spec, &x)?;
                let out = EvalOutput {
                    metric: "bd",
                    value,
                    witness: None,
                    method: Method::ClosedForm,
                };
                emit(format, to_json_string(&out));
                return Ok(0);
            }
            let y = parse_point(
                "y",
                y.as_deref()
                    .ok_or_else(|| CliError::Usage("--y is required".into()))?,
                dim,
            )?;
            if x.dim() != y.dim() {
                return Err(CliError::Usage(format!(
                    "--x is {}-dimensional but --y is {}-dimensional",
                    x.dim(),
                    y.dim()
                )));
            }
            let (name, value, metric_value): (&str, f64, Option<MetricValue>) = match metric {
                MetricName::Rho | MetricName::Shrho if domain.is_some() => {
                    return Err(CliError::Usage(
                        "rho and shrho are defined on the unit ball only; drop --domain".into(),
                    ));
                }
                MetricName::Rho => ("rho", rho_ball(&x, &y)?, None),
                MetricName::Shrho => ("shrho", sh_half_rho(&x, &y)?, None),
                MetricName::J => ("j", j_generic(&domain_spec, &x, &y)?, None),
                MetricName::C => {
                    let m = cassinian_generic(&domain_spec, &x, &y)?;
                    ("c", m.value, Some(m))
                }
                MetricName::S => {
                    let m = s_generic(&domain_spec, &x, &y)?;
                    ("s", m.value, Some(m))
                }
                MetricName::Chat => {
                    if domain.is_some() {
                        return Err(CliError::Usage(
                            "chat is defined on the unit ball only; drop --domain".into(),
                        ));
                    }
                    let m = hat_c_ball(&x, &y)?;
                    ("chat", m.value, Some(m))
                }
                MetricName::Bd => unreachable!("handled above"),
            };
            let out = EvalOutput {
                metric: name,
                value,
                witness: metric_value.as_ref().and_then(|m| m.witness.as_ref()),
                method: metric_value.as_ref().map_or(Method::ClosedForm, |m| m.method),
            };
            emit(format, to_json_string(&out));
            Ok(0)
        }

        Command::Verify {
            name,
            dim,
            samples,
            seed,
            tolerance,
            format,
        } => {
            let format = resolve_format(format, false)?;
            if !inequality_names().contains(&name.as_str()) {
                return Err(CliError::Usage(format!(
                    "unknown inequality {name:?}; registered: {}",
                    inequality_names().join(", ")
                )));
            }
            let report = verify_inequality(&name, dim, samples, seed, tolerance)?;
            let code = if report.violations > 0 { 3 } else { 0 };
            emit(format, to_json_string(&report));
            Ok(code)
        }

        Command::Constants { format } => {
            let format = resolve_format(format, false)?;
            emit(format, to_json_string(&solve_alpha()?));
            Ok(0)
        }

        Command::Distort {
            k,
            phi,
            eta,
            c_of_k: want_c,
            casgrow,
            mu: mu_arg,
            rho_growth,
            eta_check,
            tol,
            format,
        } => {
            let format = resolve_format(format, false)?;
            let params = match tol {
                Some(t) => DistortionParams::with_tol(k, t)?,
                None => DistortionParams::new(k)?,
            };
            let json = if let Some(r) = phi {
                to_json_string(&DistortOutput {
                    k,
                    function: "phi",
                    argument: Some(r),
                    value: phi_k(&params, r)?,
                })
            } else if let Some(t) = eta {
                to_json_string(&DistortOutput {
                    k,
                    function: "eta",
                    argument: Some(t),
                    value: eta_k(&params, t)?,
                })
            } else if want_c {
                to_json_string(&DistortOutput {
                    k,
                    function: "c_of_k",
                    argument: None,
                    value: c_of_k(&params),
                })
            } else if let Some(t) = casgrow {
                to_json_string(&DistortOutput {
                    k,
                    function: "casgrow",
                    argument: Some(t),
                    value: casgrow_bound(&params, t)?,
                })
            } else if let Some(r) = mu_arg {
                to_json_string(&DistortOutput {
                    k,
                    function: "mu",
                    argument: Some(r),
                    value: mu(r)?,
                })
            } else if let Some(rho) = rho_growth {
                to_json_string(&DistortOutput {
                    k,
                    function: "rho_growth",
                    argument: Some(rho),
                    value: rho_growth_bound(&params, rho)?,
                })
            } else if let Some(t) = eta_check {
                to_json_string(&EtaCheckOutput {
                    k,
                    function: "casgrow_vs_eta",
                    argument: t,
                    eta: eta_k(&params, t)?,
                    bound: casgrow_bound(&params, t)?,
                    holds: verify_casgrow_against_eta(&params, t)?,
                })
            } else {
                unreachable!("clap group requires one selector")
            };
            emit(format, json);
            Ok(0)
        }

        Command::Oracle {
            metric,
            product_bound,
            x,
            y,
            grid,
            refine_iters,
            format,
        } => {
            let format = resolve_format(format, false)?;
            let x = parse_point("x", &x, None)?;
            let y = parse_point("y", &y, None)?;
            if product_bound {
                let b = cassinian_product_bound(&x, &y)?;
                emit(format, to_json_string(&b));
                return Ok(0);
            }
            let metric = metric.expect("clap group requires one selector");
            let which = if metric == "c" {
                OracleMetric::Cassinian
            } else {
                OracleMetric::Triangular
            };
            let m = brute_force_extremum(which, &x, &y, grid, refine_iters)?;
            let out = OracleOutput {
                metric: &metric,
                grid,
                refine_iters,
                value: m.value,
                witness: m.witness.as_ref(),
                method: m.method,
            };
            emit(format, to_json_string(&out));
            Ok(0)
        }

        Command::Table {
            which,
            steps,
            x,
            y,
            name,
            domain,
            format,
        } => {
            resolve_format(format, true)?;
            if steps == 0 {
                return Err(CliError::Usage("--steps must be positive".into()));
            }
            let csv = match which {
                TableKind::SClosedForm => s_closed_form_table(steps)?,
                TableKind::Tangency => tangency_table(steps)?,
                TableKind::Oval => {
                    let x = parse_point("x", &x, None)?;
                    let y = parse_point("y", &y, None)?;
                    oval_table(&x, &y, steps)?
                }
                TableKind::PlanePair => {
                    let x = parse_point("x", &x, None)?;
                    let y = parse_point("y", &y, None)?;
                    plane_pair_table(&x, &y)?
                }
                TableKind::MFunction => m_function_table(steps)?,
                TableKind::Lemma21 => lemma21_table(steps)?,
                TableKind::Sharpness => {
                    let name = name.ok_or_else(|| {
                        CliError::Usage("--which sharpness requires --name".into())
                    })?;
                    if !PROBE_NAMES.contains(&name.as_str()) {
                        return Err(CliError::Usage(format!(
                            "unknown probe {name:?}; available: {}",
                            PROBE_NAMES.join(", ")
                        )));
                    }
                    sharpness_table(&name, steps)?
                }
                TableKind::Jung => jung_table(domain.as_deref())?,
            };
            print!("{csv}");
            Ok(0)
        }
    }
}

fn s_closed_form_table(steps: usize) -> Result<String, CliError> {
    let mut out = String::from("r,omega,s,branch,theta,theta_alt\n");
    for i in 1..=steps {
        let r = i as f64 / (steps + 1) as f64;
        for j in 1..=steps {
            let omega = std::f64::consts::PI * j as f64 / steps as f64;
            let m = s_ball(
                &Point::xy(r, 0.0),
                &Point::xy(r * omega.cos(), r * omega.sin()),
            )?;
            let angles = s_extremal_angle(r, omega)?;
            let branch = if angles.bisector { "bisector" } else { "two_point" };
            let alt = angles
                .theta_alt
                .map(fmt_g15)
                .unwrap_or_default();
            writeln!(
                out,
                "{},{},{},{branch},{},{alt}",
                fmt_g15(r),
                fmt_g15(omega),
                fmt_g15(m.value),
                fmt_g15(angles.theta)
            )
            .expect("string write");
        }
    }
    Ok(out)
}

fn tangency_table(steps: usize) -> Result<String, CliError> {
    let mut out = String::from("r,omega,solution,theta,gamma,cos_residual,ptolemy_residual\n");
    for i in 0..steps {
        let r = 0.5 + 0.45 * i as f64 / steps as f64;
        let omega_lo = 2.0 * r.acos();
        let omega = 0.5 * (omega_lo + std::f64::consts::PI);
        let angles = s_extremal_angle(r, omega)?;
        let x = Point::xy(r, 0.0);
        let y = Point::xy(r * omega.cos(), r * omega.sin());
        let mut rows = vec![("minus", angles.theta)];
        if let Some(alt) = angles.theta_alt {
            rows.push(("plus", alt));
        }
        for (solution, theta) in rows {
            let z = Point::xy(theta.cos(), theta.sin());
            let cert = tangency_certificate(&x, &y, &z)?;
            writeln!(
                out,
                "{},{},{solution},{},{},{},{}",
                fmt_g15(r),
                fmt_g15(omega),
                fmt_g15(theta),
                fmt_g15(cert.gamma),
                fmt_g15(cert.cos_residual),
                fmt_g15(cert.ptolemy_residual)
            )
            .expect("string write");
        }
    }
    Ok(out)
}

fn oval_table(x: &Point, y: &Point, steps: usize) -> Result<String, CliError> {
    let pair = reduce_to_plane(x, y)?;
    let (x2, y2) = (pair.x2, pair.y2);
    let half_gap = 0.5 * x.dist(y);
    let xc = Point::xy(-half_gap, 0.0);
    let yc = Point::xy(half_gap, 0.0);
    let mut out = String::from("theta,product,centered_product\n");
    for k in 0..steps {
        let theta = 2.0 * std::f64::consts::PI * k as f64 / steps as f64;
        let z = Point::xy(theta.cos(), theta.sin());
        let product = x2.dist(&z) * z.dist(&y2);
        let centered = xc.dist(&z) * z.dist(&yc);
        writeln!(
            out,
            "{},{},{}",
            fmt_g15(theta),
            fmt_g15(product),
            fmt_g15(centered)
        )
        .expect("string write");
    }
    Ok(out)
}

fn plane_pair_table(x: &Point, y: &Point) -> Result<String, CliError> {
    let pair = reduce_to_plane(x, y)?;
    let omega_direct = if !x.is_zero() && !y.is_zero() {
        fmt_g15(angle_between(x, y)?)
    } else {
        String::new()
    };
    let mut out =
        String::from("norm_x,norm_y,omega,angle_between,x2_1,x2_2,y2_1,y2_2,gap,gap_reduced,degenerate\n");
    writeln!(
        out,
        "{},{},{},{omega_direct},{},{},{},{},{},{},{}",
        fmt_g15(x.norm()),
        fmt_g15(y.norm()),
        fmt_g15(pair.omega),
        fmt_g15(pair.x2.coords()[0]),
        fmt_g15(pair.x2.coords()[1]),
        fmt_g15(pair.y2.coords()[0]),
        fmt_g15(pair.y2.coords()[1]),
        fmt_g15(x.dist(y)),
        fmt_g15(pair.x2.dist(&pair.y2)),
        pair.degenerate
    )
    .expect("string write");
    Ok(out)
}

fn m_function_table(steps: usize) -> Result<String, CliError> {
    let mut out = String::from("t,m\n");
    for i in 1..=steps {
        let t = i as f64 / (steps + 1) as f64;
        writeln!(out, "{},{}", fmt_g15(t), fmt_g15(m_function(t)?)).expect("string write");
    }
    Ok(out)
}

fn lemma21_table(steps: usize) -> Result<String, CliError> {
    let mut out = String::from("function,arg,aux,value\n");
    let grid = |lo: f64, hi: f64| -> Vec<f64> {
        (0..steps)
            .map(|i| lo + (hi - lo) * i as f64 / steps.max(2).saturating_sub(1) as f64)
            .collect()
    };
    for t in grid(0.01, 10.0) {
        let v = lemma21_eval(Lemma21Function::F, t, None)?;
        writeln!(out, "f,{},,{}", fmt_g15(t), fmt_g15(v)).expect("string write");
    }
    for t in grid(0.01, 10.0) {
        let v = lemma21_eval(Lemma21Function::G, t, Some(2.0))?;
        writeln!(out, "g,{},2,{}", fmt_g15(t), fmt_g15(v)).expect("string write");
    }
    for t in grid(0.01, 0.99) {
        let v = lemma21_eval(Lemma21Function::H, t, None)?;
        writeln!(out, "h,{},,{}", fmt_g15(t), fmt_g15(v)).expect("string write");
    }
    for b in grid(0.01, 1.99) {
        let v = lemma21_eval(Lemma21Function::Fb, b, Some(0.5))?;
        writeln!(out, "fb,{},0.5,{}", fmt_g15(b), fmt_g15(v)).expect("string write");
    }
    Ok(out)
}

fn sharpness_table(name: &str, steps: usize) -> Result<String, CliError> {
    let mut out = String::from("parameter,ratio\n");
    for (t, ratio) in sharpness_probe(name, steps)? {
        writeln!(out, "{},{}", fmt_g15(t), fmt_g15(ratio)).expect("string write");
    }
    Ok(out)
}

fn jung_table(domain: Option<&str>) -> Result<String, CliError> {
    let mut out = String::from("domain,n,diameter,bound\n");
    let mut push = |name: &str, spec: &DomainSpec| -> Result<(), CliError> {
        let bound = jung_ratio_bound(spec)?;
        let (n, diam) = match spec {
            DomainSpec::UnitBall { dim } => (*dim, 2.0),
            DomainSpec::Sampled(s) => (s.dim(), s.diameter()),
        };
        writeln!(out, "{name},{n},{},{}", fmt_g15(diam), fmt_g15(bound)).expect("string write");
        Ok(())
    };
    push("unit_ball_2", &DomainSpec::unit_ball(2)?)?;
    push("unit_ball_3", &DomainSpec::unit_ball(3)?)?;
    push(
        "circle_r1",
        &DomainSpec::Sampled(SampledDomain::circle(1.0, 1024)?),
    )?;
    push(
        "ellipse_0.9_0.6",
        &DomainSpec::Sampled(SampledDomain::ellipse(0.9, 0.6, 1024)?),
    )?;
    push(
        "square_h1",
        &DomainSpec::Sampled(SampledDomain::square(1.0, 1024)?),
    )?;
    push(
        "annulus_0.3_0.9",
        &DomainSpec::Sampled(SampledDomain::annulus(0.3, 0.9, 1024)?),
    )?;
    if let Some(path) = domain {
        let spec = load_domain(path)?;
        push("file", &spec)?;
    }
    Ok(out)
}
