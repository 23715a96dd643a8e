//! Thin CLI over the library: analytic counts, grids, orthonormality
//! checks, and Monte Carlo runs, with machine-readable output.
//!
//! Exit codes: 0 on success, 2 for validation problems, 3 when a numerical
//! diagnostic fired (conditioning or Monte Carlo budget).

use bergman_zeros::basis::{gram_matrix, BasisSpec};
use bergman_zeros::counts::{
    boundary_ratio, default_contour_nodes, expected_count_area, expected_count_contour,
    expected_count_disk, expected_count_disk_closed_form, expected_count_limit,
    expected_count_unit_disk, kac_count_disk, kac_scaling, scaling_limit, write_counts_csv,
    CountEstimate, CountMethod,
};
use bergman_zeros::error::{Error, Result};
use bergman_zeros::experiment::{
    convergence_report, run_mc, summary_json, write_roots_csv, ExperimentConfig,
};
use bergman_zeros::intensity::{intensity_grid, GridWindow};
use clap::{Args, Parser, Subcommand};
use serde_json::json;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "bergman-zeros", version, about = "Zeros of Gaussian random polynomials in Bergman bases on the unit disk")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BasisArg {
    /// Basis family: scaled-monomial, weighted-power:j=<real>,
    /// z-minus-one-squared, or custom:<path>
    #[arg(long, default_value = "scaled-monomial")]
    basis: String,
}

impl BasisArg {
    fn parse(&self) -> Result<BasisSpec> {
        BasisSpec::from_cli(&self.basis)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Monte Carlo zero-count experiment; prints a JSON summary
    McRun {
        #[command(flatten)]
        basis: BasisArg,
        /// Polynomial degree
        #[arg(long)]
        n: usize,
        /// Disk radii to count zeros in, in (0, 1]
        #[arg(long, value_delimiter = ',', default_value = "0.5,1.0")]
        radii: Vec<f64>,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Retain per-sample roots (required for --roots-csv)
        #[arg(long)]
        keep_roots: bool,
        /// Write kept roots as CSV `sample_index,re,im`
        #[arg(long)]
        roots_csv: Option<PathBuf>,
        /// Write per-radius counts as CSV `method,n,r,value,stderr`
        #[arg(long)]
        counts_csv: Option<PathBuf>,
    },
    /// Verify basis orthonormality through the Gram matrix
    Orthocheck {
        #[command(flatten)]
        basis: BasisArg,
        #[arg(long)]
        n: usize,
        /// Override radial quadrature order
        #[arg(long)]
        radial: Option<usize>,
        /// Override angular quadrature order
        #[arg(long)]
        angular: Option<usize>,
        /// Max-norm deviation from the identity beyond which exit is 3
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Evaluate the zero intensity on a lattice; prints CSV `x,y,rho,inside`
    IntensityGrid {
        #[command(flatten)]
        basis: BasisArg,
        #[arg(long)]
        n: usize,
        /// Half-width of the centered square window
        #[arg(long, default_value_t = 1.2)]
        half_width: f64,
        #[arg(long, default_value_t = 201)]
        resolution: usize,
        /// Output path (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Expected zero counts by one or more routes; prints counts CSV
    ExpectedCount {
        #[command(flatten)]
        basis: BasisArg,
        #[arg(long)]
        n: usize,
        /// Disk radius in (0, 1]
        #[arg(long)]
        r: f64,
        /// Comma list of rational-series, closed-form, contour,
        /// area-quadrature, limit-formula, kac; default picks the exact
        /// routes available for the basis
        #[arg(long, value_delimiter = ',')]
        methods: Option<Vec<String>>,
        /// Contour trapezoid nodes (default 8(n+1), at least 64)
        #[arg(long)]
        nodes: Option<usize>,
        /// Area-route radial quadrature order
        #[arg(long)]
        radial: Option<usize>,
        /// Area-route angular quadrature order
        #[arg(long)]
        angular: Option<usize>,
    },
    /// Boundary scaling limit of counts per degree; prints JSON
    ScalingLimit {
        /// Comma list of scaling parameters t > 0
        #[arg(long, value_delimiter = ',')]
        t: Vec<f64>,
        /// Also tabulate the Kac baseline limit
        #[arg(long)]
        kac: bool,
    },
    /// Kernel ratio conj(K01)/(n K00) on the unit circle; prints JSON
    BoundaryRatio {
        #[command(flatten)]
        basis: BasisArg,
        #[arg(long)]
        n: usize,
        /// Comma list of angles in radians (multiples of pi excluded)
        #[arg(long, value_delimiter = ',')]
        theta: Vec<f64>,
    },
    /// Expected counts along increasing degrees vs the limit law; JSON
    Convergence {
        #[command(flatten)]
        basis: BasisArg,
        #[arg(long, value_delimiter = ',')]
        degrees: Vec<usize>,
        #[arg(long, default_value_t = 1.0)]
        r: f64,
    },
}

fn open_out(path: &PathBuf) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path)?))
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values with string keys always serialize")
}

fn expected_count_dispatch(
    spec: &BasisSpec,
    n: usize,
    r: f64,
    method: &str,
    nodes: Option<usize>,
    quad: Option<(usize, usize)>,
) -> Result<CountEstimate> {
    let monomial_only = |what: &str| -> Result<()> {
        if *spec == BasisSpec::ScaledMonomial {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "{what} is specific to the scaled-monomial family; use contour or \
                 area-quadrature for {spec}"
            )))
        }
    };
    match method {
        "rational-series" | "closed-form" => {
            monomial_only(method)?;
            if r == 1.0 {
                return Ok(expected_count_unit_disk(n));
            }
            if method == "rational-series" {
                expected_count_disk(n, r)
            } else {
                expected_count_disk_closed_form(n, r)
            }
        }
        "limit-formula" => {
            monomial_only(method)?;
            Ok(CountEstimate {
                value: expected_count_limit(r)?,
                method: CountMethod::LimitFormula,
                n,
                radius: r,
                stderr: None,
            })
        }
        "contour" => Ok(expected_count_contour(
            spec,
            n,
            r,
            nodes.unwrap_or_else(|| default_contour_nodes(n)),
        )?
        .estimate),
        "area-quadrature" => expected_count_area(spec, n, r, quad),
        "kac" => Ok(CountEstimate {
            value: kac_count_disk(n, r)?,
            method: CountMethod::Kac,
            n,
            radius: r,
            stderr: None,
        }),
        other => Err(Error::Config(format!(
            "unknown count method {other:?}; expected rational-series, closed-form, \
             contour, area-quadrature, limit-formula, or kac"
        ))),
    }
}

fn run(cli: Cli) -> Result<()> {
    let stdout = std::io::stdout();
    match cli.command {
        Command::McRun {
            basis,
            n,
            radii,
            samples,
            seed,
            keep_roots,
            roots_csv,
            counts_csv,
        } => {
            let config = ExperimentConfig {
                basis: basis.parse()?,
                degree: n,
                radii,
                samples,
                master_seed: seed,
                keep_roots: keep_roots || roots_csv.is_some(),
            };
            let result = run_mc(&config)?;
            if let Some(path) = &roots_csv {
                write_roots_csv(open_out(path)?, &result)?;
            }
            if let Some(path) = &counts_csv {
                write_counts_csv(open_out(path)?, &result.count_estimates())?;
            }
            let summary = summary_json(&config, &result);
            writeln!(stdout.lock(), "{}", pretty(&summary))?;
        }
        Command::Orthocheck {
            basis,
            n,
            radial,
            angular,
            tol,
        } => {
            let spec = basis.parse()?;
            if tol < 0.0 || !tol.is_finite() {
                return Err(Error::Config(format!(
                    "tolerance must be finite and non-negative, got {tol}"
                )));
            }
            let orders = match (radial, angular) {
                (Some(r), Some(a)) => Some((r, a)),
                (None, None) => None,
                _ => {
                    return Err(Error::Config(
                        "--radial and --angular must be given together".into(),
                    ))
                }
            };
            let gram = gram_matrix(&spec, n, orders)?;
            let deviation = gram.max_identity_deviation();
            let summary = json!({
                "config": {"basis": spec.to_string(), "n": n, "tol": tol},
                "results": {"max_identity_deviation": deviation},
                "diagnostics": {
                    "approximate_quadrature": gram.approximate,
                    "below_exactness_threshold": gram.below_exactness,
                },
            });
            writeln!(stdout.lock(), "{}", pretty(&summary))?;
            if deviation.is_nan() || deviation > tol {
                return Err(Error::Conditioning(format!(
                    "Gram deviation {deviation:.3e} exceeds tolerance {tol:.3e}"
                )));
            }
        }
        Command::IntensityGrid {
            basis,
            n,
            half_width,
            resolution,
            out,
        } => {
            let spec = basis.parse()?;
            if half_width <= 0.0 || !half_width.is_finite() {
                return Err(Error::Config(format!(
                    "half-width must be positive and finite, got {half_width}"
                )));
            }
            let grid = intensity_grid(&spec, n, GridWindow::square(half_width), resolution)?;
            match &out {
                Some(path) => grid.write_csv(open_out(path)?)?,
                None => grid.write_csv(stdout.lock())?,
            }
        }
        Command::ExpectedCount {
            basis,
            n,
            r,
            methods,
            nodes,
            radial,
            angular,
        } => {
            let spec = basis.parse()?;
            let quad = match (radial, angular) {
                (Some(ra), Some(an)) => Some((ra, an)),
                (None, None) => None,
                _ => {
                    return Err(Error::Config(
                        "--radial and --angular must be given together".into(),
                    ))
                }
            };
            let methods = methods.unwrap_or_else(|| {
                if spec == BasisSpec::ScaledMonomial {
                    vec!["rational-series".into(), "contour".into()]
                } else {
                    vec!["contour".into()]
                }
            });
            let rows: Vec<CountEstimate> = methods
                .iter()
                .map(|m| expected_count_dispatch(&spec, n, r, m, nodes, quad))
                .collect::<Result<_>>()?;
            write_counts_csv(stdout.lock(), &rows)?;
        }
        Command::ScalingLimit { t, kac } => {
            if t.is_empty() {
                return Err(Error::Config("at least one t value is required".into()));
            }
            let rows = t
                .iter()
                .map(|&ti| {
                    let value = scaling_limit(ti)?;
                    let kac_value = if kac { Some(kac_scaling(ti)?) } else { None };
                    Ok(json!({"t": ti, "value": value, "kac": kac_value}))
                })
                .collect::<Result<Vec<_>>>()?;
            let summary = json!({
                "config": {"t": t, "kac": kac},
                "results": {"rows": rows, "t_to_zero_limit": 2.0 / 3.0},
                "diagnostics": {},
            });
            writeln!(stdout.lock(), "{}", pretty(&summary))?;
        }
        Command::BoundaryRatio { basis, n, theta } => {
            let spec = basis.parse()?;
            if theta.is_empty() {
                return Err(Error::Config("at least one theta value is required".into()));
            }
            let rows = theta
                .iter()
                .map(|&th| {
                    let b = boundary_ratio(&spec, n, th)?;
                    Ok(json!({
                        "theta": th,
                        "re": b.re,
                        "im": b.im,
                        "modulus": b.norm(),
                        "gap_to_two_thirds": (b.norm() - 2.0 / 3.0).abs(),
                    }))
                })
                .collect::<Result<Vec<_>>>()?;
            let summary = json!({
                "config": {"basis": spec.to_string(), "n": n, "theta": theta},
                "results": {"rows": rows},
                "diagnostics": {},
            });
            writeln!(stdout.lock(), "{}", pretty(&summary))?;
        }
        Command::Convergence { basis, degrees, r } => {
            let spec = basis.parse()?;
            let report = convergence_report(&spec, &degrees, r)?;
            let summary = json!({
                "config": {"basis": spec.to_string(), "degrees": degrees, "r": r},
                "results": report,
                "diagnostics": {"route": "contour", "default_nodes": degrees
                    .iter()
                    .map(|&d| default_contour_nodes(d))
                    .collect::<Vec<_>>()},
            });
            writeln!(stdout.lock(), "{}", pretty(&summary))?;
        }
    }
    Ok(())
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {e}");
        std::process::exit(if e.is_numerical() { 3 } else { 2 });
    }
}
