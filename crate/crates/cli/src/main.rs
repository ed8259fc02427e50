use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use regraph::grid::{spectrum_sweep, SweepSpec};
use regraph::verify::{self, VerifyOptions};
use regraph::{
    bound_report, classify, dual_spectrum, lambda_spectrum, psi_profile, schmidt_interval,
    tau_delta, GraphParams,
};
use regraph_cli::output::{
    BoundsOut, ConstantsOut, DualOut, PointwiseOut, PsiOut, SchmidtOut, SpectrumOut, ThresholdOut,
};
use regraph_cli::render::number;

#[derive(Parser)]
#[command(
    name = "regraph",
    version,
    about = "Exponent spectra of the regular graph"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// The spectrum λ_{n,1} >= ... >= λ_{n,n+2} for parameter λ (accepts `inf`).
    Spectrum {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        lambda: f64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// The dual spectrum w_{n,1} >= ... >= w_{n,n+2} for w_n = w.
    Dual {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        w: f64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Limits of the normalized successive minima.
    Psi {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        lambda: f64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Where λ_{n,j}(λ) crosses 1/n, if it does.
    Threshold {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        j: u32,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Parameter range giving λ_{n,T+1} > 1/n > λ_{n,T+2}.
    SchmidtInterval {
        #[arg(long)]
        n: u32,
        #[arg(long = "T", visible_alias = "t")]
        t: u32,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Unconditional and conditional upper bounds, optionally at w_n = w.
    Bounds {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        w: Option<f64>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// The constants τ, Δ and 2/τ.
    Constants {
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// CSV of the spectrum over an equally spaced λ grid.
    Sweep {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        lambda_min: f64,
        #[arg(long)]
        lambda_max: f64,
        /// Number of grid points, endpoints included.
        #[arg(long)]
        steps: usize,
        /// Defaults to stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the invariant suite.
    Verify {
        /// Shrink the grids about tenfold.
        #[arg(long)]
        quick: bool,
        #[arg(long, hide = true, default_value_t = 0.0)]
        perturb_last_minimum: f64,
    },
}

enum Failure {
    Lib(regraph::Error),
    Io(io::Error),
    Verify(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Lib(regraph::Error::Domain(_)) => 2,
            Failure::Lib(regraph::Error::NotRepresentable(_)) => 3,
            _ => 1,
        }
    }

    fn line(&self) -> String {
        let (token, msg) = match self {
            Failure::Lib(e) => (e.token(), e.to_string()),
            Failure::Io(e) => ("IoError", e.to_string()),
            Failure::Verify(m) => ("VerifyFailed", m.clone()),
        };
        format!("{token}: {}", msg.replace('\n', " "))
    }
}

impl From<regraph::Error> for Failure {
    fn from(e: regraph::Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Aligned `label  value` lines.
fn table(rows: &[(String, String)]) -> String {
    let width = rows.iter().map(|r| r.0.chars().count()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}

fn row(k: impl Into<String>, v: impl Into<String>) -> (String, String) {
    (k.into(), v.into())
}

fn indexed(rows: &mut Vec<(String, String)>, label: &str, n: u32, values: &[f64]) {
    for (i, v) in values.iter().enumerate() {
        rows.push(row(format!("{label}_({n},{})", i + 1), number(*v)));
    }
}

fn emit<T: Serialize>(
    format: Format,
    out: &T,
    rows: impl FnOnce() -> Vec<(String, String)>,
) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string(out).expect("serializable output");
            s.push('\n');
            s
        }
        Format::Table => table(&rows()),
    }
}

fn run_verify(quick: bool, perturbation: f64) -> Result<String, Failure> {
    let opts = VerifyOptions {
        quick,
        last_minimum_perturbation: perturbation,
    };
    let results = verify::run(&opts);
    let mut out = String::new();
    for r in &results {
        out.push_str(&format!("{r}\n"));
    }
    let failed: Vec<_> = results
        .iter()
        .filter(|r| !r.passed)
        .map(|r| r.name)
        .collect();
    out.push_str(&format!(
        "{} of {} checks passed\n",
        results.len() - failed.len(),
        results.len()
    ));
    print!("{out}");
    if failed.is_empty() {
        Ok(String::new())
    } else {
        Err(Failure::Verify(format!(
            "failed checks: {}",
            failed.join(", ")
        )))
    }
}

fn write_sweep(spec: &SweepSpec, output: Option<PathBuf>) -> Result<String, Failure> {
    let rows = spectrum_sweep(spec)?;
    let mut sink: Box<dyn Write> = match output {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let header: Vec<String> = std::iter::once("lambda".to_string())
        .chain((1..=spec.n + 2).map(|j| format!("l{j}")))
        .collect();
    writeln!(sink, "{}", header.join(","))?;
    for (lambda, s) in rows {
        let cells: Vec<String> = std::iter::once(lambda)
            .chain(s.values.iter().copied())
            .map(number)
            .collect();
        writeln!(sink, "{}", cells.join(","))?;
    }
    sink.flush()?;
    Ok(String::new())
}

fn run(command: Command) -> Result<String, Failure> {
    Ok(match command {
        Command::Spectrum { n, lambda, format } => {
            let s = lambda_spectrum(&GraphParams::new(n, lambda)?)?;
            let out = SpectrumOut {
                n,
                lambda,
                values: s.values.clone(),
                quotient: s.quotient,
            };
            emit(format, &out, || {
                let mut rows = vec![row("n", n.to_string()), row("lambda", number(lambda))];
                indexed(&mut rows, "lambda", n, &s.values);
                rows.push(row("quotient", number(s.quotient)));
                rows
            })
        }
        Command::Dual { n, w, format } => {
            let d = dual_spectrum(n, w)?;
            let out = DualOut {
                n,
                w,
                values: d.values.clone(),
                quotient: d.quotient,
            };
            emit(format, &out, || {
                let mut rows = vec![row("n", n.to_string()), row("w", number(w))];
                indexed(&mut rows, "w", n, &d.values);
                rows.push(row("quotient", number(d.quotient)));
                rows
            })
        }
        Command::Psi { n, lambda, format } => {
            let p = psi_profile(&GraphParams::new(n, lambda)?)?;
            let out = PsiOut {
                n,
                lambda,
                psi_lower: p.psi_lower.clone(),
                psi_upper: p.psi_upper.clone(),
            };
            emit(format, &out, || {
                let mut rows = vec![row("n", n.to_string()), row("lambda", number(lambda))];
                indexed(&mut rows, "psi_lower", n, &p.psi_lower);
                indexed(&mut rows, "psi_upper", n, &p.psi_upper);
                rows
            })
        }
        Command::Threshold { n, j, format } => {
            let r = classify(n, j)?;
            let out = ThresholdOut {
                n,
                j,
                classification: r.classification.as_str().to_string(),
                tilde_lambda: r.tilde_lambda,
                theta_root: r.theta_root,
            };
            emit(format, &out, || {
                let opt = |v: Option<f64>| v.map_or_else(|| "-".to_string(), number);
                vec![
                    row("n", n.to_string()),
                    row("j", j.to_string()),
                    row("classification", r.classification.as_str()),
                    row("tilde_lambda", opt(r.tilde_lambda)),
                    row("theta_root", opt(r.theta_root)),
                ]
            })
        }
        Command::SchmidtInterval { n, t, format } => {
            let i = schmidt_interval(n, t)?;
            let out = SchmidtOut {
                n,
                t,
                lo: i.lo,
                hi: i.hi,
            };
            emit(format, &out, || {
                vec![
                    row("n", n.to_string()),
                    row("T", t.to_string()),
                    row("lo", number(i.lo)),
                    row("hi", number(i.hi)),
                ]
            })
        }
        Command::Bounds { n, w, format } => {
            let r = bound_report(n, w)?;
            let out = BoundsOut {
                n,
                unconditional: r.unconditional,
                conditional_star: r.conditional_star,
                conditional_w: r.conditional_w,
                asymptotic_gap: r.asymptotic_gap,
                crossing_w: r.crossing_w,
                caveat: r.caveat,
                pointwise: r.pointwise.map(|p| PointwiseOut {
                    w: p.w,
                    linear_form_cap: p.linear_form_cap,
                    phi: p.phi,
                    star_bound: p.star_bound,
                    w_bound: p.w_bound,
                }),
            };
            emit(format, &out, || {
                let mut rows = vec![
                    row("n", n.to_string()),
                    row("unconditional", number(r.unconditional)),
                    row("conditional_star", number(r.conditional_star)),
                    row("conditional_w", number(r.conditional_w)),
                    row("asymptotic_gap", number(r.asymptotic_gap)),
                    row("crossing_w", number(r.crossing_w)),
                    row("caveat", r.caveat.to_string()),
                ];
                if let Some(p) = r.pointwise {
                    rows.extend([
                        row("w", number(p.w)),
                        row("linear_form_cap", number(p.linear_form_cap)),
                        row("phi", number(p.phi)),
                        row("star_bound", number(p.star_bound)),
                        row("w_bound", number(p.w_bound)),
                    ]);
                }
                rows
            })
        }
        Command::Constants { format } => {
            let c = tau_delta();
            let out = ConstantsOut {
                tau: c.tau,
                delta: c.delta,
                theta: c.theta,
            };
            emit(format, &out, || {
                vec![
                    row("tau", number(c.tau)),
                    row("delta", number(c.delta)),
                    row("theta", number(c.theta)),
                ]
            })
        }
        Command::Sweep {
            n,
            lambda_min,
            lambda_max,
            steps,
            output,
        } => write_sweep(&SweepSpec::new(n, lambda_min, lambda_max, steps)?, output)?,
        Command::Verify {
            quick,
            perturb_last_minimum,
        } => run_verify(quick, perturb_last_minimum)?,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or_default();
            eprintln!("UsageError: {}", first.trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("{}", f.line());
            ExitCode::from(f.exit_code())
        }
    }
}
