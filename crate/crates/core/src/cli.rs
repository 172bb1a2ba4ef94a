//! Command-line front end.
//!
//! Every grid command writes CSV (`x,re,im,...`) or JSON (`{config, rows}`)
//! to `--output` or stdout. Points where the construction is singular are
//! skipped; when more than half the grid is skipped the run fails with
//! [`EXIT_SINGULAR`].

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::kummer::ComplexScalar;
use crate::painleve::{extremal_state, Family, PivSolution};
use crate::seed::TransformParams;
use crate::susy::{partner_potential, spectrum};
use crate::verify::{reference_parameter_sets, standard_suite, ResidualReport};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_INVALID_CONFIG: u8 = 2;
pub const EXIT_SINGULAR: u8 = 3;

const DEFAULT_N_MAX: u32 = 5;
const MAX_VERIFY_N: u32 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// Partner potential next to the oscillator potential.
    Potential,
    /// One Painlevé IV solution and its pointwise residual.
    Piv,
    /// Spectrum of the partner Hamiltonian.
    Spectrum,
    /// Extremal state of one family, up to scale.
    Extremal,
    /// Residual reports; nonzero exit on failure.
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Parser, Serialize)]
#[command(
    name = "susy-piv",
    version,
    about = "Complex SUSY partners of the oscillator and their Painlevé IV solutions"
)]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,
    #[arg(long, default_value_t = -1.0, allow_negative_numbers = true)]
    pub epsilon_re: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub epsilon_im: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub lambda: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub kappa: f64,
    /// 1, 2 or 3; required by `piv` and `extremal` only.
    #[arg(long)]
    pub family: Option<u8>,
    #[arg(long, default_value_t = -5.0, allow_negative_numbers = true)]
    pub xmin: f64,
    #[arg(long, default_value_t = 5.0, allow_negative_numbers = true)]
    pub xmax: f64,
    #[arg(long, default_value_t = 0.01)]
    pub step: f64,
    /// Highest oscillator level for `spectrum` and `verify` (default 5).
    #[arg(long)]
    pub n_max: Option<u32>,
    /// Output file; stdout when absent.
    #[arg(long = "output", short = 'o')]
    pub output_path: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// With `verify`: run the suite on every reference parameter set.
    #[arg(long)]
    pub all: bool,
}

impl RunConfig {
    /// Defaults for `command`, as if no flags were given.
    pub fn new(command: Command) -> Self {
        Self {
            command,
            epsilon_re: -1.0,
            epsilon_im: 1.0,
            lambda: 1.0,
            kappa: 1.0,
            family: None,
            xmin: -5.0,
            xmax: 5.0,
            step: 0.01,
            n_max: None,
            output_path: None,
            format: Format::Csv,
            all: false,
        }
    }

    pub fn params(&self) -> Result<TransformParams> {
        TransformParams::new(
            ComplexScalar::new(self.epsilon_re, self.epsilon_im),
            self.lambda,
            self.kappa,
        )
    }

    pub fn grid(&self) -> Result<Grid> {
        Grid::new(self.xmin, self.xmax, self.step)
    }

    fn family(&self) -> Result<Family> {
        let index = self
            .family
            .ok_or(Error::InvalidConfig("--family is required"))?;
        Family::try_from(index)
    }

    pub fn validate(&self) -> Result<()> {
        self.params()?;
        self.grid()?;
        let needs_family = matches!(self.command, Command::Piv | Command::Extremal);
        match (needs_family, self.family) {
            (true, _) => {
                self.family()?;
            }
            (false, Some(_)) => {
                return Err(Error::InvalidConfig(
                    "--family only applies to piv and extremal",
                ))
            }
            (false, None) => {}
        }
        if self.n_max.is_some() && !matches!(self.command, Command::Spectrum | Command::Verify) {
            return Err(Error::InvalidConfig(
                "--n-max only applies to spectrum and verify",
            ));
        }
        if self.command == Command::Verify && self.n_max.unwrap_or(DEFAULT_N_MAX) > MAX_VERIFY_N {
            return Err(Error::DegreeTooLarge {
                n: self.n_max.unwrap_or(0),
                max: MAX_VERIFY_N,
            });
        }
        if self.all && self.command != Command::Verify {
            return Err(Error::InvalidConfig("--all only applies to verify"));
        }
        Ok(())
    }
}

/// A complex value as a two-field record.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

impl From<ComplexScalar> for Complex {
    fn from(z: ComplexScalar) -> Self {
        Self { re: z.re, im: z.im }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Row {
    Potential {
        x: f64,
        partner: Complex,
        oscillator: Complex,
    },
    Piv {
        x: f64,
        g: Complex,
        residual: Complex,
    },
    Level {
        index: usize,
        level: Complex,
        off_axis: bool,
    },
    Extremal {
        x: f64,
        psi: Complex,
    },
    Report {
        params: TransformParams,
        report: ResidualReport,
        passes: bool,
    },
}

impl Row {
    fn csv_header(command: Command) -> &'static str {
        match command {
            Command::Potential => "x,re,im,re_oscillator,im_oscillator",
            Command::Piv => "x,re,im,re_residual,im_residual",
            Command::Spectrum => "index,re,im,off_axis",
            Command::Extremal => "x,re,im",
            Command::Verify => {
                "epsilon_re,epsilon_im,lambda,kappa,kind,max_relative,mean_relative,threshold,excluded,evaluated,status"
            }
        }
    }

    fn csv_line(&self, out: &mut String) {
        let _ = match self {
            Row::Potential {
                x,
                partner,
                oscillator,
            } => writeln!(
                out,
                "{},{},{},{},{}",
                num(*x),
                num(partner.re),
                num(partner.im),
                num(oscillator.re),
                num(oscillator.im)
            ),
            Row::Piv { x, g, residual } => writeln!(
                out,
                "{},{},{},{},{}",
                num(*x),
                num(g.re),
                num(g.im),
                num(residual.re),
                num(residual.im)
            ),
            Row::Level {
                index,
                level,
                off_axis,
            } => {
                writeln!(
                    out,
                    "{index},{},{},{off_axis}",
                    num(level.re),
                    num(level.im)
                )
            }
            Row::Extremal { x, psi } => {
                writeln!(out, "{},{},{}", num(*x), num(psi.re), num(psi.im))
            }
            Row::Report {
                params,
                report,
                passes,
            } => writeln!(
                out,
                "{},{},{},{},{},{:e},{:e},{:e},{},{},{}",
                params.epsilon.re,
                params.epsilon.im,
                params.lambda,
                params.kappa,
                report.kind,
                report.max_relative,
                report.mean_relative,
                report.kind.threshold(),
                report.excluded_points.len(),
                report.evaluated_points,
                if *passes { "PASS" } else { "FAIL" }
            ),
        };
    }
}

/// Rows produced by a command plus the exit status they imply.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub rows: Vec<Row>,
    pub status: u8,
}

/// Shortest round-trip form, switching to an exponent outside `[1e-4, 1e15)`.
fn num(v: f64) -> String {
    let magnitude = v.abs();
    if magnitude == 0.0 || (1e-4..1e15).contains(&magnitude) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

fn is_finite(z: ComplexScalar) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Samples `f` on the grid, dropping singular or non-finite points.
fn sample_grid(grid: &Grid, f: impl Fn(f64) -> Result<Option<Row>>) -> Result<Output> {
    let mut rows = Vec::with_capacity(grid.len());
    for x in grid.points() {
        match f(x) {
            Ok(Some(row)) => rows.push(row),
            Ok(None) | Err(Error::SingularPoint { .. }) | Err(Error::EvaluationFailed { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    let status = if 2 * rows.len() < grid.len() {
        EXIT_SINGULAR
    } else {
        EXIT_OK
    };
    Ok(Output { rows, status })
}

fn verify_rows(config: &RunConfig) -> Result<Output> {
    let grid = config.grid()?;
    let n_max = config.n_max.unwrap_or(DEFAULT_N_MAX);
    let sets = if config.all {
        reference_parameter_sets().to_vec()
    } else {
        vec![config.params()?]
    };
    let mut rows = Vec::new();
    let mut status = EXIT_OK;
    for params in sets {
        let reports = match standard_suite(&params, &grid, n_max) {
            Err(Error::AllPointsExcluded) => {
                return Ok(Output {
                    rows,
                    status: EXIT_SINGULAR,
                })
            }
            other => other?,
        };
        for report in reports {
            let passes = report.passes();
            if report.excluded_fraction() > 0.5 {
                status = status.max(EXIT_SINGULAR);
            } else if !passes {
                status = status.max(EXIT_VERIFY_FAILED);
            }
            rows.push(Row::Report {
                params,
                report,
                passes,
            });
        }
    }
    Ok(Output { rows, status })
}

/// Computes the rows for a validated configuration.
pub fn execute(config: &RunConfig) -> Result<Output> {
    config.validate()?;
    let params = config.params()?;
    let grid = config.grid()?;
    match config.command {
        Command::Potential => sample_grid(&grid, |x| {
            let v = partner_potential(&params, x)?;
            Ok(is_finite(v).then(|| Row::Potential {
                x,
                partner: v.into(),
                oscillator: Complex { re: x * x, im: 0.0 },
            }))
        }),
        Command::Piv => {
            let solution = PivSolution::new(params, config.family()?);
            sample_grid(&grid, |x| {
                let eval = solution.eval(x)?;
                let residual = solution.residual(x)?;
                Ok(
                    (is_finite(eval.g) && is_finite(residual)).then(|| Row::Piv {
                        x,
                        g: eval.g.into(),
                        residual: residual.into(),
                    }),
                )
            })
        }
        Command::Extremal => {
            let family = config.family()?;
            sample_grid(&grid, |x| {
                let psi = extremal_state(&params, family, x)?;
                Ok(is_finite(psi).then(|| Row::Extremal { x, psi: psi.into() }))
            })
        }
        Command::Spectrum => {
            let levels = spectrum(&params, config.n_max.unwrap_or(DEFAULT_N_MAX)).levels;
            let rows = levels
                .into_iter()
                .enumerate()
                .map(|(index, level)| Row::Level {
                    index,
                    level: level.into(),
                    off_axis: level.im != 0.0,
                })
                .collect();
            Ok(Output {
                rows,
                status: EXIT_OK,
            })
        }
        Command::Verify => verify_rows(config),
    }
}

/// Serializes rows in the configured format.
pub fn render(config: &RunConfig, rows: &[Row]) -> String {
    match config.format {
        Format::Csv => {
            let mut out = String::from(Row::csv_header(config.command));
            out.push('\n');
            for row in rows {
                row.csv_line(&mut out);
            }
            out
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Document<'a> {
                config: &'a RunConfig,
                rows: &'a [Row],
            }
            let mut out =
                serde_json::to_string_pretty(&Document { config, rows }).expect("rows are finite");
            out.push('\n');
            out
        }
    }
}

/// Runs a parsed configuration, writing data to the output and diagnostics
/// to `diagnostics`. Returns the process exit status.
pub fn run(config: &RunConfig, diagnostics: &mut dyn Write) -> u8 {
    let output = match execute(config) {
        Ok(output) => output,
        Err(e) => {
            let _ = writeln!(diagnostics, "error: {e}");
            return match e {
                Error::AllPointsExcluded => EXIT_SINGULAR,
                _ => EXIT_INVALID_CONFIG,
            };
        }
    };
    if config.command == Command::Verify {
        for row in &output.rows {
            if let Row::Report { params, report, .. } = row {
                let e = params.epsilon;
                let _ = writeln!(
                    diagnostics,
                    "eps={}{:+}i lambda={} kappa={}  {report}",
                    e.re, e.im, params.lambda, params.kappa
                );
            }
        }
    }
    if output.status == EXIT_SINGULAR && config.command != Command::Verify {
        let _ = writeln!(diagnostics, "error: more than half of the grid is singular");
        return EXIT_SINGULAR;
    }
    let text = render(config, &output.rows);
    let written = match &config.output_path {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(diagnostics, "error: cannot write output: {e}");
        return EXIT_INVALID_CONFIG;
    }
    output.status
}

/// Parses `args` (including the program name) and runs them.
pub fn main_with_args<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(&config, &mut io::stderr()),
        Err(e) => {
            let _ = e.print();
            if e.use_stderr() {
                EXIT_INVALID_CONFIG
            } else {
                EXIT_OK
            }
        }
    }
}
