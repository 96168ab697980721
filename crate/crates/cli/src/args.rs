use std::path::{Path, PathBuf};

use clambda_core::cyclic::{CyclicSpectrumSpec, OmegaInput};
use clambda_core::pssqm::{Eta, PssqmConfig};
use clambda_core::{parse_rational, AlgebraParams};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::CliError;

#[derive(Parser, Debug)]
#[command(name = "clambda", version, about = "Exact spectra, Fock matrices and parasupersymmetry for C_lambda-extended oscillator algebras")]
pub struct Cli {
    /// Output format; CLAMBDA_OUTPUT sets the default.
    #[arg(long, global = true, value_enum, env = "CLAMBDA_OUTPUT", default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Ascii,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact H0 spectrum of the lowest-number states.
    Spectrum(SpectrumArgs),
    /// Ground ordering, subclass and degeneracy profile (lambda = 3).
    Classify(ClassifyArgs),
    /// Build the truncated Fock matrices and check the defining relations.
    VerifyAlgebra(VerifyArgs),
    /// Cyclic shape invariant spacings.
    Cyclic {
        #[command(subcommand)]
        command: CyclicCommand,
    },
    /// Order-2 parasupercharge and its defining relations (lambda = 3).
    Pssqm(PssqmArgs),
    /// Exact data behind the example spectra and parasupersymmetric panels.
    Figure(FigureArgs),
}

#[derive(Args, Debug, Default)]
pub struct ParamArgs {
    /// Order of the cyclic group; inferred from the number of --alpha values when omitted.
    #[arg(long)]
    pub lambda: Option<usize>,

    /// Independent parameter alpha_mu, mu = 0 .. lambda-2, as p/q (repeatable).
    #[arg(long, value_name = "P/Q", allow_hyphen_values = true)]
    pub alpha: Vec<String>,

    /// JSON file {"lambda": 3, "alpha": ["p/q", ...]}.
    #[arg(long, value_name = "FILE", conflicts_with_all = ["lambda", "alpha"])]
    pub params: Option<PathBuf>,
}

impl ParamArgs {
    fn given(&self) -> bool {
        self.lambda.is_some() || !self.alpha.is_empty() || self.params.is_some()
    }

    pub fn resolve(&self) -> Result<AlgebraParams, CliError> {
        if let Some(path) = &self.params {
            return read_params(path);
        }
        if self.alpha.is_empty() {
            return Err(CliError::usage("parameters required: --alpha (repeatable) or --params FILE"));
        }
        let alpha = self
            .alpha
            .iter()
            .map(|a| parse_rational(a))
            .collect::<Result<Vec<_>, _>>()
            .map_err(CliError::bad_input)?;
        let lambda = self.lambda.unwrap_or(alpha.len() + 1);
        AlgebraParams::new(lambda, alpha).map_err(CliError::bad_input)
    }

    pub fn resolve_or(&self, fallback: AlgebraParams) -> Result<AlgebraParams, CliError> {
        if self.given() {
            self.resolve()
        } else {
            Ok(fallback)
        }
    }
}

fn read_params(path: &Path) -> Result<AlgebraParams, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

#[derive(Args, Debug)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub params: ParamArgs,

    /// Number of states, n = 0 .. levels-1.
    #[arg(long, default_value_t = 24)]
    pub levels: usize,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub params: ParamArgs,

    /// Largest n searched for the closed-form subclass families.
    #[arg(long, default_value_t = 8)]
    pub max_n: usize,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub params: ParamArgs,

    /// Truncation dimension D.
    #[arg(long, default_value_t = 32)]
    pub dim: usize,

    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,

    /// Write every operator matrix as CSV, plus header.json, into this directory.
    #[arg(long, value_name = "DIR")]
    pub dump_dir: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum CyclicCommand {
    /// Read the spacings off a lambda = 3 spectrum.
    Extract(ExtractArgs),
    /// Find lambda = 3 parameters reproducing the given spacings.
    Match(MatchArgs),
}

#[derive(Args, Debug)]
pub struct ExtractArgs {
    #[command(flatten)]
    pub params: ParamArgs,

    /// Number of rescaled levels listed.
    #[arg(long, default_value_t = 12)]
    pub levels: usize,
}

#[derive(Args, Debug)]
pub struct MatchArgs {
    /// Spacing omega_mu as p/q (repeatable).
    #[arg(long, value_name = "P/Q", allow_hyphen_values = true, required_unless_present = "omega_file")]
    pub omega: Vec<String>,

    /// JSON file {"omega": ["p/q", ...]}.
    #[arg(long, value_name = "FILE", conflicts_with = "omega")]
    pub omega_file: Option<PathBuf>,

    /// Number of rescaled levels in the verification spectrum.
    #[arg(long, default_value_t = 12)]
    pub levels: usize,
}

impl MatchArgs {
    pub fn spec(&self) -> Result<CyclicSpectrumSpec, CliError> {
        if let Some(path) = &self.omega_file {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            let input: OmegaInput =
                serde_json::from_str(&text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
            return CyclicSpectrumSpec::try_from(input).map_err(CliError::from);
        }
        let omega = self
            .omega
            .iter()
            .map(|w| parse_rational(w))
            .collect::<Result<Vec<_>, _>>()
            .map_err(CliError::bad_input)?;
        Ok(CyclicSpectrumSpec::new(omega)?)
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Rs,
    Bd,
    General,
}

#[derive(Args, Debug)]
pub struct PssqmArgs {
    #[command(flatten)]
    pub params: ParamArgs,

    /// Charge family index.
    #[arg(long, default_value_t = 0)]
    pub mu: usize,

    /// eta_(mu+1): "sqrt2" or a rational in (0, 2).
    #[arg(long, default_value = "sqrt2")]
    pub eta: String,

    /// Relative phase phi in radians.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub phi: f64,

    #[arg(long, default_value_t = 32)]
    pub dim: usize,

    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,

    /// Relations to report.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "rs,bd")]
    pub check: Vec<Check>,
}

impl PssqmArgs {
    pub fn config(&self) -> Result<PssqmConfig, CliError> {
        let params = self.params.resolve()?;
        let eta = Eta::parse(&self.eta).map_err(CliError::bad_input)?;
        Ok(PssqmConfig { params, mu: self.mu, eta, phi: self.phi, dim: self.dim })
    }

    pub fn checks(&self) -> Vec<Check> {
        let mut out = Vec::new();
        for c in &self.check {
            if !out.contains(c) {
                out.push(*c);
            }
        }
        out
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Figure {
    #[value(name = "1a")]
    OneA,
    #[value(name = "1b")]
    OneB,
    #[value(name = "1c")]
    OneC,
    #[value(name = "2")]
    Two,
}

impl Figure {
    pub fn label(self) -> &'static str {
        match self {
            Figure::OneA => "1a",
            Figure::OneB => "1b",
            Figure::OneC => "1c",
            Figure::Two => "2",
        }
    }
}

#[derive(Args, Debug)]
pub struct FigureArgs {
    #[arg(long, value_enum)]
    pub which: Figure,

    /// Panel of figure 2; all three when omitted.
    #[arg(long)]
    pub mu: Option<usize>,

    /// Number of levels per panel.
    #[arg(long, default_value_t = 10)]
    pub levels: usize,

    /// Parameters for figure 2 (default alpha = (0, 1)).
    #[command(flatten)]
    pub params: ParamArgs,
}
