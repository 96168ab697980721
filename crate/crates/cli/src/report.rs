use std::path::Path;

use clambda_core::cyclic::{self, CyclicSpectrumSpec, MatchCandidate};
use clambda_core::fock::{self, Operator, RelationResidual};
use clambda_core::pssqm::{self, Figure2Panel, MatrixWitness, PssqmConfig, PssqmResiduals, SusyStatus};
use clambda_core::rational::{self, format_rational, int, Rational};
use clambda_core::spectrum::{lowest_levels, DEFAULT_MAX_N};
use clambda_core::{
    classify_ground_order, classify_subclass, compute_spectrum, ordering_signature, AlgebraParams, DegeneracyProfile,
    DerivedParams, GroundOrder, SpectrumClass, SpectrumLevel, Subclass,
};
use num_complex::Complex64;
use serde::Serialize;

use crate::args::{Check, Figure, FigureArgs, OutputFormat};
use crate::render::{self, DiagramRow};
use crate::CliError;

pub trait Report: Serialize {
    fn csv(&self) -> String;
    fn ascii(&self) -> String;

    fn emit(&self, format: OutputFormat) -> Result<String, CliError> {
        Ok(match format {
            OutputFormat::Json => {
                let mut text = serde_json::to_string_pretty(self).map_err(|e| CliError::Io(e.to_string()))?;
                text.push('\n');
                text
            }
            OutputFormat::Csv => self.csv(),
            OutputFormat::Ascii => self.ascii(),
        })
    }
}

fn alpha_text(p: &AlgebraParams) -> String {
    p.alpha().iter().map(format_rational).collect::<Vec<_>>().join(", ")
}

fn params_title(p: &AlgebraParams) -> String {
    format!("lambda = {}, alpha = ({})", p.lambda(), alpha_text(p))
}

/// Groups levels of equal energy into one diagram row.
fn level_rows<'a>(
    sectors: usize,
    levels: impl IntoIterator<Item = (&'a Rational, usize, String)>,
) -> Vec<DiagramRow> {
    let mut rows: Vec<(Rational, DiagramRow)> = Vec::new();
    for (energy, mu, cell) in levels {
        match rows.last_mut() {
            Some((e, row)) if e == energy => {
                if !row.cells[mu].is_empty() {
                    row.cells[mu].push(' ');
                }
                row.cells[mu].push_str(&cell);
            }
            _ => {
                let mut cells = vec![String::new(); sectors];
                cells[mu] = cell;
                rows.push((energy.clone(), DiagramRow { label: format_rational(energy), cells }));
            }
        }
    }
    rows.into_iter().map(|(_, r)| r).collect()
}

#[derive(Serialize)]
pub struct SpectrumReport {
    pub params: AlgebraParams,
    pub derived: DerivedParams,
    pub levels: Vec<SpectrumLevel>,
    pub degeneracy_groups: Vec<Vec<u64>>,
    pub signature: String,
    pub class: Option<SpectrumClass>,
    pub caveat: Option<&'static str>,
}

pub fn spectrum(p: &AlgebraParams, levels: usize) -> Result<SpectrumReport, CliError> {
    let s = compute_spectrum(p, levels)?;
    let signature = ordering_signature(&s, s.levels.len().min(9))?;
    let class = if p.lambda() == 3 { Some(classify_subclass(p, DEFAULT_MAX_N)?) } else { None };
    Ok(SpectrumReport {
        params: p.clone(),
        derived: p.derived(),
        levels: s.levels,
        degeneracy_groups: s.degeneracy_groups,
        signature,
        class,
        caveat: cyclic::shape_invariance_caveat(p.lambda()),
    })
}

impl Report for SpectrumReport {
    fn csv(&self) -> String {
        render::csv(
            &["n", "k", "mu", "energy"],
            self.levels.iter().map(|l| {
                vec![l.n.to_string(), l.k.to_string(), l.mu.to_string(), format_rational(&l.energy)]
            }),
        )
    }

    fn ascii(&self) -> String {
        let rows = level_rows(self.params.lambda(), self.levels.iter().map(|l| (&l.energy, l.mu, l.n.to_string())));
        let mut out = render::diagram(&format!("H0 spectrum, {}", params_title(&self.params)), self.params.lambda(), &rows);
        out.push_str(&format!("signature: {}\n", self.signature));
        out
    }
}

#[derive(Serialize)]
pub struct ClassificationReport {
    pub params: AlgebraParams,
    pub ground_order: GroundOrder,
    pub subclass: Option<Subclass>,
    pub degeneracy_profile: DegeneracyProfile,
    pub signature: String,
    pub max_n: usize,
}

pub fn classify(p: &AlgebraParams, max_n: usize) -> Result<ClassificationReport, CliError> {
    let c = classify_subclass(p, max_n)?;
    Ok(ClassificationReport {
        params: p.clone(),
        ground_order: c.ground_order,
        subclass: c.subclass,
        degeneracy_profile: c.degeneracy_profile,
        signature: c.signature,
        max_n,
    })
}

impl ClassificationReport {
    fn fields(&self) -> Vec<(&'static str, String)> {
        vec![
            ("lambda", self.params.lambda().to_string()),
            ("alpha", alpha_text(&self.params)),
            ("ground_order", self.ground_order.to_string()),
            ("subclass", self.subclass.as_ref().map(ToString::to_string).unwrap_or_default()),
            ("degeneracy_profile", self.degeneracy_profile.to_string()),
            ("signature", self.signature.clone()),
        ]
    }
}

impl Report for ClassificationReport {
    fn csv(&self) -> String {
        render::csv(&["field", "value"], self.fields().into_iter().map(|(k, v)| vec![k.to_string(), v]))
    }

    fn ascii(&self) -> String {
        render::key_values(&self.fields())
    }
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub params: AlgebraParams,
    pub dim: usize,
    pub tol: f64,
    pub passed: bool,
    pub relations: Vec<RelationResidual>,
    pub dumped: Vec<String>,
}

pub fn verify_algebra(p: &AlgebraParams, dim: usize, tol: f64, dump_dir: Option<&Path>) -> Result<VerifyReport, CliError> {
    let rep = fock::build(p, dim)?;
    let report = fock::verify_relations(&rep, tol);
    let mut dumped = Vec::new();
    if let Some(dir) = dump_dir {
        let io = |e: std::io::Error| CliError::Io(format!("{}: {e}", dir.display()));
        std::fs::create_dir_all(dir).map_err(io)?;
        let header = serde_json::to_string_pretty(&rep.header()).map_err(|e| CliError::Io(e.to_string()))?;
        std::fs::write(dir.join("header.json"), header + "\n").map_err(io)?;
        dumped.push("header.json".to_string());
        for op in Operator::all(p.lambda()) {
            let name = format!("{}.csv", op.name());
            std::fs::write(dir.join(&name), rep.csv(op)).map_err(io)?;
            dumped.push(name);
        }
    }
    Ok(VerifyReport { params: p.clone(), dim, tol, passed: report.passed, relations: report.residuals, dumped })
}

impl Report for VerifyReport {
    fn csv(&self) -> String {
        render::csv(
            &["relation", "residual", "passed"],
            self.relations.iter().map(|r| vec![r.relation.to_string(), format!("{:e}", r.residual), r.passed.to_string()]),
        )
    }

    fn ascii(&self) -> String {
        let mut pairs: Vec<(&str, String)> = self
            .relations
            .iter()
            .map(|r| (r.relation, format!("{:<4} {:e}", if r.passed { "ok" } else { "FAIL" }, r.residual)))
            .collect();
        let summary = format!("{} (dim {}, tol {:e})", if self.passed { "all passed" } else { "FAILED" }, self.dim, self.tol);
        pairs.push(("", summary));
        format!("{}\n{}", params_title(&self.params), render::key_values(&pairs))
    }
}

/// A state of the rescaled Hamiltonian, energy measured from the ground state.
#[derive(Serialize)]
pub struct RescaledLevel {
    pub n: u64,
    pub k: u64,
    pub mu: usize,
    #[serde(with = "rational")]
    pub energy: Rational,
}

fn rescaled_levels(p: &AlgebraParams, count: usize) -> Vec<RescaledLevel> {
    let levels = lowest_levels(p, count);
    let ground = levels.first().map(|l| l.energy.clone()).unwrap_or_else(|| int(0));
    levels
        .into_iter()
        .map(|l| RescaledLevel { n: l.n, k: l.k, mu: l.mu, energy: l.energy - &ground })
        .collect()
}

fn rescaled_diagram(title: &str, lambda: usize, levels: &[RescaledLevel]) -> String {
    let rows = level_rows(lambda, levels.iter().map(|l| (&l.energy, l.mu, l.n.to_string())));
    render::diagram(title, lambda, &rows)
}

fn omega_csv(spec: &CyclicSpectrumSpec) -> String {
    render::csv(
        &["mu", "omega"],
        spec.omega.iter().enumerate().map(|(mu, w)| vec![mu.to_string(), format_rational(w)]),
    )
}

fn omega_text(spec: &CyclicSpectrumSpec) -> String {
    spec.omega.iter().map(format_rational).collect::<Vec<_>>().join(", ")
}

#[derive(Serialize)]
pub struct ExtractReport {
    pub params: AlgebraParams,
    pub ground_order: GroundOrder,
    #[serde(flatten)]
    pub spec: CyclicSpectrumSpec,
    pub levels: Vec<RescaledLevel>,
}

pub fn cyclic_extract(p: &AlgebraParams, levels: usize) -> Result<ExtractReport, CliError> {
    let spec = cyclic::extract_omegas(p)?;
    Ok(ExtractReport { params: p.clone(), ground_order: classify_ground_order(p)?, spec, levels: rescaled_levels(p, levels) })
}

impl Report for ExtractReport {
    fn csv(&self) -> String {
        omega_csv(&self.spec)
    }

    fn ascii(&self) -> String {
        let title = format!(
            "rescaled spectrum, {}, type {}, omega = ({})",
            params_title(&self.params),
            self.ground_order,
            omega_text(&self.spec)
        );
        rescaled_diagram(&title, self.params.lambda(), &self.levels)
    }
}

#[derive(Serialize)]
pub struct MatchReport {
    #[serde(flatten)]
    pub spec: CyclicSpectrumSpec,
    pub case: GroundOrder,
    pub params: AlgebraParams,
    pub alternatives: Vec<MatchCandidate>,
    pub levels: Vec<RescaledLevel>,
}

pub fn cyclic_match(spec: &CyclicSpectrumSpec, levels: usize) -> Result<MatchReport, CliError> {
    let m = cyclic::match_omegas(spec)?;
    let levels = rescaled_levels(&m.params, levels);
    Ok(MatchReport { spec: spec.clone(), case: m.case, params: m.params, alternatives: m.alternatives, levels })
}

impl Report for MatchReport {
    fn csv(&self) -> String {
        let first = std::iter::once((self.case, &self.params));
        let rest = self.alternatives.iter().map(|c| (c.case, &c.params));
        render::csv(
            &["case", "alpha0", "alpha1"],
            first.chain(rest).map(|(case, p)| {
                vec![case.to_string(), format_rational(&p.alpha()[0]), format_rational(&p.alpha()[1])]
            }),
        )
    }

    fn ascii(&self) -> String {
        let mut title = format!("omega = ({}) matched by type {}, {}", omega_text(&self.spec), self.case, params_title(&self.params));
        for alt in &self.alternatives {
            title.push_str(&format!("\nalso type {}, {}", alt.case, params_title(&alt.params)));
        }
        rescaled_diagram(&title, self.params.lambda(), &self.levels)
    }
}

#[derive(Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    /// Coefficients `(u, v, w)` of the trilinear relation, as `[re, im]`.
    pub coefficients: [[f64; 2]; 3],
    pub residual: f64,
    pub passed: bool,
    pub expected: bool,
}

#[derive(Serialize)]
pub struct PssqmCliReport {
    pub params: AlgebraParams,
    pub mu: usize,
    pub eta: pssqm::Eta,
    pub phi: f64,
    pub dim: usize,
    pub tol: f64,
    pub window: usize,
    #[serde(with = "rational::list")]
    pub r: Vec<Rational>,
    #[serde(with = "rational")]
    pub ground_energy: Rational,
    pub susy_status: SusyStatus,
    pub residuals: PssqmResiduals,
    pub q_squared_witness: Option<MatrixWitness>,
    pub nilpotent: bool,
    pub commutes: bool,
    pub checks: Vec<CheckResult>,
    /// Every structural property holds and each check passed exactly when expected.
    pub consistent: bool,
}

fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

pub fn pssqm(c: &PssqmConfig, tol: f64, checks: &[Check]) -> Result<PssqmCliReport, CliError> {
    let s = pssqm::build_charge(c)?;
    let report = pssqm::verify_pssqm(&s, tol);
    let real = |x: f64| Complex64::new(x, 0.0);
    let mut results = Vec::new();
    for check in checks {
        match check {
            Check::Rs => results.push(CheckResult {
                name: "rs",
                coefficients: [[1.0, 0.0]; 3],
                residual: report.residuals.rs,
                passed: report.rubakov_spiridonov,
                expected: true,
            }),
            Check::Bd => results.push(CheckResult {
                name: "bd",
                coefficients: [[-2.0, 0.0], [4.0, 0.0], [-2.0, 0.0]],
                residual: report.residuals.bd,
                passed: report.beckers_debergh,
                expected: report.beckers_debergh_expected,
            }),
            Check::General => {
                let coefficient = pssqm::sol1_coefficient(s.eta_next, s.eta_after);
                let t = pssqm::general_trilinear_check(&s, coefficient, coefficient, coefficient, tol);
                results.push(CheckResult {
                    name: "general_sol1",
                    coefficients: [pair(coefficient); 3],
                    residual: t.residual,
                    passed: t.passed,
                    expected: true,
                });
                if *c.params.alpha_at(c.mu as i64 + 2) == int(-1) {
                    let u = real(0.0);
                    let (v, w) = pssqm::sol2_coefficients(s.eta_next, s.eta_after, u);
                    let t = pssqm::general_trilinear_check(&s, u, v, w, tol);
                    results.push(CheckResult {
                        name: "general_sol2",
                        coefficients: [pair(u), pair(v), pair(w)],
                        residual: t.residual,
                        passed: t.passed,
                        expected: true,
                    });
                }
            }
        }
    }
    let consistent = report.nilpotent && report.commutes && results.iter().all(|r| r.passed == r.expected);
    Ok(PssqmCliReport {
        params: c.params.clone(),
        mu: c.mu,
        eta: c.eta.clone(),
        phi: c.phi,
        dim: c.dim,
        tol,
        window: report.window,
        r: s.r_exact.clone().expect("canonical shifts are rational").to_vec(),
        ground_energy: s.ground_energy_exact.clone().expect("canonical shifts are rational"),
        susy_status: s.susy_status,
        residuals: report.residuals.clone(),
        q_squared_witness: report.q_squared_witness.clone(),
        nilpotent: report.nilpotent,
        commutes: report.commutes,
        checks: results,
        consistent,
    })
}

impl Report for PssqmCliReport {
    fn csv(&self) -> String {
        let fixed = [
            ("q3", self.residuals.q3, self.nilpotent, true),
            ("commutator", self.residuals.commutator, self.commutes, true),
        ];
        let rows = fixed
            .into_iter()
            .chain(self.checks.iter().map(|c| (c.name, c.residual, c.passed, c.expected)))
            .map(|(name, residual, passed, expected)| {
                vec![name.to_string(), format!("{residual:e}"), passed.to_string(), expected.to_string()]
            });
        render::csv(&["relation", "residual", "passed", "expected"], rows)
    }

    fn ascii(&self) -> String {
        let mut pairs: Vec<(&str, String)> = vec![
            ("mu", self.mu.to_string()),
            ("eta", self.eta.to_string()),
            ("phi", self.phi.to_string()),
            ("r", self.r.iter().map(format_rational).collect::<Vec<_>>().join(", ")),
            ("ground energy", format_rational(&self.ground_energy)),
            ("susy", format!("{:?}", self.susy_status).to_lowercase()),
            ("Q^3 = 0", format!("{} {:e}", self.nilpotent, self.residuals.q3)),
            ("[H,Q] = 0", format!("{} {:e}", self.commutes, self.residuals.commutator)),
        ];
        for c in &self.checks {
            pairs.push((c.name, format!("{} {:e} (expected {})", c.passed, c.residual, c.expected)));
        }
        pairs.push(("consistent", self.consistent.to_string()));
        format!("{}, dim {}\n{}", params_title(&self.params), self.dim, render::key_values(&pairs))
    }
}

#[derive(Serialize)]
pub struct FigureOneReport {
    pub figure: &'static str,
    pub params: AlgebraParams,
    pub ground_order: GroundOrder,
    #[serde(flatten)]
    pub spec: CyclicSpectrumSpec,
    pub levels: Vec<RescaledLevel>,
}

#[derive(Serialize)]
pub struct FigureTwoReport {
    pub figure: &'static str,
    pub params: AlgebraParams,
    pub panels: Vec<Figure2Panel>,
}

#[derive(Serialize)]
#[serde(untagged)]
pub enum FigureReport {
    One(FigureOneReport),
    Two(FigureTwoReport),
}

pub fn figure(a: &FigureArgs) -> Result<FigureReport, CliError> {
    let fixed = |a0: i64, a1: i64| AlgebraParams::from_ints(3, &[a0, a1]).expect("valid example parameters");
    let p = match a.which {
        Figure::OneA => fixed(0, 1),
        Figure::OneB => fixed(4, -3),
        Figure::OneC => fixed(6, -7),
        Figure::Two => a.params.resolve_or(fixed(0, 1))?,
    };
    if a.which != Figure::Two {
        if a.mu.is_some() {
            return Err(CliError::usage("--mu applies to figure 2 only"));
        }
        return Ok(FigureReport::One(FigureOneReport {
            figure: a.which.label(),
            ground_order: classify_ground_order(&p)?,
            spec: cyclic::extract_omegas(&p)?,
            levels: rescaled_levels(&p, a.levels),
            params: p,
        }));
    }
    let panels = match a.mu {
        Some(mu) => vec![pssqm::spectrum_figure2(&p, mu, a.levels)?],
        None => (0..3).map(|mu| pssqm::spectrum_figure2(&p, mu, a.levels)).collect::<Result<_, _>>()?,
    };
    Ok(FigureReport::Two(FigureTwoReport { figure: "2", params: p, panels }))
}

impl Report for FigureReport {
    fn csv(&self) -> String {
        match self {
            FigureReport::One(f) => render::csv(
                &["n", "k", "mu", "energy"],
                f.levels.iter().map(|l| {
                    vec![l.n.to_string(), l.k.to_string(), l.mu.to_string(), format_rational(&l.energy)]
                }),
            ),
            FigureReport::Two(f) => render::csv(
                &["panel", "n", "k", "mu", "energy", "relative", "lowered_to"],
                f.panels.iter().flat_map(|panel| {
                    panel.levels.iter().map(move |l| {
                        vec![
                            panel.mu.to_string(),
                            l.n.to_string(),
                            l.k.to_string(),
                            l.sector.to_string(),
                            format_rational(&l.energy),
                            format_rational(&l.relative),
                            l.lowered_to.map(|m| m.to_string()).unwrap_or_default(),
                        ]
                    })
                }),
            ),
        }
    }

    fn ascii(&self) -> String {
        match self {
            FigureReport::One(f) => {
                let title = format!(
                    "figure {}: {}, type {}, omega = ({})",
                    f.figure,
                    params_title(&f.params),
                    f.ground_order,
                    omega_text(&f.spec)
                );
                rescaled_diagram(&title, 3, &f.levels)
            }
            FigureReport::Two(f) => {
                let mut out = String::new();
                for panel in &f.panels {
                    let rows = level_rows(
                        3,
                        panel.levels.iter().map(|l| {
                            let cell = match l.lowered_to {
                                Some(m) => format!("{}->{m}", l.n),
                                None => l.n.to_string(),
                            };
                            (&l.relative, l.sector, cell)
                        }),
                    );
                    let title = format!(
                        "figure 2, mu = {}, {}, ground energy {} ({})",
                        panel.mu,
                        params_title(&f.params),
                        format_rational(&panel.ground_energy),
                        format!("{:?}", panel.susy_status).to_lowercase()
                    );
                    out.push_str(&render::diagram(&title, 3, &rows));
                    out.push('\n');
                }
                out.push_str(pssqm::FIGURE2_NORMALIZATION);
                out.push('\n');
                out
            }
        }
    }
}
