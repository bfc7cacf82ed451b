//! Problem configuration: a plain-text `key = value` format with optional
//! `[section]` headers, resolved against a named preset.
//!
//! Every key has a unique name, so sections only group keys; a key placed
//! under the wrong section is rejected. Keys appearing before any section
//! header may belong to any section.

use std::fmt::Write as _;
use std::path::PathBuf;

use thiserror::Error;

use crate::dissipation1d::{BetaAverage, DissipationSpec, EigenLaw, ScalarDissipation};
use crate::error::SolverError;
use crate::flux1d::CentralFlux;
use crate::presets;
use crate::reconstruction::Limiter;
use crate::spatial::{BoundaryKind, BoundarySpec, Grid1D, Scheme};
use crate::thermo::{GasModel, PrimState, ViscosityLaw};
use crate::timeint::TimeSpec;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConfigError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("invalid value for `{key}`: {message}")]
    Value { key: &'static str, message: String },
    #[error("unknown preset `{name}`; available: {available}")]
    UnknownPreset { name: String, available: String },
    #[error(transparent)]
    Invalid(#[from] SolverError),
}

impl ConfigError {
    /// Field named by a value or validation error.
    pub fn field(&self) -> Option<&str> {
        match self {
            ConfigError::Value { key, .. } => Some(key),
            ConfigError::Invalid(SolverError::Parameter { field, .. }) => Some(field),
            ConfigError::UnknownKey { key, .. } => Some(key),
            _ => None,
        }
    }
}

type Result<T> = std::result::Result<T, ConfigError>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InitialCondition {
    /// Two constant states separated at `x0`.
    Riemann { left: PrimState, right: PrimState, x0: f64 },
    /// Rankine-Hugoniot states of a stationary shock at the domain centre,
    /// optionally with one cell holding the mean conserved state.
    StationaryShock { mach: f64, intermediate: bool },
}

impl InitialCondition {
    pub fn name(&self) -> &'static str {
        match self {
            InitialCondition::Riemann { .. } => "riemann",
            InitialCondition::StationaryShock { .. } => "stationary_shock",
        }
    }
}

/// Boundary choice; fixed states take the adjacent initial state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryChoice {
    Transmissive,
    Periodic,
    Fixed,
    ShockOutflow,
}

impl BoundaryChoice {
    fn name(self) -> &'static str {
        match self {
            BoundaryChoice::Transmissive => "transmissive",
            BoundaryChoice::Periodic => "periodic",
            BoundaryChoice::Fixed => "fixed",
            BoundaryChoice::ShockOutflow => "shock_outflow",
        }
    }

    fn parse(key: &'static str, v: &str) -> Result<Self> {
        Ok(match v {
            "transmissive" => BoundaryChoice::Transmissive,
            "periodic" => BoundaryChoice::Periodic,
            "fixed" | "fixed_state" => BoundaryChoice::Fixed,
            "shock_outflow" => BoundaryChoice::ShockOutflow,
            _ => return Err(bad(key, format!("expected transmissive, periodic, fixed or shock_outflow, got `{v}`"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OutputSpec {
    /// Snapshot spacing in time; `0` writes only the initial and final states.
    pub snapshot_interval: f64,
    /// Budget row every this many steps.
    pub budget_every: usize,
    pub dir: PathBuf,
}

impl Default for OutputSpec {
    fn default() -> Self {
        OutputSpec { snapshot_interval: 0.0, budget_every: 10, dir: PathBuf::from("output") }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProblemConfig {
    pub preset: String,
    pub n_cells: usize,
    pub x_min: f64,
    pub x_max: f64,
    pub gas: GasModel,
    pub initial: InitialCondition,
    pub bc_left: BoundaryChoice,
    pub bc_right: BoundaryChoice,
    pub outflow_mass_flux: f64,
    pub scheme: Scheme,
    pub time: TimeSpec,
    pub output: OutputSpec,
}

/// `(section, key)` for every accepted key.
pub const KEYS: &[(&str, &str)] = &[
    ("problem", "preset"),
    ("grid", "n_cells"),
    ("grid", "x_min"),
    ("grid", "x_max"),
    ("gas", "gamma"),
    ("gas", "gas_constant"),
    ("gas", "viscosity"),
    ("gas", "mu"),
    ("gas", "t_ref"),
    ("gas", "exponent"),
    ("gas", "prandtl"),
    ("initial", "initial"),
    ("initial", "left"),
    ("initial", "right"),
    ("initial", "x0"),
    ("initial", "mach"),
    ("initial", "intermediate"),
    ("boundary", "bc_left"),
    ("boundary", "bc_right"),
    ("boundary", "outflow_mass_flux"),
    ("scheme", "flux"),
    ("scheme", "dissipation"),
    ("scheme", "law"),
    ("scheme", "ec1_beta"),
    ("scheme", "kappa2"),
    ("scheme", "kappa4"),
    ("scheme", "beta_average"),
    ("scheme", "order"),
    ("scheme", "limiter"),
    ("time", "cfl"),
    ("time", "t_final"),
    ("time", "max_steps"),
    ("output", "snapshot_interval"),
    ("output", "budget_every"),
    ("output", "output_dir"),
];

pub fn canonical(key: &str) -> Option<&'static str> {
    let key = match key {
        "diss" => "dissipation",
        "n" | "N" | "cells" => "n_cells",
        "M" => "mach",
        k => k,
    };
    KEYS.iter().find(|(_, k)| *k == key).map(|(_, k)| *k)
}

fn section_of(key: &str) -> &'static str {
    KEYS.iter().find(|(_, k)| *k == key).map(|(s, _)| *s).unwrap_or("")
}

fn bad(key: &'static str, message: impl Into<String>) -> ConfigError {
    ConfigError::Value { key, message: message.into() }
}

/// Split `text` into `(line, key, value)` triples.
pub fn parse_pairs(text: &str) -> Result<Vec<(usize, &'static str, String)>> {
    let mut section: Option<&str> = None;
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split(['#', ';']).next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('[') {
            let name = rest
                .strip_suffix(']')
                .ok_or_else(|| ConfigError::Syntax { line: line_no, message: "unterminated section header".into() })?
                .trim();
            if !KEYS.iter().any(|(s, _)| *s == name) {
                return Err(ConfigError::Syntax { line: line_no, message: format!("unknown section `{name}`") });
            }
            section = KEYS.iter().find(|(s, _)| *s == name).map(|(s, _)| *s);
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| ConfigError::Syntax {
            line: line_no,
            message: format!("expected `key = value`, got `{line}`"),
        })?;
        let key =
            canonical(k.trim()).ok_or_else(|| ConfigError::UnknownKey { line: line_no, key: k.trim().to_string() })?;
        if let Some(s) = section {
            if section_of(key) != s {
                return Err(ConfigError::Syntax {
                    line: line_no,
                    message: format!("key `{key}` belongs to section [{}], not [{s}]", section_of(key)),
                });
            }
        }
        out.push((line_no, key, v.trim().to_string()));
    }
    Ok(out)
}

/// Parse a configuration file, then apply `overrides` (`key=value`).
pub fn parse_config_with(text: &str, overrides: &[String]) -> Result<ProblemConfig> {
    let mut pairs = parse_pairs(text)?;
    for o in overrides {
        let (k, v) = o
            .split_once('=')
            .ok_or_else(|| ConfigError::Syntax { line: 0, message: format!("override `{o}` is not key=value") })?;
        let key = canonical(k.trim()).ok_or_else(|| ConfigError::UnknownKey { line: 0, key: k.trim().to_string() })?;
        pairs.push((0, key, v.trim().to_string()));
    }
    let preset = pairs.iter().rev().find(|(_, k, _)| *k == "preset").map(|(_, _, v)| v.clone());
    let mut cfg = presets::preset(preset.as_deref().unwrap_or("sod"))?;
    for (_, key, value) in &pairs {
        if *key != "preset" {
            cfg.set(key, value)?;
        }
    }
    cfg.validate()?;
    Ok(cfg)
}

pub fn parse_config(text: &str) -> Result<ProblemConfig> {
    parse_config_with(text, &[])
}

fn num(key: &'static str, v: &str) -> Result<f64> {
    let x: f64 = v.parse().map_err(|_| bad(key, format!("`{v}` is not a number")))?;
    if !x.is_finite() {
        return Err(bad(key, "must be finite"));
    }
    Ok(x)
}

fn count(key: &'static str, v: &str) -> Result<usize> {
    v.parse().map_err(|_| bad(key, format!("`{v}` is not a non-negative integer")))
}

fn boolean(key: &'static str, v: &str) -> Result<bool> {
    match v {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => Err(bad(key, format!("`{v}` is not a boolean"))),
    }
}

fn state(key: &'static str, v: &str) -> Result<PrimState> {
    let parts: Vec<f64> = v.split(',').map(|p| num(key, p.trim())).collect::<Result<_>>()?;
    match parts[..] {
        [rho, u, p] => Ok(PrimState::new(rho, u, p)),
        _ => Err(bad(key, "expected `rho, u, p`")),
    }
}

fn law_by_name(key: &'static str, v: &str, ec1_beta: f64) -> Result<EigenLaw> {
    Ok(match v {
        "roe" => EigenLaw::Roe,
        "ec1" => EigenLaw::Ec1 { beta: ec1_beta },
        "kes" => EigenLaw::Kes,
        "rus" | "rusanov" => EigenLaw::Rusanov,
        "hyb" | "hybrid" => EigenLaw::Hybrid,
        _ => return Err(bad(key, format!("expected roe, ec1, kes, rus or hyb, got `{v}`"))),
    })
}

impl ProblemConfig {
    pub fn grid(&self) -> crate::Result<Grid1D> {
        Grid1D::new(self.n_cells, self.x_min, self.x_max)
    }

    /// Left and right states of the initial data.
    pub fn end_states(&self) -> (PrimState, PrimState) {
        match self.initial {
            InitialCondition::Riemann { left, right, .. } => (left, right),
            InitialCondition::StationaryShock { mach, .. } => presets::stationary_shock_states(mach, self.gas.gamma),
        }
    }

    pub fn boundary_spec(&self) -> BoundarySpec {
        let (l, r) = self.end_states();
        let kind = |c: BoundaryChoice, q: PrimState| match c {
            BoundaryChoice::Transmissive => BoundaryKind::Transmissive,
            BoundaryChoice::Periodic => BoundaryKind::Periodic,
            BoundaryChoice::Fixed => BoundaryKind::FixedState(q),
            BoundaryChoice::ShockOutflow => BoundaryKind::ShockOutflow { mass_flux: self.outflow_mass_flux },
        };
        BoundarySpec { left: kind(self.bc_left, l), right: kind(self.bc_right, r) }
    }

    fn ec1_beta(&self) -> f64 {
        match self.scheme.dissipation {
            DissipationSpec::Matrix(EigenLaw::Ec1 { beta }) => beta,
            _ => EigenLaw::EC1_DEFAULT_BETA,
        }
    }

    fn scalar(&self) -> ScalarDissipation {
        match self.scheme.dissipation {
            DissipationSpec::Scalar(s) => s,
            _ => ScalarDissipation { kappa2: 0.5, kappa4: 1.0 / 32.0, beta_average: BetaAverage::Logarithmic },
        }
    }

    /// Assign one key.
    pub fn set(&mut self, key: &'static str, v: &str) -> Result<()> {
        match key {
            "n_cells" => self.n_cells = count(key, v)?,
            "x_min" => self.x_min = num(key, v)?,
            "x_max" => self.x_max = num(key, v)?,
            "gamma" => self.gas.gamma = num(key, v)?,
            "gas_constant" => self.gas.gas_constant = num(key, v)?,
            "prandtl" => self.gas.prandtl = num(key, v)?,
            "viscosity" => {
                let mu = self.mu();
                self.gas.viscosity = match v {
                    "inviscid" => ViscosityLaw::Inviscid,
                    "constant" => ViscosityLaw::Constant(mu),
                    "power_law" => match self.gas.viscosity {
                        law @ ViscosityLaw::PowerLaw { .. } => law,
                        _ => ViscosityLaw::PowerLaw { mu_ref: mu, t_ref: 1.0, exponent: 0.8 },
                    },
                    _ => return Err(bad(key, format!("expected inviscid, constant or power_law, got `{v}`"))),
                }
            }
            "mu" => {
                let mu = num(key, v)?;
                match &mut self.gas.viscosity {
                    ViscosityLaw::Inviscid => self.gas.viscosity = ViscosityLaw::Constant(mu),
                    ViscosityLaw::Constant(m) => *m = mu,
                    ViscosityLaw::PowerLaw { mu_ref, .. } => *mu_ref = mu,
                }
            }
            "t_ref" | "exponent" => {
                let x = num(key, v)?;
                match &mut self.gas.viscosity {
                    ViscosityLaw::PowerLaw { t_ref, exponent, .. } => {
                        *if key == "t_ref" { t_ref } else { exponent } = x;
                    }
                    _ => return Err(bad(key, "only meaningful with viscosity = power_law")),
                }
            }
            "initial" => {
                self.initial = match v {
                    _ if v == self.initial.name() => self.initial,
                    "riemann" => {
                        let (left, right) = self.end_states();
                        InitialCondition::Riemann { left, right, x0: 0.5 * (self.x_min + self.x_max) }
                    }
                    "stationary_shock" => InitialCondition::StationaryShock { mach: 1.5, intermediate: false },
                    _ => return Err(bad(key, format!("expected riemann or stationary_shock, got `{v}`"))),
                }
            }
            "left" | "right" | "x0" => match &mut self.initial {
                InitialCondition::Riemann { left, right, x0 } => match key {
                    "left" => *left = state(key, v)?,
                    "right" => *right = state(key, v)?,
                    _ => *x0 = num(key, v)?,
                },
                _ => return Err(bad(key, "only meaningful with initial = riemann")),
            },
            "mach" | "intermediate" => match &mut self.initial {
                InitialCondition::StationaryShock { mach, intermediate } => {
                    if key == "mach" {
                        *mach = num(key, v)?;
                    } else {
                        *intermediate = boolean(key, v)?;
                    }
                }
                _ => return Err(bad(key, "only meaningful with initial = stationary_shock")),
            },
            "bc_left" => self.bc_left = BoundaryChoice::parse(key, v)?,
            "bc_right" => self.bc_right = BoundaryChoice::parse(key, v)?,
            "outflow_mass_flux" => self.outflow_mass_flux = num(key, v)?,
            "flux" => {
                self.scheme.flux = CentralFlux::from_name(v).ok_or_else(|| {
                    let names: Vec<_> = CentralFlux::ALL.iter().map(|f| f.name()).collect();
                    bad(key, format!("expected one of {}, got `{v}`", names.join(", ")))
                })?
            }
            "dissipation" => {
                self.scheme.dissipation = match v {
                    "none" => DissipationSpec::None,
                    "scalar" => DissipationSpec::Scalar(self.scalar()),
                    "matrix" => DissipationSpec::Matrix(match self.scheme.dissipation {
                        DissipationSpec::Matrix(law) => law,
                        _ => EigenLaw::Roe,
                    }),
                    _ => return Err(bad(key, format!("expected none, scalar or matrix, got `{v}`"))),
                }
            }
            "law" => {
                let law = law_by_name(key, v, self.ec1_beta())?;
                match &mut self.scheme.dissipation {
                    DissipationSpec::Matrix(l) => *l = law,
                    _ => self.scheme.dissipation = DissipationSpec::Matrix(law),
                }
            }
            "ec1_beta" => match &mut self.scheme.dissipation {
                DissipationSpec::Matrix(EigenLaw::Ec1 { beta }) => *beta = num(key, v)?,
                _ => return Err(bad(key, "only meaningful with law = ec1")),
            },
            "kappa2" | "kappa4" | "beta_average" => {
                let mut s = self.scalar();
                match key {
                    "kappa2" => s.kappa2 = num(key, v)?,
                    "kappa4" => s.kappa4 = num(key, v)?,
                    _ => {
                        s.beta_average = match v {
                            "log" | "logarithmic" => BetaAverage::Logarithmic,
                            "arithmetic" => BetaAverage::Arithmetic,
                            _ => return Err(bad(key, format!("expected log or arithmetic, got `{v}`"))),
                        }
                    }
                }
                self.scheme.dissipation = DissipationSpec::Scalar(s);
            }
            "order" => {
                let order = count(key, v)?;
                if !(1..=2).contains(&order) {
                    return Err(bad(key, "must be 1 or 2"));
                }
                self.scheme.recon.order = order as u8;
            }
            "limiter" => {
                self.scheme.recon.limiter = match v {
                    "minmod" => Limiter::Minmod,
                    "van_albada" => Limiter::VanAlbada,
                    "none" => Limiter::None,
                    _ => return Err(bad(key, format!("expected minmod, van_albada or none, got `{v}`"))),
                }
            }
            "cfl" => self.time.cfl = num(key, v)?,
            "t_final" => self.time.t_final = num(key, v)?,
            "max_steps" => self.time.max_steps = count(key, v)?,
            "snapshot_interval" => self.output.snapshot_interval = num(key, v)?,
            "budget_every" => self.output.budget_every = count(key, v)?,
            "output_dir" => self.output.dir = PathBuf::from(v),
            "preset" => self.preset = v.to_string(),
            _ => return Err(ConfigError::UnknownKey { line: 0, key: key.to_string() }),
        }
        Ok(())
    }

    fn mu(&self) -> f64 {
        match self.gas.viscosity {
            ViscosityLaw::Inviscid => 0.0,
            ViscosityLaw::Constant(mu) => mu,
            ViscosityLaw::PowerLaw { mu_ref, .. } => mu_ref,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.grid()?;
        self.gas.validate()?;
        self.scheme.dissipation.validate()?;
        self.time.validate()?;
        if self.output.snapshot_interval < 0.0 {
            return Err(bad("snapshot_interval", "must be non-negative"));
        }
        let (l, r) = self.end_states();
        if !l.is_valid() || !r.is_valid() {
            return Err(bad("left", "initial states need positive density and pressure"));
        }
        if let InitialCondition::StationaryShock { mach, .. } = self.initial {
            if !(mach > 1.0) {
                return Err(bad("mach", "must exceed 1"));
            }
        }
        if self.bc_left == BoundaryChoice::ShockOutflow {
            return Err(bad("bc_left", "shock_outflow is only available on the right"));
        }
        self.boundary_spec().validate()?;
        if !(1..=2).contains(&self.scheme.recon.order) {
            return Err(bad("order", "must be 1 or 2"));
        }
        Ok(())
    }

    /// Serialise to the text format; `parse_config` inverts this exactly.
    pub fn to_config_text(&self) -> String {
        let mut s = String::new();
        let mut line = |k: &str, v: String| writeln!(s, "{k} = {v}").unwrap();
        let st = |q: PrimState| format!("{}, {}, {}", q.rho, q.u, q.p);
        line("[problem]\npreset", self.preset.clone());
        line("\n[grid]\nn_cells", self.n_cells.to_string());
        line("x_min", self.x_min.to_string());
        line("x_max", self.x_max.to_string());
        line("\n[gas]\ngamma", self.gas.gamma.to_string());
        line("gas_constant", self.gas.gas_constant.to_string());
        line("prandtl", self.gas.prandtl.to_string());
        match self.gas.viscosity {
            ViscosityLaw::Inviscid => line("viscosity", "inviscid".into()),
            ViscosityLaw::Constant(mu) => {
                line("viscosity", "constant".into());
                line("mu", mu.to_string());
            }
            ViscosityLaw::PowerLaw { mu_ref, t_ref, exponent } => {
                line("viscosity", "power_law".into());
                line("mu", mu_ref.to_string());
                line("t_ref", t_ref.to_string());
                line("exponent", exponent.to_string());
            }
        }
        line("\n[initial]\ninitial", self.initial.name().into());
        match self.initial {
            InitialCondition::Riemann { left, right, x0 } => {
                line("left", st(left));
                line("right", st(right));
                line("x0", x0.to_string());
            }
            InitialCondition::StationaryShock { mach, intermediate } => {
                line("mach", mach.to_string());
                line("intermediate", intermediate.to_string());
            }
        }
        line("\n[boundary]\nbc_left", self.bc_left.name().into());
        line("bc_right", self.bc_right.name().into());
        line("outflow_mass_flux", self.outflow_mass_flux.to_string());
        line("\n[scheme]\nflux", self.scheme.flux.name().into());
        match self.scheme.dissipation {
            DissipationSpec::None => line("dissipation", "none".into()),
            DissipationSpec::Scalar(sd) => {
                line("dissipation", "scalar".into());
                line("kappa2", sd.kappa2.to_string());
                line("kappa4", sd.kappa4.to_string());
                let b = if sd.beta_average == BetaAverage::Logarithmic { "log" } else { "arithmetic" };
                line("beta_average", b.into());
            }
            DissipationSpec::Matrix(law) => {
                line("dissipation", "matrix".into());
                line("law", law.name().into());
                if let EigenLaw::Ec1 { beta } = law {
                    line("ec1_beta", beta.to_string());
                }
            }
        }
        line("order", self.scheme.recon.order.to_string());
        line("limiter", self.scheme.recon.limiter.name().into());
        line("\n[time]\ncfl", self.time.cfl.to_string());
        line("t_final", self.time.t_final.to_string());
        line("max_steps", self.time.max_steps.to_string());
        line("\n[output]\nsnapshot_interval", self.output.snapshot_interval.to_string());
        line("budget_every", self.output.budget_every.to_string());
        line("output_dir", self.output.dir.display().to_string());
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preset_only_file() {
        let cfg = parse_config("preset = sod\n").unwrap();
        assert_eq!(cfg, presets::preset("sod").unwrap());
        assert_eq!(cfg.n_cells, 100);
    }

    #[test]
    fn cfl_zero_names_field() {
        let err = parse_config("preset = sod\ncfl = 0\n").unwrap_err();
        assert_eq!(err.field(), Some("cfl"));
    }

    #[test]
    fn scheme_keys() {
        let cfg = parse_config("flux=kepec\ndiss=matrix\nlaw=hyb\n").unwrap();
        assert_eq!(cfg.scheme.flux, CentralFlux::Kepec);
        assert_eq!(cfg.scheme.dissipation, DissipationSpec::Matrix(EigenLaw::Hybrid));
    }

    #[test]
    fn sections_are_checked() {
        let ok = "[scheme]\nflux = kep\n[time]\ncfl = 0.2\n";
        assert_eq!(parse_config(ok).unwrap().time.cfl, 0.2);
        let err = parse_config("[time]\nflux = kep\n").unwrap_err();
        assert!(matches!(err, ConfigError::Syntax { line: 2, .. }), "{err}");
        assert!(matches!(parse_config("[nope]\n").unwrap_err(), ConfigError::Syntax { line: 1, .. }));
    }

    #[test]
    fn unknown_key_rejected() {
        assert!(matches!(parse_config("colour = blue\n").unwrap_err(), ConfigError::UnknownKey { line: 1, .. }));
        assert!(matches!(parse_config("just text\n").unwrap_err(), ConfigError::Syntax { line: 1, .. }));
    }

    #[test]
    fn unknown_preset_lists_options() {
        let err = parse_config("preset = nope\n").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("sod") && msg.contains("stationary_contact"), "{msg}");
    }

    #[test]
    fn overrides_apply_last() {
        let cfg = parse_config_with("preset = sod\nn_cells = 50\n", &["n_cells=80".into(), "order=2".into()]).unwrap();
        assert_eq!(cfg.n_cells, 80);
        assert_eq!(cfg.scheme.recon.order, 2);
    }

    #[test]
    fn bad_values() {
        assert_eq!(parse_config("gamma = abc\n").unwrap_err().field(), Some("gamma"));
        assert_eq!(parse_config("left = 1, 2\n").unwrap_err().field(), Some("left"));
        assert_eq!(parse_config("bc_left = periodic\n").unwrap_err().field(), Some("bc"));
        assert_eq!(parse_config("n_cells = 2\n").unwrap_err().field(), Some("n_cells"));
    }

    #[test]
    fn every_preset_round_trips() {
        for name in presets::NAMES {
            let cfg = presets::preset(name).unwrap();
            let text = cfg.to_config_text();
            assert_eq!(parse_config(&text).unwrap(), cfg, "{name}\n{text}");
        }
    }
}
