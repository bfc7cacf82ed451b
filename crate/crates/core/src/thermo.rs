//! Ideal-gas thermodynamics and the variable sets used by the fluxes.
//!
//! Three representations of a cell state are used throughout the crate:
//! primitive `(rho, u, p)`, conserved `(rho, m, E)` and the entropy
//! variables `v = dU/du` of the entropy function `U = -rho s / (gamma - 1)`
//! with `s = ln p - gamma ln rho`. The inverse temperature
//! `beta = 1 / (2 R T) = rho / (2 p)` is independent of the gas constant.

use crate::error::{Result, SolverError};

/// Squared relative jump below which [`log_mean`] switches to its series form.
pub const LOG_MEAN_SWITCH: f64 = 1.0e-4;

/// Dynamic viscosity as a function of temperature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ViscosityLaw {
    Inviscid,
    Constant(f64),
    /// `mu = mu_ref * (T / t_ref)^exponent`
    PowerLaw {
        mu_ref: f64,
        t_ref: f64,
        exponent: f64,
    },
}

impl ViscosityLaw {
    pub fn is_inviscid(&self) -> bool {
        match *self {
            ViscosityLaw::Inviscid => true,
            ViscosityLaw::Constant(mu) => mu == 0.0,
            ViscosityLaw::PowerLaw { mu_ref, .. } => mu_ref == 0.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GasModel {
    pub gamma: f64,
    pub gas_constant: f64,
    pub viscosity: ViscosityLaw,
    pub prandtl: f64,
}

impl Default for GasModel {
    fn default() -> Self {
        GasModel { gamma: 1.4, gas_constant: 1.0, viscosity: ViscosityLaw::Inviscid, prandtl: 0.72 }
    }
}

impl GasModel {
    /// Inviscid gas with `R = 1`.
    pub fn ideal(gamma: f64) -> Self {
        GasModel { gamma, ..Default::default() }
    }

    pub fn with_viscosity(mut self, law: ViscosityLaw, prandtl: f64) -> Self {
        self.viscosity = law;
        self.prandtl = prandtl;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.gamma > 1.0) {
            return Err(SolverError::parameter("gamma", format!("must exceed 1, got {}", self.gamma)));
        }
        if !(self.gas_constant > 0.0) {
            return Err(SolverError::parameter("gas_constant", "must be positive"));
        }
        if !(self.prandtl > 0.0) {
            return Err(SolverError::parameter("prandtl", "must be positive"));
        }
        match self.viscosity {
            ViscosityLaw::Inviscid => {}
            ViscosityLaw::Constant(mu) if mu >= 0.0 => {}
            ViscosityLaw::PowerLaw { mu_ref, t_ref, .. } if mu_ref >= 0.0 && t_ref > 0.0 => {}
            _ => return Err(SolverError::parameter("viscosity", "coefficients must be non-negative")),
        }
        Ok(())
    }

    pub fn viscosity(&self, temperature: f64) -> f64 {
        match self.viscosity {
            ViscosityLaw::Inviscid => 0.0,
            ViscosityLaw::Constant(mu) => mu,
            ViscosityLaw::PowerLaw { mu_ref, t_ref, exponent } => mu_ref * (temperature / t_ref).powf(exponent),
        }
    }

    /// Fourier conductivity `kappa = gamma R mu / ((gamma - 1) Pr)`.
    pub fn conductivity(&self, temperature: f64) -> f64 {
        self.gamma * self.gas_constant * self.viscosity(temperature) / ((self.gamma - 1.0) * self.prandtl)
    }

    pub fn is_inviscid(&self) -> bool {
        self.viscosity.is_inviscid()
    }
}

/// Primitive state `(rho, u, p)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrimState {
    pub rho: f64,
    pub u: f64,
    pub p: f64,
}

/// Conserved state `(rho, m = rho u, E)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ConsState {
    pub rho: f64,
    pub m: f64,
    pub e: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyVars {
    pub v1: f64,
    pub v2: f64,
    pub v3: f64,
}

impl PrimState {
    pub const fn new(rho: f64, u: f64, p: f64) -> Self {
        PrimState { rho, u, p }
    }

    pub fn is_valid(&self) -> bool {
        self.rho > 0.0 && self.p > 0.0 && self.u.is_finite()
    }

    /// Checked constructor; `cell` is only used for the error message.
    pub fn checked(rho: f64, u: f64, p: f64, cell: usize) -> Result<Self> {
        let q = PrimState { rho, u, p };
        if q.is_valid() {
            Ok(q)
        } else {
            Err(SolverError::InvalidState { cell, rho, p })
        }
    }

    pub fn to_cons(&self, gas: &GasModel) -> ConsState {
        ConsState {
            rho: self.rho,
            m: self.rho * self.u,
            e: self.p / (gas.gamma - 1.0) + 0.5 * self.rho * self.u * self.u,
        }
    }

    /// `beta = 1 / (2 R T)`.
    pub fn beta(&self) -> f64 {
        0.5 * self.rho / self.p
    }

    pub fn temperature(&self, gas: &GasModel) -> f64 {
        self.p / (self.rho * gas.gas_constant)
    }

    /// Physical entropy `ln p - gamma ln rho` with the additive constant dropped.
    pub fn entropy(&self, gas: &GasModel) -> f64 {
        self.p.ln() - gas.gamma * self.rho.ln()
    }

    pub fn sound_speed(&self, gas: &GasModel) -> f64 {
        (gas.gamma * self.p / self.rho).sqrt()
    }

    /// Total specific enthalpy `(E + p) / rho`.
    pub fn enthalpy(&self, gas: &GasModel) -> f64 {
        gas.gamma * self.p / ((gas.gamma - 1.0) * self.rho) + 0.5 * self.u * self.u
    }

    pub fn entropy_vars(&self, gas: &GasModel) -> EntropyVars {
        let s = self.entropy(gas);
        let beta = self.beta();
        EntropyVars {
            v1: (gas.gamma - s) / (gas.gamma - 1.0) - beta * self.u * self.u,
            v2: 2.0 * beta * self.u,
            v3: -2.0 * beta,
        }
    }

    /// Entropy `U`, entropy flux `F` and potential `psi = rho u`.
    pub fn entropy_pair(&self, gas: &GasModel) -> (f64, f64, f64) {
        let s = self.entropy(gas);
        let entropy = -self.rho * s / (gas.gamma - 1.0);
        (entropy, entropy * self.u, self.rho * self.u)
    }

    /// Exact Euler flux `(m, p + u m, (E + p) u)`.
    pub fn euler_flux(&self, gas: &GasModel) -> [f64; 3] {
        let m = self.rho * self.u;
        let e = self.p / (gas.gamma - 1.0) + 0.5 * m * self.u;
        [m, self.p + self.u * m, (e + self.p) * self.u]
    }
}

impl ConsState {
    pub const fn new(rho: f64, m: f64, e: f64) -> Self {
        ConsState { rho, m, e }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.rho, self.m, self.e]
    }

    pub fn from_array(a: [f64; 3]) -> Self {
        ConsState { rho: a[0], m: a[1], e: a[2] }
    }

    /// Inverse of [`PrimState::to_cons`]; fails when density or internal
    /// energy is not positive. `cell` tags the error.
    pub fn to_prim(&self, gas: &GasModel, cell: usize) -> Result<PrimState> {
        let internal = self.e - 0.5 * self.m * self.m / self.rho;
        let p = (gas.gamma - 1.0) * internal;
        if !(self.rho > 0.0) || !(p > 0.0) || !self.m.is_finite() {
            return Err(SolverError::InvalidState { cell, rho: self.rho, p });
        }
        Ok(PrimState { rho: self.rho, u: self.m / self.rho, p })
    }
}

impl EntropyVars {
    pub fn to_array(self) -> [f64; 3] {
        [self.v1, self.v2, self.v3]
    }

    pub fn dot(&self, f: [f64; 3]) -> f64 {
        self.v1 * f[0] + self.v2 * f[1] + self.v3 * f[2]
    }
}

impl std::ops::Sub for EntropyVars {
    type Output = EntropyVars;
    fn sub(self, rhs: EntropyVars) -> EntropyVars {
        EntropyVars { v1: self.v1 - rhs.v1, v2: self.v2 - rhs.v2, v3: self.v3 - rhs.v3 }
    }
}

/// Logarithmic mean `(b - a) / (ln b - ln a)` of two positive numbers.
///
/// Near `a = b` the quotient is evaluated from the series of `ln(b/a)` in
/// `zeta = (b - a) / (b + a)`.
pub fn log_mean(a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0 && b > 0.0) || !a.is_finite() || !b.is_finite() {
        return Err(SolverError::LogMeanDomain(a, b));
    }
    Ok(log_mean_pos(a, b))
}

/// [`log_mean`] without the domain check; callers guarantee positivity.
#[inline]
pub(crate) fn log_mean_pos(a: f64, b: f64) -> f64 {
    let zeta = (b - a) / (b + a);
    let f = zeta * zeta;
    let mean = if f < LOG_MEAN_SWITCH {
        0.5 * (a + b) / (1.0 + f * (1.0 / 3.0 + f * (1.0 / 5.0 + f / 7.0)))
    } else {
        (b - a) / (b.ln() - a.ln())
    };
    mean.clamp(a.min(b), a.max(b))
}

/// Arithmetic mean.
#[inline]
pub(crate) fn avg(a: f64, b: f64) -> f64 {
    0.5 * (a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    const AIR: GasModel = GasModel { gamma: 1.4, gas_constant: 1.0, viscosity: ViscosityLaw::Inviscid, prandtl: 0.72 };

    #[test]
    fn prim_to_cons_examples() {
        let c = PrimState::new(1.0, 0.0, 1.0).to_cons(&AIR);
        assert_eq!((c.rho, c.m), (1.0, 0.0));
        assert_relative_eq!(c.e, 2.5, epsilon = 1e-15);
        let c = PrimState::new(1.0, 1.0, 1.0).to_cons(&AIR);
        assert_relative_eq!(c.e, 3.0, epsilon = 1e-15);
        let c = PrimState::new(0.125, 0.0, 0.1).to_cons(&AIR);
        assert_relative_eq!(c.e, 0.25, epsilon = 1e-15);
    }

    #[test]
    fn cons_to_prim_rejects_negative_internal_energy() {
        let err = ConsState::new(1.0, 2.0, 1.0).to_prim(&AIR, 7).unwrap_err();
        assert_eq!(err.cell(), Some(7));
        assert!(ConsState::new(-1.0, 0.0, 1.0).to_prim(&AIR, 0).is_err());
    }

    #[test]
    fn entropy_variable_examples() {
        let v = PrimState::new(1.0, 0.0, 1.0).entropy_vars(&AIR);
        assert_relative_eq!(v.v1, 3.5, epsilon = 1e-14);
        assert_eq!(v.v2, 0.0);
        assert_relative_eq!(v.v3, -1.0);
        let v = PrimState::new(1.0, 1.0, 1.0).entropy_vars(&AIR);
        assert_relative_eq!(v.v1, 3.0, epsilon = 1e-14);
        assert_relative_eq!(v.v2, 1.0);
        assert_relative_eq!(v.v3, -1.0);
        assert_eq!(PrimState::new(3.0, 0.0, 0.2).entropy_vars(&AIR).v2, 0.0);
    }

    #[test]
    fn entropy_pair_examples() {
        let (u, f, psi) = PrimState::new(1.0, 0.0, 1.0).entropy_pair(&AIR);
        assert_eq!((u, f, psi), (0.0, 0.0, 0.0));
        assert_eq!(PrimState::new(1.0, 2.0, 1.0).entropy_pair(&AIR).2, 2.0);
        let (u, _, _) = PrimState::new(2.0, 1.0, 1.0).entropy_pair(&AIR);
        assert_relative_eq!(u, -2.0 * (-1.4 * 2f64.ln()) / 0.4, epsilon = 1e-14);
        assert_relative_eq!(u, 4.85203, epsilon = 1e-5);
    }

    #[test]
    fn log_mean_examples() {
        assert_eq!(log_mean(3.0, 3.0).unwrap(), 3.0);
        assert_relative_eq!(log_mean(1.0, 2.0).unwrap(), 1.0 / 2f64.ln(), epsilon = 1e-15);
        let m = log_mean(1.0, 1.0 + 1e-12).unwrap();
        assert!(m.is_finite() && (1.0..=1.0 + 1e-12).contains(&m));
        // high-precision value is the midpoint to O(1e-24)
        assert_relative_eq!(m, 1.0 + 0.5e-12, epsilon = 1e-16);
    }

    #[test]
    fn log_mean_domain_errors() {
        assert!(matches!(log_mean(0.0, 1.0), Err(SolverError::LogMeanDomain(..))));
        assert!(log_mean(-1.0, 1.0).is_err());
        assert!(log_mean(1.0, f64::NAN).is_err());
    }

    #[test]
    fn log_mean_branches_agree_at_switch() {
        // zeta^2 = 1e-4 exactly at b/a = (1 + 0.01)/(1 - 0.01)
        for scale in [1e-6, 1.0, 3.7, 1e8] {
            let a: f64 = scale;
            let b: f64 = scale * 1.01 / 0.99;
            let direct = (b - a) / (b.ln() - a.ln());
            let zeta: f64 = (b - a) / (b + a);
            let f = zeta * zeta;
            let series = 0.5 * (a + b) / (1.0 + f * (1.0 / 3.0 + f * (1.0 / 5.0 + f / 7.0)));
            assert!(((direct - series) / direct).abs() < 1e-12);
        }
    }

    #[test]
    fn sound_speed_and_transport() {
        assert_relative_eq!(PrimState::new(1.0, 0.0, 1.4).sound_speed(&AIR), 1.4, epsilon = 1e-15);
        let gas = AIR.with_viscosity(ViscosityLaw::Constant(0.01), 0.72);
        assert_eq!(gas.viscosity(0.3), 0.01);
        assert_eq!(gas.viscosity(30.0), 0.01);
        assert_relative_eq!(gas.conductivity(1.0), 1.4 * 0.01 / (0.4 * 0.72), epsilon = 1e-15);
        let law = ViscosityLaw::PowerLaw { mu_ref: 0.0005, t_ref: 0.36, exponent: 0.8 };
        let gas = GasModel::ideal(5.0 / 3.0).with_viscosity(law, 2.0 / 3.0);
        assert_relative_eq!(gas.viscosity(0.36), 0.0005, epsilon = 1e-18);
        assert!(AIR.is_inviscid());
    }

    #[test]
    fn gas_validation() {
        assert!(GasModel::ideal(1.0).validate().is_err());
        assert!(GasModel { gas_constant: 0.0, ..AIR }.validate().is_err());
        assert!(AIR.with_viscosity(ViscosityLaw::Constant(-1.0), 0.7).validate().is_err());
        assert!(AIR.validate().is_ok());
    }
}
