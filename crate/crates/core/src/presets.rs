//! Named problem set-ups for the 1-D test cases.
//!
//! A preset name may carry parameters, e.g. `stationary_shock M=20` or
//! `ns_shock_structure N=50`; each `key=value` token is applied as a config key.

use crate::config::{BoundaryChoice, ConfigError, InitialCondition, OutputSpec, ProblemConfig};
use crate::dissipation1d::{BetaAverage, DissipationSpec, EigenLaw, ScalarDissipation};
use crate::flux1d::CentralFlux;
use crate::reconstruction::{Limiter, ReconSpec};
use crate::spatial::Scheme;
use crate::thermo::{ConsState, GasModel, PrimState, ViscosityLaw};
use crate::timeint::TimeSpec;

pub const NAMES: [&str; 6] =
    ["sod", "modified_sod", "viscous_sod", "stationary_contact", "stationary_shock", "ns_shock_structure"];

/// One-line description per preset, for `preset --list`.
pub fn describe(name: &str) -> &'static str {
    match name {
        "sod" => "Sod shock tube, N=100, CFL 0.4, t=0.2, MUSCL/minmod with entropy-stable matrix dissipation",
        "modified_sod" => "Sod variant with a sonic rarefaction, left (1, 0.75, 1), N=100, t=0.2",
        "viscous_sod" => "Navier-Stokes Sod at Re=2000, N=500, CFL 0.1, fourth-difference dissipation",
        "stationary_contact" => "density jump (10,0,1)/(1,0,1) at rest, N=26",
        "stationary_shock" => "Rankine-Hugoniot stationary shock, N=24, CFL 0.1 (parameter M, default 1.5)",
        "ns_shock_structure" => "viscous shock profile, M=1.5, gamma=5/3, Pr=2/3 (parameter N, default 200)",
        _ => "",
    }
}

/// Pre- and post-shock states of a stationary shock with upstream Mach
/// number `mach`, upstream density and velocity 1.
pub fn stationary_shock_states(mach: f64, gamma: f64) -> (PrimState, PrimState) {
    let g = gamma;
    let m2 = mach * mach;
    let p_l = 1.0 / (g * m2);
    let rho_r = 1.0 / (2.0 / ((g + 1.0) * m2) + (g - 1.0) / (g + 1.0));
    let p_r = p_l * (2.0 * g * m2 / (g + 1.0) - (g - 1.0) / (g + 1.0));
    (PrimState::new(1.0, 1.0, p_l), PrimState::new(rho_r, 1.0 / rho_r, p_r))
}

fn base(name: &str) -> ProblemConfig {
    ProblemConfig {
        preset: name.to_string(),
        n_cells: 100,
        x_min: 0.0,
        x_max: 1.0,
        gas: GasModel::ideal(1.4),
        initial: InitialCondition::Riemann {
            left: PrimState::new(1.0, 0.0, 1.0),
            right: PrimState::new(0.125, 0.0, 0.1),
            x0: 0.5,
        },
        bc_left: BoundaryChoice::Transmissive,
        bc_right: BoundaryChoice::Transmissive,
        outflow_mass_flux: 1.0,
        scheme: Scheme::new(CentralFlux::Kepec, DissipationSpec::Matrix(EigenLaw::Roe)),
        time: TimeSpec::new(0.4, 0.2),
        output: OutputSpec::default(),
    }
}

/// Configuration for `name`, optionally followed by `key=value` parameters.
pub fn preset(name: &str) -> Result<ProblemConfig, ConfigError> {
    let mut tokens = name.split_whitespace();
    let key = tokens.next().unwrap_or("");
    let mut cfg = base(name.trim());
    match key {
        "sod" => {
            cfg.scheme.recon = ReconSpec::muscl(Limiter::Minmod);
        }
        "modified_sod" => {
            cfg.initial = InitialCondition::Riemann {
                left: PrimState::new(1.0, 0.75, 1.0),
                right: PrimState::new(0.125, 0.0, 0.1),
                x0: 0.3,
            };
            // equal acoustic eigenvalues keep the sonic point free of an expansion shock
            cfg.scheme.dissipation = DissipationSpec::Matrix(EigenLaw::Kes);
        }
        "viscous_sod" => {
            // Re = rho_l a_l L / mu = 2000 with L = 1
            cfg.n_cells = 500;
            cfg.gas = cfg.gas.with_viscosity(ViscosityLaw::Constant(1.4f64.sqrt() / 2000.0), 0.72);
            cfg.scheme.dissipation = DissipationSpec::Scalar(ScalarDissipation {
                kappa2: 0.0,
                kappa4: 1.0 / 100.0,
                beta_average: BetaAverage::Logarithmic,
            });
            cfg.time = TimeSpec::new(0.1, 0.2);
        }
        "stationary_contact" => {
            cfg.n_cells = 26;
            cfg.initial = InitialCondition::Riemann {
                left: PrimState::new(10.0, 0.0, 1.0),
                right: PrimState::new(1.0, 0.0, 1.0),
                x0: 0.5,
            };
            cfg.scheme.dissipation = DissipationSpec::Matrix(EigenLaw::Kes);
            cfg.time = TimeSpec::new(0.4, 2.0);
        }
        "stationary_shock" => {
            cfg.n_cells = 24;
            cfg.initial = InitialCondition::StationaryShock { mach: 1.5, intermediate: false };
            cfg.bc_left = BoundaryChoice::Fixed;
            cfg.bc_right = BoundaryChoice::Fixed;
            cfg.scheme.dissipation = DissipationSpec::Matrix(EigenLaw::Ec1 { beta: EigenLaw::EC1_DEFAULT_BETA });
            cfg.time = TimeSpec::new(0.1, 20.0);
        }
        "ns_shock_structure" => {
            let gamma = 5.0 / 3.0;
            let mach = 1.5;
            let t1 = stationary_shock_states(mach, gamma).0.p;
            cfg.n_cells = 200;
            cfg.x_min = -0.05;
            cfg.x_max = 0.05;
            cfg.gas = GasModel::ideal(gamma)
                .with_viscosity(ViscosityLaw::PowerLaw { mu_ref: 5e-4, t_ref: t1, exponent: 0.8 }, 2.0 / 3.0);
            cfg.initial = InitialCondition::StationaryShock { mach, intermediate: false };
            cfg.bc_left = BoundaryChoice::Fixed;
            cfg.bc_right = BoundaryChoice::Fixed;
            cfg.scheme.dissipation = DissipationSpec::Scalar(ScalarDissipation {
                kappa2: 0.5,
                kappa4: 1.0 / 25.0,
                beta_average: BetaAverage::Logarithmic,
            });
            // long enough for the start-up acoustic waves to leave and the profile to settle
            cfg.time = TimeSpec::new(0.4, 4.0);
        }
        _ => {
            return Err(ConfigError::UnknownPreset { name: name.to_string(), available: NAMES.join(", ") });
        }
    }
    for token in tokens {
        let (k, v) = token
            .split_once('=')
            .ok_or_else(|| ConfigError::UnknownPreset { name: name.to_string(), available: NAMES.join(", ") })?;
        let k = crate::config::canonical(k).ok_or_else(|| ConfigError::UnknownKey { line: 0, key: k.to_string() })?;
        cfg.set(k, v)?;
    }
    Ok(cfg)
}

/// Cell averages of the initial data.
pub fn initial_cells(cfg: &ProblemConfig) -> crate::Result<Vec<ConsState>> {
    let grid = cfg.grid()?;
    let gas = &cfg.gas;
    let n = grid.n_cells;
    Ok(match cfg.initial {
        InitialCondition::Riemann { left, right, x0 } => {
            grid.centers().into_iter().map(|x| if x < x0 { left } else { right }.to_cons(gas)).collect()
        }
        InitialCondition::StationaryShock { mach, intermediate } => {
            let (l, r) = stationary_shock_states(mach, gas.gamma);
            let (cl, cr) = (l.to_cons(gas), r.to_cons(gas));
            (0..n)
                .map(|j| {
                    if intermediate && j == n / 2 {
                        ConsState::new(0.5 * (cl.rho + cr.rho), 0.5 * (cl.m + cr.m), 0.5 * (cl.e + cr.e))
                    } else if j < n / 2 {
                        cl
                    } else {
                        cr
                    }
                })
                .collect()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn sod_values() {
        let c = preset("sod").unwrap();
        assert_eq!(c.end_states(), (PrimState::new(1.0, 0.0, 1.0), PrimState::new(0.125, 0.0, 0.1)));
        assert_eq!((c.n_cells, c.time.cfl, c.time.t_final), (100, 0.4, 0.2));
    }

    #[test]
    fn stationary_shock_m15() {
        let c = preset("stationary_shock M=1.5").unwrap();
        let (l, r) = c.end_states();
        assert_relative_eq!(l.p, 0.3174603, max_relative = 1e-6);
        assert_relative_eq!(r.rho, 1.86207, max_relative = 1e-5);
        assert_relative_eq!(r.u, 0.537037, max_relative = 1e-5);
        assert_relative_eq!(r.p, 0.780423, max_relative = 1e-5);
        assert_eq!((c.n_cells, c.time.cfl), (24, 0.1));
    }

    #[test]
    fn shock_states_satisfy_jump_conditions() {
        for m in [1.5, 4.0, 20.0] {
            let (l, r) = stationary_shock_states(m, 1.4);
            let (fl, fr) = (l.euler_flux(&GasModel::ideal(1.4)), r.euler_flux(&GasModel::ideal(1.4)));
            for k in 0..3 {
                assert_relative_eq!(fl[k], fr[k], max_relative = 1e-13);
            }
        }
    }

    #[test]
    fn contact_preset() {
        let c = preset("stationary_contact").unwrap();
        let (l, r) = c.end_states();
        assert_eq!(c.n_cells, 26);
        assert_eq!((l.u, r.u), (0.0, 0.0));
    }

    #[test]
    fn parameters_and_errors() {
        assert_eq!(preset("ns_shock_structure N=50").unwrap().n_cells, 50);
        assert!(matches!(preset("nope"), Err(ConfigError::UnknownPreset { .. })));
        for name in NAMES {
            let c = preset(name).unwrap();
            c.validate().unwrap();
            assert!(!describe(name).is_empty());
            assert_eq!(initial_cells(&c).unwrap().len(), c.n_cells);
        }
    }

    #[test]
    fn intermediate_cell() {
        let mut c = preset("stationary_shock").unwrap();
        c.set("intermediate", "true").unwrap();
        let cells = initial_cells(&c).unwrap();
        let (l, r) = stationary_shock_states(1.5, 1.4);
        assert_relative_eq!(cells[12].rho, 0.5 * (l.rho + r.rho));
        assert_eq!(cells[11].rho, 1.0);
    }
}
