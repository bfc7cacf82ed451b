//! Central two-point numerical fluxes for the 1-D Euler equations.
//!
//! All fluxes except [`CentralFlux::RoeEc`] and [`CentralFlux::RoeBaseline`]
//! have the kinetic-energy-preserving momentum form `f_m = p~ + u_avg f_rho`
//! with the arithmetic mean velocity `u_avg`.

use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::thermo::{avg, log_mean_pos, GasModel, PrimState};

/// Mass, momentum and energy flux through one face.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct FluxVector {
    pub mass: f64,
    pub momentum: f64,
    pub energy: f64,
}

impl FluxVector {
    pub const ZERO: FluxVector = FluxVector { mass: 0.0, momentum: 0.0, energy: 0.0 };

    pub const fn new(mass: f64, momentum: f64, energy: f64) -> Self {
        FluxVector { mass, momentum, energy }
    }

    pub fn from_array(a: [f64; 3]) -> Self {
        FluxVector { mass: a[0], momentum: a[1], energy: a[2] }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.mass, self.momentum, self.energy]
    }

    pub fn max_abs(&self) -> f64 {
        self.mass.abs().max(self.momentum.abs()).max(self.energy.abs())
    }
}

impl Add for FluxVector {
    type Output = FluxVector;
    fn add(self, o: FluxVector) -> FluxVector {
        FluxVector::new(self.mass + o.mass, self.momentum + o.momentum, self.energy + o.energy)
    }
}

impl AddAssign for FluxVector {
    fn add_assign(&mut self, o: FluxVector) {
        *self = *self + o;
    }
}

impl Sub for FluxVector {
    type Output = FluxVector;
    fn sub(self, o: FluxVector) -> FluxVector {
        FluxVector::new(self.mass - o.mass, self.momentum - o.momentum, self.energy - o.energy)
    }
}

impl Neg for FluxVector {
    type Output = FluxVector;
    fn neg(self) -> FluxVector {
        FluxVector::new(-self.mass, -self.momentum, -self.energy)
    }
}

impl Mul<FluxVector> for f64 {
    type Output = FluxVector;
    fn mul(self, f: FluxVector) -> FluxVector {
        FluxVector::new(self * f.mass, self * f.momentum, self * f.energy)
    }
}

/// Selectable central flux.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CentralFlux {
    /// Jameson's kinetic-energy-preserving flux.
    Kep,
    /// Roe's parameter-vector entropy-conservative flux.
    RoeEc,
    /// Kinetic-energy-preserving, approximately entropy-consistent flux.
    KepecAc,
    /// Kinetic-energy-preserving, entropy-conservative flux.
    Kepec,
    /// Arithmetic average of the physical fluxes; with Roe-law matrix
    /// dissipation this is the classical Roe-type scheme without an entropy fix.
    RoeBaseline,
}

impl CentralFlux {
    pub const ALL: [CentralFlux; 5] =
        [CentralFlux::Kep, CentralFlux::RoeEc, CentralFlux::KepecAc, CentralFlux::Kepec, CentralFlux::RoeBaseline];

    pub fn eval(self, left: &PrimState, right: &PrimState, gas: &GasModel) -> FluxVector {
        match self {
            CentralFlux::Kep => flux_kep(left, right, gas),
            CentralFlux::RoeEc => flux_roe_ec(left, right, gas),
            CentralFlux::KepecAc => flux_kepec_ac(left, right, gas),
            CentralFlux::Kepec => flux_kepec(left, right, gas),
            CentralFlux::RoeBaseline => flux_average(left, right, gas),
        }
    }

    /// True when the momentum flux has the kinetic-energy-preserving form.
    pub fn is_kinetic_energy_preserving(self) -> bool {
        matches!(self, CentralFlux::Kep | CentralFlux::KepecAc | CentralFlux::Kepec)
    }

    /// Whether the matching dissipation uses logarithmic density and
    /// inverse-temperature averages.
    pub fn uses_log_averages(self) -> bool {
        matches!(self, CentralFlux::Kepec | CentralFlux::RoeEc | CentralFlux::RoeBaseline)
    }

    pub fn name(self) -> &'static str {
        match self {
            CentralFlux::Kep => "kep",
            CentralFlux::RoeEc => "roe_ec",
            CentralFlux::KepecAc => "kepec_ac",
            CentralFlux::Kepec => "kepec",
            CentralFlux::RoeBaseline => "roe_baseline",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        CentralFlux::ALL.into_iter().find(|f| f.name() == name)
    }
}

/// Momentum-flux pressure `p~ = rho_avg / (2 beta_avg)`, i.e. the arithmetic
/// density times the harmonic-mean temperature.
#[inline]
pub fn entropy_pressure(left: &PrimState, right: &PrimState) -> f64 {
    avg(left.rho, right.rho) / (2.0 * avg(left.beta(), right.beta()))
}

/// Jameson: `f_rho = rho_avg u_avg`, `p~ = p_avg`, `f_e = rho_avg u_avg H_avg`.
pub fn flux_kep(left: &PrimState, right: &PrimState, gas: &GasModel) -> FluxVector {
    let u = avg(left.u, right.u);
    let mass = avg(left.rho, right.rho) * u;
    let h = avg(left.enthalpy(gas), right.enthalpy(gas));
    FluxVector::new(mass, avg(left.p, right.p) + u * mass, mass * h)
}

/// Roe's entropy-conservative flux built on `z = sqrt(rho/p) (1, u, p)`.
pub fn flux_roe_ec(left: &PrimState, right: &PrimState, gas: &GasModel) -> FluxVector {
    let g = gas.gamma;
    let z = |q: &PrimState| {
        let z1 = (q.rho / q.p).sqrt();
        (z1, z1 * q.u, z1 * q.p)
    };
    let (z1l, z2l, z3l) = z(left);
    let (z1r, z2r, z3r) = z(right);
    let (z1, z2, z3) = (avg(z1l, z1r), avg(z2l, z2r), avg(z3l, z3r));
    let (z1ln, z3ln) = (log_mean_pos(z1l, z1r), log_mean_pos(z3l, z3r));

    let rho = z1 * z3ln;
    let u = z2 / z1;
    let p1 = z3 / z1;
    let p2 = (g + 1.0) / (2.0 * g) * z3ln / z1ln + (g - 1.0) / (2.0 * g) * z3 / z1;
    let a2 = g * p2 / rho;
    let h = a2 / (g - 1.0) + 0.5 * u * u;

    let mass = rho * u;
    FluxVector::new(mass, p1 + u * mass, h * mass)
}

/// Approximately entropy-consistent flux (arithmetic averages throughout).
pub fn flux_kepec_ac(left: &PrimState, right: &PrimState, gas: &GasModel) -> FluxVector {
    let u = avg(left.u, right.u);
    let mass = avg(left.rho, right.rho) * u;
    kep_form(left, right, gas, mass, avg(left.beta(), right.beta()))
}

/// Entropy-conservative flux with logarithmic density and `beta` means.
pub fn flux_kepec(left: &PrimState, right: &PrimState, gas: &GasModel) -> FluxVector {
    let u = avg(left.u, right.u);
    let mass = log_mean_pos(left.rho, right.rho) * u;
    kep_form(left, right, gas, mass, log_mean_pos(left.beta(), right.beta()))
}

/// Shared momentum/energy closure of the KEPEC family given the mass flux
/// and the `beta` average used in the energy flux.
#[inline]
fn kep_form(left: &PrimState, right: &PrimState, gas: &GasModel, mass: f64, beta_energy: f64) -> FluxVector {
    let u = avg(left.u, right.u);
    let u2 = avg(left.u * left.u, right.u * right.u);
    let momentum = entropy_pressure(left, right) + u * mass;
    let energy = (1.0 / (2.0 * (gas.gamma - 1.0) * beta_energy) - 0.5 * u2) * mass + u * momentum;
    FluxVector::new(mass, momentum, energy)
}

/// `(f(q_L) + f(q_R)) / 2`.
pub fn flux_average(left: &PrimState, right: &PrimState, gas: &GasModel) -> FluxVector {
    let fl = left.euler_flux(gas);
    let fr = right.euler_flux(gas);
    FluxVector::new(avg(fl[0], fr[0]), avg(fl[1], fr[1]), avg(fl[2], fr[2]))
}

/// Tadmor residual `(v_R - v_L) . f - (psi_R - psi_L)` of a face flux.
pub fn tadmor_residual(left: &PrimState, right: &PrimState, gas: &GasModel, f: FluxVector) -> f64 {
    let dv = right.entropy_vars(gas) - left.entropy_vars(gas);
    dv.dot(f.to_array()) - (right.rho * right.u - left.rho * left.u)
}

/// Fluxes obtained by enforcing the entropy condition in other independent
/// variables. Kept as oracles for the uniqueness argument only.
#[cfg(any(test, feature = "negative-variants"))]
pub mod uniqueness {
    use super::*;

    #[derive(Debug, Clone, Copy, PartialEq, Eq)]
    pub enum Variant {
        /// Jumps expressed in `(rho, u, p)`; the mass flux depends on gamma.
        RhoUP,
        /// Jumps expressed in `(p, u, beta)`; the energy flux is inconsistent.
        PUBeta,
    }

    pub fn flux(left: &PrimState, right: &PrimState, gas: &GasModel, variant: Variant) -> FluxVector {
        let g = gas.gamma;
        let u = avg(left.u, right.u);
        let u2 = avg(left.u * left.u, right.u * right.u);
        let rho = avg(left.rho, right.rho);
        let p = avg(left.p, right.p);
        let p_ln = log_mean_pos(left.p, right.p);
        let momentum_of = |mass: f64| entropy_pressure(left, right) + u * mass;
        match variant {
            Variant::RhoUP => {
                let rho_ln = log_mean_pos(left.rho, right.rho);
                let mass = rho_ln * u / (g / (g - 1.0) - p * rho_ln / ((g - 1.0) * rho * p_ln));
                let momentum = momentum_of(mass);
                let energy = (left.p * right.p / ((g - 1.0) * rho * p_ln) - 0.5 * u2) * mass + u * momentum;
                FluxVector::new(mass, momentum, energy)
            }
            Variant::PUBeta => {
                let beta = avg(left.beta(), right.beta());
                let beta_ln = log_mean_pos(left.beta(), right.beta());
                let mass = 2.0 * p_ln * beta * u;
                let momentum = momentum_of(mass);
                let energy = (g / (2.0 * (g - 1.0) * beta_ln) - 0.5 * u2) * mass + u * momentum;
                FluxVector::new(mass, momentum, energy)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::uniqueness::{self, Variant};
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    const AIR: GasModel =
        GasModel { gamma: 1.4, gas_constant: 1.0, viscosity: crate::thermo::ViscosityLaw::Inviscid, prandtl: 0.72 };

    fn q(rho: f64, u: f64, p: f64) -> PrimState {
        PrimState::new(rho, u, p)
    }

    fn assert_flux(f: FluxVector, expect: [f64; 3]) {
        for (a, b) in f.to_array().into_iter().zip(expect) {
            assert_relative_eq!(a, b, epsilon = 1e-13, max_relative = 1e-13);
        }
    }

    #[test]
    fn consistency_with_exact_flux() {
        let s = q(1.0, 1.0, 1.0);
        for flux in CentralFlux::ALL {
            assert_flux(flux.eval(&s, &s, &AIR), [1.0, 2.0, 4.0]);
        }
        let still = q(1.0, 0.0, 1.0);
        assert_flux(flux_kep(&still, &still, &AIR), [0.0, 1.0, 0.0]);
    }

    #[test]
    fn kep_mass_flux() {
        assert_relative_eq!(flux_kep(&q(1.0, 1.0, 1.0), &q(3.0, 1.0, 1.0), &AIR).mass, 2.0);
    }

    #[test]
    fn roe_ec_zero_velocity_gives_zero_mass_flux() {
        let f = flux_roe_ec(&q(1.0, 0.0, 1.0), &q(2.0, 0.0, 2.0), &AIR);
        assert_eq!(f.mass, 0.0);
    }

    #[test]
    fn kepec_ac_uses_harmonic_temperature() {
        // R = 1: T = p / rho; T_L = 1, T_R = 3
        let (l, r) = (q(1.0, 0.2, 1.0), q(1.0, -0.1, 3.0));
        let t_hat = 2.0 * 1.0 * 3.0 / (1.0 + 3.0);
        assert_relative_eq!(t_hat, 1.5);
        let f = flux_kepec_ac(&l, &r, &AIR);
        assert_relative_eq!(f.momentum - avg(l.u, r.u) * f.mass, 1.0 * t_hat, epsilon = 1e-15);
    }

    #[test]
    fn kepec_contact_pair() {
        let (l, r) = (q(1.0, 0.0, 1.0), q(10.0, 0.0, 1.0));
        let f = flux_kepec(&l, &r, &AIR);
        assert_eq!(f.mass, 0.0);
        assert_relative_eq!(f.momentum, 1.0, epsilon = 1e-15);
        assert_eq!(f.energy, 0.0);
        assert_eq!(tadmor_residual(&l, &r, &AIR, f), 0.0);
    }

    #[test]
    fn rho_u_p_variant_depends_on_gamma() {
        let (l, r) = (q(1.0, 0.5, 1.0), q(2.0, 0.3, 3.0));
        let a = uniqueness::flux(&l, &r, &GasModel::ideal(1.4), Variant::RhoUP);
        let b = uniqueness::flux(&l, &r, &GasModel::ideal(5.0 / 3.0), Variant::RhoUP);
        assert!((a.mass - b.mass).abs() > 1e-3);
        // entropy conservative nonetheless
        assert!(tadmor_residual(&l, &r, &AIR, a).abs() < 1e-13);
    }

    #[test]
    fn p_u_beta_variant_energy_flux_is_inconsistent() {
        let s = q(1.0, 1.0, 1.0);
        let f = uniqueness::flux(&s, &s, &AIR, Variant::PUBeta);
        assert_relative_eq!(f.mass, 1.0, epsilon = 1e-15);
        assert_relative_eq!(f.momentum, 2.0, epsilon = 1e-15);
        assert_relative_eq!(f.energy, 5.0, epsilon = 1e-14);
        assert!((f.energy - 4.0).abs() > 0.5);
    }

    #[test]
    fn p_u_beta_variant_tadmor_residual_closed_form() {
        let (l, r) = (q(0.7, 0.4, 1.3), q(1.9, -0.2, 0.6));
        let f = uniqueness::flux(&l, &r, &AIR, Variant::PUBeta);
        let expect = -2.0 * avg(l.u, r.u) * avg(l.p, r.p) * (r.beta() - l.beta());
        assert_relative_eq!(tadmor_residual(&l, &r, &AIR, f), expect, epsilon = 1e-13);
        // vanishes when the mean velocity does
        let (l, r) = (q(0.7, 0.4, 1.3), q(1.9, -0.4, 0.6));
        let f = uniqueness::flux(&l, &r, &AIR, Variant::PUBeta);
        assert!(tadmor_residual(&l, &r, &AIR, f).abs() < 1e-13);
    }

    fn state() -> impl Strategy<Value = PrimState> {
        (0.1f64..10.0, -2.0f64..2.0, 0.1f64..10.0).prop_map(|(r, u, p)| q(r, u, p))
    }

    proptest! {
        #[test]
        fn entropy_conservative_fluxes_satisfy_tadmor(l in state(), r in state()) {
            for f in [flux_kepec(&l, &r, &AIR), flux_roe_ec(&l, &r, &AIR)] {
                prop_assert!(tadmor_residual(&l, &r, &AIR, f).abs() < 1e-11);
            }
        }

        #[test]
        fn kep_form_pressure(l in state(), r in state()) {
            let u = avg(l.u, r.u);
            for flux in [CentralFlux::KepecAc, CentralFlux::Kepec] {
                let f = flux.eval(&l, &r, &AIR);
                let p = entropy_pressure(&l, &r);
                prop_assert!((f.momentum - u * f.mass - p).abs() <= 1e-12 * f.max_abs().max(1.0));
            }
            let f = flux_kep(&l, &r, &AIR);
            prop_assert!((f.momentum - u * f.mass - avg(l.p, r.p)).abs() <= 1e-12 * f.max_abs().max(1.0));
        }

        #[test]
        fn mirror_symmetry(l in state(), r in state()) {
            let mirror = |s: &PrimState| q(s.rho, -s.u, s.p);
            for flux in CentralFlux::ALL {
                let f = flux.eval(&l, &r, &AIR);
                let g = flux.eval(&mirror(&r), &mirror(&l), &AIR);
                let tol = 1e-12 * f.max_abs().max(1.0);
                prop_assert!((g.mass + f.mass).abs() <= tol);
                prop_assert!((g.momentum - f.momentum).abs() <= tol);
                prop_assert!((g.energy + f.energy).abs() <= tol);
            }
        }
    }
}
