//! Dissipation added to the central fluxes.
//!
//! Scalar dissipation `-1/2 lambda D` is built so that its mass and momentum
//! parts dissipate kinetic energy and its energy part produces entropy; the
//! JST blend replaces every jump in `D` by a switched second/fourth difference.
//!
//! Matrix dissipation `-1/2 R |Lambda| S R^T dv` acts on entropy-variable
//! jumps. The eigenvector matrix `R` is evaluated at a face average whose
//! sound speed comes from the `beta` average of the paired central flux.

use crate::error::{Result, SolverError};
use crate::flux1d::{CentralFlux, FluxVector};
use crate::thermo::{avg, log_mean_pos, GasModel, PrimState};

pub type Mat3 = [[f64; 3]; 3];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BetaAverage {
    Arithmetic,
    Logarithmic,
}

impl BetaAverage {
    pub fn of(self, left: &PrimState, right: &PrimState) -> f64 {
        match self {
            BetaAverage::Arithmetic => avg(left.beta(), right.beta()),
            BetaAverage::Logarithmic => log_mean_pos(left.beta(), right.beta()),
        }
    }
}

/// Eigenvalue law of the matrix dissipation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EigenLaw {
    /// `|u - a|, |u|, |u + a|`
    Roe,
    /// Roe with acoustic eigenvalues augmented by `beta |d lambda|`.
    Ec1 { beta: f64 },
    /// Equal acoustic eigenvalues `|u| + a`; kinetic-energy stable.
    Kes,
    /// `(|u| + a) I`
    Rusanov,
    /// Pressure-switched blend of Roe and Rusanov.
    Hybrid,
}

impl EigenLaw {
    pub const EC1_DEFAULT_BETA: f64 = 1.0 / 6.0;

    pub fn name(&self) -> &'static str {
        match self {
            EigenLaw::Roe => "roe",
            EigenLaw::Ec1 { .. } => "ec1",
            EigenLaw::Kes => "kes",
            EigenLaw::Rusanov => "rus",
            EigenLaw::Hybrid => "hyb",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalarDissipation {
    pub kappa2: f64,
    pub kappa4: f64,
    pub beta_average: BetaAverage,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DissipationSpec {
    None,
    Scalar(ScalarDissipation),
    Matrix(EigenLaw),
}

impl DissipationSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            DissipationSpec::Scalar(s) => {
                if !(s.kappa2 >= 0.0) {
                    return Err(SolverError::parameter("kappa2", "must be non-negative"));
                }
                if !(s.kappa4 >= 0.0) {
                    return Err(SolverError::parameter("kappa4", "must be non-negative"));
                }
            }
            DissipationSpec::Matrix(EigenLaw::Ec1 { beta }) if !(beta >= 0.0) => {
                return Err(SolverError::parameter("ec1_beta", "must be non-negative"));
            }
            _ => {}
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// scalar dissipation
// ---------------------------------------------------------------------------

/// Dissipation vector `D` and wave speed `lambda` for one face.
///
/// With the logarithmic `beta` average the entropy production `dv . D` is
/// exactly the non-negative quadratic returned by [`scalar_entropy_quadratic`].
pub fn scalar_d_vector(
    left: &PrimState,
    right: &PrimState,
    gas: &GasModel,
    beta_average: BetaAverage,
) -> (FluxVector, f64) {
    let d_rho = right.rho - left.rho;
    let d_u = right.u - left.u;
    let d_inv_beta = 1.0 / right.beta() - 1.0 / left.beta();
    let d = assemble_d(left, right, gas, beta_average, d_rho, d_u, d_inv_beta);
    (d, scalar_wave_speed(left, right, gas, beta_average))
}

/// `|u_avg| + sqrt(gamma / (2 beta_avg))`
pub fn scalar_wave_speed(left: &PrimState, right: &PrimState, gas: &GasModel, beta_average: BetaAverage) -> f64 {
    avg(left.u, right.u).abs() + (gas.gamma / (2.0 * beta_average.of(left, right))).sqrt()
}

fn assemble_d(
    left: &PrimState,
    right: &PrimState,
    gas: &GasModel,
    beta_average: BetaAverage,
    d_rho: f64,
    d_u: f64,
    d_inv_beta: f64,
) -> FluxVector {
    let g1 = gas.gamma - 1.0;
    let rho = avg(left.rho, right.rho);
    let u = avg(left.u, right.u);
    let beta = beta_average.of(left, right);
    FluxVector::new(
        d_rho,
        u * d_rho + rho * d_u,
        (1.0 / (2.0 * g1 * beta) + 0.5 * left.u * right.u) * d_rho + rho * u * d_u + rho / (2.0 * g1) * d_inv_beta,
    )
}

/// `(d rho)^2 / rho_ln + 2 rho_avg beta_avg (d u)^2 + rho_avg (d beta)^2 / ((gamma-1) beta_L beta_R)`
pub fn scalar_entropy_quadratic(left: &PrimState, right: &PrimState, gas: &GasModel) -> f64 {
    let d_rho = right.rho - left.rho;
    let d_u = right.u - left.u;
    let d_beta = right.beta() - left.beta();
    let rho = avg(left.rho, right.rho);
    d_rho * d_rho / log_mean_pos(left.rho, right.rho)
        + 2.0 * rho * avg(left.beta(), right.beta()) * d_u * d_u
        + rho * d_beta * d_beta / ((gas.gamma - 1.0) * left.beta() * right.beta())
}

/// Pressure sensor `|p- - 2p + p+| / |p- + 2p + p+|` of one cell.
#[inline]
pub fn pressure_sensor(p_minus: f64, p: f64, p_plus: f64) -> f64 {
    (p_minus - 2.0 * p + p_plus).abs() / (p_minus + 2.0 * p + p_plus).abs()
}

/// JST coefficients `(eps2, eps4)` from a face sensor value.
#[inline]
pub fn jst_coefficients(nu_face: f64, kappa2: f64, kappa4: f64) -> (f64, f64) {
    let eps2 = (kappa2 * nu_face).min(1.0);
    (eps2, (kappa4 - eps2).max(0.0))
}

/// Face coefficients from the pressures of cells `j-1, j, j+1, j+2`.
pub fn jst_switches(p: [f64; 4], kappa2: f64, kappa4: f64) -> (f64, f64) {
    let nu = pressure_sensor(p[0], p[1], p[2]).max(pressure_sensor(p[1], p[2], p[3]));
    jst_coefficients(nu, kappa2, kappa4)
}

/// Blended JST dissipation `-1/2 lambda D~` for the face between
/// `stencil[1]` and `stencil[2]`.
pub fn jst_dissipation(stencil: &[PrimState; 4], gas: &GasModel, spec: &ScalarDissipation) -> FluxVector {
    let (eps2, eps4) = jst_switches(stencil.map(|q| q.p), spec.kappa2, spec.kappa4);
    jst_dissipation_with(stencil, gas, spec, eps2, eps4)
}

/// [`jst_dissipation`] with externally supplied switch values.
pub fn jst_dissipation_with(
    stencil: &[PrimState; 4],
    gas: &GasModel,
    spec: &ScalarDissipation,
    eps2: f64,
    eps4: f64,
) -> FluxVector {
    let blend = |f: fn(&PrimState) -> f64| {
        let [a, b, c, d] = stencil.map(|q| f(&q));
        eps2 * (c - b) - eps4 * (d - 3.0 * c + 3.0 * b - a)
    };
    let (left, right) = (&stencil[1], &stencil[2]);
    let d =
        assemble_d(left, right, gas, spec.beta_average, blend(|q| q.rho), blend(|q| q.u), blend(|q| 1.0 / q.beta()));
    -0.5 * scalar_wave_speed(left, right, gas, spec.beta_average) * d
}

// ---------------------------------------------------------------------------
// matrix dissipation
// ---------------------------------------------------------------------------

/// Face state used to build the eigenvector matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FaceAverage {
    pub rho: f64,
    pub u: f64,
    pub a: f64,
    pub h: f64,
}

impl FaceAverage {
    /// Face state with enthalpy `a^2/(gamma-1) + u^2/2`.
    pub fn new(rho: f64, u: f64, a: f64, gas: &GasModel) -> Self {
        FaceAverage { rho, u, a, h: a * a / (gas.gamma - 1.0) + 0.5 * u * u }
    }
}

/// Face average paired with `flux`: arithmetic velocity always; density and
/// the `beta` average inside `a = sqrt(gamma / (2 beta))` logarithmic for the
/// entropy-conservative fluxes and arithmetic otherwise.
pub fn face_average(left: &PrimState, right: &PrimState, gas: &GasModel, flux: CentralFlux) -> FaceAverage {
    let (rho, beta) = if flux.uses_log_averages() {
        (log_mean_pos(left.rho, right.rho), log_mean_pos(left.beta(), right.beta()))
    } else {
        (avg(left.rho, right.rho), avg(left.beta(), right.beta()))
    };
    FaceAverage::new(rho, avg(left.u, right.u), (gas.gamma / (2.0 * beta)).sqrt(), gas)
}

/// Right eigenvectors (columns ordered `u-a, u, u+a`) and scaling `S`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenSystem {
    pub r: Mat3,
    pub s: [f64; 3],
}

pub fn eigen_system(face: &FaceAverage, gas: &GasModel) -> EigenSystem {
    let g = gas.gamma;
    let FaceAverage { rho, u, a, h } = *face;
    EigenSystem {
        r: [[1.0, 1.0, 1.0], [u - a, u, u + a], [h - u * a, 0.5 * u * u, h + u * a]],
        s: [rho / (2.0 * g), (g - 1.0) * rho / g, rho / (2.0 * g)],
    }
}

impl EigenSystem {
    /// `R diag(lambda) S R^T`.
    pub fn assemble(&self, lambda: [f64; 3]) -> Mat3 {
        let mut q = [[0.0; 3]; 3];
        for k in 0..3 {
            let w = lambda[k] * self.s[k];
            for i in 0..3 {
                for j in 0..3 {
                    q[i][j] += self.r[i][k] * w * self.r[j][k];
                }
            }
        }
        q
    }
}

/// Pressure switch `phi = |dp / (2 p_avg)|^(1/2)`, clipped to `[0, 1]`.
pub fn hybrid_switch(left: &PrimState, right: &PrimState) -> f64 {
    ((right.p - left.p) / (left.p + right.p)).abs().sqrt().min(1.0)
}

/// Absolute eigenvalues `|Lambda|` for `law` at the given face state.
pub fn eigenvalue_law(
    face: &FaceAverage,
    left: &PrimState,
    right: &PrimState,
    gas: &GasModel,
    law: EigenLaw,
) -> [f64; 3] {
    let (u, a) = (face.u, face.a);
    let roe = [(u - a).abs(), u.abs(), (u + a).abs()];
    let max = u.abs() + a;
    match law {
        EigenLaw::Roe => roe,
        EigenLaw::Ec1 { beta } => {
            let (al, ar) = (left.sound_speed(gas), right.sound_speed(gas));
            let d1 = (right.u - ar) - (left.u - al);
            let d3 = (right.u + ar) - (left.u + al);
            [roe[0] + beta * d1.abs(), roe[1], roe[2] + beta * d3.abs()]
        }
        EigenLaw::Kes => [max, u.abs(), max],
        EigenLaw::Rusanov => [max; 3],
        EigenLaw::Hybrid => {
            let phi = hybrid_switch(left, right);
            roe.map(|l| (1.0 - phi) * l + phi * max)
        }
    }
}

/// Dissipation matrix `Q = R |Lambda| S R^T` for one face.
pub fn dissipation_matrix(
    left: &PrimState,
    right: &PrimState,
    gas: &GasModel,
    law: EigenLaw,
    flux: CentralFlux,
) -> Mat3 {
    let face = face_average(left, right, gas, flux);
    let lambda = eigenvalue_law(&face, left, right, gas, law);
    eigen_system(&face, gas).assemble(lambda)
}

pub fn mat_vec(m: &Mat3, x: [f64; 3]) -> [f64; 3] {
    [0, 1, 2].map(|i| m[i][0] * x[0] + m[i][1] * x[1] + m[i][2] * x[2])
}

/// Matrix dissipation correction `-1/2 Q dv`.
pub fn matrix_dissipation(
    left: &PrimState,
    right: &PrimState,
    gas: &GasModel,
    law: EigenLaw,
    flux: CentralFlux,
) -> FluxVector {
    let q = dissipation_matrix(left, right, gas, law, flux);
    let dv = (right.entropy_vars(gas) - left.entropy_vars(gas)).to_array();
    -0.5 * FluxVector::from_array(mat_vec(&q, dv))
}
