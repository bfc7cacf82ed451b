//! Two-dimensional face kernels: the kinetic-energy-preserving
//! entropy-conservative flux in the direction of a face normal and the
//! ingredients of its matrix dissipation.

use crate::dissipation1d::EigenLaw;
use crate::error::{Result, SolverError};
use crate::thermo::{avg, log_mean_pos, GasModel, PrimState};

pub type Flux2D = [f64; 4];
pub type Mat4 = [[f64; 4]; 4];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrimState2D {
    pub rho: f64,
    pub u1: f64,
    pub u2: f64,
    pub p: f64,
}

impl PrimState2D {
    pub const fn new(rho: f64, u1: f64, u2: f64, p: f64) -> Self {
        PrimState2D { rho, u1, u2, p }
    }

    pub fn is_valid(&self) -> bool {
        self.rho > 0.0 && self.p > 0.0 && self.u1.is_finite() && self.u2.is_finite()
    }

    pub fn speed2(&self) -> f64 {
        self.u1 * self.u1 + self.u2 * self.u2
    }

    pub fn normal_velocity(&self, n: &FaceNormal) -> f64 {
        self.u1 * n.n1 + self.u2 * n.n2
    }

    pub fn beta(&self) -> f64 {
        self.rho / (2.0 * self.p)
    }

    pub fn entropy(&self, gas: &GasModel) -> f64 {
        self.p.ln() - gas.gamma * self.rho.ln()
    }

    pub fn sound_speed(&self, gas: &GasModel) -> f64 {
        (gas.gamma * self.p / self.rho).sqrt()
    }

    pub fn to_cons(&self, gas: &GasModel) -> [f64; 4] {
        [self.rho, self.rho * self.u1, self.rho * self.u2, self.p / (gas.gamma - 1.0) + 0.5 * self.rho * self.speed2()]
    }

    /// `[(gamma - s)/(gamma - 1) - beta |u|^2, 2 beta u1, 2 beta u2, -2 beta]`
    pub fn entropy_vars(&self, gas: &GasModel) -> [f64; 4] {
        let g = gas.gamma;
        let b = self.beta();
        [(g - self.entropy(gas)) / (g - 1.0) - b * self.speed2(), 2.0 * b * self.u1, 2.0 * b * self.u2, -2.0 * b]
    }

    /// Exact flux in direction `n`.
    pub fn euler_flux(&self, n: &FaceNormal, gas: &GasModel) -> Flux2D {
        let un = self.normal_velocity(n);
        let e = self.to_cons(gas)[3];
        [
            self.rho * un,
            self.rho * self.u1 * un + self.p * n.n1,
            self.rho * self.u2 * un + self.p * n.n2,
            (e + self.p) * un,
        ]
    }

    /// Entropy flux potential `rho u . n`.
    pub fn psi(&self, n: &FaceNormal) -> f64 {
        self.rho * self.normal_velocity(n)
    }

    /// 1-D state along `x` (drops `u2`).
    pub fn to_1d(&self) -> PrimState {
        PrimState::new(self.rho, self.u1, self.p)
    }

    pub fn rotated(&self, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        PrimState2D::new(self.rho, c * self.u1 - s * self.u2, s * self.u1 + c * self.u2, self.p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FaceNormal {
    pub n1: f64,
    pub n2: f64,
}

impl FaceNormal {
    pub const X: FaceNormal = FaceNormal { n1: 1.0, n2: 0.0 };

    pub fn new(n1: f64, n2: f64) -> Result<Self> {
        if ((n1 * n1 + n2 * n2) - 1.0).abs() > 1e-14 {
            return Err(SolverError::parameter("normal", format!("({n1}, {n2}) is not a unit vector")));
        }
        Ok(FaceNormal { n1, n2 })
    }

    pub fn from_angle(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        FaceNormal { n1: c, n2: s }
    }

    pub fn rotated(&self, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        FaceNormal { n1: c * self.n1 - s * self.n2, n2: s * self.n1 + c * self.n2 }
    }
}

/// Entropy-conservative KEP flux through a face with unit normal `n`.
pub fn flux_kepec_2d(left: &PrimState2D, right: &PrimState2D, n: &FaceNormal, gas: &GasModel) -> Flux2D {
    let (u1, u2) = (avg(left.u1, right.u1), avg(left.u2, right.u2));
    let mass = log_mean_pos(left.rho, right.rho) * (u1 * n.n1 + u2 * n.n2);
    let p = avg(left.rho, right.rho) / (2.0 * avg(left.beta(), right.beta()));
    let m1 = p * n.n1 + u1 * mass;
    let m2 = p * n.n2 + u2 * mass;
    let beta = log_mean_pos(left.beta(), right.beta());
    let energy =
        (1.0 / (2.0 * (gas.gamma - 1.0) * beta) - 0.5 * avg(left.speed2(), right.speed2())) * mass + u1 * m1 + u2 * m2;
    [mass, m1, m2, energy]
}

/// `dv . f - d psi_n`
pub fn tadmor_residual_2d(left: &PrimState2D, right: &PrimState2D, n: &FaceNormal, gas: &GasModel, f: &Flux2D) -> f64 {
    let (vl, vr) = (left.entropy_vars(gas), right.entropy_vars(gas));
    (0..4).map(|k| (vr[k] - vl[k]) * f[k]).sum::<f64>() - (right.psi(n) - left.psi(n))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FaceAverage2D {
    pub rho: f64,
    pub u1: f64,
    pub u2: f64,
    pub a: f64,
    pub h: f64,
}

impl FaceAverage2D {
    /// Face state with `H = a^2/(gamma-1) + |u|^2/2`.
    pub fn new(rho: f64, u1: f64, u2: f64, a: f64, gas: &GasModel) -> Self {
        FaceAverage2D { rho, u1, u2, a, h: a * a / (gas.gamma - 1.0) + 0.5 * (u1 * u1 + u2 * u2) }
    }

    /// Pointwise state, for which `R S R^T` is the exact Jacobian.
    pub fn from_state(q: &PrimState2D, gas: &GasModel) -> Self {
        FaceAverage2D::new(q.rho, q.u1, q.u2, q.sound_speed(gas), gas)
    }
}

/// Logarithmic density and `beta` means, arithmetic velocity.
pub fn face_average_2d(left: &PrimState2D, right: &PrimState2D, gas: &GasModel) -> FaceAverage2D {
    let beta = log_mean_pos(left.beta(), right.beta());
    FaceAverage2D::new(
        log_mean_pos(left.rho, right.rho),
        avg(left.u1, right.u1),
        avg(left.u2, right.u2),
        (gas.gamma / (2.0 * beta)).sqrt(),
        gas,
    )
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenSystem2D {
    pub r: Mat4,
    pub s: [f64; 4],
}

impl EigenSystem2D {
    /// `R diag(lambda) S R^T`.
    pub fn assemble(&self, lambda: [f64; 4]) -> Mat4 {
        let mut q = [[0.0; 4]; 4];
        for k in 0..4 {
            let w = lambda[k] * self.s[k];
            for i in 0..4 {
                for j in 0..4 {
                    q[i][j] += self.r[i][k] * w * self.r[j][k];
                }
            }
        }
        q
    }
}

/// Eigenvectors (columns `u.n - a`, entropy, shear, `u.n + a`) and scaling
/// `diag[rho/2gamma, (gamma-1) rho/gamma, p, rho/2gamma]` with `p = rho a^2 / gamma`.
pub fn eigen_system_2d(face: &FaceAverage2D, n: &FaceNormal, gas: &GasModel) -> EigenSystem2D {
    let g = gas.gamma;
    let FaceAverage2D { rho, u1, u2, a, h } = *face;
    let un = u1 * n.n1 + u2 * n.n2;
    let p = rho * a * a / g;
    EigenSystem2D {
        r: [
            [1.0, 1.0, 0.0, 1.0],
            [u1 - a * n.n1, u1, n.n2, u1 + a * n.n1],
            [u2 - a * n.n2, u2, -n.n1, u2 + a * n.n2],
            [h - a * un, 0.5 * (u1 * u1 + u2 * u2), u1 * n.n2 - u2 * n.n1, h + a * un],
        ],
        s: [rho / (2.0 * g), (g - 1.0) * rho / g, p, rho / (2.0 * g)],
    }
}

/// `|Lambda|` for `law`; the shear mode shares the entropy-wave eigenvalue.
pub fn eigenvalue_law_2d(
    face: &FaceAverage2D,
    left: &PrimState2D,
    right: &PrimState2D,
    n: &FaceNormal,
    gas: &GasModel,
    law: EigenLaw,
) -> [f64; 4] {
    let un = face.u1 * n.n1 + face.u2 * n.n2;
    let a = face.a;
    let roe = [(un - a).abs(), un.abs(), un.abs(), (un + a).abs()];
    let max = un.abs() + a;
    match law {
        EigenLaw::Roe => roe,
        EigenLaw::Ec1 { beta } => {
            let (ul, ur) = (left.normal_velocity(n), right.normal_velocity(n));
            let (al, ar) = (left.sound_speed(gas), right.sound_speed(gas));
            let d1 = (ur - ar) - (ul - al);
            let d3 = (ur + ar) - (ul + al);
            [roe[0] + beta * d1.abs(), roe[1], roe[2], roe[3] + beta * d3.abs()]
        }
        EigenLaw::Kes => [max, un.abs(), un.abs(), max],
        EigenLaw::Rusanov => [max; 4],
        EigenLaw::Hybrid => {
            let phi = ((right.p - left.p) / (left.p + right.p)).abs().sqrt().min(1.0);
            roe.map(|l| (1.0 - phi) * l + phi * max)
        }
    }
}

pub fn dissipation_matrix_2d(
    left: &PrimState2D,
    right: &PrimState2D,
    n: &FaceNormal,
    gas: &GasModel,
    law: EigenLaw,
) -> Mat4 {
    let face = face_average_2d(left, right, gas);
    eigen_system_2d(&face, n, gas).assemble(eigenvalue_law_2d(&face, left, right, n, gas, law))
}

/// Matrix dissipation correction `-1/2 Q dv`.
pub fn matrix_dissipation_2d(
    left: &PrimState2D,
    right: &PrimState2D,
    n: &FaceNormal,
    gas: &GasModel,
    law: EigenLaw,
) -> Flux2D {
    let q = dissipation_matrix_2d(left, right, n, gas, law);
    let (vl, vr) = (left.entropy_vars(gas), right.entropy_vars(gas));
    let dv: [f64; 4] = [0, 1, 2, 3].map(|k| vr[k] - vl[k]);
    [0, 1, 2, 3].map(|i| -0.5 * (0..4).map(|j| q[i][j] * dv[j]).sum::<f64>())
}

/// Entropy-stable face flux `f* - 1/2 Q dv`.
pub fn flux_kepes_2d(left: &PrimState2D, right: &PrimState2D, n: &FaceNormal, gas: &GasModel, law: EigenLaw) -> Flux2D {
    let f = flux_kepec_2d(left, right, n, gas);
    let d = matrix_dissipation_2d(left, right, n, gas, law);
    [0, 1, 2, 3].map(|k| f[k] + d[k])
}

/// Rotating both velocities and the normal by `angle` must rotate the
/// momentum-flux pair and leave the mass and energy fluxes unchanged.
pub fn rotation_covariance_check(
    left: &PrimState2D,
    right: &PrimState2D,
    n: &FaceNormal,
    angle: f64,
    gas: &GasModel,
) -> bool {
    let base = flux_kepec_2d(left, right, n, gas);
    let rot = flux_kepec_2d(&left.rotated(angle), &right.rotated(angle), &n.rotated(angle), gas);
    let (s, c) = angle.sin_cos();
    let expected = [base[0], c * base[1] - s * base[2], s * base[1] + c * base[2], base[3]];
    let scale = base.iter().fold(1.0, |m: f64, v| m.max(v.abs()));
    expected.iter().zip(&rot).all(|(e, r)| (e - r).abs() <= 1e-12 * scale)
}
