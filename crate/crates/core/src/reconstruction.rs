//! Interface states from first-order or limited MUSCL reconstruction of the
//! primitive variables `(rho, u, p)`.

use crate::thermo::PrimState;

/// Regularisation of the van Albada limiter, scaled by the squared pressure
/// level of the stencil.
pub const VAN_ALBADA_EPS: f64 = 1.0e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Limiter {
    Minmod,
    VanAlbada,
    /// Unlimited central slope.
    None,
}

impl Limiter {
    pub fn name(self) -> &'static str {
        match self {
            Limiter::Minmod => "minmod",
            Limiter::VanAlbada => "van_albada",
            Limiter::None => "none",
        }
    }

    fn slope(self, a: f64, b: f64, eps: f64) -> f64 {
        match self {
            Limiter::Minmod => minmod(a, b),
            Limiter::VanAlbada => van_albada(a, b, eps),
            Limiter::None => 0.5 * (a + b),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ReconSpec {
    pub order: u8,
    pub limiter: Limiter,
}

impl Default for ReconSpec {
    fn default() -> Self {
        ReconSpec::FIRST_ORDER
    }
}

impl ReconSpec {
    pub const FIRST_ORDER: ReconSpec = ReconSpec { order: 1, limiter: Limiter::Minmod };

    pub fn muscl(limiter: Limiter) -> Self {
        ReconSpec { order: 2, limiter }
    }
}

pub fn minmod(a: f64, b: f64) -> f64 {
    if a * b <= 0.0 {
        0.0
    } else if a.abs() < b.abs() {
        a
    } else {
        b
    }
}

/// `(a^2 b + b^2 a + eps (a + b)) / (a^2 + b^2 + 2 eps)`, zero on sign disagreement.
pub fn van_albada(a: f64, b: f64, eps: f64) -> f64 {
    if a * b <= 0.0 {
        return 0.0;
    }
    (a * a * b + b * b * a + eps * (a + b)) / (a * a + b * b + 2.0 * eps)
}

/// Left and right states at the face between `stencil[1]` and `stencil[2]`.
///
/// Falls back to the cell values whenever a reconstructed density or
/// pressure would not be positive.
pub fn reconstruct_face(stencil: &[PrimState; 4], spec: &ReconSpec) -> (PrimState, PrimState) {
    let (qj, qk) = (stencil[1], stencil[2]);
    if spec.order < 2 {
        return (qj, qk);
    }
    let p_ref = stencil.iter().map(|q| q.p).fold(0.0, f64::max);
    let eps = VAN_ALBADA_EPS * p_ref * p_ref;
    let limited = |f: fn(&PrimState) -> f64, i: usize| {
        let (a, b, c) = (f(&stencil[i - 1]), f(&stencil[i]), f(&stencil[i + 1]));
        spec.limiter.slope(b - a, c - b, eps)
    };
    let slopes = |i: usize| [limited(|q| q.rho, i), limited(|q| q.u, i), limited(|q| q.p, i)];
    let (sj, sk) = (slopes(1), slopes(2));
    let left = PrimState::new(qj.rho + 0.5 * sj[0], qj.u + 0.5 * sj[1], qj.p + 0.5 * sj[2]);
    let right = PrimState::new(qk.rho - 0.5 * sk[0], qk.u - 0.5 * sk[1], qk.p - 0.5 * sk[2]);
    if left.is_valid() && right.is_valid() {
        (left, right)
    } else {
        (qj, qk)
    }
}
