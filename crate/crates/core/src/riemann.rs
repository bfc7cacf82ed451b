//! Exact solution of the Riemann problem for an ideal gas, used as the
//! reference profile for shock-tube metrics.

use crate::error::{Result, SolverError};
use crate::thermo::PrimState;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExactRiemann {
    pub left: PrimState,
    pub right: PrimState,
    pub gamma: f64,
    pub p_star: f64,
    pub u_star: f64,
}

/// Left-going or right-going wave.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Wave {
    Shock { speed: f64 },
    Rarefaction { head: f64, tail: f64 },
}

impl ExactRiemann {
    pub fn new(left: PrimState, right: PrimState, gamma: f64) -> Result<Self> {
        let (al, ar) = (sound(&left, gamma), sound(&right, gamma));
        let g = gamma;
        if 2.0 / (g - 1.0) * (al + ar) <= right.u - left.u {
            return Err(SolverError::parameter("riemann", "initial data generate a vacuum"));
        }
        let f = |p: f64| pressure_fn(p, &left, g).0 + pressure_fn(p, &right, g).0 + right.u - left.u;
        let df = |p: f64| pressure_fn(p, &left, g).1 + pressure_fn(p, &right, g).1;
        // two-rarefaction guess, then Newton
        let z = (g - 1.0) / (2.0 * g);
        let guess = ((al + ar - 0.5 * (g - 1.0) * (right.u - left.u)) / (al / left.p.powf(z) + ar / right.p.powf(z)))
            .powf(1.0 / z);
        let mut p = guess.max(1e-10);
        for _ in 0..100 {
            let next = (p - f(p) / df(p)).max(1e-12);
            let change = 2.0 * (next - p).abs() / (next + p);
            p = next;
            if change < 1e-14 {
                break;
            }
        }
        let u = 0.5 * (left.u + right.u) + 0.5 * (pressure_fn(p, &right, g).0 - pressure_fn(p, &left, g).0);
        Ok(ExactRiemann { left, right, gamma, p_star: p, u_star: u })
    }

    pub fn left_wave(&self) -> Wave {
        self.wave(&self.left, -1.0)
    }

    pub fn right_wave(&self) -> Wave {
        self.wave(&self.right, 1.0)
    }

    /// Density on the given side of the contact.
    pub fn star_density(&self, left_side: bool) -> f64 {
        let (q, g) = (if left_side { &self.left } else { &self.right }, self.gamma);
        let r = self.p_star / q.p;
        if r > 1.0 {
            let k = (g - 1.0) / (g + 1.0);
            q.rho * (r + k) / (k * r + 1.0)
        } else {
            q.rho * r.powf(1.0 / g)
        }
    }

    fn wave(&self, q: &PrimState, side: f64) -> Wave {
        let g = self.gamma;
        let a = sound(q, g);
        if self.p_star > q.p {
            let m = ((g + 1.0) / (2.0 * g) * self.p_star / q.p + (g - 1.0) / (2.0 * g)).sqrt();
            Wave::Shock { speed: q.u + side * a * m }
        } else {
            let a_star = a * (self.p_star / q.p).powf((g - 1.0) / (2.0 * g));
            Wave::Rarefaction { head: q.u + side * a, tail: self.u_star + side * a_star }
        }
    }

    /// State at similarity coordinate `xi = (x - x0) / t`.
    pub fn sample(&self, xi: f64) -> PrimState {
        let g = self.gamma;
        let left_side = xi < self.u_star;
        let (q, side, wave) =
            if left_side { (self.left, -1.0, self.left_wave()) } else { (self.right, 1.0, self.right_wave()) };
        let star = PrimState::new(self.star_density(left_side), self.u_star, self.p_star);
        match wave {
            Wave::Shock { speed } => {
                if side * (xi - speed) > 0.0 {
                    q
                } else {
                    star
                }
            }
            Wave::Rarefaction { head, tail } => {
                if side * (xi - head) > 0.0 {
                    q
                } else if side * (xi - tail) < 0.0 {
                    star
                } else {
                    let a = sound(&q, g);
                    let c = 2.0 / (g + 1.0) - side * (g - 1.0) / ((g + 1.0) * a) * (q.u - xi);
                    let rho = q.rho * c.powf(2.0 / (g - 1.0));
                    let u = 2.0 / (g + 1.0) * (-side * a + 0.5 * (g - 1.0) * q.u + xi);
                    PrimState::new(rho, u, q.p * c.powf(2.0 * g / (g - 1.0)))
                }
            }
        }
    }

    /// Cell-centre samples at time `t` for a discontinuity initially at `x0`.
    pub fn profile(&self, x: &[f64], x0: f64, t: f64) -> Vec<PrimState> {
        x.iter().map(|&x| self.sample((x - x0) / t)).collect()
    }
}

fn sound(q: &PrimState, gamma: f64) -> f64 {
    (gamma * q.p / q.rho).sqrt()
}

/// Wave function `f_K(p)` and its derivative.
fn pressure_fn(p: f64, q: &PrimState, g: f64) -> (f64, f64) {
    let a = sound(q, g);
    if p > q.p {
        let (ak, bk) = (2.0 / ((g + 1.0) * q.rho), (g - 1.0) / (g + 1.0) * q.p);
        let s = (ak / (p + bk)).sqrt();
        ((p - q.p) * s, s * (1.0 - 0.5 * (p - q.p) / (p + bk)))
    } else {
        let r = p / q.p;
        let f = 2.0 * a / (g - 1.0) * (r.powf((g - 1.0) / (2.0 * g)) - 1.0);
        (f, r.powf(-(g + 1.0) / (2.0 * g)) / (q.rho * a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn sod() -> ExactRiemann {
        ExactRiemann::new(PrimState::new(1.0, 0.0, 1.0), PrimState::new(0.125, 0.0, 0.1), 1.4).unwrap()
    }

    #[test]
    fn sod_star_state() {
        // reference star values for the standard Sod problem
        let s = sod();
        assert_relative_eq!(s.p_star, 0.30313, max_relative = 1e-4);
        assert_relative_eq!(s.u_star, 0.92745, max_relative = 1e-4);
        assert_relative_eq!(s.star_density(true), 0.42632, max_relative = 1e-4);
        assert_relative_eq!(s.star_density(false), 0.26557, max_relative = 1e-4);
        match s.right_wave() {
            Wave::Shock { speed } => assert_relative_eq!(speed, 1.75216, max_relative = 1e-4),
            w => panic!("{w:?}"),
        }
    }

    #[test]
    fn star_state_satisfies_shock_relations() {
        // Rankine-Hugoniot mass and momentum across the right shock
        let s = sod();
        let Wave::Shock { speed } = s.right_wave() else { panic!() };
        let (r, rs) = (s.right, s.star_density(false));
        assert_relative_eq!(rs * (s.u_star - speed), r.rho * (r.u - speed), max_relative = 1e-10);
        let mom = |rho: f64, u: f64, p: f64| rho * u * (u - speed) + p;
        assert_relative_eq!(mom(rs, s.u_star, s.p_star), mom(r.rho, r.u, r.p), max_relative = 1e-10);
    }

    #[test]
    fn rarefaction_is_continuous() {
        let s = sod();
        let Wave::Rarefaction { head, tail } = s.left_wave() else { panic!() };
        for xi in [head, tail] {
            let (a, b) = (s.sample(xi - 1e-9), s.sample(xi + 1e-9));
            assert!((a.rho - b.rho).abs() < 1e-6 && (a.u - b.u).abs() < 1e-6 && (a.p - b.p).abs() < 1e-6);
        }
    }

    #[test]
    fn trivial_problem() {
        let q = PrimState::new(1.0, 0.3, 1.0);
        let s = ExactRiemann::new(q, q, 1.4).unwrap();
        assert_relative_eq!(s.p_star, 1.0, max_relative = 1e-12);
        assert_relative_eq!(s.sample(0.1).rho, 1.0, max_relative = 1e-12);
    }

    #[test]
    fn vacuum_is_rejected() {
        assert!(ExactRiemann::new(PrimState::new(1.0, -10.0, 0.1), PrimState::new(1.0, 10.0, 0.1), 1.4).is_err());
    }
}
