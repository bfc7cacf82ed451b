//! Kinetic-energy and entropy budgets of the semi-discrete scheme, and
//! solution-quality metrics for discontinuous profiles.

use std::io::Write;

use crate::error::Result;
use crate::riemann::{ExactRiemann, Wave};
use crate::spatial::{FaceData, SpatialOperator};
use crate::thermo::{avg, ConsState, GasModel, PrimState};

/// Budget tolerance used for the closure checks.
pub const CLOSURE_TOL: f64 = 1e-10;

/// Time derivatives of total kinetic energy and total entropy `U`, each
/// evaluated directly from the residual and decomposed face by face.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BudgetReport {
    pub time: f64,
    pub total_ke: f64,
    pub total_entropy: f64,
    pub dke_dt: f64,
    pub dke_dt_pressure_work: f64,
    pub dke_dt_dissipation: f64,
    pub dke_dt_viscous: f64,
    pub dke_dt_boundary: f64,
    pub du_dt: f64,
    pub du_dt_central: f64,
    pub du_dt_numerical: f64,
    pub du_dt_viscous: f64,
    pub du_dt_boundary: f64,
    pub conservation_errors: [f64; 3],
}

impl BudgetReport {
    pub const CSV_HEADER: [&'static str; 16] = [
        "time",
        "total_ke",
        "total_entropy",
        "dke_dt",
        "dke_dt_pressure_work",
        "dke_dt_dissipation",
        "dke_dt_viscous",
        "dke_dt_boundary",
        "du_dt",
        "du_dt_central",
        "du_dt_numerical",
        "du_dt_viscous",
        "du_dt_boundary",
        "conservation_error_mass",
        "conservation_error_momentum",
        "conservation_error_energy",
    ];

    pub fn csv_row(&self) -> [f64; 16] {
        let c = self.conservation_errors;
        [
            self.time,
            self.total_ke,
            self.total_entropy,
            self.dke_dt,
            self.dke_dt_pressure_work,
            self.dke_dt_dissipation,
            self.dke_dt_viscous,
            self.dke_dt_boundary,
            self.du_dt,
            self.du_dt_central,
            self.du_dt_numerical,
            self.du_dt_viscous,
            self.du_dt_boundary,
            c[0],
            c[1],
            c[2],
        ]
    }

    /// Direct KE rate minus the sum of its face terms.
    pub fn ke_closure(&self) -> f64 {
        self.dke_dt - (self.dke_dt_pressure_work + self.dke_dt_dissipation + self.dke_dt_viscous + self.dke_dt_boundary)
    }

    /// Direct entropy rate minus the sum of its face terms.
    pub fn entropy_closure(&self) -> f64 {
        self.du_dt - (self.du_dt_central + self.du_dt_numerical + self.du_dt_viscous + self.du_dt_boundary)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct KeBudget {
    pub direct: f64,
    pub pressure_work: f64,
    pub dissipation: f64,
    pub viscous: f64,
    pub boundary: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct EntropyBudget {
    pub direct: f64,
    /// `sum (dv . f_c - d psi)`, zero for an entropy-conservative flux.
    pub central: f64,
    pub numerical: f64,
    pub viscous: f64,
    pub boundary: f64,
}

/// Interior faces as `(face index, left cell, right cell)`; the periodic
/// wrap face is face 0.
fn interior_faces(n: usize, periodic: bool) -> impl Iterator<Item = (usize, usize, usize)> {
    let first = if periodic { 0 } else { 1 };
    (first..n).map(move |k| (k, (k + n - 1) % n, k))
}

pub fn ke_budget(data: &FaceData, rhs: &[ConsState], dx: f64, periodic: bool) -> KeBudget {
    let q = &data.prims;
    let n = q.len();
    let weight = |p: &PrimState| [-0.5 * p.u * p.u, p.u, 0.0];
    let dot = |a: [f64; 3], f: [f64; 3]| a[0] * f[0] + a[1] * f[1] + a[2] * f[2];
    let direct = q.iter().zip(rhs).map(|(p, r)| dot(weight(p), r.to_array()) * dx).sum();
    let mut b = KeBudget { direct, ..Default::default() };
    for (k, l, r) in interior_faces(n, periodic) {
        let (du, u) = (q[r].u - q[l].u, avg(q[l].u, q[r].u));
        let f = &data.faces[k];
        b.pressure_work += du * (f.central.momentum - u * f.central.mass);
        b.dissipation += du * (f.dissipation.momentum - u * f.dissipation.mass);
        b.viscous -= du * (f.viscous.momentum - u * f.viscous.mass);
    }
    if !periodic {
        b.boundary =
            dot(weight(&q[0]), data.faces[0].net().to_array()) - dot(weight(&q[n - 1]), data.faces[n].net().to_array());
    }
    b
}

pub fn entropy_budget(data: &FaceData, rhs: &[ConsState], gas: &GasModel, dx: f64, periodic: bool) -> EntropyBudget {
    let q = &data.prims;
    let n = q.len();
    let v: Vec<_> = q.iter().map(|p| p.entropy_vars(gas)).collect();
    let psi = |p: &PrimState| p.rho * p.u;
    let direct = v.iter().zip(rhs).map(|(v, r)| v.dot(r.to_array()) * dx).sum();
    let mut b = EntropyBudget { direct, ..Default::default() };
    for (k, l, r) in interior_faces(n, periodic) {
        let dv = v[r] - v[l];
        let f = &data.faces[k];
        b.central += dv.dot(f.central.to_array()) - (psi(&q[r]) - psi(&q[l]));
        b.numerical += dv.dot(f.dissipation.to_array());
        b.viscous -= dv.dot(f.viscous.to_array());
    }
    if !periodic {
        b.boundary = v[0].dot(data.faces[0].net().to_array()) - v[n - 1].dot(data.faces[n].net().to_array())
            + psi(&q[n - 1])
            - psi(&q[0]);
    }
    b
}

/// Full budget report for the operator at the given state.
pub fn budget(
    op: &SpatialOperator,
    cells: &[ConsState],
    time: f64,
    conservation_errors: [f64; 3],
) -> Result<BudgetReport> {
    let data = op.face_fluxes(cells)?;
    let dx = op.grid.dx;
    let rhs = data.rhs(dx);
    let periodic = op.bcs.is_periodic();
    let ke = ke_budget(&data, &rhs, dx, periodic);
    let s = entropy_budget(&data, &rhs, &op.gas, dx, periodic);
    let total_ke = data.prims.iter().map(|q| 0.5 * q.rho * q.u * q.u).sum::<f64>() * dx;
    let total_entropy = data.prims.iter().map(|q| q.entropy_pair(&op.gas).0).sum::<f64>() * dx;
    Ok(BudgetReport {
        time,
        total_ke,
        total_entropy,
        dke_dt: ke.direct,
        dke_dt_pressure_work: ke.pressure_work,
        dke_dt_dissipation: ke.dissipation,
        dke_dt_viscous: ke.viscous,
        dke_dt_boundary: ke.boundary,
        du_dt: s.direct,
        du_dt_central: s.central,
        du_dt_numerical: s.numerical,
        du_dt_viscous: s.viscous,
        du_dt_boundary: s.boundary,
        conservation_errors,
    })
}

/// Per-cell numerical entropy production: half of each adjacent face's
/// `dv . d` (for matrix dissipation `-1/4 (dv^T Q dv)` summed over both faces).
pub fn cell_entropy_production(data: &FaceData, gas: &GasModel, periodic: bool) -> Vec<f64> {
    let q = &data.prims;
    let n = q.len();
    let mut out = vec![0.0; n];
    for (k, l, r) in interior_faces(n, periodic) {
        let dv = q[r].entropy_vars(gas) - q[l].entropy_vars(gas);
        let s = dv.dot(data.faces[k].dissipation.to_array());
        out[l] += 0.5 * s;
        out[r] += 0.5 * s;
    }
    out
}

pub fn write_budget_csv<W: Write>(out: W, rows: &[BudgetReport]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(BudgetReport::CSV_HEADER)?;
    for r in rows {
        w.write_record(r.csv_row().iter().map(|v| format!("{v:e}")))?;
    }
    w.flush()?;
    Ok(())
}

// ---------------------------------------------------------------------------
// solution metrics
// ---------------------------------------------------------------------------

/// Number of cells whose value lies strictly between the 10% and 90% levels
/// of the jump from `before` to `after`.
pub fn transition_width(values: &[f64], before: f64, after: f64) -> usize {
    let (a, b) = (before + 0.1 * (after - before), before + 0.9 * (after - before));
    let (lo, hi) = (a.min(b), a.max(b));
    values.iter().filter(|&&v| v > lo && v < hi).count()
}

/// Largest excursion above `max` or below `min`, zero if none.
pub fn overshoot(values: &[f64], min: f64, max: f64) -> f64 {
    values.iter().map(|&v| (v - max).max(min - v)).fold(0.0, f64::max)
}

/// Interior local extrema of `values`, compared with tolerance `tol`.
pub fn local_extrema(values: &[f64], tol: f64) -> usize {
    values
        .windows(3)
        .filter(|w| (w[1] > w[0] + tol && w[1] > w[2] + tol) || (w[1] < w[0] - tol && w[1] < w[2] - tol))
        .count()
}

pub fn is_monotone(values: &[f64], tol: f64) -> bool {
    let up = values.windows(2).all(|w| w[1] >= w[0] - tol);
    let down = values.windows(2).all(|w| w[1] <= w[0] + tol);
    up || down
}

pub fn l1_error(values: &[f64], reference: &[f64], dx: f64) -> f64 {
    values.iter().zip(reference).map(|(a, b)| (a - b).abs()).sum::<f64>() * dx
}

/// Largest jump between neighbouring cells with both centres in `[x_lo, x_hi]`.
pub fn max_jump_in(x: &[f64], values: &[f64], x_lo: f64, x_hi: f64) -> f64 {
    x.windows(2)
        .zip(values.windows(2))
        .filter(|(x, _)| x[0] >= x_lo && x[1] <= x_hi)
        .map(|(_, v)| (v[1] - v[0]).abs())
        .fold(0.0, f64::max)
}

/// Largest second difference `|v[j+1] - 2 v[j] + v[j-1]|` with all three
/// centres in `[x_lo, x_hi]`. Small inside a resolved smooth wave, of the
/// order of the jump where a discontinuity sits.
pub fn max_kink_in(x: &[f64], values: &[f64], x_lo: f64, x_hi: f64) -> f64 {
    x.windows(3)
        .zip(values.windows(3))
        .filter(|(x, _)| x[0] >= x_lo && x[2] <= x_hi)
        .map(|(_, v)| (v[2] - 2.0 * v[1] + v[0]).abs())
        .fold(0.0, f64::max)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolutionMetrics {
    pub overshoot: f64,
    pub new_extrema: usize,
    pub l1_error: Option<f64>,
}

/// Overshoot beyond the reference range (or the data's own end values when
/// no reference is given), interior extrema and L1 error.
pub fn solution_metrics(values: &[f64], reference: Option<&[f64]>, dx: f64) -> SolutionMetrics {
    let range = reference.unwrap_or(&[]);
    let (min, max) = if range.is_empty() {
        let (a, b) = (values[0], values[values.len() - 1]);
        (a.min(b), a.max(b))
    } else {
        (range.iter().cloned().fold(f64::INFINITY, f64::min), range.iter().cloned().fold(f64::NEG_INFINITY, f64::max))
    };
    let scale = (max - min).abs().max(f64::MIN_POSITIVE);
    SolutionMetrics {
        overshoot: overshoot(values, min, max),
        new_extrema: local_extrema(values, 1e-12 * scale),
        l1_error: reference.map(|r| l1_error(values, r, dx)),
    }
}

pub fn format_metrics(m: &SolutionMetrics) -> String {
    let l1 = m.l1_error.map_or("n/a".to_string(), |v| format!("{v:.6e}"));
    format!("overshoot {:.6e}\nnew_extrema {}\nl1_error {}\n", m.overshoot, m.new_extrema, l1)
}

/// 10-90% widths of the contact and of the right-running shock of a
/// shock-tube solution, each measured in a window around its exact position.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveWidths {
    pub contact: Option<usize>,
    pub shock: Option<usize>,
}

pub fn riemann_wave_widths(x: &[f64], rho: &[f64], exact: &ExactRiemann, x0: f64, t: f64) -> WaveWidths {
    let Wave::Shock { speed } = exact.right_wave() else {
        return WaveWidths { contact: None, shock: None };
    };
    let tail = match exact.left_wave() {
        Wave::Rarefaction { tail, .. } => tail,
        Wave::Shock { speed } => speed,
    };
    let (xt, xc, xs) = (x0 + tail * t, x0 + exact.u_star * t, x0 + speed * t);
    let split = 0.5 * (xc + xs);
    let window = |lo: f64, hi: f64| -> Vec<f64> {
        x.iter().zip(rho).filter(|(x, _)| **x > lo && **x < hi).map(|(_, r)| *r).collect()
    };
    let (rl, rr) = (exact.star_density(true), exact.star_density(false));
    WaveWidths {
        contact: Some(transition_width(&window(0.5 * (xt + xc), split), rl, rr)),
        shock: Some(transition_width(&window(split, f64::INFINITY), rr, exact.right.rho)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dissipation1d::{face_average, BetaAverage, DissipationSpec, EigenLaw, ScalarDissipation};
    use crate::flux1d::CentralFlux;
    use crate::reconstruction::{Limiter, ReconSpec};
    use crate::spatial::{BoundaryKind, BoundarySpec, Grid1D, Scheme};
    use crate::ViscosityLaw;
    use std::f64::consts::PI;

    fn field(grid: &Grid1D, gas: &GasModel, amp: f64) -> Vec<ConsState> {
        grid.centers()
            .into_iter()
            .map(|x| {
                let s = (2.0 * PI * x).sin();
                PrimState::new(1.0 + amp * s, 0.4 + amp * (2.0 * PI * x).cos(), 1.0 + 0.5 * amp * s).to_cons(gas)
            })
            .collect()
    }

    fn laws() -> Vec<DissipationSpec> {
        let mut v = vec![
            DissipationSpec::None,
            DissipationSpec::Scalar(ScalarDissipation {
                kappa2: 0.5,
                kappa4: 1.0 / 32.0,
                beta_average: BetaAverage::Logarithmic,
            }),
        ];
        v.extend(
            [EigenLaw::Roe, EigenLaw::Ec1 { beta: 1.0 / 6.0 }, EigenLaw::Kes, EigenLaw::Rusanov, EigenLaw::Hybrid]
                .map(DissipationSpec::Matrix),
        );
        v
    }

    #[test]
    fn uniform_flow_has_zero_budget() {
        let gas = GasModel::default();
        let grid = Grid1D::new(10, 0.0, 1.0).unwrap();
        let op = SpatialOperator::new(
            grid,
            gas,
            Scheme::new(CentralFlux::Kepec, DissipationSpec::Matrix(EigenLaw::Roe)),
            BoundarySpec::PERIODIC,
        )
        .unwrap();
        let b = budget(&op, &vec![PrimState::new(1.0, 0.5, 1.0).to_cons(&gas); 10], 0.0, [0.0; 3]).unwrap();
        for v in [b.dke_dt, b.dke_dt_pressure_work, b.dke_dt_dissipation, b.du_dt, b.du_dt_numerical, b.du_dt_central] {
            assert!(v.abs() < 1e-14);
        }
    }

    #[test]
    fn closure_for_every_pairing() {
        let gas = GasModel::default().with_viscosity(ViscosityLaw::Constant(2e-3), 0.72);
        let grid = Grid1D::new(24, 0.0, 1.0).unwrap();
        let cells = field(&grid, &gas, 0.3);
        let inflow = PrimState::new(1.0, 0.4, 1.0);
        let bc_sets = [
            BoundarySpec::PERIODIC,
            BoundarySpec::TRANSMISSIVE,
            BoundarySpec {
                left: BoundaryKind::FixedState(inflow),
                right: BoundaryKind::ShockOutflow { mass_flux: 0.4 },
            },
        ];
        for flux in CentralFlux::ALL {
            for diss in laws() {
                for bcs in bc_sets {
                    let scheme = Scheme::new(flux, diss).with_recon(ReconSpec::muscl(Limiter::VanAlbada));
                    let op = SpatialOperator::new(grid, gas, scheme, bcs).unwrap();
                    let b = budget(&op, &cells, 0.0, [0.0; 3]).unwrap();
                    assert!(b.ke_closure().abs() < CLOSURE_TOL, "{flux:?} {diss:?} {bcs:?}: {}", b.ke_closure());
                    assert!(
                        b.entropy_closure().abs() < CLOSURE_TOL,
                        "{flux:?} {diss:?} {bcs:?}: {}",
                        b.entropy_closure()
                    );
                }
            }
        }
    }

    #[test]
    fn kepec_is_entropy_conservative() {
        let gas = GasModel::default();
        let grid = Grid1D::new(32, 0.0, 1.0).unwrap();
        let op = SpatialOperator::new(
            grid,
            gas,
            Scheme::new(CentralFlux::Kepec, DissipationSpec::None),
            BoundarySpec::PERIODIC,
        )
        .unwrap();
        let b = budget(&op, &field(&grid, &gas, 0.3), 0.0, [0.0; 3]).unwrap();
        assert!(b.du_dt.abs() < 1e-11);
        assert!(b.du_dt_central.abs() < 1e-11);
        assert!((b.dke_dt - b.dke_dt_pressure_work).abs() < 1e-11);
    }

    #[test]
    fn kes_kinetic_energy_dissipation() {
        let gas = GasModel::default();
        let grid = Grid1D::new(32, 0.0, 1.0).unwrap();
        let op = SpatialOperator::new(
            grid,
            gas,
            Scheme::new(CentralFlux::Kepec, DissipationSpec::Matrix(EigenLaw::Kes)),
            BoundarySpec::PERIODIC,
        )
        .unwrap();
        let cells = field(&grid, &gas, 0.3);
        let b = budget(&op, &cells, 0.0, [0.0; 3]).unwrap();
        let q = op.primitives(&cells).unwrap();
        let n = q.len();
        let expected: f64 = (0..n)
            .map(|k| {
                let (l, r) = (q[(k + n - 1) % n], q[k]);
                let f = face_average(&l, &r, &gas, CentralFlux::Kepec);
                let lambda = f.u.abs() + f.a;
                -(1.0 / gas.gamma) * f.a * f.a * f.rho * avg(l.beta(), r.beta()) * lambda * (r.u - l.u).powi(2)
            })
            .sum();
        assert!((b.dke_dt_dissipation - expected).abs() < 1e-10, "{} vs {expected}", b.dke_dt_dissipation);
        assert!(expected < 0.0);
    }

    #[test]
    fn production_signs() {
        let gas = GasModel::default().with_viscosity(ViscosityLaw::Constant(1e-3), 0.72);
        let grid = Grid1D::new(32, 0.0, 1.0).unwrap();
        let cells = field(&grid, &gas, 0.4);
        for diss in laws().into_iter().skip(1) {
            let op =
                SpatialOperator::new(grid, gas, Scheme::new(CentralFlux::Kepec, diss), BoundarySpec::PERIODIC).unwrap();
            let b = budget(&op, &cells, 0.0, [0.0; 3]).unwrap();
            assert!(b.du_dt_numerical <= 1e-12, "{diss:?}");
            assert!(b.du_dt_viscous <= 0.0);
            if let DissipationSpec::Matrix(_) = diss {
                let data = op.face_fluxes(&cells).unwrap();
                let per_cell = cell_entropy_production(&data, &gas, true);
                assert!(per_cell.iter().all(|&s| s <= 1e-12));
                assert!((per_cell.iter().sum::<f64>() - b.du_dt_numerical).abs() < 1e-12);
            }
        }
        let scalar = DissipationSpec::Scalar(ScalarDissipation {
            kappa2: 1e12,
            kappa4: 0.0,
            beta_average: BetaAverage::Logarithmic,
        });
        let op =
            SpatialOperator::new(grid, gas, Scheme::new(CentralFlux::Kepec, scalar), BoundarySpec::PERIODIC).unwrap();
        assert!(budget(&op, &cells, 0.0, [0.0; 3]).unwrap().dke_dt_dissipation <= 0.0);
    }

    #[test]
    fn ac_residual_is_third_order() {
        // periodic smooth field: the AC central residual shrinks like dx^2 per face, dx^3 summed density
        let gas = GasModel::default();
        let res = |n: usize| {
            let grid = Grid1D::new(n, 0.0, 1.0).unwrap();
            let op = SpatialOperator::new(
                grid,
                gas,
                Scheme::new(CentralFlux::KepecAc, DissipationSpec::None),
                BoundarySpec::PERIODIC,
            )
            .unwrap();
            let data = op.face_fluxes(&field(&grid, &gas, 0.3)).unwrap();
            let q = &data.prims;
            (0..n)
                .map(|k| {
                    let (l, r) = (q[(k + n - 1) % n], q[k]);
                    crate::flux1d::tadmor_residual(&l, &r, &gas, data.faces[k].central).abs()
                })
                .fold(0.0, f64::max)
        };
        let slope = (res(50) / res(400)).ln() / 8f64.ln();
        assert!(slope >= 3.0 - 0.1, "slope {slope}");
    }

    #[test]
    fn metric_examples() {
        let step = [1.0, 1.0, 1.0, 0.0, 0.0];
        assert_eq!(transition_width(&step, 1.0, 0.0), 0);
        assert_eq!(overshoot(&step, 0.0, 1.0), 0.0);
        let ramp: Vec<f64> = (0..10).map(|i| i as f64).collect();
        assert_eq!(local_extrema(&ramp, 0.0), 0);
        assert!(is_monotone(&ramp, 0.0));
        assert_eq!(overshoot(&[0.0, 1.2, 1.0], 0.0, 1.0), 0.19999999999999996);
        assert_eq!(local_extrema(&[0.0, 1.2, 1.0], 0.0), 1);
    }

    #[test]
    fn tanh_profile_width() {
        // 0.5 (1 - tanh(x / w)) crosses 0.9 and 0.1 at x = -/+ w atanh(0.8)
        let w = 0.05;
        let dx = 0.01;
        let x: Vec<f64> = (0..200).map(|i| -1.0 + (i as f64 + 0.5) * dx).collect();
        let v: Vec<f64> = x.iter().map(|x| 0.5 * (1.0 - (x / w).tanh())).collect();
        let half = w * 0.8f64.atanh();
        let expected = x.iter().filter(|&&x| x.abs() < half).count();
        assert_eq!(transition_width(&v, 1.0, 0.0), expected);
        let m = solution_metrics(&v, None, dx);
        assert_eq!(m.new_extrema, 0);
        assert!(m.overshoot <= 0.0);
    }

    #[test]
    fn kink_detects_a_step_but_not_a_ramp() {
        let x: Vec<f64> = (0..20).map(|i| i as f64).collect();
        let ramp: Vec<f64> = x.iter().map(|x| 1.0 - 0.03 * x).collect();
        assert!(max_kink_in(&x, &ramp, 0.0, 19.0) < 1e-12);
        let step: Vec<f64> = ramp.iter().enumerate().map(|(j, v)| if j < 10 { *v } else { v - 0.2 }).collect();
        assert!((max_kink_in(&x, &step, 0.0, 19.0) - 0.2).abs() < 1e-12);
        assert_eq!(max_kink_in(&x, &step, 12.0, 19.0), max_kink_in(&x, &ramp, 12.0, 19.0));
    }

    #[test]
    fn exact_sod_profile_has_zero_width() {
        let ex = ExactRiemann::new(PrimState::new(1.0, 0.0, 1.0), PrimState::new(0.125, 0.0, 0.1), 1.4).unwrap();
        let x: Vec<f64> = (0..400).map(|i| (i as f64 + 0.5) / 400.0).collect();
        let rho: Vec<f64> = ex.profile(&x, 0.5, 0.2).iter().map(|q| q.rho).collect();
        assert_eq!(riemann_wave_widths(&x, &rho, &ex, 0.5, 0.2), WaveWidths { contact: Some(0), shock: Some(0) });
    }

    #[test]
    fn budget_csv_layout() {
        let mut buf = Vec::new();
        write_budget_csv(&mut buf, &[BudgetReport { time: 0.5, ..Default::default() }]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap().split(',').count(), 16);
        assert!(lines.next().unwrap().starts_with("5e-1,"));
    }
}
