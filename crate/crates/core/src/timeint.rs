//! Three-stage SSP Runge-Kutta time stepping with CFL step control.

use crate::error::{Result, SolverError};
use crate::flux1d::FluxVector;
use crate::spatial::{FaceData, Grid1D, SpatialOperator};
use crate::thermo::{ConsState, GasModel, PrimState};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeSpec {
    pub cfl: f64,
    pub t_final: f64,
    pub max_steps: usize,
}

impl TimeSpec {
    pub fn new(cfl: f64, t_final: f64) -> Self {
        TimeSpec { cfl, t_final, max_steps: 1_000_000 }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.cfl > 0.0 && self.cfl <= 1.0) {
            return Err(SolverError::parameter("cfl", format!("must lie in (0, 1], got {}", self.cfl)));
        }
        if !(self.t_final > 0.0) || !self.t_final.is_finite() {
            return Err(SolverError::parameter("t_final", format!("must be positive, got {}", self.t_final)));
        }
        if self.max_steps == 0 {
            return Err(SolverError::parameter("max_steps", "must be positive"));
        }
        Ok(())
    }
}

/// Vector-space operations needed by the integrator.
pub trait StateVector: Clone {
    /// `self <- a self + b (x + dt y)`
    fn combine(&mut self, a: f64, b: f64, x: &Self, dt: f64, y: &Self);
}

impl StateVector for Vec<f64> {
    fn combine(&mut self, a: f64, b: f64, x: &Self, dt: f64, y: &Self) {
        for ((s, x), y) in self.iter_mut().zip(x).zip(y) {
            *s = a * *s + b * (x + dt * y);
        }
    }
}

impl StateVector for Vec<ConsState> {
    fn combine(&mut self, a: f64, b: f64, x: &Self, dt: f64, y: &Self) {
        for ((s, x), y) in self.iter_mut().zip(x).zip(y) {
            s.rho = a * s.rho + b * (x.rho + dt * y.rho);
            s.m = a * s.m + b * (x.m + dt * y.m);
            s.e = a * s.e + b * (x.e + dt * y.e);
        }
    }
}

/// One SSP-RK3 step. Errors from stage `k` (1-based) are wrapped in
/// [`SolverError::Stage`].
pub fn ssp_rk3_step<S, F>(state: &S, dt: f64, mut rhs: F) -> Result<S>
where
    S: StateVector,
    F: FnMut(&S) -> Result<S>,
{
    let stage = |k: usize| move |e: SolverError| SolverError::Stage { stage: k, source: Box::new(e) };
    let l0 = rhs(state).map_err(stage(1))?;
    let mut u1 = state.clone();
    u1.combine(0.0, 1.0, state, dt, &l0);
    let l1 = rhs(&u1).map_err(stage(2))?;
    let mut u2 = state.clone();
    u2.combine(0.75, 0.25, &u1, dt, &l1);
    let l2 = rhs(&u2).map_err(stage(3))?;
    let mut u3 = state.clone();
    u3.combine(1.0 / 3.0, 2.0 / 3.0, &u2, dt, &l2);
    Ok(u3)
}

/// CFL time step `cfl dx / max(|u| + a)`, additionally limited by
/// `cfl dx^2 rho_min / (2 max(4/3 mu, kappa / c_v))` for viscous gases.
pub fn compute_dt(cells: &[PrimState], grid: &Grid1D, gas: &GasModel, cfl: f64) -> f64 {
    let speed = cells.iter().map(|q| q.u.abs() + q.sound_speed(gas)).fold(0.0, f64::max);
    let mut dt = cfl * grid.dx / speed;
    if !gas.is_inviscid() {
        let cv = gas.gas_constant / (gas.gamma - 1.0);
        let rho_min = cells.iter().map(|q| q.rho).fold(f64::INFINITY, f64::min);
        let diff = cells
            .iter()
            .map(|q| {
                let t = q.temperature(gas);
                (4.0 / 3.0 * gas.viscosity(t)).max(gas.conductivity(t) / cv)
            })
            .fold(0.0, f64::max);
        if diff > 0.0 {
            dt = dt.min(cfl * grid.dx * grid.dx * rho_min / (2.0 * diff));
        }
    }
    dt
}

/// Time-marching driver for one spatial operator.
#[derive(Debug, Clone)]
pub struct Solver {
    pub op: SpatialOperator,
    pub time: TimeSpec,
    pub cells: Vec<ConsState>,
    pub t: f64,
    pub steps: usize,
    /// Time-integrated boundary flux `int (F_left - F_right) dt`.
    pub boundary_inflow: FluxVector,
    initial_totals: [f64; 3],
}

impl Solver {
    pub fn new(op: SpatialOperator, time: TimeSpec, cells: Vec<ConsState>) -> Result<Self> {
        time.validate()?;
        if cells.len() != op.grid.n_cells {
            return Err(SolverError::parameter(
                "n_cells",
                format!("grid has {} cells, initial data {}", op.grid.n_cells, cells.len()),
            ));
        }
        op.primitives(&cells)?;
        let initial_totals = totals(&cells, op.grid.dx);
        Ok(Solver { op, time, cells, t: 0.0, steps: 0, boundary_inflow: FluxVector::ZERO, initial_totals })
    }

    pub fn primitives(&self) -> Result<Vec<PrimState>> {
        self.op.primitives(&self.cells)
    }

    pub fn face_data(&self) -> Result<FaceData> {
        self.op.face_fluxes(&self.cells)
    }

    pub fn rhs(&self) -> Result<Vec<ConsState>> {
        self.op.rhs(&self.cells)
    }

    pub fn is_finished(&self) -> bool {
        self.t >= self.time.t_final
    }

    /// Advance one step of size `dt`; returns the step taken.
    pub fn step_with(&mut self, dt: f64) -> Result<f64> {
        let op = self.op;
        let n = op.grid.n_cells;
        let mut inflow = [FluxVector::ZERO; 3];
        let mut stage = 0;
        let next = ssp_rk3_step(&self.cells, dt, |u: &Vec<ConsState>| {
            let data = op.face_fluxes(u)?;
            inflow[stage] = data.faces[0].net() - data.faces[n].net();
            stage += 1;
            Ok(data.rhs(op.grid.dx))
        })
        .map_err(|e| SolverError::Aborted { time: self.t, source: Box::new(e) })?;
        // SSP-RK3 quadrature weights of the three stage evaluations
        self.boundary_inflow += dt * ((1.0 / 6.0) * inflow[0] + (1.0 / 6.0) * inflow[1] + (2.0 / 3.0) * inflow[2]);
        self.cells = next;
        self.t += dt;
        self.steps += 1;
        Ok(dt)
    }

    /// Advance one CFL-limited step, clamped to land on `t_final`.
    pub fn step(&mut self) -> Result<f64> {
        let prims = self.primitives().map_err(|e| SolverError::Aborted { time: self.t, source: Box::new(e) })?;
        let mut dt = compute_dt(&prims, &self.op.grid, &self.op.gas, self.time.cfl);
        if self.t + dt > self.time.t_final {
            dt = self.time.t_final - self.t;
        }
        self.step_with(dt)
    }

    pub fn advance_steps(&mut self, n: usize) -> Result<()> {
        for _ in 0..n {
            let prims = self.primitives()?;
            let dt = compute_dt(&prims, &self.op.grid, &self.op.gas, self.time.cfl);
            self.step_with(dt)?;
        }
        Ok(())
    }

    pub fn run_to_end(&mut self) -> Result<()> {
        self.run_with(|_| Ok(()))
    }

    /// Run to `t_final`, calling `observe` after every step.
    pub fn run_with<F: FnMut(&Solver) -> Result<()>>(&mut self, mut observe: F) -> Result<()> {
        while !self.is_finished() {
            if self.steps >= self.time.max_steps {
                return Err(SolverError::StepLimit(self.time.max_steps));
            }
            self.step()?;
            observe(self)?;
        }
        Ok(())
    }

    /// `total - initial - boundary inflow` per conserved component.
    pub fn conservation_errors(&self) -> [f64; 3] {
        let now = totals(&self.cells, self.op.grid.dx);
        let inflow = self.boundary_inflow.to_array();
        [0, 1, 2].map(|k| now[k] - self.initial_totals[k] - inflow[k])
    }
}

/// `dx sum_j u_j` per conserved component.
pub fn totals(cells: &[ConsState], dx: f64) -> [f64; 3] {
    let mut s = [0.0; 3];
    for c in cells {
        s[0] += c.rho;
        s[1] += c.m;
        s[2] += c.e;
    }
    s.map(|v| v * dx)
}
