//! Runs a configured problem and writes snapshots, the budget time series
//! and a metrics summary to the output directory.

use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::config::{ConfigError, InitialCondition, ProblemConfig};
use crate::diagnostics::{self, BudgetReport};
use crate::error::SolverError;
use crate::presets::{initial_cells, stationary_shock_states};
use crate::riemann::ExactRiemann;
use crate::spatial::SpatialOperator;
use crate::timeint::Solver;

#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Config(#[from] ConfigError),

    #[error(transparent)]
    Solver(#[from] SolverError),

    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("cannot write {path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
}

/// What a completed run produced.
#[derive(Debug, Clone)]
pub struct RunSummary {
    pub steps: usize,
    pub final_time: f64,
    pub snapshots: Vec<PathBuf>,
    pub budget: PathBuf,
    pub metrics: PathBuf,
    pub conservation_errors: [f64; 3],
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> RunError + '_ {
    move |source| RunError::Io { path: path.to_path_buf(), source }
}

fn create(path: &Path) -> Result<BufWriter<File>, RunError> {
    File::create(path).map(BufWriter::new).map_err(io_err(path))
}

/// Writes one snapshot file with columns `x, rho, u, p, T, s`.
pub fn write_snapshot(path: &Path, solver: &Solver) -> Result<(), RunError> {
    let prims = solver.primitives()?;
    let gas = &solver.op.gas;
    let csv_err = |source| RunError::Csv { path: path.to_path_buf(), source };
    let mut w = csv::Writer::from_writer(create(path)?);
    w.write_record(["x", "rho", "u", "p", "T", "s"]).map_err(csv_err)?;
    for (x, q) in solver.op.grid.centers().iter().zip(&prims) {
        let row = [*x, q.rho, q.u, q.p, q.temperature(gas), q.entropy(gas)];
        w.write_record(row.iter().map(|v| format!("{v:e}"))).map_err(csv_err)?;
    }
    w.flush().map_err(io_err(path))
}

struct Snapshots {
    dir: PathBuf,
    written: Vec<(usize, f64, PathBuf)>,
}

impl Snapshots {
    fn write(&mut self, solver: &Solver) -> Result<(), RunError> {
        let path = self.dir.join(format!("snapshot_{:04}.csv", self.written.len()));
        write_snapshot(&path, solver)?;
        self.written.push((solver.steps, solver.t, path));
        Ok(())
    }

    fn write_index(&self) -> Result<(), RunError> {
        let path = self.dir.join("snapshots.csv");
        let mut w = create(&path)?;
        let mut body = String::from("index,step,time,file\n");
        for (k, (step, t, file)) in self.written.iter().enumerate() {
            let name = file.file_name().unwrap_or_default().to_string_lossy();
            body.push_str(&format!("{k},{step},{t:e},{name}\n"));
        }
        w.write_all(body.as_bytes()).and_then(|_| w.flush()).map_err(io_err(&path))
    }
}

/// Reference density profile: the exact solution for shock-tube data, the
/// initial step for a stationary shock.
fn reference_density(cfg: &ProblemConfig, x: &[f64], t: f64) -> Option<Vec<f64>> {
    match cfg.initial {
        InitialCondition::Riemann { left, right, x0 } => {
            let exact = ExactRiemann::new(left, right, cfg.gas.gamma).ok()?;
            Some(exact.profile(x, x0, t).iter().map(|q| q.rho).collect())
        }
        InitialCondition::StationaryShock { mach, .. } => {
            let (l, r) = stationary_shock_states(mach, cfg.gas.gamma);
            let n = x.len();
            Some((0..n).map(|j| if j < n / 2 { l.rho } else { r.rho }).collect())
        }
    }
}

fn metrics_text(cfg: &ProblemConfig, solver: &Solver, budgets: &[BudgetReport]) -> Result<String, RunError> {
    let prims = solver.primitives()?;
    let x = solver.op.grid.centers();
    let rho: Vec<f64> = prims.iter().map(|q| q.rho).collect();
    let c = solver.conservation_errors();
    let mut s = format!(
        "preset {}\nsteps {}\ntime {:e}\nconservation_error_mass {:e}\nconservation_error_momentum {:e}\nconservation_error_energy {:e}\n",
        cfg.preset, solver.steps, solver.t, c[0], c[1], c[2]
    );
    if let (Some(first), Some(last)) = (budgets.first(), budgets.last()) {
        s.push_str(&format!("entropy_change {:e}\n", last.total_entropy - first.total_entropy));
    }
    let reference = reference_density(cfg, &x, solver.t);
    s.push_str(&diagnostics::format_metrics(&diagnostics::solution_metrics(
        &rho,
        reference.as_deref(),
        solver.op.grid.dx,
    )));
    if let InitialCondition::Riemann { left, right, x0 } = cfg.initial {
        if let Ok(exact) = ExactRiemann::new(left, right, cfg.gas.gamma) {
            let w = diagnostics::riemann_wave_widths(&x, &rho, &exact, x0, solver.t);
            let show = |v: Option<usize>| v.map_or("n/a".to_string(), |v| v.to_string());
            s.push_str(&format!("contact_width {}\nshock_width {}\n", show(w.contact), show(w.shock)));
        }
    }
    Ok(s)
}

/// Runs `cfg` to its final time, writing all output under `cfg.output.dir`.
///
/// Budget rows are taken at step 0, every `budget_every` steps and at the
/// final step. If the solver aborts, the budget rows gathered so far are
/// still written before the error is returned.
pub fn run(cfg: &ProblemConfig) -> Result<RunSummary, RunError> {
    cfg.validate()?;
    let dir = cfg.output.dir.clone();
    fs::create_dir_all(&dir).map_err(io_err(&dir))?;

    let op = SpatialOperator::new(cfg.grid()?, cfg.gas, cfg.scheme, cfg.boundary_spec())?;
    let mut solver = Solver::new(op, cfg.time, initial_cells(cfg)?)?;

    let mut snaps = Snapshots { dir: dir.clone(), written: Vec::new() };
    snaps.write(&solver)?;
    let mut budgets = vec![diagnostics::budget(&solver.op, &solver.cells, 0.0, [0.0; 3])?];

    let every = cfg.output.budget_every.max(1);
    let interval = cfg.output.snapshot_interval;
    let mut next_snapshot = interval;
    let mut pending: Option<RunError> = None;
    let outcome = solver.run_with(|s| {
        if s.steps % every == 0 || s.is_finished() {
            budgets.push(diagnostics::budget(&s.op, &s.cells, s.t, s.conservation_errors())?);
        }
        if interval > 0.0 && s.t >= next_snapshot && !s.is_finished() {
            while next_snapshot <= s.t {
                next_snapshot += interval;
            }
            if let Err(e) = snaps.write(s) {
                pending = Some(e);
            }
        }
        Ok(())
    });

    let budget_path = dir.join("budget.csv");
    diagnostics::write_budget_csv(create(&budget_path)?, &budgets)
        .map_err(|source| RunError::Csv { path: budget_path.clone(), source })?;
    outcome?;
    if let Some(e) = pending {
        return Err(e);
    }

    snaps.write(&solver)?;
    snaps.write_index()?;
    let metrics_path = dir.join("metrics.txt");
    let text = metrics_text(cfg, &solver, &budgets)?;
    fs::write(&metrics_path, text).map_err(io_err(&metrics_path))?;

    Ok(RunSummary {
        steps: solver.steps,
        final_time: solver.t,
        snapshots: snaps.written.into_iter().map(|(_, _, p)| p).collect(),
        budget: budget_path,
        metrics: metrics_path,
        conservation_errors: solver.conservation_errors(),
    })
}
