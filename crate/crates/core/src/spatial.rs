//! Semi-discrete residual of the finite-volume scheme on a uniform grid.

use crate::dissipation1d::{
    jst_coefficients, jst_dissipation_with, matrix_dissipation, pressure_sensor, DissipationSpec,
};
use crate::error::{Result, SolverError};
use crate::flux1d::{CentralFlux, FluxVector};
use crate::reconstruction::{reconstruct_face, ReconSpec};
use crate::thermo::{avg, ConsState, GasModel, PrimState};

/// Ghost cells on each side of the domain.
pub const GHOSTS: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D {
    pub n_cells: usize,
    pub x_min: f64,
    pub x_max: f64,
    pub dx: f64,
}

impl Grid1D {
    pub fn new(n_cells: usize, x_min: f64, x_max: f64) -> Result<Self> {
        if n_cells < 4 {
            return Err(SolverError::parameter("n_cells", format!("need at least 4 cells, got {n_cells}")));
        }
        let dx = (x_max - x_min) / n_cells as f64;
        if !(dx > 0.0) || !dx.is_finite() {
            return Err(SolverError::parameter("x_max", "domain length must be positive"));
        }
        Ok(Grid1D { n_cells, x_min, x_max, dx })
    }

    pub fn length(&self) -> f64 {
        self.x_max - self.x_min
    }

    pub fn cell_center(&self, j: usize) -> f64 {
        self.x_min + (j as f64 + 0.5) * self.dx
    }

    pub fn centers(&self) -> Vec<f64> {
        (0..self.n_cells).map(|j| self.cell_center(j)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundaryKind {
    Transmissive,
    FixedState(PrimState),
    Periodic,
    /// Right-boundary outflow with a prescribed mass flux; momentum and
    /// energy fluxes copy the last interior face.
    ShockOutflow {
        mass_flux: f64,
    },
}

impl BoundaryKind {
    pub fn name(&self) -> &'static str {
        match self {
            BoundaryKind::Transmissive => "transmissive",
            BoundaryKind::FixedState(_) => "fixed_state",
            BoundaryKind::Periodic => "periodic",
            BoundaryKind::ShockOutflow { .. } => "shock_outflow",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundarySpec {
    pub left: BoundaryKind,
    pub right: BoundaryKind,
}

impl BoundarySpec {
    pub const PERIODIC: BoundarySpec = BoundarySpec { left: BoundaryKind::Periodic, right: BoundaryKind::Periodic };
    pub const TRANSMISSIVE: BoundarySpec =
        BoundarySpec { left: BoundaryKind::Transmissive, right: BoundaryKind::Transmissive };

    pub fn is_periodic(&self) -> bool {
        matches!(self.left, BoundaryKind::Periodic)
    }

    pub fn validate(&self) -> Result<()> {
        let (l, r) = (matches!(self.left, BoundaryKind::Periodic), matches!(self.right, BoundaryKind::Periodic));
        if l != r {
            return Err(SolverError::parameter("bc", "periodic must be set on both sides or neither"));
        }
        if matches!(self.left, BoundaryKind::ShockOutflow { .. }) {
            return Err(SolverError::parameter("bc_left", "shock_outflow is a right-boundary condition"));
        }
        for kind in [self.left, self.right] {
            match kind {
                BoundaryKind::FixedState(q) if !q.is_valid() => {
                    return Err(SolverError::parameter("bc", "fixed state must have positive density and pressure"));
                }
                BoundaryKind::ShockOutflow { mass_flux } if !mass_flux.is_finite() => {
                    return Err(SolverError::parameter("bc_right", "mass flux must be finite"));
                }
                _ => {}
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scheme {
    pub flux: CentralFlux,
    pub dissipation: DissipationSpec,
    pub recon: ReconSpec,
}

impl Scheme {
    pub fn new(flux: CentralFlux, dissipation: DissipationSpec) -> Self {
        Scheme { flux, dissipation, recon: ReconSpec::FIRST_ORDER }
    }

    pub fn with_recon(mut self, recon: ReconSpec) -> Self {
        self.recon = recon;
        self
    }
}

/// `g = (0, tau, u_avg tau - q)` with `mu`, `kappa` at the mean face temperature.
pub fn viscous_face_flux(left: &PrimState, right: &PrimState, gas: &GasModel, dx: f64) -> FluxVector {
    if gas.is_inviscid() {
        return FluxVector::ZERO;
    }
    let (tl, tr) = (left.temperature(gas), right.temperature(gas));
    let t = avg(tl, tr);
    let tau = 4.0 / 3.0 * gas.viscosity(t) * (right.u - left.u) / dx;
    let q = -gas.conductivity(t) * (tr - tl) / dx;
    FluxVector::new(0.0, tau, avg(left.u, right.u) * tau - q)
}

/// Cells extended by [`GHOSTS`] ghost states on each side.
pub fn apply_boundary(cells: &[PrimState], bcs: &BoundarySpec) -> Vec<PrimState> {
    let n = cells.len();
    let mut out = Vec::with_capacity(n + 2 * GHOSTS);
    for g in 0..GHOSTS {
        let k = GHOSTS - g;
        out.push(match bcs.left {
            BoundaryKind::Periodic => cells[n - k],
            BoundaryKind::FixedState(q) => q,
            _ => cells[0],
        });
    }
    out.extend_from_slice(cells);
    for g in 0..GHOSTS {
        out.push(match bcs.right {
            BoundaryKind::Periodic => cells[g],
            BoundaryKind::FixedState(q) => q,
            _ => cells[n - 1],
        });
    }
    out
}

/// Flux through one face, split by origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FaceFlux {
    pub central: FluxVector,
    pub dissipation: FluxVector,
    pub viscous: FluxVector,
}

impl FaceFlux {
    /// Net flux `f - g` entering the residual.
    pub fn net(&self) -> FluxVector {
        self.central + self.dissipation - self.viscous
    }
}

/// Face fluxes together with the cell states they were computed from.
#[derive(Debug, Clone, PartialEq)]
pub struct FaceData {
    pub prims: Vec<PrimState>,
    /// `n_cells + 1` faces, face `k` sits at `x_min + k dx`.
    pub faces: Vec<FaceFlux>,
}

impl FaceData {
    pub fn rhs(&self, dx: f64) -> Vec<ConsState> {
        self.faces
            .windows(2)
            .map(|w| {
                let d = w[1].net() - w[0].net();
                ConsState::new(-d.mass / dx, -d.momentum / dx, -d.energy / dx)
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpatialOperator {
    pub grid: Grid1D,
    pub gas: GasModel,
    pub scheme: Scheme,
    pub bcs: BoundarySpec,
}

impl SpatialOperator {
    pub fn new(grid: Grid1D, gas: GasModel, scheme: Scheme, bcs: BoundarySpec) -> Result<Self> {
        gas.validate()?;
        scheme.dissipation.validate()?;
        bcs.validate()?;
        if !(1..=2).contains(&scheme.recon.order) {
            return Err(SolverError::parameter("order", "reconstruction order must be 1 or 2"));
        }
        Ok(SpatialOperator { grid, gas, scheme, bcs })
    }

    pub fn primitives(&self, cells: &[ConsState]) -> Result<Vec<PrimState>> {
        cells.iter().enumerate().map(|(j, c)| c.to_prim(&self.gas, j)).collect()
    }

    pub fn face_fluxes(&self, cells: &[ConsState]) -> Result<FaceData> {
        let prims = self.primitives(cells)?;
        let faces = self.face_fluxes_prim(&prims);
        Ok(FaceData { prims, faces })
    }

    pub fn face_fluxes_prim(&self, prims: &[PrimState]) -> Vec<FaceFlux> {
        let n = prims.len();
        let ext = apply_boundary(prims, &self.bcs);
        let nu = self.cell_sensors(&ext);
        let mut faces: Vec<FaceFlux> = (0..=n)
            .map(|k| {
                // face k lies between extended cells k+1 and k+2
                let stencil = [ext[k], ext[k + 1], ext[k + 2], ext[k + 3]];
                self.face_flux(&stencil, (nu[k + 1], nu[k + 2]))
            })
            .collect();
        if let BoundaryKind::ShockOutflow { mass_flux } = self.bcs.right {
            let inner = faces[n - 1].net();
            faces[n] = FaceFlux {
                central: FluxVector::new(mass_flux, inner.momentum, inner.energy),
                dissipation: FluxVector::ZERO,
                viscous: FluxVector::ZERO,
            };
        }
        faces
    }

    pub fn rhs(&self, cells: &[ConsState]) -> Result<Vec<ConsState>> {
        Ok(self.face_fluxes(cells)?.rhs(self.grid.dx))
    }

    /// Pressure sensor per extended cell; non-periodic ghosts reuse the
    /// nearest interior value.
    fn cell_sensors(&self, ext: &[PrimState]) -> Vec<f64> {
        if !matches!(self.scheme.dissipation, DissipationSpec::Scalar(_)) {
            return vec![0.0; ext.len()];
        }
        let m = ext.len();
        let mut nu = vec![0.0; m];
        for i in 1..m - 1 {
            nu[i] = pressure_sensor(ext[i - 1].p, ext[i].p, ext[i + 1].p);
        }
        if self.bcs.is_periodic() {
            let n = m - 2 * GHOSTS;
            nu[0] = nu[n];
            nu[m - 1] = nu[GHOSTS + 1];
        } else {
            for g in 0..GHOSTS {
                nu[g] = nu[GHOSTS];
                nu[m - 1 - g] = nu[m - 1 - GHOSTS];
            }
        }
        nu
    }

    fn face_flux(&self, stencil: &[PrimState; 4], nu: (f64, f64)) -> FaceFlux {
        let gas = &self.gas;
        let (l, r) = reconstruct_face(stencil, &self.scheme.recon);
        let central = self.scheme.flux.eval(&l, &r, gas);
        let dissipation = match self.scheme.dissipation {
            DissipationSpec::None => FluxVector::ZERO,
            DissipationSpec::Scalar(s) => {
                let (eps2, eps4) = jst_coefficients(nu.0.max(nu.1), s.kappa2, s.kappa4);
                jst_dissipation_with(stencil, gas, &s, eps2, eps4)
            }
            DissipationSpec::Matrix(law) => matrix_dissipation(&l, &r, gas, law, self.scheme.flux),
        };
        let viscous = viscous_face_flux(&stencil[1], &stencil[2], gas, self.grid.dx);
        FaceFlux { central, dissipation, viscous }
    }
}

/// Free-function form of [`SpatialOperator::rhs`].
pub fn assemble_rhs(
    cells: &[ConsState],
    grid: &Grid1D,
    gas: &GasModel,
    scheme: &Scheme,
    bcs: &BoundarySpec,
) -> Result<Vec<ConsState>> {
    SpatialOperator::new(*grid, *gas, *scheme, *bcs)?.rhs(cells)
}
