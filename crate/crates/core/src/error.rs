use thiserror::Error;

/// Errors raised by state construction and the time-marching solver.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolverError {
    #[error("logarithmic mean requires positive arguments, got ({0}, {1})")]
    LogMeanDomain(f64, f64),

    #[error("invalid state in cell {cell}: rho = {rho}, p = {p}")]
    InvalidState { cell: usize, rho: f64, p: f64 },

    #[error("runge-kutta stage {stage} failed: {source}")]
    Stage {
        stage: usize,
        #[source]
        source: Box<SolverError>,
    },

    #[error("invalid state at t = {time}: {source}")]
    Aborted {
        time: f64,
        #[source]
        source: Box<SolverError>,
    },

    #[error("step limit of {0} reached before the final time")]
    StepLimit(usize),

    #[error("invalid parameter `{field}`: {reason}")]
    Parameter { field: &'static str, reason: String },
}

impl SolverError {
    pub(crate) fn parameter(field: &'static str, reason: impl Into<String>) -> Self {
        SolverError::Parameter { field, reason: reason.into() }
    }

    /// Cell index of the offending state, if the error carries one.
    pub fn cell(&self) -> Option<usize> {
        match self {
            SolverError::InvalidState { cell, .. } => Some(*cell),
            SolverError::Stage { source, .. } | SolverError::Aborted { source, .. } => source.cell(),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, SolverError>;
