//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised while constructing or transforming datasets.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum DataError {
    #[error("outcome at row {0} is {1}, expected 0 or 1")]
    NonBinaryOutcome(usize, f64),
    #[error("predictor matrix contains a non-finite value at row {0}, column {1}")]
    NonFinitePredictor(usize, usize),
    #[error("dataset must have at least one subject and one predictor (n={n}, p={p})")]
    EmptyDimensions { n: usize, p: usize },
    #[error("outcome length {outcomes} does not match predictor rows {rows}")]
    LengthMismatch { outcomes: usize, rows: usize },
    #[error("duplicate predictor name `{0}`")]
    DuplicateName(String),
    #[error("expected {expected} predictor names, got {got}")]
    NameCount { expected: usize, got: usize },
}

/// Errors raised by the model fitters.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum FitError {
    #[error("all outcomes are identical: no events or no non-events")]
    AllSameOutcome,
    #[error("(quasi-)complete separation detected: {0}")]
    Separation(String),
    #[error("Fisher information matrix is singular or degenerate")]
    SingularInformation,
    #[error("no convergence within {0} iterations")]
    MaxIterations(usize),
    #[error("optimization stalled without reaching the convergence tolerance")]
    NonConvergence,
    #[error(transparent)]
    Data(#[from] DataError),
}

/// Errors raised by tuning-parameter selection.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum TuningError {
    #[error("outcome mean is degenerate (all 0 or all 1); no tuning path exists")]
    DegenerateOutcome,
    #[error("lambda_max is zero: every predictor is orthogonal to the outcome residual")]
    DegeneratePath,
    #[error("cross-validation has no usable fold: every training part was single-class")]
    NoUsableFolds,
    #[error("fold count {k} exceeds subject count {n}")]
    TooManyFolds { k: usize, n: usize },
    #[error(transparent)]
    Fit(#[from] FitError),
}

/// Errors raised by performance metrics.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum MetricError {
    #[error("C-statistic undefined: need at least one event and one non-event")]
    UndefinedC,
    #[error("scores length {scores} does not match outcomes length {outcomes}")]
    LengthMismatch { scores: usize, outcomes: usize },
}

/// Errors raised by the bootstrap validation engine.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum ValidationError {
    #[error("B must be at least 1")]
    NoReplicates,
    #[error("more than half of the bootstrap replicates were skipped ({skipped} of {total})")]
    TooManySkipped { skipped: usize, total: usize },
    #[error("no bootstrap replicate produced a defined out-of-bag C-statistic")]
    NoOutOfBagEstimates,
    #[error("apparent fit failed: {0}")]
    ApparentFit(#[from] FitError),
    #[error(transparent)]
    Metric(#[from] MetricError),
}

/// Errors raised by the simulation harness.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum SimError {
    #[error("pairwise target for variables {j} and {k} violates the Frechet bounds: joint {joint:.6} outside [{lo:.6}, {hi:.6}]")]
    InfeasibleMargins {
        j: usize,
        k: usize,
        joint: f64,
        lo: f64,
        hi: f64,
    },
    #[error("iterative proportional fitting did not reach tolerance: max margin deviation {deviation:.3e} after {cycles} cycles")]
    IpfNoConvergence { deviation: f64, cycles: usize },
    #[error("marginal probability for variable {0} must lie strictly inside (0,1), got {1}")]
    InvalidMarginal(usize, f64),
    #[error("correlation matrix is not valid: {0}")]
    InvalidCorrelations(String),
    #[error("covariance matrix for the continuous block is not positive definite")]
    InvalidCovariance,
    #[error("intercept calibration could not bracket the target event fraction {0}")]
    NoBracket(f64),
    #[error("dataset generation produced a single-class outcome in {0} consecutive attempts")]
    DegenerateAfterRetries(usize),
    #[error("invalid scenario configuration: {field}: {message}")]
    InvalidConfig { field: String, message: String },
    #[error("scenario aborted: {failed} of {total} replicate fits failed")]
    TooManyFailures { failed: usize, total: usize },
}
