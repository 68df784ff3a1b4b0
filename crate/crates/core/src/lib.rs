//! Multivariable binary-outcome prediction models with bootstrap optimism
//! correction of the C-statistic.
//!
//! The crate builds logistic prediction models under seven estimation
//! strategies (maximum likelihood, Firth's penalized likelihood, ridge,
//! lasso, elastic-net, and backward stepwise selection with AIC/BIC or
//! significance stopping rules), measures discrimination with the
//! C-statistic, and corrects the apparent C-statistic for optimism with
//! three bootstrap estimators: Harrell's bias correction, Efron's .632,
//! and the .632+ estimator. A simulation harness generates correlated
//! clinical-style predictor data and evaluates bias and RMSE of the
//! corrected estimators against an external test sample.

pub mod data;
pub mod error;
pub mod estimators;
pub mod linalg;
pub mod metrics;
pub mod rng;
pub mod simulation;
pub mod tuning;
pub mod validation;

pub use data::{destandardize, standardize, Dataset, FittedModel, StandardizationParams};
pub use error::{DataError, FitError, MetricError, SimError, TuningError, ValidationError};
pub use estimators::{Strategy, StrategyKind};
pub use tuning::CvPlan;
pub use validation::{Pipeline, ValidationReport};

/// Build the global rayon thread pool with an explicit worker count.
///
/// Returns an error if the pool was already initialized with a different
/// size. Without the `parallel` feature this is a no-op.
#[cfg(feature = "parallel")]
pub fn init_thread_pool(threads: usize) -> Result<(), String> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}

#[cfg(not(feature = "parallel"))]
pub fn init_thread_pool(_threads: usize) -> Result<(), String> {
    Ok(())
}
