//! Dataset representation, column standardization, and risk-score
//! computation shared by all fitters.

use serde::{Deserialize, Serialize};

use crate::error::DataError;
use crate::linalg::Matrix;

/// Probabilities produced by [`sigmoid`] are clamped to
/// `[PROB_FLOOR, 1 - PROB_FLOOR]` so log-likelihood terms stay finite.
pub const PROB_FLOOR: f64 = 1e-15;

/// Overflow-safe logistic function, clamped to the open interval (0, 1).
#[inline]
pub fn sigmoid(eta: f64) -> f64 {
    let p = if eta >= 0.0 {
        1.0 / (1.0 + (-eta).exp())
    } else {
        let e = eta.exp();
        e / (1.0 + e)
    };
    p.clamp(PROB_FLOOR, 1.0 - PROB_FLOOR)
}

/// Logit with the same clamping as [`sigmoid`].
#[inline]
pub fn logit(p: f64) -> f64 {
    let p = p.clamp(PROB_FLOOR, 1.0 - PROB_FLOOR);
    (p / (1.0 - p)).ln()
}

/// A binary-outcome dataset: outcome vector, predictor matrix, and column
/// names. Immutable after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    outcomes: Vec<f64>,
    predictors: Matrix,
    names: Vec<String>,
}

impl Dataset {
    /// Validates every invariant: outcomes are 0/1, predictors finite,
    /// dimensions non-empty and consistent, names unique.
    pub fn new(
        outcomes: Vec<f64>,
        predictors: Matrix,
        names: Vec<String>,
    ) -> Result<Self, DataError> {
        let n = predictors.rows();
        let p = predictors.cols();
        if n == 0 || p == 0 {
            return Err(DataError::EmptyDimensions { n, p });
        }
        if outcomes.len() != n {
            return Err(DataError::LengthMismatch {
                outcomes: outcomes.len(),
                rows: n,
            });
        }
        if names.len() != p {
            return Err(DataError::NameCount {
                expected: p,
                got: names.len(),
            });
        }
        for (i, &y) in outcomes.iter().enumerate() {
            if y != 0.0 && y != 1.0 {
                return Err(DataError::NonBinaryOutcome(i, y));
            }
        }
        for i in 0..n {
            for (j, &v) in predictors.row(i).iter().enumerate() {
                if !v.is_finite() {
                    return Err(DataError::NonFinitePredictor(i, j));
                }
            }
        }
        for (j, name) in names.iter().enumerate() {
            if names[..j].contains(name) {
                return Err(DataError::DuplicateName(name.clone()));
            }
        }
        Ok(Self {
            outcomes,
            predictors,
            names,
        })
    }

    /// Convenience constructor generating names `x1..xp`.
    pub fn with_default_names(outcomes: Vec<f64>, predictors: Matrix) -> Result<Self, DataError> {
        let names = (1..=predictors.cols()).map(|j| format!("x{j}")).collect();
        Self::new(outcomes, predictors, names)
    }

    pub fn n(&self) -> usize {
        self.outcomes.len()
    }

    pub fn p(&self) -> usize {
        self.predictors.cols()
    }

    pub fn outcomes(&self) -> &[f64] {
        &self.outcomes
    }

    pub fn predictors(&self) -> &Matrix {
        &self.predictors
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn row(&self, i: usize) -> &[f64] {
        self.predictors.row(i)
    }

    pub fn events(&self) -> usize {
        self.outcomes.iter().filter(|&&y| y == 1.0).count()
    }

    pub fn event_fraction(&self) -> f64 {
        self.events() as f64 / self.n() as f64
    }

    /// Rows picked by index, with repetition allowed (bootstrap resampling).
    pub fn subset(&self, indices: &[usize]) -> Dataset {
        let outcomes = indices.iter().map(|&i| self.outcomes[i]).collect();
        let predictors = self.predictors.select_rows(indices);
        Dataset {
            outcomes,
            predictors,
            names: self.names.clone(),
        }
    }
}

/// Column means and scales recorded by [`standardize`], used to map models
/// fitted on the standardized scale back to the original predictor scale.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StandardizationParams {
    pub means: Vec<f64>,
    /// Population standard deviations (divisor n); 1.0 recorded for
    /// constant columns so inversion stays well-defined.
    pub scales: Vec<f64>,
    /// Indices of zero-variance columns, ascending.
    pub constant_columns: Vec<usize>,
}

impl StandardizationParams {
    pub fn is_constant(&self, j: usize) -> bool {
        self.constant_columns.binary_search(&j).is_ok()
    }
}

/// Center each column to mean 0 and rescale to variance 1 (divisor n).
/// Constant columns are passed through as zeros and recorded rather than
/// rejected, so resamples that collapse a column keep fitting.
pub fn standardize(predictors: &Matrix) -> (Matrix, StandardizationParams) {
    let n = predictors.rows();
    let p = predictors.cols();
    assert!(n >= 2, "standardization needs at least two rows");
    let nf = n as f64;
    let mut means = vec![0.0; p];
    for i in 0..n {
        for (j, &v) in predictors.row(i).iter().enumerate() {
            means[j] += v;
        }
    }
    for m in means.iter_mut() {
        *m /= nf;
    }
    let mut vars = vec![0.0; p];
    for i in 0..n {
        for (j, &v) in predictors.row(i).iter().enumerate() {
            let d = v - means[j];
            vars[j] += d * d;
        }
    }
    let mut scales = vec![1.0; p];
    let mut constant_columns = Vec::new();
    for j in 0..p {
        let var = vars[j] / nf;
        if var > 0.0 {
            scales[j] = var.sqrt();
        } else {
            constant_columns.push(j);
        }
    }
    let mut out = Matrix::zeros(n, p);
    for i in 0..n {
        let src = predictors.row(i);
        let dst = out.row_mut(i);
        for j in 0..p {
            dst[j] = if constant_columns.binary_search(&j).is_ok() {
                0.0
            } else {
                (src[j] - means[j]) / scales[j]
            };
        }
    }
    (
        out,
        StandardizationParams {
            means,
            scales,
            constant_columns,
        },
    )
}

/// A fitted logistic model on the original predictor scale.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FittedModel {
    pub intercept: f64,
    /// One slope per predictor column; zero for unselected or shrunk-out
    /// predictors.
    pub coefficients: Vec<f64>,
    /// `coefficients[j] == 0` whenever `selected[j]` is false.
    pub selected: Vec<bool>,
    pub strategy_tag: String,
    pub converged: bool,
    pub iterations: usize,
}

impl FittedModel {
    pub fn intercept_only(intercept: f64, p: usize, tag: &str) -> Self {
        Self {
            intercept,
            coefficients: vec![0.0; p],
            selected: vec![false; p],
            strategy_tag: tag.to_string(),
            converged: true,
            iterations: 0,
        }
    }

    pub fn is_intercept_only(&self) -> bool {
        self.coefficients.iter().all(|&b| b == 0.0)
    }

    #[inline]
    pub fn linear_predictor(&self, x: &[f64]) -> f64 {
        let mut eta = self.intercept;
        for (b, v) in self.coefficients.iter().zip(x) {
            eta += b * v;
        }
        eta
    }

    /// Event probability for one predictor vector, overflow-safe.
    #[inline]
    pub fn predict_risk(&self, x: &[f64]) -> f64 {
        sigmoid(self.linear_predictor(x))
    }

    /// Risk scores for every row of a predictor matrix.
    pub fn risks(&self, predictors: &Matrix) -> Vec<f64> {
        (0..predictors.rows())
            .map(|i| self.predict_risk(predictors.row(i)))
            .collect()
    }
}

/// Event probability under a fitted model for one predictor vector.
pub fn predict_risk(model: &FittedModel, x: &[f64]) -> f64 {
    model.predict_risk(x)
}

/// Map a model fitted on standardized predictors back to the original
/// scale. Predicted risks are identical on both scales.
pub fn destandardize(model: &FittedModel, params: &StandardizationParams) -> FittedModel {
    let (intercept, coefficients) =
        destandardize_coefficients(model.intercept, &model.coefficients, params);
    let selected = coefficients.iter().map(|&b| b != 0.0).collect();
    FittedModel {
        intercept,
        coefficients,
        selected,
        strategy_tag: model.strategy_tag.clone(),
        converged: model.converged,
        iterations: model.iterations,
    }
}

pub(crate) fn destandardize_coefficients(
    intercept_std: f64,
    slopes_std: &[f64],
    params: &StandardizationParams,
) -> (f64, Vec<f64>) {
    let mut intercept = intercept_std;
    let mut slopes = vec![0.0; slopes_std.len()];
    for (j, &b) in slopes_std.iter().enumerate() {
        if params.is_constant(j) || b == 0.0 {
            continue;
        }
        slopes[j] = b / params.scales[j];
        intercept -= b * params.means[j] / params.scales[j];
    }
    (intercept, slopes)
}
