//! Internal standardized design shared by the iterative fitters.

use crate::data::{destandardize_coefficients, standardize, Dataset, FittedModel, StandardizationParams};
use crate::linalg::Matrix;

/// Standardized predictor matrix with constant columns removed.
///
/// The fitters work on this scale for numerical conditioning; solutions are
/// mapped back to the original scale with [`StdDesign::to_model`]. Constant
/// columns keep a zero coefficient rather than aborting the fit.
pub(crate) struct StdDesign {
    /// n x q standardized matrix over the active (non-constant) columns.
    pub x: Matrix,
    /// Original column index of each active design column.
    pub active: Vec<usize>,
    pub params: StandardizationParams,
    /// Original predictor count.
    pub p: usize,
}

impl StdDesign {
    pub fn build(data: &Dataset) -> Self {
        let (std_all, params) = standardize(data.predictors());
        let active: Vec<usize> = (0..data.p()).filter(|&j| !params.is_constant(j)).collect();
        let x = std_all.select_columns(&active);
        Self {
            x,
            active,
            params,
            p: data.p(),
        }
    }

    pub fn n(&self) -> usize {
        self.x.rows()
    }

    pub fn q(&self) -> usize {
        self.active.len()
    }

    /// Restrict to a subset of design columns (stepwise refits).
    pub fn subset(&self, design_cols: &[usize]) -> StdDesign {
        StdDesign {
            x: self.x.select_columns(design_cols),
            active: design_cols.iter().map(|&c| self.active[c]).collect(),
            params: self.params.clone(),
            p: self.p,
        }
    }

    /// Mean and scale of each active column, for raw-scale score checks.
    pub fn active_mean(&self, col: usize) -> f64 {
        self.params.means[self.active[col]]
    }

    pub fn active_scale(&self, col: usize) -> f64 {
        self.params.scales[self.active[col]]
    }

    /// Map a standardized-scale solution `[intercept, slopes...]` back to a
    /// model on the original predictor scale.
    pub fn to_model(&self, beta: &[f64], tag: &str, converged: bool, iterations: usize) -> FittedModel {
        debug_assert_eq!(beta.len(), self.q() + 1);
        let mut slopes_std = vec![0.0; self.p];
        for (c, &j) in self.active.iter().enumerate() {
            slopes_std[j] = beta[c + 1];
        }
        let (intercept, coefficients) =
            destandardize_coefficients(beta[0], &slopes_std, &self.params);
        let selected = coefficients.iter().map(|&b| b != 0.0).collect();
        FittedModel {
            intercept,
            coefficients,
            selected,
            strategy_tag: tag.to_string(),
            converged,
            iterations,
        }
    }

    /// Linear predictors `beta0 + X beta` on the standardized scale.
    pub fn linear_predictors(&self, beta: &[f64], out: &mut Vec<f64>) {
        let n = self.n();
        let q = self.q();
        out.clear();
        out.reserve(n);
        for i in 0..n {
            let row = self.x.row(i);
            let mut eta = beta[0];
            for c in 0..q {
                eta += beta[c + 1] * row[c];
            }
            out.push(eta);
        }
    }
}
