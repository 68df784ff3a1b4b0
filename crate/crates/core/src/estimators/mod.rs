//! The seven model-building strategies: maximum-likelihood logistic
//! regression, Firth's penalized likelihood, ridge, lasso, elastic-net,
//! and backward stepwise selection under AIC, BIC, or significance
//! stopping rules.

mod design;
mod firth;
mod ml;
mod penalized;
mod stepwise;

pub use firth::fit_firth;
pub use ml::fit_ml;
pub use penalized::{fit_penalized, PenaltySpec};
pub use stepwise::{backward_stepwise, StepwiseCriterion};

pub(crate) use design::StdDesign;
pub(crate) use ml::fit_ml_on_design;
pub(crate) use penalized::cd_path;

use serde::{Deserialize, Serialize};

use crate::data::{Dataset, FittedModel};

/// Which estimation strategy builds the prediction model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StrategyKind {
    Ml,
    Firth,
    Ridge,
    Lasso,
    ElasticNet,
    StepwiseAic,
    StepwiseBic,
    StepwiseP,
}

/// A model-building strategy together with its strategy-specific knobs.
///
/// `alpha` is the elastic-net mixing weight (ignored unless the kind is
/// `ElasticNet`); `p_threshold` is the significance level for `StepwiseP`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Strategy {
    pub kind: StrategyKind,
    pub alpha: f64,
    pub p_threshold: f64,
}

impl Strategy {
    pub fn new(kind: StrategyKind) -> Self {
        Self {
            kind,
            alpha: 0.5,
            p_threshold: 0.05,
        }
    }

    pub fn ml() -> Self {
        Self::new(StrategyKind::Ml)
    }

    pub fn firth() -> Self {
        Self::new(StrategyKind::Firth)
    }

    pub fn ridge() -> Self {
        Self::new(StrategyKind::Ridge)
    }

    pub fn lasso() -> Self {
        Self::new(StrategyKind::Lasso)
    }

    pub fn elastic_net(alpha: f64) -> Self {
        Self {
            alpha,
            ..Self::new(StrategyKind::ElasticNet)
        }
    }

    pub fn stepwise_aic() -> Self {
        Self::new(StrategyKind::StepwiseAic)
    }

    pub fn stepwise_bic() -> Self {
        Self::new(StrategyKind::StepwiseBic)
    }

    pub fn stepwise_p(threshold: f64) -> Self {
        Self {
            p_threshold: threshold,
            ..Self::new(StrategyKind::StepwiseP)
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        if !(0.0..=1.0).contains(&self.alpha) {
            return Err(format!("alpha must lie in [0,1], got {}", self.alpha));
        }
        if !(self.p_threshold > 0.0 && self.p_threshold < 1.0) {
            return Err(format!(
                "p_threshold must lie in (0,1), got {}",
                self.p_threshold
            ));
        }
        Ok(())
    }

    /// The elastic-net mixing weight implied by the kind: 0 for ridge,
    /// 1 for lasso, the configured `alpha` for elastic-net.
    pub fn mixing(&self) -> f64 {
        match self.kind {
            StrategyKind::Ridge => 0.0,
            StrategyKind::Lasso => 1.0,
            _ => self.alpha,
        }
    }

    pub fn is_penalized(&self) -> bool {
        matches!(
            self.kind,
            StrategyKind::Ridge | StrategyKind::Lasso | StrategyKind::ElasticNet
        )
    }

    pub fn label(&self) -> &'static str {
        match self.kind {
            StrategyKind::Ml => "ml",
            StrategyKind::Firth => "firth",
            StrategyKind::Ridge => "ridge",
            StrategyKind::Lasso => "lasso",
            StrategyKind::ElasticNet => "enet",
            StrategyKind::StepwiseAic => "step-aic",
            StrategyKind::StepwiseBic => "step-bic",
            StrategyKind::StepwiseP => "step-p",
        }
    }
}

/// Iteration limits and tolerances shared by the fitters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FitControls {
    /// Newton/IRLS iteration cap for ML and Firth fits.
    pub max_iter: usize,
    /// Convergence tolerance on the infinity norm of the score vector.
    pub score_tol: f64,
    /// Convergence tolerance on the largest coefficient change.
    pub coef_tol: f64,
    /// Total coordinate-descent sweep budget for penalized fits.
    pub max_sweeps: usize,
    /// Standardized-scale coefficient magnitude that declares separation.
    pub divergence_bound: f64,
}

impl Default for FitControls {
    fn default() -> Self {
        Self {
            max_iter: 50,
            score_tol: 1e-8,
            coef_tol: 1e-7,
            max_sweeps: 1000,
            divergence_bound: 15.0,
        }
    }
}

/// Binomial log-likelihood `Σ y_i ln π_i + (1-y_i) ln(1-π_i)`, always
/// nonpositive (risks are clamped away from exact 0/1).
pub fn log_likelihood(model: &FittedModel, data: &Dataset) -> f64 {
    let mut acc = 0.0;
    for i in 0..data.n() {
        let p = model.predict_risk(data.row(i));
        let y = data.outcomes()[i];
        acc += y * p.ln() + (1.0 - y) * (1.0 - p).ln();
    }
    acc
}

pub(crate) fn check_both_classes(data: &Dataset) -> Result<(), crate::error::FitError> {
    let events = data.events();
    if events == 0 || events == data.n() {
        return Err(crate::error::FitError::AllSameOutcome);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;

    #[test]
    fn log_likelihood_at_null_model() {
        let data = Dataset::with_default_names(
            vec![1.0, 0.0, 1.0, 0.0],
            Matrix::from_rows(&[vec![1.0], vec![2.0], vec![3.0], vec![4.0]]),
        )
        .unwrap();
        let model = FittedModel::intercept_only(0.0, 1, "ml");
        let ll = log_likelihood(&model, &data);
        assert!((ll - 4.0 * 0.5f64.ln()).abs() < 1e-12);
        assert!((ll + 2.7726).abs() < 1e-4);
    }

    #[test]
    fn log_likelihood_matches_direct_summation() {
        let data = Dataset::with_default_names(
            vec![1.0, 0.0, 1.0],
            Matrix::from_rows(&[vec![0.5, -1.0], vec![1.5, 0.3], vec![-0.7, 2.0]]),
        )
        .unwrap();
        let model = FittedModel {
            intercept: 0.2,
            coefficients: vec![0.8, -0.4],
            selected: vec![true, true],
            strategy_tag: "ml".into(),
            converged: true,
            iterations: 1,
        };
        let mut direct = 0.0;
        for i in 0..3 {
            let eta = 0.2 + 0.8 * data.row(i)[0] - 0.4 * data.row(i)[1];
            let p = crate::data::sigmoid(eta);
            direct += data.outcomes()[i] * p.ln() + (1.0 - data.outcomes()[i]) * (1.0 - p).ln();
        }
        assert!((log_likelihood(&model, &data) - direct).abs() < 1e-12);
        assert!(log_likelihood(&model, &data) <= 0.0);
    }

    #[test]
    fn perfect_fit_approaches_zero_from_below() {
        let data = Dataset::with_default_names(
            vec![1.0, 0.0],
            Matrix::from_rows(&[vec![1.0], vec![-1.0]]),
        )
        .unwrap();
        let model = FittedModel {
            intercept: 0.0,
            coefficients: vec![50.0],
            selected: vec![true],
            strategy_tag: "ml".into(),
            converged: true,
            iterations: 1,
        };
        let ll = log_likelihood(&model, &data);
        assert!(ll < 0.0 && ll > -1e-9);
    }

    #[test]
    fn strategy_validation() {
        assert!(Strategy::elastic_net(1.5).validate().is_err());
        assert!(Strategy::stepwise_p(0.0).validate().is_err());
        assert!(Strategy::elastic_net(0.5).validate().is_ok());
        assert_eq!(Strategy::ridge().mixing(), 0.0);
        assert_eq!(Strategy::lasso().mixing(), 1.0);
        assert_eq!(Strategy::elastic_net(0.3).mixing(), 0.3);
    }
}
