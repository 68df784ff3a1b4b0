//! Maximum-likelihood logistic regression via Newton iterations.

use crate::data::{logit, sigmoid, Dataset, FittedModel};
use crate::error::FitError;
use crate::linalg::cholesky;

use super::{check_both_classes, FitControls, StdDesign};

/// Solution on the standardized scale, shared with the stepwise driver.
pub(crate) struct MlSolution {
    /// `[intercept, slopes...]` over the design columns.
    pub beta: Vec<f64>,
    pub log_likelihood: f64,
    pub iterations: usize,
}

/// Fit the logistic model by maximum likelihood.
///
/// Converges when the raw-scale score vector (intercept column included)
/// satisfies `|X^T (y - pi)|_inf <= score_tol`. Separation is declared when
/// a standardized slope passes the divergence bound or predicted risks pin
/// to 0/1 while the score is still large.
pub fn fit_ml(data: &Dataset, controls: &FitControls) -> Result<FittedModel, FitError> {
    check_both_classes(data)?;
    let design = StdDesign::build(data);
    let sol = fit_ml_on_design(&design, data.outcomes(), controls, None)?;
    Ok(design.to_model(&sol.beta, "ml", true, sol.iterations))
}

/// Newton solver on a prepared design. `warm` seeds the coefficient vector
/// (stepwise refits); otherwise the intercept starts at logit of the event
/// fraction with zero slopes.
pub(crate) fn fit_ml_on_design(
    design: &StdDesign,
    y: &[f64],
    controls: &FitControls,
    warm: Option<&[f64]>,
) -> Result<MlSolution, FitError> {
    let n = design.n();
    let q = design.q();
    let dim = q + 1;
    let mut beta: Vec<f64> = match warm {
        Some(b) => b.to_vec(),
        None => {
            let ybar = y.iter().sum::<f64>() / n as f64;
            let mut b = vec![0.0; dim];
            b[0] = logit(ybar);
            b
        }
    };

    let mut eta = Vec::with_capacity(n);
    for iter in 1..=controls.max_iter {
        design.linear_predictors(&beta, &mut eta);
        let pi: Vec<f64> = eta.iter().map(|&e| sigmoid(e)).collect();
        let ll = log_likelihood_of(&pi, y);

        // score on the standardized design
        let mut score = vec![0.0; dim];
        for i in 0..n {
            let r = y[i] - pi[i];
            score[0] += r;
            let row = design.x.row(i);
            for c in 0..q {
                score[c + 1] += row[c] * r;
            }
        }
        // raw-scale score via the affine relation
        // raw_j = mean_j * s0 + scale_j * s_j, raw intercept = s0
        let mut raw_inf = score[0].abs();
        for c in 0..q {
            let raw = design.active_mean(c) * score[0] + design.active_scale(c) * score[c + 1];
            raw_inf = raw_inf.max(raw.abs());
        }
        if raw_inf <= controls.score_tol {
            return Ok(MlSolution {
                beta,
                log_likelihood: ll,
                iterations: iter - 1,
            });
        }

        if let Some(c) = (0..q).find(|&c| beta[c + 1].abs() > controls.divergence_bound) {
            return Err(FitError::Separation(format!(
                "standardized coefficient {} exceeded {} in magnitude",
                c + 1,
                controls.divergence_bound
            )));
        }
        if pi.iter().any(|&p| p <= 1e-10 || p >= 1.0 - 1e-10) {
            return Err(FitError::Separation(
                "predicted probabilities pinned at 0/1 while the score is above tolerance".into(),
            ));
        }

        let mut info = vec![0.0; dim * dim];
        for i in 0..n {
            let w = pi[i] * (1.0 - pi[i]);
            let row = design.x.row(i);
            info[0] += w;
            for a in 0..q {
                let wa = w * row[a];
                info[a + 1] += wa; // (a+1, 0) entry, column-0 block
                for b in a..q {
                    info[(a + 1) * dim + (b + 1)] += wa * row[b];
                }
            }
        }
        // mirror into a full symmetric buffer
        for a in 0..dim {
            for b in 0..a {
                info[a * dim + b] = info[b * dim + a];
            }
        }
        let chol = cholesky(&info, dim).ok_or(FitError::SingularInformation)?;
        let delta = chol.solve(&score);

        // step-halving keeps the likelihood monotone
        let mut step = 1.0;
        let mut accepted = false;
        for _ in 0..8 {
            let cand: Vec<f64> = beta
                .iter()
                .zip(&delta)
                .map(|(b, d)| b + step * d)
                .collect();
            design.linear_predictors(&cand, &mut eta);
            let ll_cand = log_likelihood_of_eta(&eta, y);
            if ll_cand >= ll - 1e-12 {
                beta = cand;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if !accepted {
            return Err(FitError::NonConvergence);
        }
        ll_old = ll;
    }
    let _ = ll_old;
    Err(FitError::MaxIterations(controls.max_iter))
}

fn log_likelihood_of(pi: &[f64], y: &[f64]) -> f64 {
    pi.iter()
        .zip(y)
        .map(|(&p, &yi)| yi * p.ln() + (1.0 - yi) * (1.0 - p).ln())
        .sum()
}

fn log_likelihood_of_eta(eta: &[f64], y: &[f64]) -> f64 {
    eta.iter()
        .zip(y)
        .map(|(&e, &yi)| {
            let p = sigmoid(e);
            yi * p.ln() + (1.0 - yi) * (1.0 - p).ln()
        })
        .sum()
}
