//! Discrimination and deviance measures.

use crate::data::Dataset;
use crate::data::FittedModel;
use crate::error::MetricError;

/// Risk scores paired with binary outcomes.
#[derive(Debug, Clone)]
pub struct ScoredOutcomes<'a> {
    pub scores: &'a [f64],
    pub outcomes: &'a [f64],
}

impl<'a> ScoredOutcomes<'a> {
    pub fn new(scores: &'a [f64], outcomes: &'a [f64]) -> Result<Self, MetricError> {
        if scores.len() != outcomes.len() {
            return Err(MetricError::LengthMismatch {
                scores: scores.len(),
                outcomes: outcomes.len(),
            });
        }
        Ok(Self { scores, outcomes })
    }
}

/// Concordance statistic: over all event/non-event pairs, the fraction in
/// which the event subject has the larger score, counting ties as 1/2.
///
/// Computed in O(n log n) via midranks; identical to explicit pair
/// enumeration. Constant scores give exactly 0.5. Values below 0.5 indicate
/// anti-discrimination and are reported as-is.
pub fn c_statistic(s: &ScoredOutcomes<'_>) -> Result<f64, MetricError> {
    let n = s.scores.len();
    let n_event = s.outcomes.iter().filter(|&&y| y == 1.0).count();
    let n_non = n - n_event;
    if n_event == 0 || n_non == 0 {
        return Err(MetricError::UndefinedC);
    }
    // Sort once, assign midranks to ties, and sum ranks over events:
    // U = R_events - n1(n1+1)/2, C = U / (n1*n0).
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        s.scores[a]
            .partial_cmp(&s.scores[b])
            .expect("risk scores must not be NaN")
    });
    let mut rank_sum_events = 0.0_f64;
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && s.scores[order[j + 1]] == s.scores[order[i]] {
            j += 1;
        }
        // midrank of the tie group occupying positions i..=j (1-based ranks)
        let midrank = (i + 1 + j + 1) as f64 / 2.0;
        let mut events_in_group = 0usize;
        for &idx in &order[i..=j] {
            if s.outcomes[idx] == 1.0 {
                events_in_group += 1;
            }
        }
        rank_sum_events += midrank * events_in_group as f64;
        i = j + 1;
    }
    let n1 = n_event as f64;
    let u = rank_sum_events - n1 * (n1 + 1.0) / 2.0;
    Ok(u / (n1 * n_non as f64))
}

/// C-statistic of a fitted model's risk scores on a dataset.
pub fn model_c_statistic(model: &FittedModel, data: &Dataset) -> Result<f64, MetricError> {
    let scores = model.risks(data.predictors());
    c_statistic(&ScoredOutcomes::new(&scores, data.outcomes())?)
}

/// Deviance `-2 * log_likelihood(model, data)`, always nonnegative.
pub fn deviance(model: &FittedModel, data: &Dataset) -> f64 {
    -2.0 * crate::estimators::log_likelihood(model, data)
}

/// Held-out deviance contribution of scored outcomes, `-2 Σ [y ln p + (1-y) ln(1-p)]`.
pub fn deviance_of_scores(scores: &[f64], outcomes: &[f64]) -> f64 {
    let mut acc = 0.0;
    for (&p, &y) in scores.iter().zip(outcomes) {
        acc += y * p.ln() + (1.0 - y) * (1.0 - p).ln();
    }
    -2.0 * acc
}

#[cfg(test)]
pub(crate) fn c_statistic_pairwise(scores: &[f64], outcomes: &[f64]) -> Option<f64> {
    let mut num = 0.0_f64;
    let mut pairs = 0.0_f64;
    for (i, (&si, &yi)) in scores.iter().zip(outcomes).enumerate() {
        if yi != 1.0 {
            continue;
        }
        for (j, (&sj, &yj)) in scores.iter().zip(outcomes).enumerate() {
            if i == j || yj != 0.0 {
                continue;
            }
            pairs += 1.0;
            if si > sj {
                num += 1.0;
            } else if si == sj {
                num += 0.5;
            }
        }
    }
    if pairs == 0.0 {
        None
    } else {
        Some(num / pairs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn perfect_separation_gives_one() {
        let s = ScoredOutcomes::new(&[0.9, 0.8, 0.2, 0.1], &[1.0, 1.0, 0.0, 0.0]).unwrap();
        assert_eq!(c_statistic(&s).unwrap(), 1.0);
    }

    #[test]
    fn constant_scores_give_half() {
        let s = ScoredOutcomes::new(&[0.3, 0.3, 0.3, 0.3], &[1.0, 0.0, 1.0, 0.0]).unwrap();
        assert_eq!(c_statistic(&s).unwrap(), 0.5);
    }

    #[test]
    fn hand_enumerated_example() {
        let s = ScoredOutcomes::new(&[0.8, 0.3, 0.6, 0.2], &[1.0, 0.0, 0.0, 1.0]).unwrap();
        assert_eq!(c_statistic(&s).unwrap(), 0.5);
    }

    #[test]
    fn undefined_without_both_classes() {
        let s = ScoredOutcomes::new(&[0.1, 0.2], &[1.0, 1.0]).unwrap();
        assert_eq!(c_statistic(&s), Err(MetricError::UndefinedC));
    }

    #[test]
    fn rank_sum_matches_pairwise_enumeration_exactly() {
        let mut rng = crate::rng::stream(42, crate::rng::Domain::DataGen, 0, 0);
        for case in 0..1000 {
            let n = rng.gen_range(2..=50);
            // draw from a small grid so ties are common
            let scores: Vec<f64> = (0..n).map(|_| rng.gen_range(0..8) as f64 / 7.0).collect();
            let outcomes: Vec<f64> = (0..n).map(|_| f64::from(rng.gen_range(0..2))).collect();
            let fast = c_statistic(&ScoredOutcomes::new(&scores, &outcomes).unwrap()).ok();
            let slow = c_statistic_pairwise(&scores, &outcomes);
            assert_eq!(fast, slow, "case {case}: {scores:?} {outcomes:?}");
        }
    }

    #[test]
    fn invariant_under_monotone_transform_and_flip() {
        let mut rng = crate::rng::stream(43, crate::rng::Domain::DataGen, 0, 0);
        for _ in 0..200 {
            let n = rng.gen_range(4..=40);
            let scores: Vec<f64> = (0..n).map(|_| rng.gen_range(-3.0..3.0)).collect();
            let mut outcomes: Vec<f64> = (0..n).map(|_| f64::from(rng.gen_range(0..2))).collect();
            outcomes[0] = 1.0;
            outcomes[1] = 0.0;
            let raw = c_statistic(&ScoredOutcomes::new(&scores, &outcomes).unwrap()).unwrap();
            let transformed: Vec<f64> = scores.iter().map(|&v| crate::data::sigmoid(v)).collect();
            let tr = c_statistic(&ScoredOutcomes::new(&transformed, &outcomes).unwrap()).unwrap();
            assert!((raw - tr).abs() < 1e-14);
            // continuous scores: ties have probability zero, so flipping
            // outcomes mirrors the statistic
            let flipped: Vec<f64> = outcomes.iter().map(|&y| 1.0 - y).collect();
            let fl = c_statistic(&ScoredOutcomes::new(&scores, &flipped).unwrap()).unwrap();
            assert!((raw - (1.0 - fl)).abs() < 1e-12);
        }
    }
}
