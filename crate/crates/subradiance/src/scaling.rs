//! Log-log power-law regression for decay-rate and infidelity scaling laws.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Least-squares fit of `log(value) = exponent * log(n) + log(prefactor)`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScalingFit {
    pub exponent: f64,
    pub prefactor: f64,
    pub r_squared: f64,
    pub samples: Vec<(f64, f64)>,
}

/// Fit a power law to `(n, value)` samples. Requires at least 4 samples
/// with strictly positive values.
pub fn fit_scaling(samples: &[(f64, f64)]) -> Result<ScalingFit> {
    if samples.len() < 4 {
        return Err(Error::InsufficientSamples(samples.len()));
    }
    for &(n, v) in samples {
        if !(v > 0.0) {
            return Err(Error::NonpositiveSample(v));
        }
        if !(n > 0.0) {
            return Err(Error::NonpositiveSample(n));
        }
    }
    let logs: Vec<(f64, f64)> = samples.iter().map(|&(n, v)| (n.ln(), v.ln())).collect();
    let m = logs.len() as f64;
    let sx: f64 = logs.iter().map(|p| p.0).sum();
    let sy: f64 = logs.iter().map(|p| p.1).sum();
    let sxx: f64 = logs.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = logs.iter().map(|p| p.0 * p.1).sum();
    let denom = m * sxx - sx * sx;
    let slope = (m * sxy - sx * sy) / denom;
    let intercept = (sy - slope * sx) / m;

    let mean_y = sy / m;
    let ss_tot: f64 = logs.iter().map(|p| (p.1 - mean_y).powi(2)).sum();
    let ss_res: f64 = logs
        .iter()
        .map(|p| (p.1 - slope * p.0 - intercept).powi(2))
        .sum();
    let r_squared = if ss_tot > 0.0 {
        1.0 - ss_res / ss_tot
    } else {
        1.0
    };

    Ok(ScalingFit {
        exponent: slope,
        prefactor: intercept.exp(),
        r_squared,
        samples: samples.to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_power_law() {
        let samples: Vec<(f64, f64)> = [10.0, 20.0, 40.0, 80.0]
            .iter()
            .map(|&n: &f64| (n, 7.0 * n.powi(-3)))
            .collect();
        let fit = fit_scaling(&samples).unwrap();
        assert!((fit.exponent + 3.0).abs() < 1e-12);
        assert!((fit.prefactor - 7.0).abs() < 1e-10);
        assert!((fit.r_squared - 1.0).abs() < 1e-12);
    }

    #[test]
    fn refuses_short_or_nonpositive_input() {
        assert!(matches!(
            fit_scaling(&[(1.0, 1.0), (2.0, 2.0), (3.0, 3.0)]),
            Err(Error::InsufficientSamples(3))
        ));
        assert!(matches!(
            fit_scaling(&[(1.0, 1.0), (2.0, 2.0), (3.0, 3.0), (4.0, 0.0)]),
            Err(Error::NonpositiveSample(_))
        ));
    }
}
