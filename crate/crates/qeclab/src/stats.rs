//! Summary statistics, scaling-law fits, threshold interpolation, and
//! binomial confidence bounds used by the experiment runners.

use crate::error::{Error, Result};

/// Mean and standard error of a batch of samples.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SummaryStats {
    pub mean: f64,
    /// Sample standard deviation divided by sqrt(count); 0 for one sample.
    pub stderr: f64,
    pub count: usize,
}

/// Summarize samples into mean and standard error.
pub fn summarize(samples: &[f64]) -> Result<SummaryStats> {
    if samples.is_empty() {
        return Err(Error::InvalidArgument("cannot summarize zero samples".into()));
    }
    let n = samples.len();
    let mean = samples.iter().sum::<f64>() / n as f64;
    let stderr = if n == 1 {
        0.0
    } else {
        (sample_variance(samples) / n as f64).sqrt()
    };
    Ok(SummaryStats {
        mean,
        stderr,
        count: n,
    })
}

/// Unbiased (n-1) sample variance; 0 for fewer than two samples.
pub fn sample_variance(samples: &[f64]) -> f64 {
    let n = samples.len();
    if n < 2 {
        return 0.0;
    }
    let mean = samples.iter().sum::<f64>() / n as f64;
    samples.iter().map(|s| (s - mean) * (s - mean)).sum::<f64>() / (n - 1) as f64
}

/// Spread of per-group means in excess of their own sampling noise:
/// `sqrt(max(0, Var(means) - mean(noise_variances)))`. Used to isolate
/// code-to-code fluctuations from Monte Carlo error within each code.
pub fn excess_std(means: &[f64], noise_variances: &[f64]) -> f64 {
    debug_assert_eq!(means.len(), noise_variances.len());
    let noise = noise_variances.iter().sum::<f64>() / noise_variances.len().max(1) as f64;
    (sample_variance(means) - noise).max(0.0).sqrt()
}

/// Functional form fitted against data, `y = a * g(x) + b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalingModel {
    /// `g(x) = log2 x`
    Log2,
    /// `g(x) = sqrt x`
    Sqrt,
    /// `g(x) = x`
    Linear,
}

impl ScalingModel {
    pub fn name(&self) -> &'static str {
        match self {
            ScalingModel::Log2 => "log",
            ScalingModel::Sqrt => "sqrt",
            ScalingModel::Linear => "linear",
        }
    }

    fn g(&self, x: f64) -> f64 {
        match self {
            ScalingModel::Log2 => x.log2(),
            ScalingModel::Sqrt => x.sqrt(),
            ScalingModel::Linear => x,
        }
    }
}

/// Least-squares fit of `y = slope * g(x) + intercept`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScalingFit {
    pub model: ScalingModel,
    pub slope: f64,
    pub intercept: f64,
    /// Sum of squared residuals, for model comparison.
    pub residual: f64,
    /// Coefficient of determination.
    pub r_squared: f64,
}

/// Fit `y = a g(x) + b` by ordinary least squares.
pub fn fit_scaling(xs: &[f64], ys: &[f64], model: ScalingModel) -> Result<ScalingFit> {
    if xs.len() != ys.len() {
        return Err(Error::InvalidArgument(format!(
            "{} x values against {} y values",
            xs.len(),
            ys.len()
        )));
    }
    if xs.len() < 3 {
        return Err(Error::InvalidArgument(format!(
            "scaling fits need at least 3 points, got {}",
            xs.len()
        )));
    }
    if matches!(model, ScalingModel::Log2) && xs.iter().any(|&x| x <= 0.0) {
        return Err(Error::InvalidArgument("log model needs positive x".into()));
    }
    if matches!(model, ScalingModel::Sqrt) && xs.iter().any(|&x| x < 0.0) {
        return Err(Error::InvalidArgument("sqrt model needs x >= 0".into()));
    }
    let n = xs.len() as f64;
    let gs: Vec<f64> = xs.iter().map(|&x| model.g(x)).collect();
    let sg: f64 = gs.iter().sum();
    let sgg: f64 = gs.iter().map(|g| g * g).sum();
    let sy: f64 = ys.iter().sum();
    let sgy: f64 = gs.iter().zip(ys).map(|(g, y)| g * y).sum();
    let det = n * sgg - sg * sg;
    let scale = n * sgg.max(1.0);
    if det.abs() < 1e-12 * scale {
        return Err(Error::SingularFit(format!(
            "design is degenerate for the {} model",
            model.name()
        )));
    }
    let slope = (n * sgy - sg * sy) / det;
    let intercept = (sy * sgg - sg * sgy) / det;
    let residual: f64 = gs
        .iter()
        .zip(ys)
        .map(|(g, y)| {
            let r = y - slope * g - intercept;
            r * r
        })
        .sum();
    let mean_y = sy / n;
    let total: f64 = ys.iter().map(|y| (y - mean_y) * (y - mean_y)).sum();
    let r_squared = if total > 1e-300 {
        1.0 - residual / total
    } else if residual < 1e-300 {
        1.0
    } else {
        0.0
    };
    Ok(ScalingFit {
        model,
        slope,
        intercept,
        residual,
        r_squared,
    })
}

/// Interpolated x-position where a sorted `(x, y)` series first reaches
/// `target`, linear between the bracketing points.
pub fn interpolate_dstar(series: &[(f64, f64)], target: f64) -> Result<f64> {
    if series.windows(2).any(|w| w[0].0 >= w[1].0) {
        return Err(Error::InvalidArgument(
            "series must be sorted by strictly increasing depth".into(),
        ));
    }
    for (i, &(x, y)) in series.iter().enumerate() {
        if y == target {
            return Ok(x);
        }
        if let Some(&(x2, y2)) = series.get(i + 1) {
            if (y - target) * (y2 - target) < 0.0 {
                return Ok(x + (target - y) * (x2 - x) / (y2 - y));
            }
        }
    }
    let lo = series.first().map_or(f64::NAN, |p| p.0);
    let hi = series.last().map_or(f64::NAN, |p| p.0);
    Err(Error::NoCrossing { lo, hi, target })
}

/// Wilson score upper confidence bound for a binomial proportion.
pub fn wilson_upper(successes: usize, trials: usize, z: f64) -> f64 {
    assert!(trials > 0, "Wilson bound needs at least one trial");
    let n = trials as f64;
    let p = successes as f64 / n;
    let zz = z * z;
    let denom = 1.0 + zz / n;
    let center = (p + zz / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + zz / (4.0 * n * n)).sqrt() / denom;
    (center + half).min(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn summaries_match_hand_arithmetic() {
        let s = summarize(&[1.0, 1.0, 1.0, 1.0]).unwrap();
        assert_eq!((s.mean, s.stderr, s.count), (1.0, 0.0, 4));
        let s = summarize(&[0.0, 1.0]).unwrap();
        assert!((s.mean - 0.5).abs() < 1e-15);
        assert!((s.stderr - 0.5).abs() < 1e-15);
        assert!(summarize(&[]).is_err());
        let one = summarize(&[3.25]).unwrap();
        assert_eq!((one.mean, one.stderr), (3.25, 0.0));
    }

    #[test]
    fn coin_flips_center_on_a_half() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let flips: Vec<f64> = (0..10_000).map(|_| f64::from(rng.gen::<bool>())).collect();
        let s = summarize(&flips).unwrap();
        assert!((s.mean - 0.5).abs() < 5.0 * s.stderr, "{s:?}");
    }

    #[test]
    fn exact_log_data_is_recovered() {
        let xs: Vec<f64> = (1..=8).map(|i| (i * i) as f64).collect();
        let ys: Vec<f64> = xs.iter().map(|x| 3.0 * x.log2() + 1.0).collect();
        let fit = fit_scaling(&xs, &ys, ScalingModel::Log2).unwrap();
        assert!((fit.slope - 3.0).abs() < 1e-10);
        assert!((fit.intercept - 1.0).abs() < 1e-10);
        assert!(fit.residual < 1e-10);
        assert!(fit.r_squared > 0.999999);
    }

    #[test]
    fn model_identification_on_clean_sqrt_data() {
        let xs: Vec<f64> = (1..=10).map(|i| (4 * i) as f64).collect();
        let ys: Vec<f64> = xs.iter().map(|x| 2.0 * x.sqrt()).collect();
        let sqrt_fit = fit_scaling(&xs, &ys, ScalingModel::Sqrt).unwrap();
        let log_fit = fit_scaling(&xs, &ys, ScalingModel::Log2).unwrap();
        assert!(sqrt_fit.residual < log_fit.residual);
    }

    #[test]
    fn degenerate_designs_are_rejected() {
        let xs = [5.0, 5.0, 5.0];
        let ys = [1.0, 2.0, 3.0];
        assert!(matches!(
            fit_scaling(&xs, &ys, ScalingModel::Linear),
            Err(Error::SingularFit(_))
        ));
        assert!(fit_scaling(&[1.0, 2.0], &[1.0, 2.0], ScalingModel::Linear).is_err());
        assert!(fit_scaling(&[0.0, 1.0, 2.0], &ys, ScalingModel::Log2).is_err());
        assert!(fit_scaling(&[-1.0, 1.0, 2.0], &ys, ScalingModel::Sqrt).is_err());
    }

    #[test]
    fn dstar_interpolation() {
        let d = interpolate_dstar(&[(4.0, 0.8), (8.0, 0.3)], 0.5).unwrap();
        assert!((d - 6.4).abs() < 1e-12);
        let exact = interpolate_dstar(&[(2.0, 0.9), (6.0, 0.5), (10.0, 0.1)], 0.5).unwrap();
        assert_eq!(exact, 6.0);
        // First crossing wins when the series re-crosses.
        let first =
            interpolate_dstar(&[(0.0, 0.8), (2.0, 0.4), (4.0, 0.6), (6.0, 0.2)], 0.5).unwrap();
        assert!((first - 1.5).abs() < 1e-12);
        assert!(matches!(
            interpolate_dstar(&[(0.0, 0.9), (2.0, 0.8)], 0.5),
            Err(Error::NoCrossing { .. })
        ));
        assert!(interpolate_dstar(&[(2.0, 0.9), (1.0, 0.1)], 0.5).is_err());
    }

    #[test]
    fn dstar_inside_range_on_noisy_monotone_sweeps() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let series: Vec<(f64, f64)> = (0..12)
                .map(|i| {
                    let x = i as f64;
                    let y = 1.0 / (1.0 + (0.7 * (x - 6.0)).exp()) + rng.gen_range(-0.02..0.02);
                    (x, y)
                })
                .collect();
            let d = interpolate_dstar(&series, 0.5).unwrap();
            assert!((0.0..=11.0).contains(&d), "d* {d} escaped the range");
        }
    }

    #[test]
    fn wilson_bounds_behave() {
        let none = wilson_upper(0, 200, 1.96);
        assert!((none - 0.018845).abs() < 1e-4, "{none}");
        assert!((wilson_upper(200, 200, 1.96) - 1.0).abs() < 1e-12);
        let mut last = 0.0;
        for k in 0..=20 {
            let u = wilson_upper(k, 20, 1.96);
            assert!(u > last);
            last = u;
        }
        assert!(wilson_upper(3, 200, 1.96) > 3.0 / 200.0);
    }

    #[test]
    fn excess_std_subtracts_sampling_noise() {
        // Means that vary only through sampling noise: excess ~ 0.
        let means = [0.5, 0.52, 0.48, 0.51, 0.49];
        let noise = [0.00025; 5];
        let excess = excess_std(&means, &noise);
        assert!(excess < 0.012, "excess {excess}");
        // Means with real spread keep most of it.
        let spread_means = [0.3, 0.5, 0.7, 0.4, 0.6];
        let small_noise = [1e-6; 5];
        let kept = excess_std(&spread_means, &small_noise);
        assert!((kept - sample_variance(&spread_means).sqrt()).abs() < 1e-2);
    }
}
