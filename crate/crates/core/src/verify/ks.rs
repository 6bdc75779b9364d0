//! One-sample two-sided Kolmogorov-Smirnov test against an analytic cdf,
//! with the asymptotic Kolmogorov distribution for thresholds and p-values.

#[allow(unused_imports)]
use num_traits::Float;

use alloc::format;
use alloc::string::String;

use super::CheckReport;
use crate::error::Error;

/// Fixed suite significance: 0.01 two-sided.
pub const KS_SIGNIFICANCE: f64 = 0.01;

/// Minimum sample size for the asymptotic distribution to be trustworthy.
pub const KS_MIN_SAMPLES: usize = 100;

/// The two-sided statistic `Dₙ = sup |F̂ − F|`.
pub fn ks_statistic<F: Fn(f64) -> f64>(samples: &[f64], cdf: F) -> f64 {
    let mut xs = samples.to_vec();
    xs.sort_unstable_by(f64::total_cmp);
    let n = xs.len() as f64;
    let mut d = 0.0f64;
    for (i, &x) in xs.iter().enumerate() {
        let fx = cdf(x);
        d = d.max((i + 1) as f64 / n - fx).max(fx - i as f64 / n);
    }
    d
}

/// Survival function of the Kolmogorov distribution,
/// `P(K > λ) = 2 Σ (−1)^(k−1) exp(−2k²λ²)`.
pub fn kolmogorov_sf(lambda: f64) -> f64 {
    if lambda <= 0.0 {
        return 1.0;
    }
    let mut sum = 0.0;
    let mut sign = 1.0;
    for k in 1..200 {
        let kf = k as f64;
        let term = (-2.0 * kf * kf * lambda * lambda).exp();
        sum += sign * term;
        if term < 1e-18 {
            break;
        }
        sign = -sign;
    }
    (2.0 * sum).clamp(0.0, 1.0)
}

/// Critical value of `Dₙ` at the given significance (asymptotic).
pub fn ks_critical(n: usize, significance: f64) -> f64 {
    // Invert the Kolmogorov survival function by bisection.
    let (mut lo, mut hi) = (0.2f64, 4.0f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if kolmogorov_sf(mid) > significance {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi) / (n as f64).sqrt()
}

/// Run the test: pass iff `Dₙ` stays below the 1% critical value.
pub fn ks_test<F: Fn(f64) -> f64>(
    name: impl Into<String>,
    samples: &[f64],
    cdf: F,
) -> Result<CheckReport, Error> {
    if samples.len() < KS_MIN_SAMPLES {
        return Err(Error::InsufficientSamples {
            got: samples.len(),
            min: KS_MIN_SAMPLES,
        });
    }
    let d = ks_statistic(samples, cdf);
    let threshold = ks_critical(samples.len(), KS_SIGNIFICANCE);
    let p = kolmogorov_sf(d * (samples.len() as f64).sqrt());
    Ok(CheckReport {
        name: name.into(),
        statistic: d,
        threshold,
        passed: d <= threshold,
        detail: format!("n={}, p~{:.3e}", samples.len(), p),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Amoroso;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn critical_value_matches_known_constant() {
        // c(0.01) = 1.6276 for the asymptotic Kolmogorov distribution.
        let c = ks_critical(1, KS_SIGNIFICANCE);
        assert!((c - 1.6276).abs() < 1e-3, "{c}");
        assert!((kolmogorov_sf(1.6276) - 0.01).abs() < 1e-4);
    }

    #[test]
    fn sampler_self_test_passes() {
        let d = Amoroso::new(0.0, 1.0, 1.0, 1.0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let xs = d.sample(&mut rng, 100_000);
        let rep = ks_test("exp-self", &xs, |x| d.cdf(x)).unwrap();
        assert!(rep.passed, "{rep}");
    }

    #[test]
    fn mismatched_cdf_fails() {
        let d = Amoroso::new(0.0, 1.0, 1.0, 1.0).unwrap();
        let ray = Amoroso::new(0.0, 2.0_f64.sqrt(), 1.0, 2.0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let xs = d.sample(&mut rng, 100_000);
        let rep = ks_test("exp-vs-rayleigh", &xs, |x| ray.cdf(x)).unwrap();
        assert!(!rep.passed, "{rep}");
    }

    #[test]
    fn small_samples_are_rejected() {
        let xs = alloc::vec![0.5; 50];
        assert!(matches!(
            ks_test("too-small", &xs, |_| 0.5),
            Err(Error::InsufficientSamples { got: 50, min: 100 })
        ));
    }
}
