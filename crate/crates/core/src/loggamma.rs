//! The log-gamma distribution.
//!
//! ```text
//! LogGamma(x | ν, λ, α) = 1/(Γ(α)|λ|) · exp{ α u − e^u },   u = (x−ν)/λ
//! ```
//!
//! A three-parameter, whole-line family: the logarithm of a gamma variate.
//! `LogGamma(ν, λ, α) ~ ln(Amoroso(0, e^ν, α, 1/λ))`, and the Gumbel family
//! sits inside it at `α = 1` with negative scale. Every moment exists, in
//! closed form through excess kurtosis via polygamma functions.

#[allow(unused_imports)]
use num_traits::Float;

use alloc::vec;
use alloc::vec::Vec;
use rand::Rng;

use crate::error::Error;
use crate::random::ln_std_gamma;
use crate::specfun::{
    digamma_raw, inv_reg_gamma_p_raw, inv_reg_gamma_q_raw, ln_gamma_raw, polygamma_raw,
    reg_gamma_q_raw,
};
use crate::summary::{DistributionSummary, Support};

/// A log-gamma distribution with validated parameters
/// (location `ν`, scale `λ ≠ 0`, shape `α > 0`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogGamma {
    nu: f64,
    lambda: f64,
    alpha: f64,
}

impl LogGamma {
    pub fn new(nu: f64, lambda: f64, alpha: f64) -> Result<Self, Error> {
        if !nu.is_finite() {
            return Err(Error::InvalidParam {
                name: "nu",
                value: nu,
                requirement: "finite",
            });
        }
        if !lambda.is_finite() || lambda == 0.0 {
            return Err(Error::InvalidParam {
                name: "lambda",
                value: lambda,
                requirement: "finite and nonzero",
            });
        }
        if !alpha.is_finite() || alpha <= 0.0 {
            return Err(Error::InvalidParam {
                name: "alpha",
                value: alpha,
                requirement: "finite and > 0",
            });
        }
        Ok(LogGamma { nu, lambda, alpha })
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// The whole real line.
    pub fn support(&self) -> Support {
        Support::whole_line()
    }

    /// Natural log of the density: `α u − e^u − ln Γ(α) − ln|λ|`.
    /// Finite for every finite `x`.
    pub fn log_pdf(&self, x: f64) -> f64 {
        if x.is_nan() {
            return f64::NAN;
        }
        if x.is_infinite() {
            return f64::NEG_INFINITY;
        }
        let u = (x - self.nu) / self.lambda;
        -ln_gamma_raw(self.alpha) - self.lambda.abs().ln() + self.alpha * u - u.exp()
    }

    pub fn pdf(&self, x: f64) -> f64 {
        self.log_pdf(x).exp()
    }

    /// `P(α, e^u) = 1 − Q(α, e^u)` for `λ > 0`, else `Q(α, e^u)`.
    pub fn cdf(&self, x: f64) -> f64 {
        if x.is_nan() {
            return f64::NAN;
        }
        let u = (x - self.nu) / self.lambda;
        let q = reg_gamma_q_raw(self.alpha, u.exp());
        if self.lambda > 0.0 {
            1.0 - q
        } else {
            q
        }
    }

    /// Survival function on the complementary `Q` branch.
    pub fn survival(&self, x: f64) -> f64 {
        if x.is_nan() {
            return f64::NAN;
        }
        let u = (x - self.nu) / self.lambda;
        let q = reg_gamma_q_raw(self.alpha, u.exp());
        if self.lambda > 0.0 {
            q
        } else {
            1.0 - q
        }
    }

    /// Quantile: `x = ν + λ ln(w)` with `w` the matching inverse of `Q`.
    pub fn quantile(&self, q: f64) -> Result<f64, Error> {
        if q.is_nan() || q <= 0.0 || q >= 1.0 {
            return Err(Error::Domain {
                func: "quantile",
                arg: "q",
                value: q,
                requirement: "0 < q < 1",
            });
        }
        let w = if self.lambda > 0.0 {
            inv_reg_gamma_p_raw(self.alpha, q)
        } else {
            inv_reg_gamma_q_raw(self.alpha, q)
        };
        Ok(self.nu + self.lambda * w.ln())
    }

    /// Mode `ν + λ ln α`: the stationary point of the log-density,
    /// `α/λ − e^u/λ = 0 ⇒ u = ln α`.
    pub fn mode(&self) -> f64 {
        self.nu + self.lambda * self.alpha.ln()
    }

    /// Mean `ν + λ ψ(α)`.
    pub fn mean(&self) -> f64 {
        self.nu + self.lambda * digamma_raw(self.alpha)
    }

    /// Variance `λ² ψ₁(α)`.
    pub fn variance(&self) -> f64 {
        self.lambda * self.lambda * polygamma_raw(1, self.alpha)
    }

    /// Skewness `sgn(λ) ψ₂(α)/ψ₁(α)^(3/2)`.
    pub fn skewness(&self) -> f64 {
        let t = polygamma_raw(1, self.alpha);
        self.lambda.signum() * polygamma_raw(2, self.alpha) / (t * t.sqrt())
    }

    /// Excess kurtosis `ψ₃(α)/ψ₁(α)²` (0 in the normal limit α → ∞).
    pub fn kurtosis_excess(&self) -> f64 {
        let t = polygamma_raw(1, self.alpha);
        polygamma_raw(3, self.alpha) / (t * t)
    }

    /// Cumulant generating function `ln E[e^(tX)] = νt + ln Γ(α+λt) − ln Γ(α)`,
    /// defined for `α + λt > 0`.
    pub fn cgf(&self, t: f64) -> Result<f64, Error> {
        let shifted = self.alpha + self.lambda * t;
        if shifted.is_nan() || shifted <= 0.0 {
            return Err(Error::Domain {
                func: "cgf",
                arg: "t",
                value: t,
                requirement: "alpha + lambda*t > 0",
            });
        }
        Ok(self.nu * t + ln_gamma_raw(shifted) - ln_gamma_raw(self.alpha))
    }

    /// Differential entropy `ln(Γ(α)|λ|) − α ψ(α) + α` in nats.
    pub fn entropy(&self) -> f64 {
        ln_gamma_raw(self.alpha) + self.lambda.abs().ln() - self.alpha * digamma_raw(self.alpha)
            + self.alpha
    }

    /// One draw: `ν + λ ln G` with `G` standard gamma.
    pub fn sample_one<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        self.nu + self.lambda * ln_std_gamma(rng, self.alpha)
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R, n: usize) -> Vec<f64> {
        let mut out = vec![0.0; n];
        for slot in out.iter_mut() {
            *slot = self.sample_one(rng);
        }
        out
    }

    pub fn summary(&self) -> DistributionSummary {
        DistributionSummary {
            support: self.support(),
            mode: self.mode(),
            mean: Some(self.mean()),
            variance: Some(self.variance()),
            entropy: self.entropy(),
            // Every moment exists in this family.
            side_conditions: vec![],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Amoroso;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

    fn lg(nu: f64, lambda: f64, alpha: f64) -> LogGamma {
        LogGamma::new(nu, lambda, alpha).unwrap()
    }

    fn std_gumbel() -> LogGamma {
        lg(0.0, -1.0, 1.0)
    }

    fn assert_close(got: f64, want: f64, tol: f64) {
        assert!(
            (got - want).abs() <= tol * want.abs().max(1.0),
            "got {got}, want {want}"
        );
    }

    fn argmax_pdf(d: &LogGamma, lo: f64, hi: f64) -> f64 {
        let phi = (5.0_f64.sqrt() - 1.0) / 2.0;
        let (mut lo, mut hi) = (lo, hi);
        for _ in 0..200 {
            let c = hi - phi * (hi - lo);
            let x = lo + phi * (hi - lo);
            if d.pdf(c) > d.pdf(x) {
                hi = x;
            } else {
                lo = c;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn parameter_validation() {
        assert!(LogGamma::new(0.0, 1.0, 1.0).is_ok());
        assert!(LogGamma::new(f64::NAN, 1.0, 1.0).is_err());
        assert!(LogGamma::new(0.0, 0.0, 1.0).is_err());
        assert!(LogGamma::new(0.0, 1.0, 0.0).is_err());
        assert!(LogGamma::new(0.0, 1.0, -1.0).is_err());
    }

    #[test]
    fn log_pdf_examples() {
        assert_close(std_gumbel().log_pdf(0.0), -1.0, 1e-14);
        assert_close(lg(0.0, 1.0, 1.0).log_pdf(0.0), -1.0, 1e-14);
        // ln((1/Γ(2))·2²·e⁻²) = ln 4 − 2 at x = ln 2.
        assert_close(
            lg(0.0, 1.0, 2.0).log_pdf(core::f64::consts::LN_2),
            4.0_f64.ln() - 2.0,
            1e-14,
        );
        assert_eq!(lg(0.0, 1.0, 1.0).log_pdf(f64::INFINITY), f64::NEG_INFINITY);
        assert_eq!(
            lg(0.0, 1.0, 1.0).log_pdf(f64::NEG_INFINITY),
            f64::NEG_INFINITY
        );
    }

    #[test]
    fn cdf_examples() {
        // Standard Gumbel cdf is exp(−e^(−x)).
        let g = std_gumbel();
        assert_close(g.cdf(0.0), (-1.0_f64).exp(), 1e-14);
        for x in [-2.0, -0.5, 0.0, 1.0, 3.0] {
            assert_close(g.cdf(x), (-(-x).exp()).exp(), 1e-13);
        }
        // Reflection of the previous.
        assert_close(lg(0.0, 1.0, 1.0).cdf(0.0), 1.0 - (-1.0_f64).exp(), 1e-14);
    }

    #[test]
    fn cdf_matches_log_chi_square_identity() {
        // LogGamma(ln 2, 1, k/2) is the log of a chi-square: its cdf at x
        // equals the chi-square cdf at e^x.
        let k = 5.0;
        let lcs = lg(core::f64::consts::LN_2, 1.0, k / 2.0);
        let cs = Amoroso::new(0.0, 2.0, k / 2.0, 1.0).unwrap();
        for x in [-3.0, -1.0, 0.0, 0.7, 2.0, 3.5] {
            assert_close(lcs.cdf(x), cs.cdf(x.exp()), 1e-13);
        }
    }

    #[test]
    fn quantile_examples() {
        assert_close(std_gumbel().quantile((-1.0_f64).exp()).unwrap(), 0.0, 1e-12);
        assert_close(
            lg(0.0, 1.0, 1.0)
                .quantile(1.0 - (-1.0_f64).exp())
                .unwrap(),
            0.0,
            1e-12,
        );
        assert!(std_gumbel().quantile(0.0).is_err());
    }

    #[test]
    fn quantile_monotone_and_round_trips() {
        for d in [std_gumbel(), lg(1.0, 2.0, 0.5), lg(-1.0, -0.5, 3.0)] {
            let mut prev = f64::NEG_INFINITY;
            for i in 1..100 {
                let q = i as f64 / 100.0;
                let x = d.quantile(q).unwrap();
                assert!(x > prev, "not monotone at q={q}");
                prev = x;
                assert!((d.cdf(x) - q).abs() <= 1e-9);
            }
        }
    }

    #[test]
    fn mode_examples() {
        assert_close(lg(0.0, 1.0, 1.0).mode(), 0.0, 1e-14);
        let d = lg(0.0, 1.0, core::f64::consts::E);
        assert_close(d.mode(), 1.0, 1e-14);
        assert_close(argmax_pdf(&d, -5.0, 6.0), 1.0, 1e-6);
        let r = lg(5.0, -2.0, core::f64::consts::E);
        assert_close(r.mode(), 3.0, 1e-14);
        assert_close(argmax_pdf(&r, -6.0, 12.0), 3.0, 1e-6);
    }

    #[test]
    fn std_gumbel_moments() {
        let g = std_gumbel();
        assert_close(g.mean(), EULER_GAMMA, 1e-12);
        assert_close(g.variance(), core::f64::consts::PI.powi(2) / 6.0, 1e-12);
        assert_close(g.skewness(), 1.139_547_099_404_648_7, 1e-10);
        assert_close(g.kurtosis_excess(), 2.4, 1e-10);
    }

    #[test]
    fn cgf_examples() {
        assert_close(lg(0.0, 1.0, 1.0).cgf(1.0).unwrap(), 0.0, 1e-14);
        assert_close(lg(3.0, -2.0, 1.5).cgf(0.0).unwrap(), 0.0, 1e-14);
        assert_close(lg(0.0, 1.0, 3.0).cgf(1.0).unwrap(), 3.0_f64.ln(), 1e-13);
        // Domain edge: α + λt must stay strictly positive.
        assert!(lg(0.0, 1.0, 1.0).cgf(-1.0).is_err());
        assert!(lg(0.0, -2.0, 1.0).cgf(0.4).is_ok());
        assert!(lg(0.0, -2.0, 1.0).cgf(0.5).is_err());
    }

    #[test]
    fn cgf_derivatives_reproduce_moments() {
        for d in [std_gumbel(), lg(1.0, 0.7, 2.5), lg(-2.0, -1.3, 0.8)] {
            let c = |t: f64| d.cgf(t).unwrap();
            let h = 1e-5;
            let d1 = (c(h) - c(-h)) / (2.0 * h);
            assert_close(d1, d.mean(), 1e-6);
            // Wider step for the second difference: it divides rounding
            // noise by h², so 1e-5 would leave only ~5 good digits.
            let h = 1e-4;
            let d2 = (c(h) - 2.0 * c(0.0) + c(-h)) / (h * h);
            assert_close(d2, d.variance(), 1e-5);
        }
    }

    #[test]
    fn entropy_examples() {
        assert_close(std_gumbel().entropy(), 1.0 + EULER_GAMMA, 1e-13);
        assert_close(
            lg(0.0, 2.0, 1.0).entropy(),
            1.0 + EULER_GAMMA + core::f64::consts::LN_2,
            1e-13,
        );
        let want = 0.924_794_175_264_543_9; // ln Γ(3) − 3ψ(3) + 3
        assert_close(lg(0.0, 1.0, 3.0).entropy(), want, 1e-13);
    }

    #[test]
    fn sampling_basics() {
        let g = std_gumbel();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(g.sample(&mut rng, 0).is_empty());
        let n = 100_000;
        let draws = g.sample(&mut rng, n);
        let mean = draws.iter().sum::<f64>() / n as f64;
        let band = 4.0 * g.variance().sqrt() / (n as f64).sqrt();
        assert!((mean - EULER_GAMMA).abs() < band);
    }

    #[test]
    fn log_of_amoroso_identity() {
        // LogGamma(ν, λ, α) ~ ln(Amoroso(0, e^ν, α, 1/λ)): pointwise cdf
        // identity, not just in distribution.
        for (nu, lambda, alpha) in [(0.0, 1.0, 1.0), (0.5, -2.0, 3.0), (-1.0, 0.4, 0.7)] {
            let l = lg(nu, lambda, alpha);
            let a = Amoroso::new(0.0, nu.exp(), alpha, 1.0 / lambda).unwrap();
            for i in 1..40 {
                let q = i as f64 / 40.0;
                let x = l.quantile(q).unwrap();
                assert!(
                    (l.cdf(x) - a.cdf(x.exp())).abs() <= 1e-12,
                    "nu={nu} lambda={lambda} alpha={alpha} x={x}"
                );
            }
        }
    }

    proptest::proptest! {
        #[test]
        fn reflection_identity(
            nu in -3.0..3.0f64,
            lambda in 0.2..4.0f64,
            alpha in 0.1..20.0f64,
            x in -10.0..10.0f64,
        ) {
            let d = lg(nu, lambda, alpha);
            let r = lg(nu, -lambda, alpha);
            let lhs = r.pdf(2.0 * nu - x);
            let rhs = d.pdf(x);
            proptest::prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs().max(1e-300));
        }

        #[test]
        fn quantile_round_trip_prop(
            nu in -3.0..3.0f64,
            lambda in 0.2..4.0f64,
            alpha in 0.1..20.0f64,
            neg in proptest::bool::ANY,
            q in 0.001..0.999f64,
        ) {
            let lambda = if neg { -lambda } else { lambda };
            let d = lg(nu, lambda, alpha);
            let x = d.quantile(q).unwrap();
            proptest::prop_assert!((d.cdf(x) - q).abs() <= 1e-9);
        }
    }
}
