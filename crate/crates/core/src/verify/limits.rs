//! Limit-theorem checks: parameter substitutions under which one family
//! converges to another (or to normal / log-normal / power-law shapes).
//! Acceptance is monotone decrease of the sup-norm pdf distance across a
//! fixed parameter grid plus an absolute cap at the finest grid point.

#[allow(unused_imports)]
use num_traits::Float;

use alloc::format;
use alloc::vec::Vec;

use super::reference;
use super::CheckReport;
use crate::specfun::{digamma_raw, polygamma_raw};
use crate::{Amoroso, LogGamma};

fn report(name: alloc::string::String, sups: &[f64], cap: f64) -> CheckReport {
    let monotone = sups.windows(2).all(|w| w[1] < w[0]);
    let last = *sups.last().expect("nonempty grid");
    CheckReport {
        name,
        statistic: last,
        threshold: cap,
        passed: monotone && last < cap,
        detail: format!("sup-norm sequence {sups:?}, monotone={monotone}"),
    }
}

/// `LogGamma(ν, λ, α) = lim_{β→∞} Amoroso(ν − βλ, βλ, α, β)`,
/// over β ∈ {10, 100, 1000}; cap 1e-3 at β = 1000.
pub fn loggamma_limit(nu: f64, lambda: f64, alpha: f64) -> CheckReport {
    let target = LogGamma::new(nu, lambda, alpha).unwrap();
    let mean = nu + lambda * digamma_raw(alpha);
    let sd = lambda.abs() * polygamma_raw(1, alpha).sqrt();
    let grid: Vec<f64> = (0..=100)
        .map(|i| mean - 4.0 * sd + 8.0 * sd * i as f64 / 100.0)
        .collect();
    let sups: Vec<f64> = [10.0, 100.0, 1000.0]
        .iter()
        .map(|&beta| {
            let approx = Amoroso::new(nu - beta * lambda, beta * lambda, alpha, beta).unwrap();
            grid.iter()
                .map(|&x| (approx.pdf(x) - target.pdf(x)).abs())
                .fold(0.0, f64::max)
        })
        .collect();
    report(
        format!("limit-loggamma(nu={nu},lambda={lambda},alpha={alpha})"),
        &sups,
        1e-3,
    )
}

/// `Normal(μ, σ) = lim_{α→∞} Amoroso(μ − σ√α, σ/√α, α, 1)`,
/// over α ∈ {10, 10², 10³, 10⁴}; cap 1e-2/(σ√(2π)) at α = 10⁴.
pub fn normal_limit_amoroso(mu: f64, sigma: f64) -> CheckReport {
    let grid: Vec<f64> = (0..=100)
        .map(|i| mu - 4.0 * sigma + 8.0 * sigma * i as f64 / 100.0)
        .collect();
    let sups: Vec<f64> = [10.0, 100.0, 1000.0, 10_000.0]
        .iter()
        .map(|&alpha| {
            let root = alpha.sqrt();
            let approx = Amoroso::new(mu - sigma * root, sigma / root, alpha, 1.0).unwrap();
            grid.iter()
                .map(|&x| (approx.pdf(x) - reference::normal_pdf(mu, sigma, x)).abs())
                .fold(0.0, f64::max)
        })
        .collect();
    let cap = 0.01 / (sigma * (2.0 * core::f64::consts::PI).sqrt());
    report(format!("limit-normal-amoroso(mu={mu},sigma={sigma})"), &sups, cap)
}

/// `Normal(μ, σ) = lim_{α→∞} LogGamma(μ − σ√α ln α, σ√α, α)`,
/// same grid and cap as the Amoroso route.
pub fn normal_limit_loggamma(mu: f64, sigma: f64) -> CheckReport {
    let grid: Vec<f64> = (0..=100)
        .map(|i| mu - 4.0 * sigma + 8.0 * sigma * i as f64 / 100.0)
        .collect();
    let sups: Vec<f64> = [10.0, 100.0, 1000.0, 10_000.0]
        .iter()
        .map(|&alpha| {
            let root = alpha.sqrt();
            let approx = LogGamma::new(mu - sigma * root * alpha.ln(), sigma * root, alpha).unwrap();
            grid.iter()
                .map(|&x| (approx.pdf(x) - reference::normal_pdf(mu, sigma, x)).abs())
                .fold(0.0, f64::max)
        })
        .collect();
    let cap = 0.01 / (sigma * (2.0 * core::f64::consts::PI).sqrt());
    report(format!("limit-normal-loggamma(mu={mu},sigma={sigma})"), &sups, cap)
}

/// `LogNormal(a, ϑ, σ) = lim_{β→0} Amoroso(a, ϑ(βσ)^(2/β), 1/(βσ)², β)`,
/// over β ∈ {1/4, 1/8, 1/16}. The caps are pinned per case from the
/// pre-build calibration (convergence is O(β) here, so they are loose).
pub fn lognormal_limit(a: f64, vartheta: f64, sigma: f64, cap: f64) -> CheckReport {
    let grid: Vec<f64> = (0..=100)
        .map(|i| a + vartheta * (-3.0 * sigma + 6.0 * sigma * i as f64 / 100.0).exp())
        .collect();
    let sups: Vec<f64> = [0.25, 0.125, 0.0625]
        .iter()
        .map(|&beta| {
            let bs = beta * sigma;
            let theta = vartheta * (2.0 / beta * bs.ln()).exp();
            let alpha = 1.0 / (bs * bs);
            let approx = Amoroso::new(a, theta, alpha, beta).unwrap();
            grid.iter()
                .map(|&x| (approx.pdf(x) - reference::lognormal_pdf(a, vartheta, sigma, x)).abs())
                .fold(0.0, f64::max)
        })
        .collect();
    report(
        format!("limit-lognormal(a={a},vartheta={vartheta},sigma={sigma})"),
        &sups,
        cap,
    )
}

/// Power-law shape proportionality: with `α = (1−p)/β` (and sign of β
/// chosen so α > 0), the density ratio on the fixed window `[a+1, a+2]`
/// converges to the ratio of `(x−a)^(−p)` as β → 0. The distribution is
/// explicitly improper in the limit, so only ratios are compared. For
/// p = 1 the coupling degenerates (α would be 0), so α = |β| is used,
/// which drives the exponent αβ − 1 to the same −p.
pub fn powerlaw_shape(a: f64, p: f64) -> CheckReport {
    let grid: Vec<f64> = (0..=50).map(|i| a + 1.0 + i as f64 / 50.0).collect();
    let sups: Vec<f64> = [0.25, 0.125, 0.0625]
        .iter()
        .map(|&b| {
            let (beta, alpha) = if (p - 1.0).abs() < 1e-12 {
                (b, b)
            } else if p < 1.0 {
                (b, (1.0 - p) / b)
            } else {
                (-b, (1.0 - p) / -b)
            };
            let d = Amoroso::new(a, 1.0, alpha, beta).unwrap();
            let base = d.pdf(a + 1.0);
            grid.iter()
                .map(|&x| {
                    let ratio = d.pdf(x) / base;
                    let want = (x - a).powf(-p);
                    (ratio / want - 1.0).abs()
                })
                .fold(0.0, f64::max)
        })
        .collect();
    report(format!("limit-powerlaw-shape(a={a},p={p})"), &sups, 0.05)
}
