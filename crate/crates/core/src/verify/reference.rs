//! Reference densities transcribed term-for-term from each named
//! distribution's own defining formula, in direct (non-log) arithmetic.
//!
//! These are the master anti-typo oracles: every catalog mapping is checked
//! against the named form it claims to be, so a wrong constant in either
//! place shows up as a pointwise density mismatch. Normal and log-normal
//! references also back the limit suites.

#[allow(unused_imports)]
use num_traits::Float;

use core::f64::consts::{FRAC_PI_2, PI, SQRT_2};

use crate::catalog::Params;
use crate::specfun::{ln_gamma_raw, reg_gamma_q_raw};

fn gamma_fn(x: f64) -> f64 {
    ln_gamma_raw(x).exp()
}

/// Standard normal cdf through the half-shape incomplete gamma:
/// `Q(1/2, z²/2) = erfc(|z|/√2)`.
pub fn std_normal_cdf(z: f64) -> f64 {
    if z == 0.0 {
        return 0.5;
    }
    let half_q = 0.5 * reg_gamma_q_raw(0.5, 0.5 * z * z);
    if z > 0.0 {
        1.0 - half_q
    } else {
        half_q
    }
}

/// Normal density.
pub fn normal_pdf(mu: f64, sigma: f64, x: f64) -> f64 {
    let z = (x - mu) / sigma;
    (-0.5 * z * z).exp() / (sigma * (2.0 * PI).sqrt())
}

/// Normal cdf.
pub fn normal_cdf(mu: f64, sigma: f64, x: f64) -> f64 {
    std_normal_cdf((x - mu) / sigma)
}

/// Log-normal density with location `a`, median scale `ϑ`, and log-space
/// width `σ` (normalized; mass 1 on `x > a`).
pub fn lognormal_pdf(a: f64, vartheta: f64, sigma: f64, x: f64) -> f64 {
    let u = (x - a) / vartheta;
    if u <= 0.0 {
        return 0.0;
    }
    let t = u.ln() / sigma;
    (-0.5 * t * t).exp() / (vartheta * u * sigma * (2.0 * PI).sqrt())
}

/// Log-normal cdf.
pub fn lognormal_cdf(a: f64, vartheta: f64, sigma: f64, x: f64) -> f64 {
    let u = (x - a) / vartheta;
    if u <= 0.0 {
        return 0.0;
    }
    std_normal_cdf(u.ln() / sigma)
}

/// Fisher-Tippett cdf in the maxima convention (`β/ω < 0`):
/// `exp{−((x−a)/ω)^β}` on the support, continued by 0/1 outside.
pub fn fisher_tippett_max_cdf(a: f64, omega: f64, beta: f64, x: f64) -> f64 {
    debug_assert!(beta / omega < 0.0);
    let z = (x - a) / omega;
    if z <= 0.0 {
        return if omega < 0.0 { 1.0 } else { 0.0 };
    }
    (-(beta * z.ln()).exp()).exp()
}

// ---------------------------------------------------------------------------
// Transcribed named densities. Each takes the entry's named parameters and
// returns the density at x (0 outside the support). Evaluation happens at
// interior points, so boundary conventions are irrelevant here.
// ---------------------------------------------------------------------------

fn g(m: &Params, k: &str) -> f64 {
    m.get(k).expect("case parameter")
}

pub fn amoroso(m: &Params, x: f64) -> f64 {
    let (a, th, al, be) = (g(m, "a"), g(m, "theta"), g(m, "alpha"), g(m, "beta"));
    let z = (x - a) / th;
    if z <= 0.0 {
        return 0.0;
    }
    (be / th).abs() / gamma_fn(al) * z.powf(al * be - 1.0) * (-z.powf(be)).exp()
}

pub fn stacy(m: &Params, x: f64) -> f64 {
    let (th, al, be) = (g(m, "theta"), g(m, "alpha"), g(m, "beta"));
    let z = x / th;
    if z <= 0.0 {
        return 0.0;
    }
    (be / th).abs() / gamma_fn(al) * z.powf(al * be - 1.0) * (-z.powf(be)).exp()
}

pub fn gen_fisher_tippett(m: &Params, x: f64) -> f64 {
    let (a, om, n, be) = (g(m, "a"), g(m, "omega"), g(m, "n"), g(m, "beta"));
    let u = (x - a) / om;
    if u <= 0.0 {
        return 0.0;
    }
    n.powf(n) / gamma_fn(n) * (be / om).abs() * u.powf(n * be - 1.0) * (-n * u.powf(be)).exp()
}

pub fn fisher_tippett(m: &Params, x: f64) -> f64 {
    let (a, om, be) = (g(m, "a"), g(m, "omega"), g(m, "beta"));
    let u = (x - a) / om;
    if u <= 0.0 {
        return 0.0;
    }
    (be / om).abs() * u.powf(be - 1.0) * (-u.powf(be)).exp()
}

pub fn frechet(m: &Params, x: f64) -> f64 {
    let (a, om, bb) = (g(m, "a"), g(m, "omega"), g(m, "beta_bar"));
    let u = (x - a) / om;
    if u <= 0.0 {
        return 0.0;
    }
    bb / om.abs() * u.powf(-bb - 1.0) * (-u.powf(-bb)).exp()
}

pub fn gen_frechet(m: &Params, x: f64) -> f64 {
    let (a, om, n, bb) = (g(m, "a"), g(m, "omega"), g(m, "n"), g(m, "beta_bar"));
    let u = (x - a) / om;
    if u <= 0.0 {
        return 0.0;
    }
    n.powf(n) / gamma_fn(n) * bb / om.abs() * u.powf(-n * bb - 1.0) * (-n * u.powf(-bb)).exp()
}

pub fn scaled_inv_chi(m: &Params, x: f64) -> f64 {
    let (s, k) = (g(m, "sigma"), g(m, "k"));
    if x <= 0.0 {
        return 0.0;
    }
    let root = (2.0 * s * s).sqrt();
    2.0 * root / gamma_fn(k / 2.0)
        * (1.0 / (root * x)).powf(k + 1.0)
        * (-1.0 / (2.0 * s * s * x * x)).exp()
}

pub fn inv_chi(m: &Params, x: f64) -> f64 {
    let k = g(m, "k");
    if x <= 0.0 {
        return 0.0;
    }
    2.0 * SQRT_2 / gamma_fn(k / 2.0) * (1.0 / (SQRT_2 * x)).powf(k + 1.0)
        * (-1.0 / (2.0 * x * x)).exp()
}

pub fn inv_rayleigh(m: &Params, x: f64) -> f64 {
    let s = g(m, "sigma");
    if x <= 0.0 {
        return 0.0;
    }
    let root = (2.0 * s * s).sqrt();
    2.0 * root * (1.0 / (root * x)).powi(3) * (-1.0 / (2.0 * s * s * x * x)).exp()
}

pub fn pearson_v(m: &Params, x: f64) -> f64 {
    let (a, th, al) = (g(m, "a"), g(m, "theta"), g(m, "alpha"));
    let w = th / (x - a);
    if w <= 0.0 {
        return 0.0;
    }
    1.0 / (gamma_fn(al) * th.abs()) * w.powf(al + 1.0) * (-w).exp()
}

pub fn inv_gamma(m: &Params, x: f64) -> f64 {
    let (th, al) = (g(m, "theta"), g(m, "alpha"));
    let w = th / x;
    if w <= 0.0 {
        return 0.0;
    }
    1.0 / (gamma_fn(al) * th.abs()) * w.powf(al + 1.0) * (-w).exp()
}

pub fn scaled_inv_chi_sqr(m: &Params, x: f64) -> f64 {
    let (s, k) = (g(m, "sigma"), g(m, "k"));
    if x <= 0.0 {
        return 0.0;
    }
    let v = 2.0 * s * s;
    v / gamma_fn(k / 2.0) * (1.0 / (v * x)).powf(k / 2.0 + 1.0) * (-1.0 / (v * x)).exp()
}

pub fn inv_chi_sqr(m: &Params, x: f64) -> f64 {
    let k = g(m, "k");
    if x <= 0.0 {
        return 0.0;
    }
    2.0 / gamma_fn(k / 2.0) * (1.0 / (2.0 * x)).powf(k / 2.0 + 1.0) * (-1.0 / (2.0 * x)).exp()
}

pub fn levy(m: &Params, x: f64) -> f64 {
    let (a, c) = (g(m, "a"), g(m, "c"));
    if x <= a {
        return 0.0;
    }
    (c / (2.0 * PI)).sqrt() / (x - a).powf(1.5) * (-c / (2.0 * (x - a))).exp()
}

pub fn inv_exp(m: &Params, x: f64) -> f64 {
    let th = g(m, "theta");
    let w = th / x;
    if w <= 0.0 {
        return 0.0;
    }
    th.abs() / (x * x) * (-w).exp()
}

pub fn pearson_iii(m: &Params, x: f64) -> f64 {
    let (a, th, al) = (g(m, "a"), g(m, "theta"), g(m, "alpha"));
    let z = (x - a) / th;
    if z <= 0.0 {
        return 0.0;
    }
    1.0 / (gamma_fn(al) * th.abs()) * z.powf(al - 1.0) * (-z).exp()
}

pub fn gamma(m: &Params, x: f64) -> f64 {
    let (th, al) = (g(m, "theta"), g(m, "alpha"));
    let z = x / th;
    if z <= 0.0 {
        return 0.0;
    }
    1.0 / (gamma_fn(al) * th.abs()) * z.powf(al - 1.0) * (-z).exp()
}

pub fn erlang(m: &Params, x: f64) -> f64 {
    let (th, n) = (g(m, "theta"), g(m, "n"));
    let z = x / th;
    if z <= 0.0 {
        return 0.0;
    }
    1.0 / (gamma_fn(n) * th) * z.powf(n - 1.0) * (-z).exp()
}

pub fn std_gamma(m: &Params, x: f64) -> f64 {
    let al = g(m, "alpha");
    if x <= 0.0 {
        return 0.0;
    }
    x.powf(al - 1.0) * (-x).exp() / gamma_fn(al)
}

pub fn scaled_chi_sqr(m: &Params, x: f64) -> f64 {
    let (s, k) = (g(m, "sigma"), g(m, "k"));
    if x <= 0.0 {
        return 0.0;
    }
    let v = 2.0 * s * s;
    1.0 / (v * gamma_fn(k / 2.0)) * (x / v).powf(k / 2.0 - 1.0) * (-x / v).exp()
}

pub fn chi_sqr(m: &Params, x: f64) -> f64 {
    let k = g(m, "k");
    if x <= 0.0 {
        return 0.0;
    }
    1.0 / (2.0 * gamma_fn(k / 2.0)) * (x / 2.0).powf(k / 2.0 - 1.0) * (-x / 2.0).exp()
}

pub fn shift_exp(m: &Params, x: f64) -> f64 {
    let (a, th) = (g(m, "a"), g(m, "theta"));
    let z = (x - a) / th;
    if z < 0.0 {
        return 0.0;
    }
    (-z).exp() / th.abs()
}

pub fn exponential(m: &Params, x: f64) -> f64 {
    let th = g(m, "theta");
    let z = x / th;
    if z < 0.0 {
        return 0.0;
    }
    (-z).exp() / th.abs()
}

pub fn std_exp(_: &Params, x: f64) -> f64 {
    if x < 0.0 {
        return 0.0;
    }
    (-x).exp()
}

pub fn wien(m: &Params, x: f64) -> f64 {
    let t = g(m, "T");
    let z = x / t;
    if z <= 0.0 {
        return 0.0;
    }
    1.0 / (gamma_fn(4.0) * t) * z.powi(3) * (-z).exp()
}

pub fn nakagami(m: &Params, x: f64) -> f64 {
    let (a, th, mm) = (g(m, "a"), g(m, "theta"), g(m, "m"));
    let z = (x - a) / th;
    if z <= 0.0 {
        return 0.0;
    }
    2.0 / (gamma_fn(mm / 2.0) * th.abs()) * z.powf(mm - 1.0) * (-z * z).exp()
}

pub fn scaled_chi(m: &Params, x: f64) -> f64 {
    let (s, k) = (g(m, "sigma"), g(m, "k"));
    if x <= 0.0 {
        return 0.0;
    }
    let root = (2.0 * s * s).sqrt();
    2.0 / (gamma_fn(k / 2.0) * root) * (x / root).powf(k - 1.0)
        * (-x * x / (2.0 * s * s)).exp()
}

pub fn chi(m: &Params, x: f64) -> f64 {
    let k = g(m, "k");
    if x <= 0.0 {
        return 0.0;
    }
    SQRT_2 / gamma_fn(k / 2.0) * (x / SQRT_2).powf(k - 1.0) * (-x * x / 2.0).exp()
}

pub fn half_normal(m: &Params, x: f64) -> f64 {
    let s = g(m, "sigma");
    if x < 0.0 {
        return 0.0;
    }
    2.0 / (2.0 * PI * s * s).sqrt() * (-x * x / (2.0 * s * s)).exp()
}

pub fn rayleigh(m: &Params, x: f64) -> f64 {
    let s = g(m, "sigma");
    if x < 0.0 {
        return 0.0;
    }
    x / (s * s) * (-x * x / (2.0 * s * s)).exp()
}

pub fn maxwell(m: &Params, x: f64) -> f64 {
    let s = g(m, "sigma");
    if x < 0.0 {
        return 0.0;
    }
    SQRT_2 / (PI.sqrt() * s * s * s) * x * x * (-x * x / (2.0 * s * s)).exp()
}

pub fn wilson_hilferty(m: &Params, x: f64) -> f64 {
    let (th, al) = (g(m, "theta"), g(m, "alpha"));
    let z = x / th;
    if z <= 0.0 {
        return 0.0;
    }
    3.0 / (gamma_fn(al) * th.abs()) * z.powf(3.0 * al - 1.0) * (-z.powi(3)).exp()
}

pub fn gen_weibull(m: &Params, x: f64) -> f64 {
    let (a, om, n, be) = (g(m, "a"), g(m, "omega"), g(m, "n"), g(m, "beta"));
    let u = (x - a) / om;
    if u <= 0.0 {
        return 0.0;
    }
    n.powf(n) / gamma_fn(n) * be / om.abs() * u.powf(n * be - 1.0) * (-n * u.powf(be)).exp()
}

pub fn weibull(m: &Params, x: f64) -> f64 {
    let (a, om, be) = (g(m, "a"), g(m, "omega"), g(m, "beta"));
    let u = (x - a) / om;
    if u <= 0.0 {
        return 0.0;
    }
    be / om.abs() * u.powf(be - 1.0) * (-u.powf(be)).exp()
}

pub fn pseudo_weibull(m: &Params, x: f64) -> f64 {
    let (th, be) = (g(m, "theta"), g(m, "beta"));
    let z = x / th;
    if z <= 0.0 {
        return 0.0;
    }
    1.0 / gamma_fn(1.0 + 1.0 / be) * be / th.abs() * z.powf(be) * (-z.powf(be)).exp()
}

pub fn stretched_exp(m: &Params, x: f64) -> f64 {
    let (th, be) = (g(m, "theta"), g(m, "beta"));
    let z = x / th;
    if z <= 0.0 {
        return 0.0;
    }
    be / th.abs() * z.powf(be - 1.0) * (-z.powf(be)).exp()
}

pub fn log_gamma(m: &Params, x: f64) -> f64 {
    let (nu, la, al) = (g(m, "nu"), g(m, "lambda"), g(m, "alpha"));
    let u = (x - nu) / la;
    (al * u - u.exp()).exp() / (gamma_fn(al) * la.abs())
}

pub fn std_log_gamma(m: &Params, x: f64) -> f64 {
    let al = g(m, "alpha");
    (al * x - x.exp()).exp() / gamma_fn(al)
}

pub fn log_chi_sqr(m: &Params, x: f64) -> f64 {
    let k = g(m, "k");
    ((k / 2.0) * x - 0.5 * x.exp()).exp() / (2.0f64.powf(k / 2.0) * gamma_fn(k / 2.0))
}

pub fn gen_gumbel(m: &Params, x: f64) -> f64 {
    let (u0, lb, n) = (g(m, "u"), g(m, "lambda_bar"), g(m, "n"));
    let v = (x - u0) / lb;
    n.powf(n) / (gamma_fn(n) * lb.abs()) * (-n * v - n * (-v).exp()).exp()
}

pub fn gumbel(m: &Params, x: f64) -> f64 {
    let (u0, lb) = (g(m, "u"), g(m, "lambda_bar"));
    let v = (x - u0) / lb;
    (-v - (-v).exp()).exp() / lb.abs()
}

pub fn std_gumbel(_: &Params, x: f64) -> f64 {
    (-x - (-x).exp()).exp()
}

pub fn bhp(m: &Params, x: f64) -> f64 {
    let (nu, la) = (g(m, "nu"), g(m, "lambda"));
    let u = (x - nu) / la;
    (FRAC_PI_2 * u - u.exp()).exp() / (gamma_fn(FRAC_PI_2) * la.abs())
}

// ---------------------------------------------------------------------------
// The case table for the catalog-equivalence master check.
// ---------------------------------------------------------------------------

/// One equivalence case: a catalog entry, named parameter values, and the
/// transcribed density to compare against.
pub struct DensityCase {
    pub entry: &'static str,
    pub params: &'static [(&'static str, f64)],
    pub reference_pdf: fn(&Params, f64) -> f64,
}

/// Every constructible entry, with both scale signs wherever the entry
/// admits them.
pub static DENSITY_CASES: &[DensityCase] = &[
    DensityCase { entry: "Amoroso", params: &[("a", 0.5), ("theta", 1.3), ("alpha", 1.7), ("beta", 2.2)], reference_pdf: amoroso },
    DensityCase { entry: "Amoroso", params: &[("a", -1.0), ("theta", -0.8), ("alpha", 2.5), ("beta", -1.3)], reference_pdf: amoroso },
    DensityCase { entry: "Amoroso", params: &[("a", 0.0), ("theta", 2.0), ("alpha", 0.4), ("beta", 0.5)], reference_pdf: amoroso },
    DensityCase { entry: "Stacy", params: &[("theta", 1.5), ("alpha", 2.0), ("beta", 1.5)], reference_pdf: stacy },
    DensityCase { entry: "Stacy", params: &[("theta", -2.0), ("alpha", 0.7), ("beta", -0.6)], reference_pdf: stacy },
    DensityCase { entry: "generalized Fisher-Tippett", params: &[("a", 0.3), ("omega", 1.2), ("n", 3.0), ("beta", 1.4)], reference_pdf: gen_fisher_tippett },
    DensityCase { entry: "generalized Fisher-Tippett", params: &[("a", 0.0), ("omega", -1.5), ("n", 2.0), ("beta", 2.0)], reference_pdf: gen_fisher_tippett },
    DensityCase { entry: "Fisher-Tippett", params: &[("a", 1.0), ("omega", 2.0), ("beta", 1.7)], reference_pdf: fisher_tippett },
    DensityCase { entry: "Fisher-Tippett", params: &[("a", 0.0), ("omega", -1.0), ("beta", 3.0)], reference_pdf: fisher_tippett },
    DensityCase { entry: "Frechet", params: &[("a", 0.5), ("omega", 1.5), ("beta_bar", 2.0)], reference_pdf: frechet },
    DensityCase { entry: "Frechet", params: &[("a", 0.0), ("omega", -2.0), ("beta_bar", 1.2)], reference_pdf: frechet },
    DensityCase { entry: "generalized Frechet", params: &[("a", 0.0), ("omega", 1.0), ("n", 2.0), ("beta_bar", 1.5)], reference_pdf: gen_frechet },
    DensityCase { entry: "scaled inverse chi", params: &[("sigma", 1.3), ("k", 4.0)], reference_pdf: scaled_inv_chi },
    DensityCase { entry: "inverse chi", params: &[("k", 3.0)], reference_pdf: inv_chi },
    DensityCase { entry: "inverse Rayleigh", params: &[("sigma", 0.8)], reference_pdf: inv_rayleigh },
    DensityCase { entry: "Pearson type V", params: &[("a", -0.5), ("theta", 1.4), ("alpha", 2.3)], reference_pdf: pearson_v },
    DensityCase { entry: "Pearson type V", params: &[("a", 1.0), ("theta", -2.0), ("alpha", 1.1)], reference_pdf: pearson_v },
    DensityCase { entry: "inverse gamma", params: &[("theta", 2.0), ("alpha", 3.0)], reference_pdf: inv_gamma },
    DensityCase { entry: "scaled inverse chi-square", params: &[("sigma", 1.1), ("k", 5.0)], reference_pdf: scaled_inv_chi_sqr },
    DensityCase { entry: "inverse chi-square", params: &[("k", 4.0)], reference_pdf: inv_chi_sqr },
    DensityCase { entry: "Levy", params: &[("a", 0.0), ("c", 1.0)], reference_pdf: levy },
    DensityCase { entry: "Levy", params: &[("a", -2.0), ("c", 0.5)], reference_pdf: levy },
    DensityCase { entry: "inverse exponential", params: &[("theta", 1.5)], reference_pdf: inv_exp },
    DensityCase { entry: "Pearson type III", params: &[("a", 2.0), ("theta", 0.7), ("alpha", 3.2)], reference_pdf: pearson_iii },
    DensityCase { entry: "Pearson type III", params: &[("a", 0.0), ("theta", -1.3), ("alpha", 0.9)], reference_pdf: pearson_iii },
    DensityCase { entry: "gamma", params: &[("theta", 2.0), ("alpha", 3.0)], reference_pdf: gamma },
    DensityCase { entry: "gamma", params: &[("theta", -1.0), ("alpha", 0.5)], reference_pdf: gamma },
    DensityCase { entry: "Erlang", params: &[("theta", 1.5), ("n", 4.0)], reference_pdf: erlang },
    DensityCase { entry: "standard gamma", params: &[("alpha", 2.5)], reference_pdf: std_gamma },
    DensityCase { entry: "scaled chi-square", params: &[("sigma", 1.2), ("k", 3.0)], reference_pdf: scaled_chi_sqr },
    DensityCase { entry: "chi-square", params: &[("k", 6.0)], reference_pdf: chi_sqr },
    DensityCase { entry: "chi-square", params: &[("k", 1.0)], reference_pdf: chi_sqr },
    DensityCase { entry: "shifted exponential", params: &[("a", -1.0), ("theta", 2.0)], reference_pdf: shift_exp },
    DensityCase { entry: "exponential", params: &[("theta", 0.8)], reference_pdf: exponential },
    DensityCase { entry: "exponential", params: &[("theta", -2.0)], reference_pdf: exponential },
    DensityCase { entry: "standard exponential", params: &[], reference_pdf: std_exp },
    DensityCase { entry: "Wien", params: &[("T", 1.7)], reference_pdf: wien },
    DensityCase { entry: "Nakagami", params: &[("a", 0.5), ("theta", 1.1), ("m", 3.0)], reference_pdf: nakagami },
    DensityCase { entry: "scaled chi", params: &[("sigma", 0.9), ("k", 4.0)], reference_pdf: scaled_chi },
    DensityCase { entry: "chi", params: &[("k", 3.0)], reference_pdf: chi },
    DensityCase { entry: "half-normal", params: &[("sigma", 1.0)], reference_pdf: half_normal },
    DensityCase { entry: "Rayleigh", params: &[("sigma", 1.0)], reference_pdf: rayleigh },
    DensityCase { entry: "Maxwell", params: &[("sigma", 1.0)], reference_pdf: maxwell },
    DensityCase { entry: "Wilson-Hilferty", params: &[("theta", 1.2), ("alpha", 1.5)], reference_pdf: wilson_hilferty },
    DensityCase { entry: "generalized Weibull", params: &[("a", 0.0), ("omega", 1.5), ("n", 3.0), ("beta", 2.0)], reference_pdf: gen_weibull },
    DensityCase { entry: "Weibull", params: &[("a", 0.0), ("omega", 1.0), ("beta", 2.5)], reference_pdf: weibull },
    DensityCase { entry: "Weibull", params: &[("a", 1.0), ("omega", -1.5), ("beta", 1.5)], reference_pdf: weibull },
    DensityCase { entry: "pseudo-Weibull", params: &[("theta", 1.3), ("beta", 1.8)], reference_pdf: pseudo_weibull },
    DensityCase { entry: "stretched exponential", params: &[("theta", 1.0), ("beta", 0.7)], reference_pdf: stretched_exp },
    DensityCase { entry: "log-gamma", params: &[("nu", 0.5), ("lambda", 1.2), ("alpha", 2.0)], reference_pdf: log_gamma },
    DensityCase { entry: "log-gamma", params: &[("nu", -1.0), ("lambda", -0.7), ("alpha", 0.6)], reference_pdf: log_gamma },
    DensityCase { entry: "standard log-gamma", params: &[("alpha", 1.5)], reference_pdf: std_log_gamma },
    DensityCase { entry: "log-chi-square", params: &[("k", 5.0)], reference_pdf: log_chi_sqr },
    DensityCase { entry: "generalized Gumbel", params: &[("u", 0.3), ("lambda_bar", 1.1), ("n", 2.0)], reference_pdf: gen_gumbel },
    DensityCase { entry: "generalized Gumbel", params: &[("u", 0.0), ("lambda_bar", -0.8), ("n", 3.0)], reference_pdf: gen_gumbel },
    DensityCase { entry: "Gumbel", params: &[("u", 1.0), ("lambda_bar", 2.0)], reference_pdf: gumbel },
    DensityCase { entry: "Gumbel", params: &[("u", 0.0), ("lambda_bar", -1.5)], reference_pdf: gumbel },
    DensityCase { entry: "standard Gumbel", params: &[], reference_pdf: std_gumbel },
    DensityCase { entry: "BHP", params: &[("nu", 0.0), ("lambda", 1.0)], reference_pdf: bhp },
    DensityCase { entry: "BHP", params: &[("nu", 1.0), ("lambda", -2.0)], reference_pdf: bhp },
];
