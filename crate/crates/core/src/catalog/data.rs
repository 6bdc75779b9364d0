//! The catalog records: one entry per table row, plus the synonym index.
//!
//! Builders map named parameters into family parameters. σ-parameterized
//! rows store σ and derive the scale as θ = (2σ²)^(1/β); the generalized
//! extreme-value rows derive θ = ω/n^(1/β).

#[allow(unused_imports)]
use num_traits::Float;

use core::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, LN_2, SQRT_2};

use super::{CatalogError, CatalogEntry, Constraint, Family, ParamSpec, Params, Pat, Pattern};
use crate::{Amoroso, Dist, LogGamma};

const fn p(name: &'static str, constraint: Constraint) -> ParamSpec {
    ParamSpec { name, constraint }
}

/// Fetch a parameter that `construct` has already validated.
fn req(params: &Params, name: &str) -> f64 {
    params.get(name).expect("parameter validated by construct")
}

fn amoroso(a: f64, theta: f64, alpha: f64, beta: f64) -> Result<Dist, CatalogError> {
    Ok(Dist::Amoroso(Amoroso::new(a, theta, alpha, beta)?))
}

fn log_gamma(nu: f64, lambda: f64, alpha: f64) -> Result<Dist, CatalogError> {
    Ok(Dist::LogGamma(LogGamma::new(nu, lambda, alpha)?))
}

// -- builders: Amoroso family -----------------------------------------------

fn b_amoroso(m: &Params) -> Result<Dist, CatalogError> {
    amoroso(req(m, "a"), req(m, "theta"), req(m, "alpha"), req(m, "beta"))
}

fn b_stacy(m: &Params) -> Result<Dist, CatalogError> {
    amoroso(0.0, req(m, "theta"), req(m, "alpha"), req(m, "beta"))
}

fn gen_fisher_tippett(a: f64, omega: f64, n: f64, beta: f64) -> Result<Dist, CatalogError> {
    amoroso(a, omega / n.powf(1.0 / beta), n, beta)
}

fn b_gen_fisher_tippett(m: &Params) -> Result<Dist, CatalogError> {
    gen_fisher_tippett(req(m, "a"), req(m, "omega"), req(m, "n"), req(m, "beta"))
}

fn b_fisher_tippett(m: &Params) -> Result<Dist, CatalogError> {
    amoroso(req(m, "a"), req(m, "omega"), 1.0, req(m, "beta"))
}

fn b_frechet(m: &Params) -> Result<Dist, CatalogError> {
    amoroso(req(m, "a"), req(m, "omega"), 1.0, -req(m, "beta_bar"))
}

fn b_gen_frechet(m: &Params) -> Result<Dist, CatalogError> {
    gen_fisher_tippett(req(m, "a"), req(m, "omega"), req(m, "n"), -req(m, "beta_bar"))
}

fn b_scaled_inv_chi(m: &Params) -> Result<Dist, CatalogError> {
    let sigma = req(m, "sigma");
    amoroso(0.0, 1.0 / (2.0 * sigma * sigma).sqrt(), req(m, "k") / 2.0, -2.0)
}

fn b_inv_chi(m: &Params) -> Result<Dist, CatalogError> {
    amoroso(0.0, FRAC_1_SQRT_2, req(m, "k") / 2.0, -2.0)
}

fn b_inv_rayleigh(m: &Params) -> Result<Dist, CatalogError> {
    let sigma = req(m, "sigma");
    amoroso(0.0, 1.0 / (2.0 * sigma * sigma).sqrt(), 1.0, -2.0)
}

fn b_pearson_v(m: &Params) -> Result<Dist, CatalogError> {
    amoroso(req(m, "a"), req(m, "theta"), req(m, "alpha"), -1.0)
}

fn b_inv_gamma(m: &Params) -> Result<Dist, CatalogError> {
    amoroso(0.0, req(m, "theta"), req(m, "alpha"), -1.0)
}

fn b_scaled_inv_chi_sqr(m: &Params) -> Result<Dist, CatalogError> {
    let sigma = req(m, "sigma");
    amoroso(0.0, 1.0 / (2.0 * sigma * sigma), req(m, "k") / 2.0, -1.0)
}

fn b_inv_chi_sqr(m: &Params) -> Result<Dist, CatalogError> {
    amoroso(0.0, 0.5, req(m, "k") / 2.0, -1.0)
}

fn b_levy(m: &Params) -> Result<Dist, CatalogError> {
    amoroso(req(m, "a"), req(m, "c") / 2.0, 0.5, -1.0)
}

fn b_inv_exp(m: &Params) -> Result<Dist, CatalogError> {
    amoroso(0.0, req(m, "theta"), 1.0, -1.0)
}

fn b_pearson_iii(m: &Params) -> Result<Dist, CatalogError> {
    amoroso(req(m, "a"), req(m, "theta"), req(m, "alpha"), 1.0)
}

fn b_gamma(m: &Params) -> Result<Dist, CatalogError> {
    amoroso(0.0, req(m, "theta"), req(m, "alpha"), 1.0)
}

fn b_erlang(m: &Params) -> Result<Dist, CatalogError> {
    amoroso(0.0, req(m, "theta"), req(m, "n"), 1.0)
}

fn b_std_gamma(m: &Params) -> Result<Dist, CatalogError> {
    amoroso(0.0, 1.0, req(m, "alpha"), 1.0)
}

fn b_scaled_chi_sqr(m: &Params) -> Result<Dist, CatalogError> {
    let sigma = req(m, "sigma");
    amoroso(0.0, 2.0 * sigma * sigma, req(m, "k") / 2.0, 1.0)
}

fn b_chi_sqr(m: &Params) -> Result<Dist, CatalogError> {
    amoroso(0.0, 2.0, req(m, "k") / 2.0, 1.0)
}

fn b_shift_exp(m: &Params) -> Result<Dist, CatalogError> {
    amoroso(req(m, "a"), req(m, "theta"), 1.0, 1.0)
}

fn b_exp(m: &Params) -> Result<Dist, CatalogError> {
    amoroso(0.0, req(m, "theta"), 1.0, 1.0)
}

fn b_std_exp(_: &Params) -> Result<Dist, CatalogError> {
    amoroso(0.0, 1.0, 1.0, 1.0)
}

fn b_wien(m: &Params) -> Result<Dist, CatalogError> {
    amoroso(0.0, req(m, "T"), 4.0, 1.0)
}

fn b_nakagami(m: &Params) -> Result<Dist, CatalogError> {
    amoroso(req(m, "a"), req(m, "theta"), req(m, "m") / 2.0, 2.0)
}

fn b_scaled_chi(m: &Params) -> Result<Dist, CatalogError> {
    let sigma = req(m, "sigma");
    amoroso(0.0, (2.0 * sigma * sigma).sqrt(), req(m, "k") / 2.0, 2.0)
}

fn b_chi(m: &Params) -> Result<Dist, CatalogError> {
    amoroso(0.0, SQRT_2, req(m, "k") / 2.0, 2.0)
}

fn b_half_normal(m: &Params) -> Result<Dist, CatalogError> {
    let sigma = req(m, "sigma");
    amoroso(0.0, (2.0 * sigma * sigma).sqrt(), 0.5, 2.0)
}

fn b_rayleigh(m: &Params) -> Result<Dist, CatalogError> {
    let sigma = req(m, "sigma");
    amoroso(0.0, (2.0 * sigma * sigma).sqrt(), 1.0, 2.0)
}

fn b_maxwell(m: &Params) -> Result<Dist, CatalogError> {
    let sigma = req(m, "sigma");
    amoroso(0.0, (2.0 * sigma * sigma).sqrt(), 1.5, 2.0)
}

fn b_wilson_hilferty(m: &Params) -> Result<Dist, CatalogError> {
    amoroso(0.0, req(m, "theta"), req(m, "alpha"), 3.0)
}

fn b_gen_weibull(m: &Params) -> Result<Dist, CatalogError> {
    gen_fisher_tippett(req(m, "a"), req(m, "omega"), req(m, "n"), req(m, "beta"))
}

fn b_weibull(m: &Params) -> Result<Dist, CatalogError> {
    amoroso(req(m, "a"), req(m, "omega"), 1.0, req(m, "beta"))
}

fn b_pseudo_weibull(m: &Params) -> Result<Dist, CatalogError> {
    let beta = req(m, "beta");
    amoroso(0.0, req(m, "theta"), 1.0 + 1.0 / beta, beta)
}

fn b_stretched_exp(m: &Params) -> Result<Dist, CatalogError> {
    amoroso(0.0, req(m, "theta"), 1.0, req(m, "beta"))
}

// -- builders: log-gamma family ----------------------------------------------

fn b_log_gamma(m: &Params) -> Result<Dist, CatalogError> {
    log_gamma(req(m, "nu"), req(m, "lambda"), req(m, "alpha"))
}

fn b_std_log_gamma(m: &Params) -> Result<Dist, CatalogError> {
    log_gamma(0.0, 1.0, req(m, "alpha"))
}

fn b_log_chi_sqr(m: &Params) -> Result<Dist, CatalogError> {
    log_gamma(LN_2, 1.0, req(m, "k") / 2.0)
}

fn b_gen_gumbel(m: &Params) -> Result<Dist, CatalogError> {
    let (u, lambda_bar, n) = (req(m, "u"), req(m, "lambda_bar"), req(m, "n"));
    log_gamma(u + lambda_bar * n.ln(), -lambda_bar, n)
}

fn b_gumbel(m: &Params) -> Result<Dist, CatalogError> {
    log_gamma(req(m, "u"), -req(m, "lambda_bar"), 1.0)
}

fn b_std_gumbel(_: &Params) -> Result<Dist, CatalogError> {
    log_gamma(0.0, -1.0, 1.0)
}

fn b_bhp(m: &Params) -> Result<Dist, CatalogError> {
    log_gamma(req(m, "nu"), req(m, "lambda"), FRAC_PI_2)
}

// -- the table ----------------------------------------------------------------

pub(super) static ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "Amoroso",
        synonyms: &["Amaroso", "Stacy-Mihram"],
        family: Family::Amoroso,
        params: &[
            p("a", Constraint::Real),
            p("theta", Constraint::NonZero),
            p("alpha", Constraint::Positive),
            p("beta", Constraint::NonZero),
        ],
        mapping: "Amoroso(a, theta, alpha, beta)",
        anchor: "Amoroso",
        note: "the four-parameter parent of the whole family",
        limit: None,
        build: Some(b_amoroso),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Any,
            theta: Pat::Any,
            alpha: Pat::Any,
            beta: Pat::Any,
        }),
    },
    CatalogEntry {
        name: "Stacy",
        synonyms: &[
            "generalized gamma",
            "hyper gamma",
            "Nukiyama-Tanasawa",
            "generalized semi-normal",
            "hydrograph",
            "Leonard hydrograph",
            "transformed gamma",
            "generalized inverse gamma",
        ],
        family: Family::Amoroso,
        params: &[
            p("theta", Constraint::NonZero),
            p("alpha", Constraint::Positive),
            p("beta", Constraint::NonZero),
        ],
        mapping: "Amoroso(0, theta, alpha, beta)",
        anchor: "Stacy",
        note: "zero-location parent of the gamma subfamily; negative beta gives the inverse members",
        limit: None,
        build: Some(b_stacy),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Eq(0.0),
            theta: Pat::Any,
            alpha: Pat::Any,
            beta: Pat::Any,
        }),
    },
    CatalogEntry {
        name: "generalized Fisher-Tippett",
        synonyms: &[],
        family: Family::Amoroso,
        params: &[
            p("a", Constraint::Real),
            p("omega", Constraint::NonZero),
            p("n", Constraint::PositiveInt),
            p("beta", Constraint::NonZero),
        ],
        mapping: "Amoroso(a, omega/n^(1/beta), n, beta)",
        anchor: "GenFisherTippett",
        note: "asymptotic law of the n-th extreme order statistic",
        limit: None,
        build: Some(b_gen_fisher_tippett),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Any,
            theta: Pat::Any,
            alpha: Pat::PosInt,
            beta: Pat::Any,
        }),
    },
    CatalogEntry {
        name: "Fisher-Tippett",
        synonyms: &[
            "generalized extreme value",
            "GEV",
            "von Mises-Jenkinson",
            "von Mises extreme value",
        ],
        family: Family::Amoroso,
        params: &[
            p("a", Constraint::Real),
            p("omega", Constraint::NonZero),
            p("beta", Constraint::NonZero),
        ],
        mapping: "Amoroso(a, omega, 1, beta)",
        anchor: "FisherTippett",
        note: "superclass of the type I/II/III extreme value laws; maxima for beta/omega < 0, minima otherwise",
        limit: None,
        build: Some(b_fisher_tippett),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Any,
            theta: Pat::Any,
            alpha: Pat::Eq(1.0),
            beta: Pat::Any,
        }),
    },
    CatalogEntry {
        name: "Frechet",
        synonyms: &[
            "Fréchet",
            "extreme value type II",
            "Fisher-Tippett type II",
            "Gumbel type II",
            "inverse Weibull",
        ],
        family: Family::Amoroso,
        params: &[
            p("a", Constraint::Real),
            p("omega", Constraint::NonZero),
            p("beta_bar", Constraint::Positive),
        ],
        mapping: "Amoroso(a, omega, 1, -beta_bar)",
        anchor: "Frechet",
        note: "extreme value law for power-tailed parents",
        limit: None,
        build: Some(b_frechet),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Any,
            theta: Pat::Any,
            alpha: Pat::Eq(1.0),
            beta: Pat::Neg,
        }),
    },
    CatalogEntry {
        name: "generalized Frechet",
        synonyms: &["generalized Fréchet"],
        family: Family::Amoroso,
        params: &[
            p("a", Constraint::Real),
            p("omega", Constraint::NonZero),
            p("n", Constraint::PositiveInt),
            p("beta_bar", Constraint::Positive),
        ],
        mapping: "Amoroso(a, omega*n^(1/beta_bar), n, -beta_bar)",
        anchor: "GenFrechet",
        note: "n-th largest value of power-tailed samples",
        limit: None,
        build: Some(b_gen_frechet),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Any,
            theta: Pat::Any,
            alpha: Pat::PosInt,
            beta: Pat::Neg,
        }),
    },
    CatalogEntry {
        name: "scaled inverse chi",
        synonyms: &[],
        family: Family::Amoroso,
        params: &[p("sigma", Constraint::Positive), p("k", Constraint::PositiveInt)],
        mapping: "Amoroso(0, 1/sqrt(2*sigma^2), k/2, -2)",
        anchor: "ScaledInvChi",
        note: "prior for the standard deviation of a normal",
        limit: None,
        build: Some(b_scaled_inv_chi),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Eq(0.0),
            theta: Pat::Pos,
            alpha: Pat::HalfPosInt,
            beta: Pat::Eq(-2.0),
        }),
    },
    CatalogEntry {
        name: "inverse chi",
        synonyms: &[],
        family: Family::Amoroso,
        params: &[p("k", Constraint::PositiveInt)],
        mapping: "Amoroso(0, 1/sqrt(2), k/2, -2)",
        anchor: "InvChi",
        note: "the standard inverse chi distribution",
        limit: None,
        build: Some(b_inv_chi),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Eq(0.0),
            theta: Pat::Eq(FRAC_1_SQRT_2),
            alpha: Pat::HalfPosInt,
            beta: Pat::Eq(-2.0),
        }),
    },
    CatalogEntry {
        name: "inverse Rayleigh",
        synonyms: &[],
        family: Family::Amoroso,
        params: &[p("sigma", Constraint::Positive)],
        mapping: "Amoroso(0, 1/sqrt(2*sigma^2), 1, -2)",
        anchor: "InvRayleigh",
        note: "a failure-time model",
        limit: None,
        build: Some(b_inv_rayleigh),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Eq(0.0),
            theta: Pat::Pos,
            alpha: Pat::Eq(1.0),
            beta: Pat::Eq(-2.0),
        }),
    },
    CatalogEntry {
        name: "Pearson type V",
        synonyms: &[],
        family: Family::Amoroso,
        params: &[
            p("a", Constraint::Real),
            p("theta", Constraint::NonZero),
            p("alpha", Constraint::Positive),
        ],
        mapping: "Amoroso(a, theta, alpha, -1)",
        anchor: "PearsonV",
        note: "the reciprocal transform of Pearson type III",
        limit: None,
        build: Some(b_pearson_v),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Any,
            theta: Pat::Any,
            alpha: Pat::Any,
            beta: Pat::Eq(-1.0),
        }),
    },
    CatalogEntry {
        name: "inverse gamma",
        synonyms: &["Vinci"],
        family: Family::Amoroso,
        params: &[p("theta", Constraint::NonZero), p("alpha", Constraint::Positive)],
        mapping: "Amoroso(0, theta, alpha, -1)",
        anchor: "InvGamma",
        note: "conjugate prior for an exponential scale or a normal variance",
        limit: None,
        build: Some(b_inv_gamma),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Eq(0.0),
            theta: Pat::Any,
            alpha: Pat::Any,
            beta: Pat::Eq(-1.0),
        }),
    },
    CatalogEntry {
        name: "scaled inverse chi-square",
        synonyms: &[],
        family: Family::Amoroso,
        params: &[p("sigma", Constraint::Positive), p("k", Constraint::PositiveInt)],
        mapping: "Amoroso(0, 1/(2*sigma^2), k/2, -1)",
        anchor: "ScaledInvChiSqr",
        note: "prior for variance parameters in normal models",
        limit: None,
        build: Some(b_scaled_inv_chi_sqr),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Eq(0.0),
            theta: Pat::Pos,
            alpha: Pat::HalfPosInt,
            beta: Pat::Eq(-1.0),
        }),
    },
    CatalogEntry {
        name: "inverse chi-square",
        synonyms: &[],
        family: Family::Amoroso,
        params: &[p("k", Constraint::PositiveInt)],
        mapping: "Amoroso(0, 1/2, k/2, -1)",
        anchor: "InvChiSqr",
        note: "the standard scaled inverse chi-square",
        limit: None,
        build: Some(b_inv_chi_sqr),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Eq(0.0),
            theta: Pat::Eq(0.5),
            alpha: Pat::HalfPosInt,
            beta: Pat::Eq(-1.0),
        }),
    },
    CatalogEntry {
        name: "Levy",
        synonyms: &["Lévy", "van der Waals profile"],
        family: Family::Amoroso,
        params: &[p("a", Constraint::Real), p("c", Constraint::Positive)],
        mapping: "Amoroso(a, c/2, 1/2, -1)",
        anchor: "Levy",
        note: "stable law of first-passage times; infinite mean and variance",
        limit: None,
        build: Some(b_levy),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Any,
            theta: Pat::Pos,
            alpha: Pat::Eq(0.5),
            beta: Pat::Eq(-1.0),
        }),
    },
    CatalogEntry {
        name: "inverse exponential",
        synonyms: &[],
        family: Family::Amoroso,
        params: &[p("theta", Constraint::NonZero)],
        mapping: "Amoroso(0, theta, 1, -1)",
        anchor: "InvExp",
        note: "reciprocal of an exponential variate",
        limit: None,
        build: Some(b_inv_exp),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Eq(0.0),
            theta: Pat::Any,
            alpha: Pat::Eq(1.0),
            beta: Pat::Eq(-1.0),
        }),
    },
    CatalogEntry {
        name: "Pearson type III",
        synonyms: &[],
        family: Family::Amoroso,
        params: &[
            p("a", Constraint::Real),
            p("theta", Constraint::NonZero),
            p("alpha", Constraint::Positive),
        ],
        mapping: "Amoroso(a, theta, alpha, 1)",
        anchor: "PearsonIII",
        note: "the gamma distribution with a location parameter",
        limit: None,
        build: Some(b_pearson_iii),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Any,
            theta: Pat::Any,
            alpha: Pat::Any,
            beta: Pat::Eq(1.0),
        }),
    },
    CatalogEntry {
        name: "gamma",
        synonyms: &["Γ"],
        family: Family::Amoroso,
        params: &[p("theta", Constraint::NonZero), p("alpha", Constraint::Positive)],
        mapping: "Amoroso(0, theta, alpha, 1)",
        anchor: "Gamma",
        note: "the namesake of the family's normalizing constant",
        limit: None,
        build: Some(b_gamma),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Eq(0.0),
            theta: Pat::Any,
            alpha: Pat::Any,
            beta: Pat::Eq(1.0),
        }),
    },
    CatalogEntry {
        name: "Erlang",
        synonyms: &["m-Erlang"],
        family: Family::Amoroso,
        params: &[p("theta", Constraint::Positive), p("n", Constraint::PositiveInt)],
        mapping: "Amoroso(0, theta, n, 1)",
        anchor: "Gamma",
        note: "waiting time for n events of a Poisson process with rate 1/theta",
        limit: None,
        build: Some(b_erlang),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Eq(0.0),
            theta: Pat::Pos,
            alpha: Pat::PosInt,
            beta: Pat::Eq(1.0),
        }),
    },
    CatalogEntry {
        name: "standard gamma",
        synonyms: &["standard Amoroso"],
        family: Family::Amoroso,
        params: &[p("alpha", Constraint::Positive)],
        mapping: "Amoroso(0, 1, alpha, 1)",
        anchor: "StdGamma",
        note: "the Weibullization seed: every member is a + theta * StdGamma(alpha)^(1/beta)",
        limit: None,
        build: Some(b_std_gamma),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Eq(0.0),
            theta: Pat::Eq(1.0),
            alpha: Pat::Any,
            beta: Pat::Eq(1.0),
        }),
    },
    CatalogEntry {
        name: "scaled chi-square",
        synonyms: &[],
        family: Family::Amoroso,
        params: &[p("sigma", Constraint::Positive), p("k", Constraint::PositiveInt)],
        mapping: "Amoroso(0, 2*sigma^2, k/2, 1)",
        anchor: "ScaledChiSqr",
        note: "sum of squares of k centered normals with variance sigma^2",
        limit: None,
        build: Some(b_scaled_chi_sqr),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Eq(0.0),
            theta: Pat::Pos,
            alpha: Pat::HalfPosInt,
            beta: Pat::Eq(1.0),
        }),
    },
    CatalogEntry {
        name: "chi-square",
        synonyms: &["χ²", "chi-squared"],
        family: Family::Amoroso,
        params: &[p("k", Constraint::PositiveInt)],
        mapping: "Amoroso(0, 2, k/2, 1)",
        anchor: "ChiSqr",
        note: "sum of squares of k standard normals",
        limit: None,
        build: Some(b_chi_sqr),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Eq(0.0),
            theta: Pat::Eq(2.0),
            alpha: Pat::HalfPosInt,
            beta: Pat::Eq(1.0),
        }),
    },
    CatalogEntry {
        name: "shifted exponential",
        synonyms: &[],
        family: Family::Amoroso,
        params: &[p("a", Constraint::Real), p("theta", Constraint::NonZero)],
        mapping: "Amoroso(a, theta, 1, 1)",
        anchor: "ShiftExp",
        note: "exponential with a location parameter",
        limit: None,
        build: Some(b_shift_exp),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Any,
            theta: Pat::Any,
            alpha: Pat::Eq(1.0),
            beta: Pat::Eq(1.0),
        }),
    },
    CatalogEntry {
        name: "exponential",
        synonyms: &["negative exponential", "Pearson type X", "waiting time"],
        family: Family::Amoroso,
        params: &[p("theta", Constraint::NonZero)],
        mapping: "Amoroso(0, theta, 1, 1)",
        anchor: "Exp",
        note: "the memoryless law",
        limit: None,
        build: Some(b_exp),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Eq(0.0),
            theta: Pat::Any,
            alpha: Pat::Eq(1.0),
            beta: Pat::Eq(1.0),
        }),
    },
    CatalogEntry {
        name: "standard exponential",
        synonyms: &[],
        family: Family::Amoroso,
        params: &[],
        mapping: "Amoroso(0, 1, 1, 1)",
        anchor: "Exp",
        note: "exponential with unit scale",
        limit: None,
        build: Some(b_std_exp),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Eq(0.0),
            theta: Pat::Eq(1.0),
            alpha: Pat::Eq(1.0),
            beta: Pat::Eq(1.0),
        }),
    },
    CatalogEntry {
        name: "Wien",
        synonyms: &["Vienna"],
        family: Family::Amoroso,
        params: &[p("T", Constraint::Positive)],
        mapping: "Amoroso(0, T, 4, 1)",
        anchor: "Gamma",
        note: "gamma with alpha = 4: approximate black-body intensity vs frequency",
        limit: None,
        build: Some(b_wien),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Eq(0.0),
            theta: Pat::Pos,
            alpha: Pat::Eq(4.0),
            beta: Pat::Eq(1.0),
        }),
    },
    CatalogEntry {
        name: "Nakagami",
        synonyms: &["generalized normal", "Nakagami-m"],
        family: Family::Amoroso,
        params: &[
            p("a", Constraint::Real),
            p("theta", Constraint::NonZero),
            p("m", Constraint::Positive),
        ],
        mapping: "Amoroso(a, theta, m/2, 2)",
        anchor: "Nakagami",
        note: "multipath radio fading model",
        limit: None,
        build: Some(b_nakagami),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Any,
            theta: Pat::Any,
            alpha: Pat::Any,
            beta: Pat::Eq(2.0),
        }),
    },
    CatalogEntry {
        name: "scaled chi",
        synonyms: &["generalized Rayleigh"],
        family: Family::Amoroso,
        params: &[p("sigma", Constraint::Positive), p("k", Constraint::PositiveInt)],
        mapping: "Amoroso(0, sqrt(2*sigma^2), k/2, 2)",
        anchor: "ScaledChi",
        note: "root-mean-square of k centered normals with variance sigma^2",
        limit: None,
        build: Some(b_scaled_chi),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Eq(0.0),
            theta: Pat::Pos,
            alpha: Pat::HalfPosInt,
            beta: Pat::Eq(2.0),
        }),
    },
    CatalogEntry {
        name: "chi",
        synonyms: &["χ"],
        family: Family::Amoroso,
        params: &[p("k", Constraint::PositiveInt)],
        mapping: "Amoroso(0, sqrt(2), k/2, 2)",
        anchor: "Chi",
        note: "square root of a chi-square variate",
        limit: None,
        build: Some(b_chi),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Eq(0.0),
            theta: Pat::Eq(SQRT_2),
            alpha: Pat::HalfPosInt,
            beta: Pat::Eq(2.0),
        }),
    },
    CatalogEntry {
        name: "half-normal",
        synonyms: &["semi-normal", "one-sided normal", "positive definite normal"],
        family: Family::Amoroso,
        params: &[p("sigma", Constraint::Positive)],
        mapping: "Amoroso(0, sqrt(2*sigma^2), 1/2, 2)",
        anchor: "HalfNormal",
        note: "modulus of a centered normal",
        limit: None,
        build: Some(b_half_normal),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Eq(0.0),
            theta: Pat::Pos,
            alpha: Pat::Eq(0.5),
            beta: Pat::Eq(2.0),
        }),
    },
    CatalogEntry {
        name: "Rayleigh",
        synonyms: &[],
        family: Family::Amoroso,
        params: &[p("sigma", Constraint::Positive)],
        mapping: "Amoroso(0, sqrt(2*sigma^2), 1, 2)",
        anchor: "Rayleigh",
        note: "magnitude of a 2-d centered normal; wind-speed workhorse",
        limit: None,
        build: Some(b_rayleigh),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Eq(0.0),
            theta: Pat::Pos,
            alpha: Pat::Eq(1.0),
            beta: Pat::Eq(2.0),
        }),
    },
    CatalogEntry {
        name: "Maxwell",
        synonyms: &["Maxwell-Boltzmann", "Maxwell speed"],
        family: Family::Amoroso,
        params: &[p("sigma", Constraint::Positive)],
        mapping: "Amoroso(0, sqrt(2*sigma^2), 3/2, 2)",
        anchor: "Maxwell",
        note: "molecular speed distribution in thermal equilibrium",
        limit: None,
        build: Some(b_maxwell),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Eq(0.0),
            theta: Pat::Pos,
            alpha: Pat::Eq(1.5),
            beta: Pat::Eq(2.0),
        }),
    },
    CatalogEntry {
        name: "Wilson-Hilferty",
        synonyms: &[],
        family: Family::Amoroso,
        params: &[p("theta", Constraint::NonZero), p("alpha", Constraint::Positive)],
        mapping: "Amoroso(0, theta, alpha, 3)",
        anchor: "WilsonHilferty",
        note: "cube root of a gamma variate; classic normal approximation",
        limit: None,
        build: Some(b_wilson_hilferty),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Eq(0.0),
            theta: Pat::Any,
            alpha: Pat::Any,
            beta: Pat::Eq(3.0),
        }),
    },
    CatalogEntry {
        name: "generalized Weibull",
        synonyms: &[],
        family: Family::Amoroso,
        params: &[
            p("a", Constraint::Real),
            p("omega", Constraint::NonZero),
            p("n", Constraint::PositiveInt),
            p("beta", Constraint::Positive),
        ],
        mapping: "Amoroso(a, omega/n^(1/beta), n, beta)",
        anchor: "GenWeibull",
        note: "n-th smallest value of bounded-below samples",
        limit: None,
        build: Some(b_gen_weibull),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Any,
            theta: Pat::Any,
            alpha: Pat::PosInt,
            beta: Pat::Pos,
        }),
    },
    CatalogEntry {
        name: "Weibull",
        synonyms: &[
            "Fisher-Tippett type III",
            "Gumbel type III",
            "extreme value type III",
            "Rosin-Rammler",
            "Rosin-Rammler-Weibull",
            "Weibull-Gnedenko",
            "reversed Weibull",
        ],
        family: Family::Amoroso,
        params: &[
            p("a", Constraint::Real),
            p("omega", Constraint::NonZero),
            p("beta", Constraint::Positive),
        ],
        mapping: "Amoroso(a, omega, 1, beta)",
        anchor: "Weibull",
        note: "extreme value law for bounded parents; negative omega reverses it for maxima",
        limit: None,
        build: Some(b_weibull),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Any,
            theta: Pat::Any,
            alpha: Pat::Eq(1.0),
            beta: Pat::Pos,
        }),
    },
    CatalogEntry {
        name: "pseudo-Weibull",
        synonyms: &[],
        family: Family::Amoroso,
        params: &[p("theta", Constraint::NonZero), p("beta", Constraint::Positive)],
        mapping: "Amoroso(0, theta, 1 + 1/beta, beta)",
        anchor: "PseudoWeibull",
        note: "another failure-time model",
        limit: None,
        build: Some(b_pseudo_weibull),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Eq(0.0),
            theta: Pat::Any,
            alpha: Pat::OnePlusInvBeta,
            beta: Pat::Pos,
        }),
    },
    CatalogEntry {
        name: "stretched exponential",
        synonyms: &[],
        family: Family::Amoroso,
        params: &[p("theta", Constraint::NonZero), p("beta", Constraint::Positive)],
        mapping: "Amoroso(0, theta, 1, beta)",
        anchor: "StretchedExp",
        note: "fat-tail alternative to power laws",
        limit: None,
        build: Some(b_stretched_exp),
        pattern: Some(Pattern::Amoroso {
            a: Pat::Eq(0.0),
            theta: Pat::Any,
            alpha: Pat::Eq(1.0),
            beta: Pat::Pos,
        }),
    },
    // -- log-gamma family ---------------------------------------------------
    CatalogEntry {
        name: "log-gamma",
        synonyms: &["Coale-McNeil", "generalized log-gamma"],
        family: Family::LogGamma,
        params: &[
            p("nu", Constraint::Real),
            p("lambda", Constraint::NonZero),
            p("alpha", Constraint::Positive),
        ],
        mapping: "LogGamma(nu, lambda, alpha)",
        anchor: "LogGamma",
        note: "log of a gamma variate; whole-line parent of the Gumbel subfamily",
        limit: Some("LogGamma(nu, lambda, alpha) = lim[beta->inf] Amoroso(nu - beta*lambda, beta*lambda, alpha, beta)"),
        build: Some(b_log_gamma),
        pattern: Some(Pattern::LogGamma {
            nu: Pat::Any,
            lambda: Pat::Any,
            alpha: Pat::Any,
        }),
    },
    CatalogEntry {
        name: "standard log-gamma",
        synonyms: &[],
        family: Family::LogGamma,
        params: &[p("alpha", Constraint::Positive)],
        mapping: "LogGamma(0, 1, alpha)",
        anchor: "StdLogGamma",
        note: "log of a standard gamma variate",
        limit: None,
        build: Some(b_std_log_gamma),
        pattern: Some(Pattern::LogGamma {
            nu: Pat::Eq(0.0),
            lambda: Pat::Eq(1.0),
            alpha: Pat::Any,
        }),
    },
    CatalogEntry {
        name: "log-chi-square",
        synonyms: &[],
        family: Family::LogGamma,
        params: &[p("k", Constraint::PositiveInt)],
        mapping: "LogGamma(ln 2, 1, k/2)",
        anchor: "LogChiSqr",
        note: "log of a chi-square variate",
        limit: None,
        build: Some(b_log_chi_sqr),
        pattern: Some(Pattern::LogGamma {
            nu: Pat::Eq(LN_2),
            lambda: Pat::Eq(1.0),
            alpha: Pat::HalfPosInt,
        }),
    },
    CatalogEntry {
        name: "generalized Gumbel",
        synonyms: &[],
        family: Family::LogGamma,
        params: &[
            p("u", Constraint::Real),
            p("lambda_bar", Constraint::NonZero),
            p("n", Constraint::PositiveInt),
        ],
        mapping: "LogGamma(u + lambda_bar*ln(n), -lambda_bar, n)",
        anchor: "GenGumbel",
        note: "n-th largest value of exponential-tailed samples",
        limit: None,
        build: Some(b_gen_gumbel),
        pattern: Some(Pattern::LogGamma {
            nu: Pat::Any,
            lambda: Pat::Any,
            alpha: Pat::PosInt,
        }),
    },
    CatalogEntry {
        name: "Gumbel",
        synonyms: &[
            "Fisher-Tippett type I",
            "extreme value type I",
            "extreme value",
            "Gumbel type I",
            "Fisher-Tippett-Gumbel",
            "Gumbel-Fisher-Tippett",
            "FTG",
            "log-Weibull",
            "doubly exponential",
            "double exponential",
        ],
        family: Family::LogGamma,
        params: &[p("u", Constraint::Real), p("lambda_bar", Constraint::NonZero)],
        mapping: "LogGamma(u, -lambda_bar, 1)",
        anchor: "Gumbel",
        note: "extreme value law for exponential-tailed parents (maxima for lambda_bar > 0)",
        limit: None,
        build: Some(b_gumbel),
        pattern: Some(Pattern::LogGamma {
            nu: Pat::Any,
            lambda: Pat::Any,
            alpha: Pat::Eq(1.0),
        }),
    },
    CatalogEntry {
        name: "standard Gumbel",
        synonyms: &[],
        family: Family::LogGamma,
        params: &[],
        mapping: "LogGamma(0, -1, 1)",
        anchor: "StdGumbel",
        note: "Gumbel with zero location and unit scale",
        limit: None,
        build: Some(b_std_gumbel),
        pattern: Some(Pattern::LogGamma {
            nu: Pat::Eq(0.0),
            lambda: Pat::Eq(-1.0),
            alpha: Pat::Eq(1.0),
        }),
    },
    CatalogEntry {
        name: "BHP",
        synonyms: &["Bramwell-Holdsworth-Pinton"],
        family: Family::LogGamma,
        params: &[p("nu", Constraint::Real), p("lambda", Constraint::NonZero)],
        mapping: "LogGamma(nu, lambda, pi/2)",
        anchor: "BHP",
        note: "rare-fluctuation model for turbulence and correlated systems",
        limit: None,
        build: Some(b_bhp),
        pattern: Some(Pattern::LogGamma {
            nu: Pat::Any,
            lambda: Pat::Any,
            alpha: Pat::Eq(FRAC_PI_2),
        }),
    },
    // -- limiting forms -------------------------------------------------------
    CatalogEntry {
        name: "normal",
        synonyms: &[
            "Gaussian",
            "Gauss",
            "bell curve",
            "de Moivre",
            "error",
            "law of error",
            "Laplace-Gauss",
            "Laplace's second law of error",
            "standard normal",
            "unit normal",
            "Φ",
            "z",
            "error function",
            "uniform",
            "flat",
            "delta",
            "degenerate",
        ],
        family: Family::Limit,
        params: &[p("mu", Constraint::Real), p("sigma", Constraint::Positive)],
        mapping: "lim[alpha->inf] Amoroso(mu - sigma*sqrt(alpha), sigma/sqrt(alpha), alpha, 1)",
        anchor: "Normal",
        note: "shared alpha->inf limit of both families; sigma->inf gives the unbounded uniform, sigma->0 the delta",
        limit: Some(
            "Normal(mu, sigma) = lim[alpha->inf] Amoroso(mu - sigma*sqrt(alpha), sigma/sqrt(alpha), alpha, 1) \
             = lim[alpha->inf] LogGamma(mu - sigma*sqrt(alpha)*ln(alpha), sigma*sqrt(alpha), alpha)",
        ),
        build: None,
        pattern: None,
    },
    CatalogEntry {
        name: "log-normal",
        synonyms: &[
            "Λ",
            "Galton",
            "Galton-McAlister",
            "Cobb-Douglas",
            "antilog-normal",
            "logarithmic-normal",
            "logarithmico-normal",
            "Gibrat",
            "standard log-normal",
            "two-parameter log-normal",
        ],
        family: Family::Limit,
        params: &[
            p("a", Constraint::Real),
            p("theta", Constraint::Positive),
            p("sigma", Constraint::Positive),
        ],
        mapping: "lim[beta->0] Amoroso(a, theta*(beta*sigma)^(2/beta), 1/(beta*sigma)^2, beta)",
        anchor: "LogNormal",
        note: "exp of a normal variate; beta->0 limiting form of the gamma subfamily",
        limit: Some(
            "LogNormal(a, theta, sigma) = lim[beta->0] Amoroso(a, theta*(beta*sigma)^(2/beta), 1/(beta*sigma)^2, beta); \
             LogNormal(a, theta, sigma) ~ exp(Normal(ln theta, sigma)) + a",
        ),
        build: None,
        pattern: None,
    },
    CatalogEntry {
        name: "power law",
        synonyms: &["Pearson type XI", "fractal", "half-uniform", "Jeffreys"],
        family: Family::Limit,
        params: &[p("a", Constraint::Real), p("p", Constraint::Real)],
        mapping: "lim[beta->0] Amoroso(a, theta, (1-p)/beta, beta), up to proportionality",
        anchor: "PowerLaw",
        note: "improper (unnormalizable) shape (x-a)^(-p); p = 0 is the half-uniform, p = 1 the Jeffreys prior",
        limit: Some(
            "PowerLaw(p) ∝ (x-a)^(-p) = lim[beta->0] Amoroso(a, theta, (1-p)/beta, beta), improper",
        ),
        build: None,
        pattern: None,
    },
];
