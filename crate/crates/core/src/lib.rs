//! The Amoroso (generalized gamma) and log-gamma distribution families.
//!
//! The Amoroso distribution is a four-parameter, continuous, univariate,
//! unimodal density with semi-infinite support,
//!
//! ```text
//! Amoroso(x | a, θ, α, β) = 1/Γ(α) · |β/θ| · ((x−a)/θ)^(αβ−1) · exp{ −((x−a)/θ)^β }
//! ```
//!
//! with location `a`, scale `θ ≠ 0`, and shapes `α > 0`, `β ≠ 0`. It unifies
//! the gamma family (β = 1), the extreme value families (Weibull β > 0,
//! Fréchet β < 0, and via a β → ∞ limit, Gumbel), and dozens of other named
//! distributions, each of which is a fixed-parameter slice of the same
//! functional form. The companion log-gamma family,
//!
//! ```text
//! LogGamma(x | ν, λ, α) = 1/(Γ(α)|λ|) · exp{ α(x−ν)/λ − e^((x−ν)/λ) }
//! ```
//!
//! covers the whole real line and arises as the logarithm of an Amoroso
//! variate.
//!
//! Module map:
//!
//! - [`specfun`] — scalar kernels: `ln Γ`, the regularized upper incomplete
//!   gamma `Q(α, x)`, its inverse, digamma, and polygamma orders 1–3.
//! - [`amoroso`] — the [`Amoroso`] distribution: density, cdf/survival,
//!   quantile, mode, moments (side-condition gated), entropy, sampling.
//! - [`loggamma`] — the [`LogGamma`] distribution with cgf and closed-form
//!   moments through excess kurtosis.
//! - [`catalog`] — every named special case as a validated constructor
//!   (`rayleigh`, `chi-square`, `gumbel`, …), a synonym index, and a
//!   reverse classifier.
//! - [`verify`] — independent numerical oracles (tanh-sinh quadrature,
//!   one-sample Kolmogorov–Smirnov) plus distributional-identity and
//!   limit-theorem check suites.
//! - [`random`] — standard gamma and normal variate kernels used by the
//!   samplers.
//!
//! The crate is `no_std`-compatible (with `alloc`); disable the default
//! `std` feature to use it in a `no_std` environment, in which case float
//! math is routed through `libm`.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod amoroso;
pub mod catalog;
mod dist;
mod error;
pub mod loggamma;
pub mod random;
pub mod specfun;
mod summary;
pub mod verify;

pub use amoroso::Amoroso;
pub use dist::Dist;
pub use error::Error;
pub use loggamma::LogGamma;
pub use summary::{DistributionSummary, SideCondition, Support};
