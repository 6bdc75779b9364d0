use alloc::vec::Vec;
use rand::Rng;

use crate::error::Error;
use crate::summary::{DistributionSummary, Support};
use crate::{Amoroso, LogGamma};

/// A member of either family, as produced by the catalog constructors.
/// Every shared operation delegates to the underlying distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Dist {
    Amoroso(Amoroso),
    LogGamma(LogGamma),
}

impl Dist {
    pub fn support(&self) -> Support {
        match self {
            Dist::Amoroso(d) => d.support(),
            Dist::LogGamma(d) => d.support(),
        }
    }

    pub fn log_pdf(&self, x: f64) -> f64 {
        match self {
            Dist::Amoroso(d) => d.log_pdf(x),
            Dist::LogGamma(d) => d.log_pdf(x),
        }
    }

    pub fn pdf(&self, x: f64) -> f64 {
        match self {
            Dist::Amoroso(d) => d.pdf(x),
            Dist::LogGamma(d) => d.pdf(x),
        }
    }

    pub fn cdf(&self, x: f64) -> f64 {
        match self {
            Dist::Amoroso(d) => d.cdf(x),
            Dist::LogGamma(d) => d.cdf(x),
        }
    }

    pub fn survival(&self, x: f64) -> f64 {
        match self {
            Dist::Amoroso(d) => d.survival(x),
            Dist::LogGamma(d) => d.survival(x),
        }
    }

    pub fn quantile(&self, q: f64) -> Result<f64, Error> {
        match self {
            Dist::Amoroso(d) => d.quantile(q),
            Dist::LogGamma(d) => d.quantile(q),
        }
    }

    pub fn mode(&self) -> f64 {
        match self {
            Dist::Amoroso(d) => d.mode(),
            Dist::LogGamma(d) => d.mode(),
        }
    }

    pub fn mean(&self) -> Option<f64> {
        match self {
            Dist::Amoroso(d) => d.mean(),
            Dist::LogGamma(d) => Some(d.mean()),
        }
    }

    pub fn variance(&self) -> Option<f64> {
        match self {
            Dist::Amoroso(d) => d.variance(),
            Dist::LogGamma(d) => Some(d.variance()),
        }
    }

    pub fn entropy(&self) -> f64 {
        match self {
            Dist::Amoroso(d) => d.entropy(),
            Dist::LogGamma(d) => d.entropy(),
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R, n: usize) -> Vec<f64> {
        match self {
            Dist::Amoroso(d) => d.sample(rng, n),
            Dist::LogGamma(d) => d.sample(rng, n),
        }
    }

    pub fn summary(&self) -> DistributionSummary {
        match self {
            Dist::Amoroso(d) => d.summary(),
            Dist::LogGamma(d) => d.summary(),
        }
    }

    pub fn as_amoroso(&self) -> Option<&Amoroso> {
        match self {
            Dist::Amoroso(d) => Some(d),
            Dist::LogGamma(_) => None,
        }
    }

    pub fn as_log_gamma(&self) -> Option<&LogGamma> {
        match self {
            Dist::LogGamma(d) => Some(d),
            Dist::Amoroso(_) => None,
        }
    }
}
