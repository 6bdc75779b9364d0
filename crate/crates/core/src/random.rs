//! Variate-generation kernels: standard normal and standard gamma draws.
//!
//! The gamma kernel is the Marsaglia-Tsang squeeze method for shape ≥ 1,
//! extended to shape < 1 by the boost `G(α) = G(α+1) · U^(1/α)`. Callers
//! supply the random stream, so determinism is entirely in their hands.

#[allow(unused_imports)]
use num_traits::Float;

use rand::distr::Open01;
use rand::Rng;

/// One standard normal draw (Marsaglia's polar method).
pub fn std_normal<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    loop {
        let u: f64 = 2.0 * rng.random::<f64>() - 1.0;
        let v: f64 = 2.0 * rng.random::<f64>() - 1.0;
        let s = u * u + v * v;
        if s > 0.0 && s < 1.0 {
            return u * (-2.0 * s.ln() / s).sqrt();
        }
    }
}

/// One draw from the standard gamma distribution with shape `alpha > 0`.
pub fn std_gamma<R: Rng + ?Sized>(rng: &mut R, alpha: f64) -> f64 {
    debug_assert!(alpha > 0.0);
    if alpha >= 1.0 {
        marsaglia_tsang(rng, alpha)
    } else {
        let u: f64 = rng.sample(Open01);
        marsaglia_tsang(rng, alpha + 1.0) * u.powf(1.0 / alpha)
    }
}

/// ln of a standard gamma draw. For `alpha < 1` the boost is applied in log
/// space, so the result stays finite even where the draw itself would
/// underflow to zero.
pub fn ln_std_gamma<R: Rng + ?Sized>(rng: &mut R, alpha: f64) -> f64 {
    debug_assert!(alpha > 0.0);
    if alpha >= 1.0 {
        marsaglia_tsang(rng, alpha).ln()
    } else {
        let u: f64 = rng.sample(Open01);
        marsaglia_tsang(rng, alpha + 1.0).ln() + u.ln() / alpha
    }
}

/// Marsaglia-Tsang rejection sampler; requires `alpha ≥ 1`.
fn marsaglia_tsang<R: Rng + ?Sized>(rng: &mut R, alpha: f64) -> f64 {
    debug_assert!(alpha >= 1.0);
    let d = alpha - 1.0 / 3.0;
    let c = 1.0 / (9.0 * d).sqrt();
    loop {
        let x = std_normal(rng);
        let v = 1.0 + c * x;
        if v <= 0.0 {
            continue;
        }
        let v3 = v * v * v;
        let u: f64 = rng.sample(Open01);
        if u < 1.0 - 0.0331 * x * x * x * x {
            return d * v3;
        }
        if u.ln() < 0.5 * x * x + d * (1.0 - v3 + v3.ln()) {
            return d * v3;
        }
    }
}
