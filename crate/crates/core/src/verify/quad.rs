//! Double-exponential (tanh-sinh) quadrature over finite intervals, rays,
//! and the whole line, plus a doubling-interval divergence probe for moment
//! integrals.
//!
//! The oracle integrator for the check suites: it never calls any
//! closed-form moment or entropy expression, only the integrand it is
//! given.

#[allow(unused_imports)]
use num_traits::Float;

use core::f64::consts::FRAC_PI_2;

use crate::error::Error;
use crate::summary::Support;
use crate::Amoroso;

/// Abscissa cutoff: beyond |t| ≈ 6.5 every transform has driven the weight
/// past the double-precision range.
const T_MAX: f64 = 6.5;
const MAX_LEVEL: u32 = 11;

/// Integrate `f` over `support` to absolute tolerance `tol`.
///
/// Level-doubling trapezoid sums under the tanh-sinh (finite interval),
/// exp-sinh (ray), or sinh-sinh (whole line) substitution. Endpoint
/// singularities of integrable type are handled by construction.
/// Non-convergence is reported as an error, never silently truncated.
pub fn integrate<F: Fn(f64) -> f64>(f: F, support: &Support, tol: f64) -> Result<f64, Error> {
    match (support.lower.is_finite(), support.upper.is_finite()) {
        (true, true) => {
            let (a, b) = (support.lower, support.upper);
            let d = 0.5 * (b - a);
            de_levels(
                |t| {
                    let s = FRAC_PI_2 * t.sinh();
                    // Build the abscissa as an offset from its near
                    // endpoint: 1 − tanh|s| = 2e^(−2|s|)/(1 + e^(−2|s|)).
                    // Going through the midpoint would erase the offset by
                    // cancellation and wreck singular endpoints.
                    let e = (-2.0 * s.abs()).exp();
                    let off = d * 2.0 * e / (1.0 + e);
                    let x = if t >= 0.0 { b - off } else { a + off };
                    let sech = 2.0 * (-s.abs()).exp() / (1.0 + e);
                    let w = d * FRAC_PI_2 * t.cosh() * sech * sech;
                    (x, w)
                },
                &f,
                tol,
            )
        }
        (true, false) => {
            let a = support.lower;
            de_levels(
                |t| {
                    let u = (FRAC_PI_2 * t.sinh()).exp();
                    (a + u, FRAC_PI_2 * t.cosh() * u)
                },
                &f,
                tol,
            )
        }
        (false, true) => {
            let b = support.upper;
            de_levels(
                |t| {
                    let u = (FRAC_PI_2 * t.sinh()).exp();
                    (b - u, FRAC_PI_2 * t.cosh() * u)
                },
                &f,
                tol,
            )
        }
        (false, false) => de_levels(
            |t| {
                let s = FRAC_PI_2 * t.sinh();
                (s.sinh(), FRAC_PI_2 * t.cosh() * s.cosh())
            },
            &f,
            tol,
        ),
    }
}

fn de_levels<M, F>(map: M, f: &F, tol: f64) -> Result<f64, Error>
where
    M: Fn(f64) -> (f64, f64),
    F: Fn(f64) -> f64,
{
    let term = |t: f64| {
        let (x, w) = map(t);
        if !x.is_finite() || !w.is_finite() {
            return 0.0;
        }
        let y = f(x);
        if y.is_finite() {
            y * w
        } else {
            // Integrable endpoint singularity: the weight kills it in the
            // limit, so the offending abscissa contributes nothing.
            0.0
        }
    };

    let mut h = 1.0;
    // Level 0: integer abscissas.
    let mut sum = term(0.0);
    for side in [1.0, -1.0] {
        let mut negligible = 0;
        let mut j = 1.0;
        while j * h <= T_MAX {
            let v = term(side * j * h);
            sum += v;
            if v.abs() <= f64::EPSILON * sum.abs() {
                negligible += 1;
                if negligible >= 2 {
                    break;
                }
            } else {
                negligible = 0;
            }
            j += 1.0;
        }
    }
    let mut estimate = h * sum;

    for _level in 1..=MAX_LEVEL {
        h *= 0.5;
        // Only the new (odd-multiple) abscissas.
        for side in [1.0, -1.0] {
            let mut negligible = 0;
            let mut j = 1.0;
            while j * h <= T_MAX {
                let v = term(side * j * h);
                sum += v;
                if v.abs() <= f64::EPSILON * sum.abs() {
                    negligible += 1;
                    if negligible >= 2 {
                        break;
                    }
                } else {
                    negligible = 0;
                }
                j += 2.0;
            }
        }
        let new_estimate = h * sum;
        let delta = (new_estimate - estimate).abs();
        estimate = new_estimate;
        if _level >= 3 && delta <= tol.max(f64::EPSILON * estimate.abs()) {
            return Ok(estimate);
        }
    }
    Err(Error::NoConvergence {
        what: "tanh-sinh quadrature",
    })
}

/// Doubling-interval divergence probe for the `r`-th absolute moment of an
/// Amoroso member. Integrates `|x|^r · pdf` over octaves marching into the
/// unbounded tail; if the octave contributions stop decaying geometrically,
/// the moment integral diverges.
pub fn moment_diverges(d: &Amoroso, r: u32) -> bool {
    let sup = d.support();
    // March toward the unbounded end, starting safely past the body.
    let start = (d.a().abs() + d.theta().abs() * (d.alpha() + r as f64 + 2.0)).max(1.0) * 4.0;
    let toward_pos = sup.is_bounded_below();
    let mut contributions = [0.0f64; 30];
    let mut lo = start;
    for slot in contributions.iter_mut() {
        let hi = lo * 2.0;
        let seg = if toward_pos {
            Support {
                lower: lo,
                upper: hi,
                lower_closed: true,
                upper_closed: true,
            }
        } else {
            Support {
                lower: -hi,
                upper: -lo,
                lower_closed: true,
                upper_closed: true,
            }
        };
        *slot = integrate(|x| x.abs().powi(r as i32) * d.pdf(x), &seg, 1e-13).unwrap_or(0.0);
        lo = hi;
    }
    // Geometric ratio over the last octaves. A ratio pinned near 1 (or
    // above) means the tail sum cannot converge; 2^(r+αβ) < 1 shows up as a
    // clearly smaller ratio.
    let tail = &contributions[24..];
    if tail.iter().all(|&t| t < 1e-280) {
        return false;
    }
    let mut ratios = 0usize;
    let mut high = 0usize;
    for w in contributions[20..].windows(2) {
        if w[0] > 0.0 && w[1] > 0.0 {
            ratios += 1;
            if w[1] / w[0] >= 0.98 {
                high += 1;
            }
        }
    }
    ratios > 0 && high * 2 >= ratios
}
