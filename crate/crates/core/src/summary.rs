use alloc::vec::Vec;
use core::fmt;

/// The support of a distribution: an interval with boundary-inclusion flags.
/// Unbounded ends are `±∞` and are always open.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Support {
    pub lower: f64,
    pub upper: f64,
    pub lower_closed: bool,
    pub upper_closed: bool,
}

impl Support {
    /// The ray `[a, ∞)`.
    pub fn ray_up(a: f64) -> Self {
        Support {
            lower: a,
            upper: f64::INFINITY,
            lower_closed: true,
            upper_closed: false,
        }
    }

    /// The ray `(−∞, a]`.
    pub fn ray_down(a: f64) -> Self {
        Support {
            lower: f64::NEG_INFINITY,
            upper: a,
            lower_closed: false,
            upper_closed: true,
        }
    }

    /// The whole real line.
    pub fn whole_line() -> Self {
        Support {
            lower: f64::NEG_INFINITY,
            upper: f64::INFINITY,
            lower_closed: false,
            upper_closed: false,
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        if x.is_nan() {
            return false;
        }
        let above = if self.lower_closed {
            x >= self.lower
        } else {
            x > self.lower
        };
        let below = if self.upper_closed {
            x <= self.upper
        } else {
            x < self.upper
        };
        above && below
    }

    pub fn is_bounded_below(&self) -> bool {
        self.lower.is_finite()
    }

    pub fn is_bounded_above(&self) -> bool {
        self.upper.is_finite()
    }
}

impl fmt::Display for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let open = if self.lower_closed { '[' } else { '(' };
        let close = if self.upper_closed { ']' } else { ')' };
        match (self.lower.is_finite(), self.upper.is_finite()) {
            (true, true) => write!(f, "{open}{}, {}{close}", self.lower, self.upper),
            (true, false) => write!(f, "{open}{}, inf)", self.lower),
            (false, true) => write!(f, "(-inf, {}{close}", self.upper),
            (false, false) => write!(f, "(-inf, inf)"),
        }
    }
}

/// Whether a side-condition-gated quantity exists for a given parameter set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SideCondition {
    pub quantity: &'static str,
    pub satisfied: bool,
}

/// Headline facts about one distribution instance. `mean` and `variance`
/// are absent when their side conditions fail (heavy-tailed members).
#[derive(Debug, Clone, PartialEq)]
pub struct DistributionSummary {
    pub support: Support,
    pub mode: f64,
    pub mean: Option<f64>,
    pub variance: Option<f64>,
    pub entropy: f64,
    pub side_conditions: Vec<SideCondition>,
}
