//! The catalog of named special cases.
//!
//! Each named distribution is one declarative [`CatalogEntry`]: its
//! canonical name, synonyms, named parameters with machine-checkable
//! constraints, the mapping into [`Amoroso`] or [`LogGamma`] parameters,
//! and (for the parameter patterns that have one) a reverse matcher used by
//! [`classify`]. Three entries — normal, log-normal, and the power law —
//! are limiting forms only: they resolve and document their substitution
//! rule but cannot be constructed.
//!
//! Names are normalized case-insensitively with spaces, hyphens,
//! underscores, and dots interchangeable, so `chi-square`, `chi_square`,
//! and `Chi Square` all resolve to the same entry.

#[allow(unused_imports)]
use num_traits::Float;

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;

use crate::error::Error;
use crate::{Amoroso, Dist, LogGamma};

mod data;

/// Which functional family an entry maps into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Amoroso,
    LogGamma,
    /// A limiting form: documented, classifiable, but not constructible.
    Limit,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Amoroso => write!(f, "amoroso"),
            Family::LogGamma => write!(f, "log-gamma"),
            Family::Limit => write!(f, "limit"),
        }
    }
}

/// Machine-checkable constraint on one named parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    /// Any finite real.
    Real,
    /// Finite and nonzero (scales that may carry either sign).
    NonZero,
    /// Finite and strictly positive.
    Positive,
    /// A positive integer (k, n, ...).
    PositiveInt,
}

impl Constraint {
    pub fn check(&self, v: f64) -> bool {
        if !v.is_finite() {
            return false;
        }
        match self {
            Constraint::Real => true,
            Constraint::NonZero => v != 0.0,
            Constraint::Positive => v > 0.0,
            Constraint::PositiveInt => v >= 1.0 && v == v.round(),
        }
    }

    pub fn describe(&self) -> &'static str {
        match self {
            Constraint::Real => "a finite real",
            Constraint::NonZero => "finite and nonzero",
            Constraint::Positive => "finite and > 0",
            Constraint::PositiveInt => "a positive integer",
        }
    }

    /// A representative valid value, used by exhaustive tests and examples.
    pub fn example(&self) -> f64 {
        match self {
            Constraint::Real => 0.5,
            Constraint::NonZero => 1.5,
            Constraint::Positive => 1.5,
            Constraint::PositiveInt => 4.0,
        }
    }
}

/// One named parameter of a catalog entry.
#[derive(Debug, Clone, Copy)]
pub struct ParamSpec {
    pub name: &'static str,
    pub constraint: Constraint,
}

/// A reverse-matching pattern over family parameters. `Eq` anchors are the
/// exact rational constants of the table rows (0, 2, √2, 1/2, 1/√2, ±1, ±2,
/// 3), compared within the caller's tolerance.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Pat {
    Any,
    Pos,
    Neg,
    Eq(f64),
    PosInt,
    HalfPosInt,
    /// α = 1 + 1/β with β > 0 (pseudo-Weibull).
    OnePlusInvBeta,
}

impl Pat {
    fn check(&self, v: f64, tol: f64) -> bool {
        match self {
            Pat::Any => true,
            Pat::Pos => v > 0.0,
            Pat::Neg => v < 0.0,
            Pat::Eq(c) => (v - c).abs() <= tol * c.abs().max(1.0),
            Pat::PosInt => v >= 0.5 && (v - v.round()).abs() <= tol * v.abs().max(1.0),
            Pat::HalfPosInt => {
                let k = 2.0 * v;
                k >= 0.5 && (k - k.round()).abs() <= tol * k.abs().max(1.0)
            }
            Pat::OnePlusInvBeta => unreachable!("checked via Pattern::matches"),
        }
    }

    fn score(&self) -> u32 {
        match self {
            Pat::Any => 0,
            Pat::Pos | Pat::Neg => 1,
            Pat::PosInt | Pat::HalfPosInt | Pat::OnePlusInvBeta => 2,
            Pat::Eq(_) => 3,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) enum Pattern {
    Amoroso {
        a: Pat,
        theta: Pat,
        alpha: Pat,
        beta: Pat,
    },
    LogGamma {
        nu: Pat,
        lambda: Pat,
        alpha: Pat,
    },
}

impl Pattern {
    fn matches_amoroso(&self, d: &Amoroso, tol: f64) -> bool {
        let Pattern::Amoroso {
            a,
            theta,
            alpha,
            beta,
        } = self
        else {
            return false;
        };
        if !a.check(d.a(), tol) || !theta.check(d.theta(), tol) || !beta.check(d.beta(), tol) {
            return false;
        }
        if let Pat::OnePlusInvBeta = alpha {
            let want = 1.0 + 1.0 / d.beta();
            d.beta() > 0.0 && (d.alpha() - want).abs() <= tol * want.abs().max(1.0)
        } else {
            alpha.check(d.alpha(), tol)
        }
    }

    fn matches_log_gamma(&self, d: &LogGamma, tol: f64) -> bool {
        let Pattern::LogGamma { nu, lambda, alpha } = self else {
            return false;
        };
        nu.check(d.nu(), tol) && lambda.check(d.lambda(), tol) && alpha.check(d.alpha(), tol)
    }

    fn score(&self) -> u32 {
        match self {
            Pattern::Amoroso {
                a,
                theta,
                alpha,
                beta,
            } => a.score() + theta.score() + alpha.score() + beta.score(),
            Pattern::LogGamma { nu, lambda, alpha } => nu.score() + lambda.score() + alpha.score(),
        }
    }
}

/// A bag of named parameter values. Keys are matched case-insensitively
/// with separator characters ignored.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Params {
    values: BTreeMap<String, f64>,
}

impl Params {
    pub fn new() -> Self {
        Params::default()
    }

    pub fn from_pairs(pairs: &[(&str, f64)]) -> Self {
        let mut p = Params::new();
        for (name, value) in pairs {
            p.set(name, *value);
        }
        p
    }

    pub fn set(&mut self, name: &str, value: f64) {
        self.values.insert(normalize(name), value);
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        self.values.get(&normalize(name)).copied()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Normalized key names, in sorted order.
    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.values.keys().map(String::as_str)
    }
}

/// Constructor signature: named parameters in, family member out.
pub(crate) type BuildFn = fn(&Params) -> Result<Dist, CatalogError>;

/// One named special case: a row of the family tables.
pub struct CatalogEntry {
    pub name: &'static str,
    pub synonyms: &'static [&'static str],
    pub family: Family,
    pub params: &'static [ParamSpec],
    /// Mapping from the named parameters into family parameters,
    /// e.g. `"Amoroso(0, sqrt(2*sigma^2), 1, 2)"`.
    pub mapping: &'static str,
    /// Tag of the defining density form; entries that specialize the same
    /// form share it (Erlang and Wien both carry `"Gamma"`).
    pub anchor: &'static str,
    /// One-line description.
    pub note: &'static str,
    /// The limiting substitution rule, for entries that arise as limits.
    pub limit: Option<&'static str>,
    pub(crate) build: Option<BuildFn>,
    pub(crate) pattern: Option<Pattern>,
}

impl fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CatalogEntry")
            .field("name", &self.name)
            .field("family", &self.family)
            .field("mapping", &self.mapping)
            .finish_non_exhaustive()
    }
}

impl CatalogEntry {
    /// Whether [`construct`] can build this entry.
    pub fn is_constructible(&self) -> bool {
        self.build.is_some()
    }

    /// A valid example parameter set (each parameter at its constraint's
    /// representative value).
    pub fn example_params(&self) -> Params {
        let mut p = Params::new();
        for spec in self.params {
            p.set(spec.name, spec.constraint.example());
        }
        p
    }
}

/// Errors from name resolution and construction.
#[derive(Debug, Clone, PartialEq)]
pub enum CatalogError {
    UnknownName {
        name: String,
        suggestions: Vec<&'static str>,
    },
    /// The entry is a limiting form and has no member distributions.
    NotConstructible {
        name: &'static str,
        rule: &'static str,
    },
    MissingParam {
        entry: &'static str,
        param: &'static str,
    },
    UnknownParam {
        entry: &'static str,
        param: String,
    },
    /// A named parameter violates the entry's constraint.
    Constraint {
        entry: &'static str,
        param: &'static str,
        value: f64,
        requirement: &'static str,
    },
    /// Bubbled up from family parameter validation.
    Invalid(Error),
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::UnknownName { name, suggestions } => {
                write!(f, "unknown distribution \"{name}\"")?;
                if !suggestions.is_empty() {
                    write!(f, " (closest matches: ")?;
                    for (i, s) in suggestions.iter().enumerate() {
                        if i > 0 {
                            write!(f, ", ")?;
                        }
                        write!(f, "\"{s}\"")?;
                    }
                    write!(f, ")")?;
                }
                Ok(())
            }
            CatalogError::NotConstructible { name, rule } => write!(
                f,
                "\"{name}\" is a limiting form, not a constructible member: {rule}"
            ),
            CatalogError::MissingParam { entry, param } => {
                write!(f, "{entry}: missing parameter \"{param}\"")
            }
            CatalogError::UnknownParam { entry, param } => {
                write!(f, "{entry}: unknown parameter \"{param}\"")
            }
            CatalogError::Constraint {
                entry,
                param,
                value,
                requirement,
            } => write!(
                f,
                "{entry}: parameter {param} = {value} violates constraint: must be {requirement}"
            ),
            CatalogError::Invalid(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for CatalogError {}

impl From<Error> for CatalogError {
    fn from(e: Error) -> Self {
        CatalogError::Invalid(e)
    }
}

/// All catalog entries, parents first, then specializations in table order.
pub fn entries() -> &'static [CatalogEntry] {
    data::ENTRIES
}

/// The entries that are limiting forms (they carry a substitution rule).
pub fn limit_entries() -> Vec<&'static CatalogEntry> {
    data::ENTRIES.iter().filter(|e| e.limit.is_some()).collect()
}

/// Normalize a name: lowercase, separator and punctuation characters
/// dropped.
pub fn normalize(name: &str) -> String {
    name.chars()
        .filter(|c| c.is_alphanumeric())
        .flat_map(char::to_lowercase)
        .collect()
}

/// Resolve a canonical name or synonym to its entry.
pub fn lookup(name: &str) -> Result<&'static CatalogEntry, CatalogError> {
    let key = normalize(name);
    for entry in data::ENTRIES {
        if normalize(entry.name) == key {
            return Ok(entry);
        }
        if entry.synonyms.iter().any(|s| normalize(s) == key) {
            return Ok(entry);
        }
    }
    Err(CatalogError::UnknownName {
        name: name.to_owned(),
        suggestions: suggest(&key),
    })
}

/// Build the named distribution from named parameters, checking the
/// entry's constraints and rejecting unknown or missing parameters.
pub fn construct(name: &str, params: &Params) -> Result<Dist, CatalogError> {
    let entry = lookup(name)?;
    let Some(build) = entry.build else {
        return Err(CatalogError::NotConstructible {
            name: entry.name,
            rule: entry.limit.unwrap_or(entry.mapping),
        });
    };
    for spec in entry.params {
        let Some(value) = params.get(spec.name) else {
            return Err(CatalogError::MissingParam {
                entry: entry.name,
                param: spec.name,
            });
        };
        if !spec.constraint.check(value) {
            return Err(CatalogError::Constraint {
                entry: entry.name,
                param: spec.name,
                value,
                requirement: spec.constraint.describe(),
            });
        }
    }
    for key in params.keys() {
        if !entry.params.iter().any(|s| normalize(s.name) == key) {
            return Err(CatalogError::UnknownParam {
                entry: entry.name,
                param: key.to_owned(),
            });
        }
    }
    build(params)
}

/// Names of all entries whose parameter pattern matches `d` within `tol`,
/// most specific first.
pub fn classify(d: &Amoroso, tol: f64) -> Vec<&'static str> {
    let mut hits: Vec<(u32, &'static str)> = data::ENTRIES
        .iter()
        .filter_map(|e| {
            let p = e.pattern.as_ref()?;
            p.matches_amoroso(d, tol).then(|| (p.score(), e.name))
        })
        .collect();
    hits.sort_by_key(|&(score, _)| Reverse(score));
    hits.into_iter().map(|(_, n)| n).collect()
}

/// Log-gamma counterpart of [`classify`].
pub fn classify_log_gamma(d: &LogGamma, tol: f64) -> Vec<&'static str> {
    let mut hits: Vec<(u32, &'static str)> = data::ENTRIES
        .iter()
        .filter_map(|e| {
            let p = e.pattern.as_ref()?;
            p.matches_log_gamma(d, tol).then(|| (p.score(), e.name))
        })
        .collect();
    hits.sort_by_key(|&(score, _)| Reverse(score));
    hits.into_iter().map(|(_, n)| n).collect()
}

/// Nearest catalog names by edit distance over normalized forms.
fn suggest(key: &str) -> Vec<&'static str> {
    let mut scored: Vec<(usize, &'static str)> = Vec::new();
    for entry in data::ENTRIES {
        let mut best = levenshtein(key, &normalize(entry.name));
        for s in entry.synonyms {
            best = best.min(levenshtein(key, &normalize(s)));
        }
        scored.push((best, entry.name));
    }
    scored.sort_by_key(|(d, _)| *d);
    let cutoff = (key.len() / 3).max(2);
    scored
        .into_iter()
        .take_while(|(d, _)| *d <= cutoff)
        .take(3)
        .map(|(_, n)| n)
        .collect()
}

fn levenshtein(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut cur = vec![0; b.len() + 1];
    for (i, ca) in a.iter().enumerate() {
        cur[0] = i + 1;
        for (j, cb) in b.iter().enumerate() {
            let sub = prev[j] + usize::from(ca != cb);
            cur[j + 1] = sub.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        core::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-14 * b.abs().max(1.0)
    }

    #[test]
    fn name_normalization() {
        assert_eq!(normalize("Chi-Square"), "chisquare");
        assert_eq!(normalize("chi_square"), "chisquare");
        assert_eq!(normalize("Chi Square"), "chisquare");
        assert_eq!(normalize("Laplace's second law of error"), normalize("laplaceSSecondLawofError"));
    }

    #[test]
    fn every_name_and_synonym_is_unique() {
        let mut seen = BTreeSet::new();
        for e in entries() {
            assert!(seen.insert(normalize(e.name)), "duplicate name {}", e.name);
            for s in e.synonyms {
                assert!(seen.insert(normalize(s)), "duplicate synonym {s}");
            }
        }
    }

    #[test]
    fn canonical_names_are_fixed_points_and_synonyms_resolve() {
        for e in entries() {
            assert_eq!(lookup(e.name).unwrap().name, e.name);
            for s in e.synonyms {
                assert_eq!(lookup(s).unwrap().name, e.name, "synonym {s}");
            }
        }
    }

    #[test]
    fn construct_rayleigh() {
        let d = construct("rayleigh", &Params::from_pairs(&[("sigma", 1.0)])).unwrap();
        let a = d.as_amoroso().unwrap();
        assert!(close(a.a(), 0.0));
        assert!(close(a.theta(), 2.0_f64.sqrt()));
        assert!(close(a.alpha(), 1.0));
        assert!(close(a.beta(), 2.0));
    }

    #[test]
    fn construct_chi_square() {
        let d = construct("chi-square", &Params::from_pairs(&[("k", 4.0)])).unwrap();
        let a = d.as_amoroso().unwrap();
        assert!(close(a.theta(), 2.0) && close(a.alpha(), 2.0) && close(a.beta(), 1.0));
    }

    #[test]
    fn construct_standard_gumbel() {
        let d = construct("standard gumbel", &Params::new()).unwrap();
        let g = d.as_log_gamma().unwrap();
        assert!(close(g.nu(), 0.0) && close(g.lambda(), -1.0) && close(g.alpha(), 1.0));
    }

    #[test]
    fn lookup_examples_from_the_index() {
        assert_eq!(lookup("Vinci").unwrap().name, "inverse gamma");
        assert_eq!(lookup("doubly exponential").unwrap().name, "Gumbel");
        let wien = lookup("wien").unwrap();
        assert_eq!(wien.name, "Wien");
        assert_eq!(wien.anchor, "Gamma");
        assert_eq!(lookup("log-Weibull").unwrap().name, "Gumbel");
        assert_eq!(lookup("van der Waals profile").unwrap().name, "Levy");
        assert_eq!(lookup("Rosin-Rammler").unwrap().name, "Weibull");
        assert_eq!(lookup("GEV").unwrap().name, "Fisher-Tippett");
    }

    #[test]
    fn unknown_name_suggests_neighbors() {
        let err = lookup("Raileigh").unwrap_err();
        match err {
            CatalogError::UnknownName { suggestions, .. } => {
                assert!(suggestions.contains(&"Rayleigh"), "{suggestions:?}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn constraint_violations_are_named() {
        let err = construct("Erlang", &Params::from_pairs(&[("theta", 1.0), ("n", 2.5)]));
        match err.unwrap_err() {
            CatalogError::Constraint { entry, param, .. } => {
                assert_eq!(entry, "Erlang");
                assert_eq!(param, "n");
            }
            other => panic!("unexpected {other:?}"),
        }
        let err = construct("Erlang", &Params::from_pairs(&[("theta", -1.0), ("n", 2.0)]));
        assert!(matches!(err.unwrap_err(), CatalogError::Constraint { param: "theta", .. }));
        let err = construct("chi", &Params::from_pairs(&[("k", 2.5)]));
        assert!(matches!(err.unwrap_err(), CatalogError::Constraint { param: "k", .. }));
    }

    #[test]
    fn missing_and_unknown_params_are_rejected() {
        let err = construct("rayleigh", &Params::new()).unwrap_err();
        assert!(matches!(err, CatalogError::MissingParam { param: "sigma", .. }));
        let err = construct(
            "rayleigh",
            &Params::from_pairs(&[("sigma", 1.0), ("bogus", 2.0)]),
        )
        .unwrap_err();
        assert!(matches!(err, CatalogError::UnknownParam { .. }));
    }

    #[test]
    fn limit_entries_are_documented_but_not_constructible() {
        let limits = limit_entries();
        let names: Vec<_> = limits.iter().map(|e| e.name).collect();
        assert!(names.contains(&"normal"));
        assert!(names.contains(&"log-normal"));
        assert!(names.contains(&"power law"));
        assert!(names.contains(&"log-gamma")); // also a constructible family
        for e in &limits {
            assert!(e.limit.is_some());
        }
        let err = construct(
            "normal",
            &Params::from_pairs(&[("mu", 0.0), ("sigma", 1.0)]),
        )
        .unwrap_err();
        assert!(matches!(err, CatalogError::NotConstructible { .. }));
        assert!(lookup("power law").unwrap().note.contains("improper"));
    }

    #[test]
    fn every_constructible_entry_builds_from_example_params() {
        for e in entries() {
            if !e.is_constructible() {
                continue;
            }
            let d = construct(e.name, &e.example_params())
                .unwrap_or_else(|err| panic!("{}: {err}", e.name));
            // The built member must be internally consistent.
            let x = d.quantile(0.3).unwrap();
            assert!((d.cdf(x) - 0.3).abs() < 1e-9, "{}", e.name);
        }
    }

    #[test]
    fn classify_finds_maxwell() {
        let d = Amoroso::new(0.0, 2.0_f64.sqrt(), 1.5, 2.0).unwrap();
        let names = classify(&d, 1e-12);
        assert!(names.contains(&"Maxwell"), "{names:?}");
        assert!(names.contains(&"chi"), "{names:?}"); // k = 3
        assert!(names.contains(&"Stacy"));
        assert!(names.contains(&"Amoroso"));
        assert!(!names.contains(&"Rayleigh"));
    }

    #[test]
    fn classify_standard_exponential_first() {
        let d = Amoroso::new(0.0, 1.0, 1.0, 1.0).unwrap();
        let names = classify(&d, 1e-12);
        assert_eq!(names[0], "standard exponential");
        assert!(names.contains(&"exponential"));
        assert!(names.contains(&"gamma"));
        assert!(names.contains(&"Weibull"));
    }

    #[test]
    fn classify_generic_member_is_amoroso_only() {
        let d = Amoroso::new(1.3, 0.7, 2.1, 1.7).unwrap();
        assert_eq!(classify(&d, 1e-12), vec!["Amoroso"]);
    }

    #[test]
    fn classify_log_gamma_members() {
        let g = LogGamma::new(0.0, -1.0, 1.0).unwrap();
        let names = classify_log_gamma(&g, 1e-12);
        assert_eq!(names[0], "standard Gumbel");
        assert!(names.contains(&"Gumbel"));
        assert!(names.contains(&"log-gamma"));

        let bhp = LogGamma::new(0.3, 2.0, core::f64::consts::FRAC_PI_2).unwrap();
        assert!(classify_log_gamma(&bhp, 1e-12).contains(&"BHP"));
    }

    #[test]
    fn classify_respects_integer_constraints() {
        // α = 2.1 is not a valid generalized Fisher-Tippett shape.
        let d = Amoroso::new(0.5, 1.0, 2.1, 1.5).unwrap();
        let names = classify(&d, 1e-12);
        assert!(!names.contains(&"generalized Fisher-Tippett"));
        let d = Amoroso::new(0.5, 1.0, 3.0, 1.5).unwrap();
        assert!(classify(&d, 1e-12).contains(&"generalized Fisher-Tippett"));
    }

    #[test]
    fn chain_consistency_scaled_members() {
        // ScaledChi(1, k) ≡ Chi(k); InvChiSqr(k) ≡ ScaledInvChiSqr(1, k);
        // HalfNormal(σ) ≡ ScaledChi(σ, 1).
        let k = 3.0;
        let chain = [
            (
                construct("scaled chi", &Params::from_pairs(&[("sigma", 1.0), ("k", k)])),
                construct("chi", &Params::from_pairs(&[("k", k)])),
            ),
            (
                construct("inverse chi-square", &Params::from_pairs(&[("k", k)])),
                construct(
                    "scaled inverse chi-square",
                    &Params::from_pairs(&[("sigma", 1.0), ("k", k)]),
                ),
            ),
            (
                construct("half-normal", &Params::from_pairs(&[("sigma", 0.7)])),
                construct(
                    "scaled chi",
                    &Params::from_pairs(&[("sigma", 0.7), ("k", 1.0)]),
                ),
            ),
        ];
        for (lhs, rhs) in chain {
            let (l, r) = (lhs.unwrap(), rhs.unwrap());
            let (l, r) = (l.as_amoroso().unwrap(), r.as_amoroso().unwrap());
            assert!(close(l.a(), r.a()));
            assert!(close(l.theta(), r.theta()));
            assert!(close(l.alpha(), r.alpha()));
            assert!(close(l.beta(), r.beta()));
        }
    }

    #[test]
    fn wien_is_gamma_alpha_four() {
        let w = construct("wien", &Params::from_pairs(&[("T", 2.0)])).unwrap();
        let g = construct(
            "gamma",
            &Params::from_pairs(&[("theta", 2.0), ("alpha", 4.0)]),
        )
        .unwrap();
        assert_eq!(w, g);
    }
}
