//! Builds `Λ(t) = tⁿ/n! − aHP(t)`, applies the derivative rule, and emits
//! certified Waldschmidt upper bounds.
//!
//! The largest real root of `Λ^{(c)}` bounds the Waldschmidt constant from
//! above when the symbolic powers admit a depth subsequence of value
//! `n − c`. The derivative order is caller-supplied data: depth is not
//! computable on this side, so the usual choices are `c = 0` for points and
//! ACM curves such as crosses, and `c = r` for `r`-dimensional flats.

use num::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{
    cauchy_bound, factorial, format_rat, largest_real_root, parse_rat, sturm_count, Poly, Rat,
    RootInterval, REPORT_DIGITS,
};
use crate::shape::{ahp_configuration, Configuration};

/// `Λ(t) = tⁿ/n! − aHP(t)` for the configuration's disjoint union.
pub fn lambda_poly(config: &Configuration) -> Poly {
    let n = config.n();
    let lead = Poly::monomial(Rat::from_integer(factorial(n)).recip(), n);
    &lead - &ahp_configuration(config)
}

/// The end product: `Λ`, its `c`-th derivative, and a certified interval
/// around the derivative's largest real root, if any.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BoundReportJson", into = "BoundReportJson")]
pub struct BoundReport {
    pub lambda: Poly,
    pub derivative_order: usize,
    pub lambda_c: Poly,
    pub root: Option<RootInterval>,
    pub validity_threshold: Rat,
    pub notes: Vec<String>,
}

impl BoundReport {
    /// Certified upper bound for the Waldschmidt constant, when present.
    pub fn bound(&self) -> Option<&Rat> {
        self.root.as_ref().map(|iv| &iv.hi)
    }

    pub fn root_decimal(&self) -> Option<String> {
        self.root.as_ref().map(|iv| iv.decimal(REPORT_DIGITS))
    }
}

#[derive(Serialize, Deserialize)]
struct BoundReportJson {
    lambda: Poly,
    c: usize,
    lambda_c: Poly,
    root: Option<RootInterval>,
    root_decimal: Option<String>,
    validity_threshold: String,
    notes: Vec<String>,
}

impl TryFrom<BoundReportJson> for BoundReport {
    type Error = Error;
    fn try_from(raw: BoundReportJson) -> Result<Self> {
        Ok(BoundReport {
            lambda: raw.lambda,
            derivative_order: raw.c,
            lambda_c: raw.lambda_c,
            root: raw.root,
            validity_threshold: parse_rat(&raw.validity_threshold)?,
            notes: raw.notes,
        })
    }
}

impl From<BoundReport> for BoundReportJson {
    fn from(report: BoundReport) -> BoundReportJson {
        let root_decimal = report.root_decimal();
        BoundReportJson {
            lambda: report.lambda,
            c: report.derivative_order,
            lambda_c: report.lambda_c,
            root: report.root,
            root_decimal,
            validity_threshold: format_rat(&report.validity_threshold),
            notes: report.notes,
        }
    }
}

/// Computes `Λ`, `Λ^{(c)}`, and a certified interval of width at most `eps`
/// around the largest real root of `Λ^{(c)}`.
///
/// A missing real root is a result, not an error: the report then carries
/// `root = None`, a note that the theorem yields no bound at this
/// derivative order, and the outcome of retrying at order `c + 1`.
pub fn waldschmidt_bound(config: &Configuration, eps: &Rat) -> Result<BoundReport> {
    let lambda = lambda_poly(config);
    let order = config.derivative_order();
    let lambda_c = lambda.nth_derivative(order);
    let root = largest_real_root(&lambda_c, eps)?;
    let validity_threshold = config.max_intercept();

    let mut notes = vec![format!(
        "aHP polynomial form is valid for t >= {}",
        format_rat(&validity_threshold)
    )];
    match &root {
        Some(iv) => {
            certify_largest(&lambda_c, iv);
            if iv.is_exact() {
                notes.push(format!("largest root is exactly {}", format_rat(&iv.lo)));
            }
            if iv.hi < Rat::one() {
                notes.push(
                    "warning: certified bound is below 1, but any nonempty subscheme has \
                     Waldschmidt constant >= 1; check the configuration"
                        .into(),
                );
            }
        }
        None => {
            notes.push(format!(
                "lambda^({order}) has no real root: the theorem yields no bound at \
                 derivative order {order}; retry with derivative order {}",
                order + 1
            ));
            if order + 1 < config.n() {
                let next = lambda.nth_derivative(order + 1);
                match largest_real_root(&next, eps)? {
                    Some(iv) => notes.push(format!(
                        "at derivative order {} the largest real root is ~ {} in [{}, {}]",
                        order + 1,
                        iv.decimal(REPORT_DIGITS),
                        format_rat(&iv.lo),
                        format_rat(&iv.hi)
                    )),
                    None => notes.push(format!(
                        "derivative order {} also has no real root",
                        order + 1
                    )),
                }
            }
        }
    }

    Ok(BoundReport {
        lambda,
        derivative_order: order,
        lambda_c,
        root,
        validity_threshold,
        notes,
    })
}

/// The interval from `largest_real_root` must have no root of `p` beyond
/// its upper endpoint; re-check against the Cauchy bound.
fn certify_largest(p: &Poly, iv: &RootInterval) {
    let bound = cauchy_bound(p).expect("nonconstant by construction");
    if iv.hi < bound {
        let beyond = sturm_count(p, &iv.hi, &bound).expect("valid interval");
        assert_eq!(beyond, 0, "root interval failed largest-root certification");
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tighter {
    /// The certified Λ-root bound is strictly smaller.
    RootBound,
    /// The best sampled `alpha_m / m` is strictly smaller.
    SampleBound,
    Equal,
    /// The report carries no root, so only the sample bound applies.
    NoRoot,
}

/// Outcome of comparing a bound report against sampled initial degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleComparison {
    /// Best (smallest) `alpha_m / m`; itself an upper bound for the
    /// Waldschmidt constant, which is an infimum of these ratios.
    pub sample_bound: Rat,
    /// First `m` attaining the best ratio.
    pub sample_bound_at_m: u64,
    /// Certified upper endpoint of the report's root interval.
    pub root_bound: Option<Rat>,
    pub tighter: Tighter,
    /// When the true Waldschmidt constant is supplied: whether
    /// `root.hi >= value − width_bound` (the theorem cannot be violated).
    pub theorem_consistent: Option<bool>,
}

/// Compares the report's certified root bound with sampled values
/// `alpha_m = α(I^{(m)})`, and optionally checks consistency against a
/// known Waldschmidt constant.
pub fn check_bound_against_samples(
    report: &BoundReport,
    samples: &[(u64, u64)],
    known_value: Option<&Rat>,
) -> Result<SampleComparison> {
    if samples.is_empty() {
        return Err(Error::InvalidConfiguration("samples must be nonempty".into()));
    }
    if samples.iter().any(|(m, _)| *m == 0) {
        return Err(Error::InvalidConfiguration("sample m must be >= 1".into()));
    }
    let (sample_bound_at_m, sample_bound) = samples
        .iter()
        .map(|(m, alpha_m)| (*m, Rat::new((*alpha_m).into(), (*m).into())))
        .min_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)))
        .expect("nonempty samples");

    let root_bound = report.bound().cloned();
    let tighter = match &root_bound {
        None => Tighter::NoRoot,
        Some(r) => match r.cmp(&sample_bound) {
            std::cmp::Ordering::Less => Tighter::RootBound,
            std::cmp::Ordering::Greater => Tighter::SampleBound,
            std::cmp::Ordering::Equal => Tighter::Equal,
        },
    };
    let theorem_consistent = match (known_value, &report.root) {
        (Some(value), Some(iv)) => Some(iv.hi >= value - &iv.width_bound),
        _ => None,
    };
    Ok(SampleComparison {
        sample_bound,
        sample_bound_at_m,
        root_bound,
        tighter,
        theorem_consistent,
    })
}
