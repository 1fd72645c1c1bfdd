//! End-to-end certification for one `(n, k)`: choose weights, compute the
//! whole spectrum, check the three eigenvalue properties and turn the ratio
//! bound into coclique bounds for `Sym(n)` and `Alt(n)`.
//!
//! The properties are
//! 1. the largest eigenvalue is `C(n,k) - 1`,
//! 2. the eigenvalue of `[n-i,i]` is `-1` for `1 <= i <= k`,
//! 3. every eigenvalue is at least `-1`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::CertifyError;
use crate::lp::{feasibility_search_with, LpOptions, SearchOutcome};
use crate::partitions::{binomial, factorial, Partition};
use crate::rational::{self, int, Rational};
use crate::schemes::{full_spectrum, max_multiplicity, ratio_bound, Eigenvalue, Spectrum, WeightScheme};
use crate::weights::Family;

/// Where a certificate's weights came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "method", rename_all = "kebab-case")]
pub enum Provenance {
    ClosedForm {
        family: String,
    },
    LpSearch {
        columns: usize,
        rows: usize,
        rounds: usize,
        pivots: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    ClosedForm(Family),
    Search,
}

/// Closed forms are only trusted from the point where their eigenvalue
/// sign guarantees hold; everything smaller goes to the LP search.
pub fn route(n: u32, k: u32) -> Result<Route, CertifyError> {
    let family = match Family::of(n, k) {
        Some(f) if n > 2 * k => f,
        _ => return Err(CertifyError::Unsupported { n, k }),
    };
    Ok(if n >= family.certified_min() {
        Route::ClosedForm(family)
    } else {
        Route::Search
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Certified,
    Failed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub property: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shape: Option<Partition>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "opt_pq")]
    pub value: Option<Rational>,
}

fn opt_pq<S: serde::Serializer>(x: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(x) => rational::serialize(x, s),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Conclusions {
    pub sym_density_one: bool,
    pub alt_density_one: bool,
}

/// Largest `|xi|` over shapes of dimension above a threshold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TailReport {
    #[serde(with = "rational::decimal")]
    pub threshold: BigInt,
    pub shapes: usize,
    #[serde(with = "rational")]
    pub max_abs: Rational,
    pub attained_at: Option<Partition>,
}

impl TailReport {
    pub fn ok(&self) -> bool {
        self.max_abs < Rational::one()
    }
}

/// Checks `|xi_lambda| < 1` whenever `f^lambda > threshold`.
pub fn verify_tail(spectrum: &Spectrum, threshold: &BigInt) -> Result<TailReport, CertifyError> {
    let mut report = TailReport {
        threshold: threshold.clone(),
        shapes: 0,
        max_abs: Rational::zero(),
        attained_at: None,
    };
    for e in &spectrum.values {
        if BigInt::from(e.dimension.clone()) <= *threshold {
            continue;
        }
        report.shapes += 1;
        let a = e.value.abs();
        if report.attained_at.is_none() || a > report.max_abs {
            report.max_abs = a;
            report.attained_at = Some(e.shape.clone());
        }
    }
    if !report.ok() {
        let shape = report.attained_at.clone().expect("nonempty when max_abs >= 1");
        return Err(CertifyError::TailViolation {
            value: rational::to_pq(spectrum.get(&shape).expect("shape from spectrum")),
            shape,
        });
    }
    Ok(report)
}

/// What the closed-form analysis says about one low-dimensional eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    Top,
    MinusOne,
    Zero,
    Positive,
    AboveMinusOne,
}

impl Claim {
    pub fn holds(self, value: &Rational, alpha: &Rational) -> bool {
        match self {
            Claim::Top => value == alpha,
            Claim::MinusOne => rational::is_minus_one(value),
            Claim::Zero => value.is_zero(),
            Claim::Positive => value.is_positive(),
            Claim::AboveMinusOne => *value > -Rational::one(),
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Claim::Top => "= C(n,k)-1",
            Claim::MinusOne => "= -1",
            Claim::Zero => "= 0",
            Claim::Positive => "> 0",
            Claim::AboveMinusOne => "> -1",
        })
    }
}

/// Shape selector `(tail, conjugate)`: the shape `(n - |tail|, tail)`,
/// transposed when the flag is set.
type ClaimRow = (&'static [u32], bool, Claim);

const PINS: &[ClaimRow] = &[
    (&[], false, Claim::Top),
    (&[1], false, Claim::MinusOne),
    (&[2], false, Claim::MinusOne),
    (&[3], false, Claim::MinusOne),
];

/// Claimed values of the low-dimensional eigenvalues of each closed form.
pub fn low_dim_claims(family: Family) -> Vec<ClaimRow> {
    use Claim::*;
    let extra: &[ClaimRow] = match family {
        Family::K3Odd => &[(&[], true, Top)],
        Family::K3Even => &[
            (&[1, 1], false, Positive),
            (&[2, 1], false, Zero),
            (&[1, 1, 1], false, AboveMinusOne),
            (&[4], false, Positive),
            (&[1, 1, 1, 1], false, Positive),
        ],
        Family::K4Even => &[
            (&[4], false, MinusOne),
            (&[1, 1], false, Positive),
            (&[2, 1], false, MinusOne),
            (&[1, 1, 1], false, Zero),
            (&[1, 1, 1, 1], false, Zero),
            (&[3, 1], false, AboveMinusOne),
            (&[2, 2], false, Positive),
            (&[2, 1, 1], false, AboveMinusOne),
            (&[5], false, AboveMinusOne),
            (&[1, 1, 1, 1, 1], false, AboveMinusOne),
        ],
        Family::K4Odd => &[
            (&[], true, Top),
            (&[4], false, MinusOne),
            (&[1, 1], false, MinusOne),
            (&[2, 1], false, MinusOne),
            (&[1, 1, 1], false, MinusOne),
            (&[1, 1, 1, 1], false, Positive),
            (&[3, 1], false, Positive),
            (&[2, 2], false, Positive),
            (&[2, 1, 1], false, Positive),
            (&[5], false, Zero),
            (&[1, 1, 1, 1, 1], false, AboveMinusOne),
        ],
        Family::K5Even => &[
            (&[4], false, MinusOne),
            (&[1, 1], false, MinusOne),
            (&[2, 1], false, MinusOne),
            (&[1, 1, 1, 1], false, MinusOne),
            (&[1, 1, 1], false, MinusOne),
            (&[2, 1, 1], false, MinusOne),
            (&[2, 2], false, MinusOne),
            (&[3, 1], false, MinusOne),
            (&[1, 1, 1, 1, 1], false, Positive),
            (&[5], false, MinusOne),
            (&[4, 1], false, AboveMinusOne),
            (&[3, 1, 1], false, AboveMinusOne),
            (&[3, 2], false, AboveMinusOne),
            (&[2, 2, 1], false, AboveMinusOne),
            (&[2, 1, 1, 1], false, AboveMinusOne),
            (&[1, 1, 1, 1, 1, 1], false, AboveMinusOne),
            (&[6], false, AboveMinusOne),
        ],
        Family::K5Odd => &[
            (&[4], false, MinusOne),
            (&[5], false, MinusOne),
            (&[1, 1], false, MinusOne),
            (&[2, 1], false, MinusOne),
            (&[1, 1, 1], false, AboveMinusOne),
            (&[1, 1, 1, 1], false, MinusOne),
            (&[3, 1], false, MinusOne),
            (&[2, 2], false, MinusOne),
            (&[2, 1, 1], false, MinusOne),
            (&[1, 1, 1, 1, 1], false, Positive),
            (&[4, 1], false, Positive),
            (&[3, 2], false, Positive),
            (&[3, 1, 1], false, AboveMinusOne),
            (&[2, 2, 1], false, Positive),
            (&[2, 1, 1, 1], false, AboveMinusOne),
            (&[6], false, AboveMinusOne),
            (&[1, 1, 1, 1, 1, 1], false, AboveMinusOne),
        ],
    };
    PINS.iter().chain(extra).copied().collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimLine {
    pub shape: Partition,
    pub claim: Claim,
    #[serde(with = "rational")]
    pub value: Rational,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LowDimReport {
    pub family: String,
    pub n: u32,
    pub lines: Vec<ClaimLine>,
}

impl LowDimReport {
    pub fn failures(&self) -> impl Iterator<Item = &ClaimLine> {
        self.lines.iter().filter(|l| !l.holds)
    }
}

/// Evaluates every claimed low-dimensional eigenvalue of `family` on
/// `spectrum`. The spectrum should come from that family's closed form.
pub fn low_dim_eigen_report(spectrum: &Spectrum, family: Family) -> Result<LowDimReport, CertifyError> {
    let n = spectrum.scheme.n;
    let alpha = int(BigInt::from(binomial(n, family.k()))) - int(1);
    let mut lines = Vec::new();
    for (tail, conj, claim) in low_dim_claims(family) {
        let shape = Partition::with_long_first_part(n, tail).expect("n is large enough for the tails");
        let shape = if conj { shape.conjugate() } else { shape };
        let value = spectrum.get(&shape).expect("spectrum covers every shape").clone();
        let holds = claim.holds(&value, &alpha);
        lines.push(ClaimLine { shape, claim, value, holds });
    }
    let report = LowDimReport {
        family: family.name().to_string(),
        n,
        lines,
    };
    if let Some(bad) = report.failures().next() {
        return Err(CertifyError::ClaimFailed {
            shape: bad.shape.clone(),
            claim: bad.claim.to_string(),
            value: rational::to_pq(&bad.value),
        });
    }
    Ok(report)
}

#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    pub schema: u32,
    pub n: u32,
    pub k: u32,
    pub status: Status,
    pub provenance: Provenance,
    pub scheme: WeightScheme,
    #[serde(with = "rational")]
    pub max_eigenvalue: Rational,
    pub max_attained_at: BTreeSet<Partition>,
    pub multiplicity: u8,
    #[serde(with = "rational")]
    pub min_eigenvalue: Rational,
    pub min_attained_at: BTreeSet<Partition>,
    #[serde(with = "rational::decimal")]
    pub sym_bound: BigInt,
    #[serde(serialize_with = "opt_decimal")]
    pub alt_bound: Option<BigInt>,
    pub conclusions: Conclusions,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tail: Option<TailReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub low_dim: Option<LowDimReport>,
    /// Every shape whose eigenvalue is `<= 0`.
    pub nonpositive: Vec<Eigenvalue>,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
}

fn opt_decimal<S: serde::Serializer>(x: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(x) => rational::decimal::serialize(x, s),
        None => s.serialize_none(),
    }
}

impl Certificate {
    pub fn is_certified(&self) -> bool {
        self.status == Status::Certified
    }

    /// Size of a canonical coclique, `k!(n-k)!`.
    pub fn stabilizer_order(&self) -> BigInt {
        BigInt::from(factorial(self.k)) * BigInt::from(factorial(self.n - self.k))
    }
}

#[derive(Debug, Clone, Default)]
pub struct CertifyOptions {
    pub lp: LpOptions,
}

pub fn certify(n: u32, k: u32) -> Result<Certificate, CertifyError> {
    certify_with(n, k, &CertifyOptions::default())
}

pub fn certify_with(n: u32, k: u32, opts: &CertifyOptions) -> Result<Certificate, CertifyError> {
    let mut notes = Vec::new();
    let (scheme, provenance, family) = match route(n, k)? {
        Route::ClosedForm(f) => (
            f.closed_form(n)?,
            Provenance::ClosedForm {
                family: f.name().to_string(),
            },
            Some(f),
        ),
        Route::Search => {
            let family = Family::of(n, k).expect("routed");
            if n >= family.formula_min() {
                notes.push(format!(
                    "the {} closed form is defined at n = {n} but its eigenvalue signs are only \
                     guaranteed from n = {}; weights found by search instead",
                    family.name(),
                    family.certified_min()
                ));
            }
            let report = feasibility_search_with(n, k, true, &opts.lp)?;
            let provenance = Provenance::LpSearch {
                columns: report.columns,
                rows: report.rows,
                rounds: report.rounds,
                pivots: report.pivots,
            };
            match report.outcome {
                SearchOutcome::Feasible { scheme } => (scheme, provenance, None),
                SearchOutcome::Infeasible => return Err(CertifyError::Infeasible { n, k }),
                SearchOutcome::Undecided { reason } => {
                    return Err(CertifyError::Undecided { n, k, reason })
                }
            }
        }
    };
    let spectrum = full_spectrum(&scheme);
    let mut violations = Vec::new();
    let alpha = int(BigInt::from(binomial(n, k))) - int(1);

    let max = spectrum.max().clone();
    let max_at = spectrum.argmax();
    if max != alpha {
        violations.push(Violation {
            property: "largest eigenvalue is C(n,k)-1".into(),
            shape: max_at.iter().next().cloned(),
            value: Some(max.clone()),
        });
    }
    let trivial = Partition::row(n);
    if spectrum.get(&trivial) != Some(&alpha) {
        violations.push(Violation {
            property: "trivial character affords C(n,k)-1".into(),
            shape: Some(trivial.clone()),
            value: spectrum.get(&trivial).cloned(),
        });
    }
    for i in 1..=k {
        let shape = Partition::new(vec![n - i, i]).expect("n > 2k");
        let v = spectrum.get(&shape).expect("shape present");
        if !rational::is_minus_one(v) {
            violations.push(Violation {
                property: "two-row eigenvalue is -1".into(),
                shape: Some(shape),
                value: Some(v.clone()),
            });
        }
    }
    let min = spectrum.min().clone();
    let min_at = spectrum.argmin();
    if min < -Rational::one() {
        violations.push(Violation {
            property: "every eigenvalue is at least -1".into(),
            shape: min_at.iter().next().cloned(),
            value: Some(min.clone()),
        });
    }

    // Multiplicity three ways: class parity, the sign character, and the
    // sum of squared dimensions over the shapes attaining the maximum.
    let by_parity = max_multiplicity(&scheme)?;
    let sign_shape = Partition::column(n);
    let by_sign = if spectrum.get(&sign_shape) == spectrum.get(&trivial) { 2 } else { 1 };
    let by_dims: BigInt = spectrum
        .values
        .iter()
        .filter(|e| e.value == max)
        .map(|e| {
            let f = BigInt::from(e.dimension.clone());
            &f * &f
        })
        .sum();
    if BigInt::from(by_parity) != by_dims || by_parity != by_sign {
        violations.push(Violation {
            property: format!(
                "top multiplicity agrees: parity {by_parity}, sign character {by_sign}, dimensions {by_dims}"
            ),
            shape: None,
            value: None,
        });
    }

    let tail = match family {
        Some(f) => match verify_tail(&spectrum, &f.tail_threshold(n)) {
            Ok(t) => Some(t),
            Err(CertifyError::TailViolation { shape, .. }) => {
                violations.push(Violation {
                    property: "high-dimensional eigenvalues below 1 in absolute value".into(),
                    value: spectrum.get(&shape).cloned(),
                    shape: Some(shape),
                });
                None
            }
            Err(e) => return Err(e),
        },
        None => None,
    };
    let low_dim = match family {
        Some(f) => match low_dim_eigen_report(&spectrum, f) {
            Ok(r) => Some(r),
            Err(CertifyError::ClaimFailed { shape, claim, .. }) => {
                violations.push(Violation {
                    property: format!("low-dimensional eigenvalue {claim}"),
                    value: spectrum.get(&shape).cloned(),
                    shape: Some(shape),
                });
                None
            }
            Err(e) => return Err(e),
        },
        None => None,
    };

    let order = BigInt::from(factorial(n));
    let stabilizer = BigInt::from(factorial(k)) * BigInt::from(factorial(n - k));
    let bound = if violations.is_empty() {
        ratio_bound(&order, &max, &min)?
    } else {
        int(order.clone())
    };
    let sym_bound = bound.floor().to_integer();
    let alt_bound = (by_parity == 2).then(|| (bound / int(2)).floor().to_integer());
    let certified = violations.is_empty();
    let conclusions = Conclusions {
        sym_density_one: certified && sym_bound == stabilizer,
        alt_density_one: certified && alt_bound.as_ref() == Some(&(&stabilizer / 2)),
    };
    let nonpositive = spectrum
        .values
        .iter()
        .filter(|e| !e.value.is_positive())
        .cloned()
        .collect();
    Ok(Certificate {
        schema: crate::SCHEMA_VERSION,
        n,
        k,
        status: if certified { Status::Certified } else { Status::Failed },
        provenance,
        scheme,
        max_eigenvalue: max,
        max_attained_at: max_at,
        multiplicity: by_parity,
        min_eigenvalue: min,
        min_attained_at: min_at,
        sym_bound,
        alt_bound,
        conclusions,
        tail,
        low_dim,
        nonpositive,
        violations,
        notes,
    })
}
