//! Exact feasibility search for weightings, used below the range of the
//! closed forms.
//!
//! Unknowns are the weights on every (even) `k`-derangement class. The
//! constraints fix the trivial eigenvalue at `C(n,k) - 1`, the `[n-i,i]`
//! eigenvalues at `-1`, and keep every other eigenvalue in `[-1, C(n,k) - 1]`.
//! There is one such pair of inequalities per shape, so rows are generated
//! lazily: solve with a few rows, evaluate the whole spectrum of the
//! candidate, add the rows it violates, repeat. Infeasibility of a subset
//! of rows already proves infeasibility of the full problem.
//!
//! The simplex itself is phase 1 only, on an integer tableau with a common
//! denominator (each pivot divides exactly by the previous pivot). The
//! tableau survives between rounds, so new rows start from the last basis.
//! Entering columns follow the largest coefficient, dropping to Bland's rule
//! after a run of degenerate pivots.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::characters::{dimension, mn_character};
use crate::error::WeightsError;
use crate::partitions::{binomial, derangement_classes, enumerate_partitions, parity, Partition};
use crate::rational::{int, Rational};
use crate::schemes::WeightScheme;

#[derive(Debug, Clone)]
pub struct LpOptions {
    /// Total simplex pivots over all rounds before giving up.
    pub max_pivots: usize,
    /// Row-generation rounds before giving up.
    pub max_rounds: usize,
    /// Refuse to run when `n` has more partitions than this.
    pub max_partitions: usize,
    /// Violated shapes added per round.
    pub rows_per_round: usize,
}

impl Default for LpOptions {
    fn default() -> Self {
        LpOptions {
            max_pivots: 500_000,
            max_rounds: 400,
            max_partitions: 60_000,
            rows_per_round: 12,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum SearchOutcome {
    Feasible { scheme: WeightScheme },
    Infeasible,
    Undecided { reason: String },
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub n: u32,
    pub k: u32,
    pub even_only: bool,
    pub columns: usize,
    pub rows: usize,
    pub rounds: usize,
    pub pivots: usize,
    #[serde(flatten)]
    pub outcome: SearchOutcome,
}

impl SearchReport {
    pub fn scheme(&self) -> Option<&WeightScheme> {
        match &self.outcome {
            SearchOutcome::Feasible { scheme } => Some(scheme),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Sense {
    Eq,
    Ge,
    Le,
}

#[derive(Debug, Clone)]
struct Row {
    coeffs: Vec<i128>,
    sense: Sense,
    rhs: BigInt,
}

enum Phase1 {
    Feasible(Vec<Rational>),
    Infeasible,
    PivotLimit,
}

/// Degenerate pivots in a row before switching to Bland's rule.
const STALL_LIMIT: usize = 50;

/// Phase-1 tableau over free variables `w = p - q`, kept between rounds so
/// that new rows warm-start from the current basis.
///
/// Every row is stored multiplied by the common denominator `denom`, so a
/// basic column holds `denom` in its own row and zero elsewhere. Rows whose
/// basic variable is an artificial have `basis[i] == None`; the objective
/// row is the sum of those rows, i.e. the total artificial value.
struct Tableau {
    vars: usize,
    rows: Vec<Vec<BigInt>>,
    rhs: Vec<BigInt>,
    obj: Vec<BigInt>,
    obj_rhs: BigInt,
    basis: Vec<Option<usize>>,
    is_basic: Vec<bool>,
    denom: BigInt,
}

impl Tableau {
    fn new(vars: usize) -> Self {
        Tableau {
            vars,
            rows: Vec::new(),
            rhs: Vec::new(),
            obj: vec![BigInt::zero(); 2 * vars],
            obj_rhs: BigInt::zero(),
            basis: Vec::new(),
            is_basic: vec![false; 2 * vars],
            denom: BigInt::one(),
        }
    }

    fn ncols(&self) -> usize {
        self.obj.len()
    }

    fn add_column(&mut self) -> usize {
        for r in &mut self.rows {
            r.push(BigInt::zero());
        }
        self.obj.push(BigInt::zero());
        self.is_basic.push(false);
        self.ncols() - 1
    }

    fn add_row(&mut self, row: &Row) {
        let slack = match row.sense {
            Sense::Eq => None,
            _ => Some(self.add_column()),
        };
        let d = self.denom.clone();
        let mut r = vec![BigInt::zero(); self.ncols()];
        for (j, &a) in row.coeffs.iter().enumerate() {
            r[j] = &d * a;
            r[self.vars + j] = -&d * a;
        }
        if let Some(s) = slack {
            r[s] = if row.sense == Sense::Ge { -&d } else { d.clone() };
        }
        let mut b = &d * &row.rhs;
        // Eliminate the current basic columns.
        for (i, bc) in self.basis.iter().enumerate() {
            let Some(col) = *bc else { continue };
            if r[col].is_zero() {
                continue;
            }
            let f = r[col].clone() / &d;
            for (x, y) in r.iter_mut().zip(&self.rows[i]) {
                *x -= &f * y;
            }
            b -= &f * &self.rhs[i];
        }
        if b.is_negative() || (b.is_zero() && slack.is_some_and(|s| r[s].is_negative())) {
            for x in r.iter_mut() {
                *x = -&*x;
            }
            b = -b;
        }
        let slack_ok = slack.is_some_and(|s| r[s].is_positive());
        if slack_ok {
            let s = slack.expect("checked above");
            self.is_basic[s] = true;
            self.basis.push(Some(s));
        } else {
            for (o, x) in self.obj.iter_mut().zip(&r) {
                *o += x;
            }
            self.obj_rhs += &b;
            self.basis.push(None);
        }
        self.rows.push(r);
        self.rhs.push(b);
    }

    fn entering(&self, bland: bool) -> Option<usize> {
        let candidates = (0..self.ncols()).filter(|&j| !self.is_basic[j] && self.obj[j].is_positive());
        if bland {
            candidates.into_iter().next()
        } else {
            candidates.max_by(|&a, &b| self.obj[a].cmp(&self.obj[b]).then(b.cmp(&a)))
        }
    }

    fn leaving(&self, c: usize) -> Option<usize> {
        let key = |r: usize| match self.basis[r] {
            None => (0, r),
            Some(col) => (1, col),
        };
        let mut best: Option<usize> = None;
        for i in 0..self.rows.len() {
            if !self.rows[i][c].is_positive() {
                continue;
            }
            best = Some(match best {
                None => i,
                Some(b) => {
                    let lhs = &self.rhs[i] * &self.rows[b][c];
                    let rhs = &self.rhs[b] * &self.rows[i][c];
                    if lhs < rhs || (lhs == rhs && key(i) < key(b)) {
                        i
                    } else {
                        b
                    }
                }
            });
        }
        best
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        let prow = self.rows[r].clone();
        let prhs = self.rhs[r].clone();
        let d = self.denom.clone();
        let update = |row: &mut Vec<BigInt>, rhs: &mut BigInt| {
            let f = row[c].clone();
            let step = |x: &BigInt, y: &BigInt| -> BigInt {
                let v = &p * x - &f * y;
                if d.is_one() {
                    v
                } else {
                    let (q, rem) = v.div_rem(&d);
                    debug_assert!(rem.is_zero());
                    q
                }
            };
            for (x, y) in row.iter_mut().zip(&prow) {
                *x = step(x, y);
            }
            *rhs = step(rhs, &prhs);
        };
        self.rows
            .par_iter_mut()
            .zip(self.rhs.par_iter_mut())
            .enumerate()
            .filter(|(i, _)| *i != r)
            .for_each(|(_, (row, rhs))| update(row, rhs));
        update(&mut self.obj, &mut self.obj_rhs);
        if let Some(old) = self.basis[r] {
            self.is_basic[old] = false;
        }
        self.basis[r] = Some(c);
        self.is_basic[c] = true;
        self.denom = p;
    }

    /// Drives the artificial total to its minimum.
    fn solve(&mut self, pivot_budget: usize, pivots: &mut usize) -> Phase1 {
        let mut stalled = 0;
        while let Some(c) = self.entering(stalled >= STALL_LIMIT) {
            let Some(r) = self.leaving(c) else {
                unreachable!("phase-1 objective is bounded below");
            };
            if *pivots >= pivot_budget {
                return Phase1::PivotLimit;
            }
            *pivots += 1;
            let degenerate = self.rhs[r].is_zero();
            self.pivot(r, c);
            if self.obj_rhs.is_zero() {
                break;
            }
            stalled = if degenerate { stalled + 1 } else { 0 };
        }
        if self.obj_rhs.is_positive() {
            return Phase1::Infeasible;
        }
        let d = int(self.denom.clone());
        let mut w = vec![Rational::zero(); self.vars];
        for (i, b) in self.basis.iter().enumerate() {
            match *b {
                Some(b) if b < self.vars => w[b] += int(self.rhs[i].clone()) / &d,
                Some(b) if b < 2 * self.vars => w[b - self.vars] -= int(self.rhs[i].clone()) / &d,
                _ => {}
            }
        }
        Phase1::Feasible(w)
    }
}

/// Phase-1 simplex over free variables `w` subject to `rows`.
/// Returns a feasible `w` or proof of infeasibility.
#[cfg(test)]
fn phase_one(rows: &[Row], vars: usize, pivot_budget: usize, pivots: &mut usize) -> Phase1 {
    let mut t = Tableau::new(vars);
    for r in rows {
        t.add_row(r);
    }
    t.solve(pivot_budget, pivots)
}

/// Searches for weights on `k`-derangement classes of `Sym(n)` meeting the
/// eigenvalue constraints. With `even_only`, only even classes are used,
/// which is what the alternating-group conclusion needs.
pub fn feasibility_search(n: u32, k: u32, even_only: bool) -> Result<SearchReport, WeightsError> {
    feasibility_search_with(n, k, even_only, &LpOptions::default())
}

pub fn feasibility_search_with(
    n: u32,
    k: u32,
    even_only: bool,
    opts: &LpOptions,
) -> Result<SearchReport, WeightsError> {
    if k == 0 || 2 * k > n {
        return Err(WeightsError::SearchRange { n, k });
    }
    let mut classes: Vec<Partition> = derangement_classes(n, k)
        .into_iter()
        .filter(|c| !even_only || parity(c).is_even())
        .collect();
    // Long first cycle first, so ties between entering columns favour them.
    classes.sort_by(|a, b| b.cmp(a));
    let mut report = SearchReport {
        n,
        k,
        even_only,
        columns: classes.len(),
        rows: 0,
        rounds: 0,
        pivots: 0,
        outcome: SearchOutcome::Infeasible,
    };
    if classes.is_empty() {
        return Ok(report);
    }
    let shapes = enumerate_partitions(n);
    if shapes.len() > opts.max_partitions {
        report.outcome = SearchOutcome::Undecided {
            reason: format!(
                "{} partitions exceed the limit of {}",
                shapes.len(),
                opts.max_partitions
            ),
        };
        return Ok(report);
    }
    // Shapes whose eigenvalue is forced equal to another's are skipped: with
    // even classes only, conjugate shapes share an eigenvalue.
    let shapes: Vec<Partition> = shapes
        .into_iter()
        .filter(|s| !even_only || *s >= s.conjugate())
        .collect();
    let table: Vec<(BigInt, Vec<i128>)> = shapes
        .par_iter()
        .map(|s| {
            let f = BigInt::from(dimension(s));
            let row = classes.iter().map(|c| mn_character(s, c)).collect();
            (f, row)
        })
        .collect();
    let alpha = BigInt::from(binomial(n, k)) - BigInt::one();
    let pinned: BTreeSet<usize> = shapes
        .iter()
        .enumerate()
        .filter(|(_, s)| s.len() <= 2 && s.parts().get(1).copied().unwrap_or(0) <= k)
        .map(|(i, _)| i)
        .collect();
    let mut tableau = Tableau::new(classes.len());
    let mut rows: Vec<Row> = Vec::new();
    for &i in &pinned {
        let (f, coeffs) = &table[i];
        let rhs = if shapes[i].len() == 1 { alpha.clone() } else { -f.clone() };
        rows.push(Row {
            coeffs: coeffs.clone(),
            sense: Sense::Eq,
            rhs,
        });
    }
    let mut present: BTreeSet<(usize, bool)> = BTreeSet::new();
    // Seed with the lowest-dimensional remaining shapes.
    let mut by_dim: Vec<usize> = (0..shapes.len()).filter(|i| !pinned.contains(i)).collect();
    by_dim.sort_by(|&a, &b| table[a].0.cmp(&table[b].0));
    for &i in by_dim.iter().take(2 * opts.rows_per_round) {
        let (f, coeffs) = &table[i];
        rows.push(Row {
            coeffs: coeffs.clone(),
            sense: Sense::Ge,
            rhs: -f.clone(),
        });
        present.insert((i, false));
    }
    loop {
        report.rounds += 1;
        report.rows = rows.len();
        if report.rounds > opts.max_rounds {
            report.outcome = SearchOutcome::Undecided {
                reason: format!("no convergence after {} rounds", opts.max_rounds),
            };
            return Ok(report);
        }
        for r in &rows[tableau.rows.len()..] {
            tableau.add_row(r);
        }
        let w = match tableau.solve(opts.max_pivots, &mut report.pivots) {
            Phase1::Infeasible => {
                report.outcome = SearchOutcome::Infeasible;
                return Ok(report);
            }
            Phase1::PivotLimit => {
                report.outcome = SearchOutcome::Undecided {
                    reason: format!("pivot limit {} reached", opts.max_pivots),
                };
                return Ok(report);
            }
            Phase1::Feasible(w) => w,
        };
        // Scale to a common denominator so violations are integer tests.
        let lcm = w
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let scaled: Vec<BigInt> = w.iter().map(|x| (x * int(lcm.clone())).to_integer()).collect();
        // violation amount scaled by 1/f, as a rational for ranking
        let mut violated: Vec<(Rational, usize, bool)> = table
            .par_iter()
            .enumerate()
            .filter(|(i, _)| !pinned.contains(i))
            .filter_map(|(i, (f, coeffs))| {
                let s: BigInt = coeffs
                    .iter()
                    .zip(&scaled)
                    .map(|(&a, x)| BigInt::from(a) * x)
                    .sum();
                let low = -(f * &lcm);
                let high = &alpha * f * &lcm;
                if s < low {
                    Some((Rational::new(low - s, f * &lcm), i, false))
                } else if s > high {
                    Some((Rational::new(s - high, f * &lcm), i, true))
                } else {
                    None
                }
            })
            .collect();
        if violated.is_empty() {
            let scheme = WeightScheme::new(n, k, classes.iter().cloned().zip(w))?;
            report.outcome = SearchOutcome::Feasible { scheme };
            return Ok(report);
        }
        violated.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let mut added = 0;
        for (_, i, upper) in violated {
            if added == opts.rows_per_round {
                break;
            }
            if !present.insert((i, upper)) {
                continue;
            }
            let (f, coeffs) = &table[i];
            rows.push(if upper {
                Row {
                    coeffs: coeffs.clone(),
                    sense: Sense::Le,
                    rhs: &alpha * f,
                }
            } else {
                Row {
                    coeffs: coeffs.clone(),
                    sense: Sense::Ge,
                    rhs: -f.clone(),
                }
            });
            added += 1;
        }
        debug_assert!(added > 0, "a violated row was already present");
    }
}
