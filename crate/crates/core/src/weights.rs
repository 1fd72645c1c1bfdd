//! Closed-form weight schemes for `k = 3, 4, 5`, the linear systems they
//! solve, and the `k = 3` parameter polytopes.
//!
//! Every closed form is written twice, once in terms of character degrees
//! and once as a polynomial in `n`; construction fails if the two disagree.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::characters::{dimension, mn_character};
use crate::error::WeightsError;
use crate::partitions::{binomial, Partition};
use crate::rational::{frac, int, Rational};
use crate::schemes::WeightScheme;

pub use crate::lp::{feasibility_search, LpOptions, SearchOutcome, SearchReport};

/// Degrees of the low-dimensional characters, named by shape: `row3` is
/// `f^[n-3,3]`, `hook2` is `f^[n-2,1^2]`, `s31` is `f^[n-4,3,1]`, and so on.
/// `alpha` is `C(n, k) - 1`, the target top eigenvalue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolTable {
    pub n: u32,
    pub k: u32,
    pub alpha: Rational,
    pub row1: Rational,
    pub row2: Rational,
    pub row3: Rational,
    pub row4: Rational,
    pub row5: Rational,
    pub hook2: Rational,
    pub hook3: Rational,
    pub hook4: Rational,
    pub s21: Rational,
    pub s22: Rational,
    pub s31: Rational,
    pub s211: Rational,
}

impl SymbolTable {
    pub fn new(n: u32, k: u32) -> Self {
        let b = |a: u32, b: u32| int(BigInt::from(binomial(a, b)));
        let x = int(n);
        let row = |i: u32| b(n, i) - b(n, i - 1);
        SymbolTable {
            n,
            k,
            alpha: b(n, k) - int(1),
            row1: row(1),
            row2: row(2),
            row3: row(3),
            row4: row(4),
            row5: row(5),
            hook2: b(n - 1, 2),
            hook3: b(n - 1, 3),
            hook4: b(n - 1, 4),
            s21: &x * (&x - int(2)) * (&x - int(4)) / int(3),
            s22: &x * (&x - int(1)) * (&x - int(4)) * (&x - int(5)) / int(12),
            s31: &x * (&x - int(1)) * (&x - int(3)) * (&x - int(6)) / int(8),
            s211: &x * (&x - int(2)) * (&x - int(3)) * (&x - int(5)) / int(8),
        }
    }

    /// Pairs each degree with the shape it belongs to.
    pub fn named_degrees(&self) -> Vec<(Partition, &Rational)> {
        let n = self.n;
        let shape = |tail: &[u32]| Partition::with_long_first_part(n, tail).expect("n >= 10");
        vec![
            (shape(&[1]), &self.row1),
            (shape(&[2]), &self.row2),
            (shape(&[3]), &self.row3),
            (shape(&[4]), &self.row4),
            (shape(&[5]), &self.row5),
            (shape(&[1, 1]), &self.hook2),
            (shape(&[1, 1, 1]), &self.hook3),
            (shape(&[1, 1, 1, 1]), &self.hook4),
            (shape(&[2, 1]), &self.s21),
            (shape(&[2, 2]), &self.s22),
            (shape(&[3, 1]), &self.s31),
            (shape(&[2, 1, 1]), &self.s211),
        ]
    }
}

/// `sum c_i * x_i` for rational coefficients `p/q`.
fn comb(terms: &[(i64, i64, &Rational)]) -> Rational {
    terms
        .iter()
        .map(|&(p, q, x)| frac(p, q) * x)
        .fold(Rational::zero(), |a, b| a + b)
}

/// Evaluates `sum c_i n^i` with coefficients `p/q`, lowest degree first.
fn poly(n: u32, coeffs: &[(i64, i64)]) -> Rational {
    let x = int(n);
    coeffs
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, &(p, q)| acc * &x + frac(p, q))
}

/// The six `(k, parity of n)` cases with their own weighting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    K3Odd,
    K3Even,
    K4Even,
    K4Odd,
    K5Even,
    K5Odd,
}

const S_ROWS: &[&[u32]] = &[
    &[],
    &[1],
    &[2],
    &[1, 1],
    &[3],
    &[2, 1],
    &[1, 1, 1],
    &[4],
    &[1, 1, 1, 1],
];
const T_ROWS: &[&[u32]] = &[&[3, 1], &[2, 2], &[2, 1, 1], &[5], &[1, 1, 1, 1, 1]];
const U_ROWS: &[&[u32]] = &[
    &[4, 1],
    &[3, 2],
    &[3, 1, 1],
    &[2, 2, 1],
    &[2, 1, 1, 1],
    &[6],
    &[1, 1, 1, 1, 1, 1],
];

/// Shapes below `C(n,4)`, between `C(n,4)` and `C(n,5)`, and between
/// `C(n,5)` and `2 C(n,6)`, up to conjugation, as tails of `[n - |tail|, tail]`.
pub fn low_dim_tails(level: u32) -> &'static [&'static [u32]] {
    match level {
        4 => S_ROWS,
        5 => T_ROWS,
        6 => U_ROWS,
        _ => &[],
    }
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::K3Odd,
        Family::K3Even,
        Family::K4Even,
        Family::K4Odd,
        Family::K5Even,
        Family::K5Odd,
    ];

    /// The family handling `(n, k)`, if `k` is 3, 4 or 5.
    pub fn of(n: u32, k: u32) -> Option<Family> {
        let even = n.is_multiple_of(2);
        Some(match (k, even) {
            (3, false) => Family::K3Odd,
            (3, true) => Family::K3Even,
            (4, true) => Family::K4Even,
            (4, false) => Family::K4Odd,
            (5, true) => Family::K5Even,
            (5, false) => Family::K5Odd,
            _ => return None,
        })
    }

    pub fn k(self) -> u32 {
        match self {
            Family::K3Odd | Family::K3Even => 3,
            Family::K4Even | Family::K4Odd => 4,
            Family::K5Even | Family::K5Odd => 5,
        }
    }

    pub fn even_n(self) -> bool {
        matches!(self, Family::K3Even | Family::K4Even | Family::K5Even)
    }

    fn parity_name(self) -> &'static str {
        if self.even_n() {
            "even"
        } else {
            "odd"
        }
    }

    /// Smallest `n` the closed form is defined for.
    pub fn formula_min(self) -> u32 {
        match self {
            Family::K3Odd => 27,
            Family::K3Even => 20,
            Family::K4Even => 22,
            Family::K4Odd => 23,
            Family::K5Even => 32,
            Family::K5Odd => 31,
        }
    }

    /// Smallest `n` from which certification trusts the closed form; below
    /// it the weights come from the LP search.
    pub fn certified_min(self) -> u32 {
        match self {
            Family::K4Odd => 28,
            other => other.formula_min(),
        }
    }

    /// Cycle types carrying weight, as tails of `(n - |tail|, tail)`.
    pub fn class_tails(self) -> &'static [&'static [u32]] {
        match self {
            Family::K3Odd => &[&[], &[1, 1], &[4, 1]],
            Family::K3Even => &[&[5], &[2, 2, 2], &[4, 1, 1]],
            Family::K4Even => &[&[1], &[2], &[3], &[1, 1, 1], &[5, 1, 1]],
            Family::K4Odd => &[&[], &[1, 1], &[2, 1], &[3, 3], &[6, 1], &[6, 1, 1, 1]],
            Family::K5Even => &[
                &[1],
                &[2],
                &[1, 1, 1],
                &[4],
                &[2, 1, 1],
                &[6],
                &[2, 2, 2],
                &[3, 3, 1],
                &[6, 1, 1],
                &[6, 1, 1, 1, 1],
            ],
            Family::K5Odd => &[
                &[],
                &[1, 1],
                &[2, 1],
                &[2, 2],
                &[1, 1, 1, 1],
                &[3, 1],
                &[6, 1],
                &[4, 4],
                &[6, 1, 1, 1],
            ],
        }
    }

    pub fn classes(self, n: u32) -> Vec<Partition> {
        self.class_tails()
            .iter()
            .map(|t| Partition::with_long_first_part(n, t).expect("n large enough for the family"))
            .collect()
    }

    /// Shapes whose eigenvalue is pinned by the linear system, besides `[n]`
    /// (which is pinned to `alpha`). All of these are pinned to `-1`.
    pub fn target_tails(self) -> &'static [&'static [u32]] {
        match self {
            Family::K3Odd | Family::K3Even => &[&[1], &[2], &[3]],
            Family::K4Even => &[&[1], &[2], &[3], &[4], &[2, 1]],
            Family::K4Odd => &[&[1], &[2], &[3], &[4], &[2, 1], &[1, 1], &[1, 1, 1]],
            Family::K5Even => &[
                &[1],
                &[2],
                &[3],
                &[4],
                &[5],
                &[1, 1],
                &[2, 1],
                &[3, 1],
                &[2, 2],
                &[2, 1, 1],
                &[1, 1, 1, 1],
                &[1, 1, 1],
            ],
            Family::K5Odd => &[
                &[1],
                &[2],
                &[3],
                &[4],
                &[5],
                &[1, 1],
                &[2, 1],
                &[3, 1],
                &[2, 2],
                &[2, 1, 1],
                &[1, 1, 1, 1],
            ],
        }
    }

    /// Rows of the family's character table: every low-dimensional shape
    /// (up to conjugation) whose eigenvalue is checked by hand.
    pub fn table_row_tails(self) -> Vec<&'static [u32]> {
        let levels: &[u32] = match self.k() {
            3 => &[4],
            4 => &[4, 5],
            _ => &[4, 5, 6],
        };
        levels.iter().flat_map(|&l| low_dim_tails(l).iter().copied()).collect()
    }

    /// Dimension above which every eigenvalue is shown to be below 1 in
    /// absolute value without computing characters.
    pub fn tail_threshold(self, n: u32) -> BigInt {
        match self.k() {
            3 => BigInt::from(binomial(n, 4)),
            4 => BigInt::from(binomial(n, 5)),
            _ => BigInt::from(binomial(n, 6)) * 2,
        }
    }

    fn check_n(self, n: u32) -> Result<(), WeightsError> {
        if n.is_multiple_of(2) != self.even_n() {
            return Err(WeightsError::WrongParity {
                k: self.k(),
                expected: self.parity_name(),
                n,
            });
        }
        if n < self.formula_min() {
            return Err(WeightsError::OutOfRange {
                k: self.k(),
                parity: self.parity_name(),
                n,
                min: self.formula_min(),
            });
        }
        Ok(())
    }

    /// The closed-form scheme at `n`, cross-checked between its two forms.
    pub fn closed_form(self, n: u32) -> Result<WeightScheme, WeightsError> {
        self.check_n(n)?;
        self.closed_form_unchecked(n)
    }

    /// Same as [`Family::closed_form`] without the range check, for
    /// exploring where the formulas stop working. Parity is still enforced.
    pub fn closed_form_unchecked(self, n: u32) -> Result<WeightScheme, WeightsError> {
        if n.is_multiple_of(2) != self.even_n() {
            return Err(WeightsError::WrongParity {
                k: self.k(),
                expected: self.parity_name(),
                n,
            });
        }
        let sym = SymbolTable::new(n, self.k());
        let weights = symbolic_weights(self, &sym);
        if let Some(polys) = polynomial_weights(self) {
            for (i, (w, p)) in weights.iter().zip(polys).enumerate() {
                if *w != poly(n, p) {
                    return Err(WeightsError::FormMismatch { index: i + 1, n });
                }
            }
        }
        let entries = self.classes(n).into_iter().zip(weights);
        Ok(WeightScheme::new(n, self.k(), entries)?)
    }

    /// Linear system whose unique solution is the closed form.
    pub fn constraint_system(self, n: u32) -> ConstraintSystem {
        let classes = self.classes(n);
        let alpha = int(BigInt::from(binomial(n, self.k()))) - int(1);
        let mut targets = vec![(Partition::row(n), alpha)];
        for t in self.target_tails() {
            let shape = Partition::with_long_first_part(n, t).expect("valid target shape");
            targets.push((shape, -Rational::one()));
        }
        ConstraintSystem::new(n, self.k(), classes, targets)
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::K3Odd => "k3-odd",
            Family::K3Even => "k3-even",
            Family::K4Even => "k4-even",
            Family::K4Odd => "k4-odd",
            Family::K5Even => "k5-even",
            Family::K5Odd => "k5-odd",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown case `{s}` (expected one of k3-odd, k3-even, k4-even, k4-odd, k5-even, k5-odd)"))
    }
}

fn symbolic_weights(family: Family, s: &SymbolTable) -> Vec<Rational> {
    let a = &s.alpha;
    let (b, g, d, e) = (&s.row1, &s.row2, &s.row3, &s.row4);
    match family {
        Family::K3Odd => {
            let (w, _) = k3_odd_weights(s, &Rational::zero(), &(g - d));
            vec![w[0].clone(), w[1].clone(), w[3].clone()]
        }
        Family::K3Even => {
            let (w, _) = k3_even_weights(s, &Rational::zero(), &Rational::zero());
            vec![w[0].clone(), w[1].clone(), w[2].clone()]
        }
        Family::K4Even => {
            let h = &s.s21;
            vec![
                comb(&[(1, 1, a), (-1, 1, b), (-1, 1, g), (-1, 1, d), (-1, 1, h)]),
                comb(&[(1, 2, b), (1, 2, d)]),
                comb(&[(1, 3, a), (-1, 3, d), (1, 3, h)]),
                comb(&[(2, 3, a), (-1, 1, b), (-1, 1, g), (-2, 3, d), (-1, 3, h)]),
                comb(&[(-1, 1, a), (3, 2, b), (2, 1, g), (3, 2, d), (1, 1, h)]),
            ]
        }
        Family::K4Odd => {
            let (z, h) = (&s.s21, &s.hook2);
            vec![
                comb(&[(1, 6, a), (5, 6, b), (4, 6, d), (1, 6, z)]),
                comb(&[(1, 1, b), (1, 1, g), (1, 1, d), (1, 1, z), (1, 1, h)]),
                comb(&[(1, 2, a), (-1, 2, g), (1, 2, h)]),
                comb(&[(1, 6, a), (-1, 6, b), (-2, 6, d), (1, 6, z)]),
                comb(&[(-1, 1, b), (-1, 1, d), (-1, 1, z), (-1, 1, h)]),
                comb(&[(1, 6, a), (-4, 6, b), (-3, 6, g), (-2, 6, d), (-2, 6, z), (-3, 6, h)]),
            ]
        }
        Family::K5Even => {
            let (h, z, th, ka, mu) = (&s.hook2, &s.s21, &s.s22, &s.s211, &s.hook3);
            vec![
                comb(&[(1, 6, a), (-1, 1, b), (-1, 6, d), (-1, 1, e), (1, 6, z), (1, 1, th), (1, 1, ka), (5, 6, mu)]),
                comb(&[(1, 8, a), (3, 8, b), (1, 8, g), (3, 8, d), (1, 4, e), (1, 8, h), (1, 4, th), (-1, 4, ka), (-3, 8, mu)]),
                comb(&[(-1, 1, b), (-1, 1, e), (1, 1, z), (1, 1, th), (1, 1, ka), (1, 1, mu)]),
                comb(&[(1, 4, a), (-3, 4, b), (-1, 4, g), (-1, 4, d), (-1, 1, e), (-1, 4, h), (1, 2, th), (1, 4, mu)]),
                comb(&[(1, 4, a), (-1, 4, b), (-1, 4, g), (-1, 4, d), (1, 4, h), (1, 4, mu)]),
                comb(&[(-1, 24, a), (25, 24, b), (1, 8, g), (1, 24, d), (13, 12, e), (-1, 24, h), (-11, 12, th), (-1, 12, ka), (-1, 24, mu)]),
                comb(&[(1, 24, a), (-1, 24, b), (-1, 8, g), (-1, 24, d), (-1, 12, e), (1, 24, h), (-1, 12, th), (1, 12, ka), (1, 24, mu)]),
                comb(&[(1, 6, a), (-1, 6, d), (1, 6, z), (-1, 6, mu)]),
                comb(&[(3, 2, b), (1, 2, g), (1, 2, d), (3, 2, e), (-1, 1, z), (-3, 2, th), (-3, 2, ka), (-3, 2, mu)]),
                comb(&[(1, 24, a), (1, 8, b), (-1, 8, g), (-1, 24, d), (1, 4, e), (-1, 8, h), (-1, 3, z), (-1, 4, th), (-1, 4, ka), (-7, 24, mu)]),
            ]
        }
        Family::K5Odd => {
            let (nu, z, th, ka) = (&s.s31, &s.s21, &s.s22, &s.s211);
            vec![
                comb(&[(1, 8, a), (7, 8, b), (3, 4, e), (1, 8, nu), (-7, 8, th), (-1, 8, ka)]),
                comb(&[(1, 2, a), (-1, 2, b), (-1, 1, g), (-1, 1, d), (-1, 1, z), (-1, 2, nu), (-3, 2, th), (-1, 2, ka)]),
                comb(&[(1, 4, a), (-1, 4, b), (-1, 4, nu), (3, 4, th), (-1, 4, ka)]),
                comb(&[(1, 8, a), (-1, 8, b), (-1, 4, g), (-1, 4, e), (-1, 8, nu), (1, 8, th), (1, 8, ka)]),
                comb(&[(1, 8, a), (-1, 8, b), (-5, 12, g), (-1, 3, d), (1, 12, e), (-1, 3, z), (1, 24, nu), (-13, 24, th), (-1, 24, ka)]),
                comb(&[(1, 2, a), (-1, 2, b), (-1, 3, g), (-2, 3, d), (-1, 3, e), (1, 3, z), (-1, 6, nu), (1, 6, th), (1, 6, ka)]),
                comb(&[(-1, 2, a), (1, 2, b), (1, 1, g), (1, 1, d), (1, 2, nu), (1, 2, th), (1, 2, ka)]),
                comb(&[(1, 8, a), (-1, 8, b), (-1, 4, e), (1, 8, nu), (1, 8, th), (-1, 8, ka)]),
                comb(&[(-1, 4, a), (1, 4, b), (1, 1, g), (1, 1, d), (1, 1, z), (1, 4, nu), (5, 4, th), (1, 4, ka)]),
            ]
        }
    }
}

type Coeffs = &'static [(i64, i64)];

/// Polynomial forms, lowest degree first. The `k = 3` weights are only
/// given in terms of degrees.
fn polynomial_weights(family: Family) -> Option<&'static [Coeffs]> {
    const K4_EVEN: &[Coeffs] = &[
        &[(0, 1), (-13, 4), (71, 24), (-3, 4), (1, 24)],
        &[(-1, 2), (11, 12), (-1, 2), (1, 12)],
        &[(-1, 3), (19, 36), (-13, 72), (-1, 36), (1, 72)],
        &[(1, 3), (-10, 9), (41, 36), (-7, 18), (1, 36)],
        &[(-1, 2), (8, 3), (-71, 24), (5, 6), (-1, 24)],
    ];
    const K4_ODD: &[Coeffs] = &[
        &[(-1, 1), (43, 24), (-133, 144), (1, 8), (1, 144)],
        &[(0, 1), (3, 2), (-2, 1), (1, 2)],
        &[(0, 1), (-1, 8), (11, 48), (-1, 8), (1, 48)],
        &[(0, 1), (-1, 24), (11, 144), (-1, 24), (1, 144)],
        &[(0, 1), (-3, 1), (5, 2), (-1, 2)],
        &[(0, 1), (-3, 8), (83, 144), (-5, 24), (1, 144)],
    ];
    const K5_EVEN: &[Coeffs] = &[
        &[(0, 1), (-119, 30), (307, 72), (-209, 144), (11, 72), (1, 720)],
        &[(0, 1), (1, 40), (-5, 96), (7, 192), (-1, 96), (1, 960)],
        &[(0, 1), (-4, 3), (7, 3), (-7, 6), (1, 6)],
        &[(0, 1), (1, 20), (-5, 48), (7, 96), (-1, 48), (1, 480)],
        &[(0, 1), (1, 20), (-5, 48), (7, 96), (-1, 48), (1, 480)],
        &[(-1, 1), (83, 40), (-415, 288), (233, 576), (-11, 288), (-1, 2880)],
        &[(0, 1), (1, 120), (-5, 288), (7, 576), (-1, 288), (1, 2880)],
        &[(0, 1), (1, 30), (-5, 72), (7, 144), (-1, 72), (1, 720)],
        &[(0, 1), (3, 1), (-19, 4), (2, 1), (-1, 4)],
        &[(0, 1), (31, 120), (-137, 288), (151, 576), (-13, 288), (1, 2880)],
    ];
    const K5_ODD: &[Coeffs] = &[
        &[(-1, 1), (253, 120), (-145, 96), (29, 64), (-5, 96), (1, 960)],
        &[(0, 1), (31, 10), (-119, 24), (103, 48), (-7, 24), (1, 240)],
        &[(0, 1), (1, 20), (-5, 48), (7, 96), (-1, 48), (1, 480)],
        &[(0, 1), (1, 40), (-5, 96), (7, 192), (-1, 96), (1, 960)],
        &[(0, 1), (11, 40), (-49, 96), (55, 192), (-5, 96), (1, 960)],
        &[(0, 1), (1, 10), (-5, 24), (7, 48), (-1, 24), (1, 240)],
        &[(0, 1), (-41, 10), (109, 24), (-79, 48), (5, 24), (-1, 240)],
        &[(0, 1), (1, 40), (-5, 96), (7, 192), (-1, 96), (1, 960)],
        &[(0, 1), (-83, 60), (39, 16), (-119, 96), (3, 16), (-1, 480)],
    ];
    match family {
        Family::K3Odd | Family::K3Even => None,
        Family::K4Even => Some(K4_EVEN),
        Family::K4Odd => Some(K4_ODD),
        Family::K5Even => Some(K5_EVEN),
        Family::K5Odd => Some(K5_ODD),
    }
}

/// The two-parameter `k = 3` odd family on `(n), (n-2,1^2), (n-2,2),
/// (n-5,4,1), (n-1,1)`, with `t` on `(n-1,1)` and `s` on `(n-5,4,1)`.
fn k3_odd_weights(s: &SymbolTable, t: &Rational, sv: &Rational) -> (Vec<Rational>, &'static [&'static [u32]]) {
    let (a, b, g) = (&s.alpha, &s.row1, &s.row2);
    let half = frac(1, 2);
    let w = vec![
        -sv - t + b + g,
        -&half * sv - &half * t + &half * (a - b),
        &half * sv + &half * t + &half * (a - b) - g,
        sv.clone(),
        t.clone(),
    ];
    (w, &[&[], &[1, 1], &[2], &[4, 1], &[1]])
}

/// The two-parameter `k = 3` even family on `(n-5,5), (n-6,2^3),
/// (n-6,4,1^2), (n-6,4,2), (n-6,5,1)`, with `s` on `(n-6,4,2)` and `t` on
/// `(n-6,5,1)`.
fn k3_even_weights(s: &SymbolTable, t: &Rational, sv: &Rational) -> (Vec<Rational>, &'static [&'static [u32]]) {
    let (a, b, g) = (&s.alpha, &s.row1, &s.row2);
    let w = vec![
        comb(&[(-2, 3, t), (-2, 3, sv), (1, 3, a), (2, 3, b), (1, 3, g)]),
        comb(&[(1, 6, t), (-1, 3, sv), (1, 6, a), (-1, 6, b), (-1, 3, g)]),
        comb(&[(-1, 2, t), (1, 2, a), (-1, 2, b)]),
        sv.clone(),
        t.clone(),
    ];
    (w, &[&[5], &[2, 2, 2], &[4, 1, 1], &[4, 2], &[5, 1]])
}

/// The full five-class `k = 3` scheme at parameters `(t, s)`, including
/// zero-weight classes.
pub fn k3_parametric_scheme(
    n: u32,
    t: &Rational,
    s: &Rational,
) -> Result<WeightScheme, WeightsError> {
    let sym = SymbolTable::new(n, 3);
    let (w, tails) = if n % 2 == 1 {
        k3_odd_weights(&sym, t, s)
    } else {
        k3_even_weights(&sym, t, s)
    };
    let entries = tails
        .iter()
        .map(|tail| Partition::with_long_first_part(n, tail).expect("n >= 12"))
        .zip(w);
    Ok(WeightScheme::new(n, 3, entries)?)
}

pub fn scheme_k3_odd(n: u32) -> Result<WeightScheme, WeightsError> {
    Family::K3Odd.closed_form(n)
}

pub fn scheme_k3_even(n: u32) -> Result<WeightScheme, WeightsError> {
    Family::K3Even.closed_form(n)
}

pub fn scheme_k4_even(n: u32) -> Result<WeightScheme, WeightsError> {
    Family::K4Even.closed_form(n)
}

pub fn scheme_k4_odd(n: u32) -> Result<WeightScheme, WeightsError> {
    Family::K4Odd.closed_form(n)
}

pub fn scheme_k5_even(n: u32) -> Result<WeightScheme, WeightsError> {
    Family::K5Even.closed_form(n)
}

pub fn scheme_k5_odd(n: u32) -> Result<WeightScheme, WeightsError> {
    Family::K5Odd.closed_form(n)
}

/// `sum_i w_i chi^lambda(C_i) = target * f^lambda` for each target row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintSystem {
    pub n: u32,
    pub k: u32,
    pub classes: Vec<Partition>,
    pub target_rows: Vec<(Partition, Rational)>,
    pub matrix: Vec<Vec<i128>>,
}

impl ConstraintSystem {
    pub fn new(
        n: u32,
        k: u32,
        classes: Vec<Partition>,
        target_rows: Vec<(Partition, Rational)>,
    ) -> Self {
        let matrix = target_rows
            .iter()
            .map(|(shape, _)| classes.iter().map(|c| mn_character(shape, c)).collect())
            .collect();
        ConstraintSystem {
            n,
            k,
            classes,
            target_rows,
            matrix,
        }
    }

    /// Right-hand side `target * f^lambda` of each row.
    pub fn rhs(&self) -> Vec<Rational> {
        self.target_rows
            .iter()
            .map(|(shape, t)| t * int(BigInt::from(dimension(shape))))
            .collect()
    }

    fn augmented_row(&self, i: usize, rhs: &[Rational]) -> Vec<Rational> {
        let mut row: Vec<Rational> = self.matrix[i].iter().map(|&x| int(x)).collect();
        row.push(rhs[i].clone());
        row
    }

    /// Coefficients `c` with `row[target] = sum c_j row[basis_j]`, including
    /// the right-hand side, if such a combination exists.
    pub fn express_row(&self, target: usize, basis: &[usize]) -> Option<Vec<Rational>> {
        let rhs = self.rhs();
        let width = self.classes.len() + 1;
        // Solve sum_j c_j B_j = T column by column: a system with one
        // equation per column and one unknown per basis row.
        let equations: Vec<(Vec<Rational>, Rational)> = (0..width)
            .map(|col| {
                let coeffs = basis
                    .iter()
                    .map(|&b| self.augmented_row(b, &rhs)[col].clone())
                    .collect();
                (coeffs, self.augmented_row(target, &rhs)[col].clone())
            })
            .collect();
        solve_any(&equations, basis.len())
    }
}

/// Gauss-Jordan elimination over the rationals. Returns one solution (free
/// unknowns set to zero), or `None` if the system is inconsistent.
fn solve_any(equations: &[(Vec<Rational>, Rational)], unknowns: usize) -> Option<Vec<Rational>> {
    let reduced = Elimination::run(equations, unknowns);
    if reduced.inconsistent_row.is_some() {
        return None;
    }
    Some(reduced.solution())
}

struct Elimination {
    rows: Vec<(Vec<Rational>, Rational)>,
    pivots: Vec<usize>,
    inconsistent_row: Option<usize>,
    unknowns: usize,
}

impl Elimination {
    /// Rows are absorbed one at a time so that the first row contradicting
    /// its predecessors can be named.
    fn run(equations: &[(Vec<Rational>, Rational)], unknowns: usize) -> Self {
        let mut e = Elimination {
            rows: Vec::new(),
            pivots: Vec::new(),
            inconsistent_row: None,
            unknowns,
        };
        for (idx, (coeffs, rhs)) in equations.iter().enumerate() {
            let mut row = coeffs.clone();
            let mut b = rhs.clone();
            for (r, &pc) in e.rows.iter().zip(&e.pivots) {
                if row[pc].is_zero() {
                    continue;
                }
                let f = row[pc].clone();
                for (x, y) in row.iter_mut().zip(&r.0) {
                    *x -= &f * y;
                }
                b -= &f * &r.1;
            }
            match row.iter().position(|x| !x.is_zero()) {
                None => {
                    if !b.is_zero() && e.inconsistent_row.is_none() {
                        e.inconsistent_row = Some(idx);
                    }
                }
                Some(pc) => {
                    let p = row[pc].clone();
                    for x in row.iter_mut() {
                        *x /= &p;
                    }
                    b /= &p;
                    for (r, _) in e.rows.iter_mut().zip(&e.pivots) {
                        if r.0[pc].is_zero() {
                            continue;
                        }
                        let f = r.0[pc].clone();
                        for (x, y) in r.0.iter_mut().zip(&row) {
                            *x -= &f * y;
                        }
                        r.1 -= &f * &b;
                    }
                    e.rows.push((row, b));
                    e.pivots.push(pc);
                }
            }
        }
        e
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn solution(&self) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.unknowns];
        for ((_, b), &pc) in self.rows.iter().zip(&self.pivots) {
            x[pc] = b.clone();
        }
        x
    }
}

/// Solves the system exactly. Extra rows must be consistent with the
/// rest; the solution must be unique.
pub fn solve_constraint_system(sys: &ConstraintSystem) -> Result<WeightScheme, WeightsError> {
    let rhs = sys.rhs();
    let equations: Vec<(Vec<Rational>, Rational)> = sys
        .matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| (row.iter().map(|&x| int(x)).collect(), b))
        .collect();
    let unknowns = sys.classes.len();
    let e = Elimination::run(&equations, unknowns);
    if let Some(row) = e.inconsistent_row {
        return Err(WeightsError::Inconsistent {
            row,
            label: sys.target_rows[row].0.compact(),
        });
    }
    if e.rank() < unknowns {
        return Err(WeightsError::Singular {
            rank: e.rank(),
            unknowns,
        });
    }
    let entries = sys.classes.iter().cloned().zip(e.solution());
    Ok(WeightScheme::new(sys.n, sys.k, entries)?)
}

/// How the `(x, y)` of the halfspace description is read off a parameter
/// point `(t, s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PolytopeMapping {
    /// `x = t`, `y = s`: the reading under which the stated memberships hold.
    XisT,
    /// `x = s`, `y = t`.
    XisS,
}

#[derive(Debug, Clone, Serialize)]
pub struct PolytopeReport {
    pub n: u32,
    pub x_is_t: bool,
    pub x_is_s: bool,
}

/// Membership of `(t, s)` in the `k = 3` parameter polytope for the parity
/// of `n`, under the `x = t, y = s` reading.
pub fn polytope_check_k3(n: u32, t: &Rational, s: &Rational) -> bool {
    polytope_contains(n, t, s, PolytopeMapping::XisT)
}

pub fn polytope_report_k3(n: u32, t: &Rational, s: &Rational) -> PolytopeReport {
    PolytopeReport {
        n,
        x_is_t: polytope_contains(n, t, s, PolytopeMapping::XisT),
        x_is_s: polytope_contains(n, t, s, PolytopeMapping::XisS),
    }
}

pub fn polytope_contains(n: u32, t: &Rational, s: &Rational, mapping: PolytopeMapping) -> bool {
    let (x, y) = match mapping {
        PolytopeMapping::XisT => (t, s),
        PolytopeMapping::XisS => (s, t),
    };
    let sym = SymbolTable::new(n, 3);
    let bg = &sym.row1 + &sym.row2;
    let three = int(3);
    if n % 2 == 1 {
        let low = &bg - &sym.hook3;
        let diff = y - x;
        let sum = x + y;
        &three * x + y < bg
            && -&sym.s21 < diff
            && diff <= low
            && low <= sum
            && sum < bg
    } else {
        let c = int(BigInt::from(binomial(n, 3)));
        let h = &sym.hook2;
        int(2) * x + int(2) * y <= c
            && x - y >= Rational::zero()
            && &bg - h <= *x
            && *x <= &bg + h
            && !y.is_negative()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schemes::eigenvalue;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn symbol_table_matches_hook_lengths() {
        for n in [20, 27, 31, 44] {
            let s = SymbolTable::new(n, 5);
            for (shape, value) in s.named_degrees() {
                assert_eq!(*value, int(BigInt::from(dimension(&shape))), "{shape}");
            }
        }
    }

    #[test]
    fn k3_odd_values() {
        let s = scheme_k3_odd(27).unwrap();
        let w: Vec<_> = s.entries.iter().map(|e| e.weight.clone()).collect();
        assert_eq!(w, vec![int(2600), int(2574), int(-2250)]);
        let sym = SymbolTable::new(27, 3);
        // s0 = gamma - delta = beta + gamma - C(n-1,3)
        assert_eq!(&sym.row2 - &sym.row3, &sym.row1 + &sym.row2 - &sym.hook3);
    }

    #[test]
    fn k3_even_first_weight() {
        let s = scheme_k3_even(20).unwrap();
        assert_eq!(s.entries[0].weight, int(449));
        assert_eq!(
            eigenvalue(&s, &p(&[18, 1, 1])),
            frac(189, 171)
        );
    }

    #[test]
    fn k4_even_second_weight() {
        let s = scheme_k4_even(22).unwrap();
        assert_eq!(s.entries[1].weight, int(665));
    }

    #[test]
    fn range_and_parity_errors() {
        assert!(matches!(scheme_k4_even(20), Err(WeightsError::OutOfRange { .. })));
        assert!(matches!(scheme_k4_even(23), Err(WeightsError::WrongParity { .. })));
        assert!(matches!(scheme_k3_odd(25), Err(WeightsError::OutOfRange { .. })));
        assert!(scheme_k4_odd(23).is_ok());
    }

    #[test]
    fn both_forms_agree_far_out() {
        for n in 30..70 {
            let f = Family::of(n, 4).unwrap();
            if n >= f.formula_min() {
                f.closed_form(n).unwrap();
            }
            let f = Family::of(n, 5).unwrap();
            if n >= f.formula_min() {
                f.closed_form(n).unwrap();
            }
        }
    }

    #[test]
    fn systems_reproduce_closed_forms() {
        for f in [Family::K4Even, Family::K4Odd, Family::K5Even, Family::K5Odd] {
            let n = f.formula_min() + 2;
            let solved = solve_constraint_system(&f.constraint_system(n)).unwrap();
            assert_eq!(solved, f.closed_form(n).unwrap(), "{f}");
        }
    }

    #[test]
    fn inconsistent_and_singular_systems() {
        let n = 22;
        let classes = Family::K4Even.classes(n);
        let mut targets = vec![(Partition::row(n), int(7314))];
        targets.push((p(&[21, 1]), int(-1)));
        let sys = ConstraintSystem::new(n, 4, classes.clone(), targets.clone());
        assert!(matches!(
            solve_constraint_system(&sys),
            Err(WeightsError::Singular { rank: 2, unknowns: 5 })
        ));
        targets.push((Partition::row(n), int(0)));
        let sys = ConstraintSystem::new(n, 4, classes, targets);
        assert!(matches!(
            solve_constraint_system(&sys),
            Err(WeightsError::Inconsistent { row: 2, .. })
        ));
    }

    #[test]
    fn polytope_memberships() {
        let n = 27;
        let sym = SymbolTable::new(n, 3);
        let s0 = &sym.row2 - &sym.row3;
        assert!(polytope_check_k3(n, &Rational::zero(), &s0));
        let report = polytope_report_k3(n, &Rational::zero(), &s0);
        assert!(report.x_is_t && !report.x_is_s);
        let z = Rational::zero();
        let r = polytope_report_k3(20, &z, &z);
        assert!(!r.x_is_t && !r.x_is_s);
        // 3x + y = beta + gamma sits on the open boundary
        let bg = &sym.row1 + &sym.row2;
        assert!(!polytope_check_k3(n, &Rational::zero(), &bg));
    }

    #[test]
    fn family_parsing() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("k6-odd".parse::<Family>().is_err());
        assert_eq!(Family::of(22, 4), Some(Family::K4Even));
        assert_eq!(Family::of(22, 6), None);
    }
}
