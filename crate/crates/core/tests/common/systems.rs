use num_traits::One;

use setwise_ekr::weights::{solve_constraint_system, ConstraintSystem, Family};

use super::{big, binom, hook_dimension, long, Q};

/// A linear system as printed: coefficient rows and the shape whose degree
/// gives each right-hand side (`C(n,k) - 1` for `[n]`, `-f` otherwise).
pub struct Printed {
    pub family: Family,
    pub rows: &'static [&'static [i64]],
    pub shapes: &'static [&'static [u32]],
}

pub const K4_EVEN: Printed = Printed {
    family: Family::K4Even,
    rows: &[
        &[1, 1, 1, 1, 1],
        &[0, -1, -1, 2, 1],
        &[-1, 1, 0, 0, -1],
        &[0, -1, 1, -2, -1],
        &[0, 0, -1, -1, 0],
        &[1, 0, -1, -1, 0],
    ],
    shapes: &[&[], &[1], &[2], &[3], &[4], &[2, 1]],
};

pub const K4_ODD: Printed = Printed {
    family: Family::K4Odd,
    rows: &[
        &[1, 1, 1, 1, 1, 1],
        &[-1, 1, 0, -1, 0, 2],
        &[0, -1, 0, 0, -1, 0],
        &[0, -1, 0, 2, 0, -2],
        &[0, 0, -1, -2, 0, -1],
        &[0, 0, 1, -2, 1, -1],
        &[1, 0, -1, 1, 0, 1],
        &[-1, 0, 0, 1, 0, 0],
    ],
    shapes: &[&[], &[1], &[2], &[3], &[4], &[2, 1], &[1, 1], &[1, 1, 1]],
};

pub const K5_EVEN: Printed = Printed {
    family: Family::K5Even,
    rows: &[
        &[1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
        &[0, -1, 2, -1, 1, -1, -1, 0, 1, 3],
        &[-1, 1, 0, 0, 0, 0, 3, -1, -1, 2],
        &[0, -1, -2, 0, 0, 0, -3, 2, -1, -2],
        &[0, 0, -1, 1, -1, 0, 3, 0, 0, -3],
        &[0, 0, 1, 1, -1, 1, -2, 0, 0, 3],
        &[1, 0, -1, 0, 0, 0, 0, -1, 0, 0],
        &[0, -1, 1, 0, 0, 0, 3, 0, 1, 0],
        &[-1, 0, 0, 1, 1, 0, -3, -1, 0, -1],
        &[0, 0, 0, -1, -1, -1, 2, 2, 0, 1],
    ],
    shapes: &[&[], &[1], &[2], &[3], &[4], &[1, 1], &[2, 1], &[2, 2], &[2, 1, 1], &[1, 1, 1]],
};

pub const K5_ODD: Printed = Printed {
    family: Family::K5Odd,
    rows: &[
        &[1, 1, 1, 1, 1, 1, 1, 1, 1],
        &[-1, 1, 0, -1, 3, 0, 0, -1, 2],
        &[0, -1, 0, 2, 2, -1, -1, 0, 0],
        &[0, -1, 0, -2, -2, 1, 0, 0, -2],
        &[0, 0, -1, 1, -3, 0, 0, 2, -1],
        &[0, 0, 0, -1, -1, -1, 0, -2, 0],
        &[1, 0, -1, -1, 3, 0, 0, 1, 1],
        &[0, 0, 1, 0, 0, 0, 1, 0, -1],
        &[0, 1, 0, 1, -3, 0, 0, -2, 0],
        &[0, 1, -1, 0, 0, 0, 0, 0, 1],
        &[0, 0, 0, -1, -1, -1, -1, 2, 0],
        &[1, 0, 0, 0, 0, 0, 0, -1, 0],
    ],
    shapes: &[&[], &[1], &[2], &[3], &[4], &[5], &[1, 1], &[2, 1], &[3, 1], &[2, 2], &[2, 1, 1], &[1, 1, 1, 1]],
};

pub const PRINTED: [&Printed; 4] = [&K4_EVEN, &K4_ODD, &K5_EVEN, &K5_ODD];

pub fn rhs(sys: &Printed, n: u32) -> Vec<Q> {
    let k = sys.family.k();
    sys.shapes
        .iter()
        .map(|t| {
            if t.is_empty() {
                big(&binom(n.into(), k.into())) - Q::one()
            } else {
                -big(&hook_dimension(long(n, t).parts()))
            }
        })
        .collect()
}

pub fn matrix(sys: &Printed) -> Vec<Vec<i64>> {
    sys.rows.iter().map(|r| r.to_vec()).collect()
}

/// Five sample sizes from where the closed form starts.
pub fn samples(family: Family) -> [u32; 5] {
    let m = family.formula_min();
    [m, m + 2, m + 4, m + 8, m + 14]
}

fn rows_index(family: Family, tails: &[&[u32]]) -> Vec<usize> {
    let all: Vec<&[u32]> = std::iter::once(&[][..]).chain(family.target_tails().iter().copied()).collect();
    tails.iter().map(|t| all.iter().position(|a| a == t).unwrap()).collect()
}

/// Checks that each surplus equation of the k = 4 and k = 5 systems follows
/// from the others, with the stated combinations where they are explicit.
pub fn redundancy_failures() -> Vec<String> {
    let mut bad = Vec::new();
    let one = Q::one;
    for n in [22, 30] {
        let sys = Family::K4Even.constraint_system(n);
        if sys.express_row(4, &[0, 1, 2, 3]).is_none() || solve_constraint_system(&sys).is_err() {
            bad.push(format!("k4 even fifth equation, n = {n}"));
        }
    }
    for n in [23, 29] {
        let sys = Family::K4Odd.constraint_system(n);
        // the fifth equation is minus the sum of the first four
        if sys.express_row(4, &[0, 1, 2, 3]) != Some(vec![-one(), -one(), -one(), -one()]) {
            bad.push(format!("k4 odd fifth equation, n = {n}"));
        }
        let last = rows_index(Family::K4Odd, &[&[1, 1, 1]])[0];
        if sys.express_row(last, &[1, 3]) != Some(vec![one(), one()]) {
            bad.push(format!("k4 odd last equation, n = {n}"));
        }
    }
    for n in [31, 35] {
        let sys = Family::K5Odd.constraint_system(n);
        if sys.express_row(5, &[0, 1, 2, 3, 4]).is_none() {
            bad.push(format!("k5 odd sixth equation, n = {n}"));
        }
        let seventh = rows_index(Family::K5Odd, &[&[1, 1]])[0];
        let basis = rows_index(Family::K5Odd, &[&[3, 1], &[2, 2], &[1, 1, 1, 1]]);
        if sys.express_row(seventh, &basis) != Some(vec![-one(), one(), one()]) {
            bad.push(format!("k5 odd seventh equation, n = {n}"));
        }
    }
    for n in [32, 36] {
        let sys = Family::K5Even.constraint_system(n);
        let kept = rows_index(
            Family::K5Even,
            &[&[], &[1], &[2], &[3], &[4], &[1, 1], &[2, 1], &[2, 2], &[2, 1, 1], &[1, 1, 1]],
        );
        for dropped in rows_index(Family::K5Even, &[&[5], &[3, 1], &[1, 1, 1, 1]]) {
            if sys.express_row(dropped, &kept).is_none() {
                bad.push(format!("k5 even row {dropped}, n = {n}"));
            }
        }
        let reduced = ConstraintSystem::new(
            n,
            5,
            sys.classes.clone(),
            kept.iter().map(|&i| sys.target_rows[i].clone()).collect(),
        );
        if solve_constraint_system(&reduced).ok() != Family::K5Even.closed_form(n).ok() {
            bad.push(format!("k5 even reduced system, n = {n}"));
        }
    }
    bad
}
