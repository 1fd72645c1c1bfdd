//! Irreducible characters of `Sym(n)`.
//!
//! Values come from the Murnaghan-Nakayama rule, evaluated on beta-sets
//! (first-column hook lengths) so that removing a rim hook of length `r`
//! is moving one bead down by `r`. The largest cycle of the class is always
//! stripped first; for the classes used by the weight schemes this leaves a
//! small residual shape after one step, which is what the cache is keyed on.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use dashmap::DashMap;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::CharacterError;
use crate::partitions::{
    binomial, class_size, enumerate_partitions, factorial, parity, Partition,
};

mod appendix;

pub use appendix::{
    branching_table_mismatches, degree_table_mismatches, exception_rows, exception_table_check,
    restricted_degree, ExceptionLine, ExceptionReport, ExceptionRow,
};

/// `(shape, class)` pair naming a single character value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharacterQuery {
    pub shape: Partition,
    pub class: Partition,
}

impl CharacterQuery {
    pub fn new(shape: Partition, class: Partition) -> Result<Self, CharacterError> {
        if shape.n() != class.n() {
            return Err(CharacterError::SizeMismatch { shape, class });
        }
        Ok(CharacterQuery { shape, class })
    }

    pub fn value(&self) -> i128 {
        mn_character(&self.shape, &self.class)
    }
}

/// Memoized character evaluator. Safe to share between threads; the cache
/// only ever stores values that are fully determined by their key.
#[derive(Default)]
pub struct CharacterTable {
    values: DashMap<Vec<u8>, i128>,
    dims: DashMap<Vec<u8>, i128>,
}

impl CharacterTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide table used by [`mn_character`].
    pub fn global() -> &'static CharacterTable {
        static TABLE: OnceLock<CharacterTable> = OnceLock::new();
        TABLE.get_or_init(CharacterTable::new)
    }

    /// `chi^shape(class)`.
    ///
    /// # Panics
    ///
    /// If the two partitions have different sizes, or a part exceeds 255.
    pub fn value(&self, shape: &Partition, class: &Partition) -> i128 {
        assert_eq!(
            shape.n(),
            class.n(),
            "character of {shape} evaluated on class {class}"
        );
        let shape = to_bytes(shape);
        let class = to_bytes(class);
        self.chi(&shape, &class)
    }

    pub fn cached_entries(&self) -> usize {
        self.values.len()
    }

    fn chi(&self, shape: &[u8], mu: &[u8]) -> i128 {
        if mu.is_empty() {
            return i128::from(shape.is_empty());
        }
        if mu[0] == 1 {
            return self.small_dimension(shape);
        }
        if shape.len() == 1 {
            return 1;
        }
        if shape.iter().all(|&p| p == 1) {
            let odd_cycles_sign = mu.iter().filter(|&&c| c % 2 == 0).count();
            return if odd_cycles_sign % 2 == 0 { 1 } else { -1 };
        }
        let key = cache_key(shape, mu);
        if let Some(v) = self.values.get(&key) {
            return *v;
        }
        let r = u16::from(mu[0]);
        let rest = &mu[1..];
        let len = shape.len();
        let beta: Vec<u16> = shape
            .iter()
            .enumerate()
            .map(|(i, &p)| u16::from(p) + (len - 1 - i) as u16)
            .collect();
        let mut total: i128 = 0;
        let mut moved = beta.clone();
        for i in 0..len {
            let b = beta[i];
            if b < r {
                break;
            }
            let target = b - r;
            if beta.contains(&target) {
                continue;
            }
            let crossed = beta.iter().filter(|&&x| x > target && x < b).count();
            moved.copy_from_slice(&beta);
            moved[i] = target;
            moved.sort_unstable_by(|a, b| b.cmp(a));
            let residual: Vec<u8> = moved
                .iter()
                .enumerate()
                .map(|(j, &x)| (x - (len - 1 - j) as u16) as u8)
                .filter(|&p| p > 0)
                .collect();
            let v = self.chi(&residual, rest);
            total = if crossed % 2 == 0 {
                total.checked_add(v)
            } else {
                total.checked_sub(v)
            }
            .expect("character value overflowed i128");
        }
        self.values.insert(key, total);
        total
    }

    fn small_dimension(&self, shape: &[u8]) -> i128 {
        if shape.len() <= 1 {
            return 1;
        }
        if let Some(v) = self.dims.get(shape) {
            return *v;
        }
        let lambda = Partition::new(shape.iter().map(|&p| u32::from(p)).collect())
            .expect("residual shapes are partitions");
        let d = dimension(&lambda)
            .to_i128()
            .expect("dimension overflowed i128");
        self.dims.insert(shape.to_vec(), d);
        d
    }
}

fn to_bytes(p: &Partition) -> Vec<u8> {
    p.parts()
        .iter()
        .map(|&x| u8::try_from(x).expect("character evaluation supports parts up to 255"))
        .collect()
}

fn cache_key(shape: &[u8], mu: &[u8]) -> Vec<u8> {
    let mut key = Vec::with_capacity(shape.len() + mu.len() + 1);
    key.extend_from_slice(shape);
    key.push(0);
    key.extend_from_slice(mu);
    key
}

/// `chi^lambda(mu)` through the shared [`CharacterTable::global`] cache.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> i128 {
    CharacterTable::global().value(lambda, mu)
}

/// Hook lengths of every cell, row by row.
pub fn hook_lengths(lambda: &Partition) -> Vec<u32> {
    let conj = lambda.conjugate();
    let mut hooks = Vec::with_capacity(lambda.n() as usize);
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = conj.parts()[j as usize] - i as u32 - 1;
            hooks.push(arm + leg + 1);
        }
    }
    hooks
}

/// `f^lambda = n! / prod(hooks)`.
pub fn dimension(lambda: &Partition) -> BigUint {
    let product = hook_lengths(lambda)
        .into_iter()
        .fold(BigUint::one(), |acc, h| acc * h);
    let (q, r) = factorial(lambda.n()).div_rem(&product);
    assert!(r.is_zero(), "hook product of {lambda} does not divide n!");
    q
}

/// Every `lambda ⊢ n` with `f^lambda < bound`, in enumeration order.
pub fn low_dim_partitions(n: u32, bound: &BigUint) -> Vec<Partition> {
    dimension_window(n, &BigUint::zero(), bound)
}

/// Every `lambda ⊢ n` with `lower <= f^lambda < upper`.
pub fn dimension_window(n: u32, lower: &BigUint, upper: &BigUint) -> Vec<Partition> {
    enumerate_partitions(n)
        .into_iter()
        .filter(|l| {
            let f = dimension(l);
            &f >= lower && &f < upper
        })
        .collect()
}

/// Shapes obtained by removing one corner cell, largest first.
pub fn branch_restriction(lambda: &Partition) -> Vec<Partition> {
    let parts = lambda.parts();
    let mut out = Vec::new();
    for i in 0..parts.len() {
        let is_corner = i + 1 == parts.len() || parts[i + 1] < parts[i];
        if is_corner {
            let mut next = parts.to_vec();
            next[i] -= 1;
            out.push(Partition::from_unsorted(next));
        }
    }
    out
}

/// Shapes obtained by adding one cell; the inverse relation of
/// [`branch_restriction`].
pub fn branch_induction(lambda: &Partition) -> Vec<Partition> {
    let parts = lambda.parts();
    let mut out = Vec::new();
    for i in 0..=parts.len() {
        let above = if i == 0 { u32::MAX } else { parts[i - 1] };
        let here = parts.get(i).copied().unwrap_or(0);
        if here < above {
            let mut next = parts.to_vec();
            if i == parts.len() {
                next.push(1);
            } else {
                next[i] += 1;
            }
            out.push(Partition::from_unsorted(next));
        }
    }
    out
}

/// Number of `k`-subsets fixed by a permutation of cycle type `mu`: a
/// subset is fixed iff it is a union of cycles.
pub fn fixed_k_subsets(mu: &Partition, k: u32) -> BigUint {
    let k = k as usize;
    let mut ways = vec![BigUint::zero(); k + 1];
    ways[0] = BigUint::one();
    for &c in mu.parts() {
        let c = c as usize;
        if c > k {
            continue;
        }
        for s in (c..=k).rev() {
            let add = ways[s - c].clone();
            ways[s] += add;
        }
    }
    ways.swap_remove(k)
}

/// Multiplicities of the irreducible constituents of the permutation
/// character of `Sym(n)` on `k`-subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermCharDecomposition {
    pub n: u32,
    pub k: u32,
    pub multiplicities: BTreeMap<Partition, u64>,
}

impl PermCharDecomposition {
    pub fn multiplicity(&self, lambda: &Partition) -> u64 {
        self.multiplicities.get(lambda).copied().unwrap_or(0)
    }

    /// Constituents with nonzero multiplicity.
    pub fn support(&self) -> BTreeSet<Partition> {
        self.multiplicities
            .iter()
            .filter(|(_, &m)| m > 0)
            .map(|(l, _)| l.clone())
            .collect()
    }

    /// `sum m_lambda f^lambda`, which must equal `C(n, k)`.
    pub fn degree(&self) -> BigUint {
        self.multiplicities
            .iter()
            .map(|(l, &m)| dimension(l) * m)
            .sum()
    }
}

/// Inner product `<fix, chi^lambda>` for every `lambda ⊢ n`.
pub fn perm_char_decompose(n: u32, k: u32) -> Result<PermCharDecomposition, CharacterError> {
    if k > n {
        return Err(CharacterError::BadSubsetSize { n, k });
    }
    let classes: Vec<(Partition, BigInt)> = enumerate_partitions(n)
        .into_iter()
        .map(|mu| {
            let weight = BigInt::from(class_size(&mu) * fixed_k_subsets(&mu, k));
            (mu, weight)
        })
        .filter(|(_, w)| !w.is_zero())
        .collect();
    let order = BigInt::from(factorial(n));
    let mut multiplicities = BTreeMap::new();
    for lambda in enumerate_partitions(n) {
        let sum: BigInt = classes
            .iter()
            .map(|(mu, w)| w * BigInt::from(mn_character(&lambda, mu)))
            .sum();
        let (q, r) = sum.div_rem(&order);
        if !r.is_zero() {
            return Err(CharacterError::NonIntegralMultiplicity { shape: lambda });
        }
        let m = q
            .to_u64()
            .ok_or(CharacterError::NonIntegralMultiplicity {
                shape: lambda.clone(),
            })?;
        multiplicities.insert(lambda, m);
    }
    Ok(PermCharDecomposition {
        n,
        k,
        multiplicities,
    })
}

/// `sgn(mu) * chi^lambda(mu)`, the value of the conjugate shape.
pub fn sign_twisted(lambda: &Partition, mu: &Partition) -> i128 {
    i128::from(parity(mu).sign()) * mn_character(lambda, mu)
}

/// `C(n, k)` as a convenience for dimension thresholds.
pub fn binom(n: u32, k: u32) -> BigUint {
    binomial(n, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension(&Partition::row(12)), BigUint::one());
        for n in 2..30 {
            let l = Partition::with_long_first_part(n, &[1]).unwrap();
            assert_eq!(dimension(&l), BigUint::from(n - 1));
        }
        assert_eq!(dimension(&p(&[19, 2, 1])), BigUint::from(2640u32));
        assert_eq!(dimension(&p(&[3, 2])), BigUint::from(5u32));
    }

    #[test]
    fn small_character_values() {
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[3])), -1);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[2, 1])), 0);
        assert_eq!(mn_character(&p(&[1, 1, 1]), &p(&[2, 1])), -1);
        // chi^[3,1] = fix - 1
        assert_eq!(mn_character(&p(&[3, 1]), &p(&[2, 1, 1])), 1);
        assert_eq!(mn_character(&p(&[2, 2]), &p(&[2, 2])), 2);
        assert_eq!(mn_character(&p(&[2, 2]), &p(&[3, 1])), -1);
    }

    #[test]
    fn standard_character_on_long_cycles() {
        for n in (22..40).step_by(2) {
            let shape = Partition::with_long_first_part(n, &[1]).unwrap();
            let class = Partition::with_long_first_part(n, &[2]).unwrap();
            assert_eq!(mn_character(&shape, &class), -1);
        }
    }

    #[test]
    fn table_four_odd_cell() {
        for n in (29..40).step_by(2) {
            let shape = Partition::with_long_first_part(n, &[2, 2]).unwrap();
            let class = Partition::with_long_first_part(n, &[3, 3]).unwrap();
            assert_eq!(mn_character(&shape, &class), 2);
        }
    }

    #[test]
    fn per_worker_table_agrees_with_global() {
        let local = CharacterTable::new();
        for lambda in enumerate_partitions(9) {
            for mu in enumerate_partitions(9) {
                assert_eq!(local.value(&lambda, &mu), mn_character(&lambda, &mu));
            }
        }
        assert!(local.cached_entries() > 0);
    }

    #[test]
    fn query_rejects_mismatched_sizes() {
        assert!(CharacterQuery::new(p(&[2, 1]), p(&[2, 2])).is_err());
        let q = CharacterQuery::new(p(&[2, 1]), p(&[1, 1, 1])).unwrap();
        assert_eq!(q.value(), 2);
    }

    #[test]
    fn restriction_and_induction() {
        assert_eq!(branch_restriction(&Partition::row(5)), vec![Partition::row(4)]);
        let got: BTreeSet<_> = branch_restriction(&p(&[3, 1])).into_iter().collect();
        let want: BTreeSet<_> = [p(&[2, 1]), p(&[3])].into_iter().collect();
        assert_eq!(got, want);
        let up: BTreeSet<_> = branch_induction(&p(&[2, 1])).into_iter().collect();
        let want: BTreeSet<_> = [p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])].into_iter().collect();
        assert_eq!(up, want);
        assert_eq!(branch_induction(&Partition::new(vec![]).unwrap()), vec![p(&[1])]);
    }

    #[test]
    fn fixed_subsets() {
        for n in 1..12 {
            for k in 0..=n {
                assert_eq!(fixed_k_subsets(&Partition::column(n), k), binomial(n, k));
            }
            for k in 1..n {
                assert!(fixed_k_subsets(&Partition::row(n), k).is_zero());
            }
        }
        assert_eq!(fixed_k_subsets(&p(&[2, 2, 1, 1]), 3), BigUint::from(4u32));
    }

    #[test]
    fn permutation_character_of_three_subsets_of_eight() {
        let d = perm_char_decompose(8, 3).unwrap();
        let want: BTreeSet<_> = [p(&[8]), p(&[7, 1]), p(&[6, 2]), p(&[5, 3])]
            .into_iter()
            .collect();
        assert_eq!(d.support(), want);
        for l in &want {
            assert_eq!(d.multiplicity(l), 1);
        }
        let d = perm_char_decompose(10, 5).unwrap();
        assert_eq!(d.degree(), BigUint::from(252u32));
        assert_eq!(d.multiplicity(&Partition::row(10)), 1);
    }
}
