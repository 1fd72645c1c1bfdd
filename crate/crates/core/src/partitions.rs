//! Integer partitions, read both as Young diagram shapes and as cycle types
//! of permutations in `Sym(n)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ParseError;

/// A weakly decreasing sequence of positive integers.
///
/// The empty sequence is the unique partition of 0. Ordering is the
/// lexicographic order on `parts`, so `[n]` is the greatest partition of `n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
    n: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_even(self) -> bool {
        self == Parity::Even
    }

    /// `+1` for even, `-1` for odd.
    pub fn sign(self) -> i32 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }
}

/// A conjugacy class of `Sym(n)` labelled by its cycle type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassInfo {
    pub cycle_type: Partition,
    pub size: BigUint,
    pub parity: Parity,
}

impl ClassInfo {
    pub fn new(cycle_type: &Partition) -> Self {
        ClassInfo {
            size: class_size(cycle_type),
            parity: parity(cycle_type),
            cycle_type: cycle_type.clone(),
        }
    }
}

impl Partition {
    /// Builds a partition from parts that must already be weakly decreasing
    /// and positive.
    pub fn new(parts: Vec<u32>) -> Result<Self, ParseError> {
        if parts.contains(&0) {
            return Err(ParseError::ZeroPart);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ParseError::NotDecreasing(parts));
        }
        let n = parts.iter().sum();
        Ok(Partition { parts, n })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let n = parts.iter().sum();
        Partition { parts, n }
    }

    /// The one-row partition `[n]`.
    pub fn row(n: u32) -> Self {
        Partition::from_unsorted(vec![n])
    }

    /// The one-column partition `[1^n]`.
    pub fn column(n: u32) -> Self {
        Partition::from_unsorted(vec![1; n as usize])
    }

    /// Builds `[n - head_gap, tail...]`, the shapes the weight schemes are
    /// written in. Returns `None` if the result is not a valid partition.
    pub fn with_long_first_part(n: u32, tail: &[u32]) -> Option<Self> {
        let rest: u32 = tail.iter().sum();
        if rest > n {
            return None;
        }
        let first = n - rest;
        let mut parts = Vec::with_capacity(tail.len() + 1);
        if first > 0 {
            parts.push(first);
        }
        parts.extend_from_slice(tail);
        Partition::new(parts).ok()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn first(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Multiplicity of each part size: `m[i]` is the number of parts equal to `i`.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m = vec![0u32; self.first() as usize + 1];
        for &p in &self.parts {
            m[p as usize] += 1;
        }
        m
    }

    pub fn conjugate(&self) -> Partition {
        conjugate(self)
    }

    /// Exponent notation used in reports, e.g. `[18,2,1^2]`.
    pub fn compact(&self) -> String {
        let mut out = String::from("[");
        let mut i = 0;
        let mut first = true;
        while i < self.parts.len() {
            let p = self.parts[i];
            let mut j = i;
            while j < self.parts.len() && self.parts[j] == p {
                j += 1;
            }
            if !first {
                out.push(',');
            }
            first = false;
            if j - i > 1 {
                out.push_str(&format!("{}^{}", p, j - i));
            } else {
                out.push_str(&p.to_string());
            }
            i = j;
        }
        out.push(']');
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.compact())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

/// Accepts `18,2,1,1`, `[18,2,1^2]` or `(18 2 1^2)`.
impl FromStr for Partition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s
            .trim()
            .trim_start_matches(['[', '('])
            .trim_end_matches([']', ')']);
        let mut parts = Vec::new();
        for token in trimmed.split(|c: char| c == ',' || c.is_whitespace()) {
            if token.is_empty() {
                continue;
            }
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b, e),
                None => (token, "1"),
            };
            let base: u32 = base
                .parse()
                .map_err(|_| ParseError::BadToken(token.to_string()))?;
            let exp: usize = exp
                .parse()
                .map_err(|_| ParseError::BadToken(token.to_string()))?;
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n` in reverse-lexicographic order: `[n]` first,
/// `[1^n]` last.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
            n: current.iter().sum(),
        });
        return;
    }
    for p in (1..=remaining.min(max_part)).rev() {
        current.push(p);
        fill(remaining - p, p, current, out);
        current.pop();
    }
}

pub fn conjugate(lambda: &Partition) -> Partition {
    let parts = (1..=lambda.first())
        .map(|row| lambda.parts.iter().filter(|&&p| p >= row).count() as u32)
        .collect::<Vec<_>>();
    Partition {
        parts,
        n: lambda.n,
    }
}

pub fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `n! / prod_i (i^{m_i} m_i!)`.
pub fn class_size(lambda: &Partition) -> BigUint {
    let centralizer = lambda
        .multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .fold(BigUint::one(), |acc, (i, &m)| {
            acc * BigUint::from(i as u32).pow(m) * factorial(m)
        });
    factorial(lambda.n) / centralizer
}

/// Even iff `n - #parts` is even.
pub fn parity(lambda: &Partition) -> Parity {
    if (lambda.n as usize - lambda.len()).is_multiple_of(2) {
        Parity::Even
    } else {
        Parity::Odd
    }
}

/// Whether some sub-multiset of the parts of `lambda` sums to exactly `k`.
pub fn has_subpartition_sum(lambda: &Partition, k: u32) -> bool {
    let k = k as usize;
    let mut reachable = vec![false; k + 1];
    reachable[0] = true;
    for &p in &lambda.parts {
        let p = p as usize;
        if p > k {
            continue;
        }
        for s in (p..=k).rev() {
            if reachable[s - p] {
                reachable[s] = true;
            }
        }
    }
    reachable[k]
}

/// A permutation of this cycle type fixes no `k`-subset.
pub fn is_k_derangement(lambda: &Partition, k: u32) -> bool {
    !has_subpartition_sum(lambda, k)
}

/// The cycle types of `D_{n,k}`, in enumeration order.
pub fn derangement_classes(n: u32, k: u32) -> Vec<Partition> {
    enumerate_partitions(n)
        .into_iter()
        .filter(|l| is_k_derangement(l, k))
        .collect()
}
