//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's character or partition code.

#![allow(dead_code)]

pub mod systems;
pub mod tables;

use std::collections::HashMap;

use setwise_ekr::partitions::Partition;

pub fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// `[n - |tail|, tail...]`.
pub fn long(n: u32, tail: &[u32]) -> Partition {
    let rest: u32 = tail.iter().sum();
    let mut parts = vec![n - rest];
    parts.extend_from_slice(tail);
    Partition::from_unsorted(parts)
}

/// Partition counts from Euler's pentagonal-number recurrence.
pub fn partition_counts(max: usize) -> Vec<u64> {
    let mut p = vec![0i64; max + 1];
    p[0] = 1;
    for n in 1..=max {
        let mut total = 0i64;
        for j in 1.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > n {
                break;
            }
            let sign = if j % 2 == 1 { 1 } else { -1 };
            total += sign * p[n - g1];
            let g2 = j * (3 * j + 1) / 2;
            if g2 <= n {
                total += sign * p[n - g2];
            }
        }
        p[n] = total;
    }
    p.into_iter().map(|x| x as u64).collect()
}

/// Every permutation of `0..n` as an image array.
pub fn all_perms(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                go(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Cycle lengths in non-increasing order.
pub fn cycle_lengths(perm: &[usize]) -> Vec<u32> {
    let mut seen = vec![false; perm.len()];
    let mut lengths = Vec::new();
    for start in 0..perm.len() {
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        if len > 0 {
            lengths.push(len);
        }
    }
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    lengths
}

/// Class sizes of `Sym(n)` by counting permutations.
pub fn counted_class_sizes(n: usize) -> HashMap<Vec<u32>, u64> {
    let mut sizes = HashMap::new();
    for perm in all_perms(n) {
        *sizes.entry(cycle_lengths(&perm)).or_insert(0) += 1;
    }
    sizes
}

/// Whether two permutations map some `k`-subset of `0..n` to the same set.
pub fn agree_on_some_subset(g: &[usize], h: &[usize], k: usize) -> bool {
    let n = g.len();
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        let mut a: Vec<usize> = subset.iter().map(|&x| g[x]).collect();
        let mut b: Vec<usize> = subset.iter().map(|&x| h[x]).collect();
        a.sort_unstable();
        b.sort_unstable();
        if a == b {
            return true;
        }
        let mut i = k;
        while i > 0 && subset[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        subset[i - 1] += 1;
        for j in i..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

/// Number of ordered set partitions with block sizes `blocks` that are
/// fixed by a permutation with the given cycle lengths: every cycle must
/// land inside one block.
fn fixed_ordered_partitions(cycles: &[u32], blocks: &[i64]) -> i128 {
    if blocks.iter().any(|&b| b < 0) {
        return 0;
    }
    fn go(cycles: &[u32], room: &mut Vec<i64>, memo: &mut HashMap<(usize, Vec<i64>), i128>) -> i128 {
        if cycles.is_empty() {
            return i128::from(room.iter().all(|&r| r == 0));
        }
        let key = (cycles.len(), room.clone());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let c = i64::from(cycles[0]);
        let mut total = 0;
        for i in 0..room.len() {
            if room[i] >= c {
                room[i] -= c;
                total += go(&cycles[1..], room, memo);
                room[i] += c;
            }
        }
        memo.insert(key, total);
        total
    }
    go(cycles, &mut blocks.to_vec(), &mut HashMap::new())
}

/// `chi^lambda(mu)` by the Jacobi-Trudi determinant `det h_{lambda_i - i + j}`,
/// where the product of `h`'s is the permutation character of a Young
/// subgroup. Works from whichever of `lambda`, `lambda'` is shorter.
pub fn jacobi_trudi(lambda: &[u32], mu: &[u32]) -> i128 {
    let conj = conjugate(lambda);
    if conj.len() < lambda.len() {
        let even_cycles = mu.iter().filter(|&&c| c % 2 == 0).count();
        let sign = if even_cycles % 2 == 0 { 1 } else { -1 };
        return sign * jacobi_trudi(&conj, mu);
    }
    let l = lambda.len();
    let mut total = 0i128;
    let mut cols: Vec<usize> = (0..l).collect();
    permute(&mut cols, 0, 1, &mut |perm, sign| {
        let blocks: Vec<i64> = (0..l)
            .map(|i| i64::from(lambda[i]) - i as i64 + perm[i] as i64)
            .collect();
        total += sign * fixed_ordered_partitions(mu, &blocks);
    });
    total
}

fn permute(a: &mut Vec<usize>, start: usize, sign: i128, f: &mut impl FnMut(&[usize], i128)) {
    if start == a.len() {
        f(a, sign);
        return;
    }
    for i in start..a.len() {
        a.swap(start, i);
        let s = if i == start { sign } else { -sign };
        permute(a, start + 1, s, f);
        a.swap(start, i);
    }
}

pub fn conjugate(lambda: &[u32]) -> Vec<u32> {
    let first = lambda.first().copied().unwrap_or(0);
    (1..=first)
        .map(|j| lambda.iter().filter(|&&x| x >= j).count() as u32)
        .collect()
}

/// `n! / prod(hooks)`.
pub fn hook_dimension(lambda: &[u32]) -> num_bigint::BigUint {
    let conj = conjugate(lambda);
    let n: u32 = lambda.iter().sum();
    let mut num = num_bigint::BigUint::from(1u32);
    for i in 2..=n {
        num *= i;
    }
    let mut den = num_bigint::BigUint::from(1u32);
    for (i, &row) in lambda.iter().enumerate() {
        for j in 0..row {
            den *= row - j - 1 + conj[j as usize] - i as u32;
        }
    }
    num / den
}

pub fn binom(n: u64, k: u64) -> num_bigint::BigUint {
    let mut r = num_bigint::BigUint::from(1u32);
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

pub fn factorial(n: u64) -> num_bigint::BigUint {
    (1..=n).fold(num_bigint::BigUint::from(1u32), |a, x| a * x)
}

pub type Q = num_rational::BigRational;

pub fn q(x: i64) -> Q {
    Q::from_integer(x.into())
}

pub fn big(x: &num_bigint::BigUint) -> Q {
    Q::from_integer(num_bigint::BigInt::from(x.clone()))
}

/// Unique solution of `rows * x = rhs` by Gauss-Jordan elimination, or
/// `None` when the system is inconsistent or underdetermined.
pub fn solve_exact(rows: &[Vec<i64>], rhs: &[Q]) -> Option<Vec<Q>> {
    use num_traits::Zero;
    let cols = rows[0].len();
    let mut m: Vec<Vec<Q>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| r.iter().map(|&x| q(x)).chain([b.clone()]).collect())
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            return None;
        };
        m.swap(rank, pivot);
        let inv = m[rank][c].recip();
        for x in m[rank].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let factor = m[r][c].clone();
                for j in 0..=cols {
                    let delta = &factor * &m[rank][j];
                    m[r][j] -= delta;
                }
            }
        }
        rank += 1;
    }
    if m[rank..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    Some((0..cols).map(|c| m[c][cols].clone()).collect())
}

/// `xi_lambda = sum_i w_i chi^lambda(C_i) / f^lambda` from the oracles.
pub fn eigenvalue_oracle(weights: &[(Vec<u32>, Q)], lambda: &[u32]) -> Q {
    let sum: Q = weights
        .iter()
        .map(|(class, w)| w * q(jacobi_trudi(lambda, class) as i64))
        .sum();
    sum / big(&hook_dimension(lambda))
}
