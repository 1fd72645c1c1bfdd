//! Explicit derangement graphs for small `Sym(n)` and `Alt(n)` on
//! `k`-subsets, exact maximum cocliques, and a dense-matrix check of the
//! character formula for eigenvalues.
//!
//! Everything here is independent of the character machinery except the
//! final comparison in [`matrix_moment_oracle`].

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::Serialize;

use crate::error::{BruteError, ParseError};
use crate::partitions::{binomial, class_size, factorial, is_k_derangement, Partition};
use crate::rational::{self, int, Rational};
use crate::schemes::{full_spectrum, WeightScheme};

pub const DEFAULT_CAP: usize = 5040;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    Sym,
    Alt,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::Sym => "sym",
            Group::Alt => "alt",
        })
    }
}

impl FromStr for Group {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sym" => Ok(Group::Sym),
            "alt" => Ok(Group::Alt),
            _ => Err(ParseError::Unknown(s.to_string())),
        }
    }
}

impl Group {
    pub fn order(self, n: u32) -> usize {
        let full = factorial(n).try_into().expect("small n");
        match self {
            Group::Sym => full,
            Group::Alt if n >= 2 => full / 2,
            Group::Alt => full,
        }
    }
}

/// A permutation of `0..n` in one-line form.
pub type Perm = Vec<u8>;

pub fn compose(a: &[u8], b: &[u8]) -> Perm {
    b.iter().map(|&x| a[x as usize]).collect()
}

pub fn inverse(a: &[u8]) -> Perm {
    let mut inv = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x as usize] = i as u8;
    }
    inv
}

pub fn cycle_type(p: &[u8]) -> Partition {
    let mut seen = vec![false; p.len()];
    let mut parts = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        parts.push(len);
    }
    Partition::from_unsorted(parts)
}

fn is_even(p: &[u8]) -> bool {
    // A cycle of length l contributes l - 1 transpositions.
    let ct = cycle_type(p);
    (ct.n() - ct.len() as u32).is_multiple_of(2)
}

/// Elements of the group in lexicographic one-line order.
pub fn elements(group: Group, n: u32) -> Vec<Perm> {
    (0..n as u8)
        .permutations(n as usize)
        .filter(|p| group == Group::Sym || is_even(p))
        .collect()
}

/// Cayley graph on the group whose connection set is the permutations
/// fixing no `k`-subset.
#[derive(Debug, Clone)]
pub struct DerangementGraph {
    pub group: Group,
    pub n: u32,
    pub k: u32,
    pub vertices: Vec<Perm>,
    index: HashMap<Perm, usize>,
    adjacency: Vec<FixedBitSet>,
    derangements: Vec<Perm>,
}

impl DerangementGraph {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].contains(b)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count_ones(..)
    }

    /// The connection set, in lexicographic order.
    pub fn derangements(&self) -> &[Perm] {
        &self.derangements
    }

    pub fn derangement_types(&self) -> BTreeSet<Partition> {
        self.derangements.iter().map(|p| cycle_type(p)).collect()
    }

    pub fn index_of(&self, p: &[u8]) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn is_coclique(&self, members: &[usize]) -> bool {
        members
            .iter()
            .array_combinations()
            .all(|[&a, &b]| a != b && !self.adjacent(a, b))
    }

    /// Right translation `g -> g * x`, which is a graph automorphism.
    pub fn translate(&self, members: &[usize], x: &[u8]) -> Vec<usize> {
        members
            .iter()
            .map(|&m| self.index[&compose(&self.vertices[m], x)])
            .collect()
    }

    /// `{ g in G : g(from) = to }` for `k`-subsets `from`, `to` of `0..n`:
    /// a canonical coclique.
    pub fn subset_coset(&self, from: &[u8], to: &[u8]) -> Vec<usize> {
        let target: BTreeSet<u8> = to.iter().copied().collect();
        (0..self.order())
            .filter(|&v| {
                let image: BTreeSet<u8> = from.iter().map(|&x| self.vertices[v][x as usize]).collect();
                image == target
            })
            .collect()
    }

    /// Whether the vertex set is `{ g : g(A) = B }` for some `k`-subsets.
    pub fn is_subset_coset(&self, members: &[usize]) -> bool {
        let Some(&first) = members.first() else {
            return false;
        };
        let set: BTreeSet<usize> = members.iter().copied().collect();
        (0..self.n as u8).combinations(self.k as usize).any(|a| {
            let b: Vec<u8> = a.iter().map(|&x| self.vertices[first][x as usize]).collect();
            let coset = self.subset_coset(&a, &b);
            coset.len() == set.len() && coset.iter().all(|v| set.contains(v))
        })
    }
}

pub fn build_graph(group: Group, n: u32, k: u32) -> Result<DerangementGraph, BruteError> {
    build_graph_capped(group, n, k, DEFAULT_CAP)
}

pub fn build_graph_capped(group: Group, n: u32, k: u32, cap: usize) -> Result<DerangementGraph, BruteError> {
    if k == 0 || k >= n || n > 10 {
        return Err(BruteError::BadParameters { n, k });
    }
    let order = group.order(n);
    if order > cap {
        return Err(BruteError::CapExceeded { order, cap });
    }
    let vertices = elements(group, n);
    let index: HashMap<Perm, usize> = vertices.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let derangements: Vec<Perm> = vertices
        .iter()
        .filter(|p| is_k_derangement(&cycle_type(p), k))
        .cloned()
        .collect();
    let adjacency = vertices
        .iter()
        .map(|g| {
            let mut row = FixedBitSet::with_capacity(vertices.len());
            // h ~ g iff h g^-1 = d is a derangement, i.e. h = d g.
            for d in &derangements {
                row.insert(index[&compose(d, g)]);
            }
            row
        })
        .collect();
    Ok(DerangementGraph {
        group,
        n,
        k,
        vertices,
        index,
        adjacency,
        derangements,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CocliqueWitness {
    #[serde(skip)]
    pub indices: Vec<usize>,
    /// One-line forms on `1..=n`.
    pub members: Vec<Vec<u8>>,
    pub size: usize,
    pub is_canonical: bool,
}

/// Maximum-clique search in the "not adjacent" graph, with greedy
/// colouring bounds.
struct Search<'a> {
    compat: &'a [FixedBitSet],
    best: Vec<usize>,
    /// When set, collect every clique of exactly this size.
    target: Option<usize>,
    found: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn colour(&self, cand: &FixedBitSet) -> Vec<(usize, usize)> {
        let mut uncoloured = cand.clone();
        let mut order = Vec::with_capacity(cand.count_ones(..));
        let mut colour = 0;
        while !uncoloured.is_clear() {
            colour += 1;
            let mut avail = uncoloured.clone();
            while let Some(v) = avail.ones().next() {
                avail.set(v, false);
                // Members of one colour class are pairwise non-adjacent.
                avail.difference_with(&self.compat[v]);
                uncoloured.set(v, false);
                order.push((v, colour));
            }
        }
        order
    }

    fn expand(&mut self, mut cand: FixedBitSet, current: &mut Vec<usize>) {
        let order = self.colour(&cand);
        for &(v, colour) in order.iter().rev() {
            let need = match self.target {
                Some(t) => current.len() + colour >= t,
                None => current.len() + colour > self.best.len(),
            };
            if !need {
                return;
            }
            current.push(v);
            let mut next = cand.clone();
            next.intersect_with(&self.compat[v]);
            if next.is_clear() {
                match self.target {
                    Some(t) if current.len() == t => self.found.push(current.clone()),
                    Some(_) => {}
                    None => {
                        if current.len() > self.best.len() {
                            self.best = current.clone();
                        }
                    }
                }
            } else {
                self.expand(next, current);
            }
            current.pop();
            cand.set(v, false);
        }
    }
}

fn compat_graph(graph: &DerangementGraph) -> Vec<FixedBitSet> {
    let n = graph.order();
    (0..n)
        .map(|v| {
            let mut c = graph.adjacency[v].clone();
            c.toggle_range(..);
            c.set(v, false);
            c
        })
        .collect()
}

fn identity_index(graph: &DerangementGraph) -> usize {
    // Lexicographic order puts the identity first.
    debug_assert!(graph.vertices[0].iter().enumerate().all(|(i, &x)| i as u8 == x));
    0
}

fn witness(graph: &DerangementGraph, mut indices: Vec<usize>) -> CocliqueWitness {
    indices.sort_unstable();
    CocliqueWitness {
        members: indices
            .iter()
            .map(|&i| graph.vertices[i].iter().map(|&x| x + 1).collect())
            .collect(),
        size: indices.len(),
        is_canonical: graph.is_subset_coset(&indices),
        indices,
    }
}

/// A maximum coclique. By vertex transitivity some maximum coclique holds
/// the identity, so the search starts there.
pub fn max_coclique(graph: &DerangementGraph) -> CocliqueWitness {
    let compat = compat_graph(graph);
    let id = identity_index(graph);
    let mut search = Search {
        compat: &compat,
        best: Vec::new(),
        target: None,
        found: Vec::new(),
    };
    let mut current = vec![id];
    search.best = current.clone();
    search.expand(compat[id].clone(), &mut current);
    witness(graph, search.best)
}

/// All maximum cocliques containing the identity.
pub fn max_cocliques_through_identity(graph: &DerangementGraph) -> Vec<CocliqueWitness> {
    let alpha = max_coclique(graph).size;
    let compat = compat_graph(graph);
    let id = identity_index(graph);
    let mut search = Search {
        compat: &compat,
        best: Vec::new(),
        target: Some(alpha),
        found: Vec::new(),
    };
    let mut current = vec![id];
    if alpha == 1 {
        return vec![witness(graph, current)];
    }
    search.expand(compat[id].clone(), &mut current);
    let mut found: Vec<Vec<usize>> = search
        .found
        .into_iter()
        .map(|mut c| {
            c.sort_unstable();
            c
        })
        .collect();
    found.sort();
    found.dedup();
    found.into_iter().map(|c| witness(graph, c)).collect()
}

/// `alpha / |G_A|` where `G_A` is the stabilizer of a `k`-subset.
pub fn intersection_density(group: Group, n: u32, k: u32) -> Result<Rational, BruteError> {
    let graph = build_graph(group, n, k)?;
    let alpha = max_coclique(&graph).size;
    Ok(density_of(group, n, k, alpha))
}

pub fn density_of(group: Group, n: u32, k: u32, alpha: usize) -> Rational {
    let stabilizer = Rational::new(
        BigInt::from(group.order(n)),
        BigInt::from(binomial(n, k)),
    );
    int(alpha) / stabilizer
}

/// Whether every maximum coclique is a coset of a `k`-subset stabilizer.
/// A maximum coclique through the identity is a coset exactly when it is a
/// stabilizer, and every maximum coclique translates to one of those.
pub fn canonical_max_check(group: Group, n: u32, k: u32) -> Result<bool, BruteError> {
    let graph = build_graph_capped(group, n, k, 720)?;
    Ok(max_cocliques_through_identity(&graph)
        .iter()
        .all(|w| w.is_canonical))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MomentCheck {
    pub moment: u32,
    #[serde(with = "rational")]
    pub matrix: Rational,
    #[serde(with = "rational")]
    pub spectral: Rational,
}

/// Builds the `n! x n!` weighted matrix, `A[g][h] = w_C / |C|` for the class
/// `C` of `h g^-1`, and
/// compares `trace(A^m)` with `sum (f^lambda)^2 xi_lambda^m` for
/// `m = 1, 2, 3`.
pub fn matrix_moment_oracle(scheme: &WeightScheme) -> Result<Vec<MomentCheck>, BruteError> {
    let n = scheme.n;
    if n > 6 {
        return Err(BruteError::MatrixTooLarge(n));
    }
    // A class weight is spread evenly over the class.
    let entry: Vec<(Partition, Rational)> = scheme
        .support()
        .map(|e| {
            let size = int(BigInt::from(class_size(&e.class)));
            (e.class.clone(), &e.weight / size)
        })
        .collect();
    let denom = entry.iter().fold(BigInt::one(), |acc, (_, x)| acc.lcm(x.denom()));
    let weight_of = |c: &Partition| -> i128 {
        entry
            .iter()
            .find(|(class, _)| class == c)
            .map(|(_, x)| {
                let scaled = (x * int(denom.clone())).to_integer();
                i128::try_from(scaled).expect("scaled weight fits in i128")
            })
            .unwrap_or(0)
    };
    let vertices = elements(Group::Sym, n);
    let index: HashMap<&Perm, usize> = vertices.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let size = vertices.len();
    // Integer matrix B = denom * A, dense and as sparse rows.
    let mut dense = vec![0i128; size * size];
    let mut rows: Vec<Vec<(usize, i128)>> = vec![Vec::new(); size];
    let class_weights: HashMap<Perm, i128> = vertices
        .iter()
        .map(|p| (p.clone(), weight_of(&cycle_type(p))))
        .filter(|(_, w)| *w != 0)
        .collect();
    for (g, gp) in vertices.iter().enumerate() {
        for (d, &w) in &class_weights {
            let h = index[&compose(d, gp)];
            dense[g * size + h] = w;
            rows[g].push((h, w));
        }
        rows[g].sort_unstable();
    }
    let mul = |a: i128, b: i128| a.checked_mul(b).expect("moment fits in i128");
    let add = |a: i128, b: i128| a.checked_add(b).expect("moment fits in i128");
    let t1 = (0..size).fold(0i128, |acc, g| add(acc, dense[g * size + g]));
    let t2 = (0..size).fold(0i128, |acc, g| {
        rows[g]
            .iter()
            .fold(acc, |acc, &(h, w)| add(acc, mul(w, dense[h * size + g])))
    });
    let t3 = (0..size).fold(0i128, |acc, g| {
        rows[g].iter().fold(acc, |acc, &(h, w)| {
            let inner = rows[h]
                .iter()
                .fold(0i128, |s, &(l, x)| add(s, mul(x, dense[l * size + g])));
            add(acc, mul(w, inner))
        })
    });
    let spectrum = full_spectrum(scheme);
    let d = int(denom);
    let mut checks = Vec::new();
    for (m, t) in [(1u32, t1), (2, t2), (3, t3)] {
        let matrix = int(t) / num_traits::pow(d.clone(), m as usize);
        let spectral = spectrum.moment(m);
        if matrix != spectral {
            return Err(BruteError::MomentMismatch {
                moment: m,
                matrix: rational::to_pq(&matrix),
                spectral: rational::to_pq(&spectral),
            });
        }
        checks.push(MomentCheck {
            moment: m,
            matrix,
            spectral,
        });
    }
    Ok(checks)
}

/// Summary used by the CLI.
#[derive(Debug, Clone, Serialize)]
pub struct BruteReport {
    pub schema: u32,
    pub group: Group,
    pub n: u32,
    pub k: u32,
    pub order: usize,
    pub degree: usize,
    pub derangement_types: BTreeSet<Partition>,
    pub alpha: usize,
    #[serde(with = "rational::decimal")]
    pub stabilizer_order: BigInt,
    #[serde(with = "rational")]
    pub density: Rational,
    pub witness_is_canonical: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Vec<u8>>>,
}

pub fn brute_report(group: Group, n: u32, k: u32, cap: usize, with_witness: bool) -> Result<BruteReport, BruteError> {
    let graph = build_graph_capped(group, n, k, cap)?;
    let w = max_coclique(&graph);
    let density = density_of(group, n, k, w.size);
    Ok(BruteReport {
        schema: crate::SCHEMA_VERSION,
        group,
        n,
        k,
        order: graph.order(),
        degree: graph.degree(0),
        derangement_types: graph.derangement_types(),
        alpha: w.size,
        stabilizer_order: BigInt::from(graph.order()) / BigInt::from(binomial(n, k)),
        density,
        witness_is_canonical: w.is_canonical,
        witness: with_witness.then_some(w.members),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_helpers() {
        let p = vec![1, 2, 0, 4, 3];
        assert_eq!(cycle_type(&p), Partition::new(vec![3, 2]).unwrap());
        assert_eq!(compose(&p, &inverse(&p)), vec![0, 1, 2, 3, 4]);
        assert!(!is_even(&p));
        assert_eq!(elements(Group::Alt, 4).len(), 12);
    }

    #[test]
    fn small_graphs() {
        let g = build_graph(Group::Sym, 4, 1).unwrap();
        assert_eq!(g.degree(0), 9);
        let a = build_graph(Group::Alt, 4, 2).unwrap();
        assert_eq!(a.derangements().len(), 8);
        assert!(a.derangements().iter().all(|p| cycle_type(p) == Partition::new(vec![3, 1]).unwrap()));
        assert!(matches!(
            build_graph_capped(Group::Sym, 7, 2, 720),
            Err(BruteError::CapExceeded { order: 5040, cap: 720 })
        ));
    }

    #[test]
    fn small_cocliques() {
        let g = build_graph(Group::Sym, 4, 1).unwrap();
        let w = max_coclique(&g);
        assert_eq!(w.size, 6);
        assert!(w.is_canonical);
        assert!(g.is_coclique(&w.indices));
        let a = build_graph(Group::Alt, 4, 2).unwrap();
        let w = max_coclique(&a);
        assert_eq!(w.size, 4);
        assert!(!w.is_canonical);
        assert_eq!(density_of(Group::Alt, 4, 2, w.size), int(2));
    }

    #[test]
    fn trivial_moments() {
        let scheme = WeightScheme::new(5, 1, [(Partition::row(5), int(1))]).unwrap();
        let checks = matrix_moment_oracle(&scheme).unwrap();
        assert_eq!(checks.len(), 3);
        assert!(matches!(
            matrix_moment_oracle(&WeightScheme::new(7, 1, [(Partition::row(7), int(1))]).unwrap()),
            Err(BruteError::MatrixTooLarge(7))
        ));
    }
}
