//! Weighted sums of class matrices in the conjugacy-class scheme of
//! `Sym(n)`, their eigenvalues, and the coclique bounds built on them.
//!
//! Weights are normalized: a class `C` with weight `w` contributes
//! `(w / |C|) * A_C`, so the eigenvalue on the `lambda`-isotypic part is
//! `(1 / f^lambda) * sum_C w * chi^lambda(C)`.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characters::{dimension, mn_character};
use crate::error::SchemeError;
use crate::partitions::{enumerate_partitions, is_k_derangement, parity, Partition};
use crate::rational::{self, int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedClass {
    pub class: Partition,
    #[serde(rename = "omega", with = "rational")]
    pub weight: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightScheme {
    pub n: u32,
    pub k: u32,
    #[serde(rename = "weights")]
    pub entries: Vec<WeightedClass>,
}

impl WeightScheme {
    /// Checks that every class is a distinct `k`-derangement of `n`.
    pub fn new(
        n: u32,
        k: u32,
        entries: impl IntoIterator<Item = (Partition, Rational)>,
    ) -> Result<Self, SchemeError> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for (class, weight) in entries {
            if class.n() != n {
                return Err(SchemeError::WrongSize { class, n });
            }
            if !is_k_derangement(&class, k) {
                return Err(SchemeError::NotDerangement { class, k });
            }
            if !seen.insert(class.clone()) {
                return Err(SchemeError::DuplicateClass(class));
            }
            out.push(WeightedClass { class, weight });
        }
        Ok(WeightScheme { n, k, entries: out })
    }

    pub fn classes(&self) -> impl Iterator<Item = &Partition> {
        self.entries.iter().map(|e| &e.class)
    }

    pub fn weight_of(&self, class: &Partition) -> Option<&Rational> {
        self.entries.iter().find(|e| &e.class == class).map(|e| &e.weight)
    }

    /// Entries with nonzero weight; these generate the graph.
    pub fn support(&self) -> impl Iterator<Item = &WeightedClass> {
        self.entries.iter().filter(|e| !e.weight.is_zero())
    }

    /// Row sum of the weighted matrix.
    pub fn total_weight(&self) -> Rational {
        self.entries.iter().map(|e| &e.weight).sum()
    }

    pub fn all_even(&self) -> bool {
        self.support().all(|e| parity(&e.class).is_even())
    }

    /// Same classes with weights scaled by `c`.
    pub fn scaled(&self, c: &Rational) -> WeightScheme {
        WeightScheme {
            n: self.n,
            k: self.k,
            entries: self
                .entries
                .iter()
                .map(|e| WeightedClass {
                    class: e.class.clone(),
                    weight: &e.weight * c,
                })
                .collect(),
        }
    }
}

/// `(1 / f^lambda) * sum_i w_i * chi^lambda(C_i)`.
pub fn eigenvalue(scheme: &WeightScheme, lambda: &Partition) -> Rational {
    eigenvalue_with_dimension(scheme, lambda, &dimension(lambda))
}

fn eigenvalue_with_dimension(scheme: &WeightScheme, lambda: &Partition, f: &BigUint) -> Rational {
    let sum: Rational = scheme
        .support()
        .map(|e| &e.weight * int(mn_character(lambda, &e.class)))
        .sum();
    sum / int(BigInt::from(f.clone()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Eigenvalue {
    pub shape: Partition,
    #[serde(skip)]
    pub dimension: BigUint,
    #[serde(with = "rational")]
    pub value: Rational,
}

/// Eigenvalue for every `lambda ⊢ n`, in reverse-lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    pub scheme: WeightScheme,
    pub values: Vec<Eigenvalue>,
}

#[derive(Serialize)]
struct SpectrumJson<'a> {
    schema: u32,
    n: u32,
    k: u32,
    weights: &'a [WeightedClass],
    eigenvalues: &'a [Eigenvalue],
}

impl Serialize for Spectrum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SpectrumJson {
            schema: crate::SCHEMA_VERSION,
            n: self.scheme.n,
            k: self.scheme.k,
            weights: &self.scheme.entries,
            eigenvalues: &self.values,
        }
        .serialize(s)
    }
}

impl Spectrum {
    pub fn get(&self, lambda: &Partition) -> Option<&Rational> {
        // Values from `full_spectrum` are sorted in decreasing order.
        match self.values.binary_search_by(|e| lambda.cmp(&e.shape)) {
            Ok(i) => Some(&self.values[i].value),
            Err(_) => self.values.iter().find(|e| &e.shape == lambda).map(|e| &e.value),
        }
    }

    pub fn max(&self) -> &Rational {
        self.values.iter().map(|e| &e.value).max().expect("p(n) >= 1")
    }

    pub fn min(&self) -> &Rational {
        self.values.iter().map(|e| &e.value).min().expect("p(n) >= 1")
    }

    pub fn argmax(&self) -> BTreeSet<Partition> {
        self.attained_at(self.max())
    }

    pub fn argmin(&self) -> BTreeSet<Partition> {
        self.attained_at(self.min())
    }

    pub fn attained_at(&self, v: &Rational) -> BTreeSet<Partition> {
        self.values
            .iter()
            .filter(|e| &e.value == v)
            .map(|e| e.shape.clone())
            .collect()
    }

    /// `sum (f^lambda)^2 * xi^m`, the trace of the `m`-th power of the
    /// weighted matrix.
    pub fn moment(&self, m: u32) -> Rational {
        self.values
            .iter()
            .map(|e| {
                let f = int(BigInt::from(e.dimension.clone()));
                &f * &f * num_traits::pow(e.value.clone(), m as usize)
            })
            .sum()
    }
}

/// Evaluates every eigenvalue, in parallel over shapes. The order of the
/// result does not depend on scheduling.
pub fn full_spectrum(scheme: &WeightScheme) -> Spectrum {
    let shapes = enumerate_partitions(scheme.n);
    let values = shapes
        .into_par_iter()
        .map(|shape| {
            let f = dimension(&shape);
            let value = eigenvalue_with_dimension(scheme, &shape, &f);
            Eigenvalue {
                shape,
                dimension: f,
                value,
            }
        })
        .collect();
    Spectrum {
        scheme: scheme.clone(),
        values,
    }
}

/// Like [`full_spectrum`], with character values supplied by the caller:
/// `rows[j][i]` is the value of the `j`-th shape on the `i`-th scheme entry.
pub fn spectrum_from_characters(scheme: &WeightScheme, shapes: &[Partition], rows: &[Vec<i128>]) -> Spectrum {
    let values = shapes
        .par_iter()
        .zip(rows)
        .map(|(shape, row)| {
            let f = dimension(shape);
            let sum: Rational = scheme
                .entries
                .iter()
                .zip(row)
                .map(|(e, &chi)| &e.weight * int(chi))
                .sum();
            Eigenvalue {
                shape: shape.clone(),
                value: sum / int(BigInt::from(f.clone())),
                dimension: f,
            }
        })
        .collect();
    Spectrum {
        scheme: scheme.clone(),
        values,
    }
}

/// Number of connected components of the weighted graph, which is the
/// multiplicity of its top eigenvalue: 2 when all supporting classes are
/// even (they generate only `Alt(n)`), otherwise 1.
pub fn max_multiplicity(scheme: &WeightScheme) -> Result<u8, SchemeError> {
    if scheme.support().next().is_none() {
        return Err(SchemeError::Empty);
    }
    Ok(if scheme.all_even() { 2 } else { 1 })
}

/// `v / (1 - d / tau)`.
pub fn ratio_bound(
    num_vertices: &BigInt,
    degree: &Rational,
    tau: &Rational,
) -> Result<Rational, SchemeError> {
    if !tau.is_negative() || !degree.is_positive() {
        return Err(SchemeError::RatioBoundDomain);
    }
    Ok(int(num_vertices.clone()) / (Rational::one() - degree / tau))
}

/// `|G| / c`, bounding a coclique by a clique or vice versa.
pub fn clique_coclique_bound(
    group_order: &BigInt,
    clique_or_coclique: &BigInt,
) -> Result<Rational, SchemeError> {
    if clique_or_coclique.is_zero() {
        return Err(SchemeError::ZeroDivisor);
    }
    Ok(Rational::new(group_order.clone(), clique_or_coclique.clone()))
}

/// For schemes on even classes only, `xi_lambda = xi_lambda'` for every
/// shape; a `false` result means a character value is wrong.
pub fn transpose_pairing_check(scheme: &WeightScheme) -> Result<bool, SchemeError> {
    if let Some(odd) = scheme.support().find(|e| !parity(&e.class).is_even()) {
        return Err(SchemeError::OddClass(odd.class.clone()));
    }
    let spectrum = full_spectrum(scheme);
    Ok(spectrum_is_transpose_symmetric(&spectrum))
}

pub fn spectrum_is_transpose_symmetric(spectrum: &Spectrum) -> bool {
    spectrum
        .values
        .iter()
        .all(|e| spectrum.get(&e.shape.conjugate()) == Some(&e.value))
}
