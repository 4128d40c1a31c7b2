//! Exact counting primitives: factorials, binomial coefficients,
//! permutations with repetition and U/R move-word counts.
//!
//! Everything here returns arbitrary-precision integers, so none of these
//! functions can overflow.

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountingError {
    #[error("ill-formed multiset: parts sum to {sum}, expected {n}")]
    PartsDoNotSum { n: u64, sum: u64 },
    #[error("ill-formed multiset: part {index} is zero")]
    EmptyPart { index: usize },
}

/// `n!`.
pub fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `C(n, k)`, zero when `k` lies outside `0..=n`.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::default();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc is C(n, i) here, so the division is exact.
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `n` objects split into groups of identical objects.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultisetSpec {
    n: u64,
    parts: Vec<u64>,
}

impl MultisetSpec {
    pub fn new(n: u64, parts: Vec<u64>) -> Result<Self, CountingError> {
        if let Some(index) = parts.iter().position(|&p| p == 0) {
            return Err(CountingError::EmptyPart { index });
        }
        let sum = parts
            .iter()
            .try_fold(0u64, |acc, &p| acc.checked_add(p))
            .unwrap_or(u64::MAX);
        if sum != n {
            return Err(CountingError::PartsDoNotSum { n, sum });
        }
        Ok(Self { n, parts })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }
}

/// Number of distinct arrangements of the multiset: `n! / (n_1! ... n_k!)`.
pub fn multiset_permutations(spec: &MultisetSpec) -> BigUint {
    let denominator = spec
        .parts
        .iter()
        .fold(BigUint::one(), |acc, &p| acc * factorial(p));
    factorial(spec.n) / denominator
}

/// A lattice path described only by how many up and right unit moves it makes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct MoveWord {
    pub ups: u64,
    pub rights: u64,
}

impl MoveWord {
    pub fn new(ups: u64, rights: u64) -> Self {
        Self { ups, rights }
    }

    pub fn len(&self) -> u64 {
        self.ups + self.rights
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Number of distinct strings over `{U, R}` with the given letter counts.
pub fn count_move_words(w: MoveWord) -> BigUint {
    let parts: Vec<u64> = [w.ups, w.rights].into_iter().filter(|&p| p > 0).collect();
    let spec = MultisetSpec::new(w.len(), parts).expect("parts of a move word sum to its length");
    multiset_permutations(&spec)
}
