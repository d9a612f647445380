//! Weight distributions, minimum-weight certification, low-weight search,
//! and the Gram invariant over minimum-weight codewords.

mod minweight;

pub use minweight::{
    enumerate_weight, enumerate_weight_with_progress, find_low_weight, min_weight,
    min_weight_with_progress, CertificateKind, InfoSetReport, LevelReport, MinWeightCertificate,
    MinWeightOptions,
};

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

use crate::codes::Code;
use crate::gf2::BitWord;

/// Default dimension cap for full 2^k enumeration.
pub const DEFAULT_BRUTE_CAP: usize = 28;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightsError {
    #[error("dimension {k} exceeds the enumeration cap {cap}")]
    DimensionOverCap { k: usize, cap: usize },
    #[error("enumeration budget {budget} is too small (needs {needed} message evaluations)")]
    BudgetExceeded { budget: u64, needed: u128 },
    #[error("result cap {cap} exceeded")]
    CapExceeded { cap: usize },
    #[error("empty word list")]
    EmptyWordList,
    #[error("word lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("malformed distribution line {line}: {reason}")]
    MalformedTable { line: usize, reason: String },
}

/// Map weight → exact count of words of that weight.
#[derive(Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    n: usize,
    counts: BTreeMap<usize, BigUint>,
}

impl WeightDistribution {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            counts: BTreeMap::new(),
        }
    }

    pub fn from_counts(n: usize, counts: BTreeMap<usize, BigUint>) -> Self {
        let counts = counts.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Self { n, counts }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add(&mut self, weight: usize, count: BigUint) {
        if count.is_zero() {
            return;
        }
        *self.counts.entry(weight).or_insert_with(BigUint::zero) += count;
    }

    pub fn count(&self, weight: usize) -> BigUint {
        self.counts
            .get(&weight)
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }

    pub fn counts(&self) -> &BTreeMap<usize, BigUint> {
        &self.counts
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// Smallest nonzero weight with a positive count.
    pub fn min_nonzero_weight(&self) -> Option<usize> {
        self.counts.keys().copied().find(|&w| w > 0)
    }

    /// counts[i] = counts[n-i] for all i.
    pub fn is_palindromic(&self) -> bool {
        (0..=self.n).all(|i| self.count(i) == self.count(self.n - i))
    }

    /// Two-column text, ascending weight: `<weight> <count>`.
    pub fn to_table_string(&self) -> String {
        let mut out = String::new();
        for (w, c) in &self.counts {
            out.push_str(&format!("{w} {c}\n"));
        }
        out
    }

    /// Parses the two-column format produced by [`Self::to_table_string`]
    /// (`#` comment lines allowed).
    pub fn parse_table(n: usize, text: &str) -> Result<Self, WeightsError> {
        let mut counts = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split_whitespace();
            let (Some(w), Some(c), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(WeightsError::MalformedTable {
                    line: idx + 1,
                    reason: "expected two fields".into(),
                });
            };
            let w: usize = w.parse().map_err(|e| WeightsError::MalformedTable {
                line: idx + 1,
                reason: format!("bad weight: {e}"),
            })?;
            let c: BigUint = c.parse().map_err(|e| WeightsError::MalformedTable {
                line: idx + 1,
                reason: format!("bad count: {e}"),
            })?;
            counts.insert(w, c);
        }
        Ok(Self::from_counts(n, counts))
    }
}

impl fmt::Debug for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightDistribution(n={}, {:?})", self.n, self.counts)
    }
}

/// Exact weight distribution by enumerating all 2^k codewords in
/// Gray-code order (one generator-row XOR per step).
pub fn weight_distribution_bruteforce(
    code: &Code,
    cap: usize,
) -> Result<WeightDistribution, WeightsError> {
    let k = code.k();
    if k > cap || k >= 63 {
        return Err(WeightsError::DimensionOverCap {
            k,
            cap: cap.min(62),
        });
    }
    let rows = code.standard_form().matrix.rows();
    let counts = coset_weight_counts(rows, &BitWord::zeros(code.n()));
    let mut dist = WeightDistribution::new(code.n());
    for (w, c) in counts.into_iter().enumerate() {
        dist.add(w, BigUint::from(c));
    }
    Ok(dist)
}

/// Weight counts over `base + <rows>`, enumerated in Gray-code order.
/// The message space splits into contiguous ranges processed
/// independently and merged by addition, so the result does not depend
/// on the worker count.
pub(crate) fn coset_weight_counts(rows: &[BitWord], base: &BitWord) -> Vec<u64> {
    use rayon::prelude::*;

    let k = rows.len();
    let n = base.len();
    let total: u64 = 1u64 << k;
    let word_at = |index: u64| {
        // codeword for Gray code of `index`
        let gray = index ^ (index >> 1);
        let mut w = base.clone();
        for (t, row) in rows.iter().enumerate() {
            if (gray >> t) & 1 == 1 {
                w.xor_assign(row);
            }
        }
        w
    };
    let scan = |start: u64, end: u64| {
        let mut counts = vec![0u64; n + 1];
        let mut current = word_at(start);
        counts[current.weight()] += 1;
        for i in start + 1..end {
            current.xor_assign(&rows[i.trailing_zeros() as usize]);
            counts[current.weight()] += 1;
        }
        counts
    };
    if total < (1 << 16) {
        return scan(0, total);
    }
    let chunks = 64u64;
    let per = total / chunks;
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * per;
            let end = if c + 1 == chunks { total } else { start + per };
            scan(start, end)
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        )
}

/// The sorted set of distinct entries of M^T M, where M stacks the given
/// words as rows over the integers. The entry (i,j) counts the words
/// covering both coordinates i and j, so the set is invariant under any
/// coordinate permutation applied to all words.
pub fn gram_invariant(words: &[BitWord]) -> Result<Vec<u64>, WeightsError> {
    let Some(first) = words.first() else {
        return Err(WeightsError::EmptyWordList);
    };
    let n = first.len();
    for w in words {
        if w.len() != n {
            return Err(WeightsError::LengthMismatch {
                left: n,
                right: w.len(),
            });
        }
    }
    let mut gram = vec![0u64; n * n];
    for word in words {
        let support = word.support();
        for (a, &i) in support.iter().enumerate() {
            for &j in &support[a..] {
                gram[(i - 1) * n + (j - 1)] += 1;
            }
        }
    }
    let mut values = std::collections::BTreeSet::new();
    for i in 0..n {
        for j in i..n {
            values.insert(gram[i * n + j]);
        }
    }
    Ok(values.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::codes::FourCirculantSpec;
    use num_bigint::BigUint;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn e8() -> Code {
        FourCirculantSpec::from_bitstrings("01", "11")
            .unwrap()
            .code()
    }

    #[test]
    fn repetition_distribution() {
        let code = Code::from_generator(
            crate::gf2::BitMatrix::from_rows(vec![BitWord::from_bitstring("11").unwrap()], 2)
                .unwrap(),
        );
        let d = weight_distribution_bruteforce(&code, 28).unwrap();
        assert_eq!(d.count(0), BigUint::from(1u8));
        assert_eq!(d.count(2), BigUint::from(1u8));
        assert_eq!(d.total(), BigUint::from(2u8));
    }

    #[test]
    fn e8_distribution_is_gleason_basis_element() {
        let d = weight_distribution_bruteforce(&e8(), 28).unwrap();
        let expected: BTreeMap<usize, BigUint> = [(0usize, 1u32), (4, 14), (8, 1)]
            .map(|(w, c)| (w, BigUint::from(c)))
            .into();
        assert_eq!(d.counts(), &expected);
        assert!(d.is_palindromic());
    }

    #[test]
    fn golay_distribution() {
        let d = weight_distribution_bruteforce(&catalog::golay24(), 28).unwrap();
        assert_eq!(d.count(8), BigUint::from(759u32));
        assert_eq!(d.count(12), BigUint::from(2576u32));
        assert_eq!(d.count(16), BigUint::from(759u32));
        assert_eq!(d.total(), BigUint::from(1u32) << 12);
    }

    #[test]
    fn dimension_cap_is_enforced() {
        let c = catalog::c112().code();
        assert!(matches!(
            weight_distribution_bruteforce(&c, 28),
            Err(WeightsError::DimensionOverCap { k: 56, cap: 28 })
        ));
    }

    #[test]
    fn self_dual_distributions_are_palindromic_and_even() {
        let mut rng = StdRng::seed_from_u64(5);
        let mut tested = 0;
        while tested < 25 {
            let m = rng.gen_range(2..=6);
            let spec = crate::search::random_spec(m, &mut rng);
            if crate::search::screen(&spec, false).is_err() {
                continue;
            }
            let d = weight_distribution_bruteforce(&spec.code(), 28).unwrap();
            assert!(d.is_palindromic());
            assert!(d.counts().keys().all(|w| w % 2 == 0));
            tested += 1;
        }
    }

    #[test]
    fn table_round_trip() {
        let d = weight_distribution_bruteforce(&e8(), 28).unwrap();
        let text = d.to_table_string();
        assert_eq!(text, "0 1\n4 14\n8 1\n");
        let parsed = WeightDistribution::parse_table(8, &text).unwrap();
        assert_eq!(parsed, d);
    }

    #[test]
    fn gram_invariant_e8_and_golay() {
        let words = enumerate_weight(&e8(), 4, 100, 1 << 20).unwrap();
        assert_eq!(words.len(), 14);
        assert_eq!(gram_invariant(&words).unwrap(), vec![3, 7]);

        let words = enumerate_weight(&catalog::golay24(), 8, 1000, 1 << 20).unwrap();
        assert_eq!(words.len(), 759);
        assert_eq!(gram_invariant(&words).unwrap(), vec![77, 253]);
    }

    #[test]
    fn gram_invariant_diagonal_identity() {
        // Σ_i m_{i,i} = w · |words| when all words have weight w
        let words = enumerate_weight(&e8(), 4, 100, 1 << 20).unwrap();
        let n = 8;
        let mut diag_sum = 0u64;
        for i in 1..=n {
            let count = words.iter().filter(|w| w.support().contains(&i)).count() as u64;
            diag_sum += count;
        }
        assert_eq!(diag_sum, 4 * words.len() as u64);
    }

    #[test]
    fn gram_invariant_permutation_invariance() {
        let words = enumerate_weight(&catalog::golay24(), 8, 1000, 1 << 20).unwrap();
        let base = gram_invariant(&words).unwrap();
        let mut rng = StdRng::seed_from_u64(99);
        for _ in 0..5 {
            let mut perm: Vec<usize> = (0..24).collect();
            for i in (1..24).rev() {
                perm.swap(i, rng.gen_range(0..=i));
            }
            let permuted: Vec<BitWord> = words
                .iter()
                .map(|w| {
                    let mut out = BitWord::zeros(24);
                    for (from, &to) in perm.iter().enumerate() {
                        if w.get(from) {
                            out.set(to, true);
                        }
                    }
                    out
                })
                .collect();
            assert_eq!(gram_invariant(&permuted).unwrap(), base);
        }
    }

    #[test]
    fn gram_invariant_errors() {
        assert!(matches!(
            gram_invariant(&[]),
            Err(WeightsError::EmptyWordList)
        ));
        let words = vec![BitWord::zeros(4), BitWord::zeros(5)];
        assert!(matches!(
            gram_invariant(&words),
            Err(WeightsError::LengthMismatch { .. })
        ));
    }
}
