//! Minimum-weight certification by information-set enumeration.
//!
//! Information sets are extracted greedily: column-disjoint full-rank sets
//! first (for a self-dual code, the complement of an information set is
//! again one, so n = 2k always yields two disjoint full sets), then at
//! most one overlapping set whose rank deficit is accounted for in the
//! bound. After every set has been enumerated through message weight r,
//! any codeword not yet seen satisfies
//!
//!   wt(c) ≥ Σ_j max(0, r + 1 − deficit_j),
//!
//! because its restriction to each set's pivots has weight ≥ r + 1, of
//! which at most `deficit_j` coordinates fall outside the set's fresh
//! columns. The certified lower bound is that sum capped by the best
//! upper-bound witness found so far; the search is exact once the bound
//! reaches the witness weight.
//!
//! Messages are enumerated per level in colexicographic order of their
//! support, so witnesses are reproducible.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::ToPrimitive;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::WeightsError;
use crate::codes::Code;
use crate::gf2::BitWord;

/// Knobs for [`min_weight`]; `budget` counts message evaluations.
#[derive(Debug, Clone)]
pub struct MinWeightOptions {
    pub budget: u64,
    /// Stop as soon as a codeword of weight strictly below this is found
    /// (screening mode: such a witness already settles the question).
    pub early_stop_below: Option<usize>,
    /// Stop once the certified lower bound reaches this value.
    pub certify_bound: Option<usize>,
}

impl Default for MinWeightOptions {
    fn default() -> Self {
        Self {
            budget: 10_000_000,
            early_stop_below: None,
            certify_bound: None,
        }
    }
}

impl MinWeightOptions {
    pub fn with_budget(budget: u64) -> Self {
        Self {
            budget,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateKind {
    Exact,
    LowerBound,
}

/// One information set used by the enumeration.
#[derive(Debug, Clone)]
pub struct InfoSetReport {
    /// 0-indexed pivot columns.
    pub pivot_columns: Vec<usize>,
    /// Pivots on columns not used by any earlier set.
    pub fresh_columns: usize,
    /// k − fresh_columns.
    pub deficit: usize,
    /// Message weight fully enumerated for this set.
    pub completed_level: usize,
}

/// Either an exact minimum weight or a proven lower bound, together with
/// the best witness codeword found.
#[derive(Debug, Clone)]
pub struct MinWeightCertificate {
    pub kind: CertificateKind,
    /// Exact minimum weight, or the proven bound: no nonzero codeword of
    /// weight below `value` exists.
    pub value: usize,
    /// Best (lowest-weight) codeword found; for `Exact` its weight equals
    /// `value`.
    pub witness: Option<BitWord>,
    pub sets: Vec<InfoSetReport>,
    pub evaluated: u64,
}

impl MinWeightCertificate {
    /// Weight of the best witness, i.e. the best known upper bound.
    pub fn upper_bound(&self) -> Option<usize> {
        self.witness.as_ref().map(BitWord::weight)
    }

    pub fn is_exact(&self) -> bool {
        self.kind == CertificateKind::Exact
    }
}

struct InfoSet {
    /// Systematic basis: row t has a 1 at `pivots[t]` and 0 at the other
    /// pivots, so a weight-p message selects p of these rows.
    rows: Vec<BitWord>,
    pivots: Vec<usize>,
    fresh: usize,
    deficit: usize,
}

/// Greedy column-disjoint information sets, then at most one overlapping
/// set with rank-deficit accounting.
fn information_sets(code: &Code) -> Vec<InfoSet> {
    let k = code.k();
    let n = code.n();
    let basis: Vec<BitWord> = code.standard_form().matrix.rows().to_vec();
    let mut used = vec![false; n];
    let mut used_count = 0usize;
    let mut sets = Vec::new();
    while n - used_count >= k {
        let columns: Vec<usize> = (0..n).filter(|&c| !used[c]).collect();
        let (rows, pivots, fresh) = eliminate(&basis, &columns, &used, k);
        if fresh < k {
            if fresh > 0 {
                sets.push(InfoSet {
                    rows,
                    pivots,
                    fresh,
                    deficit: k - fresh,
                });
            }
            return sets;
        }
        for &p in &pivots {
            used[p] = true;
        }
        used_count += k;
        sets.push(InfoSet {
            rows,
            pivots,
            fresh,
            deficit: 0,
        });
    }
    if used_count < n {
        let columns: Vec<usize> = (0..n).filter(|&c| !used[c]).collect();
        let (rows, pivots, fresh) = eliminate(&basis, &columns, &used, k);
        if fresh > 0 {
            sets.push(InfoSet {
                rows,
                pivots,
                fresh,
                deficit: k - fresh,
            });
        }
    }
    sets
}

/// Gaussian elimination pivoting first on `columns` in order, then (if
/// rank is short) completing on already-used columns. Returns the
/// systematic rows, pivot columns, and how many pivots were fresh.
fn eliminate(
    basis: &[BitWord],
    columns: &[usize],
    used: &[bool],
    k: usize,
) -> (Vec<BitWord>, Vec<usize>, usize) {
    let mut rows = basis.to_vec();
    let mut pivots = Vec::with_capacity(k);
    let mut r = 0usize;
    let do_column = |c: usize, rows: &mut Vec<BitWord>, pivots: &mut Vec<usize>, r: &mut usize| {
        if *r == k {
            return;
        }
        if let Some(p) = (*r..rows.len()).find(|&i| rows[i].get(c)) {
            rows.swap(*r, p);
            let pivot_row = rows[*r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != *r && row.get(c) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(c);
            *r += 1;
        }
    };
    for &c in columns {
        do_column(c, &mut rows, &mut pivots, &mut r);
    }
    let fresh = r;
    if r < k {
        for c in (0..used.len()).filter(|&c| used[c]) {
            do_column(c, &mut rows, &mut pivots, &mut r);
            if r == k {
                break;
            }
        }
    }
    (rows, pivots, fresh)
}

/// Visits the XOR of every p-subset of `rows`, subsets in colexicographic
/// order of their index sets.
fn for_each_combination<F>(
    rows: &[BitWord],
    p: usize,
    acc: &mut BitWord,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&BitWord) -> ControlFlow<()>,
{
    fn rec<F>(
        rows: &[BitWord],
        p: usize,
        max_exclusive: usize,
        acc: &mut BitWord,
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&BitWord) -> ControlFlow<()>,
    {
        if p == 0 {
            return visit(acc);
        }
        for c in (p - 1)..max_exclusive {
            acc.xor_assign(&rows[c]);
            rec(rows, p - 1, c, acc, visit)?;
            acc.xor_assign(&rows[c]);
        }
        ControlFlow::Continue(())
    }
    rec(rows, p, rows.len(), acc, visit)
}

fn bound_after(sets: &[InfoSet], completed_level: usize) -> usize {
    sets.iter()
        .map(|s| (completed_level + 1).saturating_sub(s.deficit))
        .sum()
}

/// Snapshot emitted after each fully enumerated level.
#[derive(Debug, Clone, Copy)]
pub struct LevelReport {
    pub level: usize,
    pub bound: usize,
    pub best_weight: Option<usize>,
    pub evaluated: u64,
}

/// Information-set minimum-weight search with a provable certificate.
pub fn min_weight(code: &Code, opts: &MinWeightOptions) -> MinWeightCertificate {
    min_weight_with_progress(code, opts, &mut |_| {})
}

/// [`min_weight`] with a per-level progress callback (diagnostic use).
pub fn min_weight_with_progress(
    code: &Code,
    opts: &MinWeightOptions,
    progress: &mut dyn FnMut(LevelReport),
) -> MinWeightCertificate {
    let k = code.k();
    let n = code.n();
    if k == 0 {
        return MinWeightCertificate {
            kind: CertificateKind::Exact,
            value: 0,
            witness: None,
            sets: Vec::new(),
            evaluated: 0,
        };
    }
    let sets = information_sets(code);
    let mut best: Option<(usize, BitWord)> = None;
    let mut evaluated: u64 = 0;
    let mut completed = 0usize;
    let mut truncated = false;

    'levels: for level in 1..=k {
        for set in &sets {
            let mut acc = BitWord::zeros(n);
            let flow = for_each_combination(&set.rows, level, &mut acc, &mut |word| {
                evaluated += 1;
                let w = word.weight();
                if best.as_ref().is_none_or(|(bw, _)| w < *bw) {
                    best = Some((w, word.clone()));
                }
                if opts.early_stop_below.is_some_and(|t| w < t) || evaluated >= opts.budget {
                    return ControlFlow::Break(());
                }
                ControlFlow::Continue(())
            });
            if flow.is_break() {
                truncated = true;
                break 'levels;
            }
        }
        completed = level;
        let bound = bound_after(&sets, completed);
        let upper = best.as_ref().map_or(usize::MAX, |(w, _)| *w);
        progress(LevelReport {
            level,
            bound,
            best_weight: best.as_ref().map(|(w, _)| *w),
            evaluated,
        });
        if bound >= upper {
            break;
        }
        if opts
            .certify_bound
            .is_some_and(|goal| bound >= goal && upper >= goal)
        {
            break;
        }
    }

    let reports: Vec<InfoSetReport> = sets
        .iter()
        .map(|s| InfoSetReport {
            pivot_columns: s.pivots.clone(),
            fresh_columns: s.fresh,
            deficit: s.deficit,
            completed_level: completed,
        })
        .collect();
    let bound = bound_after(&sets, completed).max(1);
    let upper = best.as_ref().map(|(w, _)| *w);
    let witness = best.map(|(_, w)| w);
    match upper {
        Some(u) if !truncated && bound >= u => MinWeightCertificate {
            kind: CertificateKind::Exact,
            value: u,
            witness,
            sets: reports,
            evaluated,
        },
        _ => MinWeightCertificate {
            kind: CertificateKind::LowerBound,
            value: bound.min(upper.unwrap_or(usize::MAX)),
            witness,
            sets: reports,
            evaluated,
        },
    }
}

/// Randomized information-set search for a codeword of weight ≤ `target`.
///
/// Each iteration draws a fresh column permutation from a ChaCha8 stream
/// seeded with `seed`, builds the corresponding systematic generator, and
/// scans messages of weight 1 and 2. Deterministic given `(seed,
/// iterations)`; returns the first qualifying codeword found.
pub fn find_low_weight(code: &Code, target: usize, iterations: u64, seed: u64) -> Option<BitWord> {
    let k = code.k();
    let n = code.n();
    if k == 0 {
        return None;
    }
    let basis: Vec<BitWord> = code.standard_form().matrix.rows().to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    for _ in 0..iterations {
        for i in (1..n).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let (rows, _, _) = eliminate(&basis, &perm, &vec![false; n], k);
        let mut found: Option<BitWord> = None;
        for level in 1..=2usize.min(k) {
            let mut acc = BitWord::zeros(n);
            let flow = for_each_combination(&rows, level, &mut acc, &mut |word| {
                if word.weight() <= target {
                    found = Some(word.clone());
                    return ControlFlow::Break(());
                }
                ControlFlow::Continue(())
            });
            if flow.is_break() {
                break;
            }
        }
        if found.is_some() {
            return found;
        }
    }
    None
}

/// All codewords of weight exactly `w`, deduplicated and sorted.
///
/// Uses full Gray-code enumeration when 2^k fits the budget; otherwise
/// enumerates each information set through level
/// ⌊w·fresh_j/n⌋ + deficit_j, which is complete: some set receives at
/// most its proportional share of the support, and at most `deficit_j`
/// pivots of that set sit outside its fresh columns.
pub fn enumerate_weight(
    code: &Code,
    w: usize,
    cap: usize,
    budget: u64,
) -> Result<Vec<BitWord>, WeightsError> {
    enumerate_weight_with_progress(code, w, cap, budget, &mut |_, _, _| {})
}

/// [`enumerate_weight`] reporting `(set, completed level, words so far)`
/// after every finished level.
pub fn enumerate_weight_with_progress(
    code: &Code,
    w: usize,
    cap: usize,
    budget: u64,
    progress: &mut dyn FnMut(usize, usize, usize),
) -> Result<Vec<BitWord>, WeightsError> {
    let k = code.k();
    let n = code.n();
    if w == 0 {
        return Ok(vec![BitWord::zeros(n)]);
    }
    if k == 0 {
        return Ok(Vec::new());
    }
    let mut out = BTreeSet::new();

    if k < 63 && (1u64 << k) <= budget {
        let rows = code.standard_form().matrix.rows();
        let mut current = BitWord::zeros(n);
        for i in 1u64..(1u64 << k) {
            current.xor_assign(&rows[i.trailing_zeros() as usize]);
            if current.weight() == w {
                if out.len() == cap {
                    return Err(WeightsError::CapExceeded { cap });
                }
                out.insert(current.clone());
            }
        }
        return Ok(out.into_iter().collect());
    }

    let sets = information_sets(code);
    let levels: Vec<usize> = sets.iter().map(|s| (w * s.fresh) / n + s.deficit).collect();
    let mut needed = BigUint::ZERO;
    for &level in &levels {
        for p in 1..=level.min(k) {
            needed += binomial(BigUint::from(k), BigUint::from(p));
        }
    }
    if needed.to_u128().is_none_or(|c| c > budget as u128) {
        return Err(WeightsError::BudgetExceeded {
            budget,
            needed: needed.to_u128().unwrap_or(u128::MAX),
        });
    }

    for (set_index, (set, &level)) in sets.iter().zip(&levels).enumerate() {
        for p in 1..=level.min(k) {
            let mut acc = BitWord::zeros(n);
            let mut failure = None;
            let flow = for_each_combination(&set.rows, p, &mut acc, &mut |word| {
                if word.weight() == w && !out.contains(word) {
                    if out.len() == cap {
                        failure = Some(WeightsError::CapExceeded { cap });
                        return ControlFlow::Break(());
                    }
                    out.insert(word.clone());
                }
                ControlFlow::Continue(())
            });
            if flow.is_break() {
                return Err(failure.expect("break implies failure"));
            }
            progress(set_index, p, out.len());
        }
    }
    Ok(out.into_iter().collect())
}
