//! Seeded randomized search for self-dual four-circulant codes with a
//! target minimum weight.
//!
//! Candidate i draws its spec from an independent ChaCha8 stream
//! (`seed_from_u64(seed)` with stream set to i), so the candidate
//! sequence — and therefore the whole campaign output — is identical for
//! any worker count. Screening is staged cheapest-first: the circulant
//! autocorrelation test for AA^T + BB^T = I, then the generator-row
//! parity test, then minimum-weight certification with early abort at the
//! first codeword below target.

use std::fmt;

use num_bigint::BigUint;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::codes::FourCirculantSpec;
use crate::enumerators::mallows_sloane;
use crate::gf2::BitWord;
use crate::weights::{
    enumerate_weight, min_weight, weight_distribution_bruteforce, MinWeightCertificate,
    MinWeightOptions, DEFAULT_BRUTE_CAP,
};

/// Candidates are processed in fixed-size chunks so checkpoint sinks see
/// records in draw order regardless of thread count.
const CHUNK: u64 = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("invalid search config: {0}")]
    InvalidConfig(String),
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Circulant order; the code length is 4m.
    pub m: usize,
    /// Accept only codes certified to have minimum weight ≥ target_d.
    pub target_d: usize,
    /// Additionally require doubly even generator rows at screening time.
    pub doubly_even_only: bool,
    pub seed: u64,
    pub max_candidates: u64,
    /// Message-evaluation budget per candidate certification.
    pub minweight_budget: u64,
    /// Budget for counting weight-target_d codewords of accepted codes.
    pub count_budget: u64,
}

impl SearchConfig {
    pub fn new(m: usize, target_d: usize) -> Self {
        Self {
            m,
            target_d,
            doubly_even_only: false,
            seed: 1,
            max_candidates: 1000,
            minweight_budget: 1_000_000,
            count_budget: 10_000_000,
        }
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        if self.m == 0 {
            return Err(SearchError::InvalidConfig(
                "circulant order m must be positive".into(),
            ));
        }
        if self.target_d == 0 || !self.target_d.is_multiple_of(2) {
            return Err(SearchError::InvalidConfig(format!(
                "target minimum weight must be a positive even number, got {}",
                self.target_d
            )));
        }
        if self.doubly_even_only {
            let n = 4 * self.m;
            if !n.is_multiple_of(8) {
                return Err(SearchError::InvalidConfig(format!(
                    "doubly even self-dual codes require length divisible by 8, got n = {n}"
                )));
            }
            let bound = mallows_sloane(n).expect("n divisible by 8");
            if self.target_d > bound {
                return Err(SearchError::InvalidConfig(format!(
                    "target {} exceeds the extremality bound {bound} for n = {n}",
                    self.target_d
                )));
            }
        }
        Ok(())
    }
}

/// Why screening rejected a spec.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RejectReason {
    /// AA^T + BB^T ≠ I, so the four-circulant code is not self-dual.
    NotSelfDual,
    /// Generator row weight 1 + wt(rA) + wt(rB) ≢ 0 (mod 4).
    NotDoublyEven,
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RejectReason::NotSelfDual => write!(f, "not self-dual"),
            RejectReason::NotDoublyEven => write!(f, "row weight not divisible by 4"),
        }
    }
}

/// Uniform spec with the first bit of rA pinned to 1 (every published
/// first row starts with 1; this also rules out the zero row).
pub fn random_spec(m: usize, rng: &mut impl Rng) -> FourCirculantSpec {
    let mut r_a = BitWord::zeros(m);
    r_a.set(0, true);
    for i in 1..m {
        r_a.set(i, rng.gen_bool(0.5));
    }
    let mut r_b = BitWord::zeros(m);
    for i in 0..m {
        r_b.set(i, rng.gen_bool(0.5));
    }
    FourCirculantSpec::new(r_a, r_b).expect("equal lengths by construction")
}

/// Accept/reject purely from the first rows: AA^T + BB^T = I_m holds iff
/// the combined cyclic autocorrelation of rA and rB is 1 at shift 0 and 0
/// elsewhere.
pub fn screen(spec: &FourCirculantSpec, doubly_even_only: bool) -> Result<(), RejectReason> {
    let m = spec.m();
    let wa = spec.r_a().weight();
    let wb = spec.r_b().weight();
    // shift 0: diagonal of AA^T + BB^T is wt(rA) + wt(rB) mod 2
    if (wa + wb) % 2 != 1 {
        return Err(RejectReason::NotSelfDual);
    }
    for t in 1..m {
        let a = spec.r_a().and(&spec.r_a().rotated_right(t)).weight();
        let b = spec.r_b().and(&spec.r_b().rotated_right(t)).weight();
        if !(a + b).is_multiple_of(2) {
            return Err(RejectReason::NotSelfDual);
        }
    }
    if doubly_even_only && !(1 + wa + wb).is_multiple_of(4) {
        return Err(RejectReason::NotDoublyEven);
    }
    Ok(())
}

/// Identity used to separate accepted codes: the exact count of
/// weight-target_d codewords when enumerable within budget, else the spec
/// line and certificate. Distinct counts prove inequivalence; equal keys
/// are only flagged, never dropped.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum DedupeKey {
    MinWeightCount(BigUint),
    SpecCertificate(String),
}

impl fmt::Display for DedupeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DedupeKey::MinWeightCount(c) => write!(f, "{c}"),
            DedupeKey::SpecCertificate(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchRecord {
    pub candidate_index: u64,
    pub spec: FourCirculantSpec,
    pub certificate: MinWeightCertificate,
    /// Exact number of weight-target_d codewords, when enumerable.
    pub min_weight_count: Option<BigUint>,
    pub key: DedupeKey,
}

#[derive(Debug, Clone, Default)]
pub struct CampaignStats {
    pub candidates: u64,
    pub screen_rejected_self_dual: u64,
    pub screen_rejected_parity: u64,
    pub screen_passed: u64,
    pub minweight_rejected: u64,
    pub undecided: u64,
    pub accepted: u64,
    /// Indices (into the record list) of records sharing a dedupe key.
    pub duplicate_key_groups: Vec<Vec<usize>>,
}

impl CampaignStats {
    /// Line-oriented `key value` text.
    pub fn to_text(&self, keys: &[DedupeKey]) -> String {
        let mut out = String::new();
        out.push_str(&format!("candidates {}\n", self.candidates));
        out.push_str(&format!(
            "screen_rejected_self_dual {}\n",
            self.screen_rejected_self_dual
        ));
        out.push_str(&format!(
            "screen_rejected_parity {}\n",
            self.screen_rejected_parity
        ));
        out.push_str(&format!("screen_passed {}\n", self.screen_passed));
        out.push_str(&format!("minweight_rejected {}\n", self.minweight_rejected));
        out.push_str(&format!("undecided {}\n", self.undecided));
        out.push_str(&format!("accepted {}\n", self.accepted));
        let rate = if self.candidates == 0 {
            0.0
        } else {
            self.screen_passed as f64 / self.candidates as f64
        };
        out.push_str(&format!("screen_pass_rate {rate:.6}\n"));
        out.push_str(&format!(
            "keys {}\n",
            keys.iter()
                .map(|k| k.to_string())
                .collect::<Vec<_>>()
                .join(",")
        ));
        out.push_str(&format!(
            "duplicate_key_groups {}\n",
            self.duplicate_key_groups.len()
        ));
        out
    }
}

#[derive(Debug, Clone)]
pub struct CampaignOutcome {
    pub records: Vec<SearchRecord>,
    pub stats: CampaignStats,
}

enum CandidateOutcome {
    ScreenSelfDual,
    ScreenParity,
    Rejected,
    Undecided,
    Accepted(Box<SearchRecord>),
}

fn process_candidate(cfg: &SearchConfig, index: u64) -> CandidateOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index);
    let spec = random_spec(cfg.m, &mut rng);
    match screen(&spec, cfg.doubly_even_only) {
        Err(RejectReason::NotSelfDual) => return CandidateOutcome::ScreenSelfDual,
        Err(RejectReason::NotDoublyEven) => return CandidateOutcome::ScreenParity,
        Ok(()) => {}
    }
    let code = spec.code();
    let opts = MinWeightOptions {
        budget: cfg.minweight_budget,
        early_stop_below: Some(cfg.target_d),
        certify_bound: Some(cfg.target_d),
    };
    let certificate = min_weight(&code, &opts);
    if certificate.upper_bound().is_some_and(|u| u < cfg.target_d) {
        return CandidateOutcome::Rejected;
    }
    if certificate.value < cfg.target_d {
        // budget ran out before the bound reached the target
        return CandidateOutcome::Undecided;
    }
    let min_weight_count = if code.k() <= DEFAULT_BRUTE_CAP {
        let dist =
            weight_distribution_bruteforce(&code, DEFAULT_BRUTE_CAP).expect("dimension under cap");
        Some(dist.count(cfg.target_d))
    } else {
        enumerate_weight(&code, cfg.target_d, usize::MAX, cfg.count_budget)
            .ok()
            .map(|words| BigUint::from(words.len()))
    };
    let key = match &min_weight_count {
        Some(c) => DedupeKey::MinWeightCount(c.clone()),
        None => DedupeKey::SpecCertificate(format!("{}|lb{}", spec.to_line(), certificate.value)),
    };
    CandidateOutcome::Accepted(Box::new(SearchRecord {
        candidate_index: index,
        spec,
        certificate,
        min_weight_count,
        key,
    }))
}

/// Runs the whole campaign; `sink` sees each accepted record in draw
/// order as soon as its chunk completes (checkpointing hook).
pub fn run_campaign_with_sink(
    cfg: &SearchConfig,
    sink: &mut dyn FnMut(&SearchRecord),
) -> Result<CampaignOutcome, SearchError> {
    cfg.validate()?;
    let mut stats = CampaignStats {
        candidates: cfg.max_candidates,
        ..Default::default()
    };
    let mut records: Vec<SearchRecord> = Vec::new();
    let mut start = 0u64;
    while start < cfg.max_candidates {
        let end = (start + CHUNK).min(cfg.max_candidates);
        let outcomes: Vec<CandidateOutcome> = (start..end)
            .into_par_iter()
            .map(|i| process_candidate(cfg, i))
            .collect();
        for outcome in outcomes {
            match outcome {
                CandidateOutcome::ScreenSelfDual => stats.screen_rejected_self_dual += 1,
                CandidateOutcome::ScreenParity => stats.screen_rejected_parity += 1,
                CandidateOutcome::Rejected => {
                    stats.screen_passed += 1;
                    stats.minweight_rejected += 1;
                }
                CandidateOutcome::Undecided => {
                    stats.screen_passed += 1;
                    stats.undecided += 1;
                }
                CandidateOutcome::Accepted(record) => {
                    stats.screen_passed += 1;
                    stats.accepted += 1;
                    sink(&record);
                    records.push(*record);
                }
            }
        }
        start = end;
    }
    // flag (never drop) records sharing a key
    let mut by_key: std::collections::BTreeMap<&DedupeKey, Vec<usize>> = Default::default();
    for (i, r) in records.iter().enumerate() {
        by_key.entry(&r.key).or_default().push(i);
    }
    stats.duplicate_key_groups = by_key
        .into_values()
        .filter(|group| group.len() > 1)
        .collect();
    Ok(CampaignOutcome { records, stats })
}

pub fn run_campaign(cfg: &SearchConfig) -> Result<CampaignOutcome, SearchError> {
    run_campaign_with_sink(cfg, &mut |_| {})
}

/// Spec-file serialization of accepted records; each record carries a
/// comment line with its certificate summary.
pub fn serialize_records(records: &[SearchRecord]) -> String {
    let mut out = String::new();
    for r in records {
        let kind = if r.certificate.is_exact() { "d" } else { "d>=" };
        let count = r
            .min_weight_count
            .as_ref()
            .map(|c| format!(" count {c}"))
            .unwrap_or_default();
        out.push_str(&format!(
            "# candidate {} {}{}{}\n{}\n",
            r.candidate_index,
            kind,
            r.certificate.value,
            count,
            r.spec.to_line()
        ));
    }
    out
}
