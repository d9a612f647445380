//! Vendored generator data: the published four-circulant codes this crate
//! reconstructs, the neighbor-defining support vector, the Golay fixture,
//! and the published weight-20 count lists.

use num_bigint::BigUint;

use crate::codes::{parse_spec_file, Code, FourCirculantSpec};
use crate::gf2::{BitMatrix, BitWord};

const C112: &str = include_str!("../data/c112.txt");
const E112: &str = include_str!("../data/e112.txt");
const D112_SUPPORT: &str = include_str!("../data/d112_support.txt");
const FOURCIRC_120: &str = include_str!("../data/fourcirculant_120.txt");
const FOURCIRC_128: &str = include_str!("../data/fourcirculant_128.txt");
const GOLAY24: &str = include_str!("../data/golay24.txt");
const COUNTS_120: &str = include_str!("../data/weight20_counts_120.txt");
const COUNTS_128: &str = include_str!("../data/weight20_counts_128.txt");
const GRAM_D112: &str = include_str!("../data/gram_values_d112.txt");
const GRAM_E112: &str = include_str!("../data/gram_values_e112.txt");

fn only_spec(text: &str) -> FourCirculantSpec {
    parse_spec_file(text)
        .expect("vendored spec parses")
        .remove(0)
}

/// The singly even self-dual [112,56,18] four-circulant code.
pub fn c112() -> FourCirculantSpec {
    only_spec(C112)
}

/// The extremal doubly even self-dual [112,56,20] four-circulant code.
pub fn e112() -> FourCirculantSpec {
    only_spec(E112)
}

/// 1-indexed support of the vector x with D112 = <(C112 ∩ <x>^⊥), x>.
pub fn d112_support() -> Vec<usize> {
    parse_support_list(D112_SUPPORT).expect("vendored support parses")
}

/// The support as a length-112 vector.
pub fn d112_vector() -> BitWord {
    BitWord::from_support(112, &d112_support()).expect("support in range")
}

/// Ten doubly even self-dual four-circulant codes of length 120, d = 20.
pub fn fourcirculant_120() -> Vec<FourCirculantSpec> {
    parse_spec_file(FOURCIRC_120).expect("vendored specs parse")
}

/// Ten doubly even self-dual four-circulant codes of length 128, d = 20.
pub fn fourcirculant_128() -> Vec<FourCirculantSpec> {
    parse_spec_file(FOURCIRC_128).expect("vendored specs parse")
}

/// The [24,12,8] extended binary Golay code (test fixture).
pub fn golay24() -> Code {
    let rows: Vec<BitWord> = GOLAY24
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| BitWord::from_bitstring(l).expect("vendored generator parses"))
        .collect();
    Code::from_generator(BitMatrix::from_rows(rows, 24).expect("equal row lengths"))
}

/// Published weight-20 codeword counts for the length-120 code list.
pub fn weight20_counts_120() -> Vec<BigUint> {
    parse_count_list(COUNTS_120)
}

/// Published weight-20 codeword counts for the length-128 code list.
pub fn weight20_counts_128() -> Vec<BigUint> {
    parse_count_list(COUNTS_128)
}

/// Published Gram-invariant value set of the neighbor-constructed
/// length-112 code (62 values, maximum 63525).
pub fn gram_values_d112() -> Vec<u64> {
    parse_gram_values(GRAM_D112)
}

/// Published Gram-invariant value set of the four-circulant length-112
/// code (91 values, maximum 63525).
pub fn gram_values_e112() -> Vec<u64> {
    parse_gram_values(GRAM_E112)
}

fn parse_gram_values(text: &str) -> Vec<u64> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .flat_map(|l| l.split(','))
        .map(|t| t.trim().parse().expect("vendored value parses"))
        .collect()
}

fn parse_count_list(text: &str) -> Vec<BigUint> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.parse().expect("vendored count parses"))
        .collect()
}

/// Parses a comma-separated, 1-indexed support list ('#' comment lines
/// allowed), the format used for neighbor-defining vectors.
pub fn parse_support_list(text: &str) -> Result<Vec<usize>, std::num::ParseIntError> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .flat_map(|l| l.split(','))
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect()
}
