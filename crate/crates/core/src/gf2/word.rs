use std::cmp::Ordering;
use std::fmt;

use super::Gf2Error;

/// A fixed-length vector over GF(2), packed 64 coordinates per word.
///
/// Bit `i` (0-indexed) lives at `words[i / 64]`, bit position `i % 64`.
/// Unused high bits of the last word are always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitWord {
    len: usize,
    words: Vec<u64>,
}

impl BitWord {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    /// Parses a string of `0`/`1` characters, leftmost character first.
    pub fn from_bitstring(s: &str) -> Result<Self, Gf2Error> {
        let mut w = Self::zeros(s.chars().count());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => w.set(i, true),
                other => return Err(Gf2Error::InvalidBitChar(other)),
            }
        }
        Ok(w)
    }

    /// Builds a word of length `len` from a 1-indexed support list.
    pub fn from_support(len: usize, support: &[usize]) -> Result<Self, Gf2Error> {
        let mut w = Self::zeros(len);
        for &coordinate in support {
            if coordinate == 0 || coordinate > len {
                return Err(Gf2Error::CoordinateOutOfRange {
                    coordinate,
                    length: len,
                });
            }
            w.set(coordinate - 1, true);
        }
        Ok(w)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        if value {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    /// Number of nonzero coordinates.
    #[inline]
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// The support as 1-indexed coordinates, ascending.
    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for (wi, &w) in self.words.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                out.push(wi * 64 + b + 1);
                bits &= bits - 1;
            }
        }
        out
    }

    /// Standard inner product: the parity of the support overlap.
    pub fn inner_product(&self, other: &Self) -> Result<u8, Gf2Error> {
        if self.len != other.len {
            return Err(Gf2Error::LengthMismatch {
                left: self.len,
                right: other.len,
            });
        }
        Ok(self.inner_product_unchecked(other))
    }

    #[inline]
    pub(crate) fn inner_product_unchecked(&self, other: &Self) -> u8 {
        let mut acc = 0u64;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= a & b;
        }
        (acc.count_ones() & 1) as u8
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Cyclic shift one step to the right: coordinate `i` moves to `i + k (mod len)`.
    pub fn rotated_right(&self, k: usize) -> Self {
        let mut out = Self::zeros(self.len);
        if self.len == 0 {
            return out;
        }
        let k = k % self.len;
        for i in 0..self.len {
            if self.get(i) {
                out.set((i + k) % self.len, true);
            }
        }
        out
    }

    /// Bitwise AND, used for overlap counting.
    pub fn and(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        Self {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn to_bitstring(&self) -> String {
        (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bitstring())
    }
}

impl fmt::Debug for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitWord({})", self.to_bitstring())
    }
}

impl PartialOrd for BitWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BitWord {
    /// Lexicographic by coordinate (coordinate 1 most significant), with
    /// `0 < 1`; shorter words compare by length first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then_with(|| {
            for (a, b) in self.words.iter().zip(&other.words) {
                // reversing puts the lowest coordinate in the highest bit
                let ord = a.reverse_bits().cmp(&b.reverse_bits());
                if ord != Ordering::Equal {
                    return ord;
                }
            }
            Ordering::Equal
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_zero_word() {
        assert_eq!(BitWord::zeros(8).weight(), 0);
    }

    #[test]
    fn weight_of_support_word() {
        let w = BitWord::from_support(8, &[1, 2, 3, 4]).unwrap();
        assert_eq!(w.weight(), 4);
        assert_eq!(w.support(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn bitstring_round_trip_across_word_boundary() {
        let s = "10".repeat(40); // 80 bits, spans two u64 words
        let w = BitWord::from_bitstring(&s).unwrap();
        assert_eq!(w.to_bitstring(), s);
        assert_eq!(w.weight(), 40);
    }

    #[test]
    fn inner_product_examples() {
        let p = |a: &str, b: &str| {
            BitWord::from_bitstring(a)
                .unwrap()
                .inner_product(&BitWord::from_bitstring(b).unwrap())
                .unwrap()
        };
        assert_eq!(p("11", "11"), 0);
        assert_eq!(p("10", "11"), 1);
    }

    #[test]
    fn inner_product_with_self_is_weight_parity() {
        for s in ["0000", "1010", "1110", "11111"] {
            let w = BitWord::from_bitstring(s).unwrap();
            assert_eq!(w.inner_product(&w).unwrap() as usize, w.weight() % 2);
        }
    }

    #[test]
    fn inner_product_length_mismatch() {
        let a = BitWord::zeros(3);
        let b = BitWord::zeros(4);
        assert!(matches!(
            a.inner_product(&b),
            Err(Gf2Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn support_rejects_out_of_range() {
        assert!(BitWord::from_support(4, &[0]).is_err());
        assert!(BitWord::from_support(4, &[5]).is_err());
        assert!(BitWord::from_support(4, &[4]).is_ok());
    }

    #[test]
    fn rotation_is_cyclic() {
        let w = BitWord::from_bitstring("100").unwrap();
        assert_eq!(w.rotated_right(1).to_bitstring(), "010");
        assert_eq!(w.rotated_right(3).to_bitstring(), "100");
    }

    #[test]
    fn lex_order_matches_bitstring_order() {
        let strings = ["000", "001", "010", "011", "100", "101", "110", "111"];
        let mut words: Vec<BitWord> = strings
            .iter()
            .rev()
            .map(|s| BitWord::from_bitstring(s).unwrap())
            .collect();
        words.sort();
        let sorted: Vec<String> = words.iter().map(|w| w.to_bitstring()).collect();
        assert_eq!(sorted, strings);
    }

    #[test]
    fn lex_order_long_words() {
        // differ only in coordinate 70, past the first packed word
        let mut a = BitWord::zeros(80);
        let mut b = BitWord::zeros(80);
        a.set(69, true);
        b.set(70, true);
        // '0' sorts before '1', so the word whose support starts later is smaller
        assert!(b < a);
    }
}
