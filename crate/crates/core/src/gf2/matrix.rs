use std::cmp::Ordering;
use std::fmt;

use super::{BitWord, Gf2Error};

/// A dense matrix over GF(2), stored as packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<BitWord>,
}

/// Reduced row-echelon form together with rank and pivot columns.
///
/// Pivot selection is leftmost column, first available row, so the result
/// is canonical for a given row space.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: BitMatrix,
    pub rank: usize,
    /// 0-indexed pivot columns, ascending.
    pub pivots: Vec<usize>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            cols,
            rows: vec![BitWord::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i].set(i, true);
        }
        m
    }

    pub fn from_rows(rows: Vec<BitWord>, cols: usize) -> Result<Self, Gf2Error> {
        for r in &rows {
            if r.len() != cols {
                return Err(Gf2Error::RaggedRows {
                    left: cols,
                    right: r.len(),
                });
            }
        }
        Ok(Self { cols, rows })
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &BitWord {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitWord] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value);
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.cols, self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.support() {
                out.set(j - 1, i, true);
            }
        }
        out
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &BitMatrix) -> Result<BitMatrix, Gf2Error> {
        if self.cols != other.cols {
            return Err(Gf2Error::LengthMismatch {
                left: self.cols,
                right: other.cols,
            });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(BitMatrix {
            cols: self.cols,
            rows,
        })
    }

    /// Reduced row-echelon form; pivots are chosen leftmost-column,
    /// first-available-row, and pivot columns are cleared above and below.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            let Some(p) = (r..m.rows.len()).find(|&i| m.rows[i].get(c)) else {
                continue;
            };
            m.rows.swap(r, p);
            let pivot_row = m.rows[r].clone();
            for (i, row) in m.rows.iter_mut().enumerate() {
                if i != r && row.get(c) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.rows.len() {
                break;
            }
        }
        m.rows.truncate(r);
        Rref {
            matrix: m,
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Generator matrix of the dual code: a basis of the kernel of this
    /// matrix read as a map on column vectors, `(cols - rank)` rows.
    pub fn dual(&self) -> BitMatrix {
        let Rref {
            matrix,
            rank,
            pivots,
        } = self.rref();
        let mut out = Vec::with_capacity(self.cols - rank);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = BitWord::zeros(self.cols);
            v.set(f, true);
            for (t, &p) in pivots.iter().enumerate() {
                if matrix.get(t, f) {
                    v.set(p, true);
                }
            }
            out.push(v);
        }
        BitMatrix {
            cols: self.cols,
            rows: out,
        }
    }

    /// Generator of the intersection of the two row spaces, computed as
    /// the dual of the stacked duals.
    pub fn intersect(&self, other: &BitMatrix) -> Result<BitMatrix, Gf2Error> {
        let stacked = self.dual().stack(&other.dual())?;
        Ok(stacked.dual())
    }

    /// Whether `v` lies in the row space.
    pub fn contains(&self, v: &BitWord) -> Result<bool, Gf2Error> {
        if v.len() != self.cols {
            return Err(Gf2Error::LengthMismatch {
                left: self.cols,
                right: v.len(),
            });
        }
        Ok(self.rref().reduce(v).is_zero())
    }

    /// Row-space equality via canonical reduced forms.
    pub fn row_space_eq(&self, other: &BitMatrix) -> bool {
        if self.cols != other.cols {
            return false;
        }
        let a = self.rref();
        let b = other.rref();
        a.rank == b.rank && a.matrix.rows == b.matrix.rows
    }

    /// Total ordering on equally-shaped matrices: rows compared
    /// lexicographically in order. Used to pin deterministic outputs.
    pub fn lex_cmp(&self, other: &BitMatrix) -> Ordering {
        self.rows.cmp(&other.rows)
    }
}

impl Rref {
    /// Canonical coset representative: reduces `v` modulo the row space by
    /// clearing every pivot coordinate.
    pub fn reduce(&self, v: &BitWord) -> BitWord {
        let mut out = v.clone();
        for (t, &p) in self.pivots.iter().enumerate() {
            if out.get(p) {
                out.xor_assign(self.matrix.row(t));
            }
        }
        out
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitMatrix({}x{})", self.rows.len(), self.cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn from_strings(rows: &[&str]) -> BitMatrix {
        let words: Vec<BitWord> = rows
            .iter()
            .map(|s| BitWord::from_bitstring(s).unwrap())
            .collect();
        let cols = words[0].len();
        BitMatrix::from_rows(words, cols).unwrap()
    }

    #[test]
    fn rref_identity() {
        let m = BitMatrix::identity(4);
        let r = m.rref();
        assert_eq!(r.rank, 4);
        assert_eq!(r.pivots, vec![0, 1, 2, 3]);
        assert_eq!(r.matrix, BitMatrix::identity(4));
    }

    #[test]
    fn rref_zero_matrix() {
        let r = BitMatrix::zeros(3, 5).rref();
        assert_eq!(r.rank, 0);
        assert!(r.pivots.is_empty());
        assert_eq!(r.matrix.row_count(), 0);
        assert_eq!(r.matrix.col_count(), 5);
    }

    #[test]
    fn rref_e8_generator_rank_four() {
        // four-circulant generator with rA=01, rB=11 (checked by hand row-reduction)
        let g = from_strings(&["10000111", "01001011", "00101101", "00011110"]);
        assert_eq!(g.rref().rank, 4);
    }

    #[test]
    fn rref_is_idempotent() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let rows = rng.gen_range(1..6);
            let cols = rng.gen_range(1..10);
            let mut m = BitMatrix::zeros(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    m.set(i, j, rng.gen_bool(0.5));
                }
            }
            let first = m.rref();
            let second = first.matrix.rref();
            assert_eq!(first.matrix, second.matrix);
            assert_eq!(first.rank, second.rank);
            assert_eq!(first.pivots, second.pivots);
        }
    }

    #[test]
    fn dual_of_repetition_is_itself() {
        let g = from_strings(&["11"]);
        let d = g.dual();
        assert_eq!(d.row_count(), 1);
        assert_eq!(d.row(0).to_bitstring(), "11");
    }

    #[test]
    fn dual_of_identity_is_zero() {
        let d = BitMatrix::identity(5).dual();
        assert_eq!(d.row_count(), 0);
        assert_eq!(d.col_count(), 5);
    }

    #[test]
    fn dual_of_standard_form() {
        // G = [I_4 | M] has dual [M^T | I_4]
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..20 {
            let mut g = BitMatrix::zeros(4, 8);
            for i in 0..4 {
                g.set(i, i, true);
                for j in 4..8 {
                    g.set(i, j, rng.gen_bool(0.5));
                }
            }
            let d = g.dual();
            assert_eq!(d.row_count(), 4);
            for i in 0..4 {
                for row in d.rows() {
                    assert_eq!(g.row(i).inner_product(row).unwrap(), 0);
                }
            }
            for j in 0..4 {
                // identity block on the right half
                assert!(d.get(j, 4 + j));
            }
        }
    }

    #[test]
    fn dual_ranks_sum_to_length() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..50 {
            let rows = rng.gen_range(1..8);
            let cols = rng.gen_range(1..12);
            let mut m = BitMatrix::zeros(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    m.set(i, j, rng.gen_bool(0.5));
                }
            }
            let d = m.dual();
            assert_eq!(m.rank() + d.rank(), cols);
            for a in m.rows() {
                for b in d.rows() {
                    assert_eq!(a.inner_product(b).unwrap(), 0);
                }
            }
        }
    }

    #[test]
    fn intersect_with_self_is_identity_on_row_space() {
        let g = from_strings(&["1010", "0110"]);
        let i = g.intersect(&g).unwrap();
        assert!(i.row_space_eq(&g));
    }

    #[test]
    fn intersect_disjoint_lines_is_zero() {
        let a = from_strings(&["11"]);
        let b = from_strings(&["10"]);
        assert_eq!(a.intersect(&b).unwrap().rank(), 0);
    }

    #[test]
    fn intersection_dimension_formula_small_random() {
        // dim(A∩B) + dim(A+B) = dim A + dim B, cross-checked against the
        // explicit codeword-set intersection for n ≤ 16
        let mut rng = StdRng::seed_from_u64(19);
        for _ in 0..30 {
            let cols = rng.gen_range(2..=8);
            let make = |rng: &mut StdRng| {
                let rows = rng.gen_range(1..=4usize);
                let mut m = BitMatrix::zeros(rows, cols);
                for i in 0..rows {
                    for j in 0..cols {
                        m.set(i, j, rng.gen_bool(0.5));
                    }
                }
                m
            };
            let a = make(&mut rng);
            let b = make(&mut rng);
            let inter = a.intersect(&b).unwrap();
            let sum_rank = a.stack(&b).unwrap().rank();
            assert_eq!(inter.rank() + sum_rank, a.rank() + b.rank());

            // oracle: enumerate both row spaces and intersect the sets
            let span = |m: &BitMatrix| -> std::collections::BTreeSet<Vec<bool>> {
                let rows = m.rows();
                let mut out = std::collections::BTreeSet::new();
                for mask in 0u32..(1 << rows.len()) {
                    let mut v = BitWord::zeros(cols);
                    for (t, row) in rows.iter().enumerate() {
                        if (mask >> t) & 1 == 1 {
                            v.xor_assign(row);
                        }
                    }
                    out.insert((0..cols).map(|j| v.get(j)).collect());
                }
                out
            };
            let expected: Vec<_> = span(&a).intersection(&span(&b)).cloned().collect();
            assert_eq!(1usize << inter.rank(), expected.len());
            for row in inter.rows() {
                let key: Vec<bool> = (0..cols).map(|j| row.get(j)).collect();
                assert!(expected.contains(&key));
            }
        }
    }

    #[test]
    fn contains_basics() {
        let g = from_strings(&["11"]);
        assert!(g.contains(&BitWord::zeros(2)).unwrap());
        assert!(g.contains(&BitWord::from_bitstring("11").unwrap()).unwrap());
        assert!(!g.contains(&BitWord::from_bitstring("10").unwrap()).unwrap());
        assert!(g.contains(&BitWord::zeros(3)).is_err());
    }

    #[test]
    fn contains_is_closed_under_addition() {
        let mut rng = StdRng::seed_from_u64(23);
        let g = from_strings(&["100110", "010101", "001011"]);
        for _ in 0..40 {
            let pick = |rng: &mut StdRng| {
                let mut v = BitWord::zeros(6);
                for row in g.rows() {
                    if rng.gen_bool(0.5) {
                        v.xor_assign(row);
                    }
                }
                v
            };
            let u = pick(&mut rng);
            let v = pick(&mut rng);
            assert!(g.contains(&u).unwrap());
            assert!(g.contains(&v).unwrap());
            assert!(g.contains(&u.xor(&v)).unwrap());
        }
    }
}
