//! Construction and classification of binary self-dual codes, including
//! the four-circulant family and its one-line-per-code text format.

use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::gf2::{BitMatrix, BitWord, Gf2Error, Rref};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error(transparent)]
    Gf2(#[from] Gf2Error),
    #[error("line {line}: rA and rB have different lengths ({left} vs {right})")]
    UnequalRowLengths {
        line: usize,
        left: usize,
        right: usize,
    },
    #[error("line {line}: invalid character {ch:?} in bit string")]
    InvalidChar { line: usize, ch: char },
    #[error("line {line}: expected two whitespace-separated bit strings, found {found}")]
    WrongFieldCount { line: usize, found: usize },
    #[error("line {line}: circulant order {found} differs from earlier lines ({expected})")]
    InconsistentOrder {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("empty first row: circulant order must be at least 1")]
    EmptyRow,
}

/// A binary linear code held as a generator matrix.
///
/// The generator is stored exactly as constructed (contract for printing
/// four-circulant matrices verbatim); the canonical reduced form is
/// computed once on demand and cached.
#[derive(Clone)]
pub struct Code {
    generator: BitMatrix,
    dimension: usize,
    standard_form: OnceLock<Rref>,
}

/// Parity classification of a self-dual code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityClass {
    /// Self-dual, all codeword weights divisible by four.
    DoublyEven,
    /// Self-dual with some codeword of weight ≡ 2 (mod 4).
    SinglyEven,
    /// The code is not self-dual, so the classification does not apply.
    NotSelfDual,
}

impl fmt::Display for ParityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParityClass::DoublyEven => write!(f, "doubly even"),
            ParityClass::SinglyEven => write!(f, "singly even"),
            ParityClass::NotSelfDual => write!(f, "not self-dual"),
        }
    }
}

impl Code {
    /// Wraps a generator matrix; the dimension is the rank of the given
    /// rows (dependent rows are kept in the stored generator but do not
    /// count toward the dimension).
    pub fn from_generator(generator: BitMatrix) -> Self {
        let rref = generator.rref();
        let dimension = rref.rank;
        let cell = OnceLock::new();
        let _ = cell.set(rref);
        Self {
            generator,
            dimension,
            standard_form: cell,
        }
    }

    pub fn n(&self) -> usize {
        self.generator.col_count()
    }

    pub fn k(&self) -> usize {
        self.dimension
    }

    pub fn generator(&self) -> &BitMatrix {
        &self.generator
    }

    /// Canonical reduced row-echelon form of the generator.
    pub fn standard_form(&self) -> &Rref {
        self.standard_form.get_or_init(|| self.generator.rref())
    }

    pub fn contains(&self, v: &BitWord) -> Result<bool, Gf2Error> {
        if v.len() != self.n() {
            return Err(Gf2Error::LengthMismatch {
                left: self.n(),
                right: v.len(),
            });
        }
        Ok(self.standard_form().reduce(v).is_zero())
    }

    pub fn dual_code(&self) -> Code {
        Code::from_generator(self.generator.dual())
    }

    pub fn intersection(&self, other: &Code) -> Result<Code, Gf2Error> {
        Ok(Code::from_generator(
            self.generator.intersect(&other.generator)?,
        ))
    }

    /// True iff k = n/2 and every pair of generator rows (including each
    /// row with itself) is orthogonal.
    pub fn is_self_dual(&self) -> bool {
        if self.n() != 2 * self.k() {
            return false;
        }
        let rows = self.generator.rows();
        rows.iter()
            .enumerate()
            .all(|(i, a)| rows[i..].iter().all(|b| a.inner_product_unchecked(b) == 0))
    }

    /// Doubly even iff every generator row has weight ≡ 0 (mod 4); this is
    /// sound because a self-orthogonal code generated by doubly even rows
    /// is doubly even.
    pub fn parity_class(&self) -> ParityClass {
        if !self.is_self_dual() {
            return ParityClass::NotSelfDual;
        }
        if self.generator.rows().iter().all(|r| r.weight() % 4 == 0) {
            ParityClass::DoublyEven
        } else {
            ParityClass::SinglyEven
        }
    }

    /// Same codeword set: equal lengths and identical canonical forms.
    pub fn codewords_eq(&self, other: &Code) -> bool {
        self.n() == other.n()
            && self.k() == other.k()
            && self.standard_form().matrix == other.standard_form().matrix
    }
}

impl fmt::Debug for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Code[{},{}]", self.n(), self.k())
    }
}

/// First rows of the circulant blocks A and B; the derived code has
/// length `4m` and the generator of [`four_circulant`].
///
/// The leftmost printed bit of each row is r_0, the diagonal entry of the
/// circulant. A cyclic rotation or reversal of the rows yields an
/// equivalent code; the orientation is pinned so file round-trips are
/// byte-exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourCirculantSpec {
    r_a: BitWord,
    r_b: BitWord,
}

impl FourCirculantSpec {
    pub fn new(r_a: BitWord, r_b: BitWord) -> Result<Self, CodeError> {
        if r_a.len() != r_b.len() {
            return Err(CodeError::UnequalRowLengths {
                line: 0,
                left: r_a.len(),
                right: r_b.len(),
            });
        }
        if r_a.is_empty() {
            return Err(CodeError::EmptyRow);
        }
        Ok(Self { r_a, r_b })
    }

    pub fn from_bitstrings(r_a: &str, r_b: &str) -> Result<Self, CodeError> {
        Self::new(
            BitWord::from_bitstring(r_a).map_err(CodeError::Gf2)?,
            BitWord::from_bitstring(r_b).map_err(CodeError::Gf2)?,
        )
    }

    /// Circulant order; the code length is `4m`.
    pub fn m(&self) -> usize {
        self.r_a.len()
    }

    pub fn r_a(&self) -> &BitWord {
        &self.r_a
    }

    pub fn r_b(&self) -> &BitWord {
        &self.r_b
    }

    pub fn to_line(&self) -> String {
        format!("{} {}", self.r_a, self.r_b)
    }

    pub fn code(&self) -> Code {
        four_circulant(self)
    }
}

/// The m×m circulant whose first row is `first_row`; each successive row
/// is the previous one cyclically shifted one position right.
pub fn circulant(first_row: &BitWord) -> BitMatrix {
    let m = first_row.len();
    let rows: Vec<BitWord> = (0..m).map(|i| first_row.rotated_right(i)).collect();
    BitMatrix::from_rows(rows, m).expect("rotations preserve length")
}

/// Builds the length-4m code with generator `[I_2m | A B ; B^T A^T]` for
/// the circulants A, B with the given first rows. Self-duality (which
/// holds iff AA^T + BB^T = I_m) is checked separately.
pub fn four_circulant(spec: &FourCirculantSpec) -> Code {
    let m = spec.m();
    let a = circulant(&spec.r_a);
    let b = circulant(&spec.r_b);
    let at = a.transpose();
    let bt = b.transpose();
    let mut g = BitMatrix::zeros(2 * m, 4 * m);
    for i in 0..2 * m {
        g.set(i, i, true);
    }
    for i in 0..m {
        for j in 0..m {
            if a.get(i, j) {
                g.set(i, 2 * m + j, true);
            }
            if b.get(i, j) {
                g.set(i, 3 * m + j, true);
            }
            if bt.get(i, j) {
                g.set(m + i, 2 * m + j, true);
            }
            if at.get(i, j) {
                g.set(m + i, 3 * m + j, true);
            }
        }
    }
    Code::from_generator(g)
}

/// Parses the one-code-per-line format: two whitespace-separated bit
/// strings of equal length per nonempty line, `#` starting a comment
/// line, and a single circulant order across the whole file.
pub fn parse_spec_file(text: &str) -> Result<Vec<FourCirculantSpec>, CodeError> {
    let mut out = Vec::new();
    let mut order: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(CodeError::WrongFieldCount {
                line: line_no,
                found: fields.len(),
            });
        }
        for field in &fields {
            if let Some(ch) = field.chars().find(|c| *c != '0' && *c != '1') {
                return Err(CodeError::InvalidChar { line: line_no, ch });
            }
        }
        if fields[0].len() != fields[1].len() {
            return Err(CodeError::UnequalRowLengths {
                line: line_no,
                left: fields[0].len(),
                right: fields[1].len(),
            });
        }
        let m = fields[0].len();
        match order {
            None => order = Some(m),
            Some(expected) if expected != m => {
                return Err(CodeError::InconsistentOrder {
                    line: line_no,
                    expected,
                    found: m,
                });
            }
            _ => {}
        }
        let spec = FourCirculantSpec::from_bitstrings(fields[0], fields[1])?;
        out.push(spec);
    }
    Ok(out)
}

pub fn serialize_spec_file(specs: &[FourCirculantSpec]) -> String {
    let mut out = String::new();
    for spec in specs {
        out.push_str(&spec.to_line());
        out.push('\n');
    }
    out
}
