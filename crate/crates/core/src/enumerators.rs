//! Exact weight-enumerator algebra for self-dual codes: Gleason bases,
//! shadow enumerators, parameterized enumerator families obtained by
//! exact linear solving, and the extremality bound.
//!
//! Everything here is computed in arbitrary-precision rationals; there is
//! no floating point anywhere in this module.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::{AffineExpr, IntPolynomial, RatPolynomial};
use crate::weights::WeightDistribution;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumeratorError {
    #[error("length {0} must be even")]
    OddLength(usize),
    #[error("length {0} must be divisible by 8")]
    LengthNotMultipleOf8(usize),
    #[error("constraints are inconsistent: no coefficient vector satisfies them")]
    InconsistentConstraints,
    #[error("parameter list does not match the solution space: free coefficient indices are {free:?}, parameters name {declared:?}")]
    DegreesOfFreedomMismatch {
        free: Vec<usize>,
        declared: Vec<usize>,
    },
    #[error("distribution is not in the span of the Gleason basis")]
    NotInSpan,
    #[error("coefficient of y^{exponent} is not an integer: {value}")]
    NonIntegralCoefficient { exponent: usize, value: String },
    #[error("coefficient of y^{exponent} is negative: {value}")]
    NegativeCoefficient { exponent: usize, value: String },
    #[error("parameter {0:?} is not bound to a value")]
    UnboundParameter(String),
    #[error("unknown parameter {0:?}")]
    UnknownParameter(String),
    #[error("shadow constraints apply only to type I families")]
    ShadowOnTypeII,
}

/// Gleason basis family: type I spans self-dual enumerators, type II
/// spans doubly even self-dual enumerators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GleasonType {
    TypeI,
    TypeII,
}

impl fmt::Display for GleasonType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GleasonType::TypeI => write!(f, "I"),
            GleasonType::TypeII => write!(f, "II"),
        }
    }
}

/// Coefficients a_j expressing an enumerator in a Gleason basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GleasonCoefficients {
    pub n: usize,
    pub gleason_type: GleasonType,
    pub values: Vec<BigRational>,
}

/// The ⌊n/8⌋+1 polynomials (1+y²)^{n/2−4j} · (y²(1−y²)²)^j.
pub fn gleason_basis_i(n: usize) -> Result<Vec<IntPolynomial>, EnumeratorError> {
    if !n.is_multiple_of(2) {
        return Err(EnumeratorError::OddLength(n));
    }
    let g1 = IntPolynomial::from_terms([(0, 1), (2, 1)]);
    let g2 = IntPolynomial::from_terms([(2, 1), (4, -2), (6, 1)]);
    Ok((0..=n / 8)
        .map(|j| &g1.pow(n / 2 - 4 * j) * &g2.pow(j))
        .collect())
}

/// The ⌊n/24⌋+1 polynomials (1+14y⁴+y⁸)^{n/8−3j} · (y⁴(1−y⁴)⁴)^j.
pub fn gleason_basis_ii(n: usize) -> Result<Vec<IntPolynomial>, EnumeratorError> {
    if !n.is_multiple_of(8) {
        return Err(EnumeratorError::LengthNotMultipleOf8(n));
    }
    let g1 = IntPolynomial::from_terms([(0, 1), (4, 14), (8, 1)]);
    let g2 = IntPolynomial::from_terms([(4, 1), (8, -4), (12, 6), (16, -4), (20, 1)]);
    Ok((0..=n / 24)
        .map(|j| &g1.pow(n / 8 - 3 * j) * &g2.pow(j))
        .collect())
}

fn basis(n: usize, t: GleasonType) -> Result<Vec<IntPolynomial>, EnumeratorError> {
    match t {
        GleasonType::TypeI => gleason_basis_i(n),
        GleasonType::TypeII => gleason_basis_ii(n),
    }
}

/// Coefficient of a_j at y^i in the shadow transform
/// W_S = Σ_j (−1)^j a_j 2^{n/2−6j} y^{n/2−4j} (1−y⁴)^{2j}.
fn shadow_column(n: usize, j: usize, i: usize) -> BigRational {
    let base = n / 2 - 4 * j; // j ≤ n/8 keeps this nonnegative
    if i < base || !(i - base).is_multiple_of(4) {
        return BigRational::zero();
    }
    let t = (i - base) / 4;
    if t > 2 * j {
        return BigRational::zero();
    }
    let mut c = BigRational::from_integer(binomial(BigInt::from(2 * j), BigInt::from(t)));
    if (j + t) % 2 == 1 {
        c = -c;
    }
    let e = n as i64 / 2 - 6 * j as i64;
    c * power_of_two(e)
}

fn power_of_two(e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from_integer(BigInt::one() << e as usize)
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << (-e) as usize)
    }
}

/// Applies the shadow transform to type I coefficients. The intermediate
/// arithmetic is rational (2^{n/2−6j} can be a proper fraction); the
/// result must come out integral, as it does for coefficients fitted from
/// an actual code.
pub fn shadow_enumerator(
    n: usize,
    coeffs: &GleasonCoefficients,
) -> Result<IntPolynomial, EnumeratorError> {
    let mut out = RatPolynomial::zero();
    for (j, a) in coeffs.values.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        // shadow exponents run n/2−4j, n/2−4j+4, …; n/2 may be odd
        for i in 0..=n {
            let col = shadow_column(n, j, i);
            if !col.is_zero() {
                out.add_term(i, col * a);
            }
        }
    }
    out.to_int().ok_or_else(|| {
        let (e, v) = out
            .terms()
            .find(|(_, c)| !c.is_integer())
            .map(|(e, c)| (e, c.to_string()))
            .expect("non-integral term exists");
        EnumeratorError::NonIntegralCoefficient {
            exponent: e,
            value: v,
        }
    })
}

/// A pinned value for a code coefficient A_i or a shadow coefficient B_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pin {
    Code(usize, BigInt),
    Shadow(usize, BigInt),
}

/// One named degree of freedom of a family: the free Gleason coefficient
/// at `free_index` is substituted as `scale·p + offset` for parameter p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamDef {
    pub name: String,
    pub free_index: usize,
    pub scale: BigRational,
    pub offset: BigRational,
}

impl ParamDef {
    pub fn new(name: &str, free_index: usize, scale: BigRational, offset: BigRational) -> Self {
        Self {
            name: name.to_string(),
            free_index,
            scale,
            offset,
        }
    }
}

/// Everything needed to solve for a parameterized enumerator family.
#[derive(Debug, Clone)]
pub struct FamilyRequest {
    pub n: usize,
    pub gleason_type: GleasonType,
    pub pins: Vec<Pin>,
    pub params: Vec<ParamDef>,
}

/// Polynomial whose coefficients are affine exact-rational expressions in
/// the family parameters.
#[derive(Debug, Clone)]
pub struct EnumeratorFamily {
    pub n: usize,
    pub params: Vec<String>,
    pub coefficients: BTreeMap<usize, AffineExpr>,
}

impl EnumeratorFamily {
    pub fn coefficient(&self, exponent: usize) -> AffineExpr {
        self.coefficients
            .get(&exponent)
            .cloned()
            .unwrap_or_else(|| AffineExpr::constant(BigRational::zero(), self.params.len()))
    }

    /// One line per nonzero coefficient: `y^i: <expr>`.
    pub fn render_lines(&self) -> Vec<String> {
        self.coefficients
            .iter()
            .filter(|(_, e)| !e.is_zero())
            .map(|(i, e)| format!("y^{i}: {}", e.render(&self.params)))
            .collect()
    }
}

/// A solved family: the code-side enumerator and, for type I, the shadow
/// enumerator over the same parameters.
#[derive(Debug, Clone)]
pub struct SolvedFamily {
    pub code: EnumeratorFamily,
    pub shadow: Option<EnumeratorFamily>,
}

/// Solves the pinned linear system over the Gleason coefficients by exact
/// elimination (pivots leftmost-first over a_0, a_1, …) and expresses
/// every A_i — and each B_i for type I — as an affine expression in the
/// declared parameters.
pub fn solve_family(request: &FamilyRequest) -> Result<SolvedFamily, EnumeratorError> {
    let n = request.n;
    let basis = basis(n, request.gleason_type)?;
    let unknowns = basis.len();
    if request.gleason_type == GleasonType::TypeII
        && request.pins.iter().any(|p| matches!(p, Pin::Shadow(..)))
    {
        return Err(EnumeratorError::ShadowOnTypeII);
    }

    // constraint rows over (a_0 … a_J | rhs)
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(request.pins.len());
    for pin in &request.pins {
        let mut row = Vec::with_capacity(unknowns + 1);
        match pin {
            Pin::Code(i, v) => {
                for b in &basis {
                    row.push(BigRational::from_integer(b.coeff(*i)));
                }
                row.push(BigRational::from_integer(v.clone()));
            }
            Pin::Shadow(i, v) => {
                for j in 0..unknowns {
                    row.push(shadow_column(n, j, *i));
                }
                row.push(BigRational::from_integer(v.clone()));
            }
        }
        rows.push(row);
    }

    let (pivots, rank) = rref_rational(&mut rows, unknowns);
    if rows[rank..].iter().any(|row| !row[unknowns].is_zero()) {
        return Err(EnumeratorError::InconsistentConstraints);
    }

    let free: Vec<usize> = (0..unknowns).filter(|c| !pivots.contains(c)).collect();
    let declared: Vec<usize> = request.params.iter().map(|p| p.free_index).collect();
    if free != declared {
        return Err(EnumeratorError::DegreesOfFreedomMismatch { free, declared });
    }

    // a_j as affine expressions in the parameters:
    //   free index f_t: a_{f_t} = offset_t + scale_t · p_t
    //   pivot index:    a_p = rhs − Σ_t R[p][f_t] · a_{f_t}
    let arity = request.params.len();
    let mut gleason_exprs: Vec<AffineExpr> = Vec::with_capacity(unknowns);
    for j in 0..unknowns {
        if let Some(t) = declared.iter().position(|&f| f == j) {
            let mut expr = AffineExpr::constant(request.params[t].offset.clone(), arity);
            expr.coeffs[t] = request.params[t].scale.clone();
            gleason_exprs.push(expr);
        } else {
            gleason_exprs.push(AffineExpr::constant(BigRational::zero(), arity));
        }
    }
    for (r, &p) in pivots.iter().enumerate() {
        let mut expr = AffineExpr::constant(rows[r][unknowns].clone(), arity);
        for (t, &f) in declared.iter().enumerate() {
            let coupling = &rows[r][f];
            if coupling.is_zero() {
                continue;
            }
            // a_f = offset + scale·p contributes −coupling·a_f
            expr.constant -= coupling * &request.params[t].offset;
            expr.coeffs[t] -= coupling * &request.params[t].scale;
        }
        gleason_exprs[p] = expr;
    }

    let names: Vec<String> = request.params.iter().map(|p| p.name.clone()).collect();
    let assemble = |column: &dyn Fn(usize, usize) -> BigRational| -> EnumeratorFamily {
        let mut coefficients = BTreeMap::new();
        for i in 0..=n {
            let mut expr = AffineExpr::constant(BigRational::zero(), arity);
            for (j, a_expr) in gleason_exprs.iter().enumerate() {
                let c = column(j, i);
                if c.is_zero() {
                    continue;
                }
                expr.constant += &c * &a_expr.constant;
                for t in 0..arity {
                    let delta = &c * &a_expr.coeffs[t];
                    expr.coeffs[t] += delta;
                }
            }
            if !expr.is_zero() {
                coefficients.insert(i, expr);
            }
        }
        EnumeratorFamily {
            n,
            params: names.clone(),
            coefficients,
        }
    };

    let code = assemble(&|j, i| BigRational::from_integer(basis[j].coeff(i)));
    let shadow = match request.gleason_type {
        GleasonType::TypeI => Some(assemble(&|j, i| shadow_column(n, j, i))),
        GleasonType::TypeII => None,
    };
    Ok(SolvedFamily { code, shadow })
}

/// Evaluates a family at bound parameter values; every coefficient must
/// come out a nonnegative integer.
pub fn substitute(
    family: &EnumeratorFamily,
    values: &BTreeMap<String, BigRational>,
) -> Result<WeightDistribution, EnumeratorError> {
    for name in values.keys() {
        if !family.params.contains(name) {
            return Err(EnumeratorError::UnknownParameter(name.clone()));
        }
    }
    let bound: Vec<BigRational> = family
        .params
        .iter()
        .map(|p| {
            values
                .get(p)
                .cloned()
                .ok_or_else(|| EnumeratorError::UnboundParameter(p.clone()))
        })
        .collect::<Result<_, _>>()?;
    let mut dist = WeightDistribution::new(family.n);
    for (&i, expr) in &family.coefficients {
        let v = expr.eval(&bound);
        if v.is_zero() {
            continue;
        }
        if !v.is_integer() {
            return Err(EnumeratorError::NonIntegralCoefficient {
                exponent: i,
                value: v.to_string(),
            });
        }
        if v.is_negative() {
            return Err(EnumeratorError::NegativeCoefficient {
                exponent: i,
                value: v.to_string(),
            });
        }
        dist.add(i, v.to_integer().to_biguint().expect("nonnegative"));
    }
    Ok(dist)
}

/// Exact in-place elimination over the first `unknowns` columns of an
/// augmented system (rhs in column `unknowns`), pivots leftmost-first.
/// Returns the pivot columns and the rank.
fn rref_rational(rows: &mut [Vec<BigRational>], unknowns: usize) -> (Vec<usize>, usize) {
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..unknowns {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].clone();
        for x in rows[rank].iter_mut() {
            *x /= &inv;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    (pivots, rank)
}

/// Inverts the Gleason expansion: the unique a_j with Σ a_j·basis_j equal
/// to the distribution, solved exactly; fails if the distribution is not
/// in the span.
pub fn fit_coefficients(
    dist: &WeightDistribution,
    gleason_type: GleasonType,
) -> Result<GleasonCoefficients, EnumeratorError> {
    let n = dist.n();
    let basis = basis(n, gleason_type)?;
    let unknowns = basis.len();
    // one equation per exponent 0..=n
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut row: Vec<BigRational> = basis
            .iter()
            .map(|b| BigRational::from_integer(b.coeff(i)))
            .collect();
        row.push(BigRational::from_integer(BigInt::from(dist.count(i))));
        rows.push(row);
    }
    let (pivots, rank) = rref_rational(&mut rows, unknowns);
    if rank < unknowns {
        // the basis is linearly independent, so this cannot happen for a
        // genuine distribution; treat as not-in-span for robustness
        return Err(EnumeratorError::NotInSpan);
    }
    if rows[rank..].iter().any(|row| !row[unknowns].is_zero()) {
        return Err(EnumeratorError::NotInSpan);
    }
    let mut values = vec![BigRational::zero(); unknowns];
    for (r, &p) in pivots.iter().enumerate() {
        values[p] = rows[r][unknowns].clone();
    }
    Ok(GleasonCoefficients {
        n,
        gleason_type,
        values,
    })
}

/// The upper bound 4⌊n/24⌋ + 4 on the minimum weight of a doubly even
/// self-dual code of length n.
pub fn mallows_sloane(n: usize) -> Result<usize, EnumeratorError> {
    if !n.is_multiple_of(8) {
        return Err(EnumeratorError::LengthNotMultipleOf8(n));
    }
    Ok(4 * (n / 24) + 4)
}

/// A doubly even self-dual code is extremal iff it meets the bound.
pub fn is_extremal(n: usize, d: usize) -> Result<bool, EnumeratorError> {
    Ok(d == mallows_sloane(n)?)
}

/// The five-parameter family for singly even self-dual codes of length
/// 112 and minimum weight 18, together with its shadow.
///
/// Pins: A_0 = 1, A_2 = … = A_16 = 0, B_0 = 0. The five remaining free
/// Gleason coefficients a_9…a_13 are rescaled as (a, 16b, 1024c, 65536d,
/// −4194304e); those scales make the parameters land on the shadow
/// coefficients (B_4 = e, B_8 = d − 26e, …) and the count offset
/// (A_18 = 99176 + a), reproducing the published presentation.
pub fn singly_even_112_family() -> SolvedFamily {
    let pins = std::iter::once(Pin::Code(0, BigInt::one()))
        .chain((1..=8).map(|t| Pin::Code(2 * t, BigInt::zero())))
        .chain(std::iter::once(Pin::Shadow(0, BigInt::zero())))
        .collect();
    let one = BigRational::one;
    let zero = BigRational::zero;
    let scale = |v: i64| BigRational::from_integer(BigInt::from(v));
    let request = FamilyRequest {
        n: 112,
        gleason_type: GleasonType::TypeI,
        pins,
        params: vec![
            ParamDef::new("a", 9, one(), zero()),
            ParamDef::new("b", 10, scale(16), zero()),
            ParamDef::new("c", 11, scale(1024), zero()),
            ParamDef::new("d", 12, scale(65536), zero()),
            ParamDef::new("e", 13, scale(-4194304), zero()),
        ],
    };
    solve_family(&request).expect("the pinned length-112 system is consistent")
}

/// Type II family for doubly even self-dual codes of length n and minimum
/// weight ≥ d: pins A_0 = 1 and A_4 = … = A_{d−4} = 0; the remaining
/// degrees of freedom are named a, b, … and anchored at the successive
/// exponents d, d+4, …, normalized so the first parameter is the literal
/// count (a = A_d) and each later one enters its anchor with coefficient 1.
pub fn doubly_even_family(n: usize, d: usize) -> Result<SolvedFamily, EnumeratorError> {
    let pins: Vec<Pin> = std::iter::once(Pin::Code(0, BigInt::one()))
        .chain((4..d).step_by(4).map(|i| Pin::Code(i, BigInt::zero())))
        .collect();
    // raw solve to locate free indices and anchor offsets
    let raw = FamilyRequest {
        n,
        gleason_type: GleasonType::TypeII,
        pins: pins.clone(),
        params: Vec::new(),
    };
    let free = match solve_family(&raw) {
        Ok(_) => Vec::new(),
        Err(EnumeratorError::DegreesOfFreedomMismatch { free, .. }) => free,
        Err(e) => return Err(e),
    };
    let mut params: Vec<ParamDef> = free
        .iter()
        .enumerate()
        .map(|(t, &f)| {
            let name = char::from(b'a' + t as u8).to_string();
            ParamDef::new(&name, f, BigRational::one(), BigRational::zero())
        })
        .collect();
    if params.is_empty() {
        return solve_family(&FamilyRequest {
            n,
            gleason_type: GleasonType::TypeII,
            pins,
            params,
        });
    }
    let unanchored = solve_family(&FamilyRequest {
        n,
        gleason_type: GleasonType::TypeII,
        pins: pins.clone(),
        params: params.clone(),
    })?;
    // re-anchor each parameter at the successive exponents d, d+4, …:
    // parameter t becomes the literal count A_{d+4t}
    for (t, def) in params.iter_mut().enumerate() {
        let anchor = d + 4 * t;
        let expr = unanchored.code.coefficient(anchor);
        let kappa = expr.coeffs[t].clone();
        debug_assert!(!kappa.is_zero(), "anchor must see its parameter");
        debug_assert!(
            expr.coeffs[t + 1..].iter().all(Zero::is_zero),
            "later parameters must not reach earlier anchors"
        );
        // A_anchor = const + κ·p_raw  ⇒  p_raw = (A_anchor − const)/κ
        def.scale = kappa.recip();
        def.offset = -expr.constant / &kappa;
    }
    solve_family(&FamilyRequest {
        n,
        gleason_type: GleasonType::TypeII,
        pins,
        params,
    })
}
