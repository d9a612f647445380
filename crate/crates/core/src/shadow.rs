//! Even subcode, shadow coset decomposition, doubly even neighbors, and
//! the `<(C ∩ <x>^⊥), x>` neighbor construction.
//!
//! For a singly even self-dual code C, the subcode C0 of codewords with
//! weight ≡ 0 (mod 4) has codimension 1, and C0^⊥ splits into cosets
//! C0 ∪ C1 ∪ C2 ∪ C3 with C = C0 ∪ C2 and shadow S = C1 ∪ C3. When the
//! length is divisible by 8, C0 ∪ C1 and C0 ∪ C3 are the two doubly even
//! self-dual neighbors of C.

use thiserror::Error;

use crate::codes::{Code, ParityClass};
use crate::gf2::{BitMatrix, BitWord, Gf2Error};
use crate::weights::{WeightDistribution, WeightsError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShadowError {
    #[error("code is not self-dual")]
    NotSelfDual,
    #[error("code is already doubly even: the even subcode is the code itself and there is no shadow split")]
    AlreadyDoublyEven,
    #[error("length {0} is not divisible by 8, so the neighbors are not self-dual")]
    LengthNotMultipleOf8(usize),
    #[error("vector has odd weight, so <(C ∩ <x>^⊥), x> cannot be self-dual")]
    OddWeightVector,
    #[error(transparent)]
    Gf2(#[from] Gf2Error),
    #[error(transparent)]
    Weights(#[from] WeightsError),
}

/// The even subcode C0 together with coset representatives: t2 for the
/// odd half of C, t1 and t3 for the two shadow cosets.
#[derive(Debug, Clone)]
pub struct ShadowDecomposition {
    pub even_subcode: Code,
    pub t1: BitWord,
    pub t2: BitWord,
    pub t3: BitWord,
}

/// The subcode of codewords with weight ≡ 0 (mod 4); codimension 1 in a
/// singly even self-dual code.
pub fn even_subcode(code: &Code) -> Result<Code, ShadowError> {
    match code.parity_class() {
        ParityClass::NotSelfDual => return Err(ShadowError::NotSelfDual),
        ParityClass::DoublyEven => return Err(ShadowError::AlreadyDoublyEven),
        ParityClass::SinglyEven => {}
    }
    // wt mod 4 is a homomorphism C -> {0,2} on a self-orthogonal code, so
    // the kernel is generated by the even rows plus odd-row differences
    let rows = code.standard_form().matrix.rows();
    let (odd, even): (Vec<&BitWord>, Vec<&BitWord>) =
        rows.iter().partition(|r| r.weight() % 4 != 0);
    let mut gens: Vec<BitWord> = even.into_iter().cloned().collect();
    let first_odd = odd[0];
    for other in &odd[1..] {
        gens.push(first_odd.xor(other));
    }
    let g = BitMatrix::from_rows(gens, code.n())?;
    let c0 = Code::from_generator(g);
    debug_assert_eq!(c0.k() + 1, code.k());
    Ok(c0)
}

/// Shadow coset decomposition of a singly even self-dual code.
///
/// Representatives are canonical (reduced modulo C0). Between the two
/// shadow cosets, t1 is the one whose representative weight is
/// ≡ n/2 (mod 4) if the two candidates differ mod 4 with 8 | n; otherwise
/// (the usual case, since every shadow weight is ≡ n/2 mod 4) the
/// lexicographically smaller representative.
pub fn shadow_decompose(code: &Code) -> Result<ShadowDecomposition, ShadowError> {
    let c0 = even_subcode(code)?;
    let c0_std = c0.standard_form();
    let dual = c0.generator().dual();

    let odd_row = code
        .standard_form()
        .matrix
        .rows()
        .iter()
        .find(|r| r.weight() % 4 != 0)
        .expect("singly even code has an odd-class generator row");
    let t2 = c0_std.reduce(odd_row);

    let raw_t1 = dual
        .rows()
        .iter()
        .find(|row| !code.contains(row).expect("same length"))
        .expect("C0-perp strictly contains C");
    let cand_a = c0_std.reduce(raw_t1);
    let cand_b = c0_std.reduce(&raw_t1.xor(&t2));

    let n = code.n();
    let (t1, t3) = if n.is_multiple_of(8) && cand_a.weight() % 4 != cand_b.weight() % 4 {
        if cand_a.weight() % 4 == (n / 2) % 4 {
            (cand_a, cand_b)
        } else {
            (cand_b, cand_a)
        }
    } else if cand_a <= cand_b {
        (cand_a, cand_b)
    } else {
        (cand_b, cand_a)
    };

    Ok(ShadowDecomposition {
        even_subcode: c0,
        t1,
        t2,
        t3,
    })
}

impl ShadowDecomposition {
    /// Exact shadow weight distribution by enumerating the two shadow
    /// cosets of C0; requires dim C0 ≤ cap.
    pub fn shadow_distribution(&self, cap: usize) -> Result<WeightDistribution, ShadowError> {
        let k0 = self.even_subcode.k();
        if k0 > cap {
            return Err(ShadowError::Weights(WeightsError::DimensionOverCap {
                k: k0,
                cap,
            }));
        }
        let n = self.even_subcode.n();
        let rows = self.even_subcode.standard_form().matrix.rows();
        let mut dist = WeightDistribution::new(n);
        for rep in [&self.t1, &self.t3] {
            let counts = crate::weights::coset_weight_counts(rows, rep);
            for (w, c) in counts.into_iter().enumerate() {
                dist.add(w, c.into());
            }
        }
        Ok(dist)
    }
}

/// Convenience wrapper: decomposition plus enumeration.
pub fn shadow_weight_distribution(
    code: &Code,
    cap: usize,
) -> Result<WeightDistribution, ShadowError> {
    shadow_decompose(code)?.shadow_distribution(cap)
}

/// The two doubly even self-dual neighbors C0 ∪ C1 and C0 ∪ C3 of a
/// singly even self-dual code of length divisible by 8, returned with the
/// lexicographically smaller reduced generator first.
pub fn doubly_even_neighbors(code: &Code) -> Result<(Code, Code), ShadowError> {
    if !code.n().is_multiple_of(8) {
        return Err(ShadowError::LengthNotMultipleOf8(code.n()));
    }
    let decomp = shadow_decompose(code)?;
    let extend = |t: &BitWord| -> Code {
        let mut rows = decomp.even_subcode.standard_form().matrix.rows().to_vec();
        rows.push(t.clone());
        Code::from_generator(
            BitMatrix::from_rows(rows, code.n()).expect("representative has code length"),
        )
    };
    let n1 = extend(&decomp.t1);
    let n3 = extend(&decomp.t3);
    let ordered = n1
        .standard_form()
        .matrix
        .lex_cmp(&n3.standard_form().matrix)
        != std::cmp::Ordering::Greater;
    Ok(if ordered { (n1, n3) } else { (n3, n1) })
}

/// Result of the `<(C ∩ <x>^⊥), x>` construction; `degenerate` flags
/// x ∈ C, in which case the construction returns C itself.
#[derive(Debug, Clone)]
pub struct NeighborResult {
    pub code: Code,
    pub degenerate: bool,
}

/// Builds `<(C ∩ <x>^⊥), x>`: the codewords of C orthogonal to x,
/// extended by x. For self-dual C with even-weight x ∉ C the result is a
/// self-dual neighbor of C.
pub fn neighbor_via_vector(code: &Code, x: &BitWord) -> Result<NeighborResult, ShadowError> {
    if x.len() != code.n() {
        return Err(ShadowError::Gf2(Gf2Error::LengthMismatch {
            left: code.n(),
            right: x.len(),
        }));
    }
    if !x.weight().is_multiple_of(2) {
        return Err(ShadowError::OddWeightVector);
    }
    let rows = code.standard_form().matrix.rows();
    let (odd, even): (Vec<&BitWord>, Vec<&BitWord>) =
        rows.iter().partition(|r| r.inner_product_unchecked(x) == 1);
    if odd.is_empty() {
        // x orthogonal to all of C; for self-dual C that means x ∈ C
        return Ok(NeighborResult {
            code: code.clone(),
            degenerate: true,
        });
    }
    let mut gens: Vec<BitWord> = even.into_iter().cloned().collect();
    let first_odd = odd[0];
    for other in &odd[1..] {
        gens.push(first_odd.xor(other));
    }
    gens.push(x.clone());
    let g = BitMatrix::from_rows(gens, code.n())?;
    Ok(NeighborResult {
        code: Code::from_generator(g),
        degenerate: false,
    })
}

/// Neighbors: self-dual codes of the same length meeting in a subcode of
/// dimension n/2 − 1.
pub fn is_neighbor(a: &Code, b: &Code) -> Result<bool, ShadowError> {
    if a.n() != b.n() {
        return Err(ShadowError::Gf2(Gf2Error::LengthMismatch {
            left: a.n(),
            right: b.n(),
        }));
    }
    let sum_dim = a
        .generator()
        .stack(b.generator())
        .map_err(ShadowError::Gf2)?
        .rank();
    let intersection_dim = a.k() + b.k() - sum_dim;
    Ok(intersection_dim == a.n() / 2 - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::codes::FourCirculantSpec;
    use crate::weights::weight_distribution_bruteforce;
    use num_bigint::BigUint;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn repetition2() -> Code {
        Code::from_generator(
            BitMatrix::from_rows(vec![BitWord::from_bitstring("11").unwrap()], 2).unwrap(),
        )
    }

    fn i4i4() -> Code {
        FourCirculantSpec::from_bitstrings("10", "00")
            .unwrap()
            .code()
    }

    #[test]
    fn even_subcode_of_repetition_is_zero() {
        let c0 = even_subcode(&repetition2()).unwrap();
        assert_eq!(c0.k(), 0);
    }

    #[test]
    fn even_subcode_of_i4i4() {
        let c0 = even_subcode(&i4i4()).unwrap();
        assert_eq!(c0.k(), 3);
        let dist = weight_distribution_bruteforce(&c0, 28).unwrap();
        assert!(dist.counts().keys().all(|w| w % 4 == 0));
        assert_eq!(dist.total(), BigUint::from(8u8));
    }

    #[test]
    fn even_subcode_of_c112_has_dimension_55() {
        let c0 = even_subcode(&catalog::c112().code()).unwrap();
        assert_eq!(c0.k(), 55);
        assert!(c0.generator().rows().iter().all(|r| r.weight() % 4 == 0));
    }

    #[test]
    fn even_subcode_rejects_doubly_even_and_non_self_dual() {
        let e8 = FourCirculantSpec::from_bitstrings("01", "11")
            .unwrap()
            .code();
        assert!(matches!(
            even_subcode(&e8),
            Err(ShadowError::AlreadyDoublyEven)
        ));
        let bad = Code::from_generator(
            BitMatrix::from_rows(vec![BitWord::from_bitstring("10").unwrap()], 2).unwrap(),
        );
        assert!(matches!(even_subcode(&bad), Err(ShadowError::NotSelfDual)));
    }

    #[test]
    fn shadow_of_repetition() {
        let d = shadow_weight_distribution(&repetition2(), 28).unwrap();
        assert_eq!(d.count(1), BigUint::from(2u8));
        assert_eq!(d.total(), BigUint::from(2u8));
    }

    #[test]
    fn shadow_of_i4i4() {
        let code = i4i4();
        let decomp = shadow_decompose(&code).unwrap();
        let d = decomp.shadow_distribution(28).unwrap();
        // brute-forced: all 16 shadow vectors have weight 4
        assert_eq!(d.count(4), BigUint::from(16u8));
        assert_eq!(d.total(), BigUint::from(16u8));
        // representatives fall outside C, t2 inside
        assert!(!code.contains(&decomp.t1).unwrap());
        assert!(!code.contains(&decomp.t3).unwrap());
        assert!(code.contains(&decomp.t2).unwrap());
        assert_eq!(decomp.t2.weight() % 4, 2);
    }

    #[test]
    fn shadow_partition_properties_small_codes() {
        // |S| = |C|, S ∩ C = ∅, and shadow weights ≡ n/2 (mod 4) when 8|n
        let mut rng = StdRng::seed_from_u64(41);
        let mut tested = 0;
        while tested < 15 {
            let m = rng.gen_range(2..=6);
            let spec = crate::search::random_spec(m, &mut rng);
            if crate::search::screen(&spec, false).is_err() {
                continue;
            }
            let code = spec.code();
            if code.parity_class() != ParityClass::SinglyEven {
                continue;
            }
            let decomp = shadow_decompose(&code).unwrap();
            let shadow = decomp.shadow_distribution(28).unwrap();
            assert_eq!(shadow.total(), BigUint::from(1u8) << code.k());
            // disjointness: every shadow representative coset misses C
            assert!(!code.contains(&decomp.t1).unwrap());
            assert!(!code.contains(&decomp.t3).unwrap());
            if code.n() % 8 == 0 {
                let residue = (code.n() / 2) % 4;
                assert!(shadow.counts().keys().all(|w| w % 4 == residue));
            }
            tested += 1;
        }
    }

    #[test]
    fn doubly_even_neighbors_of_i4i4_are_e8_like() {
        let (n1, n3) = doubly_even_neighbors(&i4i4()).unwrap();
        for nb in [&n1, &n3] {
            assert!(nb.is_self_dual());
            assert_eq!(nb.parity_class(), ParityClass::DoublyEven);
            let d = weight_distribution_bruteforce(nb, 28).unwrap();
            assert_eq!(d.count(4), BigUint::from(14u8));
            assert!(is_neighbor(&i4i4(), nb).unwrap());
        }
        assert!(is_neighbor(&n1, &n3).unwrap());
        assert!(!n1.codewords_eq(&n3));
        // pinned deterministic order
        assert!(
            n1.standard_form()
                .matrix
                .lex_cmp(&n3.standard_form().matrix)
                != std::cmp::Ordering::Greater
        );
    }

    #[test]
    fn neighbors_rejects_length_not_multiple_of_8() {
        // singly even self-dual code of length 4: [I_1|I_1] pattern via m=1
        let spec = FourCirculantSpec::from_bitstrings("1", "0").unwrap();
        let code = spec.code();
        assert!(code.is_self_dual());
        assert!(matches!(
            doubly_even_neighbors(&code),
            Err(ShadowError::LengthNotMultipleOf8(4))
        ));
    }

    #[test]
    fn neighbor_via_vector_builds_d112() {
        let c112 = catalog::c112().code();
        let x = catalog::d112_vector();
        let result = neighbor_via_vector(&c112, &x).unwrap();
        assert!(!result.degenerate);
        let d112 = result.code;
        assert!(d112.is_self_dual());
        assert_eq!(d112.parity_class(), ParityClass::DoublyEven);
        assert_eq!(c112.intersection(&d112).unwrap().k(), 55);
        assert!(is_neighbor(&c112, &d112).unwrap());
    }

    #[test]
    fn neighbor_via_vector_degenerate_and_guards() {
        let code = repetition2();
        let inside = BitWord::from_bitstring("11").unwrap();
        let result = neighbor_via_vector(&code, &inside).unwrap();
        assert!(result.degenerate);
        assert!(result.code.codewords_eq(&code));

        let odd = BitWord::from_bitstring("10").unwrap();
        assert!(matches!(
            neighbor_via_vector(&code, &odd),
            Err(ShadowError::OddWeightVector)
        ));
    }

    #[test]
    fn neighbor_via_vector_self_dual_on_random_inputs() {
        let mut rng = StdRng::seed_from_u64(53);
        let mut tested = 0;
        while tested < 15 {
            let m = rng.gen_range(2..=4);
            let spec = crate::search::random_spec(m, &mut rng);
            if crate::search::screen(&spec, false).is_err() {
                continue;
            }
            let code = spec.code();
            let n = code.n();
            // random even-weight vector
            let mut x = BitWord::zeros(n);
            for j in 0..n {
                x.set(j, rng.gen_bool(0.5));
            }
            if x.weight() % 2 == 1 {
                let flip = rng.gen_range(0..n);
                x.set(flip, !x.get(flip));
            }
            let result = neighbor_via_vector(&code, &x).unwrap();
            assert!(result.code.is_self_dual());
            if result.degenerate {
                assert!(code.contains(&x).unwrap());
                assert!(result.code.codewords_eq(&code));
            } else {
                assert!(!code.contains(&x).unwrap());
                assert!(result.code.contains(&x).unwrap());
                assert!(is_neighbor(&code, &result.code).unwrap());
            }
            tested += 1;
        }
    }

    #[test]
    fn is_neighbor_of_self_is_false() {
        let e8 = FourCirculantSpec::from_bitstrings("01", "11")
            .unwrap()
            .code();
        assert!(!is_neighbor(&e8, &e8).unwrap());
        let short = repetition2();
        assert!(is_neighbor(&e8, &short).is_err());
    }
}
