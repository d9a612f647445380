//! Workbench for binary self-dual codes.
//!
//! The crate builds and checks self-dual codes over GF(2), with a focus on
//! the four-circulant family:
//!
//! - [`gf2`]: bit-packed vectors/matrices and exact GF(2) linear algebra;
//! - [`codes`]: code construction, self-duality and parity classification,
//!   and the one-line-per-code spec file format;
//! - [`weights`]: weight distributions, minimum-weight certificates
//!   (information-set enumeration with provable lower bounds), low-weight
//!   witness search, and the Gram invariant that separates inequivalent
//!   codes by their minimum-weight words;
//! - [`enumerators`]: exact rational weight-enumerator algebra — Gleason
//!   bases, shadow enumerators, parameterized enumerator families, and the
//!   extremality bound;
//! - [`shadow`]: even subcode, shadow coset decomposition, doubly even
//!   neighbors, and the `<(C ∩ <x>^⊥), x>` neighbor construction;
//! - [`search`]: seeded, reproducible randomized search for four-circulant
//!   codes with a target minimum weight;
//! - [`catalog`]: vendored generator data used by the test suite and CLI.
//!
//! Everything numeric in the enumerator algebra is exact (big rationals);
//! all randomized procedures are deterministic given their seed.

pub mod catalog;
pub mod codes;
pub mod enumerators;
pub mod gf2;
pub mod poly;
pub mod search;
pub mod shadow;
pub mod weights;
