//! Scarf complexes, staircase partitions and the differentiated resolution
//! form `d_σφ` of Artinian monomial ideals, in exact arithmetic.
//!
//! The usual flow: parse an ideal, build its [`Staircase`] and
//! [`ScarfComplex`], turn it into a [`Resolution`], and compare `d_σφ` with
//! the signed partition volumes via [`Resolution::verify`].
//!
//! ```
//! use scarf_core::{parse_ideal, Permutation, Resolution};
//!
//! let m = parse_ideal("x1^3").unwrap();
//! let report = Resolution::scarf(&m).unwrap().verify(&Permutation::identity(1)).unwrap();
//! assert!(report.theorem_holds);
//! assert_eq!(report.pairing, 3.into());
//! ```

pub mod complex;
pub mod derivative;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod matrix;
pub mod monomial;
pub mod oracles;
pub mod parse;
pub mod perm;
pub mod poly;
pub mod random;
pub mod render;
pub mod scarf;
pub mod staircase;
pub mod suite;

pub use complex::{scarf_to_complex, Cell, LabeledComplex};
pub use derivative::{
    d_sigma_phi, derivative_matrix, full_factorization_check, kivas_survivor_check,
    pairing_multiplicity, theorem_main_predicted, verify_theorem_main, DerivativeForm, FaceReport,
    FactorizationReport, FullReport, IntPolynomial, PairingResult, Resolution, SigmaReport,
    SurvivorReport,
};
pub use error::{Error, Result};
pub use matrix::{
    check_complex, check_generic_exactness, check_minimal, differentials, ExactnessReport,
    MonoEntry, SparseMonoMatrix,
};
pub use monomial::{format_monomial, ExponentVector, GenericityWitness, MonomialIdeal};
pub use parse::{parse_ideal, parse_ideal_json};
pub use perm::Permutation;
pub use poly::Polynomial;
pub use render::render_svg;
pub use scarf::{build_scarf, ScarfComplex, ScarfFace};
pub use staircase::{
    colength, lex_order, outer_corners, partition_bruteforce, partition_cuboid, CellSet, Cuboid,
    Partition, PartitionPart, Staircase,
};
pub use suite::{run_suite, Check, SuiteReport};

/// Exact rationals, the field used for rank computations.
pub type Rational = num_rational::BigRational;
