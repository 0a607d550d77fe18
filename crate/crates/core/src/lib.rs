//! Slim normal bases of cyclotomic fields and the addition-only algebraic
//! discrete Fourier transform. All arithmetic is exact.

pub mod adft;
pub mod chars;
pub mod cyclo;
pub mod error;
pub mod fadft;
pub mod leopoldt;
pub mod linalg;
pub mod matrix;
pub mod numt;
pub mod slim;
pub mod slp;

pub use adft::{
    adft_matrix_oracle, adft_matrix_slim, basis_change_matrix, kronecker, kronecker_equivalence,
    residual_matrix, AdftMatrix, BasisChangeMatrix, Provenance,
};
pub use chars::{
    characters, gauss_sum, gauss_sum_direct, gauss_sum_reduced, DirichletChar, GaussReduction,
};
pub use cyclo::{CycloElem, CycloRing, GaloisIndex};
pub use error::{Error, Result};
pub use fadft::{execute, plan, verify_factorizations, TransformPlan};
pub use leopoldt::{chi_coords, dual_coords, is_nbg, synthesize, ChiCoords, CoordValue};
pub use matrix::{Matrix, Perm};
pub use slim::{entry_rule, is_slim, slim_nbg, slim_nbg_squarefree, SlimBasisSpec};
pub use slp::Program;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
