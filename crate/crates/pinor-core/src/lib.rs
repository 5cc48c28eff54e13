//! Exact computer algebra for real Clifford algebras C(t,s), their Pin/Spin
//! double covers, discrete-symmetry structures (C, P, T, CPT, Majorana,
//! Kramers), trace/spin-sum identities, and a floating-point evaluator for
//! the Klein-bottle vacuum currents that tell Pin(1,3) and Pin(3,1) apart.

pub mod scalar;
pub mod matrix;
pub mod clifford;
pub mod cover;
pub mod conj;
pub mod qft;
pub mod klein;

pub use matrix::{ExactMatrix, MatrixError};
pub use scalar::GaussScalar;
