//! Exact computer algebra for the quantized coordinate algebras O(SL_q(N)) and
//! O(SU_q(N)): normal forms under the FRT relations with `D_q = 1`, the Hopf
//! *-structure, the K-bigrading and the Haar state.
//!
//! The crate is `no_std` and needs only `alloc`. File formats, the expression
//! parser and the command-line front end live in the `qhaar` crate.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod algebra;
pub mod grading;
pub mod haar;
pub mod hopf;
pub mod qcoeff;

pub use algebra::{AlgElement, Algebra, Gen, Monomial};
pub use hopf::{Tensor3, TensorElement};
pub use grading::{bidegree, decompose, project_00, tensor_project_right, BiDegree};
pub use error::{Error, Result};
pub use haar::{Haar, HaarCache, HaarOptions};
pub use qcoeff::{qbinom, qint, LaurentPoly, QScalar, Rational};
