//! Exact Casimir invariants of the Lie superalgebras gl(m/n) and of their
//! stable limit gl(m/∞) on highest-weight modules.
//!
//! Everything is computed over the rationals. Closed-form eigenvalues live in
//! [`spectra`]; the brute-force route realizes modules as cyclic submodules of
//! tensor powers of the vector module ([`modules`]) and evaluates supertraces
//! of the characteristic matrix on them ([`invariants`]). [`identities`]
//! checks the invariance, stabilization and characteristic polynomial
//! identities on explicit modules.

pub mod algebra;
pub mod error;
pub mod identities;
pub mod invariants;
pub mod linalg;
pub mod modules;
pub mod poly;
pub mod scalar;
pub mod spectra;
pub mod superspace;
pub mod weights;

pub use algebra::{AlgebraSignature, Index};
pub use error::{Error, Result};
pub use identities::VerificationReport;
pub use invariants::OperatorMatrix;
pub use modules::{HighestWeightReport, Representation};
pub use poly::ExactPolynomial;
pub use scalar::ExactScalar;
pub use spectra::{Eigenvalue, RootList};
pub use superspace::{GradedSpace, Parity, SparseOperator};
pub use weights::Weight;
