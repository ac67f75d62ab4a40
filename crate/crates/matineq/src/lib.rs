//! matineq: a numerical verification laboratory for rearrangement,
//! Chebyshev and Kantorovich type matrix inequalities.
//!
//! The crate is organized around a registry of checkable inequalities
//! ([`laws`]): each law knows its hypotheses, evaluates both sides on a
//! concrete instance, and reports the slack under an explicit tolerance
//! policy. Supporting modules provide the dense complex linear algebra
//! ([`la`]), unitarily invariant norms ([`norms`]), structured random
//! generators ([`structure`]), closed-form reverse constants
//! ([`constants`]), and sharpness / counterexample searches ([`search`]).

pub mod constants;
pub mod io;
pub mod la;
pub mod laws;
pub mod norms;
pub mod rng;
pub mod search;
pub mod structure;

pub use constants::ConstantRequest;
pub use la::{ComplexMatrix, HermitianMatrix, PsdMatrix, C64};
pub use laws::{batch_verify, check, random_instance, LawInstance, TolerancePolicy, Verdict};
pub use norms::NormId;
pub use structure::{GeneratorSpec, Orientation};
