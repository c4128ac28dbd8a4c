//! Finite commutative semirings and semimodules, second subsemimodules, and
//! an exhaustive checker that verifies or refutes statements about them on a
//! catalog of small structures.

pub mod error;
pub mod harness;
pub mod homomorphism;
pub mod io;
pub mod second;
pub mod semimodule;
pub mod semiring;
pub mod subset;

pub use error::{AlgebraError, Axiom, HomLaw};
pub use homomorphism::Homomorphism;
pub use semimodule::{validate_semimodule, Semimodule, SemimoduleTables};
pub use semiring::{validate_semiring, Semiring, SemiringTables};
pub use subset::Subset;
