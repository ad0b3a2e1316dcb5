//! Exact normal ordering in the Weyl algebra `<p, q | pq - qp = 1>` and
//! machine checks of the ordering identities that express symmetrized
//! products through Meixner-Pollaczek polynomials.

pub mod arith;
pub mod harness;
pub mod mp;
pub mod poly;
pub mod rewrite;
pub mod weyl;

pub use arith::{ArithError, GaussianRational, Integer, Rational};
pub use harness::{CheckReport, HarnessError, IdentityId, SweepConfig, Variant, Verdict};
pub use poly::Polynomial;
pub use weyl::{Letter, Monomial, WeylElement, WeylError, Word};
