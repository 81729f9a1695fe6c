//! Exact analysis of monomial ideals of Veronese type.
//!
//! `I_{d;a_1,...,a_n}` is generated by the monomials of degree `d` whose
//! `x_i`-exponent is at most `a_i`. This crate computes its radical, Borel
//! generators and associated primes, decides equidimensionality, unmixedness
//! and the Cohen-Macaulay property through closed-form criteria, and checks
//! each of those against brute-force enumeration in [`oracle`].

pub mod cli;
pub mod error;
pub mod ideal;
pub mod monomial;
pub mod oracle;
pub mod polymatroid;
pub mod report;
pub mod stable;
pub mod veronese;

pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use monomial::{IndexSet, Monomial};
pub use polymatroid::{BaseSet, VeroneseParams};
pub use stable::{MbInvariants, SquarefreeIdeal};

/// Largest number of variables supported (index sets are 64-bit masks).
pub const MAX_VARS: usize = 64;

/// Largest accepted degree or cap.
pub const MAX_VALUE: u64 = 1_000_000;

/// Largest number of variables for which a table over all subsets is built.
pub const MAX_SUBSET_VARS: usize = 20;
