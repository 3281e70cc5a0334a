//! Exact-arithmetic toolkit for overpartition rank statistics.
//!
//! The crate has three layers:
//!
//! * [`series`] and [`qobjects`] — truncated Laurent series over exact
//!   coefficient rings, and builders for the named q-objects (Pochhammer
//!   symbols, Gaussian binomials, theta functions, Appell-Lerch sums, the
//!   tenth-order mock theta functions).
//! * [`partitions`] and [`bijection`] — partitions and overpartitions as
//!   data, Durfee-square machinery, rank statistics, and the vector-
//!   partition correspondence behind the k-bar rank.
//! * [`counting`] and [`identity`] — rank tables built by independent
//!   routes (generating function, multiple sum, brute-force enumeration)
//!   and a registry of q-series identities checked by truncated expansion.

pub mod bijection;
pub mod counting;
pub mod error;
pub mod identity;
pub mod partitions;
pub mod qobjects;
pub mod series;

pub use bijection::VectorPartition;
pub use counting::{Method, RankTable, Stat};
pub use error::{Error, Result};
pub use identity::{IdentityCase, Outcome, VerificationReport};
pub use partitions::{Overpartition, Partition};
pub use series::{Coeff, Int, MarkerPoly, Rat, SignedMonomial, TruncatedSeries};
