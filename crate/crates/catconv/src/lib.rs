//! Exact lattice-path combinatorics for Catalan / central-binomial
//! convolution identities.
//!
//! The crate provides four layers:
//!
//! * [`path`] / [`enumerate`] / [`scan`] — up/down paths with their
//!   predicates (balanced, Dyck, even-zeroed), deterministic lexicographic
//!   enumerators for each family, and data-parallel exhaustive scans over
//!   the full step space of one length.
//! * [`count`] — exact arbitrary-precision counting: binomials, Catalan
//!   numbers, and the convolution sums the identities relate.
//! * [`bijection`] — the executable maps with their inverses: the axis
//!   decomposition `chi`, the first-return decomposition `psi`, their
//!   composite carrying Dyck paths onto even-zeroed balanced paths, and
//!   the pair splice behind the alternating convolution.
//! * [`verify`] / [`triangle`] — the identity registry (numeric and
//!   exhaustive checks producing structured reports) and the even-zeroed
//!   path-counting triangle.
//!
//! With the default `parallel` feature the exhaustive scans and range
//! verification fan out over the rayon thread pool; disabling it swaps in
//! sequential fallbacks with identical results.

pub mod bijection;
pub mod count;
pub mod enumerate;
mod error;
pub mod path;
pub mod scan;
pub mod triangle;
pub mod verify;

pub use error::Error;
pub use path::{BalancedPath, DyckPath, Path, Sign, SignedDyckPath, SignedSeq, Step};
