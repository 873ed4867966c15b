//! Error type shared by all modules of the crate.
//!
//! Domain violations are recoverable errors carrying the offending path in
//! canonical form, so front ends can surface them as user diagnostics.

use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A canonical UD-string contained a character other than `U` or `D`.
    #[error("invalid character '{found}' at position {position}")]
    InvalidChar { position: usize, found: char },

    /// A signed-sequence token was not of the form `+(UD...)` or `-(UD...)`.
    #[error("invalid signed item token {token:?} (expected +(UD...) or -(UD...))")]
    InvalidSeqToken { token: String },

    /// The operation requires a balanced path (#up = #down).
    #[error("path {path:?} is not balanced")]
    NotBalanced { path: String },

    /// The operation requires a Dyck path (balanced, never below the axis).
    #[error("path {path:?} is not a Dyck path")]
    NotDyck { path: String },

    /// The operation requires every x-intercept to be divisible by 4.
    #[error("path {path:?} is not even-zeroed")]
    NotEvenZeroed { path: String },

    /// An even parameter was required.
    #[error("path {path:?} has odd parameter where an even one is required")]
    OddParameter { path: String },

    /// An odd parameter was required.
    #[error("path {path:?} has even parameter where an odd one is required")]
    EvenParameter { path: String },

    /// First-return decomposition of the empty path was requested.
    #[error("cannot split an empty path")]
    EmptySplit,

    /// No x-intercept congruent to 2 mod 4 exists.
    #[error("path {path:?} has no x-intercept congruent to 2 mod 4")]
    NoSplitIntercept { path: String },

    /// An enumeration or grid size is over the configured cap.
    #[error("requested size {requested} exceeds cap {cap}")]
    CapExceeded { requested: usize, cap: usize },

    /// The identity has no check procedure for the requested mode.
    #[error("identity {identity} does not support {mode} mode")]
    UnsupportedMode { identity: String, mode: String },

    /// An index outside the defined range of an identity (e.g. cor10 at n = 0).
    #[error("index n = {n} is out of range for {what}")]
    IndexOutOfRange { n: u64, what: String },

    /// An inverted range was passed to a range operation.
    #[error("invalid range {from}..{to} (from must not exceed to)")]
    InvalidRange { from: u64, to: u64 },
}
