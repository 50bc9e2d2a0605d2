//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by root-system construction, Weyl enumeration,
/// Gröbner computation, and ring assembly.
#[derive(Debug, Error)]
pub enum Error {
    /// The requested (family, rank) pair does not name a supported simple
    /// root system.
    #[error("unsupported root system {label}: {reason}")]
    InvalidRootSystem { label: String, reason: String },

    /// An input string (Dynkin spec or polynomial) could not be parsed.
    #[error("cannot parse {input:?}: {message}")]
    Parse { input: String, message: String },

    /// The Weyl group (or the requested reflection subgroup) has more
    /// elements than the enumeration cap allows.
    #[error("Weyl group order {order} exceeds the enumeration cap {cap}")]
    WeylCapExceeded { order: u128, cap: u128 },

    /// Gröbner-basis routines accept homogeneous generators only.
    #[error("non-homogeneous generator: {0}")]
    NonHomogeneous(String),

    /// A normal form or standard-monomial query asked about a degree beyond
    /// the degree the basis was completed to.
    #[error("Gröbner basis is complete through degree {truncation} only, degree {needed} was requested")]
    Truncated { truncation: u32, needed: u32 },

    /// An internal cross-check failed. This indicates a bug in the library,
    /// not bad user input.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
