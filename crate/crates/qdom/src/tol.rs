//! Numeric tolerances used across the crate.
//!
//! All workloads are dense double-precision problems on matrices of order
//! at most 64 (usually at most 16), which leaves several orders of
//! magnitude of headroom between achievable accuracy and these thresholds.

/// Eigenpair residual bound, scaled by `max(1, ||Q||_inf)`.
pub const EIGEN_RESIDUAL: f64 = 1e-9;

/// Generic equality tolerance for eigenvalue comparisons.
pub const EQUALITY: f64 = 1e-9;

/// Margin demanded of strict inequalities between eigenvalues.
pub const STRICT_MARGIN: f64 = 1e-10;

/// Spectral gap below which eigenvector-structure checks report
/// "inconclusive" (the least eigenvector is not numerically unique).
pub const GAP_INCONCLUSIVE: f64 = 1e-7;

/// Threshold under which an eigenvector coordinate counts as zero.
pub const ZERO_COORDINATE: f64 = 1e-8;

/// Coordinate magnitude used when fixing the eigenvector sign.
pub const SIGN_EPS: f64 = 1e-9;

/// Slack allowed in the edge-interlacing chain.
pub const INTERLACING_SLACK: f64 = 1e-8;

/// Slack for the trace identity `sum(spectrum) = sum(degrees)`.
pub const TRACE_IDENTITY: f64 = 1e-8;

/// Relative tolerance for the Rayleigh-quotient identity.
pub const RAYLEIGH_REL: f64 = 1e-10;

/// Two eigenvalues of isomorphic constructions must agree this tightly.
pub const ISO_EQUALITY: f64 = 1e-12;

/// Runner-up gap required before a minimizer is reported as unique.
pub const UNIQUENESS_GAP: f64 = 1e-9;
