//! Numerical tolerances used across the crate.
//!
//! Validation tolerances are fixed here rather than threaded through every
//! call so that two runs of the same computation classify boundary cases
//! identically.

/// Absolute tolerance on probability sums (distributions, channel rows,
/// stochastic columns).
pub const PROB_SUM_TOL: f64 = 1e-12;

/// Entries in `[-NEG_CLAMP, 0)` are clamped to `0`; anything more negative
/// is rejected as a genuine sign error.
pub const NEG_CLAMP: f64 = 1e-15;

/// Absolute tolerance on marginal-consistency checks of a joint PMF.
pub const MARGINAL_TOL: f64 = 1e-12;

/// Threshold-event membership: `lhs <= rhs` with equality counted as
/// membership when the two sides agree within this absolute tie band.
pub const TIE_TOL: f64 = 1e-14;

/// Dominance preconditions (`q(y) >= q1(x1,y)` and friends) are verified
/// entrywise at this absolute tolerance.
pub const DOMINANCE_TOL: f64 = 1e-12;

/// Relative (Frobenius) asymmetry below which a near-Hermitian matrix is
/// symmetrized instead of rejected.
pub const HERM_ASYM_TOL: f64 = 1e-12;

/// Jacobi sweep convergence: off-diagonal Frobenius norm relative to the
/// input norm.
pub const JACOBI_CONV_TOL: f64 = 1e-13;

/// Eigenvalue sign classification band for spectral projectors, relative to
/// the Frobenius norm of the decomposed operator. Eigenvalues inside the
/// band count as `<= 0`.
pub const EIG_BAND_TOL: f64 = 1e-12;

/// Positive-semidefiniteness: smallest eigenvalue must be `>= -PSD_TOL`.
pub const PSD_TOL: f64 = 1e-10;

/// Unit-trace check for density operators.
pub const TRACE_TOL: f64 = 1e-10;

/// POVM completeness: Frobenius distance of the element sum from identity.
pub const POVM_TOL: f64 = 1e-10;

/// Frobenius tolerance on the mixture constraints a sigma triple must
/// satisfy against its input distributions.
pub const SIGMA_MIX_TOL: f64 = 1e-10;

/// Pseudo-inverse square root: eigenvalues below `PGM_CUTOFF * lambda_max`
/// are treated as kernel.
pub const PGM_CUTOFF: f64 = 1e-10;

/// Default cap on tensor entries when extending a channel to block length
/// `n`.
pub const DEFAULT_SIZE_CAP: usize = 1_000_000;

/// Default cap on exhaustive deterministic-decoder enumeration
/// (`(n1*n2)^m` decoder configurations).
pub const EXHAUSTIVE_DECODER_CAP: u128 = 1_000_000;
