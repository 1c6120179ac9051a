//! Default guardrails for the brute-force enumerations.
//!
//! Every cap can be overridden per call; these are the values used by the
//! convenience methods and by the verification suites. They are sized so that
//! the full suite finishes in well under two minutes on commodity hardware.

/// Largest normalized volume enumerated when listing fundamental-domain
/// lattice points of a simplex.
pub const DEFAULT_VOLUME_CAP: u64 = 10_000_000;

/// Largest `n` for which permutation polynomials are computed by brute force
/// over all `n!` permutations.
pub const DEFAULT_PERMUTATION_CAP: usize = 9;

/// Largest number of colored permutations (`r^n * n!`) enumerated by brute
/// force.
pub const DEFAULT_COLORED_CAP: u64 = 10_000_000;

/// Loop bound for dilate-point counting: the product of `(n * s_i + 1)` over
/// all coordinates must stay below this.
pub const DEFAULT_DILATE_CAP: u64 = 100_000_000;
