//! Default resource caps and their hard ceilings. Flags may raise the
//! defaults up to the ceilings; nothing may exceed a ceiling.

/// Default branch-and-bound depth for membership exclusion.
pub const DEFAULT_EXCLUDE_DEPTH: u32 = 30;
/// Hard ceiling on branch-and-bound depth.
pub const MAX_EXCLUDE_DEPTH: u32 = 64;

/// Default cap on surviving leaves in one exclusion call.
pub const DEFAULT_SURVIVOR_CAP: u64 = 1_000_000;
/// Smaller per-pixel cap used while rasterizing the connectivity locus.
pub const DEFAULT_RENDER_SURVIVOR_CAP: u64 = 20_000;

/// Hard cap on the degree of the {0,±1} polynomial enumeration.
pub const MAX_M0_DEGREE: u32 = 16;
/// Default degree used when marking root witnesses in rasters.
pub const DEFAULT_WITNESS_M0_DEGREE: u32 = 8;

/// Degree ceiling for the simultaneous root finder.
pub const MAX_ROOTFIND_DEGREE: usize = 24;
/// Candidate-pair ceiling for the bounded factor search.
pub const FACTOR_SEARCH_CAP: u64 = 10_000_000;

/// Default level cap for ±1 digit enumerations (2^n points).
pub const DEFAULT_LEVEL_CAP: u32 = 14;
/// Hard ceiling for ±1 digit enumerations.
pub const MAX_LEVEL: u32 = 22;

/// Default and ceiling term counts for Fourier products.
pub const DEFAULT_FOURIER_TERMS: u32 = 10_000;
pub const MAX_FOURIER_TERMS: u32 = 100_000;

/// Point cap for direct prefix-sum enumeration.
pub const ENUM_POINT_CAP: u64 = 1 << 24;
