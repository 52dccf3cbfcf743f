//! Self-similar attractors of the planar iterated function system
//! {λz−1, λz+1}, the locus of parameters where the attractor is connected,
//! and the complex Bernoulli convolution measures supported on the
//! attractors.
//!
//! The crate computes and renders these objects and, where the underlying
//! mathematics permits, produces machine-checkable certificates: covering
//! certificates for rectangles, exclusion certificates from a pruned
//! branch-and-bound over {0,±1} power-series prefixes, and disc
//! certificates proving that a neighborhood of a polynomial root lies in
//! the connectivity locus. Algebraic parameters are classified as real or
//! complex Pisot or Garsia numbers, which decide singularity or absolute
//! continuity of the associated Bernoulli convolution.

pub mod algebraic;
pub mod attractor;
pub mod base;
pub mod bernoulli;
pub mod caps;
pub mod certificates;
pub mod cli;
pub mod connectivity;
pub mod error;
#[cfg(feature = "exact-rational")]
pub mod exact;
pub mod geometry;
pub mod raster;

pub use base::{Alphabet, DigitString, Disc, Parameter, Rectangle, Window};
pub use error::{Error, Result};

/// Version tag embedded in every serialized report and certificate.
pub const SCHEMA_VERSION: u32 = 1;
