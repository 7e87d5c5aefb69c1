//! Convex spaces, conical spaces and executable checkers for their laws.
//!
//! Points are combined with exact rational coefficients, so every algebraic
//! law is tested by structural equality with no tolerance:
//!
//! - [`space`]: the binary interface `x <p> y`, the shipped instances
//!   (rational line and vectors, distributions, dominated pairs) and the
//!   binary axioms.
//! - [`dist`] and [`multiary`]: finite distributions, the multiary operator
//!   derived by recursion, and the projection, barycenter, partition,
//!   idempotence, map and permutation laws.
//! - [`conical`]: scaled points, their conical laws and the `s1` embedding.
//! - [`hull`]: hull witnesses and the decomposition of hulls of unions.
//! - [`analysis`]: floating-point convexity checks, the extended logarithm
//!   and the divergence of dominated pairs.
//! - [`suite`]: every checker run on one space, and the named instances.
//!
//! Coefficients are restricted to rationals in `[0, 1]`.
//!
//! The crate is `no_std` and needs only `alloc`.
//!
//! ```
//! use convspace::dist::FiniteDist;
//! use convspace::space::{check_binary_laws, RatVector, RatVectorSpace, SampleSpace};
//! use convspace::{ConvexSpace, LawConfig};
//!
//! let plane = RatVectorSpace::new(2);
//! let d = FiniteDist::from_fracs(&[(1, 2), (1, 4), (1, 4)]).unwrap();
//! let corners = [(0, 0), (1, 0), (0, 1)]
//!     .map(|(a, b)| RatVector::from_fracs(&[(a, 1), (b, 1)]).unwrap());
//! let z = plane.convn(&d, &corners).unwrap();
//! assert_eq!(z.to_string(), "(1/4, 1/4)");
//!
//! let report = check_binary_laws(&plane, |r| plane.sample_point(r), &LawConfig::new(7, 200));
//! assert!(report.all_hold());
//! ```
#![no_std]

extern crate alloc;

pub mod analysis;
pub mod conical;
pub mod dist;
mod error;
pub mod hull;
pub mod multiary;
pub mod mutant;
pub mod rat;
pub mod report;
pub mod sample;
pub mod space;
pub mod suite;

pub use error::{Error, Result};
pub use rat::{Prob, Rat};
pub use report::{Counterexample, LawConfig, LawOutcome, LawReport};
pub use space::ConvexSpace;

#[doc(hidden)]
pub mod __private {
    pub use alloc::string::ToString;
    pub use alloc::vec;
}
