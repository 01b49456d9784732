//! Exact arithmetic of final segments in lexicographic products of Z and Q,
//! and of fractional ideals of valuation rings through their value segments.
//!
//! * [`lexgroup`]: the groups, their elements and convex subgroups
//! * [`segcalc`]: canonical final segments and their arithmetic
//! * [`idealcalc`]: ideals, overrings, colon ideals, annihilators
//! * [`oracle`]: brute-force checks of everything above on finite windows
//! * [`cutlang`]: the `.cut` language, its printer, JSON form and the CLI

pub mod cutlang;
pub mod error;
pub mod idealcalc;
pub mod lexgroup;
pub mod oracle;
pub mod segcalc;

pub use error::{Error, Result};
pub use lexgroup::{ConvexSubgroup, Factor, GroupElement, GroupSignature};
pub use segcalc::{solve, FinalSegment, Flavor, SolveOutcome};
