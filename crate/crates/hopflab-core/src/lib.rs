//! Exact-arithmetic engine for the classification of low-type Hopf
//! hypersurfaces of the non-flat complex space forms via the projector
//! embedding into Hermitian matrices.
//!
//! Everything here is exact: rationals, quadratic-radical towers, symbolic
//! rational functions in one family parameter, certified intervals for sign
//! decisions. Floating point appears only in sampling smoke tests and in
//! decimal renderings of reports.

pub mod blocks;
pub mod catalog;
pub mod classify;
pub mod embed;
pub mod error;
pub mod frame;
pub mod linalg;
pub mod tangent;
pub mod report;
pub mod scalar;

pub use error::{HopfError, Result};
pub use scalar::{Interval, QPoly, Radical, Rat, RatFunc, Scalar, SymRat, SymVar};
