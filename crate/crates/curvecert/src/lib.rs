//! Exact rational planar curves with certified interval computation.
//!
//! Everything in this crate is computed over the rationals. Irrational
//! quantities (segment lengths, Hausdorff distances, arc-length integrals)
//! are never approximated by floating point; they are enclosed in dyadic
//! intervals whose width is controlled by an explicit precision index `n`
//! (width at most 2⁻ⁿ). Comparisons between interval quantities are
//! three-valued and resolved by refinement, never by rounding.
//!
//! The crate is organized around four representations of a planar curve:
//! nested compact covers (`K`), retraceable parametrizations (`R`),
//! injective parametrizations (`M`) and length-normalized parametrizations
//! (`N`), together with conversions between them, curve constructors of
//! prescribed length, and a deterministic stagewise point-separation
//! simulator that plays scripted opponent programs against a curve under
//! construction.

pub mod construct;
pub mod diagonal;
pub mod exact;
pub mod geometry;
pub mod io;
pub mod names;

pub use exact::{DyadicInterval, Precision, Rational, Ternary};
pub use geometry::{CompactCover, PathFunction, Point, Polygon, SquareBox};
