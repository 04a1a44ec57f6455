//! Exact intersection theory for counting rational curves on Calabi–Yau
//! threefolds.
//!
//! The number of curves of a given type is the top Chern class `c_r(B)` of a
//! rank-`r` bundle `B` on an `r`-dimensional compact moduli space. This crate
//! evaluates such classes exactly:
//!
//! * [`schubert`]: the Chow ring of a Grassmannian in the Schubert basis.
//! * [`chern`]: splitting-principle formulas (symmetric powers, twists,
//!   duals, quotients, Segre classes) over any graded ring.
//! * [`projbundle`]: the Chow ring of a projective bundle over a
//!   Grassmannian.
//! * [`recipes`]: lines on complete intersections, conics on hypersurfaces
//!   in `P^4`, equivalences of distinguished varieties and degeneration
//!   ledgers.
//!
//! ```
//! use enumgeom::recipes::lines_on_complete_intersection;
//!
//! let report = lines_on_complete_intersection(4, &[5]).unwrap();
//! assert_eq!(report.count().unwrap().to_string(), "2875");
//! ```

pub mod chern;
mod error;
pub mod projbundle;
pub mod recipes;
pub mod schubert;
pub mod verify;

pub use error::{Error, Result};

pub use chern::{ChernVector, GradedRing, Integrable, UniversalPoly};
pub use projbundle::{PBElement, ProjBundleRing};
pub use recipes::{CountReport, DegenerationLedger, Outcome};
pub use schubert::{GrassCtx, Partition, SchubertCycle, Tautological};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
