//! Splitting-principle Chern calculus over any graded ring.
//!
//! Formulas for symmetric powers are computed once as integer polynomials in
//! formal classes `c_1..c_r` ([`UniversalPoly`]) and then substituted into
//! whatever ring the bundle lives in: a Grassmannian, a projective bundle,
//! or a formal polynomial ring.

mod bundle;
mod poly;
mod ring;
mod symmetric;

pub use bundle::ChernVector;
pub use poly::{Monomial, Poly, PolyRing};
pub use ring::{GradedRing, Integrable};
pub use symmetric::{
    elementary_symmetric, reduce_symmetric, sym_rank, sym_roots, universal_sym_chern,
    universal_sym_chern_upto, UniversalPoly,
};

use crate::error::Result;
use crate::schubert::{chern_tautological, GrassCtx, Tautological};

/// A tautological bundle on `G(k,n)` as a [`ChernVector`].
pub fn tautological_bundle(ctx: GrassCtx, which: Tautological) -> Result<ChernVector<GrassCtx>> {
    let classes = (1..=which.rank(ctx))
        .map(|i| chern_tautological(ctx, which, i))
        .collect::<Result<Vec<_>>>()?;
    ChernVector::new(ctx, classes)
}
