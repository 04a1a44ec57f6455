//! Equivalences of distinguished varieties: how many of the `c_r(B)` curves
//! a positive-dimensional family `Z` absorbs.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::chern::{ChernVector, Integrable};
use crate::error::{Error, Result};
use crate::schubert::{GrassCtx, Partition, SchubertCycle};

/// Only connected components of the zero locus are handled; an irreducible
/// component meeting other components needs correction terms this engine
/// does not compute.
pub const CONNECTED_COMPONENT_NOTE: &str =
    "valid for Z a connected component of the zero locus; components meeting other components are not handled";

/// `∫_Z {c(B) · s(Z, M)}_0`: the zero-dimensional part of `c(B) ∩ s(Z, M)`.
///
/// `c_b` and `s_z` are graded pieces (any degrees) of the total Chern class
/// of `B|_Z` and of the Segre class of `Z` in `M`, both in the ring of `Z`.
pub fn equivalence_zero_dim<R: Integrable>(ring: &R, c_b: &[R::Elem], s_z: &[R::Elem]) -> BigInt {
    let c = ring.sum(c_b);
    let s = ring.sum(s_z);
    let top = ring.homogeneous_part(&ring.mul(&c, &s), ring.top_degree());
    ring.integrate(&top)
}

/// `e(Z) = ∫_Z c_k(R¹π_*N)` for a `k`-dimensional unobstructed family; the
/// Chern data of `R¹π_*N` is supplied by the caller. A rigid curve (`k = 0`)
/// counts once.
pub fn equivalence_unobstructed<R: Integrable>(
    k: usize,
    family: &ChernVector<R>,
) -> Result<BigInt> {
    if k == 0 {
        return Ok(BigInt::one());
    }
    if k > family.rank() {
        return Err(Error::MissingClass(k));
    }
    let ring = family.ring();
    if ring.top_degree() != k {
        return Err(Error::Input(format!(
            "family of dimension {} given for k = {k}",
            ring.top_degree()
        )));
    }
    Ok(ring.integrate(&family.class(k)))
}

/// `e(Z)` for a family with `Z ≅ P^k` where only `∫ c_k` is known: the data
/// is realized as `c_k = value·h^k` on `P^k`.
pub fn equivalence_on_projective_space(k: usize, ck_integral: &BigInt) -> Result<BigInt> {
    if k == 0 {
        return Ok(BigInt::one());
    }
    let pk = GrassCtx::new(1, k + 1)?;
    let mut classes = vec![SchubertCycle::zero(pk); k];
    classes[k - 1] = SchubertCycle::class(pk, Partition::row(k as u32))?.scale(ck_integral);
    let family = ChernVector::new(pk, classes)?;
    equivalence_unobstructed(k, &family)
}

/// A degree-`m` multiple cover of a rigid rational curve counts `1/m³`.
pub fn multiple_cover_weight(m: i64) -> Result<BigRational> {
    if m <= 0 {
        return Err(Error::Input(format!("cover degree {m} must be positive")));
    }
    let m = BigInt::from(m);
    Ok(BigRational::new(BigInt::one(), &m * &m * &m))
}
