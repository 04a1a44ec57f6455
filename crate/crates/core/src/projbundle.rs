//! The Chow ring of a projective bundle `P(E) → G(k,n)`.
//!
//! `P(E)` parametrizes one-dimensional subspaces of the fibres of `E`, and
//! `O(−1)` is the tautological line subbundle. With `ζ = c_1(O(1))` the ring
//! is generated over the base by `ζ` subject to
//!
//! ```text
//! ζ^r + c_1(E) ζ^{r−1} + … + c_r(E) = 0,
//! ```
//!
//! so every element has a unique form `Σ_{j<r} b_j ζ^j` with base
//! coefficients `b_j`. Pushing forward to the base picks out `b_{r−1}`; in
//! general `π_*(ζ^{r−1+j}) = s_j(E)`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::chern::{ChernVector, GradedRing, Integrable};
use crate::error::{Error, Result};
use crate::schubert::{join_parts, write_term, GrassCtx, SchubertCycle};

#[derive(PartialEq, Eq, Debug)]
struct Inner {
    base: GrassCtx,
    /// `c_1(E)..c_r(E)`.
    relation: Vec<SchubertCycle>,
}

/// The ring `A(P(E))` for a bundle `E` of rank `r ≥ 1` on a Grassmannian.
#[derive(Clone, Debug)]
pub struct ProjBundleRing(Arc<Inner>);

impl PartialEq for ProjBundleRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for ProjBundleRing {}

impl ProjBundleRing {
    pub fn new(bundle: &ChernVector<GrassCtx>) -> Result<Self> {
        if bundle.rank() == 0 {
            return Err(Error::Rank("projective bundle of a rank-0 bundle".into()));
        }
        Ok(ProjBundleRing(Arc::new(Inner {
            base: *bundle.ring(),
            relation: bundle.classes().to_vec(),
        })))
    }

    pub fn base(&self) -> GrassCtx {
        self.0.base
    }

    /// Rank `r` of `E`; fibres are `P^{r−1}`.
    pub fn rank(&self) -> usize {
        self.0.relation.len()
    }

    /// `dim(base) + r − 1`.
    pub fn dim(&self) -> usize {
        self.base().dim() + self.rank() - 1
    }

    /// `c_i(E)`, `c_0 = 1`.
    pub fn bundle_class(&self, i: usize) -> SchubertCycle {
        match i {
            0 => SchubertCycle::one(self.base()),
            i if i <= self.rank() => self.0.relation[i - 1].clone(),
            _ => SchubertCycle::zero(self.base()),
        }
    }

    /// `E` itself as a bundle on the base.
    pub fn bundle(&self) -> ChernVector<GrassCtx> {
        ChernVector::new(self.base(), self.0.relation.clone()).expect("validated at construction")
    }

    /// `π^* b`.
    pub fn pullback(&self, b: &SchubertCycle) -> Result<PBElement> {
        if b.ctx() != self.base() {
            return Err(Error::ContextMismatch(format!(
                "{} pulled back to a bundle over {}",
                b.ctx(),
                self.base()
            )));
        }
        Ok(self.reduce(vec![b.clone()]))
    }

    /// The hyperplane class `ζ = c_1(O(1))`.
    pub fn zeta(&self) -> PBElement {
        self.zeta_pow(1)
    }

    pub fn zeta_pow(&self, e: usize) -> PBElement {
        let mut coeffs = vec![SchubertCycle::zero(self.base()); e + 1];
        coeffs[e] = SchubertCycle::one(self.base());
        self.reduce(coeffs)
    }

    /// `c_1(O(a)) = a·ζ`.
    pub fn line_class(&self, a: i64) -> PBElement {
        self.scale(&self.zeta(), &BigInt::from(a))
    }

    /// Brings `Σ_j coeffs[j] ζ^j` (any length) to canonical form.
    pub fn reduce(&self, mut coeffs: Vec<SchubertCycle>) -> PBElement {
        let r = self.rank();
        for j in (r..coeffs.len()).rev() {
            let lead = std::mem::replace(&mut coeffs[j], SchubertCycle::zero(self.base()));
            if lead.is_zero() {
                continue;
            }
            // ζ^j = −Σ_{i=1}^{r} c_i ζ^{j−i}
            for i in 1..=r {
                let prod = self.0.relation[i - 1].multiply(&lead).expect("same base");
                coeffs[j - i] = &coeffs[j - i] - &prod;
            }
        }
        coeffs.resize(r, SchubertCycle::zero(self.base()));
        let dim = self.dim();
        for (j, b) in coeffs.iter_mut().enumerate() {
            if j > dim {
                *b = SchubertCycle::zero(self.base());
            } else {
                *b = b.truncate(dim - j);
            }
        }
        PBElement {
            ring: self.clone(),
            coeffs,
        }
    }

    fn check(&self, x: &PBElement) -> Result<()> {
        if &x.ring == self {
            Ok(())
        } else {
            Err(Error::ContextMismatch(
                "elements of different projective bundles".into(),
            ))
        }
    }
}

/// An element `Σ_{j<r} b_j ζ^j` of a projective-bundle Chow ring.
#[derive(Clone, PartialEq)]
pub struct PBElement {
    ring: ProjBundleRing,
    coeffs: Vec<SchubertCycle>,
}

impl PBElement {
    pub fn ring(&self) -> &ProjBundleRing {
        &self.ring
    }

    /// `b_0..b_{r−1}`.
    pub fn coeffs(&self) -> &[SchubertCycle] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(SchubertCycle::is_zero)
    }

    pub fn try_add(&self, other: &PBElement) -> Result<PBElement> {
        self.ring.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(PBElement {
            ring: self.ring.clone(),
            coeffs,
        })
    }

    pub fn neg(&self) -> PBElement {
        PBElement {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// The product, reduced to canonical form.
    pub fn multiply(&self, other: &PBElement) -> Result<PBElement> {
        self.ring.check(other)?;
        let base = self.ring.base();
        let r = self.ring.rank();
        let dim = self.ring.dim();
        let mut prod = vec![SchubertCycle::zero(base); 2 * r - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() || i + j > dim {
                    continue;
                }
                let ab = a.multiply(b)?.truncate(dim - i - j);
                prod[i + j] = &prod[i + j] + &ab;
            }
        }
        Ok(self.ring.reduce(prod))
    }

    /// `π_*`: the coefficient of `ζ^{r−1}`.
    pub fn pushforward(&self) -> SchubertCycle {
        self.coeffs[self.ring.rank() - 1].clone()
    }

    /// `∫_{P(E)} x = ∫_G π_* x`.
    pub fn integrate(&self) -> BigInt {
        self.pushforward().integrate()
    }

    pub fn homogeneous_part(&self, d: usize) -> PBElement {
        self.map_coeffs(|j, b| {
            if d >= j {
                b.homogeneous_part(d - j)
            } else {
                SchubertCycle::zero(b.ctx())
            }
        })
    }

    pub fn truncate(&self, d: usize) -> PBElement {
        self.map_coeffs(|j, b| {
            if d >= j {
                b.truncate(d - j)
            } else {
                SchubertCycle::zero(b.ctx())
            }
        })
    }

    pub fn degree_range(&self) -> Option<(usize, usize)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter_map(|(j, b)| b.degree_range().map(|(lo, hi)| (lo + j, hi + j)))
            .reduce(|(a, b), (c, d)| (a.min(c), b.max(d)))
    }

    fn map_coeffs(&self, f: impl Fn(usize, &SchubertCycle) -> SchubertCycle) -> PBElement {
        PBElement {
            ring: self.ring.clone(),
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(j, b)| f(j, b))
                .collect(),
        }
    }
}

impl fmt::Debug for PBElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders as `a·zeta^j·sigma[λ] + …` ordered by total degree, then by
/// power of `zeta`.
impl fmt::Display for PBElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (j, b) in self.coeffs.iter().enumerate() {
            for (lambda, c) in b.terms() {
                terms.push((lambda.weight() + j, j, lambda.clone(), c.clone()));
            }
        }
        if terms.is_empty() {
            return f.write_str("0");
        }
        terms.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)).then(b.2.cmp(&a.2)));
        for (i, (_, j, lambda, c)) in terms.iter().enumerate() {
            let mut parts = Vec::new();
            match j {
                0 => {}
                1 => parts.push("zeta".to_string()),
                j => parts.push(format!("zeta^{j}")),
            }
            if !lambda.is_empty() {
                parts.push(format!("sigma[{}]", join_parts(lambda)));
            }
            let basis = (!parts.is_empty()).then(|| parts.join("·"));
            write_term(f, i == 0, c, basis.as_deref())?;
        }
        Ok(())
    }
}

impl GradedRing for ProjBundleRing {
    type Elem = PBElement;

    fn zero(&self) -> PBElement {
        PBElement {
            ring: self.clone(),
            coeffs: vec![SchubertCycle::zero(self.base()); self.rank()],
        }
    }

    fn one(&self) -> PBElement {
        self.reduce(vec![SchubertCycle::one(self.base())])
    }

    fn add(&self, a: &PBElement, b: &PBElement) -> PBElement {
        a.try_add(b)
            .expect("elements of different projective bundles")
    }

    fn neg(&self, a: &PBElement) -> PBElement {
        a.neg()
    }

    fn mul(&self, a: &PBElement, b: &PBElement) -> PBElement {
        a.multiply(b)
            .expect("elements of different projective bundles")
    }

    fn scale(&self, a: &PBElement, c: &BigInt) -> PBElement {
        if c.is_zero() {
            return self.zero();
        }
        a.map_coeffs(|_, b| b.scale(c))
    }

    fn is_zero(&self, a: &PBElement) -> bool {
        a.is_zero()
    }

    fn top_degree(&self) -> usize {
        self.dim()
    }

    fn homogeneous_part(&self, a: &PBElement, d: usize) -> PBElement {
        a.homogeneous_part(d)
    }

    fn truncate(&self, a: &PBElement, d: usize) -> PBElement {
        a.truncate(d)
    }

    fn degree_range(&self, a: &PBElement) -> Option<(usize, usize)> {
        a.degree_range()
    }
}

impl Integrable for ProjBundleRing {
    fn integrate(&self, a: &PBElement) -> BigInt {
        a.integrate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chern::tautological_bundle;
    use crate::schubert::{Partition, Tautological};

    fn trivial_over_point(r: usize) -> ProjBundleRing {
        ProjBundleRing::new(&ChernVector::trivial(GrassCtx::point(), r)).unwrap()
    }

    fn plane_conics() -> ProjBundleRing {
        let ctx = GrassCtx::new(3, 5).unwrap();
        let e = tautological_bundle(ctx, Tautological::SubDual)
            .unwrap()
            .sym_power(2);
        ProjBundleRing::new(&e).unwrap()
    }

    #[test]
    fn projective_space_relation() {
        let ring = trivial_over_point(4);
        assert_eq!(ring.dim(), 3);
        let z3 = ring.zeta_pow(3);
        assert_eq!(z3.integrate(), BigInt::from(1));
        assert!(ring.mul(&z3, &ring.zeta()).is_zero());
    }

    #[test]
    fn one_relation_step() {
        let ring = plane_conics();
        let r = ring.rank();
        let zr = ring.mul(&ring.zeta_pow(r - 1), &ring.zeta());
        let mut want = Vec::new();
        for j in 0..r {
            want.push(-ring.bundle_class(r - j));
        }
        assert_eq!(zr, ring.reduce(want));
        assert_eq!(zr.pushforward(), -ring.bundle_class(1));
    }

    #[test]
    fn unit_law_and_pushforward_basics() {
        let ring = plane_conics();
        let x = ring.zeta_pow(3);
        assert_eq!(ring.mul(&x, &ring.one()), x);
        assert_eq!(
            ring.zeta_pow(5).pushforward(),
            SchubertCycle::one(ring.base())
        );
        for j in 0..5 {
            assert!(ring.zeta_pow(j).pushforward().is_zero());
        }
    }

    #[test]
    fn integrate_point_and_degree_filter() {
        let ring = plane_conics();
        let pt = SchubertCycle::class(ring.base(), ring.base().point_class()).unwrap();
        let x = ring.mul(&ring.zeta_pow(5), &ring.pullback(&pt).unwrap());
        assert_eq!(x.integrate(), BigInt::from(1));
        assert_eq!(ring.zeta_pow(10).integrate(), BigInt::zero());
        // total degree above the dimension is zero
        assert!(ring.zeta_pow(12).is_zero());
    }

    #[test]
    fn pullback_checks_base() {
        let ring = plane_conics();
        let other = SchubertCycle::one(GrassCtx::new(2, 5).unwrap());
        assert!(ring.pullback(&other).is_err());
    }

    #[test]
    fn rank_one_bundle_is_the_base() {
        let ctx = GrassCtx::new(2, 4).unwrap();
        let l =
            ChernVector::line(ctx, SchubertCycle::class(ctx, Partition::row(1)).unwrap()).unwrap();
        let ring = ProjBundleRing::new(&l).unwrap();
        assert_eq!(ring.dim(), 4);
        assert_eq!(ring.zeta().pushforward(), -l.class(1));
    }

    #[test]
    fn display() {
        let ring = plane_conics();
        let x = ring.add(&ring.zeta_pow(2), &ring.line_class(-3));
        assert_eq!(x.to_string(), "-3·zeta + zeta^2");
    }
}
