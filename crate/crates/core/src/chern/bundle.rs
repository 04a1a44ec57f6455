use std::fmt;

use super::ring::GradedRing;
use super::symmetric::{big_binomial, sym_rank, universal_sym_chern_upto};
use crate::error::{Error, Result};

/// A formal bundle: a rank and Chern classes `c_1..c_rank` in a graded ring.
#[derive(Clone, PartialEq)]
pub struct ChernVector<R: GradedRing> {
    ring: R,
    classes: Vec<R::Elem>,
}

impl<R: GradedRing> ChernVector<R> {
    /// `classes[i]` is `c_{i+1}` and must be homogeneous of degree `i+1`.
    pub fn new(ring: R, classes: Vec<R::Elem>) -> Result<Self> {
        for (i, c) in classes.iter().enumerate() {
            if !ring.is_homogeneous(c, i + 1) {
                let (lo, hi) = ring.degree_range(c).unwrap_or((0, 0));
                let actual = if lo != i + 1 { lo } else { hi };
                return Err(Error::NotHomogeneous {
                    expected: i + 1,
                    actual,
                });
            }
        }
        Ok(ChernVector { ring, classes })
    }

    /// The trivial bundle of the given rank.
    pub fn trivial(ring: R, rank: usize) -> Self {
        let classes = vec![ring.zero(); rank];
        ChernVector { ring, classes }
    }

    /// The line bundle with first Chern class `c1`.
    pub fn line(ring: R, c1: R::Elem) -> Result<Self> {
        Self::new(ring, vec![c1])
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.classes.len()
    }

    /// `c_1..c_rank`.
    pub fn classes(&self) -> &[R::Elem] {
        &self.classes
    }

    /// `c_i`, with `c_0 = 1` and `c_i = 0` above the rank.
    pub fn class(&self, i: usize) -> R::Elem {
        match i {
            0 => self.ring.one(),
            i if i <= self.rank() => self.classes[i - 1].clone(),
            _ => self.ring.zero(),
        }
    }

    /// `c_rank`.
    pub fn top_class(&self) -> R::Elem {
        self.class(self.rank())
    }

    /// `1 + c_1 + … + c_rank`.
    pub fn total(&self) -> R::Elem {
        self.ring
            .add(&self.ring.one(), &self.ring.sum(&self.classes))
    }

    /// The dual bundle: `c_i ↦ (−1)^i c_i`.
    pub fn dual(&self) -> Self {
        let classes = self
            .classes
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if i % 2 == 0 {
                    self.ring.neg(c)
                } else {
                    c.clone()
                }
            })
            .collect();
        ChernVector {
            ring: self.ring.clone(),
            classes,
        }
    }

    /// `E ⊗ L` where `c_1(L) = ℓ`: every root shifts by `ℓ`, so
    /// `c_i = Σ_j binom(r−j, i−j) c_j ℓ^{i−j}`.
    pub fn tensor_line(&self, l: &R::Elem) -> Result<Self> {
        if !self.ring.is_homogeneous(l, 1) {
            return Err(Error::NotHomogeneous {
                expected: 1,
                actual: self.ring.degree_range(l).map_or(0, |(lo, _)| lo),
            });
        }
        let r = self.rank();
        let ring = &self.ring;
        let mut lpow = vec![ring.one()];
        for _ in 0..r {
            lpow.push(ring.mul(lpow.last().unwrap(), l));
        }
        let classes = (1..=r)
            .map(|i| {
                let mut acc = ring.zero();
                for j in 0..=i {
                    let coeff = big_binomial(r - j, i - j);
                    let term = ring.mul(&self.class(j), &lpow[i - j]);
                    acc = ring.add(&acc, &ring.scale(&term, &coeff));
                }
                acc
            })
            .collect();
        Ok(ChernVector {
            ring: self.ring.clone(),
            classes,
        })
    }

    /// `Sym^m E`, via the cached universal polynomials of the splitting
    /// principle.
    pub fn sym_power(&self, m: usize) -> Self {
        let r = self.rank();
        let ring = &self.ring;
        if r == 0 {
            return Self::trivial(ring.clone(), usize::from(m == 0));
        }
        let rank = sym_rank(r, m);
        let universal = universal_sym_chern_upto(r, m, ring.top_degree());
        let mut classes: Vec<R::Elem> = universal
            .iter()
            .map(|u| u.substitute(ring, &self.classes))
            .collect();
        classes.resize(rank, ring.zero());
        ChernVector {
            ring: ring.clone(),
            classes,
        }
    }

    /// `E ⊕ F`: total classes multiply.
    pub fn whitney_sum(&self, other: &Self) -> Self {
        let ring = &self.ring;
        let rank = self.rank() + other.rank();
        let classes = (1..=rank)
            .map(|d| {
                let mut acc = ring.zero();
                for i in d.saturating_sub(other.rank())..=d.min(self.rank()) {
                    acc = ring.add(&acc, &ring.mul(&self.class(i), &other.class(d - i)));
                }
                acc
            })
            .collect();
        ChernVector {
            ring: ring.clone(),
            classes,
        }
    }

    /// The quotient `F/S` for a subbundle `S ⊂ F = self`: the series
    /// `c(F)/c(S)` cut off at the quotient rank.
    ///
    /// Fails when `rank F ≤ rank S`, or when `c(S)·c(F/S) ≠ c(F)` below the
    /// top degree (the classes cannot come from a subbundle).
    pub fn whitney_quotient(&self, sub: &Self) -> Result<Self> {
        if self.rank() <= sub.rank() {
            return Err(Error::Rank(format!(
                "quotient needs rank F > rank S, got {} and {}",
                self.rank(),
                sub.rank()
            )));
        }
        let ring = &self.ring;
        let q = self.rank() - sub.rank();
        let top = ring.top_degree();
        // c_d(F) = Σ_i c_i(S) c_{d−i}(F/S)
        let mut quot: Vec<R::Elem> = vec![ring.one()];
        for d in 1..=q {
            if d > top {
                quot.push(ring.zero());
                continue;
            }
            let mut b = self.class(d);
            for i in 1..=d.min(sub.rank()) {
                b = ring.sub(&b, &ring.mul(&sub.class(i), &quot[d - i]));
            }
            quot.push(b);
        }
        for d in q + 1..=self.rank().min(top) {
            let mut lhs = ring.zero();
            for i in d - q..=d.min(sub.rank()) {
                lhs = ring.add(&lhs, &ring.mul(&sub.class(i), &quot[d - i]));
            }
            if lhs != self.class(d) {
                return Err(Error::Rank(format!(
                    "c(F)/c(S) does not terminate at degree {q}: mismatch in degree {d}"
                )));
            }
        }
        quot.remove(0);
        Ok(ChernVector {
            ring: ring.clone(),
            classes: quot,
        })
    }

    /// Segre classes `s_0..s_top`, the homogeneous parts of `c(E)^{-1}`.
    pub fn segre(&self, top: usize) -> Vec<R::Elem> {
        let ring = &self.ring;
        let mut s = vec![ring.one()];
        for d in 1..=top {
            if d > ring.top_degree() {
                s.push(ring.zero());
                continue;
            }
            let mut acc = ring.zero();
            for i in 1..=d.min(self.rank()) {
                acc = ring.sub(&acc, &ring.mul(&self.class(i), &s[d - i]));
            }
            s.push(acc);
        }
        s
    }

    /// Moves the classes into another ring through a ring map.
    pub fn map_ring<S: GradedRing>(
        &self,
        target: S,
        f: impl Fn(&R::Elem) -> S::Elem,
    ) -> ChernVector<S> {
        let classes = self.classes.iter().map(f).collect();
        ChernVector {
            ring: target,
            classes,
        }
    }
}

impl<R: GradedRing> fmt::Debug for ChernVector<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ChernVector")
            .field("rank", &self.rank())
            .field("classes", &self.classes)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::chern::{Poly, PolyRing};

    fn formal(r: usize, top: usize) -> ChernVector<PolyRing> {
        let ring = PolyRing::chern(r, top);
        let classes = (0..r).map(|i| ring.var(i)).collect();
        ChernVector::new(ring, classes).unwrap()
    }

    #[test]
    fn rejects_inhomogeneous_classes() {
        let ring = PolyRing::chern(2, 4);
        let c2 = ring.var(1);
        assert!(matches!(
            ChernVector::new(ring.clone(), vec![c2]),
            Err(Error::NotHomogeneous {
                expected: 1,
                actual: 2
            })
        ));
    }

    #[test]
    fn dual_signs() {
        let e = formal(2, 4);
        let d = e.dual();
        assert_eq!(d.class(1), e.ring().neg(&e.class(1)));
        assert_eq!(d.class(2), e.class(2));
        assert_eq!(d.dual(), e);
        let line = formal(1, 3);
        assert_eq!(line.dual().class(1), line.class(1).neg());
    }

    #[test]
    fn tensor_line_examples() {
        // Z[c1, c2, l] with l of degree 1
        let ring = PolyRing::new(vec![1, 2, 1], 6);
        let e = ChernVector::new(ring.clone(), vec![ring.var(0), ring.var(1)]).unwrap();
        let l = ring.var(2);
        let t = e.tensor_line(&l).unwrap();
        let two_l = l.scale(&BigInt::from(2));
        assert_eq!(t.class(1), ring.var(0).add(&two_l));
        let want2 = ring
            .var(1)
            .add(&ring.mul(&ring.var(0), &l))
            .add(&ring.mul(&l, &l));
        assert_eq!(t.class(2), want2);
        assert_eq!(e.tensor_line(&ring.zero()).unwrap(), e);
        assert_eq!(t.tensor_line(&l.neg()).unwrap(), e);
        let line = ChernVector::line(ring.clone(), ring.var(0)).unwrap();
        assert_eq!(line.tensor_line(&l).unwrap().class(1), ring.var(0).add(&l));
        assert!(e.tensor_line(&ring.var(1)).is_err());
    }

    #[test]
    fn quotient_roundtrip() {
        let ring = PolyRing::new(vec![1, 2, 1], 5);
        let s = ChernVector::new(ring.clone(), vec![ring.var(0), ring.var(1)]).unwrap();
        let q = ChernVector::line(ring.clone(), ring.var(2)).unwrap();
        let f = s.whitney_sum(&q);
        assert_eq!(f.whitney_quotient(&s).unwrap(), q);
        let triv = ChernVector::trivial(ring.clone(), 1);
        let padded = s.whitney_sum(&triv);
        assert_eq!(padded.whitney_quotient(&triv).unwrap(), s);
        assert!(s.whitney_quotient(&f).is_err());
        // degree-one part is c_1(F) - c_1(S)
        assert_eq!(
            f.whitney_quotient(&s).unwrap().class(1),
            f.class(1).sub(&s.class(1))
        );
    }

    #[test]
    fn quotient_detects_non_subbundle() {
        let ring = PolyRing::new(vec![1, 1], 4);
        let f = ChernVector::new(ring.clone(), vec![ring.zero(), ring.zero()]).unwrap();
        let s = ChernVector::line(ring.clone(), ring.var(0)).unwrap();
        assert!(matches!(f.whitney_quotient(&s), Err(Error::Rank(_))));
    }

    #[test]
    fn segre_examples() {
        let e = formal(2, 4);
        let ring = e.ring().clone();
        let s = e.segre(3);
        assert_eq!(s[0], ring.one());
        assert_eq!(s[1], ring.var(0).neg());
        assert_eq!(s[2], ring.mul(&ring.var(0), &ring.var(0)).sub(&ring.var(1)));
        let trivial = ChernVector::trivial(ring.clone(), 3).segre(3);
        assert_eq!(
            trivial,
            vec![ring.one(), Poly::zero(2), Poly::zero(2), Poly::zero(2)]
        );
    }

    #[test]
    fn sym_power_of_trivial_rank() {
        let ring = PolyRing::chern(1, 3);
        let empty = ChernVector::trivial(ring.clone(), 0);
        assert_eq!(empty.sym_power(0).rank(), 1);
        assert_eq!(empty.sym_power(2).rank(), 0);
    }
}
