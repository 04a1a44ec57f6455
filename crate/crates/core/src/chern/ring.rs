use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::One;

use crate::schubert::{GrassCtx, SchubertCycle};

/// A commutative graded ring with a top degree, above which everything
/// vanishes.
///
/// Implementations pair a ring "handle" (cheap to clone) with its element
/// type. Elements passed to a handle's methods must come from that ring;
/// mixing rings is a programming error and panics.
pub trait GradedRing: Clone + Debug {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, c: &BigInt) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Degree above which the ring is zero.
    fn top_degree(&self) -> usize;

    /// The degree-`d` component of `a`.
    fn homogeneous_part(&self, a: &Self::Elem, d: usize) -> Self::Elem;

    /// `a` with every component of degree above `d` removed.
    fn truncate(&self, a: &Self::Elem, d: usize) -> Self::Elem;

    /// `(lowest, highest)` degree present in `a`, `None` for zero.
    fn degree_range(&self, a: &Self::Elem) -> Option<(usize, usize)>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn constant(&self, c: &BigInt) -> Self::Elem {
        self.scale(&self.one(), c)
    }

    fn pow(&self, a: &Self::Elem, e: u32) -> Self::Elem {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Whether `a` is zero or homogeneous of degree `d`.
    fn is_homogeneous(&self, a: &Self::Elem, d: usize) -> bool {
        match self.degree_range(a) {
            None => true,
            Some((lo, hi)) => lo == d && hi == d,
        }
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items
            .into_iter()
            .fold(self.zero(), |acc, x| self.add(&acc, x))
    }
}

/// A graded ring with a degree map on its top-degree part.
pub trait Integrable: GradedRing {
    /// The degree of the zero-dimensional part of `a`; components in other
    /// degrees contribute nothing.
    fn integrate(&self, a: &Self::Elem) -> BigInt;
}

impl GradedRing for GrassCtx {
    type Elem = SchubertCycle;

    fn zero(&self) -> SchubertCycle {
        SchubertCycle::zero(*self)
    }

    fn one(&self) -> SchubertCycle {
        SchubertCycle::one(*self)
    }

    fn add(&self, a: &SchubertCycle, b: &SchubertCycle) -> SchubertCycle {
        a + b
    }

    fn neg(&self, a: &SchubertCycle) -> SchubertCycle {
        -a
    }

    fn mul(&self, a: &SchubertCycle, b: &SchubertCycle) -> SchubertCycle {
        a.multiply(b).expect("cycles from different Grassmannians")
    }

    fn scale(&self, a: &SchubertCycle, c: &BigInt) -> SchubertCycle {
        if c.is_one() {
            a.clone()
        } else {
            a.scale(c)
        }
    }

    fn is_zero(&self, a: &SchubertCycle) -> bool {
        a.is_zero()
    }

    fn top_degree(&self) -> usize {
        self.dim()
    }

    fn homogeneous_part(&self, a: &SchubertCycle, d: usize) -> SchubertCycle {
        a.homogeneous_part(d)
    }

    fn truncate(&self, a: &SchubertCycle, d: usize) -> SchubertCycle {
        a.truncate(d)
    }

    fn degree_range(&self, a: &SchubertCycle) -> Option<(usize, usize)> {
        a.degree_range()
    }
}

impl Integrable for GrassCtx {
    fn integrate(&self, a: &SchubertCycle) -> BigInt {
        a.integrate()
    }
}
