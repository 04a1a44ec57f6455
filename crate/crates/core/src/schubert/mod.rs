//! The Chow ring of the Grassmannian `G(k,n)` of `k`-dimensional subspaces
//! of an `n`-dimensional vector space.
//!
//! Elements are exact integer combinations of Schubert classes `σ_λ`, with
//! `λ` running over partitions in the `k × (n−k)` box. Products go through
//! the Giambelli determinant and repeated Pieri steps; a direct
//! Littlewood–Richardson count is available as an independent second route
//! (see [`Strategy`]).

mod lr;
mod partition;
mod pieri;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use lr::lr_coefficient;
pub use partition::{partitions_in_box, Partition};
pub use pieri::{pieri, pieri_partitions, vertical_pieri_partitions};

/// A Grassmannian `G(k,n)`.
///
/// `k = 0` and `k = n` are accepted and give a point (the ring is `Z`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GrassCtx {
    k: usize,
    n: usize,
}

impl GrassCtx {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if n == 0 || k > n {
            return Err(Error::InvalidContext { k, n });
        }
        Ok(GrassCtx { k, n })
    }

    /// A zero-dimensional Grassmannian, `G(0,1)`.
    pub fn point() -> Self {
        GrassCtx { k: 0, n: 1 }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of rows of the box (the rank of the tautological subbundle).
    pub fn rows(&self) -> usize {
        self.k
    }

    /// Number of columns of the box (the rank of the quotient bundle).
    pub fn cols(&self) -> u32 {
        (self.n - self.k) as u32
    }

    /// `k(n−k)`.
    pub fn dim(&self) -> usize {
        self.k * (self.n - self.k)
    }

    pub fn fits(&self, lambda: &Partition) -> bool {
        lambda.fits(self.rows(), self.cols())
    }

    pub fn check(&self, lambda: &Partition) -> Result<()> {
        if self.fits(lambda) {
            Ok(())
        } else {
            Err(Error::BoxViolation {
                partition: lambda.to_string(),
                k: self.k,
                n: self.n,
            })
        }
    }

    /// The full box, indexing the class of a point.
    pub fn point_class(&self) -> Partition {
        Partition::rectangle(self.rows(), self.cols())
    }

    /// Every partition in the box, grouped by increasing weight.
    pub fn basis(&self) -> Vec<Partition> {
        (0..=self.dim())
            .flat_map(|w| partitions_in_box(w, self.rows(), self.cols()))
            .collect()
    }
}

impl fmt::Display for GrassCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{})", self.k, self.n)
    }
}

/// `λ^c`, the complement of `λ` in the box, rotated by 180 degrees.
pub fn dual_partition(lambda: &Partition, ctx: GrassCtx) -> Result<Partition> {
    ctx.check(lambda)?;
    let k = ctx.rows();
    let parts = (0..k)
        .map(|i| ctx.cols() - lambda.part(k - 1 - i))
        .collect();
    Ok(Partition::from_raw(parts))
}

/// How a product of Schubert classes is expanded.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Strategy {
    /// Giambelli determinant in special classes followed by Pieri steps.
    #[default]
    Giambelli,
    /// Littlewood–Richardson tableau counts.
    LittlewoodRichardson,
}

/// A graded integer combination of Schubert classes in one Grassmannian.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SchubertCycle {
    ctx: GrassCtx,
    terms: BTreeMap<Partition, BigInt>,
}

impl SchubertCycle {
    pub fn zero(ctx: GrassCtx) -> Self {
        SchubertCycle {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: GrassCtx) -> Self {
        Self::constant(ctx, BigInt::one())
    }

    pub fn constant(ctx: GrassCtx, c: impl Into<BigInt>) -> Self {
        let mut out = Self::zero(ctx);
        out.add_term(Partition::empty(), c.into());
        out
    }

    /// The single class `σ_λ`.
    pub fn class(ctx: GrassCtx, lambda: Partition) -> Result<Self> {
        ctx.check(&lambda)?;
        let mut out = Self::zero(ctx);
        out.terms.insert(lambda, BigInt::one());
        Ok(out)
    }

    /// The special class `σ_a` (one row). Zero when `a > n−k`.
    pub fn special(ctx: GrassCtx, a: u32) -> Self {
        Self::class(ctx, Partition::row(a)).unwrap_or_else(|_| Self::zero(ctx))
    }

    /// Builds a cycle from `(λ, coefficient)` pairs; every `λ` must fit.
    pub fn from_terms<I, C>(ctx: GrassCtx, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero(ctx);
        for (lambda, c) in terms {
            ctx.check(&lambda)?;
            out.add_term(lambda, c.into());
        }
        Ok(out)
    }

    pub fn ctx(&self) -> GrassCtx {
        self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Smallest and largest codimension present, `None` for zero.
    pub fn degree_range(&self) -> Option<(usize, usize)> {
        let mut it = self.terms.keys().map(Partition::weight);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), w| (lo.min(w), hi.max(w))))
    }

    /// The codimension-`d` component.
    pub fn homogeneous_part(&self, d: usize) -> Self {
        self.filter(|l| l.weight() == d)
    }

    /// Drops every component of codimension above `d`.
    pub fn truncate(&self, d: usize) -> Self {
        self.filter(|l| l.weight() <= d)
    }

    fn filter(&self, keep: impl Fn(&Partition) -> bool) -> Self {
        SchubertCycle {
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| keep(l))
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    pub(crate) fn add_term(&mut self, lambda: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn same_ctx(&self, other: &Self) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch(format!(
                "{} vs {}",
                self.ctx, other.ctx
            )))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_ctx(other)?;
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.ctx);
        }
        SchubertCycle {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(l, v)| (l.clone(), v * c)).collect(),
        }
    }

    /// The Chow-ring product.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.multiply_with(other, Strategy::Giambelli)
    }

    pub fn multiply_with(&self, other: &Self, strategy: Strategy) -> Result<Self> {
        self.same_ctx(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ctx));
        }
        Ok(match strategy {
            Strategy::Giambelli => {
                // expand the side whose determinants are cheaper
                let (x, y) = if expansion_cost(self) <= expansion_cost(other) {
                    (self, other)
                } else {
                    (other, self)
                };
                let mut out = Self::zero(self.ctx);
                for (lambda, c) in &x.terms {
                    let part = giambelli_apply(lambda, y);
                    for (mu, v) in part.terms {
                        out.add_term(mu, v * c);
                    }
                }
                out
            }
            Strategy::LittlewoodRichardson => lr::multiply(self, other),
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.ctx);
        for _ in 0..e {
            acc = acc.multiply(self).expect("same context");
        }
        acc
    }

    /// Degree of the zero-dimensional part: the coefficient of the point class.
    /// Components of lower codimension contribute nothing.
    pub fn integrate(&self) -> BigInt {
        self.coefficient(&self.ctx.point_class())
    }
}

fn expansion_cost(x: &SchubertCycle) -> usize {
    x.terms
        .keys()
        .map(|l| 1usize << l.len().min(l.part(0) as usize))
        .sum()
}

/// `σ_λ · y`, with `σ_λ` expanded as a Giambelli determinant.
///
/// Uses the row form `det(σ_{λ_i+j−i})` or the column form
/// `det(σ_{1^{λ'_i+j−i}})`, whichever matrix is smaller. The determinant is
/// expanded along rows with the minors memoized by their column set; every
/// entry acts on the running cycle as a Pieri operator.
fn giambelli_apply(lambda: &Partition, y: &SchubertCycle) -> SchubertCycle {
    let ctx = y.ctx;
    if lambda.is_empty() {
        return y.clone();
    }
    let conj = lambda.conjugate();
    let (rows, vertical) = if conj.len() < lambda.len() {
        (conj.parts().to_vec(), true)
    } else {
        (lambda.parts().to_vec(), false)
    };
    let m = rows.len();
    let mut pieri_cache: HashMap<(Partition, u32), Vec<Partition>> = HashMap::new();
    let mut memo: HashMap<u32, BTreeMap<Partition, BigInt>> = HashMap::new();

    // f(i, avail): rows i.. of the matrix restricted to the column set `avail`
    fn f(
        i: usize,
        avail: u32,
        rows: &[u32],
        vertical: bool,
        y: &SchubertCycle,
        pieri_cache: &mut HashMap<(Partition, u32), Vec<Partition>>,
        memo: &mut HashMap<u32, BTreeMap<Partition, BigInt>>,
    ) -> BTreeMap<Partition, BigInt> {
        if i == rows.len() {
            return y.terms.clone();
        }
        if let Some(hit) = memo.get(&avail) {
            return hit.clone();
        }
        let ctx = y.ctx;
        let mut acc = SchubertCycle::zero(ctx);
        let mut pos = 0usize;
        for c in 0..rows.len() {
            if avail & (1 << c) == 0 {
                continue;
            }
            let sign_negative = pos % 2 == 1;
            pos += 1;
            let a = rows[i] as i64 + c as i64 - i as i64;
            if a < 0 {
                continue;
            }
            let limit = if vertical {
                ctx.rows() as i64
            } else {
                ctx.cols() as i64
            };
            if a > limit {
                continue;
            }
            let inner = f(
                i + 1,
                avail & !(1 << c),
                rows,
                vertical,
                y,
                pieri_cache,
                memo,
            );
            for (mu, v) in &inner {
                let targets = pieri_cache
                    .entry((mu.clone(), a as u32))
                    .or_insert_with(|| {
                        if vertical {
                            vertical_pieri_partitions(mu, a as usize, ctx.rows(), ctx.cols())
                        } else {
                            pieri_partitions(mu, a as u32, ctx.rows(), ctx.cols())
                        }
                    })
                    .clone();
                for nu in targets {
                    let val = if sign_negative { -v.clone() } else { v.clone() };
                    acc.add_term(nu, val);
                }
            }
        }
        memo.insert(avail, acc.terms.clone());
        acc.terms
    }

    let full = if m >= 32 { u32::MAX } else { (1u32 << m) - 1 };
    let terms = f(0, full, &rows, vertical, y, &mut pieri_cache, &mut memo);
    SchubertCycle { ctx, terms }
}

/// Which tautological bundle on `G(k,n)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Tautological {
    /// The rank-`k` subbundle `S`.
    Sub,
    /// Its dual `S*`.
    SubDual,
    /// The rank-`(n−k)` quotient `Q`.
    Quotient,
}

impl Tautological {
    pub fn rank(self, ctx: GrassCtx) -> usize {
        match self {
            Tautological::Sub | Tautological::SubDual => ctx.k(),
            Tautological::Quotient => ctx.n() - ctx.k(),
        }
    }
}

/// `c_i` of a tautological bundle: `c_i(S*) = σ_{1^i}`,
/// `c_i(S) = (−1)^i σ_{1^i}`, `c_i(Q) = σ_i`.
pub fn chern_tautological(ctx: GrassCtx, which: Tautological, i: usize) -> Result<SchubertCycle> {
    let rank = which.rank(ctx);
    if i > rank {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: rank,
        });
    }
    let cycle = match which {
        Tautological::SubDual => SchubertCycle::class(ctx, Partition::column(i))?,
        Tautological::Sub => {
            let c = SchubertCycle::class(ctx, Partition::column(i))?;
            if i % 2 == 1 {
                -c
            } else {
                c
            }
        }
        Tautological::Quotient => SchubertCycle::class(ctx, Partition::row(i as u32))?,
    };
    Ok(cycle)
}

impl Add for &SchubertCycle {
    type Output = SchubertCycle;
    fn add(self, rhs: &SchubertCycle) -> SchubertCycle {
        self.try_add(rhs)
            .expect("adding cycles from different Grassmannians")
    }
}

impl Add for SchubertCycle {
    type Output = SchubertCycle;
    fn add(self, rhs: SchubertCycle) -> SchubertCycle {
        &self + &rhs
    }
}

impl Neg for &SchubertCycle {
    type Output = SchubertCycle;
    fn neg(self) -> SchubertCycle {
        SchubertCycle {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(l, c)| (l.clone(), -c)).collect(),
        }
    }
}

impl Neg for SchubertCycle {
    type Output = SchubertCycle;
    fn neg(self) -> SchubertCycle {
        -&self
    }
}

impl Sub for &SchubertCycle {
    type Output = SchubertCycle;
    fn sub(self, rhs: &SchubertCycle) -> SchubertCycle {
        self + &(-rhs)
    }
}

impl Sub for SchubertCycle {
    type Output = SchubertCycle;
    fn sub(self, rhs: SchubertCycle) -> SchubertCycle {
        &self - &rhs
    }
}

impl fmt::Debug for SchubertCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.ctx)
    }
}

/// Renders as `a·sigma[λ] + …`, ordered by codimension and then with the
/// lexicographically larger partition first. Unit coefficients are omitted.
impl fmt::Display for SchubertCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| a.weight().cmp(&b.weight()).then(b.cmp(a)));
        for (i, (lambda, c)) in terms.into_iter().enumerate() {
            let basis = if lambda.is_empty() {
                None
            } else {
                Some(format!("sigma[{}]", join_parts(lambda)))
            };
            write_term(f, i == 0, c, basis.as_deref())?;
        }
        Ok(())
    }
}

pub(crate) fn join_parts(lambda: &Partition) -> String {
    lambda
        .parts()
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Writes one signed term of a sum; `basis = None` means the unit.
pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &BigInt,
    basis: Option<&str>,
) -> fmt::Result {
    let mag = c.abs();
    if first {
        if c.is_negative() {
            f.write_str("-")?;
        }
    } else if c.is_negative() {
        f.write_str(" - ")?;
    } else {
        f.write_str(" + ")?;
    }
    match basis {
        None => write!(f, "{mag}"),
        Some(b) if mag.is_one() => f.write_str(b),
        Some(b) => write!(f, "{mag}·{b}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn g(k: usize, n: usize) -> GrassCtx {
        GrassCtx::new(k, n).unwrap()
    }

    fn sigma(ctx: GrassCtx, parts: &[u32]) -> SchubertCycle {
        SchubertCycle::class(ctx, p(parts)).unwrap()
    }

    #[test]
    fn dual_partition_examples() {
        assert_eq!(dual_partition(&p(&[]), g(2, 4)).unwrap(), p(&[2, 2]));
        assert_eq!(dual_partition(&p(&[2]), g(2, 4)).unwrap(), p(&[2]));
        assert_eq!(dual_partition(&p(&[1]), g(2, 5)).unwrap(), p(&[3, 2]));
        assert!(matches!(
            dual_partition(&p(&[3]), g(2, 4)),
            Err(Error::BoxViolation { .. })
        ));
    }

    #[test]
    fn dual_is_involution() {
        let ctx = g(3, 7);
        for lambda in ctx.basis() {
            let d = dual_partition(&lambda, ctx).unwrap();
            assert_eq!(dual_partition(&d, ctx).unwrap(), lambda);
            assert_eq!(lambda.weight() + d.weight(), ctx.dim());
        }
    }

    #[test]
    fn rejects_bad_context_and_box() {
        assert!(GrassCtx::new(3, 2).is_err());
        assert!(GrassCtx::new(0, 0).is_err());
        assert!(SchubertCycle::class(g(2, 4), p(&[1, 1, 1])).is_err());
    }

    #[test]
    fn multiply_examples() {
        let ctx = g(2, 4);
        let one = SchubertCycle::one(ctx);
        let s21 = sigma(ctx, &[2, 1]);
        assert_eq!(s21.multiply(&one).unwrap(), s21);
        let s11 = sigma(ctx, &[1, 1]);
        assert_eq!(s11.multiply(&s11).unwrap(), sigma(ctx, &[2, 2]));
        let s1 = sigma(ctx, &[1]);
        assert_eq!(s1.pow(4), sigma(ctx, &[2, 2]).scale(&BigInt::from(2)));
        assert_eq!(
            s1.multiply(&s1).unwrap(),
            &sigma(ctx, &[2]) + &sigma(ctx, &[1, 1])
        );
    }

    #[test]
    fn mismatched_contexts() {
        let a = sigma(g(2, 4), &[1]);
        let b = sigma(g(2, 5), &[1]);
        assert!(matches!(a.multiply(&b), Err(Error::ContextMismatch(_))));
        assert!(a.try_add(&b).is_err());
    }

    #[test]
    fn integrate_examples() {
        assert_eq!(sigma(g(2, 4), &[2, 2]).integrate(), BigInt::from(1));
        assert_eq!(sigma(g(2, 4), &[1]).pow(4).integrate(), BigInt::from(2));
        assert_eq!(sigma(g(2, 5), &[1]).pow(6).integrate(), BigInt::from(5));
        // low-degree components integrate to zero
        assert_eq!(sigma(g(2, 5), &[1]).integrate(), BigInt::zero());
    }

    #[test]
    fn tautological_classes() {
        let ctx = g(2, 5);
        let sd = |i| chern_tautological(ctx, Tautological::SubDual, i).unwrap();
        assert_eq!(sd(1), sigma(ctx, &[1]));
        assert_eq!(sd(2), sigma(ctx, &[1, 1]));
        assert_eq!(sd(0), SchubertCycle::one(ctx));
        assert_eq!(
            chern_tautological(ctx, Tautological::Sub, 1).unwrap(),
            -sigma(ctx, &[1])
        );
        assert_eq!(
            chern_tautological(ctx, Tautological::Quotient, 3).unwrap(),
            sigma(ctx, &[3])
        );
        for which in [
            Tautological::Sub,
            Tautological::SubDual,
            Tautological::Quotient,
        ] {
            assert_eq!(
                chern_tautological(ctx, which, 0).unwrap(),
                SchubertCycle::one(ctx)
            );
        }
        assert!(matches!(
            chern_tautological(ctx, Tautological::Sub, 3),
            Err(Error::IndexOutOfRange { index: 3, max: 2 })
        ));
    }

    #[test]
    fn strategies_agree_on_full_basis() {
        for (k, n) in [(2, 5), (3, 6), (2, 6), (4, 7)] {
            let ctx = g(k, n);
            let basis = ctx.basis();
            for a in &basis {
                for b in &basis {
                    let x = SchubertCycle::class(ctx, a.clone()).unwrap();
                    let y = SchubertCycle::class(ctx, b.clone()).unwrap();
                    assert_eq!(
                        x.multiply_with(&y, Strategy::Giambelli).unwrap(),
                        x.multiply_with(&y, Strategy::LittlewoodRichardson).unwrap(),
                        "{a} * {b} in {ctx}"
                    );
                }
            }
        }
    }

    #[test]
    fn point_context() {
        let ctx = GrassCtx::point();
        assert_eq!(ctx.dim(), 0);
        let three = SchubertCycle::constant(ctx, 3);
        assert_eq!(three.integrate(), BigInt::from(3));
        assert!(SchubertCycle::special(ctx, 1).is_zero());
    }

    #[test]
    fn display_orders_by_codim_then_lex_descending() {
        let ctx = g(2, 4);
        let s1 = sigma(ctx, &[1]);
        assert_eq!(
            s1.multiply(&s1).unwrap().to_string(),
            "sigma[2] + sigma[1,1]"
        );
        let x = &(&SchubertCycle::constant(ctx, 3) - &sigma(ctx, &[1]).scale(&BigInt::from(2)))
            + &sigma(ctx, &[2, 2]);
        assert_eq!(x.to_string(), "3 - 2·sigma[1] + sigma[2,2]");
        assert_eq!(SchubertCycle::zero(ctx).to_string(), "0");
    }
}
