use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ring::GradedRing;

/// Exponent vector of a monomial. Keys compare lexicographically with the
/// first variable most significant, so the last key of a map is the lex
/// leading monomial.
pub type Monomial = Vec<u32>;

/// A polynomial with integer coefficients in a fixed number of variables.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c.into());
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    /// The variable with index `i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, BigInt::one())
    }

    pub fn monomial(exps: Monomial, c: BigInt) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Lex leading term.
    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, exps: Monomial, c: BigInt) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Product, keeping only monomials accepted by `keep`.
    pub fn mul_filtered(&self, other: &Poly, keep: impl Fn(&[u32]) -> bool) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Poly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m: Monomial = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                if keep(&m) {
                    out.add_term(m, ca * cb);
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.mul_filtered(other, |_| true)
    }

    /// Weighted degree of a monomial.
    pub fn weighted_degree(exps: &[u32], weights: &[u32]) -> usize {
        exps.iter()
            .zip(weights)
            .map(|(&e, &w)| (e as usize) * (w as usize))
            .sum()
    }

    /// Keeps the monomials accepted by `keep`.
    pub fn filter(&self, keep: impl Fn(&[u32]) -> bool) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Evaluates at integer values of the variables.
    pub fn eval(&self, values: &[BigInt]) -> BigInt {
        assert_eq!(values.len(), self.nvars);
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in values.iter().zip(m) {
                t *= num_traits::pow(v.clone(), e as usize);
            }
            total += t;
        }
        total
    }

    /// Whether `self` is unchanged by swapping every adjacent pair of
    /// variables.
    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| {
            let swapped: BTreeMap<_, _> = self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m = m.clone();
                    m.swap(i, i + 1);
                    (m, c.clone())
                })
                .collect();
            swapped == self.terms
        })
    }

    /// Renders with the given variable names, e.g. `2·c1^2 - c2`.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, names }
    }
}

struct PolyDisplay<'a> {
    poly: &'a Poly,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.poly.terms.iter().rev().enumerate() {
            let mono: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(j, &e)| {
                    if e == 1 {
                        self.names[j].clone()
                    } else {
                        format!("{}^{}", self.names[j], e)
                    }
                })
                .collect();
            let basis = if mono.is_empty() {
                None
            } else {
                Some(mono.join("·"))
            };
            crate::schubert::write_term(f, i == 0, c, basis.as_deref())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        let shown = self.display_with(&names).to_string();
        f.write_str(&shown)
    }
}

/// `Z[x_1..x_m]` graded by per-variable weights and truncated above `top`.
///
/// With weights `1..=r` this is the ring of universal Chern polynomials in
/// formal classes `c_1..c_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    weights: Vec<u32>,
    top: usize,
}

impl PolyRing {
    pub fn new(weights: Vec<u32>, top: usize) -> Self {
        PolyRing { weights, top }
    }

    /// `Z[c_1..c_r]` with `deg c_i = i`.
    pub fn chern(r: usize, top: usize) -> Self {
        Self::new((1..=r as u32).collect(), top)
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn var(&self, i: usize) -> Poly {
        Poly::var(self.nvars(), i)
    }

    pub fn degree(&self, exps: &[u32]) -> usize {
        Poly::weighted_degree(exps, &self.weights)
    }
}

impl GradedRing for PolyRing {
    type Elem = Poly;

    fn zero(&self) -> Poly {
        Poly::zero(self.nvars())
    }

    fn one(&self) -> Poly {
        Poly::one(self.nvars())
    }

    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a.add(b)
    }

    fn neg(&self, a: &Poly) -> Poly {
        a.neg()
    }

    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        a.mul_filtered(b, |m| self.degree(m) <= self.top)
    }

    fn scale(&self, a: &Poly, c: &BigInt) -> Poly {
        a.scale(c)
    }

    fn is_zero(&self, a: &Poly) -> bool {
        a.is_zero()
    }

    fn top_degree(&self) -> usize {
        self.top
    }

    fn homogeneous_part(&self, a: &Poly, d: usize) -> Poly {
        a.filter(|m| self.degree(m) == d)
    }

    fn truncate(&self, a: &Poly, d: usize) -> Poly {
        a.filter(|m| self.degree(m) <= d)
    }

    fn degree_range(&self, a: &Poly) -> Option<(usize, usize)> {
        let mut it = a.terms().map(|(m, _)| self.degree(m));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), d| (lo.min(d), hi.max(d))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_eval() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let p = x.add(&y).mul(&x.sub(&y)); // x^2 - y^2
        assert_eq!(p.num_terms(), 2);
        assert_eq!(
            p.eval(&[BigInt::from(5), BigInt::from(3)]),
            BigInt::from(16)
        );
        assert!(!p.is_symmetric());
        assert!(x.mul(&y).add(&x).add(&y).is_symmetric());
    }

    #[test]
    fn ring_truncates() {
        let ring = PolyRing::chern(2, 3);
        let c1 = ring.var(0);
        assert!(ring.is_zero(&ring.pow(&c1, 4)));
        assert_eq!(ring.degree_range(&ring.pow(&c1, 3)), Some((3, 3)));
        let c2 = ring.var(1);
        assert!(ring.is_zero(&ring.mul(&c2, &c2)));
    }

    #[test]
    fn display() {
        let names = vec!["c1".to_string(), "c2".to_string()];
        let c1 = Poly::var(2, 0);
        let c2 = Poly::var(2, 1);
        let p = c1.mul(&c1).sub(&c2.scale(&BigInt::from(2)));
        assert_eq!(p.display_with(&names).to_string(), "c1^2 - 2·c2");
    }
}
