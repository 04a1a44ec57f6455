//! Symmetric-function reduction and universal Chern polynomials of
//! symmetric powers.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::binomial;

use super::poly::{Monomial, Poly};
use super::ring::GradedRing;
use crate::error::{Error, Result};

/// An integer polynomial in formal Chern classes `c_1..c_r` (equivalently
/// elementary symmetric functions `e_1..e_r` of formal roots), graded by
/// `deg c_i = i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UniversalPoly(Poly);

impl UniversalPoly {
    pub fn new(poly: Poly) -> Self {
        UniversalPoly(poly)
    }

    /// The formal class `c_i` (1-based) among `c_1..c_r`.
    pub fn class(r: usize, i: usize) -> Self {
        UniversalPoly(Poly::var(r, i - 1))
    }

    pub fn poly(&self) -> &Poly {
        &self.0
    }

    pub fn into_poly(self) -> Poly {
        self.0
    }

    /// Number of formal classes.
    pub fn rank(&self) -> usize {
        self.0.nvars()
    }

    /// Replaces `c_i` by `classes[i-1]` and evaluates in `ring`. Monomials of
    /// weighted degree above the ring's top degree are skipped.
    pub fn substitute<R: GradedRing>(&self, ring: &R, classes: &[R::Elem]) -> R::Elem {
        assert_eq!(classes.len(), self.rank(), "wrong number of classes");
        let weights: Vec<u32> = (1..=self.rank() as u32).collect();
        let top = ring.top_degree();
        let mut powers: Vec<Vec<R::Elem>> = classes
            .iter()
            .map(|c| vec![ring.one(), c.clone()])
            .collect();
        let mut acc = ring.zero();
        for (m, coeff) in self.0.terms() {
            if Poly::weighted_degree(m, &weights) > top {
                continue;
            }
            let mut term = ring.constant(coeff);
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = ring.mul(powers[i].last().unwrap(), &classes[i]);
                    powers[i].push(next);
                }
                term = ring.mul(&term, &powers[i][e]);
                if ring.is_zero(&term) {
                    break;
                }
            }
            acc = ring.add(&acc, &term);
        }
        acc
    }

    /// Evaluates at integer values of `c_1..c_r`.
    pub fn eval(&self, values: &[BigInt]) -> BigInt {
        self.0.eval(values)
    }
}

/// Elementary symmetric polynomials `e_0..e_r` in `r` variables.
pub fn elementary_symmetric(r: usize) -> Vec<Poly> {
    let mut total = Poly::one(r);
    for i in 0..r {
        total = total.mul(&Poly::one(r).add(&Poly::var(r, i)));
    }
    (0..=r)
        .map(|d| total.filter(|m| m.iter().sum::<u32>() as usize == d))
        .collect()
}

/// Rewrites a symmetric polynomial in `x_1..x_r` as a polynomial in the
/// elementary symmetric functions `e_1..e_r`.
///
/// Repeatedly cancels the lex leading term `a·x^α` (where `α` must be weakly
/// decreasing) against `a·e_1^{α_1−α_2}⋯e_r^{α_r}`.
pub fn reduce_symmetric(p: &Poly) -> Result<UniversalPoly> {
    let r = p.nvars();
    let e = elementary_symmetric(r);
    let mut cache: HashMap<Monomial, Poly> = HashMap::new();
    cache.insert(vec![0; r], Poly::one(r));
    let mut rest = p.clone();
    let mut out = Poly::zero(r);
    while let Some((alpha, coeff)) = rest.leading() {
        if alpha.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSymmetric);
        }
        let beta: Monomial = (0..r)
            .map(|i| alpha[i] - alpha.get(i + 1).copied().unwrap_or(0))
            .collect();
        let coeff = coeff.clone();
        let image = e_power(&beta, &e, &mut cache);
        rest = rest.sub(&image.scale(&coeff));
        out.add_term(beta, coeff);
    }
    Ok(UniversalPoly(out))
}

fn e_power(beta: &Monomial, e: &[Poly], cache: &mut HashMap<Monomial, Poly>) -> Poly {
    if let Some(hit) = cache.get(beta) {
        return hit.clone();
    }
    let i = beta.iter().position(|&b| b > 0).expect("nonzero exponent");
    let mut smaller = beta.clone();
    smaller[i] -= 1;
    let value = e_power(&smaller, e, cache).mul(&e[i + 1]);
    cache.insert(beta.clone(), value.clone());
    value
}

/// Rank of `Sym^m` of a rank-`r` bundle: `binom(m+r−1, r−1)`.
pub fn sym_rank(r: usize, m: usize) -> usize {
    if r == 0 {
        return usize::from(m == 0);
    }
    binomial(m + r - 1, r - 1)
}

/// Exponent vectors `a` with `a_j ≥ 0` and `Σ a_j = m`: the Chern roots
/// `Σ a_j x_j` of `Sym^m E`.
pub fn sym_roots(r: usize, m: usize) -> Vec<Vec<u32>> {
    fn go(i: usize, r: usize, rem: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == r {
            cur.push(rem);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for a in (0..=rem).rev() {
            cur.push(a);
            go(i + 1, r, rem - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if r > 0 {
        go(0, r, m as u32, &mut Vec::new(), &mut out);
    }
    out
}

type SymCache = Mutex<HashMap<(usize, usize, usize), Arc<Vec<UniversalPoly>>>>;

fn sym_cache() -> &'static SymCache {
    static CACHE: OnceLock<SymCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Universal polynomials for `c_1..c_R` of `Sym^m E`, `E` of rank `r`.
pub fn universal_sym_chern(r: usize, m: usize) -> Arc<Vec<UniversalPoly>> {
    universal_sym_chern_upto(r, m, usize::MAX)
}

/// Like [`universal_sym_chern`] but only `c_1..c_D` with
/// `D = min(R, max_degree)`; the higher classes vanish in any ring whose top
/// degree is at most `max_degree`.
pub fn universal_sym_chern_upto(r: usize, m: usize, max_degree: usize) -> Arc<Vec<UniversalPoly>> {
    assert!(r >= 1, "rank must be positive");
    let rank = sym_rank(r, m);
    let d = rank.min(max_degree);
    let key = (r, m, d);
    if let Some(hit) = sym_cache().lock().unwrap().get(&key) {
        return Arc::clone(hit);
    }
    let computed = Arc::new(compute_sym_chern(r, m, d));
    sym_cache()
        .lock()
        .unwrap()
        .entry(key)
        .or_insert(computed)
        .clone()
}

fn compute_sym_chern(r: usize, m: usize, d: usize) -> Vec<UniversalPoly> {
    let total_degree = |mono: &[u32]| mono.iter().sum::<u32>() as usize;
    let mut total = Poly::one(r);
    for root in sym_roots(r, m) {
        let mut factor = Poly::one(r);
        for (j, &a) in root.iter().enumerate() {
            factor = factor.add(&Poly::var(r, j).scale(&BigInt::from(a)));
        }
        total = total.mul_filtered(&factor, |mono| total_degree(mono) <= d);
    }
    (1..=d)
        .map(|i| {
            let part = total.filter(|mono| total_degree(mono) == i);
            reduce_symmetric(&part).expect("elementary functions of a symmetric multiset")
        })
        .collect()
}

/// `binom(n, k)` as a `BigInt`, zero when `k > n`.
pub(crate) fn big_binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    binomial(BigInt::from(n), BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(r: usize) -> Vec<String> {
        (1..=r).map(|i| format!("c{i}")).collect()
    }

    fn show(u: &UniversalPoly) -> String {
        u.poly().display_with(&names(u.rank())).to_string()
    }

    #[test]
    fn reduce_examples() {
        let r = 3;
        let sum = (0..r).fold(Poly::zero(r), |acc, i| acc.add(&Poly::var(r, i)));
        assert_eq!(show(&reduce_symmetric(&sum).unwrap()), "c1");

        let x1 = Poly::var(2, 0);
        let x2 = Poly::var(2, 1);
        let squares = x1.mul(&x1).add(&x2.mul(&x2));
        assert_eq!(show(&reduce_symmetric(&squares).unwrap()), "c1^2 - 2·c2");

        assert_eq!(show(&reduce_symmetric(&Poly::constant(2, 7)).unwrap()), "7");
    }

    #[test]
    fn reduce_rejects_non_symmetric() {
        let x1 = Poly::var(2, 0);
        assert_eq!(reduce_symmetric(&x1), Err(Error::NotSymmetric));
        // leading term looks fine, the remainder does not
        let x2 = Poly::var(2, 1);
        let p = x1.mul(&x1).add(&x2.mul(&x2)).add(&x1);
        assert_eq!(reduce_symmetric(&p), Err(Error::NotSymmetric));
    }

    #[test]
    fn sym_power_examples() {
        for m in 0..6 {
            let u = universal_sym_chern(1, m);
            assert_eq!(u.len(), 1);
            let want = UniversalPoly::new(Poly::var(1, 0).scale(&BigInt::from(m)));
            assert_eq!(u[0], want);
        }
        let u = universal_sym_chern(2, 2);
        let shown: Vec<String> = u.iter().map(show).collect();
        assert_eq!(shown, vec!["3·c1", "2·c1^2 + 4·c2", "4·c1·c2"]);
        let u = universal_sym_chern(2, 1);
        assert_eq!(u[0], UniversalPoly::class(2, 1));
        assert_eq!(u[1], UniversalPoly::class(2, 2));
    }

    #[test]
    fn truncated_matches_full() {
        let full = universal_sym_chern(3, 3);
        let short = universal_sym_chern_upto(3, 3, 4);
        assert_eq!(short.len(), 4);
        assert_eq!(&full[..4], &short[..]);
    }

    #[test]
    fn ranks_and_roots() {
        assert_eq!(sym_rank(2, 5), 6);
        assert_eq!(sym_rank(3, 5), 21);
        assert_eq!(sym_rank(3, 0), 1);
        assert_eq!(sym_roots(3, 2).len(), 6);
        assert_eq!(big_binomial(5, 2), BigInt::from(10));
        assert_eq!(big_binomial(2, 5), BigInt::from(0));
    }
}
