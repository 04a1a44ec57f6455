//! Evaluates parsed queries against the intersection engine.

use std::fmt;

use enumgeom::chern::tautological_bundle;
use enumgeom::{
    BigInt, ChernVector, GradedRing, GrassCtx, Integrable, Partition, ProjBundleRing,
    SchubertCycle, Tautological,
};
use num_traits::ToPrimitive;

use crate::syntax::{Bundle, Context, Expr, Query};

/// A semantic error: the query parsed but cannot be evaluated.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EvalError(pub String);

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "semantic error: {}", self.0)
    }
}

impl std::error::Error for EvalError {}

impl From<enumgeom::Error> for EvalError {
    fn from(e: enumgeom::Error) -> Self {
        EvalError(e.to_string())
    }
}

type Result<T> = std::result::Result<T, EvalError>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Value {
    Integer(BigInt),
    /// A class, already rendered.
    Cycle(String),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Integer(_) => "integer",
            Value::Cycle(_) => "cycle",
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Integer(n) => write!(f, "{n}"),
            Value::Cycle(s) => f.write_str(s),
        }
    }
}

/// Rings a query can be evaluated in.
trait Space: Integrable
where
    Self::Elem: fmt::Display,
{
    fn sigma(&self, parts: &[u32]) -> Result<Self::Elem>;
    fn zeta(&self) -> Result<Self::Elem>;
    fn tautological(&self, which: Tautological) -> Result<ChernVector<Self>>;
    /// `c_1(O(1))`.
    fn hyperplane(&self) -> Self::Elem;
}

fn partition(parts: &[u32]) -> Result<Partition> {
    Partition::new(parts.to_vec()).map_err(EvalError::from)
}

impl Space for GrassCtx {
    fn sigma(&self, parts: &[u32]) -> Result<SchubertCycle> {
        let lambda = partition(parts)?;
        if !self.fits(&lambda) {
            return Err(EvalError(format!(
                "sigma[{}] does not fit in the {}x{} box of {self}",
                join(parts),
                self.rows(),
                self.cols()
            )));
        }
        Ok(SchubertCycle::class(*self, lambda)?)
    }

    fn zeta(&self) -> Result<SchubertCycle> {
        Err(EvalError(format!(
            "zeta is only defined on a projective bundle, not on {self}"
        )))
    }

    fn tautological(&self, which: Tautological) -> Result<ChernVector<GrassCtx>> {
        Ok(tautological_bundle(*self, which)?)
    }

    fn hyperplane(&self) -> SchubertCycle {
        SchubertCycle::special(*self, 1)
    }
}

impl Space for ProjBundleRing {
    fn sigma(&self, parts: &[u32]) -> Result<Self::Elem> {
        let base = self.base().sigma(parts)?;
        Ok(self.pullback(&base)?)
    }

    fn zeta(&self) -> Result<Self::Elem> {
        Ok(ProjBundleRing::zeta(self))
    }

    fn tautological(&self, which: Tautological) -> Result<ChernVector<Self>> {
        let base = tautological_bundle(self.base(), which)?;
        Ok(base.map_ring(self.clone(), |c| self.pullback(c).expect("same base")))
    }

    fn hyperplane(&self) -> Self::Elem {
        ProjBundleRing::zeta(self)
    }
}

fn join(parts: &[u32]) -> String {
    parts
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

enum Val<E> {
    Int(BigInt),
    Class(E),
}

fn bundle<R: Space>(ring: &R, b: &Bundle) -> Result<ChernVector<R>>
where
    R::Elem: fmt::Display,
{
    Ok(match b {
        Bundle::Sub => ring.tautological(Tautological::Sub)?,
        Bundle::SubDual => ring.tautological(Tautological::SubDual)?,
        Bundle::Quotient => ring.tautological(Tautological::Quotient)?,
        Bundle::Line(a) => ChernVector::line(
            ring.clone(),
            ring.scale(&ring.hyperplane(), &BigInt::from(*a)),
        )?,
        Bundle::Sym(m, inner) => bundle(ring, inner)?.sym_power(*m as usize),
        Bundle::Dual(inner) => bundle(ring, inner)?.dual(),
        Bundle::Twist(inner, a) => {
            let l = ring.scale(&ring.hyperplane(), &BigInt::from(*a));
            bundle(ring, inner)?.tensor_line(&l)?
        }
        Bundle::Sum(a, b) => bundle(ring, a)?.whitney_sum(&bundle(ring, b)?),
        Bundle::Quot(a, b) => bundle(ring, a)?.whitney_quotient(&bundle(ring, b)?)?,
    })
}

fn promote<R: Space>(ring: &R, v: Val<R::Elem>) -> R::Elem
where
    R::Elem: fmt::Display,
{
    match v {
        Val::Int(n) => ring.constant(&n),
        Val::Class(c) => c,
    }
}

fn eval<R: Space>(ring: &R, e: &Expr) -> Result<Val<R::Elem>>
where
    R::Elem: fmt::Display,
{
    Ok(match e {
        Expr::Int(n) => Val::Int(n.clone()),
        Expr::Sigma(parts) => Val::Class(ring.sigma(parts)?),
        Expr::Zeta => Val::Class(ring.zeta()?),
        Expr::Chern(i, b) => Val::Class(bundle(ring, b)?.class(*i as usize)),
        Expr::Integrate(inner) => {
            let v = eval(ring, inner)?;
            let c = promote(ring, v);
            Val::Int(ring.integrate(&c))
        }
        Expr::Neg(inner) => match eval(ring, inner)? {
            Val::Int(n) => Val::Int(-n),
            Val::Class(c) => Val::Class(ring.neg(&c)),
        },
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
            let (x, y) = (eval(ring, a)?, eval(ring, b)?);
            match (x, y, e) {
                (Val::Int(x), Val::Int(y), Expr::Add(..)) => Val::Int(x + y),
                (Val::Int(x), Val::Int(y), Expr::Sub(..)) => Val::Int(x - y),
                (Val::Int(x), Val::Int(y), _) => Val::Int(x * y),
                (x, y, op) => {
                    let (x, y) = (promote(ring, x), promote(ring, y));
                    Val::Class(match op {
                        Expr::Add(..) => ring.add(&x, &y),
                        Expr::Sub(..) => ring.sub(&x, &y),
                        _ => ring.mul(&x, &y),
                    })
                }
            }
        }
        Expr::Pow(_, k) if *k > MAX_EXPONENT => {
            return Err(EvalError(format!("exponent {k} exceeds {MAX_EXPONENT}")));
        }
        Expr::Pow(base, k) => match eval(ring, base)? {
            Val::Int(n) => Val::Int(num_traits::pow(n, *k as usize)),
            Val::Class(c) => {
                if *k as usize > ring.top_degree()
                    && ring.degree_range(&c).is_some_and(|(lo, _)| lo > 0)
                {
                    Val::Class(ring.zero())
                } else {
                    Val::Class(pow_by_squaring(ring, c, *k))
                }
            }
        },
    })
}

const MAX_EXPONENT: u32 = 10_000;

fn pow_by_squaring<R: GradedRing>(ring: &R, mut base: R::Elem, mut k: u32) -> R::Elem {
    let mut acc = ring.one();
    while k > 0 {
        if k & 1 == 1 {
            acc = ring.mul(&acc, &base);
        }
        k >>= 1;
        if k > 0 {
            base = ring.mul(&base, &base);
        }
    }
    acc
}

fn finish<R: Space>(ring: &R, e: &Expr) -> Result<Value>
where
    R::Elem: fmt::Display,
{
    Ok(match eval(ring, e)? {
        Val::Int(n) => Value::Integer(n),
        Val::Class(c) => Value::Cycle(c.to_string()),
    })
}

fn grass(k: usize, n: usize) -> Result<GrassCtx> {
    GrassCtx::new(k, n).map_err(EvalError::from)
}

/// Evaluates a query. Without a context the expression is evaluated on a
/// point, where only integers make sense.
pub fn evaluate(query: &Query) -> Result<Value> {
    match &query.context {
        None => finish(&GrassCtx::point(), &query.expr)
            .map_err(|e| EvalError(format!("{} (add a context such as `in G(2,5)`)", e.0))),
        Some(Context::Grass { k, n }) => finish(&grass(*k, *n)?, &query.expr),
        Some(Context::Proj { bundle: b, k, n }) => {
            let space = projective_bundle(b, *k, *n)?;
            finish(&space, &query.expr)
        }
    }
}

/// `P(E)` over `G(k,n)` for a bundle expression `E`.
pub fn projective_bundle(b: &Bundle, k: usize, n: usize) -> Result<ProjBundleRing> {
    let base = grass(k, n)?;
    let e = bundle(&base, b)?;
    if e.rank() == 0 {
        return Err(EvalError(format!("P({b}) is empty: {b} has rank 0")));
    }
    Ok(ProjBundleRing::new(&e)?)
}

/// Evaluates an expression to a class of a Grassmannian, for commands that
/// take raw Chern and Segre data.
pub fn grass_class(expr: &Expr, ctx: GrassCtx) -> Result<SchubertCycle> {
    let v = eval(&ctx, expr)?;
    Ok(promote(&ctx, v))
}

/// Exact integer for small values, for callers that need machine integers.
pub fn as_i64(v: &Value) -> Option<i64> {
    match v {
        Value::Integer(n) => n.to_i64(),
        Value::Cycle(_) => None,
    }
}
