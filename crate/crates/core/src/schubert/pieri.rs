use num_bigint::BigInt;
use num_traits::One;

use super::{GrassCtx, Partition, SchubertCycle};
use crate::error::Result;

/// `σ_λ · σ_a`: the sum of `σ_μ` over all `μ` in the box such that `μ/λ` is
/// a horizontal strip of size `a`.
pub fn pieri(lambda: &Partition, a: u32, ctx: GrassCtx) -> Result<SchubertCycle> {
    ctx.check(lambda)?;
    let mut out = SchubertCycle::zero(ctx);
    for mu in pieri_partitions(lambda, a, ctx.rows(), ctx.cols()) {
        out.add_term(mu, BigInt::one());
    }
    Ok(out)
}

/// Partitions `μ ⊇ λ` inside `rows × cols` with `μ/λ` a horizontal strip of
/// `a` boxes: `μ_1 ≥ λ_1 ≥ μ_2 ≥ λ_2 ≥ …`.
pub fn pieri_partitions(lambda: &Partition, a: u32, rows: usize, cols: u32) -> Vec<Partition> {
    fn go(
        i: usize,
        rem: u32,
        lambda: &Partition,
        rows: usize,
        cols: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if i == rows {
            if rem == 0 {
                out.push(Partition::from_raw(cur.clone()));
            }
            return;
        }
        let lo = lambda.part(i);
        let hi = if i == 0 { cols } else { lambda.part(i - 1) };
        // the rows below can absorb at most λ_{i} - λ_{i+1} + ... = λ_i boxes
        let below_cap = lambda.part(i);
        for mu_i in lo..=hi.min(lo + rem) {
            let used = mu_i - lo;
            if rem - used > below_cap {
                continue;
            }
            cur.push(mu_i);
            go(i + 1, rem - used, lambda, rows, cols, cur, out);
            cur.pop();
        }
    }
    if !lambda.fits(rows, cols) || a > cols {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(
        0,
        a,
        lambda,
        rows,
        cols,
        &mut Vec::with_capacity(rows),
        &mut out,
    );
    out
}

/// Partitions `μ ⊇ λ` inside `rows × cols` with `μ/λ` a vertical strip of
/// `a` boxes (the dual Pieri rule for `σ_{1^a}`).
pub fn vertical_pieri_partitions(
    lambda: &Partition,
    a: usize,
    rows: usize,
    cols: u32,
) -> Vec<Partition> {
    fn go(
        i: usize,
        rem: usize,
        lambda: &Partition,
        rows: usize,
        cols: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if rem > rows - i {
            return;
        }
        if i == rows {
            out.push(Partition::from_raw(cur.clone()));
            return;
        }
        let base = lambda.part(i);
        let prev = if i == 0 { cols } else { cur[i - 1] };
        if base <= prev {
            cur.push(base);
            go(i + 1, rem, lambda, rows, cols, cur, out);
            cur.pop();
        }
        if rem > 0 && base < prev {
            cur.push(base + 1);
            go(i + 1, rem - 1, lambda, rows, cols, cur, out);
            cur.pop();
        }
    }
    if !lambda.fits(rows, cols) || a > rows {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(
        0,
        a,
        lambda,
        rows,
        cols,
        &mut Vec::with_capacity(rows),
        &mut out,
    );
    out
}
