//! Workloads shared by the benchmarks in `benches/`.

use enumgeom::recipes::{conics_on_quintic_type, lines_on_complete_intersection};
use enumgeom::schubert::Strategy;
use enumgeom::{BigInt, GrassCtx, SchubertCycle};

pub fn quintic_lines() -> BigInt {
    lines_on_complete_intersection(4, &[5])
        .unwrap()
        .count()
        .cloned()
        .unwrap()
}

pub fn quintic_conics() -> BigInt {
    conics_on_quintic_type(5).unwrap().count().cloned().unwrap()
}

/// Sum of `σ_λ · σ_μ` over all pairs of basis classes of `G(k,n)`.
pub fn all_products(k: usize, n: usize, strategy: Strategy) -> SchubertCycle {
    let ctx = GrassCtx::new(k, n).unwrap();
    let basis: Vec<SchubertCycle> = ctx
        .basis()
        .into_iter()
        .map(|l| SchubertCycle::class(ctx, l).unwrap())
        .collect();
    let mut acc = SchubertCycle::zero(ctx);
    for a in &basis {
        for b in &basis {
            acc = acc + a.multiply_with(b, strategy).unwrap();
        }
    }
    acc
}

/// `∫ σ_1^{dim}` on `G(k,n)`: the degree of the Plücker embedding.
pub fn plucker_degree(k: usize, n: usize) -> BigInt {
    let ctx = GrassCtx::new(k, n).unwrap();
    SchubertCycle::special(ctx, 1)
        .pow(ctx.dim() as u32)
        .integrate()
}
